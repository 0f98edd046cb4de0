//! Drinfeld polynomials of highest weights and the classification of
//! finite-dimensional irreducible modules of the truncated Yangian.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::qdet::{evaluation_series, qdet_series, CenterSeries};
use super::yangian_rep::{highest_weight, WeightSeries, YangianRep};
use crate::exact_algebra::scalar::{qbig, qi};
use crate::exact_algebra::{Matrix, Scalar, UniPoly};
use crate::{Error, Result};

/// Monic P_1..P_{N-1} with lambda^i(u)/lambda^{i+1}(u) = P_i(u+1)/P_i(u), and
/// the central series rho(u).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DrinfeldData {
    pub polys: Vec<UniPoly>,
    pub rho: CenterSeries,
}

impl DrinfeldData {
    pub fn total_degree(&self) -> usize {
        self.polys.iter().map(|p| p.degree().unwrap_or(0)).sum()
    }
}

/// u^n lambda^i(u) as a polynomial in u.
fn homogenized(series: &[Scalar], n: usize) -> UniPoly {
    UniPoly::new((0..=n).map(|e| series.get(n - e).cloned().unwrap_or_else(Scalar::zero)).collect())
}

/// The unique monic P with a(u) P(u) = b(u) P(u+1), if any.
pub fn solve_ratio(a: &UniPoly, b: &UniPoly) -> Result<UniPoly> {
    let g = a.gcd(b);
    let (a, b) = (a.divrem(&g).0.monic(), b.divrem(&g).0.monic());
    if a.degree() != b.degree() {
        return Err(Error::NotClassifiable("ratio does not tend to 1".into()));
    }
    let d = a.degree().unwrap_or(0);
    if d == 0 {
        return Ok(UniPoly::constant(qi(1)));
    }
    // comparing u^{d+k-1} coefficients gives k = a_{d-1} - b_{d-1}
    let k = a.coeff(d - 1) - b.coeff(d - 1);
    if !k.is_integer() || k.is_negative() || k.is_zero() {
        return Err(Error::NotClassifiable(format!("ratio has degree shift {k}")));
    }
    let k = k.to_integer().to_usize().ok_or_else(|| Error::TooLarge("degree".into()))?;
    // unknowns c_0..c_{k-1}; P = u^k + sum c_e u^e
    let residual = |p: &UniPoly| a.mul(p).sub(&b.mul(&p.shift(&qi(1))));
    let lead = residual(&UniPoly::x().pow(k as u32));
    let rows = d + k;
    let cols: Vec<UniPoly> = (0..k).map(|e| residual(&UniPoly::x().pow(e as u32))).collect();
    let m = Matrix::<Scalar>::from_fn(rows, k, |r, c| cols[c].coeff(r));
    let rhs: Vec<Scalar> = (0..rows).map(|r| -lead.coeff(r)).collect();
    let c = m.solve(&rhs).ok_or_else(|| Error::NotClassifiable("no polynomial solves the ratio".into()))?;
    let mut coeffs = c;
    coeffs.push(qi(1));
    let p = UniPoly::new(coeffs);
    if !residual(&p).is_zero() {
        return Err(Error::NotClassifiable("no polynomial solves the ratio".into()));
    }
    Ok(p)
}

pub fn drinfeld_polynomials(w: &WeightSeries) -> Result<Vec<UniPoly>> {
    let n = w.coeffs.iter().map(Vec::len).max().unwrap_or(1).saturating_sub(1);
    let hom: Vec<UniPoly> = w.coeffs.iter().map(|s| homogenized(s, n)).collect();
    hom.windows(2).map(|pair| solve_ratio(&pair[0], &pair[1])).collect()
}

/// Drinfeld polynomials and q-det series of a highest-weight module.
pub fn drinfeld_data(rep: &YangianRep) -> Result<DrinfeldData> {
    Ok(DrinfeldData { polys: drinfeld_polynomials(&highest_weight(rep)?)?, rho: qdet_series(rep)? })
}

fn positive_divisors(n: &BigInt) -> Result<Vec<BigInt>> {
    let n = n.abs().to_u64().ok_or_else(|| Error::TooLarge("coefficient too large to factor".into()))?;
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            small.push(BigInt::from(d));
            if d * d != n {
                large.push(BigInt::from(n / d));
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    Ok(small)
}

/// All roots with multiplicity when p splits into rational linear factors.
pub fn rational_roots(p: &UniPoly) -> Result<Option<Vec<Scalar>>> {
    let mut p = p.clone();
    let mut roots = Vec::new();
    while p.degree().unwrap_or(0) > 0 && p.coeff(0).is_zero() {
        roots.push(Scalar::zero());
        p = p.divrem(&UniPoly::x()).0;
    }
    while p.degree().unwrap_or(0) > 0 {
        let lcm = p.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = p.coeffs().iter().map(|c| (c * qbig(lcm.clone())).to_integer()).collect();
        let mut found = None;
        'search: for num in positive_divisors(&ints[0])? {
            for den in positive_divisors(ints.last().unwrap())? {
                for cand in [qbig(num.clone()) / qbig(den.clone()), -qbig(num.clone()) / qbig(den.clone())] {
                    if p.eval(&cand).is_zero() {
                        found = Some(cand);
                        break 'search;
                    }
                }
            }
        }
        match found {
            Some(r) => {
                p = p.divrem(&UniPoly::linear(r.clone())).0;
                roots.push(r);
            }
            None => return Ok(None),
        }
    }
    Ok(Some(roots))
}

/// Evaluation-factor weights realizing prescribed Drinfeld polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Plan {
    /// Weights of the evaluation factors, in tensor order.
    pub factors: Vec<Vec<Scalar>>,
    /// How many of them are shifted fundamental weights.
    pub fundamental_count: usize,
    /// Shifts c of the extra one-dimensional factors (c, ..., c).
    pub scalar_shifts: Vec<Scalar>,
    /// Whether the scalar factors reproduce rho(u).
    pub center_matched: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Accepted(Plan),
    Rejected { degree: usize, bound: usize },
}

fn fundamental(n: usize, i: usize, root: &Scalar) -> Vec<Scalar> {
    (0..n).map(|k| if k < i { qi(1) - root } else { -root.clone() }).collect()
}

/// Splits g(u) into prod_t prod_{s<N} (u - s + c_t)/(u - s) with exactly
/// `count` factors, returning the c_t.
fn peel_scalar_factors(g: &CenterSeries, n: usize, count: usize) -> Result<Option<Vec<Scalar>>> {
    let base = (0..n).fold(UniPoly::constant(qi(1)), |acc, s| acc.mul(&UniPoly::linear(qi(s as i64))));
    let (q, r) = g.numerator().mul(&base.pow(count as u32)).divrem(g.denominator());
    if !r.is_zero() || q.degree() != Some(n * count) {
        return Ok(None);
    }
    let Some(mut roots) = rational_roots(&q)? else { return Ok(None) };
    let mut shifts = Vec::new();
    while let Some(top) = roots.iter().max().cloned() {
        // the string top, top-1, ..., top-N+1 comes from c = N - 1 - top
        for s in 0..n {
            let want = &top - qi(s as i64);
            match roots.iter().position(|x| *x == want) {
                Some(pos) => {
                    roots.swap_remove(pos);
                }
                None => return Ok(None),
            }
        }
        shifts.push(qi(n as i64 - 1) - top);
    }
    Ok(Some(shifts))
}

/// Accepts iff sum deg P_i <= p. The plan puts one shifted fundamental
/// evaluation factor omega_i - gamma per root gamma of P_i, then adds
/// one-dimensional factors so that q-det matches rho, using at most
/// p - m of them.
pub fn classify(data: &DrinfeldData, n: usize, p: usize) -> Result<Verdict> {
    if data.polys.len() + 1 != n {
        return Err(Error::ContextMismatch(format!("{} polynomials for gl({n})", data.polys.len())));
    }
    if let Some(bad) = data.polys.iter().find(|q| q.is_zero() || q.lead() != qi(1)) {
        return Err(Error::InvalidInput(format!("polynomial {bad} is not monic")));
    }
    let m = data.total_degree();
    if m > p {
        return Ok(Verdict::Rejected { degree: m, bound: p });
    }
    let mut factors = Vec::new();
    for (i, poly) in data.polys.iter().enumerate() {
        let roots = rational_roots(poly)?
            .ok_or_else(|| Error::NotClassifiable(format!("P_{} = {poly} has irrational roots", i + 1)))?;
        factors.extend(roots.iter().map(|g| fundamental(n, i + 1, g)));
    }
    let fundamental_count = factors.len();
    let rho_plan = factors.iter().fold(CenterSeries::one(), |acc, f| acc.mul(&evaluation_series(f)));
    let twist = data.rho.div(&rho_plan);
    let mut scalar_shifts = Vec::new();
    let mut center_matched = false;
    for count in 0..=p - m {
        if let Some(c) = peel_scalar_factors(&twist, n, count)? {
            scalar_shifts = c;
            center_matched = true;
            break;
        }
    }
    factors.extend(scalar_shifts.iter().map(|c| vec![c.clone(); n]));
    Ok(Verdict::Accepted(Plan { factors, fundamental_count, scalar_shifts, center_matched }))
}

/// Drinfeld data with rho(u) taken from the plan itself.
pub fn data_without_center(polys: Vec<UniPoly>) -> Result<DrinfeldData> {
    let n = polys.len() + 1;
    let mut rho = CenterSeries::one();
    for (i, poly) in polys.iter().enumerate() {
        let roots = rational_roots(poly)?
            .ok_or_else(|| Error::NotClassifiable(format!("P_{} = {poly} has irrational roots", i + 1)))?;
        for g in roots {
            rho = rho.mul(&evaluation_series(&fundamental(n, i + 1, &g)));
        }
    }
    Ok(DrinfeldData { polys, rho })
}
