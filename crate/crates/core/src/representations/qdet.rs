//! Quantum determinant of a module and the central series it defines.

use num_traits::{One, Zero};

use super::yangian_rep::YangianRep;
use crate::exact_algebra::scalar::qi;
use crate::exact_algebra::{Matrix, Scalar, UniPoly};
use crate::{Error, Result};

/// A series 1 + sum_n d_n u^{-n} stored as the reduced ratio num(u)/den(u)
/// of monic polynomials of equal degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CenterSeries {
    num: UniPoly,
    den: UniPoly,
}

impl CenterSeries {
    pub fn one() -> CenterSeries {
        CenterSeries { num: UniPoly::constant(qi(1)), den: UniPoly::constant(qi(1)) }
    }

    pub fn new(num: UniPoly, den: UniPoly) -> Result<CenterSeries> {
        if num.is_zero() || den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.degree() != den.degree() || num.lead() != den.lead() {
            return Err(Error::InvalidInput("series must start with 1".into()));
        }
        let g = num.gcd(&den);
        Ok(CenterSeries { num: num.divrem(&g).0.monic(), den: den.divrem(&g).0.monic() })
    }

    /// The polynomial 1 + d_1/u + ... + d_r/u^r.
    pub fn from_coefficients(d: &[Scalar]) -> CenterSeries {
        let mut c: Vec<Scalar> = d.iter().rev().cloned().collect();
        c.push(qi(1));
        let r = d.len() as u32;
        CenterSeries::new(UniPoly::new(c), UniPoly::x().pow(r)).expect("monic of equal degree")
    }

    /// prod_k (u + a_k)/(u + b_k)
    pub fn from_linear_factors(tops: &[Scalar], bottoms: &[Scalar]) -> Result<CenterSeries> {
        let prod = |v: &[Scalar]| v.iter().fold(UniPoly::constant(qi(1)), |acc, a| acc.mul(&UniPoly::linear(-a.clone())));
        CenterSeries::new(prod(tops), prod(bottoms))
    }

    pub fn numerator(&self) -> &UniPoly {
        &self.num
    }

    pub fn denominator(&self) -> &UniPoly {
        &self.den
    }

    pub fn mul(&self, o: &CenterSeries) -> CenterSeries {
        CenterSeries::new(self.num.mul(&o.num), self.den.mul(&o.den)).expect("product of series")
    }

    pub fn div(&self, o: &CenterSeries) -> CenterSeries {
        CenterSeries::new(self.num.mul(&o.den), self.den.mul(&o.num)).expect("quotient of series")
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    /// d_1, ..., d_len of the expansion in u^{-1}.
    pub fn expansion(&self, len: usize) -> Vec<Scalar> {
        let deg = self.num.degree().unwrap_or(0);
        let rev = |p: &UniPoly, k: usize| if k <= deg { p.coeff(deg - k) } else { Scalar::zero() };
        // den(x) * out(x) = num(x) in x = 1/u, den(0) = 1
        let mut out = vec![Scalar::one()];
        for k in 1..=len {
            let mut c = rev(&self.num, k);
            for i in 1..=k.min(deg) {
                c -= rev(&self.den, i) * &out[k - i];
            }
            out.push(c);
        }
        out.split_off(1)
    }

    /// True when the series is a polynomial in u^{-1}.
    pub fn is_polynomial(&self) -> bool {
        self.den.coeffs().iter().rev().skip(1).all(Zero::is_zero)
    }
}

/// Q(u) = sum_sigma sgn(sigma) prod_k T~_{sigma(k) k}(u - k + 1) where
/// T~(u) = u^n T(u) is the polynomial normalization, n the stored support.
/// q-det T(u) = Q(u) / prod_k (u - k + 1)^n.
#[derive(Clone, Debug, PartialEq)]
pub struct Qdet {
    pub coeffs: Vec<Matrix<Scalar>>,
    pub support: usize,
    pub n: usize,
}

fn permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    if n == 0 {
        return vec![(Vec::new(), 1)];
    }
    let mut out = Vec::new();
    for (p, s) in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            // moving the new largest element left past (n-1-pos) entries
            let sign = if (n - 1 - pos).is_multiple_of(2) { s } else { -s };
            out.push((q, sign));
        }
    }
    out
}

type MatPoly = Vec<Matrix<Scalar>>;

fn matpoly_mul(a: &MatPoly, b: &MatPoly, dim: usize) -> MatPoly {
    let mut out = vec![Matrix::zeros(dim, dim); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j].add_assign(&x.dot(y));
            }
        }
    }
    out
}

/// sum_r T^{ij}_r (u - s)^{n - r} as a polynomial in u.
fn shifted_entry(rep: &YangianRep, i: usize, j: usize, s: i64) -> MatPoly {
    let n = rep.support_bound();
    let mut out = vec![Matrix::zeros(rep.dim, rep.dim); n + 1];
    for r in 0..=n {
        let t = rep.t(i, j, r);
        if t.is_zero() {
            continue;
        }
        let pw = UniPoly::linear(qi(s)).pow((n - r) as u32);
        for (e, c) in pw.coeffs().iter().enumerate() {
            out[e].add_assign(&t.scale(c));
        }
    }
    out
}

pub fn qdet(rep: &YangianRep) -> Qdet {
    let n = rep.n;
    let d = rep.dim;
    let entries: Vec<Vec<MatPoly>> = (0..n)
        .map(|k| (0..n).map(|row| shifted_entry(rep, row + 1, k + 1, k as i64)).collect())
        .collect();
    let mut total = vec![Matrix::zeros(d, d); n * rep.support_bound() + 1];
    for (perm, sign) in permutations(n) {
        let mut acc: MatPoly = vec![Matrix::identity(d)];
        for k in 0..n {
            acc = matpoly_mul(&acc, &entries[k][perm[k]], d);
        }
        for (e, m) in acc.iter().enumerate() {
            total[e].add_assign(&m.scale(&qi(sign)));
        }
    }
    Qdet { coeffs: total, support: rep.support_bound(), n }
}

impl Qdet {
    /// Every coefficient commutes with every generator of the module.
    pub fn is_central(&self, rep: &YangianRep) -> bool {
        self.coeffs
            .iter()
            .filter(|c| !c.is_zero())
            .all(|c| rep.generators().all(|g| c.commutator(g).expect("square").is_zero()))
    }

    /// The central series, provided every coefficient is a scalar matrix.
    pub fn series(&self) -> Result<CenterSeries> {
        let mut num = Vec::with_capacity(self.coeffs.len());
        for (e, c) in self.coeffs.iter().enumerate() {
            match c.is_scalar_multiple_of_identity() {
                Some(x) => num.push(x),
                None => return Err(Error::Degenerate(format!("q-det coefficient of u^{e} is not scalar"))),
            }
        }
        let den = (0..self.n).fold(UniPoly::constant(qi(1)), |acc, k| {
            acc.mul(&UniPoly::linear(qi(k as i64)).pow(self.support as u32))
        });
        CenterSeries::new(UniPoly::new(num), den)
    }
}

/// Central series of the module, failing if q-det is not scalar.
pub fn qdet_series(rep: &YangianRep) -> Result<CenterSeries> {
    qdet(rep).series()
}

/// q-det of the evaluation module with weight mu on its highest vector:
/// prod_k (u - k + 1 + mu_k)/(u - k + 1).
pub fn evaluation_series(weight: &[Scalar]) -> CenterSeries {
    let tops: Vec<Scalar> = weight.iter().enumerate().map(|(k, m)| m - qi(k as i64)).collect();
    let bottoms: Vec<Scalar> = (0..weight.len()).map(|k| -qi(k as i64)).collect();
    CenterSeries::from_linear_factors(&tops, &bottoms).expect("monic factors")
}

/// On a coproduct tensor product, d_n(A (x) B) = sum_{a+b=n} d_a(A) d_b(B)
/// for n <= len; this is the module-level form of Delta(D_r) in D_r (x) D_r.
pub fn coideal_holds(a: &YangianRep, b: &YangianRep, len: usize) -> Result<bool> {
    let ab = super::yangian_rep::tensor2(a, b)?;
    let (sa, sb, sab) = (qdet_series(a)?, qdet_series(b)?, qdet_series(&ab)?);
    let (da, db, dab) = (sa.expansion(len), sb.expansion(len), sab.expansion(len));
    let at = |v: &Vec<Scalar>, k: usize| if k == 0 { qi(1) } else { v[k - 1].clone() };
    Ok((1..=len).all(|n| {
        let conv = (0..=n).fold(Scalar::zero(), |acc, s| acc + at(&da, s) * at(&db, n - s));
        conv == dab[n - 1]
    }))
}

#[cfg(test)]
pub(crate) fn signed_permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    permutations(n)
}
