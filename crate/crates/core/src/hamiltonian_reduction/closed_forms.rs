//! Printed closed forms for the constraint matrix and the W-brackets,
//! transcribed literally so they can be compared with the computed ones.

use num_traits::Zero;

use crate::exact_algebra::scalar::{q, qi, sign};
use crate::exact_algebra::{Ctx, Gen, Matrix, PolyW, Scalar};
use crate::glnp_basis::GlpBasis;
use crate::{Error, Result};

fn kd(x: usize, y: usize) -> Scalar {
    if x == y {
        qi(1)
    } else {
        qi(0)
    }
}

/// W^{ab}_j, zero outside 0 <= j < p.
fn w(ctx: &Ctx, a: usize, b: usize, j: i64) -> PolyW {
    if j < 0 || j as usize >= ctx.p {
        PolyW::zero()
    } else {
        PolyW::var(Gen::w(a, b, j as usize))
    }
}

/// (W_{j1} W_{j2} ...)^{ad} as a matrix product.
fn wprod(ctx: &Ctx, modes: &[i64], a: usize, d: usize) -> PolyW {
    let n = ctx.n;
    let mut row: Vec<PolyW> = (1..=n).map(|e| if e == a { PolyW::one() } else { PolyW::zero() }).collect();
    for &j in modes {
        row = (1..=n)
            .map(|col| {
                let mut acc = PolyW::zero();
                for (e, r) in row.iter().enumerate() {
                    if !r.is_zero() {
                        acc = &acc + &(r * &w(ctx, e + 1, col, j));
                    }
                }
                acc
            })
            .collect();
    }
    row[d - 1].clone()
}

/// {W^{ab}_0, W^{cd}_j} = (1/p)(delta^{bc} W^{ad}_j - delta^{ad} W^{cb}_j).
pub fn w0_bracket(ctx: &Ctx, a: usize, b: usize, c: usize, d: usize, j: usize) -> PolyW {
    let inv_p = q(1, ctx.p as i64);
    (&w(ctx, a, d, j as i64).scale(&kd(b, c)) - &w(ctx, c, b, j as i64).scale(&kd(a, d))).scale(&inv_p)
}

/// {W^{ab}_1, W^{cd}_j} in the closed form with prefactor 3/(p(p^2-1)).
pub fn pb1j(ctx: &Ctx, a: usize, b: usize, c: usize, d: usize, j: usize) -> Result<PolyW> {
    let p = ctx.p as i64;
    if p < 2 {
        return Err(Error::Degenerate("W_1 needs p >= 2".into()));
    }
    if j >= ctx.p {
        return Err(Error::OutOfRange(format!("W_{j} with p = {p}")));
    }
    let j = j as i64;
    let (dcb, dad) = (kd(c, b), kd(a, d));
    let wp = |modes: &[i64], x: usize, y: usize| wprod(ctx, modes, x, y);
    let mut out = PolyW::zero();

    let lead = q((j + 1) * (p * p - (j + 1) * (j + 1)), 2 * j + 3);
    let t1 = &wp(&[j + 1], a, d).scale(&dcb) - &wp(&[j + 1], c, b).scale(&dad);
    out.add_scaled(&t1, &lead);

    let t2 = &(&wp(&[0, j], a, d).scale(&dcb) - &wp(&[j, 0], c, b).scale(&dad))
        + &(&(&wp(&[j], c, b) * &wp(&[0], a, d)) - &(&wp(&[j], a, d) * &wp(&[0], c, b)));
    out.add_scaled(&t2, &qi(j));

    for s in 1..=j {
        let plus = qi(1) + q(j - s, 2 * s + 1);
        let minus = qi(1) - q(j - s, 2 * s + 1);
        let t3 = &wp(&[s, j - s], a, d).scale(&dcb) - &wp(&[j - s, s], c, b).scale(&dad);
        out.add_scaled(&t3, &plus);
        let t4 = &(&wp(&[j - s], a, d) * &wp(&[s], c, b)) - &(&wp(&[s], a, d) * &wp(&[j - s], c, b));
        out.add_scaled(&t4, &minus);
    }

    for s in 0..j {
        for t in (s + 1)..=j {
            let coef = -q(1, t * (2 * s + 1));
            let u = t - s - 1;
            let mut t5 = &wp(&[s, u, j - t], a, d).scale(&dcb) - &wp(&[j - t, u, s], c, b).scale(&dad);
            t5 = &t5 + &(&wp(&[j - t], a, d) * &wp(&[u, s], c, b));
            t5 = &t5 - &(&wp(&[s, u], a, d) * &wp(&[j - t], c, b));
            t5 = &t5 + &(&wp(&[u], a, d) * &wp(&[j - t, s], c, b));
            t5 = &t5 - &(&wp(&[s, j - t], a, d) * &wp(&[u], c, b));
            t5 = &t5 + &(&wp(&[s], a, d) * &wp(&[j - t, u], c, b));
            t5 = &t5 - &(&wp(&[u, j - t], a, d) * &wp(&[s], c, b));
            out.add_scaled(&t5, &coef);
        }
    }
    Ok(out.scale(&q(3, p * (p * p - 1))))
}

/// The loop-algebra bracket delta^{bc} W^{ad}_{j+l} - delta^{ad} W^{cb}_{j+l},
/// truncated at j + l >= p.
pub fn loop_bracket(ctx: &Ctx, a: usize, b: usize, j: usize, c: usize, d: usize, l: usize) -> PolyW {
    let s = (j + l) as i64;
    &w(ctx, a, d, s).scale(&kd(b, c)) - &w(ctx, c, b, s).scale(&kd(a, d))
}

/// Printed constraint matrix, rows and columns labelled like
/// `dirac::constraint_gens`.
pub fn printed_delta(ctx: &Ctx, basis: &GlpBasis, constraints: &[Gen]) -> Matrix<PolyW> {
    let k = constraints.len();
    Matrix::from_fn(k, k, |x, y| {
        let (g, h) = (&constraints[x], &constraints[y]);
        let (j, m, a, b) = (g.mode(), g.m as i64, g.ai(), g.bi());
        let (kk, l, c, d) = (h.mode(), h.m as i64, h.ai(), h.bi());
        let mut out = PolyW::zero();
        if j == kk && m + l + 1 == 0 {
            let jj = (j * (j + 1)) as i64;
            let cst = sign(m) * q(jj - m * (m + 1), 2) * basis.eta(j) / basis.eta(1);
            out = PolyW::constant(cst * kd(b, c) * kd(a, d));
        }
        let t = m + l;
        if t >= 0 && basis.in_range(t as usize, t) {
            let cg = basis.coeff(j, m, kk, l, t as usize, t);
            if !cg.is_zero() {
                let part = &w(ctx, a, d, t).scale(&kd(b, c))
                    - &w(ctx, c, b, t).scale(&(kd(a, d) * sign(j as i64 + m + kk as i64 + l)));
                out = &out + &part.scale(&cg);
            }
        }
        out
    })
}

/// Printed nilpotent part of the constraint matrix.
pub fn printed_delta_hat(ctx: &Ctx, basis: &GlpBasis, constraints: &[Gen]) -> Matrix<PolyW> {
    let k = constraints.len();
    Matrix::from_fn(k, k, |x, y| {
        let (g, h) = (&constraints[x], &constraints[y]);
        let (j, m, a, b) = (g.mode(), g.m as i64, g.ai(), g.bi());
        let (kk, l, c, d) = (h.mode(), h.m as i64, h.ai(), h.bi());
        let t = -m - 1 + l;
        if t < 0 || !basis.in_range(t as usize, t) || !basis.in_range(j, -m - 1) {
            return PolyW::zero();
        }
        let cg = basis.coeff(j, -m - 1, kk, l, t as usize, t);
        if cg.is_zero() {
            return PolyW::zero();
        }
        let jj = (j * (j + 1)) as i64;
        let pre = qi(2) * basis.eta(1) * cg / (basis.eta(j) * qi(jj - m * (m + 1)));
        let part = &w(ctx, b, d, t).scale(&(sign(m) * kd(a, c)))
            + &w(ctx, c, a, t).scale(&(sign(j as i64 + kk as i64 + l) * kd(b, d)));
        part.scale(&pre)
    })
}

/// Printed inverse of the constraint matrix, built from the printed hat
/// matrix by its nilpotent series.
pub fn printed_delta_bar(ctx: &Ctx, basis: &GlpBasis, constraints: &[Gen]) -> Matrix<PolyW> {
    let k = constraints.len();
    let hat = printed_delta_hat(ctx, basis, constraints);
    let mut series = Matrix::<PolyW>::zeros(k, k);
    let mut term = Matrix::<PolyW>::identity(k);
    while !term.is_zero() {
        series.add_assign(&term);
        term = term.dot(&hat);
    }
    let index: std::collections::HashMap<Gen, usize> = constraints.iter().enumerate().map(|(i, g)| (*g, i)).collect();
    Matrix::from_fn(k, k, |x, y| {
        let g = &constraints[x];
        let (j, m) = (g.mode(), g.m as i64);
        let partner = Gen::j(g.bi(), g.ai(), j, -m - 1);
        let jj = (j * (j + 1)) as i64;
        let pre = -sign(m) * q(jj - m * (m + 1), 2) * basis.eta(1) / basis.eta(j);
        series[(index[&partner], y)].scale(&pre)
    })
}

/// Outcome of comparing the printed constraint matrix with the computed one.
#[derive(Clone, Debug, PartialEq)]
pub struct DeltaComparison {
    /// r with computed constant part = r * printed constant part, if any.
    pub constant_ratio: Option<Scalar>,
    /// Printed W-linear part equals the computed one.
    pub linear_part_matches: bool,
    /// Printed hat matrix equals -D^{-1} R built from the printed Delta.
    pub hat_consistent: bool,
    /// Printed inverse times printed Delta is the identity.
    pub inverse_consistent: bool,
}

pub fn compare_delta(sys: &super::dirac::DiracSystem) -> DeltaComparison {
    let ctx = sys.ctx();
    let basis = sys.basis();
    let cons = sys.constraints();
    let printed = printed_delta(ctx, basis, cons);
    let pd0 = printed.map(|e| e.constant_term());
    let pr = printed.map(|e| e.filter(|m| !m.is_one()));
    let comp = sys.delta(&PolyW::one());
    let cd0 = comp.map(|e| e.constant_term());
    let cr = comp.map(|e| e.filter(|m| !m.is_one()));

    let mut ratio: Option<Scalar> = None;
    let mut ratio_ok = true;
    for ((pos, pv), (_, cv)) in pd0.entries().zip(cd0.entries()) {
        let _ = pos;
        match (pv.is_zero(), cv.is_zero()) {
            (true, true) => {}
            (false, false) => {
                let r = cv / pv;
                match &ratio {
                    None => ratio = Some(r),
                    Some(r0) if *r0 == r => {}
                    _ => ratio_ok = false,
                }
            }
            _ => ratio_ok = false,
        }
    }
    let hat_consistent = match pd0.inverse() {
        Ok(inv) => {
            let want = inv.map(|x| PolyW::constant(x.clone())).dot(&pr).neg();
            want == printed_delta_hat(ctx, basis, cons)
        }
        Err(_) => false,
    };
    let k = cons.len();
    let inverse_consistent = printed_delta_bar(ctx, basis, cons).dot(&printed) == Matrix::identity(k);
    DeltaComparison {
        inverse_consistent,
        constant_ratio: if ratio_ok { ratio } else { None },
        linear_part_matches: pr == cr,
        hat_consistent,
    }
}
