//! The generator families W-bar^+ and W-bar^- of W_p(N), their change of
//! basis, the truncation of the minus family and the identification of
//! W_p(N) with the truncated Yangian Y_p(N).

pub mod checks;

use crate::exact_algebra::scalar::sign;
use crate::exact_algebra::{Ctx, Gen, Matrix, PolyW, Scalar};
use crate::glnp_basis::GlpBasis;
use crate::hamiltonian_reduction::soldering::gauge_fixed_current;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BasisSign {
    Plus,
    Minus,
}

impl BasisSign {
    pub fn other(self) -> BasisSign {
        match self {
            BasisSign::Plus => BasisSign::Minus,
            BasisSign::Minus => BasisSign::Plus,
        }
    }

    pub fn as_i64(self) -> i64 {
        match self {
            BasisSign::Plus => 1,
            BasisSign::Minus => -1,
        }
    }
}

/// W-bar_j as N x N matrices of polynomials in the W_j, for j = 0..=j_max.
#[derive(Clone, Debug, PartialEq)]
pub struct WBarFamily {
    pub ctx: Ctx,
    pub sign: BasisSign,
    pub gens: Vec<Matrix<PolyW>>,
}

impl WBarFamily {
    pub fn j_max(&self) -> usize {
        self.gens.len() - 1
    }

    /// W-bar_j, or zero past the built range.
    pub fn get(&self, j: usize) -> Matrix<PolyW> {
        self.gens.get(j).cloned().unwrap_or_else(|| Matrix::zeros(self.ctx.n, self.ctx.n))
    }

    pub fn entry(&self, a: usize, b: usize, j: usize) -> PolyW {
        self.gens.get(j).map(|m| m[(a - 1, b - 1)].clone()).unwrap_or_default()
    }
}

/// Spectral parameter used while forming the quasideterminant.
pub fn spectral() -> Gen {
    Gen::aux(2)
}

/// Inverse of a square matrix whose constant part is invertible and whose
/// remainder is nilpotent relative to it.
fn nilpotent_inverse(m: &Matrix<PolyW>) -> Result<Matrix<PolyW>> {
    let k = m.rows();
    let d = m.map(|e| e.constant_term());
    let d_inv = d.inverse().map_err(|_| Error::Degenerate("constant part not invertible".into()))?;
    let d_inv = d_inv.map(|x| PolyW::constant(x.clone()));
    let rest = m.map(|e| e.filter(|mono| !mono.is_one()));
    let step = d_inv.dot(&rest).neg();
    let mut term = d_inv.clone();
    let mut acc = Matrix::<PolyW>::zeros(k, k);
    for _ in 0..=k {
        if term.is_zero() {
            return Ok(acc);
        }
        acc.add_assign(&term);
        term = step.dot(&term);
    }
    Err(Error::Degenerate("remainder is not nilpotent".into()))
}

/// Coefficients T_1..T_p of T(u) = 1 + sum T_n u^{-n}, obtained from the
/// corner quasideterminant of u + J_gf: u^p T(u) is proportional to
/// A_{1p} - A_{1,*} (A_{*,*})^{-1} A_{*,p} on p x p blocks of size N.
pub fn minus_series(ctx: &Ctx, basis: &GlpBasis) -> Result<Vec<Matrix<PolyW>>> {
    let (n, p) = (ctx.n, ctx.p);
    let u = PolyW::var(spectral());
    let mut l = gauge_fixed_current(ctx, basis);
    for i in 0..n * p {
        l[(i, i)] = &l[(i, i)] + &u;
    }
    let idx = |a: usize, k: usize| a * p + k;
    let first_block: Vec<usize> = (0..n).map(|a| idx(a, 0)).collect();
    let last_block: Vec<usize> = (0..n).map(|a| idx(a, p - 1)).collect();
    let q = if p == 1 {
        Matrix::from_fn(n, n, |a, b| l[(first_block[a], last_block[b])].clone())
    } else {
        let rows: Vec<usize> = (0..n).flat_map(|a| (1..p).map(move |k| idx(a, k))).collect();
        let cols: Vec<usize> = (0..n).flat_map(|a| (0..p - 1).map(move |k| idx(a, k))).collect();
        let sub = Matrix::from_fn(rows.len(), cols.len(), |x, y| l[(rows[x], cols[y])].clone());
        let inv = nilpotent_inverse(&sub)?;
        let top = Matrix::from_fn(n, cols.len(), |a, y| l[(first_block[a], cols[y])].clone());
        let right = Matrix::from_fn(rows.len(), n, |x, b| l[(rows[x], last_block[b])].clone());
        let corner = Matrix::from_fn(n, n, |a, b| l[(first_block[a], last_block[b])].clone());
        corner.minus(&top.dot(&inv).dot(&right))
    };
    let coeff = |k: u32| q.map(|e| e.coeff_of_power(&spectral(), k));
    let lead = coeff(p as u32)
        .is_scalar_multiple_of_identity()
        .and_then(|c| c.as_constant())
        .filter(|c| *c != Scalar::from_integer(0.into()))
        .ok_or_else(|| Error::Degenerate("quasideterminant is not monic up to a scalar".into()))?;
    let inv_lead = Scalar::from_integer(1.into()) / lead;
    Ok((1..=p).map(|nn| coeff((p - nn) as u32).scale(&inv_lead)).collect())
}

/// Inverse of the series 1 + sum_k a_k x^k, truncated after `len` terms.
pub fn invert_series(a: &[Matrix<PolyW>], len: usize, n: usize) -> Vec<Matrix<PolyW>> {
    let mut y: Vec<Matrix<PolyW>> = Vec::with_capacity(len);
    for k in 1..=len {
        let mut acc = a.get(k - 1).map(|m| m.neg()).unwrap_or_else(|| Matrix::zeros(n, n));
        for i in 1..k {
            if let Some(ai) = a.get(i - 1) {
                acc = acc.minus(&ai.dot(&y[k - i - 1]));
            }
        }
        y.push(acc);
    }
    y
}

/// Builds W-bar^{sign}_j for j = 0..=j_max. The minus family is read off
/// the quasideterminant, the plus family from
/// sum_j W^+_j (-u)^{-j-1} = T^-(u)^{-1} - 1.
pub fn wbar_build(ctx: &Ctx, basis: &GlpBasis, s: BasisSign, j_max: usize) -> Result<WBarFamily> {
    let n = ctx.n;
    let minus = minus_series(ctx, basis)?;
    let gens = match s {
        BasisSign::Minus => (0..=j_max).map(|j| minus.get(j).cloned().unwrap_or_else(|| Matrix::zeros(n, n))).collect(),
        BasisSign::Plus => {
            let inv = invert_series(&minus, j_max + 1, n);
            inv.into_iter().enumerate().map(|(j, m)| m.scale(&sign(j as i64 + 1))).collect()
        }
    };
    Ok(WBarFamily { ctx: *ctx, sign: s, gens })
}

/// Compositions of `total` into `parts` non-negative integers.
pub fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// The other family's W-bar_j by the closed change of basis
/// sum_{n=1}^{j+1} (-1)^{j+n+1} sum_{|s| = j+1-n} (W_{s_1} ... W_{s_n}).
pub fn change_of_basis(from: &WBarFamily, j: usize) -> Matrix<PolyW> {
    let n = from.ctx.n;
    let mut acc = Matrix::<PolyW>::zeros(n, n);
    for parts in 1..=j + 1 {
        let sg = sign((j + parts + 1) as i64);
        for comp in compositions(j + 1 - parts, parts) {
            let mut prod = Matrix::<PolyW>::identity(n);
            for s in comp {
                prod = prod.dot(&from.get(s));
            }
            acc.add_assign(&prod.scale(&sg));
        }
    }
    acc
}

/// Image of a Yangian polynomial under T^{ab}_n -> W-bar^-{ab}_{n-1}.
pub fn yangian_to_w(x: &PolyW, minus: &WBarFamily) -> PolyW {
    x.substitute(|g| match g.family {
        crate::exact_algebra::Family::T => Some(minus.entry(g.ai(), g.bi(), g.mode() - 1)),
        _ => None,
    })
}

#[cfg(test)]
mod tests;
