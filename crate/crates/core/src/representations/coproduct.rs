//! The coproduct on modules, evaluated with and without truncation.

use super::yangian_rep::YangianRep;
use crate::exact_algebra::scalar::qi;
use crate::exact_algebra::{Matrix, Scalar};
use crate::{Error, Result};

/// Delta(T^{ij}_m) on a (x) b: sum_{r} sum_k T^{ik}_r (x) T^{kj}_{m-r}.
/// With a cap, T_m = 0 for m > cap and terms with a mode above the cap are
/// dropped.
pub fn coproduct_mode(a: &YangianRep, b: &YangianRep, i: usize, j: usize, m: usize, cap: Option<usize>) -> Matrix<Scalar> {
    let dim = a.dim * b.dim;
    let mut acc = Matrix::<Scalar>::zeros(dim, dim);
    if cap.is_some_and(|c| m > c) {
        return acc;
    }
    for r in 0..=m {
        if cap.is_some_and(|c| r > c || m - r > c) {
            continue;
        }
        for k in 1..=a.n {
            let (x, y) = (a.t(i, k, r), b.t(k, j, m - r));
            if !x.is_zero() && !y.is_zero() {
                acc.add_assign(&x.kron(&y));
            }
        }
    }
    acc
}

/// Right side of [T^{ij}_m, T^{kl}_n] as a list of (sign, left, right)
/// products of generators (i, j, mode), truncated at the cap.
fn commutator_terms(i: usize, j: usize, k: usize, l: usize, m: usize, n: usize, cap: Option<usize>) -> Vec<(i64, (usize, usize, usize), (usize, usize, usize))> {
    let mut out = Vec::new();
    for r in 0..m.min(n) {
        let s = m + n - 1 - r;
        if cap.is_some_and(|c| s > c) {
            continue;
        }
        out.push((1, (k, j, r), (i, l, s)));
        out.push((-1, (k, j, s), (i, l, r)));
    }
    out
}

#[derive(Clone, Debug, PartialEq)]
pub struct DefectReport {
    /// Delta([T^{ij}_m, T^{kl}_2]) - [Delta T^{ij}_m, Delta T^{kl}_2].
    pub defect: Matrix<Scalar>,
    /// sum_{s+t=m} (T^{il}_{s+1} (x) T^{kj}_t - T^{il}_s (x) T^{kj}_{t+1}).
    pub displayed: Matrix<Scalar>,
}

impl DefectReport {
    pub fn agree(&self) -> bool {
        self.defect == self.displayed
    }
}

/// Compares the bracket computed in the truncated algebra and pushed
/// through the (capped) coproduct with the bracket of the coproducts.
pub fn coproduct_defect(a: &YangianRep, b: &YangianRep, m: usize, idx: (usize, usize, usize, usize), cap: Option<usize>) -> Result<DefectReport> {
    if a.n != b.n {
        return Err(Error::ContextMismatch(format!("gl({}) vs gl({})", a.n, b.n)));
    }
    let (i, j, k, l) = idx;
    if [i, j, k, l].iter().any(|&x| x == 0 || x > a.n) {
        return Err(Error::OutOfRange(format!("{idx:?} for gl({})", a.n)));
    }
    let delta = |x: (usize, usize, usize)| coproduct_mode(a, b, x.0, x.1, x.2, cap);
    let dim = a.dim * b.dim;
    let mut image = Matrix::<Scalar>::zeros(dim, dim);
    for (sign, x, y) in commutator_terms(i, j, k, l, m, 2, cap) {
        image.add_assign(&delta(x).dot(&delta(y)).scale(&qi(sign)));
    }
    let bracket = delta((i, j, m)).commutator(&delta((k, l, 2)))?;
    let mut displayed = Matrix::<Scalar>::zeros(dim, dim);
    for s in 0..=m {
        let t = m - s;
        displayed.add_assign(&a.t(i, l, s + 1).kron(&b.t(k, j, t)));
        displayed = displayed.minus(&a.t(i, l, s).kron(&b.t(k, j, t + 1)));
    }
    Ok(DefectReport { defect: image.minus(&bracket), displayed })
}

/// Largest defect over all index tuples: returns the first tuple with a
/// nonzero defect, if any.
pub fn first_nonzero_defect(a: &YangianRep, b: &YangianRep, m: usize, cap: Option<usize>) -> Result<Option<((usize, usize, usize, usize), DefectReport)>> {
    for idx in crate::poisson_yangian::quads(a.n) {
        let rep = coproduct_defect(a, b, m, idx, cap)?;
        if !rep.defect.is_zero() {
            return Ok(Some((idx, rep)));
        }
    }
    Ok(None)
}

/// First tuple where the displayed sum is nonzero.
pub fn first_nonzero_displayed(a: &YangianRep, b: &YangianRep, m: usize) -> Result<Option<(usize, usize, usize, usize)>> {
    for idx in crate::poisson_yangian::quads(a.n) {
        if !coproduct_defect(a, b, m, idx, Some(m))?.displayed.is_zero() {
            return Ok(Some(idx));
        }
    }
    Ok(None)
}
