use std::collections::BTreeMap;

use num_traits::Zero;

use crate::exact_algebra::scalar::{qi, Scalar};
use crate::exact_algebra::{Gen, Matrix};

/// Noncommutative polynomial in Yangian modes: ordered words with
/// rational coefficients. T_0 never appears; it is folded into deltas.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct NcPoly(BTreeMap<Vec<Gen>, Scalar>);

impl NcPoly {
    pub fn zero() -> NcPoly {
        NcPoly::default()
    }

    pub fn add_word(&mut self, w: Vec<Gen>, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.0.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Adds c * T^{a}_{r} T^{b}_{s}, resolving T_0 into deltas.
    pub fn add_pair(&mut self, c: Scalar, (i1, j1, r): (usize, usize, usize), (i2, j2, s): (usize, usize, usize)) {
        let mut w = Vec::new();
        for (i, j, n) in [(i1, j1, r), (i2, j2, s)] {
            if n == 0 {
                if i != j {
                    return;
                }
            } else {
                w.push(Gen::t(i, j, n));
            }
        }
        self.add_word(w, c);
    }

    pub fn words(&self) -> impl Iterator<Item = (&Vec<Gen>, &Scalar)> {
        self.0.iter()
    }

    pub fn sub(&self, o: &NcPoly) -> NcPoly {
        let mut out = self.clone();
        for (w, c) in &o.0 {
            out.add_word(w.clone(), -c);
        }
        out
    }

    /// Evaluates with each mode sent to a matrix of dimension `dim`.
    pub fn eval<F: Fn(&Gen) -> Matrix<Scalar>>(&self, dim: usize, rep: F) -> Matrix<Scalar> {
        let mut out = Matrix::zeros(dim, dim);
        for (w, c) in &self.0 {
            let mut m = Matrix::identity(dim);
            for g in w {
                m = m.dot(&rep(g));
                if m.is_zero() {
                    break;
                }
            }
            out = out.plus(&m.scale(c));
        }
        out
    }
}

/// Right-hand side of [T^{ij}_m, T^{kl}_n] as ordered words, untruncated.
pub fn quantum_commutator_rhs(i: usize, j: usize, m: usize, k: usize, l: usize, n: usize) -> NcPoly {
    let mut out = NcPoly::zero();
    let top = m + n - 1;
    for r in 0..m.min(n) {
        out.add_pair(qi(1), (k, j, r), (i, l, top - r));
        out.add_pair(qi(-1), (k, j, top - r), (i, l, r));
    }
    out
}

/// The reordering of sum_{r<min} T^{kj}_{m+n-1-r} T^{il}_r: returns the
/// original sum and the reordered form with its correction terms.
pub fn tail_reorder(i: usize, j: usize, m: usize, k: usize, l: usize, n: usize) -> (NcPoly, NcPoly) {
    let mn = m.min(n);
    let top = m + n - 1;
    let mut lhs = NcPoly::zero();
    let mut rhs = NcPoly::zero();
    for r in 0..mn {
        lhs.add_pair(qi(1), (k, j, top - r), (i, l, r));
        rhs.add_pair(qi(1), (i, l, r), (k, j, top - r));
    }
    for s in 0..mn.saturating_sub(1) {
        let w = qi((mn - s - 1) as i64);
        rhs.add_pair(w.clone(), (i, j, s), (k, l, top - 1 - s));
        rhs.add_pair(-w, (i, j, top - 1 - s), (k, l, s));
    }
    (lhs, rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deltas_fold_into_shorter_words() {
        let r = quantum_commutator_rhs(1, 2, 1, 2, 1, 1);
        let words: Vec<_> = r.words().map(|(w, c)| (w.clone(), c.clone())).collect();
        assert_eq!(words, vec![(vec![Gen::t(1, 1, 1)], qi(1)), (vec![Gen::t(2, 2, 1)], qi(-1))]);
    }
}
