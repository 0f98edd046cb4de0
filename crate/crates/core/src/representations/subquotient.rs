//! The irreducible quotient of the submodule generated by the highest vector.

use super::yangian_rep::YangianRep;
use crate::exact_algebra::{Matrix, Scalar};
use crate::{Error, Result};

/// Row-reduced spanning set grown by closing under the given maps.
fn closure(seed: Vec<Scalar>, step: impl Fn(&[Scalar]) -> Vec<Vec<Scalar>>) -> Vec<Vec<Scalar>> {
    let mut basis: Vec<Vec<Scalar>> = Vec::new();
    let mut queue = vec![seed];
    while let Some(v) = queue.pop() {
        let mut cand = basis.clone();
        cand.push(v.clone());
        let rank = Matrix::from_rows(cand).expect("equal lengths").rank();
        if rank > basis.len() {
            basis.push(v.clone());
            queue.extend(step(&v));
        }
    }
    basis
}

fn unit(dim: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::from_integer(0.into()); dim];
    v[0] = Scalar::from_integer(1.into());
    v
}

/// Columns spanning Y e_0 and rows spanning e_0^T Y.
fn cyclic_spaces(rep: &YangianRep) -> (Matrix<Scalar>, Matrix<Scalar>) {
    let gens: Vec<&Matrix<Scalar>> = rep.generators().filter(|g| !g.is_zero()).collect();
    let cols = closure(unit(rep.dim), |v| gens.iter().map(|g| g.apply(v)).collect());
    let gens_t: Vec<Matrix<Scalar>> = gens.iter().map(|g| g.transpose()).collect();
    let rows = closure(unit(rep.dim), |v| gens_t.iter().map(|g| g.apply(v)).collect());
    let s = Matrix::from_rows(cols).expect("nonempty").transpose();
    let r = Matrix::from_rows(rows).expect("nonempty");
    (s, r)
}

/// Dimension of the irreducible quotient of Y e_0: the rank of the pairing
/// between e_0^T Y and Y e_0.
pub fn irreducible_dimension(rep: &YangianRep) -> usize {
    let (s, r) = cyclic_spaces(rep);
    r.dot(&s).rank()
}

/// The irreducible quotient of Y e_0 as a module, highest vector first.
pub fn irreducible_quotient(rep: &YangianRep) -> Result<YangianRep> {
    let (s, r) = cyclic_spaces(rep);
    let pairing = r.dot(&s);
    let mut reduced = pairing.clone();
    let pivots = reduced.rref();
    let basis = Matrix::from_fn(pairing.rows(), pivots.len(), |i, j| pairing[(i, pivots[j])].clone());
    let gram_r = r.dot(&r.transpose()).inverse()?;
    let bt = basis.transpose();
    let gram_b = bt.dot(&basis).inverse()?;
    let act = |x: &Matrix<Scalar>| -> Matrix<Scalar> {
        if x.is_zero() {
            return Matrix::zeros(pivots.len(), pivots.len());
        }
        // e_0^T Y is stable under right multiplication: r x = c r
        let c = r.dot(x).dot(&r.transpose()).dot(&gram_r);
        gram_b.dot(&bt).dot(&c).dot(&basis)
    };
    if pivots.first() != Some(&0) {
        return Err(Error::Degenerate("highest vector lies in the radical".into()));
    }
    Ok(rep.map_modes(pivots.len(), act))
}
