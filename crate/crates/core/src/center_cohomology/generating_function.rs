//! The generating function H(x) for the center of Y_p(N), evaluated on
//! modules. Its parameters u_k are left as free rational inputs.

use crate::exact_algebra::scalar::qi;
use crate::exact_algebra::{Matrix, Scalar, UniPoly};
use crate::representations::YangianRep;
use crate::{Error, Result};

fn permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    if n == 0 {
        return vec![(Vec::new(), 1)];
    }
    let mut out = Vec::new();
    for (p, s) in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push((q, if (n - 1 - pos) % 2 == 0 { s } else { -s }));
        }
    }
    out
}

/// Numerator of H(x) as matrix coefficients of a polynomial in x:
/// sum_w sgn(w) sum_{r_j <= top} T^{w(1)1}_{r_1} ... T^{w(N)N}_{r_N} prod_j (x - j)^{top-r_j}.
/// The printed form has top = p - 1.
pub fn numerator(rep: &YangianRep, top: usize) -> Vec<Matrix<Scalar>> {
    let (n, d) = (rep.n, rep.dim);
    let p = top + 1;
    let mut total = vec![Matrix::<Scalar>::zeros(d, d); n * top + 1];
    for (perm, sign) in permutations(n) {
        // (matrix product, polynomial in x) pairs, built column by column
        let mut acc: Vec<(Matrix<Scalar>, UniPoly)> = vec![(Matrix::identity(d), UniPoly::constant(qi(sign)))];
        for col in 0..n {
            let mut next = Vec::new();
            for (m, poly) in &acc {
                for r in 0..p {
                    let t = rep.t(perm[col] + 1, col + 1, r);
                    if t.is_zero() {
                        continue;
                    }
                    let shift = UniPoly::linear(qi(col as i64 + 1)).pow((p - 1 - r) as u32);
                    next.push((m.dot(&t), poly.mul(&shift)));
                }
            }
            acc = next;
        }
        for (m, poly) in acc {
            for (e, c) in poly.coeffs().iter().enumerate() {
                total[e].add_assign(&m.scale(c));
            }
        }
    }
    total
}

/// Residues of H(x) at the simple poles x = j + u_k, j = 1..N, for
/// pairwise generic parameters u_1..u_p.
pub fn principal_part(rep: &YangianRep, params: &[Scalar], top: usize) -> Result<Vec<Matrix<Scalar>>> {
    let poles: Vec<Scalar> = (1..=rep.n).flat_map(|j| params.iter().map(move |u| qi(j as i64) + u)).collect();
    for (i, a) in poles.iter().enumerate() {
        if poles[i + 1..].contains(a) {
            return Err(Error::Degenerate("parameters give a repeated pole".into()));
        }
    }
    let num = numerator(rep, top);
    Ok(poles
        .iter()
        .enumerate()
        .map(|(i, x)| {
            let mut value = Matrix::<Scalar>::zeros(rep.dim, rep.dim);
            let mut pw = qi(1);
            for c in &num {
                value.add_assign(&c.scale(&pw));
                pw *= x;
            }
            let den = poles.iter().enumerate().filter(|&(k, _)| k != i).fold(qi(1), |acc, (_, y)| acc * (x - y));
            value.scale(&(qi(1) / den))
        })
        .collect())
}

/// Whether every residue commutes with every generator of the module.
pub fn principal_part_central(rep: &YangianRep, params: &[Scalar], top: usize) -> Result<bool> {
    let res = principal_part(rep, params, top)?;
    Ok(res.iter().all(|m| rep.generators().all(|g| m.commutator(g).map(|c| c.is_zero()).unwrap_or(false))))
}
