//! Finite-dimensional irreducible gl(N) modules in the Gelfand-Tsetlin basis.

use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::exact_algebra::scalar::{is_integer, qi};
use crate::exact_algebra::{Matrix, Scalar};
use crate::{Error, Result};

/// Irreducible gl(N) module with highest weight `weight`; basis vector 0
/// is the highest weight vector.
#[derive(Clone, Debug, PartialEq)]
pub struct GlnIrrep {
    pub n: usize,
    pub weight: Vec<Scalar>,
    patterns: Vec<Vec<Vec<i64>>>,
    pub(crate) action: Vec<Matrix<Scalar>>,
}

/// All Gelfand-Tsetlin patterns with top row `top`, highest pattern first.
fn patterns(top: &[i64]) -> Vec<Vec<Vec<i64>>> {
    fn below(row: &[i64]) -> Vec<Vec<i64>> {
        // rows r with row[i] >= r[i] >= row[i+1]
        let mut out = vec![vec![]];
        for i in 0..row.len() - 1 {
            let mut next = Vec::new();
            for prefix in &out {
                for v in (row[i + 1]..=row[i]).rev() {
                    let mut x = prefix.clone();
                    x.push(v);
                    next.push(x);
                }
            }
            out = next;
        }
        out
    }
    let mut acc: Vec<Vec<Vec<i64>>> = vec![vec![top.to_vec()]];
    for _ in 1..top.len() {
        let mut next = Vec::new();
        for pat in &acc {
            for r in below(pat.last().unwrap()) {
                let mut x = pat.clone();
                x.push(r);
                next.push(x);
            }
        }
        acc = next;
    }
    // stored top row first; flip so index k-1 holds row k
    acc.into_iter().map(|mut p| {
        p.reverse();
        p
    }).collect()
}

impl GlnIrrep {
    /// Builds the module; the weight must be dominant integral up to a
    /// common rational shift.
    pub fn new(weight: &[Scalar]) -> Result<GlnIrrep> {
        let n = weight.len();
        if n == 0 {
            return Err(Error::InvalidInput("empty weight".into()));
        }
        let shift = weight[n - 1].clone();
        let mut top = Vec::with_capacity(n);
        for w in weight {
            let d = w - &shift;
            if !is_integer(&d) {
                return Err(Error::InvalidInput(format!("weight differences must be integers: {weight:?}")));
            }
            top.push(d.to_integer().try_into().map_err(|_| Error::TooLarge("weight entry".into()))?);
        }
        if top.windows(2).any(|w: &[i64]| w[0] < w[1]) {
            return Err(Error::InvalidInput("weight is not dominant".into()));
        }
        let pats = patterns(&top);
        let index: HashMap<&Vec<Vec<i64>>, usize> = pats.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let dim = pats.len();
        let mut action = vec![Matrix::<Scalar>::zeros(dim, dim); n * n];
        let l = |pat: &Vec<Vec<i64>>, k: usize, i: usize| qi(pat[k - 1][i - 1] - i as i64 + 1);
        for (col, pat) in pats.iter().enumerate() {
            for k in 1..=n {
                let above: i64 = pat[k - 1].iter().sum();
                let below: i64 = if k > 1 { pat[k - 2].iter().sum() } else { 0 };
                action[(k - 1) * n + (k - 1)][(col, col)] = qi(above - below) + &shift;
            }
            for k in 1..n {
                for i in 1..=k {
                    let mut denom = Scalar::one();
                    for j in (1..=k).filter(|&j| j != i) {
                        denom *= l(pat, k, i) - l(pat, k, j);
                    }
                    // raising
                    let mut up = pat.clone();
                    up[k - 1][i - 1] += 1;
                    if let Some(&row) = index.get(&up) {
                        let mut num = Scalar::one();
                        for j in 1..=k + 1 {
                            num *= l(pat, k, i) - l(pat, k + 1, j);
                        }
                        action[(k - 1) * n + k][(row, col)] = -(num / &denom);
                    }
                    // lowering
                    let mut down = pat.clone();
                    down[k - 1][i - 1] -= 1;
                    if let Some(&row) = index.get(&down) {
                        let mut num = Scalar::one();
                        for j in 1..k {
                            num *= l(pat, k, i) - l(pat, k - 1, j);
                        }
                        action[k * n + (k - 1)][(row, col)] = num / &denom;
                    }
                }
            }
        }
        // remaining root vectors by commutators
        for gap in 2..n {
            for i in 1..=n - gap {
                let j = i + gap;
                let up = action[(i - 1) * n + (j - 2)].commutator(&action[(j - 2) * n + (j - 1)])?;
                action[(i - 1) * n + (j - 1)] = up;
                let down = action[(j - 1) * n + (j - 2)].commutator(&action[(j - 2) * n + (i - 1)])?;
                action[(j - 1) * n + (i - 1)] = down;
            }
        }
        Ok(GlnIrrep { n, weight: weight.to_vec(), patterns: pats, action })
    }

    pub fn from_integers(weight: &[i64]) -> Result<GlnIrrep> {
        GlnIrrep::new(&weight.iter().map(|&w| qi(w)).collect::<Vec<_>>())
    }

    pub fn dim(&self) -> usize {
        self.patterns.len()
    }

    /// Action matrix of E_ij, 1-based.
    pub fn e(&self, i: usize, j: usize) -> &Matrix<Scalar> {
        &self.action[(i - 1) * self.n + (j - 1)]
    }

    /// [E_ij, E_kl] = d_jk E_il - d_li E_kj for all index tuples.
    pub fn relations_hold(&self) -> bool {
        let n = self.n;
        let dim = self.dim();
        for i in 1..=n {
            for j in 1..=n {
                for k in 1..=n {
                    for l in 1..=n {
                        let lhs = self.e(i, j).commutator(self.e(k, l)).expect("square");
                        let mut rhs = Matrix::<Scalar>::zeros(dim, dim);
                        if j == k {
                            rhs = rhs.plus(self.e(i, l));
                        }
                        if l == i {
                            rhs = rhs.minus(self.e(k, j));
                        }
                        if lhs != rhs {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// The highest weight vector is annihilated by every E_ij, i < j, and
    /// has eigenvalue weight_i under E_ii.
    pub fn highest_vector_ok(&self) -> bool {
        let n = self.n;
        (1..=n).all(|i| {
            (1..=n).all(|j| {
                let col: Vec<Scalar> = (0..self.dim()).map(|r| self.e(i, j)[(r, 0)].clone()).collect();
                if i < j {
                    col.iter().all(Zero::is_zero)
                } else if i == j {
                    col[0] == self.weight[i - 1] && col[1..].iter().all(Zero::is_zero)
                } else {
                    true
                }
            })
        })
    }
}

/// Dimension of the gl(N) module by the Weyl formula; used as an oracle.
pub fn weyl_dimension(weight: &[i64]) -> Scalar {
    let n = weight.len();
    let mut num = Scalar::one();
    let mut den = Scalar::one();
    for i in 0..n {
        for j in i + 1..n {
            num *= qi(weight[i] - weight[j] + (j - i) as i64);
            den *= qi((j - i) as i64);
        }
    }
    num / den
}
