//! Yangian modules built from evaluation modules and coproduct tensor
//! products, with RTT verification and highest weights.

use num_traits::Zero;

use super::gl_irrep::GlnIrrep;
use crate::exact_algebra::scalar::qi;
use crate::exact_algebra::{BiPoly, Matrix, RationalFunction, Scalar};
use crate::{Error, Result};

/// Matrices of T^{ij}_r, r = 0..=support, on a finite-dimensional module.
#[derive(Clone, Debug, PartialEq)]
pub struct YangianRep {
    pub n: usize,
    pub dim: usize,
    /// Highest weights of the evaluation factors, in tensor order.
    pub factors: Vec<Vec<Scalar>>,
    modes: Vec<Vec<Matrix<Scalar>>>,
}

impl YangianRep {
    /// One-dimensional module with T(u) = 1.
    pub fn trivial(n: usize) -> YangianRep {
        YangianRep { n, dim: 1, factors: Vec::new(), modes: vec![YangianRep::trivial_level(n, 1)] }
    }

    /// Largest r stored; modes above it vanish.
    pub fn support_bound(&self) -> usize {
        self.modes.len() - 1
    }

    /// T^{ij}_r; zero past the stored range.
    pub fn t(&self, i: usize, j: usize, r: usize) -> Matrix<Scalar> {
        self.modes
            .get(r)
            .map(|m| m[(i - 1) * self.n + (j - 1)].clone())
            .unwrap_or_else(|| Matrix::zeros(self.dim, self.dim))
    }

    pub fn t_ref(&self, i: usize, j: usize, r: usize) -> Option<&Matrix<Scalar>> {
        self.modes.get(r).map(|m| &m[(i - 1) * self.n + (j - 1)])
    }

    /// Every T^{ij}_r matrix with r >= 1.
    pub fn generators(&self) -> impl Iterator<Item = &Matrix<Scalar>> {
        self.modes.iter().skip(1).flatten()
    }

    /// Largest r with some T^{ij}_r nonzero.
    pub fn support(&self) -> usize {
        (0..self.modes.len()).rev().find(|&r| self.modes[r].iter().any(|m| !m.is_zero())).unwrap_or(0)
    }

    /// Same factors, with every mode matrix replaced by f(T_r) on a space
    /// of the given dimension; T_0 stays the identity.
    pub(crate) fn map_modes(&self, dim: usize, f: impl Fn(&Matrix<Scalar>) -> Matrix<Scalar>) -> YangianRep {
        let mut modes = vec![YangianRep::trivial_level(self.n, dim)];
        modes.extend(self.modes.iter().skip(1).map(|level| level.iter().map(&f).collect()));
        YangianRep { n: self.n, dim, factors: self.factors.clone(), modes }
    }

    fn trivial_level(n: usize, dim: usize) -> Vec<Matrix<Scalar>> {
        let id = Matrix::<Scalar>::identity(dim);
        let zero = Matrix::<Scalar>::zeros(dim, dim);
        (0..n * n).map(|x| if x / n == x % n { id.clone() } else { zero.clone() }).collect()
    }

    /// T(u) at a rational point, through x = 1/u: sum_r T_r x^r.
    pub fn t_at(&self, i: usize, j: usize, x: &Scalar) -> Matrix<Scalar> {
        let mut acc = Matrix::<Scalar>::zeros(self.dim, self.dim);
        let mut xr = qi(1);
        for r in 0..self.modes.len() {
            acc.add_assign(&self.modes[r][(i - 1) * self.n + (j - 1)].scale(&xr));
            xr *= x;
        }
        acc
    }
}

/// Evaluation module: T^{ij}_1 acts as E_ij, higher modes vanish.
pub fn evaluation_rep(pi: &GlnIrrep) -> YangianRep {
    let n = pi.n;
    let dim = pi.dim();
    let t0 = YangianRep::trivial_level(n, dim);
    let t1 = (0..n * n).map(|x| pi.e(x / n + 1, x % n + 1).clone()).collect();
    YangianRep { n, dim, factors: vec![pi.weight.clone()], modes: vec![t0, t1] }
}

/// Coproduct tensor product: T^{ij}(u) -> sum_k T^{ik}(u) (x) T^{kj}(u).
pub fn tensor2(a: &YangianRep, b: &YangianRep) -> Result<YangianRep> {
    if a.n != b.n {
        return Err(Error::ContextMismatch(format!("gl({}) vs gl({})", a.n, b.n)));
    }
    let n = a.n;
    let dim = a.dim * b.dim;
    let top = a.support_bound() + b.support_bound();
    let mut modes = Vec::with_capacity(top + 1);
    for r in 0..=top {
        let mut level = Vec::with_capacity(n * n);
        for i in 1..=n {
            for j in 1..=n {
                let mut acc = Matrix::<Scalar>::zeros(dim, dim);
                for s in 0..=r.min(a.support_bound()) {
                    if r - s > b.support_bound() {
                        continue;
                    }
                    for k in 1..=n {
                        let (x, y) = (a.t_ref(i, k, s).unwrap(), b.t_ref(k, j, r - s).unwrap());
                        if !x.is_zero() && !y.is_zero() {
                            acc.add_assign(&x.kron(y));
                        }
                    }
                }
                level.push(acc);
            }
        }
        modes.push(level);
    }
    let mut factors = a.factors.clone();
    factors.extend(b.factors.iter().cloned());
    Ok(YangianRep { n, dim, factors, modes })
}

/// Tensor product of evaluation modules, in the given order.
pub fn tensor_reps(factors: &[GlnIrrep]) -> Result<YangianRep> {
    let first = factors.first().ok_or_else(|| Error::InvalidInput("no factors".into()))?;
    let mut acc = evaluation_rep(first);
    for f in &factors[1..] {
        acc = tensor2(&acc, &evaluation_rep(f))?;
    }
    Ok(acc)
}

/// Builds the tensor product directly from weight lists.
pub fn tensor_from_weights(weights: &[Vec<Scalar>]) -> Result<YangianRep> {
    let irreps = weights.iter().map(|w| GlnIrrep::new(w)).collect::<Result<Vec<_>>>()?;
    tensor_reps(&irreps)
}

/// True iff T_r = 0 for all r > p, i.e. the module factors through Y_p(N).
pub fn truncation_support(rep: &YangianRep, p: usize) -> bool {
    rep.support() <= p
}

/// First index tuple and mode pair violating
/// [T^{ij}_m, T^{kl}_n] = sum_{r<min(m,n)} (T^{kj}_r T^{il}_{m+n-1-r} - T^{kj}_{m+n-1-r} T^{il}_r),
/// checked for 1 <= m, n <= top.
pub fn mode_relations_failure(rep: &YangianRep, top: usize) -> Option<(usize, usize, usize, usize, usize, usize)> {
    let n = rep.n;
    for (i, j, k, l) in crate::poisson_yangian::quads(n) {
        for m in 1..=top {
            for nn in 1..=top {
                let lhs = rep.t(i, j, m).commutator(&rep.t(k, l, nn)).expect("square");
                let mut rhs = Matrix::<Scalar>::zeros(rep.dim, rep.dim);
                for r in 0..m.min(nn) {
                    let s = m + nn - 1 - r;
                    rhs.add_assign(&rep.t(k, j, r).dot(&rep.t(i, l, s)));
                    rhs = rhs.minus(&rep.t(k, j, s).dot(&rep.t(i, l, r)));
                }
                if lhs != rhs {
                    return Some((i, j, k, l, m, nn));
                }
            }
        }
    }
    None
}

/// (y - x)[T^{ij}(x), T^{kl}(y)] = xy (T^{kj}(x) T^{il}(y) - T^{kj}(y) T^{il}(x))
/// with x = 1/u, y = 1/v: the component form of R(u-v) T1(u) T2(v) = T2(v) T1(u) R(u-v)
/// for R(u) = 1 - P/u. Both sides are polynomials of degree at most
/// support + 1 in x and in y, so checking a full grid of that size proves
/// the identity.
pub fn rtt_grid_failure(rep: &YangianRep) -> Option<(usize, usize, usize, usize)> {
    let deg = rep.support_bound() + 1;
    let pts: Vec<Scalar> = (1..=deg as i64 + 1).map(qi).collect();
    let n = rep.n;
    let at: Vec<Vec<Matrix<Scalar>>> =
        pts.iter().map(|x| (0..n * n).map(|c| rep.t_at(c / n + 1, c % n + 1, x)).collect()).collect();
    let get = |p: usize, i: usize, j: usize| &at[p][(i - 1) * n + (j - 1)];
    for (i, j, k, l) in crate::poisson_yangian::quads(n) {
        for (px, x) in pts.iter().enumerate() {
            for (py, y) in pts.iter().enumerate() {
                let lhs = get(px, i, j).commutator(get(py, k, l)).expect("square").scale(&(y - x));
                let rhs = get(px, k, j).dot(get(py, i, l)).minus(&get(py, k, j).dot(get(px, i, l))).scale(&(x * y));
                if lhs != rhs {
                    return Some((i, j, k, l));
                }
            }
        }
    }
    None
}

/// Literal R(u-v) T1(u) T2(v) = T2(v) T1(u) R(u-v) on C^N (x) C^N (x) V with
/// rational-function entries. Only practical for small N * dim.
pub fn rtt_symbolic_holds(rep: &YangianRep) -> bool {
    let n = rep.n;
    let d = rep.dim;
    let series = |i: usize, j: usize, var: &RationalFunction| {
        let inv = RationalFunction::constant(qi(1)).div(var).expect("nonzero variable");
        let mut acc = Matrix::<RationalFunction>::zeros(d, d);
        let mut pw = RationalFunction::constant(qi(1));
        for r in 0..=rep.support_bound() {
            let t = rep.t(i, j, r).map(|x| RationalFunction::constant(x.clone()));
            acc.add_assign(&t.scale_by(&pw));
            pw = pw.mul(&inv);
        }
        acc
    };
    let unit = |i: usize, j: usize| {
        Matrix::<RationalFunction>::from_fn(n, n, |a, b| {
            RationalFunction::constant(if a == i - 1 && b == j - 1 { qi(1) } else { qi(0) })
        })
    };
    let id_n = Matrix::<RationalFunction>::identity(n);
    let (u, v) = (RationalFunction::u(), RationalFunction::v());
    let mut t1 = Matrix::<RationalFunction>::zeros(n * n * d, n * n * d);
    let mut t2 = t1.clone();
    for i in 1..=n {
        for j in 1..=n {
            t1.add_assign(&unit(i, j).kron(&id_n).kron(&series(i, j, &u)));
            t2.add_assign(&id_n.kron(&unit(i, j)).kron(&series(i, j, &v)));
        }
    }
    let mut perm = Matrix::<RationalFunction>::zeros(n * n, n * n);
    for i in 1..=n {
        for j in 1..=n {
            perm.add_assign(&unit(i, j).kron(&unit(j, i)));
        }
    }
    let diff = RationalFunction::new(BiPoly::u().sub(&BiPoly::v()), BiPoly::constant(qi(1))).expect("nonzero");
    let r = Matrix::<RationalFunction>::identity(n * n)
        .minus(&perm.scale_by(&RationalFunction::constant(qi(1)).div(&diff).expect("nonzero")))
        .kron(&Matrix::identity(d));
    let lhs = r.dot(&t1).dot(&t2);
    let rhs = t2.dot(&t1).dot(&r);
    let same = lhs.entries().zip(rhs.entries()).all(|((_, a), (_, b))| a.equal(b));
    same
}

/// lambda^i(u) = sum_r lambda^i_r u^{-r}, lambda^i_0 = 1.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightSeries {
    pub coeffs: Vec<Vec<Scalar>>,
}

/// Eigenvalue series of T^{ii}(u) on basis vector 0, after checking that
/// it is a joint highest-weight vector.
pub fn highest_weight(rep: &YangianRep) -> Result<WeightSeries> {
    let n = rep.n;
    let mut coeffs = vec![vec![]; n];
    for r in 0..=rep.support_bound() {
        for i in 1..=n {
            for j in 1..=n {
                let t = rep.t(i, j, r);
                let col: Vec<&Scalar> = (0..rep.dim).map(|x| &t[(x, 0)]).collect();
                if i < j && col.iter().any(|c| !c.is_zero()) {
                    return Err(Error::Degenerate(format!("T^{i}{j}_{r} does not kill the highest vector")));
                }
                if i == j {
                    if col[1..].iter().any(|c| !c.is_zero()) {
                        return Err(Error::Degenerate(format!("vector 0 is not an eigenvector of T^{i}{i}_{r}")));
                    }
                    coeffs[i - 1].push(col[0].clone());
                }
            }
        }
    }
    Ok(WeightSeries { coeffs })
}

/// Product of the factor series prod_k (1 + lambda^i_k / u), the expected
/// highest weight of a tensor product.
pub fn expected_weight(n: usize, factors: &[Vec<Scalar>]) -> WeightSeries {
    let coeffs = (0..n)
        .map(|i| {
            let mut acc = vec![qi(1)];
            for f in factors {
                let mut next = vec![Scalar::zero(); acc.len() + 1];
                for (r, c) in acc.iter().enumerate() {
                    next[r] += c;
                    next[r + 1] += c * &f[i];
                }
                acc = next;
            }
            acc
        })
        .collect();
    WeightSeries { coeffs }
}

impl WeightSeries {
    /// Same series up to trailing zeros.
    pub fn same_as(&self, other: &WeightSeries) -> bool {
        let trim = |v: &Vec<Scalar>| {
            let mut v = v.clone();
            while v.last().is_some_and(Zero::is_zero) {
                v.pop();
            }
            v
        };
        self.coeffs.len() == other.coeffs.len() && self.coeffs.iter().zip(&other.coeffs).all(|(a, b)| trim(a) == trim(b))
    }
}
