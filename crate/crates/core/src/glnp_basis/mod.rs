//! The gl(p) basis M_{j,m} adapted to the principal sl(2), its scalar
//! product and Clebsch-Gordan-like coefficients, and the induced gl(Np)
//! basis M^{jm}_{ab} = E_ab (x) M_{jm}.

mod closed_forms;

use std::sync::OnceLock;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact_algebra::scalar::{binomial, factorial, qbig, qi, sign, Scalar};
use crate::exact_algebra::{Gen, Matrix, PolyW};

pub use closed_forms::{
    closed_form_checks, explicit_formula_mismatches, genfun_coefficient, relation_checks, ClosedFormCheck,
};

/// e_- = sum_k E_{k+1,k}
pub fn e_minus(p: usize) -> Matrix<Scalar> {
    Matrix::from_fn(p, p, |i, j| if i == j + 1 { qi(1) } else { qi(0) })
}

/// e_+ = sum_k k(p-k)/2 E_{k,k+1}
pub fn e_plus(p: usize) -> Matrix<Scalar> {
    Matrix::from_fn(p, p, |i, j| {
        if j == i + 1 {
            let k = (i + 1) as i64;
            Scalar::new((k * (p as i64 - k)).into(), 2.into())
        } else {
            qi(0)
        }
    })
}

/// e_0 = diag((p+1)/2 - k)
pub fn e_zero(p: usize) -> Matrix<Scalar> {
    Matrix::from_fn(p, p, |i, j| {
        if i == j {
            Scalar::new((p as i64 + 1 - 2 * (i as i64 + 1)).into(), 2.into())
        } else {
            qi(0)
        }
    })
}

/// Top-weight coefficient (k+j-1)!(p-k)! / ((k-1)!(p-k-j)!); zero when any
/// factorial argument is negative.
pub fn top_coefficient(p: usize, j: usize, k: i64) -> Scalar {
    let (p, j) = (p as i64, j as i64);
    if k < 1 || p - k - j < 0 {
        return qi(0);
    }
    qbig(factorial(k + j - 1) * factorial(p - k)) / qbig(factorial(k - 1) * factorial(p - k - j))
}

/// eta_j = (2j)! (j!)^2 binom(p+j, 2j+1)
pub fn eta_closed(p: usize, j: usize) -> Scalar {
    let (p, j) = (p as i64, j as i64);
    qbig(factorial(2 * j) * factorial(j) * factorial(j) * binomial(p + j, 2 * j + 1))
}

/// M_{j,m} as written out entrywise with the a^k_{jm} sums.
pub fn explicit_matrix(p: usize, j: usize, m: i64) -> Matrix<Scalar> {
    let (pi, ji) = (p as i64, j as i64);
    let mut out = Matrix::zeros(p, p);
    let coeff = |k: i64, shift: i64| -> Scalar {
        let mut acc = qi(0);
        for i in 0..=(ji - m) {
            let c = qbig(binomial(ji - m, i)) * sign(i + ji + m);
            acc += c * top_coefficient(p, j, k - i - shift);
        }
        acc
    };
    if m >= 0 {
        for k in 1..=(pi - m) {
            out[((k - 1) as usize, (k + m - 1) as usize)] = coeff(k, 0);
        }
    } else {
        for k in 1..=(pi + m) {
            out[((k - m - 1) as usize, (k - 1) as usize)] = coeff(k, m);
        }
    }
    out
}

/// Position of (j, m) in the flat list of basis elements.
pub fn flat_index(j: usize, m: i64) -> usize {
    j * j + (m + j as i64) as usize
}

/// The M_{j,m} basis of gl(p) with lazily tabulated coefficients.
#[derive(Debug)]
pub struct GlpBasis {
    p: usize,
    mats: Vec<Matrix<Scalar>>,
    eta: Vec<Scalar>,
    cg_rows: Vec<OnceLock<Vec<Scalar>>>,
}

impl GlpBasis {
    /// Builds M_{jj} from the top coefficients and descends with e_-.
    pub fn new(p: usize) -> Result<GlpBasis> {
        if p == 0 {
            return Err(Error::InvalidInput("p must be at least 1".into()));
        }
        let em = e_minus(p);
        let mut mats = vec![Matrix::zeros(p, p); p * p];
        for j in 0..p {
            let mut cur = Matrix::from_fn(p, p, |r, c| {
                if c == r + j {
                    top_coefficient(p, j, r as i64 + 1)
                } else {
                    qi(0)
                }
            });
            for m in (-(j as i64)..=(j as i64)).rev() {
                let next = em.commutator(&cur).expect("square");
                mats[flat_index(j, m)] = cur;
                cur = next;
            }
        }
        let eta = (0..p).map(|j| eta_closed(p, j)).collect();
        let cg_rows = (0..p * p * p * p).map(|_| OnceLock::new()).collect();
        Ok(GlpBasis { p, mats, eta, cg_rows })
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn in_range(&self, j: usize, m: i64) -> bool {
        j < self.p && m.unsigned_abs() as usize <= j
    }

    fn check(&self, j: usize, m: i64) -> Result<()> {
        if self.in_range(j, m) {
            Ok(())
        } else {
            Err(Error::OutOfRange(format!("(j={j}, m={m}) for p={}", self.p)))
        }
    }

    pub fn matrix(&self, j: usize, m: i64) -> Result<&Matrix<Scalar>> {
        self.check(j, m)?;
        Ok(&self.mats[flat_index(j, m)])
    }

    /// Unchecked access for internal loops.
    pub fn mat(&self, j: usize, m: i64) -> &Matrix<Scalar> {
        &self.mats[flat_index(j, m)]
    }

    pub fn eta(&self, j: usize) -> &Scalar {
        &self.eta[j]
    }

    /// Every (j, m) pair, ordered by j then m.
    pub fn labels(&self) -> Vec<(usize, i64)> {
        (0..self.p).flat_map(|j| (-(j as i64)..=(j as i64)).map(move |m| (j, m))).collect()
    }

    fn cg_row(&self, j: usize, m: i64, l: usize, n: i64) -> &[Scalar] {
        let p = self.p;
        let key = flat_index(j, m) * p * p + flat_index(l, n);
        self.cg_rows[key].get_or_init(|| {
            let prod = self.mat(j, m).dot(self.mat(l, n));
            let s = m + n;
            (0..p)
                .map(|r| {
                    if s.unsigned_abs() as usize > r {
                        return qi(0);
                    }
                    let t = prod.dot(self.mat(r, -s)).trace();
                    t * sign(s) / &self.eta[r]
                })
                .collect()
        })
    }

    /// <j,m; l,n | r,s>; zero unless s = m + n.
    pub fn cg(&self, j: usize, m: i64, l: usize, n: i64, r: usize, s: i64) -> Result<Scalar> {
        self.check(j, m)?;
        self.check(l, n)?;
        self.check(r, s)?;
        Ok(self.coeff(j, m, l, n, r, s))
    }

    /// Unchecked variant of [`GlpBasis::cg`].
    pub fn coeff(&self, j: usize, m: i64, l: usize, n: i64, r: usize, s: i64) -> Scalar {
        if s != m + n {
            return qi(0);
        }
        self.cg_row(j, m, l, n)[r].clone()
    }

    /// Nonzero (r, <j,m;l,n|r,m+n>) pairs.
    pub fn product_terms(&self, j: usize, m: i64, l: usize, n: i64) -> Vec<(usize, Scalar)> {
        self.cg_row(j, m, l, n)
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(r, c)| (r, c.clone()))
            .collect()
    }

    /// Coordinates of an arbitrary p x p matrix on the M basis.
    pub fn expand(&self, x: &Matrix<Scalar>) -> Vec<(usize, i64, Scalar)> {
        self.labels()
            .into_iter()
            .filter_map(|(j, m)| {
                let c = x.dot(self.mat(j, -m)).trace() * sign(m) / &self.eta[j];
                (!c.is_zero()).then_some((j, m, c))
            })
            .collect()
    }

    /// The constant c with M_{jm}^T = c M_{j,-m}.
    pub fn transpose_factor(&self, j: usize, m: i64) -> Scalar {
        let t = self.mat(j, m).transpose();
        let target = self.mat(j, -m);
        let (pos, v) = target.entries().find(|(_, v)| !v.is_zero()).expect("basis element is nonzero");
        let c = &t[pos] / v;
        debug_assert_eq!(target.scale(&c), t);
        c
    }
}

/// A gl(Np) basis label Upsilon^{jm}_{ab}, with 1-based a, b.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UpsIdx {
    pub a: usize,
    pub b: usize,
    pub j: usize,
    pub m: i64,
}

impl UpsIdx {
    pub fn new(a: usize, b: usize, j: usize, m: i64) -> UpsIdx {
        UpsIdx { a, b, j, m }
    }

    pub fn current(&self) -> Gen {
        Gen::j(self.a, self.b, self.j, self.m)
    }
}

/// Abstract commutator [Ups^{jm}_{ab}, Ups^{ln}_{cd}] on the basis.
pub fn glnp_commutator(n: usize, basis: &GlpBasis, x: UpsIdx, y: UpsIdx) -> Result<Vec<(UpsIdx, Scalar)>> {
    for u in [x, y] {
        if !(1..=n).contains(&u.a) || !(1..=n).contains(&u.b) {
            return Err(Error::OutOfRange(format!("gl(N) index in {u:?} for N={n}")));
        }
        basis.check(u.j, u.m)?;
    }
    let s = x.m + y.m;
    let mut out: Vec<(UpsIdx, Scalar)> = Vec::new();
    let mut push = |u: UpsIdx, c: Scalar| {
        if c.is_zero() {
            return;
        }
        if let Some(e) = out.iter_mut().find(|(v, _)| *v == u) {
            e.1 += c;
        } else {
            out.push((u, c));
        }
    };
    if x.b == y.a {
        for (r, c) in basis.product_terms(x.j, x.m, y.j, y.m) {
            push(UpsIdx::new(x.a, y.b, r, s), c);
        }
    }
    if x.a == y.b {
        for (r, c) in basis.product_terms(y.j, y.m, x.j, x.m) {
            push(UpsIdx::new(y.a, x.b, r, s), -c);
        }
    }
    out.retain(|(_, c)| !c.is_zero());
    out.sort_by_key(|a| a.0);
    Ok(out)
}

/// Fundamental representation E_ab (x) M_{jm}; row (a, k) sits at (a-1)p + k-1.
pub fn fundamental(n: usize, basis: &GlpBasis, x: UpsIdx) -> Matrix<Scalar> {
    Matrix::unit(n, x.a - 1, x.b - 1).kron(basis.mat(x.j, x.m))
}

/// Lie-Poisson bracket of the currents J^{ab}_{jm}, read off the commutator.
pub fn current_bracket(n: usize, basis: &GlpBasis, x: &Gen, y: &Gen) -> PolyW {
    let ux = UpsIdx::new(x.ai(), x.bi(), x.mode(), x.m as i64);
    let uy = UpsIdx::new(y.ai(), y.bi(), y.mode(), y.m as i64);
    let mut out = PolyW::zero();
    for (u, c) in glnp_commutator(n, basis, ux, uy).expect("valid current labels") {
        out.add_scaled(&PolyW::var(u.current()), &c);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_algebra::scalar::q;

    #[test]
    fn sl2_triple_relations() {
        for p in 1..=5 {
            let (ep, em, e0) = (e_plus(p), e_minus(p), e_zero(p));
            assert_eq!(ep.commutator(&em).unwrap(), e0);
            assert_eq!(e0.commutator(&ep).unwrap(), ep);
            assert_eq!(e0.commutator(&em).unwrap(), em.neg());
            let b = GlpBasis::new(p).unwrap();
            if p >= 2 {
                assert_eq!(ep.scale(&qi(2)), *b.mat(1, 1));
                assert_eq!(em.scale(&qi(-2)), *b.mat(1, -1));
                assert_eq!(e0.scale(&qi(-2)), *b.mat(1, 0));
            }
        }
    }

    #[test]
    fn multiplet_structure() {
        for p in 1..=5 {
            let b = GlpBasis::new(p).unwrap();
            let (ep, e0) = (e_plus(p), e_zero(p));
            for (j, m) in b.labels() {
                let mm = b.mat(j, m);
                assert_eq!(e0.commutator(mm).unwrap(), mm.scale(&qi(m)), "weight of M_{j},{m}");
                let up = ep.commutator(mm).unwrap();
                let want = if m < j as i64 {
                    let c = Scalar::new(((j * (j + 1)) as i64 - m * (m + 1)).into(), 2.into());
                    b.mat(j, m + 1).scale(&c)
                } else {
                    Matrix::zeros(p, p)
                };
                assert_eq!(up, want, "raising M_{j},{m} at p={p}");
            }
            // M_jj = 2^j e_+^j
            for j in 0..p {
                assert_eq!(*b.mat(j, j as i64), ep.pow(j as u32).scale(&qi(1 << j)));
            }
        }
    }

    #[test]
    fn scalar_product_is_diagonal() {
        for p in 1..=5 {
            let b = GlpBasis::new(p).unwrap();
            for (j, m) in b.labels() {
                for (l, n) in b.labels() {
                    let t = b.mat(j, m).dot(b.mat(l, n)).trace();
                    let want = if j == l && m + n == 0 { sign(m) * b.eta(j) } else { qi(0) };
                    assert_eq!(t, want);
                }
            }
        }
    }

    #[test]
    fn eta_small_values() {
        // traces computed by hand: p=2 gives tr(1)=2 and tr(M_11 M_1-1) = -2
        assert_eq!(eta_closed(2, 0), qi(2));
        assert_eq!(eta_closed(2, 1), qi(2));
        assert_eq!(eta_closed(3, 1), qi(2 * 4));
        assert_eq!(eta_closed(1, 1), qi(0));
    }

    #[test]
    fn coefficients_reconstruct_products() {
        for p in 1..=4 {
            let b = GlpBasis::new(p).unwrap();
            for (j, m) in b.labels() {
                for (l, n) in b.labels() {
                    let mut acc = Matrix::zeros(p, p);
                    for (r, c) in b.product_terms(j, m, l, n) {
                        acc = acc.plus(&b.mat(r, m + n).scale(&c));
                    }
                    assert_eq!(acc, b.mat(j, m).dot(b.mat(l, n)));
                }
            }
        }
    }

    #[test]
    fn cg_rejects_bad_labels() {
        let b = GlpBasis::new(3).unwrap();
        assert!(matches!(b.cg(3, 0, 0, 0, 0, 0), Err(Error::OutOfRange(_))));
        assert!(matches!(b.cg(1, 2, 0, 0, 0, 0), Err(Error::OutOfRange(_))));
        assert_eq!(b.cg(1, 1, 1, -1, 0, 0).unwrap(), b.coeff(1, 1, 1, -1, 0, 0));
        assert_eq!(b.cg(0, 0, 1, 1, 1, 1).unwrap(), qi(1));
        assert_eq!(b.coeff(1, 1, 1, 0, 1, 0), qi(0));
        assert_eq!(q(1, 1), qi(1));
    }

    #[test]
    fn gl_n_subalgebra_of_j0() {
        let b = GlpBasis::new(3).unwrap();
        let c = glnp_commutator(2, &b, UpsIdx::new(1, 2, 0, 0), UpsIdx::new(2, 1, 0, 0)).unwrap();
        assert_eq!(c, vec![(UpsIdx::new(1, 1, 0, 0), qi(1)), (UpsIdx::new(2, 2, 0, 0), qi(-1))]);
        assert!(glnp_commutator(2, &b, UpsIdx::new(3, 1, 0, 0), UpsIdx::new(1, 1, 0, 0)).is_err());
    }

    #[test]
    fn abstract_commutator_matches_fundamental() {
        for (n, p) in [(1, 3), (2, 2), (2, 3)] {
            let b = GlpBasis::new(p).unwrap();
            let labels: Vec<UpsIdx> = b
                .labels()
                .into_iter()
                .flat_map(|(j, m)| (1..=n).flat_map(move |a| (1..=n).map(move |c| UpsIdx::new(a, c, j, m))))
                .collect();
            for x in &labels {
                for y in &labels {
                    let lhs = fundamental(n, &b, *x).commutator(&fundamental(n, &b, *y)).unwrap();
                    let mut rhs = Matrix::zeros(n * p, n * p);
                    for (u, c) in glnp_commutator(n, &b, *x, *y).unwrap() {
                        rhs = rhs.plus(&fundamental(n, &b, u).scale(&c));
                    }
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }
}
