//! Residual gauge transformations preserving the highest-weight gauge
//! J = 1 (x) e_- + sum_j W_j (x) M_jj, and the W-algebra bracket they
//! induce.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::exact_algebra::scalar::sign;
use crate::exact_algebra::{BracketTable, Ctx, Family, Gen, GeneratorBracket, Matrix, PolyW};
use crate::glnp_basis::GlpBasis;

/// N x N matrix of the W_j generators.
pub fn w_matrix(n: usize, j: usize) -> Matrix<PolyW> {
    Matrix::from_fn(n, n, |a, b| PolyW::var(Gen::w(a + 1, b + 1, j)))
}

/// N x N matrix of the free gauge parameters lambda_{k,-k}.
pub fn free_lambda(n: usize, k: usize) -> Matrix<PolyW> {
    Matrix::from_fn(n, n, |a, b| PolyW::var(Gen::lambda(a + 1, b + 1, k, -(k as i64))))
}

/// All gauge parameters expressed through the free ones.
#[derive(Clone, Debug)]
pub struct SolderingSolution {
    pub ctx: Ctx,
    /// lambda_{j,m}, keyed by (j, m).
    pub lambda: BTreeMap<(usize, i64), Matrix<PolyW>>,
    /// delta W_j, the M_jj component of [lambda, J_gf].
    pub delta_w: Vec<Matrix<PolyW>>,
}

/// sum over (k, l, r) of lambda_{kl} W_r <k,l;r,r|j,m> - W_r lambda_{kl} <r,r;k,l|j,m>
fn gauge_component(
    basis: &GlpBasis,
    lambda: &BTreeMap<(usize, i64), Matrix<PolyW>>,
    w: &[Matrix<PolyW>],
    j: usize,
    m: i64,
) -> Matrix<PolyW> {
    let n = w[0].rows();
    let mut acc = Matrix::<PolyW>::zeros(n, n);
    for (&(k, l), lam) in lambda {
        for (r, wr) in w.iter().enumerate() {
            if l + r as i64 != m {
                continue;
            }
            let left = basis.coeff(k, l, r, r as i64, j, m);
            let right = basis.coeff(r, r as i64, k, l, j, m);
            if !left.is_zero() {
                acc.add_assign(&lam.dot(wr).scale(&left));
            }
            if !right.is_zero() {
                acc.add_assign(&wr.dot(lam).scale(&-right));
            }
        }
    }
    acc
}

/// Solves the residual-gauge system by ascending grade j + m.
pub fn solder_solve(ctx: &Ctx, basis: &GlpBasis) -> SolderingSolution {
    let (n, p) = (ctx.n, ctx.p);
    let w: Vec<Matrix<PolyW>> = (0..p).map(|j| w_matrix(n, j)).collect();
    let mut lambda: BTreeMap<(usize, i64), Matrix<PolyW>> = BTreeMap::new();
    for k in 0..p {
        lambda.insert((k, -(k as i64)), free_lambda(n, k));
    }
    for grade in 1..(2 * p as i64 - 1) {
        let mut fresh = Vec::new();
        for j in 0..p {
            let m1 = grade - j as i64;
            if m1 <= -(j as i64) || m1 > j as i64 {
                continue;
            }
            // component along M_{j,m1-1} of [lambda, J_gf] must vanish
            fresh.push(((j, m1), gauge_component(basis, &lambda, &w, j, m1 - 1)));
        }
        lambda.extend(fresh);
    }
    let delta_w = (0..p).map(|j| gauge_component(basis, &lambda, &w, j, j as i64)).collect();
    SolderingSolution { ctx: *ctx, lambda, delta_w }
}

/// {W^{ba}_k, W^{cd}_j} read off as (-1)^k / eta_k times the coefficient
/// of lambda^{ab}_{k,-k} in delta W^{cd}_j.
pub fn extract_bracket(sol: &SolderingSolution, basis: &GlpBasis, k: usize, b: usize, a: usize, j: usize, c: usize, d: usize) -> PolyW {
    let lam = Gen::lambda(a, b, k, -(k as i64));
    let dw = &sol.delta_w[j][(c - 1, d - 1)];
    dw.derivative(&lam).scale(&(sign(k as i64) / basis.eta(k)))
}

/// W_p(N) with its generator bracket computed by soldering.
#[derive(Clone, Debug)]
pub struct WAlgebra {
    ctx: Ctx,
    table: BracketTable,
}

impl WAlgebra {
    pub fn new(ctx: Ctx) -> WAlgebra {
        let basis = GlpBasis::new(ctx.p).expect("p >= 1");
        Self::with_basis(ctx, &basis)
    }

    pub fn with_basis(ctx: Ctx, basis: &GlpBasis) -> WAlgebra {
        let sol = solder_solve(&ctx, basis);
        let table = BracketTable::from_fn(ctx.w_gens(), |x, y| {
            extract_bracket(&sol, basis, x.mode(), x.ai(), x.bi(), y.mode(), y.ai(), y.bi())
        });
        WAlgebra { ctx, table }
    }

    /// Both orderings of every pair, to test antisymmetry of the raw
    /// extraction. Returns the first offending pair.
    pub fn raw_antisymmetry_defect(ctx: &Ctx, basis: &GlpBasis) -> Option<(Gen, Gen)> {
        let sol = solder_solve(ctx, basis);
        let gens = ctx.w_gens();
        for x in &gens {
            for y in &gens {
                let xy = extract_bracket(&sol, basis, x.mode(), x.ai(), x.bi(), y.mode(), y.ai(), y.bi());
                let yx = extract_bracket(&sol, basis, y.mode(), y.ai(), y.bi(), x.mode(), x.ai(), x.bi());
                if !(&xy + &yx).is_zero() {
                    return Some((*x, *y));
                }
            }
        }
        None
    }

    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    pub fn table(&self) -> &BracketTable {
        &self.table
    }

    pub fn w(&self, a: usize, b: usize, j: usize) -> PolyW {
        if j >= self.ctx.p {
            PolyW::zero()
        } else {
            PolyW::var(Gen::w(a, b, j))
        }
    }
}

impl GeneratorBracket for WAlgebra {
    fn gen_bracket(&self, x: &Gen, y: &Gen) -> PolyW {
        self.table.get(x, y)
    }
}

/// The gauge-fixed current as an Np x Np matrix over polynomials, with
/// rows ordered (a, k) -> (a-1)p + k-1.
pub fn gauge_fixed_current(ctx: &Ctx, basis: &GlpBasis) -> Matrix<PolyW> {
    let (n, p) = (ctx.n, ctx.p);
    let em = crate::glnp_basis::e_minus(p).map(|x| PolyW::constant(x.clone()));
    let mut out = Matrix::<PolyW>::identity(n).kron(&em);
    for j in 0..p {
        let mjj = basis.mat(j, j as i64).map(|x| PolyW::constant(x.clone()));
        for a in 1..=n {
            for b in 1..=n {
                let e = Matrix::<PolyW>::from_fn(n, n, |i, k| {
                    if i == a - 1 && k == b - 1 {
                        PolyW::var(Gen::w(a, b, j))
                    } else {
                        PolyW::zero()
                    }
                });
                out.add_assign(&e.kron(&mjj));
            }
        }
    }
    out
}

/// Grading check: every term of lambda_{j,m} has the form
/// lambda_{k,-k} W_{r1}..W_{rn} with -k + sum(r_i + 1) = m.
pub fn weight_homogeneous(sol: &SolderingSolution) -> bool {
    sol.lambda.iter().all(|(&(_, m), mat)| {
        mat.entries().all(|(_, poly)| {
            poly.terms().all(|(mono, _)| {
                let mut wt = 0i64;
                let mut lambdas = 0;
                for (g, e) in mono.factors() {
                    match g.family {
                        Family::Lambda => {
                            wt += g.m as i64 * *e as i64;
                            lambdas += e;
                        }
                        _ => wt += (g.mode as i64 + 1) * *e as i64,
                    }
                }
                lambdas == 1 && wt == m
            })
        })
    })
}
