//! The center of W_p(N) from the characteristic polynomial of the
//! gauge-fixed current, the bookkeeping of the central quotient tower, and
//! Chevalley cochains for the deformation of the truncated loop algebra.

pub mod cochain;
#[cfg(feature = "cherednik")]
pub mod generating_function;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exact_algebra::matrix::charpoly;
use crate::exact_algebra::scalar::{qi, sign};
use crate::exact_algebra::{Ctx, Gen, GeneratorBracket, Matrix, PolyW, Scalar};
use crate::glnp_basis::GlpBasis;
use crate::hamiltonian_reduction::soldering::gauge_fixed_current;
use crate::hamiltonian_reduction::WAlgebra;
use crate::{Error, Result};

pub use cochain::{
    adjoint_casimir, chevalley_delta, coboundary_trivialize, deformation_check, deformation_cochain,
    reconstruct_from_low_modes, Cochain, DeformationReport, TransformedBracket,
};

/// C_1..C_{Np} with det(J_gf - x I) = (-1)^{Np} x^{Np} + sum_n C_{Np-n} x^n.
#[derive(Clone, Debug)]
pub struct CasimirSet {
    pub ctx: Ctx,
    pub elements: Vec<PolyW>,
}

pub fn casimirs_from_det(ctx: &Ctx) -> Result<CasimirSet> {
    let basis = GlpBasis::new(ctx.p)?;
    let current = gauge_fixed_current(ctx, &basis);
    let size = ctx.n * ctx.p;
    // charpoly gives det(x I - J) = sum_k c_k x^{Np-k}
    let c = charpoly(&current);
    let s = sign(size as i64);
    let elements = (1..=size).map(|k| c[k].scale(&s)).collect();
    Ok(CasimirSet { ctx: *ctx, elements })
}

impl CasimirSet {
    /// First (element index, generator) pair with a nonzero bracket.
    pub fn first_non_central(&self, w: &WAlgebra) -> Option<(usize, Gen)> {
        for (k, c) in self.elements.iter().enumerate() {
            for g in self.ctx.w_gens() {
                if !w.bracket(c, &PolyW::var(g)).is_zero() {
                    return Some((k + 1, g));
                }
            }
        }
        None
    }

    /// Rank of the Jacobian d C_k / d W at a point.
    pub fn jacobian_rank_at(&self, point: &[(Gen, Scalar)]) -> usize {
        let gens = self.ctx.w_gens();
        let value = |p: &PolyW| {
            p.eval(|g| point.iter().find(|(h, _)| h == g).map(|(_, v)| v.clone())).expect("point covers every generator")
        };
        let m = Matrix::<Scalar>::from_fn(self.elements.len(), gens.len(), |k, i| {
            value(&self.elements[k].derivative(&gens[i]))
        });
        m.rank()
    }

    /// Jacobian rank at seeded random rational points; retries a few draws
    /// before accepting a lower rank.
    pub fn generic_jacobian_rank(&self, seed: u64) -> usize {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut best = 0;
        for _ in 0..4 {
            let point: Vec<(Gen, Scalar)> = self
                .ctx
                .w_gens()
                .into_iter()
                .map(|g| (g, Scalar::new(rng.gen_range(-20i64..=20).into(), rng.gen_range(1i64..=7).into())))
                .collect();
            best = best.max(self.jacobian_rank_at(&point));
            if best == self.elements.len() {
                break;
            }
        }
        best
    }

    /// Degree-one part of C_k.
    pub fn linear_part(&self, k: usize) -> PolyW {
        self.elements[k - 1].filter(|m| m.degree() == 1)
    }

    /// For k <= p the linear part of C_k is a nonzero multiple of
    /// sum_a W^{aa}_{k-1}; beyond p it vanishes. Returns the multiples.
    pub fn leading_multiples(&self) -> Option<Vec<Scalar>> {
        let (n, p) = (self.ctx.n, self.ctx.p);
        let mut out = Vec::new();
        for k in 1..=self.elements.len() {
            let lin = self.linear_part(k);
            if k > p {
                if !lin.is_zero() {
                    return None;
                }
                continue;
            }
            let trace: PolyW = (1..=n).fold(PolyW::zero(), |acc, a| acc + PolyW::var(Gen::w(a, a, k - 1)));
            let c = lin.coefficient(&crate::exact_algebra::Monomial::var(Gen::w(1, 1, k - 1)));
            if c == qi(0) || lin != trace.scale(&c) {
                return None;
            }
            out.push(c);
        }
        Some(out)
    }
}

/// Central generators surviving in the quotient by d_1..d_r: indices
/// r+1..=Np.
pub fn center_tower(ctx: &Ctx, r: usize) -> Result<Vec<usize>> {
    let top = ctx.n * ctx.p;
    if r > top {
        return Err(Error::OutOfRange(format!("r = {r} exceeds Np = {top}")));
    }
    Ok((r + 1..=top).collect())
}
