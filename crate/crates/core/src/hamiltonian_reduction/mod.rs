//! Hamiltonian reduction of the gl(Np) current algebra to W_p(N): the
//! Dirac-bracket route and the soldering route, plus the change of
//! normalization relating them.

pub mod closed_forms;
pub mod dirac;
pub mod soldering;

use crate::exact_algebra::scalar::sign;
use crate::exact_algebra::{BracketTable, Ctx, Family, Gen, PolyW, Scalar};
use crate::glnp_basis::GlpBasis;

pub use dirac::DiracSystem;
pub use soldering::{solder_solve, SolderingSolution, WAlgebra};

/// kappa_j with W_j(Dirac) = kappa_j W_j(soldering).
///
/// The Dirac slice pins J_{1,-1} to the identity while the soldering gauge
/// uses e_- = c M_{1,-1}; kappa_j = t^j c_jj (-1)^j eta_j with
/// t = c_{1,-1} eta_1 / 2 and c the transpose factors of the basis.
pub fn normalization_factors(basis: &GlpBasis) -> Vec<Scalar> {
    let p = basis.p();
    let t = if p >= 2 {
        basis.transpose_factor(1, -1) * basis.eta(1) / Scalar::from_integer(2.into())
    } else {
        Scalar::from_integer(1.into())
    };
    let mut tj = Scalar::from_integer(1.into());
    (0..p)
        .map(|j| {
            let k = &tj * basis.transpose_factor(j, j as i64) * sign(j as i64) * basis.eta(j);
            tj = &tj * &t;
            k
        })
        .collect()
}

/// Rewrites a polynomial in Dirac-normalized W_j as one in soldering W_j.
pub fn dirac_to_soldering(x: &PolyW, kappa: &[Scalar]) -> PolyW {
    x.substitute(|g| match g.family {
        Family::W => Some(PolyW::var(*g).scale(&kappa[g.mode()])),
        _ => None,
    })
}

/// First generator pair where the Dirac table, transported by the
/// normalization map, differs from the soldering table.
pub fn compare_routes(ctx: &Ctx, dirac: &BracketTable, solder: &BracketTable, kappa: &[Scalar]) -> Option<(Gen, Gen)> {
    for x in ctx.w_gens() {
        for y in ctx.w_gens() {
            let lhs = dirac_to_soldering(&dirac.get(&x, &y), kappa);
            let rhs = solder.get(&x, &y).scale(&(&kappa[x.mode()] * &kappa[y.mode()]));
            if lhs != rhs {
                return Some((x, y));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests;
