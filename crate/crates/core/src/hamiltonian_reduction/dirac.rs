//! Second-class constraints on the gl(Np) currents and the Dirac bracket
//! they induce on the highest-weight gauge slice.

use crate::exact_algebra::{Ctx, Family, Gen, GeneratorBracket, Matrix, Monomial, PolyW, Scalar};
use crate::glnp_basis::{current_bracket, GlpBasis};
use crate::{Error, Result};

/// The free current algebra gl(Np) (x) with its Lie-Poisson bracket.
pub struct CurrentAlgebra<'a> {
    pub n: usize,
    pub basis: &'a GlpBasis,
}

impl GeneratorBracket for CurrentAlgebra<'_> {
    fn gen_bracket(&self, x: &Gen, y: &Gen) -> PolyW {
        current_bracket(self.n, self.basis, x, y)
    }
}

/// Formal inverse of hbar, used while expanding the hbar-deformed bracket.
pub fn hbar_inv() -> Gen {
    Gen::aux(1)
}

/// Cancels hbar * hbar_inv in every monomial.
pub fn reduce_laurent(x: &PolyW) -> PolyW {
    let (h, y) = (Gen::hbar(), hbar_inv());
    let mut out = PolyW::zero();
    for (mono, c) in x.terms() {
        let (eh, rest) = mono.strip(&h);
        let (ey, rest) = rest.strip(&y);
        let common = eh.min(ey);
        let mut m = rest;
        for _ in 0..(eh - common) {
            m = m.mul(&Monomial::var(h));
        }
        for _ in 0..(ey - common) {
            m = m.mul(&Monomial::var(y));
        }
        out.add_term(m, c.clone());
    }
    out
}

/// Constraints J_{jm}, m < j, ordered by (j, m, a, b).
pub fn constraint_gens(ctx: &Ctx) -> Vec<Gen> {
    let mut out = Vec::new();
    for j in 1..ctx.p {
        for m in -(j as i64)..(j as i64) {
            for a in 1..=ctx.n {
                for b in 1..=ctx.n {
                    out.push(Gen::j(a, b, j, m));
                }
            }
        }
    }
    out
}

/// Value of a current on the constraint surface: J_{1,-1} = pin * 1,
/// the other constrained currents vanish, and J_{jj} becomes W_j.
pub fn surface_value(g: &Gen, pin: &PolyW) -> Option<PolyW> {
    if g.family != Family::J {
        return None;
    }
    let (j, m) = (g.mode as i64, g.m as i64);
    Some(if m == j {
        PolyW::var(Gen::w(g.ai(), g.bi(), g.mode()))
    } else if j == 1 && m == -1 && g.a == g.b {
        pin.clone()
    } else {
        PolyW::zero()
    })
}

pub fn on_surface(x: &PolyW, pin: &PolyW) -> PolyW {
    x.substitute(|g| surface_value(g, pin))
}

/// Constraint data for one (N, p).
pub struct DiracSystem {
    ctx: Ctx,
    basis: GlpBasis,
    constraints: Vec<Gen>,
    /// Constant part of Delta, proportional to the pinned J_{1,-1}.
    d0: Matrix<Scalar>,
    d0_inv: Matrix<Scalar>,
    /// Remaining part of Delta, linear in W.
    rest: Matrix<PolyW>,
    /// -d0^{-1} rest; nilpotent.
    hat: Matrix<PolyW>,
}

impl DiracSystem {
    pub fn new(ctx: Ctx) -> Result<DiracSystem> {
        let basis = GlpBasis::new(ctx.p)?;
        let constraints = constraint_gens(&ctx);
        let k = constraints.len();
        let one = PolyW::one();
        let full = Matrix::<PolyW>::from_fn(k, k, |x, y| {
            on_surface(&current_bracket(ctx.n, &basis, &constraints[x], &constraints[y]), &one)
        });
        let d0 = full.map(|e| e.constant_term());
        let rest = full.map(|e| e.filter(|m| !m.is_one()));
        let d0_inv = d0
            .inverse()
            .map_err(|_| Error::Degenerate("constraint matrix is not invertible".into()))?;
        let hat = d0_inv.map(|x| PolyW::constant(x.clone())).dot(&rest).neg();
        Ok(DiracSystem { ctx, basis, constraints, d0, d0_inv, rest, hat })
    }

    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    pub fn basis(&self) -> &GlpBasis {
        &self.basis
    }

    pub fn constraints(&self) -> &[Gen] {
        &self.constraints
    }

    pub fn currents(&self) -> CurrentAlgebra<'_> {
        CurrentAlgebra { n: self.ctx.n, basis: &self.basis }
    }

    /// Delta restricted to the surface with J_{1,-1} pinned to `pin`.
    pub fn delta(&self, pin: &PolyW) -> Matrix<PolyW> {
        self.d0.map(|x| pin.scale(x)).plus(&self.rest)
    }

    pub fn delta_constant(&self) -> &Matrix<Scalar> {
        &self.d0
    }

    pub fn delta_hat(&self) -> &Matrix<PolyW> {
        &self.hat
    }

    /// Smallest n with hat^n = 0, searched up to the matrix size.
    pub fn nilpotency_index(&self) -> Option<usize> {
        let k = self.constraints.len();
        if k == 0 {
            return Some(0);
        }
        let mut pw = Matrix::<PolyW>::identity(k);
        for n in 1..=k + 1 {
            pw = pw.dot(&self.hat);
            if pw.is_zero() {
                return Some(n);
            }
        }
        None
    }

    /// sum_n weight^{n+1} hat^n d0^{-1}, with the weight 1 for the plain
    /// constraints and hbar for the deformed ones.
    fn inverse_series(&self, weight: &PolyW) -> Matrix<PolyW> {
        let k = self.constraints.len();
        let base = self.d0_inv.map(|x| PolyW::constant(x.clone()));
        let mut term = base.scale_by(weight);
        let mut acc = Matrix::<PolyW>::zeros(k, k);
        while !term.is_zero() {
            acc.add_assign(&term);
            term = self.hat.dot(&term).scale_by(weight);
        }
        acc
    }

    pub fn delta_bar(&self) -> Matrix<PolyW> {
        self.inverse_series(&PolyW::one())
    }

    pub fn delta_bar_hbar(&self) -> Matrix<PolyW> {
        self.inverse_series(&PolyW::var(Gen::hbar()))
    }

    fn dirac_with(&self, x: &PolyW, y: &PolyW, pin: &PolyW, inv: &Matrix<PolyW>) -> PolyW {
        let cur = self.currents();
        let k = self.constraints.len();
        let phis: Vec<PolyW> = self.constraints.iter().map(|g| PolyW::var(*g)).collect();
        let left: Vec<PolyW> = phis.iter().map(|f| on_surface(&cur.bracket(x, f), pin)).collect();
        let right: Vec<PolyW> = phis.iter().map(|f| on_surface(&cur.bracket(f, y), pin)).collect();
        let mut out = on_surface(&cur.bracket(x, y), pin);
        for a in 0..k {
            if left[a].is_zero() {
                continue;
            }
            for b in 0..k {
                if inv[(a, b)].is_zero() || right[b].is_zero() {
                    continue;
                }
                out = &out - &(&(&left[a] * &inv[(a, b)]) * &right[b]);
            }
        }
        reduce_laurent(&out)
    }

    /// {X, Y}* for polynomials in the currents, expressed in the W_j.
    pub fn dirac_bracket(&self, x: &PolyW, y: &PolyW) -> PolyW {
        self.dirac_with(x, y, &PolyW::one(), &self.delta_bar())
    }

    /// Dirac bracket for the constraint J_{1,-1} = 1/hbar, as a Laurent
    /// polynomial in hbar (negative powers carried by `hbar_inv`).
    pub fn dirac_bracket_hbar(&self, x: &PolyW, y: &PolyW) -> PolyW {
        self.dirac_with(x, y, &PolyW::var(hbar_inv()), &self.delta_bar_hbar())
    }

    /// Dirac bracket table on W^{ab}_j = J^{ab}_{jj}.
    pub fn w_table(&self) -> crate::exact_algebra::BracketTable {
        let inv = self.delta_bar();
        let one = PolyW::one();
        crate::exact_algebra::BracketTable::from_fn(self.ctx.w_gens(), |x, y| {
            let jx = PolyW::var(Gen::j(x.ai(), x.bi(), x.mode(), x.mode() as i64));
            let jy = PolyW::var(Gen::j(y.ai(), y.bi(), y.mode(), y.mode() as i64));
            self.dirac_with(&jx, &jy, &one, &inv)
        })
    }
}

/// Extracts the coefficient of hbar^k (k may be negative) from a Laurent
/// polynomial produced by `dirac_bracket_hbar`.
pub fn hbar_coefficient(x: &PolyW, k: i64) -> PolyW {
    let (h, y) = (Gen::hbar(), hbar_inv());
    x.filter(|m| m.exponent(&h) as i64 - m.exponent(&y) as i64 == k)
        .substitute(|g| if *g == h || *g == y { Some(PolyW::one()) } else { None })
}

/// Lowest hbar power present, or None for the zero polynomial.
pub fn min_hbar_power(x: &PolyW) -> Option<i64> {
    let (h, y) = (Gen::hbar(), hbar_inv());
    x.terms().map(|(m, _)| m.exponent(&h) as i64 - m.exponent(&y) as i64).min()
}
