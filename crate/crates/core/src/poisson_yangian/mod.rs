//! Truncated Poisson Yangian Y_p(N) on the modes T^{ij}_n (1 <= n <= p),
//! its hbar grading, and the ordered quantum relations used by the
//! representation checks.

mod quantum;

use crate::error::{Error, Result};
use crate::exact_algebra::{BracketTable, Ctx, Family, Gen, GeneratorBracket, Monomial, PolyW};

pub use quantum::{quantum_commutator_rhs, tail_reorder, NcPoly};

/// T^{ij}_n as a polynomial: T_0 = delta, modes above `cap` vanish.
pub fn t_mode(i: usize, j: usize, n: usize, cap: usize) -> PolyW {
    if n == 0 {
        return if i == j { PolyW::one() } else { PolyW::zero() };
    }
    if n > cap {
        return PolyW::zero();
    }
    PolyW::var(Gen::t(i, j, n))
}

/// sum_{r<min(m,n)} (T^{kj}_r T^{il}_{m+n-1-r} - T^{kj}_{m+n-1-r} T^{il}_r)
/// with modes above `cap` set to zero.
pub fn bracket_components(i: usize, j: usize, m: usize, k: usize, l: usize, n: usize, cap: usize) -> PolyW {
    let mut out = PolyW::zero();
    let top = m + n - 1;
    for r in 0..m.min(n) {
        let a = &t_mode(k, j, r, cap) * &t_mode(i, l, top - r, cap);
        let b = &t_mode(k, j, top - r, cap) * &t_mode(i, l, r, cap);
        out = &out + &(&a - &b);
    }
    out
}

fn t_labels(x: &Gen) -> (usize, usize, usize) {
    (x.ai(), x.bi(), x.mode())
}

/// The truncated Poisson bracket of two mode generators.
pub fn pb_yangian(ctx: &Ctx, x: &Gen, y: &Gen) -> Result<PolyW> {
    for g in [x, y] {
        if g.family != Family::T {
            return Err(Error::ContextMismatch(format!("{g} is not a Yangian mode")));
        }
        if !ctx.admits(g) {
            return Err(Error::OutOfRange(format!("{g} for N={}, p={}", ctx.n, ctx.p)));
        }
    }
    let ((i, j, m), (k, l, n)) = (t_labels(x), t_labels(y));
    Ok(bracket_components(i, j, m, k, l, n, ctx.p))
}

/// The untruncated bracket, keeping modes up to `cap`.
pub fn pb_untruncated(x: &Gen, y: &Gen, cap: usize) -> PolyW {
    let ((i, j, m), (k, l, n)) = (t_labels(x), t_labels(y));
    bracket_components(i, j, m, k, l, n, cap)
}

/// Y_p(N) with its generator bracket tabulated.
#[derive(Clone, Debug)]
pub struct PoissonYangian {
    ctx: Ctx,
    table: BracketTable,
}

impl PoissonYangian {
    pub fn new(ctx: Ctx) -> PoissonYangian {
        let table = BracketTable::from_fn(ctx.t_gens(), |x, y| pb_yangian(&ctx, x, y).expect("valid modes"));
        PoissonYangian { ctx, table }
    }

    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    pub fn table(&self) -> &BracketTable {
        &self.table
    }

    /// T^{ij}_n with the truncation applied.
    pub fn t(&self, i: usize, j: usize, n: usize) -> PolyW {
        t_mode(i, j, n, self.ctx.p)
    }
}

impl GeneratorBracket for PoissonYangian {
    fn gen_bracket(&self, x: &Gen, y: &Gen) -> PolyW {
        self.table.get(x, y)
    }
}

/// Whether {T_m, T_q} with m <= p < q lands in the ideal generated by the
/// modes above p, for all q up to 2p + 1.
pub fn truncation_ideal_closed(ctx: &Ctx) -> bool {
    let cap = 4 * ctx.p + 2;
    let n = ctx.n;
    for m in 1..=ctx.p {
        for q in (ctx.p + 1)..=(2 * ctx.p + 1) {
            for (i, j, k, l) in quads(n) {
                let v = pb_untruncated(&Gen::t(i, j, m), &Gen::t(k, l, q), cap);
                let inside = v.terms().all(|(mono, _)| mono.factors().iter().any(|(g, _)| g.mode() > ctx.p));
                if !inside {
                    return false;
                }
            }
        }
    }
    true
}

/// All (i, j, k, l) index quadruples in 1..=n.
pub fn quads(n: usize) -> impl Iterator<Item = (usize, usize, usize, usize)> {
    (1..=n).flat_map(move |i| {
        (1..=n).flat_map(move |j| (1..=n).flat_map(move |k| (1..=n).map(move |l| (i, j, k, l))))
    })
}

/// hbar-graded pieces of {T_m, T_n}: entry r is the part carrying hbar^r
/// after T_n -> hbar^{n-1} T_n, i.e. the terms with r + 1 mode factors.
pub fn hbar_expand(ctx: &Ctx, x: &Gen, y: &Gen) -> Result<Vec<PolyW>> {
    let v = pb_yangian(ctx, x, y)?;
    let top = v.degree().unwrap_or(0);
    Ok((1..=top.max(1)).map(|d| v.degree_part(d)).collect())
}

/// {T_m, T_n} after T_n -> hbar^{n-1} T_n, as a polynomial in the modes
/// and hbar: a monomial with mode factors r_i carries
/// hbar^{(m+n-2) - sum(r_i - 1)}.
pub fn hbar_rescaled_bracket(ctx: &Ctx, x: &Gen, y: &Gen) -> Result<PolyW> {
    let shift = (x.mode() + y.mode() - 2) as u32;
    let v = pb_yangian(ctx, x, y)?;
    let mut out = PolyW::zero();
    for (mono, c) in v.terms() {
        let k: u32 = mono.factors().iter().map(|(g, e)| (g.mode() as u32 - 1) * e).sum();
        let h = Monomial::from_factors(std::iter::repeat_n(Gen::hbar(), (shift - k) as usize));
        out.add_term(mono.mul(&h), c.clone());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_algebra::bracket::jacobi_holds;

    #[test]
    fn mode_one_is_gl_n() {
        let c = Ctx::new(2, 2).unwrap();
        let v = pb_yangian(&c, &Gen::t(1, 2, 1), &Gen::t(2, 1, 1)).unwrap();
        let want = &PolyW::var(Gen::t(1, 1, 1)) - &PolyW::var(Gen::t(2, 2, 1));
        assert_eq!(v, want);
    }

    #[test]
    fn antisymmetric_and_jacobi() {
        for (n, p) in [(1, 3), (2, 1), (2, 2), (2, 3), (3, 2)] {
            let y = PoissonYangian::new(Ctx::new(n, p).unwrap());
            for x in y.ctx().t_gens() {
                for z in y.ctx().t_gens() {
                    let a = pb_yangian(y.ctx(), &x, &z).unwrap();
                    let b = pb_yangian(y.ctx(), &z, &x).unwrap();
                    assert_eq!(a, -&b);
                }
            }
            assert!(jacobi_holds(&y, &y.ctx().t_gens()).is_ok(), "N={n} p={p}");
        }
    }

    #[test]
    fn hand_value_t2_t2() {
        // {T^{12}_2, T^{21}_2} = T^{11}_3 - T^{22}_3 + T^{22}_1 T^{11}_2 - T^{22}_2 T^{11}_1
        let c = Ctx::new(2, 3).unwrap();
        let t = |i, j, n| PolyW::var(Gen::t(i, j, n));
        let want = &(&(&t(1, 1, 3) - &t(2, 2, 3)) + &(&t(2, 2, 1) * &t(1, 1, 2))) - &(&t(2, 2, 2) * &t(1, 1, 1));
        assert_eq!(pb_yangian(&c, &Gen::t(1, 2, 2), &Gen::t(2, 1, 2)).unwrap(), want);
        // at p = 2 the mode-3 terms drop
        let c2 = Ctx::new(2, 2).unwrap();
        let want2 = &(&t(2, 2, 1) * &t(1, 1, 2)) - &(&t(2, 2, 2) * &t(1, 1, 1));
        assert_eq!(pb_yangian(&c2, &Gen::t(1, 2, 2), &Gen::t(2, 1, 2)).unwrap(), want2);
    }

    #[test]
    fn rejects_foreign_modes() {
        let c = Ctx::new(2, 2).unwrap();
        assert!(matches!(pb_yangian(&c, &Gen::t(1, 1, 3), &Gen::t(1, 1, 1)), Err(Error::OutOfRange(_))));
        assert!(matches!(pb_yangian(&c, &Gen::w(1, 1, 0), &Gen::t(1, 1, 1)), Err(Error::ContextMismatch(_))));
    }

    #[test]
    fn truncation_is_an_ideal() {
        for (n, p) in [(1, 2), (2, 1), (2, 2), (3, 2)] {
            assert!(truncation_ideal_closed(&Ctx::new(n, p).unwrap()));
        }
    }

    #[test]
    fn hbar_grading_by_factor_count() {
        let c = Ctx::new(2, 3).unwrap();
        let parts = hbar_expand(&c, &Gen::t(1, 2, 2), &Gen::t(2, 1, 2)).unwrap();
        let t = |i, j, n| PolyW::var(Gen::t(i, j, n));
        assert_eq!(parts[0], &t(1, 1, 3) - &t(2, 2, 3));
        assert_eq!(parts[1].degree(), Some(2));
        let h = hbar_rescaled_bracket(&c, &Gen::t(1, 2, 2), &Gen::t(2, 1, 2)).unwrap();
        assert_eq!(h.coeff_of_power(&Gen::hbar(), 0), parts[0]);
        assert_eq!(h.coeff_of_power(&Gen::hbar(), 1), parts[1]);
        assert_eq!(h.max_power(&Gen::hbar()), 1);
    }
}
