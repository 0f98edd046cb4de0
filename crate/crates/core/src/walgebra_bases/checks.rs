//! Bracket identities satisfied by the W-bar families.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{compositions, yangian_to_w, BasisSign, WBarFamily};
use crate::exact_algebra::scalar::{binomial, factorial, qbig, qi, sign};
use crate::exact_algebra::{Ctx, Family, Gen, GeneratorBracket, Matrix, PolyW, Scalar};
use crate::poisson_yangian::pb_yangian;

/// A failed identity with both sides.
#[derive(Clone, Debug, PartialEq)]
pub struct Mismatch {
    pub what: String,
    pub lhs: PolyW,
    pub rhs: PolyW,
}

fn check(what: impl FnOnce() -> String, lhs: PolyW, rhs: PolyW) -> Result<(), Mismatch> {
    if lhs == rhs {
        Ok(())
    } else {
        Err(Mismatch { what: what(), lhs, rhs })
    }
}

fn kd(x: usize, y: usize) -> Scalar {
    if x == y {
        qi(1)
    } else {
        qi(0)
    }
}

fn idx4(n: usize) -> impl Iterator<Item = (usize, usize, usize, usize)> {
    crate::poisson_yangian::quads(n)
}

/// {W1^{ab}, Wj^{cd}} = d^{cb} W^{ad}_{j+1} - d^{ad} W^{cb}_{j+1} + W^{cb}_0 W^{ad}_j - W^{cb}_j W^{ad}_0
/// and {W0^{ab}, Wj^{cd}} = d^{cb} W^{ad}_j - d^{ad} W^{cb}_j.
pub fn pbn_check<B: GeneratorBracket>(w: &B, fam: &WBarFamily, j: usize) -> Result<(), Mismatch> {
    for (a, b, c, d) in idx4(fam.ctx.n) {
        let e = |x, y, k| fam.entry(x, y, k);
        let lhs = w.bracket(&e(a, b, 1), &e(c, d, j));
        let rhs = &(&(&e(a, d, j + 1).scale(&kd(c, b)) - &e(c, b, j + 1).scale(&kd(a, d))) + &(&e(c, b, 0) * &e(a, d, j)))
            - &(&e(c, b, j) * &e(a, d, 0));
        check(|| format!("{{W1^{a}{b}, W{j}^{c}{d}}}"), lhs, rhs)?;
        let lhs = w.bracket(&e(a, b, 0), &e(c, d, j));
        let rhs = &e(a, d, j).scale(&kd(c, b)) - &e(c, b, j).scale(&kd(a, d));
        check(|| format!("{{W0^{a}{b}, W{j}^{c}{d}}}"), lhs, rhs)?;
    }
    Ok(())
}

/// {W1(from)^{ab}, Wj(to)^{cd}} = d^{bc}((W0 Wj)^{ad} - W^{ad}_{j+1}) - d^{ad}((Wj W0)^{cb} - W^{cb}_{j+1})
/// with W_j, W_{j+1} taken in the family `to`.
pub fn mixed_bracket_check<B: GeneratorBracket>(w: &B, from: &WBarFamily, to: &WBarFamily, j: usize) -> Result<(), Mismatch> {
    let w0 = to.get(0);
    let w0j = w0.dot(&to.get(j));
    let wj0 = to.get(j).dot(&w0);
    for (a, b, c, d) in idx4(from.ctx.n) {
        let lhs = w.bracket(&from.entry(a, b, 1), &to.entry(c, d, j));
        let rhs = &(&w0j[(a - 1, d - 1)] - &to.entry(a, d, j + 1)).scale(&kd(b, c))
            - &(&wj0[(c - 1, b - 1)] - &to.entry(c, b, j + 1)).scale(&kd(a, d));
        check(|| format!("mixed {{W1^{a}{b}, W{j}^{c}{d}}}"), lhs, rhs)?;
    }
    Ok(())
}

/// N W^{cd}_{j+1} = {W1^{ca}, Wj^{ad}} - W0^{aa} Wj^{cd} + W0^{cd} Wj^{aa} + d_{cd} W^{aa}_{j+1}.
pub fn recursion_check<B: GeneratorBracket>(w: &B, fam: &WBarFamily, j: usize) -> Result<(), Mismatch> {
    let n = fam.ctx.n;
    let tr = |k: usize| (1..=n).fold(PolyW::zero(), |acc, a| &acc + &fam.entry(a, a, k));
    for c in 1..=n {
        for d in 1..=n {
            let mut rhs = tr(j + 1).scale(&kd(c, d));
            for a in 1..=n {
                rhs = &rhs + &w.bracket(&fam.entry(c, a, 1), &fam.entry(a, d, j));
            }
            rhs = &rhs - &(&tr(0) * &fam.entry(c, d, j));
            rhs = &rhs + &(&fam.entry(c, d, 0) * &tr(j));
            let lhs = fam.entry(c, d, j + 1).scale(&qi(n as i64));
            check(|| format!("recursion W{}^{c}{d}", j + 1), lhs, rhs)?;
        }
    }
    Ok(())
}

/// The auxiliary {W2, Wj} identity used to propagate the recursion.
pub fn w2wj_check<B: GeneratorBracket>(w: &B, fam: &WBarFamily, j: usize) -> Result<(), Mismatch> {
    let n = fam.ctx.n;
    let e = |x: usize, y: usize, k: usize| fam.entry(x, y, k);
    let tr = |k: usize| (1..=n).fold(PolyW::zero(), |acc, a| &acc + &e(a, a, k));
    let comm = |x: usize, y: usize| {
        let (mx, my) = (fam.get(x), fam.get(y));
        mx.dot(&my).minus(&my.dot(&mx))
    };
    let c0 = comm(0, j + 1);
    let c1 = comm(1, j);
    let nn = qi(n as i64);
    let bmat = |c: usize, d: usize| {
        let mut s = &(&e(c, d, 0) * &tr(j + 1)) - &(&tr(0) * &e(c, d, j + 1));
        for f in 1..=n {
            s = &s + &w.bracket(&e(c, f, 1), &e(f, d, j + 1));
        }
        s
    };
    for (a, b, c, d) in idx4(n) {
        let lhs = w.bracket(&e(c, b, 2), &e(a, d, j)).scale(&nn);
        let mut rhs = -(&w.bracket(&e(a, b, 1), &e(c, d, j + 1)) + &w.bracket(&e(c, d, 1), &e(a, b, j + 1)));
        rhs = &rhs + &(&(&e(a, b, 1) * &e(c, d, j)) - &(&e(c, d, 1) * &e(a, b, j))).scale(&nn);
        rhs = &rhs + &(&(&e(a, b, 0) * &e(c, d, j + 1)) - &(&e(c, d, 0) * &e(a, b, j + 1))).scale(&nn);
        if a == b {
            rhs = &rhs + &bmat(c, d);
        }
        if c == d {
            let mut t = &(&tr(0) * &e(a, b, j + 1)) - &(&e(a, b, 0) * &tr(j + 1));
            for f in 1..=n {
                t = &t - &w.bracket(&e(a, f, j + 1), &e(f, b, 1));
            }
            rhs = &rhs + &t;
        }
        if c == b {
            let mut t = &(-&c0[(a - 1, d - 1)]) - &c1[(a - 1, d - 1)];
            t = &t + &w.bracket(&tr(2), &e(a, d, j));
            rhs = &rhs + &t;
        }
        check(|| format!("{{W2^{c}{b}, W{j}^{a}{d}}}"), lhs, rhs)?;
    }
    Ok(())
}

/// A random polynomial sum_{n, |s| = j+1-n} beta (W_{s_1} ... W_{s_n})^{cd}
/// in the original generators, returned as a matrix.
pub fn random_p_family(ctx: &Ctx, j: usize, seed: u64) -> Matrix<PolyW> {
    let n = ctx.n;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let wm = |k: usize| {
        Matrix::from_fn(n, n, |a, b| if k < ctx.p { PolyW::var(Gen::w(a + 1, b + 1, k)) } else { PolyW::zero() })
    };
    let mut acc = Matrix::<PolyW>::zeros(n, n);
    for parts in 1..=j + 1 {
        for comp in compositions(j + 1 - parts, parts) {
            let beta = Scalar::new(rng.gen_range(-9i64..=9).into(), rng.gen_range(1i64..=5).into());
            let mut prod = Matrix::<PolyW>::identity(n);
            for s in comp {
                prod = prod.dot(&wm(s));
            }
            acc.add_assign(&prod.scale(&beta));
        }
    }
    acc
}

/// {tr W1-bar, tr P_j} = 0 for a random P of the stated shape.
pub fn trace_commutes_check<B: GeneratorBracket>(w: &B, fam: &WBarFamily, j: usize, seed: u64) -> Result<(), Mismatch> {
    let pm = random_p_family(&fam.ctx, j, seed);
    let lhs = w.bracket(&fam.get(1).trace(), &pm.trace());
    check(|| format!("{{tr W1, tr P{j}}}"), lhs, PolyW::zero())
}

/// Expected coefficient of W_j^{ab} in W-bar_j^{ab}: (+-1)^j (j!)^2 C(p+j, 2j+1).
pub fn leading_expected(p: usize, s: BasisSign, j: usize) -> Scalar {
    let f = Scalar::from_integer(factorial(j as i64));
    let sg = if s == BasisSign::Minus { sign(j as i64) } else { qi(1) };
    sg * &f * &f * qbig(binomial((p + j) as i64, (2 * j + 1) as i64))
}

/// Expected coefficient of (W_0^{j+1})^{ab}: C(p, j+1) for minus, C(p+j, j+1) for plus.
pub fn pure_w0_expected(p: usize, s: BasisSign, j: usize) -> Scalar {
    match s {
        BasisSign::Minus => qbig(binomial(p as i64, (j + 1) as i64)),
        BasisSign::Plus => qbig(binomial((p + j) as i64, (j + 1) as i64)),
    }
}

/// W-bar_1 from the explicit seed formula.
pub fn seed_w1(ctx: &Ctx, s: BasisSign) -> Matrix<PolyW> {
    let n = ctx.n;
    let p = ctx.p as i64;
    let w0 = Matrix::from_fn(n, n, |a, b| PolyW::var(Gen::w(a + 1, b + 1, 0)));
    let w1 = Matrix::from_fn(n, n, |a, b| if p >= 2 { PolyW::var(Gen::w(a + 1, b + 1, 1)) } else { PolyW::zero() });
    let sg = qi(s.as_i64());
    let lin = sg * Scalar::new((p * (p * p - 1)).into(), 6.into());
    let quad = Scalar::new((p * (p + s.as_i64())).into(), 2.into());
    w1.scale(&lin).plus(&w0.dot(&w0).scale(&quad))
}

/// Checks the endpoint coefficients of W-bar_j: the linear W_j term and the
/// pure W_0 part.
pub fn endpoint_check(fam: &WBarFamily, j: usize) -> Result<(), Mismatch> {
    let (n, p) = (fam.ctx.n, fam.ctx.p);
    let w0 = Matrix::from_fn(n, n, |a, b| PolyW::var(Gen::w(a + 1, b + 1, 0)));
    let w0pow = w0.pow((j + 1) as u32);
    let pure = pure_w0_expected(p, fam.sign, j);
    let lead = leading_expected(p, fam.sign, j);
    for a in 1..=n {
        for b in 1..=n {
            let x = fam.entry(a, b, j);
            let only_w0 = x.filter(|m| m.factors().iter().all(|(g, _)| g.family == Family::W && g.mode == 0));
            check(|| format!("pure W0 part of W{j}^{a}{b}"), only_w0, w0pow[(a - 1, b - 1)].scale(&pure))?;
            if j >= 1 && j < p {
                let lin = x.degree_part(1);
                let want = PolyW::var(Gen::w(a, b, j)).scale(&lead);
                check(|| format!("linear part of W{j}^{a}{b}"), lin, want)?;
            }
        }
    }
    Ok(())
}

/// Exhaustive comparison of {W-bar_j, W-bar_l} in the W-algebra with the
/// truncated Yangian bracket {T_{j+1}, T_{l+1}} under T_n -> W-bar_{n-1}.
pub fn identify_with_yangian<B: GeneratorBracket>(w: &B, minus: &WBarFamily) -> Vec<(Gen, Gen, bool)> {
    let ctx = minus.ctx;
    let mut out = Vec::new();
    for x in ctx.t_gens() {
        for y in ctx.t_gens() {
            let lhs = w.bracket(&minus.entry(x.ai(), x.bi(), x.mode() - 1), &minus.entry(y.ai(), y.bi(), y.mode() - 1));
            let rhs = yangian_to_w(&pb_yangian(&ctx, &x, &y).expect("generators in range"), minus);
            out.push((x, y, lhs == rhs));
        }
    }
    out
}
