//! Skew cochains on the generator space of a truncated loop algebra with
//! values in its symmetric algebra, the Chevalley differential, and the
//! deformation equations of the Poisson Yangian.

use std::collections::BTreeMap;

use crate::exact_algebra::scalar::qi;
use crate::exact_algebra::{BracketTable, Ctx, Gen, GeneratorBracket, Matrix, Monomial, PolyW, Scalar};
use crate::poisson_yangian::pb_yangian;
use crate::{Error, Result};

/// Skew multilinear map on a fixed list of generators, stored on strictly
/// increasing index tuples.
#[derive(Clone, Debug, PartialEq)]
pub struct Cochain {
    arity: usize,
    gens: Vec<Gen>,
    values: BTreeMap<Vec<usize>, PolyW>,
}

/// Strictly increasing k-subsets of 0..n.
fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if k > n {
        return Vec::new();
    }
    let mut out = Vec::new();
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out.extend(subsets(n - 1, k));
    out.sort();
    out
}

/// Sorts indices, returning the permutation sign, or None on a repeat.
fn sort_signed(idx: &[usize]) -> Option<(Vec<usize>, i64)> {
    let mut v = idx.to_vec();
    let mut sgn = 1;
    for i in 0..v.len() {
        for j in 0..v.len() - 1 - i {
            if v[j] > v[j + 1] {
                v.swap(j, j + 1);
                sgn = -sgn;
            } else if v[j] == v[j + 1] {
                return None;
            }
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((v, sgn))
}

impl Cochain {
    pub fn zero(arity: usize, gens: Vec<Gen>) -> Cochain {
        Cochain { arity, gens, values: BTreeMap::new() }
    }

    /// Tabulates f on every increasing tuple.
    pub fn from_fn(arity: usize, gens: Vec<Gen>, mut f: impl FnMut(&[Gen]) -> PolyW) -> Cochain {
        let mut out = Cochain::zero(arity, gens);
        for idx in subsets(out.gens.len(), arity) {
            let args: Vec<Gen> = idx.iter().map(|&i| out.gens[i]).collect();
            let v = f(&args);
            if !v.is_zero() {
                out.values.insert(idx, v);
            }
        }
        out
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn gens(&self) -> &[Gen] {
        &self.gens
    }

    fn index(&self, g: &Gen) -> Result<usize> {
        self.gens.iter().position(|h| h == g).ok_or_else(|| Error::OutOfRange(format!("{g} is not a cochain argument")))
    }

    /// Sets the value on an argument tuple, in any order.
    pub fn set(&mut self, args: &[Gen], v: PolyW) -> Result<()> {
        let idx = args.iter().map(|g| self.index(g)).collect::<Result<Vec<_>>>()?;
        let (sorted, sgn) = sort_signed(&idx).ok_or_else(|| Error::InvalidInput("repeated argument".into()))?;
        let v = v.scale(&qi(sgn));
        if v.is_zero() {
            self.values.remove(&sorted);
        } else {
            self.values.insert(sorted, v);
        }
        Ok(())
    }

    /// Value on generators, with skew symmetry applied.
    pub fn eval(&self, args: &[Gen]) -> PolyW {
        let idx: Vec<usize> = match args.iter().map(|g| self.index(g)).collect::<Result<Vec<_>>>() {
            Ok(v) => v,
            Err(_) => return PolyW::zero(),
        };
        match sort_signed(&idx) {
            None => PolyW::zero(),
            Some((sorted, sgn)) => self.values.get(&sorted).map(|v| v.scale(&qi(sgn))).unwrap_or_default(),
        }
    }

    /// Multilinear extension to arguments that are linear combinations of
    /// generators.
    pub fn eval_linear(&self, args: &[PolyW]) -> PolyW {
        let mut acc: Vec<(Vec<Gen>, Scalar)> = vec![(Vec::new(), qi(1))];
        for a in args {
            let mut next = Vec::new();
            for (m, c) in a.terms() {
                let g = match m.factors() {
                    [(g, 1)] => *g,
                    _ => panic!("cochain argument {a} is not linear"),
                };
                for (prefix, pc) in &acc {
                    let mut p = prefix.clone();
                    p.push(g);
                    next.push((p, pc * c));
                }
            }
            acc = next;
        }
        let mut out = PolyW::zero();
        for (gens, c) in acc {
            out.add_scaled(&self.eval(&gens), &c);
        }
        out
    }

    /// For a 2-cochain, extension as a derivation in the first argument:
    /// phi(X, w) = sum_g dX/dg phi(g, w).
    pub fn eval_derivation(&self, x: &PolyW, w: &Gen) -> PolyW {
        let mut out = PolyW::zero();
        for g in x.vars() {
            let v = self.eval(&[g, *w]);
            if !v.is_zero() {
                out = out + x.derivative(&g) * v;
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.values.values().all(PolyW::is_zero)
    }

    pub fn sub(&self, o: &Cochain) -> Cochain {
        let mut out = self.clone();
        for (k, v) in &o.values {
            let cur = out.values.remove(k).unwrap_or_default();
            let d = cur - v.clone();
            if !d.is_zero() {
                out.values.insert(k.clone(), d);
            }
        }
        out
    }

    /// Increasing tuples with nonzero value.
    pub fn support(&self) -> impl Iterator<Item = (Vec<Gen>, &PolyW)> {
        self.values.iter().map(|(k, v)| (k.iter().map(|&i| self.gens[i]).collect(), v))
    }
}

/// (delta chi)(u_0..u_n) = sum_i (-1)^i {u_i, chi(.. no u_i ..)} +
/// sum_{i<j} (-1)^{i+j} chi({u_i, u_j}, .. no u_i, u_j ..)
/// for a Lie bracket that is linear on generators.
pub fn chevalley_delta(chi: &Cochain, lie: &BracketTable) -> Cochain {
    let n = chi.arity;
    let gens = chi.gens.clone();
    Cochain::from_fn(n + 1, gens, |u| {
        let mut out = PolyW::zero();
        for i in 0..=n {
            let rest: Vec<Gen> = u.iter().enumerate().filter(|&(k, _)| k != i).map(|(_, g)| *g).collect();
            let v = lie.bracket_gen_poly(&u[i], &chi.eval(&rest));
            out.add_scaled(&v, &qi(if i % 2 == 0 { 1 } else { -1 }));
        }
        for i in 0..=n {
            for j in i + 1..=n {
                let b = lie.get(&u[i], &u[j]);
                if b.is_zero() {
                    continue;
                }
                let mut args = vec![b];
                args.extend(u.iter().enumerate().filter(|&(k, _)| k != i && k != j).map(|(_, g)| PolyW::var(*g)));
                out.add_scaled(&chi.eval_linear(&args), &qi(if (i + j) % 2 == 0 { 1 } else { -1 }));
            }
        }
        out
    })
}

/// phi_r on Y_p(N): the part of {T_m, T_n} of polynomial degree r + 1,
/// i.e. the coefficient of hbar^r after T_n -> hbar^{n-1} T_n.
pub fn deformation_cochain(ctx: &Ctx, r: usize) -> Cochain {
    Cochain::from_fn(2, ctx.t_gens(), |u| {
        pb_yangian(ctx, &u[0], &u[1]).expect("valid modes").degree_part(r as u32 + 1)
    })
}

fn cochain_table(phi: &Cochain) -> BracketTable {
    let mut t = BracketTable::new(phi.gens.clone());
    for (args, v) in phi.support() {
        t.insert(args[0], args[1], v.clone());
    }
    t
}

/// The undeformed bracket: the truncated loop algebra on the modes.
pub fn loop_bracket(ctx: &Ctx) -> BracketTable {
    cochain_table(&deformation_cochain(ctx, 0))
}

#[derive(Clone, Debug, PartialEq)]
pub struct DeformationReport {
    /// delta phi_1 = 0 on all triples.
    pub first_order_cocycle: bool,
    /// (n, delta phi_n == cyclic sum of phi_j(phi_k(u,v),w)) for n >= 2.
    pub higher_orders: Vec<(usize, bool)>,
    /// phi_1 is not a coboundary of any 1-cochain tested.
    pub first_order_nonzero: bool,
}

impl DeformationReport {
    pub fn all_hold(&self) -> bool {
        self.first_order_cocycle && self.higher_orders.iter().all(|(_, ok)| *ok)
    }
}

/// Checks the order-by-order Jacobi equations of the hbar-deformed bracket
/// up to `max_order`.
pub fn deformation_check(ctx: &Ctx, max_order: usize) -> DeformationReport {
    let phis: Vec<Cochain> = (0..=max_order).map(|r| deformation_cochain(ctx, r)).collect();
    let lie = cochain_table(&phis[0]);
    let first_order_cocycle = chevalley_delta(&phis[1], &lie).is_zero();
    let mut higher_orders = Vec::new();
    for n in 2..=max_order {
        let lhs = chevalley_delta(&phis[n], &lie);
        let rhs = Cochain::from_fn(3, ctx.t_gens(), |u| {
            let mut out = PolyW::zero();
            for j in 1..n {
                let k = n - j;
                for (a, b, c) in [(0, 1, 2), (1, 2, 0), (2, 0, 1)] {
                    let inner = phis[k].eval(&[u[a], u[b]]);
                    out = out + phis[j].eval_derivation(&inner, &u[c]);
                }
            }
            out
        });
        higher_orders.push((n, lhs == rhs));
    }
    DeformationReport { first_order_cocycle, higher_orders, first_order_nonzero: !phis[1].is_zero() }
}

/// hbar-truncated series of polynomials.
type Series = Vec<PolyW>;

fn series_mul(a: &Series, b: &Series, order: usize) -> Series {
    let mut out = vec![PolyW::zero(); order + 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(order + 1 - i.min(order + 1)) {
            if i + j <= order && !y.is_zero() {
                out[i + j] = &out[i + j] + &(x * y);
            }
        }
    }
    out
}

fn series_subst(p: &PolyW, vals: &BTreeMap<Gen, Series>, order: usize) -> Series {
    let mut out = vec![PolyW::zero(); order + 1];
    for (m, c) in p.terms() {
        let mut acc: Series = vec![PolyW::constant(c.clone())];
        for &(g, e) in m.factors() {
            let v = vals.get(&g).cloned().unwrap_or_else(|| vec![PolyW::var(g)]);
            for _ in 0..e {
                acc = series_mul(&acc, &v, order);
            }
        }
        for (k, x) in acc.into_iter().enumerate() {
            out[k] = &out[k] + &x;
        }
    }
    out
}

/// The bracket rewritten in the variables u~ = u - hbar^n chi(u), kept to
/// hbar^order.
#[derive(Clone, Debug)]
pub struct TransformedBracket {
    pub order: usize,
    pub gens: Vec<Gen>,
    table: BTreeMap<(Gen, Gen), Series>,
}

impl TransformedBracket {
    /// The hbar^k cochain of the transformed bracket.
    pub fn cochain(&self, k: usize) -> Cochain {
        Cochain::from_fn(2, self.gens.clone(), |u| self.table[&(u[0], u[1])].get(k).cloned().unwrap_or_default())
    }
}

/// Performs the change of variables u~ = u - hbar^n chi(u) on the
/// hbar-deformed Poisson Yangian and re-expands in u~.
pub fn coboundary_trivialize(ctx: &Ctx, chi: &Cochain, n: usize, order: usize) -> Result<TransformedBracket> {
    if chi.arity != 1 || n == 0 {
        return Err(Error::InvalidInput("need a 1-cochain and n >= 1".into()));
    }
    let gens = ctx.t_gens();
    let levels: Vec<BracketTable> = (0..=order).map(|r| cochain_table(&deformation_cochain(ctx, r))).collect();
    let bracket = |x: &Series, y: &Series| -> Series {
        let mut out = vec![PolyW::zero(); order + 1];
        for (a, xa) in x.iter().enumerate() {
            for (b, yb) in y.iter().enumerate() {
                for (c, lvl) in levels.iter().enumerate() {
                    if a + b + c <= order && !xa.is_zero() && !yb.is_zero() {
                        out[a + b + c] = &out[a + b + c] + &lvl.bracket(xa, yb);
                    }
                }
            }
        }
        out
    };
    let tilde = |g: &Gen| -> Series {
        let mut s = vec![PolyW::zero(); order + 1];
        s[0] = PolyW::var(*g);
        if n <= order {
            s[n] = -chi.eval(&[*g]);
        }
        s
    };
    // u = u~ + hbar^n chi(u), solved by iteration in the u~ variables
    let mut inverse: BTreeMap<Gen, Series> = gens.iter().map(|g| (*g, vec![PolyW::var(*g)])).collect();
    for _ in 0..=order / n {
        let mut next = BTreeMap::new();
        for g in &gens {
            let mut s = vec![PolyW::zero(); order + 1];
            s[0] = PolyW::var(*g);
            let shifted = series_subst(&chi.eval(&[*g]), &inverse, order);
            for (k, x) in shifted.into_iter().enumerate() {
                if k + n <= order {
                    s[k + n] = &s[k + n] + &x;
                }
            }
            next.insert(*g, s);
        }
        inverse = next;
    }
    let mut table = BTreeMap::new();
    for x in &gens {
        for y in &gens {
            let raw = bracket(&tilde(x), &tilde(y));
            let mut out = vec![PolyW::zero(); order + 1];
            for (a, term) in raw.iter().enumerate() {
                for (b, v) in series_subst(term, &inverse, order).into_iter().enumerate() {
                    if a + b <= order {
                        out[a + b] = &out[a + b] + &v;
                    }
                }
            }
            table.insert((*x, *y), out);
        }
    }
    Ok(TransformedBracket { order, gens, table })
}

/// Loop weight of a monomial in the modes: sum of (mode - 1).
fn loop_weight(m: &Monomial) -> i64 {
    m.factors().iter().map(|(g, e)| (g.mode() as i64 - 1) * *e as i64).sum()
}

/// Monomials of a given degree and loop weight in the generators.
fn graded_monomials(gens: &[Gen], degree: u32, weight: i64) -> Vec<Monomial> {
    let mut out = vec![Monomial::one()];
    for _ in 0..degree {
        let mut next = Vec::new();
        for m in &out {
            for g in gens {
                let prod = m.mul(&Monomial::var(*g));
                if !next.contains(&prod) {
                    next.push(prod);
                }
            }
        }
        out = next;
    }
    out.retain(|m| loop_weight(m) == weight);
    out.sort();
    out
}

/// Rebuilds a homogeneous 2-cocycle on Y_p(N) from its values on pairs
/// that involve a mode-1 or mode-2 generator (loop index 0 or 1). The
/// remaining values are the unknowns, restricted to polynomials of the
/// given degree whose loop weight is i + j + shift; they are fixed by the
/// cocycle equations on all triples. Errors when the solution is not unique
/// (the dimension of the undetermined part is reported).
pub fn reconstruct_from_low_modes(ctx: &Ctx, known: &Cochain, degree: u32, shift: i64) -> Result<Cochain> {
    let gens = ctx.t_gens();
    let lie = loop_bracket(ctx);
    let low = |g: &Gen| g.mode() <= 2;
    let mut base = Cochain::zero(2, gens.clone());
    let mut unknowns: Vec<((Gen, Gen), Monomial)> = Vec::new();
    for idx in subsets(gens.len(), 2) {
        let (x, y) = (gens[idx[0]], gens[idx[1]]);
        if low(&x) || low(&y) {
            base.set(&[x, y], known.eval(&[x, y]))?;
        } else {
            let w = (x.mode() as i64 - 1) + (y.mode() as i64 - 1) + shift;
            for m in graded_monomials(&gens, degree, w) {
                unknowns.push(((x, y), m));
            }
        }
    }
    let constant = chevalley_delta(&base, &lie);
    let columns: Vec<Cochain> = unknowns
        .iter()
        .map(|((x, y), m)| {
            let mut c = Cochain::zero(2, gens.clone());
            c.set(&[*x, *y], PolyW::term(m.clone(), qi(1))).expect("generators");
            chevalley_delta(&c, &lie)
        })
        .collect();
    // one row per (triple, monomial) coordinate
    let mut coords: Vec<(Vec<Gen>, Monomial)> = Vec::new();
    for c in columns.iter().chain(std::iter::once(&constant)) {
        for (args, v) in c.support() {
            for (m, _) in v.terms() {
                let key = (args.clone(), m.clone());
                if !coords.contains(&key) {
                    coords.push(key);
                }
            }
        }
    }
    let value = |c: &Cochain, (args, m): &(Vec<Gen>, Monomial)| c.eval(args).coefficient(m);
    let a = Matrix::<Scalar>::from_fn(coords.len(), unknowns.len(), |r, k| value(&columns[k], &coords[r]));
    let rhs: Vec<Scalar> = coords.iter().map(|key| -value(&constant, key)).collect();
    let rank = a.rank();
    if rank < unknowns.len() {
        return Err(Error::Degenerate(format!("{} undetermined directions", unknowns.len() - rank)));
    }
    let sol = a.solve(&rhs).ok_or_else(|| Error::Degenerate("cocycle equations inconsistent".into()))?;
    let mut out = base;
    for (((x, y), m), c) in unknowns.iter().zip(sol) {
        let cur = out.eval(&[*x, *y]);
        out.set(&[*x, *y], cur + PolyW::term(m.clone(), c))?;
    }
    Ok(out)
}

/// Eigenvalue of sum_{a,b} ad(E_ab) ad(E_ba) on the traceless part of gl(N)
/// with respect to the trace form.
pub fn adjoint_casimir(n: usize) -> Result<Scalar> {
    if n < 2 {
        return Err(Error::Degenerate("gl(1) has no traceless part".into()));
    }
    let unit = |i, j| Matrix::<Scalar>::unit(n, i, j);
    let probe = unit(0, 1);
    let mut acc = Matrix::<Scalar>::zeros(n, n);
    for a in 0..n {
        for b in 0..n {
            let inner = unit(b, a).commutator(&probe)?;
            acc.add_assign(&unit(a, b).commutator(&inner)?);
        }
    }
    Ok(acc[(0, 1)].clone())
}
