//! Verification suites. Each suite runs a fixed list of exact checks and
//! records the first counterexample of every failing check.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::center_cohomology::cochain::loop_bracket;
use crate::center_cohomology::{casimirs_from_det, center_tower, chevalley_delta, deformation_check, Cochain};
use crate::exact_algebra::bracket::jacobi_holds;
use crate::exact_algebra::scalar::{fmt_frac, q, qi, sign};
use crate::exact_algebra::{Ctx, Family, Gen, GeneratorBracket, Matrix, Monomial, PolyW, Scalar};
use crate::glnp_basis::{closed_form_checks, e_minus, e_plus, e_zero, eta_closed, relation_checks, GlpBasis};
use crate::hamiltonian_reduction::closed_forms::{pb1j, w0_bracket};
use crate::hamiltonian_reduction::{DiracSystem, WAlgebra};
use crate::poisson_yangian::{pb_untruncated, pb_yangian, truncation_ideal_closed, PoissonYangian};
use crate::representations::{
    classify, coproduct, drinfeld_data, evaluation_series, mode_relations_failure, qdet, rtt_grid_failure,
    rtt_symbolic_holds, tensor_from_weights, CenterSeries, Verdict, YangianRep,
};
use crate::walgebra_bases::checks::{endpoint_check, identify_with_yangian};
use crate::walgebra_bases::{change_of_basis, wbar_build, BasisSign};
use crate::Result;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// First counterexample when the check fails.
    pub detail: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn new(suite: &str) -> SuiteReport {
        SuiteReport { suite: suite.to_string(), checks: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }

    /// Records a check from the first counterexample found, if any.
    pub fn record(&mut self, name: impl Into<String>, failure: Option<String>) {
        self.checks.push(Check { name: name.into(), passed: failure.is_none(), detail: failure });
    }

    pub fn expect(&mut self, name: impl Into<String>, ok: bool, detail: impl FnOnce() -> String) {
        let failure = if ok { None } else { Some(detail()) };
        self.record(name, failure);
    }

    pub fn extend(&mut self, other: SuiteReport) {
        self.checks.extend(other.checks);
    }
}

fn first<I: IntoIterator<Item = Option<String>>>(it: I) -> Option<String> {
    it.into_iter().flatten().next()
}

fn sign_of(m: i64) -> Scalar {
    sign(m)
}

/// sl(2) action, scalar product, product re-expansion, coefficient
/// symmetries and the tabulated special values at one p.
pub fn basis_suite(p: usize) -> Result<SuiteReport> {
    let b = GlpBasis::new(p)?;
    let mut r = SuiteReport::new("basis");
    let tag = |s: &str| format!("p={p} {s}");
    let (ep, em, e0) = (e_plus(p), e_minus(p), e_zero(p));

    let triple = ep.commutator(&em)? == e0 && e0.commutator(&ep)? == ep && e0.commutator(&em)? == em.neg();
    r.expect(tag("sl2 triple"), triple, || "[e+, e-] = e0, [e0, e+-] = +-e+-".into());

    let mut weight = None;
    let mut raise = None;
    for (j, m) in b.labels() {
        let mm = b.mat(j, m);
        if weight.is_none() && e0.commutator(mm)? != mm.scale(&qi(m)) {
            weight = Some(format!("[e0, M_{j},{m}]"));
        }
        let want = if m < j as i64 {
            b.mat(j, m + 1).scale(&Scalar::new(((j * (j + 1)) as i64 - m * (m + 1)).into(), 2.into()))
        } else {
            Matrix::zeros(p, p)
        };
        if raise.is_none() && ep.commutator(mm)? != want {
            raise = Some(format!("[e+, M_{j},{m}]"));
        }
    }
    r.record(tag("e0 weights"), weight);
    r.record(tag("e+ raising"), raise);
    let top = first((0..p).map(|j| {
        (*b.mat(j, j as i64) != ep.pow(j as u32).scale(&qi(1 << j))).then(|| format!("M_{j},{j} != 2^{j} e+^{j}"))
    }));
    r.record(tag("top vectors"), top);

    let mut orth = None;
    'outer: for (j, m) in b.labels() {
        for (l, n) in b.labels() {
            let t = b.mat(j, m).dot(b.mat(l, n)).trace();
            let want = if j == l && m + n == 0 { sign_of(m) * b.eta(j) } else { qi(0) };
            if t != want {
                orth = Some(format!("tr(M_{j},{m} M_{l},{n}) = {}, expected {}", fmt_frac(&t), fmt_frac(&want)));
                break 'outer;
            }
        }
    }
    r.record(tag("orthogonality"), orth);
    let eta = first((0..p).map(|j| {
        (*b.eta(j) != eta_closed(p, j)).then(|| format!("eta_{j} = {} vs {}", fmt_frac(b.eta(j)), fmt_frac(&eta_closed(p, j))))
    }));
    r.record(tag("eta closed form"), eta);

    let mut product = None;
    'prod: for (j, m) in b.labels() {
        for (l, n) in b.labels() {
            let mut acc = Matrix::zeros(p, p);
            for (k, c) in b.product_terms(j, m, l, n) {
                acc.add_assign(&b.mat(k, m + n).scale(&c));
            }
            if acc != b.mat(j, m).dot(b.mat(l, n)) {
                product = Some(format!("M_{j},{m} M_{l},{n}"));
                break 'prod;
            }
        }
    }
    r.record(tag("product re-expansion"), product);

    let (cyc, refl) = relation_checks(&b);
    r.expect(tag("cyclic symmetry"), cyc == 0, || format!("{cyc} label triples fail"));
    r.expect(tag("reflection symmetry"), refl == 0, || format!("{refl} label triples fail"));

    let checks = closed_form_checks(&b);
    let mut names: Vec<&str> = Vec::new();
    for c in &checks {
        if !names.contains(&c.name) {
            names.push(c.name);
        }
    }
    for name in names {
        let bad = checks.iter().find(|c| c.name == name && !c.holds()).map(|c| {
            let [(j, m), (l, n), (k, s)] = c.labels;
            format!(
                "<{j},{m};{l},{n}|{k},{s}> = {}, table gives {}",
                fmt_frac(&c.computed),
                fmt_frac(&c.expected)
            )
        });
        r.record(tag(&format!("closed form {name}")), bad);
    }
    Ok(r)
}

/// Sets every mode above p to zero.
fn truncate(x: &PolyW, p: usize) -> PolyW {
    x.substitute(|g| (g.family == Family::T && g.mode() > p).then(PolyW::zero))
}

/// Antisymmetry, Jacobi and the truncation quotient property of Y_p(N).
pub fn yangian_suite(ctx: &Ctx) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("yangian");
    let tag = |s: &str| format!("N={} p={} {s}", ctx.n, ctx.p);
    let gens = ctx.t_gens();
    let mut anti = None;
    'anti: for x in &gens {
        for y in &gens {
            if !(&pb_yangian(ctx, x, y)? + &pb_yangian(ctx, y, x)?).is_zero() {
                anti = Some(format!("{{{x}, {y}}}"));
                break 'anti;
            }
        }
    }
    r.record(tag("antisymmetry"), anti);
    let y = PoissonYangian::new(*ctx);
    let jac = jacobi_holds(&y, &gens).err().map(|(a, b, c, v)| format!("Jac({a}, {b}, {c}) = {v}"));
    r.record(tag("jacobi"), jac);
    let cap = 2 * ctx.p + 1;
    let mut quotient = None;
    'quo: for x in &gens {
        for y in &gens {
            let full = truncate(&pb_untruncated(x, y, cap), ctx.p);
            if full != pb_yangian(ctx, x, y)? {
                quotient = Some(format!("{{{x}, {y}}}"));
                break 'quo;
            }
        }
    }
    r.record(tag("bracket then truncate"), quotient);
    r.expect(tag("truncation ideal"), truncation_ideal_closed(ctx), || "bracket leaves the ideal".into());
    Ok(r)
}

/// Nilpotency of the constraint matrix part, the inverse, and vanishing
/// Dirac brackets with the constraints.
pub fn dirac_suite(ctx: &Ctx) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("dirac");
    let tag = |s: &str| format!("N={} p={} {s}", ctx.n, ctx.p);
    let sys = DiracSystem::new(*ctx)?;
    let k = sys.constraints().len();
    let bound = 2 * ctx.p - 1;
    match sys.nilpotency_index() {
        Some(idx) => r.expect(tag("delta-hat nilpotent"), idx <= bound, || format!("index {idx} > {bound}")),
        None => r.record(tag("delta-hat nilpotent"), Some("not nilpotent".into())),
    }
    let prod = sys.delta(&PolyW::one()).dot(&sys.delta_bar());
    r.expect(tag("delta times inverse"), prod == Matrix::identity(k), || "product is not the identity".into());
    let mut compat = None;
    'c: for x in ctx.j_gens() {
        for phi in sys.constraints() {
            let v = sys.dirac_bracket(&PolyW::var(x), &PolyW::var(*phi));
            if !v.is_zero() {
                compat = Some(format!("{{{x}, {phi}}}* = {v}"));
                break 'c;
            }
        }
    }
    r.record(tag("constraints are Casimirs"), compat);
    Ok(r)
}

/// The generic soldering pipeline against the closed {W_0, W_j} and
/// {W_1, W_j} brackets.
pub fn soldering_suite(ctx: &Ctx) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("soldering");
    let tag = |s: &str| format!("N={} p={} {s}", ctx.n, ctx.p);
    let w = WAlgebra::new(*ctx);
    let mut zero = None;
    let mut one = None;
    for g in ctx.w_gens() {
        for h in ctx.w_gens() {
            if g.mode == 0 && zero.is_none() {
                let want = w0_bracket(ctx, g.ai(), g.bi(), h.ai(), h.bi(), h.mode());
                let got = w.gen_bracket(&g, &h);
                if got != want {
                    zero = Some(format!("{{{g}, {h}}} = {got}, expected {want}"));
                }
            }
            if g.mode == 1 && one.is_none() {
                let want = pb1j(ctx, g.ai(), g.bi(), h.ai(), h.bi(), h.mode())?;
                let got = w.gen_bracket(&g, &h);
                if got != want {
                    one = Some(format!("{{{g}, {h}}} = {got}, expected {want}"));
                }
            }
        }
    }
    r.record(tag("W0 bracket"), zero);
    if ctx.p >= 2 {
        r.record(tag("W1 bracket"), one);
    }
    Ok(r)
}

/// The W-bar^- bracket table against the truncated Yangian, plus the
/// truncation, endpoint coefficients and the change of basis.
pub fn identify_suite(ctx: &Ctx) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("identify");
    let p = ctx.p;
    let tag = |s: &str| format!("N={} p={p} {s}", ctx.n);
    let basis = GlpBasis::new(p)?;
    let w = WAlgebra::with_basis(*ctx, &basis);
    let minus = wbar_build(ctx, &basis, BasisSign::Minus, p + 1)?;
    let plus = wbar_build(ctx, &basis, BasisSign::Plus, p + 1)?;
    let bad = identify_with_yangian(&w, &minus).into_iter().find(|x| !x.2).map(|(x, y, _)| format!("{{{x}, {y}}}"));
    r.record(tag("bracket table"), bad);
    r.expect(tag("W-bar^-_p vanishes"), minus.get(p).is_zero(), || format!("W-bar^-_{p} = {:?}", minus.get(p)));
    for (fam, name) in [(&minus, "minus"), (&plus, "plus")] {
        let e = first((0..=p + 1).map(|j| endpoint_check(fam, j).err().map(|m| format!("{}: {} vs {}", m.what, m.lhs, m.rhs))));
        r.record(tag(&format!("endpoint coefficients ({name})")), e);
    }
    let change = first((0..=2usize.min(p + 1)).map(|j| {
        if change_of_basis(&minus, j) != plus.get(j) {
            Some(format!("plus from minus at j={j}"))
        } else if change_of_basis(&plus, j) != minus.get(j) {
            Some(format!("minus from plus at j={j}"))
        } else {
            None
        }
    }));
    r.record(tag("change of basis"), change);
    Ok(r)
}

fn weights_label(f: &[Vec<Scalar>]) -> String {
    let parts: Vec<String> = f.iter().map(|w| w.iter().map(fmt_frac).collect::<Vec<_>>().join(",")).collect();
    format!("[{}]", parts.join(";"))
}

/// RTT, mode support, q-det centrality and Drinfeld reconstruction for
/// one tensor product of evaluation modules. With `generic` set, the
/// classification must also recover the number of factors.
pub fn rtt_checks(factors: &[Vec<Scalar>], generic: bool) -> Result<SuiteReport> {
    let rep = tensor_from_weights(factors)?;
    rep_checks(&rep, &weights_label(factors), factors.len(), generic)
}

fn build(n: usize, factors: &[Vec<Scalar>]) -> Result<YangianRep> {
    if factors.is_empty() {
        Ok(YangianRep::trivial(n))
    } else {
        tensor_from_weights(factors)
    }
}

fn rep_checks(rep: &YangianRep, label: &str, count: usize, generic: bool) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("rtt");
    let tag = |s: &str| format!("{label} {s}");
    r.record(tag("rtt grid"), rtt_grid_failure(rep).map(|x| format!("{x:?}")));
    r.record(tag("mode relations"), mode_relations_failure(rep, rep.support_bound() + 1).map(|x| format!("{x:?}")));
    if rep.dim * rep.n <= 8 {
        r.expect(tag("rtt symbolic"), rtt_symbolic_holds(rep), || "T(u)T(v) relation fails".into());
    }
    r.expect(tag("mode support"), rep.support() <= count, || format!("support {} > {count}", rep.support()));
    let qd = qdet(rep);
    r.expect(tag("qdet central"), qd.is_central(rep), || "qdet does not commute".into());
    let data = drinfeld_data(rep)?;
    let bound = data.total_degree().max(count);
    let round = match classify(&data, rep.n, bound)? {
        Verdict::Accepted(plan) => {
            if !plan.center_matched {
                Some("center not matched".to_string())
            } else if generic && plan.factors.len() != count {
                Some(format!("{} factors recovered, {count} built", plan.factors.len()))
            } else if drinfeld_data(&build(rep.n, &plan.factors)?)? != data {
                Some("plan does not rebuild the Drinfeld data".to_string())
            } else {
                None
            }
        }
        v => Some(format!("{v:?}")),
    };
    r.record(tag("drinfeld round trip"), round);
    Ok(r)
}

fn shifted(base: &[i64], c: Scalar) -> Vec<Scalar> {
    base.iter().map(|&x| qi(x) + c.clone()).collect()
}

fn fundamental_weight(n: usize) -> Vec<i64> {
    (0..n).map(|k| i64::from(k == 0)).collect()
}

/// The default factor lists for gl(n): a trivial factor, the defining
/// module, and two- and three-fold products with rational shifts, all of
/// dimension at most `max_dim`.
pub fn default_factor_sets(n: usize, max_dim: usize) -> Vec<Vec<Vec<Scalar>>> {
    let def = fundamental_weight(n);
    let zero = vec![0; n];
    let mut out = vec![vec![shifted(&zero, qi(0))], vec![shifted(&def, qi(0))]];
    out.push(vec![shifted(&def, qi(0)), shifted(&def, q(1, 2))]);
    out.push(vec![shifted(&def, q(1, 3)), shifted(&def, q(-2, 5)), shifted(&def, q(7, 4))]);
    out.retain(|f| n.pow(f.len() as u32) <= max_dim);
    out
}

/// RTT checks on the trivial module and the default factor sets.
pub fn rtt_suite(n: usize, max_dim: usize) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("rtt");
    let triv = YangianRep::trivial(n);
    r.extend(rep_checks(&triv, &format!("gl({n}) trivial"), 0, true)?);
    for (k, f) in default_factor_sets(n, max_dim).into_iter().enumerate() {
        // the first set is a single trivial evaluation factor, invisible to
        // the Drinfeld polynomials
        r.extend(rtt_checks(&f, k > 0)?);
    }
    Ok(r)
}

/// The representation suite: gl(2) and gl(3) modules up to dimension 27
/// and the q-det of a product against the product of q-dets.
pub fn representation_suite() -> Result<SuiteReport> {
    let mut r = SuiteReport::new("representations");
    for n in [2, 3] {
        r.extend(rtt_suite(n, 27)?);
    }
    let f = vec![vec![q(3, 2), q(1, 2)], vec![q(1, 3), q(-2, 3)]];
    let s = qdet(&tensor_from_weights(&f)?).series()?;
    let expect = f.iter().fold(CenterSeries::one(), |acc, x| acc.mul(&evaluation_series(x)));
    r.expect(format!("{} qdet multiplicative", weights_label(&f)), s == expect, || "series differ".into());
    Ok(r)
}

/// The truncated coproduct on two defining gl(2) legs at p = 2: the
/// defect must be nonzero and agree with the displayed sum, and the
/// untruncated coproduct must have zero defect.
pub fn coproduct_suite() -> Result<SuiteReport> {
    let mut r = SuiteReport::new("coproduct");
    let leg = tensor_from_weights(&[vec![qi(1), qi(0)]])?;
    let p = 2;
    let mut nonzero = false;
    let mut disagree = None;
    let mut nonzero_displayed = false;
    for (i, j, k, l) in crate::poisson_yangian::quads(2) {
        let rep = coproduct::coproduct_defect(&leg, &leg, p, (i, j, k, l), Some(p))?;
        nonzero |= !rep.defect.is_zero();
        nonzero_displayed |= !rep.displayed.is_zero();
        if disagree.is_none() && !rep.agree() {
            disagree = Some(format!("indices ({i},{j},{k},{l})"));
        }
    }
    r.expect("truncated defect nonzero", nonzero, || "defect vanishes on every index tuple".into());
    r.expect("displayed sum nonzero", nonzero_displayed, || "displayed sum vanishes on every index tuple".into());
    r.record("defect equals displayed sum", disagree);
    let full = coproduct::first_nonzero_defect(&leg, &leg, p, None)?;
    r.record("untruncated defect zero", full.map(|(idx, _)| format!("indices {idx:?}")));
    Ok(r)
}

/// Centrality, count and independence of the determinant Casimirs and the
/// quotient tower counts.
pub fn center_suite(ctx: &Ctx, seed: u64) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("center");
    let np = ctx.n * ctx.p;
    let tag = |s: &str| format!("N={} p={} {s}", ctx.n, ctx.p);
    let set = casimirs_from_det(ctx)?;
    r.expect(tag("count"), set.elements.len() == np, || format!("{} elements", set.elements.len()));
    let w = WAlgebra::new(*ctx);
    r.record(tag("central"), set.first_non_central(&w).map(|(k, g)| format!("{{C_{k}, {g}}} != 0")));
    let rank = set.generic_jacobian_rank(seed);
    r.expect(tag("jacobian rank"), rank == np, || format!("rank {rank}"));
    r.expect(tag("triangular leading terms"), set.leading_multiples().is_some(), || "not triangular".into());
    let full = center_tower(ctx, 0)?.len();
    let first_dropped = center_tower(ctx, 1)?.len();
    let top = center_tower(ctx, np)?.len();
    r.expect(tag("tower r=0"), full == np, || format!("{full}"));
    r.expect(tag("tower r=1"), first_dropped == np - 1, || format!("{first_dropped}"));
    r.expect(tag("tower r=Np"), top == 0, || format!("{top}"));
    r.expect(tag("tower r>Np rejected"), center_tower(ctx, np + 1).is_err(), || "accepted".into());
    Ok(r)
}

fn random_poly(rng: &mut ChaCha8Rng, gens: &[Gen]) -> PolyW {
    let mut out = PolyW::zero();
    for _ in 0..3 {
        let deg = rng.gen_range(0..=2);
        let m = Monomial::from_factors((0..deg).map(|_| gens[rng.gen_range(0..gens.len())]));
        out.add_term(m, q(rng.gen_range(-5..=5), rng.gen_range(1..=3)));
    }
    out
}

/// delta^2 = 0 on seeded random cochains, the first-order cocycle
/// condition and the order-2 consistency equation.
pub fn cohomology_suite(ctx: &Ctx, seed: u64) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("cohomology");
    let tag = |s: &str| format!("N={} p={} {s}", ctx.n, ctx.p);
    let gens = ctx.t_gens();
    let lie = loop_bracket(ctx);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for arity in 0..=2 {
        let chi = Cochain::from_fn(arity, gens.clone(), |_| random_poly(&mut rng, &gens));
        let dd = chevalley_delta(&chevalley_delta(&chi, &lie), &lie);
        r.expect(tag(&format!("delta squared arity {arity}")), dd.is_zero(), || "nonzero".into());
    }
    let rep = deformation_check(ctx, 2);
    r.expect(tag("first-order cocycle"), rep.first_order_cocycle, || "delta phi_1 != 0".into());
    for (n, ok) in rep.higher_orders {
        r.expect(tag(&format!("order {n} consistency")), ok, || format!("delta phi_{n} mismatch"));
    }
    Ok(r)
}
