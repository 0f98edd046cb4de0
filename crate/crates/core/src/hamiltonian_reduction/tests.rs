use super::closed_forms::{compare_delta, loop_bracket, pb1j, w0_bracket};
use super::dirac::{hbar_coefficient, min_hbar_power, DiracSystem};
use super::soldering::{gauge_fixed_current, weight_homogeneous};
use super::*;
use crate::exact_algebra::bracket::jacobi_holds;
use crate::exact_algebra::scalar::qi;
use crate::exact_algebra::{GeneratorBracket, Matrix};

fn ctx(n: usize, p: usize) -> Ctx {
    Ctx::new(n, p).unwrap()
}

#[test]
fn constraint_count_and_invertibility() {
    for (n, p) in [(1, 2), (2, 2), (1, 3), (2, 3)] {
        let sys = DiracSystem::new(ctx(n, p)).unwrap();
        assert_eq!(sys.constraints().len(), n * n * p * (p - 1));
        let k = sys.constraints().len();
        let prod = sys.delta(&PolyW::one()).dot(&sys.delta_bar());
        assert_eq!(prod, Matrix::identity(k), "Delta * inverse at N={n} p={p}");
    }
}

#[test]
fn delta_hat_nilpotent_within_bound() {
    for (n, p) in [(1, 2), (2, 2), (1, 3), (2, 3), (1, 4)] {
        let sys = DiracSystem::new(ctx(n, p)).unwrap();
        let idx = sys.nilpotency_index().unwrap();
        assert!(idx < 2 * p, "index {idx} at N={n} p={p}");
    }
}

#[test]
fn dirac_compatible_with_constraints() {
    for (n, p) in [(1, 2), (2, 2)] {
        let c = ctx(n, p);
        let sys = DiracSystem::new(c).unwrap();
        for x in c.j_gens() {
            for phi in sys.constraints() {
                let v = sys.dirac_bracket(&PolyW::var(x), &PolyW::var(*phi));
                assert!(v.is_zero(), "{{{x}, {phi}}}* = {v}");
            }
        }
    }
}

#[test]
fn dirac_jacobi_n1_p2() {
    let sys = DiracSystem::new(ctx(1, 2)).unwrap();
    let table = sys.w_table();
    assert!(jacobi_holds(&table, table.gens()).is_ok());
}

#[test]
fn soldering_raw_extraction_antisymmetric() {
    for (n, p) in [(1, 2), (2, 2), (1, 3), (2, 3)] {
        let c = ctx(n, p);
        let b = GlpBasis::new(p).unwrap();
        assert_eq!(WAlgebra::raw_antisymmetry_defect(&c, &b), None, "N={n} p={p}");
    }
}

#[test]
fn soldering_jacobi() {
    for (n, p) in [(1, 2), (2, 2), (1, 3), (2, 3), (1, 4)] {
        let w = WAlgebra::new(ctx(n, p));
        assert!(jacobi_holds(&w, w.table().gens()).is_ok(), "N={n} p={p}");
    }
}

#[test]
fn soldering_w0_acts_as_gl_n() {
    for (n, p) in [(1, 2), (2, 2), (2, 3), (3, 2)] {
        let c = ctx(n, p);
        let w = WAlgebra::new(c);
        for g in c.w_gens().into_iter().filter(|g| g.mode == 0) {
            for h in c.w_gens() {
                let want = w0_bracket(&c, g.ai(), g.bi(), h.ai(), h.bi(), h.mode());
                assert_eq!(w.gen_bracket(&g, &h), want, "{{{g}, {h}}}");
            }
        }
    }
}

#[test]
fn soldering_matches_pb1j() {
    for (n, p) in [(1, 2), (2, 2), (1, 3), (2, 3), (1, 4), (2, 4)] {
        let c = ctx(n, p);
        let w = WAlgebra::new(c);
        for g in c.w_gens().into_iter().filter(|g| g.mode == 1) {
            for h in c.w_gens() {
                let want = pb1j(&c, g.ai(), g.bi(), h.ai(), h.bi(), h.mode()).unwrap();
                assert_eq!(w.gen_bracket(&g, &h), want, "{{{g}, {h}}} at N={n} p={p}");
            }
        }
    }
}

#[test]
fn gauge_parameters_are_graded() {
    for (n, p) in [(1, 3), (2, 3), (1, 4)] {
        let c = ctx(n, p);
        let b = GlpBasis::new(p).unwrap();
        assert!(weight_homogeneous(&solder_solve(&c, &b)));
    }
}

#[test]
fn gauge_fixed_current_shape() {
    let c = ctx(2, 3);
    let b = GlpBasis::new(3).unwrap();
    let j = gauge_fixed_current(&c, &b);
    assert_eq!(j.rows(), 6);
    // W_0 sits on the block diagonal with unit weight
    assert_eq!(j[(0, 3)], PolyW::var(Gen::w(1, 2, 0)));
}

#[test]
fn dirac_and_soldering_agree() {
    for (n, p) in [(1, 2), (2, 2), (1, 3)] {
        let c = ctx(n, p);
        let sys = DiracSystem::new(c).unwrap();
        let kappa = normalization_factors(sys.basis());
        let w = WAlgebra::with_basis(c, sys.basis());
        assert_eq!(compare_routes(&c, &sys.w_table(), w.table(), &kappa), None, "N={n} p={p}");
    }
}

#[test]
fn hbar_dirac_deforms_loop_algebra() {
    for (n, p) in [(1, 2), (2, 2)] {
        let c = ctx(n, p);
        let sys = DiracSystem::new(c).unwrap();
        for x in c.w_gens() {
            for y in c.w_gens() {
                let jx = PolyW::var(Gen::j(x.ai(), x.bi(), x.mode(), x.mode() as i64));
                let jy = PolyW::var(Gen::j(y.ai(), y.bi(), y.mode(), y.mode() as i64));
                let v = sys.dirac_bracket_hbar(&jx, &jy);
                if let Some(lo) = min_hbar_power(&v) {
                    assert!(lo >= 0, "{{{x}, {y}}} has hbar^{lo}");
                }
                let want = loop_bracket(&c, x.ai(), x.bi(), x.mode(), y.ai(), y.bi(), y.mode());
                assert_eq!(hbar_coefficient(&v, 0), want, "{{{x}, {y}}}");
            }
        }
    }
}

#[test]
fn printed_delta_comparison() {
    for (n, p) in [(1, 2), (2, 2), (2, 3)] {
        let sys = DiracSystem::new(ctx(n, p)).unwrap();
        let cmp = compare_delta(&sys);
        // printed constant term corresponds to J_{1,-1} pinned at 1/2
        assert_eq!(cmp.constant_ratio, Some(qi(2)));
        assert!(cmp.linear_part_matches && cmp.hat_consistent);
        // the printed inverse puts the pairing factor on the row side, which
        // only commutes past the series when N = 1
        assert_eq!(cmp.inverse_consistent, n == 1, "N={n} p={p}");
    }
}

