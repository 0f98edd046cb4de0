use proptest::prelude::*;

use truncw::center_cohomology::center_tower;
use truncw::exact_algebra::matrix::{charpoly, det};
use truncw::exact_algebra::{fmt_frac, parse_frac, q, qi, Ctx, Gen, GeneratorBracket, Matrix, Monomial, PolyW, Scalar};
use truncw::glnp_basis::GlpBasis;
use truncw::poisson_yangian::PoissonYangian;
use truncw::representations::{
    classify, drinfeld_data, mode_relations_failure, qdet, rtt_grid_failure, tensor_from_weights, Verdict,
};

fn rational() -> impl Strategy<Value = Scalar> {
    (-20i64..=20, 1i64..=9).prop_map(|(n, d)| q(n, d))
}

fn matrix(n: usize) -> impl Strategy<Value = Matrix<Scalar>> {
    prop::collection::vec(rational(), n * n).prop_map(move |v| Matrix::from_fn(n, n, |i, j| v[i * n + j].clone()))
}

fn yangian_poly(ctx: Ctx) -> impl Strategy<Value = PolyW> {
    let gens = ctx.t_gens();
    let k = gens.len();
    prop::collection::vec((prop::collection::vec(0..k, 0..=2), -4i64..=4), 1..=3).prop_map(move |terms| {
        let mut out = PolyW::zero();
        for (idx, c) in terms {
            out.add_term(Monomial::from_factors(idx.into_iter().map(|i| gens[i])), qi(c));
        }
        out
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn fractions_round_trip(x in rational()) {
        prop_assert_eq!(parse_frac(&fmt_frac(&x)).unwrap(), x);
    }

    #[test]
    fn matrix_product_associative(a in matrix(3), b in matrix(3), c in matrix(3)) {
        prop_assert_eq!(a.dot(&b).dot(&c), a.dot(&b.dot(&c)));
    }

    #[test]
    fn inverse_is_two_sided(a in matrix(3)) {
        if let Ok(inv) = a.inverse() {
            prop_assert_eq!(a.dot(&inv), Matrix::identity(3));
            prop_assert_eq!(inv.dot(&a), Matrix::identity(3));
        } else {
            prop_assert_eq!(det(&a), qi(0));
        }
    }

    #[test]
    fn charpoly_constant_term_is_signed_det(a in matrix(3)) {
        let c = charpoly(&a);
        prop_assert_eq!(c[3].clone(), -det(&a));
        prop_assert_eq!(c[1].clone(), -a.trace());
    }

    #[test]
    fn basis_products_reexpand(p in 1usize..=5, x in 0usize..64, y in 0usize..64) {
        let b = GlpBasis::new(p).unwrap();
        let labels = b.labels();
        let (j, m) = labels[x % labels.len()];
        let (l, n) = labels[y % labels.len()];
        let mut acc = Matrix::zeros(p, p);
        for (r, c) in b.product_terms(j, m, l, n) {
            acc.add_assign(&b.mat(r, m + n).scale(&c));
        }
        prop_assert_eq!(acc, b.mat(j, m).dot(b.mat(l, n)));
    }

    #[test]
    fn yangian_bracket_antisymmetric_and_jacobi(
        x in yangian_poly(Ctx::new(2, 2).unwrap()),
        y in yangian_poly(Ctx::new(2, 2).unwrap()),
        z in yangian_poly(Ctx::new(2, 2).unwrap()),
    ) {
        let b = PoissonYangian::new(Ctx::new(2, 2).unwrap());
        prop_assert!((&b.bracket(&x, &y) + &b.bracket(&y, &x)).is_zero());
        let jac = &(&b.bracket(&x, &b.bracket(&y, &z)) + &b.bracket(&y, &b.bracket(&z, &x))) + &b.bracket(&z, &b.bracket(&x, &y));
        prop_assert!(jac.is_zero());
    }

    #[test]
    fn tower_drops_first_r(n in 1usize..=3, p in 1usize..=3, r in 0usize..=9) {
        let ctx = Ctx::new(n, p).unwrap();
        match center_tower(&ctx, r) {
            Ok(s) => prop_assert_eq!(s.len(), n * p - r),
            Err(_) => prop_assert!(r > n * p),
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn evaluation_products_are_yangian_modules(
        shifts in prop::collection::vec((-6i64..=6, 1i64..=5), 1..=2),
        top in 1i64..=2,
    ) {
        let factors: Vec<Vec<Scalar>> =
            shifts.iter().map(|&(a, d)| vec![qi(top) + q(a, d), q(a, d)]).collect();
        let rep = tensor_from_weights(&factors).unwrap();
        prop_assert_eq!(rtt_grid_failure(&rep), None);
        prop_assert_eq!(mode_relations_failure(&rep, rep.support_bound() + 1), None);
        prop_assert!(rep.support() <= factors.len());
        prop_assert!(qdet(&rep).is_central(&rep));
    }

    #[test]
    fn drinfeld_round_trip_counts_generic_factors(
        shifts in prop::collection::vec((-6i64..=6, 2i64..=7), 1..=3),
    ) {
        let values: Vec<Scalar> = shifts.iter().map(|&(a, d)| q(a, d)).collect();
        // generic: no two shifts differ by an integer
        for (i, a) in values.iter().enumerate() {
            for b in &values[i + 1..] {
                prop_assume!(!(a - b).is_integer());
            }
        }
        let factors: Vec<Vec<Scalar>> = values.iter().map(|c| vec![qi(1) + c, c.clone()]).collect();
        let rep = tensor_from_weights(&factors).unwrap();
        let data = drinfeld_data(&rep).unwrap();
        match classify(&data, 2, factors.len()).unwrap() {
            Verdict::Accepted(plan) => {
                prop_assert_eq!(plan.factors.len(), factors.len());
                prop_assert!(plan.center_matched);
                let rebuilt = drinfeld_data(&tensor_from_weights(&plan.factors).unwrap()).unwrap();
                prop_assert_eq!(rebuilt, data);
            }
            v => prop_assert!(false, "rejected: {:?}", v),
        }
    }
}

#[test]
fn yangian_generators_close() {
    let ctx = Ctx::new(2, 2).unwrap();
    let b = PoissonYangian::new(ctx);
    let v = b.gen_bracket(&Gen::t(1, 2, 1), &Gen::t(2, 1, 1));
    // {T^12_1, T^21_1} = T^22_0 T^11_1 - T^22_1 T^11_0
    assert_eq!(v, &PolyW::var(Gen::t(1, 1, 1)) - &PolyW::var(Gen::t(2, 2, 1)));
}
