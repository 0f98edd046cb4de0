use super::*;
use crate::exact_algebra::{q, qi, Matrix, Scalar};

fn w(v: &[i64]) -> Vec<Scalar> {
    v.iter().map(|&x| qi(x)).collect()
}

#[test]
fn irreps_satisfy_gl_relations() {
    for weight in [vec![1, 0], vec![3, 0], vec![2, -1], vec![1, 0, 0], vec![2, 1, 0], vec![2, 0, -1], vec![1, 1, 0, 0]] {
        let pi = GlnIrrep::from_integers(&weight).unwrap();
        assert!(pi.relations_hold(), "{weight:?}");
        assert!(pi.highest_vector_ok(), "{weight:?}");
        assert_eq!(qi(pi.dim() as i64), weyl_dimension(&weight), "{weight:?}");
    }
}

#[test]
fn defining_irrep_raising_matrix() {
    let pi = GlnIrrep::from_integers(&[1, 0]).unwrap();
    let e12 = Matrix::from_rows(vec![vec![qi(0), qi(1)], vec![qi(0), qi(0)]]).unwrap();
    assert_eq!(pi.e(1, 2), &e12);
    assert_eq!(pi.e(1, 1), &Matrix::from_rows(vec![vec![qi(1), qi(0)], vec![qi(0), qi(0)]]).unwrap());
}

#[test]
fn symmetric_powers_have_integer_entries() {
    for k in 1..5 {
        let pi = GlnIrrep::from_integers(&[k, 0]).unwrap();
        assert_eq!(pi.dim(), k as usize + 1);
        for (i, j) in [(1, 2), (2, 1), (1, 1), (2, 2)] {
            assert!(pi.e(i, j).entries().all(|(_, x)| x.is_integer()));
        }
    }
}

#[test]
fn rejects_non_dominant() {
    assert!(GlnIrrep::from_integers(&[0, 1]).is_err());
    assert!(GlnIrrep::new(&[q(1, 2), qi(0)]).is_err());
}

#[test]
fn shifted_weight_diagonal() {
    let a = q(2, 3);
    let pi = GlnIrrep::new(&[a.clone() + qi(1), a.clone()]).unwrap();
    let rep = evaluation_rep(&pi);
    let d = rep.t(1, 1, 1);
    assert_eq!(d[(0, 0)], a.clone() + qi(1));
    assert_eq!(d[(1, 1)], a);
}

#[test]
fn rtt_routes_agree() {
    let cases: Vec<Vec<Vec<Scalar>>> = vec![
        vec![w(&[0, 0])],
        vec![w(&[1, 0])],
        vec![w(&[1, 0, 0])],
        vec![w(&[2, 0])],
        vec![vec![q(1, 2) + qi(1), q(1, 2)], vec![q(-1, 3) + qi(1), q(-1, 3)]],
        vec![w(&[1, 0]), w(&[1, 0]), vec![q(5, 2), q(3, 2)]],
        vec![w(&[1, 0, 0]), vec![q(1, 2), q(-1, 2), q(-1, 2)]],
    ];
    for f in cases {
        let rep = tensor_from_weights(&f).unwrap();
        assert_eq!(rtt_grid_failure(&rep), None, "{f:?}");
        assert_eq!(mode_relations_failure(&rep, rep.support_bound() + 1), None, "{f:?}");
        if rep.dim * rep.n <= 8 {
            assert!(rtt_symbolic_holds(&rep), "{f:?}");
        }
    }
}

#[test]
fn rtt_detects_broken_modes() {
    let mut pi = GlnIrrep::from_integers(&[1, 0]).unwrap();
    pi.action[1] = pi.action[1].scale(&qi(2));
    let rep = evaluation_rep(&pi);
    assert!(rtt_grid_failure(&rep).is_some());
    assert!(mode_relations_failure(&rep, 2).is_some());
    assert!(!rtt_symbolic_holds(&rep));
}

#[test]
fn tensor_support_property() {
    for n in 1..=3usize {
        let f: Vec<_> = (0..n).map(|k| vec![q(k as i64, 3) + qi(1), q(k as i64, 3)]).collect();
        let rep = tensor_from_weights(&f).unwrap();
        assert_eq!(rep.support(), n);
        for p in 1..=4 {
            assert_eq!(truncation_support(&rep, p), n <= p);
        }
    }
}

#[test]
fn second_mode_of_two_defining_legs() {
    let pi = GlnIrrep::from_integers(&[1, 0]).unwrap();
    let rep = tensor_reps(&[pi.clone(), pi.clone()]).unwrap();
    for i in 1..=2 {
        for j in 1..=2 {
            let mut expect = Matrix::<Scalar>::zeros(4, 4);
            for k in 1..=2 {
                expect.add_assign(&pi.e(i, k).kron(pi.e(k, j)));
            }
            assert_eq!(rep.t(i, j, 2), expect);
            assert_eq!(rep.t(i, j, 1), pi.e(i, j).kron(&Matrix::identity(2)).plus(&Matrix::identity(2).kron(pi.e(i, j))));
        }
    }
}

#[test]
fn highest_weights() {
    assert!(highest_weight(&YangianRep::trivial(2)).unwrap().same_as(&WeightSeries { coeffs: vec![vec![qi(1)]; 2] }));
    let one = tensor_from_weights(&[w(&[1, 0])]).unwrap();
    assert!(highest_weight(&one).unwrap().same_as(&WeightSeries { coeffs: vec![vec![qi(1), qi(1)], vec![qi(1)]] }));
    let (a, b) = (q(1, 2), q(-3, 4));
    let f = vec![vec![a.clone() + qi(1), a.clone()], vec![b.clone() + qi(1), b.clone()]];
    let hw = highest_weight(&tensor_from_weights(&f).unwrap()).unwrap();
    let (x, y) = (a.clone() + qi(1), b.clone() + qi(1));
    assert_eq!(hw.coeffs[0], vec![qi(1), x.clone() + y.clone(), x * y]);
    assert!(hw.same_as(&expected_weight(2, &f)));
}

fn series_at(s: &[Scalar], u: &Scalar) -> Scalar {
    s.iter().enumerate().fold(qi(0), |acc, (r, c)| acc + c / num_traits::pow::pow(u.clone(), r))
}

/// Monic polynomials with integer roots in [-4, 4], degree <= 3, whose
/// ratio matches lambda^i/lambda^{i+1} at sample points.
fn brute_force_drinfeld(w: &WeightSeries, i: usize) -> Vec<crate::exact_algebra::UniPoly> {
    use crate::exact_algebra::UniPoly;
    let mut found = Vec::new();
    let mut stack: Vec<(Vec<i64>, usize)> = vec![(vec![], 0)];
    while let Some((roots, _)) = stack.pop() {
        let p = roots.iter().fold(UniPoly::constant(qi(1)), |acc, &r| acc.mul(&UniPoly::linear(qi(r))));
        let ok = (7..15).map(|k| q(k, 3)).all(|u| {
            series_at(&w.coeffs[i], &u) * p.eval(&u) == series_at(&w.coeffs[i + 1], &u) * p.eval(&(u.clone() + qi(1)))
        });
        if ok {
            found.push(p);
        }
        if roots.len() < 3 {
            let lo = roots.last().copied().unwrap_or(-4);
            for r in lo..=4 {
                let mut next = roots.clone();
                next.push(r);
                stack.push((next, 0));
            }
        }
    }
    found
}

#[test]
fn drinfeld_matches_brute_force() {
    let cases: Vec<Vec<Vec<Scalar>>> = vec![
        vec![w(&[0, 0])],
        vec![w(&[1, 0])],
        vec![w(&[2, 0])],
        vec![w(&[3, 1])],
        vec![w(&[1, 0]), w(&[2, 1])],
        vec![w(&[1, 0]), w(&[-1, -2]), w(&[3, 2])],
        vec![w(&[1, 0, 0]), w(&[1, 1, 0])],
        vec![w(&[2, 1, 0])],
    ];
    for f in cases {
        let rep = tensor_from_weights(&f).unwrap();
        let hw = highest_weight(&rep).unwrap();
        let polys = drinfeld_polynomials(&hw).unwrap();
        for (i, p) in polys.iter().enumerate() {
            assert_eq!(brute_force_drinfeld(&hw, i), vec![p.clone()], "{f:?} P_{}", i + 1);
        }
    }
}

#[test]
fn drinfeld_small_cases() {
    use crate::exact_algebra::UniPoly;
    let one = |f: Vec<Vec<Scalar>>| drinfeld_polynomials(&highest_weight(&tensor_from_weights(&f).unwrap()).unwrap()).unwrap();
    assert_eq!(one(vec![w(&[1, 0])]), vec![UniPoly::x()]);
    assert_eq!(one(vec![w(&[0, 0, 0])]), vec![UniPoly::constant(qi(1)); 2]);
    // weight (2, 0): (u+2)/u = P(u+1)/P(u) forces P = u(u+1)
    assert_eq!(one(vec![w(&[2, 0])]), vec![UniPoly::x().mul(&UniPoly::linear(qi(-1)))]);
}

#[test]
fn drinfeld_rejects_bad_ratio() {
    let bad = WeightSeries { coeffs: vec![vec![qi(1), q(1, 2)], vec![qi(1)]] };
    assert!(drinfeld_polynomials(&bad).is_err());
    let neg = WeightSeries { coeffs: vec![vec![qi(1)], vec![qi(1), qi(1)]] };
    assert!(drinfeld_polynomials(&neg).is_err());
}

#[test]
fn qdet_small_cases() {
    // N = 1: q-det is T(u) itself
    let rep = tensor_from_weights(&[vec![q(3, 2)], vec![q(-1, 2)]]).unwrap();
    assert_eq!(qdet_series(&rep).unwrap().expansion(3), vec![qi(1), q(-3, 4), qi(0)]);
    assert!(qdet_series(&YangianRep::trivial(2)).unwrap().is_one());
    // defining gl(2): T11(u)T22(u-1) - T21(u)T12(u-1) evaluated by hand on e_1
    let def = tensor_from_weights(&[w(&[1, 0])]).unwrap();
    let s = qdet_series(&def).unwrap();
    assert_eq!(s, CenterSeries::from_linear_factors(&[qi(1)], &[qi(0)]).unwrap());
    let u = q(7, 5);
    let t = |i, j, x: &Scalar| def.t_at(i, j, &(qi(1) / x));
    let direct = t(1, 1, &u).dot(&t(2, 2, &(u.clone() - qi(1)))).minus(&t(2, 1, &u).dot(&t(1, 2, &(u.clone() - qi(1)))));
    let value = qi(1) + qi(1) / u.clone();
    assert_eq!(direct, Matrix::<Scalar>::identity(2).scale(&value));
}

#[test]
fn qdet_central_and_multiplicative() {
    let cases: Vec<Vec<Vec<Scalar>>> = vec![
        vec![w(&[1, 0]), vec![q(3, 2), q(1, 2)]],
        vec![w(&[1, 0, 0]), vec![q(1, 3), q(1, 3), q(-2, 3)]],
        vec![w(&[1, 0]), w(&[2, 0]), vec![q(1, 2), q(-1, 2)]],
    ];
    for f in cases {
        let rep = tensor_from_weights(&f).unwrap();
        let qd = qdet(&rep);
        assert!(qd.is_central(&rep));
        let s = qd.series().unwrap();
        let expect = f.iter().fold(CenterSeries::one(), |acc, x| acc.mul(&qdet::evaluation_series(x)));
        assert_eq!(s, expect, "{f:?}");
        let (a, b) = (tensor_from_weights(&f[..1]).unwrap(), tensor_from_weights(&f[1..]).unwrap());
        assert!(qdet::coideal_holds(&a, &b, 6).unwrap());
    }
}

#[test]
fn permutation_signs() {
    let perms = qdet::signed_permutations(3);
    assert_eq!(perms.len(), 6);
    for (p, s) in perms {
        let inv = (0..3).flat_map(|i| (i + 1..3).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
        assert_eq!(s, if inv % 2 == 0 { 1 } else { -1 });
    }
}

#[test]
fn center_series_expansion() {
    let d = vec![q(1, 2), qi(-3), qi(0), q(2, 7)];
    let s = CenterSeries::from_coefficients(&d);
    assert!(s.is_polynomial());
    let mut e = d.clone();
    e.extend([qi(0), qi(0)]);
    assert_eq!(s.expansion(6), e);
    let geo = CenterSeries::from_linear_factors(&[qi(0)], &[qi(-2)]).unwrap();
    assert_eq!(geo.expansion(4), vec![qi(2), qi(4), qi(8), qi(16)]);
}

#[test]
fn classify_examples() {
    use crate::exact_algebra::UniPoly;
    let lin = UniPoly::x();
    let data = DrinfeldData { polys: vec![lin.clone()], rho: CenterSeries::from_coefficients(&[qi(1)]) };
    match classify(&data, 2, 1).unwrap() {
        Verdict::Accepted(plan) => {
            assert_eq!(plan.factors, vec![w(&[1, 0])]);
            assert!(plan.center_matched);
        }
        v => panic!("{v:?}"),
    }
    let quad = DrinfeldData { polys: vec![lin.mul(&UniPoly::linear(qi(1)))], rho: CenterSeries::one() };
    assert_eq!(classify(&quad, 2, 1).unwrap(), Verdict::Rejected { degree: 2, bound: 1 });
    for p in 1..4 {
        let triv = DrinfeldData { polys: vec![UniPoly::constant(qi(1)); 2], rho: CenterSeries::one() };
        match classify(&triv, 3, p).unwrap() {
            Verdict::Accepted(plan) => assert!(plan.factors.is_empty() && plan.center_matched),
            v => panic!("{v:?}"),
        }
    }
    let irr = DrinfeldData { polys: vec![UniPoly::new(vec![qi(-2), qi(0), qi(1)])], rho: CenterSeries::one() };
    assert!(matches!(classify(&irr, 2, 2), Err(crate::Error::NotClassifiable(_))));
}

#[test]
fn classify_scalar_twist() {
    // one fundamental factor and a one-dimensional factor with shift 1/3
    let f = vec![w(&[1, 0]), vec![q(1, 3), q(1, 3)]];
    let data = drinfeld_data(&tensor_from_weights(&f).unwrap()).unwrap();
    match classify(&data, 2, 2).unwrap() {
        Verdict::Accepted(plan) => {
            assert!(plan.center_matched);
            assert_eq!(plan.scalar_shifts, vec![q(1, 3)]);
        }
        v => panic!("{v:?}"),
    }
    match classify(&data, 2, 1).unwrap() {
        Verdict::Accepted(plan) => assert!(!plan.center_matched),
        v => panic!("{v:?}"),
    }
}

#[test]
fn drinfeld_round_trip() {
    for f in [
        vec![vec![q(3, 2), q(1, 2)], vec![q(2, 7), q(-5, 7)]],
        vec![vec![q(4, 3), q(1, 3)], vec![q(-1, 5) + qi(1), q(-1, 5)], vec![q(9, 4), q(5, 4)]],
        vec![vec![q(3, 2), q(1, 2), q(1, 2)], vec![q(1, 3), q(1, 3), q(-2, 3)]],
    ] {
        let rep = tensor_from_weights(&f).unwrap();
        let data = drinfeld_data(&rep).unwrap();
        let plan = match classify(&data, rep.n, f.len()).unwrap() {
            Verdict::Accepted(plan) => plan,
            v => panic!("{v:?}"),
        };
        assert_eq!(plan.factors.len(), f.len());
        assert!(plan.center_matched);
        let rebuilt = drinfeld_data(&tensor_from_weights(&plan.factors).unwrap()).unwrap();
        assert_eq!(rebuilt, data);
        if f.len() > 1 {
            assert!(matches!(classify(&data, rep.n, f.len() - 1).unwrap(), Verdict::Rejected { .. }));
        }
    }
}

#[test]
fn untruncated_coproduct_is_a_morphism() {
    let a = tensor_from_weights(&[w(&[1, 0]), vec![q(1, 2), q(-1, 2)]]).unwrap();
    let b = tensor_from_weights(&[vec![q(2, 3), q(-1, 3)]]).unwrap();
    for m in 1..=3 {
        assert!(coproduct::first_nonzero_defect(&a, &b, m, None).unwrap().is_none());
    }
}

#[test]
fn truncated_coproduct_defect() {
    let leg = tensor_from_weights(&[w(&[1, 0])]).unwrap();
    // legs inside Y_1: nothing is dropped at p = 2
    assert!(coproduct::first_nonzero_defect(&leg, &leg, 2, Some(2)).unwrap().is_none());
    assert!(coproduct::first_nonzero_displayed(&leg, &leg, 2).unwrap().is_none());
    // legs with support 2 at p = 2: Delta(T_3) no longer vanishes
    let two = tensor_from_weights(&[w(&[1, 0]), vec![q(1, 2), q(-1, 2)]]).unwrap();
    let (idx, rep) = coproduct::first_nonzero_defect(&two, &two, 2, Some(2)).unwrap().expect("nonzero defect");
    let (i, j, k, l) = idx;
    let t3 = |a: usize, b: usize| coproduct_mode(&two, &two, a, b, 3, None);
    let mut dropped = Matrix::<Scalar>::zeros(rep.defect.rows(), rep.defect.cols());
    if k == j {
        dropped.add_assign(&t3(i, l));
    }
    if i == l {
        dropped = dropped.minus(&t3(k, j));
    }
    assert_eq!(rep.defect, dropped.neg());
    // the displayed sum telescopes to T_{p+1} (x) 1 - 1 (x) T_{p+1}
    assert!(rep.displayed.is_zero());
}

#[test]
fn subquotient_dimensions() {
    let def = w(&[1, 0]);
    for (shift, expect) in [(qi(1), 3), (qi(-1), 3), (q(1, 2), 4), (qi(3), 4)] {
        let other = vec![qi(1) + shift.clone(), shift.clone()];
        let rep = tensor_from_weights(&[def.clone(), other]).unwrap();
        assert_eq!(irreducible_dimension(&rep), expect, "shift {shift}");
        let quo = irreducible_quotient(&rep).unwrap();
        assert_eq!(quo.dim, expect);
        assert_eq!(rtt_grid_failure(&quo), None);
        assert!(highest_weight(&quo).unwrap().same_as(&highest_weight(&rep).unwrap()));
    }
    // the 3-dim quotient has the gl(2) character of weight (2, 0)
    assert_eq!(weyl_dimension(&[2, 0]), qi(3));
}
