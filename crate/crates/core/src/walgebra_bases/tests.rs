use super::checks::*;
use super::*;
use crate::hamiltonian_reduction::WAlgebra;

fn setup(n: usize, p: usize) -> (Ctx, GlpBasis, WAlgebra) {
    let c = Ctx::new(n, p).unwrap();
    let b = GlpBasis::new(p).unwrap();
    let w = WAlgebra::with_basis(c, &b);
    (c, b, w)
}

#[test]
fn seeds_match_explicit_formula() {
    for (n, p) in [(1, 1), (1, 2), (2, 2), (1, 3), (2, 3), (3, 2)] {
        let (c, b, _) = setup(n, p);
        for s in [BasisSign::Minus, BasisSign::Plus] {
            let fam = wbar_build(&c, &b, s, 1).unwrap();
            let w0 = Matrix::from_fn(n, n, |a, bb| PolyW::var(Gen::w(a + 1, bb + 1, 0)));
            assert_eq!(fam.get(0), w0.scale(&Scalar::from_integer((p as i64).into())), "W0 N={n} p={p}");
            assert_eq!(fam.get(1), seed_w1(&c, s), "W1 {s:?} N={n} p={p}");
        }
    }
}

#[test]
fn p1_seeds() {
    let (c, b, _) = setup(1, 1);
    let minus = wbar_build(&c, &b, BasisSign::Minus, 1).unwrap();
    assert!(minus.get(1).is_zero());
    let plus = wbar_build(&c, &b, BasisSign::Plus, 1).unwrap();
    let w0 = PolyW::var(Gen::w(1, 1, 0));
    assert_eq!(plus.entry(1, 1, 1), &w0 * &w0);
}

#[test]
fn endpoint_coefficients() {
    for (n, p) in [(1, 2), (2, 2), (1, 3), (2, 3), (1, 4)] {
        let (c, b, _) = setup(n, p);
        for s in [BasisSign::Minus, BasisSign::Plus] {
            let fam = wbar_build(&c, &b, s, p + 1).unwrap();
            for j in 0..=p + 1 {
                endpoint_check(&fam, j).unwrap();
            }
        }
    }
}

#[test]
fn pbn_holds_both_families() {
    for (n, p) in [(1, 2), (2, 2), (1, 3), (2, 3)] {
        let (c, b, w) = setup(n, p);
        for s in [BasisSign::Minus, BasisSign::Plus] {
            let fam = wbar_build(&c, &b, s, p + 1).unwrap();
            for j in 1..=p {
                pbn_check(&w, &fam, j).unwrap();
            }
        }
    }
}

#[test]
fn change_of_basis_round_trip() {
    for (n, p) in [(1, 2), (2, 2), (2, 3)] {
        let (c, b, _) = setup(n, p);
        let minus = wbar_build(&c, &b, BasisSign::Minus, p + 1).unwrap();
        let plus = wbar_build(&c, &b, BasisSign::Plus, p + 1).unwrap();
        for j in 0..=p + 1 {
            assert_eq!(change_of_basis(&minus, j), plus.get(j), "plus from minus, j={j}");
            assert_eq!(change_of_basis(&plus, j), minus.get(j), "minus from plus, j={j}");
        }
    }
}

#[test]
fn seeds_sum_to_p_squared_w0_squared() {
    let (c, _, _) = setup(2, 3);
    let sum = seed_w1(&c, BasisSign::Plus).plus(&seed_w1(&c, BasisSign::Minus));
    let w0 = Matrix::from_fn(2, 2, |a, b| PolyW::var(Gen::w(a + 1, b + 1, 0)));
    assert_eq!(sum, w0.dot(&w0).scale(&Scalar::from_integer(9.into())));
}

#[test]
fn mixed_brackets() {
    for (n, p) in [(2, 2), (2, 3)] {
        let (c, b, w) = setup(n, p);
        let minus = wbar_build(&c, &b, BasisSign::Minus, p + 1).unwrap();
        let plus = wbar_build(&c, &b, BasisSign::Plus, p + 1).unwrap();
        for j in 1..=p {
            mixed_bracket_check(&w, &plus, &minus, j).unwrap();
            mixed_bracket_check(&w, &minus, &plus, j).unwrap();
        }
    }
}

#[test]
fn truncation_of_minus_family() {
    for (n, p) in [(1, 1), (1, 2), (2, 2), (2, 3)] {
        let (c, b, w) = setup(n, p);
        let plus = wbar_build(&c, &b, BasisSign::Plus, p + 1).unwrap();
        assert!(change_of_basis(&plus, p).is_zero(), "minus W_p from plus, N={n} p={p}");
        assert!(!plus.get(p).is_zero());
        let minus = wbar_build(&c, &b, BasisSign::Minus, p + 1).unwrap();
        pbn_check(&w, &minus, p - 1 + usize::from(p == 1)).unwrap();
    }
}

#[test]
fn recursion_identity() {
    for (n, p) in [(1, 2), (2, 2), (2, 3)] {
        let (c, b, w) = setup(n, p);
        for s in [BasisSign::Minus, BasisSign::Plus] {
            let fam = wbar_build(&c, &b, s, p + 1).unwrap();
            for j in 1..=p {
                recursion_check(&w, &fam, j).unwrap();
            }
        }
    }
}

#[test]
fn w2wj_identity() {
    let (c, b, w) = setup(2, 3);
    for s in [BasisSign::Minus, BasisSign::Plus] {
        let fam = wbar_build(&c, &b, s, 4).unwrap();
        for j in 1..=2 {
            w2wj_check(&w, &fam, j).unwrap();
        }
    }
}

#[test]
fn trace_of_w1_commutes() {
    for (n, p) in [(2, 2), (2, 3)] {
        let (c, b, w) = setup(n, p);
        let fam = wbar_build(&c, &b, BasisSign::Minus, p).unwrap();
        for j in 0..p {
            for seed in 0..3 {
                trace_commutes_check(&w, &fam, j, seed).unwrap();
            }
        }
    }
}

#[test]
fn identification_small() {
    for (n, p) in [(1, 1), (1, 2), (2, 1), (2, 2), (1, 3), (2, 3)] {
        let (c, b, w) = setup(n, p);
        let minus = wbar_build(&c, &b, BasisSign::Minus, p).unwrap();
        let bad: Vec<_> = identify_with_yangian(&w, &minus).into_iter().filter(|r| !r.2).collect();
        assert!(bad.is_empty(), "N={n} p={p}: {:?}", &bad[..bad.len().min(3)]);
    }
}
