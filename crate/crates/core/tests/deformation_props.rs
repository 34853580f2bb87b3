mod common;

use common::{q, rand_d_poly, rand_map, rng};
use homlie::deformation::*;
use homlie::fixtures;
use homlie::matrix::PolyMatrix;
use homlie::operator::{check_ooperator, delta_t, map_cochain};
use homlie::structures::Representation;
use homlie::{MultiPoly, PolyVector, Rational};
use proptest::prelude::*;
use rand::Rng;

/// `a + b d + c d^2` for all small integer `a, b, c`.
fn quadratic_maps() -> Vec<PolyMatrix> {
    let mut out = Vec::new();
    for a in -1..=1 {
        for b in -1..=1 {
            for c in -1..=1 {
                let p = &(&MultiPoly::int(a) + &(&MultiPoly::int(b) * &MultiPoly::d())) + &(&MultiPoly::int(c) * &MultiPoly::d().pow(2));
                out.push(PolyMatrix::from_rows(vec![vec![p]]).unwrap());
            }
        }
    }
    out
}

#[test]
fn linear_deformations_are_cocycles() {
    let vir = fixtures::virasoro();
    let t = fixtures::t1();
    let mut passing = 0;
    for c in [0, 1] {
        let m = fixtures::vir_module_int(1, c);
        for dmap in quadratic_maps() {
            let r = check_linear_deformation(&vir, &m, &t, &dmap).unwrap();
            if r.passed() {
                passing += 1;
                assert!(delta_t(&vir, &m, &t, &map_cochain(&vir, &m, &dmap).unwrap()).unwrap().is_zero());
            }
        }
    }
    assert!(passing >= 2);
}

#[test]
fn obstructions_are_cocycles() {
    let vir = fixtures::virasoro();
    let t = fixtures::t1();
    let mut nonzero = 0;
    for c in [0, 1] {
        let m = fixtures::vir_module_int(1, c);
        for dmap in quadratic_maps() {
            let s = DeformationSequence::new(t.clone(), vec![dmap]).unwrap();
            if !check_order_k(&vir, &m, &s).unwrap().passed() {
                continue;
            }
            let ob = obstruction(&vir, &m, &s).unwrap();
            if !ob.is_zero() {
                nonzero += 1;
            }
            assert!(delta_t(&vir, &m, &t, &ob).unwrap().is_zero());
            if let Some(x) = extend_order(&vir, &m, &s, 2).unwrap() {
                assert!(check_order_k(&vir, &m, &s.extended(x).unwrap()).unwrap().passed());
            }
        }
    }
    assert!(nonzero > 0);
}

#[test]
fn strict_range_skips_first_terms() {
    let vir = fixtures::virasoro();
    let m = fixtures::vir_module_int(1, 0);
    let dmap = PolyMatrix::from_rows(vec![vec![MultiPoly::d()]]).unwrap();
    let s = DeformationSequence::new(fixtures::t1(), vec![dmap]).unwrap();
    assert!(check_order_k(&vir, &m, &s).unwrap().passed());
    assert!(!obstruction(&vir, &m, &s).unwrap().is_zero());
    assert!(obstruction_with(&vir, &m, &s, ObstructionRange::Strict).unwrap().is_zero());
}

#[test]
fn search_on_abelian_accepts_everything() {
    let ab = fixtures::abelian(1, PolyMatrix::identity(1));
    let rep = Representation::trivial(&ab, vec!["f".into()], PolyMatrix::identity(1)).unwrap();
    let coeffs = [q(0), q(1), q(-1)];
    let r = search_ooperators(&ab, &rep, 1, &coeffs).unwrap();
    assert_eq!(r.candidates.len(), 9);
    assert!(r.constraints.is_empty());
}

#[test]
fn search_results_are_sound() {
    let vir = fixtures::virasoro();
    let coeffs = [q(-1), q(0), q(1)];
    for delta in 0..=2 {
        let m = fixtures::vir_module_int(delta, 0);
        let r = search_ooperators(&vir, &m, 1, &coeffs).unwrap();
        for t in &r.candidates {
            assert!(check_ooperator(&vir, &m, t).unwrap().passed());
        }
        assert_eq!(r.unknowns.len(), 2);
    }
}

#[test]
fn search_rejects_huge_spaces() {
    let vir = fixtures::virasoro();
    let coeffs: Vec<Rational> = (0..50).map(q).collect();
    assert!(search_ooperators(&vir, &fixtures::vir_module_int(1, 0), 4, &coeffs).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn trivial_generators_on_abelian(seed in any::<u64>()) {
        let mut r = rng(seed);
        let ab = fixtures::abelian(2, PolyMatrix::identity(2));
        let rep = Representation::trivial(&ab, vec!["f".into()], PolyMatrix::identity(1)).unwrap();
        let t = rand_map(&mut r, 2, 1, 1);
        let x = PolyVector::from_entries(vec![rand_d_poly(&mut r, 1), rand_d_poly(&mut r, 1)]);
        prop_assert!(nijenhuis_element_check(&ab, &rep, &t, &x).unwrap().passed());
        let g = trivial_generator(&ab, &rep, &t, &x).unwrap();
        prop_assert!(check_linear_deformation(&ab, &rep, &t, &g).unwrap().passed());
        let same = rand_map(&mut r, 2, 1, 1);
        prop_assert!(equivalence_check_linear(&ab, &rep, &t, &same, &same, &x).unwrap().passed());
    }

    #[test]
    fn trivial_generator_commutes_with_twists(seed in any::<u64>(), c in -2i64..=2) {
        let mut r = rng(seed);
        let vir = fixtures::virasoro();
        let m = fixtures::vir_module_int(1, c);
        let x = PolyVector::from_entries(vec![MultiPoly::int(r.gen_range(-3..=3))]);
        let g = trivial_generator(&vir, &m, &fixtures::t1(), &x).unwrap();
        prop_assert!(g.mul(&m.beta).sub(&vir.alpha.mul(&g)).is_zero());
        let nij = nijenhuis_element_check(&vir, &m, &fixtures::t1(), &x).unwrap();
        if nij.passed() {
            prop_assert!(check_linear_deformation(&vir, &m, &fixtures::t1(), &g).unwrap().passed());
        }
    }

    #[test]
    fn extension_round_trip(seed in any::<u64>(), c in 0i64..=1) {
        let mut r = rng(seed);
        let vir = fixtures::virasoro();
        let m = fixtures::vir_module_int(1, c);
        let k = MultiPoly::int(r.gen_range(-2..=2));
        let s = DeformationSequence::new(fixtures::t1(), vec![PolyMatrix::scalar(1, k)]).unwrap();
        prop_assert!(check_order_k(&vir, &m, &s).unwrap().passed());
        let x = extend_order(&vir, &m, &s, 1).unwrap();
        prop_assert!(x.is_some());
        let ext = s.extended(x.unwrap()).unwrap();
        prop_assert!(check_order_k(&vir, &m, &ext).unwrap().passed());
    }
}
