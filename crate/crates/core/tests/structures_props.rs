mod common;

use common::{q, rand_d_poly, rng};
use homlie::fixtures;
use homlie::matrix::PolyMatrix;
use homlie::parse::{all_vars, parse_poly};
use homlie::structures::{check_hom_lie, check_representation, HomLieConformalAlgebra, Representation};
use homlie::{MultiPoly, PolyVector, Rational};
use proptest::prelude::*;

fn poly(s: &str) -> MultiPoly {
    parse_poly(s, &all_vars()).unwrap()
}

#[test]
fn virasoro_and_abelian_pass() {
    assert!(check_hom_lie(&fixtures::virasoro()).passed());
    for n in 1..=3 {
        let alpha = PolyMatrix::scalar(n, MultiPoly::int(2));
        assert!(check_hom_lie(&fixtures::abelian(n, alpha)).passed());
    }
}

#[test]
fn constant_bracket_fails_skew() {
    let alg = HomLieConformalAlgebra::new(
        vec!["e".into()],
        vec![vec![PolyVector::from_entries(vec![MultiPoly::one()])]],
        PolyMatrix::identity(1),
    )
    .unwrap();
    let r = check_hom_lie(&alg);
    assert!(!r.passed());
    let w = r.check("skew").unwrap().first_witness().unwrap();
    assert_eq!(w.value, PolyVector::from_entries(vec![MultiPoly::int(2)]));
    assert_eq!(w.to_string(), "at (e, e): e: 2");
}

#[test]
fn quadratic_action_fails_composition() {
    let vir = fixtures::virasoro();
    let rep = Representation::new(
        &vir,
        vec!["f".into()],
        vec![vec![PolyVector::from_entries(vec![poly("l^2")])]],
        PolyMatrix::identity(1),
    )
    .unwrap();
    let r = check_representation(&vir, &rep);
    let w = r.check("twisted-composition").unwrap().first_witness().unwrap();
    assert_eq!(w.value[0], poly("(l1 - l2)*(l1 + l2)^2"));
}

#[test]
fn virasoro_modules_pass() {
    let vir = fixtures::virasoro();
    for (delta, c) in [(q(0), q(0)), (q(1), q(0)), (q(1), Rational::new(1.into(), 2.into())), (q(2), q(-3))] {
        assert!(check_representation(&vir, &fixtures::vir_module(delta, c)).passed());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn bracket_is_sesquilinear(seed in any::<u64>()) {
        let mut r = rng(seed);
        let vir = fixtures::virasoro();
        let x = PolyVector::from_entries(vec![rand_d_poly(&mut r, 2)]);
        let y = PolyVector::from_entries(vec![rand_d_poly(&mut r, 2)]);
        let l = MultiPoly::l();
        let d = MultiPoly::d();
        let base = vir.bracket_at(&x, &y, &l);
        prop_assert_eq!(vir.bracket_at(&x.scale(&d), &y, &l), base.scale(&-&l));
        prop_assert_eq!(vir.bracket_at(&x, &y.scale(&d), &l), base.scale(&(&d + &l)));
    }

    #[test]
    fn action_is_sesquilinear(seed in any::<u64>(), delta in -3i64..=3, c in -3i64..=3) {
        let mut r = rng(seed);
        let m = fixtures::vir_module_int(delta, c);
        let x = PolyVector::from_entries(vec![rand_d_poly(&mut r, 2)]);
        let v = PolyVector::from_entries(vec![rand_d_poly(&mut r, 2)]);
        let l = MultiPoly::l();
        let d = MultiPoly::d();
        let base = m.act_at(&x, &v, &l);
        prop_assert_eq!(m.act_at(&x.scale(&d), &v, &l), base.scale(&-&l));
        prop_assert_eq!(m.act_at(&x, &v.scale(&d), &l), base.scale(&(&d + &l)));
    }

    #[test]
    fn every_virasoro_module_is_a_representation(dn in -6i64..=6, dd in 1i64..=3, cn in -6i64..=6, cd in 1i64..=3) {
        let m = fixtures::vir_module(Rational::new(dn.into(), dd.into()), Rational::new(cn.into(), cd.into()));
        prop_assert!(check_representation(&fixtures::virasoro(), &m).passed());
    }
}
