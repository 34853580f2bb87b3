mod common;

use common::{q, rand_cochain, rand_map, rng};
use homlie::complex::CochainKind;
use homlie::fixtures;
use homlie::matrix::PolyMatrix;
use homlie::operator::*;
use homlie::structures::{adjoint_rep, check_hom_lie, check_representation, semidirect, HomLieConformalAlgebra, Representation};
use homlie::{MultiPoly, PolyVector, Rational};
use proptest::prelude::*;
use rand::Rng;

fn ab2_pair() -> (HomLieConformalAlgebra, Representation) {
    let ab = fixtures::abelian(2, PolyMatrix::identity(2));
    let rep = Representation::trivial(&ab, vec!["f".into()], PolyMatrix::identity(1)).unwrap();
    (ab, rep)
}

fn four_predicates(alg: &HomLieConformalAlgebra, rep: &Representation, t: &PolyMatrix) -> [bool; 4] {
    let identity = check_ooperator(alg, rep, t).unwrap().passed();
    let mc = check_mc_operator(alg, rep, t).unwrap().passed();
    let graph = check_graph(alg, rep, t).unwrap().passed();
    let nij = nijenhuis_check(&semidirect(alg, rep), &n_from_t(t)).unwrap().passed();
    [identity, mc, graph, nij]
}

#[test]
fn positive_and_negative_witnesses() {
    let vir = fixtures::virasoro();
    let m = fixtures::vir_module_int(1, 0);
    assert_eq!(four_predicates(&vir, &m, &fixtures::t1()), [true; 4]);
    let ad = adjoint_rep(&vir, 0);
    for k in [1, -2, 3] {
        let t = PolyMatrix::scalar(1, MultiPoly::int(k));
        assert_eq!(four_predicates(&vir, &ad, &t), [false; 4]);
    }
}

#[test]
fn module_of_weight_two_rejects_t1() {
    let vir = fixtures::virasoro();
    let r = check_ooperator(&vir, &fixtures::vir_module_int(2, 0), &fixtures::t1()).unwrap();
    assert_eq!(r.first_failure().unwrap().first_witness().unwrap().to_string(), "at (f, f): e: -1*d - 2*l");
}

#[test]
fn induced_structures_of_t1() {
    let vir = fixtures::virasoro();
    for c in [q(0), q(1), Rational::new((-1).into(), 2.into())] {
        let m = fixtures::vir_module(q(1), c.clone());
        let t = fixtures::t1();
        let pl = pre_lie_from(&vir, &m, &t).unwrap();
        assert!(check_hom_pre_lie(&pl).passed());
        let expected = &(&MultiPoly::d() + &MultiPoly::l()) + &MultiPoly::constant(c.clone());
        assert_eq!(pl.product[0][0][0], expected);
        let sub = subadjacent(&pl);
        assert_eq!(sub.bracket[0][0][0], &MultiPoly::d() + &MultiPoly::int(2) * &MultiPoly::l());
        assert!(check_hom_lie(&sub).passed());
        let rt = rho_t(&vir, &m, &t).unwrap();
        assert_eq!(rt.action[0][0][0], expected);
        assert!(check_representation(&sub, &rt).passed());
    }
}

#[test]
fn rota_baxter_identity_weights() {
    let vir = fixtures::virasoro();
    let id = PolyMatrix::identity(1);
    assert!(check_rota_baxter(&vir, &id, 0, &q(-1)).unwrap().passed());
    let r = check_rota_baxter(&vir, &id, 0, &q(-2)).unwrap();
    let w = r.first_failure().unwrap().first_witness().unwrap();
    assert_eq!(w.value[0], &MultiPoly::d() + &MultiPoly::int(2) * &MultiPoly::l());
    assert!(check_rota_baxter(&vir, &PolyMatrix::zero(1, 1), 0, &q(5)).unwrap().passed());
}

#[test]
fn nijenhuis_operators_on_virasoro() {
    let vir = fixtures::virasoro();
    assert!(nijenhuis_check(&vir, &PolyMatrix::identity(1)).unwrap().passed());
    let dmap = PolyMatrix::from_rows(vec![vec![MultiPoly::d()]]).unwrap();
    assert!(!nijenhuis_check(&vir, &dmap).unwrap().passed());
}

#[test]
fn square_of_scaled_identity() {
    let vir = fixtures::virasoro();
    let ad = adjoint_rep(&vir, 0);
    let t = map_cochain(&vir, &ad, &PolyMatrix::scalar(1, MultiPoly::int(3))).unwrap();
    let sq = graded_bracket(&vir, &ad, &t, &t).unwrap();
    let expected = &MultiPoly::int(18) * &(&MultiPoly::d() + &MultiPoly::int(2) * &MultiPoly::lam(1));
    assert_eq!(sq.get(&[0, 0])[0], expected);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn characterizations_agree(seed in any::<u64>(), use_ab in any::<bool>()) {
        let mut r = rng(seed);
        let (alg, rep) = if use_ab { ab2_pair() } else { (fixtures::virasoro(), fixtures::vir_module_int(1, 0)) };
        let t = if !use_ab && r.gen_bool(0.5) {
            PolyMatrix::scalar(1, MultiPoly::int(r.gen_range(-3..=3)))
        } else {
            rand_map(&mut r, alg.rank(), rep.mrank(), 1)
        };
        let p = four_predicates(&alg, &rep, &t);
        prop_assert!(p.iter().all(|&b| b == p[0]), "{:?} for {}", p, t);
    }

    #[test]
    fn square_matches_closed_form(seed in any::<u64>()) {
        let mut r = rng(seed);
        let alg = common::vir_extension();
        let rep = adjoint_rep(&alg, 0);
        let t = rand_map(&mut r, 2, 2, 1);
        let tc = map_cochain(&alg, &rep, &t).unwrap();
        prop_assert_eq!(graded_bracket(&alg, &rep, &tc, &tc).unwrap(), graded_square_closed_form(&alg, &rep, &t).unwrap());
    }

    #[test]
    fn graded_bracket_is_antisymmetric(seed in any::<u64>(), p in 1usize..=2) {
        let mut r = rng(seed);
        let vir = fixtures::virasoro();
        let m = fixtures::vir_module_int(1, 1);
        let f = rand_cochain(&mut r, 1, CochainKind::ModuleToAlgebra, m.space(), vir.space(), 1);
        let g = rand_cochain(&mut r, p, CochainKind::ModuleToAlgebra, m.space(), vir.space(), 1);
        let fg = graded_bracket(&vir, &m, &f, &g).unwrap();
        let gf = graded_bracket(&vir, &m, &g, &f).unwrap();
        let s = MultiPoly::int(if p % 2 == 1 { 1 } else { -1 });
        prop_assert_eq!(fg, gf.scale(&s));
    }

    #[test]
    fn operator_bracket_is_negative_modified_coboundary(seed in any::<u64>(), p in 1usize..=2, c in 0i64..=2) {
        let mut r = rng(seed);
        let vir = fixtures::virasoro();
        let m = fixtures::vir_module_int(1, c);
        let t = fixtures::t1();
        let pc = rand_cochain(&mut r, p, CochainKind::ModuleToAlgebra, m.space(), vir.space(), 2);
        let lhs = graded_bracket(&vir, &m, &map_cochain(&vir, &m, &t).unwrap(), &pc).unwrap();
        let mc = modified_coboundary(&vir, &m, &t, &pc).unwrap();
        prop_assert_eq!(lhs, mc.scale(&MultiPoly::int(-1)));
    }

    #[test]
    fn delta_t_squares_to_zero(seed in any::<u64>(), p in 0usize..=1, c in 0i64..=2) {
        let mut r = rng(seed);
        let vir = fixtures::virasoro();
        let m = fixtures::vir_module_int(1, c);
        let t = fixtures::t1();
        let x = rand_cochain(&mut r, p, CochainKind::ModuleToAlgebra, m.space(), vir.space(), 2);
        let once = delta_t(&vir, &m, &t, &x).unwrap();
        prop_assert!(delta_t(&vir, &m, &t, &once).unwrap().is_zero());
    }
}

#[test]
fn delta_t_of_generator() {
    let vir = fixtures::virasoro();
    for c in [0, 1, 2] {
        let m = fixtures::vir_module_int(1, c);
        let x = element_cochain(&vir, &m, PolyVector::basis(1, 0)).unwrap();
        let dx = delta_t(&vir, &m, &fixtures::t1(), &x).unwrap();
        assert_eq!(dx.get(&[0])[0], MultiPoly::int(c));
    }
}
