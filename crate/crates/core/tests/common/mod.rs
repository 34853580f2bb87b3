#![allow(dead_code)]

use homlie::complex::{lambda_vars, Cochain, CochainKind};
use homlie::fixtures;
use homlie::matrix::PolyMatrix;
use homlie::structures::{semidirect, HomLieConformalAlgebra};
use homlie::{MultiPoly, PolyVector, Rational, Space, Var};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// A sum of up to three terms with small integer coefficients and each
/// variable raised to at most `deg`.
pub fn rand_poly(rng: &mut ChaCha8Rng, vars: &[Var], deg: u32) -> MultiPoly {
    let mut p = MultiPoly::zero();
    for _ in 0..rng.gen_range(1..=3) {
        let mut t = MultiPoly::int(rng.gen_range(-3..=3));
        for v in vars {
            t = &t * &MultiPoly::var(*v).pow(rng.gen_range(0..=deg));
        }
        p += &t;
    }
    p
}

pub fn rand_d_poly(rng: &mut ChaCha8Rng, deg: u32) -> MultiPoly {
    (0..=deg)
        .map(|k| &MultiPoly::int(rng.gen_range(-2..=2)) * &MultiPoly::d().pow(k))
        .sum()
}

pub fn rand_map(rng: &mut ChaCha8Rng, rows: usize, cols: usize, deg: u32) -> PolyMatrix {
    let mut m = PolyMatrix::zero(rows, cols);
    for i in 0..rows {
        for j in 0..cols {
            m.set(i, j, rand_d_poly(rng, deg));
        }
    }
    m
}

/// A random skew cochain of degree `deg` whose values have `d`-degree at
/// most `d_deg`.
pub fn rand_cochain(rng: &mut ChaCha8Rng, deg: usize, kind: CochainKind, s: Space, t: Space, d_deg: u32) -> Cochain {
    let mut vars = vec![Var::D];
    vars.extend(lambda_vars(deg.saturating_sub(1)));
    let mut c = Cochain::zero(deg, kind, s, t.clone());
    if deg == 0 {
        let v = PolyVector::from_entries((0..t.rank()).map(|_| rand_d_poly(rng, d_deg)).collect());
        return Cochain::new(0, kind, c.source().clone(), t, vec![v]).unwrap();
    }
    for tup in c.tuples() {
        let v = PolyVector::from_entries((0..t.rank()).map(|_| rand_poly(rng, &vars, d_deg)).collect());
        c.set(&tup, v);
    }
    c.skew_symmetrize()
}

/// `Vir ⋉ M(1, 1)`, a rank-two algebra with a nontrivial bracket on every
/// pair except the module block.
pub fn vir_extension() -> HomLieConformalAlgebra {
    semidirect(&fixtures::virasoro(), &fixtures::vir_module_int(1, 1))
}

/// A rank-≤2 algebra and module obtained by randomly perturbing a fixture;
/// roughly half of the draws keep the axioms.
pub fn perturbed_pair(rng: &mut ChaCha8Rng) -> (HomLieConformalAlgebra, homlie::Representation) {
    use homlie::structures::Representation;
    let vir = fixtures::virasoro();
    let kind = rng.gen_range(0..4);
    let noise = |rng: &mut ChaCha8Rng| {
        let p = rand_poly(rng, &[Var::D, Var::L], 1);
        if p.is_zero() {
            MultiPoly::l()
        } else {
            p
        }
    };
    match kind {
        0 => {
            let a = MultiPoly::int(rng.gen_range(1..=3));
            let alg = HomLieConformalAlgebra::new(vir.basis.clone(), vir.bracket.clone(), PolyMatrix::scalar(1, a)).unwrap();
            let rep = if rng.gen_bool(0.5) {
                Representation::trivial(&alg, vec!["f".into()], PolyMatrix::identity(1)).unwrap()
            } else {
                let mut action = fixtures::vir_module_int(1, 0).action;
                action[0][0] = &action[0][0] + &PolyVector::from_entries(vec![noise(rng)]);
                Representation::new(&alg, vec!["f".into()], action, PolyMatrix::identity(1)).unwrap()
            };
            (alg, rep)
        }
        1 => {
            let mut alpha = PolyMatrix::identity(2);
            alpha.set(0, 1, MultiPoly::int(rng.gen_range(-2..=2)));
            let mut alg = fixtures::abelian(2, alpha);
            if rng.gen_bool(0.5) {
                alg.bracket[0][1] = PolyVector::from_entries(vec![noise(rng), MultiPoly::zero()]);
            }
            let beta = PolyMatrix::scalar(1, MultiPoly::int(rng.gen_range(1..=3)));
            let rep = Representation::trivial(&alg, vec!["f".into()], beta).unwrap();
            (alg, rep)
        }
        2 => {
            let delta = rng.gen_range(-2..=2);
            let c = rng.gen_range(-2..=2);
            let mut rep = fixtures::vir_module_int(delta, c);
            if rng.gen_bool(0.5) {
                rep.action[0][0] = &rep.action[0][0] + &PolyVector::from_entries(vec![&noise(rng) * &MultiPoly::l()]);
            }
            (vir, rep)
        }
        _ => {
            let mut alg = vir_extension();
            if rng.gen_bool(0.5) {
                let v = &alg.bracket[1][1][0] + &noise(rng);
                alg.bracket[1][1] = PolyVector::from_entries(vec![v, MultiPoly::zero()]);
            }
            let rep = Representation::trivial(&alg, vec!["g".into()], PolyMatrix::identity(1)).unwrap();
            (alg, rep)
        }
    }
}
