//! Standard small examples.

use crate::matrix::{ModuleMap, PolyMatrix};
use crate::poly::{MultiPoly, PolyVector, Rational};
use crate::structures::{default_basis, HomLieConformalAlgebra, Representation};

/// Rank one, `[e λ e] = (d + 2l) e`, trivial twist.
pub fn virasoro() -> HomLieConformalAlgebra {
    let v = &MultiPoly::d() + &(&MultiPoly::int(2) * &MultiPoly::l());
    HomLieConformalAlgebra::new(
        vec!["e".into()],
        vec![vec![PolyVector::from_entries(vec![v])]],
        PolyMatrix::identity(1),
    )
    .expect("well-formed")
}

/// Rank `n`, zero bracket, twist `alpha`.
pub fn abelian(n: usize, alpha: PolyMatrix) -> HomLieConformalAlgebra {
    HomLieConformalAlgebra::abelian(default_basis("e", n), alpha).expect("well-formed")
}

/// The module `M(Δ, c)` over [`virasoro`]: `ρ(e)_λ f = (d + Δl + c) f`.
pub fn vir_module(delta: Rational, c: Rational) -> Representation {
    let v = &(&MultiPoly::d() + &(&MultiPoly::constant(delta) * &MultiPoly::l())) + &MultiPoly::constant(c);
    Representation::new(
        &virasoro(),
        vec!["f".into()],
        vec![vec![PolyVector::from_entries(vec![v])]],
        PolyMatrix::identity(1),
    )
    .expect("well-formed")
}

/// `M(Δ, c)` for integer parameters.
pub fn vir_module_int(delta: i64, c: i64) -> Representation {
    vir_module(Rational::from_integer(delta.into()), Rational::from_integer(c.into()))
}

/// `f ↦ e`, an O-operator exactly when `Δ = 1`.
pub fn t1() -> ModuleMap {
    PolyMatrix::identity(1)
}
