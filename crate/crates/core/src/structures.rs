//! Hom-Lie conformal algebras, their representations, and the axiom checks.

use crate::conformal::{apply_conformal, tuples};
use crate::error::{Error, Result};
use crate::matrix::{PolyMatrix, StructureMap};
use crate::poly::{MultiPoly, PolyVector, Var};
use crate::report::Report;

/// Default basis names `prefix1`, `prefix2`, ...
pub fn default_basis(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

/// A free `C[∂]`-module of finite rank with a twist map.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Space {
    pub basis: Vec<String>,
    pub twist: StructureMap,
}

impl Space {
    pub fn rank(&self) -> usize {
        self.basis.len()
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HomLieConformalAlgebra {
    pub basis: Vec<String>,
    /// `bracket[i][j]` is `[e_i λ e_j]`, in the variables `d` and `l`.
    pub bracket: Vec<Vec<PolyVector>>,
    pub alpha: StructureMap,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Representation {
    pub mbasis: Vec<String>,
    /// `action[i][a]` is `ρ(e_i)_λ f_a`, in the variables `d` and `l`.
    pub action: Vec<Vec<PolyVector>>,
    pub beta: StructureMap,
}

fn check_table(table: &[Vec<PolyVector>], rows: usize, cols: usize, len: usize, what: &str) -> Result<()> {
    if table.len() != rows || table.iter().any(|r| r.len() != cols) {
        return Err(Error::RankMismatch(format!("{what} table must be {rows} x {cols}")));
    }
    for v in table.iter().flatten() {
        if v.len() != len {
            return Err(Error::RankMismatch(format!(
                "{what} value has {} coordinates, expected {len}",
                v.len()
            )));
        }
        if !v.entries().iter().all(|p| p.only_uses(|x| x == Var::D || x == Var::L)) {
            return Err(Error::Invalid(format!("{what} values may only use d and l")));
        }
    }
    Ok(())
}

impl HomLieConformalAlgebra {
    pub fn new(basis: Vec<String>, bracket: Vec<Vec<PolyVector>>, alpha: StructureMap) -> Result<Self> {
        let n = basis.len();
        check_table(&bracket, n, n, n, "bracket")?;
        if alpha.rows() != n || alpha.cols() != n {
            return Err(Error::RankMismatch(format!("alpha must be {n} x {n}")));
        }
        Ok(HomLieConformalAlgebra { basis, bracket, alpha })
    }

    /// The algebra with zero bracket and the given twist.
    pub fn abelian(basis: Vec<String>, alpha: StructureMap) -> Result<Self> {
        let n = basis.len();
        Self::new(basis, vec![vec![PolyVector::zero(n); n]; n], alpha)
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn space(&self) -> Space {
        Space {
            basis: self.basis.clone(),
            twist: self.alpha.clone(),
        }
    }

    pub fn basis_vector(&self, i: usize) -> PolyVector {
        PolyVector::basis(self.rank(), i)
    }

    /// `[x_λ y]` with `λ := lam`.
    pub fn bracket_at(&self, x: &PolyVector, y: &PolyVector, lam: &MultiPoly) -> PolyVector {
        apply_conformal(
            |t: &[usize]| &self.bracket[t[0]][t[1]],
            &[Var::L],
            self.rank(),
            &[x, y],
            std::slice::from_ref(lam),
        )
    }

    pub fn alpha_pow(&self, k: u32) -> StructureMap {
        self.alpha.pow(k)
    }
}

impl Representation {
    pub fn new(
        algebra: &HomLieConformalAlgebra,
        mbasis: Vec<String>,
        action: Vec<Vec<PolyVector>>,
        beta: StructureMap,
    ) -> Result<Self> {
        let m = mbasis.len();
        check_table(&action, algebra.rank(), m, m, "action")?;
        if beta.rows() != m || beta.cols() != m {
            return Err(Error::RankMismatch(format!("beta must be {m} x {m}")));
        }
        Ok(Representation { mbasis, action, beta })
    }

    /// The zero action on a module with the given twist.
    pub fn trivial(algebra: &HomLieConformalAlgebra, mbasis: Vec<String>, beta: StructureMap) -> Result<Self> {
        let m = mbasis.len();
        Self::new(
            algebra,
            mbasis,
            vec![vec![PolyVector::zero(m); m]; algebra.rank()],
            beta,
        )
    }

    pub fn mrank(&self) -> usize {
        self.mbasis.len()
    }

    pub fn space(&self) -> Space {
        Space {
            basis: self.mbasis.clone(),
            twist: self.beta.clone(),
        }
    }

    pub fn basis_vector(&self, a: usize) -> PolyVector {
        PolyVector::basis(self.mrank(), a)
    }

    /// `ρ(x)_λ m` with `λ := lam`.
    pub fn act_at(&self, x: &PolyVector, m: &PolyVector, lam: &MultiPoly) -> PolyVector {
        apply_conformal(
            |t: &[usize]| &self.action[t[0]][t[1]],
            &[Var::L],
            self.mrank(),
            &[x, m],
            std::slice::from_ref(lam),
        )
    }
}

fn require_elements(v: &PolyVector, rank: usize) -> Result<()> {
    if v.len() != rank {
        return Err(Error::RankMismatch(format!(
            "element has {} coordinates, expected {rank}",
            v.len()
        )));
    }
    Ok(())
}

/// `[a_λ b]` for elements `a`, `b` with coefficients in `C[∂]`.
pub fn extend_bracket(alg: &HomLieConformalAlgebra, a: &PolyVector, b: &PolyVector) -> Result<PolyVector> {
    require_elements(a, alg.rank())?;
    require_elements(b, alg.rank())?;
    Ok(alg.bracket_at(a, b, &MultiPoly::l()))
}

/// `ρ(x)_λ m` for elements with coefficients in `C[∂]`.
pub fn extend_action(
    alg: &HomLieConformalAlgebra,
    rep: &Representation,
    x: &PolyVector,
    m: &PolyVector,
) -> Result<PolyVector> {
    require_elements(x, alg.rank())?;
    require_elements(m, rep.mrank())?;
    Ok(rep.act_at(x, m, &MultiPoly::l()))
}

/// Substitutes a value for a λ-variable in every coordinate.
pub fn eval_lambda(v: &PolyVector, lvar: Var, value: &MultiPoly) -> PolyVector {
    v.substitute(lvar, value)
}

/// `-d - l`, the argument of the skew-symmetry identity.
pub fn minus_d_minus_l() -> MultiPoly {
    -(&MultiPoly::d() + &MultiPoly::l())
}

fn names(basis: &[String], idx: &[usize]) -> Vec<String> {
    idx.iter().map(|&i| basis[i].clone()).collect()
}

/// Conformal skew-symmetry and Hom-Jacobi; multiplicativity of α is
/// reported as advisory.
pub fn check_hom_lie(alg: &HomLieConformalAlgebra) -> Report {
    let n = alg.rank();
    let basis = &alg.basis;
    let e = |i: usize| alg.basis_vector(i);
    let (l1, l2) = (MultiPoly::lam(1), MultiPoly::lam(2));
    let mut report = Report::new();

    report.record(
        "skew",
        true,
        basis,
        tuples(&[n, n]).into_iter().map(|t| {
            let (i, j) = (t[0], t[1]);
            let v = &alg.bracket[i][j] + &eval_lambda(&alg.bracket[j][i], Var::L, &minus_d_minus_l());
            (names(basis, &t), v)
        }),
    );

    report.record(
        "jacobi",
        true,
        basis,
        tuples(&[n, n, n]).into_iter().map(|t| {
            let (i, j, k) = (t[0], t[1], t[2]);
            let (ai, aj, ak) = (alg.alpha.column(i), alg.alpha.column(j), alg.alpha.column(k));
            let t1 = alg.bracket_at(&ai, &alg.bracket_at(&e(j), &e(k), &l2), &l1);
            let t2 = alg.bracket_at(&alg.bracket_at(&e(i), &e(j), &l1), &ak, &(&l1 + &l2));
            let t3 = alg.bracket_at(&aj, &alg.bracket_at(&e(i), &e(k), &l1), &l2);
            (names(basis, &t), &(&t1 - &t2) - &t3)
        }),
    );

    report.record(
        "multiplicative",
        false,
        basis,
        tuples(&[n, n]).into_iter().map(|t| {
            let (i, j) = (t[0], t[1]);
            let lhs = alg.alpha.apply(&alg.bracket[i][j]);
            let rhs = alg.bracket_at(&alg.alpha.column(i), &alg.alpha.column(j), &MultiPoly::l());
            (names(basis, &t), &lhs - &rhs)
        }),
    );
    report
}

/// The β-twisted composition axiom
/// `ρ([x_λ y])_{λ+μ} βm = ρ(αx)_λ ρ(y)_μ m - ρ(αy)_μ ρ(x)_λ m`
/// on basis triples; the untwisted variant is reported as advisory.
pub fn check_representation(alg: &HomLieConformalAlgebra, rep: &Representation) -> Report {
    let (n, m) = (alg.rank(), rep.mrank());
    let mut report = Report::new();
    if rep.action.len() != n {
        report.record_flag("shape", true, false);
        return report;
    }
    let e = |i: usize| alg.basis_vector(i);
    let f = |a: usize| rep.basis_vector(a);
    let (l1, l2) = (MultiPoly::lam(1), MultiPoly::lam(2));
    let l12 = &l1 + &l2;
    let tuple_names = |t: &[usize]| vec![alg.basis[t[0]].clone(), alg.basis[t[1]].clone(), rep.mbasis[t[2]].clone()];

    report.record(
        "twisted-composition",
        true,
        &rep.mbasis,
        tuples(&[n, n, m]).into_iter().map(|t| {
            let (i, j, a) = (t[0], t[1], t[2]);
            let lhs = rep.act_at(&alg.bracket_at(&e(i), &e(j), &l1), &rep.beta.column(a), &l12);
            let r1 = rep.act_at(&alg.alpha.column(i), &rep.act_at(&e(j), &f(a), &l2), &l1);
            let r2 = rep.act_at(&alg.alpha.column(j), &rep.act_at(&e(i), &f(a), &l1), &l2);
            (tuple_names(&t), &(&lhs - &r1) + &r2)
        }),
    );

    report.record(
        "untwisted-composition",
        false,
        &rep.mbasis,
        tuples(&[n, n, m]).into_iter().map(|t| {
            let (i, j, a) = (t[0], t[1], t[2]);
            let lhs = rep.act_at(&alg.bracket_at(&e(i), &e(j), &l1), &f(a), &l12);
            let r1 = rep.act_at(&e(i), &rep.act_at(&e(j), &f(a), &l2), &l1);
            let r2 = rep.act_at(&e(j), &rep.act_at(&e(i), &f(a), &l1), &l2);
            (tuple_names(&t), &(&lhs - &r1) + &r2)
        }),
    );
    report
}

/// The semidirect product `L ⋉ M` with basis `L` first, then `M`, and
/// twist `α ⊕ β`.
pub fn semidirect(alg: &HomLieConformalAlgebra, rep: &Representation) -> HomLieConformalAlgebra {
    let (n, m) = (alg.rank(), rep.mrank());
    let size = n + m;
    let mut bracket = vec![vec![PolyVector::zero(size); size]; size];
    for i in 0..n {
        for j in 0..n {
            bracket[i][j] = alg.bracket[i][j].embed(size, 0);
        }
        for a in 0..m {
            bracket[i][n + a] = rep.action[i][a].embed(size, n);
            bracket[n + a][i] = -&eval_lambda(&rep.action[i][a], Var::L, &minus_d_minus_l()).embed(size, n);
        }
    }
    let mut basis = alg.basis.clone();
    basis.extend(rep.mbasis.iter().cloned());
    HomLieConformalAlgebra {
        basis,
        bracket,
        alpha: alg.alpha.direct_sum(&rep.beta),
    }
}

/// `ad^p(x)_λ y = [α^p(x)_λ y]` on `L` itself with twist `α`.
pub fn adjoint_rep(alg: &HomLieConformalAlgebra, p: u32) -> Representation {
    let ap = alg.alpha_pow(p);
    let n = alg.rank();
    let action = (0..n)
        .map(|i| {
            let x = ap.column(i);
            (0..n)
                .map(|j| alg.bracket_at(&x, &alg.basis_vector(j), &MultiPoly::l()))
                .collect()
        })
        .collect();
    Representation {
        mbasis: alg.basis.clone(),
        action,
        beta: alg.alpha.clone(),
    }
}

/// Identity structure map of size `n`.
pub fn identity_map(n: usize) -> StructureMap {
    PolyMatrix::identity(n)
}
