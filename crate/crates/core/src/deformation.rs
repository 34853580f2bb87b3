//! Linear and formal deformations of O-operators: cocycle conditions,
//! Nijenhuis elements, order-by-order equations, obstructions and bounded
//! extension.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::complex::Cochain;
use crate::conformal::tuples;
use crate::error::{Error, Result};
use crate::linsolve::LinearSystem;
use crate::matrix::{ModuleMap, PolyMatrix};
use crate::operator::{check_ooperator, delta_t, delta_t_unchecked, element_cochain, graded_bracket, map_cochain};
use crate::poly::{Monomial, MultiPoly, PolyVector, Rational, Var};
use crate::report::Report;
use crate::structures::{minus_d_minus_l, HomLieConformalAlgebra, Representation};

fn require_map_shape(alg: &HomLieConformalAlgebra, rep: &Representation, t: &ModuleMap) -> Result<()> {
    if t.rows() != alg.rank() || t.cols() != rep.mrank() {
        return Err(Error::RankMismatch(format!(
            "map is {} x {}, expected {} x {}",
            t.rows(),
            t.cols(),
            alg.rank(),
            rep.mrank()
        )));
    }
    Ok(())
}

fn require_ooperator(alg: &HomLieConformalAlgebra, rep: &Representation, t: &ModuleMap) -> Result<()> {
    let report = check_ooperator(alg, rep, t)?;
    match report.first_failure() {
        None => Ok(()),
        Some(c) => Err(Error::NotOOperator(format!("check `{}` fails", c.id))),
    }
}

/// `[A(m)_λ B(n)] - A(ρ(B m)_λ n - ρ(B n)_{-∂-λ} m)` on basis vectors.
pub fn cross_defect(
    alg: &HomLieConformalAlgebra,
    rep: &Representation,
    a: &ModuleMap,
    b: &ModuleMap,
    i: usize,
    j: usize,
) -> PolyVector {
    let l = MultiPoly::l();
    let (fi, fj) = (rep.basis_vector(i), rep.basis_vector(j));
    let lhs = alg.bracket_at(&a.column(i), &b.column(j), &l);
    let inner = &rep.act_at(&b.column(i), &fj, &l) - &rep.act_at(&b.column(j), &fi, &minus_d_minus_l());
    &lhs - &a.apply(&inner)
}

fn pair_names(rep: &Representation, p: &[usize]) -> Vec<String> {
    p.iter().map(|&i| rep.mbasis[i].clone()).collect()
}

fn record_commutation(report: &mut Report, id: &str, alg: &HomLieConformalAlgebra, rep: &Representation, t: &ModuleMap) {
    let diff = t.mul(&rep.beta).sub(&alg.alpha.mul(t));
    report.record(
        id,
        true,
        &alg.basis,
        (0..rep.mrank()).map(|a| (vec![rep.mbasis[a].clone()], diff.column(a))),
    );
}

/// The conditions (b1)-(b3) for `T + tD` to be an O-operator, and whether
/// `δ_T(D) = 0`.
pub fn check_linear_deformation(
    alg: &HomLieConformalAlgebra,
    rep: &Representation,
    t: &ModuleMap,
    dmap: &ModuleMap,
) -> Result<Report> {
    require_map_shape(alg, rep, dmap)?;
    require_ooperator(alg, rep, t)?;
    let m = rep.mrank();
    let mut report = Report::new();
    record_commutation(&mut report, "b1", alg, rep, dmap);
    report.record(
        "b2",
        true,
        &alg.basis,
        tuples(&[m, m])
            .into_iter()
            .map(|p| (pair_names(rep, &p), cross_defect(alg, rep, dmap, dmap, p[0], p[1]))),
    );
    report.record(
        "b3",
        true,
        &alg.basis,
        tuples(&[m, m]).into_iter().map(|p| {
            let v = &cross_defect(alg, rep, t, dmap, p[0], p[1]) + &cross_defect(alg, rep, dmap, t, p[0], p[1]);
            (pair_names(rep, &p), v)
        }),
    );
    let dc = delta_t_unchecked(alg, rep, t, &map_cochain(alg, rep, dmap)?)?;
    report.record(
        "cocycle",
        true,
        &alg.basis,
        dc.tuples().into_iter().map(|p| (dc.tuple_names(&p), dc.get(&p).clone())),
    );
    Ok(report)
}

/// `[[x_λ y]_μ [x_λ z]]` on basis pairs, in `l1` (λ) and `l2` (μ).
fn bracket_square_values(alg: &HomLieConformalAlgebra, x: &PolyVector) -> Vec<(Vec<String>, PolyVector)> {
    let n = alg.rank();
    let (l1, l2) = (MultiPoly::lam(1), MultiPoly::lam(2));
    tuples(&[n, n])
        .into_iter()
        .map(|p| {
            let xy = alg.bracket_at(x, &alg.basis_vector(p[0]), &l1);
            let xz = alg.bracket_at(x, &alg.basis_vector(p[1]), &l1);
            let names = p.iter().map(|&i| alg.basis[i].clone()).collect();
            (names, alg.bracket_at(&xy, &xz, &l2))
        })
        .collect()
}

/// `ρ([x_λ y])_{λ+μ} ρ(x)_λ m` on pairs `(y, m)`.
fn action_square_values(alg: &HomLieConformalAlgebra, rep: &Representation, x: &PolyVector) -> Vec<(Vec<String>, PolyVector)> {
    let (l1, l2) = (MultiPoly::lam(1), MultiPoly::lam(2));
    let sum = &l1 + &l2;
    tuples(&[alg.rank(), rep.mrank()])
        .into_iter()
        .map(|p| {
            let xy = alg.bracket_at(x, &alg.basis_vector(p[0]), &l1);
            let xm = rep.act_at(x, &rep.basis_vector(p[1]), &l1);
            (vec![alg.basis[p[0]].clone(), rep.mbasis[p[1]].clone()], rep.act_at(&xy, &xm, &sum))
        })
        .collect()
}

fn record_fixed(report: &mut Report, alg: &HomLieConformalAlgebra, x: &PolyVector) {
    let diff = &alg.alpha.apply(x) - x;
    report.record("fixed", true, &alg.basis, [(vec!["x".to_string()], diff)]);
}

fn require_element(alg: &HomLieConformalAlgebra, x: &PolyVector) -> Result<()> {
    if x.len() != alg.rank() {
        return Err(Error::RankMismatch(format!(
            "element has {} coordinates, expected {}",
            x.len(),
            alg.rank()
        )));
    }
    Ok(())
}

/// Membership of `x` in `Nij(T)`: `αx = x`, the two square identities and
/// `[x_μ δ_T(x)(m)] = 0`.
pub fn nijenhuis_element_check(
    alg: &HomLieConformalAlgebra,
    rep: &Representation,
    t: &ModuleMap,
    x: &PolyVector,
) -> Result<Report> {
    require_element(alg, x)?;
    require_ooperator(alg, rep, t)?;
    let mut report = Report::new();
    record_fixed(&mut report, alg, x);
    report.record("bracket-square", true, &alg.basis, bracket_square_values(alg, x));
    report.record("action-square", true, &rep.mbasis, action_square_values(alg, rep, x));
    let gen = delta_t_unchecked(alg, rep, t, &element_cochain(alg, rep, x.clone())?)?.to_map();
    report.record(
        "mixed",
        true,
        &alg.basis,
        (0..rep.mrank()).map(|a| {
            (vec![rep.mbasis[a].clone()], alg.bracket_at(x, &gen.column(a), &MultiPoly::l()))
        }),
    );
    Ok(report)
}

/// `δ_T(x)` as a module map, the generator of the trivial deformation
/// attached to `x`.
pub fn trivial_generator(
    alg: &HomLieConformalAlgebra,
    rep: &Representation,
    t: &ModuleMap,
    x: &PolyVector,
) -> Result<ModuleMap> {
    require_element(alg, x)?;
    require_map_shape(alg, rep, t)?;
    if alg.alpha.apply(x) != *x {
        return Err(Error::Invalid("element is not fixed by alpha".into()));
    }
    Ok(delta_t_unchecked(alg, rep, t, &element_cochain(alg, rep, x.clone())?)?.to_map())
}

/// A truncated formal deformation `T_0 + t T_1 + .. + t^k T_k`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DeformationSequence {
    terms: Vec<ModuleMap>,
}

impl DeformationSequence {
    pub fn new(base: ModuleMap, higher: Vec<ModuleMap>) -> Result<Self> {
        if higher.is_empty() {
            return Err(Error::Invalid("a deformation needs at least one higher term".into()));
        }
        if higher.iter().any(|h| h.rows() != base.rows() || h.cols() != base.cols()) {
            return Err(Error::RankMismatch("deformation terms have different shapes".into()));
        }
        let mut terms = vec![base];
        terms.extend(higher);
        Ok(DeformationSequence { terms })
    }

    pub fn base(&self) -> &ModuleMap {
        &self.terms[0]
    }

    pub fn higher(&self) -> &[ModuleMap] {
        &self.terms[1..]
    }

    pub fn order(&self) -> usize {
        self.terms.len() - 1
    }

    /// `T_i`, zero beyond the stored order.
    pub fn term(&self, i: usize) -> ModuleMap {
        self.terms
            .get(i)
            .cloned()
            .unwrap_or_else(|| PolyMatrix::zero(self.terms[0].rows(), self.terms[0].cols()))
    }

    /// The sequence with `next` appended as `T_{k+1}`.
    pub fn extended(&self, next: ModuleMap) -> Result<Self> {
        DeformationSequence::new(self.terms[0].clone(), self.terms[1..].iter().cloned().chain([next]).collect())
    }
}

/// `Σ_{i+j=w} ([T_i m_λ T_j n] - T_i(ρ(T_j m)_λ n - ρ(T_j n)_{-∂-λ} m))`.
pub fn order_defect(
    alg: &HomLieConformalAlgebra,
    rep: &Representation,
    s: &DeformationSequence,
    w: usize,
    a: usize,
    b: usize,
) -> PolyVector {
    let mut acc = PolyVector::zero(alg.rank());
    for i in 0..=w {
        acc += &cross_defect(alg, rep, &s.term(i), &s.term(w - i), a, b);
    }
    acc
}

/// Commutation of every term with the twists, then the deformation
/// equation at each order `0..=k`.
pub fn check_order_k(alg: &HomLieConformalAlgebra, rep: &Representation, s: &DeformationSequence) -> Result<Report> {
    require_map_shape(alg, rep, s.base())?;
    let m = rep.mrank();
    let mut report = Report::new();
    for i in 0..=s.order() {
        record_commutation(&mut report, &format!("commutes-{i}"), alg, rep, &s.term(i));
    }
    for w in 0..=s.order() {
        report.record(
            format!("order-{w}"),
            true,
            &alg.basis,
            tuples(&[m, m])
                .into_iter()
                .map(|p| (pair_names(rep, &p), order_defect(alg, rep, s, w, p[0], p[1]))),
        );
    }
    Ok(report)
}

/// Index range of the obstruction sum `Σ_{i+j=k+1} {{T_i, T_j}}`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum ObstructionRange {
    /// `i, j ≥ 1`.
    #[default]
    Positive,
    /// `i, j > 1`.
    Strict,
}

/// `Ob = -½ Σ_{i+j=k+1, i,j≥1} {{T_i, T_j}}` for a sequence of order `k`.
pub fn obstruction(alg: &HomLieConformalAlgebra, rep: &Representation, s: &DeformationSequence) -> Result<Cochain> {
    obstruction_with(alg, rep, s, ObstructionRange::Positive)
}

pub fn obstruction_with(
    alg: &HomLieConformalAlgebra,
    rep: &Representation,
    s: &DeformationSequence,
    range: ObstructionRange,
) -> Result<Cochain> {
    let report = check_order_k(alg, rep, s)?;
    if let Some(c) = report.first_failure() {
        return Err(Error::Invalid(format!("deformation fails check `{}`", c.id)));
    }
    require_ooperator(alg, rep, s.base())?;
    let k = s.order();
    let lo = match range {
        ObstructionRange::Positive => 1,
        ObstructionRange::Strict => 2,
    };
    let mut acc = Cochain::zero(2, crate::complex::CochainKind::ModuleToAlgebra, rep.space(), alg.space());
    for i in lo..=k {
        let j = k + 1 - i;
        if j < lo || j > k {
            continue;
        }
        let ti = map_cochain(alg, rep, &s.term(i))?;
        let tj = map_cochain(alg, rep, &s.term(j))?;
        acc = acc.add(&graded_bracket(alg, rep, &ti, &tj)?)?;
    }
    Ok(acc.scale(&MultiPoly::ratio(-1, 2)))
}

/// Appends the coefficient of every monomial of `v` (in `d` and the λs) to
/// the row keyed by `(tag, component, monomial)`.
fn scatter(rows: &mut BTreeMap<(usize, usize, Monomial), Rational>, tag: usize, v: &PolyVector) {
    for (c, p) in v.entries().iter().enumerate() {
        for (mono, coef) in p.terms() {
            *rows.entry((tag, c, mono.clone())).or_insert_with(Rational::zero) += coef;
        }
    }
}

fn unit_map(rows: usize, cols: usize, i: usize, j: usize, k: u32) -> ModuleMap {
    let mut e = PolyMatrix::zero(rows, cols);
    e.set(i, j, MultiPoly::d().pow(k));
    e
}

/// Solves `δ_T(X) = Ob` with `Xβ = αX` for `X` with entries of `d`-degree at
/// most `max_deg`, trying smaller degree bounds first. `None` means no
/// solution within the bound.
pub fn extend_order(
    alg: &HomLieConformalAlgebra,
    rep: &Representation,
    s: &DeformationSequence,
    max_deg: u32,
) -> Result<Option<ModuleMap>> {
    let ob = obstruction(alg, rep, s)?;
    let t = s.base();
    let (n, m) = (alg.rank(), rep.mrank());
    for deg in 0..=max_deg {
        let mut units = Vec::new();
        for i in 0..n {
            for j in 0..m {
                for k in 0..=deg {
                    units.push((i, j, k));
                }
            }
        }
        let mut columns = Vec::with_capacity(units.len());
        for &(i, j, k) in &units {
            let e = unit_map(n, m, i, j, k);
            let mut rows = BTreeMap::new();
            let comm = e.mul(&rep.beta).sub(&alg.alpha.mul(&e));
            for a in 0..m {
                scatter(&mut rows, a, &comm.column(a));
            }
            let de = delta_t(alg, rep, t, &map_cochain(alg, rep, &e)?)?;
            for (idx, v) in de.table().iter().enumerate() {
                scatter(&mut rows, m + idx, v);
            }
            columns.push(rows);
        }
        let mut rhs = BTreeMap::new();
        for (idx, v) in ob.table().iter().enumerate() {
            scatter(&mut rhs, m + idx, v);
        }
        let mut keys: Vec<_> = rhs.keys().cloned().collect();
        for c in &columns {
            keys.extend(c.keys().cloned());
        }
        keys.sort();
        keys.dedup();
        let mut system = LinearSystem::new(units.len());
        for key in &keys {
            let coeffs = columns
                .iter()
                .map(|c| c.get(key).cloned().unwrap_or_else(Rational::zero))
                .collect();
            system.push(coeffs, rhs.get(key).cloned().unwrap_or_else(Rational::zero));
        }
        if let Some(sol) = system.solve() {
            let mut x = PolyMatrix::zero(n, m);
            for (&(i, j, k), c) in units.iter().zip(sol) {
                let entry = x.get(i, j) + &(&MultiPoly::constant(c) * &MultiPoly::d().pow(k));
                x.set(i, j, entry);
            }
            return Ok(Some(x));
        }
    }
    Ok(None)
}

/// The linear-order conditions for `(Id + t ad_x, Id + t ρ(x))` to carry
/// `T + tD1` to `T + tD2`.
pub fn equivalence_check_linear(
    alg: &HomLieConformalAlgebra,
    rep: &Representation,
    t: &ModuleMap,
    d1: &ModuleMap,
    d2: &ModuleMap,
    x: &PolyVector,
) -> Result<Report> {
    require_element(alg, x)?;
    require_map_shape(alg, rep, d1)?;
    require_map_shape(alg, rep, d2)?;
    require_ooperator(alg, rep, t)?;
    alg.alpha.inverse()?;
    let beta_inv = rep.beta.inverse()?;
    let (l, l1, l2) = (MultiPoly::l(), MultiPoly::lam(1), MultiPoly::lam(2));
    let mut report = Report::new();
    record_fixed(&mut report, alg, x);
    report.record("bracket-square", true, &alg.basis, bracket_square_values(alg, x));
    let gen = trivial_generator(alg, rep, t, x)?;
    let diff = d2.sub(d1).sub(&gen);
    report.record(
        "generator",
        true,
        &alg.basis,
        (0..rep.mrank()).map(|a| (vec![rep.mbasis[a].clone()], diff.column(a))),
    );
    report.record(
        "intertwine",
        true,
        &alg.basis,
        (0..rep.mrank()).map(|a| {
            let bm = beta_inv.column(a);
            let lhs = d1.apply(&rep.act_at(x, &bm, &l));
            let rhs = alg.bracket_at(x, &d2.apply(&bm), &l);
            (vec![rep.mbasis[a].clone()], &lhs - &rhs)
        }),
    );
    let sum = &l1 + &l2;
    report.record(
        "action-commutator",
        true,
        &rep.mbasis,
        tuples(&[alg.rank(), rep.mrank()]).into_iter().map(|p| {
            let y = alg.basis_vector(p[0]);
            let mv = rep.basis_vector(p[1]);
            let a = rep.act_at(x, &rep.act_at(&y, &mv, &l2), &l1);
            let b = rep.act_at(&y, &rep.act_at(x, &mv, &l1), &l2);
            let c = rep.act_at(&alg.bracket_at(x, &y, &l1), &mv, &sum);
            (vec![alg.basis[p[0]].clone(), rep.mbasis[p[1]].clone()], &(&a - &b) - &c)
        }),
    );
    report.record("action-square", true, &rep.mbasis, action_square_values(alg, rep, x));
    Ok(report)
}

/// One unknown coefficient of a candidate map: the coefficient of `d^power`
/// in entry `(row, col)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Unknown {
    pub var: Var,
    pub row: usize,
    pub col: usize,
    pub power: u32,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SearchResult {
    pub candidates: Vec<ModuleMap>,
    pub unknowns: Vec<Unknown>,
    /// Polynomial equations in the unknowns, each meaning `p = 0`.
    pub constraints: Vec<MultiPoly>,
}

/// Upper bound on the number of enumerated candidates.
pub const SEARCH_LIMIT: usize = 1 << 20;

/// The generic map with symbolic coefficients and the polynomial system
/// that makes it an O-operator.
pub fn ooperator_constraints(
    alg: &HomLieConformalAlgebra,
    rep: &Representation,
    max_deg: u32,
) -> (Vec<Unknown>, ModuleMap, Vec<MultiPoly>) {
    let (n, m) = (alg.rank(), rep.mrank());
    let mut unknowns = Vec::new();
    let mut generic = PolyMatrix::zero(n, m);
    for i in 0..n {
        for j in 0..m {
            let mut entry = MultiPoly::zero();
            for power in 0..=max_deg {
                let var = Var::symbol(unknowns.len());
                entry += &(&MultiPoly::var(var) * &MultiPoly::d().pow(power));
                unknowns.push(Unknown { var, row: i, col: j, power });
            }
            generic.set(i, j, entry);
        }
    }
    let mut values: Vec<PolyVector> = Vec::new();
    let comm = generic.mul(&rep.beta).sub(&alg.alpha.mul(&generic));
    values.extend((0..m).map(|a| comm.column(a)));
    values.extend(
        tuples(&[m, m])
            .into_iter()
            .map(|p| cross_defect(alg, rep, &generic, &generic, p[0], p[1])),
    );
    let mut constraints = Vec::new();
    for v in &values {
        for p in v.entries() {
            for (_, coef) in p.collect_by(|x| !x.is_symbol()) {
                if !coef.is_zero() && !constraints.contains(&coef) {
                    constraints.push(coef);
                }
            }
        }
    }
    (unknowns, generic, constraints)
}

/// Enumerates maps with coefficients from `coeffs` (deduplicated, ascending)
/// and `d`-degree at most `max_deg`, keeping those that pass
/// [`check_ooperator`]; candidates come out in lexicographic order of their
/// coefficient tuples.
pub fn search_ooperators(
    alg: &HomLieConformalAlgebra,
    rep: &Representation,
    max_deg: u32,
    coeffs: &[Rational],
) -> Result<SearchResult> {
    let (unknowns, generic, constraints) = ooperator_constraints(alg, rep, max_deg);
    let mut values: Vec<Rational> = coeffs.to_vec();
    values.sort();
    values.dedup();
    let slots = unknowns.len();
    let total = if values.is_empty() {
        0
    } else {
        (0..slots).try_fold(1usize, |acc, _| acc.checked_mul(values.len()).filter(|&t| t <= SEARCH_LIMIT))
            .ok_or_else(|| Error::Invalid(format!("search space exceeds {SEARCH_LIMIT} candidates")))?
    };
    let mut candidates = Vec::new();
    let mut digits = vec![0usize; slots];
    for _ in 0..total {
        let assignment: Vec<(Var, MultiPoly)> = unknowns
            .iter()
            .zip(&digits)
            .map(|(u, &dgt)| (u.var, MultiPoly::constant(values[dgt].clone())))
            .collect();
        if constraints.iter().all(|c| c.substitute_all(&assignment).is_zero()) {
            let map = generic.map(|p| p.substitute_all(&assignment));
            if check_ooperator(alg, rep, &map)?.passed() {
                candidates.push(map);
            }
        }
        for pos in (0..slots).rev() {
            digits[pos] += 1;
            if digits[pos] < values.len() {
                break;
            }
            digits[pos] = 0;
        }
    }
    Ok(SearchResult {
        candidates,
        unknowns,
        constraints,
    })
}
