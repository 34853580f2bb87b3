//! O-operators and their characterizations, the bracket `{{·,·}}` with the
//! differential `δ_T`, and the induced Hom-pre-Lie structure.

use crate::complex::{coboundary, lift, nr_bracket, project_module_to_algebra, theta_hat, Cochain, CochainKind};
use crate::conformal::{apply_conformal, tuples};
use crate::error::{Error, Result};
use crate::matrix::{ModuleMap, PolyMatrix, StructureMap};
use crate::poly::{MultiPoly, PolyVector, Rational, Var};
use crate::report::Report;
use crate::structures::{minus_d_minus_l, semidirect, HomLieConformalAlgebra, Representation};

fn check_shape(alg: &HomLieConformalAlgebra, rep: &Representation, t: &ModuleMap) -> Result<()> {
    if t.rows() != alg.rank() || t.cols() != rep.mrank() {
        return Err(Error::RankMismatch(format!(
            "map is {} x {}, expected {} x {}",
            t.rows(),
            t.cols(),
            alg.rank(),
            rep.mrank()
        )));
    }
    if rep.action.len() != alg.rank() {
        return Err(Error::RankMismatch("module is not over this algebra".into()));
    }
    Ok(())
}

/// Records `Tβ = αT` column by column.
fn record_commutes(report: &mut Report, alg: &HomLieConformalAlgebra, rep: &Representation, t: &ModuleMap) {
    let diff = t.mul(&rep.beta).sub(&alg.alpha.mul(t));
    report.record(
        "commutes",
        true,
        &alg.basis,
        (0..rep.mrank()).map(|a| (vec![rep.mbasis[a].clone()], diff.column(a))),
    );
}

/// `[Tm_λ Tn] - T(ρ(Tm)_λ n - ρ(Tn)_{-∂-λ} m)` on basis vectors.
pub fn ooperator_defect(
    alg: &HomLieConformalAlgebra,
    rep: &Representation,
    t: &ModuleMap,
    a: usize,
    b: usize,
) -> PolyVector {
    let (ta, tb) = (t.column(a), t.column(b));
    let (fa, fb) = (rep.basis_vector(a), rep.basis_vector(b));
    let l = MultiPoly::l();
    let lhs = alg.bracket_at(&ta, &tb, &l);
    let inner = &rep.act_at(&ta, &fb, &l) - &rep.act_at(&tb, &fa, &minus_d_minus_l());
    &lhs - &t.apply(&inner)
}

fn pair_names(basis: &[String], t: &[usize]) -> Vec<String> {
    t.iter().map(|&i| basis[i].clone()).collect()
}

/// Closure of the graph `{(Tm, m)}` under the semidirect bracket.
pub fn check_graph(alg: &HomLieConformalAlgebra, rep: &Representation, t: &ModuleMap) -> Result<Report> {
    check_shape(alg, rep, t)?;
    let (n, m) = (alg.rank(), rep.mrank());
    let sd = semidirect(alg, rep);
    let mut report = Report::new();
    record_commutes(&mut report, alg, rep, t);
    let graph_vec = |a: usize| {
        let mut v = t.column(a).embed(n + m, 0);
        v += &rep.basis_vector(a).embed(n + m, n);
        v
    };
    report.record(
        "graph-closure",
        true,
        &alg.basis,
        tuples(&[m, m]).into_iter().map(|p| {
            let br = sd.bracket_at(&graph_vec(p[0]), &graph_vec(p[1]), &MultiPoly::l());
            let l_part = br.slice(0, n);
            let m_part = br.slice(n, m);
            (pair_names(&rep.mbasis, &p), &l_part - &t.apply(&m_part))
        }),
    );
    Ok(report)
}

/// `Tβ = αT` and the defining identity on basis pairs, cross-checked
/// against closure of the graph.
pub fn check_ooperator(alg: &HomLieConformalAlgebra, rep: &Representation, t: &ModuleMap) -> Result<Report> {
    check_shape(alg, rep, t)?;
    let m = rep.mrank();
    let mut report = Report::new();
    record_commutes(&mut report, alg, rep, t);
    report.record(
        "identity",
        true,
        &alg.basis,
        tuples(&[m, m])
            .into_iter()
            .map(|p| (pair_names(&rep.mbasis, &p), ooperator_defect(alg, rep, t, p[0], p[1]))),
    );
    let identity_holds = report.check("identity").is_some_and(|c| c.holds());
    let graph = check_graph(alg, rep, t)?;
    let graph_holds = graph.check("graph-closure").is_some_and(|c| c.holds());
    report.record_flag("graph-agrees", true, identity_holds == graph_holds);
    Ok(report)
}

/// True when `T` passes [`check_ooperator`].
pub fn is_ooperator(alg: &HomLieConformalAlgebra, rep: &Representation, t: &ModuleMap) -> bool {
    check_ooperator(alg, rep, t).is_ok_and(|r| r.passed())
}

/// `[R(x)_λ R(y)] = R([α^p(R(x))_λ y] + [x_λ α^p(R(y))] + q[x_λ y])`.
pub fn check_rota_baxter(alg: &HomLieConformalAlgebra, r: &ModuleMap, p: u32, q: &Rational) -> Result<Report> {
    let n = alg.rank();
    if r.rows() != n || r.cols() != n {
        return Err(Error::RankMismatch(format!("operator must be {n} x {n}")));
    }
    let ap = alg.alpha_pow(p);
    let qp = MultiPoly::constant(q.clone());
    let l = MultiPoly::l();
    let mut report = Report::new();
    let diff = r.mul(&alg.alpha).sub(&alg.alpha.mul(r));
    report.record(
        "commutes",
        true,
        &alg.basis,
        (0..n).map(|j| (vec![alg.basis[j].clone()], diff.column(j))),
    );
    report.record(
        "identity",
        true,
        &alg.basis,
        tuples(&[n, n]).into_iter().map(|t| {
            let (x, y) = (alg.basis_vector(t[0]), alg.basis_vector(t[1]));
            let (rx, ry) = (r.column(t[0]), r.column(t[1]));
            let lhs = alg.bracket_at(&rx, &ry, &l);
            let mut inner = alg.bracket_at(&ap.apply(&rx), &y, &l);
            inner += &alg.bracket_at(&x, &ap.apply(&ry), &l);
            inner += &alg.bracket_at(&x, &y, &l).scale(&qp);
            (pair_names(&alg.basis, &t), &lhs - &r.apply(&inner))
        }),
    );
    Ok(report)
}

/// `αN = Nα` and
/// `[N(x)_λ N(y)] = N([N(x)_λ y] - [N(y)_{-∂-λ} x] - N([x_λ y]))`.
pub fn nijenhuis_check(alg: &HomLieConformalAlgebra, nmap: &ModuleMap) -> Result<Report> {
    let n = alg.rank();
    if nmap.rows() != n || nmap.cols() != n {
        return Err(Error::RankMismatch(format!("operator must be {n} x {n}")));
    }
    let l = MultiPoly::l();
    let mut report = Report::new();
    let diff = alg.alpha.mul(nmap).sub(&nmap.mul(&alg.alpha));
    report.record(
        "commutes",
        true,
        &alg.basis,
        (0..n).map(|j| (vec![alg.basis[j].clone()], diff.column(j))),
    );
    report.record(
        "identity",
        true,
        &alg.basis,
        tuples(&[n, n]).into_iter().map(|t| {
            let (x, y) = (alg.basis_vector(t[0]), alg.basis_vector(t[1]));
            let (nx, ny) = (nmap.column(t[0]), nmap.column(t[1]));
            let lhs = alg.bracket_at(&nx, &ny, &l);
            let mut inner = alg.bracket_at(&nx, &y, &l);
            inner -= &alg.bracket_at(&ny, &x, &minus_d_minus_l());
            inner -= &nmap.apply(&alg.bracket_at(&x, &y, &l));
            (pair_names(&alg.basis, &t), &lhs - &nmap.apply(&inner))
        }),
    );
    Ok(report)
}

/// `N_T = [[0, T], [0, 0]]` on `L ⊕ M`.
pub fn n_from_t(t: &ModuleMap) -> ModuleMap {
    let (n, m) = (t.rows(), t.cols());
    let mut out = PolyMatrix::zero(n + m, n + m);
    out.place(0, n, t);
    out
}

/// `T` as a degree-one cochain `M -> L`.
pub fn map_cochain(alg: &HomLieConformalAlgebra, rep: &Representation, t: &ModuleMap) -> Result<Cochain> {
    Cochain::from_map(t, CochainKind::ModuleToAlgebra, rep.space(), alg.space())
}

fn require_module_to_algebra(alg: &HomLieConformalAlgebra, rep: &Representation, f: &Cochain) -> Result<()> {
    if f.kind() != CochainKind::ModuleToAlgebra || f.source().rank() != rep.mrank() || f.target().rank() != alg.rank() {
        return Err(Error::KindMismatch(format!(
            "expected an M->L cochain, got {}",
            f.kind().as_str()
        )));
    }
    Ok(())
}

/// `{{f, g}} = (-1)^p [[θ̂, f̂], ĝ]` for `f` of degree `q` and `g` of degree
/// `p`, restricted to module arguments and algebra values.
pub fn graded_bracket(alg: &HomLieConformalAlgebra, rep: &Representation, f: &Cochain, g: &Cochain) -> Result<Cochain> {
    require_module_to_algebra(alg, rep, f)?;
    require_module_to_algebra(alg, rep, g)?;
    if f.degree() == 0 || g.degree() == 0 {
        return Err(Error::KindMismatch("graded bracket needs positive degrees".into()));
    }
    let theta = theta_hat(alg, rep);
    let inner = nr_bracket(&theta, &lift(alg, rep, f)?)?;
    let outer = nr_bracket(&inner, &lift(alg, rep, g)?)?;
    let signed = if g.degree() % 2 == 1 {
        outer.scale(&MultiPoly::int(-1))
    } else {
        outer
    };
    let mut out = project_module_to_algebra(alg, rep, &signed)?;
    out = out.with_spaces(CochainKind::ModuleToAlgebra, rep.space(), alg.space())?;
    Ok(out)
}

/// The closed form `2(T(ρ(Tm1)_λ m2) - T(ρ(Tm2)_{-∂-λ} m1) - [Tm1_λ Tm2])`
/// of `{{T, T}}`, in `l1`.
pub fn graded_square_closed_form(alg: &HomLieConformalAlgebra, rep: &Representation, t: &ModuleMap) -> Result<Cochain> {
    check_shape(alg, rep, t)?;
    let m = rep.mrank();
    let mut out = Cochain::zero(2, CochainKind::ModuleToAlgebra, rep.space(), alg.space());
    let l1 = MultiPoly::lam(1);
    for p in tuples(&[m, m]) {
        let v = ooperator_defect(alg, rep, t, p[0], p[1]).scale(&MultiPoly::int(-2));
        out.set(&p, v.substitute(Var::L, &l1));
    }
    Ok(out)
}

/// `Tβ = αT` and `{{T, T}} = 0`.
pub fn check_mc_operator(alg: &HomLieConformalAlgebra, rep: &Representation, t: &ModuleMap) -> Result<Report> {
    check_shape(alg, rep, t)?;
    let mut report = Report::new();
    record_commutes(&mut report, alg, rep, t);
    let tc = map_cochain(alg, rep, t)?;
    let sq = graded_bracket(alg, rep, &tc, &tc)?;
    report.record(
        "maurer-cartan",
        true,
        &alg.basis,
        sq.tuples().into_iter().map(|p| (sq.tuple_names(&p), sq.get(&p).clone())),
    );
    Ok(report)
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HomPreLieConformalAlgebra {
    pub basis: Vec<String>,
    /// `product[a][b]` is `f_a *_λ f_b`, in `d` and `l`.
    pub product: Vec<Vec<PolyVector>>,
    pub beta: StructureMap,
}

impl HomPreLieConformalAlgebra {
    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn product_at(&self, x: &PolyVector, y: &PolyVector, lam: &MultiPoly) -> PolyVector {
        apply_conformal(
            |t: &[usize]| &self.product[t[0]][t[1]],
            &[Var::L],
            self.rank(),
            &[x, y],
            std::slice::from_ref(lam),
        )
    }
}

fn require_ooperator(alg: &HomLieConformalAlgebra, rep: &Representation, t: &ModuleMap) -> Result<()> {
    let report = check_ooperator(alg, rep, t)?;
    match report.first_failure() {
        None => Ok(()),
        Some(c) => Err(Error::NotOOperator(match c.first_witness() {
            Some(w) if !w.tuple.is_empty() => format!("{} fails {w}", c.id),
            _ => format!("{} fails", c.id),
        })),
    }
}

fn pre_lie_table(rep: &Representation, t: &ModuleMap) -> HomPreLieConformalAlgebra {
    let m = rep.mrank();
    let l = MultiPoly::l();
    let product = (0..m)
        .map(|a| (0..m).map(|b| rep.act_at(&t.column(a), &rep.basis_vector(b), &l)).collect())
        .collect();
    HomPreLieConformalAlgebra {
        basis: rep.mbasis.clone(),
        product,
        beta: rep.beta.clone(),
    }
}

/// `m *_λ n = ρ(Tm)_λ n`.
pub fn pre_lie_from(alg: &HomLieConformalAlgebra, rep: &Representation, t: &ModuleMap) -> Result<HomPreLieConformalAlgebra> {
    check_shape(alg, rep, t)?;
    require_ooperator(alg, rep, t)?;
    Ok(pre_lie_table(rep, t))
}

/// β-multiplicativity and the Hom-pre-Lie identity
/// `(m*_λ n)*_{λ+μ} βr - βm*_λ(n*_μ r) = (n*_μ m)*_{λ+μ} βr - βn*_μ(m*_λ r)`.
pub fn check_hom_pre_lie(p: &HomPreLieConformalAlgebra) -> Report {
    let m = p.rank();
    let f = |a: usize| PolyVector::basis(m, a);
    let (l, l1, l2) = (MultiPoly::l(), MultiPoly::lam(1), MultiPoly::lam(2));
    let l12 = &l1 + &l2;
    let mut report = Report::new();
    report.record(
        "multiplicative",
        true,
        &p.basis,
        tuples(&[m, m]).into_iter().map(|t| {
            let lhs = p.beta.apply(&p.product[t[0]][t[1]]);
            let rhs = p.product_at(&p.beta.column(t[0]), &p.beta.column(t[1]), &l);
            (pair_names(&p.basis, &t), &lhs - &rhs)
        }),
    );
    report.record(
        "pre-lie",
        true,
        &p.basis,
        tuples(&[m, m, m]).into_iter().map(|t| {
            let (a, b, c) = (t[0], t[1], t[2]);
            let br = p.beta.column(c);
            let mut v = p.product_at(&p.product_at(&f(a), &f(b), &l1), &br, &l12);
            v -= &p.product_at(&p.beta.column(a), &p.product_at(&f(b), &f(c), &l2), &l1);
            v -= &p.product_at(&p.product_at(&f(b), &f(a), &l2), &br, &l12);
            v += &p.product_at(&p.beta.column(b), &p.product_at(&f(a), &f(c), &l1), &l2);
            (pair_names(&p.basis, &t), v)
        }),
    );
    report
}

/// `[m_λ n]^c = m *_λ n - n *_{-∂-λ} m` with twist `β`.
pub fn subadjacent(p: &HomPreLieConformalAlgebra) -> HomLieConformalAlgebra {
    let m = p.rank();
    let bracket = (0..m)
        .map(|a| {
            (0..m)
                .map(|b| &p.product[a][b] - &p.product[b][a].substitute(Var::L, &minus_d_minus_l()))
                .collect()
        })
        .collect();
    HomLieConformalAlgebra {
        basis: p.basis.clone(),
        bracket,
        alpha: p.beta.clone(),
    }
}

fn rho_t_table(alg: &HomLieConformalAlgebra, rep: &Representation, t: &ModuleMap) -> Representation {
    let (n, m) = (alg.rank(), rep.mrank());
    let l = MultiPoly::l();
    let action = (0..m)
        .map(|a| {
            (0..n)
                .map(|i| {
                    let x = alg.basis_vector(i);
                    let mut v = alg.bracket_at(&t.column(a), &x, &l);
                    v += &t.apply(&rep.act_at(&x, &rep.basis_vector(a), &minus_d_minus_l()));
                    v
                })
                .collect()
        })
        .collect();
    Representation {
        mbasis: alg.basis.clone(),
        action,
        beta: alg.alpha.clone(),
    }
}

/// `ρ_T(m)_λ x = [T(m)_λ x] + T(ρ(x)_{-∂-λ} m)`, a representation of the
/// sub-adjacent algebra on `L` with twist `α`.
pub fn rho_t(alg: &HomLieConformalAlgebra, rep: &Representation, t: &ModuleMap) -> Result<Representation> {
    check_shape(alg, rep, t)?;
    require_ooperator(alg, rep, t)?;
    Ok(rho_t_table(alg, rep, t))
}

/// The coboundary of the sub-adjacent algebra with coefficients in `ρ_T`.
pub fn modified_coboundary(
    alg: &HomLieConformalAlgebra,
    rep: &Representation,
    t: &ModuleMap,
    f: &Cochain,
) -> Result<Cochain> {
    require_module_to_algebra(alg, rep, f)?;
    let sub = subadjacent(&pre_lie_from(alg, rep, t)?);
    let rt = rho_t_table(alg, rep, t);
    let out = coboundary(&sub, &rt, &f.clone().with_spaces(CochainKind::AlgebraToModule, sub.space(), rt.space())?)?;
    out.with_spaces(CochainKind::ModuleToAlgebra, rep.space(), alg.space())
}

/// `δ_T(P) = {{T, P}}` for `p ≥ 1`; on a degree-zero `x` (with `αx = x`)
/// the 1-cochain `m ↦ ρ_T(β⁻¹m)_{-d} x`.
pub fn delta_t(alg: &HomLieConformalAlgebra, rep: &Representation, t: &ModuleMap, p: &Cochain) -> Result<Cochain> {
    require_ooperator(alg, rep, t)?;
    delta_t_unchecked(alg, rep, t, p)
}

/// [`delta_t`] without verifying that `T` is an O-operator.
pub fn delta_t_unchecked(alg: &HomLieConformalAlgebra, rep: &Representation, t: &ModuleMap, p: &Cochain) -> Result<Cochain> {
    require_module_to_algebra(alg, rep, p)?;
    if p.degree() == 0 {
        let sub = subadjacent(&pre_lie_table(rep, t));
        let rt = rho_t_table(alg, rep, t);
        let x = p.clone().with_spaces(CochainKind::AlgebraToModule, sub.space(), rt.space())?;
        let out = coboundary(&sub, &rt, &x)?;
        return out.with_spaces(CochainKind::ModuleToAlgebra, rep.space(), alg.space());
    }
    graded_bracket(alg, rep, &map_cochain(alg, rep, t)?, p)
}

/// An element of `L` as a degree-zero `M -> L` cochain.
pub fn element_cochain(alg: &HomLieConformalAlgebra, rep: &Representation, x: PolyVector) -> Result<Cochain> {
    if x.len() != alg.rank() {
        return Err(Error::RankMismatch("element does not match the algebra rank".into()));
    }
    Cochain::from_element(x, CochainKind::ModuleToAlgebra, rep.space(), alg.space())
}
