//! Cochains, the coboundary, the circle product and the
//! Nijenhuis-Richardson bracket, lifts to the semidirect product, and the
//! Maurer-Cartan check.
//!
//! A degree-p cochain stores its values on basis p-tuples as vectors in `d`
//! and the free parameters `l1..l(p-1)`; the parameter of the last argument
//! is the dependent `-(l1 + .. + l(p-1)) - d`. Formulas that address a full
//! list of slot parameters pass the first `p - 1` of them and let the last
//! one follow from conformal sesquilinearity, which is the same as computing
//! formally and substituting the dependent parameter at the end.

use num_bigint::BigInt;

use crate::conformal::{apply_conformal, dependent_lambda, tuples};
use crate::error::{Error, Result};
use crate::matrix::ModuleMap;
use crate::poly::{MultiPoly, PolyVector, Rational, Var, MAX_LAMBDA};
use crate::report::Report;
use crate::structures::{HomLieConformalAlgebra, Representation, Space};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum CochainKind {
    /// `M^p -> L`
    ModuleToAlgebra,
    /// `L^p -> M`
    AlgebraToModule,
    /// `L^p -> L`
    AlgebraToAlgebra,
    /// `(L ⊕ M)^p -> L ⊕ M`
    Semidirect,
}

impl CochainKind {
    pub fn as_str(self) -> &'static str {
        match self {
            CochainKind::ModuleToAlgebra => "M->L",
            CochainKind::AlgebraToModule => "L->M",
            CochainKind::AlgebraToAlgebra => "L->L",
            CochainKind::Semidirect => "(L+M)->(L+M)",
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Cochain {
    degree: usize,
    kind: CochainKind,
    source: Space,
    target: Space,
    /// Values on basis tuples in lexicographic order; one entry (an element
    /// of the target) in degree zero.
    table: Vec<PolyVector>,
}

/// `l1, .., lk`.
pub fn lambda_vars(k: usize) -> Vec<Var> {
    (1..=k).map(Var::lambda).collect()
}

/// The full slot list `(l1, .., l(p-1), -(l1 + .. + l(p-1)) - d)`.
pub fn slot_lambdas(p: usize) -> Vec<MultiPoly> {
    let mut s: Vec<MultiPoly> = (1..p).map(MultiPoly::lam).collect();
    if p > 0 {
        s.push(dependent_lambda(&s));
    }
    s
}

fn sign(odd: bool) -> MultiPoly {
    MultiPoly::int(if odd { -1 } else { 1 })
}

fn factorial(n: usize) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

/// Sign of a permutation given as a list of images, by inversion count.
pub fn permutation_is_odd(perm: &[usize]) -> bool {
    let mut inv = 0usize;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                inv += 1;
            }
        }
    }
    inv % 2 == 1
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn rec(n: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for i in 0..n {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                rec(n, cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    rec(n, &mut cur, &mut used, &mut out);
    out
}

/// `(k, N-k)`-shuffles of `0..N` in lexicographic order of the first block,
/// each as the full image list.
pub fn shuffles(k: usize, total: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut comb: Vec<usize> = (0..k).collect();
    if k > total {
        return out;
    }
    loop {
        let mut perm = comb.clone();
        perm.extend((0..total).filter(|i| !comb.contains(i)));
        out.push(perm);
        // next combination
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if comb[i] < total - k + i {
                comb[i] += 1;
                for j in i + 1..k {
                    comb[j] = comb[j - 1] + 1;
                }
                break;
            }
        }
    }
}

impl Cochain {
    pub fn new(
        degree: usize,
        kind: CochainKind,
        source: Space,
        target: Space,
        table: Vec<PolyVector>,
    ) -> Result<Self> {
        if degree > MAX_LAMBDA + 1 {
            return Err(Error::Invalid(format!(
                "cochain degree {degree} exceeds the limit {}",
                MAX_LAMBDA + 1
            )));
        }
        let expected = if degree == 0 {
            1
        } else {
            source.rank().pow(degree as u32)
        };
        if table.len() != expected {
            return Err(Error::RankMismatch(format!(
                "degree-{degree} cochain needs {expected} values, got {}",
                table.len()
            )));
        }
        let free = lambda_vars(degree.saturating_sub(1));
        for v in &table {
            if v.len() != target.rank() {
                return Err(Error::RankMismatch(format!(
                    "cochain value has {} coordinates, expected {}",
                    v.len(),
                    target.rank()
                )));
            }
            if !v
                .entries()
                .iter()
                .all(|p| p.only_uses(|x| x == Var::D || free.contains(&x)))
            {
                return Err(Error::Invalid(format!(
                    "degree-{degree} cochain values may only use d and l1..l{}",
                    degree.saturating_sub(1)
                )));
            }
        }
        Ok(Cochain {
            degree,
            kind,
            source,
            target,
            table,
        })
    }

    pub fn zero(degree: usize, kind: CochainKind, source: Space, target: Space) -> Self {
        let len = if degree == 0 {
            1
        } else {
            source.rank().pow(degree as u32)
        };
        let t = target.rank();
        Cochain {
            degree,
            kind,
            source,
            target,
            table: vec![PolyVector::zero(t); len],
        }
    }

    /// A degree-one cochain from a matrix whose column `j` is the image of
    /// source basis vector `j`.
    pub fn from_map(map: &ModuleMap, kind: CochainKind, source: Space, target: Space) -> Result<Self> {
        if map.cols() != source.rank() || map.rows() != target.rank() {
            return Err(Error::RankMismatch(format!(
                "map is {} x {}, expected {} x {}",
                map.rows(),
                map.cols(),
                target.rank(),
                source.rank()
            )));
        }
        let table = (0..source.rank()).map(|j| map.column(j)).collect();
        Cochain::new(1, kind, source, target, table)
    }

    /// A degree-zero cochain holding an element of the target.
    pub fn from_element(element: PolyVector, kind: CochainKind, source: Space, target: Space) -> Result<Self> {
        Cochain::new(0, kind, source, target, vec![element])
    }

    /// The bracket of `alg` as a degree-two cochain `L^2 -> L` (parameter
    /// renamed from `l` to `l1`).
    pub fn from_bracket(alg: &HomLieConformalAlgebra) -> Self {
        let n = alg.rank();
        let l1 = MultiPoly::lam(1);
        let table = tuples(&[n, n])
            .into_iter()
            .map(|t| alg.bracket[t[0]][t[1]].substitute(Var::L, &l1))
            .collect();
        Cochain {
            degree: 2,
            kind: CochainKind::AlgebraToAlgebra,
            source: alg.space(),
            target: alg.space(),
            table,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn kind(&self) -> CochainKind {
        self.kind
    }

    pub fn source(&self) -> &Space {
        &self.source
    }

    pub fn target(&self) -> &Space {
        &self.target
    }

    pub fn table(&self) -> &[PolyVector] {
        &self.table
    }

    pub fn is_zero(&self) -> bool {
        self.table.iter().all(PolyVector::is_zero)
    }

    /// All basis tuples in table order.
    pub fn tuples(&self) -> Vec<Vec<usize>> {
        tuples(&vec![self.source.rank(); self.degree])
    }

    pub fn index(&self, tuple: &[usize]) -> usize {
        let r = self.source.rank();
        tuple.iter().fold(0, |acc, &i| acc * r + i)
    }

    pub fn get(&self, tuple: &[usize]) -> &PolyVector {
        &self.table[self.index(tuple)]
    }

    pub fn set(&mut self, tuple: &[usize], value: PolyVector) {
        let i = self.index(tuple);
        assert_eq!(value.len(), self.target.rank());
        self.table[i] = value;
    }

    /// The stored element of a degree-zero cochain.
    pub fn element(&self) -> &PolyVector {
        assert_eq!(self.degree, 0, "not a degree-zero cochain");
        &self.table[0]
    }

    /// The matrix of a degree-one cochain.
    pub fn to_map(&self) -> ModuleMap {
        assert_eq!(self.degree, 1, "not a degree-one cochain");
        let mut m = ModuleMap::zero(self.target.rank(), self.source.rank());
        for j in 0..self.source.rank() {
            for i in 0..self.target.rank() {
                m.set(i, j, self.table[j][i].clone());
            }
        }
        m
    }

    /// Names of a basis tuple.
    pub fn tuple_names(&self, tuple: &[usize]) -> Vec<String> {
        tuple.iter().map(|&i| self.source.basis[i].clone()).collect()
    }

    /// `f_{λ1..λ(p-1)}(x1, .., xp)` with `λi := lams[i]`.
    pub fn eval(&self, args: &[&PolyVector], lams: &[MultiPoly]) -> PolyVector {
        if self.degree == 0 {
            return self.table[0].clone();
        }
        assert_eq!(args.len(), self.degree, "wrong number of arguments");
        let r = self.source.rank();
        apply_conformal(
            |t: &[usize]| &self.table[t.iter().fold(0, |acc, &i| acc * r + i)],
            &lambda_vars(self.degree - 1),
            self.target.rank(),
            args,
            lams,
        )
    }

    /// Like [`Cochain::eval`] with a full slot list; the last slot is implied.
    pub fn eval_slots(&self, args: &[&PolyVector], slots: &[MultiPoly]) -> PolyVector {
        assert_eq!(slots.len(), args.len());
        let p = slots.len();
        self.eval(args, &slots[..p.saturating_sub(1)])
    }

    fn same_shape(&self, other: &Cochain) -> Result<()> {
        if self.degree != other.degree
            || self.source.rank() != other.source.rank()
            || self.target.rank() != other.target.rank()
        {
            return Err(Error::KindMismatch(format!(
                "cannot combine a degree-{} {} cochain with a degree-{} {} cochain",
                self.degree,
                self.kind.as_str(),
                other.degree,
                other.kind.as_str()
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Cochain) -> Result<Cochain> {
        self.same_shape(other)?;
        let mut out = self.clone();
        for (a, b) in out.table.iter_mut().zip(&other.table) {
            *a += b;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Cochain) -> Result<Cochain> {
        self.add(&other.scale(&MultiPoly::int(-1)))
    }

    pub fn scale(&self, c: &MultiPoly) -> Cochain {
        let mut out = self.clone();
        for v in &mut out.table {
            *v = v.scale(c);
        }
        out
    }

    /// `σ·f`: arguments and slot parameters permuted simultaneously,
    /// `(σ·f)(x1, ..) = f_{λσ(1), ..}(xσ(1), ..)`, evaluated on the basis
    /// tuple `tuple`.
    fn permuted_value(&self, tuple: &[usize], perm: &[usize]) -> PolyVector {
        let r = self.source.rank();
        let slots = slot_lambdas(self.degree);
        let args: Vec<PolyVector> = perm.iter().map(|&k| PolyVector::basis(r, tuple[k])).collect();
        let arg_refs: Vec<&PolyVector> = args.iter().collect();
        let s: Vec<MultiPoly> = perm.iter().map(|&k| slots[k].clone()).collect();
        self.eval_slots(&arg_refs, &s)
    }

    /// The skew-symmetrization `(1/p!) Σ sign(σ) σ·f`.
    pub fn skew_symmetrize(&self) -> Cochain {
        let p = self.degree;
        if p < 2 {
            return self.clone();
        }
        let perms = permutations(p);
        let inv = MultiPoly::constant(Rational::new(1.into(), factorial(p)));
        let mut out = self.clone();
        for t in self.tuples() {
            let mut acc = PolyVector::zero(self.target.rank());
            for perm in &perms {
                let v = self.permuted_value(&t, perm);
                acc.add_scaled(&sign(permutation_is_odd(perm)), &v);
            }
            out.set(&t, acc.scale(&inv));
        }
        out
    }

    /// Replaces the spaces (used when a cochain is reinterpreted in a
    /// context with identical ranks).
    pub fn with_spaces(mut self, kind: CochainKind, source: Space, target: Space) -> Result<Cochain> {
        if source.rank() != self.source.rank() || target.rank() != self.target.rank() {
            return Err(Error::RankMismatch("incompatible spaces".into()));
        }
        self.kind = kind;
        self.source = source;
        self.target = target;
        Ok(self)
    }
}

/// The twist compatibility (`target twist` of each value equals the value
/// on twisted arguments) and skew-symmetry under each adjacent
/// transposition of arguments and parameters.
pub fn check_cochain(f: &Cochain) -> Report {
    let mut report = Report::new();
    let p = f.degree;
    let basis = &f.target.basis;
    if p == 0 {
        let v = f.element();
        report.record(
            "twist-fixed",
            true,
            basis,
            [(Vec::new(), &f.target.twist.apply(v) - v)],
        );
        return report;
    }
    let lams: Vec<MultiPoly> = (1..p).map(MultiPoly::lam).collect();
    report.record(
        "twist-compatible",
        true,
        basis,
        f.tuples().into_iter().map(|t| {
            let lhs = f.target.twist.apply(f.get(&t));
            let args: Vec<PolyVector> = t.iter().map(|&i| f.source.twist.column(i)).collect();
            let refs: Vec<&PolyVector> = args.iter().collect();
            (f.tuple_names(&t), &lhs - &f.eval(&refs, &lams))
        }),
    );
    for k in 0..p.saturating_sub(1) {
        let mut perm: Vec<usize> = (0..p).collect();
        perm.swap(k, k + 1);
        report.record(
            format!("skew-{}{}", k + 1, k + 2),
            true,
            basis,
            f.tuples().into_iter().map(|t| {
                let v = f.get(&t) + &f.permuted_value(&t, &perm);
                (f.tuple_names(&t), v)
            }),
        );
    }
    report
}

fn check_context(alg: &HomLieConformalAlgebra, rep: &Representation, f: &Cochain) -> Result<()> {
    if f.source.rank() != alg.rank() || f.target.rank() != rep.mrank() {
        return Err(Error::RankMismatch(format!(
            "cochain {}-> {} does not match algebra rank {} and module rank {}",
            f.source.rank(),
            f.target.rank(),
            alg.rank(),
            rep.mrank()
        )));
    }
    Ok(())
}

/// The coboundary `δ_{α,β}` with coefficients in `rep`.
///
/// In degree zero the element `m` goes to `x ↦ ρ(α⁻¹x)_{-d} m`.
pub fn coboundary(alg: &HomLieConformalAlgebra, rep: &Representation, f: &Cochain) -> Result<Cochain> {
    check_context(alg, rep, f)?;
    let p = f.degree;
    let n = alg.rank();
    if p == 0 {
        let ainv = alg.alpha.inverse()?;
        let m = f.element();
        let minus_d = -MultiPoly::d();
        let table = (0..n).map(|i| rep.act_at(&ainv.column(i), m, &minus_d)).collect();
        return Cochain::new(1, f.kind, f.source.clone(), f.target.clone(), table);
    }
    let q = p + 1;
    let ap = alg.alpha.pow(p as u32 - 1);
    let slots = slot_lambdas(q);
    let mut out = Cochain::zero(q, f.kind, f.source.clone(), f.target.clone());
    for t in out.tuples() {
        let x: Vec<PolyVector> = t.iter().map(|&i| alg.basis_vector(i)).collect();
        let mut acc = PolyVector::zero(rep.mrank());
        for i in 0..q {
            let rest: Vec<&PolyVector> = (0..q).filter(|&k| k != i).map(|k| &x[k]).collect();
            let rest_slots: Vec<MultiPoly> = (0..q).filter(|&k| k != i).map(|k| slots[k].clone()).collect();
            let inner = f.eval_slots(&rest, &rest_slots);
            let term = rep.act_at(&ap.column(t[i]), &inner, &slots[i]);
            acc.add_scaled(&sign(i % 2 == 1), &term);
        }
        for i in 0..q {
            for j in i + 1..q {
                let br = alg.bracket_at(&x[i], &x[j], &slots[i]);
                let spect: Vec<PolyVector> = (0..q)
                    .filter(|&k| k != i && k != j)
                    .map(|k| alg.alpha.column(t[k]))
                    .collect();
                let mut args: Vec<&PolyVector> = vec![&br];
                args.extend(spect.iter());
                let mut s = vec![&slots[i] + &slots[j]];
                s.extend((0..q).filter(|&k| k != i && k != j).map(|k| slots[k].clone()));
                let term = f.eval_slots(&args, &s);
                acc.add_scaled(&sign((i + j) % 2 == 1), &term);
            }
        }
        out.set(&t, acc);
    }
    Ok(out)
}

fn check_composable(f: &Cochain, g: &Cochain) -> Result<()> {
    let same = |a: &Space, b: &Space| a.rank() == b.rank() && a.twist == b.twist;
    if f.degree == 0
        || g.degree == 0
        || !same(&f.source, &f.target)
        || !same(&f.source, &g.source)
        || !same(&g.source, &g.target)
    {
        return Err(Error::KindMismatch(format!(
            "circle product needs two positive-degree cochains on one space, got {} and {}",
            f.kind.as_str(),
            g.kind.as_str()
        )));
    }
    Ok(())
}

/// The circle product `f ⊚ g` (shuffle insertion of `g` into the first
/// argument of `f`, twist powers on the remaining arguments).
pub fn circle(f: &Cochain, g: &Cochain) -> Result<Cochain> {
    check_composable(f, g)?;
    let (m, n) = (f.degree, g.degree);
    let total = m + n - 1;
    if total > MAX_LAMBDA + 1 {
        return Err(Error::Invalid(format!("result degree {total} exceeds the limit")));
    }
    let r = f.source.rank();
    let twist = f.source.twist.pow(n as u32 - 1);
    let slots = slot_lambdas(total);
    let shuf = shuffles(n, total);
    let mut out = Cochain::zero(total, f.kind, f.source.clone(), f.target.clone());
    for t in out.tuples() {
        let mut acc = PolyVector::zero(f.target.rank());
        for tau in &shuf {
            let inner_args: Vec<PolyVector> = tau[..n].iter().map(|&k| PolyVector::basis(r, t[k])).collect();
            let inner_refs: Vec<&PolyVector> = inner_args.iter().collect();
            let inner_slots: Vec<MultiPoly> = tau[..n].iter().map(|&k| slots[k].clone()).collect();
            let inner = g.eval_slots(&inner_refs, &inner_slots);
            if inner.is_zero() {
                continue;
            }
            let spect: Vec<PolyVector> = tau[n..].iter().map(|&k| twist.column(t[k])).collect();
            let mut args: Vec<&PolyVector> = vec![&inner];
            args.extend(spect.iter());
            let mut s = vec![inner_slots.iter().cloned().sum::<MultiPoly>()];
            s.extend(tau[n..].iter().map(|&k| slots[k].clone()));
            let term = f.eval_slots(&args, &s);
            acc.add_scaled(&sign(permutation_is_odd(tau)), &term);
        }
        out.set(&t, acc);
    }
    Ok(out)
}

/// `[f, g] = f ⊚ g - (-1)^{(m-1)(n-1)} g ⊚ f`.
pub fn nr_bracket(f: &Cochain, g: &Cochain) -> Result<Cochain> {
    let fg = circle(f, g)?;
    let gf = circle(g, f)?;
    let odd = (f.degree - 1) * (g.degree - 1) % 2 == 1;
    if odd {
        fg.add(&gf)
    } else {
        fg.sub(&gf)
    }
}

/// The semidirect space `L ⊕ M` (basis of `L` first).
pub fn semidirect_space(alg: &HomLieConformalAlgebra, rep: &Representation) -> Space {
    let mut basis = alg.basis.clone();
    basis.extend(rep.mbasis.iter().cloned());
    Space {
        basis,
        twist: alg.alpha.direct_sum(&rep.beta),
    }
}

/// Horizontal lift of `f` to `(L ⊕ M)^p -> L ⊕ M`: the lift is nonzero only
/// on tuples drawn from the source block and lands in the target block.
pub fn lift(alg: &HomLieConformalAlgebra, rep: &Representation, f: &Cochain) -> Result<Cochain> {
    let (n, m) = (alg.rank(), rep.mrank());
    let (src_off, src_len, tgt_off, tgt_len) = match f.kind {
        CochainKind::ModuleToAlgebra => (n, m, 0, n),
        CochainKind::AlgebraToModule => (0, n, n, m),
        CochainKind::AlgebraToAlgebra => (0, n, 0, n),
        CochainKind::Semidirect => return Ok(f.clone()),
    };
    if f.source.rank() != src_len || f.target.rank() != tgt_len {
        return Err(Error::RankMismatch("cochain does not fit the semidirect context".into()));
    }
    let space = semidirect_space(alg, rep);
    let size = n + m;
    let mut out = Cochain::zero(f.degree, CochainKind::Semidirect, space.clone(), space);
    if f.degree == 0 {
        out.table[0] = f.element().embed(size, tgt_off);
        return Ok(out);
    }
    for t in f.tuples() {
        let lifted: Vec<usize> = t.iter().map(|&i| i + src_off).collect();
        out.set(&lifted, f.get(&t).embed(size, tgt_off));
    }
    Ok(out)
}

/// `θ̂ = m̂_c + ρ̂1 + ρ̂2`, the semidirect bracket as a degree-two cochain.
pub fn theta_hat(alg: &HomLieConformalAlgebra, rep: &Representation) -> Cochain {
    let sd = crate::structures::semidirect(alg, rep);
    let mut c = Cochain::from_bracket(&sd);
    c.kind = CochainKind::Semidirect;
    c
}

/// Restricts a semidirect cochain to `M`-arguments and the `L`-output,
/// failing if anything outside that block is nonzero.
pub fn project_module_to_algebra(
    alg: &HomLieConformalAlgebra,
    rep: &Representation,
    c: &Cochain,
) -> Result<Cochain> {
    let (n, m) = (alg.rank(), rep.mrank());
    let mut out = Cochain::zero(c.degree, CochainKind::ModuleToAlgebra, rep.space(), alg.space());
    for t in c.tuples() {
        let v = c.get(&t);
        let in_block = t.iter().all(|&i| i >= n);
        if in_block {
            if !v.slice(n, m).is_zero() {
                return Err(Error::Internal(format!(
                    "bracket has a module component on module arguments {:?}",
                    c.tuple_names(&t)
                )));
            }
            let local: Vec<usize> = t.iter().map(|&i| i - n).collect();
            out.set(&local, v.slice(0, n));
        } else if !v.is_zero() {
            return Err(Error::Internal(format!(
                "bracket is nonzero outside the module-to-algebra block at {:?}",
                c.tuple_names(&t)
            )));
        }
    }
    Ok(out)
}

/// Checks that `θ̂` is a skew cochain and `[θ̂, θ̂] = 0`; twist
/// compatibility of `θ̂` is advisory.
pub fn mc_check(alg: &HomLieConformalAlgebra, rep: &Representation) -> Report {
    let theta = theta_hat(alg, rep);
    let mut report = Report::new();
    let membership = check_cochain(&theta);
    for c in membership.checks {
        let required = c.id.starts_with("skew");
        report.record(
            format!("theta-{}", c.id),
            required,
            &theta.target.basis,
            c.witnesses.into_iter().map(|w| (w.tuple, w.value)),
        );
    }
    let sq = nr_bracket(&theta, &theta).expect("same space");
    report.record(
        "maurer-cartan",
        true,
        &theta.target.basis,
        sq.tuples().into_iter().map(|t| (sq.tuple_names(&t), sq.get(&t).clone())),
    );
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::structures::adjoint_rep;

    #[test]
    fn shuffles_are_lexicographic() {
        assert_eq!(
            shuffles(2, 3),
            vec![vec![0, 1, 2], vec![0, 2, 1], vec![1, 2, 0]]
        );
        assert_eq!(shuffles(1, 1), vec![vec![0]]);
        assert!(!permutation_is_odd(&[1, 2, 0]));
        assert!(permutation_is_odd(&[0, 2, 1]));
    }

    #[test]
    fn virasoro_bracket_is_a_skew_cochain() {
        let mc = Cochain::from_bracket(&fixtures::virasoro());
        assert!(check_cochain(&mc).passed());
    }

    #[test]
    fn constant_symmetric_cochain_fails_skew() {
        let vir = fixtures::virasoro();
        let f = Cochain::new(
            2,
            CochainKind::AlgebraToAlgebra,
            vir.space(),
            vir.space(),
            vec![PolyVector::basis(1, 0)],
        )
        .unwrap();
        let r = check_cochain(&f);
        let w = r.check("skew-12").unwrap().first_witness().unwrap();
        assert_eq!(w.value, PolyVector::from_entries(vec![MultiPoly::int(2)]));
    }

    #[test]
    fn virasoro_mc_squares_to_zero() {
        let mc = Cochain::from_bracket(&fixtures::virasoro());
        assert!(circle(&mc, &mc).unwrap().is_zero());
        assert!(nr_bracket(&mc, &mc).unwrap().is_zero());
    }

    #[test]
    fn coboundary_of_identity_on_virasoro() {
        let vir = fixtures::virasoro();
        let ad = adjoint_rep(&vir, 0);
        let id = Cochain::from_map(
            &crate::matrix::PolyMatrix::identity(1),
            CochainKind::AlgebraToAlgebra,
            vir.space(),
            vir.space(),
        )
        .unwrap();
        let d = coboundary(&vir, &ad, &id).unwrap();
        let expected = &MultiPoly::d() + &(&MultiPoly::int(2) * &MultiPoly::lam(1));
        assert_eq!(d.get(&[0, 0])[0], expected);
        // [m_c, id] = (-1)^{1+1} δ(id)
        let mc = Cochain::from_bracket(&vir);
        assert_eq!(nr_bracket(&mc, &id).unwrap(), d);
    }

    #[test]
    fn degree_zero_coboundary() {
        let vir = fixtures::virasoro();
        let m = fixtures::vir_module_int(1, 3);
        let f = Cochain::from_element(PolyVector::basis(1, 0), CochainKind::AlgebraToModule, vir.space(), m.space())
            .unwrap();
        let d = coboundary(&vir, &m, &f).unwrap();
        assert_eq!(d.get(&[0])[0], MultiPoly::int(3));
        assert!(coboundary(&vir, &m, &d).unwrap().is_zero());
    }

    #[test]
    fn module_identity_is_a_cocycle() {
        let vir = fixtures::virasoro();
        for c in [0, 1, -2] {
            let m = fixtures::vir_module_int(1, c);
            let f = Cochain::from_map(
                &crate::matrix::PolyMatrix::identity(1),
                CochainKind::AlgebraToModule,
                vir.space(),
                m.space(),
            )
            .unwrap();
            assert!(coboundary(&vir, &m, &f).unwrap().is_zero());
        }
    }

    #[test]
    fn theta_hat_matches_semidirect() {
        let vir = fixtures::virasoro();
        let m = fixtures::vir_module_int(1, 0);
        let th = theta_hat(&vir, &m);
        // [f λ e] = l f, with l renamed l1
        assert_eq!(th.get(&[1, 0]), &PolyVector::from_entries(vec![MultiPoly::zero(), MultiPoly::lam(1)]));
        assert!(mc_check(&vir, &m).passed());
    }
}
