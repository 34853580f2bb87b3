//! Exact multivariate polynomials over the rationals.
//!
//! Every scalar in the library lives here: polynomials in `d` (the
//! translation operator), the spectral variables `l`, `l1`..`l9`, and a pool
//! of internal symbols `u0`, `u1`, ... used for unknown coefficients.
//!
//! Terms are kept in a `BTreeMap` keyed by trimmed exponent vectors, so the
//! canonical form is unique and equality is structural. Monomials compare
//! lexicographically on `(d, l, l1, .., l9, u0, ..)` exponents; printing
//! lists terms from the largest monomial down.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Index, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rational = BigRational;

/// Highest indexed spectral variable (`l9`).
pub const MAX_LAMBDA: usize = 9;

const FIRST_SYMBOL: u16 = 2 + MAX_LAMBDA as u16;

/// A polynomial variable.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Var(u16);

impl Var {
    /// The translation operator, written `d`.
    pub const D: Var = Var(0);
    /// The lone spectral parameter, written `l`.
    pub const L: Var = Var(1);

    /// Indexed spectral variable `l<i>`, `1 <= i <= 9`.
    pub fn lambda(i: usize) -> Var {
        assert!(
            (1..=MAX_LAMBDA).contains(&i),
            "spectral variable index {i} out of range"
        );
        Var(1 + i as u16)
    }

    /// Internal symbol `u<k>` (unknown coefficients, never parsed).
    pub fn symbol(k: usize) -> Var {
        Var(FIRST_SYMBOL + k as u16)
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn is_symbol(self) -> bool {
        self.0 >= FIRST_SYMBOL
    }

    /// Parses one of the user-facing names `d`, `l`, `l1`..`l9`.
    pub fn from_name(name: &str) -> Option<Var> {
        match name {
            "d" => Some(Var::D),
            "l" => Some(Var::L),
            _ => {
                let rest = name.strip_prefix('l')?;
                if rest.len() != 1 {
                    return None;
                }
                let i = rest.parse::<usize>().ok()?;
                (1..=MAX_LAMBDA).contains(&i).then(|| Var::lambda(i))
            }
        }
    }

    pub fn name(self) -> String {
        match self.0 {
            0 => "d".to_string(),
            1 => "l".to_string(),
            i if i < FIRST_SYMBOL => format!("l{}", i - 1),
            i => format!("u{}", i - FIRST_SYMBOL),
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// Exponent vector with trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Monomial(Vec<u16>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: Var) -> Self {
        let mut e = vec![0; v.index() + 1];
        e[v.index()] = 1;
        Monomial(e)
    }

    pub fn exponent(&self, v: Var) -> u16 {
        self.0.get(v.index()).copied().unwrap_or(0)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    /// Iterates `(variable, exponent)` for the nonzero exponents.
    pub fn factors(&self) -> impl Iterator<Item = (Var, u16)> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| (Var(i as u16), e))
    }

    fn from_exponents(mut e: Vec<u16>) -> Self {
        while e.last() == Some(&0) {
            e.pop();
        }
        Monomial(e)
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let (long, short) = if self.0.len() >= other.0.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut e = long.0.clone();
        for (a, b) in e.iter_mut().zip(&short.0) {
            *a += *b;
        }
        Monomial(e)
    }

    /// Splits into the part over variables selected by `keep` and the rest.
    fn split(&self, keep: impl Fn(Var) -> bool) -> (Monomial, Monomial) {
        let mut a = vec![0; self.0.len()];
        let mut b = vec![0; self.0.len()];
        for (i, &e) in self.0.iter().enumerate() {
            if keep(Var(i as u16)) {
                a[i] = e;
            } else {
                b[i] = e;
            }
        }
        (Monomial::from_exponents(a), Monomial::from_exponents(b))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (v, e) in self.factors() {
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// A polynomial with rational coefficients in canonical form.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(Monomial::one(), c);
        p
    }

    pub fn int(n: i64) -> Self {
        Self::constant(Rational::from_integer(BigInt::from(n)))
    }

    /// `num/den` as a constant polynomial.
    pub fn ratio(num: i64, den: i64) -> Self {
        Self::constant(Rational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn var(v: Var) -> Self {
        let mut p = Self::zero();
        p.add_term(Monomial::var(v), Rational::one());
        p
    }

    pub fn d() -> Self {
        Self::var(Var::D)
    }

    pub fn l() -> Self {
        Self::var(Var::L)
    }

    /// `l<i>`.
    pub fn lam(i: usize) -> Self {
        Self::var(Var::lambda(i))
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// The value if this polynomial is a constant (zero included).
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn degree_in(&self, v: Var) -> u16 {
        self.terms.keys().map(|m| m.exponent(v)).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(Monomial::total_degree)
            .max()
            .unwrap_or(0)
    }

    pub fn uses(&self, v: Var) -> bool {
        self.terms.keys().any(|m| m.exponent(v) > 0)
    }

    /// True when every variable occurring satisfies `allowed`.
    pub fn only_uses(&self, allowed: impl Fn(Var) -> bool) -> bool {
        self.terms
            .keys()
            .all(|m| m.factors().all(|(v, _)| allowed(v)))
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a * c))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> MultiPoly {
        let mut acc = MultiPoly::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Replaces `var` by `value` everywhere.
    pub fn substitute(&self, var: Var, value: &MultiPoly) -> MultiPoly {
        self.substitute_all(&[(var, value.clone())])
    }

    /// Simultaneous substitution: every listed variable is replaced by its
    /// value at once, so values may mention any of the replaced variables.
    pub fn substitute_all(&self, map: &[(Var, MultiPoly)]) -> MultiPoly {
        if map.is_empty() || self.is_zero() {
            return self.clone();
        }
        // power cache per replaced variable
        let mut powers: Vec<Vec<MultiPoly>> = vec![vec![MultiPoly::one()]; map.len()];
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let mut kept = m.0.clone();
            let mut factor = MultiPoly::constant(c.clone());
            for (k, (v, value)) in map.iter().enumerate() {
                let e = m.exponent(*v) as usize;
                if e == 0 {
                    continue;
                }
                kept[v.index()] = 0;
                let cache = &mut powers[k];
                while cache.len() <= e {
                    let next = cache.last().unwrap() * value;
                    cache.push(next);
                }
                factor = &factor * &cache[e];
            }
            let kept = Monomial::from_exponents(kept);
            for (fm, fc) in factor.terms {
                out.add_term(fm.mul(&kept), fc);
            }
        }
        out
    }

    /// Groups terms by their monomial over the variables selected by
    /// `outer`; each group's coefficient is a polynomial in the remaining
    /// variables.
    pub fn collect_by(&self, outer: impl Fn(Var) -> bool) -> BTreeMap<Monomial, MultiPoly> {
        let mut groups: BTreeMap<Monomial, MultiPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let (o, rest) = m.split(&outer);
            groups.entry(o).or_default().add_term(rest, c.clone());
        }
        groups
    }

    /// Coefficients of `v^k` for `k = 0..=deg`.
    pub fn coefficients_in(&self, v: Var) -> Vec<MultiPoly> {
        let deg = self.degree_in(v) as usize;
        let mut out = vec![MultiPoly::zero(); deg + 1];
        for (m, c) in &self.terms {
            let k = m.exponent(v) as usize;
            let mut e = m.0.clone();
            if k > 0 {
                e[v.index()] = 0;
            }
            out[k].add_term(Monomial::from_exponents(e), c.clone());
        }
        out
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({self})")
    }
}

fn fmt_rational(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for MultiPoly {
    /// Largest monomial first. The leading term carries its sign inside the
    /// coefficient (`-1*d`), later terms use a binary operator (`- 2*l`), so
    /// the output always parses back.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let magnitude = if i == 0 { c.clone() } else { c.abs() };
            if i > 0 {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            if m.is_one() {
                f.write_str(&fmt_rational(&magnitude))?;
            } else if magnitude.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{}*{m}", fmt_rational(&magnitude))?;
            }
        }
        Ok(())
    }
}

impl From<i64> for MultiPoly {
    fn from(n: i64) -> Self {
        MultiPoly::int(n)
    }
}

impl From<Rational> for MultiPoly {
    fn from(c: Rational) -> Self {
        MultiPoly::constant(c)
    }
}

impl From<Var> for MultiPoly {
    fn from(v: Var) -> Self {
        MultiPoly::var(v)
    }
}

impl AddAssign<&MultiPoly> for MultiPoly {
    fn add_assign(&mut self, rhs: &MultiPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl SubAssign<&MultiPoly> for MultiPoly {
    fn sub_assign(&mut self, rhs: &MultiPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c);
        }
    }
}

impl Add<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($ty:ty, $($tr:ident $method:ident),*) => {$(
        impl $tr<$ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty { (&self).$method(&rhs) }
        }
        impl $tr<&$ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: &$ty) -> $ty { (&self).$method(rhs) }
        }
        impl $tr<$ty> for &$ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty { self.$method(&rhs) }
        }
    )*};
}

forward_owned!(MultiPoly, Add add, Sub sub, Mul mul);

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

impl std::iter::Sum for MultiPoly {
    fn sum<I: Iterator<Item = MultiPoly>>(iter: I) -> MultiPoly {
        let mut acc = MultiPoly::zero();
        for p in iter {
            acc += &p;
        }
        acc
    }
}

/// A fixed-length vector of polynomials: the coordinates of an element of a
/// free module with respect to its basis.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PolyVector(Vec<MultiPoly>);

impl PolyVector {
    pub fn zero(len: usize) -> Self {
        PolyVector(vec![MultiPoly::zero(); len])
    }

    /// The `i`-th basis vector.
    pub fn basis(len: usize, i: usize) -> Self {
        let mut v = Self::zero(len);
        v.0[i] = MultiPoly::one();
        v
    }

    pub fn from_entries(entries: Vec<MultiPoly>) -> Self {
        PolyVector(entries)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[MultiPoly] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<MultiPoly> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(MultiPoly::is_zero)
    }

    /// Index and value of the first nonzero coordinate.
    pub fn first_nonzero(&self) -> Option<(usize, &MultiPoly)> {
        self.0.iter().enumerate().find(|(_, p)| !p.is_zero())
    }

    pub fn scale(&self, p: &MultiPoly) -> PolyVector {
        PolyVector(self.0.iter().map(|e| e * p).collect())
    }

    pub fn map(&self, f: impl Fn(&MultiPoly) -> MultiPoly) -> PolyVector {
        PolyVector(self.0.iter().map(f).collect())
    }

    pub fn substitute(&self, var: Var, value: &MultiPoly) -> PolyVector {
        self.map(|p| p.substitute(var, value))
    }

    pub fn substitute_all(&self, map: &[(Var, MultiPoly)]) -> PolyVector {
        self.map(|p| p.substitute_all(map))
    }

    /// Adds `coef * other` in place.
    pub fn add_scaled(&mut self, coef: &MultiPoly, other: &PolyVector) {
        assert_eq!(self.len(), other.len(), "vector length mismatch");
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            if !b.is_zero() {
                *a += &(coef * b);
            }
        }
    }

    /// Zero-padded embedding into a longer vector starting at `offset`.
    pub fn embed(&self, len: usize, offset: usize) -> PolyVector {
        let mut v = PolyVector::zero(len);
        for (i, p) in self.0.iter().enumerate() {
            v.0[offset + i] = p.clone();
        }
        v
    }

    /// The coordinates `offset..offset + len`.
    pub fn slice(&self, offset: usize, len: usize) -> PolyVector {
        PolyVector(self.0[offset..offset + len].to_vec())
    }

    /// Renders as `coef*name + ...` over the given basis names.
    pub fn render(&self, basis: &[String]) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .zip(basis)
            .filter(|(p, _)| !p.is_zero())
            .map(|(p, b)| format!("({p})*{b}"))
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

impl Index<usize> for PolyVector {
    type Output = MultiPoly;
    fn index(&self, i: usize) -> &MultiPoly {
        &self.0[i]
    }
}

impl fmt::Display for PolyVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        f.write_str(&parts.join(" | "))
    }
}

impl AddAssign<&PolyVector> for PolyVector {
    fn add_assign(&mut self, rhs: &PolyVector) {
        assert_eq!(self.len(), rhs.len(), "vector length mismatch");
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            *a += b;
        }
    }
}

impl SubAssign<&PolyVector> for PolyVector {
    fn sub_assign(&mut self, rhs: &PolyVector) {
        assert_eq!(self.len(), rhs.len(), "vector length mismatch");
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            *a -= b;
        }
    }
}

impl Add<&PolyVector> for &PolyVector {
    type Output = PolyVector;
    fn add(self, rhs: &PolyVector) -> PolyVector {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&PolyVector> for &PolyVector {
    type Output = PolyVector;
    fn sub(self, rhs: &PolyVector) -> PolyVector {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &PolyVector {
    type Output = PolyVector;
    fn neg(self) -> PolyVector {
        self.map(|p| -p)
    }
}

impl Add for PolyVector {
    type Output = PolyVector;
    fn add(self, rhs: PolyVector) -> PolyVector {
        &self + &rhs
    }
}

impl Sub for PolyVector {
    type Output = PolyVector;
    fn sub(self, rhs: PolyVector) -> PolyVector {
        &self - &rhs
    }
}

impl Neg for PolyVector {
    type Output = PolyVector;
    fn neg(self) -> PolyVector {
        -&self
    }
}

/// True iff the polynomial is identically zero.
pub fn poly_equal_zero(p: &MultiPoly) -> bool {
    p.is_zero()
}

/// Single-variable substitution; absent variables leave `p` unchanged.
pub fn poly_substitute(p: &MultiPoly, var: Var, value: &MultiPoly) -> MultiPoly {
    p.substitute(var, value)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d() -> MultiPoly {
        MultiPoly::d()
    }
    fn l() -> MultiPoly {
        MultiPoly::l()
    }

    #[test]
    fn canonical_zero_after_cancellation() {
        let p = &d().scale(&Rational::new(1.into(), 2.into()))
            - &d().scale(&Rational::new(1.into(), 2.into()));
        assert!(p.is_zero());
        assert_eq!(p.to_string(), "0");
    }

    #[test]
    fn square_expands() {
        let p = (&d() + &l().scale(&Rational::from_integer(2.into()))).pow(2);
        assert_eq!(p.to_string(), "d^2 + 4*d*l + 4*l^2");
    }

    #[test]
    fn leading_negative_unit_keeps_coefficient() {
        let p = -(&d() + &(&l() + &l()));
        assert_eq!(p.to_string(), "-1*d - 2*l");
        let q = &l() - &d();
        assert_eq!(q.to_string(), "-1*d + l");
    }

    #[test]
    fn substitution_examples() {
        // d + 2l with l := -d - l
        let p = &d() + &(&l() + &l());
        let q = p.substitute(Var::L, &(-&(&d() + &l())));
        assert_eq!(q, -(&d() + &(&l() + &l())));
        // d^2 + 4 d l at d := 0
        let r = &d().pow(2) + &(&MultiPoly::int(4) * &(&d() * &l()));
        assert!(r.substitute(Var::D, &MultiPoly::zero()).is_zero());
        // l1 l2 with l1 := l2
        let s = &MultiPoly::lam(1) * &MultiPoly::lam(2);
        assert_eq!(
            s.substitute(Var::lambda(1), &MultiPoly::lam(2)),
            MultiPoly::lam(2).pow(2)
        );
    }

    #[test]
    fn simultaneous_substitution_swaps() {
        let p = &MultiPoly::lam(1) - &MultiPoly::lam(2).pow(2);
        let q = p.substitute_all(&[
            (Var::lambda(1), MultiPoly::lam(2)),
            (Var::lambda(2), MultiPoly::lam(1)),
        ]);
        assert_eq!(q, &MultiPoly::lam(2) - &MultiPoly::lam(1).pow(2));
    }

    #[test]
    fn monomial_order_is_lex_on_d_first() {
        let big = Monomial::var(Var::D);
        let small = Monomial::var(Var::L).mul(&Monomial::var(Var::L));
        assert!(big > small);
        assert!(Monomial::var(Var::lambda(1)) < Monomial::var(Var::L));
    }

    #[test]
    fn collect_by_separates_symbols() {
        let u = MultiPoly::var(Var::symbol(0));
        let p = &(&u * &d()) + &(&d() * &MultiPoly::int(3));
        let groups = p.collect_by(|v| !v.is_symbol());
        assert_eq!(groups.len(), 1);
        assert_eq!(groups[&Monomial::var(Var::D)], &u + &MultiPoly::int(3));
    }

    #[test]
    fn var_names_round_trip() {
        for name in ["d", "l", "l1", "l5", "l9"] {
            assert_eq!(Var::from_name(name).unwrap().name(), name);
        }
        assert!(Var::from_name("l0").is_none());
        assert!(Var::from_name("l10").is_none());
        assert!(Var::from_name("x").is_none());
        assert_eq!(Var::symbol(3).name(), "u3");
    }
}
