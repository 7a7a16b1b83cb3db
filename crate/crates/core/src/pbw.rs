//! Exact arithmetic in `U(gl(N))`.
//!
//! Elements are linear combinations of PBW monomials: sequences of generators
//! `E[i,j]` sorted under a fixed total order ([`GenOrder`]). Products are
//! brought to normal form by moving generators past each other with the
//! bracket `[E_ij, E_kl] = δ_jk E_il − δ_li E_kj`; the result does not depend
//! on the rewriting path, which the tests check against an independent
//! bubble-sort rewriter.
//!
//! [`UPoly`] is a polynomial in a central variable `u` whose coefficients are
//! written to the left of the powers of `u`.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::rc::Rc;

use num_traits::{One, Zero};

use crate::linalg::RatPoly;
use crate::{Error, Rational, Result};

/// A basis element `E[row,col]` of `gl(N)`, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GenIdx {
    pub row: u8,
    pub col: u8,
}

impl GenIdx {
    pub fn new(row: usize, col: usize) -> Self {
        GenIdx {
            row: row as u8,
            col: col as u8,
        }
    }

    pub fn star(self) -> Self {
        GenIdx {
            row: self.col,
            col: self.row,
        }
    }

    fn mentions(self, k: u8) -> bool {
        self.row == k || self.col == k
    }
}

impl fmt::Display for GenIdx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "E[{},{}]", self.row, self.col)
    }
}

/// Total order on generators used to define PBW monomials.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum GenOrder {
    /// Lexicographic in `(row, col)`.
    #[default]
    Lex,
    /// `E[k,j]` (`j ≠ k`) first, then generators free of `k` in lexicographic
    /// order, then every `E[i,k]` (including `E[k,k]`) last.
    IndexLast(u8),
}

impl GenOrder {
    fn key(self, g: GenIdx) -> u32 {
        let base = (u32::from(g.row) << 8) | u32::from(g.col);
        match self {
            GenOrder::Lex => base,
            GenOrder::IndexLast(k) => {
                let group = if g.col == k {
                    2
                } else if g.row == k {
                    0
                } else {
                    1
                };
                (group << 16) | base
            }
        }
    }
}

/// An ordered product of generators; the empty monomial is the unit.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct PbwMonomial(pub Vec<GenIdx>);

impl PbwMonomial {
    pub fn unit() -> Self {
        PbwMonomial(Vec::new())
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn factors(&self) -> &[GenIdx] {
        &self.0
    }
}

impl fmt::Display for PbwMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join("*"))
    }
}

type Terms = BTreeMap<PbwMonomial, Rational>;
type Expansion = Rc<Vec<(PbwMonomial, Rational)>>;

thread_local! {
    static PRODUCT_CACHE: RefCell<HashMap<(GenOrder, PbwMonomial, GenIdx), Expansion>> =
        RefCell::new(HashMap::new());
}

/// Drops the memoized monomial-by-generator products of the current thread.
pub fn clear_product_cache() {
    PRODUCT_CACHE.with(|c| c.borrow_mut().clear());
}

/// `[E_a, E_b]` as at most two signed generators.
fn bracket(a: GenIdx, b: GenIdx) -> Vec<(GenIdx, i64)> {
    let mut out = Vec::with_capacity(2);
    if a.col == b.row {
        out.push((GenIdx { row: a.row, col: b.col }, 1));
    }
    if b.col == a.row {
        out.push((GenIdx { row: b.row, col: a.col }, -1));
    }
    if out.len() == 2 && out[0].0 == out[1].0 {
        out.clear();
    }
    out
}

fn add_term(terms: &mut Terms, m: PbwMonomial, c: Rational) {
    if c.is_zero() {
        return;
    }
    match terms.entry(m) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

/// Normal form of `mono · g` where `mono` is already ordered.
fn mono_times_gen(order: GenOrder, mono: &PbwMonomial, g: GenIdx) -> Expansion {
    let kg = order.key(g);
    match mono.0.last() {
        None => return Rc::new(vec![(PbwMonomial(vec![g]), Rational::one())]),
        Some(&x) if order.key(x) <= kg => {
            let mut v = mono.0.clone();
            v.push(g);
            return Rc::new(vec![(PbwMonomial(v), Rational::one())]);
        }
        _ => {}
    }
    let cache_key = (order, mono.clone(), g);
    if let Some(hit) = PRODUCT_CACHE.with(|c| c.borrow().get(&cache_key).cloned()) {
        return hit;
    }

    // prefix · x · g = (prefix · g) · x + prefix · [x, g]
    let x = *mono.0.last().expect("non-empty");
    let prefix = PbwMonomial(mono.0[..mono.0.len() - 1].to_vec());
    let mut acc = Terms::new();
    for (t, c) in mono_times_gen(order, &prefix, g).iter() {
        for (t2, c2) in mono_times_gen(order, t, x).iter() {
            add_term(&mut acc, t2.clone(), c * c2);
        }
    }
    for (h, sign) in bracket(x, g) {
        for (t2, c2) in mono_times_gen(order, &prefix, h).iter() {
            add_term(&mut acc, t2.clone(), c2 * Rational::from_integer(sign.into()));
        }
    }
    let result: Expansion = Rc::new(acc.into_iter().collect());
    PRODUCT_CACHE.with(|c| c.borrow_mut().insert(cache_key, result.clone()));
    result
}

/// An element of `U(gl(N))` in PBW normal form.
#[derive(Clone, PartialEq, Eq)]
pub struct UeaElement {
    rank: usize,
    order: GenOrder,
    terms: Terms,
}

impl UeaElement {
    pub fn zero(rank: usize) -> Self {
        UeaElement {
            rank,
            order: GenOrder::Lex,
            terms: Terms::new(),
        }
    }

    pub fn one(rank: usize) -> Self {
        Self::scalar(rank, Rational::one())
    }

    pub fn scalar(rank: usize, c: Rational) -> Self {
        let mut terms = Terms::new();
        add_term(&mut terms, PbwMonomial::unit(), c);
        UeaElement {
            rank,
            order: GenOrder::Lex,
            terms,
        }
    }

    /// The generator `E[i,j]`.
    pub fn generator(rank: usize, i: usize, j: usize) -> Result<Self> {
        check_index(rank, i, j)?;
        let mut terms = Terms::new();
        terms.insert(PbwMonomial(vec![GenIdx::new(i, j)]), Rational::one());
        Ok(UeaElement {
            rank,
            order: GenOrder::Lex,
            terms,
        })
    }

    /// `E[i,j]`, panicking on out-of-range indices.
    pub fn e(rank: usize, i: usize, j: usize) -> Self {
        Self::generator(rank, i, j).expect("generator index in range")
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> GenOrder {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PbwMonomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &PbwMonomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Maximal monomial length; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(PbwMonomial::degree).max()
    }

    /// Scalar part (coefficient of the unit monomial).
    pub fn constant_term(&self) -> Rational {
        self.coeff(&PbwMonomial::unit())
    }

    /// Same element over a larger (or equal) rank; indices are unchanged.
    pub fn with_rank(&self, rank: usize) -> Result<Self> {
        if let Some(bad) = self
            .terms
            .keys()
            .flat_map(|m| m.0.iter())
            .find(|g| usize::from(g.row.max(g.col)) > rank)
        {
            return Err(Error::IndexOutOfRange {
                row: bad.row.into(),
                col: bad.col.into(),
                rank,
            });
        }
        Ok(UeaElement {
            rank,
            order: self.order,
            terms: self.terms.clone(),
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        check_rank(self.rank, other.rank)?;
        let other = other.reordered(self.order);
        let mut terms = self.terms.clone();
        for (m, c) in other.terms {
            add_term(&mut terms, m, c);
        }
        Ok(UeaElement {
            rank: self.rank,
            order: self.order,
            terms,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }

    pub fn scale(&self, s: &Rational) -> Self {
        if s.is_zero() {
            return UeaElement {
                terms: Terms::new(),
                ..self.clone()
            };
        }
        UeaElement {
            rank: self.rank,
            order: self.order,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * s)).collect(),
        }
    }

    /// `self + s · 1`.
    pub fn add_scalar(&self, s: &Rational) -> Self {
        let mut out = self.clone();
        add_term(&mut out.terms, PbwMonomial::unit(), s.clone());
        out
    }

    /// Product in normal form.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        check_rank(self.rank, other.rank)?;
        let order = self.order;
        let other = other.reordered(order);
        let mut acc = Terms::new();
        for (mb, cb) in &other.terms {
            // self · mb, generator by generator
            let mut partial: Terms = self.terms.clone();
            for &g in &mb.0 {
                let mut next = Terms::new();
                for (t, c) in &partial {
                    for (t2, c2) in mono_times_gen(order, t, g).iter() {
                        add_term(&mut next, t2.clone(), c * c2);
                    }
                }
                partial = next;
            }
            for (t, c) in partial {
                add_term(&mut acc, t, c * cb);
            }
        }
        Ok(UeaElement {
            rank: self.rank,
            order,
            terms: acc,
        })
    }

    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.multiply(other)?.sub(&other.multiply(self)?)
    }

    /// `self^k`.
    pub fn pow(&self, k: usize) -> Self {
        let mut out = UeaElement {
            order: self.order,
            ..Self::one(self.rank)
        };
        for _ in 0..k {
            out = out.multiply(self).expect("equal ranks");
        }
        out
    }

    /// The anti-involution `E[i,j] ↦ E[j,i]`, reversing products.
    pub fn star(&self) -> Self {
        let mut acc = UeaElement {
            rank: self.rank,
            order: self.order,
            terms: Terms::new(),
        };
        for (m, c) in &self.terms {
            let word: Vec<GenIdx> = m.0.iter().rev().map(|g| g.star()).collect();
            let t = normal_order_in(self.order, &word, self.rank).scale(c);
            acc = acc.add(&t).expect("equal ranks");
        }
        acc
    }

    /// Same element re-expressed in the PBW basis for `order`.
    pub fn reordered(&self, order: GenOrder) -> Self {
        if order == self.order {
            return self.clone();
        }
        let mut acc = Terms::new();
        for (m, c) in &self.terms {
            for (t, c2) in normal_order_in(order, &m.0, self.rank).terms {
                add_term(&mut acc, t, c * c2);
            }
        }
        UeaElement {
            rank: self.rank,
            order,
            terms: acc,
        }
    }

    /// Keeps only the monomials free of index `k`.
    pub(crate) fn drop_index(&self, k: usize) -> Self {
        let k = k as u8;
        UeaElement {
            rank: self.rank,
            order: self.order,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| !m.0.iter().any(|g| g.mentions(k)))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Top-degree component as a commutative polynomial: sorted factor
    /// multisets with coefficients.
    pub fn symbol(&self) -> BTreeMap<Vec<GenIdx>, Rational> {
        let mut out = BTreeMap::new();
        let Some(d) = self.degree() else {
            return out;
        };
        for (m, c) in &self.terms {
            if m.degree() == d {
                let mut k = m.0.clone();
                k.sort();
                let e: &mut Rational = out.entry(k).or_insert_with(Rational::zero);
                *e += c;
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }
}

fn check_index(rank: usize, i: usize, j: usize) -> Result<()> {
    if i == 0 || j == 0 || i > rank || j > rank || rank > 255 {
        return Err(Error::IndexOutOfRange {
            row: i,
            col: j,
            rank,
        });
    }
    Ok(())
}

fn check_rank(a: usize, b: usize) -> Result<()> {
    if a != b {
        return Err(Error::RankMismatch { left: a, right: b });
    }
    Ok(())
}

fn normal_order_in(order: GenOrder, word: &[GenIdx], rank: usize) -> UeaElement {
    let mut terms = Terms::new();
    terms.insert(PbwMonomial::unit(), Rational::one());
    for &g in word {
        let mut next = Terms::new();
        for (t, c) in &terms {
            for (t2, c2) in mono_times_gen(order, t, g).iter() {
                add_term(&mut next, t2.clone(), c * c2);
            }
        }
        terms = next;
    }
    UeaElement { rank, order, terms }
}

/// PBW normal form of the word `E[w_1] E[w_2] ⋯` in `U(gl(N))`.
pub fn normal_order(word: &[GenIdx], rank: usize) -> Result<UeaElement> {
    for g in word {
        check_index(rank, g.row.into(), g.col.into())?;
    }
    Ok(normal_order_in(GenOrder::Lex, word, rank))
}

/// `a · b`.
pub fn multiply(a: &UeaElement, b: &UeaElement) -> Result<UeaElement> {
    a.multiply(b)
}

/// `a · b − b · a`.
pub fn commutator(a: &UeaElement, b: &UeaElement) -> Result<UeaElement> {
    a.commutator(b)
}

pub fn star(a: &UeaElement) -> UeaElement {
    a.star()
}

impl fmt::Display for UeaElement {
    /// Canonical text form: `c*E[i,j]*E[k,l] + ...`, monomials in map order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if m.0.is_empty() {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{c}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for UeaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UeaElement(gl({}): {})", self.rank, self)
    }
}

impl std::ops::Add for &UeaElement {
    type Output = UeaElement;
    fn add(self, rhs: &UeaElement) -> UeaElement {
        UeaElement::add(self, rhs).expect("rank mismatch")
    }
}

impl std::ops::Sub for &UeaElement {
    type Output = UeaElement;
    fn sub(self, rhs: &UeaElement) -> UeaElement {
        UeaElement::sub(self, rhs).expect("rank mismatch")
    }
}

impl std::ops::Mul for &UeaElement {
    type Output = UeaElement;
    fn mul(self, rhs: &UeaElement) -> UeaElement {
        self.multiply(rhs).expect("rank mismatch")
    }
}

impl std::ops::Neg for &UeaElement {
    type Output = UeaElement;
    fn neg(self) -> UeaElement {
        UeaElement::neg(self)
    }
}

/// Polynomial in a central variable `u` with coefficients in `U(gl(N))`
/// written to the left of the powers of `u`.
#[derive(Clone, PartialEq, Eq)]
pub struct UPoly {
    rank: usize,
    coeffs: Vec<UeaElement>,
}

impl UPoly {
    pub fn new(rank: usize, mut coeffs: Vec<UeaElement>) -> Self {
        while coeffs.last().is_some_and(UeaElement::is_zero) {
            coeffs.pop();
        }
        UPoly { rank, coeffs }
    }

    pub fn zero(rank: usize) -> Self {
        UPoly {
            rank,
            coeffs: Vec::new(),
        }
    }

    pub fn constant(c: UeaElement) -> Self {
        let rank = c.rank();
        Self::new(rank, vec![c])
    }

    /// A scalar polynomial lifted to `U(gl(N))[u]`.
    pub fn from_scalar(rank: usize, p: &RatPoly) -> Self {
        Self::new(
            rank,
            p.coeffs()
                .iter()
                .map(|c| UeaElement::scalar(rank, c.clone()))
                .collect(),
        )
    }

    /// `δ_ij (u + shift) + E[i,j]`: an entry of the matrix `u + shift + E`.
    pub fn entry(rank: usize, i: usize, j: usize, shift: &Rational) -> Result<Self> {
        let e = UeaElement::generator(rank, i, j)?;
        if i == j {
            Ok(Self::new(rank, vec![e.add_scalar(shift), UeaElement::one(rank)]))
        } else {
            Ok(Self::new(rank, vec![e]))
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn coeffs(&self) -> &[UeaElement] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> UeaElement {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(|| UeaElement::zero(self.rank))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        check_rank(self.rank, other.rank)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|k| self.coeff(k).add(&other.coeff(k)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(self.rank, coeffs))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self::new(self.rank, self.coeffs.iter().map(|c| c.scale(s)).collect())
    }

    /// Product; `u` is central so coefficients multiply in order.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        check_rank(self.rank, other.rank)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.rank));
        }
        let mut coeffs = vec![UeaElement::zero(self.rank); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = coeffs[i + j].add(&a.multiply(b)?)?;
            }
        }
        Ok(Self::new(self.rank, coeffs))
    }

    /// Multiplies every coefficient on the left by `x` (`x` need not commute
    /// with the coefficients, but commutes with `u`).
    pub fn left_mul(&self, x: &UeaElement) -> Result<Self> {
        Ok(Self::new(
            self.rank,
            self.coeffs
                .iter()
                .map(|c| x.multiply(c))
                .collect::<Result<Vec<_>>>()?,
        ))
    }

    /// `p(u + s)`.
    pub fn shift(&self, s: &Rational) -> Self {
        // Horner in the central variable.
        let mut acc = Self::zero(self.rank);
        for c in self.coeffs.iter().rev() {
            let times_u = {
                let mut v = vec![UeaElement::zero(self.rank)];
                v.extend(acc.coeffs.iter().cloned());
                Self::new(self.rank, v)
            };
            let times_s = acc.scale(s);
            acc = times_u
                .add(&times_s)
                .and_then(|p| p.add(&Self::constant(c.clone())))
                .expect("equal ranks");
        }
        acc
    }

    /// Value at a scalar `u = x`.
    pub fn eval_scalar(&self, x: &Rational) -> UeaElement {
        let mut acc = UeaElement::zero(self.rank);
        let mut power = Rational::one();
        for c in &self.coeffs {
            acc = acc.add(&c.scale(&power)).expect("equal ranks");
            power *= x;
        }
        acc
    }

    /// `Σ c_k x^k` with each coefficient written to the left of `x^k`.
    pub fn eval_left(&self, x: &UeaElement) -> Result<UeaElement> {
        check_rank(self.rank, x.rank())?;
        let mut acc = UeaElement::zero(self.rank);
        let mut power = UeaElement::one(self.rank);
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                power = power.multiply(x)?;
            }
            if !c.is_zero() {
                acc = acc.add(&c.multiply(&power)?)?;
            }
        }
        Ok(acc)
    }

    /// Whether every coefficient is a scalar multiple of the unit.
    pub fn as_scalar_poly(&self) -> Option<RatPoly> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            match c.num_terms() {
                0 => out.push(Rational::zero()),
                1 if c.degree() == Some(0) => out.push(c.constant_term()),
                _ => return None,
            }
        }
        Some(RatPoly::new(out))
    }
}

/// `Σ_k c_k · x^k` with coefficients on the left.
pub fn eval_left(p: &UPoly, x: &UeaElement) -> Result<UeaElement> {
    p.eval_left(x)
}

impl fmt::Display for UPoly {
    /// Ascending coefficient list.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", parts.join("; "))
    }
}

impl fmt::Debug for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UPoly(gl({}): {})", self.rank, self)
    }
}

/// Polynomial in two commuting central variables `u`, `v` with coefficients
/// in `U(gl(N))`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BiPoly {
    rank: usize,
    terms: BTreeMap<(usize, usize), UeaElement>,
}

impl BiPoly {
    pub fn zero(rank: usize) -> Self {
        BiPoly {
            rank,
            terms: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `p(u)` viewed as a polynomial in `(u, v)`.
    pub fn in_u(p: &UPoly) -> Self {
        Self::from_terms(
            p.rank(),
            p.coeffs().iter().enumerate().map(|(k, c)| ((k, 0), c.clone())),
        )
    }

    /// `p(v)` viewed as a polynomial in `(u, v)`.
    pub fn in_v(p: &UPoly) -> Self {
        Self::from_terms(
            p.rank(),
            p.coeffs().iter().enumerate().map(|(k, c)| ((0, k), c.clone())),
        )
    }

    /// Scalar polynomial `Σ c_ij u^i v^j`.
    pub fn scalar<I: IntoIterator<Item = ((usize, usize), Rational)>>(rank: usize, it: I) -> Self {
        Self::from_terms(rank, it.into_iter().map(|(k, c)| (k, UeaElement::scalar(rank, c))))
    }

    fn from_terms<I: IntoIterator<Item = ((usize, usize), UeaElement)>>(rank: usize, it: I) -> Self {
        let mut out = Self::zero(rank);
        for (k, c) in it {
            out.add_at(k, &c);
        }
        out
    }

    fn add_at(&mut self, k: (usize, usize), c: &UeaElement) {
        if c.is_zero() {
            return;
        }
        let slot = self
            .terms
            .entry(k)
            .or_insert_with(|| UeaElement::zero(c.rank()));
        *slot = slot.add(c).expect("equal ranks");
        if slot.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        check_rank(self.rank, other.rank)?;
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_at(*k, c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self::from_terms(self.rank, self.terms.iter().map(|(k, c)| (*k, c.scale(s))))
    }

    pub fn multiply(&self, other: &Self) -> Result<Self> {
        check_rank(self.rank, other.rank)?;
        let mut out = Self::zero(self.rank);
        for ((i, j), a) in &self.terms {
            for ((k, l), b) in &other.terms {
                out.add_at((i + k, j + l), &a.multiply(b)?);
            }
        }
        Ok(out)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(usize, usize), &UeaElement)> {
        self.terms.iter()
    }

    /// Value at scalar `(u, v)`.
    pub fn eval_scalar(&self, u: &Rational, v: &Rational) -> UeaElement {
        let mut acc = UeaElement::zero(self.rank);
        for ((i, j), c) in &self.terms {
            let w = num_traits::pow(u.clone(), *i) * num_traits::pow(v.clone(), *j);
            acc = acc.add(&c.scale(&w)).expect("equal ranks");
        }
        acc
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|((i, j), c)| format!("u^{i} v^{j}: ({c})"))
            .collect();
        write!(f, "{}", parts.join("; "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::q;

    fn g(i: usize, j: usize) -> GenIdx {
        GenIdx::new(i, j)
    }

    #[test]
    fn ordered_cartan_pair_is_untouched() {
        let x = normal_order(&[g(1, 1), g(2, 2)], 2).unwrap();
        assert_eq!(x.num_terms(), 1);
        assert_eq!(x.coeff(&PbwMonomial(vec![g(1, 1), g(2, 2)])), q(1));
    }

    #[test]
    fn e21_e12_rewrites_with_bracket() {
        let x = normal_order(&[g(2, 1), g(1, 2)], 2).unwrap();
        let expected = &(&UeaElement::e(2, 1, 2) * &UeaElement::e(2, 2, 1)) - &UeaElement::e(2, 1, 1);
        let expected = &expected + &UeaElement::e(2, 2, 2);
        assert_eq!(x, expected);
        assert_eq!(x.num_terms(), 3);
    }

    #[test]
    fn swapped_words_differ_by_bracket() {
        let a = normal_order(&[g(1, 2), g(2, 3)], 3).unwrap();
        let b = normal_order(&[g(2, 3), g(1, 2)], 3).unwrap();
        assert_eq!(&a - &b, UeaElement::e(3, 1, 3));
    }

    #[test]
    fn out_of_range_index_is_rejected() {
        assert!(matches!(
            normal_order(&[g(1, 3)], 2),
            Err(Error::IndexOutOfRange { .. })
        ));
        assert!(UeaElement::generator(2, 0, 1).is_err());
    }

    #[test]
    fn rank_mismatch_is_rejected() {
        let a = UeaElement::e(2, 1, 2);
        let b = UeaElement::e(3, 1, 2);
        assert_eq!(
            a.multiply(&b),
            Err(Error::RankMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn unit_law_and_commutators() {
        let x = normal_order(&[g(2, 1), g(1, 2), g(3, 3)], 3).unwrap();
        assert_eq!(&UeaElement::one(3) * &x, x);
        assert!(commutator(&UeaElement::e(2, 1, 1), &UeaElement::e(2, 2, 2))
            .unwrap()
            .is_zero());
        let c = commutator(&UeaElement::e(2, 1, 2), &UeaElement::e(2, 2, 1)).unwrap();
        assert_eq!(c, &UeaElement::e(2, 1, 1) - &UeaElement::e(2, 2, 2));
    }

    #[test]
    fn trace_is_central() {
        let tr = &UeaElement::e(2, 1, 1) + &UeaElement::e(2, 2, 2);
        for i in 1..=2 {
            for j in 1..=2 {
                assert!(tr.commutator(&UeaElement::e(2, i, j)).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn star_on_words() {
        assert_eq!(UeaElement::e(3, 1, 2).star(), UeaElement::e(3, 2, 1));
        let x = normal_order(&[g(1, 2), g(2, 3)], 3).unwrap();
        assert_eq!(x.star(), normal_order(&[g(3, 2), g(2, 1)], 3).unwrap());
    }

    #[test]
    fn eval_left_conventions() {
        let r = 2;
        let p = UPoly::from_scalar(r, &RatPoly::new(vec![q(-1), q(0), q(1)]));
        assert_eq!(p.eval_left(&UeaElement::zero(r)).unwrap(), UeaElement::scalar(r, q(-1)));
        // c·u evaluated at x gives c·x with c on the left
        let c = UeaElement::e(r, 1, 2);
        let x = UeaElement::e(r, 2, 1);
        let p = UPoly::new(r, vec![UeaElement::zero(r), c.clone()]);
        assert_eq!(p.eval_left(&x).unwrap(), &c * &x);
        assert_ne!(p.eval_left(&x).unwrap(), &x * &c);
    }

    #[test]
    fn index_last_order_places_column_n_rightmost() {
        let x = normal_order(&[g(1, 3), g(3, 1)], 3).unwrap();
        let y = x.reordered(GenOrder::IndexLast(3));
        // E13 E31 = E31 E13 + E11 − E33 with E31 leftmost and E13 rightmost
        let m = PbwMonomial(vec![g(3, 1), g(1, 3)]);
        assert_eq!(y.coeff(&m), q(1));
        assert_eq!(y.coeff(&PbwMonomial(vec![g(1, 1)])), q(1));
        assert_eq!(y.coeff(&PbwMonomial(vec![g(3, 3)])), q(-1));
        assert_eq!(y.reordered(GenOrder::Lex), x);
    }

    #[test]
    fn upoly_shift_and_eval() {
        let r = 2;
        let p = UPoly::entry(r, 1, 1, &q(0)).unwrap(); // u + E11
        let p2 = p.multiply(&p).unwrap();
        let shifted = p2.shift(&q(3));
        assert_eq!(shifted.eval_scalar(&q(1)), p2.eval_scalar(&q(4)));
        assert_eq!(p.degree(), Some(1));
    }

    #[test]
    fn text_form() {
        let x = normal_order(&[g(2, 1), g(1, 2)], 2).unwrap().scale(&crate::frac(1, 2));
        assert_eq!(x.to_string(), "-1/2*E[1,1] + 1/2*E[1,2]*E[2,1] + 1/2*E[2,2]");
    }
}
