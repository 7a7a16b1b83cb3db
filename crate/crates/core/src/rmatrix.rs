//! Tensor calculus on `(C^n)^{⊗s}`.
//!
//! Basis vectors `e_{i_1} ⊗ ⋯ ⊗ e_{i_s}` are numbered mixed-radix
//! little-endian: index `Σ_t i_t n^{t-1}` with 0-based letters, factor 1 the
//! least significant digit.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::linalg::permutations_with_sign;
use crate::pbw::{BiPoly, UPoly, UeaElement};
use crate::report::Check;
use crate::{Error, Rational, Result};

/// Entries of tensor operators: rationals, enveloping-algebra elements, or
/// polynomials over them.
pub trait Coeff: Clone + PartialEq + fmt::Display {
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn scale(&self, s: &Rational) -> Self;
    fn is_null(&self) -> bool;
}

impl Coeff for Rational {
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, s: &Rational) -> Self {
        self * s
    }
    fn is_null(&self) -> bool {
        Zero::is_zero(self)
    }
}

impl Coeff for UeaElement {
    fn add(&self, other: &Self) -> Self {
        UeaElement::add(self, other).expect("rank mismatch")
    }
    fn mul(&self, other: &Self) -> Self {
        self.multiply(other).expect("rank mismatch")
    }
    fn scale(&self, s: &Rational) -> Self {
        UeaElement::scale(self, s)
    }
    fn is_null(&self) -> bool {
        UeaElement::is_zero(self)
    }
}

impl Coeff for UPoly {
    fn add(&self, other: &Self) -> Self {
        UPoly::add(self, other).expect("rank mismatch")
    }
    fn mul(&self, other: &Self) -> Self {
        self.multiply(other).expect("rank mismatch")
    }
    fn scale(&self, s: &Rational) -> Self {
        UPoly::scale(self, s)
    }
    fn is_null(&self) -> bool {
        UPoly::is_zero(self)
    }
}

impl Coeff for BiPoly {
    fn add(&self, other: &Self) -> Self {
        BiPoly::add(self, other).expect("rank mismatch")
    }
    fn mul(&self, other: &Self) -> Self {
        self.multiply(other).expect("rank mismatch")
    }
    fn scale(&self, s: &Rational) -> Self {
        BiPoly::scale(self, s)
    }
    fn is_null(&self) -> bool {
        BiPoly::is_zero(self)
    }
}

/// Sparse `n^s × n^s` matrix with entries in `C`.
#[derive(Clone, PartialEq)]
pub struct TensorMatrix<C> {
    n: usize,
    s: usize,
    entries: BTreeMap<(usize, usize), C>,
}

pub type ScalarMatrix = TensorMatrix<Rational>;
pub type OperatorMatrix<C> = TensorMatrix<C>;

impl<C: Coeff> TensorMatrix<C> {
    pub fn zero(n: usize, s: usize) -> Self {
        TensorMatrix {
            n,
            s,
            entries: BTreeMap::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn dim(&self) -> usize {
        self.n.pow(self.s as u32)
    }

    pub fn get(&self, row: usize, col: usize) -> Option<&C> {
        self.entries.get(&(row, col))
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &C)> {
        self.entries.iter()
    }

    pub fn insert(&mut self, row: usize, col: usize, c: C) {
        if c.is_null() {
            self.entries.remove(&(row, col));
        } else {
            self.entries.insert((row, col), c);
        }
    }

    fn accumulate(&mut self, row: usize, col: usize, c: C) {
        if c.is_null() {
            return;
        }
        let v = match self.entries.remove(&(row, col)) {
            Some(old) => old.add(&c),
            None => c,
        };
        self.insert(row, col, v);
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.n, self.s), (other.n, other.s));
        let mut out = self.clone();
        for (&(r, c), v) in &other.entries {
            out.accumulate(r, c, v.clone());
        }
        out
    }

    pub fn scale(&self, x: &Rational) -> Self {
        let mut out = Self::zero(self.n, self.s);
        for (&(r, c), v) in &self.entries {
            out.insert(r, c, v.scale(x));
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!((self.n, self.s), (other.n, other.s));
        let mut by_row: BTreeMap<usize, Vec<(usize, &C)>> = BTreeMap::new();
        for (&(r, c), v) in &other.entries {
            by_row.entry(r).or_default().push((c, v));
        }
        let mut out = Self::zero(self.n, self.s);
        for (&(i, k), a) in &self.entries {
            if let Some(row) = by_row.get(&k) {
                for &(j, b) in row {
                    out.accumulate(i, j, a.mul(b));
                }
            }
        }
        out
    }

    /// First entry where `self` and `other` differ, as `(row, col, left, right)`.
    pub fn first_mismatch(&self, other: &Self) -> Option<String> {
        let keys: std::collections::BTreeSet<_> =
            self.entries.keys().chain(other.entries.keys()).collect();
        for &(r, c) in keys {
            let a = self.entries.get(&(r, c));
            let b = other.entries.get(&(r, c));
            if a != b {
                let show = |x: Option<&C>| x.map_or("0".to_string(), ToString::to_string);
                return Some(format!(
                    "entry ({}, {}): {} != {}",
                    self.label(r),
                    self.label(c),
                    show(a),
                    show(b)
                ));
            }
        }
        None
    }

    /// Tensor letters (1-based) of a basis index.
    pub fn letters(&self, idx: usize) -> Vec<usize> {
        let mut x = idx;
        (0..self.s)
            .map(|_| {
                let d = x % self.n;
                x /= self.n;
                d + 1
            })
            .collect()
    }

    fn label(&self, idx: usize) -> String {
        let l: Vec<String> = self.letters(idx).iter().map(ToString::to_string).collect();
        format!("e[{}]", l.join(","))
    }
}

impl ScalarMatrix {
    pub fn identity(n: usize, s: usize) -> Self {
        let mut m = Self::zero(n, s);
        for i in 0..m.dim() {
            m.insert(i, i, Rational::one());
        }
        m
    }

    /// Operator permuting tensor factors: the factor in position `t` is moved
    /// to position `perm[t]` (0-based).
    pub fn permutation(n: usize, s: usize, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), s);
        let mut m = Self::zero(n, s);
        let dim = m.dim();
        for col in 0..dim {
            let letters = m.letters(col);
            let mut target = vec![0; s];
            for t in 0..s {
                target[perm[t]] = letters[t] - 1;
            }
            let row = target.iter().rev().fold(0, |acc, &d| acc * n + d);
            m.insert(row, col, Rational::one());
        }
        m
    }

    /// Flip `P_{ij}` of factors `i` and `j` (1-based).
    pub fn flip(n: usize, s: usize, i: usize, j: usize) -> Self {
        let mut perm: Vec<usize> = (0..s).collect();
        perm.swap(i - 1, j - 1);
        Self::permutation(n, s, &perm)
    }

    /// `R_{ij}(u) = 1 − P_{ij}/u`.
    pub fn r_factor(n: usize, s: usize, i: usize, j: usize, u: &Rational) -> Result<Self> {
        if Zero::is_zero(u) {
            return Err(Error::Pole(format!("R_{i}{j}(u) at u = 0")));
        }
        Ok(Self::identity(n, s).sub(&Self::flip(n, s, i, j).scale(&u.recip())))
    }

    /// Replaces every entry by its image under `f`.
    pub fn lift<C: Coeff>(&self, f: impl Fn(&Rational) -> C) -> TensorMatrix<C> {
        let mut out = TensorMatrix::zero(self.n, self.s);
        for (&(r, c), v) in &self.entries {
            out.insert(r, c, f(v));
        }
        out
    }
}

/// The flip `P` on `C^n ⊗ C^n` and `R(u) = 1 − P/u`.
pub fn permutation_and_r(u: &Rational, n: usize) -> Result<(ScalarMatrix, ScalarMatrix)> {
    let p = ScalarMatrix::flip(n, 2, 1, 2);
    let r = ScalarMatrix::r_factor(n, 2, 1, 2, u)?;
    Ok((p, r))
}

/// Fused product `(R_{s-1,s})(R_{s-2,s} R_{s-2,s-1}) ⋯ (R_{1s} ⋯ R_{12})` with
/// `R_{ij} = R_{ij}(u_i − u_j)`.
pub fn fused_r(us: &[Rational], n: usize) -> Result<ScalarMatrix> {
    let s = us.len();
    let mut out = ScalarMatrix::identity(n, s);
    for i in (1..s).rev() {
        for j in (i + 1..=s).rev() {
            let d = &us[i - 1] - &us[j - 1];
            if Zero::is_zero(&d) {
                return Err(Error::Pole(format!("u_{i} = u_{j} in fused R-matrix")));
            }
            out = out.mul(&ScalarMatrix::r_factor(n, s, i, j, &d)?);
        }
    }
    Ok(out)
}

/// `A_s = Σ_q sgn(q) Q` on `(C^n)^{⊗s}`.
pub fn antisymmetrizer(s: usize, n: usize) -> ScalarMatrix {
    antisymmetrizer_on(n, s, &(1..=s).collect::<Vec<_>>())
}

/// Antisymmetrizer over the given subset of factors (1-based) of
/// `(C^n)^{⊗s}`.
pub fn antisymmetrizer_on(n: usize, s: usize, factors: &[usize]) -> ScalarMatrix {
    let mut out = ScalarMatrix::zero(n, s);
    for (p, sign) in permutations_with_sign(factors.len()) {
        let mut perm: Vec<usize> = (0..s).collect();
        for (a, &b) in p.iter().enumerate() {
            perm[factors[a] - 1] = factors[b] - 1;
        }
        out = out.add(&ScalarMatrix::permutation(n, s, &perm).scale(&crate::q(sign)));
    }
    out
}

/// `R̃(u,v) = Σ_p (−1)^p p! / ((u−v−k+1)⋯(u−v−k+p)) Σ P_{i_1,k+j_1} ⋯ P_{i_p,k+j_p}`
/// on `(C^n)^{⊗(k+l)}`.
pub fn r_tilde(n: usize, k: usize, l: usize, u: &Rational, v: &Rational) -> Result<ScalarMatrix> {
    let s = k + l;
    let mut out = ScalarMatrix::zero(n, s);
    let d = u - v;
    for p in 0..=k.min(l) {
        let mut denom = Rational::one();
        for t in 1..=p {
            denom *= &d - crate::q(k as i64) + crate::q(t as i64);
        }
        if Zero::is_zero(&denom) {
            return Err(Error::Pole("u − v − k + t = 0 in R̃".into()));
        }
        let mut fact = Rational::one();
        for t in 1..=p {
            fact *= crate::q(t as i64);
        }
        let sign = if p % 2 == 0 { Rational::one() } else { -Rational::one() };
        let coeff = sign * fact / denom;
        for is in subsets(k, p) {
            for js in subsets(l, p) {
                let mut term = ScalarMatrix::identity(n, s);
                for (a, b) in is.iter().zip(&js) {
                    term = term.mul(&ScalarMatrix::flip(n, s, *a, k + b));
                }
                out = out.add(&term.scale(&coeff));
            }
        }
    }
    Ok(out)
}

/// `R(u, …, u−k+1, v, …, v−l+1) = R̃(u,v) A_k A'_l` on `(C^n)^{⊗(k+l)}`.
pub fn check_r_tilde(n: usize, k: usize, l: usize, u: &Rational, v: &Rational) -> Result<Check> {
    let name = format!("fused-block n={n} k={k} l={l} (u,v)=({u},{v})");
    let mut us: Vec<Rational> = (0..k).map(|i| u - crate::q(i as i64)).collect();
    us.extend((0..l).map(|j| v - crate::q(j as i64)));
    let lhs = match fused_r(&us, n) {
        Ok(m) => m,
        Err(Error::Pole(w)) => return Ok(Check::skipped(name, "fused-block", w)),
        Err(e) => return Err(e),
    };
    let rt = match r_tilde(n, k, l, u, v) {
        Ok(m) => m,
        Err(Error::Pole(w)) => return Ok(Check::skipped(name, "fused-block", w)),
        Err(e) => return Err(e),
    };
    let first: Vec<usize> = (1..=k).collect();
    let second: Vec<usize> = (k + 1..=k + l).collect();
    let rhs = rt
        .mul(&antisymmetrizer_on(n, k + l, &first))
        .mul(&antisymmetrizer_on(n, k + l, &second));
    Ok(Check::from_witness(name, "fused-block", lhs.first_mismatch(&rhs)))
}

/// Increasing `p`-subsets of `{1..k}`.
pub(crate) fn subsets(k: usize, p: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, k: usize, p: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == p {
            out.push(cur.clone());
            return;
        }
        for x in start..=k {
            cur.push(x);
            rec(x + 1, k, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, k, p, &mut Vec::new(), &mut out);
    out
}

/// `T_k` on `(C^n)^{⊗s}` with entry `(a, b)` given by `entry(a, b)` (1-based).
pub fn t_operator<C: Coeff>(n: usize, s: usize, k: usize, entry: impl Fn(usize, usize) -> C) -> TensorMatrix<C> {
    let mut m = TensorMatrix::zero(n, s);
    let dim = m.dim();
    let stride = n.pow((k - 1) as u32);
    for col in 0..dim {
        let b = (col / stride) % n;
        let base = col - b * stride;
        for a in 0..n {
            m.insert(base + a * stride, col, entry(a + 1, b + 1));
        }
    }
    m
}

/// `T_k(u + shift)` with `T(u) = u + E` and `UPoly` entries.
fn t_upoly(n: usize, s: usize, k: usize, shift: i64) -> TensorMatrix<UPoly> {
    t_operator(n, s, k, |a, b| {
        UPoly::entry(n, a, b, &crate::q(shift)).expect("indices in range")
    })
}

/// `T_k(x)` with `x` a rational sample.
fn t_sample(n: usize, s: usize, k: usize, x: &Rational) -> TensorMatrix<UeaElement> {
    t_operator(n, s, k, |a, b| {
        UPoly::entry(n, a, b, &Rational::zero())
            .expect("indices in range")
            .eval_scalar(x)
    })
}

/// Reproducible parameter tuples for [`check_rtt`]: two triples and two
/// tuples of length `s`, entries pairwise distinct.
pub fn sample_parameters(s: usize, seed: u64) -> Vec<Vec<Rational>> {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut tuple = |len: usize| {
        let mut out: Vec<Rational> = Vec::new();
        while out.len() < len {
            let x = Rational::new(rng.gen_range(-12i64..=12).into(), rng.gen_range(1i64..=4).into());
            if !out.contains(&x) {
                out.push(x);
            }
        }
        out
    };
    let mut out = vec![tuple(3), tuple(3)];
    if s != 3 {
        out.push(tuple(s));
        out.push(tuple(s));
    }
    out
}

/// Exact checks of the Yang–Baxter equation, the RTT relation for
/// `T(u) = u + E`, the fused relation at sample tuples and the
/// antisymmetrized relation as a polynomial identity in `u`.
///
/// `samples` are parameter tuples; tuples of length 3 are used for the
/// Yang–Baxter equation, every tuple `(u, v, ..)` supplies an RTT sample and
/// tuples of length `s` a fused-relation sample.
pub fn check_rtt(n: usize, s: usize, samples: &[Vec<Rational>]) -> Result<Vec<Check>> {
    if n == 0 || s == 0 {
        return Err(Error::InvalidParameters("n and s must be positive".into()));
    }
    let mut checks = Vec::new();

    for tuple in samples.iter().filter(|t| t.len() >= 3) {
        let (a, b, c) = (&tuple[0], &tuple[1], &tuple[2]);
        let r = |i, j, x: &Rational, y: &Rational| ScalarMatrix::r_factor(n, 3, i, j, &(x - y));
        let lhs = r(1, 2, a, b)?.mul(&r(1, 3, a, c)?).mul(&r(2, 3, b, c)?);
        let rhs = r(2, 3, b, c)?.mul(&r(1, 3, a, c)?).mul(&r(1, 2, a, b)?);
        checks.push(Check::from_witness(
            format!("yang-baxter n={n} u=({a},{b},{c})"),
            "yang-baxter",
            lhs.first_mismatch(&rhs),
        ));
    }

    // RTT with the denominator u − v cleared, symbolic in (u, v).
    {
        let uv = BiPoly::scalar(n, [((1, 0), Rational::one()), ((0, 1), -Rational::one())]);
        let p = ScalarMatrix::flip(n, 2, 1, 2);
        let r = ScalarMatrix::identity(n, 2)
            .lift(|c| uv.scale(c))
            .sub(&p.lift(|c| BiPoly::scalar(n, [((0, 0), c.clone())])));
        let t1 = t_operator(n, 2, 1, |a, b| {
            BiPoly::in_u(&UPoly::entry(n, a, b, &Rational::zero()).expect("in range"))
        });
        let t2 = t_operator(n, 2, 2, |a, b| {
            BiPoly::in_v(&UPoly::entry(n, a, b, &Rational::zero()).expect("in range"))
        });
        let lhs = r.mul(&t1).mul(&t2);
        let rhs = t2.mul(&t1).mul(&r);
        checks.push(Check::from_witness(
            format!("rtt-symbolic n={n}"),
            "rtt",
            lhs.first_mismatch(&rhs),
        ));
    }

    for tuple in samples.iter().filter(|t| t.len() >= 2) {
        let (u, v) = (&tuple[0], &tuple[1]);
        let r = ScalarMatrix::r_factor(n, 2, 1, 2, &(u - v))?.lift(|c| UeaElement::scalar(n, c.clone()));
        let t1 = t_sample(n, 2, 1, u);
        let t2 = t_sample(n, 2, 2, v);
        let lhs = r.mul(&t1).mul(&t2);
        let rhs = t2.mul(&t1).mul(&r);
        checks.push(Check::from_witness(
            format!("rtt n={n} (u,v)=({u},{v})"),
            "rtt",
            lhs.first_mismatch(&rhs),
        ));
    }

    for tuple in samples.iter().filter(|t| t.len() == s && s >= 2) {
        let r = fused_r(tuple, n)?.lift(|c| UeaElement::scalar(n, c.clone()));
        let mut lhs = r.clone();
        for (k, x) in tuple.iter().enumerate() {
            lhs = lhs.mul(&t_sample(n, s, k + 1, x));
        }
        let mut rhs: Option<TensorMatrix<UeaElement>> = None;
        for (k, x) in tuple.iter().enumerate().rev() {
            let t = t_sample(n, s, k + 1, x);
            rhs = Some(match rhs {
                None => t,
                Some(acc) => acc.mul(&t),
            });
        }
        let rhs = rhs.expect("s ≥ 2").mul(&r);
        let label: Vec<String> = tuple.iter().map(ToString::to_string).collect();
        checks.push(Check::from_witness(
            format!("fused-rtt n={n} s={s} u=({})", label.join(",")),
            "fused-rtt",
            lhs.first_mismatch(&rhs),
        ));
    }

    for k in 2..=s.min(4) {
        let us: Vec<Rational> = (0..k).map(|i| crate::q(-(i as i64))).collect();
        checks.push(Check::from_witness(
            format!("fused-unit-step n={n} s={k}"),
            "fused-antisymmetrizer",
            fused_r(&us, n)?.first_mismatch(&antisymmetrizer(k, n)),
        ));
    }

    {
        let r12 = ScalarMatrix::r_factor(n, 4, 1, 2, &crate::q(3))?;
        let r34 = ScalarMatrix::r_factor(n, 4, 3, 4, &crate::frac(-1, 2))?;
        checks.push(Check::from_witness(
            format!("disjoint-factors-commute n={n}"),
            "yang-baxter",
            r12.mul(&r34).first_mismatch(&r34.mul(&r12)),
        ));
    }
    for tuple in samples.iter().filter(|t| t.len() >= 2) {
        for (k, l) in [(1, 2), (2, 1), (2, 2)] {
            checks.push(check_r_tilde(2, k, l, &tuple[0], &tuple[1])?);
        }
    }

    checks.push(Check::from_witness(
        format!("antisymmetrized-rtt n={n} s={s}"),
        "antisymmetrized-rtt",
        check_fused_antisymmetrized(n, s),
    ));
    Ok(checks)
}

/// `A_s T_1(u) ⋯ T_s(u−s+1) = T_s(u−s+1) ⋯ T_1(u) A_s` as polynomial
/// matrices in `u`; returns the first mismatch.
pub fn check_fused_antisymmetrized(n: usize, s: usize) -> Option<String> {
    let a = antisymmetrizer(s, n).lift(|c| UPoly::from_scalar(n, &crate::linalg::RatPoly::constant(c.clone())));
    let mut lhs = a.clone();
    for k in 1..=s {
        lhs = lhs.mul(&t_upoly(n, s, k, -((k - 1) as i64)));
    }
    let mut rhs = t_upoly(n, s, s, -((s - 1) as i64));
    for k in (1..s).rev() {
        rhs = rhs.mul(&t_upoly(n, s, k, -((k - 1) as i64)));
    }
    let rhs = rhs.mul(&a);
    lhs.first_mismatch(&rhs)
}

impl<C: Coeff> fmt::Debug for TensorMatrix<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "TensorMatrix(n={}, s={})", self.n, self.s)?;
        for (&(r, c), v) in &self.entries {
            writeln!(f, "  {} {} : {}", self.label(r), self.label(c), v)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{frac, q};

    #[test]
    fn flip_is_involution() {
        for n in 2..=3 {
            let p = ScalarMatrix::flip(n, 2, 1, 2);
            assert_eq!(p.mul(&p), ScalarMatrix::identity(n, 2));
        }
    }

    #[test]
    fn unitarity_at_two() {
        let (_, r) = permutation_and_r(&q(2), 2).unwrap();
        let (_, r_neg) = permutation_and_r(&q(-2), 2).unwrap();
        let expected = ScalarMatrix::identity(2, 2).scale(&frac(3, 4));
        assert_eq!(r.mul(&r_neg), expected);
    }

    #[test]
    fn r_at_one_is_antisymmetrizer() {
        let (_, r) = permutation_and_r(&q(1), 3).unwrap();
        assert_eq!(r, antisymmetrizer(2, 3));
    }

    #[test]
    fn pole_is_rejected() {
        assert!(matches!(permutation_and_r(&q(0), 2), Err(Error::Pole(_))));
        assert!(matches!(fused_r(&[q(1), q(1)], 2), Err(Error::Pole(_))));
    }

    #[test]
    fn fused_of_two_is_single_factor() {
        let f = fused_r(&[q(5), q(2)], 2).unwrap();
        assert_eq!(f, ScalarMatrix::r_factor(2, 2, 1, 2, &q(3)).unwrap());
    }

    #[test]
    fn antisymmetrizer_small_cases() {
        assert_eq!(antisymmetrizer(1, 3), ScalarMatrix::identity(3, 1));
        let a2 = antisymmetrizer(2, 2);
        assert_eq!(a2, ScalarMatrix::identity(2, 2).sub(&ScalarMatrix::flip(2, 2, 1, 2)));
    }

    #[test]
    fn t_operator_acts_on_chosen_factor() {
        // T_2 on (C^2)^{⊗2}: entry (e_a ⊗ e_c, e_b ⊗ e_c) for factor 1 fixed
        let m = t_operator(2, 2, 2, |a, b| q((10 * a + b) as i64));
        // row e[1,2] (index 0 + 1*2 = 2), col e[1,1] (index 0)
        assert_eq!(m.get(2, 0), Some(&q(21)));
        assert_eq!(m.get(1, 0), None);
    }

    #[test]
    fn subsets_are_increasing() {
        assert_eq!(subsets(3, 2), vec![vec![1, 2], vec![1, 3], vec![2, 3]]);
        assert_eq!(subsets(2, 0), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn rtt_suite_passes() {
        let samples = vec![vec![q(1), q(3), q(7)], vec![q(2), q(5), frac(1, 2)]];
        for n in 2..=3 {
            let checks = check_rtt(n, 3, &samples).unwrap();
            assert!(checks.len() > 8);
            for c in &checks {
                assert_eq!(c.status, crate::report::Status::Pass, "{c:?}");
            }
        }
    }

    #[test]
    fn perturbed_r_breaks_yang_baxter() {
        let r = |i, j, x: i64| {
            ScalarMatrix::identity(2, 3).sub(&ScalarMatrix::flip(2, 3, i, j).scale(&q(x).recip()))
        };
        let bad = |i, j, x: i64| {
            ScalarMatrix::identity(2, 3).sub(&ScalarMatrix::flip(2, 3, i, j).scale(&q(2 * x).recip()))
        };
        let good = r(1, 2, 2).mul(&r(1, 3, 5)).mul(&r(2, 3, 3));
        assert_eq!(good, r(2, 3, 3).mul(&r(1, 3, 5)).mul(&r(1, 2, 2)));
        let lhs = bad(1, 2, 2).mul(&r(1, 3, 5)).mul(&r(2, 3, 3));
        assert!(lhs.first_mismatch(&r(2, 3, 3).mul(&r(1, 3, 5)).mul(&bad(1, 2, 2))).is_some());
    }

    #[test]
    fn fused_block_at_pole_is_skipped() {
        let c = check_r_tilde(2, 2, 2, &q(1), &q(0)).unwrap();
        assert_eq!(c.status, crate::report::Status::SkippedSingular);
    }
}
