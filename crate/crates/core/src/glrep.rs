//! Irreducible `gl(N)`-modules `L(λ)` realized inside `(C^N)^{⊗|λ|}`.
//!
//! The highest vector is the tensor product over the columns of `λ` of
//! `e_1 ∧ ⋯ ∧ e_h`; the module is the span of everything reachable from it
//! by the lowering generators `E[i+1,i]`.  Each weight space keeps a basis in
//! reduced row echelon form over the ambient monomial tensors, so module
//! coordinates of an ambient vector are read off at the pivot positions.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::linalg::{permutations_with_sign, RatMatrix, RatPoly};
use crate::pbw::{UPoly, UeaElement};
use crate::{Error, Rational, Result};

/// Default bound on `N^{|λ|}`.
pub const DEFAULT_SIZE_BOUND: u128 = 5_000_000;

/// Environment variable overriding [`DEFAULT_SIZE_BOUND`].
pub const SIZE_BOUND_ENV: &str = "YANGIAN_MAX_SIZE";

/// Weakly decreasing list of nonnegative integers, trailing zeros dropped.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition(format!("{parts:?}")));
        }
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    /// Parses `"2,1,1"`, `"(2,1,1)"` or `"2 1 1"`; the empty string is `∅`.
    pub fn parse(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts = body
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::NotAPartition(s.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `λ_i` (1-based), zero beyond the length.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return usize::MAX;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Column heights `λ'_1 ≥ λ'_2 ≥ ⋯`.
    pub fn conjugate(&self) -> Vec<usize> {
        let w = self.0.first().copied().unwrap_or(0);
        (1..=w).map(|c| self.0.iter().filter(|&&p| p >= c).count()).collect()
    }

    /// `λ_1, …, λ_n` padded with zeros.
    pub fn padded(&self, n: usize) -> Vec<usize> {
        (1..=n).map(|i| self.part(i)).collect()
    }

    pub fn contains(&self, mu: &Partition) -> bool {
        mu.len() <= self.len() && (1..=mu.len()).all(|i| mu.part(i) <= self.part(i))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", p.join(","))
    }
}

/// `μ ⊆ λ` and every column of `λ/μ` has at most `n` cells.
pub fn branching_admissible(lambda: &Partition, mu: &Partition, n: usize) -> bool {
    lambda.contains(mu) && (1..=lambda.len()).all(|i| lambda.part(i + n) <= mu.part(i))
}

/// `dim L(λ)` for `gl(N)` by the Weyl dimension formula.
pub fn weyl_dimension(lambda: &Partition, n: usize) -> u128 {
    let l = lambda.padded(n);
    let mut num = Rational::one();
    for i in 0..n {
        for j in i + 1..n {
            num *= Rational::new(
                (l[i] as i64 - l[j] as i64 + (j - i) as i64).into(),
                ((j - i) as i64).into(),
            );
        }
    }
    num.to_integer().try_into().expect("dimension fits")
}

/// The size bound from the environment, or the default.
pub fn size_bound_from_env() -> u128 {
    std::env::var(SIZE_BOUND_ENV)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_SIZE_BOUND)
}

type Ambient = BTreeMap<u64, Rational>;

fn axpy(target: &mut Ambient, c: &Rational, x: &Ambient) {
    for (k, v) in x {
        let e = target.entry(*k).or_insert_with(Rational::zero);
        *e += c * v;
        if e.is_zero() {
            target.remove(k);
        }
    }
}

fn dot(a: &Ambient, b: &Ambient) -> Rational {
    let (small, large) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    small
        .iter()
        .filter_map(|(k, v)| large.get(k).map(|w| v * w))
        .fold(Rational::zero(), |acc, x| acc + x)
}

/// Incremental reduced row echelon basis of a subspace of the ambient space.
#[derive(Clone, Default)]
struct EchelonBasis {
    rows: Vec<(u64, Ambient)>,
}

impl EchelonBasis {
    fn reduce(&self, v: &mut Ambient) {
        for (p, row) in &self.rows {
            if let Some(c) = v.get(p).cloned() {
                axpy(v, &-c, row);
            }
        }
    }

    fn insert(&mut self, mut v: Ambient) -> bool {
        self.reduce(&mut v);
        let Some((&p, lead)) = v.iter().next() else {
            return false;
        };
        let inv = lead.recip();
        for x in v.values_mut() {
            *x *= &inv;
        }
        for (_, row) in &mut self.rows {
            if let Some(c) = row.get(&p).cloned() {
                axpy(row, &-c, &v);
            }
        }
        self.rows.push((p, v));
        true
    }
}

#[derive(Clone, Debug)]
struct WeightSpace {
    /// Global basis indices.
    indices: Vec<usize>,
    /// Ambient Gram matrix of the basis vectors.
    gram: RatMatrix,
}

/// Coordinates of a vector of a [`GlModule`] in its basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModVector(pub Vec<Rational>);

impl ModVector {
    pub fn zero(dim: usize) -> Self {
        ModVector(vec![Rational::zero(); dim])
    }

    pub fn basis(dim: usize, k: usize) -> Self {
        let mut v = Self::zero(dim);
        v.0[k] = Rational::one();
        v
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        ModVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        ModVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        ModVector(self.0.iter().map(|a| a * c).collect())
    }

    /// `c` with `self = c · other`, if such a scalar exists.
    pub fn ratio_to(&self, other: &Self) -> Option<Rational> {
        let k = other.0.iter().position(|x| !x.is_zero())?;
        let c = &self.0[k] / &other.0[k];
        (other.scale(&c) == *self).then_some(c)
    }
}

/// A finite-dimensional irreducible `gl(N)`-module with exact action.
#[derive(Clone)]
pub struct GlModule {
    rank: usize,
    lambda: Partition,
    basis: Vec<Ambient>,
    weights: Vec<Vec<usize>>,
    spaces: BTreeMap<Vec<usize>, WeightSpace>,
    /// `action[(i-1)*N + (j-1)][c]`: sparse column `c` of `E[i,j]`.
    action: Vec<Vec<Vec<(usize, Rational)>>>,
    xi_norm: Rational,
}

/// Builds `L(λ)` for `gl(N)` with the size bound taken from the environment.
pub fn build_module(lambda: &Partition, n: usize) -> Result<GlModule> {
    build_module_with_bound(lambda, n, size_bound_from_env())
}

pub fn build_module_with_bound(lambda: &Partition, n: usize, bound: u128) -> Result<GlModule> {
    if lambda.len() > n {
        return Err(Error::InvalidParameters(format!(
            "{lambda} has more than {n} parts"
        )));
    }
    if n == 0 || n > 15 {
        return Err(Error::InvalidParameters(format!("rank {n} out of range")));
    }
    let needed = (n as u128).checked_pow(lambda.size() as u32).unwrap_or(u128::MAX);
    if needed > bound {
        return Err(Error::SizeGuard { needed, bound });
    }
    GlModule::construct(lambda.clone(), n)
}

impl GlModule {
    fn construct(lambda: Partition, n: usize) -> Result<Self> {
        let radix: Vec<u64> = (0..lambda.size()).map(|p| (n as u64).pow(p as u32)).collect();

        // Highest vector: column wedges placed in consecutive tensor slots.
        let mut xi: Ambient = BTreeMap::from([(0u64, Rational::one())]);
        let mut slot = 0;
        for h in lambda.conjugate() {
            let mut next = Ambient::new();
            for (perm, sign) in permutations_with_sign(h) {
                let offset: u64 = perm
                    .iter()
                    .enumerate()
                    .map(|(t, &letter)| letter as u64 * radix[slot + t])
                    .sum();
                for (k, v) in &xi {
                    next.insert(k + offset, v * Rational::from_integer(sign.into()));
                }
            }
            xi = next;
            slot += h;
        }

        let apply = |i: usize, j: usize, v: &Ambient| -> Ambient {
            let mut out = Ambient::new();
            for (&w, c) in v {
                for &r in &radix {
                    if (w / r) % n as u64 == (j - 1) as u64 {
                        let target = w + (i - 1) as u64 * r - (j - 1) as u64 * r;
                        let e = out.entry(target).or_insert_with(Rational::zero);
                        *e += c;
                        if e.is_zero() {
                            out.remove(&target);
                        }
                    }
                }
            }
            out
        };

        let top = lambda.padded(n);
        let mut basis: Vec<Ambient> = Vec::new();
        let mut weights: Vec<Vec<usize>> = Vec::new();
        let mut spaces: BTreeMap<Vec<usize>, (Vec<usize>, Vec<u64>)> = BTreeMap::new();
        let mut level: BTreeMap<Vec<usize>, EchelonBasis> = BTreeMap::new();
        let mut start = EchelonBasis::default();
        start.insert(xi);
        level.insert(top, start);
        while !level.is_empty() {
            let mut next: BTreeMap<Vec<usize>, EchelonBasis> = BTreeMap::new();
            for (w, ech) in level {
                let mut idx = Vec::new();
                let mut piv = Vec::new();
                for (p, v) in ech.rows {
                    for i in 1..n {
                        if w[i - 1] == 0 {
                            continue;
                        }
                        let lowered = apply(i + 1, i, &v);
                        if lowered.is_empty() {
                            continue;
                        }
                        let mut w2 = w.clone();
                        w2[i - 1] -= 1;
                        w2[i] += 1;
                        next.entry(w2).or_default().insert(lowered);
                    }
                    idx.push(basis.len());
                    piv.push(p);
                    basis.push(v);
                    weights.push(w.clone());
                }
                spaces.insert(w, (idx, piv));
            }
            level = next;
        }

        let dim = basis.len();
        let mut action = vec![vec![Vec::new(); dim]; n * n];
        for i in 1..=n {
            for j in 1..=n {
                for (c, v) in basis.iter().enumerate() {
                    let w = &weights[c];
                    if i != j && w[j - 1] == 0 {
                        continue;
                    }
                    let image = apply(i, j, v);
                    if image.is_empty() {
                        continue;
                    }
                    let mut w2 = w.clone();
                    w2[j - 1] -= 1;
                    w2[i - 1] += 1;
                    let (idx, piv) = &spaces[&w2];
                    let col: Vec<(usize, Rational)> = idx
                        .iter()
                        .zip(piv)
                        .filter_map(|(&r, p)| image.get(p).map(|x| (r, x.clone())))
                        .collect();
                    action[(i - 1) * n + (j - 1)][c] = col;
                }
            }
        }

        let spaces = spaces
            .into_iter()
            .map(|(w, (indices, _))| {
                let d = indices.len();
                let mut gram = RatMatrix::zeros(d, d);
                for a in 0..d {
                    for b in a..d {
                        let g = dot(&basis[indices[a]], &basis[indices[b]]);
                        gram[(a, b)] = g.clone();
                        gram[(b, a)] = g;
                    }
                }
                (w, WeightSpace { indices, gram })
            })
            .collect();
        let xi_norm = dot(&basis[0], &basis[0]);
        Ok(GlModule {
            rank: n,
            lambda,
            basis,
            weights,
            spaces,
            action,
            xi_norm,
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// The highest vector `ξ`.
    pub fn highest_vector(&self) -> ModVector {
        ModVector::basis(self.dim(), 0)
    }

    /// Weight of basis vector `k`.
    pub fn weight(&self, k: usize) -> &[usize] {
        &self.weights[k]
    }

    /// All weights with their multiplicities.
    pub fn weight_multiplicities(&self) -> BTreeMap<Vec<usize>, usize> {
        self.spaces
            .iter()
            .map(|(w, s)| (w.clone(), s.indices.len()))
            .collect()
    }

    /// Basis indices of the weight space of `weight`.
    pub fn weight_space(&self, weight: &[usize]) -> &[usize] {
        self.spaces
            .get(weight)
            .map_or(&[], |s| s.indices.as_slice())
    }

    /// Weight of `v` if it is a nonzero weight vector.
    pub fn weight_of(&self, v: &ModVector) -> Option<Vec<usize>> {
        let mut found: Option<&Vec<usize>> = None;
        for (k, x) in v.0.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            match found {
                None => found = Some(&self.weights[k]),
                Some(w) if *w == self.weights[k] => {}
                Some(_) => return None,
            }
        }
        found.cloned()
    }

    /// `E[i,j] v`.
    pub fn apply_generator(&self, i: usize, j: usize, v: &ModVector) -> ModVector {
        let n = self.rank;
        assert!(i >= 1 && j >= 1 && i <= n && j <= n, "generator out of range");
        let cols = &self.action[(i - 1) * n + (j - 1)];
        let mut out = ModVector::zero(self.dim());
        for (c, x) in v.0.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (r, a) in &cols[c] {
                out.0[*r] += x * a;
            }
        }
        out
    }

    /// Action of an element of `U(gl(N))`; monomials act right to left.
    pub fn act(&self, x: &UeaElement, v: &ModVector) -> Result<ModVector> {
        if x.rank() != self.rank {
            return Err(Error::RankMismatch {
                left: x.rank(),
                right: self.rank,
            });
        }
        let mut out = ModVector::zero(self.dim());
        for (mono, c) in x.terms() {
            let mut w = v.clone();
            for g in mono.0.iter().rev() {
                w = self.apply_generator(g.row as usize, g.col as usize, &w);
                if w.is_zero() {
                    break;
                }
            }
            out = out.add(&w.scale(c));
        }
        Ok(out)
    }

    /// `p(u) v` as the list of coefficient vectors of `u^0, u^1, …`.
    pub fn act_poly(&self, p: &UPoly, v: &ModVector) -> Result<Vec<ModVector>> {
        p.coeffs().iter().map(|c| self.act(c, v)).collect()
    }

    /// If `p(u) v = f(u) v` for a scalar polynomial `f`, returns `f`.
    pub fn poly_eigenvalue(&self, p: &UPoly, v: &ModVector) -> Result<Option<RatPoly>> {
        let mut coeffs = Vec::new();
        for w in self.act_poly(p, v)? {
            if w.is_zero() {
                coeffs.push(Rational::zero());
                continue;
            }
            match w.ratio_to(v) {
                Some(c) => coeffs.push(c),
                None => return Ok(None),
            }
        }
        Ok(Some(RatPoly::new(coeffs)))
    }

    /// Contravariant form normalized by `⟨ξ, ξ⟩ = 1`.
    pub fn contravariant_form(&self, u: &ModVector, v: &ModVector) -> Rational {
        let mut acc = Rational::zero();
        for s in self.spaces.values() {
            for (a, &ia) in s.indices.iter().enumerate() {
                if u.0[ia].is_zero() {
                    continue;
                }
                for (b, &ib) in s.indices.iter().enumerate() {
                    if v.0[ib].is_zero() {
                        continue;
                    }
                    acc += &u.0[ia] * &v.0[ib] * &s.gram[(a, b)];
                }
            }
        }
        acc / &self.xi_norm
    }

    /// Gram matrix of the contravariant form on `vectors`.
    pub fn gram(&self, vectors: &[ModVector]) -> RatMatrix {
        let k = vectors.len();
        let mut g = RatMatrix::zeros(k, k);
        for a in 0..k {
            for b in 0..k {
                g[(a, b)] = self.contravariant_form(&vectors[a], &vectors[b]);
            }
        }
        g
    }

    /// Vectors annihilated by `E[i,j]`, `1 ≤ i < j ≤ m`, with `E[i,i]`
    /// eigenvalue `μ_i` for `i ≤ m`: a basis of `L(λ)^+_μ`.
    pub fn glm_highest_space(&self, mu: &Partition, m: usize) -> Vec<ModVector> {
        if mu.len() > m {
            return Vec::new();
        }
        let prefix = mu.padded(m);
        self.highest_vectors(m, Some(&prefix))
    }

    /// Basis of all `gl(m)`-highest vectors, each a weight vector.
    pub fn glm_highest_basis(&self, m: usize) -> Vec<ModVector> {
        self.highest_vectors(m, None)
    }

    fn highest_vectors(&self, m: usize, prefix: Option<&[usize]>) -> Vec<ModVector> {
        let mut out = Vec::new();
        for (w, s) in &self.spaces {
            if prefix.is_some_and(|p| w[..m] != *p) {
                continue;
            }
            let d = s.indices.len();
            let mut rows: Vec<Vec<Rational>> = Vec::new();
            for i in 1..=m {
                for j in i + 1..=m {
                    let images: Vec<ModVector> = s
                        .indices
                        .iter()
                        .map(|&k| self.apply_generator(i, j, &ModVector::basis(self.dim(), k)))
                        .collect();
                    let mut w2 = w.clone();
                    if w2[j - 1] == 0 {
                        continue;
                    }
                    w2[j - 1] -= 1;
                    w2[i - 1] += 1;
                    for &r in self.weight_space(&w2) {
                        rows.push(images.iter().map(|x| x.0[r].clone()).collect());
                    }
                }
            }
            let kernel = if rows.is_empty() {
                (0..d)
                    .map(|a| (0..d).map(|b| if a == b { Rational::one() } else { Rational::zero() }).collect())
                    .collect()
            } else {
                RatMatrix::from_rows(rows).nullspace()
            };
            for k in kernel {
                let mut v = ModVector::zero(self.dim());
                for (a, &ia) in s.indices.iter().enumerate() {
                    v.0[ia] = k[a].clone();
                }
                out.push(v);
            }
        }
        out
    }
}

impl fmt::Debug for GlModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GlModule(gl({}), λ = {}, dim {})", self.rank, self.lambda, self.dim())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::q;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn partition_parsing() {
        assert_eq!(Partition::parse("(10,8,5,4,2)").unwrap().size(), 29);
        assert_eq!(Partition::parse("2 1 0").unwrap(), p(&[2, 1]));
        assert_eq!(Partition::parse("").unwrap(), Partition::default());
        assert!(Partition::parse("1,2").is_err());
        assert_eq!(p(&[3, 1]).conjugate(), vec![2, 1, 1]);
    }

    #[test]
    fn branching_examples() {
        assert!(branching_admissible(&p(&[10, 8, 5, 4, 2]), &p(&[6, 3]), 3));
        assert!(branching_admissible(&p(&[2, 1]), &p(&[2, 1]), 1));
        assert!(!branching_admissible(&p(&[2, 2]), &p(&[]), 1));
        assert!(!branching_admissible(&p(&[2, 1]), &p(&[3]), 2));
    }

    #[test]
    fn vector_representation() {
        for n in 1..=4 {
            let m = build_module(&p(&[1]), n).unwrap();
            assert_eq!(m.dim(), n);
        }
    }

    #[test]
    fn dimensions_match_weyl() {
        for (lam, n) in [(vec![2, 1], 3), (vec![2, 1, 1], 4), (vec![2, 2], 3), (vec![3], 2)] {
            let l = p(&lam);
            assert_eq!(build_module(&l, n).unwrap().dim() as u128, weyl_dimension(&l, n), "{l}");
        }
        assert_eq!(weyl_dimension(&p(&[2, 1]), 3), 8);
    }

    #[test]
    fn highest_vector_conditions() {
        let m = build_module(&p(&[2, 1]), 3).unwrap();
        let xi = m.highest_vector();
        for i in 1..=3 {
            for j in 1..=3 {
                let v = m.apply_generator(i, j, &xi);
                if i < j {
                    assert!(v.is_zero());
                } else if i == j {
                    assert_eq!(v, xi.scale(&q(m.lambda().part(i) as i64)));
                }
            }
        }
    }

    #[test]
    fn form_is_normalized_and_contravariant() {
        let m = build_module(&p(&[2, 1]), 3).unwrap();
        let xi = m.highest_vector();
        assert_eq!(m.contravariant_form(&xi, &xi), q(1));
        let low = m.apply_generator(2, 1, &xi);
        let back = m.apply_generator(1, 2, &low);
        assert_eq!(m.contravariant_form(&low, &low), m.contravariant_form(&xi, &back));
    }

    #[test]
    fn size_guard() {
        let err = build_module_with_bound(&p(&[10, 8, 5, 4, 2]), 5, DEFAULT_SIZE_BOUND).unwrap_err();
        assert!(matches!(err, Error::SizeGuard { .. }));
        assert!(build_module(&p(&[1, 1, 1]), 2).is_err());
    }

    #[test]
    fn highest_space_contains_xi() {
        let m = build_module(&p(&[2, 1]), 3).unwrap();
        let space = m.glm_highest_space(&p(&[2, 1]), 2);
        assert_eq!(space.len(), 1);
        assert!(space[0].ratio_to(&m.highest_vector()).is_some());
    }
}
