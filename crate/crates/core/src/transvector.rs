//! Raising and lowering operators `s_ia`, `s_ai` for the pair
//! `gl(m) ⊂ gl(m+n)`, the extremal projection, and their relations on
//! `gl(m)`-highest vectors.
//!
//! Rational expressions in `h_i = E[i,i] - i + 1` standing to the right of
//! an operator are evaluated on the weight of the vector they act on.

use std::collections::HashMap;

use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::glrep::{build_module_with_bound, GlModule, ModVector, Partition};
use crate::minor::minor_polynomial;
use crate::pbw::{GenIdx, UeaElement};
use crate::report::Check;
use crate::{q, Error, Rational, Result};

/// `s_ia` (raising in the `gl(m)` index) or `s_ai`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    Ia,
    Ai,
}

fn check_range(i: usize, a: usize, m: usize, rank: usize) -> Result<()> {
    if i == 0 || i > m || a <= m || a > rank {
        return Err(Error::IndexOutOfRange { row: i, col: a, rank });
    }
    Ok(())
}

/// `h_i - h_j = E[i,i] - E[j,j] - i + j`.
fn h_diff(rank: usize, i: usize, j: usize) -> UeaElement {
    UeaElement::e(rank, i, i)
        .sub(&UeaElement::e(rank, j, j))
        .expect("equal ranks")
        .add_scalar(&q(j as i64 - i as i64))
}

fn word(rank: usize, gens: &[(usize, usize)]) -> UeaElement {
    let idx: Vec<GenIdx> = gens.iter().map(|&(r, c)| GenIdx::new(r, c)).collect();
    crate::pbw::normal_order(&idx, rank).expect("indices in range")
}

/// All subsets of `items`, each in the given order.
fn subsets_of(items: &[usize]) -> Vec<Vec<usize>> {
    (0..1u32 << items.len())
        .map(|mask| {
            items
                .iter()
                .enumerate()
                .filter(|(t, _)| mask & (1 << t) != 0)
                .map(|(_, &x)| x)
                .collect()
        })
        .collect()
}

/// `s_ia = Σ E[i,i_1] E[i_1,i_2] ⋯ E[i_s,a] Π_j (h_i - h_j)` over
/// `i > i_1 > ⋯ > i_s ≥ 1`, `j` running over the complement in `{1..i-1}`;
/// `s_ai = Σ E[i_1,i] E[i_2,i_1] ⋯ E[a,i_s] Π_j (h_i - h_j)` over
/// `i < i_1 < ⋯ < i_s ≤ m`, complement in `{i+1..m}`.
pub fn lowering_element(kind: Kind, i: usize, a: usize, m: usize, rank: usize) -> Result<UeaElement> {
    check_range(i, a, m, rank)?;
    let pool: Vec<usize> = match kind {
        Kind::Ia => (1..i).rev().collect(),
        Kind::Ai => (i + 1..=m).collect(),
    };
    let mut acc = UeaElement::zero(rank);
    for chain in subsets_of(&pool) {
        let mut path = vec![i];
        path.extend(&chain);
        path.push(a);
        let gens: Vec<(usize, usize)> = match kind {
            Kind::Ia => path.windows(2).map(|w| (w[0], w[1])).collect(),
            Kind::Ai => path.windows(2).map(|w| (w[1], w[0])).collect(),
        };
        let mut term = word(rank, &gens);
        for &j in pool.iter().filter(|j| !chain.contains(j)) {
            term = term.multiply(&h_diff(rank, i, j))?;
        }
        acc = acc.add(&term)?;
    }
    Ok(acc)
}

/// Cache of the `s` operators for a fixed `(m, m+n)`.
pub struct SOperators {
    m: usize,
    rank: usize,
    cache: HashMap<(Kind, usize, usize), UeaElement>,
}

impl SOperators {
    pub fn new(m: usize, rank: usize) -> Result<Self> {
        let mut cache = HashMap::new();
        for i in 1..=m {
            for a in m + 1..=rank {
                cache.insert((Kind::Ia, i, a), lowering_element(Kind::Ia, i, a, m, rank)?);
                cache.insert((Kind::Ai, i, a), lowering_element(Kind::Ai, i, a, m, rank)?);
            }
        }
        Ok(SOperators { m, rank, cache })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `s_ia`.
    pub fn ia(&self, i: usize, a: usize) -> &UeaElement {
        &self.cache[&(Kind::Ia, i, a)]
    }

    /// `s_ai`.
    pub fn ai(&self, a: usize, i: usize) -> &UeaElement {
        &self.cache[&(Kind::Ai, i, a)]
    }
}

/// `h_1, …, h_m` on a vector whose `gl(m)`-weight is definite.
pub fn h_values(module: &GlModule, v: &ModVector, m: usize) -> Result<Vec<Rational>> {
    let mut found: Option<&[usize]> = None;
    for (k, x) in v.0.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        let w = &module.weight(k)[..m];
        match found {
            None => found = Some(w),
            Some(f) if f == w => {}
            Some(_) => {
                return Err(Error::InvalidParameters(
                    "vector has no definite gl(m)-weight".into(),
                ))
            }
        }
    }
    let w = found.map_or_else(|| vec![0; m], <[usize]>::to_vec);
    Ok((1..=m).map(|i| q(w[i - 1] as i64 - i as i64 + 1)).collect())
}

fn act(module: &GlModule, x: &UeaElement, v: &ModVector) -> ModVector {
    module.act(x, v).expect("ranks match")
}

/// The positive roots `(i, j)`, `i < j ≤ m`, in lexicographic order.
pub fn lex_normal_ordering(m: usize) -> Vec<(usize, usize)> {
    (1..=m)
        .flat_map(|i| (i + 1..=m).map(move |j| (i, j)))
        .collect()
}

/// A random normal ordering, read off a random sorting network that
/// reverses `1, …, m` by adjacent transpositions.
pub fn random_normal_ordering(m: usize, rng: &mut impl Rng) -> Vec<(usize, usize)> {
    let mut perm: Vec<usize> = (1..=m).collect();
    let mut out = Vec::new();
    loop {
        let ascents: Vec<usize> = (0..m.saturating_sub(1))
            .filter(|&p| perm[p] < perm[p + 1])
            .collect();
        let Some(&p) = ascents.choose(rng) else {
            break;
        };
        out.push((perm[p], perm[p + 1]));
        perm.swap(p, p + 1);
    }
    out
}

/// Every composite root `(i, k)` lies between `(i, j)` and `(j, k)`.
pub fn is_normal_ordering(order: &[(usize, usize)], m: usize) -> bool {
    let mut pos = HashMap::new();
    for (t, &r) in order.iter().enumerate() {
        pos.insert(r, t);
    }
    if pos.len() != m * m.saturating_sub(1) / 2 || order.len() != pos.len() {
        return false;
    }
    for i in 1..=m {
        for j in i + 1..=m {
            for k in j + 1..=m {
                let (a, b, c) = (pos[&(i, j)], pos[&(i, k)], pos[&(j, k)]);
                if !((a < b && b < c) || (c < b && b < a)) {
                    return false;
                }
            }
        }
    }
    true
}

/// Splits `v` into components of definite (full) weight.
fn weight_components(module: &GlModule, v: &ModVector) -> Vec<ModVector> {
    let mut parts: HashMap<Vec<usize>, ModVector> = HashMap::new();
    for (k, x) in v.0.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        parts
            .entry(module.weight(k).to_vec())
            .or_insert_with(|| ModVector::zero(module.dim()))
            .0[k] = x.clone();
    }
    parts.into_values().collect()
}

/// `p_ij x = Σ_k (E_ji)^k (E_ij)^k x · (-1)^k / (k! (h_i-h_j+1)⋯(h_i-h_j+k))`
/// for a weight vector `x`.
fn apply_pij(module: &GlModule, i: usize, j: usize, x: &ModVector) -> Result<ModVector> {
    let Some(w) = module.weight_of(x) else {
        return Ok(x.clone());
    };
    let hij = q(w[i - 1] as i64 - w[j - 1] as i64 - i as i64 + j as i64);
    let mut out = x.clone();
    let mut raised = x.clone();
    let mut coeff = Rational::one();
    let mut k = 0;
    loop {
        raised = module.apply_generator(i, j, &raised);
        if raised.is_zero() {
            break;
        }
        k += 1;
        let d = &hij + q(k);
        if d.is_zero() {
            return Err(Error::SingularWeight(format!(
                "h_{i} - h_{j} + {k} = 0 on weight {w:?}"
            )));
        }
        coeff = -coeff / (q(k) * d);
        let mut y = raised.clone();
        for _ in 0..k {
            y = module.apply_generator(j, i, &y);
        }
        out = out.add(&y.scale(&coeff));
    }
    Ok(out)
}

/// Extremal projection `p = Π p_ij` (product in the given order, rightmost
/// factor applied first).
pub fn extremal_project(
    module: &GlModule,
    v: &ModVector,
    order: &[(usize, usize)],
) -> Result<ModVector> {
    let mut total = ModVector::zero(module.dim());
    for part in weight_components(module, v) {
        let mut x = part;
        for &(i, j) in order.iter().rev() {
            x = apply_pij(module, i, j, &x)?;
        }
        total = total.add(&x);
    }
    Ok(total)
}

pub(crate) fn first_failure(acc: &mut Option<String>, ok: bool, what: impl FnOnce() -> String) {
    if !ok && acc.is_none() {
        *acc = Some(what());
    }
}

/// Verifies the commutation relations between `E_ab` and the `s`
/// operators, the relations among the `s` operators and the adjoint law,
/// on a basis of `gl(m)`-highest vectors.
pub fn check_z_relations(module: &GlModule, m: usize) -> Result<Vec<Check>> {
    let rank = module.rank();
    if m == 0 || m >= rank {
        return Err(Error::InvalidParameters(format!("need 1 ≤ m < {rank}")));
    }
    let s = SOperators::new(m, rank)?;
    let hv = module.glm_highest_basis(m);
    let big: Vec<usize> = (m + 1..=rank).collect();
    let small: Vec<usize> = (1..=m).collect();
    let label = format!("λ={} N={rank} m={m}", module.lambda());
    let mut checks = Vec::new();
    let mut skipped = Vec::new();

    let mut ess = None;
    let mut commute_ai = None;
    let mut fraction = None;
    let mut commute_ia = None;
    let mut exchange = None;
    let mut adjoint = None;

    for (vi, v) in hv.iter().enumerate() {
        let h = h_values(module, v, m)?;
        for &a in &big {
            for &b in &big {
                let e_ab = UeaElement::e(rank, a, b);
                for &c in &big {
                    for &i in &small {
                        let lhs = act(module, &e_ab, &act(module, s.ai(c, i), v))
                            .sub(&act(module, s.ai(c, i), &act(module, &e_ab, v)));
                        let rhs = if b == c { act(module, s.ai(a, i), v) } else { ModVector::zero(module.dim()) };
                        first_failure(&mut ess, lhs == rhs, || format!("[E_{a}{b}, s_{c}{i}] on vector {vi}"));
                        let lhs = act(module, &e_ab, &act(module, s.ia(i, c), v))
                            .sub(&act(module, s.ia(i, c), &act(module, &e_ab, v)));
                        let rhs = if a == c { act(module, s.ia(i, b), v).scale(&-Rational::one()) } else { ModVector::zero(module.dim()) };
                        first_failure(&mut ess, lhs == rhs, || format!("[E_{a}{b}, s_{i}{c}] on vector {vi}"));
                    }
                }
                for &i in &small {
                    let lhs = act(module, s.ai(a, i), &act(module, s.ai(b, i), v));
                    let rhs = act(module, s.ai(b, i), &act(module, s.ai(a, i), v));
                    first_failure(&mut commute_ai, lhs == rhs, || format!("s_{a}{i} s_{b}{i} on vector {vi}"));
                    for &j in &small {
                        if i == j {
                            continue;
                        }
                        let lhs = act(module, s.ia(i, a), &act(module, s.ai(b, j), v));
                        let rhs = act(module, s.ai(b, j), &act(module, s.ia(i, a), v));
                        first_failure(&mut commute_ia, lhs == rhs, || format!("s_{i}{a} s_{b}{j} on vector {vi}"));

                        let d = &h[i - 1] - &h[j - 1];
                        if d.is_zero() {
                            skipped.push(format!("fraction relation i={i} j={j} on vector {vi}"));
                            continue;
                        }
                        let lhs = act(module, s.ai(a, i), &act(module, s.ai(b, j), v));
                        let first = act(module, s.ai(b, j), &act(module, s.ai(a, i), v)).scale(&((&d + q(1)) / &d));
                        let second = act(module, s.ai(b, i), &act(module, s.ai(a, j), v)).scale(&d.recip());
                        first_failure(&mut fraction, lhs == first.sub(&second), || {
                            format!("s_{a}{i} s_{b}{j} on vector {vi}")
                        });
                    }

                    // s_ia s_bi = (δ_ab (E_ii + m - i) - E_ab) Π_{j≠i} (h_i - h_j - 1)
                    //           + Σ_j s_bj s_ja Π_{k≠j} (h_i - h_k - 1)/(h_j - h_k)
                    let lhs = act(module, s.ia(i, a), &act(module, s.ai(b, i), v));
                    let mut prod = Rational::one();
                    for &j in small.iter().filter(|&&j| j != i) {
                        prod *= &h[i - 1] - &h[j - 1] - q(1);
                    }
                    let mut op = UeaElement::e(rank, b, a).scale(&-Rational::one());
                    if a == b {
                        op = op
                            .add(&UeaElement::e(rank, i, i).add_scalar(&q(m as i64 - i as i64)))
                            .expect("equal ranks");
                    }
                    let mut rhs = act(module, &op, v).scale(&prod);
                    let mut singular = false;
                    for &j in &small {
                        let mut c = Rational::one();
                        for &k in small.iter().filter(|&&k| k != j) {
                            let den = &h[j - 1] - &h[k - 1];
                            if den.is_zero() {
                                singular = true;
                                break;
                            }
                            c *= (&h[i - 1] - &h[k - 1] - q(1)) / den;
                        }
                        if singular {
                            break;
                        }
                        rhs = rhs.add(&act(module, s.ai(b, j), &act(module, s.ia(j, a), v)).scale(&c));
                    }
                    if singular {
                        skipped.push(format!("exchange relation i={i} on vector {vi}"));
                    } else {
                        first_failure(&mut exchange, lhs == rhs, || format!("s_{i}{a} s_{b}{i} on vector {vi}"));
                    }
                }
            }
        }

        // ⟨s_ai w, v⟩ = ⟨w, s_ia v⟩ · Π_{j>i}(h_i-h_j+1) / Π_{j<i}(h_i-h_j), h on v
        for &a in &big {
            for &i in &small {
                let mut num = Rational::one();
                let mut den = Rational::one();
                for j in i + 1..=m {
                    num *= &h[i - 1] - &h[j - 1] + q(1);
                }
                for j in 1..i {
                    den *= &h[i - 1] - &h[j - 1];
                }
                if den.is_zero() {
                    skipped.push(format!("adjoint i={i} a={a} on vector {vi}"));
                    continue;
                }
                let right = act(module, s.ia(i, a), v);
                for (wi, w) in hv.iter().enumerate() {
                    let lhs = module.contravariant_form(&act(module, s.ai(a, i), w), v);
                    let rhs = module.contravariant_form(w, &right) * &num / &den;
                    first_failure(&mut adjoint, lhs == rhs, || {
                        format!("⟨s_{a}{i} w{wi}, v{vi}⟩ = {lhs}, expected {rhs}")
                    });
                }
            }
        }
    }

    for (name, w) in [
        ("e-s-commutator", ess),
        ("s-ai-commute", commute_ai),
        ("s-ai-fraction", fraction),
        ("s-ia-commute", commute_ia),
        ("s-exchange", exchange),
        ("s-adjoint", adjoint),
    ] {
        checks.push(Check::from_witness(format!("{name} {label}"), name, w));
    }
    for (t, reason) in skipped.into_iter().enumerate() {
        checks.push(Check::skipped(format!("singular {label} #{t}"), "singular-weight", reason));
    }
    Ok(checks)
}

/// `s_ia v = (-1)^{i-1} τ_ia(-h_i) v` and `s_ai v = τ_ai(-h_i-i+1) v` on
/// `gl(m)`-highest vectors, with `τ_ia` the minor with rows `1..i` and
/// columns `1..i-1, a`, and `τ_ai` the minor with rows `i+1..m, a` and
/// columns `i..m`.
pub fn check_minor_realization(module: &GlModule, m: usize) -> Result<Vec<Check>> {
    let rank = module.rank();
    if m == 0 || m >= rank {
        return Err(Error::InvalidParameters(format!("need 1 ≤ m < {rank}")));
    }
    let s = SOperators::new(m, rank)?;
    let hv = module.glm_highest_basis(m);
    let label = format!("λ={} N={rank} m={m}", module.lambda());
    let mut raise = None;
    let mut lower = None;
    for i in 1..=m {
        for a in m + 1..=rank {
            let rows: Vec<usize> = (1..=i).collect();
            let mut cols: Vec<usize> = (1..i).collect();
            cols.push(a);
            let tau_ia = minor_polynomial(&rows, &cols, rank)?;
            let mut rows: Vec<usize> = (i + 1..=m).collect();
            rows.push(a);
            let cols: Vec<usize> = (i..=m).collect();
            let tau_ai = minor_polynomial(&rows, &cols, rank)?;
            let sign = if i % 2 == 1 { Rational::one() } else { -Rational::one() };
            for (vi, v) in hv.iter().enumerate() {
                let h = &h_values(module, v, m)?[i - 1];
                let lhs = act(module, s.ia(i, a), v);
                let rhs = act(module, &tau_ia.eval_scalar(&-h.clone()), v).scale(&sign);
                first_failure(&mut raise, lhs == rhs, || format!("s_{i}{a} on vector {vi}"));
                let lhs = act(module, s.ai(a, i), v);
                let rhs = act(module, &tau_ai.eval_scalar(&(-h.clone() - q(i as i64) + q(1))), v);
                first_failure(&mut lower, lhs == rhs, || format!("s_{a}{i} on vector {vi}"));
            }
        }
    }
    Ok(vec![
        Check::from_witness(format!("minor-realization-raise {label}"), "minor-realization", raise),
        Check::from_witness(format!("minor-realization-lower {label}"), "minor-realization", lower),
    ])
}

/// Properties of the extremal projection: identity on highest vectors,
/// annihilation of `E_ji`-images, highest outputs, independence of the
/// normal ordering, and agreement of `s` with the projected generators.
pub fn check_extremal_projection(module: &GlModule, m: usize, seed: u64) -> Result<Vec<Check>> {
    let rank = module.rank();
    if m == 0 || m >= rank {
        return Err(Error::InvalidParameters(format!("need 1 ≤ m < {rank}")));
    }
    let label = format!("λ={} N={rank} m={m}", module.lambda());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let s = SOperators::new(m, rank)?;
    let hv = module.glm_highest_basis(m);
    let lex = lex_normal_ordering(m);
    let is_highest = |x: &ModVector| {
        (1..=m).all(|i| (i + 1..=m).all(|j| module.apply_generator(i, j, x).is_zero()))
    };

    let mut fixed = None;
    let mut kills = None;
    for (vi, v) in hv.iter().enumerate() {
        first_failure(&mut fixed, extremal_project(module, v, &lex)? == *v, || format!("vector {vi}"));
        for i in 1..=m {
            for j in i + 1..=m {
                let low = module.apply_generator(j, i, v);
                first_failure(&mut kills, extremal_project(module, &low, &lex)?.is_zero(), || {
                    format!("E_{j}{i} applied to vector {vi}")
                });
            }
        }
    }

    let mut highest = None;
    let mut ordering = None;
    let mut singular = Vec::new();
    let weights: Vec<Vec<usize>> = module.weight_multiplicities().into_keys().collect();
    for t in 0..12 {
        let w = weights.choose(&mut rng).expect("nonempty module");
        let mut v = ModVector::zero(module.dim());
        for &k in module.weight_space(w) {
            v.0[k] = Rational::new(rng.gen_range(-5i64..=5).into(), rng.gen_range(1i64..=3).into());
        }
        let order = random_normal_ordering(m, &mut rng);
        let (base, other) = match (extremal_project(module, &v, &lex), extremal_project(module, &v, &order)) {
            (Ok(x), Ok(y)) => (x, y),
            (Err(Error::SingularWeight(why)), _) | (_, Err(Error::SingularWeight(why))) => {
                singular.push(format!("sample {t}: {why}"));
                continue;
            }
            (Err(e), _) | (_, Err(e)) => return Err(e),
        };
        first_failure(&mut highest, is_highest(&base), || format!("sample {t}"));
        first_failure(&mut ordering, base == other, || format!("sample {t} ordering {order:?}"));
    }

    let mut generators = None;
    for (vi, v) in hv.iter().enumerate() {
        let h = h_values(module, v, m)?;
        for i in 1..=m {
            for a in m + 1..=rank {
                let mut c = Rational::one();
                for j in 1..i {
                    c *= &h[i - 1] - &h[j - 1];
                }
                let projected = extremal_project(module, &module.apply_generator(i, a, v), &lex)?.scale(&c);
                first_failure(&mut generators, act(module, s.ia(i, a), v) == projected, || {
                    format!("s_{i}{a} on vector {vi}")
                });
                let mut c = Rational::one();
                for j in i + 1..=m {
                    c *= &h[i - 1] - &h[j - 1];
                }
                let projected = extremal_project(module, &module.apply_generator(a, i, v), &lex)?.scale(&c);
                first_failure(&mut generators, act(module, s.ai(a, i), v) == projected, || {
                    format!("s_{a}{i} on vector {vi}")
                });
            }
        }
    }

    let mut checks = vec![
        Check::from_witness(format!("projection-fixes-highest {label}"), "extremal-projection", fixed),
        Check::from_witness(format!("projection-annihilates {label}"), "extremal-projection", kills),
        Check::from_witness(format!("projection-output-highest {label} seed={seed}"), "extremal-projection", highest),
        Check::from_witness(format!("projection-ordering {label} seed={seed}"), "extremal-projection", ordering),
        Check::from_witness(format!("projection-generators {label}"), "extremal-projection", generators),
    ];
    for (t, why) in singular.into_iter().enumerate() {
        checks.push(Check::skipped(format!("projection-singular {label} #{t}"), "singular-weight", why));
    }
    Ok(checks)
}

/// All transvector checks for `L(λ)` over `gl(rank)` with `gl(m)` split off.
pub fn check_transvector(lambda: &Partition, m: usize, rank: usize, bound: u128, seed: u64) -> Result<Vec<Check>> {
    let module = build_module_with_bound(lambda, rank, bound)?;
    let mut checks = check_z_relations(&module, m)?;
    checks.extend(check_minor_realization(&module, m)?);
    checks.extend(check_extremal_projection(&module, m, seed)?);
    Ok(checks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::glrep::DEFAULT_SIZE_BOUND;

    fn e(n: usize, i: usize, j: usize) -> UeaElement {
        UeaElement::e(n, i, j)
    }

    #[test]
    fn m_equals_one_is_plain_generator() {
        assert_eq!(lowering_element(Kind::Ia, 1, 3, 1, 3).unwrap(), e(3, 1, 3));
        assert_eq!(lowering_element(Kind::Ai, 1, 3, 1, 3).unwrap(), e(3, 3, 1));
    }

    #[test]
    fn m_equals_two_unfolding() {
        let expected = e(3, 2, 3)
            .multiply(&h_diff(3, 2, 1))
            .unwrap()
            .add(&e(3, 2, 1).multiply(&e(3, 1, 3)).unwrap())
            .unwrap();
        assert_eq!(lowering_element(Kind::Ia, 2, 3, 2, 3).unwrap(), expected);
        let expected = e(3, 3, 1)
            .multiply(&h_diff(3, 1, 2))
            .unwrap()
            .add(&e(3, 2, 1).multiply(&e(3, 3, 2)).unwrap())
            .unwrap();
        assert_eq!(lowering_element(Kind::Ai, 1, 3, 2, 3).unwrap(), expected);
        assert!(lowering_element(Kind::Ai, 3, 3, 2, 3).is_err());
    }

    #[test]
    fn normal_orderings() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for m in 1..=5 {
            assert!(is_normal_ordering(&lex_normal_ordering(m), m));
            for _ in 0..10 {
                assert!(is_normal_ordering(&random_normal_ordering(m, &mut rng), m));
            }
        }
        assert!(!is_normal_ordering(&[(1, 3), (1, 2), (2, 3)], 3));
    }

    #[test]
    fn transvector_cases() {
        for (lam, m, n) in [(vec![2, 1], 1, 3), (vec![1, 1], 1, 3), (vec![2, 1], 2, 3)] {
            let l = Partition::new(lam).unwrap();
            let checks = check_transvector(&l, m, n, DEFAULT_SIZE_BOUND, 3).unwrap();
            assert!(crate::report::all_ok(&checks), "{checks:?}");
            assert!(checks.iter().filter(|c| c.passed()).count() >= 13);
        }
    }
}

