//! Quantum minors of `u + E`, the quantum determinant and comatrix, and the
//! minors `t̃_ij(u)` attached to a splitting `{1..m} ∪ {m+1..n}`.
//!
//! A minor of `T(u) = 1 + E u^{-1}` with `s` rows is stored as its polynomial
//! numerator; the scalar denominator is `u(u-1)⋯(u-s+1)`.

use std::cell::RefCell;
use std::collections::HashMap;

use num_traits::One;

use crate::linalg::{permutations_with_sign, RatPoly};
use crate::pbw::{BiPoly, UPoly, UeaElement};
use crate::report::Check;
use crate::rmatrix::subsets;
use crate::{q, Error, Rational, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct QuantumMinor {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub value: UPoly,
}

impl QuantumMinor {
    pub fn size(&self) -> usize {
        self.rows.len()
    }

    /// `u(u-1)⋯(u-s+1)`.
    pub fn denominator(&self) -> RatPoly {
        RatPoly::falling(self.size())
    }
}

/// `(N, rows, cols)`.
type MinorKey = (usize, Vec<usize>, Vec<usize>);

thread_local! {
    static MINOR_CACHE: RefCell<HashMap<MinorKey, UPoly>> =
        RefCell::new(HashMap::new());
}

fn validate(rows: &[usize], cols: &[usize], n: usize) -> Result<()> {
    if rows.len() != cols.len() {
        return Err(Error::SizeMismatch {
            rows: rows.len(),
            cols: cols.len(),
        });
    }
    if rows.len() > n {
        return Err(Error::InvalidParameters(format!(
            "minor of size {} in rank {n}",
            rows.len()
        )));
    }
    for (&a, &b) in rows.iter().zip(cols) {
        for x in [a, b] {
            if x == 0 || x > n {
                return Err(Error::IndexOutOfRange { row: a, col: b, rank: n });
            }
        }
    }
    for set in [rows, cols] {
        for (i, x) in set.iter().enumerate() {
            if set[..i].contains(x) {
                return Err(Error::RepeatedIndex(*x));
            }
        }
    }
    Ok(())
}

/// Quantum minor with rows `rows` and columns `cols`, computed by both the
/// row and the column expansion.
pub fn qminor(rows: &[usize], cols: &[usize], n: usize) -> Result<QuantumMinor> {
    validate(rows, cols, n)?;
    Ok(QuantumMinor {
        rows: rows.to_vec(),
        cols: cols.to_vec(),
        value: minor_polynomial(rows, cols, n)?,
    })
}

/// Numerator of the quantum minor; indices may repeat.
///
/// Panics if the row and column expansions disagree.
pub fn minor_polynomial(rows: &[usize], cols: &[usize], n: usize) -> Result<UPoly> {
    if rows.len() != cols.len() {
        return Err(Error::SizeMismatch {
            rows: rows.len(),
            cols: cols.len(),
        });
    }
    if let Some(&x) = rows.iter().chain(cols).find(|&&x| x == 0 || x > n) {
        return Err(Error::IndexOutOfRange { row: x, col: x, rank: n });
    }
    let key = (n, rows.to_vec(), cols.to_vec());
    if let Some(v) = MINOR_CACHE.with(|c| c.borrow().get(&key).cloned()) {
        return Ok(v);
    }
    let by_rows = row_expansion(rows, cols, n);
    let by_cols = column_expansion(rows, cols, n);
    assert_eq!(
        by_rows, by_cols,
        "row and column expansions differ for rows {rows:?} cols {cols:?}"
    );
    MINOR_CACHE.with(|c| c.borrow_mut().insert(key, by_rows.clone()));
    Ok(by_rows)
}

/// `Σ_σ sgn σ (u+E)_{a_σ(1) b_1} ⋯ (u+E-s+1)_{a_σ(s) b_s}`.
pub fn row_expansion(rows: &[usize], cols: &[usize], n: usize) -> UPoly {
    let s = rows.len();
    let mut memo: HashMap<u32, UPoly> = HashMap::new();
    expand(s, n, (1u32 << s) - 1, &mut memo, &|pos, chosen| {
        (rows[chosen], cols[pos], -(pos as i64))
    })
}

/// `Σ_σ sgn σ (u+E-s+1)_{a_1 b_σ(1)} ⋯ (u+E)_{a_s b_σ(s)}`.
pub fn column_expansion(rows: &[usize], cols: &[usize], n: usize) -> UPoly {
    let s = rows.len();
    let mut memo: HashMap<u32, UPoly> = HashMap::new();
    expand(s, n, (1u32 << s) - 1, &mut memo, &|pos, chosen| {
        (rows[pos], cols[chosen], pos as i64 + 1 - s as i64)
    })
}

/// Sum over bijections from positions `s-|free|..s` onto the set `free`,
/// each factor given by `entry(position, chosen) = (row, col, shift)`.
fn expand(
    s: usize,
    n: usize,
    free: u32,
    memo: &mut HashMap<u32, UPoly>,
    entry: &dyn Fn(usize, usize) -> (usize, usize, i64),
) -> UPoly {
    if free == 0 {
        return UPoly::constant(UeaElement::one(n));
    }
    if let Some(v) = memo.get(&free) {
        return v.clone();
    }
    let pos = s - free.count_ones() as usize;
    let mut acc = UPoly::zero(n);
    let mut below = 0;
    for x in 0..s {
        if free & (1 << x) == 0 {
            continue;
        }
        let (a, b, shift) = entry(pos, x);
        let factor = UPoly::entry(n, a, b, &q(shift)).expect("indices validated");
        let rest = expand(s, n, free & !(1 << x), memo, entry);
        let term = factor.multiply(&rest).expect("equal ranks");
        acc = if below % 2 == 0 {
            acc.add(&term)
        } else {
            acc.sub(&term)
        }
        .expect("equal ranks");
        below += 1;
    }
    memo.insert(free, acc.clone());
    acc
}

/// Numerator of `qdet(1 + E u^{-1})` in rank `n`.
pub fn qdet(n: usize) -> UPoly {
    let all: Vec<usize> = (1..=n).collect();
    minor_polynomial(&all, &all, n).expect("valid indices")
}

/// Entry `(i, j)` of the quantum comatrix numerator:
/// `(-1)^{i+j}` times the minor with row `j` and column `i` removed.
pub fn comatrix_entry(i: usize, j: usize, n: usize) -> Result<UPoly> {
    if i == 0 || j == 0 || i > n || j > n {
        return Err(Error::IndexOutOfRange { row: i, col: j, rank: n });
    }
    let rows: Vec<usize> = (1..=n).filter(|&x| x != j).collect();
    let cols: Vec<usize> = (1..=n).filter(|&x| x != i).collect();
    let m = minor_polynomial(&rows, &cols, n)?;
    Ok(if (i + j).is_multiple_of(2) { m } else { m.scale(&-Rational::one()) })
}

/// `t̃_ij(u)`: minor with rows `{i, m+1..n}` and columns `{j, m+1..n}`.
pub fn ttilde(i: usize, j: usize, m: usize, n: usize) -> Result<UPoly> {
    if m == 0 || m >= n {
        return Err(Error::InvalidParameters(format!("need 1 ≤ m < n, got m={m}, n={n}")));
    }
    ttilde_unchecked(i, j, m, n)
}

pub(crate) fn ttilde_unchecked(i: usize, j: usize, m: usize, n: usize) -> Result<UPoly> {
    if i == 0 || j == 0 || i > m || j > m {
        return Err(Error::IndexOutOfRange { row: i, col: j, rank: m });
    }
    let mut rows = vec![i];
    rows.extend(m + 1..=n);
    let mut cols = vec![j];
    cols.extend(m + 1..=n);
    minor_polynomial(&rows, &cols, n)
}

fn upoly_shift(p: &UPoly, s: i64) -> UPoly {
    p.shift(&q(s))
}

fn bi_u_minus_v(n: usize, c: i64) -> BiPoly {
    BiPoly::scalar(
        n,
        [((1, 0), Rational::one()), ((0, 1), -Rational::one()), ((0, 0), q(c))],
    )
}

fn mismatch<T: PartialEq + std::fmt::Display>(lhs: &T, rhs: &T) -> Option<String> {
    (lhs != rhs).then(|| format!("{lhs} != {rhs}"))
}

/// Sorted roots of `Π_k u(u-1)⋯(u-s_k+1)` evaluated at `u - shift_k`.
fn denominator_roots(factors: &[(usize, i64)]) -> Vec<i64> {
    let mut roots: Vec<i64> = factors
        .iter()
        .flat_map(|&(s, shift)| (0..s as i64).map(move |r| r + shift))
        .collect();
    roots.sort_unstable();
    roots
}

/// Homomorphism relations for the `t̃_ij` and the determinant identity
/// `qdet T̃(u) = qdet T(u) · Π_{k=1}^{m-1} qdet T_BB(u-k)`.
pub fn check_sylvester(m: usize, n: usize) -> Result<Vec<Check>> {
    if m == 0 || m > n {
        return Err(Error::InvalidParameters(format!("need 1 ≤ m ≤ n, got m={m}, n={n}")));
    }
    let mut checks = Vec::new();
    let tt = |i, j| ttilde_unchecked(i, j, m, n);
    let uv = bi_u_minus_v(n, 0);

    for i in 1..=m {
        for j in 1..=m {
            for k in 1..=m {
                for l in 1..=m {
                    let (a, b) = (tt(i, j)?, tt(k, l)?);
                    let comm = BiPoly::in_u(&a)
                        .multiply(&BiPoly::in_v(&b))?
                        .sub(&BiPoly::in_v(&b).multiply(&BiPoly::in_u(&a))?)?;
                    let lhs = uv.multiply(&comm)?;
                    let (c, d) = (tt(k, j)?, tt(i, l)?);
                    let rhs = BiPoly::in_u(&c)
                        .multiply(&BiPoly::in_v(&d))?
                        .sub(&BiPoly::in_v(&c).multiply(&BiPoly::in_u(&d))?)?;
                    checks.push(Check::from_witness(
                        format!("ttilde-relation m={m} n={n} ({i}{j},{k}{l})"),
                        "yangian-relation",
                        mismatch(&lhs, &rhs),
                    ));
                }
            }
        }
    }

    // qdet of the m×m matrix of t̃'s: Σ_p sgn p t̃_{p(1)1}(u) ⋯ t̃_{p(m)m}(u-m+1)
    let mut lhs = UPoly::zero(n);
    for (p, sign) in permutations_with_sign(m) {
        let mut term = UPoly::constant(UeaElement::one(n));
        for (t, &pt) in p.iter().enumerate() {
            term = term.multiply(&upoly_shift(&tt(pt + 1, t + 1)?, -(t as i64)))?;
        }
        lhs = lhs.add(&term.scale(&q(sign)))?;
    }
    let bb: Vec<usize> = (m + 1..=n).collect();
    let qdet_bb = minor_polynomial(&bb, &bb, n)?;
    let mut rhs = qdet(n);
    for k in 1..m {
        rhs = rhs.multiply(&upoly_shift(&qdet_bb, -(k as i64)))?;
    }
    let s = n - m + 1;
    let lhs_den = denominator_roots(&(0..m as i64).map(|k| (s, k)).collect::<Vec<_>>());
    let mut rhs_factors = vec![(n, 0)];
    rhs_factors.extend((1..m as i64).map(|k| (n - m, k)));
    let rhs_den = denominator_roots(&rhs_factors);
    checks.push(Check::from_witness(
        format!("sylvester-denominators m={m} n={n}"),
        "quantum-sylvester",
        (lhs_den != rhs_den).then(|| format!("{lhs_den:?} != {rhs_den:?}")),
    ));
    checks.push(Check::from_witness(
        format!("sylvester m={m} n={n}"),
        "quantum-sylvester",
        mismatch(&lhs, &rhs),
    ));
    Ok(checks)
}

/// Comatrix identity, the block identity relating the comatrix to the
/// `t̃_ij`, and instances of the commutation relations between minors.
pub fn check_minor_identities(n: usize, m: usize) -> Result<Vec<Check>> {
    let mut checks = check_comatrix(n)?;
    checks.extend(check_comatrix_block(n, m)?);
    checks.extend(check_minor_relations(n)?);
    Ok(checks)
}

/// `Ĥ(u) T(u-n+1) = qdet T(u)` entrywise.
pub fn check_comatrix(n: usize) -> Result<Vec<Check>> {
    if n == 0 {
        return Err(Error::InvalidParameters("need n ≥ 1".into()));
    }
    let mut checks = Vec::new();
    let qd = qdet(n);

    for i in 1..=n {
        for j in 1..=n {
            let mut lhs = UPoly::zero(n);
            for k in 1..=n {
                let e = UPoly::entry(n, k, j, &q(1 - n as i64))?;
                lhs = lhs.add(&comatrix_entry(i, k, n)?.multiply(&e)?)?;
            }
            let rhs = if i == j { qd.clone() } else { UPoly::zero(n) };
            checks.push(Check::from_witness(
                format!("comatrix n={n} ({i},{j})"),
                "comatrix",
                mismatch(&lhs, &rhs),
            ));
        }
    }

    Ok(checks)
}

/// The comatrix against the `t̃_ij` for the splitting at `m`.
pub fn check_comatrix_block(n: usize, m: usize) -> Result<Vec<Check>> {
    if m < 2 || m > n {
        return Err(Error::InvalidParameters(format!("need 2 ≤ m ≤ n, got m={m}, n={n}")));
    }
    let mut checks = Vec::new();
    let qd = qdet(n);
    let bb: Vec<usize> = (m + 1..=n).collect();
    let qdet_bb = upoly_shift(&minor_polynomial(&bb, &bb, n)?, 1 - m as i64);
    let target = qd.multiply(&qdet_bb)?;
    for i in 1..=m {
        for j in 1..=m {
            let mut lhs = UPoly::zero(n);
            for k in 1..=m {
                let t = upoly_shift(&ttilde_unchecked(k, j, m, n)?, 1 - m as i64);
                lhs = lhs.add(&comatrix_entry(i, k, n)?.multiply(&t)?)?;
            }
            let rhs = if i == j { target.clone() } else { UPoly::zero(n) };
            checks.push(Check::from_witness(
                format!("comatrix-block n={n} m={m} ({i},{j})"),
                "comatrix-block",
                mismatch(&lhs, &rhs),
            ));
        }
    }

    Ok(checks)
}

/// Fixed instances of the commutation relations between quantum minors.
pub fn check_minor_relations(n: usize) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for inst in minor_relation_instances(n) {
        let name = format!(
            "minor-commutator n={n} a={:?} b={:?} c={:?} d={:?}",
            inst.a, inst.b, inst.c, inst.d
        );
        checks.push(Check::from_witness(name, "minor-commutator", check_minor_relation(n, &inst)?));
    }
    Ok(checks)
}

/// Index data `t^a_b(u)`, `t^c_d(v)` for one commutator instance.
#[derive(Clone, Debug)]
pub struct MinorRelation {
    pub a: Vec<usize>,
    pub b: Vec<usize>,
    pub c: Vec<usize>,
    pub d: Vec<usize>,
}

fn minor_relation_instances(n: usize) -> Vec<MinorRelation> {
    let tuple = |start: usize, len: usize| -> Vec<usize> { (0..len).map(|t| (start + t) % n + 1).collect() };
    let mut out = Vec::new();
    for k in 1..=2.min(n) {
        for l in 1..=2.min(n) {
            out.push(MinorRelation {
                a: tuple(0, k),
                b: tuple(n - k, k),
                c: tuple(n - l, l),
                d: tuple(0, l),
            });
            if n > 2 {
                out.push(MinorRelation {
                    a: tuple(1, k),
                    b: tuple(0, k),
                    c: tuple(0, l),
                    d: tuple(2, l),
                });
            }
        }
    }
    out
}

/// `[t^a_b(u), t^c_d(v)] = Σ_p (-1)^{p-1} p!/((u-v-k+1)⋯(u-v-k+p))
/// Σ (t^{a'}_b(u) t^{c'}_d(v) - t^c_{d'}(v) t^a_{b'}(u))` with all
/// denominators cleared; returns the first mismatch.
pub fn check_minor_relation(n: usize, rel: &MinorRelation) -> Result<Option<String>> {
    minor_relation_truncated(n, rel, usize::MAX)
}

fn minor_relation_truncated(n: usize, rel: &MinorRelation, max_p: usize) -> Result<Option<String>> {
    let (k, l) = (rel.a.len(), rel.c.len());
    let mu = |rows: &[usize], cols: &[usize]| minor_polynomial(rows, cols, n);
    let top = k.min(l);
    let full = shifted_product(n, k, 1..=top)?;

    let x = BiPoly::in_u(&mu(&rel.a, &rel.b)?);
    let y = BiPoly::in_v(&mu(&rel.c, &rel.d)?);
    let lhs = full.multiply(&x.multiply(&y)?.sub(&y.multiply(&x)?)?)?;

    let mut rhs = BiPoly::zero(n);
    for p in 1..=top.min(max_p) {
        let cofactor = shifted_product(n, k, p + 1..=top)?;
        let mut fact = Rational::one();
        for t in 1..=p {
            fact *= q(t as i64);
        }
        let coeff = if p % 2 == 1 { fact } else { -fact };
        let mut inner = BiPoly::zero(n);
        for is in subsets(k, p) {
            for js in subsets(l, p) {
                let (mut a2, mut c2, mut b2, mut d2) =
                    (rel.a.clone(), rel.c.clone(), rel.b.clone(), rel.d.clone());
                for (&i, &j) in is.iter().zip(&js) {
                    a2[i - 1] = rel.c[j - 1];
                    c2[j - 1] = rel.a[i - 1];
                    b2[i - 1] = rel.d[j - 1];
                    d2[j - 1] = rel.b[i - 1];
                }
                let first = BiPoly::in_u(&mu(&a2, &rel.b)?).multiply(&BiPoly::in_v(&mu(&c2, &rel.d)?))?;
                let second = BiPoly::in_v(&mu(&rel.c, &d2)?).multiply(&BiPoly::in_u(&mu(&rel.a, &b2)?))?;
                inner = inner.add(&first.sub(&second)?)?;
            }
        }
        rhs = rhs.add(&cofactor.multiply(&inner)?.scale(&coeff))?;
    }
    Ok(mismatch(&lhs, &rhs))
}

/// `Π_{q ∈ range} (u - v - k + q)`.
fn shifted_product(n: usize, k: usize, range: std::ops::RangeInclusive<usize>) -> Result<BiPoly> {
    let mut acc = BiPoly::scalar(n, [((0, 0), Rational::one())]);
    for qq in range {
        acc = acc.multiply(&bi_u_minus_v(n, qq as i64 - k as i64))?;
    }
    Ok(acc)
}

/// Commutators of every coefficient of `qdet` with every generator.
pub fn check_qdet_central(n: usize) -> Check {
    let qd = qdet(n);
    for c in qd.coeffs() {
        for i in 1..=n {
            for j in 1..=n {
                let e = UeaElement::e(n, i, j);
                let comm = c.commutator(&e).expect("equal ranks");
                if !comm.is_zero() {
                    return Check::fail(
                        format!("qdet-central n={n}"),
                        "qdet-central",
                        format!("[{c}, E[{i},{j}]] = {comm}"),
                    );
                }
            }
        }
    }
    Check::pass(format!("qdet-central n={n}"), "qdet-central")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(n: usize, i: usize, j: usize) -> UeaElement {
        UeaElement::e(n, i, j)
    }

    #[test]
    fn single_entry_minor() {
        let m = qminor(&[1], &[2], 2).unwrap();
        assert_eq!(m.value, UPoly::constant(e(2, 1, 2)));
        assert_eq!(qdet(1), UPoly::entry(1, 1, 1, &q(0)).unwrap());
    }

    #[test]
    fn empty_minor_is_one() {
        assert_eq!(comatrix_entry(1, 1, 1).unwrap(), UPoly::constant(UeaElement::one(1)));
    }

    #[test]
    fn comatrix_two_by_two() {
        assert_eq!(comatrix_entry(1, 1, 2).unwrap(), UPoly::entry(2, 2, 2, &q(0)).unwrap());
        assert_eq!(
            comatrix_entry(1, 2, 2).unwrap(),
            UPoly::constant(e(2, 1, 2).scale(&q(-1)))
        );
    }

    #[test]
    fn errors() {
        assert_eq!(qminor(&[1, 1], &[1, 2], 2), Err(Error::RepeatedIndex(1)));
        assert!(matches!(qminor(&[1], &[1, 2], 2), Err(Error::SizeMismatch { .. })));
        assert!(matches!(qminor(&[3], &[1], 2), Err(Error::IndexOutOfRange { .. })));
        assert!(ttilde(1, 1, 2, 2).is_err());
        assert!(ttilde(3, 1, 2, 3).is_err());
    }

    #[test]
    fn ttilde_unfolds() {
        assert_eq!(ttilde(1, 1, 1, 2).unwrap(), qdet(2));
        assert_eq!(ttilde(1, 2, 2, 3).unwrap(), qminor(&[1, 3], &[2, 3], 3).unwrap().value);
    }

    #[test]
    fn repeated_index_minor_vanishes() {
        assert!(minor_polynomial(&[1, 1], &[1, 2], 2).unwrap().is_zero());
        assert!(minor_polynomial(&[2, 1, 2], &[1, 2, 3], 3).unwrap().is_zero());
        assert!(minor_polynomial(&[1, 2], &[3, 3], 3).unwrap().is_zero());
    }

    #[test]
    fn swapping_rows_negates() {
        let a = minor_polynomial(&[1, 3], &[2, 3], 3).unwrap();
        let b = minor_polynomial(&[3, 1], &[2, 3], 3).unwrap();
        assert_eq!(a, b.scale(&q(-1)));
        let c = minor_polynomial(&[1, 3], &[3, 2], 3).unwrap();
        assert_eq!(a, c.scale(&q(-1)));
    }

    #[test]
    fn identities_small_rank() {
        for c in check_sylvester(2, 3).unwrap() {
            assert!(c.passed(), "{c:?}");
        }
        for c in check_minor_identities(3, 2).unwrap() {
            assert!(c.passed(), "{c:?}");
        }
        assert!(check_qdet_central(3).passed());
    }

    #[test]
    fn perturbed_commutator_is_detected() {
        let rel = MinorRelation { a: vec![1, 2], b: vec![2, 3], c: vec![1, 3], d: vec![1, 2] };
        assert_eq!(check_minor_relation(3, &rel).unwrap(), None);
        assert!(minor_relation_truncated(3, &rel, 1).unwrap().is_some());
    }
}

