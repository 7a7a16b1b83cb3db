//! Capelli coefficients, the projection `π_n` from the centralizer of
//! `E[n,n]` to `U(gl(n-1))`, the images of the `t̃_ij` under evaluation, and
//! their eigenvalues on highest vectors.

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::glrep::{build_module, Partition};
use crate::linalg::{RatMatrix, RatPoly};
use crate::minor::{qdet, ttilde, ttilde_unchecked};
use crate::pbw::{GenOrder, UPoly, UeaElement};
use crate::report::Check;
use crate::{q, Error, Rational, Result};

/// Coefficients `ℰ_1, …, ℰ_k` of `qdet(1 + E u^{-1}) = 1 + Σ_i ℰ_i u^{-i}`
/// in rank `n`.
pub fn capelli_series(n: usize, k: usize) -> Vec<UeaElement> {
    let num = qdet(n);
    // numerator / u^n = Σ_j a_j x^j with x = u^{-1}
    let a = |j: usize| -> UeaElement {
        if j > n {
            UeaElement::zero(n)
        } else {
            num.coeff(n - j)
        }
    };
    // u(u-1)⋯(u-n+1) / u^n = Π_k (1 - k x)
    let mut b = RatPoly::constant(Rational::one());
    for s in 1..n {
        b = b.mul(&RatPoly::new(vec![Rational::one(), q(-(s as i64))]));
    }
    let bc = |t: usize| b.coeffs().get(t).cloned().unwrap_or_else(Rational::zero);
    let mut out: Vec<UeaElement> = vec![UeaElement::one(n)];
    for i in 1..=k {
        let mut e = a(i);
        for t in 1..=i {
            e = e.sub(&out[i - t].scale(&bc(t))).expect("equal ranks");
        }
        out.push(e);
    }
    out.remove(0);
    out
}

/// `ℰ_1^{(n)}, …, ℰ_n^{(n)}`.
pub fn capelli_coeffs(n: usize) -> Vec<UeaElement> {
    capelli_series(n, n)
}

/// Projection of the centralizer of `E[n,n]` in `U(gl(n))` onto
/// `U(gl(n-1))`: reorder with index `n` outermost and drop every monomial
/// that still involves it.
pub fn pi_projection(x: &UeaElement, n: usize) -> Result<UeaElement> {
    if x.rank() != n || n < 2 {
        return Err(Error::RankMismatch {
            left: x.rank(),
            right: n,
        });
    }
    let enn = UeaElement::e(n, n, n);
    if !x.commutator(&enn)?.is_zero() {
        return Err(Error::NotInCentralizer(n));
    }
    x.reordered(GenOrder::IndexLast(n as u8))
        .drop_index(n)
        .reordered(GenOrder::Lex)
        .with_rank(n - 1)
}

/// `π_n` applied coefficientwise.
pub fn pi_projection_poly(p: &UPoly, n: usize) -> Result<UPoly> {
    let coeffs = p
        .coeffs()
        .iter()
        .map(|c| pi_projection(c, n))
        .collect::<Result<Vec<_>>>()?;
    Ok(UPoly::new(n - 1, coeffs))
}

/// Numerator and denominator of the image of `t̃_ij(u)`:
/// `qdet(1 + E u^{-1})_{B_i B_j}` with `B_i = {i, m+1, …, n}`.
pub fn phi_image(i: usize, j: usize, m: usize, n: usize) -> Result<(UPoly, RatPoly)> {
    Ok((ttilde(i, j, m, n)?, RatPoly::falling(n - m + 1)))
}

/// `Π_{i=1}^n (u + λ_i - i + 1)` as the action of the `qdet` numerator on
/// the highest vector of `L(λ)`, together with its expected value.
pub fn capelli_eigenvalue(lambda: &Partition, n: usize) -> Result<(Option<RatPoly>, RatPoly)> {
    if lambda.len() > n {
        return Err(Error::InvalidParameters(format!("{lambda} has more than {n} parts")));
    }
    let module = build_module(lambda, n)?;
    let measured = module.poly_eigenvalue(&qdet(n), &module.highest_vector())?;
    let expected = RatPoly::from_shifts((1..=n).map(|i| q(lambda.part(i) as i64 - i as i64 + 1)));
    Ok((measured, expected))
}

/// Eigenvalue of `qdet(1 + E u^{-1})` on the highest vector as a reduced
/// ratio of monic linear factors: `(numerator shifts, denominator shifts)`.
pub fn capelli_eigenvalue_reduced(lambda: &Partition, n: usize) -> (Vec<i64>, Vec<i64>) {
    let mut num: Vec<i64> = (1..=n).map(|i| lambda.part(i) as i64 - i as i64 + 1).collect();
    let mut den: Vec<i64> = (1..=n).map(|i| 1 - i as i64).collect();
    num.sort_unstable_by(|a, b| b.cmp(a));
    den.sort_unstable_by(|a, b| b.cmp(a));
    let mut n_out = Vec::new();
    for x in num {
        if let Some(p) = den.iter().position(|&d| d == x) {
            den.remove(p);
        } else {
            n_out.push(x);
        }
    }
    (n_out, den)
}

pub fn check_capelli_eigenvalue(lambda: &Partition, n: usize) -> Result<Check> {
    let name = format!("capelli-eigenvalue λ={lambda} n={n}");
    let (measured, expected) = capelli_eigenvalue(lambda, n)?;
    Ok(match measured {
        Some(p) if p == expected => Check::pass(name, "capelli-eigenvalue"),
        Some(p) => Check::fail(name, "capelli-eigenvalue", format!("{p} != {expected}")),
        None => Check::fail(name, "capelli-eigenvalue", "ξ is not an eigenvector"),
    })
}

/// A random `n × n` matrix with small rational entries.
fn random_matrix(rng: &mut ChaCha8Rng, n: usize) -> RatMatrix {
    let rows = (0..n)
        .map(|_| {
            (0..n)
                .map(|_| Rational::new(rng.gen_range(-9i64..=9).into(), rng.gen_range(1i64..=4).into()))
                .collect()
        })
        .collect();
    RatMatrix::from_rows(rows)
}

/// `det X = det M · (det M_BB)^{m-1}` for `M = 1 + x u^{-1}` and
/// `X_ij = det M_{B_i B_j}`, over random rational `x` and `u`.
pub fn check_classical_sylvester(m: usize, n: usize, trials: usize, seed: u64) -> Result<Vec<Check>> {
    if m == 0 || m > n {
        return Err(Error::InvalidParameters(format!("need 1 ≤ m ≤ n, got m={m}, n={n}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checks = Vec::new();
    for t in 0..trials {
        let x = random_matrix(&mut rng, n);
        let u = loop {
            let u = Rational::new(rng.gen_range(-20i64..=20).into(), rng.gen_range(1i64..=5).into());
            if !u.is_zero() {
                break u;
            }
        };
        let mut mm = RatMatrix::identity(n);
        for i in 0..n {
            for j in 0..n {
                mm[(i, j)] += &x[(i, j)] / &u;
            }
        }
        let tail: Vec<usize> = (m..n).collect();
        let block = |i: usize| -> Vec<usize> {
            let mut v = vec![i];
            v.extend(&tail);
            v
        };
        let mut big = RatMatrix::zeros(m, m);
        for i in 0..m {
            for j in 0..m {
                big[(i, j)] = mm.select(&block(i), &block(j)).det();
            }
        }
        let lhs = big.det();
        let d_bb = mm.select(&tail, &tail).det();
        let mut rhs = mm.det();
        for _ in 1..m {
            rhs *= &d_bb;
        }
        checks.push(Check::from_witness(
            format!("classical-sylvester m={m} n={n} trial={t}"),
            "classical-sylvester",
            (lhs != rhs).then(|| format!("u={u}: {lhs} != {rhs}")),
        ));
    }
    Ok(checks)
}

/// Centrality of the Capelli coefficients, compatibility of `π_n` with the
/// Capelli determinants and the images of the `t̃_ij`, and commutation of
/// those images with `gl` of the trailing indices.
pub fn check_centralizer(m: usize, n: usize) -> Result<Vec<Check>> {
    if m == 0 || m >= n {
        return Err(Error::InvalidParameters(format!("need 1 ≤ m < n, got m={m}, n={n}")));
    }
    let mut checks = Vec::new();

    for rank in [n - 1, n] {
        let coeffs = capelli_coeffs(rank);
        let mut witness = None;
        'outer: for (k, c) in coeffs.iter().enumerate() {
            for a in 1..=rank {
                for b in 1..=rank {
                    let comm = c.commutator(&UeaElement::e(rank, a, b))?;
                    if !comm.is_zero() {
                        witness = Some(format!("[ℰ_{}, E[{a},{b}]] = {comm}", k + 1));
                        break 'outer;
                    }
                }
            }
        }
        checks.push(Check::from_witness(
            format!("capelli-central n={rank}"),
            "capelli-central",
            witness,
        ));
    }

    let projected = pi_projection_poly(&qdet(n), n)?;
    let expected = qdet(n - 1).multiply(&UPoly::from_scalar(
        n - 1,
        &RatPoly::linear(q(1 - n as i64)),
    ))?;
    checks.push(Check::from_witness(
        format!("projection-qdet n={n}"),
        "projection-qdet",
        (projected != expected).then(|| format!("{projected} != {expected}")),
    ));
    let high = capelli_series(n, n);
    let low = capelli_series(n - 1, n);
    for (k, (h, l)) in high.iter().zip(&low).enumerate() {
        let p = pi_projection(h, n)?;
        checks.push(Check::from_witness(
            format!("projection-capelli n={n} k={}", k + 1),
            "projection-qdet",
            (&p != l).then(|| format!("{p} != {l}")),
        ));
    }

    for i in 1..=m {
        for j in 1..=m {
            let (num, _) = phi_image(i, j, m, n)?;
            let mut witness = None;
            'scan: for c in num.coeffs() {
                for a in m + 1..=n {
                    for b in m + 1..=n {
                        let comm = c.commutator(&UeaElement::e(n, a, b))?;
                        if !comm.is_zero() {
                            witness = Some(format!("[{c}, E[{a},{b}]] = {comm}"));
                            break 'scan;
                        }
                    }
                }
            }
            checks.push(Check::from_witness(
                format!("image-commutes m={m} n={n} ({i},{j})"),
                "image-commutes",
                witness,
            ));

            let projected = pi_projection_poly(&num, n)?;
            let lower = ttilde_unchecked(i, j, m, n - 1)?;
            let expected = lower.multiply(&UPoly::from_scalar(
                n - 1,
                &RatPoly::linear(q(m as i64 - n as i64)),
            ))?;
            checks.push(Check::from_witness(
                format!("projection-image m={m} n={n} ({i},{j})"),
                "projection-image",
                (projected != expected).then(|| format!("{projected} != {expected}")),
            ));
        }
    }
    Ok(checks)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(n: usize, i: usize, j: usize) -> UeaElement {
        UeaElement::e(n, i, j)
    }

    #[test]
    fn capelli_low_ranks() {
        assert_eq!(capelli_coeffs(1), vec![e(1, 1, 1)]);
        assert_eq!(capelli_coeffs(2)[0], e(2, 1, 1).add(&e(2, 2, 2)).unwrap());
    }

    #[test]
    fn projection_examples() {
        assert_eq!(pi_projection(&e(3, 1, 1), 3).unwrap(), e(2, 1, 1));
        let x = e(3, 1, 3).multiply(&e(3, 3, 1)).unwrap();
        assert_eq!(pi_projection(&x, 3).unwrap(), e(2, 1, 1));
        assert_eq!(pi_projection(&e(3, 1, 3), 3), Err(Error::NotInCentralizer(3)));
    }

    #[test]
    fn phi_image_trivial_case() {
        let (num, den) = phi_image(1, 1, 1, 2).unwrap();
        assert_eq!(num, qdet(2));
        assert_eq!(den, RatPoly::falling(2));
    }

    #[test]
    fn eigenvalue_examples() {
        let p = |v: &[usize]| Partition::new(v.to_vec()).unwrap();
        assert_eq!(capelli_eigenvalue_reduced(&p(&[]), 3), (vec![], vec![]));
        assert_eq!(capelli_eigenvalue_reduced(&p(&[1]), 2), (vec![1], vec![0]));
        assert_eq!(capelli_eigenvalue_reduced(&p(&[2, 1]), 3), (vec![2], vec![-1]));
        for (lam, n) in [(vec![], 2), (vec![1], 2), (vec![2, 1], 3), (vec![2, 2, 1], 3)] {
            assert!(check_capelli_eigenvalue(&p(&lam), n).unwrap().passed());
        }
    }

    #[test]
    fn centralizer_suite() {
        for (m, n) in [(1, 2), (1, 3), (2, 3)] {
            for c in check_centralizer(m, n).unwrap() {
                assert!(c.passed(), "{c:?}");
            }
        }
    }

    #[test]
    fn classical_sylvester_trials() {
        for (m, n, t) in [(1, 2, 3), (2, 3, 10), (3, 4, 5)] {
            let checks = check_classical_sylvester(m, n, t, 7).unwrap();
            assert_eq!(checks.len(), t);
            assert!(checks.iter().all(Check::passed));
        }
    }
}
