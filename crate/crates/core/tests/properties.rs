use std::collections::BTreeMap;

use num_traits::Zero;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use yangian_core::centralizer::{capelli_coeffs, phi_image, pi_projection};
use yangian_core::elementary::{drinfeld_polynomials, highest_weight_data, nu_middle, nu_row_replacement};
use yangian_core::glrep::{branching_admissible, Partition};
use yangian_core::linalg::RatPoly;
use yangian_core::minor::minor_polynomial;
use yangian_core::pbw::{normal_order, GenIdx, UPoly, UeaElement};
use yangian_core::{q, Rational};

const RANK: usize = 3;

fn gen_idx(rank: usize) -> impl Strategy<Value = GenIdx> {
    (1..=rank, 1..=rank).prop_map(|(i, j)| GenIdx::new(i, j))
}

fn element(rank: usize, max_len: usize) -> impl Strategy<Value = UeaElement> {
    prop::collection::vec((prop::collection::vec(gen_idx(rank), 0..=max_len), -4i64..=4), 1..=3).prop_map(
        move |terms| {
            terms.into_iter().fold(UeaElement::zero(rank), |acc, (w, c)| {
                acc.add(&normal_order(&w, rank).unwrap().scale(&q(c))).unwrap()
            })
        },
    )
}

/// Independent rewriter: swap the first adjacent out-of-order pair and add
/// the bracket, until every word is sorted.
fn bubble_normal_form(word: &[GenIdx]) -> BTreeMap<Vec<GenIdx>, Rational> {
    let mut pending: Vec<(Vec<GenIdx>, Rational)> = vec![(word.to_vec(), q(1))];
    let mut done: BTreeMap<Vec<GenIdx>, Rational> = BTreeMap::new();
    while let Some((w, c)) = pending.pop() {
        match (0..w.len().saturating_sub(1)).find(|&t| w[t] > w[t + 1]) {
            None => {
                let e = done.entry(w).or_insert_with(Rational::zero);
                *e += c;
            }
            Some(t) => {
                let (x, y) = (w[t], w[t + 1]);
                let mut swapped = w.clone();
                swapped.swap(t, t + 1);
                pending.push((swapped, c.clone()));
                // [E_ij, E_kl] = δ_jk E_il - δ_li E_kj
                if x.col == y.row {
                    let mut v = w[..t].to_vec();
                    v.push(GenIdx { row: x.row, col: y.col });
                    v.extend(&w[t + 2..]);
                    pending.push((v, c.clone()));
                }
                if y.col == x.row {
                    let mut v = w[..t].to_vec();
                    v.push(GenIdx { row: y.row, col: x.col });
                    v.extend(&w[t + 2..]);
                    pending.push((v, -c.clone()));
                }
            }
        }
    }
    done.retain(|_, c| !c.is_zero());
    done
}

fn as_map(x: &UeaElement) -> BTreeMap<Vec<GenIdx>, Rational> {
    x.terms().map(|(m, c)| (m.0.clone(), c.clone())).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn product_is_associative(a in element(RANK, 3), b in element(RANK, 2), c in element(RANK, 2)) {
        let left = a.multiply(&b).unwrap().multiply(&c).unwrap();
        let right = a.multiply(&b.multiply(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn jacobi_identity(a in element(RANK, 2), b in element(RANK, 2), c in element(RANK, 2)) {
        let br = |x: &UeaElement, y: &UeaElement| x.commutator(y).unwrap();
        let sum = br(&a, &br(&b, &c))
            .add(&br(&b, &br(&c, &a))).unwrap()
            .add(&br(&c, &br(&a, &b))).unwrap();
        prop_assert!(sum.is_zero());
    }

    #[test]
    fn star_reverses_products(a in element(RANK, 3), b in element(RANK, 3)) {
        let lhs = a.multiply(&b).unwrap().star();
        let rhs = b.star().multiply(&a.star()).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(a.star().star(), a);
    }

    #[test]
    fn normal_form_matches_bubble_sort(word in prop::collection::vec(gen_idx(RANK), 0..=5)) {
        prop_assert_eq!(as_map(&normal_order(&word, RANK).unwrap()), bubble_normal_form(&word));
    }

    #[test]
    fn degree_is_additive(a in element(RANK, 3), b in element(RANK, 3)) {
        prop_assume!(!a.is_zero() && !b.is_zero());
        let (da, db) = (a.degree().unwrap(), b.degree().unwrap());
        prop_assert_eq!(a.multiply(&b).unwrap().degree(), Some(da + db));
        let c = a.commutator(&b).unwrap();
        if let Some(dc) = c.degree() {
            prop_assert!(dc < (da + db).max(1));
        }
    }

    #[test]
    fn spectral_parameter_is_central(
        p in prop::collection::vec(element(RANK, 2), 1..=3),
        r in prop::collection::vec(element(RANK, 2), 1..=3),
        x in -6i64..=6,
    ) {
        let (p, r) = (UPoly::new(RANK, p), UPoly::new(RANK, r));
        let prod = p.multiply(&r).unwrap();
        let lhs = prod.eval_scalar(&q(x));
        let rhs = p.eval_scalar(&q(x)).multiply(&r.eval_scalar(&q(x))).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn quantum_minor_is_antisymmetric_in_rows(i in 1..=RANK, j in 1..=RANK, k in 1..=RANK, l in 1..=RANK) {
        let a = minor_polynomial(&[i, j], &[k, l], RANK).unwrap();
        let b = minor_polynomial(&[j, i], &[k, l], RANK).unwrap();
        prop_assert_eq!(a.add(&b).unwrap(), UPoly::zero(RANK));
        if i == j || k == l {
            prop_assert!(a.is_zero());
        }
    }
}

/// Elements commuting with `E[3,3]`: Capelli coefficients and coefficients
/// of the bordered minors.
fn centralizer_pool() -> Vec<UeaElement> {
    let mut pool = capelli_coeffs(RANK);
    for (m, idx) in [(1, vec![(1, 1)]), (2, vec![(1, 1), (1, 2), (2, 1), (2, 2)])] {
        for (i, j) in idx {
            pool.extend(phi_image(i, j, m, RANK).unwrap().0.coeffs().iter().cloned());
        }
    }
    pool.retain(|x| !x.is_zero());
    pool
}

/// Random weight-zero elements for `ad E[3,3]`, built from `E[i,3]`, `E[3,j]`
/// in pairs, `E[3,3]` and generators free of index 3.
fn weight_zero(rng: &mut ChaCha8Rng) -> UeaElement {
    let mut acc = UeaElement::zero(RANK);
    for _ in 0..rng.gen_range(1..=3) {
        let mut word = Vec::new();
        for _ in 0..rng.gen_range(0..=2) {
            if rng.gen_bool(0.5) {
                word.push(GenIdx::new(rng.gen_range(1..=2), rng.gen_range(1..=2)));
            } else if rng.gen_bool(0.2) {
                word.push(GenIdx::new(3, 3));
            } else {
                word.push(GenIdx::new(rng.gen_range(1..=2), 3));
                word.push(GenIdx::new(3, rng.gen_range(1..=2)));
            }
        }
        word.shuffle(rng);
        acc = acc.add(&normal_order(&word, RANK).unwrap().scale(&q(rng.gen_range(-3..=3)))).unwrap();
    }
    acc
}

#[test]
fn projection_is_multiplicative_on_centralizer_pairs() {
    let pool = centralizer_pool();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut pairs = 0;
    for _ in 0..24 {
        let mut pick = || {
            let a = &pool[rng.gen_range(0..pool.len())];
            let b = &pool[rng.gen_range(0..pool.len())];
            a.scale(&q(rng.gen_range(1..=3))).add(&b.scale(&q(rng.gen_range(-2..=2)))).unwrap()
        };
        let (x, y) = (pick(), pick());
        let xy = x.multiply(&y).unwrap();
        let lhs = pi_projection(&xy, RANK).unwrap();
        let rhs = pi_projection(&x, RANK).unwrap().multiply(&pi_projection(&y, RANK).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
        pairs += 1;
    }
    assert!(pairs >= 20);
}

#[test]
fn projection_is_multiplicative_on_weight_zero_elements() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..30 {
        let (x, y) = (weight_zero(&mut rng), weight_zero(&mut rng));
        let lhs = pi_projection(&x.multiply(&y).unwrap(), RANK).unwrap();
        let rhs = pi_projection(&x, RANK).unwrap().multiply(&pi_projection(&y, RANK).unwrap()).unwrap();
        assert_eq!(lhs, rhs, "x = {x}, y = {y}");
        let dx = x.degree().unwrap_or(0);
        assert!(pi_projection(&x, RANK).unwrap().degree().unwrap_or(0) <= dx);
    }
}

/// Random `(λ, μ, m, n)` with `μ ⊆ λ` admissible.
pub fn random_admissible(rng: &mut ChaCha8Rng) -> (Partition, Partition, usize, usize) {
    let len = rng.gen_range(0..=6);
    let mut parts: Vec<usize> = (0..len).map(|_| rng.gen_range(0..=12)).collect();
    parts.sort_unstable_by(|a, b| b.cmp(a));
    let lambda = Partition::new(parts).unwrap();
    let n = rng.gen_range(1..=4);
    let mut mu = Vec::new();
    for i in 1..=lambda.len() {
        let lo = lambda.part(i + n);
        let hi = lambda.part(i).min(mu.last().copied().unwrap_or(usize::MAX));
        mu.push(rng.gen_range(lo..=hi));
    }
    let mu = Partition::new(mu).unwrap();
    let m = mu.len().max(1) + rng.gen_range(0..=1);
    (lambda, mu, m, n)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn drinfeld_routes_agree(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (lambda, mu, m, n) = random_admissible(&mut rng);
        prop_assert!(branching_admissible(&lambda, &mu, n));
        let d = drinfeld_polynomials(&lambda, &mu, m, n).unwrap();
        prop_assert!(d.agree(), "λ={} μ={} n={}: {:?}", lambda, mu, n, d);
        prop_assert!(d.ratio_holds);
        prop_assert_eq!(nu_middle(&lambda, &mu, m, n), nu_row_replacement(&lambda, &mu, m, n));
    }

    #[test]
    fn weight_numerators_have_degree_m_plus_one(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (lambda, mu, m, n) = random_admissible(&mut rng);
        let hw = highest_weight_data(&lambda, &mu, m, n).unwrap();
        for p in &hw.numerators {
            prop_assert_eq!(p.degree(), Some(m + 1));
        }
        prop_assert_eq!(&hw.denominator, &RatPoly::falling(m + 1));
        for nu in &hw.nu {
            prop_assert!(nu.windows(2).all(|w| w[0] >= w[1]));
        }
    }

    #[test]
    fn extra_empty_rows_do_not_change_drinfeld(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (lambda, mu, m, n) = random_admissible(&mut rng);
        let a = drinfeld_polynomials(&lambda, &mu, m, n).unwrap();
        let b = drinfeld_polynomials(&lambda, &mu, m + 1, n).unwrap();
        prop_assert_eq!(a.from_weight, b.from_weight);
    }
}
