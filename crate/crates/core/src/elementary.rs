//! Elementary representations of `Y(n)` on the multiplicity spaces
//! `L(λ)^+_μ` for `gl(m) ⊂ gl(m+n)`.
//!
//! The combinatorial part (skew diagrams, the weights `ν^(i)`, highest
//! weights and Drinfeld polynomials) needs no module. [`ElementaryModule`]
//! builds `L(λ)` concretely and checks the Yangian action on it.

use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::glrep::{branching_admissible, build_module_with_bound, GlModule, ModVector, Partition};
use crate::linalg::{RatMatrix, RatPoly};
use crate::minor::minor_polynomial;
use crate::pbw::UPoly;
use crate::report::Check;
use crate::transvector::{first_failure, h_values, SOperators};
use crate::{frac, q, Error, Rational, Result};

/// A cell of `λ/μ` (1-based row and column).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
    /// `col - row`.
    pub content: i64,
    /// One plus the number of cells of `λ/μ` below this one in its column.
    pub leglength: usize,
}

/// The skew diagram `λ/μ` with cells in row order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewData {
    pub lambda: Partition,
    pub mu: Partition,
    pub m: usize,
    pub n: usize,
    pub cells: Vec<Cell>,
}

fn validate(lambda: &Partition, mu: &Partition, m: usize, n: usize) -> Result<()> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidParameters(format!("need m, n ≥ 1, got m={m} n={n}")));
    }
    if mu.len() > m {
        return Err(Error::Inadmissible(format!("μ={mu} has more than m={m} parts")));
    }
    if !lambda.contains(mu) {
        return Err(Error::Inadmissible(format!("μ={mu} is not contained in λ={lambda}")));
    }
    if !branching_admissible(lambda, mu, n) {
        return Err(Error::Inadmissible(format!(
            "a column of {lambda}/{mu} has more than n={n} cells"
        )));
    }
    Ok(())
}

pub fn skew_diagram(lambda: &Partition, mu: &Partition, m: usize, n: usize) -> Result<SkewData> {
    validate(lambda, mu, m, n)?;
    let mut cells = Vec::new();
    for row in 1..=lambda.len() {
        for col in mu.part(row) + 1..=lambda.part(row) {
            let below = (row + 1..=lambda.len())
                .filter(|&r| mu.part(r) < col && col <= lambda.part(r))
                .count();
            cells.push(Cell {
                row,
                col,
                content: col as i64 - row as i64,
                leglength: below + 1,
            });
        }
    }
    Ok(SkewData {
        lambda: lambda.clone(),
        mu: mu.clone(),
        m,
        n,
        cells,
    })
}

impl SkewData {
    /// Index pairs `(m + l, r)` of the lowering operators building `ζ`,
    /// leftmost factor first.
    pub fn zeta_word(&self) -> Vec<(usize, usize)> {
        self.cells
            .iter()
            .filter(|c| c.row <= self.m)
            .map(|c| (self.m + c.leglength, c.row))
            .collect()
    }

    /// Number of cells in column `col`.
    pub fn column_height(&self, col: usize) -> usize {
        self.cells.iter().filter(|c| c.col == col).count()
    }
}

/// Renders a word like `(s_41)^2 s_52`.
pub fn format_word(word: &[(usize, usize)]) -> String {
    let mut parts = Vec::new();
    let mut i = 0;
    while i < word.len() {
        let run = word[i..].iter().take_while(|&&x| x == word[i]).count();
        let (a, b) = word[i];
        let s = if a < 10 && b < 10 {
            format!("s_{a}{b}")
        } else {
            format!("s_{{{a},{b}}}")
        };
        parts.push(if run > 1 { format!("({s})^{run}") } else { s });
        i += run;
    }
    parts.join(" ")
}

fn middle(a: usize, b: usize, c: usize) -> usize {
    let mut v = [a, b, c];
    v.sort_unstable();
    v[1]
}

/// `ν^(i)_a = middle{μ_{i-1}, μ_i, λ_{a+i-1}}` for `i = 1..m+1`,
/// `a = 1..n`, with `μ_0 = ∞`.
pub fn nu_middle(lambda: &Partition, mu: &Partition, m: usize, n: usize) -> Vec<Vec<usize>> {
    (1..=m + 1)
        .map(|i| {
            let upper = mu.part(i - 1);
            let lower = if i == m + 1 { 0 } else { mu.part(i) };
            (1..=n).map(|a| middle(upper, lower, lambda.part(a + i - 1))).collect()
        })
        .collect()
}

/// `ν^(i)` from the rows `λ_i, …, λ_{i+n-1}`: rows longer than `μ_{i-1}`
/// are cut to `μ_{i-1}`, rows shorter than `μ_i` are extended to `μ_i`.
pub fn nu_row_replacement(lambda: &Partition, mu: &Partition, m: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for i in 1..=m + 1 {
        let rows = &lambda.padded(i + n - 1)[i - 1..];
        let mut nu = Vec::new();
        for &r in rows {
            let mut x = r;
            if i > 1 && x > mu.part(i - 1) {
                x = mu.part(i - 1);
            }
            if i <= m && x < mu.part(i) {
                x = mu.part(i);
            }
            nu.push(x);
        }
        out.push(nu);
    }
    out
}

/// The highest weight of `L(λ)^+_μ`: `λ_a(u) = numerator_a / (u(u-1)⋯(u-m))`.
#[derive(Clone, Debug, PartialEq)]
pub struct HighestWeightData {
    pub nu: Vec<Vec<usize>>,
    /// Roots of the numerators, `numerator_a = Π_i (u + shift)`.
    pub numerator_shifts: Vec<Vec<i64>>,
    pub numerators: Vec<RatPoly>,
    pub denominator: RatPoly,
}

pub fn highest_weight_data(lambda: &Partition, mu: &Partition, m: usize, n: usize) -> Result<HighestWeightData> {
    validate(lambda, mu, m, n)?;
    let nu = nu_middle(lambda, mu, m, n);
    let numerator_shifts: Vec<Vec<i64>> = (0..n)
        .map(|a| (0..=m).map(|i| nu[i][a] as i64 - i as i64).collect())
        .collect();
    let numerators = numerator_shifts
        .iter()
        .map(|s| RatPoly::from_shifts(s.iter().map(|&c| q(c))))
        .collect();
    Ok(HighestWeightData {
        nu,
        numerator_shifts,
        numerators,
        denominator: RatPoly::falling(m + 1),
    })
}

/// Drinfeld polynomials computed from the highest weight and from contents.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DrinfeldPolys {
    /// Roots shifts of `P_a` from the telescoping product over `ν`.
    pub from_weight: Vec<Vec<i64>>,
    /// Shifts of `P_a` as contents of top cells of columns of height `a`.
    pub from_contents: Vec<Vec<i64>>,
    /// Whether `P_a(u+1) num_{a+1}(u) = P_a(u) num_a(u)` for the first list.
    pub ratio_holds: bool,
}

impl DrinfeldPolys {
    pub fn agree(&self) -> bool {
        self.from_weight == self.from_contents
    }

    pub fn polys(&self) -> Vec<RatPoly> {
        self.from_weight.iter().map(|s| shifts_poly(s)).collect()
    }
}

fn shifts_poly(shifts: &[i64]) -> RatPoly {
    RatPoly::from_shifts(shifts.iter().map(|&c| q(c)))
}

/// `P_a(u+1) / P_a(u) = num_a(u) / num_{a+1}(u)` as a polynomial identity.
pub fn satisfies_ratio(p: &RatPoly, num_a: &RatPoly, num_next: &RatPoly) -> bool {
    p.shift(&q(1)).mul(num_next) == p.mul(num_a)
}

pub fn drinfeld_polynomials(lambda: &Partition, mu: &Partition, m: usize, n: usize) -> Result<DrinfeldPolys> {
    let hw = highest_weight_data(lambda, mu, m, n)?;
    let skew = skew_diagram(lambda, mu, m, n)?;
    let mut from_weight = Vec::new();
    let mut from_contents = Vec::new();
    let mut ratio_holds = true;
    for a in 1..n {
        let mut shifts = Vec::new();
        for k in 1..=m + 1 {
            let hi = hw.nu[k - 1][a - 1] as i64 - k as i64;
            let lo = hw.nu[k - 1][a] as i64 - k as i64 + 1;
            shifts.extend(lo..=hi);
        }
        shifts.sort_unstable();
        ratio_holds &= satisfies_ratio(&shifts_poly(&shifts), &hw.numerators[a - 1], &hw.numerators[a]);
        from_weight.push(shifts);

        let mut contents: Vec<i64> = skew
            .cells
            .iter()
            .filter(|c| !(c.row > 1 && in_skew(&skew, c.row - 1, c.col)) && skew.column_height(c.col) == a)
            .map(|c| c.content)
            .collect();
        contents.sort_unstable();
        from_contents.push(contents);
    }
    Ok(DrinfeldPolys {
        from_weight,
        from_contents,
        ratio_holds,
    })
}

fn in_skew(skew: &SkewData, row: usize, col: usize) -> bool {
    skew.mu.part(row) < col && col <= skew.lambda.part(row)
}

/// Combinatorial summary for one `(λ, μ, m, n)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Combinatorics {
    pub skew: SkewData,
    pub weight: HighestWeightData,
    pub drinfeld: DrinfeldPolys,
}

pub fn combinatorics(lambda: &Partition, mu: &Partition, m: usize, n: usize) -> Result<Combinatorics> {
    Ok(Combinatorics {
        skew: skew_diagram(lambda, mu, m, n)?,
        weight: highest_weight_data(lambda, mu, m, n)?,
        drinfeld: drinfeld_polynomials(lambda, mu, m, n)?,
    })
}

impl fmt::Display for Combinatorics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = &self.skew;
        writeln!(f, "λ={} μ={} m={} n={}", s.lambda, s.mu, s.m, s.n)?;
        for (i, nu) in self.weight.nu.iter().enumerate() {
            writeln!(f, "ν^({}) = {:?}", i + 1, nu)?;
        }
        for (a, p) in self.weight.numerators.iter().enumerate() {
            writeln!(f, "λ_{}(u) = {} / {}", a + 1, p, self.weight.denominator)?;
        }
        for (a, p) in self.drinfeld.polys().iter().enumerate() {
            writeln!(f, "P_{}(u) = {}", a + 1, p)?;
        }
        write!(f, "ζ = {} ξ", format_word(&s.zeta_word()))
    }
}

/// Which formula evaluates `ψ(T_ab(u))`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PsiEvaluator {
    /// `(δ_ab(u-m) + E_ab) Π(u+h_i) - Σ s_ai s_ib Π_{j≠i} (u+h_j)/(h_i-h_j)`.
    LowerRaise,
    /// `(δ_ab u + E_ab) Π(u+h_i-1) - Σ s_ib s_ai Π_{j≠i} (u+h_j-1)/(h_i-h_j)`.
    RaiseLower,
    /// The quantum minor with rows `1..m, a` and columns `1..m, b`.
    Minor,
}

/// `L(λ)` over `gl(m+n)` with the data needed for the `Y(n)`-action.
pub struct ElementaryModule {
    pub skew: SkewData,
    pub module: GlModule,
    sops: SOperators,
}

impl ElementaryModule {
    pub fn new(lambda: &Partition, mu: &Partition, m: usize, n: usize, bound: u128) -> Result<Self> {
        let skew = skew_diagram(lambda, mu, m, n)?;
        let module = build_module_with_bound(lambda, m + n, bound)?;
        let sops = SOperators::new(m, m + n)?;
        Ok(ElementaryModule { skew, module, sops })
    }

    pub fn m(&self) -> usize {
        self.skew.m
    }

    pub fn n(&self) -> usize {
        self.skew.n
    }

    fn act(&self, x: &crate::UeaElement, v: &ModVector) -> ModVector {
        self.module.act(x, v).expect("ranks match")
    }

    /// `ζ = Π s_{m+l(α), r(α)} ξ`, product in row order.
    pub fn zeta(&self) -> ModVector {
        let mut v = self.module.highest_vector();
        for &(a, i) in self.skew.zeta_word().iter().rev() {
            v = self.act(self.sops.ai(a, i), &v);
        }
        v
    }

    /// `ζ = Π τ_{m+l(α), r(α)}(-c(α)) ξ`, with `τ_ai` the minor with rows
    /// `i+1..m, a` and columns `i..m`.
    pub fn zeta_by_minors(&self) -> Result<ModVector> {
        let m = self.m();
        let mut v = self.module.highest_vector();
        for c in self.skew.cells.iter().filter(|c| c.row <= m).rev() {
            let mut rows: Vec<usize> = (c.row + 1..=m).collect();
            rows.push(m + c.leglength);
            let cols: Vec<usize> = (c.row..=m).collect();
            let tau = minor_polynomial(&rows, &cols, m + self.n())?;
            v = self.act(&tau.eval_scalar(&-q(c.col as i64)), &v);
        }
        Ok(v)
    }

    /// Basis of `L(λ)^+_μ`.
    pub fn multiplicity_basis(&self) -> Vec<ModVector> {
        self.module.glm_highest_space(&self.skew.mu, self.m())
    }

    /// `ψ(T_ab(u))` for `m+1 ≤ a, b ≤ m+n` as a polynomial in `u`.
    pub fn t_poly(&self, a: usize, b: usize) -> Result<UPoly> {
        let m = self.m();
        self.check_index(a)?;
        self.check_index(b)?;
        let mut rows: Vec<usize> = (1..=m).collect();
        let mut cols = rows.clone();
        rows.push(a);
        cols.push(b);
        minor_polynomial(&rows, &cols, m + self.n())
    }

    fn check_index(&self, a: usize) -> Result<()> {
        let (m, n) = (self.m(), self.n());
        if a <= m || a > m + n {
            return Err(Error::IndexOutOfRange { row: a, col: a, rank: m + n });
        }
        Ok(())
    }

    /// `ψ(T_ab(u)) v` at a rational `u`; `h`-expressions use the weight of `v`.
    pub fn psi_apply(&self, eval: PsiEvaluator, a: usize, b: usize, u: &Rational, v: &ModVector) -> Result<ModVector> {
        let m = self.m();
        if eval == PsiEvaluator::Minor {
            return Ok(self.act(&self.t_poly(a, b)?.eval_scalar(u), v));
        }
        self.check_index(a)?;
        self.check_index(b)?;
        let h = h_values(&self.module, v, m)?;
        let (shift, lead) = match eval {
            PsiEvaluator::LowerRaise => (Rational::zero(), u - q(m as i64)),
            _ => (-Rational::one(), u.clone()),
        };
        let mut prod = Rational::one();
        for hi in &h {
            prod *= u + hi + &shift;
        }
        let mut out = self.module.apply_generator(a, b, v);
        if a == b {
            out = out.add(&v.scale(&lead));
        }
        out = out.scale(&prod);
        for i in 1..=m {
            let mut c = Rational::one();
            for j in (1..=m).filter(|&j| j != i) {
                let d = &h[i - 1] - &h[j - 1];
                if d.is_zero() {
                    return Err(Error::SingularWeight(format!("h_{i} = h_{j} = {}", h[i - 1])));
                }
                c *= (u + &h[j - 1] + &shift) / d;
            }
            let w = match eval {
                PsiEvaluator::LowerRaise => self.act(self.sops.ai(a, i), &self.act(self.sops.ia(i, b), v)),
                _ => self.act(self.sops.ia(i, b), &self.act(self.sops.ai(a, i), v)),
            };
            out = out.sub(&w.scale(&c));
        }
        Ok(out)
    }
}

/// `m + n + 2` distinct rational spectral parameters.
pub fn sample_points(m: usize, n: usize) -> Vec<Rational> {
    (0..(m + n + 2) as i64).map(|t| frac(3 * t + 2, 2)).collect()
}

fn is_glm_highest(module: &GlModule, v: &ModVector, mu: &Partition, m: usize) -> bool {
    let weight_ok = v.is_zero()
        || module
            .weight_of(v)
            .is_some_and(|w| w[..m] == mu.padded(m)[..]);
    weight_ok && (1..=m).all(|i| (i + 1..=m).all(|j| module.apply_generator(i, j, v).is_zero()))
}

fn span_rank(vectors: &[ModVector]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    RatMatrix::from_rows(vectors.iter().map(|v| v.0.clone()).collect()).rank()
}

/// Combinatorial checks for one admissible `(λ, μ, m, n)`.
pub fn check_combinatorics(lambda: &Partition, mu: &Partition, m: usize, n: usize) -> Result<Vec<Check>> {
    let label = format!("λ={lambda} μ={mu} m={m} n={n}");
    let comb = combinatorics(lambda, mu, m, n)?;
    let by_rows = nu_row_replacement(lambda, mu, m, n);
    let nu_witness = (comb.weight.nu != by_rows)
        .then(|| format!("middle {:?} vs rows {:?}", comb.weight.nu, by_rows));
    let partitions = comb.weight.nu.iter().all(|v| v.windows(2).all(|w| w[0] >= w[1]));
    let degrees = comb.weight.numerators.iter().all(|p| p.degree() == Some(m + 1));
    let dr = &comb.drinfeld;
    Ok(vec![
        Check::from_witness(format!("nu-two-descriptions {label}"), "nu-middle-rule", nu_witness),
        Check::from_witness(
            format!("nu-partitions {label}"),
            "nu-middle-rule",
            (!partitions).then(|| format!("{:?}", comb.weight.nu)),
        ),
        Check::from_witness(
            format!("weight-degree {label}"),
            "highest-weight",
            (!degrees).then(|| "numerator degree differs from m+1".to_string()),
        ),
        Check::from_witness(
            format!("drinfeld-ratio {label}"),
            "drinfeld-polynomials",
            (!dr.ratio_holds).then(|| format!("{:?}", dr.from_weight)),
        ),
        Check::from_witness(
            format!("drinfeld-contents {label}"),
            "drinfeld-contents",
            (!dr.agree()).then(|| format!("weight {:?} vs contents {:?}", dr.from_weight, dr.from_contents)),
        ),
    ])
}

/// Module-level checks of the `Y(n)`-action on `L(λ)^+_μ`.
pub fn verify_elementary(lambda: &Partition, mu: &Partition, m: usize, n: usize, bound: u128) -> Result<Vec<Check>> {
    let label = format!("λ={lambda} μ={mu} m={m} n={n}");
    let mut checks = check_combinatorics(lambda, mu, m, n)?;
    let em = ElementaryModule::new(lambda, mu, m, n, bound)?;
    let module = &em.module;
    let hw = highest_weight_data(lambda, mu, m, n)?;
    let drin = drinfeld_polynomials(lambda, mu, m, n)?;
    let samples = sample_points(m, n);
    let zeta = em.zeta();
    let basis = em.multiplicity_basis();

    checks.push(Check::from_witness(
        format!("zeta-nonzero {label}"),
        "highest-vector",
        zeta.is_zero().then(|| "ζ = 0".to_string()),
    ));
    checks.push(Check::from_witness(
        format!("zeta-glm-highest {label}"),
        "highest-vector",
        (!is_glm_highest(module, &zeta, mu, m)).then(|| "ζ is not in L(λ)^+_μ".to_string()),
    ));
    let by_minors = em.zeta_by_minors()?;
    checks.push(Check::from_witness(
        format!("zeta-minor-form {label}"),
        "highest-vector",
        (by_minors != zeta).then(|| "minor form of ζ differs".to_string()),
    ));

    let mut annihilated = None;
    let mut sampled = None;
    for a in m + 1..=m + n {
        for b in a + 1..=m + n {
            let t = em.t_poly(a, b)?;
            let coeffs = module.act_poly(&t, &zeta)?;
            first_failure(&mut annihilated, coeffs.iter().all(ModVector::is_zero), || {
                format!("T_{a}{b}(u) ζ ≠ 0")
            });
            for u in &samples {
                let w = em.psi_apply(PsiEvaluator::Minor, a, b, u, &zeta)?;
                first_failure(&mut sampled, w.is_zero(), || format!("T_{a}{b}({u}) ζ ≠ 0"));
            }
        }
    }
    checks.push(Check::from_witness(format!("raising-annihilate {label}"), "highest-vector", annihilated));
    checks.push(Check::from_witness(format!("raising-annihilate-samples {label}"), "highest-vector", sampled));

    let mut eigen = None;
    let mut eigen_samples = None;
    let mut measured = Vec::new();
    for a in 1..=n {
        let t = em.t_poly(m + a, m + a)?;
        let got = module.poly_eigenvalue(&t, &zeta)?;
        let want = &hw.numerators[a - 1];
        first_failure(&mut eigen, got.as_ref() == Some(want), || {
            format!("T_{0}{0}(u) ζ: expected {want}, got {got:?}", m + a)
        });
        for u in &samples {
            let w = em.psi_apply(PsiEvaluator::Minor, m + a, m + a, u, &zeta)?;
            first_failure(&mut eigen_samples, w == zeta.scale(&want.eval(u)), || {
                format!("T_{0}{0}({u}) ζ", m + a)
            });
        }
        measured.push(got);
    }
    checks.push(Check::from_witness(format!("diagonal-eigenvalue {label}"), "highest-weight", eigen));
    checks.push(Check::from_witness(format!("diagonal-eigenvalue-samples {label}"), "highest-weight", eigen_samples));

    let mut ratio = None;
    for (a, p) in drin.polys().iter().enumerate() {
        let ok = match (&measured[a], &measured[a + 1]) {
            (Some(x), Some(y)) => satisfies_ratio(p, x, y),
            _ => false,
        };
        first_failure(&mut ratio, ok, || format!("P_{} against measured eigenvalues", a + 1));
    }
    checks.push(Check::from_witness(format!("drinfeld-measured {label}"), "drinfeld-polynomials", ratio));

    for k in 1..=m {
        if mu.part(k) >= lambda.part(k) {
            continue;
        }
        let l = em
            .skew
            .cells
            .iter()
            .find(|c| c.row == k && c.col == mu.part(k) + 1)
            .map_or(0, |c| c.leglength);
        if mu.part(k) != lambda.part(k + l) {
            continue;
        }
        let w = em.act(em.sops.ai(m + l, k), &zeta);
        checks.push(Check::from_witness(
            format!("lowering-vanishes k={k} l={l} {label}"),
            "lowering-vanishes",
            (!w.is_zero()).then(|| format!("s_{}{} ζ ≠ 0", m + l, k)),
        ));
    }

    let mut adjoint = None;
    for a in m + 1..=m + n {
        for b in m + 1..=m + n {
            let tab = em.t_poly(a, b)?;
            let tba = em.t_poly(b, a)?;
            for (xi, x) in basis.iter().enumerate() {
                let tx = module.act_poly(&tab, x)?;
                for (yi, y) in basis.iter().enumerate() {
                    let ty = module.act_poly(&tba, y)?;
                    let deg = tx.len().max(ty.len());
                    let ok = (0..deg).all(|d| {
                        let l = tx.get(d).map_or_else(Rational::zero, |v| module.contravariant_form(v, y));
                        let r = ty.get(d).map_or_else(Rational::zero, |v| module.contravariant_form(x, v));
                        l == r
                    });
                    first_failure(&mut adjoint, ok, || format!("T_{a}{b} on basis pair ({xi},{yi})"));
                }
            }
        }
    }
    checks.push(Check::from_witness(format!("adjointness {label}"), "contravariant-form", adjoint));

    let mut evaluators = None;
    let mut singular = Vec::new();
    for a in m + 1..=m + n {
        for b in m + 1..=m + n {
            for (vi, v) in basis.iter().enumerate() {
                for u in &samples {
                    let direct = em.psi_apply(PsiEvaluator::Minor, a, b, u, v)?;
                    let mut others = Vec::new();
                    for e in [PsiEvaluator::LowerRaise, PsiEvaluator::RaiseLower] {
                        match em.psi_apply(e, a, b, u, v) {
                            Ok(w) => others.push((e, w)),
                            Err(Error::SingularWeight(why)) => singular.push(format!("{e:?} T_{a}{b} vector {vi}: {why}")),
                            Err(e) => return Err(e),
                        }
                    }
                    for (e, w) in others {
                        first_failure(&mut evaluators, w == direct, || {
                            format!("{e:?} vs minor: T_{a}{b}({u}) on vector {vi}")
                        });
                    }
                }
            }
        }
    }
    checks.push(Check::from_witness(format!("psi-evaluators {label}"), "generator-images", evaluators));
    for (t, why) in singular.into_iter().enumerate() {
        checks.push(Check::skipped(format!("psi-singular {label} #{t}"), "singular-weight", why));
    }

    let mut lowering_coeffs = Vec::new();
    for a in m + 1..=m + n {
        for b in m + 1..a {
            lowering_coeffs.extend(em.t_poly(a, b)?.coeffs().to_vec());
        }
    }
    let mut span = if zeta.is_zero() { Vec::new() } else { vec![zeta.clone()] };
    let mut frontier = span.clone();
    while !frontier.is_empty() && span.len() < basis.len() {
        let mut next = Vec::new();
        for v in &frontier {
            for x in &lowering_coeffs {
                let w = em.act(x, v);
                if w.is_zero() {
                    continue;
                }
                let mut trial = span.clone();
                trial.push(w.clone());
                if span_rank(&trial) > span.len() {
                    span.push(w.clone());
                    next.push(w);
                }
            }
        }
        frontier = next;
    }
    checks.push(Check::from_witness(
        format!("cyclic {label}"),
        "highest-vector",
        (span.len() != basis.len()).then(|| format!("span {} of {}", span.len(), basis.len())),
    ));
    Ok(checks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::all_ok;

    fn p(s: &str) -> Partition {
        Partition::parse(s).unwrap()
    }

    #[test]
    fn small_skew_diagram() {
        let s = skew_diagram(&p("2,1"), &p("1"), 1, 2).unwrap();
        let cells: Vec<(usize, usize, usize)> = s.cells.iter().map(|c| (c.row, c.col, c.leglength)).collect();
        assert_eq!(cells, vec![(1, 2, 1), (2, 1, 1)]);
        assert_eq!(s.zeta_word(), vec![(2, 1)]);
        assert!(skew_diagram(&p("2"), &p("2"), 1, 1).unwrap().cells.is_empty());
    }

    #[test]
    fn inadmissible_pairs() {
        assert!(matches!(skew_diagram(&p("1,1,1"), &p(""), 1, 1), Err(Error::Inadmissible(_))));
        assert!(matches!(skew_diagram(&p("2,1"), &p("1,1"), 1, 2), Err(Error::Inadmissible(_))));
        assert!(matches!(skew_diagram(&p("1"), &p("2"), 1, 2), Err(Error::Inadmissible(_))));
    }

    #[test]
    fn flagship_word_and_weights() {
        let (l, mu) = (p("10,8,5,4,2"), p("6,3"));
        let s = skew_diagram(&l, &mu, 2, 3).unwrap();
        assert_eq!(format_word(&s.zeta_word()), "(s_41)^2 (s_31)^2 s_52 s_42 (s_32)^3");
        let hw = highest_weight_data(&l, &mu, 2, 3).unwrap();
        assert_eq!(hw.nu, vec![vec![10, 8, 6], vec![6, 5, 4], vec![3, 3, 2]]);
        assert_eq!(nu_row_replacement(&l, &mu, 2, 3), hw.nu);
        let d = drinfeld_polynomials(&l, &mu, 2, 3).unwrap();
        assert_eq!(d.from_weight, vec![vec![4, 8, 9], vec![0, 3, 6, 7]]);
        assert!(d.agree() && d.ratio_holds);
    }

    #[test]
    fn small_weights() {
        let hw = highest_weight_data(&p("2,1"), &p("1"), 1, 2).unwrap();
        assert_eq!(hw.nu, vec![vec![2, 1], vec![1, 0]]);
        // λ_1 = (u+2)(u+0)/(u(u-1)), λ_2 = (u+1)(u-1)/(u(u-1))
        assert_eq!(hw.numerator_shifts, vec![vec![2, 0], vec![1, -1]]);
        let d = drinfeld_polynomials(&p("2,1"), &p("1"), 1, 2).unwrap();
        assert_eq!(d.from_contents, vec![vec![-1, 1]]);
        assert!(d.agree());
        let d = drinfeld_polynomials(&p("3"), &p("3"), 2, 3).unwrap();
        assert!(d.from_weight.iter().all(Vec::is_empty));
    }

    #[test]
    fn module_pipeline() {
        for (l, mu, m, n) in [("2,1", "1", 1, 2), ("3", "1", 1, 1), ("1", "1", 1, 1), ("2,1,1", "1,1", 2, 2)] {
            let checks = verify_elementary(&p(l), &p(mu), m, n, crate::glrep::DEFAULT_SIZE_BOUND).unwrap();
            for c in &checks {
                assert!(c.status != crate::report::Status::Fail, "{c:?}");
            }
            assert!(all_ok(&checks));
        }
    }

    #[test]
    fn small_zeta_is_e21_xi() {
        let em = ElementaryModule::new(&p("2,1"), &p("1"), 1, 2, crate::glrep::DEFAULT_SIZE_BOUND).unwrap();
        let xi = em.module.highest_vector();
        assert_eq!(em.zeta(), em.module.apply_generator(2, 1, &xi));
        assert_eq!(em.multiplicity_basis().len(), 4);
    }

    #[test]
    fn other_vectors_are_not_highest() {
        let em = ElementaryModule::new(&p("2,1"), &p("1"), 1, 2, crate::glrep::DEFAULT_SIZE_BOUND).unwrap();
        let t = em.t_poly(2, 3).unwrap();
        let zeta = em.zeta();
        let moved = em
            .multiplicity_basis()
            .iter()
            .filter(|v| em.module.act_poly(&t, v).unwrap().iter().any(|w| !w.is_zero()))
            .count();
        assert!(moved >= 2);
        assert!(em.module.act_poly(&t, &zeta).unwrap().iter().all(ModVector::is_zero));
    }
}

