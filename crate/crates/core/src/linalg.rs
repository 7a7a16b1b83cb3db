//! Small exact helpers: dense rational matrices (row reduction, kernels,
//! determinants) and univariate rational polynomials.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::Rational;

/// Dense row-major matrix over the rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row);
        }
        RatMatrix {
            rows: r,
            cols: c,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// Submatrix on the given row and column positions (0-based).
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut m = Self::zeros(rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                m[(a, b)] = self[(i, j)].clone();
            }
        }
        m
    }

    pub fn mul(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = self[(r, c)].recip();
            for j in c..self.cols {
                let v = &self[(r, j)] * &inv;
                self[(r, j)] = v;
            }
            for i in 0..self.rows {
                if i == r || self[(i, c)].is_zero() {
                    continue;
                }
                let f = self[(i, c)].clone();
                for j in c..self.cols {
                    if self[(r, j)].is_zero() {
                        continue;
                    }
                    let v = &self[(r, j)] * &f;
                    self[(i, j)] -= v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Basis of `{x : self · x = 0}`.
    pub fn nullspace(&self) -> Vec<Vec<Rational>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|c| !pivots.contains(c)) {
            let mut v = vec![Rational::zero(); self.cols];
            v[free] = Rational::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -m[(r, free)].clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Determinant by Gaussian elimination over `Q`.
    pub fn det(&self) -> Rational {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Rational::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[(i, c)].is_zero()) else {
                return Rational::zero();
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let pivot = m[(c, c)].clone();
            det *= &pivot;
            for i in c + 1..n {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let f = &m[(i, c)] / &pivot;
                for j in c..n {
                    let v = &m[(c, j)] * &f;
                    m[(i, j)] -= v;
                }
            }
        }
        det
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl std::ops::Index<(usize, usize)> for RatMatrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RatMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }
}

/// All permutations of `0..s` with their signs, in lexicographic order.
pub fn permutations_with_sign(s: usize) -> Vec<(Vec<usize>, i64)> {
    fn rec(rest: &mut Vec<usize>, cur: &mut Vec<usize>, sign: i64, out: &mut Vec<(Vec<usize>, i64)>) {
        if rest.is_empty() {
            out.push((cur.clone(), sign));
            return;
        }
        for pos in 0..rest.len() {
            let x = rest.remove(pos);
            cur.push(x);
            // picking the element at `pos` passes over `pos` smaller remaining ones
            let s = if pos % 2 == 0 { sign } else { -sign };
            rec(rest, cur, s, out);
            cur.pop();
            rest.insert(pos, x);
        }
    }
    let mut out = Vec::new();
    rec(&mut (0..s).collect(), &mut Vec::new(), 1, &mut out);
    out
}

/// Univariate polynomial with rational coefficients, ascending powers.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatPoly {
    coeffs: Vec<Rational>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The monic linear factor `u + c`.
    pub fn linear(c: Rational) -> Self {
        Self::new(vec![c, Rational::one()])
    }

    /// `Π (u + c)` over the given shifts.
    pub fn from_shifts<I: IntoIterator<Item = Rational>>(shifts: I) -> Self {
        shifts
            .into_iter()
            .fold(Self::constant(Rational::one()), |acc, c| acc.mul(&Self::linear(c)))
    }

    /// Falling factorial `u(u-1)⋯(u-k+1)`.
    pub fn falling(k: usize) -> Self {
        Self::from_shifts((0..k).map(|i| -crate::q(i as i64)))
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add(&self, other: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut c = vec![Rational::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            c[i] += a;
        }
        for (i, a) in other.coeffs.iter().enumerate() {
            c[i] += a;
        }
        Self::new(c)
    }

    pub fn sub(&self, other: &RatPoly) -> RatPoly {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, s: &Rational) -> RatPoly {
        Self::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn mul(&self, other: &RatPoly) -> RatPoly {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut c = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Self::new(c)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// `p(u + s)`.
    pub fn shift(&self, s: &Rational) -> RatPoly {
        let lin = Self::linear(s.clone());
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| acc.mul(&lin).add(&Self::constant(c.clone())))
    }

    /// Integer roots with multiplicity when the polynomial is monic and splits
    /// into linear factors over `Z`; returned as the shifts `c` in `Π (u + c)`.
    pub fn integer_shifts(&self) -> Option<Vec<i64>> {
        let deg = self.degree()?;
        if !self.coeffs[deg].is_one() {
            return None;
        }
        let mut rest = self.clone();
        let mut shifts = Vec::new();
        while rest.degree().unwrap_or(0) > 0 {
            let c0 = &rest.coeffs[0];
            if c0.is_zero() {
                shifts.push(0);
                rest = Self::new(rest.coeffs[1..].to_vec());
                continue;
            }
            if !c0.is_integer() {
                return None;
            }
            let n = c0.to_integer().abs();
            let n: i64 = i64::try_from(n).ok()?;
            let mut found = None;
            let mut d = 1i64;
            while d * d <= n {
                if n % d == 0 {
                    for cand in [d, -d, n / d, -(n / d)] {
                        if rest.eval(&crate::q(-cand)).is_zero() {
                            found = Some(cand);
                            break;
                        }
                    }
                }
                if found.is_some() {
                    break;
                }
                d += 1;
            }
            let c = found?;
            shifts.push(c);
            rest = rest.div_linear(&crate::q(c));
        }
        shifts.sort_unstable();
        Some(shifts)
    }

    /// Exact division by `u + c`; the remainder is discarded.
    fn div_linear(&self, c: &Rational) -> RatPoly {
        let deg = match self.degree() {
            Some(d) if d > 0 => d,
            _ => return Self::zero(),
        };
        let root = -c;
        let mut out = vec![Rational::zero(); deg];
        out[deg - 1] = self.coeffs[deg].clone();
        for k in (1..deg).rev() {
            out[k - 1] = &self.coeffs[k] + &root * &out[k];
        }
        Self::new(out)
    }
}

impl fmt::Display for RatPoly {
    /// Factored over the integers when possible, otherwise ascending
    /// coefficient list.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(shifts) = self.integer_shifts() {
            if shifts.is_empty() {
                return write!(f, "1");
            }
            let mut s = String::new();
            let mut i = 0;
            while i < shifts.len() {
                let c = shifts[i];
                let mult = shifts[i..].iter().take_while(|&&x| x == c).count();
                let base = match c {
                    0 => "u".to_string(),
                    c if c > 0 => format!("(u+{c})"),
                    c => format!("(u-{})", -c),
                };
                s.push_str(&base);
                if mult > 1 {
                    s.push_str(&format!("^{mult}"));
                }
                i += mult;
            }
            return write!(f, "{s}");
        }
        let parts: Vec<String> = self.coeffs.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{frac, q};

    #[test]
    fn nullspace_of_rank_one() {
        let m = RatMatrix::from_rows(vec![vec![q(1), q(2), q(3)], vec![q(2), q(4), q(6)]]);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 2);
        for v in ns {
            let dot: Rational = (0..3).map(|j| &m[(0, j)] * &v[j]).sum();
            assert!(dot.is_zero());
        }
    }

    #[test]
    fn determinant_matches_hand_value() {
        let m = RatMatrix::from_rows(vec![
            vec![q(2), q(0), q(1)],
            vec![q(1), q(3), q(2)],
            vec![q(1), q(1), q(2)],
        ]);
        assert_eq!(m.det(), q(6));
        let s = RatMatrix::from_rows(vec![vec![frac(1, 2), q(1)], vec![q(1), q(2)]]);
        assert_eq!(s.det(), q(0));
    }

    #[test]
    fn integer_factorisation() {
        let p = RatPoly::from_shifts([q(4), q(8), q(9)]);
        assert_eq!(p.integer_shifts(), Some(vec![4, 8, 9]));
        assert_eq!(p.to_string(), "(u+4)(u+8)(u+9)");
        let p = RatPoly::from_shifts([q(0), q(3), q(-1), q(-1)]);
        assert_eq!(p.to_string(), "(u-1)^2u(u+3)");
        assert_eq!(RatPoly::constant(q(1)).to_string(), "1");
        let p = RatPoly::new(vec![q(1), q(0), q(1)]);
        assert_eq!(p.integer_shifts(), None);
    }

    #[test]
    fn permutation_signs() {
        let perms = permutations_with_sign(3);
        assert_eq!(perms.len(), 6);
        let sum: i64 = perms.iter().map(|p| p.1).sum();
        assert_eq!(sum, 0);
        for (p, sgn) in perms {
            let inversions = (0..3)
                .flat_map(|i| (i + 1..3).map(move |j| (i, j)))
                .filter(|&(i, j)| p[i] > p[j])
                .count();
            assert_eq!(sgn, if inversions % 2 == 0 { 1 } else { -1 });
        }
    }

    #[test]
    fn shift_and_falling() {
        let p = RatPoly::falling(3);
        assert_eq!(p.eval(&q(2)), q(0));
        assert_eq!(p.eval(&q(5)), q(60));
        assert_eq!(p.shift(&q(1)).eval(&q(4)), q(60));
    }
}
