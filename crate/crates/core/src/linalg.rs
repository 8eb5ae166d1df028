//! Exact dense linear algebra over the rationals.
//!
//! Nothing here touches floating point: ranks come from fraction-free
//! (Bareiss) elimination on integer rows, characteristic polynomials from
//! the Faddeev-LeVerrier recurrence on an integer matrix, and eigenvalues
//! from the rational root theorem.

use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::factor::divisors;

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

pub fn rational(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Dense row-major matrix of rationals.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl ExactMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::InvalidMatrix("dimensions must be positive".into()));
        }
        if entries.len() != rows * cols {
            return Err(Error::InvalidMatrix(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(ExactMatrix {
            rows,
            cols,
            entries,
        })
    }

    /// Rejects ragged input.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some((i, row)) = rows.iter().enumerate().find(|(_, r)| r.len() != cols) {
            return Err(Error::InvalidMatrix(format!(
                "row {i} has {} entries, expected {cols}",
                row.len()
            )));
        }
        let n = rows.len();
        ExactMatrix::new(n, cols, rows.into_iter().flatten().collect())
    }

    pub fn from_integers<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        ExactMatrix::from_rows(
            rows.iter()
                .map(|r| r.as_ref().iter().map(|&v| rational(v)).collect())
                .collect(),
        )
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = ExactMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> &Rational {
        &self.entries[row * self.cols + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: Rational) {
        self.entries[row * self.cols + col] = value;
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn row(&self, row: usize) -> &[Rational] {
        &self.entries[row * self.cols..(row + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    fn require_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    pub fn matmul(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = ExactMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::DimensionMismatch(format!(
                "cannot add {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a + b)
            .collect();
        ExactMatrix::new(self.rows, self.cols, entries)
    }

    pub fn scale(&self, factor: &Rational) -> ExactMatrix {
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e * factor).collect(),
        }
    }

    /// `self^k` by repeated squaring; `self^0` is the identity.
    pub fn pow(&self, mut k: u32) -> Result<ExactMatrix> {
        let n = self.require_square()?;
        let mut result = ExactMatrix::identity(n);
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                result = result.matmul(&base)?;
            }
            k >>= 1;
            if k > 0 {
                base = base.matmul(&base)?;
            }
        }
        Ok(result)
    }

    /// `self - λI`.
    pub fn shift(&self, lambda: &Rational) -> Result<ExactMatrix> {
        let n = self.require_square()?;
        let mut out = self.clone();
        for i in 0..n {
            out.entries[i * n + i] -= lambda;
        }
        Ok(out)
    }

    /// Least common multiple of all entry denominators.
    pub fn denominator_lcm(&self) -> BigInt {
        self.entries
            .iter()
            .fold(BigInt::one(), |acc, e| acc.lcm(e.denom()))
    }

    /// Exact rank over the rationals.
    ///
    /// Each row is cleared of denominators (a rank-preserving row scaling)
    /// and the integer matrix is reduced by Bareiss elimination, taking the
    /// first nonzero entry of each column as pivot.
    pub fn rank(&self) -> usize {
        let mut m: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|i| {
                let row = self.row(i);
                let d = row.iter().fold(BigInt::one(), |acc, e| acc.lcm(e.denom()));
                row.iter().map(|e| (e * &d).to_integer()).collect()
            })
            .collect();
        bareiss_rank(&mut m)
    }

    /// `d · self` as integer rows, where `d` is [`denominator_lcm`](Self::denominator_lcm).
    fn scaled_integer_rows(&self) -> (BigInt, Vec<Vec<BigInt>>) {
        let d = self.denominator_lcm();
        let rows = (0..self.rows)
            .map(|i| self.row(i).iter().map(|e| (e * &d).to_integer()).collect())
            .collect();
        (d, rows)
    }

    /// `det(xI - dA)` where `d` is [`denominator_lcm`](Self::denominator_lcm).
    ///
    /// For an integer matrix `d = 1` and this is the usual characteristic
    /// polynomial. Otherwise the eigenvalues of `self` are the roots of the
    /// returned polynomial divided by `d`.
    pub fn char_poly(&self) -> Result<PolynomialZ> {
        let n = self.require_square()?;
        let (_, b) = self.scaled_integer_rows();
        Ok(faddeev_leverrier(&b, n))
    }

    /// Reads the JSON matrix format:
    /// `{"rows": n, "cols": m, "entries": [[1, "-2/3", ...], ...]}`.
    /// Entries are integers or `"p/q"` strings in lowest terms.
    pub fn from_json_str(text: &str) -> Result<ExactMatrix> {
        let value: Value = serde_json::from_str(text)
            .map_err(|e| Error::InvalidMatrix(format!("malformed JSON: {e}")))?;
        ExactMatrix::from_json(&value)
    }

    pub fn from_json(value: &Value) -> Result<ExactMatrix> {
        let invalid = |msg: String| Error::InvalidMatrix(msg);
        let dim = |key: &str| -> Result<usize> {
            value
                .get(key)
                .and_then(Value::as_u64)
                .map(|v| v as usize)
                .ok_or_else(|| invalid(format!("missing or invalid \"{key}\"")))
        };
        let rows = dim("rows")?;
        let cols = dim("cols")?;
        let data = value
            .get("entries")
            .and_then(Value::as_array)
            .ok_or_else(|| invalid("missing \"entries\" array".into()))?;
        if data.len() != rows {
            return Err(invalid(format!(
                "\"rows\" is {rows} but {} rows given",
                data.len()
            )));
        }
        let mut entries = Vec::with_capacity(rows * cols);
        for (i, row) in data.iter().enumerate() {
            let row = row
                .as_array()
                .ok_or_else(|| invalid(format!("row {i} is not an array")))?;
            if row.len() != cols {
                return Err(invalid(format!(
                    "row {i} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            for (j, entry) in row.iter().enumerate() {
                entries.push(
                    parse_json_entry(entry)
                        .map_err(|msg| invalid(format!("entry ({i},{j}): {msg}")))?,
                );
            }
        }
        ExactMatrix::new(rows, cols, entries)
    }

    /// Integers are written as JSON numbers when they fit in an `i64`,
    /// everything else as a `"p/q"` string.
    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .map(|e| match i64::try_from(e.numer()) {
                        Ok(v) if e.is_integer() => json!(v),
                        _ => json!(e.to_string()),
                    })
                    .collect()
            })
            .collect();
        json!({"rows": self.rows, "cols": self.cols, "entries": rows})
    }
}

fn parse_json_entry(entry: &Value) -> std::result::Result<Rational, String> {
    match entry {
        Value::Number(n) => n
            .as_i64()
            .map(rational)
            .or_else(|| n.as_u64().map(|v| Rational::from_integer(BigInt::from(v))))
            .ok_or_else(|| format!("{n} is not an integer")),
        Value::String(s) => parse_rational(s),
        other => Err(format!(
            "expected an integer or a \"p/q\" string, got {other}"
        )),
    }
}

/// Parses `"p"` or `"p/q"` with `q > 0` and `gcd(p, q) = 1`.
pub fn parse_rational(s: &str) -> std::result::Result<Rational, String> {
    let s = s.trim();
    let int = |t: &str| {
        t.trim()
            .parse::<BigInt>()
            .map_err(|_| format!("\"{s}\" is not a rational number"))
    };
    match s.split_once('/') {
        None => Ok(Rational::from_integer(int(s)?)),
        Some((p, q)) => {
            let (p, q) = (int(p)?, int(q)?);
            if !q.is_positive() {
                return Err(format!("\"{s}\" must have a positive denominator"));
            }
            if !p.gcd(&q).is_one() {
                return Err(format!("\"{s}\" is not in lowest terms"));
            }
            Ok(Rational::new_raw(p, q))
        }
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.entries.iter().map(ToString::to_string).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        for i in 0..self.rows {
            let line: Vec<String> = cells[i * self.cols..(i + 1) * self.cols]
                .iter()
                .map(|c| format!("{c:>width$}"))
                .collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// Fraction-free elimination; returns the number of pivots.
fn bareiss_rank(m: &mut [Vec<BigInt>]) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let (top, below) = m.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        let pivot = &pivot_row[c];
        for row in below.iter_mut() {
            let factor = std::mem::take(&mut row[c]);
            for j in c + 1..cols {
                let v = pivot * &row[j] - &factor * &pivot_row[j];
                debug_assert!((&v % &prev).is_zero(), "Bareiss division must be exact");
                row[j] = v / &prev;
            }
        }
        prev = pivot.clone();
        rank += 1;
    }
    rank
}

fn faddeev_leverrier(b: &[Vec<BigInt>], n: usize) -> PolynomialZ {
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    // `am` holds B·M_{k-1}; M_0 = 0.
    let mut am = vec![vec![BigInt::zero(); n]; n];
    for k in 1..=n {
        let mut m = am;
        for (i, row) in m.iter_mut().enumerate() {
            row[i] += &coeffs[n - k + 1];
        }
        am = int_matmul(b, &m);
        let trace: BigInt = (0..n).map(|i| &am[i][i]).sum();
        let (quot, rem) = trace.div_rem(&BigInt::from(k));
        debug_assert!(rem.is_zero(), "Faddeev-LeVerrier trace must divide exactly");
        coeffs[n - k] = -quot;
    }
    PolynomialZ::new(coeffs)
}

fn int_matmul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let n = a.len();
    let m = b.first().map_or(0, Vec::len);
    let mut out = vec![vec![BigInt::zero(); m]; n];
    for i in 0..n {
        for (k, bk) in b.iter().enumerate() {
            let aik = &a[i][k];
            if aik.is_zero() {
                continue;
            }
            for j in 0..m {
                if !bk[j].is_zero() {
                    out[i][j] += aik * &bk[j];
                }
            }
        }
    }
    out
}

/// Integer polynomial, coefficients lowest degree first. Trailing zeros are
/// trimmed, so the zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolynomialZ {
    coeffs: Vec<BigInt>,
}

impl PolynomialZ {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        PolynomialZ { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        PolynomialZ::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `∏ (x - r_i)` for integer roots.
    pub fn from_integer_roots(roots: &[i64]) -> Self {
        let mut poly = PolynomialZ::from_i64(&[1]);
        for &r in roots {
            poly = poly.mul(&PolynomialZ::from_i64(&[-r, 1]));
        }
        poly
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; 0 for the zero polynomial.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn mul(&self, other: &PolynomialZ) -> PolynomialZ {
        if self.is_zero() || other.is_zero() {
            return PolynomialZ::new(Vec::new());
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        PolynomialZ::new(out)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| {
            acc * x + Rational::from_integer(c.clone())
        })
    }

    /// Horner evaluation at a square matrix.
    pub fn eval_matrix(&self, m: &ExactMatrix) -> Result<ExactMatrix> {
        let n = m.require_square()?;
        let mut acc = ExactMatrix::zeros(n, n);
        for c in self.coeffs.iter().rev() {
            acc = acc.matmul(m)?;
            for i in 0..n {
                acc.entries[i * n + i] += Rational::from_integer(c.clone());
            }
        }
        Ok(acc)
    }

    /// Is `a/b` a root? Evaluates `b^d p(a/b)` in integers.
    fn has_root(&self, a: &BigInt, b: &BigInt) -> bool {
        let mut acc = BigInt::zero();
        let mut b_pow = BigInt::one();
        // Horner in the homogenized form Σ c_i a^i b^(d-i).
        for c in self.coeffs.iter().rev() {
            acc = acc * a + c * &b_pow;
            b_pow *= b;
        }
        acc.is_zero()
    }

    /// Exact quotient by `(b x - a)`; caller guarantees `a/b` is a root.
    fn deflate(&self, a: &BigInt, b: &BigInt) -> PolynomialZ {
        let d = self.degree();
        let mut s = vec![BigInt::zero(); d];
        let mut carry = BigInt::zero();
        for i in (1..=d).rev() {
            let v = &self.coeffs[i] + a * &carry;
            debug_assert!((&v % b).is_zero());
            carry = v / b;
            s[i - 1] = carry.clone();
        }
        PolynomialZ::new(s)
    }
}

impl fmt::Display for PolynomialZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            if !mag.is_one() || i == 0 {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

/// Rational roots with multiplicities plus the rootless cofactor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootFactorization {
    /// Distinct rational roots in ascending order.
    pub roots: Vec<(Rational, usize)>,
    /// What is left after dividing out every rational root.
    pub remainder: PolynomialZ,
}

impl RootFactorization {
    pub fn remainder_degree(&self) -> usize {
        self.remainder.degree()
    }
}

/// All rational roots of `p` with multiplicities.
///
/// Candidates `±a/b` come from the divisors of the constant and leading
/// coefficients; each hit is divided out repeatedly. A zero polynomial
/// yields no roots and a zero remainder.
pub fn rational_roots(p: &PolynomialZ) -> RootFactorization {
    let mut roots = Vec::new();
    if p.is_zero() {
        return RootFactorization {
            roots,
            remainder: p.clone(),
        };
    }
    let zeros = p.coeffs.iter().take_while(|c| c.is_zero()).count();
    let mut rest = PolynomialZ::new(p.coeffs[zeros..].to_vec());
    if zeros > 0 {
        roots.push((Rational::zero(), zeros));
    }
    if rest.degree() > 0 {
        let lead = rest.coeffs.last().expect("nonzero").magnitude().clone();
        let constant = rest.coeffs[0].magnitude().clone();
        let numerators = divisors(&constant);
        let denominators = divisors(&lead);
        let mut candidates: Vec<Rational> = Vec::new();
        for a in &numerators {
            for b in &denominators {
                if a.gcd(b).is_one() {
                    let a = BigInt::from_biguint(Sign::Plus, a.clone());
                    let b = BigInt::from_biguint(Sign::Plus, b.clone());
                    candidates.push(Rational::new_raw(-a.clone(), b.clone()));
                    candidates.push(Rational::new_raw(a, b));
                }
            }
        }
        candidates.sort();
        for r in candidates {
            if rest.degree() == 0 {
                break;
            }
            let (a, b) = (r.numer(), r.denom());
            let mut multiplicity = 0;
            while rest.degree() > 0 && rest.has_root(a, b) {
                rest = rest.deflate(a, b);
                multiplicity += 1;
            }
            if multiplicity > 0 {
                roots.push((r, multiplicity));
            }
        }
    }
    roots.sort();
    RootFactorization {
        roots,
        remainder: rest,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(rows: &[&[i64]]) -> ExactMatrix {
        ExactMatrix::from_integers(rows).unwrap()
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    /// Independent rank oracle: plain Gauss-Jordan over the rationals.
    fn gauss_rank(a: &ExactMatrix) -> usize {
        let mut rows: Vec<Vec<Rational>> = (0..a.rows()).map(|i| a.row(i).to_vec()).collect();
        let mut rank = 0;
        for c in 0..a.cols() {
            if let Some(p) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) {
                rows.swap(rank, p);
                let pivot = rows[rank][c].clone();
                let pivot_row = rows[rank].clone();
                for r in 0..rows.len() {
                    if r != rank && !rows[r][c].is_zero() {
                        let f = &rows[r][c] / &pivot;
                        for j in 0..a.cols() {
                            let delta = &f * &pivot_row[j];
                            rows[r][j] -= delta;
                        }
                    }
                }
                rank += 1;
            }
        }
        rank
    }

    fn four_eigenvalue_matrix() -> ExactMatrix {
        // Blocks (2,1) at 1, (3) at 2, (1) at 3, (2,1) at 4.
        let diag = [1, 1, 1, 2, 2, 2, 3, 4, 4, 4];
        let mut a = ExactMatrix::zeros(10, 10);
        for (i, &d) in diag.iter().enumerate() {
            a.set(i, i, rational(d));
        }
        for (r, c) in [(0, 1), (3, 4), (4, 5), (7, 8)] {
            a.set(r, c, rational(1));
        }
        a
    }

    #[test]
    fn rank_examples() {
        assert_eq!(ExactMatrix::identity(10).rank(), 10);
        assert_eq!(ExactMatrix::zeros(3, 3).rank(), 0);
        assert_eq!(
            four_eigenvalue_matrix().shift(&rational(1)).unwrap().rank(),
            8
        );
        assert_eq!(m(&[&[1, 2, 3], &[2, 4, 6]]).rank(), 1);
        assert_eq!(m(&[&[0, 0, 1], &[0, 1, 0]]).rank(), 2);
    }

    #[test]
    fn rank_with_fractions() {
        let a = ExactMatrix::from_rows(vec![vec![q(1, 2), q(1, 3)], vec![q(3, 2), rational(1)]])
            .unwrap();
        assert_eq!(a.rank(), 1);
    }

    #[test]
    fn shift_pow_mul_examples() {
        let a = m(&[&[5, 1], &[0, 5]]);
        assert_eq!(a.shift(&rational(5)).unwrap(), m(&[&[0, 1], &[0, 0]]));
        let n = m(&[&[0, 1], &[0, 0]]);
        assert!(n.pow(2).unwrap().is_zero());
        assert_eq!(n.pow(0).unwrap(), ExactMatrix::identity(2));
        let j = m(&[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]);
        assert!(j.pow(3).unwrap().is_zero());
        assert_eq!(j.pow(2).unwrap().rank(), 1);
        assert_eq!(j.pow(2).unwrap(), j.matmul(&j).unwrap());
    }

    #[test]
    fn dimension_errors() {
        let a = m(&[&[1, 2, 3]]);
        assert!(matches!(a.matmul(&a), Err(Error::DimensionMismatch(_))));
        assert!(matches!(
            a.pow(2),
            Err(Error::NotSquare { rows: 1, cols: 3 })
        ));
        assert!(a.shift(&rational(1)).is_err());
        assert!(a.char_poly().is_err());
        assert!(ExactMatrix::from_integers(&[vec![1, 2], vec![3]]).is_err());
    }

    #[test]
    fn char_poly_examples() {
        assert_eq!(
            m(&[&[1, 0], &[0, 2]]).char_poly().unwrap(),
            PolynomialZ::from_i64(&[2, -3, 1])
        );
        assert_eq!(
            m(&[&[5, 1], &[0, 5]]).char_poly().unwrap(),
            PolynomialZ::from_i64(&[25, -10, 1])
        );
        let expected = PolynomialZ::from_integer_roots(&[1, 1, 1, 2, 2, 2, 3, 4, 4, 4]);
        assert_eq!(four_eigenvalue_matrix().char_poly().unwrap(), expected);
        assert_eq!(expected.to_string().split(' ').next(), Some("x^10"));
    }

    #[test]
    fn char_poly_of_rational_matrix_is_scaled() {
        // diag(1/2, 1/3): d = 6, so the integer matrix is diag(3, 2).
        let a =
            ExactMatrix::from_rows(vec![vec![q(1, 2), rational(0)], vec![rational(0), q(1, 3)]])
                .unwrap();
        assert_eq!(a.denominator_lcm(), BigInt::from(6));
        assert_eq!(a.char_poly().unwrap(), PolynomialZ::from_i64(&[6, -5, 1]));
    }

    #[test]
    fn cayley_hamilton_on_dense_matrix() {
        let a = m(&[
            &[2, -1, 0, 3],
            &[1, 0, 4, -2],
            &[0, 5, 1, 1],
            &[-3, 2, 2, 0],
        ]);
        assert!(a.char_poly().unwrap().eval_matrix(&a).unwrap().is_zero());
    }

    #[test]
    fn root_examples() {
        let r = rational_roots(&PolynomialZ::from_i64(&[2, -3, 1]));
        assert_eq!(r.roots, vec![(rational(1), 1), (rational(2), 1)]);
        assert_eq!(r.remainder_degree(), 0);
        let r = rational_roots(&PolynomialZ::from_i64(&[25, -10, 1]));
        assert_eq!(r.roots, vec![(rational(5), 2)]);
        let r = rational_roots(&PolynomialZ::from_i64(&[1, 0, 1]));
        assert!(r.roots.is_empty());
        assert_eq!(r.remainder_degree(), 2);
    }

    #[test]
    fn roots_with_denominators_zero_and_leftover() {
        // (2x - 1)^2 (3x + 2) x (x^2 - 2)
        let p = PolynomialZ::from_i64(&[-1, 2])
            .mul(&PolynomialZ::from_i64(&[-1, 2]))
            .mul(&PolynomialZ::from_i64(&[2, 3]))
            .mul(&PolynomialZ::from_i64(&[0, 1]))
            .mul(&PolynomialZ::from_i64(&[-2, 0, 1]));
        let r = rational_roots(&p);
        assert_eq!(r.roots, vec![(q(-2, 3), 1), (rational(0), 1), (q(1, 2), 2)]);
        assert_eq!(r.remainder, PolynomialZ::from_i64(&[-2, 0, 1]));
    }

    #[test]
    fn roots_with_large_eigenvalues() {
        let p = PolynomialZ::from_integer_roots(&[1_000_000_007, 1_000_000_007, -999_983, 12]);
        let r = rational_roots(&p);
        assert_eq!(
            r.roots,
            vec![
                (rational(-999_983), 1),
                (rational(12), 1),
                (rational(1_000_000_007), 2)
            ]
        );
    }

    #[test]
    fn json_format() {
        let a = ExactMatrix::from_json_str(
            r#"{"rows": 2, "cols": 2, "entries": [[1, "-2/3"], ["5", 0]]}"#,
        )
        .unwrap();
        assert_eq!(a.get(0, 1), &q(-2, 3));
        assert_eq!(a.get(1, 0), &rational(5));
        assert_eq!(ExactMatrix::from_json(&a.to_json()).unwrap(), a);
        for bad in [
            r#"{"rows": 2, "cols": 2, "entries": [[1, 2], [3]]}"#,
            r#"{"rows": 2, "cols": 2, "entries": [[1, 2]]}"#,
            r#"{"rows": 1, "cols": 1, "entries": [["2/4"]]}"#,
            r#"{"rows": 1, "cols": 1, "entries": [["1/-2"]]}"#,
            r#"{"rows": 1, "cols": 1, "entries": [[1.5]]}"#,
            r#"{"rows": 1, "cols": 1, "entries": [[true]]}"#,
            r#"{"rows": 1, "entries": [[1]]}"#,
            r#"{"rows": 1, "cols": 1, "entries": [[1]]"#,
        ] {
            assert!(ExactMatrix::from_json_str(bad).is_err(), "{bad}");
        }
    }

    fn small_matrix(max_dim: usize) -> impl Strategy<Value = ExactMatrix> {
        (1..=max_dim, 1..=max_dim).prop_flat_map(|(r, c)| {
            prop::collection::vec(-3i64..=3, r * c).prop_map(move |v| {
                ExactMatrix::new(r, c, v.into_iter().map(rational).collect()).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn bareiss_matches_gauss(a in small_matrix(6)) {
            prop_assert_eq!(a.rank(), gauss_rank(&a));
        }

        #[test]
        fn rank_of_product_is_bounded(
            (a, b) in (1usize..=5, 1usize..=5, 1usize..=5).prop_flat_map(|(r, k, c)| (
                prop::collection::vec(-2i64..=2, r * k).prop_map(move |v| ExactMatrix::new(r, k, v.into_iter().map(rational).collect()).unwrap()),
                prop::collection::vec(-2i64..=2, k * c).prop_map(move |v| ExactMatrix::new(k, c, v.into_iter().map(rational).collect()).unwrap()),
            ))
        ) {
            let ab = a.matmul(&b).unwrap();
            prop_assert!(ab.rank() <= a.rank().min(b.rank()));
        }

        #[test]
        fn cayley_hamilton_random(n in 1usize..=6, seed in prop::collection::vec(-4i64..=4, 36)) {
            let a = ExactMatrix::new(n, n, seed[..n * n].iter().map(|&v| rational(v)).collect()).unwrap();
            let p = a.char_poly().unwrap();
            prop_assert_eq!(p.degree(), n);
            prop_assert!(p.eval_matrix(&a).unwrap().is_zero());
        }

        #[test]
        fn root_multiplicities_account_for_degree(roots in prop::collection::vec(-20i64..=20, 1..8), extra in 0usize..3) {
            let mut p = PolynomialZ::from_integer_roots(&roots);
            for _ in 0..extra {
                p = p.mul(&PolynomialZ::from_i64(&[3, 0, 1]));
            }
            let r = rational_roots(&p);
            let total: usize = r.roots.iter().map(|(_, m)| m).sum();
            prop_assert_eq!(total + r.remainder_degree(), p.degree());
            prop_assert_eq!(total, roots.len());
        }
    }
}
