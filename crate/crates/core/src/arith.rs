//! Exact integer and rational arithmetic.
//!
//! Every comparison the pipeline makes (squared distances, squared radii,
//! Gram entries, ranks) is carried out here without rounding. Rank and
//! positive-semidefiniteness use fraction-free (Bareiss) elimination on the
//! matrix after clearing denominators, so intermediate entries stay integral
//! and bounded by minors of the input.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("{0} is not a perfect square")]
    NotASquare(BigInt),
    #[error("square root of negative integer {0}")]
    Negative(BigInt),
    #[error("matrix is not symmetric (first asymmetry at ({0}, {1}))")]
    NotSymmetric(usize, usize),
    #[error("matrix dimension mismatch: {0}")]
    Shape(String),
    #[error("cannot parse rational {0:?}")]
    Parse(String),
}

/// `n / d` as a reduced rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Formats as `p/q`, or `p` for integers.
pub fn format_rational(x: &Rational) -> String {
    x.to_string()
}

/// Parses `p/q` or `p`. A zero denominator is rejected rather than panicking.
pub fn parse_rational(s: &str) -> Result<Rational, ArithError> {
    let err = || ArithError::Parse(s.to_string());
    let t = s.trim();
    match t.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| err())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| err())?;
            if d.is_zero() {
                return Err(err());
            }
            Ok(Rational::new(n, d))
        }
        None => BigInt::from_str(t)
            .map(Rational::from_integer)
            .map_err(|_| err()),
    }
}

/// Returns `m` with `m * m == n`, or `NotASquare`.
pub fn isqrt_exact(n: &BigInt) -> Result<BigInt, ArithError> {
    if n.is_negative() {
        return Err(ArithError::Negative(n.clone()));
    }
    let m = n.sqrt();
    if &m * &m == *n {
        Ok(m)
    } else {
        Err(ArithError::NotASquare(n.clone()))
    }
}

/// Machine-word convenience wrapper around [`isqrt_exact`].
pub fn isqrt_exact_i64(n: i64) -> Result<i64, ArithError> {
    isqrt_exact(&BigInt::from(n)).map(|m| m.to_i64().expect("sqrt of an i64 fits in i64"))
}

/// Dense row-major rational matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RationalMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(format_rational).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { Rational::one() } else { Rational::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    /// Builds a matrix from nested rows; all rows must have equal length.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self, ArithError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(ArithError::Shape("ragged rows".into()));
        }
        Ok(Self {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self, ArithError> {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect())
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

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Rational) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// First `(i, j)` with `m[i][j] != m[j][i]`, scanning the upper triangle row by row.
    pub fn first_asymmetry(&self) -> Option<(usize, usize)> {
        if !self.is_square() {
            return Some((0, 0));
        }
        (0..self.rows)
            .flat_map(|i| (i + 1..self.cols).map(move |j| (i, j)))
            .find(|&(i, j)| self.get(i, j) != self.get(j, i))
    }

    pub fn is_symmetric(&self) -> bool {
        self.first_asymmetry().is_none()
    }

    pub fn mul(&self, other: &Self) -> Result<Self, ArithError> {
        if self.cols != other.rows {
            return Err(ArithError::Shape(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Self::from_fn(self.rows, other.cols, |i, j| {
            (0..self.cols).fold(Rational::zero(), |acc, t| acc + self.get(i, t) * other.get(t, j))
        }))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    /// Integer matrix `L * self` where `L` is the lcm of all denominators.
    fn to_integer_rows(&self) -> Vec<Vec<BigInt>> {
        let lcm = self
            .data
            .iter()
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .map(|x| x.numer() * (&lcm / x.denom()))
                    .collect()
            })
            .collect()
    }

    pub fn rank(&self) -> usize {
        rank(self)
    }

    pub fn is_positive_semidefinite(&self) -> Result<bool, ArithError> {
        is_positive_semidefinite(self)
    }
}

/// Exact rank by fraction-free Bareiss elimination with row pivoting.
pub fn rank(m: &RationalMatrix) -> usize {
    let mut a = m.to_integer_rows();
    let (rows, cols) = (m.rows, m.cols);
    let mut rank = 0;
    let mut prev = BigInt::one();
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let (top, bottom) = a.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        let pivot = &pivot_row[c];
        for row in bottom.iter_mut() {
            if row[c].is_zero() {
                // (pivot * x - 0 * y) / prev
                for x in row[c + 1..].iter_mut() {
                    if !x.is_zero() {
                        *x = (&*x * pivot) / &prev;
                    }
                }
            } else {
                let lead = std::mem::take(&mut row[c]);
                for j in c + 1..cols {
                    row[j] = (pivot * &row[j] - &lead * &pivot_row[j]) / &prev;
                }
            }
        }
        prev = pivot.clone();
        rank += 1;
    }
    rank
}

/// Exact positive-semidefiniteness test.
///
/// Symmetric fraction-free elimination choosing diagonal pivots only. After
/// `k` positive pivots the remaining block equals `det(A11)` times the Schur
/// complement, so a negative remaining diagonal entry, or an all-zero
/// remaining diagonal with a nonzero off-diagonal entry, certifies a negative
/// principal minor.
pub fn is_positive_semidefinite(m: &RationalMatrix) -> Result<bool, ArithError> {
    if let Some((i, j)) = m.first_asymmetry() {
        return Err(ArithError::NotSymmetric(i, j));
    }
    let n = m.rows;
    let mut a = m.to_integer_rows();
    let mut prev = BigInt::one();
    for k in 0..n {
        let mut pivot = None;
        for j in k..n {
            if a[j][j].is_negative() {
                return Ok(false);
            }
            if pivot.is_none() && a[j][j].is_positive() {
                pivot = Some(j);
            }
        }
        let Some(p) = pivot else {
            let rest_zero = (k..n).all(|i| (k..n).all(|j| a[i][j].is_zero()));
            return Ok(rest_zero);
        };
        a.swap(k, p);
        for row in a.iter_mut() {
            row.swap(k, p);
        }
        let (top, bottom) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        let piv = &pivot_row[k];
        for row in bottom.iter_mut() {
            let lead = row[k].clone();
            for j in k + 1..n {
                if lead.is_zero() {
                    if !row[j].is_zero() {
                        row[j] = (&row[j] * piv) / &prev;
                    }
                } else {
                    row[j] = (piv * &row[j] - &lead * &pivot_row[j]) / &prev;
                }
            }
        }
        prev = piv.clone();
    }
    Ok(true)
}
