//! Exact linear algebra over rationals and one quadratic extension.

mod builders;
mod quad;

pub use builders::{
    biadjacency, biadjacency_exponents, c913_vertex_map, hankel, k4_eliminator, k6_eliminator,
    orthogonal_hankel, pattern_graph, sequential_normalize, shift_matrix, torus_pattern_map,
    witness_c913, witness_k4, witness_k6,
};
pub use quad::Quad;

use std::fmt;
use std::ops::Range;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::Error;

/// Arbitrary-precision rational scalar: always stored reduced with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

pub fn rat(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Exact square root of a nonnegative rational, when one exists.
pub fn sqrt_exact(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let sn = r.numer().sqrt();
    let sd = r.denom().sqrt();
    (&sn * &sn == *r.numer() && &sd * &sd == *r.denom()).then(|| Rational::new(sn, sd))
}

/// Scalar operations the elimination needs. `div` may assume the divisor
/// is nonzero and invertible; callers route degenerate contexts elsewhere.
pub trait FieldScalar: Clone + PartialEq + fmt::Debug {
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn div(&self, other: &Self) -> Self;
    fn zero_like(&self) -> Self;
}

impl FieldScalar for Rational {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn div(&self, other: &Self) -> Self {
        self / other
    }
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
}

/// Dense rectangular matrix with exact scalar entries, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Clone> Matrix<T> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self, Error> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        if rows.iter().any(|x| x.len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        assert!(i < self.rows && j < self.cols);
        self.data[i * self.cols + j] = v;
    }

    pub fn transpose(&self) -> Matrix<T> {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn map<U: Clone>(&self, mut f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(&mut f).collect(),
        }
    }

    pub fn submatrix(&self, rows: Range<usize>, cols: Range<usize>) -> Matrix<T> {
        assert!(rows.end <= self.rows && cols.end <= self.cols);
        Matrix::from_fn(rows.len(), cols.len(), |i, j| {
            self.get(rows.start + i, cols.start + j).clone()
        })
    }

    /// Stack a grid of equally-shaped blocks into one matrix.
    pub fn assemble(blocks: &[Vec<&Matrix<T>>]) -> Result<Matrix<T>, Error> {
        if blocks.is_empty() || blocks[0].is_empty() {
            return Err(Error::Dimension("empty block grid".into()));
        }
        let bw = blocks[0].len();
        let (br, bc) = (blocks[0][0].rows, blocks[0][0].cols);
        for row in blocks {
            if row.len() != bw || row.iter().any(|b| b.rows != br || b.cols != bc) {
                return Err(Error::Dimension("blocks must form a regular grid".into()));
            }
        }
        Ok(Matrix::from_fn(blocks.len() * br, bw * bc, |i, j| {
            blocks[i / br][j / bc].get(i % br, j % bc).clone()
        }))
    }
}

impl<T: FieldScalar> Matrix<T> {
    pub fn mul(&self, other: &Matrix<T>) -> Result<Matrix<T>, Error> {
        if self.cols != other.rows || self.cols == 0 {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Matrix::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = self.get(i, 0).mul(other.get(0, j));
            for k in 1..self.cols {
                acc = acc.add(&self.get(i, k).mul(other.get(k, j)));
            }
            acc
        }))
    }

    pub fn add(&self, other: &Matrix<T>) -> Result<Matrix<T>, Error> {
        self.zip(other, |a, b| a.add(b))
    }

    pub fn sub(&self, other: &Matrix<T>) -> Result<Matrix<T>, Error> {
        self.zip(other, |a, b| a.sub(b))
    }

    fn zip(&self, other: &Matrix<T>, f: impl Fn(&T, &T) -> T) -> Result<Matrix<T>, Error> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Dimension(format!(
                "shape mismatch: {}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Matrix::from_fn(self.rows, self.cols, |i, j| {
            f(self.get(i, j), other.get(i, j))
        }))
    }

    pub fn scale(&self, c: &T) -> Matrix<T> {
        self.map(|x| x.mul(c))
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn is_zero_matrix(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    /// Exact rank by Gaussian elimination with first-nonzero pivoting.
    /// Sound whenever the scalars form a field; the quadratic type routes
    /// degenerate contexts through rational evaluation instead.
    fn rank_by_elimination(&self) -> usize {
        let mut m: Vec<Vec<T>> = (0..self.rows)
            .map(|i| self.data[i * self.cols..(i + 1) * self.cols].to_vec())
            .collect();
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(p) = (rank..self.rows).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(rank, p);
            let (pivot_row, rest) = m[rank..].split_first_mut().expect("nonempty");
            for row in rest {
                if row[col].is_zero() {
                    continue;
                }
                let f = row[col].div(&pivot_row[col]);
                for c in col..self.cols {
                    row[c] = row[c].sub(&pivot_row[c].mul(&f));
                }
            }
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        rank
    }
}

impl Matrix<Rational> {
    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { rat(1) } else { rat(0) })
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix::from_fn(rows, cols, |_, _| rat(0))
    }

    pub fn rank(&self) -> usize {
        self.rank_by_elimination()
    }

    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }
}

impl Matrix<Quad> {
    /// The shared context `d`, checked for uniformity.
    pub fn context(&self) -> Result<Rational, Error> {
        let mut it = self.data.iter();
        let first = it
            .next()
            .ok_or_else(|| Error::Dimension("empty matrix has no context".into()))?;
        for q in it {
            if q.d != first.d {
                return Err(Error::ContextMismatch {
                    left: first.d.to_string(),
                    right: q.d.to_string(),
                });
            }
        }
        Ok(first.d.clone())
    }

    /// Substitute the exact square root of the context, turning each
    /// `a + b sqrt(d)` into the rational `a + b s`.
    pub fn evaluate(&self, sqrt_d: &Rational) -> Matrix<Rational> {
        self.map(|q| &q.a + &q.b * sqrt_d)
    }

    /// Exact rank. A perfect-square context makes `a + b sqrt(d)` plain
    /// rationals (the extension has zero divisors, so elimination cannot
    /// divide there); otherwise Q(sqrt(d)) is a field and elimination
    /// runs directly.
    pub fn rank(&self) -> usize {
        if self.data.is_empty() {
            return 0;
        }
        let d = self.context().expect("uniform context");
        match sqrt_exact(&d) {
            Some(s) => self.evaluate(&s).rank(),
            None => self.rank_by_elimination(),
        }
    }

    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }
}

impl<T: fmt::Display> Matrix<T> {
    /// Textual export: one row per line, entries space-separated, each in
    /// the exact `p/q` (or `p/q+r/s*sqrt(D)`) grammar.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for i in 0..self.rows {
            for j in 0..self.cols {
                if j > 0 {
                    out.push(' ');
                }
                out.push_str(&self.data[i * self.cols + j].to_string());
            }
            out.push('\n');
        }
        out
    }
}

impl<T: fmt::Display> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix({}x{})\n{}", self.rows, self.cols, self.to_text())
    }
}

/// A matrix read back from the textual grammar.
pub enum ParsedMatrix {
    Rational(Matrix<Rational>),
    Quad(Matrix<Quad>),
}

/// Parse the export grammar. Rows are lines; an entry mentioning
/// `sqrt(D)` anywhere makes the whole matrix quadratic, and every entry
/// must then share the same `D`.
pub fn parse_matrix(text: &str) -> Result<ParsedMatrix, Error> {
    let mut rat_rows: Vec<Vec<Rational>> = Vec::new();
    let mut quad_rows: Vec<Vec<Quad>> = Vec::new();
    let is_quad = text.contains("sqrt");
    for (ln, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let mut rrow = Vec::new();
        let mut qrow = Vec::new();
        for (tn, tok) in line.split_whitespace().enumerate() {
            let at = |msg: &str| Error::parse(ln + 1, tn + 1, msg);
            if is_quad {
                qrow.push(quad::parse_quad(tok).map_err(|m| at(&m))?);
            } else {
                rrow.push(parse_rational(tok).map_err(|m| at(&m))?);
            }
        }
        if is_quad {
            quad_rows.push(qrow);
        } else {
            rat_rows.push(rrow);
        }
    }
    if is_quad {
        // entries written without a sqrt part inherit the shared context
        let d = quad_rows
            .iter()
            .flatten()
            .find(|q| !Zero::is_zero(&q.d))
            .map(|q| q.d.clone())
            .ok_or_else(|| Error::parse(1, 1, "no sqrt context found"))?;
        for row in &mut quad_rows {
            for q in row.iter_mut() {
                if Zero::is_zero(&q.d) {
                    q.d = d.clone();
                } else if q.d != d {
                    return Err(Error::ContextMismatch {
                        left: d.to_string(),
                        right: q.d.to_string(),
                    });
                }
            }
        }
        Ok(ParsedMatrix::Quad(Matrix::from_rows(quad_rows)?))
    } else {
        Ok(ParsedMatrix::Rational(Matrix::from_rows(rat_rows)?))
    }
}

pub(crate) fn parse_rational(tok: &str) -> Result<Rational, String> {
    tok.parse::<Rational>()
        .map_err(|_| format!("bad rational '{tok}'"))
}
