use std::fmt;
use std::ops::{Add, Mul, Sub};

use super::ExactComplex;
use crate::error::{Error, Result};

/// Dense `n × n` matrix over [`ExactComplex`], row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SquareMatrix {
    dim: usize,
    entries: Vec<ExactComplex>,
}

impl SquareMatrix {
    pub fn zeros(dim: usize) -> Self {
        assert!(dim > 0, "matrix dimension must be positive");
        Self { dim, entries: vec![ExactComplex::zero(); dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.entries[i * dim + i] = ExactComplex::one();
        }
        m
    }

    pub fn scalar(dim: usize, c: &ExactComplex) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.entries[i * dim + i] = c.clone();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<ExactComplex>>) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 {
            return Err(Error::DimensionMismatch { left: 0, right: 1 });
        }
        let mut entries = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(Error::DimensionMismatch { left: dim, right: row.len() });
            }
            entries.extend(row);
        }
        Ok(Self { dim, entries })
    }

    /// Integer-entry convenience constructor, mostly for fixtures.
    pub fn from_i64_rows<const N: usize>(rows: [[i64; N]; N]) -> Self {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&x| ExactComplex::from(x)).collect())
            .collect();
        Self::from_rows(rows).expect("square by construction")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &ExactComplex {
        &self.entries[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: ExactComplex) {
        self.entries[row * self.dim + col] = value;
    }

    pub fn rows(&self) -> impl Iterator<Item = &[ExactComplex]> {
        self.entries.chunks(self.dim)
    }

    pub fn is_identity(&self) -> bool {
        self.rows().enumerate().all(|(i, row)| {
            row.iter()
                .enumerate()
                .all(|(j, x)| if i == j { x.is_one() } else { x.is_zero() })
        })
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(ExactComplex::is_zero)
    }

    /// `Some(c)` when the matrix equals `c·I`.
    pub fn as_scalar(&self) -> Option<ExactComplex> {
        let c = self.get(0, 0);
        let ok = self.rows().enumerate().all(|(i, row)| {
            row.iter()
                .enumerate()
                .all(|(j, x)| if i == j { x == c } else { x.is_zero() })
        });
        ok.then(|| c.clone())
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim == other.dim {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { left: self.dim, right: other.dim })
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect();
        Ok(Self { dim: self.dim, entries })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect();
        Ok(Self { dim: self.dim, entries })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let n = self.dim;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            let row = &self.entries[i * n..(i + 1) * n];
            for j in 0..n {
                let mut acc = ExactComplex::zero();
                for (k, a) in row.iter().enumerate() {
                    let b = &other.entries[k * n + j];
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                entries.push(acc);
            }
        }
        Ok(Self { dim: n, entries })
    }

    pub fn scale(&self, c: &ExactComplex) -> Self {
        Self { dim: self.dim, entries: self.entries.iter().map(|x| x * c).collect() }
    }

    /// Binary exponentiation; `M⁰ = I`.
    pub fn pow(&self, mut exp: u64) -> Self {
        let mut acc = Self::identity(self.dim);
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn trace(&self) -> ExactComplex {
        (0..self.dim).map(|i| self.get(i, i).clone()).sum()
    }

    /// Determinant: direct formula for 2×2, fraction-free Bareiss elimination otherwise.
    pub fn det(&self) -> ExactComplex {
        match self.dim {
            1 => self.entries[0].clone(),
            2 => &(self.get(0, 0) * self.get(1, 1)) - &(self.get(0, 1) * self.get(1, 0)),
            _ => self.det_bareiss(),
        }
    }

    fn det_bareiss(&self) -> ExactComplex {
        let n = self.dim;
        let mut m: Vec<Vec<ExactComplex>> = self.rows().map(<[_]>::to_vec).collect();
        let mut negate = false;
        let mut prev = ExactComplex::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                    Some(r) => {
                        m.swap(k, r);
                        negate = !negate;
                    }
                    None => return ExactComplex::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                    // Exact: the previous pivot divides every updated entry.
                    m[i][j] = num.checked_div(&prev).expect("pivot is nonzero");
                }
            }
            prev = m[k][k].clone();
        }
        let d = m[n - 1][n - 1].clone();
        if negate {
            -d
        } else {
            d
        }
    }
}

impl Mul<&SquareMatrix> for &SquareMatrix {
    type Output = SquareMatrix;

    /// Panics on dimension mismatch; see [`SquareMatrix::checked_mul`].
    fn mul(self, rhs: &SquareMatrix) -> SquareMatrix {
        self.checked_mul(rhs).expect("matrix dimensions must agree")
    }
}

impl Add<&SquareMatrix> for &SquareMatrix {
    type Output = SquareMatrix;
    fn add(self, rhs: &SquareMatrix) -> SquareMatrix {
        self.checked_add(rhs).expect("matrix dimensions must agree")
    }
}

impl Sub<&SquareMatrix> for &SquareMatrix {
    type Output = SquareMatrix;
    fn sub(self, rhs: &SquareMatrix) -> SquareMatrix {
        self.checked_sub(rhs).expect("matrix dimensions must agree")
    }
}

impl fmt::Display for SquareMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.entries.iter().map(ToString::to_string).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        for (i, row) in cells.chunks(self.dim).enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            f.write_str("[")?;
            for (j, cell) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{cell:>width$}")?;
            }
            f.write_str("]")?;
        }
        Ok(())
    }
}
