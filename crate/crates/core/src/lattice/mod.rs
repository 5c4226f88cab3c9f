//! Integer lattices `Z^n`, their finite quotients, and characters of sublattices.
//!
//! Lattice elements are row vectors; a matrix `P` acts by `λ ↦ λ Pᵗ`.

mod admissible;
mod character;
mod quotient;
mod skew;
mod snf;

use std::fmt;
use std::ops::{Index, IndexMut};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub use admissible::{induced_quotient_iso, is_admissible, mprime_transpose, QuotientIso};
pub use character::{lattice_character_eval, Character};
pub use quotient::{BarElement, BarGroup, QuotientMap};
pub use skew::{skew_normal_form, SkewNormalForm};
pub use snf::{smith_normal_form, Smith};

/// Integer matrix with arbitrary-precision entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn diag(d: &[i64]) -> Self {
        let mut m = Self::zeros(d.len(), d.len());
        for (i, &v) in d.iter().enumerate() {
            m[(i, i)] = BigInt::from(v);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged integer matrix".into()));
        }
        Ok(IntMatrix {
            rows: r,
            cols: c,
            data: rows.iter().flatten().map(|&v| BigInt::from(v)).collect(),
        })
    }

    /// Convenience constructor for literals; panics on ragged input.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
            .expect("rectangular literal")
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_i64(&self, i: usize) -> Vec<i64> {
        self.row(i)
            .iter()
            .map(|v| v.to_i64().expect("lattice coordinate overflow"))
            .collect()
    }

    pub fn to_i64_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows).map(|i| self.row_i64(i)).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "integer matrix shape mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let add = a * &other[(k, j)];
                    out[(i, j)] += add;
                }
            }
        }
        out
    }

    /// Row vector times matrix: `v M`.
    pub fn apply_row(&self, v: &[i64]) -> Vec<i64> {
        assert_eq!(v.len(), self.rows, "row vector length mismatch");
        (0..self.cols)
            .map(|j| {
                let mut s = BigInt::zero();
                for (i, &x) in v.iter().enumerate() {
                    if x != 0 {
                        s += &self[(i, j)] * x;
                    }
                }
                s.to_i64().expect("lattice coordinate overflow")
            })
            .collect()
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> BigInt {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[(k, k)].is_zero() {
                let Some(p) = (k + 1..n).find(|&r| !a[(r, k)].is_zero()) else {
                    return BigInt::zero();
                };
                a.swap_rows(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)]) / &prev;
                    a[(i, j)] = v;
                }
            }
            prev = a[(k, k)].clone();
        }
        sign * &a[(n - 1, n - 1)]
    }

    pub fn is_unimodular(&self) -> bool {
        self.is_square() && self.det().abs().is_one()
    }

    /// Exact rational inverse, `None` when singular.
    pub fn rational_inverse(&self) -> Option<Vec<Vec<BigRational>>> {
        assert!(self.is_square());
        let n = self.rows;
        let mut a: Vec<Vec<BigRational>> = (0..n)
            .map(|i| {
                let mut row: Vec<BigRational> = self
                    .row(i)
                    .iter()
                    .map(|v| BigRational::from_integer(v.clone()))
                    .collect();
                row.extend((0..n).map(|j| {
                    if i == j {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                }));
                row
            })
            .collect();
        for col in 0..n {
            let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
            a.swap(piv, col);
            let p = a[col][col].clone();
            for v in a[col].iter_mut() {
                *v = &*v / &p;
            }
            for r in 0..n {
                if r != col && !a[r][col].is_zero() {
                    let f = a[r][col].clone();
                    let src = a[col].clone();
                    for (x, s) in a[r].iter_mut().zip(src) {
                        *x = &*x - &(&f * &s);
                    }
                }
            }
        }
        Some(a.into_iter().map(|row| row[n..].to_vec()).collect())
    }

    /// Inverse of a unimodular matrix.
    pub fn inverse_unimodular(&self) -> Result<IntMatrix> {
        if !self.is_unimodular() {
            return Err(Error::NotUnimodular);
        }
        let inv = self.rational_inverse().ok_or(Error::NotUnimodular)?;
        let mut out = Self::zeros(self.rows, self.cols);
        for (i, row) in inv.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                out[(i, j)] = v.to_integer();
            }
        }
        Ok(out)
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub(crate) fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// `row_target += c * row_src`
    pub(crate) fn add_row(&mut self, target: usize, src: usize, c: &BigInt) {
        for j in 0..self.cols {
            let add = &self[(src, j)] * c;
            self[(target, j)] += add;
        }
    }

    /// `col_target += c * col_src`
    pub(crate) fn add_col(&mut self, target: usize, src: usize, c: &BigInt) {
        for i in 0..self.rows {
            let add = &self[(i, src)] * c;
            self[(i, target)] += add;
        }
    }

    pub(crate) fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            let v = -&self[(r, j)];
            self[(r, j)] = v;
        }
    }

    /// Stacks the rows of `self` on top of the rows of `other`.
    pub fn stack(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        IntMatrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn from_row_vectors(rows: &[Vec<i64>], ncols: usize) -> IntMatrix {
        if rows.is_empty() {
            return IntMatrix::zeros(0, ncols);
        }
        Self::from_rows(rows).expect("rectangular")
    }

    /// Block diagonal sum.
    pub fn direct_sum(&self, other: &IntMatrix) -> IntMatrix {
        let mut m = Self::zeros(self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(i, j)] = self[(i, j)].clone();
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                m[(self.rows + i, self.cols + j)] = other[(i, j)].clone();
            }
        }
        m
    }
}

/// Rows separated by `;`, entries by whitespace: `2 1;3 2`.
impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ";")?;
            }
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            write!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

impl FromStr for IntMatrix {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let rows = s
            .split(';')
            .map(|r| {
                r.split_whitespace()
                    .map(|t| {
                        t.parse::<i64>()
                            .map_err(|_| Error::Invalid(format!("bad integer `{t}`")))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        if rows.is_empty() || rows[0].is_empty() {
            return Err(Error::Invalid("empty matrix".into()));
        }
        Self::from_rows(&rows)
    }
}

/// A `Z`-basis (as matrix rows) of the sublattice generated by the given rows.
pub fn lattice_basis(generators: &IntMatrix) -> IntMatrix {
    let Smith { d, v, .. } = smith_normal_form(generators);
    let vinv = v.inverse_unimodular().expect("V is unimodular");
    let n = generators.ncols();
    let mut rows = Vec::new();
    for i in 0..d.nrows().min(d.ncols()) {
        let di = &d[(i, i)];
        if di.is_zero() {
            continue;
        }
        let row: Vec<i64> = (0..n)
            .map(|j| (di * &vinv[(i, j)]).to_i64().expect("overflow"))
            .collect();
        rows.push(row);
    }
    IntMatrix::from_row_vectors(&rows, n)
}

/// Rank of the generated sublattice and, when it has full rank, its index in `Z^n`.
pub fn sublattice_index(generators: &IntMatrix) -> (usize, Option<BigInt>) {
    let Smith { d, .. } = smith_normal_form(generators);
    let diag: Vec<BigInt> = (0..d.nrows().min(d.ncols()))
        .map(|i| d[(i, i)].clone())
        .filter(|x| !x.is_zero())
        .collect();
    let rank = diag.len();
    let idx = if rank == generators.ncols() {
        Some(diag.iter().product())
    } else {
        None
    };
    (rank, idx)
}

/// Whether the rows generate all of `Z^n`.
pub fn generates_full_lattice(generators: &IntMatrix) -> bool {
    matches!(sublattice_index(generators), (_, Some(i)) if i.is_one())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn det_and_inverse() {
        let p = IntMatrix::from_i64(&[&[2, 1], &[3, 2]]);
        assert_eq!(p.det(), BigInt::one());
        let inv = p.inverse_unimodular().unwrap();
        assert_eq!(p.mul(&inv), IntMatrix::identity(2));
        assert_eq!(
            IntMatrix::from_i64(&[&[2, 0], &[0, 1]]).inverse_unimodular(),
            Err(Error::NotUnimodular)
        );
        let m = IntMatrix::from_i64(&[&[0, 2, 1], &[1, 0, 0], &[3, 1, 5]]);
        assert_eq!(m.det(), BigInt::from(-9));
    }

    #[test]
    fn parse_display() {
        let p: IntMatrix = "2 1;3 2".parse().unwrap();
        assert_eq!(p, IntMatrix::from_i64(&[&[2, 1], &[3, 2]]));
        assert_eq!(p.to_string(), "2 1;3 2");
        assert!("1 2;3".parse::<IntMatrix>().is_err());
    }

    #[test]
    fn sublattice_of_even_sum() {
        let g = IntMatrix::from_i64(&[&[1, 1], &[2, 0], &[0, 2]]);
        assert_eq!(sublattice_index(&g), (2, Some(BigInt::from(2))));
        assert!(!generates_full_lattice(&g));
        let b = lattice_basis(&g);
        assert_eq!(b.nrows(), 2);
        assert_eq!(b.det().abs(), BigInt::from(2));
    }
}
