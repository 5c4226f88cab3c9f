//! Dense matrices and incremental sparse row reduction over [`CycloNumber`].

use std::collections::BTreeMap;
use std::ops::{Index, IndexMut};

use crate::cyclo::CycloNumber;
use crate::error::{Error, Result};

pub type Vector = Vec<CycloNumber>;

pub fn zero_vector(n: usize) -> Vector {
    vec![CycloNumber::zero(); n]
}

pub fn unit_vector(n: usize, i: usize) -> Vector {
    let mut v = zero_vector(n);
    v[i] = CycloNumber::one();
    v
}

pub fn is_zero_vector(v: &[CycloNumber]) -> bool {
    v.iter().all(CycloNumber::is_zero)
}

pub fn scale_vector(c: &CycloNumber, v: &[CycloNumber]) -> Vector {
    v.iter().map(|x| c * x).collect()
}

pub fn add_vectors(a: &[CycloNumber], b: &[CycloNumber]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// Sparse row: `(column, value)` pairs with nonzero values, sorted by column.
pub type SparseRow = Vec<(usize, CycloNumber)>;

/// Row echelon form built one equation at a time.
///
/// Stored rows have a leading 1 in their pivot column and no entries to its left.
#[derive(Clone, Debug)]
pub struct SparseEchelon {
    ncols: usize,
    rows: Vec<BTreeMap<usize, CycloNumber>>,
    pivot_row: Vec<Option<usize>>,
}

impl SparseEchelon {
    pub fn new(ncols: usize) -> Self {
        SparseEchelon {
            ncols,
            rows: Vec::new(),
            pivot_row: vec![None; ncols],
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ncols
    }

    fn reduce(&self, mut work: BTreeMap<usize, CycloNumber>) -> BTreeMap<usize, CycloNumber> {
        let mut start = 0;
        loop {
            let next = work
                .range(start..)
                .find(|(c, _)| self.pivot_row[**c].is_some())
                .map(|(c, v)| (*c, v.clone()));
            let Some((col, coef)) = next else { break };
            let prow = &self.rows[self.pivot_row[col].expect("pivot")];
            for (j, v) in prow {
                let e = work.entry(*j).or_default();
                *e = &*e - &(&coef * v);
                if e.is_zero() {
                    work.remove(j);
                }
            }
            start = col + 1;
        }
        work
    }

    /// Reduces a row against the echelon form; returns what is left.
    pub fn residual(&self, row: &[(usize, CycloNumber)]) -> SparseRow {
        let work: BTreeMap<usize, CycloNumber> = row
            .iter()
            .filter(|(_, v)| !v.is_zero())
            .map(|(c, v)| (*c, v.clone()))
            .collect();
        self.reduce(work).into_iter().collect()
    }

    /// Adds an equation; returns `true` when it was independent of the previous ones.
    pub fn add_row(&mut self, row: &[(usize, CycloNumber)]) -> bool {
        let work: BTreeMap<usize, CycloNumber> = row
            .iter()
            .filter(|(_, v)| !v.is_zero())
            .map(|(c, v)| (*c, v.clone()))
            .collect();
        let mut work = self.reduce(work);
        let Some((&lead, lv)) = work.iter().next() else {
            return false;
        };
        let inv = lv.inv().expect("nonzero leading entry");
        for v in work.values_mut() {
            *v = &*v * &inv;
        }
        work.insert(lead, CycloNumber::one());
        self.pivot_row[lead] = Some(self.rows.len());
        self.rows.push(work);
        true
    }

    pub fn add_dense_row(&mut self, row: &[CycloNumber]) -> bool {
        let sparse: SparseRow = row
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(i, v)| (i, v.clone()))
            .collect();
        self.add_row(&sparse)
    }

    pub fn contains_dense(&self, row: &[CycloNumber]) -> bool {
        let sparse: SparseRow = row
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(i, v)| (i, v.clone()))
            .collect();
        self.residual(&sparse).is_empty()
    }

    pub fn pivot_columns(&self) -> Vec<usize> {
        (0..self.ncols)
            .filter(|c| self.pivot_row[*c].is_some())
            .collect()
    }

    /// Reduced row echelon basis of the row space, ordered by pivot column.
    pub fn reduced_basis(&self) -> Vec<Vector> {
        let pivots = self.pivot_columns();
        let mut rows: Vec<Vector> = pivots
            .iter()
            .map(|&p| {
                let mut v = zero_vector(self.ncols);
                for (j, x) in &self.rows[self.pivot_row[p].expect("pivot")] {
                    v[*j] = x.clone();
                }
                v
            })
            .collect();
        for (a, &p) in pivots.iter().enumerate().rev() {
            let src = rows[a].clone();
            for row in rows.iter_mut().take(a) {
                let c = row[p].clone();
                if c.is_zero() {
                    continue;
                }
                for (x, s) in row.iter_mut().zip(&src) {
                    if !s.is_zero() {
                        *x = &*x - &(&c * s);
                    }
                }
            }
        }
        rows
    }

    /// Basis of the solution space of the accumulated homogeneous system.
    ///
    /// One vector per free column `f`, with a 1 in position `f` and zeros in the other free
    /// columns.
    pub fn kernel(&self) -> Vec<Vector> {
        let pivots: Vec<usize> = self.pivot_columns();
        let mut out = Vec::new();
        for f in (0..self.ncols).filter(|c| self.pivot_row[*c].is_none()) {
            let mut x = zero_vector(self.ncols);
            x[f] = CycloNumber::one();
            for &p in pivots.iter().rev() {
                if p > f {
                    continue;
                }
                let row = &self.rows[self.pivot_row[p].expect("pivot")];
                let mut s = CycloNumber::zero();
                for (j, v) in row.range(p + 1..) {
                    if !x[*j].is_zero() {
                        s = &s + &(v * &x[*j]);
                    }
                }
                x[p] = -s;
            }
            out.push(x);
        }
        out
    }
}

/// Dense row-major matrix over the cyclotomic numbers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<CycloNumber>,
}

impl Index<(usize, usize)> for Matrix {
    type Output = CycloNumber;
    fn index(&self, (i, j): (usize, usize)) -> &CycloNumber {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut CycloNumber {
        &mut self.data[i * self.cols + j]
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![CycloNumber::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = CycloNumber::one();
        }
        m
    }

    pub fn scalar(n: usize, c: &CycloNumber) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = c.clone();
        }
        m
    }

    pub fn diagonal(d: &[CycloNumber]) -> Self {
        let mut m = Self::zeros(d.len(), d.len());
        for (i, c) in d.iter().enumerate() {
            m[(i, i)] = c.clone();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vector>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged matrix rows".into()));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| CycloNumber::from_int(v)).collect())
                .collect(),
        )
        .expect("rectangular")
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[Vector], nrows: usize) -> Self {
        let mut m = Self::zeros(nrows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            for (i, v) in c.iter().enumerate() {
                m[(i, j)] = v.clone();
            }
        }
        m
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

    pub fn row(&self, i: usize) -> &[CycloNumber] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn entries(&self) -> &[CycloNumber] {
        &self.data
    }

    /// Entries in row-major order as a flat vector (used to treat maps as vectors).
    pub fn to_flat(&self) -> Vector {
        self.data.clone()
    }

    pub fn from_flat(rows: usize, cols: usize, data: Vector) -> Self {
        assert_eq!(data.len(), rows * cols);
        Matrix { rows, cols, data }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(CycloNumber::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let v = &self[(i, j)];
                    if i == j {
                        v.is_one()
                    } else {
                        v.is_zero()
                    }
                })
            })
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

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
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
                        let idx = i * out.cols + j;
                        out.data[idx] = &out.data[idx] + &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[CycloNumber]) -> Vector {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        let mut out = zero_vector(self.rows);
        for (k, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, o) in out.iter_mut().enumerate() {
                let a = &self[(i, k)];
                if !a.is_zero() {
                    *o = &*o + &(a * x);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, c: &CycloNumber) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    pub fn pow(&self, e: u64) -> Matrix {
        assert!(self.is_square());
        let mut acc = Self::identity(self.rows);
        let mut base = self.clone();
        let mut k = e;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Integer power; negative exponents use the inverse.
    pub fn pow_signed(&self, e: i64) -> Result<Matrix> {
        if e >= 0 {
            Ok(self.pow(e as u64))
        } else {
            Ok(self.inverse()?.pow(e.unsigned_abs()))
        }
    }

    fn row_echelon(&self) -> SparseEchelon {
        let mut ech = SparseEchelon::new(self.cols);
        for i in 0..self.rows {
            ech.add_dense_row(self.row(i));
            if ech.is_full() {
                break;
            }
        }
        ech
    }

    pub fn rank(&self) -> usize {
        self.row_echelon().rank()
    }

    /// Basis of `{x : Mx = 0}`.
    pub fn kernel(&self) -> Vec<Vector> {
        self.row_echelon().kernel()
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::Dimension("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            let piv = (col..n)
                .find(|&r| !a[(r, col)].is_zero())
                .ok_or(Error::SingularMatrix)?;
            if piv != col {
                a.swap_rows(piv, col);
                inv.swap_rows(piv, col);
            }
            let p = a[(col, col)].inv()?;
            a.scale_row(col, &p);
            inv.scale_row(col, &p);
            for r in 0..n {
                if r != col && !a[(r, col)].is_zero() {
                    let f = a[(r, col)].clone();
                    a.add_row_multiple(r, col, &-&f);
                    inv.add_row_multiple(r, col, &-&f);
                }
            }
        }
        Ok(inv)
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Some solution of `M x = b`, if consistent.
    pub fn solve(&self, b: &[CycloNumber]) -> Option<Vector> {
        assert_eq!(b.len(), self.rows);
        // kernel of the augmented matrix [M | -b] with last coordinate 1
        let mut aug = Matrix::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = -&b[i];
        }
        let ker = aug.kernel();
        let v = ker.into_iter().find(|v| !v[self.cols].is_zero())?;
        let s = v[self.cols].inv().expect("nonzero");
        Some(v[..self.cols].iter().map(|x| x * &s).collect())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn scale_row(&mut self, r: usize, c: &CycloNumber) {
        for j in 0..self.cols {
            let idx = r * self.cols + j;
            self.data[idx] = &self.data[idx] * c;
        }
    }

    fn add_row_multiple(&mut self, target: usize, src: usize, c: &CycloNumber) {
        for j in 0..self.cols {
            let s = &self.data[src * self.cols + j];
            if s.is_zero() {
                continue;
            }
            let add = s * c;
            let idx = target * self.cols + j;
            self.data[idx] = &self.data[idx] + &add;
        }
    }

    /// Block of rows `r` and columns `c`.
    pub fn submatrix(&self, r: &[usize], c: &[usize]) -> Matrix {
        let mut m = Matrix::zeros(r.len(), c.len());
        for (a, &i) in r.iter().enumerate() {
            for (b, &j) in c.iter().enumerate() {
                m[(a, b)] = self[(i, j)].clone();
            }
        }
        m
    }

    pub fn trace(&self) -> CycloNumber {
        let mut t = CycloNumber::zero();
        for i in 0..self.rows.min(self.cols) {
            t = &t + &self[(i, i)];
        }
        t
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_and_kernel() {
        let m = Matrix::from_int_rows(&[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
        let s = Matrix::from_int_rows(&[&[1, 2, 3], &[2, 4, 6]]);
        assert_eq!(s.rank(), 1);
        let k = s.kernel();
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(is_zero_vector(&s.mul_vec(v)));
        }
        assert_eq!(
            Matrix::from_int_rows(&[&[1, 1], &[1, 1]]).inverse(),
            Err(Error::SingularMatrix)
        );
    }

    #[test]
    fn solve_consistent_and_not() {
        let m = Matrix::from_int_rows(&[&[1, 1], &[1, -1]]);
        let x = m
            .solve(&[CycloNumber::from_int(3), CycloNumber::from_int(1)])
            .unwrap();
        assert_eq!(x, vec![CycloNumber::from_int(2), CycloNumber::from_int(1)]);
        let s = Matrix::from_int_rows(&[&[1, 1], &[2, 2]]);
        assert!(s
            .solve(&[CycloNumber::from_int(1), CycloNumber::from_int(3)])
            .is_none());
    }

    #[test]
    fn echelon_tracks_independence() {
        let mut e = SparseEchelon::new(3);
        assert!(e.add_dense_row(&[1.into(), 2.into(), 0.into()]));
        assert!(!e.add_dense_row(&[2.into(), 4.into(), 0.into()]));
        assert!(e.add_dense_row(&[0.into(), 0.into(), 5.into()]));
        assert_eq!(e.rank(), 2);
        assert!(e.contains_dense(&[1.into(), 2.into(), 7.into()]));
    }
}
