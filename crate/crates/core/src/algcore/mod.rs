//! Finite-dimensional algebras graded by a finite abelian group, given by structure constants.

mod centroid;
mod constructors;
mod iso;
mod simple;

use crate::cyclo::CycloNumber;
use crate::error::{Error, Result};
use crate::lattice::{BarElement, BarGroup};
use crate::linalg::{zero_vector, Matrix, SparseRow, Vector};

pub use centroid::{central_grading_group, Centroid};
pub use iso::{group_automorphisms, RegradedIso};
pub use simple::{mult_closure, SimplicityWitness, Verdict};

/// Linear endomorphism of an algebra, homogeneous of `degree` when that is set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedMap {
    pub matrix: Matrix,
    pub degree: Option<BarElement>,
}

/// `x_i x_j = Σ_k c_{ij}^k x_k` with every nonzero `c_{ij}^k` satisfying `deg k = deg i + deg j`.
///
/// Equality compares grading and structure constants only.
#[derive(Clone, Debug)]
pub struct FinGradedAlgebra {
    dim: usize,
    group: BarGroup,
    degrees: Vec<BarElement>,
    sc: Vec<CycloNumber>,
    unit_hint: Option<usize>,
    table: Vec<SparseRow>,
}

impl PartialEq for FinGradedAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.group == other.group && self.degrees == other.degrees && self.sc == other.sc
    }
}

impl Eq for FinGradedAlgebra {}

impl FinGradedAlgebra {
    /// `sc[(i·dim + j)·dim + k] = c_{ij}^k`.
    pub fn new(group: BarGroup, degrees: Vec<BarElement>, sc: Vec<CycloNumber>) -> Result<Self> {
        let dim = degrees.len();
        if sc.len() != dim * dim * dim {
            return Err(Error::Dimension(format!(
                "expected {} structure constants, found {}",
                dim * dim * dim,
                sc.len()
            )));
        }
        if let Some(bad) = degrees.iter().find(|d| !group.contains(d)) {
            return Err(Error::GradingMismatch {
                expected: group.moduli().to_vec(),
                found: bad.0.clone(),
            });
        }
        let mut table = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let target = group.add(&degrees[i], &degrees[j]);
                let mut row = SparseRow::new();
                for k in 0..dim {
                    let c = &sc[(i * dim + j) * dim + k];
                    if c.is_zero() {
                        continue;
                    }
                    if degrees[k] != target {
                        return Err(Error::Invalid(format!(
                            "c_{{{i}{j}}}^{k} is nonzero but deg {k} = {} differs from {}",
                            degrees[k], target
                        )));
                    }
                    row.push((k, c.clone()));
                }
                table.push(row);
            }
        }
        Ok(FinGradedAlgebra {
            dim,
            group,
            degrees,
            sc,
            unit_hint: None,
            table,
        })
    }

    /// Builds from the nonzero entries `(i, j, k, c_{ij}^k)`; repeated entries are summed.
    pub fn from_entries(
        group: BarGroup,
        degrees: Vec<BarElement>,
        entries: impl IntoIterator<Item = (usize, usize, usize, CycloNumber)>,
    ) -> Result<Self> {
        let dim = degrees.len();
        let mut sc = vec![CycloNumber::zero(); dim * dim * dim];
        for (i, j, k, c) in entries {
            if i >= dim || j >= dim || k >= dim {
                return Err(Error::Dimension(format!("index ({i},{j},{k}) out of range")));
            }
            sc[(i * dim + j) * dim + k] += &c;
        }
        Self::new(group, degrees, sc)
    }

    /// Trivially graded algebra from structure constants.
    pub fn ungraded(dim: usize, sc: Vec<CycloNumber>) -> Result<Self> {
        let g = BarGroup::trivial();
        Self::new(g.clone(), vec![g.zero(); dim], sc)
    }

    pub fn with_unit_hint(mut self, idx: usize) -> Self {
        self.unit_hint = Some(idx);
        self
    }

    pub fn unit_hint(&self) -> Option<usize> {
        self.unit_hint
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn group(&self) -> &BarGroup {
        &self.group
    }

    pub fn degrees(&self) -> &[BarElement] {
        &self.degrees
    }

    pub fn degree(&self, i: usize) -> &BarElement {
        &self.degrees[i]
    }

    pub fn sc(&self, i: usize, j: usize, k: usize) -> &CycloNumber {
        &self.sc[(i * self.dim + j) * self.dim + k]
    }

    pub fn structure_constants(&self) -> &[CycloNumber] {
        &self.sc
    }

    /// Nonzero `(k, c_{ij}^k)`.
    pub fn product_of_basis(&self, i: usize, j: usize) -> &SparseRow {
        &self.table[i * self.dim + j]
    }

    /// Basis indices of the component of degree `lambda`.
    pub fn component(&self, lambda: &BarElement) -> Vec<usize> {
        (0..self.dim).filter(|&i| &self.degrees[i] == lambda).collect()
    }

    /// `(λ̄, indices)` for every group element, in lexicographic order.
    pub fn components(&self) -> Vec<(BarElement, Vec<usize>)> {
        let mut comps: Vec<(BarElement, Vec<usize>)> = self
            .group
            .elements()
            .into_iter()
            .map(|g| (g, Vec::new()))
            .collect();
        for (i, d) in self.degrees.iter().enumerate() {
            comps[self.group.index_of(d)].1.push(i);
        }
        comps
    }

    pub fn support(&self) -> Vec<BarElement> {
        self.components()
            .into_iter()
            .filter(|(_, idx)| !idx.is_empty())
            .map(|(g, _)| g)
            .collect()
    }

    pub fn multiply(&self, u: &[CycloNumber], v: &[CycloNumber]) -> Vector {
        assert!(u.len() == self.dim && v.len() == self.dim, "coordinate length mismatch");
        let mut out = zero_vector(self.dim);
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (j, vj) in v.iter().enumerate() {
                if vj.is_zero() {
                    continue;
                }
                let s = ui * vj;
                for (k, c) in self.product_of_basis(i, j) {
                    out[*k] += &(&s * c);
                }
            }
        }
        out
    }

    /// Matrix of `x ↦ x_i x` (column `j` holds `x_i x_j`).
    pub fn left_basis(&self, i: usize) -> Matrix {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for j in 0..self.dim {
            for (k, c) in self.product_of_basis(i, j) {
                m[(*k, j)] = c.clone();
            }
        }
        m
    }

    /// Matrix of `x ↦ x x_i`.
    pub fn right_basis(&self, i: usize) -> Matrix {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for j in 0..self.dim {
            for (k, c) in self.product_of_basis(j, i) {
                m[(*k, j)] = c.clone();
            }
        }
        m
    }

    pub fn left_mult(&self, a: &[CycloNumber]) -> Matrix {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for (i, ai) in a.iter().enumerate() {
            if !ai.is_zero() {
                m = m.add(&self.left_basis(i).scale(ai));
            }
        }
        m
    }

    pub fn right_mult(&self, a: &[CycloNumber]) -> Matrix {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for (i, ai) in a.iter().enumerate() {
            if !ai.is_zero() {
                m = m.add(&self.right_basis(i).scale(ai));
            }
        }
        m
    }

    pub fn is_zero_product(&self) -> bool {
        self.table.iter().all(Vec::is_empty)
    }

    /// First basis triple violating `(x_i x_j) x_k = x_i (x_j x_k)`.
    pub fn associativity_failure(&self) -> Option<(usize, usize, usize)> {
        let n = self.dim;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let mut lhs = zero_vector(n);
                    for (p, c) in self.product_of_basis(i, j) {
                        for (q, d) in self.product_of_basis(*p, k) {
                            lhs[*q] += &(c * d);
                        }
                    }
                    let mut rhs = zero_vector(n);
                    for (p, c) in self.product_of_basis(j, k) {
                        for (q, d) in self.product_of_basis(i, *p) {
                            rhs[*q] += &(c * d);
                        }
                    }
                    if lhs != rhs {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    pub fn is_associative(&self) -> bool {
        self.associativity_failure().is_none()
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (0..self.dim).all(|j| self.product_of_basis(i, j) == self.product_of_basis(j, i)))
    }

    /// Two-sided identity element, if any.
    pub fn identity(&self) -> Option<Vector> {
        let n = self.dim;
        if let Some(h) = self.unit_hint {
            let e = crate::linalg::unit_vector(n, h);
            if self.is_identity(&e) {
                return Some(e);
            }
        }
        // Σ_i e_i c_{ij}^k = δ_jk and Σ_i e_i c_{ji}^k = δ_jk
        let mut rows = Vec::with_capacity(2 * n * n);
        let mut rhs = Vec::with_capacity(2 * n * n);
        for j in 0..n {
            for k in 0..n {
                rows.push((0..n).map(|i| self.sc(i, j, k).clone()).collect::<Vector>());
                rows.push((0..n).map(|i| self.sc(j, i, k).clone()).collect::<Vector>());
                let d = if j == k { CycloNumber::one() } else { CycloNumber::zero() };
                rhs.push(d.clone());
                rhs.push(d);
            }
        }
        if n == 0 {
            return None;
        }
        let m = Matrix::from_rows(rows).ok()?;
        m.solve(&rhs)
    }

    pub fn is_identity(&self, e: &[CycloNumber]) -> bool {
        (0..self.dim).all(|j| {
            let x = crate::linalg::unit_vector(self.dim, j);
            self.multiply(e, &x) == x && self.multiply(&x, e) == x
        })
    }

    pub fn is_unital(&self) -> bool {
        self.identity().is_some()
    }

    /// Whether `l_u` is bijective; requires a unital associative algebra.
    pub fn is_invertible(&self, u: &[CycloNumber]) -> Result<bool> {
        if !self.is_associative() {
            return Err(Error::Precondition("invertibility needs an associative algebra".into()));
        }
        if !self.is_unital() {
            return Err(Error::Precondition("invertibility needs a unital algebra".into()));
        }
        Ok(self.left_mult(u).is_invertible())
    }

    /// The same multiplication with every basis vector in degree 0 of the trivial group.
    pub fn with_trivial_grading(&self) -> Self {
        self.regraded(BarGroup::trivial(), vec![BarGroup::trivial().zero(); self.dim])
            .expect("trivial grading is always compatible")
    }

    pub fn regraded(&self, group: BarGroup, degrees: Vec<BarElement>) -> Result<Self> {
        let mut out = Self::new(group, degrees, self.sc.clone())?;
        out.unit_hint = self.unit_hint;
        Ok(out)
    }

    /// Algebra on the basis given by the columns of `t` (old coordinates), with the supplied degrees.
    pub fn change_basis(&self, t: &Matrix, group: BarGroup, degrees: Vec<BarElement>) -> Result<Self> {
        let n = self.dim;
        if t.nrows() != n || t.ncols() != n || degrees.len() != n {
            return Err(Error::Dimension("basis change must be square of algebra size".into()));
        }
        let tinv = t.inverse()?;
        let cols: Vec<Vector> = (0..n).map(|j| t.column(j)).collect();
        let mut sc = vec![CycloNumber::zero(); n * n * n];
        for a in 0..n {
            for b in 0..n {
                let prod = self.multiply(&cols[a], &cols[b]);
                let coords = tinv.mul_vec(&prod);
                for (c, v) in coords.into_iter().enumerate() {
                    sc[(a * n + b) * n + c] = v;
                }
            }
        }
        Self::new(group, degrees, sc)
    }

    /// Checks that the square matrix `phi` (columns are images of basis vectors of `self` in
    /// the basis of `other`) is an algebra homomorphism; returns the first failing pair.
    pub fn homomorphism_failure(&self, other: &FinGradedAlgebra, phi: &Matrix) -> Option<(usize, usize)> {
        let cols: Vec<Vector> = (0..self.dim).map(|j| phi.column(j)).collect();
        for i in 0..self.dim {
            for j in 0..self.dim {
                let lhs = phi.mul_vec(&self.multiply(&crate::linalg::unit_vector(self.dim, i), &crate::linalg::unit_vector(self.dim, j)));
                let rhs = other.multiply(&cols[i], &cols[j]);
                if lhs != rhs {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// Graded tensor product over `Λ̄_A ⊕ Λ̄_B`; basis `(a, b)` has index `a·dim B + b`.
    pub fn tensor(&self, other: &FinGradedAlgebra) -> FinGradedAlgebra {
        let (n, m) = (self.dim, other.dim);
        let group = self.group.direct_sum(&other.group);
        let degrees: Vec<BarElement> = (0..n * m)
            .map(|idx| {
                let mut r = self.degrees[idx / m].0.clone();
                r.extend_from_slice(&other.degrees[idx % m].0);
                BarElement(r)
            })
            .collect();
        let mut entries = Vec::new();
        for a in 0..n {
            for a2 in 0..n {
                for (ak, ac) in self.product_of_basis(a, a2) {
                    for b in 0..m {
                        for b2 in 0..m {
                            for (bk, bc) in other.product_of_basis(b, b2) {
                                entries.push((a * m + b, a2 * m + b2, ak * m + bk, ac * bc));
                            }
                        }
                    }
                }
            }
        }
        let mut out = Self::from_entries(group, degrees, entries).expect("tensor grading is compatible");
        if let (Some(x), Some(y)) = (self.unit_hint, other.unit_hint) {
            out.unit_hint = Some(x * m + y);
        }
        out
    }

    /// Direct sum of algebras graded by the same group.
    pub fn direct_sum(&self, other: &FinGradedAlgebra) -> Result<FinGradedAlgebra> {
        if self.group != other.group {
            return Err(Error::GradingMismatch {
                expected: self.group.moduli().to_vec(),
                found: other.group.moduli().to_vec(),
            });
        }
        let n = self.dim;
        let mut degrees = self.degrees.clone();
        degrees.extend(other.degrees.iter().cloned());
        let mut entries = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for (k, c) in self.product_of_basis(i, j) {
                    entries.push((i, j, *k, c.clone()));
                }
            }
        }
        for i in 0..other.dim {
            for j in 0..other.dim {
                for (k, c) in other.product_of_basis(i, j) {
                    entries.push((n + i, n + j, n + k, c.clone()));
                }
            }
        }
        Self::from_entries(self.group.clone(), degrees, entries)
    }
}
