use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{smith_normal_form, IntMatrix, Smith};
use crate::error::{Error, Result};

/// Element of `Z/(m₁) ⊕ … ⊕ Z/(mₙ)` stored as least nonnegative residues.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BarElement(pub Vec<u64>);

impl BarElement {
    pub fn residues(&self) -> &[u64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&r| r == 0)
    }
}

impl fmt::Display for BarElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// The finite abelian group `Z/(m₁) ⊕ … ⊕ Z/(mₙ)`; elements are ordered lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BarGroup {
    m: Vec<u64>,
}

impl BarGroup {
    pub fn new(m: Vec<u64>) -> Result<Self> {
        if m.iter().any(|&x| x == 0) {
            return Err(Error::Invalid("invariant factors must be positive".into()));
        }
        Ok(BarGroup { m })
    }

    pub fn trivial() -> Self {
        BarGroup { m: Vec::new() }
    }

    pub fn moduli(&self) -> &[u64] {
        &self.m
    }

    pub fn rank(&self) -> usize {
        self.m.len()
    }

    pub fn order(&self) -> u64 {
        self.m.iter().product()
    }

    pub fn zero(&self) -> BarElement {
        BarElement(vec![0; self.m.len()])
    }

    pub fn reduce(&self, v: &[i64]) -> BarElement {
        assert_eq!(v.len(), self.m.len(), "coordinate count mismatch");
        BarElement(
            v.iter()
                .zip(&self.m)
                .map(|(&x, &m)| x.rem_euclid(m as i64) as u64)
                .collect(),
        )
    }

    pub fn add(&self, a: &BarElement, b: &BarElement) -> BarElement {
        BarElement(
            a.0.iter()
                .zip(&b.0)
                .zip(&self.m)
                .map(|((x, y), m)| (x + y) % m)
                .collect(),
        )
    }

    pub fn neg(&self, a: &BarElement) -> BarElement {
        BarElement(a.0.iter().zip(&self.m).map(|(x, m)| (m - x) % m).collect())
    }

    pub fn sub(&self, a: &BarElement, b: &BarElement) -> BarElement {
        self.add(a, &self.neg(b))
    }

    pub fn contains(&self, a: &BarElement) -> bool {
        a.0.len() == self.m.len() && a.0.iter().zip(&self.m).all(|(x, m)| x < m)
    }

    /// All elements in lexicographic residue order.
    pub fn elements(&self) -> Vec<BarElement> {
        (0..self.order()).map(|i| self.element_at(i as usize)).collect()
    }

    /// Position of `a` in [`BarGroup::elements`].
    pub fn index_of(&self, a: &BarElement) -> usize {
        a.0.iter()
            .zip(&self.m)
            .fold(0usize, |acc, (&x, &m)| acc * m as usize + x as usize)
    }

    pub fn element_at(&self, mut idx: usize) -> BarElement {
        let mut r = vec![0u64; self.m.len()];
        for i in (0..self.m.len()).rev() {
            let m = self.m[i] as usize;
            r[i] = (idx % m) as u64;
            idx /= m;
        }
        BarElement(r)
    }

    /// Direct sum `self ⊕ other`.
    pub fn direct_sum(&self, other: &BarGroup) -> BarGroup {
        let mut m = self.m.clone();
        m.extend_from_slice(&other.m);
        BarGroup { m }
    }
}

/// Epimorphism `π: Zⁿ → Z/(m₁) ⊕ … ⊕ Z/(mₙ)`, `λ ↦ (λB) mod m`, with the least-residue section.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientMap {
    group: BarGroup,
    basis_change: IntMatrix,
    basis_inv: IntMatrix,
}

impl QuotientMap {
    pub fn new(m: Vec<u64>, basis_change: IntMatrix) -> Result<Self> {
        if basis_change.nrows() != m.len() {
            return Err(Error::Dimension(format!(
                "basis change is {}x{} but m has {} entries",
                basis_change.nrows(),
                basis_change.ncols(),
                m.len()
            )));
        }
        let basis_inv = basis_change.inverse_unimodular()?;
        Ok(QuotientMap {
            group: BarGroup::new(m)?,
            basis_change,
            basis_inv,
        })
    }

    /// `Γ = m₁Z ⊕ … ⊕ mₙZ` in standard coordinates.
    pub fn standard(m: Vec<u64>) -> Result<Self> {
        let n = m.len();
        Self::new(m, IntMatrix::identity(n))
    }

    /// Quotient by the full-rank sublattice spanned by the rows of `generators`.
    pub fn from_sublattice(generators: &IntMatrix) -> Result<Self> {
        let n = generators.ncols();
        let Smith { d, v, .. } = smith_normal_form(generators);
        let mut m = Vec::with_capacity(n);
        for i in 0..n {
            let di = if i < d.nrows() { d[(i, i)].clone() } else { BigInt::zero() };
            if di.is_zero() {
                return Err(Error::Precondition(
                    "sublattice must have finite index".into(),
                ));
            }
            m.push(u64::try_from(di).map_err(|_| Error::Invalid("index too large".into()))?);
        }
        Self::new(m, v)
    }

    pub fn rank(&self) -> usize {
        self.group.rank()
    }

    pub fn moduli(&self) -> &[u64] {
        self.group.moduli()
    }

    pub fn group(&self) -> &BarGroup {
        &self.group
    }

    pub fn basis_change(&self) -> &IntMatrix {
        &self.basis_change
    }

    pub fn basis_inverse(&self) -> &IntMatrix {
        &self.basis_inv
    }

    pub fn order(&self) -> u64 {
        self.group.order()
    }

    pub fn internal(&self, lambda: &[i64]) -> Vec<i64> {
        self.basis_change.apply_row(lambda)
    }

    pub fn project(&self, lambda: &[i64]) -> BarElement {
        self.group.reduce(&self.internal(lambda))
    }

    pub fn section(&self, bar: &BarElement) -> Vec<i64> {
        let r: Vec<i64> = bar.0.iter().map(|&x| x as i64).collect();
        self.basis_inv.apply_row(&r)
    }

    /// `Θ`, in lexicographic residue order.
    pub fn coset_reps(&self) -> Vec<Vec<i64>> {
        self.group.elements().iter().map(|b| self.section(b)).collect()
    }

    pub fn in_kernel(&self, gamma: &[i64]) -> bool {
        self.project(gamma).is_zero()
    }

    /// Rows form a basis of `Γ`: `mᵢ eᵢ B⁻¹`.
    pub fn kernel_basis(&self) -> IntMatrix {
        let n = self.rank();
        let mut k = IntMatrix::zeros(n, n);
        for i in 0..n {
            let mi = BigInt::from(self.group.moduli()[i]);
            for j in 0..n {
                k[(i, j)] = &mi * &self.basis_inv[(i, j)];
            }
        }
        k
    }

    /// Coordinates of `γ ∈ Γ` in [`QuotientMap::kernel_basis`].
    pub fn kernel_coords(&self, gamma: &[i64]) -> Option<Vec<i64>> {
        let mu = self.internal(gamma);
        mu.iter()
            .zip(self.group.moduli())
            .map(|(&x, &m)| (x % m as i64 == 0).then_some(x / m as i64))
            .collect()
    }

    /// Whether both maps have the same kernel.
    pub fn same_kernel(&self, other: &QuotientMap) -> bool {
        self.rank() == other.rank()
            && self.order() == other.order()
            && (0..self.rank()).all(|i| self.in_kernel(&other.kernel_basis().row_i64(i)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn project_and_section() {
        let q = QuotientMap::standard(vec![2, 2]).unwrap();
        let bar = q.project(&[3, -1]);
        assert_eq!(bar, BarElement(vec![1, 1]));
        assert_eq!(q.section(&bar), vec![1, 1]);
        let q = QuotientMap::standard(vec![1, 6]).unwrap();
        let reps = q.coset_reps();
        assert_eq!(reps, (0..6).map(|j| vec![0, j]).collect::<Vec<_>>());
        let q = QuotientMap::standard(vec![2, 3]).unwrap();
        assert!(q.project(&[2, 3]).is_zero());
    }

    #[test]
    fn from_even_sum_sublattice() {
        let g = IntMatrix::from_i64(&[&[1, 1], &[1, -1]]);
        let q = QuotientMap::from_sublattice(&g).unwrap();
        assert_eq!(q.moduli(), &[1, 2]);
        assert!(q.in_kernel(&[1, 1]) && q.in_kernel(&[2, 0]) && !q.in_kernel(&[1, 0]));
        for b in q.group().elements() {
            assert_eq!(q.project(&q.section(&b)), b);
        }
        let k = q.kernel_basis();
        for i in 0..2 {
            let row = k.row_i64(i);
            assert!(q.in_kernel(&row));
            let c = q.kernel_coords(&row).unwrap();
            assert_eq!(c.iter().filter(|&&x| x != 0).count(), 1);
        }
    }

    #[test]
    fn group_indexing() {
        let g = BarGroup::new(vec![2, 3]).unwrap();
        for (i, e) in g.elements().iter().enumerate() {
            assert_eq!(g.index_of(e), i);
            assert_eq!(g.add(e, &g.neg(e)), g.zero());
        }
    }
}
