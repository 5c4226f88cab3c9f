//! Commuting finite-order automorphism systems and the gradings they cut out.

use std::fmt;

use crate::algcore::FinGradedAlgebra;
use crate::cyclo::CycloNumber;
use crate::error::{Error, Result};
use crate::lattice::{BarElement, BarGroup};
use crate::linalg::{Matrix, SparseEchelon, Vector};

/// `n` automorphisms of `base` with `σ_j^{m_j} = 1`, given as matrices on the basis of `base`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutomorphismSystem {
    base: FinGradedAlgebra,
    sigmas: Vec<Matrix>,
    m: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    NotInvertible { j: usize },
    NotMultiplicative { j: usize, a: usize, b: usize },
    NotCommuting { i: usize, j: usize },
    WrongOrder { j: usize, m: u64 },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NotInvertible { j } => write!(f, "σ_{} is not invertible", j + 1),
            Violation::NotMultiplicative { j, a, b } => {
                write!(f, "σ_{}(x_{a} x_{b}) ≠ σ_{}(x_{a}) σ_{}(x_{b})", j + 1, j + 1, j + 1)
            }
            Violation::NotCommuting { i, j } => write!(f, "σ_{} σ_{} ≠ σ_{} σ_{}", i + 1, j + 1, j + 1, i + 1),
            Violation::WrongOrder { j, m } => write!(f, "σ_{}^{m} ≠ 1", j + 1),
        }
    }
}

impl std::error::Error for Violation {}

/// The algebra rewritten in a simultaneous eigenbasis, graded by `Z/(m₁) ⊕ … ⊕ Z/(mₙ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Eigengrading {
    pub algebra: FinGradedAlgebra,
    /// Columns are the new basis vectors in the coordinates of the base algebra.
    pub change: Matrix,
}

impl AutomorphismSystem {
    pub fn new(base: FinGradedAlgebra, sigmas: Vec<Matrix>, m: Vec<u64>) -> Result<Self> {
        let n = base.dim();
        if sigmas.len() != m.len() {
            return Err(Error::Dimension("one order per automorphism".into()));
        }
        if sigmas.iter().any(|s| s.nrows() != n || s.ncols() != n) {
            return Err(Error::Dimension(format!("automorphisms must be {n}x{n}")));
        }
        if m.iter().any(|&x| x == 0) {
            return Err(Error::Invalid("orders must be positive".into()));
        }
        Ok(AutomorphismSystem { base, sigmas, m })
    }

    pub fn identity(base: FinGradedAlgebra, m: Vec<u64>) -> Self {
        let n = base.dim();
        let sigmas = vec![Matrix::identity(n); m.len()];
        AutomorphismSystem { base, sigmas, m }
    }

    pub fn base(&self) -> &FinGradedAlgebra {
        &self.base
    }

    pub fn sigmas(&self) -> &[Matrix] {
        &self.sigmas
    }

    pub fn orders(&self) -> &[u64] {
        &self.m
    }

    pub fn rank(&self) -> usize {
        self.m.len()
    }

    /// First violated defining identity, if any.
    pub fn validate(&self) -> std::result::Result<(), Violation> {
        for (j, s) in self.sigmas.iter().enumerate() {
            if !s.is_invertible() {
                return Err(Violation::NotInvertible { j });
            }
            if let Some((a, b)) = self.base.homomorphism_failure(&self.base, s) {
                return Err(Violation::NotMultiplicative { j, a, b });
            }
            if !s.pow(self.m[j]).is_identity() {
                return Err(Violation::WrongOrder { j, m: self.m[j] });
            }
        }
        for i in 0..self.sigmas.len() {
            for j in i + 1..self.sigmas.len() {
                if self.sigmas[i].mul(&self.sigmas[j]) != self.sigmas[j].mul(&self.sigmas[i]) {
                    return Err(Violation::NotCommuting { i, j });
                }
            }
        }
        Ok(())
    }

    /// Simultaneous eigenspace decomposition `σ_j u = ζ_{m_j}^{ℓ_j} u`, components in
    /// lexicographic order of `ℓ̄`.
    pub fn grading_from_autos(&self) -> Result<Eigengrading> {
        if let Err(v) = self.validate() {
            return Err(Error::Precondition(v.to_string()));
        }
        let n = self.base.dim();
        let group = BarGroup::new(self.m.clone())?;
        let mut columns: Vec<Vector> = Vec::with_capacity(n);
        let mut degrees = Vec::with_capacity(n);
        for ell in group.elements() {
            let mut ech = SparseEchelon::new(n);
            for (j, s) in self.sigmas.iter().enumerate() {
                let shifted = s.sub(&Matrix::scalar(n, &CycloNumber::zeta_pow(self.m[j], ell.0[j] as i64)));
                for r in 0..n {
                    ech.add_dense_row(shifted.row(r));
                }
            }
            for v in ech.kernel() {
                columns.push(v);
                degrees.push(ell.clone());
            }
        }
        assert_eq!(columns.len(), n, "finite-order commuting automorphisms are diagonalizable");
        let change = Matrix::from_columns(&columns, n);
        let algebra = self.base.change_basis(&change, group, degrees)?;
        Ok(Eigengrading { algebra, change })
    }

    /// `Π σ_j^{ℓ_j}`.
    pub fn word(&self, ell: &[i64]) -> Matrix {
        let n = self.base.dim();
        let mut acc = Matrix::identity(n);
        for (s, &e) in self.sigmas.iter().zip(ell) {
            if e != 0 {
                acc = acc.mul(&s.pow_signed(e).expect("automorphisms are invertible"));
            }
        }
        acc
    }

    /// `|⟨σ₁, …, σₙ⟩|`, counted over the box `Π [0, m_i)`.
    pub fn group_order(&self) -> u64 {
        let group = BarGroup::new(self.m.clone()).expect("positive orders");
        let mut distinct: Vec<Matrix> = Vec::new();
        for ell in group.elements() {
            let w = self.word(&ell.0.iter().map(|&x| x as i64).collect::<Vec<_>>());
            if !distinct.contains(&w) {
                distinct.push(w);
            }
        }
        distinct.len() as u64
    }

    /// `|G| = m₁⋯mₙ`.
    pub fn support_generates(&self) -> bool {
        self.group_order() == self.m.iter().product::<u64>()
    }
}

/// `σ_j` acts on the component of degree `ℓ̄` as `ζ_{m_j}^{ℓ_j}`.
pub fn autos_from_grading(a: &FinGradedAlgebra, m: &[u64]) -> Result<AutomorphismSystem> {
    if a.group().moduli() != m {
        return Err(Error::GradingMismatch {
            expected: m.to_vec(),
            found: a.group().moduli().to_vec(),
        });
    }
    let sigmas = (0..m.len())
        .map(|j| {
            let d: Vec<CycloNumber> = a
                .degrees()
                .iter()
                .map(|deg: &BarElement| CycloNumber::zeta_pow(m[j], deg.0[j] as i64))
                .collect();
            Matrix::diagonal(&d)
        })
        .collect();
    AutomorphismSystem::new(a.clone(), sigmas, m.to_vec())
}

/// `Ad diag(d)` on `M_ℓ` in the matrix-unit basis.
pub fn inner_diagonal(l: usize, d: &[CycloNumber]) -> Result<Matrix> {
    let mut entries = Vec::with_capacity(l * l);
    for a in 0..l {
        for b in 0..l {
            entries.push(&d[a] * &d[b].inv()?);
        }
    }
    Ok(Matrix::diagonal(&entries))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::unit_vector;

    fn ad_diag_m2() -> Matrix {
        inner_diagonal(2, &[CycloNumber::one(), CycloNumber::from_int(-1)]).unwrap()
    }

    fn qtorus_autos(m: u64) -> AutomorphismSystem {
        let one = CycloNumber::one();
        let a = FinGradedAlgebra::power_norm_residue(m, 1, &one, &one).unwrap();
        autos_from_grading(&a, &[m, m]).unwrap()
    }

    #[test]
    fn validation() {
        let m2 = FinGradedAlgebra::matrix_algebra(2);
        assert_eq!(AutomorphismSystem::identity(m2.clone(), vec![3]).validate(), Ok(()));
        let s = AutomorphismSystem::new(m2, vec![ad_diag_m2()], vec![2]).unwrap();
        assert_eq!(s.validate(), Ok(()));
        let k = FinGradedAlgebra::matrix_algebra(1);
        let bad = AutomorphismSystem::new(k, vec![Matrix::scalar(1, &CycloNumber::from_int(2))], vec![4]).unwrap();
        assert!(bad.validate().is_err());
    }

    #[test]
    fn eigenspaces_of_inner_automorphism() {
        let s = AutomorphismSystem::new(FinGradedAlgebra::matrix_algebra(2), vec![ad_diag_m2()], vec![2]).unwrap();
        let e = s.grading_from_autos().unwrap();
        let comps = e.algebra.components();
        assert_eq!(comps[0].1.len(), 2);
        assert_eq!(comps[1].1.len(), 2);
        // even part spanned by E11, E22
        assert_eq!(e.change.column(0), unit_vector(4, 0));
        assert_eq!(e.change.column(1), unit_vector(4, 3));
        let id = AutomorphismSystem::identity(FinGradedAlgebra::matrix_algebra(2), vec![1]);
        let g = id.grading_from_autos().unwrap();
        assert!(g.change.is_identity());
        assert_eq!(g.algebra.components().len(), 1);
    }

    #[test]
    fn round_trip_and_group_order() {
        let s = qtorus_autos(2);
        let g = s.grading_from_autos().unwrap();
        assert!(g.change.is_identity());
        assert_eq!(g.algebra.degrees(), s.base().degrees());
        assert_eq!(s.group_order(), 4);
        assert!(s.support_generates());
        let z2 = FinGradedAlgebra::group_algebra(&BarGroup::new(vec![2]).unwrap());
        let t = autos_from_grading(&z2, &[2]).unwrap();
        assert_eq!(t.sigmas()[0], Matrix::diagonal(&[CycloNumber::one(), CycloNumber::from_int(-1)]));
        let rep = AutomorphismSystem::new(FinGradedAlgebra::matrix_algebra(2), vec![ad_diag_m2(), ad_diag_m2()], vec![2, 2]).unwrap();
        assert_eq!(rep.group_order(), 2);
        assert!(!rep.support_generates());
        let id = AutomorphismSystem::identity(FinGradedAlgebra::matrix_algebra(2), vec![2, 2]);
        assert_eq!(id.group_order(), 1);
        assert!(!id.support_generates());
    }
}
