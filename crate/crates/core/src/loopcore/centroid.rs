use super::GammaFiniteAlgebra;
use crate::algcore::{central_grading_group, FinGradedAlgebra};
use crate::error::Result;
use crate::lattice::{lattice_basis, IntMatrix, QuotientMap};

/// `C(L_π(A)) = Σ_{γ ∈ Γ_Λ(B)} C(A)^{γ̄} ⊗ z^γ` for graded-simple `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LoopCentroid {
    /// Rows form a basis of `Γ_Λ(B) = π⁻¹(Γ_Λ̄(A))`.
    pub gamma: IntMatrix,
    /// Dimension of `C(A)^{γ̄}` for each `γ̄` in the central grading group of `A`.
    pub fiber_dims: Vec<usize>,
    /// When `A` is graded-central, `C(B)` has basis `{z^γ : γ ∈ Γ}` and this holds.
    pub monomial: bool,
}

/// Centroid of `L_π(A)`; `A` must be graded-simple.
pub fn centroid_of_loop(q: &QuotientMap, a: &FinGradedAlgebra) -> Result<LoopCentroid> {
    let support = central_grading_group(a)?;
    let c = a.centroid();
    let fiber_dims = support.iter().map(|d| c.component(d).len()).collect();
    let kb = q.kernel_basis();
    let mut rows: Vec<Vec<i64>> = (0..kb.nrows()).map(|i| kb.row_i64(i)).collect();
    rows.extend(support.iter().map(|d| q.section(d)));
    let gamma = lattice_basis(&IntMatrix::from_row_vectors(&rows, q.rank()));
    let monomial = support.len() == 1 && c.component(&a.group().zero()).len() == 1;
    Ok(LoopCentroid {
        gamma,
        fiber_dims,
        monomial,
    })
}

/// `B` is free of finite rank over `k[Γ]` with `Λ/Γ` finite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FgcReport {
    pub rank_over_centroid: usize,
    pub quotient_order: u64,
}

impl GammaFiniteAlgebra {
    /// The rank of `B` over `k[Γ]` is `Σ_θ dim B^θ` and `|Λ/Γ|` is finite by construction.
    pub fn fgc_report(&self) -> FgcReport {
        FgcReport {
            rank_over_centroid: self.total_rank(),
            quotient_order: self.quotient().order(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::CycloNumber;
    use crate::lattice::BarGroup;

    #[test]
    fn quantum_torus_centroid() {
        for m in [2u64, 3] {
            let one = CycloNumber::one();
            let a = FinGradedAlgebra::power_norm_residue(m, 1, &one, &one).unwrap();
            let q = QuotientMap::standard(vec![m, m]).unwrap();
            let c = centroid_of_loop(&q, &a).unwrap();
            assert_eq!(c.gamma, IntMatrix::diag(&[m as i64, m as i64]));
            assert!(c.monomial);
            assert_eq!(c.fiber_dims, vec![1]);
        }
    }

    #[test]
    fn group_algebra_loop_is_commutative_laurent() {
        // L(k[Z/2]) over 2Z is k[z^{±1}], whose centroid is all of it
        let g = BarGroup::new(vec![2]).unwrap();
        let a = FinGradedAlgebra::group_algebra(&g);
        let q = QuotientMap::standard(vec![2]).unwrap();
        let c = centroid_of_loop(&q, &a).unwrap();
        assert_eq!(c.gamma, IntMatrix::identity(1));
        assert!(!c.monomial);
        assert_eq!(c.fiber_dims, vec![1, 1]);
        let b = GammaFiniteAlgebra::loop_algebra(&q, &a).unwrap();
        assert_eq!(b.fgc_report().rank_over_centroid, 2);
    }
}
