//! Central images, loop reconstruction, twists and similarity.

mod realize;
mod torus;

use std::fmt;

use crate::algcore::{FinGradedAlgebra, SimplicityWitness, Verdict};
use crate::cyclo::CycloNumber;
use crate::error::{Error, Result};
use crate::lattice::{BarElement, Character, QuotientMap};
use crate::linalg::Matrix;
use crate::loopcore::{diagonal_iso_search, graded_iso_check, GammaFiniteAlgebra, GradedIsoWitness, SearchOutcome};

pub use realize::{
    isograded_check, multiloop_transport, realize, verify_realization, verify_transport, IsogradedFailure,
    RealizationCertificate, TransportCertificate,
};
pub use torus::{qtorus, qtorus_normal_form, torus, torus_predicates, QTorusNormalForm, TorusReport};

/// A unital homomorphism `C(B) → k`, stored as the character `γ ↦ ρ(z^γ)` of `Γ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Specialization {
    pub rho: Character,
}

impl Specialization {
    pub fn augmentation(b: &GammaFiniteAlgebra) -> Self {
        Specialization { rho: b.augmentation() }
    }

    /// Values on [`QuotientMap::kernel_basis`].
    pub fn from_values(q: &QuotientMap, values: Vec<CycloNumber>) -> Result<Self> {
        Ok(Specialization {
            rho: Character::on_kernel(q, values)?,
        })
    }
}

/// `B / ker(ρ) B`, on the central-image basis of `B`.
pub fn central_image(b: &GammaFiniteAlgebra, rho: &Specialization) -> Result<FinGradedAlgebra> {
    b.specialize(&rho.rho)
}

/// `(ρ_χ)(z^γ) = χ(γ) ρ(z^γ)`.
pub fn rho_chi(rho: &Specialization, chi: &Character) -> Result<Specialization> {
    Ok(Specialization { rho: rho.rho.mul(chi)? })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClassBFailure {
    NotGradedSimple(SimplicityWitness),
    /// `dim C(A)^0 > 1`.
    NotGradedCentral { degree_zero_centroid: usize },
    /// The central grading group of the image is nonzero, so `Γ` is not the full centroid support.
    CentroidExceedsGamma(Vec<BarElement>),
    Undecided(String),
}

impl fmt::Display for ClassBFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B not in class B(Λ,Γ): ")?;
        match self {
            ClassBFailure::NotGradedSimple(w) => write!(f, "central image is not graded-simple: {w}"),
            ClassBFailure::NotGradedCentral { degree_zero_centroid } => {
                write!(f, "degree-0 centroid of the central image has dimension {degree_zero_centroid}")
            }
            ClassBFailure::CentroidExceedsGamma(s) => {
                let s: Vec<String> = s.iter().map(ToString::to_string).collect();
                write!(f, "central image has centroid support {{{}}}", s.join(", "))
            }
            ClassBFailure::Undecided(why) => write!(f, "graded simplicity undecided: {why}"),
        }
    }
}

impl std::error::Error for ClassBFailure {}

/// Certifies `B ∈ B(Λ, Γ)` through its central image at `ρ` and returns that image.
pub fn certify_class_b(b: &GammaFiniteAlgebra, rho: &Specialization) -> std::result::Result<FinGradedAlgebra, ClassBFailure> {
    let a = central_image(b, rho).map_err(|e| ClassBFailure::Undecided(e.to_string()))?;
    match a.is_graded_simple() {
        Verdict::Holds => {}
        Verdict::Fails(w) => return Err(ClassBFailure::NotGradedSimple(w)),
        Verdict::Inconclusive(why) => return Err(ClassBFailure::Undecided(why)),
    }
    let c = a.centroid();
    let zero = a.group().zero();
    let d0 = c.component(&zero).len();
    if d0 != 1 {
        return Err(ClassBFailure::NotGradedCentral { degree_zero_centroid: d0 });
    }
    let support = c.support();
    if support.iter().any(|d| *d != zero) {
        return Err(ClassBFailure::CentroidExceedsGamma(support));
    }
    Ok(a)
}

/// Witness for `B ≅_Λ L_π(B / ker(ρ) B)`: `x ↦ x ⊗ z^θ` on `B^θ` with `χ = ρ`.
pub fn loop_of_image_roundtrip(
    b: &GammaFiniteAlgebra,
    rho: &Specialization,
) -> std::result::Result<(GammaFiniteAlgebra, GradedIsoWitness), ClassBFailure> {
    let a = certify_class_b(b, rho)?;
    let l = GammaFiniteAlgebra::loop_algebra(b.quotient(), &a).map_err(|e| ClassBFailure::Undecided(e.to_string()))?;
    // image-basis index p sits at (θ, i) in B and at l.basis_order()[p] in L
    let mut phis: Vec<Matrix> = b.comp_dims().iter().map(|&d| Matrix::zeros(d, d)).collect();
    for (p, &(th, i)) in b.basis_order().iter().enumerate() {
        let (th2, j) = l.basis_order()[p];
        debug_assert_eq!(th, th2);
        phis[th][(j, i)] = CycloNumber::one();
    }
    let w = GradedIsoWitness {
        phis,
        chi: rho.rho.clone(),
    };
    graded_iso_check(b, &l, &w).map_err(|e| ClassBFailure::Undecided(format!("round-trip witness rejected: {e}")))?;
    Ok((l, w))
}

/// `u ·_χ v = χ(ξ(λ̄) + ξ(μ̄) − ξ(λ̄ + μ̄)) uv` with the least-residue section `ξ` of `q`.
pub fn twist(a: &FinGradedAlgebra, chi: &Character, q: &QuotientMap) -> Result<FinGradedAlgebra> {
    if a.group() != q.group() {
        return Err(Error::GradingMismatch {
            expected: q.moduli().to_vec(),
            found: a.group().moduli().to_vec(),
        });
    }
    let g = q.group();
    let mut cache = std::collections::HashMap::new();
    let mut factor = |x: &BarElement, y: &BarElement| -> Result<CycloNumber> {
        let key = (x.clone(), y.clone());
        if let Some(c) = cache.get(&key) {
            return Ok(CycloNumber::clone(c));
        }
        let (sx, sy, sxy) = (q.section(x), q.section(y), q.section(&g.add(x, y)));
        let gamma: Vec<i64> = (0..sx.len()).map(|i| sx[i] + sy[i] - sxy[i]).collect();
        let c = chi.eval(&gamma)?;
        cache.insert(key, c.clone());
        Ok(c)
    };
    let mut entries = Vec::new();
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            let f = factor(a.degree(i), a.degree(j))?;
            for (k, c) in a.product_of_basis(i, j) {
                entries.push((i, j, *k, &f * c));
            }
        }
    }
    let out = FinGradedAlgebra::from_entries(g.clone(), a.degrees().to_vec(), entries)?;
    Ok(match a.unit_hint() {
        Some(u) => out.with_unit_hint(u),
        None => out,
    })
}

/// Diagonal map `u ↦ ψ(ξ(λ̄))⁻¹ u` on `A^{λ̄}`, an isomorphism `A → A_χ` when `χ = ψ|_Γ`.
pub fn extension_iso(a: &FinGradedAlgebra, q: &QuotientMap, psi: &[CycloNumber]) -> Result<Matrix> {
    let d = a
        .degrees()
        .iter()
        .map(|deg| crate::lattice::lattice_character_eval(psi, &q.section(deg)).inv())
        .collect::<Result<Vec<_>>>()?;
    Ok(Matrix::diagonal(&d))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Similarity {
    /// `phi` (columns in the basis of `A′`) is a graded isomorphism `A_χ → A′`.
    Similar { chi: Character, phi: Matrix },
    NotSimilar,
    Unknown(String),
}

/// Decides `A ∼_π A′` by searching for a diagonal isomorphism `L_π(A) → L_π(A′)`.
pub fn similar_check(a: &FinGradedAlgebra, a2: &FinGradedAlgebra, q: &QuotientMap) -> Result<Similarity> {
    let comps = a.components();
    let comps2 = a2.components();
    if comps.iter().map(|(_, c)| c.len()).ne(comps2.iter().map(|(_, c)| c.len())) {
        return Ok(Similarity::NotSimilar);
    }
    let l = GammaFiniteAlgebra::loop_algebra(q, a)?;
    let l2 = GammaFiniteAlgebra::loop_algebra(q, a2)?;
    let all_lines = l.comp_dims().iter().all(|&d| d <= 1);
    match diagonal_iso_search(&l, &l2)? {
        SearchOutcome::Found(w) => {
            let n = a.dim();
            let mut phi = Matrix::zeros(n, n);
            for (th, (_, idx)) in comps.iter().enumerate() {
                let idx2 = &comps2[th].1;
                for (i, &p) in idx.iter().enumerate() {
                    for (j, &p2) in idx2.iter().enumerate() {
                        phi[(p2, p)] = w.phis[th][(j, i)].clone();
                    }
                }
            }
            let twisted = twist(a, &w.chi, q)?;
            if twisted.homomorphism_failure(a2, &phi).is_some() {
                return Err(Error::Certification("similarity witness failed its own check".into()));
            }
            Ok(Similarity::Similar { chi: w.chi, phi })
        }
        SearchOutcome::Absent if all_lines => Ok(Similarity::NotSimilar),
        SearchOutcome::Absent => Ok(Similarity::Unknown("no diagonal isomorphism; components have dimension > 1".into())),
        SearchOutcome::Undetermined => Ok(Similarity::Unknown("required roots lie outside the cyclotomic tower".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::BarGroup;

    fn a(m: u64, a1: &CycloNumber, a2: &CycloNumber) -> FinGradedAlgebra {
        FinGradedAlgebra::power_norm_residue(m, 1, a1, a2).unwrap()
    }

    #[test]
    fn quantum_torus_images() {
        let q = QuotientMap::standard(vec![2, 2]).unwrap();
        let one = CycloNumber::one();
        let b = GammaFiniteAlgebra::loop_algebra(&q, &a(2, &one, &one)).unwrap();
        let m1 = CycloNumber::from_int(-1);
        let rho = Specialization::from_values(&q, vec![one.clone(), m1.clone()]).unwrap();
        assert_eq!(central_image(&b, &rho).unwrap(), a(2, &one, &m1));
        let (l, w) = loop_of_image_roundtrip(&b, &rho).unwrap();
        assert_eq!(graded_iso_check(&b, &l, &w), Ok(()));
    }

    #[test]
    fn non_simple_image_fails_certification() {
        let g = BarGroup::new(vec![2]).unwrap();
        let k2 = FinGradedAlgebra::group_algebra(&g);
        let a = k2.direct_sum(&k2).unwrap();
        let q = QuotientMap::standard(vec![2]).unwrap();
        let b = GammaFiniteAlgebra::loop_algebra(&q, &a).unwrap();
        let err = certify_class_b(&b, &Specialization::augmentation(&b)).unwrap_err();
        assert!(matches!(err, ClassBFailure::NotGradedSimple(SimplicityWitness::Ideal(_))));
        let err = certify_class_b(
            &GammaFiniteAlgebra::loop_algebra(&q, &k2).unwrap(),
            &Specialization::augmentation(&b),
        )
        .unwrap_err();
        assert!(matches!(err, ClassBFailure::CentroidExceedsGamma(_)));
    }

    #[test]
    fn twist_laws() {
        let q = QuotientMap::standard(vec![2, 2]).unwrap();
        let one = CycloNumber::one();
        let base = a(2, &one, &one);
        let triv = Character::trivial(q.kernel_basis()).unwrap();
        assert_eq!(twist(&base, &triv, &q).unwrap(), base);
        let c1 = Character::on_kernel(&q, vec![CycloNumber::from_int(-1), one.clone()]).unwrap();
        let c2 = Character::on_kernel(&q, vec![CycloNumber::root_of_unity(3), CycloNumber::root_of_unity(6)]).unwrap();
        let lhs = twist(&twist(&base, &c1, &q).unwrap(), &c2, &q).unwrap();
        assert_eq!(lhs, twist(&base, &c1.mul(&c2).unwrap(), &q).unwrap());
        let psi = vec![CycloNumber::root_of_unity(4), CycloNumber::from_int(3)];
        let chi = Character::restricted_from_lattice(&q, &psi).unwrap();
        let tw = twist(&base, &chi, &q).unwrap();
        let f = extension_iso(&base, &q, &psi).unwrap();
        assert_eq!(base.homomorphism_failure(&tw, &f), None);
    }

    #[test]
    fn twisted_central_images() {
        let q = QuotientMap::standard(vec![2, 2]).unwrap();
        let one = CycloNumber::one();
        let b = GammaFiniteAlgebra::loop_algebra(&q, &a(2, &one, &one)).unwrap();
        let rho = Specialization::augmentation(&b);
        let chi = Character::on_kernel(&q, vec![CycloNumber::from_int(5), CycloNumber::root_of_unity(3)]).unwrap();
        let lhs = central_image(&b, &rho_chi(&rho, &chi).unwrap()).unwrap();
        assert_eq!(lhs, twist(&central_image(&b, &rho).unwrap(), &chi, &q).unwrap());
    }

    #[test]
    fn similarity() {
        let q = QuotientMap::standard(vec![2, 2]).unwrap();
        let one = CycloNumber::one();
        let m1 = CycloNumber::from_int(-1);
        assert!(matches!(similar_check(&a(2, &one, &one), &a(2, &one, &m1), &q).unwrap(), Similarity::Similar { .. }));
        let q3 = QuotientMap::standard(vec![3, 3]).unwrap();
        let e2 = FinGradedAlgebra::power_norm_residue(3, 2, &one, &one).unwrap();
        assert_eq!(similar_check(&a(3, &one, &one), &e2, &q3).unwrap(), Similarity::NotSimilar);
    }
}
