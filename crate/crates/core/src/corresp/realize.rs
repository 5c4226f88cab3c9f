use std::fmt;

use super::{certify_class_b, central_image, Specialization};
use crate::algcore::FinGradedAlgebra;
use crate::autograde::{autos_from_grading, AutomorphismSystem};
use crate::error::{Error, Result};
use crate::lattice::{is_admissible, IntMatrix, QuotientMap};
use crate::linalg::Matrix;
use crate::loopcore::{graded_iso_check, verify_on_box, GammaFiniteAlgebra, GradedIsoWitness, IsoFailure};

/// `B ≅_Λ M_m(A, σ)_ν` with `ν(λ) = λ·base_change`ᵗ, witnessed on `B` re-presented over the
/// quotient map of the regraded multiloop algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealizationCertificate {
    pub m: Vec<u64>,
    pub base_change: IntMatrix,
    pub a: FinGradedAlgebra,
    pub s: AutomorphismSystem,
    pub witness: GradedIsoWitness,
}

// columns of `phis[θ]`: images of the θ-basis of `src` in the θ-basis of `dst`, read off from
// coordinates of the underlying finite-dimensional vectors
fn component_maps(
    src: &GammaFiniteAlgebra,
    dst: &GammaFiniteAlgebra,
    coords: &Matrix,
) -> Vec<Matrix> {
    let t = src.num_components();
    let mut src_pos = vec![Vec::new(); t];
    let mut dst_pos = vec![Vec::new(); t];
    for th in 0..t {
        src_pos[th] = vec![0; src.comp_dims()[th]];
        dst_pos[th] = vec![0; dst.comp_dims()[th]];
    }
    for (p, &(th, i)) in src.basis_order().iter().enumerate() {
        src_pos[th][i] = p;
    }
    for (p, &(th, i)) in dst.basis_order().iter().enumerate() {
        dst_pos[th][i] = p;
    }
    (0..t)
        .map(|th| {
            let (ds, dd) = (src.comp_dims()[th], dst.comp_dims()[th]);
            let mut phi = Matrix::zeros(dd, ds);
            for i in 0..ds {
                for j in 0..dd {
                    phi[(j, i)] = coords[(dst_pos[th][j], src_pos[th][i])].clone();
                }
            }
            phi
        })
        .collect()
}

/// Writes a class-B algebra with finite `Λ/Γ` as a regraded multiloop algebra.
pub fn realize(b: &GammaFiniteAlgebra) -> Result<RealizationCertificate> {
    certify_class_b(b, &Specialization::augmentation(b)).map_err(|f| Error::Certification(f.to_string()))?;
    let q = QuotientMap::from_sublattice(&b.quotient().kernel_basis())?;
    let b2 = b.represent_with(&q)?;
    let a = central_image(&b2, &Specialization::augmentation(&b2))?;
    let m = q.moduli().to_vec();
    let s = autos_from_grading(&a, &m)?;
    let (ml, eg) = GammaFiniteAlgebra::multiloop_with_eigenbasis(&s)?;
    let base_change = q.basis_change().transpose();
    let mnu = ml.regrade(&base_change)?;
    let tinv = eg.change.inverse()?;
    let witness = GradedIsoWitness {
        phis: component_maps(&b2, &mnu, &tinv),
        chi: b2.augmentation(),
    };
    graded_iso_check(&b2, &mnu, &witness).map_err(|e| Error::Certification(e.to_string()))?;
    Ok(RealizationCertificate {
        m,
        base_change,
        a,
        s,
        witness,
    })
}

/// Re-derives both sides from the certificate data and checks the witness.
pub fn verify_realization(b: &GammaFiniteAlgebra, cert: &RealizationCertificate) -> std::result::Result<(), IsoFailure> {
    let fail = |e: Error| IsoFailure::BadCharacter(e.to_string());
    if cert.s.orders() != cert.m.as_slice() || cert.s.validate().is_err() {
        return Err(IsoFailure::QuotientMismatch);
    }
    let mnu = GammaFiniteAlgebra::multiloop(&cert.s)
        .and_then(|ml| ml.regrade(&cert.base_change))
        .map_err(fail)?;
    let b2 = b.represent_with(mnu.quotient()).map_err(|_| IsoFailure::QuotientMismatch)?;
    graded_iso_check(&b2, &mnu, &cert.witness)
}

/// `S′` with `σ′ᵢ = Π_j σ_j^{p_ji}`, `R = Q⁻¹`, and a witness `M_{m′}(A, σ′) → M_m(A, σ)_R`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransportCertificate {
    pub s_prime: AutomorphismSystem,
    pub r: IntMatrix,
    pub witness: GradedIsoWitness,
}

pub fn multiloop_transport(m: &[u64], m_prime: &[u64], p: &IntMatrix, s: &AutomorphismSystem) -> Result<TransportCertificate> {
    let q = is_admissible(p, m_prime, m)?.ok_or_else(|| Error::NotAdmissible {
        mprime: m_prime.to_vec(),
        m: m.to_vec(),
    })?;
    if s.orders() != m {
        return Err(Error::GradingMismatch {
            expected: m.to_vec(),
            found: s.orders().to_vec(),
        });
    }
    if let Err(v) = s.validate() {
        return Err(Error::Precondition(v.to_string()));
    }
    let n = m.len();
    let sigmas = (0..n)
        .map(|i| {
            let col: Vec<i64> = (0..n).map(|j| p.row_i64(j)[i]).collect();
            s.word(&col)
        })
        .collect();
    let s_prime = AutomorphismSystem::new(s.base().clone(), sigmas, m_prime.to_vec())?;
    let r = q.inverse_unimodular()?;
    let (mp, egp) = GammaFiniteAlgebra::multiloop_with_eigenbasis(&s_prime)?;
    let (ml, eg) = GammaFiniteAlgebra::multiloop_with_eigenbasis(s)?;
    let mr = ml.regrade(&r)?.represent_with(mp.quotient())?;
    let coords = eg.change.inverse()?.mul(&egp.change);
    let witness = GradedIsoWitness {
        phis: component_maps(&mp, &mr, &coords),
        chi: mp.augmentation(),
    };
    graded_iso_check(&mp, &mr, &witness).map_err(|e| Error::Certification(e.to_string()))?;
    Ok(TransportCertificate { s_prime, r, witness })
}

/// Rebuilds both multiloop algebras and checks the witness on `Θ × Θ` and on the box.
pub fn verify_transport(
    s: &AutomorphismSystem,
    cert: &TransportCertificate,
    bounds: &[(i64, i64)],
) -> std::result::Result<(), IsoFailure> {
    let fail = |e: Error| IsoFailure::BadCharacter(e.to_string());
    if cert.s_prime.validate().is_err() {
        return Err(IsoFailure::QuotientMismatch);
    }
    let mp = GammaFiniteAlgebra::multiloop(&cert.s_prime).map_err(fail)?;
    let mr = GammaFiniteAlgebra::multiloop(s)
        .and_then(|ml| ml.regrade(&cert.r))
        .map_err(fail)?
        .represent_with(mp.quotient())
        .map_err(|_| IsoFailure::QuotientMismatch)?;
    graded_iso_check(&mp, &mr, &cert.witness)?;
    verify_on_box(&mp, &mr, &cert.witness, bounds)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IsogradedFailure {
    NotAdmissible,
    NotInvertible,
    NotHomomorphism { i: usize, j: usize },
    Conjugation { j: usize },
    Malformed(String),
}

impl fmt::Display for IsogradedFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IsogradedFailure::NotAdmissible => write!(f, "P is not (m′,m)-admissible"),
            IsogradedFailure::NotInvertible => write!(f, "φ is not invertible"),
            IsogradedFailure::NotHomomorphism { i, j } => write!(f, "φ(x_{i} x_{j}) ≠ φ(x_{i}) φ(x_{j})"),
            IsogradedFailure::Conjugation { j } => write!(f, "σ′_{} ≠ φ (Π_i σ_i^(p_i{})) φ⁻¹", j + 1, j + 1),
            IsogradedFailure::Malformed(s) => write!(f, "malformed witness: {s}"),
        }
    }
}

impl std::error::Error for IsogradedFailure {}

/// Checks that `(P, φ)` makes `M_m(A, σ)` and `M_{m′}(A′, σ′)` isograded-isomorphic:
/// `P` admissible, `φ: A → A′` an isomorphism, and `σ′_j = φ (Π_i σ_i^{p_ij}) φ⁻¹`.
pub fn isograded_check(
    s: &AutomorphismSystem,
    s2: &AutomorphismSystem,
    p: &IntMatrix,
    phi: &Matrix,
) -> std::result::Result<(), IsogradedFailure> {
    let n = s.rank();
    if s2.rank() != n || p.nrows() != n || p.ncols() != n {
        return Err(IsogradedFailure::Malformed("ranks differ".into()));
    }
    if phi.nrows() != s2.base().dim() || phi.ncols() != s.base().dim() {
        return Err(IsogradedFailure::Malformed("φ has the wrong shape".into()));
    }
    match is_admissible(p, s2.orders(), s.orders()) {
        Ok(Some(_)) => {}
        Ok(None) | Err(_) => return Err(IsogradedFailure::NotAdmissible),
    }
    let phi_inv = phi.inverse().map_err(|_| IsogradedFailure::NotInvertible)?;
    if let Some((i, j)) = s.base().homomorphism_failure(s2.base(), phi) {
        return Err(IsogradedFailure::NotHomomorphism { i, j });
    }
    for j in 0..n {
        let col: Vec<i64> = (0..n).map(|i| p.row_i64(i)[j]).collect();
        let rhs = phi.mul(&s.word(&col)).mul(&phi_inv);
        if rhs != s2.sigmas()[j] {
            return Err(IsogradedFailure::Conjugation { j });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::CycloNumber;

    fn qtorus_system(m: u64, e: i64) -> AutomorphismSystem {
        let one = CycloNumber::one();
        let a = FinGradedAlgebra::power_norm_residue(m, e, &one, &one).unwrap();
        autos_from_grading(&a, &[m, m]).unwrap()
    }

    #[test]
    fn realize_quantum_torus() {
        let b = GammaFiniteAlgebra::multiloop(&qtorus_system(2, 1)).unwrap();
        let cert = realize(&b).unwrap();
        assert_eq!(cert.m, vec![2, 2]);
        assert_eq!(verify_realization(&b, &cert), Ok(()));
        let p = IntMatrix::from_i64(&[&[2, 1], &[1, 1]]);
        let scrambled = b.regrade(&p).unwrap();
        let cert = realize(&scrambled).unwrap();
        assert_eq!(cert.m, vec![2, 2]);
        assert_eq!(verify_realization(&scrambled, &cert), Ok(()));
        let l = GammaFiniteAlgebra::laurent(1);
        let cert = realize(&l).unwrap();
        assert_eq!(cert.m, vec![1]);
        assert_eq!(cert.a.dim(), 1);
    }

    #[test]
    fn transport_certificates() {
        let s = qtorus_system(2, 1);
        let p = IntMatrix::from_i64(&[&[1, 0], &[1, 1]]);
        let cert = multiloop_transport(&[2, 2], &[2, 2], &p, &s).unwrap();
        assert_eq!(verify_transport(&s, &cert, &[(-3, 3), (-3, 3)]), Ok(()));
        let id = multiloop_transport(&[2, 2], &[2, 2], &IntMatrix::identity(2), &s).unwrap();
        assert_eq!(id.s_prime, s);
        assert_eq!(id.r, IntMatrix::identity(2));
        // Z/2 ⊕ Z/2 and Z/4 are not isomorphic, so no P is admissible
        assert!(multiloop_transport(&[2, 2], &[1, 4], &IntMatrix::identity(2), &s).is_err());
    }

    #[test]
    fn swapped_quantum_tori_are_isograded() {
        let s = qtorus_system(3, 1);
        let s2 = qtorus_system(3, 2);
        let p = IntMatrix::from_i64(&[&[0, 1], &[1, 0]]);
        // y₁^i y₂^j ↦ (y₂′)^i (y₁′)^j = ζ^{2ij} y₁′^j y₂′^i
        let mut phi = Matrix::zeros(9, 9);
        for i in 0..3 {
            for j in 0..3 {
                phi[(j * 3 + i, i * 3 + j)] = CycloNumber::zeta_pow(3, 2 * (i * j) as i64);
            }
        }
        assert_eq!(isograded_check(&s, &s2, &p, &phi), Ok(()));
        assert_eq!(isograded_check(&s, &s, &IntMatrix::identity(2), &Matrix::identity(9)), Ok(()));
        assert!(matches!(
            isograded_check(&s, &s2, &p, &Matrix::identity(9)),
            Err(IsogradedFailure::NotHomomorphism { .. })
        ));
        let swapped = AutomorphismSystem::new(
            s.base().clone(),
            vec![s.sigmas()[1].clone(), s.sigmas()[0].clone()],
            vec![3, 3],
        )
        .unwrap();
        assert_eq!(
            isograded_check(&s, &swapped, &IntMatrix::identity(2), &Matrix::identity(9)),
            Err(IsogradedFailure::Conjugation { j: 0 })
        );
    }
}
