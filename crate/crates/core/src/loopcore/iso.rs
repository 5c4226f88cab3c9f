use std::fmt;

use super::{box_points, GammaFiniteAlgebra, Homogeneous};
use crate::error::Result;
use crate::lattice::Character;
use crate::linalg::{scale_vector, Matrix};
use crate::multiplicative::{MonomialReducer, MonomialSolution};

/// `ω(z^γ x) = χ(γ) z^γ φ_θ(x)` for `x ∈ B^θ`, `θ ∈ Θ`, `γ ∈ Γ`.
///
/// Column `i` of `phis[θ]` is the image of the `i`-th basis vector of `B^θ` in the basis of `B′^θ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedIsoWitness {
    pub phis: Vec<Matrix>,
    pub chi: Character,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IsoFailure {
    QuotientMismatch,
    ComponentMismatch { theta: usize },
    Singular { theta: usize },
    BadCharacter(String),
    Product { a: usize, b: usize, i: usize, j: usize },
    BoxProduct { lambda: Vec<i64>, mu: Vec<i64>, i: usize, j: usize },
}

impl fmt::Display for IsoFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IsoFailure::QuotientMismatch => write!(f, "presentations use different quotient maps"),
            IsoFailure::ComponentMismatch { theta } => write!(f, "component {theta} has mismatched dimensions"),
            IsoFailure::Singular { theta } => write!(f, "map on component {theta} is not invertible"),
            IsoFailure::BadCharacter(s) => write!(f, "character: {s}"),
            IsoFailure::Product { a, b, i, j } => {
                write!(f, "ω(x_{i} x_{j}) ≠ ω(x_{i}) ω(x_{j}) for components ({a},{b})")
            }
            IsoFailure::BoxProduct { lambda, mu, i, j } => {
                write!(f, "product of degrees {lambda:?}, {mu:?} (basis {i}, {j}) is not preserved")
            }
        }
    }
}

impl std::error::Error for IsoFailure {}

fn structural_check(b: &GammaFiniteAlgebra, b2: &GammaFiniteAlgebra, w: &GradedIsoWitness) -> std::result::Result<(), IsoFailure> {
    if b.quotient() != b2.quotient() {
        return Err(IsoFailure::QuotientMismatch);
    }
    if w.phis.len() != b.num_components() {
        return Err(IsoFailure::ComponentMismatch { theta: w.phis.len() });
    }
    for (theta, phi) in w.phis.iter().enumerate() {
        let (d, d2) = (b.comp_dims()[theta], b2.comp_dims()[theta]);
        if d != d2 || phi.nrows() != d || phi.ncols() != d {
            return Err(IsoFailure::ComponentMismatch { theta });
        }
        if d > 0 && !phi.is_invertible() {
            return Err(IsoFailure::Singular { theta });
        }
    }
    let kb = b.quotient().kernel_basis();
    for r in 0..kb.nrows() {
        w.chi
            .eval(&kb.row_i64(r))
            .map_err(|e| IsoFailure::BadCharacter(e.to_string()))?;
    }
    Ok(())
}

fn image(b2: &GammaFiniteAlgebra, w: &GradedIsoWitness, x: &Homogeneous) -> Homogeneous {
    let coords = w.phis[x.theta].mul_vec(&x.coords);
    let c = w.chi.eval(&x.shift).expect("shift lies in Γ");
    debug_assert_eq!(b2.num_components(), w.phis.len());
    Homogeneous {
        theta: x.theta,
        shift: x.shift.clone(),
        coords: scale_vector(&c, &coords),
    }
}

/// Checks `χ(γ) φ_θ″(x_i x_j) = φ_θ(x_i) φ_θ′(x_j)` on every pair of `Θ × Θ`.
pub fn graded_iso_check(
    b: &GammaFiniteAlgebra,
    b2: &GammaFiniteAlgebra,
    w: &GradedIsoWitness,
) -> std::result::Result<(), IsoFailure> {
    structural_check(b, b2, w)?;
    let t = b.num_components();
    for a in 0..t {
        for c in 0..t {
            for i in 0..b.comp_dims()[a] {
                for j in 0..b.comp_dims()[c] {
                    let x = b.basis_at(&b.reps()[a], i);
                    let y = b.basis_at(&b.reps()[c], j);
                    let lhs = image(b2, w, &b.product(&x, &y));
                    let rhs = b2.product(&image(b2, w, &x), &image(b2, w, &y));
                    if lhs != rhs {
                        return Err(IsoFailure::Product { a, b: c, i, j });
                    }
                }
            }
        }
    }
    Ok(())
}

/// Re-checks the witness on every product of basis elements with degrees in the box.
pub fn verify_on_box(
    b: &GammaFiniteAlgebra,
    b2: &GammaFiniteAlgebra,
    w: &GradedIsoWitness,
    bounds: &[(i64, i64)],
) -> std::result::Result<(), IsoFailure> {
    structural_check(b, b2, w)?;
    let pts = box_points(bounds);
    for l in &pts {
        for m in &pts {
            let sum: Vec<i64> = l.iter().zip(m).map(|(x, y)| x + y).collect();
            for i in 0..b.dim_at(l) {
                for j in 0..b.dim_at(m) {
                    let x = b.basis_at(l, i);
                    let y = b.basis_at(m, j);
                    let lhs = image(b2, w, &b.product(&x, &y));
                    let rhs = b2.product(&image(b2, w, &x), &image(b2, w, &y));
                    if lhs != rhs || b2.degree_of(&rhs) != sum {
                        return Err(IsoFailure::BoxProduct {
                            lambda: l.clone(),
                            mu: m.clone(),
                            i,
                            j,
                        });
                    }
                }
            }
        }
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(GradedIsoWitness),
    /// No diagonal isomorphism exists over any extension of the scalars.
    Absent,
    /// One exists over the algebraic closure but needs roots outside the cyclotomic tower.
    Undetermined,
}

/// Searches for an isomorphism whose maps `φ_θ` are diagonal in the given bases.
///
/// Unknowns are the diagonal entries and the values of `χ` on the kernel basis; each nonzero
/// structure constant gives one monomial equation, reduced as it arrives.
pub fn diagonal_iso_search(b: &GammaFiniteAlgebra, b2: &GammaFiniteAlgebra) -> Result<SearchOutcome> {
    if b.quotient() != b2.quotient() || b.comp_dims() != b2.comp_dims() {
        return Ok(SearchOutcome::Absent);
    }
    let q = b.quotient();
    let t = b.num_components();
    let dims = b.comp_dims();
    let mut offset = vec![0; t + 1];
    for th in 0..t {
        offset[th + 1] = offset[th] + dims[th];
    }
    let r = q.rank();
    let nvars = offset[t] + r;
    let mut system = MonomialReducer::new(nvars);
    for a in 0..t {
        for c in 0..t {
            let p = b.pair(a, c);
            let p2 = b2.pair(a, c);
            let gamma = q.kernel_coords(&p.shift).expect("shift lies in Γ");
            for i in 0..dims[a] {
                for j in 0..dims[c] {
                    let idx = i * dims[c] + j;
                    for (k, (u, v)) in p.coeffs[idx].iter().zip(&p2.coeffs[idx]).enumerate() {
                        if u.is_zero() != v.is_zero() {
                            return Ok(SearchOutcome::Absent);
                        }
                        if u.is_zero() {
                            continue;
                        }
                        // s_{a,i} s_{c,j} s_{target,k}⁻¹ χ(γ)⁻¹ = u / v
                        let mut row = vec![0i64; nvars];
                        row[offset[a] + i] += 1;
                        row[offset[c] + j] += 1;
                        row[offset[p.target] + k] -= 1;
                        for (l, g) in gamma.iter().enumerate() {
                            row[offset[t] + l] -= g;
                        }
                        if !system.insert(row, u * &v.inv()?) {
                            return Ok(SearchOutcome::Absent);
                        }
                    }
                }
            }
        }
    }
    match system.solve() {
        MonomialSolution::Solved(u) => {
            let phis = (0..t)
                .map(|th| Matrix::diagonal(&u[offset[th]..offset[th + 1]]))
                .collect();
            let chi = Character::on_kernel(q, u[offset[t]..].to_vec())?;
            let w = GradedIsoWitness { phis, chi };
            debug_assert!(graded_iso_check(b, b2, &w).is_ok());
            Ok(SearchOutcome::Found(w))
        }
        MonomialSolution::Inconsistent => Ok(SearchOutcome::Absent),
        MonomialSolution::Unresolved => Ok(SearchOutcome::Undetermined),
    }
}

/// Identity maps on every component together with `χ`.
pub fn identity_witness(b: &GammaFiniteAlgebra, chi: Character) -> GradedIsoWitness {
    GradedIsoWitness {
        phis: b.comp_dims().iter().map(|&d| Matrix::identity(d)).collect(),
        chi,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algcore::FinGradedAlgebra;
    use crate::cyclo::CycloNumber;
    use crate::lattice::{IntMatrix, QuotientMap};

    fn qtorus(m: u64, e: i64, a1: &CycloNumber, a2: &CycloNumber) -> GammaFiniteAlgebra {
        let a = FinGradedAlgebra::power_norm_residue(m, e, a1, a2).unwrap();
        GammaFiniteAlgebra::loop_algebra(&QuotientMap::standard(vec![m, m]).unwrap(), &a).unwrap()
    }

    #[test]
    fn loops_of_twisted_forms_are_isomorphic() {
        // L(A_{1,1}) ≅ L(A_{-1,1}): both are the quantum torus at q = -1
        let one = CycloNumber::one();
        let b = qtorus(2, 1, &one, &one);
        let b2 = qtorus(2, 1, &CycloNumber::from_int(-1), &one);
        let SearchOutcome::Found(w) = diagonal_iso_search(&b, &b2).unwrap() else {
            panic!("expected a diagonal isomorphism")
        };
        assert_eq!(graded_iso_check(&b, &b2, &w), Ok(()));
        assert_eq!(verify_on_box(&b, &b2, &w, &[(-2, 2), (-2, 2)]), Ok(()));
        let id = identity_witness(&b, b.augmentation());
        assert!(graded_iso_check(&b, &b2, &id).is_err());
    }

    #[test]
    fn opposite_commutation_is_not_diagonal() {
        let one = CycloNumber::one();
        let b = qtorus(3, 1, &one, &one);
        let b2 = qtorus(3, 2, &one, &one);
        assert_eq!(diagonal_iso_search(&b, &b2).unwrap(), SearchOutcome::Absent);
        // swapping the coordinates exchanges ζ and ζ⁻¹
        let swap = IntMatrix::from_i64(&[&[0, 1], &[1, 0]]);
        let r = b2.regrade(&swap).unwrap();
        let r = r.represent_with(b.quotient()).unwrap();
        assert!(matches!(diagonal_iso_search(&b, &r).unwrap(), SearchOutcome::Found(_)));
    }
}
