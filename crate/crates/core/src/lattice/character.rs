use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use super::{IntMatrix, QuotientMap};
use crate::cyclo::CycloNumber;
use crate::error::{Error, Result};

/// Homomorphism `Γ → k^×` given by its values on a basis of the full-rank lattice `Γ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character {
    basis: IntMatrix,
    inv: Vec<Vec<BigRational>>,
    values: Vec<CycloNumber>,
}

impl Character {
    /// `basis` rows must be linearly independent and `values` nonzero.
    pub fn new(basis: IntMatrix, values: Vec<CycloNumber>) -> Result<Self> {
        if !basis.is_square() || basis.nrows() != values.len() {
            return Err(Error::Dimension(
                "character needs one value per basis vector of Γ".into(),
            ));
        }
        if values.iter().any(CycloNumber::is_zero) {
            return Err(Error::SingularScalar);
        }
        let inv = basis.rational_inverse().ok_or(Error::SingularMatrix)?;
        Ok(Character { basis, inv, values })
    }

    pub fn trivial(basis: IntMatrix) -> Result<Self> {
        let n = basis.nrows();
        Self::new(basis, vec![CycloNumber::one(); n])
    }

    /// Character on the kernel of `q`, valued on [`QuotientMap::kernel_basis`].
    pub fn on_kernel(q: &QuotientMap, values: Vec<CycloNumber>) -> Result<Self> {
        Self::new(q.kernel_basis(), values)
    }

    /// Restriction to `Γ` of the character of `Zⁿ` with `ψ(eᵢ) = psi[i]`.
    pub fn restricted_from_lattice(q: &QuotientMap, psi: &[CycloNumber]) -> Result<Self> {
        let basis = q.kernel_basis();
        let values = (0..basis.nrows())
            .map(|i| lattice_character_eval(psi, &basis.row_i64(i)))
            .collect();
        Self::new(basis, values)
    }

    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    pub fn values(&self) -> &[CycloNumber] {
        &self.values
    }

    pub fn rank(&self) -> usize {
        self.values.len()
    }

    /// Coordinates of `γ` in the basis, if `γ ∈ Γ`.
    pub fn coords(&self, gamma: &[i64]) -> Option<Vec<i64>> {
        if gamma.len() != self.rank() {
            return None;
        }
        (0..self.rank())
            .map(|j| {
                let mut s = BigRational::zero();
                for (i, &g) in gamma.iter().enumerate() {
                    if g != 0 {
                        s += &self.inv[i][j] * BigRational::from_integer(BigInt::from(g));
                    }
                }
                if s.is_integer() {
                    s.to_integer().to_i64()
                } else {
                    None
                }
            })
            .collect()
    }

    pub fn eval(&self, gamma: &[i64]) -> Result<CycloNumber> {
        let c = self.coords(gamma).ok_or(Error::NotInSublattice)?;
        let mut out = CycloNumber::one();
        for (v, &e) in self.values.iter().zip(&c) {
            if e != 0 {
                out *= &v.pow(e);
            }
        }
        Ok(out)
    }

    /// The same character expressed on another basis of the same lattice.
    pub fn rebase(&self, basis: &IntMatrix) -> Result<Self> {
        let values = (0..basis.nrows())
            .map(|i| self.eval(&basis.row_i64(i)))
            .collect::<Result<Vec<_>>>()?;
        let out = Self::new(basis.clone(), values)?;
        // both lattices must coincide, not merely nest
        for i in 0..self.rank() {
            if out.coords(&self.basis.row_i64(i)).is_none() {
                return Err(Error::NotInSublattice);
            }
        }
        Ok(out)
    }

    /// Pointwise product.
    pub fn mul(&self, other: &Character) -> Result<Self> {
        let o = if other.basis == self.basis {
            other.clone()
        } else {
            other.rebase(&self.basis)?
        };
        let values = self.values.iter().zip(&o.values).map(|(a, b)| a * b).collect();
        Self::new(self.basis.clone(), values)
    }

    pub fn inverse(&self) -> Self {
        let values = self
            .values
            .iter()
            .map(|v| v.inv().expect("character values are nonzero"))
            .collect();
        Self::new(self.basis.clone(), values).expect("same basis")
    }

    pub fn is_trivial(&self) -> bool {
        self.values.iter().all(CycloNumber::is_one)
    }

    /// Whether both characters agree on every element of `Γ`.
    pub fn same_as(&self, other: &Character) -> bool {
        match other.rebase(&self.basis) {
            Ok(o) => o.values == self.values,
            Err(_) => false,
        }
    }
}

/// `ψ(λ) = Π ψᵢ^{λᵢ}` for a character of `Zⁿ` given on the standard basis.
pub fn lattice_character_eval(psi: &[CycloNumber], lambda: &[i64]) -> CycloNumber {
    let mut out = CycloNumber::one();
    for (p, &e) in psi.iter().zip(lambda) {
        if e != 0 {
            out *= &p.pow(e);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gamma22() -> IntMatrix {
        IntMatrix::diag(&[2, 2])
    }

    #[test]
    fn evaluations() {
        let t = Character::trivial(gamma22()).unwrap();
        assert!(t.eval(&[4, -6]).unwrap().is_one());
        let chi = Character::new(gamma22(), vec![CycloNumber::from_int(-1), CycloNumber::one()]).unwrap();
        assert_eq!(chi.eval(&[2, 0]).unwrap(), CycloNumber::from_int(-1));
        let z3 = CycloNumber::root_of_unity(3);
        let chi = Character::new(gamma22(), vec![z3.clone(), z3.clone()]).unwrap();
        assert_eq!(chi.eval(&[2, 2]).unwrap(), z3.pow(2));
        assert_eq!(chi.eval(&[1, 0]), Err(Error::NotInSublattice));
        assert!(chi.eval(&[0, 0]).unwrap().is_one());
    }

    #[test]
    fn multiplicative_and_rebase() {
        let z6 = CycloNumber::root_of_unity(6);
        let chi = Character::new(gamma22(), vec![z6.clone(), z6.pow(5)]).unwrap();
        let a = [2, 4];
        let b = [-6, 2];
        let sum = [a[0] + b[0], a[1] + b[1]];
        assert_eq!(chi.eval(&sum).unwrap(), chi.eval(&a).unwrap() * chi.eval(&b).unwrap());
        let other = IntMatrix::from_i64(&[&[2, 2], &[0, 2]]);
        let re = chi.rebase(&other).unwrap();
        assert!(re.same_as(&chi));
        assert!(chi.mul(&chi.inverse()).unwrap().is_trivial());
        assert!(chi.rebase(&IntMatrix::diag(&[4, 2])).is_err());
    }
}
