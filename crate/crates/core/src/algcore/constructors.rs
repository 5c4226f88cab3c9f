use num_integer::Integer;

use super::FinGradedAlgebra;
use crate::cyclo::CycloNumber;
use crate::error::{Error, Result};
use crate::lattice::{BarElement, BarGroup};

impl FinGradedAlgebra {
    /// Zero-product algebra, trivially graded.
    pub fn zero_algebra(dim: usize) -> Self {
        Self::ungraded(dim, vec![CycloNumber::zero(); dim * dim * dim]).expect("zero algebra")
    }

    /// `M_ℓ(k)` in the matrix-unit basis `E_ab ↦ a·ℓ + b`, trivially graded.
    pub fn matrix_algebra(l: usize) -> Self {
        let g = BarGroup::trivial();
        Self::matrix_algebra_elementary(&g, &vec![g.zero(); l]).expect("trivial grading")
    }

    /// `M_ℓ(k)` with the elementary grading `deg E_ab = g_a − g_b`.
    pub fn matrix_algebra_elementary(group: &BarGroup, g: &[BarElement]) -> Result<Self> {
        let l = g.len();
        let degrees = (0..l * l)
            .map(|idx| group.sub(&g[idx / l], &g[idx % l]))
            .collect();
        let mut entries = Vec::new();
        for a in 0..l {
            for b in 0..l {
                for d in 0..l {
                    entries.push((a * l + b, b * l + d, a * l + d, CycloNumber::one()));
                }
            }
        }
        let out = Self::from_entries(group.clone(), degrees, entries)?;
        Ok(if l == 1 { out.with_unit_hint(0) } else { out })
    }

    /// `k[Λ̄]` with basis the group elements in lexicographic order, graded by itself.
    pub fn group_algebra(group: &BarGroup) -> Self {
        let elems = group.elements();
        let mut entries = Vec::new();
        for (i, a) in elems.iter().enumerate() {
            for (j, b) in elems.iter().enumerate() {
                entries.push((i, j, group.index_of(&group.add(a, b)), CycloNumber::one()));
            }
        }
        Self::from_entries(group.clone(), elems, entries)
            .expect("group algebra grading")
            .with_unit_hint(0)
    }

    /// `A_{a₁,a₂}`: basis `y₁^i y₂^j ↦ i·m + j` with `y₁^m = a₁`, `y₂^m = a₂`,
    /// `y₂y₁ = ζ_m^e y₁y₂`, graded over `(Z/m)²` by `deg y₁^i y₂^j = (i, j)`.
    pub fn power_norm_residue(m: u64, e: i64, a1: &CycloNumber, a2: &CycloNumber) -> Result<Self> {
        if m == 0 {
            return Err(Error::Invalid("m must be positive".into()));
        }
        if a1.is_zero() || a2.is_zero() {
            return Err(Error::Invalid("a₁ and a₂ must be nonzero".into()));
        }
        if e.gcd(&(m as i64)) != 1 {
            return Err(Error::Invalid(format!("e = {e} is not coprime to m = {m}")));
        }
        let mm = m as usize;
        let group = BarGroup::new(vec![m, m])?;
        let degrees = (0..mm * mm)
            .map(|idx| BarElement(vec![(idx / mm) as u64, (idx % mm) as u64]))
            .collect();
        let mut entries = Vec::new();
        for i in 0..mm {
            for j in 0..mm {
                for k in 0..mm {
                    for l in 0..mm {
                        let mut c = CycloNumber::zeta_pow(m, e * (j * k) as i64);
                        let (mut p, mut q) = (i + k, j + l);
                        if p >= mm {
                            p -= mm;
                            c = &c * a1;
                        }
                        if q >= mm {
                            q -= mm;
                            c = &c * a2;
                        }
                        entries.push((i * mm + j, k * mm + l, p * mm + q, c));
                    }
                }
            }
        }
        Ok(Self::from_entries(group, degrees, entries)?.with_unit_hint(0))
    }

    /// `sl₂` in the basis `e, h, f` (trivially graded).
    pub fn sl2() -> Self {
        let one = CycloNumber::one;
        let n = |v: i64| CycloNumber::from_int(v);
        let entries = vec![
            (1, 0, 0, n(2)),
            (0, 1, 0, n(-2)),
            (1, 2, 2, n(-2)),
            (2, 1, 2, n(2)),
            (0, 2, 1, one()),
            (2, 0, 1, n(-1)),
        ];
        let g = BarGroup::trivial();
        Self::from_entries(g.clone(), vec![g.zero(); 3], entries).expect("sl2")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::unit_vector;

    #[test]
    fn basic_products() {
        let z2 = FinGradedAlgebra::group_algebra(&BarGroup::new(vec![2]).unwrap());
        assert_eq!(z2.multiply(&unit_vector(2, 1), &unit_vector(2, 1)), unit_vector(2, 0));
        let m2 = FinGradedAlgebra::matrix_algebra(2);
        assert_eq!(m2.multiply(&unit_vector(4, 0), &unit_vector(4, 1)), unit_vector(4, 1));
        let z3 = FinGradedAlgebra::group_algebra(&BarGroup::new(vec![3]).unwrap());
        assert_eq!(z3.multiply(&unit_vector(3, 1), &unit_vector(3, 2)), unit_vector(3, 0));
    }

    #[test]
    fn power_norm_residue_relations() {
        let one = CycloNumber::one();
        let a = FinGradedAlgebra::power_norm_residue(2, 1, &one, &one).unwrap();
        assert_eq!(a.dim(), 4);
        let (y1, y2) = (unit_vector(4, 2), unit_vector(4, 1));
        let y1y2 = a.multiply(&y1, &y2);
        let y2y1 = a.multiply(&y2, &y1);
        assert_eq!(y2y1, y1y2.iter().map(|c| -c).collect::<Vec<_>>());
        assert!(a.is_associative());
        assert!(a.is_invertible(&y1).unwrap());
        let z3 = CycloNumber::root_of_unity(3);
        let b = FinGradedAlgebra::power_norm_residue(3, 1, &z3, &CycloNumber::from_int(2)).unwrap();
        assert!(b.is_associative());
        let y1 = unit_vector(9, 3);
        let y1sq = b.multiply(&y1, &y1);
        assert_eq!(b.multiply(&y1sq, &y1), crate::linalg::scale_vector(&z3, &unit_vector(9, 0)));
        assert!(FinGradedAlgebra::power_norm_residue(2, 2, &one, &one).is_err());
        assert!(FinGradedAlgebra::power_norm_residue(2, 1, &CycloNumber::zero(), &one).is_err());
    }

    #[test]
    fn sl2_is_anticommutative() {
        let s = FinGradedAlgebra::sl2();
        for i in 0..3 {
            for j in 0..3 {
                let a = s.multiply(&unit_vector(3, i), &unit_vector(3, j));
                let b = s.multiply(&unit_vector(3, j), &unit_vector(3, i));
                assert_eq!(a, b.iter().map(|c| -c).collect::<Vec<_>>());
            }
        }
    }
}
