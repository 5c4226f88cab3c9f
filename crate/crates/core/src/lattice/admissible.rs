use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

use super::{BarElement, BarGroup, IntMatrix};
use crate::error::{Error, Result};

/// `D_{m′} Pᵗ D_m⁻¹` as exact rationals.
pub fn mprime_transpose(p: &IntMatrix, m_prime: &[u64], m: &[u64]) -> Vec<Vec<BigRational>> {
    let n = m.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    BigRational::new(
                        BigInt::from(m_prime[i]) * &p[(j, i)],
                        BigInt::from(m[j]),
                    )
                })
                .collect()
        })
        .collect()
}

fn check_shapes(p: &IntMatrix, m_prime: &[u64], m: &[u64]) -> Result<()> {
    let n = m.len();
    if m_prime.len() != n || p.nrows() != n || p.ncols() != n {
        return Err(Error::Dimension("P, m′ and m must share the rank n".into()));
    }
    if m.iter().chain(m_prime).any(|&x| x == 0) {
        return Err(Error::Invalid("invariant factors must be positive".into()));
    }
    if !p.is_unimodular() {
        return Err(Error::NotUnimodular);
    }
    Ok(())
}

/// `Some(Q)` when `Q = D_{m′} Pᵗ D_m⁻¹` is integral and unimodular.
pub fn is_admissible(p: &IntMatrix, m_prime: &[u64], m: &[u64]) -> Result<Option<IntMatrix>> {
    check_shapes(p, m_prime, m)?;
    let n = m.len();
    let rat = mprime_transpose(p, m_prime, m);
    let mut q = IntMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            if !rat[i][j].is_integer() {
                return Ok(None);
            }
            q[(i, j)] = rat[i][j].to_integer();
        }
    }
    Ok(q.det().abs().is_one().then_some(q))
}

/// The isomorphism `Λ̄′ → Λ̄`, `λ̄ ↦ (λPᵗ)‾`, induced by an admissible `P`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientIso {
    pub source: BarGroup,
    pub target: BarGroup,
    pub p: IntMatrix,
    pt: IntMatrix,
}

impl QuotientIso {
    pub fn apply(&self, bar: &BarElement) -> BarElement {
        let lam: Vec<i64> = bar.0.iter().map(|&x| x as i64).collect();
        self.target.reduce(&self.pt.apply_row(&lam))
    }
}

/// Present exactly when `P` is `(m′, m)`-admissible.
pub fn induced_quotient_iso(p: &IntMatrix, m_prime: &[u64], m: &[u64]) -> Result<Option<QuotientIso>> {
    Ok(is_admissible(p, m_prime, m)?.map(|_| QuotientIso {
        source: BarGroup::new(m_prime.to_vec()).expect("checked"),
        target: BarGroup::new(m.to_vec()).expect("checked"),
        p: p.clone(),
        pt: p.transpose(),
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    // independent oracle: λ ↦ λPᵗ is well defined on Λ̄′ and bijective
    fn induces_bijection(p: &IntMatrix, mp: &[u64], m: &[u64]) -> bool {
        let src = BarGroup::new(mp.to_vec()).unwrap();
        let dst = BarGroup::new(m.to_vec()).unwrap();
        let pt = p.transpose();
        let n = m.len();
        for i in 0..n {
            let mut gen = vec![0i64; n];
            gen[i] = mp[i] as i64;
            if !dst.reduce(&pt.apply_row(&gen)).is_zero() {
                return false;
            }
        }
        let image: HashSet<BarElement> = src
            .elements()
            .iter()
            .map(|b| dst.reduce(&pt.apply_row(&b.0.iter().map(|&x| x as i64).collect::<Vec<_>>())))
            .collect();
        image.len() as u64 == dst.order() && src.order() == dst.order()
    }

    #[test]
    fn spec_examples() {
        let i2 = IntMatrix::identity(2);
        assert_eq!(is_admissible(&i2, &[2, 2], &[2, 2]).unwrap(), Some(i2.clone()));
        let p = IntMatrix::from_i64(&[&[2, 1], &[3, 2]]);
        assert_eq!(
            is_admissible(&p, &[2, 3], &[1, 6]).unwrap(),
            Some(IntMatrix::from_i64(&[&[4, 1], &[3, 1]]))
        );
        assert_eq!(is_admissible(&i2, &[1, 4], &[2, 2]).unwrap(), None);
        assert_eq!(
            is_admissible(&IntMatrix::diag(&[2, 1]), &[1, 1], &[1, 1]),
            Err(Error::NotUnimodular)
        );
    }

    #[test]
    fn induced_map_examples() {
        let iso = induced_quotient_iso(&IntMatrix::identity(2), &[3, 3], &[3, 3])
            .unwrap()
            .unwrap();
        for b in iso.source.elements() {
            assert_eq!(iso.apply(&b), b);
        }
        let p = IntMatrix::from_i64(&[&[2, 1], &[3, 2]]);
        let iso = induced_quotient_iso(&p, &[2, 3], &[1, 6]).unwrap().unwrap();
        let img: HashSet<_> = iso.source.elements().iter().map(|b| iso.apply(b)).collect();
        assert_eq!(img.len(), 6);
        let swap = IntMatrix::from_i64(&[&[0, 1], &[1, 0]]);
        assert!(induced_quotient_iso(&swap, &[2, 4], &[2, 2]).unwrap().is_none());
    }

    #[test]
    fn admissibility_matches_bijection_exhaustively() {
        let pairs: [(&[u64], &[u64]); 6] = [
            (&[2, 2], &[2, 2]),
            (&[1, 4], &[2, 2]),
            (&[1, 6], &[2, 3]),
            (&[2, 3], &[1, 6]),
            (&[1, 4], &[1, 4]),
            (&[2, 3], &[3, 2]),
        ];
        for a in -2..=2 {
            for b in -2..=2 {
                for c in -2..=2 {
                    for d in -2..=2i64 {
                        if (a * d - b * c).abs() != 1 {
                            continue;
                        }
                        let p = IntMatrix::from_i64(&[&[a, b], &[c, d]]);
                        for (mp, m) in pairs {
                            let adm = is_admissible(&p, mp, m).unwrap();
                            assert_eq!(adm.is_some(), induces_bijection(&p, mp, m));
                            if let Some(q) = adm {
                                // duality
                                let back = is_admissible(&q, m, mp).unwrap();
                                assert_eq!(back, Some(p.clone()));
                                let pinv = p.inverse_unimodular().unwrap();
                                let qinv = q.inverse_unimodular().unwrap();
                                assert_eq!(is_admissible(&pinv, m, mp).unwrap(), Some(qinv));
                            }
                        }
                    }
                }
            }
        }
    }
}
