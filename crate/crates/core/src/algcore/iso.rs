use super::FinGradedAlgebra;
use crate::cyclo::CycloNumber;
use crate::lattice::{BarElement, BarGroup};
use crate::linalg::Matrix;
use crate::multiplicative::{MonomialReducer, MonomialSolution};

/// An isomorphism `A → A′` that is graded after relabeling degrees by a group automorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegradedIso {
    /// Images of the standard generators of `Λ̄` under the automorphism.
    pub generator_images: Vec<BarElement>,
    /// Columns are images of the basis of `A` in the basis of `A′`.
    pub phi: Matrix,
}

fn apply(g: &BarGroup, images: &[BarElement], x: &BarElement) -> BarElement {
    let mut out = g.zero();
    for (c, img) in x.0.iter().zip(images) {
        for _ in 0..*c {
            out = g.add(&out, img);
        }
    }
    out
}

/// Automorphisms of `Λ̄`, as images of the standard generators, in a fixed order.
pub fn group_automorphisms(g: &BarGroup) -> Vec<Vec<BarElement>> {
    let elems = g.elements();
    let n = g.rank();
    let candidates: Vec<Vec<BarElement>> = (0..n)
        .map(|i| {
            elems
                .iter()
                .filter(|e| {
                    let mut acc = g.zero();
                    for _ in 0..g.moduli()[i] {
                        acc = g.add(&acc, e);
                    }
                    acc.is_zero()
                })
                .cloned()
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    let mut choice = vec![0usize; n];
    if candidates.iter().any(Vec::is_empty) {
        return out;
    }
    loop {
        let images: Vec<BarElement> = (0..n).map(|i| candidates[i][choice[i]].clone()).collect();
        let mut seen = std::collections::HashSet::new();
        if elems.iter().all(|x| seen.insert(apply(g, &images, x))) {
            out.push(images);
        }
        let mut i = 0;
        loop {
            if i == n {
                return out;
            }
            choice[i] += 1;
            if choice[i] < candidates[i].len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

impl FinGradedAlgebra {
    /// Searches for a diagonal-times-permutation isomorphism `A → A′` sending `A^{λ̄}` onto
    /// `A′^{α(λ̄)}` for some automorphism `α`. Only defined when every component is a line.
    ///
    /// `None` means no such map exists with cyclotomic scalars.
    pub fn regraded_line_iso(&self, other: &FinGradedAlgebra) -> Option<RegradedIso> {
        let g = self.group();
        if g != other.group() || self.dim() != other.dim() {
            return None;
        }
        let lines = |a: &FinGradedAlgebra| a.components().iter().all(|(_, c)| c.len() == 1);
        if !lines(self) || !lines(other) {
            return None;
        }
        let n = self.dim();
        'auts: for images in group_automorphisms(g) {
            let mut perm = vec![0usize; n];
            for (i, p) in perm.iter_mut().enumerate() {
                match other.component(&apply(g, &images, self.degree(i))).first() {
                    Some(&j) => *p = j,
                    None => continue 'auts,
                }
            }
            let mut red = MonomialReducer::new(n);
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        let (c, c2) = (self.sc(i, j, k), other.sc(perm[i], perm[j], perm[k]));
                        if c.is_zero() != c2.is_zero() {
                            continue 'auts;
                        }
                        if c.is_zero() {
                            continue;
                        }
                        let mut row = vec![0i64; n];
                        row[i] += 1;
                        row[j] += 1;
                        row[k] -= 1;
                        if !red.insert(row, c / c2) {
                            continue 'auts;
                        }
                    }
                }
            }
            let MonomialSolution::Solved(s) = red.solve() else {
                continue;
            };
            let mut phi = Matrix::zeros(n, n);
            for i in 0..n {
                phi[(perm[i], i)] = CycloNumber::clone(&s[i]);
            }
            debug_assert!(self.homomorphism_failure(other, &phi).is_none());
            return Some(RegradedIso {
                generator_images: images,
                phi,
            });
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn automorphism_counts() {
        assert_eq!(group_automorphisms(&BarGroup::new(vec![2, 2]).unwrap()).len(), 6);
        assert_eq!(group_automorphisms(&BarGroup::new(vec![3, 3]).unwrap()).len(), 48);
        assert_eq!(group_automorphisms(&BarGroup::new(vec![2, 4]).unwrap()).len(), 8);
        assert_eq!(group_automorphisms(&BarGroup::new(vec![6]).unwrap()).len(), 2);
    }

    #[test]
    fn power_norm_residue_isos() {
        let one = CycloNumber::one();
        let a = FinGradedAlgebra::power_norm_residue(3, 1, &one, &one).unwrap();
        let b = FinGradedAlgebra::power_norm_residue(3, 2, &one, &one).unwrap();
        let w = a.regraded_line_iso(&b).expect("swap of generators");
        assert_eq!(a.homomorphism_failure(&b, &w.phi), None);
        let c = FinGradedAlgebra::power_norm_residue(3, 1, &CycloNumber::from_int(2), &one).unwrap();
        assert!(a.regraded_line_iso(&c).is_none());
        let g = BarGroup::new(vec![2]).unwrap();
        let k2 = FinGradedAlgebra::group_algebra(&g);
        assert!(k2.regraded_line_iso(&a).is_none());
    }
}
