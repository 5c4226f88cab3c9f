use super::{FinGradedAlgebra, Verdict};
use crate::error::{Error, Result};
use crate::lattice::BarElement;
use crate::linalg::{Matrix, SparseEchelon, SparseRow, Vector};

/// `C(A) = ⊕_δ C(A)^δ`; each component is a list of basis maps of degree `δ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Centroid {
    pub components: Vec<(BarElement, Vec<Matrix>)>,
    /// Dimension of `C(A)` not accounted for by the homogeneous components.
    pub remainder_dim: usize,
}

impl Centroid {
    pub fn graded_dim(&self) -> usize {
        self.components.iter().map(|(_, b)| b.len()).sum()
    }

    pub fn dim(&self) -> usize {
        self.graded_dim() + self.remainder_dim
    }

    pub fn component(&self, delta: &BarElement) -> &[Matrix] {
        self.components
            .iter()
            .find(|(d, _)| d == delta)
            .map_or(&[], |(_, b)| b.as_slice())
    }

    /// Degrees with a nonzero component.
    pub fn support(&self) -> Vec<BarElement> {
        self.components
            .iter()
            .filter(|(_, b)| !b.is_empty())
            .map(|(d, _)| d.clone())
            .collect()
    }

    pub fn maps(&self) -> impl Iterator<Item = &Matrix> {
        self.components.iter().flat_map(|(_, b)| b.iter())
    }
}

impl FinGradedAlgebra {
    // c(x_a x_j) = x_a c(x_j) and c(x_j x_a) = c(x_j) x_a for the unknown entries `vars`
    fn centroid_solve(&self, vars: &[(usize, usize)]) -> Vec<Matrix> {
        let n = self.dim();
        let mut var_index = vec![None; n * n];
        for (v, &(k, p)) in vars.iter().enumerate() {
            var_index[k * n + p] = Some(v);
        }
        let mut ech = SparseEchelon::new(vars.len());
        let push = |row: &mut Vec<(usize, crate::cyclo::CycloNumber)>, ech: &mut SparseEchelon| {
            if row.is_empty() {
                return;
            }
            row.sort_by_key(|(c, _)| *c);
            let mut merged: SparseRow = Vec::with_capacity(row.len());
            for (c, v) in row.drain(..) {
                match merged.last_mut() {
                    Some((lc, lv)) if *lc == c => *lv += &v,
                    _ => merged.push((c, v)),
                }
            }
            merged.retain(|(_, v)| !v.is_zero());
            ech.add_row(&merged);
        };
        for a in 0..n {
            for j in 0..n {
                for left in [true, false] {
                    // coefficient of x_k in c(x_a x_j) − x_a c(x_j)  (left)
                    //                 or c(x_j x_a) − c(x_j) x_a    (right)
                    let mut eqs: Vec<Vec<(usize, crate::cyclo::CycloNumber)>> = vec![Vec::new(); n];
                    let prod = if left { self.product_of_basis(a, j) } else { self.product_of_basis(j, a) };
                    for (p, c) in prod {
                        for (k, eq) in eqs.iter_mut().enumerate() {
                            if let Some(v) = var_index[k * n + p] {
                                eq.push((v, c.clone()));
                            }
                        }
                    }
                    for q in 0..n {
                        let Some(v) = var_index[q * n + j] else { continue };
                        let prod = if left { self.product_of_basis(a, q) } else { self.product_of_basis(q, a) };
                        for (k, c) in prod {
                            eqs[*k].push((v, -c));
                        }
                    }
                    for eq in eqs.iter_mut() {
                        push(eq, &mut ech);
                    }
                }
            }
        }
        ech.kernel()
            .into_iter()
            .map(|sol| {
                let mut m = Matrix::zeros(n, n);
                for (v, &(k, p)) in vars.iter().enumerate() {
                    m[(k, p)] = sol[v].clone();
                }
                m
            })
            .collect()
    }

    /// Basis of `C(A)^δ`: maps commuting with every `l_a`, `r_a` and raising degrees by `δ`.
    pub fn centroid_component(&self, delta: &BarElement) -> Vec<Matrix> {
        let n = self.dim();
        let g = self.group();
        let vars: Vec<(usize, usize)> = (0..n)
            .flat_map(|k| (0..n).map(move |p| (k, p)))
            .filter(|&(k, p)| *self.degree(k) == g.add(self.degree(p), delta))
            .collect();
        self.centroid_solve(&vars)
    }

    /// The centroid, split into homogeneous components.
    ///
    /// The defining equations for the entry `(k, p)` only involve entries of the same degree
    /// `deg k − deg p`, so the full system is block diagonal and `remainder_dim` is always 0.
    pub fn centroid(&self) -> Centroid {
        let components = self
            .group()
            .elements()
            .into_iter()
            .map(|d| {
                let b = self.centroid_component(&d);
                (d, b)
            })
            .collect();
        Centroid {
            components,
            remainder_dim: 0,
        }
    }

    /// Dimension of `C(A)` from the ungraded system in all `dim²` unknowns.
    pub fn centroid_ungraded_dim(&self) -> usize {
        let n = self.dim();
        let vars: Vec<(usize, usize)> = (0..n).flat_map(|k| (0..n).map(move |p| (k, p))).collect();
        self.centroid_solve(&vars).len()
    }

    pub fn is_graded_central(&self) -> bool {
        self.centroid_component(&self.group().zero()).len() == 1
    }

    pub fn is_central(&self) -> bool {
        self.centroid().dim() == 1
    }

    /// `{z : z x = x z for all x}`, restricted to degree `degree` when given.
    pub fn center(&self, degree: Option<&BarElement>) -> Vec<Vector> {
        let n = self.dim();
        let vars: Vec<usize> = (0..n).filter(|&i| degree.is_none_or(|d| self.degree(i) == d)).collect();
        let mut ech = SparseEchelon::new(vars.len());
        for j in 0..n {
            let mut eqs: Vec<SparseRow> = vec![Vec::new(); n];
            for (v, &i) in vars.iter().enumerate() {
                for (k, c) in self.product_of_basis(i, j) {
                    eqs[*k].push((v, c.clone()));
                }
                for (k, c) in self.product_of_basis(j, i) {
                    eqs[*k].push((v, -c));
                }
            }
            for mut eq in eqs {
                eq.sort_by_key(|(c, _)| *c);
                let mut merged: SparseRow = Vec::new();
                for (c, v) in eq {
                    match merged.last_mut() {
                        Some((lc, lv)) if *lc == c => *lv += &v,
                        _ => merged.push((c, v)),
                    }
                }
                merged.retain(|(_, v)| !v.is_zero());
                if !merged.is_empty() {
                    ech.add_row(&merged);
                }
            }
        }
        ech.kernel()
            .into_iter()
            .map(|sol| {
                let mut z = crate::linalg::zero_vector(n);
                for (v, &i) in vars.iter().enumerate() {
                    z[i] = sol[v].clone();
                }
                z
            })
            .collect()
    }
}

/// Support of the centroid of a graded-simple algebra.
pub fn central_grading_group(a: &FinGradedAlgebra) -> Result<Vec<BarElement>> {
    match a.is_graded_simple() {
        Verdict::Holds => Ok(a.centroid().support()),
        Verdict::Fails(_) => Err(Error::Precondition("algebra is not graded-simple".into())),
        Verdict::Inconclusive(why) => Err(Error::Precondition(format!(
            "graded simplicity undecided: {why}"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::CycloNumber;
    use crate::lattice::BarGroup;

    #[test]
    fn centroid_dimensions() {
        let m2 = FinGradedAlgebra::matrix_algebra(2);
        assert_eq!(m2.centroid().dim(), 1);
        assert_eq!(m2.centroid_ungraded_dim(), 1);
        let z2 = FinGradedAlgebra::group_algebra(&BarGroup::new(vec![2]).unwrap());
        let c = z2.centroid();
        assert_eq!(c.dim(), 2);
        assert!(z2.is_graded_central() && !z2.is_central());
        let zero = FinGradedAlgebra::zero_algebra(2);
        assert_eq!(zero.centroid().dim(), 4);
        let mm = m2.direct_sum(&m2).unwrap();
        assert!(!mm.is_central());
        assert_eq!(mm.centroid_ungraded_dim(), 2);
    }

    #[test]
    fn centroid_commutes_with_multiplications() {
        let one = CycloNumber::one();
        let a = FinGradedAlgebra::power_norm_residue(2, 1, &one, &CycloNumber::from_int(-1)).unwrap();
        let c = a.centroid();
        assert_eq!(c.dim(), 1);
        for m in c.maps() {
            for i in 0..a.dim() {
                assert_eq!(m.mul(&a.left_basis(i)), a.left_basis(i).mul(m));
                assert_eq!(m.mul(&a.right_basis(i)), a.right_basis(i).mul(m));
            }
        }
        assert_eq!(a.center(None).len(), 1);
    }
}
