use std::collections::VecDeque;

use super::{FinGradedAlgebra, GradedMap};
use crate::cyclo::CycloNumber;
use crate::lattice::BarElement;
use crate::linalg::{add_vectors, scale_vector, unit_vector, Matrix, SparseEchelon, SparseRow, Vector};
use crate::poly::Poly;

/// Tri-state answer; `Fails` carries a certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict<W> {
    Holds,
    Fails(W),
    Inconclusive(String),
}

impl<W> Verdict<W> {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn fails(&self) -> bool {
        matches!(self, Verdict::Fails(_))
    }

    pub fn is_inconclusive(&self) -> bool {
        matches!(self, Verdict::Inconclusive(_))
    }

    pub fn witness(&self) -> Option<&W> {
        match self {
            Verdict::Fails(w) => Some(w),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SimplicityWitness {
    /// `AA = 0`.
    ZeroProduct,
    /// Basis (reduced echelon form) of a proper nonzero graded ideal.
    Ideal(Vec<Vector>),
    /// A degree-0 central element that is not a scalar in a semisimple algebra; over the
    /// algebraic closure its spectral idempotents split the algebra.
    NonScalarCentral(Vector),
}

fn fmt_vector(v: &Vector) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}

impl std::fmt::Display for SimplicityWitness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SimplicityWitness::ZeroProduct => write!(f, "AA = 0"),
            SimplicityWitness::Ideal(basis) => {
                let parts: Vec<String> = basis.iter().map(fmt_vector).collect();
                write!(f, "ideal spanned by {}", parts.join(", "))
            }
            SimplicityWitness::NonScalarCentral(z) => write!(f, "non-scalar central element {}", fmt_vector(z)),
        }
    }
}

fn span(n: usize, vectors: impl IntoIterator<Item = Vector>) -> SparseEchelon {
    let mut ech = SparseEchelon::new(n);
    for v in vectors {
        ech.add_dense_row(&v);
        if ech.is_full() {
            break;
        }
    }
    ech
}

/// Homogeneous spanning set of `Mult(A)`, grouped by degree (indexed like `group().elements()`).
fn mult_by_degree(a: &FinGradedAlgebra) -> Vec<Vec<Matrix>> {
    let n = a.dim();
    let g = a.group();
    let order = g.order() as usize;
    let mut gens: Vec<(usize, Matrix)> = Vec::new();
    for i in 0..n {
        let d = g.index_of(a.degree(i));
        for m in [a.left_basis(i), a.right_basis(i)] {
            if !m.is_zero() {
                gens.push((d, m));
            }
        }
    }
    let mut ech: Vec<SparseEchelon> = (0..order).map(|_| SparseEchelon::new(n * n)).collect();
    let mut found: Vec<Vec<Matrix>> = vec![Vec::new(); order];
    let mut queue = VecDeque::new();
    let zero_idx = g.index_of(&g.zero());
    ech[zero_idx].add_dense_row(Matrix::identity(n).entries());
    found[zero_idx].push(Matrix::identity(n));
    queue.push_back((zero_idx, Matrix::identity(n)));
    let total_cap = n * n;
    let mut total = 1;
    while let Some((d, m)) = queue.pop_front() {
        if total == total_cap {
            break;
        }
        for (gd, gm) in &gens {
            let p = gm.mul(&m);
            let nd = g.index_of(&g.add(&g.element_at(*gd), &g.element_at(d)));
            if ech[nd].add_dense_row(p.entries()) {
                found[nd].push(p.clone());
                queue.push_back((nd, p));
                total += 1;
            }
        }
    }
    found
}

/// Homogeneous spanning set of the multiplication algebra (closed under composition, unital).
pub fn mult_closure(a: &FinGradedAlgebra) -> Vec<GradedMap> {
    let g = a.group();
    mult_by_degree(a)
        .into_iter()
        .enumerate()
        .flat_map(|(d, ms)| {
            let deg = g.element_at(d);
            ms.into_iter().map(move |matrix| GradedMap {
                matrix,
                degree: Some(deg.clone()),
            })
        })
        .collect()
}

/// Minimal polynomial of `z` under left multiplication in a unital associative algebra.
fn minimal_polynomial(a: &FinGradedAlgebra, z: &[CycloNumber], one: &[CycloNumber]) -> Poly {
    let n = a.dim();
    let mut powers: Vec<Vector> = vec![one.to_vec()];
    loop {
        let next = a.multiply(powers.last().expect("nonempty"), z);
        let cols = Matrix::from_columns(&powers, n);
        if let Some(c) = cols.solve(&next) {
            let mut coeffs: Vec<CycloNumber> = c.into_iter().map(|x| -x).collect();
            coeffs.push(CycloNumber::one());
            return Poly::new(coeffs);
        }
        powers.push(next);
    }
}

fn poly_at_element(a: &FinGradedAlgebra, p: &Poly, z: &[CycloNumber], one: &[CycloNumber]) -> Vector {
    let mut acc = crate::linalg::zero_vector(a.dim());
    for c in p.coeffs().iter().rev() {
        acc = add_vectors(&a.multiply(&acc, z), &scale_vector(c, one));
    }
    acc
}

fn conductor_hint(a: &FinGradedAlgebra) -> u64 {
    use num_integer::Integer;
    a.structure_constants()
        .iter()
        .filter(|c| !c.is_zero())
        .fold(a.group().order().max(1), |l, c| l.lcm(&c.conductor()))
}

impl FinGradedAlgebra {
    /// Trace-form radical `{x : tr(l_{xy}) = 0 for all y}`; equals the Jacobson radical of a
    /// unital associative algebra in characteristic 0, and is graded.
    pub fn trace_radical(&self) -> Vec<Vector> {
        let n = self.dim();
        let mut ech = SparseEchelon::new(n);
        for y in 0..n {
            // Σ_i x_i tr(l_{x_i} l_{x_y})
            let mut row: SparseRow = Vec::new();
            for i in 0..n {
                let mut t = CycloNumber::zero();
                for j in 0..n {
                    for (k, c) in self.product_of_basis(i, j) {
                        if let Some((_, d)) = self.product_of_basis(y, *k).iter().find(|(q, _)| *q == j) {
                            t += &(c * d);
                        }
                    }
                }
                if !t.is_zero() {
                    row.push((i, t));
                }
            }
            ech.add_row(&row);
        }
        span(n, ech.kernel()).reduced_basis()
    }

    // J and the (degree-0, if graded) center decide simplicity for unital associative algebras.
    fn associative_verdict(&self, graded: bool, one: &[CycloNumber]) -> Verdict<SimplicityWitness> {
        let rad = self.trace_radical();
        if !rad.is_empty() {
            return Verdict::Fails(SimplicityWitness::Ideal(rad));
        }
        let zero = self.group().zero();
        let center = self.center(graded.then_some(&zero));
        if center.len() <= 1 {
            return Verdict::Holds;
        }
        let orders = [conductor_hint(self)];
        let one_ech = span(self.dim(), [one.to_vec()]);
        let mut first_nonscalar = None;
        for z in &center {
            if one_ech.contains_dense(z) {
                continue;
            }
            first_nonscalar.get_or_insert_with(|| z.clone());
            let mp = minimal_polynomial(self, z, one);
            let Some(r) = mp.find_root(&orders) else { continue };
            let (g, _) = mp.divrem(&Poly::linear(-&r, CycloNumber::one()));
            let gr = g.eval(&r);
            let e = scale_vector(&gr.inv().expect("squarefree minimal polynomial"), &poly_at_element(self, &g, z, one));
            let ideal = span(self.dim(), (0..self.dim()).map(|j| self.multiply(&e, &unit_vector(self.dim(), j))));
            return Verdict::Fails(SimplicityWitness::Ideal(ideal.reduced_basis()));
        }
        Verdict::Fails(SimplicityWitness::NonScalarCentral(
            first_nonscalar.expect("center of dimension at least 2 has a non-scalar element"),
        ))
    }

    /// Basis of `Mult(A)·x` when it is a proper subspace.
    fn proper_ideal_from(&self, mult: &[Vec<Matrix>], x: &[CycloNumber]) -> Option<Vec<Vector>> {
        let n = self.dim();
        let ech = span(n, mult.iter().flatten().map(|m| m.mul_vec(x)));
        (!ech.is_full()).then(|| ech.reduced_basis())
    }

    // x = u + t v over F(t): the product of Hermite pivots vanishes exactly on the bad locus.
    fn bad_locus(&self, mult: &[Vec<Matrix>], lambda: &BarElement, u: &[CycloNumber], v: &[CycloNumber]) -> Option<Poly> {
        let g = self.group();
        let mut total = Poly::one();
        for (mu, cols) in self.components() {
            if cols.is_empty() {
                continue;
            }
            let delta = g.sub(&mu, lambda);
            let rows: Vec<Vec<Poly>> = mult[g.index_of(&delta)]
                .iter()
                .map(|m| {
                    let (mu_, mv) = (m.mul_vec(u), m.mul_vec(v));
                    cols.iter().map(|&c| Poly::linear(mu_[c].clone(), mv[c].clone())).collect()
                })
                .collect();
            total = total.mul(&maximal_minor_gcd(rows, cols.len())?);
        }
        Some(total)
    }

    fn mult_verdict(&self) -> Verdict<SimplicityWitness> {
        let mult = mult_by_degree(self);
        let n = self.dim();
        let mut undecided = Vec::new();
        for (lambda, idx) in self.components() {
            for &i in &idx {
                if let Some(ideal) = self.proper_ideal_from(&mult, &unit_vector(n, i)) {
                    return Verdict::Fails(SimplicityWitness::Ideal(ideal));
                }
            }
            match idx.len() {
                0 | 1 => {}
                2 => {
                    let (u, v) = (unit_vector(n, idx[0]), unit_vector(n, idx[1]));
                    let Some(d) = self.bad_locus(&mult, &lambda, &u, &v) else {
                        undecided.push(format!("component {lambda}: generic rank deficiency"));
                        continue;
                    };
                    if d.is_constant() {
                        continue;
                    }
                    match d.find_root(&[conductor_hint(self)]) {
                        Some(r) => {
                            let x = add_vectors(&u, &scale_vector(&r, &v));
                            match self.proper_ideal_from(&mult, &x) {
                                Some(ideal) => return Verdict::Fails(SimplicityWitness::Ideal(ideal)),
                                None => undecided.push(format!("component {lambda}: root {r} of the bad locus did not give an ideal")),
                            }
                        }
                        None => undecided.push(format!(
                            "component {lambda}: bad locus {d} has no root in the cyclotomic field"
                        )),
                    }
                }
                d => undecided.push(format!("component {lambda} has dimension {d}")),
            }
        }
        if undecided.is_empty() {
            Verdict::Holds
        } else {
            Verdict::Inconclusive(undecided.join("; "))
        }
    }

    /// No proper nonzero graded ideals and `AA ≠ 0`.
    pub fn is_graded_simple(&self) -> Verdict<SimplicityWitness> {
        if self.is_zero_product() {
            return Verdict::Fails(SimplicityWitness::ZeroProduct);
        }
        if self.is_associative() {
            if let Some(one) = self.identity() {
                return self.associative_verdict(true, &one);
            }
        }
        self.mult_verdict()
    }

    /// Simplicity over the algebraic closure of the scalars.
    pub fn is_simple(&self) -> Verdict<SimplicityWitness> {
        if self.is_zero_product() {
            return Verdict::Fails(SimplicityWitness::ZeroProduct);
        }
        if self.is_associative() {
            if let Some(one) = self.identity() {
                return self.associative_verdict(false, &one);
            }
        }
        self.with_trivial_grading().mult_verdict()
    }
}

/// Product of the pivots of a Hermite form over `F[t]`; `None` when the column rank is deficient.
fn maximal_minor_gcd(mut a: Vec<Vec<Poly>>, ncols: usize) -> Option<Poly> {
    let mut prod = Poly::one();
    let mut prow = 0;
    for col in 0..ncols {
        loop {
            let best = (prow..a.len())
                .filter(|&r| !a[r][col].is_zero())
                .min_by_key(|&r| a[r][col].degree())?;
            a.swap(prow, best);
            let mut done = true;
            for r in prow + 1..a.len() {
                if a[r][col].is_zero() {
                    continue;
                }
                let (q, rem) = a[r][col].divrem(&a[prow][col]);
                let pivot_row = a[prow].clone();
                for (x, p) in a[r].iter_mut().zip(&pivot_row).skip(col) {
                    *x = x.sub(&q.mul(p));
                }
                done &= rem.is_zero();
            }
            if done {
                break;
            }
        }
        prod = prod.mul(&a[prow][col]);
        prow += 1;
    }
    Some(prod)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::BarGroup;

    fn z2() -> BarGroup {
        BarGroup::new(vec![2]).unwrap()
    }

    #[test]
    fn group_algebra_verdicts() {
        let a = FinGradedAlgebra::group_algebra(&z2());
        assert!(a.is_graded_simple().holds());
        let flat = a.with_trivial_grading();
        let one = CycloNumber::one();
        assert_eq!(
            flat.is_graded_simple(),
            Verdict::Fails(SimplicityWitness::Ideal(vec![vec![one.clone(), one.clone()]]))
        );
        assert!(a.is_simple().fails());
    }

    #[test]
    fn matrix_algebras() {
        assert!(FinGradedAlgebra::matrix_algebra(2).is_graded_simple().holds());
        assert!(FinGradedAlgebra::matrix_algebra(3).is_simple().holds());
        let g = z2();
        let m2 = FinGradedAlgebra::matrix_algebra_elementary(&g, &[g.zero(), BarElement(vec![1])]).unwrap();
        assert!(m2.is_graded_simple().holds());
        assert!(m2.is_graded_central() && m2.is_central());
        assert_eq!(crate::algcore::central_grading_group(&m2).unwrap(), vec![g.zero()]);
    }

    #[test]
    fn zero_and_radical() {
        let z = FinGradedAlgebra::zero_algebra(2);
        assert_eq!(z.is_graded_simple(), Verdict::Fails(SimplicityWitness::ZeroProduct));
        // k[x]/(x²) has radical span{x}
        let dual = FinGradedAlgebra::ungraded(
            2,
            vec![1, 0, 0, 1, 0, 1, 0, 0].into_iter().map(CycloNumber::from_int).collect(),
        )
        .unwrap();
        assert!(matches!(dual.is_simple(), Verdict::Fails(SimplicityWitness::Ideal(j)) if j.len() == 1));
    }

    #[test]
    fn general_path_matches_associative_path() {
        let a = FinGradedAlgebra::group_algebra(&z2());
        assert!(a.mult_verdict().holds());
        let flat = a.with_trivial_grading();
        assert!(flat.mult_verdict().fails());
        let one = CycloNumber::one();
        let q = FinGradedAlgebra::power_norm_residue(2, 1, &one, &one).unwrap();
        assert!(q.mult_verdict().holds());
        assert_eq!(mult_closure(&FinGradedAlgebra::matrix_algebra(2)).len(), 16);
        assert_eq!(mult_closure(&a).len(), 2);
        assert_eq!(mult_closure(&FinGradedAlgebra::zero_algebra(2)).len(), 1);
    }

    #[test]
    fn two_dimensional_components() {
        // M₂ with Ad diag(1,−1) grading: both components are 2-dimensional
        let g = z2();
        let m2 = FinGradedAlgebra::matrix_algebra_elementary(&g, &[g.zero(), BarElement(vec![1])]).unwrap();
        assert!(m2.mult_verdict().holds());
        // k[Z/2] ⊕ k[Z/2] graded by Z/2: degree-0 component is 2-dimensional
        let a = FinGradedAlgebra::group_algebra(&g);
        let s = a.direct_sum(&a).unwrap();
        assert!(s.mult_verdict().fails());
        assert!(s.is_graded_simple().fails());
    }
}
