//! Loop and multiloop algebras as free modules of finite rank over the split centroid `k[Γ]`.
//!
//! A [`GammaFiniteAlgebra`] keeps one basis per coset representative `θ ∈ Θ`. The basis of
//! `B^λ` is `z^{λ−θ}` times the basis of `B^θ`, where `θ` represents `λ + Γ`, so products are
//! determined by the finitely many pairs `(θ, θ′)`.

mod centroid;
mod iso;

use crate::algcore::FinGradedAlgebra;
use crate::autograde::{AutomorphismSystem, Eigengrading};
use crate::cyclo::CycloNumber;
use crate::error::{Error, Result};
use crate::lattice::{generates_full_lattice, Character, IntMatrix, QuotientMap};
use crate::linalg::{zero_vector, Vector};

pub use centroid::{centroid_of_loop, FgcReport, LoopCentroid};
pub use iso::{diagonal_iso_search, graded_iso_check, identity_witness, verify_on_box, GradedIsoWitness, IsoFailure, SearchOutcome};

/// Product of the bases of `B^θ` and `B^θ′`: `x_i x_j = z^γ Σ_k coeffs[i·dim θ′ + j][k] x_k`
/// with `x_k` in `B^{θ″}` and `γ = θ + θ′ − θ″ ∈ Γ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairProduct {
    pub target: usize,
    pub shift: Vec<i64>,
    pub coeffs: Vec<Vector>,
}

/// Homogeneous element `z^shift · Σ coords_i x_i` with `x_i` the basis of `B^θ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Homogeneous {
    pub theta: usize,
    pub shift: Vec<i64>,
    pub coords: Vector,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaFiniteAlgebra {
    q: QuotientMap,
    reps: Vec<Vec<i64>>,
    dims: Vec<usize>,
    products: Vec<PairProduct>,
    basis_order: Vec<(usize, usize)>,
}

/// One product of in-box basis elements: `B^λ_i · B^μ_j = Σ_k c_k B^{λ+μ}_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedProduct {
    pub lambda: Vec<i64>,
    pub mu: Vec<i64>,
    pub i: usize,
    pub j: usize,
    pub result: Vector,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Truncation {
    /// `(λ, dim B^λ)` for every `λ` in the box, in lexicographic order.
    pub components: Vec<(Vec<i64>, usize)>,
    pub products: Vec<TruncatedProduct>,
}

fn add(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn sub(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Every integer point of `Π [lo_i, hi_i]`, lexicographically.
pub fn box_points(bounds: &[(i64, i64)]) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for &(lo, hi) in bounds {
        out = out
            .into_iter()
            .flat_map(|p: Vec<i64>| {
                (lo..=hi).map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    out
}

impl GammaFiniteAlgebra {
    /// Assembles a presentation; shifts are recomputed from `q` and checked against `Γ`.
    pub fn new(
        q: QuotientMap,
        dims: Vec<usize>,
        targets_and_coeffs: Vec<(usize, Vec<Vector>)>,
        basis_order: Option<Vec<(usize, usize)>>,
    ) -> Result<Self> {
        let t = q.order() as usize;
        if dims.len() != t || targets_and_coeffs.len() != t * t {
            return Err(Error::Dimension(format!(
                "expected {t} components and {} pair products",
                t * t
            )));
        }
        let reps = q.coset_reps();
        let g = q.group();
        let elems = g.elements();
        let mut products = Vec::with_capacity(t * t);
        for (idx, (target, coeffs)) in targets_and_coeffs.into_iter().enumerate() {
            let (a, b) = (idx / t, idx % t);
            let expected = g.index_of(&g.add(&elems[a], &elems[b]));
            if target != expected {
                return Err(Error::Invalid(format!(
                    "product of components {a} and {b} must land in component {expected}"
                )));
            }
            if coeffs.len() != dims[a] * dims[b] || coeffs.iter().any(|v| v.len() != dims[target]) {
                return Err(Error::Dimension(format!("coefficients of pair ({a},{b}) have the wrong shape")));
            }
            let shift = sub(&add(&reps[a], &reps[b]), &reps[target]);
            debug_assert!(q.in_kernel(&shift));
            products.push(PairProduct { target, shift, coeffs });
        }
        let basis_order = match basis_order {
            Some(o) => {
                let total: usize = dims.iter().sum();
                let mut seen = std::collections::HashSet::new();
                if o.len() != total || o.iter().any(|&(th, i)| th >= t || i >= dims[th] || !seen.insert((th, i))) {
                    return Err(Error::Invalid("basis order is not a permutation of the Θ-basis".into()));
                }
                o
            }
            None => (0..t).flat_map(|th| (0..dims[th]).map(move |i| (th, i))).collect(),
        };
        Ok(GammaFiniteAlgebra {
            q,
            reps,
            dims,
            products,
            basis_order,
        })
    }

    /// `L_π(A) = Σ_λ A^{λ̄} ⊗ z^λ`.
    pub fn loop_algebra(q: &QuotientMap, a: &FinGradedAlgebra) -> Result<Self> {
        if a.group() != q.group() {
            return Err(Error::GradingMismatch {
                expected: q.moduli().to_vec(),
                found: a.group().moduli().to_vec(),
            });
        }
        let comps: Vec<Vec<usize>> = a.components().into_iter().map(|(_, idx)| idx).collect();
        let t = comps.len();
        let mut position = vec![(0, 0); a.dim()];
        for (th, idx) in comps.iter().enumerate() {
            for (p, &i) in idx.iter().enumerate() {
                position[i] = (th, p);
            }
        }
        let g = q.group();
        let elems = g.elements();
        let mut tc = Vec::with_capacity(t * t);
        for ta in 0..t {
            for tb in 0..t {
                let target = g.index_of(&g.add(&elems[ta], &elems[tb]));
                let mut coeffs = Vec::with_capacity(comps[ta].len() * comps[tb].len());
                for &i in &comps[ta] {
                    for &j in &comps[tb] {
                        let mut v = zero_vector(comps[target].len());
                        for (k, c) in a.product_of_basis(i, j) {
                            v[position[*k].1] = c.clone();
                        }
                        coeffs.push(v);
                    }
                }
                tc.push((target, coeffs));
            }
        }
        let dims = comps.iter().map(Vec::len).collect();
        Self::new(q.clone(), dims, tc, Some(position))
    }

    /// `M_m(A, σ₁, …, σₙ)`, the loop algebra of the simultaneous eigenspace grading.
    pub fn multiloop(s: &AutomorphismSystem) -> Result<Self> {
        Ok(Self::multiloop_with_eigenbasis(s)?.0)
    }

    pub fn multiloop_with_eigenbasis(s: &AutomorphismSystem) -> Result<(Self, Eigengrading)> {
        let eg = s.grading_from_autos()?;
        let q = QuotientMap::standard(s.orders().to_vec())?;
        Ok((Self::loop_algebra(&q, &eg.algebra)?, eg))
    }

    /// `k[z₁^{±1}, …, zₙ^{±1}]`.
    pub fn laurent(n: usize) -> Self {
        let k = FinGradedAlgebra::matrix_algebra(1);
        let q = QuotientMap::standard(vec![1; n]).expect("trivial quotient");
        let k = k
            .regraded(q.group().clone(), vec![q.group().zero()])
            .expect("one-point grading");
        Self::loop_algebra(&q, &k).expect("Laurent presentation")
    }

    pub fn quotient(&self) -> &QuotientMap {
        &self.q
    }

    pub fn rank(&self) -> usize {
        self.q.rank()
    }

    /// `Θ`, in lexicographic residue order.
    pub fn reps(&self) -> &[Vec<i64>] {
        &self.reps
    }

    pub fn num_components(&self) -> usize {
        self.dims.len()
    }

    pub fn comp_dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn pair(&self, a: usize, b: usize) -> &PairProduct {
        &self.products[a * self.dims.len() + b]
    }

    /// Central-image basis position `p ↦ (θ, i)`.
    pub fn basis_order(&self) -> &[(usize, usize)] {
        &self.basis_order
    }

    pub fn total_rank(&self) -> usize {
        self.dims.iter().sum()
    }

    /// Index of the representative of `λ + Γ`.
    pub fn theta_of(&self, lambda: &[i64]) -> usize {
        self.q.group().index_of(&self.q.project(lambda))
    }

    pub fn dim_at(&self, lambda: &[i64]) -> usize {
        self.dims[self.theta_of(lambda)]
    }

    /// The `i`-th basis vector of `B^λ`.
    pub fn basis_at(&self, lambda: &[i64], i: usize) -> Homogeneous {
        let theta = self.theta_of(lambda);
        let mut coords = zero_vector(self.dims[theta]);
        coords[i] = CycloNumber::one();
        Homogeneous {
            theta,
            shift: sub(lambda, &self.reps[theta]),
            coords,
        }
    }

    pub fn degree_of(&self, h: &Homogeneous) -> Vec<i64> {
        add(&self.reps[h.theta], &h.shift)
    }

    pub fn product(&self, x: &Homogeneous, y: &Homogeneous) -> Homogeneous {
        let p = self.pair(x.theta, y.theta);
        let db = self.dims[y.theta];
        let mut coords = zero_vector(self.dims[p.target]);
        for (i, a) in x.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.coords.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (k, c) in p.coeffs[i * db + j].iter().enumerate() {
                    if !c.is_zero() {
                        coords[k] += &(&ab * c);
                    }
                }
            }
        }
        Homogeneous {
            theta: p.target,
            shift: add(&add(&x.shift, &y.shift), &p.shift),
            coords,
        }
    }

    /// All components and basis products with degrees in the box.
    pub fn truncate(&self, bounds: &[(i64, i64)]) -> Truncation {
        assert_eq!(bounds.len(), self.rank(), "box rank mismatch");
        let pts = box_points(bounds);
        let components = pts.iter().map(|l| (l.clone(), self.dim_at(l))).collect();
        let mut products = Vec::new();
        for l in &pts {
            for m in &pts {
                for i in 0..self.dim_at(l) {
                    for j in 0..self.dim_at(m) {
                        let h = self.product(&self.basis_at(l, i), &self.basis_at(m, j));
                        products.push(TruncatedProduct {
                            lambda: l.clone(),
                            mu: m.clone(),
                            i,
                            j,
                            result: h.coords,
                        });
                    }
                }
            }
        }
        Truncation { components, products }
    }

    /// Representatives of the cosets making up `supp_Λ(B)`.
    pub fn support(&self) -> Vec<Vec<i64>> {
        self.reps
            .iter()
            .zip(&self.dims)
            .filter(|(_, &d)| d > 0)
            .map(|(r, _)| r.clone())
            .collect()
    }

    /// Whether `⟨supp_Λ(B)⟩ = Λ`.
    pub fn generates_lattice(&self) -> bool {
        let n = self.rank();
        if n == 0 {
            return true;
        }
        let mut rows = self.support();
        if rows.is_empty() {
            return false;
        }
        let kb = self.q.kernel_basis();
        // Γ ⊆ ⟨supp⟩ as soon as the support is nonempty (supp is a union of Γ-cosets)
        for i in 0..kb.nrows() {
            rows.push(kb.row_i64(i));
        }
        generates_full_lattice(&IntMatrix::from_row_vectors(&rows, n))
    }

    fn relabel(&self, q: QuotientMap, old_index: &[usize]) -> Self {
        let t = old_index.len();
        let mut new_index = vec![0; t];
        for (new, &old) in old_index.iter().enumerate() {
            new_index[old] = new;
        }
        let dims: Vec<usize> = old_index.iter().map(|&o| self.dims[o]).collect();
        let tc = (0..t * t)
            .map(|idx| {
                let p = self.pair(old_index[idx / t], old_index[idx % t]);
                (new_index[p.target], p.coeffs.clone())
            })
            .collect();
        let order = self.basis_order.iter().map(|&(th, i)| (new_index[th], i)).collect();
        Self::new(q, dims, tc, Some(order)).expect("relabelled presentation is consistent")
    }

    /// `B_ν` with `(B_ν)^λ = B^{λPᵗ}`.
    pub fn regrade(&self, p: &IntMatrix) -> Result<Self> {
        if !p.is_unimodular() || p.nrows() != self.rank() {
            return Err(Error::NotUnimodular);
        }
        let bc = p.transpose().mul(self.q.basis_change());
        let q = QuotientMap::new(self.q.moduli().to_vec(), bc)?;
        let ident: Vec<usize> = (0..self.num_components()).collect();
        Ok(self.relabel(q, &ident))
    }

    /// The same algebra presented over another quotient map with the same kernel `Γ`.
    pub fn represent_with(&self, q: &QuotientMap) -> Result<Self> {
        if !self.q.same_kernel(q) {
            return Err(Error::Invalid("quotient maps have different kernels".into()));
        }
        let old: Vec<usize> = q.coset_reps().iter().map(|r| self.theta_of(r)).collect();
        Ok(self.relabel(q.clone(), &old))
    }

    /// The central image `B / ker(ρ) B` for a character `ρ` of `Γ`, on the basis
    /// [`GammaFiniteAlgebra::basis_order`], graded by `Λ̄`.
    pub fn specialize(&self, rho: &Character) -> Result<FinGradedAlgebra> {
        let t = self.num_components();
        let mut pos = vec![Vec::new(); t];
        for th in 0..t {
            pos[th] = vec![0; self.dims[th]];
        }
        for (p, &(th, i)) in self.basis_order.iter().enumerate() {
            pos[th][i] = p;
        }
        let g = self.q.group();
        let elems = g.elements();
        let mut degrees = vec![g.zero(); self.total_rank()];
        for (p, &(th, _)) in self.basis_order.iter().enumerate() {
            degrees[p] = elems[th].clone();
        }
        let mut entries = Vec::new();
        for a in 0..t {
            for b in 0..t {
                let pp = self.pair(a, b);
                let r = rho.eval(&pp.shift)?;
                for i in 0..self.dims[a] {
                    for j in 0..self.dims[b] {
                        for (k, c) in pp.coeffs[i * self.dims[b] + j].iter().enumerate() {
                            if !c.is_zero() {
                                entries.push((pos[a][i], pos[b][j], pos[pp.target][k], &r * c));
                            }
                        }
                    }
                }
            }
        }
        let out = FinGradedAlgebra::from_entries(g.clone(), degrees, entries)?;
        Ok(out)
    }

    /// The augmentation `z^γ ↦ 1`.
    pub fn augmentation(&self) -> Character {
        Character::trivial(self.q.kernel_basis()).expect("kernel basis is nonsingular")
    }

    /// Graded tensor product over `Zⁿ ⊕ Zⁿ′`.
    pub fn tensor(&self, other: &GammaFiniteAlgebra) -> Result<Self> {
        let m: Vec<u64> = self.q.moduli().iter().chain(other.q.moduli()).copied().collect();
        let bc = self.q.basis_change().direct_sum(other.q.basis_change());
        let q = QuotientMap::new(m, bc)?;
        let (t1, t2) = (self.num_components(), other.num_components());
        let dims: Vec<usize> = (0..t1 * t2).map(|x| self.dims[x / t2] * other.dims[x % t2]).collect();
        let mut tc = Vec::with_capacity(dims.len() * dims.len());
        for x in 0..t1 * t2 {
            for y in 0..t1 * t2 {
                let (a1, a2) = (x / t2, x % t2);
                let (b1, b2) = (y / t2, y % t2);
                let p1 = self.pair(a1, b1);
                let p2 = other.pair(a2, b2);
                // index (i₁,i₂)·dim b + (j₁,j₂) is exactly this loop order
                let mut coeffs = Vec::new();
                for i1 in 0..self.dims[a1] {
                    for i2 in 0..other.dims[a2] {
                        for j1 in 0..self.dims[b1] {
                            for j2 in 0..other.dims[b2] {
                                let c1 = &p1.coeffs[i1 * self.dims[b1] + j1];
                                let c2 = &p2.coeffs[i2 * other.dims[b2] + j2];
                                let v: Vector = c1.iter().flat_map(|u| c2.iter().map(move |w| u * w)).collect();
                                coeffs.push(v);
                            }
                        }
                    }
                }
                tc.push((p1.target * t2 + p2.target, coeffs));
            }
        }
        let mut order = Vec::new();
        for &(a, i) in &self.basis_order {
            for &(b, j) in &other.basis_order {
                order.push((a * t2 + b, i * other.dims[b] + j));
            }
        }
        Self::new(q, dims, tc, Some(order))
    }

    /// First triple of components violating associativity, checked on the augmentation image
    /// (shifts on both sides of the identity always agree).
    pub fn associativity_failure(&self) -> Option<(usize, usize, usize)> {
        let a = self.specialize(&self.augmentation()).expect("augmentation");
        a.associativity_failure()
    }
}
