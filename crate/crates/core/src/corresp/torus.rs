use num_integer::Integer;
use num_traits::ToPrimitive;

use super::{certify_class_b, Specialization};
use crate::cyclo::CycloNumber;
use crate::error::{Error, Result};
use crate::lattice::{skew_normal_form, smith_normal_form, IntMatrix, QuotientMap};
use crate::linalg::unit_vector;
use crate::loopcore::{diagonal_iso_search, graded_iso_check, GammaFiniteAlgebra, GradedIsoWitness, IsoFailure, SearchOutcome};

// c(λ, μ) = Σ_{i>j} λ_i μ_j E_ji
fn cocycle(e: &[Vec<i64>], l: &[i64], mu: &[i64]) -> i64 {
    let n = l.len();
    let mut acc = 0;
    for i in 0..n {
        for j in 0..i {
            acc += l[i] * mu[j] * e[j][i];
        }
    }
    acc
}

fn check_skew_mod(e: &IntMatrix, n: u64) -> Result<Vec<Vec<i64>>> {
    if !e.is_square() {
        return Err(Error::Invalid("E must be square".into()));
    }
    if n == 0 {
        return Err(Error::Invalid("modulus must be positive".into()));
    }
    let rows = e.to_i64_rows();
    let nn = n as i64;
    for i in 0..rows.len() {
        for j in 0..rows.len() {
            if (rows[i][j] + rows[j][i]).rem_euclid(nn) != 0 || (i == j && rows[i][i].rem_euclid(nn) != 0) {
                return Err(Error::Invalid(format!("E is not skew-symmetric modulo {n} at ({i},{j})")));
            }
        }
    }
    Ok(rows)
}

/// `Γ = {γ : γE ≡ 0 mod N}` as the kernel of a quotient map.
fn radical_quotient(e: &IntMatrix, n: u64) -> Result<QuotientMap> {
    let s = smith_normal_form(e);
    let k = e.nrows();
    let m: Vec<u64> = (0..k)
        .map(|i| {
            let d = s.d[(i, i)].to_i64().expect("small invariant factor").unsigned_abs();
            n / d.gcd(&n)
        })
        .collect();
    QuotientMap::new(m, s.u.inverse_unimodular()?)
}

/// The torus `x^λ x^μ = ζ_N^{Σ_{i>j} λ_i μ_j E_ji} x^{λ+μ}` over `Zⁿ`, presented over its
/// central grading group `Γ = {γ : γE ≡ 0 mod N}`.
///
/// The presentation depends on `E` only modulo `N`: it is built from the centered lift.
pub fn torus(e: &IntMatrix, n: u64) -> Result<GammaFiniteAlgebra> {
    let lift = centered_lift(e, n)?;
    let q = radical_quotient(&lift, n)?;
    torus_over(&lift, n, &q)
}

fn torus_over(e: &IntMatrix, n: u64, q: &QuotientMap) -> Result<GammaFiniteAlgebra> {
    let rows = check_skew_mod(e, n)?;
    if !q.same_kernel(&radical_quotient(e, n)?) {
        return Err(Error::Invalid("quotient kernel is not the radical of E".into()));
    }
    let kb = q.kernel_basis().to_i64_rows();
    let reps = q.coset_reps();
    let t = reps.len();
    let g = q.group();
    let elems = g.elements();
    // z^γ = Π_i (x^{g_i})^{a_i} = ζ^{s(γ)} x^γ
    let s_of = |a: &[i64]| -> i64 {
        let mut acc = 0;
        for i in 0..a.len() {
            acc += cocycle(&rows, &kb[i], &kb[i]) * a[i] * (a[i] - 1) / 2;
            for j in i + 1..a.len() {
                acc += a[i] * a[j] * cocycle(&rows, &kb[i], &kb[j]);
            }
        }
        acc
    };
    let mut tc = Vec::with_capacity(t * t);
    for x in 0..t {
        for y in 0..t {
            let c = g.index_of(&g.add(&elems[x], &elems[y]));
            let gamma: Vec<i64> = (0..reps[x].len()).map(|i| reps[x][i] + reps[y][i] - reps[c][i]).collect();
            let a = q.kernel_coords(&gamma).expect("shift lies in Γ");
            let exp = cocycle(&rows, &reps[x], &reps[y]) - s_of(&a) - cocycle(&rows, &gamma, &reps[c]);
            let coeff = CycloNumber::zeta_pow(n, exp.rem_euclid(n as i64));
            tc.push((c, vec![vec![coeff]]));
        }
    }
    GammaFiniteAlgebra::new(q.clone(), vec![1; t], tc, None)
}

/// `Q(m, e)`: rank 2, `x₂x₁ = ζ_m^e x₁x₂`, presented over `Γ = mZ ⊕ mZ`.
pub fn qtorus(m: u64, e: i64) -> Result<GammaFiniteAlgebra> {
    if m == 0 || e.gcd(&(m as i64)) != 1 {
        return Err(Error::Invalid(format!("need gcd(e, m) = 1, got e = {e}, m = {m}")));
    }
    let mat = IntMatrix::from_i64(&[&[0, e], &[-e, 0]]);
    torus_over(&mat, m, &QuotientMap::standard(vec![m, m])?)
}

/// `T(E, N) ≅ Q(m₁,e₁) ⊗ … ⊗ Q(m_r,e_r) ⊗ k[z₁^{±1}, …, z_s^{±1}]` with `m₁ | … | m_r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QTorusNormalForm {
    pub m: Vec<u64>,
    pub e: Vec<u64>,
    pub s: usize,
    /// `W` with `W E Wᵗ ≡ ⊕ eᵢ(N/mᵢ) J ⊕ 0 mod N`; the regrade by `Wᵗ` carries `T(E, N)` to the
    /// tensor product.
    pub transform: IntMatrix,
    pub witness: GradedIsoWitness,
}

fn decomposition(m: &[u64], e: &[u64], s: usize) -> Result<GammaFiniteAlgebra> {
    let mut acc: Option<GammaFiniteAlgebra> = None;
    for (&m, &e) in m.iter().zip(e) {
        let f = qtorus(m, e as i64)?;
        acc = Some(match acc {
            Some(x) => x.tensor(&f)?,
            None => f,
        });
    }
    if s > 0 {
        let l = GammaFiniteAlgebra::laurent(s);
        acc = Some(match acc {
            Some(x) => x.tensor(&l)?,
            None => l,
        });
    }
    acc.ok_or_else(|| Error::Invalid("rank-0 torus".into()))
}

fn regraded_source(e: &IntMatrix, n: u64, transform: &IntMatrix, target: &GammaFiniteAlgebra) -> Result<GammaFiniteAlgebra> {
    torus(e, n)?.regrade(&transform.transpose())?.represent_with(target.quotient())
}

impl QTorusNormalForm {
    pub fn r(&self) -> usize {
        self.m.len()
    }

    /// The right-hand side of the decomposition.
    pub fn target(&self) -> Result<GammaFiniteAlgebra> {
        decomposition(&self.m, &self.e, self.s)
    }

    /// Rebuilds `T(E, N)` regraded by `Wᵗ` and the tensor product, then checks the witness.
    pub fn verify(&self, e: &IntMatrix, n: u64) -> std::result::Result<(), IsoFailure> {
        let target = self.target().map_err(|_| IsoFailure::QuotientMismatch)?;
        let src = regraded_source(e, n, &self.transform, &target).map_err(|_| IsoFailure::QuotientMismatch)?;
        graded_iso_check(&src, &target, &self.witness)
    }
}

fn centered(x: i64, n: i64) -> i64 {
    let r = x.rem_euclid(n);
    if 2 * r >= n {
        r - n
    } else {
        r
    }
}

// entries in [−N/2, N/2) above the diagonal, negated below, so the lift stays skew
fn centered_lift(e: &IntMatrix, n: u64) -> Result<IntMatrix> {
    let rows = check_skew_mod(e, n)?;
    let k = rows.len();
    let mut lift = vec![vec![0i64; k]; k];
    for i in 0..k {
        for j in i + 1..k {
            lift[i][j] = centered(rows[i][j], n as i64);
            lift[j][i] = -lift[i][j];
        }
    }
    IntMatrix::from_rows(&lift)
}

/// Normal form of `T(E, N)` with a certified graded isomorphism to the tensor decomposition.
pub fn qtorus_normal_form(e: &IntMatrix, n: u64) -> Result<QTorusNormalForm> {
    let lift = centered_lift(e, n)?;
    let k = lift.nrows();
    let snf = skew_normal_form(&lift)?;
    let mut blocks = Vec::new();
    let mut free_coords = Vec::new();
    for (b, d) in snf.invariants.iter().enumerate() {
        let d = d.to_u64().expect("small invariant");
        let g = d.gcd(&n);
        let m = n / g;
        if m == 1 {
            free_coords.extend([2 * b, 2 * b + 1]);
        } else {
            blocks.push((m, (d / g) % m, b));
        }
    }
    free_coords.extend(2 * snf.invariants.len()..k);
    blocks.reverse();
    let order: Vec<usize> = blocks.iter().flat_map(|&(_, _, b)| [2 * b, 2 * b + 1]).chain(free_coords.iter().copied()).collect();
    let w = snf.transform.to_i64_rows();
    let transform = IntMatrix::from_rows(&order.iter().map(|&i| w[i].clone()).collect::<Vec<_>>())?;
    let m: Vec<u64> = blocks.iter().map(|b| b.0).collect();
    let e: Vec<u64> = blocks.iter().map(|b| b.1).collect();
    let s = free_coords.len();
    let target = decomposition(&m, &e, s)?;
    let src = regraded_source(&lift, n, &transform, &target)?;
    match diagonal_iso_search(&src, &target)? {
        SearchOutcome::Found(witness) => Ok(QTorusNormalForm {
            m,
            e,
            s,
            transform,
            witness,
        }),
        other => Err(Error::Certification(format!("normal form not certified: {other:?}"))),
    }
}

/// Torus predicates of an associative presentation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorusReport {
    pub components_one_dimensional: bool,
    pub components_invertible: bool,
    pub support_generates: bool,
    pub graded_central_simple: bool,
    pub is_torus: bool,
}

pub fn torus_predicates(b: &GammaFiniteAlgebra) -> Result<TorusReport> {
    if let Some((i, j, k)) = b.associativity_failure() {
        return Err(Error::Precondition(format!(
            "torus predicates need an associative algebra; (x_{i} x_{j}) x_{k} ≠ x_{i} (x_{j} x_{k})"
        )));
    }
    let a = b.specialize(&b.augmentation())?;
    let components_one_dimensional = b.comp_dims().iter().all(|&d| d == 1);
    // x ∈ B^θ is invertible iff its central image is, since every z^γ is a unit
    let components_invertible = a.is_unital()
        && b.comp_dims().iter().all(|&d| d >= 1)
        && (0..a.dim()).all(|p| a.is_invertible(&unit_vector(a.dim(), p)).unwrap_or(false));
    let support_generates = b.generates_lattice();
    let graded_central_simple = certify_class_b(b, &Specialization::augmentation(b)).is_ok();
    let is_torus = components_one_dimensional && components_invertible && support_generates;
    if is_torus {
        debug_assert!(graded_central_simple || b.rank() == 0);
    }
    Ok(TorusReport {
        components_one_dimensional,
        components_invertible,
        support_generates,
        graded_central_simple,
        is_torus,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algcore::FinGradedAlgebra;
    use crate::autograde::{inner_diagonal, AutomorphismSystem};

    #[test]
    fn qtorus_matches_loop_of_power_norm_residue() {
        for m in [2u64, 3] {
            let one = CycloNumber::one();
            let a = FinGradedAlgebra::power_norm_residue(m, 1, &one, &one).unwrap();
            let l = GammaFiniteAlgebra::loop_algebra(&QuotientMap::standard(vec![m, m]).unwrap(), &a).unwrap();
            assert_eq!(qtorus(m, 1).unwrap(), l);
        }
        assert!(qtorus(4, 2).is_err());
    }

    #[test]
    fn normal_forms() {
        let z = qtorus_normal_form(&IntMatrix::zeros(2, 2), 5).unwrap();
        assert_eq!((z.r(), z.s), (0, 2));
        let h = qtorus_normal_form(&IntMatrix::from_i64(&[&[0, 1], &[-1, 0]]), 2).unwrap();
        assert_eq!((h.m.clone(), h.e.clone(), h.s), (vec![2], vec![1], 0));
        let e3 = IntMatrix::from_i64(&[&[0, 1, 0], &[-1, 0, 0], &[0, 0, 0]]);
        let nf = qtorus_normal_form(&e3, 2).unwrap();
        assert_eq!((nf.r(), nf.s, nf.m.clone()), (1, 1, vec![2]));
        assert_eq!(nf.verify(&e3, 2), Ok(()));
        // invariants 1 and 2 modulo 4 split as Q(2,1) ⊗ Q(4,1)
        let e4 = IntMatrix::from_i64(&[&[0, 1, 0, 0], &[-1, 0, 0, 0], &[0, 0, 0, 2], &[0, 0, -2, 0]]);
        let nf = qtorus_normal_form(&e4, 4).unwrap();
        assert_eq!((nf.m.clone(), nf.e.clone(), nf.s), (vec![2, 4], vec![1, 1], 0));
        assert!(qtorus_normal_form(&IntMatrix::from_i64(&[&[0, 1], &[1, 0]]), 3).is_err());
        // the certificate must not depend on the integer representative of E mod N
        let e5 = IntMatrix::from_i64(&[&[0, -2, 2], &[2, 0, 3], &[-2, -3, 0]]);
        let shifted = IntMatrix::from_i64(&[&[0, 2, -2], &[-2, 0, -1], &[2, 1, 0]]);
        assert_eq!(torus(&e5, 4).unwrap(), torus(&shifted, 4).unwrap());
        let nf = qtorus_normal_form(&e5, 4).unwrap();
        assert_eq!(nf.verify(&e5, 4), Ok(()));
        assert_eq!(nf.verify(&shifted, 4), Ok(()));
    }

    #[test]
    fn predicates() {
        assert!(torus_predicates(&GammaFiniteAlgebra::laurent(2)).unwrap().is_torus);
        let r = torus_predicates(&qtorus(3, 1).unwrap()).unwrap();
        assert!(r.is_torus && r.graded_central_simple);
        let d = inner_diagonal(2, &[CycloNumber::one(), CycloNumber::from_int(-1)]).unwrap();
        let s = AutomorphismSystem::new(FinGradedAlgebra::matrix_algebra(2), vec![d], vec![2]).unwrap();
        let r = torus_predicates(&GammaFiniteAlgebra::multiloop(&s).unwrap()).unwrap();
        assert!(!r.is_torus && !r.components_one_dimensional);
    }
}
