//! Cross-module checks against oracles computed independently of the library routines.

use multiloop::algcore::FinGradedAlgebra;
use multiloop::corresp::{
    central_image, qtorus, qtorus_normal_form, realize, rho_chi, similar_check, twist, verify_realization,
    Similarity, Specialization,
};
use multiloop::cyclo::CycloNumber;
use multiloop::lattice::{BarGroup, Character, IntMatrix, QuotientMap};
use multiloop::loopcore::{box_points, GammaFiniteAlgebra};
use proptest::prelude::*;

fn pnr(m: u64, e: i64, a1: &CycloNumber, a2: &CycloNumber) -> FinGradedAlgebra {
    FinGradedAlgebra::power_norm_residue(m, e, a1, a2).unwrap()
}

fn root(order: u64, k: i64) -> CycloNumber {
    CycloNumber::zeta_pow(order, k)
}

fn unimodular(ops: &[(usize, usize, i64)], n: usize) -> IntMatrix {
    let mut rows: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
    for &(i, j, c) in ops {
        let (i, j) = (i % n, j % n);
        if i == j {
            rows[i].iter_mut().for_each(|x| *x = -*x);
        } else {
            for k in 0..n {
                rows[i][k] += c * rows[j][k];
            }
        }
    }
    IntMatrix::from_rows(&rows).unwrap()
}

// x_p ⊗ z^λ times x_q ⊗ z^μ is x_p x_q ⊗ z^{λ+μ} in A ⊗ k[Λ]
#[test]
fn loop_products_match_tensor_products() {
    let a = pnr(3, 1, &root(3, 1), &CycloNumber::from_int(2));
    let q = QuotientMap::new(vec![3, 3], IntMatrix::from_i64(&[&[1, 1], &[0, 1]])).unwrap();
    let l = GammaFiniteAlgebra::loop_algebra(&q, &a).unwrap();
    let g = q.group();
    let pos = |lambda: &[i64], i: usize| -> usize {
        let th = l.theta_of(lambda);
        l.basis_order().iter().position(|&(t, k)| t == th && k == i).unwrap()
    };
    for lam in box_points(&[(-2, 2), (-2, 2)]) {
        for mu in box_points(&[(-1, 1), (-2, 1)]) {
            let sum: Vec<i64> = lam.iter().zip(&mu).map(|(x, y)| x + y).collect();
            for i in 0..l.dim_at(&lam) {
                for j in 0..l.dim_at(&mu) {
                    let (p, r) = (pos(&lam, i), pos(&mu, j));
                    assert_eq!(a.degree(p), &q.project(&lam));
                    assert_eq!(g.add(a.degree(p), a.degree(r)), q.project(&sum));
                    let h = l.product(&l.basis_at(&lam, i), &l.basis_at(&mu, j));
                    assert_eq!(l.degree_of(&h), sum);
                    for (k, c) in h.coords.iter().enumerate() {
                        assert_eq!(c, a.sc(p, r, pos(&sum, k)));
                    }
                }
            }
        }
    }
}

// y₂y₁ = c·y₁y₂ is preserved by diagonal rescaling and by twists, whose cocycle is symmetric
fn commutation_scalar(a: &FinGradedAlgebra, m: u64) -> CycloNumber {
    let (y1, y2) = (m as usize, 1usize);
    let k = m as usize + 1;
    a.sc(y2, y1, k) / a.sc(y1, y2, k)
}

#[test]
fn similarity_matches_commutation_invariant() {
    for m in [2u64, 3] {
        let q = QuotientMap::standard(vec![m, m]).unwrap();
        let scalars = [CycloNumber::one(), root(m, 1), CycloNumber::from_int(2)];
        let es: Vec<i64> = (1..m as i64).collect();
        let mut family = Vec::new();
        for &e in &es {
            for a1 in &scalars {
                for a2 in &scalars[..2] {
                    family.push(pnr(m, e, a1, a2));
                }
            }
        }
        for a in &family {
            for b in &family {
                let same = commutation_scalar(a, m) == commutation_scalar(b, m);
                match similar_check(a, b, &q).unwrap() {
                    Similarity::Similar { chi, phi } => {
                        assert!(same);
                        assert_eq!(twist(a, &chi, &q).unwrap().homomorphism_failure(b, &phi), None);
                    }
                    Similarity::NotSimilar => assert!(!same),
                    Similarity::Unknown(why) => panic!("undecided on line components: {why}"),
                }
            }
        }
    }
}

#[test]
fn twisting_power_norm_residue_rescales_parameters() {
    // the least-residue cocycle on y₁^i y₂^j only carries past m, so A_{a₁,a₂} twisted by χ is A_{a₁χ₁, a₂χ₂}
    let q = QuotientMap::standard(vec![3, 3]).unwrap();
    let (a1, a2) = (CycloNumber::from_int(5), root(3, 2));
    let (c1, c2) = (root(6, 1), CycloNumber::from_fraction(1, 7));
    let chi = Character::on_kernel(&q, vec![c1.clone(), c2.clone()]).unwrap();
    assert_eq!(twist(&pnr(3, 1, &a1, &a2), &chi, &q).unwrap(), pnr(3, 1, &(&a1 * &c1), &(&a2 * &c2)));
}

// number of λ ∈ (Z/N)ⁿ with λE ≡ 0, by enumeration
fn radical_count(e: &[Vec<i64>], n_mod: i64) -> u64 {
    let n = e.len();
    let bounds = vec![(0, n_mod - 1); n];
    box_points(&bounds)
        .iter()
        .filter(|l| (0..n).all(|j| (0..n).map(|i| l[i] * e[i][j]).sum::<i64>().rem_euclid(n_mod) == 0))
        .count() as u64
}

fn skew(upper: &[i64], n: usize) -> Vec<Vec<i64>> {
    let mut e = vec![vec![0; n]; n];
    let mut t = 0;
    for i in 0..n {
        for j in i + 1..n {
            e[i][j] = upper[t];
            e[j][i] = -upper[t];
            t += 1;
        }
    }
    e
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn torus_normal_form_index(n in 2usize..=3, n_mod in 2i64..=4, upper in proptest::collection::vec(-4i64..=4, 3)) {
        let e = skew(&upper, n);
        let em = IntMatrix::from_rows(&e).unwrap();
        let nf = qtorus_normal_form(&em, n_mod as u64).unwrap();
        prop_assert_eq!(nf.verify(&em, n_mod as u64), Ok(()));
        prop_assert_eq!(2 * nf.r() + nf.s, n);
        let index: u64 = nf.m.iter().map(|m| m * m).product();
        prop_assert_eq!(index * radical_count(&e, n_mod), (n_mod as u64).pow(n as u32));
        prop_assert!(nf.m.windows(2).all(|w| w[1] % w[0] == 0));
        prop_assert!(nf.m.iter().all(|&m| m > 1));
    }

    #[test]
    fn realization_recovers_sorted_orders(ops in proptest::collection::vec((0usize..2, 0usize..2, -2i64..=2), 1..6), m in 2u64..=3) {
        let b = qtorus(m, 1).unwrap().regrade(&unimodular(&ops, 2)).unwrap();
        let cert = realize(&b).unwrap();
        prop_assert_eq!(&cert.m, &vec![m, m]);
        prop_assert!(cert.a.regraded_line_iso(&pnr(m, 1, &CycloNumber::one(), &CycloNumber::one())).is_some());
        prop_assert_eq!(verify_realization(&b, &cert), Ok(()));
    }

    #[test]
    fn central_images_have_full_rank(k1 in 0i64..6, k2 in 0i64..6, c in 1i64..5) {
        let b = qtorus(3, 1).unwrap();
        let rho = Specialization::from_values(b.quotient(), vec![root(6, k1), CycloNumber::from_int(c)]).unwrap();
        let a = central_image(&b, &rho).unwrap();
        prop_assert_eq!(a.dim(), b.total_rank());
        for (th, &d) in b.comp_dims().iter().enumerate() {
            prop_assert_eq!(a.component(&b.quotient().group().element_at(th)).len(), d);
        }
        let chi = Character::on_kernel(b.quotient(), vec![root(6, k2), root(2, k1)]).unwrap();
        let lhs = central_image(&b, &rho_chi(&rho, &chi).unwrap()).unwrap();
        prop_assert_eq!(lhs, twist(&a, &chi, b.quotient()).unwrap());
    }
}

#[test]
fn group_algebra_loop_is_not_central() {
    // Γ is all of Λ for k[Z/2] graded by itself; its central image has a nontrivial centroid degree
    let g = BarGroup::new(vec![2]).unwrap();
    let a = FinGradedAlgebra::group_algebra(&g);
    let c = a.centroid();
    assert_eq!(c.support().len(), 2);
}
