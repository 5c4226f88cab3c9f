//! Systems of monomial equations `Π_j u_j^{a_ij} = b_i` over the nonzero scalars.

use num_traits::{ToPrimitive, Zero};

use crate::cyclo::CycloNumber;
use crate::lattice::{smith_normal_form, IntMatrix};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MonomialSolution {
    Solved(Vec<CycloNumber>),
    /// No solution over any field extension.
    Inconsistent,
    /// Solvable over the algebraic closure, but a required root is outside the cyclotomic tower.
    Unresolved,
}

fn monomial(values: &[CycloNumber], exps: impl Iterator<Item = i64>) -> CycloNumber {
    let mut out = CycloNumber::one();
    for (v, e) in values.iter().zip(exps) {
        if e != 0 {
            out *= &v.pow(e);
        }
    }
    out
}

/// Solves `Π_j u_j^{exps[i][j]} = rhs[i]` for `nvars` unknowns; every `rhs[i]` must be nonzero.
pub fn solve_monomial_system(exps: &[Vec<i64>], rhs: &[CycloNumber], nvars: usize) -> MonomialSolution {
    assert_eq!(exps.len(), rhs.len());
    assert!(rhs.iter().all(|b| !b.is_zero()), "right-hand sides must be units");
    if nvars == 0 {
        return if rhs.iter().all(CycloNumber::is_one) {
            MonomialSolution::Solved(Vec::new())
        } else {
            MonomialSolution::Inconsistent
        };
    }
    if exps.is_empty() {
        return MonomialSolution::Solved(vec![CycloNumber::one(); nvars]);
    }
    let a = IntMatrix::from_rows(exps).expect("rectangular exponent matrix");
    let s = smith_normal_form(&a);
    let r = exps.len();
    let mut w = vec![CycloNumber::one(); nvars];
    for i in 0..r {
        let c = monomial(rhs, (0..r).map(|t| s.u[(i, t)].to_i64().expect("exponent overflow")));
        let d = if i < nvars { s.d[(i, i)].clone() } else { Zero::zero() };
        if d.is_zero() {
            if !c.is_one() {
                return MonomialSolution::Inconsistent;
            }
            continue;
        }
        match c.nth_root(d.to_u64().expect("exponent overflow")) {
            Some(root) => w[i] = root,
            None => return MonomialSolution::Unresolved,
        }
    }
    let u = (0..nvars)
        .map(|j| monomial(&w, (0..nvars).map(|l| s.v[(j, l)].to_i64().expect("exponent overflow"))))
        .collect();
    MonomialSolution::Solved(u)
}

/// Incremental integer row reduction of a monomial system; keeps at most `nvars` rows.
#[derive(Clone, Debug)]
pub struct MonomialReducer {
    nvars: usize,
    pivots: Vec<Option<(Vec<i64>, CycloNumber)>>,
    inconsistent: bool,
}

impl MonomialReducer {
    pub fn new(nvars: usize) -> Self {
        MonomialReducer {
            nvars,
            pivots: vec![None; nvars],
            inconsistent: false,
        }
    }

    pub fn is_inconsistent(&self) -> bool {
        self.inconsistent
    }

    /// Adds `Π_j u_j^{row[j]} = b`; returns `false` once the system is known to be inconsistent.
    pub fn insert(&mut self, mut row: Vec<i64>, mut b: CycloNumber) -> bool {
        assert_eq!(row.len(), self.nvars);
        assert!(!b.is_zero(), "right-hand sides must be units");
        for p in 0..self.nvars {
            if row[p] == 0 {
                continue;
            }
            let Some((mut prow, mut pb)) = self.pivots[p].take() else {
                if row[p] < 0 {
                    row.iter_mut().for_each(|x| *x = -*x);
                    b = b.inv().expect("unit");
                }
                self.pivots[p] = Some((row, b));
                return !self.inconsistent;
            };
            // Euclid on column p; both rows vanish before p
            while row[p] != 0 {
                let q = prow[p] / row[p];
                if q != 0 {
                    for (x, y) in prow.iter_mut().zip(&row) {
                        *x -= q * y;
                    }
                    pb = &pb * &b.pow(-q);
                }
                std::mem::swap(&mut prow, &mut row);
                std::mem::swap(&mut pb, &mut b);
            }
            if prow[p] < 0 {
                prow.iter_mut().for_each(|x| *x = -*x);
                pb = pb.inv().expect("unit");
            }
            self.pivots[p] = Some((prow, pb));
        }
        if !b.is_one() {
            self.inconsistent = true;
        }
        !self.inconsistent
    }

    pub fn solve(&self) -> MonomialSolution {
        if self.inconsistent {
            return MonomialSolution::Inconsistent;
        }
        let (exps, rhs): (Vec<Vec<i64>>, Vec<CycloNumber>) = self.pivots.iter().flatten().cloned().unzip();
        solve_monomial_system(&exps, &rhs, self.nvars)
    }
}
