use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::IntMatrix;
use crate::error::{Error, Result};

/// `W E Wᵗ = form = diag(d₁J, …, d_rJ, 0, …, 0)` with `J = [[0,1],[-1,0]]`, `dᵢ > 0`, `d₁ | d₂ | …`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewNormalForm {
    pub transform: IntMatrix,
    pub form: IntMatrix,
    pub invariants: Vec<BigInt>,
}

impl SkewNormalForm {
    /// Number of hyperbolic blocks.
    pub fn rank_half(&self) -> usize {
        self.invariants.len()
    }
}

struct Congruence {
    a: IntMatrix,
    w: IntMatrix,
}

impl Congruence {
    fn swap(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        self.a.swap_cols(i, j);
        self.w.swap_rows(i, j);
    }

    // e_l ← e_l + c·e_s
    fn add(&mut self, l: usize, s: usize, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        self.a.add_row(l, s, c);
        self.a.add_col(l, s, c);
        self.w.add_row(l, s, c);
    }
}

fn smallest_entry(a: &IntMatrix, k: usize) -> Option<(usize, usize)> {
    let n = a.nrows();
    let mut best: Option<(usize, usize)> = None;
    for i in k..n {
        for j in i + 1..n {
            if a[(i, j)].is_zero() {
                continue;
            }
            match best {
                Some((bi, bj)) if a[(bi, bj)].abs() <= a[(i, j)].abs() => {}
                _ => best = Some((i, j)),
            }
        }
    }
    best
}

/// Alternating-form reduction over `Z` with a smallest-entry pivot rule.
pub fn skew_normal_form(e: &IntMatrix) -> Result<SkewNormalForm> {
    if !e.is_square() || *e != {
        let mut t = e.transpose();
        for i in 0..t.nrows() {
            t.negate_row(i);
        }
        t
    } {
        return Err(Error::Invalid("matrix is not skew-symmetric".into()));
    }
    let n = e.nrows();
    let mut c = Congruence {
        a: e.clone(),
        w: IntMatrix::identity(n),
    };
    let mut invariants = Vec::new();
    let mut k = 0;
    while k + 1 < n {
        let Some((i, j)) = smallest_entry(&c.a, k) else {
            break;
        };
        c.swap(i, k);
        c.swap(j, k + 1);
        if c.a[(k, k + 1)].is_negative() {
            c.swap(k, k + 1);
        }
        let d = c.a[(k, k + 1)].clone();
        let mut clean = true;
        for l in k + 2..n {
            let q = c.a[(k, l)].div_floor(&d);
            c.add(l, k + 1, &-q);
            let q = c.a[(k + 1, l)].div_floor(&d);
            c.add(l, k, &q);
            clean &= c.a[(k, l)].is_zero() && c.a[(k + 1, l)].is_zero();
        }
        if !clean {
            continue;
        }
        let offender = (k + 2..n).find(|&r| (k + 2..n).any(|s| !c.a[(r, s)].is_multiple_of(&d)));
        if let Some(r) = offender {
            c.add(k, r, &BigInt::one());
            continue;
        }
        invariants.push(d);
        k += 2;
    }
    Ok(SkewNormalForm {
        transform: c.w,
        form: c.a,
        invariants,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn check(e: &IntMatrix) -> SkewNormalForm {
        let s = skew_normal_form(e).unwrap();
        assert!(s.transform.is_unimodular());
        assert_eq!(s.transform.mul(e).mul(&s.transform.transpose()), s.form);
        let n = e.nrows();
        let mut expect = IntMatrix::zeros(n, n);
        for (b, d) in s.invariants.iter().enumerate() {
            assert!(d.is_positive());
            expect[(2 * b, 2 * b + 1)] = d.clone();
            expect[(2 * b + 1, 2 * b)] = -d;
        }
        assert_eq!(s.form, expect);
        for w in s.invariants.windows(2) {
            assert!(w[1].is_multiple_of(&w[0]));
        }
        s
    }

    #[test]
    fn hyperbolic_plus_zero() {
        let e = IntMatrix::from_i64(&[&[0, 1, 0], &[-1, 0, 0], &[0, 0, 0]]);
        let s = check(&e);
        assert_eq!(s.invariants, vec![BigInt::one()]);
        assert_eq!(check(&IntMatrix::zeros(3, 3)).rank_half(), 0);
    }

    #[test]
    fn four_by_four() {
        let e = IntMatrix::from_i64(&[&[0, 2, 4, 0], &[-2, 0, 0, 6], &[-4, 0, 0, 3], &[0, -6, -3, 0]]);
        check(&e);
        assert!(skew_normal_form(&IntMatrix::from_i64(&[&[0, 1], &[1, 0]])).is_err());
    }

    proptest! {
        #[test]
        fn normal_form_is_congruent(n in 1usize..6, vals in proptest::collection::vec(-6i64..7, 15)) {
            let mut e = IntMatrix::zeros(n, n);
            let mut it = vals.into_iter();
            for i in 0..n {
                for j in i + 1..n {
                    let v = BigInt::from(it.next().unwrap());
                    e[(j, i)] = -&v;
                    e[(i, j)] = v;
                }
            }
            check(&e);
        }
    }
}
