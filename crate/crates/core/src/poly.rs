//! Univariate polynomials over the cyclotomic scalars.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed};

use crate::cyclo::{divisors, CycloNumber};

/// Coefficients from the constant term upward; no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Poly {
    coeffs: Vec<CycloNumber>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<CycloNumber>) -> Self {
        while coeffs.last().is_some_and(CycloNumber::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: CycloNumber) -> Self {
        Self::new(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(CycloNumber::one())
    }

    /// `a + b·t`
    pub fn linear(a: CycloNumber, b: CycloNumber) -> Self {
        Self::new(vec![a, b])
    }

    pub fn coeffs(&self) -> &[CycloNumber] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Option<&CycloNumber> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let z = CycloNumber::zero();
        Poly::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&z) + other.coeffs.get(i).unwrap_or(&z))
                .collect(),
        )
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.scale(&CycloNumber::from_int(-1)))
    }

    pub fn scale(&self, c: &CycloNumber) -> Poly {
        Poly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![CycloNumber::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        Poly::new(out)
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn divrem(&self, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("polynomial division by zero");
        let lead_inv = d.coeffs[dd].inv().expect("nonzero leading coefficient");
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let mut q = vec![CycloNumber::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = &r[k + dd] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, dj) in d.coeffs.iter().enumerate() {
                r[k + j] -= &(&c * dj);
            }
            q[k] = c;
        }
        r.truncate(dd);
        (Poly::new(q), Poly::new(r))
    }

    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some(l) => self.scale(&l.inv().expect("nonzero")),
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn eval(&self, x: &CycloNumber) -> CycloNumber {
        let mut acc = CycloNumber::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    fn conductor(&self) -> u64 {
        self.coeffs.iter().fold(1, |l, c| l.lcm(&c.conductor()))
    }

    /// A root inside the cyclotomic scalars, searched among rationals (rational root test),
    /// and roots of unity of order at most 24 or dividing `lcm(2·conductors, extra)`.
    pub fn find_root(&self, extra_orders: &[u64]) -> Option<CycloNumber> {
        let deg = self.degree()?;
        if deg == 0 {
            return None;
        }
        if self.coeffs[0].is_zero() {
            return Some(CycloNumber::zero());
        }
        let mut candidates: Vec<CycloNumber> = Vec::new();
        if let Some(rs) = self.rational_root_candidates() {
            candidates.extend(rs);
        }
        let base = 2 * self.conductor();
        let mut orders: Vec<u64> = (1..=24).collect();
        for &e in extra_orders.iter().chain(std::iter::once(&1)) {
            for d in divisors(base.lcm(&e)) {
                if !orders.contains(&d) {
                    orders.push(d);
                }
            }
        }
        for &l in &orders {
            for j in 0..l {
                if j.gcd(&l) == 1 {
                    candidates.push(CycloNumber::zeta_pow(l, j as i64));
                }
            }
        }
        candidates.into_iter().find(|c| self.eval(c).is_zero())
    }

    fn rational_root_candidates(&self) -> Option<Vec<CycloNumber>> {
        let rats: Vec<BigRational> = self
            .coeffs
            .iter()
            .map(CycloNumber::as_rational)
            .collect::<Option<_>>()?;
        let den = rats.iter().fold(BigInt::one(), |l, r| l.lcm(r.denom()));
        let ints: Vec<BigInt> = rats.iter().map(|r| (r * &den).to_integer()).collect();
        let a0 = ints.first()?.abs();
        let an = ints.last()?.abs();
        let small = |n: &BigInt| -> Option<Vec<BigInt>> {
            let v: u64 = n.try_into().ok()?;
            (v <= 1_000_000).then(|| divisors(v).into_iter().map(BigInt::from).collect())
        };
        let ps = small(&a0)?;
        let qs = small(&an)?;
        let mut out = Vec::new();
        for p in &ps {
            for q in &qs {
                let r = BigRational::new(p.clone(), q.clone());
                out.push(CycloNumber::from_rational(&r));
                out.push(CycloNumber::from_rational(&-r));
            }
        }
        Some(out)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| format!("{c}*t^{i}"))
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}
