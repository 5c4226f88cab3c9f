//! Exact arithmetic in cyclotomic fields `Q(ζ_N)`.
//!
//! A [`CycloNumber`] is a polynomial in `ζ_N` with rational coefficients,
//! reduced modulo the `N`-th cyclotomic polynomial so that the carrier is a
//! field. The roots of unity are chosen compatibly: `ζ_N` is the class of the
//! indeterminate and `Q(ζ_m)` embeds into `Q(ζ_N)` (for `m | N`) through
//! `ζ_m ↦ ζ_N^{N/m}`, which makes `ζ_{mℓ}^m = ζ_ℓ` hold identically.
//!
//! Numbers with different conductors are promoted to the lcm transparently.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Euler's totient.
pub fn euler_phi(n: u64) -> u64 {
    assert!(n >= 1);
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

pub(crate) fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n % d == 0).collect()
}

fn phi_cache() -> &'static RwLock<HashMap<u64, Arc<Vec<i64>>>> {
    static CACHE: OnceLock<RwLock<HashMap<u64, Arc<Vec<i64>>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Exact division of integer polynomials (coefficients low to high) by a monic divisor.
fn div_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dd = den.len() - 1;
    let mut rem = num.to_vec();
    let qlen = num.len() - dd;
    let mut quot = vec![BigInt::zero(); qlen];
    for i in (0..qlen).rev() {
        let c = rem[i + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (j, d) in den.iter().enumerate() {
            rem[i + j] -= &c * d;
        }
        quot[i] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    quot
}

/// The `n`-th cyclotomic polynomial, coefficients from the constant term up.
///
/// Computed as `x^n - 1` divided by `Φ_d` for every proper divisor `d` of `n`.
pub fn cyclotomic_poly(n: u64) -> Vec<BigInt> {
    assert!(n >= 1, "cyclotomic polynomial needs n >= 1");
    let mut p = vec![BigInt::zero(); n as usize + 1];
    p[0] = BigInt::from(-1);
    p[n as usize] = BigInt::one();
    for d in divisors(n) {
        if d < n {
            let phi_d = cyclotomic_poly(d);
            p = div_monic(&p, &phi_d);
        }
    }
    p
}

fn phi_coeffs(n: u64) -> Arc<Vec<i64>> {
    if let Some(c) = phi_cache().read().expect("poisoned cache").get(&n) {
        return c.clone();
    }
    let coeffs: Vec<i64> = cyclotomic_poly(n)
        .iter()
        .map(|c| c.to_i64().expect("cyclotomic coefficient overflow"))
        .collect();
    let arc = Arc::new(coeffs);
    phi_cache()
        .write()
        .expect("poisoned cache")
        .insert(n, arc.clone());
    arc
}

/// Reduce an integer polynomial modulo `Φ_n` in place.
fn reduce_mod_phi(v: &mut Vec<BigInt>, n: u64) {
    let phi = phi_coeffs(n);
    let deg = phi.len() - 1;
    while v.len() > deg {
        let top = v.pop().expect("non-empty");
        if top.is_zero() {
            continue;
        }
        let base = v.len() - deg;
        for (j, c) in phi[..deg].iter().enumerate() {
            if *c != 0 {
                v[base + j] -= &top * *c;
            }
        }
    }
}

/// Exact element of the cyclotomic field `Q(ζ_N)`.
#[derive(Clone, Debug)]
pub struct CycloNumber {
    conductor: u64,
    // numerators of the coefficients of 1, ζ, ζ², ...; no trailing zeros
    num: Vec<BigInt>,
    den: BigInt,
}

impl CycloNumber {
    pub fn zero() -> Self {
        CycloNumber {
            conductor: 1,
            num: Vec::new(),
            den: BigInt::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(v: i64) -> Self {
        Self::from_bigint(BigInt::from(v))
    }

    pub fn from_bigint(v: BigInt) -> Self {
        let mut x = CycloNumber {
            conductor: 1,
            num: vec![v],
            den: BigInt::one(),
        };
        x.normalize();
        x
    }

    pub fn from_rational(r: &BigRational) -> Self {
        let mut x = CycloNumber {
            conductor: 1,
            num: vec![r.numer().clone()],
            den: r.denom().clone(),
        };
        x.normalize();
        x
    }

    pub fn from_fraction(p: i64, q: i64) -> Self {
        Self::from_rational(&BigRational::new(BigInt::from(p), BigInt::from(q)))
    }

    /// Builds `Σ c_i ζ_N^i`, reducing modulo `Φ_N`. Any number of coefficients is accepted.
    pub fn from_coefficients(conductor: u64, coeffs: &[BigRational]) -> Self {
        assert!(conductor >= 1, "conductor must be positive");
        let mut den = BigInt::one();
        for c in coeffs {
            den = den.lcm(c.denom());
        }
        let mut num: Vec<BigInt> = coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        reduce_mod_phi(&mut num, conductor);
        let mut x = CycloNumber {
            conductor,
            num,
            den,
        };
        x.normalize();
        x
    }

    /// The compatible primitive `ℓ`-th root of unity `ζ_ℓ`.
    pub fn root_of_unity(l: u64) -> Self {
        Self::zeta_pow(l, 1)
    }

    /// `ζ_ℓ^k` for any integer `k`.
    pub fn zeta_pow(l: u64, k: i64) -> Self {
        assert!(l >= 1, "root of unity order must be positive");
        let e = k.rem_euclid(l as i64) as usize;
        let mut num = vec![BigInt::zero(); e + 1];
        num[e] = BigInt::one();
        reduce_mod_phi(&mut num, l);
        let mut x = CycloNumber {
            conductor: l,
            num,
            den: BigInt::one(),
        };
        x.normalize();
        x
    }

    fn normalize(&mut self) {
        while self.num.last().is_some_and(Zero::is_zero) {
            self.num.pop();
        }
        if self.num.is_empty() {
            self.den = BigInt::one();
            self.conductor = 1;
            return;
        }
        let mut g = self.den.clone();
        for c in &self.num {
            if g.is_one() {
                break;
            }
            g = g.gcd(c);
        }
        if self.den.is_negative() {
            g = -g;
        }
        if !g.is_one() {
            for c in &mut self.num {
                *c = &*c / &g;
            }
            self.den = &self.den / &g;
        }
        if self.num.len() <= 1 {
            self.conductor = 1;
        }
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.num.len() == 1 && self.num[0].is_one() && self.den.is_one()
    }

    pub fn is_rational(&self) -> bool {
        self.num.len() <= 1
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        match self.num.len() {
            0 => Some(BigRational::zero()),
            1 => Some(BigRational::new(self.num[0].clone(), self.den.clone())),
            _ => None,
        }
    }

    pub fn as_integer(&self) -> Option<BigInt> {
        if self.den.is_one() && self.num.len() <= 1 {
            Some(self.num.first().cloned().unwrap_or_default())
        } else {
            None
        }
    }

    /// Coefficients on `1, ζ_N, …, ζ_N^{φ(N)-1}` (trailing zeros omitted).
    pub fn coefficients(&self) -> Vec<BigRational> {
        self.num
            .iter()
            .map(|c| BigRational::new(c.clone(), self.den.clone()))
            .collect()
    }

    /// Re-expresses the number in `Q(ζ_target)`; `target` must be a multiple of the conductor.
    pub fn promote(&self, target: u64) -> Self {
        assert!(
            target % self.conductor == 0,
            "cannot promote conductor {} to {}",
            self.conductor,
            target
        );
        if target == self.conductor || self.is_rational() {
            return self.clone();
        }
        let step = (target / self.conductor) as usize;
        let mut num = vec![BigInt::zero(); (self.num.len() - 1) * step + 1];
        for (i, c) in self.num.iter().enumerate() {
            num[i * step] = c.clone();
        }
        reduce_mod_phi(&mut num, target);
        // promotion never leaves the field, so no re-normalisation of content needed
        // beyond trimming
        let mut x = CycloNumber {
            conductor: target,
            num,
            den: self.den.clone(),
        };
        x.normalize();
        x
    }

    fn aligned(a: &Self, b: &Self) -> (Self, Self, u64) {
        let l = a.conductor.lcm(&b.conductor);
        (a.promote(l), b.promote(l), l)
    }

    fn add_same(a: &Self, b: &Self, conductor: u64, negate_b: bool) -> Self {
        let len = a.num.len().max(b.num.len());
        let mut num = Vec::with_capacity(len);
        for i in 0..len {
            let x = a.num.get(i).map(|c| c * &b.den).unwrap_or_default();
            let y = b.num.get(i).map(|c| c * &a.den).unwrap_or_default();
            num.push(if negate_b { x - y } else { x + y });
        }
        let mut r = CycloNumber {
            conductor,
            num,
            den: &a.den * &b.den,
        };
        r.normalize();
        r
    }

    fn add_impl(&self, other: &Self, negate: bool) -> Self {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if negate { -other } else { other.clone() };
        }
        if self.conductor == other.conductor || other.is_rational() || self.is_rational() {
            let c = self.conductor.max(other.conductor);
            return Self::add_same(self, other, c, negate);
        }
        let (a, b, l) = Self::aligned(self, other);
        Self::add_same(&a, &b, l, negate)
    }

    fn scale(&self, r_num: &BigInt, r_den: &BigInt) -> Self {
        if r_num.is_zero() {
            return Self::zero();
        }
        let mut x = CycloNumber {
            conductor: self.conductor,
            num: self.num.iter().map(|c| c * r_num).collect(),
            den: &self.den * r_den,
        };
        x.normalize();
        x
    }

    fn mul_impl(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.is_rational() {
            return other.scale(&self.num[0], &self.den);
        }
        if other.is_rational() {
            return self.scale(&other.num[0], &other.den);
        }
        let (a, b, l) = if self.conductor == other.conductor {
            (self.clone(), other.clone(), self.conductor)
        } else {
            Self::aligned(self, other)
        };
        let mut num = vec![BigInt::zero(); a.num.len() + b.num.len() - 1];
        for (i, x) in a.num.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.num.iter().enumerate() {
                if !y.is_zero() {
                    num[i + j] += x * y;
                }
            }
        }
        reduce_mod_phi(&mut num, l);
        let mut r = CycloNumber {
            conductor: l,
            num,
            den: &a.den * &b.den,
        };
        r.normalize();
        r
    }

    /// Galois action `ζ_N ↦ ζ_N^k` (`k` coprime to the conductor).
    pub fn galois(&self, k: u64) -> Self {
        let n = self.conductor;
        assert!(k.gcd(&n) == 1, "Galois exponent must be coprime to the conductor");
        if self.is_rational() {
            return self.clone();
        }
        let mut num = vec![BigInt::zero(); n as usize];
        for (i, c) in self.num.iter().enumerate() {
            let e = (i as u64 * k % n) as usize;
            num[e] += c;
        }
        reduce_mod_phi(&mut num, n);
        let mut x = CycloNumber {
            conductor: n,
            num,
            den: self.den.clone(),
        };
        x.normalize();
        x
    }

    /// Multiplicative inverse; errors on zero.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::SingularScalar);
        }
        if self.is_rational() {
            let r = BigRational::new(self.den.clone(), self.num[0].clone());
            return Ok(Self::from_rational(&r));
        }
        // a^{-1} = (product of the other conjugates) / norm(a)
        let n = self.conductor;
        let mut others = Self::one();
        for k in 2..n {
            if k.gcd(&n) == 1 {
                others = &others * &self.galois(k);
            }
        }
        let norm = (&others * self)
            .as_rational()
            .expect("field norm is rational");
        let inv_norm = BigRational::one() / norm;
        Ok(&others * &Self::from_rational(&inv_norm))
    }

    pub fn pow(&self, e: i64) -> Self {
        if e < 0 {
            return self
                .inv()
                .expect("negative power of zero")
                .pow(-e);
        }
        let mut base = self.clone();
        let mut acc = Self::one();
        let mut k = e as u64;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Multiplicative order if this is a root of unity, `None` otherwise (including zero).
    ///
    /// A root of unity in `Q(ζ_N)` has order dividing `lcm(2, N)`.
    pub fn order_of(&self) -> Option<u64> {
        if self.is_zero() {
            return None;
        }
        let bound = self.conductor.lcm(&2);
        if !self.pow(bound as i64).is_one() {
            return None;
        }
        divisors(bound)
            .into_iter()
            .find(|&d| self.pow(d as i64).is_one())
    }

    /// If this is a root of unity `ζ_L^j`, returns `(L, j)` with `L` its order.
    pub fn root_of_unity_log(&self) -> Option<(u64, u64)> {
        let ord = self.order_of()?;
        let z = Self::root_of_unity(ord);
        let mut acc = Self::one();
        for j in 0..ord {
            if &acc == self {
                return Some((ord, j));
            }
            acc = &acc * &z;
        }
        unreachable!("root of unity of order {ord} not found among powers of ζ_{ord}")
    }

    /// Some `d`-th root of `self` inside the cyclotomic tower, when one is found.
    ///
    /// Roots of unity always have one; rationals are handled when they are perfect powers
    /// up to sign (the sign is absorbed by a root of unity).
    pub fn nth_root(&self, d: u64) -> Option<Self> {
        assert!(d >= 1);
        if d == 1 || self.is_zero() || self.is_one() {
            return Some(self.clone());
        }
        if let Some((l, j)) = self.root_of_unity_log() {
            return Some(Self::zeta_pow(l * d, j as i64));
        }
        let r = self.as_rational()?;
        let sign = if r.is_negative() {
            Self::zeta_pow(2 * d, 1)
        } else {
            Self::one()
        };
        let a = r.abs();
        let p = integer_root(a.numer(), d)?;
        let q = integer_root(a.denom(), d)?;
        Some(&sign * &Self::from_rational(&BigRational::new(p, q)))
    }
}

fn integer_root(n: &BigInt, d: u64) -> Option<BigInt> {
    let r = n.nth_root(d as u32);
    if num_traits::pow(r.clone(), d as usize) == *n {
        Some(r)
    } else {
        None
    }
}

impl Default for CycloNumber {
    fn default() -> Self {
        Self::zero()
    }
}

impl PartialEq for CycloNumber {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.num == other.num && self.den == other.den;
        }
        if self.is_rational() || other.is_rational() {
            // rationals are always stored with conductor 1
            return false;
        }
        let (a, b, _) = Self::aligned(self, other);
        a.num == b.num && a.den == b.den
    }
}

impl Eq for CycloNumber {}

impl From<i64> for CycloNumber {
    fn from(v: i64) -> Self {
        Self::from_int(v)
    }
}

impl<'a> Add<&'a CycloNumber> for &'a CycloNumber {
    type Output = CycloNumber;
    fn add(self, rhs: &'a CycloNumber) -> CycloNumber {
        self.add_impl(rhs, false)
    }
}

impl<'a> Sub<&'a CycloNumber> for &'a CycloNumber {
    type Output = CycloNumber;
    fn sub(self, rhs: &'a CycloNumber) -> CycloNumber {
        self.add_impl(rhs, true)
    }
}

impl<'a> Mul<&'a CycloNumber> for &'a CycloNumber {
    type Output = CycloNumber;
    fn mul(self, rhs: &'a CycloNumber) -> CycloNumber {
        self.mul_impl(rhs)
    }
}

/// Panics when dividing by zero; use [`CycloNumber::inv`] for a checked inverse.
impl<'a> Div<&'a CycloNumber> for &'a CycloNumber {
    type Output = CycloNumber;
    fn div(self, rhs: &'a CycloNumber) -> CycloNumber {
        self * &rhs.inv().expect("division by zero")
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<CycloNumber> for CycloNumber {
            type Output = CycloNumber;
            fn $m(self, rhs: CycloNumber) -> CycloNumber {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a CycloNumber> for CycloNumber {
            type Output = CycloNumber;
            fn $m(self, rhs: &'a CycloNumber) -> CycloNumber {
                (&self).$m(rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);
owned_binop!(Div, div);

impl AddAssign<&CycloNumber> for CycloNumber {
    fn add_assign(&mut self, rhs: &CycloNumber) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&CycloNumber> for CycloNumber {
    fn sub_assign(&mut self, rhs: &CycloNumber) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&CycloNumber> for CycloNumber {
    fn mul_assign(&mut self, rhs: &CycloNumber) {
        *self = &*self * rhs;
    }
}

impl Neg for &CycloNumber {
    type Output = CycloNumber;
    fn neg(self) -> CycloNumber {
        CycloNumber {
            conductor: self.conductor,
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }
}

impl Neg for CycloNumber {
    type Output = CycloNumber;
    fn neg(self) -> CycloNumber {
        -&self
    }
}

fn fmt_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Text form `cyclo(N)[c0, c1, ...]`; zero prints as `cyclo(1)[0]`.
impl fmt::Display for CycloNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coeffs = self.coefficients();
        write!(f, "cyclo({})[", self.conductor)?;
        if coeffs.is_empty() {
            write!(f, "0")?;
        }
        for (i, c) in coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", fmt_rational(c))?;
        }
        write!(f, "]")
    }
}

pub(crate) fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                return None;
            }
            Some(BigRational::new(p, q))
        }
        None => Some(BigRational::from_integer(s.parse().ok()?)),
    }
}

/// Accepts `cyclo(N)[c0, c1, ...]`, a bare rational `p/q`, or `zeta(N)` / `zeta(N)^k`.
impl FromStr for CycloNumber {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Invalid(format!("malformed scalar `{s}`"));
        let t = s.trim();
        if let Some(rest) = t.strip_prefix("cyclo(") {
            let (n, rest) = rest.split_once(')').ok_or_else(bad)?;
            let n: u64 = n.trim().parse().map_err(|_| bad())?;
            if n == 0 {
                return Err(bad());
            }
            let body = rest
                .trim()
                .strip_prefix('[')
                .and_then(|b| b.strip_suffix(']'))
                .ok_or_else(bad)?;
            let coeffs = body
                .split(',')
                .map(|c| parse_rational(c).ok_or_else(bad))
                .collect::<Result<Vec<_>>>()?;
            return Ok(Self::from_coefficients(n, &coeffs));
        }
        if let Some(rest) = t.strip_prefix("zeta(") {
            let (n, rest) = rest.split_once(')').ok_or_else(bad)?;
            let n: u64 = n.trim().parse().map_err(|_| bad())?;
            if n == 0 {
                return Err(bad());
            }
            let k: i64 = match rest.trim().strip_prefix('^') {
                Some(k) => k.trim().parse().map_err(|_| bad())?,
                None if rest.trim().is_empty() => 1,
                None => return Err(bad()),
            };
            return Ok(Self::zeta_pow(n, k));
        }
        parse_rational(t)
            .map(|r| Self::from_rational(&r))
            .ok_or_else(bad)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_poly(1), ints(&[-1, 1]));
        assert_eq!(cyclotomic_poly(4), ints(&[1, 0, 1]));
        assert_eq!(cyclotomic_poly(6), ints(&[1, -1, 1]));
        assert_eq!(cyclotomic_poly(12), ints(&[1, 0, -1, 0, 1]));
        for n in 1..40 {
            assert_eq!(cyclotomic_poly(n).len() as u64 - 1, euler_phi(n));
        }
    }

    #[test]
    fn small_roots() {
        assert!(CycloNumber::root_of_unity(1).is_one());
        assert_eq!(CycloNumber::root_of_unity(2), CycloNumber::from_int(-1));
        let i = CycloNumber::root_of_unity(4);
        assert_eq!(&i * &i, CycloNumber::from_int(-1));
        let z3 = CycloNumber::root_of_unity(3);
        assert_eq!(z3.inv().unwrap(), z3.pow(2));
        assert_eq!(CycloNumber::root_of_unity(6).pow(3), CycloNumber::root_of_unity(2));
    }

    #[test]
    fn order_and_roots() {
        assert_eq!(CycloNumber::from_int(-1).order_of(), Some(2));
        assert_eq!(CycloNumber::root_of_unity(6).order_of(), Some(6));
        assert_eq!(CycloNumber::from_int(2).order_of(), None);
        assert_eq!(CycloNumber::zero().order_of(), None);
        let half = CycloNumber::from_fraction(1, 2) + CycloNumber::root_of_unity(3);
        assert_eq!(half.order_of(), None);
        let r = CycloNumber::from_int(-1).nth_root(2).unwrap();
        assert_eq!(&r * &r, CycloNumber::from_int(-1));
        let r = CycloNumber::from_fraction(9, 4).nth_root(2).unwrap();
        assert_eq!(r, CycloNumber::from_fraction(3, 2));
        assert!(CycloNumber::from_int(2).nth_root(2).is_none());
    }

    #[test]
    fn zero_inverse_is_error() {
        assert_eq!(CycloNumber::zero().inv(), Err(Error::SingularScalar));
    }

    #[test]
    fn mixed_conductors() {
        let z3 = CycloNumber::root_of_unity(3);
        let z12 = CycloNumber::root_of_unity(12);
        assert_eq!(z12.pow(4), z3);
        let s = &z3 + &CycloNumber::root_of_unity(4);
        assert_eq!(s.conductor(), 12);
        assert_eq!(&s - &CycloNumber::root_of_unity(4), z3);
    }

    #[test]
    fn text_round_trip() {
        let x = CycloNumber::from_coefficients(
            5,
            &[
                BigRational::new(1.into(), 2.into()),
                BigRational::from_integer((-3).into()),
            ],
        );
        let s = x.to_string();
        assert_eq!(s, "cyclo(5)[1/2, -3]");
        assert_eq!(s.parse::<CycloNumber>().unwrap(), x);
        assert_eq!("cyclo(1)[0]".parse::<CycloNumber>().unwrap(), CycloNumber::zero());
        assert_eq!("zeta(4)^2".parse::<CycloNumber>().unwrap(), CycloNumber::from_int(-1));
        assert_eq!("-7/3".parse::<CycloNumber>().unwrap(), CycloNumber::from_fraction(-7, 3));
        assert!("cyclo(0)[1]".parse::<CycloNumber>().is_err());
        assert!("cyclo(3)[1/0]".parse::<CycloNumber>().is_err());
    }
}
