//! Exact arithmetic in the cyclotomic field `Q(zeta_60)`.
//!
//! Elements are stored in the power basis `1, z, ..., z^15` of
//! `Q[z]/Phi_60(z)` with a single positive common denominator. The fixed
//! complex embedding is `z -> exp(2*pi*i/60)`, so `i = z^15`,
//! `theta = z^20` and `zeta_5 = z^12`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::sync::atomic::{self, AtomicU64};
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::numeric::cos_table;
use crate::error::{Error, Result};

/// Degree of `Q(zeta_60)` over `Q`.
pub const DEGREE: usize = 16;
/// Conductor of the ambient field.
pub const CONDUCTOR: i64 = 60;

/// Starting precision (bits) of the interval sign test.
pub const DEFAULT_PRECISION_BITS: u64 = 64;

static PRECISION_BITS: AtomicU64 = AtomicU64::new(DEFAULT_PRECISION_BITS);

/// Sets the starting precision used by [`CycNum::real_sign`]. Only speed
/// depends on it; the returned signs are always exact.
pub fn set_precision_bits(bits: u64) {
    PRECISION_BITS.store(bits, atomic::Ordering::Relaxed);
}

pub fn precision_bits() -> u64 {
    PRECISION_BITS.load(atomic::Ordering::Relaxed)
}

/// Reduces a coefficient vector of length up to 31 modulo
/// `Phi_60 = z^16 + z^14 - z^10 - z^8 - z^6 + z^2 + 1`.
fn reduce(v: &mut Vec<BigInt>) {
    for d in (DEGREE..v.len()).rev() {
        if v[d].is_zero() {
            continue;
        }
        let c = std::mem::take(&mut v[d]);
        v[d - 2] -= &c;
        v[d - 6] += &c;
        v[d - 8] += &c;
        v[d - 10] += &c;
        v[d - 14] -= &c;
        v[d - 16] -= &c;
    }
    v.truncate(DEGREE);
}

/// `z^m` reduced into the power basis, for `m = 0..60`.
fn power_table() -> &'static [[i64; DEGREE]] {
    static TABLE: OnceLock<Vec<[i64; DEGREE]>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut out = Vec::with_capacity(CONDUCTOR as usize);
        let mut cur: Vec<BigInt> = vec![BigInt::zero(); DEGREE];
        cur[0] = BigInt::one();
        for _ in 0..CONDUCTOR {
            let mut row = [0i64; DEGREE];
            for (r, c) in row.iter_mut().zip(cur.iter()) {
                *r = i64::try_from(c).expect("small coefficient");
            }
            out.push(row);
            cur.insert(0, BigInt::zero());
            reduce(&mut cur);
        }
        out
    })
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycNum {
    num: [BigInt; DEGREE],
    den: BigInt,
}

impl CycNum {
    fn from_parts(num: [BigInt; DEGREE], den: BigInt) -> Self {
        let mut out = CycNum { num, den };
        out.normalize();
        out
    }

    fn normalize(&mut self) {
        if self.den.is_negative() {
            self.den = -std::mem::take(&mut self.den);
            for c in self.num.iter_mut() {
                *c = -std::mem::take(c);
            }
        }
        let mut g = self.den.clone();
        for c in self.num.iter() {
            if !c.is_zero() {
                g = g.gcd(c);
                if g.is_one() {
                    return;
                }
            }
        }
        if self.num.iter().all(Zero::is_zero) {
            self.den = BigInt::one();
            return;
        }
        if !g.is_one() {
            for c in self.num.iter_mut() {
                *c /= &g;
            }
            self.den /= &g;
        }
    }

    pub fn zero() -> Self {
        CycNum {
            num: Default::default(),
            den: BigInt::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        let mut out = Self::zero();
        out.num[0] = BigInt::from(n);
        out
    }

    pub fn from_bigint(n: BigInt) -> Self {
        let mut out = Self::zero();
        out.num[0] = n;
        out
    }

    pub fn from_rational(q: &BigRational) -> Self {
        let mut num: [BigInt; DEGREE] = Default::default();
        num[0] = q.numer().clone();
        Self::from_parts(num, q.denom().clone())
    }

    pub fn frac(n: i64, d: i64) -> Self {
        Self::from_rational(&BigRational::new(n.into(), d.into()))
    }

    /// Builds an element from its power-basis coordinates.
    pub fn from_coeffs(coeffs: &[BigRational]) -> Self {
        assert!(coeffs.len() <= DEGREE);
        let den = coeffs
            .iter()
            .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
        let mut num: [BigInt; DEGREE] = Default::default();
        for (slot, q) in num.iter_mut().zip(coeffs) {
            *slot = q.numer() * (&den / q.denom());
        }
        Self::from_parts(num, den)
    }

    /// `zeta_60^k`.
    pub fn zeta60(k: i64) -> Self {
        let row = &power_table()[k.rem_euclid(CONDUCTOR) as usize];
        let mut out = Self::zero();
        for (slot, &c) in out.num.iter_mut().zip(row.iter()) {
            *slot = BigInt::from(c);
        }
        out
    }

    /// `exp(2*pi*i*k/n)` for `n` dividing 60.
    pub fn root_of_unity(n: i64, k: i64) -> Result<Self> {
        if n <= 0 || CONDUCTOR % n != 0 {
            return Err(Error::UnsupportedOrder(n));
        }
        Ok(Self::zeta60((CONDUCTOR / n) * k))
    }

    /// Power-basis coordinate `k` as a rational.
    pub fn coeff(&self, k: usize) -> BigRational {
        BigRational::new(self.num[k].clone(), self.den.clone())
    }

    pub fn coeffs(&self) -> Vec<BigRational> {
        (0..DEGREE).map(|k| self.coeff(k)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num[0].is_one() && self.num[1..].iter().all(Zero::is_zero)
    }

    /// The value as a rational, if it lies in `Q`.
    pub fn to_rational(&self) -> Option<BigRational> {
        if self.num[1..].iter().all(Zero::is_zero) {
            Some(self.coeff(0))
        } else {
            None
        }
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        if self.den.is_one() && self.num[1..].iter().all(Zero::is_zero) {
            Some(self.num[0].clone())
        } else {
            None
        }
    }

    /// Image under `z -> z^k` for `k` coprime to 60.
    pub fn galois(&self, k: i64) -> Self {
        debug_assert_eq!(k.gcd(&CONDUCTOR), 1);
        let table = power_table();
        let mut num: [BigInt; DEGREE] = Default::default();
        for (j, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let row = &table[(j as i64 * k).rem_euclid(CONDUCTOR) as usize];
            for (slot, &r) in num.iter_mut().zip(row.iter()) {
                if r != 0 {
                    *slot += c * r;
                }
            }
        }
        CycNum {
            num,
            den: self.den.clone(),
        }
    }

    /// Complex conjugation, i.e. `z -> z^-1`.
    pub fn conj(&self) -> Self {
        self.galois(CONDUCTOR - 1)
    }

    pub fn is_real(&self) -> bool {
        self.conj() == *self
    }

    /// Multiplicative inverse, computed as the product of the other Galois
    /// conjugates divided by the norm.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(q) = self.to_rational() {
            return Ok(Self::from_rational(&q.recip()));
        }
        let mut others = Self::one();
        for k in 2..CONDUCTOR {
            if k.gcd(&CONDUCTOR) == 1 {
                others = &others * &self.galois(k);
            }
        }
        let norm = (self * &others)
            .to_rational()
            .expect("norm of a cyclotomic number is rational");
        Ok(others.scale(&norm.recip()))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        let num = std::array::from_fn(|k| &self.num[k] * q.numer());
        Self::from_parts(num, &self.den * q.denom())
    }

    pub fn scale_int(&self, n: i64) -> Self {
        let num = std::array::from_fn(|k| &self.num[k] * n);
        Self::from_parts(num, self.den.clone())
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Sign of a real element under the fixed embedding.
    ///
    /// Zero is decided exactly; otherwise the value is enclosed in an
    /// interval whose width halves with each doubling of the working
    /// precision until the interval excludes zero.
    pub fn real_sign(&self) -> Result<i8> {
        self.real_sign_with_precision(precision_bits())
    }

    pub fn real_sign_with_precision(&self, start_bits: u64) -> Result<i8> {
        if self.is_zero() {
            return Ok(0);
        }
        if !self.is_real() {
            return Err(Error::NotReal(self.to_string()));
        }
        if let Some(q) = self.to_rational() {
            return Ok(if q.is_positive() { 1 } else { -1 });
        }
        let radius: BigInt = self.num.iter().map(|c| c.abs() * 2).sum();
        let mut bits = start_bits.max(8);
        loop {
            let table = cos_table(bits);
            let centre: BigInt = self.num.iter().zip(table.iter()).map(|(c, t)| c * t).sum();
            if centre.abs() > radius {
                return Ok(if centre.is_positive() { 1 } else { -1 });
            }
            bits *= 2;
        }
    }

    /// True when the element is a real number `>= 0`.
    pub fn is_nonneg_real(&self) -> bool {
        matches!(self.real_sign(), Ok(0) | Ok(1))
    }

    /// True when the element is a natural number (including 0).
    pub fn is_natural(&self) -> bool {
        self.to_integer().is_some_and(|n| !n.is_negative())
    }

    /// Floating-point approximation `(re, im)`, for display only.
    pub fn approx(&self) -> (f64, f64) {
        use num_traits::ToPrimitive;
        let den = self.den.to_f64().unwrap_or(f64::NAN);
        let mut re = 0.0;
        let mut im = 0.0;
        for (k, c) in self.num.iter().enumerate() {
            let c = c.to_f64().unwrap_or(f64::NAN) / den;
            let a = 2.0 * std::f64::consts::PI * k as f64 / CONDUCTOR as f64;
            re += c * a.cos();
            im += c * a.sin();
        }
        (re, im)
    }

    /// Coefficients as `"p/q"` strings, lowest degree first.
    pub fn to_strings(&self) -> Vec<String> {
        (0..DEGREE)
            .map(|k| {
                let q = self.coeff(k);
                format!("{}/{}", q.numer(), q.denom())
            })
            .collect()
    }

    pub fn from_strings(items: &[String]) -> Result<Self> {
        if items.len() != DEGREE {
            return Err(Error::Parse(format!(
                "expected {DEGREE} coefficients, got {}",
                items.len()
            )));
        }
        let coeffs = items
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_coeffs(&coeffs))
    }
}

pub(crate) fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("bad rational {s:?}"));
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::DivisionByZero);
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

impl Default for CycNum {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for CycNum {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl<'a> Add<&'a CycNum> for &'a CycNum {
    type Output = CycNum;
    fn add(self, rhs: &CycNum) -> CycNum {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return rhs.clone();
        }
        if self.den == rhs.den {
            let num = std::array::from_fn(|k| &self.num[k] + &rhs.num[k]);
            return CycNum::from_parts(num, self.den.clone());
        }
        let num = std::array::from_fn(|k| &self.num[k] * &rhs.den + &rhs.num[k] * &self.den);
        CycNum::from_parts(num, &self.den * &rhs.den)
    }
}

impl<'a> Sub<&'a CycNum> for &'a CycNum {
    type Output = CycNum;
    fn sub(self, rhs: &CycNum) -> CycNum {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a CycNum> for &'a CycNum {
    type Output = CycNum;
    fn mul(self, rhs: &CycNum) -> CycNum {
        if self.is_zero() || rhs.is_zero() {
            return CycNum::zero();
        }
        let mut prod = vec![BigInt::zero(); 2 * DEGREE - 1];
        for (i, a) in self.num.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.num.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        reduce(&mut prod);
        let mut num: [BigInt; DEGREE] = Default::default();
        for (slot, c) in num.iter_mut().zip(prod) {
            *slot = c;
        }
        CycNum::from_parts(num, &self.den * &rhs.den)
    }
}

impl Neg for &CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        CycNum {
            num: std::array::from_fn(|k| -&self.num[k]),
            den: self.den.clone(),
        }
    }
}

impl Neg for CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<CycNum> for CycNum {
            type Output = CycNum;
            fn $m(self, rhs: CycNum) -> CycNum {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a CycNum> for CycNum {
            type Output = CycNum;
            fn $m(self, rhs: &CycNum) -> CycNum {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<CycNum> for &'a CycNum {
            type Output = CycNum;
            fn $m(self, rhs: CycNum) -> CycNum {
                self.$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&CycNum> for CycNum {
    fn add_assign(&mut self, rhs: &CycNum) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&CycNum> for CycNum {
    fn sub_assign(&mut self, rhs: &CycNum) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&CycNum> for CycNum {
    fn mul_assign(&mut self, rhs: &CycNum) {
        *self = &*self * rhs;
    }
}

impl std::iter::Sum for CycNum {
    fn sum<I: Iterator<Item = CycNum>>(iter: I) -> CycNum {
        iter.fold(CycNum::zero(), |acc, x| &acc + &x)
    }
}

impl PartialOrd for CycNum {
    /// Only real elements are comparable.
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match (self - other).real_sign() {
            Ok(-1) => Some(Ordering::Less),
            Ok(0) => Some(Ordering::Equal),
            Ok(1) => Some(Ordering::Greater),
            _ => None,
        }
    }
}

impl fmt::Display for CycNum {
    /// Rationals print as `p` or `p/q`; other values as a polynomial in
    /// `z = zeta_60`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(q) = self.to_rational() {
            return write!(f, "{q}");
        }
        let mut first = true;
        for k in 0..DEGREE {
            let c = self.coeff(k);
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_negative() { ("-", -c) } else { ("+", c) };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "z")?,
                (1, false) => write!(f, "{mag}*z")?,
                (_, true) => write!(f, "z^{k}")?,
                (_, false) => write!(f, "{mag}*z^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycNum({self})")
    }
}

impl Serialize for CycNum {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_strings().serialize(s)
    }
}

impl<'de> Deserialize<'de> for CycNum {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let items = Vec::<String>::deserialize(d)?;
        CycNum::from_strings(&items).map_err(D::Error::custom)
    }
}
