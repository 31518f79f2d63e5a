//! Fixed-point enclosures of `cos(2*pi*k/60)` used by the real sign test.

use num_bigint::BigInt;
use num_traits::{One, Zero};

const GUARD_BITS: u64 = 40;

/// `atan(1/m) * 2^w`, truncated; absolute error below `3 * (w + 1)` units.
fn atan_inv(m: u32, w: u64) -> BigInt {
    let m = BigInt::from(m);
    let m2 = &m * &m;
    let mut power = (BigInt::one() << w) / &m;
    let mut sum = BigInt::zero();
    let mut n: u64 = 0;
    loop {
        let term = &power / BigInt::from(2 * n + 1);
        if term.is_zero() {
            break;
        }
        if n.is_multiple_of(2) {
            sum += term;
        } else {
            sum -= term;
        }
        power /= &m2;
        n += 1;
    }
    sum
}

/// `pi * 2^w` via Machin's formula.
fn pi_fixed(w: u64) -> BigInt {
    atan_inv(5, w) * 16 - atan_inv(239, w) * 4
}

/// `cos(x) * 2^w` for `0 <= x <= pi/2`, where `x` is given as `x * 2^w`.
fn cos_fixed(x: &BigInt, w: u64) -> BigInt {
    let x2 = (x * x) >> w;
    let mut term = BigInt::one() << w;
    let mut sum = term.clone();
    let mut n: u64 = 1;
    loop {
        term = ((&term * &x2) >> w) / BigInt::from((2 * n - 1) * (2 * n));
        if term.is_zero() {
            break;
        }
        if n % 2 == 1 {
            sum -= &term;
        } else {
            sum += &term;
        }
        n += 1;
    }
    sum
}

/// `cos(2*pi*k/60) * 2^bits` for `k = 0..16`, each within 2 units of the
/// true value.
pub(crate) fn cos_table(bits: u64) -> Vec<BigInt> {
    let w = bits + GUARD_BITS;
    let pi = pi_fixed(w);
    (0..16u32)
        .map(|k| {
            let angle = &pi * BigInt::from(k) / BigInt::from(30);
            cos_fixed(&angle, w) >> GUARD_BITS
        })
        .collect()
}
