//! Cosine and sine of rational multiples of pi, as dyadic rationals within
//! `2^-p` of the true value. Pure integer arithmetic.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::geometry::Rational;

const GUARD: u64 = 32;

fn atan_inv(x: u64, bits: u64) -> BigInt {
    // atan(1/x) * 2^bits
    let one = BigInt::one() << bits;
    let x = BigInt::from(x);
    let x2 = &x * &x;
    let mut power = one / &x;
    let mut sum = BigInt::zero();
    let mut k = 0u64;
    while !power.is_zero() {
        let term = &power / BigInt::from(2 * k + 1);
        if k.is_multiple_of(2) {
            sum += term;
        } else {
            sum -= term;
        }
        power /= &x2;
        k += 1;
    }
    sum
}

/// pi * 2^bits
fn pi_fixed(bits: u64) -> BigInt {
    16 * atan_inv(5, bits) - 4 * atan_inv(239, bits)
}

/// (cos x, sin x) * 2^bits for x given as x * 2^bits, |x| small.
fn cos_sin_fixed(x: &BigInt, bits: u64) -> (BigInt, BigInt) {
    let one = BigInt::one() << bits;
    let mut cos = BigInt::zero();
    let mut sin = BigInt::zero();
    let mut term = one;
    let mut k = 0u64;
    while !term.is_zero() {
        match k % 4 {
            0 => cos += &term,
            1 => sin += &term,
            2 => cos -= &term,
            _ => sin -= &term,
        }
        k += 1;
        term = ((term * x) >> bits) / BigInt::from(k);
    }
    (cos, sin)
}

/// `(cos(pi q), sin(pi q))`, each within `2^-p`, with denominator `2^p`.
pub(crate) fn unit(q: &Rational, p: u64) -> (Rational, Rational) {
    let bits = p + GUARD;
    // reduce q into [-1, 1) so the series argument stays below pi
    let two = Rational::from_integer(BigInt::from(2));
    let shifted = q + Rational::one();
    let reduced = &shifted - (&shifted / &two).floor() * &two - Rational::one();
    let theta = (pi_fixed(bits) * reduced.numer()) / reduced.denom();
    let (c, s) = cos_sin_fixed(&theta, bits);
    let scale = BigInt::one() << p;
    let round = |v: BigInt| Rational::new(v >> GUARD, scale.clone());
    (round(c), round(s))
}
