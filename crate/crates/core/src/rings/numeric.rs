//! Integer helpers: exact roots, primality and small factorizations.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// `x + y`, skipping the gcd when both are integers.
pub(crate) fn rat_add(x: &BigRational, y: &BigRational) -> BigRational {
    if x.denom().is_one() && y.denom().is_one() {
        BigRational::new_raw(x.numer() + y.numer(), BigInt::one())
    } else {
        x + y
    }
}

/// `x * y`, skipping the gcd when both are integers.
pub(crate) fn rat_mul(x: &BigRational, y: &BigRational) -> BigRational {
    if x.denom().is_one() && y.denom().is_one() {
        BigRational::new_raw(x.numer() * y.numer(), BigInt::one())
    } else {
        x * y
    }
}

/// Exact `k`-th root of an integer, if one exists.
///
/// Negative inputs have a root only for odd `k`.
pub fn integer_root(n: &BigInt, k: u32) -> Option<BigInt> {
    if k == 0 {
        return None;
    }
    if k == 1 || n.is_zero() || n.is_one() {
        return Some(n.clone());
    }
    if n.is_negative() {
        if k.is_multiple_of(2) {
            return None;
        }
        return integer_root(&-n, k).map(|r| -r);
    }
    let r = n.nth_root(k);
    if num_traits::pow(r.clone(), k as usize) == *n {
        Some(r)
    } else {
        None
    }
}

/// Exact `k`-th root of a rational number, if one exists in Q.
pub fn rational_root(q: &BigRational, k: u32) -> Option<BigRational> {
    let num = integer_root(q.numer(), k)?;
    let den = integer_root(q.denom(), k)?;
    Some(BigRational::new(num, den))
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime factors of `n` (without multiplicity), by trial division.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn gcd_u64(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

pub(crate) fn mod_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, p);
        }
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    acc
}

pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

/// Reduce a big integer into `[0, p)`.
pub(crate) fn reduce_bigint(n: &BigInt, p: u64) -> u64 {
    let m = BigInt::from(p);
    let r = n.mod_floor(&m);
    let (sign, digits) = r.to_u64_digits();
    match sign {
        Sign::NoSign => 0,
        _ => digits.first().copied().unwrap_or(0),
    }
}

/// All positive divisors of a (small, nonzero) big integer.
pub(crate) fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.abs();
    if n.is_zero() || n.bits() > 62 {
        return None;
    }
    let v: u64 = n.try_into().ok()?;
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= v {
        if v.is_multiple_of(d) {
            out.push(BigInt::from(d));
            if d * d != v {
                out.push(BigInt::from(v / d));
            }
        }
        d += 1;
    }
    out.sort();
    Some(out)
}
