//! Small helpers for cyclotomic and finite-field towers.

use crate::error::{Error, Result};
use crate::rings::{prime_factors, Elem, Ring};
use crate::unipoly::UniPoly;

/// The cyclotomic polynomial `Φ_n` over Q.
pub fn cyclotomic(n: usize) -> Result<UniPoly> {
    if n == 0 {
        return Err(Error::Invalid("Φ_0 is undefined".into()));
    }
    let q = Ring::rationals();
    let mut f = UniPoly::monomial(&q, q.one(), n).sub(&UniPoly::one(&q))?;
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        f = f.div_exact(&cyclotomic(d)?)?;
    }
    Ok(f)
}

/// Smallest monic irreducible polynomial of degree `t <= 3` over `F_p`, as residues low to high.
///
/// In degrees 2 and 3 irreducibility is the absence of roots.
pub fn irreducible_poly(p: u64, t: u32) -> Result<Vec<u64>> {
    if !(1..=3).contains(&t) {
        return Err(Error::Invalid(format!("extension degree {t} not supported (1 <= t <= 3)")));
    }
    if t == 1 {
        return Ok(vec![0, 1]);
    }
    if p.saturating_pow(t) > 10_000_000 {
        return Err(Error::Invalid(format!("F_{p}^{t} is too large for the root search")));
    }
    let t = t as usize;
    let total = p.pow(t as u32);
    for code in 0..total {
        let mut c = Vec::with_capacity(t + 1);
        let mut k = code;
        for _ in 0..t {
            c.push(k % p);
            k /= p;
        }
        c.push(1);
        if c[0] == 0 {
            continue;
        }
        let has_root = (0..p).any(|x| {
            c.iter().rev().fold(0u64, |acc, &ci| ((acc as u128 * x as u128 + ci as u128) % p as u128) as u64) == 0
        });
        if !has_root {
            return Ok(c);
        }
    }
    Err(Error::Internal(format!("no irreducible polynomial of degree {t} over F_{p}")))
}

/// An element of multiplicative order `q - 1` in a finite field of `q` elements.
pub fn primitive_element(field: &Ring, q: u64) -> Result<Elem> {
    let p = field.characteristic();
    if p == 0 {
        return Err(Error::Invalid("not a finite field".into()));
    }
    let primes = prime_factors(q - 1);
    let one = field.one();
    let gen = field.generator().ok();
    for code in 1..q {
        // Base-p digits of `code` are the coordinates in the power basis.
        let mut e = field.zero();
        let mut k = code;
        let mut basis = field.one();
        while k > 0 {
            let c = field.from_i64((k % p) as i64);
            e = field.add(&e, &field.mul(&c, &basis));
            k /= p;
            basis = match &gen {
                Some(g) => field.mul(&basis, g),
                None => basis,
            };
        }
        if field.is_zero(&e) {
            continue;
        }
        if primes.iter().all(|l| field.pow(&e, (q - 1) / l) != one) {
            return Ok(e);
        }
    }
    Err(Error::Internal(format!("no primitive element found in F_{q}")))
}

/// Print residues low to high as a polynomial in `t`.
pub(crate) fn format_in_t(p: u64, c: &[u64]) -> Result<String> {
    let f = Ring::prime_field(p)?;
    let coeffs: Vec<Elem> = c.iter().map(|&k| f.from_i64(k as i64)).collect();
    Ok(rename_x(&UniPoly::new(&f, coeffs).to_string()))
}

/// `x` is the only variable name polynomials print with.
pub(crate) fn rename_x(s: &str) -> String {
    s.replace('x', "t")
}
