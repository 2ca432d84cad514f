//! Dense univariate arithmetic on coefficient vectors (low to high).
//!
//! Shared by quotient-ring elements and [`crate::UniPoly`].

use super::{Elem, Ring};
use crate::error::Error;

pub(crate) fn trim(r: &Ring, v: &mut Vec<Elem>) {
    while v.last().is_some_and(|c| r.is_zero(c)) {
        v.pop();
    }
}

pub(crate) fn add(r: &Ring, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut out: Vec<Elem> = long.to_vec();
    for (o, c) in out.iter_mut().zip(short) {
        *o = r.add(o, c);
    }
    trim(r, &mut out);
    out
}

pub(crate) fn neg(r: &Ring, a: &[Elem]) -> Vec<Elem> {
    a.iter().map(|c| r.neg(c)).collect()
}

pub(crate) fn sub(r: &Ring, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
    add(r, a, &neg(r, b))
}

pub(crate) fn scale(r: &Ring, a: &[Elem], c: &Elem) -> Vec<Elem> {
    if r.is_zero(c) {
        return Vec::new();
    }
    let mut out: Vec<Elem> = a.iter().map(|x| r.mul(x, c)).collect();
    trim(r, &mut out);
    out
}

pub(crate) fn mul(r: &Ring, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![r.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if r.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if r.is_zero(y) {
                continue;
            }
            out[i + j] = r.add(&out[i + j], &r.mul(x, y));
        }
    }
    trim(r, &mut out);
    out
}

/// Remainder modulo a monic polynomial; no inversion needed.
pub(crate) fn rem_monic(r: &Ring, a: &[Elem], m: &[Elem]) -> Vec<Elem> {
    let dm = m.len() - 1;
    let mut out = a.to_vec();
    while out.len() > dm {
        let k = out.len() - 1;
        let c = out[k].clone();
        if !r.is_zero(&c) {
            let shift = k - dm;
            for (j, mj) in m.iter().enumerate().take(dm) {
                if !r.is_zero(mj) {
                    out[shift + j] = r.sub(&out[shift + j], &r.mul(&c, mj));
                }
            }
        }
        out.pop();
    }
    trim(r, &mut out);
    out
}

/// Quotient and remainder; the leading coefficient of `b` must be invertible.
pub(crate) fn divrem(r: &Ring, a: &[Elem], b: &[Elem]) -> crate::Result<(Vec<Elem>, Vec<Elem>)> {
    let Some(lc) = b.last() else {
        return Err(Error::DivisionByZero);
    };
    let inv = r.inv(lc)?;
    let db = b.len() - 1;
    if a.len() < b.len() {
        return Ok((Vec::new(), a.to_vec()));
    }
    let mut rem = a.to_vec();
    let mut q = vec![r.zero(); a.len() - db];
    while rem.len() > db {
        let k = rem.len() - 1;
        let c = r.mul(&rem[k], &inv);
        let shift = k - db;
        if !r.is_zero(&c) {
            for (j, bj) in b.iter().enumerate().take(db) {
                if !r.is_zero(bj) {
                    rem[shift + j] = r.sub(&rem[shift + j], &r.mul(&c, bj));
                }
            }
        }
        q[shift] = c;
        rem.pop();
    }
    trim(r, &mut rem);
    trim(r, &mut q);
    Ok((q, rem))
}

pub(crate) enum InvError {
    /// Monic nontrivial common factor with the modulus.
    Factor(Vec<Elem>),
    /// Failure one level down in the tower.
    Base(Error),
}

/// Inverse of `a` modulo `m` by the extended Euclidean algorithm.
pub(crate) fn inverse_mod(r: &Ring, a: &[Elem], m: &[Elem]) -> Result<Vec<Elem>, InvError> {
    // Invariant: s_i * a = r_i (mod m).
    let (mut r0, mut r1) = (m.to_vec(), rem_monic(r, a, m));
    let (mut s0, mut s1): (Vec<Elem>, Vec<Elem>) = (Vec::new(), vec![r.one()]);
    if r1.is_empty() {
        return Err(InvError::Base(Error::DivisionByZero));
    }
    while r1.len() > 1 {
        let (q, rem) = divrem(r, &r0, &r1).map_err(InvError::Base)?;
        let s2 = sub(r, &s0, &mul(r, &q, &s1));
        r0 = std::mem::replace(&mut r1, rem);
        s0 = std::mem::replace(&mut s1, s2);
        if r1.is_empty() {
            // r0 is the gcd and has positive degree.
            let inv = r.inv(r0.last().unwrap()).map_err(InvError::Base)?;
            return Err(InvError::Factor(scale(r, &r0, &inv)));
        }
    }
    let c = r.inv(&r1[0]).map_err(InvError::Base)?;
    Ok(rem_monic(r, &scale(r, &s1, &c), m))
}

/// Evaluate at a point of the same ring by Horner's rule.
pub(crate) fn eval(r: &Ring, a: &[Elem], x: &Elem) -> Elem {
    let mut acc = r.zero();
    for c in a.iter().rev() {
        acc = r.add(&r.mul(&acc, x), c);
    }
    acc
}

/// Descending print in the variable `name`.
pub(crate) fn format(r: &Ring, a: &[Elem], name: &str) -> String {
    let terms: Vec<(String, String)> = a
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, c)| !r.is_zero(c))
        .map(|(k, c)| {
            let mono = match k {
                0 => String::new(),
                1 => name.to_string(),
                _ => format!("{name}^{k}"),
            };
            (r.format(c), mono)
        })
        .collect();
    super::print::join_terms(&terms)
}
