//! Sparse multivariate polynomials in graded-lex order.

use std::cmp::Ordering;
use std::cmp::Reverse;
use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};

use super::{Elem, Ring};
use crate::error::{Error, Result};

/// Sparse polynomial: terms sorted by descending graded-lex exponent, no zero coefficients.
///
/// Exponent vectors all have the arity of the ambient ring; the zero polynomial has no terms.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct MPoly {
    pub(crate) terms: Vec<(Vec<u32>, Elem)>,
}

/// Exponent vector ordered by [`grlex`].
#[derive(PartialEq, Eq)]
struct Grlex(Vec<u32>);

impl Ord for Grlex {
    fn cmp(&self, o: &Self) -> Ordering {
        grlex(&self.0, &o.0)
    }
}

impl PartialOrd for Grlex {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

pub(crate) fn grlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    da.cmp(&db).then_with(|| a.cmp(b))
}

impl MPoly {
    pub fn zero() -> MPoly {
        MPoly { terms: Vec::new() }
    }

    /// Constant `c` (assumed nonzero) in `k` variables.
    pub(crate) fn constant(c: Elem, k: usize) -> MPoly {
        MPoly { terms: vec![(vec![0; k], c)] }
    }

    pub(crate) fn constant_in(base: &Ring, c: Elem, k: usize) -> MPoly {
        if base.is_zero(&c) {
            MPoly::zero()
        } else {
            MPoly::constant(c, k)
        }
    }

    pub(crate) fn var(one: Elem, k: usize, i: usize) -> MPoly {
        let mut e = vec![0; k];
        e[i] = 1;
        MPoly { terms: vec![(e, one)] }
    }

    /// Collect arbitrary terms into canonical form.
    pub(crate) fn from_terms(terms: Vec<(Vec<u32>, Elem)>, base: &Ring) -> MPoly {
        let mut acc: HashMap<Vec<u32>, Elem> = HashMap::with_capacity(terms.len());
        for (e, c) in terms {
            match acc.get_mut(&e) {
                Some(x) => *x = base.add(x, &c),
                None => {
                    acc.insert(e, c);
                }
            }
        }
        let mut terms: Vec<(Vec<u32>, Elem)> = acc.into_iter().filter(|(_, c)| !base.is_zero(c)).collect();
        terms.sort_by(|x, y| grlex(&y.0, &x.0));
        MPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Zero or a nonzero constant.
    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.iter().all(|&e| e == 0))
    }

    pub fn terms(&self) -> &[(Vec<u32>, Elem)] {
        &self.terms
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.first().map(|(e, _)| e.iter().map(|&x| x as u64).sum())
    }

    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.iter().map(|(e, _)| e[var]).max()
    }

    pub(crate) fn add(&self, o: &MPoly, base: &Ring) -> MPoly {
        let (a, b) = (&self.terms, &o.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match grlex(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(b[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = base.add(&a[i].1, &b[j].1);
                    if !base.is_zero(&c) {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        MPoly { terms: out }
    }

    pub(crate) fn neg(&self, base: &Ring) -> MPoly {
        MPoly { terms: self.terms.iter().map(|(e, c)| (e.clone(), base.neg(c))).collect() }
    }

    pub(crate) fn sub(&self, o: &MPoly, base: &Ring) -> MPoly {
        self.add(&o.neg(base), base)
    }

    pub(crate) fn scale(&self, c: &Elem, base: &Ring) -> MPoly {
        let terms = self
            .terms
            .iter()
            .map(|(e, x)| (e.clone(), base.mul(x, c)))
            .filter(|(_, x)| !base.is_zero(x))
            .collect();
        MPoly { terms }
    }

    /// Multiply by the monomial `c * x^e`.
    fn mul_term(&self, e: &[u32], c: &Elem, base: &Ring) -> MPoly {
        let terms = self
            .terms
            .iter()
            .map(|(x, y)| (x.iter().zip(e).map(|(a, b)| a + b).collect(), base.mul(y, c)))
            .filter(|(_, y)| !base.is_zero(y))
            .collect();
        MPoly { terms }
    }

    pub(crate) fn mul(&self, o: &MPoly, base: &Ring) -> MPoly {
        if self.is_zero() || o.is_zero() {
            return MPoly::zero();
        }
        if o.terms.len() == 1 {
            return self.mul_term(&o.terms[0].0, &o.terms[0].1, base);
        }
        if self.terms.len() == 1 {
            return o.mul_term(&self.terms[0].0, &self.terms[0].1, base);
        }
        let mut acc: HashMap<Vec<u32>, Elem> = HashMap::with_capacity(self.terms.len() * o.terms.len());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &o.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                let p = base.mul(ca, cb);
                match acc.get_mut(&e) {
                    Some(x) => *x = base.add(x, &p),
                    None => {
                        acc.insert(e, p);
                    }
                }
            }
        }
        let mut terms: Vec<(Vec<u32>, Elem)> = acc.into_iter().filter(|(_, c)| !base.is_zero(c)).collect();
        terms.sort_by(|x, y| grlex(&y.0, &x.0));
        MPoly { terms }
    }

    /// Exact quotient, or `None` if `o` does not divide `self`.
    pub(crate) fn div_exact(&self, o: &MPoly, base: &Ring) -> Option<MPoly> {
        if o.is_zero() {
            return None;
        }
        let (be, bc) = &o.terms[0];
        if o.terms.len() == 1 && base.is_one(bc) && be.iter().all(|&e| e == 0) {
            return Some(self.clone());
        }
        // Remainder keyed by reversed grlex order so the leading term is the first entry.
        let mut r: BTreeMap<Reverse<Grlex>, Elem> =
            self.terms.iter().map(|(e, c)| (Reverse(Grlex(e.clone())), c.clone())).collect();
        let mut q = Vec::new();
        while let Some((Reverse(Grlex(re)), rc)) = r.pop_first() {
            if re.iter().zip(be).any(|(a, b)| a < b) {
                return None;
            }
            let e: Vec<u32> = re.iter().zip(be).map(|(a, b)| a - b).collect();
            let c = base.div(&rc, bc).ok()?;
            // Leading terms must cancel exactly, otherwise coefficient division was inexact.
            if base.mul(&c, bc) != rc {
                return None;
            }
            for (oe, oc) in &o.terms[1..] {
                let key: Vec<u32> = oe.iter().zip(&e).map(|(a, b)| a + b).collect();
                let t = base.mul(oc, &c);
                match r.entry(Reverse(Grlex(key))) {
                    Entry::Occupied(mut x) => {
                        let v = base.sub(x.get(), &t);
                        if base.is_zero(&v) {
                            x.remove();
                        } else {
                            *x.get_mut() = v;
                        }
                    }
                    Entry::Vacant(x) => {
                        x.insert(base.neg(&t));
                    }
                }
            }
            q.push((e, c));
        }
        Some(MPoly { terms: q })
    }

    /// Coefficients with respect to variable `var`, indexed by its degree.
    fn coeffs_in(&self, var: usize) -> Vec<MPoly> {
        let d = self.degree_in(var).unwrap_or(0) as usize;
        let mut out = vec![MPoly::zero(); d + 1];
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            e2[var] = 0;
            out[e[var] as usize].terms.push((e2, c.clone()));
        }
        for p in &mut out {
            p.terms.sort_by(|x, y| grlex(&y.0, &x.0));
        }
        out
    }

    fn from_coeffs_in(cs: &[MPoly], var: usize) -> MPoly {
        let mut terms = Vec::new();
        for (k, p) in cs.iter().enumerate() {
            for (e, c) in &p.terms {
                let mut e2 = e.clone();
                e2[var] = k as u32;
                terms.push((e2, c.clone()));
            }
        }
        terms.sort_by(|x, y| grlex(&y.0, &x.0));
        MPoly { terms }
    }

    /// Scale so that the leading coefficient is 1.
    fn monic(&self, base: &Ring) -> Result<MPoly> {
        match self.terms.first() {
            None => Ok(MPoly::zero()),
            Some((_, c)) if base.is_one(c) => Ok(self.clone()),
            Some((_, c)) => Ok(self.scale(&base.inv(c)?, base)),
        }
    }

    /// Monic greatest common divisor over a field `base`, in `k` variables.
    pub(crate) fn gcd(a: &MPoly, b: &MPoly, base: &Ring, k: usize) -> Result<MPoly> {
        if !base.is_field() {
            return Err(Error::Invalid(format!("gcd needs a field of coefficients, got {base}")));
        }
        if a.is_zero() {
            return b.monic(base);
        }
        if b.is_zero() {
            return a.monic(base);
        }
        let g = gcd_rec(a, b, 0, k, base)?;
        g.monic(base)
    }
}

fn gcd_rec(a: &MPoly, b: &MPoly, var: usize, k: usize, base: &Ring) -> Result<MPoly> {
    if a.is_zero() {
        return b.monic(base);
    }
    if b.is_zero() {
        return a.monic(base);
    }
    if a.is_constant() || b.is_constant() || var == k {
        return Ok(MPoly::constant(base.one(), k));
    }
    let (da, db) = (a.degree_in(var).unwrap(), b.degree_in(var).unwrap());
    if da == 0 && db == 0 {
        return gcd_rec(a, b, var + 1, k, base);
    }
    let ca = content(a, var, k, base)?;
    let cb = content(b, var, k, base)?;
    let c = gcd_rec(&ca, &cb, var + 1, k, base)?;
    if da == 0 || db == 0 {
        return Ok(c);
    }
    let mut p = primitive(a, &ca, base)?;
    let mut q = primitive(b, &cb, base)?;
    if p.degree_in(var) < q.degree_in(var) {
        std::mem::swap(&mut p, &mut q);
    }
    while !q.is_zero() {
        let r = prem(&p, &q, var, base);
        if r.is_zero() {
            p = q;
            break;
        }
        if r.degree_in(var) == Some(0) {
            // Remainder free of `var`: the primitive parts are coprime.
            return Ok(c);
        }
        let cr = content(&r, var, k, base)?;
        p = std::mem::replace(&mut q, primitive(&r, &cr, base)?);
    }
    let cp = content(&p, var, k, base)?;
    let g = primitive(&p, &cp, base)?;
    Ok(c.mul(&g, base))
}

/// Monic gcd of the coefficients of `a` with respect to `var`.
fn content(a: &MPoly, var: usize, k: usize, base: &Ring) -> Result<MPoly> {
    let mut g = MPoly::zero();
    for c in a.coeffs_in(var) {
        if c.is_zero() {
            continue;
        }
        g = if g.is_zero() { c.monic(base)? } else { gcd_rec(&g, &c, var + 1, k, base)? };
        if g.is_constant() {
            break;
        }
    }
    Ok(g)
}

fn primitive(a: &MPoly, content: &MPoly, base: &Ring) -> Result<MPoly> {
    let p = a
        .div_exact(content, base)
        .ok_or_else(|| Error::Internal("content does not divide polynomial".into()))?;
    p.monic(base)
}

/// Pseudo-remainder of `a` by `b` with respect to `var`.
fn prem(a: &MPoly, b: &MPoly, var: usize, base: &Ring) -> MPoly {
    let bc = b.coeffs_in(var);
    let db = bc.len() - 1;
    let lb = bc[db].clone();
    let mut r = a.clone();
    loop {
        let dr = match r.degree_in(var) {
            Some(d) if !r.is_zero() && d as usize >= db => d as usize,
            _ => break,
        };
        let rc = r.coeffs_in(var);
        let lr = rc[dr].clone();
        let mut shift = vec![MPoly::zero(); dr - db + 1];
        shift[dr - db] = lr;
        let t = MPoly::from_coeffs_in(&shift, var).mul(b, base);
        r = r.mul(&lb, base).sub(&t, base);
    }
    r
}
