//! Univariate polynomials over any [`Ring`].

mod mobius;
mod resultant;

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rings::{dense, divisors, Elem, FieldValue, Ring, RingKind};

pub use mobius::{Mobius, Point};
pub use resultant::{discriminant, resultant, resultant_euclid, resultant_formal};

/// Products and compositions beyond this degree fail fast.
pub const DEFAULT_MAX_DEGREE: usize = 4096;

/// Dense polynomial, coefficients low to high with a nonzero leading coefficient.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UniPoly {
    ring: Ring,
    coeffs: Vec<Elem>,
}

impl UniPoly {
    pub fn new(ring: &Ring, mut coeffs: Vec<Elem>) -> UniPoly {
        dense::trim(ring, &mut coeffs);
        UniPoly { ring: ring.clone(), coeffs }
    }

    pub fn zero(ring: &Ring) -> UniPoly {
        UniPoly { ring: ring.clone(), coeffs: Vec::new() }
    }

    pub fn constant(ring: &Ring, c: Elem) -> UniPoly {
        UniPoly::new(ring, vec![c])
    }

    pub fn one(ring: &Ring) -> UniPoly {
        UniPoly::constant(ring, ring.one())
    }

    /// `c * x^k`.
    pub fn monomial(ring: &Ring, c: Elem, k: usize) -> UniPoly {
        let mut v = vec![ring.zero(); k + 1];
        v[k] = c;
        UniPoly::new(ring, v)
    }

    pub fn x(ring: &Ring) -> UniPoly {
        UniPoly::monomial(ring, ring.one(), 1)
    }

    /// Integer coefficients, low to high.
    pub fn from_ints(ring: &Ring, cs: &[i64]) -> UniPoly {
        UniPoly::new(ring, cs.iter().map(|&c| ring.from_i64(c)).collect())
    }

    /// Parse a polynomial in `x` over `ring`.
    pub fn parse(src: &str, ring: &Ring) -> Result<UniPoly> {
        crate::expr::parse_poly(src, ring, "x")
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero past the degree).
    pub fn coeff(&self, k: usize) -> Elem {
        self.coeffs.get(k).cloned().unwrap_or_else(|| self.ring.zero())
    }

    pub fn coeff_value(&self, k: usize) -> FieldValue {
        FieldValue::new(&self.ring, self.coeff(k))
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn lc(&self) -> Option<&Elem> {
        self.coeffs.last()
    }

    /// Lowest power of `x` with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !self.ring.is_zero(c))
    }

    fn same(&self, o: &UniPoly) -> Result<()> {
        if self.ring == o.ring {
            Ok(())
        } else {
            Err(Error::DomainMismatch(format!("{} vs {}", self.ring, o.ring)))
        }
    }

    pub fn add(&self, o: &UniPoly) -> Result<UniPoly> {
        self.same(o)?;
        Ok(UniPoly { ring: self.ring.clone(), coeffs: dense::add(&self.ring, &self.coeffs, &o.coeffs) })
    }

    pub fn sub(&self, o: &UniPoly) -> Result<UniPoly> {
        self.same(o)?;
        Ok(UniPoly { ring: self.ring.clone(), coeffs: dense::sub(&self.ring, &self.coeffs, &o.coeffs) })
    }

    pub fn neg(&self) -> UniPoly {
        UniPoly { ring: self.ring.clone(), coeffs: dense::neg(&self.ring, &self.coeffs) }
    }

    pub fn scale(&self, c: &Elem) -> UniPoly {
        UniPoly { ring: self.ring.clone(), coeffs: dense::scale(&self.ring, &self.coeffs, c) }
    }

    pub fn mul(&self, o: &UniPoly) -> Result<UniPoly> {
        self.mul_with_cap(o, DEFAULT_MAX_DEGREE)
    }

    pub fn mul_with_cap(&self, o: &UniPoly, cap: usize) -> Result<UniPoly> {
        self.same(o)?;
        if let (Some(a), Some(b)) = (self.degree(), o.degree()) {
            if a + b > cap {
                return Err(Error::DegreeCap { degree: a + b, cap });
            }
        }
        Ok(UniPoly { ring: self.ring.clone(), coeffs: dense::mul(&self.ring, &self.coeffs, &o.coeffs) })
    }

    pub fn pow(&self, e: u32) -> Result<UniPoly> {
        self.pow_with_cap(e, DEFAULT_MAX_DEGREE)
    }

    pub fn pow_with_cap(&self, e: u32, cap: usize) -> Result<UniPoly> {
        if let Some(d) = self.degree() {
            if d * e as usize > cap {
                return Err(Error::DegreeCap { degree: d * e as usize, cap });
            }
        }
        let mut acc = UniPoly::one(&self.ring);
        for _ in 0..e {
            acc = acc.mul_with_cap(self, cap)?;
        }
        Ok(acc)
    }

    /// `f = q*g + r` with `deg r < deg g`; needs an invertible leading coefficient of `g`.
    pub fn divrem(&self, g: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        self.same(g)?;
        if g.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (q, r) = dense::divrem(&self.ring, &self.coeffs, &g.coeffs)?;
        Ok((UniPoly { ring: self.ring.clone(), coeffs: q }, UniPoly { ring: self.ring.clone(), coeffs: r }))
    }

    pub fn rem(&self, g: &UniPoly) -> Result<UniPoly> {
        Ok(self.divrem(g)?.1)
    }

    /// Quotient when `g` divides `self` exactly.
    pub fn div_exact(&self, g: &UniPoly) -> Result<UniPoly> {
        let (q, r) = self.divrem(g)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::InexactDivision("polynomial".into()))
        }
    }

    /// `self(g(x))` by Horner's rule.
    pub fn compose(&self, g: &UniPoly) -> Result<UniPoly> {
        self.compose_with_cap(g, DEFAULT_MAX_DEGREE)
    }

    pub fn compose_with_cap(&self, g: &UniPoly, cap: usize) -> Result<UniPoly> {
        self.same(g)?;
        if let (Some(a), Some(b)) = (self.degree(), g.degree()) {
            if a * b > cap {
                return Err(Error::DegreeCap { degree: a * b, cap });
            }
        }
        let mut acc = UniPoly::zero(&self.ring);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_with_cap(g, cap)?.add(&UniPoly::constant(&self.ring, c.clone()))?;
        }
        Ok(acc)
    }

    /// Substitute `x -> x^k`.
    pub fn inflate(&self, k: usize) -> UniPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut v = vec![self.ring.zero(); (self.coeffs.len() - 1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[i * k] = c.clone();
        }
        UniPoly::new(&self.ring, v)
    }

    pub fn eval(&self, x: &Elem) -> Elem {
        dense::eval(&self.ring, &self.coeffs, x)
    }

    pub fn derivative(&self) -> UniPoly {
        let r = &self.ring;
        let v = self.coeffs.iter().enumerate().skip(1).map(|(i, c)| r.mul(c, &r.from_i64(i as i64))).collect();
        UniPoly::new(r, v)
    }

    /// Divide by the leading coefficient.
    pub fn monic(&self) -> Result<UniPoly> {
        match self.lc() {
            None => Ok(self.clone()),
            Some(c) if self.ring.is_one(c) => Ok(self.clone()),
            Some(c) => Ok(self.scale(&self.ring.inv(c)?)),
        }
    }

    /// Reverse the coefficient list of the formal degree `n` polynomial: `x^n f(1/x)`.
    pub fn reversed(&self, n: usize) -> UniPoly {
        let mut v = vec![self.ring.zero(); n + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[n - i] = c.clone();
        }
        UniPoly::new(&self.ring, v)
    }

    /// Coerce the coefficients into a larger ring.
    pub fn embed(&self, into: &Ring) -> Result<UniPoly> {
        if *into == self.ring {
            return Ok(self.clone());
        }
        let v = self.coeffs.iter().map(|c| into.embed(&self.ring, c)).collect::<Result<_>>()?;
        Ok(UniPoly::new(into, v))
    }

    pub fn map_coeffs(&self, into: &Ring, f: impl Fn(&Elem) -> Result<Elem>) -> Result<UniPoly> {
        let v = self.coeffs.iter().map(f).collect::<Result<_>>()?;
        Ok(UniPoly::new(into, v))
    }

    /// Monic gcd. Polynomial-ring coefficients are lifted to the fraction field.
    pub fn gcd(&self, o: &UniPoly) -> Result<UniPoly> {
        self.same(o)?;
        let field = self.ring.fraction_field()?;
        let (mut a, mut b) = (self.embed(&field)?, o.embed(&field)?);
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = std::mem::replace(&mut b, r);
        }
        a.monic()
    }

    /// True iff `gcd(f, f')` is constant.
    ///
    /// Parametric coefficient rings use the discriminant, which vanishes exactly
    /// when the gcd is nonconstant; other rings run the Euclidean algorithm.
    pub fn is_squarefree(&self) -> Result<bool> {
        match self.degree() {
            None => Ok(false),
            Some(0) | Some(1) => Ok(true),
            Some(_) => {
                if matches!(self.ring.kind(), RingKind::Poly { .. } | RingKind::Frac { .. }) {
                    Ok(!discriminant(self)?.is_zero())
                } else {
                    Ok(self.gcd(&self.derivative())?.is_constant())
                }
            }
        }
    }

    /// The constant `c` with `self = c * g`, if any. Two zero polynomials give 1.
    pub fn proportional(&self, g: &UniPoly) -> Option<FieldValue> {
        if self.ring != g.ring || self.coeffs.len() != g.coeffs.len() {
            return None;
        }
        let r = &self.ring;
        let Some(lg) = g.lc() else {
            return Some(FieldValue::new(r, r.one()));
        };
        let c = r.div(self.lc().unwrap(), lg).ok()?;
        if self.coeffs.iter().zip(&g.coeffs).all(|(a, b)| *a == r.mul(&c, b)) {
            Some(FieldValue::new(r, c))
        } else {
            None
        }
    }

    /// Rational roots of a polynomial over Q, sorted, without multiplicity.
    ///
    /// `None` when the coefficients are not rational or the candidate search is too large.
    pub fn rational_roots(&self) -> Option<Vec<BigRational>> {
        let qs: Vec<BigRational> = self.coeffs.iter().map(|c| self.ring.as_rational(c)).collect::<Option<_>>()?;
        rational_roots_of(&qs)
    }
}

/// Candidates `p/q` with `p | a_0`, `q | a_n`, after clearing denominators.
pub(crate) fn rational_roots_of(qs: &[BigRational]) -> Option<Vec<BigRational>> {
    let mut qs = qs.to_vec();
    while qs.last().is_some_and(|c| c.is_zero()) {
        qs.pop();
    }
    if qs.is_empty() {
        return None;
    }
    let mut out = Vec::new();
    let v = qs.iter().position(|c| !c.is_zero()).unwrap();
    if v > 0 {
        out.push(BigRational::zero());
        qs.drain(..v);
    }
    if qs.len() == 1 {
        return Some(out);
    }
    let den = qs.iter().fold(BigInt::one(), |acc, c| num_integer::lcm(acc, c.denom().clone()));
    let ints: Vec<BigInt> = qs.iter().map(|c| (c * BigRational::from_integer(den.clone())).to_integer()).collect();
    let ps = divisors(&ints[0])?;
    let ls = divisors(ints.last().unwrap())?;
    if ps.len() * ls.len() > 1_000_000 {
        return None;
    }
    for p in &ps {
        for l in &ls {
            for sign in [1, -1] {
                let cand = BigRational::new(p * BigInt::from(sign), l.clone());
                let val = ints
                    .iter()
                    .rev()
                    .fold(BigRational::zero(), |acc, c| acc * &cand + BigRational::from_integer(c.clone()));
                if val.is_zero() && !out.contains(&cand) {
                    out.push(cand);
                }
            }
        }
    }
    out.sort();
    Some(out)
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&dense::format(&self.ring, &self.coeffs, "x"))
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} over {}", self, self.ring)
    }
}

#[cfg(test)]
mod tests;
