//! Exact coefficient domains.
//!
//! A [`Ring`] is a cheap, shareable descriptor; an [`Elem`] is a bare
//! element whose meaning depends on the descriptor it is used with. The
//! checked wrapper [`FieldValue`] pairs the two.

pub(crate) mod dense;
mod multipoly;
mod numeric;
mod print;
mod value;

use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub use multipoly::MPoly;
pub use numeric::{gcd_u64, integer_root, is_prime, prime_factors, rational_root};
pub(crate) use numeric::{divisors, mod_pow, mul_mod, reduce_bigint};
pub use value::FieldValue;

/// Shared descriptor of a coefficient domain.
#[derive(Clone)]
pub struct Ring(Arc<RingKind>);

#[derive(Debug, PartialEq, Eq, Hash)]
pub enum RingKind {
    Rationals,
    PrimeField(u64),
    /// Polynomials in named parameters.
    Poly { base: Ring, vars: Vec<String> },
    /// Fractions of a polynomial ring over a field.
    Frac { poly: Ring },
    /// `base[name]/(modulus)`, modulus monic, coefficients low to high.
    Quotient { base: Ring, name: String, modulus: Vec<Elem> },
}

/// Element of some [`Ring`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Elem {
    Rat(BigRational),
    Mod(u64),
    Poly(MPoly),
    /// Reduced numerator and denominator; the denominator's leading coefficient is 1.
    Frac(Box<(MPoly, MPoly)>),
    /// Residue coordinates, low to high, trimmed, of degree below the modulus.
    Ext(Vec<Elem>),
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || *self.0 == *other.0
    }
}

impl Eq for Ring {}

impl Hash for Ring {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.hash(state)
    }
}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ring({})", self.describe())
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.describe())
    }
}

fn valid_ident(name: &str) -> bool {
    if name.starts_with("sqrt(") && name.ends_with(')') {
        return true;
    }
    !name.is_empty() && !name.contains(|c: char| c.is_whitespace() || "+-*/^,".contains(c))
}

impl Ring {
    pub fn rationals() -> Ring {
        Ring(Arc::new(RingKind::Rationals))
    }

    pub fn prime_field(p: u64) -> Result<Ring> {
        if !is_prime(p) || p >= 1 << 31 {
            return Err(Error::InvalidModulus(format!("{p} is not a prime below 2^31")));
        }
        Ok(Ring(Arc::new(RingKind::PrimeField(p))))
    }

    /// Polynomial ring over `base` in the given parameter names.
    pub fn polynomials(base: &Ring, vars: &[&str]) -> Result<Ring> {
        if vars.is_empty() {
            return Err(Error::Invalid("a polynomial ring needs at least one parameter".into()));
        }
        for (i, v) in vars.iter().enumerate() {
            if !valid_ident(v) {
                return Err(Error::Invalid(format!("bad parameter name {v:?}")));
            }
            if vars[..i].contains(v) {
                return Err(Error::Invalid(format!("duplicate parameter {v}")));
            }
        }
        Ok(Ring(Arc::new(RingKind::Poly {
            base: base.clone(),
            vars: vars.iter().map(|s| s.to_string()).collect(),
        })))
    }

    /// Rational functions over the field `base` in the given parameters.
    pub fn rational_functions(base: &Ring, vars: &[&str]) -> Result<Ring> {
        Ring::polynomials(base, vars)?.fraction_field()
    }

    /// Adjoin a root of a monic polynomial of degree at least 2 (coefficients low to high).
    pub fn adjoin(base: &Ring, name: &str, modulus: Vec<Elem>) -> Result<Ring> {
        if !valid_ident(name) {
            return Err(Error::Invalid(format!("bad generator name {name:?}")));
        }
        let mut m = modulus;
        dense::trim(base, &mut m);
        if m.len() < 3 {
            return Err(Error::InvalidModulus("degree must be at least 2".into()));
        }
        if !base.is_one(m.last().unwrap()) {
            return Err(Error::InvalidModulus("minimal polynomial must be monic".into()));
        }
        Ok(Ring(Arc::new(RingKind::Quotient { base: base.clone(), name: name.to_string(), modulus: m })))
    }

    pub fn kind(&self) -> &RingKind {
        &self.0
    }

    /// Ring directly below this one in the tower, if any.
    pub fn base(&self) -> Option<&Ring> {
        match &*self.0 {
            RingKind::Rationals | RingKind::PrimeField(_) => None,
            RingKind::Poly { base, .. } | RingKind::Quotient { base, .. } => Some(base),
            RingKind::Frac { poly } => Some(poly),
        }
    }

    /// Prime or rational field at the bottom of the tower.
    pub fn prime_subfield(&self) -> Ring {
        match self.base() {
            Some(b) => b.prime_subfield(),
            None => self.clone(),
        }
    }

    pub fn characteristic(&self) -> u64 {
        match &*self.0 {
            RingKind::Rationals => 0,
            RingKind::PrimeField(p) => *p,
            _ => self.base().unwrap().characteristic(),
        }
    }

    /// True when nonzero elements are expected to be invertible.
    ///
    /// Quotient steps over a field count as fields; a reducible modulus
    /// surfaces as a zero-divisor error on inversion.
    pub fn is_field(&self) -> bool {
        match &*self.0 {
            RingKind::Rationals | RingKind::PrimeField(_) | RingKind::Frac { .. } => true,
            RingKind::Poly { .. } => false,
            RingKind::Quotient { base, .. } => base.is_field(),
        }
    }

    /// Parameter names of a polynomial or rational-function ring.
    pub fn vars(&self) -> &[String] {
        match &*self.0 {
            RingKind::Poly { vars, .. } => vars,
            RingKind::Frac { poly } => poly.vars(),
            _ => &[],
        }
    }

    /// Field of fractions: the ring itself when it is a field.
    pub fn fraction_field(&self) -> Result<Ring> {
        match &*self.0 {
            RingKind::Poly { base, .. } => {
                if !base.is_field() {
                    return Err(Error::Invalid(format!("{} has no supported fraction field", self)));
                }
                Ok(Ring(Arc::new(RingKind::Frac { poly: self.clone() })))
            }
            _ if self.is_field() => Ok(self.clone()),
            _ => Err(Error::Invalid(format!("{} has no supported fraction field", self))),
        }
    }

    pub fn describe(&self) -> String {
        match &*self.0 {
            RingKind::Rationals => "Q".into(),
            RingKind::PrimeField(p) => format!("F_{p}"),
            RingKind::Poly { base, vars } => format!("{}[{}]", base.describe(), vars.join(",")),
            RingKind::Frac { poly } => {
                let RingKind::Poly { base, vars } = &*poly.0 else { unreachable!() };
                format!("{}({})", base.describe(), vars.join(","))
            }
            RingKind::Quotient { base, name, modulus } => {
                format!("{}[{}]/({})", base.describe(), name, dense::format(base, modulus, name))
            }
        }
    }

    // ---- constants ----

    pub fn zero(&self) -> Elem {
        match &*self.0 {
            RingKind::Rationals => Elem::Rat(BigRational::zero()),
            RingKind::PrimeField(_) => Elem::Mod(0),
            RingKind::Poly { .. } => Elem::Poly(MPoly::zero()),
            RingKind::Frac { poly } => {
                Elem::Frac(Box::new((MPoly::zero(), MPoly::constant(poly.poly_base().one(), poly.vars().len()))))
            }
            RingKind::Quotient { .. } => Elem::Ext(Vec::new()),
        }
    }

    pub fn one(&self) -> Elem {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Elem {
        self.from_bigint(&BigInt::from(n))
    }

    pub fn from_bigint(&self, n: &BigInt) -> Elem {
        match &*self.0 {
            RingKind::Rationals => Elem::Rat(BigRational::from_integer(n.clone())),
            RingKind::PrimeField(p) => Elem::Mod(reduce_bigint(n, *p)),
            RingKind::Poly { base, vars } => Elem::Poly(MPoly::constant_in(base, base.from_bigint(n), vars.len())),
            RingKind::Frac { poly } => {
                let Elem::Poly(num) = poly.from_bigint(n) else { unreachable!() };
                let den = MPoly::constant(poly.poly_base().one(), poly.vars().len());
                Elem::Frac(Box::new((num, den)))
            }
            RingKind::Quotient { base, .. } => {
                let mut v = vec![base.from_bigint(n)];
                dense::trim(base, &mut v);
                Elem::Ext(v)
            }
        }
    }

    /// Image of a rational number; fails when the denominator vanishes.
    pub fn from_rational(&self, q: &BigRational) -> Result<Elem> {
        let num = self.from_bigint(q.numer());
        if q.denom().is_one() {
            return Ok(num);
        }
        let den = self.from_bigint(q.denom());
        self.div(&num, &den)
    }

    /// The adjoined generator of a quotient step.
    pub fn generator(&self) -> Result<Elem> {
        match &*self.0 {
            RingKind::Quotient { base, .. } => Ok(Elem::Ext(vec![base.zero(), base.one()])),
            _ => Err(Error::Invalid(format!("{} has no adjoined generator", self))),
        }
    }

    /// A named parameter (or generator) anywhere in the tower, embedded here.
    pub fn param(&self, name: &str) -> Result<Elem> {
        match &*self.0 {
            RingKind::Poly { base, vars } => {
                if let Some(i) = vars.iter().position(|v| v == name) {
                    Ok(Elem::Poly(MPoly::var(base.one(), vars.len(), i)))
                } else {
                    let e = base.param(name)?;
                    self.embed(base, &e)
                }
            }
            RingKind::Frac { poly } => {
                let e = poly.param(name)?;
                self.embed(poly, &e)
            }
            RingKind::Quotient { base, name: g, .. } => {
                if g == name {
                    self.generator()
                } else {
                    let e = base.param(name)?;
                    self.embed(base, &e)
                }
            }
            _ => Err(Error::Invalid(format!("unknown name {name}"))),
        }
    }

    /// Names (parameters and generators) visible in this tower, outermost first.
    pub fn names(&self) -> Vec<String> {
        let mut out = Vec::new();
        let mut cur = Some(self);
        while let Some(r) = cur {
            match &*r.0 {
                RingKind::Poly { vars, .. } => out.extend(vars.iter().cloned()),
                RingKind::Quotient { name, .. } => out.push(name.clone()),
                _ => {}
            }
            cur = r.base();
        }
        out
    }

    /// Base ring of the coefficients of a polynomial or fraction ring.
    pub(crate) fn poly_base(&self) -> &Ring {
        match &*self.0 {
            RingKind::Poly { base, .. } => base,
            RingKind::Frac { poly } => poly.poly_base(),
            _ => panic!("{} is not a polynomial ring", self),
        }
    }

    // ---- predicates ----

    pub fn is_zero(&self, a: &Elem) -> bool {
        match a {
            Elem::Rat(q) => q.is_zero(),
            Elem::Mod(v) => *v == 0,
            Elem::Poly(p) => p.is_zero(),
            Elem::Frac(f) => f.0.is_zero(),
            Elem::Ext(v) => v.is_empty(),
        }
    }

    pub fn is_one(&self, a: &Elem) -> bool {
        *a == self.one()
    }

    /// Constant of the prime subfield, when the element is one.
    pub fn as_rational(&self, a: &Elem) -> Option<BigRational> {
        match (&*self.0, a) {
            (RingKind::Rationals, Elem::Rat(q)) => Some(q.clone()),
            (RingKind::Poly { base, .. }, Elem::Poly(p)) => {
                if p.is_zero() {
                    Some(BigRational::zero())
                } else if p.is_constant() {
                    base.as_rational(&p.terms[0].1)
                } else {
                    None
                }
            }
            (RingKind::Frac { poly }, Elem::Frac(f)) => {
                if f.1.is_constant() {
                    poly.as_rational(&Elem::Poly(f.0.clone()))
                } else {
                    None
                }
            }
            (RingKind::Quotient { base, .. }, Elem::Ext(v)) => match v.len() {
                0 => Some(BigRational::zero()),
                1 => base.as_rational(&v[0]),
                _ => None,
            },
            _ => None,
        }
    }

    /// Residue of a prime-field constant.
    pub fn as_residue(&self, a: &Elem) -> Option<u64> {
        match (&*self.0, a) {
            (RingKind::PrimeField(_), Elem::Mod(v)) => Some(*v),
            (RingKind::Poly { base, .. }, Elem::Poly(p)) => {
                if p.is_zero() {
                    Some(0)
                } else if p.is_constant() {
                    base.as_residue(&p.terms[0].1)
                } else {
                    None
                }
            }
            (RingKind::Frac { poly }, Elem::Frac(f)) if f.1.is_constant() => poly.as_residue(&Elem::Poly(f.0.clone())),
            (RingKind::Quotient { base, .. }, Elem::Ext(v)) => match v.len() {
                0 => Some(0),
                1 => base.as_residue(&v[0]),
                _ => None,
            },
            _ => None,
        }
    }

    // ---- arithmetic ----

    pub fn add(&self, a: &Elem, b: &Elem) -> Elem {
        match (&*self.0, a, b) {
            (RingKind::Rationals, Elem::Rat(x), Elem::Rat(y)) => Elem::Rat(numeric::rat_add(x, y)),
            (RingKind::PrimeField(p), Elem::Mod(x), Elem::Mod(y)) => Elem::Mod((x + y) % p),
            (RingKind::Poly { base, .. }, Elem::Poly(x), Elem::Poly(y)) => Elem::Poly(x.add(y, base)),
            (RingKind::Frac { poly }, Elem::Frac(x), Elem::Frac(y)) => {
                let base = poly.poly_base();
                if x.1 == y.1 {
                    self.make_frac(x.0.add(&y.0, base), x.1.clone())
                } else {
                    let num = x.0.mul(&y.1, base).add(&y.0.mul(&x.1, base), base);
                    self.make_frac(num, x.1.mul(&y.1, base))
                }
            }
            (RingKind::Quotient { base, .. }, Elem::Ext(x), Elem::Ext(y)) => Elem::Ext(dense::add(base, x, y)),
            _ => self.mismatch(a, b),
        }
    }

    pub fn neg(&self, a: &Elem) -> Elem {
        match (&*self.0, a) {
            (RingKind::Rationals, Elem::Rat(x)) => Elem::Rat(-x),
            (RingKind::PrimeField(p), Elem::Mod(x)) => Elem::Mod((p - x) % p),
            (RingKind::Poly { base, .. }, Elem::Poly(x)) => Elem::Poly(x.neg(base)),
            (RingKind::Frac { poly }, Elem::Frac(x)) => Elem::Frac(Box::new((x.0.neg(poly.poly_base()), x.1.clone()))),
            (RingKind::Quotient { base, .. }, Elem::Ext(x)) => Elem::Ext(x.iter().map(|c| base.neg(c)).collect()),
            _ => self.mismatch(a, a),
        }
    }

    pub fn sub(&self, a: &Elem, b: &Elem) -> Elem {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        match (&*self.0, a, b) {
            (RingKind::Rationals, Elem::Rat(x), Elem::Rat(y)) => Elem::Rat(numeric::rat_mul(x, y)),
            (RingKind::PrimeField(p), Elem::Mod(x), Elem::Mod(y)) => Elem::Mod(mul_mod(*x, *y, *p)),
            (RingKind::Poly { base, .. }, Elem::Poly(x), Elem::Poly(y)) => Elem::Poly(x.mul(y, base)),
            (RingKind::Frac { poly }, Elem::Frac(x), Elem::Frac(y)) => {
                let base = poly.poly_base();
                if x.1.is_constant() && y.1.is_constant() {
                    return self.make_frac(x.0.mul(&y.0, base), x.1.mul(&y.1, base));
                }
                // Cross-cancel first to keep the gcd work small.
                let (n1, d2) = cancel(&x.0, &y.1, base);
                let (n2, d1) = cancel(&y.0, &x.1, base);
                self.make_frac(n1.mul(&n2, base), d1.mul(&d2, base))
            }
            (RingKind::Quotient { base, modulus, .. }, Elem::Ext(x), Elem::Ext(y)) => {
                if x.is_empty() || y.is_empty() {
                    return Elem::Ext(Vec::new());
                }
                Elem::Ext(dense::rem_monic(base, &dense::mul(base, x, y), modulus))
            }
            _ => self.mismatch(a, b),
        }
    }

    pub fn scale_int(&self, a: &Elem, n: i64) -> Elem {
        self.mul(a, &self.from_i64(n))
    }

    pub fn pow(&self, a: &Elem, mut e: u64) -> Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    pub fn inv(&self, a: &Elem) -> Result<Elem> {
        if self.is_zero(a) {
            return Err(Error::DivisionByZero);
        }
        match (&*self.0, a) {
            (RingKind::Rationals, Elem::Rat(x)) => Ok(Elem::Rat(x.recip())),
            (RingKind::PrimeField(p), Elem::Mod(x)) => Ok(Elem::Mod(mod_pow(*x, p - 2, *p))),
            (RingKind::Poly { base, .. }, Elem::Poly(x)) => {
                if x.is_constant() {
                    let c = base.inv(&x.terms[0].1)?;
                    Ok(Elem::Poly(MPoly::constant_in(base, c, self.vars().len())))
                } else {
                    Err(Error::NotInvertible(self.format(a)))
                }
            }
            (RingKind::Frac { .. }, Elem::Frac(x)) => Ok(self.make_frac(x.1.clone(), x.0.clone())),
            (RingKind::Quotient { base, modulus, name }, Elem::Ext(x)) => {
                dense::inverse_mod(base, x, modulus).map(Elem::Ext).map_err(|g| match g {
                    dense::InvError::Factor(f) => Error::ZeroDivisor { factor: dense::format(base, &f, name) },
                    dense::InvError::Base(e) => e,
                })
            }
            _ => self.mismatch(a, a),
        }
    }

    /// Exact quotient `a / b`. In a polynomial ring the division must be exact.
    pub fn div(&self, a: &Elem, b: &Elem) -> Result<Elem> {
        if self.is_zero(b) {
            return Err(Error::DivisionByZero);
        }
        match (&*self.0, a, b) {
            (RingKind::Poly { base, .. }, Elem::Poly(x), Elem::Poly(y)) => x
                .div_exact(y, base)
                .map(Elem::Poly)
                .ok_or_else(|| Error::InexactDivision(self.describe())),
            (RingKind::Frac { poly }, Elem::Frac(x), Elem::Frac(y)) => {
                let base = poly.poly_base();
                let (n1, n2) = cancel(&x.0, &y.0, base);
                let (d1, d2) = cancel(&x.1, &y.1, base);
                Ok(self.make_frac(n1.mul(&d2, base), d1.mul(&n2, base)))
            }
            _ => Ok(self.mul(a, &self.inv(b)?)),
        }
    }

    // ---- embeddings ----

    /// True when elements of `from` coerce into this ring.
    pub fn contains(&self, from: &Ring) -> bool {
        if self == from {
            return true;
        }
        match &*self.0 {
            RingKind::Poly { base, vars } => {
                base.contains(from)
                    || matches!(&*from.0, RingKind::Poly { base: fb, vars: fv }
                        if base.contains(fb) && fv.iter().all(|v| vars.contains(v)))
            }
            RingKind::Frac { poly } => {
                poly.contains(from) || matches!(&*from.0, RingKind::Frac { poly: fp } if poly.contains(fp))
            }
            RingKind::Quotient { base, .. } => base.contains(from),
            _ => false,
        }
    }

    /// Coerce an element of a subring.
    pub fn embed(&self, from: &Ring, e: &Elem) -> Result<Elem> {
        if self == from {
            return Ok(e.clone());
        }
        let fail = || Error::DomainMismatch(format!("cannot embed {} into {}", from, self));
        match &*self.0 {
            RingKind::Poly { base, vars } => {
                if base.contains(from) {
                    let c = base.embed(from, e)?;
                    return Ok(Elem::Poly(MPoly::constant_in(base, c, vars.len())));
                }
                let (RingKind::Poly { base: fb, vars: fv }, Elem::Poly(p)) = (&*from.0, e) else {
                    return Err(fail());
                };
                if !fv.iter().all(|v| vars.contains(v)) {
                    return Err(fail());
                }
                let map: Vec<usize> = fv.iter().map(|v| vars.iter().position(|w| w == v).unwrap()).collect();
                let mut terms = Vec::with_capacity(p.terms.len());
                for (exp, c) in &p.terms {
                    let mut ne = vec![0u32; vars.len()];
                    for (i, &k) in exp.iter().enumerate() {
                        ne[map[i]] = k;
                    }
                    terms.push((ne, base.embed(fb, c)?));
                }
                Ok(Elem::Poly(MPoly::from_terms(terms, base)))
            }
            RingKind::Frac { poly } => {
                if poly.contains(from) {
                    let Elem::Poly(p) = poly.embed(from, e)? else { unreachable!() };
                    let one = MPoly::constant(poly.poly_base().one(), poly.vars().len());
                    return Ok(Elem::Frac(Box::new((p, one))));
                }
                let (RingKind::Frac { poly: fp }, Elem::Frac(f)) = (&*from.0, e) else {
                    return Err(fail());
                };
                let Elem::Poly(n) = poly.embed(fp, &Elem::Poly(f.0.clone()))? else { unreachable!() };
                let Elem::Poly(d) = poly.embed(fp, &Elem::Poly(f.1.clone()))? else { unreachable!() };
                Ok(self.make_frac(n, d))
            }
            RingKind::Quotient { base, .. } => {
                let c = base.embed(from, e)?;
                let mut v = vec![c];
                dense::trim(base, &mut v);
                Ok(Elem::Ext(v))
            }
            _ => Err(fail()),
        }
    }

    /// Smallest of the two rings that contains the other.
    pub fn join(a: &Ring, b: &Ring) -> Result<Ring> {
        if a.contains(b) {
            Ok(a.clone())
        } else if b.contains(a) {
            Ok(b.clone())
        } else {
            Err(Error::DomainMismatch(format!("{a} and {b} have no common ring")))
        }
    }

    // ---- internals ----

    /// Canonical fraction: reduced, denominator with leading coefficient 1.
    pub(crate) fn make_frac(&self, num: MPoly, den: MPoly) -> Elem {
        let RingKind::Frac { poly } = &*self.0 else { panic!("make_frac on {}", self) };
        let base = poly.poly_base();
        let k = poly.vars().len();
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Elem::Frac(Box::new((MPoly::zero(), MPoly::constant(base.one(), k))));
        }
        let (mut num, mut den) = (num, den);
        if !den.is_constant() {
            if let Ok(g) = MPoly::gcd(&num, &den, base, k) {
                if !g.is_constant() {
                    num = num.div_exact(&g, base).expect("gcd divides numerator");
                    den = den.div_exact(&g, base).expect("gcd divides denominator");
                }
            }
        }
        let lc = den.terms[0].1.clone();
        if !base.is_one(&lc) {
            // A non-invertible leading coefficient is left in place.
            if let Ok(inv) = base.inv(&lc) {
                num = num.scale(&inv, base);
                den = den.scale(&inv, base);
            }
        }
        Elem::Frac(Box::new((num, den)))
    }

    fn mismatch(&self, a: &Elem, b: &Elem) -> ! {
        panic!("elements {:?} / {:?} do not belong to {}", a, b, self.describe())
    }
}

/// Remove the common factor of `a` and `b`.
fn cancel(a: &MPoly, b: &MPoly, base: &Ring) -> (MPoly, MPoly) {
    if a.is_constant() || b.is_constant() {
        return (a.clone(), b.clone());
    }
    let k = a.terms[0].0.len();
    match MPoly::gcd(a, b, base, k) {
        Ok(g) if !g.is_constant() => (a.div_exact(&g, base).unwrap(), b.div_exact(&g, base).unwrap()),
        _ => (a.clone(), b.clone()),
    }
}
