use std::fmt;

use super::{UniPoly, DEFAULT_MAX_DEGREE};
use crate::error::{Error, Result};
use crate::rings::{Elem, Ring};

/// Point of the projective line over a ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Point {
    Finite(Elem),
    Infinity,
}

/// `x -> (a x + b) / (c x + d)` with `ad - bc != 0`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mobius {
    ring: Ring,
    m: [Elem; 4],
}

impl Mobius {
    pub fn new(ring: &Ring, a: Elem, b: Elem, c: Elem, d: Elem) -> Result<Mobius> {
        let det = ring.sub(&ring.mul(&a, &d), &ring.mul(&b, &c));
        if ring.is_zero(&det) {
            return Err(Error::SingularMatrix);
        }
        Ok(Mobius { ring: ring.clone(), m: [a, b, c, d] })
    }

    pub fn from_ints(ring: &Ring, a: i64, b: i64, c: i64, d: i64) -> Result<Mobius> {
        Mobius::new(ring, ring.from_i64(a), ring.from_i64(b), ring.from_i64(c), ring.from_i64(d))
    }

    /// Parse four entries `a, b, c, d`.
    pub fn parse(entries: [&str; 4], ring: &Ring) -> Result<Mobius> {
        let e: Vec<Elem> = entries.iter().map(|s| crate::expr::parse_elem(s, ring)).collect::<Result<_>>()?;
        let [a, b, c, d]: [Elem; 4] = e.try_into().unwrap();
        Mobius::new(ring, a, b, c, d)
    }

    pub fn identity(ring: &Ring) -> Mobius {
        Mobius { ring: ring.clone(), m: [ring.one(), ring.zero(), ring.zero(), ring.one()] }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// Entries `[a, b, c, d]`.
    pub fn entries(&self) -> &[Elem; 4] {
        &self.m
    }

    pub fn det(&self) -> Elem {
        let r = &self.ring;
        r.sub(&r.mul(&self.m[0], &self.m[3]), &r.mul(&self.m[1], &self.m[2]))
    }

    /// Matrix product `self * o`, i.e. the map `x -> self(o(x))`.
    pub fn compose(&self, o: &Mobius) -> Result<Mobius> {
        if self.ring != o.ring {
            return Err(Error::DomainMismatch(format!("{} vs {}", self.ring, o.ring)));
        }
        let r = &self.ring;
        let [a, b, c, d] = &self.m;
        let [e, f, g, h] = &o.m;
        let m = [
            r.add(&r.mul(a, e), &r.mul(b, g)),
            r.add(&r.mul(a, f), &r.mul(b, h)),
            r.add(&r.mul(c, e), &r.mul(d, g)),
            r.add(&r.mul(c, f), &r.mul(d, h)),
        ];
        Ok(Mobius { ring: r.clone(), m })
    }

    /// Adjugate; inverse up to the scalar `det`.
    pub fn inverse(&self) -> Mobius {
        let r = &self.ring;
        let [a, b, c, d] = &self.m;
        Mobius { ring: r.clone(), m: [d.clone(), r.neg(b), r.neg(c), a.clone()] }
    }

    pub fn scale(&self, l: &Elem) -> Result<Mobius> {
        let r = &self.ring;
        if r.is_zero(l) {
            return Err(Error::SingularMatrix);
        }
        Ok(Mobius { ring: r.clone(), m: self.m.clone().map(|e| r.mul(&e, l)) })
    }

    /// Scale so the first nonzero entry is 1 (needs that entry to be invertible).
    pub fn normalized(&self) -> Result<Mobius> {
        let r = &self.ring;
        let lead = self.m.iter().find(|e| !r.is_zero(e)).unwrap();
        if r.is_one(lead) {
            return Ok(self.clone());
        }
        self.scale(&r.inv(lead)?)
    }

    /// Equality in PGL2: the entry vectors are proportional.
    pub fn projectively_eq(&self, o: &Mobius) -> bool {
        let r = &self.ring;
        (0..4).all(|i| (i + 1..4).all(|j| r.mul(&self.m[i], &o.m[j]) == r.mul(&self.m[j], &o.m[i])))
    }

    pub fn is_identity(&self) -> bool {
        self.projectively_eq(&Mobius::identity(&self.ring))
    }

    pub fn apply(&self, p: &Point) -> Result<Point> {
        let r = &self.ring;
        let [a, b, c, d] = &self.m;
        let (num, den) = match p {
            Point::Infinity => (a.clone(), c.clone()),
            Point::Finite(z) => (r.add(&r.mul(a, z), b), r.add(&r.mul(c, z), d)),
        };
        if r.is_zero(&den) {
            Ok(Point::Infinity)
        } else {
            Ok(Point::Finite(r.div(&num, &den)?))
        }
    }

    pub fn embed(&self, into: &Ring) -> Result<Mobius> {
        let m = [0, 1, 2, 3].map(|i| into.embed(&self.ring, &self.m[i]));
        let [a, b, c, d] = m;
        Mobius::new(into, a?, b?, c?, d?)
    }

    /// Numerator of `f((ax+b)/(cx+d)) * (cx+d)^deg f`.
    ///
    /// Roots of the result are the preimages of the roots of `f`. The result is
    /// not made monic; its degree drops when the map sends a root to infinity.
    pub fn transport(&self, f: &UniPoly) -> Result<UniPoly> {
        let n = f.degree().ok_or_else(|| Error::Invalid("cannot transport the zero polynomial".into()))?;
        self.transport_formal(f, n)
    }

    /// Transport of `f` read as a binary form of formal degree `n >= deg f`.
    ///
    /// A formal degree above `deg f` means `f` vanishes at infinity to that order.
    /// Formal transport is an exact right action: `T(T(f, M), N) = T(f, M*N)`.
    pub fn transport_formal(&self, f: &UniPoly, n: usize) -> Result<UniPoly> {
        let r = &self.ring;
        if *f.ring() != *r {
            return Err(Error::DomainMismatch(format!("{} vs {}", f.ring(), r)));
        }
        if f.degree().is_some_and(|d| d > n) {
            return Err(Error::Invalid(format!("formal degree {n} is below the degree of f")));
        }
        if n > DEFAULT_MAX_DEGREE {
            return Err(Error::DegreeCap { degree: n, cap: DEFAULT_MAX_DEGREE });
        }
        let [a, b, c, d] = &self.m;
        let num = UniPoly::new(r, vec![b.clone(), a.clone()]);
        let den = UniPoly::new(r, vec![d.clone(), c.clone()]);
        // Horner in homogeneous form: S_k = S_{k+1} * (ax+b) + f_k * (cx+d)^{n-k}.
        let mut den_pow = Vec::with_capacity(n + 1);
        den_pow.push(UniPoly::one(r));
        for k in 1..=n {
            den_pow.push(den_pow[k - 1].mul(&den)?);
        }
        let mut s = UniPoly::constant(r, f.coeff(n));
        for k in (0..n).rev() {
            s = s.mul(&num)?;
            let fk = f.coeff(k);
            if !r.is_zero(&fk) {
                s = s.add(&den_pow[n - k].scale(&fk))?;
            }
        }
        Ok(s)
    }
}

impl fmt::Display for Mobius {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e: Vec<String> = self.m.iter().map(|x| self.ring.format(x)).collect();
        write!(f, "[[{}, {}], [{}, {}]]", e[0], e[1], e[2], e[3])
    }
}

impl fmt::Debug for Mobius {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} over {}", self.ring)
    }
}
