use std::fmt;

use super::{Elem, Ring};
use crate::error::{Error, Result};

/// An element together with its domain; binary operations check that the domains agree.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldValue {
    ring: Ring,
    elem: Elem,
}

impl FieldValue {
    pub fn new(ring: &Ring, elem: Elem) -> FieldValue {
        FieldValue { ring: ring.clone(), elem }
    }

    pub fn from_i64(ring: &Ring, n: i64) -> FieldValue {
        FieldValue::new(ring, ring.from_i64(n))
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn elem(&self) -> &Elem {
        &self.elem
    }

    pub fn into_elem(self) -> Elem {
        self.elem
    }

    pub fn is_zero(&self) -> bool {
        self.ring.is_zero(&self.elem)
    }

    pub fn is_one(&self) -> bool {
        self.ring.is_one(&self.elem)
    }

    fn check(&self, o: &FieldValue) -> Result<()> {
        if self.ring == o.ring {
            Ok(())
        } else {
            Err(Error::DomainMismatch(format!("{} vs {}", self.ring, o.ring)))
        }
    }

    pub fn add(&self, o: &FieldValue) -> Result<FieldValue> {
        self.check(o)?;
        Ok(FieldValue::new(&self.ring, self.ring.add(&self.elem, &o.elem)))
    }

    pub fn sub(&self, o: &FieldValue) -> Result<FieldValue> {
        self.check(o)?;
        Ok(FieldValue::new(&self.ring, self.ring.sub(&self.elem, &o.elem)))
    }

    pub fn mul(&self, o: &FieldValue) -> Result<FieldValue> {
        self.check(o)?;
        Ok(FieldValue::new(&self.ring, self.ring.mul(&self.elem, &o.elem)))
    }

    pub fn div(&self, o: &FieldValue) -> Result<FieldValue> {
        self.check(o)?;
        Ok(FieldValue::new(&self.ring, self.ring.div(&self.elem, &o.elem)?))
    }

    pub fn neg(&self) -> FieldValue {
        FieldValue::new(&self.ring, self.ring.neg(&self.elem))
    }

    pub fn inv(&self) -> Result<FieldValue> {
        Ok(FieldValue::new(&self.ring, self.ring.inv(&self.elem)?))
    }

    pub fn pow(&self, e: u64) -> FieldValue {
        FieldValue::new(&self.ring, self.ring.pow(&self.elem, e))
    }

    /// Coerce into a ring containing this one.
    pub fn embed(&self, into: &Ring) -> Result<FieldValue> {
        Ok(FieldValue::new(into, into.embed(&self.ring, &self.elem)?))
    }
}

impl fmt::Display for FieldValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.ring.format(&self.elem))
    }
}

impl fmt::Debug for FieldValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in {}", self.ring.format(&self.elem), self.ring)
    }
}
