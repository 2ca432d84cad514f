//! Finite subgroups of PGL₂ acting on the branch locus: explicit fixtures,
//! orbit polynomials, orbit decomposition and the automorphism-group tables.
//!
//! Every fixture is written in coordinates where the extra automorphism is
//! `x -> ζx`, so the special orbits through 0 or ∞ can never be branch orbits.

mod catalog;
mod classify;
mod finite;
mod fixtures;

#[cfg(test)]
mod tests;

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::expr::DomainSpec;
use crate::rings::{Elem, FieldValue, Ring, RingKind};
use crate::unipoly::{Mobius, Point, UniPoly};

pub use catalog::{catalog_from_json, catalog_json, fixture_from_json, fixture_to_json, standard_catalog, standard_families, CATALOG_SCHEMA};
pub use classify::{classify, AutGroupReport, G1, G2, G3};
pub use finite::{cyclotomic, irreducible_poly, primitive_element};
pub use fixtures::Family;

/// A special orbit: its finite points as a monic polynomial, plus ∞ when present.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecialOrbit {
    pub name: String,
    pub poly: UniPoly,
    pub infinity: bool,
}

impl SpecialOrbit {
    pub fn size(&self) -> usize {
        self.poly.degree().unwrap_or(0) + usize::from(self.infinity)
    }

    pub fn contains_zero(&self) -> bool {
        self.poly.ring().is_zero(&self.poly.coeff(0))
    }

    /// Orbits through a fixed point of `x -> ζx` cannot carry the branch locus.
    pub fn forbidden(&self) -> bool {
        self.infinity || self.contains_zero()
    }
}

/// Generic orbits `T(x; a)`, stored with denominators cleared over `K[a]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Template {
    pub poly: UniPoly,
    /// Values of `a` at which the generic orbit collapses, with the orbit reached.
    pub excluded: Vec<(Elem, String)>,
}

/// How a fixture's coefficient field is declared, reproducible from text.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FixtureDomain {
    pub characteristic: u64,
    /// Sugar expressions such as `I` or `sqrt(3)`.
    pub sugar: Vec<String>,
    /// `(generator, minimal polynomial in t)`.
    pub extensions: Vec<(String, String)>,
}

impl FixtureDomain {
    pub fn build(&self) -> Result<Ring> {
        let spec = DomainSpec {
            characteristic: self.characteristic,
            extensions: self.extensions.clone(),
            params: Some(Vec::new()),
        };
        let texts: Vec<&str> = self.sugar.iter().map(String::as_str).collect();
        spec.build(&texts)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupFixture {
    pub family: Family,
    pub domain: FixtureDomain,
    pub ring: Ring,
    pub generators: Vec<Mobius>,
    pub order: usize,
    /// Order of the cyclic subgroup `x -> ζx` that hosts the extra automorphism.
    pub extra_order: usize,
    pub orbits: Vec<SpecialOrbit>,
    pub template: Template,
    /// Matrix `Q` with this group equal to `Q⁻¹ G Q` for the Case-A model `G`.
    pub conjugator: Option<Mobius>,
    pub caveats: Vec<String>,
}

impl GroupFixture {
    pub fn name(&self) -> String {
        self.family.name()
    }

    pub fn param_ring(&self) -> &Ring {
        self.template.poly.ring()
    }

    pub fn orbit(&self, name: &str) -> Option<&SpecialOrbit> {
        self.orbits.iter().find(|o| o.name == name)
    }

    /// Bring `f` over a ring that contains the fixture's field.
    ///
    /// Polynomials over Q, Q(params) or Q[params] are reread over `K(params)`.
    pub fn lift(&self, f: &UniPoly) -> Result<UniPoly> {
        if f.ring().contains(&self.ring) {
            return Ok(f.clone());
        }
        let vars = f.ring().vars().to_vec();
        let target = if vars.is_empty() {
            self.ring.clone()
        } else {
            let refs: Vec<&str> = vars.iter().map(String::as_str).collect();
            Ring::rational_functions(&self.ring, &refs)?
        };
        if target.characteristic() != f.ring().characteristic() {
            return Err(Error::DomainMismatch(format!("{} vs fixture field {}", f.ring(), self.ring)));
        }
        UniPoly::parse(&f.to_string(), &target)
            .map_err(|_| Error::DomainMismatch(format!("cannot read {} over {}", f.ring(), target)))
    }

    /// Generators embedded into a larger ring.
    pub fn generators_in(&self, ring: &Ring) -> Result<Vec<Mobius>> {
        self.generators.iter().map(|g| g.embed(ring)).collect()
    }
}

/// All products of the generators, deduplicated up to scalars.
pub fn group_elements(generators: &[Mobius], bound: usize) -> Result<Vec<Mobius>> {
    let Some(first) = generators.first() else {
        return Err(Error::Invalid("no generators".into()));
    };
    let ring = first.ring();
    let gens: Vec<Mobius> = generators.iter().map(Mobius::normalized).collect::<Result<_>>()?;
    let id = Mobius::identity(ring);
    let mut seen: HashSet<Mobius> = HashSet::from([id.clone()]);
    let mut out = vec![id];
    let mut frontier = out.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for e in &frontier {
            for g in &gens {
                let h = e.compose(g)?.normalized()?;
                if seen.insert(h.clone()) {
                    if seen.len() > bound {
                        return Err(Error::ClosureBound(bound));
                    }
                    out.push(h.clone());
                    next.push(h);
                }
            }
        }
        frontier = next;
    }
    Ok(out)
}

/// Monic polynomial of the finite points in the orbit of `seed`; ∞ is dropped.
///
/// `ring` holds the seed; the elements are embedded into it.
pub fn orbit_polynomial(elements: &[Mobius], seed: &Point, ring: &Ring) -> Result<UniPoly> {
    let mut images: Vec<Point> = Vec::new();
    for g in elements {
        let p = g.embed(ring)?.apply(seed)?;
        if !images.contains(&p) {
            images.push(p);
        }
    }
    let mut f = UniPoly::one(ring);
    for p in images {
        if let Point::Finite(z) = p {
            f = f.mul(&UniPoly::new(ring, vec![ring.neg(&z), ring.one()]))?;
        }
    }
    Ok(f)
}

/// Orbit as a set of points, for tests and reports.
pub fn orbit_points(elements: &[Mobius], seed: &Point, ring: &Ring) -> Result<Vec<Point>> {
    let mut images: Vec<Point> = Vec::new();
    for g in elements {
        let p = g.embed(ring)?.apply(seed)?;
        if !images.contains(&p) {
            images.push(p);
        }
    }
    Ok(images)
}

/// True iff the binary form of degree `n` attached to `f` is carried to a multiple of itself.
pub fn is_invariant_formal(f: &UniPoly, n: usize, generators: &[Mobius]) -> Result<bool> {
    for g in generators {
        let g = g.embed(f.ring())?;
        if g.transport_formal(f, n)?.proportional(f).is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// True iff every generator permutes the roots of `f` (no root is sent to ∞).
pub fn is_invariant(f: &UniPoly, fixture: &GroupFixture) -> Result<bool> {
    let f = fixture.lift(f)?;
    let n = f.degree().ok_or_else(|| Error::Invalid("zero polynomial".into()))?;
    is_invariant_formal(&f, n, &fixture.generators)
}

/// Evaluate a coefficient of `K[a]` at `a = v` in a ring containing `K`.
fn eval_param(param_ring: &Ring, c: &Elem, target: &Ring, v: &Elem) -> Result<Elem> {
    let RingKind::Poly { base, .. } = param_ring.kind() else {
        return Err(Error::Internal("template ring is not K[a]".into()));
    };
    let Elem::Poly(p) = c else {
        return Err(Error::Internal("template coefficient is not a polynomial".into()));
    };
    let mut acc = target.zero();
    for (exp, k) in p.terms() {
        let t = target.mul(&target.embed(base, k)?, &target.pow(v, exp[0] as u64));
        acc = target.add(&acc, &t);
    }
    Ok(acc)
}

/// Coefficients of the template as polynomials in `a` over `target`.
fn template_in_a(fixture: &GroupFixture, target: &Ring) -> Result<Vec<UniPoly>> {
    let pr = fixture.param_ring();
    let RingKind::Poly { base, .. } = pr.kind() else {
        return Err(Error::Internal("template ring is not K[a]".into()));
    };
    fixture
        .template
        .poly
        .coeffs()
        .iter()
        .map(|c| {
            let Elem::Poly(p) = c else {
                return Err(Error::Internal("template coefficient is not a polynomial".into()));
            };
            let deg = p.terms().iter().map(|(e, _)| e[0] as usize).max().unwrap_or(0);
            let mut v = vec![target.zero(); deg + 1];
            for (e, k) in p.terms() {
                v[e[0] as usize] = target.embed(base, k)?;
            }
            Ok(UniPoly::new(target, v))
        })
        .collect()
}

/// The generic orbit polynomial at `a`, made monic.
pub fn generic_template(fixture: &GroupFixture, a: &FieldValue) -> Result<UniPoly> {
    let lifted = fixture.lift(&UniPoly::constant(a.ring(), a.elem().clone()))?;
    let target = lifted.ring().clone();
    let v = lifted.coeff(0);
    for (ex, orbit) in &fixture.template.excluded {
        if target.embed(&fixture.ring, ex)? == v {
            return Err(Error::ExcludedParameter(orbit.clone()));
        }
    }
    let pr = fixture.param_ring();
    let coeffs = fixture.template.poly.coeffs().iter().map(|c| eval_param(pr, c, &target, &v)).collect::<Result<_>>()?;
    let t = UniPoly::new(&target, coeffs);
    if t.degree() != fixture.template.poly.degree() {
        return Err(Error::ExcludedParameter("a point at infinity".into()));
    }
    t.monic()
}

/// How a parameter of the generic orbit was recovered.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Recovery {
    /// Every listed value reproduces the generic part exactly.
    Exact(Vec<FieldValue>),
    /// Values are the roots of this polynomial in `a`; none lies in the base field.
    Polynomial(UniPoly),
    NotAttempted,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitReport {
    pub fixture: String,
    /// `(orbit name, count)` in fixture order; counts are 0 or 1.
    pub counts: Vec<(String, u32)>,
    pub generic_count: usize,
    pub recovery: Recovery,
    /// Generic part not explained by recovered parameters (1 when fully decomposed).
    pub cofactor: UniPoly,
    pub notes: Vec<String>,
}

impl OrbitReport {
    pub fn count(&self, name: &str) -> u32 {
        self.counts.iter().find(|(n, _)| n == name).map_or(0, |(_, c)| *c)
    }

    /// Finite degree explained: special orbits, recovered generic orbits, cofactor.
    pub fn accounted_degree(&self, fixture: &GroupFixture) -> usize {
        let special: usize = self
            .counts
            .iter()
            .map(|(n, c)| fixture.orbit(n).map_or(0, |o| o.poly.degree().unwrap_or(0)) * *c as usize)
            .sum();
        let recovered = if matches!(self.recovery, Recovery::Exact(_)) { fixture.order * self.generic_count } else { 0 };
        special + recovered + self.cofactor.degree().unwrap_or(0)
    }
}

/// Split an invariant branch polynomial into special orbits and generic orbits.
pub fn orbit_decomposition(f: &UniPoly, fixture: &GroupFixture) -> Result<OrbitReport> {
    let f = fixture.lift(f)?;
    let ring = f.ring().clone();
    if !ring.is_field() {
        return Err(Error::Invalid("orbit decomposition needs coefficients in a field".into()));
    }
    if !is_invariant(&f, fixture)? {
        return Err(Error::NotInvariant(format!("{} under {}", f, fixture.name())));
    }
    let mut rest = f.monic()?;
    let mut counts = Vec::new();
    let mut notes = Vec::new();
    for o in &fixture.orbits {
        if o.poly.is_constant() {
            notes.push(format!("{} lies at infinity and is not visible in f", o.name));
            counts.push((o.name.clone(), 0));
            continue;
        }
        let p = o.poly.embed(&ring)?;
        let (q, r) = rest.divrem(&p)?;
        if !r.is_zero() {
            counts.push((o.name.clone(), 0));
            continue;
        }
        if q.rem(&p)?.is_zero() {
            return Err(Error::Invalid(format!("special orbit {} occurs with multiplicity > 1", o.name)));
        }
        rest = q;
        counts.push((o.name.clone(), 1));
    }
    let deg = rest.degree().unwrap_or(0);
    if deg % fixture.order != 0 {
        return Err(Error::Inconsistent(format!(
            "generic part of degree {deg} is not a union of orbits of size {}",
            fixture.order
        )));
    }
    let generic_count = deg / fixture.order;
    let mut recovery = Recovery::NotAttempted;
    let mut cofactor = rest.clone();
    if generic_count == 1 {
        recovery = recover_parameter(&rest, fixture)?;
        if matches!(recovery, Recovery::Exact(_)) {
            cofactor = UniPoly::one(&ring);
        }
    } else if generic_count > 1 {
        notes.push("several generic orbits: parameters are not separated".into());
    } else {
        cofactor = UniPoly::one(&ring);
    }
    Ok(OrbitReport { fixture: fixture.name(), counts, generic_count, recovery, cofactor, notes })
}

/// Solve `C ∝ T(x; a)` for `a`, `C` monic of the generic degree.
fn recover_parameter(c: &UniPoly, fixture: &GroupFixture) -> Result<Recovery> {
    let ring = c.ring().clone();
    let t = template_in_a(fixture, &ring)?;
    if t.len() != c.coeffs().len() {
        return Ok(Recovery::NotAttempted);
    }
    let top = t.len() - 1;
    let mut g = UniPoly::zero(&ring);
    for (j, tj) in t.iter().enumerate().take(top) {
        let e = tj.sub(&t[top].scale(&c.coeff(j)))?;
        g = if g.is_zero() { e } else { g.gcd(&e)? };
    }
    let g = g.monic()?;
    let candidates: Vec<Elem> = match g.degree() {
        None | Some(0) => return Ok(Recovery::NotAttempted),
        Some(1) => vec![ring.neg(&g.coeff(0))],
        Some(_) => match g.rational_roots() {
            Some(rs) => rs.iter().map(|q| ring.from_rational(q)).collect::<Result<_>>()?,
            None => return Ok(Recovery::Polynomial(g)),
        },
    };
    let mut found = Vec::new();
    for v in candidates {
        let a = FieldValue::new(&ring, v);
        if let Ok(p) = generic_template(fixture, &a) {
            if p == *c {
                found.push(a);
            }
        }
    }
    if found.is_empty() {
        Ok(Recovery::Polynomial(g))
    } else {
        Ok(Recovery::Exact(found))
    }
}
