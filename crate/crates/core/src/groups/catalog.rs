//! The shipped fixture catalog and its JSON form.
//!
//! Matrices and polynomials are written in the expression syntax, so a fixture
//! read back from JSON is equal to the one that was printed.

use serde_json::{json, Value};

use super::{Family, FixtureDomain, GroupFixture, SpecialOrbit, Template};
use crate::error::{Error, Result};
use crate::expr::parse_elem;
use crate::rings::Ring;
use crate::unipoly::{Mobius, UniPoly};

pub const CATALOG_SCHEMA: u64 = 1;

/// Families serialized in the shipped catalog, in order.
pub fn standard_families() -> Vec<Family> {
    vec![
        Family::Cyclic(3),
        Family::DihedralA(3),
        Family::DihedralA(4),
        Family::DihedralB(4),
        Family::A4A,
        Family::A4B,
        Family::S4A,
        Family::S4B,
        Family::S4C,
        Family::A5A,
        Family::A5B,
        Family::A5C,
        Family::ElemAbelian { p: 3, t: 1, m: 2 },
        Family::ElemAbelian { p: 3, t: 2, m: 4 },
        Family::Psl { p: 7, t: 1 },
        Family::Pgl { p: 3, t: 2 },
    ]
}

pub fn standard_catalog() -> Result<Vec<GroupFixture>> {
    standard_families().iter().map(Family::build).collect()
}

fn mobius_json(m: &Mobius) -> Value {
    let r = m.ring();
    Value::Array(m.entries().iter().map(|e| Value::String(r.format(e))).collect())
}

pub fn fixture_to_json(f: &GroupFixture) -> Value {
    let orbits: Vec<Value> = f
        .orbits
        .iter()
        .map(|o| {
            json!({
                "name": o.name,
                "poly": o.poly.to_string(),
                "infinity": o.infinity,
                "size": o.size(),
                "forbidden": o.forbidden(),
            })
        })
        .collect();
    let excluded: Vec<Value> =
        f.template.excluded.iter().map(|(v, o)| json!({ "a": f.ring.format(v), "orbit": o })).collect();
    let extensions: Vec<Value> = f.domain.extensions.iter().map(|(n, p)| json!({ "name": n, "minpoly": p })).collect();
    json!({
        "name": f.name(),
        "reduced_group": f.family.reduced_group(),
        "domain": {
            "characteristic": f.domain.characteristic,
            "sugar": f.domain.sugar,
            "extensions": extensions,
        },
        "generators": f.generators.iter().map(mobius_json).collect::<Vec<_>>(),
        "order": f.order,
        "extra_order": f.extra_order,
        "orbits": orbits,
        "template": { "poly": f.template.poly.to_string(), "excluded": excluded },
        "conjugator": f.conjugator.as_ref().map(mobius_json),
        "caveats": f.caveats,
    })
}

pub fn catalog_json(fixtures: &[GroupFixture]) -> Value {
    json!({ "schema": CATALOG_SCHEMA, "fixtures": fixtures.iter().map(fixture_to_json).collect::<Vec<_>>() })
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| Error::Invalid(format!("catalog entry lacks {key:?}")))
}

fn string(v: &Value, key: &str) -> Result<String> {
    field(v, key)?.as_str().map(str::to_string).ok_or_else(|| Error::Invalid(format!("{key:?} is not a string")))
}

fn uint(v: &Value, key: &str) -> Result<u64> {
    field(v, key)?.as_u64().ok_or_else(|| Error::Invalid(format!("{key:?} is not an unsigned integer")))
}

fn array<'a>(v: &'a Value, key: &str) -> Result<&'a Vec<Value>> {
    field(v, key)?.as_array().ok_or_else(|| Error::Invalid(format!("{key:?} is not an array")))
}

fn strings(v: &Value, key: &str) -> Result<Vec<String>> {
    array(v, key)?
        .iter()
        .map(|s| s.as_str().map(str::to_string).ok_or_else(|| Error::Invalid(format!("{key:?} holds a non-string"))))
        .collect()
}

fn mobius_from(v: &Value, ring: &Ring) -> Result<Mobius> {
    let e: Vec<&str> = v
        .as_array()
        .filter(|a| a.len() == 4)
        .and_then(|a| a.iter().map(Value::as_str).collect::<Option<Vec<_>>>())
        .ok_or_else(|| Error::Invalid("a matrix is four strings".into()))?;
    Mobius::parse([e[0], e[1], e[2], e[3]], ring)
}

/// Read one fixture back; derived fields (`size`, `forbidden`) are recomputed and checked.
pub fn fixture_from_json(v: &Value) -> Result<GroupFixture> {
    let family = Family::parse(&string(v, "name")?)?;
    let d = field(v, "domain")?;
    let extensions = array(d, "extensions")?
        .iter()
        .map(|e| Ok((string(e, "name")?, string(e, "minpoly")?)))
        .collect::<Result<_>>()?;
    let domain = FixtureDomain { characteristic: uint(d, "characteristic")?, sugar: strings(d, "sugar")?, extensions };
    let ring = domain.build()?;
    let generators = array(v, "generators")?.iter().map(|g| mobius_from(g, &ring)).collect::<Result<_>>()?;
    let mut orbits = Vec::new();
    for o in array(v, "orbits")? {
        let orbit = SpecialOrbit {
            name: string(o, "name")?,
            poly: UniPoly::parse(&string(o, "poly")?, &ring)?,
            infinity: field(o, "infinity")?.as_bool().ok_or_else(|| Error::Invalid("infinity is a boolean".into()))?,
        };
        if uint(o, "size")? != orbit.size() as u64 {
            return Err(Error::Invalid(format!("orbit {} has a stale size", orbit.name)));
        }
        orbits.push(orbit);
    }
    let t = field(v, "template")?;
    let pr = Ring::polynomials(&ring, &["a"])?;
    let excluded = array(t, "excluded")?
        .iter()
        .map(|e| Ok((parse_elem(&string(e, "a")?, &ring)?, string(e, "orbit")?)))
        .collect::<Result<_>>()?;
    let template = Template { poly: UniPoly::parse(&string(t, "poly")?, &pr)?, excluded };
    let conjugator = match field(v, "conjugator")? {
        Value::Null => None,
        m => Some(mobius_from(m, &ring)?),
    };
    Ok(GroupFixture {
        family,
        domain,
        ring,
        generators,
        order: uint(v, "order")? as usize,
        extra_order: uint(v, "extra_order")? as usize,
        orbits,
        template,
        conjugator,
        caveats: strings(v, "caveats")?,
    })
}

/// Parse a whole catalog document.
pub fn catalog_from_json(v: &Value) -> Result<Vec<GroupFixture>> {
    if uint(v, "schema")? != CATALOG_SCHEMA {
        return Err(Error::Invalid("unsupported catalog schema".into()));
    }
    array(v, "fixtures")?.iter().map(fixture_from_json).collect()
}
