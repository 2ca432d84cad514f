//! Constructors for every fixture family.

use std::fmt;

use super::finite::{cyclotomic, format_in_t, irreducible_poly, primitive_element, rename_x};
use super::{FixtureDomain, GroupFixture, SpecialOrbit, Template};
use crate::error::{Error, Result};
use crate::expr::parse_elem;
use crate::rings::{is_prime, Elem, Ring};
use crate::unipoly::{Mobius, UniPoly};

const FIELD_CAVEAT: &str =
    "characteristic p <= 5 lies outside the hypotheses of the classification list; fixture built as in the PGL(2,9) example";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Cyclic(usize),
    DihedralA(usize),
    DihedralB(usize),
    A4A,
    A4B,
    S4A,
    S4B,
    S4C,
    A5A,
    A5B,
    A5C,
    ElemAbelian { p: u64, t: u32, m: usize },
    Psl { p: u64, t: u32 },
    Pgl { p: u64, t: u32 },
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl Family {
    pub fn name(&self) -> String {
        match *self {
            Family::Cyclic(d) => format!("Cyclic({d})"),
            Family::DihedralA(d) => format!("DihedralA({d})"),
            Family::DihedralB(m) => format!("DihedralB({m})"),
            Family::A4A => "A4_A".into(),
            Family::A4B => "A4_B".into(),
            Family::S4A => "S4_A".into(),
            Family::S4B => "S4_B".into(),
            Family::S4C => "S4_C".into(),
            Family::A5A => "A5_A".into(),
            Family::A5B => "A5_B".into(),
            Family::A5C => "A5_C".into(),
            Family::ElemAbelian { p, t, m } => format!("ElemAbelian({p},{t},{m})"),
            Family::Psl { p, t } => format!("PSL({p},{t})"),
            Family::Pgl { p, t } => format!("PGL({p},{t})"),
        }
    }

    /// Inverse of [`Family::name`].
    pub fn parse(s: &str) -> Result<Family> {
        let bad = || Error::Invalid(format!("unknown fixture family {s:?}"));
        let s = s.trim();
        let simple = match s {
            "A4_A" => Some(Family::A4A),
            "A4_B" => Some(Family::A4B),
            "S4_A" => Some(Family::S4A),
            "S4_B" => Some(Family::S4B),
            "S4_C" => Some(Family::S4C),
            "A5_A" => Some(Family::A5A),
            "A5_B" => Some(Family::A5B),
            "A5_C" => Some(Family::A5C),
            _ => None,
        };
        if let Some(f) = simple {
            return Ok(f);
        }
        let (head, rest) = s.split_once('(').ok_or_else(bad)?;
        let args: Vec<u64> = rest
            .strip_suffix(')')
            .ok_or_else(bad)?
            .split(',')
            .map(|a| a.trim().parse::<u64>().map_err(|_| bad()))
            .collect::<Result<_>>()?;
        match (head, args.as_slice()) {
            ("Cyclic", [d]) => Ok(Family::Cyclic(*d as usize)),
            ("DihedralA", [d]) => Ok(Family::DihedralA(*d as usize)),
            ("DihedralB", [m]) => Ok(Family::DihedralB(*m as usize)),
            ("ElemAbelian", [p, t, m]) => Ok(Family::ElemAbelian { p: *p, t: *t as u32, m: *m as usize }),
            ("PSL", [p, t]) => Ok(Family::Psl { p: *p, t: *t as u32 }),
            ("PGL", [p, t]) => Ok(Family::Pgl { p: *p, t: *t as u32 }),
            _ => Err(bad()),
        }
    }

    /// Name of the reduced automorphism group.
    pub fn reduced_group(&self) -> String {
        match *self {
            Family::Cyclic(d) => format!("C_{d}"),
            Family::DihedralA(d) => format!("D_{d}"),
            Family::DihedralB(m) => format!("D_{m}"),
            Family::A4A | Family::A4B => "A_4".into(),
            Family::S4A | Family::S4B | Family::S4C => "S_4".into(),
            Family::A5A | Family::A5B | Family::A5C => "A_5".into(),
            Family::ElemAbelian { p, t, m } => format!("(Z/{p}Z)^{t} ⋊ Z/{m}Z"),
            Family::Psl { p, t } => format!("PSL(2,{})", p.pow(t)),
            Family::Pgl { p, t } => format!("PGL(2,{})", p.pow(t)),
        }
    }

    pub fn build(&self) -> Result<GroupFixture> {
        match *self {
            Family::Cyclic(d) => cyclic(d),
            Family::DihedralA(d) => dihedral_a(d),
            Family::DihedralB(m) => dihedral_b(m),
            Family::A4A => a4_a(),
            Family::A4B => a4_b(),
            Family::S4A => s4_a(),
            Family::S4B => s4_b(),
            Family::S4C => s4_c(),
            Family::A5A => a5_a(),
            Family::A5B => a5_b(),
            Family::A5C => a5_c(),
            Family::ElemAbelian { p, t, m } => elem_abelian(p, t, m),
            Family::Psl { p, t } => projective(p, t, false),
            Family::Pgl { p, t } => projective(p, t, true),
        }
    }
}

fn sugar(names: &[&str]) -> FixtureDomain {
    FixtureDomain { characteristic: 0, sugar: names.iter().map(|s| s.to_string()).collect(), extensions: Vec::new() }
}

fn orbit(name: &str, text: &str, ring: &Ring, infinity: bool) -> Result<SpecialOrbit> {
    Ok(SpecialOrbit { name: name.into(), poly: UniPoly::parse(text, ring)?.monic()?, infinity })
}

fn template(ring: &Ring, text: &str, excluded: &[(&str, &str)]) -> Result<Template> {
    let pr = Ring::polynomials(ring, &["a"])?;
    let poly = UniPoly::parse(text, &pr)?;
    let excluded =
        excluded.iter().map(|(v, o)| Ok((parse_elem(v, ring)?, o.to_string()))).collect::<Result<_>>()?;
    Ok(Template { poly, excluded })
}

fn mobius(ring: &Ring, e: [&str; 4]) -> Result<Mobius> {
    Mobius::parse(e, ring)
}

fn diag(ring: &Ring, z: Elem) -> Result<Mobius> {
    Mobius::new(ring, z, ring.zero(), ring.zero(), ring.one())
}

/// `Q(ζ_d)` with `ζ` a primitive `d`-th root of unity.
fn cyclotomic_field(d: usize) -> Result<(FixtureDomain, Ring, Elem)> {
    if d < 2 {
        return Err(Error::Invalid(format!("order {d} must be at least 2")));
    }
    if d == 2 {
        let q = Ring::rationals();
        let z = q.from_i64(-1);
        return Ok((FixtureDomain::default(), q, z));
    }
    let phi = rename_x(&cyclotomic(d)?.to_string());
    let domain = FixtureDomain { characteristic: 0, sugar: Vec::new(), extensions: vec![("zeta".into(), phi)] };
    let ring = domain.build()?;
    let z = ring.generator()?;
    Ok((domain, ring, z))
}

fn cyclic(d: usize) -> Result<GroupFixture> {
    let (domain, ring, z) = cyclotomic_field(d)?;
    Ok(GroupFixture {
        family: Family::Cyclic(d),
        domain,
        generators: vec![diag(&ring, z)?],
        order: d,
        extra_order: d,
        orbits: vec![orbit("B_0", "x", &ring, false)?, orbit("B_inf", "1", &ring, true)?],
        template: template(&ring, &format!("x^{d} - a"), &[("0", "B_0")])?,
        ring,
        conjugator: None,
        caveats: vec!["no structure table covers a cyclic reduced group".into()],
    })
}

fn dihedral_a(d: usize) -> Result<GroupFixture> {
    let (domain, ring, z) = cyclotomic_field(d)?;
    Ok(GroupFixture {
        family: Family::DihedralA(d),
        domain,
        generators: vec![diag(&ring, z)?, Mobius::from_ints(&ring, 0, 1, 1, 0)?],
        order: 2 * d,
        extra_order: d,
        orbits: vec![
            orbit("B_inf", "x", &ring, true)?,
            orbit("B^-", &format!("x^{d} - 1"), &ring, false)?,
            orbit("B^+", &format!("x^{d} + 1"), &ring, false)?,
        ],
        template: template(&ring, &format!("x^{} + a*x^{d} + 1", 2 * d), &[("-2", "B^-"), ("2", "B^+")])?,
        ring,
        conjugator: None,
        caveats: Vec::new(),
    })
}

/// Transport a fixture through `q`: the new group is `q⁻¹ G q` and each orbit `O` becomes `q⁻¹(O)`.
#[allow(clippy::too_many_arguments)]
fn conjugate(
    src: &GroupFixture,
    family: Family,
    domain: FixtureDomain,
    ring: &Ring,
    q: Mobius,
    rename: impl Fn(&str, &SpecialOrbit) -> String,
    extra_order: usize,
    caveats: Vec<String>,
) -> Result<GroupFixture> {
    let qi = q.inverse();
    let generators = src
        .generators
        .iter()
        .map(|g| qi.compose(&g.embed(ring)?)?.compose(&q)?.normalized())
        .collect::<Result<_>>()?;
    let mut orbits = Vec::new();
    for o in &src.orbits {
        let n = o.size();
        let t = q.transport_formal(&o.poly.embed(ring)?, n)?;
        let infinity = t.degree() != Some(n);
        let mut new = SpecialOrbit { name: String::new(), poly: t.monic()?, infinity };
        new.name = rename(&o.name, &new);
        orbits.push(new);
    }
    let pr = Ring::polynomials(ring, &["a"])?;
    let qa = q.embed(&pr)?;
    let poly = qa.transport_formal(&src.template.poly.embed(&pr)?, src.order)?;
    let excluded = src
        .template
        .excluded
        .iter()
        .map(|(v, o)| Ok((ring.embed(&src.ring, v)?, rename(o, &orbits[src.orbits.iter().position(|s| s.name == *o).unwrap()]))))
        .collect::<Result<_>>()?;
    Ok(GroupFixture {
        family,
        domain,
        ring: ring.clone(),
        generators,
        order: src.order,
        extra_order,
        orbits,
        template: Template { poly, excluded },
        conjugator: Some(q),
        caveats,
    })
}

fn dihedral_b(m: usize) -> Result<GroupFixture> {
    let src = dihedral_a(m)?;
    let q = Mobius::from_ints(&src.ring, -1, 1, 1, 1)?;
    let rename = |old: &str, new: &SpecialOrbit| match old {
        "B_inf" => "B_1".to_string(),
        "B^-" => "B_0".to_string(),
        _ if new.infinity => "B_inf".to_string(),
        _ => "B_2".to_string(),
    };
    let caveats = vec!["the extra automorphism is x -> -x; requires n even".into()];
    conjugate(&src, Family::DihedralB(m), src.domain.clone(), &src.ring.clone(), q, rename, 2, caveats)
}

fn a4_ring() -> Result<(FixtureDomain, Ring)> {
    let domain = sugar(&["I", "sqrt(3)"]);
    let ring = domain.build()?;
    Ok((domain, ring))
}

fn a4_a() -> Result<GroupFixture> {
    let (domain, ring) = a4_ring()?;
    Ok(GroupFixture {
        family: Family::A4A,
        domain,
        generators: vec![Mobius::from_ints(&ring, -1, 0, 0, 1)?, mobius(&ring, ["I", "I", "1", "-1"])?],
        order: 12,
        extra_order: 2,
        orbits: vec![
            orbit("B_0", "x^5 - x", &ring, true)?,
            orbit("B_1", "x^4 - 2*I*sqrt(3)*x^2 + 1", &ring, false)?,
            orbit("B_2", "x^4 + 2*I*sqrt(3)*x^2 + 1", &ring, false)?,
        ],
        // Product over a_1 = a, a_2 = (2a + 12)/(2 - a), a_3 = (2a - 12)/(2 + a), cleared.
        template: template(
            &ring,
            "(x^4 - a*x^2 + 1)*((2 - a)*x^4 - (2*a + 12)*x^2 + 2 - a)*((2 + a)*x^4 - (2*a - 12)*x^2 + 2 + a)",
            &[("2", "B_0"), ("-2", "B_0"), ("2*I*sqrt(3)", "B_1"), ("-2*I*sqrt(3)", "B_2")],
        )?,
        ring,
        conjugator: None,
        caveats: vec!["the generic parameter is determined up to the three values a_1, a_2, a_3".into()],
    })
}

fn a4_b() -> Result<GroupFixture> {
    let src = a4_a()?;
    let ring = src.ring.clone();
    let e = |s: &str| parse_elem(s, &ring);
    // Q sends 0 and ∞ to the fixed points p± = (1+i)(1±√3)/2 of μ; k puts 1 into the 6-point orbit.
    let pp = e("(1 + I)*(1 + sqrt(3))/2")?;
    let pm = e("(1 + I)*(1 - sqrt(3))/2")?;
    let k = ring.div(&ring.sub(&ring.one(), &pp), &ring.sub(&pm, &ring.one()))?;
    let q = Mobius::new(&ring, pp, ring.mul(&k, &pm), ring.one(), k)?;
    let rename = |old: &str, new: &SpecialOrbit| match old {
        "B_0" => "B_1".to_string(),
        _ if new.infinity => "B_inf".to_string(),
        _ => "B_0".to_string(),
    };
    let caveats = vec![
        "generators are x -> ωx with ω = (-1 + i√3)/2 and the involution (x + √3 - 1)/((√3 + 1)x - 1)".into(),
        "the generic parameter is determined up to the three values a_1, a_2, a_3".into(),
    ];
    let mut f = conjugate(&src, Family::A4B, src.domain.clone(), &ring, q, rename, 3, caveats)?;
    f.generators = vec![
        diag(&ring, e("(-1 + I*sqrt(3))/2")?)?,
        mobius(&ring, ["1", "sqrt(3) - 1", "sqrt(3) + 1", "-1"])?,
    ];
    Ok(f)
}

fn s4_a() -> Result<GroupFixture> {
    let domain = sugar(&["I"]);
    let ring = domain.build()?;
    Ok(GroupFixture {
        family: Family::S4A,
        domain,
        generators: vec![mobius(&ring, ["I", "0", "0", "1"])?, mobius(&ring, ["I", "I", "1", "-1"])?],
        order: 24,
        extra_order: 4,
        orbits: vec![
            orbit("B_0", "x^5 - x", &ring, true)?,
            orbit("B_1", "x^8 + 14*x^4 + 1", &ring, false)?,
            orbit("B_2", "(x^4 + 1)*(x^8 - 34*x^4 + 1)", &ring, false)?,
        ],
        template: template(&ring, "(x^8 + 14*x^4 + 1)^3 - a*(x^5 - x)^4", &[("108", "B_2"), ("0", "B_1")])?,
        ring,
        conjugator: None,
        caveats: Vec::new(),
    })
}

fn primes(n: usize) -> impl Fn(&str, &SpecialOrbit) -> String {
    move |old, _| format!("{old}{}", "'".repeat(n))
}

fn s4_b() -> Result<GroupFixture> {
    let src = s4_a()?;
    let domain = sugar(&["I", "sqrt(3)"]);
    let ring = domain.build()?;
    let q = mobius(&ring, ["-(3 + sqrt(3))*sqrt(3)/3", "-(3 - sqrt(3))*sqrt(3)/3", "-(1 - I)", "1 - I"])?;
    let caveats = vec!["B_2' is the transport of the Case-A orbit (x^4 + 1)(x^8 - 34x^4 + 1)".into()];
    conjugate(&src, Family::S4B, domain, &ring, q, primes(1), 3, caveats)
}

fn s4_c() -> Result<GroupFixture> {
    let src = s4_a()?;
    let domain = sugar(&["I", "sqrt(2)"]);
    let ring = domain.build()?;
    let q = mobius(&ring, ["sqrt(2)/2*I*(2 + sqrt(2))", "sqrt(2)/2*I*(2 - sqrt(2))", "1", "-1"])?;
    conjugate(&src, Family::S4C, domain, &ring, q, primes(2), 2, Vec::new())
}

const XI: (&str, &str) = ("xi", "t^4 + t^3 + t^2 + t + 1");

fn a5_domain() -> FixtureDomain {
    FixtureDomain { characteristic: 0, sugar: vec!["I".into()], extensions: vec![(XI.0.into(), XI.1.into())] }
}

const F0: &str = "x^11 + 11*I*x^6 + x";
const F1: &str = "x^20 - 228*I*x^15 - 494*x^10 - 228*I*x^5 + 1";
const F2: &str = "x^30 + 522*I*x^25 + 10005*(x^20 - x^10) - 522*I*x^5 - 1";
const B: &str = "(-I*(xi + xi^4))";

fn a5_a() -> Result<GroupFixture> {
    let domain = a5_domain();
    let ring = domain.build()?;
    let rho = mobius(&ring, ["-1", &format!("-{B}"), B, "1"])?;
    Ok(GroupFixture {
        family: Family::A5A,
        domain,
        generators: vec![mobius(&ring, ["xi", "0", "0", "1"])?, rho],
        order: 60,
        extra_order: 5,
        orbits: vec![
            orbit("B_inf", F0, &ring, true)?,
            orbit("B_0", F1, &ring, false)?,
            orbit("B_0*", F2, &ring, false)?,
        ],
        template: template(&ring, &format!("({F1})^3 - a*({F0})^5"), &[("-1728*I", "B_0*"), ("0", "B_0")])?,
        ring,
        conjugator: None,
        caveats: Vec::new(),
    })
}

fn a5_b() -> Result<GroupFixture> {
    let src = a5_a()?;
    let ring = src.ring.clone();
    // √(10 - 2√5) = 2i(ξ³ - ξ²) and √5 = 1 + 2(ξ + ξ⁴).
    let s = "(2*I*(xi^3 - xi^2))";
    let r5 = "(1 + 2*(xi + xi^4))";
    let q = mobius(&ring, [&format!("I*({s} - 2)"), &format!("I*(2 + {s})"), &format!("{r5} - 1"), &format!("1 - {r5}")])?;
    let caveats = vec!["the radicals of Q are rewritten inside Q(ξ, i)".into()];
    conjugate(&src, Family::A5B, src.domain.clone(), &ring, q, primes(1), 2, caveats)
}

fn a5_c() -> Result<GroupFixture> {
    let src = a5_a()?;
    let k = &src.ring;
    // Fixed points of σρ solve w^2 + ((1 + ξ)/b) w + ξ = 0.
    let c = k.div(&parse_elem("1 + xi", k)?, &parse_elem(B, k)?)?;
    let minpoly = format!("t^2 + ({})*t + xi", k.format(&c));
    let mut domain = a5_domain();
    domain.extensions.push(("w".into(), minpoly));
    let ring = domain.build()?;
    let w = ring.generator()?;
    let w2 = ring.sub(&ring.neg(&ring.embed(k, &c)?), &w);
    let q = Mobius::new(&ring, w, w2, ring.one(), ring.one())?;
    let caveats = vec![
        "Q_1 is built from a formal fixed point w of σρ instead of nested radicals".into(),
        "the orbit of size 20 contains 0 and ∞ in these coordinates; the size-30 orbit does not contain ∞".into(),
    ];
    conjugate(&src, Family::A5C, domain, &ring, q, primes(2), 3, caveats)
}

/// `F_q` with `q = p^t`, its declaration and a primitive element.
fn finite_field(p: u64, t: u32) -> Result<(FixtureDomain, Ring, u64, Elem)> {
    if !is_prime(p) {
        return Err(Error::Invalid(format!("{p} is not prime")));
    }
    let irr = irreducible_poly(p, t)?;
    let q = p.pow(t);
    let mut domain = FixtureDomain { characteristic: p, sugar: Vec::new(), extensions: Vec::new() };
    if t > 1 {
        domain.extensions.push(("w".into(), format_in_t(p, &irr)?));
    }
    let ring = domain.build()?;
    let xi = primitive_element(&ring, q)?;
    Ok((domain, ring, q, xi))
}

fn x_q_minus_x(ring: &Ring, q: u64) -> UniPoly {
    UniPoly::new(ring, {
        let mut v = vec![ring.zero(); q as usize + 1];
        v[1] = ring.from_i64(-1);
        v[q as usize] = ring.one();
        v
    })
}

fn elem_abelian(p: u64, t: u32, m: usize) -> Result<GroupFixture> {
    let (domain, ring, q, xi) = finite_field(p, t)?;
    if m == 0 || (q - 1) % m as u64 != 0 {
        return Err(Error::Invalid(format!("m = {m} must divide q - 1 = {}", q - 1)));
    }
    let mut generators = Vec::new();
    let mut basis = ring.one();
    for _ in 0..t {
        generators.push(Mobius::new(&ring, ring.one(), basis.clone(), ring.zero(), ring.one())?);
        if t > 1 {
            basis = ring.mul(&basis, &ring.generator()?);
        }
    }
    if m > 1 {
        generators.push(diag(&ring, ring.pow(&xi, (q - 1) / m as u64))?);
    }
    let pr = Ring::polynomials(&ring, &["a"])?;
    let h = x_q_minus_x(&pr, q);
    let poly = h.pow(m as u32)?.sub(&UniPoly::constant(&pr, pr.param("a")?))?;
    let caveats = if p <= 5 { vec![FIELD_CAVEAT.to_string()] } else { Vec::new() };
    Ok(GroupFixture {
        family: Family::ElemAbelian { p, t, m },
        domain,
        generators,
        order: q as usize * m,
        extra_order: m,
        orbits: vec![
            SpecialOrbit { name: "B_inf".into(), poly: UniPoly::one(&ring), infinity: true },
            SpecialOrbit { name: "B_0".into(), poly: x_q_minus_x(&ring, q), infinity: false },
        ],
        template: Template { poly, excluded: vec![(ring.zero(), "B_0".into())] },
        ring,
        conjugator: None,
        caveats,
    })
}

fn projective(p: u64, t: u32, full: bool) -> Result<GroupFixture> {
    if p == 2 {
        return Err(Error::Invalid("PSL/PGL fixtures need odd characteristic".into()));
    }
    let (domain, ring, q, xi) = finite_field(p, t)?;
    let qs = q as usize;
    let (sigma, tau) = if full {
        (diag(&ring, xi)?, Mobius::from_ints(&ring, 0, 1, 1, 0)?)
    } else {
        (diag(&ring, ring.mul(&xi, &xi))?, Mobius::from_ints(&ring, 0, -1, 1, 0)?)
    };
    let phi = Mobius::from_ints(&ring, 1, 1, 0, 1)?;
    let order = if full { qs * (qs * qs - 1) } else { qs * (qs * qs - 1) / 2 };
    let (e1, e2) = if full { (qs + 1, qs * (qs - 1)) } else { (qs.div_ceil(2), qs * (qs - 1) / 2) };
    let cap = order.max(crate::unipoly::DEFAULT_MAX_DEGREE);
    if order > crate::unipoly::DEFAULT_MAX_DEGREE {
        return Err(Error::DegreeCap { degree: order, cap: crate::unipoly::DEFAULT_MAX_DEGREE });
    }
    let pr = Ring::polynomials(&ring, &["a"])?;
    let h = x_q_minus_x(&pr, q);
    let b0 = h.pow_with_cap((qs - 1) as u32, cap)?.add(&UniPoly::one(&pr))?;
    let poly = b0
        .pow_with_cap(e1 as u32, cap)?
        .sub(&h.pow_with_cap(e2 as u32, cap)?.scale(&pr.param("a")?))?;
    let mut caveats = vec![
        "B_inf is {∞} together with the roots of x^q - x, all of F_q".to_string(),
        "Case B (extra automorphism of order dividing q + 1) ships only the transport matrix -i(x + 1)/(x - 1)".into(),
    ];
    if p <= 5 {
        caveats.push(FIELD_CAVEAT.into());
    }
    let hk = x_q_minus_x(&ring, q);
    Ok(GroupFixture {
        family: if full { Family::Pgl { p, t } } else { Family::Psl { p, t } },
        domain,
        generators: vec![sigma, tau, phi],
        order,
        extra_order: if full { qs - 1 } else { (qs - 1) / 2 },
        orbits: vec![
            SpecialOrbit { name: "B_inf".into(), poly: hk.clone(), infinity: true },
            SpecialOrbit { name: "B_0".into(), poly: hk.pow_with_cap((qs - 1) as u32, cap)?.add(&UniPoly::one(&ring))?, infinity: false },
        ],
        template: Template { poly, excluded: vec![(ring.zero(), "B_0".into())] },
        ring,
        conjugator: None,
        caveats,
    })
}
