//! Command dispatch for the `cyclic-covers` binary.
//!
//! Every run prints one JSON document with `"schema": 1`. Values are canonical
//! strings, keys are sorted, so equal inputs give byte-identical output.

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Map, Value};

use cyclic_covers::covers::{self, normalize, CyclicCover, DeltaForm, NormalStatus};
use cyclic_covers::expr::{parse_elem, DomainSpec};
use cyclic_covers::groups::{self, Family, Recovery};
use cyclic_covers::invariants::{self, Component, Convention, InvariantVector};
use cyclic_covers::moduli;
use cyclic_covers::rings::rational_root;
use cyclic_covers::unipoly::{self, Point};
use cyclic_covers::{Error, ErrorClass, FieldValue, Mobius, Ring, UniPoly};

pub const SCHEMA: u64 = 1;

#[derive(Parser, Debug)]
#[command(name = "cyclic-covers", version, about = "Exact algebra for cyclic covers y^n = f(x)")]
pub struct Cli {
    #[command(flatten)]
    pub domain: DomainArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct DomainArgs {
    /// Parameter names (repeatable or comma separated); inferred from the input when absent.
    #[arg(long = "param", global = true, value_delimiter = ',')]
    pub params: Vec<String>,
    /// Extension `name:minpoly in t`, adjoined in the order given.
    #[arg(long = "ext", global = true)]
    pub extensions: Vec<String>,
    /// 0 for Q, else a prime p for F_p.
    #[arg(long = "char", global = true, default_value_t = 0)]
    pub characteristic: u64,
    /// Refuse polynomials above this degree.
    #[arg(long = "max-degree", global = true, default_value_t = 4096)]
    pub max_degree: usize,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Genus of y^n = prod f_j^{d_j}.
    Genus {
        #[arg(long)]
        n: u32,
        /// Exponents d_j, comma separated; all 1 by default.
        #[arg(long, value_delimiter = ',')]
        exponents: Vec<u32>,
        #[arg(required = true)]
        polys: Vec<String>,
    },
    /// Every δ for which f is a polynomial in x^δ.
    Deltas { poly: String },
    /// Dihedral invariants of a δ-form, normalized first.
    Invariants {
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        delta: usize,
        /// `r-i` (standard) or `r-1`.
        #[arg(long, default_value = "r-i")]
        convention: String,
        #[arg(long, default_value_t = 1)]
        shift: usize,
        poly: String,
    },
    /// Automorphism-locus test from a δ-form or from explicit invariants.
    Locus {
        #[arg(long)]
        delta: usize,
        /// Invariants u_1,...,u_r instead of a polynomial.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        u: Vec<String>,
        poly: Option<String>,
    },
    /// Orbit decomposition and automorphism group against a fixture.
    Classify {
        #[arg(long)]
        fixture: String,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        delta: u64,
        poly: String,
    },
    /// Fixture data, orbit polynomials and generic templates.
    Orbit {
        #[arg(long)]
        fixture: Option<String>,
        /// Seed point (`inf` for ∞) whose orbit polynomial is printed.
        #[arg(long)]
        seed: Option<String>,
        /// Parameter value for the generic template.
        #[arg(long)]
        a: Option<String>,
        /// Print the whole shipped catalog.
        #[arg(long)]
        catalog: bool,
    },
    /// Transport (cx+d)^n f((ax+b)/(cx+d)).
    Transport {
        /// Entries `a,b,c,d`.
        #[arg(long, allow_hyphen_values = true)]
        matrix: String,
        #[arg(long = "formal-degree")]
        formal_degree: Option<usize>,
        poly: String,
    },
    /// Product of two δ-forms with disjoint branch points.
    Merge {
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        delta: usize,
        f: String,
        g: String,
    },
    /// Model over the field of the invariants, with round-trip check.
    Reconstruct {
        #[arg(long)]
        delta: usize,
        #[arg(long, value_delimiter = ',', required = true, allow_hyphen_values = true)]
        u: Vec<String>,
    },
    Discriminant { poly: String },
    Resultant { f: String, g: String },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Genus { .. } => "genus",
            Command::Deltas { .. } => "deltas",
            Command::Invariants { .. } => "invariants",
            Command::Locus { .. } => "locus",
            Command::Classify { .. } => "classify",
            Command::Orbit { .. } => "orbit",
            Command::Transport { .. } => "transport",
            Command::Merge { .. } => "merge",
            Command::Reconstruct { .. } => "reconstruct",
            Command::Discriminant { .. } => "discriminant",
            Command::Resultant { .. } => "resultant",
        }
    }
}

/// What the process prints and returns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

pub fn exit_code(e: &Error) -> i32 {
    match e.class() {
        ErrorClass::Validation => 2,
        ErrorClass::Precondition => 3,
        ErrorClass::Parse => 4,
    }
}

fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

/// Parse `args` (including the program name) and run the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return Outcome { stdout: e.to_string(), code: 0 };
            }
            let v = json!({
                "schema": SCHEMA,
                "command": Value::Null,
                "error": { "kind": "usage", "message": e.to_string().trim_end() },
            });
            return Outcome { stdout: render(&v), code: 2 };
        }
    };
    let name = cli.command.name();
    let mut warnings = Vec::new();
    match execute(&cli, &mut warnings) {
        Ok(result) => {
            let v = json!({ "schema": SCHEMA, "command": name, "result": result, "warnings": warnings });
            Outcome { stdout: render(&v), code: 0 }
        }
        Err(e) => {
            let code = exit_code(&e);
            let v = json!({
                "schema": SCHEMA,
                "command": name,
                "error": { "kind": e.kind(), "message": e.to_string() },
                "warnings": warnings,
            });
            Outcome { stdout: render(&v), code }
        }
    }
}

/// The coefficient domain for a request, built from every text it contains.
struct Domain {
    ring: Ring,
    max_degree: usize,
}

impl Domain {
    fn new(args: &DomainArgs, texts: &[&str]) -> cyclic_covers::Result<Domain> {
        let extensions = args
            .extensions
            .iter()
            .map(|e| {
                e.split_once(':')
                    .map(|(n, m)| (n.trim().to_string(), m.trim().to_string()))
                    .ok_or_else(|| Error::Invalid(format!("extension {e:?} is not name:minpoly")))
            })
            .collect::<cyclic_covers::Result<_>>()?;
        let spec = DomainSpec {
            characteristic: args.characteristic,
            extensions,
            params: if args.params.is_empty() { None } else { Some(args.params.clone()) },
        };
        Ok(Domain { ring: spec.build(texts)?, max_degree: args.max_degree })
    }

    fn poly(&self, s: &str) -> cyclic_covers::Result<UniPoly> {
        let f = UniPoly::parse(s, &self.ring)?;
        self.check_degree(f.degree().unwrap_or(0))?;
        Ok(f)
    }

    fn value(&self, s: &str) -> cyclic_covers::Result<FieldValue> {
        Ok(FieldValue::new(&self.ring, parse_elem(s, &self.ring)?))
    }

    fn check_degree(&self, d: usize) -> cyclic_covers::Result<()> {
        if d > self.max_degree {
            return Err(Error::DegreeCap { degree: d, cap: self.max_degree });
        }
        Ok(())
    }
}

fn strings(v: &[impl ToString]) -> Value {
    Value::Array(v.iter().map(|s| Value::String(s.to_string())).collect())
}

fn parse_convention(s: &str) -> cyclic_covers::Result<Convention> {
    match s {
        "r-i" => Ok(Convention::RMinusI),
        "r-1" => Ok(Convention::RMinusOne),
        _ => Err(Error::Invalid(format!("convention {s:?} is neither r-i nor r-1"))),
    }
}

/// Warn when a parametric discriminant can vanish, which lowers the genus.
fn discriminant_warning(f: &UniPoly, warnings: &mut Vec<String>) -> cyclic_covers::Result<()> {
    if f.ring().vars().is_empty() && !matches!(f.ring().kind(), cyclic_covers::rings::RingKind::Frac { .. }) {
        return Ok(());
    }
    if f.degree().unwrap_or(0) < 2 {
        return Ok(());
    }
    let d = unipoly::discriminant(f)?;
    if d.ring().as_rational(d.elem()).is_none() && d.ring().as_residue(d.elem()).is_none() {
        warnings.push(format!("valid for generic parameters; {f} acquires repeated roots where {d} = 0"));
    }
    Ok(())
}

fn cover_json(c: &CyclicCover) -> cyclic_covers::Result<Value> {
    Ok(json!({
        "n": c.n(),
        "s": c.s(),
        "d": c.d(),
        "genus": c.genus()?,
        "ramification": c.ramification(),
        "ramification_at_infinity": c.ramification_at_infinity(),
        "normality_hint": c.normality_hint(),
    }))
}

/// Normalize `f` as a δ-form and compute its invariants.
fn form_invariants(
    f: &UniPoly,
    delta: usize,
    convention: Convention,
    shift: usize,
    warnings: &mut Vec<String>,
) -> cyclic_covers::Result<(DeltaForm, Value, InvariantVector)> {
    let df = covers::delta_form(f, delta)?;
    let (nf, rec) = normalize(&df)?;
    let record = json!({
        "scale": rec.scale.to_string(),
        "lambda": rec.lambda.as_ref().map(ToString::to_string),
        "status": match rec.status { NormalStatus::Normal => "normal", NormalStatus::RootFree => "root-free" },
    });
    let u = match rec.status {
        NormalStatus::Normal if shift == 1 => invariants::invariants_with_convention(&nf, convention)?,
        NormalStatus::Normal => invariants::shifted_invariants(&nf, shift, convention)?,
        NormalStatus::RootFree => {
            if shift != 1 || convention != Convention::RMinusI {
                return Err(Error::Invalid("shifted or r-1 invariants need a normal form; a_0 has no root here".into()));
            }
            warnings.push("a_0 has no (δr)-th root in the domain; invariants of the normal form computed without it".into());
            invariants::invariants_general(&nf)?
        }
    };
    warnings.extend(u.warnings.iter().cloned());
    Ok((nf, record, u))
}

fn execute(cli: &Cli, warnings: &mut Vec<String>) -> cyclic_covers::Result<Value> {
    let dargs = &cli.domain;
    match &cli.command {
        Command::Genus { n, exponents, polys } => {
            let texts: Vec<&str> = polys.iter().map(String::as_str).collect();
            let dom = Domain::new(dargs, &texts)?;
            if !exponents.is_empty() && exponents.len() != polys.len() {
                return Err(Error::Invalid("one exponent per factor".into()));
            }
            let mut factors = Vec::new();
            for (i, p) in polys.iter().enumerate() {
                let f = dom.poly(p)?;
                discriminant_warning(&f, warnings)?;
                factors.push((f, exponents.get(i).copied().unwrap_or(1)));
            }
            let c = CyclicCover::new(*n, factors)?;
            warnings.extend(c.warnings());
            let mut v = cover_json(&c)?;
            v["ring"] = json!(dom.ring.to_string());
            Ok(v)
        }
        Command::Deltas { poly } => {
            let dom = Domain::new(dargs, &[poly])?;
            let f = dom.poly(poly)?;
            Ok(json!({ "ring": dom.ring.to_string(), "deltas": covers::admissible_deltas(&f)? }))
        }
        Command::Invariants { n, delta, convention, shift, poly } => {
            let dom = Domain::new(dargs, &[poly])?;
            let f = dom.poly(poly)?;
            let conv = parse_convention(convention)?;
            let (nf, record, u) = form_invariants(&f, *delta, conv, *shift, warnings)?;
            let mut v = json!({
                "ring": dom.ring.to_string(),
                "delta": delta,
                "r": u.r,
                "normal_form": strings(&nf.format_coeffs()),
                "normalization": record,
                "convention": conv.tag(),
                "shift": u.shift,
                "u": strings(&u.format_values()),
            });
            if let Some(n) = n {
                let c = CyclicCover::from_expanded(*n, f.clone())?;
                if !n.is_multiple_of(*delta as u32) {
                    warnings.push(format!("δ = {delta} does not divide n = {n}: x -> ζx does not lift to an automorphism of order δ"));
                }
                v["genus"] = json!(c.genus()?);
            }
            Ok(v)
        }
        Command::Locus { delta, u, poly } => {
            let mut texts: Vec<&str> = u.iter().map(String::as_str).collect();
            if let Some(p) = poly {
                texts.push(p);
            }
            let dom = Domain::new(dargs, &texts)?;
            let inv = match (poly, u.is_empty()) {
                (Some(p), true) => form_invariants(&dom.poly(p)?, *delta, Convention::RMinusI, 1, warnings)?.2,
                (None, false) => {
                    let vals = u.iter().map(|s| Ok(dom.value(s)?.into_elem())).collect::<cyclic_covers::Result<_>>()?;
                    let inv = InvariantVector::from_values(&dom.ring, *delta, vals)?;
                    warnings.extend(inv.warnings.iter().cloned());
                    inv
                }
                _ => return Err(Error::Invalid("give either a polynomial or --u, not both".into())),
            };
            let rep = invariants::locus_test(&inv)?;
            for w in &rep.warnings {
                if !warnings.contains(w) {
                    warnings.push(w.clone());
                }
            }
            Ok(json!({
                "r": inv.r,
                "u": strings(&inv.format_values()),
                "higher_cyclic": rep.higher_cyclic,
                "dihedral": rep.dihedral,
                "dihedral_defect": rep.dihedral_defect.to_string(),
                "component": match rep.component { Component::None => Value::Null, c => json!(c.tag()) },
                "component_defects": rep.component_defects.as_ref().map(|(p, m)| json!({ "plus": p.to_string(), "minus": m.to_string() })),
                "degenerate_r2": rep.degenerate_r2,
            }))
        }
        Command::Classify { fixture, n, delta, poly } => {
            let fx = Family::parse(fixture)?.build()?;
            let dom = Domain::new(dargs, &[poly])?;
            let f = dom.poly(poly)?;
            let rep = groups::orbit_decomposition(&f, &fx)?;
            let aut = groups::classify(&fx, &rep, *n, *delta)?;
            let counts: Vec<Value> = rep.counts.iter().map(|(o, c)| json!({ "orbit": o, "count": c })).collect();
            let recovery = match &rep.recovery {
                Recovery::Exact(vals) => json!({ "kind": "exact", "values": strings(vals) }),
                Recovery::Polynomial(p) => json!({ "kind": "polynomial", "in_a": p.to_string() }),
                Recovery::NotAttempted => json!({ "kind": "not-attempted" }),
            };
            warnings.extend(rep.notes.iter().cloned());
            warnings.extend(aut.caveats.iter().cloned());
            Ok(json!({
                "fixture": aut.fixture,
                "reduced_group": aut.reduced_group,
                "counts": counts,
                "generic_count": rep.generic_count,
                "recovery": recovery,
                "cofactor": rep.cofactor.to_string(),
                "full_group": aut.full_group,
                "dimension": aut.dimension,
                "case": aut.case,
                "n": n,
                "delta": delta,
            }))
        }
        Command::Orbit { fixture, seed, a, catalog } => {
            if *catalog {
                return Ok(groups::catalog_json(&groups::standard_catalog()?));
            }
            let name = fixture.as_deref().ok_or_else(|| Error::Invalid("--fixture or --catalog is required".into()))?;
            let fx = Family::parse(name)?.build()?;
            let mut v = Map::new();
            v.insert("fixture".into(), json!(fx.name()));
            v.insert("ring".into(), json!(fx.ring.to_string()));
            if let Some(s) = seed {
                let els = groups::group_elements(&fx.generators, fx.order)?;
                let point = if s.trim() == "inf" {
                    Point::Infinity
                } else {
                    Point::Finite(parse_elem(s, &fx.ring)?)
                };
                let pts = groups::orbit_points(&els, &point, &fx.ring)?;
                let f = groups::orbit_polynomial(&els, &point, &fx.ring)?;
                v.insert("orbit_size".into(), json!(pts.len()));
                v.insert("contains_infinity".into(), json!(pts.contains(&Point::Infinity)));
                v.insert("polynomial".into(), json!(f.to_string()));
            }
            if let Some(a) = a {
                let val = FieldValue::new(&fx.ring, parse_elem(a, &fx.ring)?);
                v.insert("template".into(), json!(groups::generic_template(&fx, &val)?.to_string()));
            }
            if seed.is_none() && a.is_none() {
                return Ok(groups::fixture_to_json(&fx));
            }
            Ok(Value::Object(v))
        }
        Command::Transport { matrix, formal_degree, poly } => {
            let matrix: Vec<&str> = matrix.split(',').map(str::trim).collect();
            let [a, b, c, d] = matrix[..] else {
                return Err(Error::Invalid("--matrix takes four entries a,b,c,d".into()));
            };
            let mut texts = matrix.clone();
            texts.push(poly);
            let dom = Domain::new(dargs, &texts)?;
            let f = dom.poly(poly)?;
            let m = Mobius::parse([a, b, c, d], &dom.ring)?;
            let n = formal_degree.unwrap_or_else(|| f.degree().unwrap_or(0));
            dom.check_degree(n)?;
            let t = m.transport_formal(&f, n)?;
            if t.degree() != Some(n) {
                warnings.push(format!("degree dropped from {n}: the matrix sends a root to infinity"));
            }
            Ok(json!({ "ring": dom.ring.to_string(), "matrix": m.to_string(), "formal_degree": n, "result": t.to_string() }))
        }
        Command::Merge { n, delta, f, g } => {
            let dom = Domain::new(dargs, &[f, g])?;
            let (pf, pg) = (dom.poly(f)?, dom.poly(g)?);
            dom.check_degree(pf.degree().unwrap_or(0) + pg.degree().unwrap_or(0))?;
            let m = covers::merge(&covers::delta_form(&pf, *delta)?, &covers::delta_form(&pg, *delta)?)?;
            let prod = m.to_poly();
            let mut v = json!({
                "ring": dom.ring.to_string(),
                "delta": delta,
                "r": m.r(),
                "coefficients": strings(&m.format_coeffs()),
                "product": prod.to_string(),
                "normalized": m.is_normalized(),
            });
            if let Some(n) = n {
                v["genus"] = json!(CyclicCover::from_expanded(*n, prod)?.genus()?);
            }
            Ok(v)
        }
        Command::Reconstruct { delta, u } => {
            let texts: Vec<&str> = u.iter().map(String::as_str).collect();
            let dom = Domain::new(dargs, &texts)?;
            let vals = u.iter().map(|s| Ok(dom.value(s)?.into_elem())).collect::<cyclic_covers::Result<_>>()?;
            let inv = InvariantVector::from_values(&dom.ring, *delta, vals)?;
            warnings.extend(inv.warnings.iter().cloned());
            let m = moduli::reconstruct(&inv, *delta)?;
            let verified = moduli::verify_roundtrip(&m)?;
            if !verified {
                warnings.push("round trip failed: u does not come from a curve with dihedral reduced group".into());
            }
            let mut v = json!({
                "ring": m.ring.to_string(),
                "root": m.root,
                "coefficients": strings(&m.format_coeffs()),
                "polynomial": m.delta_form()?.to_poly().to_string(),
                "verified": verified,
            });
            // A rational r-th root of u_1/2 gives a model over the base field.
            let k = &m.u.ring;
            let half = k.div(&m.u.values[0], &k.from_i64(2))?;
            if let Some(c) = k.as_rational(&half).and_then(|q| rational_root(&q, m.r() as u32)) {
                let c = FieldValue::new(k, k.from_rational(&c)?);
                let df = moduli::specialize(&m, &c)?;
                v["specialized"] = json!({ "root": c.to_string(), "polynomial": df.to_poly().to_string() });
            }
            Ok(v)
        }
        Command::Discriminant { poly } => {
            let dom = Domain::new(dargs, &[poly])?;
            let f = dom.poly(poly)?;
            Ok(json!({ "ring": dom.ring.to_string(), "discriminant": unipoly::discriminant(&f)?.to_string() }))
        }
        Command::Resultant { f, g } => {
            let dom = Domain::new(dargs, &[f, g])?;
            let r = unipoly::resultant(&dom.poly(f)?, &dom.poly(g)?)?;
            Ok(json!({ "ring": dom.ring.to_string(), "resultant": r.to_string() }))
        }
    }
}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/cli.md")]
mod book_cli {}
