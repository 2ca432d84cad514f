use super::*;
use crate::expr::parse_elem;
use crate::invariants::invariants_general;

fn q() -> Ring {
    Ring::rationals()
}

fn poly(s: &str, r: &Ring) -> UniPoly {
    UniPoly::parse(s, r).unwrap()
}

fn fx(f: Family) -> GroupFixture {
    f.build().unwrap()
}

#[test]
fn closure_sizes() {
    let d3 = fx(Family::DihedralA(3));
    assert_eq!(group_elements(&d3.generators, 100).unwrap().len(), 6);
    let a4 = fx(Family::A4A);
    assert_eq!(group_elements(&a4.generators, 100).unwrap().len(), 12);
    let f3 = Ring::prime_field(3).unwrap();
    let shift = Mobius::from_ints(&f3, 1, 1, 0, 1).unwrap();
    assert_eq!(group_elements(&[shift], 10).unwrap().len(), 3);
    assert_eq!(group_elements(&a4.generators, 5), Err(Error::ClosureBound(5)));
}

#[test]
fn every_catalog_fixture_closes_at_its_order() {
    for f in standard_catalog().unwrap() {
        let els = group_elements(&f.generators, f.order + 1).unwrap();
        assert_eq!(els.len(), f.order, "{}", f.name());
    }
}

#[test]
fn catalog_orbits_and_templates_are_invariant() {
    for f in standard_catalog().unwrap() {
        let total: usize = f.orbits.iter().map(SpecialOrbit::size).sum();
        for o in &f.orbits {
            assert!(is_invariant_formal(&o.poly, o.size(), &f.generators).unwrap(), "{} {}", f.name(), o.name);
            assert_eq!(f.order % o.size(), 0, "{} {}", f.name(), o.name);
        }
        let _ = total;
        let t = &f.template.poly;
        assert_eq!(t.degree(), Some(f.order), "{}", f.name());
        let gens = f.generators_in(f.param_ring()).unwrap();
        assert!(is_invariant_formal(t, f.order, &gens).unwrap(), "{} template", f.name());
        // The forbidden orbits are exactly those through 0 or ∞.
        assert!(f.orbits.iter().any(SpecialOrbit::forbidden), "{}", f.name());
    }
}

#[test]
fn special_orbit_sizes() {
    let sizes = |f: Family| -> Vec<(String, usize)> {
        fx(f).orbits.iter().map(|o| (o.name.clone(), o.size())).collect()
    };
    let s = |v: &[(&str, usize)]| v.iter().map(|(a, b)| (a.to_string(), *b)).collect::<Vec<_>>();
    assert_eq!(sizes(Family::A4A), s(&[("B_0", 6), ("B_1", 4), ("B_2", 4)]));
    assert_eq!(sizes(Family::S4A), s(&[("B_0", 6), ("B_1", 8), ("B_2", 12)]));
    assert_eq!(sizes(Family::A5A), s(&[("B_inf", 12), ("B_0", 20), ("B_0*", 30)]));
    assert_eq!(sizes(Family::S4B), s(&[("B_0'", 6), ("B_1'", 8), ("B_2'", 12)]));
    assert_eq!(sizes(Family::A5C), s(&[("B_inf''", 12), ("B_0''", 20), ("B_0*''", 30)]));
    assert_eq!(sizes(Family::Pgl { p: 3, t: 2 }), s(&[("B_inf", 10), ("B_0", 72)]));
    let a5 = fx(Family::A5A);
    assert_eq!(a5.orbit("B_inf").unwrap().poly.degree(), Some(11));
}

#[test]
fn seeds_reproduce_special_orbits() {
    let d3 = fx(Family::DihedralA(3));
    let els = group_elements(&d3.generators, 10).unwrap();
    let k = &d3.ring;
    assert_eq!(orbit_polynomial(&els, &Point::Finite(k.one()), k).unwrap(), poly("x^3 - 1", k));
    assert_eq!(orbit_polynomial(&els, &Point::Finite(k.zero()), k).unwrap(), poly("x", k));
    assert_eq!(orbit_polynomial(&els, &Point::Infinity, k).unwrap(), poly("x", k));
    assert_eq!(orbit_points(&els, &Point::Finite(k.zero()), k).unwrap().len(), 2);
    // Seeds 0, ∞ and a rational point of each remaining orbit.
    let cases: Vec<(Family, &str, Option<&str>)> = vec![
        (Family::A4A, "B_0", None),
        (Family::S4A, "B_0", None),
        (Family::A5A, "B_inf", None),
        (Family::A5A, "B_inf", Some("0")),
        (Family::DihedralA(4), "B^-", Some("1")),
        (Family::Pgl { p: 3, t: 2 }, "B_inf", None),
        (Family::ElemAbelian { p: 3, t: 2, m: 4 }, "B_0", Some("0")),
    ];
    for (fam, name, seed) in cases {
        let f = fx(fam);
        let els = group_elements(&f.generators, f.order).unwrap();
        let seed = seed.map_or(Point::Infinity, |s| Point::Finite(parse_elem(s, &f.ring).unwrap()));
        let got = orbit_polynomial(&els, &seed, &f.ring).unwrap();
        assert_eq!(got, f.orbit(name).unwrap().poly, "{} {}", f.name(), name);
    }
}

#[test]
fn symbolic_seed_gives_the_dihedral_template() {
    let d3 = fx(Family::DihedralA(3));
    let kb = Ring::rational_functions(&d3.ring, &["b"]).unwrap();
    let els = group_elements(&d3.generators, 10).unwrap();
    let b = kb.param("b").unwrap();
    let got = orbit_polynomial(&els, &Point::Finite(b.clone()), &kb).unwrap();
    let b3 = kb.pow(&b, 3);
    let a = kb.neg(&kb.add(&b3, &kb.inv(&b3).unwrap()));
    let want = UniPoly::new(&kb, {
        let mut v = vec![kb.zero(); 7];
        v[0] = kb.one();
        v[3] = a;
        v[6] = kb.one();
        v
    });
    assert_eq!(got, want);
}

#[test]
fn invariance_examples() {
    let d3 = fx(Family::DihedralA(3));
    let qa = Ring::polynomials(&q(), &["a"]).unwrap();
    assert!(is_invariant(&poly("x^6 + a*x^3 + 1", &qa), &d3).unwrap());
    assert!(!is_invariant(&poly("x^4 + x + 1", &q()), &d3).unwrap());
    let s4 = fx(Family::S4A);
    assert!(is_invariant(&poly("x^8 + 14*x^4 + 1", &q()), &s4).unwrap());
    let ea = fx(Family::ElemAbelian { p: 3, t: 1, m: 2 });
    let f3 = Ring::prime_field(3).unwrap();
    assert!(is_invariant(&poly("x^3 - x", &f3), &ea).unwrap());
    assert_eq!(ea.template.poly, poly("(x^3 - x)^2 - a", ea.param_ring()));
}

#[test]
fn templates_print_as_families() {
    let s4 = fx(Family::S4A);
    let pr = s4.param_ring().clone();
    assert_eq!(s4.template.poly, poly("(x^8 + 14*x^4 + 1)^3 - a*(x^5 - x)^4", &pr));
    let a5 = fx(Family::A5A);
    let f0 = a5.orbit("B_inf").unwrap();
    assert_eq!(f0.poly, poly("x*(x^10 + 11*I*x^5 + 1)", &a5.ring));
}

#[test]
fn excluded_values_hit_special_orbits() {
    // g1^3 - 108 (x^5 - x)^4 = g2^2 and f1^3 + 1728 i f0^5 = f2^2.
    let s4 = fx(Family::S4A);
    let g2 = &s4.orbit("B_2").unwrap().poly;
    let lhs = poly("(x^8 + 14*x^4 + 1)^3 - 108*(x^5 - x)^4", &s4.ring);
    assert_eq!(lhs, g2.mul(g2).unwrap());
    let a5 = fx(Family::A5A);
    let (f0, f1, f2) = (&a5.orbits[0].poly, &a5.orbits[1].poly, &a5.orbits[2].poly);
    let k = &a5.ring;
    let lhs = f1.pow(3).unwrap().add(&f0.pow(5).unwrap().scale(&parse_elem("1728*I", k).unwrap())).unwrap();
    assert_eq!(lhs, f2.mul(f2).unwrap());
    for f in standard_catalog().unwrap() {
        for (v, orbit) in &f.template.excluded {
            let a = FieldValue::new(&f.ring, v.clone());
            assert_eq!(generic_template(&f, &a), Err(Error::ExcludedParameter(orbit.clone())), "{}", f.name());
        }
    }
}

#[test]
fn generic_recovery_for_every_template() {
    for f in standard_catalog().unwrap() {
        let a = FieldValue::from_i64(&f.ring, 5);
        let t = generic_template(&f, &a).unwrap();
        let rep = orbit_decomposition(&t, &f).unwrap();
        assert_eq!(rep.generic_count, 1, "{}", f.name());
        assert!(rep.counts.iter().all(|(_, c)| *c == 0), "{}", f.name());
        let Recovery::Exact(values) = &rep.recovery else {
            panic!("{}: {:?}", f.name(), rep.recovery);
        };
        assert!(values.contains(&a), "{}", f.name());
        assert!(rep.cofactor.is_constant());
        assert_eq!(rep.accounted_degree(&f), t.degree().unwrap());
    }
}

#[test]
fn a4_recovers_three_parameters() {
    let f = fx(Family::A4A);
    let t = generic_template(&f, &FieldValue::from_i64(&f.ring, 3)).unwrap();
    let Recovery::Exact(vals) = orbit_decomposition(&t, &f).unwrap().recovery else { panic!() };
    let mut got: Vec<String> = vals.iter().map(|v| v.to_string()).collect();
    got.sort();
    assert_eq!(got, vec!["-18", "-6/5", "3"]);
}

#[test]
fn decomposition_with_special_orbits() {
    let s4 = fx(Family::S4A);
    let pr = s4.param_ring().clone();
    let f = poly("(x^8 + 14*x^4 + 1)^3 - a*(x^5 - x)^4", &pr);
    let fr = Ring::rational_functions(&s4.ring, &["a"]).unwrap();
    let rep = orbit_decomposition(&f.embed(&fr).unwrap(), &s4).unwrap();
    assert_eq!((rep.count("B_1"), rep.count("B_2"), rep.generic_count), (0, 0, 1));
    let Recovery::Exact(v) = &rep.recovery else { panic!() };
    assert_eq!(v[0].to_string(), "a");

    let d3 = fx(Family::DihedralA(3));
    let rep = orbit_decomposition(&poly("x^3 - 1", &q()), &d3).unwrap();
    assert_eq!(rep.count("B^-"), 1);
    assert_eq!(rep.generic_count, 0);
    assert!(rep.cofactor.is_constant());

    let b = poly("(x^8 + 14*x^4 + 1)*(x^4 + 1)*(x^8 - 34*x^4 + 1)", &q());
    let rep = orbit_decomposition(&b, &s4).unwrap();
    assert_eq!((rep.count("B_1"), rep.count("B_2"), rep.generic_count), (1, 1, 0));

    let sq = poly("(x^8 + 14*x^4 + 1)^2", &q());
    assert!(matches!(orbit_decomposition(&sq, &s4), Err(Error::Invalid(_))));
    assert!(matches!(orbit_decomposition(&poly("x^4 + x + 1", &q()), &s4), Err(Error::NotInvariant(_))));
}

#[test]
fn a4_case_b_contains_the_worked_curve() {
    let f = fx(Family::A4B);
    let b1 = f.orbit("B_1").unwrap();
    assert!(!b1.infinity);
    assert_eq!(b1.poly, poly("x^6 + (25 - 15*sqrt(3))*x^3 - 26 + 15*sqrt(3)", &f.ring));
    let rep = orbit_decomposition(&b1.poly, &f).unwrap();
    assert_eq!((rep.count("B_1"), rep.generic_count), (1, 0));
    // The conjugated Case-A generators generate the same group as the shipped ones.
    let a = fx(Family::A4A);
    let q = f.conjugator.clone().unwrap();
    let conj: Vec<Mobius> = a
        .generators
        .iter()
        .map(|g| q.inverse().compose(g).unwrap().compose(&q).unwrap().normalized().unwrap())
        .collect();
    let mut g1: Vec<Mobius> = group_elements(&conj, 12).unwrap();
    let mut g2: Vec<Mobius> = group_elements(&f.generators, 12).unwrap();
    let key = |m: &Mobius| format!("{m:?}");
    g1.sort_by_key(key);
    g2.sort_by_key(key);
    assert_eq!(g1, g2);
}

#[test]
fn projective_groups_have_the_right_order() {
    let f = fx(Family::Pgl { p: 3, t: 2 });
    assert_eq!(group_elements(&f.generators, 800).unwrap().len(), 720);
    assert_eq!(f.extra_order, 8);
    let f = fx(Family::Psl { p: 7, t: 1 });
    assert_eq!(f.order, 168);
    assert_eq!(f.extra_order, 3);
}

#[test]
fn dihedral_symmetry_bridge() {
    // Products of D_δ orbits satisfy a_i = a_0 a_{r-i} in the normal-form coefficients.
    let d = 3;
    let f = fx(Family::DihedralA(d));
    let cases = ["(x^3 - 1)*(x^6 + 5*x^3 + 1)", "(x^6 - 2/3*x^3 + 1)*(x^6 + 7*x^3 + 1)", "(x^3 + 1)*(x^3 - 1)"];
    for s in cases {
        let p = poly(s, &q());
        assert!(is_invariant(&p, &f).unwrap());
        let deg = p.degree().unwrap();
        let r = deg / d;
        let a: Vec<_> = (0..=r).map(|i| p.coeff(i * d)).collect();
        let k = q();
        for i in 0..=r {
            assert_eq!(a[i], k.mul(&a[0], &a[r - i]), "{s} at {i}");
        }
    }
    let _ = invariants_general;
}

#[test]
fn classification_examples() {
    let a4 = fx(Family::A4A);
    let t = generic_template(&a4, &FieldValue::from_i64(&a4.ring, 3)).unwrap();
    let rep = orbit_decomposition(&t, &a4).unwrap();
    let c = classify(&a4, &rep, 2, 2).unwrap();
    assert_eq!(c.full_group.as_deref(), Some("Z/nZ × A_4"));
    assert_eq!(c.dimension, 1);
    assert_eq!(c.reduced_group, "A_4");

    let b1 = a4.orbit("B_1").unwrap().poly.mul(&t).unwrap();
    let rep = orbit_decomposition(&b1, &a4).unwrap();
    assert_eq!(classify(&a4, &rep, 4, 2).unwrap().full_group.as_deref(), Some("Z/3nZ × V_4"));

    let db = fx(Family::DihedralB(4));
    let b = db.orbit("B_1").unwrap().poly.clone();
    assert!(!db.orbit("B_1").unwrap().forbidden());
    let rep = orbit_decomposition(&b, &db).unwrap();
    assert_eq!(classify(&db, &rep, 2, 2).unwrap().full_group.as_deref(), Some("C_{nm} ⋊ C_2"));
    let t = generic_template(&db, &FieldValue::from_i64(&db.ring, 5)).unwrap();
    let rep = orbit_decomposition(&t, &db).unwrap();
    assert_eq!(classify(&db, &rep, 2, 2).unwrap().full_group.as_deref(), Some("C_n ⋊ D_m"));
    assert!(classify(&db, &rep, 3, 2).is_err());

    let s4b = fx(Family::S4B);
    let p = s4b.orbit("B_0'").unwrap().poly.mul(&s4b.orbit("B_2'").unwrap().poly).unwrap();
    let rep = orbit_decomposition(&p, &s4b).unwrap();
    let c = classify(&s4b, &rep, 6, 3).unwrap();
    assert!(c.full_group.unwrap().starts_with("⟨X,Y,T"));
    assert!(c.caveats.iter().any(|s| s.contains("k ∈")));
    assert_eq!(classify(&s4b, &rep, 12, 3).unwrap().full_group.as_deref(), Some("Z/nZ × S_4"));

    let d3 = fx(Family::DihedralA(3));
    let t = generic_template(&d3, &FieldValue::from_i64(&d3.ring, 5)).unwrap();
    let rep = orbit_decomposition(&t, &d3).unwrap();
    let c = classify(&d3, &rep, 3, 3).unwrap();
    assert_eq!((c.case, c.full_group.as_deref()), (Some(1), Some(G3)));
    let rep = orbit_decomposition(&d3.lift(&poly("x^3 - 1", &q())).unwrap().mul(&t).unwrap(), &d3).unwrap();
    assert_eq!(classify(&d3, &rep, 3, 3).unwrap().case, Some(3));
    assert!(classify(&d3, &rep, 3, 2).is_err());
    assert!(classify(&d3, &rep, 4, 3).is_err());
    assert!(classify(&a4, &rep, 3, 3).is_err());

    // A forbidden orbit in the branch locus contradicts the extra automorphism.
    let rep = OrbitReport {
        fixture: a4.name(),
        counts: vec![("B_0".into(), 1), ("B_1".into(), 0), ("B_2".into(), 0)],
        generic_count: 0,
        recovery: Recovery::NotAttempted,
        cofactor: UniPoly::one(&a4.ring),
        notes: Vec::new(),
    };
    assert!(matches!(classify(&a4, &rep, 2, 2), Err(Error::Inconsistent(_))));

    let pgl = fx(Family::Pgl { p: 3, t: 2 });
    let b0 = pgl.orbit("B_0").unwrap().poly.clone();
    let rep = orbit_decomposition(&b0, &pgl).unwrap();
    let c = classify(&pgl, &rep, 4, 4).unwrap();
    assert_eq!(c.full_group.as_deref(), Some("Z/nZ × G"));
    assert!(c.caveats.iter().any(|s| s.contains("p <= 5")));
}

#[test]
fn catalog_round_trips_through_json() {
    let cat = standard_catalog().unwrap();
    let v = catalog_json(&cat);
    let text = serde_json::to_string_pretty(&v).unwrap();
    let back = catalog_from_json(&serde_json::from_str(&text).unwrap()).unwrap();
    assert_eq!(back, cat);
    assert_eq!(serde_json::to_string_pretty(&catalog_json(&back)).unwrap(), text);
}

#[test]
fn family_names_round_trip() {
    for f in standard_families() {
        assert_eq!(Family::parse(&f.name()).unwrap(), f);
    }
    assert!(Family::parse("Q8").is_err());
}
