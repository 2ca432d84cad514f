use super::*;
use crate::expr::DomainSpec;
use proptest::prelude::*;

fn qa() -> Ring {
    Ring::rational_functions(&Ring::rationals(), &["a"]).unwrap()
}

fn p(s: &str, r: &Ring) -> UniPoly {
    UniPoly::parse(s, r).unwrap()
}

fn small_poly(r: &Ring, cs: &[i64]) -> UniPoly {
    UniPoly::from_ints(r, cs)
}

#[test]
fn arithmetic_examples() {
    let q = Ring::rationals();
    assert_eq!(p("x^3 - 1", &q).mul(&p("x^3 + 1", &q)).unwrap(), p("x^6 - 1", &q));
    let r = qa();
    let (quo, rem) = p("x^6 + a*x^3 + 1", &r).divrem(&p("x^3 - 1", &r)).unwrap();
    assert_eq!(quo, p("x^3 + a + 1", &r));
    assert_eq!(rem, p("a + 2", &r));
    let z = p("x - 1", &q).add(&p("1 - x", &q)).unwrap();
    assert!(z.is_zero() && z.degree().is_none());
    assert!(matches!(p("x", &q).divrem(&UniPoly::zero(&q)), Err(Error::DivisionByZero)));
    assert!(matches!(p("x", &q).add(&p("x", &r)), Err(Error::DomainMismatch(_))));
}

#[test]
fn compose_examples() {
    let q = Ring::rationals();
    assert_eq!(p("x^2 + 1", &q).compose(&p("x^3", &q)).unwrap(), p("x^6 + 1", &q));
    let f = p("3*x^4 - x + 7", &q);
    assert_eq!(f.compose(&UniPoly::x(&q)).unwrap(), f);
    let r = qa();
    assert_eq!(p("x^2 + a*x + 1", &r).compose(&p("x + 1", &r)).unwrap(), p("x^2 + (2 + a)*x + 2 + a", &r));
}

#[test]
fn degree_cap() {
    let q = Ring::rationals();
    let f = UniPoly::monomial(&q, q.one(), 3000);
    assert!(matches!(f.mul(&f), Err(Error::DegreeCap { degree: 6000, cap: 4096 })));
    assert!(f.mul_with_cap(&f, 8000).is_ok());
    assert!(matches!(f.compose(&p("x^2", &q)), Err(Error::DegreeCap { .. })));
}

#[test]
fn transport_examples() {
    let r = qa();
    let f = p("x^2 + a*x + 1", &r);
    assert_eq!(Mobius::identity(&r).transport(&f).unwrap(), f);
    let inv = Mobius::from_ints(&r, 0, 1, 1, 0).unwrap();
    assert_eq!(inv.transport(&f).unwrap(), f);
    assert_eq!(inv.transport(&p("x", &r)).unwrap(), UniPoly::one(&r));
    assert!(matches!(Mobius::from_ints(&r, 1, 2, 2, 4), Err(Error::SingularMatrix)));
}

#[test]
fn mobius_points() {
    let q = Ring::rationals();
    let m = Mobius::from_ints(&q, 1, 1, 1, -1).unwrap();
    assert_eq!(m.apply(&Point::Finite(q.one())).unwrap(), Point::Infinity);
    assert_eq!(m.apply(&Point::Infinity).unwrap(), Point::Finite(q.one()));
    let mm = m.compose(&m).unwrap();
    assert!(mm.is_identity());
    assert!(m.compose(&m.inverse()).unwrap().is_identity());
}

fn arb_poly(max_deg: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-5i64..=5, 1..=max_deg + 1)
}

fn arb_mobius() -> impl Strategy<Value = [i64; 4]> {
    [-3i64..=3, -3i64..=3, -3i64..=3, -3i64..=3].prop_filter("singular", |m| m[0] * m[3] != m[1] * m[2])
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, .. ProptestConfig::default() })]

    // Transport by M then N equals transport by the product M*N (formal degree: exactly;
    // actual degree: up to a scalar when no root is sent to infinity).
    #[test]
    fn transport_composes(cs in arb_poly(6), m in arb_mobius(), n in arb_mobius()) {
        let q = Ring::rationals();
        let f = small_poly(&q, &cs);
        prop_assume!(!f.is_zero());
        let d = f.degree().unwrap();
        let mm = Mobius::from_ints(&q, m[0], m[1], m[2], m[3]).unwrap();
        let nn = Mobius::from_ints(&q, n[0], n[1], n[2], n[3]).unwrap();
        let mn = mm.compose(&nn).unwrap();
        let two = nn.transport_formal(&mm.transport_formal(&f, d).unwrap(), d).unwrap();
        prop_assert_eq!(&two, &mn.transport_formal(&f, d).unwrap());
        let step = mm.transport(&f).unwrap();
        if step.degree() == Some(d) {
            let lhs = nn.transport(&step).unwrap();
            let rhs = mn.transport(&f).unwrap();
            if lhs.degree() == Some(d) && rhs.degree() == Some(d) {
                prop_assert!(lhs.proportional(&rhs).is_some());
            }
        }
    }

    #[test]
    fn transport_scalar_invariance(cs in arb_poly(6), m in arb_mobius(), l in 1i64..5) {
        let q = Ring::rationals();
        let f = small_poly(&q, &cs);
        prop_assume!(!f.is_zero());
        let mm = Mobius::from_ints(&q, m[0], m[1], m[2], m[3]).unwrap();
        let scaled = mm.scale(&q.from_i64(-l)).unwrap();
        prop_assert!(mm.transport(&f).unwrap().proportional(&scaled.transport(&f).unwrap()).is_some());
    }

    #[test]
    fn degree_is_additive(a in arb_poly(6), b in arb_poly(6)) {
        let q = Ring::rationals();
        let (f, g) = (small_poly(&q, &a), small_poly(&q, &b));
        prop_assume!(!f.is_zero() && !g.is_zero());
        prop_assert_eq!(f.mul(&g).unwrap().degree(), Some(f.degree().unwrap() + g.degree().unwrap()));
    }

    #[test]
    fn resultant_antisymmetry_and_routes(a in arb_poly(4), b in arb_poly(4)) {
        let q = Ring::rationals();
        let (f, g) = (small_poly(&q, &a), small_poly(&q, &b));
        prop_assume!(!f.is_zero() && !g.is_zero());
        let (m, n) = (f.degree().unwrap(), g.degree().unwrap());
        let rfg = resultant(&f, &g).unwrap();
        let rgf = resultant(&g, &f).unwrap();
        let expect = if (m * n) % 2 == 1 { rgf.neg() } else { rgf };
        prop_assert_eq!(&rfg, &expect);
        prop_assert_eq!(&rfg, &resultant_euclid(&f, &g).unwrap());
    }

    #[test]
    fn subresultant_matches_euclid_over_q_a(a in prop::collection::vec((-3i64..=3, -2i64..=2), 1..7),
                                           b in prop::collection::vec((-3i64..=3, -2i64..=2), 1..6)) {
        // Q[a] takes the subresultant route, Q(a) the Euclidean one.
        let qa = Ring::polynomials(&Ring::rationals(), &["a"]).unwrap();
        let poly = |cs: &[(i64, i64)]| {
            let s: Vec<String> = cs.iter().enumerate().map(|(i, (c, d))| format!("({c} + {d}*a)*x^{i}")).collect();
            UniPoly::parse(&s.join(" + "), &qa).unwrap()
        };
        let (f, g) = (poly(&a), poly(&b));
        prop_assume!(f.degree().is_some_and(|d| d > 0) && g.degree().is_some_and(|d| d > 0));
        prop_assert_eq!(resultant(&f, &g).unwrap(), resultant_euclid(&f, &g).unwrap());
    }
}

#[test]
fn resultant_examples() {
    let q = Ring::rationals();
    let two = FieldValue::from_i64(&q, 2);
    assert_eq!(resultant(&p("x - 1", &q), &p("x + 1", &q)).unwrap(), two);
    assert_eq!(resultant(&p("x^2 - 1", &q), &p("x^2 - 4", &q)).unwrap(), FieldValue::from_i64(&q, 9));
    assert!(resultant(&p("x^2 - 1", &q), &p("x - 1", &q)).unwrap().is_zero());
    assert!(resultant(&UniPoly::zero(&q), &p("x", &q)).is_err());
}

/// Brute force: `Res(f, g) = lc(f)^{deg g} * prod g(rho)` over the roots of `f`.
#[test]
fn resultant_matches_root_products() {
    let q = Ring::rationals();
    let roots = [-2i64, -1, 0, 1, 3];
    let gs = [vec![1, 1], vec![-3, 0, 2], vec![5, -1, 0, 1], vec![1, 2, 3, 4, 5]];
    for deg in 1..=4usize {
        // All multisets of roots of size `deg`.
        let mut idx = vec![0usize; deg];
        loop {
            let mut f = UniPoly::constant(&q, q.from_i64(2));
            for &i in &idx {
                f = f.mul(&small_poly(&q, &[-roots[i], 1])).unwrap();
            }
            for gc in &gs {
                let g = small_poly(&q, gc);
                let mut prod = q.pow(f.lc().unwrap(), g.degree().unwrap() as u64);
                for &i in &idx {
                    prod = q.mul(&prod, &g.eval(&q.from_i64(roots[i])));
                }
                assert_eq!(resultant(&f, &g).unwrap().elem(), &prod, "f = {f}, g = {g}");
            }
            // Next nondecreasing index vector.
            let mut k = deg;
            while k > 0 && idx[k - 1] == roots.len() - 1 {
                k -= 1;
            }
            if k == 0 {
                break;
            }
            idx[k - 1] += 1;
            let v = idx[k - 1];
            for j in idx.iter_mut().skip(k) {
                *j = v;
            }
        }
    }
}

#[test]
fn discriminants_match_closed_forms() {
    let r = qa();
    assert_eq!(discriminant(&p("x^2 + a*x + 1", &r)).unwrap().to_string(), "a^2 - 4");
    let d6 = discriminant(&p("x^6 + a*x^3 + 1", &r)).unwrap();
    let e6 = crate::expr::parse_elem("3^6*(a^2 - 4)^3", &r).unwrap();
    assert_eq!(d6.elem(), &e6);
    let rb = Ring::rational_functions(&Ring::rationals(), &["a", "b"]).unwrap();
    let d9 = discriminant(&p("x^9 + a*x^6 + b*x^3 + 1", &rb)).unwrap();
    let e9 = crate::expr::parse_elem("3^9*(27 - 18*b*a - b^2*a^2 + 4*a^3 + 4*b^3)^3", &rb).unwrap();
    assert_eq!(d9.elem(), &e9);
    assert!(discriminant(&p("x + 1", &r)).is_err());
}

#[test]
fn discriminant_routes_agree_on_parametric_input() {
    // Euclid over Q(a, b) against Bareiss over Q[a, b].
    let rb = Ring::rational_functions(&Ring::rationals(), &["a", "b"]).unwrap();
    let f = p("x^4 + a*x^3 - b*x + 2", &rb);
    let bareiss = resultant(&f, &f.derivative()).unwrap();
    let euclid = resultant_euclid(&f, &f.derivative()).unwrap();
    assert_eq!(bareiss, euclid);
}

#[test]
fn squarefree_examples() {
    assert!(p("x^6 + a*x^3 + 1", &qa()).is_squarefree().unwrap());
    let q = Ring::rationals();
    assert!(!p("(x - 1)^2", &q).is_squarefree().unwrap());
    let f3 = Ring::prime_field(3).unwrap();
    assert!(p("x^3 - x", &f3).is_squarefree().unwrap());
    assert!(!p("x^3 + 1", &f3).is_squarefree().unwrap());
    let qi = DomainSpec::default().build(&["I"]).unwrap();
    assert!(!p("(x - I)^2*(x + 1)", &qi).is_squarefree().unwrap());
}

#[test]
fn proportional_examples() {
    let q = Ring::rationals();
    assert_eq!(p("2*x^2 + 2", &q).proportional(&p("x^2 + 1", &q)), Some(FieldValue::from_i64(&q, 2)));
    assert_eq!(p("x^2 + 1", &q).proportional(&p("x^2 - 1", &q)), None);
    let z = UniPoly::zero(&q);
    assert_eq!(z.proportional(&z), Some(FieldValue::from_i64(&q, 1)));
    assert_eq!(z.proportional(&p("x", &q)), None);
}

#[test]
fn rational_roots() {
    let q = Ring::rationals();
    let f = p("(x - 3)*(x + 18)*(5*x + 6)*(x^2 + 1)", &q);
    let roots: Vec<String> = f.rational_roots().unwrap().iter().map(|r| r.to_string()).collect();
    assert_eq!(roots, ["-18", "-6/5", "3"]);
}
