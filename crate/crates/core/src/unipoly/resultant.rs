use super::UniPoly;
use crate::error::{Error, Result};
use crate::rings::{Elem, FieldValue, MPoly, Ring, RingKind};

/// Determinant of the Sylvester matrix of `f` and `g`.
pub fn resultant(f: &UniPoly, g: &UniPoly) -> Result<FieldValue> {
    let (Some(m), Some(n)) = (f.degree(), g.degree()) else {
        return Err(Error::Invalid("resultant of the zero polynomial".into()));
    };
    resultant_formal(f, m, g, n)
}

/// Sylvester resultant with formal degrees `m >= deg f`, `n >= deg g`.
pub fn resultant_formal(f: &UniPoly, m: usize, g: &UniPoly, n: usize) -> Result<FieldValue> {
    let ring = f.ring().clone();
    if *g.ring() != ring {
        return Err(Error::DomainMismatch(format!("{} vs {}", f.ring(), g.ring())));
    }
    if f.degree().is_some_and(|d| d > m) || g.degree().is_some_and(|d| d > n) {
        return Err(Error::Invalid("formal degree below actual degree".into()));
    }
    if let RingKind::Frac { poly } = ring.kind() {
        // Clear denominators and work fraction-free over the polynomial ring.
        let (fp, df) = clear_denominators(f, poly)?;
        let (gp, dg) = clear_denominators(g, poly)?;
        let det = resultant_over_domain(&fp, m, &gp, n)?;
        let det = ring.embed(poly, &det)?;
        let scale = ring.mul(&ring.pow(&df, n as u64), &ring.pow(&dg, m as u64));
        return Ok(FieldValue::new(&ring, ring.div(&det, &scale)?));
    }
    Ok(FieldValue::new(&ring, resultant_over_domain(f, m, g, n)?))
}

/// Subresultant PRS over polynomial rings when the formal degrees are the actual ones,
/// Bareiss on the Sylvester matrix otherwise.
fn resultant_over_domain(f: &UniPoly, m: usize, g: &UniPoly, n: usize) -> Result<Elem> {
    let r = f.ring();
    if matches!(r.kind(), RingKind::Poly { .. }) && f.degree() == Some(m) && g.degree() == Some(n) && m > 0 && n > 0 {
        return subresultant(f.coeffs().to_vec(), g.coeffs().to_vec(), r);
    }
    bareiss_det(sylvester(f, m, g, n), r)
}

fn degree(a: &[Elem], r: &Ring) -> Option<usize> {
    a.iter().rposition(|c| !r.is_zero(c))
}

/// `lc(b)^{deg a - deg b + 1} a mod b`, coefficients from the constant term up.
fn pseudo_rem(a: &[Elem], b: &[Elem], r: &Ring) -> Vec<Elem> {
    let db = degree(b, r).expect("nonzero divisor");
    let lb = &b[db];
    let mut rem = a.to_vec();
    let mut e = degree(a, r).map_or(0, |da| da + 1 - db);
    while let Some(d) = degree(&rem, r).filter(|&d| d >= db) {
        let lr = rem[d].clone();
        for c in rem.iter_mut() {
            *c = r.mul(c, lb);
        }
        for (i, bc) in b.iter().enumerate().take(db) {
            let t = &mut rem[d - db + i];
            *t = r.sub(t, &r.mul(&lr, bc));
        }
        rem[d] = r.zero();
        e -= 1;
    }
    let scale = r.pow(lb, e as u64);
    rem.truncate(db);
    rem.iter().map(|c| r.mul(c, &scale)).collect()
}

/// Resultant of two polynomials of positive degree over an integral domain.
fn subresultant(mut a: Vec<Elem>, mut b: Vec<Elem>, r: &Ring) -> Result<Elem> {
    let mut sign = false;
    let (mut da, mut db) = (degree(&a, r).unwrap(), degree(&b, r).unwrap());
    if da < db {
        std::mem::swap(&mut a, &mut b);
        std::mem::swap(&mut da, &mut db);
        sign ^= da % 2 == 1 && db % 2 == 1;
    }
    let (mut g, mut h) = (r.one(), r.one());
    // Invariant: Res(A, B) times the accumulated sign and scaling is the answer.
    loop {
        let delta = (da - db) as u64;
        sign ^= da % 2 == 1 && db % 2 == 1;
        let rem = pseudo_rem(&a, &b, r);
        let Some(dr) = degree(&rem, r) else {
            return Ok(r.zero());
        };
        let den = r.mul(&g, &r.pow(&h, delta));
        let next = rem[..=dr].iter().map(|c| r.div(c, &den)).collect::<Result<Vec<_>>>()?;
        a = std::mem::replace(&mut b, next);
        da = db;
        db = dr;
        g = a[da].clone();
        h = match delta {
            0 => h,
            1 => g.clone(),
            _ => r.div(&r.pow(&g, delta), &r.pow(&h, delta - 1))?,
        };
        if db == 0 {
            // h^{1 - deg A} lc(B)^{deg A}
            let v = r.pow(&b[0], da as u64);
            let v = if da == 0 { r.mul(&v, &h) } else { r.div(&v, &r.pow(&h, da as u64 - 1))? };
            return Ok(if sign { r.neg(&v) } else { v });
        }
    }
}

/// Rewrite `f` over the polynomial ring as `D * f` and return the common denominator `D`.
fn clear_denominators(f: &UniPoly, poly: &Ring) -> Result<(UniPoly, Elem)> {
    let frac = f.ring();
    let base = match poly.kind() {
        RingKind::Poly { base, .. } => base,
        _ => unreachable!(),
    };
    let k = poly.vars().len();
    let mut d = MPoly::constant(base.one(), k);
    for c in f.coeffs() {
        let Elem::Frac(x) = c else { unreachable!() };
        if x.1 != d && !x.1.is_constant() {
            let g = MPoly::gcd(&d, &x.1, base, k)?;
            d = d.mul(&x.1, base).div_exact(&g, base).expect("gcd divides");
        }
    }
    let de = frac.embed(poly, &Elem::Poly(d.clone()))?;
    let coeffs = f
        .coeffs()
        .iter()
        .map(|c| {
            let Elem::Frac(x) = frac.mul(c, &de) else { unreachable!() };
            debug_assert!(x.1.is_constant());
            Ok(Elem::Poly(x.0.clone()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((UniPoly::new(poly, coeffs), de))
}

fn sylvester(f: &UniPoly, m: usize, g: &UniPoly, n: usize) -> Vec<Vec<Elem>> {
    let r = f.ring();
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        let mut row = vec![r.zero(); size];
        for j in 0..=m {
            row[i + j] = f.coeff(m - j);
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![r.zero(); size];
        for j in 0..=n {
            row[i + j] = g.coeff(n - j);
        }
        rows.push(row);
    }
    rows
}

/// Fraction-free Gaussian elimination with row pivoting over an integral domain.
pub(crate) fn bareiss_det(mut a: Vec<Vec<Elem>>, r: &Ring) -> Result<Elem> {
    let n = a.len();
    if n == 0 {
        return Ok(r.one());
    }
    let mut sign = false;
    let mut prev = r.one();
    for k in 0..n - 1 {
        if r.is_zero(&a[k][k]) {
            let Some(p) = (k + 1..n).find(|&i| !r.is_zero(&a[i][k])) else {
                return Ok(r.zero());
            };
            a.swap(k, p);
            sign = !sign;
        }
        let (top, rest) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        let pivot = &pivot_row[k];
        for row in rest.iter_mut() {
            let lead = row[k].clone();
            for j in k + 1..n {
                let mut v = r.mul(&row[j], pivot);
                if !r.is_zero(&lead) && !r.is_zero(&pivot_row[j]) {
                    v = r.sub(&v, &r.mul(&lead, &pivot_row[j]));
                }
                row[j] = if r.is_one(&prev) { v } else { r.div(&v, &prev)? };
            }
            row[k] = r.zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    Ok(if sign { r.neg(&det) } else { det })
}

/// Resultant by the Euclidean algorithm; the coefficient ring must be a field
/// (polynomial rings are lifted to their fraction field).
pub fn resultant_euclid(f: &UniPoly, g: &UniPoly) -> Result<FieldValue> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::Invalid("resultant of the zero polynomial".into()));
    }
    let orig = f.ring().clone();
    let field = orig.fraction_field()?;
    let (mut f, mut g) = (f.embed(&field)?, g.embed(&field)?);
    let r = &field;
    let mut acc = r.one();
    loop {
        let (m, n) = (f.degree().unwrap(), g.degree().unwrap());
        if n == 0 {
            acc = r.mul(&acc, &r.pow(&g.coeff(0), m as u64));
            break;
        }
        let rem = f.rem(&g)?;
        let Some(dr) = rem.degree() else {
            acc = r.zero();
            break;
        };
        if (m * n) % 2 == 1 {
            acc = r.neg(&acc);
        }
        acc = r.mul(&acc, &r.pow(g.lc().unwrap(), (m - dr) as u64));
        f = std::mem::replace(&mut g, rem);
    }
    if field == orig {
        return Ok(FieldValue::new(&field, acc));
    }
    // Polynomial-ring input: the resultant is a polynomial again.
    match acc {
        Elem::Frac(x) if x.1.is_constant() && x.1 == MPoly::constant(orig.poly_base().one(), orig.vars().len()) => {
            Ok(FieldValue::new(&orig, Elem::Poly(x.0)))
        }
        _ => Err(Error::Internal("resultant left the coefficient ring".into())),
    }
}

/// `(-1)^{d(d-1)/2} Res(f, f') / lc(f)` with `f'` read at formal degree `d - 1`.
pub fn discriminant(f: &UniPoly) -> Result<FieldValue> {
    let d = match f.degree() {
        Some(d) if d >= 2 => d,
        _ => return Err(Error::Invalid("discriminant needs degree at least 2".into())),
    };
    let r = f.ring();
    let res = resultant_formal(f, d, &f.derivative(), d - 1)?;
    let mut v = r.div(res.elem(), f.lc().unwrap())?;
    if (d * (d - 1) / 2) % 2 == 1 {
        v = r.neg(&v);
    }
    Ok(FieldValue::new(r, v))
}
