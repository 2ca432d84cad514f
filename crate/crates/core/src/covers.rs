//! Cyclic covers `y^n = prod g_j(x)^{d_j}`: genus, δ-forms, normal forms and merging.

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::rings::{rational_root, Elem, FieldValue, Ring, RingKind};
use crate::unipoly::{resultant, UniPoly};

/// `y^n = prod g_j^{d_j}` with squarefree, pairwise coprime `g_j` and `0 < d_j < n`.
#[derive(Clone, Debug)]
pub struct CyclicCover {
    ring: Ring,
    n: u32,
    factors: Vec<(UniPoly, u32)>,
}

impl CyclicCover {
    pub fn new(n: u32, factors: Vec<(UniPoly, u32)>) -> Result<CyclicCover> {
        if n < 2 {
            return Err(Error::Invalid(format!("n = {n} must be at least 2")));
        }
        let Some(ring) = factors.first().map(|(g, _)| g.ring().clone()) else {
            return Err(Error::Invalid("no branch factors".into()));
        };
        let p = ring.characteristic();
        if p != 0 && (n as u64).is_multiple_of(p) {
            return Err(Error::Characteristic(p));
        }
        for (i, (g, d)) in factors.iter().enumerate() {
            if *g.ring() != ring {
                return Err(Error::DomainMismatch(format!("{} vs {}", g.ring(), ring)));
            }
            if *d == 0 || *d >= n {
                return Err(Error::Invalid(format!("exponent {d} outside 0 < d < {n}")));
            }
            if g.degree().unwrap_or(0) == 0 {
                return Err(Error::Invalid("branch factors must be nonconstant".into()));
            }
            if !g.is_squarefree()? {
                return Err(Error::Invalid(format!("branch factor {g} is not squarefree")));
            }
            for (h, _) in &factors[..i] {
                if resultant(g, h)?.is_zero() {
                    return Err(Error::SharedBranchPoint);
                }
            }
        }
        Ok(CyclicCover { ring, n, factors })
    }

    /// Read an expanded polynomial as a single factor with exponent 1.
    pub fn from_expanded(n: u32, f: UniPoly) -> Result<CyclicCover> {
        CyclicCover::new(n, vec![(f, 1)])
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn factors(&self) -> &[(UniPoly, u32)] {
        &self.factors
    }

    /// Number of finite branch points.
    pub fn s(&self) -> u64 {
        self.factors.iter().map(|(g, _)| g.degree().unwrap() as u64).sum()
    }

    /// Degree of the defining polynomial.
    pub fn d(&self) -> u64 {
        self.factors.iter().map(|(g, d)| g.degree().unwrap() as u64 * *d as u64).sum()
    }

    /// Ramification indices `n / gcd(n, d_j)` of the finite factors.
    pub fn ramification(&self) -> Vec<u64> {
        let n = self.n as u64;
        self.factors.iter().map(|(_, d)| n / n.gcd(&(*d as u64))).collect()
    }

    /// Ramification index over infinity; 1 when `n | d`.
    pub fn ramification_at_infinity(&self) -> u64 {
        let n = self.n as u64;
        n / n.gcd(&self.d())
    }

    /// True when every branch point is totally ramified and infinity is not a branch point.
    pub fn within_eq2_hypotheses(&self) -> bool {
        let n = self.n as u64;
        self.ramification().iter().all(|&e| e == n) && self.d().is_multiple_of(n)
    }

    /// Genus by tame Riemann-Hurwitz.
    pub fn genus(&self) -> Result<u64> {
        let n = self.n as i64;
        let mut twice = -2 * n;
        for (g, d) in &self.factors {
            twice += g.degree().unwrap() as i64 * (n - n.gcd(&(*d as i64)));
        }
        twice += n - n.gcd(&(self.d() as i64));
        // 2g - 2 = twice
        if twice < -2 || twice % 2 != 0 {
            return Err(Error::Internal(format!("Riemann-Hurwitz gave 2g - 2 = {twice}")));
        }
        Ok(((twice + 2) / 2) as u64)
    }

    /// Human-readable notes on inputs outside the complete-ramification setting.
    pub fn warnings(&self) -> Vec<String> {
        let mut w = Vec::new();
        if !self.within_eq2_hypotheses() {
            w.push("outside the complete-ramification hypotheses; genus from tame Riemann-Hurwitz".into());
        }
        w
    }

    /// `2n < s`: the Galois group is then normal in the automorphism group.
    ///
    /// `false` means "not guaranteed". Only meaningful with all `d_j = 1`.
    pub fn normality_hint(&self) -> bool {
        self.factors.iter().all(|(_, d)| *d == 1) && 2 * (self.n as u64) < self.s()
    }

    /// The defining polynomial `prod g_j^{d_j}`.
    pub fn polynomial(&self) -> Result<UniPoly> {
        let mut f = UniPoly::one(&self.ring);
        for (g, d) in &self.factors {
            f = f.mul(&g.pow(*d)?)?;
        }
        Ok(f)
    }
}

/// All `δ` with `f` a polynomial in `x^δ`.
pub fn admissible_deltas(f: &UniPoly) -> Result<Vec<usize>> {
    let Some(deg) = f.degree() else {
        return Err(Error::Invalid("zero polynomial".into()));
    };
    if deg == 0 {
        return Err(Error::Invalid("constant polynomial".into()));
    }
    if f.ring().is_zero(&f.coeff(0)) {
        return Err(Error::Invalid("zero constant term: 0 is a branch point; recenter first".into()));
    }
    let g = (1..=deg).filter(|&k| !f.ring().is_zero(&f.coeff(k))).fold(0usize, |acc, k| acc.gcd(&k));
    Ok((1..=g).filter(|k| g % k == 0).collect())
}

/// `f(x + c)`.
pub fn recenter(f: &UniPoly, c: &Elem) -> Result<UniPoly> {
    f.compose(&UniPoly::new(f.ring(), vec![c.clone(), f.ring().one()]))
}

/// `f(x) = sum a_i x^{δ i}` with `a_0 != 0 != a_r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DeltaForm {
    ring: Ring,
    delta: usize,
    coeffs: Vec<Elem>,
}

impl DeltaForm {
    pub fn new(ring: &Ring, delta: usize, coeffs: Vec<Elem>) -> Result<DeltaForm> {
        if delta == 0 {
            return Err(Error::Invalid("δ must be positive".into()));
        }
        if coeffs.len() < 2 {
            return Err(Error::Invalid("a δ-form needs r >= 1".into()));
        }
        if ring.is_zero(&coeffs[0]) || ring.is_zero(coeffs.last().unwrap()) {
            return Err(Error::Invalid("a_0 and a_r must be nonzero".into()));
        }
        Ok(DeltaForm { ring: ring.clone(), delta, coeffs })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn delta(&self) -> usize {
        self.delta
    }

    pub fn r(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn a(&self, i: usize) -> FieldValue {
        FieldValue::new(&self.ring, self.coeffs[i].clone())
    }

    /// `a_0 = a_r = 1`.
    pub fn is_normalized(&self) -> bool {
        self.ring.is_one(&self.coeffs[0]) && self.ring.is_one(self.coeffs.last().unwrap())
    }

    /// `sum a_i x^{δ i}`.
    pub fn to_poly(&self) -> UniPoly {
        self.reduced().inflate(self.delta)
    }

    /// `sum a_i y^i`.
    pub fn reduced(&self) -> UniPoly {
        UniPoly::new(&self.ring, self.coeffs.clone())
    }

    /// Coefficients printed low to high.
    pub fn format_coeffs(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| self.ring.format(c)).collect()
    }
}

/// Coefficient vector of `f` as a polynomial in `x^δ`.
pub fn delta_form(f: &UniPoly, delta: usize) -> Result<DeltaForm> {
    if !admissible_deltas(f)?.contains(&delta) {
        return Err(Error::Invalid(format!("δ = {delta} is not admissible for {f}")));
    }
    let r = f.degree().unwrap() / delta;
    DeltaForm::new(f.ring(), delta, (0..=r).map(|i| f.coeff(i * delta)).collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NormalStatus {
    /// `a_0 = a_r = 1`.
    Normal,
    /// Monic, but no `(δr)`-th root of `a_0` was found in the domain.
    RootFree,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalizationRecord {
    /// The original `a_r`, divided out.
    pub scale: FieldValue,
    /// `λ` with `λ^{δr} = a_0` of the monic form, when found.
    pub lambda: Option<FieldValue>,
    pub status: NormalStatus,
}

/// Monicize, then rescale `x -> λx` with `λ^{δr} = a_0` when such `λ` is found.
pub fn normalize(df: &DeltaForm) -> Result<(DeltaForm, NormalizationRecord)> {
    normalize_inner(df, None)
}

/// As [`normalize`], with a caller-supplied candidate root `λ` of the monic `a_0`.
pub fn normalize_with_witness(df: &DeltaForm, lambda: &FieldValue) -> Result<(DeltaForm, NormalizationRecord)> {
    normalize_inner(df, Some(lambda))
}

fn normalize_inner(df: &DeltaForm, witness: Option<&FieldValue>) -> Result<(DeltaForm, NormalizationRecord)> {
    let r = &df.ring;
    let ar = df.coeffs.last().unwrap().clone();
    let monic: Vec<Elem> = if r.is_one(&ar) {
        df.coeffs.clone()
    } else {
        df.coeffs.iter().map(|c| r.div(c, &ar)).collect::<Result<_>>()?
    };
    let scale = FieldValue::new(r, ar);
    let a0 = monic[0].clone();
    let n = (df.delta * df.r()) as u64;
    if r.is_one(&a0) {
        let out = DeltaForm { ring: r.clone(), delta: df.delta, coeffs: monic };
        let lambda = Some(FieldValue::new(r, r.one()));
        return Ok((out, NormalizationRecord { scale, lambda, status: NormalStatus::Normal }));
    }
    let lambda = match witness {
        Some(w) => {
            let w = w.embed(r)?;
            if r.pow(w.elem(), n) != a0 {
                return Err(Error::Invalid(format!("witness {w} is not a root of a_0 of order {n}")));
            }
            Some(w.into_elem())
        }
        None => find_root(r, &a0, n),
    };
    let Some(lambda) = lambda else {
        let out = DeltaForm { ring: r.clone(), delta: df.delta, coeffs: monic };
        return Ok((out, NormalizationRecord { scale, lambda: None, status: NormalStatus::RootFree }));
    };
    // a_i' = λ^{δ(i-r)} a_i
    let mu_inv = r.inv(&r.pow(&lambda, df.delta as u64))?;
    let mut coeffs = Vec::with_capacity(monic.len());
    let mut factor = r.pow(&mu_inv, df.r() as u64);
    for c in &monic {
        coeffs.push(r.mul(c, &factor));
        factor = r.div(&factor, &mu_inv)?;
    }
    let out = DeltaForm { ring: r.clone(), delta: df.delta, coeffs };
    debug_assert!(out.is_normalized());
    let lambda = Some(FieldValue::new(r, lambda));
    Ok((out, NormalizationRecord { scale, lambda, status: NormalStatus::Normal }))
}

/// An exact `n`-th root of `a` in the domain, for the cases handled without new extensions.
fn find_root(r: &Ring, a: &Elem, n: u64) -> Option<Elem> {
    if let Some(q) = r.as_rational(a) {
        let root = rational_root(&q, u32::try_from(n).ok()?)?;
        return r.from_rational(&root).ok();
    }
    if let RingKind::PrimeField(p) = r.kind() {
        if *p <= 1 << 16 {
            return (1..*p).map(|v| r.from_i64(v as i64)).find(|c| r.pow(c, n) == *a);
        }
    }
    None
}

/// Product of two δ-forms with disjoint branch points (the map Φ).
///
/// The result is normalized when both inputs are.
pub fn merge(a: &DeltaForm, b: &DeltaForm) -> Result<DeltaForm> {
    if a.ring != b.ring {
        return Err(Error::DomainMismatch(format!("{} vs {}", a.ring, b.ring)));
    }
    if a.delta != b.delta {
        return Err(Error::Invalid(format!("δ differs: {} vs {}", a.delta, b.delta)));
    }
    // Res(f_a, f_b) = ±Res(g_a, g_b)^δ for f = g(x^δ).
    let (ga, gb) = (a.reduced(), b.reduced());
    if resultant(&ga, &gb)?.is_zero() {
        return Err(Error::SharedBranchPoint);
    }
    let prod = ga.mul(&gb)?;
    DeltaForm::new(&a.ring, a.delta, prod.coeffs().to_vec())
}
