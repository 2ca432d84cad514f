//! Dihedral invariants of δ-forms and the automorphism-locus test.

use crate::covers::DeltaForm;
use crate::error::{Error, Result};
use crate::rings::{Elem, FieldValue, Ring};

/// Exponent convention of `u_i = a_e^{k} a_i + a_{r-e}^{k} a_{r-i}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Convention {
    /// `k = r - i`; the standard dihedral invariants.
    RMinusI,
    /// `k = r - 1`; the variant under which the blow-up relation holds.
    RMinusOne,
}

impl Convention {
    pub fn tag(self) -> &'static str {
        match self {
            Convention::RMinusI => "r-i",
            Convention::RMinusOne => "r-1",
        }
    }

    fn exponent(self, r: usize, i: usize) -> u64 {
        match self {
            Convention::RMinusI => (r - i) as u64,
            Convention::RMinusOne => (r - 1) as u64,
        }
    }
}

/// `u_1, ..., u_r` of a δ-form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantVector {
    pub delta: usize,
    pub r: usize,
    pub ring: Ring,
    /// `values[i - 1] = u_i`.
    pub values: Vec<Elem>,
    pub convention: Convention,
    /// Shift `e` for shifted invariants; 1 for the plain ones.
    pub shift: usize,
    pub warnings: Vec<String>,
}

impl InvariantVector {
    /// `u_i`, 1-based.
    pub fn u(&self, i: usize) -> FieldValue {
        FieldValue::new(&self.ring, self.values[i - 1].clone())
    }

    pub fn format_values(&self) -> Vec<String> {
        self.values.iter().map(|v| self.ring.format(v)).collect()
    }

    /// Build from explicit values `u_1..u_r` (standard convention).
    pub fn from_values(ring: &Ring, delta: usize, values: Vec<Elem>) -> Result<InvariantVector> {
        let r = values.len();
        if r < 2 {
            return Err(Error::Invalid("need at least u_1 and u_2".into()));
        }
        Ok(InvariantVector {
            delta,
            r,
            ring: ring.clone(),
            values,
            convention: Convention::RMinusI,
            shift: 1,
            warnings: degenerate_warning(r),
        })
    }

    /// Coerce the values into a larger ring.
    pub fn embed(&self, into: &Ring) -> Result<InvariantVector> {
        let values = self.values.iter().map(|v| into.embed(&self.ring, v)).collect::<Result<_>>()?;
        Ok(InvariantVector { ring: into.clone(), values, ..self.clone() })
    }
}

fn degenerate_warning(r: usize) -> Vec<String> {
    if r == 2 {
        vec!["r = 2: the coefficient action is cyclic, not dihedral".into()]
    } else {
        Vec::new()
    }
}

fn check_r(df: &DeltaForm) -> Result<()> {
    if df.r() < 2 {
        return Err(Error::Invalid("invariants need r >= 2".into()));
    }
    Ok(())
}

/// `u_i = a_1^{r-i} a_i + a_{r-1}^{r-i} a_{r-i}` of a normal form.
pub fn invariants(df: &DeltaForm) -> Result<InvariantVector> {
    invariants_with_convention(df, Convention::RMinusI)
}

pub fn invariants_with_convention(df: &DeltaForm, convention: Convention) -> Result<InvariantVector> {
    if !df.is_normalized() {
        return Err(Error::Invalid("invariants need a normal form (a_0 = a_r = 1)".into()));
    }
    check_r(df)?;
    shifted(df, 1, convention)
}

/// `u_i^{(e)} = a_e^{k} a_i + a_{r-e}^{k} a_{r-i}` with `k` from the convention.
pub fn shifted_invariants(df: &DeltaForm, e: usize, convention: Convention) -> Result<InvariantVector> {
    if !df.is_normalized() {
        return Err(Error::Invalid("shifted invariants need a normal form".into()));
    }
    check_r(df)?;
    if e == 0 || e >= df.r() {
        return Err(Error::Invalid(format!("shift e = {e} outside 1 <= e < r = {}", df.r())));
    }
    shifted(df, e, convention)
}

fn shifted(df: &DeltaForm, e: usize, convention: Convention) -> Result<InvariantVector> {
    let ring = df.ring();
    let a = df.coeffs();
    let r = df.r();
    let values = (1..=r)
        .map(|i| {
            let k = convention.exponent(r, i);
            let lhs = ring.mul(&ring.pow(&a[e], k), &a[i]);
            let rhs = ring.mul(&ring.pow(&a[r - e], k), &a[r - i]);
            ring.add(&lhs, &rhs)
        })
        .collect();
    Ok(InvariantVector {
        delta: df.delta(),
        r,
        ring: ring.clone(),
        values,
        convention,
        shift: e,
        warnings: degenerate_warning(r),
    })
}

/// Invariants of the normal form of a monic δ-form, without extracting a root of `a_0`:
/// `u_i = a_0^{-(r-i)} a_1^{r-i} a_i + a_0^{-1} a_{r-1}^{r-i} a_{r-i}`.
///
/// Polynomial-ring inputs are evaluated in the fraction field.
pub fn invariants_general(df: &DeltaForm) -> Result<InvariantVector> {
    check_r(df)?;
    let src = df.ring();
    if !src.is_one(df.coeffs().last().unwrap()) {
        return Err(Error::Invalid("invariants_general needs a monic form (a_r = 1)".into()));
    }
    let ring = src.fraction_field().unwrap_or_else(|_| src.clone());
    let a: Vec<Elem> = df.coeffs().iter().map(|c| ring.embed(src, c)).collect::<Result<_>>()?;
    let r = df.r();
    let inv0 = ring.inv(&a[0]).map_err(|e| match e {
        Error::DivisionByZero => Error::NotInvertible("a_0".into()),
        other => other,
    })?;
    let values = (1..=r)
        .map(|i| {
            let k = (r - i) as u64;
            let lhs = ring.mul(&ring.pow(&inv0, k), &ring.mul(&ring.pow(&a[1], k), &a[i]));
            let rhs = ring.mul(&inv0, &ring.mul(&ring.pow(&a[r - 1], k), &a[r - i]));
            ring.add(&lhs, &rhs)
        })
        .collect();
    Ok(InvariantVector {
        delta: df.delta(),
        r,
        ring,
        values,
        convention: Convention::RMinusI,
        shift: 1,
        warnings: degenerate_warning(r),
    })
}

/// The ring `base[ε]/(ε^r - 1)`.
pub fn roots_of_unity_ring(base: &Ring, r: usize) -> Result<Ring> {
    let mut m = vec![base.zero(); r + 1];
    m[0] = base.neg(&base.one());
    m[r] = base.one();
    Ring::adjoin(base, "ε", m)
}

/// `a_i -> ε^{δ i} a_i` over `base[ε]/(ε^r - 1)`.
pub fn tau1_apply(df: &DeltaForm) -> Result<DeltaForm> {
    let base = df.ring();
    let ext = roots_of_unity_ring(base, df.r())?;
    let eps = ext.generator()?;
    let step = ext.pow(&eps, df.delta() as u64);
    let mut factor = ext.one();
    let mut coeffs = Vec::with_capacity(df.r() + 1);
    for c in df.coeffs() {
        coeffs.push(ext.mul(&ext.embed(base, c)?, &factor));
        factor = ext.mul(&factor, &step);
    }
    DeltaForm::new(&ext, df.delta(), coeffs)
}

/// `a_i -> a_{r-i}`.
pub fn tau2_apply(df: &DeltaForm) -> DeltaForm {
    let mut v = df.coeffs().to_vec();
    v.reverse();
    DeltaForm::new(df.ring(), df.delta(), v).expect("reversal keeps a_0, a_r nonzero")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Component {
    None,
    /// `u_{r-1}^{r/2} = 2^{(r-2)/2} u_1`.
    Plus,
    /// `u_{r-1}^{r/2} = -2^{(r-2)/2} u_1`.
    Minus,
}

impl Component {
    pub fn tag(self) -> &'static str {
        match self {
            Component::None => "none",
            Component::Plus => "plus",
            Component::Minus => "minus",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocusReport {
    /// `u_1 = ... = u_{r-1} = 0`.
    pub higher_cyclic: bool,
    /// `u_{r-1}^r = 2^{r-2} u_1^2`.
    pub dihedral: bool,
    pub component: Component,
    pub degenerate_r2: bool,
    /// `u_{r-1}^r - 2^{r-2} u_1^2`.
    pub dihedral_defect: FieldValue,
    /// `2^{(r-2)/2} u_1 - u_{r-1}^{r/2}` and `2^{(r-2)/2} u_1 + u_{r-1}^{r/2}` for even `r`.
    pub component_defects: Option<(FieldValue, FieldValue)>,
    pub warnings: Vec<String>,
}

/// Evaluate the higher-cyclic and dihedral locus equations on a standard invariant vector.
pub fn locus_test(u: &InvariantVector) -> Result<LocusReport> {
    let ring = &u.ring;
    if ring.characteristic() == 2 {
        return Err(Error::Characteristic(2));
    }
    if u.convention != Convention::RMinusI || u.shift != 1 {
        return Err(Error::Invalid("the locus test needs the standard invariants".into()));
    }
    let r = u.r;
    if r < 2 {
        return Err(Error::Invalid("the locus test needs r >= 2".into()));
    }
    let u1 = &u.values[0];
    let ur1 = &u.values[r - 2];
    let two = ring.from_i64(2);
    let higher_cyclic = u.values[..r - 1].iter().all(|v| ring.is_zero(v));
    let defect = ring.sub(&ring.pow(ur1, r as u64), &ring.mul(&ring.pow(&two, r as u64 - 2), &ring.mul(u1, u1)));
    let dihedral = ring.is_zero(&defect);
    let mut warnings = u.warnings.clone();
    let degenerate_r2 = r == 2;
    let mut component = Component::None;
    let mut component_defects = None;
    if r.is_multiple_of(2) && r >= 4 {
        let lhs = ring.mul(&ring.pow(&two, (r as u64 - 2) / 2), u1);
        let rhs = ring.pow(ur1, r as u64 / 2);
        let plus = ring.sub(&lhs, &rhs);
        let minus = ring.add(&lhs, &rhs);
        match (ring.is_zero(&plus), ring.is_zero(&minus)) {
            (true, false) => component = Component::Plus,
            (false, true) => component = Component::Minus,
            (true, true) => warnings.push("both components hold (u_1 = u_{r-1} = 0); no component reported".into()),
            _ => {}
        }
        component_defects = Some((FieldValue::new(ring, plus), FieldValue::new(ring, minus)));
    } else if degenerate_r2 {
        warnings.push("r = 2: the dihedral equation is vacuous and no component split is made".into());
    }
    Ok(LocusReport {
        higher_cyclic,
        dihedral,
        component,
        degenerate_r2,
        dihedral_defect: FieldValue::new(ring, defect),
        component_defects,
        warnings,
    })
}
