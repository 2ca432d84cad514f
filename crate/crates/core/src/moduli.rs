//! A model over the field generated by the dihedral invariants.
//!
//! With `t^r = u_1/2` adjoined formally, the δ-form
//! `x^{rδ} + t x^{(r-1)δ} + sum_{i=1}^{r-2} (u_{r-i}/u_1) t^{r-i} x^{iδ} + 1`
//! has invariants `u` whenever `u` comes from a curve with a dihedral reduced group.

use crate::covers::DeltaForm;
use crate::error::{Error, Result};
use crate::invariants::{invariants, Convention, InvariantVector};
use crate::rings::{Elem, FieldValue, Ring, RingKind};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuliModel {
    /// The input invariants, coerced into a field.
    pub u: InvariantVector,
    /// `K(u)[t]/(t^r - u_1/2)`.
    pub ring: Ring,
    /// Name of the formal root `t`.
    pub root: String,
    /// `A_0, ..., A_r` in `ring`.
    pub coeffs: Vec<Elem>,
}

impl ModuliModel {
    pub fn delta(&self) -> usize {
        self.u.delta
    }

    pub fn r(&self) -> usize {
        self.u.r
    }

    pub fn delta_form(&self) -> Result<DeltaForm> {
        DeltaForm::new(&self.ring, self.delta(), self.coeffs.clone())
    }

    pub fn format_coeffs(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| self.ring.format(c)).collect()
    }

    /// `A_1^{r-i} A_i = A_{r-1}^{r-i} A_{r-i}` for every `i`.
    pub fn is_symmetric(&self) -> bool {
        let (k, a, r) = (&self.ring, &self.coeffs, self.r());
        (1..r).all(|i| {
            let e = (r - i) as u64;
            k.mul(&k.pow(&a[1], e), &a[i]) == k.mul(&k.pow(&a[r - 1], e), &a[r - i])
        })
    }
}

/// A field containing the values of `u`: polynomial rings are replaced by their fraction fields.
fn value_field(u: &InvariantVector) -> Result<InvariantVector> {
    if u.ring.is_field() {
        return Ok(u.clone());
    }
    match u.ring.kind() {
        RingKind::Poly { .. } => u.embed(&u.ring.fraction_field()?),
        _ => Err(Error::Invalid(format!("invariants over {} are not in a field", u.ring))),
    }
}

fn fresh_name(ring: &Ring) -> String {
    let taken = ring.names();
    ["t", "s", "theta", "rho"]
        .iter()
        .map(|s| s.to_string())
        .find(|n| !taken.contains(n))
        .unwrap_or_else(|| format!("t{}", taken.len()))
}

/// Build the model for `u` (standard convention, `u_1 != 0`).
pub fn reconstruct(u: &InvariantVector, delta: usize) -> Result<ModuliModel> {
    if u.convention != Convention::RMinusI || u.shift != 1 {
        return Err(Error::Invalid("reconstruction expects plain invariants with exponent r - i".into()));
    }
    if u.ring.characteristic() == 2 {
        return Err(Error::Characteristic(2));
    }
    if delta == 0 {
        return Err(Error::Invalid("δ must be positive".into()));
    }
    if u.r < 2 {
        return Err(Error::Invalid("reconstruction needs r >= 2".into()));
    }
    let mut u = value_field(u)?;
    u.delta = delta;
    let k = u.ring.clone();
    let r = u.r;
    let u1 = u.values[0].clone();
    if k.is_zero(&u1) {
        return Err(Error::BlowUpNeeded);
    }
    let half = k.div(&u1, &k.from_i64(2))?;
    let mut modulus = vec![k.zero(); r + 1];
    modulus[0] = k.neg(&half);
    modulus[r] = k.one();
    let root = fresh_name(&k);
    let ext = Ring::adjoin(&k, &root, modulus)?;
    let t = ext.generator()?;
    let mut coeffs = vec![ext.one(); r + 1];
    for (i, c) in coeffs.iter_mut().enumerate().take(r).skip(1) {
        let ratio = k.div(&u.values[r - i - 1], &u1)?;
        *c = ext.mul(&ext.embed(&k, &ratio)?, &ext.pow(&t, (r - i) as u64));
    }
    // u_1/u_1 = 1, so A_{r-1} = t falls out of the same formula.
    debug_assert_eq!(coeffs[r - 1], t);
    Ok(ModuliModel { u, ring: ext, root, coeffs })
}

/// Recompute the invariants of the model and compare with the input.
///
/// `false` means `u` did not come from a curve whose reduced group contains `D_δ`.
pub fn verify_roundtrip(m: &ModuliModel) -> Result<bool> {
    let again = invariants(&m.delta_form()?)?;
    let want = m.u.embed(&m.ring)?;
    Ok(again.values == want.values)
}

/// Substitute `t = c` where `c^r = u_1/2` in the base field.
pub fn specialize(m: &ModuliModel, c: &FieldValue) -> Result<DeltaForm> {
    let k = &m.u.ring;
    let c = c.embed(k)?;
    let r = m.r();
    let u1 = &m.u.values[0];
    let half = k.div(u1, &k.from_i64(2))?;
    if k.pow(c.elem(), r as u64) != half {
        return Err(Error::Invalid(format!("{c}^{r} is not u_1/2 = {}", k.format(&half))));
    }
    let mut coeffs = vec![k.one(); r + 1];
    for (i, a) in coeffs.iter_mut().enumerate().take(r).skip(1) {
        let ratio = k.div(&m.u.values[r - i - 1], u1)?;
        *a = k.mul(&ratio, &k.pow(c.elem(), (r - i) as u64));
    }
    DeltaForm::new(k, m.delta(), coeffs)
}
