//! Exact algebra for cyclic covers `y^n = f(x)` of the projective line.
//!
//! The crate is layered bottom-up:
//!
//! - [`rings`]: rationals, prime fields, polynomials and rational functions in
//!   named parameters, and quotient-ring extension towers;
//! - [`unipoly`]: univariate polynomials, Möbius transport, resultants;
//! - [`covers`]: cover data, genus, δ-forms and normal forms;
//! - [`invariants`]: dihedral invariants and the automorphism-locus test;
//! - [`groups`]: finite subgroups of PGL₂, orbit polynomials, classification;
//! - [`moduli`]: a model over the field generated by the invariants.
//!
//! [`expr`] parses the textual form that every value prints as.

pub mod covers;
pub mod error;
pub mod expr;
pub mod groups;
pub mod invariants;
pub mod moduli;
pub mod rings;
pub mod unipoly;

pub use error::{Error, ErrorClass, Result};
pub use rings::{Elem, FieldValue, MPoly, Ring};
pub use unipoly::{Mobius, UniPoly};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/overview.md")]
    mod overview {}
    #[doc = include_str!("../../../book/src/rings.md")]
    mod rings {}
    #[doc = include_str!("../../../book/src/covers.md")]
    mod covers {}
    #[doc = include_str!("../../../book/src/invariants.md")]
    mod invariants {}
    #[doc = include_str!("../../../book/src/groups.md")]
    mod groups {}
    #[doc = include_str!("../../../book/src/moduli.md")]
    mod moduli {}
}
