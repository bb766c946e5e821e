//! Exact kernel for four-dimensional exterior algebra, dyadic calculus, and
//! the study of linear electromagnetic media.
//!
//! Electromagnetics on a four-dimensional manifold can be written without a
//! metric: the field is a pair of two-forms, and a linear medium is a single
//! 6×6 object — a *bidyadic* — mapping one two-form to the other.  This crate
//! implements that algebra exactly, over arbitrary-precision rationals, so
//! that structural questions ("is this bidyadic an axion multiple?", "does
//! this medium impose a dispersion equation on plane waves at all?") are
//! decided by computation rather than by numerical tolerance.
//!
//! The layers, bottom to top:
//!
//! * [`scalar`] — exact rational scalars (arbitrary precision, always in
//!   reduced form).
//! * [`basis`] — index bookkeeping for the 2⁴ basis blades and the sign
//!   tables of the exterior product and complement maps.
//! * [`exterior`] — multivectors and multiforms of grades 0..4 with wedge,
//!   duality pairing, contraction `⌋` and hook `⌊`.
//! * [`linalg`] — dense matrices over the rationals with exact elimination
//!   (rank, inverse, null space).
//! * [`dyadic`] — dyadics as graded-space maps: composition, transpose,
//!   double-wedge, compounds (minor matrices), double contractions, the
//!   bivector dot product, unit dyadics and complement maps.
//! * [`qpoly`] — exact univariate polynomials: gcd, square-free part, Sturm
//!   root isolation, rational roots.
//! * [`dispersion`] — the dispersion dyadic of a medium, the quartic wave
//!   surface, its exact coefficient extraction, and plane-wave solutions.
//! * [`media`] — named constitutive families, the principal/skewon/axion
//!   trace decomposition, exact inverses, classification, and the P-vs-Q
//!   discriminator.
//! * [`corpus`] — deterministic seeded generators for every family, shared
//!   by the test suite and the command-line tool.
//! * [`convention`] — the frozen basis/sign conventions in both
//!   machine-checkable and printable form.
//!
//! No floating point is used anywhere in this crate.  The crate is
//! `#![no_std]` (with `alloc`); IO, file formats and the CLI live in the
//! companion crate.

#![cfg_attr(not(test), no_std)]
#![allow(clippy::needless_range_loop)]

extern crate alloc;

pub mod basis;
pub mod convention;
pub mod corpus;
pub mod dispersion;
pub mod dyadic;
pub mod exterior;
pub mod linalg;
pub mod media;
pub mod qpoly;
pub mod scalar;

mod error;

pub use error::Error;

/// Convenient result alias for fallible kernel operations.
pub type Result<T> = core::result::Result<T, Error>;
