//! Exact Real (antilinear) representation theory of finite C2-graded groups.
//!
//! A C2-graded group is a finite group with a designated index-2 subgroup;
//! elements outside the subgroup act antilinearly. This crate computes, in
//! exact cyclotomic arithmetic:
//!
//! * conjugacy classes and Real (graded) conjugacy classes,
//! * complex character tables,
//! * Frobenius-Schur indicators (classical, graded, and the A-version),
//! * the tenfold classification of irreducible A-blocks,
//! * A-character tables, counting and orthogonality identities,
//! * central idempotents and the real algebra decomposition,
//! * square-root counting identities,
//! * the specialisation to alternating groups inside symmetric groups.

pub mod alternating;
pub mod chartable;
pub mod cyclo;
pub mod error;
pub mod formats;
pub mod grading;
pub mod group;
pub mod modp;
pub mod perm;
pub mod real;
pub mod report;
pub mod verify;

pub use chartable::{CharacterTable, ClassFunction};
pub use cyclo::{Cyclotomic, Rational};
pub use error::{Error, Result};
pub use grading::{Builtin, GradedGroup, RealClass};
pub use group::{ClassData, ConjugacyClass, Family, FiniteGroup, DEFAULT_MAX_ORDER};
