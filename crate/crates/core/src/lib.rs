//! Exact computations behind Brauer–Picard groups of fusion categories over
//! fields that are not algebraically closed.
//!
//! The crate is organized by subject:
//!
//! * [`groups`]: finite groups by multiplication table, double cosets, orbits.
//! * [`cohomology`]: `Hⁿ(G; M)` via the normalized bar complex and Smith
//!   normal form, cocycle representatives, unit-group coefficients.
//! * [`galois`]: splitting-field scenarios, Lagrange idempotents and the
//!   double-coset faithfulness criterion.
//! * [`fusion`]: fusion rings with division-algebra endomorphism labels,
//!   algebra profiles in the real Brauer ring.
//! * [`fieldtable`]: curated `Hⁿ(K; G_m)` values.
//! * [`seqkit`]: exact sequences of finite abelian groups, the Brauer–Picard
//!   order chase, graded extensions of `Vec_R`.
//! * [`catalog`]: the built-in catalog of worked examples and the
//!   reproduction report.

pub mod abelian;
pub mod catalog;
pub mod cohomology;
pub mod fieldtable;
pub mod fusion;
pub mod galois;
pub mod groups;
pub mod poly;
pub mod seqkit;

pub use abelian::AbelianGroup;
