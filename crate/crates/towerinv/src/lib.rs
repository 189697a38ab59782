//! Asymptotic invariants of towers of number fields.
//!
//! The crate computes, at desk scale and in exact or high-precision
//! arithmetic:
//!
//! - abelian number fields from Dirichlet character groups (degree,
//!   signature, conductor-discriminant, genus, roots of unity);
//! - prime splitting data (e, f, g), norm-alpha prime counts, and the
//!   tame/wild decomposition of relative discriminant exponents;
//! - Dirichlet L(1, chi) by exact finite closed forms, and log(h R)
//!   through the analytic class number formula;
//! - tower invariants phi_alpha, mu, BS, lambda, psi_alpha, beta and
//!   their relative versions, with convergence diagnostics and identity
//!   checks on real cyclotomic and synthetic towers;
//! - reconstruction of prime norms from decomposition constants, with
//!   the supporting subgroup-lattice counting criteria.
//!
//! The `towerinv` binary exposes the `field`, `tower`, `reconstruct`, and
//! `suite` commands over JSON/CSV reports.

pub mod chars;
pub mod config;
pub mod error;
pub mod fields;
pub mod hp;
pub mod lfunc;
pub mod reconstruct;
pub mod report;
pub mod splitting;
pub mod suite;
pub mod towers;

pub use config::RunConfig;
pub use error::{Result, TowerError};
pub use fields::{build_abelian_field, relative_genus, AbelianField};
pub use hp::Ctx;
