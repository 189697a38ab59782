//! Tower invariants (in progress).
pub mod cyclotomic;
pub mod synthetic;
pub mod families;
