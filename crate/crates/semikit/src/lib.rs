//! Command-line front end and file formats for finite-semigroup computation.
//!
//! The mathematical engine lives in `semikit-core`; this crate adds Cayley
//! table and Rees matrix file formats, a corpus manifest, named builtin
//! algebras, DOT output for congruence lattices, a deterministic
//! multi-threaded cube expander, and the `semikit` command itself.

pub mod app;
pub mod builtin;
pub mod dot;
pub mod expand;
pub mod formats;
