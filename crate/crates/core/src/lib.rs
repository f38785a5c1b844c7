//! Exact computation on finite semigroups given by Cayley tables.
//!
//! The crate covers structural predicates (regular, orthodox, completely
//! simple, inverse), Rees matrix constructions and coordinatizations,
//! congruence lattices, higher (k-ary) term-condition commutators computed on
//! cube subpowers, nilpotency/solvability/supernilpotency series, isomorphism
//! search, enumeration of small semigroups up to isomorphism, and a
//! machine-checked suite of structure theorems tying these together.
//!
//! Everything is `no_std` + `alloc`: all operations are pure functions over
//! owned data, and every documented output is deterministic — same inputs,
//! byte-identical results, independent of worker counts used by callers.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod bruteforce;
pub mod commutator;
pub mod congruence;
pub mod construct;
pub mod corpus;
pub mod product;
pub mod semigroup;
pub mod series;
pub mod structure;
pub mod theorems;
mod util;

pub use commutator::{
    centralizes, centralizes_with, commutator, commutator_with, generate_cube_set,
    generate_cube_set_with, oracle_centralizes_by_words, Centrality, Cube, CubeBudget, CubeError,
    CubeExpander, CubeSet, ExpandCtx, SequentialExpander, WordOracleParams,
};
pub use congruence::{
    all_congruences, congruence_from_triple, is_skew_free, linked_triple, principal_congruence,
    product_congruence, verify_cong_product, CongError, Congruence, CongruenceLattice,
    LinkedTriple, Partition, DEFAULT_LATTICE_CAP,
};
pub use construct::{
    adjoin_zero, builtin_group, cyclic_group, left_zero, rectangular_band, rees_matrix,
    right_zero, s2, trivial, ConstructError, GroupSpec, ReesSpec,
};
pub use corpus::{enumerate_semigroups, CorpusError, CorpusFilter};
pub use product::DirectProduct;
pub use semigroup::{FiniteSemigroup, GreenClasses, SemigroupError};
pub use series::{
    derived_series, derived_series_with, is_abelian, lower_central_series,
    lower_central_series_with, supernilpotency_degree, supernilpotency_degree_with, SeriesKind,
    SeriesReport, DEFAULT_MAX_ARITY, DEFAULT_MAX_TERMS,
};
pub use structure::{
    find_isomorphism, group_nilpotency_class, group_solvability_degree,
    inverse_supernilpotent_decomposition, orthodox_cs_decomposition, rees_coordinatize,
    warne_decomposition, Decomposition, DecompositionKind, IsoWitness, StructureError,
};
pub use theorems::{verify_theorem_suite, CheckStatus, SuiteBudget, SuiteReport, TheoremCheck};
