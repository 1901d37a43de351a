//! Power graphs of finite groups and forbidden induced subgraphs.
//!
//! Groups are built from a small spec grammar ([`constructors`]), their power
//! graphs are reduced by twin classes ([`power_graph`]) and searched for small
//! induced patterns ([`patterns`]). [`harness`] checks each characterization
//! against structural predicates from [`classifiers`] over a group corpus.

pub mod classifiers;
pub mod constructors;
pub mod error;
pub mod finite_field;
pub mod group;
pub mod harness;
pub mod patterns;
pub mod power_graph;

pub use classifiers::{compute_structure_flags, rhs_predicate, RhsArgs, StructureFlags, TheoremId};
pub use constructors::{build_group, parse_group_spec, GroupSpec};
pub use error::{Error, Result};
pub use group::{Group, GroupElement};
pub use harness::{analyze_group, default_corpus, run_all, run_theorem_case, Corpus, VerificationReport};
pub use patterns::{find_induced_pattern, pattern, Pattern, Witness};
pub use power_graph::{build_power_graph, build_prime_graph, twin_reduce, Graph};
