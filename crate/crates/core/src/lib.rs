//! Subgroup lattices and isolated subgroups of finite groups.
//!
//! A subgroup `H ≤ G` is *isolated* if every `x ∈ G` either lies in `H` or
//! satisfies `⟨x⟩ ∩ H = 1`. This crate enumerates `L(G)`, computes the set of
//! isolated subgroups and the number `k` of non-isolated ones, recognizes the
//! group families for which `k ≤ 2`, and sweeps a deduplicated catalog of
//! small groups to check that classification mechanically.
//!
//! ```
//! use isolatta_core::{group::GroupTable, lattice::all_subgroups, isolation::isolation_report};
//!
//! let g = GroupTable::cyclic(8);
//! let lattice = all_subgroups(&g);
//! let report = isolation_report(&g, &lattice);
//! assert_eq!(report.deficiency_k, 2);
//! ```

pub mod analysis;
pub mod catalog;
pub mod classifier;
pub mod error;
pub mod exec;
pub mod group;
pub mod isolation;
pub mod lattice;
pub mod mask;
pub mod numtheory;
pub mod spec;

pub use error::{GroupError, LatticeError, SpecError};
pub use exec::Strategy;
pub use group::{GroupTable, DEFAULT_ORDER_CAP};
