//! Isolated subgroups.
//!
//! `H ≤ G` is isolated when every `x ∈ G` either lies in `H` or generates a
//! cyclic subgroup meeting `H` only in the identity. The deficiency `k` of a
//! group is the number of subgroups that are not isolated.

use serde::{Deserialize, Serialize};

use crate::error::LatticeError;
use crate::exec::Strategy;
use crate::group::GroupTable;
use crate::lattice::{cyclic_mask, Lattice, Subgroup};
use crate::mask::Mask;

/// `⟨x⟩` for every element `x`, computed once per group.
pub struct CyclicCache {
    masks: Vec<Mask>,
}

impl CyclicCache {
    pub fn new(g: &GroupTable) -> Self {
        CyclicCache {
            masks: (0..g.order()).map(|x| cyclic_mask(g, x)).collect(),
        }
    }

    pub fn get(&self, x: usize) -> &Mask {
        &self.masks[x]
    }

    /// First element (in index order) showing that `h` is not isolated.
    pub fn witness(&self, h: &Mask) -> Option<usize> {
        (0..self.masks.len()).find(|&x| !h.contains(x) && self.masks[x].intersection_count(h) > 1)
    }
}

/// Returns `true` iff `h` is isolated in `g`.
pub fn is_isolated(g: &GroupTable, h: &Subgroup<'_>) -> Result<bool, LatticeError> {
    if !std::ptr::eq(g, h.parent()) {
        return Err(LatticeError::ParentMismatch);
    }
    Ok(isolation_witness(g, h).is_none())
}

/// An element `x ∉ H` with `⟨x⟩ ∩ H ≠ 1`, if one exists.
pub fn isolation_witness(g: &GroupTable, h: &Subgroup<'_>) -> Option<usize> {
    (0..g.order()).find(|&x| !h.contains(x) && cyclic_mask(g, x).intersection_count(h.members()) > 1)
}

/// A non-isolated subgroup together with the element that witnesses it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct NonIsolated {
    pub subgroup: usize,
    pub witness: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsolationReport {
    pub lattice_size: usize,
    pub isolated_count: usize,
    pub deficiency_k: usize,
    /// Indexed like the lattice.
    pub isolated: Vec<bool>,
    pub non_isolated: Vec<NonIsolated>,
    pub is_cp1: bool,
    pub is_isolated_simple: bool,
}

pub fn isolation_report(g: &GroupTable, lattice: &Lattice<'_>) -> IsolationReport {
    isolation_report_with(g, lattice, Strategy::Sequential)
}

pub fn isolation_report_with(g: &GroupTable, lattice: &Lattice<'_>, strategy: Strategy) -> IsolationReport {
    let cache = CyclicCache::new(g);
    let witnesses: Vec<Option<usize>> =
        strategy.map(lattice.subgroups(), |h| cache.witness(h.members()));
    let non_isolated: Vec<NonIsolated> = witnesses
        .iter()
        .enumerate()
        .filter_map(|(i, w)| w.map(|x| NonIsolated { subgroup: i, witness: x }))
        .collect();
    let lattice_size = lattice.len();
    let isolated: Vec<bool> = witnesses.iter().map(Option::is_none).collect();
    let top = lattice.top();
    let is_isolated_simple = isolated
        .iter()
        .enumerate()
        .all(|(i, &iso)| !iso || i == 0 || i == top);
    IsolationReport {
        lattice_size,
        isolated_count: lattice_size - non_isolated.len(),
        deficiency_k: non_isolated.len(),
        isolated,
        non_isolated,
        is_cp1: is_cp1(g),
        is_isolated_simple,
    }
}

/// Every non-identity element has prime order. Computed from element orders
/// only, independently of any lattice.
pub fn is_cp1(g: &GroupTable) -> bool {
    g.all_nontrivial_orders_prime()
}

/// No subgroup other than `1` and `G` is isolated.
pub fn is_isolated_simple(g: &GroupTable, lattice: &Lattice<'_>) -> bool {
    let top = lattice.top();
    lattice
        .subgroups()
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != 0 && i != top)
        .all(|(_, h)| isolation_witness(g, h).is_some())
}
