//! Finite groups as dense multiplication tables.
//!
//! Elements are the indices `0..n` and the identity is always index 0. Every
//! constructor funnels through [`GroupTable::from_flat`], which verifies the
//! group axioms in full (including the O(n³) associativity check) before a
//! table is handed out.

mod families;
pub mod io;
mod iso;
mod perm;

pub use iso::{is_isomorphic, Fingerprint};
pub use perm::PermutationGeneratorSet;

use crate::error::GroupError;
use crate::numtheory::is_prime;

/// Default bound on group orders accepted by size-sensitive constructors.
pub const DEFAULT_ORDER_CAP: usize = 200;

/// A validated finite group given by its Cayley table.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupTable {
    order: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
    elem_order: Vec<u32>,
    label: String,
}

impl std::fmt::Debug for GroupTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("GroupTable")
            .field("label", &self.label)
            .field("order", &self.order)
            .finish_non_exhaustive()
    }
}

impl GroupTable {
    /// Builds a group from a square table of element indices.
    pub fn from_cayley(rows: &[Vec<usize>]) -> Result<Self, GroupError> {
        let n = rows.len();
        if n == 0 {
            return Err(GroupError::MalformedTable("empty table".into()));
        }
        let mut flat = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(GroupError::MalformedTable(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            for (j, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(GroupError::MalformedTable(format!(
                        "entry ({i}, {j}) = {v} is out of range"
                    )));
                }
                flat.push(v as u32);
            }
        }
        Self::from_flat(n, flat, "cayley")
    }

    /// Validates a row-major `n × n` table, relabels its identity to 0 and
    /// fills the inverse and element-order caches.
    pub fn from_flat(
        n: usize,
        mut mul: Vec<u32>,
        label: impl Into<String>,
    ) -> Result<Self, GroupError> {
        if n == 0 || mul.len() != n * n {
            return Err(GroupError::MalformedTable(format!(
                "expected {} entries for order {n}, got {}",
                n * n,
                mul.len()
            )));
        }
        if let Some(pos) = mul.iter().position(|&v| v as usize >= n) {
            return Err(GroupError::MalformedTable(format!(
                "entry ({}, {}) = {} is out of range",
                pos / n,
                pos % n,
                mul[pos]
            )));
        }

        let at = |m: &[u32], a: usize, b: usize| m[a * n + b] as usize;
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| at(&mul, e, x) == x && at(&mul, x, e) == x))
            .ok_or(GroupError::NoIdentity)?;

        if identity != 0 {
            // swap labels 0 and `identity`
            let swap = |x: usize| {
                if x == 0 {
                    identity
                } else if x == identity {
                    0
                } else {
                    x
                }
            };
            let mut relabeled = vec![0u32; n * n];
            for a in 0..n {
                for b in 0..n {
                    relabeled[swap(a) * n + swap(b)] = swap(at(&mul, a, b)) as u32;
                }
            }
            mul = relabeled;
        }

        let mut inv = vec![0u32; n];
        for x in 0..n {
            let y = (0..n)
                .find(|&y| at(&mul, x, y) == 0 && at(&mul, y, x) == 0)
                .ok_or(GroupError::NoInverse { element: x })?;
            inv[x] = y as u32;
        }

        for a in 0..n {
            for b in 0..n {
                let ab = at(&mul, a, b);
                let row_ab = &mul[ab * n..ab * n + n];
                let row_b = &mul[b * n..b * n + n];
                let row_a = &mul[a * n..a * n + n];
                for c in 0..n {
                    if row_ab[c] != row_a[row_b[c] as usize] {
                        return Err(GroupError::NotAssociative { a, b, c });
                    }
                }
            }
        }

        let mut elem_order = vec![0u32; n];
        for x in 0..n {
            let mut k = 1;
            let mut y = x;
            while y != 0 {
                y = at(&mul, y, x);
                k += 1;
            }
            elem_order[x] = k;
        }

        Ok(GroupTable {
            order: n,
            mul,
            inv,
            elem_order,
            label: label.into(),
        })
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    #[inline]
    pub fn elem_order(&self, a: usize) -> usize {
        self.elem_order[a] as usize
    }

    pub fn elem_orders(&self) -> impl Iterator<Item = usize> + '_ {
        self.elem_order.iter().map(|&o| o as usize)
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    /// Row `a` of the table.
    pub fn row(&self, a: usize) -> &[u32] {
        &self.mul[a * self.order..(a + 1) * self.order]
    }

    pub fn to_rows(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|a| self.row(a).iter().map(|&v| v as usize).collect())
            .collect()
    }

    pub fn pow(&self, x: usize, k: usize) -> usize {
        let k = k % self.elem_order(x);
        (0..k).fold(0, |acc, _| self.mul(acc, x))
    }

    pub fn conjugate(&self, g: usize, h: usize) -> usize {
        self.mul(self.mul(g, h), self.inv(g))
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a + 1..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn center(&self) -> Vec<usize> {
        (0..self.order)
            .filter(|&z| (0..self.order).all(|g| self.mul(z, g) == self.mul(g, z)))
            .collect()
    }

    /// Sorted list of element orders.
    pub fn order_multiset(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.elem_orders().collect();
        v.sort_unstable();
        v
    }

    pub fn involution_count(&self) -> usize {
        self.elem_orders().filter(|&o| o == 2).count()
    }

    /// True iff every non-identity element has prime order.
    pub fn all_nontrivial_orders_prime(&self) -> bool {
        self.elem_orders().skip(1).all(|o| is_prime(o as u64))
    }

    /// Closure of a set of elements under multiplication, as a sorted list.
    pub fn generated_by(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order];
        let mut elems = vec![0usize];
        seen[0] = true;
        let mut i = 0;
        while i < elems.len() {
            let x = elems[i];
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    elems.push(y);
                }
            }
            i += 1;
        }
        elems.sort_unstable();
        elems
    }

    /// Greedily chosen generating set: repeatedly adds the element that
    /// enlarges the generated subgroup the most (ties to the lowest index).
    pub fn greedy_generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut current = 1usize;
        while current < self.order {
            let mut in_span = vec![false; self.order];
            for x in self.generated_by(&gens) {
                in_span[x] = true;
            }
            let mut best = (0usize, 0usize);
            for x in 1..self.order {
                if in_span[x] {
                    continue;
                }
                gens.push(x);
                let size = self.generated_by(&gens).len();
                gens.pop();
                if size > best.1 {
                    best = (x, size);
                    if size == self.order {
                        break;
                    }
                }
            }
            gens.push(best.0);
            current = best.1;
        }
        gens
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3_rows() -> Vec<Vec<usize>> {
        // closure of (0 1) and (0 1 2) computed by hand-enumerated permutations
        let perms: Vec<[usize; 3]> = vec![
            [0, 1, 2],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [0, 2, 1],
            [2, 1, 0],
        ];
        let idx = |p: [usize; 3]| perms.iter().position(|&q| q == p).unwrap();
        perms
            .iter()
            .map(|p| {
                perms
                    .iter()
                    .map(|q| idx([q[p[0]], q[p[1]], q[p[2]]]))
                    .collect()
            })
            .collect()
    }

    #[test]
    fn trivial_and_z2_tables() {
        let t = GroupTable::from_cayley(&[vec![0]]).unwrap();
        assert_eq!(t.order(), 1);
        let z2 = GroupTable::from_cayley(&[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(z2.elem_orders().collect::<Vec<_>>(), vec![1, 2]);
    }

    #[test]
    fn s3_from_table() {
        let g = GroupTable::from_cayley(&s3_rows()).unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.order_multiset(), vec![1, 2, 2, 2, 3, 3]);
        assert!(!g.is_abelian());
        assert_eq!(g.center(), vec![0]);
    }

    #[test]
    fn identity_is_relabeled_to_zero() {
        // Z2 with identity at index 1
        let g = GroupTable::from_cayley(&[vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(g.mul(0, 1), 1);
        assert_eq!(g.mul(1, 1), 0);
        assert_eq!(g.elem_order(1), 2);
    }

    #[test]
    fn malformed_tables_are_rejected() {
        assert!(matches!(
            GroupTable::from_cayley(&[vec![0, 1], vec![1]]),
            Err(GroupError::MalformedTable(_))
        ));
        assert!(matches!(
            GroupTable::from_cayley(&[vec![0, 2], vec![1, 0]]),
            Err(GroupError::MalformedTable(_))
        ));
        assert!(matches!(
            GroupTable::from_cayley(&[]),
            Err(GroupError::MalformedTable(_))
        ));
    }

    #[test]
    fn missing_identity_and_inverse() {
        assert_eq!(
            GroupTable::from_cayley(&[vec![1, 1], vec![1, 1]]),
            Err(GroupError::NoIdentity)
        );
        // 0 is identity, 1*1 = 1: 1 has no inverse
        assert_eq!(
            GroupTable::from_cayley(&[vec![0, 1], vec![1, 1]]),
            Err(GroupError::NoInverse { element: 1 })
        );
    }

    #[test]
    fn non_associative_loop_is_rejected() {
        // Latin square of order 5 with identity 0 that is not a group
        let rows = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(matches!(
            GroupTable::from_cayley(&rows),
            Err(GroupError::NotAssociative { .. })
        ));
    }

    #[test]
    fn element_orders_match_naive_power_loop() {
        for g in [GroupTable::cyclic(12), GroupTable::dihedral(5), GroupTable::generalized_quaternion(4).unwrap()] {
            for x in 0..g.order() {
                let mut m = 1;
                let mut y = x;
                while y != g.identity() {
                    y = g.mul(y, x);
                    m += 1;
                }
                assert_eq!(g.elem_order(x), m);
                assert_eq!(g.order() % m, 0);
            }
        }
    }

    #[test]
    fn greedy_generators_generate() {
        for g in [GroupTable::cyclic(12), GroupTable::dihedral(6), GroupTable::abelian(&[2, 2, 2], 200).unwrap()] {
            let gens = g.greedy_generators();
            assert_eq!(g.generated_by(&gens).len(), g.order());
        }
        assert!(GroupTable::cyclic(1).greedy_generators().is_empty());
        assert_eq!(GroupTable::abelian(&[2, 2, 2], 200).unwrap().greedy_generators().len(), 3);
    }
}
