//! Subgroups as membership masks and the full subgroup lattice.

use std::cmp::Ordering;
use std::collections::HashMap;

use crate::error::LatticeError;
use crate::group::GroupTable;
use crate::mask::Mask;
use crate::numtheory::as_prime_power;

/// A subgroup of a parent table, stored as a membership mask together with a
/// (not necessarily minimal) generating set.
#[derive(Clone)]
pub struct Subgroup<'g> {
    parent: &'g GroupTable,
    members: Mask,
    gens: Vec<usize>,
}

impl std::fmt::Debug for Subgroup<'_> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Subgroup")
            .field("order", &self.order())
            .field("members", &self.members)
            .finish()
    }
}

impl PartialEq for Subgroup<'_> {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.parent, other.parent) && self.members == other.members
    }
}

impl Eq for Subgroup<'_> {}

/// Closure of `gens` in `g` as a mask.
fn closure(g: &GroupTable, gens: &[usize]) -> Mask {
    let mut mask = Mask::empty(g.order());
    mask.insert(0);
    let mut elems = vec![0usize];
    let mut i = 0;
    while i < elems.len() {
        let row = g.row(elems[i]);
        for &s in gens {
            let y = row[s] as usize;
            if mask.insert(y) {
                elems.push(y);
            }
        }
        i += 1;
    }
    mask
}

/// Mask of the powers of `x`.
pub(crate) fn cyclic_mask(g: &GroupTable, x: usize) -> Mask {
    let mut mask = Mask::empty(g.order());
    let mut y = 0;
    loop {
        mask.insert(y);
        y = g.mul(y, x);
        if y == 0 {
            return mask;
        }
    }
}

/// Small generating set for a subgroup mask, chosen greedily in index order.
fn spanning_gens(g: &GroupTable, members: &Mask) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut span = Mask::from_indices(g.order(), [0]);
    for x in members.iter() {
        if !span.contains(x) {
            gens.push(x);
            span = closure(g, &gens);
        }
    }
    gens
}

impl<'g> Subgroup<'g> {
    pub fn trivial(parent: &'g GroupTable) -> Self {
        Subgroup {
            parent,
            members: Mask::from_indices(parent.order(), [0]),
            gens: Vec::new(),
        }
    }

    pub fn whole(parent: &'g GroupTable) -> Self {
        Subgroup {
            parent,
            members: Mask::full(parent.order()),
            gens: parent.greedy_generators(),
        }
    }

    /// The subgroup generated by `gens`.
    pub fn generated(parent: &'g GroupTable, gens: &[usize]) -> Result<Self, LatticeError> {
        if let Some(&x) = gens.iter().find(|&&x| x >= parent.order()) {
            return Err(LatticeError::ElementOutOfRange {
                element: x,
                order: parent.order(),
            });
        }
        Ok(Subgroup {
            parent,
            members: closure(parent, gens),
            gens: gens.iter().copied().filter(|&x| x != 0).collect(),
        })
    }

    /// Wraps a mask, checking that it is closed under the group operation.
    pub fn from_mask(parent: &'g GroupTable, members: Mask) -> Option<Self> {
        if members.len() != parent.order() || !members.contains(0) {
            return None;
        }
        let elems = members.to_vec();
        let closed = elems
            .iter()
            .all(|&a| elems.iter().all(|&b| members.contains(parent.mul(a, b))));
        closed.then(|| Subgroup {
            gens: spanning_gens(parent, &members),
            parent,
            members,
        })
    }

    pub fn parent(&self) -> &'g GroupTable {
        self.parent
    }

    pub fn members(&self) -> &Mask {
        &self.members
    }

    pub fn generators(&self) -> &[usize] {
        &self.gens
    }

    pub fn order(&self) -> usize {
        self.members.count()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }

    pub fn elements(&self) -> Vec<usize> {
        self.members.to_vec()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup<'_>) -> bool {
        self.members.is_subset(&other.members)
    }

    fn same_parent(&self, other: &Subgroup<'_>) -> Result<(), LatticeError> {
        if std::ptr::eq(self.parent, other.parent) {
            Ok(())
        } else {
            Err(LatticeError::ParentMismatch)
        }
    }
}

fn canonical_order(a: &Subgroup<'_>, b: &Subgroup<'_>) -> Ordering {
    a.order()
        .cmp(&b.order())
        .then_with(|| a.members.cmp_members(&b.members))
}

pub fn cyclic_subgroup(g: &GroupTable, x: usize) -> Result<Subgroup<'_>, LatticeError> {
    if x >= g.order() {
        return Err(LatticeError::ElementOutOfRange {
            element: x,
            order: g.order(),
        });
    }
    Ok(Subgroup {
        parent: g,
        members: cyclic_mask(g, x),
        gens: if x == 0 { vec![] } else { vec![x] },
    })
}

pub fn intersect<'g>(h: &Subgroup<'g>, k: &Subgroup<'g>) -> Result<Subgroup<'g>, LatticeError> {
    h.same_parent(k)?;
    let members = h.members.and(&k.members);
    Ok(Subgroup {
        gens: spanning_gens(h.parent, &members),
        parent: h.parent,
        members,
    })
}

pub fn join<'g>(h: &Subgroup<'g>, k: &Subgroup<'g>) -> Result<Subgroup<'g>, LatticeError> {
    h.same_parent(k)?;
    let mut gens = h.gens.clone();
    gens.extend(k.gens.iter().copied().filter(|&x| !h.contains(x)));
    Ok(Subgroup {
        members: closure(h.parent, &gens),
        parent: h.parent,
        gens,
    })
}

pub fn is_normal(g: &GroupTable, h: &Subgroup<'_>) -> bool {
    let elems = h.elements();
    (0..g.order()).all(|x| elems.iter().all(|&y| h.contains(g.conjugate(x, y))))
}

/// The conjugation orbit of `h`, in canonical (order, members) order.
pub fn conjugates<'g>(g: &'g GroupTable, h: &Subgroup<'g>) -> Vec<Subgroup<'g>> {
    let elems = h.elements();
    let mut out: Vec<Subgroup<'g>> = Vec::new();
    for x in 0..g.order() {
        let members = Mask::from_indices(g.order(), elems.iter().map(|&y| g.conjugate(x, y)));
        if out.iter().all(|s| s.members != members) {
            let gens = h.gens.iter().map(|&y| g.conjugate(x, y)).collect();
            out.push(Subgroup {
                parent: g,
                members,
                gens,
            });
        }
    }
    out.sort_by(canonical_order);
    out
}

/// `L(G)`: every subgroup, sorted by (order, members).
pub struct Lattice<'g> {
    group: &'g GroupTable,
    subgroups: Vec<Subgroup<'g>>,
    index: HashMap<Mask, usize>,
    minimal: Vec<usize>,
    maximal: Vec<usize>,
}

impl std::fmt::Debug for Lattice<'_> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Lattice")
            .field("group", &self.group.label())
            .field("len", &self.subgroups.len())
            .finish()
    }
}

/// Enumerates all subgroups: every cyclic subgroup is a seed, and each known
/// subgroup is joined with every cyclic subgroup of prime-power order until
/// no new subgroup appears.
///
/// Every subgroup is generated by its elements of prime-power order, so the
/// fixpoint reaches all of `L(G)`.
pub fn all_subgroups(g: &GroupTable) -> Lattice<'_> {
    let n = g.order();
    let mut subgroups: Vec<Subgroup<'_>> = Vec::new();
    let mut index: HashMap<Mask, usize> = HashMap::new();
    let mut extenders: Vec<(usize, Mask)> = Vec::new();

    for x in 0..n {
        let c = cyclic_subgroup(g, x).expect("index in range");
        if index.contains_key(&c.members) {
            continue;
        }
        if as_prime_power(c.order() as u64).is_some() {
            extenders.push((x, c.members.clone()));
        }
        index.insert(c.members.clone(), subgroups.len());
        subgroups.push(c);
    }

    let mut i = 0;
    while i < subgroups.len() {
        for (x, cmask) in &extenders {
            if cmask.is_subset(&subgroups[i].members) {
                continue;
            }
            let mut gens = subgroups[i].gens.clone();
            gens.push(*x);
            let members = closure(g, &gens);
            if !index.contains_key(&members) {
                index.insert(members.clone(), subgroups.len());
                subgroups.push(Subgroup {
                    parent: g,
                    members,
                    gens,
                });
            }
        }
        i += 1;
    }

    subgroups.sort_by(canonical_order);
    let index: HashMap<Mask, usize> = subgroups
        .iter()
        .enumerate()
        .map(|(i, s)| (s.members.clone(), i))
        .collect();
    let orders: Vec<usize> = subgroups.iter().map(Subgroup::order).collect();

    let minimal = (0..subgroups.len())
        .filter(|&i| {
            orders[i] > 1
                && !(0..i).any(|k| {
                    orders[k] > 1
                        && orders[k] < orders[i]
                        && orders[i].is_multiple_of(orders[k])
                        && subgroups[k].members.is_subset(&subgroups[i].members)
                })
        })
        .collect();
    let maximal = (0..subgroups.len())
        .filter(|&i| {
            orders[i] < n
                && !(i + 1..subgroups.len()).any(|j| {
                    orders[j] < n
                        && orders[j] > orders[i]
                        && orders[j].is_multiple_of(orders[i])
                        && subgroups[i].members.is_subset(&subgroups[j].members)
                })
        })
        .collect();

    Lattice {
        group: g,
        subgroups,
        index,
        minimal,
        maximal,
    }
}

impl<'g> Lattice<'g> {
    pub fn group(&self) -> &'g GroupTable {
        self.group
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn subgroups(&self) -> &[Subgroup<'g>] {
        &self.subgroups
    }

    pub fn get(&self, i: usize) -> &Subgroup<'g> {
        &self.subgroups[i]
    }

    pub fn index_of(&self, members: &Mask) -> Option<usize> {
        self.index.get(members).copied()
    }

    /// Index of the whole group (always the last entry).
    pub fn top(&self) -> usize {
        self.subgroups.len() - 1
    }

    /// Inclusion: subgroup `i` is contained in subgroup `j`.
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.subgroups[i].members.is_subset(&self.subgroups[j].members)
    }

    pub fn minimal(&self) -> &[usize] {
        &self.minimal
    }

    pub fn maximal(&self) -> &[usize] {
        &self.maximal
    }

    pub fn meet(&self, i: usize, j: usize) -> Option<usize> {
        self.index_of(&self.subgroups[i].members.and(&self.subgroups[j].members))
    }

    pub fn join(&self, i: usize, j: usize) -> Option<usize> {
        let joined = join(&self.subgroups[i], &self.subgroups[j]).ok()?;
        self.index_of(&joined.members)
    }

    /// Covering pairs `(i, j)`: `i < j` in the lattice with nothing strictly
    /// between them. Derived by filtering the inclusion relation.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let s = &self.subgroups;
        let mut out = Vec::new();
        for j in 0..s.len() {
            for i in 0..j {
                let (oi, oj) = (s[i].order(), s[j].order());
                if oi >= oj || oj % oi != 0 || !self.leq(i, j) {
                    continue;
                }
                let between = (i + 1..j).any(|k| {
                    let ok = s[k].order();
                    ok > oi && ok < oj && oj % ok == 0 && ok.is_multiple_of(oi) && self.leq(i, k) && self.leq(k, j)
                });
                if !between {
                    out.push((i, j));
                }
            }
        }
        out
    }
}
