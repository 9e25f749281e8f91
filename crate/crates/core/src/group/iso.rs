//! Isomorphism testing by backtracking over generator images.

use super::GroupTable;

/// Cheap isomorphism invariants used as a pre-filter.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fingerprint {
    pub order: usize,
    pub order_multiset: Vec<usize>,
    pub abelian: bool,
    pub center_order: usize,
}

impl Fingerprint {
    pub fn of(g: &GroupTable) -> Self {
        Fingerprint {
            order: g.order(),
            order_multiset: g.order_multiset(),
            abelian: g.is_abelian(),
            center_order: g.center().len(),
        }
    }
}

const UNSET: usize = usize::MAX;

struct Search<'a> {
    a: &'a GroupTable,
    b: &'a GroupTable,
    gens: Vec<usize>,
    // candidates[i]: elements of b with the order of gens[i]
    candidates: Vec<Vec<usize>>,
}

impl Search<'_> {
    /// Extends `map` (a homomorphism defined on `⟨gens[..k]⟩`) to
    /// `⟨gens[..=k]⟩` with `gens[k] ↦ image`. Returns the newly assigned
    /// elements, or `None` on a conflict (the map is left untouched).
    fn extend(&self, map: &mut [usize], used: &mut [bool], k: usize, image: usize) -> Option<Vec<usize>> {
        let g = self.gens[k];
        let mut added = Vec::new();
        let undo = |map: &mut [usize], used: &mut [bool], added: &[usize]| {
            for &x in added {
                used[map[x]] = false;
                map[x] = UNSET;
            }
        };
        if map[g] != UNSET {
            return if map[g] == image { Some(added) } else { None };
        }
        if used[image] {
            return None;
        }
        map[g] = image;
        used[image] = true;
        added.push(g);

        let mut frontier: Vec<usize> = (0..self.a.order()).filter(|&x| map[x] != UNSET).collect();
        let mut i = 0;
        while i < frontier.len() {
            let x = frontier[i];
            for &h in &self.gens[..=k] {
                let y = self.a.mul(x, h);
                let img = self.b.mul(map[x], map[h]);
                if map[y] == UNSET {
                    if used[img] {
                        undo(map, used, &added);
                        return None;
                    }
                    map[y] = img;
                    used[img] = true;
                    added.push(y);
                    frontier.push(y);
                } else if map[y] != img {
                    undo(map, used, &added);
                    return None;
                }
            }
            i += 1;
        }
        Some(added)
    }

    fn run(&self, map: &mut [usize], used: &mut [bool], k: usize) -> bool {
        if k == self.gens.len() {
            return true;
        }
        for &image in &self.candidates[k] {
            if let Some(added) = self.extend(map, used, k, image) {
                if self.run(map, used, k + 1) {
                    return true;
                }
                for &x in &added {
                    used[map[x]] = false;
                    map[x] = UNSET;
                }
            }
        }
        false
    }
}

/// Searches for an isomorphism `a → b`, returned as an image table.
pub fn find_isomorphism(a: &GroupTable, b: &GroupTable) -> Option<Vec<usize>> {
    if a.order() != b.order() {
        return None;
    }
    if Fingerprint::of(a) != Fingerprint::of(b) {
        return None;
    }
    let gens = a.greedy_generators();
    let candidates = gens
        .iter()
        .map(|&g| {
            (0..b.order())
                .filter(|&y| b.elem_order(y) == a.elem_order(g))
                .collect()
        })
        .collect();
    let search = Search { a, b, gens, candidates };
    let mut map = vec![UNSET; a.order()];
    let mut used = vec![false; b.order()];
    map[0] = 0;
    used[0] = true;
    if search.run(&mut map, &mut used, 0) {
        debug_assert!(map.iter().all(|&x| x != UNSET));
        Some(map)
    } else {
        None
    }
}

pub fn is_isomorphic(a: &GroupTable, b: &GroupTable) -> bool {
    find_isomorphism(a, b).is_some()
}
