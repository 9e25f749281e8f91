use std::collections::HashMap;

use super::GroupTable;
use crate::error::GroupError;

/// Permutations of `{0..degree}` given as image tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermutationGeneratorSet {
    degree: usize,
    generators: Vec<Vec<usize>>,
}

impl PermutationGeneratorSet {
    pub fn new(degree: usize, generators: Vec<Vec<usize>>) -> Result<Self, GroupError> {
        if degree == 0 {
            return Err(GroupError::InvalidParameter("degree must be positive".into()));
        }
        for (i, g) in generators.iter().enumerate() {
            let mut seen = vec![false; degree];
            let ok = g.len() == degree
                && g.iter()
                    .all(|&x| x < degree && !std::mem::replace(&mut seen[x], true));
            if !ok {
                return Err(GroupError::InvalidPermutation {
                    generator: i,
                    degree,
                });
            }
        }
        Ok(PermutationGeneratorSet { degree, generators })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Vec<usize>] {
        &self.generators
    }
}

/// `p` then `q`: `x ↦ q(p(x))`.
fn compose(p: &[u16], q: &[u16]) -> Vec<u16> {
    p.iter().map(|&x| q[x as usize]).collect()
}

impl GroupTable {
    /// Breadth-first closure of the generators under composition. Elements
    /// are indexed in discovery order, starting from the identity.
    pub fn from_perm_generators(
        gens: &PermutationGeneratorSet,
        cap: usize,
    ) -> Result<Self, GroupError> {
        let d = gens.degree;
        if d > u16::MAX as usize {
            return Err(GroupError::InvalidParameter(format!("degree {d} is too large")));
        }
        let gens: Vec<Vec<u16>> = gens
            .generators
            .iter()
            .map(|g| g.iter().map(|&x| x as u16).collect())
            .collect();
        let identity: Vec<u16> = (0..d as u16).collect();
        let mut elems = vec![identity.clone()];
        let mut index: HashMap<Vec<u16>, usize> = HashMap::from([(identity, 0)]);
        let mut i = 0;
        while i < elems.len() {
            for g in &gens {
                let y = compose(&elems[i], g);
                if !index.contains_key(&y) {
                    if elems.len() == cap {
                        return Err(GroupError::OrderCapExceeded {
                            cap,
                            reached: elems.len() + 1,
                        });
                    }
                    index.insert(y.clone(), elems.len());
                    elems.push(y);
                }
            }
            i += 1;
        }
        let n = elems.len();
        let mut mul = Vec::with_capacity(n * n);
        for a in &elems {
            for b in &elems {
                mul.push(index[&compose(a, b)] as u32);
            }
        }
        GroupTable::from_flat(n, mul, format!("perm(degree {d})"))
    }
}
