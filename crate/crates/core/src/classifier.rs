//! Recognizers for the cyclic, quaternion and odd-cyclic × quaternion
//! families, and the deficiency classification for `k = 0, 1, 2` as an
//! executable predicate.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::group::{is_isomorphic, GroupTable};
use crate::lattice::Lattice;
use crate::numtheory::{as_prime_power, prime_powers};

pub use crate::numtheory::factorize;

/// Structural family of a group. Variants are tried in declaration order and
/// the first match wins, so e.g. `C4` is `CyclicPSquared`, not
/// `CyclicPrimePower`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum StructureTag {
    Trivial,
    CyclicPSquared { p: u64 },
    CyclicPCubed { p: u64 },
    CyclicPQ { p: u64, q: u64 },
    CyclicPrimePower { p: u64, m: u32 },
    CyclicPmQn { p: u64, m: u32, q: u64, n: u32 },
    CyclicOther { order: u64 },
    GeneralizedQuaternion { n: u32 },
    CyclicOddTimesQuaternion { p: u64, m: u32, n: u32 },
    Other,
}

impl StructureTag {
    pub fn kind(&self) -> &'static str {
        match self {
            StructureTag::Trivial => "Trivial",
            StructureTag::CyclicPSquared { .. } => "CyclicPSquared",
            StructureTag::CyclicPCubed { .. } => "CyclicPCubed",
            StructureTag::CyclicPQ { .. } => "CyclicPQ",
            StructureTag::CyclicPrimePower { .. } => "CyclicPrimePower",
            StructureTag::CyclicPmQn { .. } => "CyclicPmQn",
            StructureTag::CyclicOther { .. } => "CyclicOther",
            StructureTag::GeneralizedQuaternion { .. } => "GeneralizedQuaternion",
            StructureTag::CyclicOddTimesQuaternion { .. } => "CyclicOddTimesQuaternion",
            StructureTag::Other => "Other",
        }
    }

    pub fn is_cyclic(&self) -> bool {
        matches!(
            self,
            StructureTag::Trivial
                | StructureTag::CyclicPSquared { .. }
                | StructureTag::CyclicPCubed { .. }
                | StructureTag::CyclicPQ { .. }
                | StructureTag::CyclicPrimePower { .. }
                | StructureTag::CyclicPmQn { .. }
                | StructureTag::CyclicOther { .. }
        )
    }

    /// Cyclic of order `p^m`, `m ≥ 1`.
    pub fn is_cyclic_p_group(&self) -> bool {
        matches!(
            self,
            StructureTag::CyclicPSquared { .. }
                | StructureTag::CyclicPCubed { .. }
                | StructureTag::CyclicPrimePower { .. }
        )
    }

    /// Cyclic of order `p^m q^n` with two distinct primes.
    pub fn is_cyclic_two_primes(&self) -> bool {
        matches!(self, StructureTag::CyclicPQ { .. } | StructureTag::CyclicPmQn { .. })
    }
}

impl fmt::Display for StructureTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            StructureTag::Trivial | StructureTag::Other => write!(f, "{}", self.kind()),
            StructureTag::CyclicPSquared { p } | StructureTag::CyclicPCubed { p } => {
                write!(f, "{}(p={p})", self.kind())
            }
            StructureTag::CyclicPQ { p, q } => write!(f, "CyclicPQ(p={p}, q={q})"),
            StructureTag::CyclicPrimePower { p, m } => write!(f, "CyclicPrimePower(p={p}, m={m})"),
            StructureTag::CyclicPmQn { p, m, q, n } => {
                write!(f, "CyclicPmQn(p={p}, m={m}, q={q}, n={n})")
            }
            StructureTag::CyclicOther { order } => write!(f, "CyclicOther(order={order})"),
            StructureTag::GeneralizedQuaternion { n } => write!(f, "GeneralizedQuaternion(n={n})"),
            StructureTag::CyclicOddTimesQuaternion { p, m, n } => {
                write!(f, "CyclicOddTimesQuaternion(p={p}, m={m}, n={n})")
            }
        }
    }
}

/// Some element has order `|G|`.
pub fn is_cyclic(g: &GroupTable) -> bool {
    g.elem_orders().any(|o| o == g.order())
}

/// `|G| = 2^n`, `n ≥ 3`, and `G ≅ Q_{2^n}`.
pub fn is_generalized_quaternion(g: &GroupTable) -> bool {
    quaternion_exponent(g).is_some()
}

fn quaternion_exponent(g: &GroupTable) -> Option<u32> {
    let n = g.order();
    if !n.is_power_of_two() || n < 8 || g.involution_count() != 1 {
        return None;
    }
    let e = n.trailing_zeros();
    let q = GroupTable::generalized_quaternion(e).ok()?;
    is_isomorphic(g, &q).then_some(e)
}

fn cyclic_tag(n: u64) -> StructureTag {
    match prime_powers(n).as_slice() {
        [] => StructureTag::Trivial,
        [(p, 2)] => StructureTag::CyclicPSquared { p: *p },
        [(p, 3)] => StructureTag::CyclicPCubed { p: *p },
        [(p, 1), (q, 1)] => StructureTag::CyclicPQ { p: *p, q: *q },
        [(p, m)] => StructureTag::CyclicPrimePower { p: *p, m: *m },
        [(p, m), (q, n)] => StructureTag::CyclicPmQn {
            p: *p,
            m: *m,
            q: *q,
            n: *n,
        },
        _ => StructureTag::CyclicOther { order: n },
    }
}

/// Recognizes `Z_{p^m} × Q_{2^n}` with `p` odd by isomorphism against the
/// explicit construction.
fn odd_cyclic_times_quaternion(g: &GroupTable) -> Option<StructureTag> {
    let order = g.order() as u64;
    let (two, odd) = match prime_powers(order).as_slice() {
        [(2, n), (p, m)] if *n >= 3 => ((2u64, *n), (*p, *m)),
        _ => return None,
    };
    if g.involution_count() != 1 || g.is_abelian() {
        return None;
    }
    let q = GroupTable::generalized_quaternion(two.1).ok()?;
    let c = GroupTable::cyclic(odd.0.pow(odd.1) as usize);
    let model = GroupTable::direct_product(&c, &q, usize::MAX).ok()?;
    is_isomorphic(g, &model).then_some(StructureTag::CyclicOddTimesQuaternion {
        p: odd.0,
        m: odd.1,
        n: two.1,
    })
}

pub fn structure_tag(g: &GroupTable) -> StructureTag {
    if g.order() == 1 {
        return StructureTag::Trivial;
    }
    if is_cyclic(g) {
        return cyclic_tag(g.order() as u64);
    }
    if let Some(n) = quaternion_exponent(g) {
        return StructureTag::GeneralizedQuaternion { n };
    }
    odd_cyclic_times_quaternion(g).unwrap_or(StructureTag::Other)
}

/// Outcome for one part of the classification.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum PartVerdict {
    Holds,
    Fails { label: String, direction: String },
}

impl PartVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, PartVerdict::Holds)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub a: PartVerdict,
    pub b: PartVerdict,
    pub c: PartVerdict,
}

impl Verdict {
    pub fn all_hold(&self) -> bool {
        self.a.holds() && self.b.holds() && self.c.holds()
    }

    pub fn parts(&self) -> [(&'static str, &PartVerdict); 3] {
        [("a", &self.a), ("b", &self.b), ("c", &self.c)]
    }
}

fn biconditional(label: &str, lhs: bool, rhs: bool, lhs_text: &str, rhs_text: &str) -> PartVerdict {
    match (lhs, rhs) {
        (true, false) => PartVerdict::Fails {
            label: label.to_string(),
            direction: format!("{lhs_text} but not {rhs_text}"),
        },
        (false, true) => PartVerdict::Fails {
            label: label.to_string(),
            direction: format!("{rhs_text} but not {lhs_text}"),
        },
        _ => PartVerdict::Holds,
    }
}

/// Checks, for one group, the three biconditionals
/// `k = 0 ⇔ CP₁`, `k = 1 ⇔ Z_{p²}`, `k = 2 ⇔ Z_{p³} or Z_{pq}`.
pub fn theorem_predicate(label: &str, tag: StructureTag, is_cp1: bool, k: usize) -> Verdict {
    Verdict {
        a: biconditional(label, k == 0, is_cp1, "k = 0", "CP1"),
        b: biconditional(
            label,
            k == 1,
            matches!(tag, StructureTag::CyclicPSquared { .. }),
            "k = 1",
            "cyclic of order p^2",
        ),
        c: biconditional(
            label,
            k == 2,
            matches!(tag, StructureTag::CyclicPCubed { .. } | StructureTag::CyclicPQ { .. }),
            "k = 2",
            "cyclic of order p^3 or pq",
        ),
    }
}

/// The three classical lattice facts, evaluated on one group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassicalFacts {
    pub maximal_count: usize,
    pub minimal_count: usize,
    /// At most two maximal subgroups ⇒ cyclic.
    pub few_maximal_implies_cyclic: bool,
    /// Unique minimal subgroup ⇔ cyclic p-group or generalized quaternion.
    pub unique_minimal_iff: bool,
    /// Exactly two minimal subgroups ⇔ cyclic of order `p^m q^n` or
    /// `Z_{p^m} × Q_{2^n}` with `p` odd.
    pub two_minimal_iff: bool,
}

impl ClassicalFacts {
    pub fn all_hold(&self) -> bool {
        self.few_maximal_implies_cyclic && self.unique_minimal_iff && self.two_minimal_iff
    }
}

pub fn classical_facts(g: &GroupTable, lattice: &Lattice<'_>, tag: StructureTag) -> ClassicalFacts {
    let maximal_count = lattice.maximal().len();
    let minimal_count = lattice.minimal().len();
    let unique_family =
        tag.is_cyclic_p_group() || matches!(tag, StructureTag::GeneralizedQuaternion { .. });
    let two_family = (tag.is_cyclic_two_primes() && is_cyclic(g))
        || matches!(tag, StructureTag::CyclicOddTimesQuaternion { .. });
    ClassicalFacts {
        maximal_count,
        minimal_count,
        few_maximal_implies_cyclic: maximal_count > 2 || is_cyclic(g),
        unique_minimal_iff: (minimal_count == 1) == unique_family,
        two_minimal_iff: (minimal_count == 2) == two_family,
    }
}

/// Abelian `p`-group of type `Z_{p^a1} × ⋯ × Z_{p^ak}` with every `ai ≥ 2`:
/// every element of order `p` is a `p`-th power.
pub fn is_abelian_p_group_without_order_p_factors(g: &GroupTable) -> bool {
    let Some((p, _)) = as_prime_power(g.order() as u64) else {
        return false;
    };
    let p = p as usize;
    if !g.is_abelian() {
        return false;
    }
    let mut pth_powers = vec![false; g.order()];
    for x in 0..g.order() {
        pth_powers[g.pow(x, p)] = true;
    }
    (0..g.order()).all(|x| g.elem_order(x) != p || pth_powers[x])
}

/// Builds the reference group for a cyclic-family tag, for round-trip checks.
pub fn representative(tag: StructureTag) -> Option<GroupTable> {
    let cyclic = |n: u64| Some(GroupTable::cyclic(n as usize));
    match tag {
        StructureTag::Trivial => cyclic(1),
        StructureTag::CyclicPSquared { p } => cyclic(p * p),
        StructureTag::CyclicPCubed { p } => cyclic(p * p * p),
        StructureTag::CyclicPQ { p, q } => cyclic(p * q),
        StructureTag::CyclicPrimePower { p, m } => cyclic(p.pow(m)),
        StructureTag::CyclicPmQn { p, m, q, n } => cyclic(p.pow(m) * q.pow(n)),
        StructureTag::CyclicOther { order } => cyclic(order),
        StructureTag::GeneralizedQuaternion { n } => GroupTable::generalized_quaternion(n).ok(),
        StructureTag::CyclicOddTimesQuaternion { p, m, n } => GroupTable::direct_product(
            &GroupTable::cyclic(p.pow(m) as usize),
            &GroupTable::generalized_quaternion(n).ok()?,
            usize::MAX,
        )
        .ok(),
        StructureTag::Other => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::isolation::isolation_report;
    use crate::lattice::all_subgroups;

    #[test]
    fn cyclic_recognition() {
        for n in 1..30 {
            assert!(is_cyclic(&GroupTable::cyclic(n)));
        }
        assert!(!is_cyclic(&GroupTable::abelian(&[2, 2], 200).unwrap()));
        assert!(!is_cyclic(&GroupTable::cyclic_semidirect(3, 2, None).unwrap()));
    }

    #[test]
    fn quaternion_recognition() {
        assert!(is_generalized_quaternion(&GroupTable::generalized_quaternion(3).unwrap()));
        assert!(!is_generalized_quaternion(&GroupTable::dihedral(4)));
        assert!(!is_generalized_quaternion(&GroupTable::cyclic(8)));
        assert!(!is_generalized_quaternion(&GroupTable::dicyclic(3).unwrap()));
    }

    #[test]
    fn tag_examples() {
        assert_eq!(structure_tag(&GroupTable::cyclic(9)), StructureTag::CyclicPSquared { p: 3 });
        assert_eq!(structure_tag(&GroupTable::cyclic(15)), StructureTag::CyclicPQ { p: 3, q: 5 });
        assert_eq!(structure_tag(&GroupTable::cyclic(8)), StructureTag::CyclicPCubed { p: 2 });
        assert_eq!(structure_tag(&GroupTable::cyclic(7)), StructureTag::CyclicPrimePower { p: 7, m: 1 });
        assert_eq!(
            structure_tag(&GroupTable::cyclic(12)),
            StructureTag::CyclicPmQn { p: 2, m: 2, q: 3, n: 1 }
        );
        assert_eq!(structure_tag(&GroupTable::cyclic(30)), StructureTag::CyclicOther { order: 30 });
        assert_eq!(structure_tag(&GroupTable::trivial()), StructureTag::Trivial);
        let q8 = GroupTable::generalized_quaternion(3).unwrap();
        assert_eq!(structure_tag(&q8), StructureTag::GeneralizedQuaternion { n: 3 });
        let g = GroupTable::direct_product(&GroupTable::cyclic(3), &q8, 200).unwrap();
        assert_eq!(
            structure_tag(&g),
            StructureTag::CyclicOddTimesQuaternion { p: 3, m: 1, n: 3 }
        );
        // relabelled the other way round
        let g = GroupTable::direct_product(&q8, &GroupTable::cyclic(3), 200).unwrap();
        assert_eq!(
            structure_tag(&g),
            StructureTag::CyclicOddTimesQuaternion { p: 3, m: 1, n: 3 }
        );
        assert_eq!(structure_tag(&GroupTable::dicyclic(3).unwrap()), StructureTag::Other);
        assert_eq!(structure_tag(&GroupTable::dihedral(4)), StructureTag::Other);
    }

    #[test]
    fn p_squared_round_trips() {
        for p in [2u64, 3, 5, 7, 11, 13] {
            let g = GroupTable::cyclic((p * p) as usize);
            let tag = structure_tag(&g);
            assert_eq!(tag, StructureTag::CyclicPSquared { p });
            assert!(is_isomorphic(&g, &representative(tag).unwrap()));
            // the non-cyclic group of the same order is not tagged p^2
            let e = GroupTable::abelian(&[p as usize, p as usize], 200).unwrap();
            assert_ne!(structure_tag(&e), tag);
        }
    }

    #[test]
    fn predicate_examples() {
        assert!(theorem_predicate("C4", StructureTag::CyclicPSquared { p: 2 }, false, 1).all_hold());
        assert!(theorem_predicate("S3", StructureTag::Other, true, 0).all_hold());
        assert!(theorem_predicate("C8", StructureTag::CyclicPCubed { p: 2 }, false, 2).all_hold());
        let v = theorem_predicate("X", StructureTag::Other, false, 1);
        assert!(v.a.holds() && v.c.holds());
        assert_eq!(
            v.b,
            PartVerdict::Fails {
                label: "X".into(),
                direction: "k = 1 but not cyclic of order p^2".into()
            }
        );
        let v = theorem_predicate("Y", StructureTag::CyclicPQ { p: 2, q: 3 }, false, 3);
        assert!(matches!(&v.c, PartVerdict::Fails { direction, .. } if direction.starts_with("cyclic")));
    }

    #[test]
    fn predicate_on_small_groups() {
        let groups = [
            GroupTable::cyclic(4),
            GroupTable::cyclic(6),
            GroupTable::cyclic(27),
            GroupTable::dihedral(4),
            GroupTable::symmetric(4, 200).unwrap(),
            GroupTable::abelian(&[3, 3], 200).unwrap(),
        ];
        for g in &groups {
            let l = all_subgroups(g);
            let r = isolation_report(g, &l);
            let v = theorem_predicate(g.label(), structure_tag(g), r.is_cp1, r.deficiency_k);
            assert!(v.all_hold(), "{}: {v:?}", g.label());
        }
    }

    #[test]
    fn abelian_type_recognition() {
        assert!(is_abelian_p_group_without_order_p_factors(&GroupTable::abelian(&[4, 4], 200).unwrap()));
        assert!(is_abelian_p_group_without_order_p_factors(&GroupTable::abelian(&[9, 27], 300).unwrap()));
        assert!(!is_abelian_p_group_without_order_p_factors(&GroupTable::abelian(&[2, 4], 200).unwrap()));
        assert!(!is_abelian_p_group_without_order_p_factors(&GroupTable::cyclic(6)));
        assert!(!is_abelian_p_group_without_order_p_factors(
            &GroupTable::generalized_quaternion(3).unwrap()
        ));
    }

    #[test]
    fn classical_facts_on_examples() {
        let q8 = GroupTable::generalized_quaternion(3).unwrap();
        let l = all_subgroups(&q8);
        let f = classical_facts(&q8, &l, structure_tag(&q8));
        assert_eq!((f.minimal_count, f.maximal_count), (1, 3));
        assert!(f.all_hold());
        let c12 = GroupTable::cyclic(12);
        let l = all_subgroups(&c12);
        let f = classical_facts(&c12, &l, structure_tag(&c12));
        assert_eq!((f.minimal_count, f.maximal_count), (2, 2));
        assert!(f.all_hold());
    }
}
