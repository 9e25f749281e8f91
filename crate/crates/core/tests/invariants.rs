use std::collections::BTreeSet;

use proptest::prelude::*;

use isolatta_core::catalog::{build_catalog, recipes};
use isolatta_core::group::is_isomorphic;
use isolatta_core::isolation::{is_isolated, isolation_report, isolation_witness};
use isolatta_core::lattice::all_subgroups;
use isolatta_core::numtheory::{divisors, lcm};
use isolatta_core::spec::parse_spec;
use isolatta_core::{GroupTable, DEFAULT_ORDER_CAP};

fn pool() -> Vec<GroupTable> {
    [
        "C1", "C2", "C5", "C6", "C8", "C12", "A(2,2)", "A(2,4)", "D6", "D8", "D10", "Q8", "Dic12", "S3", "Alt4",
        "C7:C3", "He3", "C3xS3", "Q16", "C2xQ8",
    ]
    .iter()
    .map(|s| isolatta_core::spec::build_group(s, DEFAULT_ORDER_CAP).unwrap())
    .collect()
}

fn cycle(g: &GroupTable, x: usize) -> BTreeSet<usize> {
    let mut out = BTreeSet::from([0]);
    let mut y = x;
    while y != 0 {
        out.insert(y);
        y = g.mul(y, x);
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn product_orders_are_pairwise_lcms(i in 0usize..20, j in 0usize..20) {
        let p = pool();
        let (a, b) = (&p[i], &p[j]);
        prop_assume!(a.order() * b.order() <= DEFAULT_ORDER_CAP);
        let g = GroupTable::direct_product(a, b, DEFAULT_ORDER_CAP).unwrap();
        let mut want: Vec<usize> = a
            .elem_orders()
            .flat_map(|x| b.elem_orders().map(move |y| lcm(x as u64, y as u64) as usize))
            .collect();
        want.sort_unstable();
        let mut got = g.order_multiset();
        got.sort_unstable();
        prop_assert_eq!(got, want);
    }

    #[test]
    fn isolation_matches_definition(i in 0usize..20) {
        let g = &pool()[i];
        let l = all_subgroups(g);
        let report = isolation_report(g, &l);
        for (idx, h) in l.subgroups().iter().enumerate() {
            let members: BTreeSet<usize> = h.elements().into_iter().collect();
            let by_definition = (0..g.order())
                .all(|x| members.contains(&x) || cycle(g, x).intersection(&members).count() == 1);
            prop_assert_eq!(is_isolated(g, h).unwrap(), by_definition);
            prop_assert_eq!(report.isolated[idx], by_definition);
            match isolation_witness(g, h) {
                Some(x) => {
                    prop_assert!(!members.contains(&x));
                    prop_assert!(cycle(g, x).intersection(&members).count() > 1);
                }
                None => prop_assert!(by_definition),
            }
        }
        prop_assert_eq!(report.isolated_count + report.deficiency_k, report.lattice_size);
    }

    #[test]
    fn meet_and_join_are_lattice_operations(i in 0usize..20, a in 0usize..64, b in 0usize..64) {
        let g = &pool()[i];
        let l = all_subgroups(g);
        let (a, b) = (a % l.len(), b % l.len());
        let m = l.meet(a, b).unwrap();
        let j = l.join(a, b).unwrap();
        prop_assert!(l.leq(m, a) && l.leq(m, b) && l.leq(a, j) && l.leq(b, j));
        for c in 0..l.len() {
            if l.leq(c, a) && l.leq(c, b) {
                prop_assert!(l.leq(c, m));
            }
            if l.leq(a, c) && l.leq(b, c) {
                prop_assert!(l.leq(j, c));
            }
        }
    }
}

#[test]
fn prime_power_cyclic_deficiency() {
    for p in [2usize, 3, 5] {
        let mut n = p * p;
        let mut k = 1;
        while n <= DEFAULT_ORDER_CAP {
            let g = GroupTable::cyclic(n);
            let l = all_subgroups(&g);
            assert_eq!(isolation_report(&g, &l).deficiency_k, k, "C{n}");
            n *= p;
            k += 1;
        }
    }
}

#[test]
fn cyclic_deficiency_is_divisor_count_minus_two() {
    for n in 2..=120usize {
        let g = GroupTable::cyclic(n);
        let l = all_subgroups(&g);
        assert_eq!(isolation_report(&g, &l).deficiency_k, divisors(n as u64).len() - 2, "C{n}");
    }
}

#[test]
fn recipe_labels_reparse() {
    for spec in recipes(60) {
        assert_eq!(parse_spec(&spec.to_string()).unwrap(), spec);
    }
}

#[test]
fn catalog_entries_validate_and_are_distinct() {
    let c = build_catalog(24);
    for e in &c.entries {
        let rebuilt = GroupTable::from_cayley(&e.group.to_rows()).unwrap();
        assert_eq!(rebuilt.order(), e.group.order());
        assert_eq!(parse_spec(&e.canonical_label).unwrap().nominal_order(), Some(e.group.order()));
    }
    for (i, a) in c.entries.iter().enumerate() {
        for b in &c.entries[i + 1..] {
            if a.group.order() == b.group.order() {
                assert!(!is_isomorphic(&a.group, &b.group), "{} ~ {}", a.canonical_label, b.canonical_label);
            }
        }
    }
}
