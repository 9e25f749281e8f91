//! A deduplicated catalog of small groups built from construction recipes.
//!
//! Orders for which the recipe set is known to cover every isomorphism class
//! are marked [`Coverage::Exhaustive`]; every other order is
//! [`Coverage::Sampled`].

use std::collections::HashMap;
use std::fmt;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::analysis::GroupAnalysis;
use crate::classifier::{is_abelian_p_group_without_order_p_factors, StructureTag};
use crate::exec::Strategy;
use crate::group::{io, is_isomorphic, Fingerprint, GroupTable, DEFAULT_ORDER_CAP};
use crate::numtheory::{default_twist, gcd, is_prime, partitions, pow_mod, prime_powers};
use crate::spec::GroupSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Coverage {
    Exhaustive,
    Sampled,
}

impl fmt::Display for Coverage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Coverage::Exhaustive => "exhaustive",
            Coverage::Sampled => "sampled",
        })
    }
}

/// Whether the built-in recipes provably reach every isomorphism class of
/// the given order: orders up to 15, and orders of the form `p`, `p²`, `pq`
/// and `p³`.
pub fn coverage_for_order(n: usize) -> Coverage {
    if n <= 15 {
        return Coverage::Exhaustive;
    }
    let covered = match prime_powers(n as u64).as_slice() {
        [(_, 1..=3)] => true,
        [(_, 1), (_, 1)] => true,
        _ => false,
    };
    if covered {
        Coverage::Exhaustive
    } else {
        Coverage::Sampled
    }
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub group: GroupTable,
    pub canonical_label: String,
    pub iso_class_id: usize,
    pub coverage: Coverage,
}

#[derive(Debug, Clone)]
pub struct CatalogOptions {
    pub max_order: usize,
    pub cap: usize,
    /// Directory of permutation-generator files; each file stem is a label.
    pub extra_groups: Option<PathBuf>,
    pub strategy: Strategy,
}

impl CatalogOptions {
    pub fn new(max_order: usize) -> Self {
        CatalogOptions {
            max_order,
            cap: DEFAULT_ORDER_CAP,
            extra_groups: None,
            strategy: Strategy::default(),
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct Catalog {
    pub entries: Vec<CatalogEntry>,
    /// Recipes that could not be evaluated (skipped, not fatal).
    pub warnings: Vec<String>,
}

impl Catalog {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Number of isomorphism classes per order, for orders `1..=max_order`.
    pub fn class_counts(&self, max_order: usize) -> Vec<usize> {
        let mut counts = vec![0; max_order];
        for e in &self.entries {
            if (1..=max_order).contains(&e.group.order()) {
                counts[e.group.order() - 1] += 1;
            }
        }
        counts
    }

    /// Tab-separated listing: `order, iso_class_id, label, coverage`.
    pub fn listing(&self) -> String {
        self.entries
            .iter()
            .map(|e| {
                format!(
                    "{}\t{}\t{}\t{}\n",
                    e.group.order(),
                    e.iso_class_id,
                    e.canonical_label,
                    e.coverage
                )
            })
            .collect()
    }
}

/// Abelian groups of order `n` as invariant-factor lists `d1 | d2 | ...`.
pub fn abelian_types(n: usize) -> Vec<Vec<usize>> {
    let mut types: Vec<Vec<usize>> = vec![vec![]];
    for (p, e) in prime_powers(n as u64) {
        let mut next = Vec::new();
        for t in &types {
            for part in partitions(e) {
                // merge largest prime powers into the largest invariant factors
                let mut powers: Vec<usize> = part.iter().rev().map(|&a| (p as usize).pow(a)).collect();
                let mut merged = t.clone();
                merged.reverse();
                let len = merged.len().max(powers.len());
                merged.resize(len, 1);
                powers.resize(len, 1);
                let mut combined: Vec<usize> = merged.iter().zip(&powers).map(|(a, b)| a * b).collect();
                combined.reverse();
                next.push(combined);
            }
        }
        types = next;
    }
    types
}

fn abelian_spec(parts: Vec<usize>) -> GroupSpec {
    match parts.as_slice() {
        [] => GroupSpec::Cyclic(1),
        [n] => GroupSpec::Cyclic(*n),
        _ => GroupSpec::Abelian(parts),
    }
}

/// The built-in recipe list for orders up to `max_order`, in evaluation
/// order.
pub fn recipes(max_order: usize) -> Vec<GroupSpec> {
    let mut abelian = Vec::new();
    for n in 1..=max_order {
        for t in abelian_types(n) {
            abelian.push(abelian_spec(t));
        }
    }

    let mut nonabelian = Vec::new();
    for m in 3..=max_order / 2 {
        nonabelian.push(GroupSpec::Dihedral(2 * m));
    }
    for m in 2..=max_order / 4 {
        if m.is_power_of_two() {
            nonabelian.push(GroupSpec::Quaternion(4 * m));
        } else {
            nonabelian.push(GroupSpec::Dicyclic(4 * m));
        }
    }
    for d in 3.. {
        let order: usize = (1..=d).product();
        if order > max_order {
            break;
        }
        nonabelian.push(GroupSpec::Symmetric(d));
    }
    for d in 4.. {
        let order: usize = (1..=d).product::<usize>() / 2;
        if order > max_order {
            break;
        }
        nonabelian.push(GroupSpec::Alternating(d));
    }
    for q in 3..=max_order / 2 {
        for d in 2..=max_order / q {
            for r in 2..q {
                if gcd(r as u64, q as u64) == 1 && pow_mod(r, d, q) == 1 {
                    let default = default_twist(q, d);
                    let r = if Some(r) == default { None } else { Some(r) };
                    nonabelian.push(GroupSpec::CyclicSemidirect { q, d, r });
                }
            }
        }
    }
    for p in 3.. {
        if p * p * p > max_order {
            break;
        }
        if is_prime(p as u64) {
            nonabelian.push(GroupSpec::Heisenberg(p));
        }
    }

    let mut products = Vec::new();
    for base in &nonabelian {
        let Some(o) = base.nominal_order() else { continue };
        for a in &abelian {
            let Some(m) = a.nominal_order() else { continue };
            if m >= 2 && o * m <= max_order {
                products.push(GroupSpec::Product(Box::new(base.clone()), Box::new(a.clone())));
            }
        }
    }

    abelian.into_iter().chain(nonabelian).chain(products).collect()
}

/// Permutation-generator files in `dir`, sorted by file name.
fn extra_group_files(dir: &Path) -> Result<Vec<PathBuf>, String> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(dir)
        .map_err(|e| format!("{}: {e}", dir.display()))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.is_file())
        .collect();
    files.sort();
    Ok(files)
}

pub fn build_catalog(max_order: usize) -> Catalog {
    build_catalog_with(&CatalogOptions::new(max_order))
}

pub fn build_catalog_with(opts: &CatalogOptions) -> Catalog {
    let mut warnings = Vec::new();
    let max_order = opts.max_order.min(opts.cap);
    if opts.max_order > opts.cap {
        warnings.push(format!(
            "max order {} exceeds the order cap {}; using {}",
            opts.max_order, opts.cap, max_order
        ));
    }

    let specs = recipes(max_order);
    let mut built: Vec<(String, Result<GroupTable, String>)> = opts
        .strategy
        .map(&specs, |s| (s.to_string(), s.evaluate(opts.cap).map_err(|e| e.to_string())));

    if let Some(dir) = &opts.extra_groups {
        match extra_group_files(dir) {
            Ok(files) => {
                let extra = opts.strategy.map(&files, |path| {
                    let label = path
                        .file_stem()
                        .map(|s| s.to_string_lossy().into_owned())
                        .unwrap_or_else(|| path.display().to_string());
                    (label, io::load_perm_group(path, opts.cap).map_err(|e| e.to_string()))
                });
                built.extend(extra);
            }
            Err(e) => warnings.push(format!("extra groups: {e}")),
        }
    }

    let mut groups: Vec<(String, GroupTable, Fingerprint)> = Vec::new();
    for (label, result) in built {
        match result {
            Ok(g) if g.order() <= max_order => {
                let g = g.with_label(label.clone());
                let fp = Fingerprint::of(&g);
                groups.push((label, g, fp));
            }
            Ok(_) => {}
            Err(e) => {
                log::warn!("skipping recipe {label}: {e}");
                warnings.push(format!("skipped {label}: {e}"));
            }
        }
    }
    // stable: recipe order is kept within each order
    groups.sort_by_key(|(_, g, _)| g.order());

    let mut registry: HashMap<Fingerprint, Vec<usize>> = HashMap::new();
    let mut entries: Vec<CatalogEntry> = Vec::new();
    for (label, g, fp) in groups {
        let bucket = registry.entry(fp).or_default();
        if bucket.iter().any(|&i| is_isomorphic(&entries[i].group, &g)) {
            continue;
        }
        bucket.push(entries.len());
        entries.push(CatalogEntry {
            iso_class_id: entries.len(),
            canonical_label: label,
            coverage: coverage_for_order(g.order()),
            group: g,
        });
    }
    Catalog { entries, warnings }
}

/// Known families of isolated-simple groups.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum KnownFamily {
    Cyclic,
    GeneralizedQuaternion,
    /// Abelian `p`-group with every cyclic factor of order at least `p²`.
    AbelianPGroupHighType,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchHit {
    pub entry: usize,
    pub label: String,
    pub order: usize,
    pub iso_class_id: usize,
    pub tag: StructureTag,
    pub family: Option<KnownFamily>,
    pub novel_candidate: bool,
}

fn known_family(g: &GroupTable, tag: StructureTag) -> Option<KnownFamily> {
    if tag.is_cyclic() {
        Some(KnownFamily::Cyclic)
    } else if matches!(tag, StructureTag::GeneralizedQuaternion { .. }) {
        Some(KnownFamily::GeneralizedQuaternion)
    } else if is_abelian_p_group_without_order_p_factors(g) {
        Some(KnownFamily::AbelianPGroupHighType)
    } else {
        None
    }
}

/// Every catalog entry whose analysis marks it isolated-simple, tagged with
/// its structure; entries outside the known families are novel candidates.
pub fn search_isolated_simple<F>(catalog: &Catalog, strategy: Strategy, report_fn: F) -> Vec<SearchHit>
where
    F: Fn(&CatalogEntry) -> GroupAnalysis + Sync + Send,
{
    let analyses = strategy.map(&catalog.entries, |e| report_fn(e));
    catalog
        .entries
        .iter()
        .zip(analyses)
        .enumerate()
        .filter(|(_, (_, a))| a.report.is_isolated_simple)
        .map(|(i, (e, a))| {
            let family = known_family(&e.group, a.tag);
            SearchHit {
                entry: i,
                label: e.canonical_label.clone(),
                order: e.group.order(),
                iso_class_id: e.iso_class_id,
                tag: a.tag,
                family,
                novel_candidate: family.is_none(),
            }
        })
        .collect()
}
