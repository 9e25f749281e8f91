//! Per-group analysis and catalog sweeps.

use serde::{Deserialize, Serialize};

use crate::catalog::{Catalog, Coverage};
use crate::classifier::{classical_facts, structure_tag, theorem_predicate, ClassicalFacts, StructureTag, Verdict};
use crate::exec::Strategy;
use crate::group::GroupTable;
use crate::isolation::{isolation_report_with, IsolationReport};
use crate::lattice::all_subgroups;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupAnalysis {
    pub label: String,
    pub order: usize,
    pub report: IsolationReport,
    pub tag: StructureTag,
    pub verdict: Verdict,
    pub facts: ClassicalFacts,
}

/// Lattice, isolation report, structure tag and classification verdict for
/// one group. `strategy` governs the isolation checks inside the lattice.
pub fn analyze_group(g: &GroupTable, strategy: Strategy) -> GroupAnalysis {
    let lattice = all_subgroups(g);
    let report = isolation_report_with(g, &lattice, strategy);
    let tag = structure_tag(g);
    let verdict = theorem_predicate(g.label(), tag, report.is_cp1, report.deficiency_k);
    let facts = classical_facts(g, &lattice, tag);
    GroupAnalysis {
        label: g.label().to_string(),
        order: g.order(),
        report,
        tag,
        verdict,
        facts,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderSummary {
    pub order: usize,
    pub classes: usize,
    pub coverage: Coverage,
    /// Passing groups for parts a, b, c.
    pub passed: [usize; 3],
    pub failed: [usize; 3],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub iso_class_id: usize,
    pub analysis: GroupAnalysis,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifySummary {
    pub max_order: usize,
    pub groups: usize,
    pub orders: Vec<OrderSummary>,
    pub failures: Vec<Counterexample>,
    /// Groups violating one of the classical lattice facts. Informational:
    /// these do not count as classification failures.
    pub classical_fact_violations: Vec<Counterexample>,
}

impl VerifySummary {
    pub fn failure_count(&self) -> usize {
        self.failures.len()
    }

    pub fn part_totals(&self) -> ([usize; 3], [usize; 3]) {
        let mut pass = [0; 3];
        let mut fail = [0; 3];
        for o in &self.orders {
            for i in 0..3 {
                pass[i] += o.passed[i];
                fail[i] += o.failed[i];
            }
        }
        (pass, fail)
    }
}

/// Analyzes every catalog entry (in parallel under `Strategy::Parallel`) and
/// tallies the classification verdicts per order.
pub fn verify_catalog(catalog: &Catalog, max_order: usize, strategy: Strategy) -> VerifySummary {
    let analyses = strategy.map(&catalog.entries, |e| analyze_group(&e.group, Strategy::Sequential));
    let mut orders: Vec<OrderSummary> = (1..=max_order)
        .map(|order| OrderSummary {
            order,
            classes: 0,
            coverage: crate::catalog::coverage_for_order(order),
            passed: [0; 3],
            failed: [0; 3],
        })
        .collect();
    let mut failures = Vec::new();
    let mut classical_fact_violations = Vec::new();
    for (entry, analysis) in catalog.entries.iter().zip(analyses) {
        let Some(slot) = orders.get_mut(entry.group.order() - 1) else {
            continue;
        };
        slot.classes += 1;
        for (i, (_, part)) in analysis.verdict.parts().iter().enumerate() {
            if part.holds() {
                slot.passed[i] += 1;
            } else {
                slot.failed[i] += 1;
            }
        }
        if !analysis.facts.all_hold() {
            classical_fact_violations.push(Counterexample {
                iso_class_id: entry.iso_class_id,
                analysis: analysis.clone(),
            });
        }
        if !analysis.verdict.all_hold() {
            failures.push(Counterexample {
                iso_class_id: entry.iso_class_id,
                analysis,
            });
        }
    }
    VerifySummary {
        max_order,
        groups: catalog.entries.iter().filter(|e| e.group.order() <= max_order).count(),
        orders,
        failures,
        classical_fact_violations,
    }
}
