//! Command-line front end: analyze a group, verify the classification over
//! the catalog, search for isolated-simple groups, export lattice diagrams.
//!
//! Exit codes: 0 success, 1 classification failure found by `verify`,
//! 2 usage, parse, validation or I/O error.

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use isolatta_core::analysis::{analyze_group, verify_catalog, GroupAnalysis, VerifySummary};
use isolatta_core::catalog::{build_catalog_with, search_isolated_simple, CatalogOptions, SearchHit};
use isolatta_core::classifier::StructureTag;
use isolatta_core::isolation::isolation_report_with;
use isolatta_core::lattice::{all_subgroups, Lattice};
use isolatta_core::spec::build_group;
use isolatta_core::{GroupTable, Strategy, DEFAULT_ORDER_CAP};

pub const FORMAT_VERSION: u32 = 1;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "isolatta", version, about = "Isolated subgroups of finite groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Json,
}

#[derive(Debug, Args)]
pub struct CommonArgs {
    #[arg(long, value_enum, default_value = "human")]
    pub format: Format,
    /// Largest group order any construction may reach.
    #[arg(long, env = "ISOLATTA_CAP", default_value_t = DEFAULT_ORDER_CAP)]
    pub cap: usize,
    /// Write the result to this file instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Run everything on the calling thread.
    #[arg(long)]
    pub sequential: bool,
}

impl CommonArgs {
    fn strategy(&self) -> Strategy {
        if self.sequential {
            Strategy::Sequential
        } else {
            Strategy::Parallel
        }
    }
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long, default_value_t = 15)]
    pub max_order: usize,
    /// Directory of permutation-generator files added to the catalog.
    #[arg(long)]
    pub extra_groups: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Lattice and isolation report for one group.
    Analyze {
        spec: String,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Check the k = 0, 1, 2 classification over the catalog.
    Verify {
        #[command(flatten)]
        sweep: SweepArgs,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// List isolated-simple catalog groups.
    Search {
        #[command(flatten)]
        sweep: SweepArgs,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Hasse diagram of the subgroup lattice as a Graphviz digraph.
    ExportDot {
        spec: String,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Catalog listing: order, class id, label, coverage.
    Catalog {
        #[command(flatten)]
        sweep: SweepArgs,
        #[command(flatten)]
        common: CommonArgs,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubgroupRecord {
    pub index: usize,
    pub order: usize,
    pub members: Vec<usize>,
    pub generators: Vec<usize>,
    pub isolated: bool,
    /// Element outside the subgroup whose cyclic subgroup meets it
    /// nontrivially; present exactly when `isolated` is false.
    pub witness: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalyzeOutput {
    pub format_version: u32,
    pub spec: String,
    pub label: String,
    pub order: usize,
    pub lattice_size: usize,
    pub isolated_count: usize,
    pub deficiency_k: usize,
    pub is_cp1: bool,
    pub is_isolated_simple: bool,
    pub structure_tag: String,
    pub tag: StructureTag,
    pub subgroups: Vec<SubgroupRecord>,
}

impl AnalyzeOutput {
    pub fn build(spec: &str, g: &GroupTable, lattice: &Lattice<'_>, analysis: &GroupAnalysis) -> Self {
        let mut witness = vec![None; lattice.len()];
        for n in &analysis.report.non_isolated {
            witness[n.subgroup] = Some(n.witness);
        }
        let subgroups = lattice
            .subgroups()
            .iter()
            .enumerate()
            .map(|(index, h)| SubgroupRecord {
                index,
                order: h.order(),
                members: h.elements(),
                generators: h.generators().to_vec(),
                isolated: analysis.report.isolated[index],
                witness: witness[index],
            })
            .collect();
        AnalyzeOutput {
            format_version: FORMAT_VERSION,
            spec: spec.to_string(),
            label: g.label().to_string(),
            order: g.order(),
            lattice_size: analysis.report.lattice_size,
            isolated_count: analysis.report.isolated_count,
            deficiency_k: analysis.report.deficiency_k,
            is_cp1: analysis.report.is_cp1,
            is_isolated_simple: analysis.report.is_isolated_simple,
            structure_tag: analysis.tag.to_string(),
            tag: analysis.tag,
            subgroups,
        }
    }

    pub fn to_human(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "group            {} (order {})", self.label, self.order);
        let _ = writeln!(s, "subgroups        {}", self.lattice_size);
        let _ = writeln!(s, "isolated         {}", self.isolated_count);
        let _ = writeln!(s, "k                {}", self.deficiency_k);
        let _ = writeln!(s, "CP1              {}", self.is_cp1);
        let _ = writeln!(s, "isolated-simple  {}", self.is_isolated_simple);
        let _ = writeln!(s, "structure        {}", self.structure_tag);
        let non_isolated: Vec<&SubgroupRecord> = self.subgroups.iter().filter(|r| !r.isolated).collect();
        if !non_isolated.is_empty() {
            let _ = writeln!(s, "non-isolated subgroups:");
            for r in non_isolated {
                let _ = writeln!(
                    s,
                    "  #{:<4} order {:<4} gens {:?}  witness {}",
                    r.index,
                    r.order,
                    r.generators,
                    r.witness.map_or("-".to_string(), |w| w.to_string())
                );
            }
        }
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyOutput {
    pub format_version: u32,
    pub passed: bool,
    pub summary: VerifySummary,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchOutput {
    pub format_version: u32,
    pub max_order: usize,
    pub hits: Vec<SearchHit>,
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

/// Parses `args` (including the program name) and runs the command, writing
/// results to `out` and diagnostics to `err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(rendered.as_bytes())
            } else {
                out.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    let (common, result) = match &cli.command {
        Command::Analyze { spec, common } => (common, cmd_analyze(spec, common)),
        Command::Verify { sweep, common } => (common, cmd_verify(sweep, common)),
        Command::Search { sweep, common } => (common, cmd_search(sweep, common)),
        Command::ExportDot { spec, common } => (common, cmd_export_dot(spec, common)),
        Command::Catalog { sweep, common } => (common, cmd_catalog(sweep, common)),
    };
    let (code, text) = match result {
        Ok(pair) => pair,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            return f.code;
        }
    };
    match &common.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, text) {
                let _ = writeln!(err, "error: cannot write {}: {e}", path.display());
                return EXIT_USAGE;
            }
        }
        None => {
            if let Err(e) = out.write_all(text.as_bytes()) {
                let _ = writeln!(err, "error: cannot write output: {e}");
                return EXIT_USAGE;
            }
        }
    }
    code
}

type CmdResult = Result<(i32, String), Failure>;

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("output types serialize");
    s.push('\n');
    s
}

fn load(spec: &str, common: &CommonArgs) -> Result<GroupTable, Failure> {
    build_group(spec, common.cap).map_err(|e| Failure::usage(format!("{spec}: {e}")))
}

fn catalog_options(sweep: &SweepArgs, common: &CommonArgs) -> Result<CatalogOptions, Failure> {
    if sweep.max_order == 0 {
        return Err(Failure::usage("--max-order must be at least 1"));
    }
    if sweep.max_order > common.cap {
        return Err(Failure::usage(format!(
            "--max-order {} exceeds the order cap {}",
            sweep.max_order, common.cap
        )));
    }
    if let Some(dir) = &sweep.extra_groups {
        if !dir.is_dir() {
            return Err(Failure::usage(format!("{} is not a directory", dir.display())));
        }
    }
    Ok(CatalogOptions {
        max_order: sweep.max_order,
        cap: common.cap,
        extra_groups: sweep.extra_groups.clone(),
        strategy: common.strategy(),
    })
}

fn cmd_analyze(spec: &str, common: &CommonArgs) -> CmdResult {
    let g = load(spec, common)?;
    let lattice = all_subgroups(&g);
    let analysis = analyze_group(&g, common.strategy());
    let doc = AnalyzeOutput::build(spec, &g, &lattice, &analysis);
    let text = match common.format {
        Format::Json => to_json(&doc),
        Format::Human => doc.to_human(),
    };
    Ok((EXIT_OK, text))
}

fn verify_human(summary: &VerifySummary) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "groups checked   {} (orders 1..{})", summary.groups, summary.max_order);
    let _ = writeln!(s, "order  classes  coverage    a(pass/fail)  b(pass/fail)  c(pass/fail)");
    for o in &summary.orders {
        let _ = writeln!(
            s,
            "{:>5}  {:>7}  {:<10}  {:>5}/{:<6}  {:>5}/{:<6}  {:>5}/{:<6}",
            o.order,
            o.classes,
            o.coverage.to_string(),
            o.passed[0],
            o.failed[0],
            o.passed[1],
            o.failed[1],
            o.passed[2],
            o.failed[2]
        );
    }
    let (pass, fail) = summary.part_totals();
    for (i, part) in ["a", "b", "c"].iter().enumerate() {
        let _ = writeln!(s, "part {part}: {} passed, {} failed", pass[i], fail[i]);
    }
    for c in &summary.failures {
        let a = &c.analysis;
        let _ = writeln!(
            s,
            "COUNTEREXAMPLE class {} {} (order {}): k = {}, CP1 = {}, structure {}",
            c.iso_class_id, a.label, a.order, a.report.deficiency_k, a.report.is_cp1, a.tag
        );
        for (part, verdict) in a.verdict.parts() {
            if let isolatta_core::classifier::PartVerdict::Fails { direction, .. } = verdict {
                let _ = writeln!(s, "  part {part}: {direction}");
            }
        }
    }
    if !summary.classical_fact_violations.is_empty() {
        let _ = writeln!(s, "note: classical lattice facts violated (informational):");
        for c in &summary.classical_fact_violations {
            let f = &c.analysis.facts;
            let _ = writeln!(
                s,
                "  class {} {}: {} minimal, {} maximal subgroups, structure {}",
                c.iso_class_id, c.analysis.label, f.minimal_count, f.maximal_count, c.analysis.tag
            );
        }
    }
    let _ = writeln!(
        s,
        "{}",
        if summary.failures.is_empty() { "PASS" } else { "FAIL" }
    );
    s
}

fn cmd_verify(sweep: &SweepArgs, common: &CommonArgs) -> CmdResult {
    let opts = catalog_options(sweep, common)?;
    let catalog = build_catalog_with(&opts);
    let summary = verify_catalog(&catalog, sweep.max_order, opts.strategy);
    let passed = summary.failures.is_empty();
    let text = match common.format {
        Format::Json => to_json(&VerifyOutput {
            format_version: FORMAT_VERSION,
            passed,
            summary,
        }),
        Format::Human => verify_human(&summary),
    };
    Ok((if passed { EXIT_OK } else { EXIT_FAILURE }, text))
}

fn cmd_search(sweep: &SweepArgs, common: &CommonArgs) -> CmdResult {
    let opts = catalog_options(sweep, common)?;
    let catalog = build_catalog_with(&opts);
    let hits = search_isolated_simple(&catalog, opts.strategy, |e| {
        analyze_group(&e.group, Strategy::Sequential)
    });
    let text = match common.format {
        Format::Json => to_json(&SearchOutput {
            format_version: FORMAT_VERSION,
            max_order: sweep.max_order,
            hits,
        }),
        Format::Human => {
            let mut s = String::new();
            let _ = writeln!(s, "order\tclass\tlabel\tstructure\tfamily");
            for h in &hits {
                let family = match h.family {
                    Some(f) => serde_json::to_value(f)
                        .ok()
                        .and_then(|v| v.as_str().map(str::to_string))
                        .unwrap_or_default(),
                    None => "NOVEL-CANDIDATE".to_string(),
                };
                let mark = if h.novel_candidate { "!! " } else { "" };
                let _ = writeln!(s, "{mark}{}\t{}\t{}\t{}\t{}", h.order, h.iso_class_id, h.label, h.tag, family);
            }
            let novel = hits.iter().filter(|h| h.novel_candidate).count();
            let _ = writeln!(s, "{} isolated-simple classes, {novel} novel candidates", hits.len());
            s
        }
    };
    Ok((EXIT_OK, text))
}

/// Graphviz rendering of the Hasse diagram, edges pointing upward from each
/// subgroup to the subgroups covering it.
pub fn lattice_dot(g: &GroupTable, lattice: &Lattice<'_>, isolated: &[bool]) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "digraph lattice {{");
    let _ = writeln!(s, "  label=\"{}\";", g.label().replace('"', "\\\""));
    let _ = writeln!(s, "  rankdir=BT;");
    let _ = writeln!(s, "  node [shape=box, style=filled];");
    for (i, h) in lattice.subgroups().iter().enumerate() {
        let style = if isolated[i] {
            "fillcolor=white"
        } else {
            "fillcolor=salmon, class=nonisolated"
        };
        let _ = writeln!(s, "  n{i} [label=\"{}:{i}\", {style}];", h.order());
    }
    for (lo, hi) in lattice.covers() {
        let _ = writeln!(s, "  n{lo} -> n{hi};");
    }
    let _ = writeln!(s, "}}");
    s
}

fn cmd_export_dot(spec: &str, common: &CommonArgs) -> CmdResult {
    let g = load(spec, common)?;
    let lattice = all_subgroups(&g);
    let report = isolation_report_with(&g, &lattice, common.strategy());
    Ok((EXIT_OK, lattice_dot(&g, &lattice, &report.isolated)))
}

fn cmd_catalog(sweep: &SweepArgs, common: &CommonArgs) -> CmdResult {
    let opts = catalog_options(sweep, common)?;
    let catalog = build_catalog_with(&opts);
    let text = match common.format {
        Format::Human => catalog.listing(),
        Format::Json => {
            #[derive(Serialize)]
            struct Row<'a> {
                order: usize,
                iso_class_id: usize,
                label: &'a str,
                coverage: isolatta_core::catalog::Coverage,
            }
            let rows: Vec<Row<'_>> = catalog
                .entries
                .iter()
                .map(|e| Row {
                    order: e.group.order(),
                    iso_class_id: e.iso_class_id,
                    label: &e.canonical_label,
                    coverage: e.coverage,
                })
                .collect();
            to_json(&serde_json::json!({
                "format_version": FORMAT_VERSION,
                "entries": rows,
                "warnings": catalog.warnings,
            }))
        }
    };
    Ok((EXIT_OK, text))
}
