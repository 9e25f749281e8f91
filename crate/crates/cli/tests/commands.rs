use isolatta::{run, AnalyzeOutput, VerifyOutput, EXIT_FAILURE, EXIT_OK, EXIT_USAGE};
use isolatta_core::spec::build_group;
use isolatta_core::DEFAULT_ORDER_CAP;

fn cli(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut full = vec!["isolatta"];
    full.extend_from_slice(args);
    let code = run(full, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn analyze_json(spec: &str) -> AnalyzeOutput {
    let (code, out, err) = cli(&["analyze", spec, "--format", "json"]);
    assert_eq!(code, EXIT_OK, "{err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn analyze_examples() {
    let c4 = analyze_json("C4");
    assert_eq!(c4.deficiency_k, 1);
    assert_eq!(c4.structure_tag, "CyclicPSquared(p=2)");
    assert_eq!(c4.format_version, 1);

    let q8 = analyze_json("Q8");
    assert_eq!(q8.deficiency_k, 4);
    assert!(q8.is_isolated_simple);

    let d8 = analyze_json("D8");
    assert_eq!(d8.deficiency_k, 3);
    let orders: Vec<usize> = d8.subgroups.iter().filter(|s| !s.isolated).map(|s| s.order).collect();
    assert_eq!(orders, vec![2, 4, 4]);
}

#[test]
fn json_round_trip_and_witnesses_recheck() {
    for spec in ["C12", "D12", "C3xQ8", "S4", "Alt4", "C2xC2xC2", "C7:C3", "He3"] {
        let doc = analyze_json(spec);
        let k = doc.subgroups.iter().filter(|s| !s.isolated).count();
        assert_eq!(k, doc.deficiency_k, "{spec}");
        assert_eq!(doc.isolated_count + doc.deficiency_k, doc.lattice_size);
        assert_eq!(doc.subgroups.len(), doc.lattice_size);
        let reparsed: AnalyzeOutput = serde_json::from_str(&serde_json::to_string(&doc).unwrap()).unwrap();
        assert_eq!(reparsed, doc);

        let g = build_group(spec, DEFAULT_ORDER_CAP).unwrap();
        for s in &doc.subgroups {
            assert_eq!(s.witness.is_some(), !s.isolated);
            if let Some(x) = s.witness {
                assert!(!s.members.contains(&x));
                let mut y = x;
                let mut meets = false;
                while y != 0 {
                    meets |= s.members.contains(&y);
                    y = g.mul(y, x);
                }
                assert!(meets, "{spec}: witness {x} for {:?}", s.members);
            }
        }
    }
}

#[test]
fn subgroups_are_ordered_by_order_then_members() {
    let doc = analyze_json("S4");
    assert!(doc
        .subgroups
        .windows(2)
        .all(|w| (w[0].order, &w[0].members) < (w[1].order, &w[1].members)));
}

#[test]
fn parse_errors_exit_two_with_position() {
    let (code, out, err) = cli(&["analyze", "C7x"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(out.is_empty());
    assert!(err.contains("position 3"), "{err}");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(cli(&["frobnicate"]).0, EXIT_USAGE);
    assert_eq!(cli(&["verify", "--max-order", "500"]).0, EXIT_USAGE);
    assert_eq!(cli(&["verify", "--max-order", "20", "--cap", "10"]).0, EXIT_USAGE);
    assert_eq!(cli(&["analyze", "S6", "--cap", "100"]).0, EXIT_USAGE);
    assert_eq!(cli(&["analyze", "perm:/nonexistent/file"]).0, EXIT_USAGE);
    assert_eq!(cli(&["verify", "--extra-groups", "/nonexistent/dir"]).0, EXIT_USAGE);
    assert_eq!(cli(&["--help"]).0, EXIT_OK);
}

#[test]
fn verify_small_and_trivial() {
    let (code, out, _) = cli(&["verify", "--max-order", "15", "--format", "json"]);
    assert_eq!(code, EXIT_OK);
    let doc: VerifyOutput = serde_json::from_str(&out).unwrap();
    assert!(doc.passed);
    assert_eq!(doc.summary.groups, 28);
    assert!(doc.summary.orders.iter().all(|o| o.coverage.to_string() == "exhaustive"));

    let (code, out, _) = cli(&["verify", "--max-order", "1", "--format", "json"]);
    assert_eq!(code, EXIT_OK);
    let doc: VerifyOutput = serde_json::from_str(&out).unwrap();
    assert_eq!(doc.summary.groups, 1);
    assert_eq!(doc.summary.part_totals(), ([1, 1, 1], [0, 0, 0]));
}

#[test]
fn verify_to_24_marks_sampled_orders() {
    let (code, out, _) = cli(&["verify", "--max-order", "24", "--format", "json"]);
    assert_eq!(code, EXIT_OK);
    let doc: VerifyOutput = serde_json::from_str(&out).unwrap();
    let sampled: Vec<usize> = doc
        .summary
        .orders
        .iter()
        .filter(|o| o.coverage.to_string() == "sampled")
        .map(|o| o.order)
        .collect();
    assert_eq!(sampled, vec![16, 18, 20, 24]);
    assert!(doc.summary.failures.is_empty());
    assert_ne!(EXIT_FAILURE, code);
}

#[test]
fn search_examples() {
    let (code, out, _) = cli(&["search", "--max-order", "8"]);
    assert_eq!(code, EXIT_OK);
    let labels: Vec<&str> = out.lines().skip(1).filter_map(|l| l.split('\t').nth(2)).collect();
    for n in 1..=8 {
        assert!(labels.contains(&format!("C{n}").as_str()), "{out}");
    }
    assert!(labels.contains(&"Q8"));
    assert!(!labels.contains(&"D8"));

    let (_, out, _) = cli(&["search", "--max-order", "16"]);
    assert!(out.contains("\tA(4,4)\t"), "{out}");
    assert!(out.contains("\tQ16\t"), "{out}");

    let (_, out, _) = cli(&["search", "--max-order", "6"]);
    assert!(!out.contains("\tD6\t"), "{out}");
}

fn dot(spec: &str) -> String {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("lattice.dot");
    let (code, out, err) = cli(&["export-dot", spec, "--out", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK, "{err}");
    assert!(out.is_empty());
    std::fs::read_to_string(path).unwrap()
}

fn node_lines(text: &str) -> Vec<&str> {
    text.lines().filter(|l| l.trim_start().starts_with('n') && l.contains("[label=")).collect()
}

#[test]
fn dot_examples() {
    let c4 = dot("C4");
    assert!(c4.starts_with("digraph lattice {"));
    assert_eq!(node_lines(&c4).len(), 3);
    assert_eq!(c4.matches("->").count(), 2);
    assert_eq!(c4.matches("class=nonisolated").count(), 1);
    assert!(c4.contains("label=\"2:1\""));

    let c1 = dot("C1");
    assert_eq!(node_lines(&c1).len(), 1);
    assert_eq!(c1.matches("->").count(), 0);

    let q8 = dot("Q8");
    assert_eq!(node_lines(&q8).len(), 6);
    assert_eq!(q8.matches("class=nonisolated").count(), 4);
}

#[test]
fn dot_write_failure_exits_two() {
    let (code, _, err) = cli(&["export-dot", "C4", "--out", "/nonexistent/dir/x.dot"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("cannot write"));
}

#[test]
fn catalog_listing_format() {
    let (code, out, _) = cli(&["catalog", "--max-order", "8"]);
    assert_eq!(code, EXIT_OK);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 14);
    assert_eq!(lines[0], "1\t0\tC1\texhaustive");
    assert!(lines.iter().all(|l| l.split('\t').count() == 4));
}
