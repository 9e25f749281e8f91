//! Text formats for Cayley tables and permutation generators.
//!
//! Cayley table: a line holding `n`, then `n` rows of `n` whitespace-separated
//! indices. Permutation generators: a line holding the degree `d`, then one
//! generator per line as `d` images. Anything after the data other than
//! blank lines is rejected.

use std::path::Path;

use super::{GroupTable, PermutationGeneratorSet};
use crate::error::GroupError;

fn parse_err(line: usize, message: impl Into<String>) -> GroupError {
    GroupError::Parse {
        line,
        message: message.into(),
    }
}

fn numbers(line_no: usize, line: &str) -> Result<Vec<usize>, GroupError> {
    line.split_whitespace()
        .map(|tok| {
            tok.parse::<usize>()
                .map_err(|_| parse_err(line_no, format!("`{tok}` is not a non-negative integer")))
        })
        .collect()
}

fn header(lines: &mut std::iter::Enumerate<std::str::Lines<'_>>, what: &str) -> Result<usize, GroupError> {
    let (i, line) = lines.next().ok_or_else(|| parse_err(1, format!("missing {what}")))?;
    match numbers(i + 1, line)?.as_slice() {
        [v] if *v > 0 => Ok(*v),
        _ => Err(parse_err(i + 1, format!("expected a single positive {what}"))),
    }
}

fn reject_trailing(lines: std::iter::Enumerate<std::str::Lines<'_>>) -> Result<(), GroupError> {
    for (i, line) in lines {
        if !line.trim().is_empty() {
            return Err(parse_err(i + 1, "trailing data after the table"));
        }
    }
    Ok(())
}

pub fn parse_cayley(text: &str) -> Result<GroupTable, GroupError> {
    let mut lines = text.lines().enumerate();
    let n = header(&mut lines, "order")?;
    let mut rows = Vec::with_capacity(n);
    for r in 0..n {
        let (i, line) = lines
            .next()
            .ok_or_else(|| parse_err(r + 2, format!("expected {n} rows, found {r}")))?;
        let row = numbers(i + 1, line)?;
        if row.len() != n {
            return Err(parse_err(i + 1, format!("expected {n} entries, found {}", row.len())));
        }
        rows.push(row);
    }
    reject_trailing(lines)?;
    GroupTable::from_cayley(&rows)
}

pub fn parse_perm_generators(text: &str) -> Result<PermutationGeneratorSet, GroupError> {
    let mut lines = text.lines().enumerate();
    let d = header(&mut lines, "degree")?;
    let mut gens = Vec::new();
    let mut blank_seen = None;
    for (i, line) in lines {
        if line.trim().is_empty() {
            blank_seen.get_or_insert(i);
            continue;
        }
        if blank_seen.is_some() {
            return Err(parse_err(i + 1, "trailing data after a blank line"));
        }
        let g = numbers(i + 1, line)?;
        if g.len() != d {
            return Err(parse_err(i + 1, format!("expected {d} images, found {}", g.len())));
        }
        gens.push(g);
    }
    PermutationGeneratorSet::new(d, gens)
}

pub fn write_cayley(g: &GroupTable) -> String {
    let mut out = format!("{}\n", g.order());
    for a in 0..g.order() {
        let row: Vec<String> = g.row(a).iter().map(|v| v.to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

pub fn write_perm_generators(set: &PermutationGeneratorSet) -> String {
    let mut out = format!("{}\n", set.degree());
    for g in set.generators() {
        let row: Vec<String> = g.iter().map(|v| v.to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

fn read(path: &Path) -> Result<String, GroupError> {
    std::fs::read_to_string(path).map_err(|e| GroupError::Io(format!("{}: {e}", path.display())))
}

pub fn load_cayley(path: &Path) -> Result<GroupTable, GroupError> {
    let stem = path.file_stem().map(|s| s.to_string_lossy().into_owned());
    let g = parse_cayley(&read(path)?)?;
    Ok(match stem {
        Some(s) => g.with_label(s),
        None => g,
    })
}

pub fn load_perm_group(path: &Path, cap: usize) -> Result<GroupTable, GroupError> {
    let set = parse_perm_generators(&read(path)?)?;
    let g = GroupTable::from_perm_generators(&set, cap)?;
    Ok(match path.file_stem() {
        Some(s) => g.with_label(s.to_string_lossy()),
        None => g,
    })
}
