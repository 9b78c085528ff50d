//! Cayley table file ingestion.
//!
//! Format: line 1 holds the order `n`; the next `n` lines hold `n`
//! whitespace-separated 1-based element indices, with row `i`, column `j`
//! giving the product `i * j`. The identity is auto-detected and the table
//! is rejected unless it is a valid group.

use super::{FiniteGroup, GroupError};

pub fn group_from_cayley_text(text: &str) -> Result<FiniteGroup, GroupError> {
    let bad = |msg: String| GroupError::BadCayley(msg);
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let n: usize = lines
        .next()
        .ok_or_else(|| bad("empty file".into()))?
        .trim()
        .parse()
        .map_err(|_| bad("first line must be the order".into()))?;
    if n == 0 {
        return Err(bad("order must be positive".into()));
    }
    let mut table = Vec::with_capacity(n * n);
    for i in 0..n {
        let line = lines
            .next()
            .ok_or_else(|| bad(format!("missing row {} of {n}", i + 1)))?;
        let row: Vec<usize> = line
            .split_whitespace()
            .map(|t| t.parse::<usize>())
            .collect::<Result<_, _>>()
            .map_err(|_| bad(format!("row {} contains a non-integer", i + 1)))?;
        if row.len() != n {
            return Err(bad(format!(
                "row {} has {} entries, expected {n}",
                i + 1,
                row.len()
            )));
        }
        for v in &row {
            if *v == 0 || *v > n {
                return Err(bad(format!(
                    "row {} has out-of-range entry {v} (indices are 1-based)",
                    i + 1
                )));
            }
        }
        table.extend(row.into_iter().map(|v| (v - 1) as u32));
    }
    if lines.next().is_some() {
        return Err(bad("trailing content after the table".into()));
    }
    FiniteGroup::from_table(n, table)
}

/// Serializes a group in the ingestion format (1-based indices).
pub fn group_to_cayley_text(g: &FiniteGroup) -> String {
    let n = g.order();
    let mut out = format!("{n}\n");
    for i in 0..n {
        let row: Vec<String> = (0..n).map(|j| (g.mul(i, j) + 1).to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}
