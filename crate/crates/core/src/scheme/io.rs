//! Scheme file format: line 1 holds `size d`, then `size` lines of color
//! matrix rows as integers. Round-trips bit-exactly.

use super::{AssociationScheme, SchemeError};

pub fn scheme_to_text(s: &AssociationScheme) -> String {
    let mut out = format!("{} {}\n", s.size(), s.d());
    for x in 0..s.size() {
        let row: Vec<String> = (0..s.size()).map(|y| s.color(x, y).to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

pub fn parse_scheme_text(text: &str) -> Result<AssociationScheme, SchemeError> {
    let bad = |msg: String| SchemeError::BadFile(msg);
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines.next().ok_or_else(|| bad("empty file".into()))?;
    let mut it = header.split_whitespace();
    let size: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| bad("header must be `size d`".into()))?;
    let d: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| bad("header must be `size d`".into()))?;
    if it.next().is_some() {
        return Err(bad("header must be `size d`".into()));
    }
    let mut color = Vec::with_capacity(size * size);
    for i in 0..size {
        let line = lines
            .next()
            .ok_or_else(|| bad(format!("missing row {} of {size}", i + 1)))?;
        let row: Vec<u32> = line
            .split_whitespace()
            .map(|t| t.parse::<u32>())
            .collect::<Result<_, _>>()
            .map_err(|_| bad(format!("row {} contains a non-integer", i + 1)))?;
        if row.len() != size {
            return Err(bad(format!("row {} has {} entries", i + 1, row.len())));
        }
        color.extend(row);
    }
    if lines.next().is_some() {
        return Err(bad("trailing content after the color matrix".into()));
    }
    AssociationScheme::from_color_table(size, d, color)
}
