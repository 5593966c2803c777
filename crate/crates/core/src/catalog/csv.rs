//! Cayley tables as text: one row per line, entries separated by commas or
//! whitespace. Entries are 0-based element ids. Blank lines and lines
//! starting with `#` are skipped.

use std::path::Path;

use super::{CatalogError, Limits, NamedGroup};
use crate::group::validate_group_with_cap;

/// Parse table text; errors carry 1-based row and column.
pub fn parse_cayley_csv(text: &str, limits: &Limits) -> Result<NamedGroup, CatalogError> {
    let mut rows = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let row_no = rows.len() + 1;
        let row = line
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .enumerate()
            .map(|(col, tok)| {
                tok.parse::<usize>().map_err(|_| CatalogError::CsvParse {
                    row: row_no,
                    col: col + 1,
                    message: format!("'{tok}' is not a non-negative integer"),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(row);
        if rows.len() > limits.max_order {
            return Err(CatalogError::TooLarge {
                order: rows.len(),
                cap: limits.max_order,
            });
        }
    }
    let n = rows.len();
    if let Some(i) = rows.iter().position(|r| r.len() != n) {
        return Err(CatalogError::CsvParse {
            row: i + 1,
            col: rows[i].len().min(n) + 1,
            message: format!("row has {} entries, expected {n}", rows[i].len()),
        });
    }
    let group = validate_group_with_cap(&rows, limits.max_order)?;
    let names = (0..group.order()).map(|i| i.to_string()).collect();
    Ok(NamedGroup::new("cayley".into(), group, names))
}

/// Read and validate a Cayley table file.
pub fn from_cayley_csv(path: &Path, limits: &Limits) -> Result<NamedGroup, CatalogError> {
    let text = std::fs::read_to_string(path).map_err(|e| CatalogError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    Ok(parse_cayley_csv(&text, limits)?.renamed(format!("cayley:{}", path.display())))
}
