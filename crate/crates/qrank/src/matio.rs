//! Matrix input format: a single line `p,m;row1;row2;...` with entries
//! given as element indices in the canonical field enumeration, e.g.
//! `2,1;0 1;0 0`. The `--matrix` argument may also name a file holding
//! such a line.

use qrank_core::gfq::{FieldCtx, MatGF};
use std::fs;
use std::path::Path;

pub fn parse_matrix_spec(spec: &str) -> Result<(FieldCtx, MatGF), String> {
    let mut parts = spec.trim().split(';');
    let header = parts.next().ok_or("empty matrix spec")?;
    let (p_str, m_str) = header
        .split_once(',')
        .ok_or_else(|| format!("bad field header {header:?}: expected p,m"))?;
    let p: u64 = p_str
        .trim()
        .parse()
        .map_err(|_| format!("bad prime {p_str:?}"))?;
    let m: u32 = m_str
        .trim()
        .parse()
        .map_err(|_| format!("bad degree {m_str:?}"))?;
    let ctx = FieldCtx::new(p, m).map_err(|e| e.to_string())?;

    let mut entries = Vec::new();
    let mut n_cols = None;
    let mut n_rows = 0usize;
    for row in parts {
        let row_entries: Vec<u64> = row
            .split_whitespace()
            .map(|tok| {
                tok.parse::<u64>()
                    .map_err(|_| format!("bad element index {tok:?}"))
            })
            .collect::<Result<_, _>>()?;
        if row_entries.is_empty() {
            return Err("empty matrix row".into());
        }
        match n_cols {
            None => n_cols = Some(row_entries.len()),
            Some(c) if c != row_entries.len() => {
                return Err("rows have unequal lengths".into());
            }
            _ => {}
        }
        for idx in row_entries {
            entries.push(ctx.elem(idx).map_err(|_| {
                format!("element index {idx} out of range for GF({})", ctx.order())
            })?);
        }
        n_rows += 1;
    }
    let n_cols = n_cols.ok_or("matrix has no rows")?;
    let mat = MatGF::from_entries(n_rows, n_cols, entries).expect("entry count checked above");
    Ok((ctx, mat))
}

/// Accepts either an inline spec or a path to a file containing one.
pub fn load_matrix(arg: &str) -> Result<(FieldCtx, MatGF), String> {
    if Path::new(arg).is_file() {
        let contents =
            fs::read_to_string(arg).map_err(|e| format!("cannot read {arg}: {e}"))?;
        parse_matrix_spec(&contents)
    } else {
        parse_matrix_spec(arg)
    }
}

/// Low-to-high coefficient vector rendered as a polynomial in t.
pub fn poly_string(coeffs: &[u64]) -> String {
    let mut terms = Vec::new();
    for (i, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let term = match (i, c) {
            (0, c) => format!("{c}"),
            (1, 1) => "t".to_string(),
            (1, c) => format!("{c}t"),
            (i, 1) => format!("t^{i}"),
            (i, c) => format!("{c}t^{i}"),
        };
        terms.push(term);
    }
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ")
    }
}
