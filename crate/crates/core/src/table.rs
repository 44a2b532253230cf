//! Grid rendering: TSV in the classic table layout, and JSON.
//!
//! TSV rows run from the highest `n` down to the lowest, one row label first,
//! then one cell per `m`; the `n/m` header row comes last. Cells outside a
//! family's region render empty. This layout is stable and byte-reproducible.

use std::ops::RangeInclusive;

use crate::coeff::Coeff;
use crate::dp::Grid;

/// Which cells a family considers part of its table (others render blank).
pub enum Mask {
    /// Every cell in range.
    All,
    /// Blank where `m < p*n` (families that never touch `x = p*y`).
    RightOfLine { p: i64 },
    /// Blank where `n > p*m + h + p` (families bounded by `y = p*x + h`
    /// plus their `p` imposed zero diagonals).
    BelowLine { p: i64, h: i64 },
    /// Blank where `m + n < 0` (the leftward wedge extension).
    Wedge,
    /// Blank where the stored value is zero.
    NonzeroOnly,
}

impl Mask {
    fn visible<T: Coeff>(&self, m: i64, n: i64, value: Option<&T>) -> bool {
        let in_region = match self {
            Mask::All => true,
            Mask::RightOfLine { p } => m >= p * n,
            Mask::BelowLine { p, h } => n <= p * m + h + p,
            Mask::Wedge => m + n >= 0,
            Mask::NonzeroOnly => value.is_some_and(|v| !v.is_zero()),
        };
        in_region && value.is_some()
    }
}

/// Render the given ranges as TSV; rows descend in `n`, header last.
pub fn to_tsv<T: Coeff>(
    grid: &Grid<T>,
    m_range: RangeInclusive<i64>,
    n_range: RangeInclusive<i64>,
    mask: &Mask,
) -> String {
    let mut out = String::new();
    for n in n_range.rev() {
        out.push_str(&n.to_string());
        for m in m_range.clone() {
            out.push('\t');
            let value = grid.try_value(m, n);
            if mask.visible(m, n, value) {
                out.push_str(&format!("{}", value.unwrap()));
            }
        }
        out.push('\n');
    }
    out.push_str("n/m");
    for m in m_range {
        out.push_str(&format!("\t{m}"));
    }
    out.push('\n');
    out
}

/// Render the visible cells as a JSON list of `{m, n, value}` objects with
/// exact value strings, in the same traversal order as the TSV.
pub fn to_json<T: Coeff>(
    grid: &Grid<T>,
    m_range: RangeInclusive<i64>,
    n_range: RangeInclusive<i64>,
    mask: &Mask,
) -> String {
    let mut cells = Vec::new();
    for n in n_range.clone().rev() {
        for m in m_range.clone() {
            let value = grid.try_value(m, n);
            if mask.visible(m, n, value) {
                cells.push(serde_json::json!({
                    "m": m,
                    "n": n,
                    "value": format!("{}", value.unwrap()),
                }));
            }
        }
    }
    serde_json::Value::from(cells).to_string()
}
