//! Socle tables: fixed rows for chosen exponents, and a pattern table that
//! aggregates a whole exponent range by its repeating row shape.

use crate::semigroup::NumericalSemigroup;
use crate::socle::{analyze, max_ideal_power};
use crate::Result;
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::Arc;

/// Reference rendering of the first showcase table.
pub const GOLDEN_TABLE1: &str = include_str!("golden/table1.md");
/// Reference rendering of the second showcase table.
pub const GOLDEN_TABLE2: &str = include_str!("golden/table2.md");
/// Reference rendering of the showcase pattern table.
pub const GOLDEN_TABLE3: &str = include_str!("golden/table3.md");

/// One table line: the socle ideal of `(t^s)` at a fixed degree, with its
/// verdicts.
#[derive(Debug, Clone, Serialize)]
pub struct TableRow {
    pub s: u64,
    pub generators: Vec<u64>,
    /// Whether the socle ideal is the maximal ideal itself.
    pub is_max_ideal: bool,
    pub cm: Option<bool>,
    pub reduction_number: Option<u64>,
    pub mq_stable: bool,
}

/// Computes the rows for the given exponents at degree `q`.
pub fn table_rows(
    h: &Arc<NumericalSemigroup>,
    q: u64,
    exponents: &[u64],
) -> Result<Vec<TableRow>> {
    let m = max_ideal_power(h, 1);
    exponents
        .iter()
        .map(|&s| {
            let report = analyze(h, s, q)?;
            Ok(TableRow {
                s,
                generators: report.socle_ideal.generators().to_vec(),
                is_max_ideal: report.socle_ideal.equals(&m)?,
                cm: report.cm,
                reduction_number: report.reduction_number,
                mq_stable: report.mq_stable,
            })
        })
        .collect()
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "Yes"
    } else {
        "No"
    }
}

fn cm_cell(cm: Option<bool>) -> String {
    cm.map(yes_no).unwrap_or("n/a").to_string()
}

fn reduction_cell(r: Option<u64>) -> String {
    r.map(|n| n.to_string()).unwrap_or_else(|| "∞".to_string())
}

fn header(q: u64) -> String {
    format!("| s | I | G(I) is CM | r_Q(I) | m^{q} I = m^{q} Q |\n|---|---|---|---|---|\n")
}

fn ideal_cell(generators: &[u64], is_max_ideal: bool) -> String {
    let list = generators
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(",");
    if is_max_ideal {
        format!("({list}) = m")
    } else {
        format!("({list})")
    }
}

fn push_row(out: &mut String, label: &str, ideal: &str, row: &TableRow) {
    let _ = writeln!(
        out,
        "| {label} | {ideal} | {} | {} | {} |",
        cm_cell(row.cm),
        reduction_cell(row.reduction_number),
        yes_no(row.mq_stable)
    );
}

/// Renders rows as a markdown table with a degree-`q` header.
pub fn render_markdown(q: u64, rows: &[TableRow]) -> String {
    let mut out = header(q);
    for row in rows {
        push_row(
            &mut out,
            &row.s.to_string(),
            &ideal_cell(&row.generators, row.is_max_ideal),
            row,
        );
    }
    out
}

/// Renders the rows for every exponent of `m^q` up to `s_max`, collapsing
/// the most common row shape (generator offsets from `s` plus the three
/// verdicts) into a final symbolic `otherwise` line. Exponents that deviate
/// from that shape keep explicit lines, in increasing order.
pub fn pattern_table(h: &Arc<NumericalSemigroup>, q: u64, s_max: u64) -> Result<String> {
    let mq = max_ideal_power(h, q);
    let exponents: Vec<u64> = (1..=s_max).filter(|&s| mq.contains(s)).collect();
    pattern_markdown(h, q, &exponents)
}

/// The aggregation behind [`pattern_table`], over any explicit exponent
/// list.
pub fn pattern_markdown(h: &Arc<NumericalSemigroup>, q: u64, exponents: &[u64]) -> Result<String> {
    let rows = table_rows(h, q, exponents)?;

    type Shape = (Vec<i64>, Option<bool>, Option<u64>, bool);
    let mut groups: BTreeMap<Shape, Vec<TableRow>> = BTreeMap::new();
    for row in rows {
        let offsets = row
            .generators
            .iter()
            .map(|&g| g as i64 - row.s as i64)
            .collect();
        let shape = (offsets, row.cm, row.reduction_number, row.mq_stable);
        groups.entry(shape).or_default().push(row);
    }

    let mut out = header(q);
    let generic = groups
        .iter()
        .max_by_key(|(_, rows)| rows.len())
        .map(|(shape, _)| shape.clone());
    let mut explicit: Vec<&TableRow> = groups
        .iter()
        .filter(|(shape, _)| Some(*shape) != generic.as_ref())
        .flat_map(|(_, rows)| rows)
        .collect();
    explicit.sort_by_key(|row| row.s);
    for row in explicit {
        push_row(
            &mut out,
            &row.s.to_string(),
            &ideal_cell(&row.generators, row.is_max_ideal),
            row,
        );
    }
    if let Some(shape) = generic {
        let symbolic = shape
            .0
            .iter()
            .map(|&o| if o == 0 { "s".to_string() } else { format!("s{o:+}") })
            .collect::<Vec<_>>()
            .join(",");
        let stand_in = groups[&shape].first().expect("non-empty group");
        push_row(&mut out, "otherwise", &format!("({symbolic})"), stand_in);
    }
    Ok(out)
}

/// The three showcase tables, rendered.
#[derive(Debug, Clone, Serialize)]
pub struct TableSet {
    pub table1: String,
    pub table2: String,
    pub table3: String,
}

/// Recomputes the showcase tables from scratch.
pub fn reproduce_tables() -> Result<TableSet> {
    let h1 = Arc::new(NumericalSemigroup::new(&[10, 13, 16, 17, 19])?);
    let h2 = Arc::new(NumericalSemigroup::new(&[7, 10, 18, 22])?);
    Ok(TableSet {
        table1: render_markdown(3, &table_rows(&h1, 3, &[10, 13, 16, 17, 19])?),
        table2: render_markdown(3, &table_rows(&h2, 3, &[7, 10, 14, 17, 18, 20, 22, 25, 29])?),
        table3: pattern_table(&h2, 3, 102)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn showcase_tables_match_reference() {
        let tables = reproduce_tables().unwrap();
        assert_eq!(tables.table1, GOLDEN_TABLE1);
        assert_eq!(tables.table2, GOLDEN_TABLE2);
        assert_eq!(tables.table3, GOLDEN_TABLE3);
    }

    #[test]
    fn row_fields() {
        let h = Arc::new(NumericalSemigroup::new(&[10, 13, 16, 17, 19]).unwrap());
        let rows = table_rows(&h, 3, &[10, 16]).unwrap();
        assert!(rows[0].is_max_ideal);
        assert_eq!(rows[0].cm, Some(true));
        assert_eq!(rows[0].reduction_number, Some(3));
        assert!(rows[0].mq_stable);
        assert!(!rows[1].is_max_ideal);
        assert_eq!(rows[1].generators, vec![16, 19, 23, 30, 34, 37]);
        assert_eq!(rows[1].cm, Some(false));
        assert_eq!(rows[1].reduction_number, Some(5));
    }

    #[test]
    fn non_integral_rendering() {
        let h = Arc::new(NumericalSemigroup::new(&[5, 6]).unwrap());
        let rows = table_rows(&h, 5, &[10]).unwrap();
        assert_eq!(rows[0].cm, None);
        assert_eq!(rows[0].reduction_number, None);
        let text = render_markdown(5, &rows);
        assert!(text.contains("| n/a | ∞ | No |"));
        assert!(text.contains("m^5 I = m^5 Q"));
    }

    #[test]
    fn pattern_table_collapses_every_exponent() {
        let h = Arc::new(NumericalSemigroup::new(&[7, 10, 18, 22]).unwrap());
        let text = pattern_table(&h, 3, 102).unwrap();
        // one special line, one generic line, nothing else
        assert_eq!(text.lines().count(), 4);
        assert!(text.ends_with("| otherwise | (s,s+4,s+8,s+13,s+16,s+19) | No | 2 | No |\n"));
    }

    #[test]
    fn row_serialization() {
        let h = Arc::new(NumericalSemigroup::new(&[7, 10, 18, 22]).unwrap());
        let rows = table_rows(&h, 3, &[7]).unwrap();
        let json = serde_json::to_string(&rows[0]).unwrap();
        assert!(json.contains(r#""s":7"#));
        assert!(json.contains(r#""generators":[7,18,20,22]"#));
        assert!(json.contains(r#""cm":true"#));
    }
}
