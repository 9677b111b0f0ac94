//! The built-in acceptance checks: frozen showcase data, full sweeps, and
//! oracle agreement, each reduced to a single pass/fail verdict.

use crate::ideal::SemigroupIdeal;
use crate::semigroup::NumericalSemigroup;
use crate::socle::{analyze, max_ideal_power, quasi_socle};
use crate::verify::oracle::random_oracle_trials;
use crate::verify::statements::{sweep, SweepBounds};
use crate::verify::tables::{reproduce_tables, GOLDEN_TABLE1, GOLDEN_TABLE2, GOLDEN_TABLE3};
use crate::verify::DEFAULT_ORACLE_SEED;
use crate::Result;
use serde::Serialize;
use std::sync::Arc;

/// Verdict of one acceptance check.
#[derive(Debug, Clone, Serialize)]
pub struct CriterionReport {
    pub index: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn verdict(bad: Vec<String>, ok: &str) -> (bool, String) {
    if bad.is_empty() {
        (true, ok.to_string())
    } else {
        (false, bad.join("; "))
    }
}

/// The first showcase: five exponents over <10,13,16,17,19> at degree 3,
/// with the full filtration at the one slow exponent and the generator
/// lists cross-checked against close variants.
fn showcase_table_one() -> Result<(bool, String)> {
    let mut bad = Vec::new();
    let tables = reproduce_tables()?;
    if tables.table1 != GOLDEN_TABLE1 {
        bad.push("table 1 rendering drifted from the reference".to_string());
    }
    let h = Arc::new(NumericalSemigroup::new(&[10, 13, 16, 17, 19])?);
    let rows = [
        (10u64, true, 3u64),
        (13, false, 3),
        (16, false, 5),
        (17, true, 2),
        (19, true, 2),
    ];
    for (s, cm, r) in rows {
        let rep = analyze(&h, s, 3)?;
        if rep.cm != Some(cm) {
            bad.push(format!("s = {s}: Cohen-Macaulay verdict {:?}, expected {cm}", rep.cm));
        }
        if rep.reduction_number != Some(r) {
            bad.push(format!(
                "s = {s}: r_Q(I) = {:?}, expected {r}",
                rep.reduction_number
            ));
        }
        if !rep.mq_stable {
            bad.push(format!("s = {s}: m^3 I != m^3 Q"));
        }
    }

    let rep = analyze(&h, 16, 3)?;
    if rep.lengths != [10, 2, 1, 1, 1] {
        bad.push(format!("s = 16: quotient lengths {:?}", rep.lengths));
    }
    if rep.vv_table != [true, true, false, false, true] {
        bad.push(format!("s = 16: filtration pattern {:?}", rep.vv_table));
    }

    // the same ideals under slightly different generator lists
    let canon16 = quasi_socle(&h, 16, 3)?;
    if !SemigroupIdeal::from_generators(&h, &[16, 19, 23, 30, 32, 34, 37])?.equals(&canon16)? {
        bad.push("s = 16: the padded generator list is a different ideal".to_string());
    }
    if SemigroupIdeal::from_generators(&h, &[17, 20, 23, 26, 29, 35, 38])?.contains(32) {
        bad.push("s = 17: dropping the generator 32 should shrink the ideal".to_string());
    }
    if h.contains_u(25) {
        bad.push("25 should be a gap of <10,13,16,17,19>".to_string());
    }
    let canon19 = quasi_socle(&h, 19, 3)?;
    if !SemigroupIdeal::from_generators(&h, &[19, 26, 32, 33, 34, 37, 40])?.equals(&canon19)? {
        bad.push("s = 19: the padded generator list is a different ideal".to_string());
    }

    // s = 13: the filtration breaks at n = 2, witnessed by t^57
    let q13 = SemigroupIdeal::principal(&h, 13)?;
    let i13 = quasi_socle(&h, 13, 3)?;
    if !(q13.intersect(&i13.power(3))?.contains(57)
        && !q13.product(&i13.power(2))?.contains(57))
    {
        bad.push("s = 13: t^57 should witness Q cap I^3 != Q I^2".to_string());
    }
    Ok(verdict(bad, "all five exponents verified, including the filtration at s = 16"))
}

/// The second showcase: nine exponents over <7,10,18,22> at degree 3, and
/// the uniform pattern across every exponent of m^3 up to 102.
fn showcase_table_two() -> Result<(bool, String)> {
    let mut bad = Vec::new();
    let tables = reproduce_tables()?;
    if tables.table2 != GOLDEN_TABLE2 {
        bad.push("table 2 rendering drifted from the reference".to_string());
    }
    if tables.table3 != GOLDEN_TABLE3 {
        bad.push("table 3 rendering drifted from the reference".to_string());
    }
    let h = Arc::new(NumericalSemigroup::new(&[7, 10, 18, 22])?);
    let m3 = max_ideal_power(&h, 3);
    let mut seen = 0;
    for s in (1..=102).filter(|&s| m3.contains(s)) {
        seen += 1;
        let rep = analyze(&h, s, 3)?;
        let offsets: Vec<u64> = rep
            .socle_ideal
            .generators()
            .iter()
            .map(|&g| g.wrapping_sub(s))
            .collect();
        if offsets != [0, 4, 8, 13, 16, 19] {
            bad.push(format!("s = {s}: generator offsets {offsets:?}"));
        }
        if rep.reduction_number != Some(2) {
            bad.push(format!("s = {s}: r_Q(I) = {:?}", rep.reduction_number));
        }
        if rep.mq_stable {
            bad.push(format!("s = {s}: m^3 I = m^3 Q unexpectedly"));
        }
        if rep.cm != Some(s == 21) {
            bad.push(format!("s = {s}: Cohen-Macaulay verdict {:?}", rep.cm));
        }
        // the seven-generator variant with the redundant s+10 collapses
        let padded = [s, s + 4, s + 8, s + 10, s + 13, s + 16, s + 19];
        if !SemigroupIdeal::from_generators(&h, &padded)?.equals(&rep.socle_ideal)? {
            bad.push(format!("s = {s}: the padded seven-generator list is a different ideal"));
        }
    }
    if seen == 0 {
        bad.push("no exponents of m^3 found below 102".to_string());
    }
    Ok(verdict(
        bad,
        &format!("all nine exponents verified; uniform pattern across {seen} exponents of m^3"),
    ))
}

/// Full sweep of the main statement over every symmetric ambient with
/// conductor at most 150 and every admissible degree.
fn main_sweep() -> Result<(bool, String)> {
    let bounds = SweepBounds {
        conductor_max: 150,
        ..Default::default()
    };
    let report = sweep("MAIN_THM", &bounds)?;
    let mut bad: Vec<String> = report
        .failures()
        .map(|o| format!("{:?}: {}", o.parameters, o.counterexample.as_deref().unwrap_or("")))
        .collect();
    if report.summary.holds == 0 {
        bad.push("no parameter point met the hypotheses".to_string());
    }
    Ok(verdict(
        bad,
        &format!(
            "{} parameter points, {} conclusions checked, none failed",
            report.summary.total, report.summary.holds
        ),
    ))
}

/// Default-bounds sweeps of every supporting statement.
fn supporting_sweeps() -> Result<(bool, String)> {
    let ids = [
        "AA1_MEMBERSHIP",
        "AA1_C1C2_IFF",
        "AA1_INTEGRAL_EQUIV",
        "AA1_COR",
        "GEN_FORMULA",
        "RED_FORMULA",
        "RED_BOUND",
        "NONCM_A",
        "NONCM_B",
        "CM_IFF",
    ];
    let bounds = SweepBounds::default();
    let mut bad = Vec::new();
    let mut checked = 0;
    for id in ids {
        let report = sweep(id, &bounds)?;
        if report.summary.fails > 0 {
            let first = report.failures().next().expect("failure recorded");
            bad.push(format!(
                "{id} fails at {:?}: {}",
                first.parameters,
                first.counterexample.as_deref().unwrap_or("")
            ));
        }
        if report.summary.holds == 0 {
            bad.push(format!("{id}: no parameter point met the hypotheses"));
        }
        checked += report.summary.holds;
    }
    Ok(verdict(
        bad,
        &format!("{} statements, {checked} conclusions checked, none failed", ids.len()),
    ))
}

/// Randomized agreement between the generator-based engine and the dense
/// bit-vector model.
fn oracle_agreement() -> Result<(bool, String)> {
    let summary = random_oracle_trials(DEFAULT_ORACLE_SEED, 500);
    let bad = if summary.disagreements == 0 {
        Vec::new()
    } else {
        summary.failures.clone()
    };
    Ok(verdict(
        bad,
        &format!("{} randomized trials, seed {}", summary.trials, summary.seed),
    ))
}

/// Closed-form conductor values.
fn conductor_formulas() -> Result<(bool, String)> {
    let mut bad = Vec::new();
    let h1 = NumericalSemigroup::new(&[10, 13, 16, 17, 19])?;
    if h1.conductor() != 42 {
        bad.push(format!("<10,13,16,17,19> has conductor {}", h1.conductor()));
    }
    let h2 = NumericalSemigroup::new(&[7, 10, 18, 22])?;
    if h2.conductor() != 34 {
        bad.push(format!("<7,10,18,22> has conductor {}", h2.conductor()));
    }
    for a in 2..=50 {
        let h = NumericalSemigroup::new(&[a, a + 1])?;
        if h.conductor() != a * (a - 1) {
            bad.push(format!("<{a},{}> has conductor {}", a + 1, h.conductor()));
        }
    }
    Ok(verdict(bad, "both showcases and all <a,a+1> up to a = 50"))
}

/// Runs acceptance check `index` (1 through 6); `None` for anything else.
pub fn run_criterion(index: u8) -> Option<CriterionReport> {
    let (name, body): (&'static str, fn() -> Result<(bool, String)>) = match index {
        1 => ("showcase table 1", showcase_table_one),
        2 => ("showcase tables 2 and 3", showcase_table_two),
        3 => ("main statement sweep", main_sweep),
        4 => ("supporting statement sweeps", supporting_sweeps),
        5 => ("dense oracle agreement", oracle_agreement),
        6 => ("conductor formulas", conductor_formulas),
        _ => return None,
    };
    let (passed, detail) = match body() {
        Ok(pair) => pair,
        Err(e) => (false, format!("error: {e}")),
    };
    Some(CriterionReport {
        index,
        name,
        passed,
        detail,
    })
}

/// Runs all six acceptance checks in order.
pub fn run_all() -> Vec<CriterionReport> {
    (1..=6).filter_map(run_criterion).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_index() {
        assert!(run_criterion(0).is_none());
        assert!(run_criterion(7).is_none());
    }

    // The six checks themselves run in the acceptance suite; here we only
    // pin the cheap ones so a unit run still exercises the plumbing.
    #[test]
    fn conductor_check_passes() {
        let report = run_criterion(6).unwrap();
        assert!(report.passed, "{}", report.detail);
        assert_eq!(report.index, 6);
    }

    #[test]
    fn table_one_check_passes() {
        let report = run_criterion(1).unwrap();
        assert!(report.passed, "{}", report.detail);
    }
}
