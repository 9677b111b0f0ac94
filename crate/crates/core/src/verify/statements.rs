//! One checker per supported closed-form statement, plus deterministic
//! parameter sweeps over enumerated families.
//!
//! Every check evaluates the hypotheses of its statement first; when they
//! fail, the conclusion is not judged at all. A failing conclusion always
//! carries a concrete counterexample string. The analytic parameters `s`
//! and `alpha` are optional: leaving them out makes the checker quantify
//! over the documented finite range internally, which is also what the
//! sweeps do.

use crate::ideal::{principal_integral_closure, SemigroupIdeal};
use crate::semigroup::NumericalSemigroup;
use crate::socle::{
    condition_check, decompose, graded_cm_check, max_ideal_power, predicted_reduction_number,
    predicted_socle_gens, quasi_socle, reduction_number,
};
use crate::verify::family::{gorenstein_family, mixed_family};
use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::sync::Arc;

/// The statements `check_statement` knows, in presentation order.
pub const STATEMENT_IDS: [&str; 15] = [
    "MAIN_THM",
    "REFLECTION_LEMMA",
    "INTEGRALITY_LEMMA",
    "GORENSTEIN_Q2",
    "GMT_COR",
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

/// Named parameters a checker may consume. Unused entries are ignored.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct StatementParams {
    /// Ambient semigroup generators, for the statements over general `H`.
    pub generators: Option<Vec<u64>>,
    /// Reflection point for `REFLECTION_LEMMA`.
    pub alpha: Option<i64>,
    /// Multiplicity for the `<a, a+1>` statements.
    pub a: Option<u64>,
    /// Socle degree.
    pub q: Option<u64>,
    /// Reduction exponent; optional where a range is implied.
    pub s: Option<u64>,
    /// Euclidean quotient `s div a` for the `<a, a+1>` statements.
    pub ell: Option<u64>,
    /// Euclidean remainder `s mod a`.
    pub r: Option<u64>,
}

/// Ranges driving the sweeps (and the implied internal ranges of the
/// checkers): multiplicities `a_min..=a_max` for the `<a, a+1>` statements,
/// conductors up to `conductor_max` for the family statements, reduction
/// exponents up to `s_factor` times the conductor (or times `a^2` over
/// `<a, a+1>`), and socle degrees reaching `q_extra` past the multiplicity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepBounds {
    pub a_min: u64,
    pub a_max: u64,
    pub conductor_max: u64,
    pub s_factor: u64,
    pub q_extra: u64,
}

impl Default for SweepBounds {
    fn default() -> Self {
        SweepBounds {
            a_min: 2,
            a_max: 12,
            conductor_max: 200,
            s_factor: 3,
            q_extra: 2,
        }
    }
}

/// The result of checking one statement at one parameter point.
///
/// `conclusion_holds` is present exactly when the hypotheses are met, and a
/// counterexample is present exactly when the conclusion fails.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationOutcome {
    /// Which statement was checked.
    pub statement_id: String,
    /// The parameter point, as named integers (`g1..gk` for generators).
    pub parameters: BTreeMap<String, i64>,
    /// Whether the statement's hypotheses hold at this point.
    pub hypotheses_met: bool,
    /// The verdict, absent when the hypotheses fail.
    pub conclusion_holds: Option<bool>,
    /// A concrete witness, present iff the conclusion fails.
    pub counterexample: Option<String>,
}

struct Outcome {
    id: &'static str,
    params: BTreeMap<String, i64>,
}

impl Outcome {
    fn new(id: &'static str) -> Self {
        Outcome {
            id,
            params: BTreeMap::new(),
        }
    }

    fn with(mut self, name: &str, value: i64) -> Self {
        self.params.insert(name.to_string(), value);
        self
    }

    fn with_generators(mut self, gens: &[u64]) -> Self {
        for (i, g) in gens.iter().enumerate() {
            self.params.insert(format!("g{}", i + 1), *g as i64);
        }
        self
    }

    fn unmet(self) -> VerificationOutcome {
        VerificationOutcome {
            statement_id: self.id.to_string(),
            parameters: self.params,
            hypotheses_met: false,
            conclusion_holds: None,
            counterexample: None,
        }
    }

    /// Conclusion verdict from an optional counterexample.
    fn done(self, counterexample: Option<String>) -> VerificationOutcome {
        VerificationOutcome {
            statement_id: self.id.to_string(),
            parameters: self.params,
            hypotheses_met: true,
            conclusion_holds: Some(counterexample.is_none()),
            counterexample,
        }
    }
}

fn require_generators(p: &StatementParams) -> Result<&[u64]> {
    p.generators
        .as_deref()
        .filter(|g| !g.is_empty())
        .ok_or(Error::HypothesisNotMet("statement needs `generators`"))
}

fn require(value: Option<u64>, missing: &'static str) -> Result<u64> {
    value.ok_or(Error::HypothesisNotMet(missing))
}

/// Members of `H` in `(0, hi]`.
fn member_range(h: &NumericalSemigroup, hi: u64) -> Vec<u64> {
    (1..=hi).filter(|&n| h.contains_u(n)).collect()
}

/// Explicit `s` if given (validity folded into the hypotheses via the
/// returned flag), else all members up to `hi`.
fn s_values(h: &NumericalSemigroup, given: Option<u64>, hi: u64) -> (Vec<u64>, bool) {
    match given {
        Some(s) => (vec![s], s > 0 && h.contains_u(s)),
        None => (member_range(h, hi), true),
    }
}

fn aa1(a: u64) -> Result<Arc<NumericalSemigroup>> {
    Ok(Arc::new(NumericalSemigroup::new(&[a, a + 1])?))
}

/// Stability of `I = Q : m^q` and the first two Valabrega-Valla steps, for
/// symmetric `H` under (C1) and (C2): `m^q I = m^q Q` and
/// `Q cap I^2 = Q I` always; `I^2 = Q I` once `s >= conductor`; `I^3 = Q I^2`
/// and `G(I)` Cohen-Macaulay once `s >= a (q - 1)`.
fn main_thm(p: &StatementParams, bounds: &SweepBounds) -> Result<VerificationOutcome> {
    let gens = require_generators(p)?;
    let q = require(p.q, "MAIN_THM needs `q`")?;
    let h = Arc::new(NumericalSemigroup::new(gens)?);
    let mut out = Outcome::new("MAIN_THM")
        .with_generators(h.generators())
        .with("q", q as i64);
    if let Some(s) = p.s {
        out = out.with("s", s as i64);
    }
    let cc = condition_check(&h, q);
    let (svals, s_ok) = s_values(&h, p.s, bounds.s_factor * h.conductor());
    if !(h.is_symmetric() && q >= 1 && cc.c1 && cc.c2 && s_ok) {
        return Ok(out.unmet());
    }

    let a = h.multiplicity();
    let c = h.conductor();
    let mq = max_ideal_power(&h, q);
    let mut cx = None;
    for s in svals {
        let q_ideal = SemigroupIdeal::principal(&h, s)?;
        let ideal = q_ideal.colon(&mq)?;
        if !mq.product(&ideal)?.equals(&mq.product(&q_ideal)?)? {
            cx = Some(format!("s = {s}: m^{q} I != m^{q} Q"));
            break;
        }
        let qi = q_ideal.product(&ideal)?;
        let i2 = ideal.product(&ideal)?;
        if !q_ideal.intersect(&i2)?.equals(&qi)? {
            cx = Some(format!("s = {s}: Q cap I^2 != Q I"));
            break;
        }
        if s >= c && !i2.equals(&qi)? {
            cx = Some(format!("s = {s} >= conductor {c} but I^2 != Q I"));
            break;
        }
        if s >= a * (q - 1) {
            if !i2.product(&ideal)?.equals(&q_ideal.product(&i2)?)? {
                cx = Some(format!("s = {s} >= a(q-1) = {} but I^3 != Q I^2", a * (q - 1)));
                break;
            }
            if graded_cm_check(s, &ideal)?.0 != Some(true) {
                cx = Some(format!(
                    "s = {s} >= a(q-1) = {} but G(I) is not Cohen-Macaulay",
                    a * (q - 1)
                ));
                break;
            }
        }
    }
    Ok(out.done(cx))
}

/// If the window `{0..alpha}` has the reflection property (`n` in `H` iff
/// `alpha - n` outside `H`) for some `alpha >= multiplicity - 1` in a
/// semigroup of multiplicity >= 3, then `alpha` is the Frobenius number and
/// `H` is symmetric.
fn reflection_lemma(p: &StatementParams, bounds: &SweepBounds) -> Result<VerificationOutcome> {
    let gens = require_generators(p)?;
    let h = Arc::new(NumericalSemigroup::new(gens)?);
    let mut out = Outcome::new("REFLECTION_LEMMA").with_generators(h.generators());
    let a = h.multiplicity() as i64;
    let (alphas, alpha_ok) = match p.alpha {
        Some(al) => {
            out = out.with("alpha", al);
            (vec![al], al >= a - 1)
        }
        None => (((a - 1)..=(bounds.s_factor * h.conductor()) as i64).collect(), true),
    };
    if !(a >= 3 && alpha_ok) {
        return Ok(out.unmet());
    }
    let mut cx = None;
    for alpha in alphas {
        if h.reflection_window_is_symmetric(alpha)?
            && !(alpha == h.frobenius() && h.is_symmetric())
        {
            cx = Some(format!(
                "alpha = {alpha}: the window reflects but frobenius = {} / symmetric = {}",
                h.frobenius(),
                h.is_symmetric()
            ));
            break;
        }
    }
    Ok(out.done(cx))
}

/// Under (C1) alone: `a q <= conductor`, and `I = Q : m^q` is integral over
/// `Q` (contained in the closure `{ n in H : n >= s }`).
fn integrality_lemma(p: &StatementParams, bounds: &SweepBounds) -> Result<VerificationOutcome> {
    let gens = require_generators(p)?;
    let q = require(p.q, "INTEGRALITY_LEMMA needs `q`")?;
    let h = Arc::new(NumericalSemigroup::new(gens)?);
    let mut out = Outcome::new("INTEGRALITY_LEMMA")
        .with_generators(h.generators())
        .with("q", q as i64);
    if let Some(s) = p.s {
        out = out.with("s", s as i64);
    }
    let cc = condition_check(&h, q);
    let (svals, s_ok) = s_values(&h, p.s, bounds.s_factor * h.conductor());
    if !(q >= 1 && cc.c1 && s_ok) {
        return Ok(out.unmet());
    }
    let a = h.multiplicity();
    let c = h.conductor();
    if a * q > c {
        return Ok(out.done(Some(format!("a q = {} exceeds the conductor {c}", a * q))));
    }
    let mq = max_ideal_power(&h, q);
    let mut cx = None;
    for s in svals {
        let ideal = SemigroupIdeal::principal(&h, s)?.colon(&mq)?;
        if ideal.min_generator() < s {
            cx = Some(format!(
                "s = {s}: I has generator {} below s",
                ideal.min_generator()
            ));
            break;
        }
    }
    Ok(out.done(cx))
}

/// For symmetric `H` of multiplicity >= 3, (C1) holds at `q = 2`; hence
/// every `(t^s) : m^2` stays inside the closure of `(t^s)` (spot-checked
/// over the sweep range of `s`).
fn gorenstein_q2(p: &StatementParams, bounds: &SweepBounds) -> Result<VerificationOutcome> {
    let gens = require_generators(p)?;
    let h = Arc::new(NumericalSemigroup::new(gens)?);
    let out = Outcome::new("GORENSTEIN_Q2").with_generators(h.generators());
    if !(h.is_symmetric() && h.multiplicity() >= 3) {
        return Ok(out.unmet());
    }
    let cc = condition_check(&h, 2);
    if !cc.c1 {
        return Ok(out.done(Some(format!(
            "(C1) fails at q = 2: t^{} is outside m^2",
            cc.c1_witness.expect("witness accompanies failure")
        ))));
    }
    let m2 = max_ideal_power(&h, 2);
    let mut cx = None;
    for s in member_range(&h, bounds.s_factor * h.conductor()) {
        let ideal = SemigroupIdeal::principal(&h, s)?.colon(&m2)?;
        if ideal.min_generator() < s {
            cx = Some(format!("s = {s}: (t^s) : m^2 escapes the closure of (t^s)"));
            break;
        }
    }
    Ok(out.done(cx))
}

/// The `q = 2` package for symmetric `H` of multiplicity >= 3:
/// `m^2 I = m^2 Q`, `I^3 = Q I^2`, `G(I)` is Cohen-Macaulay, and
/// `I^2 = Q I` as soon as `s >= conductor`.
fn gmt_cor(p: &StatementParams, bounds: &SweepBounds) -> Result<VerificationOutcome> {
    let gens = require_generators(p)?;
    let h = Arc::new(NumericalSemigroup::new(gens)?);
    let mut out = Outcome::new("GMT_COR").with_generators(h.generators());
    if let Some(s) = p.s {
        out = out.with("s", s as i64);
    }
    let (svals, s_ok) = s_values(&h, p.s, bounds.s_factor * h.conductor());
    if !(h.is_symmetric() && h.multiplicity() >= 3 && s_ok) {
        return Ok(out.unmet());
    }
    let c = h.conductor();
    let m2 = max_ideal_power(&h, 2);
    let mut cx = None;
    for s in svals {
        let q_ideal = SemigroupIdeal::principal(&h, s)?;
        let ideal = q_ideal.colon(&m2)?;
        if !m2.product(&ideal)?.equals(&m2.product(&q_ideal)?)? {
            cx = Some(format!("s = {s}: m^2 I != m^2 Q"));
            break;
        }
        let i2 = ideal.product(&ideal)?;
        if !i2.product(&ideal)?.equals(&q_ideal.product(&i2)?)? {
            cx = Some(format!("s = {s}: I^3 != Q I^2"));
            break;
        }
        if graded_cm_check(s, &ideal)?.0 != Some(true) {
            cx = Some(format!("s = {s}: G(I) is not Cohen-Macaulay"));
            break;
        }
        if s >= c && !i2.equals(&q_ideal.product(&ideal)?)? {
            cx = Some(format!("s = {s} >= conductor {c} but I^2 != Q I"));
            break;
        }
    }
    Ok(out.done(cx))
}

/// Membership and powers in `H = <a, a+1>`: `a*ell + i` (0 <= i < a) lies in
/// `H` iff `i <= ell`, and `m^ell` is generated by `t^{a*ell + i}` for
/// `0 <= i <= ell` — equivalently, it is everything in `H` from `a*ell` on.
fn aa1_membership(p: &StatementParams) -> Result<VerificationOutcome> {
    let a = require(p.a, "AA1_MEMBERSHIP needs `a`")?;
    let ell = require(p.ell, "AA1_MEMBERSHIP needs `ell`")?;
    let out = Outcome::new("AA1_MEMBERSHIP")
        .with("a", a as i64)
        .with("ell", ell as i64);
    if a < 2 {
        return Ok(out.unmet());
    }
    let h = aa1(a)?;
    let mut cx = None;
    if let Some(i) = (0..a).find(|&i| h.contains_u(a * ell + i) != (i <= ell)) {
        cx = Some(format!("membership of a*ell + {i} disagrees with i <= ell"));
    } else {
        let mell = max_ideal_power(&h, ell);
        let listed: Vec<u64> = (0..=ell).map(|i| a * ell + i).collect();
        if !mell.equals(&SemigroupIdeal::from_generators(&h, &listed)?)? {
            cx = Some(format!("m^{ell} != (t^(a ell + i) : 0 <= i <= ell)"));
        } else if !mell.equals(&principal_integral_closure(&h, a * ell)?)? {
            cx = Some(format!("m^{ell} != (t^n : n in H, n >= a ell)"));
        }
    }
    Ok(out.done(cx))
}

/// Over `<a, a+1>`, conditions (C1) and (C2) hold together iff `q < a`.
fn aa1_c1c2_iff(p: &StatementParams) -> Result<VerificationOutcome> {
    let a = require(p.a, "AA1_C1C2_IFF needs `a`")?;
    let q = require(p.q, "AA1_C1C2_IFF needs `q`")?;
    let out = Outcome::new("AA1_C1C2_IFF")
        .with("a", a as i64)
        .with("q", q as i64);
    if !(a >= 2 && q >= 1) {
        return Ok(out.unmet());
    }
    let cc = condition_check(&aa1(a)?, q);
    let cx = if (cc.c1 && cc.c2) == (q < a) {
        None
    } else {
        Some(format!(
            "c1 = {}, c2 = {}, q < a = {}",
            cc.c1,
            cc.c2,
            q < a
        ))
    };
    Ok(out.done(cx))
}

/// Over `<a, a+1>`, for every `0 < s` in `H`: integrality of `I` over `Q`,
/// the stability `m^q I = m^q Q`, and `q < a` are all equivalent.
fn aa1_integral_equiv(p: &StatementParams, bounds: &SweepBounds) -> Result<VerificationOutcome> {
    let a = require(p.a, "AA1_INTEGRAL_EQUIV needs `a`")?;
    let q = require(p.q, "AA1_INTEGRAL_EQUIV needs `q`")?;
    let mut out = Outcome::new("AA1_INTEGRAL_EQUIV")
        .with("a", a as i64)
        .with("q", q as i64);
    if let Some(s) = p.s {
        out = out.with("s", s as i64);
    }
    if !(a >= 2 && q >= 1) {
        return Ok(out.unmet());
    }
    let h = aa1(a)?;
    let (svals, s_ok) = s_values(&h, p.s, bounds.s_factor * a * a);
    if !s_ok {
        return Ok(out.unmet());
    }
    let expected = q < a;
    let mq = max_ideal_power(&h, q);
    let mut cx = None;
    for s in svals {
        let q_ideal = SemigroupIdeal::principal(&h, s)?;
        let ideal = q_ideal.colon(&mq)?;
        let integral = ideal.min_generator() >= s;
        let stable = mq.product(&ideal)?.equals(&mq.product(&q_ideal)?)?;
        if integral != expected || stable != expected {
            cx = Some(format!(
                "s = {s}: integral = {integral}, m^q-stable = {stable}, q < a = {expected}"
            ));
            break;
        }
    }
    Ok(out.done(cx))
}

/// Over `<a, a+1>` with `q < a`: `I^2 = Q I` once `s >= a q`, and once
/// `s >= a (q-1)` already `I^3 = Q I^2` with `G(I)` Cohen-Macaulay.
fn aa1_cor(p: &StatementParams, bounds: &SweepBounds) -> Result<VerificationOutcome> {
    let a = require(p.a, "AA1_COR needs `a`")?;
    let q = require(p.q, "AA1_COR needs `q`")?;
    let mut out = Outcome::new("AA1_COR").with("a", a as i64).with("q", q as i64);
    if let Some(s) = p.s {
        out = out.with("s", s as i64);
    }
    if !(a >= 2 && q >= 1 && q < a) {
        return Ok(out.unmet());
    }
    let h = aa1(a)?;
    let (svals, s_ok) = s_values(&h, p.s, bounds.s_factor * a * a);
    if !s_ok {
        return Ok(out.unmet());
    }
    let mq = max_ideal_power(&h, q);
    let mut cx = None;
    for s in svals {
        let q_ideal = SemigroupIdeal::principal(&h, s)?;
        let ideal = q_ideal.colon(&mq)?;
        let i2 = ideal.product(&ideal)?;
        if s >= a * q && !i2.equals(&q_ideal.product(&ideal)?)? {
            cx = Some(format!("s = {s} >= a q but I^2 != Q I"));
            break;
        }
        if s >= a * (q - 1) {
            if !i2.product(&ideal)?.equals(&q_ideal.product(&i2)?)? {
                cx = Some(format!("s = {s} >= a(q-1) but I^3 != Q I^2"));
                break;
            }
            if graded_cm_check(s, &ideal)?.0 != Some(true) {
                cx = Some(format!("s = {s} >= a(q-1) but G(I) is not Cohen-Macaulay"));
                break;
            }
        }
    }
    Ok(out.done(cx))
}

/// The closed-form generator list for `I = Q : m^q` over `<a, a+1>` in the
/// region `q < a`, `s < a q` matches the engine; for `r = 0` the list
/// collapses to `Q + m^p`.
fn gen_formula(p: &StatementParams) -> Result<VerificationOutcome> {
    let a = require(p.a, "GEN_FORMULA needs `a`")?;
    let q = require(p.q, "GEN_FORMULA needs `q`")?;
    let mut out = Outcome::new("GEN_FORMULA").with("a", a as i64).with("q", q as i64);
    if let Some(s) = p.s {
        out = out.with("s", s as i64);
    }
    if !(a >= 2 && q >= 1 && q < a) {
        return Ok(out.unmet());
    }
    let h = aa1(a)?;
    let svals: Vec<u64> = match p.s {
        Some(s) => {
            if !(s > 0 && s < a * q && h.contains_u(s)) {
                return Ok(out.unmet());
            }
            vec![s]
        }
        None => (1..a * q).filter(|&s| h.contains_u(s)).collect(),
    };
    let mut cx = None;
    for s in svals {
        let ideal = quasi_socle(&h, s, q)?;
        if !predicted_socle_gens(a, q, s)?.equals(&ideal)? {
            cx = Some(format!("s = {s}: predicted generators differ from Q : m^q"));
            break;
        }
        let d = decompose(a, q, s)?;
        if d.r == 0 {
            let mut plain = vec![s];
            plain.extend_from_slice(max_ideal_power(&h, d.p as u64).generators());
            if !SemigroupIdeal::from_generators(&h, &plain)?.equals(&ideal)? {
                cx = Some(format!("s = {s}, r = 0: I != Q + m^p"));
                break;
            }
        }
    }
    Ok(out.done(cx))
}

/// The two exact values at `q = a - 1`: for `s = a ell` the socle ideal is
/// `m^ell` with `G(I)` Cohen-Macaulay, and for `s = (a+1) ell` (`r = ell`)
/// `G(I)` is Cohen-Macaulay with `r_Q(I) = ceil((a-1)/(ell+1))`.
fn red_formula(p: &StatementParams) -> Result<VerificationOutcome> {
    let a = require(p.a, "RED_FORMULA needs `a`")?;
    let ell = require(p.ell, "RED_FORMULA needs `ell`")?;
    let out = Outcome::new("RED_FORMULA").with("a", a as i64).with("ell", ell as i64);
    if !(a >= 3 && ell >= 1 && ell <= a - 2) {
        return Ok(out.unmet());
    }
    let h = aa1(a)?;
    let q = a - 1;
    let mut cx = None;

    let s = a * ell;
    let ideal = quasi_socle(&h, s, q)?;
    if !ideal.equals(&max_ideal_power(&h, ell))? {
        cx = Some(format!("s = a ell = {s}: I != m^ell"));
    } else if graded_cm_check(s, &ideal)?.0 != Some(true) {
        cx = Some(format!("s = a ell = {s}: G(m^ell) is not Cohen-Macaulay"));
    } else {
        let s = (a + 1) * ell;
        let ideal = quasi_socle(&h, s, q)?;
        let want = predicted_reduction_number(a, ell);
        let got = reduction_number(s, &ideal)?;
        if graded_cm_check(s, &ideal)?.0 != Some(true) {
            cx = Some(format!("s = (a+1) ell = {s}: G(I) is not Cohen-Macaulay"));
        } else if got != Some(want) {
            cx = Some(format!("s = (a+1) ell = {s}: r_Q(I) = {got:?}, formula says {want}"));
        }
    }
    Ok(out.done(cx))
}

/// For `q = a - 1` and `0 <= r < ell` the reduction number is at most
/// `a - ell`.
fn red_bound(p: &StatementParams) -> Result<VerificationOutcome> {
    let a = require(p.a, "RED_BOUND needs `a`")?;
    let ell = require(p.ell, "RED_BOUND needs `ell`")?;
    let r = require(p.r, "RED_BOUND needs `r`")?;
    let out = Outcome::new("RED_BOUND")
        .with("a", a as i64)
        .with("ell", ell as i64)
        .with("r", r as i64);
    if !(a >= 3 && ell >= 1 && ell <= a - 2 && r < ell) {
        return Ok(out.unmet());
    }
    let h = aa1(a)?;
    let s = a * ell + r;
    let ideal = quasi_socle(&h, s, a - 1)?;
    let got = reduction_number(s, &ideal)?;
    let cx = match got {
        Some(n) if n <= a - ell => None,
        _ => Some(format!("r_Q(I) = {got:?} exceeds a - ell = {}", a - ell)),
    };
    Ok(out.done(cx))
}

/// The first non-Cohen-Macaulay construction: `q = a - 1`, `r = ell - 1`
/// with `ell >= 2` and `a >= ell + 3` gives
/// `Q cap I^{a-ell} != Q I^{a-ell-1}`, `G(I)` not Cohen-Macaulay, and
/// `r_Q(I) = a - ell` exactly.
fn noncm_a(p: &StatementParams) -> Result<VerificationOutcome> {
    let a = require(p.a, "NONCM_A needs `a`")?;
    let ell = require(p.ell, "NONCM_A needs `ell`")?;
    let out = Outcome::new("NONCM_A").with("a", a as i64).with("ell", ell as i64);
    if !(ell >= 2 && a >= ell + 3) {
        return Ok(out.unmet());
    }
    let h = aa1(a)?;
    let s = a * ell + ell - 1;
    let e = a - ell;
    let q_ideal = SemigroupIdeal::principal(&h, s)?;
    let ideal = quasi_socle(&h, s, a - 1)?;
    let lhs = q_ideal.intersect(&ideal.power(e))?;
    let rhs = q_ideal.product(&ideal.power(e - 1))?;
    let (cm, _) = graded_cm_check(s, &ideal)?;
    let got = reduction_number(s, &ideal)?;
    let cx = if lhs.equals(&rhs)? {
        Some(format!("Q cap I^{e} = Q I^{} after all", e - 1))
    } else if cm != Some(false) {
        Some(format!("G(I) Cohen-Macaulay verdict is {cm:?}, expected false"))
    } else if got != Some(e) {
        Some(format!("r_Q(I) = {got:?}, expected {e}"))
    } else {
        None
    };
    Ok(out.done(cx))
}

/// The second non-Cohen-Macaulay construction: `q = a - 1`, `0 < r < ell`,
/// `k = ell - r`, `ell + k + 2 <= a <= 2 ell + 1` gives
/// `Q cap I^3 != Q I^2` and `G(I)` not Cohen-Macaulay.
fn noncm_b(p: &StatementParams) -> Result<VerificationOutcome> {
    let a = require(p.a, "NONCM_B needs `a`")?;
    let ell = require(p.ell, "NONCM_B needs `ell`")?;
    let r = require(p.r, "NONCM_B needs `r`")?;
    let out = Outcome::new("NONCM_B")
        .with("a", a as i64)
        .with("ell", ell as i64)
        .with("r", r as i64);
    if !(r >= 1 && r < ell && ell + (ell - r) + 2 <= a && a <= 2 * ell + 1) {
        return Ok(out.unmet());
    }
    let h = aa1(a)?;
    let s = a * ell + r;
    let q_ideal = SemigroupIdeal::principal(&h, s)?;
    let ideal = quasi_socle(&h, s, a - 1)?;
    let lhs = q_ideal.intersect(&ideal.power(3))?;
    let rhs = q_ideal.product(&ideal.power(2))?;
    let (cm, _) = graded_cm_check(s, &ideal)?;
    let cx = if lhs.equals(&rhs)? {
        Some("Q cap I^3 = Q I^2 after all".to_string())
    } else if cm != Some(false) {
        Some(format!("G(I) Cohen-Macaulay verdict is {cm:?}, expected false"))
    } else {
        None
    };
    Ok(out.done(cx))
}

/// For `a = 2 ell + 1` (odd), `q = a - 1`, `s = a ell + r` with
/// `0 <= r <= ell`: `G(I)` is Cohen-Macaulay iff `r = 0` or `r = ell`.
fn cm_iff(p: &StatementParams) -> Result<VerificationOutcome> {
    let ell = require(p.ell, "CM_IFF needs `ell`")?;
    let r = require(p.r, "CM_IFF needs `r`")?;
    let out = Outcome::new("CM_IFF").with("ell", ell as i64).with("r", r as i64);
    if !(ell >= 2 && r <= ell) {
        return Ok(out.unmet());
    }
    let a = 2 * ell + 1;
    let h = aa1(a)?;
    let s = a * ell + r;
    let ideal = quasi_socle(&h, s, a - 1)?;
    let (cm, _) = graded_cm_check(s, &ideal)?;
    let expected = r == 0 || r == ell;
    let cx = if cm == Some(expected) {
        None
    } else {
        Some(format!("a = {a}, s = {s}: Cohen-Macaulay verdict {cm:?}, expected {expected}"))
    };
    Ok(out.done(cx))
}

/// Checks `statement_id` at the given parameter point with explicit bounds
/// for any internally quantified range.
pub fn check_statement_bounded(
    statement_id: &str,
    params: &StatementParams,
    bounds: &SweepBounds,
) -> Result<VerificationOutcome> {
    match statement_id {
        "MAIN_THM" => main_thm(params, bounds),
        "REFLECTION_LEMMA" => reflection_lemma(params, bounds),
        "INTEGRALITY_LEMMA" => integrality_lemma(params, bounds),
        "GORENSTEIN_Q2" => gorenstein_q2(params, bounds),
        "GMT_COR" => gmt_cor(params, bounds),
        "AA1_MEMBERSHIP" => aa1_membership(params),
        "AA1_C1C2_IFF" => aa1_c1c2_iff(params),
        "AA1_INTEGRAL_EQUIV" => aa1_integral_equiv(params, bounds),
        "AA1_COR" => aa1_cor(params, bounds),
        "GEN_FORMULA" => gen_formula(params),
        "RED_FORMULA" => red_formula(params),
        "RED_BOUND" => red_bound(params),
        "NONCM_A" => noncm_a(params),
        "NONCM_B" => noncm_b(params),
        "CM_IFF" => cm_iff(params),
        other => Err(Error::UnknownStatement(other.to_string())),
    }
}

/// Checks `statement_id` with the default bounds.
pub fn check_statement(statement_id: &str, params: &StatementParams) -> Result<VerificationOutcome> {
    check_statement_bounded(statement_id, params, &SweepBounds::default())
}

/// Counts over a sweep's outcomes.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepSummary {
    /// Parameter points visited.
    pub total: u64,
    /// Points where the hypotheses failed (nothing was concluded).
    pub hypotheses_unmet: u64,
    /// Points where the conclusion held.
    pub holds: u64,
    /// Points where the conclusion failed.
    pub fails: u64,
}

/// A statement swept over its parameter grid.
#[derive(Debug, Clone)]
pub struct SweepReport {
    /// Which statement.
    pub statement_id: String,
    /// Every outcome, in enumeration order.
    pub outcomes: Vec<VerificationOutcome>,
    /// Tallies.
    pub summary: SweepSummary,
}

impl SweepReport {
    fn new(statement_id: &str) -> Self {
        SweepReport {
            statement_id: statement_id.to_string(),
            outcomes: Vec::new(),
            summary: SweepSummary::default(),
        }
    }

    fn push(&mut self, outcome: VerificationOutcome) {
        self.summary.total += 1;
        match outcome.conclusion_holds {
            None => self.summary.hypotheses_unmet += 1,
            Some(true) => self.summary.holds += 1,
            Some(false) => self.summary.fails += 1,
        }
        self.outcomes.push(outcome);
    }

    /// The failing outcomes, in order.
    pub fn failures(&self) -> impl Iterator<Item = &VerificationOutcome> {
        self.outcomes.iter().filter(|o| o.conclusion_holds == Some(false))
    }
}

/// Sweeps one statement over its deterministic parameter grid: families of
/// semigroups for the general statements, multiplicity/degree/remainder
/// grids for the `<a, a+1>` ones. Analytic parameters (`s`, `alpha`) are
/// quantified inside each outcome.
pub fn sweep(statement_id: &str, bounds: &SweepBounds) -> Result<SweepReport> {
    let mut report = SweepReport::new(statement_id);
    let a_min = bounds.a_min.max(2);
    let a_range = a_min..=bounds.a_max;
    let mut run = |params: StatementParams| -> Result<()> {
        report.push(check_statement_bounded(statement_id, &params, bounds)?);
        Ok(())
    };
    match statement_id {
        "MAIN_THM" | "INTEGRALITY_LEMMA" => {
            for h in gorenstein_family(bounds.conductor_max) {
                for q in 1..=h.conductor() / h.multiplicity() {
                    run(StatementParams {
                        generators: Some(h.generators().to_vec()),
                        q: Some(q),
                        ..Default::default()
                    })?;
                }
            }
        }
        "REFLECTION_LEMMA" => {
            for h in mixed_family(bounds.conductor_max) {
                run(StatementParams {
                    generators: Some(h.generators().to_vec()),
                    ..Default::default()
                })?;
            }
        }
        "GORENSTEIN_Q2" | "GMT_COR" => {
            for h in gorenstein_family(bounds.conductor_max) {
                run(StatementParams {
                    generators: Some(h.generators().to_vec()),
                    ..Default::default()
                })?;
            }
        }
        "AA1_MEMBERSHIP" => {
            for a in a_range {
                for ell in 0..=a + bounds.q_extra {
                    run(StatementParams { a: Some(a), ell: Some(ell), ..Default::default() })?;
                }
            }
        }
        "AA1_C1C2_IFF" | "AA1_INTEGRAL_EQUIV" | "AA1_COR" | "GEN_FORMULA" => {
            for a in a_range {
                for q in 1..=a + bounds.q_extra {
                    run(StatementParams { a: Some(a), q: Some(q), ..Default::default() })?;
                }
            }
        }
        "RED_FORMULA" => {
            for a in a_min.max(3)..=bounds.a_max {
                for ell in 1..=a - 2 {
                    run(StatementParams { a: Some(a), ell: Some(ell), ..Default::default() })?;
                }
            }
        }
        "RED_BOUND" => {
            for a in a_min.max(3)..=bounds.a_max {
                for ell in 1..=a - 2 {
                    for r in 0..ell {
                        run(StatementParams {
                            a: Some(a),
                            ell: Some(ell),
                            r: Some(r),
                            ..Default::default()
                        })?;
                    }
                }
            }
        }
        "NONCM_A" => {
            for a in a_min.max(5)..=bounds.a_max {
                for ell in 2..=a - 3 {
                    run(StatementParams { a: Some(a), ell: Some(ell), ..Default::default() })?;
                }
            }
        }
        "NONCM_B" => {
            for a in a_min.max(5)..=bounds.a_max {
                for ell in 2..a {
                    for r in 1..ell {
                        if ell + (ell - r) + 2 <= a && a <= 2 * ell + 1 {
                            run(StatementParams {
                                a: Some(a),
                                ell: Some(ell),
                                r: Some(r),
                                ..Default::default()
                            })?;
                        }
                    }
                }
            }
        }
        "CM_IFF" => {
            for ell in 2..=bounds.a_max.saturating_sub(1) / 2 {
                for r in 0..=ell {
                    run(StatementParams { ell: Some(ell), r: Some(r), ..Default::default() })?;
                }
            }
        }
        other => return Err(Error::UnknownStatement(other.to_string())),
    }
    Ok(report)
}

/// Sweeps every supported statement.
pub fn sweep_all(bounds: &SweepBounds) -> Result<Vec<SweepReport>> {
    STATEMENT_IDS.iter().map(|id| sweep(id, bounds)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_statement() {
        assert!(matches!(
            check_statement("NO_SUCH_THING", &StatementParams::default()),
            Err(Error::UnknownStatement(_))
        ));
    }

    #[test]
    fn missing_parameters_are_errors() {
        assert!(matches!(
            check_statement("MAIN_THM", &StatementParams::default()),
            Err(Error::HypothesisNotMet(_))
        ));
        assert!(matches!(
            check_statement("NONCM_A", &StatementParams { a: Some(5), ..Default::default() }),
            Err(Error::HypothesisNotMet(_))
        ));
    }

    #[test]
    fn main_thm_point_checks() {
        // conditions hold for H1 at q = 3: everything must go through
        let p = StatementParams {
            generators: Some(vec![10, 13, 16, 17, 19]),
            q: Some(3),
            s: Some(16),
            ..Default::default()
        };
        let o = check_statement("MAIN_THM", &p).unwrap();
        assert!(o.hypotheses_met);
        assert_eq!(o.conclusion_holds, Some(true));
        assert_eq!(o.parameters["q"], 3);
        assert_eq!(o.parameters["s"], 16);
        assert_eq!(o.parameters["g1"], 10);
        // (C2) fails for H2 at q = 3
        let p = StatementParams {
            generators: Some(vec![7, 10, 18, 22]),
            q: Some(3),
            ..Default::default()
        };
        let o = check_statement("MAIN_THM", &p).unwrap();
        assert!(!o.hypotheses_met);
        assert_eq!(o.conclusion_holds, None);
        assert_eq!(o.counterexample, None);
        // non-symmetric ambient is out of scope
        let p = StatementParams {
            generators: Some(vec![3, 5, 7]),
            q: Some(1),
            ..Default::default()
        };
        assert!(!check_statement("MAIN_THM", &p).unwrap().hypotheses_met);
    }

    #[test]
    fn reflection_points() {
        let base = StatementParams {
            generators: Some(vec![5, 6]),
            ..Default::default()
        };
        let o = check_statement(
            "REFLECTION_LEMMA",
            &StatementParams { alpha: Some(19), ..base.clone() },
        )
        .unwrap();
        assert_eq!(o.conclusion_holds, Some(true));
        // window fails at alpha = 13, so the implication is vacuous
        let o = check_statement(
            "REFLECTION_LEMMA",
            &StatementParams { alpha: Some(13), ..base.clone() },
        )
        .unwrap();
        assert_eq!(o.conclusion_holds, Some(true));
        let o = check_statement(
            "REFLECTION_LEMMA",
            &StatementParams { alpha: Some(3), ..base },
        )
        .unwrap();
        assert!(!o.hypotheses_met);
        // the quantified form sweeps alpha internally
        let o = check_statement(
            "REFLECTION_LEMMA",
            &StatementParams { generators: Some(vec![3, 5, 7]), ..Default::default() },
        )
        .unwrap();
        assert_eq!(o.conclusion_holds, Some(true));
    }

    #[test]
    fn noncm_spot_checks() {
        let o = check_statement(
            "NONCM_A",
            &StatementParams { a: Some(5), ell: Some(2), ..Default::default() },
        )
        .unwrap();
        assert!(o.hypotheses_met);
        assert_eq!(o.conclusion_holds, Some(true));
        let o = check_statement(
            "NONCM_A",
            &StatementParams { a: Some(4), ell: Some(2), ..Default::default() },
        )
        .unwrap();
        assert!(!o.hypotheses_met);
        let o = check_statement(
            "CM_IFF",
            &StatementParams { ell: Some(2), r: Some(1), ..Default::default() },
        )
        .unwrap();
        assert_eq!(o.conclusion_holds, Some(true));
    }

    #[test]
    fn outcome_serialization() {
        let o = check_statement(
            "CM_IFF",
            &StatementParams { ell: Some(2), r: Some(0), ..Default::default() },
        )
        .unwrap();
        let json = serde_json::to_string(&o).unwrap();
        assert!(json.contains(r#""statement_id":"CM_IFF""#));
        assert!(json.contains(r#""ell":2"#));
        assert!(json.contains(r#""conclusion_holds":true"#));
        let back: VerificationOutcome = serde_json::from_str(&json).unwrap();
        assert_eq!(back, o);
    }

    #[test]
    fn small_sweeps_are_clean() {
        let bounds = SweepBounds { a_max: 9, ..Default::default() };
        for id in ["AA1_MEMBERSHIP", "AA1_C1C2_IFF", "RED_FORMULA", "RED_BOUND", "NONCM_A", "NONCM_B", "CM_IFF"] {
            let rep = sweep(id, &bounds).unwrap();
            assert_eq!(rep.summary.fails, 0, "{id}");
            assert!(rep.summary.holds > 0, "{id}");
            assert_eq!(
                rep.summary.total,
                rep.summary.holds + rep.summary.hypotheses_unmet,
                "{id}"
            );
            assert_eq!(rep.summary.total as usize, rep.outcomes.len(), "{id}");
        }
    }

    #[test]
    fn sweeps_are_deterministic() {
        let bounds = SweepBounds { a_max: 8, ..Default::default() };
        let a = sweep("GEN_FORMULA", &bounds).unwrap();
        let b = sweep("GEN_FORMULA", &bounds).unwrap();
        assert_eq!(a.outcomes, b.outcomes);
        assert_eq!(a.summary, b.summary);
    }

    #[test]
    fn outcome_invariants_hold_across_a_sweep() {
        let bounds = SweepBounds { a_max: 8, ..Default::default() };
        for rep in [
            sweep("AA1_INTEGRAL_EQUIV", &bounds).unwrap(),
            sweep("AA1_COR", &bounds).unwrap(),
        ] {
            for o in &rep.outcomes {
                assert_eq!(o.conclusion_holds.is_some(), o.hypotheses_met);
                assert_eq!(
                    o.counterexample.is_some(),
                    o.conclusion_holds == Some(false)
                );
            }
            assert_eq!(rep.summary.fails, 0);
        }
    }
}
