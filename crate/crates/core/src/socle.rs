//! Quasi-socle ideals `I = Q : m^q` for a principal reduction `Q = (t^s)`,
//! their reduction numbers, and the Valabrega-Valla test for the associated
//! graded ring `G(I)`.

use crate::ideal::{principal_integral_closure, SemigroupIdeal};
use crate::semigroup::NumericalSemigroup;
use crate::{Error, Result};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::sync::Arc;

/// `m^q`, where `m` is the maximal monomial ideal (all positive exponents of
/// `H`). `m^0` is the unit ideal.
pub fn max_ideal_power(h: &Arc<NumericalSemigroup>, q: u64) -> SemigroupIdeal {
    SemigroupIdeal::from_generators(h, h.generators())
        .expect("generators are members")
        .power(q)
}

/// The quasi-socle ideal `I = (t^s) : m^q`. Needs `s` in `H`; `q = 0` gives
/// back `(t^s)`.
pub fn quasi_socle(h: &Arc<NumericalSemigroup>, s: u64, q: u64) -> Result<SemigroupIdeal> {
    SemigroupIdeal::principal(h, s)?.colon(&max_ideal_power(h, q))
}

/// Outcome of testing the two finiteness conditions that drive the main
/// stability statement, with the first failing exponent as witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionCheck {
    /// (C1) `t^n` lies in `m^q` for every integer `n >= conductor`.
    pub c1: bool,
    /// Least `n >= conductor` with `t^n` outside `m^q`, when (C1) fails.
    pub c1_witness: Option<u64>,
    /// (C2) every member `n` of `H` with `t^n` outside `m^{q-1}` satisfies
    /// `n < multiplicity * (q - 1)`.
    pub c2: bool,
    /// Least member violating that bound, when (C2) fails.
    pub c2_witness: Option<u64>,
}

/// Decides (C1) and (C2) for `H` at socle degree `q`.
///
/// Both conditions quantify over infinitely many exponents but are settled
/// on a finite window: exponents `n` with `n - (q-1) * multiplicity` at or
/// past the conductor lie in `m^q` automatically (peel off `q - 1` copies of
/// `t^multiplicity` and land in the tail of `m`), and similarly for
/// `m^{q-1}` one step lower. `q = 0` makes both conditions vacuous.
pub fn condition_check(h: &Arc<NumericalSemigroup>, q: u64) -> ConditionCheck {
    let a = h.multiplicity();
    let c = h.conductor();
    let mut c1_witness = None;
    let mut c2_witness = None;
    if q >= 1 {
        let mq = max_ideal_power(h, q);
        c1_witness = (c..(q - 1) * a + c + 1).find(|&n| !mq.contains(n));
        if q >= 2 {
            let mq1 = max_ideal_power(h, q - 1);
            c2_witness = (a * (q - 1)..(q - 2) * a + c + 1)
                .find(|&n| h.contains_u(n) && !mq1.contains(n));
        }
    }
    ConditionCheck {
        c1: c1_witness.is_none(),
        c1_witness,
        c2: c2_witness.is_none(),
        c2_witness,
    }
}

/// Whether `m^q I = m^q Q` for `I = Q : m^q`, `Q = (t^s)`.
pub fn mq_stability(h: &Arc<NumericalSemigroup>, s: u64, q: u64) -> Result<bool> {
    let ideal = quasi_socle(h, s, q)?;
    let q_ideal = SemigroupIdeal::principal(h, s)?;
    let mq = max_ideal_power(h, q);
    mq.product(&ideal)?.equals(&mq.product(&q_ideal)?)
}

struct SocleDynamics {
    reduction_number: Option<u64>,
    vv: Vec<bool>,
    lengths: Vec<u64>,
}

/// Shared engine behind `reduction_number`, `graded_cm_check` and `analyze`.
///
/// `ideal` must contain `Q = (t^s)`. When `ideal` is not integral over `Q`
/// (some generator is below `s`, so it escapes the integral closure of `Q`
/// and no power stabilizes), everything is reported as undefined. Otherwise
/// the reduction number exists and is found by ascending search; the search
/// is capped at `dim_k(closure(Q)/Q) + 2`, which the theory guarantees is
/// never reached, so running past it panics.
fn socle_dynamics(s: u64, ideal: &SemigroupIdeal) -> Result<SocleDynamics> {
    let h = ideal.ambient();
    if !ideal.contains(s) {
        return Err(Error::NotContainingQ);
    }
    let q_ideal = SemigroupIdeal::principal(h, s)?;
    if ideal.min_generator() < s {
        return Ok(SocleDynamics {
            reduction_number: None,
            vv: Vec::new(),
            lengths: Vec::new(),
        });
    }
    let qbar = principal_integral_closure(h, s)?;
    let cap = qbar.length_quotient(&q_ideal)? + 2;

    let mut powers = vec![SemigroupIdeal::unit(h), ideal.clone()];
    let mut qprods = vec![q_ideal.clone()];
    let mut reduction = None;
    for n in 0..=cap {
        let n = n as usize;
        while powers.len() <= n + 1 {
            powers.push(powers.last().expect("nonempty").product(ideal)?);
        }
        while qprods.len() <= n {
            qprods.push(q_ideal.product(&powers[qprods.len()])?);
        }
        if powers[n + 1].equals(&qprods[n])? {
            reduction = Some(n as u64);
            break;
        }
    }
    let r = reduction.unwrap_or_else(|| {
        panic!("reduction number search passed its bound {cap}: internal invariant violated")
    }) as usize;

    // Valabrega-Valla: G(I) is Cohen-Macaulay iff Q cap I^{n+1} = Q I^n for
    // 1 <= n <= r; past r the two sides agree identically.
    let mut vv = Vec::with_capacity(r);
    for n in 1..=r {
        vv.push(q_ideal.intersect(&powers[n + 1])?.equals(&qprods[n])?);
    }
    let mut lengths = Vec::with_capacity(r);
    for n in 0..r {
        lengths.push(powers[n + 1].length_quotient(&qprods[n])?);
    }
    Ok(SocleDynamics {
        reduction_number: Some(r as u64),
        vv,
        lengths,
    })
}

/// The reduction number `r_Q(I) = min { n : I^{n+1} = Q I^n }` with respect
/// to `Q = (t^s)`, or `None` when `I` is not integral over `Q` (then no such
/// `n` exists). `I` must contain `Q`.
pub fn reduction_number(s: u64, ideal: &SemigroupIdeal) -> Result<Option<u64>> {
    Ok(socle_dynamics(s, ideal)?.reduction_number)
}

/// Valabrega-Valla check for `G(I)` with respect to `Q = (t^s)`: returns
/// the verdict (None when `I` is not integral over `Q`, so the test does not
/// apply) together with the row of conditions `Q cap I^{n+1} = Q I^n` for
/// `n = 1, ..., r_Q(I)`.
pub fn graded_cm_check(s: u64, ideal: &SemigroupIdeal) -> Result<(Option<bool>, Vec<bool>)> {
    let d = socle_dynamics(s, ideal)?;
    Ok((d.reduction_number.map(|_| d.vv.iter().all(|&b| b)), d.vv))
}

/// Everything `analyze` knows about one quasi-socle ideal.
///
/// Exactly when `integral_over_q` is false, `reduction_number` and `cm` are
/// absent and `vv_table` and `lengths` are empty. `mq_stable` implies
/// integrality (compare least exponents on both sides of `m^q I = m^q Q`).
#[derive(Debug, Clone)]
pub struct QuasiSocleReport {
    /// Ambient semigroup.
    pub semigroup: Arc<NumericalSemigroup>,
    /// Exponent of the principal reduction `Q = (t^s)`.
    pub s: u64,
    /// Socle degree.
    pub q: u64,
    /// `I = Q : m^q`.
    pub socle_ideal: SemigroupIdeal,
    /// Whether `I` is integral over `Q`, i.e. contained in the integral
    /// closure `{ n in H : n >= s }`.
    pub integral_over_q: bool,
    /// Whether `m^q I = m^q Q`.
    pub mq_stable: bool,
    /// `r_Q(I)`, when defined.
    pub reduction_number: Option<u64>,
    /// Whether `G(I)` is Cohen-Macaulay (Valabrega-Valla against `Q`).
    pub cm: Option<bool>,
    /// `Q cap I^{n+1} = Q I^n` for `n = 1, ..., r_Q(I)`.
    pub vv_table: Vec<bool>,
    /// `dim_k(I^{n+1} / Q I^n)` for `n = 0, ..., r_Q(I) - 1`.
    pub lengths: Vec<u64>,
}

/// Full analysis of `I = (t^s) : m^q` over `H`.
pub fn analyze(h: &Arc<NumericalSemigroup>, s: u64, q: u64) -> Result<QuasiSocleReport> {
    let ideal = quasi_socle(h, s, q)?;
    let d = socle_dynamics(s, &ideal)?;
    let integral = ideal.min_generator() >= s;
    let mq_stable = mq_stability(h, s, q)?;
    debug_assert_eq!(d.reduction_number.is_some(), integral);
    debug_assert!(integral || !mq_stable);
    Ok(QuasiSocleReport {
        semigroup: Arc::clone(h),
        s,
        q,
        cm: d.reduction_number.map(|_| d.vv.iter().all(|&b| b)),
        socle_ideal: ideal,
        integral_over_q: integral,
        mq_stable,
        reduction_number: d.reduction_number,
        vv_table: d.vv,
        lengths: d.lengths,
    })
}

#[derive(Serialize, Deserialize)]
struct ReportWire {
    semigroup: Vec<u64>,
    s: u64,
    q: u64,
    socle_generators: Vec<u64>,
    integral_over_q: bool,
    mq_stable: bool,
    reduction_number: Option<u64>,
    cm: Option<bool>,
    vv_table: Vec<bool>,
    lengths: Vec<u64>,
}

impl Serialize for QuasiSocleReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        ReportWire {
            semigroup: self.semigroup.generators().to_vec(),
            s: self.s,
            q: self.q,
            socle_generators: self.socle_ideal.generators().to_vec(),
            integral_over_q: self.integral_over_q,
            mq_stable: self.mq_stable,
            reduction_number: self.reduction_number,
            cm: self.cm,
            vv_table: self.vv_table.clone(),
            lengths: self.lengths.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for QuasiSocleReport {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let wire = ReportWire::deserialize(deserializer)?;
        let h = Arc::new(NumericalSemigroup::new(&wire.semigroup).map_err(D::Error::custom)?);
        let ideal =
            SemigroupIdeal::from_generators(&h, &wire.socle_generators).map_err(D::Error::custom)?;
        Ok(QuasiSocleReport {
            semigroup: h,
            s: wire.s,
            q: wire.q,
            socle_ideal: ideal,
            integral_over_q: wire.integral_over_q,
            mq_stable: wire.mq_stable,
            reduction_number: wire.reduction_number,
            cm: wire.cm,
            vv_table: wire.vv_table,
            lengths: wire.lengths,
        })
    }
}

/// The Euclidean data attached to `s` in `H = <a, a+1>`: `s = a*ell + r`
/// with `0 <= r < a`, which lies in `H` iff `r <= ell`. `p` and `k` are the
/// derived offsets used by the closed-form generator and reduction-number
/// formulas.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct AA1Decomposition {
    /// Multiplicity (`H = <a, a+1>`).
    pub a: u64,
    /// Socle degree.
    pub q: u64,
    /// Reduction exponent.
    pub s: u64,
    /// Quotient `s div a`.
    pub ell: u64,
    /// Remainder `s mod a`.
    pub r: u64,
    /// `(a - 1) - (q - ell)`; may be negative outside the standing region.
    pub p: i64,
    /// `ell - r`.
    pub k: u64,
}

/// Decomposes `s` relative to `H = <a, a+1>` and socle degree `q`.
///
/// Fails with [`Error::NotInSemigroup`] when `s` is not a member (remainder
/// exceeding quotient) and with [`Error::HypothesisNotMet`] when `a < 2` or
/// `q`/`s` is zero.
pub fn decompose(a: u64, q: u64, s: u64) -> Result<AA1Decomposition> {
    if a < 2 {
        return Err(Error::HypothesisNotMet("decomposition needs multiplicity a >= 2"));
    }
    if q == 0 || s == 0 {
        return Err(Error::HypothesisNotMet("decomposition needs positive q and s"));
    }
    let ell = s / a;
    let r = s % a;
    if r > ell {
        return Err(Error::NotInSemigroup(s));
    }
    Ok(AA1Decomposition {
        a,
        q,
        s,
        ell,
        r,
        p: (a as i64 - 1) + ell as i64 - q as i64,
        k: ell - r,
    })
}

/// The closed-form minimal generators of `I = (t^s) : m^q` over
/// `H = <a, a+1>` in the region `q < a`, `s < a q`:
/// `I = Q + m^{p+1} + (t^{a p + i} : p - ell + r < i <= p)` with
/// `p = (a-1) - (q - ell)`.
///
/// Requires `s` in `H`, `0 < s < a q`, and `1 <= q < a`
/// ([`Error::HypothesisNotMet`] otherwise).
pub fn predicted_socle_gens(a: u64, q: u64, s: u64) -> Result<SemigroupIdeal> {
    let d = decompose(a, q, s)?;
    if q >= a || s >= a * q {
        return Err(Error::HypothesisNotMet(
            "closed-form socle generators need q < a and s < a q",
        ));
    }
    let h = Arc::new(NumericalSemigroup::new(&[a, a + 1])?);
    // here 1 <= ell < q <= a - 1, so p lands in [ell, a - 2]
    let p = d.p as u64;
    let mut gens = vec![s];
    gens.extend_from_slice(max_ideal_power(&h, p + 1).generators());
    for i in (p - d.ell + d.r + 1)..=p {
        gens.push(a * p + i);
    }
    SemigroupIdeal::from_generators(&h, &gens)
}

/// The closed-form reduction number `r_Q(I) = ceil((a-1) / (ell+1))` for
/// `H = <a, a+1>`, `q = a - 1`, `s = (a+1) * ell` (so `r = ell`), valid for
/// `1 <= ell <= a - 2`.
pub fn predicted_reduction_number(a: u64, ell: u64) -> u64 {
    debug_assert!(ell >= 1 && ell + 1 < a);
    (a + ell - 1) / (ell + 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arc(gens: &[u64]) -> Arc<NumericalSemigroup> {
        Arc::new(NumericalSemigroup::new(gens).unwrap())
    }

    #[test]
    fn quasi_socle_examples() {
        let h = arc(&[7, 10, 18, 22]);
        assert_eq!(quasi_socle(&h, 21, 3).unwrap().generators(), &[21, 25, 29, 34, 37, 40]);
        assert_eq!(quasi_socle(&h, 7, 3).unwrap().generators(), &[7, 18, 20, 22]);
        let h = arc(&[5, 6]);
        assert_eq!(quasi_socle(&h, 10, 4).unwrap().generators(), &[10, 11, 12]);
        assert_eq!(quasi_socle(&h, 10, 0).unwrap().generators(), &[10]);
        assert!(matches!(quasi_socle(&h, 13, 2), Err(Error::NotInSemigroup(13))));
    }

    #[test]
    fn socle_of_principal_is_closure_here() {
        // for <5,6>, s = 10, q = 4 the quasi-socle fills the whole closure
        let h = arc(&[5, 6]);
        let i = quasi_socle(&h, 10, 4).unwrap();
        let qbar = principal_integral_closure(&h, 10).unwrap();
        assert!(i.equals(&qbar).unwrap());
    }

    #[test]
    fn gorenstein_socle_formula_q1() {
        // symmetric H, q = 1: I = (t^s, t^{s + frobenius})
        for gens in [vec![5u64, 6], vec![10, 13, 16, 17, 19], vec![7, 10, 18, 22]] {
            let h = arc(&gens);
            let f = h.frobenius() as u64;
            let c = h.conductor();
            for s in (1..=3 * c).filter(|&s| h.contains_u(s)) {
                let i = quasi_socle(&h, s, 1).unwrap();
                let expect = SemigroupIdeal::from_generators(&h, &[s, s + f]).unwrap();
                assert!(i.equals(&expect).unwrap(), "{h} s={s}");
            }
        }
    }

    #[test]
    fn conditions() {
        let h = arc(&[5, 6]);
        let cc = condition_check(&h, 4);
        assert!(cc.c1 && cc.c2);
        assert_eq!((cc.c1_witness, cc.c2_witness), (None, None));
        let cc = condition_check(&h, 5);
        assert!(!cc.c1);
        assert!(cc.c2);
        let h2 = arc(&[7, 10, 18, 22]);
        let cc = condition_check(&h2, 3);
        assert!(cc.c1);
        assert!(!cc.c2);
        assert_eq!(cc.c2_witness, Some(18)); // 18 in H, t^18 not in m^2, yet 18 >= 14
        // q = 1: (C2) is vacuous, (C1) just needs the conductor tail in m
        let cc = condition_check(&h2, 1);
        assert!(cc.c1 && cc.c2);
        let cc = condition_check(&h2, 0);
        assert!(cc.c1 && cc.c2);
        // on N = <1> even q = 1 fails (C1): t^0 is outside m
        let n = arc(&[1]);
        let cc = condition_check(&n, 1);
        assert!(!cc.c1);
        assert_eq!(cc.c1_witness, Some(0));
    }

    #[test]
    fn stability() {
        let h1 = arc(&[10, 13, 16, 17, 19]);
        for s in [10, 13, 16, 17, 19] {
            assert!(mq_stability(&h1, s, 3).unwrap(), "s = {s}");
        }
        let h2 = arc(&[7, 10, 18, 22]);
        assert!(mq_stability(&h2, 7, 3).unwrap());
        assert!(!mq_stability(&h2, 21, 3).unwrap());
    }

    #[test]
    fn reduction_numbers() {
        let h = arc(&[10, 13, 16, 17, 19]);
        for (s, r) in [(10, 3), (13, 3), (16, 5), (17, 2), (19, 2)] {
            let i = quasi_socle(&h, s, 3).unwrap();
            assert_eq!(reduction_number(s, &i).unwrap(), Some(r), "s = {s}");
        }
        // <9,10>, q = 8, s = 30 = (9+1)*3: closed form gives ceil(8/4) = 2
        let h = arc(&[9, 10]);
        let i = quasi_socle(&h, 30, 8).unwrap();
        assert_eq!(reduction_number(30, &i).unwrap(), Some(2));
        assert_eq!(predicted_reduction_number(9, 3), 2);
    }

    #[test]
    fn non_integral_socle() {
        // <5,6>, q = 5: aq > conductor, I contains exponents below s
        let h = arc(&[5, 6]);
        let i = quasi_socle(&h, 10, 5).unwrap();
        assert!(i.min_generator() < 10);
        assert_eq!(reduction_number(10, &i).unwrap(), None);
        assert_eq!(graded_cm_check(10, &i).unwrap(), (None, vec![]));
        let report = analyze(&h, 10, 5).unwrap();
        assert!(!report.integral_over_q);
        assert!(!report.mq_stable);
        assert_eq!(report.reduction_number, None);
        assert_eq!(report.cm, None);
        assert!(report.vv_table.is_empty());
        assert!(report.lengths.is_empty());
    }

    #[test]
    fn containment_is_required() {
        let h = arc(&[5, 6]);
        let i = SemigroupIdeal::from_generators(&h, &[12]).unwrap();
        assert!(matches!(reduction_number(10, &i), Err(Error::NotContainingQ)));
        assert!(matches!(graded_cm_check(10, &i), Err(Error::NotContainingQ)));
    }

    #[test]
    fn analyze_showcase_rows() {
        let h = arc(&[10, 13, 16, 17, 19]);
        let rep = analyze(&h, 16, 3).unwrap();
        assert_eq!(rep.socle_ideal.generators(), &[16, 19, 23, 30, 34, 37]);
        assert_eq!(rep.reduction_number, Some(5));
        assert_eq!(rep.cm, Some(false));
        assert_eq!(rep.vv_table, vec![true, true, false, false, true]);
        assert_eq!(rep.lengths, vec![10, 2, 1, 1, 1]);
        assert!(rep.mq_stable);

        let rep = analyze(&h, 13, 3).unwrap();
        assert_eq!(rep.socle_ideal.generators(), &[13, 16, 19, 20, 27, 34]);
        assert_eq!(rep.cm, Some(false));
        assert_eq!(rep.vv_table, vec![true, false, true]);
        assert_eq!(rep.lengths, vec![10, 3, 2]);

        let h2 = arc(&[7, 10, 18, 22]);
        let rep = analyze(&h2, 21, 3).unwrap();
        assert_eq!(rep.socle_ideal.generators(), &[21, 25, 29, 34, 37, 40]);
        assert_eq!(rep.reduction_number, Some(2));
        assert_eq!(rep.cm, Some(true));
        assert!(!rep.mq_stable);
        assert_eq!(rep.lengths, vec![10, 1]);

        let rep = analyze(&h2, 22, 3).unwrap();
        assert_eq!(rep.socle_ideal.generators(), &[22, 30, 35, 38, 41]);
        assert_eq!(rep.reduction_number, Some(1));
        assert_eq!(rep.cm, Some(true));
        assert_eq!(rep.lengths, vec![8]);
    }

    #[test]
    fn report_json_round_trip() {
        let h = arc(&[7, 10, 18, 22]);
        let rep = analyze(&h, 21, 3).unwrap();
        let json = serde_json::to_string(&rep).unwrap();
        assert!(json.contains(r#""socle_generators":[21,25,29,34,37,40]"#));
        assert!(json.contains(r#""reduction_number":2"#));
        let back: QuasiSocleReport = serde_json::from_str(&json).unwrap();
        assert_eq!(serde_json::to_string(&back).unwrap(), json);
        // undefined entries serialize as null and survive the trip
        let h = arc(&[5, 6]);
        let rep = analyze(&h, 10, 5).unwrap();
        let json = serde_json::to_string(&rep).unwrap();
        assert!(json.contains(r#""reduction_number":null"#));
        assert!(json.contains(r#""cm":null"#));
        let back: QuasiSocleReport = serde_json::from_str(&json).unwrap();
        assert_eq!(serde_json::to_string(&back).unwrap(), json);
    }

    #[test]
    fn euclidean_decomposition() {
        let d = decompose(5, 4, 11).unwrap();
        assert_eq!((d.ell, d.r, d.p, d.k), (2, 1, 2, 1));
        let d = decompose(5, 4, 12).unwrap();
        assert_eq!((d.ell, d.r, d.p, d.k), (2, 2, 2, 0));
        assert!(matches!(decompose(5, 4, 13), Err(Error::NotInSemigroup(13))));
        assert!(matches!(decompose(1, 4, 3), Err(Error::HypothesisNotMet(_))));
        assert!(matches!(decompose(5, 0, 10), Err(Error::HypothesisNotMet(_))));
    }

    #[test]
    fn predicted_generators_match() {
        // <5,6>, q = 4, s = 11: p = 2, extras are t^12, so I = (11, 12) + m^3
        let i = predicted_socle_gens(5, 4, 11).unwrap();
        assert_eq!(i.generators(), &[11, 12, 15]);
        let h = arc(&[5, 6]);
        assert!(i.equals(&quasi_socle(&h, 11, 4).unwrap()).unwrap());
        // r = 0: the formula collapses to Q + m^p
        let i = predicted_socle_gens(5, 4, 10).unwrap();
        let q_plus_mp = SemigroupIdeal::principal(&h, 10)
            .unwrap()
            .generators()
            .iter()
            .chain(max_ideal_power(&h, 2).generators())
            .copied()
            .collect::<Vec<_>>();
        let q_plus_mp = SemigroupIdeal::from_generators(&h, &q_plus_mp).unwrap();
        assert!(i.equals(&q_plus_mp).unwrap());
        assert!(i.equals(&quasi_socle(&h, 10, 4).unwrap()).unwrap());
        // outside the region the closed form refuses
        assert!(matches!(predicted_socle_gens(5, 5, 11), Err(Error::HypothesisNotMet(_))));
        assert!(matches!(predicted_socle_gens(5, 4, 20), Err(Error::HypothesisNotMet(_))));
    }

    #[test]
    fn predicted_reduction_values() {
        assert_eq!(predicted_reduction_number(5, 2), 2);
        assert_eq!(predicted_reduction_number(7, 1), 3);
        assert_eq!(predicted_reduction_number(9, 3), 2);
        assert_eq!(predicted_reduction_number(12, 10), 1);
    }
}
