//! A dense-bitset re-implementation of the ideal operations.
//!
//! Membership is recomputed here from the raw generators by sieving, and the
//! operations are pointwise/sumset logic on bitmaps — no Apéry sets, no
//! tail-window arguments, no canonical generators. Agreement between this
//! and the generator-based engine over a sufficiently large window is the
//! crate's primary correctness cross-check.

use crate::ideal::SemigroupIdeal;
use crate::semigroup::NumericalSemigroup;
use crate::{Error, Result};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use std::sync::Arc;

/// The binary operations subject to cross-checking.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdealOp {
    /// `I * J`.
    Product,
    /// `I : J`.
    Colon,
    /// `I` intersected with `J`.
    Intersect,
    /// Equality of exponent sets.
    Equal,
}

impl IdealOp {
    /// All four operations, for sweeping.
    pub const ALL: [IdealOp; 4] = [
        IdealOp::Product,
        IdealOp::Colon,
        IdealOp::Intersect,
        IdealOp::Equal,
    ];

    fn name(self) -> &'static str {
        match self {
            IdealOp::Product => "product",
            IdealOp::Colon => "colon",
            IdealOp::Intersect => "intersect",
            IdealOp::Equal => "equal",
        }
    }
}

/// Semigroup membership over `[0, bound)` by direct sieving.
fn sieve(generators: &[u64], bound: u64) -> Vec<bool> {
    let mut bits = vec![false; bound as usize];
    if bound > 0 {
        bits[0] = true;
    }
    for n in 1..bound as usize {
        bits[n] = generators
            .iter()
            .any(|&g| g > 0 && g as usize <= n && bits[n - g as usize]);
    }
    bits
}

/// An ideal as an explicit membership bitmap over `[0, bound)`.
///
/// `tail_from` marks the point from which every exponent is certainly a
/// member. For bitmaps built from an ideal it is at most `bound`; for the
/// results of the dense operations it can exceed `bound`, in which case
/// membership between `bound` and `tail_from` is simply not recorded.
#[derive(Debug, Clone)]
pub struct DenseIdeal {
    bound: u64,
    bits: Vec<bool>,
    tail_from: u64,
}

fn needed_bound(ideal: &SemigroupIdeal) -> u64 {
    let h = ideal.ambient();
    ideal.min_generator() + h.conductor() + h.multiplicity()
}

impl DenseIdeal {
    /// Expands `ideal` over `[0, bound)`. The bound must be at least
    /// `min generator + conductor + multiplicity`, so that the window
    /// reaches the all-members tail ([`Error::InsufficientBound`]).
    pub fn from_ideal(ideal: &SemigroupIdeal, bound: u64) -> Result<Self> {
        let needed = needed_bound(ideal);
        if bound < needed {
            return Err(Error::InsufficientBound { bound, needed });
        }
        let h_bits = sieve(ideal.ambient().generators(), bound);
        Ok(Self::expand(ideal, bound, &h_bits))
    }

    /// Bitmap of `ideal` over `[0, bound)` against a pre-sieved ambient.
    fn expand(ideal: &SemigroupIdeal, bound: u64, h_bits: &[bool]) -> Self {
        let bits = (0..bound as usize)
            .map(|n| {
                ideal
                    .generators()
                    .iter()
                    .any(|&g| g as usize <= n && h_bits[n - g as usize])
            })
            .collect();
        DenseIdeal {
            bound,
            bits,
            tail_from: ideal.min_generator() + ideal.ambient().conductor(),
        }
    }

    /// Window size.
    pub fn bound(&self) -> u64 {
        self.bound
    }

    /// Start of the all-members tail.
    pub fn tail_from(&self) -> u64 {
        self.tail_from
    }

    /// Membership inside the window.
    pub fn contains(&self, n: u64) -> bool {
        assert!(n < self.bound, "exponent outside the dense window");
        self.bits[n as usize]
    }

    /// Dense sumset.
    fn product(&self, other: &Self) -> Self {
        let bound = self.bound.min(other.bound);
        let mut bits = vec![false; bound as usize];
        for i in 0..bound as usize {
            if !self.bits[i] {
                continue;
            }
            for j in 0..bound as usize - i {
                if other.bits[j] {
                    bits[i + j] = true;
                }
            }
        }
        DenseIdeal {
            bound,
            bits,
            tail_from: self.tail_from + other.tail_from,
        }
    }

    /// Dense colon `self : other`; `n` qualifies when it lies in `H` and
    /// `n + j` lies in `self` for every member `j` of `other`. Members `j`
    /// pushing `n + j` past the window land in `self`'s tail (`tail_from <=
    /// bound` for expanded ideals), so the test is exact.
    fn colon(&self, other: &Self, h_bits: &[bool]) -> Self {
        let bound = self.bound.min(other.bound);
        let bits = (0..bound as usize)
            .map(|n| {
                h_bits[n]
                    && (0..bound as usize).all(|j| {
                        !other.bits[j]
                            || n + j >= self.tail_from as usize
                            || *self.bits.get(n + j).unwrap_or(&true)
                    })
            })
            .collect();
        DenseIdeal {
            bound,
            bits,
            tail_from: self.tail_from,
        }
    }

    /// Pointwise intersection.
    fn intersect(&self, other: &Self) -> Self {
        let bound = self.bound.min(other.bound);
        let bits = (0..bound as usize)
            .map(|n| self.bits[n] && other.bits[n])
            .collect();
        DenseIdeal {
            bound,
            bits,
            tail_from: self.tail_from.max(other.tail_from),
        }
    }
}

/// Runs one generator-vs-dense comparison.
///
/// The engine computes `op` on canonical generators; the oracle recomputes
/// it densely over `[0, bound)`; the two membership windows are compared
/// exponent by exponent (for [`IdealOp::Equal`], the two verdicts are
/// compared). A `None` bound defaults to
/// `max(min generator + conductor) + multiplicity + 1` over the operands;
/// an explicit bound below what either operand needs is rejected with
/// [`Error::InsufficientBound`].
pub fn oracle_compare(
    lhs: &SemigroupIdeal,
    rhs: &SemigroupIdeal,
    op: IdealOp,
    bound: Option<u64>,
) -> Result<bool> {
    let h = lhs.ambient();
    let needed = needed_bound(lhs).max(needed_bound(rhs));
    let bound = match bound {
        Some(b) if b < needed => return Err(Error::InsufficientBound { bound: b, needed }),
        Some(b) => b,
        None => needed + 1,
    };
    let h_bits = sieve(h.generators(), bound);
    let dl = DenseIdeal::expand(lhs, bound, &h_bits);
    let dr = DenseIdeal::expand(rhs, bound, &h_bits);
    let dense = match op {
        IdealOp::Product => dl.product(&dr),
        IdealOp::Colon => dl.colon(&dr, &h_bits),
        IdealOp::Intersect => dl.intersect(&dr),
        IdealOp::Equal => return Ok(lhs.equals(rhs)? == (dl.bits == dr.bits)),
    };
    let engine = match op {
        IdealOp::Product => lhs.product(rhs)?,
        IdealOp::Colon => lhs.colon(rhs)?,
        IdealOp::Intersect => lhs.intersect(rhs)?,
        IdealOp::Equal => unreachable!(),
    };
    Ok(DenseIdeal::expand(&engine, bound, &h_bits).bits == dense.bits)
}

/// Result of a batch of randomized oracle comparisons.
#[derive(Debug, Clone, serde::Serialize)]
pub struct OracleTrialSummary {
    /// Seed the batch ran with.
    pub seed: u64,
    /// Number of comparisons.
    pub trials: u64,
    /// How many disagreed.
    pub disagreements: u64,
    /// One line per disagreeing trial: semigroup, operands, operation.
    pub failures: Vec<String>,
}

/// Runs `trials` randomized generator-vs-dense comparisons, deterministic in
/// `seed`: random small semigroup, random ideals over it, random operation.
pub fn random_oracle_trials(seed: u64, trials: u64) -> OracleTrialSummary {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    for _ in 0..trials {
        let h = loop {
            let k = rng.gen_range(2..=4usize);
            let gens: Vec<u64> = (0..k).map(|_| rng.gen_range(2..=28u64)).collect();
            match NumericalSemigroup::new(&gens) {
                Ok(h) if h.conductor() <= 160 => break Arc::new(h),
                _ => continue,
            }
        };
        let pool: Vec<u64> = (0..=h.conductor() + 2 * h.multiplicity())
            .filter(|&n| h.contains(n as i64))
            .collect();
        let pick = |rng: &mut ChaCha8Rng| {
            let k = rng.gen_range(1..=4usize);
            let gens: Vec<u64> = (0..k).map(|_| *pool.choose(rng).expect("pool")).collect();
            SemigroupIdeal::from_generators(&h, &gens).expect("members")
        };
        let lhs = pick(&mut rng);
        let rhs = pick(&mut rng);
        let op = IdealOp::ALL[rng.gen_range(0..4)];
        if !oracle_compare(&lhs, &rhs, op, None).expect("valid comparison") {
            failures.push(format!("{h} {lhs} {} {rhs}", op.name()));
        }
    }
    OracleTrialSummary {
        seed,
        trials,
        disagreements: failures.len() as u64,
        failures,
    }
}
