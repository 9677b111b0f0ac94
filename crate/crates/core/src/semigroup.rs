//! Numerical semigroups: submonoids of (N, +) with finite complement.

use crate::{Error, Result};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::str::FromStr;

/// A numerical semigroup `H = <a_1, ..., a_l>` with gcd 1, stored by its
/// canonical minimal generating set, its Frobenius number, and a membership
/// table over `[0, conductor)`.
///
/// Everything at or past the conductor is a member, so the table decides
/// membership for all integers. The degenerate case `H = N = <1>` has
/// Frobenius number -1 and conductor 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NumericalSemigroup {
    generators: Vec<u64>,
    frobenius: i64,
    conductor: u64,
    membership: Vec<bool>,
}

/// The classical invariants, bundled for reporting.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemigroupInvariants {
    /// Minimal generators in increasing order.
    pub generators: Vec<u64>,
    /// Smallest nonzero member.
    pub multiplicity: u64,
    /// Largest integer not in `H` (-1 for `H = N`).
    pub frobenius: i64,
    /// `frobenius + 1`.
    pub conductor: u64,
    /// The positive integers outside `H`, in increasing order.
    pub gaps: Vec<u64>,
    /// Number of gaps.
    pub genus: u64,
    /// Whether `H` is symmetric, i.e. `k[[H]]` is Gorenstein.
    pub symmetric: bool,
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Least member of `H` in each residue class mod `m`, by Bellman-Ford style
/// relaxation: start from 0 and repeatedly add generators, keeping the
/// smallest value seen per class. Values only ever decrease and all classes
/// are reachable (gcd 1), so this terminates with the Apéry set of `m`.
fn apery_by_relaxation(generators: &[u64], m: u64) -> Vec<u64> {
    let classes = m as usize;
    let mut least = vec![u64::MAX; classes];
    least[0] = 0;
    let mut changed = true;
    while changed {
        changed = false;
        for r in 0..classes {
            let base = least[r];
            if base == u64::MAX {
                continue;
            }
            for &g in generators {
                let cand = base + g;
                let cls = (cand % m) as usize;
                if cand < least[cls] {
                    least[cls] = cand;
                    changed = true;
                }
            }
        }
    }
    debug_assert!(least.iter().all(|&w| w != u64::MAX));
    least
}

impl NumericalSemigroup {
    /// Builds the semigroup generated by `generators`.
    ///
    /// Zeros are ignored, duplicates collapse, and the stored generating set
    /// is minimalized silently. Fails with [`Error::EmptyGenerators`] when no
    /// generators are given at all and with [`Error::NotCofinite`] when the
    /// positive generators do not have gcd 1 (this includes an all-zero
    /// input, reported as gcd 0).
    pub fn new(generators: &[u64]) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        let mut gens: Vec<u64> = generators.iter().copied().filter(|&g| g > 0).collect();
        gens.sort_unstable();
        gens.dedup();
        let d = gens.iter().fold(0, |acc, &g| gcd(acc, g));
        if d != 1 {
            return Err(Error::NotCofinite(d));
        }

        let mult = gens[0];
        let apery = apery_by_relaxation(&gens, mult);
        let frobenius = *apery.iter().max().expect("nonempty") as i64 - mult as i64;
        let conductor = (frobenius + 1) as u64;

        let mut membership = vec![false; conductor as usize];
        if conductor > 0 {
            membership[0] = true;
            for n in 1..conductor as usize {
                membership[n] = gens
                    .iter()
                    .take_while(|&&g| g as usize <= n)
                    .any(|&g| membership[n - g as usize]);
            }
        }

        let mut h = NumericalSemigroup {
            generators: gens,
            frobenius,
            conductor,
            membership,
        };
        // A generator is redundant iff it is a sum of two nonzero members,
        // equivalently iff subtracting some smaller generator lands in H.
        let minimal: Vec<u64> = h
            .generators
            .iter()
            .copied()
            .filter(|&g| {
                !h.generators
                    .iter()
                    .take_while(|&&p| p < g)
                    .any(|&p| h.contains((g - p) as i64))
            })
            .collect();
        h.generators = minimal;
        Ok(h)
    }

    /// Minimal generators, increasing.
    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    /// Smallest nonzero member.
    pub fn multiplicity(&self) -> u64 {
        self.generators[0]
    }

    /// Largest integer outside `H`; -1 when `H = N`.
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    /// First integer from which everything is a member.
    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Membership test for arbitrary integers.
    pub fn contains(&self, n: i64) -> bool {
        if n < 0 {
            return false;
        }
        let n = n as u64;
        n >= self.conductor || self.membership[n as usize]
    }

    /// Membership for nonnegative exponents (the common case internally).
    pub(crate) fn contains_u(&self, n: u64) -> bool {
        n >= self.conductor || self.membership[n as usize]
    }

    /// The Apéry set of `m` in `H`: for each residue class mod `m` the least
    /// member of `H` in that class, indexed by `0..m`.
    ///
    /// `m` must be a nonzero member of `H`.
    pub fn apery_set(&self, m: u64) -> Result<Vec<u64>> {
        if m == 0 || !self.contains_u(m) {
            return Err(Error::InvalidAperyBase(m));
        }
        Ok(apery_by_relaxation(&self.generators, m))
    }

    /// Positive integers outside `H`, increasing. All gaps are < conductor.
    pub fn gaps(&self) -> Vec<u64> {
        (1..self.conductor)
            .filter(|&n| !self.membership[n as usize])
            .collect()
    }

    /// Number of gaps.
    pub fn genus(&self) -> u64 {
        self.gaps().len() as u64
    }

    /// `H` is symmetric iff for every integer `0 <= n <= frobenius` exactly
    /// one of `n`, `frobenius - n` is a member. Equivalently `k[[H]]` is
    /// Gorenstein. `H = N` is vacuously symmetric.
    pub fn is_symmetric(&self) -> bool {
        (0..=self.frobenius).all(|n| self.contains(n) != self.contains(self.frobenius - n))
    }

    /// Decides the reflection property of the window `{0, ..., alpha}`: does
    /// `n` lie in `H` exactly when `alpha - n` does not, for every `n` in the
    /// window? When this holds (and multiplicity >= 3, `alpha >= mult - 1`),
    /// `alpha` is forced to be the Frobenius number and `H` symmetric; the
    /// checker for that statement sweeps this function.
    pub fn reflection_window_is_symmetric(&self, alpha: i64) -> Result<bool> {
        if self.multiplicity() < 3 || alpha < self.multiplicity() as i64 - 1 {
            return Err(Error::HypothesisNotMet(
                "reflection window needs multiplicity >= 3 and alpha >= multiplicity - 1",
            ));
        }
        Ok((0..=alpha).all(|n| self.contains(n) != self.contains(alpha - n)))
    }

    /// All invariants at once.
    pub fn invariants(&self) -> SemigroupInvariants {
        let gaps = self.gaps();
        SemigroupInvariants {
            generators: self.generators.clone(),
            multiplicity: self.multiplicity(),
            frobenius: self.frobenius,
            conductor: self.conductor,
            genus: gaps.len() as u64,
            gaps,
            symmetric: self.is_symmetric(),
        }
    }
}

impl fmt::Display for NumericalSemigroup {
    /// Canonical text form `<a_1,a_2,...,a_l>`, no spaces.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ">")
    }
}

impl FromStr for NumericalSemigroup {
    type Err = Error;

    /// Parses `<a_1,...,a_l>`; the angle brackets may be omitted.
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim();
        let body = body
            .strip_prefix('<')
            .and_then(|rest| rest.strip_suffix('>'))
            .unwrap_or(body);
        if body.trim().is_empty() {
            return Err(Error::EmptyGenerators);
        }
        let gens = body
            .split(',')
            .map(|tok| tok.trim().parse::<u64>())
            .collect::<std::result::Result<Vec<u64>, _>>()
            .map_err(|_| Error::Unparseable(s.to_string()))?;
        NumericalSemigroup::new(&gens)
    }
}

#[derive(Serialize, Deserialize)]
struct SemigroupWire {
    generators: Vec<u64>,
    frobenius: i64,
    conductor: u64,
    symmetric: bool,
}

impl Serialize for NumericalSemigroup {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        SemigroupWire {
            generators: self.generators.clone(),
            frobenius: self.frobenius,
            conductor: self.conductor,
            symmetric: self.is_symmetric(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for NumericalSemigroup {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let wire = SemigroupWire::deserialize(deserializer)?;
        let h = NumericalSemigroup::new(&wire.generators).map_err(D::Error::custom)?;
        if wire.frobenius != h.frobenius
            || wire.conductor != h.conductor
            || wire.symmetric != h.is_symmetric()
        {
            return Err(D::Error::custom("semigroup invariants do not match generators"));
        }
        Ok(h)
    }
}
