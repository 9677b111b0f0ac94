//! Monomial ideals of `k[[H]]`, represented by exponent sets.
//!
//! A nonzero monomial ideal corresponds to a set `E = U (g + H)` of
//! exponents; we store the canonical minimal generators of `E`. All the
//! operations below reduce to finite scans because every exponent set
//! eventually agrees with `min(E) + H`: if `n >= min gens + conductor +
//! multiplicity` lies in `E`, so does `n - multiplicity`, hence `n` is never
//! a minimal generator and scans may stop there.

use crate::semigroup::NumericalSemigroup;
use crate::{Error, Result};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::sync::Arc;

/// A nonzero monomial ideal of `k[[H]]`, canonically minimally generated.
///
/// Generators are exponents in `H`, strictly increasing, and none differs
/// from a smaller one by an element of `H`. Two ideals are equal exactly
/// when their ambient semigroups and generator lists are equal; use
/// [`SemigroupIdeal::equals`] rather than `==` to get an
/// [`Error::AmbientMismatch`] instead of a silent `false` on mixed ambients.
#[derive(Debug, Clone)]
pub struct SemigroupIdeal {
    ambient: Arc<NumericalSemigroup>,
    generators: Vec<u64>,
}

/// Keeps the exponents of `exps` (sorted, deduped) that are minimal: `g`
/// stays iff no smaller listed `g'` has `g - g'` in `H`. Checking against
/// kept exponents only is enough, since a redundant exponent decomposes
/// through some minimal one.
fn minimalize(h: &NumericalSemigroup, mut exps: Vec<u64>) -> Vec<u64> {
    exps.sort_unstable();
    exps.dedup();
    let mut kept: Vec<u64> = Vec::new();
    for g in exps {
        if !kept.iter().any(|&p| h.contains_u(g - p)) {
            kept.push(g);
        }
    }
    kept
}

impl SemigroupIdeal {
    /// Builds the ideal generated by `t^g` for `g` in `exponents`.
    ///
    /// Every exponent must lie in `H` ([`Error::NotInSemigroup`]); an empty
    /// list would be the zero ideal ([`Error::ZeroIdealUnsupported`]). The
    /// generator list is minimalized, so `[0]` (or any list containing 0)
    /// yields the unit ideal.
    pub fn from_generators(ambient: &Arc<NumericalSemigroup>, exponents: &[u64]) -> Result<Self> {
        if exponents.is_empty() {
            return Err(Error::ZeroIdealUnsupported);
        }
        for &g in exponents {
            if !ambient.contains_u(g) {
                return Err(Error::NotInSemigroup(g));
            }
        }
        Ok(SemigroupIdeal {
            ambient: Arc::clone(ambient),
            generators: minimalize(ambient, exponents.to_vec()),
        })
    }

    /// The unit ideal `A = k[[H]]` itself (exponent set `H`).
    pub fn unit(ambient: &Arc<NumericalSemigroup>) -> Self {
        SemigroupIdeal {
            ambient: Arc::clone(ambient),
            generators: vec![0],
        }
    }

    /// The principal ideal `(t^s)`.
    pub fn principal(ambient: &Arc<NumericalSemigroup>, s: u64) -> Result<Self> {
        Self::from_generators(ambient, &[s])
    }

    /// Ambient semigroup.
    pub fn ambient(&self) -> &Arc<NumericalSemigroup> {
        &self.ambient
    }

    /// Canonical minimal generator exponents, increasing.
    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    /// Smallest exponent in the ideal.
    pub fn min_generator(&self) -> u64 {
        self.generators[0]
    }

    fn check_ambient(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.ambient, &other.ambient) || self.ambient == other.ambient {
            Ok(())
        } else {
            Err(Error::AmbientMismatch)
        }
    }

    /// Exponent-set membership: `n` is in the ideal iff `n - g` lies in `H`
    /// for some generator `g`.
    pub fn contains(&self, n: u64) -> bool {
        self.generators
            .iter()
            .take_while(|&&g| g <= n)
            .any(|&g| self.ambient.contains_u(n - g))
    }

    /// Every exponent past `min_generator + conductor` is in the ideal.
    fn tail_start(&self) -> u64 {
        self.min_generator() + self.ambient.conductor()
    }

    /// The product ideal `I * J` (exponent sumset).
    pub fn product(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        let mut sums = Vec::with_capacity(self.generators.len() * other.generators.len());
        for &g in &self.generators {
            for &h in &other.generators {
                sums.push(g + h);
            }
        }
        Ok(SemigroupIdeal {
            ambient: Arc::clone(&self.ambient),
            generators: minimalize(&self.ambient, sums),
        })
    }

    /// `I^n`, with `I^0` the unit ideal.
    pub fn power(&self, n: u64) -> Self {
        let mut acc = Self::unit(&self.ambient);
        for _ in 0..n {
            acc = acc.product(self).expect("same ambient");
        }
        acc
    }

    /// The colon ideal `I : J = { n in H : n + E(J) subset of E(I) }`.
    ///
    /// Membership only has to be tested against the generators of `J`, and
    /// the scan window `[0, min gens(I) + conductor + multiplicity)` catches
    /// every minimal generator: any colon member at or past the end maps
    /// into the colon again under `- multiplicity`.
    pub fn colon(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        let h = &self.ambient;
        let hi = self.min_generator() + h.conductor() + h.multiplicity();
        let members: Vec<u64> = (0..hi)
            .filter(|&n| {
                h.contains_u(n) && other.generators.iter().all(|&g| self.contains(n + g))
            })
            .collect();
        debug_assert!((hi..hi + 2 * h.multiplicity())
            .all(|n| other.generators.iter().all(|&g| self.contains(n + g))));
        Ok(SemigroupIdeal {
            ambient: Arc::clone(h),
            generators: minimalize(h, members),
        })
    }

    /// The intersection of the two exponent sets, scanned over
    /// `[0, max(min gens) + conductor + multiplicity)` (same tail argument).
    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        let h = &self.ambient;
        let hi = self.min_generator().max(other.min_generator()) + h.conductor() + h.multiplicity();
        let members: Vec<u64> = (0..hi)
            .filter(|&n| self.contains(n) && other.contains(n))
            .collect();
        debug_assert!((hi..hi + 2 * h.multiplicity())
            .all(|n| self.contains(n) && other.contains(n)));
        Ok(SemigroupIdeal {
            ambient: Arc::clone(h),
            generators: minimalize(h, members),
        })
    }

    /// Equality of exponent sets; canonical generators make this a list
    /// comparison.
    pub fn equals(&self, other: &Self) -> Result<bool> {
        self.check_ambient(other)?;
        Ok(self.generators == other.generators)
    }

    /// `dim_k(I/J)` for `J` a subideal of `I`: the number of exponents in
    /// `E(I) \ E(J)`. All of them are below `min gens(J) + conductor`,
    /// since past that point `E(J)` contains everything `E(I)` does.
    pub fn length_quotient(&self, other: &Self) -> Result<u64> {
        self.check_ambient(other)?;
        if !other.generators.iter().all(|&g| self.contains(g)) {
            return Err(Error::NotASubideal);
        }
        let hi = other.tail_start();
        Ok((0..hi).filter(|&n| self.contains(n) && !other.contains(n)).count() as u64)
    }
}

/// The integral closure of `(t^s)` in `k[[H]]`: the ideal of all members of
/// `H` that are `>= s` (valuation at least `s`). `s` must lie in `H`.
pub fn principal_integral_closure(
    ambient: &Arc<NumericalSemigroup>,
    s: u64,
) -> Result<SemigroupIdeal> {
    if !ambient.contains_u(s) {
        return Err(Error::NotInSemigroup(s));
    }
    let members: Vec<u64> = (s..=s + ambient.conductor())
        .filter(|&n| ambient.contains_u(n))
        .collect();
    Ok(SemigroupIdeal {
        ambient: Arc::clone(ambient),
        generators: minimalize(ambient, members),
    })
}

impl fmt::Display for SemigroupIdeal {
    /// Generator tuple `(g_1,g_2,...,g_k)`, no spaces.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

#[derive(Serialize, Deserialize)]
struct IdealWire {
    semigroup: Vec<u64>,
    generators: Vec<u64>,
}

impl Serialize for SemigroupIdeal {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        IdealWire {
            semigroup: self.ambient.generators().to_vec(),
            generators: self.generators.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SemigroupIdeal {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let wire = IdealWire::deserialize(deserializer)?;
        let h = NumericalSemigroup::new(&wire.semigroup).map_err(D::Error::custom)?;
        SemigroupIdeal::from_generators(&Arc::new(h), &wire.generators).map_err(D::Error::custom)
    }
}
