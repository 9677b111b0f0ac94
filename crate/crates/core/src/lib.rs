//! Exact arithmetic for numerical semigroup rings `k[[H]]` and their
//! monomial ideals, specialized to quasi-socle ideals `I = (t^s) : m^q`.
//!
//! The crate computes with a numerical semigroup `H = <a_1, ..., a_l>`
//! (gcd 1) through its Apéry set and a finite membership table, represents
//! monomial ideals of `k[[H]]` by canonical minimal generator exponents, and
//! answers the classical questions about `I = Q : m^q` for `Q = (t^s)`:
//! integrality over `Q`, the reduction number `r_Q(I)`, and whether the
//! associated graded ring `G(I)` is Cohen-Macaulay (Valabrega–Valla).
//!
//! The [`verify`] module carries an independent dense-bitset oracle, a
//! checker for each supported closed-form statement, and pinned reference
//! tables for two showcase semigroups.

pub mod ideal;
pub mod semigroup;
pub mod socle;
pub mod verify;

pub use ideal::SemigroupIdeal;
pub use semigroup::{NumericalSemigroup, SemigroupInvariants};
pub use socle::{AA1Decomposition, ConditionCheck, QuasiSocleReport};
pub use verify::{IdealOp, StatementParams, SweepBounds, VerificationOutcome};

use thiserror::Error;

/// Everything that can go wrong short of an internal invariant violation
/// (those panic).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The generator list was empty.
    #[error("generator list is empty")]
    EmptyGenerators,
    /// The generators have a common divisor > 1 (or no positive entry), so
    /// the complement of the semigroup is infinite.
    #[error("generators have gcd {0}; the complement is not finite")]
    NotCofinite(u64),
    /// Apéry sets are defined per residue class modulo a nonzero member.
    #[error("{0} is not a valid Apery base (zero or not in the semigroup)")]
    InvalidAperyBase(u64),
    /// A stated hypothesis of the requested operation does not hold.
    #[error("hypothesis not met: {0}")]
    HypothesisNotMet(&'static str),
    /// An exponent that must lie in the semigroup does not.
    #[error("{0} is not an element of the semigroup")]
    NotInSemigroup(u64),
    /// The zero ideal has no generator representation here.
    #[error("the zero ideal is not supported")]
    ZeroIdealUnsupported,
    /// Binary ideal operations need both sides over the same semigroup.
    #[error("ideals live over different semigroups")]
    AmbientMismatch,
    /// `length_quotient(I, J)` needs `J` contained in `I`.
    #[error("right-hand ideal is not contained in the left-hand ideal")]
    NotASubideal,
    /// `reduction_number`/`graded_cm_check` need `(t^s)` contained in `I`.
    #[error("ideal does not contain the reference principal ideal")]
    NotContainingQ,
    /// The dense oracle window is too small to be conclusive.
    #[error("oracle bound {bound} is below the required {needed}")]
    InsufficientBound {
        /// The bound that was supplied.
        bound: u64,
        /// The smallest bound that makes the comparison exact.
        needed: u64,
    },
    /// `check_statement` was handed an identifier it does not know.
    #[error("unknown statement id `{0}`")]
    UnknownStatement(String),
    /// A textual form could not be parsed.
    #[error("cannot parse `{0}` as a generator list")]
    Unparseable(String),
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
