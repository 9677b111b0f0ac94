//! Mechanical verification: statement checkers with parameter sweeps, an
//! independent dense model to cross-check the ideal arithmetic, reference
//! tables, and the built-in acceptance checks.

pub mod criteria;
pub mod family;
pub mod oracle;
pub mod statements;
pub mod tables;

pub use criteria::{run_all, run_criterion, CriterionReport};
pub use family::{gorenstein_family, mixed_family};
pub use oracle::{oracle_compare, random_oracle_trials, DenseIdeal, IdealOp, OracleTrialSummary};
pub use statements::{
    check_statement, check_statement_bounded, sweep, sweep_all, StatementParams, SweepBounds,
    SweepReport, SweepSummary, VerificationOutcome, STATEMENT_IDS,
};
pub use tables::{
    pattern_markdown, pattern_table, render_markdown, reproduce_tables, table_rows, TableRow,
    TableSet,
};

/// Seed used by default for the randomized oracle trials.
pub const DEFAULT_ORACLE_SEED: u64 = 20260814;
