//! One-pile NIM where every removal costs its size in dollars.
//!
//! The [`oracle`] solves positions exactly by dynamic programming. The
//! [`thresholds`] and [`periodicity`] modules compute the rich, poor and
//! critical regimes and the data needed to decide critical positions without
//! search. [`families`] has closed forms for three infinite move-set families,
//! and [`decide`] stitches everything into a single decision procedure.

pub mod decide;
pub mod error;
pub mod families;
pub mod game;
pub mod oracle;
pub mod periodicity;
pub mod thresholds;

pub use decide::{Decision, Rule, WinCondition};
pub use error::{Error, Result};
pub use families::{family_win, FamilyKind, FamilySolution};
pub use game::{CashState, Funds, MoveSet, Player, Winner};
pub use oracle::{Oracle, SolveResult};
pub use periodicity::{CsTriple, PeriodCertificate, SolutionSet};
pub use thresholds::{Region, ThresholdTables};
