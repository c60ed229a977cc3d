//! The regime pipeline for an arbitrary move set: rich rule, then poor rule,
//! then the critical regime via a verified solution set or the oracle.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::{FamilyKind, FamilySolution};
use crate::game::{CashState, MoveSet, Winner};
use crate::oracle::{Oracle, OracleConfig};
use crate::periodicity::{
    corresponding_state, detect_cash_period, verify_solution_set, CsTriple, DetectOptions,
    PeriodCertificate, SolutionSet,
};
use crate::thresholds::{poor_winner, Region, ThresholdTables};

/// Smallest table used for period detection.
const DETECTION_FLOOR: u64 = 400;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Rule {
    Rich,
    Poor,
    /// Critical position decided by solution-set membership.
    SolutionSet,
    Oracle,
}

impl Rule {
    pub fn describe(self) -> &'static str {
        match self {
            Rule::Rich => "rich regime",
            Rule::Poor => "poor regime",
            Rule::SolutionSet => "critical regime, solution set",
            Rule::Oracle => "oracle",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Decision {
    pub winner: Winner,
    pub region: Region,
    pub rule: Rule,
    pub cs: Option<CsTriple>,
}

enum Critical {
    Family {
        cert: PeriodCertificate,
        solution: FamilySolution,
    },
    Oracle(Oracle),
}

pub struct WinCondition {
    moves: MoveSet,
    tables: ThresholdTables,
    certificate: Option<PeriodCertificate>,
    critical: Critical,
    n_max: u64,
}

impl WinCondition {
    /// Prepares the pipeline for positions with at most `n_max` stones.
    pub fn new(moves: &MoveSet, n_max: u64) -> Result<Self> {
        Self::with_config(moves, n_max, OracleConfig::default())
    }

    pub fn with_config(moves: &MoveSet, n_max: u64, config: OracleConfig) -> Result<Self> {
        let table_n = n_max.max(DETECTION_FLOOR);
        let tables = ThresholdTables::build(moves, table_n);
        let opts = DetectOptions {
            n_check: table_n,
            ..Default::default()
        };
        let certificate = detect_cash_period(moves, &tables, opts)?;
        let family = FamilyKind::from_moves(moves)
            .map(FamilySolution::new)
            .transpose()?;

        let critical = match (&certificate, family) {
            (Some(cert), Some(solution)) if family_applies(cert, &solution) => Critical::Family {
                cert: cert.clone(),
                solution,
            },
            _ => Critical::Oracle(Oracle::with_config(moves, n_max, config)?),
        };
        Ok(WinCondition {
            moves: moves.clone(),
            tables,
            certificate,
            critical,
            n_max,
        })
    }

    pub fn moves(&self) -> &MoveSet {
        &self.moves
    }

    pub fn tables(&self) -> &ThresholdTables {
        &self.tables
    }

    pub fn certificate(&self) -> Option<&PeriodCertificate> {
        self.certificate.as_ref()
    }

    /// True when critical positions are decided without the oracle.
    pub fn uses_solution_set(&self) -> bool {
        matches!(self.critical, Critical::Family { .. })
    }

    pub fn decide(&self, state: &CashState) -> Result<Decision> {
        let (n, d, e) = state.clamped();
        if n > self.n_max {
            return Err(Error::ResourceLimit {
                n,
                bound: self.n_max,
            });
        }
        let region = self.tables.classify(n, d, e)?;
        let (winner, rule) = match region {
            Region::RichI | Region::RichII | Region::RichBoth => {
                (self.tables.rich_winner(n, d, e)?, Rule::Rich)
            }
            Region::PoorI | Region::PoorII | Region::PoorBoth => {
                (poor_winner(self.tables.min_move(), n, d, e)?, Rule::Poor)
            }
            Region::Critical => match &self.critical {
                Critical::Family { cert, solution } => {
                    let t = corresponding_state(cert, &self.tables, n, d, e)?;
                    let w = Winner::from_mover_wins(solution.solution_set().contains(&t));
                    return Ok(Decision {
                        winner: w,
                        region,
                        rule: Rule::SolutionSet,
                        cs: Some(t),
                    });
                }
                Critical::Oracle(oracle) => (oracle.winner(n, d, e)?, Rule::Oracle),
            },
        };
        let cs = match &self.certificate {
            Some(cert) if region == Region::Critical => {
                Some(corresponding_state(cert, &self.tables, n, d, e)?)
            }
            _ => None,
        };
        Ok(Decision {
            winner,
            region,
            rule,
            cs,
        })
    }
}

/// The family's closed-form data must agree with what was detected, and its
/// solution set must pass the closure check.
fn family_applies(cert: &PeriodCertificate, solution: &FamilySolution) -> bool {
    let closed = solution.certificate();
    cert.period == closed.period
        && cert.standard == closed.standard
        && cert.mover_costs == closed.mover_costs
        && cert.opponent_costs == closed.opponent_costs
        && verify_solution_set(cert, &solution.solution_set(), 10 * solution.kind.large()).passed()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_sets_skip_the_oracle() {
        let a = MoveSet::new([1i64, 4]).unwrap();
        let wc = WinCondition::new(&a, 40).unwrap();
        assert!(wc.uses_solution_set());
        let d = wc.decide(&CashState::new(13, 8, 7)).unwrap();
        assert_eq!(d.winner, Winner::Mover);
        assert_eq!(d.rule, Rule::SolutionSet);
        assert_eq!(d.cs, Some(CsTriple::new(3, 1, 0)));
    }

    #[test]
    fn other_sets_fall_back() {
        let a = MoveSet::new([3i64, 5, 6, 10, 11]).unwrap();
        let wc = WinCondition::new(&a, 20).unwrap();
        assert!(!wc.uses_solution_set());
        let oracle = Oracle::new(&a, 20).unwrap();
        for (d, e) in [(9, 9), (4, 7), (12, 3)] {
            let got = wc.decide(&CashState::new(20, d, e)).unwrap();
            assert_eq!(got.winner, oracle.winner(20, d, e).unwrap());
        }
        assert!(wc.decide(&CashState::new(21, 0, 0)).is_err());
    }
}
