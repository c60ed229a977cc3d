//! Empirical checks of the interval-set conjectures, `A = {L, ..., M}`.
//!
//! Nothing here is asserted. The report records what the tables show.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::game::{MoveSet, Winner};
use crate::oracle::Oracle;
use crate::periodicity::{CsTriple, SolutionSet};
use crate::thresholds::{Region, ThresholdTables};

const MAX_COUNTEREXAMPLES: usize = 25;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct XCounterexample {
    pub n: u64,
    pub d: u64,
    pub e: u64,
    pub triple: CsTriple,
    pub oracle: Winner,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjectureReport {
    pub low: u64,
    pub high: u64,
    /// Least offset from which both thresholds advance by `high` every
    /// `low + high` stones, if one shows up inside the checked range.
    pub theta: Option<u64>,
    pub theta_bound: u64,
    pub bound_holds: Option<bool>,
    /// `None` when `high < 2 * low`.
    pub special_case_holds: Option<bool>,
    pub critical_checked: u64,
    pub x_mismatches: u64,
    pub x_counterexamples: Vec<XCounterexample>,
    pub n_max: u64,
    pub oracle_n: u64,
}

impl ConjectureReport {
    pub fn x_agrees(&self) -> bool {
        self.x_mismatches == 0
    }
}

impl std::fmt::Display for ConjectureReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let yn = |v: Option<bool>| match v {
            Some(true) => "holds",
            Some(false) => "FAILS",
            None => "n/a",
        };
        writeln!(
            f,
            "A = {{{}..{}}}, thresholds checked to n = {}",
            self.low, self.high, self.n_max
        )?;
        match self.theta {
            Some(t) => writeln!(f, "offset: {t}")?,
            None => writeln!(f, "offset: not found in range")?,
        }
        writeln!(f, "bound {}: {}", self.theta_bound, yn(self.bound_holds))?;
        writeln!(
            f,
            "special case (offset = {} when M >= 2L): {}",
            2 * (self.low + 1),
            yn(self.special_case_holds)
        )?;
        write!(
            f,
            "critical-state rule: {} of {} critical states disagree with the oracle (n <= {})",
            self.x_mismatches, self.critical_checked, self.oracle_n
        )
    }
}

/// The conjectured critical-state rule for `{low, ..., high}`, over
/// `(i, b, b')` with `i = n mod (low + high)`.
pub fn interval_solution_set(low: u64, high: u64) -> impl SolutionSet {
    let (l, p) = (low as i64, (low + high) as i64);
    move |t: &CsTriple| {
        let i = t.residue as i64 % p;
        let (b, bd) = (t.mover_gap, t.opponent_gap);
        let shifted = if i < l {
            bd
        } else if i < 2 * l {
            bd - l
        } else if i < 3 * l {
            bd - 3 * l + i + 1
        } else {
            bd
        };
        b.div_euclid(l) <= shifted.div_euclid(l)
    }
}

pub fn conjecture_check(
    low: u64,
    high: u64,
    n_max: u64,
    oracle_n: u64,
) -> Result<ConjectureReport> {
    if low == 0 || low > high {
        return Err(Error::BadParams(format!(
            "need 1 <= L <= M, got L={low}, M={high}"
        )));
    }
    let period = low + high;
    if n_max < 3 * period {
        return Err(Error::BadParams(format!(
            "n_max = {n_max} covers fewer than three periods of {period}"
        )));
    }
    let moves = MoveSet::interval(low, high)?;
    let tables = ThresholdTables::build(&moves, n_max.max(oracle_n));

    // Scan down from the top for the last n that breaks the progression.
    let advances = |n: u64| {
        let ok = |f: fn(&ThresholdTables, u64) -> Result<u64>| {
            f(&tables, n + period).unwrap() == f(&tables, n).unwrap() + high
        };
        ok(ThresholdTables::mover) && ok(ThresholdTables::opponent)
    };
    let last_bad = (0..=n_max - period).rev().find(|&n| !advances(n));
    let candidate = last_bad.map_or(0, |n| n + 1);
    let theta = (candidate + 2 * period <= n_max).then_some(candidate);

    let theta_bound = 5 * (high - low) * (high - low) + 2;
    let bound_holds = theta.map(|t| t <= theta_bound);
    let special_case_holds = (high >= 2 * low).then(|| theta == Some(2 * (low + 1)));

    let oracle = Oracle::new(&moves, oracle_n)?;
    let x = interval_solution_set(low, high);
    let mut critical_checked = 0;
    let mut x_mismatches = 0;
    let mut x_counterexamples = Vec::new();
    for n in 0..=oracle_n {
        let (f1, f2) = (tables.mover(n)?, tables.opponent(n)?);
        for d in 0..=n {
            for e in 0..=n {
                if tables.classify(n, d, e)? != Region::Critical {
                    continue;
                }
                critical_checked += 1;
                let triple = CsTriple::new(
                    n % period,
                    f1 as i64 - 1 - d as i64,
                    f2 as i64 - 1 - e as i64,
                );
                let truth = oracle.winner(n, d, e)?;
                if Winner::from_mover_wins(x.contains(&triple)) != truth {
                    x_mismatches += 1;
                    if x_counterexamples.len() < MAX_COUNTEREXAMPLES {
                        x_counterexamples.push(XCounterexample {
                            n,
                            d,
                            e,
                            triple,
                            oracle: truth,
                        });
                    }
                }
            }
        }
    }

    Ok(ConjectureReport {
        low,
        high,
        theta,
        theta_bound,
        bound_holds,
        special_case_holds,
        critical_checked,
        x_mismatches,
        x_counterexamples,
        n_max,
        oracle_n,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_two_progression() {
        let r = conjecture_check(1, 2, 200, 30).unwrap();
        let theta = r.theta.unwrap();
        let a = MoveSet::interval(1, 2).unwrap();
        let t = ThresholdTables::build(&a, 200);
        for n in theta..=197 {
            assert_eq!(t.mover(n + 3).unwrap(), t.mover(n).unwrap() + 2);
            assert_eq!(t.opponent(n + 3).unwrap(), t.opponent(n).unwrap() + 2);
        }
    }

    #[test]
    fn degenerate_single_move() {
        let r = conjecture_check(1, 1, 60, 20).unwrap();
        assert!(r.theta.is_some());
        assert_eq!(r.special_case_holds, None);
    }

    #[test]
    fn bad_params() {
        assert!(conjecture_check(3, 2, 100, 10).is_err());
        assert!(conjecture_check(0, 2, 100, 10).is_err());
        assert!(conjecture_check(2, 4, 10, 10).is_err());
    }
}
