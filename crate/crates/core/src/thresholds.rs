//! Rich-side and poor-side cash thresholds, and the regime they induce.
//!
//! `mover(n)` is the least budget with which the player to move wins
//! normally from `n` stones when the standard game is theirs; for the other
//! `n` it is completed so that the two-sided rich rule below holds.
//! `opponent(n)` is the same for the player not on move. Once a player has
//! reached their threshold the outcome is fixed:
//!
//! * mover rich, opponent not: mover wins;
//! * opponent rich, mover not: opponent wins;
//! * both rich: standard NIM decides.
//!
//! The poor thresholds have a closed form over `n mod 2*a1`. When one side
//! is below its poor threshold both players just remove `a1` each turn and
//! whoever runs dry first loses.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::game::{MoveSet, Winner};
use crate::oracle::standard_winners;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThresholdTables {
    min_move: u64,
    standard: Vec<Winner>,
    mover: Vec<u64>,
    opponent: Vec<u64>,
    mover_witness: Vec<Option<u64>>,
}

impl ThresholdTables {
    pub fn build(moves: &MoveSet, n_max: u64) -> Self {
        let size = n_max as usize + 1;
        let standard = standard_winners(moves, n_max);
        let mut mover = vec![0u64; size];
        let mut opponent = vec![0u64; size];
        let mut mover_witness = vec![None; size];
        let a1 = moves.min();

        for n in a1..=n_max {
            let at = |v: &[u64], a: u64| v[(n - a) as usize];
            let legal = || moves.values().iter().copied().take_while(move |&a| a <= n);
            let richest_reply = legal()
                .map(|a| at(&mover, a))
                .max()
                .expect("n >= a1 so a1 is legal");
            let i = n as usize;
            opponent[i] = richest_reply;

            // Smallest cost over the admissible moves; ties keep the smallest move.
            let cheapest = |admissible: &dyn Fn(u64) -> bool| {
                legal()
                    .filter(|&a| admissible(a))
                    .map(|a| (at(&opponent, a) + a, a))
                    .min()
                    .expect("admissible move set is nonempty")
            };
            let (cost, witness) = match standard[i] {
                Winner::Mover => cheapest(&|a| standard[(n - a) as usize] == Winner::Opponent),
                Winner::Opponent => cheapest(&|a| at(&mover, a) == richest_reply),
            };
            mover[i] = cost;
            mover_witness[i] = Some(witness);
        }

        ThresholdTables {
            min_move: a1,
            standard,
            mover,
            opponent,
            mover_witness,
        }
    }

    pub fn n_max(&self) -> u64 {
        self.mover.len() as u64 - 1
    }

    pub fn min_move(&self) -> u64 {
        self.min_move
    }

    fn check(&self, n: u64) -> Result<usize> {
        if n > self.n_max() {
            return Err(Error::out_of_range(format!("n = {n}"), self.n_max()));
        }
        Ok(n as usize)
    }

    /// Rich threshold of the player to move.
    pub fn mover(&self, n: u64) -> Result<u64> {
        Ok(self.mover[self.check(n)?])
    }

    /// Rich threshold of the player not on move.
    pub fn opponent(&self, n: u64) -> Result<u64> {
        Ok(self.opponent[self.check(n)?])
    }

    pub fn standard(&self, n: u64) -> Result<Winner> {
        Ok(self.standard[self.check(n)?])
    }

    pub fn standard_winners(&self) -> &[Winner] {
        &self.standard
    }

    /// Smallest move attaining `mover(n)`; `None` below `a1`.
    pub fn mover_witness(&self, n: u64) -> Result<Option<u64>> {
        Ok(self.mover_witness[self.check(n)?])
    }

    /// Which regime `(n; d, e)` falls in. Budgets are clamped to `n`; rich
    /// tests take precedence over poor ones.
    pub fn classify(&self, n: u64, d: u64, e: u64) -> Result<Region> {
        let i = self.check(n)?;
        let (d, e) = (d.min(n), e.min(n));
        let (f_mover, f_opp) = (self.mover[i], self.opponent[i]);
        let g = poor_thresholds(self.min_move, n);
        Ok(classify_with(d, e, (f_mover, f_opp), (g.mover, g.opponent)))
    }

    /// Winner of a position where at least one player is rich.
    pub fn rich_winner(&self, n: u64, d: u64, e: u64) -> Result<Winner> {
        match self.classify(n, d, e)? {
            Region::RichI => Ok(Winner::Mover),
            Region::RichII => Ok(Winner::Opponent),
            Region::RichBoth => self.standard(n),
            other => Err(Error::WrongRegion(other)),
        }
    }
}

/// Regime for already-clamped budgets, given `(f_mover, f_opponent)` and
/// `(g_mover, g_opponent)`.
pub(crate) fn classify_with(d: u64, e: u64, f: (u64, u64), g: (u64, u64)) -> Region {
    let (mover_rich, opp_rich) = (d >= f.0, e >= f.1);
    match (mover_rich, opp_rich) {
        (true, false) => return Region::RichI,
        (false, true) => return Region::RichII,
        (true, true) => return Region::RichBoth,
        (false, false) => {}
    }
    let (mover_poor, opp_poor) = (d < g.0, e < g.1);
    match (mover_poor, opp_poor) {
        (false, true) => Region::PoorI,
        (true, false) => Region::PoorII,
        (true, true) => Region::PoorBoth,
        (false, false) => Region::Critical,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PoorThresholds {
    pub mover: u64,
    pub opponent: u64,
}

/// Closed-form poor thresholds. Depends on the move set only through `a1`.
pub fn poor_thresholds(min_move: u64, n: u64) -> PoorThresholds {
    let a1 = min_move;
    let i = n % (2 * a1);
    let half = (n - i) / 2;
    PoorThresholds {
        mover: half + (i + 1).min(a1),
        opponent: half + (i + 1).saturating_sub(a1),
    }
}

/// Winner when at least one player is poor and neither is rich.
pub fn poor_winner(min_move: u64, n: u64, d: u64, e: u64) -> Result<Winner> {
    let g = poor_thresholds(min_move, n);
    match (d < g.mover, e < g.opponent) {
        (false, true) => Ok(Winner::Mover),
        (true, false) => Ok(Winner::Opponent),
        (true, true) => Ok(Winner::from_mover_wins(d / min_move > e / min_move)),
        (false, false) => Err(Error::WrongRegion(Region::Critical)),
    }
}

/// The seven regimes. `RichI`/`PoorI` are decided for the mover, `RichII`/
/// `PoorII` for the opponent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Region {
    /// Mover rich, opponent not.
    RichI,
    /// Opponent rich, mover not.
    RichII,
    RichBoth,
    /// Opponent poor, mover not.
    PoorI,
    /// Mover poor, opponent not.
    PoorII,
    PoorBoth,
    Critical,
}

impl Region {
    pub fn is_rich(self) -> bool {
        matches!(self, Region::RichI | Region::RichII | Region::RichBoth)
    }

    pub fn is_poor(self) -> bool {
        matches!(self, Region::PoorI | Region::PoorII | Region::PoorBoth)
    }

    pub fn label(self) -> &'static str {
        match self {
            Region::RichI => "RICH_I",
            Region::RichII => "RICH_II",
            Region::RichBoth => "RICH_BOTH",
            Region::PoorI => "POOR_I",
            Region::PoorII => "POOR_II",
            Region::PoorBoth => "POOR_BOTH",
            Region::Critical => "CRITICAL",
        }
    }
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tables(v: &[i64], n_max: u64) -> ThresholdTables {
        ThresholdTables::build(&MoveSet::new(v.iter().copied()).unwrap(), n_max)
    }

    #[test]
    fn one_four_values() {
        let t = tables(&[1, 4], 20);
        assert_eq!(t.mover(13).unwrap(), 10);
        assert_eq!(t.opponent(13).unwrap(), 8);
        assert_eq!(t.opponent(9).unwrap(), 6);
        assert_eq!(t.mover(5).unwrap(), 3);
        assert_eq!(t.opponent(5).unwrap(), 4);
        assert_eq!(t.mover(0).unwrap(), 0);
        assert_eq!(t.opponent(0).unwrap(), 0);
    }

    #[test]
    fn base_range_is_zero() {
        let t = tables(&[3, 5, 6, 10, 11], 30);
        for n in 0..3 {
            assert_eq!(t.opponent(n).unwrap(), 0);
            assert_eq!(t.mover(n).unwrap(), 0);
            assert_eq!(t.mover_witness(n).unwrap(), None);
        }
    }

    #[test]
    fn worked_example_thresholds() {
        let t = tables(&[1, 3, 4], 20);
        assert_eq!(t.standard(14).unwrap(), Winner::Opponent);
        assert_eq!(t.mover(14).unwrap(), 10);
        assert_eq!(t.opponent(14).unwrap(), 10);
    }

    #[test]
    fn poor_closed_form() {
        assert_eq!(
            poor_thresholds(1, 10),
            PoorThresholds {
                mover: 6,
                opponent: 5
            }
        );
        assert_eq!(
            poor_thresholds(3, 7),
            PoorThresholds {
                mover: 5,
                opponent: 3
            }
        );
        for a1 in 1..6 {
            assert_eq!(
                poor_thresholds(a1, 0),
                PoorThresholds {
                    mover: 1,
                    opponent: 0
                }
            );
        }
        assert_eq!(
            poor_thresholds(1, 13),
            PoorThresholds {
                mover: 7,
                opponent: 7
            }
        );
    }

    #[test]
    fn classification_examples() {
        let t = tables(&[1, 4], 20);
        assert_eq!(t.classify(13, 12, 2).unwrap(), Region::RichI);
        assert_eq!(t.classify(13, 8, 7).unwrap(), Region::Critical);
        // fII(5) = 4 <= 9, so the rich test fires before the poor one.
        assert_eq!(t.classify(5, 0, 9).unwrap(), Region::RichII);
        assert_eq!(t.classify(9, 3, 2).unwrap(), Region::PoorBoth);
        assert!(matches!(
            t.classify(21, 0, 0),
            Err(Error::OutOfRange { .. })
        ));
    }

    #[test]
    fn rich_rule() {
        let t = tables(&[1, 3, 4], 20);
        // (14; UF, 10): both rich, standard NIM says II.
        assert_eq!(t.classify(14, 14, 10).unwrap(), Region::RichBoth);
        assert_eq!(t.rich_winner(14, 14, 10).unwrap(), Winner::Opponent);
        let t = tables(&[1, 4], 20);
        assert_eq!(t.rich_winner(13, 12, 2).unwrap(), Winner::Mover);
        assert_eq!(t.rich_winner(10, 20, 20).unwrap(), Winner::Opponent);
        assert_eq!(
            t.rich_winner(13, 8, 7).unwrap_err(),
            Error::WrongRegion(Region::Critical)
        );
    }

    #[test]
    fn poor_rule() {
        assert_eq!(poor_winner(1, 14, 4, 4).unwrap(), Winner::Opponent);
        assert_eq!(poor_winner(3, 20, 2, 9).unwrap(), Winner::Opponent);
        assert_eq!(poor_winner(1, 9, 3, 2).unwrap(), Winner::Mover);
        assert!(matches!(
            poor_winner(1, 13, 8, 7),
            Err(Error::WrongRegion(_))
        ));
    }
}
