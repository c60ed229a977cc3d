//! Exact ground truth by dynamic programming.
//!
//! The cash table stores one bit per `(n, d, e)` with `0 <= d, e <= n`: set
//! when the player to move wins. Budgets above `n` are clamped before lookup.
//! Layers are filled bottom-up in `n`, so there is no recursion.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::game::{CashState, Funds, MoveSet, Player, Winner};

/// Largest stone count a cash table will be built for unless overridden.
pub const DEFAULT_MAX_STONES: u64 = 2048;

#[derive(Debug, Clone, Copy)]
pub struct OracleConfig {
    pub max_stones: u64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            max_stones: DEFAULT_MAX_STONES,
        }
    }
}

/// Winner of standard NIM (no budgets) for every `n <= n_max`.
pub fn standard_winners(moves: &MoveSet, n_max: u64) -> Vec<Winner> {
    let mut out: Vec<Winner> = Vec::with_capacity(n_max as usize + 1);
    for n in 0..=n_max {
        let wins = moves
            .values()
            .iter()
            .take_while(|&&a| a <= n)
            .any(|&a| out[(n - a) as usize] == Winner::Opponent);
        out.push(Winner::from_mover_wins(wins));
    }
    out
}

pub fn solve_standard(moves: &MoveSet, n: u64) -> Winner {
    standard_winners(moves, n)[n as usize]
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolveResult {
    pub winner: Winner,
    /// Every move whose successor is lost for the opponent. Empty iff the
    /// mover loses.
    pub winning_moves: Vec<u64>,
    /// Upper bound on the remaining number of plies.
    pub plies_bound: u64,
}

/// Bit-packed win/loss cube.
#[derive(Debug, Clone)]
pub struct CashTable {
    moves: MoveSet,
    max_stones: u64,
    offsets: Vec<usize>,
    bits: Vec<u64>,
}

impl CashTable {
    pub fn build(moves: &MoveSet, max_stones: u64) -> Self {
        let mut offsets = Vec::with_capacity(max_stones as usize + 2);
        let mut total = 0usize;
        for n in 0..=max_stones as usize {
            offsets.push(total);
            total += (n + 1) * (n + 1);
        }
        offsets.push(total);
        let mut table = CashTable {
            moves: moves.clone(),
            max_stones,
            offsets,
            bits: vec![0; total.div_ceil(64)],
        };
        for n in 0..=max_stones {
            for d in 0..=n {
                for e in 0..=n {
                    if table.recompute(n, d, e) {
                        table.set(n, d, e);
                    }
                }
            }
        }
        table
    }

    pub fn max_stones(&self) -> u64 {
        self.max_stones
    }

    pub fn moves(&self) -> &MoveSet {
        &self.moves
    }

    #[inline]
    fn index(&self, n: u64, d: u64, e: u64) -> usize {
        let side = n as usize + 1;
        self.offsets[n as usize] + d as usize * side + e as usize
    }

    #[inline]
    fn set(&mut self, n: u64, d: u64, e: u64) {
        let i = self.index(n, d, e);
        self.bits[i / 64] |= 1 << (i % 64);
    }

    /// Lookup with `d, e <= n` already enforced by the caller.
    #[inline]
    fn get(&self, n: u64, d: u64, e: u64) -> bool {
        let i = self.index(n, d, e);
        self.bits[i / 64] >> (i % 64) & 1 == 1
    }

    /// Does the mover win `(n; d, e)`? Budgets are clamped to `n`.
    #[inline]
    pub fn mover_wins(&self, n: u64, d: u64, e: u64) -> bool {
        assert!(
            n <= self.max_stones,
            "{n} stones beyond table bound {}",
            self.max_stones
        );
        self.get(n, d.min(n), e.min(n))
    }

    /// Re-derives one entry from its successors.
    #[inline]
    fn recompute(&self, n: u64, d: u64, e: u64) -> bool {
        let cap = n.min(d);
        self.moves
            .values()
            .iter()
            .take_while(|&&a| a <= cap)
            .any(|&a| {
                let m = n - a;
                !self.get(m, e.min(m), (d - a).min(m))
            })
    }

    /// Entries that disagree with the recursion. Empty for a sound table.
    pub fn audit_recursion(&self) -> Vec<(u64, u64, u64)> {
        let mut bad = Vec::new();
        for n in 0..=self.max_stones {
            for d in 0..=n {
                for e in 0..=n {
                    if self.recompute(n, d, e) != self.get(n, d, e) {
                        bad.push((n, d, e));
                    }
                }
            }
        }
        bad
    }

    /// Positions where one more dollar changes the result the "wrong" way:
    /// a mover win lost by giving the mover more money, or an opponent win
    /// lost by giving the opponent more money.
    pub fn audit_monotonicity(&self) -> Vec<MonotonicityViolation> {
        let mut bad = Vec::new();
        for n in 0..=self.max_stones {
            for d in 0..=n {
                for e in 0..=n {
                    let here = self.get(n, d, e);
                    if here && d < n && !self.get(n, d + 1, e) {
                        bad.push(MonotonicityViolation::MoverFunds { n, d, e });
                    }
                    if !here && e < n && self.get(n, d, e + 1) {
                        bad.push(MonotonicityViolation::OpponentFunds { n, d, e });
                    }
                }
            }
        }
        bad
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum MonotonicityViolation {
    MoverFunds { n: u64, d: u64, e: u64 },
    OpponentFunds { n: u64, d: u64, e: u64 },
}

/// Exact solver for one move set up to a fixed number of stones.
#[derive(Debug, Clone)]
pub struct Oracle {
    table: CashTable,
    standard: Vec<Winner>,
}

impl Oracle {
    pub fn new(moves: &MoveSet, max_stones: u64) -> Result<Self> {
        Self::with_config(moves, max_stones, OracleConfig::default())
    }

    pub fn with_config(moves: &MoveSet, max_stones: u64, config: OracleConfig) -> Result<Self> {
        if max_stones > config.max_stones {
            return Err(Error::ResourceLimit {
                n: max_stones,
                bound: config.max_stones,
            });
        }
        Ok(Oracle {
            table: CashTable::build(moves, max_stones),
            standard: standard_winners(moves, max_stones),
        })
    }

    pub fn moves(&self) -> &MoveSet {
        self.table.moves()
    }

    pub fn max_stones(&self) -> u64 {
        self.table.max_stones()
    }

    pub fn table(&self) -> &CashTable {
        &self.table
    }

    fn check(&self, n: u64) -> Result<()> {
        if n > self.max_stones() {
            return Err(Error::ResourceLimit {
                n,
                bound: self.max_stones(),
            });
        }
        Ok(())
    }

    /// Winner of `(n; d, e)` with plain integer budgets.
    pub fn winner(&self, n: u64, d: u64, e: u64) -> Result<Winner> {
        self.check(n)?;
        Ok(Winner::from_mover_wins(self.table.mover_wins(n, d, e)))
    }

    pub fn solve_cash(&self, state: &CashState) -> Result<SolveResult> {
        self.check(state.stones)?;
        let (n, d, e) = state.clamped();
        let winning_moves: Vec<u64> = self
            .moves()
            .legal_moves(state)
            .into_iter()
            .filter(|&a| !self.table.mover_wins(n - a, e, d - a))
            .collect();
        Ok(SolveResult {
            winner: Winner::from_mover_wins(!winning_moves.is_empty()),
            winning_moves,
            plies_bound: n.div_ceil(self.moves().min()),
        })
    }

    pub fn solve_standard(&self, n: u64) -> Result<Winner> {
        self.check(n)?;
        Ok(self.standard[n as usize])
    }

    /// Standard-NIM winners for `0..=max_stones`.
    pub fn standard(&self) -> &[Winner] {
        &self.standard
    }

    /// Mover wins with `d` dollars against an opponent with unlimited funds.
    pub fn wins_normally(&self, n: u64, d: Funds) -> Result<bool> {
        self.check(n)?;
        Ok(self.table.mover_wins(n, d.clamp(n), n))
    }

    /// Smallest winning move, if the mover wins.
    pub fn best_move(&self, state: &CashState) -> Result<Option<u64>> {
        Ok(self.solve_cash(state)?.winning_moves.first().copied())
    }

    /// Least `d` with which the mover beats an unlimited opponent, if any.
    pub fn least_winning_funds(&self, n: u64) -> Result<Option<u64>> {
        self.check(n)?;
        Ok((0..=n).find(|&d| self.table.mover_wins(n, d, n)))
    }
}

/// Does `who` win when forced to remove the smallest amount on every turn,
/// while the other player may answer with any legal move? The constrained
/// player loses as soon as that smallest removal is unaffordable or there
/// are too few stones for it.
pub fn wins_miserly(moves: &MoveSet, state: &CashState, who: Player) -> bool {
    let (n, d, e) = state.clamped();
    let mut memo = HashMap::new();
    miserly(moves, n, d, e, who == Player::I, &mut memo)
}

fn miserly(
    moves: &MoveSet,
    n: u64,
    d: u64,
    e: u64,
    constrained_to_move: bool,
    memo: &mut HashMap<(u64, u64, u64, bool), bool>,
) -> bool {
    let (d, e) = (d.min(n), e.min(n));
    let key = (n, d, e, constrained_to_move);
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let a1 = moves.min();
    let result = if constrained_to_move {
        a1 <= n && a1 <= d && miserly(moves, n - a1, e, d - a1, false, memo)
    } else {
        let cap = n.min(d);
        moves
            .values()
            .iter()
            .take_while(|&&a| a <= cap)
            .all(|&a| miserly(moves, n - a, e, d - a, true, memo))
    };
    memo.insert(key, result);
    result
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[i64]) -> MoveSet {
        MoveSet::new(v.iter().copied()).unwrap()
    }

    #[test]
    fn worked_example_positions() {
        let a = set(&[1, 3, 4]);
        let o = Oracle::new(&a, 20).unwrap();
        let w = |n, d, e| o.winner(n, d, e).unwrap();
        assert_eq!(w(14, 4, 4), Winner::Opponent);
        assert_eq!(w(14, 9, 9), Winner::Mover);
        assert_eq!(w(10, 7, 7), Winner::Mover);
        assert_eq!(w(0, 5, 5), Winner::Opponent);
        let uf = CashState {
            stones: 14,
            mover: Funds::Unlimited,
            opponent: Funds::Finite(10),
        };
        assert_eq!(o.solve_cash(&uf).unwrap().winner, Winner::Opponent);
    }

    #[test]
    fn solve_result_fields() {
        let a = set(&[1, 3, 4]);
        let o = Oracle::new(&a, 20).unwrap();
        let r = o.solve_cash(&CashState::new(14, 9, 9)).unwrap();
        assert_eq!(r.winner, Winner::Mover);
        assert_eq!(r.winning_moves.first(), Some(&1));
        assert_eq!(r.plies_bound, 14);
        let r = o.solve_cash(&CashState::new(14, 4, 4)).unwrap();
        assert!(r.winning_moves.is_empty());
        assert_eq!(o.best_move(&CashState::new(14, 4, 4)).unwrap(), None);
        assert_eq!(o.best_move(&CashState::new(14, 9, 9)).unwrap(), Some(1));
    }

    #[test]
    fn best_move_prefers_smallest() {
        // Both 1 and 4 win from (4;4,0): 1 leaves a broke opponent, 4 empties the pile.
        let o = Oracle::new(&set(&[1, 4]), 8).unwrap();
        let r = o.solve_cash(&CashState::new(4, 4, 0)).unwrap();
        assert_eq!(r.winning_moves, vec![1, 4]);
        assert_eq!(o.best_move(&CashState::new(4, 4, 0)).unwrap(), Some(1));
    }

    #[test]
    fn standard_patterns() {
        let a = set(&[1, 3, 4]);
        assert_eq!(solve_standard(&a, 14), Winner::Opponent);
        let b = set(&[1, 4]);
        assert_eq!(solve_standard(&b, 7), Winner::Opponent);
        assert_eq!(solve_standard(&b, 0), Winner::Opponent);
        let o = Oracle::new(&b, 30).unwrap();
        for n in 0..=30 {
            let uf = CashState {
                stones: n,
                mover: Funds::Unlimited,
                opponent: Funds::Unlimited,
            };
            assert_eq!(
                o.solve_standard(n).unwrap(),
                o.solve_cash(&uf).unwrap().winner
            );
        }
    }

    #[test]
    fn normal_wins() {
        let a = set(&[1, 3, 4]);
        let o = Oracle::new(&a, 20).unwrap();
        assert!(o.wins_normally(10, Funds::Finite(7)).unwrap());
        for d in 0..=20 {
            assert!(!o.wins_normally(14, Funds::Finite(d)).unwrap());
        }
        let b = Oracle::new(&set(&[1, 4]), 20).unwrap();
        assert!(!b.wins_normally(13, Funds::Finite(9)).unwrap());
        assert!(b.wins_normally(13, Funds::Finite(10)).unwrap());
    }

    #[test]
    fn miserly_wins() {
        let a = set(&[1, 3, 4]);
        assert!(wins_miserly(&a, &CashState::new(14, 4, 4), Player::II));
        assert!(wins_miserly(&a, &CashState::new(9, 8, 5), Player::I));
        assert!(!wins_miserly(&a, &CashState::new(0, 5, 5), Player::I));
    }

    #[test]
    fn resource_limit() {
        let a = set(&[1, 2]);
        let cfg = OracleConfig { max_stones: 10 };
        assert_eq!(
            Oracle::with_config(&a, 11, cfg).unwrap_err(),
            Error::ResourceLimit { n: 11, bound: 10 }
        );
        let o = Oracle::with_config(&a, 10, cfg).unwrap();
        assert!(matches!(
            o.winner(11, 0, 0),
            Err(Error::ResourceLimit { .. })
        ));
    }

    #[test]
    fn small_table_is_sound() {
        let o = Oracle::new(&set(&[2, 3, 7]), 40).unwrap();
        assert!(o.table().audit_recursion().is_empty());
    }
}
