//! Move sets, budgets and the mover-perspective state of NIM with cash.
//!
//! A state `(n; d, e)` always describes the position from the point of view
//! of the player about to move: `n` stones on the board, `d` dollars for the
//! mover and `e` dollars for the opponent. Removing `a` stones costs the
//! mover `a` dollars and hands the turn over, so the successor is
//! `(n - a; e, d - a)`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// A validated, strictly increasing set of removal amounts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct MoveSet {
    values: Vec<u64>,
}

impl MoveSet {
    /// Validates and sorts `values`. Duplicates are rejected, not merged.
    pub fn new<I>(values: I) -> Result<Self>
    where
        I: IntoIterator,
        I::Item: Into<i64>,
    {
        let mut raw: Vec<i64> = values.into_iter().map(Into::into).collect();
        if raw.is_empty() {
            return Err(Error::EmptySet);
        }
        if let Some(&bad) = raw.iter().find(|&&v| v <= 0) {
            return Err(Error::NonPositiveValue(bad));
        }
        raw.sort_unstable();
        if let Some(w) = raw.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateValue(w[0]));
        }
        Ok(MoveSet {
            values: raw.into_iter().map(|v| v as u64).collect(),
        })
    }

    /// The interval `{low, low + 1, ..., high}`.
    pub fn interval(low: u64, high: u64) -> Result<Self> {
        if low == 0 || low > high {
            return Err(Error::BadParams(format!("interval {low}..={high}")));
        }
        Ok(MoveSet {
            values: (low..=high).collect(),
        })
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    /// Smallest removal amount.
    pub fn min(&self) -> u64 {
        self.values[0]
    }

    /// Largest removal amount.
    pub fn max(&self) -> u64 {
        *self.values.last().expect("move set is nonempty")
    }

    pub fn contains(&self, a: u64) -> bool {
        self.values.binary_search(&a).is_ok()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Position of `a` in the sorted value list.
    pub fn index_of(&self, a: u64) -> Option<usize> {
        self.values.binary_search(&a).ok()
    }

    /// All `a` with `a <= n` and `a <= d`, ascending.
    pub fn legal_moves(&self, state: &CashState) -> Vec<u64> {
        let cap = state.mover_cap();
        self.values
            .iter()
            .copied()
            .take_while(|&a| a <= cap)
            .collect()
    }

    /// The mover loses on the spot: too few stones or too little money for
    /// even the smallest removal.
    pub fn is_terminal_loss(&self, state: &CashState) -> bool {
        state.mover_cap() < self.min()
    }

    /// Plays `a` from `state`, swapping roles.
    pub fn apply_move(&self, state: &CashState, a: u64) -> Result<CashState> {
        if !self.contains(a) || a > state.mover_cap() {
            return Err(Error::IllegalMove {
                amount: a,
                state: state.to_string(),
            });
        }
        Ok(CashState {
            stones: state.stones - a,
            mover: state.opponent,
            opponent: state.mover.spend(a),
        })
    }
}

impl fmt::Display for MoveSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// A player's budget.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Funds {
    Finite(u64),
    Unlimited,
}

impl Funds {
    /// Clamps to `n`. Nobody can spend more than the stones on the board,
    /// so any budget of at least `n` behaves like unlimited funds.
    pub fn clamp(self, n: u64) -> u64 {
        match self {
            Funds::Finite(x) => x.min(n),
            Funds::Unlimited => n,
        }
    }

    fn spend(self, a: u64) -> Funds {
        match self {
            Funds::Finite(x) => Funds::Finite(x - a),
            Funds::Unlimited => Funds::Unlimited,
        }
    }

    fn cap(self) -> u64 {
        match self {
            Funds::Finite(x) => x,
            Funds::Unlimited => u64::MAX,
        }
    }
}

impl From<u64> for Funds {
    fn from(x: u64) -> Self {
        Funds::Finite(x)
    }
}

impl fmt::Display for Funds {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Funds::Finite(x) => write!(f, "{x}"),
            Funds::Unlimited => write!(f, "UF"),
        }
    }
}

impl std::str::FromStr for Funds {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("uf") {
            return Ok(Funds::Unlimited);
        }
        s.parse::<u64>().map(Funds::Finite).map_err(|_| {
            Error::BadParams(format!(
                "funds must be a non-negative integer or UF, got {s:?}"
            ))
        })
    }
}

/// `(n; d, e)` seen from the player to move.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct CashState {
    pub stones: u64,
    pub mover: Funds,
    pub opponent: Funds,
}

impl CashState {
    pub fn new(stones: u64, mover: impl Into<Funds>, opponent: impl Into<Funds>) -> Self {
        CashState {
            stones,
            mover: mover.into(),
            opponent: opponent.into(),
        }
    }

    /// `(n; n, n)` form with both budgets clamped to the stone count.
    pub fn clamped(&self) -> (u64, u64, u64) {
        let n = self.stones;
        (n, self.mover.clamp(n), self.opponent.clamp(n))
    }

    fn mover_cap(&self) -> u64 {
        self.stones.min(self.mover.cap())
    }
}

impl fmt::Display for CashState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({};{},{})", self.stones, self.mover, self.opponent)
    }
}

/// Outcome relative to the state it was computed for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Winner {
    Mover,
    Opponent,
}

impl Winner {
    pub fn from_mover_wins(wins: bool) -> Self {
        if wins {
            Winner::Mover
        } else {
            Winner::Opponent
        }
    }

    pub fn mover_wins(self) -> bool {
        self == Winner::Mover
    }

    /// Rendered label when the mover is Player I.
    pub fn player(self) -> Player {
        match self {
            Winner::Mover => Player::I,
            Winner::Opponent => Player::II,
        }
    }
}

/// Root-level player label. Player I moves first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Player {
    I,
    II,
}

impl Player {
    pub fn other(self) -> Player {
        match self {
            Player::I => Player::II,
            Player::II => Player::I,
        }
    }
}

impl fmt::Display for Player {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Player::I => write!(f, "Player I"),
            Player::II => write!(f, "Player II"),
        }
    }
}

impl std::str::FromStr for Player {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "I" | "i" | "1" => Ok(Player::I),
            "II" | "ii" | "2" => Ok(Player::II),
            other => Err(Error::BadParams(format!(
                "player must be I or II, got {other:?}"
            ))),
        }
    }
}
