//! Closed forms for the solved move-set families.
//!
//! * `{1, L}` with `L` even, period `L + 1`;
//! * `{1, L, L+1}` with `L` odd, period `2L + 1`;
//! * `{1, L, L+1}` with `L` even, period `2L`.
//!
//! Everything here is arithmetic on `n mod period`, so [`family_win`] decides
//! positions with astronomically many stones without building any table.

mod appendix;
mod conjecture;

pub use appendix::{
    appendix_check, appendix_check_against, AppendixMismatch, AppendixReport, AppendixTable, Side,
    APPENDIX_TABLE,
};
pub use conjecture::{conjecture_check, interval_solution_set, ConjectureReport, XCounterexample};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::game::{MoveSet, Winner};
use crate::periodicity::{CsTriple, PeriodCertificate, SolutionSet};
use crate::thresholds::{classify_with, poor_thresholds, poor_winner, Region};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum FamilyKind {
    /// `{1, L}`, `L` even.
    OneL(u64),
    /// `{1, L, L+1}`, `L` odd.
    OneLLOdd(u64),
    /// `{1, L, L+1}`, `L` even.
    OneLLEven(u64),
}

impl FamilyKind {
    /// Checks that the parameter has the parity (and size) the family needs.
    pub fn validate(self) -> Result<Self> {
        let ok = match self {
            FamilyKind::OneL(l) => l >= 2 && l % 2 == 0,
            FamilyKind::OneLLOdd(l) => l >= 3 && l % 2 == 1,
            FamilyKind::OneLLEven(l) => l >= 2 && l % 2 == 0,
        };
        if ok {
            Ok(self)
        } else {
            Err(Error::BadParams(format!(
                "{self:?} has the wrong parity or is too small"
            )))
        }
    }

    /// Recognises a move set as a family member.
    pub fn from_moves(moves: &MoveSet) -> Option<Self> {
        match moves.values() {
            [1, l] => FamilyKind::OneL(*l).validate().ok(),
            [1, l, l1] if *l1 == l + 1 => {
                let kind = if l % 2 == 1 {
                    FamilyKind::OneLLOdd(*l)
                } else {
                    FamilyKind::OneLLEven(*l)
                };
                kind.validate().ok()
            }
            _ => None,
        }
    }

    /// Parses `oneL`, `oneLL-odd` or `oneLL-even` plus a parameter.
    pub fn parse(name: &str, large: u64) -> Result<Self> {
        let kind = match name.to_ascii_lowercase().as_str() {
            "onel" | "one-l" => FamilyKind::OneL(large),
            "onell-odd" | "onell_odd" => FamilyKind::OneLLOdd(large),
            "onell-even" | "onell_even" => FamilyKind::OneLLEven(large),
            other => return Err(Error::BadParams(format!("unknown family {other:?}"))),
        };
        kind.validate()
    }

    /// The family's larger generator `L`.
    pub fn large(self) -> u64 {
        match self {
            FamilyKind::OneL(l) | FamilyKind::OneLLOdd(l) | FamilyKind::OneLLEven(l) => l,
        }
    }

    /// `floor(L / 2)`.
    pub fn half(self) -> u64 {
        self.large() / 2
    }

    pub fn moves(self) -> MoveSet {
        let l = self.large() as i64;
        match self {
            FamilyKind::OneL(_) => MoveSet::new([1, l]),
            _ => MoveSet::new([1, l, l + 1]),
        }
        .expect("validated family parameters")
    }

    pub fn modulus(self) -> u64 {
        let l = self.large();
        match self {
            FamilyKind::OneL(_) => l + 1,
            FamilyKind::OneLLOdd(_) => 2 * l + 1,
            FamilyKind::OneLLEven(_) => 2 * l,
        }
    }
}

impl std::fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FamilyKind::OneL(l) => write!(f, "oneL {l}"),
            FamilyKind::OneLLOdd(l) => write!(f, "oneLL-odd {l}"),
            FamilyKind::OneLLEven(l) => write!(f, "oneLL-even {l}"),
        }
    }
}

/// Move sets with a known standard-NIM pattern.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum StandardPattern {
    /// `{low, ..., high}`.
    Interval {
        low: u64,
        high: u64,
    },
    Family(FamilyKind),
}

impl StandardPattern {
    fn check(self) -> Result<Self> {
        match self {
            StandardPattern::Interval { low, high } if low == 0 || low > high => {
                Err(Error::BadParams(format!("interval {low}..={high}")))
            }
            StandardPattern::Family(kind) => kind.validate().map(|_| self),
            _ => Ok(self),
        }
    }
}

/// Closed-form standard-NIM winner.
pub fn family_standard(pattern: StandardPattern, n: u64) -> Result<Winner> {
    let loses = match pattern.check()? {
        StandardPattern::Interval { low, high } => n % (low + high) < low,
        StandardPattern::Family(kind) => {
            let r = n % kind.modulus();
            let last_even = match kind {
                FamilyKind::OneL(l) | FamilyKind::OneLLEven(l) => l - 2,
                FamilyKind::OneLLOdd(l) => l - 1,
            };
            r.is_multiple_of(2) && r <= last_even
        }
    };
    Ok(Winner::from_mover_wins(!loses))
}

fn ceil_half(x: u128) -> u128 {
    x.div_ceil(2)
}

/// Closed-form thresholds, cost tables and solution set for one family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FamilySolution {
    pub kind: FamilyKind,
}

impl FamilySolution {
    pub fn new(kind: FamilyKind) -> Result<Self> {
        Ok(FamilySolution {
            kind: kind.validate()?,
        })
    }

    pub fn modulus(&self) -> u64 {
        self.kind.modulus()
    }

    pub fn standard(&self, n: u64) -> Winner {
        family_standard(StandardPattern::Family(self.kind), n).expect("validated")
    }

    /// `(winner threshold, loser threshold)`: the rich threshold of whoever
    /// wins standard NIM from `n`, then that of the other player.
    pub fn winner_loser_thresholds(&self, n: u64) -> (u64, u64) {
        let l = self.kind.large() as u128;
        let n = n as u128;
        let m = self.modulus() as u128;
        let (k, i) = (n / m, n % m);
        let (winner, loser) = match self.kind {
            FamilyKind::OneL(_) => {
                let half = l / 2;
                let winner = if i < l {
                    l * k + ceil_half(i)
                } else {
                    l * (k + 1)
                };
                let loser = if n < l {
                    n / 2
                } else if i < l {
                    l * k + i / 2 + 1 - half
                } else {
                    l * k + half
                };
                (winner, loser)
            }
            FamilyKind::OneLLOdd(_) => {
                let base = (3 * l + 1) * k / 2;
                let winner = if i < l + 1 {
                    base + ceil_half(i)
                } else {
                    base + l + ceil_half(i - l)
                };
                let loser = if i < l + 2 {
                    base + i / 2
                } else {
                    base + l + (i - l) / 2
                };
                (winner, loser)
            }
            FamilyKind::OneLLEven(_) => {
                let base = 3 * l * k / 2;
                let winner = if i < l {
                    base + ceil_half(i)
                } else {
                    base + l + ceil_half(i - l)
                };
                let loser = if i < l + 1 {
                    base + i / 2
                } else {
                    base + l + (i - l) / 2
                };
                (winner, loser)
            }
        };
        (winner as u64, loser as u64)
    }

    /// `(mover threshold, opponent threshold)` at `n`.
    pub fn thresholds(&self, n: u64) -> (u64, u64) {
        let (winner, loser) = self.winner_loser_thresholds(n);
        match self.standard(n) {
            Winner::Mover => (winner, loser),
            Winner::Opponent => (loser, winner),
        }
    }

    /// `(mover cost, opponent cost)` of removing `a` at residue `i`.
    pub fn costs(&self, residue: u64, a: u64) -> Result<(i64, i64)> {
        let l = self.kind.large() as i64;
        let i = (residue % self.modulus()) as i64;
        let even = i % 2 == 0;
        let pick = |e: i64, o: i64| if even { e } else { o };
        let moves = self.kind.moves();
        if !moves.contains(a) {
            return Err(Error::BadParams(format!("{a} is not a move of {moves}")));
        }
        let a = a as i64;
        let costs = match self.kind {
            FamilyKind::OneL(_) => {
                if a == 1 {
                    (if i == l { l - 1 } else { 0 }, 0)
                } else {
                    (0, if i == l - 1 { 0 } else { l - 1 })
                }
            }
            FamilyKind::OneLLEven(_) => {
                let h = l / 2;
                if a == 1 {
                    (if i == l || i == l + 1 { h } else { 0 }, 0)
                } else if a == l {
                    let mover = if (1..l).contains(&i) {
                        pick(-h, 1 - h)
                    } else {
                        pick(0, 1)
                    };
                    let opponent = if i < l + 1 {
                        pick(h, h - 1)
                    } else {
                        pick(l, l - 1)
                    };
                    (mover, opponent)
                } else {
                    let mover = if (2..l).contains(&i) { -h } else { 0 };
                    let opponent = if (1..=l).contains(&i) { h } else { l };
                    (mover, opponent)
                }
            }
            FamilyKind::OneLLOdd(_) => {
                let h = (l - 1) / 2;
                if a == 1 {
                    let mover = if i == l + 1 {
                        h + 1
                    } else if i == l + 2 {
                        h
                    } else {
                        0
                    };
                    (mover, 0)
                } else if a == l {
                    let mover = if i == 0 {
                        0
                    } else if i < l + 1 {
                        -h
                    } else {
                        pick(1, 0)
                    };
                    let opponent = if i <= l + 1 { h } else { pick(l - 1, l) };
                    (mover, opponent)
                } else {
                    // The removal of L+1 works with (L+1)/2 where the others use (L-1)/2.
                    let h = h + 1;
                    let mover = if (2..=l).contains(&i) {
                        pick(-h, 1 - h)
                    } else {
                        0
                    };
                    let opponent = if (1..=l + 1).contains(&i) {
                        pick(h, h - 1)
                    } else {
                        l
                    };
                    (mover, opponent)
                }
            }
        };
        Ok(costs)
    }

    /// A certificate assembled from the closed forms rather than detected.
    pub fn certificate(&self) -> PeriodCertificate {
        let m = self.modulus();
        let moves = self.kind.moves();
        let mut mover_costs = Vec::new();
        let mut opponent_costs = Vec::new();
        for i in 0..m {
            let (row_m, row_o): (Vec<i64>, Vec<i64>) = moves
                .values()
                .iter()
                .map(|&a| self.costs(i, a).expect("own move"))
                .unzip();
            mover_costs.push(row_m);
            opponent_costs.push(row_o);
        }
        PeriodCertificate {
            period: m,
            moves: moves.values().to_vec(),
            standard: (0..m).map(|i| self.standard(i)).collect(),
            mover_costs,
            opponent_costs,
            verified_up_to: u64::MAX,
            checked_from: 0,
        }
    }

    pub fn solution_set(&self) -> FamilyX {
        FamilyX { kind: self.kind }
    }

    /// Full regime pipeline. Budgets are clamped to `n`.
    pub fn decide(&self, n: u64, d: u64, e: u64) -> (Region, Winner) {
        let (d, e) = (d.min(n), e.min(n));
        let f = self.thresholds(n);
        let g = poor_thresholds(1, n);
        let region = classify_with(d, e, f, (g.mover, g.opponent));
        let winner = match region {
            Region::RichI => Winner::Mover,
            Region::RichII => Winner::Opponent,
            Region::RichBoth => self.standard(n),
            Region::PoorI | Region::PoorII | Region::PoorBoth => {
                poor_winner(1, n, d, e).expect("poor region")
            }
            Region::Critical => {
                let t = CsTriple::new(
                    n % self.modulus(),
                    f.0 as i64 - 1 - d as i64,
                    f.1 as i64 - 1 - e as i64,
                );
                Winner::from_mover_wins(self.solution_set().contains(&t))
            }
        };
        (region, winner)
    }
}

/// Winner of `(n; d, e)` for a family member, from closed forms only.
pub fn family_win(kind: FamilyKind, n: u64, d: u64, e: u64) -> Result<Winner> {
    Ok(FamilySolution::new(kind)?.decide(n, d, e).1)
}

/// The family's solution set over `(residue, x, y)` = `(i, mover gap, opponent gap)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FamilyX {
    kind: FamilyKind,
}

fn floor_to(x: i64, step: i64) -> i64 {
    x.div_euclid(step) * step
}

impl SolutionSet for FamilyX {
    fn contains(&self, t: &CsTriple) -> bool {
        let l = self.kind.large() as i64;
        let i = t.residue as i64;
        let (x, y) = (t.mover_gap, t.opponent_gap);
        match self.kind {
            FamilyKind::OneL(_) => {
                let w = l - 1;
                if i % 2 == 0 && i <= l - 2 {
                    x < floor_to(y, w)
                } else {
                    y >= floor_to(x, w)
                }
            }
            FamilyKind::OneLLEven(_) => {
                let h = l / 2;
                if i % 2 == 1 || i == l {
                    y >= floor_to(x, h)
                } else {
                    x < floor_to(y, h)
                }
            }
            FamilyKind::OneLLOdd(_) => {
                let h = (l - 1) / 2;
                if i == l + 1 {
                    y >= floor_to(x, l)
                } else if (i < l + 1) == (i % 2 == 0) {
                    x < floor_to(y, l) + h
                } else {
                    y > floor_to(x, l) + h - 1
                }
            }
        }
    }

    fn describe(&self) -> String {
        format!("closed-form solution set for {}", self.kind)
    }
}

/// The `{1, L, L+1}` (L odd) rule with blocks of width `L - 1`, kept as a
/// negative control: it is not closed under play.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LegacyOddX {
    pub large: u64,
}

impl SolutionSet for LegacyOddX {
    fn contains(&self, t: &CsTriple) -> bool {
        let l = self.large as i64;
        let w = l - 1;
        let i = t.residue as i64;
        let (x, y) = (t.mover_gap, t.opponent_gap);
        if i == l + 1 {
            y >= floor_to(x, w)
        } else if (i < l + 1) == (i % 2 == 0) {
            x <= floor_to(y, w)
        } else {
            y > floor_to(x, w)
        }
    }

    fn describe(&self) -> String {
        format!(
            "width-{} block rule for {{1,{},{}}}",
            self.large - 1,
            self.large,
            self.large + 1
        )
    }
}
