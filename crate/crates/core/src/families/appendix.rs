//! Published thresholds for `{3, 5, 6, 10, 11}` and a checker for them.
//!
//! For `n = 16k + r` with `k >= 4` each threshold is listed as `slope*k + intercept`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::game::MoveSet;
use crate::thresholds::ThresholdTables;

pub const APPENDIX_MOVES: [i64; 5] = [3, 5, 6, 10, 11];
const FIRST_K: u64 = 4;

/// `(slope, intercept)` per residue mod 16.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AppendixTable {
    pub mover: [(i64, i64); 16],
    pub opponent: [(i64, i64); 16],
}

pub const APPENDIX_TABLE: AppendixTable = AppendixTable {
    mover: [
        (11, 3),
        (10, 3),
        (11, 5),
        (10, 5),
        (10, 3),
        (11, 3),
        (10, 5),
        (10, 6),
        (11, 6),
        (10, 8),
        (11, 10),
        (10, 10),
        (10, 8),
        (11, 11),
        (10, 10),
        (10, 11),
    ],
    opponent: [
        (11, 0),
        (10, 0),
        (11, 0),
        (11, 3),
        (11, -1),
        (11, 5),
        (11, 3),
        (11, 5),
        (11, 5),
        (10, 5),
        (11, 3),
        (11, 6),
        (11, 5),
        (11, 10),
        (11, 6),
        (11, 10),
    ],
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Side {
    Mover,
    Opponent,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AppendixMismatch {
    pub n: u64,
    pub k: u64,
    pub residue: u64,
    pub side: Side,
    pub listed: i64,
    pub computed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AppendixReport {
    pub k_max: u64,
    pub mismatches: Vec<AppendixMismatch>,
    /// Formulas (out of 32) that hold for every checked `k`.
    pub formulas_matching: usize,
    /// `(n, mover, opponent)` for `n <= 63`, where no pattern is claimed.
    pub irregular: Vec<(u64, u64, u64)>,
}

impl AppendixReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

pub fn appendix_check(k_max: u64) -> Result<AppendixReport> {
    appendix_check_against(&APPENDIX_TABLE, k_max)
}

/// Compares `table` with the thresholds computed for `{3,5,6,10,11}`.
pub fn appendix_check_against(table: &AppendixTable, k_max: u64) -> Result<AppendixReport> {
    if k_max < FIRST_K {
        return Err(Error::BadParams(format!(
            "k_max must be at least {FIRST_K}, got {k_max}"
        )));
    }
    let moves = MoveSet::new(APPENDIX_MOVES)?;
    let tables = ThresholdTables::build(&moves, 16 * k_max + 15);

    let mut mismatches = Vec::new();
    let mut bad_formulas = [[false; 16]; 2];
    for k in FIRST_K..=k_max {
        for r in 0..16u64 {
            let n = 16 * k + r;
            let sides = [
                (Side::Mover, table.mover[r as usize], tables.mover(n)?),
                (
                    Side::Opponent,
                    table.opponent[r as usize],
                    tables.opponent(n)?,
                ),
            ];
            for (s, (slope, intercept), computed) in sides {
                let listed = slope * k as i64 + intercept;
                if listed != computed as i64 {
                    bad_formulas[s as usize][r as usize] = true;
                    mismatches.push(AppendixMismatch {
                        n,
                        k,
                        residue: r,
                        side: s,
                        listed,
                        computed,
                    });
                }
            }
        }
    }
    let formulas_matching = bad_formulas.iter().flatten().filter(|b| !**b).count();
    let irregular = (0..16 * FIRST_K)
        .map(|n| Ok((n, tables.mover(n)?, tables.opponent(n)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(AppendixReport {
        k_max,
        mismatches,
        formulas_matching,
        irregular,
    })
}
