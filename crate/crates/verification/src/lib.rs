//! Independent reference implementations used by the test suites.
//! Written directly from the game rules with no dependency on the solver crate.

use std::collections::HashMap;

/// Recursive solver that keeps the real budgets (no clamping).
pub struct NaiveSolver {
    moves: Vec<u64>,
    memo: HashMap<(u64, u64, u64), bool>,
}

impl NaiveSolver {
    pub fn new(moves: &[u64]) -> Self {
        let mut moves = moves.to_vec();
        moves.sort_unstable();
        NaiveSolver {
            moves,
            memo: HashMap::new(),
        }
    }

    pub fn mover_wins(&mut self, n: u64, d: u64, e: u64) -> bool {
        if let Some(&v) = self.memo.get(&(n, d, e)) {
            return v;
        }
        let mut wins = false;
        for k in 0..self.moves.len() {
            let a = self.moves[k];
            if a <= n && a <= d && !self.mover_wins(n - a, e, d - a) {
                wins = true;
                break;
            }
        }
        self.memo.insert((n, d, e), wins);
        wins
    }
}

/// Dense bottom-up table over `n <= n_max`, `d, e <= fund_max`, budgets
/// never clamped.
pub struct UnclampedCube {
    moves: Vec<u64>,
    side: usize,
    bits: Vec<u64>,
}

impl UnclampedCube {
    pub fn build(moves: &[u64], n_max: u64, fund_max: u64) -> Self {
        let side = fund_max as usize + 1;
        let total = (n_max as usize + 1) * side * side;
        let mut cube = UnclampedCube {
            moves: moves.to_vec(),
            side,
            bits: vec![0; total.div_ceil(64)],
        };
        for n in 0..=n_max {
            for d in 0..=fund_max {
                for e in 0..=fund_max {
                    let wins = cube
                        .moves
                        .iter()
                        .any(|&a| a <= n && a <= d && !cube.get(n - a, e, d - a));
                    if wins {
                        let i = cube.index(n, d, e);
                        cube.bits[i / 64] |= 1 << (i % 64);
                    }
                }
            }
        }
        cube
    }

    fn index(&self, n: u64, d: u64, e: u64) -> usize {
        (n as usize * self.side + d as usize) * self.side + e as usize
    }

    pub fn get(&self, n: u64, d: u64, e: u64) -> bool {
        let i = self.index(n, d, e);
        self.bits[i / 64] >> (i % 64) & 1 == 1
    }
}

/// Standard NIM by direct recursion over the rules.
pub fn standard_mover_wins(moves: &[u64], n_max: u64) -> Vec<bool> {
    let mut w = vec![false; n_max as usize + 1];
    for n in 0..=n_max {
        w[n as usize] = moves.iter().any(|&a| a <= n && !w[(n - a) as usize]);
    }
    w
}

/// Poor thresholds straight from their definition.
pub fn poor_pair(a1: u64, n: u64) -> (u64, u64) {
    let i = n % (2 * a1);
    let half = (n - i) / 2;
    (half + (i + 1).min(a1), half + (i + 1).saturating_sub(a1))
}

pub const CORPUS: [&[u64]; 6] = [
    &[1, 4],
    &[1, 6],
    &[1, 5, 6],
    &[1, 4, 5],
    &[1, 3, 4],
    &[3, 5, 6, 10, 11],
];
