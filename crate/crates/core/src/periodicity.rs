//! Corresponding states, cost tables and cash-periodicity.
//!
//! For a middle-class position `(n; d, e)` the useful coordinates are how far
//! each player sits below their rich threshold:
//!
//! ```text
//! residue      = n mod m
//! mover_gap    = mover(n)    - 1 - d
//! opponent_gap = opponent(n) - 1 - e
//! ```
//!
//! Removing `a` changes the gaps by amounts that depend only on `n` and `a`.
//! When those amounts (and standard NIM) depend only on `n mod m`, the move
//! set is cash-periodic and a position's fate in the critical regime is a
//! property of the triple alone, captured by a solution set.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::game::{MoveSet, Winner};
use crate::oracle::Oracle;
use crate::thresholds::{Region, ThresholdTables};

/// Gap deltas `(mover_cost, opponent_cost)` for removing `a` from `n`.
///
/// `mover_cost = mover(n) - opponent(n - a) - a` and
/// `opponent_cost = opponent(n) - mover(n - a)`, so that after the move the
/// new mover gap is `opponent_gap - opponent_cost` and the new opponent gap
/// is `mover_gap - mover_cost`.
pub fn compute_costs(tables: &ThresholdTables, n: u64, a: u64) -> Result<(i64, i64)> {
    if a > n {
        return Err(Error::out_of_range(format!("move {a} from {n} stones"), n));
    }
    let mover = tables.mover(n)? as i64 - tables.opponent(n - a)? as i64 - a as i64;
    let opponent = tables.opponent(n)? as i64 - tables.mover(n - a)? as i64;
    Ok((mover, opponent))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CsTriple {
    pub residue: u64,
    pub mover_gap: i64,
    pub opponent_gap: i64,
}

impl CsTriple {
    pub fn new(residue: u64, mover_gap: i64, opponent_gap: i64) -> Self {
        CsTriple {
            residue,
            mover_gap,
            opponent_gap,
        }
    }

    /// Both gaps non-negative: neither player is rich.
    pub fn in_domain(&self) -> bool {
        self.mover_gap >= 0 && self.opponent_gap >= 0
    }
}

impl std::fmt::Display for CsTriple {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "({},{},{})",
            self.residue, self.mover_gap, self.opponent_gap
        )
    }
}

/// Evidence that a move set is cash-periodic up to `verified_up_to` stones.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PeriodCertificate {
    pub period: u64,
    pub moves: Vec<u64>,
    /// Standard-NIM winner per residue.
    pub standard: Vec<Winner>,
    /// `mover_costs[i][k]` is the mover cost of `moves[k]` at residue `i`.
    pub mover_costs: Vec<Vec<i64>>,
    pub opponent_costs: Vec<Vec<i64>>,
    pub verified_up_to: u64,
    /// First `n` at which constancy was checked.
    pub checked_from: u64,
}

impl PeriodCertificate {
    fn column(&self, a: u64) -> Result<usize> {
        self.moves
            .iter()
            .position(|&x| x == a)
            .ok_or_else(|| Error::BadParams(format!("{a} is not an allowed move")))
    }

    pub fn residue(&self, n: u64) -> u64 {
        n % self.period
    }

    pub fn costs(&self, residue: u64, a: u64) -> Result<(i64, i64)> {
        let k = self.column(a)?;
        let i = (residue % self.period) as usize;
        Ok((self.mover_costs[i][k], self.opponent_costs[i][k]))
    }

    pub fn standard_at(&self, residue: u64) -> Winner {
        self.standard[(residue % self.period) as usize]
    }
}

#[derive(Debug, Clone, Copy)]
pub struct DetectOptions {
    pub max_period: u64,
    pub n_check: u64,
    /// Extra pre-period on top of `max(A)`.
    pub offset: u64,
}

impl Default for DetectOptions {
    fn default() -> Self {
        DetectOptions {
            max_period: 64,
            n_check: 600,
            offset: 0,
        }
    }
}

/// Least period `m <= max_period` such that, for every checked `n`, standard
/// NIM and both cost tables depend only on `n mod m`.
///
/// Standard NIM is compared for `n >= max(A) + offset`. Costs of a move `a`
/// are compared once `n - a >= max(A) + offset`, since below `max(A)`
/// thresholds follow their base-case values rather than the periodic pattern.
/// Each residue must be seen at least twice in the window for `m` to count.
pub fn detect_cash_period(
    moves: &MoveSet,
    tables: &ThresholdTables,
    opts: DetectOptions,
) -> Result<Option<PeriodCertificate>> {
    if opts.n_check > tables.n_max() {
        return Err(Error::out_of_range(
            format!("n_check = {}", opts.n_check),
            tables.n_max(),
        ));
    }
    if opts.max_period == 0 {
        return Err(Error::BadParams("max_period must be positive".into()));
    }
    let base = moves.max() + opts.offset;
    let costs = CostGrid::new(moves, tables, opts.n_check)?;

    for m in 1..=opts.max_period {
        let last_start = base + moves.max();
        if opts.n_check + 1 < last_start + 2 * m {
            break;
        }
        if let Some(cert) = try_period(moves, tables, &costs, m, base, opts.n_check) {
            return Ok(Some(cert));
        }
    }
    Ok(None)
}

/// Costs for every `(n, a)` with `a <= n <= n_check`.
struct CostGrid {
    mover: Vec<Vec<Option<i64>>>,
    opponent: Vec<Vec<Option<i64>>>,
}

impl CostGrid {
    fn new(moves: &MoveSet, tables: &ThresholdTables, n_check: u64) -> Result<Self> {
        let mut mover = Vec::with_capacity(n_check as usize + 1);
        let mut opponent = Vec::with_capacity(n_check as usize + 1);
        for n in 0..=n_check {
            let mut row_m = Vec::with_capacity(moves.len());
            let mut row_o = Vec::with_capacity(moves.len());
            for &a in moves.values() {
                if a <= n {
                    let (cm, co) = compute_costs(tables, n, a)?;
                    row_m.push(Some(cm));
                    row_o.push(Some(co));
                } else {
                    row_m.push(None);
                    row_o.push(None);
                }
            }
            mover.push(row_m);
            opponent.push(row_o);
        }
        Ok(CostGrid { mover, opponent })
    }
}

fn try_period(
    moves: &MoveSet,
    tables: &ThresholdTables,
    costs: &CostGrid,
    m: u64,
    base: u64,
    n_check: u64,
) -> Option<PeriodCertificate> {
    let width = moves.len();
    let mut standard: Vec<Option<Winner>> = vec![None; m as usize];
    let mut mover_costs: Vec<Vec<Option<i64>>> = vec![vec![None; width]; m as usize];
    let mut opponent_costs = mover_costs.clone();

    fn agree<T: PartialEq + Copy>(slot: &mut Option<T>, v: T) -> bool {
        match slot {
            Some(old) => *old == v,
            None => {
                *slot = Some(v);
                true
            }
        }
    }

    let standards = tables.standard_winners();
    for n in base..=n_check {
        let i = (n % m) as usize;
        if !agree(&mut standard[i], standards[n as usize]) {
            return None;
        }
        for (k, &a) in moves.values().iter().enumerate() {
            if n < a + base {
                continue;
            }
            let cm = costs.mover[n as usize][k].expect("a <= n");
            let co = costs.opponent[n as usize][k].expect("a <= n");
            if !agree(&mut mover_costs[i][k], cm) || !agree(&mut opponent_costs[i][k], co) {
                return None;
            }
        }
    }

    let unwrap_all = |rows: Vec<Vec<Option<i64>>>| -> Option<Vec<Vec<i64>>> {
        rows.into_iter().map(|r| r.into_iter().collect()).collect()
    };
    Some(PeriodCertificate {
        period: m,
        moves: moves.values().to_vec(),
        standard: standard.into_iter().collect::<Option<Vec<_>>>()?,
        mover_costs: unwrap_all(mover_costs)?,
        opponent_costs: unwrap_all(opponent_costs)?,
        verified_up_to: n_check,
        checked_from: base,
    })
}

pub fn corresponding_state(
    cert: &PeriodCertificate,
    tables: &ThresholdTables,
    n: u64,
    d: u64,
    e: u64,
) -> Result<CsTriple> {
    Ok(CsTriple {
        residue: cert.residue(n),
        mover_gap: tables.mover(n)? as i64 - 1 - d as i64,
        opponent_gap: tables.opponent(n)? as i64 - 1 - e as i64,
    })
}

/// Corresponding state after removing `a`. The two gaps trade places.
pub fn step_cs(cert: &PeriodCertificate, t: CsTriple, a: u64) -> Result<CsTriple> {
    let (mover_cost, opponent_cost) = cert.costs(t.residue, a)?;
    let m = cert.period;
    Ok(CsTriple {
        residue: (t.residue % m + m - a % m) % m,
        mover_gap: t.opponent_gap - opponent_cost,
        opponent_gap: t.mover_gap - mover_cost,
    })
}

/// A set of corresponding states, queried as a total predicate.
pub trait SolutionSet {
    fn contains(&self, t: &CsTriple) -> bool;

    fn describe(&self) -> String {
        "custom solution set".to_string()
    }
}

impl<F> SolutionSet for F
where
    F: Fn(&CsTriple) -> bool,
{
    fn contains(&self, t: &CsTriple) -> bool {
        self(t)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Clause {
    /// A member must have a losing `a1` reply for the opponent.
    Member,
    /// A non-member must lose after every move.
    NonMember,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub triple: CsTriple,
    pub clause: Clause,
    pub mv: u64,
    pub successor: CsTriple,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub bound: u64,
    pub checked: u64,
    pub violations: Vec<Violation>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks both closure clauses on every in-domain triple with gaps up to
/// `bound`. Successors outside the box are still judged by `set`.
pub fn verify_solution_set(
    cert: &PeriodCertificate,
    set: &dyn SolutionSet,
    bound: u64,
) -> VerificationReport {
    let a1 = cert.moves[0];
    let mut violations = Vec::new();
    let mut checked = 0;
    let b = bound as i64;
    for residue in 0..cert.period {
        for mover_gap in 0..=b {
            for opponent_gap in 0..=b {
                let t = CsTriple::new(residue, mover_gap, opponent_gap);
                checked += 1;
                if set.contains(&t) {
                    let s = step_cs(cert, t, a1).expect("a1 is a move");
                    if !member_successor_ok(cert, set, &s) {
                        violations.push(Violation {
                            triple: t,
                            clause: Clause::Member,
                            mv: a1,
                            successor: s,
                        });
                    }
                } else {
                    for &a in &cert.moves {
                        let s = step_cs(cert, t, a).expect("a is a move");
                        if !non_member_successor_ok(cert, set, &s) {
                            violations.push(Violation {
                                triple: t,
                                clause: Clause::NonMember,
                                mv: a,
                                successor: s,
                            });
                        }
                    }
                }
            }
        }
    }
    VerificationReport {
        bound,
        checked,
        violations,
    }
}

fn member_successor_ok(cert: &PeriodCertificate, set: &dyn SolutionSet, s: &CsTriple) -> bool {
    let (b, bd) = (s.mover_gap, s.opponent_gap);
    (b >= 0 && bd >= 0 && !set.contains(s))
        || (b >= 0 && bd < 0)
        || (b < 0 && bd < 0 && cert.standard_at(s.residue) == Winner::Opponent)
}

fn non_member_successor_ok(cert: &PeriodCertificate, set: &dyn SolutionSet, s: &CsTriple) -> bool {
    let (b, bd) = (s.mover_gap, s.opponent_gap);
    (b >= 0 && bd >= 0 && set.contains(s))
        || (b < 0 && bd >= 0)
        || (b < 0 && bd < 0 && cert.standard_at(s.residue) == Winner::Mover)
}

/// Oracle outcomes of all critical positions, grouped by corresponding state.
#[derive(Debug, Clone, Default, Serialize)]
pub struct InducedCandidate {
    pub outcomes: BTreeMap<CsTriple, Winner>,
    pub conflicts: Vec<CsTriple>,
    pub critical_positions: u64,
}

impl InducedCandidate {
    pub fn consistent(&self) -> bool {
        self.conflicts.is_empty()
    }
}

impl SolutionSet for InducedCandidate {
    fn contains(&self, t: &CsTriple) -> bool {
        self.outcomes.get(t) == Some(&Winner::Mover)
    }

    fn describe(&self) -> String {
        format!(
            "induced from {} critical positions",
            self.critical_positions
        )
    }
}

pub fn induce_candidate(
    oracle: &Oracle,
    tables: &ThresholdTables,
    cert: &PeriodCertificate,
    n_max: u64,
) -> Result<InducedCandidate> {
    let mut out = InducedCandidate::default();
    for n in 0..=n_max {
        for d in 0..=n {
            for e in 0..=n {
                if tables.classify(n, d, e)? != Region::Critical {
                    continue;
                }
                out.critical_positions += 1;
                let t = corresponding_state(cert, tables, n, d, e)?;
                let w = oracle.winner(n, d, e)?;
                match out.outcomes.get(&t) {
                    Some(&old) if old != w => {
                        if !out.conflicts.contains(&t) {
                            out.conflicts.push(t);
                        }
                    }
                    Some(_) => {}
                    None => {
                        out.outcomes.insert(t, w);
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Winner of a critical position: the mover wins iff its corresponding state
/// is in `set`.
pub fn critical_winner(
    cert: &PeriodCertificate,
    set: &dyn SolutionSet,
    tables: &ThresholdTables,
    n: u64,
    d: u64,
    e: u64,
) -> Result<Winner> {
    match tables.classify(n, d, e)? {
        Region::Critical => {
            let t = corresponding_state(cert, tables, n, d, e)?;
            Ok(Winner::from_mover_wins(set.contains(&t)))
        }
        other => Err(Error::WrongRegion(other)),
    }
}
