//! Python bindings for `nimcash`.
//!
//! Funds are passed as `int` or the string `"UF"` (or `None`) for unlimited.
//! Winners are reported as `"I"` (player to move) or `"II"`.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use nimcash::families::{self, FamilyKind, FamilySolution};
use nimcash::oracle::{Oracle, OracleConfig};
use nimcash::periodicity::{detect_cash_period, DetectOptions};
use nimcash::{CashState, Funds, ThresholdTables, WinCondition, Winner};

fn err(e: nimcash::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn label(w: Winner) -> &'static str {
    match w {
        Winner::Mover => "I",
        Winner::Opponent => "II",
    }
}

fn funds(obj: Option<&Bound<'_, PyAny>>) -> PyResult<Funds> {
    let Some(obj) = obj else {
        return Ok(Funds::Unlimited);
    };
    if obj.is_none() {
        return Ok(Funds::Unlimited);
    }
    if let Ok(x) = obj.extract::<u64>() {
        return Ok(Funds::Finite(x));
    }
    let s: String = obj.extract()?;
    s.parse().map_err(err)
}

/// A finite set of positive removal amounts.
#[pyclass(name = "MoveSet", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct PyMoveSet {
    inner: nimcash::MoveSet,
}

#[pymethods]
impl PyMoveSet {
    #[new]
    fn new(values: Vec<i64>) -> PyResult<Self> {
        Ok(PyMoveSet {
            inner: nimcash::MoveSet::new(values).map_err(err)?,
        })
    }

    #[getter]
    fn values(&self) -> Vec<u64> {
        self.inner.values().to_vec()
    }

    #[getter]
    fn min(&self) -> u64 {
        self.inner.min()
    }

    #[getter]
    fn max(&self) -> u64 {
        self.inner.max()
    }

    /// Legal removals from `(n; d, e)`.
    #[pyo3(signature = (n, d=None, e=None))]
    fn legal_moves(
        &self,
        n: u64,
        d: Option<&Bound<'_, PyAny>>,
        e: Option<&Bound<'_, PyAny>>,
    ) -> PyResult<Vec<u64>> {
        let state = CashState::new(n, funds(d)?, funds(e)?);
        Ok(self.inner.legal_moves(&state))
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __repr__(&self) -> String {
        format!("MoveSet({})", self.inner)
    }
}

/// Decides positions for one move set up to a pile bound.
#[pyclass(name = "Game", frozen)]
pub struct PyGame {
    inner: WinCondition,
    n_max: u64,
}

#[pymethods]
impl PyGame {
    #[new]
    #[pyo3(signature = (moves, n_max=400))]
    fn new(moves: Vec<i64>, n_max: u64) -> PyResult<Self> {
        let a = nimcash::MoveSet::new(moves).map_err(err)?;
        Ok(PyGame {
            inner: WinCondition::with_config(
                &a,
                n_max,
                OracleConfig {
                    max_stones: n_max.max(1),
                },
            )
            .map_err(err)?,
            n_max,
        })
    }

    #[getter]
    fn n_max(&self) -> u64 {
        self.n_max
    }

    #[getter]
    fn period(&self) -> Option<u64> {
        self.inner.certificate().map(|c| c.period)
    }

    #[getter]
    fn uses_solution_set(&self) -> bool {
        self.inner.uses_solution_set()
    }

    /// Returns a dict with `winner`, `region`, `rule`, `winning_moves` and `cs`.
    #[pyo3(signature = (n, d=None, e=None))]
    fn solve<'py>(
        &self,
        py: Python<'py>,
        n: u64,
        d: Option<&Bound<'py, PyAny>>,
        e: Option<&Bound<'py, PyAny>>,
    ) -> PyResult<Bound<'py, PyDict>> {
        let state = CashState::new(n, funds(d)?, funds(e)?);
        let decision = self.inner.decide(&state).map_err(err)?;
        let moves = self.inner.moves();
        let mut winning = Vec::new();
        for a in moves.legal_moves(&state) {
            let next = moves.apply_move(&state, a).map_err(err)?;
            if self.inner.decide(&next).map_err(err)?.winner == Winner::Opponent {
                winning.push(a);
            }
        }
        let out = PyDict::new(py);
        out.set_item("winner", label(decision.winner))?;
        out.set_item("region", decision.region.label())?;
        out.set_item("rule", decision.rule.describe())?;
        out.set_item("winning_moves", winning)?;
        out.set_item(
            "cs",
            decision
                .cs
                .map(|t| (t.residue, t.mover_gap, t.opponent_gap)),
        )?;
        Ok(out)
    }

    /// `(mover, opponent)` rich thresholds at `n`.
    fn thresholds(&self, n: u64) -> PyResult<(u64, u64)> {
        let t = self.inner.tables();
        Ok((t.mover(n).map_err(err)?, t.opponent(n).map_err(err)?))
    }

    fn classify(&self, n: u64, d: u64, e: u64) -> PyResult<&'static str> {
        Ok(self.inner.tables().classify(n, d, e).map_err(err)?.label())
    }
}

/// Winner of `(n; d, e)` by exhaustive search.
#[pyfunction]
#[pyo3(signature = (moves, n, d=None, e=None))]
fn solve(
    moves: Vec<i64>,
    n: u64,
    d: Option<&Bound<'_, PyAny>>,
    e: Option<&Bound<'_, PyAny>>,
) -> PyResult<&'static str> {
    let a = nimcash::MoveSet::new(moves).map_err(err)?;
    let oracle = Oracle::new(&a, n).map_err(err)?;
    let state = CashState::new(n, funds(d)?, funds(e)?);
    Ok(label(oracle.solve_cash(&state).map_err(err)?.winner))
}

/// Rows `(n, standard_winner, mover, opponent)` for `0 <= n <= n_max`.
#[pyfunction]
fn thresholds(moves: Vec<i64>, n_max: u64) -> PyResult<Vec<(u64, &'static str, u64, u64)>> {
    let a = nimcash::MoveSet::new(moves).map_err(err)?;
    let t = ThresholdTables::build(&a, n_max);
    (0..=n_max)
        .map(|n| {
            Ok((
                n,
                label(t.standard(n).map_err(err)?),
                t.mover(n).map_err(err)?,
                t.opponent(n).map_err(err)?,
            ))
        })
        .collect()
}

/// Region label of `(n; d, e)`.
#[pyfunction]
fn classify(moves: Vec<i64>, n: u64, d: u64, e: u64) -> PyResult<&'static str> {
    let a = nimcash::MoveSet::new(moves).map_err(err)?;
    let t = ThresholdTables::build(&a, n);
    Ok(t.classify(n, d, e).map_err(err)?.label())
}

/// Closed-form winner for a solved family: `kind` is oneL, oneLL-odd or oneLL-even.
#[pyfunction]
fn family_win(kind: &str, large: u64, n: u64, d: u64, e: u64) -> PyResult<&'static str> {
    let kind = FamilyKind::parse(kind, large).map_err(err)?;
    Ok(label(families::family_win(kind, n, d, e).map_err(err)?))
}

/// Closed-form `(mover, opponent)` thresholds for a family at any `n`.
#[pyfunction]
fn family_thresholds(kind: &str, large: u64, n: u64) -> PyResult<(u64, u64)> {
    let kind = FamilyKind::parse(kind, large).map_err(err)?;
    Ok(FamilySolution::new(kind).map_err(err)?.thresholds(n))
}

/// Smallest cash period, or `None` if none is found.
#[pyfunction]
#[pyo3(signature = (moves, m_max=64, n_check=600, offset=0))]
fn detect_period(moves: Vec<i64>, m_max: u64, n_check: u64, offset: u64) -> PyResult<Option<u64>> {
    let a = nimcash::MoveSet::new(moves).map_err(err)?;
    let t = ThresholdTables::build(&a, n_check);
    let opts = DetectOptions {
        max_period: m_max,
        n_check,
        offset,
    };
    Ok(detect_cash_period(&a, &t, opts)
        .map_err(err)?
        .map(|c| c.period))
}

#[pymodule]
fn pynimcash(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyMoveSet>()?;
    m.add_class::<PyGame>()?;
    m.add_function(wrap_pyfunction!(solve, m)?)?;
    m.add_function(wrap_pyfunction!(thresholds, m)?)?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(family_win, m)?)?;
    m.add_function(wrap_pyfunction!(family_thresholds, m)?)?;
    m.add_function(wrap_pyfunction!(detect_period, m)?)?;
    Ok(())
}
