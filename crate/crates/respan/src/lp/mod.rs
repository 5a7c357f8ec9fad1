//! Solver-agnostic sparse linear programs.
//!
//! [`LpProblem`] stores a minimization LP as a variable registry plus
//! row-wise sparse constraints with lower/upper bounds (equality rows have
//! equal bounds). Problems are solved either by the built-in reference
//! simplex ([`solve_reference`]) or exported to MPS for an external solver
//! ([`export_mps`] / [`import_solution`]).

mod mps;
mod simplex;

pub use mps::{export_mps, import_solution, write_mps, ImportedSolution};
pub use simplex::{solve_reference, solve_reference_with, SolverOptions};

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::scalar::Scalar;

/// Handle to a registered variable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VarId(pub(crate) usize);

impl VarId {
    pub fn index(self) -> usize {
        self.0
    }
}

/// Handle to a constraint row.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RowId(pub(crate) usize);

impl RowId {
    pub fn index(self) -> usize {
        self.0
    }
}

#[derive(Debug, Clone)]
struct Variable<S> {
    name: String,
    lb: S,
    ub: S,
    obj: S,
}

#[derive(Debug, Clone)]
struct Row<S> {
    terms: Vec<(usize, S)>,
    lb: S,
    ub: S,
}

/// Errors from LP construction, solving, and file exchange.
#[derive(Debug, thiserror::Error)]
pub enum LpError {
    #[error("variable {0} already registered")]
    DuplicateVariable(String),
    #[error("variable {name}: lower bound {lb} exceeds upper bound {ub}")]
    InvalidBounds { name: String, lb: f64, ub: f64 },
    #[error("row {row}: lower bound {lb} exceeds upper bound {ub}")]
    InvalidRowBounds { row: usize, lb: f64, ub: f64 },
    #[error("{context}: coefficient is not finite")]
    NonFinite { context: String },
    #[error("unknown variable handle {index}")]
    UnknownVariable { index: usize },
    #[error("problem has {have} variables (incl. row slacks), reference solver cap is {cap}")]
    SizeCap { have: usize, cap: usize },
    #[error("numerical failure: {0}")]
    Numerical(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("solution file line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("solution file names unknown variable {0}")]
    UnknownName(String),
}

/// Termination status of a solve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
}

/// Primal result of a solve. `values` and `objective` are meaningful only
/// when the status is `Optimal`.
#[derive(Debug, Clone, PartialEq)]
pub struct LpSolution<S> {
    pub status: LpStatus,
    pub values: Vec<S>,
    pub objective: S,
    pub iterations: u64,
    pub wall_seconds: f64,
}

impl<S: Scalar> LpSolution<S> {
    pub fn value(&self, var: VarId) -> S {
        self.values[var.0]
    }

    pub fn is_optimal(&self) -> bool {
        self.status == LpStatus::Optimal
    }
}

/// Variable, constraint, and nonzero counts of a problem. Nonzeros count
/// constraint-matrix entries only, not objective coefficients.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProblemSize {
    pub variables: usize,
    pub constraints: usize,
    pub nonzeros: usize,
}

/// A sparse minimization LP.
#[derive(Debug, Clone)]
pub struct LpProblem<S> {
    name: String,
    vars: Vec<Variable<S>>,
    by_name: BTreeMap<String, usize>,
    rows: Vec<Row<S>>,
}

impl<S: Scalar> LpProblem<S> {
    pub fn new(name: impl Into<String>) -> Self {
        LpProblem {
            name: name.into(),
            vars: Vec::new(),
            by_name: BTreeMap::new(),
            rows: Vec::new(),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Registers a variable with bounds `[lb, ub]` and objective
    /// coefficient `obj`. Bounds may be infinite; `obj` must be finite.
    pub fn add_var(
        &mut self,
        name: impl Into<String>,
        lb: S,
        ub: S,
        obj: S,
    ) -> Result<VarId, LpError> {
        let name = name.into();
        if self.by_name.contains_key(&name) {
            return Err(LpError::DuplicateVariable(name));
        }
        if lb.is_nan() || ub.is_nan() || lb > ub {
            return Err(LpError::InvalidBounds { name, lb: lb.as_f64(), ub: ub.as_f64() });
        }
        if !obj.is_finite() {
            return Err(LpError::NonFinite { context: format!("objective of {name}") });
        }
        let id = VarId(self.vars.len());
        self.by_name.insert(name.clone(), id.0);
        self.vars.push(Variable { name, lb, ub, obj });
        Ok(id)
    }

    /// Appends the row `lb <= sum(coef * var) <= ub`. Duplicate variables
    /// are merged by summing; zero coefficients are dropped.
    pub fn add_constraint(
        &mut self,
        terms: &[(VarId, S)],
        lb: S,
        ub: S,
    ) -> Result<RowId, LpError> {
        let row = self.rows.len();
        if lb.is_nan() || ub.is_nan() || lb > ub {
            return Err(LpError::InvalidRowBounds { row, lb: lb.as_f64(), ub: ub.as_f64() });
        }
        let mut merged: BTreeMap<usize, S> = BTreeMap::new();
        for &(var, coef) in terms {
            if var.0 >= self.vars.len() {
                return Err(LpError::UnknownVariable { index: var.0 });
            }
            if !coef.is_finite() {
                return Err(LpError::NonFinite {
                    context: format!("row {row}, variable {}", self.vars[var.0].name),
                });
            }
            *merged.entry(var.0).or_insert_with(S::zero) += coef;
        }
        let terms: Vec<(usize, S)> =
            merged.into_iter().filter(|&(_, c)| c != S::zero()).collect();
        self.rows.push(Row { terms, lb, ub });
        Ok(RowId(row))
    }

    pub fn num_vars(&self) -> usize {
        self.vars.len()
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn nonzeros(&self) -> usize {
        self.rows.iter().map(|r| r.terms.len()).sum()
    }

    pub fn size(&self) -> ProblemSize {
        ProblemSize {
            variables: self.num_vars(),
            constraints: self.num_rows(),
            nonzeros: self.nonzeros(),
        }
    }

    pub fn var_name(&self, var: VarId) -> &str {
        &self.vars[var.0].name
    }

    pub fn var_bounds(&self, var: VarId) -> (S, S) {
        (self.vars[var.0].lb, self.vars[var.0].ub)
    }

    pub fn var_by_name(&self, name: &str) -> Option<VarId> {
        self.by_name.get(name).map(|&i| VarId(i))
    }

    /// Row terms as `(variable, coefficient)` pairs.
    pub fn row_terms(&self, row: RowId) -> impl Iterator<Item = (VarId, S)> + '_ {
        self.rows[row.0].terms.iter().map(|&(v, c)| (VarId(v), c))
    }

    pub fn row_bounds(&self, row: RowId) -> (S, S) {
        (self.rows[row.0].lb, self.rows[row.0].ub)
    }

    /// Objective value of an assignment (one value per variable).
    pub fn objective_value(&self, values: &[S]) -> S {
        self.vars.iter().zip(values).map(|(v, &x)| v.obj * x).sum()
    }

    pub(crate) fn var_slice(&self) -> &[Variable<S>] {
        &self.vars
    }

    pub(crate) fn row_slice(&self) -> &[Row<S>] {
        &self.rows
    }
}

/// Worst-case constraint and bound violations of an assignment, computed
/// directly from the problem data (independent of any solver internals).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FeasibilityReport<S> {
    pub max_row_violation: S,
    pub max_bound_violation: S,
}

impl<S: Scalar> FeasibilityReport<S> {
    pub fn within(&self, tol: S) -> bool {
        self.max_row_violation <= tol && self.max_bound_violation <= tol
    }
}

/// Measures how far `values` is from satisfying every row and bound.
pub fn check_feasibility<S: Scalar>(lp: &LpProblem<S>, values: &[S]) -> FeasibilityReport<S> {
    assert_eq!(values.len(), lp.num_vars(), "value vector length mismatch");
    let mut row_viol = S::zero();
    for row in &lp.rows {
        let lhs: S = row.terms.iter().map(|&(v, c)| c * values[v]).sum();
        if lhs < row.lb {
            row_viol = row_viol.max(row.lb - lhs);
        }
        if lhs > row.ub {
            row_viol = row_viol.max(lhs - row.ub);
        }
    }
    let mut bound_viol = S::zero();
    for (var, &x) in lp.vars.iter().zip(values) {
        if x < var.lb {
            bound_viol = bound_viol.max(var.lb - x);
        }
        if x > var.ub {
            bound_viol = bound_viol.max(x - var.ub);
        }
    }
    FeasibilityReport { max_row_violation: row_viol, max_bound_violation: bound_viol }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn add_var_registers_and_rejects_duplicates() {
        let mut lp = LpProblem::<f64>::new("t");
        let v = lp.add_var("K_s1", 0.0, 50.0, 120.0).unwrap();
        assert_eq!(v.index(), 0);
        assert!(matches!(
            lp.add_var("K_s1", 0.0, 1.0, 0.0),
            Err(LpError::DuplicateVariable(_))
        ));
    }

    #[test]
    fn inverted_bounds_are_rejected() {
        let mut lp = LpProblem::<f64>::new("t");
        assert!(matches!(
            lp.add_var("x", 5.0, 3.0, 0.0),
            Err(LpError::InvalidBounds { .. })
        ));
    }

    #[test]
    fn zero_coefficients_are_dropped() {
        let mut lp = LpProblem::<f64>::new("t");
        let x = lp.add_var("x", 0.0, 1.0, 0.0).unwrap();
        let y = lp.add_var("y", 0.0, 1.0, 0.0).unwrap();
        let r = lp.add_constraint(&[(x, 1.0), (y, 0.0)], 1.0, 1.0).unwrap();
        assert_eq!(lp.row_terms(r).count(), 1);
    }

    #[test]
    fn duplicate_terms_are_merged() {
        let mut lp = LpProblem::<f64>::new("t");
        let x = lp.add_var("x", 0.0, 1.0, 0.0).unwrap();
        let r = lp.add_constraint(&[(x, 1.0), (x, 2.0)], 0.0, 3.0).unwrap();
        let terms: Vec<_> = lp.row_terms(r).collect();
        assert_eq!(terms, vec![(x, 3.0)]);
    }

    #[test]
    fn empty_infeasible_row_is_accepted() {
        let mut lp = LpProblem::<f64>::new("t");
        let r = lp.add_constraint(&[], 1.0, 1.0).unwrap();
        assert_eq!(lp.row_terms(r).count(), 0);
        assert_eq!(lp.num_rows(), 1);
    }

    #[test]
    fn unknown_handle_is_rejected() {
        let mut lp = LpProblem::<f64>::new("t");
        lp.add_var("x", 0.0, 1.0, 0.0).unwrap();
        let stale = VarId(7);
        assert!(matches!(
            lp.add_constraint(&[(stale, 1.0)], 0.0, 1.0),
            Err(LpError::UnknownVariable { index: 7 })
        ));
    }

    #[test]
    fn feasibility_report_measures_violations() {
        let mut lp = LpProblem::<f64>::new("t");
        let x = lp.add_var("x", 0.0, 10.0, 1.0).unwrap();
        lp.add_constraint(&[(x, 1.0)], 3.0, 5.0).unwrap();
        let rep = check_feasibility(&lp, &[2.0]);
        assert_eq!(rep.max_row_violation, 1.0);
        assert_eq!(rep.max_bound_violation, 0.0);
        let rep = check_feasibility(&lp, &[11.0]);
        assert_eq!(rep.max_row_violation, 6.0);
        assert_eq!(rep.max_bound_violation, 1.0);
    }
}
