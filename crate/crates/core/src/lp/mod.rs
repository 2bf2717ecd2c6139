//! Exact rational linear feasibility.
//!
//! Two engines live here. [`simplex`] is a general phase-one simplex over
//! `BigRational` with Bland's rule. [`flow`] is an integer max-flow used for
//! the transportation-shaped systems that come out of diagram compression.
//! All variables of an [`LpInstance`] are nonnegative.

pub mod flow;
pub mod simplex;
mod vertex;

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use simplex::{solve_feasibility, solve_feasibility_traced};
pub use vertex::{drive_to_vertex, is_vertex};

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Sense {
    Le,
    Eq,
    Ge,
}

/// One constraint `sum coeff * x  (<=|=|>=)  rhs`, stored sparsely.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Row {
    pub coeffs: Vec<(usize, Rational)>,
    pub sense: Sense,
    pub rhs: Rational,
}

impl Row {
    pub fn eval(&self, x: &[Rational]) -> Rational {
        self.coeffs
            .iter()
            .fold(Rational::zero(), |acc, (j, a)| acc + a * &x[*j])
    }

    pub fn holds(&self, x: &[Rational]) -> bool {
        let lhs = self.eval(x);
        match self.sense {
            Sense::Le => lhs <= self.rhs,
            Sense::Eq => lhs == self.rhs,
            Sense::Ge => lhs >= self.rhs,
        }
    }

    /// True when the row holds with equality at `x`.
    pub fn is_tight(&self, x: &[Rational]) -> bool {
        self.eval(x) == self.rhs
    }

    pub fn dense(&self, nvars: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); nvars];
        for (j, a) in &self.coeffs {
            v[*j] += a;
        }
        v
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LpInstance {
    names: Vec<String>,
    rows: Vec<Row>,
}

impl LpInstance {
    pub fn new(names: Vec<String>) -> Self {
        LpInstance {
            names,
            rows: Vec::new(),
        }
    }

    pub fn add_row(&mut self, coeffs: Vec<(usize, Rational)>, sense: Sense, rhs: Rational) {
        assert!(
            coeffs.iter().all(|(j, _)| *j < self.names.len()),
            "row references an undeclared variable"
        );
        self.rows.push(Row { coeffs, sense, rhs });
    }

    pub fn num_vars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn rows(&self) -> &[Row] {
        &self.rows
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Index of the first violated row, if any. Negative coordinates are
    /// reported as row `rows().len() + var`.
    pub fn first_violation(&self, x: &[Rational]) -> Option<usize> {
        if let Some(j) = x.iter().position(|v| v.is_negative()) {
            return Some(self.rows.len() + j);
        }
        self.rows.iter().position(|r| !r.holds(x))
    }

    pub fn check(&self, x: &[Rational]) -> Result<()> {
        match self.first_violation(x) {
            Some(i) => Err(Error::InfeasiblePoint(i)),
            None => Ok(()),
        }
    }
}

impl fmt::Display for LpInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            let lhs: Vec<String> = row
                .coeffs
                .iter()
                .map(|(j, a)| format!("{a}*{}", self.names[*j]))
                .collect();
            let op = match row.sense {
                Sense::Le => "<=",
                Sense::Eq => "=",
                Sense::Ge => ">=",
            };
            writeln!(f, "{} {op} {}", lhs.join(" + "), row.rhs)?;
        }
        Ok(())
    }
}

/// A point of an instance, one value per declared variable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessPoint {
    pub values: Vec<Rational>,
}

impl WitnessPoint {
    pub fn get(&self, var: usize) -> &Rational {
        &self.values[var]
    }

    pub fn is_integral(&self) -> bool {
        self.values.iter().all(|v| v.is_integer())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FeasibilityResult {
    Feasible {
        point: WitnessPoint,
        is_vertex: bool,
    },
    Infeasible,
}

impl FeasibilityResult {
    pub fn is_feasible(&self) -> bool {
        matches!(self, FeasibilityResult::Feasible { .. })
    }

    pub fn point(&self) -> Option<&WitnessPoint> {
        match self {
            FeasibilityResult::Feasible { point, .. } => Some(point),
            FeasibilityResult::Infeasible => None,
        }
    }
}

/// Returns the vertex if every coordinate is an integer.
///
/// A fractional coordinate on the polytopes built in this crate would mean
/// the constraint matrix is not totally unimodular, so it is reported as an error
/// rather than rounded.
pub fn assert_integral_vertex(
    instance: &LpInstance,
    result: &FeasibilityResult,
) -> Result<Option<WitnessPoint>> {
    let FeasibilityResult::Feasible { point, is_vertex } = result else {
        return Ok(None);
    };
    debug_assert!(*is_vertex);
    if let Some(j) = point.values.iter().position(|v| !v.is_integer()) {
        return Err(Error::NonIntegralVertex {
            var: instance.names[j].clone(),
            value: point.values[j].to_string(),
        });
    }
    Ok(Some(point.clone()))
}
