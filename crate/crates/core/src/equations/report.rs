//! Residual reports shared by all equation checkers.

use crate::envelope::Series;
use crate::scalar::Scalar;
use serde::Serialize;
use std::fmt::Write as _;

/// Residual of one equation restricted to one weight.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct WeightResidual {
    /// Total weight.
    pub weight: u32,
    /// Dimension of the coordinate space at this weight.
    pub dim: usize,
    /// First nonzero coordinate as `(monomial, coefficient)`, if any.
    pub first_nonzero: Option<(String, String)>,
    /// Number of nonzero coordinates.
    pub support: usize,
    /// Largest coefficient magnitude.
    pub max_magnitude: f64,
}

/// Residuals of one equation at every weight.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EquationResidual {
    /// Equation name.
    pub name: String,
    /// Algebra in which the equation lives.
    pub algebra: String,
    /// One entry per weight `1..=N`.
    pub weights: Vec<WeightResidual>,
}

impl EquationResidual {
    /// Build from `lhs - rhs`; coefficients with `is_negligible` count as zero.
    pub fn from_difference<S: Scalar>(name: &str, diff: &Series<S>) -> Self {
        let env = diff.env();
        let mut weights = Vec::new();
        for d in 1..=diff.truncation() {
            let comp = diff.component(d);
            let nonzero: Vec<_> = comp.terms().iter().filter(|(_, c)| !c.is_zero()).collect();
            let significant: Vec<_> = nonzero.iter().filter(|(_, c)| !c.is_negligible()).collect();
            let first_nonzero = significant.first().map(|(m, c)| (env.render_mono(m), c.render()));
            weights.push(WeightResidual {
                weight: d,
                dim: env.monomials(d).len(),
                first_nonzero,
                support: significant.len(),
                max_magnitude: nonzero.iter().map(|(_, c)| c.magnitude()).fold(0.0, f64::max),
            });
        }
        EquationResidual { name: name.to_string(), algebra: env.quotient().family().to_string(), weights }
    }

    /// True when every weight vanishes.
    pub fn is_zero(&self) -> bool {
        self.weights.iter().all(|w| w.first_nonzero.is_none())
    }

    /// Largest coefficient magnitude over all weights.
    pub fn max_magnitude(&self) -> f64 {
        self.weights.iter().map(|w| w.max_magnitude).fold(0.0, f64::max)
    }

    /// Lowest weight with a nonzero residual.
    pub fn first_failing_weight(&self) -> Option<u32> {
        self.weights.iter().find(|w| w.first_nonzero.is_some()).map(|w| w.weight)
    }
}

/// A titled collection of equation residuals.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    /// Title line.
    pub title: String,
    /// Free-form `key=value` parameters.
    pub params: Vec<(String, String)>,
    /// Residual blocks in a fixed order.
    pub equations: Vec<EquationResidual>,
}

impl Report {
    /// Empty report.
    pub fn new(title: &str) -> Self {
        Report { title: title.to_string(), params: Vec::new(), equations: Vec::new() }
    }

    /// Add a parameter.
    pub fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.params.push((key.to_string(), value.to_string()));
        self
    }

    /// Append a residual block computed from `lhs - rhs`.
    pub fn push<S: Scalar>(&mut self, name: &str, diff: &Series<S>) {
        self.equations.push(EquationResidual::from_difference(name, diff));
    }

    /// True when every residual vanishes.
    pub fn is_zero(&self) -> bool {
        self.equations.iter().all(EquationResidual::is_zero)
    }

    /// Largest residual magnitude over all equations.
    pub fn max_magnitude(&self) -> f64 {
        self.equations.iter().map(EquationResidual::max_magnitude).fold(0.0, f64::max)
    }

    /// Residual block by name.
    pub fn equation(&self, name: &str) -> Option<&EquationResidual> {
        self.equations.iter().find(|e| e.name == name)
    }

    /// Text rendering: one block per equation with
    /// `weight <d>: <dim> <first nonzero coordinate or 0>` lines.
    pub fn render(&self) -> String {
        let mut s = format!("# {}", self.title);
        for (k, v) in &self.params {
            write!(s, " {k}={v}").unwrap();
        }
        s.push('\n');
        for e in &self.equations {
            writeln!(s, "[{}] in {}", e.name, e.algebra).unwrap();
            for w in &e.weights {
                match &w.first_nonzero {
                    None => writeln!(s, "weight {}: {} 0", w.weight, w.dim).unwrap(),
                    Some((m, c)) => writeln!(s, "weight {}: {} {}={}", w.weight, w.dim, m, c).unwrap(),
                }
            }
        }
        writeln!(s, "status: {}", if self.is_zero() { "ok" } else { "nonzero residual" }).unwrap();
        s
    }
}
