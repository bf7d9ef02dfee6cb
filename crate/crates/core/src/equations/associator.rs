//! Drinfeld associators: duality, hexagon and pentagon.

use super::solve::{solve_by_weight, SolveOutcome, WeightStep};
use super::{chord_exp, diff, path, sup, EquationError, Report};
use crate::envelope::{Envelope, Series};
use crate::lie::{algebra, Family, LiePoly};
use crate::scalar::{rat, Rat, Scalar};
use num_traits::Zero;
use std::sync::Arc;

/// A pair `(mu, phi)` with `phi` group-like over the free Lie algebra on
/// `x, y`.
#[derive(Clone, Debug)]
pub struct AssociatorCandidate<S: Scalar = Rat> {
    /// Coupling constant.
    pub mu: S,
    /// Group-like series over the free algebra on `x, y`.
    pub phi: Series<S>,
}

impl<S: Scalar> AssociatorCandidate<S> {
    /// Validate and wrap.
    pub fn new(mu: S, phi: Series<S>) -> Result<Self, EquationError> {
        if phi.env().quotient().family() != &Family::FreeF2 {
            return Err(EquationError::Invalid("phi must live over the free algebra on x, y".into()));
        }
        if !phi.is_group_like() {
            return Err(EquationError::Invalid("phi is not group-like".into()));
        }
        Ok(AssociatorCandidate { mu, phi })
    }

    /// The degenerate candidate `(0, 1)`.
    pub fn trivial(n: u32) -> Result<Self, EquationError> {
        let env = Envelope::of(&Family::FreeF2, n)?;
        Ok(AssociatorCandidate { mu: S::zero(), phi: Series::one(&env, n) })
    }

    /// Truncation of `phi`.
    pub fn truncation(&self) -> u32 {
        self.phi.truncation()
    }

    /// The framing parameter paired with `mu`; with the doubling rule for
    /// framing chords used here it equals `mu`.
    pub fn lambda(&self) -> S {
        self.mu.clone()
    }

    /// The same candidate truncated at a lower weight.
    pub fn truncate(&self, n: u32) -> Result<Self, EquationError> {
        Ok(AssociatorCandidate { mu: self.mu.clone(), phi: super::retruncate(&self.phi, n)? })
    }
}

/// Named residuals `lhs - rhs` of duality, hexagon and pentagon, truncated
/// at the weight of `phi`.
pub fn associator_residuals<S: Scalar>(c: &AssociatorCandidate<S>) -> Result<Vec<(String, Series<S>)>, EquationError> {
    let n = c.truncation();
    let e3 = Envelope::of(&Family::T { n: 3 }, n)?;
    let e4 = Envelope::of(&Family::T { n: 4 }, n)?;
    let phi = &c.phi;
    let half = rat(1, 2);
    let p123 = sup(phi, "1,2,3", &e3)?;
    let p321 = sup(phi, "3,2,1", &e3)?;
    let p231 = sup(phi, "2,3,1", &e3)?;
    let p312 = sup(phi, "3,1,2", &e3)?;
    let duality = diff(&p321, &p123.inverse()?)?;
    let r23 = chord_exp(&e3, &c.mu, &half, &[(2, 3)])?;
    let r31 = chord_exp(&e3, &c.mu, &half, &[(1, 3)])?;
    let r12 = chord_exp(&e3, &c.mu, &half, &[(1, 2)])?;
    let hex_l = path(&e3, &[&p123, &r23, &p231, &r31, &p312, &r12])?;
    let hex_r = chord_exp(&e3, &c.mu, &half, &[(1, 2), (1, 3), (2, 3)])?;
    let hexagon = diff(&hex_l, &hex_r)?;
    let q = |pattern: &str| sup(phi, pattern, &e4);
    let pent_l = path(&e4, &[&q("1,2,3")?, &q("1,23,4")?, &q("2,3,4")?])?;
    let pent_r = path(&e4, &[&q("12,3,4")?, &q("1,2,34")?])?;
    let pentagon = diff(&pent_l, &pent_r)?;
    Ok(vec![("duality".to_string(), duality), ("hexagon".to_string(), hexagon), ("pentagon".to_string(), pentagon)])
}

/// Residual report of the associator equations.
pub fn check_associator<S: Scalar>(c: &AssociatorCandidate<S>) -> Result<Report, EquationError> {
    let mut report = Report::new("associator")
        .param("mu", c.mu.render())
        .param("lambda", c.lambda().render())
        .param("N", c.truncation());
    for (name, r) in associator_residuals(c)? {
        report.push(&name, &r);
    }
    Ok(report)
}

/// Solve duality, hexagon and pentagon weight by weight for the given `mu`.
///
/// Free coordinates at each weight are set to zero; they are listed in the
/// returned steps.
pub fn solve_associator(mu: &Rat, n: u32) -> Result<(AssociatorCandidate<Rat>, Vec<WeightStep>), EquationError> {
    if mu.is_zero() {
        return Err(EquationError::Invalid("mu must be nonzero".into()));
    }
    if n == 0 {
        return Err(EquationError::Invalid("N must be at least 1".into()));
    }
    let f2 = algebra(&Family::FreeF2, n)?;
    let slots: Vec<Arc<_>> = vec![f2.clone()];
    let names = vec!["phi".to_string()];
    let residual = |vals: &[LiePoly<Rat>], d: u32| -> Result<Vec<(String, Series<Rat>)>, EquationError> {
        let env = Envelope::of(&Family::FreeF2, d)?;
        let phi = Series::exp_lie(&env, d, &vals[0].truncate(d))?;
        associator_residuals(&AssociatorCandidate { mu: mu.clone(), phi })
    };
    let init = vec![LiePoly::zero(f2.alphabet())];
    match solve_by_weight(&slots, &names, init, 1, n, &residual)? {
        SolveOutcome::Solved { values, steps } => {
            let env = Envelope::of(&Family::FreeF2, n)?;
            let phi = Series::exp_lie(&env, n, &values[0])?;
            Ok((AssociatorCandidate { mu: mu.clone(), phi }, steps))
        }
        SolveOutcome::Obstructed { obstruction, .. } => Err(EquationError::Obstruction(Box::new(obstruction))),
    }
}
