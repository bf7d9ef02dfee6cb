//! Checkers and weight-by-weight solvers for the associator, genus, elliptic,
//! GT and GRT equation systems, and the flatness check of the framed KZ form.
//!
//! Displayed products of group elements are read as composites of paths:
//! the first factor is traversed first, which corresponds to the reversed
//! product in the enveloping algebra ([`Series::path`]). Commutators are
//! `(A, B) = path(A, B, A^-1, B^-1)`.

pub mod associator;
pub mod flatness;
pub mod genus;
pub mod grt;
pub mod gt;
pub mod random;
pub mod report;
pub mod solve;

pub use associator::{associator_residuals, check_associator, solve_associator, AssociatorCandidate};
pub use flatness::{check_flatness, FlatnessProblem, FlatnessResult};
pub use genus::{
    check_elliptic, check_genus, solve_elliptic, solve_genus, transport_to_bis, EllipticForm, GenusData, GenusOutcome,
};
pub use grt::{check_grt, check_grtg, grt_residuals, grtg_residuals, GrtElement, GrtgElement};
pub use gt::{check_gt, gt_residuals, GtElement};
pub use random::{random_group_like, random_lambda};
pub use report::{EquationResidual, Report, WeightResidual};
pub use solve::{Obstruction, SolveOutcome, WeightStep};

use crate::cabling::{cable, superscript, CablingError, StrandAssignment};
use crate::envelope::{Envelope, Series, SeriesError};
use crate::lie::{Family, Gens, LieMap, LiePoly, QuotientError};
use crate::scalar::{Rat, Scalar};
use std::sync::Arc;

/// Errors raised by the equation modules.
#[derive(Clone, Debug, PartialEq, thiserror::Error)]
pub enum EquationError {
    /// Invalid input data.
    #[error("invalid input: {0}")]
    Invalid(String),
    /// A solver met an inconsistent system.
    #[error("{}", .0.render())]
    Obstruction(Box<Obstruction>),
    /// Error from the Lie engine.
    #[error(transparent)]
    Quotient(#[from] QuotientError),
    /// Error from the enveloping algebra.
    #[error(transparent)]
    Series(#[from] SeriesError),
    /// Transport of braid words failed.
    #[error("transport failure: {0}")]
    Transport(String),
    /// Error from cabling.
    #[error(transparent)]
    Cabling(#[from] CablingError),
}

/// `exp(mu * c * sum of the listed chords)` in `env`.
pub fn chord_exp<S: Scalar>(
    env: &Arc<Envelope>,
    mu: &S,
    c: &Rat,
    chords: &[(usize, usize)],
) -> Result<Series<S>, EquationError> {
    let h = Gens { alphabet: env.quotient().alphabet() };
    let mut sum = LiePoly::<Rat>::zero(env.quotient().alphabet());
    for &(i, j) in chords {
        sum = h.add(&sum, &h.t(i, j));
    }
    let coef = mu.mul_rat(c);
    let lie = sum.map_scalar(|r| S::from_rat(r)).scale(&coef);
    Ok(Series::exp_lie(env, env.quotient().max_weight(), &lie)?)
}

/// Superscript evaluation with errors mapped into [`EquationError`].
pub fn sup<S: Scalar>(s: &Series<S>, pattern: &str, env: &Arc<Envelope>) -> Result<Series<S>, EquationError> {
    Ok(superscript(s, pattern, env)?)
}

/// Composite path.
pub fn path<S: Scalar>(env: &Arc<Envelope>, factors: &[&Series<S>]) -> Result<Series<S>, EquationError> {
    Ok(Series::path(env, env.quotient().max_weight(), factors)?)
}

/// Path commutator `(a, b)`.
pub fn pcomm<S: Scalar>(a: &Series<S>, b: &Series<S>) -> Result<Series<S>, EquationError> {
    Ok(a.path_commutator(b)?)
}

/// `lhs - rhs`.
pub fn diff<S: Scalar>(lhs: &Series<S>, rhs: &Series<S>) -> Result<Series<S>, EquationError> {
    Ok(lhs.sub(rhs)?)
}

/// Re-express a series in the enveloping algebra of the same family at
/// another truncation (lower or equal to the source bound).
pub fn retruncate<S: Scalar>(s: &Series<S>, n: u32) -> Result<Series<S>, EquationError> {
    let env = Envelope::of(s.env().quotient().family(), n)?;
    Ok(Series::exp_lie(&env, n, &s.log()?.truncate(n))?)
}

/// `f(a, b)` for `f` group-like over the free algebra on `x, y` and Lie
/// elements `a`, `b` of the algebra of `env`: `exp(log f (x := a, y := b))`.
pub fn substitute_f2(
    f: &Series<Rat>,
    a: &LiePoly<Rat>,
    b: &LiePoly<Rat>,
    env: &Arc<Envelope>,
) -> Result<Series<Rat>, EquationError> {
    let map = LieMap::new(f.env().quotient().alphabet().clone(), env.quotient().clone(), vec![a.clone(), b.clone()])?;
    let n = env.quotient().max_weight();
    Ok(Series::exp_lie(env, n, &map.apply(&f.log()?.truncate(n))?)?)
}

/// Cable a Lie element of `src` along `pattern` into the algebra of `env`.
pub fn cable_lie(
    a: &LiePoly<Rat>,
    src: &Family,
    pattern: &str,
    env: &Arc<Envelope>,
) -> Result<LiePoly<Rat>, EquationError> {
    let q = env.quotient();
    let assignment = StrandAssignment::parse(pattern, Some(q.family().n()))?;
    Ok(cable(a, src, q.family(), q.max_weight(), &assignment)?)
}

/// `path(g, a, g^-1)`: the adjoint action with displayed products read as
/// paths.
pub fn ad_path(g: &Series<Rat>, a: &Series<Rat>) -> Result<Series<Rat>, EquationError> {
    path(a.env(), &[g, a, &g.inverse()?])
}

/// Ordinary bracket `ab - ba` of two series.
pub fn series_bracket(a: &Series<Rat>, b: &Series<Rat>) -> Result<Series<Rat>, EquationError> {
    Ok(a.mul(b)?.sub(&b.mul(a)?)?)
}
