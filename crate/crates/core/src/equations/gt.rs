//! The Grothendieck–Teichmüller group `GT` in its Magnus form.
//!
//! An element is a pair `(lambda, f)` with `f` group-like over the free
//! algebra on `x, y`; the free generators are `X = e^x`, `Y = e^y`, and
//! `f(a, b)` means `exp(log f (x := log a, y := log b))`.
//!
//! The first two relations live in the free group. The third lives in the
//! pure braid group on four strands; the generators `x_ij` are transported
//! to the chord side by evaluating their parenthesized braid words with an
//! associator. Products are read as paths. The group law is
//! `(l1, f1)(l2, f2) = (l1 l2, f1(x^l2, f2 y^l2 f2^-1) f2)`.

use super::{ad_path, diff, path, substitute_f2, AssociatorCandidate, EquationError, Report};
use crate::braid::{pure_braid_generator, Evaluator};
use crate::envelope::{Envelope, Series};
use crate::lie::{Family, LiePoly};
use crate::scalar::{rat, Rat, Scalar};
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::sync::Arc;

/// An element `(lambda, f)` of `GT`.
#[derive(Clone, Debug, PartialEq)]
pub struct GtElement {
    /// Exponent parameter.
    pub lambda: Rat,
    /// Group-like series over the free algebra on `x, y`.
    pub f: Series<Rat>,
}

fn free_gens(env: &Arc<Envelope>) -> (LiePoly<Rat>, LiePoly<Rat>) {
    let a = env.quotient().alphabet();
    (LiePoly::generator(a, 0), LiePoly::generator(a, 1))
}

fn exp(env: &Arc<Envelope>, a: &LiePoly<Rat>) -> Result<Series<Rat>, EquationError> {
    Ok(Series::exp_lie(env, env.quotient().max_weight(), a)?)
}

impl GtElement {
    /// Validate and wrap.
    pub fn new(lambda: Rat, f: Series<Rat>) -> Result<Self, EquationError> {
        if lambda.is_zero() {
            return Err(EquationError::Invalid("lambda must be nonzero".into()));
        }
        if f.env().quotient().family() != &Family::FreeF2 || !f.is_group_like() {
            return Err(EquationError::Invalid("f must be group-like over the free algebra on x, y".into()));
        }
        Ok(GtElement { lambda, f })
    }

    /// The unit `(1, 1)` through weight `n`.
    pub fn identity(n: u32) -> Result<Self, EquationError> {
        let env = Envelope::of(&Family::FreeF2, n)?;
        Ok(GtElement { lambda: Rat::one(), f: Series::one(&env, n) })
    }

    /// Truncation.
    pub fn truncation(&self) -> u32 {
        self.f.truncation()
    }

    /// `nu = (lambda - 1) / 2`.
    pub fn nu(&self) -> Rat {
        (&self.lambda - Rat::one()) * rat(1, 2)
    }

    /// Group law.
    pub fn mul(&self, other: &Self) -> Result<Self, EquationError> {
        if self.truncation() != other.truncation() {
            return Err(EquationError::Invalid("truncations differ".into()));
        }
        let env = other.f.env().clone();
        let (x, y) = free_gens(&env);
        let l2 = &other.lambda;
        let y_pow = exp(&env, &y.scale(l2))?;
        let b = ad_path(&other.f, &y_pow)?.log()?;
        let first = substitute_f2(&self.f, &x.scale(l2), &b, &env)?;
        Ok(GtElement { lambda: &self.lambda * l2, f: path(&env, &[&first, &other.f])? })
    }
}

/// Named residuals of the three `GT` relations. The pure braid relation is
/// evaluated with `assoc`, which must be known through the weight of `f`.
///
/// The pure braid relation is checked in the form
/// `f(x13 x23, x34) f(x12, x23 x24) = f(x12, x23) f(x12 x13, x24 x34) f(x23, x34)`,
/// where both arguments of the middle factor are cabled generators.
pub fn gt_residuals(
    e: &GtElement,
    assoc: &AssociatorCandidate<Rat>,
) -> Result<Vec<(String, Series<Rat>)>, EquationError> {
    let f = &e.f;
    let env = f.env().clone();
    let n = e.truncation();
    let (x, y) = free_gens(&env);
    let duality = diff(f, &substitute_f2(f, &y, &x, &env)?.inverse()?)?;

    let x1 = exp(&env, &x)?;
    let x2 = exp(&env, &y)?;
    let x3 = path(&env, &[&x1, &x2])?.inverse()?;
    let logs = [x1.log()?, x2.log()?, x3.log()?];
    let nu = e.nu();
    let pw = |i: usize| exp(&env, &logs[i].scale(&nu));
    let fv = |i: usize, j: usize| substitute_f2(f, &logs[i], &logs[j], &env);
    let cycle_lhs = path(&env, &[&pw(0)?, &fv(0, 1)?, &pw(1)?, &fv(1, 2)?, &pw(2)?, &fv(2, 0)?])?;
    let cycle = diff(&cycle_lhs, &Series::one(&env, n))?;

    let e4 = Envelope::of(&Family::T { n: 4 }, n)?;
    let ev = Evaluator::new(assoc, false, n).map_err(|err| EquationError::Transport(err.to_string()))?;
    let mut gens: BTreeMap<(usize, usize), Series<Rat>> = BTreeMap::new();
    for i in 1..=4 {
        for j in i + 1..=4 {
            let w = pure_braid_generator(4, i, j).map_err(|err| EquationError::Transport(err.to_string()))?;
            let v = ev.evaluate(&w).map_err(|err| EquationError::Transport(err.to_string()))?;
            gens.insert((i, j), v);
        }
    }
    let g = |i: usize, j: usize| &gens[&(i, j)];
    let prod =
        |a: &Series<Rat>, b: &Series<Rat>| -> Result<LiePoly<Rat>, EquationError> { Ok(path(&e4, &[a, b])?.log()?) };
    let fe = |a: LiePoly<Rat>, b: LiePoly<Rat>| substitute_f2(f, &a, &b, &e4);
    let lg = |i: usize, j: usize| -> Result<LiePoly<Rat>, EquationError> { Ok(g(i, j).log()?) };
    let lhs = path(&e4, &[&fe(prod(g(1, 3), g(2, 3))?, lg(3, 4)?)?, &fe(lg(1, 2)?, prod(g(2, 3), g(2, 4))?)?])?;
    let rhs = path(
        &e4,
        &[
            &fe(lg(1, 2)?, lg(2, 3)?)?,
            &fe(prod(g(1, 2), g(1, 3))?, prod(g(2, 4), g(3, 4))?)?,
            &fe(lg(2, 3)?, lg(3, 4)?)?,
        ],
    )?;
    let pentagon = diff(&lhs, &rhs)?;
    Ok(vec![("duality".into(), duality), ("cycle".into(), cycle), ("pentagon".into(), pentagon)])
}

/// Residual report of the `GT` relations.
pub fn check_gt(e: &GtElement, assoc: &AssociatorCandidate<Rat>) -> Result<Report, EquationError> {
    let mut r =
        Report::new("gt").param("lambda", e.lambda.render()).param("nu", e.nu().render()).param("N", e.truncation());
    for (name, s) in gt_residuals(e, assoc)? {
        r.push(&name, &s);
    }
    Ok(r)
}
