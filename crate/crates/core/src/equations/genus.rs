//! Genus-`g` associator equations and the two forms of the elliptic
//! (genus one, unframed) system.
//!
//! Genus data are group-likes `A_{a,+}`, `A_{a,-}` (`a = 1..g`) over the two
//! strand genus algebra. The equations, with products read as paths and
//! `(U, V) = path(U, V, U^-1, V^-1)`:
//!
//! * `E0`: `A^{0,1} = 1`;
//! * `E1`: `path(alpha^{1,2,3}, alpha^{2,3,1}, alpha^{3,1,2}) = A^{123,0}` with
//!   `alpha = path(phi^{1,2,3}, A^{1,23}, e^{mu(t12+t13)/2})`;
//! * `E2`: `e^{mu t12} = (e^{mu t12/2} phi^{2,1,3} A_+^{2,13} (phi^{2,1,3})^-1 e^{mu t12/2},
//!   phi A_-^{1,23} phi^-1)`;
//! * `E3` (`g >= 2`): for `a < b` and `Z_a, Z_b` among `A_+, A_-`,
//!   `1 = (phi Z_b^{1,23} phi^-1, e^{mu t12/2} phi^{2,1,3} Z_a^{2,13} (phi^{2,1,3})^-1 e^{mu t12/2})`;
//! * `E4`: `e^{mu(t12 + 2(g-1) t11)} = prod_a ((A_{a,+})^-1, A_{a,-})`.

use super::associator::AssociatorCandidate;
use super::solve::{solve_by_weight, SolveOutcome, WeightStep};
use super::{chord_exp, diff, path, pcomm, sup, EquationError, Obstruction, Report};
use crate::envelope::{Envelope, Series};
use crate::lie::{algebra, Family, Gens, LiePoly};
use crate::scalar::{rat, rint, Rat, Scalar};
use std::sync::Arc;

/// Genus data over the two-strand genus algebra.
#[derive(Clone, Debug)]
pub struct GenusData<S: Scalar = Rat> {
    /// Genus.
    pub g: usize,
    /// `A_{a,+}` for `a = 1..g`.
    pub plus: Vec<Series<S>>,
    /// `A_{a,-}` for `a = 1..g`.
    pub minus: Vec<Series<S>>,
}

impl<S: Scalar> GenusData<S> {
    /// Validate and wrap.
    pub fn new(plus: Vec<Series<S>>, minus: Vec<Series<S>>) -> Result<Self, EquationError> {
        let g = plus.len();
        if g == 0 || minus.len() != g {
            return Err(EquationError::Invalid("need the same positive number of A_+ and A_-".into()));
        }
        let fam = plus[0].env().quotient().family().clone();
        let ok_family = matches!(fam, Family::TFG { g: h, n: 2 } | Family::TG { g: h, n: 2 } if h == g);
        if !ok_family {
            return Err(EquationError::Invalid(format!(
                "genus data must live over a two-strand genus-{g} algebra, got {fam}"
            )));
        }
        for s in plus.iter().chain(minus.iter()) {
            if s.env().quotient().family() != &fam || s.truncation() != plus[0].truncation() {
                return Err(EquationError::Invalid("genus data over mixed algebras".into()));
            }
            if !s.is_group_like() {
                return Err(EquationError::Invalid("genus data must be group-like".into()));
            }
        }
        Ok(GenusData { g, plus, minus })
    }

    /// Trivial data `A_{a,+-} = 1` over the framed (or unframed) algebra.
    pub fn trivial(g: usize, n: u32, framed: bool) -> Result<Self, EquationError> {
        let fam = if framed { Family::TFG { g, n: 2 } } else { Family::TG { g, n: 2 } };
        let env = Envelope::of(&fam, n)?;
        let one = Series::one(&env, n);
        Ok(GenusData { g, plus: vec![one.clone(); g], minus: vec![one; g] })
    }

    /// The two-strand algebra family.
    pub fn family(&self) -> &Family {
        self.plus[0].env().quotient().family()
    }

    /// Truncation.
    pub fn truncation(&self) -> u32 {
        self.plus[0].truncation()
    }

    /// Serialise every entry, each preceded by a `## A<a>+` or `## A<a>-` line.
    pub fn serialize(&self) -> String {
        let mut s = String::new();
        for a in 0..self.g {
            s.push_str(&format!("## A{}+\n{}", a + 1, self.plus[a].serialize()));
            s.push_str(&format!("## A{}-\n{}", a + 1, self.minus[a].serialize()));
        }
        s
    }
}

impl GenusData<Rat> {
    /// Parse output of [`GenusData::serialize`].
    pub fn parse(text: &str, g: usize, framed: bool) -> Result<Self, EquationError> {
        let mut blocks: Vec<(String, String)> = Vec::new();
        for line in text.lines() {
            if let Some(label) = line.strip_prefix("## ") {
                blocks.push((label.trim().to_string(), String::new()));
            } else if let Some((_, body)) = blocks.last_mut() {
                body.push_str(line);
                body.push('\n');
            }
        }
        let fam = if framed { Family::TFG { g, n: 2 } } else { Family::TG { g, n: 2 } };
        let n = blocks
            .first()
            .and_then(|(_, b)| b.lines().next())
            .and_then(|h| h.split_whitespace().find_map(|t| t.strip_prefix("N=")))
            .and_then(|v| v.parse::<u32>().ok())
            .ok_or_else(|| EquationError::Invalid("missing series header".into()))?;
        let env = Envelope::of(&fam, n)?;
        let mut plus = Vec::new();
        let mut minus = Vec::new();
        for a in 1..=g {
            for (label, dst) in [(format!("A{a}+"), &mut plus), (format!("A{a}-"), &mut minus)] {
                let body = blocks
                    .iter()
                    .find(|(l, _)| *l == label)
                    .ok_or_else(|| EquationError::Invalid(format!("missing block {label}")))?;
                dst.push(Series::parse(&env, &body.1)?);
            }
        }
        Self::new(plus, minus)
    }
}

struct Ctx<S: Scalar> {
    mu: S,
    e1: Arc<Envelope>,
    e2: Arc<Envelope>,
    e3: Arc<Envelope>,
    p123: Series<S>,
    p123i: Series<S>,
    p213: Series<S>,
    p213i: Series<S>,
    h12: Series<S>,
}

impl<S: Scalar> Ctx<S> {
    fn new(c: &AssociatorCandidate<S>, fam2: &Family, n: u32) -> Result<Self, EquationError> {
        if 2 * c.truncation() < n && fam2.has_handles() {
            return Err(EquationError::Invalid(format!(
                "phi is known through weight {} but weight {} needs {}",
                c.truncation(),
                n,
                n.div_ceil(2)
            )));
        }
        let e1 = Envelope::of(&fam2.with_n(1), n)?;
        let e2 = Envelope::of(fam2, n)?;
        let e3 = Envelope::of(&fam2.with_n(3), n)?;
        let p123 = sup(&c.phi, "1,2,3", &e3)?;
        let p213 = sup(&c.phi, "2,1,3", &e3)?;
        let h12 = chord_exp(&e3, &c.mu, &rat(1, 2), &[(1, 2)])?;
        Ok(Ctx { mu: c.mu.clone(), e1, e2, e3, p123i: p123.inverse()?, p123, p213i: p213.inverse()?, p213, h12 })
    }

    /// `path(phi, Z^{1,23}, phi^-1)`.
    fn conj_123(&self, z: &Series<S>) -> Result<Series<S>, EquationError> {
        path(&self.e3, &[&self.p123, &sup(z, "1,23", &self.e3)?, &self.p123i])
    }

    /// `path(e^{mu t12/2}, phi^{2,1,3}, Z^{2,13}, (phi^{2,1,3})^-1, e^{mu t12/2})`.
    fn conj_213(&self, z: &Series<S>) -> Result<Series<S>, EquationError> {
        path(&self.e3, &[&self.h12, &self.p213, &sup(z, "2,13", &self.e3)?, &self.p213i, &self.h12])
    }
}

/// Named residuals of the genus equations (or of the standard elliptic
/// system when the data are unframed).
pub fn genus_residuals<S: Scalar>(
    c: &AssociatorCandidate<S>,
    data: &GenusData<S>,
) -> Result<Vec<(String, Series<S>)>, EquationError> {
    let n = data.truncation();
    let fam2 = data.family().clone();
    let ctx = Ctx::new(c, &fam2, n)?;
    let g = data.g;
    let mut out = Vec::new();
    let one1 = Series::one(&ctx.e1, n);
    let one3 = Series::one(&ctx.e3, n);
    let a_half = chord_exp(&ctx.e3, &ctx.mu, &rat(1, 2), &[(1, 2), (1, 3)])?;
    for a in 0..g {
        for (tag, z) in [("+", &data.plus[a]), ("-", &data.minus[a])] {
            let label = format!("a={},{}", a + 1, tag);
            out.push((format!("E0[{label}]"), diff(&sup(z, "0,1", &ctx.e1)?, &one1)?));
            let alpha = path(&ctx.e3, &[&ctx.p123, &sup(z, "1,23", &ctx.e3)?, &a_half])?;
            let a231 = sup(&alpha, "2,3,1", &ctx.e3)?;
            let a312 = sup(&alpha, "3,1,2", &ctx.e3)?;
            let lhs = path(&ctx.e3, &[&alpha, &a231, &a312])?;
            out.push((format!("E1[{label}]"), diff(&lhs, &sup(z, "123,0", &ctx.e3)?)?));
        }
    }
    let full = chord_exp(&ctx.e3, &ctx.mu, &rint(1), &[(1, 2)])?;
    for a in 0..g {
        let u = ctx.conj_213(&data.plus[a])?;
        let v = ctx.conj_123(&data.minus[a])?;
        out.push((format!("E2[a={}]", a + 1), diff(&full, &pcomm(&u, &v)?)?));
    }
    for a in 0..g {
        for b in a + 1..g {
            for (ta, za) in [("+", &data.plus[a]), ("-", &data.minus[a])] {
                for (tb, zb) in [("+", &data.plus[b]), ("-", &data.minus[b])] {
                    let u = ctx.conj_123(zb)?;
                    let v = ctx.conj_213(za)?;
                    out.push((format!("E3[a={}{ta},b={}{tb}]", a + 1, b + 1), diff(&pcomm(&u, &v)?, &one3)?));
                }
            }
        }
    }
    let mut prod = Vec::with_capacity(g);
    for a in 0..g {
        prod.push(pcomm(&data.plus[a].inverse()?, &data.minus[a])?);
    }
    let refs: Vec<&Series<S>> = prod.iter().collect();
    let lhs = path(&ctx.e2, &refs)?;
    let h = Gens { alphabet: ctx.e2.quotient().alphabet() };
    let mut target = h.t(1, 2);
    if fam2.framed() {
        target = h.add(&target, &h.t(1, 1).scale_rat(&rint(2 * (g as i64 - 1))));
    }
    let target = target.map_scalar(|r| S::from_rat(r)).scale(&ctx.mu);
    let rhs = Series::exp_lie(&ctx.e2, n, &target)?;
    out.push(("E4".to_string(), diff(&rhs, &lhs)?));
    Ok(out)
}

/// Residual report of the genus equations.
pub fn check_genus<S: Scalar>(c: &AssociatorCandidate<S>, data: &GenusData<S>) -> Result<Report, EquationError> {
    let mut report = Report::new("genus").param("g", data.g).param("mu", c.mu.render()).param("N", data.truncation());
    for (name, r) in genus_residuals(c, data)? {
        report.push(&name, &r);
    }
    Ok(report)
}

/// Outcome of the genus solver.
#[derive(Clone, Debug)]
pub enum GenusOutcome {
    /// Data with vanishing residuals through the requested weight.
    Solved {
        /// The data.
        data: GenusData<Rat>,
        /// Per-weight steps (weight one is fixed by the seed).
        steps: Vec<WeightStep>,
    },
    /// The first weight at which the affine system is inconsistent.
    Obstructed(Box<Obstruction>),
}

/// Weight-one seed: `A_{a,+} = exp(x_1^a)`, `A_{a,-} = exp(-mu y_1^a)`.
///
/// The weight-two equations are quadratic in the weight-one unknowns, so the
/// seed is fixed by hand: `[x_1^a, -mu y_1^a]` sums over `a` to
/// `mu (t12 + 2(g-1) t11)`, as the last equation requires.
pub fn genus_seed(q: &Arc<crate::lie::GradedQuotient>, g: usize, mu: &Rat) -> Vec<LiePoly<Rat>> {
    let h = Gens { alphabet: q.alphabet() };
    let mut out = Vec::new();
    for a in 1..=g {
        out.push(h.x(1, a));
    }
    for a in 1..=g {
        out.push(h.y(1, a).scale_rat(&-mu.clone()));
    }
    out
}

fn solve_family(c: &AssociatorCandidate<Rat>, fam2: Family, g: usize, n: u32) -> Result<GenusOutcome, EquationError> {
    let q = algebra(&fam2, n)?;
    let slots: Vec<_> = (0..2 * g).map(|_| q.clone()).collect();
    let mut names: Vec<String> = (1..=g).map(|a| format!("A{a}+")).collect();
    names.extend((1..=g).map(|a| format!("A{a}-")));
    let build = |vals: &[LiePoly<Rat>], d: u32| -> Result<GenusData<Rat>, EquationError> {
        let env = Envelope::of(&fam2, d)?;
        let mut s = Vec::with_capacity(2 * g);
        for v in vals {
            s.push(Series::exp_lie(&env, d, &v.truncate(d))?);
        }
        let minus = s.split_off(g);
        Ok(GenusData { g, plus: s, minus })
    };
    let residual = |vals: &[LiePoly<Rat>], d: u32| -> Result<Vec<(String, Series<Rat>)>, EquationError> {
        let data = build(vals, d)?;
        let cd = c.truncate(c.truncation().min(d))?;
        genus_residuals(&cd, &data)
    };
    let seed = genus_seed(&q, g, &c.mu);
    let from = 2;
    let outcome = if n < from {
        SolveOutcome::Solved { values: seed.iter().map(|v| v.truncate(n)).collect(), steps: vec![] }
    } else {
        solve_by_weight(&slots, &names, seed.clone(), from, n, &residual)?
    };
    // Keep the weight-one seed: the solver only discards weights >= from.
    match outcome {
        SolveOutcome::Solved { values, steps } => Ok(GenusOutcome::Solved { data: build(&values, n)?, steps }),
        SolveOutcome::Obstructed { obstruction, .. } => Ok(GenusOutcome::Obstructed(Box::new(obstruction))),
    }
}

/// Solve the framed genus-`g` equations through weight `n` for an associator
/// known through weight `ceil(n/2)`.
pub fn solve_genus(c: &AssociatorCandidate<Rat>, g: usize, n: u32) -> Result<GenusOutcome, EquationError> {
    if g == 0 {
        return Err(EquationError::Invalid("g must be at least 1".into()));
    }
    solve_family(c, Family::TFG { g, n: 2 }, g, n)
}

/// Which presentation of the elliptic system to check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EllipticForm {
    /// `A_{+-}` with the standard equations.
    Standard,
    /// Transported `A~_{+-}` with the alternative equations.
    Bis,
}

/// Solve the standard elliptic system over the unframed genus-one algebra.
pub fn solve_elliptic(c: &AssociatorCandidate<Rat>, n: u32) -> Result<GenusOutcome, EquationError> {
    solve_family(c, Family::TG { g: 1, n: 2 }, 1, n)
}

/// `A~ = path(e^{mu t12/2}, (A^{2,1})^-1, e^{-mu t12/2})`.
pub fn transport_to_bis<S: Scalar>(mu: &S, a: &Series<S>) -> Result<Series<S>, EquationError> {
    let env = a.env().clone();
    let r = chord_exp(&env, mu, &rat(1, 2), &[(1, 2)])?;
    let ri = chord_exp(&env, mu, &rat(-1, 2), &[(1, 2)])?;
    let swapped = sup(a, "2,1", &env)?.inverse()?;
    path(&env, &[&r, &swapped, &ri])
}

/// Named residuals of the alternative elliptic equations for `A~_{+-}`.
pub fn elliptic_bis_residuals<S: Scalar>(
    c: &AssociatorCandidate<S>,
    plus: &Series<S>,
    minus: &Series<S>,
) -> Result<Vec<(String, Series<S>)>, EquationError> {
    let n = plus.truncation();
    let fam2 = plus.env().quotient().family().clone();
    let ctx = Ctx::new(c, &fam2, n)?;
    let mut out = Vec::new();
    let one1 = Series::one(&ctx.e1, n);
    let neg_half = chord_exp(&ctx.e3, &c.mu, &rat(-1, 2), &[(1, 2)])?;
    for (tag, z) in [("+", plus), ("-", minus)] {
        out.push((format!("AS1[{tag}]"), diff(&sup(z, "1,0", &ctx.e1)?, &one1)?));
        let lhs = path(&ctx.e3, &[&sup(z, "12,3", &ctx.e3)?, &sup(z, "0,123", &ctx.e3)?])?;
        let rhs = path(
            &ctx.e3,
            &[
                &ctx.p123,
                &sup(z, "1,23", &ctx.e3)?,
                &ctx.p123i,
                &neg_half,
                &ctx.p213,
                &sup(z, "2,13", &ctx.e3)?,
                &ctx.p213i,
                &neg_half,
            ],
        )?;
        out.push((format!("AS2[{tag}]"), diff(&lhs, &rhs)?));
    }
    let u = sup(plus, "12,3", &ctx.e3)?.inverse()?;
    let v = path(
        &ctx.e3,
        &[&sup(minus, "12,3", &ctx.e3)?.inverse()?, &ctx.p123i, &sup(minus, "1,23", &ctx.e3)?, &ctx.p123],
    )?;
    let t23 = chord_exp(&ctx.e3, &c.mu, &rint(1), &[(2, 3)])?;
    let rhs = path(&ctx.e3, &[&ctx.p123, &t23, &ctx.p123i])?;
    out.push(("AS3".to_string(), diff(&pcomm(&u, &v)?, &rhs)?));
    let full = chord_exp(&ctx.e2, &c.mu, &rint(1), &[(1, 2)])?;
    out.push(("AS4".to_string(), diff(&full, &pcomm(plus, &minus.inverse()?)?)?));
    Ok(out)
}

/// Residual report of the elliptic equations in either form. For the
/// alternative form `plus`/`minus` are the transported `A~_{+-}`.
pub fn check_elliptic<S: Scalar>(
    c: &AssociatorCandidate<S>,
    plus: &Series<S>,
    minus: &Series<S>,
    form: EllipticForm,
) -> Result<Report, EquationError> {
    if plus.env().quotient().family() != &(Family::TG { g: 1, n: 2 }) {
        return Err(EquationError::Invalid(format!(
            "elliptic data must live over the unframed genus-one algebra on two strands, got {}",
            plus.env().quotient().family()
        )));
    }
    let (title, residuals) = match form {
        EllipticForm::Standard => {
            let data = GenusData { g: 1, plus: vec![plus.clone()], minus: vec![minus.clone()] };
            ("elliptic standard", genus_residuals(c, &data)?)
        }
        EllipticForm::Bis => ("elliptic bis", elliptic_bis_residuals(c, plus, minus)?),
    };
    let mut report = Report::new(title).param("mu", c.mu.render()).param("N", plus.truncation());
    for (name, r) in residuals {
        report.push(&name, &r);
    }
    Ok(report)
}
