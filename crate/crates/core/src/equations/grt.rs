//! The graded Grothendieck–Teichmüller groups `GRT` and `GRT_g`.
//!
//! An element of `GRT_1` is a group-like `g(x, y)`; the cabled copies
//! `g^{1,2,3}` etc. use `x ↦ t12`, `y ↦ t23`. `GRT` is the semidirect product
//! with the rescaling action `lambda·g(x, y) = g(lambda x, lambda y)`:
//!
//! `(l1, g1)(l2, g2) = (l1 l2, (l2·g1) * g2)` with
//! `(g1 * g2)(x, y) = g1(x, Ad(g2)(y)) g2`.
//!
//! `Ad(g)(a)` and displayed products are read as paths.

use super::{ad_path, cable_lie, diff, path, series_bracket, substitute_f2, sup, EquationError, Report};
use crate::envelope::{Envelope, Series};
use crate::lie::{Family, Gens, LieMap, LiePoly};
use crate::scalar::{rint, Rat, Scalar};
use num_traits::{One, Zero};
use std::sync::Arc;

/// An element `(lambda, g)` of `GRT`.
#[derive(Clone, Debug, PartialEq)]
pub struct GrtElement {
    /// Rescaling parameter.
    pub lambda: Rat,
    /// Group-like series over the free algebra on `x, y`.
    pub g: Series<Rat>,
}

fn free_env(n: u32) -> Result<Arc<Envelope>, EquationError> {
    Ok(Envelope::of(&Family::FreeF2, n)?)
}

fn free_gens(env: &Arc<Envelope>) -> (LiePoly<Rat>, LiePoly<Rat>) {
    let a = env.quotient().alphabet();
    (LiePoly::generator(a, 0), LiePoly::generator(a, 1))
}

/// `g(c x, c y)`: the weight-`d` part is multiplied by `c^d`.
fn rescale(s: &Series<Rat>, c: &Rat) -> Series<Rat> {
    let mut out = Series::zero(s.env(), s.truncation());
    for d in 0..=s.truncation() {
        let factor = num_traits::pow(c.clone(), d as usize);
        out = out.add(&s.component(d).scale(&factor)).expect("same envelope");
    }
    out
}

impl GrtElement {
    /// Validate and wrap.
    pub fn new(lambda: Rat, g: Series<Rat>) -> Result<Self, EquationError> {
        if lambda.is_zero() {
            return Err(EquationError::Invalid("lambda must be nonzero".into()));
        }
        if g.env().quotient().family() != &Family::FreeF2 || !g.is_group_like() {
            return Err(EquationError::Invalid("g must be group-like over the free algebra on x, y".into()));
        }
        Ok(GrtElement { lambda, g })
    }

    /// The unit `(1, 1)` through weight `n`.
    pub fn identity(n: u32) -> Result<Self, EquationError> {
        Ok(GrtElement { lambda: Rat::one(), g: Series::one(&free_env(n)?, n) })
    }

    /// Truncation.
    pub fn truncation(&self) -> u32 {
        self.g.truncation()
    }

    /// The rescaling action on the `GRT_1` component.
    pub fn rescaled(&self, c: &Rat) -> Result<Self, EquationError> {
        if c.is_zero() {
            return Err(EquationError::Invalid("rescaling factor must be nonzero".into()));
        }
        Ok(GrtElement { lambda: self.lambda.clone(), g: rescale(&self.g, c) })
    }

    /// `g1 * g2` on the `GRT_1` components.
    pub fn star(g1: &Series<Rat>, g2: &Series<Rat>) -> Result<Series<Rat>, EquationError> {
        let env = g2.env().clone();
        let (x, y) = free_gens(&env);
        let n = env.quotient().max_weight();
        let ys = Series::from_lie(&env, n, &y)?;
        let ad_y = ad_path(g2, &ys)?.to_lie()?;
        let sub = substitute_f2(g1, &x, &ad_y, &env)?;
        path(&env, &[&sub, g2])
    }

    /// Group law.
    pub fn mul(&self, other: &Self) -> Result<Self, EquationError> {
        if self.truncation() != other.truncation() {
            return Err(EquationError::Invalid("truncations differ".into()));
        }
        let g = Self::star(&rescale(&self.g, &other.lambda), &other.g)?;
        Ok(GrtElement { lambda: &self.lambda * &other.lambda, g })
    }
}

/// Named residuals of the `GRT_1` relations for `g`.
pub fn grt_residuals(g: &Series<Rat>) -> Result<Vec<(String, Series<Rat>)>, EquationError> {
    let n = g.truncation();
    let e3 = Envelope::of(&Family::T { n: 3 }, n)?;
    let e4 = Envelope::of(&Family::T { n: 4 }, n)?;
    let g123 = sup(g, "1,2,3", &e3)?;
    let duality = diff(&sup(g, "3,2,1", &e3)?, &g123.inverse()?)?;
    let cycle = diff(&path(&e3, &[&g123, &sup(g, "2,3,1", &e3)?, &sup(g, "3,1,2", &e3)?])?, &Series::one(&e3, n))?;
    let h = Gens { alphabet: e3.quotient().alphabet() };
    let chord = |i, j| Series::from_lie(&e3, n, &h.t(i, j));
    let lhs =
        chord(1, 2)?.add(&ad_path(&g123, &chord(2, 3)?)?)?.add(&ad_path(&sup(g, "2,1,3", &e3)?, &chord(1, 3)?)?)?;
    let rhs = chord(1, 2)?.add(&chord(1, 3)?)?.add(&chord(2, 3)?)?;
    let hexagon = diff(&lhs, &rhs)?;
    let q = |p: &str| sup(g, p, &e4);
    let pentagon =
        diff(&path(&e4, &[&q("1,2,3")?, &q("1,23,4")?, &q("2,3,4")?])?, &path(&e4, &[&q("12,3,4")?, &q("1,2,34")?])?)?;
    Ok(vec![
        ("duality".into(), duality),
        ("cycle".into(), cycle),
        ("hexagon".into(), hexagon),
        ("pentagon".into(), pentagon),
    ])
}

/// Residual report of the `GRT` relations.
pub fn check_grt(e: &GrtElement) -> Result<Report, EquationError> {
    let mut r = Report::new("grt").param("lambda", e.lambda.render()).param("N", e.truncation());
    for (name, s) in grt_residuals(&e.g)? {
        r.push(&name, &s);
    }
    Ok(r)
}

/// An element `(mu, g, u_{a,+}, u_{a,-})` of `GRT_g`; the `u` are Lie
/// elements of the framed genus-`g` algebra on two strands.
#[derive(Clone, Debug, PartialEq)]
pub struct GrtgElement {
    /// Genus-zero part.
    pub base: GrtElement,
    /// `u_{a,+}` for `a = 1..=g`.
    pub plus: Vec<LiePoly<Rat>>,
    /// `u_{a,-}` for `a = 1..=g`.
    pub minus: Vec<LiePoly<Rat>>,
    g: usize,
    n: u32,
}

impl GrtgElement {
    /// Validate and wrap; `n` is the truncation in the genus algebras.
    pub fn new(
        base: GrtElement,
        plus: Vec<LiePoly<Rat>>,
        minus: Vec<LiePoly<Rat>>,
        n: u32,
    ) -> Result<Self, EquationError> {
        let g = plus.len();
        if g == 0 || minus.len() != g {
            return Err(EquationError::Invalid("need g >= 1 and as many u_- as u_+".into()));
        }
        if 2 * base.truncation() < n {
            return Err(EquationError::Invalid(format!(
                "g is known through weight {} but weight {n} needs {}",
                base.truncation(),
                n.div_ceil(2)
            )));
        }
        let family = Family::TFG { g, n: 2 };
        let alphabet = Envelope::of(&family, n)?.quotient().alphabet().clone();
        if plus.iter().chain(&minus).any(|u| u.alphabet().as_ref() != alphabet.as_ref()) {
            return Err(EquationError::Invalid(format!("u must live in {family}")));
        }
        Ok(GrtgElement { base, plus, minus, g, n })
    }

    /// The unit: `g = 1`, `u_{a,+} = x_1^a`, `u_{a,-} = y_1^a`.
    pub fn identity(g: usize, n: u32) -> Result<Self, EquationError> {
        let env = Envelope::of(&Family::TFG { g, n: 2 }, n)?;
        let h = Gens { alphabet: env.quotient().alphabet() };
        let plus = (1..=g).map(|a| h.x(1, a)).collect();
        let minus = (1..=g).map(|a| h.y(1, a)).collect();
        Self::new(GrtElement::identity(n.div_ceil(2))?, plus, minus, n)
    }

    /// Genus.
    pub fn genus(&self) -> usize {
        self.g
    }

    /// Truncation in the genus algebras.
    pub fn truncation(&self) -> u32 {
        self.n
    }

    fn family(&self, k: usize) -> Family {
        Family::TFG { g: self.g, n: k }
    }

    /// Group law: the genus-zero parts multiply in `GRT`, and every
    /// `u_{a,±}` of `self` is evaluated at `x_1^b ↦ u~_{b,+}^{1,2}`,
    /// `x_2^b ↦ u~_{b,+}^{2,1}`, `y_1^b ↦ u~_{b,-}^{1,2}`,
    /// `y_2^b ↦ u~_{b,-}^{2,1}`, chords fixed.
    pub fn mul(&self, other: &Self) -> Result<Self, EquationError> {
        if self.g != other.g || self.n != other.n {
            return Err(EquationError::Invalid("genus or truncation differ".into()));
        }
        let base = self.base.mul(&other.base)?;
        let fam = self.family(2);
        let env = Envelope::of(&fam, self.n)?;
        let alphabet = env.quotient().alphabet().clone();
        let h = Gens { alphabet: &alphabet };
        let mut images = Vec::with_capacity(alphabet.len());
        for sym in alphabet.generators() {
            use crate::lie::GenKind;
            let im = match sym.kind {
                GenKind::Xg(i, a) => {
                    cable_lie(&other.plus[a as usize - 1], &fam, if i == 1 { "1,2" } else { "2,1" }, &env)?
                }
                GenKind::Yg(i, a) => {
                    cable_lie(&other.minus[a as usize - 1], &fam, if i == 1 { "1,2" } else { "2,1" }, &env)?
                }
                ref k => h.kind(k.clone()),
            };
            images.push(im);
        }
        let map = LieMap::new(alphabet, env.quotient().clone(), images)?;
        let plus = self.plus.iter().map(|u| map.apply(u)).collect::<Result<_, _>>()?;
        let minus = self.minus.iter().map(|u| map.apply(u)).collect::<Result<_, _>>()?;
        Self::new(base, plus, minus, self.n)
    }
}

/// Named residuals of the `GRT_g` relations.
///
/// The last relation is checked as `sum_a [u_{a,-}, u_{a,+}] = t12 +
/// 2(g-1) t11`, the linear form of the last genus associator equation.
pub fn grtg_residuals(e: &GrtgElement) -> Result<Vec<(String, Series<Rat>)>, EquationError> {
    let n = e.n;
    let fam2 = e.family(2);
    let e1 = Envelope::of(&e.family(1), n)?;
    let e2 = Envelope::of(&fam2, n)?;
    let e3 = Envelope::of(&e.family(3), n)?;
    let h3 = Gens { alphabet: e3.quotient().alphabet() };
    let h2 = Gens { alphabet: e2.quotient().alphabet() };
    let g = &e.base.g;
    let g123 = sup(g, "1,2,3", &e3)?;
    let g213 = sup(g, "2,1,3", &e3)?;
    let lift = |u: &LiePoly<Rat>, p: &str| -> Result<Series<Rat>, EquationError> {
        Ok(Series::from_lie(&e3, n, &cable_lie(u, &fam2, p, &e3)?)?)
    };
    let ad123 = |u: &LiePoly<Rat>| ad_path(&g123, &lift(u, "1,23")?);
    let ad213 = |u: &LiePoly<Rat>| ad_path(&g213, &lift(u, "2,13")?);
    let mut out = Vec::new();
    let signed: Vec<(usize, &str, &LiePoly<Rat>)> =
        (0..e.g).flat_map(|a| [(a, "+", &e.plus[a]), (a, "-", &e.minus[a])]).collect();
    for &(a, s, u) in &signed {
        let label = format!("a={},{s}", a + 1);
        let erased = Series::from_lie(&e1, n, &cable_lie(u, &fam2, "0,1", &e1)?)?;
        out.push((format!("G0[{label}]"), erased));
        let gen = |i| if s == "+" { h3.x(i, a + 1) } else { h3.y(i, a + 1) };
        let sum = Series::from_lie(&e3, n, &h3.add(&h3.add(&gen(1), &gen(2)), &gen(3)))?;
        let lhs = ad123(u)?.add(&ad213(u)?)?.add(&lift(u, "3,12")?)?;
        out.push((format!("G1[{label}]"), diff(&lhs, &sum)?));
        out.push((format!("G2[{label}]"), series_bracket(&ad123(u)?, &lift(u, "3,12")?)?));
    }
    for &(a, s, ua) in &signed {
        for &(b, t, ub) in &signed {
            if a == b && s != t {
                continue;
            }
            let label = format!("a={},{s};b={},{t}", a + 1, b + 1);
            out.push((format!("GN[{label}]"), series_bracket(&ad213(ub)?, &ad123(ua)?)?));
        }
    }
    let t12 = Series::from_lie(&e3, n, &h3.t(1, 2))?;
    for a in 0..e.g {
        let lhs = series_bracket(&ad213(&e.plus[a])?, &ad123(&e.minus[a])?)?;
        out.push((format!("G3[a={}]", a + 1), diff(&lhs, &t12)?));
    }
    let mut lhs = Series::zero(&e2, n);
    for a in 0..e.g {
        let up = Series::from_lie(&e2, n, &e.plus[a])?;
        let um = Series::from_lie(&e2, n, &e.minus[a])?;
        lhs = lhs.add(&series_bracket(&um, &up)?)?;
    }
    let target = h2.add(&h2.t(1, 2), &h2.t(1, 1).scale_rat(&rint(2 * (e.g as i64 - 1))));
    out.push(("G4".into(), diff(&lhs, &Series::from_lie(&e2, n, &target)?)?));
    Ok(out)
}

/// Residual report of the `GRT_g` relations, including those of the
/// genus-zero part.
pub fn check_grtg(e: &GrtgElement) -> Result<Report, EquationError> {
    let mut r = Report::new("grt_g").param("g", e.g).param("lambda", e.base.lambda.render()).param("N", e.n);
    for (name, s) in grt_residuals(&e.base.g)? {
        r.push(&name, &s);
    }
    for (name, s) in grtg_residuals(e)? {
        r.push(&name, &s);
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_is_neutral_for_star() {
        let env = free_env(3).unwrap();
        let (x, y) = free_gens(&env);
        let g = Series::exp_lie(&env, 3, &x.bracket(&y).unwrap()).unwrap();
        let one = Series::one(&env, 3);
        assert_eq!(GrtElement::star(&one, &g).unwrap(), g);
        assert_eq!(GrtElement::star(&g, &one).unwrap(), g);
    }
}
