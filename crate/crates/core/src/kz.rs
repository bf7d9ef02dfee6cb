//! High-precision numerical KZ associator and framed loop monodromies.
//!
//! The associator is the renormalized transport of
//! `dG/dz = (x/z + y/(z-1)) G` from `0` to `1`. Both normalized solutions
//! are convergent Frobenius series on the unit disc:
//! `G0(z) = P(z) z^x` near `0` and `G1(z) = Q(1-z) (1-z)^y` near `1`, with
//! `P(0) = Q(0) = 1`. They are evaluated at `z = 1/2` and
//! `Phi = G1(1/2)^-1 G0(1/2)`.
//!
//! Writing `P = sum_k P_k z^k`, the equation becomes
//! `k P_k + [P_k, x] = -y sum_{j<k} P_j`, which is solved by the finite
//! Neumann series `P_k = sum_m (-1)^m ad^m(R_k) / k^(m+1)` with
//! `ad(Q) = Q x - x Q`. `Q` is obtained by exchanging `x` and `y`.
//!
//! Coefficients are complex fixed-point numbers with `P` fractional bits.
//! This module is a validation oracle only: nothing here is fed back into the
//! exact modules.

use crate::envelope::{Envelope, Series, SeriesError};
use crate::equations::{associator_residuals, AssociatorCandidate, EquationError, Report};
use crate::lie::{Family, LiePoly};
use crate::scalar::{rat, CFixed, Fixed, Scalar};
use num_bigint::BigInt;
use num_complex::Complex;
use num_traits::{One, Zero};
use serde::Serialize;
use std::collections::BTreeMap;
use std::sync::Arc;

/// Largest supported truncation.
pub const MAX_WEIGHT: u32 = 6;

/// Errors of the numeric transport.
#[derive(Debug, thiserror::Error)]
pub enum KzError {
    /// Truncation outside `1..=MAX_WEIGHT`.
    #[error("weight must be between 1 and {MAX_WEIGHT}, got {0}")]
    Weight(u32),
    /// Unsupported working precision.
    #[error("precision must be 128, 256 or 512 bits, got {0}")]
    Precision(u32),
    /// Tolerance must be positive.
    #[error("tolerance must be positive, got {0}")]
    Tolerance(f64),
    /// Doubling the precision moved a coefficient by more than allowed.
    #[error("no convergence: doubling precision changed a coefficient by {difference:e} (bound {bound:e})")]
    NotConverged {
        /// Largest coefficient change.
        difference: f64,
        /// Allowed change.
        bound: f64,
    },
    /// Error from the equation checkers.
    #[error(transparent)]
    Equation(#[from] EquationError),
    /// Error from the enveloping algebra.
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// A word in the letters of a [`FloatSeries`], as letter indices.
pub type FloatWord = Vec<u8>;

/// Truncated noncommutative power series with complex fixed-point
/// coefficients indexed by words.
#[derive(Clone, Debug, PartialEq)]
pub struct FloatSeries<const P: u32> {
    letters: Vec<String>,
    truncation: u32,
    coeffs: BTreeMap<FloatWord, CFixed<P>>,
}

fn cnum<const P: u32>(re: Fixed<P>, im: Fixed<P>) -> CFixed<P> {
    Complex::new(re, im)
}

/// `2 pi i` at precision `P`.
pub fn two_pi_i<const P: u32>() -> CFixed<P> {
    cnum(Fixed::zero(), Fixed::<P>::pi().scale_pow2(1))
}

impl<const P: u32> FloatSeries<P> {
    /// The zero series over the named letters.
    pub fn zero(letters: &[&str], truncation: u32) -> Self {
        FloatSeries { letters: letters.iter().map(|s| s.to_string()).collect(), truncation, coeffs: BTreeMap::new() }
    }

    /// The unit series.
    pub fn one(letters: &[&str], truncation: u32) -> Self {
        let mut s = Self::zero(letters, truncation);
        s.coeffs.insert(Vec::new(), CFixed::<P>::one());
        s
    }

    /// `c` times a single letter.
    pub fn letter(letters: &[&str], truncation: u32, l: u8, c: CFixed<P>) -> Self {
        let mut s = Self::zero(letters, truncation);
        if truncation >= 1 {
            s.insert(vec![l], c);
        }
        s
    }

    /// `exp(c l)` for a single letter `l`.
    pub fn exp_letter(letters: &[&str], truncation: u32, l: u8, c: &CFixed<P>) -> Self {
        let mut s = Self::one(letters, truncation);
        let mut term = CFixed::<P>::one();
        for k in 1..=truncation {
            term = (term * c.clone()).mul_rat(&rat(1, k as i64));
            s.insert(vec![l; k as usize], term.clone());
        }
        s
    }

    fn insert(&mut self, w: FloatWord, c: CFixed<P>) {
        if c.is_zero() {
            self.coeffs.remove(&w);
        } else {
            self.coeffs.insert(w, c);
        }
    }

    fn accumulate(&mut self, w: FloatWord, c: CFixed<P>) {
        let v = self.coeffs.remove(&w).unwrap_or_else(CFixed::<P>::zero) + c;
        self.insert(w, v);
    }

    fn like(&self) -> Self {
        FloatSeries { letters: self.letters.clone(), truncation: self.truncation, coeffs: BTreeMap::new() }
    }

    /// Letter names.
    pub fn letters(&self) -> &[String] {
        &self.letters
    }

    /// Truncation weight.
    pub fn truncation(&self) -> u32 {
        self.truncation
    }

    /// Working precision in bits.
    pub fn precision_bits(&self) -> u32 {
        P
    }

    /// Nonzero coefficients.
    pub fn coeffs(&self) -> &BTreeMap<FloatWord, CFixed<P>> {
        &self.coeffs
    }

    /// Coefficient of a word.
    pub fn coeff(&self, w: &[u8]) -> CFixed<P> {
        self.coeffs.get(w).cloned().unwrap_or_else(CFixed::<P>::zero)
    }

    /// Sum.
    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.coeffs {
            out.accumulate(w.clone(), c.clone());
        }
        out
    }

    /// Difference.
    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-CFixed::<P>::one()))
    }

    /// Multiply every coefficient by `c`.
    pub fn scale(&self, c: &CFixed<P>) -> Self {
        let mut out = self.like();
        for (w, v) in &self.coeffs {
            out.insert(w.clone(), v.clone() * c.clone());
        }
        out
    }

    /// Multiply every coefficient by an exact rational.
    pub fn scale_rat(&self, r: &crate::scalar::Rat) -> Self {
        let mut out = self.like();
        for (w, v) in &self.coeffs {
            out.insert(w.clone(), v.mul_rat(r));
        }
        out
    }

    /// Truncated product (concatenation of words).
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = self.like();
        let n = self.truncation.min(other.truncation) as usize;
        out.truncation = n as u32;
        for (u, a) in &self.coeffs {
            for (v, b) in &other.coeffs {
                if u.len() + v.len() > n {
                    continue;
                }
                let mut w = u.clone();
                w.extend_from_slice(v);
                out.accumulate(w, a.clone() * b.clone());
            }
        }
        out
    }

    /// Left multiplication by a letter.
    pub fn left_letter(&self, l: u8) -> Self {
        let mut out = self.like();
        for (w, c) in &self.coeffs {
            if (w.len() as u32) < self.truncation {
                let mut v = vec![l];
                v.extend_from_slice(w);
                out.insert(v, c.clone());
            }
        }
        out
    }

    /// Right multiplication by a letter.
    pub fn right_letter(&self, l: u8) -> Self {
        let mut out = self.like();
        for (w, c) in &self.coeffs {
            if (w.len() as u32) < self.truncation {
                let mut v = w.clone();
                v.push(l);
                out.insert(v, c.clone());
            }
        }
        out
    }

    /// Inverse of a series with constant term 1.
    pub fn inverse(&self) -> Self {
        let one = Self::one(&self.letter_refs(), self.truncation);
        let a = self.sub(&one);
        let mut out = one.clone();
        let mut power = one;
        for k in 1..=self.truncation {
            power = power.mul(&a);
            out = if k % 2 == 1 { out.sub(&power) } else { out.add(&power) };
        }
        out
    }

    fn letter_refs(&self) -> Vec<&str> {
        self.letters.iter().map(|s| s.as_str()).collect()
    }

    /// Rename letters.
    pub fn relabel(&self, letters: &[&str]) -> Self {
        FloatSeries {
            letters: letters.iter().map(|s| s.to_string()).collect(),
            truncation: self.truncation,
            coeffs: self.coeffs.clone(),
        }
    }

    /// Largest coefficient modulus of `self - other`.
    pub fn distance(&self, other: &Self) -> f64 {
        self.sub(other).coeffs.values().map(|c| c.magnitude()).fold(0.0, f64::max)
    }

    /// Render a word with the letter names.
    pub fn render_word(&self, w: &[u8]) -> String {
        if w.is_empty() {
            return "1".to_string();
        }
        let single = self.letters.iter().all(|s| s.chars().count() == 1);
        let names: Vec<&str> = w.iter().map(|&l| self.letters[l as usize].as_str()).collect();
        if single {
            names.concat()
        } else {
            names.join("*")
        }
    }

    /// Every word of length at most the truncation, by length then
    /// lexicographically.
    pub fn all_words(&self) -> Vec<FloatWord> {
        let k = self.letters.len() as u8;
        let mut out = vec![Vec::new()];
        let mut layer: Vec<FloatWord> = vec![Vec::new()];
        for _ in 0..self.truncation {
            let mut next = Vec::new();
            for w in &layer {
                for l in 0..k {
                    let mut v = w.clone();
                    v.push(l);
                    next.push(v);
                }
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    }

    /// `<word> <re> <im>` lines for every word of length at most the
    /// truncation, with `digits` digits after the point.
    pub fn render(&self, digits: usize) -> String {
        let mut s = String::new();
        for w in self.all_words() {
            let c = self.coeff(&w);
            s.push_str(&format!("{} {} {}\n", self.render_word(&w), c.re.to_decimal(digits), c.im.to_decimal(digits)));
        }
        s
    }

    /// The same series in the enveloping algebra `env`, whose first
    /// generators correspond to the letters in order.
    pub fn to_series(&self, env: &Arc<Envelope>) -> Result<Series<CFixed<P>>, SeriesError> {
        let n = self.truncation;
        let alphabet = env.quotient().alphabet();
        let gens: Vec<Series<CFixed<P>>> = (0..self.letters.len())
            .map(|l| Series::from_lie(env, n, &LiePoly::generator(alphabet, l as _)))
            .collect::<Result<_, _>>()?;
        let mut out = Series::zero(env, n);
        for (w, c) in &self.coeffs {
            let mut term = Series::scalar(env, n, c.clone());
            for &l in w {
                term = term.mul(&gens[l as usize])?;
            }
            out = out.add(&term)?;
        }
        Ok(out)
    }
}

fn change_precision<const Q: u32, const P: u32>(c: &CFixed<Q>) -> CFixed<P> {
    let shift = |x: &Fixed<Q>| -> Fixed<P> {
        let m: &BigInt = x.mantissa();
        let v = if Q >= P {
            let d = (Q - P) as usize;
            if d == 0 {
                m.clone()
            } else {
                (m + (BigInt::one() << (d - 1))) >> d
            }
        } else {
            m << (P - Q) as usize
        };
        Fixed::from_mantissa(v)
    };
    cnum(shift(&c.re), shift(&c.im))
}

/// Largest coefficient modulus of `a - b` after rounding `b` to precision `P`.
pub fn precision_distance<const P: u32, const Q: u32>(a: &FloatSeries<P>, b: &FloatSeries<Q>) -> f64 {
    let mut words: Vec<&FloatWord> = a.coeffs.keys().collect();
    words.extend(b.coeffs.keys());
    words.into_iter().map(|w| (a.coeff(w) - change_precision::<Q, P>(&b.coeff(w))).magnitude()).fold(0.0, f64::max)
}

/// Number of Frobenius terms used at precision `P` and weight `n`.
///
/// The coefficients `P_k` grow at most like `k^n`, so at `z = 1/2` the tail
/// after `K` terms is below `2^-(K - n log2 K)`.
pub fn frobenius_terms(p: u32, n: u32) -> u32 {
    let mut k = p + 16;
    while (k as f64) - (n as f64 + 1.0) * (k as f64).log2() < (p + 16) as f64 {
        k += 16;
    }
    k
}

/// Value at `z = 1/2` of the holomorphic factor of the normalized solution
/// at the singular point whose residue letter is `a`; `b` is the other
/// letter.
fn frobenius_half<const P: u32>(n: u32, terms: u32, a: u8, b: u8) -> FloatSeries<P> {
    let letters = ["x", "y"];
    let one = FloatSeries::<P>::one(&letters, n);
    let mut partial = one.clone();
    let mut value = one;
    let mut zpow = CFixed::<P>::one();
    let half = rat(1, 2);
    for k in 1..=terms {
        let rhs = partial.left_letter(b).scale(&-CFixed::<P>::one());
        let inv_k = rat(1, k as i64);
        let mut term = rhs.scale_rat(&inv_k);
        let mut pk = term.clone();
        for _ in 0..n {
            let ad = term.right_letter(a).sub(&term.left_letter(a));
            term = ad.scale_rat(&-inv_k.clone());
            if term.coeffs.is_empty() {
                break;
            }
            pk = pk.add(&term);
        }
        zpow = zpow.mul_rat(&half);
        value = value.add(&pk.scale(&zpow));
        partial = partial.add(&pk);
    }
    value
}

/// The KZ associator through weight `n` at precision `P`, using `terms`
/// Frobenius terms at each end.
pub fn kz_associator_with_terms<const P: u32>(n: u32, terms: u32) -> FloatSeries<P> {
    let letters = ["x", "y"];
    let minus_ln2 = cnum(-Fixed::<P>::ln2(), Fixed::zero());
    let g0 = frobenius_half::<P>(n, terms, 0, 1).mul(&FloatSeries::exp_letter(&letters, n, 0, &minus_ln2));
    let g1 = frobenius_half::<P>(n, terms, 1, 0).mul(&FloatSeries::exp_letter(&letters, n, 1, &minus_ln2));
    g1.inverse().mul(&g0)
}

/// The KZ associator through weight `n` at precision `P`.
pub fn kz_associator<const P: u32>(n: u32) -> Result<FloatSeries<P>, KzError> {
    if n == 0 || n > MAX_WEIGHT {
        return Err(KzError::Weight(n));
    }
    Ok(kz_associator_with_terms::<P>(n, frobenius_terms(P, n)))
}

/// The numeric associator as a candidate at `mu = 2 pi i`.
pub fn numeric_candidate<const P: u32>(phi: &FloatSeries<P>) -> Result<AssociatorCandidate<CFixed<P>>, KzError> {
    let env = Envelope::of(&Family::FreeF2, phi.truncation())?;
    let series = phi.to_series(&env)?;
    Ok(AssociatorCandidate::new(two_pi_i::<P>(), series)?)
}

/// Framed loop monodromies in a series over the letters `t11, t12`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FramedMonodromy {
    /// Truncation weight.
    pub truncation: u32,
    /// Transport of `t11 dlog(lambda_1)` once around the framing loop.
    pub framing_loop: String,
    /// The exact value `exp(2 pi i t11)`.
    pub exact: String,
    /// Distance between the transported framing loop and the exact value.
    pub framing_error: f64,
    /// Distance between `T(f_1)` and `T(sigma_1)^2` after identifying
    /// `t12` with `t11`.
    pub sigma_squared_error: f64,
    /// Distance from `1` of the transport along a loop with zero winding.
    pub zero_loop_error: f64,
}

/// Transport of `dT/dtheta = i L T` for `theta` from `start` to `end`
/// (fractions of `pi`) with classical Runge-Kutta steps, where `L` is left
/// multiplication by letter `l`.
fn circle_transport<const P: u32>(n: u32, l: u8, start: i64, end: i64, steps: u32) -> FloatSeries<P> {
    let letters = ["t11", "t12"];
    let pi = Fixed::<P>::pi();
    let span = cnum(pi.clone(), Fixed::zero()).mul_rat(&rat(end - start, steps as i64));
    let i = cnum(Fixed::<P>::zero(), Fixed::<P>::one());
    let h = span;
    let field = |t: &FloatSeries<P>| t.left_letter(l).scale(&i);
    let mut t = FloatSeries::<P>::one(&letters, n);
    let half = rat(1, 2);
    let sixth = rat(1, 6);
    for _ in 0..steps {
        let k1 = field(&t).scale(&h);
        let k2 = field(&t.add(&k1.scale_rat(&half))).scale(&h);
        let k3 = field(&t.add(&k2.scale_rat(&half))).scale(&h);
        let k4 = field(&t.add(&k3)).scale(&h);
        let inc = k1.add(&k2.scale_rat(&rat(2, 1))).add(&k3.scale_rat(&rat(2, 1))).add(&k4);
        t = t.add(&inc.scale_rat(&sixth));
    }
    t
}

/// Numeric check of the framed monodromies through weight `n` at precision
/// `P`: the framing loop against `exp(2 pi i t11)`, `T(f_1)` against
/// `T(sigma_1)^2`, and a zero-winding loop against `1`.
///
/// The half turn `sigma_1` moves `z_1 - z_2 = e^{i theta}` over
/// `theta in [0, pi]` in the coefficient `t12`; squaring it gives a full turn.
pub fn framed_loop_monodromy<const P: u32>(n: u32, steps: u32) -> Result<FramedMonodromy, KzError> {
    if n == 0 || n > MAX_WEIGHT {
        return Err(KzError::Weight(n));
    }
    let letters = ["t11", "t12"];
    let framing = circle_transport::<P>(n, 0, 0, 2, steps);
    let exact = FloatSeries::<P>::exp_letter(&letters, n, 0, &two_pi_i::<P>());
    let sigma = circle_transport::<P>(n, 1, 0, 1, steps / 2);
    let sigma_sq = sigma.mul(&sigma);
    let identified = FloatSeries {
        letters: framing.letters.clone(),
        truncation: n,
        coeffs: sigma_sq.coeffs.iter().map(|(w, c)| (w.iter().map(|_| 0u8).collect(), c.clone())).collect(),
    };
    let out = circle_transport::<P>(n, 0, 0, 1, steps / 2);
    let back = circle_transport::<P>(n, 0, 1, 0, steps / 2);
    let zero_loop = back.mul(&out);
    let digits = 20;
    Ok(FramedMonodromy {
        truncation: n,
        framing_loop: framing.render(digits),
        exact: exact.render(digits),
        framing_error: framing.distance(&exact),
        sigma_squared_error: framing.distance(&identified),
        zero_loop_error: zero_loop.distance(&FloatSeries::one(&letters, n)),
    })
}

/// Outcome of [`kz_transport`].
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct KzReport {
    /// Truncation weight.
    pub weight: u32,
    /// Working precision in bits.
    pub prec_bits: u32,
    /// Frobenius terms used at the working precision.
    pub terms: u32,
    /// Tolerance for the residual checks.
    pub tol: f64,
    /// `(word, re, im)` for every word, at the working precision.
    pub coefficients: Vec<(String, String, String)>,
    /// Largest coefficient change when precision and terms are doubled.
    pub doubling_difference: f64,
    /// Allowed change, `10^(-p/4)`.
    pub doubling_bound: f64,
    /// Residuals of duality, hexagon and pentagon at `mu = 2 pi i`.
    pub residuals: Report,
    /// Coefficient of `[x,y]` in `log Phi`, as `(re, im)`.
    pub log_xy: (f64, f64),
    /// Distance of that coefficient from `-pi^2/6`.
    pub zeta2_error: f64,
    /// Largest imaginary part of a coefficient of `log Phi`.
    pub parity_error: f64,
    /// Framed loop monodromies.
    pub monodromy: FramedMonodromy,
}

impl KzReport {
    /// True when every numeric check is within tolerance.
    pub fn passes(&self) -> bool {
        self.residuals.equations.iter().all(|e| e.weights.iter().all(|w| w.max_magnitude < self.tol))
            && self.zeta2_error < self.tol
            && self.parity_error < self.tol
            && self.doubling_difference < self.doubling_bound
            && self.monodromy.framing_error < self.tol
            && self.monodromy.sigma_squared_error < self.tol
            && self.monodromy.zero_loop_error < self.tol
    }

    /// Text report: the coefficient lines followed by the checks.
    pub fn render(&self) -> String {
        let mut s = format!(
            "kz-transport N={} prec_bits={} terms={} tol={:e}\n",
            self.weight, self.prec_bits, self.terms, self.tol
        );
        for (w, re, im) in &self.coefficients {
            s.push_str(&format!("{w} {re} {im}\n"));
        }
        s.push_str(&format!("doubling: {:.3e} (bound {:.3e})\n", self.doubling_difference, self.doubling_bound));
        s.push_str(&format!(
            "log [x,y]: {:.15e} {:.15e} (error vs -pi^2/6 {:.3e})\n",
            self.log_xy.0, self.log_xy.1, self.zeta2_error
        ));
        s.push_str(&format!("parity (max imaginary log coefficient): {:.3e}\n", self.parity_error));
        s.push_str(&self.residuals.render());
        s.push_str(&format!(
            "monodromy N={}: framing {:.3e}, f1 vs sigma1^2 {:.3e}, zero loop {:.3e}\n",
            self.monodromy.truncation,
            self.monodromy.framing_error,
            self.monodromy.sigma_squared_error,
            self.monodromy.zero_loop_error
        ));
        s.push_str(if self.passes() { "PASS\n" } else { "FAIL\n" });
        s
    }
}

/// Steps used for the loop transports.
pub const LOOP_STEPS: u32 = 512;

fn transport_at<const P: u32, const Q: u32>(n: u32, tol: f64) -> Result<KzReport, KzError> {
    let terms = frobenius_terms(P, n);
    let phi = kz_associator_with_terms::<P>(n, terms);
    let fine = kz_associator_with_terms::<Q>(n, frobenius_terms(Q, n));
    let doubling_difference = precision_distance(&phi, &fine);
    let doubling_bound = 10f64.powf(-(P as f64) / 4.0);
    if doubling_difference >= doubling_bound {
        return Err(KzError::NotConverged { difference: doubling_difference, bound: doubling_bound });
    }
    let cand = numeric_candidate(&phi)?;
    let mut residuals = Report::new("associator").param("mu", "2 pi i").param("N", n).param("prec_bits", P);
    for (name, r) in associator_residuals(&cand)? {
        residuals.push(&name, &r);
    }
    let log = cand.phi.log()?;
    let xy = log.coeff(&[0, 1]);
    let (re, im) = (xy.re.to_f64(), xy.im.to_f64());
    // -pi^2/6 = (2 pi i)^2 / 24, compared at working precision.
    let tpi = two_pi_i::<P>();
    let zeta2_gap = xy.clone() - (tpi.clone() * tpi).mul_rat(&rat(1, 24));
    let zeta2_error = zeta2_gap.re.to_f64().hypot(zeta2_gap.im.to_f64());
    let parity_error = log.terms().values().map(|c| c.im.to_f64().abs()).fold(0.0, f64::max);
    let digits = Fixed::<P>::decimal_digits();
    let coefficients = phi
        .all_words()
        .into_iter()
        .map(|w| {
            let c = phi.coeff(&w);
            (phi.render_word(&w), c.re.to_decimal(digits), c.im.to_decimal(digits))
        })
        .collect();
    Ok(KzReport {
        weight: n,
        prec_bits: P,
        terms,
        tol,
        coefficients,
        doubling_difference,
        doubling_bound,
        residuals,
        log_xy: (re, im),
        zeta2_error,
        parity_error,
        monodromy: framed_loop_monodromy::<P>(n, LOOP_STEPS)?,
    })
}

/// Compute the KZ associator through weight `n` at `prec_bits` bits, verify
/// it against a run at twice the precision, and check it numerically.
pub fn kz_transport(n: u32, prec_bits: u32, tol: f64) -> Result<KzReport, KzError> {
    if n == 0 || n > MAX_WEIGHT {
        return Err(KzError::Weight(n));
    }
    if tol.is_nan() || tol <= 0.0 {
        return Err(KzError::Tolerance(tol));
    }
    match prec_bits {
        128 => transport_at::<128, 256>(n, tol),
        256 => transport_at::<256, 512>(n, tol),
        512 => transport_at::<512, 1024>(n, tol),
        p => Err(KzError::Precision(p)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weight_zero_coefficient_is_one() {
        let phi = kz_associator::<128>(3).unwrap();
        assert_eq!(phi.coeff(&[]), CFixed::<128>::one());
        assert!(phi.coeff(&[0]).magnitude() < 1e-30);
        assert!(phi.coeff(&[1]).magnitude() < 1e-30);
    }

    #[test]
    fn inverse_cancels() {
        let phi = kz_associator::<128>(3).unwrap();
        let one = FloatSeries::<128>::one(&["x", "y"], 3);
        assert!(phi.mul(&phi.inverse()).distance(&one) < 1e-30);
    }

    #[test]
    fn bad_inputs_are_rejected() {
        assert!(matches!(kz_transport(7, 256, 1e-8), Err(KzError::Weight(7))));
        assert!(matches!(kz_transport(2, 100, 1e-8), Err(KzError::Precision(100))));
        assert!(matches!(kz_transport(2, 128, 0.0), Err(KzError::Tolerance(_))));
    }
}
