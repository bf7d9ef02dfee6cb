//! Flatness of the (framed) KZ form
//! `w = sum_i t_ii dlog(lambda_i) + sum_{i<j} t_ij dlog(z_i - z_j)`.
//!
//! The form is closed, so flatness reduces to `w ∧ w = 0`. Writing
//! `w = sum_A c_A w_A` over the 1-form basis, `w ∧ w = sum_{A<B} [c_A, c_B]
//! w_A ∧ w_B`. The 2-forms `w_A ∧ w_B` are independent except for the Arnold
//! relations among the `dlog(z_i - z_j)`, which are used to eliminate one
//! 2-form per triple `i < j < k`. Each surviving coefficient is then reduced
//! in the coefficient algebra.

use super::EquationError;
use crate::lie::family::family_alphabet;
use crate::lie::{algebra, Family, Gens, GradedQuotient, LiePoly};
use crate::scalar::Rat;
use serde::Serialize;
use std::collections::BTreeMap;
use std::sync::Arc;

/// One flatness question.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FlatnessProblem {
    /// Number of points.
    pub n: usize,
    /// Include the framing forms `dlog(lambda_i)` with coefficients `t_ii`.
    pub framed: bool,
    /// Drop the four-term relations from the coefficient algebra.
    pub drop_four_term: bool,
}

impl FlatnessProblem {
    /// The unmodified problem.
    pub fn new(n: usize, framed: bool) -> Self {
        FlatnessProblem { n, framed, drop_four_term: false }
    }

    /// The same problem over the algebra without four-term relations.
    pub fn without_four_term(mut self) -> Self {
        self.drop_four_term = true;
        self
    }

    fn family(&self) -> Family {
        if self.framed {
            Family::TF { n: self.n }
        } else {
            Family::T { n: self.n }
        }
    }
}

/// A 1-form of the basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Form {
    /// `dlog(lambda_i)`.
    Framing(usize),
    /// `dlog(z_i - z_j)` with `i < j`.
    Chord(usize, usize),
}

impl Form {
    fn label(&self) -> String {
        match self {
            Form::Framing(i) => format!("w{i}"),
            Form::Chord(i, j) => format!("w{i}{j}"),
        }
    }

    fn coefficient(&self, h: &Gens) -> LiePoly<Rat> {
        match *self {
            Form::Framing(i) => h.t(i, i),
            Form::Chord(i, j) => h.t(i, j),
        }
    }
}

/// Summary of one block of the expansion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FlatnessBlock {
    /// Block name: `[w1,w1]`, `[w1,w2]` or `[w2,w2]`.
    pub name: String,
    /// Number of independent 2-forms in the block.
    pub forms: usize,
    /// Number of 2-forms whose coefficient does not reduce to zero.
    pub surviving: usize,
}

/// Outcome of [`check_flatness`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FlatnessResult {
    /// The problem.
    pub problem: FlatnessProblem,
    /// Coefficient algebra used for reduction.
    pub algebra: String,
    /// True when every coefficient vanishes.
    pub flat: bool,
    /// Per-block summary.
    pub blocks: Vec<FlatnessBlock>,
    /// Surviving coefficients as `(2-form, Lie element)`.
    pub residuals: Vec<(String, String)>,
}

impl FlatnessResult {
    /// Text report: one line per block, then the surviving coefficients.
    pub fn render(&self) -> String {
        let p = &self.problem;
        let mut s = format!(
            "flatness n={} framed={} drop_four_term={} algebra={}\n",
            p.n, p.framed, p.drop_four_term, self.algebra
        );
        for b in &self.blocks {
            s.push_str(&format!("{}: {} forms, {} surviving\n", b.name, b.forms, b.surviving));
        }
        for (form, lie) in &self.residuals {
            s.push_str(&format!("  {form}: {lie}\n"));
        }
        s.push_str(if self.flat { "flat\n" } else { "not flat\n" });
        s
    }
}

fn coefficient_algebra(p: &FlatnessProblem) -> Result<Arc<GradedQuotient>, EquationError> {
    let family = p.family();
    if !p.drop_four_term {
        return Ok(algebra(&family, 2)?);
    }
    let alphabet = Arc::new(family_alphabet(&family)?);
    let h = Gens { alphabet: &alphabet };
    let first = if p.framed { 0 } else { 1 };
    let mut chords = Vec::new();
    for i in 1..=p.n {
        for j in i + first..=p.n {
            chords.push((i, j));
        }
    }
    let mut rels = Vec::new();
    for (a, &(i, j)) in chords.iter().enumerate() {
        for &(k, l) in &chords[a + 1..] {
            if k != i && k != j && l != i && l != j {
                rels.push(h.br(&h.t(i, j), &h.t(k, l)));
            }
        }
    }
    let name = format!("{family} without four-term relations");
    Ok(Arc::new(GradedQuotient::new(Family::Custom(name), alphabet, rels, 2)?))
}

/// Expand `w ∧ w`, apply the Arnold relations, and reduce every coefficient.
pub fn check_flatness(p: &FlatnessProblem) -> Result<FlatnessResult, EquationError> {
    if p.n < 2 {
        return Err(EquationError::Invalid(format!("flatness needs n >= 2, got {}", p.n)));
    }
    let q = coefficient_algebra(p)?;
    let h = Gens { alphabet: q.alphabet() };
    let mut forms = Vec::new();
    if p.framed {
        forms.extend((1..=p.n).map(Form::Framing));
    }
    for i in 1..=p.n {
        for j in i + 1..=p.n {
            forms.push(Form::Chord(i, j));
        }
    }
    let mut coeffs: BTreeMap<(Form, Form), LiePoly<Rat>> = BTreeMap::new();
    for (a, fa) in forms.iter().enumerate() {
        for fb in &forms[a + 1..] {
            coeffs.insert((*fa, *fb), h.br(&fa.coefficient(&h), &fb.coefficient(&h)));
        }
    }
    // Arnold: w_ij∧w_jk + w_jk∧w_ki + w_ki∧w_ij = 0 gives, for i < j < k,
    // w_ij∧w_ik = w_ij∧w_jk - w_ik∧w_jk.
    for i in 1..=p.n {
        for j in i + 1..=p.n {
            for k in j + 1..=p.n {
                let (a, b, c) = (Form::Chord(i, j), Form::Chord(i, k), Form::Chord(j, k));
                let l = coeffs.remove(&(a, b)).expect("pair present");
                let ac = coeffs.get_mut(&(a, c)).expect("pair present");
                *ac = h.add(ac, &l);
                let bc = coeffs.get_mut(&(b, c)).expect("pair present");
                *bc = h.add(bc, &l.neg());
            }
        }
    }
    let block_of = |a: &Form, b: &Form| match (a, b) {
        (Form::Framing(_), Form::Framing(_)) => 0,
        (Form::Chord(..), Form::Chord(..)) => 2,
        _ => 1,
    };
    let names = ["[w1,w1]", "[w1,w2]", "[w2,w2]"];
    let mut counts = [(0usize, 0usize); 3];
    let mut residuals = Vec::new();
    for ((a, b), l) in &coeffs {
        let block = block_of(a, b);
        counts[block].0 += 1;
        let r = q.reduce(l)?;
        if !r.is_zero() {
            counts[block].1 += 1;
            let text = r.serialize();
            let terms: Vec<&str> = text.lines().collect();
            residuals.push((format!("{}^{}", a.label(), b.label()), terms.join(", ")));
        }
    }
    let blocks = names
        .iter()
        .zip(counts)
        .filter(|(_, (f, _))| *f > 0)
        .map(|(name, (forms, surviving))| FlatnessBlock { name: name.to_string(), forms, surviving })
        .collect();
    Ok(FlatnessResult {
        problem: p.clone(),
        algebra: q.family().to_string(),
        flat: residuals.is_empty(),
        blocks,
        residuals,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_points_are_flat() {
        assert!(check_flatness(&FlatnessProblem::new(2, true)).unwrap().flat);
        assert!(check_flatness(&FlatnessProblem::new(2, false)).unwrap().flat);
    }

    #[test]
    fn one_point_is_rejected() {
        assert!(check_flatness(&FlatnessProblem::new(1, true)).is_err());
    }
}
