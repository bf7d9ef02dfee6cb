//! Evaluation of braid words in truncated enveloping algebras.
//!
//! Each generator is sent to a group-like element of a small algebra and
//! then cabled along its superscript pattern:
//!
//! * `R ↦ e^{mu t12/2}`, `R~ ↦ e^{-mu t12/2}`;
//! * `F ↦ e^{mu t11}` (framing parameter equal to `mu`);
//! * `Phi ↦ phi(t12, t23)`;
//! * `A_a ↦ A_{a,+}`, `B_a ↦ A_{a,-}`;
//! * `A~_a`, `B~_a ↦ path(e^{mu t12/2}, (Z^{2,1})^-1, e^{-mu t12/2})`.
//!
//! Permutations carried by the letters are absorbed by writing every letter
//! in terms of strand labels, so all morphisms of a word live in one algebra.

use super::word::{BraidMorphism, Generator, Letter};
use super::BraidError;
use crate::cabling::{superscript_eval, StrandAssignment};
use crate::envelope::{Envelope, Series};
use crate::equations::{chord_exp, transport_to_bis, AssociatorCandidate, GenusData};
use crate::lie::Family;
use crate::scalar::{rat, rint, Scalar};
use std::sync::Arc;

/// Evaluation data: an associator, optional genus data, and whether genus
/// zero words are evaluated in the framed algebras.
#[derive(Clone, Debug)]
pub struct Evaluator<'a, S: Scalar> {
    assoc: &'a AssociatorCandidate<S>,
    genus: Option<&'a GenusData<S>>,
    framed: bool,
    n: u32,
}

impl<'a, S: Scalar> Evaluator<'a, S> {
    /// Evaluator into genus-zero algebras (framed when `framed`) through
    /// weight `n`.
    pub fn new(assoc: &'a AssociatorCandidate<S>, framed: bool, n: u32) -> Result<Self, BraidError> {
        if assoc.truncation() < n {
            return Err(BraidError::Truncation(format!(
                "phi is known through weight {} but {} was requested",
                assoc.truncation(),
                n
            )));
        }
        Ok(Evaluator { assoc, genus: None, framed, n })
    }

    /// Evaluator into the genus algebras of `genus` through its truncation.
    pub fn with_genus(assoc: &'a AssociatorCandidate<S>, genus: &'a GenusData<S>) -> Result<Self, BraidError> {
        let n = genus.truncation();
        if 2 * assoc.truncation() < n {
            return Err(BraidError::Truncation(format!(
                "phi is known through weight {} but weight {} needs {}",
                assoc.truncation(),
                n,
                n.div_ceil(2)
            )));
        }
        Ok(Evaluator { assoc, genus: Some(genus), framed: genus.family().framed(), n })
    }

    /// Truncation.
    pub fn truncation(&self) -> u32 {
        self.n
    }

    /// Algebra family for words on `k` strands.
    pub fn family(&self, k: usize) -> Family {
        match self.genus {
            Some(d) => d.family().with_n(k),
            None if self.framed => Family::TF { n: k },
            None => Family::T { n: k },
        }
    }

    fn genus_zero(&self, k: usize) -> Family {
        if self.framed {
            Family::TF { n: k }
        } else {
            Family::T { n: k }
        }
    }

    /// Value of a generator before cabling.
    fn base(&self, g: Generator) -> Result<Series<S>, BraidError> {
        let mu = &self.assoc.mu;
        let env2 = || Envelope::of(&self.genus_zero(2), self.n);
        let handle = |a: usize, plus: bool| -> Result<Series<S>, BraidError> {
            let d = self.genus.ok_or(BraidError::MissingGenusData)?;
            if a == 0 || a > d.g {
                return Err(BraidError::Parse(format!("handle {a} outside 1..={}", d.g)));
            }
            Ok(if plus { d.plus[a - 1].clone() } else { d.minus[a - 1].clone() })
        };
        Ok(match g {
            Generator::Id => unreachable!("identity letters are handled by the caller"),
            Generator::R => chord_exp(&env2()?, mu, &rat(1, 2), &[(1, 2)])?,
            Generator::RTilde => chord_exp(&env2()?, mu, &rat(-1, 2), &[(1, 2)])?,
            Generator::F => {
                if !self.framed {
                    return Err(BraidError::Unframed);
                }
                chord_exp(&env2()?, mu, &rint(1), &[(1, 1)])?
            }
            Generator::Phi => self.assoc.phi.clone(),
            Generator::A(a) => handle(a, true)?,
            Generator::B(a) => handle(a, false)?,
            Generator::ATilde(a) => transport_to_bis(mu, &handle(a, true)?)?,
            Generator::BTilde(a) => transport_to_bis(mu, &handle(a, false)?)?,
        })
    }

    /// Value of one letter in the algebra on `k` strands.
    pub fn letter(&self, l: &Letter, env: &Arc<Envelope>) -> Result<Series<S>, BraidError> {
        if l.generator == Generator::Id {
            return Ok(Series::one(env, self.n));
        }
        let k = env.quotient().family().n();
        let assignment = StrandAssignment::new(l.groups.clone(), k, !covers(l, k))?;
        let v = superscript_eval(&self.base(l.generator)?, &assignment, env)?;
        Ok(if l.inverse { v.inverse()? } else { v })
    }

    /// Evaluate a word as the product of its letters in path order.
    pub fn evaluate(&self, w: &BraidMorphism) -> Result<Series<S>, BraidError> {
        let env = Envelope::of(&self.family(w.n()), self.n)?;
        let values: Vec<Series<S>> = w.letters().iter().map(|l| self.letter(l, &env)).collect::<Result<_, _>>()?;
        let refs: Vec<&Series<S>> = values.iter().collect();
        Ok(Series::path(&env, self.n, &refs)?)
    }
}

fn covers(l: &Letter, k: usize) -> bool {
    let mut all: Vec<usize> = l.groups.iter().flatten().copied().collect();
    all.sort_unstable();
    all == (1..=k).collect::<Vec<_>>()
}
