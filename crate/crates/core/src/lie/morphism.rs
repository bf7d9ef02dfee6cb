//! Lie algebra maps defined by images of generators.

use super::alphabet::Alphabet;
use super::lyndon::{standard_factorization, Word};
use super::poly::LiePoly;
use super::quotient::{GradedQuotient, QuotientError};
use crate::scalar::{Rat, Scalar};
use parking_lot::RwLock;
use std::collections::HashMap;
use std::sync::Arc;

/// Map from the free Lie algebra on `source` into a graded quotient, given by
/// the images of the generators and extended as a Lie morphism.
///
/// Images may be inhomogeneous; terms above the truncation bound of the target
/// are dropped.
#[derive(Debug)]
pub struct LieMap {
    source: Arc<Alphabet>,
    target: Arc<GradedQuotient>,
    images: Vec<LiePoly<Rat>>,
    max_weight: u32,
    cache: RwLock<HashMap<Word, LiePoly<Rat>>>,
}

impl LieMap {
    /// Build a map; `images[l]` is the image of letter `l` of `source`.
    pub fn new(
        source: Arc<Alphabet>,
        target: Arc<GradedQuotient>,
        images: Vec<LiePoly<Rat>>,
    ) -> Result<Self, QuotientError> {
        if images.len() != source.len() {
            return Err(QuotientError::InvalidParameters(format!(
                "{} images for {} generators",
                images.len(),
                source.len()
            )));
        }
        let max_weight = target.max_weight();
        let mut reduced = Vec::with_capacity(images.len());
        for im in images {
            reduced.push(target.reduce(&im.truncate(max_weight))?);
        }
        Ok(LieMap { source, target, images: reduced, max_weight, cache: RwLock::new(HashMap::new()) })
    }

    /// Source alphabet.
    pub fn source(&self) -> &Arc<Alphabet> {
        &self.source
    }

    /// Target algebra.
    pub fn target(&self) -> &Arc<GradedQuotient> {
        &self.target
    }

    /// Image of a generator.
    pub fn generator_image(&self, l: usize) -> &LiePoly<Rat> {
        &self.images[l]
    }

    /// Image of the Lyndon basis element `P_w`, in target normal form.
    pub fn image_word(&self, w: &[u8]) -> LiePoly<Rat> {
        if w.len() == 1 {
            return self.images[w[0] as usize].clone();
        }
        if let Some(p) = self.cache.read().get(w) {
            return p.clone();
        }
        let (u, v) = standard_factorization(w).expect("length at least two");
        let iu = self.image_word(u);
        let iv = self.image_word(v);
        let p = iu.bracket_trunc(&iv, Some(self.max_weight)).expect("same alphabet");
        let p = self.target.reduce(&p).expect("within bound");
        self.cache.write().insert(w.to_vec(), p.clone());
        p
    }

    /// Apply the map to a Lie polynomial over the source alphabet.
    pub fn apply<S: Scalar>(&self, a: &LiePoly<S>) -> Result<LiePoly<S>, QuotientError> {
        if a.alphabet().as_ref() != self.source.as_ref() {
            return Err(QuotientError::AlphabetMismatch);
        }
        let mut out = LiePoly::zero(self.target.alphabet());
        for (w, c) in a.terms() {
            for (v, k) in self.image_word(w).terms() {
                out.add_term(v.clone(), c.mul_rat(k));
            }
        }
        Ok(out)
    }
}

/// Check that generator images define a morphism `src -> tgt` through weight
/// `max_weight`: every defining relation of `src` must map to zero.
///
/// Each image must be homogeneous, with weight equal to a common multiple `k`
/// of the weight of its generator (`k = 1` for graded maps).
pub fn check_hom(
    src: &GradedQuotient,
    tgt: &Arc<GradedQuotient>,
    images: Vec<LiePoly<Rat>>,
    max_weight: u32,
) -> Result<bool, QuotientError> {
    let mut factor: Option<u32> = None;
    for (l, im) in images.iter().enumerate() {
        if im.is_zero() {
            continue;
        }
        let w = im
            .homogeneous_weight()
            .ok_or_else(|| QuotientError::InvalidParameters(format!("image of generator {l} is not homogeneous")))?;
        let gw = src.alphabet().weight(l as u8);
        if w % gw != 0 || factor.is_some_and(|f| f != w / gw) {
            return Err(QuotientError::InvalidParameters(format!(
                "weight mismatch on generator {}",
                src.alphabet().symbol(l as u8).name
            )));
        }
        factor = Some(w / gw);
    }
    let map = LieMap::new(src.alphabet().clone(), tgt.clone(), images)?;
    for r in src.relations() {
        let im = map.apply(r)?.truncate(max_weight);
        if !tgt.reduce(&im)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}
