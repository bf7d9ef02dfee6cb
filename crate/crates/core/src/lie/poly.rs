//! Lie polynomials in Lyndon normal form.

use super::alphabet::{Alphabet, Letter};
use super::lyndon::{bracket_basis, is_lyndon, words_to_lyndon, NotLie, Word};
use crate::scalar::{Rat, Scalar};
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

/// Errors raised by Lie polynomial operations.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum LieError {
    /// Operands live over different alphabets.
    #[error("alphabet mismatch")]
    AlphabetMismatch,
    /// A key is not a Lyndon word.
    #[error("word {0:?} is not Lyndon")]
    NotLyndon(Word),
    /// Conversion from associative words failed.
    #[error(transparent)]
    NotLie(#[from] NotLie),
    /// Text could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),
}

/// Linear combination of Lyndon basis elements of a free Lie algebra.
///
/// Keys are Lyndon words (standing for their standard bracketing) and no zero
/// coefficient is stored.
#[derive(Clone, PartialEq)]
pub struct LiePoly<S: Scalar = Rat> {
    alphabet: Arc<Alphabet>,
    terms: BTreeMap<Word, S>,
}

impl<S: Scalar> fmt::Debug for LiePoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> =
            self.terms.iter().map(|(w, c)| format!("{:?}*{}", c, self.alphabet.render_word(w))).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl<S: Scalar> LiePoly<S> {
    /// The zero element.
    pub fn zero(alphabet: &Arc<Alphabet>) -> Self {
        LiePoly { alphabet: alphabet.clone(), terms: BTreeMap::new() }
    }

    /// A single generator.
    pub fn generator(alphabet: &Arc<Alphabet>, l: Letter) -> Self {
        Self::basis(alphabet, vec![l])
    }

    /// A Lyndon basis element.
    pub fn basis(alphabet: &Arc<Alphabet>, w: Word) -> Self {
        debug_assert!(is_lyndon(&w));
        let mut terms = BTreeMap::new();
        terms.insert(w, S::one());
        LiePoly { alphabet: alphabet.clone(), terms }
    }

    /// Build from Lyndon terms; zero coefficients are dropped.
    pub fn from_terms(alphabet: &Arc<Alphabet>, terms: impl IntoIterator<Item = (Word, S)>) -> Result<Self, LieError> {
        let mut out = Self::zero(alphabet);
        for (w, c) in terms {
            if !is_lyndon(&w) {
                return Err(LieError::NotLyndon(w));
            }
            out.add_term(w, c);
        }
        Ok(out)
    }

    /// Build from an associative polynomial that is a Lie element.
    pub fn from_words(alphabet: &Arc<Alphabet>, words: BTreeMap<Word, S>) -> Result<Self, LieError> {
        let terms = words_to_lyndon(words)?;
        Ok(LiePoly { alphabet: alphabet.clone(), terms })
    }

    /// The alphabet.
    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    /// Terms keyed by Lyndon word.
    pub fn terms(&self) -> &BTreeMap<Word, S> {
        &self.terms
    }

    /// Consume into the term map.
    pub fn into_terms(self) -> BTreeMap<Word, S> {
        self.terms
    }

    /// Coefficient of a Lyndon word.
    pub fn coeff(&self, w: &[Letter]) -> S {
        self.terms.get(w).cloned().unwrap_or_else(S::zero)
    }

    /// True when all coefficients vanish.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True when every coefficient is negligible for the scalar type.
    pub fn is_negligible(&self) -> bool {
        self.terms.values().all(|c| c.is_negligible())
    }

    /// Add `c` times the basis element `w`.
    pub fn add_term(&mut self, w: Word, c: S) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(w.clone()).or_insert_with(S::zero);
        *e = e.clone() + c;
        if e.is_zero() {
            self.terms.remove(&w);
        }
    }

    fn check(&self, other: &Self) -> Result<(), LieError> {
        if Arc::ptr_eq(&self.alphabet, &other.alphabet) || self.alphabet == other.alphabet {
            Ok(())
        } else {
            Err(LieError::AlphabetMismatch)
        }
    }

    /// Sum.
    pub fn add(&self, other: &Self) -> Result<Self, LieError> {
        self.check(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    /// Difference.
    pub fn sub(&self, other: &Self) -> Result<Self, LieError> {
        self.check(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), -c.clone());
        }
        Ok(out)
    }

    /// Scalar multiple.
    pub fn scale(&self, s: &S) -> Self {
        let mut out = Self::zero(&self.alphabet);
        for (w, c) in &self.terms {
            out.add_term(w.clone(), c.clone() * s.clone());
        }
        out
    }

    /// Multiple by an exact rational.
    pub fn scale_rat(&self, r: &Rat) -> Self {
        let mut out = Self::zero(&self.alphabet);
        for (w, c) in &self.terms {
            out.add_term(w.clone(), c.mul_rat(r));
        }
        out
    }

    /// Negation.
    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -c.clone();
        }
        out
    }

    /// Weight of a Lyndon word.
    pub fn word_weight(&self, w: &[Letter]) -> u32 {
        self.alphabet.word_weight(w)
    }

    /// Smallest and largest weights present, or `None` for zero.
    pub fn weight_range(&self) -> Option<(u32, u32)> {
        let ws: Vec<u32> = self.terms.keys().map(|w| self.word_weight(w)).collect();
        Some((*ws.iter().min()?, *ws.iter().max()?))
    }

    /// Weight when the polynomial is nonzero and homogeneous.
    pub fn homogeneous_weight(&self) -> Option<u32> {
        match self.weight_range() {
            Some((a, b)) if a == b => Some(a),
            _ => None,
        }
    }

    /// Component of a given total weight.
    pub fn component(&self, d: u32) -> Self {
        LiePoly {
            alphabet: self.alphabet.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| self.alphabet.word_weight(w) == d)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    /// Drop every term of weight above `max`.
    pub fn truncate(&self, max: u32) -> Self {
        LiePoly {
            alphabet: self.alphabet.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| self.alphabet.word_weight(w) <= max)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    /// Lie bracket in Lyndon normal form.
    pub fn bracket(&self, other: &Self) -> Result<Self, LieError> {
        self.bracket_trunc(other, None)
    }

    /// Lie bracket keeping only terms of weight at most `max`.
    pub fn bracket_trunc(&self, other: &Self, max: Option<u32>) -> Result<Self, LieError> {
        self.check(other)?;
        let mut acc: BTreeMap<Word, S> = BTreeMap::new();
        for (u, cu) in &self.terms {
            let wu = self.alphabet.word_weight(u);
            for (v, cv) in &other.terms {
                if let Some(m) = max {
                    if wu + self.alphabet.word_weight(v) > m {
                        continue;
                    }
                }
                let prod = cu.clone() * cv.clone();
                for (w, k) in bracket_basis(u, v).iter() {
                    let e = acc.entry(w.clone()).or_insert_with(S::zero);
                    *e = e.clone() + prod.mul_rat(&Rat::from_integer((*k).into()));
                }
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Ok(LiePoly { alphabet: self.alphabet.clone(), terms: acc })
    }

    /// Expansion in the free associative algebra.
    pub fn to_words(&self) -> BTreeMap<Word, S> {
        super::lyndon::lyndon_to_words(&self.terms)
    }

    /// Map coefficients into another scalar type.
    pub fn map_scalar<T: Scalar>(&self, f: impl Fn(&S) -> T) -> LiePoly<T> {
        let mut out = LiePoly::<T>::zero(&self.alphabet);
        for (w, c) in &self.terms {
            out.add_term(w.clone(), f(c));
        }
        out
    }

    /// Serialise as `<lyndon-word> <coefficient>` lines in lexicographic order.
    pub fn serialize(&self) -> String {
        let mut s = String::new();
        for (w, c) in &self.terms {
            s.push_str(&self.alphabet.render_word(w));
            s.push(' ');
            s.push_str(&c.render());
            s.push('\n');
        }
        s
    }
}

impl LiePoly<Rat> {
    /// Parse the text produced by [`LiePoly::serialize`].
    pub fn parse(alphabet: &Arc<Alphabet>, text: &str) -> Result<Self, LieError> {
        let mut out = Self::zero(alphabet);
        for line in text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')) {
            let (w, c) =
                line.split_once(char::is_whitespace).ok_or_else(|| LieError::Parse(format!("bad line '{line}'")))?;
            let word = alphabet.parse_word(w).ok_or_else(|| LieError::Parse(format!("unknown word '{w}'")))?;
            if !is_lyndon(&word) {
                return Err(LieError::NotLyndon(word));
            }
            let coeff: Rat = c.trim().parse().map_err(|_| LieError::Parse(format!("bad coefficient '{c}'")))?;
            out.add_term(word, coeff);
        }
        Ok(out)
    }
}

/// Bracket of generator letters, written left-nested: `[[a,b],c]...`.
pub fn nested_bracket<S: Scalar>(alphabet: &Arc<Alphabet>, letters: &[Letter]) -> LiePoly<S> {
    let mut acc = LiePoly::generator(alphabet, letters[0]);
    for l in &letters[1..] {
        acc = acc.bracket(&LiePoly::generator(alphabet, *l)).expect("same alphabet");
    }
    acc
}
