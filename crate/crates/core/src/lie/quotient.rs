//! Graded quotients of free Lie algebras by homogeneous relations.
//!
//! The ideal generated by the relations is built degree by degree:
//! `I_d = span(R_d) + sum_l [l, I_{d - w(l)}]` over the generators `l`.
//! Each `I_d` is stored as a reduced row echelon form over the Lyndon words of
//! weight `d`; the Lyndon words that are not pivots index the quotient basis.

use super::alphabet::{Alphabet, Letter};
use super::family::Family;
use super::lyndon::{lyndon_words, Word};
use super::poly::LiePoly;
use crate::linalg::{Echelon, SparseVec};
use crate::scalar::{Rat, Scalar};
use rayon::prelude::*;
use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;
use std::sync::Arc;

/// Errors raised when building or using a quotient.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum QuotientError {
    /// A relation has terms of several weights.
    #[error("relation {0} is not homogeneous")]
    Inhomogeneous(usize),
    /// A requested weight is beyond the computed range.
    #[error("weight {0} exceeds the truncation bound {1}")]
    WeightTooLarge(u32, u32),
    /// Operand over a different alphabet.
    #[error("alphabet mismatch")]
    AlphabetMismatch,
    /// Invalid family parameters.
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
}

/// Per-degree data of a quotient.
#[derive(Clone, Debug)]
pub struct DegreeData {
    /// Lyndon words of this weight, sorted.
    pub words: Vec<Word>,
    col: HashMap<Word, usize>,
    /// Echelon form of the ideal in this weight.
    pub ideal: Echelon,
    /// Columns (indices into `words`) that index the quotient basis.
    pub basis_cols: Vec<usize>,
}

impl DegreeData {
    /// Dimension of the free Lie algebra in this weight.
    pub fn free_dim(&self) -> usize {
        self.words.len()
    }

    /// Dimension of the quotient in this weight.
    pub fn dim(&self) -> usize {
        self.basis_cols.len()
    }

    /// Column of a Lyndon word.
    pub fn column(&self, w: &[Letter]) -> Option<usize> {
        self.col.get(w).copied()
    }
}

/// A presented graded Lie algebra, computed up to a fixed weight.
#[derive(Debug)]
pub struct GradedQuotient {
    family: Family,
    alphabet: Arc<Alphabet>,
    relations: Vec<LiePoly<Rat>>,
    max_weight: u32,
    degrees: Vec<DegreeData>,
    basis: Vec<Word>,
    basis_weight: Vec<u32>,
    basis_index: HashMap<Word, u32>,
}

impl GradedQuotient {
    /// Build the quotient of the free Lie algebra on `alphabet` by the ideal
    /// generated by `relations`, through weight `max_weight`.
    pub fn new(
        family: Family,
        alphabet: Arc<Alphabet>,
        relations: Vec<LiePoly<Rat>>,
        max_weight: u32,
    ) -> Result<Self, QuotientError> {
        let mut by_weight: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
        for (i, r) in relations.iter().enumerate() {
            if r.alphabet().as_ref() != alphabet.as_ref() {
                return Err(QuotientError::AlphabetMismatch);
            }
            if r.is_zero() {
                continue;
            }
            let w = r.homogeneous_weight().ok_or(QuotientError::Inhomogeneous(i))?;
            by_weight.entry(w).or_default().push(i);
        }
        let weights: Vec<u32> = alphabet.generators().iter().map(|g| g.weight).collect();
        let mut degrees: Vec<DegreeData> = Vec::with_capacity(max_weight as usize + 1);
        degrees.push(DegreeData { words: vec![], col: HashMap::new(), ideal: Echelon::new(), basis_cols: vec![] });
        for d in 1..=max_weight {
            let words = lyndon_words(&weights, d);
            let col: HashMap<Word, usize> = words.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
            let mut ideal = Echelon::new();
            let to_vec =
                |p: &LiePoly<Rat>| -> SparseVec { p.terms().iter().map(|(w, c)| (col[w], c.clone())).collect() };
            if let Some(idx) = by_weight.get(&d) {
                for i in idx {
                    ideal.insert(&to_vec(&relations[*i]));
                }
            }
            // Brackets of generators with the ideal in lower weights.
            let mut jobs: Vec<(Letter, u32)> = Vec::new();
            for (l, w) in weights.iter().enumerate() {
                if *w < d {
                    jobs.push((l as Letter, d - w));
                }
            }
            let vectors: Vec<Vec<SparseVec>> = jobs
                .par_iter()
                .map(|(l, lower)| {
                    let lower_data = &degrees[*lower as usize];
                    let gen = LiePoly::<Rat>::generator(&alphabet, *l);
                    lower_data
                        .ideal
                        .rows()
                        .values()
                        .map(|row| {
                            let p = LiePoly::from_terms(
                                &alphabet,
                                row.iter().map(|(c, x)| (lower_data.words[*c].clone(), x.clone())),
                            )
                            .expect("ideal rows are Lyndon");
                            to_vec(&gen.bracket(&p).expect("same alphabet"))
                        })
                        .collect()
                })
                .collect();
            for batch in vectors {
                for v in batch {
                    ideal.insert(&v);
                }
            }
            let basis_cols = (0..words.len()).filter(|c| !ideal.is_pivot(*c)).collect();
            degrees.push(DegreeData { words, col, ideal, basis_cols });
        }
        let mut basis = Vec::new();
        let mut basis_weight = Vec::new();
        let mut basis_index = HashMap::new();
        for (d, data) in degrees.iter().enumerate() {
            for c in &data.basis_cols {
                basis_index.insert(data.words[*c].clone(), basis.len() as u32);
                basis.push(data.words[*c].clone());
                basis_weight.push(d as u32);
            }
        }
        Ok(GradedQuotient { family, alphabet, relations, max_weight, degrees, basis, basis_weight, basis_index })
    }

    /// Family tag.
    pub fn family(&self) -> &Family {
        &self.family
    }

    /// Generator alphabet.
    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    /// Defining relations.
    pub fn relations(&self) -> &[LiePoly<Rat>] {
        &self.relations
    }

    /// Largest computed weight.
    pub fn max_weight(&self) -> u32 {
        self.max_weight
    }

    /// Data of one weight.
    pub fn degree(&self, d: u32) -> Result<&DegreeData, QuotientError> {
        self.degrees.get(d as usize).ok_or(QuotientError::WeightTooLarge(d, self.max_weight))
    }

    /// Quotient dimension in weight `d`.
    pub fn dim(&self, d: u32) -> Result<usize, QuotientError> {
        Ok(self.degree(d)?.dim())
    }

    /// Quotient dimensions for weights `1..=max`.
    pub fn dims(&self, max: u32) -> Result<Vec<usize>, QuotientError> {
        (1..=max).map(|d| self.dim(d)).collect()
    }

    /// Global quotient basis, ordered by (weight, column).
    pub fn basis(&self) -> &[Word] {
        &self.basis
    }

    /// Number of basis elements through the truncation bound.
    pub fn basis_len(&self) -> usize {
        self.basis.len()
    }

    /// Weight of a basis element.
    pub fn basis_weight(&self, id: u32) -> u32 {
        self.basis_weight[id as usize]
    }

    /// Basis id of a normal-form Lyndon word.
    pub fn basis_id(&self, w: &[Letter]) -> Option<u32> {
        self.basis_index.get(w).copied()
    }

    /// Basis element as a Lie polynomial.
    pub fn basis_element<S: Scalar>(&self, id: u32) -> LiePoly<S> {
        LiePoly::basis(&self.alphabet, self.basis[id as usize].clone())
    }

    /// Generator as a Lie polynomial.
    pub fn gen<S: Scalar>(&self, name: &str) -> LiePoly<S> {
        let l = self.alphabet.letter_by_name(name).unwrap_or_else(|| panic!("no generator {name}"));
        LiePoly::generator(&self.alphabet, l)
    }

    /// Normal form of a Lie polynomial: the unique representative supported
    /// on quotient basis words.
    pub fn reduce<S: Scalar>(&self, a: &LiePoly<S>) -> Result<LiePoly<S>, QuotientError> {
        if a.alphabet().as_ref() != self.alphabet.as_ref() {
            return Err(QuotientError::AlphabetMismatch);
        }
        let mut by_deg: BTreeMap<u32, BTreeMap<usize, S>> = BTreeMap::new();
        for (w, c) in a.terms() {
            let d = self.alphabet.word_weight(w);
            let data = self.degree(d)?;
            let col = data.column(w).expect("Lyndon word of this weight");
            by_deg.entry(d).or_default().insert(col, c.clone());
        }
        let mut out = LiePoly::zero(&self.alphabet);
        for (d, mut v) in by_deg {
            let data = &self.degrees[d as usize];
            let hits: Vec<usize> = v.keys().copied().filter(|c| data.ideal.is_pivot(*c)).collect();
            for c in hits {
                if let Some(coef) = v.remove(&c) {
                    for (k, x) in &data.ideal.rows()[&c] {
                        if *k == c {
                            continue;
                        }
                        let e = v.entry(*k).or_insert_with(S::zero);
                        *e = e.clone() - coef.mul_rat(x);
                    }
                }
            }
            for (c, x) in v {
                out.add_term(data.words[c].clone(), x);
            }
        }
        Ok(out)
    }

    /// Coordinates on the global quotient basis.
    pub fn coords<S: Scalar>(&self, a: &LiePoly<S>) -> Result<BTreeMap<u32, S>, QuotientError> {
        let r = self.reduce(a)?;
        Ok(r.terms().iter().map(|(w, c)| (self.basis_index[w], c.clone())).collect())
    }

    /// Lie polynomial from global basis coordinates.
    pub fn from_coords<S: Scalar>(&self, coords: &BTreeMap<u32, S>) -> LiePoly<S> {
        let mut out = LiePoly::zero(&self.alphabet);
        for (id, c) in coords {
            out.add_term(self.basis[*id as usize].clone(), c.clone());
        }
        out
    }

    /// Bracket computed in the quotient (normal form), truncated at the bound.
    pub fn bracket<S: Scalar>(&self, a: &LiePoly<S>, b: &LiePoly<S>) -> Result<LiePoly<S>, QuotientError> {
        let p = a.bracket_trunc(b, Some(self.max_weight)).map_err(|_| QuotientError::AlphabetMismatch)?;
        self.reduce(&p)
    }

    /// True when `a` brackets to zero with every basis element of weight at
    /// most `max_weight - weight(a)`.
    pub fn is_central<S: Scalar>(&self, a: &LiePoly<S>, max_weight: u32) -> Result<bool, QuotientError> {
        if max_weight > self.max_weight {
            return Err(QuotientError::WeightTooLarge(max_weight, self.max_weight));
        }
        let wa = match a.weight_range() {
            None => return Ok(true),
            Some((lo, _)) => lo,
        };
        for (id, w) in self.basis.iter().enumerate() {
            if self.basis_weight[id] + wa > max_weight {
                continue;
            }
            let b = LiePoly::<S>::basis(&self.alphabet, w.clone());
            let p = a.bracket_trunc(&b, Some(max_weight)).map_err(|_| QuotientError::AlphabetMismatch)?;
            if !self.reduce(&p)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Dimension table as `degree<TAB>dim` lines.
    pub fn dimension_table(&self, max: u32) -> Result<String, QuotientError> {
        let mut s = String::new();
        for d in 1..=max {
            writeln!(s, "{}\t{}", d, self.dim(d)?).unwrap();
        }
        Ok(s)
    }

    /// Serialised quotient basis, one `<weight> <lyndon-word>` line per
    /// element.
    pub fn serialize_basis(&self) -> String {
        let mut s = String::new();
        for (id, w) in self.basis.iter().enumerate() {
            writeln!(s, "{} {}", self.basis_weight[id], self.alphabet.render_word(w)).unwrap();
        }
        s
    }

    /// Human-readable bracket form of a basis element, e.g. `[t12,[t12,t23]]`.
    pub fn render_bracket(&self, w: &[Letter]) -> String {
        render_bracketing(&self.alphabet, w)
    }
}

/// Standard bracketing of a Lyndon word as text.
pub fn render_bracketing(alphabet: &Alphabet, w: &[Letter]) -> String {
    match super::lyndon::standard_factorization(w) {
        None => alphabet.symbol(w[0]).name.clone(),
        Some((u, v)) => {
            format!("[{},{}]", render_bracketing(alphabet, u), render_bracketing(alphabet, v))
        }
    }
}

/// Sum of Lie polynomials over a common alphabet.
pub fn sum<S: Scalar>(alphabet: &Arc<Alphabet>, items: &[LiePoly<S>]) -> LiePoly<S> {
    let mut out = LiePoly::zero(alphabet);
    for p in items {
        for (w, c) in p.terms() {
            out.add_term(w.clone(), c.clone());
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rint;

    #[test]
    fn free_quotient_has_lyndon_basis() {
        let a = Arc::new(Alphabet::free(&["x", "y"]));
        let q = GradedQuotient::new(Family::FreeF2, a, vec![], 5).unwrap();
        assert_eq!(q.dims(5).unwrap(), vec![2, 1, 2, 3, 6]);
    }

    #[test]
    fn abelian_quotient() {
        let a = Arc::new(Alphabet::free(&["x", "y"]));
        let r = LiePoly::<Rat>::generator(&a, 0).bracket(&LiePoly::generator(&a, 1)).unwrap();
        let q = GradedQuotient::new(Family::Custom("ab".into()), a.clone(), vec![r.clone()], 4).unwrap();
        assert_eq!(q.dims(4).unwrap(), vec![2, 0, 0, 0]);
        assert!(q.reduce(&r.scale(&rint(3))).unwrap().is_zero());
    }
}
