//! Lyndon words and the Lyndon basis of a free Lie algebra.
//!
//! Words are compared lexicographically with a proper prefix sorting before
//! its extensions. For a Lyndon word `w` the standard bracketing `P_w`
//! expands in the free associative algebra as `w` plus strictly larger words.
//! Consequently the smallest word in the support of any Lie polynomial is
//! Lyndon, which gives the triangular conversion in [`words_to_lyndon`].

use super::alphabet::Letter;
use crate::scalar::{Rat, Scalar};
use once_cell::sync::Lazy;
use parking_lot::RwLock;
use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

/// A word over letter indices.
pub type Word = Vec<Letter>;

/// Integer-coefficient polynomial in words or Lyndon words.
pub type IntTerms = Vec<(Word, i64)>;

static EXPANSIONS: Lazy<RwLock<HashMap<Word, Arc<IntTerms>>>> = Lazy::new(|| RwLock::new(HashMap::new()));
type BracketCache = RwLock<HashMap<(Word, Word), Arc<IntTerms>>>;

static BRACKETS: Lazy<BracketCache> = Lazy::new(|| RwLock::new(HashMap::new()));

/// True when `w` is a Lyndon word (nonempty and strictly smaller than each
/// of its proper suffixes).
pub fn is_lyndon(w: &[Letter]) -> bool {
    !w.is_empty() && (1..w.len()).all(|i| w < &w[i..])
}

/// Standard factorisation `w = u v` where `v` is the longest proper Lyndon
/// suffix. Returns `None` for single letters.
pub fn standard_factorization(w: &[Letter]) -> Option<(&[Letter], &[Letter])> {
    if w.len() < 2 {
        return None;
    }
    for i in 1..w.len() {
        if is_lyndon(&w[i..]) {
            return Some((&w[..i], &w[i..]));
        }
    }
    unreachable!("a suffix of length one is always Lyndon")
}

/// All Lyndon words of total weight `d` over letters with the given weights,
/// in increasing lexicographic order.
pub fn lyndon_words(weights: &[u32], d: u32) -> Vec<Word> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(weights: &[u32], left: u32, cur: &mut Word, out: &mut Vec<Word>) {
        if left == 0 {
            if is_lyndon(cur) {
                out.push(cur.clone());
            }
            return;
        }
        for (l, w) in weights.iter().enumerate() {
            if *w <= left {
                // Prune: a Lyndon word starts with its smallest letter.
                if let Some(first) = cur.first() {
                    if (l as Letter) < *first {
                        continue;
                    }
                }
                cur.push(l as Letter);
                rec(weights, left - w, cur, out);
                cur.pop();
            }
        }
    }
    rec(weights, d, &mut cur, &mut out);
    out.sort();
    out
}

/// Number of Lyndon words of total weight `d` (the dimension of the weight-`d`
/// part of the free Lie algebra on the given weighted generators).
pub fn free_graded_dim(weights: &[u32], d: u32) -> usize {
    lyndon_words(weights, d).len()
}

/// Necklace-count dimension `(1/d) sum_{e | d} mobius(e) k^{d/e}` of the
/// weight-`d` part of the free Lie algebra on `k` weight-one generators.
pub fn necklace_dim(k: u64, d: u32) -> u64 {
    let mut total: i128 = 0;
    for e in 1..=d {
        if d.is_multiple_of(e) {
            total += mobius(e) as i128 * (k as i128).pow(d / e);
        }
    }
    (total / d as i128) as u64
}

fn mobius(n: u32) -> i32 {
    let mut n = n;
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

fn add_int(acc: &mut BTreeMap<Word, i64>, w: Word, c: i64) {
    *acc.entry(w).or_insert(0) += c;
}

fn concat(a: &[Letter], b: &[Letter]) -> Word {
    let mut w = Vec::with_capacity(a.len() + b.len());
    w.extend_from_slice(a);
    w.extend_from_slice(b);
    w
}

/// Expansion of the standard bracketing `P_w` of a Lyndon word in the free
/// associative algebra.
pub fn expansion(w: &[Letter]) -> Arc<IntTerms> {
    if let Some(e) = EXPANSIONS.read().get(w) {
        return e.clone();
    }
    let terms: IntTerms = match standard_factorization(w) {
        None => vec![(w.to_vec(), 1)],
        Some((u, v)) => {
            let eu = expansion(u);
            let ev = expansion(v);
            let mut acc: BTreeMap<Word, i64> = BTreeMap::new();
            for (a, ca) in eu.iter() {
                for (b, cb) in ev.iter() {
                    add_int(&mut acc, concat(a, b), ca * cb);
                    add_int(&mut acc, concat(b, a), -ca * cb);
                }
            }
            acc.into_iter().filter(|(_, c)| *c != 0).collect()
        }
    };
    let arc = Arc::new(terms);
    EXPANSIONS.write().insert(w.to_vec(), arc.clone());
    arc
}

/// Error raised when a polynomial in words is not a Lie polynomial.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("polynomial is not a Lie element: smallest word {0:?} is not Lyndon")]
pub struct NotLie(pub Word);

/// Convert an associative polynomial that is known to be a Lie element into
/// coordinates on the Lyndon basis.
pub fn words_to_lyndon<S: Scalar>(mut poly: BTreeMap<Word, S>) -> Result<BTreeMap<Word, S>, NotLie> {
    poly.retain(|_, c| !c.is_zero());
    let mut out = BTreeMap::new();
    while let Some((w, c)) = poly.pop_first() {
        if !is_lyndon(&w) {
            return Err(NotLie(w));
        }
        for (v, k) in expansion(&w).iter() {
            if *v == w {
                continue;
            }
            let delta = c.mul_rat(&Rat::from_integer((*k).into()));
            let e = poly.entry(v.clone()).or_insert_with(S::zero);
            *e = e.clone() - delta;
            if e.is_zero() {
                poly.remove(v);
            }
        }
        out.insert(w, c);
    }
    Ok(out)
}

/// Integer-valued variant of [`words_to_lyndon`].
fn words_to_lyndon_int(mut poly: BTreeMap<Word, i64>) -> IntTerms {
    poly.retain(|_, c| *c != 0);
    let mut out = Vec::new();
    while let Some((w, c)) = poly.pop_first() {
        debug_assert!(is_lyndon(&w), "bracket expansion produced a non-Lie polynomial");
        for (v, k) in expansion(&w).iter() {
            if *v == w {
                continue;
            }
            let e = poly.entry(v.clone()).or_insert(0);
            *e -= c * k;
            if *e == 0 {
                poly.remove(v);
            }
        }
        out.push((w, c));
    }
    out
}

/// Lyndon coordinates of the bracket `[P_u, P_v]` of two Lyndon basis
/// elements (integer coefficients).
pub fn bracket_basis(u: &[Letter], v: &[Letter]) -> Arc<IntTerms> {
    if u == v {
        return Arc::new(Vec::new());
    }
    if u > v {
        let r = bracket_basis(v, u);
        return Arc::new(r.iter().map(|(w, c)| (w.clone(), -c)).collect());
    }
    let key = (u.to_vec(), v.to_vec());
    if let Some(r) = BRACKETS.read().get(&key) {
        return r.clone();
    }
    // u < v: when u is a letter or the right standard factor of u is >= v,
    // the concatenation uv is Lyndon with standard factorisation (u, v).
    let direct = match standard_factorization(u) {
        None => true,
        Some((_, u2)) => u2 >= v,
    };
    let terms = if direct {
        vec![(concat(u, v), 1)]
    } else {
        let eu = expansion(u);
        let ev = expansion(v);
        let mut acc: BTreeMap<Word, i64> = BTreeMap::new();
        for (a, ca) in eu.iter() {
            for (b, cb) in ev.iter() {
                add_int(&mut acc, concat(a, b), ca * cb);
                add_int(&mut acc, concat(b, a), -ca * cb);
            }
        }
        words_to_lyndon_int(acc)
    };
    let arc = Arc::new(terms);
    BRACKETS.write().insert(key, arc.clone());
    arc
}

/// Expand a Lyndon-coordinate polynomial into the free associative algebra.
pub fn lyndon_to_words<S: Scalar>(poly: &BTreeMap<Word, S>) -> BTreeMap<Word, S> {
    let mut acc: BTreeMap<Word, S> = BTreeMap::new();
    for (w, c) in poly {
        for (v, k) in expansion(w).iter() {
            let e = acc.entry(v.clone()).or_insert_with(S::zero);
            *e = e.clone() + c.mul_rat(&Rat::from_integer((*k).into()));
        }
    }
    acc.retain(|_, c| !c.is_zero());
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lyndon_basics() {
        assert!(is_lyndon(&[0, 1]));
        assert!(!is_lyndon(&[1, 0]));
        assert!(!is_lyndon(&[0, 0]));
        assert!(is_lyndon(&[0, 0, 1]));
        assert!(is_lyndon(&[0, 1, 1]));
        assert_eq!(standard_factorization(&[0, 0, 1]), Some((&[0u8][..], &[0u8, 1][..])));
        assert_eq!(standard_factorization(&[0, 1, 1]), Some((&[0u8, 1][..], &[1u8][..])));
    }

    #[test]
    fn counts_match_necklace_formula() {
        for k in 1..=4u64 {
            let weights = vec![1u32; k as usize];
            for d in 1..=6 {
                assert_eq!(free_graded_dim(&weights, d) as u64, necklace_dim(k, d), "k={k} d={d}");
            }
        }
        assert_eq!(necklace_dim(2, 3), 2);
    }

    #[test]
    fn expansion_of_xy() {
        let e = expansion(&[0, 1]);
        assert_eq!(*e, vec![(vec![0, 1], 1), (vec![1, 0], -1)]);
    }

    #[test]
    fn bracket_is_antisymmetric() {
        let a = bracket_basis(&[0, 1], &[1]);
        let b = bracket_basis(&[1], &[0, 1]);
        let neg: IntTerms = b.iter().map(|(w, c)| (w.clone(), -c)).collect();
        assert_eq!(*a, neg);
    }
}
