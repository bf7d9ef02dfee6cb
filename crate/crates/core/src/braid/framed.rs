//! Framed braids as elements of the semidirect product `Z^n ⋊ B_n`.

use super::BraidError;
use std::fmt;

/// A framed braid `f_1^{r_1} ... f_n^{r_n} alpha`.
///
/// The braid part is kept as a freely reduced word in the Artin generators
/// `sigma_i^{±1}` (`1 <= i < n`); equality compares framings and reduced
/// words, so it is exact only for words in free normal form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FramedBraid {
    framing: Vec<i64>,
    word: Vec<(usize, i8)>,
    perm: Vec<usize>,
}

impl FramedBraid {
    /// The identity on `n` strands.
    pub fn identity(n: usize) -> Self {
        FramedBraid { framing: vec![0; n], word: Vec::new(), perm: (0..n).collect() }
    }

    /// The Artin generator `sigma_i` (or its inverse) on `n` strands.
    pub fn sigma(n: usize, i: usize, inverse: bool) -> Result<Self, BraidError> {
        if i == 0 || i >= n {
            return Err(BraidError::Parse(format!("sigma_{i} needs 1 <= i < {n}")));
        }
        let mut perm: Vec<usize> = (0..n).collect();
        perm.swap(i - 1, i);
        Ok(FramedBraid { framing: vec![0; n], word: vec![(i, if inverse { -1 } else { 1 })], perm })
    }

    /// The framing generator `f_i^k` on `n` strands.
    pub fn twist(n: usize, i: usize, k: i64) -> Result<Self, BraidError> {
        if i == 0 || i > n {
            return Err(BraidError::Parse(format!("f_{i} needs 1 <= i <= {n}")));
        }
        let mut b = FramedBraid::identity(n);
        b.framing[i - 1] = k;
        Ok(b)
    }

    /// A pure framing with an unframed braid given by Artin letters
    /// `(i, ±1)`.
    pub fn new(framing: Vec<i64>, word: &[(usize, i8)]) -> Result<Self, BraidError> {
        let n = framing.len();
        let mut b = FramedBraid { framing, word: Vec::new(), perm: (0..n).collect() };
        for &(i, e) in word {
            if e != 1 && e != -1 {
                return Err(BraidError::Parse(format!("exponent {e} must be ±1")));
            }
            let s = FramedBraid::sigma(n, i, e < 0)?;
            b = b.mul_braid_only(&s);
        }
        Ok(b)
    }

    /// Number of strands.
    pub fn n(&self) -> usize {
        self.framing.len()
    }

    /// Framing vector.
    pub fn framing(&self) -> &[i64] {
        &self.framing
    }

    /// Reduced Artin word.
    pub fn word(&self) -> &[(usize, i8)] {
        &self.word
    }

    /// Underlying permutation, as `alpha(i)` for `i = 1..=n`.
    pub fn permutation(&self) -> Vec<usize> {
        self.perm.iter().map(|p| p + 1).collect()
    }

    fn mul_braid_only(&self, other: &Self) -> Self {
        let mut word = self.word.clone();
        for &(i, e) in &other.word {
            if word.last() == Some(&(i, -e)) {
                word.pop();
            } else {
                word.push((i, e));
            }
        }
        let perm = self.perm.iter().map(|&a| other.perm[a]).collect();
        FramedBraid { framing: self.framing.clone(), word, perm }
    }

    /// Product `(r, alpha)(s, beta) = (r_i + s_{alpha(i)}, alpha beta)`.
    pub fn mul(&self, other: &Self) -> Result<Self, BraidError> {
        if self.n() != other.n() {
            return Err(BraidError::StrandMismatch(self.n(), other.n()));
        }
        let mut out = self.mul_braid_only(other);
        for i in 0..self.n() {
            out.framing[i] = self.framing[i] + other.framing[self.perm[i]];
        }
        Ok(out)
    }

    /// Inverse element.
    pub fn inverse(&self) -> Self {
        let n = self.n();
        let mut inv_perm = vec![0; n];
        for (i, &p) in self.perm.iter().enumerate() {
            inv_perm[p] = i;
        }
        let word = self.word.iter().rev().map(|&(i, e)| (i, -e)).collect();
        let framing = (0..n).map(|i| -self.framing[inv_perm[i]]).collect();
        FramedBraid { framing, word, perm: inv_perm }
    }
}

impl fmt::Display for FramedBraid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (i, r) in self.framing.iter().enumerate() {
            if *r != 0 {
                parts.push(format!("f{}^{}", i + 1, r));
            }
        }
        for (i, e) in &self.word {
            parts.push(if *e > 0 { format!("s{i}") } else { format!("s{i}^-1") });
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join(" "))
        }
    }
}
