//! Artin words as parenthesized braids.
//!
//! Every Artin letter `sigma_k^{±1}` is realized on the left-nested
//! parenthesization of the current strand colors: the first `k - 1` strands
//! are grouped, `Phi` brings strands `k` and `k + 1` together, `R` crosses
//! them, and `Phi^-1` restores the left-nested shape.

use super::word::BraidMorphism;
use super::{BraidError, PaObject};

fn digits(colors: &[usize]) -> String {
    colors.iter().map(|c| c.to_string()).collect()
}

/// The parenthesized braid on `n <= 9` strands given by Artin letters
/// `(k, ±1)`, read left to right, starting at the left-nested object.
pub fn artin_morphism(n: usize, letters: &[(usize, i8)]) -> Result<BraidMorphism, BraidError> {
    if n == 0 || n > 9 {
        return Err(BraidError::Parse(format!("{n} strands outside 1..=9")));
    }
    let mut colors: Vec<usize> = (1..=n).collect();
    let mut word = Vec::new();
    for &(k, e) in letters {
        if k == 0 || k >= n || (e != 1 && e != -1) {
            return Err(BraidError::Parse(format!("sigma_{k}^{e} on {n} strands")));
        }
        let (a, b) = (colors[k - 1], colors[k]);
        let cross = if e > 0 { format!("R^{{{a},{b}}}") } else { format!("R^{{{b},{a}}}!") };
        if k == 1 {
            word.push(cross);
        } else {
            let head = digits(&colors[..k - 1]);
            word.push(format!("Phi^{{{head},{a},{b}}}"));
            word.push(cross);
            word.push(format!("Phi^{{{head},{b},{a}}}!"));
        }
        colors.swap(k - 1, k);
    }
    let source = PaObject::left_nested(&(1..=n).collect::<Vec<_>>());
    BraidMorphism::parse(&source.to_string(), &word.join(" "))
}

/// The pure braid generator
/// `x_ij = sigma_{j-1} ... sigma_{i+1} sigma_i^2 sigma_{i+1}^-1 ... sigma_{j-1}^-1`
/// for `1 <= i < j <= n`.
pub fn pure_braid_generator(n: usize, i: usize, j: usize) -> Result<BraidMorphism, BraidError> {
    if i == 0 || i >= j || j > n {
        return Err(BraidError::Parse(format!("x_{i}{j} on {n} strands")));
    }
    let mut letters: Vec<(usize, i8)> = (i + 1..j).rev().map(|k| (k, 1)).collect();
    letters.extend([(i, 1), (i, 1)]);
    letters.extend((i + 1..j).map(|k| (k, -1)));
    artin_morphism(n, &letters)
}
