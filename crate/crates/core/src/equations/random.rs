//! Random truncated group elements for property checks of the group laws.

use crate::envelope::{Envelope, Series};
use crate::lie::{Family, LiePoly};
use crate::scalar::{rat, Rat};
use rand::Rng;

use super::EquationError;

/// `exp` of a random combination of the nested brackets `[z1,[z2,...[zk-1,zk]]]`
/// (`zi` in `{x, y}`, `k <= n`) with coefficients `p/q`, `|p| <= 3`, `1 <= q <= 3`.
pub fn random_group_like<R: Rng>(rng: &mut R, n: u32) -> Result<Series<Rat>, EquationError> {
    let env = Envelope::of(&Family::FreeF2, n)?;
    let alphabet = env.quotient().alphabet().clone();
    let x = LiePoly::generator(&alphabet, 0);
    let y = LiePoly::generator(&alphabet, 1);
    let mut words = vec![x.clone(), y.clone()];
    let mut frontier = words.clone();
    let lie_err = |e: crate::lie::LieError| EquationError::Invalid(e.to_string());
    for _ in 1..n {
        let mut next = Vec::new();
        for w in &frontier {
            next.push(x.bracket(w).map_err(lie_err)?);
            next.push(y.bracket(w).map_err(lie_err)?);
        }
        words.extend(next.iter().cloned());
        frontier = next;
    }
    let mut lie = LiePoly::zero(&alphabet);
    for w in &words {
        let c = rat(rng.gen_range(-3..=3), rng.gen_range(1..=3));
        lie = lie.add(&w.scale(&c)).map_err(lie_err)?;
    }
    Ok(Series::exp_lie(&env, n, &lie)?)
}

/// A random nonzero rational `p/q` with `|p| <= 3` and `q` in `{1, 2}`.
pub fn random_lambda<R: Rng>(rng: &mut R) -> Rat {
    loop {
        let l = rat(rng.gen_range(-3..=3), rng.gen_range(1..=2));
        if l != rat(0, 1) {
            return l;
        }
    }
}
