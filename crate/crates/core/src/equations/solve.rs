//! Weight-by-weight affine solver for group-like equation systems.
//!
//! The unknowns are Lie elements (logarithms of group-like data), one per
//! slot. Once every weight below `d` is fixed, the weight-`d` component of
//! every residual is an affine function of the weight-`d` coordinates of the
//! unknowns. Its linear part is recovered by finite differences against the
//! unit vectors and the resulting system is solved exactly.

use crate::envelope::{Mono, Series};
use crate::lie::{GradedQuotient, LiePoly};
use crate::linalg::{solve_affine, AffineSolution, SparseVec};
use crate::scalar::Rat;
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeMap;
use std::sync::Arc;

use super::EquationError;

/// Per-weight bookkeeping of a successful solve.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightStep {
    /// Weight.
    pub weight: u32,
    /// Number of unknown coordinates at this weight.
    pub unknowns: usize,
    /// Number of scalar equations at this weight.
    pub equations: usize,
    /// Rank of the linear part.
    pub rank: usize,
    /// Unknowns left free (set to zero), as `slot:basis-word` labels; at
    /// weights above the first this includes directions carried over from
    /// the previous weight.
    pub free: Vec<String>,
}

/// Report for an inconsistent weight.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Obstruction {
    /// Lowest weight at which the system has no solution.
    pub weight: u32,
    /// Number of unknown coordinates at this weight.
    pub unknowns: usize,
    /// Number of scalar equations at this weight.
    pub equations: usize,
    /// Rank of the linear part.
    pub rank: usize,
    /// Rank of the augmented system (exceeds `rank`).
    pub augmented_rank: usize,
    /// Residual names and lowest-weight residual coordinates (with unknowns
    /// at this weight set to zero).
    pub residual: Vec<(String, String, String)>,
}

impl Obstruction {
    /// Text rendering.
    pub fn render(&self) -> String {
        let mut s = format!(
            "obstruction at weight {}: unknowns={} equations={} rank={} augmented_rank={}\n",
            self.weight, self.unknowns, self.equations, self.rank, self.augmented_rank
        );
        for (eq, m, c) in &self.residual {
            s.push_str(&format!("  {eq}: {m}={c}\n"));
        }
        s
    }
}

/// Outcome of a weight-by-weight solve.
#[derive(Clone, Debug)]
pub enum SolveOutcome {
    /// Unknowns through the requested weight.
    Solved {
        /// Solved logarithms, one per slot.
        values: Vec<LiePoly<Rat>>,
        /// Per-weight steps.
        steps: Vec<WeightStep>,
    },
    /// The first inconsistent weight.
    Obstructed {
        /// Values fixed below the failing weight.
        values: Vec<LiePoly<Rat>>,
        /// Steps completed before the failure.
        steps: Vec<WeightStep>,
        /// Diagnostics.
        obstruction: Obstruction,
    },
}

/// A residual function: named `lhs - rhs` series, truncated at the weight
/// passed in, for the given slot values.
pub type ResidualFn<'a> = dyn Fn(&[LiePoly<Rat>], u32) -> Result<Vec<(String, Series<Rat>)>, EquationError> + Sync + 'a;

fn coordinates(res: &[(String, Series<Rat>)], d: u32) -> BTreeMap<(usize, Mono), Rat> {
    let mut out = BTreeMap::new();
    for (k, (_, s)) in res.iter().enumerate() {
        for (m, c) in s.component(d).terms() {
            out.insert((k, m.clone()), c.clone());
        }
    }
    out
}

type Direction = Vec<LiePoly<Rat>>;

fn shifted(values: &[LiePoly<Rat>], dir: &Direction, c: &Rat) -> Vec<LiePoly<Rat>> {
    values
        .iter()
        .zip(dir)
        .map(|(v, d)| if d.is_zero() { v.clone() } else { v.add(&d.scale_rat(c)).expect("same alphabet") })
        .collect()
}

/// Solve for the slots weight by weight from `from` to `to`, starting from
/// `initial` (whose components of weight `>= from` are discarded).
///
/// Some systems only see the weight-`d` unknowns at weight `d + 1`, through
/// brackets with lower-weight data. The kernel directions left free at weight
/// `d - 1` are therefore kept as additional unknowns at weight `d`; the
/// residual stays affine in them because their products have weight at least
/// `2(d - 1) > d` for `d >= 3`. After each step the weight-`d` residual is
/// recomputed to confirm that it vanishes.
pub fn solve_by_weight(
    slots: &[Arc<GradedQuotient>],
    slot_names: &[String],
    initial: Vec<LiePoly<Rat>>,
    from: u32,
    to: u32,
    residual: &ResidualFn<'_>,
) -> Result<SolveOutcome, EquationError> {
    let mut values: Vec<LiePoly<Rat>> = initial.iter().map(|v| v.truncate(from.saturating_sub(1))).collect();
    let mut steps = Vec::new();
    let mut pending: Vec<(String, Direction)> = Vec::new();
    for d in from..=to {
        let mut columns_dirs: Vec<(String, Direction)> = if d >= 3 { pending.clone() } else { Vec::new() };
        for (s, q) in slots.iter().enumerate() {
            for id in 0..q.basis_len() as u32 {
                if q.basis_weight(id) == d {
                    let mut dir: Direction = slots.iter().map(|q| LiePoly::zero(q.alphabet())).collect();
                    dir[s] = q.basis_element(id);
                    let label = format!("{}:{}", slot_names[s], q.render_bracket(&q.basis()[id as usize]));
                    columns_dirs.push((label, dir));
                }
            }
        }
        let base = residual(&values, d)?;
        let base_coords = coordinates(&base, d);
        let one = Rat::from_integer(1.into());
        let columns: Vec<BTreeMap<(usize, Mono), Rat>> = columns_dirs
            .par_iter()
            .map(|(_, dir)| {
                let r = residual(&shifted(&values, dir, &one), d)?;
                let mut col = coordinates(&r, d);
                for (k, v) in &base_coords {
                    let e = col.entry(k.clone()).or_insert_with(Rat::zero);
                    *e -= v;
                }
                col.retain(|_, v| !v.is_zero());
                Ok(col)
            })
            .collect::<Result<_, EquationError>>()?;
        let mut rows: BTreeMap<(usize, Mono), SparseVec> = BTreeMap::new();
        for (j, col) in columns.iter().enumerate() {
            for (k, v) in col {
                rows.entry(k.clone()).or_default().insert(j, v.clone());
            }
        }
        for k in base_coords.keys() {
            rows.entry(k.clone()).or_default();
        }
        let system: Vec<(SparseVec, Rat)> =
            rows.iter().map(|(k, a)| (a.clone(), base_coords.get(k).cloned().unwrap_or_else(Rat::zero))).collect();
        match solve_affine(&system, columns_dirs.len()) {
            AffineSolution::Solved { values: sol, free, kernel, rank } => {
                for (j, c) in sol.iter().enumerate() {
                    if !c.is_zero() {
                        values = shifted(&values, &columns_dirs[j].1, c);
                    }
                }
                let check = residual(&values, d)?;
                if !coordinates(&check, d).is_empty() {
                    return Err(EquationError::Invalid(format!("weight {d}: residual is not affine in the unknowns")));
                }
                pending = kernel
                    .iter()
                    .zip(&free)
                    .map(|(v, &k)| {
                        let mut dir: Direction = slots.iter().map(|q| LiePoly::zero(q.alphabet())).collect();
                        for (j, c) in v {
                            dir = shifted(&dir, &columns_dirs[*j].1, c);
                        }
                        (columns_dirs[k].0.clone(), dir)
                    })
                    .collect();
                steps.push(WeightStep {
                    weight: d,
                    unknowns: columns_dirs.len(),
                    equations: system.len(),
                    rank,
                    free: free.iter().map(|&k| columns_dirs[k].0.clone()).collect(),
                });
            }
            AffineSolution::Inconsistent { rank, augmented_rank } => {
                let residual = base
                    .iter()
                    .filter_map(|(name, s)| {
                        let comp = s.component(d);
                        comp.terms()
                            .iter()
                            .next()
                            .map(|(m, c)| (name.clone(), s.env().render_mono(m), crate::scalar::render_rat(c)))
                    })
                    .collect();
                return Ok(SolveOutcome::Obstructed {
                    values,
                    steps,
                    obstruction: Obstruction {
                        weight: d,
                        unknowns: columns_dirs.len(),
                        equations: system.len(),
                        rank,
                        augmented_rank,
                        residual,
                    },
                });
            }
        }
    }
    Ok(SolveOutcome::Solved { values, steps })
}
