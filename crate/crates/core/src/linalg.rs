//! Exact sparse linear algebra over the rationals.
//!
//! [`Echelon`] maintains a reduced row echelon form whose pivot in each row is
//! the smallest column index present. Pivot choice is therefore a pure
//! function of the inserted vectors and their order, which keeps every basis
//! computed from it reproducible.

use crate::scalar::Rat;
use num_traits::{One, Zero};
use std::collections::BTreeMap;

/// Sparse vector keyed by column index.
pub type SparseVec = BTreeMap<usize, Rat>;

/// Add `coef * src` into `dst`, dropping entries that cancel.
pub fn axpy(dst: &mut SparseVec, coef: &Rat, src: &SparseVec) {
    for (k, x) in src {
        let entry = dst.entry(*k).or_insert_with(Rat::zero);
        *entry += coef * x;
        if entry.is_zero() {
            dst.remove(k);
        }
    }
}

/// Reduced row echelon form built one vector at a time.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: BTreeMap<usize, SparseVec>,
}

impl Echelon {
    /// Empty echelon form.
    pub fn new() -> Self {
        Echelon { rows: BTreeMap::new() }
    }

    /// Number of independent rows.
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// True when `col` is a pivot column.
    pub fn is_pivot(&self, col: usize) -> bool {
        self.rows.contains_key(&col)
    }

    /// Pivot columns in increasing order.
    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    /// Rows keyed by pivot column; each row has a unit pivot entry.
    pub fn rows(&self) -> &BTreeMap<usize, SparseVec> {
        &self.rows
    }

    /// Remainder of `v` after eliminating every pivot column.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut out = v.clone();
        let hits: Vec<usize> = v.keys().copied().filter(|c| self.rows.contains_key(c)).collect();
        for c in hits {
            if let Some(coef) = out.remove(&c) {
                let row = &self.rows[&c];
                let neg = -coef;
                for (k, x) in row {
                    if *k == c {
                        continue;
                    }
                    let entry = out.entry(*k).or_insert_with(Rat::zero);
                    *entry += &neg * x;
                    if entry.is_zero() {
                        out.remove(k);
                    }
                }
            }
        }
        out
    }

    /// Insert a vector; returns the new pivot column when it was independent.
    pub fn insert(&mut self, v: &SparseVec) -> Option<usize> {
        let mut r = self.reduce(v);
        let (&p, lead) = r.iter().next()?;
        let inv = Rat::one() / lead;
        for x in r.values_mut() {
            *x *= &inv;
        }
        for row in self.rows.values_mut() {
            if let Some(coef) = row.get(&p).cloned() {
                let neg = -coef;
                axpy(row, &neg, &r);
            }
        }
        r.retain(|_, x| !x.is_zero());
        self.rows.insert(p, r);
        Some(p)
    }
}

/// Outcome of an affine solve `A c + b = 0`.
#[derive(Clone, Debug, PartialEq)]
pub enum AffineSolution {
    /// A particular solution (free variables set to zero) and the free columns.
    Solved {
        /// Value of every unknown.
        values: Vec<Rat>,
        /// Unknowns left free (set to zero in `values`).
        free: Vec<usize>,
        /// Basis of the kernel of the linear part, one vector per free unknown.
        kernel: Vec<SparseVec>,
        /// Rank of the linear part.
        rank: usize,
    },
    /// The system has no solution.
    Inconsistent {
        /// Rank of the linear part.
        rank: usize,
        /// Rank of the augmented system.
        augmented_rank: usize,
    },
}

/// Solve `sum_j a_ij c_j + b_i = 0` for the unknowns `c`.
///
/// Rows are given as `(a_i, b_i)`. Pivots follow the smallest-column rule and
/// free unknowns are set to zero, so the representative is deterministic.
pub fn solve_affine(rows: &[(SparseVec, Rat)], ncols: usize) -> AffineSolution {
    let mut ech = Echelon::new();
    for (a, b) in rows {
        let mut v = a.clone();
        if !b.is_zero() {
            v.insert(ncols, b.clone());
        }
        ech.insert(&v);
    }
    let augmented_rank = ech.rank();
    if ech.is_pivot(ncols) {
        return AffineSolution::Inconsistent { rank: augmented_rank - 1, augmented_rank };
    }
    let mut values = vec![Rat::zero(); ncols];
    for (p, row) in ech.rows() {
        // row: c_p + sum_{free k} r_k c_k + r_const = 0, free c_k = 0.
        if let Some(b) = row.get(&ncols) {
            values[*p] = -b.clone();
        }
    }
    let free: Vec<usize> = (0..ncols).filter(|c| !ech.is_pivot(*c)).collect();
    let kernel = free
        .iter()
        .map(|&k| {
            let mut v = SparseVec::new();
            v.insert(k, Rat::one());
            for (p, row) in ech.rows() {
                if let Some(x) = row.get(&k) {
                    v.insert(*p, -x.clone());
                }
            }
            v
        })
        .collect();
    AffineSolution::Solved { values, free, kernel, rank: augmented_rank }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rint;

    fn sv(entries: &[(usize, i64)]) -> SparseVec {
        entries.iter().map(|(k, x)| (*k, rint(*x))).collect()
    }

    #[test]
    fn echelon_rank_and_reduce() {
        let mut e = Echelon::new();
        assert_eq!(e.insert(&sv(&[(0, 1), (1, 1)])), Some(0));
        assert_eq!(e.insert(&sv(&[(0, 1), (2, 1)])), Some(1));
        assert_eq!(e.insert(&sv(&[(1, 1), (2, -1)])), None);
        assert_eq!(e.rank(), 2);
        let r = e.reduce(&sv(&[(0, 2)]));
        assert_eq!(r, sv(&[(2, -2)]));
    }

    #[test]
    fn affine_solve() {
        // c0 + c1 - 3 = 0, c1 - 1 = 0
        let rows = vec![(sv(&[(0, 1), (1, 1)]), rint(-3)), (sv(&[(1, 1)]), rint(-1))];
        match solve_affine(&rows, 2) {
            AffineSolution::Solved { values, free, rank, kernel } => {
                assert_eq!(values, vec![rint(2), rint(1)]);
                assert!(kernel.is_empty());
                assert!(free.is_empty());
                assert_eq!(rank, 2);
            }
            other => panic!("unexpected {other:?}"),
        }
        let bad = vec![(sv(&[(0, 1)]), rint(1)), (sv(&[(0, 1)]), rint(2))];
        assert!(matches!(solve_affine(&bad, 1), AffineSolution::Inconsistent { .. }));
    }

    fn dot(a: &SparseVec, b: &SparseVec) -> Rat {
        a.iter().filter_map(|(k, x)| b.get(k).map(|y| x * y)).fold(Rat::zero(), |s, t| s + t)
    }

    #[test]
    fn kernel_vectors_solve_the_homogeneous_system() {
        // c0 + c1 + c2 = 1, c0 - c2 = 0: one free unknown.
        let rows = vec![(sv(&[(0, 1), (1, 1), (2, 1)]), rint(-1)), (sv(&[(0, 1), (2, -1)]), rint(0))];
        let AffineSolution::Solved { values, free, kernel, rank } = solve_affine(&rows, 3) else {
            panic!("consistent system")
        };
        assert_eq!((rank, free), (2, vec![2]));
        assert_eq!(kernel.len(), 1);
        let vals: SparseVec = values.iter().cloned().enumerate().filter(|(_, x)| !x.is_zero()).collect();
        for (a, b) in &rows {
            assert_eq!(dot(a, &kernel[0]), Rat::zero());
            assert_eq!(dot(a, &vals) + b, Rat::zero());
        }
    }

    proptest::proptest! {
        #[test]
        fn solutions_satisfy_random_systems(
            entries in proptest::collection::vec(proptest::collection::vec(-2i64..=2, 4), 1..5),
            x in proptest::collection::vec(-3i64..=3, 4),
        ) {
            // Right-hand sides from a known solution, so the system is consistent.
            let rows: Vec<(SparseVec, Rat)> = entries
                .iter()
                .map(|r| {
                    let a: SparseVec = r.iter().enumerate().filter(|(_, v)| **v != 0).map(|(k, v)| (k, rint(*v))).collect();
                    let b = -r.iter().zip(&x).map(|(p, q)| p * q).sum::<i64>();
                    (a, rint(b))
                })
                .collect();
            let AffineSolution::Solved { values, kernel, rank, free } = solve_affine(&rows, 4) else {
                panic!("consistent system reported inconsistent")
            };
            proptest::prop_assert_eq!(rank + free.len(), 4);
            let vals: SparseVec = values.iter().cloned().enumerate().filter(|(_, x)| !x.is_zero()).collect();
            for (a, b) in &rows {
                proptest::prop_assert_eq!(dot(a, &vals) + b, Rat::zero());
                for k in &kernel {
                    proptest::prop_assert_eq!(dot(a, k), Rat::zero());
                }
            }
        }
    }
}
