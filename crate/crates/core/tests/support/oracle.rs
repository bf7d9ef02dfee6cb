//! Brute-force graded dimensions of presented Lie algebras.
//!
//! Works in the free associative algebra: brackets are commutators of word
//! polynomials. At each degree `d` the free Lie algebra is spanned by
//! brackets of generators with a basis of lower degrees, and the ideal by the
//! relations of degree `d` together with brackets of generators with a basis
//! of the ideal in lower degrees. The graded dimension is the difference of
//! the two ranks. Shares no code with the library.

#![allow(dead_code)]

use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::BTreeMap;

pub type Poly = BTreeMap<Vec<usize>, BigRational>;

pub fn gen(i: usize) -> Poly {
    let mut p = Poly::new();
    p.insert(vec![i], BigRational::one());
    p
}

pub fn add(a: &Poly, b: &Poly) -> Poly {
    let mut out = a.clone();
    for (w, c) in b {
        let e = out.entry(w.clone()).or_insert_with(BigRational::zero);
        *e += c;
        if e.is_zero() {
            out.remove(w);
        }
    }
    out
}

pub fn scale(a: &Poly, k: i64) -> Poly {
    if k == 0 {
        return Poly::new();
    }
    a.iter().map(|(w, c)| (w.clone(), c * BigRational::from_integer(k.into()))).collect()
}

fn mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (u, x) in a {
        for (v, y) in b {
            let mut w = u.clone();
            w.extend(v);
            let e = out.entry(w).or_insert_with(BigRational::zero);
            *e += x * y;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

pub fn br(a: &Poly, b: &Poly) -> Poly {
    add(&mul(a, b), &scale(&mul(b, a), -1))
}

/// Row echelon form keyed by leading word.
#[derive(Default)]
struct Echelon {
    rows: BTreeMap<Vec<usize>, Poly>,
}

impl Echelon {
    fn insert(&mut self, mut v: Poly) -> bool {
        while let Some((lead, c)) = v.iter().next().map(|(w, c)| (w.clone(), c.clone())) {
            match self.rows.get(&lead) {
                Some(row) => {
                    let neg: Poly = row.iter().map(|(w, r)| (w.clone(), -(r * &c))).collect();
                    v = add(&v, &neg);
                }
                None => {
                    let inv = c.recip();
                    let row = v.iter().map(|(w, r)| (w.clone(), r * &inv)).collect();
                    self.rows.insert(lead, row);
                    return true;
                }
            }
        }
        false
    }

    fn basis(&self) -> Vec<Poly> {
        self.rows.values().cloned().collect()
    }
}

/// Generators with weights and homogeneous relations.
pub struct Presentation {
    pub names: Vec<String>,
    pub weights: Vec<u32>,
    pub relations: Vec<Poly>,
}

impl Presentation {
    fn index(&self, name: &str) -> usize {
        self.names.iter().position(|n| n == name).unwrap_or_else(|| panic!("no generator {name}"))
    }

    pub fn g(&self, name: &str) -> Poly {
        gen(self.index(name))
    }

    fn weight_of(&self, p: &Poly) -> u32 {
        let w = p.keys().next().expect("nonzero relation");
        w.iter().map(|&l| self.weights[l]).sum()
    }

    /// Graded dimensions for degrees `1..=max`.
    pub fn dims(&self, max: u32) -> Vec<usize> {
        let mut free: Vec<Vec<Poly>> = vec![Vec::new()];
        let mut ideal: Vec<Vec<Poly>> = vec![Vec::new()];
        let mut out = Vec::new();
        for d in 1..=max {
            let mut lf = Echelon::default();
            let mut li = Echelon::default();
            for (i, &w) in self.weights.iter().enumerate() {
                if w == d {
                    lf.insert(gen(i));
                } else if w < d {
                    for b in &free[(d - w) as usize] {
                        lf.insert(br(&gen(i), b));
                    }
                    for b in &ideal[(d - w) as usize] {
                        li.insert(br(&gen(i), b));
                    }
                }
            }
            for r in &self.relations {
                if self.weight_of(r) == d {
                    li.insert(r.clone());
                }
            }
            out.push(lf.rows.len() - li.rows.len());
            free.push(lf.basis());
            ideal.push(li.basis());
        }
        out
    }
}

fn tname(i: usize, j: usize) -> String {
    let (a, b) = if i <= j { (i, j) } else { (j, i) };
    format!("t{a}{b}")
}

/// `t_n`, `t^f_n`, `t_{g,n}` or `t^f_{g,n}`; genus families give `t` weight 2.
pub fn chord_algebra(n: usize, framed: bool, g: usize) -> Presentation {
    let tw = if g == 0 { 1 } else { 2 };
    let mut names = Vec::new();
    let mut weights = Vec::new();
    for i in 1..=n {
        for j in i..=n {
            if i < j || framed {
                names.push(tname(i, j));
                weights.push(tw);
            }
        }
    }
    let hx = |i: usize, a: usize| if g == 1 { format!("x{i}") } else { format!("x{i}^{a}") };
    let hy = |i: usize, a: usize| if g == 1 { format!("y{i}") } else { format!("y{i}^{a}") };
    for i in 1..=n {
        for a in 1..=g {
            names.push(hx(i, a));
            weights.push(1);
            names.push(hy(i, a));
            weights.push(1);
        }
    }
    let mut p = Presentation { names, weights, relations: Vec::new() };
    let t = |p: &Presentation, i: usize, j: usize| p.g(&tname(i, j));
    let pairs: Vec<(usize, usize)> =
        (1..=n).flat_map(|i| (i..=n).map(move |j| (i, j))).filter(|&(i, j)| i < j || framed).collect();
    let mut rels = Vec::new();
    // Locality: disjoint index sets commute.
    for &(i, j) in &pairs {
        for &(k, l) in &pairs {
            if ![i, j].contains(&k) && ![i, j].contains(&l) {
                rels.push(br(&t(&p, i, j), &t(&p, k, l)));
            }
        }
    }
    // Four-term: [t_ij, t_ik + t_jk] = 0 for k outside {i, j}.
    for &(i, j) in &pairs {
        for k in 1..=n {
            if k != i && k != j {
                rels.push(br(&t(&p, i, j), &add(&t(&p, i, k), &t(&p, j, k))));
            }
        }
    }
    if g > 0 {
        let x = |p: &Presentation, i: usize, a: usize| p.g(&hx(i, a));
        let y = |p: &Presentation, i: usize, a: usize| p.g(&hy(i, a));
        for i in 1..=n {
            for j in 1..=n {
                if i == j {
                    continue;
                }
                for a in 1..=g {
                    for b in 1..=g {
                        let mut r = br(&x(&p, i, a), &y(&p, j, b));
                        if a == b {
                            r = add(&r, &scale(&t(&p, i, j), -1));
                        }
                        rels.push(r);
                        rels.push(br(&x(&p, i, a), &x(&p, j, b)));
                        rels.push(br(&y(&p, i, a), &y(&p, j, b)));
                    }
                }
            }
        }
        for i in 1..=n {
            let mut r = Poly::new();
            for a in 1..=g {
                r = add(&r, &br(&x(&p, i, a), &y(&p, i, a)));
            }
            for j in 1..=n {
                if j != i {
                    r = add(&r, &t(&p, i, j));
                }
            }
            if framed {
                r = add(&r, &scale(&t(&p, i, i), 2 * (g as i64 - 1)));
            }
            rels.push(r);
        }
        for &(i, j) in &pairs {
            for a in 1..=g {
                for k in 1..=n {
                    if k != i && k != j {
                        rels.push(br(&x(&p, k, a), &t(&p, i, j)));
                        rels.push(br(&y(&p, k, a), &t(&p, i, j)));
                    }
                }
                rels.push(br(&add(&x(&p, i, a), &x(&p, j, a)), &t(&p, i, j)));
                rels.push(br(&add(&y(&p, i, a), &y(&p, j, a)), &t(&p, i, j)));
            }
        }
    }
    rels.retain(|r| !r.is_empty());
    p.relations = rels;
    p
}

/// The free Lie algebra on `k` generators of weight one.
pub fn free(k: usize) -> Presentation {
    Presentation { names: (0..k).map(|i| format!("z{i}")).collect(), weights: vec![1; k], relations: Vec::new() }
}
