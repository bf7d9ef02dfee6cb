//! Constructors for the chord-diagram Lie algebra families.
//!
//! Genus-zero families give every chord weight 1. Genus families give the
//! handle generators `x_i^a`, `y_i^a` weight 1 and the chords weight 2, which
//! is forced by relations that mix `[x, y]` with chords.

use super::alphabet::{Alphabet, GenKind, GeneratorSymbol};
use super::poly::LiePoly;
use super::quotient::{GradedQuotient, QuotientError};
use crate::scalar::{rint, Rat};
use once_cell::sync::Lazy;
use parking_lot::RwLock;
use serde::Serialize;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

/// A family of graded Lie algebras together with its parameters.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Family {
    /// Kohno–Drinfeld algebra `t_n`.
    T {
        /// Number of strands.
        n: usize,
    },
    /// Framed algebra `t^f_n` with central framing chords `t_ii`.
    TF {
        /// Number of strands.
        n: usize,
    },
    /// Framed algebra `t^f_n` in the alternative presentation with
    /// `[t_i, t_j] = 0` and `[t_i, t_jk] = 0`.
    TFAlt {
        /// Number of strands.
        n: usize,
    },
    /// Unframed genus-`g` algebra `t_{g,n}`.
    TG {
        /// Genus.
        g: usize,
        /// Number of strands.
        n: usize,
    },
    /// Framed genus-`g` algebra `t^f_{g,n}`.
    TFG {
        /// Genus.
        g: usize,
        /// Number of strands.
        n: usize,
    },
    /// Reduced genus-one algebra `t_{1,n} / (sum x_i, sum y_i)`.
    T1Bar {
        /// Number of strands.
        n: usize,
    },
    /// Free Lie algebra on `x, y`.
    FreeF2,
    /// Free Lie algebra on `x^1..x^g, y^1..y^g`.
    FreeFG {
        /// Number of handles.
        g: usize,
    },
    /// Any other presentation.
    Custom(String),
}

impl Family {
    /// Short tag used in report headers.
    pub fn tag(&self) -> &'static str {
        match self {
            Family::T { .. } => "T_N",
            Family::TF { .. } => "TF_N",
            Family::TFAlt { .. } => "TF_N_ALT",
            Family::TG { .. } => "T_G_N",
            Family::TFG { .. } => "TF_G_N",
            Family::T1Bar { .. } => "T1BAR_N",
            Family::FreeF2 => "FREE_F2",
            Family::FreeFG { .. } => "FREE_FG",
            Family::Custom(_) => "CUSTOM",
        }
    }

    /// Number of strands (0 for free families).
    pub fn n(&self) -> usize {
        match self {
            Family::T { n }
            | Family::TF { n }
            | Family::TFAlt { n }
            | Family::TG { n, .. }
            | Family::TFG { n, .. }
            | Family::T1Bar { n } => *n,
            _ => 0,
        }
    }

    /// Genus (0 for genus-zero families).
    pub fn g(&self) -> usize {
        match self {
            Family::TG { g, .. } | Family::TFG { g, .. } | Family::FreeFG { g } => *g,
            Family::T1Bar { .. } => 1,
            _ => 0,
        }
    }

    /// True for families containing framing chords `t_ii`.
    pub fn framed(&self) -> bool {
        matches!(self, Family::TF { .. } | Family::TFAlt { .. } | Family::TFG { .. })
    }

    /// True for genus families (handle generators present).
    pub fn has_handles(&self) -> bool {
        matches!(self, Family::TG { .. } | Family::TFG { .. } | Family::T1Bar { .. })
    }

    /// The same family with another strand count.
    pub fn with_n(&self, n: usize) -> Family {
        match self {
            Family::T { .. } => Family::T { n },
            Family::TF { .. } => Family::TF { n },
            Family::TFAlt { .. } => Family::TFAlt { n },
            Family::TG { g, .. } => Family::TG { g: *g, n },
            Family::TFG { g, .. } => Family::TFG { g: *g, n },
            Family::T1Bar { .. } => Family::T1Bar { n },
            other => other.clone(),
        }
    }

    /// Parameter string for report headers.
    pub fn params(&self) -> String {
        format!("n={} g={}", self.n(), self.g())
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Custom(name) => write!(f, "{} {}", self.tag(), name),
            _ => write!(f, "{} {}", self.tag(), self.params()),
        }
    }
}

fn u(i: usize) -> u8 {
    i as u8
}

/// Alphabet of a family, in letter order.
pub fn family_alphabet(family: &Family) -> Result<Alphabet, QuotientError> {
    let n = family.n();
    let g = family.g();
    let bad = |m: &str| Err(QuotientError::InvalidParameters(m.to_string()));
    let mut gens = Vec::new();
    match family {
        Family::T { .. } => {
            if n < 1 {
                return bad("n must be at least 1");
            }
            for i in 1..=n {
                for j in i + 1..=n {
                    gens.push(GeneratorSymbol::new(GenKind::Tij(u(i), u(j)), 1, 0));
                }
            }
        }
        Family::TF { .. } | Family::TFAlt { .. } => {
            if n < 1 {
                return bad("n must be at least 1");
            }
            for i in 1..=n {
                for j in i..=n {
                    gens.push(GeneratorSymbol::new(GenKind::t(u(i), u(j)), 1, 0));
                }
            }
        }
        Family::TG { .. } | Family::TFG { .. } | Family::T1Bar { .. } => {
            if n < 1 || g < 1 {
                return bad("genus families need n >= 1 and g >= 1");
            }
            for i in 1..=n {
                for a in 1..=g {
                    gens.push(GeneratorSymbol::new(GenKind::Xg(u(i), u(a)), 1, g));
                }
            }
            for i in 1..=n {
                for a in 1..=g {
                    gens.push(GeneratorSymbol::new(GenKind::Yg(u(i), u(a)), 1, g));
                }
            }
            let framed = family.framed();
            for i in 1..=n {
                let start = if framed { i } else { i + 1 };
                for j in start..=n {
                    gens.push(GeneratorSymbol::new(GenKind::t(u(i), u(j)), 2, g));
                }
            }
        }
        Family::FreeF2 => return Ok(Alphabet::free(&["x", "y"])),
        Family::FreeFG { g } => {
            if *g < 1 {
                return bad("g must be at least 1");
            }
            let mut names: Vec<String> = (1..=*g).map(|a| format!("x{a}")).collect();
            names.extend((1..=*g).map(|a| format!("y{a}")));
            let refs: Vec<&str> = names.iter().map(String::as_str).collect();
            return Ok(Alphabet::free(&refs));
        }
        Family::Custom(_) => return bad("custom families need an explicit alphabet"),
    }
    Ok(Alphabet::new(gens))
}

/// Helper producing generators and brackets over one alphabet.
pub struct Gens<'a> {
    /// The alphabet.
    pub alphabet: &'a Arc<Alphabet>,
}

impl Gens<'_> {
    /// Chord `t_ij` (or `t_ii`); zero when absent from the alphabet.
    pub fn t(&self, i: usize, j: usize) -> LiePoly<Rat> {
        self.kind(GenKind::t(u(i), u(j)))
    }
    /// Handle generator `x_i^a`.
    pub fn x(&self, i: usize, a: usize) -> LiePoly<Rat> {
        self.kind(GenKind::Xg(u(i), u(a)))
    }
    /// Handle generator `y_i^a`.
    pub fn y(&self, i: usize, a: usize) -> LiePoly<Rat> {
        self.kind(GenKind::Yg(u(i), u(a)))
    }
    /// Generator by kind; zero when absent.
    pub fn kind(&self, k: GenKind) -> LiePoly<Rat> {
        match self.alphabet.letter(&k) {
            Some(l) => LiePoly::generator(self.alphabet, l),
            None => LiePoly::zero(self.alphabet),
        }
    }
    /// Bracket.
    pub fn br(&self, a: &LiePoly<Rat>, b: &LiePoly<Rat>) -> LiePoly<Rat> {
        a.bracket(b).expect("same alphabet")
    }
    /// Sum.
    pub fn add(&self, a: &LiePoly<Rat>, b: &LiePoly<Rat>) -> LiePoly<Rat> {
        a.add(b).expect("same alphabet")
    }
}

/// The defining relations of a family, in a fixed order.
pub fn family_relations(family: &Family, alphabet: &Arc<Alphabet>) -> Result<Vec<LiePoly<Rat>>, QuotientError> {
    let n = family.n();
    let g = family.g();
    let h = Gens { alphabet };
    let mut rels = Vec::new();
    let genus_zero_unframed = |rels: &mut Vec<LiePoly<Rat>>| {
        // (L) [t_ij, t_kl] = 0 for disjoint pairs.
        for i in 1..=n {
            for j in i + 1..=n {
                for k in 1..=n {
                    for l in k + 1..=n {
                        if (i, j) < (k, l) && k != i && k != j && l != i && l != j {
                            rels.push(h.br(&h.t(i, j), &h.t(k, l)));
                        }
                    }
                }
            }
        }
        // (4T) [t_ij, t_ik + t_jk] = 0.
        for i in 1..=n {
            for j in i + 1..=n {
                for k in 1..=n {
                    if k != i && k != j {
                        rels.push(h.br(&h.t(i, j), &h.add(&h.t(i, k), &h.t(j, k))));
                    }
                }
            }
        }
    };
    let genus_zero_framed = |rels: &mut Vec<LiePoly<Rat>>| {
        // (FL) with i = j allowed.
        for i in 1..=n {
            for j in i..=n {
                for k in 1..=n {
                    for l in k..=n {
                        let disjoint = k != i && k != j && l != i && l != j;
                        if (i, j) < (k, l) && disjoint {
                            rels.push(h.br(&h.t(i, j), &h.t(k, l)));
                        }
                    }
                }
            }
        }
        // (F4T) with i = j allowed.
        for i in 1..=n {
            for j in i..=n {
                for k in 1..=n {
                    if k != i && k != j {
                        rels.push(h.br(&h.t(i, j), &h.add(&h.t(i, k), &h.t(j, k))));
                    }
                }
            }
        }
    };
    let handles = |rels: &mut Vec<LiePoly<Rat>>, framed: bool| {
        for i in 1..=n {
            for j in 1..=n {
                if i == j {
                    continue;
                }
                for a in 1..=g {
                    for b in 1..=g {
                        // (S_g)
                        let mut r = h.br(&h.x(i, a), &h.y(j, b));
                        if a == b {
                            r = r.sub(&h.t(i, j)).unwrap();
                        }
                        rels.push(r);
                        // (N_g)
                        if i < j {
                            rels.push(h.br(&h.x(i, a), &h.x(j, b)));
                            rels.push(h.br(&h.y(i, a), &h.y(j, b)));
                        }
                    }
                }
            }
        }
        // (T_g) / (FT_g)
        for i in 1..=n {
            let mut r = LiePoly::zero(alphabet);
            for a in 1..=g {
                r = r.add(&h.br(&h.x(i, a), &h.y(i, a))).unwrap();
            }
            for j in 1..=n {
                if j != i {
                    r = r.add(&h.t(i, j)).unwrap();
                }
            }
            if framed {
                r = r.add(&h.t(i, i).scale_rat(&rint(2 * (g as i64 - 1)))).unwrap();
            }
            rels.push(r);
        }
        // (L_g) / (FL_g)
        for k in 1..=n {
            for i in 1..=n {
                let start = if framed { i } else { i + 1 };
                for j in start..=n {
                    if k != i && k != j {
                        for a in 1..=g {
                            rels.push(h.br(&h.x(k, a), &h.t(i, j)));
                            rels.push(h.br(&h.y(k, a), &h.t(i, j)));
                        }
                    }
                }
            }
        }
        // (4T_g) / (F4T_g)
        for i in 1..=n {
            let start = if framed { i } else { i + 1 };
            for j in start..=n {
                for a in 1..=g {
                    rels.push(h.br(&h.add(&h.x(i, a), &h.x(j, a)), &h.t(i, j)));
                    rels.push(h.br(&h.add(&h.y(i, a), &h.y(j, a)), &h.t(i, j)));
                }
            }
        }
    };
    match family {
        Family::T { .. } => genus_zero_unframed(&mut rels),
        Family::TF { .. } => genus_zero_framed(&mut rels),
        Family::TFAlt { .. } => {
            genus_zero_unframed(&mut rels);
            // [t_i, t_j] = 0 and [t_i, t_jk] = 0.
            for i in 1..=n {
                for j in i + 1..=n {
                    rels.push(h.br(&h.t(i, i), &h.t(j, j)));
                }
                for j in 1..=n {
                    for k in j + 1..=n {
                        rels.push(h.br(&h.t(i, i), &h.t(j, k)));
                    }
                }
            }
        }
        Family::TG { .. } => {
            genus_zero_unframed(&mut rels);
            handles(&mut rels, false);
        }
        Family::TFG { .. } => {
            genus_zero_framed(&mut rels);
            handles(&mut rels, true);
        }
        Family::T1Bar { .. } => {
            genus_zero_unframed(&mut rels);
            handles(&mut rels, false);
            let mut sx = LiePoly::zero(alphabet);
            let mut sy = LiePoly::zero(alphabet);
            for i in 1..=n {
                sx = sx.add(&h.x(i, 1)).unwrap();
                sy = sy.add(&h.y(i, 1)).unwrap();
            }
            rels.push(sx);
            rels.push(sy);
        }
        Family::FreeF2 | Family::FreeFG { .. } => {}
        Family::Custom(_) => return Err(QuotientError::InvalidParameters("custom family has no relations".into())),
    }
    rels.retain(|r| !r.is_zero());
    Ok(rels)
}

/// Build a family algebra through weight `max_weight`.
pub fn build_algebra(family: Family, max_weight: u32) -> Result<Arc<GradedQuotient>, QuotientError> {
    let alphabet = Arc::new(family_alphabet(&family)?);
    let rels = family_relations(&family, &alphabet)?;
    Ok(Arc::new(GradedQuotient::new(family, alphabet, rels, max_weight)?))
}

type AlgebraCache = RwLock<HashMap<(Family, u32), Arc<GradedQuotient>>>;

static ALGEBRAS: Lazy<AlgebraCache> = Lazy::new(|| RwLock::new(HashMap::new()));

/// Shared, memoised [`build_algebra`]: repeated requests for the same family
/// and truncation return the same instance.
pub fn algebra(family: &Family, max_weight: u32) -> Result<Arc<GradedQuotient>, QuotientError> {
    let key = (family.clone(), max_weight);
    if let Some(q) = ALGEBRAS.read().get(&key) {
        return Ok(q.clone());
    }
    let q = build_algebra(family.clone(), max_weight)?;
    Ok(ALGEBRAS.write().entry(key).or_insert(q).clone())
}

/// The central element `c_3 = t12 + t13 + t23` of `t_3` (or of any algebra
/// containing these chords).
pub fn c3(q: &GradedQuotient) -> LiePoly<Rat> {
    let h = Gens { alphabet: q.alphabet() };
    h.add(&h.add(&h.t(1, 2), &h.t(1, 3)), &h.t(2, 3))
}

/// Chord `t_ij` of an algebra.
pub fn chord(q: &GradedQuotient, i: usize, j: usize) -> LiePoly<Rat> {
    Gens { alphabet: q.alphabet() }.t(i, j)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn t3_dims() {
        let q = build_algebra(Family::T { n: 3 }, 4).unwrap();
        assert_eq!(q.dims(4).unwrap(), vec![3, 1, 2, 3]);
    }

    #[test]
    fn tf2_is_abelian() {
        let q = build_algebra(Family::TF { n: 2 }, 4).unwrap();
        assert_eq!(q.dims(4).unwrap(), vec![3, 0, 0, 0]);
    }

    #[test]
    fn t11_dims() {
        let q = build_algebra(Family::TG { g: 1, n: 1 }, 4).unwrap();
        assert_eq!(q.dims(4).unwrap(), vec![2, 0, 0, 0]);
    }
}
