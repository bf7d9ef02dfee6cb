//! Typed, weighted generator alphabets.

use serde::Serialize;
use std::collections::HashMap;
use std::fmt;

/// Index of a generator inside its alphabet; also the letter order used for
/// Lyndon words.
pub type Letter = u8;

/// The kind of a generator. Strand indices are 1-based; handle indices `a`
/// run over `1..=g`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum GenKind {
    /// Chord between two distinct strands, stored with `i < j`.
    Tij(u8, u8),
    /// Framing chord on one strand (also written `t_i`).
    Tii(u8),
    /// Handle generator `x_i^a`.
    Xg(u8, u8),
    /// Handle generator `y_i^a`.
    Yg(u8, u8),
    /// Free generator with a name.
    Free(String),
}

impl GenKind {
    /// Normalised chord between strands `i` and `j` (either order, `i == j`
    /// gives the framing chord).
    pub fn t(i: u8, j: u8) -> GenKind {
        if i == j {
            GenKind::Tii(i)
        } else if i < j {
            GenKind::Tij(i, j)
        } else {
            GenKind::Tij(j, i)
        }
    }
}

/// A generator together with its grading data.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct GeneratorSymbol {
    /// What the generator is.
    pub kind: GenKind,
    /// Positive total weight.
    pub weight: u32,
    /// Optional bidegree (x-degree, y-degree).
    pub bidegree: Option<(u32, u32)>,
    /// Display name.
    pub name: String,
}

impl GeneratorSymbol {
    /// Build a symbol, deriving its name from the kind.
    pub fn new(kind: GenKind, weight: u32, genus: usize) -> Self {
        let name = match &kind {
            GenKind::Tij(i, j) => format!("t{}{}", i, j),
            GenKind::Tii(i) => format!("t{}{}", i, i),
            GenKind::Xg(i, a) => {
                if genus <= 1 {
                    format!("x{}", i)
                } else {
                    format!("x{}^{}", i, a)
                }
            }
            GenKind::Yg(i, a) => {
                if genus <= 1 {
                    format!("y{}", i)
                } else {
                    format!("y{}^{}", i, a)
                }
            }
            GenKind::Free(s) => s.clone(),
        };
        let bidegree = match &kind {
            GenKind::Xg(..) => Some((1, 0)),
            GenKind::Yg(..) => Some((0, 1)),
            GenKind::Tij(..) | GenKind::Tii(..) if weight == 2 => Some((1, 1)),
            _ => None,
        };
        GeneratorSymbol { kind, weight, bidegree, name }
    }
}

/// Ordered list of generators. The position of a generator is its letter.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Alphabet {
    gens: Vec<GeneratorSymbol>,
    #[serde(skip)]
    by_kind: HashMap<GenKind, Letter>,
}

impl Alphabet {
    /// Build an alphabet; panics when more than 255 generators are supplied or
    /// when two generators share a kind.
    pub fn new(gens: Vec<GeneratorSymbol>) -> Self {
        assert!(gens.len() < 256, "alphabet too large");
        let mut by_kind = HashMap::new();
        for (i, g) in gens.iter().enumerate() {
            let prev = by_kind.insert(g.kind.clone(), i as Letter);
            assert!(prev.is_none(), "duplicate generator {:?}", g.kind);
        }
        Alphabet { gens, by_kind }
    }

    /// Free alphabet on named weight-1 generators.
    pub fn free(names: &[&str]) -> Self {
        Alphabet::new(names.iter().map(|n| GeneratorSymbol::new(GenKind::Free(n.to_string()), 1, 0)).collect())
    }

    /// Number of generators.
    pub fn len(&self) -> usize {
        self.gens.len()
    }

    /// True when there are no generators.
    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    /// All generators in letter order.
    pub fn generators(&self) -> &[GeneratorSymbol] {
        &self.gens
    }

    /// Generator of a letter.
    pub fn symbol(&self, l: Letter) -> &GeneratorSymbol {
        &self.gens[l as usize]
    }

    /// Weight of a letter.
    pub fn weight(&self, l: Letter) -> u32 {
        self.gens[l as usize].weight
    }

    /// Total weight of a word.
    pub fn word_weight(&self, w: &[Letter]) -> u32 {
        w.iter().map(|l| self.weight(*l)).sum()
    }

    /// Letter of a generator kind.
    pub fn letter(&self, kind: &GenKind) -> Option<Letter> {
        self.by_kind.get(kind).copied()
    }

    /// Letter with the given display name.
    pub fn letter_by_name(&self, name: &str) -> Option<Letter> {
        self.gens.iter().position(|g| g.name == name).map(|i| i as Letter)
    }

    /// Largest generator weight.
    pub fn max_weight(&self) -> u32 {
        self.gens.iter().map(|g| g.weight).max().unwrap_or(0)
    }

    /// Render a word as dot-separated generator names.
    pub fn render_word(&self, w: &[Letter]) -> String {
        w.iter().map(|l| self.gens[*l as usize].name.as_str()).collect::<Vec<_>>().join(".")
    }

    /// Parse a dot-separated word of generator names.
    pub fn parse_word(&self, s: &str) -> Option<Vec<Letter>> {
        s.split('.').map(|n| self.letter_by_name(n.trim())).collect()
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self.gens.iter().map(|g| format!("{}:{}", g.name, g.weight)).collect();
        write!(f, "{}", names.join(" "))
    }
}
