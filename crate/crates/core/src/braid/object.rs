//! Parenthesized objects: ordered maximal parenthesizations of a set of
//! strand labels.

use super::BraidError;
use std::collections::BTreeSet;
use std::fmt;

/// A full binary tree whose leaves carry strand labels.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Tree {
    /// A single strand.
    Leaf(usize),
    /// A parenthesized pair.
    Node(Box<Tree>, Box<Tree>),
}

impl Tree {
    fn leaves_into(&self, out: &mut Vec<usize>) {
        match self {
            Tree::Leaf(i) => out.push(*i),
            Tree::Node(l, r) => {
                l.leaves_into(out);
                r.leaves_into(out);
            }
        }
    }

    /// Leaf labels from left to right.
    pub fn leaves(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.leaves_into(&mut out);
        out
    }

    /// Join two optional trees; an empty side disappears.
    fn join(l: Option<Tree>, r: Option<Tree>) -> Option<Tree> {
        match (l, r) {
            (Some(l), Some(r)) => Some(Tree::Node(Box::new(l), Box::new(r))),
            (Some(t), None) | (None, Some(t)) => Some(t),
            (None, None) => None,
        }
    }

    fn substitute(&self, groups: &[Option<Tree>]) -> Option<Tree> {
        match self {
            Tree::Leaf(i) => groups.get(i - 1).cloned().flatten(),
            Tree::Node(l, r) => Tree::join(l.substitute(groups), r.substitute(groups)),
        }
    }

    fn replace(&self, leaves: &BTreeSet<usize>, from: &Tree, to: &Tree) -> Result<Option<Tree>, ()> {
        let own: BTreeSet<usize> = self.leaves().into_iter().collect();
        if own == *leaves {
            return if self == from { Ok(Some(to.clone())) } else { Err(()) };
        }
        if !leaves.is_subset(&own) {
            return Ok(None);
        }
        match self {
            Tree::Leaf(_) => Ok(None),
            Tree::Node(l, r) => {
                if let Some(nl) = l.replace(leaves, from, to)? {
                    return Ok(Some(Tree::Node(Box::new(nl), r.clone())));
                }
                if let Some(nr) = r.replace(leaves, from, to)? {
                    return Ok(Some(Tree::Node(l.clone(), Box::new(nr))));
                }
                Ok(None)
            }
        }
    }

    fn render(&self, top: bool, out: &mut String) {
        match self {
            Tree::Leaf(i) => out.push_str(&i.to_string()),
            Tree::Node(l, r) => {
                if !top {
                    out.push('(');
                }
                l.render(false, out);
                r.render(false, out);
                if !top {
                    out.push(')');
                }
            }
        }
    }
}

/// A parenthesized object: a permutation of its strand labels together
/// with a full binary tree. The empty object has no strands.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PaObject {
    tree: Option<Tree>,
}

impl PaObject {
    /// The empty object.
    pub fn empty() -> Self {
        PaObject { tree: None }
    }

    /// Wrap a tree.
    pub fn from_tree(tree: Tree) -> Self {
        PaObject { tree: Some(tree) }
    }

    /// Left-nested parenthesization `((l1 l2) l3) ...` of the labels.
    pub fn left_nested(labels: &[usize]) -> Self {
        let mut tree: Option<Tree> = None;
        for &i in labels {
            tree = Tree::join(tree, Some(Tree::Leaf(i)));
        }
        PaObject { tree }
    }

    /// Parse text such as `(12)3`, `2(31)` or `((12)3)4`. Strand labels are
    /// single digits `1..9`; juxtaposed items are grouped from the left, so
    /// `123` means `(12)3`. The empty string and `0` give the empty object.
    pub fn parse(text: &str) -> Result<Self, BraidError> {
        let chars: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
        if chars.is_empty() || chars == ['0'] || chars == ['∅'] {
            return Ok(PaObject::empty());
        }
        let mut pos = 0;
        let tree = parse_seq(&chars, &mut pos)?;
        if pos != chars.len() {
            return Err(BraidError::Parse(format!("unexpected '{}' in object {text}", chars[pos])));
        }
        let obj = PaObject { tree };
        let leaves = obj.leaves();
        let set: BTreeSet<usize> = leaves.iter().copied().collect();
        if set.len() != leaves.len() {
            return Err(BraidError::Parse(format!("repeated strand in object {text}")));
        }
        Ok(obj)
    }

    /// The underlying tree, if nonempty.
    pub fn tree(&self) -> Option<&Tree> {
        self.tree.as_ref()
    }

    /// Leaf labels from left to right (the permutation part).
    pub fn leaves(&self) -> Vec<usize> {
        self.tree.as_ref().map(Tree::leaves).unwrap_or_default()
    }

    /// Number of strands.
    pub fn n(&self) -> usize {
        self.leaves().len()
    }

    /// Replace each leaf `i` (labels `1..=k`) by the object `groups[i-1]`;
    /// empty groups delete the leaf.
    pub fn substitute(&self, groups: &[PaObject]) -> PaObject {
        let g: Vec<Option<Tree>> = groups.iter().map(|o| o.tree.clone()).collect();
        PaObject { tree: self.tree.as_ref().and_then(|t| t.substitute(&g)) }
    }

    /// Find the subtree spanned by the leaves of `from`, check that it equals
    /// `from` and replace it by `to`. An empty `from` leaves `self` unchanged.
    pub fn rewrite(&self, from: &PaObject, to: &PaObject) -> Result<PaObject, BraidError> {
        let (Some(f), Some(t)) = (&from.tree, &to.tree) else {
            return if from.tree.is_none() && to.tree.is_none() {
                Ok(self.clone())
            } else {
                Err(BraidError::Endpoint(format!("cannot rewrite {from} into {to}")))
            };
        };
        let leaves: BTreeSet<usize> = f.leaves().into_iter().collect();
        let mismatch = || BraidError::Endpoint(format!("{from} is not a subobject of {self}"));
        match &self.tree {
            None => Err(mismatch()),
            Some(own) => match own.replace(&leaves, f, t) {
                Ok(Some(new)) => Ok(PaObject { tree: Some(new) }),
                _ => Err(mismatch()),
            },
        }
    }
}

fn parse_seq(chars: &[char], pos: &mut usize) -> Result<Option<Tree>, BraidError> {
    let mut acc: Option<Tree> = None;
    while *pos < chars.len() && chars[*pos] != ')' {
        let item = match chars[*pos] {
            '(' => {
                *pos += 1;
                let inner = parse_seq(chars, pos)?;
                if *pos >= chars.len() || chars[*pos] != ')' {
                    return Err(BraidError::Parse("unbalanced parentheses in object".into()));
                }
                *pos += 1;
                inner.ok_or_else(|| BraidError::Parse("empty parentheses in object".into()))?
            }
            c if c.is_ascii_digit() && c != '0' => {
                *pos += 1;
                Tree::Leaf(c.to_digit(10).expect("digit") as usize)
            }
            c => return Err(BraidError::Parse(format!("unexpected '{c}' in object"))),
        };
        acc = Tree::join(acc, Some(item));
    }
    Ok(acc)
}

impl fmt::Display for PaObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.tree {
            None => write!(f, "∅"),
            Some(t) => {
                let mut s = String::new();
                t.render(true, &mut s);
                write!(f, "{s}")
            }
        }
    }
}
