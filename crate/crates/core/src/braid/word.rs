//! Generators, letters and composable words of parenthesized framed braids.

use super::object::PaObject;
use super::BraidError;
use std::fmt;

/// Generators of the parenthesized framed braid operad and of its genus-`g`
/// modules.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    /// Identity on the strands of its pattern.
    Id,
    /// Braiding `R^{1,2}`.
    R,
    /// Opposite braiding `R~^{1,2} = (R^{2,1})^-1`.
    RTilde,
    /// Framing twist `F^{1,2}` of the first strand.
    F,
    /// Associativity constraint `Phi^{1,2,3}`.
    Phi,
    /// Handle generator `A_a^{1,2}` (second strand fixed).
    A(usize),
    /// Handle generator `B_a^{1,2}`.
    B(usize),
    /// Alternative handle generator `A~_a^{1,2}` (first strand fixed).
    ATilde(usize),
    /// Alternative handle generator `B~_a^{1,2}`.
    BTilde(usize),
}

impl Generator {
    /// Number of strand groups taken by the generator (`None` for `Id`).
    pub fn arity(&self) -> Option<usize> {
        match self {
            Generator::Id => None,
            Generator::Phi => Some(3),
            _ => Some(2),
        }
    }

    /// Handle index for genus letters.
    pub fn handle(&self) -> Option<usize> {
        match self {
            Generator::A(a) | Generator::B(a) | Generator::ATilde(a) | Generator::BTilde(a) => Some(*a),
            _ => None,
        }
    }

    /// Source and target over the labels `1..=arity`.
    fn endpoints(&self, arity: usize) -> (PaObject, PaObject) {
        let p = |s: &str| PaObject::parse(s).expect("static object");
        match self {
            Generator::Id => {
                let o = PaObject::left_nested(&(1..=arity).collect::<Vec<_>>());
                (o.clone(), o)
            }
            Generator::R | Generator::RTilde => (p("12"), p("21")),
            Generator::Phi => (p("(12)3"), p("1(23)")),
            _ => (p("12"), p("12")),
        }
    }

    fn parse(name: &str) -> Result<Self, BraidError> {
        let idx = |rest: &str| -> Result<usize, BraidError> {
            if rest.is_empty() {
                return Ok(1);
            }
            match rest.parse::<usize>() {
                Ok(a) if a >= 1 => Ok(a),
                _ => Err(BraidError::Parse(format!("bad handle index in {name}"))),
            }
        };
        Ok(match name {
            "Id" => Generator::Id,
            "R" => Generator::R,
            "Rt" => Generator::RTilde,
            "F" => Generator::F,
            "Phi" => Generator::Phi,
            _ if name.starts_with("At") => Generator::ATilde(idx(&name[2..])?),
            _ if name.starts_with("Bt") => Generator::BTilde(idx(&name[2..])?),
            _ if name.starts_with('A') => Generator::A(idx(&name[1..])?),
            _ if name.starts_with('B') => Generator::B(idx(&name[1..])?),
            _ => return Err(BraidError::Parse(format!("unknown generator {name}"))),
        })
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Id => write!(f, "Id"),
            Generator::R => write!(f, "R"),
            Generator::RTilde => write!(f, "Rt"),
            Generator::F => write!(f, "F"),
            Generator::Phi => write!(f, "Phi"),
            Generator::A(a) => write!(f, "A{a}"),
            Generator::B(a) => write!(f, "B{a}"),
            Generator::ATilde(a) => write!(f, "At{a}"),
            Generator::BTilde(a) => write!(f, "Bt{a}"),
        }
    }
}

/// One generator instance: a generator, a superscript pattern and a sign.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    /// The generator.
    pub generator: Generator,
    /// Strand groups, one per input of the generator (empty groups allowed).
    pub groups: Vec<Vec<usize>>,
    /// True for the inverse letter.
    pub inverse: bool,
}

impl Letter {
    /// Build from a pattern such as `1,23` or `0,1`.
    pub fn new(generator: Generator, pattern: &str) -> Result<Self, BraidError> {
        let groups = parse_pattern(pattern)?;
        if let Some(k) = generator.arity() {
            if groups.len() != k {
                return Err(BraidError::Parse(format!(
                    "{generator} takes {k} strand groups, pattern {pattern} has {}",
                    groups.len()
                )));
            }
        }
        Ok(Letter { generator, groups, inverse: false })
    }

    /// The inverse letter.
    pub fn inv(&self) -> Self {
        Letter { inverse: !self.inverse, ..self.clone() }
    }

    /// The superscript pattern, with `0` for empty groups.
    pub fn pattern(&self) -> String {
        self.groups
            .iter()
            .map(|g| if g.is_empty() { "0".to_string() } else { g.iter().map(|i| i.to_string()).collect() })
            .collect::<Vec<_>>()
            .join(",")
    }

    /// Largest strand label used.
    pub fn max_strand(&self) -> usize {
        self.groups.iter().flatten().copied().max().unwrap_or(0)
    }

    /// Source and target objects over the target strand labels.
    pub fn endpoints(&self) -> (PaObject, PaObject) {
        let (s, t) = self.generator.endpoints(self.groups.len());
        let subs: Vec<PaObject> = self.groups.iter().map(|g| PaObject::left_nested(g)).collect();
        let (s, t) = (s.substitute(&subs), t.substitute(&subs));
        if self.inverse {
            (t, s)
        } else {
            (s, t)
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{{{}}}{}", self.generator, self.pattern(), if self.inverse { "!" } else { "" })
    }
}

/// Parse a comma-separated strand pattern; `0` or `∅` is the empty group.
pub fn parse_pattern(pattern: &str) -> Result<Vec<Vec<usize>>, BraidError> {
    let mut groups = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    for part in pattern.split(',') {
        let part = part.trim();
        let mut group = Vec::new();
        if part != "0" && part != "∅" {
            if part.is_empty() {
                return Err(BraidError::Parse(format!("empty group in pattern {pattern}")));
            }
            for c in part.chars() {
                let d = c
                    .to_digit(10)
                    .filter(|&d| d > 0)
                    .ok_or_else(|| BraidError::Parse(format!("bad strand '{c}' in pattern {pattern}")))?
                    as usize;
                if !seen.insert(d) {
                    return Err(BraidError::Parse(format!("strand {d} repeated in pattern {pattern}")));
                }
                group.push(d);
            }
        }
        groups.push(group);
    }
    Ok(groups)
}

/// Inverse of a word: reversed, with every letter inverted.
pub fn invert(word: &[Letter]) -> Vec<Letter> {
    word.iter().rev().map(Letter::inv).collect()
}

/// Commutator `(U, V) = U V U^-1 V^-1` of two words.
pub fn commutator(u: &[Letter], v: &[Letter]) -> Vec<Letter> {
    let mut out = u.to_vec();
    out.extend_from_slice(v);
    out.extend(invert(u));
    out.extend(invert(v));
    out
}

/// Parse a word: whitespace-separated letters `Name^{pattern}` with an
/// optional trailing `!` for the inverse, and commutators `(U, V)`, which
/// may also carry `!`. Letter names are `Id`, `R`, `Rt`, `F`, `Phi`, `A<a>`,
/// `B<a>`, `At<a>`, `Bt<a>`; a missing superscript means `1,2,...,k`.
pub fn parse_word(text: &str) -> Result<Vec<Letter>, BraidError> {
    let chars: Vec<char> = text.chars().collect();
    let mut pos = 0;
    let w = parse_items(&chars, &mut pos, false)?;
    if pos != chars.len() {
        return Err(BraidError::Parse(format!("unexpected '{}' in word", chars[pos])));
    }
    Ok(w)
}

fn skip_ws(chars: &[char], pos: &mut usize) {
    while *pos < chars.len() && chars[*pos].is_whitespace() {
        *pos += 1;
    }
}

fn bang(chars: &[char], pos: &mut usize) -> bool {
    if *pos < chars.len() && chars[*pos] == '!' {
        *pos += 1;
        true
    } else {
        false
    }
}

fn parse_items(chars: &[char], pos: &mut usize, nested: bool) -> Result<Vec<Letter>, BraidError> {
    let mut out = Vec::new();
    loop {
        skip_ws(chars, pos);
        if *pos >= chars.len() {
            break;
        }
        let c = chars[*pos];
        if nested && (c == ',' || c == ')') {
            break;
        }
        if c == '(' {
            *pos += 1;
            let u = parse_items(chars, pos, true)?;
            skip_ws(chars, pos);
            if *pos >= chars.len() || chars[*pos] != ',' {
                return Err(BraidError::Parse("commutator needs a comma".into()));
            }
            *pos += 1;
            let v = parse_items(chars, pos, true)?;
            skip_ws(chars, pos);
            if *pos >= chars.len() || chars[*pos] != ')' {
                return Err(BraidError::Parse("unbalanced commutator".into()));
            }
            *pos += 1;
            let w = commutator(&u, &v);
            out.extend(if bang(chars, pos) { invert(&w) } else { w });
            continue;
        }
        let start = *pos;
        while *pos < chars.len() && chars[*pos].is_ascii_alphanumeric() {
            *pos += 1;
        }
        if start == *pos {
            return Err(BraidError::Parse(format!("unexpected '{c}' in word")));
        }
        let name: String = chars[start..*pos].iter().collect();
        let generator = Generator::parse(&name)?;
        let pattern = if *pos + 1 < chars.len() && chars[*pos] == '^' && chars[*pos + 1] == '{' {
            *pos += 2;
            let s = *pos;
            while *pos < chars.len() && chars[*pos] != '}' {
                *pos += 1;
            }
            if *pos >= chars.len() {
                return Err(BraidError::Parse("unterminated superscript".into()));
            }
            let p: String = chars[s..*pos].iter().collect();
            *pos += 1;
            p
        } else {
            let k = generator.arity().unwrap_or(1);
            (1..=k).map(|i| i.to_string()).collect::<Vec<_>>().join(",")
        };
        let letter = Letter::new(generator, &pattern)?;
        out.push(if bang(chars, pos) { letter.inv() } else { letter });
    }
    Ok(out)
}

/// A composable word of letters between two parenthesized objects on `n`
/// strands. Products are read as composition of paths: the first letter is
/// traversed first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidMorphism {
    source: PaObject,
    target: PaObject,
    letters: Vec<Letter>,
}

impl BraidMorphism {
    /// Validate endpoint compatibility starting from `source` and record the
    /// target reached.
    pub fn new(source: PaObject, letters: Vec<Letter>) -> Result<Self, BraidError> {
        let n = source.n();
        let mut cur = source.clone();
        for l in &letters {
            if l.max_strand() > n {
                return Err(BraidError::Endpoint(format!("{l} uses a strand beyond {n}")));
            }
            let (s, t) = l.endpoints();
            cur = cur.rewrite(&s, &t).map_err(|e| BraidError::Endpoint(format!("letter {l} at object {cur}: {e}")))?;
        }
        Ok(BraidMorphism { source, target: cur, letters })
    }

    /// Parse a word from `source`.
    pub fn parse(source: &str, word: &str) -> Result<Self, BraidError> {
        Self::new(PaObject::parse(source)?, parse_word(word)?)
    }

    /// Identity morphism of an object.
    pub fn identity(object: PaObject) -> Self {
        BraidMorphism { source: object.clone(), target: object, letters: Vec::new() }
    }

    /// Number of strands.
    pub fn n(&self) -> usize {
        self.source.n()
    }

    /// Source object.
    pub fn source(&self) -> &PaObject {
        &self.source
    }

    /// Target object.
    pub fn target(&self) -> &PaObject {
        &self.target
    }

    /// Letters in traversal order.
    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    /// Composite `self` then `next`.
    pub fn then(&self, next: &BraidMorphism) -> Result<Self, BraidError> {
        if self.target != next.source {
            return Err(BraidError::Endpoint(format!(
                "cannot compose: target {} differs from source {}",
                self.target, next.source
            )));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&next.letters);
        Ok(BraidMorphism { source: self.source.clone(), target: next.target.clone(), letters })
    }

    /// Inverse morphism.
    pub fn inverse(&self) -> Self {
        BraidMorphism { source: self.target.clone(), target: self.source.clone(), letters: invert(&self.letters) }
    }
}

impl fmt::Display for BraidMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            write!(f, "Id")
        } else {
            let parts: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
            write!(f, "{}", parts.join(" "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hexagon_words_have_matching_endpoints() {
        let l = BraidMorphism::parse("(12)3", "R^{1,2} Phi^{2,1,3} R^{1,3}").unwrap();
        let r = BraidMorphism::parse("(12)3", "Phi^{1,2,3} R^{1,23} Phi^{2,3,1}").unwrap();
        assert_eq!(l.target().to_string(), "2(31)");
        assert_eq!(r.target(), l.target());
    }

    #[test]
    fn mismatched_letter_is_rejected() {
        assert!(BraidMorphism::parse("(12)3", "R^{2,3}").is_err());
        assert!(BraidMorphism::parse("(12)3", "Phi^{1,2,3} Phi^{1,2,3}").is_err());
    }

    #[test]
    fn commutator_syntax_expands() {
        let w = parse_word("(A1^{1,2}!, B1^{1,2})").unwrap();
        let s: Vec<String> = w.iter().map(|l| l.to_string()).collect();
        assert_eq!(s, ["A1^{1,2}!", "B1^{1,2}", "A1^{1,2}", "B1^{1,2}!"]);
    }
}
