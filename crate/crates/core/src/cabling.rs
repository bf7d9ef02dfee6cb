//! Cabling, doubling and erasure maps between chord-diagram Lie algebras.
//!
//! A [`StrandAssignment`] sends every source strand `i` to a set `S_i` of
//! target strands. The induced map on generators is
//!
//! * `t_ij -> sum_{p in S_i, q in S_j} t_pq`,
//! * `t_ii -> sum_{p in S_i} t_pp + sum_{p < q in S_i} t_pq`,
//! * `x_i^a -> sum_{p in S_i} x_p^a` and likewise for `y_i^a`,
//!
//! extended as a Lie morphism. Series are transported by `exp . map . log`,
//! which realises superscripts such as `phi^{1,23}` or `A^{12,3}`.
//! Series over the free Lie algebra on `x, y` are first sent to three strands
//! by `x -> t12`, `y -> t23`.

use crate::envelope::{Envelope, Series, SeriesError};
use crate::lie::{algebra, Family, GenKind, Gens, GradedQuotient, LieMap, LiePoly, QuotientError};
use crate::scalar::{Rat, Scalar};
use once_cell::sync::Lazy;
use parking_lot::RwLock;
use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

/// Errors raised by cabling.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum CablingError {
    /// Malformed pattern text.
    #[error("malformed pattern '{0}'")]
    Pattern(String),
    /// Assignment violates disjointness or coverage.
    #[error("invalid strand assignment: {0}")]
    InvalidAssignment(String),
    /// The families cannot be connected by a cabling map.
    #[error("cannot cable {0} into {1}")]
    IncompatibleFamilies(String, String),
    /// Error from the Lie engine.
    #[error(transparent)]
    Quotient(#[from] QuotientError),
    /// Error from the enveloping algebra.
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// Map from source strands to disjoint sets of target strands (1-based).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StrandAssignment {
    target: usize,
    groups: Vec<Vec<usize>>,
    embedding: bool,
}

impl StrandAssignment {
    /// Build and validate an assignment. Without `embedding`, every target
    /// strand must be hit exactly once.
    pub fn new(groups: Vec<Vec<usize>>, target: usize, embedding: bool) -> Result<Self, CablingError> {
        let mut seen = BTreeSet::new();
        for g in &groups {
            for &p in g {
                if p == 0 || p > target {
                    return Err(CablingError::InvalidAssignment(format!("strand {p} outside 1..={target}")));
                }
                if !seen.insert(p) {
                    return Err(CablingError::InvalidAssignment(format!("strand {p} used twice")));
                }
            }
        }
        if !embedding && seen.len() != target {
            return Err(CablingError::InvalidAssignment(format!(
                "{} of {target} target strands assigned; spectators need the embedding flag",
                seen.len()
            )));
        }
        let groups = groups
            .into_iter()
            .map(|mut g| {
                g.sort_unstable();
                g
            })
            .collect();
        Ok(StrandAssignment { target, groups, embedding })
    }

    /// Parse a pattern such as `12,3`, `1,23`, `0,1` or `2,1,3`; `0` (or `∅`)
    /// denotes the empty group. Without an explicit target size the target is
    /// the number of strands mentioned; a larger explicit target turns the
    /// assignment into an embedding with spectator strands.
    pub fn parse(pattern: &str, target: Option<usize>) -> Result<Self, CablingError> {
        let bad = || CablingError::Pattern(pattern.to_string());
        let mut groups = Vec::new();
        for part in pattern.trim().split(',') {
            let part = part.trim();
            if part.is_empty() {
                return Err(bad());
            }
            if part == "0" || part == "∅" {
                groups.push(vec![]);
                continue;
            }
            let mut g = Vec::new();
            for ch in part.chars() {
                let d = ch.to_digit(10).ok_or_else(bad)? as usize;
                if d == 0 {
                    return Err(bad());
                }
                g.push(d);
            }
            groups.push(g);
        }
        let mentioned: usize = groups.iter().map(Vec::len).sum();
        match target {
            None => Self::new(groups, mentioned, false),
            Some(m) => Self::new(groups, m, m != mentioned),
        }
    }

    /// Identity on `n` strands.
    pub fn identity(n: usize) -> Self {
        StrandAssignment { target: n, groups: (1..=n).map(|i| vec![i]).collect(), embedding: false }
    }

    /// Delete the listed strands of `n` and renumber the rest.
    pub fn erase(n: usize, strands: &[usize]) -> Result<Self, CablingError> {
        let mut next = 0;
        let groups = (1..=n)
            .map(|i| {
                if strands.contains(&i) {
                    vec![]
                } else {
                    next += 1;
                    vec![next]
                }
            })
            .collect();
        Self::new(groups, next, false)
    }

    /// The two assignments realising the partial composition `x o_i y` of an
    /// element on `p` strands with one on `q` strands: strand `i` of `x` is
    /// replaced by the `q` strands of `y`.
    pub fn partial(p: usize, i: usize, q: usize) -> Result<(Self, Self), CablingError> {
        if i == 0 || i > p || q == 0 {
            return Err(CablingError::InvalidAssignment(format!("o_{i} on {p} strands")));
        }
        let m = p + q - 1;
        let left = (1..=p)
            .map(|l| match l.cmp(&i) {
                std::cmp::Ordering::Less => vec![l],
                std::cmp::Ordering::Equal => (i..i + q).collect(),
                std::cmp::Ordering::Greater => vec![l + q - 1],
            })
            .collect();
        let right = (1..=q).map(|l| vec![i + l - 1]).collect();
        Ok((Self::new(left, m, false)?, Self::new(right, m, m != q)?))
    }

    /// Number of source strands.
    pub fn source(&self) -> usize {
        self.groups.len()
    }

    /// Number of target strands.
    pub fn target(&self) -> usize {
        self.target
    }

    /// Target strands of each source strand.
    pub fn groups(&self) -> &[Vec<usize>] {
        &self.groups
    }

    /// True when unassigned target strands are spectators.
    pub fn is_embedding(&self) -> bool {
        self.embedding
    }

    /// Apply `self` first, then `next`.
    pub fn then(&self, next: &StrandAssignment) -> Result<Self, CablingError> {
        if next.source() != self.target {
            return Err(CablingError::InvalidAssignment(format!(
                "cannot compose {} target strands with {} source strands",
                self.target,
                next.source()
            )));
        }
        let groups = self.groups.iter().map(|g| g.iter().flat_map(|p| next.groups[p - 1].clone()).collect()).collect();
        let mut out = Self::new(groups, next.target, true)?;
        let used: usize = out.groups.iter().map(Vec::len).sum();
        out.embedding = used != out.target;
        Ok(out)
    }

    /// Source strands that are sent to the empty set.
    pub fn erased(&self) -> Vec<usize> {
        (1..=self.source()).filter(|i| self.groups[i - 1].is_empty()).collect()
    }
}

impl fmt::Display for StrandAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .groups
            .iter()
            .map(|g| if g.is_empty() { "0".to_string() } else { g.iter().map(|p| p.to_string()).collect::<String>() })
            .collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Number of strands of a family viewed as a cabling source.
fn source_strands(family: &Family) -> usize {
    match family {
        Family::FreeF2 => 3,
        other => other.n(),
    }
}

fn compatible(src: &Family, tgt: &Family) -> bool {
    let tgt_framed = tgt.framed();
    match src {
        Family::T { .. } | Family::FreeF2 => !matches!(tgt, Family::FreeF2 | Family::FreeFG { .. } | Family::Custom(_)),
        Family::TF { .. } | Family::TFAlt { .. } => tgt_framed,
        Family::TG { g, .. } => {
            matches!(tgt, Family::TG { g: h, .. } | Family::TFG { g: h, .. } if h == g)
                || (*g == 1 && matches!(tgt, Family::T1Bar { .. }))
        }
        Family::TFG { g, .. } => matches!(tgt, Family::TFG { g: h, .. } if h == g),
        Family::T1Bar { .. } => matches!(tgt, Family::T1Bar { .. }),
        Family::FreeFG { .. } | Family::Custom(_) => false,
    }
}

/// Images of the source generators under the cabling map.
pub fn cable_images(
    src: &Family,
    tgt: &GradedQuotient,
    assignment: &StrandAssignment,
) -> Result<Vec<LiePoly<Rat>>, CablingError> {
    let incompatible = || CablingError::IncompatibleFamilies(src.to_string(), tgt.family().to_string());
    if !compatible(src, tgt.family()) {
        return Err(incompatible());
    }
    if assignment.source() != source_strands(src) || assignment.target() != tgt.family().n() {
        return Err(CablingError::InvalidAssignment(format!(
            "pattern {} ({} -> {} strands) does not fit {} -> {}",
            assignment,
            assignment.source(),
            assignment.target(),
            src,
            tgt.family()
        )));
    }
    let src_alpha = crate::lie::family::family_alphabet(src)?;
    let h = Gens { alphabet: tgt.alphabet() };
    let s = |i: u8| &assignment.groups[i as usize - 1];
    let sum = |items: Vec<LiePoly<Rat>>| crate::lie::quotient::sum(tgt.alphabet(), &items);
    let chords = |i: u8, j: u8| {
        let mut items = Vec::new();
        for &p in s(i) {
            for &q in s(j) {
                items.push(h.t(p, q));
            }
        }
        sum(items)
    };
    let mut images = Vec::with_capacity(src_alpha.len());
    for sym in src_alpha.generators() {
        let im = match &sym.kind {
            GenKind::Tij(i, j) => chords(*i, *j),
            GenKind::Tii(i) => {
                let g = s(*i);
                let mut items: Vec<LiePoly<Rat>> = g.iter().map(|&p| h.t(p, p)).collect();
                for (k, &p) in g.iter().enumerate() {
                    for &q in &g[k + 1..] {
                        items.push(h.t(p, q));
                    }
                }
                sum(items)
            }
            GenKind::Xg(i, a) => sum(s(*i).iter().map(|&p| h.x(p, *a as usize)).collect()),
            GenKind::Yg(i, a) => sum(s(*i).iter().map(|&p| h.y(p, *a as usize)).collect()),
            GenKind::Free(name) if name == "x" => chords(1, 2),
            GenKind::Free(name) if name == "y" => chords(2, 3),
            GenKind::Free(_) => return Err(incompatible()),
        };
        images.push(im);
    }
    Ok(images)
}

type MapKey = (Family, Family, u32, StrandAssignment);
static MAPS: Lazy<RwLock<HashMap<MapKey, Arc<LieMap>>>> = Lazy::new(|| RwLock::new(HashMap::new()));

/// Memoised cabling map from `src` into `tgt` truncated at weight `n`.
pub fn cable_map(
    src: &Family,
    tgt: &Family,
    n: u32,
    assignment: &StrandAssignment,
) -> Result<Arc<LieMap>, CablingError> {
    let key = (src.clone(), tgt.clone(), n, assignment.clone());
    if let Some(m) = MAPS.read().get(&key) {
        return Ok(m.clone());
    }
    let target = algebra(tgt, n)?;
    let images = cable_images(src, &target, assignment)?;
    let alphabet = Arc::new(crate::lie::family::family_alphabet(src)?);
    let map = Arc::new(LieMap::new(alphabet, target, images)?);
    Ok(MAPS.write().entry(key).or_insert(map).clone())
}

/// Cable a Lie polynomial of family `src` into family `tgt`, in target
/// normal form through weight `n`.
pub fn cable<S: Scalar>(
    a: &LiePoly<S>,
    src: &Family,
    tgt: &Family,
    n: u32,
    assignment: &StrandAssignment,
) -> Result<LiePoly<S>, CablingError> {
    Ok(cable_map(src, tgt, n, assignment)?.apply(a)?)
}

/// Evaluate a superscript: transport `s` along the assignment into the
/// enveloping algebra `target`, as `exp(cable(log s))`.
///
/// The result is truncated at the weight bound of `target`. Maps from the
/// weight-one families into genus families double weights, so the source
/// only needs to be known through half the target bound in that case.
pub fn superscript_eval<S: Scalar>(
    s: &Series<S>,
    assignment: &StrandAssignment,
    target: &Arc<Envelope>,
) -> Result<Series<S>, CablingError> {
    let src = s.env().quotient().family().clone();
    let n = target.quotient().max_weight();
    let map = cable_map(&src, target.quotient().family(), n, assignment)?;
    let log = s.log()?;
    let image = map.apply(&log)?.truncate(n);
    Ok(Series::exp_lie(target, n, &image)?)
}

/// Parse a pattern and evaluate the superscript into `target`.
pub fn superscript<S: Scalar>(s: &Series<S>, pattern: &str, target: &Arc<Envelope>) -> Result<Series<S>, CablingError> {
    let a = StrandAssignment::parse(pattern, Some(target.quotient().family().n()))?;
    superscript_eval(s, &a, target)
}

/// Relations of `src` whose cabled image does not vanish in the target.
/// Returns the nonzero reduced images, so an empty list means the map is
/// well defined through weight `n`.
pub fn cable_defects(
    src: &Family,
    tgt: &Family,
    n: u32,
    assignment: &StrandAssignment,
) -> Result<Vec<LiePoly<Rat>>, CablingError> {
    let source = algebra(src, n)?;
    let map = cable_map(src, tgt, n, assignment)?;
    let mut out = Vec::new();
    for r in source.relations() {
        let im = map.target().reduce(&map.apply(r)?.truncate(n))?;
        if !im.is_zero() {
            out.push(im);
        }
    }
    Ok(out)
}

fn apply_chain(
    a: &LiePoly<Rat>,
    steps: &[(&Family, &Family, &StrandAssignment)],
    n: u32,
) -> Result<LiePoly<Rat>, CablingError> {
    let mut cur = a.clone();
    for (s, t, asg) in steps {
        cur = cable(&cur, s, t, n, asg)?;
    }
    Ok(cur)
}

fn same_after(
    a: &LiePoly<Rat>,
    lhs: &[(&Family, &Family, &StrandAssignment)],
    rhs: &[(&Family, &Family, &StrandAssignment)],
    n: u32,
) -> Result<bool, CablingError> {
    Ok(apply_chain(a, lhs, n)? == apply_chain(a, rhs, n)?)
}

/// Check the associativity axioms of partial composition on every basis
/// element of weight at most `degree`.
///
/// For the operad families (`T`, `TF`) `sizes` is `[p, q, r]` and both the
/// sequential axiom `(x o_i y) o_j z = x o_i (y o_{j-i+1} z)` and the parallel
/// axiom `(x o_i y) o_j z = (x o_j z) o_i y` are checked. For a genus family
/// `sizes` is `[p, q]`: a module element on `p` strands composed with two
/// operad elements of the matching framed or unframed family on `q` strands.
pub fn compose_assoc_check(family: &Family, sizes: &[usize], degree: u32) -> Result<bool, CablingError> {
    let (module, op, p, q, r) = match (family, sizes) {
        (Family::T { .. } | Family::TF { .. }, [p, q, r]) => (family.clone(), family.clone(), *p, *q, *r),
        (Family::TG { .. } | Family::TFG { .. }, [p, q]) => {
            let op = if family.framed() { Family::TF { n: 1 } } else { Family::T { n: 1 } };
            (family.clone(), op, *p, *q, *q)
        }
        _ => return Err(CablingError::InvalidAssignment(format!("sizes {sizes:?} do not fit family {family}"))),
    };
    let fx = module.with_n(p);
    let fy = op.with_n(q);
    let fz = op.with_n(r);
    let basis_upto = |f: &Family| -> Result<Vec<LiePoly<Rat>>, CablingError> {
        let q = algebra(f, degree)?;
        Ok((0..q.basis_len() as u32).map(|id| q.basis_element(id)).collect())
    };
    let xs = basis_upto(&fx)?;
    let ys = basis_upto(&fy)?;
    let zs = basis_upto(&fz)?;
    let m1 = module.with_n(p + q - 1);
    let m2 = module.with_n(p + q + r - 2);
    for i in 1..=p {
        let (lx, ry) = StrandAssignment::partial(p, i, q)?;
        for j in 1..=p + q - 1 {
            let (l1, rz) = StrandAssignment::partial(p + q - 1, j, r)?;
            let lhs_x = [(&fx, &m1, &lx), (&m1, &m2, &l1)];
            let lhs_y = [(&fy, &m1, &ry), (&m1, &m2, &l1)];
            let lhs_z = [(&fz, &m2, &rz)];
            let ok = if (i..i + q).contains(&j) {
                // Sequential: x o_i (y o_k z) with k = j - i + 1.
                let k = j - i + 1;
                let yz = op.with_n(q + r - 1);
                let (ly, rz2) = StrandAssignment::partial(q, k, r)?;
                let (lx2, ryz) = StrandAssignment::partial(p, i, q + r - 1)?;
                let rhs_x = [(&fx, &m2, &lx2)];
                let rhs_y = [(&fy, &yz, &ly), (&yz, &m2, &ryz)];
                let rhs_z = [(&fz, &yz, &rz2), (&yz, &m2, &ryz)];
                check_all(&xs, &lhs_x, &rhs_x, degree)?
                    && check_all(&ys, &lhs_y, &rhs_y, degree)?
                    && check_all(&zs, &lhs_z, &rhs_z, degree)?
            } else {
                // Parallel: (x o_j' z) o_i' y, with j' the position of strand j
                // before y was inserted and i' the shifted position of y.
                let (jp, ip) = if j < i { (j, i + r - 1) } else { (j - q + 1, i) };
                let mz = module.with_n(p + r - 1);
                let (lx2, rz2) = StrandAssignment::partial(p, jp, r)?;
                let (l2, ry2) = StrandAssignment::partial(p + r - 1, ip, q)?;
                let rhs_x = [(&fx, &mz, &lx2), (&mz, &m2, &l2)];
                let rhs_y = [(&fy, &m2, &ry2)];
                let rhs_z = [(&fz, &mz, &rz2), (&mz, &m2, &l2)];
                check_all(&xs, &lhs_x, &rhs_x, degree)?
                    && check_all(&ys, &lhs_y, &rhs_y, degree)?
                    && check_all(&zs, &lhs_z, &rhs_z, degree)?
            };
            if !ok {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn check_all(
    elements: &[LiePoly<Rat>],
    lhs: &[(&Family, &Family, &StrandAssignment)],
    rhs: &[(&Family, &Family, &StrandAssignment)],
    n: u32,
) -> Result<bool, CablingError> {
    for e in elements {
        if !same_after(e, lhs, rhs, n)? {
            return Ok(false);
        }
    }
    Ok(true)
}
