//! Truncated universal enveloping algebras in PBW coordinates.
//!
//! A PBW monomial is a nondecreasing sequence of quotient basis ids, ordered
//! by (weight, index). Products are brought to normal order by repeatedly
//! swapping adjacent out-of-order factors, `e_j e_i = e_i e_j + [e_j, e_i]`,
//! with the bracket taken in the quotient. Normal forms of factor sequences
//! are memoised per enveloping algebra.

use crate::lie::{algebra, Family, GradedQuotient, LiePoly, QuotientError};
use crate::scalar::{rat, Rat, Scalar};
use num_traits::{One, Zero};
use once_cell::sync::Lazy;
use parking_lot::RwLock;
use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;
use std::sync::Arc;

/// A PBW monomial: nondecreasing basis ids.
pub type Mono = Vec<u32>;

/// Errors raised by series operations.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum SeriesError {
    /// Operands over different algebras.
    #[error("series live over different algebras")]
    BaseMismatch,
    /// Operands with different truncations.
    #[error("truncation mismatch: {0} vs {1}")]
    TruncationMismatch(u32, u32),
    /// Logarithm of a series that is not group-like.
    #[error("series is not group-like (log has a term of PBW length {0})")]
    NotGroupLike(usize),
    /// Weight-zero coefficient is not invertible (or not 1 where required).
    #[error("weight-zero coefficient is not invertible")]
    NotInvertible,
    /// Parse error.
    #[error("parse error: {0}")]
    Parse(String),
    /// Error from the underlying quotient.
    #[error(transparent)]
    Quotient(#[from] QuotientError),
}

type Terms = Arc<Vec<(Mono, Rat)>>;
type BasisTerms = Arc<Vec<(u32, Rat)>>;

/// Enveloping algebra of a graded quotient, with memoised structure data.
#[derive(Debug)]
pub struct Envelope {
    q: Arc<GradedQuotient>,
    brackets: RwLock<HashMap<(u32, u32), BasisTerms>>,
    normal: RwLock<HashMap<Mono, Terms>>,
    monomials: RwLock<HashMap<u32, Arc<Vec<Mono>>>>,
}

type EnvelopeCache = RwLock<HashMap<(Family, u32), Arc<Envelope>>>;

static ENVELOPES: Lazy<EnvelopeCache> = Lazy::new(|| RwLock::new(HashMap::new()));

impl Envelope {
    /// Shared enveloping algebra of a family truncated at weight `n`.
    pub fn of(family: &Family, n: u32) -> Result<Arc<Self>, SeriesError> {
        let key = (family.clone(), n);
        if let Some(e) = ENVELOPES.read().get(&key) {
            return Ok(e.clone());
        }
        let env = Envelope::new(algebra(family, n)?);
        Ok(ENVELOPES.write().entry(key).or_insert(env).clone())
    }

    /// Enveloping algebra of `q`.
    pub fn new(q: Arc<GradedQuotient>) -> Arc<Self> {
        Arc::new(Envelope {
            q,
            brackets: RwLock::new(HashMap::new()),
            normal: RwLock::new(HashMap::new()),
            monomials: RwLock::new(HashMap::new()),
        })
    }

    /// Underlying Lie algebra.
    pub fn quotient(&self) -> &Arc<GradedQuotient> {
        &self.q
    }

    /// Weight of a monomial.
    pub fn mono_weight(&self, m: &[u32]) -> u32 {
        m.iter().map(|i| self.q.basis_weight(*i)).sum()
    }

    /// Bracket `[e_i, e_j]` of two basis elements as (id, coefficient) pairs.
    pub fn basis_bracket(&self, i: u32, j: u32) -> Arc<Vec<(u32, Rat)>> {
        if let Some(b) = self.brackets.read().get(&(i, j)) {
            return b.clone();
        }
        let a = self.q.basis_element::<Rat>(i);
        let b = self.q.basis_element::<Rat>(j);
        let p = self.q.bracket(&a, &b).expect("bracket within truncation bound");
        let coords: Vec<(u32, Rat)> = self.q.coords(&p).expect("normal form").into_iter().collect();
        let arc = Arc::new(coords);
        self.brackets.write().insert((i, j), arc.clone());
        arc
    }

    /// Normal-ordered expansion of an arbitrary product of basis elements.
    pub fn normal_form(&self, seq: &[u32]) -> Terms {
        if seq.windows(2).all(|w| w[0] <= w[1]) {
            return Arc::new(vec![(seq.to_vec(), Rat::one())]);
        }
        if let Some(t) = self.normal.read().get(seq) {
            return t.clone();
        }
        let p = seq.windows(2).position(|w| w[0] > w[1]).expect("unsorted");
        let mut acc: BTreeMap<Mono, Rat> = BTreeMap::new();
        let mut swapped = seq.to_vec();
        swapped.swap(p, p + 1);
        for (m, c) in self.normal_form(&swapped).iter() {
            *acc.entry(m.clone()).or_insert_with(Rat::zero) += c;
        }
        for (k, c) in self.basis_bracket(seq[p], seq[p + 1]).iter() {
            let mut shorter = Vec::with_capacity(seq.len() - 1);
            shorter.extend_from_slice(&seq[..p]);
            shorter.push(*k);
            shorter.extend_from_slice(&seq[p + 2..]);
            for (m, d) in self.normal_form(&shorter).iter() {
                *acc.entry(m.clone()).or_insert_with(Rat::zero) += c * d;
            }
        }
        let terms: Vec<(Mono, Rat)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        let arc = Arc::new(terms);
        self.normal.write().insert(seq.to_vec(), arc.clone());
        arc
    }

    /// All PBW monomials of total weight `d`, sorted.
    pub fn monomials(&self, d: u32) -> Arc<Vec<Mono>> {
        if let Some(m) = self.monomials.read().get(&d) {
            return m.clone();
        }
        let n = self.q.basis_len() as u32;
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(env: &Envelope, n: u32, start: u32, left: u32, cur: &mut Mono, out: &mut Vec<Mono>) {
            if left == 0 {
                out.push(cur.clone());
                return;
            }
            for i in start..n {
                let w = env.q.basis_weight(i);
                if w <= left {
                    cur.push(i);
                    rec(env, n, i, left - w, cur, out);
                    cur.pop();
                }
            }
        }
        if d <= self.q.max_weight() {
            rec(self, n, 0, d, &mut cur, &mut out);
        }
        out.sort();
        let arc = Arc::new(out);
        self.monomials.write().insert(d, arc.clone());
        arc
    }

    /// Render a monomial as `*`-separated dot-words, `1` for the empty one.
    pub fn render_mono(&self, m: &[u32]) -> String {
        if m.is_empty() {
            return "1".to_string();
        }
        m.iter().map(|i| self.q.alphabet().render_word(&self.q.basis()[*i as usize])).collect::<Vec<_>>().join("*")
    }

    /// Parse a monomial rendered by [`Envelope::render_mono`].
    pub fn parse_mono(&self, s: &str) -> Result<Mono, SeriesError> {
        if s == "1" {
            return Ok(vec![]);
        }
        let mut m = Vec::new();
        for part in s.split('*') {
            let w = self
                .q
                .alphabet()
                .parse_word(part)
                .ok_or_else(|| SeriesError::Parse(format!("unknown word '{part}'")))?;
            let id = self.q.basis_id(&w).ok_or_else(|| SeriesError::Parse(format!("'{part}' is not a basis word")))?;
            m.push(id);
        }
        if !m.windows(2).all(|w| w[0] <= w[1]) {
            return Err(SeriesError::Parse(format!("monomial '{s}' is not in PBW order")));
        }
        Ok(m)
    }
}

/// Degree-truncated element of an enveloping algebra.
#[derive(Clone)]
pub struct Series<S: Scalar = Rat> {
    env: Arc<Envelope>,
    n: u32,
    terms: BTreeMap<Mono, S>,
}

/// Group-like series: weight-zero coefficient 1 and logarithm in the Lie part.
pub type GroupLike<S = Rat> = Series<S>;

impl<S: Scalar> std::fmt::Debug for Series<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Series(N={}) {{", self.n)?;
        for (m, c) in &self.terms {
            write!(f, " {}: {:?};", self.env.render_mono(m), c)?;
        }
        write!(f, " }}")
    }
}

impl<S: Scalar> PartialEq for Series<S> {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.env, &other.env) && self.n == other.n && self.terms == other.terms
    }
}

impl<S: Scalar> Series<S> {
    /// Zero series.
    pub fn zero(env: &Arc<Envelope>, n: u32) -> Self {
        Series { env: env.clone(), n, terms: BTreeMap::new() }
    }

    /// Unit series.
    pub fn one(env: &Arc<Envelope>, n: u32) -> Self {
        Self::scalar(env, n, S::one())
    }

    /// Constant series.
    pub fn scalar(env: &Arc<Envelope>, n: u32, c: S) -> Self {
        let mut s = Self::zero(env, n);
        if !c.is_zero() {
            s.terms.insert(vec![], c);
        }
        s
    }

    /// Build from PBW terms (monomials must be nondecreasing).
    pub fn from_terms(env: &Arc<Envelope>, n: u32, terms: impl IntoIterator<Item = (Mono, S)>) -> Self {
        let mut s = Self::zero(env, n);
        for (m, c) in terms {
            debug_assert!(m.windows(2).all(|w| w[0] <= w[1]));
            if env.mono_weight(&m) <= n {
                s.add_term(m, c);
            }
        }
        s
    }

    /// Embed a Lie polynomial (reduced to normal form first).
    pub fn from_lie(env: &Arc<Envelope>, n: u32, a: &LiePoly<S>) -> Result<Self, SeriesError> {
        let coords = env.q.coords(&a.truncate(n.min(env.q.max_weight())))?;
        Ok(Self::from_terms(env, n, coords.into_iter().map(|(id, c)| (vec![id], c))))
    }

    /// Enveloping algebra.
    pub fn env(&self) -> &Arc<Envelope> {
        &self.env
    }

    /// Truncation weight.
    pub fn truncation(&self) -> u32 {
        self.n
    }

    /// PBW terms.
    pub fn terms(&self) -> &BTreeMap<Mono, S> {
        &self.terms
    }

    /// Coefficient of a monomial.
    pub fn coeff(&self, m: &[u32]) -> S {
        self.terms.get(m).cloned().unwrap_or_else(S::zero)
    }

    /// Weight-zero coefficient.
    pub fn constant(&self) -> S {
        self.coeff(&[])
    }

    fn add_term(&mut self, m: Mono, c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(e) => {
                *e = e.clone() + c;
                if e.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    fn compatible(&self, other: &Self) -> Result<(), SeriesError> {
        if !Arc::ptr_eq(&self.env, &other.env) {
            return Err(SeriesError::BaseMismatch);
        }
        if self.n != other.n {
            return Err(SeriesError::TruncationMismatch(self.n, other.n));
        }
        Ok(())
    }

    /// True when every coefficient is exactly zero.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True when every coefficient is negligible for the scalar type.
    pub fn is_negligible(&self) -> bool {
        self.terms.values().all(|c| c.is_negligible())
    }

    /// Largest coefficient magnitude.
    pub fn max_magnitude(&self) -> f64 {
        self.terms.values().map(|c| c.magnitude()).fold(0.0, f64::max)
    }

    /// Sum.
    pub fn add(&self, other: &Self) -> Result<Self, SeriesError> {
        self.compatible(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    /// Difference.
    pub fn sub(&self, other: &Self) -> Result<Self, SeriesError> {
        self.compatible(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    /// Scalar multiple.
    pub fn scale(&self, s: &S) -> Self {
        let mut out = Self::zero(&self.env, self.n);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c.clone() * s.clone());
        }
        out
    }

    /// Rational multiple.
    pub fn scale_rat(&self, r: &Rat) -> Self {
        let mut out = Self::zero(&self.env, self.n);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c.mul_rat(r));
        }
        out
    }

    /// Negation.
    pub fn neg(&self) -> Self {
        self.scale_rat(&rat(-1, 1))
    }

    /// Component of total weight `d`.
    pub fn component(&self, d: u32) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| self.env.mono_weight(m) == d)
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        Series { env: self.env.clone(), n: self.n, terms }
    }

    /// Re-truncate at a smaller weight.
    pub fn truncate(&self, n: u32) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| self.env.mono_weight(m) <= n)
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        Series { env: self.env.clone(), n: n.min(self.n), terms }
    }

    /// Truncated product.
    pub fn mul(&self, other: &Self) -> Result<Self, SeriesError> {
        self.compatible(other)?;
        let n = self.n;
        let weighted = |s: &Self| -> Vec<(u32, Mono, S)> {
            let mut v: Vec<(u32, Mono, S)> =
                s.terms.iter().map(|(m, c)| (self.env.mono_weight(m), m.clone(), c.clone())).collect();
            v.sort_by_key(|t| t.0);
            v
        };
        let a = weighted(self);
        let b = weighted(other);
        let mut acc: HashMap<Mono, S> = HashMap::new();
        for (wa, ma, ca) in &a {
            for (wb, mb, cb) in &b {
                if wa + wb > n {
                    break;
                }
                let coef = ca.clone() * cb.clone();
                if coef.is_zero() {
                    continue;
                }
                let sorted = match (ma.last(), mb.first()) {
                    (Some(x), Some(y)) => x <= y,
                    _ => true,
                };
                if sorted {
                    let mut m = ma.clone();
                    m.extend_from_slice(mb);
                    let e = acc.entry(m).or_insert_with(S::zero);
                    *e = e.clone() + coef;
                } else {
                    let mut seq = ma.clone();
                    seq.extend_from_slice(mb);
                    for (m, r) in self.env.normal_form(&seq).iter() {
                        let e = acc.entry(m.clone()).or_insert_with(S::zero);
                        *e = e.clone() + coef.mul_rat(r);
                    }
                }
            }
        }
        let terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Ok(Series { env: self.env.clone(), n, terms })
    }

    /// Product of factors in the order given (algebra order).
    pub fn product(env: &Arc<Envelope>, n: u32, factors: &[&Self]) -> Result<Self, SeriesError> {
        let mut acc = Self::one(env, n);
        for f in factors {
            acc = acc.mul(f)?;
        }
        Ok(acc)
    }

    /// Product of factors read as a composite path: the first factor is
    /// traversed first, so the algebra product is taken in reverse order.
    pub fn path(env: &Arc<Envelope>, n: u32, factors: &[&Self]) -> Result<Self, SeriesError> {
        let mut acc = Self::one(env, n);
        for f in factors.iter().rev() {
            acc = acc.mul(f)?;
        }
        Ok(acc)
    }

    /// Non-negative power.
    pub fn pow(&self, k: u32) -> Result<Self, SeriesError> {
        let mut acc = Self::one(&self.env, self.n);
        for _ in 0..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Exponential of a series without constant term.
    pub fn exp_series(&self) -> Result<Self, SeriesError> {
        if !self.constant().is_zero() {
            return Err(SeriesError::NotInvertible);
        }
        let mut out = Self::one(&self.env, self.n);
        let mut power = Self::one(&self.env, self.n);
        for k in 1..=self.n {
            power = power.mul(self)?.scale_rat(&rat(1, k as i64));
            if power.is_zero() {
                break;
            }
            out = out.add(&power)?;
        }
        Ok(out)
    }

    /// Exponential of a Lie polynomial.
    pub fn exp_lie(env: &Arc<Envelope>, n: u32, a: &LiePoly<S>) -> Result<Self, SeriesError> {
        Self::from_lie(env, n, a)?.exp_series()
    }

    /// Logarithm of a series with constant term 1, as a series.
    pub fn log_series(&self) -> Result<Self, SeriesError> {
        let c = self.constant();
        if !(c.clone() - S::one()).is_negligible() {
            return Err(SeriesError::NotInvertible);
        }
        let mut u = self.clone();
        u.terms.remove(&Vec::new());
        let mut out = Self::zero(&self.env, self.n);
        let mut power = Self::one(&self.env, self.n);
        for k in 1..=self.n {
            power = power.mul(&u)?;
            if power.is_zero() {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            out = out.add(&power.scale_rat(&rat(sign, k as i64)))?;
        }
        Ok(out)
    }

    /// Logarithm of a group-like series, as a Lie polynomial in normal form.
    pub fn log(&self) -> Result<LiePoly<S>, SeriesError> {
        self.log_series()?.to_lie()
    }

    /// Interpret a series supported on PBW length-one monomials as a Lie
    /// polynomial. Constant terms must vanish.
    pub fn to_lie(&self) -> Result<LiePoly<S>, SeriesError> {
        let mut out = LiePoly::zero(self.env.q.alphabet());
        for (m, c) in &self.terms {
            if m.len() == 1 {
                out.add_term(self.env.q.basis()[m[0] as usize].clone(), c.clone());
            } else if !c.is_negligible() {
                return Err(SeriesError::NotGroupLike(m.len()));
            }
        }
        Ok(out)
    }

    /// True when the constant term is 1 and the logarithm is a Lie element.
    pub fn is_group_like(&self) -> bool {
        self.log().is_ok()
    }

    /// Multiplicative inverse.
    pub fn inverse(&self) -> Result<Self, SeriesError> {
        let c = self.constant();
        let cinv = c.try_inv().ok_or(SeriesError::NotInvertible)?;
        let normalized = self.scale(&cinv);
        let mut v = normalized.clone();
        v.terms.remove(&Vec::new());
        let minus_v = v.neg();
        let mut out = Self::one(&self.env, self.n);
        let mut power = Self::one(&self.env, self.n);
        for _ in 1..=self.n {
            power = power.mul(&minus_v)?;
            if power.is_zero() {
                break;
            }
            out = out.add(&power)?;
        }
        Ok(out.scale(&cinv))
    }

    /// Group commutator `u v u^-1 v^-1` (algebra order).
    pub fn group_commutator(&self, other: &Self) -> Result<Self, SeriesError> {
        let ui = self.inverse()?;
        let vi = other.inverse()?;
        Self::product(&self.env, self.n, &[self, other, &ui, &vi])
    }

    /// Commutator of the composite path `u`, `v`, `u^-1`, `v^-1`.
    pub fn path_commutator(&self, other: &Self) -> Result<Self, SeriesError> {
        let ui = self.inverse()?;
        let vi = other.inverse()?;
        Self::path(&self.env, self.n, &[self, other, &ui, &vi])
    }

    /// Conjugation `g a g^-1` (algebra order).
    pub fn adjoint(&self, a: &Self) -> Result<Self, SeriesError> {
        let gi = self.inverse()?;
        Self::product(&self.env, self.n, &[self, a, &gi])
    }

    /// Conjugation of a Lie polynomial, returned as a Lie polynomial.
    pub fn adjoint_lie(&self, a: &LiePoly<S>) -> Result<LiePoly<S>, SeriesError> {
        let s = Self::from_lie(&self.env, self.n, a)?;
        self.adjoint(&s)?.to_lie()
    }

    /// Map coefficients into another scalar type.
    pub fn map_scalar<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Series<T> {
        let mut out = Series::<T>::zero(&self.env, self.n);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c));
        }
        out
    }

    /// Header line recording family, parameters and truncation.
    pub fn header(&self) -> String {
        let fam = self.env.q.family();
        format!("# family={} n={} g={} N={}", fam.tag(), fam.n(), fam.g(), self.n)
    }

    /// Serialise as a header line followed by sorted `<pbw-monomial> <coef>`
    /// lines.
    pub fn serialize(&self) -> String {
        let mut s = self.header();
        s.push('\n');
        for (m, c) in &self.terms {
            writeln!(s, "{} {}", self.env.render_mono(m), c.render()).unwrap();
        }
        s
    }
}

impl Series<Rat> {
    /// Parse text produced by [`Series::serialize`]; the header is checked
    /// against the envelope and gives the truncation.
    pub fn parse(env: &Arc<Envelope>, text: &str) -> Result<Self, SeriesError> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines.next().ok_or_else(|| SeriesError::Parse("empty input".into()))?;
        let n = header
            .split_whitespace()
            .find_map(|t| t.strip_prefix("N="))
            .and_then(|v| v.parse::<u32>().ok())
            .ok_or_else(|| SeriesError::Parse("header lacks N=".into()))?;
        let fam = env.q.family();
        let expected = format!("family={}", fam.tag());
        if !header.split_whitespace().any(|t| t == expected) {
            return Err(SeriesError::Parse(format!("header '{header}' does not match {}", fam.tag())));
        }
        let mut s = Self::zero(env, n);
        for line in lines.filter(|l| !l.starts_with('#')) {
            let (m, c) =
                line.split_once(char::is_whitespace).ok_or_else(|| SeriesError::Parse(format!("bad line '{line}'")))?;
            let mono = env.parse_mono(m)?;
            let coef: Rat = c.trim().parse().map_err(|_| SeriesError::Parse(format!("bad coefficient '{c}'")))?;
            s.add_term(mono, coef);
        }
        Ok(s)
    }
}
