use assoc_core::lie::{Family, Gens, LiePoly};
use assoc_core::{rat, Envelope, Rat, Series, SeriesError};
use proptest::prelude::*;
use std::collections::BTreeMap;
use std::sync::Arc;

type Words = BTreeMap<Vec<u8>, Rat>;

/// Truncated free associative algebra on weight-one letters, used as an
/// oracle for products, exponentials and logarithms.
mod words {
    use super::*;

    pub fn add(a: &Words, b: &Words, k: &Rat) -> Words {
        let mut out = a.clone();
        for (w, c) in b {
            *out.entry(w.clone()).or_insert_with(|| rat(0, 1)) += c.clone() * k.clone();
        }
        out.retain(|_, c| *c != rat(0, 1));
        out
    }

    pub fn mul(a: &Words, b: &Words, n: usize) -> Words {
        let mut out = Words::new();
        for (u, x) in a {
            for (v, y) in b {
                if u.len() + v.len() <= n {
                    let mut w = u.clone();
                    w.extend(v);
                    *out.entry(w).or_insert_with(|| rat(0, 1)) += x.clone() * y.clone();
                }
            }
        }
        out.retain(|_, c| *c != rat(0, 1));
        out
    }

    pub fn one() -> Words {
        Words::from([(Vec::new(), rat(1, 1))])
    }

    pub fn exp(a: &Words, n: usize) -> Words {
        let mut out = one();
        let mut p = one();
        for k in 1..=n {
            p = mul(&p, a, n);
            p = p.into_iter().map(|(w, c)| (w, c / rat(k as i64, 1))).collect();
            out = add(&out, &p, &rat(1, 1));
        }
        out
    }

    pub fn log(a: &Words, n: usize) -> Words {
        let u = add(a, &one(), &rat(-1, 1));
        let mut out = Words::new();
        let mut p = one();
        for k in 1..=n as i64 {
            p = mul(&p, &u, n);
            let sign = if k % 2 == 1 { 1 } else { -1 };
            out = add(&out, &p, &rat(sign, k));
        }
        out
    }
}

fn free(n: u32) -> (Arc<Envelope>, LiePoly<Rat>, LiePoly<Rat>) {
    let env = Envelope::of(&Family::FreeF2, n).unwrap();
    let q = env.quotient().clone();
    (env, q.gen("x"), q.gen("y"))
}

fn br(a: &LiePoly<Rat>, b: &LiePoly<Rat>) -> LiePoly<Rat> {
    a.bracket(b).unwrap()
}

#[test]
fn exp_product_at_weight_two() {
    let (env, x, y) = free(2);
    let p = Series::exp_lie(&env, 2, &x).unwrap().mul(&Series::exp_lie(&env, 2, &y).unwrap()).unwrap();
    // 1 + x + y + x^2/2 + xy + y^2/2, so the weight-two log part is [x,y]/2.
    assert_eq!(p.log().unwrap().component(2), br(&x, &y).scale_rat(&rat(1, 2)));
    assert_eq!(p.component(0), Series::one(&env, 2));
}

#[test]
fn commutator_leading_term() {
    let (env, x, y) = free(3);
    let ex = Series::exp_lie(&env, 3, &x).unwrap();
    let ey = Series::exp_lie(&env, 3, &y).unwrap();
    let c = ex.group_commutator(&ey).unwrap().log().unwrap();
    assert_eq!(c.component(1), LiePoly::zero(x.alphabet()));
    assert_eq!(c.component(2), br(&x, &y));
    // The path commutator reverses the algebra order: leading term [y,x].
    let p = ex.path_commutator(&ey).unwrap().log().unwrap();
    assert_eq!(p.component(2), br(&y, &x));
}

#[test]
fn adjoint_of_generator() {
    let (env, x, y) = free(2);
    let ex = Series::exp_lie(&env, 2, &x).unwrap();
    assert_eq!(ex.adjoint_lie(&y).unwrap(), y.add(&br(&x, &y)).unwrap());
}

#[test]
fn path_reverses_product() {
    let (env, x, y) = free(3);
    let ex = Series::exp_lie(&env, 3, &x).unwrap();
    let ey = Series::exp_lie(&env, 3, &y).unwrap();
    assert_eq!(Series::path(&env, 3, &[&ex, &ey]).unwrap(), ey.mul(&ex).unwrap());
}

#[test]
fn non_group_like_log_is_rejected() {
    let (env, x, _) = free(2);
    let s = Series::from_lie(&env, 2, &x).unwrap();
    let one = Series::one(&env, 2);
    // 1 + x + x^2 is not group-like.
    let bad = one.add(&s).unwrap().add(&s.mul(&s).unwrap()).unwrap();
    assert!(!bad.is_group_like());
    assert!(Series::exp_lie(&env, 2, &x).unwrap().is_group_like());
}

#[test]
fn serialization_round_trip_in_chord_algebra() {
    let env = Envelope::of(&Family::T { n: 3 }, 3).unwrap();
    let h = Gens { alphabet: env.quotient().alphabet() };
    let a = h.add(&h.t(1, 2).scale_rat(&rat(2, 3)), &h.br(&h.t(1, 3), &h.t(2, 3)));
    let s = Series::exp_lie(&env, 3, &a).unwrap();
    let text = s.serialize();
    assert!(text.starts_with("# family=T_N n=3 g=0 N=3"));
    assert_eq!(Series::parse(&env, &text).unwrap(), s);
}

#[test]
fn truncation_mismatch_is_an_error() {
    let (env, x, _) = free(3);
    let a = Series::exp_lie(&env, 3, &x).unwrap();
    let b = Series::exp_lie(&env, 2, &x).unwrap();
    assert_eq!(a.add(&b), Err(SeriesError::TruncationMismatch(3, 2)));
    let other = Envelope::of(&Family::T { n: 3 }, 3).unwrap();
    assert_eq!(a.mul(&Series::one(&other, 3)), Err(SeriesError::BaseMismatch));
}

fn small_rat() -> impl Strategy<Value = Rat> {
    (-3i64..=3, 1i64..=3).prop_map(|(p, q)| rat(p, q))
}

/// Lie element with weight-one and weight-two parts on x, y.
fn lie_elem() -> impl Strategy<Value = [Rat; 3]> {
    [small_rat(), small_rat(), small_rat()]
}

fn build(c: &[Rat; 3], x: &LiePoly<Rat>, y: &LiePoly<Rat>) -> LiePoly<Rat> {
    x.scale(&c[0]).add(&y.scale(&c[1])).unwrap().add(&br(x, y).scale(&c[2])).unwrap()
}

fn to_words(a: &LiePoly<Rat>) -> Words {
    a.to_words()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn log_inverts_exp(c in lie_elem(), n in 2u32..=5) {
        let (env, x, y) = free(n);
        let a = build(&c, &x, &y);
        prop_assert_eq!(Series::exp_lie(&env, n, &a).unwrap().log().unwrap(), a);
    }

    #[test]
    fn exp_inverts_log_on_products(c in lie_elem(), d in lie_elem()) {
        let (env, x, y) = free(4);
        let g = Series::exp_lie(&env, 4, &build(&c, &x, &y)).unwrap()
            .mul(&Series::exp_lie(&env, 4, &build(&d, &x, &y)).unwrap()).unwrap();
        prop_assert_eq!(Series::exp_lie(&env, 4, &g.log().unwrap()).unwrap(), g);
    }

    #[test]
    fn multiplication_is_associative(c in lie_elem(), d in lie_elem(), e in lie_elem()) {
        let env = Envelope::of(&Family::T { n: 3 }, 3).unwrap();
        let q = env.quotient().clone();
        let (x, y) = (q.gen::<Rat>("t12"), q.gen::<Rat>("t23"));
        let s = |k: &[Rat; 3]| {
            let lie = q.reduce(&build(k, &x, &y).add(&q.gen::<Rat>("t13").scale(&k[2])).unwrap()).unwrap();
            Series::from_lie(&env, 3, &lie).unwrap().add(&Series::exp_lie(&env, 3, &lie).unwrap()).unwrap()
        };
        let (a, b, cc) = (s(&c), s(&d), s(&e));
        prop_assert_eq!(a.mul(&b).unwrap().mul(&cc).unwrap(), a.mul(&b.mul(&cc).unwrap()).unwrap());
    }

    #[test]
    fn bch_matches_word_oracle(c in lie_elem(), d in lie_elem(), n in 2u32..=5) {
        let (env, x, y) = free(n);
        let (a, b) = (build(&c, &x, &y), build(&d, &x, &y));
        let z = Series::exp_lie(&env, n, &a).unwrap().mul(&Series::exp_lie(&env, n, &b).unwrap()).unwrap().log().unwrap();
        let k = n as usize;
        let expected = words::log(&words::mul(&words::exp(&to_words(&a), k), &words::exp(&to_words(&b), k), k), k);
        prop_assert_eq!(to_words(&z), expected);
    }

    #[test]
    fn commutator_matches_word_oracle(c in lie_elem(), d in lie_elem(), n in 2u32..=5) {
        let (env, x, y) = free(n);
        let (a, b) = (build(&c, &x, &y), build(&d, &x, &y));
        let ea = Series::exp_lie(&env, n, &a).unwrap();
        let eb = Series::exp_lie(&env, n, &b).unwrap();
        let z = ea.group_commutator(&eb).unwrap().log().unwrap();
        let k = n as usize;
        let (wa, wb) = (to_words(&a), to_words(&b));
        let neg = |w: &Words| w.iter().map(|(u, c)| (u.clone(), -c.clone())).collect::<Words>();
        let prod = [words::exp(&wa, k), words::exp(&wb, k), words::exp(&neg(&wa), k), words::exp(&neg(&wb), k)]
            .iter()
            .fold(words::one(), |acc, f| words::mul(&acc, f, k));
        prop_assert_eq!(to_words(&z), words::log(&prod, k));
    }

    #[test]
    fn adjoint_is_a_lie_automorphism(c in lie_elem(), d in lie_elem(), e in lie_elem()) {
        let (env, x, y) = free(4);
        let g = Series::exp_lie(&env, 4, &build(&c, &x, &y)).unwrap();
        let (a, b) = (build(&d, &x, &y), build(&e, &x, &y));
        let lhs = g.adjoint_lie(&br(&a, &b).truncate(4)).unwrap();
        let rhs = br(&g.adjoint_lie(&a).unwrap(), &g.adjoint_lie(&b).unwrap()).truncate(4);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn inverse_is_two_sided(c in lie_elem()) {
        let (env, x, y) = free(4);
        let g = Series::exp_lie(&env, 4, &build(&c, &x, &y)).unwrap();
        let gi = g.inverse().unwrap();
        prop_assert_eq!(g.mul(&gi).unwrap(), Series::one(&env, 4));
        prop_assert_eq!(gi.mul(&g).unwrap(), Series::one(&env, 4));
    }
}
