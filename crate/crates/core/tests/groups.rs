use assoc_core::equations::*;
use assoc_core::lie::{Family, Gens, LiePoly};
use assoc_core::{rat, Envelope, Rat, Series};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::sync::{Arc, OnceLock};

fn assoc4() -> &'static AssociatorCandidate<Rat> {
    static A: OnceLock<AssociatorCandidate<Rat>> = OnceLock::new();
    A.get_or_init(|| solve_associator(&rat(1, 1), 4).unwrap().0)
}

fn free(n: u32) -> (Arc<Envelope>, LiePoly<Rat>, LiePoly<Rat>) {
    let env = Envelope::of(&Family::FreeF2, n).unwrap();
    let a = env.quotient().alphabet().clone();
    (env, LiePoly::generator(&a, 0), LiePoly::generator(&a, 1))
}

fn br(a: &LiePoly<Rat>, b: &LiePoly<Rat>) -> LiePoly<Rat> {
    a.bracket(b).unwrap()
}

/// Random group-like series `exp(sum of random brackets)` with small
/// rational coefficients.
fn random_group_like(rng: &mut ChaCha8Rng, n: u32) -> Series<Rat> {
    let (env, x, y) = free(n);
    let mut words = vec![x.clone(), y.clone()];
    let mut frontier = words.clone();
    for _ in 1..n {
        let mut next = Vec::new();
        for w in &frontier {
            next.push(br(&x, w));
            next.push(br(&y, w));
        }
        words.extend(next.iter().cloned());
        frontier = next;
    }
    let mut lie = LiePoly::zero(env.quotient().alphabet());
    for w in &words {
        let c = rat(rng.gen_range(-3..=3), rng.gen_range(1..=3));
        lie = lie.add(&w.scale(&c)).unwrap();
    }
    Series::exp_lie(&env, n, &lie).unwrap()
}

fn random_lambda(rng: &mut ChaCha8Rng) -> Rat {
    loop {
        let l = rat(rng.gen_range(-3..=3), rng.gen_range(1..=2));
        if l != rat(0, 1) {
            return l;
        }
    }
}

fn failing(report: &Report) -> Vec<(String, u32)> {
    report.equations.iter().filter_map(|e| e.first_failing_weight().map(|w| (e.name.clone(), w))).collect()
}

// Flatness.

#[test]
fn kz_form_is_flat() {
    for n in 2..=4 {
        for framed in [false, true] {
            let r = check_flatness(&FlatnessProblem::new(n, framed)).unwrap();
            assert!(r.flat, "{}", r.render());
        }
    }
}

#[test]
fn flatness_blocks_have_expected_sizes() {
    let r = check_flatness(&FlatnessProblem::new(4, true)).unwrap();
    let sizes: Vec<(String, usize)> = r.blocks.iter().map(|b| (b.name.clone(), b.forms)).collect();
    // 4 framing forms, 6 chord forms, and one Arnold elimination per triple.
    assert_eq!(sizes, [("[w1,w1]".to_string(), 6), ("[w1,w2]".to_string(), 24), ("[w2,w2]".to_string(), 15 - 4)]);
}

#[test]
fn dropping_four_term_breaks_flatness() {
    for n in 2..=4 {
        let r = check_flatness(&FlatnessProblem::new(n, true).without_four_term()).unwrap();
        assert!(!r.flat);
        let mixed = r.blocks.iter().find(|b| b.name == "[w1,w2]").unwrap();
        assert!(mixed.surviving > 0);
        assert!(r.residuals.iter().any(|(form, _)| form == "w1^w12"));
    }
    for n in 3..=4 {
        let r = check_flatness(&FlatnessProblem::new(n, false).without_four_term()).unwrap();
        assert!(!r.flat);
    }
}

fn nonzero_rat() -> impl Strategy<Value = i64> {
    prop_oneof![-50i64..=-1, 1i64..=50]
}

proptest! {
    // The Arnold relation holds pointwise for the coefficient functions
    // 1/(z_i - z_j) of the forms dlog(z_i - z_j).
    #[test]
    fn arnold_identity_holds_at_points(a in -50i64..50, b in -50i64..50, c in -50i64..50) {
        prop_assume!(a != b && b != c && a != c);
        let w = |p: i64, q: i64| rat(1, p - q);
        let s = w(a, b) * w(b, c) + w(b, c) * w(c, a) + w(c, a) * w(a, b);
        prop_assert_eq!(s, rat(0, 1));
    }

    #[test]
    fn arnold_elimination_preserves_pairing(d in nonzero_rat()) {
        // w_ij∧w_ik = w_ij∧w_jk - w_ik∧w_jk, evaluated on the tangent vectors
        // e_i and d·e_j at a point with z = (0, 1, 3).
        let z = [rat(0, 1), rat(1, 1), rat(3, 1)];
        let form = |i: usize, j: usize, v: &[Rat; 3]| (&v[i] - &v[j]) / (&z[i] - &z[j]);
        let wedge = |p: (usize, usize), q: (usize, usize), u: &[Rat; 3], v: &[Rat; 3]| {
            form(p.0, p.1, u) * form(q.0, q.1, v) - form(q.0, q.1, u) * form(p.0, p.1, v)
        };
        let u = [rat(1, 1), rat(0, 1), rat(0, 1)];
        let v = [rat(0, 1), rat(d, 1), rat(1, 1)];
        let lhs = wedge((0, 1), (0, 2), &u, &v);
        let rhs = wedge((0, 1), (1, 2), &u, &v) - wedge((0, 2), (1, 2), &u, &v);
        prop_assert_eq!(lhs, rhs);
    }
}

// GRT.

fn sigma3(n: u32) -> Series<Rat> {
    let (env, x, y) = free(n);
    let xy = br(&x, &y);
    let s = br(&x, &xy).add(&br(&y, &xy)).unwrap();
    Series::exp_lie(&env, n, &s).unwrap()
}

#[test]
fn grt_identity_passes() {
    let r = check_grt(&GrtElement::identity(4).unwrap()).unwrap();
    assert!(r.is_zero(), "{}", r.render());
}

#[test]
fn weight_three_grt_element_passes() {
    let e = GrtElement::new(rat(1, 1), sigma3(4)).unwrap();
    let r = check_grt(&e).unwrap();
    assert!(r.is_zero(), "{}", r.render());
}

#[test]
fn non_antisymmetric_weight_three_element_fails() {
    let (env, x, y) = free(4);
    let g = Series::exp_lie(&env, 4, &br(&x, &br(&x, &y))).unwrap();
    let r = check_grt(&GrtElement::new(rat(1, 1), g).unwrap()).unwrap();
    assert_eq!(r.equation("duality").unwrap().first_failing_weight(), Some(3));
}

#[test]
fn grt_rescaling_preserves_solutions() {
    let e = GrtElement::new(rat(1, 1), sigma3(4)).unwrap();
    for c in [rat(2, 1), rat(-1, 3)] {
        assert!(check_grt(&e.rescaled(&c).unwrap()).unwrap().is_zero());
    }
    let (env, x, y) = free(4);
    let bad = GrtElement::new(rat(1, 1), Series::exp_lie(&env, 4, &br(&x, &y)).unwrap()).unwrap();
    let before = failing(&check_grt(&bad).unwrap());
    let after = failing(&check_grt(&bad.rescaled(&rat(2, 1)).unwrap()).unwrap());
    assert_eq!(before, after);
}

#[test]
fn grt_group_law_on_random_elements() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let id = GrtElement::identity(4).unwrap();
    let elems: Vec<GrtElement> =
        (0..10).map(|_| GrtElement::new(random_lambda(&mut rng), random_group_like(&mut rng, 4)).unwrap()).collect();
    for k in 0..10 {
        let (a, b, c) = (&elems[k], &elems[(k + 1) % 10], &elems[(k + 3) % 10]);
        assert_eq!(a.mul(b).unwrap().mul(c).unwrap(), a.mul(&b.mul(c).unwrap()).unwrap());
        assert_eq!(id.mul(a).unwrap(), *a);
        assert_eq!(a.mul(&id).unwrap(), *a);
    }
}

#[test]
fn grt_products_of_solutions_are_solutions() {
    let e = GrtElement::new(rat(1, 1), sigma3(4)).unwrap();
    let f = GrtElement::new(rat(3, 1), sigma3(4)).unwrap().rescaled(&rat(-2, 1)).unwrap();
    assert!(check_grt(&e.mul(&f).unwrap()).unwrap().is_zero());
}

#[test]
fn grt_g_identity_passes() {
    for (g, n) in [(1, 3), (2, 2)] {
        let r = check_grtg(&GrtgElement::identity(g, n).unwrap()).unwrap();
        assert!(r.is_zero(), "{}", r.render());
    }
}

#[test]
fn grt_g_unit_law() {
    let id = GrtgElement::identity(1, 3).unwrap();
    let env = Envelope::of(&Family::TFG { g: 1, n: 2 }, 3).unwrap();
    let h = Gens { alphabet: env.quotient().alphabet() };
    let q = env.quotient();
    let plus = vec![q.reduce(&h.add(&h.x(1, 1), &h.br(&h.x(1, 1), &h.y(2, 1)).scale(&rat(1, 2)))).unwrap()];
    let minus = vec![q.reduce(&h.add(&h.y(1, 1), &h.br(&h.y(1, 1), &h.t(1, 2)).scale(&rat(-1, 3)))).unwrap()];
    let base = GrtElement::new(rat(2, 1), sigma3(2)).unwrap();
    let e = GrtgElement::new(base, plus, minus, 3).unwrap();
    let left = id.mul(&e).unwrap();
    let right = e.mul(&id).unwrap();
    assert_eq!(left.plus, e.plus);
    assert_eq!(left.minus, e.minus);
    assert_eq!(right.plus, e.plus);
    assert_eq!(right.base, e.base);
}

#[test]
fn grt_g_perturbed_identity_fails_the_commutator_relation() {
    let id = GrtgElement::identity(1, 2).unwrap();
    let env = Envelope::of(&Family::TFG { g: 1, n: 2 }, 2).unwrap();
    let h = Gens { alphabet: env.quotient().alphabet() };
    let plus = vec![h.x(1, 1).scale(&rat(2, 1))];
    let e = GrtgElement::new(id.base.clone(), plus, id.minus.clone(), 2).unwrap();
    let r = check_grtg(&e).unwrap();
    assert_eq!(r.equation("G3[a=1]").unwrap().first_failing_weight(), Some(2));
}

// GT.

#[test]
fn gt_identity_passes() {
    let r = check_gt(&GtElement::identity(4).unwrap(), assoc4()).unwrap();
    assert!(r.is_zero(), "{}", r.render());
}

#[test]
fn gt_commutator_is_antisymmetric_but_not_a_solution() {
    let (env, x, y) = free(4);
    let ex = Series::exp_lie(&env, 4, &x).unwrap();
    let ey = Series::exp_lie(&env, 4, &y).unwrap();
    let f = ex.path_commutator(&ey).unwrap();
    let r = check_gt(&GtElement::new(rat(1, 1), f).unwrap(), assoc4()).unwrap();
    // (X, Y)^-1 = (Y, X) in every group.
    assert!(r.equation("duality").unwrap().is_zero());
    assert_eq!(r.equation("cycle").unwrap().first_failing_weight(), Some(2));
}

#[test]
fn gt_lambda_only_fails_the_cycle() {
    let (env, _, _) = free(3);
    // nu = 1 reduces the cycle relation to x1 x2 x3 = 1; nu = 2 does not.
    let e = GtElement::new(rat(3, 1), Series::one(&env, 3)).unwrap();
    assert!(check_gt(&e, &assoc4().truncate(3).unwrap()).unwrap().is_zero());
    let e = GtElement::new(rat(5, 1), Series::one(&env, 3)).unwrap();
    let r = check_gt(&e, &assoc4().truncate(3).unwrap()).unwrap();
    assert!(r.equation("duality").unwrap().is_zero());
    assert!(r.equation("pentagon").unwrap().is_zero());
    assert_eq!(r.equation("cycle").unwrap().first_failing_weight(), Some(2));
}

#[test]
fn gt_group_law_on_random_elements() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let id = GtElement::identity(4).unwrap();
    let elems: Vec<GtElement> =
        (0..10).map(|_| GtElement::new(random_lambda(&mut rng), random_group_like(&mut rng, 4)).unwrap()).collect();
    for k in 0..10 {
        let (a, b, c) = (&elems[k], &elems[(k + 2) % 10], &elems[(k + 5) % 10]);
        assert_eq!(a.mul(b).unwrap().mul(c).unwrap(), a.mul(&b.mul(c).unwrap()).unwrap());
        assert_eq!(id.mul(a).unwrap(), *a);
        assert_eq!(a.mul(&id).unwrap(), *a);
    }
}

#[test]
fn gt_law_multiplies_lambdas() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let a = GtElement::new(rat(2, 1), random_group_like(&mut rng, 3)).unwrap();
    let b = GtElement::new(rat(-1, 5), random_group_like(&mut rng, 3)).unwrap();
    assert_eq!(a.mul(&b).unwrap().lambda, rat(-2, 5));
}
