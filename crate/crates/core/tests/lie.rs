#[path = "support/oracle.rs"]
mod oracle;

use assoc_core::lie::{algebra, c3, check_hom, free_graded_dim, necklace_dim, Alphabet, Family, Gens, LiePoly};
use assoc_core::{rat, Rat};
use proptest::prelude::*;
use std::sync::Arc;

fn dims(f: Family, max: u32) -> Vec<usize> {
    algebra(&f, max).unwrap().dims(max).unwrap()
}

#[test]
fn t_n_dims_match_oracle() {
    for n in 2..=4 {
        assert_eq!(dims(Family::T { n }, 4), oracle::chord_algebra(n, false, 0).dims(4), "t_{n}");
    }
}

#[test]
fn framed_dims_match_oracle() {
    for n in 2..=3 {
        assert_eq!(dims(Family::TF { n }, 4), oracle::chord_algebra(n, true, 0).dims(4), "t^f_{n}");
    }
}

#[test]
fn genus_one_dims_match_oracle() {
    for n in 1..=2 {
        assert_eq!(dims(Family::TG { g: 1, n }, 4), oracle::chord_algebra(n, false, 1).dims(4), "t_1,{n}");
        assert_eq!(dims(Family::TFG { g: 1, n }, 4), oracle::chord_algebra(n, true, 1).dims(4), "t^f_1,{n}");
    }
}

#[test]
fn oracle_reproduces_free_lie_algebra() {
    for k in 2..=3 {
        let d = oracle::free(k).dims(4);
        let expected: Vec<usize> = (1..=4).map(|w| necklace_dim(k as u64, w) as usize).collect();
        assert_eq!(d, expected);
    }
}

#[test]
fn t3_is_free_plus_central_line() {
    let d = dims(Family::T { n: 3 }, 4);
    assert_eq!(d, vec![3, 1, 2, 3]);
    // f_2 in weights 1..4 has dims 2, 1, 2, 3; c_3 adds one in weight 1.
    let f2: Vec<usize> = (1..=4).map(|w| necklace_dim(2, w) as usize).collect();
    let expected: Vec<usize> = f2.iter().enumerate().map(|(i, x)| x + usize::from(i == 0)).collect();
    assert_eq!(d, expected);
}

#[test]
fn small_framed_and_genus_tables() {
    assert_eq!(dims(Family::TF { n: 2 }, 4), vec![3, 0, 0, 0]);
    assert_eq!(dims(Family::TG { g: 1, n: 1 }, 4), vec![2, 0, 0, 0]);
}

#[test]
fn framed_decomposition() {
    for n in 1..=3 {
        let f = dims(Family::TF { n }, 4);
        let u = dims(Family::T { n }, 4);
        assert_eq!(f[0], n + n * (n - 1) / 2);
        assert_eq!(&f[1..], &u[1..], "n = {n}");
    }
}

#[test]
fn necklace_examples() {
    assert_eq!((1..=6).map(|d| necklace_dim(2, d)).collect::<Vec<_>>(), vec![2, 1, 2, 3, 6, 9]);
    assert_eq!((1..=4).map(|d| necklace_dim(3, d)).collect::<Vec<_>>(), vec![3, 3, 8, 18]);
    for d in 1..=7 {
        assert_eq!(free_graded_dim(&[1, 1], d) as u64, necklace_dim(2, d));
    }
}

#[test]
fn mixed_weight_free_dims() {
    // Generators of weights 1 and 2: Lyndon words counted by hand.
    assert_eq!(free_graded_dim(&[1, 2], 1), 1);
    assert_eq!(free_graded_dim(&[1, 2], 2), 1);
    assert_eq!(free_graded_dim(&[1, 2], 3), 1);
    assert_eq!(free_graded_dim(&[1, 2], 4), 1);
    assert_eq!(free_graded_dim(&[1, 2], 5), 2);
}

#[test]
fn c3_is_central_through_weight_five() {
    let q = algebra(&Family::T { n: 3 }, 5).unwrap();
    assert!(q.is_central(&c3(&q), 5).unwrap());
    let t12 = q.gen::<Rat>("t12");
    assert!(!q.is_central(&t12, 3).unwrap());
}

#[test]
fn framing_chords_are_central() {
    let q = algebra(&Family::TF { n: 3 }, 4).unwrap();
    for i in 1..=3 {
        assert!(q.is_central(&q.gen::<Rat>(&format!("t{i}{i}")), 4).unwrap());
    }
    let q = algebra(&Family::TF { n: 2 }, 3).unwrap();
    assert!(q.is_central(&q.gen::<Rat>("t11"), 3).unwrap());
}

#[test]
fn reduce_applies_framed_genus_relation() {
    // In t^f_{1,1}: [x1, y1] = 0 since the framing term has coefficient 2(g-1) = 0.
    let q = algebra(&Family::TFG { g: 1, n: 1 }, 3).unwrap();
    let x = q.gen::<Rat>("x1");
    let y = q.gen::<Rat>("y1");
    assert!(q.reduce(&x.bracket(&y).unwrap()).unwrap().is_zero());
    // In t_{1,2}: [x1, y2] = t12 and [x1, y1] = -t12.
    let q = algebra(&Family::TG { g: 1, n: 2 }, 3).unwrap();
    let h = Gens { alphabet: q.alphabet() };
    let lhs = q.reduce(&h.br(&h.x(1, 1), &h.y(2, 1))).unwrap();
    assert_eq!(lhs, q.reduce(&h.t(1, 2)).unwrap());
    let lhs = q.reduce(&h.br(&h.x(1, 1), &h.y(1, 1))).unwrap();
    assert_eq!(lhs, q.reduce(&h.t(1, 2).neg()).unwrap());
}

#[test]
fn reduce_is_idempotent_and_linear() {
    let q = algebra(&Family::T { n: 4 }, 4).unwrap();
    let h = Gens { alphabet: q.alphabet() };
    let a = h.br(&h.t(1, 2), &h.br(&h.t(1, 3), &h.t(2, 4)));
    let b = h.br(&h.t(3, 4), &h.br(&h.t(1, 4), &h.t(2, 3)));
    let ra = q.reduce(&a).unwrap();
    assert_eq!(q.reduce(&ra).unwrap(), ra);
    let s = a.scale(&rat(3, 2)).add(&b.scale(&rat(-5, 1))).unwrap();
    let rs = ra.scale(&rat(3, 2)).add(&q.reduce(&b).unwrap().scale(&rat(-5, 1))).unwrap();
    assert_eq!(q.reduce(&s).unwrap(), rs);
}

#[test]
fn relations_reduce_to_zero() {
    for f in [Family::T { n: 4 }, Family::TF { n: 3 }, Family::TG { g: 1, n: 2 }, Family::TFG { g: 2, n: 1 }] {
        let q = algebra(&f, 4).unwrap();
        for r in q.relations() {
            assert!(q.reduce(&r.truncate(4)).unwrap().is_zero(), "{f}");
        }
    }
}

#[test]
fn framed_to_unframed_projection_is_a_morphism() {
    let src = algebra(&Family::TF { n: 3 }, 4).unwrap();
    let tgt = algebra(&Family::T { n: 3 }, 4).unwrap();
    let images: Vec<LiePoly<Rat>> = src
        .alphabet()
        .generators()
        .iter()
        .map(|g| match tgt.alphabet().letter_by_name(&g.name) {
            Some(l) => LiePoly::generator(tgt.alphabet(), l),
            None => LiePoly::zero(tgt.alphabet()),
        })
        .collect();
    assert!(check_hom(&src, &tgt, images, 4).unwrap());
}

#[test]
fn genus_one_to_reduced_is_a_morphism() {
    let src = algebra(&Family::TG { g: 1, n: 2 }, 4).unwrap();
    let tgt = algebra(&Family::T1Bar { n: 2 }, 4).unwrap();
    let images: Vec<LiePoly<Rat>> = src.alphabet().generators().iter().map(|g| tgt.gen::<Rat>(&g.name)).collect();
    assert!(check_hom(&src, &tgt, images, 4).unwrap());
}

#[test]
fn free_algebra_maps_anywhere() {
    let src = algebra(&Family::FreeF2, 4).unwrap();
    let tgt = algebra(&Family::T { n: 3 }, 4).unwrap();
    let images = vec![tgt.gen::<Rat>("t12"), tgt.gen::<Rat>("t23")];
    assert!(check_hom(&src, &tgt, images, 4).unwrap());
}

#[test]
fn non_morphism_is_detected() {
    // t_3 -> f_2 sending t12 -> x, t13 -> y, t23 -> x breaks the four-term relation.
    let src = algebra(&Family::T { n: 3 }, 3).unwrap();
    let tgt = algebra(&Family::FreeF2, 3).unwrap();
    let images = vec![tgt.gen::<Rat>("x"), tgt.gen::<Rat>("y"), tgt.gen::<Rat>("x")];
    assert!(!check_hom(&src, &tgt, images, 3).unwrap());
}

#[test]
fn basis_serialization_is_deterministic() {
    let a = algebra(&Family::T { n: 4 }, 4).unwrap();
    let b = algebra(&Family::T { n: 4 }, 4).unwrap();
    let render = |q: &assoc_core::lie::GradedQuotient| {
        q.basis().iter().map(|w| q.alphabet().render_word(w)).collect::<Vec<_>>().join("\n")
    };
    assert_eq!(render(&a), render(&b));
    assert_eq!(a.basis_len(), a.dims(4).unwrap().iter().sum::<usize>());
}

#[test]
fn serialize_parse_round_trip() {
    let alpha = Arc::new(Alphabet::free(&["x", "y"]));
    let x = LiePoly::<Rat>::generator(&alpha, 0);
    let y = LiePoly::<Rat>::generator(&alpha, 1);
    let p = x.bracket(&x.bracket(&y).unwrap()).unwrap().scale(&rat(-2, 7)).add(&y).unwrap();
    assert_eq!(LiePoly::parse(&alpha, &p.serialize()).unwrap(), p);
}

fn small_rat() -> impl Strategy<Value = Rat> {
    (-4i64..=4, 1i64..=3).prop_map(|(p, q)| rat(p, q))
}

/// Random Lie polynomial on x, y of weight at most 3.
fn lie_poly() -> impl Strategy<Value = LiePoly<Rat>> {
    proptest::collection::vec(small_rat(), 5).prop_map(|c| {
        let alpha = Arc::new(Alphabet::free(&["x", "y"]));
        let x = LiePoly::<Rat>::generator(&alpha, 0);
        let y = LiePoly::<Rat>::generator(&alpha, 1);
        let xy = x.bracket(&y).unwrap();
        let basis = [x.clone(), y.clone(), xy.clone(), x.bracket(&xy).unwrap(), y.bracket(&xy).unwrap()];
        let mut out = LiePoly::zero(&alpha);
        for (b, k) in basis.iter().zip(&c) {
            out = out.add(&b.scale(k)).unwrap();
        }
        out
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn bracket_is_antisymmetric(a in lie_poly(), b in lie_poly()) {
        prop_assert_eq!(a.bracket(&b).unwrap(), b.bracket(&a).unwrap().neg());
    }

    #[test]
    fn bracket_satisfies_jacobi(a in lie_poly(), b in lie_poly(), c in lie_poly()) {
        let j1 = a.bracket(&b.bracket(&c).unwrap()).unwrap();
        let j2 = b.bracket(&c.bracket(&a).unwrap()).unwrap();
        let j3 = c.bracket(&a.bracket(&b).unwrap()).unwrap();
        prop_assert!(j1.add(&j2).unwrap().add(&j3).unwrap().is_zero());
    }

    #[test]
    fn bracket_is_bilinear(a in lie_poly(), b in lie_poly(), c in lie_poly(), k in small_rat()) {
        let lhs = a.scale(&k).add(&b).unwrap().bracket(&c).unwrap();
        let rhs = a.bracket(&c).unwrap().scale(&k).add(&b.bracket(&c).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn bracket_matches_commutator_of_words(a in lie_poly(), b in lie_poly()) {
        // Expand both sides to associative words and compare with ab - ba.
        let (wa, wb) = (a.to_words(), b.to_words());
        let mut expected: std::collections::BTreeMap<Vec<u8>, Rat> = Default::default();
        for (u, x) in &wa {
            for (v, y) in &wb {
                let mut uv = u.clone();
                uv.extend(v);
                *expected.entry(uv).or_insert_with(|| rat(0, 1)) += x.clone() * y.clone();
                let mut vu = v.clone();
                vu.extend(u);
                *expected.entry(vu).or_insert_with(|| rat(0, 1)) -= x.clone() * y.clone();
            }
        }
        expected.retain(|_, c| *c != rat(0, 1));
        prop_assert_eq!(a.bracket(&b).unwrap().to_words(), expected);
    }
}
