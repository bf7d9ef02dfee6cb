use assoc_core::cabling::{cable, cable_defects, compose_assoc_check, superscript, StrandAssignment};
use assoc_core::lie::{algebra, Family, Gens, LiePoly};
use assoc_core::{rat, Envelope, Rat, Series};
use proptest::prelude::*;

fn t(n: usize) -> Family {
    Family::T { n }
}

fn tf(n: usize) -> Family {
    Family::TF { n }
}

#[test]
fn doubling_first_strand_of_t12() {
    let q3 = algebra(&t(3), 3).unwrap();
    let q4 = algebra(&t(4), 3).unwrap();
    let a = StrandAssignment::parse("12,3,4", None).unwrap();
    let img = cable(&Gens { alphabet: q3.alphabet() }.t(1, 2), &t(3), &t(4), 3, &a).unwrap();
    let h = Gens { alphabet: q4.alphabet() };
    assert_eq!(img, h.add(&h.t(1, 3), &h.t(2, 3)));
}

#[test]
fn erasing_a_strand_kills_its_handles() {
    let fam = Family::TFG { g: 1, n: 2 };
    let q = algebra(&fam, 3).unwrap();
    let a = StrandAssignment::parse("0,1", None).unwrap();
    let h = Gens { alphabet: q.alphabet() };
    let img = cable(&h.x(1, 1), &fam, &fam.with_n(1), 3, &a).unwrap();
    assert!(img.is_zero());
    let img = cable(&h.x(2, 1), &fam, &fam.with_n(1), 3, &a).unwrap();
    let q1 = algebra(&fam.with_n(1), 3).unwrap();
    let h1 = Gens { alphabet: q1.alphabet() };
    assert_eq!(img, h1.x(1, 1));
}

#[test]
fn doubling_a_framing_chord() {
    // Cross term with coefficient one, as required by the framing relation.
    let q = algebra(&tf(1), 2).unwrap();
    let a = StrandAssignment::parse("12", None).unwrap();
    let img = cable(&Gens { alphabet: q.alphabet() }.t(1, 1), &tf(1), &tf(2), 2, &a).unwrap();
    let q2 = algebra(&tf(2), 2).unwrap();
    let h = Gens { alphabet: q2.alphabet() };
    let expect = h.add(&h.add(&h.t(1, 1), &h.t(2, 2)), &h.t(1, 2));
    assert_eq!(img, expect);
}

#[test]
fn superscript_examples() {
    let env2 = Envelope::of(&t(2), 3).unwrap();
    let q2 = env2.quotient().clone();
    let e12 = Series::exp_lie(&env2, 3, &Gens { alphabet: q2.alphabet() }.t(1, 2)).unwrap();
    assert_eq!(superscript(&e12, "2,1", &env2).unwrap(), e12);

    let env3 = Envelope::of(&t(3), 3).unwrap();
    let h3 = Gens { alphabet: env3.quotient().alphabet() };
    let lhs = superscript(&e12, "1,23", &env3).unwrap();
    let rhs = Series::exp_lie(&env3, 3, &h3.add(&h3.t(1, 2), &h3.t(1, 3))).unwrap();
    assert_eq!(lhs, rhs);

    // A group-like whose log lies in the commutator ideal (as for any
    // associator) erases to 1 on "1,2,0".
    let ef = Envelope::of(&Family::FreeF2, 3).unwrap();
    let qf = ef.quotient().clone();
    let x: LiePoly<Rat> = qf.gen("x");
    let y: LiePoly<Rat> = qf.gen("y");
    let xy = qf.bracket(&x, &y).unwrap();
    let z = xy.scale_rat(&rat(1, 24)).add(&qf.bracket(&x, &xy).unwrap()).unwrap();
    let phi = Series::exp_lie(&ef, 3, &z).unwrap();
    let e2 = Envelope::of(&t(2), 3).unwrap();
    assert_eq!(superscript(&phi, "1,2,0", &e2).unwrap(), Series::one(&e2, 3));
}

#[test]
fn cabling_is_well_defined_genus_zero() {
    let n = 4;
    for (src, tgt) in [(t(2), t(3)), (t(3), t(4)), (tf(2), tf(3)), (tf(3), tf(4)), (t(3), tf(4))] {
        let m = tgt.n();
        let k = src.n();
        for i in 1..=k {
            let (l, _) = StrandAssignment::partial(k, i, m - k + 1).unwrap();
            let d = cable_defects(&src, &tgt, n, &l).unwrap();
            assert!(d.is_empty(), "{src} -> {tgt} via {l}: {d:?}");
        }
        let e = StrandAssignment::erase(k, &[1]).unwrap();
        assert!(cable_defects(&src, &src.with_n(k - 1), n, &e).unwrap().is_empty());
    }
}

#[test]
fn cabling_is_well_defined_genus_one() {
    for fam in [Family::TG { g: 1, n: 2 }, Family::TFG { g: 1, n: 2 }] {
        for pattern in ["12,3", "1,23", "13,2", "3,12"] {
            let a = StrandAssignment::parse(pattern, None).unwrap();
            if a.source() != 2 {
                continue;
            }
            let d = cable_defects(&fam, &fam.with_n(3), 4, &a).unwrap();
            assert!(d.is_empty(), "{fam} via {a}: {d:?}");
        }
        let e = StrandAssignment::parse("0,1", None).unwrap();
        assert!(cable_defects(&fam, &fam.with_n(1), 4, &e).unwrap().is_empty());
    }
}

#[test]
fn framed_genus_two_doubling_defect() {
    // Doubling the relation for sum [x_1^a, y_1^a] leaves 4(g-1) t12 when g = 2.
    let fam = Family::TFG { g: 2, n: 1 };
    let a = StrandAssignment::parse("12", None).unwrap();
    let d = cable_defects(&fam, &fam.with_n(2), 2, &a).unwrap();
    assert_eq!(d.len(), 1);
    let q2 = algebra(&fam.with_n(2), 2).unwrap();
    let h = Gens { alphabet: q2.alphabet() };
    assert_eq!(d[0], q2.reduce(&h.t(1, 2).scale_rat(&rat(4, 1))).unwrap());
}

#[test]
fn operad_axioms() {
    assert!(compose_assoc_check(&t(1), &[2, 2, 2], 1).unwrap());
    assert!(compose_assoc_check(&tf(1), &[2, 2, 2], 2).unwrap());
    assert!(compose_assoc_check(&Family::TFG { g: 1, n: 1 }, &[2, 2], 2).unwrap());
    assert!(compose_assoc_check(&t(1), &[3, 2, 2], 2).unwrap());
}

fn small_t3_element() -> impl Strategy<Value = Vec<(usize, i64)>> {
    prop::collection::vec((0usize..6, -3i64..=3), 1..5)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn cable_is_a_lie_morphism(a in small_t3_element(), b in small_t3_element()) {
        let q = algebra(&t(3), 4).unwrap();
        let build = |v: &Vec<(usize, i64)>| {
            let mut p = LiePoly::zero(q.alphabet());
            for (id, c) in v {
                let id = (*id as u32) % q.dim(1).unwrap().max(1) as u32;
                let id2 = (id + 3) % q.basis_len() as u32;
                p = p.add(&q.basis_element::<Rat>(id).scale_rat(&rat(*c, 1))).unwrap();
                p = p.add(&q.basis_element::<Rat>(id2)).unwrap();
            }
            p.truncate(2)
        };
        let (pa, pb) = (build(&a), build(&b));
        let asg = StrandAssignment::parse("1,23,4", None).unwrap();
        let lhs = cable(&q.bracket(&pa, &pb).unwrap(), &t(3), &t(4), 4, &asg).unwrap();
        let ca = cable(&pa, &t(3), &t(4), 4, &asg).unwrap();
        let cb = cable(&pb, &t(3), &t(4), 4, &asg).unwrap();
        let rhs = algebra(&t(4), 4).unwrap().bracket(&ca, &cb).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}
