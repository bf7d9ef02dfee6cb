use assoc_core::equations::{associator_residuals, AssociatorCandidate, EquationResidual};
use assoc_core::kz::*;
use assoc_core::lie::Family;
use assoc_core::{CFixed, Envelope, Fixed, Scalar};
use num_complex::Complex;
use num_traits::{One, Zero};

fn zeta3() -> f64 {
    // Partial sum plus the Euler-Maclaurin tail 1/(2M^2) - 1/(2M^3) + 1/(4M^4).
    let m = 2000u32;
    let s: f64 = (1..m).map(|k| 1.0 / (k as f64).powi(3)).sum();
    let mf = m as f64;
    s + 1.0 / (2.0 * mf * mf) + 1.0 / (2.0 * mf.powi(3)) + 1.0 / (4.0 * mf.powi(4))
}

#[test]
fn criterion_shaped_run_passes() {
    let r = kz_transport(4, 256, 1e-8).unwrap();
    assert!(r.passes(), "{}", r.render());
    assert_eq!(r.coefficients[0].0, "1");
    assert_eq!(r.coefficients.len(), 31);
}

#[test]
fn weight_two_log_coefficient_is_minus_zeta_two() {
    let r = kz_transport(2, 128, 1e-8).unwrap();
    let z2 = std::f64::consts::PI.powi(2) / 6.0;
    assert!((r.log_xy.0 + z2).abs() < 1e-14);
    assert!(r.log_xy.1.abs() < 1e-14);
}

#[test]
fn weight_three_log_coefficients_are_zeta_three() {
    let phi = kz_associator::<128>(3).unwrap();
    let env = Envelope::of(&Family::FreeF2, 3).unwrap();
    let log = phi.to_series(&env).unwrap().log().unwrap();
    let z3 = zeta3();
    for w in [[0u8, 0, 1], [0, 1, 1]] {
        let c = log.coeff(&w);
        assert!((c.re.to_f64().abs() - z3).abs() < 1e-12, "{w:?}: {}", c.re.to_f64());
        assert!(c.im.to_f64().abs() < 1e-30);
    }
}

#[test]
fn hexagon_fails_for_a_real_coupling() {
    let phi = kz_associator::<128>(3).unwrap();
    let env = Envelope::of(&Family::FreeF2, 3).unwrap();
    let mu: CFixed<128> = Complex::new(Fixed::<128>::pi().scale_pow2(1), Fixed::zero());
    let cand = AssociatorCandidate::new(mu, phi.to_series(&env).unwrap()).unwrap();
    let res = associator_residuals(&cand).unwrap();
    let hex = res.iter().find(|(n, _)| n == "hexagon").unwrap();
    let r = EquationResidual::from_difference("hexagon", &hex.1);
    assert_eq!(r.first_failing_weight(), Some(2));
}

#[test]
fn trivial_series_fails_the_hexagon_at_two_pi_i() {
    let one = FloatSeries::<128>::one(&["x", "y"], 2);
    let cand = numeric_candidate(&one).unwrap();
    let res = associator_residuals(&cand).unwrap();
    let hex = EquationResidual::from_difference("hexagon", &res[1].1);
    assert_eq!(hex.first_failing_weight(), Some(2));
}

#[test]
fn doubling_precision_changes_little() {
    let a = kz_associator::<128>(4).unwrap();
    let b = kz_associator::<256>(4).unwrap();
    let d = precision_distance(&a, &b);
    assert!(d < 10f64.powf(-32.0), "{d:e}");
}

#[test]
fn too_few_terms_are_detected_by_doubling() {
    let a = kz_associator_with_terms::<128>(3, 20);
    let b = kz_associator::<256>(3).unwrap();
    assert!(precision_distance(&a, &b) > 10f64.powf(-32.0));
}

#[test]
fn numeric_associator_is_group_like() {
    let phi = kz_associator::<128>(4).unwrap();
    assert!(numeric_candidate(&phi).unwrap().phi.is_group_like());
    assert_eq!(phi.coeff(&[]), CFixed::<128>::one());
}

#[test]
fn framed_monodromies_agree() {
    let m = framed_loop_monodromy::<256>(4, 256).unwrap();
    assert!(m.framing_error < 1e-8);
    assert!(m.sigma_squared_error < 1e-8);
    assert!(m.zero_loop_error < 1e-8);
    assert!(m.exact.starts_with("1 1.0"));
    // exp(2 pi i t) has t-coefficient 2 pi i.
    let line = m.exact.lines().nth(1).unwrap();
    let im: f64 = line.split_whitespace().nth(2).unwrap().parse().unwrap();
    assert!((im - 2.0 * std::f64::consts::PI).abs() < 1e-12);
}

#[test]
fn rendered_lines_have_three_fields() {
    let phi = kz_associator::<128>(2).unwrap();
    let text = phi.render(10);
    assert_eq!(text.lines().count(), 7);
    assert!(text.lines().all(|l| l.split_whitespace().count() == 3));
    assert!(phi.coeff(&[0, 1]).magnitude() > 1.0);
}
