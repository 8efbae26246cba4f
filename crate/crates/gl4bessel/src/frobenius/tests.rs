use super::*;
use crate::sampling;
use crate::special::pochhammer;
use crate::weyl::{lambda_w, SpectralParams, WeylElement, YPoint};
use crate::{rel_err, Complex64};
use std::f64::consts::PI;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn w(name: &str) -> WeylElement {
    WeylElement::parse(name).unwrap()
}

#[test]
fn starred_forms_are_one_at_origin() {
    let mut rng = sampling::rng(31);
    let mu = sampling::tempered_mu(&mut rng);
    for form in [Form::A, Form::B, Form::C] {
        let v = star_coefficient(&w("211"), &mu, &[0, 0], form).unwrap();
        assert!(rel_err(v, c(1.0, 0.0)) < 1e-12);
    }
    for form in [Form::A, Form::B, Form::C, Form::D, Form::E, Form::F] {
        let v = star_coefficient(&w("1111"), &mu, &[0, 0, 0], form).unwrap();
        assert!(rel_err(v, c(1.0, 0.0)) < 1e-12);
    }
}

#[test]
fn w31_zeroth_coefficient() {
    let mut rng = sampling::rng(32);
    let mu = sampling::tempered_mu(&mut rng);
    let v = series_coefficient(&w("31"), &mu, &[0], Form::Default).unwrap();
    let mut expect = ((-mu[3]) * (16.0 * PI.powi(4)).ln()).exp();
    for j in 0..3 {
        expect /= crate::special::gamma(c(1.0, 0.0) + mu[j] - mu[3]).unwrap();
    }
    assert!(rel_err(v, expect) < 1e-12);
}

#[test]
fn negative_indices_vanish() {
    let mut rng = sampling::rng(33);
    let mu = sampling::tempered_mu(&mut rng);
    let v = series_coefficient(&w("211"), &mu, &[-1, 2], Form::Default).unwrap();
    assert_eq!(v, c(0.0, 0.0));
}

#[test]
fn w211_form_equality() {
    let mut rng = sampling::rng(34);
    for _ in 0..6 {
        let mu = sampling::tempered_mu(&mut rng);
        for m1 in 0..=4i64 {
            for m2 in 0..=4i64 {
                let a = star_coefficient(&w("211"), &mu, &[m1, m2], Form::A).unwrap();
                let b = star_coefficient(&w("211"), &mu, &[m1, m2], Form::B).unwrap();
                let cc = star_coefficient(&w("211"), &mu, &[m1, m2], Form::C).unwrap();
                assert!(rel_err(a, b) < 1e-8, "a vs b at ({m1},{m2}): {a} {b}");
                assert!(rel_err(a, cc) < 1e-8, "a vs c at ({m1},{m2})");
            }
        }
    }
}

#[test]
fn wl_form_equality_and_oracle() {
    let mut rng = sampling::rng(35);
    for _ in 0..3 {
        let mu = sampling::tempered_mu(&mut rng);
        let oracle = oracle_wl(&mu, 3).unwrap();
        for m1 in 0..=3i64 {
            for m2 in 0..=3i64 {
                for m3 in 0..=3i64 {
                    let a = star_coefficient(&w("1111"), &mu, &[m1, m2, m3], Form::A).unwrap();
                    for form in [Form::B, Form::C, Form::D, Form::E, Form::F] {
                        let v = star_coefficient(&w("1111"), &mu, &[m1, m2, m3], form).unwrap();
                        assert!(
                            rel_err(a, v) < 1e-8,
                            "form {form:?} at ({m1},{m2},{m3}): {a} vs {v}"
                        );
                    }
                    let g = oracle.get(&[m1, m2, m3]);
                    assert!(rel_err(a, g) < 1e-8, "oracle at ({m1},{m2},{m3})");
                }
            }
        }
    }
}

#[test]
fn oracle_first_step() {
    let mut rng = sampling::rng(36);
    let mu = sampling::tempered_mu(&mut rng);
    let oracle = oracle_wl(&mu, 2).unwrap();
    assert!(rel_err(oracle.get(&[0, 0, 0]), c(1.0, 0.0)) < 1e-15);
    let expect = 1.0 / (c(1.0, 0.0) + mu[0] - mu[1]);
    assert!(rel_err(oracle.get(&[1, 0, 0]), expect) < 1e-13);
}

#[test]
fn r_nk_matches_long_element_denominator() {
    let mut rng = sampling::rng(37);
    let mu = sampling::tempered_mu(&mut rng);
    for m in [[1i64, 0, 0], [2, 1, 1], [3, 2, 4]] {
        let via_rnk = r_nk(4, &m, &mu);
        let (f1, f2, f3) = (m[0] as f64, m[1] as f64, m[2] as f64);
        let direct = c(
            f1 * f1 + f2 * f2 + f3 * f3 - f1 * f2 - f2 * f3,
            0.0,
        ) + f1 * (mu[0] - mu[1])
            + f2 * (mu[1] - mu[2])
            + f3 * (mu[2] - mu[3]);
        assert!((via_rnk - direct).norm() < 1e-12);
    }
}

#[test]
fn recurrence_residuals_small() {
    let mut rng = sampling::rng(38);
    let mu = sampling::tempered_mu(&mut rng);
    for m in 1..=8i64 {
        assert!(recurrence_residual(RecurrenceFamily::W31, &mu, &[m]).unwrap() < 1e-10);
        assert!(recurrence_residual(RecurrenceFamily::W22, &mu, &[m]).unwrap() < 1e-10);
    }
    for m1 in 0..=4i64 {
        for m2 in 0..=4i64 {
            for fam in [
                RecurrenceFamily::W121First,
                RecurrenceFamily::W121Second,
                RecurrenceFamily::W211First,
                RecurrenceFamily::W211Second,
            ] {
                let r = recurrence_residual(fam, &mu, &[m1, m2]).unwrap();
                assert!(r < 1e-9, "{} at ({m1},{m2}): {r:e}", fam.name());
            }
        }
    }
    let r = recurrence_residual(RecurrenceFamily::Wl, &mu, &[2, 1, 1]).unwrap();
    assert!(r < 1e-9);
}

#[test]
fn display_and_starred_forms_agree_through_lambda() {
    // Default (y-variable) coefficients equal the starred ones divided by
    // Lambda_w, up to the printed power prefactors.
    let mut rng = sampling::rng(39);
    let mu = sampling::tempered_mu(&mut rng);
    let l211 = lambda_w(&mu, &w("211")).unwrap();
    for (m1, m2) in [(0i64, 0i64), (1, 2), (3, 1)] {
        let display = series_coefficient(&w("211"), &mu, &[m1, m2], Form::Default).unwrap();
        let starred = star_coefficient(&w("211"), &mu, &[m1, m2], Form::A).unwrap();
        let pref = Complex64::new(0.0, 8.0 * PI.powi(3)).powu(m1 as u32)
            * (4.0 * PI * PI).powi(m2 as i32);
        assert!(
            rel_err(display, pref * starred / l211) < 1e-10,
            "(2,1,1) display vs starred at ({m1},{m2})"
        );
    }
    let lwl = lambda_w(&mu, &w("1111")).unwrap();
    for (m1, m2, m3) in [(0i64, 0i64, 0i64), (2, 1, 0), (1, 2, 2)] {
        let display =
            series_coefficient(&w("1111"), &mu, &[m1, m2, m3], Form::Default).unwrap();
        let starred = star_coefficient(&w("1111"), &mu, &[m1, m2, m3], Form::A).unwrap();
        let pref = (4.0 * PI * PI).powi((m1 + m2 + m3) as i32);
        assert!(
            rel_err(display, pref * starred / lwl) < 1e-10,
            "long display vs starred at ({m1},{m2},{m3})"
        );
    }
}

#[test]
fn j_series_identity_element() {
    let mut rng = sampling::rng(40);
    let p = sampling::tempered_params(&mut rng);
    let y = YPoint::new(w("4"), [1.0, 1.0, 1.0]).unwrap();
    let v = j_series(&w("4"), &y, &p, 8).unwrap();
    assert_eq!(v.value, c(1.0, 0.0));
}

#[test]
fn j_series_leading_term_limit() {
    let mut rng = sampling::rng(41);
    let mu = sampling::tempered_mu(&mut rng);
    let p = SpectralParams::new(mu, [0; 4]).unwrap();
    let y3 = 1e-6;
    let y = YPoint::from_free(w("31"), &[y3]).unwrap();
    let v = j_series(&w("31"), &y, &p, 6).unwrap().value;
    let head = ((c(1.5, 0.0) - mu[3]) * y3.ln()).exp();
    let a0 = series_coefficient(&w("31"), &mu, &[0], Form::Default).unwrap();
    assert!(rel_err(v / head, a0) < 1e-3);
}

#[test]
fn j_series_truncation_consistency() {
    // The shells at order ~10 sit near 1e-9 x value for |y| = 0.1 (the
    // gamma denominators with imaginary offsets lose a couple of digits),
    // so the 1e-10 agreement window starts two orders higher.
    let mu = [
        Complex64::new(0.0, 0.35),
        Complex64::new(0.0, -0.2),
        Complex64::new(0.0, 0.45),
        Complex64::new(0.0, -0.6),
    ];
    let p = SpectralParams::new(mu, [1, 0, 0, 1]).unwrap();
    let y = YPoint::new(w("211"), [1.0, 0.1, 0.1]).unwrap();
    let lo = j_series(&w("211"), &y, &p, 14).unwrap().value;
    let hi = j_series(&w("211"), &y, &p, 18).unwrap().value;
    assert!(rel_err(lo, hi) < 1e-10, "order 14 vs 18: {:e}", rel_err(lo, hi));
    let coarse = j_series(&w("211"), &y, &p, 10).unwrap().value;
    assert!(rel_err(coarse, hi) < 1e-6);
}

#[test]
fn j_series_conjugation_symmetry_w31() {
    // Tempered mu has conj(mu) = -mu; the coefficients are real functions,
    // so conj J(y, mu, delta) = J(y, -mu, delta) for real y.
    let mut rng = sampling::rng(43);
    let mu = sampling::tempered_mu(&mut rng);
    let delta = [1, 0, 1, 0];
    let p = SpectralParams::new(mu, delta).unwrap();
    let n = SpectralParams::new(mu.map(|z| -z), delta).unwrap();
    for y3 in [0.21, -0.33] {
        let y = YPoint::from_free(w("31"), &[y3]).unwrap();
        let a = j_series(&w("31"), &y, &p, 12).unwrap().value;
        let b = j_series(&w("31"), &y, &n, 12).unwrap().value;
        assert!(rel_err(a.conj(), b) < 1e-11);
    }
}

#[test]
fn csv_dump_has_full_lattice() {
    let mut rng = sampling::rng(44);
    let mu = sampling::tempered_mu(&mut rng);
    let text = coefficient_csv(&w("121"), &mu, 3).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "m1,m2,re,im");
    assert_eq!(lines.len(), 1 + 16);
}

#[test]
fn degenerate_parameters_rejected() {
    let mu = [c(0.0, 0.5), c(0.0, 0.5), c(0.0, -0.3), c(0.0, -0.7)];
    assert!(matches!(
        series_coefficient(&w("31"), &mu, &[1], Form::Default),
        Err(FrobeniusError::DegenerateParameters)
    ));
}

#[test]
fn pochhammer_identity_for_m2_shift() {
    // The (1,2,1) coefficient uses Gamma(1 + a + m1 + m2); check the ratio
    // identity <1+a+m1>_(m2) = Gamma(1+a+m1+m2)/Gamma(1+a+m1) the closed
    // forms rely on.
    let a = c(0.3, -0.8);
    let g1 = crate::special::gamma(c(1.0, 0.0) + a + 5.0).unwrap();
    let g2 = crate::special::gamma(c(1.0, 0.0) + a + 2.0).unwrap();
    assert!(rel_err(g1 / g2, pochhammer(c(1.0, 0.0) + a + 2.0, 3)) < 1e-12);
}
