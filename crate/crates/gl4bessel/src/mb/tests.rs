use super::*;
use crate::sampling;
use crate::weyl::{iota_transform, SpectralParams, WeylElement, YPoint};
use crate::{rel_err, Complex64};

fn w(name: &str) -> WeylElement {
    WeylElement::parse(name).unwrap()
}

#[test]
fn kernel_identity_element_is_one() {
    let mut rng = sampling::rng(81);
    let p = sampling::tempered_params(&mut rng);
    let y = YPoint::new(w("4"), [1.0, 1.0, 1.0]).unwrap();
    assert_eq!(kernel_k(&w("4"), &y, &p, 4).unwrap(), Complex64::new(1.0, 0.0));
}

#[test]
fn w31_series_and_contour_agree() {
    let mut rng = sampling::rng(82);
    for _ in 0..2 {
        let p = sampling::tempered_params(&mut rng);
        let el = w("31");
        let cfg = MbConfig::default_for(&el, &p).unwrap();
        for y3 in [-0.05, 0.02] {
            let y = YPoint::from_free(el.clone(), &[y3]).unwrap();
            let series = kernel_k(&el, &y, &p, 16).unwrap();
            let mb = mb_eval(&el, &y, &p, &cfg).unwrap();
            let e = rel_err(series, mb.value);
            assert!(e < 1e-6, "y3 = {y3}: rel {e:e} (mb err {:e})", mb.err);
        }
    }
}

#[test]
fn w22_series_and_contour_agree() {
    let mut rng = sampling::rng(83);
    let p = sampling::tempered_params(&mut rng);
    let el = w("22");
    let cfg = MbConfig::default_for(&el, &p).unwrap();
    for y2 in [0.05, -0.02] {
        let y = YPoint::from_free(el.clone(), &[y2]).unwrap();
        let series = kernel_k(&el, &y, &p, 16).unwrap();
        let mb = mb_eval(&el, &y, &p, &cfg).unwrap();
        let e = rel_err(series, mb.value);
        assert!(e < 1e-6, "y2 = {y2}: rel {e:e}");
    }
}

#[test]
fn w121_series_and_contour_agree() {
    let mut rng = sampling::rng(84);
    let p = sampling::tempered_params(&mut rng);
    let el = w("121");
    let cfg = MbConfig::default_for(&el, &p).unwrap();
    let y = YPoint::from_free(el.clone(), &[0.05, -0.02]).unwrap();
    let series = kernel_k(&el, &y, &p, 16).unwrap();
    let mb = mb_eval(&el, &y, &p, &cfg).unwrap();
    let e = rel_err(series, mb.value);
    assert!(e < 1e-3, "rel {e:e} (mb err {:e})", mb.err);
}

#[test]
fn contour_independence() {
    let mut rng = sampling::rng(85);
    let p = sampling::tempered_params(&mut rng);
    let el = w("31");
    let y = YPoint::from_free(el.clone(), &[-0.04]).unwrap();
    let a = MbConfig::default_for(&el, &p).unwrap();
    let mut b = a.clone();
    b.contours[0].t0 += 1.5;
    b.contours[0].tail_abscissa = -0.35;
    let va = mb_eval(&el, &y, &p, &a).unwrap();
    let vb = mb_eval(&el, &y, &p, &b).unwrap();
    let gap = (va.value - vb.value).norm();
    assert!(
        gap <= 10.0 * (va.err + vb.err) + 1e-9 * va.value.norm(),
        "gap {gap:e} vs errs {:e} {:e}",
        va.err,
        vb.err
    );
}

#[test]
fn w31_real_for_symmetric_parameters() {
    // delta = 0 and the parameter set closed under negation-conjugation:
    // conjugating the kernel permutes the coset sum back onto itself.
    let mu = [
        Complex64::new(0.0, 0.83),
        Complex64::new(0.0, -0.83),
        Complex64::new(0.0, 1.41),
        Complex64::new(0.0, -1.41),
    ];
    let p = SpectralParams::new(mu, [0; 4]).unwrap();
    let el = w("31");
    let cfg = MbConfig::default_for(&el, &p).unwrap();
    let y = YPoint::from_free(el.clone(), &[0.03]).unwrap();
    let v = mb_eval(&el, &y, &p, &cfg).unwrap().value;
    assert!(v.im.abs() <= 1e-8 * v.re.abs().max(1e-30), "K31 = {v}");
}

#[test]
fn w31_parity_split() {
    // Adding the kernel at +-y3 isolates twice the even sign component.
    let mut rng = sampling::rng(87);
    let p = sampling::tempered_params(&mut rng);
    let el = w("31");
    let cfg = MbConfig::default_for(&el, &p).unwrap();
    let y3 = 0.04;
    let plus = YPoint::from_free(el.clone(), &[y3]).unwrap();
    let minus = YPoint::from_free(el.clone(), &[-y3]).unwrap();
    let kp = mb_eval(&el, &plus, &p, &cfg).unwrap().value;
    let km = mb_eval(&el, &minus, &p, &cfg).unwrap().value;
    let even = eval::w31_parity_component(y3, &p, &cfg.contours[0], 0);
    assert!(rel_err(kp + km, 2.0 * even) < 1e-8);
}

#[test]
fn self_dual_symmetry_quick() {
    // Invariance of the (2,2) kernel under the duality transform.
    let mut rng = sampling::rng(88);
    let p = sampling::tempered_params(&mut rng);
    let el = w("22");
    let y = YPoint::from_free(el.clone(), &[0.06]).unwrap();
    let (y2, p2, el2) = iota_transform(&y, &p, &el);
    let a = kernel_k(&el, &y, &p, 12).unwrap();
    let b = kernel_k(&el2, &y2, &p2, 12).unwrap();
    assert!(rel_err(a, b) < 1e-9, "{a} vs {b}");
}

#[test]
fn trace_matches_eval() {
    let mut rng = sampling::rng(89);
    let p = sampling::tempered_params(&mut rng);
    let el = w("31");
    let cfg = MbConfig::default_for(&el, &p).unwrap();
    let y = YPoint::from_free(el.clone(), &[-0.03]).unwrap();
    let text = trace_csv(&el, &y, &p, &cfg).unwrap();
    assert!(text.lines().count() > 100);
    assert!(text.starts_with("re_s,im_s,re_f,im_f,abs_w"));
}
