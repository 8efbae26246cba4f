use gl4bessel::mb::{kernel_k, mb_eval, MbConfig};
use gl4bessel::sampling;
use gl4bessel::weyl::{iota_transform, SpectralParams, WeylElement, YPoint};
use gl4bessel::Complex64;

fn main() {
    // (1) w121 MB vs series: ratio pattern over delta choices.
    let mut rng = sampling::rng(84);
    let p0 = sampling::tempered_params(&mut rng);
    println!("draw delta = {:?}", p0.delta);
    let el = WeylElement::parse("121").unwrap();
    for delta in [[0i64, 0, 0, 0], [1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], p0.delta] {
        let p = SpectralParams::new(p0.mu, delta).unwrap();
        let cfg = MbConfig::default_for(&el, &p).unwrap();
        let y = YPoint::from_free(el.clone(), &[0.05, -0.02]).unwrap();
        let series = kernel_k(&el, &y, &p, 16).unwrap();
        let mb = mb_eval(&el, &y, &p, &cfg).unwrap();
        let ratio = mb.value / series;
        println!("delta {:?}: ratio = {:.6} + {:.6}i  (mb err {:.1e})", delta, ratio.re, ratio.im, mb.err);
    }
    // (2) w22 self-duality: ratio over deltas.
    let el22 = WeylElement::parse("22").unwrap();
    for delta in [[0i64, 0, 0, 0], [1, 0, 0, 0], [1, 1, 0, 0], [1, 0, 1, 0], [0, 1, 1, 1]] {
        let p = SpectralParams::new(p0.mu, delta).unwrap();
        let y = YPoint::from_free(el22.clone(), &[0.06]).unwrap();
        let (y2, p2, el2) = iota_transform(&y, &p, &el22);
        let a = kernel_k(&el22, &y, &p, 12).unwrap();
        let b = kernel_k(&el2, &y2, &p2, 12).unwrap();
        println!("w22 delta {:?}: ratio = {:.8} + {:.8}i", delta, (a / b).re, (a / b).im);
    }
    let _ = Complex64::new(0.0, 0.0);
}
