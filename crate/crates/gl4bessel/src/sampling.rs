//! Seeded random draws shared by the verification suites.
//!
//! Tempered spectral parameters are sampled as `mu = i (t1, t2, t3, -t1-t2-t3)`
//! with `t_i` uniform in [-2, 2], rejecting draws where some difference
//! `mu_i - mu_j` comes within 1e-3 of an integer (for purely imaginary
//! differences this is a distinctness floor).

use crate::weyl::SpectralParams;
use num_complex::Complex64;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// One tempered, distinct-mod-Z spectral parameter with `delta = 0`.
pub fn tempered_mu(rng: &mut impl Rng) -> [Complex64; 4] {
    loop {
        let t1: f64 = rng.gen_range(-2.0..2.0);
        let t2: f64 = rng.gen_range(-2.0..2.0);
        let t3: f64 = rng.gen_range(-2.0..2.0);
        let mu = [
            Complex64::new(0.0, t1),
            Complex64::new(0.0, t2),
            Complex64::new(0.0, t3),
            Complex64::new(0.0, -t1 - t2 - t3),
        ];
        if distinct_mod_z(&mu, 1e-3) {
            return mu;
        }
    }
}

/// Tempered parameters with a random sign vector in {0,1}^4.
pub fn tempered_params(rng: &mut impl Rng) -> SpectralParams {
    let mu = tempered_mu(rng);
    let delta = [
        rng.gen_range(0..2i64),
        rng.gen_range(0..2i64),
        rng.gen_range(0..2i64),
        rng.gen_range(0..2i64),
    ];
    SpectralParams::new(mu, delta).expect("tempered draw sums to zero")
}

/// True when every difference `mu_i - mu_j`, `i != j`, stays `tol` away
/// from the integers.
pub fn distinct_mod_z(mu: &[Complex64; 4], tol: f64) -> bool {
    for i in 0..4 {
        for j in 0..4 {
            if i == j {
                continue;
            }
            let d = mu[i] - mu[j];
            if (d - Complex64::new(d.re.round(), 0.0)).norm() < tol {
                return false;
            }
        }
    }
    true
}

/// A generic complex draw in the disk of radius `r` around `center`.
pub fn disk(rng: &mut impl Rng, center: Complex64, r: f64) -> Complex64 {
    loop {
        let x: f64 = rng.gen_range(-1.0..1.0);
        let y: f64 = rng.gen_range(-1.0..1.0);
        if x * x + y * y <= 1.0 {
            return center + r * Complex64::new(x, y);
        }
    }
}
