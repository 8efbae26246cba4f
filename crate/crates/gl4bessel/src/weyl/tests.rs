use super::*;
use crate::rel_err;
use crate::sampling;
use num_complex::Complex64;
use rand::Rng;
use std::f64::consts::PI;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn zero_params() -> SpectralParams {
    SpectralParams::new([c(0.0, 0.0); 4], [0; 4]).unwrap()
}

#[test]
fn chi_basics_and_multiplicativity() {
    assert!(rel_err(chi(c(2.0, 0.0), 0, -3.0).unwrap(), c(9.0, 0.0)) < 1e-14);
    assert!(rel_err(chi(c(1.0, 0.0), 1, -2.0).unwrap(), c(-2.0, 0.0)) < 1e-14);
    let mut rng = sampling::rng(7);
    for _ in 0..20 {
        let s = sampling::disk(&mut rng, c(0.3, 0.0), 1.0);
        let s2 = sampling::disk(&mut rng, c(-0.1, 0.2), 1.0);
        let l1: i64 = rng.gen_range(-3..4);
        let l2: i64 = rng.gen_range(-3..4);
        let a: f64 = rng.gen_range(0.1..3.0) * if rng.gen_bool(0.5) { -1.0 } else { 1.0 };
        let lhs = chi(s, l1, a).unwrap() * chi(s2, l2, a).unwrap();
        let rhs = chi(s + s2, l1 + l2, a).unwrap();
        assert!(rel_err(lhs, rhs) < 1e-13);
    }
    assert!(chi(c(1.0, 0.0), 0, 0.0).is_err());
}

#[test]
fn power_function_values() {
    let a = [0.7, -1.3, 2.1, 0.4];
    let v = power_i(&zero_params(), &a).unwrap();
    let expect: f64 = (0..4).map(|i| a[i].abs().powf(RHO[i])).product();
    assert!(rel_err(v, c(expect, 0.0)) < 1e-13);
    // The unnormalized function has bare exponents mu_i: trivial at mu = 0.
    let u = power_i_unnormalized(&zero_params(), &a).unwrap();
    assert!(rel_err(u, c(1.0, 0.0)) < 1e-15);
    let mut rng = sampling::rng(8);
    let p = sampling::tempered_params(&mut rng);
    let shifted = SpectralParams::new(
        std::array::from_fn(|i| p.mu[i] + c(RHO[i], 0.0) - c(RHO[i], 0.0)),
        p.delta,
    )
    .unwrap();
    // I^*_(mu,delta) = I_(mu - rho, delta)
    let lhs = power_i_unnormalized(&p, &a).unwrap();
    let down = SpectralParams {
        mu: std::array::from_fn(|i| shifted.mu[i] - RHO[i]),
        delta: p.delta,
    };
    let rhs = power_i(&down, &a).unwrap();
    assert!(rel_err(lhs, rhs) < 1e-13);
}

#[test]
fn iota_power_matches_negated_parameter_exponents() {
    // I_(-mu, delta)(y^iota) should expose exponents 3/2 - mu1 - mu2 - mu3,
    // 2 - mu1 - mu2, 3/2 - mu1 when written in terms of the original mu.
    let mut rng = sampling::rng(9);
    let p = sampling::tempered_params(&mut rng);
    let y = [0.37, 1.9, -0.6];
    let negated = SpectralParams {
        mu: p.mu.map(|m| -m),
        delta: p.delta,
    };
    let lhs = iota_power(&negated, &y).unwrap();
    let [m1, m2, m3, _] = p.mu;
    let [_, d2, d3, d4] = p.delta;
    let rhs = chi(c(1.5, 0.0) - m1 - m2 - m3, d4, y[0]).unwrap()
        * chi(c(2.0, 0.0) - m1 - m2, d3 + d4, y[1]).unwrap()
        * chi(c(1.5, 0.0) - m1, d2 + d3 + d4, y[2]).unwrap();
    assert!(rel_err(lhs, rhs) < 1e-13);
}

#[test]
fn action_identity_swap_composition() {
    let mut rng = sampling::rng(10);
    let p = sampling::tempered_params(&mut rng);
    let id = Permutation::identity();
    assert_eq!(p.acted(&id), p);
    let swap = Permutation::from_cycles(&[&[1, 2]]);
    let q = p.acted(&swap);
    assert_eq!(q.mu[0], p.mu[1]);
    assert_eq!(q.mu[1], p.mu[0]);
    assert_eq!(q.mu[2], p.mu[2]);
    for _ in 0..10 {
        let perms = Permutation::all();
        let a = perms[rng.gen_range(0..24)];
        let b = perms[rng.gen_range(0..24)];
        let twice = p.acted(&a).acted(&b);
        let once = p.acted(&a.then(&b));
        assert_eq!(twice, once);
    }
}

#[test]
fn relevant_list_and_block_permutations() {
    let list = relevant_weyl_list();
    let names: Vec<String> = list.iter().map(|w| w.name()).collect();
    assert_eq!(
        names,
        ["4", "13", "31", "22", "112", "121", "211", "1111"]
    );
    assert!(list[0].permutation() == Permutation::identity());
    // w_211 is the 4-cycle (1 4 2 3).
    let w211 = WeylElement::parse("211").unwrap();
    assert_eq!(
        w211.permutation(),
        Permutation::from_cycles(&[&[1, 4, 2, 3]])
    );
    assert_eq!(
        WeylElement::parse("1111").unwrap().permutation(),
        Permutation::long_element()
    );
}

#[test]
fn coset_transversals_tile_the_group() {
    for w in relevant_weyl_list() {
        let stab = w.stabilizer();
        let reps = w.coset_reps();
        assert_eq!(reps.len() * stab.len(), 24, "{w}");
        let mut seen = std::collections::HashSet::new();
        for t in &reps {
            for h in &stab {
                assert!(seen.insert(t.then(h)), "overlap in {w} transversal");
            }
        }
        assert_eq!(seen.len(), 24);
    }
    assert_eq!(WeylElement::parse("31").unwrap().coset_reps().len(), 4);
    assert_eq!(WeylElement::parse("22").unwrap().coset_reps().len(), 6);
    assert_eq!(WeylElement::parse("1111").unwrap().coset_reps().len(), 24);
}

#[test]
fn inversion_pairs_match_known_sets() {
    let expect: &[(&str, &[(usize, usize)])] = &[
        ("4", &[]),
        ("31", &[(0, 3), (1, 3), (2, 3)]),
        ("22", &[(0, 2), (0, 3), (1, 2), (1, 3)]),
        ("121", &[(0, 1), (0, 2), (0, 3), (1, 3), (2, 3)]),
        ("211", &[(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
        (
            "1111",
            &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
        ),
    ];
    for (name, pairs) in expect {
        let w = WeylElement::parse(name).unwrap();
        assert_eq!(inversion_pairs(&w), *pairs, "S_{name}");
    }
}

#[test]
fn lambda_w_values() {
    let mut rng = sampling::rng(11);
    let p = sampling::tempered_params(&mut rng);
    let id = WeylElement::parse("4").unwrap();
    assert!(rel_err(lambda_w(&p.mu, &id).unwrap(), c(1.0, 0.0)) < 1e-15);
    let wl = WeylElement::parse("1111").unwrap();
    let at_zero = lambda_w(&[c(0.0, 0.0); 4], &wl).unwrap();
    assert!(rel_err(at_zero, c(1.0, 0.0)) < 1e-13);
    // Factor-by-factor for w_31.
    let w31 = WeylElement::parse("31").unwrap();
    let mut expect = c(1.0, 0.0);
    for j in 0..3 {
        let d = p.mu[j] - p.mu[3];
        expect *= c(2.0 * PI, 0.0).powc(-d)
            * crate::special::gamma(c(1.0, 0.0) + d).unwrap();
    }
    assert!(rel_err(lambda_w(&p.mu, &w31).unwrap(), expect) < 1e-12);
}

#[test]
fn c_w_values_and_poles() {
    // mu = 0, delta = 0 puts R_0(1) = 0 in every factor.
    let w31 = WeylElement::parse("31").unwrap();
    assert!(c_w(&zero_params(), &w31).is_err());
    let mut rng = sampling::rng(12);
    let mu = sampling::tempered_mu(&mut rng);
    let p = SpectralParams::new(mu, [0; 4]).unwrap();
    let got = c_w(&p, &w31).unwrap();
    let mut expect = c(1.0, 0.0);
    for j in 0..3 {
        expect *= PI / (PI * (c(1.0, 0.0) + mu[j] - mu[3]) / 2.0).cos();
    }
    assert!(rel_err(got, expect) < 1e-12);
}

#[test]
fn eigenvalues() {
    let l = lambda_eigen(&[c(0.0, 0.0); 4]);
    assert_eq!(l[0], c(0.0, 0.0));
    assert!(rel_err(l[1], c(2.5, 0.0)) < 1e-15);
    assert!(l[2].norm() < 1e-15);
    assert!(rel_err(l[3], c(41.0 / 16.0, 0.0)) < 1e-15);
    let (t, s) = (0.73, -1.21);
    let mu = [c(0.0, t), c(0.0, -t), c(0.0, s), c(0.0, -s)];
    let l2 = lambda_eigen(&mu)[1];
    assert!(rel_err(l2, c(2.5 + t * t + s * s, 0.0)) < 1e-13);
    // Symmetric functions: invariant under the action.
    let mut rng = sampling::rng(13);
    let p = sampling::tempered_params(&mut rng);
    let w = Permutation::all()[rng.gen_range(0..24)];
    let a = lambda_eigen(&p.mu);
    let b = lambda_eigen(&p.acted(&w).mu);
    for i in 0..4 {
        assert!((a[i] - b[i]).norm() < 1e-12);
    }
}

#[test]
fn iota_conjugates() {
    let w211 = WeylElement::parse("211").unwrap();
    assert_eq!(w211.conjugated_by_long().name(), "112");
    let wl = WeylElement::parse("1111").unwrap();
    assert_eq!(wl.conjugated_by_long(), wl);
    assert_eq!(WeylElement::parse("22").unwrap().conjugated_by_long().name(), "22");
    assert_eq!(WeylElement::parse("121").unwrap().conjugated_by_long().name(), "121");
    assert_eq!(WeylElement::parse("31").unwrap().conjugated_by_long().name(), "13");
}

#[test]
fn iota_transform_long_element_signs() {
    // For w = w_l the sign adjustment is -I: coordinates pass through.
    let wl = WeylElement::parse("1111").unwrap();
    let y = YPoint::new(wl.clone(), [0.2, -0.3, 0.15]).unwrap();
    let mut rng = sampling::rng(14);
    let p = sampling::tempered_params(&mut rng);
    let (y2, p2, w2) = iota_transform(&y, &p, &wl);
    assert_eq!(w2, wl);
    assert_eq!(y2.coords(), [0.15, -0.3, 0.2]);
    for i in 0..4 {
        assert_eq!(p2.mu[i], -p.mu[3 - i]);
        assert_eq!(p2.delta[i], p.delta[3 - i]);
    }
}

fn mat_mul(a: &[[f64; 4]; 4], b: &[[f64; 4]; 4]) -> [[f64; 4]; 4] {
    let mut m = [[0.0; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            for k in 0..4 {
                m[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    m
}

#[test]
fn conjugation_reverses_blocks() {
    // w^{-1} y w = (y^iota)^{-1} as matrices mod the center, for y in Y_w.
    let mut rng = sampling::rng(15);
    for w in relevant_weyl_list() {
        let free = w.free_coords();
        let mut y = [1.0f64; 3];
        for &i in &free {
            y[i] = rng.gen_range(0.2..2.0);
        }
        let yp = YPoint::new(w.clone(), y).unwrap();
        let d = yp.diagonal();
        let mut dm = [[0.0; 4]; 4];
        for i in 0..4 {
            dm[i][i] = d[i];
        }
        let wm = w.permutation().matrix();
        let wi = w.permutation().inverse().matrix();
        let lhs = mat_mul(&wi, &mat_mul(&dm, &wm));
        // (y^iota)^{-1} has diagonal entries d_(3-i).
        let rhs: [f64; 4] = std::array::from_fn(|i| d[3 - i]);
        let scale = lhs[3][3] / rhs[3];
        for i in 0..4 {
            for j in 0..4 {
                let want = if i == j { rhs[i] * scale } else { 0.0 };
                assert!((lhs[i][j] - want).abs() < 1e-12, "{w} entry ({i},{j})");
            }
        }
    }
}

#[test]
fn iota_preserves_base_power() {
    // I_(0,0)(y^iota) = I_(0,0)(y).
    let mut rng = sampling::rng(16);
    for _ in 0..10 {
        let y: [f64; 3] = std::array::from_fn(|_| rng.gen_range(0.2..2.5));
        let d = [y[0] * y[1] * y[2], y[1] * y[2], y[2], 1.0];
        let di: [f64; 4] = std::array::from_fn(|i| 1.0 / d[3 - i]);
        let val = |v: &[f64; 4]| -> f64 {
            (0..4).map(|i| v[i].abs().powf(RHO[i])).product()
        };
        assert!((val(&d) - val(&di)).abs() < 1e-12 * val(&d));
    }
}

#[test]
fn spectral_params_json_round_trip() {
    let mut rng = sampling::rng(17);
    let p = sampling::tempered_params(&mut rng);
    let s = serde_json::to_string(&p).unwrap();
    let q: SpectralParams = serde_json::from_str(&s).unwrap();
    for i in 0..4 {
        assert!((p.mu[i] - q.mu[i]).norm() < 1e-15);
    }
    assert_eq!(p.delta, q.delta);
    let w = WeylElement::parse("211").unwrap();
    let ws = serde_json::to_string(&w).unwrap();
    assert_eq!(ws, "\"211\"");
    assert_eq!(serde_json::from_str::<WeylElement>(&ws).unwrap(), w);
}
