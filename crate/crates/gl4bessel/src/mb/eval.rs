//! The contour integrands, element by element.
//!
//! All gamma factors are assembled in log space and exponentiated once per
//! node, so the polynomially-sized integrand never routes through the
//! exponentially large/small gamma halves. Multi-dimensional integrals are
//! iterated sums over per-variable node lists with the coupling factors
//! tabulated pairwise, which collapses the nominal `N^dim` cost to `N^2`
//! work per parity class (times the node count of any variable the
//! couplings cannot be separated from).

use super::contour::{nodes, ContourConfig, Node};
use super::{MbError, Result};
use crate::special::{g_eta_ln, g_vec_ln, neg_one_pow};
use crate::weyl::{SpectralParams, WeylElement, YPoint};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

/// Contours (one per integration variable) plus the evaluation budget.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MbConfig {
    pub contours: Vec<ContourConfig>,
    pub budget: u64,
}

impl MbConfig {
    /// Defaults tuned per element: bent tails where outer-contour bending
    /// crosses no coupling poles (one- and two-variable kernels), straight
    /// truncated lines for the conditionally convergent three- and
    /// four-variable kernels.
    pub fn default_for(w: &WeylElement, params: &SpectralParams) -> Result<MbConfig> {
        let max_im = params
            .mu
            .iter()
            .map(|m| m.im.abs())
            .fold(0.0f64, f64::max);
        let cfg = match w.name().as_str() {
            "31" => MbConfig {
                contours: vec![ContourConfig::bent(0.2, max_im + 1.0)],
                budget: 10_000_000,
            },
            "22" => MbConfig {
                contours: vec![ContourConfig::bent(0.25, 2.0 * max_im + 1.0)],
                budget: 10_000_000,
            },
            "121" => MbConfig {
                contours: vec![
                    ContourConfig::bent(1.0 / 7.0, max_im + 1.0),
                    ContourConfig::bent(1.0 / 7.0, max_im + 1.0),
                ],
                budget: 10_000_000,
            },
            "211" => {
                let t = 140.0;
                MbConfig {
                    contours: vec![
                        ContourConfig::straight(1.0 / 7.0, t, t),
                        ContourConfig::straight(1.0 / 7.0 - 0.02, t, t),
                        ContourConfig::straight(1.0 / 7.0, t, t),
                    ],
                    budget: 40_000_000,
                }
            }
            "1111" => {
                let t = 22.0;
                let mut c = vec![ContourConfig::straight(0.1, t, t); 3];
                c.push(ContourConfig::straight(0.05, t, t));
                for cc in &mut c {
                    cc.panel_width = 0.7;
                }
                MbConfig {
                    contours: c,
                    budget: 60_000_000,
                }
            }
            name => return Err(MbError::Unsupported(name.to_string())),
        };
        Ok(cfg)
    }
}

/// A Mellin-Barnes value with its half-density error estimate.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MbValue {
    pub value: Complex64,
    /// |full-order - half-order| re-evaluation difference.
    pub err: f64,
    pub evals: u64,
}

/// `sgn(x)^l |x|^z` for real nonzero `x`, complex exponent.
fn chi_c(z: Complex64, ell: i64, x: f64) -> Complex64 {
    let sign = if x < 0.0 && ell.rem_euclid(2) == 1 {
        -1.0
    } else {
        1.0
    };
    sign * (z * x.abs().ln()).exp()
}

fn two_pi_i_pow(k: usize) -> Complex64 {
    Complex64::new(0.0, 2.0 * PI).powu(k as u32)
}

struct Budget {
    used: u64,
    cap: u64,
}

impl Budget {
    fn spend(&mut self, n: u64) -> bool {
        self.used += n;
        self.used <= self.cap
    }
}

/// Evaluate the Mellin-Barnes representation of `K_w(y, mu, delta)`.
pub fn mb_eval(
    w: &WeylElement,
    y: &YPoint,
    params: &SpectralParams,
    cfg: &MbConfig,
) -> Result<MbValue> {
    let mut budget = Budget {
        used: 0,
        cap: cfg.budget,
    };
    let full = eval_at_order(w, y, params, cfg, 0, &mut budget)?;
    let half = eval_at_order(w, y, params, cfg, 1, &mut budget)?;
    Ok(MbValue {
        value: full,
        err: (full - half).norm(),
        evals: budget.used,
    })
}

fn order_of(c: &ContourConfig, level: usize) -> usize {
    if level == 0 {
        c.gl_order
    } else {
        (c.gl_order / 2).max(4)
    }
}

fn eval_at_order(
    w: &WeylElement,
    y: &YPoint,
    params: &SpectralParams,
    cfg: &MbConfig,
    level: usize,
    budget: &mut Budget,
) -> Result<Complex64> {
    let yv = y.coords();
    match w.name().as_str() {
        "31" => eval_w31(yv[2], params, &cfg.contours[0], level, budget),
        "22" => eval_w22(yv[1], params, &cfg.contours[0], level, budget),
        "121" => eval_w121(yv[0], yv[2], params, cfg, level, budget),
        "211" => eval_w211(yv[1], yv[2], params, cfg, level, budget),
        "1111" => eval_w1111(yv, params, cfg, level, budget),
        name => Err(MbError::Unsupported(name.to_string())),
    }
}

fn eval_w31(
    y3: f64,
    params: &SpectralParams,
    contour: &ContourConfig,
    level: usize,
    budget: &mut Budget,
) -> Result<Complex64> {
    let big_delta = params.delta_sum();
    let t: Vec<Complex64> = params.mu.iter().map(|m| -m).collect();
    let eta: Vec<i64> = params.delta.iter().map(|d| big_delta - d).collect();
    let ns = nodes(contour, order_of(contour, level));
    if !budget.spend(ns.len() as u64 * 8) {
        return Err(budget_error(budget));
    }
    let mut acc = Complex64::new(0.0, 0.0);
    for n in &ns {
        for ell in 0..2i64 {
            let g = g_vec_ln(ell, n.s, &t, &eta).exp();
            acc += chi_c(Complex64::new(1.5, 0.0) - n.s, ell, -y3) * g * n.w;
        }
    }
    Ok(neg_one_pow(big_delta) / 2.0 * acc / two_pi_i_pow(1))
}

fn eval_w22(
    y2: f64,
    params: &SpectralParams,
    contour: &ContourConfig,
    level: usize,
    budget: &mut Budget,
) -> Result<Complex64> {
    let big_delta = params.delta_sum();
    let mut t = Vec::new();
    let mut eta = Vec::new();
    for i in 0..4 {
        for j in (i + 1)..4 {
            t.push(params.mu[i] + params.mu[j]);
            eta.push(params.delta[i] + params.delta[j]);
        }
    }
    let ns = nodes(contour, order_of(contour, level));
    if !budget.spend(ns.len() as u64 * 14) {
        return Err(budget_error(budget));
    }
    let mut acc = Complex64::new(0.0, 0.0);
    for n in &ns {
        let den = g_eta_ln(big_delta, 2.0 * n.s);
        for ell in 0..2i64 {
            let g = (g_vec_ln(ell, n.s, &t, &eta) - den).exp();
            acc += chi_c(Complex64::new(2.0, 0.0) - n.s, ell, y2) * g * n.w;
        }
    }
    Ok(acc / 2.0 / two_pi_i_pow(1))
}

fn eval_w121(
    y1: f64,
    y3: f64,
    params: &SpectralParams,
    cfg: &MbConfig,
    level: usize,
    budget: &mut Budget,
) -> Result<Complex64> {
    let big_delta = params.delta_sum();
    let mu: Vec<Complex64> = params.mu.to_vec();
    let neg_mu: Vec<Complex64> = params.mu.iter().map(|m| -m).collect();
    let delta: Vec<i64> = params.delta.to_vec();
    let refl: Vec<i64> = params.delta.iter().map(|d| big_delta - d).collect();
    let n1 = nodes(&cfg.contours[0], order_of(&cfg.contours[0], level));
    let n2 = nodes(&cfg.contours[1], order_of(&cfg.contours[1], level));
    let cost = (n1.len() + n2.len()) as u64 * 8 + 2 * (n1.len() * n2.len()) as u64 * 2;
    if !budget.spend(cost) {
        return Err(budget_error(budget));
    }
    // Per-variable factors, weights folded in.
    let a: Vec<Vec<Complex64>> = (0..2i64)
        .map(|ell| {
            n1.iter()
                .map(|n| {
                    chi_c(Complex64::new(1.5, 0.0) - n.s, ell, -y1)
                        * g_vec_ln(ell, n.s, &mu, &delta).exp()
                        * n.w
                })
                .collect()
        })
        .collect();
    let b: Vec<Vec<Complex64>> = (0..2i64)
        .map(|ell| {
            n2.iter()
                .map(|n| {
                    chi_c(Complex64::new(1.5, 0.0) - n.s, ell, y3)
                        * g_vec_ln(ell, n.s, &neg_mu, &refl).exp()
                        * n.w
                })
                .collect()
        })
        .collect();
    // Coupling 1/G_(l1+l2+Delta)(s1+s2), two parity classes.
    let mut acc = Complex64::new(0.0, 0.0);
    for q in 0..2i64 {
        let parity = (q + big_delta).rem_euclid(2);
        // U(i,j) = sum over (l1,l2) with l1+l2 = q (mod 2) of a[l1][i] b[l2][j]
        let pairs: [(usize, usize); 2] = if q == 0 { [(0, 0), (1, 1)] } else { [(0, 1), (1, 0)] };
        for (i, ni) in n1.iter().enumerate() {
            for (j, nj) in n2.iter().enumerate() {
                let c = (-g_eta_ln(parity, ni.s + nj.s)).exp();
                if !c.is_finite() {
                    continue;
                }
                let mut u = Complex64::new(0.0, 0.0);
                for (l1, l2) in pairs {
                    u += a[l1][i] * b[l2][j];
                }
                acc += u * c;
            }
        }
    }
    Ok(neg_one_pow(big_delta) / 4.0 * acc / two_pi_i_pow(2))
}

fn eval_w211(
    y2: f64,
    y3: f64,
    params: &SpectralParams,
    cfg: &MbConfig,
    level: usize,
    budget: &mut Budget,
) -> Result<Complex64> {
    let big_delta = params.delta_sum();
    let mu = &params.mu;
    let delta = &params.delta;
    let pair_t: Vec<Complex64> = vec![
        -(mu[0] + mu[1]),
        -(mu[0] + mu[2]),
        -(mu[1] + mu[2]),
    ];
    let pair_eta: Vec<i64> = vec![
        big_delta - delta[0] - delta[1],
        big_delta - delta[0] - delta[2],
        big_delta - delta[1] - delta[2],
    ];
    let sing_t: Vec<Complex64> = vec![-mu[0], -mu[1], -mu[2]];
    let sing_eta: Vec<i64> = vec![
        big_delta - delta[0],
        big_delta - delta[1],
        big_delta - delta[2],
    ];
    let n1 = nodes(&cfg.contours[0], order_of(&cfg.contours[0], level));
    let n2 = nodes(&cfg.contours[1], order_of(&cfg.contours[1], level));
    let n3 = nodes(&cfg.contours[2], order_of(&cfg.contours[2], level));
    let cost = (n1.len() + n2.len() + n3.len()) as u64 * 8
        + (2 * n1.len() * n2.len() + 2 * n2.len() * n3.len()) as u64 * 2;
    if !budget.spend(cost) {
        return Err(budget_error(budget));
    }
    let a: Vec<Vec<Complex64>> = (0..2i64)
        .map(|l1| {
            n1.iter()
                .map(|n| {
                    chi_c(Complex64::new(2.0, 0.0) - n.s, l1, y2)
                        * g_vec_ln(l1, n.s, &pair_t, &pair_eta).exp()
                        * n.w
                })
                .collect()
        })
        .collect();
    let b: Vec<Vec<Complex64>> = (0..2i64)
        .map(|l2| {
            n2.iter()
                .map(|n| g_vec_ln(l2, n.s, &sing_t, &sing_eta).exp() * n.w)
                .collect()
        })
        .collect();
    let c: Vec<Vec<Complex64>> = (0..2i64)
        .map(|l3| {
            n3.iter()
                .map(|n| {
                    chi_c(Complex64::new(1.5, 0.0) - n.s, l3, y3)
                        * g_eta_ln(l3 + big_delta - delta[3], n.s - mu[3]).exp()
                        * n.w
                })
                .collect()
        })
        .collect();
    // m1[l1][q][j] = sum_i a[l1][i] G_(q+d4)(s1_i - s2_j - mu4)
    //                           / G_(q+Delta-d4)(s1_i + s2_j + mu4)
    let mut m1 = vec![vec![vec![Complex64::new(0.0, 0.0); n2.len()]; 2]; 2];
    for q in 0..2usize {
        for (j, nj) in n2.iter().enumerate() {
            for (i, ni) in n1.iter().enumerate() {
                let p = (g_eta_ln(q as i64 + delta[3], ni.s - nj.s - mu[3])
                    - g_eta_ln(q as i64 + big_delta + delta[3], ni.s + nj.s + mu[3]))
                .exp();
                if !p.is_finite() {
                    continue;
                }
                m1[0][q][j] += a[0][i] * p;
                m1[1][q][j] += a[1][i] * p;
            }
        }
    }
    // m2[l3][r][j] = sum_k c[l3][k] G_r(s3_k - s2_j)
    let mut m2 = vec![vec![vec![Complex64::new(0.0, 0.0); n2.len()]; 2]; 2];
    for r in 0..2usize {
        for (j, nj) in n2.iter().enumerate() {
            for (k, nk) in n3.iter().enumerate() {
                let p = g_eta_ln(r as i64, nk.s - nj.s).exp();
                if !p.is_finite() {
                    continue;
                }
                m2[0][r][j] += c[0][k] * p;
                m2[1][r][j] += c[1][k] * p;
            }
        }
    }
    let mut acc = Complex64::new(0.0, 0.0);
    for l1 in 0..2usize {
        for l2 in 0..2usize {
            let q = (l1 + l2) % 2;
            for l3 in 0..2usize {
                let r = (l2 + l3) % 2;
                for j in 0..n2.len() {
                    acc += b[l2][j] * m1[l1][q][j] * m2[l3][r][j];
                }
            }
        }
    }
    Ok(neg_one_pow(big_delta) / 8.0 * acc / two_pi_i_pow(3))
}

fn eval_w1111(
    yv: [f64; 3],
    params: &SpectralParams,
    cfg: &MbConfig,
    level: usize,
    budget: &mut Budget,
) -> Result<Complex64> {
    let big_delta = params.delta_sum();
    let mu = &params.mu;
    let d = &params.delta;
    let lists: Vec<Vec<Node>> = (0..4)
        .map(|v| nodes(&cfg.contours[v], order_of(&cfg.contours[v], level)))
        .collect();
    let (n1, n2, n3, n4) = (&lists[0], &lists[1], &lists[2], &lists[3]);
    let cost = 2 * (n4.len() * (2 * n1.len() * n2.len() + 2 * n2.len() * n3.len())) as u64;
    if !budget.spend(cost) {
        return Err(budget_error(budget));
    }
    let a: Vec<Vec<Complex64>> = (0..2i64)
        .map(|l| {
            n1.iter()
                .map(|n| {
                    chi_c(Complex64::new(1.5, 0.0) - n.s, l, -yv[0])
                        * g_vec_ln(l, n.s, &[mu[0], mu[1]], &[d[0], d[1]]).exp()
                })
                .collect()
        })
        .collect();
    let b: Vec<Vec<Complex64>> = (0..2i64)
        .map(|l| {
            n2.iter()
                .map(|n| {
                    chi_c(Complex64::new(2.0, 0.0) - n.s, l, -yv[1])
                        * g_vec_ln(
                            l,
                            n.s,
                            &[mu[0] + mu[1], mu[2] + mu[3]],
                            &[d[0] + d[1], d[2] + d[3]],
                        )
                        .exp()
                })
                .collect()
        })
        .collect();
    let c: Vec<Vec<Complex64>> = (0..2i64)
        .map(|l| {
            n3.iter()
                .map(|n| {
                    chi_c(Complex64::new(1.5, 0.0) - n.s, l, -yv[2])
                        * g_vec_ln(
                            l,
                            n.s,
                            &[-mu[0], -mu[1]],
                            &[big_delta - d[0], big_delta - d[1]],
                        )
                        .exp()
                })
                .collect()
        })
        .collect();
    let mut acc = Complex64::new(0.0, 0.0);
    let d12 = d[0] + d[1];
    for l4 in 0..2i64 {
        for n4v in n4.iter() {
            let u = n4v.s;
            let dfac = g_vec_ln(l4, u, &[mu[2], mu[3]], &[d[2], d[3]]).exp() * n4v.w;
            if !dfac.is_finite() || dfac.norm() < 1e-280 {
                continue;
            }
            // Per-variable factors carrying the s4 pair couplings.
            let ap: Vec<Vec<Complex64>> = (0..2i64)
                .map(|l1| {
                    n1.iter()
                        .enumerate()
                        .map(|(i, ni)| {
                            a[l1 as usize][i]
                                * g_eta_ln(l1 + l4, ni.s - u).exp()
                                * ni.w
                        })
                        .collect()
                })
                .collect();
            let bp: Vec<Vec<Complex64>> = (0..2i64)
                .map(|l2| {
                    n2.iter()
                        .enumerate()
                        .map(|(j, nj)| {
                            b[l2 as usize][j]
                                * g_vec_ln(l2 + l4, nj.s - u, &[mu[0], mu[1]], &[d[0], d[1]])
                                    .exp()
                                * nj.w
                        })
                        .collect()
                })
                .collect();
            let cp: Vec<Vec<Complex64>> = (0..2i64)
                .map(|l3| {
                    n3.iter()
                        .enumerate()
                        .map(|(k, nk)| {
                            c[l3 as usize][k]
                                * g_eta_ln(l3 + l4 + d12, nk.s - u + mu[0] + mu[1]).exp()
                                * nk.w
                        })
                        .collect()
                })
                .collect();
            // Couplings 1/G(s1+s2-s4+mu1+mu2) and 1/G(s2+s3-s4), tabulated
            // for both parity classes.
            // q1[par][l1][j] = sum_i ap[l1][i] / G_par(s1_i + s2_j - u + mu1 + mu2)
            let mut q1 = vec![vec![vec![Complex64::new(0.0, 0.0); n2.len()]; 2]; 2];
            let mut q2 = vec![vec![vec![Complex64::new(0.0, 0.0); n2.len()]; 2]; 2];
            for par in 0..2usize {
                for (j, nj) in n2.iter().enumerate() {
                    for (i, ni) in n1.iter().enumerate() {
                        let inv =
                            (-g_eta_ln(par as i64, ni.s + nj.s - u + mu[0] + mu[1])).exp();
                        if !inv.is_finite() {
                            continue;
                        }
                        q1[par][0][j] += ap[0][i] * inv;
                        q1[par][1][j] += ap[1][i] * inv;
                    }
                    for (k, nk) in n3.iter().enumerate() {
                        let inv = (-g_eta_ln(par as i64, nj.s + nk.s - u)).exp();
                        if !inv.is_finite() {
                            continue;
                        }
                        q2[par][0][j] += cp[0][k] * inv;
                        q2[par][1][j] += cp[1][k] * inv;
                    }
                }
            }
            for l1 in 0..2usize {
                for l2 in 0..2usize {
                    for l3 in 0..2usize {
                        let p1 = (l1 as i64 + l2 as i64 + l4 + d12).rem_euclid(2) as usize;
                        let p2 =
                            (l2 as i64 + l3 as i64 + l4 + big_delta).rem_euclid(2) as usize;
                        for j in 0..n2.len() {
                            acc += dfac * bp[l2][j] * q1[p1][l1][j] * q2[p2][l3][j];
                        }
                    }
                }
            }
        }
    }
    Ok(neg_one_pow(big_delta) / 16.0 * acc / two_pi_i_pow(4))
}

/// Single parity component of the one-variable (3,1) integral: the `ell`
/// term of the sign sum, with the element prefactor. The full kernel is the
/// sum of the two components, and they are the even/odd parts in `y3`.
#[cfg_attr(not(test), allow(dead_code))]
pub(crate) fn w31_parity_component(
    y3: f64,
    params: &SpectralParams,
    contour: &ContourConfig,
    ell: i64,
) -> Complex64 {
    let big_delta = params.delta_sum();
    let t: Vec<Complex64> = params.mu.iter().map(|m| -m).collect();
    let eta: Vec<i64> = params.delta.iter().map(|d| big_delta - d).collect();
    let mut acc = Complex64::new(0.0, 0.0);
    for n in nodes(contour, contour.gl_order) {
        let g = g_vec_ln(ell, n.s, &t, &eta).exp();
        acc += chi_c(Complex64::new(1.5, 0.0) - n.s, ell, -y3) * g * n.w;
    }
    neg_one_pow(big_delta) / 2.0 * acc / two_pi_i_pow(1)
}

fn budget_error(budget: &Budget) -> MbError {
    MbError::Budget {
        evals: budget.used,
        partial: MbValue {
            value: Complex64::new(f64::NAN, f64::NAN),
            err: f64::INFINITY,
            evals: budget.used,
        },
    }
}

/// Node-by-node trace of a one-variable integrand as CSV
/// (`re_s,im_s,re_f,im_f,abs_w`); the sum of `f x w / (2 pi i)` times the
/// element prefactor reproduces `mb_eval`.
pub fn trace_csv(
    w: &WeylElement,
    y: &YPoint,
    params: &SpectralParams,
    cfg: &MbConfig,
) -> Result<String> {
    let contour = &cfg.contours[0];
    let ns = nodes(contour, contour.gl_order);
    let big_delta = params.delta_sum();
    let mut out = String::from("re_s,im_s,re_f,im_f,abs_w\n");
    let yv = y.coords();
    for n in &ns {
        let f = match w.name().as_str() {
            "31" => {
                let t: Vec<Complex64> = params.mu.iter().map(|m| -m).collect();
                let eta: Vec<i64> = params.delta.iter().map(|d| big_delta - d).collect();
                (0..2i64)
                    .map(|ell| {
                        chi_c(Complex64::new(1.5, 0.0) - n.s, ell, -yv[2])
                            * g_vec_ln(ell, n.s, &t, &eta).exp()
                    })
                    .sum::<Complex64>()
            }
            "22" => {
                let mut t = Vec::new();
                let mut eta = Vec::new();
                for i in 0..4 {
                    for j in (i + 1)..4 {
                        t.push(params.mu[i] + params.mu[j]);
                        eta.push(params.delta[i] + params.delta[j]);
                    }
                }
                let den = g_eta_ln(big_delta, 2.0 * n.s);
                (0..2i64)
                    .map(|ell| {
                        chi_c(Complex64::new(2.0, 0.0) - n.s, ell, yv[1])
                            * (g_vec_ln(ell, n.s, &t, &eta) - den).exp()
                    })
                    .sum::<Complex64>()
            }
            name => return Err(MbError::Unsupported(name.to_string())),
        };
        out.push_str(&format!(
            "{:.17e},{:.17e},{:.17e},{:.17e},{:.17e}\n",
            n.s.re,
            n.s.im,
            f.re,
            f.im,
            n.w.norm()
        ));
    }
    Ok(out)
}
