//! Panelized contours and Gauss-Legendre quadrature along them.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// Configuration of one integration variable's contour.
///
/// The path runs up the vertical line `Re s = base` for `|Im s| <= t0`; when
/// `bend` is set the tails leave through a diagonal to `Re s = tail_abscissa`
/// at `|Im s| = t0 + tail_rise` and continue vertically to `t_max`,
/// otherwise the line stays straight out to `t_max`. Tail panels grow
/// geometrically by `tail_growth`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ContourConfig {
    pub base: f64,
    pub t0: f64,
    pub bend: bool,
    pub tail_abscissa: f64,
    pub tail_rise: f64,
    pub t_max: f64,
    /// Panel width on the straight and diagonal parts.
    pub panel_width: f64,
    pub tail_growth: f64,
    pub gl_order: usize,
}

impl ContourConfig {
    pub fn bent(base: f64, t0: f64) -> Self {
        ContourConfig {
            base,
            t0,
            bend: true,
            tail_abscissa: -0.55,
            tail_rise: 2.0,
            t_max: 3.0e3,
            panel_width: 0.5,
            tail_growth: 1.5,
            gl_order: 16,
        }
    }

    pub fn straight(base: f64, t0: f64, t_max: f64) -> Self {
        ContourConfig {
            base,
            t0,
            bend: false,
            tail_abscissa: base,
            tail_rise: 0.0,
            t_max,
            panel_width: 0.5,
            tail_growth: 1.35,
            gl_order: 16,
        }
    }
}

/// One quadrature node: position and weight (including path direction).
#[derive(Debug, Clone, Copy)]
pub struct Node {
    pub s: Complex64,
    pub w: Complex64,
}

/// Gauss-Legendre nodes/weights on [-1, 1].
fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    // Newton iteration on Legendre polynomials.
    let mut xs = vec![0.0; n];
    let mut ws = vec![0.0; n];
    for i in 0..n {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0f64, x);
            for k in 2..=n {
                let p2 = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
                p0 = p1;
                p1 = p2;
            }
            let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        let (mut p0, mut p1) = (1.0f64, x);
        for k in 2..=n {
            let p2 = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
            p0 = p1;
            p1 = p2;
        }
        let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
        xs[i] = x;
        ws[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    (xs, ws)
}

/// Straight-segment panels of the configured path, as endpoint pairs.
pub fn panels(cfg: &ContourConfig) -> Vec<(Complex64, Complex64)> {
    let mut segs: Vec<(Complex64, Complex64)> = Vec::new();
    let at = |re: f64, im: f64| Complex64::new(re, im);
    let subdivide = |segs: &mut Vec<(Complex64, Complex64)>, a: Complex64, b: Complex64| {
        let len = (b - a).norm();
        let n = (len / cfg.panel_width).ceil().max(1.0) as usize;
        for k in 0..n {
            let p = a + (b - a) * (k as f64 / n as f64);
            let q = a + (b - a) * ((k + 1) as f64 / n as f64);
            segs.push((p, q));
        }
    };
    // Build the upper half; mirror for the lower half afterwards. The
    // straight/diagonal pieces are cut to panel_width; the tail panels grow
    // geometrically and stay whole.
    subdivide(&mut segs, at(cfg.base, 0.0), at(cfg.base, cfg.t0));
    let (tail_re, tail_t1) = if cfg.bend {
        let t1 = cfg.t0 + cfg.tail_rise;
        subdivide(&mut segs, at(cfg.base, cfg.t0), at(cfg.tail_abscissa, t1));
        (cfg.tail_abscissa, t1)
    } else {
        (cfg.base, cfg.t0)
    };
    let mut t = tail_t1;
    while t < cfg.t_max {
        let next = (t * cfg.tail_growth).min(cfg.t_max);
        segs.push((at(tail_re, t), at(tail_re, next)));
        t = next;
    }
    // Mirror across the real axis, reversed so the path runs upward.
    let mut full: Vec<(Complex64, Complex64)> = segs
        .iter()
        .rev()
        .map(|(a, b)| (b.conj(), a.conj()))
        .collect();
    full.extend(segs);
    full
}

/// Quadrature nodes at the given Gauss-Legendre order per panel.
pub fn nodes(cfg: &ContourConfig, order: usize) -> Vec<Node> {
    let (xs, ws) = gauss_legendre(order);
    let mut out = Vec::new();
    for (a, b) in panels(cfg) {
        let mid = (a + b) / 2.0;
        let half = (b - a) / 2.0;
        for (x, w) in xs.iter().zip(&ws) {
            out.push(Node {
                s: mid + half * *x,
                w: half * *w,
            });
        }
    }
    out
}
