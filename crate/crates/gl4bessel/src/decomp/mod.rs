//! Numerical verification of the explicit Iwasawa and Bruhat factorizations
//! of `w x` for the relevant Weyl elements with unipotent displays.
//!
//! Both sides of each printed identity are assembled as 4x4 matrices and
//! compared entrywise. The Iwasawa identities are global; the Bruhat ones
//! live on the big cell, away from the zero sets of their denominators.

mod matrices;

pub use matrices::{mat_a, mat_k, mat_sub_abs_max, mat_x, mat_x_lower, mat_y, Mat4};

use crate::weyl::WeylElement;
use rand::Rng;
use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum DecompError {
    #[error("no printed decomposition for Weyl element {0}")]
    Unsupported(String),
    #[error("coordinates outside the big cell: |{denom}| = {value:e} below 1e-6")]
    SingularCell { denom: &'static str, value: f64 },
}

pub type Result<T> = std::result::Result<T, DecompError>;

fn xi(parts: &[f64]) -> f64 {
    parts.iter().map(|x| (1.0 + x * x).sqrt()).product()
}

/// Coordinate slots (0-based, into the 6-vector) that are free in the
/// unipotent subgroup attached to `w`; the rest vanish.
pub fn free_slots(w: &WeylElement) -> Result<&'static [usize]> {
    Ok(match w.name().as_str() {
        "31" => &[0, 1, 3],
        "22" => &[1, 2, 3, 4],
        "121" => &[0, 1, 3, 4, 5],
        "211" => &[0, 1, 2, 3, 4],
        "1111" => &[0, 1, 2, 3, 4, 5],
        name => return Err(DecompError::Unsupported(name.to_string())),
    })
}

/// Max entrywise deviation of the printed Iwasawa identity for `w x` at the
/// coordinates `x` (slots outside the pattern of `w` are ignored).
pub fn iwasawa_deviation(w: &WeylElement, x: &[f64; 6]) -> Result<f64> {
    let wm = Mat4::from(w.permutation().matrix());
    let [x1, x2, x3, x4, x5, x6] = *x;
    let (lhs_args, rhs_x, rhs_y, ks): ([f64; 6], [f64; 6], [f64; 4], Vec<(usize, usize, f64)>) =
        match w.name().as_str() {
            "31" => (
                [x1, x2 * xi(&[x1]), 0.0, x4 * xi(&[x1, x2]), 0.0, 0.0],
                [
                    -x1 * x2 / xi(&[x1]),
                    -x1 * x4 / xi(&[x1, x2]),
                    -x2 * x4 / xi(&[x2]),
                    x1 / xi(&[x1, x2, x4]).powi(2),
                    x2 / (xi(&[x1]) * xi(&[x2, x4]).powi(2)),
                    x4 / (xi(&[x1, x2]) * xi(&[x4]).powi(2)),
                ],
                [
                    xi(&[x2]) / xi(&[x1]),
                    xi(&[x4]) / xi(&[x2]),
                    1.0 / (xi(&[x1, x2]) * xi(&[x4]).powi(2)),
                    xi(&[x1, x2, x4]),
                ],
                vec![(3, 4, x4), (2, 4, x2), (1, 4, x1)],
            ),
            "22" => (
                [
                    0.0,
                    x2 * xi(&[x3]),
                    x3,
                    x2 * x3 * x5 + x4 * xi(&[x2, x5]),
                    x5 * xi(&[x3]),
                    0.0,
                ],
                [
                    -x3 * x5 / xi(&[x3]) - x2 * x4 * xi(&[x5]) / xi(&[x2, x3]),
                    -x3 * x4 * x5 / (xi(&[x2, x3, x5]) * xi(&[x4]).powi(2))
                        + x2 / (xi(&[x3]) * xi(&[x2, x4]).powi(2)),
                    x4 / (xi(&[x2, x5]) * xi(&[x4]).powi(2)),
                    x3 / xi(&[x3, x5]).powi(2),
                    x5 / (xi(&[x3]) * xi(&[x5]).powi(2)),
                    x2 * x3 / xi(&[x3]) + x4 * x5 * xi(&[x2]) / xi(&[x3, x5]),
                ],
                [
                    xi(&[x4, x5]) / xi(&[x2, x3]),
                    1.0 / (xi(&[x2, x5]) * xi(&[x4]).powi(2)),
                    xi(&[x2, x4]) / xi(&[x3, x5]),
                    xi(&[x3, x5]),
                ],
                vec![(2, 3, x4), (1, 3, x2), (2, 4, x5), (1, 4, x3)],
            ),
            "121" => (
                [
                    x1,
                    x2 * xi(&[x1]),
                    0.0,
                    x4 * xi(&[x1, x2]),
                    (x1 * x4 - x1 * x2 * x6 * xi(&[x4])) / xi(&[x1, x2])
                        + x5 * xi(&[x4, x6]) / xi(&[x1]),
                    (x2 * x4 + x6 * xi(&[x4])) / xi(&[x2]),
                ],
                [
                    x5 * xi(&[x1]) / (xi(&[x4, x6]) * xi(&[x5]).powi(2)),
                    x6 * xi(&[x2]) / (xi(&[x4]) * xi(&[x6]).powi(2)),
                    x5 * x6 * xi(&[x2]) / xi(&[x1, x6]) - x1 * x2 / xi(&[x1]),
                    x4 / (xi(&[x1, x2]) * xi(&[x4]).powi(2)),
                    x1 / xi(&[x1, x2]).powi(2)
                        - x1 * x2 * x4 * x6 / (xi(&[x4]) * xi(&[x1, x2]).powi(2))
                        + x4 * x5 * xi(&[x6]) / (xi(&[x2, x4]) * xi(&[x1]).powi(2)),
                    x2 / (xi(&[x1]) * xi(&[x2]).powi(2))
                        + x4 * x6 / (xi(&[x1, x4]) * xi(&[x2]).powi(2)),
                ],
                [
                    xi(&[x1]) / (xi(&[x4, x6]) * xi(&[x5]).powi(2)),
                    xi(&[x2, x5]) / xi(&[x1, x6]),
                    xi(&[x6]) / (xi(&[x1, x4]) * xi(&[x2]).powi(2)),
                    xi(&[x1, x2, x4]),
                ],
                vec![(1, 2, x5), (1, 3, x6), (1, 4, x4), (3, 4, x2), (2, 4, x1)],
            ),
            "211" => (
                [
                    x1,
                    x2 * xi(&[x1]),
                    (x1 * x2 + x3 * xi(&[x2])) / xi(&[x1]),
                    x4 * xi(&[x1, x2]),
                    (x2 * x3 * x4 + x1 * x4 * xi(&[x2]) + x5 * xi(&[x3, x4])) / xi(&[x1]),
                    0.0,
                ],
                [
                    -x2 * x4 / xi(&[x2]) - x3 * x5 * xi(&[x4]) / xi(&[x2, x3]),
                    x3 * xi(&[x1]) / (xi(&[x2]) * xi(&[x3, x5]).powi(2))
                        - x2 * x4 * x5 * xi(&[x1]) / (xi(&[x2, x3, x4]) * xi(&[x5]).powi(2)),
                    x5 * xi(&[x1]) / (xi(&[x3, x4]) * xi(&[x5]).powi(2)),
                    // The (1,4) slot reads x2/(xi_14 xi_2^2) in the printed
                    // display; the matrix identity needs xi_1 xi_24^2.
                    x2 / (xi(&[x1]) * xi(&[x2, x4]).powi(2)),
                    x4 / (xi(&[x1, x2]) * xi(&[x4]).powi(2)),
                    x1 / xi(&[x1]).powi(2)
                        + x2 * x3 / (xi(&[x2]) * xi(&[x1]).powi(2))
                        + x4 * x5 * xi(&[x3]) / (xi(&[x2, x4]) * xi(&[x1]).powi(2)),
                ],
                [
                    xi(&[x4, x5]) / xi(&[x2, x3]),
                    xi(&[x1]) / (xi(&[x3, x4]) * xi(&[x5]).powi(2)),
                    xi(&[x3, x5]) / (xi(&[x2, x4]) * xi(&[x1]).powi(2)),
                    xi(&[x1, x2, x4]),
                ],
                vec![(2, 3, x5), (1, 3, x3), (2, 4, x4), (1, 4, x2), (3, 4, x1)],
            ),
            "1111" => (
                [
                    x1,
                    x2 * xi(&[x1]),
                    (x1 * x2 + x3 * xi(&[x2])) / xi(&[x1]),
                    x4 * xi(&[x1, x2]),
                    (x2 * x3 * x4 + x1 * x4 * xi(&[x2]) + x5 * xi(&[x3, x4])) / xi(&[x1]),
                    (x2 * x4 * xi(&[x3]) + x3 * x5 * xi(&[x4]) + x6 * xi(&[x4, x5]))
                        / xi(&[x2, x3]),
                ],
                [
                    x6 * xi(&[x2, x3]) / (xi(&[x4, x5]) * xi(&[x6]).powi(2)),
                    x5 * xi(&[x1]) / (xi(&[x3, x4]) * xi(&[x5]).powi(2)),
                    (x3 * xi(&[x1, x5]) + x5 * x6 * xi(&[x1])) / (xi(&[x2, x5]) * xi(&[x3]).powi(2)),
                    x4 / (xi(&[x1, x2]) * xi(&[x4]).powi(2)),
                    (x3 * x4 * x5 + x2 * xi(&[x3, x4]) + x4 * x6 * xi(&[x5]))
                        / (xi(&[x1, x3, x4]) * xi(&[x2]).powi(2)),
                    (x1 * xi(&[x2, x4]) + x2 * x3 * xi(&[x4]) + x4 * x5 * xi(&[x3]))
                        / (xi(&[x2, x4]) * xi(&[x1]).powi(2)),
                ],
                [
                    xi(&[x2, x3]) / (xi(&[x4, x5]) * xi(&[x6]).powi(2)),
                    xi(&[x1, x6]) / (xi(&[x2, x5]) * xi(&[x3]).powi(2)),
                    xi(&[x3, x5]) / (xi(&[x2, x4]) * xi(&[x1]).powi(2)),
                    xi(&[x1, x2, x4]),
                ],
                vec![
                    (1, 2, x6),
                    (1, 3, x5),
                    (2, 3, x3),
                    (1, 4, x4),
                    (2, 4, x2),
                    (3, 4, x1),
                ],
            ),
            name => return Err(DecompError::Unsupported(name.to_string())),
        };
    let lhs = wm.mul(&mat_x(&lhs_args));
    let mut rhs = mat_x(&rhs_x).mul(&mat_y(&rhs_y));
    for (i, j, v) in ks {
        rhs = rhs.mul(&mat_k(i, j, v));
    }
    rhs = rhs.mul(&wm);
    Ok(mat_sub_abs_max(&lhs, &rhs))
}

struct BruhatData {
    x_args: [f64; 6],
    a_args: [f64; 4],
    tx_args: [f64; 6],
    denominators: Vec<(&'static str, f64)>,
}

fn bruhat_data(w: &WeylElement, x: &[f64; 6]) -> Result<BruhatData> {
    let [x1, x2, x3, x4, x5, x6] = *x;
    let z1 = x3 * x4 - x2 * x5;
    let z2 = x4 - x2 * x6;
    let z3 = x4 - x1 * x5 - x2 * x6;
    let z4 = x4 - x1 * x5;
    let z5 = x2 - x1 * x3;
    let z6 = x4 - x1 * x5 - x2 * x6 + x1 * x3 * x6;
    let z7 = x5 - x3 * x6;
    Ok(match w.name().as_str() {
        "31" => BruhatData {
            x_args: [-x2 / x1, 0.0, -x4 / x2, 0.0, 0.0, 1.0 / x4],
            a_args: [-1.0, x1, -x2, x4],
            tx_args: [1.0 / x1, 1.0 / x2, x1 / x2, 1.0 / x4, x1 / x4, x2 / x4],
            denominators: vec![("x1", x1), ("x2", x2), ("x4", x4)],
        },
        "22" => BruhatData {
            x_args: [-x4 / x2, -x5 / z1, x3 / z1, 0.0, 1.0 / x5, x4 / x5],
            a_args: [1.0, -x2, -z1, x5],
            tx_args: [-x3 / x2, -x5 / z1, x4 / z1, 0.0, 1.0 / x5, x3 / x5],
            denominators: vec![("x2", x2), ("zeta1", z1), ("x5", x5)],
        },
        "121" => BruhatData {
            x_args: [-x1 / z3, -x2 / z2, -x2 * x5 / z2, 1.0 / x4, x5 / x4, x6 / x4],
            a_args: [-1.0, z3, z2, x4],
            tx_args: [-x5 / z3, -x6 / z2, -x1 * x6 / z2, 1.0 / x4, x1 / x4, x2 / x4],
            denominators: vec![("zeta3", z3), ("zeta2", z2), ("x4", x4)],
        },
        "211" => BruhatData {
            x_args: [-z4 / z5, x4 / z1, -x2 / z1, 0.0, 1.0 / x4, x5 / x4],
            a_args: [-1.0, z5, z1, x4],
            tx_args: [-x3 / z5, -x5 / z1, z4 / z1, 1.0 / x4, x1 / x4, x2 / x4],
            denominators: vec![("zeta5", z5), ("zeta1", z1), ("x4", x4)],
        },
        "1111" => BruhatData {
            x_args: [-z5 / z6, -x2 / z1, z2 / z1, 1.0 / x4, x6 / x4, x5 / x4],
            a_args: [1.0, -z6, z1, x4],
            tx_args: [-z7 / z6, -x5 / z1, z4 / z1, 1.0 / x4, x1 / x4, x2 / x4],
            denominators: vec![
                ("zeta6", z6),
                ("zeta1", z1),
                ("x4", x4),
                ("zeta5", z5),
                ("zeta7", z7),
                ("zeta2", z2),
                ("zeta4", z4),
            ],
        },
        name => return Err(DecompError::Unsupported(name.to_string())),
    })
}

/// Max entrywise deviation of `X(..) A(..) tX(..)` from `w x`, on the big
/// cell of `w`.
pub fn bruhat_deviation(w: &WeylElement, x: &[f64; 6]) -> Result<f64> {
    let data = bruhat_data(w, x)?;
    for (name, v) in &data.denominators {
        if v.abs() < 1e-6 {
            return Err(DecompError::SingularCell {
                denom: name,
                value: v.abs(),
            });
        }
    }
    let mut xin = [0.0f64; 6];
    for &slot in free_slots(w)? {
        xin[slot] = x[slot];
    }
    let lhs = Mat4::from(w.permutation().matrix()).mul(&mat_x(&xin));
    let rhs = mat_x(&data.x_args)
        .mul(&mat_a(&data.a_args))
        .mul(&mat_x_lower(&data.tx_args));
    Ok(mat_sub_abs_max(&lhs, &rhs))
}

/// Determinant consistency of the Bruhat display: `det(w x) = det A` exactly
/// (both are the sign of the permutation; independent of the coordinates).
pub fn bruhat_det_consistency(w: &WeylElement, x: &[f64; 6]) -> Result<f64> {
    let data = bruhat_data(w, x)?;
    let det_a = data.a_args[0];
    let det_lhs = w.permutation().sign();
    Ok((det_a - det_lhs).abs())
}

/// Draw admissible coordinates for `w`: free slots uniform in [-2, 2],
/// rejected while any Bruhat denominator is below 1e-3.
pub fn sample_coords(w: &WeylElement, rng: &mut impl Rng) -> Result<[f64; 6]> {
    let slots = free_slots(w)?;
    loop {
        let mut x = [0.0f64; 6];
        for &s in slots {
            x[s] = rng.gen_range(-2.0..2.0);
        }
        let data = bruhat_data(w, &x)?;
        if data.denominators.iter().all(|(_, v)| v.abs() >= 1e-3) {
            return Ok(x);
        }
    }
}

/// The five elements with printed decompositions.
pub fn checkable_elements() -> Vec<WeylElement> {
    ["31", "22", "121", "211", "1111"]
        .iter()
        .map(|n| WeylElement::parse(n).unwrap())
        .collect()
}
