//! The contiguous-relation identity suite.
//!
//! Each relation is a finite linear combination of hypergeometric values
//! that must vanish identically in admissible parameters. `relation_residual`
//! draws admissible random parameters and returns the cancellation residual
//! `|sum of terms| / max |term|`, which should sit at rounding level.

use super::pfq::{pfq, HypSpec};
use super::{as_nonpos_int, Result};
use crate::sampling::disk;
use num_complex::Complex64;
use rand::Rng;

/// Identifier of one verified relation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    /// Three-term contiguous relation of 3F2(1) in the third upper parameter.
    ThreeF2Term,
    /// 0 = a1 F(a1+1) - a2 F(a2+1) + (a2 - a1) F for 3F2(1).
    ThreeF2Shift,
    /// Regularized 4F3(1) with denominator -n re-expressed by reindexing.
    FourF3DenomShift,
    /// 4F3*(-m, a, b, c; -m-n, d, e; 1) = 0.
    FourF3DenomVanish,
    /// Four-term linear dependence among shifted 4F3(z).
    FourF3General,
    /// Four-term Saalschuetzian relation, terminating in the first upper slot.
    SaalschuetzFourTermFirst,
    /// Same relation terminating in the last upper slot.
    SaalschuetzFourTermLast,
    /// Three-term Saalschuetzian contiguous relation.
    SaalschuetzThreeTerm,
    /// The four-term dependence in completed normalization.
    FourF3GeneralCompleted,
}

impl Relation {
    pub const ALL: [Relation; 9] = [
        Relation::ThreeF2Term,
        Relation::ThreeF2Shift,
        Relation::FourF3DenomShift,
        Relation::FourF3DenomVanish,
        Relation::FourF3General,
        Relation::SaalschuetzFourTermFirst,
        Relation::SaalschuetzFourTermLast,
        Relation::SaalschuetzThreeTerm,
        Relation::FourF3GeneralCompleted,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Relation::ThreeF2Term => "3f2-term",
            Relation::ThreeF2Shift => "3f2-shift",
            Relation::FourF3DenomShift => "4f3-denom-shift",
            Relation::FourF3DenomVanish => "4f3-denom-vanish",
            Relation::FourF3General => "4f3-general",
            Relation::SaalschuetzFourTermFirst => "saalschuetz-4term-first",
            Relation::SaalschuetzFourTermLast => "saalschuetz-4term-last",
            Relation::SaalschuetzThreeTerm => "saalschuetz-3term",
            Relation::FourF3GeneralCompleted => "4f3-general-completed",
        }
    }
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Reject parameters that would sit on (or hug) a denominator pole.
fn admissible_denor(b: Complex64) -> bool {
    let n = b.re.round();
    n > 0.5 || (b - c(n, 0.0)).norm() > 0.15
}

fn residual_of(terms: &[Complex64]) -> f64 {
    let total: Complex64 = terms.iter().sum();
    let scale = terms.iter().map(|t| t.norm()).fold(0.0f64, f64::max);
    if scale == 0.0 {
        0.0
    } else {
        total.norm() / scale
    }
}

/// Draw admissible parameters for `rel` and return the residual.
pub fn relation_residual(rel: Relation, rng: &mut impl Rng) -> Result<f64> {
    // Resample until the instance is admissible; relations are generic, so a
    // handful of retries suffices.
    for _ in 0..200 {
        if let Some(r) = try_relation(rel, rng)? {
            return Ok(r);
        }
    }
    unreachable!("admissible parameters exist for every relation");
}

fn try_relation(rel: Relation, rng: &mut impl Rng) -> Result<Option<f64>> {
    match rel {
        Relation::ThreeF2Term => three_f2_term(rng),
        Relation::ThreeF2Shift => three_f2_shift(rng),
        Relation::FourF3DenomShift => four_f3_denom_shift(rng),
        Relation::FourF3DenomVanish => four_f3_denom_vanish(rng),
        Relation::FourF3General => four_f3_general(rng, false),
        Relation::SaalschuetzFourTermFirst => saalschuetz_four(rng, true),
        Relation::SaalschuetzFourTermLast => saalschuetz_four(rng, false),
        Relation::SaalschuetzThreeTerm => saalschuetz_three(rng),
        Relation::FourF3GeneralCompleted => four_f3_general(rng, true),
    }
}

fn three_f2_term(rng: &mut impl Rng) -> Result<Option<f64>> {
    let a1 = c(-(rng.gen_range(1..=8) as f64), 0.0);
    let a2 = disk(rng, c(0.6, 0.3), 2.0);
    let a3 = disk(rng, c(-0.4, -0.5), 2.0);
    let b1 = disk(rng, c(3.1, 0.4), 2.0);
    let b2 = disk(rng, c(2.4, -0.7), 2.0);
    for b in [b1, b2] {
        if !admissible_denor(b) {
            return Ok(None);
        }
    }
    let f = |a3v: Complex64| pfq(&HypSpec::plain(&[a1, a2, a3v], &[b1, b2], ONE));
    let t0 = (a3 - b1 + 1.0) * (a3 - b2 + 1.0) * f(a3)?;
    let m = b1 * b2 + (a3 + 1.0) * (3.0 * a3 - 2.0 * b1 - 2.0 * b2 + 4.0)
        - (a3 - a2 + 1.0) * (a3 - a1 + 1.0);
    let t1 = -m * f(a3 + 1.0)?;
    let t2 = (a3 + 1.0) * (a3 + a2 + a1 - b1 - b2 + 2.0) * f(a3 + 2.0)?;
    Ok(Some(residual_of(&[t0, t1, t2])))
}

fn three_f2_shift(rng: &mut impl Rng) -> Result<Option<f64>> {
    let a1 = c(-(rng.gen_range(1..=8) as f64), 0.0);
    let a2 = disk(rng, c(0.8, -0.2), 2.0);
    let a3 = disk(rng, c(-0.3, 0.6), 2.0);
    let b1 = disk(rng, c(3.3, -0.5), 2.0);
    let b2 = disk(rng, c(2.2, 0.8), 2.0);
    for b in [b1, b2] {
        if !admissible_denor(b) {
            return Ok(None);
        }
    }
    let f = |n: &[Complex64]| pfq(&HypSpec::plain(n, &[b1, b2], ONE));
    let t0 = a1 * f(&[a1 + 1.0, a2, a3])?;
    let t1 = -a2 * f(&[a1, a2 + 1.0, a3])?;
    let t2 = (a2 - a1) * f(&[a1, a2, a3])?;
    Ok(Some(residual_of(&[t0, t1, t2])))
}

fn four_f3_denom_shift(rng: &mut impl Rng) -> Result<Option<f64>> {
    let n: i64 = rng.gen_range(-1..=2);
    let a = disk(rng, c(0.35, 0.3), 0.6);
    let b = disk(rng, c(0.55, -0.25), 0.6);
    let cc = disk(rng, c(-0.3, 0.2), 0.6);
    let d = disk(rng, c(0.6, 0.1), 0.6);
    let e = disk(rng, c(3.4, 0.3), 0.8);
    let f = disk(rng, c(3.8, -0.4), 0.8);
    let lhs_spec = HypSpec::star(&[a, b, cc, d], &[c(-n as f64, 0.0), e, f], ONE);
    if lhs_spec.margin() < 1.2 {
        return Ok(None);
    }
    let lhs = pfq(&lhs_spec)?;
    let shift = (n + 1) as f64;
    let mut poch = ONE;
    for p in [a, b, cc, d] {
        poch *= crate::special::pochhammer(p, (n + 1) as u32);
    }
    let rhs_spec = HypSpec::star(
        &[a + shift, b + shift, cc + shift, d + shift],
        &[c(shift + 1.0, 0.0), e + shift, f + shift],
        ONE,
    );
    let rhs = poch * pfq(&rhs_spec)?;
    Ok(Some(residual_of(&[lhs, -rhs])))
}

fn four_f3_denom_vanish(rng: &mut impl Rng) -> Result<Option<f64>> {
    let m = rng.gen_range(0..=4) as f64;
    let n = rng.gen_range(0..=4) as f64;
    let a = disk(rng, c(0.4, 0.5), 2.0);
    let b = disk(rng, c(-0.6, -0.3), 2.0);
    let cc = disk(rng, c(0.9, 0.2), 2.0);
    let d = disk(rng, c(2.9, 0.4), 2.0);
    let e = disk(rng, c(3.3, -0.6), 2.0);
    let v = pfq(&HypSpec::star(
        &[c(-m, 0.0), a, b, cc],
        &[c(-m - n, 0.0), d, e],
        ONE,
    ))?;
    // The value vanishes identically; report it on an absolute scale.
    Ok(Some(v.norm()))
}

/// The four-term dependence among contiguous 4F3, in plain or completed form.
fn four_f3_general(rng: &mut impl Rng, completed: bool) -> Result<Option<f64>> {
    let (a1, a2, a3, a4, b1, b2, b3, z);
    if completed {
        // Generic non-terminating instance at unit argument.
        a1 = disk(rng, c(0.45, 0.2), 2.0);
        a2 = disk(rng, c(-0.35, -0.4), 2.0);
        a3 = disk(rng, c(0.7, 0.5), 2.0);
        a4 = disk(rng, c(0.2, -0.6), 2.0);
        b1 = disk(rng, c(3.4, 0.4), 2.0);
        b2 = disk(rng, c(3.9, -0.3), 2.0);
        b3 = disk(rng, c(3.2, 0.5), 2.0);
        z = ONE;
        let margin = (b1 + b2 + b3 - a1 - a2 - a3 - a4).re;
        if !(2.4..14.0).contains(&margin) {
            return Ok(None);
        }
        for p in [a1, a2, a3, a4] {
            if as_nonpos_int(p).is_some() || (p - c(p.re.round(), 0.0)).norm() < 0.1 {
                return Ok(None);
            }
        }
    } else {
        a1 = c(-(rng.gen_range(1..=8) as f64), 0.0);
        a2 = disk(rng, c(0.5, 0.35), 2.0);
        a3 = disk(rng, c(-0.25, -0.55), 2.0);
        a4 = disk(rng, c(0.8, 0.15), 2.0);
        b1 = disk(rng, c(3.5, -0.4), 2.0);
        b2 = disk(rng, c(2.8, 0.6), 2.0);
        b3 = disk(rng, c(3.7, 0.2), 2.0);
        z = if rng.gen_bool(0.5) {
            ONE
        } else {
            disk(rng, c(0.3, 0.1), 0.4)
        };
    }
    for b in [b1, b2, b3] {
        if !admissible_denor(b) || !admissible_denor(b + 1.0) {
            return Ok(None);
        }
    }
    let f = |num: [Complex64; 4], den: [Complex64; 3]| -> Result<Complex64> {
        if completed {
            pfq(&HypSpec::dagger(&num, &den, z))
        } else {
            pfq(&HypSpec::plain(&num, &den, z))
        }
    };
    let c0 = a3 * a4 * (b2 - a2)
        + b1 * (a3 * (a2 - a4) + a2 * (a4 - b2))
        + a1 * (a3 * a4 + (a2 - a3 - a4) * b2 + b1 * (b2 - a2));
    let (k0, k1, k2, k3);
    if completed {
        k0 = c0;
        k1 = (a1 - b1) * (a2 - b2) * (b1 - b2);
        k2 = -(b1 - a1) * (a3 - b2) * (b2 - a4);
        k3 = -(a3 - b1) * (b1 - a4) * (a2 - b2);
    } else {
        k0 = b1 * b2 * c0;
        k1 = a3 * a4 * (a1 - b1) * (a2 - b2) * (b1 - b2);
        k2 = -a2 * b1 * (b1 - a1) * (a3 - b2) * (b2 - a4);
        k3 = -a1 * b2 * (a3 - b1) * (b1 - a4) * (a2 - b2);
    }
    let t0 = k0 * f([a1, a2, a3, a4], [b1, b2, b3])?;
    let t1 = k1 * f([a1, a2, a3 + 1.0, a4 + 1.0], [b1 + 1.0, b2 + 1.0, b3])?;
    let t2 = k2 * f([a1, a2 + 1.0, a3, a4], [b1, b2 + 1.0, b3])?;
    let t3 = k3 * f([a1 + 1.0, a2, a3, a4], [b1 + 1.0, b2, b3])?;
    Ok(Some(residual_of(&[t0, t1, t2, t3])))
}

fn saalschuetz_draw(
    rng: &mut impl Rng,
    first_terminating: bool,
) -> Option<(Complex64, Complex64, Complex64, Complex64, Complex64, Complex64, Complex64)> {
    let n = rng.gen_range(1..=8) as f64;
    let term = c(-n, 0.0);
    let g1 = disk(rng, c(0.55, 0.4), 2.0);
    let g2 = disk(rng, c(-0.45, -0.3), 2.0);
    let g3 = disk(rng, c(0.9, 0.25), 2.0);
    let (a1, a2, a3, a4) = if first_terminating {
        (term, g1, g2, g3)
    } else {
        (g1, g2, g3, term)
    };
    let b1 = disk(rng, c(2.3, 0.5), 2.0);
    let b2 = disk(rng, c(-1.7, -0.6), 2.0);
    // Balance rather than draw the last denominator parameter.
    let b3 = a1 + a2 + a3 + a4 + 1.0 - b1 - b2;
    for b in [b1, b2, b3] {
        if !admissible_denor(b) || !admissible_denor(b + 1.0) {
            return None;
        }
    }
    Some((a1, a2, a3, a4, b1, b2, b3))
}

fn saalschuetz_four(rng: &mut impl Rng, first: bool) -> Result<Option<f64>> {
    let Some((a1, a2, a3, a4, b1, b2, b3)) = saalschuetz_draw(rng, first) else {
        return Ok(None);
    };
    let f = |num: [Complex64; 4], den: [Complex64; 3]| {
        pfq(&HypSpec::plain(&num, &den, ONE))
    };
    let t0 = b1
        * b2
        * (a1 * a3 + a1 * a4 - a1 * b1 + a2 * a3 + a2 * a4 - a2 * b2 - a3 * a4)
        * f([a1, a2, a3, a4], [b1, b2, b3])?;
    let t1 = a3 * a4 * (a1 - b1) * (a2 - b2)
        * f([a1, a2, a3 + 1.0, a4 + 1.0], [b1 + 1.0, b2 + 1.0, b3])?;
    let t2 = -a2 * b1 * (a3 - b2) * (b2 - a4) * f([a1, a2 + 1.0, a3, a4], [b1, b2 + 1.0, b3])?;
    let t3 = -a1 * b2 * (a3 - b1) * (b1 - a4) * f([a1 + 1.0, a2, a3, a4], [b1 + 1.0, b2, b3])?;
    Ok(Some(residual_of(&[t0, t1, t2, t3])))
}

// The middle coefficient carries the opposite sign to the three-term
// relation as usually quoted; this is the variant forced by eliminating the
// four-index value between the Saalschuetzian four-term relation and the
// general dependence at unit argument, and it is the one that cancels.
fn saalschuetz_three(rng: &mut impl Rng) -> Result<Option<f64>> {
    let Some((a1, a2, a3, a4, b1, b2, b3)) = saalschuetz_draw(rng, false) else {
        return Ok(None);
    };
    let f = |num: [Complex64; 4], den: [Complex64; 3]| {
        pfq(&HypSpec::plain(&num, &den, ONE))
    };
    let t0 = b1
        * b2
        * (a1 * (a3 - b1) * (a4 - b1) - a2 * (a3 - b2) * (a4 - b2) - a1 * a2 * (b1 - b2))
        * f([a1, a2, a3, a4], [b1, b2, b3])?;
    let t1 = -a2 * b1 * (a1 - b2) * (a3 - b2) * (a4 - b2)
        * f([a1, a2 + 1.0, a3, a4], [b1, b2 + 1.0, b3])?;
    let t2 = a1 * b2 * (a2 - b1) * (a3 - b1) * (a4 - b1)
        * f([a1 + 1.0, a2, a3, a4], [b1 + 1.0, b2, b3])?;
    Ok(Some(residual_of(&[t0, t1, t2])))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampling;

    #[test]
    fn every_relation_cancels() {
        let mut rng = sampling::rng(2024);
        for rel in Relation::ALL {
            let mut worst = 0.0f64;
            for _ in 0..25 {
                worst = worst.max(relation_residual(rel, &mut rng).unwrap());
            }
            assert!(worst < 1e-9, "{} residual {worst:e}", rel.name());
        }
    }

    #[test]
    fn specific_examples() {
        // A 3f2-shift instance with a1 = -3 and a denominator-vanish point.
        let mut rng = sampling::rng(55);
        for _ in 0..5 {
            let r = relation_residual(Relation::ThreeF2Shift, &mut rng).unwrap();
            assert!(r <= 1e-9);
        }
        let mut rng2 = sampling::rng(56);
        for _ in 0..5 {
            let r = relation_residual(Relation::FourF3DenomVanish, &mut rng2).unwrap();
            assert!(r <= 1e-12);
        }
    }
}
