//! Transcriptions of the printed operator displays into Euler form.

use super::poly::ThetaPoly;
use super::{DiffOpsError, Result};
use crate::weyl::WeylElement;
use num_complex::Complex64;
use std::f64::consts::PI;

/// One term `y^shift P(theta)`.
#[derive(Debug, Clone)]
pub struct OperatorTerm {
    pub shift: Vec<i64>,
    pub poly: ThetaPoly,
}

/// An operator as a sum of shifted Euler-polynomial terms.
#[derive(Debug, Clone)]
pub struct EulerOperator {
    pub id: &'static str,
    pub dim: usize,
    pub terms: Vec<OperatorTerm>,
}

impl EulerOperator {
    fn new(id: &'static str, dim: usize) -> Self {
        EulerOperator {
            id,
            dim,
            terms: Vec::new(),
        }
    }

    fn push(&mut self, shift: &[i64], poly: ThetaPoly) {
        assert_eq!(shift.len(), self.dim);
        self.terms.push(OperatorTerm {
            shift: shift.to_vec(),
            poly,
        });
    }
}

fn re(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// The operators annihilating the series of `w`, at eigenvalues
/// `lambda = (lambda_1, .., lambda_4)`.
pub fn operators_for(
    w: &WeylElement,
    lambda: &[Complex64; 4],
) -> Result<Vec<EulerOperator>> {
    let (l2, l3, l4) = (lambda[1], lambda[2], lambda[3]);
    let pi2 = PI * PI;
    let pi3i = Complex64::new(0.0, PI.powi(3));
    let pi4 = PI.powi(4);
    match w.name().as_str() {
        "31" => {
            let d = 1;
            let ff = |v, k| ThetaPoly::falling(d, v, k);
            let cn = |z: Complex64| ThetaPoly::constant(d, z);
            let mut op = EulerOperator::new("31.1", d);
            op.push(
                &[0],
                ff(0, 4)
                    .scale(re(4.0))
                    .add(&ff(0, 2).scale(4.0 * l2))
                    .add(&ff(0, 1).scale(4.0 * l3 - 8.0 * l2))
                    .add(&cn(-4.0 * l4 - 6.0 * l3 + 2.0 * l2 * l2 - l2)),
            );
            op.push(&[1], cn(re(64.0 * pi4)));
            Ok(vec![op])
        }
        "22" => {
            let d = 1;
            let ff = |v, k| ThetaPoly::falling(d, v, k);
            let cn = |z: Complex64| ThetaPoly::constant(d, z);
            let mut op = EulerOperator::new("22.1", d);
            op.push(
                &[0],
                ff(0, 6)
                    .add(&ff(0, 5).scale(re(3.0)))
                    .add(&ff(0, 4).scale(2.0 * l2))
                    .add(&ff(0, 3).scale(-4.0 * l2))
                    .add(&ff(0, 2).scale(4.0 * l4 - l2 * l2 + 19.0 * l2))
                    .add(&ff(0, 1).scale(-12.0 * l4 + 3.0 * l2 * l2 - 45.0 * l2))
                    .add(&cn(16.0 * l4 - l3 * l3 - 4.0 * l2 * l2 + 52.0 * l2)),
            );
            op.push(
                &[1],
                ff(0, 2)
                    .scale(re(-64.0 * pi4))
                    .add(&ff(0, 1).scale(re(96.0 * pi4)))
                    .add(&cn(re(-96.0 * pi4))),
            );
            Ok(vec![op])
        }
        "121" => {
            // Axes: (y1, y3).
            let d = 2;
            let ff = |v, k| ThetaPoly::falling(d, v, k);
            let cn = |z: Complex64| ThetaPoly::constant(d, z);
            let mut op1 = EulerOperator::new("121.1", d);
            op1.push(
                &[0, 0],
                ff(0, 3)
                    .add(&ff(1, 3).scale(re(-1.0)))
                    .add(&ff(0, 2).mul(&ff(1, 1)).scale(re(-1.0)))
                    .add(&ff(0, 1).mul(&ff(1, 2)))
                    .add(&ff(0, 1).scale(l2))
                    .add(&ff(1, 1).scale(-l2))
                    .add(&cn(-l3)),
            );
            op1.push(&[1, 0], cn(-8.0 * pi3i));
            op1.push(&[0, 1], cn(-8.0 * pi3i));
            let mut op2 = EulerOperator::new("121.2", d);
            op2.push(
                &[0, 0],
                ff(0, 4)
                    .scale(re(4.0))
                    .add(&ff(0, 2).scale(4.0 * l2))
                    .add(&ff(0, 1).scale(-4.0 * l3 - 8.0 * l2))
                    .add(&cn(-4.0 * l4 + 6.0 * l3 + 2.0 * l2 * l2 - l2)),
            );
            op2.push(
                &[1, 0],
                ff(1, 1)
                    .scale(-32.0 * pi3i)
                    .add(&ff(0, 1).scale(-32.0 * pi3i))
                    .add(&cn(64.0 * pi3i)),
            );
            Ok(vec![op1, op2])
        }
        "211" => {
            // Axes: (y2, y3).
            let d = 2;
            let ff = |v, k| ThetaPoly::falling(d, v, k);
            let cn = |z: Complex64| ThetaPoly::constant(d, z);
            let mut op1 = EulerOperator::new("211.1", d);
            op1.push(
                &[0, 0],
                ff(1, 2)
                    .scale(re(4.0))
                    .add(&ff(0, 3).scale(re(-1.0)))
                    .add(&ff(0, 1).mul(&ff(1, 2)).scale(re(-2.0)))
                    .add(&ff(0, 2).mul(&ff(1, 1)).scale(re(2.0)))
                    .add(&ff(0, 1).mul(&ff(1, 1)).scale(re(-2.0)))
                    .add(&ff(0, 1).scale(-l2))
                    .add(&cn(-l3 + 2.0 * l2)),
            );
            op1.push(&[0, 1], ff(0, 1).scale(re(8.0 * pi2)).add(&cn(re(-16.0 * pi2))));
            op1.push(&[1, 0], cn(-8.0 * pi3i));
            let mut op2 = EulerOperator::new("211.2", d);
            op2.push(
                &[0, 0],
                ff(0, 3)
                    .scale(re(-4.0))
                    .add(&ff(1, 4).scale(re(-4.0)))
                    .add(&ff(0, 2).mul(&ff(1, 1)).scale(re(8.0)))
                    .add(&ff(0, 1).mul(&ff(1, 2)).scale(re(-8.0)))
                    .add(&ff(0, 1).mul(&ff(1, 1)).scale(re(-8.0)))
                    .add(&ff(1, 2).scale(re(16.0) - 4.0 * l2))
                    .add(&ff(0, 1).scale(-4.0 * l2))
                    .add(&ff(1, 1).scale(-4.0 * l3 + 8.0 * l2))
                    .add(&cn(9.0 * l2 - 2.0 * l2 * l2 + 2.0 * l3 + 4.0 * l4)),
            );
            op2.push(
                &[0, 1],
                ff(0, 2)
                    .scale(re(16.0 * pi2))
                    .add(&ff(1, 2).scale(re(32.0 * pi2)))
                    .add(&ff(1, 1).scale(re(-32.0 * pi2)))
                    .add(&cn(16.0 * pi2 * l2 - re(32.0 * pi2))),
            );
            op2.push(&[1, 0], cn(-32.0 * pi3i));
            op2.push(&[0, 2], cn(re(-64.0 * pi4)));
            Ok(vec![op1, op2])
        }
        "1111" => {
            let d = 3;
            let ff = |v, k| ThetaPoly::falling(d, v, k);
            let cn = |z: Complex64| ThetaPoly::constant(d, z);
            let mut casimir2 = EulerOperator::new("1111.1", d);
            casimir2.push(
                &[0, 0, 0],
                ff(0, 2)
                    .scale(re(-1.0))
                    .add(&ff(1, 2).scale(re(-1.0)))
                    .add(&ff(2, 2).scale(re(-1.0)))
                    .add(&ff(0, 1).mul(&ff(1, 1)))
                    .add(&ff(1, 1).mul(&ff(2, 1)))
                    .add(&cn(-l2)),
            );
            casimir2.push(&[1, 0, 0], cn(re(4.0 * pi2)));
            casimir2.push(&[0, 1, 0], cn(re(4.0 * pi2)));
            casimir2.push(&[0, 0, 1], cn(re(4.0 * pi2)));

            let mut casimir3 = EulerOperator::new("1111.2", d);
            casimir3.push(
                &[0, 0, 0],
                ff(0, 2)
                    .mul(&ff(1, 1))
                    .add(&ff(0, 2).scale(re(-2.0)))
                    .add(&ff(0, 1).mul(&ff(1, 2)).scale(re(-1.0)))
                    .add(&ff(0, 1).mul(&ff(1, 1)))
                    .add(&ff(1, 2).mul(&ff(2, 1)))
                    .add(&ff(1, 1).mul(&ff(2, 2)).scale(re(-1.0)))
                    .add(&ff(1, 1).mul(&ff(2, 1)).scale(re(-1.0)))
                    .add(&ff(2, 2).scale(re(2.0)))
                    .add(&cn(-l3)),
            );
            casimir3.push(
                &[1, 0, 0],
                ff(1, 1).scale(re(-4.0 * pi2)).add(&cn(re(8.0 * pi2))),
            );
            casimir3.push(
                &[0, 1, 0],
                ff(0, 1)
                    .scale(re(4.0 * pi2))
                    .add(&ff(2, 1).scale(re(-4.0 * pi2))),
            );
            casimir3.push(
                &[0, 0, 1],
                ff(1, 1).scale(re(4.0 * pi2)).add(&cn(re(-8.0 * pi2))),
            );

            let mut casimir4 = EulerOperator::new("1111.3", d);
            casimir4.push(
                &[0, 0, 0],
                ff(0, 4)
                    .scale(re(0.5))
                    .add(&ff(0, 3).mul(&ff(1, 1)).scale(re(-1.0)))
                    .add(&ff(0, 3).scale(re(2.0)))
                    .add(&ff(0, 2).mul(&ff(1, 2)).scale(re(1.5)))
                    .add(&ff(0, 1).mul(&ff(1, 3)).scale(re(-1.0)))
                    .add(&ff(0, 2).mul(&ff(1, 1)).scale(re(-3.0)))
                    .add(&ff(0, 2).scale(re(17.0 / 4.0)))
                    .add(&ff(1, 2).scale(re(5.0 / 4.0)))
                    .add(&ff(0, 1).mul(&ff(1, 1)).scale(re(-5.0 / 4.0)))
                    .add(&ff(1, 4).scale(re(0.5)))
                    .add(&ff(1, 3).mul(&ff(2, 1)).scale(re(-1.0)))
                    .add(&ff(1, 3).scale(re(2.0)))
                    .add(&ff(1, 2).mul(&ff(2, 2)).scale(re(1.5)))
                    .add(&ff(1, 1).mul(&ff(2, 3)).scale(re(-1.0)))
                    .add(&ff(2, 2).scale(re(17.0 / 4.0)))
                    .add(&ff(1, 1).mul(&ff(2, 2)).scale(re(-3.0)))
                    .add(&ff(1, 1).mul(&ff(2, 1)).scale(re(-5.0 / 4.0)))
                    .add(&ff(2, 4).scale(re(0.5)))
                    .add(&ff(2, 3).scale(re(2.0)))
                    .add(&cn(-l4)),
            );
            casimir4.push(&[2, 0, 0], cn(re(8.0 * pi4)));
            casimir4.push(&[0, 2, 0], cn(re(8.0 * pi4)));
            casimir4.push(&[0, 0, 2], cn(re(8.0 * pi4)));
            casimir4.push(&[1, 1, 0], cn(re(16.0 * pi4)));
            casimir4.push(&[0, 1, 1], cn(re(16.0 * pi4)));
            casimir4.push(
                &[1, 0, 0],
                cn(re(-13.0 * pi2))
                    .add(&ff(0, 2).scale(re(-4.0 * pi2)))
                    .add(&ff(1, 2).scale(re(-4.0 * pi2)))
                    .add(&ff(1, 1).scale(re(8.0 * pi2)))
                    .add(&ff(0, 1).scale(re(-4.0 * pi2)))
                    .add(&ff(0, 1).mul(&ff(1, 1)).scale(re(4.0 * pi2))),
            );
            casimir4.push(
                &[0, 1, 0],
                cn(re(-pi2))
                    .add(&ff(0, 2).scale(re(-4.0 * pi2)))
                    .add(&ff(1, 2).scale(re(-4.0 * pi2)))
                    .add(&ff(2, 2).scale(re(-4.0 * pi2)))
                    .add(&ff(0, 1).mul(&ff(2, 1)).scale(re(4.0 * pi2)))
                    .add(&ff(1, 1).scale(re(-4.0 * pi2)))
                    .add(&ff(0, 1).scale(re(-4.0 * pi2)))
                    .add(&ff(0, 1).mul(&ff(1, 1)).scale(re(4.0 * pi2)))
                    .add(&ff(1, 1).mul(&ff(2, 1)).scale(re(4.0 * pi2)))
                    .add(&ff(2, 1).scale(re(-4.0 * pi2))),
            );
            casimir4.push(
                &[0, 0, 1],
                cn(re(-13.0 * pi2))
                    .add(&ff(1, 2).scale(re(-4.0 * pi2)))
                    .add(&ff(2, 2).scale(re(-4.0 * pi2)))
                    .add(&ff(1, 1).scale(re(8.0 * pi2)))
                    .add(&ff(2, 1).scale(re(-4.0 * pi2)))
                    .add(&ff(1, 1).mul(&ff(2, 1)).scale(re(4.0 * pi2))),
            );
            Ok(vec![casimir2, casimir3, casimir4])
        }
        name => Err(DiffOpsError::Unsupported(name.to_string())),
    }
}
