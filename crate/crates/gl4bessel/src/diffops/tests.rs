use super::*;
use crate::frobenius::coefficient_lattice;
use crate::sampling;
use crate::weyl::{lambda_eigen, WeylElement};
use num_complex::Complex64;

fn w(name: &str) -> WeylElement {
    WeylElement::parse(name).unwrap()
}

fn series_elements() -> Vec<WeylElement> {
    ["31", "22", "121", "211", "1111"]
        .iter()
        .map(|n| w(n))
        .collect()
}

#[test]
fn encodings_match_term_table() {
    let mut rng = sampling::rng(71);
    let mu = sampling::tempered_mu(&mut rng);
    let lambda = lambda_eigen(&mu);
    for el in series_elements() {
        let ops = operators_for(&el, &lambda).unwrap();
        let worst = check_against_table(&el, &ops, &lambda).unwrap();
        assert!(worst < 1e-10, "{el} table mismatch {worst:e}");
    }
}

#[test]
fn zero_operator_annihilates() {
    let op = EulerOperator {
        id: "zero",
        dim: 1,
        terms: vec![],
    };
    let mut rng = sampling::rng(72);
    let mu = sampling::tempered_mu(&mut rng);
    let series = coefficient_lattice(&w("31"), &mu, 5).unwrap();
    let out = apply_operator(&op, &series, &[Complex64::new(0.3, 0.0)]).unwrap();
    assert!(out.data.iter().all(|v| v.norm() == 0.0));
}

#[test]
fn euler_operator_on_monomials() {
    // theta applied to |y|^alpha sum a_m y^m multiplies a_m by (alpha + m).
    let op = EulerOperator {
        id: "theta",
        dim: 1,
        terms: vec![OperatorTerm {
            shift: vec![0],
            poly: ThetaPoly::linear(1, 0, 0.0),
        }],
    };
    let mut series = crate::frobenius::CoeffLattice::zeros(&[4]);
    for m in 0..4i64 {
        series.set(&[m], Complex64::new(1.0 + m as f64, -0.5));
    }
    let alpha = Complex64::new(0.25, 1.5);
    let out = apply_operator(&op, &series, &[alpha]).unwrap();
    for m in 0..4i64 {
        let expect = (alpha + m as f64) * series.get(&[m]);
        assert!((out.get(&[m]) - expect).norm() < 1e-14);
    }
}

#[test]
fn series_are_annihilated() {
    let mut rng = sampling::rng(73);
    for el in series_elements() {
        let order = if el.name() == "1111" { 4 } else { 6 };
        let mut worst = 0.0f64;
        for _ in 0..3 {
            let mu = sampling::tempered_mu(&mut rng);
            worst = worst.max(annihilation_residual(&el, &mu, order).unwrap());
        }
        assert!(worst < 1e-9, "{el}: residual {worst:e}");
    }
}

fn operator_lambda(mu: &[Complex64; 4]) -> [Complex64; 4] {
    let l = lambda_eigen(mu);
    [l[0], l[1], l[2], -l[3]]
}

#[test]
fn perturbation_breaks_annihilation() {
    let mut rng = sampling::rng(74);
    let mu = sampling::tempered_mu(&mut rng);
    let el = w("31");
    let lambda = operator_lambda(&mu);
    let ops = operators_for(&el, &lambda).unwrap();
    let mut series = coefficient_lattice(&el, &mu, 6).unwrap();
    let bump = series.get(&[2]) * (1.0 + 1e-3);
    series.set(&[2], bump);
    let alpha = crate::frobenius::leading_exponents(&el, &mu).unwrap();
    let r = operator_residual(&ops[0], &series, &alpha).unwrap();
    assert!(r >= 1e-5, "perturbed residual only {r:e}");
}

#[test]
fn w31_operator_reproduces_its_recurrence() {
    // The (3,1) Euler polynomial at exponent 3/2 - mu4 + m must equal
    // 4 m (mu1-mu4+m)(mu2-mu4+m)(mu3-mu4+m), which against the shift term
    // 64 pi^4 and the coefficient ratio -m prod / (16 pi^4) is exactly the
    // one-step recurrence.
    let mut rng = sampling::rng(75);
    let mu = sampling::tempered_mu(&mut rng);
    let lambda = operator_lambda(&mu);
    let ops = operators_for(&w("31"), &lambda).unwrap();
    let p0 = &ops[0].terms[0].poly;
    for m in 0..6 {
        let x = Complex64::new(1.5, 0.0) - mu[3] + m as f64;
        let got = p0.eval(&[x]);
        let expect = 4.0
            * Complex64::new(m as f64, 0.0)
            * (mu[0] - mu[3] + m as f64)
            * (mu[1] - mu[3] + m as f64)
            * (mu[2] - mu[3] + m as f64);
        assert!(
            (got - expect).norm() < 1e-9 * expect.norm().max(1.0),
            "m = {m}: {got} vs {expect}"
        );
    }
}

#[test]
fn kernel_dimension_vandermonde() {
    // The four (3,1) leading exponents 3/2 - mu_j are pairwise distinct for
    // distinct parameters, so the four coset series are independent.
    let mut rng = sampling::rng(76);
    let mu = sampling::tempered_mu(&mut rng);
    for j in 0..4 {
        for k in (j + 1)..4 {
            assert!((mu[j] - mu[k]).norm() > 1e-4);
        }
    }
}
