//! Structural validation of the operator encodings.
//!
//! `data/operator_terms.txt` lists every operator term in raw
//! `coefficient ; y-monomial ; derivative-monomial` form, one line per
//! printed monomial. The checker re-expands each Euler-form operator into
//! that basis (falling-factorial coefficients) and compares term by term,
//! so a transcription slip in either direction fails loudly.

use super::operators::EulerOperator;
use super::{DiffOpsError, Result};
use crate::weyl::WeylElement;
use num_complex::Complex64;
use std::collections::HashMap;
use std::f64::consts::PI;

pub const TABLE: &str = include_str!("../../data/operator_terms.txt");

#[derive(Debug, Clone, PartialEq)]
pub struct TableTerm {
    pub op_id: String,
    /// Exponents of (y1, y2, y3).
    pub y_exp: [usize; 3],
    /// Exponents of (d/dy1, d/dy2, d/dy3).
    pub d_exp: [usize; 3],
    pub coeff: String,
}

/// Parse the shipped table.
pub fn parse_table(text: &str) -> Vec<TableTerm> {
    let mut out = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let parts: Vec<&str> = line.split(';').map(str::trim).collect();
        assert_eq!(parts.len(), 4, "bad table line: {line}");
        out.push(TableTerm {
            op_id: parts[0].to_string(),
            coeff: parts[1].to_string(),
            y_exp: parse_monomial(parts[2], 'y'),
            d_exp: parse_monomial(parts[3], 'd'),
        });
    }
    out
}

fn parse_monomial(text: &str, kind: char) -> [usize; 3] {
    let mut e = [0usize; 3];
    for tok in text.split_whitespace() {
        let rest = tok.strip_prefix(kind).unwrap_or_else(|| {
            panic!("token {tok} does not start with {kind}");
        });
        let (var, pow) = match rest.split_once('^') {
            Some((v, p)) => (v, p.parse::<usize>().unwrap()),
            None => (rest, 1),
        };
        let i: usize = var.parse().unwrap();
        e[i - 1] += pow;
    }
    e
}

fn eval_coeff(expr: &str, lambda: &[Complex64; 4]) -> Complex64 {
    let (l2, l3, l4) = (lambda[1], lambda[2], lambda[3]);
    let symbol = |name: &str| -> Complex64 {
        match name {
            "l2" => l2,
            "l3" => l3,
            "l4" => l4,
            "l2^2" => l2 * l2,
            "l3^2" => l3 * l3,
            "pi2" => Complex64::new(PI * PI, 0.0),
            "pi3i" => Complex64::new(0.0, PI.powi(3)),
            "pi4" => Complex64::new(PI.powi(4), 0.0),
            other => {
                if let Some((p, q)) = other.split_once('/') {
                    Complex64::new(p.parse::<f64>().unwrap() / q.parse::<f64>().unwrap(), 0.0)
                } else {
                    Complex64::new(other.parse::<f64>().unwrap(), 0.0)
                }
            }
        }
    };
    // Sum of signed products: split on +/- at top level (no parentheses in
    // the grammar), then on '*'.
    let mut total = Complex64::new(0.0, 0.0);
    let cleaned = expr.replace(" - ", " +-");
    for raw in cleaned.split(" +") {
        let raw = raw.trim();
        if raw.is_empty() {
            continue;
        }
        let (sign, body) = match raw.strip_prefix('-') {
            Some(b) => (-1.0, b),
            None => (1.0, raw),
        };
        let mut prod = Complex64::new(sign, 0.0);
        for f in body.split('*') {
            prod *= symbol(f.trim());
        }
        total += prod;
    }
    total
}

type TermMap = HashMap<([usize; 3], [usize; 3]), Complex64>;

fn table_map(op_id: &str, lambda: &[Complex64; 4]) -> TermMap {
    let mut map: TermMap = HashMap::new();
    for t in parse_table(TABLE) {
        if t.op_id == op_id {
            *map.entry((t.y_exp, t.d_exp))
                .or_insert(Complex64::new(0.0, 0.0)) += eval_coeff(&t.coeff, lambda);
        }
    }
    map
}

fn operator_map(op: &EulerOperator, w: &WeylElement) -> TermMap {
    let free = w.free_coords();
    let mut map: TermMap = HashMap::new();
    for term in &op.terms {
        for (k, coeff) in term.poly.falling_basis() {
            let mut yk = [0usize; 3];
            let mut dk = [0usize; 3];
            for axis in 0..op.dim {
                yk[free[axis]] = term.shift[axis] as usize + k[axis];
                dk[free[axis]] = k[axis];
            }
            *map.entry((yk, dk)).or_insert(Complex64::new(0.0, 0.0)) += coeff;
        }
    }
    map.retain(|_, v| v.norm() > 1e-10);
    map
}

/// Compare the Euler encodings of `w` against the shipped term table at the
/// given eigenvalues; returns the worst absolute coefficient mismatch.
pub fn check_against_table(
    w: &WeylElement,
    ops: &[EulerOperator],
    lambda: &[Complex64; 4],
) -> Result<f64> {
    let mut worst = 0.0f64;
    for op in ops {
        let expect = table_map(op.id, lambda);
        if expect.is_empty() {
            return Err(DiffOpsError::Unsupported(format!(
                "operator {} missing from table",
                op.id
            )));
        }
        let got = operator_map(op, w);
        let keys: std::collections::HashSet<_> =
            expect.keys().chain(got.keys()).cloned().collect();
        for key in keys {
            let a = expect.get(&key).copied().unwrap_or(Complex64::new(0.0, 0.0));
            let b = got.get(&key).copied().unwrap_or(Complex64::new(0.0, 0.0));
            worst = worst.max((a - b).norm());
        }
    }
    Ok(worst)
}
