//! The interchange-of-integrals case prover.
//!
//! For each Weyl element's oscillatory phase and each choice of "small"
//! dyadic scales, the stationary-phase corollary turns non-negligibility
//! into a Boolean combination of exact linear constraints on the `log C_j`.
//! The prover reduces that combination over the rationals and reports the
//! surviving non-trivial cases; for the built-in phases those reports are
//! pinned to the known case lists.

mod bky;
mod linear;
mod phases;

pub use bky::{
    apply_bky, enumerate_cases, initial_case, might_be_small, potential_size_log,
    proper_subsets, CaseFamily, Phase, PhaseTerm,
};
pub use linear::{feasible, implied, simplify, Atom, Conj, Dnf, Rel};
pub use phases::{builtin, phase_w1111, phase_w121, phase_w211, phase_w22, phase_w41};

use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum InterchangeError {
    #[error("malformed phase: {0}")]
    BadPhase(String),
    #[error("DNF exceeded the size cap at {size} conjuncts (smalls {smalls:?})")]
    SizeBlowup { smalls: Vec<usize>, size: usize },
}

pub type Result<T> = std::result::Result<T, InterchangeError>;

/// Default cap on intermediate DNF sizes.
pub const DNF_CAP: usize = 1_000_000;

/// Render an atom over the phase's variable labels, e.g. `logC3 - logC4 = 0`.
pub fn render_atom(atom: &Atom, labels: &[String]) -> String {
    use num_traits::Zero;
    let mut lhs = String::new();
    for (j, c) in atom.coef.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mag = c.magnitude().to_string();
        let sign = if c < &num_bigint::BigInt::zero() { "-" } else { "+" };
        if lhs.is_empty() {
            if sign == "-" {
                lhs.push('-');
            }
        } else {
            lhs.push_str(&format!(" {sign} "));
        }
        if mag != "1" {
            lhs.push_str(&format!("{mag}*"));
        }
        lhs.push_str(&format!("logC{}", labels[j]));
    }
    if lhs.is_empty() {
        lhs.push('0');
    }
    let rel = match atom.rel {
        Rel::Le => "<=",
        Rel::Lt => "<",
        Rel::Eq => "=",
    };
    format!("{lhs} {rel} 0")
}

/// Render one case family for the CLI report.
pub fn render_family(family: &CaseFamily, labels: &[String]) -> String {
    let smalls: Vec<String> = family
        .smalls
        .iter()
        .map(|&j| format!("C{} = 1", labels[j]))
        .collect();
    let mut out = format!(
        "smalls: {{{}}}\n",
        if smalls.is_empty() {
            "none".to_string()
        } else {
            smalls.join(", ")
        }
    );
    for (k, conj) in family.cases.conjs.iter().enumerate() {
        let atoms: Vec<String> = conj.atoms.iter().map(|a| render_atom(a, labels)).collect();
        out.push_str(&format!("  case {}: {}\n", k + 1, atoms.join("  and  ")));
    }
    out
}

#[cfg(test)]
mod tests;
