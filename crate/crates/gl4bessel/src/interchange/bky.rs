//! Case generation from the stationary-phase corollary.
//!
//! Phase terms are recorded only through the form of each variable's factor:
//!
//! ```text
//! 1: x/(1+x^2)   2: 1/(1+x^2)   3: sqrt(1+x^2)   4: 1/sqrt(1+x^2)
//! 5: x/sqrt(1+x^2)   6: x   7: absent
//! ```
//!
//! A term's potential size is the product of each factor's dyadic scale
//! `C_j^(e_j)`; differentiating in `x_v` shifts the exponent at `v`. For a
//! dyadic box with smalls `S` (where `C_j = 1`), the corollary says the
//! box is negligible unless one of: two not-might-be-small derivative terms
//! tie for the maximum and exceed 1, a might-be-small derivative term
//! dominates and exceeds 1, or every derivative term is O(1).

use super::linear::{feasible, simplify, Atom, Conj, Dnf, Rel};
use super::{InterchangeError, Result};
use serde::{Deserialize, Serialize};

/// Exponent of `C_j` in the potential size of each factor form.
pub const LOG_COEFS: [i64; 7] = [-1, -2, 1, -1, 0, 1, 0];
/// Same for the derivative of the factor, shifted by the `C_j` of the
/// corollary's normalization.
pub const DERV_LOG_COEFS: [i64; 7] = [-1, -2, 1, -1, -2, 1, 1];

/// Factor forms that may drop below their potential size when `C_j = 1`.
const SMALL_SENSITIVE: [u8; 3] = [1, 5, 6];
/// Same for the factor sitting in the derivative slot.
const SMALL_SENSITIVE_DERV: [u8; 4] = [1, 2, 3, 4];

/// One phase term: the factor form per variable.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PhaseTerm(pub Vec<u8>);

/// A phase: its terms plus the exponent vectors of the `y*` constraints.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Phase {
    /// Display labels of the coordinates (e.g. "1" for x_1).
    pub variables: Vec<String>,
    pub terms: Vec<PhaseTerm>,
    /// Each `y*_i <= O(1)` constraint as `sum_j e_j log C_j <= 0`.
    pub ystar: Vec<Vec<i64>>,
}

impl Phase {
    pub fn n(&self) -> usize {
        self.variables.len()
    }

    pub fn validate(&self) -> Result<()> {
        for t in &self.terms {
            if t.0.len() != self.n() || t.0.iter().any(|&f| !(1..=7).contains(&f)) {
                return Err(InterchangeError::BadPhase(
                    "term length or form index out of range".into(),
                ));
            }
        }
        for y in &self.ystar {
            if y.len() != self.n() {
                return Err(InterchangeError::BadPhase("ystar length mismatch".into()));
            }
        }
        Ok(())
    }
}

/// Coefficient vector of `log`(potential size) of `term`, differentiated in
/// `derivative` when given; `None` when the derivative vanishes (form 7).
pub fn potential_size_log(term: &PhaseTerm, derivative: Option<usize>) -> Option<Vec<i64>> {
    if let Some(v) = derivative {
        if term.0[v] == 7 {
            return None;
        }
    }
    Some(
        term.0
            .iter()
            .enumerate()
            .map(|(j, &f)| {
                if derivative == Some(j) {
                    DERV_LOG_COEFS[(f - 1) as usize]
                } else {
                    LOG_COEFS[(f - 1) as usize]
                }
            })
            .collect(),
    )
}

/// Whether the term's actual size can drop below its potential size on the
/// box: a small-index non-derivative slot with a sign-changing factor, or a
/// small derivative slot whose factor's derivative vanishes somewhere.
pub fn might_be_small(term: &PhaseTerm, smalls: &[usize], derivative: usize) -> bool {
    let non_derv = term
        .0
        .iter()
        .enumerate()
        .any(|(j, &f)| j != derivative && smalls.contains(&j) && SMALL_SENSITIVE.contains(&f));
    let derv = smalls.contains(&derivative) && SMALL_SENSITIVE_DERV.contains(&term.0[derivative]);
    non_derv || derv
}

fn atom_sub(coef: Vec<i64>, rel: Rel, smalls: &[usize]) -> Atom {
    Atom::new(coef, rel).substituted(smalls)
}

fn diff(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn neg(a: &[i64]) -> Vec<i64> {
    a.iter().map(|x| -x).collect()
}

/// The disjunction of surviving cases from differentiating the phase in
/// `var` on the box with the given smalls.
pub fn apply_bky(phase: &Phase, var: usize, smalls: &[usize]) -> Vec<Conj> {
    let mut large: Vec<Vec<i64>> = Vec::new();
    let mut small: Vec<Vec<i64>> = Vec::new();
    for term in &phase.terms {
        let Some(d) = potential_size_log(term, Some(var)) else {
            continue;
        };
        if might_be_small(term, smalls, var) {
            small.push(d);
        } else {
            large.push(d);
        }
    }
    let mut cases: Vec<Conj> = Vec::new();
    // (i) two not-might-be-small terms tie for the maximum and exceed 1.
    for i in 0..large.len() {
        for j in (i + 1)..large.len() {
            let mut atoms = vec![atom_sub(diff(&large[i], &large[j]), Rel::Eq, smalls)];
            for (k, lk) in large.iter().enumerate() {
                if k != i && k != j {
                    atoms.push(atom_sub(diff(lk, &large[i]), Rel::Le, smalls));
                }
            }
            atoms.push(atom_sub(neg(&large[i]), Rel::Lt, smalls));
            cases.push(Conj::of(atoms));
        }
    }
    // (ii) a might-be-small term dominates every large one and exceeds 1.
    for s in &small {
        let mut atoms: Vec<Atom> = large
            .iter()
            .map(|l| atom_sub(diff(l, s), Rel::Le, smalls))
            .collect();
        atoms.push(atom_sub(neg(s), Rel::Lt, smalls));
        cases.push(Conj::of(atoms));
    }
    // (iii) every derivative term is O(1).
    let atoms: Vec<Atom> = large
        .iter()
        .chain(small.iter())
        .map(|d| atom_sub(d.clone(), Rel::Le, smalls))
        .collect();
    cases.push(Conj::of(atoms));
    cases
}

/// Initial constraints of a box: `y*_i <= O(1)` and `C_j >= 1`.
pub fn initial_case(phase: &Phase, smalls: &[usize]) -> Conj {
    let n = phase.n();
    let mut atoms: Vec<Atom> = phase
        .ystar
        .iter()
        .map(|y| atom_sub(y.clone(), Rel::Le, smalls))
        .collect();
    for j in 0..n {
        let mut e = vec![0i64; n];
        e[j] = -1;
        atoms.push(atom_sub(e, Rel::Le, smalls));
    }
    Conj::of(atoms)
}

/// Result for one choice of smalls.
#[derive(Debug, Clone)]
pub struct CaseFamily {
    pub smalls: Vec<usize>,
    pub cases: Dnf,
}

/// The full report: every proper subset of variables as the smalls, with
/// the reduced non-trivial case expression (false cases omitted).
pub fn enumerate_cases(phase: &Phase, cap: usize) -> Result<Vec<CaseFamily>> {
    phase.validate()?;
    let n = phase.n();
    let subsets: Vec<Vec<usize>> = proper_subsets(n);
    let results: Vec<Result<Option<CaseFamily>>> = {
        use rayon::prelude::*;
        subsets
            .par_iter()
            .map(|smalls| reduce_subset(phase, smalls, cap))
            .collect()
    };
    let mut out = Vec::new();
    for r in results {
        if let Some(fam) = r? {
            out.push(fam);
        }
    }
    Ok(out)
}

fn reduce_subset(phase: &Phase, smalls: &[usize], cap: usize) -> Result<Option<CaseFamily>> {
    let n = phase.n();
    let init = initial_case(phase, smalls);
    if !feasible(&init) {
        return Ok(None);
    }
    let mut dnf = Dnf {
        conjs: vec![init],
    };
    // Process derivatives in ascending term-frequency order.
    let mut order: Vec<usize> = (0..n).collect();
    let freq = |v: usize| phase.terms.iter().filter(|t| t.0[v] != 7).count();
    order.sort_by_key(|&v| freq(v));
    for v in order {
        let branches = apply_bky(phase, v, smalls);
        dnf = dnf
            .and_disjunction(&branches, cap)
            .map_err(|size| InterchangeError::SizeBlowup {
                smalls: smalls.to_vec(),
                size,
            })?;
        if dnf.is_false() {
            return Ok(None);
        }
    }
    // Non-triviality: some non-small scale strictly exceeds 1.
    let mut nontrivial: Vec<Conj> = Vec::new();
    for j in 0..n {
        if smalls.contains(&j) {
            continue;
        }
        let mut e = vec![0i64; n];
        e[j] = -1;
        nontrivial.push(Conj::of(vec![Atom::new(e, Rel::Lt)]));
    }
    dnf = dnf
        .and_disjunction(&nontrivial, cap)
        .map_err(|size| InterchangeError::SizeBlowup {
            smalls: smalls.to_vec(),
            size,
        })?;
    if dnf.is_false() {
        return Ok(None);
    }
    // Reporting-quality simplification.
    let mut conjs = Vec::new();
    for c in &dnf.conjs {
        if let Some(s) = simplify(c) {
            conjs.push(s);
        }
    }
    conjs.sort();
    conjs.dedup();
    let mut kept: Vec<Conj> = Vec::new();
    'outer: for c in conjs {
        for k in &kept {
            if k.atoms.iter().all(|a| c.atoms.contains(a)) {
                continue 'outer;
            }
        }
        kept.retain(|k| !c.atoms.iter().all(|a| k.atoms.contains(a)));
        kept.push(c);
    }
    if kept.is_empty() {
        return Ok(None);
    }
    Ok(Some(CaseFamily {
        smalls: smalls.to_vec(),
        cases: Dnf { conjs: kept },
    }))
}

/// All subsets of `{0, .., n-1}` except the full set, smallest first.
pub fn proper_subsets(n: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = (0u32..(1 << n) - 1)
        .map(|mask| (0..n).filter(|j| mask & (1 << j) != 0).collect())
        .collect();
    out.sort_by_key(|s: &Vec<usize>| (s.len(), s.clone()));
    out
}
