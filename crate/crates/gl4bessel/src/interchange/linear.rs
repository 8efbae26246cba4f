//! Exact homogeneous linear arithmetic over the dyadic-scale logarithms.
//!
//! Atoms are integer-coefficient constraints `sum c_j L_j rel 0` with
//! `rel` one of `<=`, `<`, `=`. Everything in the case analysis is
//! homogeneous, so Fourier-Motzkin elimination over the integers (with
//! gcd reduction) decides feasibility exactly.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Rel {
    Le,
    Lt,
    Eq,
}

/// One homogeneous constraint `expr rel 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Atom {
    pub coef: Vec<BigInt>,
    pub rel: Rel,
}

impl Atom {
    pub fn new(coef: Vec<i64>, rel: Rel) -> Atom {
        Atom {
            coef: coef.into_iter().map(BigInt::from).collect(),
            rel,
        }
        .normalized()
    }

    pub fn from_big(coef: Vec<BigInt>, rel: Rel) -> Atom {
        Atom { coef, rel }.normalized()
    }

    fn normalized(mut self) -> Atom {
        let mut g = BigInt::zero();
        for c in &self.coef {
            g = gcd(&g, c);
        }
        if !g.is_zero() {
            for c in &mut self.coef {
                *c = &*c / &g;
            }
        }
        // Equalities get a canonical sign.
        if self.rel == Rel::Eq {
            if let Some(first) = self.coef.iter().find(|c| !c.is_zero()) {
                if first.is_negative() {
                    for c in &mut self.coef {
                        *c = -&*c;
                    }
                }
            }
        }
        self
    }

    pub fn is_zero_row(&self) -> bool {
        self.coef.iter().all(|c| c.is_zero())
    }

    /// For a zero row, is the constraint satisfied?
    fn zero_row_ok(&self) -> bool {
        self.rel != Rel::Lt
    }

    /// Substitute `L_j = 0` for every `j` in `smalls`.
    pub fn substituted(&self, smalls: &[usize]) -> Atom {
        let mut coef = self.coef.clone();
        for &j in smalls {
            coef[j] = BigInt::zero();
        }
        Atom {
            coef,
            rel: self.rel,
        }
        .normalized()
    }

    /// Negations: `!(e <= 0)` is `-e < 0`; `!(e < 0)` is `-e <= 0`;
    /// `!(e = 0)` splits into two strict branches.
    pub fn negations(&self) -> Vec<Atom> {
        let flip = |rel| Atom {
            coef: self.coef.iter().map(|c| -c).collect(),
            rel,
        }
        .normalized();
        match self.rel {
            Rel::Le => vec![flip(Rel::Lt)],
            Rel::Lt => vec![flip(Rel::Le)],
            Rel::Eq => vec![
                Atom {
                    coef: self.coef.clone(),
                    rel: Rel::Lt,
                }
                .normalized(),
                flip(Rel::Lt),
            ],
        }
    }
}

fn gcd(a: &BigInt, b: &BigInt) -> BigInt {
    let (mut a, mut b) = (a.abs(), b.abs());
    while !b.is_zero() {
        let r = &a % &b;
        a = b;
        b = r;
    }
    a
}

/// A conjunction of atoms, kept sorted and deduplicated.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Conj {
    pub atoms: Vec<Atom>,
}

impl Conj {
    pub fn truth() -> Conj {
        Conj { atoms: Vec::new() }
    }

    pub fn of(atoms: Vec<Atom>) -> Conj {
        let mut c = Conj { atoms };
        c.canonicalize();
        c
    }

    fn canonicalize(&mut self) {
        self.atoms.retain(|a| !(a.is_zero_row() && a.zero_row_ok()));
        self.atoms.sort();
        self.atoms.dedup();
    }

    pub fn and_atom(&self, atom: &Atom) -> Conj {
        let mut atoms = self.atoms.clone();
        atoms.push(atom.clone());
        Conj::of(atoms)
    }

    pub fn and(&self, other: &Conj) -> Conj {
        let mut atoms = self.atoms.clone();
        atoms.extend(other.atoms.iter().cloned());
        Conj::of(atoms)
    }
}

/// Exact feasibility of a conjunction over the reals.
pub fn feasible(conj: &Conj) -> bool {
    let mut atoms: Vec<Atom> = conj.atoms.clone();
    // Zero rows.
    for a in &atoms {
        if a.is_zero_row() && !a.zero_row_ok() {
            return false;
        }
    }
    atoms.retain(|a| !a.is_zero_row());
    if atoms.is_empty() {
        return true;
    }
    let n = atoms[0].coef.len();
    let mut alive: Vec<bool> = vec![true; n];

    // Gaussian elimination on the equalities.
    loop {
        let Some(eq_pos) = atoms
            .iter()
            .position(|a| a.rel == Rel::Eq && !a.is_zero_row())
        else {
            break;
        };
        let eq = atoms.swap_remove(eq_pos);
        let pivot = eq.coef.iter().position(|c| !c.is_zero()).unwrap();
        let pc = eq.coef[pivot].clone();
        for a in &mut atoms {
            if a.coef[pivot].is_zero() {
                continue;
            }
            let scale = a.coef[pivot].clone();
            // |pc| * a - sign(pc) * scale * eq keeps the direction of a.
            let s = if pc.is_negative() {
                -BigInt::from(1)
            } else {
                BigInt::from(1)
            };
            let coef: Vec<BigInt> = a
                .coef
                .iter()
                .zip(&eq.coef)
                .map(|(ac, ec)| ac * pc.abs() - &s * &scale * ec)
                .collect();
            *a = Atom { coef, rel: a.rel }.normalized();
        }
        alive[pivot] = false;
        for a in &atoms {
            if a.is_zero_row() && !a.zero_row_ok() {
                return false;
            }
        }
        atoms.retain(|a| !a.is_zero_row());
    }

    // Fourier-Motzkin on the inequalities.
    loop {
        // Pick the live variable minimizing the product growth.
        let mut best: Option<(usize, usize)> = None;
        for v in 0..n {
            if !alive[v] {
                continue;
            }
            let pos = atoms.iter().filter(|a| a.coef[v].is_positive()).count();
            let neg = atoms.iter().filter(|a| a.coef[v].is_negative()).count();
            if pos + neg == 0 {
                continue;
            }
            let work = pos * neg;
            if best.map_or(true, |(_, w)| work < w) {
                best = Some((v, work));
            }
        }
        let Some((v, _)) = best else {
            break;
        };
        let (with_v, rest): (Vec<Atom>, Vec<Atom>) =
            atoms.into_iter().partition(|a| !a.coef[v].is_zero());
        let (pos, neg): (Vec<Atom>, Vec<Atom>) =
            with_v.into_iter().partition(|a| a.coef[v].is_positive());
        atoms = rest;
        for p in &pos {
            for q in &neg {
                let rel = if p.rel == Rel::Lt || q.rel == Rel::Lt {
                    Rel::Lt
                } else {
                    Rel::Le
                };
                let coef: Vec<BigInt> = p
                    .coef
                    .iter()
                    .zip(&q.coef)
                    .map(|(pc, qc)| pc * q.coef[v].abs() + qc * p.coef[v].clone())
                    .collect();
                let a = Atom { coef, rel }.normalized();
                if a.is_zero_row() {
                    if !a.zero_row_ok() {
                        return false;
                    }
                } else {
                    atoms.push(a);
                }
            }
        }
        alive[v] = false;
        // A one-sided variable leaves no constraints behind (projection).
    }
    // Only zero rows could remain, and those were checked on creation.
    for a in &atoms {
        if a.is_zero_row() && !a.zero_row_ok() {
            return false;
        }
    }
    true
}

/// Is `atom` implied by `conj`?
pub fn implied(conj: &Conj, atom: &Atom) -> bool {
    atom.negations()
        .iter()
        .all(|neg| !feasible(&conj.and_atom(neg)))
}

/// Drop atoms implied by the rest; `None` when infeasible.
pub fn simplify(conj: &Conj) -> Option<Conj> {
    if !feasible(conj) {
        return None;
    }
    let mut atoms = conj.atoms.clone();
    let mut i = 0;
    while i < atoms.len() {
        let mut rest = atoms.clone();
        let candidate = rest.remove(i);
        let rest_conj = Conj::of(rest);
        if implied(&rest_conj, &candidate) {
            atoms.remove(i);
        } else {
            i += 1;
        }
    }
    Some(Conj::of(atoms))
}

/// Disjunctive normal form: empty = false.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dnf {
    pub conjs: Vec<Conj>,
}

impl Dnf {
    pub fn falsity() -> Dnf {
        Dnf { conjs: Vec::new() }
    }

    pub fn truth() -> Dnf {
        Dnf {
            conjs: vec![Conj::truth()],
        }
    }

    pub fn is_false(&self) -> bool {
        self.conjs.is_empty()
    }

    /// Conjoin a disjunction of conjunctions, pruning infeasible products
    /// and absorbing redundant ones. Full implied-atom simplification is
    /// deferred to reporting time; here only exact feasibility is used.
    pub fn and_disjunction(&self, branches: &[Conj], cap: usize) -> Result<Dnf, usize> {
        let mut out: Vec<Conj> = Vec::new();
        for base in &self.conjs {
            for br in branches {
                let comb = base.and(br);
                if feasible(&comb) {
                    out.push(comb);
                }
                if out.len() > cap {
                    return Err(out.len());
                }
            }
        }
        out.sort();
        out.dedup();
        // Absorption: a conjunct is redundant when a weaker one (subset of
        // atoms) is present.
        let mut kept: Vec<Conj> = Vec::new();
        'outer: for c in out {
            for k in &kept {
                if k.atoms.iter().all(|a| c.atoms.contains(a)) {
                    continue 'outer;
                }
            }
            kept.retain(|k| !c.atoms.iter().all(|a| k.atoms.contains(a)));
            kept.push(c);
        }
        kept.sort();
        Ok(Dnf { conjs: kept })
    }

    /// `self => other` under the side constraints, exactly.
    pub fn implies(&self, other: &Dnf, sides: &Conj) -> bool {
        for conj in &self.conjs {
            // conj && sides && !other must be infeasible.
            let mut branches: Vec<Conj> = vec![conj.and(sides)];
            for oc in &other.conjs {
                let mut next = Vec::new();
                for b in &branches {
                    for atom in &oc.atoms {
                        for neg in atom.negations() {
                            let cand = b.and_atom(&neg);
                            if feasible(&cand) {
                                next.push(cand);
                            }
                        }
                    }
                }
                branches = next;
                if branches.is_empty() {
                    break;
                }
            }
            if !branches.is_empty() {
                return false;
            }
        }
        true
    }

    pub fn equivalent(&self, other: &Dnf, sides: &Conj) -> bool {
        self.implies(other, sides) && other.implies(self, sides)
    }
}
