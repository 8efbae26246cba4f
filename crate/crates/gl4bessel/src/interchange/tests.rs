use super::*;

fn atom(coef: &[i64], rel: Rel) -> Atom {
    Atom::new(coef.to_vec(), rel)
}

fn sides_for(n: usize, smalls: &[usize]) -> Conj {
    let mut atoms = Vec::new();
    for j in 0..n {
        if smalls.contains(&j) {
            continue;
        }
        let mut e = vec![0i64; n];
        e[j] = -1;
        atoms.push(Atom::new(e, Rel::Le));
    }
    Conj::of(atoms)
}

#[test]
fn two_inequalities_equal_an_equality() {
    let both = Dnf {
        conjs: vec![Conj::of(vec![
            atom(&[1, 0], Rel::Le),
            atom(&[-1, 0], Rel::Le),
        ])],
    };
    let eq = Dnf {
        conjs: vec![Conj::of(vec![atom(&[1, 0], Rel::Eq)])],
    };
    assert!(both.equivalent(&eq, &Conj::truth()));
}

#[test]
fn strict_contradiction_is_infeasible() {
    let c = Conj::of(vec![atom(&[1, 0], Rel::Lt), atom(&[-1, 0], Rel::Le)]);
    // a < 0 and a >= 0
    assert!(!feasible(&c));
    let c2 = Conj::of(vec![atom(&[-1, 0], Rel::Lt), atom(&[1, 0], Rel::Le)]);
    // a > 0 and a <= 0
    assert!(!feasible(&c2));
}

#[test]
fn elimination_chain() {
    // a <= b, b <= c, c <= 0, a > 0 is infeasible; drop a > 0 and it is not.
    let base = vec![
        atom(&[1, -1, 0], Rel::Le),
        atom(&[0, 1, -1], Rel::Le),
        atom(&[0, 0, 1], Rel::Le),
    ];
    let mut with_strict = base.clone();
    with_strict.push(atom(&[-1, 0, 0], Rel::Lt));
    assert!(!feasible(&Conj::of(with_strict)));
    assert!(feasible(&Conj::of(base)));
}

#[test]
fn potential_size_examples() {
    // Absent-in-derivative terms are dropped.
    let absent = PhaseTerm(vec![7, 7, 7]);
    assert!(potential_size_log(&absent, Some(1)).is_none());
    // A plain-x factor differentiates to coefficient 1.
    let plain = PhaseTerm(vec![7, 6, 7]);
    assert_eq!(potential_size_log(&plain, Some(1)).unwrap(), vec![0, 1, 0]);
    // sqrt(1+x^2) in a non-derivative slot contributes +1.
    let root = PhaseTerm(vec![3, 6, 7]);
    assert_eq!(potential_size_log(&root, Some(1)).unwrap(), vec![1, 1, 0]);
}

#[test]
fn might_be_small_examples() {
    let term = PhaseTerm(vec![6, 3, 7]);
    assert!(!might_be_small(&term, &[], 0));
    // Small plain-x slot off the derivative.
    assert!(might_be_small(&term, &[0], 1));
    // Small derivative slot with a flat factor form.
    assert!(might_be_small(&term, &[1], 1));
    // Form 6 in the derivative slot does not flatten.
    assert!(!might_be_small(&term, &[0], 0));
}

#[test]
fn single_large_term_reduces_to_nonpositivity() {
    let phase = Phase {
        variables: vec!["1".into(), "2".into()],
        terms: vec![PhaseTerm(vec![6, 3])],
        ystar: vec![],
    };
    let cases = apply_bky(&phase, 0, &[]);
    // No pairs, no small terms: only the all-small case survives.
    assert_eq!(cases.len(), 1);
    let expect = Conj::of(vec![atom(&[1, 1], Rel::Le)]);
    assert_eq!(cases[0], expect);
}

#[test]
fn empty_derivative_is_trivially_true() {
    let phase = Phase {
        variables: vec!["1".into(), "2".into()],
        terms: vec![PhaseTerm(vec![6, 7])],
        ystar: vec![],
    };
    let cases = apply_bky(&phase, 1, &[]);
    assert_eq!(cases.len(), 1);
    assert!(cases[0].atoms.is_empty());
}

#[test]
fn rank_one_corner_phase_has_no_cases() {
    let report = enumerate_cases(&phase_w41(), DNF_CAP).unwrap();
    assert!(report.is_empty(), "unexpected cases: {report:?}");
}

#[test]
fn w22_phase_two_families() {
    let report = enumerate_cases(&phase_w22(), DNF_CAP).unwrap();
    assert_eq!(report.len(), 2, "{report:?}");
    // Family 1: no smalls, all four scales equal and large.
    assert_eq!(report[0].smalls, Vec::<usize>::new());
    let expect1 = Dnf {
        conjs: vec![Conj::of(vec![
            atom(&[1, -1, 0, 0], Rel::Eq),
            atom(&[0, 1, -1, 0], Rel::Eq),
            atom(&[0, 0, 1, -1], Rel::Eq),
            atom(&[-1, 0, 0, 0], Rel::Lt),
        ])],
    };
    assert!(
        report[0].cases.equivalent(&expect1, &sides_for(4, &[])),
        "family 1: {}",
        render_family(&report[0], &phase_w22().variables)
    );
    // Family 2: x3, x4 small (indices 1, 2), logC2 = logC5 > 0.
    assert_eq!(report[1].smalls, vec![1, 2]);
    let expect2 = Dnf {
        conjs: vec![Conj::of(vec![
            atom(&[1, 0, 0, -1], Rel::Eq),
            atom(&[-1, 0, 0, 0], Rel::Lt),
        ])],
    };
    assert!(
        report[1].cases.equivalent(&expect2, &sides_for(4, &[1, 2])),
        "family 2: {}",
        render_family(&report[1], &phase_w22().variables)
    );
}

#[test]
fn w211_phase_single_family() {
    let report = enumerate_cases(&phase_w211(), DNF_CAP).unwrap();
    assert_eq!(report.len(), 1, "{report:?}");
    assert_eq!(report[0].smalls, vec![0, 1, 4]);
    let expect = Dnf {
        conjs: vec![Conj::of(vec![
            atom(&[0, 0, 1, -1, 0], Rel::Eq),
            atom(&[0, 0, -1, 0, 0], Rel::Lt),
        ])],
    };
    assert!(
        report[0].cases.equivalent(&expect, &sides_for(5, &[0, 1, 4])),
        "{}",
        render_family(&report[0], &phase_w211().variables)
    );
}

#[test]
fn rendering_is_readable() {
    let labels = vec!["2".to_string(), "5".to_string()];
    let a = atom(&[1, -1], Rel::Eq);
    assert_eq!(render_atom(&a, &labels), "logC2 - logC5 = 0");
    // Coefficients are gcd-normalized on construction.
    let b = atom(&[-2, 0], Rel::Lt);
    assert_eq!(render_atom(&b, &labels), "-logC2 < 0");
}
