//! Built-in phase fixtures for the oscillatory integrals of each Weyl
//! element, with factor forms and `y*` exponent vectors transcribed from
//! the explicit Iwasawa phases (terms that were moved to the weight
//! function are excluded).

use super::bky::{Phase, PhaseTerm};

fn phase(vars: &[&str], terms: &[&[u8]], ystar: &[&[i64]]) -> Phase {
    Phase {
        variables: vars.iter().map(|s| s.to_string()).collect(),
        terms: terms.iter().map(|t| PhaseTerm(t.to_vec())).collect(),
        ystar: ystar.iter().map(|y| y.to_vec()).collect(),
    }
}

/// Phase of the (2,2) element over `(x2, x3, x4, x5)`.
pub fn phase_w22() -> Phase {
    phase(
        &["2", "3", "4", "5"],
        &[
            &[7, 6, 7, 7],
            &[7, 5, 7, 6],
            &[6, 5, 7, 7],
            &[5, 4, 6, 3],
            &[3, 4, 6, 5],
        ],
        &[&[-1, -1, 1, 1], &[-1, 0, -2, -1], &[1, -1, 1, -1]],
    )
}

/// Phase of the (1,2,1) element over `(x1, x2, x4, x5, x6)`.
pub fn phase_w121() -> Phase {
    phase(
        &["1", "2", "4", "5", "6"],
        &[
            &[6, 7, 7, 7, 7],
            &[7, 5, 6, 7, 7],
            &[7, 4, 3, 7, 6],
            &[5, 6, 7, 7, 7],
            &[3, 7, 4, 1, 4],
            &[4, 3, 7, 6, 5],
            &[4, 2, 5, 7, 6],
        ],
        &[
            &[1, 0, -1, -2, -1],
            &[-1, 1, 0, 1, -1],
            &[-1, -2, -1, 0, 1],
        ],
    )
}

/// Phase of the (2,1,1) element over `(x1, .., x5)`.
pub fn phase_w211() -> Phase {
    phase(
        &["1", "2", "3", "4", "5"],
        &[
            &[6, 7, 7, 7, 7],
            &[5, 6, 7, 7, 7],
            &[4, 3, 6, 7, 7],
            &[7, 5, 7, 6, 7],
            &[2, 5, 6, 7, 7],
            &[7, 4, 5, 3, 6],
            &[3, 7, 4, 4, 1],
            &[2, 4, 3, 5, 6],
        ],
        &[
            &[0, -1, -1, 1, 1],
            &[1, 0, -1, -1, -2],
            &[-2, -1, 1, -1, 1],
        ],
    )
}

/// Phase of the long element over `(x1, .., x6)`.
pub fn phase_w1111() -> Phase {
    phase(
        &["1", "2", "3", "4", "5", "6"],
        &[
            &[6, 7, 7, 7, 7, 7],
            &[5, 6, 7, 7, 7, 7],
            &[4, 3, 6, 7, 7, 7],
            &[7, 5, 7, 6, 7, 7],
            &[7, 4, 5, 3, 6, 7],
            &[7, 4, 4, 3, 3, 6],
            &[7, 3, 3, 4, 4, 1],
            &[3, 4, 2, 7, 5, 6],
            &[2, 4, 3, 5, 6, 7],
            &[3, 4, 1, 7, 7, 7],
            &[2, 5, 6, 7, 7, 7],
        ],
        &[
            &[0, 1, 1, -1, -1, -2],
            &[1, -1, -2, 0, -1, 1],
            &[-2, -1, 1, -1, 1, 0],
        ],
    )
}

/// Phase of the rank-one corner element at n = 4, over `(x1, .., x4)`:
/// the chain `-t1 x1 - sum y_i x_i x_(i+1) / sqrt(1+x_i^2)` with the bounded
/// middle term removed.
pub fn phase_w41() -> Phase {
    phase(
        &["1", "2", "3", "4"],
        &[
            &[6, 7, 7, 7],
            &[5, 6, 7, 7],
            &[7, 5, 6, 7],
            &[7, 7, 5, 6],
        ],
        &[
            &[-1, 1, 0, 0],
            &[0, -1, 1, 0],
            &[0, 0, -1, 1],
            &[0, -1, -1, -2],
        ],
    )
}

/// Built-in phase by name.
pub fn builtin(name: &str) -> Option<Phase> {
    match name {
        "22" => Some(phase_w22()),
        "121" => Some(phase_w121()),
        "211" => Some(phase_w211()),
        "1111" => Some(phase_w1111()),
        "41" => Some(phase_w41()),
        _ => None,
    }
}
