//! Permutations, the relevant Weyl elements, and coset transversals.

use serde::{Deserialize, Serialize};

/// A permutation of {0,1,2,3}; `image[i]` is where the matrix sends `e_i`.
///
/// Composition is written left-to-right: `p.then(q)` acts as `p` first.
/// With the parameter action `mu^w_i = mu_{w^{-1}(i)}` this gives
/// `(mu^p)^q = mu^(p.then(q))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    image: [usize; 4],
}

impl Permutation {
    pub fn identity() -> Self {
        Permutation {
            image: [0, 1, 2, 3],
        }
    }

    pub fn from_images(image: [usize; 4]) -> Self {
        let mut seen = [false; 4];
        for &i in &image {
            assert!(i < 4 && !seen[i], "not a permutation of 0..4");
            seen[i] = true;
        }
        Permutation { image }
    }

    /// Build from disjoint cycles in 1-based labels, e.g. `[[1,4,2,3]]`.
    pub fn from_cycles(cycles: &[&[usize]]) -> Self {
        let mut image = [0, 1, 2, 3];
        for cyc in cycles {
            for w in 0..cyc.len() {
                let from = cyc[w] - 1;
                let to = cyc[(w + 1) % cyc.len()] - 1;
                image[from] = to;
            }
        }
        Permutation::from_images(image)
    }

    pub fn image(&self, i: usize) -> usize {
        self.image[i]
    }

    pub fn inv_image(&self, i: usize) -> usize {
        self.image.iter().position(|&v| v == i).unwrap()
    }

    pub fn inverse(&self) -> Permutation {
        let mut image = [0; 4];
        for i in 0..4 {
            image[self.image[i]] = i;
        }
        Permutation { image }
    }

    /// `self` first, then `other` (so the matrix product is `other * self`).
    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation {
            image: std::array::from_fn(|i| other.image[self.image[i]]),
        }
    }

    /// The order-reversing long element `i -> 3 - i`.
    pub fn long_element() -> Permutation {
        Permutation {
            image: [3, 2, 1, 0],
        }
    }

    pub fn all() -> Vec<Permutation> {
        let mut out = Vec::with_capacity(24);
        let mut items = [0usize, 1, 2, 3];
        permute(&mut items, 0, &mut out);
        out.sort();
        out
    }

    /// 4x4 permutation matrix, `m[image(i)][i] = 1`.
    pub fn matrix(&self) -> [[f64; 4]; 4] {
        let mut m = [[0.0; 4]; 4];
        for i in 0..4 {
            m[self.image[i]][i] = 1.0;
        }
        m
    }

    pub fn sign(&self) -> f64 {
        let mut s = 1.0;
        for i in 0..4 {
            for j in (i + 1)..4 {
                if self.image[i] > self.image[j] {
                    s = -s;
                }
            }
        }
        s
    }
}

fn permute(items: &mut [usize; 4], k: usize, out: &mut Vec<Permutation>) {
    if k == 4 {
        out.push(Permutation { image: *items });
        return;
    }
    for i in k..4 {
        items.swap(k, i);
        permute(items, k + 1, out);
        items.swap(k, i);
    }
}

/// One of the eight relevant Weyl elements of GL(4), indexed by a
/// composition `(r_1, .., r_l)` of 4: the reverse-block matrix with `I_(r_1)`
/// in the upper right down to `I_(r_l)` in the lower left.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct WeylElement {
    composition: Vec<u8>,
}

impl WeylElement {
    pub fn from_composition(parts: &[u8]) -> Option<WeylElement> {
        if parts.iter().map(|&r| r as u32).sum::<u32>() != 4 || parts.iter().any(|&r| r == 0) {
            return None;
        }
        Some(WeylElement {
            composition: parts.to_vec(),
        })
    }

    /// Parse the compact composition string, e.g. `"211"` or `"4"`.
    pub fn parse(s: &str) -> Option<WeylElement> {
        let parts: Option<Vec<u8>> = s
            .chars()
            .map(|c| c.to_digit(10).map(|d| d as u8))
            .collect();
        WeylElement::from_composition(&parts?)
    }

    pub fn composition(&self) -> &[u8] {
        &self.composition
    }

    pub fn name(&self) -> String {
        self.composition.iter().map(|r| r.to_string()).collect()
    }

    /// The underlying permutation: block `i` occupies rows
    /// `r_1 + .. + r_(i-1) ..` and columns counted from the right.
    pub fn permutation(&self) -> Permutation {
        let mut image = [0usize; 4];
        let mut row = 0usize;
        let total: usize = self.composition.iter().map(|&r| r as usize).sum();
        let mut col_end = total;
        for &r in &self.composition {
            let r = r as usize;
            let col_start = col_end - r;
            for k in 0..r {
                image[col_start + k] = row + k;
            }
            row += r;
            col_end = col_start;
        }
        Permutation::from_images(image)
    }

    pub fn is_identity(&self) -> bool {
        self.composition == [4]
    }

    /// Indices (0-based, in {0,1,2}) of the free coordinates of `Y_w`:
    /// the partial sums `r_1 + .. + r_i` for `i < l`.
    pub fn free_coords(&self) -> Vec<usize> {
        let mut acc = 0usize;
        let mut out = Vec::new();
        for &r in &self.composition[..self.composition.len() - 1] {
            acc += r as usize;
            out.push(acc - 1);
        }
        out
    }

    /// The stabilizer `W_w` of `Y_w` under conjugation: permutations fixing
    /// the block pattern of the diagonal.
    pub fn stabilizer(&self) -> Vec<Permutation> {
        // Diagonal entries of Y_w group into blocks [0..h_1), [h_1..h_2), ..
        // with h_i the free-coordinate boundaries; W_w permutes within blocks.
        let mut boundaries = self.free_coords();
        boundaries.push(3);
        Permutation::all()
            .into_iter()
            .filter(|p| {
                let mut lo = 0usize;
                for &b in &boundaries {
                    for i in lo..=b {
                        if p.image(i) < lo || p.image(i) > b {
                            return false;
                        }
                    }
                    lo = b + 1;
                }
                true
            })
            .collect()
    }

    /// A transversal of the cosets `W_w \ W` that drive the kernel sum: the
    /// parameter vectors `mu^(w')` for `w'` in the transversal enumerate the
    /// distinct leading exponents exactly once.
    ///
    /// The size is `24 / |W_w|`. For the (2,2) element the transversal is
    /// the explicit set `{I, (1 3), (2 3), (1 4), (2 4), (1 3)(2 4)}`.
    pub fn coset_reps(&self) -> Vec<Permutation> {
        if self.composition == [2, 2] {
            return vec![
                Permutation::identity(),
                Permutation::from_cycles(&[&[1, 3]]),
                Permutation::from_cycles(&[&[2, 3]]),
                Permutation::from_cycles(&[&[1, 4]]),
                Permutation::from_cycles(&[&[2, 4]]),
                Permutation::from_cycles(&[&[1, 3], &[2, 4]]),
            ];
        }
        let stab = self.stabilizer();
        let mut reps: Vec<Permutation> = Vec::new();
        // The kernel summand at w' depends on w' only through the class
        // {w'.then(h) : h in W_w}, since (mu^w')^h = mu^(w'.then(h)).
        'outer: for p in Permutation::all() {
            for h in &stab {
                let q = p.then(h);
                if reps.contains(&q) {
                    continue 'outer;
                }
            }
            reps.push(p);
        }
        reps
    }

    /// `w^iota = w_l w w_l`.
    pub fn conjugated_by_long(&self) -> WeylElement {
        let wl = Permutation::long_element();
        let target = wl.then(&self.permutation()).then(&wl);
        for w in relevant_weyl_list() {
            if w.permutation() == target {
                return w;
            }
        }
        unreachable!("conjugate of a relevant element is relevant");
    }
}

impl TryFrom<String> for WeylElement {
    type Error = String;
    fn try_from(s: String) -> Result<Self, String> {
        WeylElement::parse(&s).ok_or_else(|| format!("not a composition of 4: {s:?}"))
    }
}

impl From<WeylElement> for String {
    fn from(w: WeylElement) -> String {
        w.name()
    }
}

impl std::fmt::Display for WeylElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "w_{}", self.name())
    }
}

/// The eight relevant Weyl elements of GL(4), in the conventional order.
pub fn relevant_weyl_list() -> Vec<WeylElement> {
    [
        vec![4u8],
        vec![1, 3],
        vec![3, 1],
        vec![2, 2],
        vec![1, 1, 2],
        vec![1, 2, 1],
        vec![2, 1, 1],
        vec![1, 1, 1, 1],
    ]
    .into_iter()
    .map(|c| WeylElement { composition: c })
    .collect()
}

/// A point of `Y_w`: coordinates `(y_1, y_2, y_3)` with the fixed ones
/// pinned to 1 and `|y_4| = 1` implicit.
#[derive(Debug, Clone, PartialEq)]
pub struct YPoint {
    weyl: WeylElement,
    y: [f64; 3],
}

impl YPoint {
    /// Validating constructor: fixed coordinates must be exactly 1, free
    /// ones nonzero.
    pub fn new(weyl: WeylElement, y: [f64; 3]) -> Option<YPoint> {
        let free = weyl.free_coords();
        for i in 0..3 {
            if free.contains(&i) {
                if y[i] == 0.0 {
                    return None;
                }
            } else if y[i] != 1.0 {
                return None;
            }
        }
        Some(YPoint { weyl, y })
    }

    pub(crate) fn new_unchecked(weyl: WeylElement, y: [f64; 3]) -> YPoint {
        YPoint { weyl, y }
    }

    /// Convenience: place `free` values at the free coordinates of `w`.
    pub fn from_free(weyl: WeylElement, free: &[f64]) -> Option<YPoint> {
        let idx = weyl.free_coords();
        if idx.len() != free.len() {
            return None;
        }
        let mut y = [1.0f64; 3];
        for (slot, &v) in idx.iter().zip(free) {
            y[*slot] = v;
        }
        YPoint::new(weyl, y)
    }

    pub fn weyl(&self) -> &WeylElement {
        &self.weyl
    }

    pub fn coords(&self) -> [f64; 3] {
        self.y
    }

    pub fn free_values(&self) -> Vec<f64> {
        self.weyl.free_coords().iter().map(|&i| self.y[i]).collect()
    }

    /// Diagonal matrix entries with `y_4 = 1`:
    /// `(y1 y2 y3, y2 y3, y3, 1)`.
    pub fn diagonal(&self) -> [f64; 4] {
        let [y1, y2, y3] = self.y;
        [y1 * y2 * y3, y2 * y3, y3, 1.0]
    }
}
