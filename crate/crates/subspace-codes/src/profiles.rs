//! Profile vectors and their pivot-pattern geometry: Ferrers shapes, the
//! scoring function, asymmetric / Hamming distances, and greedy selection of
//! profile-vector sets at a minimum distance.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::matq::Subspace;

/// Maximum supported profile vector length.
pub const MAX_LEN: usize = 16;

/// A binary vector of length `n` identifying an RREF pivot pattern.
/// Position 1 is the leftmost bit, matching matrix column order.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct ProfileVector {
    len: u8,
    /// Position i (1-based) is bit `len - i`, so position 1 is the most
    /// significant bit and the mask doubles as the big-endian integer value.
    mask: u32,
}

impl fmt::Debug for ProfileVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ProfileVector({})", self.digits())
    }
}

impl fmt::Display for ProfileVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.digits())
    }
}

impl ProfileVector {
    pub fn from_mask(len: usize, mask: u32) -> ProfileVector {
        assert!(len >= 1 && len <= MAX_LEN, "length out of range");
        assert_eq!(mask >> len, 0, "mask wider than length");
        ProfileVector {
            len: len as u8,
            mask,
        }
    }

    pub fn from_bits(bits: &[u8]) -> ProfileVector {
        assert!(!bits.is_empty() && bits.len() <= MAX_LEN);
        let mut mask = 0u32;
        for &b in bits {
            assert!(b <= 1, "bits must be 0 or 1");
            mask = (mask << 1) | b as u32;
        }
        ProfileVector {
            len: bits.len() as u8,
            mask,
        }
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn mask(&self) -> u32 {
        self.mask
    }

    /// Value of position `i`, 1-based.
    pub fn bit(&self, i: usize) -> bool {
        debug_assert!(i >= 1 && i <= self.len());
        (self.mask >> (self.len() - i)) & 1 == 1
    }

    pub fn weight(&self) -> usize {
        self.mask.count_ones() as usize
    }

    /// 1-based indices of the non-zero positions, ascending.
    pub fn support(&self) -> Vec<usize> {
        (1..=self.len()).filter(|&i| self.bit(i)).collect()
    }

    pub fn min_support(&self) -> Option<usize> {
        (1..=self.len()).find(|&i| self.bit(i))
    }

    pub fn complement(&self) -> ProfileVector {
        ProfileVector {
            len: self.len,
            mask: !self.mask & ((1u32 << self.len()) - 1),
        }
    }

    pub fn digits(&self) -> String {
        (1..=self.len())
            .map(|i| if self.bit(i) { '1' } else { '0' })
            .collect()
    }

    /// All 2^n profile vectors of length `n`, by ascending mask.
    pub fn all(n: usize) -> impl Iterator<Item = ProfileVector> {
        assert!(n >= 1 && n <= MAX_LEN);
        (0..(1u32 << n)).map(move |mask| ProfileVector::from_mask(n, mask))
    }
}

impl FromStr for ProfileVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<ProfileVector> {
        if s.is_empty() || s.len() > MAX_LEN {
            return Err(Error::InvalidParameter(format!(
                "profile vector length {} out of range",
                s.len()
            )));
        }
        let mut mask = 0u32;
        for c in s.chars() {
            match c {
                '0' => mask <<= 1,
                '1' => mask = (mask << 1) | 1,
                _ => {
                    return Err(Error::InvalidParameter(format!(
                        "invalid profile digit {c:?}"
                    )))
                }
            }
        }
        Ok(ProfileVector {
            len: s.len() as u8,
            mask,
        })
    }
}

/// Profile vector of a subspace: bit i is set iff column i is a pivot column
/// of the canonical RREF generator. Its weight equals the dimension.
pub fn profile_of(v: &Subspace) -> ProfileVector {
    let n = v.ambient();
    let mut mask = 0u32;
    for &p in v.pivots() {
        mask |= 1 << (n - 1 - p);
    }
    ProfileVector::from_mask(n, mask)
}

/// Number of 1 -> 0 transitions from `x` to `y`.
pub fn n_transitions(x: &ProfileVector, y: &ProfileVector) -> usize {
    assert_eq!(x.len(), y.len(), "length mismatch");
    (x.mask & !y.mask).count_ones() as usize
}

/// Asymmetric distance: max{N(x,y), N(y,x)}.
pub fn asym_distance(x: &ProfileVector, y: &ProfileVector) -> usize {
    n_transitions(x, y).max(n_transitions(y, x))
}

/// Hamming distance: N(x,y) + N(y,x).
pub fn hamming_distance(x: &ProfileVector, y: &ProfileVector) -> usize {
    assert_eq!(x.len(), y.len(), "length mismatch");
    (x.mask ^ y.mask).count_ones() as usize
}

/// The free-entry mask S(v) of a profile vector's RREF template.
///
/// The template has one row per support position, a leading 1 in that
/// column, forced zeros above/below pivots and left of each pivot, and free
/// entries (dots) elsewhere. `columns` lists the template columns (0-based)
/// containing at least one dot; the mask is the `rows x cols` dot pattern
/// restricted to those columns.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FerrersShape {
    profile: ProfileVector,
    rows: usize,
    cols: usize,
    /// Row-major dot mask, `rows * cols` entries.
    mask: Vec<bool>,
    dots: usize,
    /// 0-based template column index of each shape column, ascending.
    columns: Vec<usize>,
}

impl FerrersShape {
    /// Build the shape for a profile vector.
    pub fn of(profile: ProfileVector) -> FerrersShape {
        let n = profile.len();
        let support = profile.support();
        let m = support.len();
        if m == 0 {
            return FerrersShape {
                profile,
                rows: 0,
                cols: 0,
                mask: vec![],
                dots: 0,
                columns: vec![],
            };
        }
        // Columns with at least one dot: non-pivot columns strictly right of
        // the first pivot.
        let first = support[0];
        let columns: Vec<usize> = (first + 1..=n)
            .filter(|j| !profile.bit(*j))
            .map(|j| j - 1)
            .collect();
        let cols = columns.len();
        let mut mask = vec![false; m * cols];
        let mut dots = 0;
        for (i, &pivot) in support.iter().enumerate() {
            for (cj, &abs) in columns.iter().enumerate() {
                if abs + 1 > pivot {
                    mask[i * cols + cj] = true;
                    dots += 1;
                }
            }
        }
        FerrersShape {
            profile,
            rows: m,
            cols,
            mask,
            dots,
            columns,
        }
    }

    pub fn profile(&self) -> ProfileVector {
        self.profile
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Total number of free entries (dots).
    pub fn dots(&self) -> usize {
        self.dots
    }

    pub fn columns(&self) -> &[usize] {
        &self.columns
    }

    pub fn is_dot(&self, row: usize, col: usize) -> bool {
        self.mask[row * self.cols + col]
    }

    /// Positions without a dot, row-major.
    pub fn zero_positions(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.rows {
            for j in 0..self.cols {
                if !self.is_dot(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }
}

/// Number of free entries in the RREF template of `v`, without building the
/// shape: for every zero position, one dot per preceding one.
pub fn dot_count(v: &ProfileVector) -> usize {
    let mut ones = 0;
    let mut dots = 0;
    for i in 1..=v.len() {
        if v.bit(i) {
            ones += 1;
        } else {
            dots += ones;
        }
    }
    dots
}

/// Number of template columns containing at least one dot.
pub fn eta(v: &ProfileVector) -> usize {
    match v.min_support() {
        Some(first) => v.len() + 1 - (v.weight() + first),
        None => 0,
    }
}

/// Score of a profile vector for designed rank distance `d`: the dimension
/// lower bound `w - max{wt(v), eta(v)} * (d - 1)` of the largest distance-d
/// rank-metric code fitting S(v). May be negative.
pub fn score(v: &ProfileVector, d: usize) -> i64 {
    assert!(d >= 1);
    let penalty = v.weight().max(eta(v)) as i64;
    dot_count(v) as i64 - penalty * (d as i64 - 1)
}

/// Distance used to separate selected profile vectors.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SelectionMetric {
    Asymmetric,
    Hamming,
}

impl SelectionMetric {
    fn distance(&self, x: &ProfileVector, y: &ProfileVector) -> usize {
        match self {
            SelectionMetric::Asymmetric => asym_distance(x, y),
            SelectionMetric::Hamming => hamming_distance(x, y),
        }
    }
}

/// Greedily select profile vectors of length `n` so that all pairs are at
/// metric distance >= `d`, preferring high scores.
///
/// Scores use the per-class rank distance actually required: `d` itself in
/// asymmetric mode, `ceil(d/2)` in Hamming mode. Ties prefer the larger
/// `weight * (n - weight)` product, then the smaller big-endian value.
/// After a selection, only vectors at distance <= d-1 become unavailable, so
/// vectors at distance exactly d are kept. With `weight` given, the
/// candidate pool is restricted to vectors of that weight.
pub fn greedy_select(
    n: usize,
    d: usize,
    metric: SelectionMetric,
    weight: Option<usize>,
) -> Vec<ProfileVector> {
    assert!(n >= 1 && n <= MAX_LEN, "length out of range");
    assert!(d >= 1 && d <= n, "distance out of range");
    if let Some(k) = weight {
        assert!(k <= n, "weight out of range");
    }
    let d_score = match metric {
        SelectionMetric::Asymmetric => d,
        SelectionMetric::Hamming => d.div_ceil(2),
    };
    let mut candidates: Vec<ProfileVector> = ProfileVector::all(n)
        .filter(|v| weight.is_none_or(|k| v.weight() == k))
        .collect();
    candidates.sort_by_key(|v| {
        let wt = v.weight();
        (
            -score(v, d_score),
            -((wt * (n - wt)) as i64),
            v.mask(),
        )
    });

    let mut alive = vec![true; candidates.len()];
    let mut selected = Vec::new();
    for i in 0..candidates.len() {
        if !alive[i] {
            continue;
        }
        let v = candidates[i];
        selected.push(v);
        alive[i] = false;
        if d > 1 {
            for j in i + 1..candidates.len() {
                if alive[j] && metric.distance(&v, &candidates[j]) <= d - 1 {
                    alive[j] = false;
                }
            }
        }
    }
    selected
}
