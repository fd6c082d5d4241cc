//! Linear rank-metric codes over GF(q): maximum-rank-distance codes built
//! from linearized-polynomial evaluation, and their largest subcodes fitting
//! a Ferrers shape, obtained by solving the shape's zero constraints on the
//! coefficient space.

use std::sync::Arc;

use num_bigint::BigUint;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;

use crate::error::{Error, Result};
use crate::gf::{Elem, Field};
use crate::matq::MatrixGF;
use crate::profiles::FerrersShape;

/// Default codeword cap for exhaustive minimum-distance scans.
pub const DEFAULT_EXHAUSTIVE_CAP: u64 = 1 << 20;

/// A GF(q)-linear code of m x eta matrices with a designed minimum rank
/// distance. The basis matrices are linearly independent over GF(q).
#[derive(Clone, Debug)]
pub struct LinearMatrixCode {
    field: Arc<Field>,
    rows: usize,
    cols: usize,
    designed_distance: usize,
    basis: Vec<MatrixGF>,
}

impl LinearMatrixCode {
    /// The zero-dimensional code of a given shape.
    pub fn zero(field: &Arc<Field>, rows: usize, cols: usize, designed_distance: usize) -> Self {
        LinearMatrixCode {
            field: Arc::clone(field),
            rows,
            cols,
            designed_distance,
            basis: vec![],
        }
    }

    /// Wrap an explicit basis. The caller asserts linear independence; use
    /// [`LinearMatrixCode::basis_rank`] to audit untrusted input.
    pub fn from_basis(
        field: &Arc<Field>,
        rows: usize,
        cols: usize,
        designed_distance: usize,
        basis: Vec<MatrixGF>,
    ) -> Result<Self> {
        for b in &basis {
            if b.rows() != rows || b.cols() != cols {
                return Err(Error::ShapeMismatch(format!(
                    "basis matrix is {}x{}, expected {}x{}",
                    b.rows(),
                    b.cols(),
                    rows,
                    cols
                )));
            }
            if b.field().as_ref() != field.as_ref() {
                return Err(Error::ShapeMismatch("basis field mismatch".into()));
            }
        }
        Ok(LinearMatrixCode {
            field: Arc::clone(field),
            rows,
            cols,
            designed_distance,
            basis,
        })
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn designed_distance(&self) -> usize {
        self.designed_distance
    }

    /// Dimension over GF(q).
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[MatrixGF] {
        &self.basis
    }

    /// Number of codewords, q^dim.
    pub fn size(&self) -> BigUint {
        BigUint::from(self.field.order()).pow(self.dim() as u32)
    }

    /// Rank of the flattened basis; equals `dim()` iff the basis is
    /// linearly independent.
    pub fn basis_rank(&self) -> usize {
        if self.basis.is_empty() {
            return 0;
        }
        let rows: Vec<Vec<Elem>> = self.basis.iter().map(|b| b.entries().to_vec()).collect();
        MatrixGF::from_rows(&self.field, rows).unwrap().rank()
    }

    /// Codeword for a coefficient vector over GF(q).
    pub fn codeword(&self, coeffs: &[Elem]) -> MatrixGF {
        assert_eq!(coeffs.len(), self.dim(), "coefficient count mismatch");
        let mut acc = MatrixGF::zeros(&self.field, self.rows, self.cols);
        for (c, b) in coeffs.iter().zip(&self.basis) {
            acc.add_scaled_in_place(b, *c);
        }
        acc
    }

    /// Coefficient vector for a codeword index in `[0, q^dim)`, reading the
    /// index as base-q digits with the first coefficient most significant,
    /// so ascending indices enumerate coefficient tuples lexicographically.
    pub fn coeffs_for_index(&self, index: &BigUint) -> Vec<Elem> {
        let q = BigUint::from(self.field.order());
        let mut rem = index.clone();
        let mut out = vec![0; self.dim()];
        for slot in out.iter_mut().rev() {
            let digit = (&rem % &q)
                .to_u64_digits()
                .first()
                .copied()
                .unwrap_or(0);
            *slot = digit;
            rem /= &q;
        }
        assert!(rem == BigUint::ZERO, "index out of range");
        out
    }

    /// True iff every basis matrix is zero wherever the shape has no dot.
    pub fn fits(&self, shape: &FerrersShape) -> bool {
        if self.rows != shape.rows() || self.cols != shape.cols() {
            return false;
        }
        self.basis.iter().all(|b| {
            shape
                .zero_positions()
                .iter()
                .all(|&(i, j)| b[(i, j)] == 0)
        })
    }

    /// Minimum rank over non-zero codewords.
    pub fn min_rank_distance(&self, mode: ScanMode) -> Result<RankDistanceReport> {
        if self.basis.is_empty() {
            return Ok(RankDistanceReport::NoNonzeroCodewords);
        }
        match mode {
            ScanMode::Exhaustive { cap } => {
                let q = self.field.order() as u128;
                let mut count: u128 = 1;
                for _ in 0..self.dim() {
                    count = count.saturating_mul(q);
                    if count > cap as u128 {
                        return Err(Error::CapExceeded { needed: count, cap });
                    }
                }
                Ok(RankDistanceReport::Exact(self.exhaustive_min_rank()))
            }
            ScanMode::Sampled { seed, trials } => {
                let mut rng = ChaCha12Rng::seed_from_u64(seed);
                let q = self.field.order();
                let mut best = usize::MAX;
                for _ in 0..trials {
                    let mut coeffs = vec![0; self.dim()];
                    loop {
                        for c in coeffs.iter_mut() {
                            *c = rng.random_range(0..q);
                        }
                        if coeffs.iter().any(|&c| c != 0) {
                            break;
                        }
                    }
                    best = best.min(self.codeword(&coeffs).rank());
                    if best == 1 {
                        break;
                    }
                }
                Ok(RankDistanceReport::SampledUpperBound {
                    value: best,
                    trials,
                })
            }
        }
    }

    fn exhaustive_min_rank(&self) -> usize {
        let mut acc = MatrixGF::zeros(&self.field, self.rows, self.cols);
        let mut best = usize::MAX;
        self.scan(0, false, &mut acc, &mut best);
        best
    }

    /// Depth-first scan over coefficient digits. Adding a basis matrix q
    /// times returns the accumulator to its prior state because the field
    /// characteristic divides q, so no undo pass is needed.
    fn scan(&self, depth: usize, nonzero: bool, acc: &mut MatrixGF, best: &mut usize) {
        if *best == 1 {
            return;
        }
        if depth == self.basis.len() {
            if nonzero {
                *best = (*best).min(acc.rank());
            }
            return;
        }
        let q = self.field.order();
        for c in 0..q {
            self.scan(depth + 1, nonzero || c != 0, acc, best);
            acc.add_scaled_in_place(&self.basis[depth], 1);
        }
    }
}

/// Scan strategy for minimum-distance computations.
#[derive(Clone, Copy, Debug)]
pub enum ScanMode {
    Exhaustive { cap: u64 },
    Sampled { seed: u64, trials: u64 },
}

/// Result of a minimum rank distance scan.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RankDistanceReport {
    /// The code has no non-zero codewords; the minimum is vacuous.
    NoNonzeroCodewords,
    Exact(usize),
    /// Minimum over sampled codewords only: an upper bound on the true
    /// minimum.
    SampledUpperBound { value: usize, trials: u64 },
}

impl RankDistanceReport {
    /// The scanned minimum, `None` for a code without non-zero codewords.
    pub fn value(&self) -> Option<usize> {
        match self {
            RankDistanceReport::NoNonzeroCodewords => None,
            RankDistanceReport::Exact(v) => Some(*v),
            RankDistanceReport::SampledUpperBound { value, .. } => Some(*value),
        }
    }

    /// True iff the scan proves the minimum distance is at least `d`.
    pub fn certifies_at_least(&self, d: usize) -> bool {
        match self {
            RankDistanceReport::NoNonzeroCodewords => true,
            RankDistanceReport::Exact(v) => *v >= d,
            // An upper bound cannot certify a lower bound.
            RankDistanceReport::SampledUpperBound { .. } => false,
        }
    }
}

/// Maximum-rank-distance code of m x eta matrices over GF(q) with designed
/// minimum rank distance `delta`, of dimension
/// `max(m, eta) * (min(m, eta) - delta + 1)`.
///
/// Codewords are evaluations of linearized polynomials with q-degree below
/// `eta - delta + 1` at the basis points `1, t, ..., t^(eta-1)` of
/// GF(q^m), expanded to base-field matrices columnwise. When `eta > m` the
/// construction runs with the roles of the two dimensions swapped and every
/// basis matrix transposed.
pub fn gabidulin(
    field: &Arc<Field>,
    rows: usize,
    cols: usize,
    delta: usize,
) -> Result<LinearMatrixCode> {
    if delta < 1 || delta > rows.min(cols) {
        return Err(Error::DistanceOutOfRange {
            delta,
            rows,
            cols,
        });
    }
    if cols > rows {
        let swapped = gabidulin(field, cols, rows, delta)?;
        let basis = swapped.basis.iter().map(|b| b.transpose()).collect();
        return LinearMatrixCode::from_basis(field, rows, cols, delta, basis);
    }
    let m = rows;
    let eta = cols;
    let ext = Field::extension(field, m as u32)?;
    let k = eta - delta + 1;
    let points: Vec<Elem> = (0..eta).map(|j| ext.basis_elem(j as u32)).collect();
    let mut basis = Vec::with_capacity(m * k);
    for s in 0..k {
        // Evaluations x -> t^u * x^(q^s) for each basis coefficient t^u.
        let evals: Vec<Elem> = points.iter().map(|&h| ext.frob_pow(h, s as u32)).collect();
        for u in 0..m {
            let coeff = ext.basis_elem(u as u32);
            let mut mat = MatrixGF::zeros(field, m, eta);
            for (j, &e) in evals.iter().enumerate() {
                let value = ext.mul(coeff, e);
                for (i, digit) in ext.expand(value).into_iter().enumerate() {
                    mat[(i, j)] = digit;
                }
            }
            basis.push(mat);
        }
    }
    let code = LinearMatrixCode::from_basis(field, rows, cols, delta, basis)?;
    debug_assert_eq!(code.basis_rank(), code.dim());
    Ok(code)
}

/// The largest subcode of `code` whose codewords vanish outside the dot
/// mask of `shape`, computed as the nullspace of the shape's zero
/// constraints on the coefficient space. The designed distance is
/// inherited, and the dimension is at least
/// `dots - max(rows, cols) * (delta - 1)`.
pub fn ferrers_subcode(code: &LinearMatrixCode, shape: &FerrersShape) -> Result<LinearMatrixCode> {
    if code.rows() != shape.rows() || code.cols() != shape.cols() {
        return Err(Error::ShapeMismatch(format!(
            "code is {}x{} but shape is {}x{}",
            code.rows(),
            code.cols(),
            shape.rows(),
            shape.cols()
        )));
    }
    let field = code.field();
    let zeros = shape.zero_positions();
    let kappa = code.dim();
    let constraint_rows: Vec<Vec<Elem>> = zeros
        .iter()
        .map(|&(i, j)| code.basis().iter().map(|b| b[(i, j)]).collect())
        .collect();
    let coeff_vectors = if constraint_rows.is_empty() {
        // No constraints: the subcode is the whole code.
        (0..kappa)
            .map(|i| {
                let mut v = vec![0; kappa];
                v[i] = 1;
                v
            })
            .collect()
    } else {
        MatrixGF::from_rows(field, constraint_rows)?.nullspace()
    };
    let basis: Vec<MatrixGF> = coeff_vectors.iter().map(|c| code.codeword(c)).collect();
    let sub = LinearMatrixCode::from_basis(
        field,
        code.rows(),
        code.cols(),
        code.designed_distance(),
        basis,
    )?;
    debug_assert!(sub.fits(shape));
    debug_assert_eq!(sub.basis_rank(), sub.dim());
    Ok(sub)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::profiles::ProfileVector;

    fn f(q: u64) -> Arc<Field> {
        Field::from_order(q).unwrap()
    }

    #[test]
    fn gabidulin_3x3_distance_2() {
        let code = gabidulin(&f(2), 3, 3, 2).unwrap();
        assert_eq!(code.dim(), 6);
        assert_eq!(code.size(), BigUint::from(64u32));
        let report = code
            .min_rank_distance(ScanMode::Exhaustive {
                cap: DEFAULT_EXHAUSTIVE_CAP,
            })
            .unwrap();
        assert_eq!(report, RankDistanceReport::Exact(2));
    }

    #[test]
    fn gabidulin_full_space_when_distance_1() {
        for q in [2u64, 3] {
            let code = gabidulin(&f(q), 2, 3, 1).unwrap();
            assert_eq!(code.dim(), 6);
            let report = code
                .min_rank_distance(ScanMode::Exhaustive {
                    cap: DEFAULT_EXHAUSTIVE_CAP,
                })
                .unwrap();
            assert_eq!(report, RankDistanceReport::Exact(1));
        }
    }

    #[test]
    fn gabidulin_3x3_distance_3_is_full_rank_everywhere() {
        let code = gabidulin(&f(2), 3, 3, 3).unwrap();
        assert_eq!(code.dim(), 3);
        for idx in 1..8u32 {
            let coeffs = code.coeffs_for_index(&BigUint::from(idx));
            assert_eq!(code.codeword(&coeffs).rank(), 3);
        }
    }

    #[test]
    fn gabidulin_transposed_when_wide() {
        let code = gabidulin(&f(2), 2, 3, 2).unwrap();
        assert_eq!(code.rows(), 2);
        assert_eq!(code.cols(), 3);
        assert_eq!(code.dim(), 3); // max(2,3) * (min(2,3) - 2 + 1)
        let report = code
            .min_rank_distance(ScanMode::Exhaustive {
                cap: DEFAULT_EXHAUSTIVE_CAP,
            })
            .unwrap();
        assert_eq!(report, RankDistanceReport::Exact(2));
    }

    #[test]
    fn gabidulin_rejects_bad_distance() {
        assert!(gabidulin(&f(2), 3, 3, 0).is_err());
        assert!(gabidulin(&f(2), 3, 3, 4).is_err());
    }

    #[test]
    fn mrd_dimension_small_sweep() {
        for q in [2u64, 3] {
            for m in 1..=3usize {
                for eta in 1..=3usize {
                    for delta in 1..=m.min(eta) {
                        let code = gabidulin(&f(q), m, eta, delta).unwrap();
                        assert_eq!(code.dim(), m.max(eta) * (m.min(eta) - delta + 1));
                        assert_eq!(code.basis_rank(), code.dim());
                    }
                }
            }
        }
    }

    #[test]
    fn subcode_with_full_mask_is_the_code_itself() {
        // The all-dots shape comes from a single leading pivot.
        let shape = FerrersShape::of("1000".parse::<ProfileVector>().unwrap());
        assert_eq!(shape.dots(), 3);
        let code = gabidulin(&f(2), 1, 3, 1).unwrap();
        let sub = ferrers_subcode(&code, &shape).unwrap();
        assert_eq!(sub.dim(), code.dim());
    }

    #[test]
    fn subcode_of_printed_example_shape() {
        let shape = FerrersShape::of("0101100".parse::<ProfileVector>().unwrap());
        let code = gabidulin(&f(2), 3, 3, 2).unwrap();
        let sub = ferrers_subcode(&code, &shape).unwrap();
        assert!(sub.dim() >= 4); // dots - max(m, eta) * (delta - 1) = 7 - 3
        assert!(sub.fits(&shape));
        let report = sub
            .min_rank_distance(ScanMode::Exhaustive {
                cap: DEFAULT_EXHAUSTIVE_CAP,
            })
            .unwrap();
        assert!(report.certifies_at_least(2));
    }

    #[test]
    fn subcode_with_distance_1_has_dimension_equal_to_dots() {
        for n in 1..=6usize {
            for v in ProfileVector::all(n) {
                let shape = FerrersShape::of(v);
                if shape.rows() == 0 || shape.cols() == 0 {
                    continue;
                }
                let code = gabidulin(&f(2), shape.rows(), shape.cols(), 1).unwrap();
                let sub = ferrers_subcode(&code, &shape).unwrap();
                assert_eq!(sub.dim(), shape.dots(), "profile {v}");
            }
        }
    }

    #[test]
    fn subcode_shape_mismatch_is_rejected() {
        let shape = FerrersShape::of("0101100".parse::<ProfileVector>().unwrap());
        let code = gabidulin(&f(2), 2, 2, 1).unwrap();
        assert!(ferrers_subcode(&code, &shape).is_err());
    }

    #[test]
    fn min_rank_distance_reports() {
        let zero = LinearMatrixCode::zero(&f(2), 3, 3, 2);
        assert_eq!(
            zero.min_rank_distance(ScanMode::Exhaustive { cap: 16 }).unwrap(),
            RankDistanceReport::NoNonzeroCodewords
        );

        let full = gabidulin(&f(2), 2, 2, 1).unwrap();
        assert_eq!(
            full.min_rank_distance(ScanMode::Exhaustive {
                cap: DEFAULT_EXHAUSTIVE_CAP
            })
            .unwrap(),
            RankDistanceReport::Exact(1)
        );

        let code = gabidulin(&f(2), 4, 4, 2).unwrap();
        assert!(matches!(
            code.min_rank_distance(ScanMode::Exhaustive { cap: 16 }),
            Err(Error::CapExceeded { .. })
        ));
        let sampled = code
            .min_rank_distance(ScanMode::Sampled {
                seed: 7,
                trials: 200,
            })
            .unwrap();
        match sampled {
            RankDistanceReport::SampledUpperBound { value, trials } => {
                assert!(value >= 2, "sampled minimum below designed distance");
                assert_eq!(trials, 200);
            }
            other => panic!("expected sampled report, got {other:?}"),
        }
        assert!(!sampled.certifies_at_least(2));
    }

    #[test]
    fn codeword_indexing_is_lexicographic() {
        let code = gabidulin(&f(3), 1, 2, 1).unwrap();
        assert_eq!(code.dim(), 2);
        assert_eq!(code.coeffs_for_index(&BigUint::from(0u32)), vec![0, 0]);
        assert_eq!(code.coeffs_for_index(&BigUint::from(1u32)), vec![0, 1]);
        assert_eq!(code.coeffs_for_index(&BigUint::from(3u32)), vec![1, 0]);
        assert_eq!(code.coeffs_for_index(&BigUint::from(8u32)), vec![2, 2]);
    }
}
