//! Assembly of full subspace codes: profile-vector selection, one lifted
//! rank-metric subcode per selected profile, exact size and rate accounting,
//! minimum-distance verification, and the text dump format.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rand::RngCore;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;
use serde::Serialize;

use crate::bounds::log_q_big;
use crate::error::{Error, Result};
use crate::gf::{Elem, Field};
use crate::matq::{MatrixGF, Subspace};
use crate::profiles::{
    asym_distance, hamming_distance, score, greedy_select, FerrersShape, ProfileVector,
    SelectionMetric,
};
use crate::rankmetric::{
    ferrers_subcode, gabidulin, LinearMatrixCode, RankDistanceReport, ScanMode,
    DEFAULT_EXHAUSTIVE_CAP,
};

/// Maximum supported ambient dimension.
pub const MAX_AMBIENT: usize = 16;

/// The distance a code is designed for.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CodeMetric {
    Injection,
    Subspace,
}

impl CodeMetric {
    /// Distance between two subspaces under this metric.
    pub fn distance(&self, a: &Subspace, b: &Subspace) -> usize {
        match self {
            CodeMetric::Injection => a.injection_distance(b),
            CodeMetric::Subspace => a.subspace_distance(b),
        }
    }

    /// Profile-vector distance that lower-bounds this metric.
    pub fn profile_distance(&self, a: &ProfileVector, b: &ProfileVector) -> usize {
        match self {
            CodeMetric::Injection => asym_distance(a, b),
            CodeMetric::Subspace => hamming_distance(a, b),
        }
    }

    fn selection_metric(&self) -> SelectionMetric {
        match self {
            CodeMetric::Injection => SelectionMetric::Asymmetric,
            CodeMetric::Subspace => SelectionMetric::Hamming,
        }
    }

    /// Rank distance each class subcode must provide for a target code
    /// distance `d`.
    fn class_rank_distance(&self, d: usize) -> usize {
        match self {
            CodeMetric::Injection => d,
            CodeMetric::Subspace => d / 2,
        }
    }

    /// Code distance guaranteed by a within-class rank distance.
    fn distance_from_rank(&self, rank: usize) -> usize {
        match self {
            CodeMetric::Injection => rank,
            CodeMetric::Subspace => 2 * rank,
        }
    }
}

impl fmt::Display for CodeMetric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CodeMetric::Injection => f.write_str("injection"),
            CodeMetric::Subspace => f.write_str("subspace"),
        }
    }
}

impl FromStr for CodeMetric {
    type Err = Error;

    fn from_str(s: &str) -> Result<CodeMetric> {
        match s {
            "injection" => Ok(CodeMetric::Injection),
            "subspace" => Ok(CodeMetric::Subspace),
            _ => Err(Error::InvalidParameter(format!("unknown metric {s:?}"))),
        }
    }
}

/// One equivalence class of a constructed code: a profile vector together
/// with the rank-metric subcode filling its free entries.
#[derive(Clone, Debug)]
pub struct CodeClass {
    profile: ProfileVector,
    shape: FerrersShape,
    subcode: LinearMatrixCode,
    size: BigUint,
    score: i64,
}

impl CodeClass {
    pub fn profile(&self) -> ProfileVector {
        self.profile
    }

    pub fn shape(&self) -> &FerrersShape {
        &self.shape
    }

    pub fn subcode(&self) -> &LinearMatrixCode {
        &self.subcode
    }

    /// Number of codewords contributed: q^dim, at least 1.
    pub fn size(&self) -> &BigUint {
        &self.size
    }

    pub fn score(&self) -> i64 {
        self.score
    }
}

/// A constructed (n, M, d) code in the projective space of GF(q)^n.
#[derive(Clone, Debug)]
pub struct SubspaceCode {
    field: Arc<Field>,
    n: usize,
    d: usize,
    metric: CodeMetric,
    classes: Vec<CodeClass>,
    size: BigUint,
}

/// Serializable construction summary.
#[derive(Serialize)]
pub struct CodeSummary {
    pub n: usize,
    pub q: u64,
    pub d: usize,
    pub metric: String,
    pub classes: Vec<ClassSummary>,
    #[serde(rename = "M_digits")]
    pub m_digits: String,
    pub rate: f64,
}

#[derive(Serialize)]
pub struct ClassSummary {
    pub profile: String,
    pub kappa: usize,
    pub score: i64,
}

fn check_params(field: &Arc<Field>, n: usize, d: usize) -> Result<()> {
    if n < 1 || n > MAX_AMBIENT {
        return Err(Error::InvalidParameter(format!(
            "ambient dimension {n} out of range 1..={MAX_AMBIENT}"
        )));
    }
    if d < 1 || d > n {
        return Err(Error::InvalidParameter(format!(
            "distance {d} out of range 1..={n}"
        )));
    }
    if field.order() > 16 {
        return Err(Error::InvalidParameter(format!(
            "field order {} out of range 2..=16",
            field.order()
        )));
    }
    Ok(())
}

/// Build the class for one profile vector: the largest rank-distance
/// `delta` subcode fitting the profile's shape. Degenerate shapes and
/// unreachable distances yield the zero-dimensional subcode, whose single
/// codeword is the bare template lift.
fn class_for_profile(
    field: &Arc<Field>,
    profile: ProfileVector,
    delta: usize,
    mothers: &mut HashMap<(usize, usize), LinearMatrixCode>,
) -> Result<CodeClass> {
    let shape = FerrersShape::of(profile);
    let (m, eta) = (shape.rows(), shape.cols());
    let subcode = if m == 0 || eta == 0 || delta > m.min(eta) {
        LinearMatrixCode::zero(field, m, eta, delta)
    } else {
        if !mothers.contains_key(&(m, eta)) {
            mothers.insert((m, eta), gabidulin(field, m, eta, delta)?);
        }
        ferrers_subcode(&mothers[&(m, eta)], &shape)?
    };
    let size = subcode.size();
    Ok(CodeClass {
        profile,
        shape,
        size,
        score: score(&profile, delta),
        subcode,
    })
}

/// Build an (n, M, d) code for the chosen metric.
///
/// Injection mode selects profiles at asymmetric distance >= d and uses
/// rank distance d within each class. Subspace mode requires d = 2*delta
/// even, selects profiles at Hamming distance >= d, and uses rank distance
/// delta within each class.
pub fn build_code(
    field: &Arc<Field>,
    n: usize,
    d: usize,
    metric: CodeMetric,
) -> Result<SubspaceCode> {
    check_params(field, n, d)?;
    if metric == CodeMetric::Subspace && d % 2 != 0 {
        return Err(Error::InvalidParameter(format!(
            "subspace-metric distance must be even, got {d}"
        )));
    }
    let delta = metric.class_rank_distance(d);
    let profiles = greedy_select(n, d, metric.selection_metric(), None);
    assemble(field, n, d, metric, delta, &profiles)
}

/// Build a constant-dimension code of codeword dimension floor(n/2) with
/// minimum subspace distance 2*delta.
pub fn build_constant_dimension(
    field: &Arc<Field>,
    n: usize,
    delta: usize,
) -> Result<SubspaceCode> {
    let d = 2 * delta;
    check_params(field, n, d)?;
    let k = n / 2;
    let profiles = greedy_select(n, d, SelectionMetric::Hamming, Some(k));
    assemble(field, n, d, CodeMetric::Subspace, delta, &profiles)
}

fn assemble(
    field: &Arc<Field>,
    n: usize,
    d: usize,
    metric: CodeMetric,
    delta: usize,
    profiles: &[ProfileVector],
) -> Result<SubspaceCode> {
    let mut mothers = HashMap::new();
    let mut classes = Vec::with_capacity(profiles.len());
    for &p in profiles {
        classes.push(class_for_profile(field, p, delta, &mut mothers)?);
    }
    let size = classes.iter().map(|c| c.size.clone()).sum();
    Ok(SubspaceCode {
        field: Arc::clone(field),
        n,
        d,
        metric,
        classes,
        size,
    })
}

/// Substitute a filling into the free entries of a profile's RREF template
/// and return the resulting subspace. The filling must be zero outside the
/// dot mask.
pub fn lift(
    field: &Arc<Field>,
    shape: &FerrersShape,
    filling: &MatrixGF,
) -> Result<Subspace> {
    let profile = shape.profile();
    let n = profile.len();
    let m = shape.rows();
    if filling.rows() != m || filling.cols() != shape.cols() {
        return Err(Error::ShapeMismatch(format!(
            "filling is {}x{}, expected {}x{}",
            filling.rows(),
            filling.cols(),
            m,
            shape.cols()
        )));
    }
    for i in 0..m {
        for j in 0..shape.cols() {
            if !shape.is_dot(i, j) && filling[(i, j)] != 0 {
                return Err(Error::MaskViolation { row: i, col: j });
            }
        }
    }
    let support = profile.support();
    let mut gen = MatrixGF::zeros(field, m, n);
    for (i, &pivot) in support.iter().enumerate() {
        gen[(i, pivot - 1)] = 1;
    }
    for (cj, &abs) in shape.columns().iter().enumerate() {
        for i in 0..m {
            gen[(i, abs)] = filling[(i, cj)];
        }
    }
    let pivots: Vec<usize> = support.iter().map(|&s| s - 1).collect();
    Ok(Subspace::from_rref_generator(gen, pivots))
}

impl SubspaceCode {
    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn distance(&self) -> usize {
        self.d
    }

    pub fn metric(&self) -> CodeMetric {
        self.metric
    }

    pub fn classes(&self) -> &[CodeClass] {
        &self.classes
    }

    /// Exact number of codewords.
    pub fn size(&self) -> &BigUint {
        &self.size
    }

    /// log_q of the exact size.
    pub fn rate(&self) -> f64 {
        if self.size.is_zero() {
            return f64::NEG_INFINITY;
        }
        log_q_big(&self.size, self.field.order())
    }

    /// The codeword at a deterministic index: classes in selection order,
    /// fillings in coefficient-lexicographic order.
    pub fn codeword_at(&self, index: &BigUint) -> Subspace {
        let mut rem = index.clone();
        for class in &self.classes {
            if rem < class.size {
                let coeffs = class.subcode.coeffs_for_index(&rem);
                let filling = class.subcode.codeword(&coeffs);
                return lift(&self.field, &class.shape, &filling)
                    .expect("class codewords always fit their shape");
            }
            rem -= &class.size;
        }
        panic!("codeword index out of range");
    }

    /// Enumerate codewords in deterministic order, stopping after `cap`.
    /// The flag reports whether truncation occurred.
    pub fn enumerate(&self, cap: u64) -> (Vec<Subspace>, bool) {
        let mut out = Vec::new();
        for class in &self.classes {
            let mut index = BigUint::zero();
            while index < class.size {
                if out.len() as u64 >= cap {
                    return (out, true);
                }
                let coeffs = class.subcode.coeffs_for_index(&index);
                let filling = class.subcode.codeword(&coeffs);
                let lifted = lift(&self.field, &class.shape, &filling)
                    .expect("class codewords always fit their shape");
                out.push(lifted);
                index += 1u32;
            }
        }
        (out, false)
    }

    pub fn summary(&self) -> CodeSummary {
        CodeSummary {
            n: self.n,
            q: self.field.order(),
            d: self.d,
            metric: self.metric.to_string(),
            classes: self
                .classes
                .iter()
                .map(|c| ClassSummary {
                    profile: c.profile.digits(),
                    kappa: c.subcode.dim(),
                    score: c.score,
                })
                .collect(),
            m_digits: self.size.to_string(),
            rate: self.rate(),
        }
    }

    /// Text dump: header `n q d metric M`, then per class a
    /// `profile kappa` line followed by the subcode basis matrices, each
    /// terminated by a blank line.
    pub fn to_dump(&self) -> String {
        let mut out = format!(
            "{} {} {} {} {}\n",
            self.n,
            self.field.order(),
            self.d,
            self.metric,
            self.size
        );
        for class in &self.classes {
            out.push_str(&format!(
                "{} {}\n",
                class.profile.digits(),
                class.subcode.dim()
            ));
            for b in class.subcode.basis() {
                out.push_str(&b.to_text());
                out.push('\n');
            }
        }
        out
    }
}

/// A structurally parsed dump, not yet semantically validated.
#[derive(Debug)]
pub struct ParsedDump {
    pub n: usize,
    pub q: u64,
    pub d: usize,
    pub metric: CodeMetric,
    pub claimed_size: BigUint,
    pub classes: Vec<ParsedClass>,
}

#[derive(Debug)]
pub struct ParsedClass {
    pub profile: ProfileVector,
    pub kappa: usize,
    pub matrices: Vec<MatrixGF>,
}

fn dump_err(line: usize, message: impl Into<String>) -> Error {
    Error::DumpParse {
        line,
        message: message.into(),
    }
}

/// Parse the text dump format. Structural validation only: shapes, ranges,
/// and counts. Use [`ParsedDump::into_code`] for semantic validation.
pub fn parse_dump(text: &str) -> Result<ParsedDump> {
    let mut lines = text.lines().enumerate();
    let (ln, header) = lines
        .next()
        .ok_or_else(|| dump_err(0, "empty dump"))?;
    let tokens: Vec<&str> = header.split_whitespace().collect();
    if tokens.len() != 5 {
        return Err(dump_err(ln + 1, "header must be: n q d metric M"));
    }
    let n: usize = tokens[0]
        .parse()
        .map_err(|_| dump_err(ln + 1, "bad ambient dimension"))?;
    if n < 1 || n > MAX_AMBIENT {
        return Err(dump_err(ln + 1, "ambient dimension out of range"));
    }
    let q: u64 = tokens[1]
        .parse()
        .map_err(|_| dump_err(ln + 1, "bad field order"))?;
    if !(2..=16).contains(&q) {
        return Err(dump_err(ln + 1, "field order out of range"));
    }
    let field = Field::from_order(q).map_err(|e| dump_err(ln + 1, e.to_string()))?;
    let d: usize = tokens[2]
        .parse()
        .map_err(|_| dump_err(ln + 1, "bad distance"))?;
    if d < 1 || d > n {
        return Err(dump_err(ln + 1, "distance out of range"));
    }
    let metric: CodeMetric = tokens[3]
        .parse()
        .map_err(|_| dump_err(ln + 1, format!("unknown metric {:?}", tokens[3])))?;
    if tokens[4].len() > 256 || !tokens[4].bytes().all(|b| b.is_ascii_digit()) {
        return Err(dump_err(ln + 1, "bad code size"));
    }
    let claimed_size = BigUint::from_str(tokens[4]).expect("checked digits");

    let mut classes = Vec::new();
    loop {
        let Some((ln, line)) = lines.next() else {
            break;
        };
        if line.trim().is_empty() {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(dump_err(ln + 1, "class line must be: profile kappa"));
        }
        let profile: ProfileVector = tokens[0]
            .parse()
            .map_err(|_| dump_err(ln + 1, "bad profile vector"))?;
        if profile.len() != n {
            return Err(dump_err(ln + 1, "profile length does not match header"));
        }
        let kappa: usize = tokens[1]
            .parse()
            .map_err(|_| dump_err(ln + 1, "bad class dimension"))?;
        let shape = FerrersShape::of(profile);
        if kappa > shape.dots() {
            return Err(dump_err(
                ln + 1,
                format!(
                    "class dimension {kappa} exceeds the {} free entries of the shape",
                    shape.dots()
                ),
            ));
        }
        let m = shape.rows();
        let eta = shape.cols();
        let mut matrices = Vec::with_capacity(kappa);
        for _ in 0..kappa {
            let mut rows: Vec<Vec<Elem>> = Vec::with_capacity(m);
            for _ in 0..m {
                let Some((ln, line)) = lines.next() else {
                    return Err(dump_err(usize::MAX, "unexpected end of dump in matrix"));
                };
                let mut row = Vec::with_capacity(eta);
                for tok in line.split_whitespace() {
                    let e: Elem = tok
                        .parse()
                        .map_err(|_| dump_err(ln + 1, format!("bad matrix entry {tok:?}")))?;
                    if e >= q {
                        return Err(dump_err(ln + 1, "matrix entry out of field range"));
                    }
                    row.push(e);
                }
                if row.len() != eta {
                    return Err(dump_err(ln + 1, format!("expected {eta} entries per row")));
                }
                rows.push(row);
            }
            let mat = if m == 0 {
                MatrixGF::zeros(&field, 0, eta)
            } else {
                MatrixGF::from_rows(&field, rows)
                    .map_err(|e| dump_err(ln + 1, e.to_string()))?
            };
            matrices.push(mat);
            match lines.next() {
                Some((_, sep)) if sep.trim().is_empty() => {}
                None => {}
                Some((ln, _)) => {
                    return Err(dump_err(ln + 1, "expected blank line after matrix"));
                }
            }
        }
        classes.push(ParsedClass {
            profile,
            kappa,
            matrices,
        });
    }
    Ok(ParsedDump {
        n,
        q,
        d,
        metric,
        claimed_size,
        classes,
    })
}

impl ParsedDump {
    /// Semantic validation: basis matrices must fit their shapes and be
    /// linearly independent, and the claimed size must equal the sum of
    /// class sizes. Returns the reconstructed code.
    pub fn into_code(self) -> Result<SubspaceCode> {
        let field = Field::from_order(self.q)?;
        if self.metric == CodeMetric::Subspace && self.d % 2 != 0 {
            return Err(Error::DumpInvalid(
                "subspace-metric distance must be even".into(),
            ));
        }
        let delta = self.metric.class_rank_distance(self.d);
        let mut classes = Vec::with_capacity(self.classes.len());
        let mut total = BigUint::zero();
        for pc in self.classes {
            let shape = FerrersShape::of(pc.profile);
            let subcode = LinearMatrixCode::from_basis(
                &field,
                shape.rows(),
                shape.cols(),
                delta,
                pc.matrices,
            )?;
            if !subcode.fits(&shape) {
                return Err(Error::DumpInvalid(format!(
                    "class {} has a basis entry outside the dot mask",
                    pc.profile
                )));
            }
            if subcode.basis_rank() != pc.kappa {
                return Err(Error::DumpInvalid(format!(
                    "class {} basis is not linearly independent",
                    pc.profile
                )));
            }
            let size = subcode.size();
            total += &size;
            classes.push(CodeClass {
                profile: pc.profile,
                score: score(&pc.profile, delta.max(1)),
                shape,
                subcode,
                size,
            });
        }
        if total != self.claimed_size {
            return Err(Error::DumpInvalid(format!(
                "claimed size {} does not match computed size {}",
                self.claimed_size, total
            )));
        }
        Ok(SubspaceCode {
            field,
            n: self.n,
            d: self.d,
            metric: self.metric,
            classes,
            size: total,
        })
    }
}

/// Verification strategy.
#[derive(Clone, Copy, Debug)]
pub enum VerifyMode {
    /// Enumerate every codeword and check all pairs; requires the code size
    /// to be within `cap`.
    Exhaustive { cap: u64 },
    /// Exact cross-class and within-class certificates plus randomly
    /// sampled pairs.
    Sampled { seed: u64, trials: u64 },
}

/// Outcome of a minimum-distance verification.
#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub claimed_distance: usize,
    /// Proven lower bound on the minimum distance; `None` when the code has
    /// fewer than two codewords (vacuously certified) or when a certificate
    /// component could not be computed.
    pub verified_floor: Option<usize>,
    /// Minimum profile distance over distinct class pairs (sampled mode).
    pub cross_class_floor: Option<usize>,
    /// Minimum within-class distance implied by subcode rank distances
    /// (sampled mode).
    pub within_class_floor: Option<usize>,
    /// Minimum distance over sampled codeword pairs (sampled mode).
    pub sampled_min: Option<usize>,
    pub pairs_checked: u64,
    pub certified: bool,
}

fn sample_below(rng: &mut ChaCha12Rng, bound: &BigUint) -> BigUint {
    debug_assert!(!bound.is_zero());
    let bits = bound.bits();
    let bytes = bits.div_ceil(8) as usize;
    let spare = (bytes as u64 * 8 - bits) as u32;
    loop {
        let mut buf = vec![0u8; bytes];
        rng.fill_bytes(&mut buf);
        if let Some(last) = buf.last_mut() {
            *last >>= spare;
        }
        let candidate = BigUint::from_bytes_le(&buf);
        if &candidate < bound {
            return candidate;
        }
    }
}

/// Verify the minimum distance of a code.
///
/// Exhaustive mode scans all codeword pairs. Sampled mode combines an exact
/// certificate (profile distances across classes, which lower-bound the
/// code metric, plus each class subcode's exact minimum rank distance,
/// which determines within-class distances) with randomly sampled pairs.
pub fn verify_min_distance(code: &SubspaceCode, mode: VerifyMode) -> Result<VerifyReport> {
    match mode {
        VerifyMode::Exhaustive { cap } => {
            let size = code.size();
            if size > &BigUint::from(cap) {
                return Err(Error::CapExceeded {
                    needed: u128::MAX,
                    cap,
                });
            }
            let (words, truncated) = code.enumerate(cap);
            debug_assert!(!truncated);
            let mut floor: Option<usize> = None;
            let mut pairs = 0u64;
            for i in 0..words.len() {
                for j in i + 1..words.len() {
                    let dist = code.metric.distance(&words[i], &words[j]);
                    pairs += 1;
                    floor = Some(floor.map_or(dist, |f| f.min(dist)));
                }
            }
            let certified = floor.is_none_or(|f| f >= code.d);
            Ok(VerifyReport {
                claimed_distance: code.d,
                verified_floor: floor,
                cross_class_floor: None,
                within_class_floor: None,
                sampled_min: None,
                pairs_checked: pairs,
                certified,
            })
        }
        VerifyMode::Sampled { seed, trials } => {
            // Cross-class floor: profile distances lower-bound the metric.
            let mut cross: Option<usize> = None;
            for (i, a) in code.classes.iter().enumerate() {
                for b in &code.classes[i + 1..] {
                    let dist = code.metric.profile_distance(&a.profile, &b.profile);
                    cross = Some(cross.map_or(dist, |c| c.min(dist)));
                }
            }
            // Within-class floor: exact subcode minimum rank distance. Two
            // lifts of the same profile with fillings X and Y are at
            // injection distance rank(X - Y) and subspace distance
            // 2 rank(X - Y).
            let mut within: Option<usize> = None;
            let mut within_exact = true;
            for class in &code.classes {
                if class.subcode.dim() == 0 {
                    continue;
                }
                match class.subcode.min_rank_distance(ScanMode::Exhaustive {
                    cap: DEFAULT_EXHAUSTIVE_CAP,
                }) {
                    Ok(RankDistanceReport::Exact(r)) => {
                        let dist = code.metric.distance_from_rank(r);
                        within = Some(within.map_or(dist, |w| w.min(dist)));
                    }
                    Ok(RankDistanceReport::NoNonzeroCodewords) => {}
                    Ok(RankDistanceReport::SampledUpperBound { .. }) | Err(_) => {
                        within_exact = false;
                    }
                }
            }
            let floor = match (cross, within) {
                (Some(c), Some(w)) => Some(c.min(w)),
                (Some(c), None) => Some(c),
                (None, Some(w)) => Some(w),
                (None, None) => None,
            };
            let floor = if within_exact { floor } else { None };

            // Random pair sampling on actual codewords.
            let two = BigUint::from(2u32);
            let mut sampled_min: Option<usize> = None;
            let mut pairs = 0u64;
            if code.size() >= &two {
                let mut rng = ChaCha12Rng::seed_from_u64(seed);
                for _ in 0..trials {
                    let i = sample_below(&mut rng, code.size());
                    let j = loop {
                        let j = sample_below(&mut rng, code.size());
                        if j != i {
                            break j;
                        }
                    };
                    let dist = code
                        .metric
                        .distance(&code.codeword_at(&i), &code.codeword_at(&j));
                    sampled_min = Some(sampled_min.map_or(dist, |s| s.min(dist)));
                    pairs += 1;
                }
            }

            let vacuous = code.size() < &two;
            let certified = vacuous
                || (within_exact
                    && floor.is_some_and(|f| f >= code.d)
                    && sampled_min.is_none_or(|s| s >= code.d));
            Ok(VerifyReport {
                claimed_distance: code.d,
                verified_floor: floor,
                cross_class_floor: cross,
                within_class_floor: within,
                sampled_min,
                pairs_checked: pairs,
                certified,
            })
        }
    }
}
