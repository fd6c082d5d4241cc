//! Exact combinatorics for projective-space codes: Gaussian coefficients,
//! projective-space cardinality, injection-ball sizes, the resulting
//! Gilbert–Varshamov-style lower bound, and the puncturing size bound.
//!
//! All arithmetic is exact big-integer work; conversion to log_q floats
//! happens only at the presentation edge.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

/// q-ary Gaussian coefficient: the number of k-dimensional subspaces of an
/// n-dimensional space over GF(q). Zero when `k > n`.
pub fn gaussian(n: u64, k: u64, q: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let q = BigUint::from(q);
    let mut acc = BigUint::one();
    for i in 0..k {
        // Each intermediate value is itself a Gaussian coefficient, so the
        // division is exact.
        acc = acc * (q.pow((n - i) as u32) - 1u32) / (q.pow((i + 1) as u32) - 1u32);
    }
    acc
}

/// Number of subspaces of GF(q)^n of every dimension.
pub fn projective_size(n: u64, q: u64) -> BigUint {
    (0..=n).map(|k| gaussian(n, k, q)).sum()
}

/// Number of subspaces of GF(q)^n within injection distance `t` of a fixed
/// k-dimensional subspace. Depends on the center only through `k`.
pub fn sphere_size(n: u64, q: u64, k: u64, t: u64) -> BigUint {
    assert!(k <= n, "center dimension exceeds ambient dimension");
    let qb = BigUint::from(q);
    let mut total = BigUint::zero();
    for r in 0..=t {
        let mut term = qb.pow((r * r) as u32) * gaussian(k, r, q) * gaussian(n - k, r, q);
        for j in 1..=r {
            let cross = gaussian(k, r, q) * gaussian(n - k, r - j, q)
                + gaussian(n - k, r, q) * gaussian(k, r - j, q);
            term += qb.pow((r * (r - j)) as u32) * cross;
        }
        total += term;
    }
    total
}

/// Lower bound on the maximum size of a code in GF(q)^n with minimum
/// injection distance `d`, kept as an exact (unreduced) ratio.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GvBound {
    pub numerator: BigUint,
    pub denominator: BigUint,
}

impl GvBound {
    /// log_q of the bound.
    pub fn log_q(&self, q: u64) -> f64 {
        log_q_big(&self.numerator, q) - log_q_big(&self.denominator, q)
    }

    /// Floor of the exact ratio.
    pub fn floor(&self) -> BigUint {
        &self.numerator / &self.denominator
    }
}

impl fmt::Display for GvBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numerator, self.denominator)
    }
}

/// Gilbert–Varshamov-style bound: |P|^2 over the dimension-weighted sum of
/// radius d-1 ball sizes.
pub fn gv_bound(n: u64, q: u64, d: u64) -> GvBound {
    assert!(d >= 1, "distance must be at least 1");
    let p = projective_size(n, q);
    let denominator: BigUint = (0..=n)
        .map(|k| gaussian(n, k, q) * sphere_size(n, q, k, d - 1))
        .sum();
    GvBound {
        numerator: &p * &p,
        denominator,
    }
}

/// Guaranteed size after puncturing a code of size `m` with codeword
/// dimension `k` in ambient dimension `n`: floor of
/// `m * (q^(n-k) + q^k - 2) / (q^n - 1)`.
pub fn punctured_size_bound(m: &BigUint, n: u64, k: u64, q: u64) -> BigUint {
    assert!(k <= n);
    let qb = BigUint::from(q);
    let numer = m * (qb.pow((n - k) as u32) + qb.pow(k as u32) - 2u32);
    numer / (qb.pow(n as u32) - 1u32)
}

/// Base-q logarithm of a positive big integer, accurate to double precision.
pub fn log_q_big(x: &BigUint, q: u64) -> f64 {
    assert!(!x.is_zero(), "log of zero");
    let bits = x.bits();
    if bits <= 53 {
        return (x.to_u64().unwrap() as f64).log2() / (q as f64).log2();
    }
    let shift = bits - 53;
    let top = (x >> shift).to_u64().unwrap();
    ((top as f64).log2() + shift as f64) / (q as f64).log2()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::Field;
    use crate::matq::{MatrixGF, Subspace};
    use std::sync::Arc;

    #[test]
    fn gaussian_basics() {
        for n in 0..6u64 {
            assert_eq!(gaussian(n, 0, 2), BigUint::from(1u32));
        }
        assert_eq!(gaussian(2, 1, 2), BigUint::from(3u32));
        assert_eq!(gaussian(4, 2, 2), BigUint::from(35u32));
        assert_eq!(gaussian(3, 5, 2), BigUint::zero());
    }

    #[test]
    fn gaussian_symmetry() {
        for q in [2u64, 3, 4] {
            for n in 0..=8u64 {
                for k in 0..=n {
                    assert_eq!(gaussian(n, k, q), gaussian(n, n - k, q));
                }
            }
        }
    }

    #[test]
    fn projective_sizes() {
        assert_eq!(projective_size(0, 2), BigUint::from(1u32));
        assert_eq!(projective_size(2, 2), BigUint::from(5u32));
        assert_eq!(projective_size(3, 2), BigUint::from(16u32));
    }

    /// Brute-force enumeration of all subspaces of GF(q)^n via row spaces of
    /// every k x n matrix; independent of the closed-form counting above.
    fn enumerate_subspaces(field: &Arc<Field>, n: usize) -> Vec<Subspace> {
        let q = field.order();
        let mut seen: Vec<Subspace> = Vec::new();
        for k in 0..=n {
            let total = q.pow((k * n) as u32);
            for code in 0..total {
                let mut c = code;
                let mut rows = vec![vec![0u64; n]; k];
                for row in rows.iter_mut() {
                    for e in row.iter_mut() {
                        *e = c % q;
                        c /= q;
                    }
                }
                let m = MatrixGF::from_rows(field, rows).unwrap();
                let s = Subspace::from_span(&m);
                if !seen.contains(&s) {
                    seen.push(s);
                }
            }
        }
        seen
    }

    #[test]
    fn gaussian_matches_enumeration() {
        let f2 = Field::new(2, 1).unwrap();
        let spaces = enumerate_subspaces(&f2, 4);
        for k in 0..=4usize {
            let count = spaces.iter().filter(|s| s.dim() == k).count();
            assert_eq!(BigUint::from(count), gaussian(4, k as u64, 2));
        }
        assert_eq!(BigUint::from(spaces.len()), projective_size(4, 2));
    }

    #[test]
    fn sphere_size_examples() {
        for k in 0..=3u64 {
            assert_eq!(sphere_size(3, 2, k, 0), BigUint::one());
        }
        assert_eq!(sphere_size(3, 2, 0, 1), BigUint::from(8u32));
        assert_eq!(sphere_size(3, 2, 1, 1), BigUint::from(11u32));
    }

    #[test]
    fn sphere_size_matches_brute_force_small() {
        let f2 = Field::new(2, 1).unwrap();
        let spaces = enumerate_subspaces(&f2, 3);
        for k in 0..=3usize {
            let center = spaces.iter().find(|s| s.dim() == k).unwrap();
            for t in 0..=3u64 {
                let count = spaces
                    .iter()
                    .filter(|w| center.injection_distance(w) as u64 <= t)
                    .count();
                assert_eq!(
                    BigUint::from(count),
                    sphere_size(3, 2, k as u64, t),
                    "k={k} t={t}"
                );
            }
        }
    }

    #[test]
    fn sphere_size_is_monotone_and_saturates() {
        for (n, q) in [(4u64, 2u64), (3, 3), (5, 2)] {
            let total = projective_size(n, q);
            for k in 0..=n {
                let mut prev = BigUint::zero();
                for t in 0..=n {
                    let s = sphere_size(n, q, k, t);
                    assert!(s >= prev);
                    prev = s;
                }
                assert_eq!(prev, total, "n={n} q={q} k={k}");
            }
        }
    }

    #[test]
    fn sphere_size_depends_only_on_center_dimension() {
        let f2 = Field::new(2, 1).unwrap();
        let spaces = enumerate_subspaces(&f2, 4);
        for k in 1..=3usize {
            let centers: Vec<&Subspace> = spaces.iter().filter(|s| s.dim() == k).take(2).collect();
            assert_eq!(centers.len(), 2);
            for t in 0..=4u64 {
                let counts: Vec<usize> = centers
                    .iter()
                    .map(|c| {
                        spaces
                            .iter()
                            .filter(|w| c.injection_distance(w) as u64 <= t)
                            .count()
                    })
                    .collect();
                assert_eq!(counts[0], counts[1]);
            }
        }
    }

    #[test]
    fn gv_bound_examples() {
        let b = gv_bound(3, 2, 2);
        assert_eq!(b.numerator, BigUint::from(256u32));
        assert_eq!(b.denominator, BigUint::from(170u32));
        assert_eq!(b.to_string(), "256/170");
        assert!((b.log_q(2) - (256f64 / 170f64).log2()).abs() < 1e-12);

        // Radius-zero spheres: the bound is exactly |P|.
        for (n, q) in [(3u64, 2u64), (4, 2), (3, 3)] {
            let b = gv_bound(n, q, 1);
            let p = projective_size(n, q);
            assert_eq!(b.numerator, &p * &p);
            assert_eq!(b.denominator, p);
        }
    }

    #[test]
    fn gv_bound_never_exceeds_projective_size() {
        for (n, q) in [(3u64, 2u64), (4, 2), (5, 2), (3, 3)] {
            let p = projective_size(n, q);
            for d in 1..=n {
                let b = gv_bound(n, q, d);
                // numerator / denominator <= p  <=>  numerator <= p * denominator
                assert!(b.numerator <= &p * &b.denominator);
            }
        }
    }

    #[test]
    fn punctured_bound_examples() {
        let m = BigUint::from(3u32);
        assert_eq!(punctured_size_bound(&m, 2, 0, 2), m);
        assert_eq!(punctured_size_bound(&m, 2, 2, 2), m);
        assert_eq!(punctured_size_bound(&m, 2, 1, 2), BigUint::from(2u32));
    }

    #[test]
    fn log_q_big_handles_wide_values() {
        let x = BigUint::from(2u32).pow(200);
        assert!((log_q_big(&x, 2) - 200.0).abs() < 1e-9);
        let y = BigUint::from(3u32).pow(100);
        assert!((log_q_big(&y, 3) - 100.0).abs() < 1e-9);
    }
}
