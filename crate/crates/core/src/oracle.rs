//! Brute-force ground truth: lattice points of cones and lecture hall
//! partitions, counted directly without any generating-function algebra.

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::conegeom::{lattice_points_in, ConeSpec, Region};
use crate::error::{Error, Result};
use crate::genfunc::TruncatedSeries;

/// Counts lattice points of the cone by grade, `0..=truncation`.
///
/// `weights` must be the spec's default grading, which is what bounds the
/// enumeration region.
pub fn oracle_series(
    spec: &ConeSpec,
    weights: &[i64],
    truncation: usize,
) -> Result<TruncatedSeries> {
    oracle_series_in(spec, weights, truncation, Region::Tight)
}

pub fn oracle_series_in(
    spec: &ConeSpec,
    weights: &[i64],
    truncation: usize,
    region: Region,
) -> Result<TruncatedSeries> {
    if weights.len() != spec.dim() {
        return Err(Error::DimensionMismatch {
            expected: spec.dim(),
            found: weights.len(),
        });
    }
    if weights != spec.default_grading().as_slice() {
        return Err(Error::InvalidSpec(format!(
            "oracle enumeration needs the default grading {:?}, got {weights:?}",
            spec.default_grading()
        )));
    }
    let counts = (0..=truncation as u64)
        .into_par_iter()
        .map(|d| lattice_points_in(spec, d, region).map(|pts| BigInt::from(pts.len())))
        .collect::<Result<Vec<_>>>()?;
    Ok(TruncatedSeries::from_coefficients(counts))
}

/// A lecture hall partition: `0 <= λ_1/1 <= λ_2/2 <= ... <= λ_n/n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LecturePartition(Vec<i64>);

fn ceil_div(p: i64, q: i64) -> i64 {
    (p + q - 1).div_euclid(q)
}

impl LecturePartition {
    pub fn new(parts: Vec<i64>) -> Result<Self> {
        let ok = parts.first().is_none_or(|&p| p >= 0)
            && parts
                .windows(2)
                .enumerate()
                .all(|(k, w)| w[0] * (k as i64 + 2) <= w[1] * (k as i64 + 1));
        if ok {
            Ok(Self(parts))
        } else {
            Err(Error::InvalidSpec(format!(
                "{parts:?} is not a lecture hall partition"
            )))
        }
    }

    pub fn parts(&self) -> &[i64] {
        &self.0
    }

    /// `⌈λ_i / 2i⌉` for each `i`.
    pub fn half_ceilings(&self) -> impl Iterator<Item = i64> + '_ {
        self.0
            .iter()
            .enumerate()
            .map(|(k, &l)| ceil_div(l, 2 * (k as i64 + 1)))
    }

    /// `Σ ⌈λ_i / 2i⌉`.
    pub fn stat1(&self) -> i64 {
        self.half_ceilings().sum()
    }

    /// `Σ 2i ⌈λ_i / 2i⌉`.
    pub fn stat2(&self) -> i64 {
        self.half_ceilings()
            .enumerate()
            .map(|(k, c)| 2 * (k as i64 + 1) * c)
            .sum()
    }

    /// `⌈λ_n / 2n⌉`, zero for the empty partition.
    pub fn last_ceiling(&self) -> i64 {
        self.half_ceilings().last().unwrap_or(0)
    }

    /// `Σ a_i ⌈λ_i / 2i⌉`.
    pub fn weighted(&self, a: &[i64]) -> i64 {
        self.half_ceilings().zip(a).map(|(c, w)| c * w).sum()
    }
}

/// Every `λ ∈ L_n` with `λ_n <= cap`, in lexicographic order.
pub fn enumerate_lecture_hall(n: usize, cap: u64) -> Vec<LecturePartition> {
    fn extend(prefix: &mut Vec<i64>, n: usize, cap: i64, out: &mut Vec<LecturePartition>) {
        let i = prefix.len() as i64 + 1;
        if prefix.len() == n {
            out.push(LecturePartition(prefix.clone()));
            return;
        }
        for v in 0..=cap {
            // λ_{i-1} / (i-1) <= λ_i / i
            if prefix.last().is_none_or(|&p| p * i <= v * (i - 1)) {
                prefix.push(v);
                extend(prefix, n, cap, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::with_capacity(n), n, cap as i64, &mut out);
    out
}

/// `Σ_{λ ∈ L_n} t^{Σ a_i ⌈λ_i/2i⌉}` truncated at `truncation`, `n = a.len()`.
pub fn lecture_hall_weighted_series(a: &[i64], truncation: usize) -> Result<TruncatedSeries> {
    let n = a.len();
    if n == 0 {
        return Err(Error::InvalidSpec("weight vector must be nonempty".into()));
    }
    if a.iter().any(|&w| w < 0) {
        return Err(Error::InvalidSpec(format!(
            "weights {a:?} must be nonnegative"
        )));
    }
    let last = a[n - 1];
    if last == 0 {
        // λ_n carries no weight, so infinitely many partitions share a degree.
        return Err(Error::Unbounded(format!(
            "weights {a:?} put no weight on λ_n"
        )));
    }
    let n64 = n as u64;
    let cap = 2 * n64 * (truncation as u64 / last as u64 + 1);
    let mut coeffs = vec![0u64; truncation + 1];
    for lambda in enumerate_lecture_hall(n, cap) {
        let w = lambda.weighted(a);
        if w <= truncation as i64 {
            coeffs[w as usize] += 1;
        }
    }
    Ok(TruncatedSeries::from_coefficients(
        coeffs.into_iter().map(BigInt::from).collect(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::Kind;

    fn spec(kind: Kind, n: usize, a: &[i64]) -> ConeSpec {
        ConeSpec::new(kind, n, a.to_vec()).unwrap()
    }

    fn lh(v: &[i64]) -> LecturePartition {
        LecturePartition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn cone_counts() {
        let s = spec(Kind::B, 3, &[2, 4]);
        assert_eq!(
            oracle_series(&s, &s.default_grading(), 9).unwrap(),
            TruncatedSeries::from_i64s(&[1, 1, 1, 1, 5, 5, 9, 9, 13, 13])
        );
        let s = spec(Kind::B, 3, &[1, 1]);
        assert_eq!(
            oracle_series(&s, &[0, 0, 1], 3).unwrap(),
            TruncatedSeries::from_i64s(&[1, 5, 13, 25])
        );
        let s = spec(Kind::D, 3, &[0, 1]);
        assert_eq!(
            oracle_series(&s, &[0, 0, 1], 0).unwrap(),
            TruncatedSeries::one(0)
        );
    }

    #[test]
    fn rejects_foreign_grading() {
        let s = spec(Kind::B, 3, &[1, 1]);
        assert!(oracle_series(&s, &[1, 1, 1], 3).is_err());
        assert!(oracle_series(&s, &[0, 1], 3).is_err());
    }

    #[test]
    fn tight_region_is_complete() {
        for s in [
            spec(Kind::B, 3, &[0, 1]),
            spec(Kind::D, 3, &[-1, 2]),
            spec(Kind::D, 4, &[-1, 1, 1]),
            spec(Kind::A, 3, &[-1, 1, 1]),
        ] {
            let w = s.default_grading();
            assert_eq!(
                oracle_series_in(&s, &w, 3, Region::Tight).unwrap(),
                oracle_series_in(&s, &w, 3, Region::Conservative).unwrap(),
                "{s:?}"
            );
        }
    }

    #[test]
    fn lecture_hall_enumeration() {
        assert_eq!(
            enumerate_lecture_hall(2, 2),
            vec![lh(&[0, 0]), lh(&[0, 1]), lh(&[0, 2]), lh(&[1, 2])]
        );
        assert_eq!(enumerate_lecture_hall(1, 4).len(), 5);
        assert!(enumerate_lecture_hall(3, 5).contains(&lh(&[0, 0, 0])));
        assert!(LecturePartition::new(vec![1, 1]).is_err());
        assert!(LecturePartition::new(vec![-1, 0]).is_err());
    }

    #[test]
    fn lecture_hall_matches_filtered_box() {
        let n = 3;
        let cap = 7;
        let listed = enumerate_lecture_hall(n, cap);
        let mut filtered = Vec::new();
        for x in 0..=cap as i64 {
            for y in 0..=cap as i64 {
                for z in 0..=cap as i64 {
                    if let Ok(p) = LecturePartition::new(vec![x, y, z]) {
                        filtered.push(p);
                    }
                }
            }
        }
        assert_eq!(listed, filtered);
    }

    #[test]
    fn statistics() {
        assert_eq!((lh(&[0, 0]).stat1(), lh(&[0, 0]).stat2()), (0, 0));
        assert_eq!((lh(&[1, 2]).stat1(), lh(&[1, 2]).stat2()), (2, 6));
        assert_eq!((lh(&[0, 3]).stat1(), lh(&[0, 3]).stat2()), (1, 4));
        assert_eq!(lh(&[0, 3]).last_ceiling(), 1);
    }

    #[test]
    fn weighted_series() {
        assert_eq!(
            lecture_hall_weighted_series(&[2, 4], 8).unwrap(),
            TruncatedSeries::from_i64s(&[1, 0, 0, 0, 4, 0, 4, 0, 4])
        );
        let s = lecture_hall_weighted_series(&[2, 4], 12).unwrap();
        assert_eq!(s.coefficient(10), Some(&BigInt::from(8)));
        assert_eq!(s.coefficient(12), Some(&BigInt::from(8)));
        assert_eq!(
            lecture_hall_weighted_series(&[1], 3).unwrap(),
            TruncatedSeries::from_i64s(&[1, 2, 2, 2])
        );
        assert!(matches!(
            lecture_hall_weighted_series(&[1, 0], 3),
            Err(Error::Unbounded(_))
        ));
        assert!(lecture_hall_weighted_series(&[0, 0], 3).is_err());
        assert!(lecture_hall_weighted_series(&[-1, 2], 3).is_err());
    }

    #[test]
    fn larger_cap_changes_nothing() {
        let a = [3, 6];
        let s = lecture_hall_weighted_series(&a, 10).unwrap();
        let mut wide = vec![0i64; 11];
        for lam in enumerate_lecture_hall(2, 60) {
            let w = lam.weighted(&a);
            if w <= 10 {
                wide[w as usize] += 1;
            }
        }
        assert_eq!(s, TruncatedSeries::from_i64s(&wide));
    }
}
