//! Generating functions of symmetric cones as sums of simple rational terms,
//! one per group element, and their expansion as truncated power series.
//!
//! A term is `z^{num} / ∏_k (1 - z^{den_k})`. [`build_general`] builds the
//! sum from the generator matrix and the group action; the builders in
//! [`closed_form`] evaluate the explicit per-kind formulas instead.

pub mod closed_form;
pub mod series;

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::conegeom::{check_saliency, generator_matrix, ConeSpec};
use crate::error::{Error, Result};

pub use closed_form::{build_closed_form, build_type_a, build_type_b, build_type_d};
pub use series::TruncatedSeries;

/// `z^numerator / ∏ (1 - z^d)` over the denominator vectors.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct RationalTerm {
    pub numerator: Vec<i64>,
    pub denominators: Vec<Vec<i64>>,
}

/// A generating function written as a sum of [`RationalTerm`]s.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct RationalSum {
    terms: Vec<RationalTerm>,
    #[serde(skip)]
    dim: usize,
}

impl RationalSum {
    pub fn new(dim: usize, terms: Vec<RationalTerm>) -> Result<Self> {
        for t in &terms {
            if t.numerator.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: t.numerator.len(),
                });
            }
            if let Some(d) = t.denominators.iter().find(|d| d.len() != dim) {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: d.len(),
                });
            }
        }
        Ok(Self { terms, dim })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn terms(&self) -> &[RationalTerm] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

fn add_vec(acc: &mut [i64], v: &[i64]) {
    acc.iter_mut().zip(v).for_each(|(a, b)| *a += b);
}

/// `f_C = Σ_σ z^{Σ_{j ∈ Dr(σ)} σ b_j} / ∏_j (1 - z^{σ b_j})`.
pub fn build_general(spec: &ConeSpec) -> Result<RationalSum> {
    check_saliency(spec)?;
    let gens = generator_matrix(spec);
    let n = spec.dim();
    let terms = spec
        .group()
        .map(|g| {
            let images: Vec<Vec<i64>> = gens
                .columns()
                .iter()
                .map(|b| g.apply(b).expect("generator has ambient dimension"))
                .collect();
            let mut numerator = vec![0; n];
            for j in g.descent_set().iter() {
                add_vec(&mut numerator, &images[j - 1]);
            }
            RationalTerm {
                numerator,
                denominators: images,
            }
        })
        .collect();
    RationalSum::new(n, terms)
}

/// Substitutes `z_i = q^{w_i}`, replacing every exponent vector `v` by
/// `⟨w, v⟩`.
pub fn specialize(sum: &RationalSum, weights: &[i64]) -> Result<RationalSum> {
    if weights.len() != sum.dim {
        return Err(Error::DimensionMismatch {
            expected: sum.dim,
            found: weights.len(),
        });
    }
    let pair = |v: &[i64]| -> i64 { v.iter().zip(weights).map(|(a, b)| a * b).sum() };
    let mut terms = Vec::with_capacity(sum.terms.len());
    for (idx, t) in sum.terms.iter().enumerate() {
        let denominators: Vec<Vec<i64>> = t.denominators.iter().map(|d| vec![pair(d)]).collect();
        if let Some(d) = denominators.iter().find(|d| d[0] == 0) {
            return Err(Error::NonPositiveDenominator {
                term: idx,
                exponent: d[0],
            });
        }
        terms.push(RationalTerm {
            numerator: vec![pair(&t.numerator)],
            denominators,
        });
    }
    RationalSum::new(1, terms)
}

/// Expands one univariate term on the degree window `lo..=n`.
fn expand_term(idx: usize, term: &RationalTerm, lo: i64, n: i64) -> Result<Vec<BigInt>> {
    let len = (n - lo + 1) as usize;
    let mut coeffs = vec![BigInt::zero(); len];
    let start = term.numerator[0];
    if start <= n {
        coeffs[(start - lo) as usize] = BigInt::from(1);
    }
    for den in &term.denominators {
        let e = den[0];
        if e <= 0 {
            return Err(Error::NonPositiveDenominator {
                term: idx,
                exponent: e,
            });
        }
        let e = e as usize;
        for i in e..len {
            let (head, tail) = coeffs.split_at_mut(i);
            tail[0] += &head[i - e];
        }
    }
    Ok(coeffs)
}

/// Expands a univariate sum to degree `truncation`.
///
/// Terms are Laurent series when their numerator degree is negative; each is
/// expanded from `min(0, numerator degree)` and the negative part of the
/// total must vanish.
pub fn expand(sum: &RationalSum, truncation: usize) -> Result<TruncatedSeries> {
    if sum.dim != 1 {
        return Err(Error::DimensionMismatch {
            expected: 1,
            found: sum.dim,
        });
    }
    let n = truncation as i64;
    let lo = sum
        .terms
        .iter()
        .map(|t| t.numerator[0].min(0))
        .min()
        .unwrap_or(0);
    let len = (n - lo + 1) as usize;
    let total = sum
        .terms
        .par_iter()
        .enumerate()
        .map(|(idx, t)| expand_term(idx, t, lo, n))
        .try_reduce(
            || vec![BigInt::zero(); len],
            |mut acc, v| {
                acc.iter_mut().zip(v).for_each(|(a, b)| *a += b);
                Ok(acc)
            },
        )?;
    let negative = (-lo) as usize;
    if let Some(i) = total[..negative].iter().position(|c| !c.is_zero()) {
        return Err(Error::UncancelledLaurentPart {
            degree: lo + i as i64,
        });
    }
    Ok(TruncatedSeries::from_coefficients(
        total[negative..].to_vec(),
    ))
}

/// Collapses a multivariate sum along `grading` and expands it.
pub fn expand_graded(
    sum: &RationalSum,
    grading: &[i64],
    truncation: usize,
) -> Result<TruncatedSeries> {
    expand(&specialize(sum, grading)?, truncation)
}

/// `expand(specialize(build_general(spec), default grading), N)`.
pub fn cone_series(spec: &ConeSpec, truncation: usize) -> Result<TruncatedSeries> {
    expand_graded(&build_general(spec)?, &spec.default_grading(), truncation)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::Kind;

    fn spec(kind: Kind, n: usize, a: &[i64]) -> ConeSpec {
        ConeSpec::new(kind, n, a.to_vec()).unwrap()
    }

    fn univariate(num: i64, dens: &[i64]) -> RationalTerm {
        RationalTerm {
            numerator: vec![num],
            denominators: dens.iter().map(|&d| vec![d]).collect(),
        }
    }

    #[test]
    fn general_b2() {
        let sum = build_general(&spec(Kind::B, 2, &[1])).unwrap();
        assert_eq!(
            sum.terms(),
            &[
                RationalTerm {
                    numerator: vec![0, 0],
                    denominators: vec![vec![1, 1], vec![0, 1]]
                },
                RationalTerm {
                    numerator: vec![-1, 1],
                    denominators: vec![vec![-1, 1], vec![0, 1]]
                },
            ]
        );
        let spec_sum = specialize(&sum, &[0, 1]).unwrap();
        assert_eq!(
            spec_sum.terms(),
            &[univariate(0, &[1, 1]), univariate(1, &[1, 1])]
        );
        assert_eq!(
            expand(&spec_sum, 4).unwrap(),
            TruncatedSeries::from_i64s(&[1, 3, 5, 7, 9])
        );
    }

    #[test]
    fn term_counts() {
        assert_eq!(build_general(&spec(Kind::B, 3, &[2, 4])).unwrap().len(), 8);
        assert_eq!(
            build_general(&spec(Kind::A, 3, &[0, 0, 1])).unwrap().len(),
            6
        );
        assert_eq!(
            build_general(&spec(Kind::D, 4, &[0, 1, 1])).unwrap().len(),
            24
        );
    }

    #[test]
    fn type_b_example_series() {
        let s = cone_series(&spec(Kind::B, 3, &[2, 4]), 9).unwrap();
        assert_eq!(
            s,
            TruncatedSeries::from_i64s(&[1, 1, 1, 1, 5, 5, 9, 9, 13, 13])
        );
    }

    #[test]
    fn quadrant() {
        let s = cone_series(&spec(Kind::A, 2, &[0, 1]), 6).unwrap();
        assert_eq!(s, TruncatedSeries::from_i64s(&[1, 2, 3, 4, 5, 6, 7]));
    }

    #[test]
    fn zero_truncation_is_one() {
        for s in [
            spec(Kind::A, 3, &[-1, 1, 1]),
            spec(Kind::B, 3, &[1, 3]),
            spec(Kind::D, 3, &[0, 2]),
        ] {
            assert_eq!(cone_series(&s, 0).unwrap(), TruncatedSeries::one(0));
        }
    }

    #[test]
    fn negative_degrees_are_reported() {
        // Unit numerators: nothing can cancel a stray negative degree.
        let sum = RationalSum::new(1, vec![univariate(-2, &[2]), univariate(0, &[])]).unwrap();
        assert_eq!(
            expand(&sum, 2),
            Err(Error::UncancelledLaurentPart { degree: -2 })
        );
        let ok = RationalSum::new(1, vec![univariate(3, &[1])]).unwrap();
        assert_eq!(
            expand(&ok, 4).unwrap(),
            TruncatedSeries::from_i64s(&[0, 0, 0, 1, 1])
        );
        let beyond = RationalSum::new(1, vec![univariate(7, &[1])]).unwrap();
        assert_eq!(expand(&beyond, 4).unwrap(), TruncatedSeries::zero(4));
    }

    #[test]
    fn bad_denominators() {
        let sum = RationalSum::new(1, vec![univariate(0, &[1, -2])]).unwrap();
        assert_eq!(
            expand(&sum, 2),
            Err(Error::NonPositiveDenominator {
                term: 0,
                exponent: -2
            })
        );
        let multi = build_general(&spec(Kind::B, 2, &[1])).unwrap();
        assert!(matches!(
            specialize(&multi, &[1, 0]),
            Err(Error::NonPositiveDenominator { .. })
        ));
        assert!(specialize(&multi, &[1]).is_err());
        assert!(expand(&multi, 2).is_err());
    }

    #[test]
    fn non_salient_spec_rejected() {
        assert!(matches!(
            build_general(&spec(Kind::D, 3, &[2, 2])),
            Err(Error::NonSalient { .. })
        ));
    }
}
