//! Truncated univariate power series with big-integer coefficients.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Coefficients of `q^0, ..., q^N`; degrees above `N` are unknown.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    pub fn zero(truncation: usize) -> Self {
        Self {
            coeffs: vec![BigInt::zero(); truncation + 1],
        }
    }

    pub fn one(truncation: usize) -> Self {
        Self::monomial(1, 0, truncation)
    }

    /// `coefficient * q^degree`, dropped if `degree` exceeds the truncation.
    pub fn monomial(coefficient: i64, degree: usize, truncation: usize) -> Self {
        let mut s = Self::zero(truncation);
        if degree <= truncation {
            s.coeffs[degree] = BigInt::from(coefficient);
        }
        s
    }

    /// Builds a series from `c_0, ..., c_N`. Panics on an empty vector.
    pub fn from_coefficients(coeffs: Vec<BigInt>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a truncated series has at least one coefficient"
        );
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coefficients(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `1 / (1 - q^e)` truncated at `N`.
    pub fn geometric(e: usize, truncation: usize) -> Self {
        assert!(e > 0, "geometric series needs a positive step");
        let mut s = Self::zero(truncation);
        for d in (0..=truncation).step_by(e) {
            s.coeffs[d] = BigInt::one();
        }
        s
    }

    pub fn truncation(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `q^d`, or `None` beyond the truncation.
    pub fn coefficient(&self, d: usize) -> Option<&BigInt> {
        self.coeffs.get(d)
    }

    pub fn truncate(&self, truncation: usize) -> Self {
        let n = truncation.min(self.truncation());
        Self {
            coeffs: self.coeffs[..=n].to_vec(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.truncation().min(other.truncation());
        Self {
            coeffs: (0..=n)
                .map(|d| &self.coeffs[d] + &other.coeffs[d])
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.truncation().min(other.truncation());
        Self {
            coeffs: (0..=n)
                .map(|d| &self.coeffs[d] - &other.coeffs[d])
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.truncation().min(other.truncation());
        let mut out = Self::zero(n);
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(n + 1 - i) {
                out.coeffs[i + j] += a * b;
            }
        }
        out
    }

    /// `factor * q^shift * self`, keeping the same truncation.
    pub fn scale_shift(&self, factor: &BigInt, shift: usize) -> Self {
        let mut out = Self::zero(self.truncation());
        for d in shift..=self.truncation() {
            out.coeffs[d] = factor * &self.coeffs[d - shift];
        }
        out
    }

    /// Multiplies in place by `1 / (1 - q^e)`.
    pub fn divide_by_one_minus(&mut self, e: usize) {
        assert!(e > 0, "geometric factor needs a positive step");
        for d in e..self.coeffs.len() {
            let (lo, hi) = self.coeffs.split_at_mut(d);
            hi[0] += &lo[d - e];
        }
    }

    /// Equality on the common truncation range.
    pub fn agrees_with(&self, other: &Self) -> bool {
        self.first_mismatch(other).is_none()
    }

    /// Smallest degree (within the common range) where the series differ.
    pub fn first_mismatch(&self, other: &Self) -> Option<usize> {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .position(|(a, b)| a != b)
    }
}

#[derive(Serialize, Deserialize)]
struct SeriesDocument {
    truncation: usize,
    coefficients: Vec<String>,
}

impl Serialize for TruncatedSeries {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        SeriesDocument {
            truncation: self.truncation(),
            coefficients: self.coeffs.iter().map(ToString::to_string).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for TruncatedSeries {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let doc = SeriesDocument::deserialize(deserializer)?;
        if doc.coefficients.len() != doc.truncation + 1 {
            return Err(D::Error::custom(format!(
                "expected {} coefficients, got {}",
                doc.truncation + 1,
                doc.coefficients.len()
            )));
        }
        let coeffs = doc
            .coefficients
            .iter()
            .map(|c| c.parse::<BigInt>().map_err(D::Error::custom))
            .collect::<Result<_, _>>()?;
        Ok(Self { coeffs })
    }
}
