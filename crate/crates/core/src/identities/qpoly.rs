//! Sparse exact polynomials in one and several variables.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::genfunc::TruncatedSeries;

/// Univariate polynomial in `t` with big-integer coefficients.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct QPolynomial {
    coeffs: BTreeMap<usize, BigInt>,
}

impl QPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    pub fn monomial(coefficient: i64, degree: usize) -> Self {
        let mut p = Self::zero();
        p.add_term(BigInt::from(coefficient), degree);
        p
    }

    /// `c_0 + c_1 t + ...`.
    pub fn from_coefficients(coeffs: &[i64]) -> Self {
        let mut p = Self::zero();
        for (d, &c) in coeffs.iter().enumerate() {
            p.add_term(BigInt::from(c), d);
        }
        p
    }

    pub fn add_term(&mut self, coefficient: BigInt, degree: usize) {
        let slot = self.coeffs.entry(degree).or_default();
        *slot += coefficient;
        if slot.is_zero() {
            self.coeffs.remove(&degree);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn coefficient(&self, degree: usize) -> BigInt {
        self.coeffs.get(&degree).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &BigInt)> {
        self.coeffs.iter().map(|(&d, c)| (d, c))
    }

    /// Dense coefficients `c_0..=c_deg` (empty for the zero polynomial).
    pub fn dense(&self) -> Vec<BigInt> {
        match self.degree() {
            None => Vec::new(),
            Some(deg) => (0..=deg).map(|d| self.coefficient(d)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (d, c) in other.terms() {
            out.add_term(c.clone(), d);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (i, a) in self.terms() {
            for (j, b) in other.terms() {
                out.add_term(a * b, i + j);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| acc.mul(self))
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    /// Substitutes `t -> t^c`; `c = 0` evaluates at `t = 1`.
    pub fn compose_power(&self, c: usize) -> Self {
        let mut out = Self::zero();
        for (d, coeff) in self.terms() {
            out.add_term(coeff.clone(), d * c);
        }
        out
    }

    pub fn is_palindromic(&self) -> bool {
        let v = self.dense();
        v.iter().eq(v.iter().rev())
    }

    pub fn to_series(&self, truncation: usize) -> TruncatedSeries {
        let mut coeffs = vec![BigInt::zero(); truncation + 1];
        for (d, c) in self.terms().take_while(|(d, _)| *d <= truncation) {
            coeffs[d] = c.clone();
        }
        TruncatedSeries::from_coefficients(coeffs)
    }
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms()
            .map(|(d, c)| match d {
                0 => c.to_string(),
                1 if c.is_one() => "t".to_string(),
                1 => format!("{c}t"),
                _ if c.is_one() => format!("t^{d}"),
                _ => format!("{c}t^{d}"),
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// Polynomial in `K` variables, truncated by the degree of the first one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly<const K: usize> {
    coeffs: BTreeMap<[u64; K], BigInt>,
    max_lead: u64,
}

impl<const K: usize> MultiPoly<K> {
    /// Zero, keeping only terms whose first exponent is at most `max_lead`.
    pub fn zero(max_lead: u64) -> Self {
        Self {
            coeffs: BTreeMap::new(),
            max_lead,
        }
    }

    pub fn one(max_lead: u64) -> Self {
        let mut p = Self::zero(max_lead);
        p.add_term(BigInt::one(), [0; K]);
        p
    }

    pub fn max_lead(&self) -> u64 {
        self.max_lead
    }

    pub fn add_term(&mut self, coefficient: BigInt, exponents: [u64; K]) {
        if exponents[0] > self.max_lead {
            return;
        }
        let slot = self.coeffs.entry(exponents).or_default();
        *slot += coefficient;
        if slot.is_zero() {
            self.coeffs.remove(&exponents);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u64; K], &BigInt)> {
        self.coeffs.iter()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.max_lead.min(other.max_lead));
        for (e, a) in self.terms() {
            for (f, b) in other.terms() {
                let mut g = [0; K];
                for k in 0..K {
                    g[k] = e[k] + f[k];
                }
                out.add_term(a * b, g);
            }
        }
        out
    }

    /// Multiplies by `1 / (1 - m)` for a monomial `m` with positive first
    /// exponent.
    pub fn divide_by_one_minus(&self, monomial: [u64; K]) -> Self {
        assert!(
            monomial[0] > 0,
            "geometric factor must raise the leading degree"
        );
        let mut geometric = Self::one(self.max_lead);
        let mut power = [0; K];
        loop {
            for k in 0..K {
                power[k] += monomial[k];
            }
            if power[0] > self.max_lead {
                break;
            }
            geometric.add_term(BigInt::one(), power);
        }
        self.mul(&geometric)
    }

    /// Smallest leading exponent at which the two polynomials differ.
    pub fn first_mismatch(&self, other: &Self) -> Option<u64> {
        let keys = self.coeffs.keys().chain(other.coeffs.keys());
        keys.filter(|e| self.coeffs.get(*e) != other.coeffs.get(*e))
            .map(|e| e[0])
            .min()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let p = QPolynomial::from_coefficients(&[1, 1]);
        assert_eq!(p.pow(3), QPolynomial::from_coefficients(&[1, 3, 3, 1]));
        assert_eq!(p.pow(0), QPolynomial::one());
        assert_eq!(
            p.add(&QPolynomial::from_coefficients(&[-1, -1])),
            QPolynomial::zero()
        );
        assert_eq!(p.eval_at_one(), BigInt::from(2));
        assert_eq!(
            p.compose_power(3),
            QPolynomial::from_coefficients(&[1, 0, 0, 1])
        );
        assert_eq!(p.compose_power(0), QPolynomial::monomial(2, 0));
        assert_eq!(
            QPolynomial::from_coefficients(&[1, 6, 1]).to_string(),
            "1 + 6t + t^2"
        );
    }

    #[test]
    fn multivariate_geometric() {
        // 1/(1 - x y) truncated at x^3
        let p = MultiPoly::<2>::one(3).divide_by_one_minus([1, 1]);
        let expected: Vec<_> = (0..=3).map(|k| ([k, k], BigInt::one())).collect();
        let got: Vec<_> = p.terms().map(|(e, c)| (*e, c.clone())).collect();
        assert_eq!(got, expected);
        let mut q = p.clone();
        q.add_term(BigInt::one(), [2, 0]);
        assert_eq!(p.first_mismatch(&q), Some(2));
        q.add_term(BigInt::one(), [9, 0]);
        assert_eq!(q.len(), 5);
    }
}
