//! Per-kind explicit formulas for `f_C`, written directly in the `z`
//! coordinates without the generator matrix.
//!
//! * A: `1/(1 - z_1⋯z_n) Σ_π ∏_{j ∈ D(π)} m_j / ∏_{j<n} (1 - m_j)` with
//!   `m_j = (z_1⋯z_n)^{-Σ_j} ∏_{i ≤ j} z_{π(i)}`.
//! * B: `1/(1 - z_n) Σ_{(π,ε)} ∏_{j ∈ D} m_j / ∏_j (1 - m_j)` with
//!   `m_j = ∏_{i=j}^{n-1} z_{π(i)}^{ε_i} z_n^{a_i}`.
//! * D: as B over even sign vectors, with `m_2` multiplied by
//!   `z_{π(1)}^{-ε_1} z_n^{-a_1}` and `m_j` squared for `j >= 3`.
//!
//! The prefactor is the last denominator of every term, matching the
//! ordering used by [`super::build_general`].

use crate::conegeom::{check_saliency, ConeSpec};
use crate::coxeter::{GroupElement, Kind};
use crate::error::{Error, Result};

use super::{RationalSum, RationalTerm};

fn require(spec: &ConeSpec, kind: Kind) -> Result<()> {
    if spec.kind() == kind {
        check_saliency(spec)
    } else {
        Err(Error::InvalidSpec(format!(
            "expected a type {kind} cone, got type {}",
            spec.kind()
        )))
    }
}

fn assemble(g: &GroupElement, mut factors: Vec<Vec<i64>>, prefactor: Vec<i64>) -> RationalTerm {
    let n = prefactor.len();
    let mut numerator = vec![0; n];
    for j in g.descent_set().iter() {
        for (acc, v) in numerator.iter_mut().zip(&factors[j - 1]) {
            *acc += v;
        }
    }
    factors.push(prefactor);
    RationalTerm {
        numerator,
        denominators: factors,
    }
}

pub fn build_type_a(spec: &ConeSpec) -> Result<RationalSum> {
    require(spec, Kind::A)?;
    let n = spec.dim();
    let a = spec.weights();
    let terms = spec
        .group()
        .map(|g| {
            let mut factors = Vec::with_capacity(n);
            let mut prefix_sum = 0;
            let mut seen = vec![0; n];
            for j in 1..n {
                prefix_sum += a[j - 1];
                seen[g.perm()[j - 1] - 1] = 1;
                factors.push(seen.iter().map(|s| s - prefix_sum).collect());
            }
            assemble(&g, factors, vec![1; n])
        })
        .collect();
    RationalSum::new(n, terms)
}

/// `m_j` of the type B formula.
fn suffix_monomial(g: &GroupElement, a: &[i64], j: usize) -> Vec<i64> {
    let n = a.len() + 1;
    let mut v = vec![0; n];
    for i in j..n {
        v[g.perm()[i - 1] - 1] += i64::from(g.signs()[i - 1]);
        v[n - 1] += a[i - 1];
    }
    v
}

fn last_unit(n: usize) -> Vec<i64> {
    let mut e = vec![0; n];
    e[n - 1] = 1;
    e
}

pub fn build_type_b(spec: &ConeSpec) -> Result<RationalSum> {
    require(spec, Kind::B)?;
    let n = spec.dim();
    let a = spec.weights();
    let terms = spec
        .group()
        .map(|g| {
            let factors = (1..n).map(|j| suffix_monomial(&g, a, j)).collect();
            assemble(&g, factors, last_unit(n))
        })
        .collect();
    RationalSum::new(n, terms)
}

pub fn build_type_d(spec: &ConeSpec) -> Result<RationalSum> {
    require(spec, Kind::D)?;
    let n = spec.dim();
    let a = spec.weights();
    let terms = spec
        .group()
        .map(|g| {
            let factors = (1..n)
                .map(|j| {
                    let mut v = suffix_monomial(&g, a, j);
                    match j {
                        1 => {}
                        2 => {
                            v[g.perm()[0] - 1] -= i64::from(g.signs()[0]);
                            v[n - 1] -= a[0];
                        }
                        _ => v.iter_mut().for_each(|x| *x *= 2),
                    }
                    v
                })
                .collect();
            assemble(&g, factors, last_unit(n))
        })
        .collect();
    RationalSum::new(n, terms)
}

/// Dispatches to the closed-form builder of the spec's kind.
pub fn build_closed_form(spec: &ConeSpec) -> Result<RationalSum> {
    match spec.kind() {
        Kind::A => build_type_a(spec),
        Kind::B => build_type_b(spec),
        Kind::D => build_type_d(spec),
    }
}
