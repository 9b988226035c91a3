//! Closed-form q-polynomials and verification drivers for the
//! permutation-statistic, Ehrhart and lecture hall identities of type B
//! cones.
//!
//! Every driver computes the same quantity along independent routes (closed
//! form, generating-function expansion, brute-force enumeration) and reports
//! the first degree at which any two disagree.

pub mod qpoly;

use num_bigint::BigInt;
use serde::Serialize;

use crate::conegeom::ConeSpec;
use crate::coxeter::{enumerate_group, GroupElement, Kind};
use crate::error::{Error, Result};
use crate::genfunc::{
    build_closed_form, build_general, cone_series, expand_graded, TruncatedSeries,
};
use crate::oracle::{enumerate_lecture_hall, lecture_hall_weighted_series, oracle_series};

pub use qpoly::{MultiPoly, QPolynomial};

/// Outcome of one identity check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verification {
    pub name: String,
    pub passed: bool,
    /// Smallest degree (of the truncation variable) where routes disagree.
    pub first_mismatch: Option<u64>,
    pub detail: String,
}

impl Verification {
    fn from_mismatch(name: String, first_mismatch: Option<u64>, detail: String) -> Self {
        Self {
            name,
            passed: first_mismatch.is_none(),
            first_mismatch,
            detail,
        }
    }
}

fn render(s: &TruncatedSeries) -> String {
    s.coefficients()
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

/// Compares every route against the first one.
fn compare_routes(name: String, routes: &[(&str, TruncatedSeries)]) -> Verification {
    let (_, reference) = &routes[0];
    let mismatch = routes[1..]
        .iter()
        .filter_map(|(_, s)| reference.first_mismatch(s))
        .min();
    let labels: Vec<&str> = routes.iter().map(|(l, _)| *l).collect();
    let detail = match mismatch {
        None => format!("{} agree: [{}]", labels.join(" = "), render(reference)),
        Some(_) => routes
            .iter()
            .map(|(l, s)| format!("{l}: [{}]", render(s)))
            .collect::<Vec<_>>()
            .join("; "),
    };
    Verification::from_mismatch(name, mismatch.map(|d| d as u64), detail)
}

/// `[k]_t = 1 + t + ... + t^{k-1}`, with `[0]_t = 0`.
pub fn q_bracket(k: i64) -> Result<QPolynomial> {
    if k < 0 {
        return Err(Error::InvalidSpec(format!("q-bracket of negative {k}")));
    }
    Ok(QPolynomial::from_coefficients(&vec![1; k as usize]))
}

/// `[k]_t! = [1]_t [2]_t ⋯ [k]_t`, with `[0]_t! = 1`.
pub fn q_factorial(k: i64) -> Result<QPolynomial> {
    if k < 0 {
        return Err(Error::InvalidSpec(format!("q-factorial of negative {k}")));
    }
    (1..=k).try_fold(QPolynomial::one(), |acc, j| Ok(acc.mul(&q_bracket(j)?)))
}

fn hyperoctahedral(m: usize) -> Result<impl Iterator<Item = GroupElement>> {
    enumerate_group(Kind::B, m)
}

fn statistic_polynomial(
    m: usize,
    stat: impl Fn(&GroupElement) -> Result<u64>,
) -> Result<QPolynomial> {
    let mut p = QPolynomial::zero();
    for g in hyperoctahedral(m)? {
        p.add_term(BigInt::from(1), stat(&g)? as usize);
    }
    Ok(p)
}

/// `Σ_{B_m} t^{des}` by enumeration.
pub fn eulerian_b(m: usize) -> Result<QPolynomial> {
    statistic_polynomial(m, GroupElement::des)
}

/// `Σ_{B_m} t^{comaj}` by enumeration.
pub fn comaj_distribution(m: usize) -> Result<QPolynomial> {
    statistic_polynomial(m, GroupElement::comaj)
}

/// `(1 + t)^m [m]_t!`.
pub fn comaj_closed_form(m: usize) -> Result<QPolynomial> {
    Ok(QPolynomial::from_coefficients(&[1, 1])
        .pow(m as u32)
        .mul(&q_factorial(m as i64)?))
}

fn type_b(n: usize, a: Vec<i64>) -> Result<ConeSpec> {
    ConeSpec::new(Kind::B, n, a)
}

/// `Σ_k (2k+1)^m t^k` against `eulerian_b(m) / (1-t)^{m+1}`, the expanded
/// cube cone and the lattice-point count of the cube.
pub fn verify_eulerian_identity(m: usize, truncation: usize) -> Result<Verification> {
    let mut from_polynomial = eulerian_b(m)?.to_series(truncation);
    for _ in 0..=m {
        from_polynomial.divide_by_one_minus(1);
    }
    let cube = TruncatedSeries::from_coefficients(
        (0..=truncation)
            .map(|k| BigInt::from(2 * k + 1).pow(m as u32))
            .collect(),
    );
    let mut a = vec![0; m];
    a[m - 1] = 1;
    let spec = type_b(m + 1, a)?;
    let routes = [
        ("(2k+1)^m", cube),
        ("eulerian/(1-t)^(m+1)", from_polynomial),
        ("genfunc", cone_series(&spec, truncation)?),
        (
            "oracle",
            oracle_series(&spec, &spec.default_grading(), truncation)?,
        ),
    ];
    Ok(compare_routes(
        format!("eulerian m={m} N={truncation}"),
        &routes,
    ))
}

/// Enumerated comajor distribution against `(1+t)^m [m]_t!`, and its value
/// at `t = 1` against `2^m m!`.
pub fn verify_comaj_distribution(m: usize) -> Result<Verification> {
    let enumerated = comaj_distribution(m)?;
    let closed = comaj_closed_form(m)?;
    let order = BigInt::from(Kind::B.group_order(m));
    let mismatch = (0..=enumerated.degree().max(closed.degree()).unwrap_or(0))
        .find(|&d| enumerated.coefficient(d) != closed.coefficient(d))
        .map(|d| d as u64);
    let total_ok = enumerated.eval_at_one() == order;
    let detail = format!(
        "enumeration: {enumerated}; closed form: {closed}; value at 1: {}",
        enumerated.eval_at_one()
    );
    let mut v = Verification::from_mismatch(format!("comaj m={m}"), mismatch, detail);
    v.passed &= total_ok;
    Ok(v)
}

/// `Σ_{B_m} x^{des} q^{comaj}` as a polynomial in `[x, q]`.
pub fn des_comaj_joint(m: usize, max_x: u64) -> Result<MultiPoly<2>> {
    let mut p = MultiPoly::zero(max_x);
    for g in hyperoctahedral(m)? {
        p.add_term(BigInt::from(1), [g.des()?, g.comaj()?]);
    }
    Ok(p)
}

/// `Σ x^{des} q^{comaj} = ∏_{i=0}^m (1 - x q^i) Σ_k ([k+1]_q + q[k]_q)^m x^k`,
/// compared up to `x^N` with `N >= m`.
pub fn verify_joint_chow_gessel(m: usize, truncation: usize) -> Result<Verification> {
    if truncation < m {
        return Err(Error::InvalidSpec(format!(
            "truncation {truncation} must be at least m = {m}"
        )));
    }
    let max_x = truncation as u64;
    let lhs = des_comaj_joint(m, max_x)?;

    let mut series = MultiPoly::<2>::zero(max_x);
    for k in 0..=truncation as i64 {
        let base = q_bracket(k + 1)?.add(&q_bracket(k)?.mul(&QPolynomial::monomial(1, 1)));
        for (d, c) in base.pow(m as u32).terms() {
            series.add_term(c.clone(), [k as u64, d as u64]);
        }
    }
    let mut rhs = series;
    for i in 0..=m as u64 {
        let mut factor = MultiPoly::<2>::one(max_x);
        factor.add_term(BigInt::from(-1), [1, i]);
        rhs = rhs.mul(&factor);
    }
    let mismatch = lhs.first_mismatch(&rhs);
    let detail = format!("{} monomials on each side", lhs.len());
    Ok(Verification::from_mismatch(
        format!("chow-gessel m={m} N={truncation}"),
        mismatch,
        detail,
    ))
}

/// Type B cone whose slice at `x_n = 1` is
/// `c (|x_1| + ... + |x_{n-1}|) + b max |x_i| <= 1`.
pub fn almost_constant_spec(n_minus_1: usize, b: i64, c: i64) -> Result<ConeSpec> {
    if n_minus_1 == 0 || b < 0 || c < 0 || (b == 0 && c == 0) {
        return Err(Error::InvalidSpec(format!(
            "need n-1 >= 1 and b, c >= 0 not both zero, got n-1={n_minus_1}, b={b}, c={c}"
        )));
    }
    let mut a = vec![c; n_minus_1];
    a[n_minus_1 - 1] = c + b;
    type_b(n_minus_1 + 1, a)
}

fn bracket_series(k: i64, c: usize, truncation: usize) -> Result<TruncatedSeries> {
    Ok(q_bracket(k)?.compose_power(c).to_series(truncation))
}

fn series_pow(s: &TruncatedSeries, k: usize) -> TruncatedSeries {
    (0..k).fold(TruncatedSeries::one(s.truncation()), |acc, _| acc.mul(s))
}

/// Closed-form Ehrhart series of the almost-constant-coefficient polytope:
/// `[c]_t (1+t^c)^{n-1} / (1-t^c)^n` when `b = 0`, otherwise
/// `[b]_t Σ_k ([k+1]_{t^c} + t^c [k]_{t^c})^{n-1} t^{bk}`.
pub fn ehrhart_almost_constant(
    n_minus_1: usize,
    b: i64,
    c: i64,
    truncation: usize,
) -> Result<TruncatedSeries> {
    almost_constant_spec(n_minus_1, b, c)?;
    let cu = c as usize;
    if b == 0 {
        let mut s = q_bracket(c)?
            .mul(
                &QPolynomial::one()
                    .add(&QPolynomial::monomial(1, cu))
                    .pow(n_minus_1 as u32),
            )
            .to_series(truncation);
        for _ in 0..=n_minus_1 {
            s.divide_by_one_minus(cu);
        }
        return Ok(s);
    }
    let bu = b as usize;
    let mut sum = TruncatedSeries::zero(truncation);
    for k in 0..=(truncation / bu) as i64 {
        let shifted = bracket_series(k, cu, truncation)?.scale_shift(&BigInt::from(1), cu);
        let base = bracket_series(k + 1, cu, truncation)?.add(&shifted);
        let term = series_pow(&base, n_minus_1).scale_shift(&BigInt::from(1), bu * k as usize);
        sum = sum.add(&term);
    }
    Ok(bracket_series(b, 1, truncation)?.mul(&sum))
}

pub fn verify_almost_constant(
    n_minus_1: usize,
    b: i64,
    c: i64,
    truncation: usize,
) -> Result<Verification> {
    let spec = almost_constant_spec(n_minus_1, b, c)?;
    let routes = [
        (
            "closed form",
            ehrhart_almost_constant(n_minus_1, b, c, truncation)?,
        ),
        ("genfunc", cone_series(&spec, truncation)?),
        (
            "oracle",
            oracle_series(&spec, &spec.default_grading(), truncation)?,
        ),
    ];
    Ok(compare_routes(
        format!("almost-constant n-1={n_minus_1} b={b} c={c} N={truncation}"),
        &routes,
    ))
}

/// `a_i = 2di + c` for `i < n-1` and `a_{n-1} = 2d(n-1) + c + b`.
pub fn lecture_hall_weights(n: usize, d: i64, c: i64, b: i64) -> Result<Vec<i64>> {
    if n < 2 || d < 0 || b < 0 || c < -2 * d || (d == 0 && c == 0 && b == 0) {
        return Err(Error::InvalidSpec(format!(
            "need n >= 2, d >= 0, c >= -2d, b >= 0, not all zero; got n={n}, d={d}, c={c}, b={b}"
        )));
    }
    let mut a: Vec<i64> = (1..n as i64).map(|i| 2 * d * i + c).collect();
    a[n - 2] += b;
    Ok(a)
}

/// `f_C(t) = 1/(1-t) Σ_{λ ∈ L_{n-1}} t^{Σ a_i ⌈λ_i/2i⌉}` for the lecture
/// hall weights.
pub fn verify_lecture_hall_series(
    n: usize,
    d: i64,
    c: i64,
    b: i64,
    truncation: usize,
) -> Result<Verification> {
    let a = lecture_hall_weights(n, d, c, b)?;
    let spec = type_b(n, a.clone())?;
    let mut lecture = lecture_hall_weighted_series(&a, truncation)?;
    lecture.divide_by_one_minus(1);
    let routes = [
        ("genfunc", cone_series(&spec, truncation)?),
        ("lecture hall", lecture),
        (
            "oracle",
            oracle_series(&spec, &spec.default_grading(), truncation)?,
        ),
    ];
    Ok(compare_routes(
        format!("lecture-hall n={n} d={d} c={c} b={b} a={a:?} N={truncation}"),
        &routes,
    ))
}

/// Trivariate identity in `[x, q, y]` relating `(⌈λ_n/2n⌉, stat_1, stat_2)`
/// on `L_n` to `(des, comaj, 2 cobin)` on `B_n`, compared up to `x^N`.
pub fn verify_lecture_hall_statistics(n: usize, truncation: usize) -> Result<Verification> {
    if n == 0 {
        return Err(Error::InvalidSpec("n must be at least 1".into()));
    }
    let max_x = truncation as u64;
    let mut lhs = MultiPoly::<3>::zero(max_x);
    // ⌈λ_n / 2n⌉ <= N exactly when λ_n <= 2nN.
    for lambda in enumerate_lecture_hall(n, 2 * n as u64 * max_x) {
        lhs.add_term(
            BigInt::from(1),
            [
                lambda.last_ceiling() as u64,
                lambda.stat1() as u64,
                lambda.stat2() as u64,
            ],
        );
    }
    let mut rhs = MultiPoly::<3>::zero(max_x);
    for g in hyperoctahedral(n)? {
        rhs.add_term(BigInt::from(1), [g.des()?, g.comaj()?, 2 * g.cobin()?]);
    }
    let n64 = n as u64;
    for i in 0..n64 {
        let y_exp: u64 = 2 * (i + 1..=n64).sum::<u64>();
        rhs = rhs.divide_by_one_minus([1, n64 - i, y_exp]);
    }
    let mismatch = lhs.first_mismatch(&rhs);
    let detail = format!(
        "{} monomials on the lecture hall side, {} on the signed permutation side",
        lhs.len(),
        rhs.len()
    );
    Ok(Verification::from_mismatch(
        format!("lecture-hall-stats n={n} N={truncation}"),
        mismatch,
        detail,
    ))
}

/// General construction, closed-form construction and lattice-point
/// enumeration of one cone, all expanded along the default grading.
pub fn verify_oracle_equivalence(spec: &ConeSpec, truncation: usize) -> Result<Verification> {
    let grading = spec.default_grading();
    let routes = [
        (
            "general",
            expand_graded(&build_general(spec)?, &grading, truncation)?,
        ),
        (
            "closed form",
            expand_graded(&build_closed_form(spec)?, &grading, truncation)?,
        ),
        ("oracle", oracle_series(spec, &grading, truncation)?),
    ];
    Ok(compare_routes(
        format!(
            "oracle {} n={} a={:?} N={truncation}",
            spec.kind(),
            spec.dim(),
            spec.weights()
        ),
        &routes,
    ))
}
