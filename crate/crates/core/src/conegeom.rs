//! Symmetric monoconditional cones, their fundamental simplicial cone `C_+`
//! and lattice-point checks of the disjoint triangulation
//! `C = ⋃_σ σ C_{Dr(σ)}`.
//!
//! Kinds and their cones (`x ∈ R^n`):
//!
//! * A: `a_1 x_{π(1)} + ... + a_n x_{π(n)} >= 0` for all `π ∈ S_n`, lattice `Z^n`.
//! * B: `ε_1 a_1 x_{π(1)} + ... + ε_{n-1} a_{n-1} x_{π(n-1)} <= x_n` over `B_{n-1}`,
//!   lattice `Z^n`.
//! * D: same inequality over the even-signed group, lattice
//!   `Γ = {x ∈ Z^n : x_1 ≡ ... ≡ x_{n-1} (mod 2)}`.

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use crate::coxeter::{enumerate_group, GroupElement, Kind};
use crate::error::{Error, Result};

/// Cone family selector: kind, ambient dimension and weight vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct ConeSpec {
    kind: Kind,
    n: usize,
    a: Vec<i64>,
}

impl ConeSpec {
    pub fn new(kind: Kind, n: usize, a: Vec<i64>) -> Result<Self> {
        let invalid = |msg: String| Err(Error::InvalidSpec(msg));
        if n < 2 {
            return invalid(format!("ambient dimension must be at least 2, got {n}"));
        }
        if kind == Kind::D && n < 3 {
            return invalid(format!("type D requires n >= 3, got {n}"));
        }
        let expected = if kind == Kind::A { n } else { n - 1 };
        if a.len() != expected {
            return invalid(format!(
                "type {kind} with n = {n} needs {expected} weights, got {}",
                a.len()
            ));
        }
        let sorted_from = |k: usize| a[k..].windows(2).all(|w| w[0] <= w[1]);
        match kind {
            Kind::A => {
                if !sorted_from(0) {
                    return invalid(format!("weights {a:?} must be nondecreasing"));
                }
                if a.iter().sum::<i64>() != 1 {
                    return invalid(format!("weights {a:?} must sum to 1"));
                }
            }
            Kind::B => {
                if a[0] < 0 || !sorted_from(0) {
                    return invalid(format!(
                        "weights {a:?} must satisfy 0 <= a_1 <= ... <= a_(n-1)"
                    ));
                }
                if a[n - 2] == 0 {
                    return invalid("the last weight must be nonzero".into());
                }
            }
            Kind::D => {
                if a[0].abs() > a[1] || !sorted_from(1) {
                    return invalid(format!(
                        "weights {a:?} must satisfy |a_1| <= a_2 <= ... <= a_(n-1)"
                    ));
                }
                if a[n - 2] == 0 {
                    return invalid("the last weight must be nonzero".into());
                }
            }
        }
        Ok(Self { kind, n, a })
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    /// Ambient dimension `n`.
    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn weights(&self) -> &[i64] {
        &self.a
    }

    /// Number of letters of the acting group.
    pub fn rank(&self) -> usize {
        match self.kind {
            Kind::A => self.n,
            Kind::B | Kind::D => self.n - 1,
        }
    }

    pub fn group(&self) -> impl Iterator<Item = GroupElement> {
        enumerate_group(self.kind, self.rank()).expect("validated spec has a valid group")
    }

    /// Grading used for series expansion: total degree for A, `x_n` otherwise.
    pub fn default_grading(&self) -> Vec<i64> {
        match self.kind {
            Kind::A => vec![1; self.n],
            Kind::B | Kind::D => {
                let mut w = vec![0; self.n];
                w[self.n - 1] = 1;
                w
            }
        }
    }

    pub fn grade(&self, x: &[i64]) -> i64 {
        match self.kind {
            Kind::A => x.iter().sum(),
            Kind::B | Kind::D => x[self.n - 1],
        }
    }

    /// Whether `x` lies in the lattice the cone is counted against.
    pub fn in_lattice(&self, x: &[i64]) -> bool {
        match self.kind {
            Kind::A | Kind::B => true,
            Kind::D => x[..self.n - 1].iter().map(|v| v.rem_euclid(2)).all_equal(),
        }
    }

    fn check_dim(&self, x: &[i64]) -> Result<()> {
        if x.len() == self.n {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.n,
                found: x.len(),
            })
        }
    }
}

/// Columns `b_1, ..., b_n` generate `C_+` over the lattice, ordered so that
/// `b_j ∉ H_j` for `j < n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorMatrix {
    columns: Vec<Vec<i64>>,
}

impl GeneratorMatrix {
    pub fn columns(&self) -> &[Vec<i64>] {
        &self.columns
    }

    /// Column `b_j`, 1-based.
    pub fn column(&self, j: usize) -> &[i64] {
        &self.columns[j - 1]
    }

    /// Entry `b_{ij}`, 1-based.
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.columns[j - 1][i - 1]
    }

    pub fn determinant(&self) -> i128 {
        let rows: Vec<Vec<i64>> = (0..self.columns.len())
            .map(|i| self.columns.iter().map(|c| c[i]).collect())
            .collect();
        determinant(&rows)
    }
}

/// Exact determinant by fraction-free (Bareiss) elimination.
pub fn determinant(rows: &[Vec<i64>]) -> i128 {
    let n = rows.len();
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| v as i128).collect())
        .collect();
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| m[i][k] != 0) else {
            return 0;
        };
        if p != k {
            m.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

/// Primitive generators of the fundamental cone `C_+`.
pub fn generator_matrix(spec: &ConeSpec) -> GeneratorMatrix {
    let n = spec.n;
    let a = &spec.a;
    let m = n - 1;
    // Σ_j for B and D: suffix sums a_j + ... + a_{n-1}.
    let suffix = |j: usize| a[j - 1..m].iter().sum::<i64>();
    let column = |j: usize| -> Vec<i64> {
        (1..=n)
            .map(|i| match spec.kind {
                Kind::A => {
                    let prefix: i64 = a[..j.min(n)].iter().sum();
                    if j == n {
                        1
                    } else if i <= j {
                        1 - prefix
                    } else {
                        -prefix
                    }
                }
                Kind::B => {
                    if j == n {
                        i64::from(i == n)
                    } else if i < j {
                        0
                    } else if i < n {
                        1
                    } else {
                        suffix(j)
                    }
                }
                Kind::D => match j {
                    _ if j == n => i64::from(i == n),
                    1 => {
                        if i < n {
                            1
                        } else {
                            suffix(1)
                        }
                    }
                    2 => {
                        if i == 1 {
                            -1
                        } else if i < n {
                            1
                        } else {
                            suffix(2) - a[0]
                        }
                    }
                    _ => {
                        if i < j {
                            0
                        } else if i < n {
                            2
                        } else {
                            2 * suffix(j)
                        }
                    }
                },
            })
            .collect()
    };
    GeneratorMatrix {
        columns: (1..=n).map(column).collect(),
    }
}

/// Rows of the facet matrix `A` with `C_+ = {y : A y >= 0}`.
pub fn facet_matrix(spec: &ConeSpec) -> Vec<Vec<i64>> {
    let n = spec.n;
    let unit = |i: usize| {
        let mut r = vec![0; n];
        r[i - 1] = 1;
        r
    };
    let last_row_bd = || {
        let mut r: Vec<i64> = spec.a.iter().map(|v| -v).collect();
        r.push(1);
        r
    };
    (1..=n)
        .map(|i| match spec.kind {
            Kind::A => {
                if i == n {
                    spec.a.clone()
                } else {
                    let mut r = unit(i);
                    r[i] = -1;
                    r
                }
            }
            Kind::B | Kind::D if i == n => last_row_bd(),
            Kind::B => {
                let mut r = unit(i);
                if i > 1 {
                    r[i - 2] = -1;
                }
                r
            }
            Kind::D => {
                let mut r = unit(i);
                match i {
                    1 => r[1] = 1,
                    2 => r[0] = -1,
                    _ => r[i - 2] = -1,
                }
                r
            }
        })
        .collect()
}

/// Applies the simple reflection `s_j` (1-based) of `kind` to `x`.
pub fn simple_reflection(kind: Kind, j: usize, x: &[i64]) -> Vec<i64> {
    let mut y = x.to_vec();
    match (kind, j) {
        (Kind::A, _) => y.swap(j - 1, j),
        (Kind::B, 1) => y[0] = -y[0],
        (Kind::D, 1) => {
            y[0] = -x[1];
            y[1] = -x[0];
        }
        (Kind::B | Kind::D, _) => y.swap(j - 2, j - 1),
    }
    y
}

/// `x ∈ H_j`, tested as `s_j x = x`.
pub fn on_wall(kind: Kind, j: usize, x: &[i64]) -> bool {
    simple_reflection(kind, j, x) == x
}

/// `A y >= 0`.
pub fn in_fundamental_cone(spec: &ConeSpec, y: &[i64]) -> bool {
    facet_matrix(spec).iter().all(|row| dot(row, y) >= 0)
}

fn dot(u: &[i64], v: &[i64]) -> i64 {
    u.iter().zip(v).map(|(a, b)| a * b).sum()
}

/// Reference membership test: checks the defining inequality for every
/// group element.
pub fn membership(spec: &ConeSpec, x: &[i64]) -> Result<bool> {
    spec.check_dim(x)?;
    let n = spec.n;
    Ok(spec.group().all(|g| {
        let lhs: i64 = (0..spec.rank())
            .map(|i| i64::from(g.signs()[i]) * spec.a[i] * x[g.perm()[i] - 1])
            .sum();
        match spec.kind {
            Kind::A => lhs >= 0,
            Kind::B | Kind::D => lhs <= x[n - 1],
        }
    }))
}

/// Membership via the rearrangement inequality for kinds A and B, falling
/// back to [`membership`] for kind D.
pub fn membership_fast(spec: &ConeSpec, x: &[i64]) -> Result<bool> {
    spec.check_dim(x)?;
    match spec.kind {
        Kind::A => {
            // Smallest weight meets the largest coordinate.
            let mut xs = x.to_vec();
            xs.sort_unstable_by(|p, q| q.cmp(p));
            Ok(dot(&spec.a, &xs) >= 0)
        }
        Kind::B => {
            let mut mods: Vec<i64> = x[..spec.n - 1].iter().map(|v| v.abs()).collect();
            mods.sort_unstable();
            Ok(dot(&spec.a, &mods) <= x[spec.n - 1])
        }
        Kind::D => membership(spec, x),
    }
}

/// Rejects cones with a generator of nonpositive grading.
pub fn check_saliency(spec: &ConeSpec) -> Result<()> {
    let gens = generator_matrix(spec);
    for (j, b) in gens.columns().iter().enumerate() {
        let grading = spec.grade(b);
        if grading <= 0 {
            return Err(Error::NonSalient {
                index: j + 1,
                grading,
            });
        }
    }
    Ok(())
}

/// Enumeration region for lattice points of a given grade.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Region {
    /// Smallest box that provably contains every cone point of the grade.
    #[default]
    Tight,
    /// A larger box, used to cross-check completeness of `Tight`.
    Conservative,
}

/// Per-coordinate bounds for the free coordinates at grade `d`.
fn coordinate_box(spec: &ConeSpec, d: i64, region: Region) -> (i64, i64) {
    match (spec.kind, region) {
        // Every cone point is Σ λ_j σ b_j with λ_j >= 0 and Σ λ_j <= d
        // (generator gradings are integers >= 1), and W permutes coordinates.
        (Kind::A, Region::Tight) => {
            let gens = generator_matrix(spec);
            let entries = || gens.columns().iter().flatten().copied();
            let hi = entries().max().unwrap_or(0).max(0);
            let lo = entries().min().unwrap_or(0).min(0);
            (d * lo, d * hi)
        }
        (Kind::A, Region::Conservative) => {
            let gens = generator_matrix(spec);
            let big = gens
                .columns()
                .iter()
                .flatten()
                .map(|v| v.abs())
                .max()
                .unwrap_or(1);
            let h = d * big * spec.n as i64;
            (-h, h)
        }
        // Choosing (π, ε) so that every term is nonnegative, with the largest
        // modulus at position n-1, gives max |x_i| <= x_n. For D the sign
        // forced by parity goes on the smallest modulus at position 1, which
        // a_2 >= |a_1| (n >= 4) or a_2 - |a_1| >= 1 (salient n = 3) absorbs.
        (Kind::B | Kind::D, Region::Tight) => (-d, d),
        (Kind::B | Kind::D, Region::Conservative) => {
            let h = d * (1 + spec.a.iter().map(|v| v.abs()).sum::<i64>());
            (-h, h)
        }
    }
}

/// All lattice points of the cone with grade exactly `degree`.
pub fn lattice_points(spec: &ConeSpec, degree: u64) -> Result<Vec<Vec<i64>>> {
    lattice_points_in(spec, degree, Region::Tight)
}

pub fn lattice_points_in(spec: &ConeSpec, degree: u64, region: Region) -> Result<Vec<Vec<i64>>> {
    check_saliency(spec)?;
    let d = degree as i64;
    let (lo, hi) = coordinate_box(spec, d, region);
    let n = spec.n;
    let mut points = Vec::new();
    let free: Vec<_> = (0..n - 1).map(|_| lo..=hi).collect();
    for head in free.into_iter().multi_cartesian_product() {
        let last = match spec.kind {
            Kind::A => d - head.iter().sum::<i64>(),
            Kind::B | Kind::D => d,
        };
        if spec.kind == Kind::A && !(lo..=hi).contains(&last) {
            continue;
        }
        let mut x = head;
        x.push(last);
        if spec.in_lattice(&x) && membership_fast(spec, &x)? {
            points.push(x);
        }
    }
    Ok(points)
}

/// A cone point not covered exactly once by the pieces `σ C_{Dr(σ)}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoverViolation {
    pub point: Vec<i64>,
    pub cover_count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TriangulationReport {
    pub points_checked: usize,
    pub violations: Vec<CoverViolation>,
}

impl TriangulationReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks that every lattice point of grade `<= bound` lies in exactly one
/// piece `σ C_{Dr(σ)}`, i.e. `σ^{-1} x ∈ C_+` and `σ^{-1} x ∉ H_j` for all
/// `j ∈ Dr(σ)`.
pub fn triangulation_check(spec: &ConeSpec, bound: u64) -> Result<TriangulationReport> {
    let pieces: Vec<(GroupElement, Vec<usize>)> = spec
        .group()
        .map(|g| {
            let ds = g.descent_set().as_slice().to_vec();
            (g, ds)
        })
        .collect();
    let facets = facet_matrix(spec);
    let mut points = Vec::new();
    for d in 0..=bound {
        points.extend(lattice_points(spec, d)?);
    }
    let violations = points
        .par_iter()
        .filter_map(|x| {
            let cover_count = pieces
                .iter()
                .filter(|(g, ds)| {
                    let y = g.apply_inverse(x).expect("dimension checked");
                    facets.iter().all(|row| dot(row, &y) >= 0)
                        && ds.iter().all(|&j| !on_wall(spec.kind, j, &y))
                })
                .count();
            (cover_count != 1).then(|| CoverViolation {
                point: x.clone(),
                cover_count,
            })
        })
        .collect();
    Ok(TriangulationReport {
        points_checked: points.len(),
        violations,
    })
}
