//! Signed permutation groups of types A, B and D.
//!
//! Elements are stored in one-line notation: `perm[i - 1] = π(i)` and
//! `signs[i - 1] = ε_i`. The linear action on exponent vectors is
//! `σ e_i = ε_i e_{π(i)}`. For kinds B and D the group acts on the first `m`
//! coordinates of an `(m + 1)`-dimensional space and fixes the last one; for
//! kind A it acts on all `m` coordinates.
//!
//! Descent indices for kinds B and D are shifted by one relative to the usual
//! signed-permutation literature, so that they run over `1..=m` and index the
//! simple generators `s_1, ..., s_m` directly. Index `1` compares against the
//! virtual position zero.

use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Coxeter type of a group or cone family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Kind {
    A,
    B,
    D,
}

impl Kind {
    /// Number of elements of the group of this kind on `m` letters.
    pub fn group_order(self, m: usize) -> u128 {
        let fact: u128 = (1..=m as u128).product();
        match self {
            Kind::A => fact,
            Kind::B => fact << m,
            Kind::D => fact << (m - 1),
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Kind::A => "A",
            Kind::B => "B",
            Kind::D => "D",
        };
        f.write_str(s)
    }
}

impl std::str::FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" => Ok(Kind::A),
            "B" | "b" => Ok(Kind::B),
            "D" | "d" => Ok(Kind::D),
            other => Err(Error::InvalidSpec(format!("unknown kind {other:?}"))),
        }
    }
}

/// A (signed) permutation tagged with its Coxeter type.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupElement {
    kind: Kind,
    perm: Vec<usize>,
    signs: Vec<i8>,
}

impl GroupElement {
    /// Validates and builds an element. For kind A `signs` may be empty.
    pub fn new(kind: Kind, perm: Vec<usize>, signs: Vec<i8>) -> Result<Self> {
        let m = perm.len();
        if m == 0 {
            return Err(Error::InvalidSpec("empty permutation".into()));
        }
        let mut seen = vec![false; m];
        for &p in &perm {
            if p == 0 || p > m || seen[p - 1] {
                return Err(Error::InvalidSpec(format!(
                    "{perm:?} is not a permutation of 1..={m}"
                )));
            }
            seen[p - 1] = true;
        }
        let signs = match kind {
            Kind::A => {
                if !(signs.is_empty() || signs.iter().all(|&s| s == 1)) {
                    return Err(Error::InvalidSpec(
                        "type A elements carry no sign changes".into(),
                    ));
                }
                vec![1; m]
            }
            Kind::B | Kind::D => {
                if signs.len() != m {
                    return Err(Error::DimensionMismatch {
                        expected: m,
                        found: signs.len(),
                    });
                }
                if signs.iter().any(|&s| s != 1 && s != -1) {
                    return Err(Error::InvalidSpec(format!("signs {signs:?} must be ±1")));
                }
                if kind == Kind::D {
                    if m < 2 {
                        return Err(Error::InvalidSpec("type D needs at least 2 letters".into()));
                    }
                    if signs.iter().filter(|&&s| s < 0).count() % 2 == 1 {
                        return Err(Error::InvalidSpec(format!(
                            "signs {signs:?} have odd product, not in the even-signed group"
                        )));
                    }
                }
                signs
            }
        };
        Ok(Self { kind, perm, signs })
    }

    pub fn identity(kind: Kind, m: usize) -> Self {
        Self {
            kind,
            perm: (1..=m).collect(),
            signs: vec![1; m],
        }
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    /// Number of letters `m` the group permutes.
    pub fn rank(&self) -> usize {
        self.perm.len()
    }

    /// One-line notation `π(1), ..., π(m)`.
    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    /// Signs `ε_1, ..., ε_m` (all `+1` for kind A).
    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    /// Dimension of the space the element acts on.
    pub fn ambient_dim(&self) -> usize {
        match self.kind {
            Kind::A => self.rank(),
            Kind::B | Kind::D => self.rank() + 1,
        }
    }

    /// `ε_i π(i)` for `1 <= i <= m`.
    fn signed(&self, i: usize) -> i64 {
        i64::from(self.signs[i - 1]) * self.perm[i - 1] as i64
    }

    /// Value compared at position `j - 1` when testing descent `j`.
    fn left_value(&self, j: usize) -> i64 {
        match (self.kind, j) {
            (Kind::B, 1) => 0,
            (Kind::D, 1) => -self.signed(2),
            _ => self.signed(j - 1),
        }
    }

    /// Right descent set in one-line-notation form.
    pub fn descent_set(&self) -> DescentSet {
        let m = self.rank();
        let indices = match self.kind {
            Kind::A => (1..m)
                .filter(|&j| self.perm[j - 1] > self.perm[j])
                .collect(),
            Kind::B | Kind::D => (1..=m)
                .filter(|&j| self.left_value(j) > self.signed(j))
                .collect(),
        };
        DescentSet { indices }
    }

    fn require_b(&self) -> Result<()> {
        if self.kind == Kind::B {
            Ok(())
        } else {
            Err(Error::InvalidSpec(format!(
                "statistic is defined on the hyperoctahedral group only, got kind {}",
                self.kind
            )))
        }
    }

    pub fn des(&self) -> Result<u64> {
        self.require_b()?;
        Ok(self.descent_set().len() as u64)
    }

    /// Major index `Σ_{j ∈ D} (j - 1)`.
    pub fn maj(&self) -> Result<u64> {
        self.require_b()?;
        Ok(self.descent_set().iter().map(|j| (j - 1) as u64).sum())
    }

    /// Comajor index `Σ_{j ∈ D} (m + 1 - j)`.
    pub fn comaj(&self) -> Result<u64> {
        self.require_b()?;
        let m = self.rank();
        Ok(self.descent_set().iter().map(|j| (m + 1 - j) as u64).sum())
    }

    /// `Σ_{j ∈ D} (j + (j + 1) + ... + m)`.
    pub fn cobin(&self) -> Result<u64> {
        self.require_b()?;
        let m = self.rank() as u64;
        Ok(self
            .descent_set()
            .iter()
            .map(|j| {
                let j = j as u64;
                (j..=m).sum::<u64>()
            })
            .sum())
    }

    fn check_dim(&self, v: &[i64]) -> Result<()> {
        let expected = self.ambient_dim();
        if v.len() == expected {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected,
                found: v.len(),
            })
        }
    }

    /// Applies the orthogonal map: `w_{π(i)} = ε_i v_i`.
    pub fn apply(&self, v: &[i64]) -> Result<Vec<i64>> {
        self.check_dim(v)?;
        let mut w = v.to_vec();
        for i in 0..self.rank() {
            w[self.perm[i] - 1] = i64::from(self.signs[i]) * v[i];
        }
        Ok(w)
    }

    /// Applies the inverse map: `w_i = ε_i v_{π(i)}`.
    pub fn apply_inverse(&self, v: &[i64]) -> Result<Vec<i64>> {
        self.check_dim(v)?;
        let mut w = v.to_vec();
        for i in 0..self.rank() {
            w[i] = i64::from(self.signs[i]) * v[self.perm[i] - 1];
        }
        Ok(w)
    }

    /// The composite map `self ∘ other`.
    pub fn compose(&self, other: &GroupElement) -> Result<GroupElement> {
        if self.kind != other.kind || self.rank() != other.rank() {
            return Err(Error::InvalidSpec(
                "composing elements of different groups".into(),
            ));
        }
        let perm = other.perm.iter().map(|&p| self.perm[p - 1]).collect();
        let signs = other
            .perm
            .iter()
            .zip(&other.signs)
            .map(|(&p, &s)| s * self.signs[p - 1])
            .collect();
        Ok(GroupElement {
            kind: self.kind,
            perm,
            signs,
        })
    }
}

impl fmt::Display for GroupElement {
    /// Signed one-line notation, e.g. `-2 1 3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = (1..=self.rank()).map(|i| self.signed(i)).join(" ");
        f.write_str(&s)
    }
}

/// Sorted set of descent positions (1-based).
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct DescentSet {
    indices: Vec<usize>,
}

impl DescentSet {
    pub fn contains(&self, j: usize) -> bool {
        self.indices.binary_search(&j).is_ok()
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.indices.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.indices
    }
}

impl fmt::Display for DescentSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.indices.iter().join(" "))
    }
}

/// Iterator over all elements of a group, lexicographic in `(π, ε)`.
///
/// Sign vectors are ordered with `+1` before `-1` and `ε_1` most significant,
/// so the identity comes first.
#[derive(Debug, Clone)]
pub struct GroupIter {
    kind: Kind,
    perm: Option<Vec<usize>>,
    mask: u64,
}

impl GroupIter {
    fn sign_limit(&self, m: usize) -> u64 {
        match self.kind {
            Kind::A => 1,
            Kind::B | Kind::D => 1 << m,
        }
    }
}

impl Iterator for GroupIter {
    type Item = GroupElement;

    fn next(&mut self) -> Option<GroupElement> {
        loop {
            let m = self.perm.as_ref()?.len();
            let limit = self.sign_limit(m);
            let perm = self.perm.as_mut()?;
            if self.mask >= limit {
                self.mask = 0;
                if !next_permutation(perm) {
                    self.perm = None;
                    return None;
                }
                continue;
            }
            let mask = self.mask;
            self.mask += 1;
            if self.kind == Kind::D && mask.count_ones() % 2 == 1 {
                continue;
            }
            let signs = (0..m)
                .map(|i| if mask >> (m - 1 - i) & 1 == 1 { -1 } else { 1 })
                .collect();
            return Some(GroupElement {
                kind: self.kind,
                perm: perm.clone(),
                signs,
            });
        }
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Streams every element of the group of `kind` on `m` letters exactly once.
pub fn enumerate_group(kind: Kind, m: usize) -> Result<GroupIter> {
    if m == 0 {
        return Err(Error::InvalidSpec("group rank must be at least 1".into()));
    }
    if kind == Kind::D && m < 2 {
        return Err(Error::InvalidSpec("type D needs at least 2 letters".into()));
    }
    if m >= 64 {
        return Err(Error::InvalidSpec(format!(
            "rank {m} is too large to enumerate"
        )));
    }
    Ok(GroupIter {
        kind,
        perm: Some((1..=m).collect()),
        mask: 0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(perm: &[usize], signs: &[i8]) -> GroupElement {
        GroupElement::new(Kind::B, perm.to_vec(), signs.to_vec()).unwrap()
    }

    #[test]
    fn group_orders() {
        for m in 1..=5 {
            assert_eq!(
                enumerate_group(Kind::A, m).unwrap().count() as u128,
                Kind::A.group_order(m)
            );
            assert_eq!(
                enumerate_group(Kind::B, m).unwrap().count() as u128,
                Kind::B.group_order(m)
            );
            if m >= 2 {
                assert_eq!(
                    enumerate_group(Kind::D, m).unwrap().count() as u128,
                    Kind::D.group_order(m)
                );
            }
        }
        assert_eq!(enumerate_group(Kind::A, 3).unwrap().count(), 6);
        assert_eq!(enumerate_group(Kind::B, 2).unwrap().count(), 8);
        assert_eq!(enumerate_group(Kind::D, 3).unwrap().count(), 24);
    }

    #[test]
    fn enumeration_is_distinct_and_starts_at_identity() {
        let all: Vec<_> = enumerate_group(Kind::B, 3).unwrap().collect();
        assert_eq!(all[0], GroupElement::identity(Kind::B, 3));
        let uniq: std::collections::HashSet<_> = all.iter().cloned().collect();
        assert_eq!(uniq.len(), all.len());
    }

    #[test]
    fn invalid_ranks() {
        assert!(enumerate_group(Kind::A, 0).is_err());
        assert!(enumerate_group(Kind::D, 1).is_err());
    }

    #[test]
    fn invalid_elements() {
        assert!(GroupElement::new(Kind::A, vec![1, 1], vec![]).is_err());
        assert!(GroupElement::new(Kind::B, vec![1, 2], vec![1]).is_err());
        assert!(GroupElement::new(Kind::D, vec![1, 2], vec![-1, 1]).is_err());
        assert!(GroupElement::new(Kind::A, vec![2, 1], vec![1, -1]).is_err());
    }

    #[test]
    fn descent_examples() {
        let a = GroupElement::new(Kind::A, vec![2, 1, 3], vec![]).unwrap();
        assert_eq!(a.descent_set().as_slice(), &[1]);

        assert_eq!(b(&[1, 2], &[-1, 1]).descent_set().as_slice(), &[1]);
        assert!(GroupElement::identity(Kind::B, 4).descent_set().is_empty());

        // ε_0π(0) = -ε_2π(2) = 2 > -1, and -1 > -2.
        let d = GroupElement::new(Kind::D, vec![1, 2, 3], vec![-1, -1, 1]).unwrap();
        assert_eq!(d.descent_set().as_slice(), &[1, 2]);
        assert!(GroupElement::identity(Kind::D, 3).descent_set().is_empty());
        assert!(GroupElement::identity(Kind::A, 3).descent_set().is_empty());
    }

    #[test]
    fn statistics() {
        let g = b(&[1, 2], &[-1, 1]);
        assert_eq!(
            (g.des().unwrap(), g.maj().unwrap(), g.comaj().unwrap()),
            (1, 0, 2)
        );

        let id = GroupElement::identity(Kind::B, 3);
        assert_eq!(
            id.des().unwrap() + id.maj().unwrap() + id.comaj().unwrap() + id.cobin().unwrap(),
            0
        );

        let g = b(&[2, 1], &[1, 1]);
        assert_eq!(g.descent_set().as_slice(), &[2]);
        assert_eq!(
            (
                g.des().unwrap(),
                g.maj().unwrap(),
                g.comaj().unwrap(),
                g.cobin().unwrap()
            ),
            (1, 1, 1, 2)
        );

        let a = GroupElement::identity(Kind::A, 2);
        assert!(a.maj().is_err());
        assert!(GroupElement::identity(Kind::D, 2).comaj().is_err());
    }

    #[test]
    fn comaj_relation_on_b() {
        for m in 1..=5 {
            for g in enumerate_group(Kind::B, m).unwrap() {
                let lhs = g.comaj().unwrap();
                assert_eq!(lhs, m as u64 * g.des().unwrap() - g.maj().unwrap());
            }
        }
    }

    #[test]
    fn first_descent_iff_first_entry_negative() {
        for g in enumerate_group(Kind::B, 3).unwrap() {
            assert_eq!(g.descent_set().contains(1), g.signs()[0] < 0);
        }
    }

    #[test]
    fn apply_examples() {
        let id = GroupElement::identity(Kind::B, 2);
        assert_eq!(id.apply(&[4, -2, 7]).unwrap(), vec![4, -2, 7]);
        assert_eq!(
            b(&[2, 1], &[1, -1]).apply(&[1, 0, 5]).unwrap(),
            vec![0, 1, 5]
        );
        let a = GroupElement::new(Kind::A, vec![2, 3, 1], vec![]).unwrap();
        assert_eq!(a.apply(&[1, 2, 3]).unwrap(), vec![3, 1, 2]);
        assert!(a.apply(&[1, 2]).is_err());
        assert!(id.apply(&[1, 2]).is_err());
    }

    #[test]
    fn inverse_undoes_apply() {
        let v = [3, -1, 4, 9];
        for g in enumerate_group(Kind::D, 3).unwrap() {
            assert_eq!(g.apply_inverse(&g.apply(&v).unwrap()).unwrap(), v.to_vec());
        }
    }

    #[test]
    fn display() {
        assert_eq!(b(&[2, 1], &[-1, 1]).to_string(), "-2 1");
        assert_eq!(b(&[2, 1], &[-1, 1]).descent_set().to_string(), "1");
    }
}
