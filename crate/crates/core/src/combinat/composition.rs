use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

use super::Partition;

/// An integer composition: a finite sequence of positive parts.
///
/// The empty composition is the unit index of every graded algebra here.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Composition(Vec<u32>);

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidComposition(format!(
                "{parts:?} has a zero part"
            )));
        }
        Ok(Self(parts))
    }

    /// Builds a composition from parts known to be positive.
    pub(crate) fn from_parts(parts: Vec<u32>) -> Self {
        debug_assert!(!parts.contains(&0));
        Self(parts)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Partial sums `{a1, a1+a2, ..., a1+...+a_{k-1}}`.
    pub fn to_subset(&self) -> BTreeSet<u32> {
        let mut acc = 0;
        let mut out = BTreeSet::new();
        for &p in self.0.iter().take(self.0.len().saturating_sub(1)) {
            acc += p;
            out.insert(acc);
        }
        out
    }

    /// Inverse of [`Composition::to_subset`] for compositions of `n`.
    pub fn from_subset(subset: &BTreeSet<u32>, n: u32) -> Result<Self> {
        if let Some(&bad) = subset.iter().find(|&&s| s == 0 || s >= n) {
            return Err(Error::SubsetOutOfRange {
                element: bad,
                max: n.saturating_sub(1),
            });
        }
        if n == 0 {
            return Ok(Self::empty());
        }
        let mut parts = Vec::with_capacity(subset.len() + 1);
        let mut prev = 0;
        for &s in subset.iter().chain(std::iter::once(&n)) {
            parts.push(s - prev);
            prev = s;
        }
        Ok(Self(parts))
    }

    pub fn multiplicity(&self, part: u32) -> usize {
        self.0.iter().filter(|&&p| p == part).count()
    }

    pub fn sorted(&self) -> Partition {
        Partition::from_unsorted(self.0.clone())
    }

    pub fn reverse(&self) -> Self {
        Self(self.0.iter().rev().copied().collect())
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Self(parts)
    }

    /// True when `self` is finer than or equal to `coarser`.
    pub fn refines(&self, coarser: &Self) -> bool {
        self.degree() == coarser.degree() && coarser.to_subset().is_subset(&self.to_subset())
    }

    /// Splits the parts of `self` into the runs summing to each part of `coarser`.
    pub fn blocks_in<'a>(&'a self, coarser: &Self) -> Result<Vec<&'a [u32]>> {
        let err = || Error::NotRefining {
            finer: self.to_string(),
            coarser: coarser.to_string(),
        };
        if self.degree() != coarser.degree() {
            return Err(err());
        }
        let mut out = Vec::with_capacity(coarser.len());
        let mut start = 0;
        for &target in &coarser.0 {
            let mut acc = 0;
            let mut end = start;
            while acc < target && end < self.0.len() {
                acc += self.0[end];
                end += 1;
            }
            if acc != target {
                return Err(err());
            }
            out.push(&self.0[start..end]);
            start = end;
        }
        Ok(out)
    }

    /// Transpose, pinned by `set(α^t) = [n-1] \ {n - s : s ∈ set(α)}`.
    pub fn transpose(&self) -> Self {
        let n = self.degree();
        if n == 0 {
            return Self::empty();
        }
        let reflected: BTreeSet<u32> = self.to_subset().iter().map(|s| n - s).collect();
        let set: BTreeSet<u32> = (1..n).filter(|s| !reflected.contains(s)).collect();
        Self::from_subset(&set, n).expect("subset within range")
    }

    /// Every composition of `n`, in lexicographic order.
    pub fn all_of(n: u32) -> Vec<Self> {
        if n == 0 {
            return vec![Self::empty()];
        }
        let mut out = Vec::with_capacity(1 << (n - 1));
        let mut current = Vec::new();
        fn rec(rest: u32, current: &mut Vec<u32>, out: &mut Vec<Composition>) {
            if rest == 0 {
                out.push(Composition(current.clone()));
                return;
            }
            for p in 1..=rest {
                current.push(p);
                rec(rest - p, current, out);
                current.pop();
            }
        }
        rec(n, &mut current, &mut out);
        out
    }

    /// All compositions coarser than or equal to `self`.
    pub fn coarsenings(&self) -> Vec<Self> {
        let n = self.degree();
        subsets_of(&self.to_subset())
            .into_iter()
            .map(|s| Self::from_subset(&s, n).expect("subset of a valid subset"))
            .collect()
    }

    /// All compositions finer than or equal to `self`.
    pub fn refinements(&self) -> Vec<Self> {
        let n = self.degree();
        let base = self.to_subset();
        let free: BTreeSet<u32> = (1..n).filter(|s| !base.contains(s)).collect();
        subsets_of(&free)
            .into_iter()
            .map(|extra| {
                let set: BTreeSet<u32> = base.union(&extra).copied().collect();
                Self::from_subset(&set, n).expect("subset within range")
            })
            .collect()
    }
}

pub(crate) fn subsets_of(set: &BTreeSet<u32>) -> Vec<BTreeSet<u32>> {
    let items: Vec<u32> = set.iter().copied().collect();
    (0u64..(1u64 << items.len()))
        .map(|mask| {
            items
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &s)| s)
                .collect()
        })
        .collect()
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl TryFrom<Vec<u32>> for Composition {
    type Error = Error;
    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Self::new(parts)
    }
}

impl From<&[u32]> for Composition {
    /// Panics on a zero part; intended for literals.
    fn from(parts: &[u32]) -> Self {
        Self::new(parts.to_vec()).expect("composition literal with a zero part")
    }
}

impl<const N: usize> From<[u32; N]> for Composition {
    fn from(parts: [u32; N]) -> Self {
        Self::from(&parts[..])
    }
}
