use std::fmt;

use crate::error::{Error, Result};

use super::Composition;

/// An integer partition, stored as a weakly decreasing composition.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition(Composition);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidComposition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(Self(Composition::new(parts)?))
    }

    /// Sorts the parts into weakly decreasing order.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self(Composition::from_parts(parts))
    }

    pub fn parts(&self) -> &[u32] {
        self.0.parts()
    }

    pub fn as_composition(&self) -> &Composition {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.degree()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn multiplicity(&self, part: u32) -> usize {
        self.0.multiplicity(part)
    }

    /// Every partition of `n`, largest first part first.
    pub fn all_of(n: u32) -> Vec<Self> {
        fn rec(rest: u32, max: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(Composition::from_parts(current.clone())));
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                current.push(p);
                rec(rest - p, p, current, out);
                current.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// All distinct rearrangements of the parts.
    pub fn rearrangements(&self) -> Vec<Composition> {
        Composition::all_of(self.degree())
            .into_iter()
            .filter(|c| &c.sorted() == self)
            .collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl From<Partition> for Composition {
    fn from(p: Partition) -> Self {
        p.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=8).map(|n| Partition::all_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
    }

    #[test]
    fn rejects_increasing() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 2, 1]).is_ok());
    }

    #[test]
    fn rearrangements_of_221() {
        let p = Partition::new(vec![2, 2, 1]).unwrap();
        assert_eq!(p.rearrangements().len(), 3);
    }
}
