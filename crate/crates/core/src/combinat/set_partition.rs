use std::fmt;

use crate::error::{Error, Result};

use super::SetComposition;

/// A set partition of `[n]` in canonical block order: sizes weakly
/// decreasing, and among equal sizes the minima strictly decreasing.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SetPartition {
    blocks: Vec<Vec<u32>>,
}

impl SetPartition {
    pub fn new(blocks: Vec<Vec<u32>>) -> Result<Self> {
        let sc =
            SetComposition::new(blocks).map_err(|e| Error::InvalidSetPartition(e.to_string()))?;
        Ok(Self::from_blocks_unchecked(sc.blocks().to_vec()))
    }

    pub(crate) fn from_blocks_unchecked(mut blocks: Vec<Vec<u32>>) -> Self {
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| b[0].cmp(&a[0])));
        Self { blocks }
    }

    pub fn blocks(&self) -> &[Vec<u32>] {
        &self.blocks
    }

    pub fn ground(&self) -> u32 {
        self.blocks.iter().map(|b| b.len() as u32).sum()
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Every set partition of `[n]`.
    pub fn all_of(n: u32) -> Vec<Self> {
        // Restricted growth strings.
        fn rec(pos: u32, n: u32, blocks: &mut Vec<Vec<u32>>, out: &mut Vec<SetPartition>) {
            if pos > n {
                out.push(SetPartition::from_blocks_unchecked(blocks.clone()));
                return;
            }
            for i in 0..blocks.len() {
                blocks[i].push(pos);
                rec(pos + 1, n, blocks, out);
                blocks[i].pop();
            }
            blocks.push(vec![pos]);
            rec(pos + 1, n, blocks, out);
            blocks.pop();
        }
        let mut out = Vec::new();
        rec(1, n, &mut Vec::new(), &mut out);
        out.sort();
        out
    }

    /// Every set partition obtained by merging blocks (including `self`).
    pub fn coarsenings(&self) -> Vec<Self> {
        let k = self.blocks.len() as u32;
        let mut out: Vec<Self> = Self::all_of(k)
            .into_iter()
            .map(|groups| {
                let merged = groups
                    .blocks()
                    .iter()
                    .map(|g| {
                        g.iter()
                            .flat_map(|&i| self.blocks[i as usize - 1].iter().copied())
                            .collect()
                    })
                    .collect();
                Self::from_blocks_unchecked(merged)
            })
            .collect();
        out.sort();
        out.dedup();
        out
    }

    /// Every set composition whose underlying set partition is `self`.
    pub fn orderings(&self) -> Vec<SetComposition> {
        let n = self.ground();
        let mut out = Vec::new();
        let mut idx: Vec<usize> = (0..self.blocks.len()).collect();
        permutations(&mut idx, 0, &mut |perm| {
            out.push(SetComposition::from_sorted_blocks(
                perm.iter().map(|&i| self.blocks[i].clone()).collect(),
                n,
            ));
        });
        out
    }
}

pub(crate) fn permutations(items: &mut [usize], k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == items.len() {
        visit(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permutations(items, k + 1, visit);
        items.swap(k, i);
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.ground() < 10 { "" } else { "," };
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, "/")?;
            }
            let items: Vec<String> = b.iter().map(u32::to_string).collect();
            write!(f, "{}", items.join(sep))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(blocks: &[&[u32]]) -> SetPartition {
        SetPartition::new(blocks.iter().map(|b| b.to_vec()).collect()).unwrap()
    }

    #[test]
    fn canonical_order() {
        let p = sp(&[&[2], &[1, 3]]);
        assert_eq!(p.blocks(), &[vec![1, 3], vec![2]]);
        let q = sp(&[&[1], &[2], &[3]]);
        assert_eq!(q.blocks(), &[vec![3], vec![2], vec![1]]);
        assert_eq!(q.to_string(), "3/2/1");
    }

    #[test]
    fn bell_numbers() {
        let counts: Vec<usize> = (0..=6).map(|n| SetPartition::all_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 15, 52, 203]);
    }

    #[test]
    fn coarsening_examples() {
        let p = sp(&[&[1, 3], &[2]]);
        assert_eq!(p.coarsenings(), {
            let mut v = vec![p.clone(), sp(&[&[1, 2, 3]])];
            v.sort();
            v
        });
        assert_eq!(sp(&[&[1], &[2], &[3]]).coarsenings().len(), 5);
        assert_eq!(sp(&[&[1, 2, 3, 4, 5]]).coarsenings().len(), 1);
    }

    #[test]
    fn orderings_count() {
        assert_eq!(sp(&[&[1, 3], &[2]]).orderings().len(), 2);
        assert_eq!(sp(&[&[1], &[2], &[3]]).orderings().len(), 6);
    }
}
