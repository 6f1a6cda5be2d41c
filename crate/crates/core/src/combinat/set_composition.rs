use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

use super::{Composition, SetPartition};

/// An ordered set partition of `{1, ..., n}`.
///
/// Blocks are kept sorted internally, so equality is structural.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SetComposition {
    blocks: Vec<Vec<u32>>,
    ground: u32,
}

impl SetComposition {
    pub fn new(blocks: Vec<Vec<u32>>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        let mut sorted = Vec::with_capacity(blocks.len());
        for block in blocks {
            if block.is_empty() {
                return Err(Error::InvalidSetComposition("empty block".into()));
            }
            let mut b = block;
            b.sort_unstable();
            for &x in &b {
                if x == 0 || !seen.insert(x) {
                    return Err(Error::InvalidSetComposition(format!(
                        "element {x} is zero or repeated"
                    )));
                }
            }
            sorted.push(b);
        }
        let ground = seen.len() as u32;
        if seen.iter().next_back().is_some_and(|&m| m != ground) {
            return Err(Error::InvalidSetComposition(format!(
                "blocks do not cover [1, {ground}]"
            )));
        }
        Ok(Self {
            blocks: sorted,
            ground,
        })
    }

    /// Blocks already sorted, disjoint and covering `[ground]`.
    pub(crate) fn from_sorted_blocks(blocks: Vec<Vec<u32>>, ground: u32) -> Self {
        debug_assert!(blocks.iter().all(|b| b.windows(2).all(|w| w[0] < w[1])));
        Self { blocks, ground }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// `1|2|...|n` permuted so that block `i` is `{word[i]}`.
    pub fn singletons(word: &[u32]) -> Result<Self> {
        Self::new(word.iter().map(|&x| vec![x]).collect())
    }

    pub fn blocks(&self) -> &[Vec<u32>] {
        &self.blocks
    }

    pub fn ground(&self) -> u32 {
        self.ground
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Groups positions of `word` by the number of distinct smaller values,
    /// so position `i` lands in block `|{a_l : a_l < a_i}| + 1`.
    pub fn varrho(word: &[u32]) -> Self {
        let mut values: Vec<u32> = word.to_vec();
        values.sort_unstable();
        values.dedup();
        let mut blocks = vec![Vec::new(); values.len()];
        for (i, &a) in word.iter().enumerate() {
            let rank = values.binary_search(&a).expect("value present");
            blocks[rank].push(i as u32 + 1);
        }
        Self::from_sorted_blocks(blocks, word.len() as u32)
    }

    /// Block sizes.
    pub fn rho(&self) -> Composition {
        Composition::from_parts(self.blocks.iter().map(|b| b.len() as u32).collect())
    }

    /// The underlying set partition.
    pub fn sort(&self) -> SetPartition {
        SetPartition::from_blocks_unchecked(self.blocks.clone())
    }

    pub fn reverse(&self) -> Self {
        Self::from_sorted_blocks(self.blocks.iter().rev().cloned().collect(), self.ground)
    }

    /// Replaces every element `i` by `n + 1 - i`, keeping block order.
    pub fn complement(&self) -> Self {
        let n = self.ground;
        let blocks = self
            .blocks
            .iter()
            .map(|b| b.iter().rev().map(|&x| n + 1 - x).collect())
            .collect();
        Self::from_sorted_blocks(blocks, n)
    }

    /// Adds `n` to every element; the result is a list of blocks of
    /// `{n+1, ..., n+ground}`, not itself a set composition.
    pub fn shift_up(&self, n: u32) -> Vec<Vec<u32>> {
        self.blocks
            .iter()
            .map(|b| b.iter().map(|&x| x + n).collect())
            .collect()
    }

    /// Merges blocks `i` and `i + 1` for every `i` in `positions`.
    pub fn merge_at(&self, positions: &BTreeSet<usize>) -> Self {
        let mut out: Vec<Vec<u32>> = Vec::with_capacity(self.blocks.len());
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 && positions.contains(&(i - 1)) {
                let last = out.last_mut().expect("merge after first block");
                last.extend_from_slice(b);
                last.sort_unstable();
            } else {
                out.push(b.clone());
            }
        }
        Self::from_sorted_blocks(out, self.ground)
    }

    /// Every set composition of `[n]`.
    pub fn all_of(n: u32) -> Vec<Self> {
        let mut out = Vec::new();
        let mut assignment = vec![0usize; n as usize];
        // Surjections [n] -> [k] for every k, enumerated as block labels.
        fn rec(
            pos: usize,
            n: usize,
            k: usize,
            assignment: &mut [usize],
            out: &mut Vec<SetComposition>,
        ) {
            if pos == n {
                let mut blocks = vec![Vec::new(); k];
                for (i, &b) in assignment.iter().enumerate() {
                    blocks[b].push(i as u32 + 1);
                }
                if blocks.iter().all(|b| !b.is_empty()) {
                    out.push(SetComposition::from_sorted_blocks(blocks, n as u32));
                }
                return;
            }
            for b in 0..k {
                assignment[pos] = b;
                rec(pos + 1, n, k, assignment, out);
            }
        }
        if n == 0 {
            return vec![Self::empty()];
        }
        for k in 1..=n as usize {
            rec(0, n as usize, k, &mut assignment, &mut out);
        }
        out.sort();
        out
    }
}

/// Relabels a list of disjoint blocks to an initial segment `{1, ..., m}`,
/// preserving the relative order of all elements.
pub fn standardize(blocks: &[Vec<u32>]) -> Result<SetComposition> {
    let mut all: Vec<u32> = blocks.iter().flatten().copied().collect();
    all.sort_unstable();
    if all.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::InvalidSetComposition(
            "blocks to standardize are not disjoint".into(),
        ));
    }
    if blocks.iter().any(|b| b.is_empty()) {
        return Err(Error::InvalidSetComposition("empty block".into()));
    }
    let rank = |x: u32| all.binary_search(&x).expect("element present") as u32 + 1;
    let out = blocks
        .iter()
        .map(|b| {
            let mut nb: Vec<u32> = b.iter().map(|&x| rank(x)).collect();
            nb.sort_unstable();
            nb
        })
        .collect();
    Ok(SetComposition::from_sorted_blocks(out, all.len() as u32))
}

impl fmt::Display for SetComposition {
    /// Compact notation `5|13|2|4` when every element is a digit,
    /// otherwise `5|1,3|2|4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.ground < 10 { "" } else { "," };
        if self.blocks.is_empty() {
            return write!(f, "∅");
        }
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, "|")?;
            }
            let items: Vec<String> = b.iter().map(u32::to_string).collect();
            write!(f, "{}", items.join(sep))?;
        }
        Ok(())
    }
}

impl FromStr for SetComposition {
    type Err = Error;

    /// Parses `14|2|3` or `5|1,3|2|4`. Without commas every character is
    /// read as one element, falling back to one number per block.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "∅" {
            return Ok(Self::empty());
        }
        let parse = |split_digits: bool| -> Result<Self> {
            let blocks = s
                .split('|')
                .map(|b| {
                    let b = b.trim();
                    let items: Vec<&str> = if split_digits {
                        b.split("").filter(|t| !t.is_empty()).collect()
                    } else {
                        b.split(',').map(str::trim).collect()
                    };
                    items
                        .into_iter()
                        .map(|t| {
                            t.parse::<u32>().map_err(|_| {
                                Error::InvalidSetComposition(format!("bad element `{t}` in `{s}`"))
                            })
                        })
                        .collect::<Result<Vec<u32>>>()
                })
                .collect::<Result<Vec<_>>>()?;
            Self::new(blocks)
        };
        if s.contains(',') {
            parse(false)
        } else {
            parse(true).or_else(|_| parse(false))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn sc(blocks: &[&[u32]]) -> SetComposition {
        SetComposition::new(blocks.iter().map(|b| b.to_vec()).collect()).unwrap()
    }

    #[test]
    fn parse_round_trip() {
        let phi: SetComposition = "5|13|2|4".parse().unwrap();
        assert_eq!(phi, sc(&[&[5], &[1, 3], &[2], &[4]]));
        assert_eq!(phi.to_string().parse::<SetComposition>().unwrap(), phi);
        let wide: SetComposition = "1,10|2|3|4|5|6|7|8|9".parse().unwrap();
        assert_eq!(wide.ground(), 10);
        assert_eq!(wide.to_string().parse::<SetComposition>().unwrap(), wide);
        let singles: SetComposition = "10|1|2|3|4|5|6|7|8|9".parse().unwrap();
        assert_eq!(singles.blocks()[0], vec![10]);
        assert_eq!(
            "".parse::<SetComposition>().unwrap(),
            SetComposition::empty()
        );
        assert!("1|3".parse::<SetComposition>().is_err());
        assert!("1|x".parse::<SetComposition>().is_err());
    }

    #[test]
    fn validation() {
        assert!(SetComposition::new(vec![vec![1], vec![1, 2]]).is_err());
        assert!(SetComposition::new(vec![vec![1], vec![3]]).is_err());
        assert!(SetComposition::new(vec![vec![], vec![1]]).is_err());
        assert_eq!(sc(&[&[5], &[3, 1], &[2], &[4]]).blocks()[1], vec![1, 3]);
    }

    #[test]
    fn rho_and_reverse() {
        let phi = sc(&[&[5], &[1, 3], &[2], &[4]]);
        assert_eq!(phi.rho(), Composition::from([1, 2, 1, 1]));
        assert_eq!(phi.reverse(), sc(&[&[4], &[2], &[1, 3], &[5]]));
        assert_eq!(sc(&[&[1], &[2], &[3]]).rho(), Composition::from([1, 1, 1]));
    }

    #[test]
    fn varrho_example() {
        let phi = SetComposition::varrho(&[1, 6, 4, 3, 6]);
        assert_eq!(phi, sc(&[&[1], &[4], &[3], &[2, 5]]));
        assert_eq!(SetComposition::varrho(&[]), SetComposition::empty());
    }

    #[test]
    fn complement_example() {
        let phi = sc(&[&[1, 3], &[2], &[4, 5]]);
        assert_eq!(phi.complement(), sc(&[&[3, 5], &[4], &[1, 2]]));
        assert_eq!(phi.complement().complement(), phi);
    }

    #[test]
    fn standardize_restricted_blocks() {
        let s = standardize(&[vec![3, 6], vec![2, 5]]).unwrap();
        assert_eq!(s, sc(&[&[2, 4], &[1, 3]]));
        assert!(standardize(&[vec![1, 2], vec![2]]).is_err());
    }

    #[test]
    fn fubini_numbers() {
        let counts: Vec<usize> = (0..=5).map(|n| SetComposition::all_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 3, 13, 75, 541]);
    }

    #[test]
    fn shift_preserves_rho() {
        for phi in SetComposition::all_of(4) {
            let shifted = phi.shift_up(3);
            assert!(shifted.iter().flatten().all(|&x| x > 3));
            let back = standardize(&shifted).unwrap();
            assert_eq!(back, phi);
            assert_eq!(back.rho(), phi.rho());
        }
    }

    #[test]
    fn display_forms() {
        assert_eq!(sc(&[&[5], &[1, 3], &[2], &[4]]).to_string(), "5|13|2|4");
        let big = SetComposition::new(vec![(1..=10).collect()]).unwrap();
        assert_eq!(big.to_string(), "1,2,3,4,5,6,7,8,9,10");
    }
}
