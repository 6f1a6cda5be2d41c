//! Matrix fillings stored as column vectors.
//!
//! Every filling family here places exactly one entry per row, so a filling
//! is determined by its row reading and the column index of each row.

use std::collections::BTreeSet;

use crate::combinat::{
    check_in_interval, coarsening_coefficient, is_strict, Composition, IntOrder, Partition,
    SetComposition, SetOrder, SetPartition,
};
use crate::error::{Error, Result};
use crate::linear::Rational;

/// Column index (1-based) of the entry in each row. Used columns form an
/// initial segment `1..=k`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ColumnAssignment {
    columns: Vec<u32>,
}

impl ColumnAssignment {
    pub fn new(columns: Vec<u32>) -> Result<Self> {
        let used: BTreeSet<u32> = columns.iter().copied().collect();
        let k = used.len() as u32;
        if used != (1..=k).collect() {
            return Err(Error::InvalidComposition(format!(
                "columns {columns:?} are not a contiguous range from 1"
            )));
        }
        Ok(Self { columns })
    }

    pub fn columns(&self) -> &[u32] {
        &self.columns
    }

    pub fn column_count(&self) -> u32 {
        self.columns.iter().copied().max().unwrap_or(0)
    }

    /// `c_1 = 1` and each step stays or moves one column right.
    pub fn is_diagonal(&self) -> bool {
        self.columns.first().is_none_or(|&c| c == 1)
            && self
                .columns
                .windows(2)
                .all(|w| w[1] == w[0] || w[1] == w[0] + 1)
    }
}

/// A filling with integer part rows.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Filling {
    pub rows: Composition,
    pub assignment: ColumnAssignment,
}

impl Filling {
    /// Per-column sums.
    pub fn column_reading(&self) -> Composition {
        let mut sums = vec![0u32; self.assignment.column_count() as usize];
        for (&p, &c) in self.rows.parts().iter().zip(self.assignment.columns()) {
            sums[c as usize - 1] += p;
        }
        Composition::new(sums).expect("columns are contiguous")
    }

    /// Rows as a grid of `Option<part>`, one inner vector per row.
    pub fn grid(&self) -> Vec<Vec<Option<u32>>> {
        let k = self.assignment.column_count() as usize;
        self.rows
            .parts()
            .iter()
            .zip(self.assignment.columns())
            .map(|(&p, &c)| {
                let mut row = vec![None; k];
                row[c as usize - 1] = Some(p);
                row
            })
            .collect()
    }
}

/// A filling whose rows are blocks of a set composition or set partition.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LabelledFilling {
    pub rows: Vec<Vec<u32>>,
    pub assignment: ColumnAssignment,
}

impl LabelledFilling {
    /// Per-column unions of blocks.
    pub fn column_reading(&self) -> SetComposition {
        let mut cols = vec![Vec::new(); self.assignment.column_count() as usize];
        for (b, &c) in self.rows.iter().zip(self.assignment.columns()) {
            cols[c as usize - 1].extend_from_slice(b);
        }
        SetComposition::new(cols).expect("blocks are disjoint and columns contiguous")
    }

    pub fn row_reading(&self) -> SetComposition {
        SetComposition::new(self.rows.clone()).expect("rows form a set composition")
    }
}

/// Diagonal column vectors where staying in the same column between rows
/// `i - 1` and `i` is allowed exactly when `may_stay(i)` holds.
fn diagonal_vectors(len: usize, may_stay: impl Fn(usize) -> bool) -> Vec<Vec<u32>> {
    if len == 0 {
        return vec![Vec::new()];
    }
    let mut out = vec![vec![1u32]];
    for i in 1..len {
        let stay = may_stay(i);
        let mut next = Vec::with_capacity(out.len() * 2);
        for v in out {
            let last = *v.last().expect("nonempty");
            if stay {
                let mut s = v.clone();
                s.push(last);
                next.push(s);
            }
            let mut m = v;
            m.push(last + 1);
            next.push(m);
        }
        out = next;
    }
    out
}

/// Surjections of `len` rows onto column ranges `1..=k` for every `k`.
fn surjective_vectors(len: usize) -> Vec<Vec<u32>> {
    fn rec(v: &mut Vec<u32>, len: usize, k: u32, out: &mut Vec<Vec<u32>>) {
        if v.len() == len {
            if (1..=k).all(|c| v.contains(&c)) {
                out.push(v.clone());
            }
            return;
        }
        for c in 1..=k {
            v.push(c);
            rec(v, len, k, out);
            v.pop();
        }
    }
    if len == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for k in 1..=len as u32 {
        rec(&mut Vec::with_capacity(len), len, k, &mut out);
    }
    out
}

/// Fillings of `λ` with one part per row, any nonempty columns, and weakly
/// decreasing column sums.
pub fn enumerate_a(lambda: &Partition) -> Vec<Filling> {
    let rows = lambda.as_composition().clone();
    surjective_vectors(rows.len())
        .into_iter()
        .map(|columns| Filling {
            rows: rows.clone(),
            assignment: ColumnAssignment { columns },
        })
        .filter(|f| f.column_reading().parts().windows(2).all(|w| w[0] >= w[1]))
        .collect()
}

/// Strict diagonal fillings: a row shares the previous row's column only at
/// a weak descent `a_{i-1} ⪰ a_i`.
pub fn enumerate_sd(alpha: &Composition, ord: &IntOrder) -> Vec<Filling> {
    let parts = alpha.parts();
    diagonal_vectors(parts.len(), |i| !ord.less(parts[i - 1], parts[i]))
        .into_iter()
        .map(|columns| Filling {
            rows: alpha.clone(),
            assignment: ColumnAssignment { columns },
        })
        .collect()
}

/// Diagonal descending fillings: every strict diagonal filling together with
/// its distinct images under permutations of equal-size rows.
pub fn enumerate_dd(alpha: &Composition, ord: &IntOrder) -> Vec<Filling> {
    let parts = alpha.parts();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut sizes: Vec<u32> = parts.to_vec();
    sizes.sort_unstable();
    sizes.dedup();
    for s in sizes {
        classes.push((0..parts.len()).filter(|&i| parts[i] == s).collect());
    }
    let mut out = Vec::new();
    for sd in enumerate_sd(alpha, ord) {
        let base = sd.assignment.columns.clone();
        // Images of the column vector under each size class, built class by class.
        let mut images: BTreeSet<Vec<u32>> = BTreeSet::from([base]);
        for class in &classes {
            let mut next = BTreeSet::new();
            for v in &images {
                let cols: Vec<u32> = class.iter().map(|&i| v[i]).collect();
                for perm in distinct_permutations(&cols) {
                    let mut w = v.clone();
                    for (&i, &c) in class.iter().zip(&perm) {
                        w[i] = c;
                    }
                    next.insert(w);
                }
            }
            images = next;
        }
        out.extend(images.into_iter().map(|columns| Filling {
            rows: alpha.clone(),
            assignment: ColumnAssignment { columns },
        }));
    }
    out
}

fn distinct_permutations(items: &[u32]) -> Vec<Vec<u32>> {
    let mut sorted = items.to_vec();
    sorted.sort_unstable();
    let mut out = vec![sorted.clone()];
    // next_permutation over the sorted multiset
    loop {
        let n = sorted.len();
        let Some(i) = (1..n).rev().find(|&i| sorted[i - 1] < sorted[i]) else {
            break;
        };
        let j = (i..n)
            .rev()
            .find(|&j| sorted[j] > sorted[i - 1])
            .expect("pivot exists");
        sorted.swap(i - 1, j);
        sorted[i..].reverse();
        out.push(sorted.clone());
    }
    out
}

/// `|𝔖_F|` for a diagonal descending filling with the given row and column
/// readings, which is `C_{αβ}`.
pub fn sf_count(row: &Composition, col: &Composition, ord: &IntOrder) -> Result<Rational> {
    check_in_interval(row, col, ord)?;
    coarsening_coefficient(row, col)
}

/// Labelled diagonal descending fillings: a block shares the previous
/// block's column only when the previous block is `▷`-greater.
pub fn enumerate_ldd(phi: &SetComposition, ord: &SetOrder) -> Vec<LabelledFilling> {
    let blocks = phi.blocks();
    let n = phi.ground();
    diagonal_vectors(blocks.len(), |i| ord.greater(&blocks[i - 1], &blocks[i], n))
        .into_iter()
        .map(|columns| LabelledFilling {
            rows: blocks.to_vec(),
            assignment: ColumnAssignment { columns },
        })
        .collect()
}

/// Strict labelled diagonal fillings: the row reading must be strict and a
/// block may share the previous column when its size is not larger under
/// the projected order.
pub fn enumerate_sld(phi: &SetComposition, ord: &SetOrder) -> Result<Vec<LabelledFilling>> {
    let proj = ord
        .projection()
        .ok_or_else(|| Error::NonProjective(ord.name()))?;
    if !is_strict(phi, ord) {
        return Err(Error::NotStrict(phi.to_string(), ord.name()));
    }
    let blocks = phi.blocks();
    let sizes: Vec<u32> = blocks.iter().map(|b| b.len() as u32).collect();
    Ok(
        diagonal_vectors(blocks.len(), |i| !proj.less(sizes[i - 1], sizes[i]))
            .into_iter()
            .map(|columns| LabelledFilling {
                rows: blocks.to_vec(),
                assignment: ColumnAssignment { columns },
            })
            .collect(),
    )
}

/// Labelled single row fillings: the blocks of `φ` in canonical order placed
/// into any nonempty columns.
pub fn enumerate_lsr(phi: &SetPartition) -> Vec<LabelledFilling> {
    surjective_vectors(phi.len())
        .into_iter()
        .map(|columns| LabelledFilling {
            rows: phi.blocks().to_vec(),
            assignment: ColumnAssignment { columns },
        })
        .collect()
}
