//! Ribbons, descent ribbon tuples and their standard fillings.

use std::collections::BTreeMap;

use crate::combinat::Composition;
use crate::error::{Error, Result};

/// A possibly disconnected ribbon, stored row by row from the top as
/// `(start_column, length)`. Consecutive rows share an edge (next row starts
/// at the previous end column) or a corner (one column further right).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Ribbon {
    rows: Vec<(u32, u32)>,
}

impl Ribbon {
    pub fn new(rows: Vec<(u32, u32)>) -> Result<Self> {
        for (i, &(start, len)) in rows.iter().enumerate() {
            if len == 0 || start == 0 {
                return Err(Error::InvalidComposition(format!("bad ribbon row {i}")));
            }
            if i > 0 {
                let (ps, pl) = rows[i - 1];
                let end = ps + pl - 1;
                if start != end && start != end + 1 {
                    return Err(Error::InvalidComposition(format!(
                        "ribbon row {i} does not touch the row above"
                    )));
                }
            }
        }
        Ok(Self { rows })
    }

    pub fn rows(&self) -> &[(u32, u32)] {
        &self.rows
    }

    pub fn end_column(&self, row: usize) -> u32 {
        let (s, l) = self.rows[row];
        s + l - 1
    }

    pub fn cell_count(&self) -> usize {
        self.rows.iter().map(|&(_, l)| l as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Cells as `(row, column)`, rows top to bottom, left to right.
    pub fn cells(&self) -> Vec<(usize, u32)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(r, &(s, l))| (s..s + l).map(move |c| (r, c)))
            .collect()
    }

    /// New one-box row touching the last box only at a corner.
    fn push_corner(&mut self) {
        let start = match self.rows.last() {
            None => 1,
            Some(_) => self.end_column(self.rows.len() - 1) + 1,
        };
        self.rows.push((start, 1));
    }

    /// New one-box row directly under the last box.
    fn push_below(&mut self) {
        let start = match self.rows.last() {
            None => 1,
            Some(_) => self.end_column(self.rows.len() - 1),
        };
        self.rows.push((start, 1));
    }

    fn push_east(&mut self) {
        match self.rows.last_mut() {
            None => self.rows.push((1, 1)),
            Some(last) => last.1 += 1,
        }
    }
}

/// The ribbon of `α`: row `i` has `a_i` boxes and each row starts below the
/// last box of the row above.
pub fn ribbon_of(alpha: &Composition) -> Ribbon {
    let mut rows = Vec::with_capacity(alpha.len());
    let mut start = 1;
    for &p in alpha.parts() {
        rows.push((start, p));
        start += p - 1;
    }
    Ribbon { rows }
}

/// One ribbon per part size occurring in `α`, plus the height statistic.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RibbonTuple {
    pub ribbons: BTreeMap<u32, Ribbon>,
    pub height: u32,
}

impl RibbonTuple {
    pub fn cell_count(&self) -> usize {
        self.ribbons.values().map(Ribbon::cell_count).sum()
    }
}

/// Builds `D(β, α)` by walking the parts of `α` and consuming `a_i` boxes of
/// `R(β)` per step.
///
/// The box for `a_i` goes to a fresh corner when `a_i` starts its ribbon or
/// differs from `a_{i-1}`. For a repeated size it goes directly below the
/// previous box when the boxes consumed so far end a row of `R(β)` (the
/// remaining ribbon is `R(b_j, ..., b_l)`), and to its right otherwise.
pub fn descent_ribbons(beta: &Composition, alpha: &Composition) -> Result<RibbonTuple> {
    if beta.degree() != alpha.degree() {
        return Err(Error::DegreeMismatch(beta.degree(), alpha.degree()));
    }
    // Row of R(β) holding each box, in reading order.
    let box_rows: Vec<usize> = beta
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(r, &p)| std::iter::repeat_n(r, p as usize))
        .collect();
    let cuts = beta.to_subset();
    let mut out = RibbonTuple::default();
    let mut consumed: u32 = 0;
    let parts = alpha.parts();
    for (i, &a) in parts.iter().enumerate() {
        let ribbon = out.ribbons.entry(a).or_default();
        if ribbon.is_empty() || parts[i - 1] != a {
            ribbon.push_corner();
        } else if cuts.contains(&consumed) {
            ribbon.push_below();
        } else {
            ribbon.push_east();
        }
        let lo = consumed as usize;
        let hi = lo + a as usize;
        out.height += (box_rows[hi - 1] - box_rows[lo]) as u32;
        consumed += a;
    }
    Ok(out)
}

/// Bijective fillings with `1..=N` increasing along rows and decreasing down
/// shared columns. The reading order of cells is a chain where each
/// consecutive pair is an ascent (same row), a descent (vertical edge) or
/// unrelated (corner), so a rank DP counts them.
pub fn standard_filling_count(r: &Ribbon) -> u128 {
    #[derive(Clone, Copy)]
    enum Step {
        Up,
        Down,
        Free,
    }
    let mut steps = Vec::new();
    for (i, &(_, len)) in r.rows.iter().enumerate() {
        if i > 0 {
            let (start, _) = r.rows[i];
            steps.push(if start == r.end_column(i - 1) {
                Step::Down
            } else {
                Step::Free
            });
        }
        steps.extend(std::iter::repeat_n(Step::Up, len as usize - 1));
    }
    if r.is_empty() {
        return 1;
    }
    // dp[j]: ways for the prefix where the last value has rank j among the prefix.
    let mut dp: Vec<u128> = vec![1];
    for (k, step) in steps.iter().enumerate() {
        let m = k + 2;
        let mut prefix = vec![0u128; dp.len() + 1];
        for (j, &v) in dp.iter().enumerate() {
            prefix[j + 1] = prefix[j] + v;
        }
        let total = prefix[dp.len()];
        dp = (0..m)
            .map(|j| match step {
                Step::Up => prefix[j],
                Step::Down => total - prefix[j],
                Step::Free => total,
            })
            .collect();
    }
    dp.iter().sum()
}

/// `|SDR(β, α)|`: product of the standard filling counts of `D(β, α)`.
pub fn sdr_count(beta: &Composition, alpha: &Composition) -> Result<u128> {
    Ok(descent_ribbons(beta, alpha)?
        .ribbons
        .values()
        .map(standard_filling_count)
        .product())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::{c_max, t_min, IntOrder};

    fn c(p: &[u32]) -> Composition {
        Composition::from(p)
    }

    /// Counts linear extensions of the cell poset read off the geometry,
    /// placing the values `1..=N` one at a time over subsets of cells.
    fn brute_force(r: &Ribbon) -> u128 {
        let cells = r.cells();
        let n = cells.len();
        // below[j] has bit i when cell i must hold a smaller value than cell j
        let mut below = vec![0u32; n];
        for (i, &(ri, ci)) in cells.iter().enumerate() {
            for (j, &(rj, cj)) in cells.iter().enumerate() {
                if ri == rj && cj == ci + 1 {
                    below[j] |= 1 << i;
                }
                if rj == ri + 1 && ci == cj {
                    below[i] |= 1 << j;
                }
            }
        }
        let mut ways = vec![0u128; 1 << n];
        ways[0] = 1;
        for mask in 0..(1usize << n) {
            if ways[mask] == 0 {
                continue;
            }
            for j in 0..n {
                if mask >> j & 1 == 0 && below[j] as usize & !mask == 0 {
                    ways[mask | 1 << j] += ways[mask];
                }
            }
        }
        ways[(1 << n) - 1]
    }

    #[test]
    fn ribbon_of_examples() {
        let r = ribbon_of(&c(&[2, 3, 1, 1, 2]));
        let spans: Vec<(u32, u32)> = (0..5).map(|i| (r.rows()[i].0, r.end_column(i))).collect();
        assert_eq!(spans, vec![(1, 2), (2, 4), (4, 4), (4, 4), (4, 5)]);
        assert_eq!(ribbon_of(&c(&[4])).rows(), &[(1, 4)]);
        assert_eq!(ribbon_of(&c(&[1, 1, 3])).rows(), &[(1, 1), (1, 1), (1, 3)]);
        assert!(Ribbon::new(ribbon_of(&c(&[3, 1, 2])).rows().to_vec()).is_ok());
        assert!(Ribbon::new(vec![(1, 2), (4, 1)]).is_err());
    }

    #[test]
    fn descent_ribbon_trace() {
        let d = descent_ribbons(&c(&[1, 1, 3]), &c(&[1, 2, 1, 1])).unwrap();
        assert_eq!(d.height, 1);
        assert_eq!(d.ribbons[&1].rows(), &[(1, 1), (2, 2)]);
        assert_eq!(d.ribbons[&2].rows(), &[(1, 1)]);
        let single = descent_ribbons(&c(&[4]), &c(&[4])).unwrap();
        assert_eq!(single.height, 0);
        assert_eq!(single.ribbons[&4].cell_count(), 1);
        let d = descent_ribbons(&c(&[1, 2]), &c(&[2, 1])).unwrap();
        assert_eq!(d.height, 1);
        assert_eq!(d.ribbons[&1].cell_count(), 1);
        assert_eq!(d.ribbons[&2].cell_count(), 1);
        assert!(descent_ribbons(&c(&[1, 2]), &c(&[2])).is_err());
    }

    #[test]
    fn standard_counts() {
        assert_eq!(
            standard_filling_count(&Ribbon::new(vec![(1, 1), (2, 2)]).unwrap()),
            3
        );
        assert_eq!(
            standard_filling_count(&Ribbon::new(vec![(1, 5)]).unwrap()),
            1
        );
        assert_eq!(standard_filling_count(&ribbon_of(&c(&[1, 1, 1, 1]))), 1);
        assert_eq!(standard_filling_count(&Ribbon::default()), 1);
    }

    #[test]
    fn standard_counts_match_brute_force() {
        // every ribbon with up to 8 cells, edge or corner joins
        fn all(cells: u32) -> Vec<Ribbon> {
            let mut out = Vec::new();
            for comp in Composition::all_of(cells) {
                let k = comp.len();
                for mask in 0..(1u32 << k.saturating_sub(1)) {
                    let mut rows = Vec::new();
                    let mut start = 1;
                    for (i, &p) in comp.parts().iter().enumerate() {
                        if i > 0 {
                            let end = start + comp.parts()[i - 1] - 1;
                            start = if mask >> (i - 1) & 1 == 1 {
                                end + 1
                            } else {
                                end
                            };
                        }
                        rows.push((start, p));
                    }
                    out.push(Ribbon::new(rows).unwrap());
                }
            }
            out
        }
        for n in 1..=8 {
            for r in all(n) {
                assert_eq!(standard_filling_count(&r), brute_force(&r), "{r:?}");
            }
        }
    }

    #[test]
    fn sdr_examples() {
        assert_eq!(sdr_count(&c(&[1, 1, 3]), &c(&[1, 2, 1, 1])).unwrap(), 3);
        assert_eq!(sdr_count(&c(&[1, 4]), &c(&[1, 2, 1, 1])).unwrap(), 3);
        assert_eq!(sdr_count(&c(&[3]), &c(&[2, 1])).unwrap(), 1);
    }

    #[test]
    fn top_of_interval_has_height_zero() {
        let nat = IntOrder::Natural;
        for n in 1..=7 {
            for a in Composition::all_of(n) {
                let d = descent_ribbons(&c_max(&a, &nat), &a).unwrap();
                assert_eq!(d.height, 0, "{a}");
                assert_eq!(d.cell_count(), a.len());
                let bottom = descent_ribbons(&t_min(&a, &nat), &a).unwrap();
                assert_eq!(bottom.cell_count(), a.len());
            }
        }
    }
}
