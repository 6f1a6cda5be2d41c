use std::collections::BTreeSet;

use crate::error::Result;
use crate::linear::Rational;

use super::composition::subsets_of;
use super::set_partition::permutations;
use super::{coarsening_coefficient, Composition, IntOrder, SetComposition, SetOrder};

/// Positions `i` (0-based, between part `i` and part `i + 1`) where
/// `a_i ≺ a_{i+1}` fails. Equal neighbours always qualify.
pub fn merge_positions(alpha: &Composition, ord: &IntOrder) -> BTreeSet<usize> {
    alpha
        .parts()
        .windows(2)
        .enumerate()
        .filter(|(_, w)| !ord.less(w[0], w[1]))
        .map(|(i, _)| i)
        .collect()
}

fn merge_composition(alpha: &Composition, positions: &BTreeSet<usize>) -> Composition {
    let mut parts: Vec<u32> = Vec::with_capacity(alpha.len());
    for (i, &p) in alpha.parts().iter().enumerate() {
        if i > 0 && positions.contains(&(i - 1)) {
            *parts.last_mut().expect("merge after first part") += p;
        } else {
            parts.push(p);
        }
    }
    Composition::from_parts(parts)
}

/// The top of the powersum interval: every mergeable position merged.
pub fn c_max(alpha: &Composition, ord: &IntOrder) -> Composition {
    merge_composition(alpha, &merge_positions(alpha, ord))
}

/// The bottom of the fundamental interval: strict ascents together with
/// every division that is not a strict descent.
pub fn t_min(alpha: &Composition, ord: &IntOrder) -> Composition {
    let n = alpha.degree();
    let parts = alpha.parts();
    let mut acc = 0;
    let mut ascents = BTreeSet::new();
    let mut descents = BTreeSet::new();
    for w in parts.windows(2) {
        acc += w[0];
        match ord.compare(w[0], w[1]) {
            std::cmp::Ordering::Less => {
                ascents.insert(acc);
            }
            std::cmp::Ordering::Greater => {
                descents.insert(acc);
            }
            std::cmp::Ordering::Equal => {}
        }
    }
    let set: BTreeSet<u32> = (1..n)
        .filter(|s| ascents.contains(s) || !descents.contains(s))
        .collect();
    Composition::from_subset(&set, n).expect("divisions lie in [n-1]")
}

/// Every `β` in `[α, C_max(α)]` with its coefficient `C_{αβ}`.
pub fn order_interval(alpha: &Composition, ord: &IntOrder) -> Vec<(Composition, Rational)> {
    let positions: BTreeSet<u32> = merge_positions(alpha, ord)
        .into_iter()
        .map(|i| i as u32)
        .collect();
    subsets_of(&positions)
        .into_iter()
        .map(|s| {
            let s: BTreeSet<usize> = s.into_iter().map(|i| i as usize).collect();
            let beta = merge_composition(alpha, &s);
            let coeff = coarsening_coefficient(alpha, &beta).expect("merging coarsens");
            (beta, coeff)
        })
        .collect()
}

/// Positions `i` with `B_i ▷ B_{i+1}`.
pub fn set_order_descents(phi: &SetComposition, ord: &SetOrder) -> BTreeSet<usize> {
    let n = phi.ground();
    phi.blocks()
        .windows(2)
        .enumerate()
        .filter(|(_, w)| ord.greater(&w[0], &w[1], n))
        .map(|(i, _)| i)
        .collect()
}

pub fn c_max_set(phi: &SetComposition, ord: &SetOrder) -> SetComposition {
    phi.merge_at(&set_order_descents(phi, ord))
}

/// The interval `[Φ, C_max(Φ)]`; every coefficient is one.
pub fn order_interval_set(phi: &SetComposition, ord: &SetOrder) -> Vec<SetComposition> {
    let positions: BTreeSet<u32> = set_order_descents(phi, ord)
        .into_iter()
        .map(|i| i as u32)
        .collect();
    subsets_of(&positions)
        .into_iter()
        .map(|s| phi.merge_at(&s.into_iter().map(|i| i as usize).collect()))
        .collect()
}

pub fn rho_c(phi: &SetComposition, ord: &SetOrder) -> Composition {
    c_max_set(phi, ord).rho()
}

/// In subset form, `ρ_C(Φ)` together with every division that is not a descent.
pub fn rho_t(phi: &SetComposition, ord: &SetOrder) -> Composition {
    let rho = phi.rho();
    let n = rho.degree();
    let top = rho_c(phi, ord).to_subset();
    let descents = set_order_descents(phi, ord);
    let mut acc = 0;
    let mut descent_sums = BTreeSet::new();
    for (i, &p) in rho.parts().iter().enumerate() {
        acc += p;
        if descents.contains(&i) {
            descent_sums.insert(acc);
        }
    }
    let set: BTreeSet<u32> = (1..n)
        .filter(|s| top.contains(s) || !descent_sums.contains(s))
        .collect();
    Composition::from_subset(&set, n).expect("divisions lie in [n-1]")
}

/// Equal-size blocks appear in `▷`-decreasing order.
pub fn is_strict(phi: &SetComposition, ord: &SetOrder) -> bool {
    let n = phi.ground();
    let blocks = phi.blocks();
    (0..blocks.len()).all(|i| {
        (i + 1..blocks.len())
            .all(|j| blocks[i].len() != blocks[j].len() || ord.greater(&blocks[i], &blocks[j], n))
    })
}

/// All images of `Φ` under permutations of equal-size blocks in place.
pub fn block_orbit(phi: &SetComposition) -> Vec<SetComposition> {
    let blocks = phi.blocks();
    let mut sizes: Vec<usize> = blocks.iter().map(Vec::len).collect();
    sizes.sort_unstable();
    sizes.dedup();
    let mut current: Vec<Vec<Vec<u32>>> = vec![blocks.to_vec()];
    for size in sizes {
        let slots: Vec<usize> = (0..blocks.len())
            .filter(|&i| blocks[i].len() == size)
            .collect();
        let mut next = Vec::new();
        for base in &current {
            let mut idx: Vec<usize> = (0..slots.len()).collect();
            permutations(&mut idx, 0, &mut |perm| {
                let mut b = base.clone();
                for (k, &src) in perm.iter().enumerate() {
                    b[slots[k]] = base[slots[src]].clone();
                }
                next.push(b);
            });
        }
        current = next;
    }
    current
        .into_iter()
        .map(|b| SetComposition::from_sorted_blocks(b, phi.ground()))
        .collect()
}

/// Resolves the interval check used by callers that take a `(row, col)` pair.
pub(crate) fn check_in_interval(
    alpha: &Composition,
    beta: &Composition,
    ord: &IntOrder,
) -> Result<()> {
    let top = c_max(alpha, ord);
    if beta.refines(&top) && alpha.refines(beta) {
        Ok(())
    } else {
        Err(crate::error::Error::OutsideInterval {
            row: alpha.to_string(),
            col: beta.to_string(),
        })
    }
}
