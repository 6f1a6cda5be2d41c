use num_bigint::BigInt;
use num_traits::One;

use crate::error::Result;
use crate::linear::{factorial, rat, Rational};

use super::Composition;

/// For each part of `coarser`, the number of parts of `finer` equal to
/// `size` that merge into it. Zero entries are kept.
pub fn c_l(finer: &Composition, coarser: &Composition, size: u32) -> Result<Vec<usize>> {
    Ok(finer
        .blocks_in(coarser)?
        .into_iter()
        .map(|block| block.iter().filter(|&&p| p == size).count())
        .collect())
}

/// `C_{αβ} = ∏_i m_i(α)! / ∏_j c_i(α, β)_j!`.
pub fn coarsening_coefficient(finer: &Composition, coarser: &Composition) -> Result<Rational> {
    let blocks = finer.blocks_in(coarser)?;
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    let mut sizes: Vec<u32> = finer.parts().to_vec();
    sizes.sort_unstable();
    sizes.dedup();
    for &i in &sizes {
        num *= factorial(finer.multiplicity(i) as u32);
        for block in &blocks {
            den *= factorial(block.iter().filter(|&&p| p == i).count() as u32);
        }
    }
    Ok(Rational::new(num, den))
}

/// `z_α = ∏ i^{m_i} m_i!`.
pub fn z_scalar(alpha: &Composition) -> Rational {
    let mut parts = alpha.parts().to_vec();
    parts.sort_unstable();
    let mut out = BigInt::one();
    let mut i = 0;
    while i < parts.len() {
        let mut j = i;
        while j < parts.len() && parts[j] == parts[i] {
            j += 1;
        }
        let m = (j - i) as u32;
        out *= BigInt::from(parts[i]).pow(m) * factorial(m);
        i = j;
    }
    Rational::from_integer(out)
}

/// Möbius function of the refinement order between `finer` and `coarser`.
pub fn mobius(finer: &Composition, coarser: &Composition) -> Result<Rational> {
    finer.blocks_in(coarser)?;
    let diff = finer.len() - coarser.len();
    Ok(rat(if diff.is_multiple_of(2) { 1 } else { -1 }))
}
