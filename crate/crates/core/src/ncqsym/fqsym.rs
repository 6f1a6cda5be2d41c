use crate::combinat::{SetComposition, SetOrder};
use crate::error::{Error, Result};

use super::{NcqBasis, NcqElement};

/// Image of `G_τ`: the powersum indexed by the singletons of `τ` in order.
pub fn fqsym_g(tau: &[u32]) -> Result<NcqElement> {
    let mut sorted = tau.to_vec();
    sorted.sort_unstable();
    if sorted.iter().enumerate().any(|(i, &x)| x != i as u32 + 1) {
        return Err(Error::NotPermutation(format!("{tau:?}")));
    }
    let phi = SetComposition::singletons(tau)?;
    Ok(NcqElement::basis_element(
        NcqBasis::P(SetOrder::Dtilde),
        phi,
    ))
}
