use crate::combinat::SetComposition;

use super::{NcqBasis, NcqElement};

/// `M_Φ ↦ M_{rev Φ}` and `P^▷_Φ ↦ P^{←▷}_{rev Φ}`.
pub fn algebraic_complement(x: &NcqElement) -> NcqElement {
    let basis = match &x.basis {
        NcqBasis::M => NcqBasis::M,
        NcqBasis::P(ord) => NcqBasis::P(ord.reversed()),
    };
    NcqElement::new(basis, x.terms.map_keys(SetComposition::reverse))
}

/// `M_Φ ↦ M_{Φ̄}` and `P^▷_Φ ↦ P^{▷̄}_{Φ̄}`.
pub fn coalgebraic_complement(x: &NcqElement) -> NcqElement {
    let basis = match &x.basis {
        NcqBasis::M => NcqBasis::M,
        NcqBasis::P(ord) => NcqBasis::P(ord.complemented()),
    };
    NcqElement::new(basis, x.terms.map_keys(SetComposition::complement))
}
