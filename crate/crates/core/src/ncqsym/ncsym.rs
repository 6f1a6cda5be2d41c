use std::fmt;

use crate::combinat::{SetOrder, SetPartition};
use crate::fillings::enumerate_lsr;
use crate::linear::LinComb;

use super::{NcqBasis, NcqElement};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NcsymBasis {
    M,
    P,
}

impl fmt::Display for NcsymBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::M => "m",
            Self::P => "p",
        })
    }
}

/// Symmetric functions in noncommuting variables, `m_φ` or `p_φ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NcsymElement {
    pub basis: NcsymBasis,
    pub terms: LinComb<SetPartition>,
}

/// `m_φ = Σ M_Φ` over the orderings of the blocks of `φ`.
pub fn ncsym_m_to_m(phi: &SetPartition) -> NcqElement {
    NcqElement::new(NcqBasis::M, LinComb::from_multiset(phi.orderings()))
}

/// `p_φ = Σ m_ψ` over the coarsenings `ψ` of `φ`, then each `m_ψ` in `M`.
pub fn ncsym_p_expand(phi: &SetPartition) -> NcqElement {
    let terms = LinComb::from_multiset(phi.coarsenings().iter().flat_map(SetPartition::orderings));
    NcqElement::new(NcqBasis::M, terms)
}

/// `p_φ` read off the column readings of labelled single row fillings.
pub fn ncsym_p_expand_lsr(phi: &SetPartition) -> NcqElement {
    let terms = LinComb::from_multiset(enumerate_lsr(phi).iter().map(|f| f.column_reading()));
    NcqElement::new(NcqBasis::M, terms)
}

/// `p_φ = Σ P_Φ` over the orderings of the blocks of `φ`.
pub fn ncsym_p_to_p(phi: &SetPartition, ord: &SetOrder) -> NcqElement {
    NcqElement::new(
        NcqBasis::P(ord.clone()),
        LinComb::from_multiset(phi.orderings()),
    )
}
