//! Quasisymmetric functions in noncommuting variables, indexed by set
//! compositions, in the monomial basis and the powersum bases `P^▷`.

mod complement;
mod fqsym;
mod hopf;
mod ncsym;
mod projection;

use std::fmt;

use crate::combinat::{order_interval_set, SetComposition, SetOrder};
use crate::linear::LinComb;

pub use complement::{algebraic_complement, coalgebraic_complement};
pub use fqsym::fqsym_g;
pub use hopf::{coproduct, product};
pub use ncsym::{
    ncsym_m_to_m, ncsym_p_expand, ncsym_p_expand_lsr, ncsym_p_to_p, NcsymBasis, NcsymElement,
};
pub use projection::{orbit_count, orbit_project_sum, project_p_to_f, project_rho};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub enum NcqBasis {
    #[default]
    M,
    P(SetOrder),
}

impl NcqBasis {
    pub fn name(&self) -> &'static str {
        match self {
            Self::M => "M",
            Self::P(_) => "P",
        }
    }

    pub fn order(&self) -> Option<&SetOrder> {
        match self {
            Self::P(o) => Some(o),
            Self::M => None,
        }
    }
}

impl fmt::Display for NcqBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::P(o) if *o != SetOrder::Dtilde => write!(f, "P^{}", o.name()),
            _ => f.write_str(self.name()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NcqElement {
    pub basis: NcqBasis,
    pub terms: LinComb<SetComposition>,
}

impl NcqElement {
    pub fn new(basis: NcqBasis, terms: LinComb<SetComposition>) -> Self {
        Self { basis, terms }
    }

    pub fn zero(basis: NcqBasis) -> Self {
        Self::new(basis, LinComb::zero())
    }

    pub fn basis_element(basis: NcqBasis, phi: SetComposition) -> Self {
        Self::new(basis, LinComb::basis(phi))
    }

    pub fn one(basis: NcqBasis) -> Self {
        Self::basis_element(basis, SetComposition::empty())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn to_m(&self) -> LinComb<SetComposition> {
        convert(self, &NcqBasis::M).terms
    }
}

/// Tensor with both legs in one basis; legs are standardized.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NcqTensor {
    pub basis: NcqBasis,
    pub terms: LinComb<(SetComposition, SetComposition)>,
}

impl NcqTensor {
    pub fn convert(&self, target: &NcqBasis) -> Self {
        let leg = |phi: &SetComposition| {
            convert(
                &NcqElement::basis_element(self.basis.clone(), phi.clone()),
                target,
            )
            .terms
        };
        let terms = self.terms.map_linear(|(a, b)| {
            let (l, r) = (leg(a), leg(b));
            l.bilinear(&r, |x, y| LinComb::basis((x.clone(), y.clone())))
        });
        Self {
            basis: target.clone(),
            terms,
        }
    }
}

/// `P_Φ = Σ M_Ψ` over the interval `[Φ, C_max(Φ)]`.
pub fn expand_p_in_m(phi: &SetComposition, ord: &SetOrder) -> LinComb<SetComposition> {
    LinComb::from_multiset(order_interval_set(phi, ord))
}

/// Inverse of [`expand_p_in_m`]. The transition matrix is unitriangular
/// with respect to length, so the longest index is peeled off first.
pub fn m_to_p(x: &LinComb<SetComposition>, ord: &SetOrder) -> LinComb<SetComposition> {
    let mut rest = x.clone();
    let mut out = LinComb::zero();
    while let Some(phi) = rest
        .keys()
        .max_by(|a, b| a.len().cmp(&b.len()).then_with(|| b.cmp(a)))
        .cloned()
    {
        let k = rest.coefficient(&phi);
        rest.add_scaled(&expand_p_in_m(&phi, ord), &-k.clone());
        out.add_term(phi, k);
    }
    out
}

pub fn convert(x: &NcqElement, target: &NcqBasis) -> NcqElement {
    if &x.basis == target {
        return x.clone();
    }
    let m = match &x.basis {
        NcqBasis::M => x.terms.clone(),
        NcqBasis::P(ord) => x.terms.map_linear(|phi| expand_p_in_m(phi, ord)),
    };
    let terms = match target {
        NcqBasis::M => m,
        NcqBasis::P(ord) => m_to_p(&m, ord),
    };
    NcqElement::new(target.clone(), terms)
}

#[cfg(test)]
mod tests;
