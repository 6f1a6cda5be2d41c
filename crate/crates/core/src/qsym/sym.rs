use std::fmt;

use crate::combinat::{Composition, IntOrder, Partition};
use crate::fillings::enumerate_a;
use crate::linear::{LinComb, Rational};

use super::{QsymBasis, QsymElement};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SymBasis {
    /// Power sums.
    P,
    /// Monomials.
    M,
}

impl fmt::Display for SymBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::P => "p",
            Self::M => "m",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymElement {
    pub basis: SymBasis,
    pub terms: LinComb<Partition>,
}

/// `p_λ = Σ_{F ∈ A(λ)} m_{col(F)}`.
pub fn sym_p_to_m(lambda: &Partition) -> SymElement {
    let cols = enumerate_a(lambda).into_iter().map(|f| {
        Partition::new(f.column_reading().into_parts()).expect("column sums weakly decrease")
    });
    SymElement {
        basis: SymBasis::M,
        terms: LinComb::from_multiset(cols),
    }
}

/// Includes a symmetric function into QSym, in M (from `m`) or in P for the
/// given order (from `p`).
pub fn sym_m_to_qsym(x: &SymElement, ord: &IntOrder) -> QsymElement {
    let terms = x.terms.map_linear(|lambda| {
        lambda
            .rearrangements()
            .into_iter()
            .map(|a| (a, Rational::from_integer(1.into())))
            .collect::<LinComb<Composition>>()
    });
    let basis = match x.basis {
        SymBasis::M => QsymBasis::M,
        SymBasis::P => QsymBasis::P(ord.clone()),
    };
    QsymElement::new(basis, terms)
}

/// `p_λ = Σ_{sort(α) = λ} P^≺_α`.
pub fn sym_p_to_qsym_p(lambda: &Partition, ord: &IntOrder) -> QsymElement {
    sym_m_to_qsym(
        &SymElement {
            basis: SymBasis::P,
            terms: LinComb::basis(lambda.clone()),
        },
        ord,
    )
}
