use crate::combinat::{shifted_quasi_shuffle, shifted_shuffle, standardize, SetComposition};
use crate::linear::{LinComb, Rational};

use super::{convert, NcqBasis, NcqElement, NcqTensor};

/// Product in the basis of `x`. The closed powersum rule needs a
/// shift-invariant order; otherwise the product goes through `M`.
pub fn product(x: &NcqElement, y: &NcqElement) -> NcqElement {
    match &x.basis {
        NcqBasis::M => {
            let y = convert(y, &NcqBasis::M);
            let terms = x.terms.bilinear(&y.terms, |a, b| {
                LinComb::from_multiset(shifted_quasi_shuffle(a, b))
            });
            NcqElement::new(NcqBasis::M, terms)
        }
        NcqBasis::P(ord) if ord.shift_invariant() => {
            let y = convert(y, &x.basis);
            let terms = x.terms.bilinear(&y.terms, |a, b| {
                LinComb::from_multiset(shifted_shuffle(a, b))
            });
            NcqElement::new(x.basis.clone(), terms)
        }
        NcqBasis::P(_) => convert(&product(&convert(x, &NcqBasis::M), y), &x.basis),
    }
}

fn standardized_deconcatenations(
    phi: &SetComposition,
) -> LinComb<(SetComposition, SetComposition)> {
    let blocks = phi.blocks();
    (0..=blocks.len())
        .map(|k| {
            let left = standardize(&blocks[..k]).expect("blocks of a set composition");
            let right = standardize(&blocks[k..]).expect("blocks of a set composition");
            ((left, right), Rational::from_integer(1.into()))
        })
        .collect()
}

/// Standardized deconcatenation, with both legs in the basis of `x`. The
/// closed powersum rule needs a standard-invariant order.
pub fn coproduct(x: &NcqElement) -> NcqTensor {
    match &x.basis {
        NcqBasis::P(ord) if !ord.standard_invariant() => {
            coproduct(&convert(x, &NcqBasis::M)).convert(&x.basis)
        }
        basis => NcqTensor {
            basis: basis.clone(),
            terms: x.terms.map_linear(standardized_deconcatenations),
        },
    }
}
