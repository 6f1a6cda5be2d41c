use num_bigint::BigInt;
use num_traits::One;

use crate::combinat::{quasi_shuffle, shuffle, Composition, IntOrder};
use crate::linear::{factorial, rat, LinComb, Rational};

use super::{convert, QsymBasis, QsymElement, QsymTensor};

fn multiplicity_factorials(alpha: &Composition) -> BigInt {
    let mut parts = alpha.parts().to_vec();
    parts.sort_unstable();
    parts
        .chunk_by(|a, b| a == b)
        .map(|run| factorial(run.len() as u32))
        .product()
}

/// Product of basis elements in a basis with a closed rule.
fn product_basis(basis: &QsymBasis, a: &Composition, b: &Composition) -> LinComb<Composition> {
    match basis {
        QsymBasis::M => LinComb::from_multiset(quasi_shuffle(a, b)),
        QsymBasis::Pt(_) => LinComb::from_multiset(shuffle(a, b)),
        QsymBasis::P(_) => {
            let num = multiplicity_factorials(a) * multiplicity_factorials(b);
            shuffle(a, b)
                .into_iter()
                .map(|g| {
                    let c = Rational::new(num.clone(), multiplicity_factorials(&g));
                    (g, c)
                })
                .collect()
        }
        QsymBasis::F | QsymBasis::E => unreachable!("no closed product rule used"),
    }
}

/// Product, returned in the basis of `x`. `y` is converted first; F and E
/// multiply through the monomial basis.
pub fn product(x: &QsymElement, y: &QsymElement) -> QsymElement {
    match &x.basis {
        QsymBasis::F | QsymBasis::E => {
            let xm = convert(x, &QsymBasis::M);
            convert(&product(&xm, y), &x.basis)
        }
        basis => {
            let yb = convert(y, basis);
            let terms = x
                .terms
                .bilinear(&yb.terms, |a, b| product_basis(basis, a, b));
            QsymElement::new(basis.clone(), terms)
        }
    }
}

fn deconcatenations(g: &Composition) -> impl Iterator<Item = (Composition, Composition)> + '_ {
    (0..=g.len()).map(|k| {
        (
            Composition::from(&g.parts()[..k]),
            Composition::from(&g.parts()[k..]),
        )
    })
}

/// Coproduct with both legs in the basis of `x`.
pub fn coproduct(x: &QsymElement) -> QsymTensor {
    let basis = &x.basis;
    let closed = |g: &Composition| -> LinComb<(Composition, Composition)> {
        match basis {
            QsymBasis::M | QsymBasis::Pt(_) => {
                deconcatenations(g).map(|p| (p, Rational::one())).collect()
            }
            QsymBasis::P(_) => {
                let top = multiplicity_factorials(g);
                deconcatenations(g)
                    .map(|(a, b)| {
                        let c = Rational::new(
                            top.clone(),
                            multiplicity_factorials(&a) * multiplicity_factorials(&b),
                        );
                        ((a, b), c)
                    })
                    .collect()
            }
            QsymBasis::F | QsymBasis::E => unreachable!("handled through M"),
        }
    };
    match basis {
        QsymBasis::F | QsymBasis::E => coproduct(&convert(x, &QsymBasis::M)).convert(basis, basis),
        _ => QsymTensor {
            left: basis.clone(),
            right: basis.clone(),
            terms: x.terms.map_linear(closed),
        },
    }
}

/// Coefficient of the unit.
pub fn counit(x: &QsymElement) -> Rational {
    x.terms.coefficient(&Composition::empty())
}

/// Legwise product of two tensors, in the bases of `a`.
pub fn tensor_product(a: &QsymTensor, b: &QsymTensor) -> QsymTensor {
    let b = b.convert(&a.left, &a.right);
    let mut terms = LinComb::zero();
    for ((a1, a2), ca) in a.terms.iter() {
        for ((b1, b2), cb) in b.terms.iter() {
            let l = product(
                &QsymElement::basis_element(a.left.clone(), a1.clone()),
                &QsymElement::basis_element(a.left.clone(), b1.clone()),
            );
            let r = product(
                &QsymElement::basis_element(a.right.clone(), a2.clone()),
                &QsymElement::basis_element(a.right.clone(), b2.clone()),
            );
            let c = ca * cb;
            for (x, cx) in l.terms.iter() {
                for (y, cy) in r.terms.iter() {
                    terms.add_term((x.clone(), y.clone()), &c * cx * cy);
                }
            }
        }
    }
    QsymTensor {
        left: a.left.clone(),
        right: a.right.clone(),
        terms,
    }
}

/// `S(P̃_α) = (-1)^{len α} P̃_{rev α}`, and the same rule for `P`. Other
/// bases go through `P̃` for the natural order.
pub fn antipode(x: &QsymElement) -> QsymElement {
    match &x.basis {
        QsymBasis::P(_) | QsymBasis::Pt(_) => {
            let terms = x.terms.map_linear(|a| {
                let s = if a.len() % 2 == 0 { rat(1) } else { rat(-1) };
                LinComb::term(a.reverse(), s)
            });
            QsymElement::new(x.basis.clone(), terms)
        }
        basis => {
            let pt = convert(x, &QsymBasis::Pt(IntOrder::Natural));
            convert(&antipode(&pt), basis)
        }
    }
}
