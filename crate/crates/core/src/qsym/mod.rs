//! Quasisymmetric functions over the bases M, F, E, P and P̃, and the
//! symmetric functions they refine.

mod hopf;
mod involution;
mod sym;

use std::fmt;

use num_traits::One;

use crate::combinat::{c_max, order_interval, t_min, z_scalar, Composition, IntOrder};
use crate::linear::{rat, LinComb, Rational};
use crate::ribbon::{descent_ribbons, standard_filling_count};

pub use hopf::{antipode, coproduct, counit, product, tensor_product};
pub use involution::{involution, Involution};
pub use sym::{sym_m_to_qsym, sym_p_to_m, sym_p_to_qsym_p, SymBasis, SymElement};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub enum QsymBasis {
    #[default]
    M,
    F,
    E,
    P(IntOrder),
    Pt(IntOrder),
}

impl QsymBasis {
    pub fn name(&self) -> &'static str {
        match self {
            Self::M => "M",
            Self::F => "F",
            Self::E => "E",
            Self::P(_) => "P",
            Self::Pt(_) => "Pt",
        }
    }

    pub fn order(&self) -> Option<&IntOrder> {
        match self {
            Self::P(o) | Self::Pt(o) => Some(o),
            _ => None,
        }
    }
}

impl fmt::Display for QsymBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::P(o) | Self::Pt(o) if *o != IntOrder::Natural => {
                write!(f, "{}^{}", self.name(), o.name())
            }
            _ => write!(f, "{}", self.name()),
        }
    }
}

/// A finite linear combination in one basis of QSym.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QsymElement {
    pub basis: QsymBasis,
    pub terms: LinComb<Composition>,
}

impl QsymElement {
    pub fn new(basis: QsymBasis, terms: LinComb<Composition>) -> Self {
        Self { basis, terms }
    }

    pub fn zero(basis: QsymBasis) -> Self {
        Self::new(basis, LinComb::zero())
    }

    pub fn basis_element(basis: QsymBasis, alpha: Composition) -> Self {
        Self::new(basis, LinComb::basis(alpha))
    }

    /// The multiplicative unit, indexed by the empty composition.
    pub fn one(basis: QsymBasis) -> Self {
        Self::basis_element(basis, Composition::empty())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn scaled(&self, c: &Rational) -> Self {
        Self::new(self.basis.clone(), self.terms.scaled(c))
    }

    /// Sum after converting `other` into this element's basis.
    pub fn add(&self, other: &Self) -> Self {
        let o = convert(other, &self.basis);
        Self::new(self.basis.clone(), &self.terms + &o.terms)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let o = convert(other, &self.basis);
        Self::new(self.basis.clone(), &self.terms - &o.terms)
    }

    /// Expansion in the monomial basis.
    pub fn to_m(&self) -> LinComb<Composition> {
        to_m(&self.basis, &self.terms)
    }
}

/// Tensor of two QSym elements, one basis per leg.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QsymTensor {
    pub left: QsymBasis,
    pub right: QsymBasis,
    pub terms: LinComb<(Composition, Composition)>,
}

impl QsymTensor {
    /// Re-expresses both legs in new bases.
    pub fn convert(&self, left: &QsymBasis, right: &QsymBasis) -> Self {
        let mut terms = LinComb::zero();
        for ((a, b), c) in self.terms.iter() {
            let l = convert(
                &QsymElement::basis_element(self.left.clone(), a.clone()),
                left,
            );
            let r = convert(
                &QsymElement::basis_element(self.right.clone(), b.clone()),
                right,
            );
            for (x, cx) in l.terms.iter() {
                for (y, cy) in r.terms.iter() {
                    terms.add_term((x.clone(), y.clone()), c * cx * cy);
                }
            }
        }
        Self {
            left: left.clone(),
            right: right.clone(),
            terms,
        }
    }
}

/// `P^≺_α = Σ_{β ∈ [α, C(α)]} C_{αβ} M_β`.
pub fn expand_p_in_m(alpha: &Composition, ord: &IntOrder) -> LinComb<Composition> {
    order_interval(alpha, ord).into_iter().collect()
}

/// `P̃_α = P_α / z_α` in the monomial basis.
pub fn expand_pt_in_m(alpha: &Composition, ord: &IntOrder) -> LinComb<Composition> {
    let inv = Rational::one() / z_scalar(alpha);
    expand_p_in_m(alpha, ord).scaled(&inv)
}

/// The ribbon rule: `P_α = Σ_{β ∈ [T(α), C(α)]} (-1)^{ht(β,α)} |SDR(β,α)| F_β`.
pub fn expand_p_in_f(alpha: &Composition, ord: &IntOrder) -> LinComb<Composition> {
    let top = c_max(alpha, ord);
    let mut out = LinComb::zero();
    for beta in t_min(alpha, ord).coarsenings() {
        if !beta.refines(&top) {
            continue;
        }
        let d = descent_ribbons(&beta, alpha).expect("same degree");
        let count: u128 = d.ribbons.values().map(standard_filling_count).product();
        let sign = if d.height.is_multiple_of(2) { 1 } else { -1 };
        out.add_term(
            beta,
            Rational::from_integer(num_bigint::BigInt::from(count)) * rat(sign),
        );
    }
    out
}

fn sign(k: usize) -> Rational {
    rat(if k.is_multiple_of(2) { 1 } else { -1 })
}

/// Expands a combination in `basis` into the monomial basis.
pub fn to_m(basis: &QsymBasis, terms: &LinComb<Composition>) -> LinComb<Composition> {
    match basis {
        QsymBasis::M => terms.clone(),
        QsymBasis::F => {
            terms.map_linear(|a| a.refinements().into_iter().map(|b| (b, rat(1))).collect())
        }
        QsymBasis::E => {
            terms.map_linear(|a| a.coarsenings().into_iter().map(|b| (b, rat(1))).collect())
        }
        QsymBasis::P(o) => terms.map_linear(|a| expand_p_in_m(a, o)),
        QsymBasis::Pt(o) => terms.map_linear(|a| expand_pt_in_m(a, o)),
    }
}

/// Re-expresses a monomial combination in `basis`.
pub fn from_m(basis: &QsymBasis, terms: &LinComb<Composition>) -> LinComb<Composition> {
    match basis {
        QsymBasis::M => terms.clone(),
        QsymBasis::F => terms.map_linear(|a| {
            a.refinements()
                .into_iter()
                .map(|b| {
                    let s = sign(b.len() - a.len());
                    (b, s)
                })
                .collect()
        }),
        QsymBasis::E => terms.map_linear(|a| {
            a.coarsenings()
                .into_iter()
                .map(|b| {
                    let s = sign(a.len() - b.len());
                    (b, s)
                })
                .collect()
        }),
        QsymBasis::P(o) => solve_p(terms, o, false),
        QsymBasis::Pt(o) => solve_p(terms, o, true),
    }
}

/// Triangular solve: each `P_α` is `C_{αα} M_α` plus strictly coarser terms,
/// so peeling off the longest remaining index terminates.
fn solve_p(terms: &LinComb<Composition>, ord: &IntOrder, scaled: bool) -> LinComb<Composition> {
    let mut rest = terms.clone();
    let mut out = LinComb::zero();
    while let Some(alpha) = rest
        .keys()
        .max_by(|a, b| a.len().cmp(&b.len()).then_with(|| b.cmp(a)))
        .cloned()
    {
        let c = rest.coefficient(&alpha);
        let exp = if scaled {
            expand_pt_in_m(&alpha, ord)
        } else {
            expand_p_in_m(&alpha, ord)
        };
        let k = &c / exp.coefficient(&alpha);
        rest.add_scaled(&exp, &-k.clone());
        out.add_term(alpha, k);
    }
    out
}

/// Exact change of basis.
pub fn convert(x: &QsymElement, target: &QsymBasis) -> QsymElement {
    if &x.basis == target {
        return x.clone();
    }
    let terms = match (&x.basis, target) {
        (QsymBasis::P(a), QsymBasis::Pt(b)) if a == b => x
            .terms
            .map_linear(|al| LinComb::term(al.clone(), z_scalar(al))),
        (QsymBasis::Pt(a), QsymBasis::P(b)) if a == b => x
            .terms
            .map_linear(|al| LinComb::term(al.clone(), Rational::one() / z_scalar(al))),
        _ => from_m(target, &x.to_m()),
    };
    QsymElement::new(target.clone(), terms)
}
