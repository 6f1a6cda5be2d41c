use std::fmt;
use std::str::FromStr;

use crate::combinat::Composition;
use crate::linear::{rat, LinComb};

use super::{convert, QsymBasis, QsymElement};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Involution {
    /// `M_α ↦ M_{rev α}`.
    Star,
    /// `F_α ↦ F_{α^t}`.
    Omega,
    /// `star ∘ omega`.
    Psi,
}

impl FromStr for Involution {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "star" => Ok(Self::Star),
            "omega" => Ok(Self::Omega),
            "psi" => Ok(Self::Psi),
            other => Err(format!("unknown involution `{other}`")),
        }
    }
}

impl fmt::Display for Involution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Star => "star",
            Self::Omega => "omega",
            Self::Psi => "psi",
        })
    }
}

fn epsilon(alpha: &Composition) -> i64 {
    if (alpha.degree() as usize - alpha.len()).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn on_fundamental(kind: Involution, alpha: &Composition) -> Composition {
    match kind {
        Involution::Star => alpha.reverse(),
        Involution::Omega => alpha.transpose(),
        Involution::Psi => alpha.transpose().reverse(),
    }
}

/// Applies an involution. Powersum bases use the closed rules, which may
/// land in the powersum basis of the reversed order; other bases are mapped
/// through F and returned in their own basis.
pub fn involution(x: &QsymElement, kind: Involution) -> QsymElement {
    match &x.basis {
        QsymBasis::P(o) | QsymBasis::Pt(o) => {
            let scaled = matches!(x.basis, QsymBasis::Pt(_));
            let target_order = match kind {
                Involution::Omega => o.clone(),
                Involution::Star | Involution::Psi => o.reversed(),
            };
            let terms = x.terms.map_linear(|a| match kind {
                Involution::Star => LinComb::basis(a.reverse()),
                Involution::Omega => LinComb::term(a.reverse(), rat(epsilon(a))),
                Involution::Psi => LinComb::term(a.clone(), rat(epsilon(a))),
            });
            let basis = if scaled {
                QsymBasis::Pt(target_order)
            } else {
                QsymBasis::P(target_order)
            };
            QsymElement::new(basis, terms)
        }
        basis => {
            let f = convert(x, &QsymBasis::F);
            let image = f.terms.map_keys(|a| on_fundamental(kind, a));
            convert(&QsymElement::new(QsymBasis::F, image), basis)
        }
    }
}
