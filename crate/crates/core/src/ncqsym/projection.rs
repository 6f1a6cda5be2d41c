use num_traits::One;

use crate::combinat::{
    block_orbit, coarsening_coefficient, mobius, rho_c, rho_t, Composition, SetComposition,
    SetOrder,
};
use crate::error::{Error, Result};
use crate::linear::{LinComb, Rational};
use crate::qsym::{QsymBasis, QsymElement};

use super::{convert, expand_p_in_m, NcqBasis, NcqElement};

/// `ρ(M_Φ) = M_{ρ(Φ)}`, applied after expanding `x` in `M`.
pub fn project_rho(x: &NcqElement) -> QsymElement {
    let m = convert(x, &NcqBasis::M);
    QsymElement::new(QsymBasis::M, m.terms.map_keys(SetComposition::rho))
}

fn require_projective(ord: &SetOrder) -> Result<()> {
    match ord.projection() {
        Some(_) => Ok(()),
        None => Err(Error::NonProjective(ord.name())),
    }
}

/// `ρ(P_Φ)` in the fundamental basis: a signed sum over `[ρ_T, ρ_C]`.
pub fn project_p_to_f(phi: &SetComposition, ord: &SetOrder) -> Result<QsymElement> {
    require_projective(ord)?;
    let top = rho_c(phi, ord);
    let bottom = rho_t(phi, ord);
    let terms = bottom
        .coarsenings()
        .into_iter()
        .filter(|beta| beta.refines(&top))
        .map(|beta| {
            let c = mobius(&beta, &top).expect("beta refines the top");
            (beta, c)
        })
        .collect();
    Ok(QsymElement::new(QsymBasis::F, terms))
}

/// `Σ_σ ρ(P_{σΦ})` over permutations of equal-size blocks, in `M`.
pub fn orbit_project_sum(phi: &SetComposition, ord: &SetOrder) -> Result<QsymElement> {
    require_projective(ord)?;
    let orbit = block_orbit(phi);
    debug_assert_eq!(
        Rational::from_integer(orbit.len().into()),
        coarsening_coefficient(&phi.rho(), &phi.rho()).expect("reflexive")
    );
    let mut terms = LinComb::zero();
    for sigma_phi in &orbit {
        terms.add_scaled(
            &expand_p_in_m(sigma_phi, ord).map_keys(SetComposition::rho),
            &Rational::one(),
        );
    }
    Ok(QsymElement::new(QsymBasis::M, terms))
}

/// Size of the orbit of a filling with row reading `row` and column
/// reading `col` under permutations of equal-size rows that fix columns.
pub fn orbit_count(row: &SetComposition, col: &SetComposition) -> Result<Rational> {
    let invalid = || Error::OutsideInterval {
        row: row.to_string(),
        col: col.to_string(),
    };
    if row.ground() != col.ground() {
        return Err(invalid());
    }
    let mut rows = row.blocks().iter();
    for target in col.blocks() {
        let mut acc: Vec<u32> = Vec::new();
        while acc.len() < target.len() {
            let next = rows.next().ok_or_else(invalid)?;
            acc.extend_from_slice(next);
        }
        acc.sort_unstable();
        if &acc != target {
            return Err(invalid());
        }
    }
    let (alpha, beta): (Composition, Composition) = (row.rho(), col.rho());
    coarsening_coefficient(&alpha, &beta)
}
