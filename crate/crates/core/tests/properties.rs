use proptest::prelude::*;

use qpows_core::combinat::Composition;
use qpows_core::ncqsym::{self, expand_p_in_m as nc_expand, m_to_p, NcqBasis, NcqElement};
use qpows_core::qsym::{convert, coproduct, product, QsymBasis, QsymElement};
use qpows_core::{IntOrder, LinComb, Rational, SetComposition, SetOrder};

fn composition(max_parts: usize, max_part: u32) -> impl Strategy<Value = Composition> {
    prop::collection::vec(1..=max_part, 1..=max_parts).prop_map(|p| Composition::new(p).unwrap())
}

fn set_composition(max_n: u32) -> impl Strategy<Value = SetComposition> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(0..n, n as usize).prop_map(move |labels| {
            let mut blocks = vec![Vec::new(); n as usize];
            for (i, &l) in labels.iter().enumerate() {
                blocks[l as usize].push(i as u32 + 1);
            }
            blocks.retain(|b| !b.is_empty());
            SetComposition::new(blocks).unwrap()
        })
    })
}

fn int_order() -> impl Strategy<Value = IntOrder> {
    prop::sample::select(IntOrder::builtins())
}

fn set_order() -> impl Strategy<Value = SetOrder> {
    prop::sample::select(SetOrder::builtins())
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-5i64..=5, 1i64..=4).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

fn qsym_combination(basis: QsymBasis) -> impl Strategy<Value = QsymElement> {
    prop::collection::vec((composition(3, 3), small_rational()), 0..4)
        .prop_map(move |terms| QsymElement::new(basis.clone(), terms.into_iter().collect()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn subset_round_trip(a in composition(6, 4)) {
        let n = a.degree();
        prop_assert_eq!(Composition::from_subset(&a.to_subset(), n).unwrap(), a);
    }

    #[test]
    fn refinement_is_subset_inclusion(a in composition(5, 3), b in composition(5, 3)) {
        prop_assume!(a.degree() == b.degree());
        prop_assert_eq!(a.refines(&b), b.to_subset().is_subset(&a.to_subset()));
    }

    #[test]
    fn transpose_is_an_involution(a in composition(6, 4)) {
        prop_assert_eq!(a.transpose().transpose(), a.clone());
        prop_assert_eq!(a.transpose().degree(), a.degree());
    }

    #[test]
    fn powersum_round_trip(ord in int_order(), x in qsym_combination(QsymBasis::M)) {
        for target in [QsymBasis::P(ord.clone()), QsymBasis::Pt(ord.clone()), QsymBasis::F, QsymBasis::E] {
            prop_assert_eq!(convert(&convert(&x, &target), &QsymBasis::M), x.clone());
        }
    }

    #[test]
    fn powersum_product_is_associative(
        ord in int_order(),
        a in composition(2, 2),
        b in composition(2, 2),
        c in composition(2, 2),
    ) {
        let basis = QsymBasis::P(ord);
        let e = |x: &Composition| QsymElement::basis_element(basis.clone(), x.clone());
        let left = product(&product(&e(&a), &e(&b)), &e(&c));
        let right = product(&e(&a), &product(&e(&b), &e(&c)));
        prop_assert_eq!(left, right);
    }

    #[test]
    fn coproduct_counit_law(ord in int_order(), a in composition(4, 3)) {
        // (ε ⊗ id)Δ = id for the scaled basis, whose coproduct coefficients are 1.
        let x = QsymElement::basis_element(QsymBasis::Pt(ord), a.clone());
        let d = coproduct(&x);
        let right: LinComb<Composition> = d
            .terms
            .iter()
            .filter(|((l, _), _)| l.is_empty())
            .map(|((_, r), c)| (r.clone(), c.clone()))
            .collect();
        prop_assert_eq!(right, x.terms);
    }

    #[test]
    fn set_composition_display_parses(phi in set_composition(7)) {
        prop_assert_eq!(phi.to_string().parse::<SetComposition>().unwrap(), phi);
    }

    #[test]
    fn ncq_expansion_is_unitriangular(ord in set_order(), phi in set_composition(6)) {
        let e = nc_expand(&phi, &ord);
        prop_assert_eq!(e.coefficient(&phi), Rational::from_integer(1.into()));
        prop_assert!(e.keys().all(|psi| psi == &phi || psi.len() < phi.len()));
        prop_assert_eq!(m_to_p(&e, &ord), LinComb::basis(phi));
    }

    #[test]
    fn ncq_product_degree_adds(ord in set_order(), phi in set_composition(3), psi in set_composition(3)) {
        let basis = NcqBasis::P(ord);
        let x = NcqElement::basis_element(basis.clone(), phi.clone());
        let y = NcqElement::basis_element(basis, psi.clone());
        let p = ncqsym::product(&x, &y);
        prop_assert!(p.terms.keys().all(|k| k.ground() == phi.ground() + psi.ground()));
        prop_assert_eq!(p.to_m(), ncqsym::product(
            &NcqElement::new(NcqBasis::M, x.to_m()),
            &NcqElement::new(NcqBasis::M, y.to_m()),
        ).terms);
    }

    #[test]
    fn complement_and_reverse_commute(phi in set_composition(6)) {
        prop_assert_eq!(phi.complement().reverse(), phi.reverse().complement());
        prop_assert_eq!(phi.complement().complement(), phi);
    }
}
