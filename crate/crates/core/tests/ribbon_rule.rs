use qpows_core::combinat::Composition;
use qpows_core::qsym::{convert, expand_p_in_f, QsymBasis, QsymElement};
use qpows_core::IntOrder;

#[test]
fn ribbon_rule_matches_monomial_route() {
    for ord in IntOrder::builtins() {
        for n in 1..=7 {
            for a in Composition::all_of(n) {
                let via_m = convert(
                    &QsymElement::basis_element(QsymBasis::P(ord.clone()), a.clone()),
                    &QsymBasis::F,
                );
                assert_eq!(
                    expand_p_in_f(&a, &ord),
                    via_m.terms,
                    "{a} under {}",
                    ord.name()
                );
            }
        }
    }
}
