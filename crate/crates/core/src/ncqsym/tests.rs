use super::*;
use crate::combinat::{rho_c, rho_t, SetPartition};
use crate::linear::rat;
use crate::qsym;
use crate::Composition;

fn sc(s: &str) -> SetComposition {
    s.parse().unwrap()
}

fn lc(terms: &[(&str, i64)]) -> LinComb<SetComposition> {
    terms.iter().map(|(k, v)| (sc(k), rat(*v))).collect()
}

fn c(p: &[u32]) -> Composition {
    Composition::from(p)
}

fn dt() -> SetOrder {
    SetOrder::Dtilde
}

fn p(s: &str) -> NcqElement {
    NcqElement::basis_element(NcqBasis::P(dt()), sc(s))
}

fn m(s: &str) -> NcqElement {
    NcqElement::basis_element(NcqBasis::M, sc(s))
}

#[test]
fn expansion_examples() {
    assert_eq!(
        expand_p_in_m(&sc("14|2|3"), &dt()),
        lc(&[("14|2|3", 1), ("124|3", 1), ("14|23", 1), ("1234", 1)])
    );
    assert_eq!(
        expand_p_in_m(&sc("5|13|4|2"), &dt()),
        lc(&[("5|13|4|2", 1), ("5|134|2", 1)])
    );
    let e = expand_p_in_m(&sc("1|3|25|6|4"), &dt());
    assert_eq!(e.len(), 4);
    assert_eq!(e.coefficient(&sc("13|256|4")), rat(1));
}

#[test]
fn support_is_power_of_two() {
    for ord in SetOrder::builtins() {
        for n in 0..=4 {
            for phi in SetComposition::all_of(n) {
                let e = expand_p_in_m(&phi, &ord);
                let d = crate::combinat::set_order_descents(&phi, &ord).len();
                assert_eq!(e.len(), 1 << d);
                assert!(e.iter().all(|(_, v)| *v == rat(1)));
            }
        }
    }
}

#[test]
fn m_to_p_examples() {
    assert_eq!(m_to_p(&lc(&[("12", 1)]), &dt()), lc(&[("12", 1)]));
    assert_eq!(
        m_to_p(&lc(&[("1|2", 1)]), &dt()),
        lc(&[("1|2", 1), ("12", -1)])
    );
    for ord in SetOrder::builtins() {
        for n in 0..=4 {
            for phi in SetComposition::all_of(n) {
                let back = m_to_p(&expand_p_in_m(&phi, &ord), &ord);
                assert_eq!(back, LinComb::basis(phi.clone()));
            }
        }
    }
}

#[test]
fn products() {
    assert_eq!(
        product(&p("1"), &p("1")).terms,
        lc(&[("1|2", 1), ("2|1", 1)])
    );
    assert_eq!(
        product(&m("13|2"), &m("1")).terms,
        lc(&[
            ("13|2|4", 1),
            ("13|4|2", 1),
            ("4|13|2", 1),
            ("134|2", 1),
            ("13|24", 1)
        ])
    );
    let unit = NcqElement::one(NcqBasis::P(dt()));
    assert_eq!(product(&p("13|2"), &unit), p("13|2"));
    // The closed rule agrees with the monomial product.
    let lhs = product(&p("1"), &p("1")).to_m();
    let rhs = product(&m("1"), &convert(&p("1"), &NcqBasis::M)).terms;
    assert_eq!(lhs, rhs);
}

#[test]
fn coproducts() {
    let d = coproduct(&p("13|2"));
    let want: LinComb<(SetComposition, SetComposition)> = [
        ((sc(""), sc("13|2")), rat(1)),
        ((sc("12"), sc("1")), rat(1)),
        ((sc("13|2"), sc("")), rat(1)),
    ]
    .into_iter()
    .collect();
    assert_eq!(d.terms, want);
    assert_eq!(coproduct(&p("5|13|4|2")).terms.len(), 5);
    // Through M on both sides.
    assert_eq!(
        d.convert(&NcqBasis::M),
        coproduct(&convert(&p("13|2"), &NcqBasis::M))
    );
}

#[test]
fn ncsym_inclusion() {
    let phi = SetPartition::new(vec![vec![1, 3], vec![2]]).unwrap();
    let want = lc(&[("13|2", 1), ("2|13", 1), ("123", 1)]);
    assert_eq!(ncsym_p_expand(&phi).terms, want);
    assert_eq!(ncsym_p_expand_lsr(&phi).terms, want);
    assert_eq!(ncsym_p_to_p(&phi, &dt()).to_m(), want);
    let single = SetPartition::new(vec![vec![1, 2, 3]]).unwrap();
    assert_eq!(ncsym_p_expand(&single).terms, lc(&[("123", 1)]));
    assert_eq!(ncsym_m_to_m(&single).terms, lc(&[("123", 1)]));
}

#[test]
fn projection_examples() {
    assert_eq!(
        project_rho(&m("5|13|2|4")).terms,
        LinComb::basis(c(&[1, 2, 1, 1]))
    );
    let want: LinComb<Composition> = [(c(&[1, 2, 1, 1]), rat(1)), (c(&[1, 3, 1]), rat(1))]
        .into_iter()
        .collect();
    assert_eq!(project_rho(&p("5|13|4|2")).terms, want);
    assert_eq!(
        project_rho(&m("")).terms,
        LinComb::basis(Composition::empty())
    );

    let f = project_p_to_f(&sc("5|13|4|2"), &dt()).unwrap();
    let want: LinComb<Composition> = [(c(&[1, 3, 1]), rat(1)), (c(&[1, 1, 2, 1]), rat(-1))]
        .into_iter()
        .collect();
    assert_eq!(f.terms, want);

    let phi = sc("2|5|14|36|7");
    assert_eq!(rho_c(&phi, &dt()), c(&[2, 5]));
    assert_eq!(rho_t(&phi, &dt()), c(&[2, 1, 2, 2]));
    assert!(project_p_to_f(&phi, &SetOrder::Min).is_err());
}

#[test]
fn orbit_examples() {
    let nat = crate::IntOrder::Natural;
    let s = orbit_project_sum(&sc("1|2"), &dt()).unwrap();
    assert_eq!(s.terms, qsym::expand_p_in_m(&c(&[1, 1]), &nat));
    assert_eq!(s.terms.coefficient(&c(&[1, 1])), rat(2));
    let s = orbit_project_sum(&sc("12"), &dt()).unwrap();
    assert_eq!(s.terms, LinComb::basis(c(&[2])));
    assert!(orbit_project_sum(&sc("1|2"), &SetOrder::Min).is_err());

    assert_eq!(orbit_count(&sc("5|13|4|2"), &sc("5|1234")).unwrap(), rat(3));
    assert_eq!(orbit_count(&sc("1|2|3"), &sc("1|2|3")).unwrap(), rat(6));
    assert_eq!(orbit_count(&sc("1|23"), &sc("123")).unwrap(), rat(1));
    assert!(orbit_count(&sc("1|2|3"), &sc("13|2")).is_err());
}

#[test]
fn complements() {
    let a = algebraic_complement(&p("1|2"));
    assert_eq!(a.basis, NcqBasis::P(dt().reversed()));
    assert_eq!(a.terms, lc(&[("2|1", 1)]));
    assert_eq!(a.to_m(), lc(&[("2|1", 1), ("12", 1)]));

    assert_eq!(coalgebraic_complement(&m("13|2|45")), m("35|4|12"));
    let b = coalgebraic_complement(&p("1|2"));
    assert_eq!(b.terms, lc(&[("2|1", 1)]));
    assert_eq!(b.to_m(), lc(&[("2|1", 1), ("12", 1)]));

    let x = p("14|2|3");
    assert_eq!(algebraic_complement(&algebraic_complement(&x)), x);
    assert_eq!(coalgebraic_complement(&coalgebraic_complement(&x)), x);
}

#[test]
fn fqsym_examples() {
    assert_eq!(fqsym_g(&[2, 1]).unwrap(), p("2|1"));
    assert!(fqsym_g(&[1, 3]).is_err());
    let prod = product(&fqsym_g(&[1, 2]).unwrap(), &fqsym_g(&[1]).unwrap());
    assert_eq!(prod.terms, lc(&[("1|2|3", 1), ("1|3|2", 1), ("3|1|2", 1)]));
    let d = coproduct(&fqsym_g(&[3, 1, 2]).unwrap());
    assert!(d.terms.keys().all(|(a, b)| a
        .blocks()
        .iter()
        .chain(b.blocks())
        .all(|blk| blk.len() == 1)));
}

#[test]
fn tensor_basis_change() {
    let t = NcqTensor {
        basis: NcqBasis::M,
        terms: LinComb::basis((sc("12"), sc("1"))),
    };
    let back = t.convert(&NcqBasis::P(dt())).convert(&NcqBasis::M);
    assert_eq!(back, t);
}
