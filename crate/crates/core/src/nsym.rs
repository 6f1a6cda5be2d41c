//! Noncommutative symmetric functions in the complete basis `S` and the
//! Zassenhaus bases `Z^≺`, dual to the scaled quasipowersums.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::combinat::{Composition, IntOrder};
use crate::linear::{factorial, LinComb, Rational};
use crate::qsym::expand_pt_in_m;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum NsymBasis {
    S,
    Z(IntOrder),
}

impl fmt::Display for NsymBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::S => f.write_str("S"),
            Self::Z(o) if *o == IntOrder::Natural => f.write_str("Z"),
            Self::Z(o) => write!(f, "Z^{}", o.name()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NsymElement {
    pub basis: NsymBasis,
    pub terms: LinComb<Composition>,
}

impl NsymElement {
    pub fn new(basis: NsymBasis, terms: LinComb<Composition>) -> Self {
        Self { basis, terms }
    }

    pub fn basis_element(basis: NsymBasis, alpha: Composition) -> Self {
        Self::new(basis, LinComb::basis(alpha))
    }
}

/// Refinements of `alpha` whose blocks inside each part are weakly
/// `≽`-decreasing.
fn descending_refinements(alpha: &Composition, ord: &IntOrder) -> Vec<Composition> {
    fn blocks_of(
        total: u32,
        last: Option<u32>,
        ord: &IntOrder,
        cur: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if total == 0 {
            out.push(cur.clone());
            return;
        }
        for p in 1..=total {
            if last.is_some_and(|l| ord.less(l, p)) {
                continue;
            }
            cur.push(p);
            blocks_of(total - p, Some(p), ord, cur, out);
            cur.pop();
        }
    }
    let mut acc: Vec<Vec<u32>> = vec![Vec::new()];
    for &a in alpha.parts() {
        let mut runs = Vec::new();
        blocks_of(a, None, ord, &mut Vec::new(), &mut runs);
        acc = acc
            .iter()
            .flat_map(|prefix| {
                runs.iter().map(move |r| {
                    let mut v = prefix.clone();
                    v.extend_from_slice(r);
                    v
                })
            })
            .collect();
    }
    acc.into_iter()
        .map(|p| Composition::new(p).expect("positive parts"))
        .collect()
}

/// `S_α = Σ_β ∏_i 1 / (i^{m_i(β)} c_i(β, α)!) Z_β` over refinements with
/// weakly decreasing blocks.
pub fn s_to_z(alpha: &Composition, ord: &IntOrder) -> NsymElement {
    let terms = descending_refinements(alpha, ord)
        .into_iter()
        .map(|beta| {
            let blocks = beta.blocks_in(alpha).expect("refinement");
            let mut den = BigInt::one();
            for &p in beta.parts() {
                den *= p;
            }
            for block in blocks {
                let mut sizes = block.to_vec();
                sizes.sort_unstable();
                for run in sizes.chunk_by(|a, b| a == b) {
                    den *= factorial(run.len() as u32);
                }
            }
            (beta, Rational::new(BigInt::one(), den))
        })
        .collect();
    NsymElement::new(NsymBasis::Z(ord.clone()), terms)
}

/// Re-expresses an element in `S`.
pub fn to_s(x: &NsymElement) -> NsymElement {
    match &x.basis {
        NsymBasis::S => x.clone(),
        NsymBasis::Z(ord) => {
            // S_α = d_α Z_α + strictly finer terms; peel off coarsest first.
            let mut rest = x.terms.clone();
            let mut out = LinComb::zero();
            while let Some(alpha) = rest
                .keys()
                .min_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)))
                .cloned()
            {
                let image = s_to_z(&alpha, ord).terms;
                let k = rest.coefficient(&alpha) / image.coefficient(&alpha);
                rest.add_scaled(&image, &-k.clone());
                out.add_term(alpha, k);
            }
            NsymElement::new(NsymBasis::S, out)
        }
    }
}

pub fn convert(x: &NsymElement, target: &NsymBasis) -> NsymElement {
    if &x.basis == target {
        return x.clone();
    }
    let s = to_s(x);
    match target {
        NsymBasis::S => s,
        NsymBasis::Z(ord) => {
            NsymElement::new(target.clone(), s.terms.map_linear(|a| s_to_z(a, ord).terms))
        }
    }
}

/// Both bases are multiplicative, so the product concatenates indices.
pub fn product(x: &NsymElement, y: &NsymElement) -> NsymElement {
    let y = convert(y, &x.basis);
    NsymElement::new(
        x.basis.clone(),
        x.terms
            .bilinear(&y.terms, |a, b| LinComb::basis(a.concat(b))),
    )
}

/// Coefficient matrices over the compositions of `n`: `a[β][γ]` is the
/// coefficient of `M_γ` in `P̃_β` and `b[γ][β]` the coefficient of `Z_β` in
/// `S_γ`.
pub fn duality_matrices(
    n: u32,
    ord: &IntOrder,
) -> (Vec<Composition>, Vec<Vec<Rational>>, Vec<Vec<Rational>>) {
    let comps = Composition::all_of(n);
    let a = comps
        .iter()
        .map(|beta| {
            let row = expand_pt_in_m(beta, ord);
            comps.iter().map(|g| row.coefficient(g)).collect()
        })
        .collect();
    let b = comps
        .iter()
        .map(|gamma| {
            let row = s_to_z(gamma, ord).terms;
            comps.iter().map(|beta| row.coefficient(beta)).collect()
        })
        .collect();
    (comps, a, b)
}

/// `⟨Z_β, P̃_γ⟩ = δ`: the two matrices are transposes of each other.
pub fn duality_check(n: u32, ord: &IntOrder) -> bool {
    let (comps, a, b) = duality_matrices(n, ord);
    (0..comps.len()).all(|i| (0..comps.len()).all(|j| a[i][j] == b[j][i]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linear::{rat, ratio};

    fn c(p: &[u32]) -> Composition {
        Composition::from(p)
    }

    fn z(terms: &[(&[u32], Rational)]) -> LinComb<Composition> {
        terms.iter().map(|(k, v)| (c(k), v.clone())).collect()
    }

    #[test]
    fn s_to_z_examples() {
        let nat = IntOrder::Natural;
        assert_eq!(s_to_z(&c(&[1]), &nat).terms, z(&[(&[1], rat(1))]));
        assert_eq!(
            s_to_z(&c(&[2]), &nat).terms,
            z(&[(&[2], ratio(1, 2)), (&[1, 1], ratio(1, 2))])
        );
        assert_eq!(
            s_to_z(&c(&[2, 1]), &nat).terms,
            z(&[(&[2, 1], ratio(1, 2)), (&[1, 1, 1], ratio(1, 2))])
        );
    }

    #[test]
    fn z_to_s_examples() {
        let nat = IntOrder::Natural;
        let z2 = NsymElement::basis_element(NsymBasis::Z(nat.clone()), c(&[2]));
        assert_eq!(to_s(&z2).terms, z(&[(&[2], rat(2)), (&[1, 1], rat(-1))]));
        let z1 = NsymElement::basis_element(NsymBasis::Z(nat.clone()), c(&[1]));
        assert_eq!(to_s(&z1).terms, z(&[(&[1], rat(1))]));
        let s212 = NsymElement::basis_element(NsymBasis::S, c(&[2, 1, 2]));
        assert_eq!(to_s(&convert(&s212, &NsymBasis::Z(nat))), s212);
    }

    #[test]
    fn products_concatenate() {
        let s2 = NsymElement::basis_element(NsymBasis::S, c(&[2]));
        let s1 = NsymElement::basis_element(NsymBasis::S, c(&[1]));
        assert_eq!(product(&s2, &s1).terms, z(&[(&[2, 1], rat(1))]));
        let x = NsymElement::new(NsymBasis::S, &s1.terms + &s2.terms);
        assert_eq!(
            product(&x, &s1).terms,
            z(&[(&[1, 1], rat(1)), (&[2, 1], rat(1))])
        );
        let zb = NsymBasis::Z(IntOrder::Natural);
        let p = product(
            &NsymElement::basis_element(zb.clone(), c(&[1, 2])),
            &NsymElement::basis_element(zb, c(&[3])),
        );
        assert_eq!(p.terms, z(&[(&[1, 2, 3], rat(1))]));
    }

    #[test]
    fn support_of_single_part() {
        for ord in IntOrder::builtins() {
            for n in 1..=6 {
                let support: Vec<Composition> =
                    s_to_z(&c(&[n]), &ord).terms.keys().cloned().collect();
                let sorted: Vec<Composition> = Composition::all_of(n)
                    .into_iter()
                    .filter(|b| b.parts().windows(2).all(|w| !ord.less(w[0], w[1])))
                    .collect();
                assert_eq!(support.len(), sorted.len());
                assert!(sorted.iter().all(|b| support.contains(b)));
            }
        }
    }

    #[test]
    fn duality_small() {
        assert!(duality_check(2, &IntOrder::Natural));
        let (_, a, b) = duality_matrices(2, &IntOrder::Natural);
        // compositions of 2 in lex order: [1,1], [2]
        assert_eq!(a[0][1], ratio(1, 2));
        assert_eq!(b[1][0], ratio(1, 2));
        for n in 1..=5 {
            assert!(duality_check(n, &IntOrder::EvenOdd));
        }
    }
}
