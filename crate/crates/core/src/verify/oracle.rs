//! Evaluation of basis elements as explicit polynomials. Nothing here uses
//! the closed product, coproduct or antipode rules.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::combinat::{Composition, Partition, SetComposition, SetPartition};
use crate::linear::{LinComb, Rational};

/// Commutative polynomial: exponent vector to coefficient.
pub type Poly = BTreeMap<Vec<u32>, Rational>;

/// Noncommutative polynomial: word (letters from 1) to coefficient.
pub type WordPoly = BTreeMap<Vec<u32>, Rational>;

fn add_into<K: Ord>(p: &mut BTreeMap<K, Rational>, k: K, c: Rational) {
    let e = p.entry(k).or_insert_with(Rational::zero);
    *e += c;
}

fn prune<K: Ord>(mut p: BTreeMap<K, Rational>) -> BTreeMap<K, Rational> {
    p.retain(|_, c| !c.is_zero());
    p
}

/// Strictly increasing `k`-tuples from `0..n`.
fn increasing_tuples(k: usize, n: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, k: usize, n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, k, n, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, k, n, &mut Vec::new(), &mut out);
    out
}

/// `M_α(x_1, ..., x_n)`.
pub fn monomial_qsym(alpha: &Composition, nvars: usize) -> Poly {
    let mut p = Poly::new();
    for idx in increasing_tuples(alpha.len(), nvars) {
        let mut e = vec![0; nvars];
        for (j, &i) in idx.iter().enumerate() {
            e[i] = alpha.parts()[j];
        }
        add_into(&mut p, e, Rational::one());
    }
    p
}

/// Evaluates a monomial-basis combination.
pub fn qsym_poly(x: &LinComb<Composition>, nvars: usize) -> Poly {
    let mut p = Poly::new();
    for (a, c) in x.iter() {
        for (e, d) in monomial_qsym(a, nvars) {
            add_into(&mut p, e, c * d);
        }
    }
    prune(p)
}

pub fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut p = Poly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            add_into(&mut p, e, ca * cb);
        }
    }
    prune(p)
}

fn packed_prefix(e: &[u32]) -> Option<Composition> {
    let l = e.iter().take_while(|&&x| x > 0).count();
    if e[l..].iter().all(|&x| x == 0) {
        Some(Composition::new(e[..l].to_vec()).expect("positive prefix"))
    } else {
        None
    }
}

fn pack(e: &[u32]) -> Vec<u32> {
    let mut out: Vec<u32> = e.iter().copied().filter(|&x| x > 0).collect();
    out.resize(e.len(), 0);
    out
}

/// Reads a quasisymmetric polynomial in the monomial basis. Returns `None`
/// when the polynomial is not quasisymmetric.
pub fn poly_to_qsym_m(p: &Poly) -> Option<LinComb<Composition>> {
    for (e, c) in p {
        if p.get(&pack(e)) != Some(c) {
            return None;
        }
    }
    Some(
        p.iter()
            .filter_map(|(e, c)| packed_prefix(e).map(|a| (a, c.clone())))
            .collect(),
    )
}

/// Reads `f(x_1..x_n, y_1..y_n)` as an element of `QSym ⊗ QSym`.
pub fn poly_to_qsym_tensor(p: &Poly, nvars: usize) -> LinComb<(Composition, Composition)> {
    p.iter()
        .filter_map(|(e, c)| {
            let l = packed_prefix(&e[..nvars])?;
            let r = packed_prefix(&e[nvars..])?;
            Some(((l, r), c.clone()))
        })
        .collect()
}

/// `p_λ(x_1, ..., x_n)`.
pub fn power_sum(lambda: &Partition, nvars: usize) -> Poly {
    let mut p = Poly::new();
    p.insert(vec![0; nvars], Rational::one());
    for &k in lambda.parts() {
        let mut f = Poly::new();
        for i in 0..nvars {
            let mut e = vec![0; nvars];
            e[i] = k;
            f.insert(e, Rational::one());
        }
        p = poly_mul(&p, &f);
    }
    p
}

/// Reads a symmetric polynomial in the monomial symmetric basis.
pub fn poly_to_sym_m(p: &Poly) -> LinComb<Partition> {
    p.iter()
        .filter(|(e, _)| e.windows(2).all(|w| w[0] >= w[1]))
        .map(|(e, c)| {
            let parts = e.iter().copied().filter(|&x| x > 0).collect();
            (Partition::new(parts).expect("weakly decreasing"), c.clone())
        })
        .collect()
}

/// `M_Φ` on `nletters` noncommuting letters: positions in block `j` carry
/// the `j`-th smallest of `k` distinct letters.
pub fn monomial_ncqsym(phi: &SetComposition, nletters: usize) -> WordPoly {
    let n = phi.ground() as usize;
    let mut p = WordPoly::new();
    for idx in increasing_tuples(phi.len(), nletters) {
        let mut w = vec![0; n];
        for (j, block) in phi.blocks().iter().enumerate() {
            for &pos in block {
                w[pos as usize - 1] = idx[j] as u32 + 1;
            }
        }
        add_into(&mut p, w, Rational::one());
    }
    p
}

/// `p_φ` on `nletters` letters: positions in one block share a letter.
pub fn power_sum_ncsym(phi: &SetPartition, nletters: usize) -> WordPoly {
    let n = phi.ground() as usize;
    let k = phi.len();
    let mut p = WordPoly::new();
    let mut choice = vec![0usize; k];
    loop {
        let mut w = vec![0; n];
        for (j, block) in phi.blocks().iter().enumerate() {
            for &pos in block {
                w[pos as usize - 1] = choice[j] as u32 + 1;
            }
        }
        add_into(&mut p, w, Rational::one());
        let mut i = 0;
        while i < k {
            choice[i] += 1;
            if choice[i] < nletters {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
        if i == k {
            break;
        }
    }
    p
}

pub fn ncqsym_poly(x: &LinComb<SetComposition>, nletters: usize) -> WordPoly {
    let mut p = WordPoly::new();
    for (phi, c) in x.iter() {
        for (w, d) in monomial_ncqsym(phi, nletters) {
            add_into(&mut p, w, c * d);
        }
    }
    prune(p)
}

pub fn word_mul(a: &WordPoly, b: &WordPoly) -> WordPoly {
    let mut p = WordPoly::new();
    for (wa, ca) in a {
        for (wb, cb) in b {
            let w = wa.iter().chain(wb).copied().collect();
            add_into(&mut p, w, ca * cb);
        }
    }
    prune(p)
}

/// The set composition of a packed word: block `j` holds the positions of
/// letter `j`. `None` if the letters are not exactly `1..=k`.
pub fn packed_word_to_set_composition(w: &[u32]) -> Option<SetComposition> {
    let k = w.iter().copied().max().unwrap_or(0) as usize;
    let mut blocks = vec![Vec::new(); k];
    for (pos, &l) in w.iter().enumerate() {
        blocks[l as usize - 1].push(pos as u32 + 1);
    }
    if blocks.iter().any(Vec::is_empty) {
        return None;
    }
    SetComposition::new(blocks).ok()
}

/// Reads the coefficients of packed words.
pub fn word_poly_to_ncqsym_m(p: &WordPoly) -> LinComb<SetComposition> {
    p.iter()
        .filter_map(|(w, c)| packed_word_to_set_composition(w).map(|phi| (phi, c.clone())))
        .collect()
}

/// Reads `f(X + Y)` with letters `1..=n` in `X` and `n+1..=2n` in `Y` as a
/// tensor, splitting each word into its `X` and `Y` subwords.
pub fn word_poly_to_ncqsym_tensor(
    p: &WordPoly,
    nletters: u32,
) -> LinComb<(SetComposition, SetComposition)> {
    p.iter()
        .filter_map(|(w, c)| {
            let u: Vec<u32> = w.iter().copied().filter(|&l| l <= nletters).collect();
            let v: Vec<u32> = w
                .iter()
                .filter(|&&l| l > nletters)
                .map(|&l| l - nletters)
                .collect();
            let l = packed_word_to_set_composition(&u)?;
            let r = packed_word_to_set_composition(&v)?;
            Some(((l, r), c.clone()))
        })
        .collect()
}

/// `S(M_α) = (-1)^{len α} Σ M_β` over coarsenings `β` of `rev α`.
pub fn takeuchi_antipode_m(alpha: &Composition) -> LinComb<Composition> {
    let s = if alpha.len().is_multiple_of(2) { 1 } else { -1 };
    alpha
        .reverse()
        .coarsenings()
        .into_iter()
        .map(|b| (b, Rational::from_integer(s.into())))
        .collect()
}

/// Standardization of a word of distinct letters.
pub fn std_word(w: &[u32]) -> Vec<u32> {
    let mut sorted = w.to_vec();
    sorted.sort_unstable();
    w.iter()
        .map(|x| sorted.binary_search(x).expect("letter present") as u32 + 1)
        .collect()
}

/// Shuffles of `σ` with `τ` shifted up by `|σ|`.
pub fn shifted_shuffle_words(sigma: &[u32], tau: &[u32]) -> Vec<Vec<u32>> {
    let shift = sigma.len() as u32;
    let tau: Vec<u32> = tau.iter().map(|x| x + shift).collect();
    fn rec(a: &[u32], b: &[u32], cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if a.is_empty() && b.is_empty() {
            out.push(cur.clone());
            return;
        }
        if let Some((&h, t)) = a.split_first() {
            cur.push(h);
            rec(t, b, cur, out);
            cur.pop();
        }
        if let Some((&h, t)) = b.split_first() {
            cur.push(h);
            rec(a, t, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(sigma, &tau, &mut Vec::new(), &mut out);
    out
}

/// Deconcatenations of `τ` with both factors standardized.
pub fn deconcatenate_std(tau: &[u32]) -> Vec<(Vec<u32>, Vec<u32>)> {
    (0..=tau.len())
        .map(|k| (std_word(&tau[..k]), std_word(&tau[k..])))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linear::rat;

    fn c(p: &[u32]) -> Composition {
        Composition::from(p)
    }

    #[test]
    fn monomial_product_in_three_variables() {
        // M_1 M_1 = 2 M_11 + M_2
        let p = poly_mul(&monomial_qsym(&c(&[1]), 3), &monomial_qsym(&c(&[1]), 3));
        let m = poly_to_qsym_m(&p).unwrap();
        assert_eq!(m.coefficient(&c(&[1, 1])), rat(2));
        assert_eq!(m.coefficient(&c(&[2])), rat(1));
        assert_eq!(m.len(), 2);
    }

    #[test]
    fn non_quasisymmetric_rejected() {
        let mut p = Poly::new();
        p.insert(vec![0, 1], rat(1));
        assert!(poly_to_qsym_m(&p).is_none());
    }

    #[test]
    fn power_sum_in_m() {
        let lambda = Partition::new(vec![2, 1]).unwrap();
        let m = poly_to_sym_m(&power_sum(&lambda, 3));
        assert_eq!(m.coefficient(&Partition::new(vec![2, 1]).unwrap()), rat(1));
        assert_eq!(m.coefficient(&Partition::new(vec![3]).unwrap()), rat(1));
        assert_eq!(m.len(), 2);
    }

    #[test]
    fn word_level_helpers() {
        assert_eq!(std_word(&[5, 2, 7]), vec![2, 1, 3]);
        assert_eq!(shifted_shuffle_words(&[1], &[1]).len(), 2);
        assert_eq!(deconcatenate_std(&[3, 1, 2])[1], (vec![1], vec![1, 2]));
        let phi = packed_word_to_set_composition(&[2, 1, 2]).unwrap();
        assert_eq!(phi.to_string(), "2|13");
        assert!(packed_word_to_set_composition(&[1, 3]).is_none());
    }

    #[test]
    fn takeuchi_small() {
        let s = takeuchi_antipode_m(&c(&[1, 2]));
        assert_eq!(s.coefficient(&c(&[2, 1])), rat(1));
        assert_eq!(s.coefficient(&c(&[3])), rat(1));
    }
}
