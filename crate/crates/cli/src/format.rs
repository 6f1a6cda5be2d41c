//! Text and JSON rendering of evaluation results.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use qpows_core::ncqsym::NcqBasis;
use qpows_core::{Composition, LinComb, Partition, Rational, SetComposition, SetOrder};
use serde::Serialize;
use serde_json::Number;

use crate::eval::Value;

/// Keys that can be printed and sorted canonically: by degree, then longer
/// first, then lexicographically.
pub trait IndexKey: Ord + Clone {
    fn degree(&self) -> u32;
    fn length(&self) -> usize;
    fn text(&self) -> String;
    fn json(&self) -> serde_json::Value;
}

impl IndexKey for Composition {
    fn degree(&self) -> u32 {
        Composition::degree(self)
    }
    fn length(&self) -> usize {
        self.len()
    }
    fn text(&self) -> String {
        let parts: Vec<String> = self.parts().iter().map(u32::to_string).collect();
        format!("[{}]", parts.join(","))
    }
    fn json(&self) -> serde_json::Value {
        serde_json::json!(self.parts())
    }
}

impl IndexKey for Partition {
    fn degree(&self) -> u32 {
        Partition::degree(self)
    }
    fn length(&self) -> usize {
        self.len()
    }
    fn text(&self) -> String {
        self.as_composition().text()
    }
    fn json(&self) -> serde_json::Value {
        serde_json::json!(self.parts())
    }
}

impl IndexKey for SetComposition {
    fn degree(&self) -> u32 {
        self.ground()
    }
    fn length(&self) -> usize {
        self.len()
    }
    fn text(&self) -> String {
        let blocks: Vec<String> = self
            .blocks()
            .iter()
            .map(|b| b.iter().map(u32::to_string).collect::<Vec<_>>().join(","))
            .collect();
        format!("{{{}}}", blocks.join("|"))
    }
    fn json(&self) -> serde_json::Value {
        serde_json::json!(self.blocks())
    }
}

pub fn canonical_cmp<K: IndexKey>(a: &K, b: &K) -> Ordering {
    a.degree()
        .cmp(&b.degree())
        .then_with(|| b.length().cmp(&a.length()))
        .then_with(|| a.cmp(b))
}

fn sorted_terms<K: IndexKey>(terms: &LinComb<K>) -> Vec<(&K, &Rational)> {
    let mut v: Vec<_> = terms.iter().collect();
    v.sort_by(|x, y| canonical_cmp(x.0, y.0));
    v
}

fn sorted_pairs<K: IndexKey>(terms: &LinComb<(K, K)>) -> Vec<(&(K, K), &Rational)> {
    let mut v: Vec<_> = terms.iter().collect();
    v.sort_by(|x, y| {
        let (a, b) = (&x.0 .0, &x.0 .1);
        let (c, d) = (&y.0 .0, &y.0 .1);
        (a.degree() + b.degree())
            .cmp(&(c.degree() + d.degree()))
            .then_with(|| canonical_cmp(a, c))
            .then_with(|| canonical_cmp(b, d))
    });
    v
}

fn rational_text(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn ncq_label(b: &NcqBasis) -> String {
    match b {
        NcqBasis::M => "Mn".into(),
        NcqBasis::P(o) if *o == SetOrder::Dtilde => "Pn".into(),
        NcqBasis::P(o) => format!("Pn^{}", o.name()),
    }
}

fn basis_label(v: &Value) -> Option<String> {
    Some(match v {
        Value::Qsym(x) => x.basis.to_string(),
        Value::QsymTensor(t) => t.left.to_string(),
        Value::Nsym(x) => x.basis.to_string(),
        Value::Sym(x) => x.basis.to_string(),
        Value::Ncq(x) => ncq_label(&x.basis),
        Value::NcqTensor(t) => ncq_label(&t.basis),
        _ => return None,
    })
}

/// Joins signed terms as `a + b - c`, leaving out unit coefficients.
fn join_terms(items: impl Iterator<Item = (Rational, String)>) -> String {
    let mut out = String::new();
    for (i, (c, body)) in items.enumerate() {
        let neg = c.is_negative();
        let mag = c.abs();
        let term = if mag.is_one() {
            body
        } else {
            format!("{}*{}", rational_text(&mag), body)
        };
        match (i, neg) {
            (0, false) => out.push_str(&term),
            (0, true) => {
                out.push('-');
                out.push_str(&term);
            }
            (_, false) => {
                out.push_str(" + ");
                out.push_str(&term);
            }
            (_, true) => {
                out.push_str(" - ");
                out.push_str(&term);
            }
        }
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

fn element_text<K: IndexKey>(label: &str, terms: &LinComb<K>) -> String {
    join_terms(
        sorted_terms(terms)
            .into_iter()
            .map(|(k, c)| (c.clone(), format!("{label}{}", k.text()))),
    )
}

fn tensor_text<K: IndexKey>(label: &str, terms: &LinComb<(K, K)>) -> String {
    join_terms(sorted_pairs(terms).into_iter().map(|((a, b), c)| {
        (
            c.clone(),
            format!("{label}{} ⊗ {label}{}", a.text(), b.text()),
        )
    }))
}

pub fn to_text(v: &Value) -> String {
    let label = basis_label(v).unwrap_or_default();
    match v {
        Value::Scalar(s) => rational_text(s),
        Value::Qsym(x) => element_text(&label, &x.terms),
        Value::Nsym(x) => element_text(&label, &x.terms),
        Value::Sym(x) => element_text(&label, &x.terms),
        Value::Ncq(x) => element_text(&label, &x.terms),
        Value::QsymTensor(t) => tensor_text(&label, &t.terms),
        Value::NcqTensor(t) => tensor_text(&label, &t.terms),
        Value::Composition(a) => a.text(),
        Value::Check(true) => "ok".into(),
        Value::Check(false) => "mismatch".into(),
    }
}

fn number(n: &BigInt) -> Number {
    n.to_string().parse().expect("integer literal")
}

#[derive(Serialize)]
struct TermRecord {
    index: serde_json::Value,
    num: Number,
    den: Number,
}

#[derive(Serialize)]
struct PairRecord {
    left: serde_json::Value,
    right: serde_json::Value,
    num: Number,
    den: Number,
}

#[derive(Serialize)]
struct ElementRecord {
    space: &'static str,
    basis: String,
    terms: Vec<TermRecord>,
}

#[derive(Serialize)]
struct TensorRecord {
    space: &'static str,
    basis: String,
    pairs: Vec<PairRecord>,
}

#[derive(Serialize)]
struct ScalarRecord {
    space: &'static str,
    num: Number,
    den: Number,
}

#[derive(Serialize)]
struct IndexRecord {
    space: &'static str,
    index: serde_json::Value,
}

#[derive(Serialize)]
struct CheckRecord {
    space: &'static str,
    result: &'static str,
}

fn term_records<K: IndexKey>(terms: &LinComb<K>) -> Vec<TermRecord> {
    sorted_terms(terms)
        .into_iter()
        .map(|(k, c)| TermRecord {
            index: k.json(),
            num: number(c.numer()),
            den: number(c.denom()),
        })
        .collect()
}

fn pair_records<K: IndexKey>(terms: &LinComb<(K, K)>) -> Vec<PairRecord> {
    sorted_pairs(terms)
        .into_iter()
        .map(|((a, b), c)| PairRecord {
            left: a.json(),
            right: b.json(),
            num: number(c.numer()),
            den: number(c.denom()),
        })
        .collect()
}

pub fn to_json(v: &Value) -> String {
    let space = v.space();
    let basis = basis_label(v).unwrap_or_default();
    let element = |terms| {
        serde_json::to_string(&ElementRecord {
            space,
            basis: basis.clone(),
            terms,
        })
    };
    let tensor = |pairs| {
        serde_json::to_string(&TensorRecord {
            space,
            basis: basis.clone(),
            pairs,
        })
    };
    match v {
        Value::Scalar(s) => serde_json::to_string(&ScalarRecord {
            space,
            num: number(s.numer()),
            den: number(s.denom()),
        }),
        Value::Qsym(x) => element(term_records(&x.terms)),
        Value::Nsym(x) => element(term_records(&x.terms)),
        Value::Sym(x) => element(term_records(&x.terms)),
        Value::Ncq(x) => element(term_records(&x.terms)),
        Value::QsymTensor(t) => tensor(pair_records(&t.terms)),
        Value::NcqTensor(t) => tensor(pair_records(&t.terms)),
        Value::Composition(a) => serde_json::to_string(&IndexRecord {
            space,
            index: a.json(),
        }),
        Value::Check(ok) => serde_json::to_string(&CheckRecord {
            space,
            result: if *ok { "ok" } else { "mismatch" },
        }),
    }
    .expect("records serialize")
}
