//! Exhaustive comparisons between the closed rules and the oracles. Each
//! check returns the number of cases compared, or the first mismatch.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::time::{Duration, Instant};

use crate::combinat::{
    block_orbit, order_interval, rho_c, set_order_descents, Composition, IntOrder, Partition,
    SetComposition, SetOrder, SetPartition,
};
use crate::fillings::enumerate_dd;
use crate::linear::LinComb;
use crate::ncqsym::{
    self, algebraic_complement, coalgebraic_complement, fqsym_g, ncsym_p_expand,
    ncsym_p_expand_lsr, ncsym_p_to_p, orbit_project_sum, project_p_to_f, project_rho, NcqBasis,
    NcqElement,
};
use crate::nsym::duality_check;
use crate::qsym::{
    antipode, convert, coproduct, counit, expand_p_in_f, expand_p_in_m, involution, product,
    sym_p_to_m, tensor_product, Involution, QsymBasis, QsymElement,
};

use super::oracle::*;

pub type Outcome = Result<usize, String>;

fn compositions_up_to(max_n: u32) -> impl Iterator<Item = Composition> {
    (1..=max_n).flat_map(Composition::all_of)
}

fn set_compositions_up_to(max_n: u32) -> impl Iterator<Item = SetComposition> {
    (1..=max_n).flat_map(SetComposition::all_of)
}

fn pairs_up_to<T: Clone>(max_total: u32, all_of: impl Fn(u32) -> Vec<T>) -> Vec<(T, T)> {
    let mut out = Vec::new();
    for a in 1..max_total {
        for b in 1..=max_total - a {
            for x in all_of(a) {
                for y in all_of(b) {
                    out.push((x.clone(), y));
                }
            }
        }
    }
    out
}

fn permutations_of(n: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations_of(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n);
            out.push(q);
        }
    }
    out
}

fn el(basis: &QsymBasis, a: &Composition) -> QsymElement {
    QsymElement::basis_element(basis.clone(), a.clone())
}

fn ncq(basis: &NcqBasis, phi: &SetComposition) -> NcqElement {
    NcqElement::basis_element(basis.clone(), phi.clone())
}

fn powersum_bases(ords: &[IntOrder]) -> Vec<QsymBasis> {
    ords.iter()
        .flat_map(|o| [QsymBasis::P(o.clone()), QsymBasis::Pt(o.clone())])
        .collect()
}

/// Column readings of diagonal descending fillings against the weighted
/// interval `[α, C(α)]`.
pub fn check_dd_interval(max_n: u32, ords: &[IntOrder]) -> Outcome {
    let mut cases = 0;
    for ord in ords {
        for a in compositions_up_to(max_n) {
            let readings =
                LinComb::from_multiset(enumerate_dd(&a, ord).iter().map(|f| f.column_reading()));
            let interval: LinComb<Composition> = order_interval(&a, ord).into_iter().collect();
            if readings != interval {
                return Err(format!("DD readings of {a} under {}", ord.name()));
            }
            cases += 1;
        }
    }
    Ok(cases)
}

/// The ribbon rule against `M → F` applied to the monomial expansion.
pub fn check_ribbon_rule(max_n: u32, ords: &[IntOrder]) -> Outcome {
    let mut cases = 0;
    for ord in ords {
        for a in compositions_up_to(max_n) {
            let via_m = convert(&el(&QsymBasis::P(ord.clone()), &a), &QsymBasis::F);
            if expand_p_in_f(&a, ord) != via_m.terms {
                return Err(format!("P_{a} in F under {}", ord.name()));
            }
            cases += 1;
        }
    }
    Ok(cases)
}

/// Polynomial products of monomials, memoized per pair.
#[derive(Default)]
struct PolyProducts(HashMap<(Composition, Composition), Option<LinComb<Composition>>>);

impl PolyProducts {
    fn product(
        &mut self,
        x: &LinComb<Composition>,
        y: &LinComb<Composition>,
    ) -> Option<LinComb<Composition>> {
        let mut out = LinComb::zero();
        for (a, ca) in x.iter() {
            for (b, cb) in y.iter() {
                let m = self
                    .0
                    .entry((a.clone(), b.clone()))
                    .or_insert_with(|| {
                        let nvars = a.len() + b.len();
                        poly_to_qsym_m(&poly_mul(
                            &monomial_qsym(a, nvars),
                            &monomial_qsym(b, nvars),
                        ))
                    })
                    .as_ref()?;
                out.add_scaled(m, &(ca * cb));
            }
        }
        Some(out)
    }
}

/// Products in `M`, `P` and `P̃` against polynomial multiplication.
pub fn check_qsym_products(max_n: u32, ords: &[IntOrder]) -> Outcome {
    let mut cases = 0;
    let mut bases = vec![QsymBasis::M];
    bases.extend(powersum_bases(ords));
    let mut oracle = PolyProducts::default();
    for (a, b) in pairs_up_to(max_n, Composition::all_of) {
        for basis in &bases {
            let (x, y) = (el(basis, &a), el(basis, &b));
            let want = oracle
                .product(&x.to_m(), &y.to_m())
                .ok_or_else(|| format!("{basis}_{a} {basis}_{b} is not quasisymmetric"))?;
            let got = product(&x, &y);
            if &got.basis != basis || got.to_m() != want {
                return Err(format!("{basis}_{a} * {basis}_{b}"));
            }
            cases += 1;
        }
    }
    Ok(cases)
}

/// Coproducts in `M`, `P` and `P̃` against evaluation on two alphabets.
pub fn check_qsym_coproducts(max_n: u32, ords: &[IntOrder]) -> Outcome {
    let mut cases = 0;
    let mut bases = vec![QsymBasis::M];
    bases.extend(powersum_bases(ords));
    let mut memo: HashMap<Composition, LinComb<(Composition, Composition)>> = HashMap::new();
    for a in compositions_up_to(max_n) {
        for basis in &bases {
            let x = el(basis, &a);
            let want = x.to_m().map_linear(|g| {
                memo.entry(g.clone())
                    .or_insert_with(|| {
                        let nvars = g.len();
                        poly_to_qsym_tensor(&monomial_qsym(g, 2 * nvars), nvars)
                    })
                    .clone()
            });
            let got = coproduct(&x);
            if got.left != *basis || got.convert(&QsymBasis::M, &QsymBasis::M).terms != want {
                return Err(format!("coproduct of {basis}_{a}"));
            }
            cases += 1;
        }
    }
    Ok(cases)
}

/// `μ(S ⊗ id)Δ = ηε` on `P̃`, and `S` on `M` and `P` against Takeuchi's
/// formula.
pub fn check_antipode(max_n: u32, ords: &[IntOrder]) -> Outcome {
    let mut cases = 0;
    for ord in ords {
        let pt = QsymBasis::Pt(ord.clone());
        for a in compositions_up_to(max_n) {
            let x = el(&pt, &a);
            let mut acc = QsymElement::zero(pt.clone());
            for ((l, r), c) in coproduct(&x).terms.iter() {
                let term = product(&antipode(&el(&pt, l)), &el(&pt, r));
                acc = acc.add(&term.scaled(c));
            }
            if !acc.is_zero() || !counit(&x).eq(&crate::linear::rat(0)) {
                return Err(format!("antipode axiom on Pt_{a} under {}", ord.name()));
            }
            let p = el(&QsymBasis::P(ord.clone()), &a);
            let want = p.to_m().map_linear(takeuchi_antipode_m);
            if antipode(&p).to_m() != want {
                return Err(format!("S(P_{a}) under {}", ord.name()));
            }
            cases += 2;
        }
    }
    for a in compositions_up_to(max_n) {
        if antipode(&el(&QsymBasis::M, &a)).terms != takeuchi_antipode_m(&a) {
            return Err(format!("S(M_{a})"));
        }
        cases += 1;
    }
    Ok(cases)
}

/// `Δ(xy) = Δ(x)Δ(y)` on monomials.
pub fn check_bialgebra(max_n: u32) -> Outcome {
    let mut cases = 0;
    for (a, b) in pairs_up_to(max_n, Composition::all_of) {
        let (x, y) = (el(&QsymBasis::M, &a), el(&QsymBasis::M, &b));
        if coproduct(&product(&x, &y)) != tensor_product(&coproduct(&x), &coproduct(&y)) {
            return Err(format!("Δ(M_{a} M_{b})"));
        }
        cases += 1;
    }
    Ok(cases)
}

/// `A = Bᵀ` in every degree up to `max_n`.
pub fn check_duality(max_n: u32, ord: &IntOrder) -> Outcome {
    for n in 1..=max_n {
        if !duality_check(n, ord) {
            return Err(format!("duality in degree {n} under {}", ord.name()));
        }
    }
    Ok(max_n as usize)
}

/// `p_λ` through fillings and `Σ_{sort α = λ} P_α` against the power sum
/// polynomial.
pub fn check_sym_refinement(max_n: u32, ords: &[IntOrder]) -> Outcome {
    let mut cases = 0;
    for n in 1..=max_n {
        for lambda in Partition::all_of(n) {
            let poly = power_sum(&lambda, n as usize);
            if sym_p_to_m(&lambda).terms != poly_to_sym_m(&poly) {
                return Err(format!("p_{lambda:?} in m"));
            }
            let want = poly_to_qsym_m(&poly).ok_or("power sum not quasisymmetric")?;
            for ord in ords {
                let got = LinComb::from_iter(
                    lambda
                        .rearrangements()
                        .iter()
                        .flat_map(|a| expand_p_in_m(a, ord).into_iter()),
                );
                if got != want {
                    return Err(format!("p_{lambda:?} as a sum of P under {}", ord.name()));
                }
                cases += 1;
            }
        }
    }
    Ok(cases)
}

/// `p_φ` by coarsenings, by labelled single row fillings and as a sum of
/// `P_Φ`, against the noncommutative power sum polynomial.
pub fn check_ncsym_refinement(max_n: u32, ords: &[SetOrder]) -> Outcome {
    let mut cases = 0;
    for n in 1..=max_n {
        for phi in SetPartition::all_of(n) {
            let want = word_poly_to_ncqsym_m(&power_sum_ncsym(&phi, phi.len()));
            if ncsym_p_expand(&phi).terms != want {
                return Err(format!("p_{phi} by coarsenings"));
            }
            if ncsym_p_expand_lsr(&phi).terms != want {
                return Err(format!("p_{phi} by LSR fillings"));
            }
            for ord in ords {
                if ncsym_p_to_p(&phi, ord).to_m() != want {
                    return Err(format!("p_{phi} as a sum of P under {}", ord.name()));
                }
                cases += 1;
            }
        }
    }
    Ok(cases)
}

/// Oracle products of monomials, memoized since every basis expands into
/// the same monomials.
#[derive(Default)]
struct WordProducts(HashMap<(SetComposition, SetComposition), LinComb<SetComposition>>);

impl WordProducts {
    fn product(
        &mut self,
        x: &LinComb<SetComposition>,
        y: &LinComb<SetComposition>,
    ) -> LinComb<SetComposition> {
        x.bilinear(y, |a, b| {
            self.0
                .entry((a.clone(), b.clone()))
                .or_insert_with(|| {
                    let nletters = a.len() + b.len();
                    word_poly_to_ncqsym_m(&word_mul(
                        &monomial_ncqsym(a, nletters),
                        &monomial_ncqsym(b, nletters),
                    ))
                })
                .clone()
        })
    }
}

/// Products in `M` and `P^▷` against concatenation of words.
pub fn check_ncq_products(max_ground: u32, ords: &[SetOrder]) -> Outcome {
    let mut cases = 0;
    let mut bases = vec![NcqBasis::M];
    bases.extend(ords.iter().map(|o| NcqBasis::P(o.clone())));
    let mut oracle = WordProducts::default();
    for (a, b) in pairs_up_to(max_ground, SetComposition::all_of) {
        for basis in &bases {
            let (x, y) = (ncq(basis, &a), ncq(basis, &b));
            let want = oracle.product(&x.to_m(), &y.to_m());
            let got = ncqsym::product(&x, &y);
            if &got.basis != basis || got.to_m() != want {
                return Err(format!("{basis}_{a} * {basis}_{b}"));
            }
            cases += 1;
        }
    }
    Ok(cases)
}

/// Coproducts in `M` and `P^▷` against splitting words between two
/// alphabets.
pub fn check_ncq_coproducts(max_ground: u32, ords: &[SetOrder]) -> Outcome {
    let mut cases = 0;
    let mut bases = vec![NcqBasis::M];
    bases.extend(ords.iter().map(|o| NcqBasis::P(o.clone())));
    let mut memo: HashMap<SetComposition, LinComb<(SetComposition, SetComposition)>> =
        HashMap::new();
    for phi in set_compositions_up_to(max_ground) {
        for basis in &bases {
            let x = ncq(basis, &phi);
            let want = x.to_m().map_linear(|psi| {
                memo.entry(psi.clone())
                    .or_insert_with(|| {
                        let k = psi.len();
                        word_poly_to_ncqsym_tensor(&monomial_ncqsym(psi, 2 * k), k as u32)
                    })
                    .clone()
            });
            let got = ncqsym::coproduct(&x);
            if &got.basis != basis || got.convert(&NcqBasis::M).terms != want {
                return Err(format!("coproduct of {basis}_{phi}"));
            }
            cases += 1;
        }
    }
    Ok(cases)
}

fn projective(ords: &[SetOrder]) -> Vec<(SetOrder, IntOrder)> {
    ords.iter()
        .filter_map(|o| o.projection().map(|p| (o.clone(), p)))
        .collect()
}

/// The orbit identity, the fundamental expansion of `ρ(P_Φ)`, the
/// descent-pattern proposition and the disjointness of orbit intervals.
/// Non-projective orders must be rejected.
pub fn check_projection(max_n: u32, ords: &[SetOrder]) -> Outcome {
    let mut cases = 0;
    for ord in ords.iter().filter(|o| o.projection().is_none()) {
        let phi = SetComposition::all_of(1).remove(0);
        if project_p_to_f(&phi, ord).is_ok() || orbit_project_sum(&phi, ord).is_ok() {
            return Err(format!("non-projective {} accepted", ord.name()));
        }
    }
    for (ord, proj) in projective(ords) {
        for n in 1..=max_n {
            let mut by_pattern: BTreeMap<(Composition, BTreeSet<usize>), LinComb<Composition>> =
                BTreeMap::new();
            for phi in SetComposition::all_of(n) {
                let p = ncq(&NcqBasis::P(ord.clone()), &phi);
                let projected = project_rho(&p);

                let orbit = orbit_project_sum(&phi, &ord).map_err(|e| e.to_string())?;
                if orbit.terms != expand_p_in_m(&phi.rho(), &proj) {
                    return Err(format!("orbit sum of {phi} under {}", ord.name()));
                }

                let f = project_p_to_f(&phi, &ord).map_err(|e| e.to_string())?;
                if f != convert(&projected, &QsymBasis::F) {
                    return Err(format!("rho(P_{phi}) in F under {}", ord.name()));
                }

                let key = (phi.rho(), set_order_descents(&phi, &ord));
                match by_pattern.get(&key) {
                    Some(prev) if *prev != projected.terms => {
                        return Err(format!(
                            "rho(P_{phi}) differs within its descent class under {}",
                            ord.name()
                        ));
                    }
                    Some(_) => {}
                    None => {
                        by_pattern.insert(key, projected.terms.clone());
                    }
                }

                let members = block_orbit(&phi);
                // Each orbit is checked once, from its least member.
                if members.iter().min() == Some(&phi) {
                    let images = members
                        .iter()
                        .map(|s| Ok((rho_c(s, &ord), project_p_to_f(s, &ord)?.terms)))
                        .collect::<crate::Result<Vec<_>>>()
                        .map_err(|e| e.to_string())?;
                    for (i, (ci, fi)) in images.iter().enumerate() {
                        for (j, (cj, fj)) in images.iter().enumerate().skip(i + 1) {
                            if ci != cj && fi.keys().any(|k| fj.keys().any(|l| l == k)) {
                                return Err(format!(
                                    "intervals of {} and {} overlap under {}",
                                    members[i],
                                    members[j],
                                    ord.name()
                                ));
                            }
                        }
                    }
                }
                cases += 1;
            }
        }
    }
    Ok(cases)
}

/// Closed rules for star, omega and psi on the powersum bases against the
/// fundamental route, and the involution laws on every basis.
pub fn check_involutions(max_n: u32, ords: &[IntOrder]) -> Outcome {
    let kinds = [Involution::Star, Involution::Omega, Involution::Psi];
    let mut bases = vec![QsymBasis::M, QsymBasis::F, QsymBasis::E];
    bases.extend(powersum_bases(ords));
    let mut cases = 0;
    for a in compositions_up_to(max_n) {
        for basis in &bases {
            let x = el(basis, &a);
            for kind in kinds {
                let image = involution(&x, kind);
                let via_f = involution(&convert(&x, &QsymBasis::F), kind);
                if convert(&image, &QsymBasis::F) != via_f {
                    return Err(format!("{kind}({basis}_{a})"));
                }
                if convert(&involution(&image, kind), basis) != x {
                    return Err(format!("{kind} is not an involution on {basis}_{a}"));
                }
                cases += 1;
            }
        }
    }
    Ok(cases)
}

/// Algebraic and coalgebraic complements against reversing or barring the
/// monomial expansion termwise, and both involution laws.
pub fn check_complements(max_n: u32, ords: &[SetOrder]) -> Outcome {
    let mut cases = 0;
    let mut bases = vec![NcqBasis::M];
    bases.extend(ords.iter().map(|o| NcqBasis::P(o.clone())));
    for phi in set_compositions_up_to(max_n) {
        for basis in &bases {
            let x = ncq(basis, &phi);
            let m = x.to_m();
            let alg = algebraic_complement(&x);
            if alg.to_m() != m.map_keys(SetComposition::reverse) {
                return Err(format!("algebraic complement of {basis}_{phi}"));
            }
            let coalg = coalgebraic_complement(&x);
            if coalg.to_m() != m.map_keys(SetComposition::complement) {
                return Err(format!("coalgebraic complement of {basis}_{phi}"));
            }
            if algebraic_complement(&alg) != x || coalgebraic_complement(&coalg) != x {
                return Err(format!("complements of {basis}_{phi} are not involutions"));
            }
            cases += 1;
        }
    }
    Ok(cases)
}

fn singleton_word(phi: &SetComposition) -> Option<Vec<u32>> {
    phi.blocks()
        .iter()
        .map(|b| (b.len() == 1).then(|| b[0]))
        .collect()
}

/// `G_σ G_τ` and `Δ(G_τ)` against shifted shuffles and standardized
/// deconcatenations of permutation words.
pub fn check_fqsym(max_n: u32) -> Outcome {
    let mut cases = 0;
    let to_words = |x: &NcqElement| -> Option<LinComb<Vec<u32>>> {
        x.terms
            .iter()
            .map(|(k, c)| singleton_word(k).map(|w| (w, c.clone())))
            .collect::<Option<Vec<_>>>()
            .map(|v| v.into_iter().collect())
    };
    for a in 0..=max_n {
        for b in 0..=max_n - a {
            for sigma in permutations_of(a) {
                for tau in permutations_of(b) {
                    let g = ncqsym::product(
                        &fqsym_g(&sigma).map_err(|e| e.to_string())?,
                        &fqsym_g(&tau).map_err(|e| e.to_string())?,
                    );
                    let want = LinComb::from_multiset(shifted_shuffle_words(&sigma, &tau));
                    if g.basis != NcqBasis::P(SetOrder::Dtilde) || to_words(&g) != Some(want) {
                        return Err(format!("G_{sigma:?} G_{tau:?}"));
                    }
                    cases += 1;
                }
            }
        }
        for tau in permutations_of(a) {
            let d = ncqsym::coproduct(&fqsym_g(&tau).map_err(|e| e.to_string())?);
            let got: Option<LinComb<(Vec<u32>, Vec<u32>)>> = d
                .terms
                .iter()
                .map(|((l, r), c)| Some(((singleton_word(l)?, singleton_word(r)?), c.clone())))
                .collect::<Option<Vec<_>>>()
                .map(|v| v.into_iter().collect());
            if got != Some(LinComb::from_multiset(deconcatenate_std(&tau))) {
                return Err(format!("Δ(G_{tau:?})"));
            }
            cases += 1;
        }
    }
    Ok(cases)
}

/// One row of a self-test run.
#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub name: &'static str,
    pub bound: u32,
    pub outcome: Outcome,
    pub elapsed: Duration,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.outcome.is_ok()
    }
}

fn run(name: &'static str, bound: u32, f: impl FnOnce(u32) -> Outcome) -> SuiteReport {
    let start = Instant::now();
    let outcome = f(bound);
    SuiteReport {
        name,
        bound,
        outcome,
        elapsed: start.elapsed(),
    }
}

/// Runs every check with its degree capped at `max_degree`. Suites over set
/// compositions and permutations never go past 5.
pub fn selftest(max_degree: u32) -> Vec<SuiteReport> {
    let ints = IntOrder::builtins();
    let sets = SetOrder::builtins();
    let q = max_degree;
    let nc = max_degree.min(5);
    vec![
        run("dd-interval", q, |n| check_dd_interval(n, &ints)),
        run("ribbon-rule", q, |n| check_ribbon_rule(n, &ints)),
        run("qsym-products", q, |n| check_qsym_products(n, &ints)),
        run("qsym-coproducts", q, |n| check_qsym_coproducts(n, &ints)),
        run("antipode", q, |n| check_antipode(n, &ints)),
        run("bialgebra", q, check_bialgebra),
        run("duality", q, |n| {
            ints.iter()
                .try_fold(0, |acc, o| check_duality(n, o).map(|c| acc + c))
        }),
        run("sym-refinement", q, |n| check_sym_refinement(n, &ints)),
        run("ncsym-refinement", nc, |n| check_ncsym_refinement(n, &sets)),
        run("ncqsym-products", nc, |n| check_ncq_products(n, &sets)),
        run("ncqsym-coproducts", nc, |n| check_ncq_coproducts(n, &sets)),
        run("projection", nc, |n| check_projection(n, &sets)),
        run("involutions", q, |n| check_involutions(n, &ints)),
        run("complements", nc, |n| check_complements(n, &sets)),
        run("fqsym", nc, check_fqsym),
    ]
}
