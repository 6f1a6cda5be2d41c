//! Acceptance runner. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails or runs past its time limit.

use std::path::{Path, PathBuf};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use qpows_core::combinat::{c_max, rho_c, rho_t};
use qpows_core::linear::rat;
use qpows_core::ncqsym::{self, coalgebraic_complement, NcqBasis, NcqElement};
use qpows_core::qsym::{self, sym_p_to_m, QsymBasis, QsymElement};
use qpows_core::ribbon::{descent_ribbons, sdr_count};
use qpows_core::verify::checks::*;
use qpows_core::{Composition, IntOrder, LinComb, Partition, SetComposition, SetOrder};

type Check = Result<String, String>;
type Criterion<'a> = (&'a str, u64, Box<dyn Fn() -> Check>);

fn comp(p: &[u32]) -> Composition {
    Composition::new(p.to_vec()).unwrap()
}

fn setc(s: &str) -> SetComposition {
    s.parse().unwrap()
}

fn lc(terms: &[(&[u32], i64)]) -> LinComb<Composition> {
    terms.iter().map(|(a, c)| (comp(a), rat(*c))).collect()
}

fn lcs(terms: &[&str]) -> LinComb<SetComposition> {
    terms.iter().map(|s| (setc(s), rat(1))).collect()
}

fn expect<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got:?}, expected {want:?}"))
    }
}

fn p_in_m(alpha: &[u32], ord: IntOrder) -> LinComb<Composition> {
    qsym::convert(
        &QsymElement::basis_element(QsymBasis::P(ord), comp(alpha)),
        &QsymBasis::M,
    )
    .terms
}

fn goldens_qsym() -> Check {
    expect(
        "P[2,1,2]",
        p_in_m(&[2, 1, 2], IntOrder::Natural),
        lc(&[(&[2, 1, 2], 2), (&[3, 2], 2)]),
    )?;
    expect(
        "P[1,2,1,1]",
        p_in_m(&[1, 2, 1, 1], IntOrder::Natural),
        lc(&[
            (&[1, 2, 1, 1], 6),
            (&[1, 2, 2], 3),
            (&[1, 3, 1], 6),
            (&[1, 4], 3),
        ]),
    )?;
    let sym: LinComb<Partition> = [
        (vec![2, 2, 1], 2),
        (vec![3, 2], 2),
        (vec![4, 1], 1),
        (vec![5], 1),
    ]
    .into_iter()
    .map(|(p, c)| (Partition::new(p).unwrap(), rat(c)))
    .collect();
    expect(
        "p[2,2,1]",
        sym_p_to_m(&Partition::new(vec![2, 2, 1]).unwrap()).terms,
        sym,
    )?;
    expect(
        "P^evenodd[2,3,4,2,6]",
        p_in_m(&[2, 3, 4, 2, 6], IntOrder::EvenOdd),
        lc(&[
            (&[2, 3, 4, 2, 6], 2),
            (&[2, 3, 6, 6], 2),
            (&[5, 4, 2, 6], 2),
            (&[5, 6, 6], 2),
        ]),
    )?;
    expect(
        "C_max",
        c_max(&comp(&[3, 2, 1, 1, 3, 1, 1, 1, 2, 1]), &IntOrder::Natural),
        comp(&[7, 6, 3]),
    )?;
    let cop = qsym::coproduct(&QsymElement::basis_element(QsymBasis::M, comp(&[4, 1, 3])));
    let want: LinComb<(Composition, Composition)> = [
        (&[][..], &[4, 1, 3][..]),
        (&[4], &[1, 3]),
        (&[4, 1], &[3]),
        (&[4, 1, 3], &[]),
    ]
    .into_iter()
    .map(|(l, r)| ((comp(l), comp(r)), rat(1)))
    .collect();
    expect("coproduct M[4,1,3]", cop.terms, want)?;
    let prod = qsym::product(
        &QsymElement::basis_element(QsymBasis::M, comp(&[2, 3])),
        &QsymElement::basis_element(QsymBasis::M, comp(&[1])),
    );
    expect(
        "M[2,3]*M[1]",
        prod.terms,
        lc(&[
            (&[1, 2, 3], 1),
            (&[2, 1, 3], 1),
            (&[2, 3, 1], 1),
            (&[2, 4], 1),
            (&[3, 3], 1),
        ]),
    )?;
    Ok("7 identities".into())
}

fn goldens_ribbon() -> Check {
    expect(
        "P[1,2,1,1] in F",
        qsym::expand_p_in_f(&comp(&[1, 2, 1, 1]), &IntOrder::Natural),
        lc(&[
            (&[1, 1, 2, 1], -3),
            (&[1, 1, 3], -3),
            (&[1, 3, 1], 3),
            (&[1, 4], 3),
        ]),
    )?;
    let (beta, alpha) = (comp(&[1, 1, 3]), comp(&[1, 2, 1, 1]));
    expect("ht", descent_ribbons(&beta, &alpha).unwrap().height, 1)?;
    expect("sdr", sdr_count(&beta, &alpha).unwrap(), 3)?;
    Ok("3 identities".into())
}

fn goldens_ncqsym() -> Check {
    let pn = |s: &str| {
        ncqsym::convert(
            &NcqElement::basis_element(NcqBasis::P(SetOrder::Dtilde), setc(s)),
            &NcqBasis::M,
        )
        .terms
    };
    expect(
        "P{1,4|2|3}",
        pn("14|2|3"),
        lcs(&["14|2|3", "124|3", "14|23", "1234"]),
    )?;
    expect(
        "P{5|1,3|4|2}",
        pn("5|13|4|2"),
        lcs(&["5|13|4|2", "5|134|2"]),
    )?;
    expect(
        "P{1|3|2,5|6|4}",
        pn("1|3|25|6|4"),
        lcs(&["1|3|25|6|4", "1|3|256|4", "13|25|6|4", "13|256|4"]),
    )?;
    let phi = setc("2|5|14|36|7");
    expect("rho_C", rho_c(&phi, &SetOrder::Dtilde), comp(&[2, 5]))?;
    expect("rho_T", rho_t(&phi, &SetOrder::Dtilde), comp(&[2, 1, 2, 2]))?;
    let bar = coalgebraic_complement(&NcqElement::basis_element(NcqBasis::M, setc("13|2|45")));
    expect("coalgebraic complement", bar.terms, lcs(&["35|4|12"]))?;
    Ok("6 identities".into())
}

fn suites(list: Vec<(&str, Outcome)>) -> Check {
    let mut total = 0;
    for (name, outcome) in list {
        total += outcome.map_err(|e| format!("{name}: {e}"))?;
    }
    Ok(format!("{total} cases"))
}

fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

fn run_qpows(args: &[&str]) -> Result<String, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_qpows"))
        .args(args)
        .env_remove("QPOWS_MAX_DEGREE")
        .output()
        .map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(format!(
            "qpows {args:?} exited with {}: {}",
            out.status,
            String::from_utf8_lossy(&out.stderr)
        ));
    }
    Ok(String::from_utf8_lossy(&out.stdout).into_owned())
}

fn cli() -> Check {
    let dir = golden_dir();
    let cases = std::fs::read_to_string(dir.join("cases.tsv")).map_err(|e| e.to_string())?;
    let mut n = 0;
    for line in cases
        .lines()
        .filter(|l| !l.starts_with('#') && !l.is_empty())
    {
        let f: Vec<&str> = line.split('\t').collect();
        let (name, order, expr) = (f[0], f[1], f[2]);
        for (json, ext) in [(false, "txt"), (true, "json")] {
            let mut args = vec!["eval", expr];
            if order != "-" {
                args.extend(["--order", order]);
            }
            if json {
                args.push("--json");
            }
            let got = run_qpows(&args)?;
            let want = std::fs::read_to_string(dir.join(format!("{name}.{ext}")))
                .map_err(|e| e.to_string())?;
            if got != want {
                return Err(format!("{name}.{ext}: got {got:?}, expected {want:?}"));
            }
            n += 1;
        }
    }
    let st = run_qpows(&["selftest", "--max-degree", "5"])?;
    if st.lines().any(|l| l.starts_with("FAIL")) {
        return Err(format!("selftest reported failures:\n{st}"));
    }
    Ok(format!("{n} golden outputs, selftest ok"))
}

fn main() -> ExitCode {
    let ints = IntOrder::builtins();
    let sets = SetOrder::builtins();
    let criteria: Vec<Criterion> = vec![
        ("golden identities", 1, Box::new(goldens_qsym)),
        (
            "powersum to fundamental golden",
            1,
            Box::new(goldens_ribbon),
        ),
        ("ncqsym goldens", 1, Box::new(goldens_ncqsym)),
        (
            "fillings vs interval, n <= 6",
            10,
            Box::new(|| {
                suites(vec![(
                    "dd",
                    check_dd_interval(6, &[IntOrder::Natural, IntOrder::EvenOdd]),
                )])
            }),
        ),
        (
            "ribbon rule, n <= 7",
            60,
            Box::new({
                let ints = ints.clone();
                move || suites(vec![("ribbon", check_ribbon_rule(7, &ints))])
            }),
        ),
        (
            "hopf suite, qsym <= 6, ncqsym <= 5",
            120,
            Box::new({
                let (ints, sets) = (ints.clone(), sets.clone());
                move || {
                    suites(vec![
                        ("qsym products", check_qsym_products(6, &ints)),
                        ("qsym coproducts", check_qsym_coproducts(6, &ints)),
                        ("antipode", check_antipode(6, &ints)),
                        ("bialgebra", check_bialgebra(6)),
                        ("ncq products", check_ncq_products(5, &sets)),
                        ("ncq coproducts", check_ncq_coproducts(5, &sets)),
                    ])
                }
            }),
        ),
        (
            "duality, natural <= 7, evenodd <= 6",
            30,
            Box::new(|| {
                suites(vec![
                    ("natural", check_duality(7, &IntOrder::Natural)),
                    ("evenodd", check_duality(6, &IntOrder::EvenOdd)),
                ])
            }),
        ),
        (
            "refinement, sym <= 6, ncsym <= 5",
            60,
            Box::new({
                let (ints, sets) = (ints.clone(), sets.clone());
                move || {
                    suites(vec![
                        ("sym", check_sym_refinement(6, &ints)),
                        ("ncsym", check_ncsym_refinement(5, &sets)),
                    ])
                }
            }),
        ),
        (
            "projection, n <= 5",
            60,
            Box::new({
                let sets = sets.clone();
                move || suites(vec![("projection", check_projection(5, &sets))])
            }),
        ),
        (
            "involutions <= 6, complements <= 5",
            30,
            Box::new({
                let (ints, sets) = (ints.clone(), sets.clone());
                move || {
                    suites(vec![
                        ("involutions", check_involutions(6, &ints)),
                        ("complements", check_complements(5, &sets)),
                    ])
                }
            }),
        ),
        (
            "fqsym, n <= 4",
            10,
            Box::new(|| suites(vec![("fqsym", check_fqsym(4))])),
        ),
        ("cli goldens and selftest", 120, Box::new(cli)),
    ];

    let mut failed = 0;
    for (i, (name, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = run();
        let elapsed = start.elapsed();
        let late = elapsed > Duration::from_secs(*limit);
        let (tag, detail) = match (&result, late) {
            (Ok(d), false) => ("PASS", d.clone()),
            (Ok(d), true) => ("FAIL", format!("{d}, over time limit")),
            (Err(e), _) => ("FAIL", e.clone()),
        };
        if tag == "FAIL" {
            failed += 1;
        }
        println!(
            "{tag} {:>2} {name} ({:.2}s / {limit}s): {detail}",
            i + 1,
            elapsed.as_secs_f64()
        );
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
