//! Evaluation of parsed expressions against the core library.

use num_traits::{One, Signed, ToPrimitive};
use qpows_core::combinat::{c_max, rho_c, rho_t, t_min};
use qpows_core::ncqsym::{
    self, algebraic_complement, coalgebraic_complement, fqsym_g, orbit_project_sum, project_p_to_f,
    project_rho, NcqBasis, NcqElement, NcqTensor,
};
use qpows_core::nsym::{self, duality_check, NsymBasis, NsymElement};
use qpows_core::qsym::{
    self, antipode, coproduct, involution, sym_m_to_qsym, sym_p_to_m, tensor_product, Involution,
    QsymBasis, QsymElement, QsymTensor, SymBasis, SymElement,
};
use qpows_core::ribbon::{descent_ribbons, sdr_count};
use qpows_core::{Composition, IntOrder, LinComb, Partition, Rational, SetComposition, SetOrder};

use crate::error::CliError;
use crate::parse::{Arg, BasisName, Expr, Index};

/// Orders and limits that apply to a whole invocation.
#[derive(Clone, Debug)]
pub struct Settings {
    pub int_order: IntOrder,
    pub set_order: SetOrder,
    /// Cap for commands that enumerate every index of a degree.
    pub max_degree: u32,
}

impl Default for Settings {
    fn default() -> Self {
        Self {
            int_order: IntOrder::Natural,
            set_order: SetOrder::Dtilde,
            max_degree: 8,
        }
    }
}

impl Settings {
    /// Applies an order name. Integer orders govern QSym and NSym, set
    /// orders govern NCQSym.
    pub fn set_order_by_name(&mut self, name: &str) -> Result<(), CliError> {
        if let Some(o) = IntOrder::by_name(name) {
            self.int_order = o;
        } else if let Some(o) = SetOrder::by_name(name) {
            self.set_order = o;
        } else {
            return Err(CliError::UnknownOrder(name.into()));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Scalar(Rational),
    Qsym(QsymElement),
    Nsym(NsymElement),
    Sym(SymElement),
    Ncq(NcqElement),
    QsymTensor(QsymTensor),
    NcqTensor(NcqTensor),
    Composition(Composition),
    Check(bool),
}

impl Value {
    pub fn space(&self) -> &'static str {
        match self {
            Self::Scalar(_) => "scalar",
            Self::Qsym(_) | Self::QsymTensor(_) => "qsym",
            Self::Nsym(_) => "nsym",
            Self::Sym(_) => "sym",
            Self::Ncq(_) | Self::NcqTensor(_) => "ncqsym",
            Self::Composition(_) => "composition",
            Self::Check(_) => "check",
        }
    }
}

fn int_order(settings: &Settings, b: &BasisName) -> Result<IntOrder, CliError> {
    match &b.order {
        None => Ok(settings.int_order.clone()),
        Some(n) => IntOrder::by_name(n).ok_or_else(|| CliError::UnknownOrder(n.clone())),
    }
}

fn set_order(settings: &Settings, b: &BasisName) -> Result<SetOrder, CliError> {
    match &b.order {
        None => Ok(settings.set_order.clone()),
        Some(n) => SetOrder::by_name(n).ok_or_else(|| CliError::UnknownOrder(n.clone())),
    }
}

enum Target {
    Qsym(QsymBasis),
    Nsym(NsymBasis),
    Ncq(NcqBasis),
    Sym(SymBasis),
}

fn resolve_basis(settings: &Settings, b: &BasisName) -> Result<Target, CliError> {
    let no_order = |t: Target| {
        if b.order.is_some() {
            Err(CliError::Unsupported(format!(
                "basis `{}` takes no order",
                b.name
            )))
        } else {
            Ok(t)
        }
    };
    match b.name.as_str() {
        "M" => no_order(Target::Qsym(QsymBasis::M)),
        "F" => no_order(Target::Qsym(QsymBasis::F)),
        "E" => no_order(Target::Qsym(QsymBasis::E)),
        "P" => Ok(Target::Qsym(QsymBasis::P(int_order(settings, b)?))),
        "Pt" => Ok(Target::Qsym(QsymBasis::Pt(int_order(settings, b)?))),
        "S" => no_order(Target::Nsym(NsymBasis::S)),
        "Z" => Ok(Target::Nsym(NsymBasis::Z(int_order(settings, b)?))),
        "Mn" => no_order(Target::Ncq(NcqBasis::M)),
        "Pn" => Ok(Target::Ncq(NcqBasis::P(set_order(settings, b)?))),
        "m" => no_order(Target::Sym(SymBasis::M)),
        "p" => no_order(Target::Sym(SymBasis::P)),
        other => Err(CliError::Unsupported(format!("unknown basis `{other}`"))),
    }
}

fn check_degree(settings: &Settings, degree: u32) -> Result<(), CliError> {
    if degree > settings.max_degree {
        Err(CliError::DegreeLimit {
            degree,
            limit: settings.max_degree,
        })
    } else {
        Ok(())
    }
}

fn atom(settings: &Settings, basis: &BasisName, index: &Index) -> Result<Value, CliError> {
    if basis.name == "G" {
        let Index::Word(w) = index else {
            return Err(CliError::Unsupported(
                "G takes a permutation word, as in G(2,1)".into(),
            ));
        };
        return Ok(Value::Ncq(fqsym_g(w)?));
    }
    let target = resolve_basis(settings, basis)?;
    let mismatch = || CliError::Unsupported(format!("wrong index type for `{}`", basis.name));
    match (target, index) {
        (Target::Qsym(b), Index::Composition(a)) => {
            Ok(Value::Qsym(QsymElement::basis_element(b, a.clone())))
        }
        (Target::Nsym(b), Index::Composition(a)) => {
            Ok(Value::Nsym(NsymElement::basis_element(b, a.clone())))
        }
        (Target::Sym(b), Index::Composition(a)) => {
            let lambda = Partition::new(a.parts().to_vec())?;
            Ok(Value::Sym(SymElement {
                basis: b,
                terms: LinComb::basis(lambda),
            }))
        }
        (Target::Ncq(b), Index::SetComposition(phi)) => {
            Ok(Value::Ncq(NcqElement::basis_element(b, phi.clone())))
        }
        _ => Err(mismatch()),
    }
}

fn scale(v: Value, c: &Rational) -> Result<Value, CliError> {
    Ok(match v {
        Value::Scalar(s) => Value::Scalar(s * c),
        Value::Qsym(x) => Value::Qsym(x.scaled(c)),
        Value::Nsym(x) => Value::Nsym(NsymElement::new(x.basis, x.terms.scaled(c))),
        Value::Sym(x) => Value::Sym(SymElement {
            basis: x.basis,
            terms: x.terms.scaled(c),
        }),
        Value::Ncq(x) => Value::Ncq(NcqElement::new(x.basis, x.terms.scaled(c))),
        Value::QsymTensor(t) => Value::QsymTensor(QsymTensor {
            terms: t.terms.scaled(c),
            ..t
        }),
        Value::NcqTensor(t) => Value::NcqTensor(NcqTensor {
            terms: t.terms.scaled(c),
            ..t
        }),
        other => {
            return Err(CliError::Unsupported(format!(
                "cannot scale a {} value",
                other.space()
            )))
        }
    })
}

/// `s` as `s` times the unit of the space of `like`.
fn scalar_like(s: &Rational, like: &Value) -> Option<Value> {
    Some(match like {
        Value::Qsym(x) => Value::Qsym(QsymElement::one(x.basis.clone()).scaled(s)),
        Value::Nsym(x) => Value::Nsym(NsymElement::new(
            x.basis.clone(),
            LinComb::term(Composition::empty(), s.clone()),
        )),
        Value::Sym(x) => Value::Sym(SymElement {
            basis: x.basis,
            terms: LinComb::term(Partition::new(Vec::new()).expect("empty"), s.clone()),
        }),
        Value::Ncq(x) => Value::Ncq(NcqElement::new(
            x.basis.clone(),
            LinComb::term(SetComposition::empty(), s.clone()),
        )),
        _ => return None,
    })
}

fn sym_to_m(x: &SymElement) -> SymElement {
    match x.basis {
        SymBasis::M => x.clone(),
        SymBasis::P => SymElement {
            basis: SymBasis::M,
            terms: x.terms.map_linear(|l| sym_p_to_m(l).terms),
        },
    }
}

fn add(a: Value, b: Value) -> Result<Value, CliError> {
    Ok(match (a, b) {
        (Value::Scalar(x), Value::Scalar(y)) => Value::Scalar(x + y),
        (Value::Scalar(s), other) | (other, Value::Scalar(s)) => {
            let unit = scalar_like(&s, &other).ok_or_else(|| {
                CliError::SpaceMismatch(format!("cannot add a scalar to a {} value", other.space()))
            })?;
            return add(other, unit);
        }
        (Value::Qsym(x), Value::Qsym(y)) => Value::Qsym(x.add(&y)),
        (Value::Nsym(x), Value::Nsym(y)) => {
            let y = nsym::convert(&y, &x.basis);
            Value::Nsym(NsymElement::new(x.basis, &x.terms + &y.terms))
        }
        (Value::Ncq(x), Value::Ncq(y)) => {
            let y = ncqsym::convert(&y, &x.basis);
            Value::Ncq(NcqElement::new(x.basis, &x.terms + &y.terms))
        }
        (Value::Sym(x), Value::Sym(y)) => {
            let (x, y) = if x.basis == y.basis {
                (x, y)
            } else {
                (sym_to_m(&x), sym_to_m(&y))
            };
            Value::Sym(SymElement {
                basis: x.basis,
                terms: &x.terms + &y.terms,
            })
        }
        (Value::QsymTensor(x), Value::QsymTensor(y)) => {
            let y = y.convert(&x.left, &x.right);
            Value::QsymTensor(QsymTensor {
                terms: &x.terms + &y.terms,
                ..x
            })
        }
        (Value::NcqTensor(x), Value::NcqTensor(y)) => {
            let y = y.convert(&x.basis);
            Value::NcqTensor(NcqTensor {
                terms: &x.terms + &y.terms,
                ..x
            })
        }
        (x, y) => {
            return Err(CliError::SpaceMismatch(format!(
                "cannot add {} and {}",
                x.space(),
                y.space()
            )))
        }
    })
}

fn mul(a: Value, b: Value) -> Result<Value, CliError> {
    if let Value::Scalar(s) = &a {
        return scale(b, s);
    }
    if let Value::Scalar(s) = &b {
        return scale(a, s);
    }
    Ok(match (a, b) {
        (Value::Qsym(x), Value::Qsym(y)) => Value::Qsym(qsym::product(&x, &y)),
        (Value::Nsym(x), Value::Nsym(y)) => Value::Nsym(nsym::product(&x, &y)),
        (Value::Ncq(x), Value::Ncq(y)) => Value::Ncq(ncqsym::product(&x, &y)),
        (Value::QsymTensor(x), Value::QsymTensor(y)) => Value::QsymTensor(tensor_product(&x, &y)),
        (Value::Sym(x), Value::Sym(y)) if x.basis == SymBasis::P && y.basis == SymBasis::P => {
            Value::Sym(SymElement {
                basis: SymBasis::P,
                terms: x.terms.bilinear(&y.terms, |l, m| {
                    let mut parts = l.parts().to_vec();
                    parts.extend_from_slice(m.parts());
                    LinComb::basis(Partition::from_unsorted(parts))
                }),
            })
        }
        (x, y) => {
            return Err(CliError::SpaceMismatch(format!(
                "cannot multiply {} by {}",
                x.space(),
                y.space()
            )))
        }
    })
}

fn convert_to(settings: &Settings, v: Value, b: &BasisName) -> Result<Value, CliError> {
    let target = resolve_basis(settings, b)?;
    Ok(match (v, target) {
        (Value::Qsym(x), Target::Qsym(t)) => Value::Qsym(qsym::convert(&x, &t)),
        (Value::Nsym(x), Target::Nsym(t)) => Value::Nsym(nsym::convert(&x, &t)),
        (Value::Ncq(x), Target::Ncq(t)) => Value::Ncq(ncqsym::convert(&x, &t)),
        (Value::Sym(x), Target::Sym(SymBasis::M)) => Value::Sym(sym_to_m(&x)),
        (Value::Sym(x), Target::Sym(SymBasis::P)) if x.basis == SymBasis::P => Value::Sym(x),
        (Value::Sym(x), Target::Qsym(t)) => {
            // m includes into M and p into P for the target's order.
            let ord = t
                .order()
                .cloned()
                .unwrap_or_else(|| settings.int_order.clone());
            Value::Qsym(qsym::convert(&sym_m_to_qsym(&x, &ord), &t))
        }
        (Value::QsymTensor(x), Target::Qsym(t)) => Value::QsymTensor(x.convert(&t, &t)),
        (Value::NcqTensor(x), Target::Ncq(t)) => Value::NcqTensor(x.convert(&t)),
        (v, _) => {
            return Err(CliError::SpaceMismatch(format!(
                "cannot convert a {} value to `{}`",
                v.space(),
                b.name
            )))
        }
    })
}

fn small_int(v: &Value, what: &str) -> Result<u32, CliError> {
    match v {
        Value::Scalar(s) if s.is_integer() && !s.is_negative() => s
            .to_integer()
            .to_u32()
            .ok_or_else(|| CliError::Unsupported(format!("{what} is too large"))),
        _ => Err(CliError::Unsupported(format!(
            "{what} must be a nonnegative integer"
        ))),
    }
}

pub fn evaluate(settings: &Settings, e: &Expr) -> Result<Value, CliError> {
    match e {
        Expr::Number(r) => Ok(Value::Scalar(r.clone())),
        Expr::Atom { basis, index } => atom(settings, basis, index),
        Expr::Neg(x) => scale(evaluate(settings, x)?, &-Rational::one()),
        Expr::Add(x, y) => add(evaluate(settings, x)?, evaluate(settings, y)?),
        Expr::Sub(x, y) => add(
            evaluate(settings, x)?,
            scale(evaluate(settings, y)?, &-Rational::one())?,
        ),
        Expr::Mul(x, y) => mul(evaluate(settings, x)?, evaluate(settings, y)?),
        Expr::Literal(_) => Err(CliError::Unsupported(
            "an index literal is only allowed as a function argument".into(),
        )),
        Expr::Call { name, args, .. } => call(settings, name, args),
    }
}

fn arity(name: &str, args: &[Arg], n: usize) -> Result<(), CliError> {
    if args.len() == n {
        Ok(())
    } else {
        Err(CliError::Unsupported(format!(
            "`{name}` takes {n} argument(s)"
        )))
    }
}

fn value_arg(settings: &Settings, a: &Arg) -> Result<Value, CliError> {
    match a {
        Arg::Expr(e) => evaluate(settings, e),
        Arg::Basis(b) => Err(CliError::Unsupported(format!(
            "`{}` is a basis, not a value",
            b.name
        ))),
    }
}

fn composition_arg(a: &Arg) -> Result<Composition, CliError> {
    match a {
        Arg::Expr(Expr::Literal(Index::Composition(c))) => Ok(c.clone()),
        _ => Err(CliError::Unsupported(
            "expected a composition literal such as [2,1]".into(),
        )),
    }
}

fn set_composition_arg(a: &Arg) -> Result<SetComposition, CliError> {
    match a {
        Arg::Expr(Expr::Literal(Index::SetComposition(c))) => Ok(c.clone()),
        Arg::Expr(Expr::Atom {
            index: Index::SetComposition(c),
            ..
        }) => Ok(c.clone()),
        _ => Err(CliError::Unsupported(
            "expected a set composition literal such as {1,3|2}".into(),
        )),
    }
}

fn call(settings: &Settings, name: &str, args: &[Arg]) -> Result<Value, CliError> {
    let qsym_only = |v: Value| match v {
        Value::Qsym(x) => Ok(x),
        other => Err(CliError::SpaceMismatch(format!(
            "`{name}` needs a qsym value, got {}",
            other.space()
        ))),
    };
    let ncq_only = |v: Value| match v {
        Value::Ncq(x) => Ok(x),
        other => Err(CliError::SpaceMismatch(format!(
            "`{name}` needs an ncqsym value, got {}",
            other.space()
        ))),
    };
    match name {
        "convert" => {
            arity(name, args, 2)?;
            let Arg::Basis(b) = &args[1] else {
                return Err(CliError::Unsupported(
                    "second argument of `convert` must be a basis name".into(),
                ));
            };
            convert_to(settings, value_arg(settings, &args[0])?, b)
        }
        "coproduct" => {
            arity(name, args, 1)?;
            match value_arg(settings, &args[0])? {
                Value::Qsym(x) => Ok(Value::QsymTensor(coproduct(&x))),
                Value::Ncq(x) => Ok(Value::NcqTensor(ncqsym::coproduct(&x))),
                other => Err(CliError::SpaceMismatch(format!(
                    "no coproduct on {}",
                    other.space()
                ))),
            }
        }
        "antipode" => {
            arity(name, args, 1)?;
            Ok(Value::Qsym(antipode(&qsym_only(value_arg(
                settings, &args[0],
            )?)?)))
        }
        "star" | "omega" | "psi" => {
            arity(name, args, 1)?;
            let kind: Involution = name.parse().map_err(CliError::Unsupported)?;
            Ok(Value::Qsym(involution(
                &qsym_only(value_arg(settings, &args[0])?)?,
                kind,
            )))
        }
        "project" => {
            arity(name, args, 1)?;
            Ok(Value::Qsym(project_rho(&ncq_only(value_arg(
                settings, &args[0],
            )?)?)))
        }
        "projectf" => {
            arity(name, args, 1)?;
            let phi = set_composition_arg(&args[0])?;
            Ok(Value::Qsym(project_p_to_f(&phi, &settings.set_order)?))
        }
        "orbitsum" => {
            arity(name, args, 1)?;
            let phi = set_composition_arg(&args[0])?;
            Ok(Value::Qsym(orbit_project_sum(&phi, &settings.set_order)?))
        }
        "algebraic" => {
            arity(name, args, 1)?;
            Ok(Value::Ncq(algebraic_complement(&ncq_only(value_arg(
                settings, &args[0],
            )?)?)))
        }
        "coalgebraic" => {
            arity(name, args, 1)?;
            Ok(Value::Ncq(coalgebraic_complement(&ncq_only(value_arg(
                settings, &args[0],
            )?)?)))
        }
        "dualcheck" => {
            arity(name, args, 1)?;
            let n = small_int(&value_arg(settings, &args[0])?, "the degree")?;
            check_degree(settings, n)?;
            Ok(Value::Check(duality_check(n, &settings.int_order)))
        }
        "cmax" | "tmin" => {
            arity(name, args, 1)?;
            let a = composition_arg(&args[0])?;
            let f = if name == "cmax" { c_max } else { t_min };
            Ok(Value::Composition(f(&a, &settings.int_order)))
        }
        "rhoc" | "rhot" => {
            arity(name, args, 1)?;
            let phi = set_composition_arg(&args[0])?;
            let f = if name == "rhoc" { rho_c } else { rho_t };
            Ok(Value::Composition(f(&phi, &settings.set_order)))
        }
        "ht" | "sdr" => {
            arity(name, args, 2)?;
            let beta = composition_arg(&args[0])?;
            let alpha = composition_arg(&args[1])?;
            let n = if name == "ht" {
                descent_ribbons(&beta, &alpha)?.height as u128
            } else {
                sdr_count(&beta, &alpha)?
            };
            Ok(Value::Scalar(Rational::from_integer(n.into())))
        }
        other => Err(CliError::Unsupported(format!("unknown function `{other}`"))),
    }
}
