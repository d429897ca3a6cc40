use crate::error::{Error, Result};
use crate::forms::{codifferential, d, from_constant, laplacian, to_constant, PolyForm};
use crate::hodge::{counterspace_product, hodge_star, quasi_hodge, VolumeElements};
use crate::metric::{clifford_product, left_contraction, MetricContext};
use crate::multivector::ExtendedMultivector;
use crate::poly::Polynomial;
use crate::regressive::{bracket, cobasis_in, regressive};
use crate::scalar::HyperbolicScalar;

use super::parser::Expr;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Default)]
pub enum Orientation {
    #[default]
    Positive,
    /// Results are shown with `eps ↦ -eps`.
    Negative,
}

pub struct Env {
    pub ctx: MetricContext,
    pub orientation: Orientation,
}

impl Env {
    pub fn new(ctx: MetricContext) -> Self {
        Env {
            ctx,
            orientation: Orientation::Positive,
        }
    }

    pub fn dim(&self) -> usize {
        self.ctx.dim()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Scalar(HyperbolicScalar),
    Multivector(ExtendedMultivector),
    Form(PolyForm),
}

impl Value {
    pub fn flip_orientation(&self) -> Value {
        match self {
            Value::Scalar(s) => Value::Scalar(s.flip_orientation()),
            Value::Multivector(m) => Value::Multivector(m.flip_orientation()),
            Value::Form(f) => Value::Form(f.flip_orientation()),
        }
    }
}

#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
enum Kind {
    Scalar,
    Multivector,
    Form,
}

/// Everything is computed over polynomial coefficients; `kind` records what
/// the value is, so constants come back as multivectors or scalars.
struct Val {
    mv: PolyForm,
    kind: Kind,
}

impl Val {
    fn new(mv: PolyForm, kind: Kind) -> Self {
        Val { mv, kind }
    }
}

pub fn evaluate(e: &Expr, env: &Env) -> Result<Value> {
    let v = eval(e, env)?;
    let value = match v.kind {
        Kind::Form => Value::Form(v.mv),
        Kind::Multivector => Value::Multivector(to_constant(&v.mv).expect("no coordinate occurs")),
        Kind::Scalar => {
            let m = to_constant(&v.mv).expect("no coordinate occurs");
            Value::Scalar(m.as_scalar().expect("scalar-kind values have grade 0"))
        }
    };
    Ok(match env.orientation {
        Orientation::Positive => value,
        Orientation::Negative => value.flip_orientation(),
    })
}

/// Parse and evaluate.
pub fn eval_str(src: &str, env: &Env) -> Result<Value> {
    evaluate(&super::parser::parse_str(src)?, env)
}

fn check_index(i: usize, dim: usize) -> Result<usize> {
    if i == 0 || i > dim {
        return Err(Error::IndexOutOfRange { index: i, dim });
    }
    Ok(i)
}

fn scalar_kind(a: Kind, b: Kind) -> Kind {
    a.max(b)
}

/// Result of a non-scalar operation: at least a multivector.
fn lift(k: Kind) -> Kind {
    k.max(Kind::Multivector)
}

fn form_only(v: Val, op: &str) -> Result<PolyForm> {
    if v.kind != Kind::Form {
        return Err(Error::Type(format!(
            "{op} needs a differential form (use x1, x2, ... coefficients)"
        )));
    }
    Ok(v.mv)
}

fn eval(e: &Expr, env: &Env) -> Result<Val> {
    let n = env.dim();
    let ctx = &env.ctx;
    let bin = |l: &Expr, r: &Expr| -> Result<(Val, Val)> { Ok((eval(l, env)?, eval(r, env)?)) };
    Ok(match e {
        Expr::BasisCovector(i) => Val::new(PolyForm::basis(n, check_index(*i, n)?)?, Kind::Multivector),
        Expr::Cobasis(i) => Val::new(cobasis_in(n, check_index(*i, n)?, false)?, Kind::Multivector),
        Expr::Eps => Val::new(PolyForm::eps(n), Kind::Scalar),
        Expr::ScalarLit(r) => Val::new(PolyForm::one(n).scale(r), Kind::Scalar),
        Expr::PolyFormLit { var, power } => {
            let p = Polynomial::var(check_index(*var, n)?).pow(*power);
            Val::new(PolyForm::one(n).mul_ring(&p), Kind::Form)
        }
        Expr::Add(l, r) => {
            let (a, b) = bin(l, r)?;
            Val::new(a.mv + b.mv, scalar_kind(a.kind, b.kind))
        }
        Expr::Sub(l, r) => {
            let (a, b) = bin(l, r)?;
            Val::new(a.mv - b.mv, scalar_kind(a.kind, b.kind))
        }
        Expr::Neg(x) => {
            let a = eval(x, env)?;
            Val::new(-a.mv, a.kind)
        }
        Expr::Wedge(l, r) => {
            let (a, b) = bin(l, r)?;
            Val::new(a.mv.wedge(&b.mv)?, scalar_kind(a.kind, b.kind))
        }
        Expr::CliffordMul(l, r) => {
            let (a, b) = bin(l, r)?;
            Val::new(clifford_product(&a.mv, &b.mv, ctx)?, scalar_kind(a.kind, b.kind))
        }
        Expr::Vee(l, r) => {
            let (a, b) = bin(l, r)?;
            Val::new(regressive(&a.mv, &b.mv)?, lift(scalar_kind(a.kind, b.kind)))
        }
        Expr::AstMul(l, r) => {
            let (a, b) = bin(l, r)?;
            Val::new(
                counterspace_product(&a.mv, &b.mv, ctx)?,
                lift(scalar_kind(a.kind, b.kind)),
            )
        }
        Expr::ContractLeft(l, r) => {
            let (a, b) = bin(l, r)?;
            Val::new(left_contraction(&a.mv, &b.mv, ctx)?, lift(scalar_kind(a.kind, b.kind)))
        }
        Expr::StarCall(x) | Expr::StarEpsCall(x) => {
            let a = eval(x, env)?;
            let chiral = matches!(e, Expr::StarEpsCall(_));
            Val::new(hodge_star(&a.mv, chiral, ctx)?, lift(a.kind))
        }
        Expr::QuasiStarCall { direction, chiral, arg } => {
            let a = eval(arg, env)?;
            let vol = VolumeElements::unit(n);
            Val::new(quasi_hodge(&a.mv, *direction, *chiral, &vol)?, lift(a.kind))
        }
        Expr::Bracket(items) => {
            let mut covectors = Vec::with_capacity(items.len());
            for item in items {
                let v = eval(item, env)?;
                let c = to_constant(&v.mv)
                    .filter(|_| v.kind != Kind::Form)
                    .ok_or_else(|| Error::Type("bracket takes constant covectors".into()))?;
                covectors.push(c);
            }
            let s = bracket(&covectors)?;
            Val::new(from_constant(&ExtendedMultivector::scalar(n, s)), Kind::Scalar)
        }
        Expr::D(x) => Val::new(d(&form_only(eval(x, env)?, "d")?), Kind::Form),
        Expr::Delta(x) => Val::new(codifferential(&form_only(eval(x, env)?, "delta")?, ctx)?, Kind::Form),
        Expr::Laplacian(x) => Val::new(laplacian(&form_only(eval(x, env)?, "lap")?, ctx)?, Kind::Form),
        Expr::Involution(kind, x) => {
            let a = eval(x, env)?;
            Val::new(a.mv.involution(*kind), a.kind)
        }
        Expr::GradeProj { arg, k, chirality } => {
            let a = eval(arg, env)?;
            let kind = if *k == 0 { a.kind } else { lift(a.kind) };
            Val::new(a.mv.grade_project(*k, *chirality)?, kind)
        }
    })
}

/// Polynomials are read with the expression grammar restricted to numbers,
/// coordinates, `+`, `-` and `*`.
pub(crate) fn eval_polynomial(e: &Expr) -> Result<Polynomial> {
    let bin =
        |l: &Expr, r: &Expr| -> Result<(Polynomial, Polynomial)> { Ok((eval_polynomial(l)?, eval_polynomial(r)?)) };
    Ok(match e {
        Expr::ScalarLit(r) => Polynomial::constant(r.clone()),
        Expr::PolyFormLit { var, power } => {
            if *var == 0 {
                return Err(Error::IndexOutOfRange { index: 0, dim: 0 });
            }
            Polynomial::var(*var).pow(*power)
        }
        Expr::Add(l, r) => {
            let (a, b) = bin(l, r)?;
            a + b
        }
        Expr::Sub(l, r) => {
            let (a, b) = bin(l, r)?;
            a - b
        }
        Expr::CliffordMul(l, r) => {
            let (a, b) = bin(l, r)?;
            a * b
        }
        Expr::Neg(x) => -eval_polynomial(x)?,
        _ => return Err(Error::Type("not a polynomial".into())),
    })
}

impl std::str::FromStr for Polynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        eval_polynomial(&super::parser::parse_str(s)?)
    }
}

impl From<HyperbolicScalar> for Value {
    fn from(s: HyperbolicScalar) -> Self {
        Value::Scalar(s)
    }
}

impl From<ExtendedMultivector> for Value {
    fn from(m: ExtendedMultivector) -> Self {
        Value::Multivector(m)
    }
}

impl From<PolyForm> for Value {
    fn from(f: PolyForm) -> Self {
        Value::Form(f)
    }
}
