//! Differential forms on flat `ℝⁿ` with polynomial coefficients: the
//! exterior derivative, the codifferential built from the regressive
//! product, and the Laplacian `Δ = dδ + δd`.

use num_traits::Zero;

use crate::blade::{wedge_sign, Blade};
use crate::error::{Error, Result};
use crate::metric::{check_ctx, MetricContext};
use crate::multivector::{Chirality, Multivector};
use crate::poly::Polynomial;
use crate::regressive::{cobasis_in, regressive_unimodular};
use crate::ring::Rational;
use crate::scalar::Hyperbolic;
use crate::ExtendedMultivector;

pub type PolyForm = Multivector<Polynomial>;

/// `dx^i` in dimension `dim`.
pub fn dx(dim: usize, i: usize) -> Result<PolyForm> {
    PolyForm::basis(dim, i)
}

/// A form with constant coefficients.
pub fn from_constant(psi: &ExtendedMultivector) -> PolyForm {
    PolyForm::from_terms(
        psi.dim(),
        psi.terms().map(|(b, c)| {
            (
                *b,
                Hyperbolic::new(Polynomial::constant(c.a.clone()), Polynomial::constant(c.b.clone())),
            )
        }),
    )
}

/// The form back as constants, if no coordinate occurs.
pub fn to_constant(omega: &PolyForm) -> Option<ExtendedMultivector> {
    let mut out = ExtendedMultivector::zero(omega.dim());
    for (b, c) in omega.terms() {
        out.add_term(*b, Hyperbolic::new(c.a.as_constant()?, c.b.as_constant()?));
    }
    Some(out)
}

fn partial(c: &Hyperbolic<Polynomial>, j: usize) -> Hyperbolic<Polynomial> {
    Hyperbolic::new(c.a.derivative(j), c.b.derivative(j))
}

/// `dψ = Σ_j ∂_j ψ_B dx^j ∧ B`. Commutes with `eps`.
pub fn d(omega: &PolyForm) -> PolyForm {
    let n = omega.dim();
    let mut out = PolyForm::zero(n);
    for (b, c) in omega.terms() {
        for j in 1..=n {
            let s = wedge_sign(Blade::basis(j), *b);
            if s == 0 {
                continue;
            }
            let dc = partial(c, j);
            if dc.is_zero() {
                continue;
            }
            out.add_term(Blade::basis(j).union(*b), dc.scale(&Rational::from_integer(s.into())));
        }
    }
    out
}

/// `δψ = Σ_B Σ_{j,m} g^{jm} ∂_m ψ_B · (B ∨ 𝔢^j)`, where `∨` uses the
/// bracket with `[dx¹,…,dxⁿ] = 1`. On `f dx¹∧dx²` in Euclidean `ℝ³` this
/// gives `f₁ dx² - f₂ dx¹`.
pub fn codifferential(omega: &PolyForm, ctx: &MetricContext) -> Result<PolyForm> {
    check_ctx(omega, ctx)?;
    let n = omega.dim();
    let g = ctx.g();
    let cobases = (1..=n)
        .map(|j| cobasis_in::<Polynomial>(n, j, false))
        .collect::<Result<Vec<_>>>()?;
    let mut out = PolyForm::zero(n);
    for (b, c) in omega.terms() {
        let blade = PolyForm::blade(n, *b);
        for (j, fj) in cobases.iter().enumerate() {
            let meet = regressive_unimodular(&blade, fj)?;
            if meet.is_zero() {
                continue;
            }
            let mut coeff = Hyperbolic::<Polynomial>::zero();
            for m in 0..n {
                let gjm = g.get(j, m);
                if gjm.is_zero() {
                    continue;
                }
                coeff = coeff + partial(c, m + 1).scale(gjm);
            }
            if coeff.is_zero() {
                continue;
            }
            out = out + meet.mul_coefficient(&coeff);
        }
    }
    Ok(out)
}

/// `Δ = dδ + δd`.
pub fn laplacian(omega: &PolyForm, ctx: &MetricContext) -> Result<PolyForm> {
    Ok(d(&codifferential(omega, ctx)?) + codifferential(&d(omega), ctx)?)
}

/// Chirality of the cobasis product `𝔢¹ ∨ ⋯ ∨ 𝔢^k`: chiral exactly when
/// `k` is even and positive.
pub fn derham_chirality(k: usize, n: usize) -> Result<Chirality> {
    if k > n {
        return Err(Error::GradeOutOfRange { grade: k, dim: n });
    }
    Ok(if k > 0 && k.is_multiple_of(2) {
        Chirality::Chiral
    } else {
        Chirality::Achiral
    })
}

/// `(k, chirality)` for `k = 0..=n`.
pub fn derham_sequence(n: usize) -> Vec<(usize, Chirality)> {
    (0..=n).map(|k| (k, derham_chirality(k, n).expect("k ≤ n"))).collect()
}
