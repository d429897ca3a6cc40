//! The bracket, the regressive product and the cobasis.
//!
//! The bracket is normalized so that `[e¹,…,eⁿ] = eps`. The regressive
//! product inherits that factor: `ψ ∨ (e¹∧⋯∧eⁿ) = eps·ψ`.

use num_traits::Zero;

use crate::blade::{wedge_sign, Blade};
use crate::error::{Error, Result};
use crate::linalg::RatMatrix;
use crate::multivector::{Combo, Multivector};
use crate::ring::{Rational, Ring};
use crate::scalar::{Hyperbolic, HyperbolicScalar};
use crate::ExtendedMultivector;

/// `[v₁,…,vₙ] = det(v_i^j)·eps` for achiral covectors.
pub fn bracket(covectors: &[ExtendedMultivector]) -> Result<HyperbolicScalar> {
    let Some(first) = covectors.first() else {
        return Err(Error::BracketArity { expected: 0, got: 0 });
    };
    let n = first.dim();
    if covectors.len() != n {
        return Err(Error::BracketArity {
            expected: n,
            got: covectors.len(),
        });
    }
    let mut rows = Vec::with_capacity(n);
    for v in covectors {
        first.check_dim(v)?;
        if !v.is_achiral() || v.terms().any(|(b, _)| b.grade() != 1) {
            return Err(Error::NotGradeOne);
        }
        rows.push(
            (1..=n)
                .map(|j| v.coefficient(Blade::basis(j)).a)
                .collect::<Vec<Rational>>(),
        );
    }
    let det = RatMatrix::from_rows(rows)?.determinant();
    Ok(Hyperbolic::new(Rational::zero(), det))
}

/// `[ψ, φ]`: the bracket of the concatenated factors, zero unless the
/// grades add up to `n`. Extended bilinearly.
pub fn bracket_pair<T: Ring>(psi: &Multivector<T>, phi: &Multivector<T>) -> Result<Hyperbolic<T>> {
    let full = Blade::full(psi.dim());
    Ok(psi.wedge(phi)?.coefficient(full).mul_eps())
}

fn regressive_kernel(dim: usize, a: Blade, b: Blade) -> Option<(Blade, Rational)> {
    if a.union(b) != Blade::full(dim) {
        return None;
    }
    let c = a.intersection(b);
    let rest = a.without(c);
    let sign = wedge_sign(rest, c) * wedge_sign(rest, b);
    Some((c, Rational::from_integer(sign.into())))
}

/// `ψ ∨ φ`. On blades `A ∨ B` vanishes unless `A ∪ B` is every index, and
/// then equals `±eps·(A ∩ B)`.
pub fn regressive<T: Ring>(psi: &Multivector<T>, phi: &Multivector<T>) -> Result<Multivector<T>> {
    Ok(regressive_unimodular(psi, phi)?.chirality_flip())
}

/// The regressive product for the bracket `[e¹,…,eⁿ] = 1`, i.e. `eps`
/// read off as orientation and dropped.
pub fn regressive_unimodular<T: Ring>(psi: &Multivector<T>, phi: &Multivector<T>) -> Result<Multivector<T>> {
    psi.check_dim(phi)?;
    let dim = psi.dim();
    Ok(psi.bilinear(phi, |a, b| -> Combo {
        regressive_kernel(dim, a, b).into_iter().collect()
    }))
}

/// Regressive product of a sequence, folded from the left.
pub fn regressive_all<T: Ring>(items: &[Multivector<T>]) -> Result<Multivector<T>> {
    let (first, rest) = items.split_first().ok_or(Error::BracketArity { expected: 1, got: 0 })?;
    rest.iter().try_fold(first.clone(), |acc, x| regressive(&acc, x))
}

/// The cobasis blade `𝔢^i = (-1)^{i-1} e¹∧⋯ě^i⋯∧eⁿ`, times `eps` when chiral.
pub fn cobasis(dim: usize, i: usize, chiral: bool) -> Result<ExtendedMultivector> {
    cobasis_in::<Rational>(dim, i, chiral)
}

pub fn cobasis_in<T: Ring>(dim: usize, i: usize, chiral: bool) -> Result<Multivector<T>> {
    if i == 0 || i > dim {
        return Err(Error::IndexOutOfRange { index: i, dim });
    }
    let blade = Blade::basis(i).complement(dim);
    let sign = if i % 2 == 1 { 1 } else { -1 };
    let c = Hyperbolic::from_rational(&Rational::from_integer(sign.into()));
    let c = if chiral { c.mul_eps() } else { c };
    Ok(Multivector::term(dim, blade, c))
}

/// `e¹∧⋯ě^i⋯∧eⁿ` without the alternating sign.
pub fn punctured_volume(dim: usize, i: usize) -> Result<ExtendedMultivector> {
    if i == 0 || i > dim {
        return Err(Error::IndexOutOfRange { index: i, dim });
    }
    Ok(Multivector::blade(dim, Blade::basis(i).complement(dim)))
}
