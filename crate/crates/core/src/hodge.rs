//! Quasi-Hodge operators, the (chiral) Hodge star and the counterspace
//! Clifford product `ψ ∗ φ = ⋆⁻¹[(⋆ψ)(⋆φ)]`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::blade::Blade;
use crate::error::{Error, Result};
use crate::linalg::RatMatrix;
use crate::metric::{check_ctx, clifford_product, contract_blade, left_contraction_with, MetricContext, StarTable};
use crate::multivector::{Combo, Involution, Multivector};
use crate::ring::{Rational, Ring};
use crate::ExtendedMultivector;

/// `Θ = a·e₁∧⋯∧eₙ` and `Υ = a'·e¹∧⋯∧eⁿ` with `rev(Υ) ⌟ Θ = a·a' = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VolumeElements {
    dim: usize,
    theta_scale: Rational,
    upsilon_scale: Rational,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum QuasiHodge {
    /// `⋆̲ψ = rev(ψ) ⌟ Υ`.
    Lower,
    /// `⋆̄ψ = rev(ψ) ⌟ Θ`.
    Upper,
}

impl VolumeElements {
    pub fn new(dim: usize, theta_scale: Rational, upsilon_scale: Rational) -> Result<Self> {
        let product = &theta_scale * &upsilon_scale;
        if !product.is_one() {
            return Err(Error::IncompatibleVolumes(product.to_string()));
        }
        Ok(VolumeElements {
            dim,
            theta_scale,
            upsilon_scale,
        })
    }

    pub fn unit(dim: usize) -> Self {
        Self::new(dim, Rational::one(), Rational::one()).expect("unit volumes")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn theta<T: Ring>(&self) -> Multivector<T> {
        Multivector::volume(self.dim).scale(&self.theta_scale)
    }

    pub fn upsilon<T: Ring>(&self) -> Multivector<T> {
        Multivector::volume(self.dim).scale(&self.upsilon_scale)
    }
}

/// `⋆̲`, `⋆̄` and their chiral versions. These use the natural pairing of
/// vectors with covectors, so no metric is involved.
pub fn quasi_hodge<T: Ring>(
    psi: &Multivector<T>,
    direction: QuasiHodge,
    chiral: bool,
    vol: &VolumeElements,
) -> Result<Multivector<T>> {
    if psi.dim() != vol.dim {
        return Err(Error::DimensionMismatch {
            left: psi.dim(),
            right: vol.dim,
        });
    }
    let target = match direction {
        QuasiHodge::Lower => vol.upsilon(),
        QuasiHodge::Upper => vol.theta(),
    };
    let out = left_contraction_with(&RatMatrix::identity(vol.dim), &psi.reversion(), &target)?;
    Ok(if chiral { out.chirality_flip() } else { out })
}

fn star_blade(ctx: &MetricContext, scale: &Rational, b: Blade) -> Combo {
    let full = Blade::full(ctx.dim());
    let sign = Rational::from_integer(Involution::Reversion.sign(b.grade()).into()) * scale;
    contract_blade(ctx.g(), b, full)
        .into_iter()
        .map(|(c, r)| (c, r * &sign))
        .collect()
}

/// `⋆ψ = rev(ψ) ⌟ η`, applied grade by grade; `⋆_ε = eps·⋆`.
pub fn hodge_star<T: Ring>(psi: &Multivector<T>, chiral: bool, ctx: &MetricContext) -> Result<Multivector<T>> {
    check_ctx(psi, ctx)?;
    let s = ctx.volume_scale()?;
    let out = psi.linear(|b| star_blade(ctx, &s, b));
    Ok(if chiral { out.chirality_flip() } else { out })
}

fn build_inverse(ctx: &MetricContext, scale: &Rational, m: usize) -> StarTable {
    let n = ctx.dim();
    let sources = Blade::of_grade(n, n - m);
    let targets = Blade::of_grade(n, m);
    let mut inverse = BTreeMap::new();
    if ctx.g().is_diagonal() {
        for a in sources {
            let image = star_blade(ctx, scale, a);
            let (b, c) = image.into_iter().next().expect("star of a blade is nonzero");
            inverse.insert(b, vec![(a, Rational::one() / c)]);
        }
        return StarTable { inverse };
    }
    let pos: BTreeMap<Blade, usize> = targets.iter().enumerate().map(|(i, b)| (*b, i)).collect();
    let mut matrix = RatMatrix::zeros(targets.len(), sources.len());
    for (j, a) in sources.iter().enumerate() {
        for (b, c) in star_blade(ctx, scale, *a) {
            matrix.set(pos[&b], j, c);
        }
    }
    let inv = matrix.inverse().expect("Hodge star is a bijection");
    for (i, b) in targets.iter().enumerate() {
        let combo = sources
            .iter()
            .enumerate()
            .filter(|(j, _)| !inv.get(*j, i).is_zero())
            .map(|(j, a)| (*a, inv.get(j, i).clone()))
            .collect();
        inverse.insert(*b, combo);
    }
    StarTable { inverse }
}

/// The inverse of [`hodge_star`], computed from the per-grade matrix of `⋆`.
pub fn hodge_star_inverse<T: Ring>(psi: &Multivector<T>, chiral: bool, ctx: &MetricContext) -> Result<Multivector<T>> {
    check_ctx(psi, ctx)?;
    let s = ctx.volume_scale()?;
    let out = psi.linear(|b| {
        let table = ctx
            .star_table(b.grade())
            .get_or_init(|| build_inverse(ctx, &s, b.grade()));
        table.inverse[&b].clone()
    });
    Ok(if chiral { out.chirality_flip() } else { out })
}

/// `⋆ψ = rev(ψ)·η` with the Clifford product.
pub fn hodge_star_clifford<T: Ring>(psi: &Multivector<T>, ctx: &MetricContext) -> Result<Multivector<T>> {
    let eta = Multivector::volume(ctx.dim()).scale(&ctx.volume_scale()?);
    clifford_product(&psi.reversion(), &eta, ctx)
}

/// `ψ ∗ φ = ⋆⁻¹[(⋆ψ)(⋆φ)]`.
pub fn counterspace_product<T: Ring>(
    psi: &Multivector<T>,
    phi: &Multivector<T>,
    ctx: &MetricContext,
) -> Result<Multivector<T>> {
    let p = clifford_product(&hodge_star(psi, false, ctx)?, &hodge_star(phi, false, ctx)?, ctx)?;
    hodge_star_inverse(&p, false, ctx)
}

/// `⋆⁻¹(1)`, the two-sided unit of `∗`. It is `η` when `det g > 0` and `-η`
/// otherwise.
pub fn counterspace_unit(ctx: &MetricContext) -> Result<ExtendedMultivector> {
    hodge_star_inverse(&ExtendedMultivector::one(ctx.dim()), false, ctx)
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Side {
    /// `v ⌐ ψ = ½(v∗ψ - ψ̂∗v)`.
    Right,
    /// `ψ ⌐ v = ½(ψ∗v - v∗ψ̂)`.
    Left,
}

/// The contractions of the `∗` algebra by a degree-one element `v`. Both a
/// covector and a cobasis-style `(n-1)`-form count as degree one.
pub fn counterspace_contraction(
    side: Side,
    v: &ExtendedMultivector,
    psi: &ExtendedMultivector,
    ctx: &MetricContext,
) -> Result<ExtendedMultivector> {
    let n = ctx.dim();
    match v.homogeneous_grade() {
        Some(k) if (k == 1 || k + 1 == n) && !v.is_zero() => {}
        _ => return Err(Error::NotGradeOne),
    }
    let hat = psi.grade_involution();
    let half = Rational::new(1.into(), 2.into());
    let diff = match side {
        Side::Right => counterspace_product(v, psi, ctx)? - counterspace_product(&hat, v, ctx)?,
        Side::Left => counterspace_product(psi, v, ctx)? - counterspace_product(v, &hat, ctx)?,
    };
    Ok(diff.scale(&half))
}

fn graded_pairs(
    xi: &ExtendedMultivector,
    omega: &ExtendedMultivector,
    ctx: &MetricContext,
    f: impl Fn(usize, usize) -> Option<usize>,
) -> Result<ExtendedMultivector> {
    let mut out = ExtendedMultivector::zero(ctx.dim());
    for i in xi.grades() {
        for j in omega.grades() {
            if let Some(target) = f(i, j) {
                let p = counterspace_product(&xi.grade(i), &omega.grade(j), ctx)?;
                out = out + p.grade(target);
            }
        }
    }
    Ok(out)
}

/// `ξ ⌐ ω = ⟨ξ∗ω⟩_{n-(j-i)}` for grades `i ≤ j`; other pairs give zero.
pub fn co_contraction_left(
    xi: &ExtendedMultivector,
    omega: &ExtendedMultivector,
    ctx: &MetricContext,
) -> Result<ExtendedMultivector> {
    let n = ctx.dim();
    graded_pairs(xi, omega, ctx, |i, j| (i <= j).then(|| n - (j - i)))
}

/// `ξ ⌐ᴿ ω = ⟨ξ∗ω⟩_{n-(i-j)}` for grades `i ≥ j`; other pairs give zero.
pub fn co_contraction_right(
    xi: &ExtendedMultivector,
    omega: &ExtendedMultivector,
    ctx: &MetricContext,
) -> Result<ExtendedMultivector> {
    let n = ctx.dim();
    graded_pairs(xi, omega, ctx, |i, j| (i >= j).then(|| n - (i - j)))
}

/// `⋆⁻¹[(⋆ψ) ∧ (⋆φ)]`, the regressive product seen through the Hodge star.
pub fn regressive_via_star<T: Ring>(
    psi: &Multivector<T>,
    phi: &Multivector<T>,
    ctx: &MetricContext,
) -> Result<Multivector<T>> {
    let w = hodge_star(psi, false, ctx)?.wedge(&hodge_star(phi, false, ctx)?)?;
    hodge_star_inverse(&w, false, ctx)
}
