//! Metric data on the covector space and the operations it induces:
//! extended Gram pairing, contractions and the Clifford product.

use std::sync::OnceLock;

use num_traits::{One, Signed, Zero};

use crate::blade::{wedge_sign, Blade, MAX_DIM};
use crate::error::{Error, Result};
use crate::linalg::RatMatrix;
use crate::multivector::{Combo, Multivector};
use crate::ring::{rational_sqrt, Rational, Ring};
use crate::ExtendedMultivector;

/// `g^{ij}` on `V*`, its inverse `τ = g_{ij}`, and the metric `g̊` used on
/// the chiral copy. The Hodge volume `η` is derived from `det τ` unless
/// overridden.
#[derive(Clone, Debug)]
pub struct MetricContext {
    g: RatMatrix,
    g_lower: RatMatrix,
    g_ring: RatMatrix,
    volume_scale: Option<Rational>,
    clifford_table: OnceLock<Vec<Combo>>,
    star_tables: Vec<OnceLock<StarTable>>,
}

#[derive(Clone, Debug)]
pub(crate) struct StarTable {
    pub(crate) inverse: std::collections::BTreeMap<Blade, Combo>,
}

impl MetricContext {
    pub fn from_matrix(g: RatMatrix) -> Result<Self> {
        let n = g.rows();
        if !g.is_square() || n == 0 || n > MAX_DIM {
            return Err(if g.is_square() {
                Error::UnsupportedDimension(n)
            } else {
                Error::InvalidMetric("metric must be square".into())
            });
        }
        if !g.is_symmetric() {
            return Err(Error::NonSymmetricMetric);
        }
        let g_lower = g.inverse()?;
        Ok(MetricContext {
            g_ring: g.clone(),
            g,
            g_lower,
            volume_scale: None,
            clifford_table: OnceLock::new(),
            star_tables: (0..=n).map(|_| OnceLock::new()).collect(),
        })
    }

    /// `diag(+1 × p, -1 × q)`.
    pub fn from_signature(p: usize, q: usize) -> Result<Self> {
        let mut d = vec![Rational::one(); p];
        d.extend(vec![-Rational::one(); q]);
        Self::from_matrix(RatMatrix::diagonal(&d))
    }

    pub fn euclidean(n: usize) -> Self {
        Self::from_signature(n, 0).expect("euclidean metric")
    }

    /// `diag(1, -1, …, -1)`.
    pub fn lorentzian(n: usize) -> Self {
        Self::from_signature(1, n - 1).expect("lorentzian metric")
    }

    /// `"p,q"` for a diagonal signature, or a row-major matrix with rows
    /// separated by `;` and entries by `,` (a single row must be `1×1`).
    pub fn parse(src: &str) -> Result<Self> {
        let src = src.trim();
        let rows: Vec<Vec<&str>> = src.split(';').map(|r| r.split(',').map(str::trim).collect()).collect();
        if rows.len() == 1 && rows[0].len() == 2 {
            let p = rows[0][0]
                .parse::<usize>()
                .map_err(|_| Error::InvalidMetric(format!("bad signature {src:?}")))?;
            let q = rows[0][1]
                .parse::<usize>()
                .map_err(|_| Error::InvalidMetric(format!("bad signature {src:?}")))?;
            return Self::from_signature(p, q);
        }
        let parsed = rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|x| {
                        x.parse::<Rational>()
                            .map_err(|_| Error::InvalidMetric(format!("bad entry {x:?}")))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_matrix(RatMatrix::from_rows(parsed)?)
    }

    /// Replace `g̊`, the metric on the chiral copy `εV*`.
    pub fn with_ring_metric(mut self, g_ring: RatMatrix) -> Result<Self> {
        if g_ring.rows() != self.dim() || !g_ring.is_square() {
            return Err(Error::DimensionMismatch {
                left: self.dim(),
                right: g_ring.rows(),
            });
        }
        if !g_ring.is_symmetric() {
            return Err(Error::NonSymmetricMetric);
        }
        g_ring.inverse()?;
        self.g_ring = g_ring;
        Ok(self)
    }

    /// Use `η = s·e¹∧⋯∧eⁿ` instead of `|det τ|^{1/2}·e¹∧⋯∧eⁿ`.
    pub fn with_volume_scale(mut self, s: Rational) -> Self {
        self.volume_scale = Some(s);
        self.star_tables = (0..=self.dim()).map(|_| OnceLock::new()).collect();
        self
    }

    pub fn dim(&self) -> usize {
        self.g.rows()
    }

    pub fn g(&self) -> &RatMatrix {
        &self.g
    }

    pub fn g_lower(&self) -> &RatMatrix {
        &self.g_lower
    }

    pub fn g_ring(&self) -> &RatMatrix {
        &self.g_ring
    }

    /// `(p, q)` counted from the signs on the diagonal, for diagonal `g`.
    pub fn signature(&self) -> Option<(usize, usize)> {
        if !self.g.is_diagonal() {
            return None;
        }
        let n = self.dim();
        let p = (0..n).filter(|&i| self.g.get(i, i).is_positive()).count();
        Some((p, n - p))
    }

    /// `det τ`.
    pub fn det_correlation(&self) -> Rational {
        self.g_lower.determinant()
    }

    /// The scale `s` with `η = s·e¹∧⋯∧eⁿ`.
    pub fn volume_scale(&self) -> Result<Rational> {
        let s = match &self.volume_scale {
            Some(s) => s.clone(),
            None => rational_sqrt(&self.det_correlation().abs()).ok_or_else(|| {
                Error::HodgeUndefined(format!(
                    "|det τ|^(1/2) = ({})^(1/2) is irrational",
                    self.det_correlation().abs()
                ))
            })?,
        };
        let norm = &s * &s * self.g.determinant();
        if norm.abs() != Rational::one() {
            return Err(Error::HodgeUndefined(format!(
                "volume element is not unitary: g(η,η) = {norm}"
            )));
        }
        Ok(s)
    }

    /// `η`, the unit volume covector.
    pub fn volume(&self) -> Result<ExtendedMultivector> {
        Ok(ExtendedMultivector::volume(self.dim()).scale(&self.volume_scale()?))
    }

    pub(crate) fn star_table(&self, k: usize) -> &OnceLock<StarTable> {
        &self.star_tables[k]
    }

    fn clifford_table(&self) -> Option<&Vec<Combo>> {
        let n = self.dim();
        if n > 6 {
            return None;
        }
        Some(self.clifford_table.get_or_init(|| {
            let size = 1usize << n;
            let mut table = Vec::with_capacity(size * size);
            for a in 0..size {
                for b in 0..size {
                    table.push(clifford_blade(&self.g, Blade(a as u16), Blade(b as u16)));
                }
            }
            table
        }))
    }
}

fn sign_ratio(s: i8) -> Rational {
    Rational::from_integer(s.into())
}

/// Gram determinant `det(pairing(a_i, b_j))` of two blades; zero unless the
/// grades agree.
pub(crate) fn gram(pairing: &RatMatrix, a: Blade, b: Blade) -> Rational {
    if a.grade() != b.grade() {
        return Rational::zero();
    }
    let ai = a.indices();
    let bi = b.indices();
    let rows = ai
        .iter()
        .map(|&i| bi.iter().map(|&j| pairing.get(i - 1, j - 1).clone()).collect())
        .collect();
    RatMatrix::from_rows(rows).expect("square minor").determinant()
}

/// `g(ψ, φ)`: Gram pairing with `g` on achiral parts and `g̊` on chiral
/// parts; achiral against chiral pairs to zero.
pub fn metric_extend(psi: &ExtendedMultivector, phi: &ExtendedMultivector, ctx: &MetricContext) -> Result<Rational> {
    psi.check_dim(phi)?;
    if psi.dim() != ctx.dim() {
        return Err(Error::DimensionMismatch {
            left: psi.dim(),
            right: ctx.dim(),
        });
    }
    let mut total = Rational::zero();
    for (ba, ca) in psi.terms() {
        for (bb, cb) in phi.terms() {
            if ba.grade() != bb.grade() {
                continue;
            }
            if !(ca.a.is_zero() || cb.a.is_zero()) {
                total += &ca.a * &cb.a * gram(&ctx.g, *ba, *bb);
            }
            if !(ca.b.is_zero() || cb.b.is_zero()) {
                total += &ca.b * &cb.b * gram(&ctx.g_ring, *ba, *bb);
            }
        }
    }
    Ok(total)
}

/// `e^i ⌟ B` for a single factor.
fn vector_contract(pairing: &RatMatrix, i: usize, b: Blade, out: &mut Vec<(Blade, Rational)>, scale: &Rational) {
    for (pos, j) in b.indices().into_iter().enumerate() {
        let gij = pairing.get(i - 1, j - 1);
        if gij.is_zero() {
            continue;
        }
        let sign = if pos % 2 == 0 { 1 } else { -1 };
        out.push((b.without(Blade::basis(j)), scale * gij * sign_ratio(sign)));
    }
}

fn normalize(combo: Combo) -> Combo {
    let mut map = std::collections::BTreeMap::<Blade, Rational>::new();
    for (b, r) in combo {
        *map.entry(b).or_insert_with(Rational::zero) += r;
    }
    map.into_iter().filter(|(_, r)| !r.is_zero()).collect()
}

/// `A ⌟ B` on blades: `(a₁∧⋯∧a_k) ⌟ B = a₁ ⌟ (⋯ (a_k ⌟ B))`.
pub(crate) fn contract_blade(pairing: &RatMatrix, a: Blade, b: Blade) -> Combo {
    if a.grade() > b.grade() {
        return Vec::new();
    }
    let mut current: Combo = vec![(b, Rational::one())];
    for i in a.indices().into_iter().rev() {
        let mut next = Vec::new();
        for (blade, r) in &current {
            vector_contract(pairing, i, *blade, &mut next, r);
        }
        current = normalize(next);
        if current.is_empty() {
            break;
        }
    }
    current
}

/// Left contraction with an explicit bilinear pairing on grade one.
pub fn left_contraction_with<T: Ring>(
    pairing: &RatMatrix,
    psi: &Multivector<T>,
    phi: &Multivector<T>,
) -> Result<Multivector<T>> {
    psi.check_dim(phi)?;
    Ok(psi.bilinear(phi, |a, b| contract_blade(pairing, a, b)))
}

/// `ψ ⌟ φ` under `g`.
pub fn left_contraction<T: Ring>(
    psi: &Multivector<T>,
    phi: &Multivector<T>,
    ctx: &MetricContext,
) -> Result<Multivector<T>> {
    check_ctx(psi, ctx)?;
    left_contraction_with(&ctx.g, psi, phi)
}

/// `ψ ⌞ φ = rev(rev(φ) ⌟ rev(ψ))`.
pub fn right_contraction<T: Ring>(
    psi: &Multivector<T>,
    phi: &Multivector<T>,
    ctx: &MetricContext,
) -> Result<Multivector<T>> {
    Ok(left_contraction(&phi.reversion(), &psi.reversion(), ctx)?.reversion())
}

pub(crate) fn check_ctx<T: Ring>(psi: &Multivector<T>, ctx: &MetricContext) -> Result<()> {
    if psi.dim() == ctx.dim() {
        Ok(())
    } else {
        Err(Error::DimensionMismatch {
            left: psi.dim(),
            right: ctx.dim(),
        })
    }
}

/// Vector times multivector: `e^i X = e^i ∧ X + e^i ⌟ X`.
fn vector_clifford(g: &RatMatrix, i: usize, x: &Combo) -> Combo {
    let a = Blade::basis(i);
    let mut out = Vec::new();
    for (b, r) in x {
        let s = wedge_sign(a, *b);
        if s != 0 {
            out.push((a.union(*b), r * sign_ratio(s)));
        }
        vector_contract(g, i, *b, &mut out, r);
    }
    normalize(out)
}

/// Blade Clifford product by peeling the lowest factor:
/// `(a∧A')B = a(A'B) - (a⌟A')B`.
fn clifford_blade(g: &RatMatrix, a: Blade, b: Blade) -> Combo {
    if a == Blade::SCALAR {
        return vec![(b, Rational::one())];
    }
    let first = a.indices()[0];
    let rest = a.without(Blade::basis(first));
    let mut out = vector_clifford(g, first, &clifford_blade(g, rest, b));
    let mut inner = Vec::new();
    vector_contract(g, first, rest, &mut inner, &Rational::one());
    for (c, r) in normalize(inner) {
        for (blade, s) in clifford_blade(g, c, b) {
            out.push((blade, -(&r * s)));
        }
    }
    normalize(out)
}

/// The Clifford product generated by `e^i e^j + e^j e^i = 2g^{ij}`.
pub fn clifford_product<T: Ring>(
    psi: &Multivector<T>,
    phi: &Multivector<T>,
    ctx: &MetricContext,
) -> Result<Multivector<T>> {
    psi.check_dim(phi)?;
    check_ctx(psi, ctx)?;
    let n = ctx.dim();
    Ok(match ctx.clifford_table() {
        Some(table) => psi.bilinear(phi, |a, b| table[((a.0 as usize) << n) | b.0 as usize].clone()),
        None => psi.bilinear(phi, |a, b| clifford_blade(&ctx.g, a, b)),
    })
}

/// `det τ`, the determinant of the lowered metric.
pub fn det_correlation(ctx: &MetricContext) -> Rational {
    ctx.det_correlation()
}
