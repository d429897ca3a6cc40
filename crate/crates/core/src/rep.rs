//! The 2×2 matrix representation `ρ` of the extended algebra over `Cℓ(p,q)`,
//! the extended metric on `V ⊕ V̊` and its Witt basis.
//!
//! An extended multivector `a + eps·b` acts as the column `(a, b)`; chirality
//! is the block position, so matrix entries are plain achiral elements.

use std::ops::{Add, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::RatMatrix;
use crate::metric::{clifford_product, MetricContext};
use crate::ring::Rational;
use crate::ExtendedMultivector;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliffordRep2x2 {
    /// Row-major `[m11, m12, m21, m22]`.
    entries: [ExtendedMultivector; 4],
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RepGenerator {
    Eps,
    One,
    OneRing,
    Basis(usize),
    BasisRing(usize),
    /// `diag(ψ, φ)` for achiral `ψ`, `φ`.
    Pair(ExtendedMultivector, ExtendedMultivector),
}

impl CliffordRep2x2 {
    pub fn new(entries: [ExtendedMultivector; 4]) -> Result<Self> {
        for m in &entries {
            entries[0].check_dim(m)?;
            if !m.is_achiral() {
                return Err(Error::Type("matrix entries must be achiral".into()));
            }
        }
        Ok(CliffordRep2x2 { entries })
    }

    pub fn diag(a: ExtendedMultivector, d: ExtendedMultivector) -> Result<Self> {
        let z = ExtendedMultivector::zero(a.dim());
        Self::new([a, z.clone(), z, d])
    }

    pub fn zero(dim: usize) -> Self {
        let z = ExtendedMultivector::zero(dim);
        CliffordRep2x2 {
            entries: [z.clone(), z.clone(), z.clone(), z],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let z = ExtendedMultivector::zero(dim);
        let one = ExtendedMultivector::one(dim);
        CliffordRep2x2 {
            entries: [one.clone(), z.clone(), z, one],
        }
    }

    pub fn dim(&self) -> usize {
        self.entries[0].dim()
    }

    pub fn entry(&self, row: usize, col: usize) -> &ExtendedMultivector {
        &self.entries[2 * row + col]
    }

    pub fn entries(&self) -> &[ExtendedMultivector; 4] {
        &self.entries
    }

    pub fn mul(&self, other: &Self, ctx: &MetricContext) -> Result<Self> {
        let mut out = Vec::with_capacity(4);
        for r in 0..2 {
            for c in 0..2 {
                let x = clifford_product(self.entry(r, 0), other.entry(0, c), ctx)?;
                let y = clifford_product(self.entry(r, 1), other.entry(1, c), ctx)?;
                out.push(x + y);
            }
        }
        let entries: [ExtendedMultivector; 4] = out.try_into().expect("four entries");
        Ok(CliffordRep2x2 { entries })
    }

    pub fn scale(&self, r: &Rational) -> Self {
        CliffordRep2x2 {
            entries: self.entries.clone().map(|m| m.scale(r)),
        }
    }

    /// Action on the column of an extended multivector.
    pub fn apply(&self, psi: &ExtendedMultivector, ctx: &MetricContext) -> Result<ExtendedMultivector> {
        let [a, b] = column(psi);
        let top = clifford_product(self.entry(0, 0), &a, ctx)? + clifford_product(self.entry(0, 1), &b, ctx)?;
        let bottom = clifford_product(self.entry(1, 0), &a, ctx)? + clifford_product(self.entry(1, 1), &b, ctx)?;
        Ok(from_column(&top, &bottom))
    }
}

impl Add for &CliffordRep2x2 {
    type Output = CliffordRep2x2;
    fn add(self, rhs: Self) -> CliffordRep2x2 {
        let mut entries = self.entries.clone();
        for (e, r) in entries.iter_mut().zip(&rhs.entries) {
            *e = &*e + r;
        }
        CliffordRep2x2 { entries }
    }
}

impl Sub for &CliffordRep2x2 {
    type Output = CliffordRep2x2;
    fn sub(self, rhs: Self) -> CliffordRep2x2 {
        self + &rhs.scale(&-Rational::one())
    }
}

/// `a + eps·b ↦ (a, b)`.
pub fn column(psi: &ExtendedMultivector) -> [ExtendedMultivector; 2] {
    [psi.achiral_part(), psi.chiral_part().chirality_flip()]
}

pub fn from_column(a: &ExtendedMultivector, b: &ExtendedMultivector) -> ExtendedMultivector {
    a.achiral_part() + b.achiral_part().chirality_flip()
}

pub fn rho(kind: &RepGenerator, dim: usize) -> Result<CliffordRep2x2> {
    let z = ExtendedMultivector::zero(dim);
    let one = ExtendedMultivector::one(dim);
    match kind {
        RepGenerator::Eps => CliffordRep2x2::new([z.clone(), one.clone(), one, z]),
        RepGenerator::One => CliffordRep2x2::diag(one, z),
        RepGenerator::OneRing => CliffordRep2x2::diag(z, one),
        RepGenerator::Basis(i) => CliffordRep2x2::diag(ExtendedMultivector::basis(dim, *i)?, z),
        RepGenerator::BasisRing(i) => CliffordRep2x2::diag(z, ExtendedMultivector::basis(dim, *i)?),
        RepGenerator::Pair(psi, phi) => {
            if psi.dim() != dim {
                return Err(Error::DimensionMismatch {
                    left: dim,
                    right: psi.dim(),
                });
            }
            CliffordRep2x2::diag(psi.clone(), phi.clone())
        }
    }
}

/// `AB + BA`.
pub fn rep_anticommutator(a: &CliffordRep2x2, b: &CliffordRep2x2, ctx: &MetricContext) -> Result<CliffordRep2x2> {
    Ok(&a.mul(b, ctx)? + &b.mul(a, ctx)?)
}

/// Rank of the span of all products of at most `max_len` generators
/// `ρ(ε), ρ(e^i), ρ(e̊^i)`. The full algebra `M(2, Cℓ(p,q))` has rank `2^{n+2}`.
pub fn generated_rank(ctx: &MetricContext, max_len: usize) -> Result<usize> {
    let n = ctx.dim();
    let mut gens = vec![rho(&RepGenerator::Eps, n)?];
    for i in 1..=n {
        gens.push(rho(&RepGenerator::Basis(i), n)?);
        gens.push(rho(&RepGenerator::BasisRing(i), n)?);
    }
    let mut level = vec![CliffordRep2x2::identity(n)];
    let mut all = level.clone();
    for _ in 0..max_len {
        let mut next = Vec::new();
        for m in &level {
            for g in &gens {
                let p = m.mul(g, ctx)?;
                if !all.contains(&p) {
                    all.push(p.clone());
                    next.push(p);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        level = next;
    }
    let blades = crate::Blade::all(n);
    let rows = all
        .iter()
        .map(|m| {
            m.entries
                .iter()
                .flat_map(|e| blades.iter().map(|b| e.coefficient(*b).a))
                .collect()
        })
        .collect();
    Ok(RatMatrix::from_rows(rows)?.rank())
}

/// Block matrices acting on the `2n` coordinates of `V* ⊕ εV*`.
pub fn block(a: &RatMatrix, b: &RatMatrix, c: &RatMatrix, d: &RatMatrix) -> RatMatrix {
    let n = a.rows();
    let mut m = RatMatrix::zeros(2 * n, 2 * n);
    for (blk, (r0, c0)) in [(a, (0, 0)), (b, (0, n)), (c, (n, 0)), (d, (n, n))] {
        for i in 0..n {
            for j in 0..n {
                m.set(r0 + i, c0 + j, blk.get(i, j).clone());
            }
        }
    }
    m
}

/// `ρ(ε)` on metric blocks: the block swap `[[0, I], [I, 0]]`.
pub fn rho_eps_block(n: usize) -> RatMatrix {
    let z = RatMatrix::zeros(n, n);
    let id = RatMatrix::identity(n);
    block(&z, &id, &id, &z)
}

/// `(ρ(g), ρ(ε)ρ(g̊)ρ(ε)⁻¹)` with `ρ(g) = diag(g, 0)`, `ρ(g̊) = diag(0, g̊)`.
pub fn conjugate_metric_rep(ctx: &MetricContext) -> Result<(RatMatrix, RatMatrix)> {
    let n = ctx.dim();
    let z = RatMatrix::zeros(n, n);
    let lhs = block(ctx.g(), &z, &z, &z);
    let rho_ring = block(&z, &z, &z, ctx.g_ring());
    let e = rho_eps_block(n);
    let rhs = e.mul(&rho_ring).mul(&e.inverse()?);
    Ok((lhs, rhs))
}

/// `ρ(ğ) = diag(g, g̊)`.
pub fn extended_metric_rep(ctx: &MetricContext) -> RatMatrix {
    let n = ctx.dim();
    let z = RatMatrix::zeros(n, n);
    block(ctx.g(), &z, &z, ctx.g_ring())
}

/// `u = 𝐮 + 𝐮̊ ∈ V ⊕ V̊`, stored as two coordinate vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtendedVector {
    pub v: Vec<Rational>,
    pub v_ring: Vec<Rational>,
}

impl ExtendedVector {
    pub fn new(v: Vec<Rational>, v_ring: Vec<Rational>) -> Result<Self> {
        if v.len() != v_ring.len() {
            return Err(Error::DimensionMismatch {
                left: v.len(),
                right: v_ring.len(),
            });
        }
        Ok(ExtendedVector { v, v_ring })
    }

    pub fn zero(n: usize) -> Self {
        ExtendedVector {
            v: vec![Rational::zero(); n],
            v_ring: vec![Rational::zero(); n],
        }
    }

    /// `i_V`.
    pub fn from_v(v: Vec<Rational>) -> Self {
        let n = v.len();
        ExtendedVector {
            v,
            v_ring: vec![Rational::zero(); n],
        }
    }

    /// `i_V̊`.
    pub fn from_v_ring(v_ring: Vec<Rational>) -> Self {
        let n = v_ring.len();
        ExtendedVector {
            v: vec![Rational::zero(); n],
            v_ring,
        }
    }

    /// `e_i` (1-based).
    pub fn e(n: usize, i: usize) -> Result<Self> {
        Ok(Self::from_v(unit(n, i)?))
    }

    /// `e̊_i` (1-based).
    pub fn e_ring(n: usize, i: usize) -> Result<Self> {
        Ok(Self::from_v_ring(unit(n, i)?))
    }

    pub fn dim(&self) -> usize {
        self.v.len()
    }

    pub fn is_zero(&self) -> bool {
        self.v.iter().chain(&self.v_ring).all(Zero::is_zero)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        ExtendedVector {
            v: self.v.iter().map(|x| x * r).collect(),
            v_ring: self.v_ring.iter().map(|x| x * r).collect(),
        }
    }
}

fn unit(n: usize, i: usize) -> Result<Vec<Rational>> {
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange { index: i, dim: n });
    }
    let mut v = vec![Rational::zero(); n];
    v[i - 1] = Rational::one();
    Ok(v)
}

impl Add for &ExtendedVector {
    type Output = ExtendedVector;
    fn add(self, rhs: Self) -> ExtendedVector {
        assert_eq!(self.dim(), rhs.dim());
        ExtendedVector {
            v: self.v.iter().zip(&rhs.v).map(|(a, b)| a + b).collect(),
            v_ring: self.v_ring.iter().zip(&rhs.v_ring).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &ExtendedVector {
    type Output = ExtendedVector;
    fn sub(self, rhs: Self) -> ExtendedVector {
        self + &rhs.scale(&-Rational::one())
    }
}

/// `g̲(u, v) = g(𝐮̊, 𝐯) + g(𝐯̊, 𝐮)` with `g̲(e_i, e̊_j) = δ_ij`.
pub fn extended_metric(u: &ExtendedVector, v: &ExtendedVector) -> Result<Rational> {
    if u.dim() != v.dim() {
        return Err(Error::DimensionMismatch {
            left: u.dim(),
            right: v.dim(),
        });
    }
    let dot = |x: &[Rational], y: &[Rational]| -> Rational {
        x.iter().zip(y).fold(Rational::zero(), |acc, (a, b)| acc + a * b)
    };
    Ok(dot(&u.v_ring, &v.v) + dot(&v.v_ring, &u.v))
}

/// `(1/√2)^k · u`, with the irrational factor kept as an exponent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WittVector {
    pub vector: ExtendedVector,
    pub inv_sqrt2_power: u32,
}

/// `ξ_i = (e̊_i + e_i)/√2` and `ξ_{i+n} = (e̊_i - e_i)/√2`.
pub fn witt_basis(i: usize, n: usize) -> Result<(WittVector, WittVector)> {
    let e = ExtendedVector::e(n, i)?;
    let er = ExtendedVector::e_ring(n, i)?;
    Ok((
        WittVector {
            vector: &er + &e,
            inv_sqrt2_power: 1,
        },
        WittVector {
            vector: &er - &e,
            inv_sqrt2_power: 1,
        },
    ))
}

/// `g̲` on Witt vectors. Fails when the total power of `1/√2` is odd.
pub fn witt_metric(x: &WittVector, y: &WittVector) -> Result<Rational> {
    let power = x.inv_sqrt2_power + y.inv_sqrt2_power;
    let raw = extended_metric(&x.vector, &y.vector)?;
    if power % 2 == 1 {
        if raw.is_zero() {
            return Ok(raw);
        }
        return Err(Error::Irrational(format!("{raw}·(1/√2)^{power}")));
    }
    let half = Rational::new(1.into(), 2.into());
    Ok((0..power / 2).fold(raw, |acc, _| acc * &half))
}

/// The `2n×2n` Gram matrix of `ξ₁, …, ξ₂ₙ`.
pub fn witt_gram_matrix(n: usize) -> Result<RatMatrix> {
    let mut basis = vec![None; 2 * n];
    for i in 1..=n {
        let (a, b) = witt_basis(i, n)?;
        basis[i - 1] = Some(a);
        basis[n + i - 1] = Some(b);
    }
    let basis: Vec<WittVector> = basis.into_iter().map(|x| x.expect("filled")).collect();
    let mut m = RatMatrix::zeros(2 * n, 2 * n);
    for (r, x) in basis.iter().enumerate() {
        for (c, y) in basis.iter().enumerate() {
            m.set(r, c, witt_metric(x, y)?);
        }
    }
    Ok(m)
}
