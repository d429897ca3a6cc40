//! Multivectors of the extended exterior algebra: finite sums of canonical
//! blades with hyperbolic coefficients `a + b·eps`.
//!
//! The same engine serves covectors `Λ(V)` and vectors `Λ(V*)`; only the
//! pairing used by contractions tells them apart. With `T = Rational` this is
//! `𝔻 ⊗ Λ(V)`; with `T = Polynomial` it holds differential forms on flat space.
//!
//! Zero terms are never stored, so two multivectors are equal exactly when
//! their term maps are.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Zero};

use crate::blade::{wedge_sign, Blade, MAX_DIM};
use crate::error::{Error, Result};
use crate::ring::{Rational, Ring};
use crate::scalar::{hyperbolic_mul, render_blade_factor, render_coefficient, Hyperbolic};

/// A real linear combination of blades; the output of a blade-level product.
pub(crate) type Combo = Vec<(Blade, Rational)>;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Multivector<T> {
    dim: usize,
    terms: BTreeMap<Blade, Hyperbolic<T>>,
}

pub type ExtendedMultivector = Multivector<Rational>;

#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum Chirality {
    Achiral,
    Chiral,
    Both,
}

#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum Involution {
    Reversion,
    GradeInvolution,
    Conjugation,
}

impl Involution {
    /// Sign applied to a grade-`k` component.
    pub fn sign(self, k: usize) -> i8 {
        let rev = if (k / 2).is_multiple_of(2) { 1 } else { -1 };
        let gi = if k.is_multiple_of(2) { 1 } else { -1 };
        match self {
            Involution::Reversion => rev,
            Involution::GradeInvolution => gi,
            Involution::Conjugation => rev * gi,
        }
    }
}

impl<T: Ring> Multivector<T> {
    pub fn zero(dim: usize) -> Self {
        assert!(dim <= MAX_DIM, "dimension {dim} exceeds {MAX_DIM}");
        Multivector {
            dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(dim: usize, c: Hyperbolic<T>) -> Self {
        Self::term(dim, Blade::SCALAR, c)
    }

    pub fn one(dim: usize) -> Self {
        Self::scalar(dim, Hyperbolic::one())
    }

    /// `eps` as a grade-0 element.
    pub fn eps(dim: usize) -> Self {
        Self::scalar(dim, Hyperbolic::eps())
    }

    pub fn term(dim: usize, blade: Blade, c: Hyperbolic<T>) -> Self {
        let mut m = Self::zero(dim);
        assert!(blade.fits(dim), "blade {blade} outside dimension {dim}");
        m.add_term(blade, c);
        m
    }

    pub fn blade(dim: usize, blade: Blade) -> Self {
        Self::term(dim, blade, Hyperbolic::one())
    }

    /// The covector `e^i` (1-based).
    pub fn basis(dim: usize, i: usize) -> Result<Self> {
        if i == 0 || i > dim {
            return Err(Error::IndexOutOfRange { index: i, dim });
        }
        Ok(Self::blade(dim, Blade::basis(i)))
    }

    /// Canonical blade from unsorted distinct indices, with the reordering
    /// sign folded into the coefficient.
    pub fn from_indices(dim: usize, indices: &[usize]) -> Result<Self> {
        if let Some(&bad) = indices.iter().find(|&&i| i == 0 || i > dim) {
            return Err(Error::IndexOutOfRange { index: bad, dim });
        }
        match Blade::from_indices(indices) {
            Ok((b, s)) => Ok(Self::term(
                dim,
                b,
                Hyperbolic::from_rational(&Rational::from_integer(s.into())),
            )),
            Err(Error::NotAPermutation(_)) => Ok(Self::zero(dim)),
            Err(e) => Err(e),
        }
    }

    /// `e^1 ∧ ⋯ ∧ e^n`.
    pub fn volume(dim: usize) -> Self {
        Self::blade(dim, Blade::full(dim))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Blade, &Hyperbolic<T>)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, blade: Blade) -> Hyperbolic<T> {
        self.terms.get(&blade).cloned().unwrap_or_else(Hyperbolic::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, blade: Blade, c: Hyperbolic<T>) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&blade) {
            Some(old) => {
                let sum = old + c;
                if !sum.is_zero() {
                    self.terms.insert(blade, sum);
                }
            }
            None => {
                self.terms.insert(blade, c);
            }
        }
    }

    /// `Some(k)` when every stored term has grade `k`; zero is homogeneous of
    /// every grade and reports `Some(0)`.
    pub fn homogeneous_grade(&self) -> Option<usize> {
        let mut grades = self.terms.keys().map(|b| b.grade());
        match grades.next() {
            None => Some(0),
            Some(k) => grades.all(|g| g == k).then_some(k),
        }
    }

    pub fn grades(&self) -> Vec<usize> {
        let mut g: Vec<usize> = self.terms.keys().map(|b| b.grade()).collect();
        g.dedup();
        g
    }

    /// The coefficient when this is a pure scalar (or zero).
    pub fn as_scalar(&self) -> Option<Hyperbolic<T>> {
        match self.terms.len() {
            0 => Some(Hyperbolic::zero()),
            1 => self.terms.get(&Blade::SCALAR).cloned(),
            _ => None,
        }
    }

    pub fn is_achiral(&self) -> bool {
        self.terms.values().all(|c| c.is_achiral())
    }

    pub fn is_chiral(&self) -> bool {
        self.terms.values().all(|c| c.is_chiral())
    }

    pub fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim == other.dim {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            })
        }
    }

    pub fn map_coefficients(&self, f: impl Fn(Blade, &Hyperbolic<T>) -> Hyperbolic<T>) -> Self {
        let mut out = Self::zero(self.dim);
        for (b, c) in &self.terms {
            out.add_term(*b, f(*b, c));
        }
        out
    }

    pub fn scale(&self, r: &Rational) -> Self {
        self.map_coefficients(|_, c| c.scale(r))
    }

    pub fn mul_coefficient(&self, k: &Hyperbolic<T>) -> Self {
        self.map_coefficients(|_, c| hyperbolic_mul(k, c))
    }

    /// Multiplication by `eps`, exchanging `Λ(V)` and its chiral copy.
    pub fn chirality_flip(&self) -> Self {
        self.map_coefficients(|_, c| c.mul_eps())
    }

    /// Orientation reversal `eps -> -eps`.
    pub fn flip_orientation(&self) -> Self {
        self.map_coefficients(|_, c| c.flip_orientation())
    }

    pub fn achiral_part(&self) -> Self {
        self.map_coefficients(|_, c| Hyperbolic::real(c.a.clone()))
    }

    /// The chiral part, as it stands (still multiplied by `eps`).
    pub fn chiral_part(&self) -> Self {
        self.map_coefficients(|_, c| Hyperbolic::new(T::zero(), c.b.clone()))
    }

    pub fn grade_project(&self, k: usize, chirality: Chirality) -> Result<Self> {
        if k > self.dim {
            return Err(Error::GradeOutOfRange {
                grade: k,
                dim: self.dim,
            });
        }
        Ok(self.map_coefficients(|b, c| {
            if b.grade() != k {
                return Hyperbolic::zero();
            }
            match chirality {
                Chirality::Both => c.clone(),
                Chirality::Achiral => Hyperbolic::real(c.a.clone()),
                Chirality::Chiral => Hyperbolic::new(T::zero(), c.b.clone()),
            }
        }))
    }

    /// `⟨ψ⟩_k` over both chiralities, with out-of-range `k` giving zero.
    pub fn grade(&self, k: usize) -> Self {
        self.map_coefficients(|b, c| if b.grade() == k { c.clone() } else { Hyperbolic::zero() })
    }

    pub fn involution(&self, kind: Involution) -> Self {
        self.map_coefficients(|b, c| {
            if kind.sign(b.grade()) < 0 {
                -c.clone()
            } else {
                c.clone()
            }
        })
    }

    pub fn reversion(&self) -> Self {
        self.involution(Involution::Reversion)
    }

    pub fn grade_involution(&self) -> Self {
        self.involution(Involution::GradeInvolution)
    }

    pub fn conjugation(&self) -> Self {
        self.involution(Involution::Conjugation)
    }

    /// Bilinear extension of a blade-level product. Coefficients multiply
    /// hyperbolically, so chiral times chiral is achiral.
    pub(crate) fn bilinear(&self, other: &Self, kernel: impl Fn(Blade, Blade) -> Combo) -> Self {
        let mut out = Self::zero(self.dim);
        for (ba, ca) in &self.terms {
            for (bb, cb) in &other.terms {
                let combo = kernel(*ba, *bb);
                if combo.is_empty() {
                    continue;
                }
                let c = hyperbolic_mul(ca, cb);
                for (blade, r) in combo {
                    out.add_term(blade, c.scale(&r));
                }
            }
        }
        out
    }

    /// Linear extension of a blade-level map.
    pub(crate) fn linear(&self, kernel: impl Fn(Blade) -> Combo) -> Self {
        let mut out = Self::zero(self.dim);
        for (b, c) in &self.terms {
            for (blade, r) in kernel(*b) {
                out.add_term(blade, c.scale(&r));
            }
        }
        out
    }

    pub fn wedge(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        Ok(self.bilinear(other, |a, b| match wedge_sign(a, b) {
            0 => Vec::new(),
            s => vec![(a.union(b), Rational::from_integer(s.into()))],
        }))
    }

    /// Multiply every coefficient by an element of the coefficient ring.
    pub fn mul_ring(&self, r: &T) -> Self {
        self.map_coefficients(|_, c| Hyperbolic::new(c.a.clone() * r.clone(), c.b.clone() * r.clone()))
    }

    pub fn into_terms(self) -> BTreeMap<Blade, Hyperbolic<T>> {
        self.terms
    }

    pub fn from_terms(dim: usize, terms: impl IntoIterator<Item = (Blade, Hyperbolic<T>)>) -> Self {
        let mut m = Self::zero(dim);
        for (b, c) in terms {
            assert!(b.fits(dim), "blade {b} outside dimension {dim}");
            m.add_term(b, c);
        }
        m
    }
}

impl<T: Ring> Add for Multivector<T> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        assert_eq!(self.dim, rhs.dim, "adding multivectors of different dimension");
        for (b, c) in rhs.terms {
            self.add_term(b, c);
        }
        self
    }
}

impl<T: Ring> Add for &Multivector<T> {
    type Output = Multivector<T>;
    fn add(self, rhs: Self) -> Multivector<T> {
        self.clone() + rhs.clone()
    }
}

impl<T: Ring> Sub for Multivector<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<T: Ring> Sub for &Multivector<T> {
    type Output = Multivector<T>;
    fn sub(self, rhs: Self) -> Multivector<T> {
        self.clone() - rhs.clone()
    }
}

impl<T: Ring> Neg for Multivector<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Multivector {
            dim: self.dim,
            terms: self.terms.into_iter().map(|(b, c)| (b, -c)).collect(),
        }
    }
}

impl<T: Ring> Neg for &Multivector<T> {
    type Output = Multivector<T>;
    fn neg(self) -> Multivector<T> {
        -self.clone()
    }
}

/// Terms sorted by (grade, blade); scalar coefficients print as `a+b·eps`,
/// blades as `e1^e3`, and a coefficient meets its blade through `·`.
impl<T: Ring> fmt::Display for Multivector<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (i, (blade, c)) in self.terms.iter().enumerate() {
            let text = if *blade == Blade::SCALAR {
                render_coefficient(c)
            } else {
                match render_blade_factor(c) {
                    None => blade.to_string(),
                    Some(factor) => format!("{factor}{blade}"),
                }
            };
            if i == 0 {
                out.push_str(&text);
            } else if let Some(rest) = text.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(rest);
            } else {
                out.push_str(" + ");
                out.push_str(&text);
            }
        }
        f.write_str(&out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{rat, ratio};

    type Mv = ExtendedMultivector;

    fn e(dim: usize, ix: &[usize]) -> Mv {
        Mv::from_indices(dim, ix).unwrap()
    }

    fn h(a: i64, b: i64) -> Hyperbolic<Rational> {
        Hyperbolic::new(rat(a), rat(b))
    }

    #[test]
    fn wedge_examples() {
        let e1 = e(3, &[1]);
        let e2 = e(3, &[2]);
        assert!(e1.wedge(&e1).unwrap().is_zero());
        assert_eq!(e1.wedge(&e2).unwrap(), -e2.wedge(&e1).unwrap());
        let chiral = e1.chirality_flip().wedge(&e2.chirality_flip()).unwrap();
        assert_eq!(chiral, e(3, &[1, 2]));
        assert!(chiral.is_achiral());
    }

    #[test]
    fn wedge_dimension_mismatch() {
        assert_eq!(
            e(2, &[1]).wedge(&e(3, &[1])),
            Err(Error::DimensionMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn grade_projection() {
        let psi = Mv::one(3) + e(3, &[1]) + e(3, &[1, 2]).chirality_flip();
        assert_eq!(psi.grade_project(1, Chirality::Achiral).unwrap(), e(3, &[1]));
        let eta = Mv::volume(3).chirality_flip();
        assert_eq!(eta.grade_project(3, Chirality::Chiral).unwrap(), eta);
        let mut sum = Mv::zero(3);
        for k in 0..=3 {
            sum = sum + psi.grade_project(k, Chirality::Both).unwrap();
        }
        assert_eq!(sum, psi);
        assert!(psi.grade_project(4, Chirality::Both).is_err());
        assert!(Mv::zero(3).grade_project(2, Chirality::Chiral).unwrap().is_zero());
    }

    #[test]
    fn involutions() {
        assert_eq!(e(3, &[1, 2]).reversion(), -e(3, &[1, 2]));
        assert_eq!(e(3, &[1]).grade_involution(), -e(3, &[1]));
        assert_eq!(e(3, &[1, 2, 3]).conjugation(), e(3, &[1, 2, 3]));
        let chiral = e(3, &[1, 2]).chirality_flip();
        assert!(chiral.reversion().is_chiral());
    }

    #[test]
    fn chirality_flip_laws() {
        let e1 = e(3, &[1]);
        assert_eq!(e1.chirality_flip(), Mv::term(3, Blade::basis(1), h(0, 1)));
        let psi = e1.scale(&ratio(2, 3)) + Mv::term(3, Blade(0b110), h(5, -1));
        assert_eq!(psi.chirality_flip().chirality_flip(), psi);
        assert!(Mv::zero(3).chirality_flip().is_zero());
    }

    #[test]
    fn rendering_contract() {
        let v = Mv::term(3, Blade::basis(2), h(0, 1));
        assert_eq!(v.to_string(), "eps·e2");
        assert_eq!(Mv::zero(3).to_string(), "0");
        let mixed = Mv::one(3) - e(3, &[1, 3]).scale(&rat(2))
            + Mv::term(3, Blade::basis(1), h(1, 2))
            + Mv::term(3, Blade::basis(3), h(0, -1));
        assert_eq!(mixed.to_string(), "1 + (1+2·eps)·e1 - eps·e3 - 2·e1^e3");
        assert_eq!(e(3, &[2, 1]).to_string(), "-e1^e2");
        assert_eq!(e(3, &[1]).scale(&ratio(1, 2)).to_string(), "1/2·e1");
    }

    #[test]
    fn repeated_index_is_zero() {
        assert!(e(3, &[1, 1]).is_zero());
        assert!(Mv::from_indices(3, &[4]).is_err());
    }
}
