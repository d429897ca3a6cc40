//! Hyperbolic numbers `a + b·eps` with `eps² = 1`.
//!
//! The `b` part is the chiral part: it changes sign under an orientation
//! change of the underlying space, the `a` part does not.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::ring::{Rational, Ring};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Hyperbolic<T> {
    pub a: T,
    pub b: T,
}

pub type HyperbolicScalar = Hyperbolic<Rational>;

impl<T: Ring> Hyperbolic<T> {
    pub fn new(a: T, b: T) -> Self {
        Hyperbolic { a, b }
    }

    pub fn real(a: T) -> Self {
        Hyperbolic { a, b: T::zero() }
    }

    pub fn eps() -> Self {
        Hyperbolic {
            a: T::zero(),
            b: T::one(),
        }
    }

    pub fn from_rational(r: &Rational) -> Self {
        Self::real(T::from_rational(r))
    }

    /// `(a, b) -> (a, -b)`; an involution.
    pub fn flip_orientation(&self) -> Self {
        Hyperbolic {
            a: self.a.clone(),
            b: -self.b.clone(),
        }
    }

    /// Multiplication by `eps`: swaps the achiral and chiral parts.
    pub fn mul_eps(&self) -> Self {
        Hyperbolic {
            a: self.b.clone(),
            b: self.a.clone(),
        }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Hyperbolic {
            a: self.a.scale(r),
            b: self.b.scale(r),
        }
    }

    pub fn is_achiral(&self) -> bool {
        self.b.is_zero()
    }

    pub fn is_chiral(&self) -> bool {
        self.a.is_zero()
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> Hyperbolic<U> {
        Hyperbolic {
            a: f(&self.a),
            b: f(&self.b),
        }
    }
}

pub fn hyperbolic_mul<T: Ring>(x: &Hyperbolic<T>, y: &Hyperbolic<T>) -> Hyperbolic<T> {
    Hyperbolic {
        a: x.a.clone() * y.a.clone() + x.b.clone() * y.b.clone(),
        b: x.a.clone() * y.b.clone() + x.b.clone() * y.a.clone(),
    }
}

impl<T: Ring> Add for Hyperbolic<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Hyperbolic {
            a: self.a + rhs.a,
            b: self.b + rhs.b,
        }
    }
}

impl<T: Ring> Sub for Hyperbolic<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Hyperbolic {
            a: self.a - rhs.a,
            b: self.b - rhs.b,
        }
    }
}

impl<T: Ring> Neg for Hyperbolic<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Hyperbolic { a: -self.a, b: -self.b }
    }
}

impl<T: Ring> Mul for Hyperbolic<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        hyperbolic_mul(&self, &rhs)
    }
}

impl<T: Ring> Zero for Hyperbolic<T> {
    fn zero() -> Self {
        Hyperbolic {
            a: T::zero(),
            b: T::zero(),
        }
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl<T: Ring> One for Hyperbolic<T> {
    fn one() -> Self {
        Self::real(T::one())
    }
}

impl<T: Ring> fmt::Display for Hyperbolic<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_coefficient(self))
    }
}

fn render_factor<T: Ring>(x: &T) -> String {
    if x.is_atomic() {
        x.to_string()
    } else {
        format!("({x})")
    }
}

/// The chiral part `b·eps` on its own.
fn render_chiral<T: Ring>(b: &T) -> String {
    if b.is_one() {
        "eps".to_string()
    } else if (-b.clone()).is_one() {
        "-eps".to_string()
    } else {
        format!("{}·eps", render_factor(b))
    }
}

/// Text of a coefficient standing alone (the scalar part of a multivector).
pub(crate) fn render_coefficient<T: Ring>(c: &Hyperbolic<T>) -> String {
    if c.b.is_zero() {
        c.a.to_string()
    } else if c.a.is_zero() {
        render_chiral(&c.b)
    } else {
        let chiral = render_chiral(&c.b);
        let a = render_factor(&c.a);
        if let Some(rest) = chiral.strip_prefix('-') {
            format!("{a}-{rest}")
        } else {
            format!("{a}+{chiral}")
        }
    }
}

/// Text of a coefficient multiplying a blade; `None` means the coefficient
/// is exactly one and is omitted.
pub(crate) fn render_blade_factor<T: Ring>(c: &Hyperbolic<T>) -> Option<String> {
    if c.b.is_zero() {
        if c.a.is_one() {
            None
        } else if (-c.a.clone()).is_one() {
            Some("-".to_string())
        } else {
            Some(format!("{}·", render_factor(&c.a)))
        }
    } else if c.a.is_zero() {
        Some(format!("{}·", render_chiral(&c.b)))
    } else {
        Some(format!("({})·", render_coefficient(c)))
    }
}
