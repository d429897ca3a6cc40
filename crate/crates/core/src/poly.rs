//! Exact multivariate polynomials over the rationals in `x1, x2, …`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::ring::{Rational, Ring};

/// Exponent vectors carry no trailing zeros, so `x1` is `[1]` whatever the
/// ambient number of variables.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Polynomial {
    terms: BTreeMap<Vec<u32>, Rational>,
}

fn trim(mut e: Vec<u32>) -> Vec<u32> {
    while e.last() == Some(&0) {
        e.pop();
    }
    e
}

impl Polynomial {
    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, Vec::new())
    }

    pub fn monomial(c: Rational, exponents: Vec<u32>) -> Self {
        let mut p = Polynomial::default();
        p.add_term(trim(exponents), c);
        p
    }

    /// The coordinate `x_i` (1-based).
    pub fn var(i: usize) -> Self {
        assert!(i >= 1, "variables are 1-based");
        let mut e = vec![0; i];
        e[i - 1] = 1;
        Self::monomial(Rational::one(), e)
    }

    fn add_term(&mut self, e: Vec<u32>, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    /// Highest variable index that occurs.
    pub fn max_var(&self) -> usize {
        self.terms.keys().map(Vec::len).max().unwrap_or(0)
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Vec::new()).cloned(),
            _ => None,
        }
    }

    /// `∂/∂x_i` (1-based).
    pub fn derivative(&self, i: usize) -> Self {
        let mut out = Polynomial::default();
        for (e, c) in &self.terms {
            let Some(&k) = e.get(i - 1) else { continue };
            if k == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[i - 1] -= 1;
            out.add_term(trim(e2), c * Rational::from_integer(k.into()));
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Polynomial::one(), |acc, _| acc * self.clone())
    }
}

impl Add for Polynomial {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        for (e, c) in rhs.terms {
            self.add_term(e, c);
        }
        self
    }
}

impl Sub for Polynomial {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for Polynomial {
    type Output = Self;
    fn neg(self) -> Self {
        Polynomial {
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl Mul for Polynomial {
    type Output = Self;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: Self) -> Self {
        let mut out = Polynomial::default();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let len = ea.len().max(eb.len());
                let e = (0..len)
                    .map(|i| ea.get(i).unwrap_or(&0) + eb.get(i).unwrap_or(&0))
                    .collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

impl Zero for Polynomial {
    fn zero() -> Self {
        Polynomial::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for Polynomial {
    fn one() -> Self {
        Self::constant(Rational::one())
    }
}

impl Ring for Polynomial {
    fn from_rational(r: &Rational) -> Self {
        Self::constant(r.clone())
    }

    fn scale(&self, r: &Rational) -> Self {
        let mut out = Polynomial::default();
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c * r);
        }
        out
    }

    fn is_atomic(&self) -> bool {
        self.terms.len() <= 1
    }
}

fn monomial_text(e: &[u32], c: &Rational) -> String {
    let vars: Vec<String> = e
        .iter()
        .enumerate()
        .filter(|(_, &k)| k > 0)
        .map(|(i, &k)| {
            if k == 1 {
                format!("x{}", i + 1)
            } else {
                format!("x{}^{k}", i + 1)
            }
        })
        .collect();
    if vars.is_empty() {
        return c.to_string();
    }
    let body = vars.join("*");
    if c.is_one() {
        body
    } else if (-c).is_one() {
        format!("-{body}")
    } else {
        format!("{c}*{body}")
    }
}

/// Graded order: higher total degree first, then larger exponents of lower
/// variables first, e.g. `2*x1^2*x3 + x2 - 1`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut terms: Vec<(&Vec<u32>, &Rational)> = self.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| {
            let da: u32 = a.iter().sum();
            let db: u32 = b.iter().sum();
            db.cmp(&da).then_with(|| b.cmp(a))
        });
        for (i, (e, c)) in terms.into_iter().enumerate() {
            if i == 0 {
                f.write_str(&monomial_text(e, c))?;
            } else if c.is_negative() {
                write!(f, " - {}", monomial_text(e, &-c))?;
            } else {
                write!(f, " + {}", monomial_text(e, c))?;
            }
        }
        Ok(())
    }
}
