//! Exact extended (chiral) Grassmann and Clifford algebras.
//!
//! Coefficients live in the hyperbolic numbers `𝔻 = ℚ ⊕ ℚ·eps`, where the
//! `eps` part carries orientation. On top of that sit the regressive product,
//! Hodge operators and the counterspace product, a 2×2 matrix representation
//! over `Cℓ(p,q)`, and a polynomial calculus of differential forms on `ℝⁿ`.

pub mod blade;
pub mod cli;
pub mod error;
pub mod expr;
pub mod forms;
pub mod hodge;
pub mod linalg;
pub mod metric;
pub mod multivector;
pub mod poly;
pub mod regressive;
pub mod rep;
pub mod ring;
pub mod scalar;

pub use blade::{permutation_sign, wedge_sign, Blade};
pub use error::{Error, Result};
pub use forms::PolyForm;
pub use linalg::RatMatrix;
pub use metric::MetricContext;
pub use multivector::{Chirality, ExtendedMultivector, Involution, Multivector};
pub use poly::Polynomial;
pub use ring::{rat, ratio, Rational, Ring};
pub use scalar::{hyperbolic_mul, Hyperbolic, HyperbolicScalar};
