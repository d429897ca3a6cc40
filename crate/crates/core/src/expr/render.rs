use num_traits::Zero;
use serde::Serialize;

use crate::blade::Blade;
use crate::multivector::Multivector;
use crate::ring::Ring;
use crate::scalar::{render_coefficient, Hyperbolic};

use super::eval::Value;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Serialize)]
struct JsonTerm {
    blade: Vec<usize>,
    a: String,
    b: String,
}

#[derive(Serialize)]
struct JsonValue {
    dim: usize,
    terms: Vec<JsonTerm>,
}

fn json_terms<T: Ring>(m: &Multivector<T>) -> Vec<JsonTerm> {
    m.terms()
        .map(|(blade, c)| JsonTerm {
            blade: blade.indices(),
            a: c.a.to_string(),
            b: c.b.to_string(),
        })
        .collect()
}

fn scalar_terms<T: Ring>(c: &Hyperbolic<T>) -> Vec<JsonTerm> {
    if c.is_zero() {
        return Vec::new();
    }
    vec![JsonTerm {
        blade: Blade::SCALAR.indices(),
        a: c.a.to_string(),
        b: c.b.to_string(),
    }]
}

/// Text follows the multivector `Display`; JSON is
/// `{"dim":3,"terms":[{"blade":[2],"a":"0","b":"1"}]}`. Scalars carry no
/// dimension of their own, so `dim` supplies it.
pub fn render(value: &Value, format: Format, dim: usize) -> String {
    match format {
        Format::Text => match value {
            Value::Scalar(s) => render_coefficient(s),
            Value::Multivector(m) => m.to_string(),
            Value::Form(f) => f.to_string(),
        },
        Format::Json => {
            let json = match value {
                Value::Scalar(s) => JsonValue {
                    dim,
                    terms: scalar_terms(s),
                },
                Value::Multivector(m) => JsonValue {
                    dim: m.dim(),
                    terms: json_terms(m),
                },
                Value::Form(f) => JsonValue {
                    dim: f.dim(),
                    terms: json_terms(f),
                },
            };
            serde_json::to_string(&json).expect("plain strings and integers serialize")
        }
    }
}
