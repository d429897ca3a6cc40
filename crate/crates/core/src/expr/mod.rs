//! A small expression language over the algebra: `e1..en` covectors,
//! `f1..fn` cobasis elements, `eps`, coordinates `x1..xn`, and the products
//! `^` (wedge), `|` (regressive), `*` (Clifford), `**` (counterspace).

mod eval;
mod lexer;
mod parser;
mod render;

pub use eval::{eval_str, evaluate, Env, Orientation, Value};
pub use lexer::{tokenize, Token, TokenKind};
pub use parser::{parse, parse_str, Expr};
pub use render::{render, Format};
