use crate::error::{Error, Result};
use crate::hodge::QuasiHodge;
use crate::multivector::{Chirality, Involution};
use crate::ring::Rational;

use super::lexer::{tokenize, Token, TokenKind};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    BasisCovector(usize),
    Cobasis(usize),
    Eps,
    ScalarLit(Rational),
    /// `x_var ^ power`.
    PolyFormLit {
        var: usize,
        power: u32,
    },
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Wedge(Box<Expr>, Box<Expr>),
    Vee(Box<Expr>, Box<Expr>),
    CliffordMul(Box<Expr>, Box<Expr>),
    AstMul(Box<Expr>, Box<Expr>),
    StarCall(Box<Expr>),
    StarEpsCall(Box<Expr>),
    QuasiStarCall {
        direction: QuasiHodge,
        chiral: bool,
        arg: Box<Expr>,
    },
    ContractLeft(Box<Expr>, Box<Expr>),
    Bracket(Vec<Expr>),
    D(Box<Expr>),
    Delta(Box<Expr>),
    Laplacian(Box<Expr>),
    Involution(Involution, Box<Expr>),
    GradeProj {
        arg: Box<Expr>,
        k: usize,
        chirality: Chirality,
    },
}

/// Binary operators from loosest to tightest.
const LEVELS: &[&[&str]] = &[&["+", "-"], &["|"], &["^"], &["*", "·"], &["**"]];

fn binary(op: &str, l: Expr, r: Expr) -> Expr {
    let (l, r) = (Box::new(l), Box::new(r));
    match op {
        "+" => Expr::Add(l, r),
        "-" => Expr::Sub(l, r),
        "|" => Expr::Vee(l, r),
        "^" => Expr::Wedge(l, r),
        "*" | "·" => Expr::CliffordMul(l, r),
        "**" => Expr::AstMul(l, r),
        _ => unreachable!("operator table and binary() disagree"),
    }
}

pub fn parse_str(src: &str) -> Result<Expr> {
    parse(&tokenize(src)?, src.len())
}

/// `end` is the offset reported for errors at end of input.
pub fn parse(tokens: &[Token], end: usize) -> Result<Expr> {
    let mut p = Parser { tokens, pos: 0, end };
    let e = p.expr(0)?;
    match p.peek() {
        None => Ok(e),
        Some(t) if t.kind == TokenKind::RParen => Err(p.error_at(t.offset, "unbalanced ')'")),
        Some(t) => Err(p.error_at(t.offset, &format!("unexpected token {:?}", t.text))),
    }
}

struct Parser<'a> {
    tokens: &'a [Token],
    pos: usize,
    end: usize,
}

fn indexed(name: &str, prefix: &str) -> Option<usize> {
    let digits = name.strip_prefix(prefix)?;
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    digits.parse().ok()
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&'a Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Result<&'a Token> {
        let t = self
            .tokens
            .get(self.pos)
            .ok_or_else(|| self.error_at(self.end, "unexpected end of input"))?;
        self.pos += 1;
        Ok(t)
    }

    fn error_at(&self, offset: usize, message: &str) -> Error {
        Error::Parse {
            offset,
            message: message.to_string(),
        }
    }

    fn peek_op(&self, ops: &[&str]) -> Option<&'a Token> {
        self.peek()
            .filter(|t| t.kind == TokenKind::Operator && ops.contains(&t.text.as_str()))
    }

    fn expect(&mut self, kind: TokenKind, what: &str) -> Result<&'a Token> {
        let t = self.next()?;
        if t.kind != kind {
            return Err(self.error_at(t.offset, &format!("expected {what}, found {:?}", t.text)));
        }
        Ok(t)
    }

    fn expr(&mut self, level: usize) -> Result<Expr> {
        if level == LEVELS.len() {
            return self.unary();
        }
        let mut lhs = self.expr(level + 1)?;
        while let Some(op) = self.peek_op(LEVELS[level]) {
            self.pos += 1;
            let rhs = self.expr(level + 1)?;
            lhs = binary(&op.text, lhs, rhs);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.peek_op(&["-"]).is_some() {
            self.pos += 1;
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<Expr> {
        let t = self.next()?;
        match t.kind {
            TokenKind::Integer | TokenKind::Rational => {
                let r: Rational = t
                    .text
                    .parse()
                    .map_err(|e| self.error_at(t.offset, &format!("invalid number: {e}")))?;
                Ok(Expr::ScalarLit(r))
            }
            TokenKind::LParen => {
                let e = self.expr(0)?;
                match self.peek() {
                    Some(r) if r.kind == TokenKind::RParen => {
                        self.pos += 1;
                        Ok(e)
                    }
                    Some(r) => Err(self.error_at(r.offset, &format!("expected ')', found {:?}", r.text))),
                    None => Err(self.error_at(t.offset, "unbalanced '('")),
                }
            }
            TokenKind::Ident => self.ident(t),
            TokenKind::RParen => Err(self.error_at(t.offset, "unbalanced ')'")),
            _ => Err(self.error_at(t.offset, &format!("unexpected token {:?}", t.text))),
        }
    }

    fn ident(&mut self, t: &'a Token) -> Result<Expr> {
        let name = t.text.as_str();
        if name == "eps" {
            return Ok(Expr::Eps);
        }
        if let Some(i) = indexed(name, "e") {
            return Ok(Expr::BasisCovector(i));
        }
        if let Some(i) = indexed(name, "f") {
            return Ok(Expr::Cobasis(i));
        }
        if let Some(var) = indexed(name, "x") {
            let mut power = 1;
            if self.peek_op(&["^"]).is_some()
                && self.tokens.get(self.pos + 1).map(|n| n.kind) == Some(TokenKind::Integer)
            {
                let n = &self.tokens[self.pos + 1];
                power = n
                    .text
                    .parse()
                    .map_err(|_| self.error_at(n.offset, "exponent too large"))?;
                self.pos += 2;
            }
            return Ok(Expr::PolyFormLit { var, power });
        }
        self.call(t)
    }

    fn call(&mut self, t: &'a Token) -> Result<Expr> {
        let name = t.text.as_str();
        let known = [
            "star",
            "star_eps",
            "qstar_lo",
            "qstar_up",
            "qstar_lo_eps",
            "qstar_up_eps",
            "bracket",
            "rev",
            "gi",
            "conj",
            "grade",
            "d",
            "delta",
            "lap",
            "lc",
        ];
        if !known.contains(&name) {
            return Err(self.error_at(t.offset, &format!("unknown identifier {name:?}")));
        }
        self.expect(TokenKind::LParen, "'(' after function name")?;
        let mut args = vec![self.expr(0)?];
        let mut extra = Vec::new();
        while self.peek().map(|n| n.kind) == Some(TokenKind::Comma) {
            self.pos += 1;
            if name == "grade" {
                extra.push(self.next()?);
            } else {
                args.push(self.expr(0)?);
            }
        }
        let close = self.next().map_err(|_| self.error_at(t.offset, "unbalanced '('"))?;
        if close.kind != TokenKind::RParen {
            return Err(self.error_at(close.offset, &format!("expected ',' or ')', found {:?}", close.text)));
        }
        let arity = |n: usize, args: &[Expr]| -> Result<()> {
            if args.len() != n {
                return Err(self.error_at(t.offset, &format!("{name} takes {n} argument(s), got {}", args.len())));
            }
            Ok(())
        };
        let one = |args: Vec<Expr>| -> Result<Box<Expr>> {
            arity(1, &args)?;
            Ok(Box::new(args.into_iter().next().expect("arity checked")))
        };
        let quasi = |direction, chiral, args| -> Result<Expr> {
            Ok(Expr::QuasiStarCall {
                direction,
                chiral,
                arg: one(args)?,
            })
        };
        Ok(match name {
            "star" => Expr::StarCall(one(args)?),
            "star_eps" => Expr::StarEpsCall(one(args)?),
            "qstar_lo" => quasi(QuasiHodge::Lower, false, args)?,
            "qstar_up" => quasi(QuasiHodge::Upper, false, args)?,
            "qstar_lo_eps" => quasi(QuasiHodge::Lower, true, args)?,
            "qstar_up_eps" => quasi(QuasiHodge::Upper, true, args)?,
            "rev" => Expr::Involution(Involution::Reversion, one(args)?),
            "gi" => Expr::Involution(Involution::GradeInvolution, one(args)?),
            "conj" => Expr::Involution(Involution::Conjugation, one(args)?),
            "d" => Expr::D(one(args)?),
            "delta" => Expr::Delta(one(args)?),
            "lap" => Expr::Laplacian(one(args)?),
            "bracket" => Expr::Bracket(args),
            "lc" => {
                arity(2, &args)?;
                let mut it = args.into_iter();
                let l = it.next().expect("arity checked");
                let r = it.next().expect("arity checked");
                Expr::ContractLeft(Box::new(l), Box::new(r))
            }
            "grade" => self.grade(t, one(args)?, &extra)?,
            _ => unreachable!("checked against the known list"),
        })
    }

    fn grade(&self, t: &Token, arg: Box<Expr>, extra: &[&Token]) -> Result<Expr> {
        let (k_tok, rest) = extra
            .split_first()
            .ok_or_else(|| self.error_at(t.offset, "grade takes (expr, k[, achiral|chiral|both])"))?;
        if k_tok.kind != TokenKind::Integer {
            return Err(self.error_at(k_tok.offset, "grade index must be an integer"));
        }
        let k = k_tok
            .text
            .parse()
            .map_err(|_| self.error_at(k_tok.offset, "grade index too large"))?;
        let chirality = match rest {
            [] => Chirality::Both,
            [c] => match (c.kind, c.text.as_str()) {
                (TokenKind::Ident, "achiral") => Chirality::Achiral,
                (TokenKind::Ident, "chiral") => Chirality::Chiral,
                (TokenKind::Ident, "both") => Chirality::Both,
                _ => return Err(self.error_at(c.offset, "expected achiral, chiral or both")),
            },
            [_, c, ..] => return Err(self.error_at(c.offset, "grade takes at most three arguments")),
        };
        Ok(Expr::GradeProj { arg, k, chirality })
    }
}
