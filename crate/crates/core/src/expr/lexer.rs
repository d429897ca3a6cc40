use crate::error::{Error, Result};

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum TokenKind {
    Ident,
    Integer,
    Rational,
    Operator,
    LParen,
    RParen,
    Comma,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Token {
    pub kind: TokenKind,
    pub text: String,
    /// Byte offset into the source.
    pub offset: usize,
}

/// Maximal-munch tokenizer. `·` is accepted as a spelling of `*`, so
/// rendered output can be read back.
pub fn tokenize(src: &str) -> Result<Vec<Token>> {
    let mut tokens = Vec::new();
    let mut chars = src.char_indices().peekable();
    while let Some(&(start, c)) = chars.peek() {
        let single = |kind: TokenKind, text: &str| Token {
            kind,
            text: text.to_string(),
            offset: start,
        };
        match c {
            c if c.is_whitespace() => {
                chars.next();
            }
            '(' => {
                chars.next();
                tokens.push(single(TokenKind::LParen, "("));
            }
            ')' => {
                chars.next();
                tokens.push(single(TokenKind::RParen, ")"));
            }
            ',' => {
                chars.next();
                tokens.push(single(TokenKind::Comma, ","));
            }
            '+' | '-' | '|' | '^' | '·' => {
                chars.next();
                tokens.push(single(TokenKind::Operator, &c.to_string()));
            }
            '*' => {
                chars.next();
                if matches!(chars.peek(), Some((_, '*'))) {
                    chars.next();
                    tokens.push(single(TokenKind::Operator, "**"));
                } else {
                    tokens.push(single(TokenKind::Operator, "*"));
                }
            }
            c if c.is_ascii_digit() => {
                let mut end = start;
                while let Some(&(i, d)) = chars.peek() {
                    if !d.is_ascii_digit() {
                        break;
                    }
                    end = i + 1;
                    chars.next();
                }
                let mut kind = TokenKind::Integer;
                if let Some(&(slash, '/')) = chars.peek() {
                    chars.next();
                    match chars.peek() {
                        Some(&(_, d)) if d.is_ascii_digit() => {}
                        _ => {
                            return Err(Error::Lex {
                                offset: slash,
                                message: "expected digits after '/'".into(),
                            })
                        }
                    }
                    while let Some(&(i, d)) = chars.peek() {
                        if !d.is_ascii_digit() {
                            break;
                        }
                        end = i + 1;
                        chars.next();
                    }
                    kind = TokenKind::Rational;
                }
                tokens.push(Token {
                    kind,
                    text: src[start..end].to_string(),
                    offset: start,
                });
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut end = start;
                while let Some(&(i, d)) = chars.peek() {
                    if !(d.is_ascii_alphanumeric() || d == '_') {
                        break;
                    }
                    end = i + 1;
                    chars.next();
                }
                tokens.push(Token {
                    kind: TokenKind::Ident,
                    text: src[start..end].to_string(),
                    offset: start,
                });
            }
            other => {
                return Err(Error::Lex {
                    offset: start,
                    message: format!("unexpected character {other:?}"),
                })
            }
        }
    }
    Ok(tokens)
}
