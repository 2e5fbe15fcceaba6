use num_bigint::BigInt;

use super::ParseError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub(super) enum Token {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

impl Token {
    pub(super) fn describe(&self) -> String {
        match self {
            Token::Int(n) => format!("number `{n}`"),
            Token::Ident(s) => format!("identifier `{s}`"),
            Token::Plus => "`+`".into(),
            Token::Minus => "`-`".into(),
            Token::Star => "`*`".into(),
            Token::Slash => "`/`".into(),
            Token::Caret => "`^`".into(),
            Token::LParen => "`(`".into(),
            Token::RParen => "`)`".into(),
        }
    }
}

pub(super) struct Lexer<'a> {
    src: &'a str,
}

impl<'a> Lexer<'a> {
    pub(super) fn new(src: &'a str) -> Self {
        Lexer { src }
    }

    /// Tokens paired with their byte offsets.
    pub(super) fn tokenize(&self) -> Result<Vec<(usize, Token)>, ParseError> {
        let bytes = self.src.as_bytes();
        let mut out = Vec::new();
        let mut i = 0;
        while i < bytes.len() {
            let c = bytes[i];
            let start = i;
            let single = match c {
                b'+' => Some(Token::Plus),
                b'-' => Some(Token::Minus),
                b'*' => Some(Token::Star),
                b'/' => Some(Token::Slash),
                b'^' => Some(Token::Caret),
                b'(' => Some(Token::LParen),
                b')' => Some(Token::RParen),
                _ => None,
            };
            if let Some(tok) = single {
                out.push((start, tok));
                i += 1;
            } else if c.is_ascii_whitespace() {
                i += 1;
            } else if c.is_ascii_digit() {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = self.src[start..i].parse().expect("ascii digits");
                out.push((start, Token::Int(n)));
            } else if c.is_ascii_alphabetic() {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Token::Ident(self.src[start..i].to_string())));
            } else {
                let ch = self.src[start..].chars().next().unwrap_or('?');
                return Err(ParseError::Syntax { offset: start, message: format!("unexpected character `{ch}`") });
            }
        }
        Ok(out)
    }
}
