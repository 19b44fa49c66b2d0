use num_bigint::BigInt;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    LBracket,
    RBracket,
    LBrace,
    RBrace,
    Comma,
    SubQ,
    Eof,
}

#[derive(Clone, Debug)]
pub struct Token {
    pub tok: Tok,
    pub line: usize,
    pub col: usize,
}

/// Splits `text` into tokens.
///
/// Generator names may end in `+` or `-` (`A+`, `J-`). An identifier absorbs a
/// trailing sign only when `is_generator` accepts the combined name.
pub fn tokenize(text: &str, is_generator: &dyn Fn(&str) -> bool) -> Result<Vec<Token>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut line, mut col) = (1usize, 1usize);
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let (l0, c0) = (line, col);
        let push = |out: &mut Vec<Token>, tok| out.push(Token { tok, line: l0, col: c0 });
        if c == '\n' {
            line += 1;
            col = 1;
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            col += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            col += i - start;
            push(&mut out, Tok::Num(s.parse().expect("digits")));
            continue;
        }
        if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            let mut s: String = chars[start..i].iter().collect();
            if i < chars.len() && (chars[i] == '+' || chars[i] == '-') {
                let glued = format!("{}{}", s, chars[i]);
                if is_generator(&glued) {
                    s = glued;
                    i += 1;
                }
            }
            col += s.chars().count();
            push(&mut out, Tok::Ident(s));
            continue;
        }
        if c == '_' && i + 1 < chars.len() && chars[i + 1] == 'q' {
            push(&mut out, Tok::SubQ);
            i += 2;
            col += 2;
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '[' => Tok::LBracket,
            ']' => Tok::RBracket,
            '{' => Tok::LBrace,
            '}' => Tok::RBrace,
            ',' => Tok::Comma,
            _ => {
                return Err(Error::Syntax { line, col, msg: format!("unexpected character `{c}`") });
            }
        };
        push(&mut out, tok);
        i += 1;
        col += 1;
    }
    out.push(Token { tok: Tok::Eof, line, col });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn glues_generator_signs() {
        let gens = |s: &str| s == "A+" || s == "A-";
        let toks = tokenize("A+ - A-*K^-1", &gens).unwrap();
        let kinds: Vec<Tok> = toks.into_iter().map(|t| t.tok).collect();
        assert_eq!(
            kinds,
            vec![
                Tok::Ident("A+".into()),
                Tok::Minus,
                Tok::Ident("A-".into()),
                Tok::Star,
                Tok::Ident("K".into()),
                Tok::Caret,
                Tok::Minus,
                Tok::Num(1.into()),
                Tok::Eof
            ]
        );
    }

    #[test]
    fn reports_position() {
        let err = tokenize("s +\n  $", &|_| false).unwrap_err();
        assert_eq!(err, Error::Syntax { line: 2, col: 3, msg: "unexpected character `$`".into() });
    }
}
