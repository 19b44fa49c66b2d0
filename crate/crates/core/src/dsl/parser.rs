use std::sync::Arc;

use num_traits::ToPrimitive;

use super::lexer::{tokenize, Tok, Token};
use crate::error::{Error, Result};
use crate::ncalg::{bracket, Alphabet, BracketKind, Gen, NCExpr};
use crate::scalars::{GaussianRational, Scalar, Symbol};

/// Name resolution for the expression language.
pub trait Resolver {
    fn alphabet(&self) -> &Arc<Alphabet>;
    /// Declared inverse of a generator, used for `K^-1`.
    fn inverse_of(&self, _g: Gen) -> Option<Gen> {
        None
    }
    /// Named elements defined on top of the generators.
    fn named(&self, _name: &str) -> Option<Result<NCExpr>> {
        None
    }
}

/// Resolver for a bare alphabet with optional inverse pairs.
pub struct AlphabetResolver {
    pub alphabet: Arc<Alphabet>,
    pub inverses: Vec<(Gen, Gen)>,
}

impl Resolver for AlphabetResolver {
    fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }
    fn inverse_of(&self, g: Gen) -> Option<Gen> {
        self.inverses.iter().find(|(a, _)| *a == g).map(|(_, b)| *b)
    }
}

/// Parses `text` into an element of the resolver's free algebra.
pub fn parse_with(text: &str, r: &dyn Resolver) -> Result<NCExpr> {
    let alpha = r.alphabet().clone();
    let toks = tokenize(text, &|name| alpha.index_of(name).is_some())?;
    let mut p = Parser { toks, pos: 0, r };
    let e = p.expr()?;
    p.expect(&Tok::Eof, "end of input")?;
    Ok(e)
}

/// Parses a scalar-only expression.
pub fn parse_scalar(text: &str) -> Result<Scalar> {
    let r = AlphabetResolver { alphabet: Alphabet::new("scalars", &[]), inverses: vec![] };
    let e = parse_with(text, &r)?;
    Ok(e.as_scalar().expect("empty alphabet yields scalars"))
}

struct Parser<'a> {
    toks: Vec<Token>,
    pos: usize,
    r: &'a dyn Resolver,
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        let t = &self.toks[self.pos];
        Err(Error::Syntax { line: t.line, col: t.col, msg: msg.into() })
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].tok.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, t: &Tok, what: &str) -> Result<()> {
        if self.peek() == t {
            self.bump();
            Ok(())
        } else {
            self.err(format!("expected {what}, found {:?}", self.peek()))
        }
    }

    fn alpha(&self) -> &Arc<Alphabet> {
        self.r.alphabet()
    }

    fn expr(&mut self) -> Result<NCExpr> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = acc.checked_add(&self.term()?)?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = acc.checked_sub(&self.term()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<NCExpr> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    acc = acc.checked_mul(&self.unary()?)?;
                }
                Tok::Slash => {
                    self.bump();
                    let rhs = self.unary()?;
                    let Some(d) = rhs.as_scalar() else {
                        return self.err("division by a noncommutative expression");
                    };
                    acc = acc.scale(&d.inv()?);
                }
                Tok::Ident(_) | Tok::Num(_) | Tok::LParen | Tok::LBracket | Tok::LBrace => {
                    return self.err("juxtaposition is not multiplication; use `*`");
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<NCExpr> {
        match self.peek() {
            Tok::Minus => {
                self.bump();
                Ok(-&self.unary()?)
            }
            Tok::Plus => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn int_exponent(&mut self) -> Result<i32> {
        let start = self.pos;
        let neg = if *self.peek() == Tok::Minus {
            self.bump();
            true
        } else {
            false
        };
        match self.bump() {
            Tok::Num(n) => {
                let v = n.to_i32().filter(|v| *v <= 10_000);
                match v {
                    Some(v) => Ok(if neg { -v } else { v }),
                    None => self.err("exponent too large"),
                }
            }
            _ => {
                self.pos = start;
                self.err("expected integer exponent")
            }
        }
    }

    fn power(&mut self) -> Result<NCExpr> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let n = self.int_exponent()?;
        if let Some(c) = base.as_scalar() {
            return Ok(NCExpr::scalar(self.alpha(), c.pow(n)?));
        }
        if n >= 0 {
            return Ok(base.pow(n as u32));
        }
        let single = (base.num_terms() == 1)
            .then(|| base.terms().next().unwrap())
            .filter(|(w, c)| w.len() == 1 && c.is_one());
        match single.and_then(|(w, _)| self.r.inverse_of(w.letters()[0])) {
            Some(inv) => Ok(NCExpr::generator(self.alpha(), inv).pow((-n) as u32)),
            None => self.err("negative power of a non-invertible expression"),
        }
    }

    fn atom(&mut self) -> Result<NCExpr> {
        let alpha = self.alpha().clone();
        let start = self.pos;
        match self.bump() {
            Tok::Num(n) => {
                let c = GaussianRational::from_rational(num_rational::BigRational::from_integer(n));
                Ok(NCExpr::scalar(&alpha, Scalar::from_gaussian(c)))
            }
            Tok::Ident(name) => self.resolve(&name),
            Tok::LParen => {
                let e = self.expr()?;
                self.expect(&Tok::RParen, "`)`")?;
                Ok(e)
            }
            Tok::LBracket => {
                let x = self.expr()?;
                self.expect(&Tok::Comma, "`,`")?;
                let y = self.expr()?;
                self.expect(&Tok::RBracket, "`]`")?;
                bracket(BracketKind::Commutator, &x, &y)
            }
            Tok::LBrace => {
                let x = self.expr()?;
                self.expect(&Tok::Comma, "`,`")?;
                let y = self.expr()?;
                self.expect(&Tok::RBrace, "`}`")?;
                let kind = if *self.peek() == Tok::SubQ {
                    self.bump();
                    BracketKind::QAnticommutator
                } else {
                    BracketKind::Anticommutator
                };
                bracket(kind, &x, &y)
            }
            t => {
                self.pos = start;
                self.err(format!("unexpected token {t:?}"))
            }
        }
    }

    fn resolve(&mut self, name: &str) -> Result<NCExpr> {
        let alpha = self.alpha().clone();
        if let Some(g) = alpha.index_of(name) {
            return Ok(NCExpr::generator(&alpha, g));
        }
        if name == "q" {
            return Ok(NCExpr::scalar(&alpha, Scalar::s_pow(2)));
        }
        if name == "i" {
            return Ok(NCExpr::scalar(&alpha, Scalar::i()));
        }
        if let Ok(sym) = name.parse::<Symbol>() {
            return Ok(NCExpr::scalar(&alpha, Scalar::symbol(sym)));
        }
        if let Some(e) = self.r.named(name) {
            return e;
        }
        Err(Error::UnknownGenerator(name.to_string()))
    }
}

/// Extracts `(a, b)` when `e` is exactly the word `a b` with coefficient 1.
pub(crate) fn as_two_letter_word(e: &NCExpr) -> Option<(Gen, Gen)> {
    if e.num_terms() != 1 {
        return None;
    }
    let (w, c) = e.terms().next().unwrap();
    (c.is_one() && w.len() == 2).then(|| (w.letters()[0], w.letters()[1]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::q_integer;

    fn osp() -> AlphabetResolver {
        let a = Alphabet::new("t", &["A+", "A-", "K", "Kinv", "P"]);
        AlphabetResolver { inverses: vec![(2, 3), (3, 2)], alphabet: a }
    }

    #[test]
    fn unit_and_scalars() {
        let r = osp();
        assert_eq!(parse_with("1", &r).unwrap(), NCExpr::one(&r.alphabet));
        assert_eq!(parse_scalar("s^2 + s^-2").unwrap(), q_integer(2));
        assert_eq!(parse_scalar("q").unwrap(), Scalar::s_pow(2));
        assert_eq!(parse_scalar("i*i").unwrap(), Scalar::from_int(-1));
    }

    #[test]
    fn inverse_sugar() {
        let r = osp();
        assert_eq!(parse_with("K^-1", &r).unwrap(), NCExpr::gen(&r.alphabet, "Kinv"));
        assert!(parse_with("A+^-1", &r).is_err());
    }

    #[test]
    fn anticommutator_relation() {
        let r = osp();
        let e = parse_with("{A+, A-} - (K - K^-1)/(s - s^-1)", &r).unwrap();
        let a = &r.alphabet;
        let ap = NCExpr::gen(a, "A+");
        let am = NCExpr::gen(a, "A-");
        let k = &NCExpr::gen(a, "K") - &NCExpr::gen(a, "Kinv");
        let d = (&Scalar::s_pow(1) - &Scalar::s_pow(-1)).inv().unwrap();
        let expect = &(&(&ap * &am) + &(&am * &ap)) - &k.scale(&d);
        assert_eq!(e, expect);
    }

    #[test]
    fn q_brace() {
        let r = osp();
        let e = parse_with("{A+, K}_q", &r).unwrap();
        let a = &r.alphabet;
        let x = NCExpr::gen(a, "A+");
        let y = NCExpr::gen(a, "K");
        assert_eq!(e, bracket(BracketKind::QAnticommutator, &x, &y).unwrap());
    }

    #[test]
    fn errors() {
        let r = osp();
        assert!(matches!(parse_with("A+ A-", &r), Err(Error::Syntax { .. })));
        assert!(matches!(parse_with("1/A+", &r), Err(Error::Syntax { .. })));
        assert_eq!(parse_with("Foo", &r), Err(Error::UnknownGenerator("Foo".into())));
        assert!(matches!(parse_with("(A+", &r), Err(Error::Syntax { line: 1, col: 4, .. })));
        assert_eq!(parse_with("1/(s - s)", &r), Err(Error::DivisionByZero));
    }
}
