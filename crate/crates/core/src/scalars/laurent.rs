use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use super::gaussian::GaussianRational;

/// Number of formal symbols in the coefficient field.
pub const NSYM: usize = 11;

/// Formal symbols, in the fixed order used for exponent vectors.
///
/// `S` stands for q^{1/2} and `W` for q^nu.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Symbol {
    S,
    W,
    A,
    B,
    C,
    Iota1,
    Iota2,
    Iota3,
    Alpha1,
    Alpha2,
    Alpha3,
}

impl Symbol {
    pub const ALL: [Symbol; NSYM] = [
        Symbol::S,
        Symbol::W,
        Symbol::A,
        Symbol::B,
        Symbol::C,
        Symbol::Iota1,
        Symbol::Iota2,
        Symbol::Iota3,
        Symbol::Alpha1,
        Symbol::Alpha2,
        Symbol::Alpha3,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Symbol::S => "s",
            Symbol::W => "w",
            Symbol::A => "a",
            Symbol::B => "b",
            Symbol::C => "c",
            Symbol::Iota1 => "iota1",
            Symbol::Iota2 => "iota2",
            Symbol::Iota3 => "iota3",
            Symbol::Alpha1 => "alpha1",
            Symbol::Alpha2 => "alpha2",
            Symbol::Alpha3 => "alpha3",
        }
    }

    pub fn latex(self) -> &'static str {
        match self {
            Symbol::S => "q^{1/2}",
            Symbol::W => "q^{\\nu}",
            Symbol::A => "a",
            Symbol::B => "b",
            Symbol::C => "c",
            Symbol::Iota1 => "\\iota_1",
            Symbol::Iota2 => "\\iota_2",
            Symbol::Iota3 => "\\iota_3",
            Symbol::Alpha1 => "\\alpha_1",
            Symbol::Alpha2 => "\\alpha_2",
            Symbol::Alpha3 => "\\alpha_3",
        }
    }
}

impl FromStr for Symbol {
    type Err = ();
    fn from_str(s: &str) -> Result<Self, ()> {
        Symbol::ALL.iter().copied().find(|sym| sym.name() == s).ok_or(())
    }
}

/// Exponent vector, one signed entry per [`Symbol`].
pub type Monomial = [i32; NSYM];

pub const UNIT_MONOMIAL: Monomial = [0; NSYM];

pub(crate) fn mono_add(a: &Monomial, b: &Monomial) -> Monomial {
    let mut r = *a;
    for (x, y) in r.iter_mut().zip(b) {
        *x += *y;
    }
    r
}

pub(crate) fn mono_sub(a: &Monomial, b: &Monomial) -> Monomial {
    let mut r = *a;
    for (x, y) in r.iter_mut().zip(b) {
        *x -= *y;
    }
    r
}

pub(crate) fn mono_min(a: &Monomial, b: &Monomial) -> Monomial {
    let mut r = *a;
    for (x, y) in r.iter_mut().zip(b) {
        *x = (*x).min(*y);
    }
    r
}

/// Laurent polynomial in the formal symbols with Gaussian-rational coefficients.
///
/// Terms are kept in a map ordered lexicographically on exponent vectors, `s`
/// most significant; the last entry is the leading term. Zero coefficients are
/// never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<Monomial, GaussianRational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(GaussianRational::one())
    }

    pub fn constant(c: GaussianRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(UNIT_MONOMIAL, c);
        }
        LaurentPoly { terms }
    }

    pub fn term(m: Monomial, c: GaussianRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        LaurentPoly { terms }
    }

    pub fn symbol_power(sym: Symbol, exp: i32) -> Self {
        let mut m = UNIT_MONOMIAL;
        m[sym.index()] = exp;
        Self::term(m, GaussianRational::one())
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, GaussianRational)>>(it: I) -> Self {
        let mut p = LaurentPoly::zero();
        for (m, c) in it {
            p.add_term(m, &c);
        }
        p
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &GaussianRational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms.get(&UNIT_MONOMIAL).is_some_and(GaussianRational::is_one)
    }

    /// True when the polynomial has at most a constant term.
    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.contains_key(&UNIT_MONOMIAL))
    }

    pub fn constant_value(&self) -> Option<GaussianRational> {
        if self.is_zero() {
            Some(GaussianRational::zero())
        } else if self.is_constant() {
            self.terms.get(&UNIT_MONOMIAL).cloned()
        } else {
            None
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn leading(&self) -> Option<(&Monomial, &GaussianRational)> {
        self.terms.iter().next_back()
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: &GaussianRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            Entry::Occupied(mut o) => {
                let sum = o.get() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, o: &LaurentPoly) -> LaurentPoly {
        let (mut big, small) = if self.len() >= o.len() { (self.clone(), o) } else { (o.clone(), self) };
        for (m, c) in &small.terms {
            big.add_term(*m, c);
        }
        big
    }

    pub fn sub(&self, o: &LaurentPoly) -> LaurentPoly {
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(*m, &-c);
        }
        r
    }

    pub fn neg(&self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }

    pub fn mul(&self, o: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || o.is_zero() {
            return LaurentPoly::zero();
        }
        if o.is_monomial() {
            let (m, c) = o.leading().unwrap();
            return self.mul_term(m, c);
        }
        if self.is_monomial() {
            let (m, c) = self.leading().unwrap();
            return o.mul_term(m, c);
        }
        let mut r = LaurentPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                r.add_term(mono_add(ma, mb), &(ca * cb));
            }
        }
        r
    }

    pub fn mul_term(&self, m: &Monomial, c: &GaussianRational) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(mm, cc)| (mono_add(mm, m), cc * c)).collect(),
        }
    }

    pub fn scale(&self, c: &GaussianRational) -> LaurentPoly {
        self.mul_term(&UNIT_MONOMIAL, c)
    }

    pub fn shift(&self, m: &Monomial) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(mm, cc)| (mono_add(mm, m), cc.clone())).collect() }
    }

    pub fn pow(&self, n: u32) -> LaurentPoly {
        let mut acc = LaurentPoly::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Componentwise minimum exponent over all terms.
    pub fn min_monomial(&self) -> Monomial {
        let mut it = self.terms.keys();
        let first = match it.next() {
            Some(m) => *m,
            None => return UNIT_MONOMIAL,
        };
        it.fold(first, |acc, m| mono_min(&acc, m))
    }

    /// Splits `self = x^m * p` with `p` an ordinary polynomial not divisible by any symbol.
    pub fn strip_monomial(&self) -> (Monomial, LaurentPoly) {
        let m = self.min_monomial();
        if m == UNIT_MONOMIAL {
            return (m, self.clone());
        }
        let neg = mono_sub(&UNIT_MONOMIAL, &m);
        (m, self.shift(&neg))
    }

    pub fn uses_symbol(&self, sym: Symbol) -> bool {
        self.terms.keys().any(|m| m[sym.index()] != 0)
    }

    pub fn symbols(&self) -> Vec<Symbol> {
        Symbol::ALL.iter().copied().filter(|s| self.uses_symbol(*s)).collect()
    }

    pub fn degree_in(&self, sym: Symbol) -> i32 {
        self.terms.keys().map(|m| m[sym.index()]).max().unwrap_or(0)
    }

    /// Coefficients with respect to one symbol; the keys are its exponents.
    pub fn coefficients_in(&self, sym: Symbol) -> BTreeMap<i32, LaurentPoly> {
        let k = sym.index();
        let mut out: BTreeMap<i32, LaurentPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut mm = *m;
            let e = mm[k];
            mm[k] = 0;
            out.entry(e).or_default().terms.insert(mm, c.clone());
        }
        out
    }

    pub fn map_coefficients<F: Fn(&GaussianRational) -> GaussianRational>(&self, f: F) -> LaurentPoly {
        LaurentPoly::from_terms(self.terms.iter().map(|(m, c)| (*m, f(c))))
    }

    pub(crate) fn from_map(terms: BTreeMap<Monomial, GaussianRational>) -> Self {
        LaurentPoly { terms }
    }

    pub(crate) fn into_map(self) -> BTreeMap<Monomial, GaussianRational> {
        self.terms
    }

    /// Writes the polynomial in descending term order, e.g. `s^2 + s^-2`.
    pub(crate) fn write_plain(&self, f: &mut impl fmt::Write, latex: bool) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative() && (c.is_real() || c.re.is_zero());
            let abs = if neg { -c } else { c.clone() };
            if k == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else if neg {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            write_term(f, m, &abs, latex)?;
        }
        Ok(())
    }
}

fn write_term(f: &mut impl fmt::Write, m: &Monomial, c: &GaussianRational, latex: bool) -> fmt::Result {
    let mut factors: Vec<String> = Vec::new();
    for sym in Symbol::ALL {
        let e = m[sym.index()];
        if e == 0 {
            continue;
        }
        if latex {
            factors.push(latex_power(sym, e));
        } else if e == 1 {
            factors.push(sym.name().to_string());
        } else {
            factors.push(format!("{}^{}", sym.name(), e));
        }
    }
    let sep = if latex { " " } else { "*" };
    if factors.is_empty() {
        return write!(f, "{}", c);
    }
    if !c.is_one() {
        if latex {
            write!(f, "{}", latex_coefficient(c))?;
        } else {
            write!(f, "{}", c)?;
        }
        f.write_str(sep)?;
    }
    f.write_str(&factors.join(sep))
}

fn latex_power(sym: Symbol, e: i32) -> String {
    if sym == Symbol::S {
        // s = q^{1/2}
        if e % 2 == 0 {
            if e == 2 {
                "q".to_string()
            } else {
                format!("q^{{{}}}", e / 2)
            }
        } else {
            format!("q^{{{}/2}}", e)
        }
    } else if sym == Symbol::W {
        if e == 1 {
            "q^{\\nu}".to_string()
        } else {
            format!("q^{{{}\\nu}}", e)
        }
    } else if e == 1 {
        sym.latex().to_string()
    } else {
        format!("{}^{{{}}}", sym.latex(), e)
    }
}

pub(crate) fn latex_coefficient(c: &GaussianRational) -> String {
    let frac = |r: &num_rational::BigRational| -> String {
        if r.is_integer() {
            r.numer().to_string()
        } else {
            format!("\\frac{{{}}}{{{}}}", r.numer(), r.denom())
        }
    };
    match (c.re.is_zero(), c.im.is_zero()) {
        (_, true) => frac(&c.re),
        (true, false) => format!("{}i", frac(&c.im)),
        _ => format!("({} + {}i)", frac(&c.re), frac(&c.im)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(e: i32) -> LaurentPoly {
        LaurentPoly::symbol_power(Symbol::S, e)
    }

    #[test]
    fn printing_descends() {
        let p = s(2).add(&s(-2));
        let mut out = String::new();
        p.write_plain(&mut out, false).unwrap();
        assert_eq!(out, "s^2 + s^-2");
    }

    #[test]
    fn strip_monomial_shifts_to_zero() {
        let p = s(-3).add(&s(1).mul(&LaurentPoly::symbol_power(Symbol::W, 2)));
        let (m, q) = p.strip_monomial();
        assert_eq!(m[0], -3);
        assert_eq!(q.min_monomial(), UNIT_MONOMIAL);
        assert_eq!(q.shift(&m), p);
    }

    #[test]
    fn add_cancels_to_zero() {
        let p = s(1).sub(&s(1));
        assert!(p.is_zero());
    }
}
