use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::gaussian::GaussianRational;
use super::gcd::{div_exact, poly_gcd};
use super::laurent::{mono_sub, LaurentPoly, Monomial, Symbol, UNIT_MONOMIAL};
use crate::error::{Error, Result};

/// Element of the rational function field Q(i)(s, w, a, b, c, iota_k, alpha_k).
///
/// Always canonical: numerator and denominator are coprime, the denominator is
/// an ordinary polynomial divisible by no symbol and its leading term has
/// coefficient 1. Two scalars are equal iff their fields are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Scalar {
    num: LaurentPoly,
    den: LaurentPoly,
}

/// Simultaneous substitution of symbols by scalars.
pub type Bindings = HashMap<Symbol, Scalar>;

impl Scalar {
    pub fn zero() -> Self {
        Scalar { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    pub fn one() -> Self {
        Scalar::from_poly(LaurentPoly::one())
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::from_poly(LaurentPoly::constant(GaussianRational::from_int(n)))
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        Scalar::from_poly(LaurentPoly::constant(GaussianRational::from_ratio(n, d)))
    }

    pub fn from_gaussian(c: GaussianRational) -> Self {
        Scalar::from_poly(LaurentPoly::constant(c))
    }

    pub fn i() -> Self {
        Scalar::from_gaussian(GaussianRational::i())
    }

    pub fn symbol(sym: Symbol) -> Self {
        Scalar::from_poly(LaurentPoly::symbol_power(sym, 1))
    }

    pub fn symbol_power(sym: Symbol, e: i32) -> Self {
        Scalar::from_poly(LaurentPoly::symbol_power(sym, e))
    }

    /// `s^e`, i.e. q^{e/2}.
    pub fn s_pow(e: i32) -> Self {
        Scalar::symbol_power(Symbol::S, e)
    }

    /// A Laurent polynomial is already canonical over denominator 1.
    pub fn from_poly(p: LaurentPoly) -> Self {
        Scalar { num: p, den: LaurentPoly::one() }
    }

    /// Builds `num / den` in canonical form.
    pub fn from_parts(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Scalar::zero());
        }
        let (md, d0) = den.strip_monomial();
        let (mn, n0) = num.strip_monomial();
        let shift = mono_sub(&mn, &md);
        if d0.is_constant() {
            let c = d0.constant_value().unwrap().inv().ok_or(Error::DivisionByZero)?;
            return Ok(Scalar { num: n0.mul_term(&shift, &c), den: LaurentPoly::one() });
        }
        let (n1, d1) = if n0.is_constant() {
            (n0, d0)
        } else {
            let g = poly_gcd(&n0, &d0);
            if g.is_one() {
                (n0, d0)
            } else {
                (
                    div_exact(&n0, &g).expect("gcd divides numerator"),
                    div_exact(&d0, &g).expect("gcd divides denominator"),
                )
            }
        };
        let lc_inv = d1.leading().unwrap().1.inv().unwrap();
        Ok(Scalar { num: n1.mul_term(&shift, &lc_inv), den: d1.scale(&lc_inv) })
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the value is a Laurent polynomial.
    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// The value as an element of Q(i), if no symbol occurs.
    pub fn constant_value(&self) -> Option<GaussianRational> {
        if self.den.is_one() {
            self.num.constant_value()
        } else {
            None
        }
    }

    pub fn uses_symbol(&self, sym: Symbol) -> bool {
        self.num.uses_symbol(sym) || self.den.uses_symbol(sym)
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Scalar::from_parts(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, o: &Scalar) -> Result<Scalar> {
        Ok(self * &o.inv()?)
    }

    pub fn pow(&self, n: i32) -> Result<Scalar> {
        if n < 0 {
            return self.inv()?.pow(-n);
        }
        if self.num.is_monomial() && self.den.is_one() {
            let (m, c) = self.num.leading().unwrap();
            let mut mm: Monomial = UNIT_MONOMIAL;
            for (k, e) in m.iter().enumerate() {
                mm[k] = e * n;
            }
            let cc = c.pow(n as i64).expect("nonzero coefficient");
            return Ok(Scalar::from_poly(LaurentPoly::term(mm, cc)));
        }
        let mut acc = Scalar::one();
        let mut base = self.clone();
        let mut e = n as u32;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Ok(acc)
    }

    pub fn map_coefficients<F: Fn(&GaussianRational) -> GaussianRational>(&self, f: F) -> Result<Scalar> {
        Scalar::from_parts(self.num.map_coefficients(&f), self.den.map_coefficients(&f))
    }

    /// Simultaneous substitution of symbols. Unbound symbols are left alone.
    pub fn substitute(&self, bindings: &Bindings) -> Result<Scalar> {
        if bindings.keys().all(|s| !self.uses_symbol(*s)) {
            return Ok(self.clone());
        }
        let num = substitute_poly(&self.num, bindings)?;
        let den = substitute_poly(&self.den, bindings)?;
        num.div(&den)
    }

    /// Limit `q -> 1` (equivalently `s -> 1`) after exact cancellation.
    pub fn limit_q_to_one(&self) -> Result<Scalar> {
        let b: Bindings = [(Symbol::S, Scalar::one())].into_iter().collect();
        let den = substitute_poly(&self.den, &b)?;
        if den.is_zero() {
            return Err(Error::PoleAtOne);
        }
        let num = substitute_poly(&self.num, &b)?;
        num.div(&den)
    }

    /// The formal map `q -> -q`, i.e. `s -> i s`.
    pub fn q_to_minus_q(&self) -> Scalar {
        let b: Bindings = [(Symbol::S, &Scalar::i() * &Scalar::s_pow(1))].into_iter().collect();
        self.substitute(&b).expect("i*s is invertible")
    }

    /// Writes the canonical textual form.
    pub fn write_to(&self, f: &mut impl fmt::Write, latex: bool) -> fmt::Result {
        if self.den.is_one() {
            return self.num.write_plain(f, latex);
        }
        if latex {
            f.write_str("\\frac{")?;
            self.num.write_plain(f, true)?;
            f.write_str("}{")?;
            self.den.write_plain(f, true)?;
            return f.write_str("}");
        }
        f.write_str("(")?;
        self.num.write_plain(f, false)?;
        f.write_str(")/(")?;
        self.den.write_plain(f, false)?;
        f.write_str(")")
    }

    pub fn to_latex(&self) -> String {
        let mut s = String::new();
        self.write_to(&mut s, true).unwrap();
        s
    }

    /// Single-term polynomial with a real negative coefficient, printed with a leading minus.
    pub(crate) fn is_negative_monomial(&self) -> bool {
        self.den.is_one()
            && self.num.is_monomial()
            && self.num.leading().is_some_and(|(_, c)| c.is_real() && c.is_negative())
    }

    /// Sum of `s`-monomial plus polynomial, convenience for tests and catalog code.
    pub fn poly_from_s_terms(terms: &[(i64, i32)]) -> Scalar {
        let mut p = LaurentPoly::zero();
        for &(c, e) in terms {
            let mut m = UNIT_MONOMIAL;
            m[Symbol::S.index()] = e;
            p.add_term(m, &GaussianRational::from_int(c));
        }
        Scalar::from_poly(p)
    }
}

fn substitute_poly(p: &LaurentPoly, bindings: &Bindings) -> Result<Scalar> {
    let mut powers: HashMap<(Symbol, i32), Scalar> = HashMap::new();
    let mut poly_acc = LaurentPoly::zero();
    let mut frac_acc = Scalar::zero();
    for (m, c) in p.terms() {
        let mut rest = *m;
        let mut factor = Scalar::one();
        for (sym, value) in bindings {
            let e = m[sym.index()];
            if e == 0 {
                continue;
            }
            rest[sym.index()] = 0;
            let pw = match powers.get(&(*sym, e)) {
                Some(v) => v.clone(),
                None => {
                    if value.is_zero() && e < 0 {
                        return Err(Error::DivisionByZero);
                    }
                    let v = value.pow(e)?;
                    powers.insert((*sym, e), v.clone());
                    v
                }
            };
            factor = &factor * &pw;
        }
        if factor.den.is_one() {
            poly_acc = poly_acc.add(&factor.num.mul_term(&rest, c));
        } else {
            let t = Scalar::from_parts(factor.num.mul_term(&rest, c), factor.den)?;
            frac_acc = &frac_acc + &t;
        }
    }
    Ok(&Scalar::from_poly(poly_acc) + &frac_acc)
}

/// Quantum integer `[n]_q = (q^n - q^-n) / (q - q^-1)` as a Laurent polynomial in `s`.
pub fn q_integer(n: i64) -> Scalar {
    let sign = if n < 0 { -1 } else { 1 };
    let m = n.abs();
    // [m]_q = q^{m-1} + q^{m-3} + ... + q^{-(m-1)}
    let mut p = LaurentPoly::zero();
    let mut e = 2 * (m - 1);
    for _ in 0..m {
        let mut mono = UNIT_MONOMIAL;
        mono[Symbol::S.index()] = e as i32;
        p.add_term(mono, &GaussianRational::from_int(sign));
        e -= 4;
    }
    Scalar::from_poly(p)
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, o: &Scalar) -> Scalar {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            if self.den.is_one() {
                return Scalar::from_poly(self.num.add(&o.num));
            }
            return Scalar::from_parts(self.num.add(&o.num), self.den.clone()).unwrap();
        }
        if o.den.is_one() {
            return Scalar::from_parts(self.num.add(&o.num.mul(&self.den)), self.den.clone()).unwrap();
        }
        if self.den.is_one() {
            return Scalar::from_parts(o.num.add(&self.num.mul(&o.den)), o.den.clone()).unwrap();
        }
        let g = poly_gcd(&self.den, &o.den);
        let (da, db) = if g.is_one() {
            (self.den.clone(), o.den.clone())
        } else {
            (div_exact(&self.den, &g).unwrap(), div_exact(&o.den, &g).unwrap())
        };
        let num = self.num.mul(&db).add(&o.num.mul(&da));
        Scalar::from_parts(num, da.mul(&o.den)).unwrap()
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, o: &Scalar) -> Scalar {
        self + &(-o)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { num: self.num.neg(), den: self.den.clone() }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { num: self.num.neg(), den: self.den }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, o: &Scalar) -> Scalar {
        if self.is_zero() || o.is_zero() {
            return Scalar::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            return Scalar::from_poly(self.num.mul(&o.num));
        }
        if self.is_one() {
            return o.clone();
        }
        if o.is_one() {
            return self.clone();
        }
        // Cross-cancel: each factor is already reduced.
        let (ma, na) = self.num.strip_monomial();
        let (mb, nb) = o.num.strip_monomial();
        let g1 = poly_gcd(&na, &o.den);
        let g2 = poly_gcd(&nb, &self.den);
        let na = div_exact(&na, &g1).unwrap();
        let db = div_exact(&o.den, &g1).unwrap();
        let nb = div_exact(&nb, &g2).unwrap();
        let da = div_exact(&self.den, &g2).unwrap();
        let num = na.mul(&nb).shift(&super::laurent::mono_add(&ma, &mb));
        Scalar::from_parts(num, da.mul(&db)).unwrap()
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, o: Scalar) -> Scalar {
        &self + &o
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, o: Scalar) -> Scalar {
        &self - &o
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, o: Scalar) -> Scalar {
        &self * &o
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<Symbol> for Scalar {
    fn from(s: Symbol) -> Self {
        Scalar::symbol(s)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        self.write_to(&mut s, false)?;
        f.write_str(&s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(e: i32) -> Scalar {
        Scalar::s_pow(e)
    }

    #[test]
    fn additive_inverse() {
        assert!((&s(1) + &(-&s(1))).is_zero());
    }

    #[test]
    fn i_times_i() {
        assert_eq!(&Scalar::i() * &Scalar::i(), Scalar::from_int(-1));
    }

    #[test]
    fn cancels_difference_of_squares() {
        // (s^2 - s^-2) / (s - s^-1) = s + s^-1
        let num = &s(2) - &s(-2);
        let den = &s(1) - &s(-1);
        let r = &den.inv().unwrap() * &num;
        assert_eq!(r, &s(1) + &s(-1));
        assert!(r.is_polynomial());
    }

    #[test]
    fn q_integers() {
        assert!(q_integer(0).is_zero());
        assert!(q_integer(1).is_one());
        assert_eq!(q_integer(2), &s(2) + &s(-2));
        assert_eq!(q_integer(-3), -q_integer(3));
    }

    #[test]
    fn q_integer_matches_quotient_definition() {
        for n in -6..=6 {
            let num = &s(2 * n as i32) - &s(-2 * n as i32);
            let den = &s(2) - &s(-2);
            assert_eq!(num.div(&den).unwrap(), q_integer(n));
        }
    }

    #[test]
    fn substitution_examples() {
        let sa = &s(1) * &Scalar::symbol(Symbol::A);
        let b: Bindings = [(Symbol::A, Scalar::one())].into_iter().collect();
        assert_eq!(sa.substitute(&b).unwrap(), s(1));

        assert_eq!(s(2).q_to_minus_q(), -s(2));

        let at_one: Bindings = [(Symbol::S, Scalar::one())].into_iter().collect();
        assert_eq!(q_integer(2).substitute(&at_one).unwrap(), Scalar::from_int(2));
    }

    #[test]
    fn substitution_of_zero_into_negative_power() {
        let b: Bindings = [(Symbol::A, Scalar::zero())].into_iter().collect();
        assert_eq!(
            Scalar::symbol_power(Symbol::A, -1).substitute(&b),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn limits() {
        assert_eq!(q_integer(3).limit_q_to_one().unwrap(), Scalar::from_int(3));
        assert!((&s(-1) - &s(3)).limit_q_to_one().unwrap().is_zero());
        let pole = (&s(1) - &s(-1)).inv().unwrap();
        assert_eq!(pole.limit_q_to_one(), Err(Error::PoleAtOne));
        // removable: (q - q^-1)/(s - s^-1) = s + s^-1 -> 2
        let r = (&s(2) - &s(-2)).div(&(&s(1) - &s(-1))).unwrap();
        assert_eq!(r.limit_q_to_one().unwrap(), Scalar::from_int(2));
    }

    #[test]
    fn division_by_zero() {
        assert_eq!(Scalar::zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn canonical_denominator_is_monic_and_symbol_free_of_monomials() {
        let x = Scalar::from_parts(LaurentPoly::one(), (&s(1) * &Scalar::from_int(3) - s(-1)).numerator().clone())
            .unwrap();
        let (_, c) = x.denominator().leading().unwrap();
        assert!(c.is_one());
        assert_eq!(x.denominator().min_monomial(), UNIT_MONOMIAL);
    }

    #[test]
    fn display() {
        assert_eq!(q_integer(2).to_string(), "s^2 + s^-2");
        assert_eq!(Scalar::zero().to_string(), "0");
        let x = (&s(1) - &s(-1)).inv().unwrap();
        assert_eq!(x.to_string(), "(s)/(s^2 - 1)");
    }
}
