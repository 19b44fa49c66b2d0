//! Greatest common divisors and exact division for ordinary polynomials
//! (non-negative exponents) over Q(i).
//!
//! The multivariate gcd is the classical recursive primitive-PRS algorithm.
//! Symbols that occur in only one argument are eliminated first by taking
//! the gcd with each of that argument's coefficients, which keeps the common
//! case (a numerator in many symbols over a denominator in `s` alone) on the
//! cheap univariate path.

use std::collections::BTreeMap;

use super::gaussian::GaussianRational;
use super::laurent::{mono_min, mono_sub, LaurentPoly, Monomial, Symbol, UNIT_MONOMIAL};

/// Divides out the leading coefficient so the leading term is monic.
pub fn make_monic(p: &LaurentPoly) -> LaurentPoly {
    match p.leading() {
        None => LaurentPoly::zero(),
        Some((_, c)) if c.is_one() => p.clone(),
        Some((_, c)) => p.scale(&c.inv().expect("nonzero leading coefficient")),
    }
}

/// Exact quotient `a / b` when `b` divides `a` in the Laurent ring, `None` otherwise.
pub fn div_exact(a: &LaurentPoly, b: &LaurentPoly) -> Option<LaurentPoly> {
    if b.is_zero() {
        return None;
    }
    if a.is_zero() {
        return Some(LaurentPoly::zero());
    }
    if b.is_monomial() {
        let (m, c) = b.leading().unwrap();
        let inv = c.inv()?;
        return Some(a.mul_term(&mono_sub(&UNIT_MONOMIAL, m), &inv));
    }
    let (ma, a0) = a.strip_monomial();
    let (mb, b0) = b.strip_monomial();
    let (lm_b, lc_b) = b0.leading().map(|(m, c)| (*m, c.clone())).unwrap();
    let lc_b_inv = lc_b.inv()?;
    let mut rem = a0.into_map();
    let mut quot: BTreeMap<Monomial, GaussianRational> = BTreeMap::new();
    while let Some((lm_r, lc_r)) = rem.iter().next_back().map(|(m, c)| (*m, c.clone())) {
        let shift = mono_sub(&lm_r, &lm_b);
        if shift.iter().any(|&e| e < 0) {
            return None;
        }
        let factor = &lc_r * &lc_b_inv;
        for (m, c) in b0.terms() {
            let key = super::laurent::mono_add(m, &shift);
            let delta = &factor * c;
            use std::collections::btree_map::Entry;
            match rem.entry(key) {
                Entry::Vacant(v) => {
                    v.insert(-delta);
                }
                Entry::Occupied(mut o) => {
                    let nv = o.get() - &delta;
                    if nv.is_zero() {
                        o.remove();
                    } else {
                        *o.get_mut() = nv;
                    }
                }
            }
        }
        quot.insert(shift, factor);
    }
    Some(LaurentPoly::from_map(quot).shift(&mono_sub(&ma, &mb)))
}

/// Monic gcd of two ordinary polynomials (exponents must be non-negative).
pub fn poly_gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    if a.is_zero() {
        return make_monic(b);
    }
    if b.is_zero() {
        return make_monic(a);
    }
    let (ma, a0) = a.strip_monomial();
    let (mb, b0) = b.strip_monomial();
    let mono = mono_min(&ma, &mb);
    let g = gcd_stripped(&a0, &b0);
    if mono == UNIT_MONOMIAL {
        g
    } else {
        g.shift(&mono)
    }
}

fn gcd_stripped(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    if a.is_constant() || b.is_constant() {
        return LaurentPoly::one();
    }
    if a == b {
        return make_monic(a);
    }
    let va = a.symbols();
    let vb = b.symbols();
    if let Some(&v) = va.iter().find(|v| !vb.contains(v)) {
        return gcd_with_coefficients(b, a, v);
    }
    if let Some(&v) = vb.iter().find(|v| !va.contains(v)) {
        return gcd_with_coefficients(a, b, v);
    }
    // A variable in which the gcd has degree 0 splits the problem into
    // gcds of coefficients, which have fewer variables.
    if let Some(&v) = va.iter().find(|&&v| modular_gcd_degree(a, b, v) == Some(0)) {
        return gcd_of_coefficients(a, b, v);
    }
    if va.len() == 1 {
        return univariate_gcd(a, b, va[0]);
    }
    let main = *va
        .iter()
        .min_by_key(|v| a.degree_in(**v).max(b.degree_in(**v)))
        .unwrap();
    recursive_gcd(a, b, main)
}

/// gcd(g, p) where `p` involves `v` and `g` does not: fold over the coefficients of `p`.
fn gcd_with_coefficients(g: &LaurentPoly, p: &LaurentPoly, v: Symbol) -> LaurentPoly {
    let mut acc = g.clone();
    // Smaller coefficients first tends to hit 1 sooner.
    let mut coeffs: Vec<LaurentPoly> = p.coefficients_in(v).into_values().collect();
    coeffs.sort_by_key(|c| c.len());
    for c in coeffs {
        acc = poly_gcd(&acc, &c);
        if acc.is_constant() {
            return LaurentPoly::one();
        }
    }
    make_monic(&acc)
}

fn gcd_of_coefficients(a: &LaurentPoly, b: &LaurentPoly, v: Symbol) -> LaurentPoly {
    let mut coeffs: Vec<LaurentPoly> = a.coefficients_in(v).into_values().chain(b.coefficients_in(v).into_values()).collect();
    coeffs.sort_by_key(|c| c.len());
    let mut acc = LaurentPoly::zero();
    for c in coeffs {
        acc = poly_gcd(&acc, &c);
        if acc.is_constant() {
            return LaurentPoly::one();
        }
    }
    acc
}

/// Large prime congruent to 1 mod 4, so Q(i) maps into F_p.
const P: u64 = 1_000_000_009;

fn mul_mod(x: u64, y: u64) -> u64 {
    ((x as u128 * y as u128) % P as u128) as u64
}

fn pow_mod(mut x: u64, mut e: u64) -> u64 {
    let mut acc = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, x);
        }
        x = mul_mod(x, x);
        e >>= 1;
    }
    acc
}

fn inv_mod(x: u64) -> u64 {
    pow_mod(x, P - 2)
}

fn sqrt_minus_one() -> u64 {
    static ROOT: std::sync::OnceLock<u64> = std::sync::OnceLock::new();
    *ROOT.get_or_init(|| {
        (2..)
            .map(|g| pow_mod(g, (P - 1) / 4))
            .find(|&r| mul_mod(r, r) == P - 1)
            .unwrap()
    })
}

fn rational_mod(r: &num_rational::BigRational) -> Option<u64> {
    use num_traits::ToPrimitive;
    let m = num_bigint::BigInt::from(P);
    let n = (r.numer() % &m + &m) % &m;
    let d = (r.denom() % &m + &m) % &m;
    let d = d.to_u64()?;
    (d != 0).then(|| mul_mod(n.to_u64().unwrap(), inv_mod(d)))
}

fn gaussian_mod(c: &GaussianRational) -> Option<u64> {
    let re = rational_mod(&c.re)?;
    let im = rational_mod(&c.im)?;
    Some((re + mul_mod(im, sqrt_minus_one())) % P)
}

/// Image in F_p[v] with every other symbol specialized to a fixed point, or
/// `None` when the leading coefficient in `v` vanishes there.
fn specialize_mod(p: &LaurentPoly, v: Symbol) -> Option<Vec<u64>> {
    let deg = p.degree_in(v).max(0) as usize;
    let mut out = vec![0u64; deg + 1];
    for (m, c) in p.terms() {
        let mut t = gaussian_mod(c)?;
        for (k, &e) in m.iter().enumerate() {
            if k != v.index() && e != 0 {
                let point = 7919 * (k as u64 + 3) + 104_729;
                t = mul_mod(t, pow_mod(point, e as u64));
            }
        }
        let slot = &mut out[m[v.index()] as usize];
        *slot = (*slot + t) % P;
    }
    (out[deg] != 0).then_some(out)
}

fn trim_mod(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

/// Upper bound on the degree in `v` of gcd(a, b), from one modular image.
/// Specialization cannot lower the degree while both leading coefficients
/// survive, so `Some(0)` proves the gcd is free of `v`.
fn modular_gcd_degree(a: &LaurentPoly, b: &LaurentPoly, v: Symbol) -> Option<usize> {
    let mut x = specialize_mod(a, v)?;
    let mut y = specialize_mod(b, v)?;
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        let lc_inv = inv_mod(*y.last().unwrap());
        while x.len() >= y.len() && !x.is_empty() {
            let shift = x.len() - y.len();
            let f = mul_mod(*x.last().unwrap(), lc_inv);
            for (j, &cy) in y.iter().enumerate() {
                x[j + shift] = (x[j + shift] + P - mul_mod(f, cy)) % P;
            }
            x.pop();
            trim_mod(&mut x);
        }
        std::mem::swap(&mut x, &mut y);
    }
    Some(x.len().saturating_sub(1))
}

fn dense_univariate(p: &LaurentPoly, v: Symbol) -> Vec<GaussianRational> {
    let deg = p.degree_in(v).max(0) as usize;
    let mut out = vec![GaussianRational::zero(); deg + 1];
    for (m, c) in p.terms() {
        out[m[v.index()] as usize] = c.clone();
    }
    out
}

fn trim(v: &mut Vec<GaussianRational>) {
    while v.last().is_some_and(GaussianRational::is_zero) {
        v.pop();
    }
}

fn univariate_gcd(a: &LaurentPoly, b: &LaurentPoly, v: Symbol) -> LaurentPoly {
    let mut x = dense_univariate(a, v);
    let mut y = dense_univariate(b, v);
    trim(&mut x);
    trim(&mut y);
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        // x <- x mod y
        let lc_inv = y.last().unwrap().inv().unwrap();
        while x.len() >= y.len() && !x.is_empty() {
            let shift = x.len() - y.len();
            let f = x.last().unwrap() * &lc_inv;
            for (j, cy) in y.iter().enumerate() {
                x[j + shift] = &x[j + shift] - &(&f * cy);
            }
            x.pop();
            trim(&mut x);
        }
        std::mem::swap(&mut x, &mut y);
    }
    let lc_inv = x.last().unwrap().inv().unwrap();
    let mut out = LaurentPoly::zero();
    for (k, c) in x.iter().enumerate() {
        if !c.is_zero() {
            let mut m = UNIT_MONOMIAL;
            m[v.index()] = k as i32;
            out.add_term(m, &(c * &lc_inv));
        }
    }
    out
}

/// Polynomial in `v` with polynomial coefficients, dense by degree.
type Recursive = Vec<LaurentPoly>;

fn to_recursive(p: &LaurentPoly, v: Symbol) -> Recursive {
    let coeffs = p.coefficients_in(v);
    let deg = coeffs.keys().next_back().copied().unwrap_or(0).max(0) as usize;
    let mut out = vec![LaurentPoly::zero(); deg + 1];
    for (e, c) in coeffs {
        out[e as usize] = c;
    }
    out
}

fn from_recursive(r: &Recursive, v: Symbol) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    for (k, c) in r.iter().enumerate() {
        let mut m = UNIT_MONOMIAL;
        m[v.index()] = k as i32;
        for (mm, cc) in c.terms() {
            out.add_term(super::laurent::mono_add(mm, &m), cc);
        }
    }
    out
}

fn trim_rec(r: &mut Recursive) {
    while r.last().is_some_and(LaurentPoly::is_zero) {
        r.pop();
    }
}

fn content(r: &Recursive) -> LaurentPoly {
    let mut nonzero: Vec<&LaurentPoly> = r.iter().filter(|c| !c.is_zero()).collect();
    nonzero.sort_by_key(|c| c.len());
    let mut acc = LaurentPoly::zero();
    for c in nonzero {
        acc = poly_gcd(&acc, c);
        if acc.is_one() {
            break;
        }
    }
    acc
}

/// Primitive part, scaled so the leading numeric coefficient is 1. Without the
/// rescaling the rationals in a PRS grow exponentially.
fn primitive_part(r: &Recursive) -> Recursive {
    let c = content(r);
    let pp: Recursive = if c.is_one() || c.is_zero() {
        r.clone()
    } else {
        r.iter().map(|x| div_exact(x, &c).expect("content divides coefficients")).collect()
    };
    match pp.last().and_then(|l| l.leading()).map(|(_, k)| k.clone()) {
        Some(k) if !k.is_one() => {
            let inv = k.inv().expect("nonzero leading coefficient");
            pp.iter().map(|x| x.scale(&inv)).collect()
        }
        _ => pp,
    }
}

fn pseudo_remainder(a: &Recursive, b: &Recursive) -> Recursive {
    let mut r = a.clone();
    let n = b.len() - 1;
    let lcb = &b[n];
    while r.len() > n && !r.is_empty() {
        let d = r.len() - 1;
        let lcr = r[d].clone();
        for x in r.iter_mut() {
            *x = x.mul(lcb);
        }
        for (j, cb) in b.iter().enumerate() {
            r[j + d - n] = r[j + d - n].sub(&lcr.mul(cb));
        }
        debug_assert!(r[d].is_zero());
        trim_rec(&mut r);
    }
    r
}

fn recursive_gcd(a: &LaurentPoly, b: &LaurentPoly, v: Symbol) -> LaurentPoly {
    let mut x = to_recursive(a, v);
    let mut y = to_recursive(b, v);
    let cx = content(&x);
    let cy = content(&y);
    let c = poly_gcd(&cx, &cy);
    x = x.iter().map(|t| div_exact(t, &cx).unwrap()).collect();
    y = y.iter().map(|t| div_exact(t, &cy).unwrap()).collect();
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        let r = pseudo_remainder(&x, &y);
        x = y;
        y = if r.is_empty() { r } else { primitive_part(&r) };
    }
    let g = if x.len() == 1 {
        LaurentPoly::one()
    } else {
        from_recursive(&primitive_part(&x), v)
    };
    make_monic(&g.mul(&c))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(s: Symbol) -> LaurentPoly {
        LaurentPoly::symbol_power(s, 1)
    }
    fn k(n: i64) -> LaurentPoly {
        LaurentPoly::constant(GaussianRational::from_int(n))
    }

    #[test]
    fn univariate_difference_of_squares() {
        let s = sym(Symbol::S);
        let a = s.mul(&s).sub(&k(1));
        let b = s.sub(&k(1)).mul(&s.add(&k(2)));
        assert_eq!(poly_gcd(&a, &b), s.sub(&k(1)));
    }

    #[test]
    fn multivariate_common_factor() {
        let s = sym(Symbol::S);
        let a = sym(Symbol::A);
        let w = sym(Symbol::W);
        let f = s.mul(&a).add(&w).add(&k(3));
        let p = f.mul(&s.sub(&a));
        let q = f.mul(&w.add(&k(1))).mul(&a);
        let g = poly_gcd(&p, &q);
        assert_eq!(g, make_monic(&f));
    }

    #[test]
    fn monomial_part_is_kept() {
        let s = sym(Symbol::S);
        let a = s.mul(&s).mul(&sym(Symbol::B));
        let b = s.mul(&sym(Symbol::C));
        assert_eq!(poly_gcd(&a, &b), s);
    }

    #[test]
    fn exact_division_detects_remainder() {
        let s = sym(Symbol::S);
        let a = s.mul(&s).sub(&k(1));
        assert_eq!(div_exact(&a, &s.add(&k(1))), Some(s.sub(&k(1))));
        assert_eq!(div_exact(&a, &s.add(&k(2))), None);
    }

    #[test]
    fn modular_degree_bounds() {
        let s = sym(Symbol::S);
        let w = sym(Symbol::W);
        let f = s.mul(&w).add(&k(2));
        let a = f.mul(&s.add(&k(1)));
        let b = f.mul(&s.sub(&w));
        assert_eq!(modular_gcd_degree(&a, &b, Symbol::S), Some(1));
        assert_eq!(modular_gcd_degree(&s.add(&k(1)), &s.sub(&w), Symbol::S), Some(0));
        // i maps to a square root of -1
        let i = LaurentPoly::constant(GaussianRational::i());
        let c = s.mul(&s).add(&k(1));
        assert_eq!(modular_gcd_degree(&c, &s.sub(&i), Symbol::S), Some(1));
        assert_eq!(poly_gcd(&c, &s.sub(&i).mul(&w)), s.sub(&i));
    }

    #[test]
    fn gcd_free_of_main_variable() {
        let (s, w, a) = (sym(Symbol::S), sym(Symbol::W), sym(Symbol::A));
        let c = w.mul(&a).add(&k(3));
        let p = c.mul(&s.mul(&s).add(&w));
        let q = c.mul(&s.add(&a));
        assert_eq!(poly_gcd(&p, &q), make_monic(&c));
    }
}
