//! Free associative algebra over [`Scalar`] and its tensor squares.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::scalars::{Bindings, Scalar};

/// Index of a generator inside its [`Alphabet`].
pub type Gen = u8;

/// Ordered generator names. The order is the PBW order used for words.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    name: String,
    generators: Vec<String>,
}

impl Alphabet {
    pub fn new<S: Into<String>>(name: S, generators: &[&str]) -> Arc<Alphabet> {
        assert!(generators.len() < Gen::MAX as usize, "alphabet too large");
        Arc::new(Alphabet {
            name: name.into(),
            generators: generators.iter().map(|g| g.to_string()).collect(),
        })
    }

    pub fn from_names(name: String, generators: Vec<String>) -> Arc<Alphabet> {
        assert!(generators.len() < Gen::MAX as usize, "alphabet too large");
        Arc::new(Alphabet { name, generators })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn generators(&self) -> impl Iterator<Item = Gen> {
        0..self.generators.len() as Gen
    }

    pub fn names(&self) -> &[String] {
        &self.generators
    }

    pub fn index_of(&self, name: &str) -> Option<Gen> {
        self.generators.iter().position(|g| g == name).map(|i| i as Gen)
    }

    pub fn gen(&self, name: &str) -> Gen {
        self.index_of(name)
            .unwrap_or_else(|| panic!("generator `{name}` not in alphabet `{}`", self.name))
    }

    pub fn name_of(&self, g: Gen) -> &str {
        &self.generators[g as usize]
    }
}

fn same_alphabet(a: &Arc<Alphabet>, b: &Arc<Alphabet>) -> Result<()> {
    if Arc::ptr_eq(a, b) || a == b {
        Ok(())
    } else {
        Err(Error::AlphabetMismatch(a.name.clone(), b.name.clone()))
    }
}

/// Finite sequence of generators, ordered length-lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Word(pub SmallVec<[Gen; 8]>);

impl Word {
    pub fn empty() -> Word {
        Word(SmallVec::new())
    }

    pub fn single(g: Gen) -> Word {
        Word(SmallVec::from_slice(&[g]))
    }

    pub fn from_slice(gs: &[Gen]) -> Word {
        Word(SmallVec::from_slice(gs))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Gen] {
        &self.0
    }

    pub fn concat(&self, o: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&o.0);
        Word(v)
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }
}

impl Ord for Word {
    fn cmp(&self, o: &Self) -> Ordering {
        self.0.len().cmp(&o.0.len()).then_with(|| self.0.cmp(&o.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

fn accumulate<K: Ord>(map: &mut BTreeMap<K, Scalar>, key: K, c: Scalar) {
    if c.is_zero() {
        return;
    }
    match map.entry(key) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            let sum = o.get() + &c;
            if sum.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = sum;
            }
        }
    }
}

/// Linear combination of words with scalar coefficients.
#[derive(Clone, Debug)]
pub struct NCExpr {
    alphabet: Arc<Alphabet>,
    terms: BTreeMap<Word, Scalar>,
}

impl PartialEq for NCExpr {
    fn eq(&self, o: &Self) -> bool {
        same_alphabet(&self.alphabet, &o.alphabet).is_ok() && self.terms == o.terms
    }
}

impl Eq for NCExpr {}

impl NCExpr {
    pub fn zero(alphabet: &Arc<Alphabet>) -> NCExpr {
        NCExpr { alphabet: alphabet.clone(), terms: BTreeMap::new() }
    }

    pub fn one(alphabet: &Arc<Alphabet>) -> NCExpr {
        NCExpr::scalar(alphabet, Scalar::one())
    }

    pub fn scalar(alphabet: &Arc<Alphabet>, c: Scalar) -> NCExpr {
        NCExpr::word(alphabet, Word::empty(), c)
    }

    pub fn word(alphabet: &Arc<Alphabet>, w: Word, c: Scalar) -> NCExpr {
        let mut e = NCExpr::zero(alphabet);
        accumulate(&mut e.terms, w, c);
        e
    }

    pub fn generator(alphabet: &Arc<Alphabet>, g: Gen) -> NCExpr {
        NCExpr::word(alphabet, Word::single(g), Scalar::one())
    }

    /// Generator by name; panics if the name is not in the alphabet.
    pub fn gen(alphabet: &Arc<Alphabet>, name: &str) -> NCExpr {
        NCExpr::generator(alphabet, alphabet.gen(name))
    }

    pub fn from_terms<I: IntoIterator<Item = (Word, Scalar)>>(alphabet: &Arc<Alphabet>, it: I) -> NCExpr {
        let mut e = NCExpr::zero(alphabet);
        for (w, c) in it {
            accumulate(&mut e.terms, w, c);
        }
        e
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &Scalar)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, w: &Word) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The scalar value when only the empty word occurs.
    pub fn as_scalar(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => self.terms.get(&Word::empty()).cloned(),
            _ => None,
        }
    }

    pub fn add_term(&mut self, w: Word, c: Scalar) {
        accumulate(&mut self.terms, w, c);
    }

    pub fn checked_add(&self, o: &NCExpr) -> Result<NCExpr> {
        same_alphabet(&self.alphabet, &o.alphabet)?;
        let mut r = self.clone();
        for (w, c) in &o.terms {
            accumulate(&mut r.terms, w.clone(), c.clone());
        }
        Ok(r)
    }

    pub fn checked_sub(&self, o: &NCExpr) -> Result<NCExpr> {
        self.checked_add(&-o)
    }

    /// Concatenation product, extended bilinearly.
    pub fn checked_mul(&self, o: &NCExpr) -> Result<NCExpr> {
        same_alphabet(&self.alphabet, &o.alphabet)?;
        let mut r = NCExpr::zero(&self.alphabet);
        for (wa, ca) in &self.terms {
            for (wb, cb) in &o.terms {
                accumulate(&mut r.terms, wa.concat(wb), ca * cb);
            }
        }
        Ok(r)
    }

    pub fn scale(&self, c: &Scalar) -> NCExpr {
        if c.is_zero() {
            return NCExpr::zero(&self.alphabet);
        }
        NCExpr {
            alphabet: self.alphabet.clone(),
            terms: self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> NCExpr {
        let mut acc = NCExpr::one(&self.alphabet);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    pub fn map_coefficients<F: Fn(&Scalar) -> Result<Scalar>>(&self, f: F) -> Result<NCExpr> {
        let mut r = NCExpr::zero(&self.alphabet);
        for (w, c) in &self.terms {
            accumulate(&mut r.terms, w.clone(), f(c)?);
        }
        Ok(r)
    }

    pub fn substitute(&self, b: &Bindings) -> Result<NCExpr> {
        self.map_coefficients(|c| c.substitute(b))
    }

    /// Letter-by-letter renaming into another alphabet.
    pub fn rename(&self, target: &Arc<Alphabet>, map: &HashMap<Gen, Gen>) -> Result<NCExpr> {
        let mut r = NCExpr::zero(target);
        for (w, c) in &self.terms {
            let mut nw = Word::empty();
            for g in w.letters() {
                let ng = map
                    .get(g)
                    .ok_or_else(|| Error::MissingImage(self.alphabet.name_of(*g).to_string()))?;
                nw.0.push(*ng);
            }
            accumulate(&mut r.terms, nw, c.clone());
        }
        Ok(r)
    }

    /// Maximum word length.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(Word::len).max().unwrap_or(0)
    }

    pub fn word_text(&self, w: &Word) -> String {
        if w.is_empty() {
            return "1".into();
        }
        w.letters().iter().map(|g| self.alphabet.name_of(*g)).collect::<Vec<_>>().join("*")
    }
}

impl Add for &NCExpr {
    type Output = NCExpr;
    fn add(self, o: &NCExpr) -> NCExpr {
        self.checked_add(o).expect("alphabet mismatch in `+`")
    }
}

impl Sub for &NCExpr {
    type Output = NCExpr;
    fn sub(self, o: &NCExpr) -> NCExpr {
        self.checked_sub(o).expect("alphabet mismatch in `-`")
    }
}

impl Mul for &NCExpr {
    type Output = NCExpr;
    fn mul(self, o: &NCExpr) -> NCExpr {
        self.checked_mul(o).expect("alphabet mismatch in `*`")
    }
}

impl Mul<&Scalar> for &NCExpr {
    type Output = NCExpr;
    fn mul(self, c: &Scalar) -> NCExpr {
        self.scale(c)
    }
}

impl Neg for &NCExpr {
    type Output = NCExpr;
    fn neg(self) -> NCExpr {
        NCExpr {
            alphabet: self.alphabet.clone(),
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }
}

impl fmt::Display for NCExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::dsl::format(self, crate::dsl::Style::Canonical))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BracketKind {
    Commutator,
    Anticommutator,
    /// `{x, y}_q = q^{1/2} x y + q^{-1/2} y x`
    QAnticommutator,
}

pub fn bracket(kind: BracketKind, x: &NCExpr, y: &NCExpr) -> Result<NCExpr> {
    let xy = x.checked_mul(y)?;
    let yx = y.checked_mul(x)?;
    Ok(match kind {
        BracketKind::Commutator => &xy - &yx,
        BracketKind::Anticommutator => &xy + &yx,
        BracketKind::QAnticommutator => &xy.scale(&Scalar::s_pow(1)) + &yx.scale(&Scalar::s_pow(-1)),
    })
}

/// Linear combination of pure tensors `u ⊗ v` of words.
#[derive(Clone, Debug)]
pub struct TensorExpr {
    alphabet: Arc<Alphabet>,
    terms: BTreeMap<(Word, Word), Scalar>,
}

impl PartialEq for TensorExpr {
    fn eq(&self, o: &Self) -> bool {
        same_alphabet(&self.alphabet, &o.alphabet).is_ok() && self.terms == o.terms
    }
}

impl TensorExpr {
    pub fn zero(alphabet: &Arc<Alphabet>) -> TensorExpr {
        TensorExpr { alphabet: alphabet.clone(), terms: BTreeMap::new() }
    }

    pub fn one(alphabet: &Arc<Alphabet>) -> TensorExpr {
        let mut t = TensorExpr::zero(alphabet);
        t.add_term(Word::empty(), Word::empty(), Scalar::one());
        t
    }

    /// `x ⊗ y`, expanded bilinearly.
    pub fn pure(x: &NCExpr, y: &NCExpr) -> Result<TensorExpr> {
        same_alphabet(&x.alphabet, &y.alphabet)?;
        let mut t = TensorExpr::zero(&x.alphabet);
        for (u, a) in x.terms() {
            for (v, b) in y.terms() {
                t.add_term(u.clone(), v.clone(), a * b);
            }
        }
        Ok(t)
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Word, Word), &Scalar)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, u: Word, v: Word, c: Scalar) {
        accumulate(&mut self.terms, (u, v), c);
    }

    pub fn checked_add(&self, o: &TensorExpr) -> Result<TensorExpr> {
        same_alphabet(&self.alphabet, &o.alphabet)?;
        let mut r = self.clone();
        for (k, c) in &o.terms {
            accumulate(&mut r.terms, k.clone(), c.clone());
        }
        Ok(r)
    }

    pub fn checked_sub(&self, o: &TensorExpr) -> Result<TensorExpr> {
        self.checked_add(&o.scale(&Scalar::from_int(-1)))
    }

    pub fn scale(&self, c: &Scalar) -> TensorExpr {
        let mut r = TensorExpr::zero(&self.alphabet);
        for (k, x) in &self.terms {
            accumulate(&mut r.terms, k.clone(), x * c);
        }
        r
    }

    /// Componentwise product `(a ⊗ b)(c ⊗ d) = ac ⊗ bd`, with no sign rule.
    pub fn checked_mul(&self, o: &TensorExpr) -> Result<TensorExpr> {
        same_alphabet(&self.alphabet, &o.alphabet)?;
        let mut r = TensorExpr::zero(&self.alphabet);
        for ((a, b), x) in &self.terms {
            for ((c, d), y) in &o.terms {
                accumulate(&mut r.terms, (a.concat(c), b.concat(d)), x * y);
            }
        }
        Ok(r)
    }

    pub fn text(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|((u, v), c)| {
                let zu = NCExpr::zero(&self.alphabet);
                format!("({})*[{} ⊗ {}]", c, zu.word_text(u), zu.word_text(v))
            })
            .collect();
        parts.join(" + ")
    }
}

/// Three-fold tensor, stored as word triples (the reassociation of `(u ⊗ v) ⊗ w`).
#[derive(Clone, Debug)]
pub struct Tensor3 {
    alphabet: Arc<Alphabet>,
    terms: BTreeMap<(Word, Word, Word), Scalar>,
}

impl PartialEq for Tensor3 {
    fn eq(&self, o: &Self) -> bool {
        same_alphabet(&self.alphabet, &o.alphabet).is_ok() && self.terms == o.terms
    }
}

impl Tensor3 {
    pub fn zero(alphabet: &Arc<Alphabet>) -> Tensor3 {
        Tensor3 { alphabet: alphabet.clone(), terms: BTreeMap::new() }
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Word, Word, Word), &Scalar)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, u: Word, v: Word, w: Word, c: Scalar) {
        accumulate(&mut self.terms, (u, v, w), c);
    }

    /// `t ⊗ w` reassociated into triples.
    pub fn left_nested(t: &TensorExpr, x: &NCExpr) -> Result<Tensor3> {
        same_alphabet(&t.alphabet, &x.alphabet)?;
        let mut r = Tensor3::zero(&t.alphabet);
        for ((u, v), a) in t.terms() {
            for (w, b) in x.terms() {
                r.add_term(u.clone(), v.clone(), w.clone(), a * b);
            }
        }
        Ok(r)
    }

    /// `x ⊗ t` reassociated into triples.
    pub fn right_nested(x: &NCExpr, t: &TensorExpr) -> Result<Tensor3> {
        same_alphabet(&t.alphabet, &x.alphabet)?;
        let mut r = Tensor3::zero(&t.alphabet);
        for (u, a) in x.terms() {
            for ((v, w), b) in t.terms() {
                r.add_term(u.clone(), v.clone(), w.clone(), a * b);
            }
        }
        Ok(r)
    }

    pub fn checked_sub(&self, o: &Tensor3) -> Result<Tensor3> {
        same_alphabet(&self.alphabet, &o.alphabet)?;
        let mut r = self.clone();
        for (k, c) in &o.terms {
            accumulate(&mut r.terms, k.clone(), -c);
        }
        Ok(r)
    }

    pub fn text(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let zu = NCExpr::zero(&self.alphabet);
        self.terms
            .iter()
            .map(|((u, v, w), c)| {
                format!("({})*[{} ⊗ {} ⊗ {}]", c, zu.word_text(u), zu.word_text(v), zu.word_text(w))
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// Targets of algebra homomorphisms out of a free algebra.
pub trait AlgebraTarget: Clone {
    fn target_mul(&self, o: &Self) -> Result<Self>;
    fn target_add_scaled(&mut self, o: &Self, c: &Scalar) -> Result<()>;
    fn target_zero(&self) -> Self;
}

impl AlgebraTarget for NCExpr {
    fn target_mul(&self, o: &Self) -> Result<Self> {
        self.checked_mul(o)
    }
    fn target_add_scaled(&mut self, o: &Self, c: &Scalar) -> Result<()> {
        same_alphabet(&self.alphabet, &o.alphabet)?;
        for (w, x) in &o.terms {
            accumulate(&mut self.terms, w.clone(), x * c);
        }
        Ok(())
    }
    fn target_zero(&self) -> Self {
        NCExpr::zero(&self.alphabet)
    }
}

impl AlgebraTarget for TensorExpr {
    fn target_mul(&self, o: &Self) -> Result<Self> {
        self.checked_mul(o)
    }
    fn target_add_scaled(&mut self, o: &Self, c: &Scalar) -> Result<()> {
        same_alphabet(&self.alphabet, &o.alphabet)?;
        for (k, x) in &o.terms {
            accumulate(&mut self.terms, k.clone(), x * c);
        }
        Ok(())
    }
    fn target_zero(&self) -> Self {
        TensorExpr::zero(&self.alphabet)
    }
}

impl AlgebraTarget for Scalar {
    fn target_mul(&self, o: &Self) -> Result<Self> {
        Ok(self * o)
    }
    fn target_add_scaled(&mut self, o: &Self, c: &Scalar) -> Result<()> {
        *self = &*self + &(o * c);
        Ok(())
    }
    fn target_zero(&self) -> Self {
        Scalar::zero()
    }
}

fn image<'a, T>(images: &'a HashMap<Gen, T>, x: &NCExpr, g: Gen) -> Result<&'a T> {
    images.get(&g).ok_or_else(|| Error::MissingImage(x.alphabet.name_of(g).to_string()))
}

/// Extends generator images to the unique unital algebra map on the free algebra.
pub fn extend_hom<T: AlgebraTarget>(images: &HashMap<Gen, T>, unit: &T, x: &NCExpr) -> Result<T> {
    let mut acc = unit.target_zero();
    for (w, c) in x.terms() {
        let mut prod = unit.clone();
        for g in w.letters() {
            prod = prod.target_mul(image(images, x, *g)?)?;
        }
        acc.target_add_scaled(&prod, c)?;
    }
    Ok(acc)
}

/// Anti-multiplicative extension: `g1 g2 ... gk -> f(gk) ... f(g1)`.
pub fn extend_antihom<T: AlgebraTarget>(images: &HashMap<Gen, T>, unit: &T, x: &NCExpr) -> Result<T> {
    let mut acc = unit.target_zero();
    for (w, c) in x.terms() {
        let mut prod = unit.clone();
        for g in w.letters().iter().rev() {
            prod = prod.target_mul(image(images, x, *g)?)?;
        }
        acc.target_add_scaled(&prod, c)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn osp() -> Arc<Alphabet> {
        Alphabet::new("free5", &["A+", "A-", "K", "Kinv", "P"])
    }

    #[test]
    fn unit_law_and_free_product() {
        let a = osp();
        let x = NCExpr::gen(&a, "A+");
        assert_eq!(&NCExpr::one(&a) * &x, x);
        let p = &x * &NCExpr::gen(&a, "A-");
        assert_eq!(p.num_terms(), 1);
        assert_eq!(p.coefficient(&Word::from_slice(&[0, 1])), Scalar::one());
    }

    #[test]
    fn bilinearity() {
        let a = osp();
        let x = NCExpr::gen(&a, "A+").scale(&Scalar::from_int(2));
        let y = NCExpr::gen(&a, "K").scale(&Scalar::from_int(3));
        let p = &x * &y;
        assert_eq!(p.coefficient(&Word::from_slice(&[0, 2])), Scalar::from_int(6));
    }

    #[test]
    fn alphabet_mismatch() {
        let a = osp();
        let b = Alphabet::new("other", &["x"]);
        let r = NCExpr::gen(&a, "A+").checked_mul(&NCExpr::gen(&b, "x"));
        assert!(matches!(r, Err(Error::AlphabetMismatch(_, _))));
    }

    #[test]
    fn length_lex_order() {
        let w1 = Word::from_slice(&[4]);
        let w2 = Word::from_slice(&[0, 0]);
        assert!(w1 < w2);
        assert!(Word::from_slice(&[0, 1]) < Word::from_slice(&[1, 0]));
    }

    #[test]
    fn brackets() {
        let a = osp();
        let x = NCExpr::gen(&a, "A+");
        let y = NCExpr::gen(&a, "A-");
        assert!(bracket(BracketKind::Commutator, &x, &x).unwrap().is_zero());
        let ac = bracket(BracketKind::Anticommutator, &x, &y).unwrap();
        assert_eq!(ac, &(&x * &y) + &(&y * &x));
    }

    #[test]
    fn tensor_product_has_no_sign_rule() {
        let a = osp();
        let p = NCExpr::gen(&a, "P");
        let pp = TensorExpr::pure(&p, &p).unwrap();
        let sq = pp.checked_mul(&pp).unwrap();
        assert_eq!(sq, TensorExpr::pure(&(&p * &p), &(&p * &p)).unwrap());
        assert_eq!(TensorExpr::one(&a).checked_mul(&pp).unwrap(), pp);
    }

    #[test]
    fn tensor_square_of_coproduct_term() {
        let a = osp();
        let ap = NCExpr::gen(&a, "A+");
        let kp = &NCExpr::gen(&a, "K") * &NCExpr::gen(&a, "P");
        let one = NCExpr::one(&a);
        let lhs = TensorExpr::pure(&ap, &kp).unwrap().checked_mul(&TensorExpr::pure(&one, &ap).unwrap()).unwrap();
        assert_eq!(lhs, TensorExpr::pure(&ap, &(&kp * &ap)).unwrap());
    }

    #[test]
    fn homomorphism_extension() {
        let a = osp();
        let k = a.gen("K");
        let mut images = HashMap::new();
        images.insert(k, TensorExpr::pure(&NCExpr::gen(&a, "K"), &NCExpr::gen(&a, "K")).unwrap());
        let kk = &NCExpr::gen(&a, "K") * &NCExpr::gen(&a, "K");
        let got = extend_hom(&images, &TensorExpr::one(&a), &kk).unwrap();
        let dk = &images[&k];
        assert_eq!(got, dk.checked_mul(dk).unwrap());
        let unit = extend_hom(&images, &TensorExpr::one(&a), &NCExpr::one(&a)).unwrap();
        assert_eq!(unit, TensorExpr::one(&a));
        let missing = extend_hom(&images, &TensorExpr::one(&a), &NCExpr::gen(&a, "P"));
        assert_eq!(missing, Err(Error::MissingImage("P".into())));
    }

    #[test]
    fn antihomomorphism_reverses() {
        let a = osp();
        let mut images = HashMap::new();
        images.insert(a.gen("A+"), NCExpr::gen(&a, "K"));
        images.insert(a.gen("A-"), NCExpr::gen(&a, "P"));
        let x = &NCExpr::gen(&a, "A+") * &NCExpr::gen(&a, "A-");
        let got = extend_antihom(&images, &NCExpr::one(&a), &x).unwrap();
        assert_eq!(got, &NCExpr::gen(&a, "P") * &NCExpr::gen(&a, "K"));
    }
}
