//! Oriented two-letter rewrite systems and PBW normal forms.
//!
//! Every rule rewrites an adjacent pair of generators into a combination of
//! words that are strictly smaller in the length-lexicographic order. That
//! order is compatible with concatenation and well-founded, so reduction
//! terminates for every presentation accepted by [`Presentation::new`].

use std::collections::{BTreeMap, HashMap};
use std::rc::Rc;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::ncalg::{Alphabet, Gen, NCExpr, TensorExpr, Tensor3, Word};
use crate::scalars::Scalar;

/// Default cap on rule applications per normal-form computation.
pub const DEFAULT_STEP_LIMIT: usize = 1_000_000;

/// Nesting bound for the reducer's recursion; exceeding it is reported as a
/// step-limit failure.
const MAX_DEPTH: usize = 2_000;

/// The step limit, overridable through `QKERNEL_STEP_LIMIT`.
pub fn default_step_limit() -> usize {
    static LIMIT: OnceLock<usize> = OnceLock::new();
    *LIMIT.get_or_init(|| {
        std::env::var("QKERNEL_STEP_LIMIT")
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .unwrap_or(DEFAULT_STEP_LIMIT)
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct RewriteRule {
    pub lhs: (Gen, Gen),
    pub rhs: NCExpr,
}

impl RewriteRule {
    pub fn lhs_word(&self) -> Word {
        Word::from_slice(&[self.lhs.0, self.lhs.1])
    }
}

#[derive(Debug, Clone)]
pub struct Presentation {
    name: String,
    alphabet: Arc<Alphabet>,
    rules: Vec<RewriteRule>,
    inverses: Vec<(Gen, Gen)>,
    table: Vec<Option<usize>>,
    step_limit: usize,
}

impl Presentation {
    /// Validates and indexes a rule set.
    ///
    /// Rejects duplicate left-hand sides and rules whose right-hand side is
    /// not strictly below the left-hand side. A non-empty rule set must also
    /// reorder every descending adjacent pair of generators.
    pub fn new(
        name: impl Into<String>,
        alphabet: Arc<Alphabet>,
        rules: Vec<RewriteRule>,
        inverses: Vec<(Gen, Gen)>,
    ) -> Result<Presentation> {
        let name = name.into();
        let n = alphabet.len();
        let mut table = vec![None; n * n];
        for (k, r) in rules.iter().enumerate() {
            if r.rhs.alphabet().as_ref() != alphabet.as_ref() {
                return Err(Error::AlphabetMismatch(
                    alphabet.name().to_string(),
                    r.rhs.alphabet().name().to_string(),
                ));
            }
            let (a, b) = r.lhs;
            let slot = &mut table[a as usize * n + b as usize];
            if slot.is_some() {
                return Err(Error::InvalidPresentation(format!(
                    "duplicate rule for {}*{}",
                    alphabet.name_of(a),
                    alphabet.name_of(b)
                )));
            }
            *slot = Some(k);
            let lhs = r.lhs_word();
            if let Some((w, _)) = r.rhs.terms().find(|(w, _)| **w >= lhs) {
                return Err(Error::InvalidPresentation(format!(
                    "rule for {}*{} produces the non-smaller word {}",
                    alphabet.name_of(a),
                    alphabet.name_of(b),
                    r.rhs.word_text(w)
                )));
            }
        }
        if !rules.is_empty() {
            for a in alphabet.generators() {
                for b in alphabet.generators() {
                    if a > b && table[a as usize * n + b as usize].is_none() {
                        return Err(Error::InvalidPresentation(format!(
                            "no rule reorders {}*{}",
                            alphabet.name_of(a),
                            alphabet.name_of(b)
                        )));
                    }
                }
            }
        }
        Ok(Presentation { name, alphabet, rules, inverses, table, step_limit: default_step_limit() })
    }

    /// A presentation with no relations.
    pub fn free(name: impl Into<String>, alphabet: Arc<Alphabet>, inverses: Vec<(Gen, Gen)>) -> Presentation {
        Presentation::new(name, alphabet, vec![], inverses).expect("free presentation is valid")
    }

    pub fn with_step_limit(mut self, limit: usize) -> Presentation {
        self.step_limit = limit;
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn rules(&self) -> &[RewriteRule] {
        &self.rules
    }

    pub fn inverses(&self) -> &[(Gen, Gen)] {
        &self.inverses
    }

    pub fn step_limit(&self) -> usize {
        self.step_limit
    }

    pub fn rule_for(&self, a: Gen, b: Gen) -> Option<&RewriteRule> {
        let n = self.alphabet.len();
        self.table[a as usize * n + b as usize].map(|k| &self.rules[k])
    }

    /// Each rule as the relation `lhs - rhs`, which must vanish in the algebra.
    pub fn relations(&self) -> Vec<NCExpr> {
        self.rules
            .iter()
            .map(|r| {
                let lhs = NCExpr::word(&self.alphabet, r.lhs_word(), Scalar::one());
                &lhs - &r.rhs
            })
            .collect()
    }

    pub fn is_normal_word(&self, w: &Word) -> bool {
        w.letters().windows(2).all(|p| self.rule_for(p[0], p[1]).is_none())
    }

    pub fn generator(&self, name: &str) -> NCExpr {
        NCExpr::gen(&self.alphabet, name)
    }
}

type Terms = Rc<Vec<(Word, Scalar)>>;

/// Normal-form engine with a memo table of `(normal word, letter)` products.
///
/// A reducer may be reused across calls on the same presentation; the step
/// budget applies to each call separately.
pub struct Reducer<'p> {
    p: &'p Presentation,
    cache: HashMap<(Word, Gen), Terms>,
    steps: usize,
    depth: usize,
}

impl<'p> Reducer<'p> {
    pub fn new(p: &'p Presentation) -> Reducer<'p> {
        Reducer { p, cache: HashMap::new(), steps: 0, depth: 0 }
    }

    pub fn presentation(&self) -> &Presentation {
        self.p
    }

    /// Multiplies a normal word by one generator on the right and reduces.
    fn append(&mut self, u: &Word, g: Gen) -> Result<Terms> {
        let rule = match u.letters().last() {
            Some(&last) => self.p.rule_for(last, g),
            None => None,
        };
        let Some(rule) = rule else {
            let mut w = u.clone();
            w.0.push(g);
            return Ok(Rc::new(vec![(w, Scalar::one())]));
        };
        let key = (u.clone(), g);
        if let Some(t) = self.cache.get(&key) {
            return Ok(t.clone());
        }
        self.steps += 1;
        if self.steps > self.p.step_limit || self.depth > MAX_DEPTH {
            return Err(Error::StepLimitExceeded(self.p.step_limit));
        }
        self.depth += 1;
        let prefix = Word::from_slice(&u.letters()[..u.len() - 1]);
        let mut acc: BTreeMap<Word, Scalar> = BTreeMap::new();
        for (t, c) in rule.rhs.terms() {
            let mut cur: BTreeMap<Word, Scalar> = BTreeMap::new();
            cur.insert(prefix.clone(), c.clone());
            for &letter in t.letters() {
                let mut next: BTreeMap<Word, Scalar> = BTreeMap::new();
                for (v, cv) in &cur {
                    for (v2, c2) in self.append(v, letter)?.iter() {
                        add_into(&mut next, v2.clone(), cv * c2);
                    }
                }
                cur = next;
            }
            for (v, cv) in cur {
                add_into(&mut acc, v, cv);
            }
        }
        self.depth -= 1;
        let out: Terms = Rc::new(acc.into_iter().collect());
        self.cache.insert(key, out.clone());
        Ok(out)
    }

    fn reduce_word(&mut self, w: &Word) -> Result<BTreeMap<Word, Scalar>> {
        let mut cur: BTreeMap<Word, Scalar> = BTreeMap::new();
        cur.insert(Word::empty(), Scalar::one());
        for &g in w.letters() {
            let mut next = BTreeMap::new();
            for (v, cv) in &cur {
                for (v2, c2) in self.append(v, g)?.iter() {
                    add_into(&mut next, v2.clone(), cv * c2);
                }
            }
            cur = next;
        }
        Ok(cur)
    }

    pub fn reduce(&mut self, x: &NCExpr) -> Result<NCExpr> {
        if x.alphabet().as_ref() != self.p.alphabet.as_ref() {
            return Err(Error::AlphabetMismatch(
                self.p.alphabet.name().to_string(),
                x.alphabet().name().to_string(),
            ));
        }
        self.steps = 0;
        self.depth = 0;
        let mut out = NCExpr::zero(&self.p.alphabet);
        // Group by word so each distinct word is reduced once.
        for (w, c) in x.terms() {
            if self.p.is_normal_word(w) {
                out.add_term(w.clone(), c.clone());
                continue;
            }
            for (v, cv) in self.reduce_word(w)? {
                out.add_term(v, c * &cv);
            }
        }
        Ok(out)
    }

    /// Slot-wise reduction of a tensor.
    pub fn reduce_tensor(&mut self, t: &TensorExpr) -> Result<TensorExpr> {
        let mut out = TensorExpr::zero(t.alphabet());
        let mut memo: HashMap<Word, BTreeMap<Word, Scalar>> = HashMap::new();
        for ((u, v), c) in t.terms() {
            let nu = self.reduce_cached(u, &mut memo)?;
            let nv = self.reduce_cached(v, &mut memo)?;
            for (a, ca) in &nu {
                for (b, cb) in &nv {
                    out.add_term(a.clone(), b.clone(), &(c * ca) * cb);
                }
            }
        }
        Ok(out)
    }

    pub fn reduce_tensor3(&mut self, t: &Tensor3) -> Result<Tensor3> {
        let mut out = Tensor3::zero(t.alphabet());
        let mut memo: HashMap<Word, BTreeMap<Word, Scalar>> = HashMap::new();
        for ((u, v, w), c) in t.terms() {
            let nu = self.reduce_cached(u, &mut memo)?;
            let nv = self.reduce_cached(v, &mut memo)?;
            let nw = self.reduce_cached(w, &mut memo)?;
            for (a, ca) in &nu {
                for (b, cb) in &nv {
                    let cab = &(c * ca) * cb;
                    for (d, cd) in &nw {
                        out.add_term(a.clone(), b.clone(), d.clone(), &cab * cd);
                    }
                }
            }
        }
        Ok(out)
    }

    fn reduce_cached(
        &mut self,
        w: &Word,
        memo: &mut HashMap<Word, BTreeMap<Word, Scalar>>,
    ) -> Result<BTreeMap<Word, Scalar>> {
        if let Some(r) = memo.get(w) {
            return Ok(r.clone());
        }
        self.steps = 0;
        self.depth = 0;
        let r = self.reduce_word(w)?;
        memo.insert(w.clone(), r.clone());
        Ok(r)
    }
}

fn add_into(map: &mut BTreeMap<Word, Scalar>, w: Word, c: Scalar) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match map.entry(w) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            let s = o.get() + &c;
            if s.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = s;
            }
        }
    }
}

pub fn normal_form(x: &NCExpr, p: &Presentation) -> Result<NCExpr> {
    Reducer::new(p).reduce(x)
}

#[derive(Clone, Debug, PartialEq)]
pub struct IdentityCheck {
    pub holds: bool,
    /// Normal form of `lhs - rhs`; zero when the identity holds.
    pub residual: NCExpr,
}

pub fn check_identity(lhs: &NCExpr, rhs: &NCExpr, p: &Presentation) -> Result<IdentityCheck> {
    let residual = normal_form(&lhs.checked_sub(rhs)?, p)?;
    Ok(IdentityCheck { holds: residual.is_zero(), residual })
}

/// True iff `x` commutes with every generator modulo the relations.
pub fn is_central(x: &NCExpr, p: &Presentation) -> Result<bool> {
    let mut red = Reducer::new(p);
    for g in p.alphabet.generators() {
        let gen = NCExpr::generator(&p.alphabet, g);
        let c = x.checked_mul(&gen)?.checked_sub(&gen.checked_mul(x)?)?;
        if !red.reduce(&c)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Debug)]
pub struct CriticalPair {
    pub overlap: Word,
    pub branch1: NCExpr,
    pub branch2: NCExpr,
    pub joinable: bool,
}

/// Resolves every overlap `abc` of rules `ab -> r1` and `bc -> r2`.
pub fn local_confluence_report(p: &Presentation) -> Result<Vec<CriticalPair>> {
    let alpha = &p.alphabet;
    let mut red = Reducer::new(p);
    let mut out = Vec::new();
    for r1 in &p.rules {
        for r2 in &p.rules {
            if r1.lhs.1 != r2.lhs.0 {
                continue;
            }
            let (a, b, c) = (r1.lhs.0, r1.lhs.1, r2.lhs.1);
            let left = r1.rhs.checked_mul(&NCExpr::generator(alpha, c))?;
            let right = NCExpr::generator(alpha, a).checked_mul(&r2.rhs)?;
            let branch1 = red.reduce(&left)?;
            let branch2 = red.reduce(&right)?;
            let joinable = branch1 == branch2;
            out.push(CriticalPair { overlap: Word::from_slice(&[a, b, c]), branch1, branch2, joinable });
        }
    }
    Ok(out)
}
