//! Coproduct, counit and antipode of osp_q(1|2) with the grade involution.
//!
//! Tensors multiply componentwise, `(a ⊗ b)(c ⊗ d) = ac ⊗ bd`, without any
//! Koszul sign: the involution P already carries the grading.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use crate::catalog;
use crate::error::{Error, Result};
use crate::ncalg::{extend_antihom, extend_hom, Gen, NCExpr, Tensor3, TensorExpr, Word};
use crate::presentations::{self, parse_in};
use crate::rewrite::{Presentation, Reducer};
use crate::scalars::Scalar;

#[derive(Debug)]
pub struct HopfData {
    pub presentation: Arc<Presentation>,
    pub coproduct_images: HashMap<Gen, TensorExpr>,
    pub counit_images: HashMap<Gen, Scalar>,
    pub antipode_images: HashMap<Gen, NCExpr>,
}

/// Structure maps on the generators of `ospq`.
pub fn hopf_data() -> &'static HopfData {
    static DATA: OnceLock<HopfData> = OnceLock::new();
    DATA.get_or_init(|| {
        let p = presentations::ospq();
        let e = |t: &str| parse_in(&p, t).expect("builtin image");
        let tensor = |pairs: &[(&str, &str)]| {
            pairs.iter().fold(TensorExpr::zero(p.alphabet()), |acc, (l, r)| {
                acc.checked_add(&TensorExpr::pure(&e(l), &e(r)).unwrap()).unwrap()
            })
        };
        let g = |n: &str| p.alphabet().gen(n);
        let coproduct_images = HashMap::from([
            (g("A+"), tensor(&[("A+", "K*P"), ("1", "A+")])),
            (g("A-"), tensor(&[("A-", "P"), ("Kinv", "A-")])),
            (g("K"), tensor(&[("K", "K")])),
            // forced by Δ(K)Δ(K^-1) = 1 ⊗ 1
            (g("Kinv"), tensor(&[("Kinv", "Kinv")])),
            (g("P"), tensor(&[("P", "P")])),
        ]);
        let counit_images = HashMap::from([
            (g("A+"), Scalar::zero()),
            (g("A-"), Scalar::zero()),
            (g("K"), Scalar::one()),
            (g("Kinv"), Scalar::one()),
            (g("P"), Scalar::one()),
        ]);
        let antipode_images = HashMap::from([
            (g("A+"), e("-A+*Kinv*P")),
            (g("A-"), e("-K*A-*P")),
            (g("K"), e("Kinv")),
            (g("Kinv"), e("K")),
            (g("P"), e("P")),
        ]);
        HopfData { presentation: p, coproduct_images, counit_images, antipode_images }
    })
}

/// Moves `x` onto the `ospq` alphabet by generator name.
fn on_ospq(x: &NCExpr) -> Result<NCExpr> {
    let p = &hopf_data().presentation;
    let target = p.alphabet();
    if x.alphabet().as_ref() == target.as_ref() {
        return Ok(x.clone());
    }
    let map = x
        .alphabet()
        .generators()
        .filter_map(|g| target.index_of(x.alphabet().name_of(g)).map(|h| (g, h)))
        .collect();
    x.rename(target, &map)
}

pub fn coproduct(x: &NCExpr) -> Result<TensorExpr> {
    let d = hopf_data();
    let x = on_ospq(x)?;
    extend_hom(&d.coproduct_images, &TensorExpr::one(d.presentation.alphabet()), &x)
}

pub fn counit(x: &NCExpr) -> Result<Scalar> {
    let d = hopf_data();
    extend_hom(&d.counit_images, &Scalar::one(), &on_ospq(x)?)
}

pub fn antipode(x: &NCExpr) -> Result<NCExpr> {
    let d = hopf_data();
    extend_antihom(&d.antipode_images, &NCExpr::one(d.presentation.alphabet()), &on_ospq(x)?)
}

/// Counit as "drop A±, send K, K^-1, P to 1" applied to the normal form.
pub fn counit_via_normal_form(x: &NCExpr) -> Result<Scalar> {
    let p = &hopf_data().presentation;
    let nf = crate::rewrite::normal_form(&on_ospq(x)?, p)?;
    let odd = [p.alphabet().gen("A+"), p.alphabet().gen("A-")];
    let mut acc = Scalar::zero();
    for (w, c) in nf.terms() {
        if !w.letters().iter().any(|g| odd.contains(g)) {
            acc = &acc + c;
        }
    }
    Ok(acc)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AxiomFamily {
    CoproductRelations,
    Coassociativity,
    Counit,
    Antipode,
    CounitRelations,
    EquitableCoproduct,
}

impl AxiomFamily {
    pub fn key(self) -> &'static str {
        match self {
            AxiomFamily::CoproductRelations => "coproduct_relation",
            AxiomFamily::Coassociativity => "coassociativity",
            AxiomFamily::Counit => "counit",
            AxiomFamily::Antipode => "antipode",
            AxiomFamily::CounitRelations => "counit_relation",
            AxiomFamily::EquitableCoproduct => "equitable_coproduct",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct AxiomCheck {
    pub family: AxiomFamily,
    pub label: String,
    pub holds: bool,
    /// Text of the reduced difference; "0" when the axiom holds.
    pub residual: String,
}

impl AxiomCheck {
    pub fn id(&self) -> String {
        format!("hopf.{}.{}", self.family.key(), self.label)
    }
}

fn relation_label(p: &Presentation, k: usize) -> String {
    let (a, b) = p.rules()[k].lhs;
    format!("{}{}", p.alphabet().name_of(a), p.alphabet().name_of(b))
}

/// `(Δ ⊗ id)` applied to a tensor.
fn coproduct_left(t: &TensorExpr) -> Result<Tensor3> {
    let alpha = t.alphabet();
    let mut out = Tensor3::zero(alpha);
    for ((u, v), c) in t.terms() {
        let du = coproduct(&NCExpr::word(alpha, u.clone(), c.clone()))?;
        for ((a, b), x) in du.terms() {
            out.add_term(a.clone(), b.clone(), v.clone(), x.clone());
        }
    }
    Ok(out)
}

/// `(id ⊗ Δ)` applied to a tensor.
fn coproduct_right(t: &TensorExpr) -> Result<Tensor3> {
    let alpha = t.alphabet();
    let mut out = Tensor3::zero(alpha);
    for ((u, v), c) in t.terms() {
        let dv = coproduct(&NCExpr::word(alpha, v.clone(), c.clone()))?;
        for ((a, b), x) in dv.terms() {
            out.add_term(u.clone(), a.clone(), b.clone(), x.clone());
        }
    }
    Ok(out)
}

fn word(t: &TensorExpr, w: &Word) -> NCExpr {
    NCExpr::word(t.alphabet(), w.clone(), Scalar::one())
}

/// Which side a counit or antipode axiom is checked on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Left,
    Right,
}

/// One instance of an axiom: a relation index, a generator, or an equitable
/// generator name depending on the family.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AxiomInstance {
    Relation(usize),
    Generator(Gen, Option<Side>),
    Equitable(String),
}

/// Every axiom instance checked by [`check_hopf_axioms`].
pub fn axiom_instances() -> Vec<(AxiomFamily, AxiomInstance)> {
    let p = &hopf_data().presentation;
    let mut out = Vec::new();
    for k in 0..p.rules().len() {
        out.push((AxiomFamily::CoproductRelations, AxiomInstance::Relation(k)));
        out.push((AxiomFamily::CounitRelations, AxiomInstance::Relation(k)));
    }
    for g in p.alphabet().generators() {
        out.push((AxiomFamily::Coassociativity, AxiomInstance::Generator(g, None)));
        for side in [Side::Left, Side::Right] {
            out.push((AxiomFamily::Counit, AxiomInstance::Generator(g, Some(side))));
            out.push((AxiomFamily::Antipode, AxiomInstance::Generator(g, Some(side))));
        }
    }
    for name in ["X", "Y", "Z", "wy"] {
        out.push((AxiomFamily::EquitableCoproduct, AxiomInstance::Equitable(name.to_string())));
    }
    out
}

pub fn instance_label(inst: &AxiomInstance) -> String {
    let p = &hopf_data().presentation;
    match inst {
        AxiomInstance::Relation(k) => relation_label(p, *k),
        AxiomInstance::Generator(g, None) => p.alphabet().name_of(*g).to_string(),
        AxiomInstance::Generator(g, Some(Side::Left)) => format!("{}.left", p.alphabet().name_of(*g)),
        AxiomInstance::Generator(g, Some(Side::Right)) => format!("{}.right", p.alphabet().name_of(*g)),
        AxiomInstance::Equitable(n) => n.clone(),
    }
}

/// Checks one axiom instance with all tensor slots in normal form.
pub fn check_axiom(family: AxiomFamily, inst: &AxiomInstance) -> Result<AxiomCheck> {
    let d = hopf_data();
    let p = &d.presentation;
    let alpha = p.alphabet();
    let mut red = Reducer::new(p);
    let (holds, residual) = match (family, inst) {
        (AxiomFamily::CoproductRelations, AxiomInstance::Relation(k)) => {
            let r = red.reduce_tensor(&coproduct(&p.relations()[*k])?)?;
            (r.is_zero(), r.text())
        }
        (AxiomFamily::CounitRelations, AxiomInstance::Relation(k)) => {
            let e = counit(&p.relations()[*k])?;
            (e.is_zero(), e.to_string())
        }
        (AxiomFamily::Coassociativity, AxiomInstance::Generator(g, _)) => {
            let dg = coproduct(&NCExpr::generator(alpha, *g))?;
            let r = red.reduce_tensor3(&coproduct_left(&dg)?.checked_sub(&coproduct_right(&dg)?)?)?;
            (r.is_zero(), r.text())
        }
        (AxiomFamily::Counit, AxiomInstance::Generator(g, side)) => {
            let x = NCExpr::generator(alpha, *g);
            let dg = coproduct(&x)?;
            let mut acc = NCExpr::zero(alpha);
            for ((u, v), c) in dg.terms() {
                let (kept, dropped) = if *side == Some(Side::Left) { (v, u) } else { (u, v) };
                acc = &acc + &word(&dg, kept).scale(&(c * &counit(&word(&dg, dropped))?));
            }
            let r = red.reduce(&(&acc - &x))?;
            (r.is_zero(), r.to_string())
        }
        (AxiomFamily::Antipode, AxiomInstance::Generator(g, side)) => {
            let x = NCExpr::generator(alpha, *g);
            let dg = coproduct(&x)?;
            let unit = NCExpr::scalar(alpha, counit(&x)?);
            let mut acc = NCExpr::zero(alpha);
            for ((u, v), c) in dg.terms() {
                let term = if *side == Some(Side::Left) {
                    &antipode(&word(&dg, u))? * &word(&dg, v)
                } else {
                    &word(&dg, u) * &antipode(&word(&dg, v))?
                };
                acc = &acc + &term.scale(c);
            }
            let r = red.reduce(&(&acc - &unit))?;
            (r.is_zero(), r.to_string())
        }
        (AxiomFamily::EquitableCoproduct, AxiomInstance::Equitable(name)) => {
            let want = equitable_coproducts()?
                .into_iter()
                .find(|(n, _)| n == name)
                .map(|(_, t)| t)
                .ok_or_else(|| Error::UnknownElement(name.clone()))?;
            let x = &catalog::element_in("ospq", name)?.expr;
            let r = red.reduce_tensor(&coproduct(x)?.checked_sub(&want)?)?;
            (r.is_zero(), r.text())
        }
        _ => return Err(Error::InvalidPresentation(format!("no {} axiom for {:?}", family.key(), inst))),
    };
    Ok(AxiomCheck {
        family,
        label: instance_label(inst),
        holds,
        residual: if holds { "0".into() } else { residual },
    })
}

/// Verifies the Hopf algebra axioms generator by generator and relation by
/// relation.
pub fn check_hopf_axioms() -> Result<Vec<AxiomCheck>> {
    axiom_instances().iter().map(|(f, i)| check_axiom(*f, i)).collect()
}

/// The displayed coproducts of the equitable generators.
pub fn equitable_coproducts() -> Result<Vec<(String, TensorExpr)>> {
    let el = |n: &str| catalog::element_in("ospq", n).map(|e| e.expr.clone());
    let one = NCExpr::one(presentations::ospq().alphabet());
    let (x, y, yinv, z, wy) = (el("X")?, el("Y")?, el("Yinv")?, el("Z")?, el("wy")?);
    let split = |g: &NCExpr| -> Result<TensorExpr> {
        TensorExpr::pure(g, &one)?.checked_add(&TensorExpr::pure(&yinv, &(g - &one))?)
    };
    Ok(vec![
        ("X".to_string(), split(&x)?),
        ("Y".to_string(), TensorExpr::pure(&y, &y)?),
        ("Z".to_string(), split(&z)?),
        ("wy".to_string(), TensorExpr::pure(&wy, &wy)?),
    ])
}
