//! Named elements and the identity inventory.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock};

use crate::dsl::{parse_with, Resolver};
use crate::error::{Error, Result};
use crate::ncalg::{Alphabet, Gen, NCExpr};
use crate::presentations::{self, by_name};
use crate::rewrite::{normal_form, Presentation};
use crate::scalars::{Bindings, Scalar, Symbol};

/// (presentation, name, definition). Later entries may use earlier names.
const DEFINITIONS: &[(&str, &str, &str)] = &[
    ("ospq", "S", "A+*A- - (s^-1*K - s*Kinv)/(s^2 - s^-2)"),
    ("ospq", "Q", "S*P"),
    ("ospq", "Ups", "(q - q^-1)*Q"),
    ("ospq", "X", "Kinv*P - (1 - q^-1)*A+*Kinv*P"),
    ("ospq", "Y", "K*P"),
    ("ospq", "Yinv", "Kinv*P"),
    ("ospq", "Z", "Kinv*P + (s + s^-1)*A-*P"),
    ("ospq", "wy", "P"),
    ("ospq", "Ups1", "s*X - s^-1*Y + s*Z - s*X*Y*Z"),
    ("ospq", "Ups2", "s*Y - s^-1*Z + s*X - s*Y*Z*X"),
    ("ospq", "Ups3", "s*Z - s^-1*X + s*Y - s*Z*X*Y"),
    ("ospq", "Ups4", "s*Y - s^-1*Z - s^-1*X + s^-1*Z*Y*X"),
    ("ospq", "Ups5", "s*Z - s^-1*X - s^-1*Y + s^-1*X*Z*Y"),
    ("ospq", "Ups6", "s*X - s^-1*Y - s^-1*Z + s^-1*Y*X*Z"),
    ("ospq", "Ap_eq", "(1 - X*Y)/(1 - q^-1)"),
    ("ospq", "Am_eq", "(Z - Yinv)*wy/(s + s^-1)"),
    ("ospq", "K_eq", "Y*wy"),
    ("ospq", "Kinv_eq", "Yinv*wy"),
    ("ospq", "P_eq", "wy"),
    ("ospq", "kt", "K*P"),
    ("ospq", "ktinv", "Kinv*P"),
    ("ospq", "Jt_plus", "(1/i)*((1 - q^-1)/(s + s^-1))*A+"),
    ("ospq", "Jt_minus", "((s + s^-1)/(1 + q^-1))*A-*P"),
    ("ospq", "Acov", "a*X - a^-1*Y + b*c^-1*(X*Y - Y*X)/(s + s^-1)"),
    ("ospq", "Bcov", "b*Y - b^-1*Z + c*a^-1*(Y*Z - Z*Y)/(s + s^-1)"),
    ("ospq", "Ccov", "c*Z - c^-1*X + a*b^-1*(Z*X - X*Z)/(s + s^-1)"),
    ("ospq", "M1", "Acov/(q - q^-1)"),
    ("ospq", "M2", "Bcov/(q - q^-1)"),
    ("ospq", "M3", "Ccov/(q - q^-1)"),
    ("ospq", "m1", "(s + s^-1)*((b - b^-1)*(c - c^-1) - (a - a^-1)*Ups)/(q - q^-1)^2"),
    ("ospq", "m2", "(s + s^-1)*((c - c^-1)*(a - a^-1) - (b - b^-1)*Ups)/(q - q^-1)^2"),
    ("ospq", "m3", "(s + s^-1)*((a - a^-1)*(b - b^-1) - (c - c^-1)*Ups)/(q - q^-1)^2"),
    (
        "ospq",
        "Lam_real",
        "(s^-1 - s^3)*M1*M2*M3 + q*M1^2 + q^-1*M2^2 + q*M3^2 \
         - (1 - q)*m1*M1 - (1 - q^-1)*m2*M2 - (1 - q)*m3*M3",
    ),
    (
        "ospq",
        "Lam_value",
        "(a - a^-1)*(b - b^-1)*(c - c^-1)*Ups/(q - q^-1)^2 \
         + ((a - a^-1)/(q - q^-1))^2 + ((b - b^-1)/(q - q^-1))^2 + ((c - c^-1)/(q - q^-1))^2 \
         + (Ups/(q - q^-1))^2 - q/(1 + q)^2",
    ),
    ("slq", "x", "kappainv - (s - s^-1)*J+*kappainv"),
    ("slq", "y", "kappa"),
    ("slq", "yinv", "kappainv"),
    ("slq", "z", "kappainv + (1 - q^-1)*J-"),
    ("slq_omega", "x", "kappainv - (s - s^-1)*J+*kappainv"),
    ("slq_omega", "y", "kappa"),
    ("slq_omega", "yinv", "kappainv"),
    ("slq_omega", "z", "kappainv + (1 - q^-1)*J-"),
    (
        "qbi",
        "Lam",
        "(s^-1 - s^3)*I1*I2*I3 + q*I1^2 + q^-1*I2^2 + q*I3^2 \
         - (1 - q)*iota1*I1 - (1 - q^-1)*iota2*I2 - (1 - q)*iota3*I3",
    ),
    ("bi", "L", "K1^2 + K2^2 + K3^2"),
];

#[derive(Debug)]
pub struct NamedElement {
    pub name: String,
    /// The defining expression, expanded in generators but not reduced.
    pub expr: NCExpr,
    pub presentation: Arc<Presentation>,
    normal: OnceLock<NCExpr>,
}

impl NamedElement {
    pub fn normal_form(&self) -> Result<NCExpr> {
        if let Some(n) = self.normal.get() {
            return Ok(n.clone());
        }
        let n = normal_form(&self.expr, &self.presentation)?;
        Ok(self.normal.get_or_init(|| n).clone())
    }
}

type Registry = BTreeMap<(String, String), NamedElement>;

struct BuildResolver<'a> {
    p: &'a Presentation,
    defined: &'a Registry,
}

impl Resolver for BuildResolver<'_> {
    fn alphabet(&self) -> &Arc<Alphabet> {
        self.p.alphabet()
    }
    fn inverse_of(&self, g: Gen) -> Option<Gen> {
        self.p.inverses().iter().find(|(a, _)| *a == g).map(|(_, b)| *b)
    }
    fn named(&self, name: &str) -> Option<Result<NCExpr>> {
        self.defined.get(&(self.p.name().to_string(), name.to_string())).map(|e| Ok(e.expr.clone()))
    }
}

fn registry() -> &'static Registry {
    static REG: OnceLock<Registry> = OnceLock::new();
    REG.get_or_init(|| {
        let mut reg = Registry::new();
        for (pname, name, text) in DEFINITIONS {
            let p = by_name(pname).expect("builtin");
            let expr = parse_with(text, &BuildResolver { p: &p, defined: &reg })
                .unwrap_or_else(|e| panic!("definition of {name}: {e}"));
            let el = NamedElement { name: name.to_string(), expr, presentation: p, normal: OnceLock::new() };
            reg.insert((pname.to_string(), name.to_string()), el);
        }
        reg
    })
}

/// Looks up a named element of the default presentation that defines it.
///
/// Names defined in several presentations (`x`, `y`, `z`) resolve to `slq`.
pub fn element(name: &str) -> Result<&'static NamedElement> {
    for pname in ["ospq", "slq", "qbi", "bi", "slq_omega"] {
        if let Some(e) = registry().get(&(pname.to_string(), name.to_string())) {
            return Ok(e);
        }
    }
    Err(Error::UnknownElement(name.to_string()))
}

/// Looks up a named element in a specific presentation.
pub fn element_in(presentation: &str, name: &str) -> Result<&'static NamedElement> {
    registry()
        .get(&(presentation.to_string(), name.to_string()))
        .ok_or_else(|| Error::UnknownElement(name.to_string()))
}

/// Names defined for a presentation, in definition order.
pub fn element_names(presentation: &str) -> Vec<&'static str> {
    DEFINITIONS.iter().filter(|(p, _, _)| *p == presentation).map(|(_, n, _)| *n).collect()
}

/// Resolver exposing generators, inverse sugar and named elements of `p`.
pub struct CatalogResolver {
    p: Arc<Presentation>,
}

impl CatalogResolver {
    pub fn new(p: Arc<Presentation>) -> CatalogResolver {
        CatalogResolver { p }
    }
}

impl Resolver for CatalogResolver {
    fn alphabet(&self) -> &Arc<Alphabet> {
        self.p.alphabet()
    }
    fn inverse_of(&self, g: Gen) -> Option<Gen> {
        self.p.inverses().iter().find(|(a, _)| *a == g).map(|(_, b)| *b)
    }
    fn named(&self, name: &str) -> Option<Result<NCExpr>> {
        registry().get(&(self.p.name().to_string(), name.to_string())).map(|e| Ok(e.expr.clone()))
    }
}

/// Parses with named elements available.
pub fn parse(text: &str, presentation: &str) -> Result<NCExpr> {
    parse_with(text, &CatalogResolver::new(by_name(presentation)?))
}

#[derive(Clone, Debug)]
pub struct IdentityRecord {
    pub id: String,
    pub lhs: NCExpr,
    pub rhs: NCExpr,
    pub presentation: Arc<Presentation>,
    pub anchor: String,
}

impl IdentityRecord {
    pub fn check(&self) -> Result<crate::rewrite::IdentityCheck> {
        crate::rewrite::check_identity(&self.lhs, &self.rhs, &self.presentation)
    }
}

/// (id, presentation, lhs, rhs, anchor)
const RECORDS: &[(&str, &str, &str, &str, &str)] = &[
    ("scasimir.anticomm.A+", "ospq", "{S, A+}", "0", "sCasimir anticommutes with A+"),
    ("scasimir.anticomm.A-", "ospq", "{S, A-}", "0", "sCasimir anticommutes with A-"),
    ("scasimir.comm.K", "ospq", "[S, K]", "0", "sCasimir commutes with the Cartan element, K form"),
    ("casimir.central.A+", "ospq", "[Q, A+]", "0", "Casimir Q = SP commutes with all generators"),
    ("casimir.central.A-", "ospq", "[Q, A-]", "0", "Casimir Q = SP commutes with all generators"),
    ("casimir.central.K", "ospq", "[Q, K]", "0", "Casimir Q = SP commutes with all generators"),
    ("casimir.central.Kinv", "ospq", "[Q, Kinv]", "0", "Casimir Q = SP commutes with all generators"),
    ("casimir.central.P", "ospq", "[Q, P]", "0", "Casimir Q = SP commutes with all generators"),
    ("equitable.rel1.XY", "ospq", "(s*X*Y + s^-1*Y*X)/(s + s^-1)", "1", "equitable relation, X Y"),
    ("equitable.rel1.YZ", "ospq", "(s*Y*Z + s^-1*Z*Y)/(s + s^-1)", "1", "equitable relation, Y Z"),
    ("equitable.rel1.ZX", "ospq", "(s*Z*X + s^-1*X*Z)/(s + s^-1)", "1", "equitable relation, Z X"),
    ("equitable.rel2.X", "ospq", "X*wy + wy*X", "2*Yinv*wy", "equitable involution relation, X"),
    ("equitable.rel2.Y", "ospq", "Y*wy + wy*Y", "2*Y*wy", "equitable involution relation, Y"),
    ("equitable.rel2.Z", "ospq", "Z*wy + wy*Z", "2*Yinv*wy", "equitable involution relation, Z"),
    ("equitable.YYinv", "ospq", "Y*Yinv", "1", "Y Y^-1 = 1"),
    ("equitable.wy_sq", "ospq", "wy*wy", "1", "omega_y^2 = 1"),
    ("equitable.inverse.A+", "ospq", "Ap_eq", "A+", "standard generators from equitable ones, A+"),
    ("equitable.inverse.A-", "ospq", "Am_eq", "A-", "standard generators from equitable ones, A-"),
    ("equitable.inverse.K", "ospq", "K_eq", "K", "standard generators from equitable ones, K"),
    ("equitable.inverse.Kinv", "ospq", "Kinv_eq", "Kinv", "standard generators from equitable ones, K^-1"),
    ("equitable.inverse.P", "ospq", "P_eq", "P", "standard generators from equitable ones, P"),
    ("casimir.upsilon.1", "ospq", "Ups1", "Ups", "normalized Casimir, expression 1 (XYZ)"),
    ("casimir.upsilon.2", "ospq", "Ups2", "Ups", "normalized Casimir, expression 2 (YZX)"),
    ("casimir.upsilon.3", "ospq", "Ups3", "Ups", "normalized Casimir, expression 3 (ZXY)"),
    ("casimir.upsilon.4", "ospq", "Ups4", "Ups", "normalized Casimir, expression 4 (ZYX)"),
    ("casimir.upsilon.5", "ospq", "Ups5", "Ups", "normalized Casimir, expression 5 (XZY)"),
    ("casimir.upsilon.6", "ospq", "Ups6", "Ups", "normalized Casimir, expression 6 (YXZ)"),
    ("slq.equitable.xy", "slq", "(s*x*y - s^-1*y*x)/(s - s^-1)", "1", "sl_q(2) equitable relation, x y"),
    ("slq.equitable.yz", "slq", "(s*y*z - s^-1*z*y)/(s - s^-1)", "1", "sl_q(2) equitable relation, y z"),
    ("slq.equitable.zx", "slq", "(s*z*x - s^-1*x*z)/(s - s^-1)", "1", "sl_q(2) equitable relation, z x"),
    ("tilde.inverse.left", "ospq", "kt*ktinv", "1", "tilde kappa is invertible"),
    ("tilde.inverse.right", "ospq", "ktinv*kt", "1", "tilde kappa is invertible"),
    ("tilde.conj.plus", "ospq", "kt*Jt_plus*ktinv", "-q*Jt_plus", "tilde generators, conjugation of J+"),
    ("tilde.conj.minus", "ospq", "kt*Jt_minus*ktinv", "-q^-1*Jt_minus", "tilde generators, conjugation of J-"),
    (
        "tilde.bracket",
        "ospq",
        "[Jt_plus, Jt_minus]",
        "(kt - ktinv)/(i*(s + s^-1))",
        "tilde generators, commutator of J+ and J-",
    ),
    (
        "covariance.qbi1.AB",
        "ospq",
        "(s*Acov*Bcov + s^-1*Bcov*Acov)/(q - q^-1)",
        "Ccov + ((a - a^-1)*(b - b^-1) - (c - c^-1)*Ups)/(s - s^-1)",
        "covariance relation, A B",
    ),
    (
        "covariance.qbi1.BC",
        "ospq",
        "(s*Bcov*Ccov + s^-1*Ccov*Bcov)/(q - q^-1)",
        "Acov + ((b - b^-1)*(c - c^-1) - (a - a^-1)*Ups)/(s - s^-1)",
        "covariance relation, B C",
    ),
    (
        "covariance.qbi1.CA",
        "ospq",
        "(s*Ccov*Acov + s^-1*Acov*Ccov)/(q - q^-1)",
        "Bcov + ((c - c^-1)*(a - a^-1) - (b - b^-1)*Ups)/(s - s^-1)",
        "covariance relation, C A",
    ),
    ("covariance.qbi2.M1M2", "ospq", "{M1, M2}_q", "M3 + m3", "normalized covariance relation, M1 M2"),
    ("covariance.qbi2.M2M3", "ospq", "{M2, M3}_q", "M1 + m1", "normalized covariance relation, M2 M3"),
    ("covariance.qbi2.M3M1", "ospq", "{M3, M1}_q", "M2 + m2", "normalized covariance relation, M3 M1"),
    ("covariance.casimir_value", "ospq", "Lam_real", "Lam_value", "q-Bannai-Ito Casimir in the realization"),
    ("qbi.casimir_central.I1", "qbi", "[Lam, I1]", "0", "q-Bannai-Ito Casimir is central, I1"),
    ("qbi.casimir_central.I2", "qbi", "[Lam, I2]", "0", "q-Bannai-Ito Casimir is central, I2"),
    ("qbi.casimir_central.I3", "qbi", "[Lam, I3]", "0", "q-Bannai-Ito Casimir is central, I3"),
    ("bi.casimir_central.K1", "bi", "[L, K1]", "0", "Bannai-Ito Casimir is central, K1"),
    ("bi.casimir_central.K2", "bi", "[L, K2]", "0", "Bannai-Ito Casimir is central, K2"),
    ("bi.casimir_central.K3", "bi", "[L, K3]", "0", "Bannai-Ito Casimir is central, K3"),
    ("slq_omega.rel2.x", "slq_omega", "x*wy + wy*x", "2*yinv*wy", "sl_q(2) with adjoined involution, x"),
    ("slq_omega.rel2.y", "slq_omega", "y*wy + wy*y", "2*y*wy", "sl_q(2) with adjoined involution, y"),
    ("slq_omega.rel2.z", "slq_omega", "z*wy + wy*z", "2*yinv*wy", "sl_q(2) with adjoined involution, z"),
    ("slq_omega.wy_sq", "slq_omega", "wy*wy", "1", "sl_q(2) with adjoined involution, omega_y^2 = 1"),
];

/// The identity inventory, sorted by id.
pub fn suite() -> Vec<IdentityRecord> {
    let mut out: Vec<IdentityRecord> = RECORDS
        .iter()
        .map(|(id, pname, lhs, rhs, anchor)| {
            let p = by_name(pname).expect("builtin");
            let lhs = parse(lhs, pname).unwrap_or_else(|e| panic!("{id}: {e}"));
            let rhs = parse(rhs, pname).unwrap_or_else(|e| panic!("{id}: {e}"));
            IdentityRecord { id: id.to_string(), lhs, rhs, presentation: p, anchor: anchor.to_string() }
        })
        .collect();
    out.sort_by(|a, b| a.id.cmp(&b.id));
    out
}

/// Coefficient map `s -> i s` followed by a generator renaming into `target`.
pub fn q_to_minus_q(x: &NCExpr, target: &Arc<Alphabet>, rename: &HashMap<Gen, Gen>) -> Result<NCExpr> {
    x.map_coefficients(|c| Ok(c.q_to_minus_q()))?.rename(target, rename)
}

/// Renaming map between alphabets given by generator names.
pub fn rename_by_names(from: &Alphabet, to: &Alphabet, pairs: &[(&str, &str)]) -> Result<HashMap<Gen, Gen>> {
    pairs
        .iter()
        .map(|(a, b)| {
            let ga = from.index_of(a).ok_or_else(|| Error::UnknownGenerator(a.to_string()))?;
            let gb = to.index_of(b).ok_or_else(|| Error::UnknownGenerator(b.to_string()))?;
            Ok((ga, gb))
        })
        .collect()
}

const SLQ_EQUITABLE: [&str; 3] = [
    "(s*x*y - s^-1*y*x)/(s - s^-1) - 1",
    "(s*y*z - s^-1*z*y)/(s - s^-1) - 1",
    "(s*z*x - s^-1*x*z)/(s - s^-1) - 1",
];

const OSP_EQUITABLE: [&str; 3] = [
    "(s*X*Y + s^-1*Y*X)/(s + s^-1) - 1",
    "(s*Y*Z + s^-1*Z*Y)/(s + s^-1) - 1",
    "(s*Z*X + s^-1*X*Z)/(s + s^-1) - 1",
];

/// The equitable relations of both algebras as free-algebra elements, paired.
pub fn equitable_relation_pairs() -> Result<Vec<(NCExpr, NCExpr)>> {
    let slq = presentations::slq_eq();
    let osp = presentations::osp_eq();
    SLQ_EQUITABLE
        .iter()
        .zip(OSP_EQUITABLE.iter())
        .map(|(a, b)| Ok((presentations::parse_in(&slq, a)?, presentations::parse_in(&osp, b)?)))
        .collect()
}

/// Maps each sl_q(2) equitable relation through `q -> -q` and compares it
/// term by term with the corresponding osp_q(1|2) relation.
pub fn check_q_to_minus_q() -> Result<Vec<(NCExpr, NCExpr, bool)>> {
    let slq = presentations::slq_eq();
    let osp = presentations::osp_eq();
    let rename =
        rename_by_names(slq.alphabet(), osp.alphabet(), &[("x", "X"), ("y", "Y"), ("yinv", "Yinv"), ("z", "Z")])?;
    equitable_relation_pairs()?
        .into_iter()
        .map(|(src, want)| {
            let got = q_to_minus_q(&src, osp.alphabet(), &rename)?;
            let ok = got == want;
            Ok((got, want, ok))
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LimitFamily {
    QbiRelations,
    QbiCasimir,
    StructureConstants,
}

impl LimitFamily {
    pub const ALL: [LimitFamily; 3] =
        [LimitFamily::QbiRelations, LimitFamily::QbiCasimir, LimitFamily::StructureConstants];

    pub fn name(self) -> &'static str {
        match self {
            LimitFamily::QbiRelations => "qbi_relations",
            LimitFamily::QbiCasimir => "qbi_casimir",
            LimitFamily::StructureConstants => "structure_constants",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum LimitStatus {
    /// The limit exists and the compared residual vanishes.
    Zero,
    /// The limit exists but the residual does not vanish.
    Residual(String),
    /// Every coefficient has a finite limit.
    Finite,
    /// Coefficients of these words blow up.
    PoleAtOne(Vec<String>),
}

#[derive(Clone, Debug, PartialEq)]
pub struct LimitEntry {
    pub label: String,
    pub status: LimitStatus,
}

#[derive(Clone, Debug, PartialEq)]
pub struct LimitReport {
    pub family: LimitFamily,
    pub entries: Vec<LimitEntry>,
}

/// Coefficientwise `q -> 1`, collecting the words whose coefficients blow up.
fn limit_expr(x: &NCExpr) -> std::result::Result<NCExpr, Vec<String>> {
    let mut out = NCExpr::zero(x.alphabet());
    let mut poles = Vec::new();
    for (w, c) in x.terms() {
        match c.limit_q_to_one() {
            Ok(v) => out.add_term(w.clone(), v),
            Err(_) => poles.push(x.word_text(w)),
        }
    }
    if poles.is_empty() {
        Ok(out)
    } else {
        Err(poles)
    }
}

fn iota_to_alpha() -> Bindings {
    [
        (Symbol::Iota1, Scalar::symbol(Symbol::Alpha1)),
        (Symbol::Iota2, Scalar::symbol(Symbol::Alpha2)),
        (Symbol::Iota3, Scalar::symbol(Symbol::Alpha3)),
    ]
    .into_iter()
    .collect()
}

fn compare_limit(label: &str, q_side: &NCExpr, classical: &NCExpr) -> Result<LimitEntry> {
    let qbi = presentations::qbi();
    let bi = presentations::bi();
    let rename = rename_by_names(qbi.alphabet(), bi.alphabet(), &[("I1", "K1"), ("I2", "K2"), ("I3", "K3")])?;
    let status = match limit_expr(q_side) {
        Err(poles) => LimitStatus::PoleAtOne(poles),
        Ok(lim) => {
            let lim = lim.substitute(&iota_to_alpha())?.rename(bi.alphabet(), &rename)?;
            let r = lim.checked_sub(classical)?;
            if r.is_zero() {
                LimitStatus::Zero
            } else {
                LimitStatus::Residual(r.to_string())
            }
        }
    };
    Ok(LimitEntry { label: label.to_string(), status })
}

const QBI_RELATIONS: [(&str, &str, &str); 3] = [
    ("I1I2", "{I1, I2}_q - I3 - iota3", "{K1, K2} - K3 - alpha3"),
    ("I2I3", "{I2, I3}_q - I1 - iota1", "{K2, K3} - K1 - alpha1"),
    ("I3I1", "{I3, I1}_q - I2 - iota2", "{K3, K1} - K2 - alpha2"),
];

/// Elements whose coefficients are inspected for the `q -> 1` limit.
const REALIZATION_ELEMENTS: [&str; 14] = [
    "X", "Y", "Yinv", "Z", "Ap_eq", "Am_eq", "Acov", "Bcov", "Ccov", "M1", "M2", "M3", "m1", "Ups",
];

pub fn q_limit_check(family: LimitFamily) -> Result<LimitReport> {
    let mut entries = Vec::new();
    match family {
        LimitFamily::QbiRelations => {
            for (label, q_side, classical) in QBI_RELATIONS {
                entries.push(compare_limit(label, &parse(q_side, "qbi")?, &parse(classical, "bi")?)?);
            }
        }
        LimitFamily::QbiCasimir => {
            let lam = &element_in("qbi", "Lam")?.expr;
            entries.push(compare_limit("Lam", lam, &element_in("bi", "L")?.expr)?);
            // the cubic term disappears
            let cubic = lam.coefficient(&crate::ncalg::Word::from_slice(&[0, 1, 2]));
            let status = match cubic.limit_q_to_one() {
                Ok(v) if v.is_zero() => LimitStatus::Zero,
                Ok(v) => LimitStatus::Residual(v.to_string()),
                Err(_) => LimitStatus::PoleAtOne(vec!["I1*I2*I3".into()]),
            };
            entries.push(LimitEntry { label: "Lam[I1*I2*I3]".into(), status });
        }
        LimitFamily::StructureConstants => {
            for name in REALIZATION_ELEMENTS {
                let status = match limit_expr(&element_in("ospq", name)?.expr) {
                    Ok(_) => LimitStatus::Finite,
                    Err(poles) => LimitStatus::PoleAtOne(poles),
                };
                entries.push(LimitEntry { label: name.to_string(), status });
            }
        }
    }
    Ok(LimitReport { family, entries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rewrite::{check_identity, is_central};

    fn ospq_nf(text: &str) -> NCExpr {
        normal_form(&parse(text, "ospq").unwrap(), &presentations::ospq()).unwrap()
    }

    #[test]
    fn element_texts() {
        assert_eq!(element("Y").unwrap().expr.to_string(), "K*P");
        assert!(matches!(element("Nope"), Err(Error::UnknownElement(_))));
        let s = &element("S").unwrap().expr;
        assert_eq!(s, &parse("A+*A- - (s^-1*K - s*Kinv)/(s^2 - s^-2)", "ospq").unwrap());
    }

    #[test]
    fn upsilon_is_scaled_q() {
        let u = &element("Ups").unwrap().expr;
        let q = &element("Q").unwrap().expr;
        assert_eq!(u, &q.scale(&(&Scalar::s_pow(2) - &Scalar::s_pow(-2))));
    }

    #[test]
    fn spec_record_example() {
        // s XY + s^-1 YX - (s + s^-1) reduces to zero
        assert!(ospq_nf("s*X*Y + s^-1*Y*X - (s + s^-1)").is_zero());
    }

    #[test]
    fn inverse_map_by_hand() {
        // XY = 1 - (1 - q^-1) A+ after PKP = K
        assert_eq!(ospq_nf("X*Y"), parse("1 - (1 - q^-1)*A+", "ospq").unwrap());
    }

    #[test]
    fn q_central() {
        let p = presentations::ospq();
        assert!(is_central(&element("Q").unwrap().expr, &p).unwrap());
        assert!(!is_central(&element("S").unwrap().expr, &p).unwrap());
    }

    #[test]
    fn all_records_hold() {
        for r in suite() {
            let c = r.check().unwrap();
            assert!(c.holds, "{}: {}", r.id, c.residual);
        }
    }

    #[test]
    fn bracket_via_named_elements() {
        let got = parse("[X, Y]", "ospq").unwrap();
        let x = &element("X").unwrap().expr;
        let y = &element("Y").unwrap().expr;
        assert_eq!(got, &(x * y) - &(y * x));
    }

    #[test]
    fn minus_q_correspondence() {
        for (got, want, ok) in check_q_to_minus_q().unwrap() {
            assert!(ok, "{got} != {want}");
        }
    }

    #[test]
    fn minus_q_twice_negates_s() {
        let slq = presentations::slq_eq();
        let a = slq.alphabet();
        let id: HashMap<Gen, Gen> = a.generators().map(|g| (g, g)).collect();
        let x = presentations::parse_in(&slq, "s*x*y + s^-3*z + w").unwrap();
        let twice = q_to_minus_q(&q_to_minus_q(&x, a, &id).unwrap(), a, &id).unwrap();
        assert_eq!(twice, presentations::parse_in(&slq, "-s*x*y - s^-3*z + w").unwrap());
    }

    #[test]
    fn limits() {
        let r = q_limit_check(LimitFamily::QbiRelations).unwrap();
        assert!(r.entries.iter().all(|e| e.status == LimitStatus::Zero), "{r:?}");
        let r = q_limit_check(LimitFamily::QbiCasimir).unwrap();
        assert!(r.entries.iter().all(|e| e.status == LimitStatus::Zero), "{r:?}");
        let r = q_limit_check(LimitFamily::StructureConstants).unwrap();
        let ap = r.entries.iter().find(|e| e.label == "Ap_eq").unwrap();
        assert!(matches!(&ap.status, LimitStatus::PoleAtOne(w) if w.contains(&"1".to_string())));
        let x = r.entries.iter().find(|e| e.label == "X").unwrap();
        assert_eq!(x.status, LimitStatus::Finite);
    }

    #[test]
    fn upsilon_forms_pairwise() {
        let forms: Vec<NCExpr> = (1..=6).map(|k| element(&format!("Ups{k}")).unwrap().normal_form().unwrap()).collect();
        for i in 0..6 {
            for j in i + 1..6 {
                assert_eq!(forms[i], forms[j], "Ups{} vs Ups{}", i + 1, j + 1);
            }
        }
        let p = presentations::ospq();
        assert!(check_identity(&element("Ups").unwrap().expr, &element("Ups1").unwrap().expr, &p).unwrap().holds);
    }
}

