//! Builtin presentations and the declarative presentation format.
//!
//! ```text
//! # comment
//! presentation ospq
//! generators A+ A- K Kinv P
//! inverse K Kinv
//! rule A- * A+ -> -A+*A- + (K - Kinv)/(s - s^-1)
//! ```
//!
//! Rule right-hand sides use the expression language; `inverse` lines enable
//! `K^-1` sugar in both directions.

use std::sync::{Arc, OnceLock};

use crate::dsl::{as_two_letter_word, format, parse_with, AlphabetResolver, Style};
use crate::error::{Error, Result};
use crate::ncalg::{Alphabet, NCExpr};
use crate::rewrite::{Presentation, RewriteRule};

const OSPQ: &str = "\
presentation ospq
generators A+ A- K Kinv P
inverse K Kinv
rule A- * A+ -> -A+*A- + (K - Kinv)/(s - s^-1)
rule K * A+ -> s^2*A+*K
rule K * A- -> s^-2*A-*K
rule Kinv * A+ -> s^-2*A+*Kinv
rule Kinv * A- -> s^2*A-*Kinv
rule P * A+ -> -A+*P
rule P * A- -> -A-*P
rule P * K -> K*P
rule P * Kinv -> Kinv*P
rule K * Kinv -> 1
rule Kinv * K -> 1
rule P * P -> 1
";

const SLQ: &str = "\
presentation slq
generators J+ J- kappa kappainv
inverse kappa kappainv
rule J- * J+ -> J+*J- - (kappa - kappainv)/(s - s^-1)
rule kappa * J+ -> s^2*J+*kappa
rule kappa * J- -> s^-2*J-*kappa
rule kappainv * J+ -> s^-2*J+*kappainv
rule kappainv * J- -> s^2*J-*kappainv
rule kappa * kappainv -> 1
rule kappainv * kappa -> 1
";

const SLQ_OMEGA: &str = "\
presentation slq_omega
generators J+ J- kappa kappainv wy
inverse kappa kappainv
rule J- * J+ -> J+*J- - (kappa - kappainv)/(s - s^-1)
rule kappa * J+ -> s^2*J+*kappa
rule kappa * J- -> s^-2*J-*kappa
rule kappainv * J+ -> s^-2*J+*kappainv
rule kappainv * J- -> s^2*J-*kappainv
rule kappa * kappainv -> 1
rule kappainv * kappa -> 1
rule wy * J+ -> -J+*wy
rule wy * J- -> -J-*wy
rule wy * kappa -> kappa*wy
rule wy * kappainv -> kappainv*wy
rule wy * wy -> 1
";

const QBI: &str = "\
presentation qbi
generators I1 I2 I3
rule I2 * I1 -> -s^2*I1*I2 + s*(I3 + iota3)
rule I3 * I2 -> -s^2*I2*I3 + s*(I1 + iota1)
rule I3 * I1 -> -s^-2*I1*I3 + s^-1*(I2 + iota2)
";

const BI: &str = "\
presentation bi
generators K1 K2 K3
rule K2 * K1 -> -K1*K2 + K3 + alpha3
rule K3 * K2 -> -K2*K3 + K1 + alpha1
rule K3 * K1 -> -K1*K3 + K2 + alpha2
";

const OSP_EQ: &str = "\
presentation osp_eq
generators X Y Yinv Z wy
inverse Y Yinv
";

const SLQ_EQ: &str = "\
presentation slq_eq
generators x y yinv z
inverse y yinv
";

/// Names of the bundled presentations.
pub const BUILTIN_NAMES: [&str; 7] = ["ospq", "slq", "slq_omega", "qbi", "bi", "osp_eq", "slq_eq"];

fn builtin_text(name: &str) -> Option<&'static str> {
    Some(match name {
        "ospq" => OSPQ,
        "slq" => SLQ,
        "slq_omega" => SLQ_OMEGA,
        "qbi" => QBI,
        "bi" => BI,
        "osp_eq" => OSP_EQ,
        "slq_eq" => SLQ_EQ,
        _ => return None,
    })
}

macro_rules! builtin {
    ($fn_name:ident, $text:expr) => {
        pub fn $fn_name() -> Arc<Presentation> {
            static CELL: OnceLock<Arc<Presentation>> = OnceLock::new();
            CELL.get_or_init(|| Arc::new(from_text($text).expect("builtin presentation parses"))).clone()
        }
    };
}

builtin!(ospq, OSPQ);
builtin!(slq, SLQ);
builtin!(slq_omega, SLQ_OMEGA);
builtin!(qbi, QBI);
builtin!(bi, BI);
builtin!(osp_eq, OSP_EQ);
builtin!(slq_eq, SLQ_EQ);

/// Looks up a bundled presentation.
pub fn by_name(name: &str) -> Result<Arc<Presentation>> {
    Ok(match name {
        "ospq" => ospq(),
        "slq" => slq(),
        "slq_omega" => slq_omega(),
        "qbi" => qbi(),
        "bi" => bi(),
        "osp_eq" => osp_eq(),
        "slq_eq" => slq_eq(),
        _ => return Err(Error::UnknownPresentation(name.to_string())),
    })
}

/// Source text of a bundled presentation.
pub fn builtin_source(name: &str) -> Result<&'static str> {
    builtin_text(name).ok_or_else(|| Error::UnknownPresentation(name.to_string()))
}

pub fn resolver(p: &Presentation) -> AlphabetResolver {
    AlphabetResolver { alphabet: p.alphabet().clone(), inverses: p.inverses().to_vec() }
}

/// Parses an expression over the presentation's generators.
pub fn parse_in(p: &Presentation, text: &str) -> Result<NCExpr> {
    parse_with(text, &resolver(p))
}

fn syntax(line: usize, msg: impl Into<String>) -> Error {
    Error::Syntax { line, col: 1, msg: msg.into() }
}

/// Parses the declarative format.
pub fn from_text(text: &str) -> Result<Presentation> {
    let mut name: Option<String> = None;
    let mut alphabet: Option<Arc<Alphabet>> = None;
    let mut inverses = Vec::new();
    let mut rules = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line_no = k + 1;
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let (kw, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        let rest = rest.trim();
        match kw {
            "presentation" => {
                if rest.is_empty() || rest.contains(char::is_whitespace) {
                    return Err(syntax(line_no, "expected a single presentation name"));
                }
                name = Some(rest.to_string());
            }
            "generators" => {
                if alphabet.is_some() {
                    return Err(syntax(line_no, "generators declared twice"));
                }
                let gens: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
                if gens.is_empty() || gens.len() > u8::MAX as usize {
                    return Err(syntax(line_no, "bad generator list"));
                }
                for (i, g) in gens.iter().enumerate() {
                    if gens[..i].contains(g) {
                        return Err(Error::InvalidPresentation(format!("generator {g} repeated")));
                    }
                }
                let pname = name.clone().ok_or_else(|| syntax(line_no, "`presentation` must come first"))?;
                alphabet = Some(Alphabet::from_names(pname, gens));
            }
            "inverse" => {
                let alpha = alphabet.as_ref().ok_or_else(|| syntax(line_no, "`generators` must come first"))?;
                let pair: Vec<&str> = rest.split_whitespace().collect();
                let [a, b] = pair[..] else {
                    return Err(syntax(line_no, "expected two generators"));
                };
                let ga = alpha.index_of(a).ok_or_else(|| Error::UnknownGenerator(a.to_string()))?;
                let gb = alpha.index_of(b).ok_or_else(|| Error::UnknownGenerator(b.to_string()))?;
                inverses.push((ga, gb));
                inverses.push((gb, ga));
            }
            "rule" => {
                let alpha = alphabet.as_ref().ok_or_else(|| syntax(line_no, "`generators` must come first"))?;
                let (lhs, rhs) = rest.split_once("->").ok_or_else(|| syntax(line_no, "expected `->`"))?;
                let r = AlphabetResolver { alphabet: alpha.clone(), inverses: inverses.clone() };
                let relocate = |e: Error| match e {
                    Error::Syntax { col, msg, .. } => Error::Syntax { line: line_no, col, msg },
                    e => e,
                };
                let l = parse_with(lhs, &r).map_err(relocate)?;
                let pair = as_two_letter_word(&l)
                    .ok_or_else(|| syntax(line_no, "rule left-hand side must be a product of two generators"))?;
                let rhs = parse_with(rhs, &r).map_err(relocate)?;
                rules.push(RewriteRule { lhs: pair, rhs });
            }
            other => return Err(syntax(line_no, format!("unknown keyword `{other}`"))),
        }
    }
    let name = name.ok_or_else(|| syntax(1, "missing `presentation` line"))?;
    let alphabet = alphabet.ok_or_else(|| syntax(1, "missing `generators` line"))?;
    Presentation::new(name, alphabet, rules, inverses)
}

/// Serializes to the declarative format; `from_text` inverts it.
pub fn to_text(p: &Presentation) -> String {
    let alpha = p.alphabet();
    let mut out = format!("presentation {}\ngenerators {}\n", p.name(), alpha.names().join(" "));
    for &(a, b) in p.inverses() {
        if a < b {
            out.push_str(&format!("inverse {} {}\n", alpha.name_of(a), alpha.name_of(b)));
        }
    }
    for r in p.rules() {
        out.push_str(&format!(
            "rule {} * {} -> {}\n",
            alpha.name_of(r.lhs.0),
            alpha.name_of(r.lhs.1),
            format(&r.rhs, Style::Canonical)
        ));
    }
    out
}
