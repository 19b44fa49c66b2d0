//! Suite runner: every catalog identity, Hopf axiom, representation check,
//! confluence report and q-limit check as one flat list of records.

use std::path::Path;
use std::sync::Arc;
use std::time::Instant;

use globset::{Glob, GlobMatcher};
use rayon::prelude::*;
use serde::Serialize;

use crate::catalog::{self, LimitFamily, LimitStatus};
use crate::error::{Error, Result};
use crate::hopf::{self, AxiomFamily, AxiomInstance};
use crate::ncalg::NCExpr;
use crate::presentations;
use crate::reps::{self, Parity, RepKind, DEFAULT_CUTOFF};
use crate::rewrite::{local_confluence_report, Presentation};

pub const SCHEMA_VERSION: u32 = 1;

/// Finite module sizes used by the representation bridge.
pub const BRIDGE_SIZES: [i64; 2] = [2, 4];

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail(String),
}

impl Outcome {
    fn from_failures(bad: Vec<String>) -> Outcome {
        if bad.is_empty() {
            Outcome::Pass
        } else {
            Outcome::Fail(bad.join("; "))
        }
    }
}

type Job = Box<dyn Fn() -> Result<Outcome> + Send + Sync>;

/// A named, independently runnable check.
pub struct Check {
    pub id: String,
    pub anchor: String,
    job: Job,
}

impl Check {
    pub fn new(
        id: impl Into<String>,
        anchor: impl Into<String>,
        job: impl Fn() -> Result<Outcome> + Send + Sync + 'static,
    ) -> Check {
        Check { id: id.into(), anchor: anchor.into(), job: Box::new(job) }
    }

    pub fn run(&self) -> Result<Outcome> {
        (self.job)()
    }
}

impl std::fmt::Debug for Check {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Check").field("id", &self.id).finish_non_exhaustive()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RecordResult {
    pub id: String,
    pub anchor: String,
    pub status: Status,
    /// Empty on pass.
    pub residual: String,
    pub wall_ms: f64,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    pub error: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteReport {
    pub schema: u32,
    pub records: Vec<RecordResult>,
    pub summary: Summary,
}

impl SuiteReport {
    fn new(mut records: Vec<RecordResult>) -> SuiteReport {
        records.sort_by(|a, b| a.id.cmp(&b.id));
        let mut summary = Summary { total: records.len(), ..Summary::default() };
        for r in &records {
            match r.status {
                Status::Pass => summary.pass += 1,
                Status::Fail => summary.fail += 1,
                Status::Error => summary.error += 1,
            }
        }
        SuiteReport { schema: SCHEMA_VERSION, records, summary }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.fail == 0 && self.summary.error == 0
    }

    pub fn exit_code(&self) -> i32 {
        if self.all_passed() {
            0
        } else {
            1
        }
    }

    pub fn get(&self, id: &str) -> Option<&RecordResult> {
        self.records.iter().find(|r| r.id == id)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn write_json(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_json() + "\n")?;
        Ok(())
    }
}

fn is_confluent(p: &Presentation) -> Result<bool> {
    Ok(local_confluence_report(p)?.iter().all(|c| c.joinable))
}

fn identity_checks() -> Vec<Check> {
    catalog::suite()
        .into_iter()
        .map(|rec| {
            let id = rec.id.clone();
            let anchor = rec.anchor.clone();
            let gated = rec.presentation.name() == "qbi";
            Check::new(id, anchor, move || {
                // normal forms in qbi are only canonical if its rules are confluent
                if gated && !is_confluent(&rec.presentation)? {
                    return Ok(Outcome::Fail("qbi rewrite system is not locally confluent".into()));
                }
                let r = rec.check()?;
                Ok(if r.holds { Outcome::Pass } else { Outcome::Fail(r.residual.to_string()) })
            })
        })
        .collect()
}

fn hopf_anchor(f: AxiomFamily) -> &'static str {
    match f {
        AxiomFamily::CoproductRelations => "coproduct respects the defining relations",
        AxiomFamily::Coassociativity => "coassociativity",
        AxiomFamily::Counit => "counit axiom",
        AxiomFamily::Antipode => "antipode axiom",
        AxiomFamily::CounitRelations => "counit respects the defining relations",
        AxiomFamily::EquitableCoproduct => "coproduct of the equitable generators",
    }
}

fn hopf_checks() -> Vec<Check> {
    hopf::axiom_instances()
        .into_iter()
        .map(|(family, inst): (AxiomFamily, AxiomInstance)| {
            let id = format!("hopf.{}.{}", family.key(), hopf::instance_label(&inst));
            Check::new(id, hopf_anchor(family), move || {
                let c = hopf::check_axiom(family, &inst)?;
                Ok(if c.holds { Outcome::Pass } else { Outcome::Fail(c.residual) })
            })
        })
        .collect()
}

fn rep_kind_check(kind: RepKind, n: Option<i64>, id: String, anchor: &'static str) -> Check {
    Check::new(id, anchor, move || {
        let entries = reps::check_rep(kind, DEFAULT_CUTOFF, n)?;
        let bad = entries.into_iter().filter(|e| !e.holds).map(|e| format!("{}: {}", e.label, e.detail)).collect();
        Ok(Outcome::from_failures(bad))
    })
}

fn rep_checks() -> Vec<Check> {
    let mut out = vec![
        rep_kind_check(RepKind::WRelations, None, "rep.W_relations".into(), "defining relations on W"),
        rep_kind_check(RepKind::WEquitable, None, "rep.W_equitable".into(), "equitable generators on W"),
        rep_kind_check(RepKind::WCasimir, None, "rep.W_casimir".into(), "Casimir eigenvalue on W"),
        rep_kind_check(
            RepKind::BargmannConsistency,
            None,
            "rep.bargmann_consistency".into(),
            "Bargmann realization agrees with the basis action",
        ),
    ];
    for n in BRIDGE_SIZES {
        out.push(rep_kind_check(
            RepKind::FiniteIrreducibility,
            Some(n),
            format!("rep.finite_irreducibility.N{n}"),
            "finite quotient is irreducible",
        ));
        for e in Parity::BOTH {
            out.push(Check::new(
                format!("rep.finite_casimir.N{n}.e{:+}", e.sign()),
                "Casimir acts as a scalar on the finite quotient",
                move || {
                    let q = &catalog::element_in("ospq", "Q")?.expr;
                    let want = reps::finite_casimir_value(n, e)?;
                    let m = reps::finite_matrix(q, n, e)?;
                    Ok(if m.is_scalar(&want) {
                        Outcome::Pass
                    } else {
                        Outcome::Fail(format!("not {want} times the identity"))
                    })
                },
            ));
        }
    }
    for n in [2u32, 4, 6, 8] {
        out.push(Check::new(format!("rep.truncation.N{n}"), "rho(N+1) vanishes at w = s^-(N+1)", move || {
            let s = crate::scalars::Scalar::symbol(crate::scalars::Symbol::S);
            let r = reps::rho_at(n + 1, &s, &s.pow(-(n as i32 + 1))?)?;
            Ok(if r.is_zero() { Outcome::Pass } else { Outcome::Fail(r.to_string()) })
        }));
    }
    out
}

/// Every ospq identity acting as zero on W (both parities) and on the finite
/// quotients.
fn bridge_checks() -> Vec<Check> {
    catalog::suite()
        .into_iter()
        .filter(|r| r.presentation.name() == "ospq")
        .map(|rec| {
            let id = format!("bridge.{}", rec.id);
            Check::new(id, "identity holds in the representations", move || {
                let diff = rec.lhs.checked_sub(&rec.rhs)?;
                Ok(Outcome::from_failures(reps::vanishing_failures(&diff, DEFAULT_CUTOFF, &BRIDGE_SIZES)?))
            })
        })
        .collect()
}

/// All critical pairs of `p` joinable; the residual lists the offenders.
pub fn confluence_check(id: impl Into<String>, p: Arc<Presentation>) -> Check {
    Check::new(id, "local confluence of the rewrite rules", move || {
        let alpha = p.alphabet().clone();
        let bad = local_confluence_report(&p)?
            .into_iter()
            .filter(|c| !c.joinable)
            .map(|c| {
                let diff = c.branch1.checked_sub(&c.branch2).unwrap_or_else(|_| NCExpr::zero(&alpha));
                format!("{}: {}", NCExpr::word(&alpha, c.overlap.clone(), crate::scalars::Scalar::one()), diff)
            })
            .collect();
        Ok(Outcome::from_failures(bad))
    })
}

fn confluence_checks() -> Vec<Check> {
    ["ospq", "slq", "slq_omega", "qbi", "bi"]
        .into_iter()
        .map(|name| confluence_check(format!("confluence.{name}"), presentations::by_name(name).expect("builtin")))
        .collect()
}

fn limit_outcome(family: LimitFamily) -> Result<Outcome> {
    let report = catalog::q_limit_check(family)?;
    let mut bad = Vec::new();
    match family {
        LimitFamily::QbiRelations | LimitFamily::QbiCasimir => {
            for e in &report.entries {
                if e.status != LimitStatus::Zero {
                    bad.push(format!("{}: {:?}", e.label, e.status));
                }
            }
        }
        LimitFamily::StructureConstants => {
            let poles = |label: &str| {
                report.entries.iter().find(|e| e.label == label).and_then(|e| match &e.status {
                    LimitStatus::PoleAtOne(words) => Some(words.clone()),
                    _ => None,
                })
            };
            if !poles("Ap_eq").is_some_and(|w| w.iter().any(|w| w == "1")) {
                bad.push("Ap_eq: no pole in the constant term".into());
            }
            for m in ["M1", "M2", "M3"] {
                if poles(m).is_none() {
                    bad.push(format!("{m}: finite at q = 1"));
                }
            }
        }
    }
    Ok(Outcome::from_failures(bad))
}

fn limit_checks() -> Vec<Check> {
    LimitFamily::ALL
        .into_iter()
        .map(|family| {
            let anchor = match family {
                LimitFamily::QbiRelations => "q-Bannai-Ito relations tend to Bannai-Ito relations",
                LimitFamily::QbiCasimir => "q-Bannai-Ito Casimir tends to Bannai-Ito Casimir",
                LimitFamily::StructureConstants => "realization has no q -> 1 limit",
            };
            Check::new(format!("limits.{}", family.name()), anchor, move || limit_outcome(family))
        })
        .collect()
}

fn minus_q_checks() -> Vec<Check> {
    (0..3)
        .map(|k| {
            Check::new(format!("qmq.equitable.{}", k + 1), "sl_q(2) equitable relation under q -> -q", move || {
                let (got, want, ok) = catalog::check_q_to_minus_q()?.swap_remove(k);
                Ok(if ok {
                    Outcome::Pass
                } else {
                    Outcome::Fail(got.checked_sub(&want).map(|d| d.to_string()).unwrap_or_default())
                })
            })
        })
        .collect()
}

/// Every built-in check, sorted by id.
pub fn checks() -> Vec<Check> {
    let mut out = identity_checks();
    out.extend(hopf_checks());
    out.extend(rep_checks());
    out.extend(bridge_checks());
    out.extend(confluence_checks());
    out.extend(limit_checks());
    out.extend(minus_q_checks());
    out.sort_by(|a, b| a.id.cmp(&b.id));
    out
}

pub fn compile_filter(pattern: &str) -> Result<GlobMatcher> {
    Glob::new(pattern)
        .map(|g| g.compile_matcher())
        .map_err(|e| Error::Syntax { line: 1, col: 1, msg: format!("bad filter: {e}") })
}

fn run_one(c: &Check) -> RecordResult {
    let t = Instant::now();
    let (status, residual) = match c.run() {
        Ok(Outcome::Pass) => (Status::Pass, String::new()),
        Ok(Outcome::Fail(r)) => (Status::Fail, r),
        Err(e) => (Status::Error, e.to_string()),
    };
    RecordResult {
        id: c.id.clone(),
        anchor: c.anchor.clone(),
        status,
        residual,
        wall_ms: t.elapsed().as_secs_f64() * 1e3,
    }
}

/// Runs the given checks in parallel; ids must be unique.
pub fn run_checks(checks: &[Check], filter: Option<&str>) -> Result<SuiteReport> {
    let matcher = filter.map(compile_filter).transpose()?;
    let selected: Vec<&Check> = checks.iter().filter(|c| matcher.as_ref().is_none_or(|m| m.is_match(&c.id))).collect();
    let mut ids: Vec<&str> = selected.iter().map(|c| c.id.as_str()).collect();
    ids.sort_unstable();
    if let Some(w) = ids.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::InvalidPresentation(format!("duplicate record id {}", w[0])));
    }
    // deep reductions recurse; give workers room
    let pool = rayon::ThreadPoolBuilder::new()
        .stack_size(64 << 20)
        .build()
        .map_err(|e| Error::Io(e.to_string()))?;
    let records = pool.install(|| selected.par_iter().map(|c| run_one(c)).collect());
    Ok(SuiteReport::new(records))
}

pub fn run_suite(filter: Option<&str>) -> Result<SuiteReport> {
    run_checks(&checks(), filter)
}

/// Built-in checks plus `extra`, e.g. a fixture loaded from a file.
pub fn run_suite_with(filter: Option<&str>, extra: Vec<Check>) -> Result<SuiteReport> {
    let mut all = checks();
    all.extend(extra);
    run_checks(&all, filter)
}
