//! Acceptance criteria 1-10. Runs without the libtest harness so that every
//! criterion prints its verdict line; exits nonzero if any criterion fails.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::Instant;

use qkernel::catalog::{self, LimitFamily, LimitStatus};
use qkernel::hopf::{check_hopf_axioms, AxiomFamily};
use qkernel::ncalg::Word;
use qkernel::presentations;
use qkernel::reps::{self, Parity, RepKind, DEFAULT_CUTOFF};
use qkernel::{is_central, local_confluence_report, normal_form, NCExpr, Scalar, Symbol};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Verdict = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn s() -> Scalar {
    Scalar::symbol(Symbol::S)
}

/// [x]_q with q^x given as `qx`, q = s^2.
fn q_number(qx: &Scalar) -> Scalar {
    let q = s().pow(2).unwrap();
    (qx - &qx.inv().unwrap()).div(&(&q - &q.inv().unwrap())).unwrap()
}

fn criterion_1() -> Verdict {
    let records = catalog::suite();
    // (a)..(m): id prefix and the minimum number of records under it
    let groups: [(&str, usize); 14] = [
        ("scasimir.", 3),
        ("casimir.central.", 5),
        ("equitable.rel1.", 3),
        ("equitable.rel2.", 3),
        ("equitable.inverse.", 5),
        ("casimir.upsilon.", 6),
        ("slq.equitable.", 3),
        ("tilde.", 3),
        ("covariance.qbi1.", 3),
        ("covariance.qbi2.", 3),
        ("covariance.casimir_value", 1),
        ("qbi.casimir_central.", 3),
        ("bi.casimir_central.", 3),
        ("slq_omega.rel2.", 3),
    ];
    for (prefix, min) in groups {
        let n = records.iter().filter(|r| r.id.starts_with(prefix)).count();
        ensure(n >= min, || format!("only {n} records under {prefix}"))?;
    }
    for id in ["equitable.YYinv", "equitable.wy_sq"] {
        ensure(records.iter().any(|r| r.id == id), || format!("missing {id}"))?;
    }
    let mut failed = Vec::new();
    for r in &records {
        let c = r.check().map_err(|e| format!("{}: {e}", r.id))?;
        if !c.holds || !c.residual.is_zero() {
            failed.push(format!("{}: {}", r.id, c.residual));
        }
    }
    ensure(failed.is_empty(), || failed.join("; "))?;
    Ok(format!("{} records, all residuals 0", records.len()))
}

fn criterion_2() -> Verdict {
    let checks = check_hopf_axioms().map_err(|e| e.to_string())?;
    let bad: Vec<String> = checks.iter().filter(|c| !c.holds).map(|c| c.id()).collect();
    ensure(bad.is_empty(), || bad.join(", "))?;
    let p = presentations::ospq();
    let gens = p.alphabet().names();
    let count = |f: AxiomFamily| checks.iter().filter(|c| c.family == f).count();
    ensure(count(AxiomFamily::CoproductRelations) == p.rules().len(), || "coproduct not checked on every relation".into())?;
    ensure(count(AxiomFamily::Coassociativity) == gens.len(), || "coassociativity not checked per generator".into())?;
    ensure(count(AxiomFamily::Counit) == 2 * gens.len(), || "counit not checked on both sides".into())?;
    ensure(count(AxiomFamily::Antipode) == 2 * gens.len(), || "antipode not checked on both sides".into())?;
    ensure(count(AxiomFamily::CounitRelations) == p.rules().len(), || "counit not checked on every relation".into())?;
    ensure(count(AxiomFamily::EquitableCoproduct) == 4, || "equitable coproducts missing".into())?;
    Ok(format!("{} axiom instances over {} generators", checks.len(), gens.len()))
}

fn criterion_3() -> Verdict {
    let records: Vec<_> = catalog::suite().into_iter().filter(|r| r.presentation.name() == "ospq").collect();
    let mut bad = Vec::new();
    for r in &records {
        // unreduced difference: the representation sees the raw expression
        let diff = r.lhs.checked_sub(&r.rhs).map_err(|e| e.to_string())?;
        let fails = reps::vanishing_failures(&diff, DEFAULT_CUTOFF, &[2, 4]).map_err(|e| format!("{}: {e}", r.id))?;
        if !fails.is_empty() {
            bad.push(format!("{}: {}", r.id, fails.join(", ")));
        }
    }
    ensure(bad.is_empty(), || bad.join("; "))?;
    Ok(format!("{} ospq identities vanish on W (n <= {DEFAULT_CUTOFF}, e = +-1) and N = 2, 4", records.len()))
}

fn criterion_4() -> Verdict {
    let q_el = &catalog::element_in("ospq", "Q").map_err(|e| e.to_string())?.expr;
    let nu = q_number(&Scalar::symbol(Symbol::W));
    for e in Parity::BOTH {
        let ev = -(&Scalar::from_int(e.sign()) * &nu);
        for n in 0..=DEFAULT_CUTOFF {
            let got = reps::act_w(q_el, &reps::RepVector::basis(n, e)).map_err(|x| x.to_string())?;
            let mut want = reps::RepVector::zero(e);
            want.add_term(n, ev.clone());
            ensure(got == want, || format!("Q f_{n} wrong for e = {}", e.sign()))?;
        }
    }
    for n in [2i64, 4] {
        let w = s().pow(-(n as i32 + 1)).unwrap();
        for e in Parity::BOTH {
            let want = -(&Scalar::from_int(e.sign()) * &q_number(&w));
            let m = reps::finite_matrix(q_el, n, e).map_err(|x| x.to_string())?;
            ensure(m.is_scalar(&want), || format!("finite Q not scalar {want} at N = {n}, e = {}", e.sign()))?;
        }
    }
    Ok("Q = -e[nu]_q on W and on N = 2, 4".into())
}

fn criterion_5() -> Verdict {
    for n in [2u32, 4, 6, 8] {
        let w = s().pow(-(n as i32 + 1)).unwrap();
        let r = reps::rho_at(n + 1, &s(), &w).map_err(|e| e.to_string())?;
        ensure(r.is_zero(), || format!("rho({}) = {r}", n + 1))?;
        for k in 1..=n {
            let r = reps::rho_at(k, &s(), &w).map_err(|e| e.to_string())?;
            ensure(!r.is_zero(), || format!("rho({k}) vanishes early at N = {n}"))?;
        }
    }
    for n in [2i64, 4] {
        let entries = reps::check_rep(RepKind::FiniteIrreducibility, DEFAULT_CUTOFF, Some(n)).map_err(|e| e.to_string())?;
        ensure(entries.iter().all(|e| e.holds), || format!("N = {n}: {}", entries[0].detail))?;
    }
    Ok("rho(N+1) = 0 for N = 2, 4, 6, 8; commutant dimension 1 for N = 2, 4 at s = 2".into())
}

fn criterion_6() -> Verdict {
    let pairs = catalog::check_q_to_minus_q().map_err(|e| e.to_string())?;
    ensure(pairs.len() == 3, || format!("{} relations mapped", pairs.len()))?;
    for (k, (got, want, ok)) in pairs.iter().enumerate() {
        ensure(*ok && got == want, || format!("relation {}: got {got}, want {want}", k + 1))?;
    }
    let tilde: Vec<_> = catalog::suite().into_iter().filter(|r| r.id.starts_with("tilde.")).collect();
    for id in ["tilde.conj.plus", "tilde.conj.minus", "tilde.bracket"] {
        let r = tilde.iter().find(|r| r.id == id).ok_or_else(|| format!("missing {id}"))?;
        let c = r.check().map_err(|e| e.to_string())?;
        ensure(c.holds, || format!("{id}: {}", c.residual))?;
    }
    Ok("3 equitable relations map term for term; 3 tilde relations hold".into())
}

fn criterion_7() -> Verdict {
    for family in [LimitFamily::QbiRelations, LimitFamily::QbiCasimir] {
        let report = catalog::q_limit_check(family).map_err(|e| e.to_string())?;
        ensure(!report.entries.is_empty(), || format!("{} is empty", family.name()))?;
        for entry in &report.entries {
            ensure(entry.status == LimitStatus::Zero, || format!("{} {}: {:?}", family.name(), entry.label, entry.status))?;
        }
    }
    let report = catalog::q_limit_check(LimitFamily::StructureConstants).map_err(|e| e.to_string())?;
    let ap = report.entries.iter().find(|e| e.label == "Ap_eq").ok_or("no Ap_eq entry")?;
    ensure(matches!(&ap.status, LimitStatus::PoleAtOne(w) if w.iter().any(|w| w == "1")), || {
        format!("Ap_eq: {:?}", ap.status)
    })?;
    // the coefficient itself: 1/(1 - q^-1)
    let c = Scalar::one().div(&(&Scalar::one() - &s().pow(-2).unwrap())).unwrap();
    ensure(c.limit_q_to_one().is_err(), || "1/(1 - q^-1) has a limit".into())?;
    let poles = report.entries.iter().filter(|e| matches!(e.status, LimitStatus::PoleAtOne(_))).count();
    Ok(format!("BI relations and Casimir recovered; {poles} realization elements have poles at q = 1"))
}

fn criterion_8() -> Verdict {
    let mut total = 0;
    for name in ["ospq", "slq", "qbi", "bi"] {
        let p = presentations::by_name(name).map_err(|e| e.to_string())?;
        let report = local_confluence_report(&p).map_err(|e| e.to_string())?;
        ensure(report.iter().all(|c| c.joinable), || format!("{name} has non-joinable overlaps"))?;
        total += report.len();
    }
    let text = presentations::builtin_source("ospq")
        .map_err(|e| e.to_string())?
        .replace("rule K * A+ -> s^2*A+*K", "rule K * A+ -> s*A+*K");
    let bad = presentations::from_text(&text).map_err(|e| e.to_string())?;
    let report = local_confluence_report(&bad).map_err(|e| e.to_string())?;
    let n = report.iter().filter(|c| !c.joinable).count();
    ensure(n > 0, || "corrupted fixture reported confluent".into())?;
    Ok(format!("{total} critical pairs joinable; corrupted fixture has {n} non-joinable"))
}

fn random_word(rng: &mut StdRng, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    Word::from_slice(&(0..len).map(|_| rng.gen_range(0..5u8)).collect::<Vec<_>>())
}

fn random_coeff(rng: &mut StdRng) -> Scalar {
    let c = Scalar::from_ratio(rng.gen_range(-4..=4i64).max(1), rng.gen_range(1..=3));
    &c * &s().pow(rng.gen_range(-2..=2)).unwrap()
}

fn criterion_9() -> Verdict {
    let p = presentations::ospq();
    let alpha = p.alphabet().clone();
    let rels = p.relations();
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let at = Scalar::from_int(2);
    let mut agree = 0;
    let mut equal_cases = 0;
    for case in 0..100 {
        let mut x = NCExpr::zero(&alpha);
        for _ in 0..rng.gen_range(1..=4) {
            x.add_term(random_word(&mut rng, 6), random_coeff(&mut rng));
        }
        let mut y = x.clone();
        if case % 2 == 0 {
            // add multiples of relations: equal in the algebra
            for _ in 0..rng.gen_range(1..=3) {
                let u = NCExpr::word(&alpha, random_word(&mut rng, 2), random_coeff(&mut rng));
                let v = NCExpr::word(&alpha, random_word(&mut rng, 2), Scalar::one());
                y = &y + &(&(&u * &rels[rng.gen_range(0..rels.len())]) * &v);
            }
        } else {
            // add a multiple of an invertible word: never equal
            let k = rng.gen_range(0..=3u32);
            let g = if rng.gen_bool(0.5) { "K" } else { "Kinv" };
            let mut inv = NCExpr::gen(&alpha, g).pow(k);
            if rng.gen_bool(0.5) {
                inv = &inv * &NCExpr::gen(&alpha, "P");
            }
            y = &y + &inv.scale(&random_coeff(&mut rng));
        }
        let nf_equal = normal_form(&x, &p).map_err(|e| e.to_string())? == normal_form(&y, &p).map_err(|e| e.to_string())?;
        let mut mat_equal = true;
        for e in Parity::BOTH {
            let mx = reps::finite_matrix_at(&x, 4, e, &at).map_err(|e| e.to_string())?;
            let my = reps::finite_matrix_at(&y, 4, e, &at).map_err(|e| e.to_string())?;
            mat_equal &= mx == my;
        }
        if nf_equal == mat_equal {
            agree += 1;
        }
        equal_cases += nf_equal as usize;
    }
    ensure(agree == 100, || format!("{agree}/100 agree"))?;
    Ok(format!("100/100 agree ({equal_cases} equal, {} distinct)", 100 - equal_cases))
}

fn criterion_10() -> Verdict {
    let central = [("ospq", "Q"), ("qbi", "Lam"), ("bi", "L")];
    for (pres, name) in central {
        let p = presentations::by_name(pres).map_err(|e| e.to_string())?;
        // centrality by normal forms needs canonical normal forms
        let report = local_confluence_report(&p).map_err(|e| e.to_string())?;
        ensure(report.iter().all(|c| c.joinable), || format!("{pres} not confluent"))?;
        let x = &catalog::element_in(pres, name).map_err(|e| e.to_string())?.expr;
        ensure(is_central(x, &p).map_err(|e| e.to_string())?, || format!("{name} not central in {pres}"))?;
    }
    let p = presentations::ospq();
    ensure(!is_central(&p.generator("A+"), &p).map_err(|e| e.to_string())?, || "A+ reported central".into())?;
    Ok("Q, Lam, L central; A+ not".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Verdict); 10] = [
        ("suite completeness", criterion_1),
        ("Hopf axioms", criterion_2),
        ("representation soundness bridge", criterion_3),
        ("Casimir spectra", criterion_4),
        ("truncation consistency", criterion_5),
        ("q -> -q correspondence", criterion_6),
        ("q -> 1 limits", criterion_7),
        ("confluence diagnostics", criterion_8),
        ("oracle cross-check", criterion_9),
        ("centrality", criterion_10),
    ];
    let mut results = BTreeMap::new();
    for (k, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let v = f();
        let secs = t.elapsed().as_secs_f64();
        match &v {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail} ({secs:.1} s)", k + 1),
            Err(why) => println!("criterion {:>2} FAIL  {name}: {why} ({secs:.1} s)", k + 1),
        }
        results.insert(k + 1, v.is_ok());
    }
    let passed = results.values().filter(|ok| **ok).count();
    println!("acceptance: {passed}/{} criteria pass", results.len());
    if passed == results.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
