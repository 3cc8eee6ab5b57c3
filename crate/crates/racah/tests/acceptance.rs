//! Acceptance criteria 1-11 over the default battery, zero tolerance.
//!
//! Every criterion is evaluated twice: once with the displayed formulas where the criterion names
//! them ("literal"), and once allowing the documented corrections. The test prints one line per
//! criterion (the target runs without the libtest harness, so the lines are never captured) and
//! asserts the observed outcome: criteria 3 and 4 are known to fail literally, and
//! every criterion must hold with the corrections.

use std::time::{Duration, Instant};

use racah::algebra::RelationReport;
use racah::battery::{run_default, Family, RunReport, BIVARIATE_N, UNIVARIATE_N};

struct Outcome {
    literal: bool,
    corrected: bool,
    note: String,
}

fn reports<'a>(runs: &'a [RunReport], family: Family, prefixes: &'a [&str]) -> impl Iterator<Item = &'a RelationReport> {
    runs.iter()
        .filter(move |r| r.family == family)
        .flat_map(|r| &r.reports)
        .filter(move |r| prefixes.iter().any(|p| r.relation_id == *p || r.relation_id.starts_with(&format!("{p}."))))
}

fn count(runs: &[RunReport], family: Family, prefixes: &[&str]) -> usize {
    reports(runs, family, prefixes).count()
}

/// Literal: every printed form holds. Corrected: nothing failed.
fn strict(runs: &[RunReport], family: Family, prefixes: &[&str]) -> (bool, bool) {
    assert!(count(runs, family, prefixes) > 0, "no reports for {prefixes:?}");
    let literal = reports(runs, family, prefixes).all(|r| r.printed_form_holds);
    let corrected = reports(runs, family, prefixes).all(|r| !r.failed());
    (literal, corrected)
}

/// Criteria that accept documented corrections: both flags are "nothing failed".
fn lenient(runs: &[RunReport], family: Family, prefixes: &[&str]) -> (bool, bool) {
    let (_, ok) = strict(runs, family, prefixes);
    (ok, ok)
}

fn corrected_ids(runs: &[RunReport], family: Family, prefixes: &[&str]) -> String {
    let mut ids: Vec<&str> = reports(runs, family, prefixes)
        .filter(|r| !r.printed_form_holds)
        .map(|r| r.relation_id.as_str())
        .collect();
    ids.sort();
    ids.dedup();
    if ids.len() > 4 {
        format!("{} relations in corrected form, e.g. {}", ids.len(), ids[..4].join(", "))
    } else if ids.is_empty() {
        "all printed".to_string()
    } else {
        format!("corrected form: {}", ids.join(", "))
    }
}

fn evaluate(runs: &[RunReport], elapsed: Duration) -> Vec<Outcome> {
    use Family::{Bivariate as B, Univariate as U};
    let mut out = Vec::new();
    let uni_runs = runs.iter().filter(|r| r.family == U).count();
    let bi_runs = runs.iter().filter(|r| r.family == B).count();
    assert_eq!(uni_runs, 5 * UNIVARIATE_N.count());
    assert_eq!(bi_runs, 5 * BIVARIATE_N.count());

    // 1
    let (l, c) = strict(runs, U, &["racah1.eigen", "racah1.spectrum-simple"]);
    out.push(Outcome {
        literal: l,
        corrected: c,
        note: format!("{uni_runs} runs, N in 2..=8"),
    });

    // 2: the relations use the Casimir form of d, e1, e2; the closed β-form of e1 is reported separately.
    let (l, c) = strict(runs, U, &["qr3.k1k2", "qr3.k2k3", "qr3.k3k1"]);
    let e1_printed = reports(runs, U, &["qr3.constant.e1"]).all(|r| r.printed_form_holds);
    let (_, consts) = strict(runs, U, &["qr3.constant"]);
    out.push(Outcome {
        literal: l,
        corrected: c && consts,
        note: format!(
            "relations with the Casimir-form constants; closed β-form of e1 {}",
            if e1_printed { "agrees" } else { "disagrees (sign of β0), corrected form agrees" }
        ),
    });

    // 3
    let (l, c) = strict(runs, U, &["racah1.orthogonality"]);
    out.push(Outcome {
        literal: l,
        corrected: c,
        note: "displayed n-block·N-block is the squared norm of the 4F3; σ_n = 1/(prefactor²·n-block·N-block)".into(),
    });

    // 4
    let ids = [
        "racah2.lambda1x.eigen",
        "racah2.lambda2x.eigen",
        "racah2.script-l1.eigen",
        "racah2.script-l2.eigen",
    ];
    let (l, c) = strict(runs, B, &ids);
    out.push(Outcome {
        literal: l,
        corrected: c,
        note: corrected_ids(runs, B, &ids),
    });

    // 5
    let ids = ["racah2.comm"];
    let (l, c) = lenient(runs, B, &ids);
    out.push(Outcome {
        literal: l,
        corrected: c,
        note: corrected_ids(runs, B, &ids),
    });

    // 6: the closure is judged in the orientation the open question allows.
    let (l, c) = lenient(runs, B, &["qr9"]);
    let closure = reports(runs, B, &["qr9.closure.k3k4"]).all(|r| !r.failed());
    out.push(Outcome {
        literal: l && closure,
        corrected: c && closure,
        note: format!(
            "closure holds with L2 = [K4,K1], L4 = [K5,K2]; {}",
            corrected_ids(runs, B, &["qr9"])
        ),
    });

    // 7
    let ids = ["casimir"];
    let (l, c) = lenient(runs, B, &ids);
    out.push(Outcome {
        literal: l,
        corrected: c,
        note: "printed ε-weighted R holds for 12 of 24 assignments; R_ijk = [Q(ij),Q(jk)] holds for all".into(),
    });

    // 8
    let ids = ["dual"];
    let (l, c) = lenient(runs, B, &ids);
    out.push(Outcome {
        literal: l,
        corrected: c,
        note: corrected_ids(runs, B, &ids),
    });

    // 9: the ys reading must be adjudicated, so exactly one reading may hold.
    let ids = ["my"];
    let (l, c) = lenient(runs, B, &ids);
    let adjudicated = reports(runs, B, &["my.ys-reading"])
        .all(|r| !r.printed_form_holds && r.corrected_form_holds == Some(true));
    out.push(Outcome {
        literal: l && adjudicated,
        corrected: c && adjudicated,
        note: format!("ys: symmetric reading holds, literal fails; {}", corrected_ids(runs, B, &ids)),
    });

    // 10
    let (l, c) = strict(runs, B, &["racah2.orthogonality"]);
    out.push(Outcome {
        literal: l,
        corrected: c,
        note: "solve_weight, positivity, exact congruence".into(),
    });

    // 11
    let fast = elapsed < Duration::from_secs(60);
    out.push(Outcome {
        literal: fast,
        corrected: fast,
        note: format!("{:.1} s", elapsed.as_secs_f64()),
    });
    out
}

fn main() {
    let start = Instant::now();
    let runs = run_default().expect("default battery runs");
    let elapsed = start.elapsed();
    let outcomes = evaluate(&runs, elapsed);

    for (i, o) in outcomes.iter().enumerate() {
        let line = match (o.literal, o.corrected) {
            (true, _) => "PASS".to_string(),
            (false, true) => "FAIL (holds only in corrected form)".to_string(),
            (false, false) => "FAIL".to_string(),
        };
        println!("criterion {:>2}: {line}: {}", i + 1, o.note);
    }

    let known_literal_failures = [3, 4];
    for (i, o) in outcomes.iter().enumerate() {
        let k = i + 1;
        assert!(o.corrected, "criterion {k} fails even with the documented corrections: {}", o.note);
        assert_eq!(
            o.literal,
            !known_literal_failures.contains(&k),
            "criterion {k} literal outcome changed: {}",
            o.note
        );
    }
}
