//! Acceptance suite: one line per criterion, non-zero exit if any fails.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::Instant;

use num_traits::{One, ToPrimitive};
use qident_core::distributions::{marginal_vs_bruteforce, normalization_check, sample, TruncatedSupport};
use qident_core::identities::*;
use qident_core::qseries::{
    coeff_lemma_check, random_limit_transform_suite, random_qchu_suite, random_transform_suite,
    RandomSuite,
};
use qident_core::report::NUMERIC_POINTS;
use qident_core::{parse_rational, CLFamily, CLParams, RationalFunction, VerificationReport};

struct Outcome {
    pass: bool,
    detail: String,
    reports: Vec<VerificationReport>,
}

fn from_reports(reports: Vec<VerificationReport>, extra: Option<(bool, String)>) -> Outcome {
    let failed: Vec<_> = reports.iter().filter(|r| !r.pass).map(|r| r.identity.to_string()).collect();
    let checked: usize = reports.iter().map(|r| r.checked).sum();
    let mut pass = failed.is_empty() && reports.iter().all(|r| r.checked > 0);
    let mut detail = format!("{checked} comparisons");
    if !failed.is_empty() {
        detail.push_str(&format!(", failing: {}", failed.join(", ")));
    }
    if let Some((ok, note)) = extra {
        pass &= ok;
        detail.push_str(&format!("; {note}"));
    }
    Outcome { pass, detail, reports }
}

fn qm(e: i64) -> RationalFunction {
    RationalFunction::q_monomial(e)
}

fn covers(report: &VerificationReport, m_range: std::ops::RangeInclusive<i64>) -> bool {
    let seen: Vec<i64> = report.outcomes.iter().filter_map(|o| o.index.get("m")?.as_i64()).collect();
    m_range.clone().all(|m| seen.contains(&m))
}

fn criterion_1() -> Outcome {
    let r = check_anz1(10);
    let ok = covers(&r, 0..=10);
    from_reports(vec![r], Some((ok, "m = 0..10".into())))
}

fn criterion_2() -> Outcome {
    let r = check_anz2(10);
    let spot = lhs_anz2(0).unwrap() == RationalFunction::one() - qm(-1);
    let ok = covers(&r, 0..=10) && spot;
    from_reports(vec![r], Some((ok, format!("m = 0..10, lhs(0) = 1 - 1/q: {spot}"))))
}

fn criterion_3() -> Outcome {
    let r = check_anz3(10);
    let spot = lhs_anz3(1).unwrap() == qm(-1) && rhs_anz3(1).unwrap() == qm(-1);
    let ok = covers(&r, 0..=10) && spot;
    from_reports(vec![r], Some((ok, format!("m = 0..10, both sides at m = 1 equal 1/q: {spot}"))))
}

fn criterion_4() -> Outcome {
    from_reports(vec![check_bridge_ab(8), check_bridge_c(8), check_bridge_d(8)], None)
}

fn criterion_5() -> Outcome {
    from_reports(vec![check_ab_split(8), check_c_split(8), check_d_eq_b2(8), check_c2_neg_b2(8)], None)
}

fn criterion_6() -> Outcome {
    from_reports(vec![check_a2_sum(8), check_b2_sum(8), check_c2_sum(8), check_c1_sum(8)], None)
}

fn criterion_7() -> Outcome {
    let suite = RandomSuite::default();
    let reports = vec![
        random_qchu_suite(&suite),
        random_transform_suite(&suite),
        random_limit_transform_suite(&suite),
    ];
    let mut ok = true;
    let mut notes = Vec::new();
    for r in &reports {
        let mut accepted: BTreeMap<i64, usize> = BTreeMap::new();
        for o in &r.outcomes {
            *accepted.entry(o.index["n"].as_i64().unwrap()).or_default() += 1;
        }
        let per_n_ok = (0..=i64::from(suite.n_max)).all(|n| accepted.get(&n).copied().unwrap_or(0) >= suite.per_n);
        let draws = r.checked + r.skipped.len();
        let rate = r.skipped.len() as f64 / draws as f64;
        ok &= per_n_ok && rate < 0.2;
        notes.push(format!("{} skipped {}/{} ({:.1}%)", r.identity, r.skipped.len(), draws, 100.0 * rate));
    }
    from_reports(reports, Some((ok, notes.join(", "))))
}

fn criterion_8() -> Outcome {
    let r = coeff_lemma_check(6, 12);
    let expected: usize = (0..=6).map(|k| 13 - k).sum();
    let ok = r.checked == expected;
    from_reports(vec![r], Some((ok, "k <= 6, m <= 12".into())))
}

fn criterion_9() -> Outcome {
    from_reports(
        vec![marginal_vs_bruteforce(CLFamily::Sp, 3, 12), marginal_vs_bruteforce(CLFamily::O, 3, 12)],
        Some((true, "first columns <= 6, D = 12".into())),
    )
}

fn criterion_10() -> Outcome {
    from_reports(
        vec![normalization_check(CLFamily::Sp, 12), normalization_check(CLFamily::O, 12)],
        Some((true, "through u^12".into())),
    )
}

/// Every outcome of the symbolic criteria also agreed at each non-pole point.
fn criterion_11(previous: &[Outcome]) -> Outcome {
    let mut outcomes = 0;
    let mut evaluations = 0;
    let mut unevaluated = 0;
    let mut failed = 0;
    for o in previous {
        for r in &o.reports {
            for out in &r.outcomes {
                outcomes += 1;
                evaluations += out.numeric_points.len();
                if out.numeric_points.is_empty() {
                    unevaluated += 1;
                }
                if !out.pass {
                    failed += 1;
                }
            }
        }
    }
    let pass = failed == 0 && unevaluated == 0 && outcomes > 0;
    Outcome {
        pass,
        detail: format!(
            "{outcomes} outcomes, {evaluations} evaluations at q in {NUMERIC_POINTS:?}, {unevaluated} without a non-pole point, {failed} failed"
        ),
        reports: Vec::new(),
    }
}

fn criterion_12() -> Outcome {
    let r = |s: &str| parse_rational(s).unwrap();
    let params = CLParams::with_default_tolerance(r("2"), r("1/2")).unwrap();
    let n = 10_000usize;
    let mut pass = true;
    let mut notes = Vec::new();
    for family in [CLFamily::Sp, CLFamily::O] {
        let first = sample(family, &params, 6, n, 42).unwrap();
        let second = sample(family, &params, 6, n, 42).unwrap();
        let deterministic = first == second;
        let support = TruncatedSupport::new(family, &params, 6).unwrap();
        let probs = support.renormalized();
        let mut worst: f64 = 0.0;
        let mut cells = 0;
        for (l, p) in support.partitions.iter().zip(&probs) {
            if l.size() > 4 {
                continue;
            }
            cells += 1;
            let p = p.to_f64().unwrap();
            let observed = first.draws.iter().filter(|d| *d == l).count() as f64;
            let expected = n as f64 * p;
            let sd = (n as f64 * p * (1.0 - p)).sqrt();
            worst = worst.max((observed - expected).abs() / sd);
        }
        pass &= deterministic && worst <= 5.0;
        notes.push(format!("{family}: {cells} cells, max |z| = {worst:.2}, deterministic: {deterministic}"));
    }
    Outcome {
        pass,
        detail: notes.join("; "),
        reports: Vec::new(),
    }
}

fn main() -> ExitCode {
    let titles = [
        "first identity, m = 0..10",
        "second identity, m = 0..10",
        "third identity, m = 0..10",
        "bridges to enumeration, m <= 8",
        "termwise identities, m <= 8",
        "closed-form sums, m <= 8",
        "2phi1 evaluations on seeded random parameters, n <= 8",
        "coefficient lemma against series, k <= 6, m <= 12",
        "marginals against enumeration",
        "normalization series",
        "numeric consistency at q = 2, 3, 5",
        "sampler frequencies and determinism",
    ];
    let runners: [fn() -> Outcome; 10] = [
        criterion_1,
        criterion_2,
        criterion_3,
        criterion_4,
        criterion_5,
        criterion_6,
        criterion_7,
        criterion_8,
        criterion_9,
        criterion_10,
    ];
    let mut outcomes = Vec::new();
    let mut all = true;
    let mut emit = |i: usize, o: &Outcome, secs: f64| {
        let verdict = if o.pass { "PASS" } else { "FAIL" };
        println!("criterion {:>2} [PRIMARY] {}: {verdict} ({}; {secs:.1}s)", i + 1, titles[i], o.detail);
        all &= o.pass;
    };
    for (i, run) in runners.iter().enumerate() {
        let start = Instant::now();
        let o = run();
        emit(i, &o, start.elapsed().as_secs_f64());
        outcomes.push(o);
    }
    let start = Instant::now();
    let o = criterion_11(&outcomes);
    emit(10, &o, start.elapsed().as_secs_f64());
    let start = Instant::now();
    let o = criterion_12();
    emit(11, &o, start.elapsed().as_secs_f64());
    if all {
        println!("acceptance: all 12 criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: FAILED");
        ExitCode::FAILURE
    }
}
