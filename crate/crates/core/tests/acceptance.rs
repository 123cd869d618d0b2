//! End-to-end acceptance checks. Each test prints one PASS/FAIL line
//! (visible with `cargo test --test acceptance -- --nocapture`).

use std::collections::BTreeMap;
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use wdist::analysis::{
    gap_report, mds_f, mds_g, mds_ratio_g_big, newton_real_rooted, nonzero,
};
use wdist::families::{self, Family, FamilySpec};
use wdist::verify;

fn report(name: &str, ok: bool, elapsed: std::time::Duration, detail: &str) -> bool {
    let mark = if ok { "PASS" } else { "FAIL" };
    println!("{mark}  {name} ({:.3}s) {detail}", elapsed.as_secs_f64());
    ok
}

#[test]
fn criterion_1_hamming31_table() {
    let start = Instant::now();
    let wd = families::wd_hamming_binary(5).unwrap();
    let listed: [(usize, i64); 14] = [
        (3, 155),
        (4, 1085),
        (5, 5208),
        (6, 22568),
        (7, 82615),
        (8, 247845),
        (9, 628680),
        (10, 1383096),
        (11, 2648919),
        (12, 4414865),
        (13, 6440560),
        (14, 8280720),
        (15, 9398115),
        (16, 9398115),
    ];
    let mut ok = wd.n == 31 && wd.k == 26;
    for (w, a) in listed {
        ok &= wd.counts[w] == BigInt::from(a);
    }
    ok &= wd.is_symmetric();
    let elapsed = start.elapsed();
    ok &= elapsed.as_secs_f64() < 0.1;
    assert!(report(
        "criterion 1: length-31 Hamming table",
        ok,
        elapsed,
        "14 tabulated counts, symmetry, < 0.1s"
    ));
}

#[test]
fn criterion_2_worked_examples() {
    let start = Instant::now();
    let mut ok = true;

    let h3 = nonzero(&families::wd_hamming_binary(3).unwrap());
    ok &= h3.counts == [1, 7, 7, 1].map(BigInt::from);
    ok &= gap_report(&h3).log_concave;

    let h4 = nonzero(&families::wd_hamming_binary(4).unwrap());
    let r4 = gap_report(&h4);
    ok &= r4.gap_count == 2;
    ok &= r4
        .violations
        .iter()
        .any(|v| v.index == 3 && v.deficit == BigInt::from(-1176));
    ok &= h4.counts[2] == BigInt::from(105)
        && h4.counts[3] == BigInt::from(168)
        && h4.counts[4] == BigInt::from(280);

    let eh4 = nonzero(&families::wd_ext_hamming_binary(4).unwrap());
    ok &= eh4.counts == [1, 140, 448, 870, 448, 140, 1].map(BigInt::from);
    ok &= gap_report(&eh4).gap_count == 0;

    let g23 = nonzero(&families::wd_golay23());
    let r23 = gap_report(&g23);
    ok &= r23.gap_count == 2;
    ok &= r23
        .violations
        .iter()
        .any(|v| v.deficit == BigInt::from(-69828));

    let g24 = nonzero(&families::wd_golay24());
    ok &= gap_report(&g24).gap_count == 0;

    let even = nonzero(&families::wd_even(4).unwrap());
    ok &= even.counts == [1, 6, 1].map(BigInt::from);
    ok &= gap_report(&even).log_concave;
    ok &= newton_real_rooted(&even).all_real;

    assert!(report(
        "criterion 2: worked examples byte-exact",
        ok,
        start.elapsed(),
        "H3, H4 (-1176), ext-H4, Golay-23 (-69828), Golay-24, even [4,3]"
    ));
}

#[test]
fn criterion_3_macwilliams_sweep() {
    let start = Instant::now();
    let rows = verify::macwilliams_rows(16);
    let mut ok = !rows.is_empty() && rows.iter().all(|r| r.pass);
    let elapsed = start.elapsed();
    ok &= elapsed.as_secs_f64() < 5.0;
    assert!(report(
        "criterion 3: MacWilliams transforms m = 2..16",
        ok,
        elapsed,
        &format!("{} identities, < 5s", rows.len())
    ));
}

fn spec(family: Family, params: &[(&str, u64)]) -> FamilySpec {
    let map: BTreeMap<String, u64> = params
        .iter()
        .map(|(k, v)| (k.to_string(), *v))
        .collect();
    FamilySpec::new(family, map)
}

#[test]
fn criterion_4_closed_form_vs_enumeration() {
    let start = Instant::now();
    let mut cases: Vec<FamilySpec> = Vec::new();
    for m in 2..=4 {
        cases.push(spec(Family::Simplex, &[("m", m), ("q", 2)]));
        cases.push(spec(Family::Hamming2, &[("m", m)]));
        cases.push(spec(Family::ExtHamming2, &[("m", m)]));
    }
    for m in 2..=5 {
        cases.push(spec(Family::Rm2, &[("m", m)]));
    }
    for q in [3, 4, 5, 7, 8, 9] {
        cases.push(spec(Family::HammingQ, &[("m", 2), ("q", q)]));
    }
    cases.push(spec(Family::HammingQ, &[("m", 3), ("q", 3)]));
    for (n, k, q) in [(5, 3, 5), (5, 3, 7), (6, 3, 4), (6, 4, 5)] {
        cases.push(spec(Family::Mds, &[("n", n), ("k", k), ("q", q)]));
    }
    for (q, m) in [(2, 3), (2, 4), (3, 2), (3, 3)] {
        cases.push(spec(Family::Hrm2, &[("q", q), ("m", m)]));
    }
    for (q, m) in [(2, 2), (2, 3), (3, 2)] {
        cases.push(spec(Family::Prm2, &[("q", q), ("m", m)]));
    }
    cases.push(spec(Family::Golay23, &[]));
    cases.push(spec(Family::Golay24, &[]));

    let mut ok = true;
    for c in &cases {
        match families::cross_check(c, 1u64 << 28) {
            Ok(true) => {}
            Ok(false) => {
                println!("  mismatch for {} {:?}", c.family.name(), c.params);
                ok = false;
            }
            Err(e) => {
                println!("  error for {} {:?}: {e}", c.family.name(), c.params);
                ok = false;
            }
        }
    }
    let elapsed = start.elapsed();
    ok &= elapsed.as_secs_f64() < 60.0;
    assert!(report(
        "criterion 4: closed forms match brute-force enumeration",
        ok,
        elapsed,
        &format!("{} codes, < 60s", cases.len())
    ));
}

#[test]
fn criterion_5_gap_count_sweeps() {
    let start = Instant::now();
    let mut rows = verify::run_suite("hamming").unwrap();
    rows.extend(verify::run_suite("ext_hamming").unwrap());
    rows.extend(verify::run_suite("rm2").unwrap());
    rows.extend(verify::run_suite("hrm_prm").unwrap());
    let mut ok = rows.iter().all(|r| r.pass);
    for r in rows.iter().filter(|r| !r.pass) {
        println!("  {}: expected {}, observed {}", r.subject, r.expected, r.observed);
    }
    let elapsed = start.elapsed();
    ok &= elapsed.as_secs_f64() < 30.0;
    assert!(report(
        "criterion 5: gap-count theorem sweeps",
        ok,
        elapsed,
        &format!("{} distributions, < 30s", rows.len())
    ));
}

#[test]
fn criterion_6_mds_thresholds_and_verdicts() {
    // The [4,2] ternary Hamming code (q = 3 row) has nonzero counts (1, 8):
    // a two-term sequence with no internal index, so it is log-concave by
    // the definition, not a violation. The expectation of "not log-concave"
    // for q = 3 is unattainable and that one row is reported honestly as a
    // FAIL line here without failing the build; everything else must pass.
    let start = Instant::now();
    let rows = verify::run_suite("mds").unwrap();
    let mut ok = true;
    for r in &rows {
        if r.pass {
            continue;
        }
        println!(
            "FAIL  criterion 6 sub-check {}: expected {}, observed {}",
            r.subject, r.expected, r.observed
        );
        if r.subject == "mds n=4 k=2 q=3" {
            // known-impossible expectation; see note above
            continue;
        }
        ok = false;
    }
    let elapsed = start.elapsed();
    ok &= elapsed.as_secs_f64() < 5.0;
    report(
        "criterion 6: MDS threshold suite (one vacuous row excepted)",
        ok,
        elapsed,
        &format!("{} rows, < 5s", rows.len()),
    );
    assert!(ok);
    // the mathematically correct value for the excepted row:
    let defect = rows.iter().find(|r| r.subject == "mds n=4 k=2 q=3").unwrap();
    assert!(!defect.pass);
    assert_eq!(defect.observed, "log_concave");
}

#[test]
fn criterion_7_ratio_lemmas() {
    let start = Instant::now();
    let one = BigRational::one();
    let mut checks = 0usize;
    let mut failures: Vec<String> = Vec::new();
    let check = |cond: bool, checks: &mut usize, label: String, failures: &mut Vec<String>| {
        *checks += 1;
        if !cond {
            failures.push(label);
        }
    };
    for k in 3u64..=9 {
        for n in k..=14 {
            let d = n - k + 1;
            for q in [4u64, 5, 7, 8, 9, 11, 13, 16] {
                // the lemmas are statements about MDS codes, so the
                // sample stays in the existence range k < n <= q + 1
                if n <= k || n > q + 1 {
                    continue;
                }
                for s in 1..=(k - 2) {
                    let w = d + s;
                    // positivity, with the single known zero at f(1, q+1, q)
                    let f = mds_f(s, w, q);
                    if s == 1 && w == q + 1 {
                        check(f.is_zero(), &mut checks, format!("f({s},{w},{q}) = 0"), &mut failures);
                    } else {
                        check(f.is_positive(), &mut checks, format!("f({s},{w},{q}) > 0"), &mut failures);
                    }
                    // parity comparisons of f(s+1, w+1) against (1 - 1/q) f(s, w);
                    // strict only when w >= s + 2
                    if w >= s + 2 {
                        let lhs = mds_f(s + 1, w + 1, q);
                        let rhs = (one.clone() - BigRational::new(1.into(), BigInt::from(q))) * &f;
                        let cond = if s % 2 == 0 { lhs < rhs } else { lhs > rhs };
                        check(cond, &mut checks, format!("f parity s={s} w={w} q={q}"), &mut failures);
                    }
                    if s % 2 == 0 {
                        if let Ok(g) = mds_g(s, w, q) {
                            check(g > one, &mut checks, format!("g({s},{w},{q}) > 1"), &mut failures);
                        }
                    } else {
                        if w + 1 < n {
                            if let (Ok(g0), Ok(g1)) = (mds_g(s, w, q), mds_g(s, w + 1, q)) {
                                check(g1 < g0, &mut checks, format!("g odd-s w-step s={s} w={w} q={q}"), &mut failures);
                            }
                        }
                        if s + 2 <= k - 2 {
                            if let (Ok(g0), Ok(g2)) = (mds_g(s, w, q), mds_g(s + 2, w + 2, q)) {
                                check(g2 > g0, &mut checks, format!("g odd-s s-step s={s} w={w} q={q}"), &mut failures);
                            }
                        }
                    }
                    // G A_{w-1} A_{w+1} = A_w^2, straight from the closed form
                    if let Ok(g_big) = mds_ratio_g_big(s as usize, n as usize, k as usize, q) {
                        let wd = families::wd_mds(n as usize, k as usize, q).unwrap();
                        let aw = BigRational::from(wd.counts[w as usize].clone());
                        let prod = BigRational::from(
                            &wd.counts[w as usize - 1] * &wd.counts[w as usize + 1],
                        );
                        check(
                            g_big * prod == aw.clone() * aw,
                            &mut checks,
                            format!("G identity s={s} n={n} k={k} q={q}"),
                            &mut failures,
                        );
                    }
                    // monotone ratio chain over odd s, in the theorem's range
                    if s % 2 == 1 && s + 2 <= k - 2 && 2 * k <= n + 6 {
                        if let (Ok(ga), Ok(gb)) = (
                            mds_ratio_g_big(s as usize, n as usize, k as usize, q),
                            mds_ratio_g_big(s as usize + 2, n as usize, k as usize, q),
                        ) {
                            check(ga < gb, &mut checks, format!("chain s={s} n={n} k={k} q={q}"), &mut failures);
                        }
                    }
                }
            }
        }
    }
    for f in failures.iter().take(10) {
        println!("  failed: {f}");
    }
    let elapsed = start.elapsed();
    let ok = failures.is_empty() && elapsed.as_secs_f64() < 10.0;
    assert!(report(
        "criterion 7: MDS ratio lemmas",
        ok,
        elapsed,
        &format!("{checks} inequality/identity checks, < 10s"),
    ));
}

#[test]
fn criterion_8_tutte_suite() {
    let start = Instant::now();
    let rows = verify::run_suite("tutte").unwrap();
    let mut ok = rows.iter().all(|r| r.pass);
    for r in rows.iter().filter(|r| !r.pass) {
        println!("  {}: expected {}, observed {}", r.subject, r.expected, r.observed);
    }
    let elapsed = start.elapsed();
    ok &= elapsed.as_secs_f64() < 30.0;
    assert!(report(
        "criterion 8: Tutte polynomial suite",
        ok,
        elapsed,
        &format!("{} rows, < 30s", rows.len())
    ));
}

#[test]
fn criterion_9_newton_implication() {
    let start = Instant::now();
    let rows = verify::newton_implication_rows();
    let ok = !rows.is_empty() && rows.iter().all(|r| r.pass);
    for r in rows.iter().filter(|r| !r.pass) {
        println!("  {}: expected {}, observed {}", r.subject, r.expected, r.observed);
    }
    assert!(report(
        "criterion 9: real-rootedness implies log-concavity",
        ok,
        start.elapsed(),
        &format!("{} distributions", rows.len())
    ));
}
