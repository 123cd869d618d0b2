//! Verification sweeps: one row per checked claim, with expected and
//! observed values. The CLI's `verify` command and the acceptance tests
//! both run these.

use num_traits::Signed;
use num_traits::Zero;

use crate::analysis::{
    gap_report, mds_q0, mds_verdict, newton_real_rooted, nonzero, NonzeroDistribution,
    VerdictStatus,
};
use crate::code::{GeneratorMatrix, LinearCode, DEFAULT_BRUTE_BUDGET};
use crate::families;
use crate::field::FieldSpec;
use crate::macwilliams::{macwilliams, macwilliams_each};
use crate::tutte;

#[derive(Debug, Clone)]
pub struct VerifyRow {
    pub subject: String,
    pub expected: String,
    pub observed: String,
    pub pass: bool,
}

impl VerifyRow {
    fn new(subject: String, expected: String, observed: String) -> Self {
        let pass = expected == observed;
        VerifyRow {
            subject,
            expected,
            observed,
            pass,
        }
    }
}

pub fn all_suites() -> Vec<(&'static str, fn() -> Vec<VerifyRow>)> {
    vec![
        ("hamming", suite_hamming),
        ("ext_hamming", suite_ext_hamming),
        ("rm2", suite_rm2),
        ("hrm_prm", suite_hrm_prm),
        ("mds", suite_mds),
        ("hamming_q", suite_hamming_q),
        ("tutte", suite_tutte),
    ]
}

pub fn run_suite(name: &str) -> Option<Vec<VerifyRow>> {
    if name == "all" {
        let mut rows = Vec::new();
        for (_, f) in all_suites() {
            rows.extend(f());
        }
        return Some(rows);
    }
    all_suites()
        .into_iter()
        .find(|(n, _)| *n == name)
        .map(|(_, f)| f())
}

fn gap_row(subject: String, expected_gaps: usize, nzd: &NonzeroDistribution) -> VerifyRow {
    let report = gap_report(nzd);
    VerifyRow::new(
        subject,
        format!("{expected_gaps} gap(s)"),
        format!("{} gap(s)", report.gap_count),
    )
}

/// Binary Hamming codes: log-concave for m = 3 and m >= 5, two gaps at
/// m = 4.
pub fn suite_hamming() -> Vec<VerifyRow> {
    (3..=14u32)
        .map(|m| {
            let wd = families::wd_hamming_binary(m).unwrap();
            let expected = if m == 4 { 2 } else { 0 };
            gap_row(format!("hamming2 m={m}"), expected, &nonzero(&wd))
        })
        .collect()
}

pub fn suite_ext_hamming() -> Vec<VerifyRow> {
    (3..=14u32)
        .map(|m| {
            let wd = families::wd_ext_hamming_binary(m).unwrap();
            gap_row(format!("ext_hamming2 m={m}"), 0, &nonzero(&wd))
        })
        .collect()
}

pub fn suite_rm2() -> Vec<VerifyRow> {
    (2..=14u32)
        .map(|m| {
            let wd = families::wd_rm2(m).unwrap();
            gap_row(format!("rm2 m={m}"), 0, &nonzero(&wd))
        })
        .collect()
}

/// Homogeneous and projective second order codes: at most one gap, and
/// none at all for odd m (homogeneous) or even m (projective).
pub fn suite_hrm_prm() -> Vec<VerifyRow> {
    let mut rows = Vec::new();
    for q in [2u64, 3, 4, 5] {
        for m in 2..=7u32 {
            let h = gap_report(&nonzero(&families::wd_hrm2(q, m).unwrap()));
            let h_expected = if m % 2 == 1 {
                "0 gap(s)".to_string()
            } else {
                "<=1 gap(s)".to_string()
            };
            let h_observed = if m % 2 == 1 {
                format!("{} gap(s)", h.gap_count)
            } else if h.gap_count <= 1 {
                "<=1 gap(s)".to_string()
            } else {
                format!("{} gap(s)", h.gap_count)
            };
            rows.push(VerifyRow::new(
                format!("hrm2 q={q} m={m}"),
                h_expected,
                h_observed,
            ));
            let p = gap_report(&nonzero(&families::wd_prm2(q, m).unwrap()));
            let p_expected = if m % 2 == 0 {
                "0 gap(s)".to_string()
            } else {
                "<=1 gap(s)".to_string()
            };
            let p_observed = if m % 2 == 0 {
                format!("{} gap(s)", p.gap_count)
            } else if p.gap_count <= 1 {
                "<=1 gap(s)".to_string()
            } else {
                format!("{} gap(s)", p.gap_count)
            };
            rows.push(VerifyRow::new(
                format!("prm2 q={q} m={m}"),
                p_expected,
                p_observed,
            ));
        }
    }
    rows
}

fn verdict_row(n: usize, k: usize, q: u64, expected: VerdictStatus) -> VerifyRow {
    let v = mds_verdict(n, k, q).unwrap();
    let show = |s: VerdictStatus| match s {
        VerdictStatus::LogConcave => "log_concave",
        VerdictStatus::NotLogConcave => "not_log_concave",
    };
    VerifyRow::new(
        format!("mds n={n} k={k} q={q}"),
        show(expected).into(),
        show(v.status).into(),
    )
}

/// The MDS threshold and verdict grid.
pub fn suite_mds() -> Vec<VerifyRow> {
    let mut rows = Vec::new();
    let t = mds_q0(5, 3).unwrap();
    rows.push(VerifyRow::new(
        "q0(5,3) quadratic".into(),
        "(6, -44, 66) root in (5, 6)".into(),
        format!(
            "{:?} root in {:?}",
            t.coeffs,
            t.root_intervals.map(|(_, hi)| hi).unwrap_or((0, 0))
        ),
    ));
    let t = mds_q0(12, 9).unwrap();
    rows.push(VerifyRow::new(
        "q0(12,9) quadratic".into(),
        "(13, -209, 418) root in (13, 14)".into(),
        format!(
            "{:?} root in {:?}",
            t.coeffs,
            t.root_intervals.map(|(_, hi)| hi).unwrap_or((0, 0))
        ),
    ));
    for q in [4u64, 5] {
        rows.push(verdict_row(5, 3, q, VerdictStatus::NotLogConcave));
    }
    for q in [7u64, 8, 9, 11, 13] {
        rows.push(verdict_row(5, 3, q, VerdictStatus::LogConcave));
    }
    for q in [16u64, 17, 19] {
        rows.push(verdict_row(12, 9, q, VerdictStatus::LogConcave));
        rows.push(verdict_row(11, 9, q, VerdictStatus::LogConcave));
    }
    // [q+1, q-1] MDS codes, the q-ary Hamming codes of codimension 2
    for q in [3u64, 4, 5, 7, 8] {
        rows.push(verdict_row(q as usize + 1, q as usize - 1, q, VerdictStatus::NotLogConcave));
    }
    for q in [9u64, 11, 13, 16, 25, 27, 32] {
        rows.push(verdict_row(q as usize + 1, q as usize - 1, q, VerdictStatus::LogConcave));
    }
    rows.push(verdict_row(6, 4, 5, VerdictStatus::NotLogConcave));
    rows
}

/// Closed form versus brute force for the q-ary Hamming codes.
pub fn suite_hamming_q() -> Vec<VerifyRow> {
    let mut rows = Vec::new();
    let mut check = |m: u32, q: u64| {
        let wd = families::wd_hamming_q(m, q).unwrap();
        let brute = LinearCode::new(families::gen_hamming_q(m, q).unwrap())
            .unwrap()
            .brute_weight_distribution(DEFAULT_BRUTE_BUDGET)
            .unwrap();
        rows.push(VerifyRow::new(
            format!("hamming_q m={m} q={q} vs brute force"),
            "equal".into(),
            if wd.counts == brute.counts {
                "equal".into()
            } else {
                "different".into()
            },
        ));
    };
    for q in [3u64, 4, 5, 7, 8, 9] {
        check(2, q);
    }
    check(3, 3);
    rows
}

/// Fixed matrices standing in for arbitrary codes in the Tutte sweep.
fn assorted_tutte_codes() -> Vec<(String, LinearCode)> {
    let f2 = FieldSpec::new(2).unwrap();
    let rep3 = GeneratorMatrix::new(f2.clone(), 3, 1, vec![1, 1, 1]).unwrap();
    #[rustfmt::skip]
    let b10 = GeneratorMatrix::new(f2.clone(), 10, 4, vec![
        1, 0, 0, 0, 1, 1, 0, 1, 0, 1,
        0, 1, 0, 0, 0, 1, 1, 1, 1, 0,
        0, 0, 1, 0, 1, 0, 1, 1, 0, 0,
        0, 0, 0, 1, 1, 1, 1, 0, 1, 1,
    ]).unwrap();
    #[rustfmt::skip]
    let b12 = GeneratorMatrix::new(f2, 12, 5, vec![
        1, 0, 0, 0, 0, 1, 1, 0, 1, 0, 1, 1,
        0, 1, 0, 0, 0, 0, 1, 1, 0, 1, 1, 0,
        0, 0, 1, 0, 0, 1, 1, 1, 0, 0, 1, 0,
        0, 0, 0, 1, 0, 0, 1, 0, 1, 1, 0, 1,
        0, 0, 0, 0, 1, 1, 0, 1, 1, 1, 0, 0,
    ]).unwrap();
    vec![
        ("even [4,3]".into(), LinearCode::new(families::gen_even(4).unwrap()).unwrap()),
        ("repetition [3,1]".into(), LinearCode::new(rep3).unwrap()),
        (
            "hamming [7,4]".into(),
            LinearCode::new(families::gen_hamming_q(3, 2).unwrap()).unwrap(),
        ),
        (
            "rs_mds [5,3] over GF(5)".into(),
            LinearCode::new(families::gen_rs_mds(5, 3, 5).unwrap()).unwrap(),
        ),
        (
            "rm(1,3) [8,4]".into(),
            LinearCode::new(families::gen_rm(1, 3).unwrap()).unwrap(),
        ),
        ("binary [10,4]".into(), LinearCode::new(b10).unwrap()),
        ("binary [12,5]".into(), LinearCode::new(b12).unwrap()),
    ]
}

pub fn suite_tutte() -> Vec<VerifyRow> {
    let mut rows = Vec::new();
    for (name, code) in assorted_tutte_codes() {
        let via = tutte::wd_via_tutte(&code, tutte::DEFAULT_TUTTE_BUDGET).unwrap();
        let brute = code.brute_weight_distribution(DEFAULT_BRUTE_BUDGET).unwrap();
        rows.push(VerifyRow::new(
            format!("{name}: weight distribution via Tutte vs brute force"),
            "equal".into(),
            if via.counts == brute.counts {
                "equal".into()
            } else {
                "different".into()
            },
        ));
        let chi = tutte::characteristic_polynomial(&code, tutte::DEFAULT_TUTTE_BUDGET).unwrap();
        let chi2 = tutte::characteristic_via_tutte(&code, tutte::DEFAULT_TUTTE_BUDGET).unwrap();
        rows.push(VerifyRow::new(
            format!("{name}: characteristic polynomial forms"),
            "equal".into(),
            if chi == chi2 { "equal".into() } else { "different".into() },
        ));
        let abs: Vec<_> = chi.coeffs.iter().map(|c| c.abs()).collect();
        let ok = abs.iter().all(|c| !c.is_zero()) && {
            let nzd = NonzeroDistribution {
                weights: (0..abs.len()).collect(),
                counts: abs,
            };
            gap_report(&nzd).log_concave
        };
        rows.push(VerifyRow::new(
            format!("{name}: |chi| coefficients"),
            "log-concave".into(),
            if ok { "log-concave".into() } else { "not log-concave".into() },
        ));
    }
    rows
}

/// Every nonzero distribution that passes through the sweeps also feeds
/// the one-directional Newton check: a real-rooted test polynomial forces
/// log-concavity.
pub fn newton_implication_rows() -> Vec<VerifyRow> {
    let mut distributions: Vec<(String, NonzeroDistribution)> = Vec::new();
    for m in 3..=10u32 {
        distributions.push((
            format!("hamming2 m={m}"),
            nonzero(&families::wd_hamming_binary(m).unwrap()),
        ));
        distributions.push((
            format!("ext_hamming2 m={m}"),
            nonzero(&families::wd_ext_hamming_binary(m).unwrap()),
        ));
        distributions.push((format!("rm2 m={m}"), nonzero(&families::wd_rm2(m).unwrap())));
    }
    for q in [2u64, 3, 4] {
        for m in 2..=4u32 {
            distributions.push((
                format!("hrm2 q={q} m={m}"),
                nonzero(&families::wd_hrm2(q, m).unwrap()),
            ));
            distributions.push((
                format!("prm2 q={q} m={m}"),
                nonzero(&families::wd_prm2(q, m).unwrap()),
            ));
        }
    }
    for (n, k, q) in [(5, 3, 4u64), (5, 3, 5), (5, 3, 7), (6, 4, 5), (8, 4, 9)] {
        distributions.push((
            format!("mds n={n} k={k} q={q}"),
            nonzero(&families::wd_mds(n, k, q).unwrap()),
        ));
    }
    distributions.push(("golay23".into(), nonzero(&families::wd_golay23())));
    distributions.push(("golay24".into(), nonzero(&families::wd_golay24())));
    distributions.push(("even n=4".into(), nonzero(&families::wd_even(4).unwrap())));
    distributions
        .into_iter()
        .map(|(name, nzd)| {
            // a log-concave sequence satisfies the implication no matter
            // what the root count is, so the Sturm chain (expensive for
            // thousand-term sequences) only runs on the gapped ones
            let holds = gap_report(&nzd).log_concave || !newton_real_rooted(&nzd).all_real;
            VerifyRow::new(
                format!("newton implication: {name}"),
                "holds".into(),
                if holds { "holds".into() } else { "violated".into() },
            )
        })
        .collect()
}

/// MacWilliams duality sweep used by the acceptance gate. The transforms are
/// checked entry by entry against the closed-form tables so only one table is
/// live at a time; at m = 16 each one runs to hundreds of megabytes.
pub fn macwilliams_rows(max_m: u32) -> Vec<VerifyRow> {
    fn transform_matches(
        input: &crate::code::WeightDistribution,
        expect: &crate::code::WeightDistribution,
    ) -> bool {
        let mut seen = 0usize;
        let mut equal = true;
        macwilliams_each(input, |j, v| {
            seen += 1;
            equal &= v == expect.counts[j];
        })
        .unwrap();
        equal && seen == expect.counts.len()
    }
    let mut rows = Vec::new();
    for m in 2..=max_m {
        {
            let s = families::wd_simplex(m, 2).unwrap();
            let h = families::wd_hamming_binary(m).unwrap();
            rows.push(VerifyRow::new(
                format!("macwilliams(simplex m={m})"),
                "hamming2".into(),
                if transform_matches(&s, &h) {
                    "hamming2".into()
                } else {
                    "different".into()
                },
            ));
            // the forward transform above has a sparse input and stays
            // cheap at every m; the inverse direction transforms a dense
            // length-n distribution and costs O(n^2) big-integer work, so
            // the involution check stops at moderate lengths
            if s.n <= 255 {
                let back = macwilliams(&macwilliams(&s).unwrap()).unwrap();
                rows.push(VerifyRow::new(
                    format!("double transform m={m}"),
                    "identity".into(),
                    if back.counts == s.counts {
                        "identity".into()
                    } else {
                        "different".into()
                    },
                ));
            }
        }
        let r = families::wd_rm1(m).unwrap();
        let e = families::wd_ext_hamming_binary(m).unwrap();
        rows.push(VerifyRow::new(
            format!("macwilliams(rm1 m={m})"),
            "ext_hamming2".into(),
            if transform_matches(&r, &e) {
                "ext_hamming2".into()
            } else {
                "different".into()
            },
        ));
    }
    rows
}
