//! Randomized properties over small codes.

use num_traits::Zero;
use proptest::prelude::*;

use wdist::analysis::{gap_report, nonzero};
use wdist::code::{GeneratorMatrix, LinearCode};
use wdist::field::FieldSpec;
use wdist::macwilliams::macwilliams;
use wdist::tutte;

fn arb_code(qs: &'static [u64]) -> impl Strategy<Value = LinearCode> {
    (0..qs.len(), 1usize..=4, 1usize..=8)
        .prop_flat_map(move |(qi, k, extra)| {
            let q = qs[qi];
            let n = k + extra.min(8 - k);
            (
                Just(q),
                Just(n),
                Just(k),
                proptest::collection::vec(0u64..q, k * n),
            )
        })
        .prop_filter_map("rank-deficient sample", |(q, n, k, entries)| {
            let field = FieldSpec::new(q).unwrap();
            let entries: Vec<u32> = entries.into_iter().map(|x| x as u32).collect();
            let gen = GeneratorMatrix::new(field, n, k, entries).ok()?;
            LinearCode::new(gen).ok()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn dual_is_an_involution(code in arb_code(&[2, 3, 4, 5])) {
        let dual = code.dual();
        prop_assert_eq!(dual.n(), code.n());
        prop_assert_eq!(dual.rank(), code.n() - code.rank());
        let back = dual.dual();
        let wd1 = code.brute_weight_distribution(1 << 20).unwrap();
        let wd2 = back.brute_weight_distribution(1 << 20).unwrap();
        prop_assert_eq!(wd1.counts, wd2.counts);
    }

    #[test]
    fn macwilliams_matches_brute_forced_dual(code in arb_code(&[2, 3, 4, 5])) {
        let wd = code.brute_weight_distribution(1 << 20).unwrap();
        let transformed = macwilliams(&wd).unwrap();
        let dual_wd = code.dual().brute_weight_distribution(1 << 20).unwrap();
        prop_assert_eq!(transformed.counts, dual_wd.counts);
    }

    #[test]
    fn matrix_text_roundtrip(code in arb_code(&[2, 3, 4, 5, 7, 8, 9])) {
        let gen = code.generator();
        let text = gen.to_text();
        let parsed = GeneratorMatrix::from_text(&text).unwrap();
        prop_assert_eq!(parsed.to_text(), text);
        let reparsed = LinearCode::new(parsed).unwrap();
        prop_assert_eq!(reparsed.rank(), code.rank());
    }

    #[test]
    fn tutte_agrees_with_brute_force(code in arb_code(&[2, 3])) {
        let via_tutte = tutte::wd_via_tutte(&code, 1 << 16).unwrap();
        let brute = code.brute_weight_distribution(1 << 20).unwrap();
        prop_assert_eq!(via_tutte.counts, brute.counts);
    }

    #[test]
    fn gap_report_is_consistent(code in arb_code(&[2, 3, 4])) {
        let wd = code.brute_weight_distribution(1 << 20).unwrap();
        prop_assert!(wd.is_valid());
        let nzd = nonzero(&wd);
        prop_assert!(nzd.counts.iter().all(|c| !c.is_zero()));
        let report = gap_report(&nzd);
        prop_assert_eq!(report.log_concave, report.gap_count == 0);
        prop_assert_eq!(report.violations.len(), report.gap_count);
        if report.log_concave {
            prop_assert!(report.unimodal);
        }
    }
}
