//! Randomized structural properties. Each property quantifies over a
//! parameter box small enough to keep the whole suite in the seconds
//! range while still hitting every code path the deterministic tests
//! exercise only pointwise.

use std::collections::HashSet;

use munarini::graphs;
use munarini::poly::{self, RationalSeries};
use munarini::strings::{self, BinaryLabel, PellString};
use num_bigint::BigInt;
use proptest::prelude::*;

/// A valid string drawn uniformly from the full enumeration at (n, k).
fn pell_string() -> impl Strategy<Value = PellString> {
    (0usize..=6, 1u8..=4).prop_flat_map(|(n, k)| {
        let all = strings::enumerate_pell_strings(n, k).expect("enumerate");
        let len = all.len();
        (0..len).prop_map(move |i| all[i].clone())
    })
}

/// Convolution check: the expanded coefficients must satisfy the linear
/// recurrence the denominator encodes, with the numerator as forcing term.
fn satisfies_recurrence(series: &RationalSeries, order: usize) -> Option<usize> {
    let expanded = series.expand(order);
    for m in 0..=order {
        let mut acc = poly::IntPoly::default();
        for (j, d) in series.den().iter().enumerate() {
            if j <= m {
                acc = &acc + &(d * &expanded[m - j]);
            }
        }
        let num = series.num().get(m).cloned().unwrap_or_default();
        if acc != num {
            return Some(m);
        }
    }
    None
}

proptest! {
    /// Decoding inverts encoding, and encoding preserves weight.
    #[test]
    fn encode_decode_roundtrip(s in pell_string()) {
        let encoded = strings::encode_psi(&s);
        prop_assert_eq!(encoded.label().weight(), s.weight());
        prop_assert_eq!(strings::decode_psi(&encoded), s);
    }

    /// Both display forms parse back to the original value.
    #[test]
    fn display_parse_roundtrip(s in pell_string()) {
        let arity = s.arity();
        let reparsed = PellString::parse(&s.to_string(), arity);
        prop_assert_eq!(reparsed.expect("display output parses"), s.clone());
        let label = strings::encode_psi(&s).into_label();
        let reparsed = BinaryLabel::parse(&label.to_string());
        prop_assert_eq!(reparsed.expect("display output parses"), label);
    }

    /// The validity predicate agrees with membership in the enumeration.
    #[test]
    fn membership_matches_predicate(
        n in 0usize..=6,
        k in 1u8..=3,
        seed in proptest::collection::vec(0u8..=3, 0..=6),
    ) {
        let word: Vec<u8> = seed.iter().take(n).map(|&c| c % (k + 1)).collect();
        if word.len() < n {
            return Ok(()); // seed too short for this n; skip
        }
        let enumerated: HashSet<Vec<u8>> = strings::enumerate_pell_strings(n, k)
            .expect("enumerate")
            .iter()
            .map(|s| s.symbols().to_vec())
            .collect();
        prop_assert_eq!(
            strings::is_pell_string(&word, k).expect("in-range symbols"),
            enumerated.contains(&word)
        );
    }

    /// Graph vertex order is the enumeration order, and lookups invert it.
    #[test]
    fn vertex_indices_match_enumeration(n in 0usize..=5, k in 1u8..=4) {
        let graph = graphs::build_munarini(n, k).expect("build");
        let all = strings::enumerate_pell_strings(n, k).expect("enumerate");
        prop_assert_eq!(graph.vertex_count(), all.len());
        for (i, s) in all.iter().enumerate() {
            prop_assert_eq!(graph.vertex_index_of_pell(s), Some(i));
        }
    }

    /// The cube polynomial is the weight polynomial shifted by one.
    #[test]
    fn cube_poly_is_shifted_weight_poly(n in 0usize..=40, k in 1u8..=8) {
        prop_assert_eq!(poly::cube_poly(n, k), poly::weight_poly(n, k).shifted(1));
    }

    /// Every generating function expands to coefficients satisfying its
    /// own denominator recurrence.
    #[test]
    fn series_expansion_satisfies_recurrence(k in 1u8..=6, order in 0usize..=12) {
        prop_assert_eq!(satisfies_recurrence(&poly::order_series(k), order), None);
        prop_assert_eq!(satisfies_recurrence(&poly::edge_series(k), order), None);
        prop_assert_eq!(satisfies_recurrence(&poly::weight_gf(k), order), None);
        prop_assert_eq!(satisfies_recurrence(&poly::cube_gf(k), order), None);
        prop_assert_eq!(satisfies_recurrence(&poly::cube_number_gf(k), order), None);
        if k >= 2 {
            let gf = poly::maximal_cube_gf(k).expect("arity");
            prop_assert_eq!(satisfies_recurrence(&gf, order), None);
        }
    }

    /// Specializing q in the refined polynomial recovers the plain ones.
    #[test]
    fn distance_poly_specializes(n in 0usize..=20, k in 1u8..=6) {
        let refined = poly::distance_cube_poly(n, k);
        prop_assert_eq!(refined.eval_q(&BigInt::from(1)), poly::cube_poly(n, k));
        prop_assert_eq!(refined.eval_q(&BigInt::from(0)), poly::weight_poly(n, k));
    }

    /// The even-run word count matches an exhaustive filter on small boxes.
    #[test]
    fn ank_count_matches_brute_force(n in 0usize..=5, k in 1u8..=2) {
        let alphabet = 2 * u64::from(k) + 1;
        let mut brute = 0u64;
        for code in 0..alphabet.pow(n as u32) {
            let mut word = Vec::with_capacity(n);
            let mut rest = code;
            for _ in 0..n {
                word.push((rest % alphabet) as u8);
                rest /= alphabet;
            }
            let even_runs = |symbol: u8| {
                let mut run = 0usize;
                for i in 0..=n {
                    if i < n && word[i] == symbol {
                        run += 1;
                    } else {
                        if run % 2 == 1 {
                            return false;
                        }
                        run = 0;
                    }
                }
                true
            };
            if even_runs(0) && even_runs(1) {
                brute += 1;
            }
        }
        let counted = strings::count_ank_words(n, k).expect("count");
        prop_assert_eq!(BigInt::from(brute), counted);
    }

    /// The weight histogram of the enumeration matches the polynomial.
    #[test]
    fn weight_histogram_matches_poly(n in 0usize..=6, k in 1u8..=4) {
        let all = strings::enumerate_pell_strings(n, k).expect("enumerate");
        let histogram = strings::weight_histogram(&all);
        let expected = poly::weight_poly(n, k);
        let counted = poly::IntPoly::from_bigints(
            histogram.iter().map(|&c| BigInt::from(c)).collect(),
        );
        prop_assert_eq!(poly::first_coeff_mismatch(&counted, &expected), None);
    }
}
