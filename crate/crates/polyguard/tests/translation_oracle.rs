//! Translation-metric oracle: the independent naive implementations in
//! `support` validate the fixtures, and the identity bounds hold to 1e-9.
//! The non-trivial fixture values below were computed with those oracles
//! before being frozen.

mod support;

use polyguard::translate::translation_metrics;
use support::{oracle_bleu, oracle_chrf, oracle_ter, oracle_tokens, oracle_edit_distance};

const BLEU_FIXTURE_CAND: &str = "the the the";
const BLEU_FIXTURE_REF: &str = "the cat sat on the mat";
// Frozen at the oracle's full printed precision.
#[allow(clippy::excessive_precision)]
const BLEU_FIXTURE_VALUE: f64 = 21.239529404380028;

const TER_FIXTURE_CAND: &str = "saturday i went to the market";
const TER_FIXTURE_REF: &str = "i went to the market on saturday";
#[allow(clippy::excessive_precision)]
const TER_FIXTURE_VALUE: f64 = 28.571428571428573;

const MIXED_FIXTURE_CAND: &str = "the small cat sat quietly on a mat";
const MIXED_FIXTURE_REF: &str = "a small cat was sitting quietly on the mat";

#[test]
fn identity_bounds_within_1e9() {
    for text in ["the cat sat", "one two three four five", "a"] {
        let score = translation_metrics(text, text).unwrap();
        assert!((score.bleu - 100.0).abs() < 1e-9, "bleu {}", score.bleu);
        assert!((score.chrf - 100.0).abs() < 1e-9, "chrf {}", score.chrf);
        assert!(score.ter.abs() < 1e-9, "ter {}", score.ter);
    }
}

#[test]
fn bleu_fixture_matches_oracle_and_frozen_value() {
    let oracle = oracle_bleu(BLEU_FIXTURE_CAND, BLEU_FIXTURE_REF);
    let engine = translation_metrics(BLEU_FIXTURE_CAND, BLEU_FIXTURE_REF).unwrap();
    assert!((engine.bleu - oracle).abs() < 1e-9, "engine {} oracle {oracle}", engine.bleu);
    assert!(
        (engine.bleu - BLEU_FIXTURE_VALUE).abs() < 1e-6,
        "engine {} frozen {BLEU_FIXTURE_VALUE}",
        engine.bleu
    );
}

#[test]
fn ter_fixture_matches_oracle_and_frozen_value() {
    let oracle = oracle_ter(TER_FIXTURE_CAND, TER_FIXTURE_REF);
    let engine = translation_metrics(TER_FIXTURE_CAND, TER_FIXTURE_REF).unwrap();
    assert!((engine.ter - oracle).abs() < 1e-9, "engine {} oracle {oracle}", engine.ter);
    assert!(
        (engine.ter - TER_FIXTURE_VALUE).abs() < 1e-6,
        "engine {} frozen {TER_FIXTURE_VALUE}",
        engine.ter
    );
    // The value decomposes as one shift plus one edit over seven words.
    let shift_and_edit = 100.0 * 2.0 / oracle_tokens(TER_FIXTURE_REF).len() as f64;
    assert!((engine.ter - shift_and_edit).abs() < 1e-9);
}

#[test]
fn shiftless_edit_distance_agrees_with_full_matrix_dp() {
    let a = oracle_tokens("the quick brown fox");
    let b = oracle_tokens("the slow brown dog jumps");
    assert_eq!(oracle_edit_distance(&a, &b), 3);
}

#[test]
fn all_three_metrics_match_oracles_on_a_mixed_fixture() {
    let engine = translation_metrics(MIXED_FIXTURE_CAND, MIXED_FIXTURE_REF).unwrap();
    let bleu = oracle_bleu(MIXED_FIXTURE_CAND, MIXED_FIXTURE_REF);
    let chrf = oracle_chrf(MIXED_FIXTURE_CAND, MIXED_FIXTURE_REF);
    let ter = oracle_ter(MIXED_FIXTURE_CAND, MIXED_FIXTURE_REF);
    assert!((engine.bleu - bleu).abs() < 1e-9, "bleu: {} vs {bleu}", engine.bleu);
    assert!((engine.chrf - chrf).abs() < 1e-9, "chrf: {} vs {chrf}", engine.chrf);
    assert!((engine.ter - ter).abs() < 1e-9, "ter: {} vs {ter}", engine.ter);
}

#[test]
fn oracle_agreement_on_randomized_word_salads() {
    // Small vocabulary so n-gram overlaps and shifts actually occur.
    let vocabulary = ["the", "cat", "sat", "on", "mat", "a", "dog", "ran"];
    let mut state = 0x9e3779b97f4a7c15u64;
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state
    };
    for _ in 0..60 {
        let make = |next: &mut dyn FnMut() -> u64| {
            let len = 1 + (next() % 9) as usize;
            (0..len)
                .map(|_| vocabulary[(next() % vocabulary.len() as u64) as usize])
                .collect::<Vec<_>>()
                .join(" ")
        };
        let cand = make(&mut next);
        let refr = make(&mut next);
        let engine = translation_metrics(&cand, &refr).unwrap();
        assert!(
            (engine.bleu - oracle_bleu(&cand, &refr)).abs() < 1e-9,
            "bleu mismatch on {cand:?} vs {refr:?}"
        );
        assert!(
            (engine.chrf - oracle_chrf(&cand, &refr)).abs() < 1e-9,
            "chrf mismatch on {cand:?} vs {refr:?}"
        );
        assert!(
            (engine.ter - oracle_ter(&cand, &refr)).abs() < 1e-9,
            "ter mismatch on {cand:?} vs {refr:?}"
        );
    }
}

#[test]
fn substitution_only_ter_is_exactly_one_hundred() {
    let score = translation_metrics("aa bb cc dd", "ww xx yy zz").unwrap();
    assert!((score.ter - 100.0).abs() < 1e-9);
}

#[test]
fn direction_sensitivity_on_an_asymmetric_fixture() {
    let ab = translation_metrics(MIXED_FIXTURE_CAND, MIXED_FIXTURE_REF).unwrap();
    let ba = translation_metrics(MIXED_FIXTURE_REF, MIXED_FIXTURE_CAND).unwrap();
    assert_ne!(ab.ter, ba.ter, "TER must be direction-sensitive");
}
