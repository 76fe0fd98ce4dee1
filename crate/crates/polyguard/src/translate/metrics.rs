//! Translation quality metrics: BLEU, chrF, and TER.
//!
//! Configuration, pinned for reproducibility:
//! - Tokenization (BLEU/TER): NFC normalization, then tokens are maximal
//!   runs of alphanumeric characters; whitespace and punctuation separate
//!   and are dropped.
//! - BLEU: n-grams up to 4, modified (clipped) precision, add-one smoothing
//!   on orders 2..4 so single short pairs stay non-degenerate, brevity
//!   penalty `exp(1 - r/c)` when the candidate is shorter.
//! - chrF: character n-grams of order 1..6 over NFC text with whitespace
//!   removed, precision and recall arithmetically averaged over orders that
//!   have n-grams, F-score with beta = 2.
//! - TER: word-level edit rate with a greedy block-shift phase (shift cost
//!   1; the shift with the largest edit-distance reduction is applied first,
//!   ties broken by smallest (start, length, destination)); shifted blocks
//!   are capped at 10 tokens and the shift search is skipped beyond 100
//!   candidate tokens. Reported as a percentage of the reference length, so
//!   values above 100 are possible.
//!
//! Scores are direction-sensitive: candidate and reference roles are not
//! interchangeable.

use std::collections::HashMap;

use icu_normalizer::ComposingNormalizerBorrowed;
use serde::{Deserialize, Serialize};

use super::TranslationError;

/// BLEU, chrF and TER for one candidate/reference pair. BLEU and chrF lie
/// in [0, 100]; TER is >= 0 and may exceed 100.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TranslationScore {
    pub bleu: f64,
    pub chrf: f64,
    pub ter: f64,
}

const BLEU_MAX_ORDER: usize = 4;
const CHRF_MAX_ORDER: usize = 6;
const CHRF_BETA_SQ: f64 = 4.0;
const TER_MAX_SHIFT_LEN: usize = 10;
const TER_SHIFT_TOKEN_CAP: usize = 100;

fn nfc(text: &str) -> String {
    ComposingNormalizerBorrowed::new_nfc().normalize(text).into_owned()
}

/// Word tokens: maximal alphanumeric runs after NFC normalization.
pub(crate) fn tokenize(text: &str) -> Vec<String> {
    nfc(text)
        .split(|c: char| !c.is_alphanumeric())
        .filter(|t| !t.is_empty())
        .map(str::to_string)
        .collect()
}

fn ngram_counts(tokens: &[String], n: usize) -> HashMap<&[String], usize> {
    let mut counts = HashMap::new();
    if tokens.len() >= n {
        for window in tokens.windows(n) {
            *counts.entry(window).or_insert(0) += 1;
        }
    }
    counts
}

fn bleu(candidate: &[String], reference: &[String]) -> f64 {
    let mut log_precision_sum = 0.0;
    for n in 1..=BLEU_MAX_ORDER {
        let cand_counts = ngram_counts(candidate, n);
        let ref_counts = ngram_counts(reference, n);
        let hyp_total: usize = cand_counts.values().sum();
        let matched: usize = cand_counts
            .iter()
            .map(|(gram, &count)| count.min(ref_counts.get(gram).copied().unwrap_or(0)))
            .sum();
        let precision = if n == 1 {
            if hyp_total == 0 {
                return 0.0;
            }
            matched as f64 / hyp_total as f64
        } else {
            (matched + 1) as f64 / (hyp_total + 1) as f64
        };
        if precision == 0.0 {
            return 0.0;
        }
        log_precision_sum += precision.ln();
    }
    let c = candidate.len() as f64;
    let r = reference.len() as f64;
    let brevity_penalty = if c >= r { 1.0 } else { (1.0 - r / c).exp() };
    100.0 * brevity_penalty * (log_precision_sum / BLEU_MAX_ORDER as f64).exp()
}

fn chrf(candidate: &str, reference: &str) -> f64 {
    let cand: Vec<char> = nfc(candidate).chars().filter(|c| !c.is_whitespace()).collect();
    let refr: Vec<char> = nfc(reference).chars().filter(|c| !c.is_whitespace()).collect();

    let char_ngrams = |chars: &[char], n: usize| -> HashMap<Vec<char>, usize> {
        let mut counts = HashMap::new();
        if chars.len() >= n {
            for window in chars.windows(n) {
                *counts.entry(window.to_vec()).or_insert(0) += 1;
            }
        }
        counts
    };

    let mut precision_sum = 0.0;
    let mut precision_orders = 0usize;
    let mut recall_sum = 0.0;
    let mut recall_orders = 0usize;

    for n in 1..=CHRF_MAX_ORDER {
        let cand_counts = char_ngrams(&cand, n);
        let ref_counts = char_ngrams(&refr, n);
        let cand_total: usize = cand_counts.values().sum();
        let ref_total: usize = ref_counts.values().sum();
        let matched: usize = cand_counts
            .iter()
            .map(|(gram, &count)| count.min(ref_counts.get(gram).copied().unwrap_or(0)))
            .sum();
        if cand_total > 0 {
            precision_sum += matched as f64 / cand_total as f64;
            precision_orders += 1;
        }
        if ref_total > 0 {
            recall_sum += matched as f64 / ref_total as f64;
            recall_orders += 1;
        }
    }

    let precision = if precision_orders == 0 { 0.0 } else { precision_sum / precision_orders as f64 };
    let recall = if recall_orders == 0 { 0.0 } else { recall_sum / recall_orders as f64 };
    let denominator = CHRF_BETA_SQ * precision + recall;
    if denominator == 0.0 {
        return 0.0;
    }
    100.0 * (1.0 + CHRF_BETA_SQ) * precision * recall / denominator
}

fn edit_distance(a: &[String], b: &[String]) -> usize {
    let mut prev: Vec<usize> = (0..=b.len()).collect();
    let mut current = vec![0usize; b.len() + 1];
    for (i, a_tok) in a.iter().enumerate() {
        current[0] = i + 1;
        for (j, b_tok) in b.iter().enumerate() {
            let substitution = prev[j] + usize::from(a_tok != b_tok);
            current[j + 1] = substitution.min(prev[j + 1] + 1).min(current[j] + 1);
        }
        std::mem::swap(&mut prev, &mut current);
    }
    prev[b.len()]
}

fn contains_block(reference: &[String], block: &[String]) -> bool {
    reference.len() >= block.len() && reference.windows(block.len()).any(|w| w == block)
}

fn apply_shift(tokens: &[String], start: usize, len: usize, dest: usize) -> Vec<String> {
    let mut remaining: Vec<String> = Vec::with_capacity(tokens.len());
    remaining.extend_from_slice(&tokens[..start]);
    remaining.extend_from_slice(&tokens[start + len..]);
    let mut shifted = Vec::with_capacity(tokens.len());
    shifted.extend_from_slice(&remaining[..dest]);
    shifted.extend_from_slice(&tokens[start..start + len]);
    shifted.extend_from_slice(&remaining[dest..]);
    shifted
}

/// (reduction, (start, length, destination), shifted tokens)
type ShiftCandidate = (usize, (usize, usize, usize), Vec<String>);

/// Greedy TER: repeatedly apply the block shift with the largest
/// edit-distance reduction, then charge the remaining edit distance.
/// Returns (shifts, edits).
fn ter_counts(candidate: &[String], reference: &[String]) -> (usize, usize) {
    let mut hyp = candidate.to_vec();
    let mut shifts = 0usize;
    let mut distance = edit_distance(&hyp, reference);

    if hyp.len() <= TER_SHIFT_TOKEN_CAP {
        loop {
            let mut best: Option<ShiftCandidate> = None;
            for start in 0..hyp.len() {
                for len in 1..=TER_MAX_SHIFT_LEN.min(hyp.len() - start) {
                    let block = &hyp[start..start + len];
                    if !contains_block(reference, block) {
                        continue;
                    }
                    for dest in 0..=(hyp.len() - len) {
                        if dest == start {
                            continue;
                        }
                        let shifted = apply_shift(&hyp, start, len, dest);
                        let new_distance = edit_distance(&shifted, reference);
                        if new_distance < distance {
                            let reduction = distance - new_distance;
                            let key = (start, len, dest);
                            let better = match &best {
                                None => true,
                                Some((best_reduction, best_key, _)) => {
                                    reduction > *best_reduction
                                        || (reduction == *best_reduction && key < *best_key)
                                }
                            };
                            if better {
                                best = Some((reduction, key, shifted));
                            }
                        }
                    }
                }
            }
            match best {
                Some((reduction, _, shifted)) => {
                    hyp = shifted;
                    distance -= reduction;
                    shifts += 1;
                }
                None => break,
            }
        }
    }

    (shifts, distance)
}

fn ter(candidate: &[String], reference: &[String]) -> f64 {
    let (shifts, edits) = ter_counts(candidate, reference);
    100.0 * (shifts + edits) as f64 / reference.len() as f64
}

/// Scores one candidate translation against its reference.
pub fn translation_metrics(candidate: &str, reference: &str) -> Result<TranslationScore, TranslationError> {
    if candidate.trim().is_empty() || reference.trim().is_empty() {
        return Err(TranslationError::EmptyText);
    }
    let cand_tokens = tokenize(candidate);
    let ref_tokens = tokenize(reference);
    if cand_tokens.is_empty() || ref_tokens.is_empty() {
        return Err(TranslationError::EmptyText);
    }
    Ok(TranslationScore {
        bleu: bleu(&cand_tokens, &ref_tokens),
        chrf: chrf(candidate, reference),
        ter: ter(&cand_tokens, &ref_tokens),
    })
}
