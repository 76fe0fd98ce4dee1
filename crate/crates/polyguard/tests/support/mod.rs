//! Shared brute-force oracles for the integration and acceptance suites.
//!
//! Everything here is written from the documented rules and metric
//! definitions alone — no code is shared with the engine under test. The
//! oracles deliberately use naive data structures (vectors, nested loops,
//! full DP tables) where the engine uses maps and rolling rows.

#![allow(dead_code)]

use std::collections::BTreeSet;

use polyguard::eval::LabelSetPair;
use polyguard::taxonomy::{CategoryCode, SafetyLabel};

use rand::rngs::StdRng;
use rand::seq::IndexedRandom;
use rand::Rng;

// ===========================================================================
// Reward oracle
// ===========================================================================

/// Finds the body of the first well-formed `<name>...</name>` pair: the
/// first opening tag that has a closing tag somewhere after it.
pub fn oracle_tag_body<'a>(raw: &'a str, name: &str) -> Option<&'a str> {
    let open = format!("<{name}>");
    let close = format!("</{name}>");
    // Only the first opening tag matters: if no closing tag follows it,
    // none follows any later opening tag either.
    let (open_at, _) = raw.match_indices(&open).next()?;
    let body_start = open_at + open.len();
    let rel = raw[body_start..].find(&close)?;
    Some(&raw[body_start..body_start + rel])
}

/// Sentence counting, transcribed: segments end at '.', '!' or '?' followed
/// by whitespace or end of text; a segment counts when it has visible
/// content; a trailing unterminated segment counts with three or more words.
pub fn oracle_sentences(text: &str) -> usize {
    let chars: Vec<char> = text.chars().collect();
    let mut boundaries = Vec::new();
    for i in 0..chars.len() {
        if matches!(chars[i], '.' | '!' | '?')
            && (i + 1 == chars.len() || chars[i + 1].is_whitespace())
        {
            boundaries.push(i);
        }
    }
    let mut count = 0;
    let mut segment_start = 0;
    for &b in &boundaries {
        let segment: String = chars[segment_start..b].iter().collect();
        if segment.chars().any(|c| !c.is_whitespace() && !matches!(c, '.' | '!' | '?')) {
            count += 1;
        }
        segment_start = b + 1;
    }
    if segment_start < chars.len() {
        let tail: String = chars[segment_start..].iter().collect();
        let has_content = tail
            .chars()
            .any(|c| !c.is_whitespace() && !matches!(c, '.' | '!' | '?'));
        if has_content && tail.split_whitespace().count() >= 3 {
            count += 1;
        }
    }
    count
}

/// Category grammar, transcribed: optional surrounding whitespace, then
/// either "None" (any case) or codes O1..O12 (any case) separated by commas
/// with spaces allowed only after the comma.
pub fn oracle_categories(body: &str) -> Option<BTreeSet<u8>> {
    let trimmed = body.trim();
    if trimmed.eq_ignore_ascii_case("none") {
        return Some(BTreeSet::new());
    }
    let mut set = BTreeSet::new();
    let mut rest = trimmed;
    loop {
        let mut chars = rest.char_indices();
        match chars.next() {
            Some((_, 'O')) | Some((_, 'o')) => {}
            _ => return None,
        }
        let digits_start = 1;
        let mut digits_end = digits_start;
        for (i, c) in rest[digits_start..].char_indices() {
            if c.is_ascii_digit() {
                digits_end = digits_start + i + 1;
            } else {
                break;
            }
        }
        if digits_end == digits_start {
            return None;
        }
        let value: u32 = rest[digits_start..digits_end].parse().ok()?;
        if !(1..=12).contains(&value) {
            return None;
        }
        set.insert(value as u8);
        rest = &rest[digits_end..];
        if rest.is_empty() {
            return Some(set);
        }
        rest = rest.strip_prefix(',')?;
        rest = rest.trim_start();
        if rest.is_empty() {
            return None;
        }
    }
}

pub struct OracleScore {
    pub format: f64,
    pub label: f64,
    pub category: f64,
    pub total: f64,
}

/// Direct transcription of the three reward rules: 0.15 per properly
/// formatted tag (full 1.0 when all three are present, +0.25 for 3+
/// sentences of thinking), 1.0 / -0.25 for the label, and 0.3 + 0.7 for the
/// categories.
pub fn oracle_score(
    raw: &str,
    expected_label: SafetyLabel,
    expected_categories: &BTreeSet<u8>,
) -> OracleScore {
    let think = oracle_tag_body(raw, "think");
    let label = oracle_tag_body(raw, "label");
    // The plural tag is canonical; the singular spelling counts only when
    // the plural is absent.
    let categories = oracle_tag_body(raw, "categories").or_else(|| oracle_tag_body(raw, "category"));

    let tags_present =
        usize::from(think.is_some()) + usize::from(label.is_some()) + usize::from(categories.is_some());
    let format = if tags_present == 3 {
        if oracle_sentences(think.unwrap()) >= 3 {
            1.0 + 0.25
        } else {
            1.0
        }
    } else {
        let mut sum: f64 = 0.0;
        for _ in 0..tags_present {
            sum += 0.15;
        }
        sum
    };

    let parsed_label = label.and_then(|body| match body.trim().to_lowercase().as_str() {
        "safe" => Some(SafetyLabel::Safe),
        "unsafe" => Some(SafetyLabel::Unsafe),
        _ => None,
    });
    let label_score = if parsed_label == Some(expected_label) { 1.0 } else { -0.25 };

    let parsed_set = categories.and_then(oracle_categories);
    let category = match parsed_set {
        Some(set) => {
            let mut score = 0.3;
            if set == *expected_categories {
                score += 0.7;
            }
            score
        }
        None => 0.0,
    };

    OracleScore {
        format,
        label: label_score,
        category,
        total: format + label_score + category,
    }
}

// ===========================================================================
// Synthesized reward corpus
// ===========================================================================

pub const THINK_BODIES: [&str; 8] = [
    "",
    "Short fragment",
    "One full sentence here.",
    "First sentence. Second sentence here",
    "First point. Second point. Third point.",
    "One. Two three four five. Six seven eight? Nine ten eleven!",
    "A very long trailing segment with many words but no terminator at all",
    "Leading noise... then a question? And an answer. Plus trailing words here",
];

pub const LABEL_BODIES: [&str; 9] = [
    "safe", "unsafe", " safe ", " Unsafe ", "UNSAFE", "maybe", "", "harmful", "safe unsafe",
];

pub const CATEGORY_BODIES: [&str; 16] = [
    "None",
    "none",
    " None ",
    "O1",
    "o7",
    "O1, O4",
    "O2,O7",
    "O2,  O11",
    "O2, O2",
    "O12",
    "O13",
    "O1 , O4",
    "violence",
    "",
    "O1,",
    "categories: O2",
];

/// One random raw output plus a random expectation, spanning all
/// tag-presence, sentence-count, label, and category-set combinations.
pub fn synthesize_reward_case(rng: &mut StdRng) -> (String, SafetyLabel, BTreeSet<u8>) {
    let mut parts: Vec<String> = Vec::new();
    if rng.random_bool(0.1) {
        parts.push("Some preamble text outside any tags. ".to_string());
    }
    if rng.random_bool(0.8) {
        let body = THINK_BODIES.choose(rng).unwrap();
        if rng.random_bool(0.05) {
            parts.push(format!("<think>{body}")); // unclosed
        } else {
            parts.push(format!("<think>{body}</think>"));
        }
    }
    if rng.random_bool(0.8) {
        let body = LABEL_BODIES.choose(rng).unwrap();
        parts.push(format!("<label>{body}</label>"));
        if rng.random_bool(0.05) {
            let duplicate = LABEL_BODIES.choose(rng).unwrap();
            parts.push(format!("<label>{duplicate}</label>"));
        }
    }
    if rng.random_bool(0.8) {
        let body = CATEGORY_BODIES.choose(rng).unwrap();
        if rng.random_bool(0.15) {
            parts.push(format!("<category>{body}</category>")); // singular spelling
        } else {
            parts.push(format!("<categories>{body}</categories>"));
        }
    }
    if rng.random_bool(0.1) {
        parts.push(" trailing noise".to_string());
    }
    let raw = parts.join(if rng.random_bool(0.5) { "\n" } else { " " });

    let expected_label = if rng.random_bool(0.5) { SafetyLabel::Safe } else { SafetyLabel::Unsafe };
    let expected_categories: BTreeSet<u8> = if expected_label == SafetyLabel::Safe {
        BTreeSet::new()
    } else {
        let size = rng.random_range(1..=3);
        (0..size).map(|_| rng.random_range(1..=12u8)).collect()
    };
    (raw, expected_label, expected_categories)
}

pub fn to_codes(indices: &BTreeSet<u8>) -> BTreeSet<CategoryCode> {
    indices.iter().map(|&i| CategoryCode::new(i).unwrap()).collect()
}

// ===========================================================================
// Classification-metric oracles
// ===========================================================================

pub struct OracleBinary {
    pub accuracy: f64,
    /// Indexed [safe, unsafe].
    pub precision: [f64; 2],
    pub recall: [f64; 2],
    pub f1: [f64; 2],
    pub support: [usize; 2],
    pub macro_f1: f64,
    pub weighted_f1: f64,
}

pub fn oracle_binary(pairs: &[(SafetyLabel, SafetyLabel)]) -> OracleBinary {
    let classes = [SafetyLabel::Safe, SafetyLabel::Unsafe];
    let mut precision = [0.0; 2];
    let mut recall = [0.0; 2];
    let mut f1 = [0.0; 2];
    let mut support = [0usize; 2];
    for (k, class) in classes.into_iter().enumerate() {
        let mut tp = 0usize;
        let mut fp = 0usize;
        let mut fn_ = 0usize;
        for &(gold, pred) in pairs {
            if pred == class && gold == class {
                tp += 1;
            }
            if pred == class && gold != class {
                fp += 1;
            }
            if pred != class && gold == class {
                fn_ += 1;
            }
        }
        support[k] = tp + fn_;
        precision[k] = if tp + fp == 0 { 0.0 } else { tp as f64 / (tp + fp) as f64 };
        recall[k] = if tp + fn_ == 0 { 0.0 } else { tp as f64 / (tp + fn_) as f64 };
        f1[k] = if precision[k] + recall[k] == 0.0 {
            0.0
        } else {
            2.0 * precision[k] * recall[k] / (precision[k] + recall[k])
        };
    }
    let correct = pairs.iter().filter(|(g, p)| g == p).count();
    let n = pairs.len();
    let weight = |k: usize| support[k] as f64 / n as f64;
    OracleBinary {
        accuracy: if n == 0 { 0.0 } else { correct as f64 / n as f64 },
        macro_f1: (f1[0] + f1[1]) / 2.0,
        weighted_f1: weight(0) * f1[0] + weight(1) * f1[1],
        precision,
        recall,
        f1,
        support,
    }
}

pub struct OracleMultiLabel {
    pub subset_accuracy: f64,
    pub micro_precision: f64,
    pub micro_recall: f64,
    pub micro_f1: f64,
    pub macro_f1: f64,
    pub weighted_f1: f64,
    pub hamming: f64,
    pub jaccard: f64,
}

pub fn oracle_multilabel(pairs: &[LabelSetPair]) -> OracleMultiLabel {
    let n = pairs.len();
    let codes: Vec<CategoryCode> = (1..=12).map(|i| CategoryCode::new(i).unwrap()).collect();

    let exact = pairs.iter().filter(|(g, p)| g == p).count();

    let mut wrong_bits = 0usize;
    for (gold, pred) in pairs {
        for code in &codes {
            if gold.contains(code) != pred.contains(code) {
                wrong_bits += 1;
            }
        }
    }

    let mut jaccard_sum = 0.0;
    for (gold, pred) in pairs {
        let inter = gold.intersection(pred).count() as f64;
        let union = gold.union(pred).count() as f64;
        jaccard_sum += if union == 0.0 { 1.0 } else { inter / union };
    }

    let mut tp_total = 0usize;
    let mut fp_total = 0usize;
    let mut fn_total = 0usize;
    let mut per_code_f1 = Vec::new();
    let mut per_code_support = Vec::new();
    for code in &codes {
        let mut tp = 0usize;
        let mut fp = 0usize;
        let mut fn_ = 0usize;
        for (gold, pred) in pairs {
            match (gold.contains(code), pred.contains(code)) {
                (true, true) => tp += 1,
                (false, true) => fp += 1,
                (true, false) => fn_ += 1,
                (false, false) => {}
            }
        }
        tp_total += tp;
        fp_total += fp;
        fn_total += fn_;
        let p = if tp + fp == 0 { 0.0 } else { tp as f64 / (tp + fp) as f64 };
        let r = if tp + fn_ == 0 { 0.0 } else { tp as f64 / (tp + fn_) as f64 };
        per_code_f1.push(if p + r == 0.0 { 0.0 } else { 2.0 * p * r / (p + r) });
        per_code_support.push(tp + fn_);
    }

    let micro_precision = if tp_total + fp_total == 0 {
        0.0
    } else {
        tp_total as f64 / (tp_total + fp_total) as f64
    };
    let micro_recall = if tp_total + fn_total == 0 {
        0.0
    } else {
        tp_total as f64 / (tp_total + fn_total) as f64
    };
    let micro_f1 = if micro_precision + micro_recall == 0.0 {
        0.0
    } else {
        2.0 * micro_precision * micro_recall / (micro_precision + micro_recall)
    };

    let total_support: usize = per_code_support.iter().sum();
    let weighted_f1 = if total_support == 0 {
        0.0
    } else {
        per_code_f1
            .iter()
            .zip(&per_code_support)
            .map(|(f1, s)| f1 * *s as f64)
            .sum::<f64>()
            / total_support as f64
    };

    OracleMultiLabel {
        subset_accuracy: exact as f64 / n as f64,
        micro_precision,
        micro_recall,
        micro_f1,
        macro_f1: per_code_f1.iter().sum::<f64>() / 12.0,
        weighted_f1,
        hamming: wrong_bits as f64 / (12 * n) as f64,
        jaccard: jaccard_sum / n as f64,
    }
}

pub fn random_category_set(rng: &mut StdRng, max_size: usize) -> BTreeSet<CategoryCode> {
    let size = rng.random_range(0..=max_size);
    (0..size)
        .map(|_| CategoryCode::new(rng.random_range(1..=12)).unwrap())
        .collect()
}

// ===========================================================================
// Translation-metric oracles
// ===========================================================================

pub fn oracle_tokens(text: &str) -> Vec<String> {
    // The pinned tokenization: alphanumeric runs; everything else separates.
    // Oracle inputs are ASCII, so NFC is the identity.
    let mut tokens = Vec::new();
    let mut current = String::new();
    for c in text.chars() {
        if c.is_alphanumeric() {
            current.push(c);
        } else if !current.is_empty() {
            tokens.push(std::mem::take(&mut current));
        }
    }
    if !current.is_empty() {
        tokens.push(current);
    }
    tokens
}

fn count_ngram(tokens: &[String], gram: &[String]) -> usize {
    if tokens.len() < gram.len() {
        return 0;
    }
    (0..=tokens.len() - gram.len())
        .filter(|&i| &tokens[i..i + gram.len()] == gram)
        .count()
}

/// BLEU-4 with clipped precisions, add-one smoothing on orders 2..4, and the
/// short-candidate brevity penalty.
pub fn oracle_bleu(candidate: &str, reference: &str) -> f64 {
    let cand = oracle_tokens(candidate);
    let refr = oracle_tokens(reference);
    let mut log_sum = 0.0;
    for n in 1..=4usize {
        let mut seen: Vec<&[String]> = Vec::new();
        let mut matched = 0usize;
        let mut total = 0usize;
        if cand.len() >= n {
            for i in 0..=cand.len() - n {
                total += 1;
                let gram = &cand[i..i + n];
                if seen.contains(&gram) {
                    continue;
                }
                seen.push(gram);
                let cand_count = count_ngram(&cand, gram);
                let ref_count = count_ngram(&refr, gram);
                matched += cand_count.min(ref_count);
            }
        }
        let precision = if n == 1 {
            if total == 0 {
                return 0.0;
            }
            matched as f64 / total as f64
        } else {
            (matched as f64 + 1.0) / (total as f64 + 1.0)
        };
        if precision == 0.0 {
            return 0.0;
        }
        log_sum += precision.ln();
    }
    let bp = if cand.len() >= refr.len() {
        1.0
    } else {
        (1.0 - refr.len() as f64 / cand.len() as f64).exp()
    };
    100.0 * bp * (log_sum / 4.0).exp()
}

/// chrF with character n-grams of order 1..6 over whitespace-stripped text,
/// beta = 2, precision/recall averaged over orders that have n-grams.
pub fn oracle_chrf(candidate: &str, reference: &str) -> f64 {
    let cand: Vec<char> = candidate.chars().filter(|c| !c.is_whitespace()).collect();
    let refr: Vec<char> = reference.chars().filter(|c| !c.is_whitespace()).collect();
    let count_char_ngram = |chars: &[char], gram: &[char]| -> usize {
        if chars.len() < gram.len() {
            return 0;
        }
        (0..=chars.len() - gram.len())
            .filter(|&i| &chars[i..i + gram.len()] == gram)
            .count()
    };
    let mut p_sum = 0.0;
    let mut p_orders = 0usize;
    let mut r_sum = 0.0;
    let mut r_orders = 0usize;
    for n in 1..=6usize {
        let mut matched = 0usize;
        let mut cand_total = 0usize;
        let mut seen: Vec<&[char]> = Vec::new();
        if cand.len() >= n {
            for i in 0..=cand.len() - n {
                cand_total += 1;
                let gram = &cand[i..i + n];
                if seen.contains(&gram) {
                    continue;
                }
                seen.push(gram);
                matched += count_char_ngram(&cand, gram).min(count_char_ngram(&refr, gram));
            }
        }
        let ref_total = if refr.len() >= n { refr.len() - n + 1 } else { 0 };
        if cand_total > 0 {
            p_sum += matched as f64 / cand_total as f64;
            p_orders += 1;
        }
        if ref_total > 0 {
            r_sum += matched as f64 / ref_total as f64;
            r_orders += 1;
        }
    }
    let p = if p_orders == 0 { 0.0 } else { p_sum / p_orders as f64 };
    let r = if r_orders == 0 { 0.0 } else { r_sum / r_orders as f64 };
    if 4.0 * p + r == 0.0 {
        return 0.0;
    }
    100.0 * 5.0 * p * r / (4.0 * p + r)
}

pub fn oracle_edit_distance(a: &[String], b: &[String]) -> usize {
    let mut table = vec![vec![0usize; b.len() + 1]; a.len() + 1];
    for (i, row) in table.iter_mut().enumerate() {
        row[0] = i;
    }
    for (j, cell) in table[0].iter_mut().enumerate() {
        *cell = j;
    }
    for i in 1..=a.len() {
        for j in 1..=b.len() {
            let cost = usize::from(a[i - 1] != b[j - 1]);
            table[i][j] = (table[i - 1][j - 1] + cost)
                .min(table[i - 1][j] + 1)
                .min(table[i][j - 1] + 1);
        }
    }
    table[a.len()][b.len()]
}

/// (reduction, (start, length, destination), shifted tokens)
type ShiftCandidate = (usize, (usize, usize, usize), Vec<String>);

/// Greedy-shift TER transcription: repeatedly apply the matching-block shift
/// with the largest edit-distance reduction (ties: smallest start, then
/// length, then destination), then charge remaining edits over the
/// reference length.
pub fn oracle_ter(candidate: &str, reference: &str) -> f64 {
    let refr = oracle_tokens(reference);
    let mut hyp = oracle_tokens(candidate);
    let mut shifts = 0usize;
    loop {
        let current = oracle_edit_distance(&hyp, &refr);
        let mut best: Option<ShiftCandidate> = None;
        for start in 0..hyp.len() {
            for len in 1..=10usize.min(hyp.len() - start) {
                let block: Vec<String> = hyp[start..start + len].to_vec();
                let appears = refr.len() >= len
                    && (0..=refr.len() - len).any(|i| refr[i..i + len] == block[..]);
                if !appears {
                    continue;
                }
                let mut removed: Vec<String> = Vec::new();
                removed.extend_from_slice(&hyp[..start]);
                removed.extend_from_slice(&hyp[start + len..]);
                for dest in 0..=removed.len() {
                    if dest == start {
                        continue;
                    }
                    let mut moved = Vec::new();
                    moved.extend_from_slice(&removed[..dest]);
                    moved.extend_from_slice(&block);
                    moved.extend_from_slice(&removed[dest..]);
                    let d = oracle_edit_distance(&moved, &refr);
                    if d < current {
                        let reduction = current - d;
                        let key = (start, len, dest);
                        let replace = match &best {
                            None => true,
                            Some((r, k, _)) => reduction > *r || (reduction == *r && key < *k),
                        };
                        if replace {
                            best = Some((reduction, key, moved));
                        }
                    }
                }
            }
        }
        match best {
            Some((_, _, moved)) => {
                hyp = moved;
                shifts += 1;
            }
            None => {
                return 100.0 * (shifts + current) as f64 / refr.len() as f64;
            }
        }
    }
}
