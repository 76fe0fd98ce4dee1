//! Multi-label category classification metrics over the 12-code label
//! space: subset accuracy, micro/macro/weighted precision-recall-F1,
//! Hamming loss, and samples-averaged Jaccard score.
//!
//! Conventions: F1 with a zero denominator is 0; the Jaccard score of an
//! empty gold set against an empty prediction is 1 (correct abstention);
//! macro averages run over all 12 codes; weighted averages use gold support.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::eval::binary::f1_from;
use crate::taxonomy::CategoryCode;

/// Number of codes in the label space.
pub const LABEL_SPACE: usize = 12;

/// A (gold, predicted) category-set pair for one record.
pub type LabelSetPair = (BTreeSet<CategoryCode>, BTreeSet<CategoryCode>);

/// The multi-label report for one dataset.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MultiLabelReport {
    /// Exact-set-match rate.
    pub subset_accuracy: f64,
    pub micro_precision: f64,
    pub micro_recall: f64,
    pub micro_f1: f64,
    pub macro_f1: f64,
    pub weighted_precision: f64,
    pub weighted_recall: f64,
    pub weighted_f1: f64,
    /// Wrong bits over 12 x N bits.
    pub hamming_loss: f64,
    /// Mean over samples of |intersection| / |union|, empty/empty scoring 1.
    pub jaccard_score: f64,
    pub total: usize,
}

/// Computes the multi-label report from (gold, predicted) category-set pairs.
pub fn multilabel_metrics(pairs: &[LabelSetPair]) -> MultiLabelReport {
    let n = pairs.len();
    if n == 0 {
        return MultiLabelReport {
            subset_accuracy: 0.0,
            micro_precision: 0.0,
            micro_recall: 0.0,
            micro_f1: 0.0,
            macro_f1: 0.0,
            weighted_precision: 0.0,
            weighted_recall: 0.0,
            weighted_f1: 0.0,
            hamming_loss: 0.0,
            jaccard_score: 0.0,
            total: 0,
        };
    }

    let mut exact_matches = 0usize;
    let mut wrong_bits = 0usize;
    let mut jaccard_sum = 0.0f64;
    // Pooled and per-code confusion counts.
    let mut pooled = (0usize, 0usize, 0usize); // (tp, fp, fn)
    let mut per_code = vec![(0usize, 0usize, 0usize); LABEL_SPACE];

    for (gold, pred) in pairs {
        if gold == pred {
            exact_matches += 1;
        }
        let intersection = gold.intersection(pred).count();
        let union = gold.union(pred).count();
        jaccard_sum += if union == 0 {
            1.0
        } else {
            intersection as f64 / union as f64
        };
        for code in CategoryCode::all() {
            let g = gold.contains(&code);
            let p = pred.contains(&code);
            if g != p {
                wrong_bits += 1;
            }
            let slot = &mut per_code[(code.index() - 1) as usize];
            match (g, p) {
                (true, true) => {
                    slot.0 += 1;
                    pooled.0 += 1;
                }
                (false, true) => {
                    slot.1 += 1;
                    pooled.1 += 1;
                }
                (true, false) => {
                    slot.2 += 1;
                    pooled.2 += 1;
                }
                (false, false) => {}
            }
        }
    }

    let ratio = |num: usize, den: usize| if den == 0 { 0.0 } else { num as f64 / den as f64 };

    let micro_precision = ratio(pooled.0, pooled.0 + pooled.1);
    let micro_recall = ratio(pooled.0, pooled.0 + pooled.2);
    let micro_f1 = f1_from(micro_precision, micro_recall);

    let mut macro_f1_sum = 0.0;
    let mut weighted = (0.0f64, 0.0f64, 0.0f64);
    let mut total_support = 0usize;
    for &(tp, fp, fn_) in &per_code {
        let precision = ratio(tp, tp + fp);
        let recall = ratio(tp, tp + fn_);
        let f1 = f1_from(precision, recall);
        macro_f1_sum += f1;
        let support = tp + fn_;
        total_support += support;
        weighted.0 += support as f64 * precision;
        weighted.1 += support as f64 * recall;
        weighted.2 += support as f64 * f1;
    }
    let weight_den = if total_support == 0 { 1.0 } else { total_support as f64 };

    MultiLabelReport {
        subset_accuracy: exact_matches as f64 / n as f64,
        micro_precision,
        micro_recall,
        micro_f1,
        macro_f1: macro_f1_sum / LABEL_SPACE as f64,
        weighted_precision: weighted.0 / weight_den,
        weighted_recall: weighted.1 / weight_den,
        weighted_f1: weighted.2 / weight_den,
        hamming_loss: wrong_bits as f64 / (LABEL_SPACE * n) as f64,
        jaccard_score: jaccard_sum / n as f64,
        total: n,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(codes: &[u8]) -> BTreeSet<CategoryCode> {
        codes.iter().map(|&i| CategoryCode::new(i).unwrap()).collect()
    }

    #[test]
    fn one_wrong_bit_over_two_records() {
        let pairs = vec![(set(&[1, 4]), set(&[1, 4])), (set(&[2]), set(&[2, 7]))];
        let report = multilabel_metrics(&pairs);
        assert!((report.hamming_loss - 1.0 / 24.0).abs() < 1e-12);
        assert_eq!(report.subset_accuracy, 0.5);
    }

    #[test]
    fn jaccard_by_definition() {
        // pred {O1,O4} vs gold {O1} contributes 1/2.
        let pairs = vec![(set(&[1]), set(&[1, 4]))];
        let report = multilabel_metrics(&pairs);
        assert_eq!(report.jaccard_score, 0.5);
    }

    #[test]
    fn empty_against_empty_counts_as_correct_abstention() {
        let pairs = vec![(set(&[]), set(&[])), (set(&[]), set(&[3]))];
        let report = multilabel_metrics(&pairs);
        assert_eq!(report.jaccard_score, 0.5);
        assert_eq!(report.subset_accuracy, 0.5);
    }

    #[test]
    fn perfect_prediction_bounds() {
        let pairs = vec![
            (set(&[1, 4]), set(&[1, 4])),
            (set(&[]), set(&[])),
            (set(&[2, 7, 11]), set(&[2, 7, 11])),
        ];
        let report = multilabel_metrics(&pairs);
        assert_eq!(report.subset_accuracy, 1.0);
        assert_eq!(report.hamming_loss, 0.0);
        assert_eq!(report.jaccard_score, 1.0);
        assert_eq!(report.micro_f1, 1.0);
    }

    #[test]
    fn micro_counts_pool_across_codes() {
        // gold {O1}, pred {O2}: tp=0, fp=1, fn=1 -> micro P=R=F1=0.
        let pairs = vec![(set(&[1]), set(&[2]))];
        let report = multilabel_metrics(&pairs);
        assert_eq!(report.micro_precision, 0.0);
        assert_eq!(report.micro_recall, 0.0);
        assert_eq!(report.micro_f1, 0.0);
    }

    #[test]
    fn macro_averages_over_all_twelve_codes() {
        // One code predicted perfectly; the other eleven contribute 0.
        let pairs = vec![(set(&[5]), set(&[5]))];
        let report = multilabel_metrics(&pairs);
        assert!((report.macro_f1 - 1.0 / 12.0).abs() < 1e-12);
        // Weighted average only weights codes with gold support.
        assert_eq!(report.weighted_f1, 1.0);
    }

    #[test]
    fn empty_input_yields_zeroes() {
        let report = multilabel_metrics(&[]);
        assert_eq!(report.total, 0);
        assert_eq!(report.hamming_loss, 0.0);
    }
}
