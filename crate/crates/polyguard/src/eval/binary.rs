//! Binary safety-label classification metrics: accuracy, per-class
//! precision/recall/F1/support, macro and weighted averages.
//!
//! F1 with a zero denominator is defined as 0. All values are reported in
//! [0, 1]; rendering multiplies by 100 where a percentage layout is wanted.

use serde::{Deserialize, Serialize};

use crate::taxonomy::SafetyLabel;

/// Precision/recall/F1 and gold support for one class.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ClassMetrics {
    pub precision: f64,
    pub recall: f64,
    pub f1: f64,
    pub support: usize,
}

/// The full binary report for one (gold, predicted) label sequence.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BinaryReport {
    pub accuracy: f64,
    pub safe: ClassMetrics,
    pub unsafe_: ClassMetrics,
    pub macro_precision: f64,
    pub macro_recall: f64,
    pub macro_f1: f64,
    pub weighted_precision: f64,
    pub weighted_recall: f64,
    pub weighted_f1: f64,
    pub total: usize,
}

pub(crate) fn f1_from(precision: f64, recall: f64) -> f64 {
    if precision + recall == 0.0 {
        0.0
    } else {
        2.0 * precision * recall / (precision + recall)
    }
}

fn ratio(num: usize, den: usize) -> f64 {
    if den == 0 {
        0.0
    } else {
        num as f64 / den as f64
    }
}

fn class_metrics(pairs: &[(SafetyLabel, SafetyLabel)], class: SafetyLabel) -> ClassMetrics {
    let tp = pairs.iter().filter(|(g, p)| *g == class && *p == class).count();
    let fp = pairs.iter().filter(|(g, p)| *g != class && *p == class).count();
    let fn_ = pairs.iter().filter(|(g, p)| *g == class && *p != class).count();
    let support = tp + fn_;
    let precision = ratio(tp, tp + fp);
    let recall = ratio(tp, support);
    ClassMetrics {
        precision,
        recall,
        f1: f1_from(precision, recall),
        support,
    }
}

/// Computes the binary report from (gold, predicted) label pairs.
pub fn binary_metrics(pairs: &[(SafetyLabel, SafetyLabel)]) -> BinaryReport {
    let safe = class_metrics(pairs, SafetyLabel::Safe);
    let unsafe_ = class_metrics(pairs, SafetyLabel::Unsafe);
    let total = pairs.len();
    let correct = pairs.iter().filter(|(g, p)| g == p).count();
    let accuracy = ratio(correct, total);

    let weight = |m: &ClassMetrics| m.support as f64 / total.max(1) as f64;
    let (w_safe, w_unsafe) = (weight(&safe), weight(&unsafe_));

    BinaryReport {
        accuracy,
        macro_precision: (safe.precision + unsafe_.precision) / 2.0,
        macro_recall: (safe.recall + unsafe_.recall) / 2.0,
        macro_f1: (safe.f1 + unsafe_.f1) / 2.0,
        weighted_precision: w_safe * safe.precision + w_unsafe * unsafe_.precision,
        weighted_recall: w_safe * safe.recall + w_unsafe * unsafe_.recall,
        weighted_f1: w_safe * safe.f1 + w_unsafe * unsafe_.f1,
        safe,
        unsafe_,
        total,
    }
}
