//! Dataset ingestion and the evaluation metric suite: binary safety-label
//! metrics and multi-label category metrics, plus the full-pipeline
//! evaluation runner.

mod binary;
mod multilabel;
mod runner;

pub use binary::{binary_metrics, BinaryReport, ClassMetrics};
pub use multilabel::{multilabel_metrics, LabelSetPair, MultiLabelReport, LABEL_SPACE};
pub use runner::{render_report, run_eval, EvalRunReport, LanguageBreakdown, RunOptions, SkipPolicy};

use std::collections::BTreeSet;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::taxonomy::{CategoryCode, SafetyLabel};

/// One evaluation record: the text, its declared language, the expected
/// judgment, and (once filled) the predicted one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvalRecord {
    pub id: String,
    pub text: String,
    pub lang: String,
    pub label: SafetyLabel,
    #[serde(default)]
    pub categories: BTreeSet<CategoryCode>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub predicted_label: Option<SafetyLabel>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub predicted_categories: Option<BTreeSet<CategoryCode>>,
}

/// Supported dataset encodings.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DatasetFormat {
    /// One JSON record per line: `{id, text, lang, label, categories[]}`.
    JsonLines,
}

#[derive(Debug, thiserror::Error)]
pub enum EvalError {
    #[error("io error reading dataset: {0}")]
    Io(#[from] std::io::Error),
    #[error("row {row}: {field}: {detail}")]
    SchemaViolation {
        row: usize,
        field: String,
        detail: String,
    },
    #[error("records are missing predictions; run the pipeline first")]
    MissingPredictions,
    #[error("pipeline failed on record {id}: {detail}")]
    PipelineFailure { id: String, detail: String },
}

fn validate_record(record: &EvalRecord, row: usize) -> Result<(), EvalError> {
    if record.id.trim().is_empty() {
        return Err(EvalError::SchemaViolation {
            row,
            field: "id".into(),
            detail: "empty id".into(),
        });
    }
    if record.text.trim().is_empty() {
        return Err(EvalError::SchemaViolation {
            row,
            field: "text".into(),
            detail: "empty text".into(),
        });
    }
    if record.label == SafetyLabel::Safe && !record.categories.is_empty() {
        return Err(EvalError::SchemaViolation {
            row,
            field: "categories".into(),
            detail: "safe record carries category codes".into(),
        });
    }
    Ok(())
}

/// Loads and validates a dataset file. Rows violating the schema are
/// rejected with their row number; an empty file is a valid empty dataset.
pub fn load_dataset(path: impl AsRef<Path>, format: DatasetFormat) -> Result<Vec<EvalRecord>, EvalError> {
    let DatasetFormat::JsonLines = format;
    let content = fs::read_to_string(path)?;
    parse_dataset(&content)
}

/// Parses line-delimited records from an in-memory string.
pub fn parse_dataset(content: &str) -> Result<Vec<EvalRecord>, EvalError> {
    let mut records = Vec::new();
    for (idx, line) in content.lines().enumerate() {
        let row = idx + 1;
        if line.trim().is_empty() {
            continue;
        }
        let record: EvalRecord =
            serde_json::from_str(line).map_err(|e| EvalError::SchemaViolation {
                row,
                field: "record".into(),
                detail: e.to_string(),
            })?;
        validate_record(&record, row)?;
        records.push(record);
    }
    Ok(records)
}

/// Extracts (gold, predicted) label pairs, failing when any prediction is
/// missing.
pub fn label_pairs(records: &[EvalRecord]) -> Result<Vec<(SafetyLabel, SafetyLabel)>, EvalError> {
    records
        .iter()
        .map(|r| {
            r.predicted_label
                .map(|p| (r.label, p))
                .ok_or(EvalError::MissingPredictions)
        })
        .collect()
}

/// Extracts (gold, predicted) category-set pairs, failing when any
/// prediction is missing.
pub fn category_pairs(records: &[EvalRecord]) -> Result<Vec<LabelSetPair>, EvalError> {
    records
        .iter()
        .map(|r| {
            r.predicted_categories
                .clone()
                .map(|p| (r.categories.clone(), p))
                .ok_or(EvalError::MissingPredictions)
        })
        .collect()
}
