//! Full-pipeline dataset evaluation: moderate every record, fill
//! predictions, compute the binary and multi-label reports overall and per
//! language, and persist the run.
//!
//! Everything written to disk is byte-stable for a fixed dataset and
//! deterministic backends: records are processed in id order, maps are
//! ordered, and no timestamps or timings enter the artifacts.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::eval::{
    binary_metrics, category_pairs, label_pairs, BinaryReport, EvalError, EvalRecord,
    MultiLabelReport,
};
use crate::pipeline::{ModerationRequest, Pipeline};

/// How per-record pipeline failures are handled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SkipPolicy {
    /// Abort the run on the first failure.
    #[default]
    Abort,
    /// Skip the record, flag it in the report, and continue.
    SkipAndFlag,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct RunOptions {
    pub skip_policy: SkipPolicy,
    /// Parse evaluator output strictly.
    pub strict_parse: bool,
}

/// Reports for one language slice.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LanguageBreakdown {
    pub records: usize,
    pub binary: BinaryReport,
    pub multilabel: MultiLabelReport,
}

/// The complete outcome of one evaluation run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvalRunReport {
    pub total_records: usize,
    pub evaluated: usize,
    /// Ids of records skipped under [`SkipPolicy::SkipAndFlag`], sorted.
    pub skipped: Vec<String>,
    pub binary: BinaryReport,
    pub multilabel: MultiLabelReport,
    pub per_language: BTreeMap<String, LanguageBreakdown>,
}

/// Moderates every record through the pipeline, computes the metric
/// reports, and persists the run under `report_dir` (when given):
/// `report.txt` (table layout), `metrics.json` (flat machine-readable
/// values), and `predictions.jsonl` (records with predictions filled).
pub fn run_eval(
    records: &[EvalRecord],
    pipeline: &Pipeline,
    report_dir: Option<&Path>,
    options: RunOptions,
) -> Result<EvalRunReport, EvalError> {
    let mut ordered: Vec<EvalRecord> = records.to_vec();
    ordered.sort_by(|a, b| a.id.cmp(&b.id));

    let mut evaluated: Vec<EvalRecord> = Vec::with_capacity(ordered.len());
    let mut skipped: Vec<String> = Vec::new();

    for record in &ordered {
        let mut request = ModerationRequest::new(record.id.clone(), record.text.clone());
        request.options.strict_parse = options.strict_parse;
        match pipeline.moderate(&request) {
            Ok(response) => {
                let mut filled = record.clone();
                filled.predicted_label = Some(response.verdict.label);
                filled.predicted_categories = Some(response.verdict.categories);
                evaluated.push(filled);
            }
            Err(failure) => match options.skip_policy {
                SkipPolicy::Abort => {
                    return Err(EvalError::PipelineFailure {
                        id: record.id.clone(),
                        detail: failure.to_string(),
                    })
                }
                SkipPolicy::SkipAndFlag => skipped.push(record.id.clone()),
            },
        }
    }

    let binary = binary_metrics(&label_pairs(&evaluated)?);
    let multilabel = crate::eval::multilabel_metrics(&category_pairs(&evaluated)?);

    let mut per_language = BTreeMap::new();
    let mut by_lang: BTreeMap<String, Vec<EvalRecord>> = BTreeMap::new();
    for record in &evaluated {
        by_lang.entry(record.lang.clone()).or_default().push(record.clone());
    }
    for (lang, slice) in by_lang {
        per_language.insert(
            lang,
            LanguageBreakdown {
                records: slice.len(),
                binary: binary_metrics(&label_pairs(&slice)?),
                multilabel: crate::eval::multilabel_metrics(&category_pairs(&slice)?),
            },
        );
    }

    let report = EvalRunReport {
        total_records: ordered.len(),
        evaluated: evaluated.len(),
        skipped,
        binary,
        multilabel,
        per_language,
    };

    if let Some(dir) = report_dir {
        fs::create_dir_all(dir)?;
        fs::write(dir.join("report.txt"), render_report(&report))?;
        fs::write(
            dir.join("metrics.json"),
            serde_json::to_string_pretty(&report).expect("report serializes") + "\n",
        )?;
        let mut predictions = String::new();
        for record in &evaluated {
            predictions.push_str(&serde_json::to_string(record).expect("record serializes"));
            predictions.push('\n');
        }
        fs::write(dir.join("predictions.jsonl"), predictions)?;
    }

    Ok(report)
}

fn pct(v: f64) -> String {
    format!("{:.2}", v * 100.0)
}

fn write_binary_table(out: &mut String, binary: &BinaryReport) {
    let _ = writeln!(out, "  SAFETY LABEL CLASSIFICATION");
    let _ = writeln!(out, "  {:<14}{:>11}{:>9}{:>10}{:>9}", "Class", "Precision", "Recall", "F1-Score", "Support");
    for (name, class) in [("Safe", &binary.safe), ("Unsafe", &binary.unsafe_)] {
        let _ = writeln!(
            out,
            "  {:<14}{:>11}{:>9}{:>10}{:>9}",
            name,
            pct(class.precision),
            pct(class.recall),
            pct(class.f1),
            class.support
        );
    }
    let _ = writeln!(out, "  {:<14}{:>11}{:>9}{:>10}{:>9}", "Accuracy", "", "", pct(binary.accuracy), binary.total);
    let _ = writeln!(
        out,
        "  {:<14}{:>11}{:>9}{:>10}{:>9}",
        "Macro Avg",
        pct(binary.macro_precision),
        pct(binary.macro_recall),
        pct(binary.macro_f1),
        binary.total
    );
    let _ = writeln!(
        out,
        "  {:<14}{:>11}{:>9}{:>10}{:>9}",
        "Weighted Avg",
        pct(binary.weighted_precision),
        pct(binary.weighted_recall),
        pct(binary.weighted_f1),
        binary.total
    );
}

fn write_multilabel_table(out: &mut String, ml: &MultiLabelReport) {
    let _ = writeln!(out, "  CATEGORY CLASSIFICATION");
    let rows = [
        ("Accuracy", ml.subset_accuracy),
        ("Micro Precision", ml.micro_precision),
        ("Micro Recall", ml.micro_recall),
        ("Micro F1-Score", ml.micro_f1),
        ("Macro F1-Score", ml.macro_f1),
        ("Weighted F1-Score", ml.weighted_f1),
        ("Hamming Loss", ml.hamming_loss),
        ("Jaccard Score", ml.jaccard_score),
    ];
    for (name, value) in rows {
        let _ = writeln!(out, "  {:<20}{:>8}", name, pct(value));
    }
}

/// Renders the human-readable report: overall tables first, then one
/// section per language. Values are percentages.
pub fn render_report(report: &EvalRunReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "EVALUATION RUN REPORT");
    let _ = writeln!(out, "=====================");
    let _ = writeln!(
        out,
        "records: {}  evaluated: {}  skipped: {}",
        report.total_records,
        report.evaluated,
        report.skipped.len()
    );
    if !report.skipped.is_empty() {
        let _ = writeln!(out, "skipped ids: {}", report.skipped.join(", "));
    }
    let _ = writeln!(out);
    let _ = writeln!(out, "OVERALL");
    write_binary_table(&mut out, &report.binary);
    let _ = writeln!(out);
    write_multilabel_table(&mut out, &report.multilabel);
    for (lang, breakdown) in &report.per_language {
        let _ = writeln!(out);
        let _ = writeln!(out, "LANGUAGE: {lang} ({} records)", breakdown.records);
        write_binary_table(&mut out, &breakdown.binary);
        let _ = writeln!(out);
        write_multilabel_table(&mut out, &breakdown.multilabel);
    }
    out
}
