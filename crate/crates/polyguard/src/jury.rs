//! Jury-of-judges label aggregation: normalize heterogeneous judge outputs,
//! vote on the safety label, select violated categories by frequency, and
//! pick an assessment from an agreeing judge.
//!
//! The voting rule is an absolute count: the text is unsafe when at least
//! `unsafe_threshold` judges (default 2) said so, otherwise safe. Categories
//! come only from unsafe-voting judges; every code tying for the maximal
//! count is kept, in ascending code order. This module is pure aggregation —
//! calling judge backends and fanning out lives in the gateway.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::taxonomy::{CategoryCode, SafetyLabel};

/// Default number of unsafe votes required for an unsafe jury label.
pub const DEFAULT_UNSAFE_THRESHOLD: usize = 2;

/// One judge's normalized opinion. A safe opinion never carries categories
/// (normalization clears them).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JudgeOpinion {
    pub judge_id: String,
    pub label: SafetyLabel,
    #[serde(default)]
    pub categories: BTreeSet<CategoryCode>,
    /// May be empty for API-style judges that return flags only.
    #[serde(default)]
    pub assessment: String,
}

impl JudgeOpinion {
    pub fn new(
        judge_id: impl Into<String>,
        label: SafetyLabel,
        categories: impl IntoIterator<Item = CategoryCode>,
        assessment: impl Into<String>,
    ) -> Self {
        let mut opinion = JudgeOpinion {
            judge_id: judge_id.into(),
            label,
            categories: categories.into_iter().collect(),
            assessment: assessment.into(),
        };
        opinion.normalize();
        opinion
    }

    /// Enforces the safe-implies-no-categories invariant.
    pub fn normalize(&mut self) {
        if self.label == SafetyLabel::Safe {
            self.categories.clear();
        }
    }
}

/// Rule deciding the safe/unsafe label from an external judge's flags.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum UnsafeRule {
    /// Unsafe when any external category flag is set.
    AnyTriggered,
    /// Unsafe when the external record's top-level flag is set
    /// (e.g. a moderation API's `flagged` field).
    FlaggedField,
}

/// Maps one external taxonomy onto the canonical category space.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MappingTable {
    pub source_taxonomy_id: String,
    /// External label -> non-empty set of canonical codes.
    pub entries: BTreeMap<String, BTreeSet<CategoryCode>>,
    pub unsafe_rule: UnsafeRule,
}

/// The raw shape of an external (API-style) judge response.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExternalJudgeOutput {
    /// Top-level flagged bit, when the external API provides one.
    #[serde(default)]
    pub flagged: Option<bool>,
    /// Per-category flags in the external taxonomy's vocabulary.
    #[serde(default)]
    pub flags: BTreeMap<String, bool>,
    /// Free-text assessment, when the external judge provides one.
    #[serde(default)]
    pub assessment: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum JuryError {
    #[error("external label {label:?} has no entry in mapping table {table:?}")]
    UnmappedLabel { label: String, table: String },
    #[error("mapping table {table:?} entry {label:?} maps to an empty category set")]
    EmptyMappingTarget { label: String, table: String },
    #[error("jury needs at least {required} opinions, got {got}")]
    InsufficientJury { required: usize, got: usize },
    #[error("no judge agreed with the jury label {0}")]
    NoAgreeingJudge(SafetyLabel),
}

impl MappingTable {
    /// Validates that every entry's target set is non-empty.
    pub fn validate(&self) -> Result<(), JuryError> {
        for (label, targets) in &self.entries {
            if targets.is_empty() {
                return Err(JuryError::EmptyMappingTarget {
                    label: label.clone(),
                    table: self.source_taxonomy_id.clone(),
                });
            }
        }
        Ok(())
    }
}

/// Normalizes an external judge's output through a mapping table.
///
/// Every flag key must have a table entry — unknown external labels are an
/// error, never silently dropped. Triggered flags union their mapped codes;
/// the table's unsafe rule decides the label.
pub fn map_external_labels(
    external: &ExternalJudgeOutput,
    table: &MappingTable,
    judge_id: &str,
) -> Result<JudgeOpinion, JuryError> {
    let mut categories = BTreeSet::new();
    for (label, triggered) in &external.flags {
        let targets = table
            .entries
            .get(label)
            .ok_or_else(|| JuryError::UnmappedLabel {
                label: label.clone(),
                table: table.source_taxonomy_id.clone(),
            })?;
        if *triggered {
            categories.extend(targets.iter().copied());
        }
    }
    let label = match table.unsafe_rule {
        UnsafeRule::AnyTriggered => {
            if external.flags.values().any(|&v| v) {
                SafetyLabel::Unsafe
            } else {
                SafetyLabel::Safe
            }
        }
        UnsafeRule::FlaggedField => {
            if external.flagged.unwrap_or(false) {
                SafetyLabel::Unsafe
            } else {
                SafetyLabel::Safe
            }
        }
    };
    Ok(JudgeOpinion::new(
        judge_id,
        label,
        categories,
        external.assessment.clone().unwrap_or_default(),
    ))
}

/// The aggregated jury decision with vote tallies.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JuryVerdict {
    pub label: SafetyLabel,
    pub categories: BTreeSet<CategoryCode>,
    /// Filled by [`select_assessment`]; empty straight out of [`aggregate`].
    pub assessment: String,
    pub unsafe_votes: usize,
    pub total_votes: usize,
    /// Category counts among unsafe-voting judges only.
    pub per_code_counts: BTreeMap<CategoryCode, usize>,
}

/// Aggregates judge opinions into a jury verdict.
///
/// The label is unsafe exactly when at least `unsafe_threshold` opinions are
/// unsafe. When unsafe, the verdict's categories are every code attaining the
/// maximal count among unsafe-voting judges (ties keep all maximal codes).
pub fn aggregate(
    opinions: &[JudgeOpinion],
    unsafe_threshold: usize,
) -> Result<JuryVerdict, JuryError> {
    if opinions.len() < unsafe_threshold {
        return Err(JuryError::InsufficientJury {
            required: unsafe_threshold,
            got: opinions.len(),
        });
    }

    let unsafe_votes = opinions
        .iter()
        .filter(|o| o.label == SafetyLabel::Unsafe)
        .count();
    let label = if unsafe_votes >= unsafe_threshold {
        SafetyLabel::Unsafe
    } else {
        SafetyLabel::Safe
    };

    let mut per_code_counts: BTreeMap<CategoryCode, usize> = BTreeMap::new();
    for opinion in opinions.iter().filter(|o| o.label == SafetyLabel::Unsafe) {
        for code in &opinion.categories {
            *per_code_counts.entry(*code).or_insert(0) += 1;
        }
    }

    let categories = if label == SafetyLabel::Unsafe {
        let max_count = per_code_counts.values().copied().max().unwrap_or(0);
        per_code_counts
            .iter()
            .filter(|(_, &count)| count == max_count && count > 0)
            .map(|(&code, _)| code)
            .collect()
    } else {
        BTreeSet::new()
    };

    Ok(JuryVerdict {
        label,
        categories,
        assessment: String::new(),
        unsafe_votes,
        total_votes: opinions.len(),
        per_code_counts,
    })
}

/// The assessment chosen for a jury verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SelectedAssessment {
    pub text: String,
    /// The judge the text came from, when one was found.
    pub judge_id: Option<String>,
    /// Set when every agreeing judge had an empty assessment.
    pub unavailable: bool,
}

/// Picks the assessment of the highest-priority judge whose label agrees
/// with the jury label and whose assessment is non-empty. Judges missing
/// from the priority list rank after listed ones, in input order.
pub fn select_assessment(
    opinions: &[JudgeOpinion],
    jury_label: SafetyLabel,
    priority: &[String],
) -> Result<SelectedAssessment, JuryError> {
    let rank = |id: &str| {
        priority
            .iter()
            .position(|p| p == id)
            .unwrap_or(priority.len())
    };
    let mut agreeing: Vec<&JudgeOpinion> =
        opinions.iter().filter(|o| o.label == jury_label).collect();
    if agreeing.is_empty() {
        return Err(JuryError::NoAgreeingJudge(jury_label));
    }
    agreeing.sort_by_key(|o| rank(&o.judge_id));
    match agreeing.iter().find(|o| !o.assessment.is_empty()) {
        Some(opinion) => Ok(SelectedAssessment {
            text: opinion.assessment.clone(),
            judge_id: Some(opinion.judge_id.clone()),
            unavailable: false,
        }),
        None => Ok(SelectedAssessment {
            text: String::new(),
            judge_id: None,
            unavailable: true,
        }),
    }
}
