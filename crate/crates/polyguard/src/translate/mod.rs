//! Backend-pluggable many-to-English translation: whole-text and one-by-one
//! segment modes behind a single trait, plus the quality metrics used to
//! score translator output.
//!
//! Backends shipped here are the deterministic stubs (identity echo and
//! fixture-dictionary lookup). Remote HTTP backends implement the same trait
//! from the gateway crate. English segments always pass through unchanged,
//! whatever the backend.

mod metrics;

pub use metrics::{translation_metrics, TranslationScore};

use std::collections::BTreeMap;
use std::collections::BTreeSet;
use std::path::Path;
use std::time::Instant;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TranslationError {
    #[error("translation backend unavailable: {0}")]
    BackendUnavailable(String),
    #[error("backend does not support source language {0:?}")]
    UnsupportedLanguage(String),
    #[error("input of {len} chars exceeds backend limit of {max}")]
    LengthExceeded { len: usize, max: usize },
    #[error("candidate or reference text is empty")]
    EmptyText,
    #[error("whole-text mode requires a single-language segment list")]
    MixedLanguageWhole,
    #[error("no segments to translate")]
    EmptySegments,
    #[error("fixture file error: {0}")]
    Fixture(String),
}

/// Which source languages a backend accepts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LanguageSupport {
    /// Accepts any source language.
    Any,
    /// Accepts exactly these language codes.
    Set(BTreeSet<String>),
}

impl LanguageSupport {
    pub fn supports(&self, language: &str) -> bool {
        match self {
            LanguageSupport::Any => true,
            LanguageSupport::Set(set) => set.contains(language),
        }
    }
}

/// A backend's declared capabilities.
#[derive(Debug, Clone)]
pub struct BackendCapabilities {
    pub languages: LanguageSupport,
    pub max_input_chars: Option<usize>,
    pub concurrency_limit: usize,
    /// Whether (text, source_language) -> output is referentially
    /// transparent within a run.
    pub deterministic: bool,
}

impl Default for BackendCapabilities {
    fn default() -> Self {
        BackendCapabilities {
            languages: LanguageSupport::Any,
            max_input_chars: None,
            concurrency_limit: 1,
            deterministic: true,
        }
    }
}

/// A many-to-English translation backend.
pub trait TranslationBackend: Send + Sync {
    fn backend_id(&self) -> &str;
    fn capabilities(&self) -> BackendCapabilities;
    /// Translates one segment into English.
    fn translate_segment(&self, text: &str, source_language: &str) -> Result<String, TranslationError>;
}

/// Whole-text versus segment-by-segment translation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TranslationMode {
    Whole,
    OneByOne,
}

/// What to do when a segment cannot be translated in one-by-one mode.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FailurePolicy {
    /// Abort the whole run on the first failing segment.
    #[default]
    Abort,
    /// Keep the original text for failing segments and record them.
    Degrade,
}

/// Segments with the separators between them, so the English output can be
/// rejoined preserving the original structure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SegmentedText {
    pub segments: Vec<SourceSegment>,
    /// One separator between each adjacent segment pair
    /// (`separators.len() == segments.len() - 1`).
    pub separators: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SourceSegment {
    pub text: String,
    pub language: String,
}

impl SegmentedText {
    pub fn new(segments: Vec<SourceSegment>, separators: Vec<String>) -> Result<Self, TranslationError> {
        if segments.is_empty() {
            return Err(TranslationError::EmptySegments);
        }
        if separators.len() != segments.len() - 1 {
            return Err(TranslationError::Fixture(format!(
                "expected {} separators for {} segments, got {}",
                segments.len() - 1,
                segments.len(),
                separators.len()
            )));
        }
        Ok(SegmentedText { segments, separators })
    }

    /// Convenience constructor joining segments with newlines.
    pub fn with_newlines(segments: Vec<SourceSegment>) -> Result<Self, TranslationError> {
        let separators = vec!["\n".to_string(); segments.len().saturating_sub(1)];
        SegmentedText::new(segments, separators)
    }

    fn join(&self, texts: &[String]) -> String {
        let mut output = String::new();
        for (i, text) in texts.iter().enumerate() {
            if i > 0 {
                output.push_str(&self.separators[i - 1]);
            }
            output.push_str(text);
        }
        output
    }

    fn joined_source(&self) -> String {
        let texts: Vec<String> = self.segments.iter().map(|s| s.text.clone()).collect();
        self.join(&texts)
    }
}

/// The outcome of one translation run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TranslationResult {
    /// What the backend actually ran on: the input segments in one-by-one
    /// mode, or the single joined text in whole mode.
    pub source_segments: Vec<SourceSegment>,
    pub english_segments: Vec<String>,
    pub combined_english: String,
    pub backend_id: String,
    pub latency_ms: Vec<u64>,
    /// Indices of segments left untranslated under [`FailurePolicy::Degrade`].
    pub degraded: Vec<usize>,
}

fn check_capabilities(
    caps: &BackendCapabilities,
    text: &str,
    language: &str,
) -> Result<(), TranslationError> {
    if !caps.languages.supports(language) {
        return Err(TranslationError::UnsupportedLanguage(language.to_string()));
    }
    if let Some(max) = caps.max_input_chars {
        let len = text.chars().count();
        if len > max {
            return Err(TranslationError::LengthExceeded { len, max });
        }
    }
    Ok(())
}

/// Runs translation over segmented text.
///
/// One-by-one mode issues one backend call per non-English segment,
/// preserving order; whole mode joins the (single-language) segments and
/// issues one call. English segments pass through unchanged either way.
pub fn translate(
    input: &SegmentedText,
    backend: &dyn TranslationBackend,
    mode: TranslationMode,
    policy: FailurePolicy,
) -> Result<TranslationResult, TranslationError> {
    let caps = backend.capabilities();
    match mode {
        TranslationMode::Whole => {
            let languages: BTreeSet<&str> = input
                .segments
                .iter()
                .map(|s| s.language.as_str())
                .filter(|l| *l != "und")
                .collect();
            if languages.len() > 1 {
                return Err(TranslationError::MixedLanguageWhole);
            }
            let language = languages.iter().next().copied().unwrap_or("und").to_string();
            let joined = input.joined_source();
            let started = Instant::now();
            // English passes through; undetermined text has nothing to
            // translate and passes through too.
            let english = if language == "en" || language == "und" {
                joined.clone()
            } else {
                check_capabilities(&caps, &joined, &language)?;
                backend.translate_segment(&joined, &language)?
            };
            let elapsed = started.elapsed().as_millis() as u64;
            Ok(TranslationResult {
                source_segments: vec![SourceSegment { text: joined, language }],
                english_segments: vec![english.clone()],
                combined_english: english,
                backend_id: backend.backend_id().to_string(),
                latency_ms: vec![elapsed],
                degraded: Vec::new(),
            })
        }
        TranslationMode::OneByOne => {
            let mut english_segments = Vec::with_capacity(input.segments.len());
            let mut latency_ms = Vec::with_capacity(input.segments.len());
            let mut degraded = Vec::new();
            for (index, segment) in input.segments.iter().enumerate() {
                let started = Instant::now();
                let english = if segment.language == "en" || segment.language == "und" {
                    Ok(segment.text.clone())
                } else {
                    check_capabilities(&caps, &segment.text, &segment.language)
                        .and_then(|_| backend.translate_segment(&segment.text, &segment.language))
                };
                match english {
                    Ok(text) => english_segments.push(text),
                    Err(error) => match policy {
                        FailurePolicy::Abort => return Err(error),
                        FailurePolicy::Degrade => {
                            degraded.push(index);
                            english_segments.push(segment.text.clone());
                        }
                    },
                }
                latency_ms.push(started.elapsed().as_millis() as u64);
            }
            let combined_english = input.join(&english_segments);
            Ok(TranslationResult {
                source_segments: input.segments.clone(),
                english_segments,
                combined_english,
                backend_id: backend.backend_id().to_string(),
                latency_ms,
                degraded,
            })
        }
    }
}

// ---------------------------------------------------------------------------
// Deterministic stub backends
// ---------------------------------------------------------------------------

/// Echoes input unchanged. Useful when tests only care about plumbing.
#[derive(Debug, Default)]
pub struct IdentityBackend;

impl TranslationBackend for IdentityBackend {
    fn backend_id(&self) -> &str {
        "identity"
    }

    fn capabilities(&self) -> BackendCapabilities {
        BackendCapabilities::default()
    }

    fn translate_segment(&self, text: &str, _source_language: &str) -> Result<String, TranslationError> {
        Ok(text.to_string())
    }
}

/// One fixture entry for the dictionary backend.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DictionaryEntry {
    pub language: String,
    pub text: String,
    pub english: String,
}

/// Fixture-table lookup backend for deterministic end-to-end tests.
///
/// Lookup is by exact trimmed text, so a detected sibling language (hi vs
/// ne vs mai all share a script) still hits the right entry. Misses are
/// backend errors; translation never silently degrades.
#[derive(Debug, Default)]
pub struct DictionaryBackend {
    entries: BTreeMap<String, String>,
}

impl DictionaryBackend {
    pub fn new(entries: impl IntoIterator<Item = DictionaryEntry>) -> Self {
        DictionaryBackend {
            entries: entries
                .into_iter()
                .map(|e| (e.text.trim().to_string(), e.english))
                .collect(),
        }
    }

    /// Loads entries from a JSON array of `{language, text, english}`.
    pub fn from_json(json: &str) -> Result<Self, TranslationError> {
        let entries: Vec<DictionaryEntry> =
            serde_json::from_str(json).map_err(|e| TranslationError::Fixture(e.to_string()))?;
        Ok(DictionaryBackend::new(entries))
    }

    pub fn from_path(path: impl AsRef<Path>) -> Result<Self, TranslationError> {
        let json = std::fs::read_to_string(path)
            .map_err(|e| TranslationError::Fixture(e.to_string()))?;
        DictionaryBackend::from_json(&json)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

impl TranslationBackend for DictionaryBackend {
    fn backend_id(&self) -> &str {
        "dictionary"
    }

    fn capabilities(&self) -> BackendCapabilities {
        BackendCapabilities::default()
    }

    fn translate_segment(&self, text: &str, source_language: &str) -> Result<String, TranslationError> {
        self.entries.get(text.trim()).cloned().ok_or_else(|| {
            TranslationError::BackendUnavailable(format!(
                "dictionary backend has no entry for {source_language:?} text {text:?}"
            ))
        })
    }
}
