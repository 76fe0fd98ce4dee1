//! The full moderation agent: detect the language(s), choose a route,
//! translate when needed, build the evaluator prompt, and parse the verdict.
//!
//! With deterministic stub backends the whole pipeline is a pure function of
//! the request (timings aside), which is what makes golden-file testing of
//! end-to-end runs possible. Translation failures fail the request — the
//! evaluator is never handed text in a language it was not routed for.

mod evaluator;
mod prompt;

pub use evaluator::{EvaluatorBackend, EvaluatorError, RuleStubEvaluator, StubRule};
pub use prompt::{build_prompt, system_prompt, ChatMessage, Role};

use std::sync::Arc;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::lang::{LanguageRouter, LanguageSpan, RoutePath, RouteError, RoutingDecision};
use crate::translate::{
    translate, FailurePolicy, SegmentedText, SourceSegment, TranslationBackend, TranslationError,
    TranslationMode, TranslationResult,
};
use crate::verdict::{parse_verdict, ParseMode, SafetyVerdict};

/// Options carried by one moderation request.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModerationOptions {
    /// Force a pipeline path instead of the routing decision.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub force_path: Option<RoutePath>,
    /// Parse the evaluator output in strict mode.
    #[serde(default)]
    pub strict_parse: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModerationRequest {
    pub request_id: String,
    pub text: String,
    #[serde(default)]
    pub options: ModerationOptions,
}

impl ModerationRequest {
    pub fn new(request_id: impl Into<String>, text: impl Into<String>) -> Self {
        ModerationRequest {
            request_id: request_id.into(),
            text: text.into(),
            options: ModerationOptions::default(),
        }
    }
}

/// Wall-clock milliseconds per stage. Excluded from determinism comparisons.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct StageTimings {
    pub routing_ms: u64,
    pub translation_ms: u64,
    pub evaluation_ms: u64,
    pub total_ms: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModerationResponse {
    pub request_id: String,
    pub verdict: SafetyVerdict,
    pub routing: RoutingDecision,
    pub spans: Vec<LanguageSpan>,
    /// Present exactly when the route was not direct English.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub translation: Option<TranslationResult>,
    pub raw_evaluator_output: String,
    pub timings: StageTimings,
}

/// The pipeline stage a failure is attributed to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Stage {
    Routing,
    Translation,
    Evaluation,
}

/// A failed moderation, carrying whatever context earlier stages produced.
#[derive(Debug, Clone, thiserror::Error)]
#[error("moderation failed at {stage:?} stage: {detail}")]
pub struct ModerationFailure {
    pub request_id: String,
    pub stage: Stage,
    pub detail: String,
    pub spans: Vec<LanguageSpan>,
    pub routing: Option<RoutingDecision>,
}

/// The assembled agent: router plus translation and evaluator backends.
#[derive(Clone)]
pub struct Pipeline {
    router: LanguageRouter,
    translator: Arc<dyn TranslationBackend>,
    evaluator: Arc<dyn EvaluatorBackend>,
}

impl Pipeline {
    pub fn new(
        router: LanguageRouter,
        translator: Arc<dyn TranslationBackend>,
        evaluator: Arc<dyn EvaluatorBackend>,
    ) -> Self {
        Pipeline { router, translator, evaluator }
    }

    pub fn router(&self) -> &LanguageRouter {
        &self.router
    }

    /// Evaluates English-routed text: builds the prompt, queries the
    /// backend, parses the verdict. One retry on unparseable output, then
    /// the error surfaces.
    pub fn evaluate(&self, english_text: &str, strict: bool) -> Result<SafetyVerdict, EvaluatorError> {
        self.evaluate_raw(english_text, strict).map(|(verdict, _)| verdict)
    }

    fn evaluate_raw(&self, english_text: &str, strict: bool) -> Result<(SafetyVerdict, String), EvaluatorError> {
        let messages = build_prompt(english_text);
        let mut last_error = None;
        let mut last_raw = String::new();
        for _attempt in 0..2 {
            let raw = self.evaluator.complete(&messages)?;
            last_raw = raw.clone();
            if strict {
                match parse_verdict(&raw, ParseMode::Strict) {
                    Ok(parsed) => {
                        let verdict = parsed.into_verdict().expect("strict parse has a label");
                        return Ok((verdict, raw));
                    }
                    Err(e) => last_error = Some(EvaluatorError::StrictParseViolation(e.to_string())),
                }
            } else {
                let parsed = parse_verdict(&raw, ParseMode::Lenient).expect("lenient never fails");
                match parsed.into_verdict() {
                    Some(verdict) => return Ok((verdict, raw)),
                    None => last_error = Some(EvaluatorError::Unparseable(raw)),
                }
            }
        }
        Err(last_error.unwrap_or(EvaluatorError::Unparseable(last_raw)))
    }

    /// Runs the full agent on one request.
    pub fn moderate(&self, request: &ModerationRequest) -> Result<ModerationResponse, ModerationFailure> {
        let started = Instant::now();
        let fail = |stage: Stage, detail: String, spans: &[LanguageSpan], routing: Option<&RoutingDecision>| {
            ModerationFailure {
                request_id: request.request_id.clone(),
                stage,
                detail,
                spans: spans.to_vec(),
                routing: routing.cloned(),
            }
        };

        // Stage 1: segment + detect + route.
        let routing_started = Instant::now();
        let (spans, mut routing) = self
            .router
            .route(&request.text)
            .map_err(|e: RouteError| fail(Stage::Routing, e.to_string(), &[], None))?;
        if let Some(path) = request.options.force_path {
            routing = forced_decision(path, &routing);
        }
        let routing_ms = routing_started.elapsed().as_millis() as u64;

        // Stage 2: translation, skipped on the direct-English path.
        let translation_started = Instant::now();
        let translation = match routing.path {
            RoutePath::DirectEnglish => None,
            RoutePath::TranslateWhole | RoutePath::TranslateSegmented => {
                let segmented = segmented_from_spans(&request.text, &spans)
                    .map_err(|e| fail(Stage::Translation, e.to_string(), &spans, Some(&routing)))?;
                let mode = match routing.path {
                    RoutePath::TranslateWhole => TranslationMode::Whole,
                    _ => TranslationMode::OneByOne,
                };
                let result = translate(&segmented, self.translator.as_ref(), mode, FailurePolicy::Abort)
                    .map_err(|e| fail(Stage::Translation, e.to_string(), &spans, Some(&routing)))?;
                Some(result)
            }
        };
        let translation_ms = translation_started.elapsed().as_millis() as u64;

        // Stage 3: evaluate the English-routed text.
        let evaluation_started = Instant::now();
        let english_text = match &translation {
            Some(result) => result.combined_english.as_str(),
            None => request.text.as_str(),
        };
        let (verdict, raw_evaluator_output) = self
            .evaluate_raw(english_text, request.options.strict_parse)
            .map_err(|e| fail(Stage::Evaluation, e.to_string(), &spans, Some(&routing)))?;
        let evaluation_ms = evaluation_started.elapsed().as_millis() as u64;

        Ok(ModerationResponse {
            request_id: request.request_id.clone(),
            verdict,
            routing,
            spans,
            translation,
            raw_evaluator_output,
            timings: StageTimings {
                routing_ms,
                translation_ms,
                evaluation_ms,
                total_ms: started.elapsed().as_millis() as u64,
            },
        })
    }
}

/// A forced path still satisfies the routing invariants: direct English
/// implies dominant "en" and no code-switching; segmented implies
/// code-switched.
fn forced_decision(path: RoutePath, computed: &RoutingDecision) -> RoutingDecision {
    RoutingDecision {
        path,
        dominant_language: match path {
            RoutePath::DirectEnglish => "en".to_string(),
            _ => computed.dominant_language.clone(),
        },
        is_code_switched: path == RoutePath::TranslateSegmented,
    }
}

/// Converts spans back into segmented text, capturing the original
/// inter-span separators so the English output preserves structure.
fn segmented_from_spans(original: &str, spans: &[LanguageSpan]) -> Result<SegmentedText, TranslationError> {
    let chars: Vec<char> = original.chars().collect();
    let segments: Vec<SourceSegment> = spans
        .iter()
        .map(|s| SourceSegment { text: s.text.clone(), language: s.language.clone() })
        .collect();
    let mut separators = Vec::new();
    for pair in spans.windows(2) {
        let separator: String = chars[pair[0].end..pair[1].start].iter().collect();
        separators.push(separator);
    }
    SegmentedText::new(segments, separators)
}
