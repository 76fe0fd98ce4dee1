//! Language detection, text segmentation, and routing: decide whether text
//! goes straight to the evaluator (English), through whole-text translation
//! (single foreign language), or through segment-by-segment translation
//! (code-switched input, e.g. sandwich-style prompts).
//!
//! Detection is two-stage and fully offline: Unicode script classification
//! first, then embedded character n-gram profiles to disambiguate within a
//! script. Latin-script segments below the confidence floor become `und`;
//! non-Latin segments keep their best profile language, since every
//! non-English script routes to translation anyway and family-level
//! detection suffices there.

mod profiles;
mod script;

pub use profiles::{profiles, supported_languages, ProfileSet, PROFILE_VERSION};
pub use script::{dominant_script, script_of, Script};

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RouteError {
    #[error("input is empty after trimming")]
    EmptyInput,
}

/// Router tunables. The defaults match the shipped service configuration.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RouterConfig {
    /// Latin-script segments scoring below this become `und`.
    pub confidence_floor: f64,
    /// `und` segments shorter than this many chars inherit the dominant
    /// neighboring language.
    pub short_segment_chars: usize,
    /// Lines longer than this many chars are further split on sentence
    /// terminators.
    pub long_line_chars: usize,
}

impl Default for RouterConfig {
    fn default() -> Self {
        RouterConfig {
            confidence_floor: 0.5,
            short_segment_chars: 20,
            long_line_chars: 240,
        }
    }
}

/// A segment of the input text, with char offsets into the original.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Segment {
    pub text: String,
    pub start: usize,
    pub end: usize,
}

/// Per-segment language identification.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LanguageSpan {
    pub text: String,
    pub start: usize,
    pub end: usize,
    /// BCP-47-style code, or `"und"` when undetermined.
    pub language: String,
    pub script: Script,
    /// In [0, 1]; exactly 1.0 when the script alone determines the language.
    pub confidence: f64,
}

/// The pipeline path chosen for one input.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RoutePath {
    DirectEnglish,
    TranslateWhole,
    TranslateSegmented,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RoutingDecision {
    pub path: RoutePath,
    pub dominant_language: String,
    pub is_code_switched: bool,
}

/// Language detection and routing over one configuration.
#[derive(Debug, Clone, Default)]
pub struct LanguageRouter {
    config: RouterConfig,
}

const SENTENCE_TERMINATORS: [char; 6] = ['.', '!', '?', '।', '؟', '۔'];

fn is_numbering_prefix(text: &str) -> bool {
    let trimmed = text.trim();
    if matches!(trimmed, "-" | "*" | "•") {
        return true;
    }
    let Some(body) = trimmed.strip_suffix(['.', ')']) else {
        return false;
    };
    !body.is_empty() && body.len() <= 4 && body.bytes().all(|b| b.is_ascii_digit())
}

impl LanguageRouter {
    pub fn new(config: RouterConfig) -> Self {
        LanguageRouter { config }
    }

    pub fn config(&self) -> &RouterConfig {
        &self.config
    }

    /// Splits text into segments: one per line, with lines longer than the
    /// configured threshold further split on sentence terminators.
    /// Numbering prefixes ("1.", "-") stay attached to their segment.
    pub fn segment(&self, text: &str) -> Result<Vec<Segment>, RouteError> {
        if text.trim().is_empty() {
            return Err(RouteError::EmptyInput);
        }
        let mut segments = Vec::new();
        let mut line_start = 0usize; // char offset
        let mut line = String::new();
        let flush = |segments: &mut Vec<Segment>, line: &str, line_start: usize, config: &RouterConfig| {
            if line.trim().is_empty() {
                return;
            }
            if line.chars().count() > config.long_line_chars {
                split_long_line(segments, line, line_start);
            } else {
                push_trimmed(segments, line, line_start);
            }
        };
        for (offset, c) in text.chars().enumerate() {
            if c == '\n' {
                flush(&mut segments, &line, line_start, &self.config);
                line.clear();
                line_start = offset + 1;
            } else {
                line.push(c);
            }
        }
        flush(&mut segments, &line, line_start, &self.config);
        Ok(segments)
    }

    /// Identifies the language of each segment.
    pub fn detect(&self, segments: &[Segment]) -> Vec<LanguageSpan> {
        let mut spans: Vec<LanguageSpan> = segments
            .iter()
            .map(|segment| self.detect_one(segment))
            .collect();
        self.inherit_short_undetermined(&mut spans);
        spans
    }

    fn detect_one(&self, segment: &Segment) -> LanguageSpan {
        let script = dominant_script(&segment.text);
        let (language, confidence) = if script == Script::Common {
            ("und".to_string(), 0.0)
        } else if let Some(lang) = script.unique_language() {
            (lang.to_string(), 1.0)
        } else {
            match profiles().classify(&segment.text, script) {
                Some(found) => {
                    if script.is_latin() && found.confidence < self.config.confidence_floor {
                        ("und".to_string(), found.confidence)
                    } else {
                        (found.language.to_string(), found.confidence)
                    }
                }
                None => ("und".to_string(), 0.0),
            }
        };
        LanguageSpan {
            text: segment.text.clone(),
            start: segment.start,
            end: segment.end,
            language,
            script,
            confidence,
        }
    }

    /// Short `und` spans inherit the dominant neighboring language: the
    /// longer of the two adjacent detected spans, preferring the previous
    /// one on ties.
    fn inherit_short_undetermined(&self, spans: &mut [LanguageSpan]) {
        let languages: Vec<Option<(String, usize)>> = spans
            .iter()
            .map(|s| {
                (s.language != "und").then(|| (s.language.clone(), s.text.chars().count()))
            })
            .collect();
        for (i, span) in spans.iter_mut().enumerate() {
            if span.language != "und" || span.text.chars().count() >= self.config.short_segment_chars
            {
                continue;
            }
            let previous = i.checked_sub(1).and_then(|p| languages[p].clone());
            let next = languages.get(i + 1).cloned().flatten();
            let inherited = match (previous, next) {
                (Some((pl, pn)), Some((nl, nn))) => Some(if nn > pn { nl } else { pl }),
                (Some((pl, _)), None) => Some(pl),
                (None, Some((nl, _))) => Some(nl),
                (None, None) => None,
            };
            if let Some(language) = inherited {
                span.language = language;
            }
        }
    }

    /// Chooses the pipeline path from detected spans.
    ///
    /// All-English input routes directly; a single non-English language
    /// routes to whole-text translation; two or more distinct detected
    /// languages mean code-switched input and segment-by-segment
    /// translation. `und` spans shorter than the floor are ignored.
    /// Non-Latin-script spans never produce a direct-English route.
    pub fn classify_routing(&self, spans: &[LanguageSpan]) -> RoutingDecision {
        let considered: Vec<&LanguageSpan> = spans
            .iter()
            .filter(|s| {
                s.language != "und" || s.text.chars().count() >= self.config.short_segment_chars
            })
            .collect();

        let mut weights: std::collections::BTreeMap<&str, usize> = std::collections::BTreeMap::new();
        for span in &considered {
            if span.language != "und" {
                *weights.entry(span.language.as_str()).or_insert(0) += span.text.chars().count();
            }
        }
        let distinct: Vec<&str> = weights.keys().copied().collect();
        let dominant = weights
            .iter()
            .max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(a.0)))
            .map(|(lang, _)| lang.to_string())
            .unwrap_or_else(|| "und".to_string());

        let all_latin_or_common = spans
            .iter()
            .all(|s| matches!(s.script, Script::Latin | Script::Common));

        if distinct.len() >= 2 {
            return RoutingDecision {
                path: RoutePath::TranslateSegmented,
                dominant_language: dominant,
                is_code_switched: true,
            };
        }
        if distinct == ["en"]
            && all_latin_or_common
            && considered.iter().all(|s| s.language == "en")
        {
            return RoutingDecision {
                path: RoutePath::DirectEnglish,
                dominant_language: "en".to_string(),
                is_code_switched: false,
            };
        }
        RoutingDecision {
            path: RoutePath::TranslateWhole,
            dominant_language: dominant,
            is_code_switched: false,
        }
    }

    /// segment + detect + classify_routing in one call.
    pub fn route(&self, text: &str) -> Result<(Vec<LanguageSpan>, RoutingDecision), RouteError> {
        let segments = self.segment(text)?;
        let spans = self.detect(&segments);
        let decision = self.classify_routing(&spans);
        Ok((spans, decision))
    }
}

fn push_trimmed(segments: &mut Vec<Segment>, line: &str, line_start: usize) {
    // Keep offsets accurate while trimming surrounding whitespace.
    let mut start = line_start;
    let mut text = line;
    while let Some(c) = text.chars().next() {
        if c.is_whitespace() {
            text = &text[c.len_utf8()..];
            start += 1;
        } else {
            break;
        }
    }
    let mut end = start + text.chars().count();
    while let Some(c) = text.chars().next_back() {
        if c.is_whitespace() {
            text = &text[..text.len() - c.len_utf8()];
            end -= 1;
        } else {
            break;
        }
    }
    if !text.is_empty() {
        segments.push(Segment {
            text: text.to_string(),
            start,
            end,
        });
    }
}

/// Splits one overlong line on sentence terminators followed by whitespace,
/// keeping numbering prefixes attached to the sentence they introduce.
fn split_long_line(segments: &mut Vec<Segment>, line: &str, line_start: usize) {
    let chars: Vec<char> = line.chars().collect();
    let mut piece_start = 0usize;
    let mut i = 0usize;
    while i < chars.len() {
        let c = chars[i];
        if SENTENCE_TERMINATORS.contains(&c) {
            let at_boundary = i + 1 >= chars.len() || chars[i + 1].is_whitespace();
            if at_boundary {
                let piece: String = chars[piece_start..=i].iter().collect();
                if !is_numbering_prefix(&piece) && !piece.trim().is_empty() {
                    push_trimmed(segments, &piece, line_start + piece_start);
                    piece_start = i + 1;
                }
            }
        }
        i += 1;
    }
    if piece_start < chars.len() {
        let piece: String = chars[piece_start..].iter().collect();
        push_trimmed(segments, &piece, line_start + piece_start);
    }
}
