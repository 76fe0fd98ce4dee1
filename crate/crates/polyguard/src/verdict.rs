//! Codec for the evaluator output grammar: an assessment inside `<think>`
//! tags, the safety label inside `<label>` tags, and the violated category
//! codes inside `<categories>` tags.
//!
//! Parsing is deliberately not general XML: tag names are case-sensitive and
//! attribute-free, and when a tag pair occurs more than once the first
//! well-formed occurrence wins. Strict mode demands the full grammar; Lenient
//! mode extracts whatever is present and never fails.
//!
//! The canonical rendered form, byte-exact:
//!
//! ```text
//! <think>{assessment}</think>
//! <label>{label}</label>
//! <categories>{codes or None}</categories>
//! ```

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::taxonomy::{render_category_set, CategoryCode, SafetyLabel};

/// How forgiving the parser should be.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParseMode {
    /// All three tags required, label valid, category string consistent
    /// with the label.
    Strict,
    /// Extract whatever parsed; absences and inconsistencies are recorded,
    /// never raised.
    Lenient,
}

/// The three tag pairs the grammar knows about.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TagKind {
    Think,
    Label,
    Categories,
}

impl TagKind {
    fn name(&self) -> &'static str {
        match self {
            TagKind::Think => "think",
            TagKind::Label => "label",
            TagKind::Categories => "categories",
        }
    }
}

/// Parse errors raised only in [`ParseMode::Strict`].
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum VerdictError {
    #[error("missing <{}> tag", .0.name())]
    MissingTag(TagKind),
    #[error("invalid label: {0:?}")]
    InvalidLabel(String),
    #[error("invalid category string: {0:?}")]
    InvalidCategoryString(String),
    #[error("label and category string disagree: {0}")]
    LabelCategoryMismatch(String),
    #[error("verdict violates invariants: {0}")]
    InvalidVerdict(String),
}

/// Everything the parser could extract from one raw evaluator output.
///
/// `categories` holds the grammar-parsed set exactly as written in the tag
/// body; a safe label alongside a non-`None` category string (or unsafe
/// alongside `None`) sets `label_category_conflict` instead of mutating the
/// set. The clamp to the pipeline's safe-implies-empty rule happens in
/// [`ParsedVerdict::into_verdict`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedVerdict {
    pub think_text: String,
    pub label: Option<SafetyLabel>,
    pub categories: Option<BTreeSet<CategoryCode>>,
    pub tags_present: BTreeSet<TagKind>,
    pub label_category_conflict: bool,
    pub raw: String,
}

impl ParsedVerdict {
    /// Whether a particular tag pair was found well-formed.
    pub fn has_tag(&self, tag: TagKind) -> bool {
        self.tags_present.contains(&tag)
    }

    /// Converts into a pipeline verdict, requiring at least a parsed label.
    ///
    /// A safe label never carries categories here, whatever the raw output
    /// claimed; missing or malformed category strings degrade to the empty
    /// set.
    pub fn into_verdict(self) -> Option<SafetyVerdict> {
        let label = self.label?;
        let categories = match label {
            SafetyLabel::Safe => BTreeSet::new(),
            SafetyLabel::Unsafe => self.categories.unwrap_or_default(),
        };
        Some(SafetyVerdict {
            label,
            categories,
            assessment: self.think_text,
        })
    }
}

/// A fully-formed safety verdict: label, violated categories, assessment.
///
/// Safe verdicts carry no categories. Strict-path unsafe verdicts carry at
/// least one (lenient parsing may produce an unsafe verdict with none).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SafetyVerdict {
    pub label: SafetyLabel,
    pub categories: BTreeSet<CategoryCode>,
    pub assessment: String,
}

impl SafetyVerdict {
    /// A safe verdict (empty category set).
    pub fn safe(assessment: impl Into<String>) -> SafetyVerdict {
        SafetyVerdict {
            label: SafetyLabel::Safe,
            categories: BTreeSet::new(),
            assessment: assessment.into(),
        }
    }

    /// An unsafe verdict with the given non-empty category set.
    pub fn unsafe_with(
        categories: impl IntoIterator<Item = CategoryCode>,
        assessment: impl Into<String>,
    ) -> Result<SafetyVerdict, VerdictError> {
        let categories: BTreeSet<_> = categories.into_iter().collect();
        if categories.is_empty() {
            return Err(VerdictError::InvalidVerdict(
                "unsafe verdict requires at least one category".into(),
            ));
        }
        Ok(SafetyVerdict {
            label: SafetyLabel::Unsafe,
            categories,
            assessment: assessment.into(),
        })
    }
}

/// Locates the first well-formed `<name>...</name>` pair and returns its body.
///
/// The body runs from the first opening tag to the first closing tag after
/// it; with no closing tag anywhere after, the pair is absent.
fn extract_tag_body<'a>(raw: &'a str, name: &str) -> Option<&'a str> {
    let open = format!("<{name}>");
    let close = format!("</{name}>");
    let start = raw.find(&open)? + open.len();
    let end = raw[start..].find(&close)? + start;
    Some(&raw[start..end])
}

/// Result of validating a categories tag body against the canonical grammar:
/// `None`, or comma-separated `O` codes with optional spaces after commas.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CategoryString {
    Valid(BTreeSet<CategoryCode>),
    Malformed,
}

/// Parses a categories tag body. Surrounding whitespace is ignored; `None`
/// and the codes are matched case-insensitively; spaces are allowed after
/// commas but not before them. Duplicate codes are well-formed and collapse
/// into the set.
pub fn parse_category_string(body: &str) -> CategoryString {
    let trimmed = body.trim();
    if trimmed.eq_ignore_ascii_case("none") {
        return CategoryString::Valid(BTreeSet::new());
    }
    let mut set = BTreeSet::new();
    for piece in trimmed.split(',') {
        // A space before the comma shows up as trailing whitespace on the
        // piece; only leading whitespace (after a comma) is tolerated.
        if piece.trim_end() != piece && !piece.trim().is_empty() {
            return CategoryString::Malformed;
        }
        let token = piece.trim_start();
        if token.is_empty() || token.len() != token.trim_end().len() {
            return CategoryString::Malformed;
        }
        match crate::taxonomy::category_from_code(token) {
            Ok(code) => {
                set.insert(code);
            }
            Err(_) => return CategoryString::Malformed,
        }
    }
    CategoryString::Valid(set)
}

/// Parses one raw evaluator output.
///
/// Lenient mode never fails and additionally accepts the singular
/// `<category>...</category>` spelling when the canonical plural tag is
/// absent. Strict mode requires all three tags, a valid label token, a
/// grammar-valid category string, and label/category consistency (safe pairs
/// with `None`, unsafe pairs with at least one code).
pub fn parse_verdict(raw: &str, mode: ParseMode) -> Result<ParsedVerdict, VerdictError> {
    let mut tags_present = BTreeSet::new();

    let think_body = extract_tag_body(raw, "think");
    if think_body.is_some() {
        tags_present.insert(TagKind::Think);
    }

    let label_body = extract_tag_body(raw, "label");
    if label_body.is_some() {
        tags_present.insert(TagKind::Label);
    }

    let mut categories_body = extract_tag_body(raw, "categories");
    if categories_body.is_some() {
        tags_present.insert(TagKind::Categories);
    } else if mode == ParseMode::Lenient {
        categories_body = extract_tag_body(raw, "category");
        if categories_body.is_some() {
            tags_present.insert(TagKind::Categories);
        }
    }

    let label = label_body.and_then(SafetyLabel::parse_token);
    let parsed_categories = categories_body.map(parse_category_string);

    if mode == ParseMode::Strict {
        for (tag, body) in [
            (TagKind::Think, think_body),
            (TagKind::Label, label_body),
            (TagKind::Categories, categories_body),
        ] {
            if body.is_none() {
                return Err(VerdictError::MissingTag(tag));
            }
        }
        let label = label
            .ok_or_else(|| VerdictError::InvalidLabel(label_body.unwrap_or("").trim().to_string()))?;
        let categories = match parsed_categories {
            Some(CategoryString::Valid(set)) => set,
            _ => {
                return Err(VerdictError::InvalidCategoryString(
                    categories_body.unwrap_or("").trim().to_string(),
                ))
            }
        };
        match (label, categories.is_empty()) {
            (SafetyLabel::Safe, false) => {
                return Err(VerdictError::LabelCategoryMismatch(
                    "safe label with category codes".into(),
                ))
            }
            (SafetyLabel::Unsafe, true) => {
                return Err(VerdictError::LabelCategoryMismatch(
                    "unsafe label with None categories".into(),
                ))
            }
            _ => {}
        }
        return Ok(ParsedVerdict {
            think_text: think_body.unwrap_or("").to_string(),
            label: Some(label),
            categories: Some(categories),
            tags_present,
            label_category_conflict: false,
            raw: raw.to_string(),
        });
    }

    let categories = match parsed_categories {
        Some(CategoryString::Valid(set)) => Some(set),
        _ => None,
    };
    let label_category_conflict = match (label, &categories) {
        (Some(SafetyLabel::Safe), Some(set)) => !set.is_empty(),
        (Some(SafetyLabel::Unsafe), Some(set)) => set.is_empty(),
        _ => false,
    };

    Ok(ParsedVerdict {
        think_text: think_body.unwrap_or("").to_string(),
        label,
        categories,
        tags_present,
        label_category_conflict,
        raw: raw.to_string(),
    })
}

/// Renders a verdict in the canonical output grammar, byte-exact.
pub fn render_verdict(verdict: &SafetyVerdict) -> String {
    format!(
        "<think>{}</think>\n<label>{}</label>\n<categories>{}</categories>",
        verdict.assessment,
        verdict.label,
        render_category_set(&verdict.categories)
    )
}

/// Counts sentences: maximal non-empty segments terminated by `.`, `!` or
/// `?` followed by whitespace or end of text. A trailing unterminated
/// segment counts as one sentence when it has at least three words.
pub fn count_sentences(text: &str) -> usize {
    let mut count = 0;
    let mut segment_has_content = false;
    let mut chars = text.chars().peekable();

    while let Some(ch) = chars.next() {
        if matches!(ch, '.' | '!' | '?') {
            let at_boundary = match chars.peek() {
                None => true,
                Some(next) => next.is_whitespace(),
            };
            if at_boundary {
                if segment_has_content {
                    count += 1;
                }
                segment_has_content = false;
            }
        } else if !ch.is_whitespace() {
            segment_has_content = true;
        }
    }

    if segment_has_content {
        // Reconstruct the trailing segment: everything after the last
        // terminator boundary.
        let tail = trailing_segment(text);
        if tail.split_whitespace().count() >= 3 {
            count += 1;
        }
    }
    count
}

fn trailing_segment(text: &str) -> &str {
    let bytes = text.as_bytes();
    let mut boundary = 0;
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        if matches!(b, b'.' | b'!' | b'?') {
            let next_ws = i + 1 >= bytes.len() || text[i + 1..].chars().next().is_some_and(|c| c.is_whitespace());
            if next_ws {
                boundary = i + 1;
            }
        }
        i += 1;
    }
    &text[boundary..]
}
