//! Safety-evaluator backends: the trait remote chat endpoints implement from
//! the gateway crate, and the deterministic rule stub used for tests and
//! offline runs.

use std::collections::BTreeSet;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::taxonomy::{CategoryCode, SafetyLabel};
use crate::verdict::{render_verdict, SafetyVerdict};

use super::prompt::ChatMessage;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EvaluatorError {
    #[error("evaluator backend unavailable: {0}")]
    BackendUnavailable(String),
    #[error("evaluator output unparseable after retry: {0:?}")]
    Unparseable(String),
    #[error("strict parse violation: {0}")]
    StrictParseViolation(String),
    #[error("fixture file error: {0}")]
    Fixture(String),
}

/// A backend that turns an evaluator prompt into a raw completion.
pub trait EvaluatorBackend: Send + Sync {
    fn backend_id(&self) -> &str;
    fn complete(&self, messages: &[ChatMessage]) -> Result<String, EvaluatorError>;
}

/// One rule of the deterministic stub: a keyword and the verdict it forces.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct StubRule {
    pub keyword: String,
    pub label: SafetyLabel,
    #[serde(default)]
    pub categories: BTreeSet<CategoryCode>,
}

/// Fully deterministic evaluator: verdicts derive from a keyword table plus
/// a default-safe fallback. The first matching rule (table order,
/// case-insensitive substring on the user text) wins. Output is rendered in
/// the canonical grammar with a generated three-sentence assessment, so it
/// parses in strict mode.
#[derive(Debug, Default)]
pub struct RuleStubEvaluator {
    rules: Vec<StubRule>,
}

impl RuleStubEvaluator {
    pub fn new(rules: impl IntoIterator<Item = StubRule>) -> Self {
        RuleStubEvaluator { rules: rules.into_iter().collect() }
    }

    /// Loads rules from a JSON array of `{keyword, label, categories[]}`.
    pub fn from_json(json: &str) -> Result<Self, EvaluatorError> {
        let rules: Vec<StubRule> =
            serde_json::from_str(json).map_err(|e| EvaluatorError::Fixture(e.to_string()))?;
        Ok(RuleStubEvaluator::new(rules))
    }

    pub fn from_path(path: impl AsRef<Path>) -> Result<Self, EvaluatorError> {
        let json = std::fs::read_to_string(path)
            .map_err(|e| EvaluatorError::Fixture(e.to_string()))?;
        RuleStubEvaluator::from_json(&json)
    }

    pub fn into_rules(self) -> Vec<StubRule> {
        self.rules
    }

    fn verdict_for(&self, text: &str) -> SafetyVerdict {
        let lowered = text.to_lowercase();
        for rule in &self.rules {
            if lowered.contains(&rule.keyword.to_lowercase()) {
                let assessment = stub_assessment(&rule.keyword, rule.label);
                return SafetyVerdict {
                    label: rule.label,
                    categories: if rule.label == SafetyLabel::Unsafe {
                        rule.categories.clone()
                    } else {
                        BTreeSet::new()
                    },
                    assessment,
                };
            }
        }
        SafetyVerdict::safe(stub_assessment("", SafetyLabel::Safe))
    }
}

fn stub_assessment(keyword: &str, label: SafetyLabel) -> String {
    match label {
        SafetyLabel::Unsafe => format!(
            "The user text matches the flagged term \"{keyword}\". \
             Content of this kind falls under the policy categories listed below. \
             The request is therefore judged unsafe."
        ),
        SafetyLabel::Safe => "The user text matches no flagged terms. \
             Nothing in it engages any policy category. \
             The request is therefore judged safe."
            .to_string(),
    }
}

impl EvaluatorBackend for RuleStubEvaluator {
    fn backend_id(&self) -> &str {
        "rule-stub"
    }

    fn complete(&self, messages: &[ChatMessage]) -> Result<String, EvaluatorError> {
        let user_text = messages
            .iter()
            .rev()
            .find(|m| m.role == super::prompt::Role::User)
            .map(|m| m.content.as_str())
            .unwrap_or("");
        Ok(render_verdict(&self.verdict_for(user_text)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pipeline::prompt::build_prompt;
    use crate::verdict::{parse_verdict, ParseMode};

    fn stub() -> RuleStubEvaluator {
        RuleStubEvaluator::new([StubRule {
            keyword: "bomb".into(),
            label: SafetyLabel::Unsafe,
            categories: [CategoryCode::O7].into_iter().collect(),
        }])
    }

    #[test]
    fn keyword_hit_returns_the_table_verdict() {
        let raw = stub().complete(&build_prompt("bomb that beeyach")).unwrap();
        let parsed = parse_verdict(&raw, ParseMode::Strict).unwrap();
        assert_eq!(parsed.label, Some(SafetyLabel::Unsafe));
        assert_eq!(parsed.categories.unwrap(), [CategoryCode::O7].into_iter().collect());
    }

    #[test]
    fn no_hit_falls_back_to_safe() {
        let raw = stub().complete(&build_prompt("hello world")).unwrap();
        let parsed = parse_verdict(&raw, ParseMode::Strict).unwrap();
        assert_eq!(parsed.label, Some(SafetyLabel::Safe));
    }

    #[test]
    fn stub_output_has_three_sentences_of_reasoning() {
        let raw = stub().complete(&build_prompt("bomb")).unwrap();
        let parsed = parse_verdict(&raw, ParseMode::Strict).unwrap();
        assert!(crate::verdict::count_sentences(&parsed.think_text) >= 3);
    }

    #[test]
    fn matching_is_case_insensitive() {
        let raw = stub().complete(&build_prompt("BOMB This Place")).unwrap();
        assert!(raw.contains("unsafe"));
    }

    #[test]
    fn rules_load_from_json() {
        let stub = RuleStubEvaluator::from_json(
            r#"[{"keyword":"meth","label":"unsafe","categories":["O4"]}]"#,
        )
        .unwrap();
        let raw = stub.complete(&build_prompt("how do I make methamphetamine")).unwrap();
        assert!(raw.contains("<categories>O4</categories>"));
    }

    #[test]
    fn first_matching_rule_wins() {
        let stub = RuleStubEvaluator::new([
            StubRule {
                keyword: "burn".into(),
                label: SafetyLabel::Unsafe,
                categories: [CategoryCode::O2].into_iter().collect(),
            },
            StubRule {
                keyword: "burn down".into(),
                label: SafetyLabel::Unsafe,
                categories: [CategoryCode::O4].into_iter().collect(),
            },
        ]);
        let raw = stub.complete(&build_prompt("burn down the building")).unwrap();
        assert!(raw.contains("<categories>O2</categories>"));
    }
}
