//! Gateway configuration: TOML file with documented environment-variable
//! overrides (`POLYGUARD_*`), validated fail-fast before anything serves.
//!
//! See `polyguard.example.toml` at the repository root for a complete
//! annotated example.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::sync::Arc;
use std::time::Duration;

use polyguard::jury::{MappingTable, UnsafeRule};
use polyguard::lang::{LanguageRouter, RouterConfig};
use polyguard::pipeline::{EvaluatorBackend, Pipeline, RuleStubEvaluator, StubRule};
use polyguard::taxonomy::CategoryCode;
use polyguard::translate::{DictionaryBackend, IdentityBackend, TranslationBackend};
use serde::{Deserialize, Serialize};

use crate::backends::{ChatEndpointEvaluator, HttpTranslationBackend};
use crate::judges::{ChatJudge, JudgeBackend, KeywordStubJudge, ModerationApiJudge};

#[derive(Debug, thiserror::Error)]
pub enum ConfigError {
    #[error("cannot read config {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("config parse error: {0}")]
    Parse(#[from] toml::de::Error),
    #[error("invalid config: {0}")]
    Invalid(String),
}

fn default_bind() -> String {
    "127.0.0.1:8787".to_string()
}

fn default_unsafe_threshold() -> usize {
    2
}

fn default_evaluator_timeout() -> u64 {
    30
}

fn default_translator_timeout() -> u64 {
    15
}

fn default_judge_timeout() -> u64 {
    60
}

fn default_retries() -> u32 {
    1
}

fn default_temperature() -> f64 {
    0.0
}

fn default_max_completion_tokens() -> u32 {
    1024
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GatewayConfig {
    #[serde(default)]
    pub service: ServiceConfig,
    #[serde(default)]
    pub persistence: PersistenceConfig,
    #[serde(default)]
    pub routing: RoutingConfig,
    #[serde(default)]
    pub evaluator: EvaluatorConfig,
    #[serde(default)]
    pub translator: TranslatorConfig,
    #[serde(default)]
    pub jury: JuryConfig,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ServiceConfig {
    #[serde(default = "default_bind")]
    pub bind: String,
}

impl Default for ServiceConfig {
    fn default() -> Self {
        ServiceConfig { bind: default_bind() }
    }
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PersistenceConfig {
    /// Directory for append-only run logs; persistence is off when unset.
    #[serde(default)]
    pub dir: Option<PathBuf>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RoutingConfig {
    #[serde(default = "RoutingConfig::default_confidence_floor")]
    pub confidence_floor: f64,
    #[serde(default = "RoutingConfig::default_short_segment_chars")]
    pub short_segment_chars: usize,
    #[serde(default = "RoutingConfig::default_long_line_chars")]
    pub long_line_chars: usize,
}

impl RoutingConfig {
    fn default_confidence_floor() -> f64 {
        RouterConfig::default().confidence_floor
    }
    fn default_short_segment_chars() -> usize {
        RouterConfig::default().short_segment_chars
    }
    fn default_long_line_chars() -> usize {
        RouterConfig::default().long_line_chars
    }

    pub fn to_router_config(&self) -> RouterConfig {
        RouterConfig {
            confidence_floor: self.confidence_floor,
            short_segment_chars: self.short_segment_chars,
            long_line_chars: self.long_line_chars,
        }
    }
}

impl Default for RoutingConfig {
    fn default() -> Self {
        RoutingConfig {
            confidence_floor: Self::default_confidence_floor(),
            short_segment_chars: Self::default_short_segment_chars(),
            long_line_chars: Self::default_long_line_chars(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum EvaluatorConfig {
    /// Deterministic keyword-table evaluator.
    RuleStub {
        /// Inline rules.
        #[serde(default)]
        rules: Vec<StubRule>,
        /// Or a JSON fixture file of `{keyword, label, categories[]}`.
        #[serde(default)]
        rules_file: Option<PathBuf>,
    },
    /// Remote chat-completion endpoint.
    ChatEndpoint {
        url: String,
        model: String,
        #[serde(default = "default_temperature")]
        temperature: f64,
        #[serde(default = "default_max_completion_tokens")]
        max_completion_tokens: u32,
        #[serde(default = "default_evaluator_timeout")]
        timeout_secs: u64,
        #[serde(default = "default_retries")]
        retries: u32,
    },
}

impl Default for EvaluatorConfig {
    fn default() -> Self {
        EvaluatorConfig::RuleStub { rules: Vec::new(), rules_file: None }
    }
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum TranslatorConfig {
    /// Echo stub.
    #[default]
    Identity,
    /// Fixture-table stub.
    Dictionary {
        #[serde(default)]
        entries_file: Option<PathBuf>,
    },
    /// Remote translation endpoint.
    Http {
        url: String,
        #[serde(default = "default_translator_timeout")]
        timeout_secs: u64,
        #[serde(default = "default_retries")]
        retries: u32,
    },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JuryConfig {
    #[serde(default = "default_unsafe_threshold")]
    pub unsafe_threshold: usize,
    /// Judges whose assessments are preferred, most preferred first.
    #[serde(default)]
    pub judge_priority: Vec<String>,
    #[serde(default = "default_judge_timeout")]
    pub judge_timeout_secs: u64,
    #[serde(default)]
    pub judges: Vec<JudgeConfig>,
    /// Mapping tables keyed by source taxonomy id.
    #[serde(default)]
    pub mapping_tables: BTreeMap<String, MappingTableConfig>,
}

impl Default for JuryConfig {
    fn default() -> Self {
        JuryConfig {
            unsafe_threshold: default_unsafe_threshold(),
            judge_priority: Vec::new(),
            judge_timeout_secs: default_judge_timeout(),
            judges: Vec::new(),
            mapping_tables: BTreeMap::new(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum JudgeConfig {
    /// Deterministic keyword judge; `delay_ms` simulates slow judges.
    KeywordStub {
        id: String,
        #[serde(default)]
        rules: Vec<StubRule>,
        #[serde(default)]
        rules_file: Option<PathBuf>,
        #[serde(default)]
        delay_ms: u64,
    },
    /// A chat model prompted like the evaluator; output is parsed leniently.
    ChatEndpoint {
        id: String,
        url: String,
        model: String,
        #[serde(default = "default_temperature")]
        temperature: f64,
        #[serde(default = "default_max_completion_tokens")]
        max_completion_tokens: u32,
        #[serde(default = "default_judge_timeout")]
        timeout_secs: u64,
        #[serde(default = "default_retries")]
        retries: u32,
    },
    /// A moderation-API-style judge returning category flags, normalized
    /// through a mapping table.
    ModerationApi {
        id: String,
        url: String,
        /// Key into `[jury.mapping_tables]`.
        mapping_table: String,
        #[serde(default = "default_judge_timeout")]
        timeout_secs: u64,
        #[serde(default = "default_retries")]
        retries: u32,
    },
}

impl JudgeConfig {
    pub fn id(&self) -> &str {
        match self {
            JudgeConfig::KeywordStub { id, .. }
            | JudgeConfig::ChatEndpoint { id, .. }
            | JudgeConfig::ModerationApi { id, .. } => id,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MappingTableConfig {
    pub unsafe_rule: UnsafeRule,
    /// External label -> canonical codes ("O1".."O12").
    pub entries: BTreeMap<String, Vec<CategoryCode>>,
}

impl MappingTableConfig {
    pub fn to_table(&self, source_taxonomy_id: &str) -> MappingTable {
        MappingTable {
            source_taxonomy_id: source_taxonomy_id.to_string(),
            entries: self
                .entries
                .iter()
                .map(|(k, v)| (k.clone(), v.iter().copied().collect()))
                .collect(),
            unsafe_rule: self.unsafe_rule.clone(),
        }
    }
}

impl GatewayConfig {
    /// Loads a config file, applies environment overrides, and validates.
    pub fn load(path: impl AsRef<Path>) -> Result<GatewayConfig, ConfigError> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        let mut config: GatewayConfig = toml::from_str(&text)?;
        config.apply_env_overrides();
        config.validate()?;
        Ok(config)
    }

    /// The built-in default: identity translator, empty rule-stub evaluator,
    /// no judges, no persistence.
    pub fn default_validated() -> GatewayConfig {
        let mut config = GatewayConfig::default();
        config.apply_env_overrides();
        config.validate().expect("default config is valid");
        config
    }

    /// Applies `POLYGUARD_*` environment overrides:
    /// `POLYGUARD_SERVICE_BIND`, `POLYGUARD_PERSISTENCE_DIR`,
    /// `POLYGUARD_UNSAFE_THRESHOLD`, `POLYGUARD_JUDGE_TIMEOUT_SECS`.
    pub fn apply_env_overrides(&mut self) {
        if let Ok(bind) = std::env::var("POLYGUARD_SERVICE_BIND") {
            self.service.bind = bind;
        }
        if let Ok(dir) = std::env::var("POLYGUARD_PERSISTENCE_DIR") {
            self.persistence.dir = Some(PathBuf::from(dir));
        }
        if let Ok(threshold) = std::env::var("POLYGUARD_UNSAFE_THRESHOLD") {
            if let Ok(value) = threshold.parse() {
                self.jury.unsafe_threshold = value;
            }
        }
        if let Ok(timeout) = std::env::var("POLYGUARD_JUDGE_TIMEOUT_SECS") {
            if let Ok(value) = timeout.parse() {
                self.jury.judge_timeout_secs = value;
            }
        }
    }

    /// Fail-fast validation: thresholds sane, fixture files readable,
    /// referenced mapping tables resolve, judge ids distinct, jury large
    /// enough for its threshold.
    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.jury.unsafe_threshold == 0 {
            return Err(ConfigError::Invalid("unsafe_threshold must be at least 1".into()));
        }
        if !self.jury.judges.is_empty() && self.jury.judges.len() < self.jury.unsafe_threshold {
            return Err(ConfigError::Invalid(format!(
                "jury mode requires at least {} judges, got {}",
                self.jury.unsafe_threshold,
                self.jury.judges.len()
            )));
        }
        let mut ids = std::collections::BTreeSet::new();
        for judge in &self.jury.judges {
            if !ids.insert(judge.id()) {
                return Err(ConfigError::Invalid(format!("duplicate judge id {:?}", judge.id())));
            }
            if let JudgeConfig::ModerationApi { mapping_table, id, .. } = judge {
                let table = self.jury.mapping_tables.get(mapping_table).ok_or_else(|| {
                    ConfigError::Invalid(format!(
                        "judge {id:?} references unknown mapping table {mapping_table:?}"
                    ))
                })?;
                table
                    .to_table(mapping_table)
                    .validate()
                    .map_err(|e| ConfigError::Invalid(e.to_string()))?;
            }
            if let JudgeConfig::KeywordStub { rules_file: Some(path), id, .. } = judge {
                if !path.exists() {
                    return Err(ConfigError::Invalid(format!(
                        "judge {id:?} rules file {path:?} does not exist"
                    )));
                }
            }
        }
        if let EvaluatorConfig::RuleStub { rules_file: Some(path), .. } = &self.evaluator {
            if !path.exists() {
                return Err(ConfigError::Invalid(format!(
                    "evaluator rules file {path:?} does not exist"
                )));
            }
        }
        if let TranslatorConfig::Dictionary { entries_file: Some(path) } = &self.translator {
            if !path.exists() {
                return Err(ConfigError::Invalid(format!(
                    "dictionary entries file {path:?} does not exist"
                )));
            }
        }
        Ok(())
    }

    pub fn build_evaluator(&self) -> Result<Arc<dyn EvaluatorBackend>, ConfigError> {
        match &self.evaluator {
            EvaluatorConfig::RuleStub { rules, rules_file } => {
                let mut all = rules.clone();
                if let Some(path) = rules_file {
                    let stub = RuleStubEvaluator::from_path(path)
                        .map_err(|e| ConfigError::Invalid(e.to_string()))?;
                    return Ok(Arc::new(if all.is_empty() {
                        stub
                    } else {
                        all.extend(stub.into_rules());
                        RuleStubEvaluator::new(all)
                    }));
                }
                Ok(Arc::new(RuleStubEvaluator::new(all)))
            }
            EvaluatorConfig::ChatEndpoint {
                url,
                model,
                temperature,
                max_completion_tokens,
                timeout_secs,
                retries,
            } => Ok(Arc::new(ChatEndpointEvaluator::new(
                url.clone(),
                model.clone(),
                *temperature,
                *max_completion_tokens,
                Duration::from_secs(*timeout_secs),
                *retries,
            ))),
        }
    }

    pub fn build_translator(&self) -> Result<Arc<dyn TranslationBackend>, ConfigError> {
        match &self.translator {
            TranslatorConfig::Identity => Ok(Arc::new(IdentityBackend)),
            TranslatorConfig::Dictionary { entries_file } => match entries_file {
                Some(path) => Ok(Arc::new(
                    DictionaryBackend::from_path(path)
                        .map_err(|e| ConfigError::Invalid(e.to_string()))?,
                )),
                None => Ok(Arc::new(DictionaryBackend::default())),
            },
            TranslatorConfig::Http { url, timeout_secs, retries } => Ok(Arc::new(
                HttpTranslationBackend::new(url.clone(), Duration::from_secs(*timeout_secs), *retries),
            )),
        }
    }

    pub fn build_pipeline(&self) -> Result<Pipeline, ConfigError> {
        Ok(Pipeline::new(
            LanguageRouter::new(self.routing.to_router_config()),
            self.build_translator()?,
            self.build_evaluator()?,
        ))
    }

    pub fn build_judges(&self) -> Result<Vec<Arc<dyn JudgeBackend>>, ConfigError> {
        let mut judges: Vec<Arc<dyn JudgeBackend>> = Vec::new();
        for judge in &self.jury.judges {
            match judge {
                JudgeConfig::KeywordStub { id, rules, rules_file, delay_ms } => {
                    let mut all = rules.clone();
                    if let Some(path) = rules_file {
                        let stub = RuleStubEvaluator::from_path(path)
                            .map_err(|e| ConfigError::Invalid(e.to_string()))?;
                        all.extend(stub.into_rules());
                    }
                    judges.push(Arc::new(KeywordStubJudge::new(
                        id.clone(),
                        all,
                        Duration::from_millis(*delay_ms),
                    )));
                }
                JudgeConfig::ChatEndpoint {
                    id,
                    url,
                    model,
                    temperature,
                    max_completion_tokens,
                    timeout_secs,
                    retries,
                } => {
                    judges.push(Arc::new(ChatJudge::new(
                        id.clone(),
                        ChatEndpointEvaluator::new(
                            url.clone(),
                            model.clone(),
                            *temperature,
                            *max_completion_tokens,
                            Duration::from_secs(*timeout_secs),
                            *retries,
                        ),
                    )));
                }
                JudgeConfig::ModerationApi { id, url, mapping_table, timeout_secs, retries } => {
                    let table = self
                        .jury
                        .mapping_tables
                        .get(mapping_table)
                        .ok_or_else(|| {
                            ConfigError::Invalid(format!("unknown mapping table {mapping_table:?}"))
                        })?
                        .to_table(mapping_table);
                    judges.push(Arc::new(ModerationApiJudge::new(
                        id.clone(),
                        url.clone(),
                        table,
                        Duration::from_secs(*timeout_secs),
                        *retries,
                    )));
                }
            }
        }
        Ok(judges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_config_is_valid() {
        let config = GatewayConfig::default();
        assert!(config.validate().is_ok());
        assert_eq!(config.jury.unsafe_threshold, 2);
        assert_eq!(config.service.bind, "127.0.0.1:8787");
    }

    #[test]
    fn parses_a_full_document() {
        let text = r#"
[service]
bind = "127.0.0.1:9000"

[persistence]
dir = "/tmp/polyguard-runs"

[routing]
confidence_floor = 0.4

[evaluator]
kind = "rule_stub"
rules = [{ keyword = "bomb", label = "unsafe", categories = ["O7"] }]

[translator]
kind = "identity"

[jury]
unsafe_threshold = 2
judge_priority = ["a", "b"]

[[jury.judges]]
kind = "keyword_stub"
id = "a"

[[jury.judges]]
kind = "keyword_stub"
id = "b"
delay_ms = 5

[[jury.judges]]
kind = "moderation_api"
id = "api"
url = "http://localhost:1/moderate"
mapping_table = "ext"

[jury.mapping_tables.ext]
unsafe_rule = "any_triggered"
entries = { violence = ["O2"], hate = ["O5"] }
"#;
        let config: GatewayConfig = toml::from_str(text).unwrap();
        config.validate().unwrap();
        assert_eq!(config.service.bind, "127.0.0.1:9000");
        assert_eq!(config.jury.judges.len(), 3);
        assert_eq!(config.routing.confidence_floor, 0.4);
        config.build_pipeline().unwrap();
        assert_eq!(config.build_judges().unwrap().len(), 3);
    }

    #[test]
    fn missing_mapping_table_is_fatal() {
        let text = r#"
[[jury.judges]]
kind = "moderation_api"
id = "api"
url = "http://localhost:1/x"
mapping_table = "nope"

[[jury.judges]]
kind = "keyword_stub"
id = "b"
"#;
        let config: GatewayConfig = toml::from_str(text).unwrap();
        let err = config.validate().unwrap_err();
        assert!(err.to_string().contains("unknown mapping table"));
    }

    #[test]
    fn too_small_jury_is_fatal() {
        let text = r#"
[jury]
unsafe_threshold = 3

[[jury.judges]]
kind = "keyword_stub"
id = "only"
"#;
        let config: GatewayConfig = toml::from_str(text).unwrap();
        assert!(config.validate().is_err());
    }

    #[test]
    fn duplicate_judge_ids_are_fatal() {
        let text = r#"
[[jury.judges]]
kind = "keyword_stub"
id = "same"

[[jury.judges]]
kind = "keyword_stub"
id = "same"
"#;
        let config: GatewayConfig = toml::from_str(text).unwrap();
        assert!(config.validate().unwrap_err().to_string().contains("duplicate judge id"));
    }

    #[test]
    fn env_overrides_apply() {
        // Serialized env mutation; this is the only test touching these vars.
        std::env::set_var("POLYGUARD_SERVICE_BIND", "0.0.0.0:1234");
        std::env::set_var("POLYGUARD_UNSAFE_THRESHOLD", "3");
        let mut config = GatewayConfig::default();
        config.apply_env_overrides();
        std::env::remove_var("POLYGUARD_SERVICE_BIND");
        std::env::remove_var("POLYGUARD_UNSAFE_THRESHOLD");
        assert_eq!(config.service.bind, "0.0.0.0:1234");
        assert_eq!(config.jury.unsafe_threshold, 3);
    }
}
