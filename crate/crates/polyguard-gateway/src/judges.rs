//! Judge backends and the concurrent jury fan-out.
//!
//! Each item fans out to every configured judge on its own thread; judges
//! that miss the deadline (or fail) abstain rather than defaulting to a
//! label, and the item is flagged when the remaining opinions cannot reach
//! the vote threshold.

use std::sync::mpsc;
use std::sync::Arc;
use std::time::Duration;

use polyguard::jury::{
    aggregate, map_external_labels, select_assessment, ExternalJudgeOutput, JudgeOpinion,
    JuryError, JuryVerdict, MappingTable,
};
use polyguard::pipeline::{build_prompt, EvaluatorBackend, StubRule};
use polyguard::taxonomy::SafetyLabel;
use polyguard::verdict::{parse_verdict, ParseMode};
use serde::{Deserialize, Serialize};
use ureq::Agent;

use crate::backends::ChatEndpointEvaluator;
use crate::http::{agent, with_retries};

#[derive(Debug, thiserror::Error)]
pub enum JudgeError {
    #[error("judge backend unavailable: {0}")]
    BackendUnavailable(String),
    #[error("judge output unparseable: {0:?}")]
    Unparseable(String),
    #[error(transparent)]
    Mapping(#[from] JuryError),
}

/// A single safety judge.
pub trait JudgeBackend: Send + Sync {
    fn judge_id(&self) -> &str;
    fn judge(&self, text: &str) -> Result<JudgeOpinion, JudgeError>;
}

// ---------------------------------------------------------------------------
// Deterministic stub judge
// ---------------------------------------------------------------------------

/// Keyword-table judge; `delay` simulates a slow backend for timeout tests.
pub struct KeywordStubJudge {
    id: String,
    rules: Vec<StubRule>,
    delay: Duration,
}

impl KeywordStubJudge {
    pub fn new(id: String, rules: Vec<StubRule>, delay: Duration) -> Self {
        KeywordStubJudge { id, rules, delay }
    }
}

impl JudgeBackend for KeywordStubJudge {
    fn judge_id(&self) -> &str {
        &self.id
    }

    fn judge(&self, text: &str) -> Result<JudgeOpinion, JudgeError> {
        if !self.delay.is_zero() {
            std::thread::sleep(self.delay);
        }
        let lowered = text.to_lowercase();
        for rule in &self.rules {
            if lowered.contains(&rule.keyword.to_lowercase()) {
                return Ok(JudgeOpinion::new(
                    self.id.clone(),
                    rule.label,
                    rule.categories.iter().copied(),
                    format!("{} flags the term \"{}\".", self.id, rule.keyword),
                ));
            }
        }
        Ok(JudgeOpinion::new(
            self.id.clone(),
            SafetyLabel::Safe,
            [],
            format!("{} found nothing objectionable.", self.id),
        ))
    }
}

// ---------------------------------------------------------------------------
// Chat-model judge
// ---------------------------------------------------------------------------

/// Prompts a chat model like the evaluator and parses its tagged output
/// leniently into an opinion.
pub struct ChatJudge {
    id: String,
    endpoint: ChatEndpointEvaluator,
}

impl ChatJudge {
    pub fn new(id: String, endpoint: ChatEndpointEvaluator) -> Self {
        ChatJudge { id, endpoint }
    }
}

impl JudgeBackend for ChatJudge {
    fn judge_id(&self) -> &str {
        &self.id
    }

    fn judge(&self, text: &str) -> Result<JudgeOpinion, JudgeError> {
        let raw = self
            .endpoint
            .complete(&build_prompt(text))
            .map_err(|e| JudgeError::BackendUnavailable(e.to_string()))?;
        let parsed = parse_verdict(&raw, ParseMode::Lenient).expect("lenient never fails");
        let verdict = parsed
            .into_verdict()
            .ok_or_else(|| JudgeError::Unparseable(raw.clone()))?;
        Ok(JudgeOpinion::new(
            self.id.clone(),
            verdict.label,
            verdict.categories,
            verdict.assessment,
        ))
    }
}

// ---------------------------------------------------------------------------
// Moderation-API judge
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct ModerationRequestBody<'a> {
    input: &'a str,
}

/// Calls a flags-style moderation endpoint (`POST {url}` with
/// `{"input": text}` returning `{flagged, flags, assessment}`) and maps the
/// result through its mapping table.
pub struct ModerationApiJudge {
    id: String,
    url: String,
    table: MappingTable,
    agent: Agent,
    retries: u32,
}

impl ModerationApiJudge {
    pub fn new(id: String, url: String, table: MappingTable, timeout: Duration, retries: u32) -> Self {
        ModerationApiJudge { id, url, table, agent: agent(timeout), retries }
    }
}

impl JudgeBackend for ModerationApiJudge {
    fn judge_id(&self) -> &str {
        &self.id
    }

    fn judge(&self, text: &str) -> Result<JudgeOpinion, JudgeError> {
        let external = with_retries(self.retries, || {
            self.agent
                .post(&self.url)
                .send_json(ModerationRequestBody { input: text })?
                .body_mut()
                .read_json::<ExternalJudgeOutput>()
        })
        .map_err(|e| JudgeError::BackendUnavailable(e.to_string()))?;
        Ok(map_external_labels(&external, &self.table, &self.id)?)
    }
}

// ---------------------------------------------------------------------------
// Fan-out
// ---------------------------------------------------------------------------

/// Why a judge contributed no opinion.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Abstention {
    pub judge_id: String,
    pub reason: String,
}

/// The opinions gathered for one item, plus the judges that abstained.
#[derive(Debug, Clone)]
pub struct FanOutResult {
    pub opinions: Vec<JudgeOpinion>,
    pub abstentions: Vec<Abstention>,
}

/// Sends `text` to every judge concurrently and gathers opinions until the
/// deadline. A judge that errors or misses the deadline abstains.
pub fn collect_opinions(
    judges: &[Arc<dyn JudgeBackend>],
    text: &str,
    timeout: Duration,
) -> FanOutResult {
    let (sender, receiver) = mpsc::channel::<(usize, Result<JudgeOpinion, String>)>();
    for (index, judge) in judges.iter().enumerate() {
        let judge = Arc::clone(judge);
        let sender = sender.clone();
        let text = text.to_string();
        std::thread::spawn(move || {
            let outcome = judge.judge(&text).map_err(|e| e.to_string());
            let _ = sender.send((index, outcome));
        });
    }
    drop(sender);

    let deadline = std::time::Instant::now() + timeout;
    let mut slots: Vec<Option<Result<JudgeOpinion, String>>> = vec![None; judges.len()];
    let mut received = 0usize;
    while received < judges.len() {
        let now = std::time::Instant::now();
        if now >= deadline {
            break;
        }
        match receiver.recv_timeout(deadline - now) {
            Ok((index, outcome)) => {
                slots[index] = Some(outcome);
                received += 1;
            }
            Err(_) => break,
        }
    }

    let mut opinions = Vec::new();
    let mut abstentions = Vec::new();
    for (index, slot) in slots.into_iter().enumerate() {
        match slot {
            Some(Ok(opinion)) => opinions.push(opinion),
            Some(Err(reason)) => abstentions.push(Abstention {
                judge_id: judges[index].judge_id().to_string(),
                reason,
            }),
            None => abstentions.push(Abstention {
                judge_id: judges[index].judge_id().to_string(),
                reason: "timed out".to_string(),
            }),
        }
    }
    FanOutResult { opinions, abstentions }
}

/// One jury outcome for an item: either a verdict (with any abstentions
/// recorded) or a flag that too few opinions arrived.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct JuryOutcome {
    pub item_id: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<JuryVerdict>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub abstentions: Vec<Abstention>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub flagged: Option<String>,
    pub opinions: Vec<JudgeOpinion>,
}

/// Runs the full jury for one item: fan out, aggregate, pick an assessment.
pub fn jury_item(
    judges: &[Arc<dyn JudgeBackend>],
    item_id: &str,
    text: &str,
    unsafe_threshold: usize,
    priority: &[String],
    timeout: Duration,
) -> JuryOutcome {
    let fan_out = collect_opinions(judges, text, timeout);
    match aggregate(&fan_out.opinions, unsafe_threshold) {
        Ok(mut verdict) => {
            if let Ok(selected) = select_assessment(&fan_out.opinions, verdict.label, priority) {
                verdict.assessment = selected.text;
            }
            JuryOutcome {
                item_id: item_id.to_string(),
                verdict: Some(verdict),
                abstentions: fan_out.abstentions,
                flagged: None,
                opinions: fan_out.opinions,
            }
        }
        Err(error) => JuryOutcome {
            item_id: item_id.to_string(),
            verdict: None,
            abstentions: fan_out.abstentions,
            flagged: Some(error.to_string()),
            opinions: fan_out.opinions,
        },
    }
}
