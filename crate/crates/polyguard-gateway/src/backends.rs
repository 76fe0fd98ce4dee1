//! Remote backend adapters implementing the library's translation and
//! evaluator traits over HTTP.
//!
//! Wire contracts:
//! - Translation: `POST {url}` with `{"source_language": "...", "text": "..."}`,
//!   response `{"english_text": "..."}`.
//! - Chat evaluator: `POST {url}` with `{"model", "messages": [{role, content}],
//!   "temperature", "max_tokens"}`, response carrying the assistant message
//!   text at `choices[0].message.content`.

use std::time::Duration;

use polyguard::pipeline::{ChatMessage, EvaluatorBackend, EvaluatorError};
use polyguard::translate::{BackendCapabilities, TranslationBackend, TranslationError};
use serde::{Deserialize, Serialize};
use ureq::Agent;

use crate::http::{agent, with_retries};

// ---------------------------------------------------------------------------
// Translation over HTTP
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct TranslateRequest<'a> {
    source_language: &'a str,
    text: &'a str,
}

#[derive(Deserialize)]
struct TranslateResponse {
    english_text: String,
}

pub struct HttpTranslationBackend {
    url: String,
    agent: Agent,
    retries: u32,
}

impl HttpTranslationBackend {
    pub fn new(url: String, timeout: Duration, retries: u32) -> Self {
        HttpTranslationBackend { url, agent: agent(timeout), retries }
    }
}

impl TranslationBackend for HttpTranslationBackend {
    fn backend_id(&self) -> &str {
        "http-translation"
    }

    fn capabilities(&self) -> BackendCapabilities {
        BackendCapabilities {
            concurrency_limit: 4,
            // A remote model's determinism is its own business.
            deterministic: false,
            ..Default::default()
        }
    }

    fn translate_segment(&self, text: &str, source_language: &str) -> Result<String, TranslationError> {
        let response = with_retries(self.retries, || {
            self.agent
                .post(&self.url)
                .send_json(TranslateRequest { source_language, text })?
                .body_mut()
                .read_json::<TranslateResponse>()
        })
        .map_err(|e| TranslationError::BackendUnavailable(e.to_string()))?;
        Ok(response.english_text)
    }
}

// ---------------------------------------------------------------------------
// Chat-completion evaluator over HTTP
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct ChatRequest<'a> {
    model: &'a str,
    messages: &'a [ChatMessage],
    temperature: f64,
    max_tokens: u32,
}

#[derive(Deserialize)]
struct ChatResponse {
    choices: Vec<ChatChoice>,
}

#[derive(Deserialize)]
struct ChatChoice {
    message: ChatResponseMessage,
}

#[derive(Deserialize)]
struct ChatResponseMessage {
    content: String,
}

pub struct ChatEndpointEvaluator {
    url: String,
    model: String,
    temperature: f64,
    max_completion_tokens: u32,
    agent: Agent,
    retries: u32,
}

impl ChatEndpointEvaluator {
    pub fn new(
        url: String,
        model: String,
        temperature: f64,
        max_completion_tokens: u32,
        timeout: Duration,
        retries: u32,
    ) -> Self {
        ChatEndpointEvaluator {
            url,
            model,
            temperature,
            max_completion_tokens,
            agent: agent(timeout),
            retries,
        }
    }

    pub fn complete_messages(&self, messages: &[ChatMessage]) -> Result<String, EvaluatorError> {
        let response = with_retries(self.retries, || {
            self.agent
                .post(&self.url)
                .send_json(ChatRequest {
                    model: &self.model,
                    messages,
                    temperature: self.temperature,
                    max_tokens: self.max_completion_tokens,
                })?
                .body_mut()
                .read_json::<ChatResponse>()
        })
        .map_err(|e| EvaluatorError::BackendUnavailable(e.to_string()))?;
        response
            .choices
            .into_iter()
            .next()
            .map(|c| c.message.content)
            .ok_or_else(|| EvaluatorError::BackendUnavailable("empty choices array".into()))
    }
}

impl EvaluatorBackend for ChatEndpointEvaluator {
    fn backend_id(&self) -> &str {
        "chat-endpoint"
    }

    fn complete(&self, messages: &[ChatMessage]) -> Result<String, EvaluatorError> {
        self.complete_messages(messages)
    }
}
