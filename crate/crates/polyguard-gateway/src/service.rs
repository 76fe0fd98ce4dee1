//! The moderation HTTP service: a small fixed JSON endpoint set over the
//! pipeline and the jury fan-out.
//!
//! Endpoints:
//! - `POST /v1/moderate` — run the full agent on `{"text": "..."}`.
//! - `POST /v1/jury`     — fan one item out to the configured judges.
//! - `GET  /v1/health`   — liveness plus configured backend ids.
//! - `GET  /v1/metrics`  — request counters.
//!
//! Requests are processed concurrently; each runs its own pipeline pass on
//! the blocking pool. Nothing serves until the configuration has validated.

use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;
use std::time::Duration;

use axum::extract::rejection::JsonRejection;
use axum::extract::State;
use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use polyguard::lang::RoutePath;
use polyguard::pipeline::{ModerationOptions, ModerationRequest, Pipeline, Stage};
use serde::{Deserialize, Serialize};

use crate::config::{ConfigError, GatewayConfig};
use crate::judges::{jury_item, JudgeBackend, JuryOutcome};
use crate::store::RunStore;

#[derive(Debug, thiserror::Error)]
pub enum ServiceError {
    #[error("config error: {0}")]
    Config(#[from] ConfigError),
    #[error("bind failure on {addr}: {source}")]
    Bind {
        addr: String,
        #[source]
        source: std::io::Error,
    },
    #[error("store error: {0}")]
    Store(#[from] crate::store::StoreError),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

#[derive(Default)]
pub struct Metrics {
    pub requests_total: AtomicU64,
    pub moderate_ok: AtomicU64,
    pub moderate_failed: AtomicU64,
    pub jury_ok: AtomicU64,
    pub jury_flagged: AtomicU64,
    pub bad_requests: AtomicU64,
}

pub struct ServiceState {
    pipeline: Pipeline,
    judges: Vec<Arc<dyn JudgeBackend>>,
    judge_priority: Vec<String>,
    unsafe_threshold: usize,
    judge_timeout: Duration,
    store: Option<Arc<RunStore>>,
    metrics: Metrics,
    request_counter: AtomicU64,
    evaluator_id: String,
    translator_id: String,
}

impl ServiceState {
    pub fn from_config(config: &GatewayConfig) -> Result<ServiceState, ServiceError> {
        config.validate()?;
        let pipeline = config.build_pipeline()?;
        let judges = config.build_judges()?;
        let store = match &config.persistence.dir {
            Some(dir) => Some(Arc::new(RunStore::open(dir)?)),
            None => None,
        };
        let evaluator_id = config.build_evaluator()?.backend_id().to_string();
        let translator_id = config.build_translator()?.backend_id().to_string();
        Ok(ServiceState {
            pipeline,
            judges,
            judge_priority: config.jury.judge_priority.clone(),
            unsafe_threshold: config.jury.unsafe_threshold,
            judge_timeout: Duration::from_secs(config.jury.judge_timeout_secs),
            store,
            metrics: Metrics::default(),
            request_counter: AtomicU64::new(0),
            evaluator_id,
            translator_id,
        })
    }

    fn next_request_id(&self) -> String {
        format!("req-{}", self.request_counter.fetch_add(1, Ordering::SeqCst))
    }
}

// ---------------------------------------------------------------------------
// Wire types
// ---------------------------------------------------------------------------

#[derive(Debug, Deserialize)]
pub struct ModerateBody {
    pub text: String,
    #[serde(default)]
    pub request_id: Option<String>,
    #[serde(default)]
    pub force_path: Option<RoutePath>,
    #[serde(default)]
    pub strict_parse: bool,
}

#[derive(Debug, Deserialize)]
pub struct JuryBody {
    pub text: String,
    #[serde(default)]
    pub item_id: Option<String>,
}

#[derive(Debug, Serialize)]
struct ErrorBody {
    error: ErrorDetail,
}

#[derive(Debug, Serialize)]
struct ErrorDetail {
    code: String,
    detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    stage: Option<Stage>,
}

fn error_response(status: StatusCode, code: &str, detail: String, stage: Option<Stage>) -> Response {
    (
        status,
        Json(ErrorBody {
            error: ErrorDetail { code: code.to_string(), detail, stage },
        }),
    )
        .into_response()
}

// ---------------------------------------------------------------------------
// Handlers
// ---------------------------------------------------------------------------

async fn moderate_handler(
    State(state): State<Arc<ServiceState>>,
    body: Result<Json<ModerateBody>, JsonRejection>,
) -> Response {
    state.metrics.requests_total.fetch_add(1, Ordering::Relaxed);
    let Json(body) = match body {
        Ok(body) => body,
        Err(rejection) => {
            state.metrics.bad_requests.fetch_add(1, Ordering::Relaxed);
            return error_response(
                StatusCode::BAD_REQUEST,
                "bad_request",
                rejection.body_text(),
                None,
            );
        }
    };

    let request = ModerationRequest {
        request_id: body.request_id.unwrap_or_else(|| state.next_request_id()),
        text: body.text,
        options: ModerationOptions {
            force_path: body.force_path,
            strict_parse: body.strict_parse,
        },
    };

    let worker_state = Arc::clone(&state);
    let outcome = tokio::task::spawn_blocking(move || worker_state.pipeline.moderate(&request))
        .await
        .expect("moderation task never panics");

    match outcome {
        Ok(response) => {
            state.metrics.moderate_ok.fetch_add(1, Ordering::Relaxed);
            if let Some(store) = &state.store {
                let _ = store.append("moderation", &response);
            }
            Json(response).into_response()
        }
        Err(failure) => {
            state.metrics.moderate_failed.fetch_add(1, Ordering::Relaxed);
            let status = match failure.stage {
                Stage::Routing => StatusCode::BAD_REQUEST,
                Stage::Translation | Stage::Evaluation => StatusCode::BAD_GATEWAY,
            };
            error_response(status, "moderation_failed", failure.detail.clone(), Some(failure.stage))
        }
    }
}

async fn jury_handler(
    State(state): State<Arc<ServiceState>>,
    body: Result<Json<JuryBody>, JsonRejection>,
) -> Response {
    state.metrics.requests_total.fetch_add(1, Ordering::Relaxed);
    let Json(body) = match body {
        Ok(body) => body,
        Err(rejection) => {
            state.metrics.bad_requests.fetch_add(1, Ordering::Relaxed);
            return error_response(
                StatusCode::BAD_REQUEST,
                "bad_request",
                rejection.body_text(),
                None,
            );
        }
    };
    if state.judges.is_empty() {
        return error_response(
            StatusCode::SERVICE_UNAVAILABLE,
            "jury_unconfigured",
            "no judges configured".to_string(),
            None,
        );
    }

    let item_id = body.item_id.unwrap_or_else(|| state.next_request_id());
    let worker_state = Arc::clone(&state);
    let outcome: JuryOutcome = tokio::task::spawn_blocking(move || {
        jury_item(
            &worker_state.judges,
            &item_id,
            &body.text,
            worker_state.unsafe_threshold,
            &worker_state.judge_priority,
            worker_state.judge_timeout,
        )
    })
    .await
    .expect("jury task never panics");

    if outcome.verdict.is_some() {
        state.metrics.jury_ok.fetch_add(1, Ordering::Relaxed);
    } else {
        state.metrics.jury_flagged.fetch_add(1, Ordering::Relaxed);
    }
    if let Some(store) = &state.store {
        for opinion in &outcome.opinions {
            let _ = store.append("jury_opinion", opinion);
        }
        let _ = store.append("jury_verdict", &outcome);
    }
    Json(outcome).into_response()
}

async fn health_handler(State(state): State<Arc<ServiceState>>) -> Response {
    let judges: Vec<&str> = state.judges.iter().map(|j| j.judge_id()).collect();
    Json(serde_json::json!({
        "status": "ok",
        "backends": {
            "evaluator": state.evaluator_id,
            "translator": state.translator_id,
            "judges": judges,
        }
    }))
    .into_response()
}

async fn metrics_handler(State(state): State<Arc<ServiceState>>) -> Response {
    let m = &state.metrics;
    Json(serde_json::json!({
        "requests_total": m.requests_total.load(Ordering::Relaxed),
        "moderate_ok": m.moderate_ok.load(Ordering::Relaxed),
        "moderate_failed": m.moderate_failed.load(Ordering::Relaxed),
        "jury_ok": m.jury_ok.load(Ordering::Relaxed),
        "jury_flagged": m.jury_flagged.load(Ordering::Relaxed),
        "bad_requests": m.bad_requests.load(Ordering::Relaxed),
    }))
    .into_response()
}

// ---------------------------------------------------------------------------
// Router and server
// ---------------------------------------------------------------------------

pub fn router(state: Arc<ServiceState>) -> Router {
    Router::new()
        .route("/v1/moderate", post(moderate_handler))
        .route("/v1/jury", post(jury_handler))
        .route("/v1/health", get(health_handler))
        .route("/v1/metrics", get(metrics_handler))
        .with_state(state)
}

/// Serves on an already-bound listener until `shutdown` resolves; in-flight
/// requests drain before the future completes.
pub async fn run_on_listener(
    listener: tokio::net::TcpListener,
    state: Arc<ServiceState>,
    shutdown: impl std::future::Future<Output = ()> + Send + 'static,
) -> Result<(), ServiceError> {
    axum::serve(listener, router(state))
        .with_graceful_shutdown(shutdown)
        .await?;
    Ok(())
}

/// Binds the configured address and serves until interrupted.
pub async fn serve(config: &GatewayConfig) -> Result<(), ServiceError> {
    let state = Arc::new(ServiceState::from_config(config)?);
    let listener = tokio::net::TcpListener::bind(&config.service.bind)
        .await
        .map_err(|source| ServiceError::Bind { addr: config.service.bind.clone(), source })?;
    tracing::info!(addr = %config.service.bind, "moderation service listening");
    run_on_listener(listener, state, async {
        let _ = tokio::signal::ctrl_c().await;
        tracing::info!("shutdown signal received; draining in-flight requests");
    })
    .await
}
