//! Backend-pluggable multilingual content moderation.
//!
//! The library implements a three-module guard agent — language detection
//! and routing, many-to-English translation, and taxonomy-driven safety
//! evaluation with a strict tagged-output grammar — plus the machinery
//! around it: jury-of-judges label aggregation, structured reward scoring
//! for evaluator outputs, translation quality metrics, and a dataset
//! evaluation harness.
//!
//! Model backends (translators, evaluators, judges) sit behind traits;
//! deterministic stubs ship here so every path can run offline and
//! reproducibly. The companion gateway crate adds remote HTTP backends, the
//! moderation service, and the CLI.
//!
//! Start with the runnable examples:
//!
//! ```bash
//! cargo run -p polyguard --example moderate_text
//! cargo run -p polyguard --example detect_language
//! cargo run -p polyguard --example sandwich_routing
//! cargo run -p polyguard --example reward_scoring
//! cargo run -p polyguard --example jury_vote
//! cargo run -p polyguard --example translation_metrics
//! cargo run -p polyguard --example evaluate_dataset
//! cargo run -p polyguard --example parse_verdicts
//! cargo run -p polyguard --example taxonomy_export
//! ```

pub mod eval;
pub mod jury;
pub mod lang;
pub mod pipeline;
pub mod reward;
pub mod sandwich;
pub mod taxonomy;
pub mod translate;
pub mod verdict;

pub use taxonomy::{CategoryCode, SafetyLabel};
pub use verdict::SafetyVerdict;
