//! Shared harness for gateway integration tests: fixture files, stub
//! configs, and an in-process service runner.

// Each test target compiles this module separately and uses a subset of it.
#![allow(dead_code)]

use std::net::SocketAddr;
use std::path::Path;
use std::sync::Arc;

use polyguard_gateway::config::GatewayConfig;
use polyguard_gateway::service::{run_on_listener, ServiceState};
use tokio::runtime::Runtime;

/// Writes the sandwich dictionary and rule-stub fixtures into `dir` and
/// returns a config TOML that wires them up with five keyword-stub judges
/// (one deliberately slow).
pub fn stub_config_toml(dir: &Path, persistence: bool, slow_judge_ms: u64) -> String {
    let dictionary = serde_json::to_string_pretty(&polyguard::sandwich::dictionary_entries()).unwrap();
    let rules = serde_json::to_string_pretty(&polyguard::sandwich::stub_rules()).unwrap();
    std::fs::write(dir.join("dictionary.json"), dictionary).unwrap();
    std::fs::write(dir.join("rules.json"), rules).unwrap();

    let persistence_section = if persistence {
        format!("[persistence]\ndir = {:?}\n", dir.join("runs").to_string_lossy())
    } else {
        String::new()
    };

    format!(
        r#"
[service]
bind = "127.0.0.1:0"

{persistence_section}

[evaluator]
kind = "rule_stub"
rules_file = {rules_file:?}

[translator]
kind = "dictionary"
entries_file = {entries_file:?}

[jury]
unsafe_threshold = 2
judge_priority = ["judge-a", "judge-b", "judge-c"]
judge_timeout_secs = 1

[[jury.judges]]
kind = "keyword_stub"
id = "judge-a"
rules_file = {rules_file:?}

[[jury.judges]]
kind = "keyword_stub"
id = "judge-b"
rules_file = {rules_file:?}

[[jury.judges]]
kind = "keyword_stub"
id = "judge-c"

[[jury.judges]]
kind = "keyword_stub"
id = "judge-d"

[[jury.judges]]
kind = "keyword_stub"
id = "judge-slow"
rules_file = {rules_file:?}
delay_ms = {slow_judge_ms}
"#,
        rules_file = dir.join("rules.json").to_string_lossy(),
        entries_file = dir.join("dictionary.json").to_string_lossy(),
    )
}

pub fn load_config(dir: &Path, toml_text: &str) -> GatewayConfig {
    let path = dir.join("polyguard.toml");
    std::fs::write(&path, toml_text).unwrap();
    GatewayConfig::load(&path).unwrap()
}

/// A service running in-process on an ephemeral port. Dropping it shuts the
/// server down and joins the task.
pub struct TestService {
    pub addr: SocketAddr,
    runtime: Option<Runtime>,
    shutdown: Option<tokio::sync::oneshot::Sender<()>>,
    handle: Option<tokio::task::JoinHandle<()>>,
}

impl TestService {
    pub fn start(config: &GatewayConfig) -> TestService {
        let runtime = Runtime::new().unwrap();
        let state = Arc::new(ServiceState::from_config(config).unwrap());
        let listener = runtime
            .block_on(tokio::net::TcpListener::bind("127.0.0.1:0"))
            .unwrap();
        let addr = listener.local_addr().unwrap();
        let (shutdown_tx, shutdown_rx) = tokio::sync::oneshot::channel::<()>();
        let handle = runtime.spawn(async move {
            run_on_listener(listener, state, async {
                let _ = shutdown_rx.await;
            })
            .await
            .expect("service runs");
        });
        TestService {
            addr,
            runtime: Some(runtime),
            shutdown: Some(shutdown_tx),
            handle: Some(handle),
        }
    }

    pub fn url(&self, path: &str) -> String {
        format!("http://{}{path}", self.addr)
    }
}

impl Drop for TestService {
    fn drop(&mut self) {
        if let Some(shutdown) = self.shutdown.take() {
            let _ = shutdown.send(());
        }
        if let (Some(runtime), Some(handle)) = (self.runtime.take(), self.handle.take()) {
            let _ = runtime.block_on(handle);
            runtime.shutdown_background();
        }
    }
}
