//! The `polyguard` command-line interface.
//!
//! Exit codes: 0 on success, 1 on operational errors, 2 on usage errors.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Parser, Subcommand};
use polyguard::eval::{load_dataset, render_report, run_eval, DatasetFormat, RunOptions, SkipPolicy};
use polyguard::jury::{aggregate, select_assessment, JudgeOpinion};
use polyguard::lang::LanguageRouter;
use polyguard::pipeline::{ModerationOptions, ModerationRequest};
use polyguard::reward::{total_reward, ExpectedVerdict};
use polyguard::taxonomy::{CategoryCode, SafetyLabel};
use polyguard::translate::translation_metrics;
use serde::{Deserialize, Serialize};

use crate::config::GatewayConfig;
use crate::judges::jury_item;
use crate::store::RunStore;

#[derive(Parser)]
#[command(
    name = "polyguard",
    version,
    about = "Multilingual content-moderation gateway: language routing, translation bridging, safety evaluation, jury voting, reward scoring, and dataset evaluation"
)]
struct Cli {
    /// Gateway config file (TOML). Without it, built-in stub backends are
    /// used (identity translator, default-safe evaluator, no judges).
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Moderate one text or every line of a file through the full agent
    Moderate {
        /// The text to moderate.
        #[arg(long, conflicts_with = "file")]
        text: Option<String>,
        /// A file with one text per line.
        #[arg(long)]
        file: Option<PathBuf>,
        /// Parse evaluator output strictly.
        #[arg(long)]
        strict: bool,
    },
    /// Detect languages per segment and print the routing decision
    Detect {
        #[arg(long, conflicts_with = "file")]
        text: Option<String>,
        #[arg(long)]
        file: Option<PathBuf>,
    },
    /// Score candidate/reference translation pairs with BLEU, chrF and TER
    TranslateEval {
        /// Line-delimited JSON: {"candidate", "reference", "language"}.
        #[arg(long)]
        input: PathBuf,
        /// Also write the table to this file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Score raw model outputs against expected verdicts
    RewardScore {
        /// Line-delimited JSON:
        /// {"id", "raw_output", "expected_label", "expected_categories"}.
        #[arg(long)]
        input: PathBuf,
        /// Write result records here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Aggregate pre-collected judge opinions, or fan items out to the
    /// configured judges
    Jury {
        /// Items to fan out: {"item_id", "text"} per line. Needs judges in
        /// the config.
        #[arg(long, conflicts_with = "opinions")]
        items: Option<PathBuf>,
        /// Pre-collected opinions to aggregate:
        /// {"item_id", "judge_id", "label", "categories", "assessment"}.
        #[arg(long)]
        opinions: Option<PathBuf>,
        /// Write verdict records here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a dataset through the agent and write metric reports
    Evaluate {
        /// Line-delimited JSON: {"id", "text", "lang", "label", "categories"}.
        #[arg(long)]
        dataset: PathBuf,
        /// Report directory (report.txt, metrics.json, predictions.jsonl).
        #[arg(long)]
        out: PathBuf,
        /// Skip and flag records whose pipeline run fails.
        #[arg(long)]
        skip_errors: bool,
        /// Parse evaluator output strictly.
        #[arg(long)]
        strict: bool,
    },
    /// Start the moderation HTTP service
    Serve,
}

/// Runs the CLI and returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(error) => {
            let _ = error.print();
            return if error.use_stderr() { 2 } else { 0 };
        }
    };

    let config = match &cli.config {
        Some(path) => match GatewayConfig::load(path) {
            Ok(config) => config,
            Err(error) => {
                eprintln!("error: {error}");
                return 1;
            }
        },
        None => GatewayConfig::default_validated(),
    };

    match dispatch(cli.command, &config) {
        Ok(()) => 0,
        Err(error) => {
            eprintln!("error: {error}");
            1
        }
    }
}

fn dispatch(command: Command, config: &GatewayConfig) -> anyhow::Result<()> {
    match command {
        Command::Moderate { text, file, strict } => moderate(config, text, file, strict),
        Command::Detect { text, file } => detect(config, text, file),
        Command::TranslateEval { input, out } => translate_eval(&input, out.as_deref()),
        Command::RewardScore { input, out } => reward_score(&input, out.as_deref()),
        Command::Jury { items, opinions, out } => jury(config, items, opinions, out.as_deref()),
        Command::Evaluate { dataset, out, skip_errors, strict } => {
            evaluate(config, &dataset, &out, skip_errors, strict)
        }
        Command::Serve => serve(config),
    }
}

fn input_texts(text: Option<String>, file: Option<PathBuf>) -> anyhow::Result<Vec<String>> {
    match (text, file) {
        (Some(text), None) => Ok(vec![text]),
        (None, Some(path)) => {
            let content = std::fs::read_to_string(&path)?;
            Ok(content.lines().filter(|l| !l.trim().is_empty()).map(String::from).collect())
        }
        _ => anyhow::bail!("provide exactly one of --text or --file"),
    }
}

fn write_or_print(out: Option<&Path>, content: &str) -> anyhow::Result<()> {
    match out {
        Some(path) => {
            std::fs::write(path, content)?;
            eprintln!("wrote {}", path.display());
        }
        None => print!("{content}"),
    }
    Ok(())
}

fn moderate(
    config: &GatewayConfig,
    text: Option<String>,
    file: Option<PathBuf>,
    strict: bool,
) -> anyhow::Result<()> {
    let pipeline = config.build_pipeline()?;
    let store = match &config.persistence.dir {
        Some(dir) => Some(RunStore::open(dir)?),
        None => None,
    };
    for (index, text) in input_texts(text, file)?.into_iter().enumerate() {
        let request = ModerationRequest {
            request_id: format!("cli-{index}"),
            text,
            options: ModerationOptions { force_path: None, strict_parse: strict },
        };
        let response = pipeline
            .moderate(&request)
            .map_err(|failure| anyhow::anyhow!("{failure}"))?;
        if let Some(store) = &store {
            store.append("moderation", &response)?;
        }
        println!("{}", serde_json::to_string(&response)?);
    }
    Ok(())
}

#[derive(Serialize)]
struct DetectRecord<'a> {
    segment: &'a str,
    language: &'a str,
    script: String,
    confidence: f64,
}

fn detect(config: &GatewayConfig, text: Option<String>, file: Option<PathBuf>) -> anyhow::Result<()> {
    let router = LanguageRouter::new(config.routing.to_router_config());
    for text in input_texts(text, file)? {
        let (spans, decision) = router.route(&text)?;
        for span in &spans {
            let record = DetectRecord {
                segment: &span.text,
                language: &span.language,
                script: format!("{:?}", span.script),
                confidence: span.confidence,
            };
            println!("{}", serde_json::to_string(&record)?);
        }
        println!("{}", serde_json::to_string(&decision)?);
    }
    Ok(())
}

#[derive(Deserialize)]
struct TranslationPair {
    candidate: String,
    reference: String,
    #[serde(default = "unknown_language")]
    language: String,
}

fn unknown_language() -> String {
    "und".to_string()
}

fn translate_eval(input: &Path, out: Option<&Path>) -> anyhow::Result<()> {
    let content = std::fs::read_to_string(input)?;
    let mut per_language: BTreeMap<String, Vec<(f64, f64, f64)>> = BTreeMap::new();
    let mut all = Vec::new();
    for (line_number, line) in content.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let pair: TranslationPair = serde_json::from_str(line)
            .map_err(|e| anyhow::anyhow!("line {}: {e}", line_number + 1))?;
        let score = translation_metrics(&pair.candidate, &pair.reference)
            .map_err(|e| anyhow::anyhow!("line {}: {e}", line_number + 1))?;
        let triple = (score.bleu, score.chrf, score.ter);
        per_language.entry(pair.language).or_default().push(triple);
        all.push(triple);
    }
    anyhow::ensure!(!all.is_empty(), "no pairs in {}", input.display());

    let mean = |values: &[(f64, f64, f64)]| {
        let n = values.len() as f64;
        let sum = values.iter().fold((0.0, 0.0, 0.0), |acc, v| {
            (acc.0 + v.0, acc.1 + v.1, acc.2 + v.2)
        });
        (sum.0 / n, sum.1 / n, sum.2 / n)
    };

    let mut table = String::new();
    let _ = writeln!(table, "{:<12}{:>7}{:>10}{:>10}{:>10}", "language", "pairs", "BLEU", "chrF", "TER");
    for (language, values) in &per_language {
        let (bleu, chrf, ter) = mean(values);
        let _ = writeln!(
            table,
            "{:<12}{:>7}{:>10.2}{:>10.2}{:>10.2}",
            language,
            values.len(),
            bleu,
            chrf,
            ter
        );
    }
    let (bleu, chrf, ter) = mean(&all);
    let _ = writeln!(table, "{:<12}{:>7}{:>10.2}{:>10.2}{:>10.2}", "ALL", all.len(), bleu, chrf, ter);
    let _ = writeln!(table, "\nvalues are arithmetic means of per-pair scores");
    write_or_print(out, &table)
}

#[derive(Deserialize)]
struct RewardInput {
    id: String,
    raw_output: String,
    expected_label: SafetyLabel,
    #[serde(default)]
    expected_categories: Vec<CategoryCode>,
}

#[derive(Serialize)]
struct RewardOutput {
    id: String,
    format: f64,
    label: f64,
    category: f64,
    total: f64,
}

fn reward_score(input: &Path, out: Option<&Path>) -> anyhow::Result<()> {
    let content = std::fs::read_to_string(input)?;
    let mut output = String::new();
    for (line_number, line) in content.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let record: RewardInput = serde_json::from_str(line)
            .map_err(|e| anyhow::anyhow!("line {}: {e}", line_number + 1))?;
        let expected = ExpectedVerdict::new(record.expected_label, record.expected_categories);
        let breakdown = total_reward(&record.raw_output, &expected);
        let result = RewardOutput {
            id: record.id,
            format: breakdown.format_reward,
            label: breakdown.label_reward,
            category: breakdown.category_reward,
            total: breakdown.total,
        };
        output.push_str(&serde_json::to_string(&result)?);
        output.push('\n');
    }
    write_or_print(out, &output)
}

#[derive(Deserialize)]
struct OpinionRecord {
    item_id: String,
    judge_id: String,
    label: SafetyLabel,
    #[serde(default)]
    categories: Vec<CategoryCode>,
    #[serde(default)]
    assessment: String,
}

#[derive(Deserialize)]
struct ItemRecord {
    item_id: String,
    text: String,
}

fn jury(
    config: &GatewayConfig,
    items: Option<PathBuf>,
    opinions: Option<PathBuf>,
    out: Option<&Path>,
) -> anyhow::Result<()> {
    let mut output = String::new();
    match (items, opinions) {
        (None, Some(path)) => {
            // Offline mode: aggregate pre-collected opinions per item.
            let content = std::fs::read_to_string(&path)?;
            let mut by_item: BTreeMap<String, Vec<JudgeOpinion>> = BTreeMap::new();
            for (line_number, line) in content.lines().enumerate() {
                if line.trim().is_empty() {
                    continue;
                }
                let record: OpinionRecord = serde_json::from_str(line)
                    .map_err(|e| anyhow::anyhow!("line {}: {e}", line_number + 1))?;
                by_item.entry(record.item_id).or_default().push(JudgeOpinion::new(
                    record.judge_id,
                    record.label,
                    record.categories,
                    record.assessment,
                ));
            }
            for (item_id, item_opinions) in by_item {
                match aggregate(&item_opinions, config.jury.unsafe_threshold) {
                    Ok(mut verdict) => {
                        if let Ok(selected) = select_assessment(
                            &item_opinions,
                            verdict.label,
                            &config.jury.judge_priority,
                        ) {
                            verdict.assessment = selected.text;
                        }
                        output.push_str(&serde_json::to_string(&serde_json::json!({
                            "item_id": item_id,
                            "verdict": verdict,
                        }))?);
                    }
                    Err(error) => {
                        output.push_str(&serde_json::to_string(&serde_json::json!({
                            "item_id": item_id,
                            "flagged": error.to_string(),
                        }))?);
                    }
                }
                output.push('\n');
            }
        }
        (Some(path), None) => {
            // Fan-out mode: judges from config.
            let judges = config.build_judges()?;
            anyhow::ensure!(!judges.is_empty(), "jury fan-out needs judges in the config");
            let store = match &config.persistence.dir {
                Some(dir) => Some(RunStore::open(dir)?),
                None => None,
            };
            let content = std::fs::read_to_string(&path)?;
            for (line_number, line) in content.lines().enumerate() {
                if line.trim().is_empty() {
                    continue;
                }
                let item: ItemRecord = serde_json::from_str(line)
                    .map_err(|e| anyhow::anyhow!("line {}: {e}", line_number + 1))?;
                let outcome = jury_item(
                    &judges,
                    &item.item_id,
                    &item.text,
                    config.jury.unsafe_threshold,
                    &config.jury.judge_priority,
                    Duration::from_secs(config.jury.judge_timeout_secs),
                );
                if let Some(store) = &store {
                    for opinion in &outcome.opinions {
                        store.append("jury_opinion", opinion)?;
                    }
                    store.append("jury_verdict", &outcome)?;
                }
                output.push_str(&serde_json::to_string(&outcome)?);
                output.push('\n');
            }
        }
        _ => anyhow::bail!("provide exactly one of --items or --opinions"),
    }
    write_or_print(out, &output)
}

fn evaluate(
    config: &GatewayConfig,
    dataset: &Path,
    out: &Path,
    skip_errors: bool,
    strict: bool,
) -> anyhow::Result<()> {
    let records = load_dataset(dataset, DatasetFormat::JsonLines)?;
    let pipeline = config.build_pipeline()?;
    let options = RunOptions {
        skip_policy: if skip_errors { SkipPolicy::SkipAndFlag } else { SkipPolicy::Abort },
        strict_parse: strict,
    };
    let report = run_eval(&records, &pipeline, Some(out), options)?;
    if let Some(dir) = &config.persistence.dir {
        RunStore::open(dir)?.append("eval_run", &report)?;
    }
    print!("{}", render_report(&report));
    eprintln!("reports written to {}", out.display());
    Ok(())
}

fn serve(config: &GatewayConfig) -> anyhow::Result<()> {
    let runtime = tokio::runtime::Builder::new_multi_thread().enable_all().build()?;
    runtime.block_on(crate::service::serve(config))?;
    Ok(())
}
