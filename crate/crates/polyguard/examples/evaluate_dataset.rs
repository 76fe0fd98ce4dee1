//! Build a small mixed-language dataset from the sandwich fixtures, run it
//! through the full agent, and print the resulting metric report.
//!
//! ## Run
//! ```bash
//! cargo run -p polyguard --example evaluate_dataset
//! ```

use std::sync::Arc;

use polyguard::eval::{render_report, run_eval, EvalRecord, RunOptions};
use polyguard::lang::LanguageRouter;
use polyguard::pipeline::{Pipeline, RuleStubEvaluator};
use polyguard::sandwich;
use polyguard::translate::DictionaryBackend;

fn main() {
    let pipeline = Pipeline::new(
        LanguageRouter::default(),
        Arc::new(DictionaryBackend::new(sandwich::dictionary_entries())),
        Arc::new(RuleStubEvaluator::new(sandwich::stub_rules())),
    );

    // Sandwich fixtures carry their own ground truth, which makes them a
    // ready-made evaluation dataset.
    let records: Vec<EvalRecord> = sandwich::generate_fixtures(30)
        .into_iter()
        .map(|f| EvalRecord {
            id: f.id,
            text: f.text,
            lang: f.middle_language,
            label: f.expected_label,
            categories: f.expected_categories,
            predicted_label: None,
            predicted_categories: None,
        })
        .collect();

    let report = run_eval(&records, &pipeline, None, RunOptions::default()).expect("eval run");
    println!("{}", render_report(&report));
}
