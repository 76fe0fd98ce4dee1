//! Aggregate several judges' safety opinions into a jury verdict: vote on
//! the label, pick violated categories by frequency, and select an
//! assessment from an agreeing judge. Also shows mapping an external
//! moderation API's flags onto the canonical taxonomy.
//!
//! ## Run
//! ```bash
//! cargo run -p polyguard --example jury_vote
//! ```

use polyguard::jury::{
    aggregate, map_external_labels, select_assessment, ExternalJudgeOutput, JudgeOpinion,
    MappingTable, UnsafeRule,
};
use polyguard::taxonomy::{CategoryCode, SafetyLabel};

fn main() {
    // An API-style judge returns flags in its own vocabulary; a mapping
    // table normalizes them.
    let table = MappingTable {
        source_taxonomy_id: "moderation-api".into(),
        entries: [
            ("violence".to_string(), [CategoryCode::O2].into_iter().collect()),
            ("illicit".to_string(), [CategoryCode::O4].into_iter().collect()),
            ("sexual".to_string(), [CategoryCode::O9].into_iter().collect()),
        ]
        .into_iter()
        .collect(),
        unsafe_rule: UnsafeRule::AnyTriggered,
    };
    let api_output = ExternalJudgeOutput {
        flagged: Some(true),
        flags: [
            ("violence".to_string(), true),
            ("illicit".to_string(), true),
            ("sexual".to_string(), false),
        ]
        .into_iter()
        .collect(),
        assessment: None,
    };
    let api_opinion = map_external_labels(&api_output, &table, "api-judge").unwrap();
    println!("mapped API judge: label={} categories={:?}", api_opinion.label, api_opinion.categories);

    let opinions = vec![
        JudgeOpinion::new(
            "chat-judge-a",
            SafetyLabel::Unsafe,
            [CategoryCode::O2],
            "The text plans violence against a person.",
        ),
        JudgeOpinion::new(
            "chat-judge-b",
            SafetyLabel::Unsafe,
            [CategoryCode::O2, CategoryCode::O4],
            "Reads as criminal planning with violent intent.",
        ),
        api_opinion,
        JudgeOpinion::new("chat-judge-c", SafetyLabel::Safe, [], "Seems hypothetical to me."),
        JudgeOpinion::new("guard-judge", SafetyLabel::Safe, [], ""),
    ];

    let verdict = aggregate(&opinions, 2).unwrap();
    println!(
        "\njury: label={} ({}/{} unsafe votes)",
        verdict.label, verdict.unsafe_votes, verdict.total_votes
    );
    println!("per-code counts: {:?}", verdict.per_code_counts);
    println!("selected categories: {:?}", verdict.categories);

    let priority: Vec<String> = ["chat-judge-a", "chat-judge-b", "api-judge"]
        .into_iter()
        .map(String::from)
        .collect();
    let assessment = select_assessment(&opinions, verdict.label, &priority).unwrap();
    println!(
        "assessment from {:?}: {}",
        assessment.judge_id.as_deref().unwrap_or("none"),
        assessment.text
    );
}
