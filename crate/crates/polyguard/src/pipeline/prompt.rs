//! Evaluator prompt construction: a system message carrying the full
//! category policy, clause for clause, plus the tagged output-format
//! instruction; the user text goes into its own message verbatim.

use serde::{Deserialize, Serialize};

use crate::taxonomy;

/// Chat roles understood by evaluator backends.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Role {
    System,
    User,
    Assistant,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChatMessage {
    pub role: Role,
    pub content: String,
}

impl ChatMessage {
    pub fn system(content: impl Into<String>) -> Self {
        ChatMessage { role: Role::System, content: content.into() }
    }

    pub fn user(content: impl Into<String>) -> Self {
        ChatMessage { role: Role::User, content: content.into() }
    }
}

/// Builds the two-message evaluator prompt. The user message carries
/// `user_text` byte-for-byte.
pub fn build_prompt(user_text: &str) -> Vec<ChatMessage> {
    vec![ChatMessage::system(system_prompt()), ChatMessage::user(user_text)]
}

/// The system message: task statement, the twelve unsafe-content categories
/// with their full "should not" / "can" clauses, and the output grammar.
pub fn system_prompt() -> String {
    let mut prompt = String::with_capacity(8 * 1024);
    prompt.push_str(
        "You are a safety evaluator. Check whether the user text below contains unsafe \
         content according to our safety policy, using the following categories.\n\n\
         BEGIN UNSAFE CONTENT CATEGORIES\n",
    );
    for descriptor in taxonomy::descriptors() {
        prompt.push_str(&format!("\n{}: {}.\n", descriptor.code, descriptor.name));
        prompt.push_str("Should not\n");
        for clause in descriptor.should_not {
            prompt.push_str(&format!("- {clause}\n"));
        }
        if !descriptor.can.is_empty() {
            prompt.push_str("Can\n");
            for clause in descriptor.can {
                prompt.push_str(&format!("- {clause}\n"));
            }
        }
    }
    prompt.push_str(
        "\nEND UNSAFE CONTENT CATEGORIES\n\n\
         Provide your answer in exactly this format:\n\
         - First, write your assessment of the safety of the user text inside <think> tags. \
         Use at least 3 sentences of reasoning before deciding.\n\
         - Then provide the safety label inside <label> tags. The label must be exactly \
         \"safe\" or \"unsafe\".\n\
         - Finally, provide the violated category codes inside <categories> tags, as a \
         comma-separated list of codes (e.g. \"O1, O4\"), or \"None\" if the text is safe.\n",
    );
    prompt
}
