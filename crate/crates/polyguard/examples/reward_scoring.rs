//! Score model outputs with the structured rewards: format (tag structure
//! plus reasoning-length bonus), safety label, and categories.
//!
//! ## Run
//! ```bash
//! cargo run -p polyguard --example reward_scoring
//! ```

use polyguard::reward::{total_reward, ExpectedVerdict};
use polyguard::taxonomy::{CategoryCode, SafetyLabel};

fn main() {
    let expected = ExpectedVerdict::new(SafetyLabel::Unsafe, [CategoryCode::O7]);

    let outputs = [
        (
            "perfect",
            "<think>The text asks how to build a weapon. This is covered by the weapons \
             policy. It cannot be assisted.</think>\n<label>unsafe</label>\n<categories>O7</categories>",
        ),
        (
            "thin reasoning",
            "<think>Bad.</think>\n<label>unsafe</label>\n<categories>O7</categories>",
        ),
        (
            "wrong category",
            "<think>The text asks about a weapon. It is dangerous. Blocking it.</think>\n\
             <label>unsafe</label>\n<categories>O2</categories>",
        ),
        ("wrong label, no categories", "<think>Looks fine to me. Nothing wrong. All good.</think>\n<label>safe</label>"),
        ("unstructured", "I think this is probably not okay to answer."),
    ];

    println!("expected: label=unsafe categories=O7\n");
    println!("{:<28}{:>8}{:>8}{:>10}{:>8}", "output", "format", "label", "category", "total");
    for (name, raw) in outputs {
        let b = total_reward(raw, &expected);
        println!(
            "{:<28}{:>8.2}{:>8.2}{:>10.2}{:>8.2}",
            name, b.format_reward, b.label_reward, b.category_reward, b.total
        );
    }
}
