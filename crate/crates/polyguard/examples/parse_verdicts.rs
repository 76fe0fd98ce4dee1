//! Parse evaluator outputs in strict and lenient modes, and render a
//! verdict back into the canonical tagged grammar.
//!
//! ## Run
//! ```bash
//! cargo run -p polyguard --example parse_verdicts
//! ```

use polyguard::taxonomy::CategoryCode;
use polyguard::verdict::{parse_verdict, render_verdict, ParseMode, SafetyVerdict};

fn main() {
    let well_formed = "<think>The text requests weapon instructions. That falls under the \
                       weapons policy. It must be blocked.</think>\n\
                       <label> unsafe </label>\n\
                       <categories>O7</categories>";
    let parsed = parse_verdict(well_formed, ParseMode::Strict).expect("strict parse");
    println!("strict parse:");
    println!("  label      = {:?}", parsed.label);
    println!("  categories = {:?}", parsed.categories);

    // Lenient mode tolerates the singular tag spelling and missing pieces.
    let messy = "Sure! <label>unsafe</label> and I think <category>O2, O4</category>";
    let parsed = parse_verdict(messy, ParseMode::Lenient).expect("lenient never fails");
    println!("\nlenient parse of messy output:");
    println!("  label      = {:?}", parsed.label);
    println!("  categories = {:?}", parsed.categories);
    println!("  tags seen  = {:?}", parsed.tags_present);

    // Strict mode explains exactly what is wrong.
    let broken = "<think>a</think><label>very bad</label><categories>O7</categories>";
    println!("\nstrict rejection: {}", parse_verdict(broken, ParseMode::Strict).unwrap_err());

    let verdict = SafetyVerdict::unsafe_with(
        [CategoryCode::O1, CategoryCode::O4],
        "Requests personal data for a scam. Two policies apply. Blocked.",
    )
    .unwrap();
    println!("\ncanonical rendering:\n{}", render_verdict(&verdict));
}
