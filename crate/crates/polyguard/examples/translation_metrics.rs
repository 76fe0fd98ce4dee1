//! Score candidate translations against references with BLEU, chrF and TER.
//!
//! ## Run
//! ```bash
//! cargo run -p polyguard --example translation_metrics
//! ```

use polyguard::translate::translation_metrics;

fn main() {
    let pairs = [
        ("identical", "the cat sat on the mat", "the cat sat on the mat"),
        ("close", "a cat sat on the mat", "the cat sat on the mat"),
        ("reordered", "saturday i went to the market", "i went to the market on saturday"),
        ("degenerate", "the the the", "the cat sat on the mat"),
        ("unrelated", "alpha beta gamma", "the cat sat on the mat"),
    ];

    println!("{:<12}{:>9}{:>9}{:>9}", "pair", "BLEU", "chrF", "TER");
    for (name, candidate, reference) in pairs {
        let score = translation_metrics(candidate, reference).expect("non-empty");
        println!("{:<12}{:>9.2}{:>9.2}{:>9.2}", name, score.bleu, score.chrf, score.ter);
    }
    println!("\nTER is an edit rate over the reference length, so a candidate much");
    println!("longer than its reference can score above 100.");
    let long = translation_metrics("a b c d e f g h i j k l", "a").unwrap();
    println!("12 tokens vs 1: TER = {:.2}", long.ter);
}
