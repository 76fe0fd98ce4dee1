//! Segment text, identify the language and script of each span, and show
//! the routing decision the agent would take.
//!
//! ## Run
//! ```bash
//! cargo run -p polyguard --example detect_language
//! ```

use polyguard::lang::{supported_languages, LanguageRouter};

fn main() {
    let router = LanguageRouter::default();
    let samples = [
        "How are you today my friend?",
        "Xin chào, bạn khỏe không?",
        "तपाईं आज कस्तो हुनुहुन्छ?",
        "كيف حالك اليوم يا صديقي؟",
        "สวัสดีครับ วันนี้อากาศดีมาก",
        "What is the capital of France?\nWie viel kostet das Geschenk für seine Mutter?\nThanks a lot!",
    ];

    for text in samples {
        let (spans, decision) = router.route(text).expect("non-empty input");
        println!("input: {:?}", text);
        for span in &spans {
            println!(
                "  [{:>3}..{:<3}] lang={:<4} script={:<11} confidence={:.2}  {:?}",
                span.start,
                span.end,
                span.language,
                format!("{:?}", span.script),
                span.confidence,
                span.text
            );
        }
        println!(
            "  route: {:?} (dominant={}, code_switched={})\n",
            decision.path, decision.dominant_language, decision.is_code_switched
        );
    }

    println!("supported language inventory ({} codes):", supported_languages().len());
    println!("{}", supported_languages().join(", "));
}
