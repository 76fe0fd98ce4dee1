//! Generate code-switched sandwich prompts (a foreign-language question
//! hidden between benign English ones) and verify the router flags them.
//!
//! ## Run
//! ```bash
//! cargo run -p polyguard --example sandwich_routing
//! ```

use polyguard::lang::{LanguageRouter, RoutePath};
use polyguard::sandwich::generate_fixtures;

fn main() {
    let router = LanguageRouter::default();
    let fixtures = generate_fixtures(100);

    let example = &fixtures[0];
    println!("one generated prompt ({}):\n{}\n", example.id, example.text);

    let mut flagged = 0;
    let mut by_language: std::collections::BTreeMap<String, usize> = Default::default();
    for fixture in &fixtures {
        let (_, decision) = router.route(&fixture.text).unwrap();
        if decision.path == RoutePath::TranslateSegmented && decision.is_code_switched {
            flagged += 1;
            *by_language.entry(fixture.middle_language.clone()).or_default() += 1;
        }
    }
    println!("flagged as code-switched: {flagged}/100");
    println!("by middle language: {by_language:?}");
}
