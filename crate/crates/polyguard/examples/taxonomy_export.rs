//! Export the unsafe-content taxonomy as a structured JSON document, one
//! record per category code, for audit and prompt templating.
//!
//! ## Run
//! ```bash
//! cargo run -p polyguard --example taxonomy_export
//! ```

use polyguard::taxonomy;

fn main() {
    for descriptor in taxonomy::descriptors() {
        println!(
            "{}: {} ({} should-not clauses, {} can clauses)",
            descriptor.code,
            descriptor.name,
            descriptor.should_not.len(),
            descriptor.can.len()
        );
    }
    println!("\nFull JSON document:\n");
    println!("{}", taxonomy::taxonomy_json());
}
