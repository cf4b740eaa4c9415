//! Runs every structural check and prints the reports.
//!
//! ```text
//! cargo run --release --example verify_theorems
//! ```

use genetic_groupoid::verify::{
    verify_lemma1, verify_not_variety, verify_theorem1_suite, verify_theorem2,
};

fn main() {
    let reports = [
        verify_theorem2(),
        verify_theorem1_suite(),
        verify_lemma1(),
        verify_not_variety(),
    ];
    for r in &reports {
        println!("{}", r.to_text());
    }
    let failed: usize = reports.iter().map(|r| r.failures().count()).sum();
    println!("{failed} failing checks");
}
