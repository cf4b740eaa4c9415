//! Enumerates genetic groupoids of small order and classifies them up to
//! isomorphism or anti-isomorphism.
//!
//! ```text
//! cargo run --release --example census -- 3
//! cargo run --release --example census -- 4
//! ```

use std::time::Instant;

use genetic_groupoid::enumeration::census;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let order: usize = std::env::args().nth(1).map_or(Ok(3), |s| s.parse())?;
    let start = Instant::now();
    let report = census(order)?;
    print!("{}", report.to_text());
    println!("elapsed: {:.2?}", start.elapsed());
    Ok(())
}
