//! Structural predicates of a few named groupoids.
//!
//!     cargo run --example check_predicates -- "000/111" "band:2,3" "GA(2; 1,1,1)"

use genetic_groupoid::names::GroupoidName;

fn main() -> genetic_groupoid::Result<()> {
    let mut names: Vec<String> = std::env::args().skip(1).collect();
    if names.is_empty() {
        names = ["000/111", "001/122", "band:2,3", "bare:2", "GA(2; 1,1,1)"]
            .map(String::from)
            .to_vec();
    }
    for name in &names {
        let g = GroupoidName::parse(name)?.build()?;
        println!("{name}: order {}, {} op(s)", g.order(), g.op_count());
        for (i, op) in g.ops().iter().enumerate() {
            println!(
                "  op {i}: idempotent={} nowhere-commutative={} genetic={} associative={} band={}",
                op.is_idempotent(),
                op.is_nowhere_commutative(),
                op.is_genetic(),
                op.is_associative(),
                op.is_rectangular_band(),
            );
        }
    }
    Ok(())
}
