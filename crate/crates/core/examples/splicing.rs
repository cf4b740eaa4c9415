//! One-cut splicing on bit strings and why it is not associative.

use genetic_groupoid::constructions::{render_tuple, splice, splicing_groupoid, SplicingSpec};

fn main() -> genetic_groupoid::Result<()> {
    let (a, b, c) = (vec![1, 1, 1], vec![1, 0, 1], vec![0, 0, 0]);

    // ((111) x2 (101)) x1 (000)
    let left = splice(&splice(&a, &b, 2), &c, 1);
    // (111) x2 ((101) x1 (000))
    let right = splice(&a, &splice(&b, &c, 1), 2);
    println!("(111 x2 101) x1 000 = {}", render_tuple(&left));
    println!("111 x2 (101 x1 000) = {}", render_tuple(&right));

    let ga = splicing_groupoid(&SplicingSpec::uniform(2, 1))?;
    println!(
        "GA(2; 1,1,1): {} elements, genetic={}, each op associative={}",
        ga.order(),
        ga.is_genetic(),
        ga.is_associative()
    );
    // Each operation alone is associative; mixed pairs are not.
    let k = ga.order();
    for (i, x) in ga.ops().iter().enumerate() {
        for (j, y) in ga.ops().iter().enumerate() {
            let bad = (0..k * k * k)
                .filter(|t| {
                    let (p, q, r) = (t / (k * k), t / k % k, t % k);
                    x.mul(y.mul(p, q), r) != y.mul(p, x.mul(q, r))
                })
                .count();
            println!("  (a x{} b) x{} c vs a x{} (b x{} c): {bad} of {} triples differ", j + 1, i + 1, j + 1, i + 1, k * k * k);
        }
    }
    Ok(())
}
