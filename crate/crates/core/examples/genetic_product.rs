//! Genetic products: materialized tables and the factored view the GA
//! engine uses.

use genetic_groupoid::constructions::{genetic_product, product_chain, render_tuple, ProductShape};
use genetic_groupoid::morphisms::find_isomorphism;
use genetic_groupoid::names::GroupoidName;
use genetic_groupoid::NGroupoid;

fn main() -> genetic_groupoid::Result<()> {
    let a: NGroupoid = GroupoidName::parse("000/111")?.build()?;
    let b = NGroupoid::bare(1);

    let ab = genetic_product(&a, &b)?;
    let ba = genetic_product(&b, &a)?;
    println!("A *G B: order {}, {} ops, genetic={}", ab.order(), ab.op_count(), ab.is_genetic());
    println!(
        "A *G B ~ B *G A: {}",
        find_isomorphism(&ab, &ba, true, true)?.is_some()
    );

    // Associativity of the product, up to isomorphism.
    let c = GroupoidName::parse("band:2,1")?.build()?;
    let left = genetic_product(&ab, &c)?;
    let right = genetic_product(&a, &genetic_product(&b, &c)?)?;
    let w = find_isomorphism(&left, &right, false, false)?.expect("associative up to iso");
    println!("(A*B)*C ~ A*(B*C): witness verifies = {}", w.verify(&left, &right));

    // The same product without tables.
    let shape = ProductShape::new(vec![a, b, c])?;
    let flat = product_chain(shape.factors())?;
    let (x, y) = (vec![0, 1, 1], vec![2, 0, 0]);
    for op in 0..shape.flat_op_count() {
        let z = shape.multiply(&x, &y, op)?;
        assert_eq!(shape.rank(&z), flat.op(op)?.mul(shape.rank(&x), shape.rank(&y)));
        println!("{} .{op} {} = {}", render_tuple(&x), render_tuple(&y), render_tuple(&z));
    }
    Ok(())
}
