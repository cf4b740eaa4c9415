//! Isomorphism search, automorphism groups and lifting to a product.

use genetic_groupoid::constructions::ProductShape;
use genetic_groupoid::morphisms::{
    automorphism_group, find_isomorphism, is_automorphism, lift_automorphism,
};
use genetic_groupoid::{Groupoid, NGroupoid};

fn main() -> genetic_groupoid::Result<()> {
    let left: NGroupoid = Groupoid::left_zero(2).into();
    let right: NGroupoid = Groupoid::right_zero(2).into();
    println!("left-zero ~ right-zero (iso only): {:?}", find_isomorphism(&left, &right, false, false)?);
    println!("left-zero ~ right-zero (anti allowed): {}", find_isomorphism(&left, &right, true, false)?.unwrap().to_json());

    for s in ["000/111", "000/222", "001/122"] {
        let g: NGroupoid = Groupoid::parse_compact3(s)?.into();
        let aut = automorphism_group(&g)?;
        let perms: Vec<_> = aut.elements().iter().map(|p| p.image().to_vec()).collect();
        println!("Aut({s}) has order {}: {perms:?}", aut.order());
    }

    let a: NGroupoid = Groupoid::parse_compact3("000/222")?.into();
    let shape = ProductShape::new(vec![a.clone(), NGroupoid::bare(1)])?;
    let product = shape.materialize(64)?;
    for phi in automorphism_group(&a)?.elements() {
        let lifted = lift_automorphism(&shape, 0, phi)?;
        println!(
            "{:?} lifts to {:?}, automorphism of the product: {}",
            phi.image(),
            lifted.image(),
            is_automorphism(&product, &lifted)
        );
    }
    Ok(())
}
