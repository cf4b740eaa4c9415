#![allow(dead_code)]

use genetic_groupoid::Groupoid;
use proptest::prelude::*;

/// Every order-`k` table with the diagonal fixed, filtered by literal
/// loops; independent of the library's enumerator.
pub fn brute_force_genetic(k: usize) -> Vec<Groupoid> {
    let off: Vec<(usize, usize)> =
        (0..k).flat_map(|a| (0..k).map(move |b| (a, b))).filter(|(a, b)| a != b).collect();
    let total = k.pow(off.len() as u32);
    let mut out = Vec::new();
    for mut code in 0..total {
        let mut cells: Vec<usize> = (0..k * k).map(|i| if i / k == i % k { i / k } else { 0 }).collect();
        for &(a, b) in off.iter().rev() {
            cells[a * k + b] = code % k;
            code /= k;
        }
        if off.iter().all(|&(a, b)| cells[a * k + b] != cells[b * k + a]) {
            out.push(Groupoid::new(k, cells).unwrap());
        }
    }
    out
}

pub fn literal_associative(g: &Groupoid) -> bool {
    let k = g.order();
    for a in 0..k {
        for b in 0..k {
            for c in 0..k {
                if g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)) {
                    return false;
                }
            }
        }
    }
    true
}

/// Arbitrary table of order 1..=max.
pub fn any_table(max: usize) -> impl Strategy<Value = Groupoid> {
    (1..=max).prop_flat_map(|k| {
        proptest::collection::vec(0..k, k * k).prop_map(move |cells| Groupoid::new(k, cells).unwrap())
    })
}

/// Genetic table of order 1..=max: idempotent diagonal, each unordered
/// pair gets two distinct values.
pub fn genetic_table(max: usize) -> impl Strategy<Value = Groupoid> {
    (1..=max).prop_flat_map(|k| {
        let pairs = k * (k.saturating_sub(1)) / 2;
        proptest::collection::vec((0..k, 1..k.max(2)), pairs).prop_map(move |choices| {
            let mut cells: Vec<usize> = (0..k * k).map(|i| if i / k == i % k { i / k } else { 0 }).collect();
            let mut it = choices.into_iter();
            for a in 0..k {
                for b in a + 1..k {
                    let (x, shift) = it.next().unwrap();
                    cells[a * k + b] = x;
                    cells[b * k + a] = (x + shift) % k;
                }
            }
            Groupoid::new(k, cells).unwrap()
        })
    })
}
