//! Growing a column set one column at a time so that `conv(0, τ)` never
//! picks up a column outside `τ`.
//!
//! Run with `cargo run --example augment_chain`.

use gkz_rank::family::FamilySpec;
use gkz_rank::polytope::{augment, columns_in_delta, volume_in_span};

fn main() {
    let a = FamilySpec::new(4, 3).unwrap().build();
    let mut tau: Vec<usize> = vec![a.n() - 1];
    println!("start: {:?}", tau);
    while tau.len() < a.n() {
        let j = augment(&tau, &a).unwrap();
        tau.push(j);
        tau.sort_unstable();
        assert_eq!(columns_in_delta(&tau, &a), tau);
        println!("add a{} -> {:?}, vol in span {}", j + 1, tau, volume_in_span(&tau, &a));
    }
}
