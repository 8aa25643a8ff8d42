//! The ratio of maximal rank to volume for `A_{d,b}`, approaching `d − 1`.
//!
//! Run with `cargo run --release --example family_ratio`.

use gkz_rank::family::{verify, FamilySpec};
use gkz_rank::ranking::{rank_simple, Parameter};
use num_rational::BigRational;

fn main() {
    for d in 3..=5 {
        for b in [2u64, 5, 20, 100] {
            let spec = FamilySpec::new(d, b).unwrap();
            let a = spec.build();
            let r = rank_simple(&Parameter::zero(d), &a).unwrap();
            let ratio = BigRational::new(r.rank.clone(), r.volume.clone());
            println!(
                "d = {d}, b = {b:>3}: rank {:>4} / vol {:>3} = {:>8} ≈ {:.4} (limit {})",
                r.rank,
                r.volume,
                ratio.to_string(),
                ratio_f64(&ratio),
                d - 1
            );
        }
    }
    let report = verify(&FamilySpec::new(4, 3).unwrap(), 20).unwrap();
    println!("A_{{4,3}} closed forms confirmed: {}", report.all_match);
}

fn ratio_f64(r: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}
