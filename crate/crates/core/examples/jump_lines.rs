//! Scans a slab of integer parameters for `A_{d,b}` and reports where the
//! rank exceeds the volume, next to the predicted lines.
//!
//! Run with `cargo run --release --example jump_lines -- 3 4`.

use gkz_rank::family::{exceptional_lines, jump_lines, FamilySpec};
use gkz_rank::ranking::{Parameter, RankEngine};

fn main() {
    let args: Vec<u64> = std::env::args().skip(1).filter_map(|s| s.parse().ok()).collect();
    let (d, b) = match args.as_slice() {
        [d, b] => (*d as usize, *b),
        _ => (3, 4),
    };
    let spec = FamilySpec::new(d, b).unwrap();
    let a = spec.build();
    let mut engine = RankEngine::new(&a);
    let vol = engine.volume().clone();
    println!("A_{{{d},{b}}}: vol {vol}");
    println!("union over m·e_k: {} lines", exceptional_lines(&spec).len());
    println!("all jump lines:   {} lines", jump_lines(&spec).len());
    if d != 3 {
        return;
    }
    println!("rank shown where it exceeds vol, '.' where it equals vol, '?' where β is not simple");
    println!("rows run from β_2 = {b} down to -1, columns from β_1 = -1 up to {b}");
    let top = b as i64;
    for z in [0i64, -2] {
        println!("slice β_3 = {z}:");
        for y in (-1..=top).rev() {
            let row: String = (-1..=top)
                .map(|x| {
                    let r = engine.rank(&Parameter::from_i64(&[x, y, z])).map(|r| r.rank);
                    match r {
                        Ok(r) if r > vol => format!("{:>3}", r.to_string()),
                        Ok(_) => "  .".to_string(),
                        Err(_) => "  ?".to_string(),
                    }
                })
                .collect();
            println!("  {row}");
        }
    }
}
