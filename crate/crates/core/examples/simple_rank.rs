//! Ranking pairs, simpleness and the rank of the hypergeometric system at a
//! few parameters, including one that is not simple.
//!
//! Run with `cargo run --example simple_rank -- 0,0,0` (any β for `A_{3,2}`).

use gkz_rank::family::FamilySpec;
use gkz_rank::ranking::{Parameter, RankEngine, RankingError, Simplicity};

fn main() {
    let a = FamilySpec::new(3, 2).unwrap().build();
    let mut engine = RankEngine::new(&a);
    let args: Vec<String> = std::env::args().skip(1).collect();
    let betas: Vec<String> = if args.is_empty() {
        ["0,0,0", "7,7,13", "1,0,-3", "1/2,0,0", "0,0,-1"].map(String::from).to_vec()
    } else {
        args
    };
    for text in betas {
        let beta: Parameter = match text.parse() {
            Ok(b) => b,
            Err(e) => {
                eprintln!("{text}: {e}");
                continue;
            }
        };
        match engine.rank(&beta) {
            Ok(r) => {
                let face = match &r.simplicity {
                    Simplicity::Simple(g) => g.label(),
                    Simplicity::Empty => "none (no ranking pairs)".to_string(),
                    Simplicity::NotSimple => unreachable!("rank only reports simple parameters"),
                };
                println!("β = ({beta}): rank {} = vol {} + jump {}, simple face {face}", r.rank, r.volume, r.jump);
                for p in &r.maximal_pairs {
                    println!("    maximal pair {} with b = {:?}", p.face.label(), p.rep);
                }
            }
            Err(RankingError::NotSimple(report)) => {
                println!("β = ({beta}): not simple, maximal pairs:");
                for p in &report.maximal_pairs {
                    println!("    {} with b = {:?}", p.face.label(), p.rep);
                }
            }
            Err(e) => println!("β = ({beta}): {e}"),
        }
    }
}
