//! Hermite and Smith forms, saturation and coset representatives.
//!
//! Run with `cargo run --example lattice_basics`.

use gkz_rank::lattice::{
    coset_representatives, hermite_normal_form, int_vector, smith_normal_form, IntMatrix, Sublattice,
};

fn main() {
    let m = IntMatrix::from_i64_rows(&[&[6, 0], &[0, 4]]);
    let (s, u, v) = smith_normal_form(&m);
    println!("Smith form of diag(6,4): diag({}, {})", s[(0, 0)], s[(1, 1)]);
    println!("  transforms unimodular: {} {}", u.is_unimodular(), v.is_unimodular());

    let rows = IntMatrix::from_i64_rows(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]);
    let (h, _) = hermite_normal_form(&rows);
    println!("Hermite form rows:");
    for r in h.to_rows() {
        println!("  {:?}", r.iter().map(|x| x.to_string()).collect::<Vec<_>>());
    }

    // The lattice spanned by (0,0,3) and its saturation.
    let zf = Sublattice::new(3, vec![int_vector(&[0, 0, 3])]).unwrap();
    let sat = zf.saturate();
    println!("saturation basis: {:?}", sat.basis());
    println!("index [sat : ZF] = {}", zf.index_in_saturation());
    let cosets = coset_representatives(&zf, &sat).unwrap();
    for r in &cosets.representatives {
        println!("  coset representative {:?}", r.iter().map(|x| x.to_string()).collect::<Vec<_>>());
    }
}
