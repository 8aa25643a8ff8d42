//! Normalized volumes of a configuration and of its faces in the three
//! lattices that matter: the span `ZF`, the saturation `Z^d ∩ QF`, and
//! anything in between.
//!
//! Run with `cargo run --example normalized_volume`.

use gkz_rank::family::FamilySpec;
use gkz_rank::polytope::{faces, normalized_volume, volume, volume_in_saturation, volume_in_span};

fn main() {
    let spec = FamilySpec::new(3, 4).unwrap();
    let a = spec.build();
    println!("vol(A_{{3,4}}) = {} (closed form {})", volume(&a), spec.expected_volume());

    for f in faces(&a) {
        println!(
            "{:<28} vol_ZF = {:<3} vol_sat = {}",
            f.label(),
            volume_in_span(&f.indices, &a),
            volume_in_saturation(&f.indices, &a)
        );
    }

    let fb = [spec.fb_index()];
    let zf = a.span_lattice(&fb);
    let v = normalized_volume(&fb, &a, &zf).unwrap();
    println!("F_b measured in its own span: {v}");
}
