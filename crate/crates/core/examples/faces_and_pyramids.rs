//! The face lattice with supporting normals, and pyramid detection.
//!
//! Run with `cargo run --example faces_and_pyramids`.

use gkz_rank::family::build_noncm_example;
use gkz_rank::polytope::{face_of, faces, is_pyramid, pyramid_excess};

fn main() {
    // The plane example raised once to a pyramid: its last column is e_3.
    let a = build_noncm_example(3, 5).unwrap();
    println!("columns: {:?}", a.columns());
    println!("facet normals: {:?}", a.facets());
    for f in faces(&a) {
        println!(
            "{:<22} dim {} codim {} normal {:?} excess {}{}",
            f.label(),
            f.dim,
            f.codim,
            f.normal,
            pyramid_excess(&f, &a),
            if is_pyramid(&f, &a) { "  (pyramid)" } else { "" }
        );
    }
    let base = face_of(&a, &[0, 1, 2, 3]).expect("the embedded plane example is a face");
    println!("pyramid over the embedded base: {}", is_pyramid(&base, &a));
}
