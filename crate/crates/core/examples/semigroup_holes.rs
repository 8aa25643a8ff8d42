//! Holes of `NA`, the Hilbert basis of the saturated cone, and membership
//! modulo a face.
//!
//! Run with `cargo run --example semigroup_holes`.

use gkz_rank::family::{build_noncm_example, FamilySpec};
use gkz_rank::lattice::int_vector;
use gkz_rank::polytope::faces;
use gkz_rank::semigroup::{contains_mod_face, delta_bounding_box, hilbert_basis, holes_in_box, is_normal, IntBox};

fn main() {
    let a = build_noncm_example(2, 4).unwrap();
    println!("plane example normal: {}", is_normal(&a));
    println!("Hilbert basis: {:?}", hilbert_basis(&a));
    let report = holes_in_box(&a, &delta_bounding_box(&a)).unwrap();
    println!("holes in the bounding box of conv(0, A): {:?}", report.holes);
    let wide = holes_in_box(&a, &IntBox::cube(2, 0, 6)).unwrap();
    println!("holes in [0,6]^2: {:?}", wide.holes);

    let spec = FamilySpec::new(3, 3).unwrap();
    let a = spec.build();
    let holes = holes_in_box(&a, &IntBox::cube(3, 0, 3)).unwrap().holes;
    println!("A_{{3,3}} holes in [0,3]^3: {:?}", holes);
    let fb = faces(&a).into_iter().find(|f| f.indices == [spec.fb_index()]).unwrap();
    for v in [[1, 0, 0], [1, 0, 1], [0, 0, -5]] {
        let v = int_vector(&v);
        println!("{:?} in NA + Z F_b: {}", v, contains_mod_face(&v, &fb, &a).unwrap());
    }
}
