//! The winding map is one-to-one: this example recovers every partition
//! of a hypersimplex from its winding vector alone, then decodes a few
//! raw vectors picked by hand.
//!
//! Run with: cargo run --example unwind_roundtrip

use ospwind::partitions::{enumerate, unwind, FamilySpec};

fn main() {
    let family = FamilySpec::hypersimplex(2, 3).unwrap();
    let modulus = family.winding_modulus();

    println!("{family}: partition -> winding vector -> partition\n");
    for p in enumerate(&family).unwrap() {
        let data = p.winding_data();
        let recovered = unwind(&data.winding_vector, modulus).unwrap();
        println!(
            "{:<28} -> {:?} -> {}",
            p.to_string(),
            data.winding_vector,
            recovered
        );
        assert_eq!(recovered, p);
    }

    println!("\ndecoding raw vectors mod 2:");
    for vector in [vec![0, 0, 0, 0], vec![1, 1, 1, 1], vec![0, 1, 0, 1]] {
        let partition = unwind(&vector, 2).unwrap();
        println!("  {vector:?} -> {partition}");
    }

    println!("\nrejected inputs:");
    for (vector, modulus) in [(vec![1, 0, 0], 2u32), (vec![2, 0], 2)] {
        let err = unwind(&vector, modulus).unwrap_err();
        println!("  {vector:?} mod {modulus}: {err}");
    }
}
