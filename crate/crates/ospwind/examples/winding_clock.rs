//! Walks through the winding computation for a single decorated ordered
//! set partition of twelve elements: position labels, the winding vector
//! read along the cycle 1 → 2 → … → 12 → 1, the level, and the winding
//! number (how many times the walk loops around the mod-7 clock face).
//!
//! Run with: cargo run --example winding_clock

use ospwind::DecoratedOsp;

fn main() {
    let text = "{1,5,6}_2|{2,9}_1|{4,10,12}_1|{3,7,8,11}_3";
    let partition: DecoratedOsp = text.parse().expect("canonical encoding");
    let modulus = partition.decoration_total();
    let data = partition.winding_data();

    println!("partition      : {partition}");
    println!("modulus        : {modulus} (sum of the decorations)");
    println!();
    println!("element : position -> next   step");
    let n = data.positions.len();
    for i in 0..n {
        let here = data.positions[i];
        let next = data.positions[(i + 1) % n];
        println!(
            "{:>7} : {:>8} -> {:<6} +{}",
            i + 1,
            here,
            next,
            data.winding_vector[i]
        );
    }
    println!();
    println!("winding vector : {:?}", data.winding_vector);
    println!(
        "level          : {} (= sum of the steps, always a multiple of {modulus})",
        data.level
    );
    println!(
        "winding number : {} (= {} / {modulus})",
        data.winding_number, data.level
    );
}
