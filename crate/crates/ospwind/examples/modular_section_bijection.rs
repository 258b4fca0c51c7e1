//! The winding map sends the simplicial partitions of a dilated simplex
//! bijectively onto the modular section {x in (Z/r)^n : sum x_i = 0 mod r}.
//! This example lists both sides for the 3-dilated simplex in three
//! coordinates, layer by layer: the points with coordinate sum 0, 3, 6
//! carry the partitions of winding number 0, 1, 2.
//!
//! Run with: cargo run --example modular_section_bijection

use ospwind::partitions::{enumerate, modular_section, FamilySpec};
use ospwind::verify::check_bijection_simplex;
use std::collections::BTreeMap;

fn main() {
    let dilation = 3u32;
    let coords = 3u32;
    let family = FamilySpec::dilated_simplex(dilation, coords).unwrap();

    let mut by_point: BTreeMap<Vec<u32>, String> = BTreeMap::new();
    for p in enumerate(&family).unwrap() {
        let data = p.winding_data();
        by_point.insert(data.winding_vector, p.to_string());
    }

    println!("{family}: winding vectors against the modular section\n");
    let mut layers: BTreeMap<u64, Vec<String>> = BTreeMap::new();
    for point in modular_section(dilation, coords) {
        let sum: u64 = point.iter().map(|&v| u64::from(v)).sum();
        let partition = by_point
            .get(&point)
            .cloned()
            .unwrap_or_else(|| "<no preimage!>".to_string());
        layers
            .entry(sum / u64::from(dilation))
            .or_default()
            .push(format!("{point:?}  <-  {partition}"));
    }
    for (winding, rows) in &layers {
        println!("winding number {winding}:");
        for row in rows {
            println!("  {row}");
        }
    }

    let outcome = check_bijection_simplex(dilation, coords).unwrap();
    println!(
        "\nbijection: {} ({} winding vectors, {} section points)",
        outcome.matched, outcome.image_size, outcome.section_size
    );
}
