//! Slices the cube [0, 2]^3 perpendicular to its main diagonal at every
//! integer level and prints each cross-section's h*-vector from both the
//! winding enumeration and lattice-point counting. The h*-sums decompose
//! the binomial row (1, 4, 6, 4, 1) of relative volumes.
//!
//! Run with: cargo run --example cube_slices

use ospwind::ehrhart::hstar_slice;
use ospwind::partitions::{grading_histogram, FamilySpec};

fn main() {
    let side = 2u32;
    let coords = 3u32;
    println!("diagonal slices of [0, {side}]^{coords}\n");
    println!(
        "{:>3}  {:<12} {:<12} {:>6} {:>7}",
        "s", "winding", "ehrhart", "match", "volume"
    );

    let mut volumes = Vec::new();
    for plane_sum in 1..side * coords {
        let family = FamilySpec::cube_slice(side, coords, plane_sum).unwrap();
        let winding = grading_histogram(&family).unwrap().trimmed();
        let ehrhart = hstar_slice(side, plane_sum, coords).unwrap().trimmed();
        let volume = winding.sum();
        println!(
            "{plane_sum:>3}  {:<12} {:<12} {:>6} {volume:>7}",
            winding.to_string(),
            ehrhart.to_string(),
            winding == ehrhart,
        );
        volumes.push(volume.to_string());
    }

    println!(
        "\nrelative volumes across the slices: ({})",
        volumes.join(", ")
    );
}
