//! Enumerates the hypersimplicial decorated ordered set partitions of
//! two small hypersimplices, grouped by winding number, and compares the
//! column counts with the Ehrhart h*-vector computed by lattice-point
//! counting.
//!
//! Run with: cargo run --example enumerate_hypersimplex

use ospwind::ehrhart::hstar_slice;
use ospwind::partitions::{enumerate, grading_histogram, FamilySpec};

fn show(ones: u32, zeros: u32) {
    let family = FamilySpec::hypersimplex(ones, zeros).unwrap();
    println!("== {family} ==");

    let mut columns: Vec<Vec<String>> = vec![Vec::new(); family.hstar_len()];
    for p in enumerate(&family).unwrap() {
        let data = p.winding_data();
        columns[data.winding_number as usize].push(p.to_string());
    }
    for (winding, column) in columns.iter().enumerate() {
        if column.is_empty() {
            continue;
        }
        println!("  winding {winding} ({} partitions):", column.len());
        for partition in column {
            println!("    {partition}");
        }
    }

    let histogram = grading_histogram(&family).unwrap().trimmed();
    let (side, plane_sum, coords) = family.as_slice_params();
    let hstar = hstar_slice(side, plane_sum, coords).unwrap().trimmed();
    println!("  histogram: {histogram}");
    println!("  h*-vector: {hstar}");
    println!("  match    : {}", histogram == hstar);
    println!();
}

fn main() {
    show(2, 2);
    show(2, 3);
}
