//! Prints the table of Ehrhart series numerators for dilated simplices:
//! entry (r, n) holds the h*-vector of the standard simplex in n
//! coordinates dilated by r, over the denominator (1-x)^n. Each entry is
//! computed twice — by summing the closed-form binomial series and by
//! counting lattice points in dilates — and by enumerating winding
//! classes, with all three routes required to agree.
//!
//! Run with: cargo run --example simplex_series_table

use ospwind::ehrhart::{hstar_simplex, hstar_slice};
use ospwind::partitions::{grading_histogram, FamilySpec};

fn main() {
    let dilations = 2..=4u32;
    let coords_range = 2..=4u32;

    println!("h*-vector of the r-dilated simplex in n coordinates\n");
    print!("{:>4}", "r\\n");
    for coords in coords_range.clone() {
        print!("{coords:>18}");
    }
    println!();

    for dilation in dilations {
        print!("{dilation:>4}");
        for coords in coords_range.clone() {
            let series = hstar_simplex(dilation, coords).unwrap().trimmed();
            let counted = hstar_slice(dilation, dilation, coords).unwrap().trimmed();
            let family = FamilySpec::dilated_simplex(dilation, coords).unwrap();
            let winding = grading_histogram(&family).unwrap().trimmed();
            assert_eq!(series, counted, "series route disagrees with counting");
            assert_eq!(series, winding, "winding route disagrees with series");
            print!("{:>18}", series.to_string());
        }
        println!();
    }

    println!("\nall entries agree across the series, lattice-count, and winding routes");
    println!("row sums are r^(n-1): the normalized volume of the dilated simplex");
}
