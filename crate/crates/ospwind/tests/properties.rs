//! Property tests over randomized inputs: the winding bijection, the
//! text encoding, histogram accounting, and lattice-count symmetries.

use num_bigint::BigUint;
use ospwind::ehrhart::{hstar_slice, lattice_count_slice};
use ospwind::partitions::{
    count_admissible, enumerate, grading_histogram, unwind, DecoratedOsp, FamilySpec,
};
use proptest::prelude::*;

/// Valid winding input: entries below the modulus with sum divisible by
/// it (the last entry closes the cycle).
fn winding_input() -> impl Strategy<Value = (Vec<u32>, u32)> {
    (1u32..=6, 1usize..=8).prop_flat_map(|(modulus, len)| {
        proptest::collection::vec(0..modulus, len - 1).prop_map(move |mut prefix| {
            let sum: u64 = prefix.iter().map(|&v| u64::from(v)).sum();
            let last =
                ((u64::from(modulus) - sum % u64::from(modulus)) % u64::from(modulus)) as u32;
            prefix.push(last);
            (prefix, modulus)
        })
    })
}

fn family() -> impl Strategy<Value = FamilySpec> {
    prop_oneof![
        (1u32..=3, 1u32..=3)
            .prop_map(|(ones, zeros)| FamilySpec::hypersimplex(ones, zeros).unwrap()),
        (1u32..=4, 2u32..=4)
            .prop_map(|(dilation, coords)| FamilySpec::dilated_simplex(dilation, coords).unwrap()),
        (1u32..=3, 2u32..=4).prop_flat_map(|(side, coords)| {
            (1..side * coords)
                .prop_map(move |plane_sum| FamilySpec::cube_slice(side, coords, plane_sum).unwrap())
        }),
    ]
}

proptest! {
    #[test]
    fn unwind_then_wind_is_identity((vector, modulus) in winding_input()) {
        let p = unwind(&vector, modulus).unwrap();
        p.validate().unwrap();
        let data = p.winding_data();
        prop_assert_eq!(&data.winding_vector, &vector);
        prop_assert_eq!(data.level % u64::from(modulus), 0);
        prop_assert_eq!(u64::from(data.winding_number) * u64::from(modulus), data.level);
        prop_assert_eq!(p.decoration_total(), modulus);
    }

    #[test]
    fn text_encoding_round_trips((vector, modulus) in winding_input()) {
        let p = unwind(&vector, modulus).unwrap();
        let text = p.to_string();
        let back: DecoratedOsp = text.parse().unwrap();
        prop_assert_eq!(back.to_string(), text);
        prop_assert_eq!(back, p);
    }

    #[test]
    fn histogram_totals_count_enumeration(family in family()) {
        let histogram = grading_histogram(&family).unwrap();
        prop_assert_eq!(histogram.sum(), count_admissible(&family).unwrap());
        prop_assert_eq!(histogram.len(), family.hstar_len());
    }

    #[test]
    fn winding_numbers_stay_below_ground_size(family in family()) {
        for p in enumerate(&family).unwrap() {
            let data = p.winding_data();
            prop_assert!((data.winding_number as usize) < family.hstar_len());
        }
    }

    #[test]
    fn dilate_counts_respect_reflection(
        (side, coords, dilate) in (1u32..=3, 1u32..=4, 0u32..=3),
        seed in 0u32..u32::MAX,
    ) {
        // x -> dilate*side - x maps the slice at sum s onto the slice at
        // sum side*coords - s point for point
        let plane_sum = seed % (side * coords + 1);
        let mirrored = side * coords - plane_sum;
        prop_assert_eq!(
            lattice_count_slice(side, plane_sum, coords, dilate).unwrap(),
            lattice_count_slice(side, mirrored, coords, dilate).unwrap()
        );
    }

    #[test]
    fn complementary_slices_share_hstar(
        (side, coords) in (1u32..=3, 2u32..=4),
        seed in 0u32..u32::MAX,
    ) {
        let span = side * coords;
        let plane_sum = 1 + seed % (span - 1);
        let mirrored = span - plane_sum;
        prop_assert_eq!(
            hstar_slice(side, plane_sum, coords).unwrap().trimmed(),
            hstar_slice(side, mirrored, coords).unwrap().trimmed()
        );
    }

    #[test]
    fn histogram_entries_are_small_for_tiny_families(family in family()) {
        // sanity bound: no class can exceed the whole enumeration
        let histogram = grading_histogram(&family).unwrap();
        let total: BigUint = histogram.sum();
        for coefficient in histogram.coeffs() {
            prop_assert!(coefficient <= &total);
        }
    }
}
