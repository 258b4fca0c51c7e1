//! Exact big-integer Ehrhart machinery for diagonal cube slices.
//!
//! [`lattice_count_slice`] counts the lattice points of the `t`-th dilate
//! of `{x in [0, side]^coords : sum x_i = plane_sum}` as the coefficient
//! of `x^(t*plane_sum)` in `(1 + x + … + x^(t*side))^coords`, computed by
//! repeated truncated convolution — no alternating inclusion–exclusion
//! terms, everything stays nonnegative.
//!
//! The slice has dimension `coords - 1`, so its Ehrhart series has
//! denominator `(1 - x)^coords` and the h*-vector holds at most `coords`
//! entries. [`hstar_from_counts`] therefore needs exactly the dilate
//! counts `L(0), …, L(coords - 1)`: multiplying the count series by
//! `(1 - x)^coords` and truncating gives the numerator coefficients.
//!
//! Eulerian numbers and the Worpitzky identity live here too, as the
//! classical counting cross-checks for the unit-cube (hypersimplex) case.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Coefficient vector of an Ehrhart series numerator, or a winding-number
/// histogram playing the same role on the combinatorial side.
///
/// Invariants for every in-scope polytope: the constant term is 1, all
/// entries are nonnegative, and the entries sum to the normalized volume.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HStarVector {
    coeffs: Vec<BigUint>,
}

impl HStarVector {
    pub fn new(coeffs: Vec<BigUint>) -> Self {
        HStarVector { coeffs }
    }

    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Copy without trailing zeros, keeping at least the constant term.
    pub fn trimmed(&self) -> Self {
        let end = self
            .coeffs
            .iter()
            .rposition(|c| !c.is_zero())
            .map_or(self.coeffs.len().min(1), |i| i + 1);
        HStarVector {
            coeffs: self.coeffs[..end].to_vec(),
        }
    }

    /// Coefficient sum; equals the normalized (relative) volume.
    pub fn sum(&self) -> BigUint {
        self.coeffs.iter().sum()
    }
}

impl fmt::Display for HStarVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

impl From<Vec<u64>> for HStarVector {
    fn from(values: Vec<u64>) -> Self {
        HStarVector::new(values.into_iter().map(BigUint::from).collect())
    }
}

/// Dilate counts `L(0), …, L(coords - 1)` of one slice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EhrhartCounts {
    pub side: u32,
    pub plane_sum: u32,
    pub coords: u32,
    pub values: Vec<BigUint>,
}

impl EhrhartCounts {
    /// Computes the first `coords` dilate counts, which determine the
    /// h*-vector of the `(coords - 1)`-dimensional slice.
    pub fn compute(side: u32, plane_sum: u32, coords: u32) -> Result<Self, EhrhartError> {
        let values = (0..coords)
            .map(|t| lattice_count_slice(side, plane_sum, coords, t))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(EhrhartCounts {
            side,
            plane_sum,
            coords,
            values,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EhrhartError {
    InvalidParams(String),
    NegativeCoefficient { index: usize },
    LeadingCoefficientNotOne,
    LengthMismatch { expected: usize, got: usize },
}

impl fmt::Display for EhrhartError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::InvalidParams(msg) => write!(f, "invalid parameters: {msg}"),
            Self::NegativeCoefficient { index } => write!(
                f,
                "h* coefficient {index} is negative; the dilate counts are inconsistent"
            ),
            Self::LeadingCoefficientNotOne => {
                write!(
                    f,
                    "h* constant term is not 1; the dilate counts are inconsistent"
                )
            }
            Self::LengthMismatch { expected, got } => {
                write!(f, "expected {expected} dilate counts, got {got}")
            }
        }
    }
}

impl std::error::Error for EhrhartError {}

/// Exact binomial coefficient; 0 when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut result = BigUint::one();
    for i in 0..k {
        // result holds C(n, i) here, so the division is exact
        result = result * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    result
}

/// Eulerian number: permutations of `{1, …, size}` with exactly
/// `descents` descents. Zero outside `0 <= descents <= max(size - 1, 0)`.
pub fn eulerian(size: u64, descents: i64) -> BigUint {
    if descents < 0 {
        return BigUint::zero();
    }
    let k = descents as u64;
    if size == 0 {
        return if k == 0 {
            BigUint::one()
        } else {
            BigUint::zero()
        };
    }
    if k >= size {
        return BigUint::zero();
    }
    let mut row = vec![BigUint::one()];
    for m in 2..=size {
        let mut next = vec![BigUint::zero(); m as usize];
        for (j, value) in row.iter().enumerate() {
            next[j] += value * BigUint::from(j as u64 + 1);
            next[j + 1] += value * BigUint::from(m - j as u64 - 1);
        }
        row = next;
    }
    row[k as usize].clone()
}

/// Checks `base^power = sum_k eulerian(power, k) * binomial(base + k, power)`.
pub fn worpitzky_check(base: u64, power: u32) -> bool {
    let lhs = BigUint::from(base).pow(power);
    let mut rhs = BigUint::zero();
    for k in 0..u64::from(power) {
        rhs += eulerian(u64::from(power), k as i64) * binomial(base + k, u64::from(power));
    }
    lhs == rhs
}

/// Number of lattice points `x` with `0 <= x_i <= dilate * side` and
/// `sum x_i = dilate * plane_sum`: the `dilate`-th dilate count of the
/// slice. Allows the degenerate sums 0 and `side * coords`.
pub fn lattice_count_slice(
    side: u32,
    plane_sum: u32,
    coords: u32,
    dilate: u32,
) -> Result<BigUint, EhrhartError> {
    if side < 1 || coords < 1 || u64::from(plane_sum) > u64::from(side) * u64::from(coords) {
        return Err(EhrhartError::InvalidParams(format!(
            "need r >= 1, n >= 1, 0 <= s <= r*n; got r={side}, s={plane_sum}, n={coords}"
        )));
    }
    let cap = u64::from(dilate) * u64::from(side);
    let target = u64::from(dilate) * u64::from(plane_sum);
    let limit = usize::try_from(target)
        .map_err(|_| EhrhartError::InvalidParams("dilate * plane_sum exceeds usize".into()))?;
    let mut poly = vec![BigUint::zero(); limit + 1];
    poly[0] = BigUint::one();
    for _ in 0..coords {
        poly = convolve_range(&poly, cap, limit);
    }
    Ok(std::mem::take(&mut poly[limit]))
}

/// Multiplies by `1 + x + … + x^cap`, truncated at degree `limit`, via
/// prefix sums: out[j] = pre[j] - pre[j - cap - 1].
fn convolve_range(poly: &[BigUint], cap: u64, limit: usize) -> Vec<BigUint> {
    let mut prefix = Vec::with_capacity(limit + 1);
    let mut acc = BigUint::zero();
    for value in poly.iter().take(limit + 1) {
        acc += value;
        prefix.push(acc.clone());
    }
    (0..=limit)
        .map(|j| {
            if (j as u64) > cap {
                &prefix[j] - &prefix[j - cap as usize - 1]
            } else {
                prefix[j].clone()
            }
        })
        .collect()
}

/// h*-vector from the dilate counts: coefficient `j` is
/// `sum_{i=0}^{j} (-1)^i binomial(coords, i) L(j - i)`, the truncation of
/// `(1 - x)^coords` times the count series. Errs if any coefficient is
/// negative or the constant term is not 1, both of which signal a
/// counting bug rather than a representable answer.
pub fn hstar_from_counts(counts: &EhrhartCounts) -> Result<HStarVector, EhrhartError> {
    let n = counts.coords as usize;
    if n == 0 || counts.values.len() != n {
        return Err(EhrhartError::LengthMismatch {
            expected: n,
            got: counts.values.len(),
        });
    }
    let signed_binomials: Vec<BigInt> = (0..n)
        .map(|i| {
            let b = BigInt::from(binomial(n as u64, i as u64));
            if i % 2 == 0 {
                b
            } else {
                -b
            }
        })
        .collect();
    let mut coeffs = Vec::with_capacity(n);
    for j in 0..n {
        let mut acc = BigInt::zero();
        for (sign, count) in signed_binomials
            .iter()
            .zip(counts.values[..=j].iter().rev())
        {
            acc += sign * BigInt::from(count.clone());
        }
        if acc.is_negative() {
            return Err(EhrhartError::NegativeCoefficient { index: j });
        }
        coeffs.push(acc.to_biguint().expect("nonnegative"));
    }
    if !coeffs[0].is_one() {
        return Err(EhrhartError::LeadingCoefficientNotOne);
    }
    Ok(HStarVector::new(coeffs))
}

/// h*-vector of the slice at `plane_sum`, by lattice-point counting. The
/// degenerate single-point slices (`plane_sum` 0 or `side * coords`) are
/// rejected. Returns the full internal length `coords`; trim for display.
pub fn hstar_slice(side: u32, plane_sum: u32, coords: u32) -> Result<HStarVector, EhrhartError> {
    let span = u64::from(side) * u64::from(coords);
    if side < 1 || coords < 1 || plane_sum == 0 || u64::from(plane_sum) >= span {
        return Err(EhrhartError::InvalidParams(format!(
            "need r >= 1, n >= 1, 1 <= s <= r*n - 1; got r={side}, s={plane_sum}, n={coords}"
        )));
    }
    hstar_from_counts(&EhrhartCounts::compute(side, plane_sum, coords)?)
}

/// h*-vector of the simplex dilated by `dilation`, in closed form: the
/// dilate counts are `binomial(coords - 1 + dilation * t, coords - 1)`,
/// so coefficient `j` is
/// `sum_{i=0}^{j} (-1)^i binomial(coords, i) binomial(coords - 1 + dilation*(j-i), coords - 1)`.
/// Independent of [`hstar_slice`], which must agree on
/// `(dilation, dilation, coords)`.
pub fn hstar_simplex(dilation: u32, coords: u32) -> Result<HStarVector, EhrhartError> {
    if dilation < 1 || coords < 2 {
        return Err(EhrhartError::InvalidParams(format!(
            "need r >= 1, n >= 2; got r={dilation}, n={coords}"
        )));
    }
    let n = coords as usize;
    let mut coeffs = Vec::with_capacity(n);
    for j in 0..n {
        let mut acc = BigInt::zero();
        for i in 0..=j {
            let count = binomial(
                u64::from(coords) - 1 + u64::from(dilation) * (j - i) as u64,
                u64::from(coords) - 1,
            );
            let term = BigInt::from(binomial(u64::from(coords), i as u64)) * BigInt::from(count);
            if i % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        if acc.is_negative() {
            return Err(EhrhartError::NegativeCoefficient { index: j });
        }
        coeffs.push(acc.to_biguint().expect("nonnegative"));
    }
    Ok(HStarVector::new(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u64s(h: &HStarVector) -> Vec<u64> {
        h.coeffs()
            .iter()
            .map(|c| u64::try_from(c).unwrap())
            .collect()
    }

    #[test]
    fn binomial_basics() {
        assert_eq!(binomial(4, 2), BigUint::from(6u32));
        assert_eq!(binomial(7, 3), BigUint::from(35u32));
        assert_eq!(binomial(9, 0), BigUint::from(1u32));
        assert_eq!(binomial(3, 5), BigUint::zero());
        assert_eq!(binomial(0, 0), BigUint::from(1u32));
    }

    #[test]
    fn binomial_matches_pascal_triangle() {
        let mut row: Vec<BigUint> = vec![BigUint::one()];
        for n in 0..=20u64 {
            for (k, expected) in row.iter().enumerate() {
                assert_eq!(binomial(n, k as u64), *expected, "C({n},{k})");
            }
            let mut next = vec![BigUint::one()];
            for k in 1..row.len() {
                next.push(&row[k - 1] + &row[k]);
            }
            next.push(BigUint::one());
            row = next;
        }
    }

    fn descents(perm: &[u64]) -> usize {
        perm.windows(2).filter(|w| w[0] > w[1]).count()
    }

    fn permutations(size: u64) -> Vec<Vec<u64>> {
        if size == 0 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for shorter in permutations(size - 1) {
            for slot in 0..=shorter.len() {
                let mut longer = shorter.clone();
                longer.insert(slot, size);
                out.push(longer);
            }
        }
        out
    }

    #[test]
    fn eulerian_matches_descent_counting() {
        for size in 0..=6u64 {
            let perms = permutations(size);
            for k in 0..=size as i64 {
                let expected = perms.iter().filter(|p| descents(p) == k as usize).count();
                assert_eq!(
                    eulerian(size, k),
                    BigUint::from(expected),
                    "eulerian({size},{k})"
                );
            }
        }
    }

    #[test]
    fn eulerian_known_values() {
        assert_eq!(eulerian(3, 1), BigUint::from(4u32));
        assert_eq!(eulerian(4, 1), BigUint::from(11u32));
        assert_eq!(eulerian(5, 0), BigUint::one());
        assert_eq!(eulerian(5, -1), BigUint::zero());
        assert_eq!(eulerian(5, 5), BigUint::zero());
        assert_eq!(eulerian(0, 0), BigUint::one());
    }

    #[test]
    fn worpitzky_holds_on_a_grid() {
        assert!(worpitzky_check(2, 2));
        assert!(worpitzky_check(3, 3));
        for base in 1..=6u64 {
            assert!(worpitzky_check(base, 1));
            for power in 1..=5u32 {
                assert!(worpitzky_check(base, power), "m={base}, p={power}");
            }
        }
    }

    #[test]
    fn lattice_counts_match_known_coefficients() {
        // coefficient of x^4 in (1 + x + x^2)^4
        assert_eq!(
            lattice_count_slice(1, 2, 4, 2).unwrap(),
            BigUint::from(19u32)
        );
        // six permutations of (2,1,0) plus (1,1,1)
        assert_eq!(
            lattice_count_slice(2, 3, 3, 1).unwrap(),
            BigUint::from(7u32)
        );
        assert_eq!(lattice_count_slice(3, 7, 5, 0).unwrap(), BigUint::one());
    }

    fn naive_count(side: u32, plane_sum: u32, coords: u32, dilate: u32) -> u64 {
        let cap = u64::from(side) * u64::from(dilate);
        let target = u64::from(plane_sum) * u64::from(dilate);
        fn go(remaining_coords: u32, cap: u64, sum: u64, target: u64) -> u64 {
            if remaining_coords == 0 {
                return u64::from(sum == target);
            }
            (0..=cap)
                .filter(|v| sum + v <= target)
                .map(|v| go(remaining_coords - 1, cap, sum + v, target))
                .sum()
        }
        go(coords, cap, 0, target)
    }

    #[test]
    fn lattice_counts_match_naive_enumeration() {
        for side in 1..=2u32 {
            for coords in 1..=3u32 {
                for plane_sum in 0..=side * coords {
                    for dilate in 0..=3u32 {
                        assert_eq!(
                            lattice_count_slice(side, plane_sum, coords, dilate).unwrap(),
                            BigUint::from(naive_count(side, plane_sum, coords, dilate)),
                            "r={side} s={plane_sum} n={coords} t={dilate}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn lattice_count_rejects_bad_params() {
        assert!(lattice_count_slice(0, 1, 3, 1).is_err());
        assert!(lattice_count_slice(2, 7, 3, 1).is_err());
        assert!(lattice_count_slice(2, 1, 0, 1).is_err());
    }

    #[test]
    fn hstar_from_counts_unit_cube_sum_two() {
        let counts = EhrhartCounts::compute(1, 2, 4).unwrap();
        assert_eq!(
            counts.values,
            vec![
                BigUint::from(1u32),
                BigUint::from(6u32),
                BigUint::from(19u32),
                BigUint::from(44u32)
            ]
        );
        let h = hstar_from_counts(&counts).unwrap();
        assert_eq!(u64s(&h), [1, 2, 1, 0]);
        assert_eq!(u64s(&h.trimmed()), [1, 2, 1]);
    }

    #[test]
    fn hstar_from_counts_rejects_inconsistent_input() {
        let counts = EhrhartCounts {
            side: 1,
            plane_sum: 1,
            coords: 3,
            values: vec![BigUint::one(), BigUint::from(100u32), BigUint::zero()],
        };
        assert_eq!(
            hstar_from_counts(&counts),
            Err(EhrhartError::NegativeCoefficient { index: 2 })
        );

        let short = EhrhartCounts {
            side: 1,
            plane_sum: 1,
            coords: 3,
            values: vec![BigUint::one()],
        };
        assert_eq!(
            hstar_from_counts(&short),
            Err(EhrhartError::LengthMismatch {
                expected: 3,
                got: 1
            })
        );

        let scaled = EhrhartCounts {
            side: 1,
            plane_sum: 1,
            coords: 2,
            values: vec![BigUint::from(2u32), BigUint::from(4u32)],
        };
        assert_eq!(
            hstar_from_counts(&scaled),
            Err(EhrhartError::LeadingCoefficientNotOne)
        );
    }

    #[test]
    fn hstar_slice_known_vectors() {
        assert_eq!(u64s(&hstar_slice(2, 3, 3).unwrap().trimmed()), [1, 4, 1]);
        assert_eq!(u64s(&hstar_slice(1, 2, 4).unwrap().trimmed()), [1, 2, 1]);
        assert_eq!(u64s(&hstar_slice(2, 1, 3).unwrap().trimmed()), [1]);
    }

    #[test]
    fn hstar_slice_rejects_degenerate_slices() {
        assert!(hstar_slice(2, 0, 3).is_err());
        assert!(hstar_slice(2, 6, 3).is_err());
        assert!(hstar_slice(0, 1, 3).is_err());
    }

    #[test]
    fn hstar_simplex_known_vectors() {
        assert_eq!(u64s(&hstar_simplex(2, 2).unwrap().trimmed()), [1, 1]);
        assert_eq!(u64s(&hstar_simplex(3, 4).unwrap().trimmed()), [1, 16, 10]);
        assert_eq!(
            u64s(&hstar_simplex(4, 4).unwrap().trimmed()),
            [1, 31, 31, 1]
        );
    }

    #[test]
    fn hstar_simplex_rejects_bad_params() {
        assert!(hstar_simplex(0, 3).is_err());
        assert!(hstar_simplex(3, 1).is_err());
    }

    #[test]
    fn simplex_series_agrees_with_lattice_counting() {
        for dilation in 1..=6u32 {
            for coords in 2..=6u32 {
                assert_eq!(
                    hstar_simplex(dilation, coords).unwrap().trimmed(),
                    hstar_slice(dilation, dilation, coords).unwrap().trimmed(),
                    "r={dilation} n={coords}"
                );
            }
        }
    }

    #[test]
    fn hstar_sums_give_volumes() {
        // unit-cube slices: Eulerian volumes
        for coords in 2..=8u32 {
            for ones in 1..coords {
                assert_eq!(
                    hstar_slice(1, ones, coords).unwrap().sum(),
                    eulerian(u64::from(coords) - 1, i64::from(ones) - 1),
                    "a={ones} n={coords}"
                );
            }
        }
        // dilated simplices: power volumes
        for dilation in 1..=5u32 {
            for coords in 2..=5u32 {
                assert_eq!(
                    hstar_simplex(dilation, coords).unwrap().sum(),
                    BigUint::from(dilation).pow(coords - 1),
                    "r={dilation} n={coords}"
                );
            }
        }
    }

    #[test]
    fn dilate_counts_strictly_increase() {
        let counts = EhrhartCounts::compute(2, 3, 4).unwrap();
        for pair in counts.values.windows(2) {
            assert!(pair[0] < pair[1]);
        }
    }

    #[test]
    fn trimmed_keeps_constant_term() {
        let h = HStarVector::from(vec![1, 0, 0]);
        assert_eq!(u64s(&h.trimmed()), [1]);
        let empty = HStarVector::new(Vec::new());
        assert_eq!(empty.trimmed().len(), 0);
    }

    #[test]
    fn display_is_parenthesized_list() {
        let h = HStarVector::from(vec![1, 5, 5]);
        assert_eq!(h.to_string(), "(1, 5, 5)");
    }
}
