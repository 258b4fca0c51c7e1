//! The three polytope families and their decoration (admissibility) rules.
//!
//! Every family lives in the hyperplane `sum x_i = const` of some cube
//! `[0, r]^n`, so each spec reduces to a triple `(side, plane_sum, coords)`
//! via [`FamilySpec::as_slice_params`]; the hypersimplex is the unit-cube
//! case and the dilated simplex the diagonal case `plane_sum = side`.

use super::DecoratedOsp;
use std::fmt;

/// Parameter record selecting one polytope family instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    /// Slice of the unit cube at coordinate sum `ones`: the convex hull of
    /// the 0/1 vectors with exactly `ones` ones and `zeros` zeros.
    /// Decorations satisfy `1 <= d <= |block| - 1` and sum to `ones`.
    Hypersimplex { ones: u32, zeros: u32 },
    /// The standard simplex in `coords` coordinates scaled by an integer
    /// factor. Decorations satisfy `1 <= d <= dilation * |block| - 1` and
    /// sum to `dilation`.
    DilatedSimplex { dilation: u32, coords: u32 },
    /// Cross-section of the cube `[0, side]^coords` perpendicular to the
    /// all-ones diagonal at coordinate sum `plane_sum`. Decorations satisfy
    /// `1 <= d <= side * |block| - 1` and sum to `plane_sum`.
    CubeSlice {
        side: u32,
        coords: u32,
        plane_sum: u32,
    },
}

/// Rejected family parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilyError {
    HypersimplexParams {
        ones: u32,
        zeros: u32,
    },
    SimplexParams {
        dilation: u32,
        coords: u32,
    },
    SliceParams {
        side: u32,
        coords: u32,
        plane_sum: u32,
    },
}

impl fmt::Display for FamilyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::HypersimplexParams { ones, zeros } => write!(
                f,
                "invalid hypersimplex: a={ones}, b={zeros} (need a >= 1 and b >= 1)"
            ),
            Self::SimplexParams { dilation, coords } => write!(
                f,
                "invalid dilated simplex: r={dilation}, n={coords} (need r >= 1 and n >= 2)"
            ),
            Self::SliceParams {
                side,
                coords,
                plane_sum,
            } => write!(
                f,
                "invalid cube slice: r={side}, n={coords}, s={plane_sum} \
                 (need r >= 1, n >= 1, 1 <= s <= r*n - 1)"
            ),
        }
    }
}

impl std::error::Error for FamilyError {}

impl FamilySpec {
    pub fn hypersimplex(ones: u32, zeros: u32) -> Result<Self, FamilyError> {
        let spec = FamilySpec::Hypersimplex { ones, zeros };
        spec.validate()?;
        Ok(spec)
    }

    pub fn dilated_simplex(dilation: u32, coords: u32) -> Result<Self, FamilyError> {
        let spec = FamilySpec::DilatedSimplex { dilation, coords };
        spec.validate()?;
        Ok(spec)
    }

    pub fn cube_slice(side: u32, coords: u32, plane_sum: u32) -> Result<Self, FamilyError> {
        let spec = FamilySpec::CubeSlice {
            side,
            coords,
            plane_sum,
        };
        spec.validate()?;
        Ok(spec)
    }

    /// Degenerate parameters are rejected here rather than silently
    /// yielding empty enumerations.
    pub fn validate(&self) -> Result<(), FamilyError> {
        match *self {
            FamilySpec::Hypersimplex { ones, zeros } => {
                if ones == 0 || zeros == 0 || ones.checked_add(zeros).is_none() {
                    return Err(FamilyError::HypersimplexParams { ones, zeros });
                }
            }
            FamilySpec::DilatedSimplex { dilation, coords } => {
                if dilation == 0 || coords < 2 {
                    return Err(FamilyError::SimplexParams { dilation, coords });
                }
            }
            FamilySpec::CubeSlice {
                side,
                coords,
                plane_sum,
            } => {
                let span = u64::from(side) * u64::from(coords);
                if side == 0 || coords == 0 || plane_sum == 0 || u64::from(plane_sum) >= span {
                    return Err(FamilyError::SliceParams {
                        side,
                        coords,
                        plane_sum,
                    });
                }
            }
        }
        Ok(())
    }

    /// Ground-set size n; also the ambient coordinate count and the
    /// internal h*-vector length.
    pub fn ambient_size(&self) -> u32 {
        match *self {
            FamilySpec::Hypersimplex { ones, zeros } => ones + zeros,
            FamilySpec::DilatedSimplex { coords, .. } => coords,
            FamilySpec::CubeSlice { coords, .. } => coords,
        }
    }

    /// Required sum of the decorations.
    pub fn decoration_total(&self) -> u32 {
        match *self {
            FamilySpec::Hypersimplex { ones, .. } => ones,
            FamilySpec::DilatedSimplex { dilation, .. } => dilation,
            FamilySpec::CubeSlice { plane_sum, .. } => plane_sum,
        }
    }

    /// Modulus used by position labels and winding vectors; equals the
    /// decoration total.
    pub fn winding_modulus(&self) -> u32 {
        self.decoration_total()
    }

    /// Internal histogram / h*-vector length (trailing zeros are trimmed
    /// only for display).
    pub fn hstar_len(&self) -> usize {
        self.ambient_size() as usize
    }

    /// The cube-slice view `(side, plane_sum, coords)` of this family:
    /// every instance is a diagonal cross-section of some cube.
    pub fn as_slice_params(&self) -> (u32, u32, u32) {
        match *self {
            FamilySpec::Hypersimplex { ones, zeros } => (1, ones, ones + zeros),
            FamilySpec::DilatedSimplex { dilation, coords } => (dilation, dilation, coords),
            FamilySpec::CubeSlice {
                side,
                coords,
                plane_sum,
            } => (side, plane_sum, coords),
        }
    }

    /// Largest decoration a block of the given size may carry.
    pub fn decoration_bound(&self, block_size: u32) -> u64 {
        let (side, _, _) = self.as_slice_params();
        (u64::from(side) * u64::from(block_size)).saturating_sub(1)
    }

    /// Whether the partition satisfies this family's decoration rule:
    /// the decorations sum to the required total and each lies within
    /// `1 ..= decoration_bound(|block|)`. Assumes `p` is valid and
    /// canonical.
    pub fn admits(&self, p: &DecoratedOsp) -> bool {
        if p.ground_size() != self.ambient_size() {
            return false;
        }
        let mut total: u64 = 0;
        for block in p.blocks() {
            let d = u64::from(block.decoration);
            if d < 1 || d > self.decoration_bound(block.len() as u32) {
                return false;
            }
            total += d;
        }
        total == u64::from(self.decoration_total())
    }

    /// Short name matching the CLI's `--family` values.
    pub fn kind_name(&self) -> &'static str {
        match self {
            FamilySpec::Hypersimplex { .. } => "hypersimplex",
            FamilySpec::DilatedSimplex { .. } => "simplex",
            FamilySpec::CubeSlice { .. } => "slice",
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::Hypersimplex { ones, zeros } => {
                write!(f, "hypersimplex a={ones} b={zeros}")
            }
            FamilySpec::DilatedSimplex { dilation, coords } => {
                write!(f, "simplex r={dilation} n={coords}")
            }
            FamilySpec::CubeSlice {
                side,
                coords,
                plane_sum,
            } => write!(f, "slice r={side} n={coords} s={plane_sum}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::Block;

    fn osp(blocks: &[(&[u32], u32)]) -> DecoratedOsp {
        DecoratedOsp::new(
            blocks
                .iter()
                .map(|(elements, decoration)| Block::new(elements.to_vec(), *decoration))
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn constructors_reject_degenerate_parameters() {
        assert!(FamilySpec::hypersimplex(0, 3).is_err());
        assert!(FamilySpec::hypersimplex(3, 0).is_err());
        assert!(FamilySpec::dilated_simplex(0, 3).is_err());
        assert!(FamilySpec::dilated_simplex(3, 1).is_err());
        assert!(FamilySpec::cube_slice(2, 3, 0).is_err());
        assert!(FamilySpec::cube_slice(2, 3, 6).is_err());
        assert!(FamilySpec::cube_slice(0, 3, 1).is_err());
    }

    #[test]
    fn slice_boundaries_accepted() {
        assert!(FamilySpec::cube_slice(2, 3, 1).is_ok());
        assert!(FamilySpec::cube_slice(2, 3, 5).is_ok());
        assert!(FamilySpec::hypersimplex(1, 1).is_ok());
    }

    #[test]
    fn single_block_admissible_for_hypersimplex() {
        let family = FamilySpec::hypersimplex(2, 2).unwrap();
        assert!(family.admits(&osp(&[(&[1, 2, 3, 4], 2)])));
    }

    #[test]
    fn single_block_admissible_for_dilated_simplex() {
        // The relaxed bound dilation * |block| - 1 admits the full-total
        // single block, which a literal bound of dilation - 1 would not.
        let family = FamilySpec::dilated_simplex(3, 3).unwrap();
        assert!(family.admits(&osp(&[(&[1, 2, 3], 3)])));
    }

    #[test]
    fn singleton_block_violates_hypersimplex_bound() {
        let family = FamilySpec::hypersimplex(2, 2).unwrap();
        assert!(!family.admits(&osp(&[(&[1], 1), (&[2, 3, 4], 1)])));
    }

    #[test]
    fn wrong_total_is_inadmissible() {
        let family = FamilySpec::hypersimplex(2, 2).unwrap();
        assert!(!family.admits(&osp(&[(&[1, 2, 3, 4], 3)])));
    }

    #[test]
    fn wrong_ground_size_is_inadmissible() {
        let family = FamilySpec::hypersimplex(2, 2).unwrap();
        assert!(!family.admits(&osp(&[(&[1, 2, 3], 2)])));
    }

    #[test]
    fn slice_view_of_each_family() {
        assert_eq!(
            FamilySpec::hypersimplex(2, 3).unwrap().as_slice_params(),
            (1, 2, 5)
        );
        assert_eq!(
            FamilySpec::dilated_simplex(3, 4).unwrap().as_slice_params(),
            (3, 3, 4)
        );
        assert_eq!(
            FamilySpec::cube_slice(2, 3, 5).unwrap().as_slice_params(),
            (2, 5, 3)
        );
    }

    #[test]
    fn dilated_simplex_matches_diagonal_slice_rule() {
        let simplex = FamilySpec::dilated_simplex(3, 3).unwrap();
        let slice = FamilySpec::cube_slice(3, 3, 3).unwrap();
        let p = osp(&[(&[1, 2], 1), (&[3], 2)]);
        assert_eq!(simplex.admits(&p), slice.admits(&p));
        assert!(simplex.admits(&p));
    }
}
