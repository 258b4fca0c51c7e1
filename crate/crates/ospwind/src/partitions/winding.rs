//! Position labels, winding vectors, levels, and the inverse map.
//!
//! For a canonical partition with decoration total `a`, each element gets
//! a position label: the sum of the decorations of the blocks before its
//! own. Walking the elements in the cyclic order 1 → 2 → … → n → 1 and
//! taking the nonnegative residue mod `a` of each successive label
//! difference gives the winding vector. The residues telescope around the
//! cycle, so their sum (the level) is always a multiple of `a`; the
//! quotient is the winding number.
//!
//! The winding map is injective: labels determine the blocks, block order
//! (labels increase along the partition because the decorations are
//! positive and sum to `a`), and the decorations themselves, which is
//! exactly how [`unwind`] reconstructs the partition.

use super::family::FamilySpec;
use super::{Block, DecoratedOsp, PartitionError};
use std::collections::BTreeMap;
use std::fmt;

/// Winding data of one canonical decorated ordered set partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WindingData {
    /// Position label of each element; index `e - 1` holds the label of
    /// element `e`. Elements of the first block have label 0.
    pub positions: Vec<u32>,
    /// Residues of successive label differences along the cycle.
    pub winding_vector: Vec<u32>,
    /// Sum of the winding vector.
    pub level: u64,
    /// `level / modulus`; the division is always exact.
    pub winding_number: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WindingError {
    ModulusMismatch {
        expected: u32,
        given: u32,
    },
    NotAdmissible,
    ZeroModulus,
    EmptyVector,
    ValueOutOfRange {
        index: usize,
        value: u32,
        modulus: u32,
    },
    LevelNotDivisible {
        level: u64,
        modulus: u32,
    },
    NoPreimage(PartitionError),
}

impl fmt::Display for WindingError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::ModulusMismatch { expected, given } => write!(
                f,
                "modulus {given} does not equal the decoration total {expected}"
            ),
            Self::NotAdmissible => write!(f, "partition is not admissible for the family"),
            Self::ZeroModulus => write!(f, "modulus must be positive"),
            Self::EmptyVector => write!(f, "winding vector must be nonempty"),
            Self::ValueOutOfRange {
                index,
                value,
                modulus,
            } => write!(f, "entry {index} is {value}, outside 0..{modulus}"),
            Self::LevelNotDivisible { level, modulus } => {
                write!(f, "level {level} is not divisible by the modulus {modulus}")
            }
            Self::NoPreimage(err) => write!(f, "reconstruction is not a valid partition: {err}"),
        }
    }
}

impl std::error::Error for WindingError {}

impl DecoratedOsp {
    /// Cumulative decoration sums per element. The sums are strictly below
    /// the decoration total (decorations are positive), so the labels are
    /// already reduced representatives.
    fn raw_positions(&self) -> Vec<u32> {
        let mut positions = vec![0u32; self.ground_size() as usize];
        let mut offset = 0u32;
        for block in self.blocks() {
            for &element in &block.elements {
                positions[element as usize - 1] = offset;
            }
            offset += block.decoration;
        }
        positions
    }

    /// Position labels with an explicit modulus, which must equal the
    /// decoration total.
    pub fn position_labels(&self, modulus: u32) -> Result<Vec<u32>, WindingError> {
        let expected = self.decoration_total();
        if modulus != expected {
            return Err(WindingError::ModulusMismatch {
                expected,
                given: modulus,
            });
        }
        Ok(self.raw_positions())
    }

    /// Positions, winding vector, level, and winding number, with the
    /// partition's own decoration total as modulus.
    pub fn winding_data(&self) -> WindingData {
        let modulus = self.decoration_total();
        let positions = self.raw_positions();
        let n = positions.len();
        let mut winding_vector = Vec::with_capacity(n);
        let mut level = 0u64;
        for i in 0..n {
            let here = positions[i];
            let next = positions[(i + 1) % n];
            let diff = if next >= here {
                next - here
            } else {
                modulus - (here - next)
            };
            winding_vector.push(diff);
            level += u64::from(diff);
        }
        debug_assert_eq!(level % u64::from(modulus), 0);
        let winding_number = (level / u64::from(modulus)) as u32;
        WindingData {
            positions,
            winding_vector,
            level,
            winding_number,
        }
    }
}

/// Winding data of a partition admissible for the family; errs when the
/// admissibility rule fails.
pub fn winding_vector(p: &DecoratedOsp, family: &FamilySpec) -> Result<WindingData, WindingError> {
    if !family.admits(p) {
        return Err(WindingError::NotAdmissible);
    }
    Ok(p.winding_data())
}

/// Reconstructs the unique canonical partition with the given winding
/// vector: prefix sums mod `modulus` recover the position labels,
/// elements sharing a label share a block, blocks are ordered by
/// increasing label, and each decoration is the gap to the next label
/// (the last gap closes to the modulus).
pub fn unwind(winding: &[u32], modulus: u32) -> Result<DecoratedOsp, WindingError> {
    if modulus == 0 {
        return Err(WindingError::ZeroModulus);
    }
    if winding.is_empty() {
        return Err(WindingError::EmptyVector);
    }
    let mut level = 0u64;
    for (index, &value) in winding.iter().enumerate() {
        if value >= modulus {
            return Err(WindingError::ValueOutOfRange {
                index,
                value,
                modulus,
            });
        }
        level += u64::from(value);
    }
    if !level.is_multiple_of(u64::from(modulus)) {
        return Err(WindingError::LevelNotDivisible { level, modulus });
    }
    let mut groups: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
    let mut label = 0u32;
    for (i, &value) in winding.iter().enumerate() {
        groups.entry(label).or_default().push(i as u32 + 1);
        label = ((u64::from(label) + u64::from(value)) % u64::from(modulus)) as u32;
    }
    let grouped: Vec<(u32, Vec<u32>)> = groups.into_iter().collect();
    let mut blocks = Vec::with_capacity(grouped.len());
    for i in 0..grouped.len() {
        let next_label = grouped
            .get(i + 1)
            .map(|(label, _)| *label)
            .unwrap_or(modulus);
        blocks.push(Block::new(grouped[i].1.clone(), next_label - grouped[i].0));
    }
    DecoratedOsp::new(blocks).map_err(WindingError::NoPreimage)
}

/// All tuples in `{0, …, side-1}^coords` whose coordinate sum is
/// divisible by `side`, sorted lexicographically. There are
/// `side^(coords-1)` of them.
pub fn modular_section(side: u32, coords: u32) -> Vec<Vec<u32>> {
    assert!(
        side >= 1 && coords >= 1,
        "modular_section requires side >= 1 and coords >= 1"
    );
    let n = coords as usize;
    let mut out = Vec::new();
    let mut tuple = vec![0u32; n];
    'outer: loop {
        let sum: u64 = tuple[..n - 1].iter().map(|&v| u64::from(v)).sum();
        tuple[n - 1] = ((u64::from(side) - sum % u64::from(side)) % u64::from(side)) as u32;
        out.push(tuple.clone());
        for j in (0..n - 1).rev() {
            if tuple[j] + 1 < side {
                tuple[j] += 1;
                for t in &mut tuple[j + 1..n - 1] {
                    *t = 0;
                }
                continue 'outer;
            }
        }
        break;
    }
    out.sort();
    out
}
