//! Decorated ordered set partitions of `{1, …, n}` and their canonical
//! text encoding.
//!
//! A decorated ordered set partition is an ordered sequence of disjoint
//! nonempty blocks covering `{1, …, n}`, each block carrying a positive
//! integer decoration. The canonical form used everywhere in this crate
//! places the element 1 in the first block; enumeration and the winding
//! operations require it.
//!
//! The text encoding joins blocks with `|`, writing each block as
//! `{e1,e2,...}_d` with elements ascending, e.g.
//! `{1,5,6}_2|{2,9}_1|{4,10,12}_1|{3,7,8,11}_3`. Parsing round-trips
//! exactly.

pub mod enumerate;
pub mod family;
pub mod winding;

pub use enumerate::{count_admissible, enumerate, grading_histogram, Enumeration};
pub use family::{FamilyError, FamilySpec};
pub use winding::{modular_section, unwind, winding_vector, WindingData, WindingError};

use std::fmt;
use std::str::FromStr;

/// One block of a decorated ordered set partition: a set of elements
/// (kept sorted ascending) plus a positive integer decoration.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Block {
    pub elements: Vec<u32>,
    pub decoration: u32,
}

impl Block {
    pub fn new(elements: Vec<u32>, decoration: u32) -> Self {
        Block {
            elements,
            decoration,
        }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

/// An ordered set partition of `{1, …, n}` whose blocks carry positive
/// integer decorations.
///
/// Instances built through [`DecoratedOsp::new`] or parsed from text are
/// always valid and canonical (1 in the first block).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DecoratedOsp {
    ground_size: u32,
    blocks: Vec<Block>,
}

/// Violations of the decorated-ordered-set-partition invariants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PartitionError {
    EmptyBlock { index: usize },
    OverlappingBlocks { element: u32 },
    MissingElements { element: u32 },
    ElementOutOfRange { element: u32 },
    NonPositiveDecoration { index: usize },
    NotCanonical,
    DecorationTotalOverflow,
}

impl fmt::Display for PartitionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::EmptyBlock { index } => write!(f, "block {index} is empty"),
            Self::OverlappingBlocks { element } => {
                write!(f, "element {element} appears in more than one block")
            }
            Self::MissingElements { element } => {
                write!(f, "element {element} of the ground set is missing")
            }
            Self::ElementOutOfRange { element } => {
                write!(f, "element {element} is not a positive integer")
            }
            Self::NonPositiveDecoration { index } => {
                write!(f, "block {index} has a non-positive decoration")
            }
            Self::NotCanonical => write!(f, "element 1 does not lie in the first block"),
            Self::DecorationTotalOverflow => write!(f, "decoration total does not fit in u32"),
        }
    }
}

impl std::error::Error for PartitionError {}

impl DecoratedOsp {
    /// Builds a decorated ordered set partition, sorting elements within
    /// each block and checking every invariant, including canonical form.
    pub fn new(mut blocks: Vec<Block>) -> Result<Self, PartitionError> {
        for block in &mut blocks {
            block.elements.sort_unstable();
        }
        let ground_size: usize = blocks.iter().map(Block::len).sum();
        let osp = DecoratedOsp {
            ground_size: ground_size as u32,
            blocks,
        };
        osp.validate()?;
        Ok(osp)
    }

    /// Construction path for the enumerator, which produces blocks that
    /// are disjoint, covering, sorted, and canonical by construction.
    pub(crate) fn from_parts_unchecked(ground_size: u32, blocks: Vec<Block>) -> Self {
        let osp = DecoratedOsp {
            ground_size,
            blocks,
        };
        debug_assert!(osp.validate().is_ok());
        osp
    }

    /// Ground-set size n; the elements are `{1, …, n}`.
    pub fn ground_size(&self) -> u32 {
        self.ground_size
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// Sum of all decorations; this is also the winding modulus.
    pub fn decoration_total(&self) -> u32 {
        self.blocks.iter().map(|b| b.decoration).sum()
    }

    /// Re-checks every invariant: blocks nonempty with positive
    /// decorations, elements partition `{1, …, n}` exactly, and 1 lies in
    /// the first block.
    pub fn validate(&self) -> Result<(), PartitionError> {
        let n = self.ground_size as usize;
        if self.blocks.is_empty() || n == 0 {
            return Err(PartitionError::MissingElements { element: 1 });
        }
        let mut total: u64 = 0;
        let mut seen = vec![false; n + 1];
        for (index, block) in self.blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(PartitionError::EmptyBlock { index });
            }
            if block.decoration == 0 {
                return Err(PartitionError::NonPositiveDecoration { index });
            }
            total += u64::from(block.decoration);
            for &element in &block.elements {
                if element == 0 {
                    return Err(PartitionError::ElementOutOfRange { element });
                }
                if element as usize > n {
                    // Some element of 1..=n must then be absent; report it below.
                    continue;
                }
                if seen[element as usize] {
                    return Err(PartitionError::OverlappingBlocks { element });
                }
                seen[element as usize] = true;
            }
        }
        if let Some(missing) = (1..=n).find(|&e| !seen[e]) {
            return Err(PartitionError::MissingElements {
                element: missing as u32,
            });
        }
        if total > u64::from(u32::MAX) {
            return Err(PartitionError::DecorationTotalOverflow);
        }
        if !self.blocks[0].elements.contains(&1) {
            return Err(PartitionError::NotCanonical);
        }
        Ok(())
    }
}

impl fmt::Display for DecoratedOsp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, block) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str("|")?;
            }
            f.write_str("{")?;
            for (j, element) in block.elements.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{element}")?;
            }
            write!(f, "}}_{}", block.decoration)?;
        }
        Ok(())
    }
}

/// Failures when reading the canonical text encoding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseError {
    Syntax(String),
    Invalid(PartitionError),
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Syntax(msg) => write!(f, "syntax error: {msg}"),
            Self::Invalid(err) => write!(f, "invalid partition: {err}"),
        }
    }
}

impl std::error::Error for ParseError {}

impl FromStr for DecoratedOsp {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let syntax = |msg: &str| ParseError::Syntax(msg.to_string());
        if s.is_empty() {
            return Err(syntax("empty input"));
        }
        let mut blocks = Vec::new();
        for part in s.split('|') {
            let body = part
                .strip_prefix('{')
                .ok_or_else(|| syntax("block must start with '{'"))?;
            let (elements_str, decoration_str) = body
                .split_once("}_")
                .ok_or_else(|| syntax("block must look like '{e1,e2,...}_d'"))?;
            let mut elements = Vec::new();
            for token in elements_str.split(',') {
                let element: u32 = token
                    .parse()
                    .map_err(|_| syntax(&format!("bad element {token:?}")))?;
                elements.push(element);
            }
            let decoration: u32 = decoration_str
                .parse()
                .map_err(|_| syntax(&format!("bad decoration {decoration_str:?}")))?;
            blocks.push(Block::new(elements, decoration));
        }
        DecoratedOsp::new(blocks).map_err(ParseError::Invalid)
    }
}
