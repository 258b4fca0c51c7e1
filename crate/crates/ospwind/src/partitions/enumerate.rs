//! Exhaustive enumeration of canonical admissible decorated ordered set
//! partitions.
//!
//! The stream is deterministic: block structures are visited in
//! lexicographic order of the block-assignment word (element 1 is pinned
//! to block 0; each later element picks a block index), and for each
//! structure the decoration tuples are visited in lexicographic order.
//! Both layers prune exactly — every structure reached admits at least
//! one decoration tuple, and every decoration branch completes — so the
//! walk touches no dead candidates.

use super::family::{FamilyError, FamilySpec};
use super::{Block, DecoratedOsp};
use crate::ehrhart::HStarVector;
use num_bigint::BigUint;
use num_traits::Zero;

/// Streams every canonical admissible partition of the family exactly
/// once, in the deterministic order described in the module docs.
pub fn enumerate(family: &FamilySpec) -> Result<Enumeration, FamilyError> {
    family.validate()?;
    Ok(Enumeration::new(*family))
}

/// Number of canonical admissible partitions.
pub fn count_admissible(family: &FamilySpec) -> Result<BigUint, FamilyError> {
    Ok(BigUint::from(enumerate(family)?.count() as u64))
}

/// Counts partitions by winding number: entry `j` is the number of
/// enumerated partitions with winding number `j`. The vector has the full
/// internal length `n`; trailing zeros are trimmed only for display.
pub fn grading_histogram(family: &FamilySpec) -> Result<HStarVector, FamilyError> {
    let mut counts = vec![BigUint::zero(); family.hstar_len()];
    for p in enumerate(family)? {
        counts[p.winding_data().winding_number as usize] += 1u32;
    }
    Ok(HStarVector::new(counts))
}

/// Lazy iterator over the admissible partitions of one family instance.
pub struct Enumeration {
    family: FamilySpec,
    total: u32,
    ground: u32,
    structures: BlockStructures,
    pending: Option<Pending>,
}

struct Pending {
    blocks: Vec<Vec<u32>>,
    compositions: Vec<Vec<u32>>,
    next: usize,
}

impl Enumeration {
    fn new(family: FamilySpec) -> Self {
        Enumeration {
            family,
            total: family.decoration_total(),
            ground: family.ambient_size(),
            structures: BlockStructures::new(&family),
            pending: None,
        }
    }
}

impl Iterator for Enumeration {
    type Item = DecoratedOsp;

    fn next(&mut self) -> Option<DecoratedOsp> {
        loop {
            if let Some(pending) = &mut self.pending {
                if pending.next < pending.compositions.len() {
                    let decorations = &pending.compositions[pending.next];
                    pending.next += 1;
                    let blocks = pending
                        .blocks
                        .iter()
                        .zip(decorations)
                        .map(|(elements, &decoration)| Block::new(elements.clone(), decoration))
                        .collect();
                    return Some(DecoratedOsp::from_parts_unchecked(self.ground, blocks));
                }
                self.pending = None;
            }
            let blocks = self.structures.next()?;
            let uppers: Vec<u32> = blocks
                .iter()
                .map(|b| {
                    // clamp to the total so the bound always fits in u32
                    self.family
                        .decoration_bound(b.len() as u32)
                        .min(u64::from(self.total)) as u32
                })
                .collect();
            let compositions = bounded_compositions(self.total, &uppers);
            debug_assert!(!compositions.is_empty());
            self.pending = Some(Pending {
                blocks,
                compositions,
                next: 0,
            });
        }
    }
}

/// All tuples `(d_1, …, d_k)` with `1 <= d_i <= upper[i]` summing to
/// `total`, in lexicographic order. Bounds are chosen so that every
/// branch extends to a full tuple.
pub(crate) fn bounded_compositions(total: u32, upper: &[u32]) -> Vec<Vec<u32>> {
    let parts = upper.len();
    let mut out = Vec::new();
    if parts == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    let mut suffix = vec![0u64; parts + 1];
    for i in (0..parts).rev() {
        suffix[i] = suffix[i + 1] + u64::from(upper[i]);
    }
    let mut current = Vec::with_capacity(parts);
    descend(u64::from(total), 0, upper, &suffix, &mut current, &mut out);
    out
}

fn descend(
    remaining: u64,
    index: usize,
    upper: &[u32],
    suffix: &[u64],
    current: &mut Vec<u32>,
    out: &mut Vec<Vec<u32>>,
) {
    let parts = upper.len();
    if index == parts {
        debug_assert_eq!(remaining, 0);
        out.push(current.clone());
        return;
    }
    let tail_min = (parts - index - 1) as u64;
    let tail_max = suffix[index + 1];
    let lo = remaining.saturating_sub(tail_max).max(1);
    let hi = u64::from(upper[index]).min(remaining.saturating_sub(tail_min));
    let mut value = lo;
    while value <= hi {
        current.push(value as u32);
        descend(remaining - value, index + 1, upper, suffix, current, out);
        current.pop();
        value += 1;
    }
}

const UNSET: usize = usize::MAX;

/// Depth-first generator of block structures: ordered set partitions of
/// `{1, …, n}` with 1 in the first block, every block at least
/// `min_block` elements, and at most `max_blocks` blocks. Yields block
/// element lists in lexicographic assignment-word order.
struct BlockStructures {
    ground: usize,
    min_block: u32,
    max_blocks: usize,
    /// `assignment[e]` is the block index of element `e + 1`; slot 0 is
    /// pinned to block 0, the slot currently being decided holds the last
    /// value tried (or `UNSET`).
    assignment: Vec<usize>,
    sizes: Vec<u32>,
    used: usize,
    high: usize,
    /// Nonempty blocks still below `min_block` elements.
    small: usize,
    pos: usize,
    state: WalkState,
}

#[derive(PartialEq)]
enum WalkState {
    Fresh,
    Running,
    Done,
}

impl BlockStructures {
    fn new(family: &FamilySpec) -> Self {
        let (side, plane_sum, coords) = family.as_slice_params();
        let ground = coords as usize;
        let min_block = if family.decoration_bound(1) >= 1 {
            1
        } else {
            2
        };
        // Block-count caps: one decoration >= 1 per block; the decoration
        // bounds must be able to absorb the total (their sum over any
        // structure with k blocks is side*n - k); and each block needs
        // min_block elements.
        let slack = u64::from(side) * u64::from(coords) - u64::from(plane_sum);
        let max_blocks = u64::from(plane_sum)
            .min(slack)
            .min(coords as u64 / u64::from(min_block)) as usize;
        BlockStructures {
            ground,
            min_block,
            max_blocks,
            assignment: vec![UNSET; ground.max(1)],
            sizes: vec![0; ground.max(1)],
            used: 0,
            high: 0,
            small: 0,
            pos: 1,
            state: if max_blocks == 0 {
                WalkState::Done
            } else {
                WalkState::Fresh
            },
        }
    }

    fn feasible(&self, value: usize, remaining: usize) -> bool {
        let was_empty = self.sizes[value] == 0;
        let new_high = self.high.max(value);
        let new_used = self.used + usize::from(was_empty);
        let gaps = new_high + 1 - new_used;
        let small_after = if self.min_block < 2 {
            0
        } else if was_empty {
            self.small + 1
        } else if self.sizes[value] == 1 {
            self.small - 1
        } else {
            self.small
        };
        gaps * self.min_block as usize + small_after <= remaining
    }

    fn first_feasible(&self, from: usize) -> Option<usize> {
        let remaining = self.ground - 1 - self.pos;
        let mut value = from;
        while value < self.max_blocks {
            if self.feasible(value, remaining) {
                return Some(value);
            }
            if value > self.high {
                // past the high block index the gap deficit only grows
                return None;
            }
            value += 1;
        }
        None
    }

    fn place(&mut self, pos: usize, value: usize) {
        self.assignment[pos] = value;
        self.sizes[value] += 1;
        if self.sizes[value] == 1 {
            self.used += 1;
            if value > self.high {
                self.high = value;
            }
            if self.min_block == 2 {
                self.small += 1;
            }
        } else if self.sizes[value] == 2 && self.min_block == 2 {
            self.small -= 1;
        }
    }

    fn unplace(&mut self, pos: usize) {
        let value = self.assignment[pos];
        self.sizes[value] -= 1;
        if self.sizes[value] == 0 {
            self.used -= 1;
            if self.min_block == 2 {
                self.small -= 1;
            }
            if value == self.high {
                // element 1 keeps block 0 occupied, so the scan terminates
                let mut h = value;
                while h > 0 && self.sizes[h] == 0 {
                    h -= 1;
                }
                self.high = h;
            }
        } else if self.sizes[value] == 1 && self.min_block == 2 {
            self.small += 1;
        }
    }

    fn build(&self) -> Vec<Vec<u32>> {
        debug_assert_eq!(self.used, self.high + 1);
        let mut blocks = vec![Vec::new(); self.high + 1];
        for (i, &b) in self.assignment.iter().enumerate().take(self.ground) {
            blocks[b].push(i as u32 + 1);
        }
        blocks
    }
}

impl Iterator for BlockStructures {
    type Item = Vec<Vec<u32>>;

    fn next(&mut self) -> Option<Vec<Vec<u32>>> {
        match self.state {
            WalkState::Done => return None,
            WalkState::Fresh => {
                self.state = WalkState::Running;
                self.assignment[0] = 0;
                self.sizes[0] = 1;
                self.used = 1;
                self.high = 0;
                self.small = usize::from(self.min_block == 2);
                if self.ground == 1 {
                    self.state = WalkState::Done;
                    if self.small == 0 {
                        return Some(vec![vec![1]]);
                    }
                    return None;
                }
                self.pos = 1;
                self.assignment[1] = UNSET;
            }
            WalkState::Running => {}
        }
        loop {
            let from = match self.assignment[self.pos] {
                UNSET => 0,
                last => last + 1,
            };
            match self.first_feasible(from) {
                Some(value) => {
                    self.place(self.pos, value);
                    if self.pos == self.ground - 1 {
                        let item = self.build();
                        self.unplace(self.pos);
                        return Some(item);
                    }
                    self.pos += 1;
                    self.assignment[self.pos] = UNSET;
                }
                None => {
                    if self.pos == 1 {
                        self.state = WalkState::Done;
                        return None;
                    }
                    self.assignment[self.pos] = UNSET;
                    self.pos -= 1;
                    self.unplace(self.pos);
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn strings(family: &FamilySpec) -> Vec<String> {
        enumerate(family).unwrap().map(|p| p.to_string()).collect()
    }

    #[test]
    fn hypersimplex_2_2_exact_sequence() {
        let family = FamilySpec::hypersimplex(2, 2).unwrap();
        assert_eq!(
            strings(&family),
            vec![
                "{1,2,3,4}_2",
                "{1,2}_1|{3,4}_1",
                "{1,3}_1|{2,4}_1",
                "{1,4}_1|{2,3}_1",
            ]
        );
    }

    #[test]
    fn known_cardinalities() {
        let count = |f: &FamilySpec| count_admissible(f).unwrap();
        assert_eq!(
            count(&FamilySpec::dilated_simplex(3, 3).unwrap()),
            BigUint::from(9u32)
        );
        assert_eq!(
            count(&FamilySpec::dilated_simplex(4, 4).unwrap()),
            BigUint::from(64u32)
        );
        assert_eq!(
            count(&FamilySpec::hypersimplex(2, 3).unwrap()),
            BigUint::from(11u32)
        );
        assert_eq!(
            count(&FamilySpec::cube_slice(2, 3, 3).unwrap()),
            BigUint::from(6u32)
        );
    }

    #[test]
    fn total_one_forces_single_block() {
        let family = FamilySpec::hypersimplex(1, 3).unwrap();
        assert_eq!(strings(&family), vec!["{1,2,3,4}_1"]);
    }

    #[test]
    fn one_coordinate_slice_has_single_partition() {
        let family = FamilySpec::cube_slice(3, 1, 2).unwrap();
        assert_eq!(strings(&family), vec!["{1}_2"]);
    }

    #[test]
    fn enumeration_is_deterministic() {
        let family = FamilySpec::cube_slice(3, 4, 5).unwrap();
        assert_eq!(strings(&family), strings(&family));
    }

    #[test]
    fn every_enumerated_partition_is_valid_and_admissible() {
        let family = FamilySpec::cube_slice(2, 4, 3).unwrap();
        for p in enumerate(&family).unwrap() {
            p.validate().unwrap();
            assert!(family.admits(&p));
        }
    }

    #[test]
    fn bounded_compositions_basics() {
        assert_eq!(
            bounded_compositions(3, &[5, 2]),
            vec![vec![1, 2], vec![2, 1]]
        );
        assert_eq!(bounded_compositions(3, &[2, 2, 2]), vec![vec![1, 1, 1]]);
        assert_eq!(bounded_compositions(2, &[1, 1, 1]), Vec::<Vec<u32>>::new());
        assert_eq!(bounded_compositions(0, &[]), vec![Vec::<u32>::new()]);
        assert_eq!(bounded_compositions(1, &[]), Vec::<Vec<u32>>::new());
    }

    // Independent oracle: filter every assignment word and every
    // unbounded decoration tuple through the admissibility predicate.
    fn oracle(family: &FamilySpec) -> Vec<String> {
        let n = family.ambient_size() as usize;
        let total = family.decoration_total();
        let mut out = Vec::new();
        let slots = n - 1;
        let mut word = vec![0usize; slots];
        loop {
            if let Some(blocks) = blocks_from_word(n, &word) {
                for decorations in naive_compositions(total, blocks.len()) {
                    let candidate = DecoratedOsp::new(
                        blocks
                            .iter()
                            .zip(&decorations)
                            .map(|(elements, &d)| Block::new(elements.clone(), d))
                            .collect(),
                    )
                    .unwrap();
                    if family.admits(&candidate) {
                        out.push(candidate.to_string());
                    }
                }
            }
            let mut carry = slots;
            while carry > 0 {
                carry -= 1;
                if word[carry] + 1 < n {
                    word[carry] += 1;
                    for w in &mut word[carry + 1..] {
                        *w = 0;
                    }
                    break;
                }
                if carry == 0 {
                    return out;
                }
            }
            if slots == 0 {
                return out;
            }
        }
    }

    fn blocks_from_word(n: usize, word: &[usize]) -> Option<Vec<Vec<u32>>> {
        let mut blocks: Vec<Vec<u32>> = vec![Vec::new(); n];
        blocks[0].push(1);
        for (slot, &b) in word.iter().enumerate() {
            blocks[b].push(slot as u32 + 2);
        }
        let count = blocks.iter().rposition(|b| !b.is_empty()).unwrap() + 1;
        if blocks[..count].iter().any(|b| b.is_empty()) {
            return None;
        }
        blocks.truncate(count);
        Some(blocks)
    }

    fn naive_compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
        fn go(remaining: u32, parts: usize, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
            if parts == 0 {
                if remaining == 0 {
                    out.push(current.clone());
                }
                return;
            }
            for v in 1..=remaining {
                current.push(v);
                go(remaining - v, parts - 1, current, out);
                current.pop();
            }
        }
        let mut out = Vec::new();
        go(total, parts, &mut Vec::new(), &mut out);
        out
    }

    #[test]
    fn matches_filtering_oracle_in_order() {
        let families = [
            FamilySpec::hypersimplex(2, 3).unwrap(),
            FamilySpec::hypersimplex(3, 2).unwrap(),
            FamilySpec::dilated_simplex(3, 4).unwrap(),
            FamilySpec::dilated_simplex(2, 4).unwrap(),
            FamilySpec::cube_slice(2, 4, 5).unwrap(),
            FamilySpec::cube_slice(3, 3, 4).unwrap(),
            FamilySpec::cube_slice(1, 4, 2).unwrap(),
        ];
        for family in &families {
            assert_eq!(strings(family), oracle(family), "family {family}");
        }
    }

    #[test]
    fn grading_histograms_match_published_columns() {
        let trimmed = |f: &FamilySpec| {
            grading_histogram(f)
                .unwrap()
                .trimmed()
                .coeffs()
                .iter()
                .map(|c| u64::try_from(c).unwrap())
                .collect::<Vec<_>>()
        };
        assert_eq!(trimmed(&FamilySpec::hypersimplex(2, 2).unwrap()), [1, 2, 1]);
        assert_eq!(
            trimmed(&FamilySpec::dilated_simplex(3, 3).unwrap()),
            [1, 7, 1]
        );
        let slices: Vec<Vec<u64>> = (1..=5)
            .map(|s| trimmed(&FamilySpec::cube_slice(2, 3, s).unwrap()))
            .collect();
        assert_eq!(
            slices,
            [vec![1], vec![1, 3], vec![1, 4, 1], vec![1, 3], vec![1]]
        );
    }

    #[test]
    fn histogram_keeps_internal_length() {
        let family = FamilySpec::hypersimplex(2, 2).unwrap();
        assert_eq!(grading_histogram(&family).unwrap().len(), 4);
    }

    #[test]
    fn invalid_family_is_rejected() {
        let bogus = FamilySpec::Hypersimplex { ones: 0, zeros: 4 };
        assert!(enumerate(&bogus).is_err());
        assert!(count_admissible(&bogus).is_err());
        assert!(grading_histogram(&bogus).is_err());
    }
}
