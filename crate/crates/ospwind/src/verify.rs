//! The conjecture harness: per-instance comparison of the winding
//! histogram against the Ehrhart h*-vector, structural property checks,
//! and deterministic parallel parameter sweeps.
//!
//! A histogram/h* mismatch is data, not an error — it would either
//! refute a conjecture or expose a bug, so the report carries sample
//! partitions per winding class instead of aborting.

use crate::ehrhart::{self, HStarVector};
use crate::partitions::{enumerate, modular_section, FamilyError, FamilySpec};
use num_bigint::BigUint;
use num_traits::Zero;
use std::collections::BTreeSet;
use std::fmt;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::{Duration, Instant};

pub const CHECK_LEVEL_DIVISIBILITY: &str = "level-divisibility";
pub const CHECK_INJECTIVITY: &str = "injectivity";
pub const CHECK_BIJECTION: &str = "bijection";
pub const CHECK_COUNT_IDENTITY: &str = "count-identity";

/// How many sample partitions per winding class a mismatching report keeps.
pub const SAMPLES_PER_CLASS: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

impl CheckStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::Skipped => "skipped",
        }
    }
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One named structural property outcome.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub status: CheckStatus,
    pub detail: Option<String>,
}

impl CheckOutcome {
    fn pass(name: &'static str) -> Self {
        CheckOutcome {
            name,
            status: CheckStatus::Pass,
            detail: None,
        }
    }

    fn skipped(name: &'static str) -> Self {
        CheckOutcome {
            name,
            status: CheckStatus::Skipped,
            detail: None,
        }
    }

    fn fail(name: &'static str, detail: String) -> Self {
        CheckOutcome {
            name,
            status: CheckStatus::Fail,
            detail: Some(detail),
        }
    }

    fn from_witness(name: &'static str, witness: Option<String>) -> Self {
        match witness {
            None => Self::pass(name),
            Some(detail) => Self::fail(name, detail),
        }
    }
}

/// Sample partitions of one winding class, in enumeration order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WindingClassSamples {
    pub winding_number: u32,
    pub partitions: Vec<String>,
}

/// Everything learned about one family instance.
#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub family: FamilySpec,
    /// Winding histogram, trimmed.
    pub histogram: HStarVector,
    /// Ehrhart h*-vector, trimmed.
    pub hstar: HStarVector,
    /// Trimmed vectors agree element-wise.
    pub matches: bool,
    pub total_count: BigUint,
    /// Eulerian count for hypersimplices, `dilation^(coords-1)` for
    /// dilated simplices; no formula is claimed for general slices.
    pub expected_count: Option<BigUint>,
    pub checks: Vec<CheckOutcome>,
    /// Wall time spent on this instance. Diagnostic only; serialized
    /// outputs omit it so sweeps stay byte-identical across job counts.
    pub elapsed: Duration,
    /// First partitions of every winding class, populated on mismatch.
    pub winding_classes: Option<Vec<WindingClassSamples>>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.matches && self.checks.iter().all(|c| c.status != CheckStatus::Fail)
    }
}

/// Closed-form cardinality of the admissible set, where one is known.
pub fn expected_count(family: &FamilySpec) -> Option<BigUint> {
    match *family {
        FamilySpec::Hypersimplex { ones, zeros } => Some(ehrhart::eulerian(
            u64::from(ones) + u64::from(zeros) - 1,
            i64::from(ones) - 1,
        )),
        FamilySpec::DilatedSimplex { dilation, coords } => {
            Some(BigUint::from(dilation).pow(coords - 1))
        }
        FamilySpec::CubeSlice { .. } => None,
    }
}

/// Enumerates the family once, gathering the winding histogram and the
/// structural checks, computes the Ehrhart side independently, and
/// compares the trimmed vectors.
pub fn verify_instance(family: &FamilySpec) -> Result<VerificationReport, FamilyError> {
    family.validate()?;
    let start = Instant::now();
    let modulus = family.winding_modulus();
    let len = family.hstar_len();

    let mut histogram = vec![BigUint::zero(); len];
    let mut samples: Vec<Vec<String>> = vec![Vec::new(); len];
    let mut image: BTreeSet<Vec<u32>> = BTreeSet::new();
    let mut level_witness: Option<String> = None;
    let mut duplicate_witness: Option<String> = None;
    for p in enumerate(family)? {
        let data = p.winding_data();
        if data.level % u64::from(modulus) != 0 && level_witness.is_none() {
            level_witness = Some(format!("{p} has level {}", data.level));
        }
        let class = data.winding_number as usize;
        if samples[class].len() < SAMPLES_PER_CLASS {
            samples[class].push(p.to_string());
        }
        if !image.insert(data.winding_vector) && duplicate_witness.is_none() {
            duplicate_witness = Some(format!("{p} repeats an earlier winding vector"));
        }
        histogram[class] += 1u32;
    }
    let total_count: BigUint = histogram.iter().sum();
    let histogram = HStarVector::new(histogram).trimmed();

    let (side, plane_sum, coords) = family.as_slice_params();
    let hstar = ehrhart::hstar_slice(side, plane_sum, coords)
        .expect("valid family parameters define a valid slice")
        .trimmed();
    let matches = histogram == hstar;

    let bijection = match *family {
        FamilySpec::DilatedSimplex { dilation, coords } => {
            let section: BTreeSet<Vec<u32>> =
                modular_section(dilation, coords).into_iter().collect();
            let missing = section.difference(&image).next();
            let extra = image.difference(&section).next();
            match (missing, extra) {
                (None, None) => CheckOutcome::pass(CHECK_BIJECTION),
                (m, e) => {
                    let mut parts = Vec::new();
                    if let Some(point) = m {
                        parts.push(format!("section point {point:?} has no preimage"));
                    }
                    if let Some(vector) = e {
                        parts.push(format!(
                            "winding vector {vector:?} lies outside the section"
                        ));
                    }
                    CheckOutcome::fail(CHECK_BIJECTION, parts.join("; "))
                }
            }
        }
        _ => CheckOutcome::skipped(CHECK_BIJECTION),
    };

    let expected = expected_count(family);
    let count_identity = match &expected {
        Some(value) if *value == total_count => CheckOutcome::pass(CHECK_COUNT_IDENTITY),
        Some(value) => CheckOutcome::fail(
            CHECK_COUNT_IDENTITY,
            format!("expected {value} partitions, enumerated {total_count}"),
        ),
        None => CheckOutcome::skipped(CHECK_COUNT_IDENTITY),
    };

    let checks = vec![
        CheckOutcome::from_witness(CHECK_LEVEL_DIVISIBILITY, level_witness),
        CheckOutcome::from_witness(CHECK_INJECTIVITY, duplicate_witness),
        bijection,
        count_identity,
    ];

    let winding_classes = if matches {
        None
    } else {
        Some(
            samples
                .into_iter()
                .enumerate()
                .filter(|(_, partitions)| !partitions.is_empty())
                .map(|(winding_number, partitions)| WindingClassSamples {
                    winding_number: winding_number as u32,
                    partitions,
                })
                .collect(),
        )
    };

    Ok(VerificationReport {
        family: *family,
        histogram,
        hstar,
        matches,
        total_count,
        expected_count: expected,
        checks,
        elapsed: start.elapsed(),
        winding_classes,
    })
}

/// Witnesses for the winding-image/modular-section comparison of one
/// dilated simplex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BijectionOutcome {
    pub matched: bool,
    pub image_size: usize,
    pub section_size: usize,
    /// Lexicographically first section point with no preimage.
    pub missing: Option<Vec<u32>>,
    /// Lexicographically first winding vector outside the section.
    pub extra: Option<Vec<u32>>,
}

/// Compares the set of winding vectors of the dilated simplex against
/// the modular section of matching parameters.
pub fn check_bijection_simplex(
    dilation: u32,
    coords: u32,
) -> Result<BijectionOutcome, FamilyError> {
    let family = FamilySpec::dilated_simplex(dilation, coords)?;
    let image: BTreeSet<Vec<u32>> = enumerate(&family)?
        .map(|p| p.winding_data().winding_vector)
        .collect();
    let section: BTreeSet<Vec<u32>> = modular_section(dilation, coords).into_iter().collect();
    let missing = section.difference(&image).next().cloned();
    let extra = image.difference(&section).next().cloned();
    Ok(BijectionOutcome {
        matched: missing.is_none() && extra.is_none(),
        image_size: image.len(),
        section_size: section.len(),
        missing,
        extra,
    })
}

/// Verifies every instance, preserving input order. The report sequence
/// is independent of `jobs`; only wall time varies.
pub fn sweep(
    instances: &[FamilySpec],
    jobs: usize,
) -> Result<Vec<VerificationReport>, FamilyError> {
    for family in instances {
        family.validate()?;
    }
    let jobs = jobs.max(1).min(instances.len().max(1));
    if jobs == 1 {
        return instances.iter().map(verify_instance).collect();
    }
    let cursor = AtomicUsize::new(0);
    let mut indexed: Vec<(usize, VerificationReport)> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..jobs)
            .map(|_| {
                scope.spawn(|| {
                    let mut local = Vec::new();
                    loop {
                        let i = cursor.fetch_add(1, Ordering::Relaxed);
                        if i >= instances.len() {
                            break;
                        }
                        let report =
                            verify_instance(&instances[i]).expect("instances validated above");
                        local.push((i, report));
                    }
                    local
                })
            })
            .collect();
        handles
            .into_iter()
            .flat_map(|handle| handle.join().expect("verify worker panicked"))
            .collect()
    });
    indexed.sort_by_key(|(i, _)| *i);
    Ok(indexed.into_iter().map(|(_, report)| report).collect())
}

/// Hypersimplex instances for 2 <= n <= `max_coords`, ordered by
/// (coords, ones).
pub fn hypersimplex_sweep(max_coords: u32) -> Vec<FamilySpec> {
    let mut out = Vec::new();
    for coords in 2..=max_coords {
        for ones in 1..coords {
            out.push(FamilySpec::Hypersimplex {
                ones,
                zeros: coords - ones,
            });
        }
    }
    out
}

/// Dilated-simplex instances for 1 <= r <= `max_dilation`,
/// 2 <= n <= `max_coords`, ordered by (dilation, coords).
pub fn simplex_sweep(max_dilation: u32, max_coords: u32) -> Vec<FamilySpec> {
    let mut out = Vec::new();
    for dilation in 1..=max_dilation {
        for coords in 2..=max_coords {
            out.push(FamilySpec::DilatedSimplex { dilation, coords });
        }
    }
    out
}

/// Cube-slice instances for 1 <= r <= `max_side`, 1 <= n <= `max_coords`,
/// and every valid plane sum, ordered by (side, coords, plane_sum).
pub fn slice_sweep(max_side: u32, max_coords: u32) -> Vec<FamilySpec> {
    let mut out = Vec::new();
    for side in 1..=max_side {
        for coords in 1..=max_coords {
            out.extend(slice_sweep_at(side, coords).expect("positive parameters"));
        }
    }
    out
}

/// Every slice of one cube: plane sums 1 through `side * coords - 1`.
pub fn slice_sweep_at(side: u32, coords: u32) -> Result<Vec<FamilySpec>, FamilyError> {
    if side == 0 || coords == 0 {
        return Err(FamilyError::SliceParams {
            side,
            coords,
            plane_sum: 0,
        });
    }
    let span = u64::from(side) * u64::from(coords);
    Ok((1..span)
        .map(|plane_sum| FamilySpec::CubeSlice {
            side,
            coords,
            plane_sum: plane_sum as u32,
        })
        .collect())
}
