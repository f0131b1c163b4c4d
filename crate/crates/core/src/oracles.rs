//! Independent brute-force routes used to cross-validate the main
//! implementations: naive filtering of every filling, rational grid
//! sampling of the arrangement, a search-based inverse of the
//! dissection-to-partition map, and two-sided refined tallies.

use crate::bijections::{psi, RefinedCountTable};
use crate::dissections::{enumerate_dissections, Dissection, Labeling};
use crate::partitions::StaircasePartition;
use crate::shi_tableaux::{entry_count, flat, shi_conditions_hold_flat, ShiTableau};
use num_bigint::BigUint;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// Default ceiling on the number of candidate fillings the exhaustive
/// filter will walk.
pub const DEFAULT_CANDIDATE_LIMIT: u128 = 100_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleError {
    /// The (m+1)^(n(n+1)/2) candidate space exceeds the configured limit.
    InstanceTooLarge { candidates: u128, limit: u128 },
    /// No dissection maps to the partition; impossible unless an
    /// implementation is broken.
    NotFound { partition: Vec<usize> },
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::InstanceTooLarge { candidates, limit } => {
                write!(
                    f,
                    "{candidates} candidate fillings exceed the limit {limit}"
                )
            }
            Self::NotFound { partition } => {
                write!(f, "no dissection has initial points {partition:?}")
            }
        }
    }
}

impl std::error::Error for OracleError {}

fn candidate_space(n: usize, m: usize) -> Option<u128> {
    let mut total: u128 = 1;
    for _ in 0..entry_count(n) {
        total = total.checked_mul((m + 1) as u128)?;
    }
    Some(total)
}

/// Every valid Shi tableau found by filtering all fillings of the
/// staircase with values in 0..=m. Deliberately ignorant of the pruning
/// enumerator it is checked against.
pub fn exhaustive_tableaux(n: usize, m: usize) -> Result<Vec<ShiTableau>, OracleError> {
    exhaustive_tableaux_with_limit(n, m, DEFAULT_CANDIDATE_LIMIT)
}

pub fn exhaustive_tableaux_with_limit(
    n: usize,
    m: usize,
    limit: u128,
) -> Result<Vec<ShiTableau>, OracleError> {
    assert!(n >= 1 && m >= 1);
    let candidates = candidate_space(n, m).ok_or(OracleError::InstanceTooLarge {
        candidates: u128::MAX,
        limit,
    })?;
    if candidates > limit {
        return Err(OracleError::InstanceTooLarge { candidates, limit });
    }
    let len = entry_count(n);
    let mut filling = vec![0usize; len];
    let mut out = Vec::new();
    loop {
        if shi_conditions_hold_flat(n, m, &filling) {
            out.push(ShiTableau::new(n, m, &unflatten(n, &filling)).expect("filter accepted"));
        }
        // odometer over the candidate space
        let mut pos = len;
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            if filling[pos] < m {
                filling[pos] += 1;
                break;
            }
            filling[pos] = 0;
        }
    }
}

fn unflatten(n: usize, flat: &[usize]) -> Vec<Vec<usize>> {
    let mut rows = Vec::with_capacity(n);
    let mut at = 0;
    for i in 1..=n {
        rows.push(flat[at..at + (n - i + 1)].to_vec());
        at += n - i + 1;
    }
    rows
}

/// Samples the dominant chamber on the rational grid `y_i = c_i / resolution`,
/// `1 ≤ c_i ≤ (m+1)·resolution`, in simple-root coordinates. Points where
/// some consecutive coordinate sum is an integer lie on a hyperplane and
/// are skipped; every surviving point reports its region's tableau via
/// `k_{i,j} = min(m, ⌊y_i + … + y_j⌋)`. All arithmetic is exact.
pub fn grid_region_oracle(n: usize, m: usize, resolution: usize) -> BTreeSet<ShiTableau> {
    assert!(n >= 1 && m >= 1 && resolution >= 1);
    let top = (m + 1) * resolution;
    let mut cs = vec![1usize; n];
    let mut seen = BTreeSet::new();
    'outer: loop {
        let mut entries = vec![0usize; entry_count(n)];
        let mut on_hyperplane = false;
        'fill: for i in 1..=n {
            let mut sum = 0usize;
            for j in i..=n {
                sum += cs[j - 1];
                if sum.is_multiple_of(resolution) {
                    on_hyperplane = true;
                    break 'fill;
                }
                entries[flat(n, i, j)] = m.min(sum / resolution);
            }
        }
        if !on_hyperplane {
            debug_assert!(shi_conditions_hold_flat(n, m, &entries));
            seen.insert(ShiTableau::new(n, m, &unflatten(n, &entries)).expect("sampled region"));
        }
        let mut pos = n;
        loop {
            if pos == 0 {
                break 'outer;
            }
            pos -= 1;
            if cs[pos] < top {
                cs[pos] += 1;
                break;
            }
            cs[pos] = 1;
        }
    }
    seen
}

/// Runs the grid oracle starting at resolution `2(n+1)` and doubles it
/// until the count of distinct tableaux survives two consecutive
/// doublings; returns the final set and resolution. Grids refine under
/// doubling, so the counts grow monotonically toward the true region
/// count.
pub fn grid_region_oracle_stabilized(n: usize, m: usize) -> (BTreeSet<ShiTableau>, usize) {
    const MAX_DOUBLINGS: usize = 8;
    let mut resolution = 2 * (n + 1);
    let mut sets = vec![grid_region_oracle(n, m, resolution)];
    for _ in 0..MAX_DOUBLINGS {
        if sets.len() >= 3 {
            let k = sets.len();
            if sets[k - 1].len() == sets[k - 2].len() && sets[k - 2].len() == sets[k - 3].len() {
                break;
            }
        }
        resolution *= 2;
        sets.push(grid_region_oracle(n, m, resolution));
    }
    (sets.pop().unwrap(), resolution)
}

/// Inverts the dissection-to-partition map by scanning the full
/// enumeration for the unique preimage.
pub fn exhaustive_psi_inverse(p: &StaircasePartition) -> Result<Dissection, OracleError> {
    for d in enumerate_dissections(p.rank(), p.fuss(), Labeling::Alternating) {
        if psi(&d).expect("alternating enumeration") == *p {
            return Ok(d);
        }
    }
    Err(OracleError::NotFound {
        partition: p.parts().to_vec(),
    })
}

/// Tallies, for every subset of snake indices, how many dissections
/// contain exactly that subset and how many tableaux have exactly those
/// simple walls. The two tables must agree with each other and with the
/// parabolic product formula.
pub fn exhaustive_refined_counts(n: usize, m: usize) -> (RefinedCountTable, RefinedCountTable) {
    let mut by_dissection: BTreeMap<BTreeSet<usize>, BigUint> = BTreeMap::new();
    for d in enumerate_dissections(n, m, Labeling::Alternating) {
        *by_dissection
            .entry(d.negative_roots_contained())
            .or_insert_with(|| 0u32.into()) += BigUint::from(1u32);
    }
    let mut by_region: BTreeMap<BTreeSet<usize>, BigUint> = BTreeMap::new();
    for t in crate::shi_tableaux::enumerate_regions(n, m) {
        *by_region
            .entry(t.wall_profile().simple_walls().clone())
            .or_insert_with(|| 0u32.into()) += BigUint::from(1u32);
    }
    (
        RefinedCountTable::new(n, m, by_dissection),
        RefinedCountTable::new(n, m, by_region),
    )
}

/// Status of a single verification check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VerdictStatus {
    Ok,
    Mismatch,
}

/// Machine-readable result of one verification check.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct Verdict {
    pub check: String,
    pub n: usize,
    pub m: usize,
    pub status: VerdictStatus,
    pub details: String,
}

impl Verdict {
    pub fn ok(check: &str, n: usize, m: usize, details: impl Into<String>) -> Self {
        Self {
            check: check.into(),
            n,
            m,
            status: VerdictStatus::Ok,
            details: details.into(),
        }
    }

    pub fn mismatch(check: &str, n: usize, m: usize, details: impl Into<String>) -> Self {
        Self {
            check: check.into(),
            n,
            m,
            status: VerdictStatus::Mismatch,
            details: details.into(),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == VerdictStatus::Ok
    }
}

/// Convenience for building either verdict from a condition.
pub fn verdict(check: &str, n: usize, m: usize, ok: bool, details: impl Into<String>) -> Verdict {
    if ok {
        Verdict::ok(check, n, m, details)
    } else {
        Verdict::mismatch(check, n, m, details)
    }
}
