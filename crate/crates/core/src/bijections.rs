//! Maps between the three families.
//!
//! The dissection-to-partition map reads off the initial points (smaller
//! endpoint labels) of the diagonals. Over the alternating labeling it
//! preserves the structural correspondence — a dissection contains the
//! i-th snake diagonal exactly when the i-th part is maximal — and its
//! inverse peels off one (m+2)-gon per part. Over the standard labeling
//! the same reading is still a bijection but loses that correspondence
//! (see the fan counterexample in the tests). Composing with the
//! tableau/partition maps yields the dissection-to-region bijection and
//! its inverse.
//!
//! The refined count multiplies positive Fuss-Catalan numbers over the
//! maximal runs of simple-root indices missing from a prescribed snake
//! subset; it equals the number of dissections containing exactly that
//! subset, and the number of regions with exactly those simple walls.

use crate::dissections::{Dissection, LabeledPolygon, Labeling};
use crate::partitions::{count_positive, StaircasePartition};
use crate::shi_tableaux::ShiTableau;
use num_bigint::BigUint;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BijectionError {
    WrongLabeling { expected: Labeling, got: Labeling },
}

impl fmt::Display for BijectionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::WrongLabeling { expected, got } => {
                write!(
                    f,
                    "map requires the {expected} labeling, polygon uses {got}"
                )
            }
        }
    }
}

impl std::error::Error for BijectionError {}

fn require_labeling(d: &Dissection, expected: Labeling) -> Result<(), BijectionError> {
    let got = d.polygon().labeling();
    if got == expected {
        Ok(())
    } else {
        Err(BijectionError::WrongLabeling { expected, got })
    }
}

/// Initial points of a dissection over the alternating labeling. The
/// i-th part equals its staircase bound exactly when the dissection
/// contains the i-th snake diagonal.
pub fn psi(d: &Dissection) -> Result<StaircasePartition, BijectionError> {
    require_labeling(d, Labeling::Alternating)?;
    Ok(d.initial_points())
}

/// Initial points over the standard labeling: a bijection onto the
/// staircase partitions, but one that does not preserve the snake/
/// maximal-part correspondence.
pub fn psi_prime(d: &Dissection) -> Result<StaircasePartition, BijectionError> {
    require_labeling(d, Labeling::Standard)?;
    Ok(d.initial_points())
}

/// Inverse of [`psi`]. Parts are processed in decreasing order; each
/// step locates the vertex labeled with the current part and cuts toward
/// one of the two vertices at position distance m+1 in the current
/// sub-polygon, which removes an (m+2)-gon and leaves the rest for the
/// remaining parts.
///
/// The side of the cut is decided in the *fresh* alternating labeling of
/// the current rank: the surviving vertices, read counterclockwise from
/// vertex 0, are aligned position-by-position with an alternating-labeled
/// polygon of the reduced rank (the two labelings agree on every label
/// small enough to be a remaining part), and the candidate whose fresh
/// label is larger wins. Deciding by the surviving original labels
/// instead is wrong; the search inverse exposes the difference.
pub fn psi_inverse(p: &StaircasePartition) -> Dissection {
    let n = p.rank();
    let m = p.fuss();
    let polygon = LabeledPolygon::alternating(n, m);
    let mut current: Vec<usize> = polygon.ccw_labels().to_vec();
    let mut diagonals = Vec::with_capacity(n);
    for (step, &part) in p.parts().iter().enumerate() {
        let rank = n - step;
        let fresh = LabeledPolygon::alternating(rank, m);
        let len = current.len();
        debug_assert_eq!(len, fresh.vertex_count());
        let idx = current
            .iter()
            .position(|&l| l == part)
            .expect("the vertex of every remaining part survives each cut");
        debug_assert_eq!(
            fresh.label_at(idx),
            part,
            "labelings must agree on part labels"
        );
        let fwd = (idx + m + 1) % len;
        let bwd = (idx + len - (m + 1)) % len;
        let pick = if fresh.label_at(fwd) >= fresh.label_at(bwd) {
            fwd
        } else {
            bwd
        };
        let other = current[pick];
        diagonals.push((part.min(other), part.max(other)));
        if step + 1 == n {
            break;
        }
        let removed: BTreeSet<usize> = if pick == fwd {
            (1..=m).map(|t| (idx + t) % len).collect()
        } else {
            (1..=m).map(|t| (idx + len - t) % len).collect()
        };
        current = current
            .iter()
            .enumerate()
            .filter(|(q, _)| !removed.contains(q))
            .map(|(_, &l)| l)
            .collect();
        // keep vertex 0 at position 0 so the fresh alignment holds
        let zero = current
            .iter()
            .position(|&l| l == 0)
            .expect("vertex 0 survives");
        current.rotate_left(zero);
    }
    Dissection::new(polygon, diagonals).expect("the peeling construction yields a dissection")
}

/// Dissection to dominant region: coordinates of the initial-point
/// partition. A dissection contains the i-th snake diagonal exactly when
/// the image region has the i-th simple wall separating.
pub fn omega(d: &Dissection) -> Result<ShiTableau, BijectionError> {
    Ok(ShiTableau::from_partition(&psi(d)?))
}

/// Inverse of [`omega`].
pub fn omega_inverse(t: &ShiTableau) -> Dissection {
    psi_inverse(&t.to_partition())
}

/// Maximal runs of consecutive indices in `complement`, as lengths: the
/// type-A factors of the parabolic root subsystem on those indices.
pub fn parabolic_components(n: usize, complement: &BTreeSet<usize>) -> Vec<usize> {
    let mut runs = Vec::new();
    let mut current = 0usize;
    let mut prev: Option<usize> = None;
    for &i in complement {
        debug_assert!(1 <= i && i <= n);
        match prev {
            Some(p) if i == p + 1 => current += 1,
            _ => {
                if current > 0 {
                    runs.push(current);
                }
                current = 1;
            }
        }
        prev = Some(i);
    }
    if current > 0 {
        runs.push(current);
    }
    runs
}

/// Number of dissections containing exactly the snake diagonals indexed
/// by `J` (equivalently, regions whose simple walls are exactly `J`):
/// the product of positive Fuss-Catalan numbers over the parabolic
/// components of the complement of `J`.
pub fn refined_count(n: usize, m: usize, subset: &BTreeSet<usize>) -> BigUint {
    let complement: BTreeSet<usize> = (1..=n).filter(|i| !subset.contains(i)).collect();
    parabolic_components(n, &complement)
        .into_iter()
        .map(|r| count_positive(r, m))
        .product()
}

/// The counts of all `2^n` snake subsets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RefinedCountTable {
    n: usize,
    m: usize,
    entries: BTreeMap<BTreeSet<usize>, BigUint>,
}

impl RefinedCountTable {
    pub fn new(n: usize, m: usize, entries: BTreeMap<BTreeSet<usize>, BigUint>) -> Self {
        Self { n, m, entries }
    }

    /// The table predicted by the parabolic product formula.
    pub fn from_formula(n: usize, m: usize) -> Self {
        let mut entries = BTreeMap::new();
        for mask in 0u32..(1 << n) {
            let subset: BTreeSet<usize> = (1..=n).filter(|i| mask >> (i - 1) & 1 == 1).collect();
            let count = refined_count(n, m, &subset);
            entries.insert(subset, count);
        }
        Self { n, m, entries }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn fuss(&self) -> usize {
        self.m
    }

    pub fn entries(&self) -> &BTreeMap<BTreeSet<usize>, BigUint> {
        &self.entries
    }

    pub fn get(&self, subset: &BTreeSet<usize>) -> BigUint {
        self.entries
            .get(subset)
            .cloned()
            .unwrap_or_else(|| BigUint::from(0u32))
    }

    /// Sum over all subsets; equals the full Fuss-Catalan count.
    pub fn total(&self) -> BigUint {
        self.entries.values().sum()
    }

    /// The empty-subset entry; equals the positive Fuss-Catalan count.
    pub fn positive_part(&self) -> BigUint {
        self.get(&BTreeSet::new())
    }
}
