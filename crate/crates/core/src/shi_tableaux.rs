//! Shi tableaux: staircase arrays of coordinates describing the dominant
//! regions of the m-Catalan arrangement of type A.
//!
//! For each positive root `α_ij = α_i + … + α_j` a dominant region is
//! separated from the origin by `k_{i,j} ∈ {0,…,m}` of the translated
//! hyperplanes of `α_ij`. Displayed as a staircase diagram, `k_{i,j}`
//! occupies box `(i, n-j+1)`. A filling arises from an actual region
//! exactly when every triplet obeys the Shi adjacency condition: for
//! `i ≤ ℓ < j`, writing `s = k_{i,ℓ} + k_{ℓ+1,j}`,
//!
//! * `k_{i,j} ∈ {s, s+1}` when `s < m`, and
//! * `k_{i,j} = m` otherwise.
//!
//! An equivalent characterization reads the same data off hooks of the
//! staircase diagram; both checks are implemented independently and
//! cross-validated exhaustively in the test suites.

use crate::partitions::StaircasePartition;
use std::collections::BTreeSet;
use std::fmt;

/// One failing triplet of the Shi adjacency condition: the corner
/// `k_{i,j}` disagrees with the split at `ℓ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ShiViolation {
    pub i: usize,
    pub l: usize,
    pub j: usize,
}

impl fmt::Display for ShiViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.i, self.l, self.j)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TableauError {
    InvalidParameters {
        n: usize,
        m: usize,
    },
    /// Row `i` (1-based) must hold exactly `n - i + 1` entries.
    BadShape {
        row: usize,
        expected: usize,
        got: usize,
    },
    WrongRowCount {
        expected: usize,
        got: usize,
    },
    OutOfRangeEntry {
        i: usize,
        j: usize,
        value: usize,
        max: usize,
    },
    /// Every triplet that fails the Shi adjacency condition.
    ShiViolations(Vec<ShiViolation>),
    RankTooSmall {
        n: usize,
        required: usize,
    },
}

impl fmt::Display for TableauError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::InvalidParameters { n, m } => {
                write!(
                    f,
                    "rank and Fuss parameter must be positive, got n={n}, m={m}"
                )
            }
            Self::BadShape { row, expected, got } => {
                write!(f, "row {row} must have {expected} entries, got {got}")
            }
            Self::WrongRowCount { expected, got } => {
                write!(f, "expected {expected} rows, got {got}")
            }
            Self::OutOfRangeEntry { i, j, value, max } => {
                write!(f, "entry k[{i},{j}] = {value} outside 0..={max}")
            }
            Self::ShiViolations(vs) => {
                write!(f, "Shi condition fails for (i, l, j) in [")?;
                for (t, v) in vs.iter().enumerate() {
                    if t > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{v}")?;
                }
                write!(f, "]")
            }
            Self::RankTooSmall { n, required } => {
                write!(f, "rank {n} too small, need at least {required}")
            }
        }
    }
}

impl std::error::Error for TableauError {}

/// Flat index of `k_{i,j}` in row-major triangular storage.
#[inline]
pub(crate) fn flat(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(1 <= i && i <= j && j <= n);
    let r = i - 1;
    r * (2 * n - r + 1) / 2 + (j - i)
}

/// Number of entries of a rank-n tableau.
#[inline]
pub(crate) fn entry_count(n: usize) -> usize {
    n * (n + 1) / 2
}

/// All Shi-condition failures of a raw triangular filling. Entries are
/// stored row-major: `k_{1,1}…k_{1,n}, k_{2,2}…k_{2,n}, …, k_{n,n}`.
pub fn shi_violations_flat(n: usize, m: usize, entries: &[usize]) -> Vec<ShiViolation> {
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            let top = entries[flat(n, i, j)];
            for l in i..j {
                let s = entries[flat(n, i, l)] + entries[flat(n, l + 1, j)];
                let ok = if s < m {
                    top == s || top == s + 1
                } else {
                    top == m
                };
                if !ok {
                    out.push(ShiViolation { i, l, j });
                }
            }
        }
    }
    out
}

/// Short-circuiting variant of [`shi_violations_flat`] for hot loops.
pub fn shi_conditions_hold_flat(n: usize, m: usize, entries: &[usize]) -> bool {
    for i in 1..=n {
        for j in i + 1..=n {
            let top = entries[flat(n, i, j)];
            for l in i..j {
                let s = entries[flat(n, i, l)] + entries[flat(n, l + 1, j)];
                let ok = if s < m {
                    top == s || top == s + 1
                } else {
                    top == m
                };
                if !ok {
                    return false;
                }
            }
        }
    }
    true
}

/// Hook-based check on the staircase diagram. For the corner box of
/// `k_{i,j}` every in-diagram hook of `j - i + 2` boxes (corner plus an
/// arm to the right and a leg below) must satisfy: with `e` the sum of
/// the entries at the two hook endpoints, `k_{i,j} ∈ {e, e+1}` if
/// `e < m`, else `k_{i,j} = m`. Box geometry only; kept independent of
/// the triplet-based route above. Same flat layout as
/// [`shi_conditions_hold_flat`].
pub fn hook_conditions_hold_flat(n: usize, m: usize, entries: &[usize]) -> bool {
    // box (r, c) holds k_{r, n-c+1}; row r has n - r + 1 boxes
    let entry_at_box = |r: usize, c: usize| entries[flat(n, r, n - c + 1)];
    for i in 1..=n {
        for j in i + 1..=n {
            let (r, c) = (i, n - j + 1);
            let hook_len = j - i + 2;
            let corner = entries[flat(n, i, j)];
            for arm in 0..hook_len {
                let leg = hook_len - 1 - arm;
                if arm == 0 && leg == 0 {
                    continue;
                }
                // both endpoint boxes must exist in the staircase
                if c + arm > n - r + 1 || r + leg > n - c + 1 {
                    continue;
                }
                let arm_end = if arm == 0 {
                    corner
                } else {
                    entry_at_box(r, c + arm)
                };
                let leg_end = if leg == 0 {
                    corner
                } else {
                    entry_at_box(r + leg, c)
                };
                let e = arm_end + leg_end;
                let ok = if e < m {
                    corner == e || corner == e + 1
                } else {
                    corner == m
                };
                if !ok {
                    return false;
                }
            }
        }
    }
    true
}

fn flatten_rows(n: usize, m: usize, rows: &[Vec<usize>]) -> Result<Vec<usize>, TableauError> {
    if n == 0 || m == 0 {
        return Err(TableauError::InvalidParameters { n, m });
    }
    if rows.len() != n {
        return Err(TableauError::WrongRowCount {
            expected: n,
            got: rows.len(),
        });
    }
    let mut entries = Vec::with_capacity(entry_count(n));
    for (idx, row) in rows.iter().enumerate() {
        let i = idx + 1;
        if row.len() != n - i + 1 {
            return Err(TableauError::BadShape {
                row: i,
                expected: n - i + 1,
                got: row.len(),
            });
        }
        for (off, &v) in row.iter().enumerate() {
            if v > m {
                return Err(TableauError::OutOfRangeEntry {
                    i,
                    j: i + off,
                    value: v,
                    max: m,
                });
            }
            entries.push(v);
        }
    }
    Ok(entries)
}

/// Validates a filling against the Shi adjacency condition, reporting
/// every failing triplet. Row `i` of `rows` lists `k_{i,i}, …, k_{i,n}`.
pub fn check_shi_conditions(
    n: usize,
    m: usize,
    rows: &[Vec<usize>],
) -> Result<ShiTableau, TableauError> {
    let entries = flatten_rows(n, m, rows)?;
    let violations = shi_violations_flat(n, m, &entries);
    if violations.is_empty() {
        Ok(ShiTableau { n, m, entries })
    } else {
        Err(TableauError::ShiViolations(violations))
    }
}

/// Validates shape and range, then reports whether the hook-based
/// characterization accepts the filling.
pub fn check_hook_conditions(
    n: usize,
    m: usize,
    rows: &[Vec<usize>],
) -> Result<bool, TableauError> {
    let entries = flatten_rows(n, m, rows)?;
    Ok(hook_conditions_hold_flat(n, m, &entries))
}

/// The Shi tableau of a dominant region; always satisfies the Shi
/// adjacency condition on every triplet.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ShiTableau {
    n: usize,
    m: usize,
    entries: Vec<usize>,
}

impl fmt::Debug for ShiTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "ShiTableau(n={}, m={}, rows={:?})",
            self.n,
            self.m,
            self.rows()
        )
    }
}

impl ShiTableau {
    /// Validating constructor; alias of [`check_shi_conditions`].
    pub fn new(n: usize, m: usize, rows: &[Vec<usize>]) -> Result<Self, TableauError> {
        check_shi_conditions(n, m, rows)
    }

    pub(crate) fn from_flat_unchecked(n: usize, m: usize, entries: Vec<usize>) -> Self {
        debug_assert!(shi_conditions_hold_flat(n, m, &entries));
        Self { n, m, entries }
    }

    /// Tableau of the region containing the origin neighborhood.
    pub fn zero(n: usize, m: usize) -> Self {
        Self::constant(n, m, 0)
    }

    /// Constant filling; `v = m` gives the region separated from the
    /// origin by every hyperplane of the arrangement.
    pub fn constant(n: usize, m: usize, v: usize) -> Self {
        assert!(v <= m);
        let rows: Vec<Vec<usize>> = (1..=n).map(|i| vec![v; n - i + 1]).collect();
        Self::new(n, m, &rows).expect("constant fillings satisfy the Shi conditions")
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn fuss(&self) -> usize {
        self.m
    }

    /// The coordinate `k_{i,j}`, `1 ≤ i ≤ j ≤ n`.
    pub fn entry(&self, i: usize, j: usize) -> usize {
        self.entries[flat(self.n, i, j)]
    }

    /// Rows in increasing `j`: row `i` is `[k_{i,i}, …, k_{i,n}]`.
    pub fn rows(&self) -> Vec<Vec<usize>> {
        (1..=self.n)
            .map(|i| (i..=self.n).map(|j| self.entry(i, j)).collect())
            .collect()
    }

    /// Row sums `λᵢ = Σⱼ k_{i,j}`: the partition of this region.
    pub fn to_partition(&self) -> StaircasePartition {
        let parts: Vec<usize> = (1..=self.n)
            .map(|i| (i..=self.n).map(|j| self.entry(i, j)).sum())
            .collect();
        StaircasePartition::new(self.n, self.m, parts)
            .expect("row sums of a Shi tableau form a staircase partition")
    }

    /// Inverse of [`Self::to_partition`]: rebuilds the coordinates from a
    /// partition by
    /// `k_{i,j} = min(m, ceil((λᵢ - Σ_{ℓ>j} k_{i,ℓ} + Σ_{i<ℓ≤j} k_{ℓ,j}) / (j-i+1)))`,
    /// evaluated rows bottom-up and right-to-left so every referenced
    /// entry is already known.
    pub fn from_partition(p: &StaircasePartition) -> Self {
        let n = p.rank();
        let m = p.fuss();
        let mut entries = vec![0usize; entry_count(n)];
        for i in (1..=n).rev() {
            for j in (i..=n).rev() {
                let mut num = p.part(i) as i64;
                for l in j + 1..=n {
                    num -= entries[flat(n, i, l)] as i64;
                }
                for l in i + 1..=j {
                    num += entries[flat(n, l, j)] as i64;
                }
                let den = (j - i + 1) as i64;
                let k = (m as i64).min(ceil_div(num, den));
                assert!(k >= 0, "coordinate recursion produced a negative entry");
                entries[flat(n, i, j)] = k as usize;
            }
        }
        debug_assert!(shi_conditions_hold_flat(n, m, &entries));
        Self { n, m, entries }
    }

    /// Separating-wall data for the simple roots: row `i` starts with
    /// `k_{i,i} = m` exactly when the hyperplane of `α_i` at level `m`
    /// separates the region from the origin.
    pub fn wall_profile(&self) -> WallProfile {
        let simple_walls: BTreeSet<usize> = (1..=self.n)
            .filter(|&i| self.entry(i, i) == self.m)
            .collect();
        WallProfile::new(simple_walls)
    }

    /// The four derived tableaux obtained by deleting parts of the
    /// staircase diagram. Requires rank at least 2; the two-column
    /// deletion additionally needs rank at least 3 and is `None` at
    /// rank 2.
    pub fn subtableaux(&self) -> Result<SubTableaux, TableauError> {
        let n = self.n;
        if n < 2 {
            return Err(TableauError::RankTooSmall { n, required: 2 });
        }
        let build = |rank: usize, f: &dyn Fn(usize, usize) -> usize| -> ShiTableau {
            let rows: Vec<Vec<usize>> = (1..=rank)
                .map(|i| (i..=rank).map(|j| f(i, j)).collect())
                .collect();
            ShiTableau::new(rank, self.m, &rows)
                .expect("deleting rows/columns of a Shi tableau preserves the Shi conditions")
        };
        let without_top_row = build(n - 1, &|i, j| self.entry(i + 1, j + 1));
        let without_left_column = build(n - 1, &|i, j| self.entry(i, j));
        let without_two_left_columns = if n >= 3 {
            Some(build(n - 2, &|i, j| self.entry(i, j)))
        } else {
            None
        };
        // second-leftmost column and bottom-leftmost box removed; the
        // surviving leftmost column slides into the freed slots
        let without_second_column = build(n - 1, &|i, j| {
            if j == n - 1 {
                self.entry(i, n)
            } else {
                self.entry(i, j)
            }
        });
        Ok(SubTableaux {
            without_top_row,
            without_left_column,
            without_two_left_columns,
            without_second_column,
        })
    }
}

fn ceil_div(a: i64, b: i64) -> i64 {
    let q = a.div_euclid(b);
    if a.rem_euclid(b) != 0 {
        q + 1
    } else {
        q
    }
}

/// Classification of the simple-root separating walls of a region.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WallProfile {
    simple_walls: BTreeSet<usize>,
    bounded: bool,
}

impl WallProfile {
    pub fn new(simple_walls: BTreeSet<usize>) -> Self {
        let bounded = simple_walls.is_empty();
        Self {
            simple_walls,
            bounded,
        }
    }

    pub fn simple_walls(&self) -> &BTreeSet<usize> {
        &self.simple_walls
    }

    /// A dominant region is bounded exactly when no simple-root wall at
    /// level `m` separates it from the origin.
    pub fn bounded(&self) -> bool {
        self.bounded
    }
}

/// Result of [`ShiTableau::subtableaux`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubTableaux {
    /// Rank n-1: top row deleted, `k'_{i,j} = k_{i+1,j+1}`.
    pub without_top_row: ShiTableau,
    /// Rank n-1: leftmost column (the `k_{i,n}` entries) deleted.
    pub without_left_column: ShiTableau,
    /// Rank n-2: two leftmost columns deleted; `None` at rank 2.
    pub without_two_left_columns: Option<ShiTableau>,
    /// Rank n-1: second-leftmost column and bottom-leftmost box deleted,
    /// so `k'_{i,n-1} = k_{i,n}` and lower entries are unchanged.
    pub without_second_column: ShiTableau,
}

/// Streams every Shi tableau of the given size exactly once, by
/// backtracking over entries in increasing `j - i` with pruning on the
/// Shi adjacency condition.
pub fn enumerate_regions(n: usize, m: usize) -> Regions {
    assert!(n >= 1 && m >= 1, "rank and Fuss parameter must be positive");
    let mut order = Vec::with_capacity(entry_count(n));
    for d in 0..n {
        for i in 1..=n - d {
            order.push((i, i + d));
        }
    }
    Regions {
        n,
        m,
        order,
        entries: Vec::new(),
        choices: Vec::new(),
        exhausted: false,
    }
}

pub struct Regions {
    n: usize,
    m: usize,
    /// Fill order: (i, j) sorted by diagonal j - i, then i.
    order: Vec<(usize, usize)>,
    /// Entries for the filled prefix of `order`, stored at their flat
    /// triangular index (unfilled slots hold garbage from earlier runs).
    entries: Vec<usize>,
    choices: Vec<(Vec<usize>, usize)>,
    exhausted: bool,
}

impl Regions {
    /// Candidate values for the next unfilled position: the intersection
    /// of the two-element (or singleton) sets allowed by every split of
    /// the interval, all of whose entries are already placed.
    fn candidates(&self, i: usize, j: usize) -> Vec<usize> {
        if i == j {
            return (0..=self.m).collect();
        }
        let mut lo = 0usize;
        let mut hi = self.m;
        let mut forced_m = false;
        for l in i..j {
            let s = self.entries[flat(self.n, i, l)] + self.entries[flat(self.n, l + 1, j)];
            if s < self.m {
                lo = lo.max(s);
                hi = hi.min(s + 1);
            } else {
                forced_m = true;
            }
        }
        if forced_m {
            if lo <= self.m && self.m <= hi {
                vec![self.m]
            } else {
                vec![]
            }
        } else {
            (lo..=hi).collect()
        }
    }

    fn place(&mut self, pos: usize, value: usize) {
        let (i, j) = self.order[pos];
        let idx = flat(self.n, i, j);
        if idx >= self.entries.len() {
            self.entries.resize(idx + 1, 0);
        }
        self.entries[idx] = value;
    }

    /// Advances the deepest choice with an alternative; marks the stream
    /// exhausted when none is left.
    fn backtrack(&mut self) {
        while let Some((cands, pick)) = self.choices.pop() {
            if pick + 1 < cands.len() {
                let pos = self.choices.len();
                let value = cands[pick + 1];
                self.place(pos, value);
                self.choices.push((cands, pick + 1));
                return;
            }
        }
        self.exhausted = true;
    }
}

impl Iterator for Regions {
    type Item = ShiTableau;

    fn next(&mut self) -> Option<Self::Item> {
        if self.exhausted {
            return None;
        }
        loop {
            if self.choices.len() == self.order.len() {
                let mut flat_entries = vec![0usize; entry_count(self.n)];
                flat_entries.copy_from_slice(&self.entries[..entry_count(self.n)]);
                let tableau = ShiTableau::from_flat_unchecked(self.n, self.m, flat_entries);
                self.backtrack();
                return Some(tableau);
            }
            let (i, j) = self.order[self.choices.len()];
            let cands = self.candidates(i, j);
            match cands.first() {
                Some(&first) => {
                    let pos = self.choices.len();
                    self.place(pos, first);
                    self.choices.push((cands, 0));
                }
                None => {
                    self.backtrack();
                    if self.exhausted {
                        return None;
                    }
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::enumerate_partitions;

    fn triple(t: &ShiTableau) -> (usize, usize, usize) {
        (t.entry(1, 1), t.entry(2, 2), t.entry(1, 2))
    }

    #[test]
    fn accepts_origin_region() {
        let t = check_shi_conditions(2, 1, &[vec![0, 0], vec![0]]).unwrap();
        assert_eq!(triple(&t), (0, 0, 0));
    }

    #[test]
    fn reports_failing_triplet() {
        // k11 + k22 = 1 >= m forces k12 = 1
        let err = check_shi_conditions(2, 1, &[vec![1, 0], vec![0]]).unwrap_err();
        assert_eq!(
            err,
            TableauError::ShiViolations(vec![ShiViolation { i: 1, l: 1, j: 2 }])
        );
        assert!(check_shi_conditions(2, 1, &[vec![1, 1], vec![0]]).is_ok());
    }

    #[test]
    fn sum_at_least_m_forces_top_entry() {
        let t = check_shi_conditions(2, 3, &[vec![1, 3], vec![2]]).unwrap();
        assert_eq!(triple(&t), (1, 2, 3));
        assert!(check_shi_conditions(2, 3, &[vec![1, 2], vec![2]]).is_err());
    }

    #[test]
    fn rejects_out_of_range_entry() {
        let err = check_shi_conditions(2, 1, &[vec![2, 1], vec![0]]).unwrap_err();
        assert_eq!(
            err,
            TableauError::OutOfRangeEntry {
                i: 1,
                j: 1,
                value: 2,
                max: 1
            }
        );
    }

    #[test]
    fn rejects_bad_shape() {
        let err = check_shi_conditions(2, 1, &[vec![0], vec![0]]).unwrap_err();
        assert_eq!(
            err,
            TableauError::BadShape {
                row: 1,
                expected: 2,
                got: 1
            }
        );
    }

    #[test]
    fn hook_route_agrees_on_examples() {
        assert!(check_hook_conditions(2, 1, &[vec![0, 0], vec![0]]).unwrap());
        assert!(!check_hook_conditions(2, 1, &[vec![1, 0], vec![0]]).unwrap());
    }

    #[test]
    fn enumerates_rank_one() {
        let all: Vec<_> = enumerate_regions(1, 3).map(|t| t.entry(1, 1)).collect();
        assert_eq!(all, vec![0, 1, 2, 3]);
    }

    #[test]
    fn enumerates_rank_two_catalan() {
        let mut all: Vec<_> = enumerate_regions(2, 1).map(|t| triple(&t)).collect();
        all.sort();
        assert_eq!(
            all,
            vec![(0, 0, 0), (0, 0, 1), (0, 1, 1), (1, 0, 1), (1, 1, 1)]
        );
    }

    #[test]
    fn enumeration_count_examples() {
        assert_eq!(enumerate_regions(2, 3).count(), 22);
        assert_eq!(enumerate_regions(3, 2).count(), 55);
        assert_eq!(enumerate_regions(5, 3).count(), 7084);
    }

    #[test]
    fn row_sums_examples() {
        let t = check_shi_conditions(2, 3, &[vec![1, 3], vec![2]]).unwrap();
        assert_eq!(t.to_partition().parts(), &[4, 2]);
        assert_eq!(ShiTableau::zero(3, 2).to_partition().parts(), &[0, 0, 0]);
        assert_eq!(
            ShiTableau::constant(4, 3, 3).to_partition().parts(),
            &[12, 9, 6, 3]
        );
    }

    #[test]
    fn coordinate_recursion_examples() {
        let p = StaircasePartition::new(2, 3, vec![4, 2]).unwrap();
        let t = ShiTableau::from_partition(&p);
        assert_eq!(triple(&t), (1, 2, 3));
        let p = StaircasePartition::new(2, 2, vec![3, 1]).unwrap();
        let t = ShiTableau::from_partition(&p);
        assert_eq!(triple(&t), (1, 1, 2));
        let z = StaircasePartition::zero(4, 2);
        assert_eq!(ShiTableau::from_partition(&z), ShiTableau::zero(4, 2));
    }

    #[test]
    fn round_trips_are_identities() {
        for n in 1..=5 {
            for m in 1..=3 {
                for t in enumerate_regions(n, m) {
                    assert_eq!(
                        ShiTableau::from_partition(&t.to_partition()),
                        t,
                        "n={n} m={m}"
                    );
                }
                for p in enumerate_partitions(n, m) {
                    assert_eq!(
                        ShiTableau::from_partition(&p).to_partition(),
                        p,
                        "n={n} m={m}"
                    );
                }
            }
        }
    }

    #[test]
    fn wall_profile_examples() {
        let z = ShiTableau::zero(3, 2);
        assert!(z.wall_profile().bounded());
        let full = ShiTableau::constant(3, 2, 2);
        assert_eq!(full.wall_profile().simple_walls(), &(1..=3).collect());
        assert!(!full.wall_profile().bounded());
        let t = check_shi_conditions(2, 1, &[vec![1, 1], vec![0]]).unwrap();
        assert_eq!(t.wall_profile().simple_walls(), &BTreeSet::from([1]));
    }

    #[test]
    fn walls_match_maximal_parts() {
        for n in 1..=4 {
            for m in 1..=3 {
                for t in enumerate_regions(n, m) {
                    assert_eq!(
                        *t.wall_profile().simple_walls(),
                        t.to_partition().max_parts()
                    );
                }
            }
        }
    }

    #[test]
    fn monotone_along_rows_and_columns() {
        for n in 1..=4 {
            for m in 1..=3 {
                for t in enumerate_regions(n, m) {
                    for i in 1..=n {
                        for j in i + 1..=n {
                            assert!(t.entry(i, j) >= t.entry(i, j - 1), "{t:?}");
                            if i > 1 {
                                assert!(t.entry(i - 1, j) >= t.entry(i, j), "{t:?}");
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn subtableaux_of_constant_fillings() {
        let z = ShiTableau::zero(3, 2);
        let sub = z.subtableaux().unwrap();
        assert_eq!(sub.without_top_row, ShiTableau::zero(2, 2));
        assert_eq!(sub.without_left_column, ShiTableau::zero(2, 2));
        assert_eq!(sub.without_two_left_columns, Some(ShiTableau::zero(1, 2)));
        assert_eq!(sub.without_second_column, ShiTableau::zero(2, 2));

        let full = ShiTableau::constant(3, 2, 2);
        let sub = full.subtableaux().unwrap();
        assert_eq!(sub.without_top_row, ShiTableau::constant(2, 2, 2));
        assert_eq!(sub.without_left_column, ShiTableau::constant(2, 2, 2));
        assert_eq!(
            sub.without_two_left_columns,
            Some(ShiTableau::constant(1, 2, 2))
        );
        assert_eq!(sub.without_second_column, ShiTableau::constant(2, 2, 2));
    }

    #[test]
    fn subtableaux_rank_two_drops_two_column_deletion() {
        let t = check_shi_conditions(2, 3, &[vec![1, 3], vec![2]]).unwrap();
        let sub = t.subtableaux().unwrap();
        assert_eq!(sub.without_top_row.rows(), vec![vec![2]]);
        assert_eq!(sub.without_left_column.rows(), vec![vec![1]]);
        assert_eq!(sub.without_two_left_columns, None);
        assert_eq!(sub.without_second_column.rows(), vec![vec![3]]);
    }

    #[test]
    fn subtableaux_rejects_rank_one() {
        let t = ShiTableau::zero(1, 2);
        assert_eq!(
            t.subtableaux().unwrap_err(),
            TableauError::RankTooSmall { n: 1, required: 2 }
        );
    }

    #[test]
    fn derived_partition_relations_hold() {
        // the four sub-tableaux are exactly the coordinate tableaux of the
        // four derived partitions
        for n in 2..=4 {
            for m in 1..=3 {
                for p in enumerate_partitions(n, m) {
                    let t = ShiTableau::from_partition(&p);
                    let sub = t.subtableaux().unwrap();

                    let l1: Vec<usize> = (2..=n).map(|i| p.part(i)).collect();
                    let l2: Vec<usize> = (1..n).map(|i| p.part(i) - t.entry(i, n)).collect();
                    let l4: Vec<usize> = (1..n).map(|i| p.part(i) - t.entry(i, n - 1)).collect();

                    let p1 = StaircasePartition::new(n - 1, m, l1).unwrap();
                    let p2 = StaircasePartition::new(n - 1, m, l2.clone()).unwrap();
                    let p4 = StaircasePartition::new(n - 1, m, l4).unwrap();
                    assert_eq!(sub.without_top_row, ShiTableau::from_partition(&p1));
                    assert_eq!(sub.without_left_column, ShiTableau::from_partition(&p2));
                    assert_eq!(sub.without_second_column, ShiTableau::from_partition(&p4));

                    if n >= 3 {
                        let l3: Vec<usize> =
                            (1..n - 1).map(|i| l2[i - 1] - t.entry(i, n - 1)).collect();
                        let p3 = StaircasePartition::new(n - 2, m, l3).unwrap();
                        assert_eq!(
                            sub.without_two_left_columns,
                            Some(ShiTableau::from_partition(&p3))
                        );
                    }
                }
            }
        }
    }
}
