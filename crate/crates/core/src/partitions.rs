//! Integer partitions bounded by an m-staircase shape.
//!
//! For rank `n` and Fuss parameter `m`, the family consists of the weakly
//! decreasing sequences `λ₁ ≥ … ≥ λₙ ≥ 0` with `λᵢ ≤ m(n-i+1)`. Its size
//! is the Fuss-Catalan number `binom((m+1)(n+1), n+1) / (m(n+1)+1)`, and
//! the sub-family avoiding every staircase bound is counted by the
//! positive Fuss-Catalan number `binom(m(n+1)+n-1, n) / (n+1)`.

use num_bigint::BigUint;
use std::collections::BTreeSet;
use std::fmt;

/// A step of the lattice-path encoding of a partition boundary.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    North,
    East,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PartitionError {
    /// Rank and Fuss parameter must both be at least one.
    InvalidParameters {
        n: usize,
        m: usize,
    },
    LengthMismatch {
        expected: usize,
        got: usize,
    },
    /// Part at 1-based `index` exceeds its predecessor.
    NotWeaklyDecreasing {
        index: usize,
    },
    /// Part at 1-based `index` exceeds the staircase bound `m(n-i+1)`.
    ExceedsStaircase {
        index: usize,
        part: usize,
        bound: usize,
    },
}

impl fmt::Display for PartitionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::InvalidParameters { n, m } => {
                write!(
                    f,
                    "rank and Fuss parameter must be positive, got n={n}, m={m}"
                )
            }
            Self::LengthMismatch { expected, got } => {
                write!(f, "expected {expected} parts, got {got}")
            }
            Self::NotWeaklyDecreasing { index } => {
                write!(f, "parts are not weakly decreasing at position {index}")
            }
            Self::ExceedsStaircase { index, part, bound } => {
                write!(
                    f,
                    "part {part} at position {index} exceeds staircase bound {bound}"
                )
            }
        }
    }
}

impl std::error::Error for PartitionError {}

/// A partition whose Young diagram fits in the m-staircase of its rank.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StaircasePartition {
    n: usize,
    m: usize,
    parts: Vec<usize>,
}

impl fmt::Debug for StaircasePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "StaircasePartition(n={}, m={}, {:?})",
            self.n, self.m, self.parts
        )
    }
}

impl fmt::Display for StaircasePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl StaircasePartition {
    /// Validates `parts` as a staircase partition of rank `n` with Fuss
    /// parameter `m`.
    pub fn new(n: usize, m: usize, parts: Vec<usize>) -> Result<Self, PartitionError> {
        if n == 0 || m == 0 {
            return Err(PartitionError::InvalidParameters { n, m });
        }
        if parts.len() != n {
            return Err(PartitionError::LengthMismatch {
                expected: n,
                got: parts.len(),
            });
        }
        for i in 1..n {
            if parts[i] > parts[i - 1] {
                return Err(PartitionError::NotWeaklyDecreasing { index: i + 1 });
            }
        }
        for (i, &p) in parts.iter().enumerate() {
            let bound = m * (n - i);
            if p > bound {
                return Err(PartitionError::ExceedsStaircase {
                    index: i + 1,
                    part: p,
                    bound,
                });
            }
        }
        Ok(Self { n, m, parts })
    }

    /// The all-zero partition.
    pub fn zero(n: usize, m: usize) -> Self {
        Self::new(n, m, vec![0; n]).expect("zero partition is always valid")
    }

    /// The partition `(mn, m(n-1), …, m)` saturating every staircase bound.
    pub fn saturated(n: usize, m: usize) -> Self {
        let parts = (1..=n).rev().map(|r| m * r).collect();
        Self::new(n, m, parts).expect("saturated staircase is always valid")
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn fuss(&self) -> usize {
        self.m
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The part `λᵢ`, 1-based.
    pub fn part(&self, i: usize) -> usize {
        self.parts[i - 1]
    }

    /// The staircase bound `m(n-i+1)` for the 1-based row `i`.
    pub fn bound(&self, i: usize) -> usize {
        self.m * (self.n - i + 1)
    }

    /// Indices `i` with `λᵢ = m(n-i+1)`, the touch points of the lattice
    /// path with the boundary line.
    pub fn max_parts(&self) -> BTreeSet<usize> {
        (1..=self.n)
            .filter(|&i| self.part(i) == self.bound(i))
            .collect()
    }

    /// True when no part attains its staircase bound.
    pub fn is_positive(&self) -> bool {
        self.max_parts().is_empty()
    }

    /// Monotone path from (0,0) to (mn, n) tracing the diagram boundary
    /// bottom-up: `E^λₙ N E^(λₙ₋₁-λₙ) N … N E^(mn-λ₁)`. The empty
    /// partition maps to `Nⁿ Eᵐⁿ`; the path stays weakly above the line
    /// `y = x/m - 1` and touches it exactly at the maximal parts.
    pub fn to_lattice_path(&self) -> Vec<Step> {
        let mut steps = Vec::with_capacity(self.n + self.m * self.n);
        let mut prev = 0;
        for i in (1..=self.n).rev() {
            steps.extend(std::iter::repeat_n(Step::East, self.part(i) - prev));
            steps.push(Step::North);
            prev = self.part(i);
        }
        steps.extend(std::iter::repeat_n(
            Step::East,
            self.m * self.n - self.parts[0],
        ));
        steps
    }
}

/// Streams every staircase partition of the given size exactly once, in
/// lexicographically decreasing order of parts.
pub fn enumerate_partitions(n: usize, m: usize) -> Partitions {
    assert!(n >= 1 && m >= 1, "rank and Fuss parameter must be positive");
    Partitions {
        n,
        m,
        next: Some(StaircasePartition::saturated(n, m).parts),
    }
}

pub struct Partitions {
    n: usize,
    m: usize,
    next: Option<Vec<usize>>,
}

impl Iterator for Partitions {
    type Item = StaircasePartition;

    fn next(&mut self) -> Option<Self::Item> {
        let current = self.next.take()?;
        // Decrement the last nonzero part, then re-maximize the suffix
        // under the staircase and weak-decrease bounds.
        let mut succ = current.clone();
        let mut pos = None;
        for i in (0..self.n).rev() {
            if succ[i] > 0 {
                pos = Some(i);
                break;
            }
        }
        if let Some(i) = pos {
            succ[i] -= 1;
            for j in i + 1..self.n {
                succ[j] = succ[j - 1].min(self.m * (self.n - j));
            }
            self.next = Some(succ);
        }
        Some(StaircasePartition {
            n: self.n,
            m: self.m,
            parts: current,
        })
    }
}

/// Exact binomial coefficient.
fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    let k = k.min(n - k);
    let mut acc = BigUint::from(1u32);
    for i in 1..=k {
        acc *= BigUint::from(n - k + i);
        let (q, r) = div_rem(&acc, &BigUint::from(i));
        debug_assert!(r == BigUint::from(0u32));
        acc = q;
    }
    acc
}

fn div_rem(a: &BigUint, b: &BigUint) -> (BigUint, BigUint) {
    (a / b, a % b)
}

/// Divides exactly, panicking if the divisibility invariant fails.
fn exact_div(num: BigUint, den: BigUint) -> BigUint {
    let (q, r) = div_rem(&num, &den);
    assert!(
        r == BigUint::from(0u32),
        "counting formula produced a non-integer: {num} / {den}"
    );
    q
}

/// Number of staircase partitions: `binom((m+1)(n+1), n+1) / (m(n+1)+1)`.
pub fn count_partitions(n: usize, m: usize) -> BigUint {
    assert!(n >= 1 && m >= 1);
    exact_div(
        binomial((m + 1) * (n + 1), n + 1),
        BigUint::from(m * (n + 1) + 1),
    )
}

/// Number of staircase partitions avoiding every bound:
/// `binom(m(n+1)+n-1, n) / (n+1)`.
pub fn count_positive(n: usize, m: usize) -> BigUint {
    assert!(n >= 1 && m >= 1);
    exact_div(binomial(m * (n + 1) + n - 1, n), BigUint::from(n + 1))
}

/// Coxeter data of the rank-n type-A root system, giving the product
/// formulas for the (positive) Fuss-Catalan numbers as a second route
/// independent of the binomial expressions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CountingParameters {
    n: usize,
    m: usize,
}

impl CountingParameters {
    pub fn new(n: usize, m: usize) -> Self {
        assert!(n >= 1 && m >= 1);
        Self { n, m }
    }

    /// Coxeter number, `n + 1` in type A.
    pub fn coxeter_number(&self) -> usize {
        self.n + 1
    }

    /// Exponents `1, 2, …, n`.
    pub fn exponents(&self) -> Vec<usize> {
        (1..=self.n).collect()
    }

    /// `∏ᵢ (eᵢ + mh + 1) / (eᵢ + 1)`.
    pub fn catalan_number(&self) -> BigUint {
        self.product_formula(self.m * self.coxeter_number() + 1)
    }

    /// `∏ᵢ (eᵢ + mh - 1) / (eᵢ + 1)`.
    pub fn positive_catalan_number(&self) -> BigUint {
        self.product_formula(self.m * self.coxeter_number() - 1)
    }

    fn product_formula(&self, shift: usize) -> BigUint {
        let mut num = BigUint::from(1u32);
        let mut den = BigUint::from(1u32);
        for e in self.exponents() {
            num *= BigUint::from(e + shift);
            den *= BigUint::from(e + 1);
        }
        exact_div(num, den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parts(p: &StaircasePartition) -> Vec<usize> {
        p.parts().to_vec()
    }

    #[test]
    fn validates_zero_partition() {
        let p = StaircasePartition::new(2, 1, vec![0, 0]).unwrap();
        assert_eq!(parts(&p), vec![0, 0]);
    }

    #[test]
    fn validates_saturated_staircase() {
        let p = StaircasePartition::new(4, 3, vec![12, 9, 6, 3]).unwrap();
        assert_eq!(p.max_parts(), (1..=4).collect());
        assert_eq!(p, StaircasePartition::saturated(4, 3));
    }

    #[test]
    fn rejects_staircase_violation() {
        let err = StaircasePartition::new(2, 1, vec![4, 3]).unwrap_err();
        assert_eq!(
            err,
            PartitionError::ExceedsStaircase {
                index: 1,
                part: 4,
                bound: 2
            }
        );
    }

    #[test]
    fn rejects_unsorted_parts() {
        let err = StaircasePartition::new(2, 1, vec![0, 1]).unwrap_err();
        assert_eq!(err, PartitionError::NotWeaklyDecreasing { index: 2 });
    }

    #[test]
    fn rejects_wrong_length_and_zero_parameters() {
        assert_eq!(
            StaircasePartition::new(3, 1, vec![1, 0]).unwrap_err(),
            PartitionError::LengthMismatch {
                expected: 3,
                got: 2
            }
        );
        assert_eq!(
            StaircasePartition::new(0, 1, vec![]).unwrap_err(),
            PartitionError::InvalidParameters { n: 0, m: 1 }
        );
    }

    #[test]
    fn enumerates_rank_one() {
        let all: Vec<_> = enumerate_partitions(1, 2).map(|p| parts(&p)).collect();
        assert_eq!(all, vec![vec![2], vec![1], vec![0]]);
    }

    #[test]
    fn enumerates_rank_two_in_decreasing_lex_order() {
        let all: Vec<_> = enumerate_partitions(2, 1).map(|p| parts(&p)).collect();
        assert_eq!(
            all,
            vec![vec![2, 1], vec![2, 0], vec![1, 1], vec![1, 0], vec![0, 0]]
        );
    }

    #[test]
    fn enumeration_length_matches_count() {
        for n in 1..=5 {
            for m in 1..=3 {
                let len = enumerate_partitions(n, m).count();
                assert_eq!(BigUint::from(len), count_partitions(n, m), "n={n} m={m}");
            }
        }
    }

    #[test]
    fn count_examples() {
        assert_eq!(count_partitions(2, 1), BigUint::from(5u32));
        assert_eq!(count_partitions(2, 3), BigUint::from(22u32));
        assert_eq!(count_partitions(5, 3), BigUint::from(7084u32));
        assert_eq!(count_partitions(4, 3), BigUint::from(969u32));
    }

    #[test]
    fn positive_count_examples() {
        assert_eq!(count_positive(2, 1), BigUint::from(2u32));
        for m in 1..=6 {
            assert_eq!(count_positive(1, m), BigUint::from(m));
        }
        // Confirmed against the brute-force tally below: 15 partitions with
        // λ₁ < 6 and λ₂ < 3.
        assert_eq!(count_positive(2, 3), BigUint::from(15u32));
    }

    #[test]
    fn positive_count_matches_brute_force() {
        for n in 1..=5 {
            for m in 1..=3 {
                let brute = enumerate_partitions(n, m)
                    .filter(|p| p.is_positive())
                    .count();
                assert_eq!(BigUint::from(brute), count_positive(n, m), "n={n} m={m}");
            }
        }
    }

    #[test]
    fn product_formulas_agree_with_binomial_route() {
        for n in 1..=6 {
            for m in 1..=4 {
                let cp = CountingParameters::new(n, m);
                assert_eq!(cp.catalan_number(), count_partitions(n, m), "n={n} m={m}");
                assert_eq!(
                    cp.positive_catalan_number(),
                    count_positive(n, m),
                    "n={n} m={m}"
                );
            }
        }
    }

    #[test]
    fn max_parts_examples() {
        assert!(StaircasePartition::zero(3, 2).max_parts().is_empty());
        let p = StaircasePartition::new(2, 3, vec![6, 2]).unwrap();
        assert_eq!(p.max_parts(), BTreeSet::from([1]));
    }

    fn path_string(p: &StaircasePartition) -> String {
        p.to_lattice_path()
            .iter()
            .map(|s| match s {
                Step::North => 'N',
                Step::East => 'E',
            })
            .collect()
    }

    #[test]
    fn lattice_path_examples() {
        let z = StaircasePartition::zero(2, 1);
        assert_eq!(path_string(&z), "NNEE");
        let full = StaircasePartition::new(2, 1, vec![2, 1]).unwrap();
        assert_eq!(path_string(&full), "ENEN");
        let mid = StaircasePartition::new(2, 1, vec![1, 0]).unwrap();
        assert_eq!(path_string(&mid), "NENE");
    }

    #[test]
    fn lattice_path_injective_and_above_line() {
        for n in 1..=5 {
            for m in 1..=3 {
                let mut seen = BTreeSet::new();
                for p in enumerate_partitions(n, m) {
                    let path = p.to_lattice_path();
                    // x ≤ m(y+1) at every point of the path
                    let (mut x, mut y) = (0usize, 0usize);
                    for s in &path {
                        match s {
                            Step::East => x += 1,
                            Step::North => y += 1,
                        }
                        assert!(
                            x <= m * (y + 1),
                            "path dips below the line: {p} (n={n},m={m})"
                        );
                    }
                    assert_eq!((x, y), (m * n, n));
                    assert!(seen.insert(path), "duplicate path for {p}");
                }
            }
        }
    }

    #[test]
    fn touch_points_are_max_parts() {
        for p in enumerate_partitions(4, 2) {
            let mut touches = BTreeSet::new();
            let (mut x, mut y) = (0usize, 0usize);
            for s in p.to_lattice_path() {
                match s {
                    Step::East => x += 1,
                    Step::North => y += 1,
                }
                if x == p.fuss() * (y + 1) {
                    // corner at height y belongs to row n - y
                    touches.insert(p.rank() - y);
                }
            }
            assert_eq!(touches, p.max_parts(), "{p}");
        }
    }
}
