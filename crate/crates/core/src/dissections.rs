//! Polygon dissections realizing the facets of the generalized cluster
//! complex of type A.
//!
//! A polygon with `m(n+1)+2` vertices is cut by m-diagonals: chords
//! splitting it into two parts whose vertex counts are both congruent to
//! 2 modulo m (equivalently, the endpoints sit at cyclic position
//! distance congruent to 1 modulo m). A maximal set of n pairwise
//! noncrossing m-diagonals dissects the polygon into (m+2)-gons.
//!
//! Vertices carry labels under one of two schemes. The standard labeling
//! writes 0..N-1 counterclockwise. The alternating labeling fixes
//! vertex 0 and splits the remaining labels by the parity of `⌊k/m⌋`:
//! even-class labels run counterclockwise from 0 in increasing order,
//! odd-class labels run clockwise in increasing order. Each labeling has
//! its own snake of diagonals representing the negative simple roots;
//! all other m-diagonals represent colored positive roots, classified by
//! the interval of snake diagonals they cross.

use crate::partitions::StaircasePartition;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Labeling {
    Standard,
    Alternating,
}

impl fmt::Display for Labeling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Standard => write!(f, "standard"),
            Self::Alternating => write!(f, "alternating"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DissectionError {
    InvalidParameters {
        n: usize,
        m: usize,
    },
    UnknownLabel {
        label: usize,
    },
    DegenerateDiagonal {
        label: usize,
    },
    NotAnMDiagonal {
        a: usize,
        b: usize,
    },
    CrossingDiagonals {
        d1: (usize, usize),
        d2: (usize, usize),
    },
    DuplicateDiagonal {
        a: usize,
        b: usize,
    },
    WrongDiagonalCount {
        expected: usize,
        got: usize,
    },
    /// The set of snake diagonals crossed by an m-diagonal is always an
    /// interval; anything else signals an internal inconsistency.
    NonConsecutiveCrossing {
        a: usize,
        b: usize,
        crossed: Vec<usize>,
    },
    /// Each crossing class must contain exactly m diagonals, one per color.
    UnexpectedClassSize {
        low: usize,
        high: usize,
        expected: usize,
        got: usize,
    },
}

impl fmt::Display for DissectionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::InvalidParameters { n, m } => {
                write!(
                    f,
                    "rank and Fuss parameter must be positive, got n={n}, m={m}"
                )
            }
            Self::UnknownLabel { label } => write!(f, "label {label} is not a polygon vertex"),
            Self::DegenerateDiagonal { label } => {
                write!(f, "diagonal endpoints coincide at label {label}")
            }
            Self::NotAnMDiagonal { a, b } => write!(f, "{{{a},{b}}} is not an m-diagonal"),
            Self::CrossingDiagonals { d1, d2 } => write!(
                f,
                "diagonals {{{},{}}} and {{{},{}}} cross",
                d1.0, d1.1, d2.0, d2.1
            ),
            Self::DuplicateDiagonal { a, b } => write!(f, "diagonal {{{a},{b}}} listed twice"),
            Self::WrongDiagonalCount { expected, got } => {
                write!(
                    f,
                    "a maximal dissection needs {expected} diagonals, got {got}"
                )
            }
            Self::NonConsecutiveCrossing { a, b, crossed } => write!(
                f,
                "diagonal {{{a},{b}}} crosses a non-consecutive snake set {crossed:?}"
            ),
            Self::UnexpectedClassSize {
                low,
                high,
                expected,
                got,
            } => write!(
                f,
                "crossing class [{low},{high}] has {got} diagonals, expected {expected}"
            ),
        }
    }
}

impl std::error::Error for DissectionError {}

/// A convex polygon with `m(n+1)+2` labeled vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LabeledPolygon {
    n: usize,
    m: usize,
    labeling: Labeling,
    /// Label at each counterclockwise position.
    ccw_labels: Vec<usize>,
    /// Position of each label; inverse of `ccw_labels`.
    position_of: Vec<usize>,
}

impl LabeledPolygon {
    /// Labels 0..N-1 in counterclockwise position order.
    pub fn standard(n: usize, m: usize) -> Self {
        assert!(n >= 1 && m >= 1, "rank and Fuss parameter must be positive");
        let vertex_count = m * (n + 1) + 2;
        let ccw_labels: Vec<usize> = (0..vertex_count).collect();
        Self::from_ccw(n, m, Labeling::Standard, ccw_labels)
    }

    /// The alternating labeling: label 0 at position 0; labels `k` with
    /// `⌊k/m⌋` even follow counterclockwise in increasing order, the rest
    /// fill the clockwise side in increasing order.
    pub fn alternating(n: usize, m: usize) -> Self {
        assert!(n >= 1 && m >= 1, "rank and Fuss parameter must be positive");
        let vertex_count = m * (n + 1) + 2;
        let mut ccw_labels = Vec::with_capacity(vertex_count);
        ccw_labels.push(0);
        ccw_labels.extend((1..vertex_count).filter(|k| (k / m).is_multiple_of(2)));
        let odd: Vec<usize> = (1..vertex_count).filter(|k| (k / m) % 2 == 1).collect();
        ccw_labels.extend(odd.into_iter().rev());
        Self::from_ccw(n, m, Labeling::Alternating, ccw_labels)
    }

    pub fn with_labeling(n: usize, m: usize, labeling: Labeling) -> Self {
        match labeling {
            Labeling::Standard => Self::standard(n, m),
            Labeling::Alternating => Self::alternating(n, m),
        }
    }

    fn from_ccw(n: usize, m: usize, labeling: Labeling, ccw_labels: Vec<usize>) -> Self {
        let mut position_of = vec![0; ccw_labels.len()];
        for (pos, &label) in ccw_labels.iter().enumerate() {
            position_of[label] = pos;
        }
        Self {
            n,
            m,
            labeling,
            ccw_labels,
            position_of,
        }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn fuss(&self) -> usize {
        self.m
    }

    pub fn labeling(&self) -> Labeling {
        self.labeling
    }

    pub fn vertex_count(&self) -> usize {
        self.ccw_labels.len()
    }

    pub fn ccw_labels(&self) -> &[usize] {
        &self.ccw_labels
    }

    pub fn label_at(&self, position: usize) -> usize {
        self.ccw_labels[position % self.vertex_count()]
    }

    pub fn position_of(&self, label: usize) -> Result<usize, DissectionError> {
        self.position_of
            .get(label)
            .copied()
            .ok_or(DissectionError::UnknownLabel { label })
    }

    /// True when `{a, b}` is a chord (not an edge) whose endpoints sit at
    /// cyclic position distance congruent to 1 modulo m, so both sides of
    /// the cut have vertex count congruent to 2 modulo m.
    pub fn is_m_diagonal(&self, a: usize, b: usize) -> Result<bool, DissectionError> {
        if a == b {
            return Err(DissectionError::DegenerateDiagonal { label: a });
        }
        let pa = self.position_of(a)?;
        let pb = self.position_of(b)?;
        let nverts = self.vertex_count();
        let d = pa.abs_diff(pb);
        let gap = d.min(nverts - d);
        Ok(gap >= 2 && d % self.m == 1 % self.m)
    }

    /// True when the endpoints of the two chords strictly interleave in
    /// cyclic position order; chords sharing an endpoint never cross.
    pub fn diagonals_cross(
        &self,
        d1: (usize, usize),
        d2: (usize, usize),
    ) -> Result<bool, DissectionError> {
        let (a, b) = (self.position_of(d1.0)?, self.position_of(d1.1)?);
        let (c, d) = (self.position_of(d2.0)?, self.position_of(d2.1)?);
        if a == c || a == d || b == c || b == d {
            return Ok(false);
        }
        let nverts = self.vertex_count();
        // strictly inside the ccw arc from lo to hi
        let inside = |x: usize, lo: usize, hi: usize| {
            let rel = (x + nverts - lo) % nverts;
            rel > 0 && rel < (hi + nverts - lo) % nverts
        };
        Ok(inside(c, a, b) != inside(d, a, b))
    }

    /// The n diagonals representing the negative simple roots, indexed so
    /// that entry `i-1` is the diagonal of the i-th root. Consecutive
    /// diagonals share exactly one endpoint, forming a snake.
    pub fn snake_diagonals(&self) -> Vec<(usize, usize)> {
        let (n, m) = (self.n, self.m);
        (1..=n)
            .map(|i| {
                let (a, b) = match self.labeling {
                    Labeling::Alternating => ((n - i + 1) * m, (n - i + 2) * m),
                    Labeling::Standard => {
                        if i % 2 == 1 {
                            let t = i.div_ceil(2);
                            ((t - 1) * m, (n + 1 - t) * m + 1)
                        } else {
                            let t = i / 2;
                            (t * m, (n + 1 - t) * m + 1)
                        }
                    }
                };
                (a.min(b), a.max(b))
            })
            .collect()
    }
}

/// Either a negative simple root or a colored copy of a positive root,
/// the ground-set elements represented by m-diagonals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ColoredRoot {
    NegativeSimple {
        index: usize,
    },
    /// The positive root spanning simple indices `low..=high`, color in
    /// `1..=m`.
    ColoredPositive {
        low: usize,
        high: usize,
        color: usize,
    },
}

/// A maximal m-dissection: n pairwise noncrossing m-diagonals, stored as
/// label pairs with the smaller label first, sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Dissection {
    polygon: LabeledPolygon,
    diagonals: Vec<(usize, usize)>,
}

impl Dissection {
    pub fn new(
        polygon: LabeledPolygon,
        diagonals: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, DissectionError> {
        let mut diagonals: Vec<(usize, usize)> = diagonals
            .into_iter()
            .map(|(a, b)| (a.min(b), a.max(b)))
            .collect();
        diagonals.sort_unstable();
        for w in diagonals.windows(2) {
            if w[0] == w[1] {
                return Err(DissectionError::DuplicateDiagonal {
                    a: w[0].0,
                    b: w[0].1,
                });
            }
        }
        if diagonals.len() != polygon.rank() {
            return Err(DissectionError::WrongDiagonalCount {
                expected: polygon.rank(),
                got: diagonals.len(),
            });
        }
        for &(a, b) in &diagonals {
            if !polygon.is_m_diagonal(a, b)? {
                return Err(DissectionError::NotAnMDiagonal { a, b });
            }
        }
        for (s, &d1) in diagonals.iter().enumerate() {
            for &d2 in &diagonals[s + 1..] {
                if polygon.diagonals_cross(d1, d2)? {
                    return Err(DissectionError::CrossingDiagonals { d1, d2 });
                }
            }
        }
        Ok(Self { polygon, diagonals })
    }

    pub fn polygon(&self) -> &LabeledPolygon {
        &self.polygon
    }

    /// Canonical diagonal list: smaller label first, sorted.
    pub fn diagonals(&self) -> &[(usize, usize)] {
        &self.diagonals
    }

    pub fn contains_diagonal(&self, a: usize, b: usize) -> bool {
        self.diagonals.binary_search(&(a.min(b), a.max(b))).is_ok()
    }

    /// Indices of the negative simple roots whose snake diagonal belongs
    /// to this dissection.
    pub fn negative_roots_contained(&self) -> std::collections::BTreeSet<usize> {
        self.polygon
            .snake_diagonals()
            .iter()
            .enumerate()
            .filter(|(_, &(a, b))| self.contains_diagonal(a, b))
            .map(|(idx, _)| idx + 1)
            .collect()
    }

    /// The smaller endpoint labels of the diagonals, sorted decreasingly.
    /// Under either labeling the result fits the m-staircase.
    pub fn initial_points(&self) -> StaircasePartition {
        let mut points: Vec<usize> = self.diagonals.iter().map(|&(a, _)| a).collect();
        points.sort_unstable_by(|x, y| y.cmp(x));
        StaircasePartition::new(self.polygon.rank(), self.polygon.fuss(), points)
            .expect("initial points of a maximal dissection form a staircase partition")
    }
}

/// Identifies an m-diagonal with its almost positive root: snake
/// diagonals are the negative simple roots; any other m-diagonal crosses
/// a consecutive run of snake diagonals and is the `color`-th member of
/// its crossing class in the clockwise sweep order.
pub fn diagonal_to_colored_root(
    polygon: &LabeledPolygon,
    diagonal: (usize, usize),
) -> Result<ColoredRoot, DissectionError> {
    let d = (diagonal.0.min(diagonal.1), diagonal.0.max(diagonal.1));
    if !polygon.is_m_diagonal(d.0, d.1)? {
        return Err(DissectionError::NotAnMDiagonal { a: d.0, b: d.1 });
    }
    let snake = polygon.snake_diagonals();
    if let Some(idx) = snake.iter().position(|&s| s == d) {
        return Ok(ColoredRoot::NegativeSimple { index: idx + 1 });
    }
    let crossed = crossing_interval(polygon, &snake, d)?;
    let (low, high) = crossed;
    let mut class = Vec::new();
    for (a, b) in all_m_diagonals(polygon) {
        if snake.contains(&(a, b)) {
            continue;
        }
        if crossing_interval(polygon, &snake, (a, b))? == crossed {
            class.push((a, b));
        }
    }
    if class.len() != polygon.fuss() {
        return Err(DissectionError::UnexpectedClassSize {
            low,
            high,
            expected: polygon.fuss(),
            got: class.len(),
        });
    }
    // clockwise sweep: descending position pairs; members of a class
    // pairwise cross, so the order is total
    let mut keyed: Vec<((usize, usize), (usize, usize))> = class
        .into_iter()
        .map(|(a, b)| {
            let (pa, pb) = (
                polygon.position_of(a).unwrap(),
                polygon.position_of(b).unwrap(),
            );
            ((pa.min(pb), pa.max(pb)), (a, b))
        })
        .collect();
    keyed.sort_unstable_by_key(|&(positions, _)| std::cmp::Reverse(positions));
    let color = keyed
        .iter()
        .position(|&(_, lab)| lab == d)
        .expect("diagonal is in its class")
        + 1;
    Ok(ColoredRoot::ColoredPositive { low, high, color })
}

fn crossing_interval(
    polygon: &LabeledPolygon,
    snake: &[(usize, usize)],
    d: (usize, usize),
) -> Result<(usize, usize), DissectionError> {
    let crossed: Vec<usize> = snake
        .iter()
        .enumerate()
        .filter(|(_, &s)| polygon.diagonals_cross(d, s).unwrap_or(false))
        .map(|(idx, _)| idx + 1)
        .collect();
    if crossed.is_empty() || crossed.windows(2).any(|w| w[1] != w[0] + 1) {
        return Err(DissectionError::NonConsecutiveCrossing {
            a: d.0,
            b: d.1,
            crossed,
        });
    }
    Ok((crossed[0], *crossed.last().unwrap()))
}

/// Every m-diagonal of the polygon as a canonical label pair.
pub fn all_m_diagonals(polygon: &LabeledPolygon) -> Vec<(usize, usize)> {
    let nverts = polygon.vertex_count();
    let mut out = Vec::new();
    for pa in 0..nverts {
        for pb in pa + 1..nverts {
            let (a, b) = (polygon.label_at(pa), polygon.label_at(pb));
            if polygon.is_m_diagonal(a, b).unwrap() {
                out.push((a.min(b), a.max(b)));
            }
        }
    }
    out
}

/// Streams every maximal m-dissection exactly once. The recursion fixes
/// a boundary edge, chooses the (m+2)-gon face containing it, and
/// recurses into the sub-polygons cut off by the face's chords.
pub fn enumerate_dissections(
    n: usize,
    m: usize,
    labeling: Labeling,
) -> impl Iterator<Item = Dissection> {
    let polygon = LabeledPolygon::with_labeling(n, m, labeling);
    let positions: Vec<usize> = (0..polygon.vertex_count()).collect();
    let by_positions = dissect_slice(&positions, m);
    by_positions.into_iter().map(move |diags| {
        let labeled = diags
            .into_iter()
            .map(|(pa, pb)| (polygon.label_at(pa), polygon.label_at(pb)));
        Dissection::new(polygon.clone(), labeled)
            .expect("enumerated position sets are valid dissections")
    })
}

/// All dissections of the sub-polygon on `vs` (contiguous boundary
/// positions closed by the chord between first and last), as lists of
/// position pairs.
fn dissect_slice(vs: &[usize], m: usize) -> Vec<Vec<(usize, usize)>> {
    if vs.len() == 2 {
        return vec![Vec::new()];
    }
    debug_assert!(vs.len() >= m + 2 && (vs.len() - 2).is_multiple_of(m));
    let mut results = Vec::new();
    let mut face = vec![0usize];
    choose_face(vs, m, &mut face, &mut results);
    results
}

/// Extends `face` (indices into `vs` of the face containing the closing
/// chord) one vertex at a time; every consecutive pair must sit at index
/// distance congruent to 1 modulo m.
fn choose_face(
    vs: &[usize],
    m: usize,
    face: &mut Vec<usize>,
    results: &mut Vec<Vec<(usize, usize)>>,
) {
    let last = vs.len() - 1;
    if face.len() == m + 1 {
        let start = *face.last().unwrap();
        let gap = last - start;
        if gap >= 1 && gap % m == 1 % m {
            emit_face(vs, m, face, results);
        }
        return;
    }
    let start = *face.last().unwrap();
    let remaining = m + 1 - face.len();
    let mut next = start + 1;
    // leave room for the remaining face vertices
    while next + (remaining - 1) < last {
        face.push(next);
        choose_face(vs, m, face, results);
        face.pop();
        next += m;
    }
}

fn emit_face(vs: &[usize], m: usize, face: &[usize], results: &mut Vec<Vec<(usize, usize)>>) {
    let mut corners = face.to_vec();
    corners.push(vs.len() - 1);
    let mut combos: Vec<Vec<(usize, usize)>> = vec![Vec::new()];
    for w in corners.windows(2) {
        let (a, b) = (w[0], w[1]);
        if b - a == 1 {
            continue;
        }
        let chord = (vs[a], vs[b]);
        let sub = dissect_slice(&vs[a..=b], m);
        let mut extended = Vec::with_capacity(combos.len() * sub.len());
        for prefix in &combos {
            for inner in &sub {
                let mut item = prefix.clone();
                item.push(chord);
                item.extend(inner.iter().copied());
                extended.push(item);
            }
        }
        combos = extended;
    }
    results.extend(combos);
}
