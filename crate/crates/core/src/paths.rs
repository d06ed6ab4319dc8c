//! Northeast paths, the Ferrers region above a fixed path ν, and the
//! ν-Tamari order on ν-paths.
//!
//! Coordinates start at the origin, `x` grows east and `y` grows north. A
//! point "on" a path is any of its `len + 1` trace points.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};

/// A unit step of a northeast path.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    /// `(0, 1)`. Sorts before `E`.
    N,
    /// `(1, 0)`.
    E,
}

impl Step {
    pub fn as_char(self) -> char {
        match self {
            Step::N => 'N',
            Step::E => 'E',
        }
    }
}

/// A lattice point `(x, y)`.
///
/// Points order bottom row first and right to left within a row. This is the
/// canonical node order used for trees and faces.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LatticePoint {
    pub x: u32,
    pub y: u32,
}

impl LatticePoint {
    pub const fn new(x: u32, y: u32) -> Self {
        LatticePoint { x, y }
    }

    /// True if `self` is strictly south-west of `other`.
    pub fn strictly_southwest_of(self, other: LatticePoint) -> bool {
        self.x < other.x && self.y < other.y
    }
}

impl Ord for LatticePoint {
    fn cmp(&self, other: &Self) -> Ordering {
        self.y.cmp(&other.y).then_with(|| other.x.cmp(&self.x))
    }
}

impl PartialOrd for LatticePoint {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

impl From<(u32, u32)> for LatticePoint {
    fn from((x, y): (u32, u32)) -> Self {
        LatticePoint { x, y }
    }
}

/// A non-empty northeast path starting at the origin.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NuPath {
    steps: Vec<Step>,
}

impl NuPath {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        if steps.is_empty() {
            return Err(Error::EmptyPath);
        }
        Ok(NuPath { steps })
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    /// Number of east steps.
    pub fn width(&self) -> u32 {
        self.steps.iter().filter(|&&s| s == Step::E).count() as u32
    }

    /// Number of north steps.
    pub fn height(&self) -> u32 {
        self.steps.iter().filter(|&&s| s == Step::N).count() as u32
    }

    pub fn endpoint(&self) -> LatticePoint {
        LatticePoint::new(self.width(), self.height())
    }

    /// The `len + 1` lattice points visited by the path, in order.
    pub fn trace(&self) -> Vec<LatticePoint> {
        let mut p = LatticePoint::new(0, 0);
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        out.push(p);
        for s in &self.steps {
            match s {
                Step::N => p.y += 1,
                Step::E => p.x += 1,
            }
            out.push(p);
        }
        out
    }

    /// Trace indices `i` such that the path has an `EN` factor at point `i`.
    fn valley_indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.steps
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] == Step::E && w[1] == Step::N)
            .map(|(i, _)| i + 1)
    }

    /// Points preceded by an east step and followed by a north step, in path order.
    pub fn valleys(&self) -> Vec<LatticePoint> {
        let trace = self.trace();
        self.valley_indices().map(|i| trace[i]).collect()
    }

    pub fn val(&self) -> usize {
        self.valley_indices().count()
    }

    /// Number of trace points at each height `0..=height`.
    pub fn height_sequence(&self) -> Vec<usize> {
        let mut seq = alloc::vec![0usize; self.height() as usize + 1];
        for p in self.trace() {
            seq[p.y as usize] += 1;
        }
        seq
    }

    /// Rebuilds the unique northeast path with the given height sequence.
    pub fn from_height_sequence(seq: &[usize]) -> Result<Self> {
        let mut steps = Vec::new();
        for (i, &a) in seq.iter().enumerate() {
            if a == 0 {
                return Err(Error::NotANuPath);
            }
            steps.extend(core::iter::repeat_n(Step::E, a - 1));
            if i + 1 < seq.len() {
                steps.push(Step::N);
            }
        }
        NuPath::new(steps)
    }

    /// `N^a self E^b`.
    pub fn padded(&self, north: usize, east: usize) -> NuPath {
        let mut steps = alloc::vec![Step::N; north];
        steps.extend_from_slice(&self.steps);
        steps.extend(core::iter::repeat_n(Step::E, east));
        NuPath { steps }
    }
}

impl FromStr for NuPath {
    type Err = Error;

    /// Parses a word over `{N, E}`, case-insensitively.
    fn from_str(s: &str) -> Result<Self> {
        let steps = s
            .trim()
            .chars()
            .map(|c| match c.to_ascii_uppercase() {
                'N' => Ok(Step::N),
                'E' => Ok(Step::E),
                _ => Err(Error::InvalidStep(c)),
            })
            .collect::<Result<Vec<_>>>()?;
        NuPath::new(steps)
    }
}

impl fmt::Display for NuPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            fmt::Write::write_char(f, s.as_char())?;
        }
        Ok(())
    }
}

/// The lattice points `A_ν` of the Ferrers diagram weakly above ν inside its
/// bounding rectangle.
///
/// Row `y` holds the points `x = 0..=row_max[y]`. Points are indexed in
/// canonical order (bottom to top, right to left).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FerrersRegion {
    nu: NuPath,
    row_max: Vec<u32>,
    row_start: Vec<usize>,
    len: usize,
}

impl FerrersRegion {
    pub fn new(nu: &NuPath) -> Self {
        let mut row_max = alloc::vec![0u32; nu.height() as usize + 1];
        for p in nu.trace() {
            let r = &mut row_max[p.y as usize];
            *r = (*r).max(p.x);
        }
        let mut row_start = Vec::with_capacity(row_max.len());
        let mut len = 0;
        for &r in &row_max {
            row_start.push(len);
            len += r as usize + 1;
        }
        FerrersRegion {
            nu: nu.clone(),
            row_max,
            row_start,
            len,
        }
    }

    pub fn nu(&self) -> &NuPath {
        &self.nu
    }

    /// `m`, the number of east steps of ν.
    pub fn width(&self) -> u32 {
        self.row_max[self.row_max.len() - 1]
    }

    /// `n`, the number of north steps of ν.
    pub fn height(&self) -> u32 {
        (self.row_max.len() - 1) as u32
    }

    pub fn row_max(&self, y: u32) -> u32 {
        self.row_max[y as usize]
    }

    pub fn row_maxima(&self) -> &[u32] {
        &self.row_max
    }

    pub fn contains(&self, p: LatticePoint) -> bool {
        (p.y as usize) < self.row_max.len() && p.x <= self.row_max[p.y as usize]
    }

    /// `|A_ν|`.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn index_of(&self, p: LatticePoint) -> Option<usize> {
        self.contains(p)
            .then(|| self.row_start[p.y as usize] + (self.row_max[p.y as usize] - p.x) as usize)
    }

    pub fn point(&self, index: usize) -> LatticePoint {
        let y = self.row_start.partition_point(|&s| s <= index) - 1;
        let x = self.row_max[y] - (index - self.row_start[y]) as u32;
        LatticePoint::new(x, y as u32)
    }

    /// All points of `A_ν` in canonical order.
    pub fn points(&self) -> impl Iterator<Item = LatticePoint> + '_ {
        self.row_max
            .iter()
            .enumerate()
            .flat_map(|(y, &r)| (0..=r).rev().map(move |x| LatticePoint::new(x, y as u32)))
    }

    /// The top-left corner `(0, n)`, contained in every ν-tree.
    pub fn top_left(&self) -> LatticePoint {
        LatticePoint::new(0, self.height())
    }

    /// Maximal number of east steps that can be appended at `p` without leaving the region.
    pub fn horizontal_distance(&self, p: LatticePoint) -> Result<u32> {
        if !self.contains(p) {
            return Err(Error::PointOutsideRegion(p));
        }
        Ok(self.row_max[p.y as usize] - p.x)
    }

    /// True if the closed rectangle spanned by `a` and `b` lies inside the region.
    pub fn contains_rectangle(&self, a: LatticePoint, b: LatticePoint) -> bool {
        // row_max is non-decreasing in y, so the bottom-right corner decides.
        self.contains(LatticePoint::new(a.x.max(b.x), a.y.min(b.y)))
    }

    /// True if `mu` shares endpoints with ν and stays inside the region.
    pub fn admits(&self, mu: &NuPath) -> bool {
        mu.endpoint() == self.nu.endpoint() && mu.trace().into_iter().all(|p| self.contains(p))
    }

    /// Heights of the rows containing a valley of ν, ascending.
    pub fn valley_rows(&self) -> Vec<u32> {
        self.nu.valleys().into_iter().map(|p| p.y).collect()
    }

    /// True if row `y` contains a valley of ν.
    pub fn row_has_valley(&self, y: u32) -> bool {
        self.nu.valleys().iter().any(|p| p.y == y)
    }
}

/// All ν-paths in lexicographic order with `N < E`.
pub fn enumerate_nu_paths(nu: &NuPath) -> Vec<NuPath> {
    let region = FerrersRegion::new(nu);
    let total = nu.len();
    let mut out = Vec::new();
    let mut word = Vec::with_capacity(total);
    fn go(
        region: &FerrersRegion,
        p: LatticePoint,
        word: &mut Vec<Step>,
        total: usize,
        out: &mut Vec<NuPath>,
    ) {
        if word.len() == total {
            out.push(NuPath {
                steps: word.clone(),
            });
            return;
        }
        if p.y < region.height() {
            word.push(Step::N);
            go(region, LatticePoint::new(p.x, p.y + 1), word, total, out);
            word.pop();
        }
        if p.x < region.row_max(p.y) {
            word.push(Step::E);
            go(region, LatticePoint::new(p.x + 1, p.y), word, total, out);
            word.pop();
        }
    }
    go(&region, LatticePoint::new(0, 0), &mut word, total, &mut out);
    out
}

/// Valleys of `mu` that are also valleys of `nu`.
pub fn returns(mu: &NuPath, nu: &NuPath) -> Result<Vec<LatticePoint>> {
    if !FerrersRegion::new(nu).admits(mu) {
        return Err(Error::NotANuPath);
    }
    let nu_valleys = nu.valleys();
    Ok(mu
        .valleys()
        .into_iter()
        .filter(|p| nu_valleys.contains(p))
        .collect())
}

/// Rotation of `mu` at `valley`: the east step before the valley is swapped
/// with the subpath up to the next point of equal horizontal distance.
pub fn rotate_path(mu: &NuPath, nu: &NuPath, valley: LatticePoint) -> Result<NuPath> {
    let region = FerrersRegion::new(nu);
    if !region.admits(mu) {
        return Err(Error::NotANuPath);
    }
    rotate_in_region(mu, &region, valley)
}

pub(crate) fn rotate_in_region(
    mu: &NuPath,
    region: &FerrersRegion,
    valley: LatticePoint,
) -> Result<NuPath> {
    let trace = mu.trace();
    let i = mu
        .valley_indices()
        .find(|&i| trace[i] == valley)
        .ok_or(Error::NotAValley(valley))?;
    let h = region.horizontal_distance(valley)?;
    let j = (i + 1..trace.len())
        .find(|&j| region.horizontal_distance(trace[j]) == Ok(h))
        .expect(
            "the endpoint has horizontal distance 0 and distances move by at most one per step",
        );
    let mut steps = Vec::with_capacity(mu.len());
    steps.extend_from_slice(&mu.steps[..i - 1]);
    steps.extend_from_slice(&mu.steps[i..j]);
    steps.push(Step::E);
    steps.extend_from_slice(&mu.steps[j..]);
    let rotated = NuPath { steps };
    debug_assert!(region.admits(&rotated));
    Ok(rotated)
}

/// Maximal number of valleys over all ν-paths, by enumeration.
pub fn degree(nu: &NuPath) -> usize {
    enumerate_nu_paths(nu)
        .iter()
        .map(NuPath::val)
        .max()
        .unwrap_or(0)
}

/// Size of the largest staircase fitting above ν: greedily place the `j`-th
/// valley at column `j` in the lowest row (below the top row) that reaches it.
pub fn staircase_degree(nu: &NuPath) -> usize {
    let region = FerrersRegion::new(nu);
    let mut k = 0u32;
    for y in 0..region.height() {
        if region.row_max(y) > k {
            k += 1;
        }
    }
    k as usize
}

/// The ν-Tamari lattice as its cover digraph on ν-paths.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TamariLattice {
    pub nu: NuPath,
    /// Vertices in canonical path order.
    pub paths: Vec<NuPath>,
    /// `(lower, upper)` indices into `paths`, one per rotation.
    pub covers: Vec<(usize, usize)>,
}

impl TamariLattice {
    pub fn index_of(&self, mu: &NuPath) -> Option<usize> {
        self.paths.binary_search(mu).ok()
    }

    /// The unique source of the cover digraph.
    pub fn minimum(&self) -> Option<usize> {
        let mut has_lower = alloc::vec![false; self.paths.len()];
        self.covers.iter().for_each(|&(_, b)| has_lower[b] = true);
        let mut it = (0..self.paths.len()).filter(|&i| !has_lower[i]);
        it.next().filter(|_| it.next().is_none())
    }

    /// The unique sink of the cover digraph.
    pub fn maximum(&self) -> Option<usize> {
        let mut has_upper = alloc::vec![false; self.paths.len()];
        self.covers.iter().for_each(|&(a, _)| has_upper[a] = true);
        let mut it = (0..self.paths.len()).filter(|&i| !has_upper[i]);
        it.next().filter(|_| it.next().is_none())
    }
}

pub fn tamari_lattice(nu: &NuPath) -> TamariLattice {
    let region = FerrersRegion::new(nu);
    let paths = enumerate_nu_paths(nu);
    let mut covers = Vec::new();
    for (a, mu) in paths.iter().enumerate() {
        for v in mu.valleys() {
            let up = rotate_in_region(mu, &region, v).expect("valley of a ν-path");
            let b = paths.binary_search(&up).expect("rotation stays in D_ν");
            covers.push((a, b));
        }
    }
    covers.sort_unstable();
    TamariLattice {
        nu: nu.clone(),
        paths,
        covers,
    }
}
