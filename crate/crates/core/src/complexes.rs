//! The ν-Tamari complex, covering ν-faces (the cells of the ν-associahedron),
//! ν-Schröder paths, and face/h-vector bookkeeping.

use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use fixedbitset::FixedBitSet;
use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::paths::{FerrersRegion, LatticePoint, NuPath};
use crate::trees::{enumerate_trees_in, flush, CompatibilityGraph, NuFace, NuTree};

/// A cell of the ν-associahedron together with its statistics.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoveringFace {
    face: NuFace,
    dim: usize,
    rel: usize,
    corel: usize,
}

impl CoveringFace {
    /// Computes the statistics of `face` for an associahedron of dimension `deg`.
    pub fn new(face: NuFace, deg: usize) -> Result<Self> {
        if !is_covering_face(&face) {
            return Err(Error::NotANuTree);
        }
        let full = (face.region().width() + face.region().height() + 1) as usize;
        let dim = full - face.len();
        let rel = face.rel();
        let corel = deg
            .checked_sub(dim + rel)
            .ok_or(Error::InconsistentDimension {
                needed: dim + rel,
                given: deg,
            })?;
        Ok(CoveringFace {
            face,
            dim,
            rel,
            corel,
        })
    }

    pub fn face(&self) -> &NuFace {
        &self.face
    }

    pub fn nodes(&self) -> &[LatticePoint] {
        self.face.nodes()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rel(&self) -> usize {
        self.rel
    }

    pub fn corel(&self) -> usize {
        self.corel
    }

    pub fn codim(&self) -> usize {
        self.corel + self.rel
    }
}

impl PartialOrd for CoveringFace {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CoveringFace {
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        self.dim
            .cmp(&other.dim)
            .then_with(|| self.face.cmp(&other.face))
    }
}

/// Pairwise compatible, contains the top-left corner, and meets every row and
/// column of the region.
pub fn is_covering_face(face: &NuFace) -> bool {
    let region = face.region();
    let mut rows = FixedBitSet::with_capacity(region.height() as usize + 1);
    let mut cols = FixedBitSet::with_capacity(region.width() as usize + 1);
    for p in face.nodes() {
        rows.insert(p.y as usize);
        cols.insert(p.x as usize);
    }
    face.contains(region.top_left())
        && rows.is_full()
        && cols.is_full()
        && face.is_pairwise_compatible()
}

/// Covering faces as `T \ A` for ν-trees `T` and subsets `A` of their ascents.
pub fn enumerate_asso_faces(nu: &NuPath) -> Vec<CoveringFace> {
    let region = Arc::new(FerrersRegion::new(nu));
    let trees = enumerate_trees_in(&region);
    let deg = trees.iter().map(NuTree::asc).max().unwrap_or(0);
    asso_faces_from_trees(&trees, deg)
}

pub(crate) fn asso_faces_from_trees(trees: &[NuTree], deg: usize) -> Vec<CoveringFace> {
    let mut out = Vec::new();
    for t in trees {
        for (face, _) in ascent_subsets(t) {
            out.push(CoveringFace::new(face, deg).expect("T \\ A is a covering face"));
        }
    }
    out.sort_unstable();
    out
}

/// All `(T \ A, A)` for `A ⊆ Asc(T)`.
pub fn ascent_subsets(tree: &NuTree) -> impl Iterator<Item = (NuFace, Vec<LatticePoint>)> + '_ {
    let qs: Vec<LatticePoint> = tree.ascents().into_iter().map(|a| a.q).collect();
    (0u64..1 << qs.len()).map(move |mask| {
        let removed: Vec<LatticePoint> = qs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &q)| q)
            .collect();
        (tree.face().without(&removed), removed)
    })
}

/// Covering faces found by filtering every face of the ν-Tamari complex.
pub fn asso_faces_by_definition(nu: &NuPath) -> Vec<CoveringFace> {
    let region = Arc::new(FerrersRegion::new(nu));
    let deg = crate::paths::degree(nu);
    let graph = CompatibilityGraph::new(region.clone());
    let mut out = Vec::new();
    graph.for_each_clique(|c| {
        let face = NuFace::from_indices(&region, c);
        if is_covering_face(&face) {
            out.push(CoveringFace::new(face, deg).expect("checked"));
        }
    });
    out.sort_unstable();
    out
}

/// The unique `(T, A)` with `face = T \ A` and `A ⊆ Asc(T)`.
pub fn bottom_tree(face: &NuFace, trees: &[NuTree]) -> Result<(NuTree, Vec<LatticePoint>)> {
    let mut found = trees.iter().filter_map(|t| {
        if !face.nodes().iter().all(|&p| t.face().contains(p)) {
            return None;
        }
        let removed: Vec<_> = t
            .nodes()
            .iter()
            .copied()
            .filter(|&p| !face.contains(p))
            .collect();
        let asc: Vec<_> = t.ascents().into_iter().map(|a| a.q).collect();
        removed
            .iter()
            .all(|q| asc.contains(q))
            .then(|| (t.clone(), removed))
    });
    let first = found.next().ok_or(Error::NotANuTree)?;
    assert!(found.next().is_none(), "bottom tree is unique");
    Ok(first)
}

/// Counts of faces by dimension, shifted so that `f[i]` is the number of
/// faces of dimension `i - 1` (entry 0 counts the empty face).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FaceVector {
    pub f: Vec<u64>,
}

impl FaceVector {
    /// Number of faces of dimension `dim` (`-1` for the empty face).
    pub fn count(&self, dim: isize) -> u64 {
        usize::try_from(dim + 1)
            .ok()
            .and_then(|i| self.f.get(i))
            .copied()
            .unwrap_or(0)
    }

    /// Counts for dimensions `0, 1, …` up to the top non-empty one.
    pub fn by_dimension(&self) -> Vec<u64> {
        let mut v: Vec<u64> = self.f.iter().skip(1).copied().collect();
        while v.last() == Some(&0) {
            v.pop();
        }
        v
    }

    fn bump(&mut self, dim_plus_one: usize) {
        if self.f.len() <= dim_plus_one {
            self.f.resize(dim_plus_one + 1, 0);
        }
        self.f[dim_plus_one] += 1;
    }

    pub fn total(&self) -> u64 {
        self.f.iter().sum()
    }
}

impl fmt::Display for FaceVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, v) in self.f.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(")")
    }
}

/// f-vector of the ν-associahedron (no empty face).
pub fn asso_f_vector(faces: &[CoveringFace]) -> FaceVector {
    let mut fv = FaceVector { f: vec![0] };
    for c in faces {
        fv.bump(c.dim() + 1);
    }
    fv
}

/// Faces of the ν-Tamari complex grouped by size; entry `i` holds the faces
/// of dimension `i - 1`.
pub fn enumerate_tc_faces(nu: &NuPath) -> Vec<Vec<NuFace>> {
    let region = Arc::new(FerrersRegion::new(nu));
    let graph = CompatibilityGraph::new(region.clone());
    let mut out: Vec<Vec<NuFace>> = Vec::new();
    graph.for_each_clique(|c| {
        if out.len() <= c.len() {
            out.resize(c.len() + 1, Vec::new());
        }
        out[c.len()].push(NuFace::from_indices(&region, c));
    });
    out.iter_mut().for_each(|g| g.sort_unstable());
    out
}

pub fn tc_f_vector(nu: &NuPath) -> FaceVector {
    let graph = CompatibilityGraph::new(Arc::new(FerrersRegion::new(nu)));
    let mut fv = FaceVector::default();
    graph.for_each_clique(|c| fv.bump(c.len()));
    fv
}

/// `h` from `Σ h_i x^i = Σ f_{i-1} x^i (1-x)^{d-i}`, indices `0..=d`.
pub fn h_vector(fv: &FaceVector, d: usize) -> Result<Vec<BigInt>> {
    let top = fv.f.iter().rposition(|&v| v != 0).unwrap_or(0);
    if top > d {
        return Err(Error::InconsistentDimension {
            needed: top,
            given: d,
        });
    }
    let mut h = vec![BigInt::zero(); d + 1];
    for (i, &fi) in fv.f.iter().enumerate().take(d + 1) {
        let fi = BigInt::from(fi);
        // f_{i-1} x^i (1-x)^{d-i} = Σ_j C(d-i, j) (-1)^j x^{i+j}
        let mut binom = BigInt::one();
        for j in 0..=d - i {
            let term = &fi * &binom;
            if j % 2 == 0 {
                h[i + j] += term;
            } else {
                h[i + j] -= term;
            }
            binom = binom * BigInt::from(d - i - j) / BigInt::from(j + 1);
        }
    }
    Ok(h)
}

/// Inverse base change: `f_{k-1} = Σ_i h_i C(d-i, k-i)`.
pub fn f_vector_from_h(h: &[BigInt]) -> Vec<BigInt> {
    let d = h.len().saturating_sub(1);
    let mut f = vec![BigInt::zero(); d + 1];
    for (i, hi) in h.iter().enumerate() {
        let mut binom = BigInt::one();
        for j in 0..=d - i {
            f[i + j] += hi * &binom;
            binom = binom * BigInt::from(d - i - j) / BigInt::from(j + 1);
        }
    }
    f
}

/// Interior faces of the ν-Tamari complex, grouped like
/// [`enumerate_tc_faces`].
///
/// The complex is a pure ball; a face is interior when it lies in no boundary
/// ridge, i.e. no codimension-one face contained in exactly one facet.
pub fn interior_faces(nu: &NuPath) -> Vec<Vec<NuFace>> {
    let region = Arc::new(FerrersRegion::new(nu));
    let graph = CompatibilityGraph::new(region.clone());
    let n = region.len();
    let facets = graph.maximal_cliques();
    let mut ridge_count: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    for facet in &facets {
        for skip in 0..facet.len() {
            let ridge: Vec<usize> = facet
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != skip)
                .map(|(_, &v)| v)
                .collect();
            *ridge_count.entry(ridge).or_default() += 1;
        }
    }
    assert!(
        ridge_count.values().all(|&c| c <= 2),
        "ν-Tamari complex is a pseudomanifold"
    );
    let boundary: Vec<FixedBitSet> = ridge_count
        .iter()
        .filter(|(_, &c)| c == 1)
        .map(|(r, _)| {
            let mut b = FixedBitSet::with_capacity(n);
            r.iter().for_each(|&v| b.insert(v));
            b
        })
        .collect();
    let mut out: Vec<Vec<NuFace>> = vec![Vec::new(); facets.first().map_or(0, Vec::len) + 1];
    graph.for_each_clique(|c| {
        let mut set = FixedBitSet::with_capacity(n);
        c.iter().for_each(|&v| set.insert(v));
        if !boundary.iter().any(|b| set.is_subset(b)) {
            out[c.len()].push(NuFace::from_indices(&region, c));
        }
    });
    out.iter_mut().for_each(|g| g.sort_unstable());
    out
}

/// A step of a ν-Schröder path.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SchroderStep {
    N,
    E,
    /// The diagonal step `(1, 1)`.
    D,
}

/// A path of `N`, `E` and `D` steps weakly above ν with ν's endpoints.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SchroderPath {
    nu: NuPath,
    steps: Vec<SchroderStep>,
}

impl SchroderPath {
    pub fn new(nu: &NuPath, steps: Vec<SchroderStep>) -> Result<Self> {
        let region = FerrersRegion::new(nu);
        let mut p = LatticePoint::new(0, 0);
        for &s in &steps {
            if !schroder_step_allowed(&region, p, s) {
                return Err(Error::InvalidSchroderPath);
            }
            p = advance(p, s);
        }
        if p != nu.endpoint() {
            return Err(Error::InvalidSchroderPath);
        }
        Ok(SchroderPath {
            nu: nu.clone(),
            steps,
        })
    }

    pub fn parse(nu: &NuPath, word: &str) -> Result<Self> {
        let steps = word
            .chars()
            .map(|c| match c.to_ascii_uppercase() {
                'N' => Ok(SchroderStep::N),
                'E' => Ok(SchroderStep::E),
                'D' => Ok(SchroderStep::D),
                _ => Err(Error::InvalidStep(c)),
            })
            .collect::<Result<Vec<_>>>()?;
        SchroderPath::new(nu, steps)
    }

    pub fn nu(&self) -> &NuPath {
        &self.nu
    }

    pub fn steps(&self) -> &[SchroderStep] {
        &self.steps
    }

    pub fn diagonal_steps(&self) -> usize {
        self.steps.iter().filter(|&&s| s == SchroderStep::D).count()
    }

    pub fn trace(&self) -> Vec<LatticePoint> {
        let mut p = LatticePoint::new(0, 0);
        let mut out = vec![p];
        for &s in &self.steps {
            p = advance(p, s);
            out.push(p);
        }
        out
    }

    /// Points with an `EN` factor.
    pub fn valleys(&self) -> Vec<LatticePoint> {
        let trace = self.trace();
        self.steps
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] == SchroderStep::E && w[1] == SchroderStep::N)
            .map(|(i, _)| trace[i + 1])
            .collect()
    }

    /// `EN` valleys that are also valleys of ν.
    pub fn returns(&self) -> Vec<LatticePoint> {
        let nu_valleys = self.nu.valleys();
        self.valleys()
            .into_iter()
            .filter(|p| nu_valleys.contains(p))
            .collect()
    }

    /// For each height, whether each point (left to right) starts an east or
    /// diagonal step.
    fn row_flags(&self) -> Vec<Vec<bool>> {
        let mut rows = vec![Vec::new(); self.nu.height() as usize + 1];
        let trace = self.trace();
        for (i, p) in trace.iter().enumerate() {
            let forbids = matches!(self.steps.get(i), Some(SchroderStep::E | SchroderStep::D));
            rows[p.y as usize].push(forbids);
        }
        rows
    }
}

impl fmt::Display for SchroderPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            let c = match s {
                SchroderStep::N => 'N',
                SchroderStep::E => 'E',
                SchroderStep::D => 'D',
            };
            fmt::Write::write_char(f, c)?;
        }
        Ok(())
    }
}

fn advance(p: LatticePoint, s: SchroderStep) -> LatticePoint {
    match s {
        SchroderStep::N => LatticePoint::new(p.x, p.y + 1),
        SchroderStep::E => LatticePoint::new(p.x + 1, p.y),
        SchroderStep::D => LatticePoint::new(p.x + 1, p.y + 1),
    }
}

/// A diagonal step crosses the unit cell whose bottom-right corner must lie in the region.
fn schroder_step_allowed(region: &FerrersRegion, p: LatticePoint, s: SchroderStep) -> bool {
    match s {
        SchroderStep::N => {
            p.y < region.height() && region.contains(LatticePoint::new(p.x, p.y + 1))
        }
        SchroderStep::E => region.contains(LatticePoint::new(p.x + 1, p.y)),
        SchroderStep::D => {
            p.y < region.height() && region.contains(LatticePoint::new(p.x + 1, p.y))
        }
    }
}

pub fn enumerate_schroder_paths(nu: &NuPath) -> Vec<SchroderPath> {
    let region = FerrersRegion::new(nu);
    let end = nu.endpoint();
    let mut out = Vec::new();
    fn go(
        region: &FerrersRegion,
        nu: &NuPath,
        end: LatticePoint,
        p: LatticePoint,
        steps: &mut Vec<SchroderStep>,
        out: &mut Vec<SchroderPath>,
    ) {
        if p == end {
            out.push(SchroderPath {
                nu: nu.clone(),
                steps: steps.clone(),
            });
            return;
        }
        for s in [SchroderStep::N, SchroderStep::E, SchroderStep::D] {
            if schroder_step_allowed(region, p, s) {
                steps.push(s);
                go(region, nu, end, advance(p, s), steps, out);
                steps.pop();
            }
        }
    }
    go(
        &region,
        nu,
        end,
        LatticePoint::new(0, 0),
        &mut Vec::new(),
        &mut out,
    );
    out
}

/// Right flushing with forbidden columns above the nodes of points that start
/// east or diagonal steps.
pub fn schroder_to_face(pi: &SchroderPath, deg: usize) -> Result<CoveringFace> {
    let region = Arc::new(FerrersRegion::new(&pi.nu));
    schroder_to_face_in(pi, &region, deg)
}

pub(crate) fn schroder_to_face_in(
    pi: &SchroderPath,
    region: &Arc<FerrersRegion>,
    deg: usize,
) -> Result<CoveringFace> {
    let face = flush(region, &pi.row_flags()).ok_or(Error::InvalidSchroderPath)?;
    CoveringFace::new(face, deg).map_err(|_| Error::InvalidSchroderPath)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::paths::enumerate_nu_paths;
    use crate::trees::right_flushing_in;
    use alloc::string::ToString;

    fn p(s: &str) -> NuPath {
        s.parse().unwrap()
    }

    #[test]
    fn tc_dimensions() {
        assert_eq!(tc_f_vector(&p("EENEN")).f.len() - 2, 5);
        assert_eq!(tc_f_vector(&p("ENEENEN")).f.len() - 2, 7);
    }

    #[test]
    fn tc_facets_are_trees() {
        let nu = p("ENEENEN");
        let faces = enumerate_tc_faces(&nu);
        let facets: Vec<_> = faces.last().unwrap().clone();
        let trees: Vec<_> = crate::trees::enumerate_nu_trees(&nu)
            .into_iter()
            .map(NuTree::into_face)
            .collect();
        assert_eq!(facets, trees);
    }

    #[test]
    fn asso_f_vectors() {
        let faces = enumerate_asso_faces(&p("ENEENEN"));
        assert_eq!(asso_f_vector(&faces).by_dimension(), [23, 39, 20, 3]);
        let faces = enumerate_asso_faces(&p("EENEN"));
        assert_eq!(asso_f_vector(&faces).by_dimension(), [9, 11, 3]);
    }

    #[test]
    fn schroder_counts() {
        let nu = p("ENEENEN");
        let paths = enumerate_schroder_paths(&nu);
        assert_eq!(paths.len(), 85);
        let plain: Vec<_> = paths.iter().filter(|s| s.diagonal_steps() == 0).collect();
        assert_eq!(plain.len(), 23);
    }

    #[test]
    fn diagonal_free_schroder_paths_flush_like_nu_paths() {
        let nu = p("ENEENEN");
        let region = Arc::new(FerrersRegion::new(&nu));
        for mu in enumerate_nu_paths(&nu) {
            let pi = SchroderPath::parse(&nu, &mu.to_string()).unwrap();
            let face = schroder_to_face_in(&pi, &region, 3).unwrap();
            assert_eq!(face.face(), right_flushing_in(&mu, &region).unwrap().face());
        }
    }

    #[test]
    fn schroder_validation() {
        let nu = p("NE");
        assert_eq!(
            SchroderPath::parse(&nu, "D"),
            Err(Error::InvalidSchroderPath)
        );
        assert!(SchroderPath::parse(&p("EN"), "D").is_ok());
        assert_eq!(
            SchroderPath::parse(&nu, "N"),
            Err(Error::InvalidSchroderPath)
        );
    }

    #[test]
    fn h_vector_trivial_and_round_trip() {
        let empty = FaceVector { f: vec![1] };
        assert_eq!(h_vector(&empty, 0).unwrap(), [BigInt::one()]);
        let fv = tc_f_vector(&p("EENEN"));
        let h = h_vector(&fv, 6).unwrap();
        let expect: Vec<BigInt> = [1, 5, 3, 0, 0, 0, 0]
            .into_iter()
            .map(BigInt::from)
            .collect();
        assert_eq!(h, expect);
        let back: Vec<BigInt> = fv.f.iter().map(|&v| BigInt::from(v)).collect();
        assert_eq!(f_vector_from_h(&h), back);
        assert!(matches!(
            h_vector(&fv, 3),
            Err(Error::InconsistentDimension { .. })
        ));
    }

    #[test]
    fn interior_faces_never_include_the_empty_face() {
        for w in ["E", "N", "EENEN", "ENEN"] {
            let int = interior_faces(&p(w));
            assert!(int[0].is_empty(), "{w}");
            let trees = crate::trees::enumerate_nu_trees(&p(w));
            assert_eq!(int.last().unwrap().len(), trees.len());
        }
    }

    #[test]
    fn bottom_tree_recovery() {
        let nu = p("EENEN");
        let region = Arc::new(FerrersRegion::new(&nu));
        let trees = enumerate_trees_in(&region);
        for c in enumerate_asso_faces(&nu) {
            let (t, a) = bottom_tree(c.face(), &trees).unwrap();
            assert_eq!(a.len(), c.dim());
            assert_eq!(&t.face().without(&a), c.face());
        }
    }
}
