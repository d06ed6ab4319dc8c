//! ν-compatibility, ν-faces, ν-trees and the right flushing bijection.

use alloc::collections::VecDeque;
use alloc::sync::Arc;
use alloc::vec::Vec;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::paths::{FerrersRegion, LatticePoint, NuPath};

/// Whether `p` and `q` are ν-compatible.
///
/// Two points are incompatible exactly when one is strictly south-west of the
/// other and the rectangle they span lies inside the region.
pub fn compatible(region: &FerrersRegion, p: LatticePoint, q: LatticePoint) -> Result<bool> {
    for a in [p, q] {
        if !region.contains(a) {
            return Err(Error::PointOutsideRegion(a));
        }
    }
    Ok(compatible_unchecked(region, p, q))
}

fn compatible_unchecked(region: &FerrersRegion, p: LatticePoint, q: LatticePoint) -> bool {
    let strict = p.strictly_southwest_of(q) || q.strictly_southwest_of(p);
    !(strict && region.contains_rectangle(p, q))
}

/// The compatibility graph on `A_ν`, indexed like [`FerrersRegion::index_of`].
#[derive(Clone, Debug)]
pub struct CompatibilityGraph {
    region: Arc<FerrersRegion>,
    adj: Vec<FixedBitSet>,
}

impl CompatibilityGraph {
    pub fn new(region: Arc<FerrersRegion>) -> Self {
        let n = region.len();
        let pts: Vec<_> = region.points().collect();
        let mut adj = alloc::vec![FixedBitSet::with_capacity(n); n];
        for i in 0..n {
            for j in i + 1..n {
                if compatible_unchecked(&region, pts[i], pts[j]) {
                    adj[i].insert(j);
                    adj[j].insert(i);
                }
            }
        }
        CompatibilityGraph { region, adj }
    }

    pub fn region(&self) -> &Arc<FerrersRegion> {
        &self.region
    }

    pub fn neighbours(&self, i: usize) -> &FixedBitSet {
        &self.adj[i]
    }

    /// All maximal cliques (Bron–Kerbosch with pivoting), as index lists.
    pub fn maximal_cliques(&self) -> Vec<Vec<usize>> {
        let n = self.adj.len();
        let mut out = Vec::new();
        let mut p = FixedBitSet::with_capacity(n);
        p.insert_range(..);
        let x = FixedBitSet::with_capacity(n);
        self.bron_kerbosch(&mut Vec::new(), p, x, &mut out);
        out
    }

    fn bron_kerbosch(
        &self,
        r: &mut Vec<usize>,
        mut p: FixedBitSet,
        mut x: FixedBitSet,
        out: &mut Vec<Vec<usize>>,
    ) {
        if p.is_clear() {
            if x.is_clear() {
                let mut c = r.clone();
                c.sort_unstable();
                out.push(c);
            }
            return;
        }
        let pivot = p
            .ones()
            .chain(x.ones())
            .max_by_key(|&u| self.adj[u].intersection(&p).count())
            .expect("p is non-empty");
        let candidates: Vec<usize> = p.difference(&self.adj[pivot]).collect();
        for v in candidates {
            let mut np = p.clone();
            np.intersect_with(&self.adj[v]);
            let mut nx = x.clone();
            nx.intersect_with(&self.adj[v]);
            r.push(v);
            self.bron_kerbosch(r, np, nx, out);
            r.pop();
            p.remove(v);
            x.insert(v);
        }
    }

    /// Visits every clique, including the empty one, exactly once.
    pub fn for_each_clique(&self, mut f: impl FnMut(&[usize])) {
        let n = self.adj.len();
        let mut all = FixedBitSet::with_capacity(n);
        all.insert_range(..);
        let mut stack = Vec::new();
        self.extend_cliques(&mut stack, all, &mut f);
    }

    fn extend_cliques(
        &self,
        clique: &mut Vec<usize>,
        candidates: FixedBitSet,
        f: &mut impl FnMut(&[usize]),
    ) {
        f(clique);
        for v in candidates.ones() {
            let mut next = candidates.clone();
            next.intersect_with(&self.adj[v]);
            next.remove_range(..v + 1);
            clique.push(v);
            self.extend_cliques(clique, next, f);
            clique.pop();
        }
    }
}

/// A set of points of `A_ν`, kept in canonical order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NuFace {
    region: Arc<FerrersRegion>,
    nodes: Vec<LatticePoint>,
}

impl PartialOrd for NuFace {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for NuFace {
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        self.nodes
            .cmp(&other.nodes)
            .then_with(|| self.region.nu().cmp(other.region.nu()))
    }
}

impl NuFace {
    /// Builds a face from arbitrary points; fails on points outside `A_ν`.
    /// Compatibility is not checked here, see [`NuFace::is_pairwise_compatible`].
    pub fn new(region: Arc<FerrersRegion>, mut nodes: Vec<LatticePoint>) -> Result<Self> {
        if let Some(&p) = nodes.iter().find(|&&p| !region.contains(p)) {
            return Err(Error::PointOutsideRegion(p));
        }
        nodes.sort_unstable();
        nodes.dedup();
        Ok(NuFace { region, nodes })
    }

    pub(crate) fn from_sorted(region: Arc<FerrersRegion>, nodes: Vec<LatticePoint>) -> Self {
        debug_assert!(nodes.windows(2).all(|w| w[0] < w[1]));
        NuFace { region, nodes }
    }

    pub(crate) fn from_indices(region: &Arc<FerrersRegion>, idx: &[usize]) -> Self {
        let mut nodes: Vec<_> = idx.iter().map(|&i| region.point(i)).collect();
        nodes.sort_unstable();
        NuFace {
            region: region.clone(),
            nodes,
        }
    }

    pub fn region(&self) -> &Arc<FerrersRegion> {
        &self.region
    }

    pub fn nu(&self) -> &NuPath {
        self.region.nu()
    }

    pub fn nodes(&self) -> &[LatticePoint] {
        &self.nodes
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn contains(&self, p: LatticePoint) -> bool {
        self.nodes.binary_search(&p).is_ok()
    }

    pub fn without(&self, removed: &[LatticePoint]) -> NuFace {
        let nodes = self
            .nodes
            .iter()
            .copied()
            .filter(|p| !removed.contains(p))
            .collect();
        NuFace {
            region: self.region.clone(),
            nodes,
        }
    }

    pub fn is_pairwise_compatible(&self) -> bool {
        self.nodes.iter().enumerate().all(|(i, &p)| {
            self.nodes[i + 1..]
                .iter()
                .all(|&q| compatible_unchecked(&self.region, p, q))
        })
    }

    /// Pairwise compatible and no further point of `A_ν` can be added.
    pub fn is_nu_tree(&self) -> bool {
        self.is_pairwise_compatible()
            && self.region.points().all(|a| {
                self.contains(a)
                    || self
                        .nodes
                        .iter()
                        .any(|&p| !compatible_unchecked(&self.region, a, p))
            })
    }

    /// Number of nodes at each height `0..=n`.
    pub fn height_sequence(&self) -> Vec<usize> {
        let mut seq = alloc::vec![0usize; self.region.height() as usize + 1];
        for p in &self.nodes {
            seq[p.y as usize] += 1;
        }
        seq
    }

    /// Nodes in the first column that share their row with another node, in a
    /// row containing a valley of ν.
    pub fn relevant_nodes(&self) -> Vec<LatticePoint> {
        let valley_rows = self.region.valley_rows();
        self.nodes
            .iter()
            .copied()
            .filter(|p| {
                p.x == 0
                    && valley_rows.contains(&p.y)
                    && self.nodes.iter().any(|q| q.y == p.y && q.x != p.x)
            })
            .collect()
    }

    pub fn rel(&self) -> usize {
        self.relevant_nodes().len()
    }

    /// Nearest node strictly above `q` in its column.
    fn above(&self, q: LatticePoint) -> Option<LatticePoint> {
        self.nodes
            .iter()
            .copied()
            .filter(|p| p.x == q.x && p.y > q.y)
            .min_by_key(|p| p.y)
    }

    /// Nearest node strictly right of `q` in its row.
    fn right_of(&self, q: LatticePoint) -> Option<LatticePoint> {
        self.nodes
            .iter()
            .copied()
            .filter(|p| p.y == q.y && p.x > q.x)
            .min_by_key(|p| p.x)
    }

    /// Nearest node strictly left of `q` in its row.
    fn left_of(&self, q: LatticePoint) -> Option<LatticePoint> {
        self.nodes
            .iter()
            .copied()
            .filter(|p| p.y == q.y && p.x < q.x)
            .max_by_key(|p| p.x)
    }

    /// Nearest node strictly below `q` in its column.
    fn below(&self, q: LatticePoint) -> Option<LatticePoint> {
        self.nodes
            .iter()
            .copied()
            .filter(|p| p.x == q.x && p.y < q.y)
            .max_by_key(|p| p.y)
    }
}

/// Nodes `q = p⌞r` with `p` above and `r` to the right, spanning an otherwise empty rectangle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Ascent {
    pub q: LatticePoint,
    pub p: LatticePoint,
    pub r: LatticePoint,
}

impl Ascent {
    /// The upper-right corner `p⌝r`, which replaces `q` under rotation.
    pub fn rotated(&self) -> LatticePoint {
        LatticePoint::new(self.r.x, self.p.y)
    }
}

/// A maximal set of pairwise ν-compatible points.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NuTree(NuFace);

impl NuTree {
    pub fn new(region: Arc<FerrersRegion>, nodes: Vec<LatticePoint>) -> Result<Self> {
        NuTree::try_from(NuFace::new(region, nodes)?)
    }

    pub fn face(&self) -> &NuFace {
        &self.0
    }

    pub fn into_face(self) -> NuFace {
        self.0
    }

    pub fn nodes(&self) -> &[LatticePoint] {
        self.0.nodes()
    }

    pub fn region(&self) -> &Arc<FerrersRegion> {
        self.0.region()
    }

    pub fn nu(&self) -> &NuPath {
        self.0.nu()
    }

    pub fn root(&self) -> LatticePoint {
        self.0.region.top_left()
    }

    /// The ascents of the tree, ordered by `q` in canonical order.
    ///
    /// `p` and `r` are the nearest nodes above and to the right of `q`; a
    /// farther choice would only enlarge the rectangle, so this is the only
    /// candidate.
    pub fn ascents(&self) -> Vec<Ascent> {
        let face = &self.0;
        face.nodes
            .iter()
            .filter_map(|&q| {
                let p = face.above(q)?;
                let r = face.right_of(q)?;
                let empty = face.nodes.iter().all(|&s| {
                    s == q
                        || s == p
                        || s == r
                        || !(s.x >= q.x && s.x <= r.x && s.y >= q.y && s.y <= p.y)
                });
                empty.then_some(Ascent { q, p, r })
            })
            .collect()
    }

    pub fn asc(&self) -> usize {
        self.ascents().len()
    }

    pub fn relevant_nodes(&self) -> Vec<LatticePoint> {
        self.0.relevant_nodes()
    }

    pub fn rel(&self) -> usize {
        self.0.rel()
    }

    /// Replaces the ascent `q` by the upper-right corner of its rectangle.
    pub fn rotate(&self, q: LatticePoint) -> Result<NuTree> {
        let asc = self
            .ascents()
            .into_iter()
            .find(|a| a.q == q)
            .ok_or(Error::NotAnAscent(q))?;
        let mut nodes: Vec<_> = self.nodes().iter().copied().filter(|&s| s != q).collect();
        nodes.push(asc.rotated());
        nodes.sort_unstable();
        let rotated = NuTree(NuFace::from_sorted(self.0.region.clone(), nodes));
        debug_assert!(rotated.0.is_nu_tree());
        Ok(rotated)
    }

    /// Tree edges: pairs in a common row or column with no node between them.
    pub fn edges(&self) -> Vec<(LatticePoint, LatticePoint)> {
        let face = &self.0;
        let mut out = Vec::new();
        for &q in &face.nodes {
            if let Some(r) = face.right_of(q) {
                out.push((q, r));
            }
            if let Some(p) = face.above(q) {
                out.push((q, p));
            }
        }
        out
    }

    /// Number of horizontal edges on the tree path from `p` to the root.
    pub fn hroot(&self, p: LatticePoint) -> Result<usize> {
        if !self.0.contains(p) {
            return Err(Error::NotInTree(p));
        }
        let face = &self.0;
        let root = self.root();
        let idx = |a: LatticePoint| face.nodes.binary_search(&a).expect("node");
        let mut dist: Vec<Option<usize>> = alloc::vec![None; face.len()];
        dist[idx(root)] = Some(0);
        let mut queue = VecDeque::from([root]);
        while let Some(a) = queue.pop_front() {
            let d = dist[idx(a)].expect("visited");
            let horizontal = [face.left_of(a), face.right_of(a)];
            let vertical = [face.above(a), face.below(a)];
            for (b, w) in horizontal
                .into_iter()
                .map(|b| (b, 1))
                .chain(vertical.into_iter().map(|b| (b, 0)))
            {
                if let Some(b) = b {
                    let slot = &mut dist[idx(b)];
                    if slot.is_none() {
                        *slot = Some(d + w);
                        queue.push_back(b);
                    }
                }
            }
        }
        dist[idx(p)].ok_or(Error::NotANuTree)
    }
}

impl TryFrom<NuFace> for NuTree {
    type Error = Error;

    fn try_from(face: NuFace) -> Result<Self> {
        if face.is_nu_tree() {
            Ok(NuTree(face))
        } else {
            Err(Error::NotANuTree)
        }
    }
}

/// All ν-trees, as maximal cliques of the compatibility graph, sorted.
pub fn enumerate_nu_trees(nu: &NuPath) -> Vec<NuTree> {
    enumerate_trees_in(&Arc::new(FerrersRegion::new(nu)))
}

pub(crate) fn enumerate_trees_in(region: &Arc<FerrersRegion>) -> Vec<NuTree> {
    let graph = CompatibilityGraph::new(region.clone());
    let mut trees: Vec<_> = graph
        .maximal_cliques()
        .iter()
        .map(|c| NuTree(NuFace::from_indices(region, c)))
        .collect();
    trees.sort_unstable();
    trees
}

/// Places nodes row by row, bottom to top and right to left, skipping columns
/// above a node whose entry in `forbids` is set.
///
/// `rows[i]` lists, for the path points at height `i` from left to right,
/// whether that point forbids its node's column. Nodes in a row are matched to
/// path points in reverse order.
pub(crate) fn flush(region: &Arc<FerrersRegion>, rows: &[Vec<bool>]) -> Option<NuFace> {
    let width = region.width() as usize + 1;
    let mut forbidden = FixedBitSet::with_capacity(width);
    let mut nodes = Vec::new();
    for (y, row) in rows.iter().enumerate() {
        let max = region.row_max(y as u32) as usize;
        let xs: Vec<usize> = (0..=max)
            .rev()
            .filter(|&x| !forbidden.contains(x))
            .take(row.len())
            .collect();
        if xs.len() < row.len() {
            return None;
        }
        for (&x, &forbids) in xs.iter().zip(row) {
            nodes.push(LatticePoint::new(x as u32, y as u32));
            if forbids {
                forbidden.insert(x);
            }
        }
    }
    nodes.sort_unstable();
    Some(NuFace::from_sorted(region.clone(), nodes))
}

/// The right flushing bijection from ν-paths to ν-trees.
pub fn right_flushing(mu: &NuPath, nu: &NuPath) -> Result<NuTree> {
    right_flushing_in(mu, &Arc::new(FerrersRegion::new(nu)))
}

pub(crate) fn right_flushing_in(mu: &NuPath, region: &Arc<FerrersRegion>) -> Result<NuTree> {
    if !region.admits(mu) {
        return Err(Error::NotANuPath);
    }
    // Every point but the last in a row starts an east step.
    let rows: Vec<Vec<bool>> = mu
        .height_sequence()
        .into_iter()
        .map(|a| (0..a).map(|j| j + 1 < a).collect())
        .collect();
    let face = flush(region, &rows).ok_or(Error::NotANuPath)?;
    debug_assert!(face.is_nu_tree());
    Ok(NuTree(face))
}

/// Inverse of [`right_flushing`]: the ν-path with the tree's height sequence.
pub fn right_flushing_inverse(tree: &NuTree) -> Result<NuPath> {
    if !tree.face().is_nu_tree() {
        return Err(Error::NotANuTree);
    }
    let mu = NuPath::from_height_sequence(&tree.face().height_sequence())?;
    if right_flushing_in(&mu, tree.region()).as_ref() != Ok(tree) {
        return Err(Error::NotANuTree);
    }
    Ok(mu)
}
