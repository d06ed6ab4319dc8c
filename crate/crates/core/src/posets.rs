//! Finite posets with `k`-valued edge labelings and their F/H triangles.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use fixedbitset::FixedBitSet;
use num_bigint::BigInt;

use crate::error::{Error, LatticeWitness, PosetError, Result};
use crate::paths::{enumerate_nu_paths, FerrersRegion, NuPath};
use crate::poly::MPoly;
use crate::trees::{right_flushing_in, NuFace};

/// A cover relation `lower ⋖ upper` carrying a label in `0..=k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cover {
    pub lower: usize,
    pub upper: usize,
    pub label: u32,
}

/// A finite poset given by its labeled cover relations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledPoset {
    elements: Vec<String>,
    covers: Vec<Cover>,
    k: u32,
    succ: Vec<Vec<(usize, u32)>>,
    /// `above[p]` holds every `q > p`.
    above: Vec<FixedBitSet>,
}

impl LabeledPoset {
    /// Validates and builds a poset from named cover relations.
    pub fn new(
        elements: Vec<String>,
        covers: &[(String, String, u32)],
        k: u32,
    ) -> core::result::Result<Self, PosetError> {
        let index = name_index(&elements)?;
        let covers = resolve(&index, covers)?;
        LabeledPoset::from_index_covers(elements, covers, k)
    }

    /// Like [`LabeledPoset::new`] but accepts any order relations and keeps
    /// only the covers among them.
    pub fn from_relations(
        elements: Vec<String>,
        relations: &[(String, String, u32)],
        k: u32,
    ) -> core::result::Result<Self, PosetError> {
        let index = name_index(&elements)?;
        let rel = resolve(&index, relations)?;
        let pairs: Vec<(usize, usize)> = rel.iter().map(|c| (c.lower, c.upper)).collect();
        let kept = transitive_reduction(&elements, &pairs)?;
        let covers = rel
            .into_iter()
            .filter(|c| kept.contains(&(c.lower, c.upper)))
            .collect();
        LabeledPoset::from_index_covers(elements, covers, k)
    }

    pub fn from_index_covers(
        elements: Vec<String>,
        mut covers: Vec<Cover>,
        k: u32,
    ) -> core::result::Result<Self, PosetError> {
        if k == 0 {
            return Err(PosetError::ZeroLabels);
        }
        name_index(&elements)?;
        let n = elements.len();
        let name = |i: usize| elements[i].clone();
        covers.sort_unstable();
        for c in &covers {
            if c.lower >= n || c.upper >= n {
                return Err(PosetError::UnknownElement(c.lower.max(c.upper).to_string()));
            }
            if c.lower == c.upper {
                return Err(PosetError::SelfLoop(name(c.lower)));
            }
            if c.label > k {
                return Err(PosetError::LabelOutOfRange {
                    lower: name(c.lower),
                    upper: name(c.upper),
                    label: c.label,
                    k,
                });
            }
        }
        if let Some(w) = covers
            .windows(2)
            .find(|w| (w[0].lower, w[0].upper) == (w[1].lower, w[1].upper))
        {
            return Err(PosetError::DuplicateCover(
                name(w[0].lower),
                name(w[0].upper),
            ));
        }
        let mut succ = vec![Vec::new(); n];
        for c in &covers {
            succ[c.lower].push((c.upper, c.label));
        }
        let pairs: Vec<(usize, usize)> = covers.iter().map(|c| (c.lower, c.upper)).collect();
        let above = strict_up_sets(&elements, &pairs)?;
        for c in &covers {
            let implied = succ[c.lower]
                .iter()
                .any(|&(s, _)| s != c.upper && above[s].contains(c.upper));
            if implied {
                return Err(PosetError::NotACover(name(c.lower), name(c.upper)));
            }
        }
        Ok(LabeledPoset {
            elements,
            covers,
            k,
            succ,
            above,
        })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn covers(&self) -> &[Cover] {
        &self.covers
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.elements.iter().position(|e| e == name)
    }

    /// Upper covers of `p` with their labels.
    pub fn successors(&self, p: usize) -> &[(usize, u32)] {
        &self.succ[p]
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        a == b || self.above[a].contains(b)
    }

    pub fn stats(&self, p: usize) -> MarkStats {
        let mut mrk = vec![0; self.k as usize];
        for &(_, label) in &self.succ[p] {
            if label > 0 {
                mrk[label as usize - 1] += 1;
            }
        }
        MarkStats {
            out: self.succ[p].len(),
            mrk,
        }
    }

    /// `max out(p)`.
    pub fn degree(&self) -> usize {
        self.succ.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Number of covers with a non-zero label.
    pub fn marked_count(&self) -> usize {
        self.covers.iter().filter(|c| c.label > 0).count()
    }
}

fn name_index(elements: &[String]) -> core::result::Result<BTreeMap<&str, usize>, PosetError> {
    let mut index = BTreeMap::new();
    for (i, e) in elements.iter().enumerate() {
        if index.insert(e.as_str(), i).is_some() {
            return Err(PosetError::DuplicateElement(e.clone()));
        }
    }
    Ok(index)
}

fn resolve(
    index: &BTreeMap<&str, usize>,
    covers: &[(String, String, u32)],
) -> core::result::Result<Vec<Cover>, PosetError> {
    let look = |s: &String| {
        index
            .get(s.as_str())
            .copied()
            .ok_or_else(|| PosetError::UnknownElement(s.clone()))
    };
    covers
        .iter()
        .map(|(a, b, label)| {
            Ok(Cover {
                lower: look(a)?,
                upper: look(b)?,
                label: *label,
            })
        })
        .collect()
}

/// Strict up-sets from a relation, rejecting cycles.
fn strict_up_sets(
    elements: &[String],
    pairs: &[(usize, usize)],
) -> core::result::Result<Vec<FixedBitSet>, PosetError> {
    let n = elements.len();
    let mut out_edges = vec![Vec::new(); n];
    let mut indeg = vec![0usize; n];
    for &(a, b) in pairs {
        if a == b {
            return Err(PosetError::SelfLoop(elements[a].clone()));
        }
        out_edges[a].push(b);
        indeg[b] += 1;
    }
    let mut order = Vec::with_capacity(n);
    let mut stack: Vec<usize> = (0..n).filter(|&i| indeg[i] == 0).collect();
    while let Some(v) = stack.pop() {
        order.push(v);
        for &w in &out_edges[v] {
            indeg[w] -= 1;
            if indeg[w] == 0 {
                stack.push(w);
            }
        }
    }
    if order.len() < n {
        let stuck = (0..n)
            .find(|&i| indeg[i] > 0)
            .expect("some vertex is on a cycle");
        return Err(PosetError::Cycle(elements[stuck].clone()));
    }
    let mut above = vec![FixedBitSet::with_capacity(n); n];
    for &v in order.iter().rev() {
        for &w in &out_edges[v] {
            let (lo, hi) = if v < w {
                above.split_at_mut(w)
            } else {
                above.split_at_mut(v)
            };
            let (src, dst) = if v < w {
                (&hi[0], &mut lo[v])
            } else {
                (&lo[w], &mut hi[0])
            };
            dst.union_with(src);
            dst.insert(w);
        }
    }
    Ok(above)
}

/// The cover pairs of the order generated by `pairs`.
pub fn transitive_reduction(
    elements: &[String],
    pairs: &[(usize, usize)],
) -> core::result::Result<Vec<(usize, usize)>, PosetError> {
    let above = strict_up_sets(elements, pairs)?;
    let mut out: Vec<(usize, usize)> = pairs
        .iter()
        .copied()
        .filter(|&(a, b)| !above[a].ones().any(|c| c != b && above[c].contains(b)))
        .collect();
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// `out(p)` and `mrk_i(p)` for `i = 1..=k` (stored at index `i - 1`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarkStats {
    pub out: usize,
    pub mrk: Vec<usize>,
}

impl MarkStats {
    pub fn mrk0(&self) -> usize {
        self.out - self.mrk.iter().sum::<usize>()
    }
}

/// `Σ_p x^{out(p)} ∏ y_i^{mrk_i(p)}`.
pub fn poset_h_triangle(p: &LabeledPoset) -> MPoly {
    let mut h = MPoly::zero(p.k as usize + 1);
    for i in 0..p.len() {
        let s = p.stats(i);
        let mut exps = vec![s.out as u32];
        exps.extend(s.mrk.iter().map(|&m| m as u32));
        h.add_term(exps, BigInt::from(1));
    }
    h
}

/// `Σ_p Σ_{S ⊆ Succ(p)} x^{corem(p,S)} ∏ y_i^{rem_i(p,S)}` by subset enumeration.
pub fn poset_f_triangle(p: &LabeledPoset) -> MPoly {
    let deg = p.degree();
    let k = p.k as usize;
    let mut f = MPoly::zero(k + 1);
    for i in 0..p.len() {
        let succ = p.successors(i);
        let stats = p.stats(i);
        for mask in 0u64..1 << succ.len() {
            let mut rem = stats.mrk.clone();
            for (j, &(_, label)) in succ.iter().enumerate() {
                if mask >> j & 1 == 1 && label > 0 {
                    rem[label as usize - 1] -= 1;
                }
            }
            let size = mask.count_ones() as usize;
            let corem = deg - size - rem.iter().sum::<usize>();
            let mut exps = vec![corem as u32];
            exps.extend(rem.iter().map(|&r| r as u32));
            f.add_term(exps, BigInt::from(1));
        }
    }
    f
}

/// Both directions of the multivariate F/H correspondence.
pub fn verify_poset_fh(p: &LabeledPoset) -> bool {
    let deg = p.degree() as u32;
    let f = poset_f_triangle(p);
    let h = poset_h_triangle(p);
    h.triangle_transform(deg).is_ok_and(|t| t == f)
        && f.inverse_triangle_transform(deg).is_ok_and(|t| t == h)
}

/// Order, meet and join tables of a finite lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeTables {
    pub bottom: usize,
    pub top: usize,
    pub meet: Vec<Vec<usize>>,
    pub join: Vec<Vec<usize>>,
}

impl LatticeTables {
    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a][b]
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a][b]
    }
}

/// Meet and join tables, or a pair witnessing that the order is not a lattice.
pub fn lattice_ops(p: &LabeledPoset) -> Result<LatticeTables> {
    let n = p.len();
    if n == 0 {
        return Err(Error::NotALattice(LatticeWitness::Empty));
    }
    let mut up = vec![FixedBitSet::with_capacity(n); n];
    let mut down = vec![FixedBitSet::with_capacity(n); n];
    for (a, up_a) in up.iter_mut().enumerate() {
        up_a.insert(a);
        up_a.union_with(&p.above[a]);
    }
    for (a, up_a) in up.iter().enumerate() {
        for b in up_a.ones() {
            down[b].insert(a);
        }
    }
    let extremal = |bounds: &FixedBitSet, cone: &[FixedBitSet]| {
        bounds
            .ones()
            .find(|&m| cone[m].is_superset(bounds) && bounds.is_superset(&cone[m]))
    };
    let mut meet = vec![vec![0; n]; n];
    let mut join = vec![vec![0; n]; n];
    for a in 0..n {
        for b in a..n {
            let mut lower = down[a].clone();
            lower.intersect_with(&down[b]);
            let m = extremal(&lower, &down).ok_or_else(|| {
                Error::NotALattice(LatticeWitness::NoMeet(
                    p.elements[a].clone(),
                    p.elements[b].clone(),
                ))
            })?;
            let mut upper = up[a].clone();
            upper.intersect_with(&up[b]);
            let j = extremal(&upper, &up).ok_or_else(|| {
                Error::NotALattice(LatticeWitness::NoJoin(
                    p.elements[a].clone(),
                    p.elements[b].clone(),
                ))
            })?;
            meet[a][b] = m;
            meet[b][a] = m;
            join[a][b] = j;
            join[b][a] = j;
        }
    }
    let bottom = (0..n).fold(0, |acc, a| meet[acc][a]);
    let top = (0..n).fold(0, |acc, a| join[acc][a]);
    Ok(LatticeTables {
        bottom,
        top,
        meet,
        join,
    })
}

/// `(a₁,b₁)` and `(a₂,b₂)` are perspective when `a₁∨b₂ = b₁` and
/// `a₁∧b₂ = a₂`, or `b₁∨a₂ = b₂` and `b₁∧a₂ = a₁`.
pub fn perspective(t: &LatticeTables, (a1, b1): (usize, usize), (a2, b2): (usize, usize)) -> bool {
    (t.join(a1, b2) == b1 && t.meet(a1, b2) == a2) || (t.join(b1, a2) == b2 && t.meet(b1, a2) == a1)
}

/// Relabels `lattice` with `k = 1`, marking the covers perspective to a cover
/// of the bottom element.
pub fn atom_perspectivity_marking(lattice: &LabeledPoset) -> Result<LabeledPoset> {
    let t = lattice_ops(lattice)?;
    let atoms: Vec<(usize, usize)> = lattice
        .covers
        .iter()
        .filter(|c| c.lower == t.bottom)
        .map(|c| (c.lower, c.upper))
        .collect();
    let covers = lattice
        .covers
        .iter()
        .map(|c| {
            let marked = atoms
                .iter()
                .any(|&atom| perspective(&t, (c.lower, c.upper), atom));
            Cover {
                label: u32::from(marked),
                ..*c
            }
        })
        .collect();
    Ok(LabeledPoset::from_index_covers(
        lattice.elements.clone(),
        covers,
        1,
    )?)
}

/// `Tam(ν)` on ν-trees, named by their ν-paths, with a label for each rotation.
fn tamari_poset(
    nu: &NuPath,
    k: u32,
    label: impl Fn(&NuFace, crate::paths::LatticePoint) -> u32,
) -> LabeledPoset {
    let region = alloc::sync::Arc::new(FerrersRegion::new(nu));
    let paths = enumerate_nu_paths(nu);
    let trees: Vec<_> = paths
        .iter()
        .map(|mu| right_flushing_in(mu, &region).expect("ν-path"))
        .collect();
    let index: BTreeMap<&NuFace, usize> = trees
        .iter()
        .enumerate()
        .map(|(i, t)| (t.face(), i))
        .collect();
    let mut covers = Vec::new();
    for (i, t) in trees.iter().enumerate() {
        for a in t.ascents() {
            let rotated = t.rotate(a.q).expect("ascent");
            let j = index[rotated.face()];
            covers.push(Cover {
                lower: i,
                upper: j,
                label: label(t.face(), a.q),
            });
        }
    }
    let names = paths.iter().map(ToString::to_string).collect();
    LabeledPoset::from_index_covers(names, covers, k).expect("rotations are covers")
}

/// Label 1 exactly on rotations at a relevant node.
pub fn rotation_marking(nu: &NuPath) -> LabeledPoset {
    tamari_poset(nu, 1, |t, q| u32::from(t.relevant_nodes().contains(&q)))
}

/// Label `j` on rotations at a relevant node in the row of the `j`-th valley of ν.
///
/// With no valleys every label is 0 and `k` is 1.
pub fn multivalley_marking(nu: &NuPath) -> LabeledPoset {
    let rows = FerrersRegion::new(nu).valley_rows();
    let k = rows.len().max(1) as u32;
    tamari_poset(nu, k, |t, q| {
        if !t.relevant_nodes().contains(&q) {
            return 0;
        }
        rows.iter()
            .position(|&y| y == q.y)
            .map_or(0, |j| j as u32 + 1)
    })
}

/// `Tam(ν)` with every label 0.
pub fn tamari_unmarked(nu: &NuPath) -> LabeledPoset {
    tamari_poset(nu, 1, |_, _| 0)
}
