//! F- and H-triangles of a path and the identities relating them.

use alloc::collections::BTreeSet;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::complexes::{
    ascent_subsets, asso_f_vector, asso_faces_by_definition, asso_faces_from_trees,
    enumerate_schroder_paths, h_vector, CoveringFace, FaceVector,
};
use crate::paths::{enumerate_nu_paths, returns, FerrersRegion, NuPath};
use crate::poly::MPoly;
use crate::trees::{enumerate_trees_in, CompatibilityGraph, NuFace, NuTree};

/// Everything enumerated once for a fixed ν.
#[derive(Clone, Debug)]
pub struct NuData {
    pub nu: NuPath,
    pub region: Arc<FerrersRegion>,
    pub paths: Vec<NuPath>,
    pub trees: Vec<NuTree>,
    pub deg: usize,
}

impl NuData {
    pub fn new(nu: &NuPath) -> Self {
        let region = Arc::new(FerrersRegion::new(nu));
        let paths = enumerate_nu_paths(nu);
        let trees = enumerate_trees_in(&region);
        let deg = paths.iter().map(NuPath::val).max().unwrap_or(0);
        NuData {
            nu: nu.clone(),
            region,
            paths,
            trees,
            deg,
        }
    }

    /// `m + n + 1`, the number of vertices of a facet of the ν-Tamari complex.
    pub fn d_prime(&self) -> usize {
        (self.nu.width() + self.nu.height() + 1) as usize
    }

    pub fn asso_faces(&self) -> Vec<CoveringFace> {
        asso_faces_from_trees(&self.trees, self.deg)
    }

    pub fn h_triangle(&self) -> MPoly {
        let mut h = MPoly::zero(2);
        for mu in &self.paths {
            let ret = returns(mu, &self.nu).expect("enumerated path").len();
            h.add_term(vec![mu.val() as u32, ret as u32], BigInt::from(1));
        }
        h
    }

    pub fn f_triangle(&self) -> MPoly {
        faces_polynomial(&self.asso_faces())
    }

    /// `Σ_π x^{codim(π) - ret(π)} y^{ret(π)}` over ν-Schröder paths.
    pub fn schroder_f_triangle(&self) -> MPoly {
        let mut f = MPoly::zero(2);
        for pi in enumerate_schroder_paths(&self.nu) {
            let ret = pi.returns().len();
            let codim = self.deg - pi.diagonal_steps();
            f.add_term(vec![(codim - ret) as u32, ret as u32], BigInt::from(1));
        }
        f
    }

    /// `Σ_μ x^{deg - val}(x+1)^{val - ret}(y+1)^{ret}`.
    pub fn path_sum_f_triangle(&self) -> MPoly {
        let mut f = MPoly::zero(2);
        for mu in &self.paths {
            let ret = returns(mu, &self.nu).expect("enumerated path").len();
            f = &f + &closed_form(self.deg, mu.val(), ret);
        }
        f
    }

    /// `Σ_T F^T` with each `F^T` checked against its closed form.
    pub fn tree_sum_f_triangle(&self) -> MPoly {
        let mut f = MPoly::zero(2);
        for t in &self.trees {
            f = &f + &face_group_polynomial_with(t, self.deg);
        }
        f
    }
}

fn faces_polynomial(faces: &[CoveringFace]) -> MPoly {
    let mut f = MPoly::zero(2);
    for c in faces {
        f.add_term(vec![c.corel() as u32, c.rel() as u32], BigInt::from(1));
    }
    f
}

fn closed_form(deg: usize, asc: usize, rel: usize) -> MPoly {
    let zero = BigInt::from(0);
    let one = BigInt::from(1);
    let x = MPoly::binomial_power(2, 0, &zero, (deg - asc) as u32);
    let x1 = MPoly::binomial_power(2, 0, &one, (asc - rel) as u32);
    let y1 = MPoly::binomial_power(2, 1, &one, rel as u32);
    &(&x * &x1) * &y1
}

pub fn h_triangle(nu: &NuPath) -> MPoly {
    NuData::new(nu).h_triangle()
}

pub fn f_triangle(nu: &NuPath) -> MPoly {
    NuData::new(nu).f_triangle()
}

pub fn schroder_f_triangle(nu: &NuPath) -> MPoly {
    NuData::new(nu).schroder_f_triangle()
}

/// The generating polynomial of the faces `T \ A`, `A ⊆ Asc(T)`.
///
/// # Panics
///
/// If the face sum disagrees with `x^{deg-asc}(x+1)^{asc-rel}(y+1)^{rel}`.
pub fn face_group_polynomial(tree: &NuTree) -> MPoly {
    face_group_polynomial_with(tree, crate::paths::degree(tree.nu()))
}

fn face_group_polynomial_with(tree: &NuTree, deg: usize) -> MPoly {
    let mut sum = MPoly::zero(2);
    for (face, _) in ascent_subsets(tree) {
        let c = CoveringFace::new(face, deg).expect("T \\ A is a covering face");
        sum.add_term(vec![c.corel() as u32, c.rel() as u32], BigInt::from(1));
    }
    let closed = closed_form(deg, tree.asc(), tree.rel());
    assert_eq!(sum, closed, "face group polynomial of {:?}", tree.nodes());
    sum
}

/// Outcome of every check for one ν.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangleReport {
    pub nu: NuPath,
    pub deg: usize,
    pub d_prime: usize,
    pub f: MPoly,
    pub h: MPoly,
    pub schroder_f: MPoly,
    /// `F` equals the transform of `H`.
    pub fh_holds: bool,
    /// `H` equals the inverse transform of `F`.
    pub inverse_holds: bool,
    /// `F` equals the sum over paths of the per-path closed form.
    pub path_sum_holds: bool,
    /// `F` equals the sum of the per-tree face group polynomials.
    pub tree_sum_holds: bool,
    pub schroder_holds: bool,
    pub fvector_holds: bool,
    pub hvector_holds: bool,
    pub duality_holds: bool,
    pub reciprocity_holds: bool,
}

impl TriangleReport {
    pub fn all_hold(&self) -> bool {
        self.fh_holds
            && self.inverse_holds
            && self.path_sum_holds
            && self.tree_sum_holds
            && self.schroder_holds
            && self.fvector_holds
            && self.hvector_holds
            && self.duality_holds
            && self.reciprocity_holds
    }
}

/// Knobs for [`verify_fh_with`].
#[derive(Clone, Copy, Debug, Default)]
pub struct VerifyOptions {
    /// Perturb `H` before comparing, to exercise the failure path.
    pub corrupt: bool,
    /// Skip the ν-Tamari complex checks, which dominate the cost for long paths.
    pub skip_complex: bool,
}

pub fn verify_fh(nu: &NuPath) -> TriangleReport {
    verify_fh_with(nu, VerifyOptions::default())
}

pub fn verify_fh_with(nu: &NuPath, opts: VerifyOptions) -> TriangleReport {
    let data = NuData::new(nu);
    let deg = data.deg;
    let f = data.f_triangle();
    let mut h = data.h_triangle();
    if opts.corrupt {
        h = &h + &MPoly::one(2);
    }
    let schroder_f = data.schroder_f_triangle();
    let fh_holds = h.triangle_transform(deg as u32).is_ok_and(|t| t == f);
    let inverse_holds = f
        .inverse_triangle_transform(deg as u32)
        .is_ok_and(|t| t == h);
    let path_sum_holds = data.path_sum_f_triangle() == f;
    let tree_sum_holds = data.tree_sum_f_triangle() == f;
    let schroder_holds = schroder_f == f;
    let fvector_holds = check_f_fvector(&data, &f);
    let (hvector_holds, duality_holds, reciprocity_holds) = if opts.skip_complex {
        (true, true, true)
    } else {
        let tc = TamariComplexData::new(&data);
        (
            tc.check_hvector(&h, deg),
            tc.check_duality(&data),
            tc.check_reciprocity(),
        )
    };
    TriangleReport {
        nu: nu.clone(),
        deg,
        d_prime: data.d_prime(),
        f,
        h,
        schroder_f,
        fh_holds,
        inverse_holds,
        path_sum_holds,
        tree_sum_holds,
        schroder_holds,
        fvector_holds,
        hvector_holds,
        duality_holds,
        reciprocity_holds,
    }
}

/// The coefficient of `x^{deg-j}` in `F(x,x)` is the number of `j`-faces.
pub fn verify_f_fvector(nu: &NuPath) -> bool {
    let data = NuData::new(nu);
    check_f_fvector(&data, &data.f_triangle())
}

fn check_f_fvector(data: &NuData, f: &MPoly) -> bool {
    let counts = asso_f_vector(&asso_faces_by_definition(&data.nu));
    let fxx = f.substitute_y_with_x();
    if fxx.total_degree().is_some_and(|d| d as usize > data.deg) {
        return false;
    }
    (0..=data.deg)
        .all(|j| fxx.coeff(&[(data.deg - j) as u32]) == BigInt::from(counts.count(j as isize)))
        && counts.f.len() <= data.deg + 2
        && fxx.eval_at_ones() == BigInt::from(counts.total() - counts.f[0])
}

/// `H(x,1)` is the h̃-polynomial of the ν-Tamari complex.
pub fn verify_h_hvector(nu: &NuPath) -> bool {
    let data = NuData::new(nu);
    TamariComplexData::new(&data).check_hvector(&data.h_triangle(), data.deg)
}

/// `x^{d'} h̃((x+1)/x)` counts interior faces of the ν-Tamari complex.
pub fn verify_reciprocity(nu: &NuPath) -> bool {
    let data = NuData::new(nu);
    TamariComplexData::new(&data).check_reciprocity()
}

/// Interior faces of the complex are the covering faces, with matching counts.
pub fn verify_interior_duality(nu: &NuPath) -> bool {
    let data = NuData::new(nu);
    TamariComplexData::new(&data).check_duality(&data)
}

struct TamariComplexData {
    d_prime: usize,
    f: FaceVector,
    interior: Vec<Vec<NuFace>>,
}

impl TamariComplexData {
    fn new(data: &NuData) -> Self {
        let graph = CompatibilityGraph::new(data.region.clone());
        let mut f = FaceVector::default();
        graph.for_each_clique(|c| {
            if f.f.len() <= c.len() {
                f.f.resize(c.len() + 1, 0);
            }
            f.f[c.len()] += 1;
        });
        TamariComplexData {
            d_prime: data.d_prime(),
            f,
            interior: crate::complexes::interior_faces(&data.nu),
        }
    }

    fn h(&self) -> Vec<BigInt> {
        h_vector(&self.f, self.d_prime).expect("complex has dimension d' - 1")
    }

    fn check_hvector(&self, h_tri: &MPoly, deg: usize) -> bool {
        let h = self.h();
        let hx1 = h_tri.set_y_to_one();
        let zero = BigInt::from(0);
        let matches = h
            .iter()
            .enumerate()
            .all(|(i, hi)| hx1.coeff(&[i as u32]) == *hi)
            && hx1.total_degree().is_none_or(|d| (d as usize) < h.len());
        let window = h
            .iter()
            .enumerate()
            .all(|(i, hi)| if i <= deg { *hi > zero } else { *hi == zero });
        matches && window
    }

    fn check_reciprocity(&self) -> bool {
        let mut lhs = MPoly::zero(1);
        for (i, hi) in self.h().iter().enumerate() {
            let term = &MPoly::binomial_power(1, 0, &BigInt::from(0), (self.d_prime - i) as u32)
                * &MPoly::binomial_power(1, 0, &BigInt::from(1), i as u32);
            lhs = &lhs + &term.scale(hi);
        }
        let mut rhs = MPoly::zero(1);
        for (i, group) in self.interior.iter().enumerate() {
            rhs.add_term(vec![i as u32], BigInt::from(group.len()));
        }
        lhs == rhs
    }

    fn check_duality(&self, data: &NuData) -> bool {
        let asso = data.asso_faces();
        let counts = asso_f_vector(&asso);
        let counts_match = (1..=self.d_prime).all(|i| {
            let int = self.interior.get(i).map_or(0, Vec::len) as u64;
            int == counts.count((self.d_prime - i) as isize)
        });
        let interior: BTreeSet<&NuFace> = self.interior.iter().flatten().collect();
        let covering: BTreeSet<&NuFace> = asso.iter().map(CoveringFace::face).collect();
        counts_match && interior == covering
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trees::right_flushing;
    use alloc::string::ToString;

    fn p(s: &str) -> NuPath {
        s.parse().unwrap()
    }

    fn poly(s: &str) -> MPoly {
        MPoly::parse(s, 2).unwrap()
    }

    #[test]
    fn golden_eenen() {
        let nu = p("EENEN");
        assert_eq!(
            f_triangle(&nu).to_string(),
            "5*x^2 + 3*x*y + y^2 + 8*x + 3*y + 3"
        );
        assert_eq!(
            h_triangle(&nu).to_string(),
            "x^2*y^2 + x^2*y + x^2 + 2*x*y + 3*x + 1"
        );
    }

    #[test]
    fn golden_eneenen() {
        let nu = p("ENEENEN");
        assert_eq!(
            f_triangle(&nu),
            poly("9x^3+9x^2y+4xy^2+y^3+20x^2+15xy+4y^2+14x+6y+3")
        );
        assert_eq!(
            h_triangle(&nu),
            poly("x^3y^3+x^3y^2+x^3y+3x^2y^2+5x^2y+3x^2+3xy+5x+1")
        );
    }

    #[test]
    fn trivial_paths() {
        for w in ["N", "E", "NNEE"] {
            assert_eq!(f_triangle(&p(w)), MPoly::one(2));
            assert_eq!(h_triangle(&p(w)), MPoly::one(2));
            assert!(verify_fh(&p(w)).all_hold(), "{w}");
        }
    }

    #[test]
    fn face_groups() {
        let nu = p("EENEN");
        let bottom = right_flushing(&p("EENEN"), &nu).unwrap();
        assert_eq!(face_group_polynomial(&bottom), poly("y^2+2y+1"));
        let top = right_flushing(&p("NNEEE"), &nu).unwrap();
        assert_eq!(face_group_polynomial(&top), poly("x^2"));
    }

    #[test]
    fn reports() {
        for w in ["EENEN", "ENEENEN", "ENENEN", "EN"] {
            let r = verify_fh(&p(w));
            assert!(r.all_hold(), "{w}: {r:?}");
        }
        let r = verify_fh_with(
            &p("EENEN"),
            VerifyOptions {
                corrupt: true,
                ..Default::default()
            },
        );
        assert!(!r.fh_holds && !r.inverse_holds);
    }

    #[test]
    fn f_at_diagonal() {
        let f = f_triangle(&p("ENEENEN")).substitute_y_with_x();
        assert_eq!(f.to_string(), "23*x^3 + 39*x^2 + 20*x + 3");
    }
}
