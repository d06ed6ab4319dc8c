//! JSON documents. Coefficients are decimal strings so they survive any size.

use nu_tamari_core::complexes::{asso_f_vector, CoveringFace, FaceVector};
use nu_tamari_core::paths::{LatticePoint, NuPath, TamariLattice};
use nu_tamari_core::poly::{var_names, BigInt, MPoly};
use nu_tamari_core::posets::LabeledPoset;
use nu_tamari_core::trees::{NuFace, NuTree};
use nu_tamari_core::triangles::TriangleReport;
use nu_tamari_core::{Error, Result};
use serde::{Deserialize, Serialize};
use std::sync::Arc;

fn parse_coeff(s: &str) -> Result<BigInt> {
    s.parse()
        .map_err(|_| Error::PolyParse(format!("bad coefficient {s:?}")))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolyJson {
    pub vars: Vec<String>,
    pub terms: Vec<(Vec<u32>, String)>,
}

impl From<&MPoly> for PolyJson {
    fn from(p: &MPoly) -> Self {
        PolyJson {
            vars: var_names(p.arity()),
            terms: p
                .canonical_terms()
                .into_iter()
                .map(|(e, c)| (e.clone(), c.to_string()))
                .collect(),
        }
    }
}

impl TryFrom<&PolyJson> for MPoly {
    type Error = Error;

    fn try_from(j: &PolyJson) -> Result<MPoly> {
        let terms = j
            .terms
            .iter()
            .map(|(e, c)| Ok((e.clone(), parse_coeff(c)?)))
            .collect::<Result<Vec<_>>>()?;
        MPoly::from_terms(j.vars.len(), terms)
    }
}

fn point_pair(p: &LatticePoint) -> [u32; 2] {
    [p.x, p.y]
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TreeJson {
    pub nu: String,
    pub nodes: Vec<[u32; 2]>,
}

impl From<&NuTree> for TreeJson {
    fn from(t: &NuTree) -> Self {
        TreeJson {
            nu: t.nu().to_string(),
            nodes: t.nodes().iter().map(point_pair).collect(),
        }
    }
}

impl TreeJson {
    pub fn to_tree(&self) -> Result<NuTree> {
        let nu: NuPath = self.nu.parse()?;
        let region = Arc::new(nu_tamari_core::paths::FerrersRegion::new(&nu));
        let nodes = self
            .nodes
            .iter()
            .map(|&[x, y]| LatticePoint::new(x, y))
            .collect();
        NuTree::new(region, nodes)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceJson {
    pub nodes: Vec<[u32; 2]>,
    pub dim: usize,
    pub rel: usize,
    pub corel: usize,
}

impl From<&CoveringFace> for FaceJson {
    fn from(c: &CoveringFace) -> Self {
        FaceJson {
            nodes: c.nodes().iter().map(point_pair).collect(),
            dim: c.dim(),
            rel: c.rel(),
            corel: c.corel(),
        }
    }
}

/// The cells of the ν-associahedron; `f_vector[i]` counts the `i`-dimensional ones.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AssoJson {
    pub nu: String,
    pub deg: usize,
    pub f_vector: Vec<u64>,
    pub faces: Vec<FaceJson>,
}

impl AssoJson {
    pub fn new(nu: &NuPath, deg: usize, faces: &[CoveringFace]) -> Self {
        AssoJson {
            nu: nu.to_string(),
            deg,
            f_vector: asso_f_vector(faces).by_dimension(),
            faces: faces.iter().map(FaceJson::from).collect(),
        }
    }
}

/// Faces of the ν-Tamari complex; `f_vector[i]` counts faces with `i` vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexJson {
    pub nu: String,
    pub d_prime: usize,
    pub f_vector: Vec<u64>,
    pub faces: Vec<Vec<[u32; 2]>>,
}

impl ComplexJson {
    pub fn new(nu: &NuPath, groups: &[Vec<NuFace>]) -> Self {
        let f = FaceVector {
            f: groups.iter().map(|g| g.len() as u64).collect(),
        };
        ComplexJson {
            nu: nu.to_string(),
            d_prime: nu.len() + 1,
            f_vector: f.f,
            faces: groups
                .iter()
                .flatten()
                .map(|c| c.nodes().iter().map(point_pair).collect())
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TamariJson {
    pub nu: String,
    pub paths: Vec<String>,
    pub covers: Vec<(usize, usize)>,
}

impl From<&TamariLattice> for TamariJson {
    fn from(t: &TamariLattice) -> Self {
        TamariJson {
            nu: t.nu.to_string(),
            paths: t.paths.iter().map(ToString::to_string).collect(),
            covers: t.covers.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChecksJson {
    pub fh: bool,
    pub schroder: bool,
    pub fvector: bool,
    pub hvector: bool,
    pub reciprocity: bool,
    pub inverse: bool,
    pub path_sum: bool,
    pub tree_sum: bool,
    pub duality: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportJson {
    pub nu: String,
    pub deg: usize,
    pub d_prime: usize,
    #[serde(rename = "F")]
    pub f: PolyJson,
    #[serde(rename = "H")]
    pub h: PolyJson,
    pub checks: ChecksJson,
}

impl From<&TriangleReport> for ReportJson {
    fn from(r: &TriangleReport) -> Self {
        ReportJson {
            nu: r.nu.to_string(),
            deg: r.deg,
            d_prime: r.d_prime,
            f: (&r.f).into(),
            h: (&r.h).into(),
            checks: ChecksJson {
                fh: r.fh_holds,
                schroder: r.schroder_holds,
                fvector: r.fvector_holds,
                hvector: r.hvector_holds,
                reciprocity: r.reciprocity_holds,
                inverse: r.inverse_holds,
                path_sum: r.path_sum_holds,
                tree_sum: r.tree_sum_holds,
                duality: r.duality_holds,
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PosetJson {
    pub elements: Vec<String>,
    pub covers: Vec<(String, String, u32)>,
    pub k: u32,
}

impl From<&LabeledPoset> for PosetJson {
    fn from(p: &LabeledPoset) -> Self {
        let name = |i: usize| p.elements()[i].clone();
        PosetJson {
            elements: p.elements().to_vec(),
            covers: p
                .covers()
                .iter()
                .map(|c| (name(c.lower), name(c.upper), c.label))
                .collect(),
            k: p.k(),
        }
    }
}

pub fn to_string_pretty<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("plain data serialises")
}
