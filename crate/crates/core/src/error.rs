use alloc::string::String;
use core::fmt;

use crate::paths::LatticePoint;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Errors produced by the combinatorial constructions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    EmptyPath,
    InvalidStep(char),
    /// The path does not share endpoints with ν or leaves the region above it.
    NotANuPath,
    PointOutsideRegion(LatticePoint),
    NotAValley(LatticePoint),
    NotANuTree,
    NotAnAscent(LatticePoint),
    NotInTree(LatticePoint),
    InvalidSchroderPath,
    ArityMismatch {
        left: usize,
        right: usize,
    },
    /// A monomial would need a negative exponent after the transform.
    LeavesPolynomialRing,
    /// Clearing denominators in the inverse transform failed.
    NonPolynomialResult,
    InconsistentDimension {
        needed: usize,
        given: usize,
    },
    PolyParse(String),
    Poset(PosetError),
    NotALattice(LatticeWitness),
}

/// Validation failures for labeled posets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PosetError {
    ZeroLabels,
    DuplicateElement(String),
    UnknownElement(String),
    DuplicateCover(String, String),
    SelfLoop(String),
    Cycle(String),
    /// `lower < upper` holds through some other element, so the pair is not a cover.
    NotACover(String, String),
    LabelOutOfRange {
        lower: String,
        upper: String,
        label: u32,
        k: u32,
    },
}

/// A pair of elements without a meet or a join, or a missing bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LatticeWitness {
    Empty,
    NoMeet(String, String),
    NoJoin(String, String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptyPath => f.write_str("empty path"),
            Error::InvalidStep(c) => write!(f, "invalid step {c:?}"),
            Error::NotANuPath => f.write_str("not a ν-path"),
            Error::PointOutsideRegion(p) => write!(f, "point outside region: {p}"),
            Error::NotAValley(p) => write!(f, "{p} is not a valley"),
            Error::NotANuTree => f.write_str("not a ν-tree"),
            Error::NotAnAscent(p) => write!(f, "{p} is not an ascent"),
            Error::NotInTree(p) => write!(f, "{p} is not a node of the tree"),
            Error::InvalidSchroderPath => f.write_str("not a ν-Schröder path"),
            Error::ArityMismatch { left, right } => {
                write!(f, "arity mismatch: {left} vs {right}")
            }
            Error::LeavesPolynomialRing => f.write_str("transform leaves polynomial ring"),
            Error::NonPolynomialResult => f.write_str("inverse transform is not a polynomial"),
            Error::InconsistentDimension { needed, given } => {
                write!(f, "inconsistent d: need at least {needed}, got {given}")
            }
            Error::PolyParse(msg) => write!(f, "polynomial parse error: {msg}"),
            Error::Poset(e) => write!(f, "invalid poset: {e}"),
            Error::NotALattice(w) => write!(f, "not a lattice: {w}"),
        }
    }
}

impl fmt::Display for PosetError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PosetError::ZeroLabels => f.write_str("k must be at least 1"),
            PosetError::DuplicateElement(e) => write!(f, "duplicate element {e:?}"),
            PosetError::UnknownElement(e) => write!(f, "unknown element {e:?}"),
            PosetError::DuplicateCover(a, b) => write!(f, "duplicate cover ({a:?}, {b:?})"),
            PosetError::SelfLoop(a) => write!(f, "self loop on {a:?}"),
            PosetError::Cycle(a) => write!(f, "cover relations contain a cycle through {a:?}"),
            PosetError::NotACover(a, b) => {
                write!(
                    f,
                    "({a:?}, {b:?}) is implied by other relations and is not a cover"
                )
            }
            PosetError::LabelOutOfRange {
                lower,
                upper,
                label,
                k,
            } => {
                write!(f, "label {label} on ({lower:?}, {upper:?}) exceeds k = {k}")
            }
        }
    }
}

impl fmt::Display for LatticeWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LatticeWitness::Empty => f.write_str("empty poset"),
            LatticeWitness::NoMeet(a, b) => write!(f, "{a:?} and {b:?} have no meet"),
            LatticeWitness::NoJoin(a, b) => write!(f, "{a:?} and {b:?} have no join"),
        }
    }
}

impl From<PosetError> for Error {
    fn from(e: PosetError) -> Self {
        Error::Poset(e)
    }
}

impl core::error::Error for Error {}
impl core::error::Error for PosetError {}
