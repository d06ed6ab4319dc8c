//! Std companion of `nu-tamari-core`: JSON and DOT formats, the poset file
//! loader, seeded random posets and parallel verification sweeps.

pub mod dot;
pub mod json;
pub mod poset_file;
pub mod random;
pub mod sweep;

pub use nu_tamari_core as core;
