#![no_std]
extern crate alloc;

pub mod complexes;
pub mod error;
pub mod paths;
pub mod poly;
pub mod posets;
pub mod trees;
pub mod triangles;

pub use error::{Error, Result};
