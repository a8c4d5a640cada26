//! Left-compressed intersecting k-uniform set families.
//!
//! A generator set G induces the family of all k-sets whose leading
//! elements sit componentwise below G; a collection of generators induces
//! the union, which is always left-compressed. The level criterion
//! (`intersect::criterion`) decides whether such a family is intersecting
//! by comparing prefix counts against the level, an exhaustive oracle
//! provides independent ground truth, and failures come with explicit
//! disjoint witness pairs. On top of that sit shifting/compression of
//! arbitrary families, type truncation of generators, and exhaustive
//! catalogues of maximal left-compressed intersecting families at small
//! (n, k).

pub mod cli;
pub mod document;
pub mod error;
pub mod generators;
pub mod intersect;
pub mod mlcif;
pub mod sample;
pub mod sets;
pub mod shift;

pub use error::{Error, Result};
pub use sets::{GeneratorCollection, GeneratorSet, GroundContext, KSet, SetFamily};
