//! Exact computation of the local residues attached to the fixed and
//! indeterminacy points of a meromorphic self-map of complex projective
//! space, with verification of the global index identities they satisfy.
//!
//! All arithmetic is over arbitrary-precision rationals; every check is an
//! exact equality. See the `projindex` binary for the command-line surface.

pub mod cli;
pub mod error;
pub mod jet;
pub mod localalg;
pub mod matrix;
pub mod parse;
pub mod poly;
pub mod projmap;
pub mod report;
pub mod residue;
pub mod scalar;
pub mod symfun;
pub mod theorems;

pub use error::{Error, Result};
pub use poly::{Monomial, MultiPoly};
pub use projmap::{HomogeneousMap, PointClass, ProjPoint};
pub use residue::{res1, res2, res3, ResidueOptions, ResiduePath, ResidueValue};
pub use scalar::Scalar;
pub use symfun::SymSpec;
