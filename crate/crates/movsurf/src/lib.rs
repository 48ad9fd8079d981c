//! Exact implicitization of rational parametric surfaces.
//!
//! The crate builds the coefficient matrices of moving planes, moving
//! quadrics and moving d-surfaces for tensor-product (bidegree (m, n)) and
//! triangular (degree n) parametrizations, computes bihomogeneous and
//! multivariate resultants by three independent routes (Koszul-complex minor
//! ratios, Dixon matrices, Macaulay matrices), verifies the exact
//! determinant identities tying the two together, and recovers implicit
//! equations either from a kernel of moving quadrics or directly from a
//! specialized resultant. All arithmetic is exact rational; every identity
//! is checked as an equality of arbitrary-precision numbers.
//!
//! Start with the runnable examples:
//!
//! ```text
//! cargo run --example moving_spaces
//! cargo run --example matrices
//! cargo run --example resultant_engines
//! cargo run --example implicitize_tensor
//! cargo run --example implicitize_triangular
//! cargo run --example verify_identities
//! ```
//!
//! The same capabilities are scriptable through the thin `movsurf` binary;
//! see the crate README for the input file format.

pub mod error;
pub mod implicitize;
pub mod input;
pub mod matrix;
pub mod moving;
pub mod parse;
pub mod poly;
pub mod polymat;
pub mod rat;
pub mod resultant;
pub mod surface;
pub mod verify;

pub use error::{Error, Result};
pub use matrix::{Label, Matrix};
pub use moving::{
    build_mp, build_mp_i, build_mqd, build_msd, build_mtd, choose_index_set, gamma_sets,
    moving_space_basis, GammaSet, IndexSetI, MovingSurface, Sigma,
};
pub use parse::parse_poly;
pub use poly::{
    bi_monomials, hom_monomials, tri_monomials, Expo, MonomialBasis, SparsePoly, VarSet,
};
pub use polymat::PolyMatrix;
pub use rat::Rat;
pub use surface::{random_surface, ParamSurface, SurfaceKind};
