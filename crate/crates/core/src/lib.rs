//! Exact characteristic polynomials of finite-dimensional representations of
//! complex simple Lie algebras.
//!
//! The crate builds root systems of every simple type, computes weight
//! multisets with multiplicities, represents characteristic polynomials by
//! their linear factors and irreducible decompositions, multiplies them, and
//! reconstructs representations from them. It also audits the adjoint action
//! of root `sl(2)` subalgebras and the spectral matrices of Borel
//! subalgebras, and carries a small symbolic determinant engine used to
//! verify everything at `sl(2)` scale.

pub mod borel;
pub mod charpoly;
pub mod error;
pub mod exactnum;
pub mod oracle;
pub mod poly;
pub mod reconstruct;
pub mod rootsys;
pub mod selftest;
pub mod sl2embed;
pub mod weights;

pub use charpoly::{CharPoly, LinearFactors};
pub use error::{Error, Result};
pub use exactnum::{Rational, RationalMatrix};
pub use poly::SparsePoly;
pub use rootsys::{Family, RootClass, RootSystem, TypeTag, Weight};
pub use weights::{Decomposition, WeightMultiset};
