//! Exact decision procedures for diagonalizable subgroups `D_n(A)` of the
//! diagonal torus of affine `n`-space.
//!
//! * [`exactmat`]: integer matrices, Smith and Hermite normal forms, minors.
//! * [`lattice`]: row lattices, membership and two independent equality tests.
//! * [`diag`]: isomorphism types, conjugacy and canonical forms.
//! * [`action`]: orbits, stabilizers and closedness on affine space.
//! * [`normalizer`]: normalizer case analysis and its monomial part.
//! * [`roots`]: root vectors and roots for `D_n` and `D_n*`.
//! * [`oracle`]: brute-force references used to certify the above.
//! * [`cli`]: the command-line front end.

pub mod action;
pub mod cli;
pub mod diag;
pub mod error;
pub mod exactmat;
pub mod lattice;
pub mod normalizer;
pub mod oracle;
pub mod perm;
pub mod roots;

pub use error::{Error, Result};
pub use exactmat::IntMatrix;
