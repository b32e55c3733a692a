//! Exact computation with quasitriangular Hopf algebras, comodule algebras,
//! K-matrices, and the braid group representations they induce.
//!
//! Everything is computed over the rationals with arbitrary precision: no
//! floating point enters any code path, so every equality test is exact and
//! every reported witness is trustworthy.
//!
//! The crate is organised bottom-up:
//!
//! * [`scalar`], [`matrix`], [`tensor`]: exact linear algebra, Kronecker
//!   products, flip maps, and elements of tensor products of algebras under
//!   one global flat-index convention (leftmost factor most significant).
//! * [`algebra`], [`hopf`], [`module`]: finite dimensional algebras and Hopf
//!   algebras presented by structure constants, axiom checkers that report
//!   witnesses, duals, regular actions, and a trace-form semisimplicity test.
//! * [`rmatrix`]: R-matrix axioms, triangularity, the braiding induced on
//!   module pairs, Yang-Baxter verification, and the Drinfeld double.
//! * [`comodule`]: comodule algebras, coideal subalgebras, K-matrix axioms,
//!   the induced braiding on (module, comodule-module) pairs, braided module
//!   identities, an H-simplicity certificate, and reflective algebras.
//! * [`braid`]: braid group presentations of types A, BC and D, matrix
//!   representations built from a braiding and a K-matrix, relation
//!   verification, word traces, and trace signatures.
//! * [`group`], [`poly`], [`solver`], [`distinguish`]: group-algebra
//!   machinery (subgroup enumeration, centralizer K-matrices, conjugacy
//!   classification of pairs), an exact solver for the K-matrix equations,
//!   and the invariant-based comparison of two K-matrix carriers.
//! * [`catalog`]: built-in worked examples (the 4-dimensional Taft algebra
//!   for two parameter values, and small group algebras) with their known
//!   K-matrix classifications.
//! * [`json`]: serde schemas for every object that crosses the CLI boundary,
//!   plus a parser for human-readable tensor expressions like `g⊗1 + x⊗gx`.

pub mod algebra;
pub mod braid;
pub mod catalog;
pub mod comodule;
pub mod distinguish;
pub mod error;
pub mod group;
pub mod hopf;
pub mod json;
pub mod matrix;
pub mod module;
pub mod poly;
pub mod report;
pub mod rmatrix;
pub mod scalar;
pub mod solver;
pub mod tensor;

pub use error::Error;
pub use report::{AxiomCheck, CheckReport};
pub use scalar::Scalar;
