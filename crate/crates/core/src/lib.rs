//! Ordered forests composed by grafting.
//!
//! The crate builds the category of reduced boundary-labelled ordered
//! forests with its shadow functor onto order-preserving surjections. Exact
//! linear algebra over the rationals checks the comparison between presheaves
//! on forests and semisimplicial modules.
//!
//! Module map:
//!
//! - [`forest`]: ordered quivers and forests, validation, decomposition.
//! - [`morphism`]: boundary-labelled forests, grafting, reduction.
//! - [`category`]: identities, composition, hom-set enumeration.
//! - [`shadow`]: surjections, the shadow functor, duality with injections.
//! - [`linalg`]: exact rational matrices, complexes, homology, limits.
//! - [`normalization`]: semisimplicial modules, normalized chains, `Γ`.
//! - [`kan`]: truncated presheaves, pullback, right Kan extension.
//! - [`checks`]: exhaustive verification sweeps shared by the CLI and tests.
//! - [`oracle`]: brute-force reference implementations used to cross-check.
//!
//! Runnable walkthroughs live in the crate's `examples/` directory.

pub mod category;
pub mod checks;
pub mod cli;
pub mod error;
pub mod forest;
pub mod kan;
pub mod linalg;
pub mod morphism;
pub mod normalization;
pub mod oracle;
pub mod random;
pub mod shadow;

pub use category::{compose, enumerate_hom, identity, Fragment, HomSet};
pub use error::{Error, Result};
pub use forest::{
    forest_maps, ordinal_sum, validate, OrderedForest, OrderedQuiver, TreeDecomposition,
};
pub use linalg::{ChainComplex, Rational, RationalMatrix};
pub use morphism::{raw_graft, reduce, ForestMorphism, GraftResult};
pub use shadow::{forest_of, sigma_of, Injection, Surjection};
