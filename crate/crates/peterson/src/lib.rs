//! Exact equivariant Schubert calculus on Peterson varieties, for every
//! finite Lie type.
//!
//! The crate builds root systems and Weyl groups from their Cartan
//! matrices, evaluates equivariant Schubert classes at torus-fixed
//! points through Billey's formula, and specializes them to the
//! one-dimensional torus of a Peterson variety. On top of that sit the
//! Peterson Schubert class basis, Monk structure constants with built-in
//! pointwise verification, Giambelli constants with their reduced-word
//! factorization, and an exhaustive scan for non-integral structure
//! constants. All arithmetic is exact: big integers and big rationals,
//! no floating point.
//!
//! Module map:
//! - [`root_system`]: Lie types, Cartan matrices, roots, diagram
//!   classification of subsets of the simple roots.
//! - [`weyl`]: Weyl group elements, reduced words, Bruhat order, longest
//!   elements of parabolic subgroups.
//! - [`billey`]: localization of Schubert classes, symbolically and
//!   specialized to the variable t.
//! - [`classes`]: the Peterson class basis, Monk's rule, Giambelli
//!   constants, and the non-integrality scan.
//! - [`words`]: reference reduced words for longest elements.
//! - [`format`]: table, JSON, and CSV rendering.
//! - [`cli`]: the subcommand implementations behind the binary.
//!
//! The `examples/` directory walks through each layer; start with
//! `basis_table`.

#![forbid(unsafe_code)]

pub mod billey;
pub mod classes;
pub mod cli;
pub mod error;
pub mod format;
pub mod root_system;
pub mod weyl;
pub mod words;

pub use billey::{specialize, HeightList, RootPolynomial, TMonomial};
pub use classes::{
    BasisTable, ComponentFactor, GiambelliCertificate, MonkExpansion, MonkTerm, NonIntegralHit,
    Peterson, PetersonClass,
};
pub use error::{Error, Result};
pub use format::OutputFormat;
pub use root_system::{Component, Family, LieType, Root, RootSystem, SimpleSubset};
pub use weyl::{WeylElement, Word};
