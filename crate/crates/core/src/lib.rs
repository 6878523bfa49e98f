//! Exact combinatorics of affine Weyl groups and parahoric Schubert
//! varieties: lengths, reduced words, Bruhat order, (double) coset
//! representatives, Schubert dimensions and strata, and the combinatorial side
//! of equivariant Demazure resolutions.
//!
//! ```
//! use affine_schubert_core::{AffineWeylGroup, CartanType, Coweight, Facet};
//!
//! let g = AffineWeylGroup::build(CartanType::C, 2).unwrap();
//! let x = Facet::special_vertex(2);
//! let t = g.from_translation(&Coweight(vec![-1, 0])).unwrap();
//! assert_eq!(g.schubert_dim(&t, &x, &x), 4);
//! ```

pub mod cli;
pub mod cosets;
mod error;
pub mod linalg;
pub mod oracle;
pub mod resolution;
pub mod root_data;
pub mod schubert;
pub mod syntax;
pub mod weyl;

pub use cosets::Facet;
pub use error::{Error, Result};
pub use resolution::{unitary_example, ResolutionStep, UnitaryExample};
pub use root_data::{AffineRoot, CartanDatum, CartanType, Coweight};
pub use schubert::StrataPoset;
pub use weyl::{AffineWeylElement, AffineWeylGroup, DiagramAut, FiniteWeylMatrix, Side, Word};
