//! Exact integer linear algebra: Smith form, presented groups, homology.

mod extension;
mod group;
mod hom;
mod homology;
mod lattice;
mod matrix;
mod snf;

pub use extension::{extension_candidates, ExtensionBound};
pub use group::{FgAbGroup, InvariantFactors};
pub use hom::GroupHom;
pub use homology::{homology, induced_hom, Homology};
pub use lattice::{column_span_basis, integer_kernel, LatticeBasis};
pub use matrix::IntMatrix;
pub use snf::{smith_normal_form, SnfDecomposition};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("matrix shape {found:?} does not match expected {expected:?}")]
    ShapeMismatch {
        expected: (usize, usize),
        found: (usize, usize),
    },
    #[error("matrix does not send relations to relations")]
    NotWellDefined,
    #[error("groups are not presented compatibly")]
    IncompatibleGroups,
    #[error("composite of consecutive maps is not zero")]
    CompositionNotZero,
    #[error("map does not carry cycles to cycles and boundaries to boundaries")]
    NotChainMap,
    #[error("search bound {limit} exceeded")]
    BoundExceeded { limit: u64 },
    #[error("input group is infinite")]
    InfiniteInput,
}
