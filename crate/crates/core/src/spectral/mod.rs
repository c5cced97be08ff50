//! The E² page, its possible differentials, diagonal assemblies, the
//! complex part with its involution, and the core groups.

mod core_solver;
mod diagonal;
mod page;

pub use core_solver::{
    constraints_from_diagonals, enumerate_core_solutions, mu_ranks, Arrow, ArrowProperty, CoreConstraints, CoreSolution,
};
pub use diagonal::{
    assemble_diagonals, nonzero_hom_outcomes, resolve_filtration, D2Variant, DiagonalAssembly, DiagonalStatus, Factor,
};
pub use page::{
    compute_e2, compute_ku_with_psi, compute_mu, differential_report, DifferentialEntry, DifferentialReport, E2Page,
    KuData,
};

use crate::exactalg::AlgebraError;
use crate::kgraph::KGraphError;
use crate::koszul::KoszulError;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum SpectralError {
    #[error(transparent)]
    Koszul(#[from] KoszulError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("AmbiguousComplexPart: KU_{degree} is not read off a single E2 cell")]
    AmbiguousComplexPart { degree: usize },
    #[error("NonElementaryMu: MU_{degree} is not an elementary abelian 2-group")]
    NonElementaryMu { degree: usize },
    #[error("NoSolution: the core constraints are inconsistent")]
    NoSolution,
    #[error("BoundExceeded: search limit {limit} exceeded")]
    BoundExceeded { limit: u64 },
}

impl From<KGraphError> for SpectralError {
    fn from(e: KGraphError) -> Self {
        SpectralError::Koszul(KoszulError::Graph(e))
    }
}

impl SpectralError {
    /// Whether the error comes from malformed input rather than the
    /// computation.
    pub fn is_validation(&self) -> bool {
        matches!(self, SpectralError::Koszul(KoszulError::Graph(_)))
    }

    pub fn is_bound(&self) -> bool {
        matches!(
            self,
            SpectralError::BoundExceeded { .. } | SpectralError::Algebra(AlgebraError::BoundExceeded { .. })
        )
    }

    /// Stable tag naming the error.
    pub fn name(&self) -> &'static str {
        match self {
            SpectralError::Koszul(KoszulError::Graph(e)) => e.name(),
            SpectralError::Koszul(KoszulError::CompositionNotZero(_)) => "CompositionNotZero",
            SpectralError::Koszul(KoszulError::Algebra(e)) | SpectralError::Algebra(e) => algebra_name(e),
            SpectralError::AmbiguousComplexPart { .. } => "AmbiguousComplexPart",
            SpectralError::NonElementaryMu { .. } => "NonElementaryMu",
            SpectralError::NoSolution => "NoSolution",
            SpectralError::BoundExceeded { .. } => "BoundExceeded",
        }
    }
}

fn algebra_name(e: &AlgebraError) -> &'static str {
    match e {
        AlgebraError::ShapeMismatch { .. } => "ShapeMismatch",
        AlgebraError::NotWellDefined => "NotWellDefined",
        AlgebraError::IncompatibleGroups => "IncompatibleGroups",
        AlgebraError::CompositionNotZero => "CompositionNotZero",
        AlgebraError::NotChainMap => "NotChainMap",
        AlgebraError::BoundExceeded { .. } => "BoundExceeded",
        AlgebraError::InfiniteInput => "InfiniteInput",
    }
}
