//! Exact combinatorics of the Kostant cascade.
//!
//! This crate builds the root system of any simple Lie algebra in the
//! Vinberg–Onishchik numbering, constructs the Kostant cascade of strongly
//! orthogonal roots, and derives everything the cascade carries: the cascade
//! element of the Cartan subalgebra and its spectrum, the Weyl element taking
//! the cascade element to the antidominant chamber, the associated abelian
//! ideal of the Borel, the Z₂-grading dimensions, and the invariants of the
//! cascade nilpotent orbit (weighted Dynkin diagram, Jordan partition for the
//! classical series, height, sphericity).
//!
//! All arithmetic is exact: root coordinates are integers and weights are
//! rationals. There is no floating point anywhere in the crate.

pub mod cascade;
pub mod cascade_element;
pub mod classical;
pub mod fixtures;
pub mod involution;
pub mod kostant;
pub mod orbit;
pub mod report;
pub mod root_system;
pub mod verify;

pub use cascade::{Cascade, CascadeNode, Subtype};
pub use root_system::{Family, Lattice, Root, RootSystem, SimpleType, WeightVector, WeylElement};

/// Exact rational scalar used throughout.
pub type Rat = num_rational::Ratio<i64>;

/// Errors shared by the whole crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Rank outside the bounds of the family (A n≥1, B n≥2, C n≥2, D n≥4,
    /// E n∈{6,7,8}, F n=4, G n=2).
    #[error("invalid rank {rank} for family {family}")]
    InvalidRank { family: char, rank: usize },

    /// A type string that does not parse as `<letter><rank>`.
    #[error("cannot parse simple type {0:?}")]
    UnknownType(String),

    /// A low-rank classical label that duplicates another type.
    #[error("{given} is not used as a canonical label; use {canonical}")]
    NonCanonicalType { given: String, canonical: String },

    /// Iterated composition exceeded the configured bound.
    #[error("element order exceeds bound {0}")]
    OrderOverflow(u64),

    /// The element is outside the admissible polytope: some positive root
    /// evaluates outside {-1, 0, 1, 2}.
    #[error("not admissible: root {root:?} evaluates to {value}")]
    NotAdmissible { root: Vec<i64>, value: String },

    /// Requested data is undefined for this type (the A_{2p} exclusion).
    #[error("not applicable: type A_{{2p}}")]
    NotApplicable,

    /// Partition data only exists for the classical families.
    #[error("no partition data for exceptional type {0}")]
    NotClassical(String),

    /// The half-sum of positive (co)roots does not decompose over the
    /// cascade with the expected coefficients.
    #[error("(co)rho decomposition mismatch: {0}")]
    DecompositionMismatch(String),

    /// A stated precondition does not hold.
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),

    /// No admissible ordering of the multiset witnesses the height bound.
    #[error("no chain ordering found for the height witness")]
    NoChain,
}
