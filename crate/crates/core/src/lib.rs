//! Exact and numeric machinery for multivariate hypergeometric series built
//! from Jack symmetric polynomials, and for the symmetric-domain analysis that
//! consumes them.
//!
//! - [`combinatorics`]: partitions, generalized Pochhammer symbols, hook
//!   products, and the normalization constants `q` and `pi_m`
//! - [`jack`]: exact Jack polynomials in the monomial basis, normalized
//!   evaluation, and the K-type dimension formula
//! - [`hypergeo`]: the series `kFl` with multiplicity parameter `2/a`,
//!   shell-wise truncated evaluation and the boundedness criterion at `1^r`
//! - [`domains`]: classification quadruples of real bounded symmetric domains
//!   and their derived constants (genus, Wallach set, `rho(xi)`)
//! - [`invariant_norms`]: closed-form Fock and Bergman norms of the
//!   L-invariant polynomials, family by family
//! - [`dunkl_oracle`]: Dunkl operators and the Fock-Fischer pairing, used as
//!   an independent brute-force check of the closed-form norms
//! - [`spherical`]: radial spherical functions and the sigma/lambda spectral
//!   parameter conversions, plus a rank-one quadrature oracle
//! - [`branching`]: scans enumerating discrete complementary-series
//!   components, each certified by series convergence and a summed norm square
//! - [`selftest`]: the reproducible acceptance suite behind `symdom selftest`
//!
//! All combinatorial scalars are exact rationals ([`Rat`]); floating point
//! enters only when series are summed, and even there the accumulator type is
//! generic (see [`numeric::SeriesScalar`]) so sums can be run in `f64` or in
//! exact rational arithmetic.

pub mod branching;
pub mod combinatorics;
pub mod domains;
pub mod dunkl_oracle;
pub mod hypergeo;
pub mod invariant_norms;
pub mod jack;
pub mod mpoly;
pub mod numeric;
pub mod selftest;
pub mod spherical;

/// Exact rational scalar used for every combinatorial quantity.
pub type Rat = num::BigRational;
/// Big integer re-export, for callers assembling [`Rat`] values.
pub type Int = num::BigInt;
/// Default floating-point type for series values.
pub type Real = f64;

pub use combinatorics::Partition;
pub use domains::{DomainDescriptor, DomainKind};
pub use hypergeo::{SeriesParams, SeriesResult, Verdict};
pub use numeric::{Precision, SeriesScalar};

/// Crate-wide error type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("partition parts must be weakly decreasing, got {0:?}")]
    NotWeaklyDecreasing(Vec<u32>),
    #[error("partition length {len} exceeds rank {rank}")]
    PartitionTooLong { len: usize, rank: usize },
    #[error("cannot parse partition from {0:?}")]
    PartitionParse(String),
    #[error("cannot parse rational from {0:?}")]
    RationalParse(String),
    #[error("polynomial division by {0} left a nonzero remainder")]
    NonDivisible(String),
    #[error("jack parameter alpha must be positive, got {0}")]
    NonPositiveAlpha(String),
    #[error("multiplicity parameter a must be positive, got {0}")]
    NonPositiveMultiplicity(String),
    #[error("denominator parameter {beta} sits on the pole lattice at row {row} and the series does not truncate before it")]
    PoleLattice { beta: String, row: u32 },
    #[error("denominator Pochhammer vanished at row {row} while summing")]
    PoleHit { row: u32 },
    #[error("series argument t[{index}] = {value} outside [0,1)")]
    ArgumentOutOfDomain { index: usize, value: f64 },
    #[error("parameters fail the boundedness criterion at the all-ones point: {0}")]
    DivergentAtOne(String),
    #[error("invalid domain parameters: {0}")]
    InvalidDomain(String),
    #[error("family {family} does not support {what}")]
    UnsupportedFamily { family: String, what: String },
    #[error("invariant label for family {label} does not match domain {domain}")]
    FamilyMismatch { label: String, domain: String },
    #[error("K-type dimension {value} at partition {partition} is not a positive integer")]
    DimensionNotIntegral { value: String, partition: String },
    #[error("nu = {nu} annihilates the component: the Pochhammer factor vanishes")]
    NuKillsComponent { nu: String },
    #[error("nu = {nu} lies outside the Wallach set ({desc})")]
    NuOutsideWallach { nu: String, desc: String },
    #[error("closed-form bound and convergence criterion disagree: {0}")]
    BoundCriterionMismatch(String),
    #[error("{0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
