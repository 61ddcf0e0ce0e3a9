//! Exact k-power domination on hypergraphs.
//!
//! The crate is organized bottom-up:
//!
//! * [`hypergraph`] and [`hgr`]: the immutable incidence structure and its
//!   text format;
//! * [`propagation`]: white degree, the two forcing rules and their closure;
//! * [`solvers`]: exact γ and γ_p^k, every minimum set, private neighbors and
//!   the structural inequality checks;
//! * [`generators`]: squids, generalized squids, the counterexample family,
//!   the three-edge tight construction and a random connected generator;
//! * [`bounds`]: exact-rational bound evaluation and verdicts;
//! * [`campaign`]: seeded batch runs producing JSON reports.
//!
//! Bound formulas are generic over the integer type; [`Rational`] is the
//! width used by reports.

pub mod bounds;
pub mod campaign;
pub mod cover;
mod error;
pub mod generators;
pub mod hgr;
pub mod hypergraph;
pub mod propagation;
pub mod solvers;
mod vertex_set;

pub use error::{BoundError, GeneratorError, HypergraphError, ParseError, SolveError};
pub use hgr::{parse_hgr, serialize_hgr, serialize_hgr_with_comments};
pub use hypergraph::Hypergraph;
pub use propagation::{ColorState, ForcingRule};
pub use solvers::{SearchLimits, SolveResult};
pub use vertex_set::VertexSet;

/// Exact fraction used for every reported bound value.
pub type Rational = num_rational::Ratio<i64>;

/// Wider fraction for bound evaluation on very large parameters.
pub type Rational128 = num_rational::Ratio<i128>;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");
