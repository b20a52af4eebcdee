//! Exact arithmetic for symplectic, orthogonal, and orthosymplectic
//! Murnaghan-Nakayama rules: partition combinatorics, sparse Laurent
//! polynomials, brute-force character oracles, the rules themselves, and
//! a verification sweep comparing the two.

pub mod expansion;
pub mod laurent;
pub mod oracle;
pub mod partition;
pub mod sweep;

pub use expansion::{FormalExpansion, MixedExpansion, MixedTerm};
pub use laurent::{LaurentError, LaurentPoly};
pub use oracle::{CharCache, CharacterKind, OracleError};
pub use partition::{Partition, ShapeError, SkewShape, Staircase, StaircaseKind, StripReport};
pub use sweep::{FailureRecord, Rule, SweepConfig, SweepReport};
