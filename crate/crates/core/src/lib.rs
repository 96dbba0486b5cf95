//! Exact cohomological invariants of the desingularizations of the moduli
//! space of rank-2 bundles with trivial determinant on a curve of genus `g`:
//! Betti numbers along the blow-up chain, Hodge-Deligne polynomials of the
//! boundary strata, the stringy E-function and the stringy Euler number.

pub mod error;
pub mod exact;
pub mod grassmann;
pub mod kirwan;
pub mod report;
pub mod stringy;
pub mod verify;

pub use error::{Error, Result};
pub use exact::{
    geometric_sum, poly_exact_div, series_expand, BigRat, MPoly, NotDivisible, RatFun, Ring,
    TruncSeries,
};
pub use grassmann::{grassmann_e, grassmann_poincare, pp_pair_e_split, GrassmannSpec};
pub use kirwan::{PoincareTable, Space};
pub use report::{Entry, VerificationReport};
pub use stringy::{DiscrepancySpec, PairingTable, StratumId};

/// Default upper bound on the genus accepted by front ends.
pub const DEFAULT_MAX_GENUS: u32 = 64;
