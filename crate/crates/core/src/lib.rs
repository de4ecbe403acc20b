//! Exact and numerical verification of the odd-sector resolution of identity
//! furnished by squeezed number states `D(ξ)|2n+1⟩`.
//!
//! The crate is organised bottom-up:
//!
//! * [`exact`]: big-rational combinatorics (factorials, integer and
//!   half-integer binomials, half-integer Gamma ratios, Beta integrals).
//! * [`poly`]: exact polynomials in the monomial basis.
//! * [`ortho`]: Jacobi, Gegenbauer and associated
//!   Legendre evaluation and the two cross-relations tying them together.
//! * [`overlaps`]: the `ξ ↔ ζ` map and closed-form matrix elements
//!   `⟨2m+1|ζ;2n+1⟩`.
//! * [`quadrature`]: Gauss–Legendre, Gauss–Jacobi and tanh-sinh rules.
//! * [`verify`]: the radial integral `I(p,n)` along two exact routes and by
//!   quadrature, the inner alternating factorial sum, the two derived integral
//!   identities and the even-sector divergence probe.
//! * [`operator`]: truncated ladder operators and the squeeze matrix, used as
//!   an independent numerical oracle.
//! * [`cli`] / [`report`]: suite orchestration and JSON/CSV reports.

pub mod cli;
pub mod error;
pub mod exact;
pub mod operator;
pub mod ortho;
pub mod overlaps;
pub mod poly;
pub mod quadrature;
pub mod record;
pub mod report;
pub mod verify;

pub use error::{Error, Result};
pub use exact::BigRational;
pub use record::{ParamValue, Value, VerificationRecord};
