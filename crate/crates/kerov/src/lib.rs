//! Exact computation of Kerov's character polynomials.
//!
//! The normalized character of the symmetric group on a `k`-cycle, viewed as a
//! function of the shape `ω`, is a universal polynomial `Σ_k` in the free
//! cumulants `R_2, R_3, …` of `ω`. This crate computes `Σ_k` and its graded
//! pieces `Σ_{k,2n}` exactly, by four independent routes, in both the `R`
//! basis and the `C` basis, and verifies the results against irreducible
//! characters computed from first principles (Murnaghan–Nakayama).
//!
//! Layout:
//! - [`scalar`], [`monomial`], [`poly`], [`series`]: the exact ring tower —
//!   arbitrary-precision rationals, sparse multivariate polynomials in the
//!   indeterminates `R_i`/`C_m`, and truncated formal power series with
//!   polynomial coefficients (including Lagrange reversion and the Euler
//!   operator `D = t d/dt`).
//! - [`partition`], [`symfun`]: integer partitions, Stirling numbers, and the
//!   evaluations `m̂_λ` of monomial symmetric functions at `1, 2, …, k−1`.
//! - [`engine`]: all routes to `Σ_k` and `Σ_{k,2n}`, closed forms, and the
//!   `R ↔ C` basis change.
//! - [`oracle`]: Young-diagram profiles, free cumulants of a shape, and
//!   symmetric-group characters — ground truth independent of the engine.
//! - [`verify`]: suites tying engine to oracle, with machine-readable reports.

pub mod engine;
pub mod monomial;
pub mod oracle;
pub mod partition;
pub mod poly;
pub mod scalar;
pub mod series;
pub mod symfun;
pub mod verify;

pub use monomial::Monomial;
pub use partition::Partition;
pub use poly::{Basis, Poly};
pub use scalar::Rational;
pub use series::Series;
