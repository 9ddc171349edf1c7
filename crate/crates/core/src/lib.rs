//! Core library for `rotacalc`: rotation numbers, derivative growth and
//! parameter search for the one-parameter family of analytic circle
//! diffeomorphisms obtained by restricting the Blaschke-type product
//!
//! ```text
//!     J_{a,t}(z) = e^{2*pi*i*t} * z^2 * (z + a) / (a*z + 1),      a > 3,
//! ```
//!
//! to the unit circle. For a > 3 the restriction is an orientation-preserving
//! analytic diffeomorphism of the circle and the parameter t acts as a rigid
//! shift of the lift, which makes the family convenient for studying how fast
//! the iterates' derivatives can grow for a prescribed rotation number.
//!
//! Module map:
//! * [`contfrac`] — exact continued-fraction and Farey machinery (arbitrary
//!   precision, `rug` integers/rationals).
//! * [`map`] — the circle map itself: lifts, derivatives, orbits, both in
//!   MPFR precision and as fast `f64` kernels for sweeps.
//! * [`rotation`] — rotation-number estimation: Birkhoff averages, certified
//!   comparison against rationals, first-return digit extraction.
//! * [`growth`] — sup-norm growth sequences, renormalization-scale derivative
//!   profiles, the discrete growth-lemma classifier.
//! * [`solver`] — parameter solves: hitting a target rotation number, plateau
//!   endpoints, tangency witnesses, parabolic growth probes.
//! * [`construct`] — the staged construction that pushes derivative growth
//!   toward a prescribed sub-quadratic envelope, with resumable state.
//! * [`verify`] — self-check suite shared by the CLI and the tests.

pub mod construct;
pub mod contfrac;
pub mod error;
pub mod growth;
pub mod map;
pub mod numerics;
pub mod real;
pub mod rotation;
pub mod solver;
pub mod verify;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
