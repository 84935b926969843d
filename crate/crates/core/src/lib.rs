//! Exact weight enumerators of Hermitian self-orthogonal GF(4) codes and the
//! magic-state-distillation maps they determine.
//!
//! The crate is organised bottom-up:
//!
//! * [`gf4core`]: field arithmetic, linear codes, Hermitian duals, codeword
//!   enumeration and shortening.
//! * [`enums`]: bivariate homogeneous enumerators, MacWilliams transform and
//!   the signed evaluations at imaginary arguments.
//! * [`invariants`]: the invariant-ring parametrisations of enumerator
//!   families and the extremal constructions.
//! * [`distill`]: the rational map `eps -> eps_out`, thresholds, the
//!   noise-suppression exponent and the two physical-consistency checks.
//! * [`bounds`]: exact simplex, 2D vertex enumeration, lattice-point counting
//!   and the bound sweeps built on them.
//! * [`oracle`]: dense stabilizer projectors used to cross-check everything
//!   above for small lengths.
//! * [`cli`]: the command-line surface.
//!
//! All arithmetic that feeds a verdict is exact (`BigRational`, or
//! `Q[sqrt 3]` pairs where the octahedron boundary enters).

pub mod bounds;
pub mod cli;
pub mod distill;
pub mod enums;
pub mod gf4core;
pub mod invariants;
pub mod linalg;
pub mod oracle;
pub mod poly;
pub mod qsqrt3;
pub mod rational;

pub use enums::Enumerator;
pub use gf4core::{Gf4, Gf4Code, Gf4Vector};
pub use rational::Rational;
