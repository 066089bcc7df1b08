//! Relativistic Bargmann-type transforms on the Poincaré disk.
//!
//! The crate is organised bottom-up:
//!
//! * [`hypergeom`]: complex log-gamma, Pochhammer symbols, ₂F₁, terminating ₃F₂,
//!   Appell F₁ and the Kampé de Fériet function F₅.
//! * [`orthopoly`]: Jacobi (including negative integer parameters), Laguerre and
//!   continuous dual Hahn polynomials.
//! * [`quadrature`]: Gauss–Legendre / Gauss–Jacobi rules, adaptive half-line
//!   integration and polar disk integration.
//! * [`disk`]: disk geometry, hyperbolic Landau levels, the eigenbasis Φ_k^{σ,m}
//!   and a finite-difference Maass Laplacian.
//! * [`oscillator`]: the relativistic pseudoharmonic oscillator eigenstates.
//! * [`coherent`]: coherent-state normalisation, overlaps and wavefunctions.
//! * [`bargmann`]: the classical and relativistic transforms.
//! * [`identities`] and [`verify`]: the identity checks and verification suites.

pub mod bargmann;
pub mod coherent;
pub mod disk;
pub mod error;
pub mod hypergeom;
pub mod identities;
pub mod oscillator;
pub mod orthopoly;
pub mod quadrature;
pub mod verify;

pub use error::{Error, Result};

/// The universal scalar.
pub type ComplexValue = num_complex::Complex64;

/// Shorthand constructor used throughout the crate.
#[inline]
pub fn c64(re: f64, im: f64) -> ComplexValue {
    ComplexValue::new(re, im)
}

/// Library version, reported in CLI outputs.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
