//! Semiclassical diffraction toolkit for a spherical obstacle.
//!
//! The crate computes the geometry of grazing rays and their caustics, the
//! uniformized eikonal wavefunctions on the sphere, the mixed-type eikonal
//! (Ludwig) fields near and beyond the caustic, creeping-wave scattering
//! amplitudes, and orbiting-resonance phase shifts. A self-contained
//! special-function kernel (Airy, complex-order Hankel, complex-degree
//! Legendre) backs the physics modules.
//!
//! The companion guide under `book/` walks through each concept; its code
//! snippets compile and run as doctests of this crate.

mod dd;

pub mod eikonal;
pub mod geometry;
pub mod ludwig;
pub mod scattering;
pub mod specfun;

pub use num_complex::Complex64;

#[cfg(doctest)]
mod book;
