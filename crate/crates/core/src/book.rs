//! Doctest bridge for the guide under `book/`.
//!
//! mdBook cannot run chapter code blocks against this crate by itself, so
//! each chapter is included here as a doc comment; `cargo test --doc`
//! compiles and runs every snippet, keeping the book in sync with the API.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/special-functions.md")]
pub mod special_functions {}

#[doc = include_str!("../../../book/src/ray-geometry.md")]
pub mod ray_geometry {}

#[doc = include_str!("../../../book/src/surface-waves.md")]
pub mod surface_waves {}

#[doc = include_str!("../../../book/src/caustic-fields.md")]
pub mod caustic_fields {}

#[doc = include_str!("../../../book/src/shadow-and-evanescence.md")]
pub mod shadow_and_evanescence {}

#[doc = include_str!("../../../book/src/scattering-amplitudes.md")]
pub mod scattering_amplitudes {}

#[doc = include_str!("../../../book/src/resonances.md")]
pub mod resonances {}

#[doc = include_str!("../../../book/src/command-line.md")]
pub mod command_line {}
