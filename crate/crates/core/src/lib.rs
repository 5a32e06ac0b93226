//! Linear block and convolutional codes built by selecting rows of a Fourier matrix over a finite field.
//!
//! The pipeline runs from [`Field`] and [`FourierContext`] through the designers in [`block`] and
//! [`conv`], then into [`verify`] for distance and duality certificates and [`codec`] for
//! syndrome decoding. [`codefile`] gives every code a stable text form that the `fcodes` binary reads and writes.

pub mod block;
pub mod cli;
pub mod codec;
pub mod codefile;
pub mod conv;
pub mod error;
pub mod field;
pub mod fourier;
pub mod matrix;
pub mod series;
pub mod verify;

pub use error::{Error, Result};
pub use field::{order_mod, Field, Gf};
pub use fourier::FourierContext;
pub use matrix::Matrix;
