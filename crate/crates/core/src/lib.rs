//! Umbral sequence transforms, operator functions evaluated through their
//! Fourier representation, and Appell polynomial expansions.
//!
//! Every closed form in the crate has an independent brute-force route next
//! to it (direct summation, truncated operator matrices, formal power series
//! in a bookkeeping parameter), so identities can be checked rather than
//! trusted.

pub mod error;
pub mod exec;
pub mod scalar;
pub mod seqcore;
pub mod specfun;
pub mod gftrans;
pub mod opcalc;
pub mod appell;
pub mod checks;

pub use error::{Error, Result};
pub use exec::Execution;
