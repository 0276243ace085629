//! Uniformly resolvable decompositions of `K_v` into 1-factors and `n`-star
//! factors, `n` odd.
//!
//! For `v = m(n+1)` with `m >= 3`, [`assembler::construct`] builds a
//! decomposition with `r` perfect matchings and `s` spanning `K_{1,n}`
//! forests from Hamiltonian cycles of `K_m` blown up by weight `n+1`.
//! [`verifier::verify`] audits any claimed decomposition from scratch,
//! [`admissibility`] enumerates the pairs `(r, s)` that can exist and those
//! the construction reaches, and [`search`] is a small-case backtracking
//! oracle.
//!
//! ```
//! use urd_core::assembler::{construct, BuildRequest};
//! use urd_core::verifier::verify;
//!
//! let d = construct(&BuildRequest::new(12, 3, 0)).unwrap();
//! assert_eq!((d.r(), d.s()), (5, 4));
//! assert!(verify(&d).passed);
//! ```

pub mod admissibility;
pub mod assembler;
pub mod blowup;
pub mod cycle_aurd;
pub mod error;
pub mod filling;
pub mod format;
pub mod model;
pub mod search;
pub mod seeds;
pub mod verifier;

pub use error::{Result, UrdError};
pub use model::{Block, ClassKind, Decomposition, Edge, FactorClass, Params, Vertex};
