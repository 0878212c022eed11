//! Exact-arithmetic construction of chromatic quasisymmetric functions and
//! vertical-strip LLT polynomials, together with brute-force character
//! computations over `UT_n(F_q)` and `GL_n(F_q)` that check the identities
//! relating them.
//!
//! The crate is `no_std` and needs only `alloc`.
//!
//! Module map:
//! - [`exactnum`]: rationals, Laurent polynomials and rational functions in `t`.
//! - [`combinatorics`]: partitions, Dyck and tall Schröder paths, indifference
//!   graphs, Möbius functions, orientations.
//! - [`symfunc`]: symmetric polynomials and the bases `m, e, h, p, s`,
//!   Hall–Littlewood `P` and its modified form.
//! - [`chromallt`]: `X_γ(x;t)`, `G_σ(x;t)` and their expansions.
//! - [`fqoracle`]: finite-field matrices, superclass functions of `UT_n`,
//!   induction to `GL_n`, Hessenberg point counts.
//! - [`bridge`]: the two realization maps into symmetric functions and the
//!   theorem checkers.

#![cfg_attr(not(test), no_std)]
#![allow(clippy::needless_range_loop)]

extern crate alloc;

pub mod bridge;
pub mod chromallt;
pub mod combinatorics;
pub mod error;
pub mod exactnum;
pub mod fqoracle;
pub mod symfunc;

pub use error::{Error, Result};
