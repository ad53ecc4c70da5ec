//! Exact calculator for functor homology and stable homology of general linear
//! groups in prime characteristic.
//!
//! Module-level Tor, Ext and Hochschild homology over finite-dimensional
//! algebras are computed by exact linear algebra over `GF(p)` ([`fdalg`]).
//! [`functor_calc`] then turns those dimension tables into functor-category
//! answers: tensoring with `T_*` or `E*`, Künneth products, Koszul-signed
//! symmetric-group coinvariants and graded Schur functors.

pub mod fdalg;
pub mod functor_calc;
pub mod gf_linalg;
pub mod graded;
pub mod symgrp;
pub mod verify;

pub use gf_linalg::{Matrix, PrimeField};
pub use graded::GradedSpace;
