//! Exact rational machinery for log pairs on rational surfaces: Picard
//! lattices of blown-up Hirzebruch surfaces and the plane, the twisted
//! classes `L - sum (1 - beta_i) D_i`, their Nakai–Moishezon inequalities,
//! strict feasibility with certificates, and tail blow-up sequences.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod constraints;
pub mod feasibility;
pub mod forms;
pub mod lattice;
pub mod logpair;
pub mod rational;
pub mod tailblowup;
