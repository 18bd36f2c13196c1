//! Exact-arithmetic computational group theory at desk scale.
//!
//! The crate covers the classical toolchain for finite groups of order up to
//! a few thousand: permutation groups with stabilizer chains, matrix groups
//! over cyclotomic fields, finitely presented groups with Todd-Coxeter coset
//! enumeration, polycyclic presentations with collection, second cohomology
//! via relation tails, ordinary character tables (Dixon-Schneider), and
//! modular representations (MeatAxe chopping and the extension/induction walk
//! over finite splitting fields).
//!
//! All arithmetic is exact: arbitrary-precision rationals, cyclotomic field
//! elements reduced modulo cyclotomic polynomials, and finite fields with
//! deterministic defining polynomials. There are no floating point numbers
//! anywhere in the crate.
//!
//! The crate is `no_std` (with `alloc`); IO, file formats and the command
//! line front end live in the companion `gt-cli` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod algebra;
pub mod chartab;
pub mod cohomology;
pub mod error;
pub mod fpgrp;
pub mod gset;
pub mod limits;
pub mod matgrp;
pub mod modrep;
pub mod pcgrp;
pub mod perm;

pub use error::{Error, Result};
