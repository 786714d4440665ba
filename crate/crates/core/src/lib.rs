//! Equivariant-style homology of A∞-modules over F2.
//!
//! The crate builds unreduced bar and cobar complexes of finitely presented
//! A∞-algebras and modules, and from them the Borel, co-Borel, twisted Borel
//! and Tate complexes, all truncated to finite size with a certified range of
//! degrees in which the reported homology agrees with the infinite complex.
//!
//! * [`f2`]: sparse F2 matrices, chain complexes, cones, exactness checks.
//! * [`ainfty`]: algebras, modules, coalgebras, comodules, bimodules, their
//!   relation checkers and dualization.
//! * [`bar`]: bar/cobar complexes, Borel and co-Borel complexes.
//! * [`tate`]: dualizing bimodule, twisted Borel complex, norm map, Tate complex.
//! * [`trees`]: rooted ribbon trees and the stratification of the associahedron.
//! * [`presentation`]: the JSON presentation format.

pub mod ainfty;
pub mod bar;
pub mod f2;
pub mod fsum;
pub mod library;
pub mod presentation;
pub mod tate;
pub mod trees;

pub use fsum::F2Sum;
