//! Exact computations for the real K-theory of higher-rank graphs with an
//! involution: Koszul complexes of CR-modules, their E²-pages and the data
//! needed to reconstruct `KO_*` from them.
#![no_std]

extern crate alloc;

pub mod crmod;
pub mod exactalg;
pub mod kgraph;
pub mod koszul;
pub mod spectral;
