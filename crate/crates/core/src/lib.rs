//! Exact computation of centralizer- and derivation-type maps of
//! finite-dimensional unital associative algebras.

pub mod algebra;
pub mod catalog;
pub mod centers;
pub mod linalg;
pub mod maps;
pub mod io;
pub mod verify;

/// The guide's chapters, compiled as doc-tests so their examples stay current.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/linear-algebra.md")]
    mod linear_algebra {}
    #[doc = include_str!("../../../book/src/algebras.md")]
    mod algebras {}
    #[doc = include_str!("../../../book/src/centers.md")]
    mod centers {}
    #[doc = include_str!("../../../book/src/map-spaces.md")]
    mod map_spaces {}
    #[doc = include_str!("../../../book/src/decomposition.md")]
    mod decomposition {}
    #[doc = include_str!("../../../book/src/catalog.md")]
    mod catalog {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
