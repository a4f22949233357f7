pub mod double;
pub mod error;
pub mod examples;
pub mod hopf;
pub mod linalg;
pub mod repthy;
pub mod scalars;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/scalars.md")]
    mod scalars {}
    #[doc = include_str!("../../../book/src/hopf-algebras.md")]
    mod hopf_algebras {}
    #[doc = include_str!("../../../book/src/representations.md")]
    mod representations {}
    #[doc = include_str!("../../../book/src/doubles.md")]
    mod doubles {}
    #[doc = include_str!("../../../book/src/centralizers.md")]
    mod centralizers {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
    #[doc = include_str!("../../../README.md")]
    mod readme {}
}
