pub mod bijection;
pub mod document;
pub mod error;
pub mod paths;
pub mod promotion;
pub mod rigged;
pub mod verify;
pub mod young;

pub use error::{Error, Result, Undefined};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/intro.md")]
    mod intro {}
    #[doc = include_str!("../../../book/src/tableaux.md")]
    mod tableaux {}
    #[doc = include_str!("../../../book/src/paths.md")]
    mod paths {}
    #[doc = include_str!("../../../book/src/rigged.md")]
    mod rigged {}
    #[doc = include_str!("../../../book/src/bijection.md")]
    mod bijection {}
    #[doc = include_str!("../../../book/src/promotion.md")]
    mod promotion {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
