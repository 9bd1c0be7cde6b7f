pub mod cli;
pub mod combination;
pub mod coxeter;
pub mod error;
pub mod hecke;
pub mod identities;
pub mod jones;
pub mod laurent;
mod memo;
pub mod report;
pub mod star;
pub mod tl;

pub use coxeter::{Coxeter, CoxeterGraph, GroupElement, Side};
pub use error::{Error, Result};
pub use laurent::{DeltaPoly, LaurentPoly};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/coxeter.md")]
    mod coxeter {}
    #[doc = include_str!("../../../book/src/star.md")]
    mod star {}
    #[doc = include_str!("../../../book/src/temperley-lieb.md")]
    mod temperley_lieb {}
    #[doc = include_str!("../../../book/src/hecke.md")]
    mod hecke {}
    #[doc = include_str!("../../../book/src/traces.md")]
    mod traces {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
