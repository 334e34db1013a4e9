pub mod error;
pub mod io;
pub mod mubasis;
pub mod poly;
pub mod polymat;
pub mod resultants;
pub mod ring;
pub mod singularity;
pub mod verify;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub mod introduction {}
    #[doc = include_str!("../../../book/src/curves.md")]
    pub mod chapter1 {}
    #[doc = include_str!("../../../book/src/mubasis.md")]
    pub mod chapter2 {}
    #[doc = include_str!("../../../book/src/resultants.md")]
    pub mod chapter3 {}
    #[doc = include_str!("../../../book/src/smith.md")]
    pub mod chapter4 {}
    #[doc = include_str!("../../../book/src/singularities.md")]
    pub mod chapter5 {}
    #[doc = include_str!("../../../book/src/verification.md")]
    pub mod chapter6 {}
}
