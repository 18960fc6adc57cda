//! Exact computation in finite Coxeter groups: root systems over the
//! rationals and the golden field, Weyl-group element calculus, conjugacy
//! classes of involutions, the action of multiplication by the longest
//! element on those classes, diagram folding, and verification of the
//! classification tables against independent brute-force and orbit oracles.
//!
//! The guide in `book/` walks through the concepts chapter by chapter; its
//! code blocks are compiled and run as doc-tests below, so the narrative
//! cannot drift from the library.
//!
//! ```
//! use weylinv::involutions::{classify, w0_pairing};
//! use weylinv::rootsys::RootSystem;
//! use weylinv::weyl::{Budgets, Mode, SubgroupSpec};
//!
//! let h3 = RootSystem::build("H3".parse()?)?;
//! let classes = classify(&h3, &SubgroupSpec::Full, Mode::Auto, &Budgets::default())?;
//! let pairing = w0_pairing(&h3, &classes)?;
//!
//! // Reflections pair with the two-reflection class; id pairs with -1.
//! let refl = classes.class_of_subset("{1}".parse()?).unwrap();
//! let pair = classes.class_of_subset("{1,3}".parse()?).unwrap();
//! assert_eq!(pairing[refl], pair);
//! # Ok::<(), weylinv::Error>(())
//! ```

pub mod algebra;
pub mod cli;
pub mod error;
pub mod folding;
pub mod golden;
pub mod involutions;
pub mod rootsys;
pub mod weyl;

pub use error::{Error, Result};

// The book's code blocks run under `cargo test --doc`.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/roots.md")]
    mod roots {}
    #[doc = include_str!("../../../book/src/weyl.md")]
    mod weyl {}
    #[doc = include_str!("../../../book/src/involutions.md")]
    mod involutions {}
    #[doc = include_str!("../../../book/src/classification.md")]
    mod classification {}
    #[doc = include_str!("../../../book/src/folding.md")]
    mod folding {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
}
