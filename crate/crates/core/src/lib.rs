//! Exact computer algebra for codimension-one holomorphic distributions on
//! projective 3-space: a Gröbner/syzygy kernel over Q[x,y,z,w], a projective
//! scheme layer, twisted differential forms, the distribution analyzer, the
//! degree-1 foliation classifier, spectrum enumeration for rank-2 reflexive
//! sheaves, and syzygy-driven construction of 1-forms.

pub mod error;
pub mod exec;
pub mod linalg;
pub mod monomial;
pub mod corpus;
pub mod parse;
pub mod report;
pub mod poly;
pub mod rat;
pub mod rng;

pub mod groebner;
pub mod differential;
pub mod distribution;
pub mod foliation1d;
pub mod scheme;
pub mod spectra;
pub mod syzygy_forms;

pub use error::{Error, Result};
pub use groebner::{multivariate_gcd, Ideal};
pub use monomial::{Monomial, TermOrder};
pub use poly::Poly;
pub use rat::Rat;
