//! Exact membership, root classification and Monte-Carlo volume estimation.

pub mod classify;
pub mod integer;
pub mod oracle;
pub mod poly;
pub mod sampler;
pub mod schur_cohn;
pub mod sturm;

pub use classify::{classify, RootClassification};
pub use integer::{classify_integer, clear_denominators};
pub use oracle::exact_oracle_d2;
pub use poly::{MonicPolynomial, Poly};
pub use sampler::{coefficient_box, estimate_volumes, exact_reference, CoefficientBox, SamplerConfig, VolumeEstimate};
pub use schur_cohn::schur_cohn_stable;
