//! Exact pipelines over arbitrary-precision rationals.

pub mod asymptotics;
pub mod combinatorics;
pub mod identities;
pub mod legendre;
pub mod probability;
pub mod ratio;
pub mod rational;
pub mod series;
pub mod volumes;

pub use asymptotics::{asymptotic_residual, asymptotic_table, AsymptoticRow, HighPrecision};
pub use combinatorics::{binomial, choose, falling_factorial, FactorialTable};
pub use identities::{
    binomial_convolution, inner_sum_one, inner_sum_two, pfaff_sum, rho_identity, run_identity_suite, sm_sum,
    IdentityOutcome, IdentityRanges,
};
pub use legendre::{associated_legendre_rho, legendre, legendre_via, LegendrePath};
pub use probability::{probability_records, RatioRecord};
pub use ratio::{ratio_closed_form, ratio_recurrence_seq, ratio_sum_form};
pub use series::{ratio_gf_coefficients, ratio_gf_series, PowerSeries};
pub use volumes::{
    aomoto_b, fam_volume, inner_double_integral, inner_double_integral_expanded, selberg_special, v0_exact,
    v1_exact_via_integral,
};
