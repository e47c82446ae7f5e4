//! Functions of differential operators evaluated through their Fourier
//! representation, with truncated-matrix and formal-series oracles.

pub mod disentangle;
pub mod formal;
pub mod heat;
pub mod laguerre;
pub mod operator;
pub mod pauli;
pub mod quadrature;
pub mod shift;
pub mod symbol;
pub mod tricomi;
pub mod umbral;

pub use disentangle::{cubic_disentangle_check, o_on_monomial, o_on_monomial_oracle, weyl_check, CubicConstants};
pub use formal::{FormalExpansion, FormalGenerator, FormalResidual};
pub use heat::{heat_evolve_ft, GridFunction};
pub use laguerre::{
    borel_transform, commutator_check_ld, commutator_residual_ld, exp_laguerre_derivative,
    exp_laguerre_derivative_matrix, integro_diff_evolve, integro_diff_matrix_oracle, laguerre_derivative,
    InitialCondition,
};
pub use operator::TruncatedOperator;
pub use pauli::{matrix_function_pauli, pauli_spectral, PauliFunction};
pub use quadrature::{gauss_weighted_integral, gauss_weighted_integral_with, QuadratureRule, WeightedIntegral};
pub use shift::{gabor_like_transform, gabor_oracle, monomial_from_hermite, phi_shift_transform};
pub use symbol::{SpectralSymbol, Spectrum};
pub use tricomi::{exp_neg_derivative, neg_derivative_pow, tricomi_evolution, tricomi_evolution_series};
pub use umbral::{umbral_double_sum, umbral_operator_transform};
