//! The λ-umbral calculus: pseudo-bases of `C[[x]]` and `C[[t]]`, the
//! λ-pairing and the classical pairing, the action of `U_λ C` on series,
//! the coproduct, and associated sequences of delta series.
//!
//! The reference λ-binomial basis is always `q_n = e_λ(x)^n`, and the
//! reference λ-divided-power basis on the `t` side is
//! `τ_n(t) = t (t - λ) ⋯ (t - (n-1)λ) / n!`, which is identified with
//! `u_n ∈ U_λ C`. At finite truncation a pseudo-basis spans the whole
//! truncated space, so the span `C⟨q⟩` and `C[[x]]` coincide here.

mod action;
mod associated;
mod basis;
mod pairing;

pub use action::{act, act_on_x, act_on_x_with, coproduct_matrix, shift_bivariate, slice_bases, u_action};
pub use associated::{associated_sequence, dual_functionals};
pub use basis::{e_lambda, e_lambda_basis, tau_basis, tau_t_basis, PseudoBasis};
pub use pairing::{functional_from_t, pair_classical, pair_lambda, t_series_from_functional};

/// Elements of `U_λ C` acting as functionals through the λ-pairing.
pub type Functional = crate::baxter::BaxterElement;
