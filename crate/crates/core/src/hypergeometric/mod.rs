//! Weighted truncated hypergeometric sums, scalar and deformed, plus the
//! Gamma-ratio reduction and evaluation identities built on them.

mod gamma;
pub mod identity;
mod sum;

pub use gamma::{gamma_ratio_value, GammaRatioExpr};
pub use identity::{check_identity, identity_sides, randomized_check, Identity, IdentityId, IdentityParams};
pub use sum::{eval_hyp_sum, eval_hyp_sum_series, termination_index, AffineParam, HypSum, Weight};
