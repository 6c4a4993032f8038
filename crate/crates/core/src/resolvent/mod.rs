//! Matrix resolvents: the closed-form GUE series and the general recursion.

pub mod general;
pub mod gue;
pub mod hypergeometric;
pub mod omega;

pub use general::{
    build_general_resolvent, check_resolvent_equation, hamiltonian_density, lax_matrix, required_window, CoefficientTable,
    LatticeData, RationalScale,
};
pub use gue::{build_gue_resolvent, check_gamma_recursion, gue_resolvent_at, ResolventEntries};
pub use hypergeometric::{hyp2f1_terminating, hyp_a, hyp_a_at, hyp_b, hyp_b_at};
pub use omega::{compute_omega, two_point_quotient, OmegaTable};
