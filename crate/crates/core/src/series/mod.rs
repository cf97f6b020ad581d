//! Exact truncated power series over the rationals and the class's
//! generating functions.

mod gf;
mod poly;
mod power;
mod quadratic;

pub use gf::{
    binomial, catalan_gf, d_series, gf_f, gf_g, gf_g_assembled, gf_g_explicit, interlacing_choices, is_one,
    simple_gf_closed, simple_gf_summation, y_series, z_series, G_NUMERATOR,
};
pub use poly::{count_roots, least_positive_root, root_bound, Polynomial};
pub use power::PowerSeries;
pub use quadratic::{
    growth_rate_checks, growth_rate_checks_with, perturbed_p0, quadratic_residual, root_tolerance, GrowthReport,
    Quadratic, P0, P1, P2, RATIO_MIN_ORDER, RATIO_WINDOW,
};

/// Default truncation order.
pub const DEFAULT_ORDER: usize = 30;
