//! Hypergeometric kernels with complex parameters.

mod appell;
mod gamma;
mod gauss;

pub use appell::{
    appell_f1, appell_f1_with, kdf_f5, kdf_f5_integral, kdf_f5_series, kdf_f5_terminating, kdf_f5_terminating_bounded,
    kdf_f5_with, F5Args, F5IntegralConfig, F5Method,
};
pub use gamma::{as_nonpositive_integer, gamma, ln_gamma, ln_gamma_real, pochhammer, rgamma};
pub use gauss::{gauss_2f1, gauss_2f1_series, gauss_2f1_with, hyp3f2_terminating_unit, SeriesConfig};
