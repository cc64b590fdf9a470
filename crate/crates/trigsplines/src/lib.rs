//! Periodic trigonometric interpolation splines on uniform grids over `[0, 2π)`.
//!
//! A trigonometric spline of order `r` interpolates samples on a uniform grid
//! and lies in `C^{r-1}`; it is built as a rapidly converging trigonometric
//! series whose convergence is forced by the factors `ν_k(r) = k^{-(1+r)}`.
//! Two constructions are implemented and verified against each other:
//!
//! * substitute spline cos-/sin-functions for the harmonics of the
//!   interpolating trigonometric polynomial ([`splinekernel`], and
//!   [`tensor::eval_2d_polyform`] for surfaces);
//! * combine fundamental (cardinal) splines weighted by the samples
//!   ([`fundamental`], and [`tensor::eval_nd_fundform`] for any number of
//!   variables).
//!
//! ```
//! use trigsplines::{coeffs_1d, eval_spline_1d, GridSpec, SampleGrid, SplineParams};
//!
//! let grid = GridSpec::new(7, 0)?;
//! let samples = SampleGrid::from_fn_1d(grid, f64::cos)?;
//! let coeffs = coeffs_1d(&samples)?;
//! let params = SplineParams::simple(0, 0, 2)?;
//! let value = eval_spline_1d(&coeffs, &params, 1.0)?;
//! assert!((value - 1.0f64.cos()).abs() < 1e-2);
//! # Ok::<(), trigsplines::TrigSplineError>(())
//! ```
//!
//! All evaluation paths are pure functions over immutable inputs and safe to
//! call from many threads.

pub mod error;
pub mod fundamental;
pub mod grids;
pub mod splinekernel;
pub mod tensor;
pub mod trigpoly;

mod polylog;
mod series;

pub use error::{Result, TrigSplineError};
pub use fundamental::{eval_spline_fund_1d, fundamental_spline};
pub use grids::GridSpec;
pub use series::Summation;
pub use splinekernel::{
    convergence_factor, cos_series, eval_spline_1d, interp_factor_cos, interp_factor_sin,
    sin_series, spline_cos, spline_sin, SplineParams, DEFAULT_TAIL_TOLERANCE,
};
pub use tensor::{
    eval_2d_fundform, eval_2d_polyform, eval_nd_fundform, FundformSurface, PolyformSurface,
    TensorSplineConfig,
};
pub use trigpoly::{
    coeffs_1d, coeffs_2d, eval_poly_1d, eval_poly_2d, CoeffTable1D, CoeffTable2D, SampleGrid,
};
