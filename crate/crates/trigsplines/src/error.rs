//! Error type shared by all modules of the crate.

use thiserror::Error;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, TrigSplineError>;

#[derive(Error, Debug, Clone, PartialEq)]
pub enum TrigSplineError {
    #[error("node count {n_nodes} is even; the interpolation formulas require an odd N = 2n+1")]
    EvenNodeCount { n_nodes: usize },

    #[error("node count {n_nodes} is too small; need N >= 3")]
    NodeCountTooSmall { n_nodes: usize },

    #[error("grid indicator must be 0 or 1, got {value}")]
    InvalidIndicator { value: u8 },

    #[error("node index {index} out of range 1..={n_nodes}")]
    NodeIndexOutOfRange { index: usize, n_nodes: usize },

    #[error("harmonic index {harmonic} out of range 1..={max_harmonic} for N = {n_nodes}")]
    HarmonicOutOfRange {
        harmonic: usize,
        max_harmonic: usize,
        n_nodes: usize,
    },

    #[error("convergence factor is not defined for harmonic 0")]
    ZeroHarmonic,

    #[error("smoothness order must satisfy 1 <= r <= 10000, got {order}")]
    InvalidOrder { order: u32 },

    #[error("tail tolerance must be a finite positive number, got {value}")]
    InvalidTolerance { value: f64 },

    #[error("parameter vector component {name} is not finite")]
    NonFiniteParameter { name: &'static str },

    #[error("sample value at node {index:?} (1-based) is not finite")]
    NonFiniteSample { index: Vec<usize> },

    #[error("sample count {actual} does not match grid shape {shape:?} (expected {expected})")]
    SampleCountMismatch {
        expected: usize,
        actual: usize,
        shape: Vec<usize>,
    },

    #[error("grid indicators differ between axes: x axis has I = {x_indicator}, y axis has I = {y_indicator}; interpolation requires equal indicators")]
    IndicatorMismatch { x_indicator: u8, y_indicator: u8 },

    #[error("node count mismatch: expected N = {expected}, got N = {actual}")]
    NodeCountMismatch { expected: usize, actual: usize },

    #[error("input data lives on the grid with I = {grid_indicator}, but the spline parameters interpolate on I = {params_indicator}")]
    InterpIndicatorMismatch {
        grid_indicator: u8,
        params_indicator: u8,
    },

    #[error("tensor spline configuration needs at least one axis")]
    EmptyConfig,

    #[error("dimension mismatch: expected {expected} axes, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("interpolation {kind}-factor for harmonic {harmonic} (N = {n_nodes}) has magnitude {magnitude:e} below the guard {threshold:e}; the spline basis is ill-defined for these parameter vectors")]
    NearZeroFactor {
        kind: &'static str,
        harmonic: usize,
        n_nodes: usize,
        magnitude: f64,
        threshold: f64,
    },

    #[error("fundamental splines are defined for simple splines only (both parameter vectors equal (1, 1, 1))")]
    NotSimpleSpline,

    #[error("closed-form summation supports smoothness orders up to {max}, got {order}; use direct summation instead")]
    OrderTooLargeForClosedForm { order: u32, max: u32 },

    #[error("evaluation point is not finite")]
    NonFinitePoint,
}
