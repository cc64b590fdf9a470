//! Multivariate trigonometric splines on rectangular product grids.
//!
//! Two assembly routes are provided. The polynomial-coefficient route
//! substitutes spline cos-/sin-functions into the two-variable interpolating
//! polynomial; it is implemented for two variables. The fundamental route
//! contracts the sample tensor with per-axis cardinal-spline vectors and
//! works in any number of variables; each evaluation point costs O(N₁+…+N_d)
//! basis evaluations rather than a basis call per coefficient pair.

use crate::error::{Result, TrigSplineError};
use crate::fundamental::FundamentalContext;
use crate::grids::GridSpec;
use crate::splinekernel::{BasisContext, SplineParams};
use crate::trigpoly::{CoeffTable2D, SampleGrid};

/// Per-axis grid sizes and smoothness orders, one shared interpolation
/// indicator, one stitching indicator (defaulting to the interpolation one)
/// and the series tail tolerance.
#[derive(Debug, Clone, PartialEq)]
pub struct TensorSplineConfig {
    specs: Vec<GridSpec>,
    stitch_indicator: u8,
    orders: Vec<u32>,
    tail_tolerance: f64,
}

impl TensorSplineConfig {
    pub fn new(
        n_nodes: &[usize],
        indicator: u8,
        orders: &[u32],
        tail_tolerance: f64,
    ) -> Result<Self> {
        if n_nodes.is_empty() {
            return Err(TrigSplineError::EmptyConfig);
        }
        if orders.len() != n_nodes.len() {
            return Err(TrigSplineError::DimensionMismatch {
                expected: n_nodes.len(),
                actual: orders.len(),
            });
        }
        let specs = n_nodes
            .iter()
            .map(|&n| GridSpec::new(n, indicator))
            .collect::<Result<Vec<_>>>()?;
        for &r in orders {
            if r == 0 || r > 10_000 {
                return Err(TrigSplineError::InvalidOrder { order: r });
            }
        }
        if !(tail_tolerance.is_finite() && tail_tolerance > 0.0) {
            return Err(TrigSplineError::InvalidTolerance {
                value: tail_tolerance,
            });
        }
        Ok(Self {
            specs,
            stitch_indicator: indicator,
            orders: orders.to_vec(),
            tail_tolerance,
        })
    }

    /// Overrides the stitching indicator (it defaults to the interpolation one).
    pub fn with_stitch_indicator(mut self, stitch_indicator: u8) -> Result<Self> {
        if stitch_indicator > 1 {
            return Err(TrigSplineError::InvalidIndicator {
                value: stitch_indicator,
            });
        }
        self.stitch_indicator = stitch_indicator;
        Ok(self)
    }

    pub fn ndim(&self) -> usize {
        self.specs.len()
    }

    pub fn spec(&self, axis: usize) -> &GridSpec {
        &self.specs[axis]
    }

    pub fn indicator(&self) -> u8 {
        self.specs[0].indicator()
    }

    pub fn stitch_indicator(&self) -> u8 {
        self.stitch_indicator
    }

    pub fn order(&self, axis: usize) -> u32 {
        self.orders[axis]
    }

    pub fn tail_tolerance(&self) -> f64 {
        self.tail_tolerance
    }

    fn axis_params(&self, axis: usize) -> Result<SplineParams> {
        SplineParams::simple(self.stitch_indicator, self.indicator(), self.orders[axis])?
            .with_tail_tolerance(self.tail_tolerance)
    }

    fn expect_ndim(&self, expected: usize) -> Result<()> {
        if self.ndim() != expected {
            return Err(TrigSplineError::DimensionMismatch {
                expected,
                actual: self.ndim(),
            });
        }
        Ok(())
    }

    fn expect_axis_grid(&self, axis: usize, grid: &GridSpec) -> Result<()> {
        let mine = &self.specs[axis];
        if mine.n_nodes() != grid.n_nodes() {
            return Err(TrigSplineError::NodeCountMismatch {
                expected: mine.n_nodes(),
                actual: grid.n_nodes(),
            });
        }
        if mine.indicator() != grid.indicator() {
            return Err(TrigSplineError::IndicatorMismatch {
                x_indicator: mine.indicator(),
                y_indicator: grid.indicator(),
            });
        }
        Ok(())
    }
}

/// Two-variable spline assembled from 2D polynomial coefficients with the
/// spline cos-/sin-functions substituted for each harmonic; index-0 factors
/// are the constant 1.
pub fn eval_2d_polyform(
    coeffs: &CoeffTable2D,
    config: &TensorSplineConfig,
    x: f64,
    y: f64,
) -> Result<f64> {
    let eval = PolyformSurface::new(coeffs, config)?;
    eval.eval(x, y)
}

/// Two-variable spline as the tensor contraction of samples with per-axis
/// fundamental splines.
pub fn eval_2d_fundform(
    samples: &SampleGrid,
    config: &TensorSplineConfig,
    x: f64,
    y: f64,
) -> Result<f64> {
    samples.expect_ndim(2)?;
    config.expect_ndim(2)?;
    eval_nd_fundform(samples, config, &[x, y])
}

/// N-variable spline: full contraction of the sample tensor with one
/// cardinal-spline vector per axis.
pub fn eval_nd_fundform(
    samples: &SampleGrid,
    config: &TensorSplineConfig,
    point: &[f64],
) -> Result<f64> {
    let surface = FundformSurface::new(samples, config)?;
    surface.eval(point)
}

/// Reusable polynomial-route evaluator for many points on the same surface.
pub struct PolyformSurface<'a> {
    coeffs: &'a CoeffTable2D,
    ctx_x: BasisContext,
    ctx_y: BasisContext,
}

impl<'a> PolyformSurface<'a> {
    pub fn new(coeffs: &'a CoeffTable2D, config: &TensorSplineConfig) -> Result<Self> {
        config.expect_ndim(2)?;
        config.expect_axis_grid(0, coeffs.grid_x())?;
        config.expect_axis_grid(1, coeffs.grid_y())?;
        let ctx_x = BasisContext::new(&config.axis_params(0)?, coeffs.grid_x().n_nodes())?;
        let ctx_y = BasisContext::new(&config.axis_params(1)?, coeffs.grid_y().n_nodes())?;
        Ok(Self {
            coeffs,
            ctx_x,
            ctx_y,
        })
    }

    pub fn eval(&self, x: f64, y: f64) -> Result<f64> {
        if !(x.is_finite() && y.is_finite()) {
            return Err(TrigSplineError::NonFinitePoint);
        }
        let (cx, sx) = self.ctx_x.basis_row(x);
        let (cy, sy) = self.ctx_y.basis_row(y);
        Ok(self.contract(&cx, &sx, &cy, &sy))
    }

    fn contract(&self, cx: &[f64], sx: &[f64], cy: &[f64], sy: &[f64]) -> f64 {
        let mut acc = 0.0;
        for k in 0..cx.len() {
            for l in 0..cy.len() {
                acc += self.coeffs.a(k, l) * cx[k] * cy[l]
                    + self.coeffs.b(k, l) * cx[k] * sy[l]
                    + self.coeffs.c(k, l) * sx[k] * cy[l]
                    + self.coeffs.d(k, l) * sx[k] * sy[l];
            }
        }
        acc
    }

    /// Row-major values over the Cartesian product of the two coordinate
    /// lists (x outermost).
    pub fn eval_lattice(&self, xs: &[f64], ys: &[f64]) -> Result<Vec<f64>> {
        let rows_x: Vec<_> = xs.iter().map(|&x| self.ctx_x.basis_row(x)).collect();
        let rows_y: Vec<_> = ys.iter().map(|&y| self.ctx_y.basis_row(y)).collect();
        let mut out = Vec::with_capacity(xs.len() * ys.len());
        for (cx, sx) in &rows_x {
            for (cy, sy) in &rows_y {
                out.push(self.contract(cx, sx, cy, sy));
            }
        }
        Ok(out)
    }
}

/// Reusable fundamental-route evaluator for many points on the same surface.
pub struct FundformSurface<'a> {
    samples: &'a SampleGrid,
    contexts: Vec<FundamentalContext>,
}

impl<'a> FundformSurface<'a> {
    pub fn new(samples: &'a SampleGrid, config: &TensorSplineConfig) -> Result<Self> {
        if samples.ndim() != config.ndim() {
            return Err(TrigSplineError::DimensionMismatch {
                expected: samples.ndim(),
                actual: config.ndim(),
            });
        }
        let contexts = (0..config.ndim())
            .map(|axis| {
                config.expect_axis_grid(axis, samples.spec(axis))?;
                FundamentalContext::new(&config.axis_params(axis)?, samples.spec(axis).n_nodes())
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { samples, contexts })
    }

    pub fn eval(&self, point: &[f64]) -> Result<f64> {
        if point.len() != self.contexts.len() {
            return Err(TrigSplineError::DimensionMismatch {
                expected: self.contexts.len(),
                actual: point.len(),
            });
        }
        if point.iter().any(|v| !v.is_finite()) {
            return Err(TrigSplineError::NonFinitePoint);
        }
        let ts: Vec<Vec<f64>> = self
            .contexts
            .iter()
            .zip(point)
            .map(|(ctx, &coord)| ctx.ts_all(coord))
            .collect();
        let mut cur = self.samples.values().to_vec();
        for weights in ts.iter().rev() {
            cur = contract_last_axis(&cur, weights);
        }
        debug_assert_eq!(cur.len(), 1);
        Ok(cur[0])
    }

    /// Row-major values over the Cartesian product of per-axis coordinate
    /// lists (first axis outermost).
    pub fn eval_lattice(&self, axes: &[Vec<f64>]) -> Result<Vec<f64>> {
        if axes.len() != self.contexts.len() {
            return Err(TrigSplineError::DimensionMismatch {
                expected: self.contexts.len(),
                actual: axes.len(),
            });
        }
        let shape = self.samples.shape();
        let mut cur = self.samples.values().to_vec();
        let mut lead = 1usize;
        for (axis, coords) in axes.iter().enumerate() {
            if coords.iter().any(|v| !v.is_finite()) {
                return Err(TrigSplineError::NonFinitePoint);
            }
            let n_axis = shape[axis];
            let trail: usize = shape[axis + 1..].iter().product();
            let r_axis = coords.len();
            // ts matrix r_axis × n_axis for this axis
            let ts: Vec<Vec<f64>> = coords
                .iter()
                .map(|&c| self.contexts[axis].ts_all(c))
                .collect();
            let mut next = vec![0.0; lead * r_axis * trail];
            for b in 0..lead {
                for (i, row) in ts.iter().enumerate() {
                    let dst_base = (b * r_axis + i) * trail;
                    for (k, &w) in row.iter().enumerate() {
                        let src_base = (b * n_axis + k) * trail;
                        for t in 0..trail {
                            next[dst_base + t] += w * cur[src_base + t];
                        }
                    }
                }
            }
            cur = next;
            lead *= r_axis;
        }
        Ok(cur)
    }
}

/// Contracts the last axis of a row-major tensor with a weight vector.
fn contract_last_axis(values: &[f64], weights: &[f64]) -> Vec<f64> {
    values
        .chunks(weights.len())
        .map(|chunk| chunk.iter().zip(weights).map(|(v, w)| v * w).sum())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fundamental::eval_spline_fund_1d;
    use crate::trigpoly::coeffs_2d;
    use std::f64::consts::TAU;

    fn delta_2d(i: u8) -> SampleGrid {
        let gx = GridSpec::new(7, i).unwrap();
        let gy = GridSpec::new(9, i).unwrap();
        let mut values = vec![0.0; 63];
        values[(4 - 1) * 9 + (5 - 1)] = 1.0;
        SampleGrid::from_2d(gx, gy, values).unwrap()
    }

    fn config_rr(r: u32, i: u8) -> TensorSplineConfig {
        TensorSplineConfig::new(&[7, 9], i, &[r, r], 1e-10).unwrap()
    }

    #[test]
    fn config_validation() {
        assert!(matches!(
            TensorSplineConfig::new(&[], 0, &[], 1e-10),
            Err(TrigSplineError::EmptyConfig)
        ));
        assert!(TensorSplineConfig::new(&[7], 0, &[1, 2], 1e-10).is_err());
        assert!(TensorSplineConfig::new(&[6], 0, &[1], 1e-10).is_err());
        assert!(TensorSplineConfig::new(&[7], 2, &[1], 1e-10).is_err());
        assert!(TensorSplineConfig::new(&[7], 0, &[0], 1e-10).is_err());
        assert!(TensorSplineConfig::new(&[7], 0, &[1], -1.0).is_err());
        let c = TensorSplineConfig::new(&[7, 9], 1, &[1, 2], 1e-10).unwrap();
        assert_eq!(c.stitch_indicator(), 1);
        let c = c.with_stitch_indicator(0).unwrap();
        assert_eq!(c.stitch_indicator(), 0);
        assert_eq!(c.indicator(), 1);
    }

    #[test]
    fn polyform_constant_is_one() {
        let gx = GridSpec::new(7, 0).unwrap();
        let gy = GridSpec::new(9, 0).unwrap();
        let samples = SampleGrid::from_fn_2d(gx, gy, |_, _| 1.0).unwrap();
        let coeffs = coeffs_2d(&samples).unwrap();
        let config = config_rr(1, 0);
        for (x, y) in [(0.0, 0.0), (1.0, 2.0), (4.4, 5.9)] {
            let v = eval_2d_polyform(&coeffs, &config, x, y).unwrap();
            assert!((v - 1.0).abs() < 1e-9);
        }
    }

    #[test]
    fn polyform_delta_is_cardinal_at_nodes() {
        for r in [1u32, 2] {
            for i in [0u8, 1] {
                let samples = delta_2d(i);
                let coeffs = coeffs_2d(&samples).unwrap();
                let config = config_rr(r, i);
                let surface = PolyformSurface::new(&coeffs, &config).unwrap();
                let xs = samples.spec(0).nodes();
                let ys = samples.spec(1).nodes();
                for (j, &x) in xs.iter().enumerate() {
                    for (k, &y) in ys.iter().enumerate() {
                        let want = if j + 1 == 4 && k + 1 == 5 { 1.0 } else { 0.0 };
                        let got = surface.eval(x, y).unwrap();
                        assert!(
                            (got - want).abs() < 1e-9,
                            "r={r} I={i} node=({},{})",
                            j + 1,
                            k + 1
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn fundform_constant_and_nodes() {
        let gx = GridSpec::new(7, 1).unwrap();
        let gy = GridSpec::new(9, 1).unwrap();
        let f = |x: f64, y: f64| 0.5 + (x - 0.2).cos() * (2.0 * y).sin();
        let samples = SampleGrid::from_fn_2d(gx, gy, f).unwrap();
        let config = config_rr(2, 1);
        let ones = SampleGrid::from_fn_2d(gx, gy, |_, _| 1.0).unwrap();
        for (x, y) in [(0.3, 0.4), (2.0, 5.0)] {
            let v = eval_2d_fundform(&ones, &config, x, y).unwrap();
            assert!((v - 1.0).abs() < 1e-9);
        }
        for (j, &x) in gx.nodes().iter().enumerate() {
            for (k, &y) in gy.nodes().iter().enumerate() {
                let v = eval_2d_fundform(&samples, &config, x, y).unwrap();
                assert!((v - samples.values()[j * 9 + k]).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn separable_samples_factorize() {
        let gx = GridSpec::new(7, 0).unwrap();
        let gy = GridSpec::new(9, 0).unwrap();
        let u = |x: f64| 0.3 + x.cos();
        let v = |y: f64| 1.0 - 0.4 * (2.0 * y).sin();
        let s2 = SampleGrid::from_fn_2d(gx, gy, |x, y| u(x) * v(y)).unwrap();
        let su = SampleGrid::from_fn_1d(gx, u).unwrap();
        let sv = SampleGrid::from_fn_1d(gy, v).unwrap();
        let config = config_rr(2, 0);
        let params = |axis: usize| config.axis_params(axis).unwrap();
        for (x, y) in [(0.9, 1.7), (3.3, 0.2)] {
            let joint = eval_2d_fundform(&s2, &config, x, y).unwrap();
            let fx = eval_spline_fund_1d(&su, &params(0), x).unwrap();
            let fy = eval_spline_fund_1d(&sv, &params(1), y).unwrap();
            assert!((joint - fx * fy).abs() < 1e-10);
        }
    }

    #[test]
    fn polyform_and_fundform_agree() {
        let gx = GridSpec::new(7, 0).unwrap();
        let gy = GridSpec::new(9, 0).unwrap();
        let samples = SampleGrid::from_fn_2d(gx, gy, |x, y| {
            (x + 0.1).sin() + 0.5 * (2.0 * y - 0.3).cos() + 0.25 * (x.cos() * y.sin())
        })
        .unwrap();
        let coeffs = coeffs_2d(&samples).unwrap();
        for r in [1u32, 2] {
            let config = config_rr(r, 0);
            let poly = PolyformSurface::new(&coeffs, &config).unwrap();
            let fund = FundformSurface::new(&samples, &config).unwrap();
            for p in 0..20 {
                for q in 0..20 {
                    let x = TAU * (p as f64 + 0.5) / 20.0;
                    let y = TAU * (q as f64 + 0.25) / 20.0;
                    let a = poly.eval(x, y).unwrap();
                    let b = fund.eval(&[x, y]).unwrap();
                    assert!(
                        (a - b).abs() < 1e-7,
                        "r={r} ({x},{y}) diff={:e}",
                        (a - b).abs()
                    );
                }
            }
        }
    }

    #[test]
    fn axis_symmetry_under_transposition() {
        let gx = GridSpec::new(7, 0).unwrap();
        let gy = GridSpec::new(9, 0).unwrap();
        let f = |x: f64, y: f64| (x - 1.0).cos() + 0.3 * (2.0 * y).sin() - 0.2 * x.sin() * y.cos();
        let samples = SampleGrid::from_fn_2d(gx, gy, f).unwrap();
        let transposed = SampleGrid::from_fn_2d(gy, gx, |y, x| f(x, y)).unwrap();
        let config = TensorSplineConfig::new(&[7, 9], 0, &[1, 2], 1e-10).unwrap();
        let swapped = TensorSplineConfig::new(&[9, 7], 0, &[2, 1], 1e-10).unwrap();
        for (x, y) in [(0.8, 2.1), (5.0, 3.3)] {
            let a = eval_2d_fundform(&samples, &config, x, y).unwrap();
            let b = eval_2d_fundform(&transposed, &swapped, y, x).unwrap();
            assert!((a - b).abs() < 1e-11);
        }
    }

    #[test]
    fn mixed_orders_supported() {
        let samples = delta_2d(0);
        let coeffs = coeffs_2d(&samples).unwrap();
        let config = TensorSplineConfig::new(&[7, 9], 0, &[1, 3], 1e-10).unwrap();
        let poly = PolyformSurface::new(&coeffs, &config).unwrap();
        let fund = FundformSurface::new(&samples, &config).unwrap();
        for (x, y) in [(1.1, 0.6), (4.0, 4.0)] {
            let a = poly.eval(x, y).unwrap();
            let b = fund.eval(&[x, y]).unwrap();
            assert!((a - b).abs() < 1e-7);
        }
    }

    #[test]
    fn nd_reduces_to_lower_dimensional_forms() {
        // d = 1 agrees with the one-variable fundamental evaluation
        let g = GridSpec::new(7, 0).unwrap();
        let s1 = SampleGrid::from_fn_1d(g, |x| x.sin() + 0.2).unwrap();
        let c1 = TensorSplineConfig::new(&[7], 0, &[2], 1e-10).unwrap();
        let params = SplineParams::simple(0, 0, 2).unwrap();
        for x in [0.4, 2.8, 5.2] {
            let a = eval_nd_fundform(&s1, &c1, &[x]).unwrap();
            let b = eval_spline_fund_1d(&s1, &params, x).unwrap();
            assert!((a - b).abs() < 1e-12);
        }
        // d = 2 agrees with the dedicated operation
        let samples = delta_2d(0);
        let c2 = config_rr(1, 0);
        for (x, y) in [(0.5, 0.6), (3.9, 1.2)] {
            let a = eval_nd_fundform(&samples, &c2, &[x, y]).unwrap();
            let b = eval_2d_fundform(&samples, &c2, x, y).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn three_variable_partition_and_cardinality() {
        let g = GridSpec::new(3, 0).unwrap();
        let ones = SampleGrid::from_nd(vec![g; 3], vec![1.0; 27]).unwrap();
        let config = TensorSplineConfig::new(&[3, 3, 3], 0, &[1, 2, 1], 1e-10).unwrap();
        for p in 0..10 {
            let t = TAU * (p as f64 + 0.3) / 10.0;
            let point = [t, TAU - t * 0.5, t * 0.25 + 1.0];
            let v = eval_nd_fundform(&ones, &config, &point).unwrap();
            assert!((v - 1.0).abs() < 1e-9, "point {point:?}");
        }
        // delta at 1-based node (2, 1, 3), row-major flat index
        let node = [2usize, 1, 3];
        let flat = node.iter().fold(0, |acc, &j| acc * 3 + (j - 1));
        let mut values = vec![0.0; 27];
        values[flat] = 1.0;
        let delta = SampleGrid::from_nd(vec![g; 3], values).unwrap();
        let xs = g.nodes();
        for j in 0..3 {
            for k in 0..3 {
                for l in 0..3 {
                    let want = if (j, k, l) == (1, 0, 2) { 1.0 } else { 0.0 };
                    let got = eval_nd_fundform(&delta, &config, &[xs[j], xs[k], xs[l]]).unwrap();
                    assert!((got - want).abs() < 1e-9);
                }
            }
        }
    }

    #[test]
    fn shape_and_grid_mismatches() {
        let samples = delta_2d(0);
        let config = config_rr(1, 0);
        assert!(matches!(
            eval_nd_fundform(&samples, &config, &[0.1]),
            Err(TrigSplineError::DimensionMismatch {
                expected: 2,
                actual: 1
            })
        ));
        let config3 = TensorSplineConfig::new(&[3, 3, 3], 0, &[1, 1, 1], 1e-10).unwrap();
        assert!(eval_nd_fundform(&samples, &config3, &[0.1, 0.2, 0.3]).is_err());
        let wrong_n = TensorSplineConfig::new(&[9, 9], 0, &[1, 1], 1e-10).unwrap();
        assert!(matches!(
            eval_2d_fundform(&samples, &wrong_n, 0.1, 0.2),
            Err(TrigSplineError::NodeCountMismatch { .. })
        ));
        let wrong_i = TensorSplineConfig::new(&[7, 9], 1, &[1, 1], 1e-10).unwrap();
        assert!(matches!(
            eval_2d_fundform(&samples, &wrong_i, 0.1, 0.2),
            Err(TrigSplineError::IndicatorMismatch { .. })
        ));
        assert!(matches!(
            eval_2d_fundform(&samples, &config, f64::NAN, 0.0),
            Err(TrigSplineError::NonFinitePoint)
        ));
    }

    #[test]
    fn restriction_to_grid_line_is_the_one_dimensional_spline() {
        // along y = y_k the surface collapses onto the 1D spline through
        // column k of the samples (cardinality in y)
        let gx = GridSpec::new(7, 0).unwrap();
        let gy = GridSpec::new(9, 0).unwrap();
        let samples = SampleGrid::from_fn_2d(gx, gy, |x, y| {
            (x + 0.2).cos() + 0.4 * (2.0 * y).sin() - 0.1 * x.sin() * y.cos()
        })
        .unwrap();
        let config = TensorSplineConfig::new(&[7, 9], 0, &[2, 2], 1e-10).unwrap();
        let fund = FundformSurface::new(&samples, &config).unwrap();
        let k = 5usize; // 1-based column
        let yk = gy.node(k).unwrap();
        let column: Vec<f64> = (0..7).map(|j| samples.values()[j * 9 + (k - 1)]).collect();
        let line = SampleGrid::from_1d(gx, column).unwrap();
        let params = config.axis_params(0).unwrap();
        for p in 0..25 {
            let x = TAU * (p as f64 + 0.41) / 25.0;
            let a = fund.eval(&[x, yk]).unwrap();
            let b = eval_spline_fund_1d(&line, &params, x).unwrap();
            assert!((a - b).abs() < 1e-9, "x={x}");
        }
    }

    #[test]
    fn per_axis_smoothness_along_lines() {
        // r₁ = 2: first-derivative one-sided quotients along x stay
        // consistent across the x stitching nodes on an off-node line
        let samples = delta_2d(0);
        let config = TensorSplineConfig::new(&[7, 9], 0, &[2, 2], 1e-10).unwrap();
        let fund = FundformSurface::new(&samples, &config).unwrap();
        let y0 = 1.177;
        let h = 1e-4;
        let s = |x: f64| fund.eval(&[x, y0]).unwrap();
        let mut gap = 0.0f64;
        let mut scale = 0.0f64;
        for x in GridSpec::new(7, 0).unwrap().nodes() {
            let right = (s(x + h) - s(x)) / h;
            let left = (s(x) - s(x - h)) / h;
            gap = gap.max((left - right).abs());
            scale = scale.max(left.abs()).max(right.abs());
        }
        assert!(
            gap <= 1e-2 * scale.max(1e-3),
            "gap {gap:.3e} scale {scale:.3e}"
        );
    }

    #[test]
    fn lattice_matches_pointwise_evaluation() {
        let samples = delta_2d(0);
        let coeffs = coeffs_2d(&samples).unwrap();
        let config = config_rr(2, 0);
        let xs: Vec<f64> = (0..6).map(|i| TAU * i as f64 / 6.0).collect();
        let ys: Vec<f64> = (0..5).map(|i| TAU * i as f64 / 5.0).collect();
        let poly = PolyformSurface::new(&coeffs, &config).unwrap();
        let grid_vals = poly.eval_lattice(&xs, &ys).unwrap();
        let fund = FundformSurface::new(&samples, &config).unwrap();
        let fund_vals = fund.eval_lattice(&[xs.clone(), ys.clone()]).unwrap();
        for (i, &x) in xs.iter().enumerate() {
            for (j, &y) in ys.iter().enumerate() {
                let at = i * ys.len() + j;
                assert_eq!(grid_vals[at], poly.eval(x, y).unwrap());
                // the lattice path contracts axes in the opposite order, so
                // agreement is to roundoff, not bit-exact
                assert!((fund_vals[at] - fund.eval(&[x, y]).unwrap()).abs() < 1e-13);
            }
        }
    }
}
