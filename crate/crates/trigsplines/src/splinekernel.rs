//! Spline cos-/sin-functions and one-variable trigonometric splines.
//!
//! The spline replaces each harmonic `cos kt`, `sin kt` of the interpolating
//! polynomial by a smoothed basis function: a rapidly converging series over
//! the aliased harmonics `mN ± k`, damped by the convergence factors
//! `ν_k(r) = k^{-(1+r)}` and normalized by the interpolation factors so the
//! result still matches `cos k x_j` / `sin k x_j` at the interpolation nodes.
//! The stitching indicator `I₁` controls the sign alternation of the aliased
//! terms (it places the knots), the interpolation indicator `I₂` picks the
//! grid that is interpolated.

use std::f64::consts::PI;

use crate::error::{Result, TrigSplineError};
use crate::grids::{reduce_angle, validate_node_count};
use crate::polylog::PointSums;
use crate::series::{nu, resolve_engine, Engine, Summation};
use crate::trigpoly::CoeffTable1D;

/// Default series-truncation tolerance.
pub const DEFAULT_TAIL_TOLERANCE: f64 = 1e-10;

/// Magnitudes of the interpolation factors below `10·ε` are treated as
/// errors rather than divided by.
const FACTOR_GUARD_MULTIPLE: f64 = 10.0;

const GAMMA_NAMES: [&str; 3] = ["gamma_1", "gamma_2", "gamma_3"];
const ETA_NAMES: [&str; 3] = ["eta_1", "eta_2", "eta_3"];

/// Parameters of a trigonometric spline: stitching and interpolation
/// indicators, smoothness order `r`, parameter vectors `Γ` and `H`, and the
/// series tail tolerance.
///
/// Simple splines use `Γ = H = (1, 1, 1)`. With `Γ = H = (1, 0, 0)` the
/// aliased tails vanish and the spline degenerates to the interpolating
/// polynomial.
#[derive(Debug, Clone, PartialEq)]
pub struct SplineParams {
    stitch_indicator: u8,
    interp_indicator: u8,
    order: u32,
    gamma: [f64; 3],
    eta: [f64; 3],
    tail_tolerance: f64,
    summation: Summation,
}

impl SplineParams {
    pub fn new(
        stitch_indicator: u8,
        interp_indicator: u8,
        order: u32,
        gamma: [f64; 3],
        eta: [f64; 3],
        tail_tolerance: f64,
    ) -> Result<Self> {
        if stitch_indicator > 1 {
            return Err(TrigSplineError::InvalidIndicator {
                value: stitch_indicator,
            });
        }
        if interp_indicator > 1 {
            return Err(TrigSplineError::InvalidIndicator {
                value: interp_indicator,
            });
        }
        if order == 0 || order > 10_000 {
            return Err(TrigSplineError::InvalidOrder { order });
        }
        if !(tail_tolerance.is_finite() && tail_tolerance > 0.0) {
            return Err(TrigSplineError::InvalidTolerance {
                value: tail_tolerance,
            });
        }
        for (i, v) in gamma.iter().enumerate() {
            if !v.is_finite() {
                return Err(TrigSplineError::NonFiniteParameter {
                    name: GAMMA_NAMES[i],
                });
            }
        }
        for (i, v) in eta.iter().enumerate() {
            if !v.is_finite() {
                return Err(TrigSplineError::NonFiniteParameter { name: ETA_NAMES[i] });
            }
        }
        Ok(Self {
            stitch_indicator,
            interp_indicator,
            order,
            gamma,
            eta,
            tail_tolerance,
            summation: Summation::default(),
        })
    }

    /// Simple spline `Γ = H = (1, 1, 1)` with the default tail tolerance.
    pub fn simple(stitch_indicator: u8, interp_indicator: u8, order: u32) -> Result<Self> {
        Self::new(
            stitch_indicator,
            interp_indicator,
            order,
            [1.0, 1.0, 1.0],
            [1.0, 1.0, 1.0],
            DEFAULT_TAIL_TOLERANCE,
        )
    }

    pub fn with_tail_tolerance(mut self, tail_tolerance: f64) -> Result<Self> {
        if !(tail_tolerance.is_finite() && tail_tolerance > 0.0) {
            return Err(TrigSplineError::InvalidTolerance {
                value: tail_tolerance,
            });
        }
        self.tail_tolerance = tail_tolerance;
        Ok(self)
    }

    /// Overrides how the factor series are summed (testing and tuning knob).
    pub fn with_summation(mut self, summation: Summation) -> Self {
        self.summation = summation;
        self
    }

    pub fn stitch_indicator(&self) -> u8 {
        self.stitch_indicator
    }

    pub fn interp_indicator(&self) -> u8 {
        self.interp_indicator
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn gamma(&self) -> [f64; 3] {
        self.gamma
    }

    pub fn eta(&self) -> [f64; 3] {
        self.eta
    }

    pub fn tail_tolerance(&self) -> f64 {
        self.tail_tolerance
    }

    pub fn summation(&self) -> Summation {
        self.summation
    }

    pub fn is_simple(&self) -> bool {
        self.gamma == [1.0, 1.0, 1.0] && self.eta == [1.0, 1.0, 1.0]
    }

    /// Largest tail coefficient; bounds every aliased series term.
    pub(crate) fn gamma_max(&self) -> f64 {
        self.gamma[1]
            .abs()
            .max(self.gamma[2].abs())
            .max(self.eta[1].abs())
            .max(self.eta[2].abs())
    }

    /// Sign alternation of the numerator series: `(−1)^{m I₁}`.
    fn numerator_alternates(&self) -> bool {
        self.stitch_indicator == 1
    }

    /// Sign alternation of the interpolation factors: `(−1)^{m(I₁−I₂)}`,
    /// which for indicators in {0, 1} depends only on whether they differ.
    fn factor_alternates(&self) -> bool {
        self.stitch_indicator != self.interp_indicator
    }

    pub(crate) fn engine(&self, n_nodes: usize) -> Result<Engine> {
        resolve_engine(
            self.summation,
            n_nodes,
            self.order,
            self.gamma_max(),
            self.tail_tolerance,
        )
    }
}

fn validate_harmonic(k: usize, n_nodes: usize) -> Result<()> {
    validate_node_count(n_nodes)?;
    let max_harmonic = (n_nodes - 1) / 2;
    if k == 0 || k > max_harmonic {
        return Err(TrigSplineError::HarmonicOutOfRange {
            harmonic: k,
            max_harmonic,
            n_nodes,
        });
    }
    Ok(())
}

/// Convergence factor `ν_k(r) = k^{-(1+r)}`.
pub fn convergence_factor(order: u32, harmonic: u64) -> Result<f64> {
    if order == 0 || order > 10_000 {
        return Err(TrigSplineError::InvalidOrder { order });
    }
    if harmonic == 0 {
        return Err(TrigSplineError::ZeroHarmonic);
    }
    Ok(nu(order, harmonic))
}

// ---- direct summation (normative reference path) ----

fn cos_num_direct(params: &SplineParams, k: usize, n_nodes: usize, t: f64, m_terms: usize) -> f64 {
    let r = params.order;
    let [g1, g2, g3] = params.gamma;
    let kf = k as f64;
    let mut acc = g1 * nu(r, k as u64) * (kf * t).cos();
    let alternate = params.numerator_alternates();
    let nn = n_nodes as u64;
    for m in 1..=m_terms as u64 {
        let plus = m * nn + k as u64;
        let minus = m * nn - k as u64;
        let term = g3 * nu(r, plus) * (plus as f64 * t).cos()
            + g2 * nu(r, minus) * (minus as f64 * t).cos();
        if alternate && m % 2 == 1 {
            acc -= term;
        } else {
            acc += term;
        }
    }
    acc
}

fn sin_num_direct(params: &SplineParams, k: usize, n_nodes: usize, t: f64, m_terms: usize) -> f64 {
    let r = params.order;
    let [e1, e2, e3] = params.eta;
    let kf = k as f64;
    let mut acc = e1 * nu(r, k as u64) * (kf * t).sin();
    let alternate = params.numerator_alternates();
    let nn = n_nodes as u64;
    for m in 1..=m_terms as u64 {
        let plus = m * nn + k as u64;
        let minus = m * nn - k as u64;
        let term = e3 * nu(r, plus) * (plus as f64 * t).sin()
            - e2 * nu(r, minus) * (minus as f64 * t).sin();
        if alternate && m % 2 == 1 {
            acc -= term;
        } else {
            acc += term;
        }
    }
    acc
}

fn factor_direct(
    coeffs: [f64; 3],
    alternate: bool,
    order: u32,
    k: usize,
    n_nodes: usize,
    m_terms: usize,
) -> f64 {
    let [c1, c2, c3] = coeffs;
    let mut acc = c1 * nu(order, k as u64);
    let nn = n_nodes as u64;
    for m in 1..=m_terms as u64 {
        let term = c3 * nu(order, m * nn + k as u64) + c2 * nu(order, m * nn - k as u64);
        if alternate && m % 2 == 1 {
            acc -= term;
        } else {
            acc += term;
        }
    }
    acc
}

// ---- closed-form path ----
//
// With θ* = t + I₁π/N and φ = I₁πk/N, the aliased tails fold into residue
// sums of Li_{r+1}(e^{iθ}):
//   Σ(−1)^{mI₁} ν_{mN+k} e^{i(mN+k)t} = e^{−iφ} Q_k(θ*) − ν_k e^{ikt}
//   Σ(−1)^{mI₁} ν_{mN−k} e^{i(mN−k)t} = e^{iφ} Q_{N−k}(θ*)
// The same shape serves the interpolation factors at t = 0 with the
// alternation parity of (I₁ − I₂).

fn twisted(sums: &PointSums, residue: usize, phase: f64) -> (f64, f64) {
    let (re, im) = sums.filtered(residue);
    let (s, c) = phase.sin_cos();
    // e^{-i phase} · (re + i im)
    (re * c + im * s, im * c - re * s)
}

fn cos_num_closed(
    params: &SplineParams,
    k: usize,
    n_nodes: usize,
    t: f64,
    sums: &PointSums,
) -> f64 {
    let r = params.order;
    let [g1, g2, g3] = params.gamma;
    let base = nu(r, k as u64) * (k as f64 * t).cos();
    let phi = params.stitch_indicator as f64 * PI * k as f64 / n_nodes as f64;
    let plus = twisted(sums, k, phi).0 - base;
    let minus = twisted(sums, n_nodes - k, -phi).0;
    g1 * base + g3 * plus + g2 * minus
}

fn sin_num_closed(
    params: &SplineParams,
    k: usize,
    n_nodes: usize,
    t: f64,
    sums: &PointSums,
) -> f64 {
    let r = params.order;
    let [e1, e2, e3] = params.eta;
    let base = nu(r, k as u64) * (k as f64 * t).sin();
    let phi = params.stitch_indicator as f64 * PI * k as f64 / n_nodes as f64;
    let plus = twisted(sums, k, phi).1 - base;
    let minus = twisted(sums, n_nodes - k, -phi).1;
    e1 * base + e3 * plus - e2 * minus
}

fn factor_closed(
    coeffs: [f64; 3],
    alternate: bool,
    order: u32,
    k: usize,
    n_nodes: usize,
    sums0: &PointSums,
) -> f64 {
    let [c1, c2, c3] = coeffs;
    let base = nu(order, k as u64);
    let d = if alternate { 1.0 } else { 0.0 };
    let phi = d * PI * k as f64 / n_nodes as f64;
    let plus = twisted(sums0, k, phi).0 - base;
    let minus = twisted(sums0, n_nodes - k, -phi).0;
    c1 * base + c3 * plus + c2 * minus
}

fn numerator_sums(params: &SplineParams, n_nodes: usize, t: f64) -> PointSums {
    let shift = params.stitch_indicator as f64 * PI / n_nodes as f64;
    PointSums::new(params.order + 1, n_nodes, t + shift)
}

fn factor_sums(params: &SplineParams, n_nodes: usize) -> PointSums {
    let d = if params.factor_alternates() { 1.0 } else { 0.0 };
    PointSums::new(params.order + 1, n_nodes, d * PI / n_nodes as f64)
}

// ---- public series operations ----

/// Numerator series of the spline cos-function for harmonic k.
pub fn cos_series(params: &SplineParams, k: usize, n_nodes: usize, t: f64) -> Result<f64> {
    validate_harmonic(k, n_nodes)?;
    let t = reduce_angle(t);
    Ok(match params.engine(n_nodes)? {
        Engine::Direct { m_terms } => cos_num_direct(params, k, n_nodes, t, m_terms),
        Engine::Closed => {
            cos_num_closed(params, k, n_nodes, t, &numerator_sums(params, n_nodes, t))
        }
    })
}

/// Numerator series of the spline sin-function for harmonic k.
pub fn sin_series(params: &SplineParams, k: usize, n_nodes: usize, t: f64) -> Result<f64> {
    validate_harmonic(k, n_nodes)?;
    let t = reduce_angle(t);
    Ok(match params.engine(n_nodes)? {
        Engine::Direct { m_terms } => sin_num_direct(params, k, n_nodes, t, m_terms),
        Engine::Closed => {
            sin_num_closed(params, k, n_nodes, t, &numerator_sums(params, n_nodes, t))
        }
    })
}

fn guarded_factor(
    value: f64,
    kind: &'static str,
    k: usize,
    n_nodes: usize,
    tail_tolerance: f64,
) -> Result<f64> {
    let threshold = FACTOR_GUARD_MULTIPLE * tail_tolerance;
    if value.abs() < threshold {
        return Err(TrigSplineError::NearZeroFactor {
            kind,
            harmonic: k,
            n_nodes,
            magnitude: value.abs(),
            threshold,
        });
    }
    Ok(value)
}

/// Interpolation factor of the cos branch (the denominator of the spline
/// cos-function). Errors when its magnitude falls below the division guard.
pub fn interp_factor_cos(params: &SplineParams, k: usize, n_nodes: usize) -> Result<f64> {
    validate_harmonic(k, n_nodes)?;
    let alternate = params.factor_alternates();
    let value = match params.engine(n_nodes)? {
        Engine::Direct { m_terms } => {
            factor_direct(params.gamma, alternate, params.order, k, n_nodes, m_terms)
        }
        Engine::Closed => factor_closed(
            params.gamma,
            alternate,
            params.order,
            k,
            n_nodes,
            &factor_sums(params, n_nodes),
        ),
    };
    guarded_factor(value, "cos", k, n_nodes, params.tail_tolerance)
}

/// Interpolation factor of the sin branch.
pub fn interp_factor_sin(params: &SplineParams, k: usize, n_nodes: usize) -> Result<f64> {
    validate_harmonic(k, n_nodes)?;
    let alternate = params.factor_alternates();
    let value = match params.engine(n_nodes)? {
        Engine::Direct { m_terms } => {
            factor_direct(params.eta, alternate, params.order, k, n_nodes, m_terms)
        }
        Engine::Closed => factor_closed(
            params.eta,
            alternate,
            params.order,
            k,
            n_nodes,
            &factor_sums(params, n_nodes),
        ),
    };
    guarded_factor(value, "sin", k, n_nodes, params.tail_tolerance)
}

/// Spline cos-function `Cs_k(t)`: smoothed replacement of `cos kt` that
/// equals `cos k x_j` at every interpolation node.
pub fn spline_cos(params: &SplineParams, k: usize, n_nodes: usize, t: f64) -> Result<f64> {
    Ok(cos_series(params, k, n_nodes, t)? / interp_factor_cos(params, k, n_nodes)?)
}

/// Spline sin-function `Ss_k(t)`.
pub fn spline_sin(params: &SplineParams, k: usize, n_nodes: usize, t: f64) -> Result<f64> {
    Ok(sin_series(params, k, n_nodes, t)? / interp_factor_sin(params, k, n_nodes)?)
}

/// Worst-case factor by which a series truncation error can grow once the
/// series enters a `numerator / factor` ratio: each branch contributes
/// `(1 + sup|numerator| / |h|) / |h|`, summed over branches, with a global
/// safety margin folded in. Derating the series tolerance by this keeps
/// spline *values* ε-reproducible, not just the raw series.
pub(crate) fn ratio_amplification(pairs: impl Iterator<Item = (f64, f64)>) -> f64 {
    let mut amp = 0.0;
    for (h, num_ceiling) in pairs {
        let ha = h.abs();
        amp += (1.0 + num_ceiling / ha) / ha;
    }
    8.0 * amp
}

/// Precomputed spline basis for one (params, N) configuration: resolved
/// engine plus the interpolation factors for every harmonic.
pub(crate) struct BasisContext {
    params: SplineParams,
    n_nodes: usize,
    engine: Engine,
    hc: Vec<f64>,
    hs: Vec<f64>,
}

impl BasisContext {
    /// Direct-engine term count tightened so that evaluated spline values
    /// (ratios of truncated series) stay within the tail tolerance when the
    /// tolerance is varied. Falls back to the raw count when the factors are
    /// degenerate; the construction guard reports those properly.
    fn derated_engine(params: &SplineParams, n_nodes: usize, m_raw: usize) -> Result<Engine> {
        let n = (n_nodes - 1) / 2;
        let alternate = params.factor_alternates();
        let order = params.order();
        let gamma_abs = params.gamma.map(f64::abs);
        let eta_abs = params.eta.map(f64::abs);
        let mut pairs = Vec::with_capacity(2 * n);
        for k in 1..=n {
            let hc = factor_direct(params.gamma, alternate, order, k, n_nodes, m_raw);
            let hs = factor_direct(params.eta, alternate, order, k, n_nodes, m_raw);
            let c_ceiling = factor_direct(gamma_abs, false, order, k, n_nodes, m_raw);
            let s_ceiling = factor_direct(eta_abs, false, order, k, n_nodes, m_raw);
            pairs.push((hc, c_ceiling));
            pairs.push((hs, s_ceiling));
        }
        let amp = ratio_amplification(pairs.into_iter());
        if !amp.is_finite() {
            return Ok(Engine::Direct { m_terms: m_raw });
        }
        let eps_series = params.tail_tolerance / amp.max(1.0);
        let m = crate::series::certified_terms(n_nodes, order, params.gamma_max(), eps_series);
        if m > crate::series::DIRECT_TERM_LIMIT && params.summation() == Summation::Auto {
            if let Ok(engine) = resolve_engine(
                Summation::ClosedForm,
                n_nodes,
                order,
                params.gamma_max(),
                params.tail_tolerance,
            ) {
                return Ok(engine);
            }
        }
        Ok(Engine::Direct { m_terms: m })
    }

    pub(crate) fn new(params: &SplineParams, n_nodes: usize) -> Result<Self> {
        validate_node_count(n_nodes)?;
        let engine = match params.engine(n_nodes)? {
            Engine::Closed => Engine::Closed,
            Engine::Direct { m_terms } => Self::derated_engine(params, n_nodes, m_terms)?,
        };
        let n = (n_nodes - 1) / 2;
        let alternate = params.factor_alternates();
        let mut hc = Vec::with_capacity(n);
        let mut hs = Vec::with_capacity(n);
        let sums0 = match engine {
            Engine::Closed => Some(factor_sums(params, n_nodes)),
            Engine::Direct { .. } => None,
        };
        for k in 1..=n {
            let (c, s) = match engine {
                Engine::Direct { m_terms } => (
                    factor_direct(params.gamma, alternate, params.order, k, n_nodes, m_terms),
                    factor_direct(params.eta, alternate, params.order, k, n_nodes, m_terms),
                ),
                Engine::Closed => {
                    let sums0 = sums0.as_ref().expect("closed engine has factor sums");
                    (
                        factor_closed(params.gamma, alternate, params.order, k, n_nodes, sums0),
                        factor_closed(params.eta, alternate, params.order, k, n_nodes, sums0),
                    )
                }
            };
            hc.push(guarded_factor(c, "cos", k, n_nodes, params.tail_tolerance)?);
            hs.push(guarded_factor(s, "sin", k, n_nodes, params.tail_tolerance)?);
        }
        Ok(Self {
            params: params.clone(),
            n_nodes,
            engine,
            hc,
            hs,
        })
    }

    pub(crate) fn max_harmonic(&self) -> usize {
        (self.n_nodes - 1) / 2
    }

    /// Basis values `(Cs_k(t), Ss_k(t))` for k = 0..n, with the constant
    /// factors `(1, 0)` at index 0.
    pub(crate) fn basis_row(&self, t: f64) -> (Vec<f64>, Vec<f64>) {
        let t = reduce_angle(t);
        let n = self.max_harmonic();
        let mut cs = Vec::with_capacity(n + 1);
        let mut ss = Vec::with_capacity(n + 1);
        cs.push(1.0);
        ss.push(0.0);
        let sums = match self.engine {
            Engine::Closed => Some(numerator_sums(&self.params, self.n_nodes, t)),
            Engine::Direct { .. } => None,
        };
        for k in 1..=n {
            let (num_c, num_s) = match self.engine {
                Engine::Direct { m_terms } => (
                    cos_num_direct(&self.params, k, self.n_nodes, t, m_terms),
                    sin_num_direct(&self.params, k, self.n_nodes, t, m_terms),
                ),
                Engine::Closed => {
                    let sums = sums.as_ref().expect("closed engine has point sums");
                    (
                        cos_num_closed(&self.params, k, self.n_nodes, t, sums),
                        sin_num_closed(&self.params, k, self.n_nodes, t, sums),
                    )
                }
            };
            cs.push(num_c / self.hc[k - 1]);
            ss.push(num_s / self.hs[k - 1]);
        }
        (cs, ss)
    }
}

/// Evaluates the one-variable trigonometric spline
/// `St(t) = a₀/2 + Σ_k a_k Cs_k(t) + b_k Ss_k(t)` from polynomial
/// coefficients computed on the interpolation grid.
pub fn eval_spline_1d(coeffs: &CoeffTable1D, params: &SplineParams, t: f64) -> Result<f64> {
    if !t.is_finite() {
        return Err(TrigSplineError::NonFinitePoint);
    }
    if coeffs.grid().indicator() != params.interp_indicator() {
        return Err(TrigSplineError::InterpIndicatorMismatch {
            grid_indicator: coeffs.grid().indicator(),
            params_indicator: params.interp_indicator(),
        });
    }
    let ctx = BasisContext::new(params, coeffs.grid().n_nodes())?;
    let (cs, ss) = ctx.basis_row(t);
    let mut acc = coeffs.a(0) / 2.0;
    for k in 1..=ctx.max_harmonic() {
        acc += coeffs.a(k) * cs[k] + coeffs.b(k) * ss[k];
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grids::GridSpec;
    use crate::trigpoly::{coeffs_1d, eval_poly_1d, SampleGrid};
    use std::f64::consts::TAU;

    fn simple(i1: u8, i2: u8, r: u32) -> SplineParams {
        SplineParams::simple(i1, i2, r).unwrap()
    }

    /// Independent brute-force oracle: plain summation of the printed series.
    fn c_brute(i1: u8, g: [f64; 3], r: u32, k: usize, n_nodes: usize, t: f64, m_max: u64) -> f64 {
        let mut acc = g[0] * nu(r, k as u64) * (k as f64 * t).cos();
        for m in 1..=m_max {
            let sgn = if i1 == 1 && m % 2 == 1 { -1.0 } else { 1.0 };
            let p = (m * n_nodes as u64 + k as u64) as f64;
            let q = (m * n_nodes as u64 - k as u64) as f64;
            acc += sgn
                * (g[2] * p.powi(-(r as i32) - 1) * (p * t).cos()
                    + g[1] * q.powi(-(r as i32) - 1) * (q * t).cos());
        }
        acc
    }

    #[test]
    fn convergence_factor_values() {
        assert_eq!(convergence_factor(1, 1).unwrap(), 1.0);
        assert_eq!(convergence_factor(1, 2).unwrap(), 0.25);
        assert_eq!(convergence_factor(2, 2).unwrap(), 0.125);
        assert_eq!(convergence_factor(1, 0), Err(TrigSplineError::ZeroHarmonic));
        assert!(matches!(
            convergence_factor(0, 1),
            Err(TrigSplineError::InvalidOrder { order: 0 })
        ));
    }

    #[test]
    fn params_validation() {
        assert!(SplineParams::simple(2, 0, 1).is_err());
        assert!(SplineParams::simple(0, 0, 0).is_err());
        assert!(SplineParams::simple(0, 0, 1)
            .unwrap()
            .with_tail_tolerance(0.0)
            .is_err());
        assert!(SplineParams::new(0, 0, 1, [f64::NAN, 1.0, 1.0], [1.0; 3], 1e-10).is_err());
        // degenerate tail vectors are allowed: the spline collapses to the polynomial
        assert!(SplineParams::new(0, 0, 1, [1.0, 0.0, 0.0], [1.0, 0.0, 0.0], 1e-10).is_ok());
    }

    #[test]
    fn collapsed_gamma_gives_bare_harmonic() {
        let params = SplineParams::new(0, 0, 2, [1.0, 0.0, 0.0], [1.0, 0.0, 0.0], 1e-10).unwrap();
        for t in [0.0, 0.7, 3.3] {
            let c = cos_series(&params, 1, 7, t).unwrap();
            assert!((c - nu(2, 1) * t.cos()).abs() < 1e-15);
            let s = sin_series(&params, 1, 7, t).unwrap();
            assert!((s - nu(2, 1) * t.sin()).abs() < 1e-15);
            assert!((spline_cos(&params, 1, 7, t).unwrap() - t.cos()).abs() < 1e-15);
        }
        assert!((interp_factor_cos(&params, 2, 7).unwrap() - nu(2, 2)).abs() < 1e-16);
    }

    #[test]
    fn single_tail_term_partial_sum() {
        // coarse tolerance certifies exactly one tail term:
        // 1 + 1/4² + 1/2² = 1.3125 for I₁=0, r=1, k=1, N=3 at t=0
        let params = simple(0, 0, 1).with_tail_tolerance(0.4).unwrap();
        assert!(matches!(
            params.engine(3).unwrap(),
            Engine::Direct { m_terms: 1 }
        ));
        let c = cos_series(&params, 1, 3, 0.0).unwrap();
        assert_eq!(c, 1.3125);
    }

    #[test]
    fn full_series_value_at_zero() {
        // Σ over l ≢ 0 (mod 3) of l⁻² = ζ(2)(1 − 1/9) = 4π²/27
        let want = 4.0 * PI * PI / 27.0;
        let params = simple(0, 0, 1); // ε = 1e-10 routes to the closed form
        assert_eq!(params.engine(3).unwrap(), Engine::Closed);
        let c = cos_series(&params, 1, 3, 0.0).unwrap();
        assert!((c - want).abs() < 1e-12);
        // the interpolation factor of the same configuration is the same sum
        let h = interp_factor_cos(&params, 1, 3).unwrap();
        assert!((h - want).abs() < 1e-12);
        // brute-force oracle tail after 10⁶ terms is ~2e-7
        let brute = c_brute(0, [1.0; 3], 1, 1, 3, 0.0, 1_000_000);
        assert!((c - brute).abs() < 1e-6);
    }

    #[test]
    fn direct_and_closed_agree() {
        for r in [2u32, 3] {
            for i1 in [0, 1] {
                for i2 in [0, 1] {
                    let base =
                        SplineParams::new(i1, i2, r, [1.0, 0.8, -0.6], [1.0, -0.4, 0.5], 1e-10)
                            .unwrap();
                    let direct = base.clone().with_summation(Summation::Direct);
                    let closed = base.clone().with_summation(Summation::ClosedForm);
                    for (k, t) in [(1usize, 0.456), (2, 4.2)] {
                        let dc = cos_series(&direct, k, 7, t).unwrap();
                        let cc = cos_series(&closed, k, 7, t).unwrap();
                        assert!((dc - cc).abs() < 2e-10, "cos r={r} i1={i1} i2={i2} k={k}");
                        let ds = sin_series(&direct, k, 7, t).unwrap();
                        let cs = sin_series(&closed, k, 7, t).unwrap();
                        assert!((ds - cs).abs() < 2e-10, "sin r={r} i1={i1} i2={i2} k={k}");
                        let dh = interp_factor_cos(&direct, k, 7).unwrap();
                        let ch = interp_factor_cos(&closed, k, 7).unwrap();
                        assert!((dh - ch).abs() < 2e-10, "hc r={r} i1={i1} i2={i2} k={k}");
                    }
                }
            }
        }
    }

    #[test]
    fn sin_series_basics() {
        // the direct engine hits 0 exactly at t = 0 (every term is a sine);
        // the closed form leaves roundoff
        let direct = simple(1, 1, 2).with_tail_tolerance(1e-3).unwrap();
        assert!(matches!(direct.engine(7).unwrap(), Engine::Direct { .. }));
        assert_eq!(sin_series(&direct, 1, 7, 0.0).unwrap(), 0.0);
        let params = simple(1, 1, 2);
        assert_eq!(params.engine(7).unwrap(), Engine::Closed);
        assert!(sin_series(&params, 1, 7, 0.0).unwrap().abs() < 1e-15);
        // odd symmetry for simple splines
        let a = sin_series(&params, 2, 7, 0.9).unwrap();
        let b = sin_series(&params, 2, 7, -0.9).unwrap();
        assert!((a + b).abs() < 1e-12);
    }

    #[test]
    fn periodicity() {
        let params = simple(1, 0, 2);
        for t in [0.1, 2.5] {
            let a = cos_series(&params, 2, 7, t).unwrap();
            let b = cos_series(&params, 2, 7, t + TAU).unwrap();
            assert!((a - b).abs() < 1e-12);
            let a = spline_cos(&params, 3, 7, t).unwrap();
            let b = spline_cos(&params, 3, 7, t + TAU).unwrap();
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn factor_pair_symmetry() {
        // hs with H = (1,1,1) equals hc with Γ = (1,1,1)
        let params = simple(0, 1, 2);
        for k in 1..=3 {
            let hc = interp_factor_cos(&params, k, 7).unwrap();
            let hs = interp_factor_sin(&params, k, 7).unwrap();
            assert_eq!(hc, hs);
        }
    }

    #[test]
    fn node_identity_all_indicator_pairs() {
        for n_nodes in [3usize, 7, 9] {
            for r in [1u32, 2, 3] {
                for i1 in [0, 1] {
                    for i2 in [0, 1] {
                        let params = simple(i1, i2, r);
                        let grid = GridSpec::new(n_nodes, i2).unwrap();
                        for k in 1..=grid.max_harmonic() {
                            for x in grid.nodes() {
                                let cs = spline_cos(&params, k, n_nodes, x).unwrap();
                                assert!(
                                    (cs - (k as f64 * x).cos()).abs() < 1e-9,
                                    "cos N={n_nodes} r={r} I1={i1} I2={i2} k={k}"
                                );
                                let ss = spline_sin(&params, k, n_nodes, x).unwrap();
                                assert!(
                                    (ss - (k as f64 * x).sin()).abs() < 1e-9,
                                    "sin N={n_nodes} r={r} I1={i1} I2={i2} k={k}"
                                );
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn harmonic_range_checks() {
        let params = simple(0, 0, 1);
        assert!(matches!(
            cos_series(&params, 0, 7, 0.0),
            Err(TrigSplineError::HarmonicOutOfRange { .. })
        ));
        assert!(matches!(
            cos_series(&params, 4, 7, 0.0),
            Err(TrigSplineError::HarmonicOutOfRange {
                harmonic: 4,
                max_harmonic: 3,
                ..
            })
        ));
        assert!(matches!(
            cos_series(&params, 1, 6, 0.0),
            Err(TrigSplineError::EvenNodeCount { .. })
        ));
    }

    #[test]
    fn near_zero_factor_is_an_error() {
        // cancel the k=1 factor: with alternating signs pick γ₁ so the sum vanishes
        let probe = SplineParams::new(1, 0, 2, [0.0, 1.0, 1.0], [1.0; 3], 1e-10).unwrap();
        let tail = interp_factor_cos(&probe, 1, 7).unwrap();
        let params = SplineParams::new(1, 0, 2, [-tail, 1.0, 1.0], [1.0; 3], 1e-10).unwrap();
        let err = interp_factor_cos(&params, 1, 7).unwrap_err();
        assert!(matches!(
            err,
            TrigSplineError::NearZeroFactor {
                kind: "cos",
                harmonic: 1,
                ..
            }
        ));
        assert!(spline_cos(&params, 1, 7, 0.3).is_err());
    }

    #[test]
    fn spline_reproduces_constant() {
        let grid = GridSpec::new(7, 0).unwrap();
        let samples = SampleGrid::from_fn_1d(grid, |_| 1.0).unwrap();
        let coeffs = coeffs_1d(&samples).unwrap();
        for r in [1, 2] {
            let params = simple(0, 0, r);
            for t in [0.0, 1.1, 4.4] {
                assert!((eval_spline_1d(&coeffs, &params, t).unwrap() - 1.0).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn delta_samples_are_cardinal_at_nodes() {
        // single unit sample: both construction paths give 1 at its node
        // and 0 at the six others
        let grid = GridSpec::new(7, 0).unwrap();
        let j0 = 3usize;
        let mut values = vec![0.0; 7];
        values[j0 - 1] = 1.0;
        let samples = SampleGrid::from_1d(grid, values).unwrap();
        let coeffs = coeffs_1d(&samples).unwrap();
        let params = simple(0, 0, 1);
        for (j, &x) in grid.nodes().iter().enumerate() {
            let want = if j + 1 == j0 { 1.0 } else { 0.0 };
            let a = eval_spline_1d(&coeffs, &params, x).unwrap();
            assert!((a - want).abs() < 1e-9, "node {}", j + 1);
            let b = crate::fundamental::eval_spline_fund_1d(&samples, &params, x).unwrap();
            assert!((b - want).abs() < 1e-9, "fundamental node {}", j + 1);
        }
    }

    #[test]
    fn non_finite_point_is_rejected() {
        let grid = GridSpec::new(7, 0).unwrap();
        let samples = SampleGrid::from_fn_1d(grid, f64::sin).unwrap();
        let coeffs = coeffs_1d(&samples).unwrap();
        let params = simple(0, 0, 1);
        assert_eq!(
            eval_spline_1d(&coeffs, &params, f64::NAN),
            Err(TrigSplineError::NonFinitePoint)
        );
        assert_eq!(
            crate::fundamental::eval_spline_fund_1d(&samples, &params, f64::INFINITY),
            Err(TrigSplineError::NonFinitePoint)
        );
    }

    #[test]
    fn spline_interpolates_samples() {
        let grid = GridSpec::new(9, 1).unwrap();
        let samples =
            SampleGrid::from_fn_1d(grid, |x| (2.0 * x).cos() + 0.5 * (x - 0.4).sin()).unwrap();
        let coeffs = coeffs_1d(&samples).unwrap();
        for r in [1, 2, 3] {
            for i1 in [0, 1] {
                let params = simple(i1, 1, r);
                for (j, &x) in grid.nodes().iter().enumerate() {
                    let v = eval_spline_1d(&coeffs, &params, x).unwrap();
                    assert!(
                        (v - samples.values()[j]).abs() < 1e-9,
                        "r={r} i1={i1} j={j}"
                    );
                }
            }
        }
    }

    #[test]
    fn indicator_mismatch_between_coeffs_and_params() {
        let grid = GridSpec::new(7, 0).unwrap();
        let samples = SampleGrid::from_fn_1d(grid, f64::cos).unwrap();
        let coeffs = coeffs_1d(&samples).unwrap();
        let params = simple(0, 1, 1);
        assert!(matches!(
            eval_spline_1d(&coeffs, &params, 0.3),
            Err(TrigSplineError::InterpIndicatorMismatch { .. })
        ));
    }

    #[test]
    fn degenerate_params_collapse_to_polynomial() {
        let grid = GridSpec::new(7, 0).unwrap();
        let samples =
            SampleGrid::from_fn_1d(grid, |x| 0.3 + x.cos() - 0.8 * (3.0 * x).sin()).unwrap();
        let coeffs = coeffs_1d(&samples).unwrap();
        let params = SplineParams::new(0, 0, 2, [1.0, 0.0, 0.0], [1.0, 0.0, 0.0], 1e-10).unwrap();
        for i in 0..100 {
            let t = TAU * i as f64 / 100.0 + 0.013;
            let s = eval_spline_1d(&coeffs, &params, t).unwrap();
            let p = eval_poly_1d(&coeffs, t);
            assert!((s - p).abs() < 1e-12);
        }
    }

    #[test]
    fn halving_tolerance_moves_results_less_than_tolerance() {
        let grid = GridSpec::new(7, 0).unwrap();
        let samples = SampleGrid::from_fn_1d(grid, |x| x.sin() + 0.2 * (2.0 * x).cos()).unwrap();
        let coeffs = coeffs_1d(&samples).unwrap();
        for eps in [1e-4, 1e-6] {
            let a = simple(0, 0, 2).with_tail_tolerance(eps).unwrap();
            let b = simple(0, 0, 2).with_tail_tolerance(eps / 2.0).unwrap();
            for i in 0..20 {
                let t = TAU * i as f64 / 20.0 + 0.005;
                let va = eval_spline_1d(&coeffs, &a, t).unwrap();
                let vb = eval_spline_1d(&coeffs, &b, t).unwrap();
                assert!((va - vb).abs() < eps, "eps={eps} t={t}");
            }
        }
    }
}
