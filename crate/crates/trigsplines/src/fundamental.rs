//! Fundamental (cardinal) trigonometric splines.
//!
//! `ts_k` equals 1 at interpolation node k and 0 at every other node, so a
//! spline through arbitrary samples is just the sample-weighted sum of the
//! `ts_k`. Only simple splines are supported here; general parameter vectors
//! go through the polynomial-coefficient construction instead.
//!
//! The series here are summed independently of the cos-/sin-function path:
//! the agreement of the two constructions is one of the crate's main
//! verification hooks, so they must not share a summation loop.

use std::f64::consts::{PI, TAU};

use crate::error::{Result, TrigSplineError};
use crate::grids::{reduce_angle, validate_node_count, GridSpec};
use crate::polylog::PointSums;
use crate::series::{nu, Engine};
use crate::splinekernel::SplineParams;
use crate::trigpoly::SampleGrid;

/// Near-zero guard multiple on the denominators, matching the factor guard
/// of the cos-/sin-function path.
const FACTOR_GUARD_MULTIPLE: f64 = 10.0;

/// Sign alternation of both fundamental series: `(−1)^{m(I₁+I₂)}`.
///
/// The numerator inherits one alternation from the stitching grid and one
/// from translating the series to the interpolation node, so numerator and
/// denominator always alternate together; that is precisely what makes
/// `ts_k` cardinal on grids with I₂ = 1 as well.
fn alternates(params: &SplineParams) -> bool {
    (params.stitch_indicator() + params.interp_indicator()) % 2 == 1
}

/// Per-(params, N) state: resolved engine plus the denominators h_j.
pub(crate) struct FundamentalContext {
    n_nodes: usize,
    order: u32,
    alternate: bool,
    engine: Engine,
    grid: GridSpec,
    h: Vec<f64>,
}

fn denominator_direct(
    order: u32,
    j: usize,
    n_nodes: usize,
    alternate: bool,
    m_terms: usize,
) -> f64 {
    let mut acc = nu(order, j as u64);
    let nn = n_nodes as u64;
    for m in 1..=m_terms as u64 {
        let term = nu(order, m * nn - j as u64) + nu(order, m * nn + j as u64);
        if alternate && m % 2 == 1 {
            acc -= term;
        } else {
            acc += term;
        }
    }
    acc
}

/// Re[e^{-i phase} Q_residue] from shared point sums.
fn folded(sums: &PointSums, residue: usize, phase: f64) -> f64 {
    let (re, im) = sums.filtered(residue);
    let (s, c) = phase.sin_cos();
    re * c + im * s
}

/// Direct-engine term count tightened for the `c_j / h_j` ratios, mirroring
/// the cos-/sin-function path.
fn derated_engine(
    params: &SplineParams,
    n_nodes: usize,
    order: u32,
    alternate: bool,
    m_raw: usize,
) -> Result<Engine> {
    let n = (n_nodes - 1) / 2;
    let pairs = (1..=n).map(|j| {
        let h = denominator_direct(order, j, n_nodes, alternate, m_raw);
        let ceiling = denominator_direct(order, j, n_nodes, false, m_raw);
        (h, ceiling)
    });
    let amp = crate::splinekernel::ratio_amplification(pairs);
    if !amp.is_finite() {
        return Ok(Engine::Direct { m_terms: m_raw });
    }
    let eps_series = params.tail_tolerance() / amp.max(1.0);
    let m = crate::series::certified_terms(n_nodes, order, 1.0, eps_series);
    if m > crate::series::DIRECT_TERM_LIMIT && params.summation() == crate::series::Summation::Auto
    {
        if let Ok(engine) = crate::series::resolve_engine(
            crate::series::Summation::ClosedForm,
            n_nodes,
            order,
            1.0,
            params.tail_tolerance(),
        ) {
            return Ok(engine);
        }
    }
    Ok(Engine::Direct { m_terms: m })
}

impl FundamentalContext {
    pub(crate) fn new(params: &SplineParams, n_nodes: usize) -> Result<Self> {
        if !params.is_simple() {
            return Err(TrigSplineError::NotSimpleSpline);
        }
        validate_node_count(n_nodes)?;
        let grid = GridSpec::new(n_nodes, params.interp_indicator())?;
        let order = params.order();
        let alternate = alternates(params);
        let engine = match params.engine(n_nodes)? {
            Engine::Closed => Engine::Closed,
            Engine::Direct { m_terms } => {
                derated_engine(params, n_nodes, order, alternate, m_terms)?
            }
        };
        let n = (n_nodes - 1) / 2;
        let threshold = FACTOR_GUARD_MULTIPLE * params.tail_tolerance();
        let sums0 = match engine {
            Engine::Closed => Some(PointSums::new(
                order + 1,
                n_nodes,
                if alternate { PI / n_nodes as f64 } else { 0.0 },
            )),
            Engine::Direct { .. } => None,
        };
        let mut h = Vec::with_capacity(n);
        for j in 1..=n {
            let value = match engine {
                Engine::Direct { m_terms } => {
                    denominator_direct(order, j, n_nodes, alternate, m_terms)
                }
                Engine::Closed => {
                    let sums0 = sums0.as_ref().expect("closed engine has factor sums");
                    let phi = if alternate {
                        PI * j as f64 / n_nodes as f64
                    } else {
                        0.0
                    };
                    folded(sums0, j, phi) + folded(sums0, n_nodes - j, -phi)
                }
            };
            if value.abs() < threshold {
                return Err(TrigSplineError::NearZeroFactor {
                    kind: "fundamental",
                    harmonic: j,
                    n_nodes,
                    magnitude: value.abs(),
                    threshold,
                });
            }
            h.push(value);
        }
        Ok(Self {
            n_nodes,
            order,
            alternate,
            engine,
            grid,
            h,
        })
    }

    fn numerator_direct(&self, j: usize, u: f64, m_terms: usize) -> f64 {
        let mut acc = nu(self.order, j as u64) * (j as f64 * u).cos();
        let nn = self.n_nodes as u64;
        for m in 1..=m_terms as u64 {
            let minus = m * nn - j as u64;
            let plus = m * nn + j as u64;
            let term = nu(self.order, minus) * (minus as f64 * u).cos()
                + nu(self.order, plus) * (plus as f64 * u).cos();
            if self.alternate && m % 2 == 1 {
                acc -= term;
            } else {
                acc += term;
            }
        }
        acc
    }

    /// ts_k at one point.
    pub(crate) fn ts(&self, node_index: usize, x: f64) -> f64 {
        let xk = self.grid.node(node_index).expect("validated node index");
        let u = reduce_angle(x) - xk;
        let n = (self.n_nodes - 1) / 2;
        let mut total = 1.0;
        match self.engine {
            Engine::Direct { m_terms } => {
                for j in 1..=n {
                    total += 2.0 * self.numerator_direct(j, u, m_terms) / self.h[j - 1];
                }
            }
            Engine::Closed => {
                let shift = if self.alternate {
                    PI / self.n_nodes as f64
                } else {
                    0.0
                };
                let sums = PointSums::new(self.order + 1, self.n_nodes, u + shift);
                for j in 1..=n {
                    let phi = if self.alternate {
                        PI * j as f64 / self.n_nodes as f64
                    } else {
                        0.0
                    };
                    let c = folded(&sums, j, phi) + folded(&sums, self.n_nodes - j, -phi);
                    total += 2.0 * c / self.h[j - 1];
                }
            }
        }
        total / self.n_nodes as f64
    }

    /// All N cardinal values at one point.
    ///
    /// The closed-form branch evaluates the polylogarithms once: shifting the
    /// argument by a whole grid step only twists each residue sum by a phase,
    /// `Q_a(θ − 2π(k−1)/N) = e^{-2πia(k-1)/N} Q_a(θ)`.
    pub(crate) fn ts_all(&self, x: f64) -> Vec<f64> {
        let n_nodes = self.n_nodes;
        let n = (n_nodes - 1) / 2;
        match self.engine {
            Engine::Direct { .. } => (1..=n_nodes).map(|k| self.ts(k, x)).collect(),
            Engine::Closed => {
                let x1 = self.grid.node(1).expect("node 1 exists");
                let u1 = reduce_angle(x) - x1;
                let shift = if self.alternate {
                    PI / n_nodes as f64
                } else {
                    0.0
                };
                let sums = PointSums::new(self.order + 1, n_nodes, u1 + shift);
                let q: Vec<(f64, f64)> = (1..=n).map(|j| sums.filtered(j)).collect();
                let q_conj: Vec<(f64, f64)> = (1..=n).map(|j| sums.filtered(n_nodes - j)).collect();
                (0..n_nodes)
                    .map(|k0| {
                        let mut total = 1.0;
                        for j in 1..=n {
                            let phi = if self.alternate {
                                PI * j as f64 / n_nodes as f64
                            } else {
                                0.0
                            };
                            let psi = phi + TAU * (j * k0 % n_nodes) as f64 / n_nodes as f64;
                            let (s, c) = psi.sin_cos();
                            let (re_p, im_p) = q[j - 1];
                            let (re_m, im_m) = q_conj[j - 1];
                            // Re[e^{-iψ} Q_j] + Re[e^{iψ} Q_{N−j}]
                            let cj = re_p * c + im_p * s + re_m * c - im_m * s;
                            total += 2.0 * cj / self.h[j - 1];
                        }
                        total / n_nodes as f64
                    })
                    .collect()
            }
        }
    }
}

/// The fundamental spline `ts_k`: 1 at interpolation node k, 0 at the other
/// nodes of the grid `Δ_N^{(I₂)}`. Requires simple-spline parameters.
pub fn fundamental_spline(
    params: &SplineParams,
    node_index: usize,
    n_nodes: usize,
    x: f64,
) -> Result<f64> {
    validate_node_count(n_nodes)?;
    if node_index == 0 || node_index > n_nodes {
        return Err(TrigSplineError::NodeIndexOutOfRange {
            index: node_index,
            n_nodes,
        });
    }
    let ctx = FundamentalContext::new(params, n_nodes)?;
    Ok(ctx.ts(node_index, x))
}

/// One-variable spline as the sample-weighted sum of fundamental splines:
/// `St(x) = Σ_k f_k ts_k(x)`.
pub fn eval_spline_fund_1d(samples: &SampleGrid, params: &SplineParams, x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(TrigSplineError::NonFinitePoint);
    }
    samples.expect_ndim(1)?;
    if samples.spec(0).indicator() != params.interp_indicator() {
        return Err(TrigSplineError::InterpIndicatorMismatch {
            grid_indicator: samples.spec(0).indicator(),
            params_indicator: params.interp_indicator(),
        });
    }
    let ctx = FundamentalContext::new(params, samples.spec(0).n_nodes())?;
    let ts = ctx.ts_all(x);
    Ok(samples.values().iter().zip(&ts).map(|(f, t)| f * t).sum())
}
