//! Truncation control for the spline factor series.
//!
//! Every infinite series in this crate has tail terms bounded by
//! `2·γmax·(mN − n)^{-(1+r)}`, so the integral test certifies that stopping
//! after M terms leaves a remainder below `2·γmax·(MN − n)^{-r}/(rN)`. The
//! direct engine sums exactly that many terms; the closed-form engine sums
//! the full series through polylogarithms. One configuration always uses a
//! single engine (and, in the direct case, a single M) for numerator and
//! denominator series alike, which keeps node identities exact to roundoff.

use crate::error::{Result, TrigSplineError};
use crate::polylog::MAX_S;

/// How the spline factor series are summed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Summation {
    /// Direct summation when the certified term count is small, closed form
    /// otherwise.
    #[default]
    Auto,
    /// Term-by-term summation truncated by the certified tail bound.
    Direct,
    /// Polylogarithm-based evaluation of the full series.
    ClosedForm,
}

/// Term-count threshold above which `Auto` switches to the closed form.
pub(crate) const DIRECT_TERM_LIMIT: usize = 4096;

/// Resolved summation strategy for one (params, N) configuration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Engine {
    Direct { m_terms: usize },
    Closed,
}

/// Smallest M with `2·γmax·(MN − n)^{-r}/(rN) < ε` (0 when the tails vanish).
pub(crate) fn certified_terms(n_nodes: usize, order: u32, gamma_max: f64, eps: f64) -> usize {
    if gamma_max == 0.0 {
        return 0;
    }
    let n = ((n_nodes - 1) / 2) as f64;
    let nn = n_nodes as f64;
    let r = order as f64;
    let bound = |m: f64| 2.0 * gamma_max * (m * nn - n).powf(-r) / (r * nn);
    let b = 2.0 * gamma_max / (r * nn * eps);
    let x = b.powf(1.0 / r);
    let guess = ((n + x) / nn).floor().clamp(0.0, 4.0e18);
    let mut m = guess as usize + 1;
    while bound(m as f64) >= eps {
        m += 1;
    }
    m
}

pub(crate) fn resolve_engine(
    summation: Summation,
    n_nodes: usize,
    order: u32,
    gamma_max: f64,
    eps: f64,
) -> Result<Engine> {
    match summation {
        Summation::Direct => Ok(Engine::Direct {
            m_terms: certified_terms(n_nodes, order, gamma_max, eps),
        }),
        Summation::ClosedForm => {
            if order + 1 > MAX_S {
                return Err(TrigSplineError::OrderTooLargeForClosedForm {
                    order,
                    max: MAX_S - 1,
                });
            }
            Ok(Engine::Closed)
        }
        Summation::Auto => {
            let m_terms = certified_terms(n_nodes, order, gamma_max, eps);
            if m_terms <= DIRECT_TERM_LIMIT {
                Ok(Engine::Direct { m_terms })
            } else {
                resolve_engine(Summation::ClosedForm, n_nodes, order, gamma_max, eps)
            }
        }
    }
}

/// Convergence factor ν_k(r) = k^{-(1+r)} as an unchecked internal helper.
pub(crate) fn nu(order: u32, k: u64) -> f64 {
    (k as f64).powi(-((order as i32) + 1))
}
