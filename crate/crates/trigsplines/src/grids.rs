//! Uniform periodic grids on `[0, 2π)`.
//!
//! Two node families are supported, selected by the grid indicator `I`:
//! `I = 0` places the first node at 0, `I = 1` shifts every node by half a
//! step `π/N`. Node counts are odd, `N = 2n + 1`, and indices are 1-based in
//! the public contract.

use std::f64::consts::{PI, TAU};

use crate::error::{Result, TrigSplineError};

/// A uniform periodic grid: node count `N` (odd, ≥ 3) plus indicator `I ∈ {0, 1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GridSpec {
    n_nodes: usize,
    indicator: u8,
}

impl GridSpec {
    /// Validates and builds a grid spec. Even or too-small node counts and
    /// indicators outside `{0, 1}` are rejected, not silently adjusted.
    pub fn new(n_nodes: usize, indicator: u8) -> Result<Self> {
        if n_nodes < 3 {
            return Err(TrigSplineError::NodeCountTooSmall { n_nodes });
        }
        if n_nodes.is_multiple_of(2) {
            return Err(TrigSplineError::EvenNodeCount { n_nodes });
        }
        if indicator > 1 {
            return Err(TrigSplineError::InvalidIndicator { value: indicator });
        }
        Ok(Self { n_nodes, indicator })
    }

    pub fn n_nodes(&self) -> usize {
        self.n_nodes
    }

    pub fn indicator(&self) -> u8 {
        self.indicator
    }

    /// Highest resolvable harmonic `n = (N − 1) / 2`.
    pub fn max_harmonic(&self) -> usize {
        (self.n_nodes - 1) / 2
    }

    /// Grid step `2π/N`.
    pub fn step(&self) -> f64 {
        TAU / self.n_nodes as f64
    }

    /// The j-th node (1-based): `2π(j−1)/N` for `I = 0`, `π(2j−1)/N` for `I = 1`.
    pub fn node(&self, index: usize) -> Result<f64> {
        if index == 0 || index > self.n_nodes {
            return Err(TrigSplineError::NodeIndexOutOfRange {
                index,
                n_nodes: self.n_nodes,
            });
        }
        let n = self.n_nodes as f64;
        Ok(match self.indicator {
            0 => TAU * (index as f64 - 1.0) / n,
            _ => PI * (2.0 * index as f64 - 1.0) / n,
        })
    }

    /// All N nodes in ascending order.
    pub fn nodes(&self) -> Vec<f64> {
        (1..=self.n_nodes)
            .map(|j| self.node(j).expect("index in range"))
            .collect()
    }
}

/// Node-count half of the `GridSpec` validation, for operations that take a
/// bare N.
pub(crate) fn validate_node_count(n_nodes: usize) -> Result<()> {
    if n_nodes < 3 {
        return Err(TrigSplineError::NodeCountTooSmall { n_nodes });
    }
    if n_nodes.is_multiple_of(2) {
        return Err(TrigSplineError::EvenNodeCount { n_nodes });
    }
    Ok(())
}

/// Reduces an angle to `[0, 2π)`.
pub(crate) fn reduce_angle(t: f64) -> f64 {
    let r = t.rem_euclid(TAU);
    if r >= TAU {
        0.0
    } else {
        r
    }
}
