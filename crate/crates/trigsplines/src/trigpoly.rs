//! Interpolating trigonometric polynomials in one and two variables.
//!
//! Coefficients are the discrete Fourier sums over the grid nodes; with an
//! odd node count `N = 2n + 1` the polynomial of degree `n` through the `N`
//! samples is unique and reproduces them exactly. Coefficient computation is
//! plain `O(N²)` summation.

use crate::error::{Result, TrigSplineError};
use crate::grids::{reduce_angle, GridSpec};

/// Function samples on the Cartesian product of one or more grids.
///
/// Values are stored row-major (the last axis varies fastest).
#[derive(Debug, Clone, PartialEq)]
pub struct SampleGrid {
    specs: Vec<GridSpec>,
    values: Vec<f64>,
}

impl SampleGrid {
    /// Builds an N-dimensional sample grid from row-major values.
    pub fn from_nd(specs: Vec<GridSpec>, values: Vec<f64>) -> Result<Self> {
        let shape: Vec<usize> = specs.iter().map(|s| s.n_nodes()).collect();
        let expected: usize = shape.iter().product();
        if values.len() != expected {
            return Err(TrigSplineError::SampleCountMismatch {
                expected,
                actual: values.len(),
                shape,
            });
        }
        if let Some(flat) = values.iter().position(|v| !v.is_finite()) {
            let mut index = Vec::with_capacity(shape.len());
            let mut rem = flat;
            for axis in 0..shape.len() {
                let stride: usize = shape[axis + 1..].iter().product();
                index.push(rem / stride + 1);
                rem %= stride;
            }
            return Err(TrigSplineError::NonFiniteSample { index });
        }
        Ok(Self { specs, values })
    }

    pub fn from_1d(spec: GridSpec, values: Vec<f64>) -> Result<Self> {
        Self::from_nd(vec![spec], values)
    }

    /// Row-major 2D samples: `values[(j-1) * N₂ + (k-1)] = f(x_j, y_k)`.
    pub fn from_2d(spec_x: GridSpec, spec_y: GridSpec, values: Vec<f64>) -> Result<Self> {
        Self::from_nd(vec![spec_x, spec_y], values)
    }

    /// Samples a function of one variable on the grid nodes.
    pub fn from_fn_1d(spec: GridSpec, f: impl Fn(f64) -> f64) -> Result<Self> {
        let values = spec.nodes().into_iter().map(f).collect();
        Self::from_1d(spec, values)
    }

    /// Samples a function of two variables on the product grid.
    pub fn from_fn_2d(
        spec_x: GridSpec,
        spec_y: GridSpec,
        f: impl Fn(f64, f64) -> f64,
    ) -> Result<Self> {
        let xs = spec_x.nodes();
        let ys = spec_y.nodes();
        let mut values = Vec::with_capacity(xs.len() * ys.len());
        for &x in &xs {
            for &y in &ys {
                values.push(f(x, y));
            }
        }
        Self::from_2d(spec_x, spec_y, values)
    }

    pub fn ndim(&self) -> usize {
        self.specs.len()
    }

    pub fn shape(&self) -> Vec<usize> {
        self.specs.iter().map(|s| s.n_nodes()).collect()
    }

    pub fn spec(&self, axis: usize) -> &GridSpec {
        &self.specs[axis]
    }

    pub fn specs(&self) -> &[GridSpec] {
        &self.specs
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub(crate) fn expect_ndim(&self, expected: usize) -> Result<()> {
        if self.ndim() != expected {
            return Err(TrigSplineError::DimensionMismatch {
                expected,
                actual: self.ndim(),
            });
        }
        Ok(())
    }

    /// Value at a 1-based multi-index.
    pub fn value_at(&self, index: &[usize]) -> Result<f64> {
        if index.len() != self.ndim() {
            return Err(TrigSplineError::DimensionMismatch {
                expected: self.ndim(),
                actual: index.len(),
            });
        }
        let mut flat = 0;
        for (axis, &j) in index.iter().enumerate() {
            let n = self.specs[axis].n_nodes();
            if j == 0 || j > n {
                return Err(TrigSplineError::NodeIndexOutOfRange {
                    index: j,
                    n_nodes: n,
                });
            }
            flat = flat * n + (j - 1);
        }
        Ok(self.values[flat])
    }
}

/// Coefficients `a₀..a_n`, `b₁..b_n` of a one-variable interpolation polynomial.
#[derive(Debug, Clone, PartialEq)]
pub struct CoeffTable1D {
    a: Vec<f64>,
    b: Vec<f64>,
    grid: GridSpec,
}

impl CoeffTable1D {
    pub fn grid(&self) -> &GridSpec {
        &self.grid
    }

    /// Cosine coefficient a_k, k = 0..n.
    pub fn a(&self, k: usize) -> f64 {
        self.a[k]
    }

    /// Sine coefficient b_k, k = 1..n.
    pub fn b(&self, k: usize) -> f64 {
        self.b[k - 1]
    }

    pub fn max_harmonic(&self) -> usize {
        self.a.len() - 1
    }
}

/// Coefficient matrices of a two-variable interpolation polynomial,
/// `(n₁+1) × (n₂+1)` each. Entries with a degenerate sine index are zero.
#[derive(Debug, Clone, PartialEq)]
pub struct CoeffTable2D {
    a: Vec<f64>,
    b: Vec<f64>,
    c: Vec<f64>,
    d: Vec<f64>,
    grid_x: GridSpec,
    grid_y: GridSpec,
}

impl CoeffTable2D {
    pub fn grid_x(&self) -> &GridSpec {
        &self.grid_x
    }

    pub fn grid_y(&self) -> &GridSpec {
        &self.grid_y
    }

    fn idx(&self, k: usize, l: usize) -> usize {
        k * (self.grid_y.max_harmonic() + 1) + l
    }

    /// cos·cos coefficient a_kl.
    pub fn a(&self, k: usize, l: usize) -> f64 {
        self.a[self.idx(k, l)]
    }

    /// cos·sin coefficient b_kl.
    pub fn b(&self, k: usize, l: usize) -> f64 {
        self.b[self.idx(k, l)]
    }

    /// sin·cos coefficient c_kl.
    pub fn c(&self, k: usize, l: usize) -> f64 {
        self.c[self.idx(k, l)]
    }

    /// sin·sin coefficient d_kl.
    pub fn d(&self, k: usize, l: usize) -> f64 {
        self.d[self.idx(k, l)]
    }
}

/// Discrete Fourier coefficients of the interpolating polynomial:
/// `a_k = (2/N) Σ_j f_j cos(k x_j)`, `b_k = (2/N) Σ_j f_j sin(k x_j)`.
pub fn coeffs_1d(samples: &SampleGrid) -> Result<CoeffTable1D> {
    samples.expect_ndim(1)?;
    let grid = *samples.spec(0);
    let xs = grid.nodes();
    let f = samples.values();
    let n = grid.max_harmonic();
    let scale = 2.0 / grid.n_nodes() as f64;
    let mut a = Vec::with_capacity(n + 1);
    let mut b = Vec::with_capacity(n);
    for k in 0..=n {
        let mut sum = 0.0;
        for (j, &x) in xs.iter().enumerate() {
            sum += f[j] * (k as f64 * x).cos();
        }
        a.push(scale * sum);
    }
    for k in 1..=n {
        let mut sum = 0.0;
        for (j, &x) in xs.iter().enumerate() {
            sum += f[j] * (k as f64 * x).sin();
        }
        b.push(scale * sum);
    }
    Ok(CoeffTable1D { a, b, grid })
}

/// `T(x) = a₀/2 + Σ_{k=1..n} a_k cos(kx) + b_k sin(kx)`.
pub fn eval_poly_1d(coeffs: &CoeffTable1D, x: f64) -> f64 {
    let x = reduce_angle(x);
    let mut acc = coeffs.a(0) / 2.0;
    for k in 1..=coeffs.max_harmonic() {
        let (s, c) = (k as f64 * x).sin_cos();
        acc += coeffs.a(k) * c + coeffs.b(k) * s;
    }
    acc
}

/// Normalization constants for the 2D coefficient sums; the degenerate
/// sine rows/columns get a zero constant.
fn k_constants(k: usize, l: usize, n1: usize, n2: usize) -> [f64; 4] {
    let base = 1.0 / (n1 as f64 * n2 as f64);
    match (k == 0, l == 0) {
        (true, true) => [base, 0.0, 0.0, 0.0],
        (true, false) => [2.0 * base, 2.0 * base, 0.0, 0.0],
        (false, true) => [2.0 * base, 0.0, 2.0 * base, 0.0],
        (false, false) => [4.0 * base, 4.0 * base, 4.0 * base, 4.0 * base],
    }
}

/// Two-variable coefficients. Requires equal grid indicators on both axes.
///
/// The double sums are evaluated in two passes (transform over x, then over
/// y), which is the same direct summation with fewer repeated products.
pub fn coeffs_2d(samples: &SampleGrid) -> Result<CoeffTable2D> {
    samples.expect_ndim(2)?;
    let grid_x = *samples.spec(0);
    let grid_y = *samples.spec(1);
    if grid_x.indicator() != grid_y.indicator() {
        return Err(TrigSplineError::IndicatorMismatch {
            x_indicator: grid_x.indicator(),
            y_indicator: grid_y.indicator(),
        });
    }
    let (n1, n2) = (grid_x.max_harmonic(), grid_y.max_harmonic());
    let (nx, ny) = (grid_x.n_nodes(), grid_y.n_nodes());
    let xs = grid_x.nodes();
    let ys = grid_y.nodes();
    let f = samples.values();

    // pass 1: g_c[k][j] = Σ_i f_ij cos(k x_i), g_s likewise with sin
    let mut g_c = vec![0.0; (n1 + 1) * ny];
    let mut g_s = vec![0.0; (n1 + 1) * ny];
    for k in 0..=n1 {
        for (i, &x) in xs.iter().enumerate() {
            let (sv, cv) = (k as f64 * x).sin_cos();
            let row = &f[i * ny..(i + 1) * ny];
            for (j, &v) in row.iter().enumerate() {
                g_c[k * ny + j] += v * cv;
                g_s[k * ny + j] += v * sv;
            }
        }
    }

    // pass 2: contract over y with the K constants applied per (k, l) case
    let cols = n2 + 1;
    let mut a = vec![0.0; (n1 + 1) * cols];
    let mut b = vec![0.0; (n1 + 1) * cols];
    let mut c = vec![0.0; (n1 + 1) * cols];
    let mut d = vec![0.0; (n1 + 1) * cols];
    for k in 0..=n1 {
        for l in 0..=n2 {
            let [k1, k2, k3, k4] = k_constants(k, l, nx, ny);
            let (mut sa, mut sb, mut sc, mut sd) = (0.0, 0.0, 0.0, 0.0);
            for (j, &y) in ys.iter().enumerate() {
                let (sv, cv) = (l as f64 * y).sin_cos();
                sa += g_c[k * ny + j] * cv;
                sb += g_c[k * ny + j] * sv;
                sc += g_s[k * ny + j] * cv;
                sd += g_s[k * ny + j] * sv;
            }
            let at = k * cols + l;
            a[at] = k1 * sa;
            b[at] = k2 * sb;
            c[at] = k3 * sc;
            d[at] = k4 * sd;
        }
    }
    Ok(CoeffTable2D {
        a,
        b,
        c,
        d,
        grid_x,
        grid_y,
    })
}

/// `T(x, y) = Σ_{k,l} a_kl cos kx cos ly + b_kl cos kx sin ly + c_kl sin kx cos ly + d_kl sin kx sin ly`.
pub fn eval_poly_2d(coeffs: &CoeffTable2D, x: f64, y: f64) -> f64 {
    let x = reduce_angle(x);
    let y = reduce_angle(y);
    let n1 = coeffs.grid_x.max_harmonic();
    let n2 = coeffs.grid_y.max_harmonic();
    let cx: Vec<f64> = (0..=n1).map(|k| (k as f64 * x).cos()).collect();
    let sx: Vec<f64> = (0..=n1).map(|k| (k as f64 * x).sin()).collect();
    let cy: Vec<f64> = (0..=n2).map(|l| (l as f64 * y).cos()).collect();
    let sy: Vec<f64> = (0..=n2).map(|l| (l as f64 * y).sin()).collect();
    let mut acc = 0.0;
    for k in 0..=n1 {
        for l in 0..=n2 {
            acc += coeffs.a(k, l) * cx[k] * cy[l]
                + coeffs.b(k, l) * cx[k] * sy[l]
                + coeffs.c(k, l) * sx[k] * cy[l]
                + coeffs.d(k, l) * sx[k] * sy[l];
        }
    }
    acc
}
