//! Job layer behind the `trigsplines` binary: sample ingestion, spline
//! construction, dense lattice evaluation and plot-ready export.
//!
//! Output files are written atomically (temp file + rename) and all values
//! are printed with 17 significant digits so repeated runs are byte
//! identical. Angles in output files are raw radians in `[0, 2π)`.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use serde::Deserialize;
use thiserror::Error;
use trigsplines::{
    coeffs_1d, coeffs_2d, eval_spline_1d, FundformSurface, GridSpec, PolyformSurface, SampleGrid,
    TensorSplineConfig, TrigSplineError,
};

/// Gate on the polyform/fundform discrepancy when `--both-methods` is set.
pub const METHOD_DISCREPANCY_GATE: f64 = 1e-8;

/// Node checks pass when the spline reproduces every sample to
/// `NODE_CHECK_MULTIPLE * eps`.
pub const NODE_CHECK_MULTIPLE: f64 = 1e3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{path}: file is empty")]
    EmptyFile { path: PathBuf },

    #[error("{path}:{line}: {message}")]
    CsvRow {
        path: PathBuf,
        line: usize,
        message: String,
    },

    #[error("{path}:{line}: duplicate node {index:?}")]
    DuplicateNode {
        path: PathBuf,
        line: usize,
        index: Vec<usize>,
    },

    #[error("{path}: missing node {index:?}")]
    MissingNode { path: PathBuf, index: Vec<usize> },

    #[error("{path}:{line}: value at node {index:?} is not finite")]
    NonFiniteValue {
        path: PathBuf,
        line: usize,
        index: Vec<usize>,
    },

    #[error("{path}: {message}")]
    JsonParse { path: PathBuf, message: String },

    #[error("{path}: shape {actual:?} does not match the requested grids {expected:?}")]
    ShapeMismatch {
        path: PathBuf,
        expected: Vec<usize>,
        actual: Vec<usize>,
    },

    #[error("expected {expected} value(s) for {what} (one per axis), got {actual}")]
    AxisCountMismatch {
        what: &'static str,
        expected: usize,
        actual: usize,
    },

    #[error("output resolution must be at least 2 per axis, got {value} for axis {axis}")]
    ResolutionTooSmall { axis: usize, value: usize },

    #[error("exactly one of --input and --builtin must be given")]
    InputSourceRequired,

    #[error("cannot parse builtin function spec {spec:?}: {message}")]
    BuiltinParse { spec: String, message: String },

    #[error("{0}")]
    InvalidFlags(String),

    #[error(transparent)]
    Spline(#[from] TrigSplineError),

    #[error("node check failed: max |spline - sample| = {max_error:e} exceeds {tolerance:e}")]
    NodeCheckFailed { max_error: f64, tolerance: f64 },

    #[error("construction methods disagree: max discrepancy {max:e} exceeds {tolerance:e}")]
    MethodDiscrepancy { max: f64, tolerance: f64 },
}

fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> CliError + '_ {
    move |source| CliError::Io {
        path: path.to_owned(),
        source,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Interp1d,
    Interp2d,
    InterpNd,
    PaperExample,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Json,
}

/// Built-in sample generators, enough to drive every check without external
/// data: `const1`, `coskx:K[,K...]` (product of per-axis cosines) and
/// `delta:J[,J...]` (1 at the given 1-based node, 0 elsewhere).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Builtin {
    Const1,
    CosK(Vec<i64>),
    Delta(Vec<usize>),
}

impl Builtin {
    pub fn parse(spec: &str) -> Result<Self, CliError> {
        let bad = |message: &str| CliError::BuiltinParse {
            spec: spec.to_owned(),
            message: message.to_owned(),
        };
        match spec.split_once(':') {
            None if spec == "const1" => Ok(Builtin::Const1),
            None => Err(bad("expected const1, coskx:K[,K...] or delta:J[,J...]")),
            Some(("coskx", args)) => {
                let ks = args
                    .split(',')
                    .map(|a| a.trim().parse::<i64>())
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|e| bad(&format!("bad harmonic list: {e}")))?;
                Ok(Builtin::CosK(ks))
            }
            Some(("delta", args)) => {
                let js = args
                    .split(',')
                    .map(|a| a.trim().parse::<usize>())
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|e| bad(&format!("bad node index list: {e}")))?;
                Ok(Builtin::Delta(js))
            }
            Some(_) => Err(bad("expected const1, coskx:K[,K...] or delta:J[,J...]")),
        }
    }

    fn generate(&self, specs: &[GridSpec]) -> Result<SampleGrid, CliError> {
        let shape: Vec<usize> = specs.iter().map(|s| s.n_nodes()).collect();
        let count: usize = shape.iter().product();
        match self {
            Builtin::Const1 => Ok(SampleGrid::from_nd(specs.to_vec(), vec![1.0; count])?),
            Builtin::CosK(ks) => {
                if ks.len() != specs.len() {
                    return Err(CliError::AxisCountMismatch {
                        what: "coskx harmonics",
                        expected: specs.len(),
                        actual: ks.len(),
                    });
                }
                let axes: Vec<Vec<f64>> = specs.iter().map(|s| s.nodes()).collect();
                let mut values = Vec::with_capacity(count);
                for flat in 0..count {
                    let mut rem = flat;
                    let mut v = 1.0;
                    for axis in (0..shape.len()).rev() {
                        let j = rem % shape[axis];
                        rem /= shape[axis];
                        v *= (ks[axis] as f64 * axes[axis][j]).cos();
                    }
                    values.push(v);
                }
                Ok(SampleGrid::from_nd(specs.to_vec(), values)?)
            }
            Builtin::Delta(js) => {
                if js.len() != specs.len() {
                    return Err(CliError::AxisCountMismatch {
                        what: "delta node indices",
                        expected: specs.len(),
                        actual: js.len(),
                    });
                }
                let mut flat = 0usize;
                for (axis, (&j, spec)) in js.iter().zip(specs).enumerate() {
                    if j == 0 || j > spec.n_nodes() {
                        return Err(CliError::InvalidFlags(format!(
                            "delta node index {j} out of range 1..={} on axis {axis}",
                            spec.n_nodes()
                        )));
                    }
                    flat = flat * spec.n_nodes() + (j - 1);
                }
                let mut values = vec![0.0; count];
                values[flat] = 1.0;
                Ok(SampleGrid::from_nd(specs.to_vec(), values)?)
            }
        }
    }
}

/// Everything one invocation needs.
#[derive(Debug, Clone)]
pub struct JobConfig {
    pub mode: Mode,
    pub n_nodes: Vec<usize>,
    pub indicator: u8,
    pub stitch_indicator: Option<u8>,
    pub orders: Vec<u32>,
    pub eps: f64,
    pub input: Option<PathBuf>,
    pub builtin: Option<Builtin>,
    pub resolution: Vec<usize>,
    pub output: PathBuf,
    pub format: OutputFormat,
    pub both_methods: bool,
}

/// Summary returned by a successful run.
#[derive(Debug, Clone, Default)]
pub struct JobReport {
    pub files: Vec<PathBuf>,
    pub node_check_max_error: f64,
    pub method_discrepancy: Option<f64>,
}

// ---- ingestion ----

#[derive(Deserialize)]
struct JsonSamples {
    shape: Vec<usize>,
    values: Vec<f64>,
}

/// Reads samples from CSV (`j,value` rows in 1D, `j,k,value` in 2D, every
/// node exactly once) or JSON (`{"shape": [...], "values": [row-major]}`,
/// any dimension). The format is chosen by the `.json` extension.
pub fn ingest_samples(path: &Path, specs: &[GridSpec]) -> Result<SampleGrid, CliError> {
    let text = fs::read_to_string(path).map_err(io_err(path))?;
    if text.trim().is_empty() {
        return Err(CliError::EmptyFile {
            path: path.to_owned(),
        });
    }
    let is_json = path
        .extension()
        .is_some_and(|e| e.eq_ignore_ascii_case("json"));
    if is_json {
        ingest_json(path, &text, specs)
    } else {
        ingest_csv(path, &text, specs)
    }
}

fn ingest_json(path: &Path, text: &str, specs: &[GridSpec]) -> Result<SampleGrid, CliError> {
    let parsed: JsonSamples = serde_json::from_str(text).map_err(|e| CliError::JsonParse {
        path: path.to_owned(),
        message: e.to_string(),
    })?;
    let expected: Vec<usize> = specs.iter().map(|s| s.n_nodes()).collect();
    if parsed.shape != expected {
        return Err(CliError::ShapeMismatch {
            path: path.to_owned(),
            expected,
            actual: parsed.shape,
        });
    }
    Ok(SampleGrid::from_nd(specs.to_vec(), parsed.values)?)
}

fn ingest_csv(path: &Path, text: &str, specs: &[GridSpec]) -> Result<SampleGrid, CliError> {
    let ndim = specs.len();
    if ndim > 2 {
        return Err(CliError::InvalidFlags(
            "CSV input covers one and two axes; use JSON for higher dimensions".to_owned(),
        ));
    }
    let shape: Vec<usize> = specs.iter().map(|s| s.n_nodes()).collect();
    let count: usize = shape.iter().product();
    let header = if ndim == 1 { "j,value" } else { "j,k,value" };
    let mut values = vec![0.0f64; count];
    let mut seen = vec![0usize; count]; // line number that filled the slot
    let row_err = |line: usize, message: String| CliError::CsvRow {
        path: path.to_owned(),
        line,
        message,
    };
    for (line_at, raw) in text.lines().enumerate() {
        let line_no = line_at + 1;
        let row = raw.trim();
        if row.is_empty() || (line_at == 0 && row == header) {
            continue;
        }
        let fields: Vec<&str> = row.split(',').map(str::trim).collect();
        if fields.len() != ndim + 1 {
            return Err(row_err(
                line_no,
                format!(
                    "expected {} comma-separated fields ({header}), got {}",
                    ndim + 1,
                    fields.len()
                ),
            ));
        }
        let mut index = Vec::with_capacity(ndim);
        for (axis, field) in fields[..ndim].iter().enumerate() {
            let j: usize = field
                .parse()
                .map_err(|e| row_err(line_no, format!("bad node index {field:?}: {e}")))?;
            if j == 0 || j > shape[axis] {
                return Err(row_err(
                    line_no,
                    format!(
                        "node index {j} out of range 1..={} on axis {axis}",
                        shape[axis]
                    ),
                ));
            }
            index.push(j);
        }
        let value: f64 = fields[ndim]
            .parse()
            .map_err(|e| row_err(line_no, format!("bad value {:?}: {e}", fields[ndim])))?;
        if !value.is_finite() {
            return Err(CliError::NonFiniteValue {
                path: path.to_owned(),
                line: line_no,
                index,
            });
        }
        let flat = index
            .iter()
            .zip(&shape)
            .fold(0usize, |acc, (&j, &n)| acc * n + (j - 1));
        if seen[flat] != 0 {
            return Err(CliError::DuplicateNode {
                path: path.to_owned(),
                line: line_no,
                index,
            });
        }
        seen[flat] = line_no;
        values[flat] = value;
    }
    if let Some(flat) = seen.iter().position(|&s| s == 0) {
        let mut index = Vec::with_capacity(ndim);
        let mut rem = flat;
        for axis in 0..ndim {
            let stride: usize = shape[axis + 1..].iter().product();
            index.push(rem / stride + 1);
            rem %= stride;
        }
        return Err(CliError::MissingNode {
            path: path.to_owned(),
            index,
        });
    }
    Ok(SampleGrid::from_nd(specs.to_vec(), values)?)
}

// ---- output ----

fn fmt_value(v: f64) -> String {
    format!("{v:.16e}")
}

fn write_atomic(path: &Path, content: &str, written: &mut Vec<PathBuf>) -> Result<(), CliError> {
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(".tmp");
    let tmp = PathBuf::from(tmp);
    fs::write(&tmp, content).map_err(io_err(&tmp))?;
    fs::rename(&tmp, path).map_err(io_err(path))?;
    written.push(path.to_owned());
    Ok(())
}

fn csv_header(ndim: usize) -> String {
    match ndim {
        1 => "x,value".to_owned(),
        2 => "x,y,value".to_owned(),
        d => {
            let mut h = String::new();
            for axis in 1..=d {
                let _ = write!(h, "x{axis},");
            }
            h.push_str("value");
            h
        }
    }
}

fn render_csv(axes: &[Vec<f64>], values: &[f64]) -> String {
    let mut out = String::with_capacity(values.len() * 64);
    out.push_str(&csv_header(axes.len()));
    out.push('\n');
    let shape: Vec<usize> = axes.iter().map(Vec::len).collect();
    for (flat, v) in values.iter().enumerate() {
        let mut rem = flat;
        let mut coords = vec![0usize; shape.len()];
        for axis in (0..shape.len()).rev() {
            coords[axis] = rem % shape[axis];
            rem /= shape[axis];
        }
        for (axis, &c) in coords.iter().enumerate() {
            out.push_str(&fmt_value(axes[axis][c]));
            out.push(',');
        }
        out.push_str(&fmt_value(*v));
        out.push('\n');
    }
    out
}

fn render_grids(specs: &[GridSpec]) -> String {
    specs
        .iter()
        .map(|s| {
            format!(
                "{{\"n_nodes\": {}, \"indicator\": {}}}",
                s.n_nodes(),
                s.indicator()
            )
        })
        .collect::<Vec<_>>()
        .join(", ")
}

fn render_json(specs: &[GridSpec], axes: &[Vec<f64>], values: &[f64]) -> String {
    let mut out = String::with_capacity(values.len() * 32);
    out.push_str("{\n  \"grids\": [");
    out.push_str(&render_grids(specs));
    out.push_str("],\n  \"shape\": [");
    out.push_str(
        &axes
            .iter()
            .map(|a| a.len().to_string())
            .collect::<Vec<_>>()
            .join(", "),
    );
    out.push_str("],\n  \"axes\": [\n");
    for (i, axis) in axes.iter().enumerate() {
        out.push_str("    [");
        out.push_str(
            &axis
                .iter()
                .copied()
                .map(fmt_value)
                .collect::<Vec<_>>()
                .join(", "),
        );
        out.push(']');
        if i + 1 < axes.len() {
            out.push(',');
        }
        out.push('\n');
    }
    out.push_str("  ],\n  \"values\": [");
    out.push_str(
        &values
            .iter()
            .copied()
            .map(fmt_value)
            .collect::<Vec<_>>()
            .join(", "),
    );
    out.push_str("]\n}\n");
    out
}

// ---- job execution ----

fn per_axis<T: Clone>(
    given: &[T],
    default: T,
    ndim: usize,
    what: &'static str,
) -> Result<Vec<T>, CliError> {
    match given.len() {
        0 => Ok(vec![default; ndim]),
        1 => Ok(vec![given[0].clone(); ndim]),
        n if n == ndim => Ok(given.to_vec()),
        n => Err(CliError::AxisCountMismatch {
            what,
            expected: ndim,
            actual: n,
        }),
    }
}

fn output_lattice(resolution: &[usize]) -> Vec<Vec<f64>> {
    resolution
        .iter()
        .map(|&r| {
            (0..r)
                .map(|i| std::f64::consts::TAU * i as f64 / r as f64)
                .collect()
        })
        .collect()
}

/// Runs one job; on error every file written so far is removed.
pub fn run_job(config: &JobConfig) -> Result<JobReport, CliError> {
    let mut written = Vec::new();
    let outcome = match config.mode {
        Mode::PaperExample => run_paper_example(config, &mut written),
        _ => run_interpolation(config, &mut written),
    };
    match outcome {
        Ok(mut report) => {
            report.files = written;
            Ok(report)
        }
        Err(e) => {
            for file in &written {
                let _ = fs::remove_file(file);
            }
            Err(e)
        }
    }
}

fn run_interpolation(
    config: &JobConfig,
    written: &mut Vec<PathBuf>,
) -> Result<JobReport, CliError> {
    let ndim = match config.mode {
        Mode::Interp1d => 1,
        Mode::Interp2d => 2,
        Mode::InterpNd => config.n_nodes.len().max(1),
        Mode::PaperExample => unreachable!("dispatched separately"),
    };
    if config.n_nodes.len() != ndim {
        return Err(CliError::AxisCountMismatch {
            what: "--n node counts",
            expected: ndim,
            actual: config.n_nodes.len(),
        });
    }
    let specs = config
        .n_nodes
        .iter()
        .map(|&n| GridSpec::new(n, config.indicator))
        .collect::<Result<Vec<_>, _>>()?;
    let orders = per_axis(&config.orders, 1u32, ndim, "--order values")?;
    let resolution = per_axis(&config.resolution, 200usize, ndim, "--resolution values")?;
    for (axis, &r) in resolution.iter().enumerate() {
        if r < 2 {
            return Err(CliError::ResolutionTooSmall { axis, value: r });
        }
    }

    let samples = match (&config.input, &config.builtin) {
        (Some(path), None) => ingest_samples(path, &specs)?,
        (None, Some(builtin)) => builtin.generate(&specs)?,
        _ => return Err(CliError::InputSourceRequired),
    };

    let tensor_config =
        TensorSplineConfig::new(&config.n_nodes, config.indicator, &orders, config.eps)?
            .with_stitch_indicator(config.stitch_indicator.unwrap_or(config.indicator))?;
    let surface = FundformSurface::new(&samples, &tensor_config)?;

    // interpolation check at every grid node
    let node_axes: Vec<Vec<f64>> = specs.iter().map(|s| s.nodes()).collect();
    let at_nodes = surface.eval_lattice(&node_axes)?;
    let node_check_max_error = at_nodes
        .iter()
        .zip(samples.values())
        .map(|(a, b)| (a - b).abs())
        .fold(0.0f64, f64::max);
    let tolerance = NODE_CHECK_MULTIPLE * config.eps;
    if node_check_max_error > tolerance {
        return Err(CliError::NodeCheckFailed {
            max_error: node_check_max_error,
            tolerance,
        });
    }

    let axes = output_lattice(&resolution);
    let values = surface.eval_lattice(&axes)?;

    let method_discrepancy = if config.both_methods {
        Some(both_methods_discrepancy(
            &samples,
            &tensor_config,
            &axes,
            &values,
        )?)
    } else {
        None
    };

    let content = match config.format {
        OutputFormat::Csv => render_csv(&axes, &values),
        OutputFormat::Json => render_json(&specs, &axes, &values),
    };
    if let Some(parent) = config.output.parent() {
        if !parent.as_os_str().is_empty() {
            fs::create_dir_all(parent).map_err(io_err(parent))?;
        }
    }
    write_atomic(&config.output, &content, written)?;

    Ok(JobReport {
        files: Vec::new(),
        node_check_max_error,
        method_discrepancy,
    })
}

/// Evaluates the polynomial-coefficient construction over the same lattice
/// and gates the maximum discrepancy against the fundamental route.
fn both_methods_discrepancy(
    samples: &SampleGrid,
    tensor_config: &TensorSplineConfig,
    axes: &[Vec<f64>],
    fundform_values: &[f64],
) -> Result<f64, CliError> {
    let other: Vec<f64> = match samples.ndim() {
        1 => {
            let coeffs = coeffs_1d(samples)?;
            let params = trigsplines::SplineParams::simple(
                tensor_config.stitch_indicator(),
                tensor_config.indicator(),
                tensor_config.order(0),
            )?
            .with_tail_tolerance(tensor_config.tail_tolerance())?;
            axes[0]
                .iter()
                .map(|&x| eval_spline_1d(&coeffs, &params, x))
                .collect::<Result<_, _>>()?
        }
        2 => {
            let coeffs = coeffs_2d(samples)?;
            let poly = PolyformSurface::new(&coeffs, tensor_config)?;
            poly.eval_lattice(&axes[0], &axes[1])?
        }
        d => {
            return Err(CliError::InvalidFlags(format!(
                "--both-methods compares against the polynomial-coefficient construction, which exists for 1 and 2 axes, not {d}"
            )))
        }
    };
    let max = other
        .iter()
        .zip(fundform_values)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0f64, f64::max);
    if max > METHOD_DISCREPANCY_GATE {
        return Err(CliError::MethodDiscrepancy {
            max,
            tolerance: METHOD_DISCREPANCY_GATE,
        });
    }
    Ok(max)
}

struct SurfaceStats {
    file: PathBuf,
    order: u32,
    indicator: u8,
    node_max_error: f64,
    method_max_discrepancy: f64,
    lattice_min: f64,
    lattice_max: f64,
    finite: bool,
}

/// The built-in worked example: 7×9 grids, a single unit sample at node
/// (4, 5), surfaces for (r, I) in {1, 2} × {0, 1} plus a sidecar report with
/// the embedded node checks.
fn run_paper_example(
    config: &JobConfig,
    written: &mut Vec<PathBuf>,
) -> Result<JobReport, CliError> {
    if !config.n_nodes.is_empty()
        || !config.orders.is_empty()
        || config.input.is_some()
        || config.builtin.is_some()
    {
        return Err(CliError::InvalidFlags(
            "paper-example mode fixes the grids, orders and samples; only --output, --resolution, --eps apply"
                .to_owned(),
        ));
    }
    let resolution = per_axis(&config.resolution, 200usize, 2, "--resolution values")?;
    for (axis, &r) in resolution.iter().enumerate() {
        if r < 2 {
            return Err(CliError::ResolutionTooSmall { axis, value: r });
        }
    }
    fs::create_dir_all(&config.output).map_err(io_err(&config.output))?;
    let axes = output_lattice(&resolution);
    let tolerance = NODE_CHECK_MULTIPLE * config.eps;

    let mut stats = Vec::new();
    let mut worst_node = 0.0f64;
    for (order, indicator) in [(1u32, 0u8), (1, 1), (2, 0), (2, 1)] {
        let gx = GridSpec::new(7, indicator)?;
        let gy = GridSpec::new(9, indicator)?;
        let mut values = vec![0.0; 63];
        values[(4 - 1) * 9 + (5 - 1)] = 1.0;
        let samples = SampleGrid::from_2d(gx, gy, values)?;
        let coeffs = coeffs_2d(&samples)?;
        let tensor_config =
            TensorSplineConfig::new(&[7, 9], indicator, &[order, order], config.eps)?;
        let poly = PolyformSurface::new(&coeffs, &tensor_config)?;
        let fund = FundformSurface::new(&samples, &tensor_config)?;

        let node_axes = vec![gx.nodes(), gy.nodes()];
        let poly_nodes = poly.eval_lattice(&node_axes[0], &node_axes[1])?;
        let fund_nodes = fund.eval_lattice(&node_axes)?;
        let mut node_max_error = 0.0f64;
        let mut method_max = 0.0f64;
        for (flat, (p, f)) in poly_nodes.iter().zip(&fund_nodes).enumerate() {
            let want = samples.values()[flat];
            node_max_error = node_max_error.max((p - want).abs()).max((f - want).abs());
            method_max = method_max.max((p - f).abs());
        }
        worst_node = worst_node.max(node_max_error);

        let surface = poly.eval_lattice(&axes[0], &axes[1])?;
        let mut lattice_min = f64::INFINITY;
        let mut lattice_max = f64::NEG_INFINITY;
        let mut finite = true;
        for &v in &surface {
            finite &= v.is_finite();
            lattice_min = lattice_min.min(v);
            lattice_max = lattice_max.max(v);
        }
        let file = config
            .output
            .join(format!("paper_example_r{order}_i{indicator}.csv"));
        write_atomic(&file, &render_csv(&axes, &surface), written)?;
        stats.push(SurfaceStats {
            file,
            order,
            indicator,
            node_max_error,
            method_max_discrepancy: method_max,
            lattice_min,
            lattice_max,
            finite,
        });
    }

    let passed = worst_node <= tolerance && stats.iter().all(|s| s.finite);
    let report_path = config.output.join("report.json");
    write_atomic(
        &report_path,
        &render_report(&stats, tolerance, passed),
        written,
    )?;
    if !passed {
        return Err(CliError::NodeCheckFailed {
            max_error: worst_node,
            tolerance,
        });
    }
    Ok(JobReport {
        files: Vec::new(),
        node_check_max_error: worst_node,
        method_discrepancy: Some(
            stats
                .iter()
                .map(|s| s.method_max_discrepancy)
                .fold(0.0, f64::max),
        ),
    })
}

fn render_report(stats: &[SurfaceStats], tolerance: f64, passed: bool) -> String {
    let mut out = String::new();
    out.push_str("{\n  \"surfaces\": [\n");
    for (i, s) in stats.iter().enumerate() {
        let grids = [
            GridSpec::new(7, s.indicator).expect("static spec"),
            GridSpec::new(9, s.indicator).expect("static spec"),
        ];
        let _ = write!(
            out,
            "    {{\"file\": {:?}, \"order\": {}, \"grids\": [{}], \"node_max_error\": {}, \"method_max_discrepancy\": {}, \"lattice_min\": {}, \"lattice_max\": {}, \"finite\": {}}}",
            s.file.file_name().map(|f| f.to_string_lossy().into_owned()).unwrap_or_default(),
            s.order,
            render_grids(&grids),
            fmt_value(s.node_max_error),
            fmt_value(s.method_max_discrepancy),
            fmt_value(s.lattice_min),
            fmt_value(s.lattice_max),
            s.finite,
        );
        out.push_str(if i + 1 < stats.len() { ",\n" } else { "\n" });
    }
    let _ = write!(
        out,
        "  ],\n  \"node_check_tolerance\": {},\n  \"passed\": {}\n}}\n",
        fmt_value(tolerance),
        passed
    );
    out
}
