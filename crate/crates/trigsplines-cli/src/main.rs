use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use trigsplines_cli::{run_job, Builtin, JobConfig, Mode, OutputFormat};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    #[value(name = "interp-1d")]
    Interp1d,
    #[value(name = "interp-2d")]
    Interp2d,
    #[value(name = "interp-nd")]
    InterpNd,
    #[value(name = "paper-example")]
    PaperExample,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

/// Periodic trigonometric spline interpolation on uniform grids over [0, 2π).
///
/// Builds the spline through the given samples and writes its values on a
/// uniform output lattice as plot-ready CSV or JSON.
#[derive(Debug, Parser)]
#[command(name = "trigsplines", version)]
struct Cli {
    /// What to compute.
    #[arg(long, value_enum)]
    mode: ModeArg,

    /// Nodes per axis (repeat once per axis; odd, at least 3).
    #[arg(long = "n")]
    n_nodes: Vec<usize>,

    /// Interpolation grid indicator I (0 or 1, shared by all axes).
    #[arg(long, default_value_t = 0)]
    indicator: u8,

    /// Stitching grid indicator I1; defaults to --indicator.
    #[arg(long)]
    stitch_indicator: Option<u8>,

    /// Smoothness order r per axis (repeat per axis or give once; default 1).
    #[arg(long = "order")]
    orders: Vec<u32>,

    /// Series tail tolerance.
    #[arg(long, default_value_t = 1e-10)]
    eps: f64,

    /// Sample file: CSV rows "j,value" (1D) or "j,k,value" (2D), or JSON
    /// {"shape": [...], "values": [row-major]}.
    #[arg(long, conflicts_with = "builtin")]
    input: Option<PathBuf>,

    /// Built-in samples: const1 | coskx:K[,K...] | delta:J[,J...].
    #[arg(long)]
    builtin: Option<String>,

    /// Output lattice resolution per axis (repeat per axis or give once;
    /// default 200).
    #[arg(long = "resolution")]
    resolution: Vec<usize>,

    /// Output file (interp modes) or directory (paper-example).
    #[arg(long)]
    output: PathBuf,

    /// Output file format.
    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    format: FormatArg,

    /// Also evaluate the polynomial-coefficient construction and require
    /// both methods to agree.
    #[arg(long)]
    both_methods: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let builtin = match cli.builtin.as_deref().map(Builtin::parse).transpose() {
        Ok(b) => b,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::FAILURE;
        }
    };
    let config = JobConfig {
        mode: match cli.mode {
            ModeArg::Interp1d => Mode::Interp1d,
            ModeArg::Interp2d => Mode::Interp2d,
            ModeArg::InterpNd => Mode::InterpNd,
            ModeArg::PaperExample => Mode::PaperExample,
        },
        n_nodes: cli.n_nodes,
        indicator: cli.indicator,
        stitch_indicator: cli.stitch_indicator,
        orders: cli.orders,
        eps: cli.eps,
        input: cli.input,
        builtin,
        resolution: cli.resolution,
        output: cli.output,
        format: match cli.format {
            FormatArg::Csv => OutputFormat::Csv,
            FormatArg::Json => OutputFormat::Json,
        },
        both_methods: cli.both_methods,
    };
    match run_job(&config) {
        Ok(report) => {
            for file in &report.files {
                println!("wrote {}", file.display());
            }
            println!(
                "node check: max |spline - sample| = {:.3e}",
                report.node_check_max_error
            );
            if let Some(d) = report.method_discrepancy {
                println!("method discrepancy: max |polyform - fundform| = {d:.3e}");
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
