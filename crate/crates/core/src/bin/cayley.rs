use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use cayley::enumeration::AffineModel;
use cayley::report::{self, CountMethod, Level, LocalMethod, Place, RunOptions};
use cayley::{CharIndex, HeightBound};

#[derive(Parser)]
#[command(name = "cayley", version, about = "Point counts and constant checks for the Cayley ruled cubic")]
struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Seed for the grid oracle's visiting order; never changes results.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Include wall-clock times in reports.
    #[arg(long, global = true)]
    timings: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModelArg {
    M1,
    M2,
    Both,
}

#[derive(Subcommand)]
enum Cmd {
    /// Count points of height at most B.
    Count {
        /// Height bound, a positive decimal.
        #[arg(long = "b")]
        b: HeightBound,
        #[arg(long, value_enum, default_value = "lines")]
        method: CountMethod,
        /// `csv` lists the points instead of counting them.
        #[arg(long, value_enum, default_value = "json")]
        out: OutFormat,
    },
    /// Per-line counts against their predicted densities.
    Lines {
        #[arg(long = "b")]
        b: HeightBound,
        #[arg(long, default_value_t = 10)]
        top: usize,
    },
    /// The leading constant by every route.
    Constant {
        /// Series truncation.
        #[arg(long = "t", default_value_t = 2000)]
        t: u64,
        #[arg(long, default_value_t = 100_000)]
        p_max: u64,
        /// Characters kept in the Poisson sum.
        #[arg(long = "m", default_value_t = 50)]
        m: u64,
    },
    /// A local Fourier transform of the height.
    Localfactor {
        /// A prime, or `inf` for the archimedean place.
        #[arg(long)]
        p: Place,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        a1: i64,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        a2: i64,
        #[arg(long, default_value_t = 2.0)]
        s: f64,
        #[arg(long, value_enum, default_value = "closed")]
        method: LocalMethod,
    },
    /// The Poisson-summation identity and the lattice ordering identity.
    Identity {
        #[arg(long = "t", default_value_t = 2000)]
        t: u64,
        #[arg(long = "m", default_value_t = 50)]
        m: u64,
        #[arg(long, default_value_t = 500)]
        lattice: u64,
    },
    /// Integral points on the affine models.
    Affine {
        #[arg(long, value_enum, default_value = "both")]
        model: ModelArg,
        /// Bounds, comma separated.
        #[arg(long = "b", value_delimiter = ',', default_value = "1000,10000")]
        b: Vec<u64>,
    },
    /// Run the cross-checks and the adjudication.
    Verify {
        #[arg(long, value_enum, default_value = "quick")]
        level: Level,
    },
}

fn run(cli: Cli) -> cayley::Result<u8> {
    let opts = RunOptions { seed: cli.seed, timings: cli.timings };
    let mut out = std::io::stdout().lock();
    let mut emit = |text: String| out.write_all(text.as_bytes()).expect("stdout");
    let code = match cli.cmd {
        Cmd::Count { b, method, out: OutFormat::Json } => {
            let r = report::cmd_count(&b, method, &opts)?;
            emit(report::to_json(&r));
            u8::from(!r.consistent())
        }
        Cmd::Count { b, method, out: OutFormat::Csv } => {
            let mut buf = Vec::new();
            let equal = report::cmd_count_csv(&b, method, &mut buf)?;
            emit(String::from_utf8(buf).expect("csv is utf-8"));
            u8::from(!equal)
        }
        Cmd::Lines { b, top } => {
            emit(report::to_json(&report::cmd_lines(&b, top, &opts)?));
            0
        }
        Cmd::Constant { t, p_max, m } => {
            emit(report::to_json(&report::cmd_constant(t, p_max, m, &opts)?));
            0
        }
        Cmd::Localfactor { p, a1, a2, s, method } => {
            emit(report::to_json(&report::cmd_localfactor(p, CharIndex::new(a1, a2), s, method, &opts)?));
            0
        }
        Cmd::Identity { t, m, lattice } => {
            emit(report::to_json(&report::cmd_identity(t, m, lattice, &opts)?));
            0
        }
        Cmd::Affine { model, b } => {
            let models = match model {
                ModelArg::M1 => vec![AffineModel::M1],
                ModelArg::M2 => vec![AffineModel::M2],
                ModelArg::Both => vec![AffineModel::M1, AffineModel::M2],
            };
            emit(report::to_json(&report::cmd_affine(&models, &b, &opts)?));
            0
        }
        Cmd::Verify { level } => {
            let r = report::cmd_verify(level, &opts)?;
            emit(report::to_json(&r));
            for name in &r.gating_failures {
                log::error!("gating check failed: {name}");
            }
            r.exit_code as u8
        }
    };
    Ok(code)
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
