use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::sync::atomic::AtomicBool;
use std::time::Instant;

use clap::{Parser, Subcommand};
use sicgram::report::{self, Format};
use sicgram::{
    count_classes, cyclic_reduce, diagnostics, enumerate_classes, free_reduce, parse_letters, CensusConfig,
    DistributionDiagnostics, Engine, Error, Histogram, SurfaceOrder, DEFAULT_PREFIX_LEN, PUNCTURED_TORUS,
};

use crate::svg;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;
pub const EXIT_IO: i32 = 4;
pub const EXIT_INTERRUPTED: i32 = 130;

/// Default ceiling for the enumeration cross-check in `count`.
pub const ENUMERATION_CAP: usize = 14;

#[derive(Debug, Parser)]
#[command(name = "sicgram", version, about = "Self-intersection census of curves on the punctured torus")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Canonical form, length, primitivity and self-intersection of one class.
    Word {
        /// Word over a, b, A (= a⁻¹), B (= b⁻¹).
        word: String,
        #[arg(long, value_name = "ORDER", help = SURFACE_ORDER_HELP)]
        surface_order: Option<String>,
    },
    /// Exact number of non-power classes of a length.
    Count {
        #[arg(long)]
        length: usize,
        /// Also enumerate and compare when the length is at most this.
        #[arg(long, default_value_t = ENUMERATION_CAP)]
        enumerate_cap: usize,
    },
    /// Histogram of self-intersection numbers over every non-power class.
    Census {
        #[arg(long)]
        length: usize,
        #[arg(long, env = "SICGRAM_WORKERS", default_value_t = 1)]
        workers: usize,
        #[arg(long, default_value_t = DEFAULT_PREFIX_LEN)]
        prefix_len: usize,
        /// Directory for per-shard checkpoints; an existing one is resumed.
        #[arg(long, value_name = "DIR")]
        checkpoint: Option<PathBuf>,
        /// Output file; standard output if omitted.
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
        #[arg(long, default_value = "csv", value_parser = ["csv", "json"])]
        format: String,
        #[arg(long, value_name = "ORDER", help = SURFACE_ORDER_HELP)]
        surface_order: Option<String>,
    },
    /// Distribution diagnostics of a histogram file (CSV or JSON report).
    Stats {
        #[arg(long = "in", value_name = "PATH")]
        input: PathBuf,
        /// Length to assume for CSV input, which does not record it.
        #[arg(long)]
        length: Option<usize>,
    },
    /// SVG bar chart of a histogram file (CSV or JSON report).
    Plot {
        #[arg(long = "in", value_name = "PATH")]
        input: PathBuf,
        #[arg(long, value_name = "PATH")]
        out: PathBuf,
        /// Length to assume for CSV input, which does not record it.
        #[arg(long)]
        length: Option<usize>,
    },
}

const SURFACE_ORDER_HELP: &str = "Expert: linear order of the four letters at the base vertex, e.g. abAB. \
Only the default punctured-torus order is validated.";

/// A failed command with its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn new(code: i32, message: impl Into<String>) -> Failure {
        Failure { code, message: message.into() }
    }

    fn io(path: &Path, e: io::Error) -> Failure {
        Failure::new(EXIT_IO, format!("{}: {e}", path.display()))
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match &e {
            Error::Io { .. } => EXIT_IO,
            Error::Interrupted => EXIT_INTERRUPTED,
            Error::NotPrimitive(_) | Error::EmptyWord => EXIT_DOMAIN,
            _ => EXIT_INPUT,
        };
        Failure::new(code, e.to_string())
    }
}

type Outcome = Result<i32, Failure>;

/// Runs a parsed command, writing data to `out` and diagnostics to `err`.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write, cancel: Option<&AtomicBool>) -> i32 {
    let result = match cli.command {
        Command::Word { word, surface_order } => cmd_word(&word, surface_order.as_deref(), out, err),
        Command::Count { length, enumerate_cap } => cmd_count(length, enumerate_cap, out),
        Command::Census { length, workers, prefix_len, checkpoint, out: path, format, surface_order } => {
            cmd_census(
                CensusArgs { length, workers, prefix_len, checkpoint, out: path, format, surface_order },
                cancel,
                out,
                err,
            )
        }
        Command::Stats { input, length } => cmd_stats(&input, length, out),
        Command::Plot { input, out: path, length } => cmd_plot(&input, &path, length),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn surface_order(text: Option<&str>, err: &mut dyn Write) -> Result<SurfaceOrder, Failure> {
    match text {
        None => Ok(PUNCTURED_TORUS),
        Some(t) => {
            let o: SurfaceOrder = t.parse().map_err(|e: Error| Failure::new(EXIT_INPUT, e.to_string()))?;
            if o != PUNCTURED_TORUS {
                let _ = writeln!(err, "warning: surface order {o} is not the validated punctured-torus order");
            }
            Ok(o)
        }
    }
}

fn write_out(out: &mut dyn Write, text: &str) -> Result<(), Failure> {
    out.write_all(text.as_bytes()).map_err(|e| Failure::new(EXIT_IO, format!("standard output: {e}")))
}

pub fn cmd_word(text: &str, order: Option<&str>, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let order = surface_order(order, err)?;
    let letters = parse_letters(text)?;
    let (_, class) = cyclic_reduce(&free_reduce(letters));
    let mut report = format!("canonical: {class}\nlength: {}\n", class.len());
    if class.is_empty() {
        report.push_str("primitive: false\nnote: the trivial class has no self-intersection number\n");
        write_out(out, &report)?;
        return Ok(EXIT_DOMAIN);
    }
    if !class.primitive() {
        let root = class.primitive_root()?;
        let power = class.len() / root.len();
        report.push_str(&format!(
            "primitive: false\nroot: {root}\nnote: the class is the {power}th power of {root}; only non-power classes are supported\n"
        ));
        write_out(out, &report)?;
        return Ok(EXIT_DOMAIN);
    }
    let sic = Engine::new(order).count(class.letters())?;
    report.push_str(&format!("primitive: true\nself_intersection: {sic}\n"));
    write_out(out, &report)?;
    Ok(EXIT_OK)
}

pub fn cmd_count(length: usize, cap: usize, out: &mut dyn Write) -> Outcome {
    if length == 0 || length > sicgram::count::MAX_COUNT_LENGTH {
        return Err(Failure::new(
            EXIT_INPUT,
            format!("--length must be between 1 and {}", sicgram::count::MAX_COUNT_LENGTH),
        ));
    }
    let formula = count_classes(length, true)?;
    let mut report = format!("length: {length}\nformula: {formula}\n");
    let mut code = EXIT_OK;
    if length <= cap {
        let enumerated = enumerate_classes(length, &[])?.count() as u128;
        let verdict = if enumerated == formula { "match" } else { "mismatch" };
        report.push_str(&format!("enumerated: {enumerated}\nverdict: {verdict}\n"));
        if enumerated != formula {
            code = EXIT_DOMAIN;
        }
    }
    write_out(out, &report)?;
    Ok(code)
}

struct CensusArgs {
    length: usize,
    workers: usize,
    prefix_len: usize,
    checkpoint: Option<PathBuf>,
    out: Option<PathBuf>,
    format: String,
    surface_order: Option<String>,
}

fn cmd_census(args: CensusArgs, cancel: Option<&AtomicBool>, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    if args.length == 0 {
        return Err(Failure::new(EXIT_INPUT, "--length must be at least 1"));
    }
    if args.workers == 0 {
        return Err(Failure::new(EXIT_INPUT, "--workers must be at least 1"));
    }
    let format: Format = args.format.parse()?;
    let order = surface_order(args.surface_order.as_deref(), err)?;
    let mut file = match &args.out {
        Some(p) => Some((p, fs::File::create(p).map_err(|e| Failure::io(p, e))?)),
        None => None,
    };

    let start = Instant::now();
    let config = CensusConfig {
        order,
        workers: args.workers,
        prefix_len: args.prefix_len,
        checkpoint_dir: args.checkpoint.clone(),
        cancel,
        ..CensusConfig::new(args.length)
    };
    let shards = sicgram::ShardSpec::partition(args.length, args.prefix_len)?.len();
    let h = config.run_with_progress(|spec, done| {
        let _ = writeln!(
            err,
            "shard {} done ({done}/{shards})",
            if spec.prefix().is_empty() { "<all>".to_string() } else { sicgram::word::letters_to_string(spec.prefix()) }
        );
    })?;
    let d = diagnostics(&h)?;
    let bytes = report::export(&h, &d, &order, format);
    match &mut file {
        Some((p, f)) => f.write_all(&bytes).map_err(|e| Failure::io(p, e))?,
        None => out.write_all(&bytes).map_err(|e| Failure::new(EXIT_IO, format!("standard output: {e}")))?,
    }
    let _ = write!(err, "{}", summary(&h, &d));
    let _ = writeln!(err, "wall_time_s: {:.3}", start.elapsed().as_secs_f64());
    Ok(EXIT_OK)
}

fn fmt_opt(x: Option<f64>) -> String {
    x.map_or_else(|| "undefined".to_string(), |v| format!("{v:.6}"))
}

fn summary(h: &Histogram, d: &DistributionDiagnostics) -> String {
    let length = if h.length() > 0 { h.length().to_string() } else { "unknown".to_string() };
    format!(
        "length: {length}\ntotal: {}\nmean: {:.6}\nvariance: {:.6}\nskewness: {}\nexcess_kurtosis: {}\nfit_distance: {:.6}\nunimodal: {}\n",
        d.total,
        d.mean,
        d.variance,
        fmt_opt(d.skewness),
        fmt_opt(d.excess_kurtosis),
        d.fit_distance,
        h.is_unimodal()
    )
}

fn load_histogram(path: &Path, length: Option<usize>) -> Result<Histogram, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::io(path, e))?;
    let h = report::import(&text)?;
    let h = match length {
        Some(n) if h.length() == 0 => Histogram::from_bins(n, h.iter()),
        _ => h,
    };
    if h.is_empty() {
        return Err(Failure::new(EXIT_INPUT, format!("{}: histogram has no bins", path.display())));
    }
    Ok(h)
}

fn cmd_stats(input: &Path, length: Option<usize>, out: &mut dyn Write) -> Outcome {
    let h = load_histogram(input, length)?;
    let d = diagnostics(&h)?;
    write_out(out, &summary(&h, &d))?;
    Ok(EXIT_OK)
}

fn cmd_plot(input: &Path, output: &Path, length: Option<usize>) -> Outcome {
    let h = load_histogram(input, length)?;
    fs::write(output, svg::render(&h)).map_err(|e| Failure::io(output, e))?;
    Ok(EXIT_OK)
}
