//! Argument parsing and the subcommands.

use std::fmt;
use std::fs::{self, File};
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hkrate_core::asymptotics::offset_curve;
use hkrate_core::region::{Axes, AxisRange, GridRow, PointRates};
use hkrate_core::{
    crossover, db_to_linear, etw_rate, rs_rate, ChannelParams, Error, OffsetScheme, Scheme,
};
use serde_json::{json, Value};

use crate::format::{sig, CsvWriter};
use crate::svg::{LinePlot, Series};
use crate::verify::{run_suite, Suite, VerifyConfig, DEFAULT_SEED};

/// Relative `--output` and `--plot` paths resolve against this directory when set.
pub const OUT_DIR_ENV: &str = "HKRATE_OUT_DIR";

#[derive(Debug, Parser)]
#[command(name = "hkrate", version, about = "Optimized Han-Kobayashi sum rates for the symmetric Gaussian interference channel")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Units {
    Linear,
    Db,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RateFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AxesArg {
    /// x = a, y = P in dB
    AP,
    /// x = SNR in dB, y = INR in dB
    SnrInr,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Rates of every scheme at one channel
    Rate {
        /// Cross-gain a, 0 < a < 1
        #[arg(long, allow_negative_numbers = true)]
        a: f64,
        /// Transmit power P
        #[arg(long, allow_negative_numbers = true)]
        p: f64,
        #[arg(long, value_enum, default_value_t = Units::Linear)]
        units: Units,
        #[arg(long, value_enum, default_value_t = RateFormat::Text)]
        format: RateFormat,
        /// Also optimize the two time-sharing schemes
        #[arg(long)]
        ts: bool,
    },
    /// Rates along the a axis at fixed power
    Sweep {
        #[arg(long, allow_negative_numbers = true)]
        p: f64,
        #[arg(long, value_enum, default_value_t = Units::Linear)]
        units: Units,
        #[arg(long, default_value_t = 0.01, allow_negative_numbers = true)]
        a_min: f64,
        #[arg(long, default_value_t = 0.99, allow_negative_numbers = true)]
        a_max: f64,
        #[arg(long, default_value_t = 99)]
        steps: usize,
        #[arg(long)]
        ts: bool,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
        #[arg(long)]
        output: Option<PathBuf>,
        /// SVG plot of the rates against a
        #[arg(long)]
        plot: Option<PathBuf>,
    },
    /// Winning scheme over a grid
    Region {
        #[arg(long, value_enum, default_value_t = AxesArg::AP)]
        axes: AxesArg,
        /// Defaults: 0.01 for a-p, 0 dB for snr-inr
        #[arg(long, allow_negative_numbers = true)]
        x_min: Option<f64>,
        /// Defaults: 0.99 for a-p, 40 dB for snr-inr
        #[arg(long, allow_negative_numbers = true)]
        x_max: Option<f64>,
        /// Defaults: 99 for a-p, 81 for snr-inr
        #[arg(long)]
        x_steps: Option<usize>,
        /// Default 0 dB
        #[arg(long, allow_negative_numbers = true)]
        y_min: Option<f64>,
        /// Default 40 dB
        #[arg(long, allow_negative_numbers = true)]
        y_max: Option<f64>,
        /// Default 81
        #[arg(long)]
        y_steps: Option<usize>,
        /// Adds the time-sharing gains (slow)
        #[arg(long)]
        ts: bool,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// High-SNR rate offsets and their crossovers
    Asymptotics {
        #[arg(long, default_value_t = 0.01)]
        a_min: f64,
        #[arg(long, default_value_t = 0.99)]
        a_max: f64,
        #[arg(long, default_value_t = 99)]
        steps: usize,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long)]
        plot: Option<PathBuf>,
    },
    /// Randomized checks against independent references
    Verify {
        /// One of dominance, monotonicity, sym-oracle, asym-residual, conjecture,
        /// continuity, etw, asymptote, or all
        #[arg(long, default_value = "all")]
        suite: String,
        /// Samples per suite (default depends on the suite)
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Points per axis of the brute-force split grid
        #[arg(long, default_value_t = 1001)]
        oracle_steps: usize,
    },
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Domain(Error),
    Io(PathBuf, io::Error),
    Verification(usize),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Verification(_) => 1,
            _ => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "{m}"),
            CliError::Domain(e) => write!(f, "{e}"),
            CliError::Io(p, e) if p.as_os_str().is_empty() => write!(f, "stdout: {e}"),
            CliError::Io(p, e) => write!(f, "{}: {e}", p.display()),
            CliError::Verification(n) => write!(f, "{n} verification suite(s) failed"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Domain(e)
    }
}

type CliResult<T = ()> = std::result::Result<T, CliError>;

pub fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("hkrate: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

pub fn run(cli: Cli) -> CliResult {
    match cli.command {
        Command::Rate { a, p, units, format, ts } => rate(a, to_linear(p, units), format, ts),
        Command::Sweep {
            p,
            units,
            a_min,
            a_max,
            steps,
            ts,
            format,
            output,
            plot,
        } => {
            let range = AxisRange::new(a_min, a_max, steps)?;
            sweep(to_linear(p, units), &range, ts, format, output, plot)
        }
        Command::Region {
            axes,
            x_min,
            x_max,
            x_steps,
            y_min,
            y_max,
            y_steps,
            ts,
            format,
            output,
        } => {
            let (axes, dx) = match axes {
                AxesArg::AP => (Axes::InterferencePower, (0.01, 0.99, 99)),
                AxesArg::SnrInr => (Axes::SnrInr, (0.0, 40.0, 81)),
            };
            let spec = hkrate_core::GridSpec {
                axes,
                x: AxisRange::new(x_min.unwrap_or(dx.0), x_max.unwrap_or(dx.1), x_steps.unwrap_or(dx.2))?,
                y: AxisRange::new(y_min.unwrap_or(0.0), y_max.unwrap_or(40.0), y_steps.unwrap_or(81))?,
                time_sharing: ts,
            };
            region(&spec, format, output)
        }
        Command::Asymptotics {
            a_min,
            a_max,
            steps,
            format,
            output,
            plot,
        } => asymptotics(&AxisRange::new(a_min, a_max, steps)?, format, output, plot),
        Command::Verify {
            suite,
            samples,
            seed,
            oracle_steps,
        } => {
            let suites = if suite == "all" {
                Suite::ALL.to_vec()
            } else {
                vec![Suite::from_name(&suite).ok_or_else(|| CliError::Usage(format!("unknown suite '{suite}'")))?]
            };
            verify(
                &suites,
                &VerifyConfig {
                    samples,
                    seed,
                    oracle_steps,
                },
            )
        }
    }
}

fn to_linear(p: f64, units: Units) -> f64 {
    match units {
        Units::Linear => p,
        Units::Db => db_to_linear(p),
    }
}

/// Applies [`OUT_DIR_ENV`] to a relative path.
pub fn resolve_output(path: &Path) -> PathBuf {
    match std::env::var_os(OUT_DIR_ENV) {
        Some(dir) if path.is_relative() && !dir.is_empty() => Path::new(&dir).join(path),
        _ => path.to_path_buf(),
    }
}

fn create(path: &Path) -> CliResult<(PathBuf, File)> {
    let path = resolve_output(path);
    if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
        fs::create_dir_all(parent).map_err(|e| CliError::Io(parent.to_path_buf(), e))?;
    }
    let file = File::create(&path).map_err(|e| CliError::Io(path.clone(), e))?;
    Ok((path, file))
}

/// Writes `body` to `output`, or to stdout when absent.
fn emit(output: Option<&Path>, body: impl FnOnce(&mut dyn Write) -> io::Result<()>) -> CliResult {
    match output {
        Some(path) => {
            let (path, file) = create(path)?;
            let mut w = BufWriter::new(file);
            body(&mut w).and_then(|()| w.flush()).map_err(|e| CliError::Io(path, e))
        }
        None => {
            let stdout = io::stdout();
            let mut w = BufWriter::new(stdout.lock());
            body(&mut w).and_then(|()| w.flush()).map_err(|e| CliError::Io(PathBuf::new(), e))
        }
    }
}

fn write_plot(path: &Path, plot: &LinePlot) -> CliResult {
    let (path, mut file) = create(path)?;
    file.write_all(plot.render().as_bytes()).map_err(|e| CliError::Io(path, e))
}

fn json_lines(w: &mut dyn Write, value: &Value) -> io::Result<()> {
    serde_json::to_writer_pretty(&mut *w, value)?;
    writeln!(w)
}

fn scheme_name(s: Scheme) -> &'static str {
    s.name()
}

fn rate(a: f64, p: f64, format: RateFormat, ts: bool) -> CliResult {
    let ch = ChannelParams::new(a, p)?;
    let rates = PointRates::evaluate(&ch, ts)?;
    let rs = rs_rate(&ch)?;
    let etw = etw_rate(&ch);
    let winner = match rs.params {
        Some(hkrate_core::SchemeParams::Winner(s)) => s,
        _ => rs.scheme,
    };
    let mut fields: Vec<(&str, f64)> = vec![
        ("a", a),
        ("P", p),
        ("R_sym", rates.sym),
        ("lambda_sym", rates.lambda_sym),
        ("R_asym", rates.asym),
        ("lambda_asym", rates.lambda_asym),
        ("R_orth", rates.orth),
        ("R_ETW", rates.etw),
        ("R_RS", rs.rate),
    ];
    if let Some((r_ts, r_sason)) = rates.time_sharing {
        fields.push(("R_TS", r_ts));
        fields.push(("R_Sason", r_sason));
    }
    let label = rates.label;
    emit(None, |w| match format {
        RateFormat::Text => {
            for (k, v) in &fields {
                writeln!(w, "{k}: {}", sig(*v))?;
            }
            if etw.clamped {
                writeln!(w, "ETW_clamped: true")?;
            }
            writeln!(w, "RS_winner: {}", scheme_name(winner))?;
            writeln!(w, "label: {} ({})", label.code(), label.name())
        }
        RateFormat::Json => {
            let mut obj = serde_json::Map::new();
            for (k, v) in &fields {
                obj.insert((*k).to_owned(), json!(v));
            }
            obj.insert("ETW_clamped".into(), json!(etw.clamped));
            obj.insert("RS_winner".into(), json!(scheme_name(winner)));
            obj.insert("label".into(), json!(label.code()));
            obj.insert("label_name".into(), json!(label.name()));
            json_lines(w, &Value::Object(obj))
        }
    })
}

fn sweep(p: f64, range: &AxisRange, ts: bool, format: TableFormat, output: Option<PathBuf>, plot: Option<PathBuf>) -> CliResult {
    ChannelParams::new(0.5, p)?;
    let rows = crate::sweep(p, range, ts)?;
    let mut header = vec!["a", "R_sym", "R_asym", "R_orth", "R_ETW"];
    if ts {
        header.extend(["R_TS", "R_Sason"]);
    }
    let values = |(a, r): &(f64, PointRates)| {
        let mut v = vec![*a, r.sym, r.asym, r.orth, r.etw];
        if let Some((t, s)) = r.time_sharing {
            v.extend([t, s]);
        }
        v
    };
    emit(output.as_deref(), |w| match format {
        TableFormat::Csv => {
            let mut csv = CsvWriter::new(w);
            csv.header(&header)?;
            for row in &rows {
                csv.row(values(row).into_iter().map(sig))?;
            }
            Ok(())
        }
        TableFormat::Json => {
            let arr = rows
                .iter()
                .map(|row| Value::Object(header.iter().zip(values(row)).map(|(k, v)| ((*k).to_owned(), json!(v))).collect()))
                .collect();
            json_lines(w, &Value::Array(arr))
        }
    })?;
    if let Some(path) = plot {
        let series = (1..header.len())
            .map(|k| Series {
                name: header[k].to_owned(),
                points: rows.iter().map(|row| (row.0, values(row)[k])).collect(),
            })
            .collect();
        write_plot(
            &path,
            &LinePlot {
                title: format!("sum rate at P = {}", sig(p)),
                x_label: "a".into(),
                y_label: "bits per channel use".into(),
                series,
            },
        )?;
    }
    Ok(())
}

fn region_fields(row: &GridRow, ts: bool) -> Vec<String> {
    let mut f = vec![sig(row.x), sig(row.y), sig(row.a), sig(row.p)];
    match &row.rates {
        Some(r) => {
            f.push(r.label.code().to_string());
            f.extend([r.sym, r.asym, r.orth].map(sig));
            if let Some((t, s)) = r.ts_gains().filter(|_| ts) {
                f.extend([t, s].map(sig));
            }
        }
        None => {
            f.push("0".into());
            f.extend(std::iter::repeat_n(String::new(), if ts { 5 } else { 3 }));
        }
    }
    f
}

fn region(spec: &hkrate_core::GridSpec, format: TableFormat, output: Option<PathBuf>) -> CliResult {
    let scan = crate::par_scan(spec)?;
    if scan.rows.iter().all(|r| r.rates.is_none()) {
        return Err(CliError::Usage("no grid point lies inside 0 < a < 1".into()));
    }
    let ts = spec.time_sharing;
    let mut header = vec!["x", "y", "a", "p", "label", "R_sym", "R_asym", "R_orth"];
    if ts {
        header.extend(["ts_adv", "sason_adv"]);
    }
    emit(output.as_deref(), |w| match format {
        TableFormat::Csv => {
            let mut csv = CsvWriter::new(w);
            csv.header(&header)?;
            for row in &scan.rows {
                csv.row(region_fields(row, ts))?;
            }
            Ok(())
        }
        TableFormat::Json => {
            let arr = scan
                .rows
                .iter()
                .map(|row| {
                    let mut o = serde_json::Map::new();
                    o.insert("x".into(), json!(row.x));
                    o.insert("y".into(), json!(row.y));
                    o.insert("a".into(), json!(row.a));
                    o.insert("p".into(), json!(row.p));
                    o.insert("label".into(), json!(row.label().map_or(0, |l| l.code())));
                    if let Some(r) = &row.rates {
                        o.insert("R_sym".into(), json!(r.sym));
                        o.insert("R_asym".into(), json!(r.asym));
                        o.insert("R_orth".into(), json!(r.orth));
                        if let Some((t, s)) = r.ts_gains() {
                            o.insert("ts_adv".into(), json!(t));
                            o.insert("sason_adv".into(), json!(s));
                        }
                    }
                    Value::Object(o)
                })
                .collect();
            json_lines(w, &Value::Array(arr))
        }
    })
}

const CROSSOVER_PAIRS: [(OffsetScheme, OffsetScheme); 3] = [
    (OffsetScheme::Sym, OffsetScheme::Asym),
    (OffsetScheme::Sym, OffsetScheme::Orth),
    (OffsetScheme::Asym, OffsetScheme::Orth),
];

fn asymptotics(range: &AxisRange, format: TableFormat, output: Option<PathBuf>, plot: Option<PathBuf>) -> CliResult {
    let a: Vec<f64> = range.values().collect();
    let curves = OffsetScheme::ALL
        .iter()
        .map(|&s| offset_curve(s, &a))
        .collect::<hkrate_core::Result<Vec<_>>>()?;
    let header: Vec<String> = std::iter::once("a".to_owned())
        .chain(OffsetScheme::ALL.iter().map(|s| format!("dR_{}", s.name())))
        .collect();
    let header_refs: Vec<&str> = header.iter().map(String::as_str).collect();
    let row = |i: usize| std::iter::once(a[i]).chain(curves.iter().map(move |c| c.values[i].1));

    emit(output.as_deref(), |w| match format {
        TableFormat::Csv => {
            let mut csv = CsvWriter::new(w);
            csv.header(&header_refs)?;
            for i in 0..a.len() {
                csv.row(row(i).map(sig))?;
            }
            Ok(())
        }
        TableFormat::Json => {
            let arr = (0..a.len())
                .map(|i| Value::Object(header.iter().cloned().zip(row(i).map(|v| json!(v))).collect()))
                .collect();
            json_lines(w, &Value::Array(arr))
        }
    })?;

    let mut report = String::new();
    for (first, second) in CROSSOVER_PAIRS {
        let found = match crossover(first, second) {
            Ok(x) => format!("{x:.6}"),
            Err(Error::NoCrossover) => "none".to_owned(),
            Err(e) => return Err(e.into()),
        };
        report.push_str(&format!("crossover {}/{}: {found}\n", first.name(), second.name()));
    }
    // keep stdout clean for the table
    if output.is_some() {
        print!("{report}");
    } else {
        eprint!("{report}");
    }

    if let Some(path) = plot {
        let series = curves
            .iter()
            .map(|c| Series {
                name: format!("dR_{}", c.scheme.name()),
                points: c.values.clone(),
            })
            .collect();
        write_plot(
            &path,
            &LinePlot {
                title: "high-SNR rate offset".into(),
                x_label: "a".into(),
                y_label: "R - log2 P (bits)".into(),
                series,
            },
        )?;
    }
    Ok(())
}

fn verify(suites: &[Suite], cfg: &VerifyConfig) -> CliResult {
    let mut failed = 0;
    for &suite in suites {
        let report = run_suite(suite, cfg);
        println!("{report}");
        if !report.passed() {
            failed += 1;
        }
    }
    if failed > 0 {
        Err(CliError::Verification(failed))
    } else {
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn clap_definition_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn parses_negative_db() {
        let cli = Cli::try_parse_from(["hkrate", "rate", "--a", "0.5", "--p", "-3", "--units", "db"]).unwrap();
        match cli.command {
            Command::Rate { p, units, .. } => assert_eq!((p, units), (-3.0, Units::Db)),
            _ => panic!(),
        }
    }

    #[test]
    fn exit_codes() {
        assert_eq!(CliError::Verification(1).exit_code(), 1);
        assert_eq!(CliError::Domain(Error::Interference(1.2)).exit_code(), 2);
        assert_eq!(CliError::Usage(String::new()).exit_code(), 2);
    }
}
