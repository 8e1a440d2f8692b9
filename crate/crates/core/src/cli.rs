//! Command-line front end.

use std::fs::File;
use std::io::{self, BufWriter, Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::bounds::{bound_row, PlanarBounds};
use crate::error::{Error, Result};
use crate::graph6::{from_graph6, to_graph6_string};
use crate::spectral::{perron_enclosure, DEFAULT_MAX_ITER, DEFAULT_TOL};
use crate::triangulation::enumerate_classes_counted;
use crate::verifier::{
    emit_reports, round_down, round_up, table1_summary, verify_range, Bounds, Expectations, ReportFormat,
};

pub const THREADS_ENV: &str = "MOPCHECK_THREADS";

/// Exit status when every check passed.
pub const EXIT_OK: u8 = 0;
/// Exit status for usage and runtime errors.
pub const EXIT_ERROR: u8 = 1;
/// Exit status when a result contradicts the reference values.
pub const EXIT_MISMATCH: u8 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "mopcheck",
    version,
    about = "Spectral extremal checks for maximal outerplanar graphs"
)]
pub struct Cli {
    /// Worker threads (0 = one per core). Defaults to $MOPCHECK_THREADS.
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List one representative per isomorphism class of order n.
    Enumerate {
        #[arg(short = 'n')]
        n: usize,
        #[arg(long, value_enum, default_value_t = GraphFormat::Graph6)]
        format: GraphFormat,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// Find the spectral maximizer for every order in a range.
    Verify {
        /// An order `k` or a range `lo..hi`.
        #[arg(short = 'n', value_parser = parse_range)]
        range: (usize, usize),
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        #[arg(long)]
        report: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = ReportKind::Json)]
        format: ReportKind,
        /// Keep measured runtimes instead of zeroing them.
        #[arg(long)]
        timing: bool,
        #[arg(long, hide = true)]
        expectations: Option<PathBuf>,
    },
    /// Class counts for orders 6 through 16 against the reference row and bounds.
    Table1,
    /// Spectral-radius enclosure of a graph given in graph6.
    Spectral {
        /// Read from stdin when omitted.
        #[arg(long)]
        graph6: Option<String>,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
    /// Closed-form bounds for every order in a range.
    Bounds {
        #[arg(short = 'n', value_parser = parse_range)]
        range: (usize, usize),
        #[arg(long, value_enum, default_value_t = TableFormat::Text)]
        format: TableFormat,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    Graph6,
    Native,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ReportKind {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Text,
    Csv,
}

/// Accepts `k`, `lo..hi` or `lo..=hi`.
pub fn parse_range(s: &str) -> std::result::Result<(usize, usize), String> {
    let parse = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("{t:?}: {e}"));
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (parse(a)?, parse(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let k = parse(s)?;
            (k, k)
        }
    };
    if lo > hi {
        return Err(format!("empty range {s}"));
    }
    Ok((lo, hi))
}

fn thread_count(flag: Option<usize>) -> Result<usize> {
    if let Some(t) = flag {
        return Ok(t);
    }
    match std::env::var(THREADS_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Error::InvalidRange(format!("{THREADS_ENV}={v} is not a thread count"))),
        Err(_) => Ok(0),
    }
}

/// Runs a parsed command line inside a pool of the requested size and returns the exit status.
pub fn run(cli: Cli, out: &mut (dyn Write + Send)) -> Result<u8> {
    let threads = thread_count(cli.threads)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::Io(io::Error::other(e.to_string())))?;
    pool.install(|| dispatch(cli.command, out))
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<u8> {
    match command {
        Command::Enumerate { n, format, output } => enumerate(n, format, output, out),
        Command::Verify {
            range,
            tol,
            report,
            format,
            timing,
            expectations,
        } => verify(range, tol, report, format, timing, expectations, out),
        Command::Table1 => table1(out),
        Command::Spectral { graph6, tol } => spectral(graph6, tol, out),
        Command::Bounds { range, format } => bounds(range, format, out),
    }
}

fn enumerate(n: usize, format: GraphFormat, output: Option<PathBuf>, out: &mut dyn Write) -> Result<u8> {
    let classes = enumerate_classes_counted(n)?.classes;
    let mut sink: Box<dyn Write + '_> = match output {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(&mut *out),
    };
    for t in &classes {
        match format {
            GraphFormat::Graph6 => writeln!(sink, "{}", to_graph6_string(&t.to_graph()))?,
            GraphFormat::Native => writeln!(sink, "{t}")?,
        }
    }
    sink.flush()?;
    Ok(EXIT_OK)
}

fn verify(
    (lo, hi): (usize, usize),
    tol: f64,
    report: Option<PathBuf>,
    format: ReportKind,
    timing: bool,
    expectations: Option<PathBuf>,
    out: &mut dyn Write,
) -> Result<u8> {
    let expectations = match expectations {
        Some(path) => Expectations::from_json(&std::fs::read_to_string(path)?)?,
        None => Expectations::builtin(),
    };
    let mut reports = verify_range(lo, hi, tol)?;
    if !timing {
        for r in &mut reports {
            r.runtime_ms = 0;
        }
    }
    for r in &reports {
        let margin = r.margin.map_or_else(|| "-".to_string(), |m| format!("{m:.4e}"));
        write!(
            out,
            "n = {:>2}  classes = {:>7}  λ_max = {:.4}  λ_fan = {:.4}  fan extremal: {:<5}  margin = {margin}",
            r.n,
            r.class_count,
            r.lambda_extremal.midpoint(),
            r.lambda_fan.midpoint(),
            r.conjecture_holds,
        )?;
        if timing {
            write!(out, "  {} ms", r.runtime_ms)?;
        }
        writeln!(out)?;
    }
    writeln!(out)?;
    out.write_all(table1_summary(&reports).as_bytes())?;

    if let Some(path) = report {
        let kind = match format {
            ReportKind::Json => ReportFormat::Json,
            ReportKind::Csv => ReportFormat::Csv,
        };
        emit_reports(&reports, kind, BufWriter::new(File::create(path)?))?;
    }

    let violations = expectations.violations(&reports);
    for v in &violations {
        writeln!(out, "MISMATCH {v}")?;
    }
    Ok(if violations.is_empty() { EXIT_OK } else { EXIT_MISMATCH })
}

fn table1(out: &mut dyn Write) -> Result<u8> {
    let expectations = Expectations::builtin();
    let mut ok = true;
    let mut counts = Vec::new();
    for n in 6..=16 {
        counts.push((n, enumerate_classes_counted(n)?.classes.len() as u64));
    }
    let row: Vec<String> = counts.iter().filter(|c| c.0 <= 13).map(|c| c.1.to_string()).collect();
    writeln!(out, "{}", row.join(" "))?;
    for &(n, count) in &counts {
        let (note, pass) = if let Some(&want) = expectations.class_counts.get(&n) {
            (format!("reference {want}"), count == want)
        } else if let Some(&bound) = expectations.class_count_bounds.get(&n) {
            (format!("bound {bound}"), count <= bound)
        } else {
            (String::new(), true)
        };
        ok &= pass;
        writeln!(
            out,
            "S({n:>2}) = {count:>6}  {note:<18} {}",
            if pass { "ok" } else { "MISMATCH" }
        )?;
    }
    Ok(if ok { EXIT_OK } else { EXIT_MISMATCH })
}

#[derive(Serialize)]
struct SpectralOutput {
    order: usize,
    lower: f64,
    upper: f64,
    iterations: usize,
    vector: Vec<f64>,
}

fn spectral(graph6: Option<String>, tol: f64, out: &mut dyn Write) -> Result<u8> {
    let code = match graph6 {
        Some(code) => code,
        None => {
            let mut text = String::new();
            io::stdin().read_to_string(&mut text)?;
            text
        }
    };
    let g = from_graph6(code.trim().as_bytes())?;
    let e = perron_enclosure(&g, tol, DEFAULT_MAX_ITER)?;
    let b = Bounds::from_enclosure(&e);
    let vector = e
        .vector
        .iter()
        .map(|&x| {
            let (lo, hi) = (round_down(x), round_up(x));
            if x - lo <= hi - x {
                lo
            } else {
                hi
            }
        })
        .collect();
    let body = SpectralOutput {
        order: g.order(),
        lower: b.lower,
        upper: b.upper,
        iterations: e.iterations,
        vector,
    };
    serde_json::to_writer_pretty(&mut *out, &body)?;
    writeln!(out)?;
    Ok(EXIT_OK)
}

fn bounds((lo, hi): (usize, usize), format: TableFormat, out: &mut dyn Write) -> Result<u8> {
    let rows = (lo..=hi).map(bound_row).collect::<Result<Vec<_>>>()?;
    let columns: Vec<&str> = ["n", "shu_hong", "claim1_lower"]
        .into_iter()
        .chain(PlanarBounds::NAMES)
        .chain(["inequality4_coefficient", "claim5_threshold"])
        .collect();
    match format {
        TableFormat::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(&columns)
                .map_err(|e| Error::Io(io::Error::other(e.to_string())))?;
            for r in &rows {
                let mut record = vec![r.n.to_string(), r.shu_hong.to_string(), r.claim1_lower.to_string()];
                record.extend(r.planar.entries().iter().map(|e| e.1.to_string()));
                record.push(r.inequality4_coefficient.to_string());
                record.push(r.claim5_threshold.to_string());
                w.write_record(&record)
                    .map_err(|e| Error::Io(io::Error::other(e.to_string())))?;
            }
            w.flush()?;
        }
        TableFormat::Text => {
            let header: Vec<String> = columns.iter().map(|c| format!("{c:>12}")).collect();
            writeln!(out, "{}", header.join(" "))?;
            for r in &rows {
                let mut cells = vec![
                    format!("{:>12}", r.n),
                    format!("{:>12.4}", r.shu_hong),
                    format!("{:>12.4}", r.claim1_lower),
                ];
                cells.extend(r.planar.entries().iter().map(|e| format!("{:>12.4}", e.1)));
                cells.push(format!("{:>12.4}", r.inequality4_coefficient));
                cells.push(format!("{:>12}", r.claim5_threshold));
                writeln!(out, "{}", cells.join(" "))?;
            }
        }
    }
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("6..13"), Ok((6, 13)));
        assert_eq!(parse_range("6..=13"), Ok((6, 13)));
        assert_eq!(parse_range("9"), Ok((9, 9)));
        assert!(parse_range("9..7").is_err());
        assert!(parse_range("a..7").is_err());
    }

    #[test]
    fn flags_parse() {
        let cli =
            Cli::try_parse_from(["mopcheck", "--threads", "2", "verify", "-n", "6..8", "--format", "csv"]).unwrap();
        assert_eq!(cli.threads, Some(2));
        assert!(matches!(
            cli.command,
            Command::Verify {
                range: (6, 8),
                format: ReportKind::Csv,
                ..
            }
        ));
        assert!(Cli::try_parse_from(["mopcheck", "enumerate"]).is_err());
    }

    #[test]
    fn bounds_table() {
        let cli = Cli::try_parse_from(["mopcheck", "bounds", "-n", "15..16", "--format", "csv"]).unwrap();
        let mut out = Vec::new();
        assert_eq!(run(cli, &mut out).unwrap(), EXIT_OK);
        let text = String::from_utf8(out).unwrap();
        assert_eq!(text.lines().count(), 3);
        assert!(text.starts_with("n,shu_hong,claim1_lower,hong_1988,"));
    }
}
