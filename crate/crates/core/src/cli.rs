//! The `lerch` command line: `eval`, `scan` and `verify`.
//!
//! Exit codes: 0 on success, 1 when a verification check fails, 2 for
//! usage, domain and I/O errors.

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::evaluator::{evaluate_with, QuadConfig, Route};
use crate::functional_eq::FESumConfig;
use crate::verify::{self, Suite};
use crate::zeros::{classify, scan_sign_changes};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Environment variable capping the worker threads.
pub const THREADS_ENV: &str = "LERCH_THREADS";

#[derive(Debug, Parser)]
#[command(name = "lerch", version, about = "Hurwitz-Lerch zeta function Phi(sigma, a, z) for real sigma")]
struct Cli {
    /// TOML file with split_point, tail_cutoff, max_levels, tol, n_max, use_tail_correction.
    /// Command-line flags take precedence.
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate Phi(sigma, a, z); prints "re im err method".
    Eval {
        #[arg(long, allow_hyphen_values = true)]
        sigma: f64,
        #[arg(long)]
        a: f64,
        /// Complex literal such as 1, -1, i, 0.5-0.2i, or unit:<theta>.
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        z: String,
        /// auto, series, integral, fe or em.
        #[arg(long, default_value = "auto")]
        method: String,
        /// Quadrature tolerance.
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Sign-change census over an a-grid; writes one CSV row per (a, z).
    Scan {
        #[arg(long)]
        a_min: f64,
        #[arg(long)]
        a_max: f64,
        #[arg(long)]
        a_step: f64,
        /// A complex literal, unit:<theta>, or a comma-separated list of reals.
        #[arg(long, allow_hyphen_values = true)]
        z: String,
        #[arg(long, value_name = "PATH")]
        out: PathBuf,
        #[arg(long, default_value_t = 0.005)]
        grid_step: f64,
        /// Bisection tolerance in sigma.
        #[arg(long, default_value_t = 1e-10)]
        root_tol: f64,
    },
    /// Run a verification suite: fe, signs, kernels, identities or all.
    Verify {
        #[arg(default_value = "all")]
        suite: String,
    },
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    split_point: Option<f64>,
    tail_cutoff: Option<f64>,
    max_levels: Option<usize>,
    tol: Option<f64>,
    n_max: Option<usize>,
    use_tail_correction: Option<bool>,
}

impl FileConfig {
    fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        toml::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
    }

    fn apply(&self, q: &mut QuadConfig, fe: &mut FESumConfig) {
        if let Some(v) = self.split_point {
            q.split_point = v;
        }
        if self.tail_cutoff.is_some() {
            q.tail_cutoff = self.tail_cutoff;
        }
        if let Some(v) = self.max_levels {
            q.max_levels = v;
        }
        if let Some(v) = self.tol {
            q.tol = v;
        }
        if let Some(v) = self.n_max {
            fe.n_max = v;
        }
        if let Some(v) = self.use_tail_correction {
            fe.use_tail_correction = v;
        }
    }
}

/// One (a, z) cell of a scan.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScanRow {
    pub a: f64,
    pub z_re: f64,
    pub z_im: f64,
    pub verdict: String,
    pub n_brackets: usize,
    /// Roots joined with ';', empty when there are none.
    pub roots: String,
    pub max_residual: f64,
}

/// Shortest round-trip decimal; exponent form outside [1e-5, 1e16), and
/// negative zero printed as 0.
pub fn fmt_num(x: f64) -> String {
    if x == 0.0 {
        "0".into()
    } else if x.is_finite() && (1e-5..1e16).contains(&x.abs()) {
        format!("{x}")
    } else {
        format!("{x:e}")
    }
}

/// Parses `1`, `-0.5`, `i`, `-2i`, `0.3+0.4i`, `1e-3-2e-1i` or `unit:<theta>`.
pub fn parse_complex(s: &str) -> Result<Complex64> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || Error::Parse(format!("cannot parse complex number {s:?}"));
    if let Some(theta) = t.strip_prefix("unit:") {
        let th: f64 = theta.parse().map_err(|_| bad())?;
        return Ok(Complex64::from_polar(1.0, th));
    }
    let Some(body) = t.strip_suffix('i') else {
        return t.parse::<f64>().map(|re| Complex64::new(re, 0.0)).map_err(|_| bad());
    };
    // split at the last sign that is not the leading one or part of an exponent
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let imag = |x: &str| -> Result<f64> {
        match x {
            "" | "+" => Ok(1.0),
            "-" => Ok(-1.0),
            _ => x.parse().map_err(|_| bad()),
        }
    };
    match split {
        Some(k) => Ok(Complex64::new(body[..k].parse().map_err(|_| bad())?, imag(&body[k..])?)),
        None => Ok(Complex64::new(0.0, imag(body)?)),
    }
}

fn parse_z_list(spec: &str) -> Result<Vec<Complex64>> {
    if spec.contains(',') {
        spec.split(',')
            .map(|p| p.trim().parse::<f64>().map(|x| Complex64::new(x, 0.0)))
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| Error::Parse(format!("cannot parse real list {spec:?}")))
    } else {
        Ok(vec![parse_complex(spec)?])
    }
}

/// a_min, a_min + step, ..., a_max, rounded to 12 decimals so 0.1-style steps print cleanly.
fn a_grid(a_min: f64, a_max: f64, step: f64) -> Result<Vec<f64>> {
    if !(step > 0.0 && a_min > 0.0 && a_max <= 1.0 && a_min <= a_max) {
        return Err(Error::Domain(format!(
            "need 0 < a_min <= a_max <= 1 and a_step > 0, got {a_min}, {a_max}, {step}"
        )));
    }
    let n = ((a_max - a_min) / step + 1e-9).floor() as usize + 1;
    Ok((0..n).map(|k| ((a_min + k as f64 * step) * 1e12).round() / 1e12).collect())
}

pub fn scan_rows(
    a_values: &[f64],
    zs: &[Complex64],
    grid_step: f64,
    root_tol: f64,
    cfg: &QuadConfig,
) -> Result<Vec<ScanRow>> {
    let cells: Vec<(f64, Complex64)> = zs.iter().flat_map(|&z| a_values.iter().map(move |&a| (a, z))).collect();
    let mut rows = cells
        .par_iter()
        .map(|&(a, z)| {
            let verdict = classify(a, z)?;
            let rep = scan_sign_changes(a, z, grid_step, root_tol, cfg)?;
            Ok(ScanRow {
                a,
                z_re: z.re,
                z_im: z.im,
                verdict: verdict.tag.to_string(),
                n_brackets: rep.brackets.len(),
                roots: rep.roots.iter().map(|&r| fmt_num(r)).collect::<Vec<_>>().join(";"),
                max_residual: rep.max_residual(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    rows.sort_by(|x, y| x.z_re.total_cmp(&y.z_re).then(x.z_im.total_cmp(&y.z_im)).then(x.a.total_cmp(&y.a)));
    Ok(rows)
}

pub fn write_scan_csv<W: Write>(rows: &[ScanRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["a", "z_re", "z_im", "verdict", "n_brackets", "roots", "max_residual"])?;
    for r in rows {
        w.write_record([
            fmt_num(r.a),
            fmt_num(r.z_re),
            fmt_num(r.z_im),
            r.verdict.clone(),
            r.n_brackets.to_string(),
            r.roots.clone(),
            fmt_num(r.max_residual),
        ])?;
    }
    w.flush()?;
    Ok(())
}

fn init_threads() -> Result<()> {
    let Ok(v) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let n: usize = v
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| Error::Parse(format!("{THREADS_ENV} = {v:?} is not a positive integer")))?;
    // a pool that already exists (repeated in-process runs) keeps its size
    let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    Ok(())
}

/// Runs the CLI with explicit output streams; returns the exit code.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return code;
        }
    };
    match dispatch(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

/// Runs the CLI against the process's stdout and stderr.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> Result<i32> {
    init_threads()?;
    let mut quad = QuadConfig::default();
    let mut fe = FESumConfig::default();
    if let Some(path) = &cli.config {
        FileConfig::load(path)?.apply(&mut quad, &mut fe);
    }
    match cli.command {
        Command::Eval { sigma, a, z, method, tol } => {
            if let Some(t) = tol {
                quad.tol = t;
            }
            quad.validate()?;
            fe.validate()?;
            let route: Route = method.parse()?;
            let z = parse_complex(&z)?;
            let r = evaluate_with(route, sigma, a, z, &quad, &fe)?;
            writeln!(
                out,
                "{} {} {} {}",
                fmt_num(r.value.re),
                fmt_num(r.value.im),
                fmt_num(r.abs_err_estimate),
                r.method
            )?;
            Ok(EXIT_OK)
        }
        Command::Scan { a_min, a_max, a_step, z, out: path, grid_step, root_tol } => {
            quad.validate()?;
            let rows = scan_rows(&a_grid(a_min, a_max, a_step)?, &parse_z_list(&z)?, grid_step, root_tol, &quad)?;
            let file = File::create(&path)?;
            write_scan_csv(&rows, BufWriter::new(file))?;
            writeln!(out, "wrote {} rows to {}", rows.len(), path.display())?;
            Ok(EXIT_OK)
        }
        Command::Verify { suite } => {
            quad.validate()?;
            fe.validate()?;
            let suite: Suite = suite.parse()?;
            let mut ok = true;
            for rep in verify::run(suite, &quad, &fe)? {
                writeln!(out, "== {} ==", rep.suite)?;
                for c in &rep.checks {
                    writeln!(out, "{c}")?;
                }
                ok &= rep.passed();
            }
            writeln!(out, "{}", if ok { "all checks passed" } else { "some checks FAILED" })?;
            Ok(if ok { EXIT_OK } else { EXIT_CHECK_FAILED })
        }
    }
}
