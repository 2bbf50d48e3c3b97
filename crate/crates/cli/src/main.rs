//! Command-line surface: construct, resolve, verify, and scan the
//! late-regularity ideal family; renders Betti tables in the standard
//! row = j - i layout.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 hypothesis failure,
//! 3 usage or input error. Machine-readable output goes to stdout, logs
//! and summaries to stderr.

use std::fs;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

use latereg_core::arith::RingContext;
use latereg_core::construct::{
    build_jm, cas_export, fitted_log_slope, generators_from_text, generators_to_text,
    hypothesis_check, pure_module, scan_row, verify_module, JmCertificate, ModuleInput,
    PureModuleSpec, VerifyOptions, CONVENTION_NOTE,
};
use latereg_core::error::AlgebraError;
use latereg_core::freemod::{matrix_from_text, matrix_to_text};
use latereg_core::groebner::PairStrategy;

const EXIT_MISMATCH: i32 = 1;
const EXIT_HYPOTHESIS: i32 = 2;
const EXIT_USAGE: i32 = 3;

#[derive(Parser)]
#[command(
    name = "latereg",
    version,
    about = "Construct and verify ideals whose regularity is revealed late in the resolution"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum HumanFormat {
    Ascii,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum GeneratorFormat {
    Text,
    Cas,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Build the pure module with degree sequence (k, ..., k+n, k+n+1+d)
    /// and print its presentation and Betti data
    Pure {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        d: u32,
        #[arg(long, default_value_t = latereg_core::arith::DEFAULT_PRIME)]
        prime: u64,
        #[arg(long, value_enum, default_value_t = HumanFormat::Ascii)]
        format: HumanFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit the generators of the constructed ideal
    Construct {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long = "N")]
        codim: usize,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        d: Option<u32>,
        /// Presentation matrix file for a user-supplied module over R
        #[arg(long)]
        module: Option<PathBuf>,
        #[arg(long, default_value_t = latereg_core::arith::DEFAULT_PRIME)]
        prime: u64,
        #[arg(long, value_enum, default_value_t = GeneratorFormat::Text)]
        format: GeneratorFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Full pipeline: construct, resolve, and compare against predictions
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long = "N")]
        codim: usize,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        d: u32,
        #[arg(long, default_value_t = latereg_core::arith::DEFAULT_PRIME)]
        prime: u64,
        #[arg(long, value_enum, default_value_t = HumanFormat::Json)]
        format: HumanFormat,
        /// Verify generators from a file instead of rebuilding them
        #[arg(long)]
        input: Option<PathBuf>,
        /// Test hook: overrides the predicted degree sequence, e.g. "3,5,6,8"
        #[arg(long = "expect-seq")]
        expect_seq: Option<String>,
        #[arg(long = "max-seconds")]
        max_seconds: Option<f64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sweep k over a range, printing a CSV of predicted and computed
    /// regularity with the fitted growth slope on stderr
    Scan {
        #[arg(long)]
        n: usize,
        #[arg(long = "N")]
        codim: usize,
        /// Single value "3" or inclusive range "2..6"
        #[arg(long)]
        k: String,
        #[arg(long, default_value_t = latereg_core::arith::DEFAULT_PRIME)]
        prime: u64,
        /// Per-instance budget for the computed column
        #[arg(long = "max-seconds", default_value_t = 10.0)]
        max_seconds: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                std::process::exit(0);
            }
            eprint!("{e}");
            std::process::exit(EXIT_USAGE);
        }
    };
    let code = match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                AlgebraError::HypothesisFailed { .. } => EXIT_HYPOTHESIS,
                _ => EXIT_USAGE,
            }
        }
    };
    std::process::exit(code);
}

fn emit(out: &Option<PathBuf>, payload: &str) -> Result<(), AlgebraError> {
    match out {
        Some(path) => fs::write(path, payload)
            .map_err(|e| AlgebraError::Parse(format!("cannot write {}: {e}", path.display()))),
        None => {
            println!("{payload}");
            Ok(())
        }
    }
}

fn check_ranges(n: usize, k: u32, codim: Option<usize>) -> Result<(), AlgebraError> {
    if n < 1 {
        return Err(AlgebraError::Parse("n must be at least 1".into()));
    }
    if k < 1 {
        return Err(AlgebraError::Parse("k must be at least 1".into()));
    }
    if let Some(c) = codim {
        if c < 1 {
            return Err(AlgebraError::Parse("N must be at least 1".into()));
        }
    }
    Ok(())
}

fn run(cli: Cli) -> Result<i32, AlgebraError> {
    match cli.command {
        Command::Pure {
            n,
            k,
            d,
            prime,
            format,
            out,
        } => {
            check_ranges(n, k, None)?;
            let module = pure_module(
                &PureModuleSpec { n, k, d },
                prime,
                PairStrategy::DegreeFirst,
            )?;
            let ring_r = module.ring_r.clone();
            let presentation = module.presentation();
            let payload = match format {
                HumanFormat::Ascii => format!(
                    "pure module: n={n} k={k} d={d} prime={prime}\n\
                     degree sequence {}\npresentation:\n{}\nBetti table:\n{}",
                    module.max_degrees,
                    matrix_to_text(&ring_r, &presentation),
                    module.betti.render_ascii(),
                ),
                HumanFormat::Json => serde_json::json!({
                    "params": { "n": n, "k": k, "d": d, "prime": prime },
                    "degree_sequence": module.max_degrees.0,
                    "betti": module.betti.to_json()?,
                    "presentation": matrix_to_text(&ring_r, &presentation),
                })
                .to_string(),
            };
            emit(&out, &payload)?;
            Ok(0)
        }
        Command::Construct {
            n,
            codim,
            k,
            d,
            module,
            prime,
            format,
            out,
        } => {
            let (module_input, d_label, module_hash) = match module {
                Some(path) => {
                    let text = fs::read_to_string(&path).map_err(|e| {
                        AlgebraError::Parse(format!("cannot read {}: {e}", path.display()))
                    })?;
                    let n = match n {
                        Some(n) => n,
                        None => infer_n(&text)?,
                    };
                    check_ranges(n, k, Some(codim))?;
                    let ring_r = RingContext::new(n, 0, prime)?;
                    let presentation = matrix_from_text(&ring_r, &text)?;
                    let input = ModuleInput::from_presentation(
                        &ring_r,
                        &presentation,
                        PairStrategy::DegreeFirst,
                        None,
                    )?;
                    (input, None, Some(fnv1a_hex(text.as_bytes())))
                }
                None => {
                    let n = n.ok_or_else(|| {
                        AlgebraError::Parse("either --n with --d or --module is required".into())
                    })?;
                    let d = d.ok_or_else(|| {
                        AlgebraError::Parse("--d is required without --module".into())
                    })?;
                    check_ranges(n, k, Some(codim))?;
                    let module = pure_module(
                        &PureModuleSpec { n, k, d },
                        prime,
                        PairStrategy::DegreeFirst,
                    )?;
                    (module, Some(d), None)
                }
            };
            let hyp = hypothesis_check(&module_input, k as i64, codim);
            if let Some(fail) = hyp.first_failure() {
                eprintln!("hypothesis failed, clause {}: {}", fail.name, fail.detail);
                return Ok(EXIT_HYPOTHESIS);
            }
            let ring_s = RingContext::new(module_input.ring_r.n(), codim, prime)?;
            let gens = build_jm(&module_input, k as i64, &ring_s)?;
            let payload = match format {
                GeneratorFormat::Text => generators_to_text(&ring_s, &gens),
                GeneratorFormat::Cas => cas_export(&ring_s, &gens, "JM"),
                GeneratorFormat::Json => serde_json::json!({
                    "params": {
                        "n": module_input.ring_r.n(), "N": codim, "k": k,
                        "d": d_label, "prime": prime, "module_hash": module_hash,
                    },
                    "generators": gens
                        .iter()
                        .map(|g| latereg_core::arith::poly_to_text(&ring_s, g))
                        .collect::<Vec<_>>(),
                })
                .to_string(),
            };
            emit(&out, &payload)?;
            Ok(0)
        }
        Command::Verify {
            n,
            codim,
            k,
            d,
            prime,
            format,
            input,
            expect_seq,
            max_seconds,
            out,
        } => {
            check_ranges(n, k, Some(codim))?;
            let expected_sequence_override = match expect_seq {
                None => None,
                Some(s) => Some(
                    s.split(',')
                        .map(|v| {
                            v.trim().parse::<i64>().map_err(|_| {
                                AlgebraError::Parse(format!("bad --expect-seq entry '{v}'"))
                            })
                        })
                        .collect::<Result<Vec<i64>, _>>()?,
                ),
            };
            let generators_override = match &input {
                None => None,
                Some(path) => {
                    let text = fs::read_to_string(path).map_err(|e| {
                        AlgebraError::Parse(format!("cannot read {}: {e}", path.display()))
                    })?;
                    let ring_s = RingContext::new(n, codim, prime)?;
                    Some(generators_from_text(&ring_s, &text)?)
                }
            };
            let opts = VerifyOptions {
                strategy: PairStrategy::DegreeFirst,
                deadline: max_seconds.map(|s| Instant::now() + Duration::from_secs_f64(s)),
                expected_sequence_override,
                generators_override,
                module_hash: None,
                d_label: Some(d),
            };
            let module = pure_module(&PureModuleSpec { n, k, d }, prime, opts.strategy)?;
            let cert = verify_module(&module, codim, prime, &opts)?;
            let payload = match format {
                HumanFormat::Json => cert.to_json().to_string(),
                HumanFormat::Ascii => render_certificate(&cert),
            };
            emit(&out, &payload)?;
            Ok(if cert.pass { 0 } else { EXIT_MISMATCH })
        }
        Command::Scan {
            n,
            codim,
            k,
            prime,
            max_seconds,
            out,
        } => {
            let (k_lo, k_hi) = parse_k_range(&k)?;
            check_ranges(n, k_lo, Some(codim))?;
            let budget = Duration::from_secs_f64(max_seconds);
            let mut rows = Vec::new();
            let mut csv = String::from("k,d_max,reg_predicted,reg_computed,wall_ms\n");
            for kk in k_lo..=k_hi {
                let row = scan_row(n, codim, kk, prime, PairStrategy::DegreeFirst, Some(budget));
                csv.push_str(&format!(
                    "{},{},{},{},{}\n",
                    row.k,
                    row.d_max,
                    row.reg_predicted,
                    row.reg_computed.map(|r| r.to_string()).unwrap_or_default(),
                    row.wall_ms
                ));
                rows.push((row.k, row.reg_predicted));
            }
            if rows.len() >= 2 {
                let slope = fitted_log_slope(&rows);
                eprintln!(
                    "fitted log-log slope of predicted regularity against the generating degree k+1: {slope:.4}"
                );
            }
            emit(&out, csv.trim_end())?;
            Ok(0)
        }
    }
}

/// Smallest x-block that covers every x-variable mentioned in a matrix file.
fn infer_n(text: &str) -> Result<usize, AlgebraError> {
    let mut max_x: Option<usize> = None;
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        if bytes[i] == b'x' {
            let mut j = i + 1;
            while j < bytes.len() && bytes[j].is_ascii_digit() {
                j += 1;
            }
            if j > i + 1 {
                let idx: usize = text[i + 1..j].parse().unwrap_or(0);
                max_x = Some(max_x.map_or(idx, |m: usize| m.max(idx)));
            }
            i = j;
        } else {
            i += 1;
        }
    }
    max_x.ok_or_else(|| {
        AlgebraError::Parse("module file mentions no x-variables; pass --n explicitly".into())
    })
}

fn parse_k_range(s: &str) -> Result<(u32, u32), AlgebraError> {
    if let Some((lo, hi)) = s.split_once("..") {
        let lo: u32 = lo
            .trim()
            .parse()
            .map_err(|_| AlgebraError::Parse(format!("bad k range '{s}'")))?;
        let hi: u32 = hi
            .trim()
            .parse()
            .map_err(|_| AlgebraError::Parse(format!("bad k range '{s}'")))?;
        if lo > hi {
            return Err(AlgebraError::Parse(format!("empty k range '{s}'")));
        }
        Ok((lo, hi))
    } else {
        let k: u32 = s
            .trim()
            .parse()
            .map_err(|_| AlgebraError::Parse(format!("bad k value '{s}'")))?;
        Ok((k, k))
    }
}

fn render_certificate(cert: &JmCertificate) -> String {
    let verdict = if cert.pass { "PASS" } else { "FAIL" };
    let mut out = format!(
        "instance n={} N={} k={} d={} prime={}\n{}\n\
         predicted degree sequence {}   regularity {}\n\
         computed  degree sequence {}   regularity {}\n\
         reg M = {}, reg M + 1 = {}\n\n",
        cert.n,
        cert.codim,
        cert.k,
        cert.d.map(|d| d.to_string()).unwrap_or_else(|| "-".into()),
        cert.prime,
        CONVENTION_NOTE,
        cert.predicted_sequence,
        cert.predicted_regularity,
        cert.computed_sequence,
        cert.computed_regularity,
        cert.module_regularity,
        cert.module_regularity + 1,
    );
    out.push_str(&side_by_side(
        "predicted Betti table",
        &cert.predicted_betti.render_ascii(),
        "computed Betti table",
        &cert.computed_betti.render_ascii(),
    ));
    out.push('\n');
    for check in &cert.checks {
        out.push_str(&format!(
            "  [{}] {}: {}\n",
            if check.pass { "ok" } else { "FAIL" },
            check.name,
            check.detail
        ));
    }
    out.push_str(&format!("verdict: {verdict} ({} ms)", cert.wall_ms));
    out
}

fn side_by_side(left_title: &str, left: &str, right_title: &str, right: &str) -> String {
    let lw = left
        .lines()
        .map(str::len)
        .chain([left_title.len()])
        .max()
        .unwrap_or(0);
    let left_lines: Vec<&str> = left.lines().collect();
    let right_lines: Vec<&str> = right.lines().collect();
    let mut out = format!("{left_title:<lw$}    {right_title}\n");
    for i in 0..left_lines.len().max(right_lines.len()) {
        let l = left_lines.get(i).copied().unwrap_or("");
        let r = right_lines.get(i).copied().unwrap_or("");
        out.push_str(&format!("{l:<lw$}    {r}\n"));
    }
    out
}

fn fnv1a_hex(bytes: &[u8]) -> String {
    let mut hash: u64 = 0xcbf29ce484222325;
    for &b in bytes {
        hash ^= b as u64;
        hash = hash.wrapping_mul(0x100000001b3);
    }
    format!("{hash:016x}")
}
