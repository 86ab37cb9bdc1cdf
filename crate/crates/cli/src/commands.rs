use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::str::FromStr;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use tribone::engine::{
    check, extract_certificate, extract_symmetric_certificate, oracle_sweep, oracle_with, selftest, verify_tiling,
    OracleOptions, OracleReport, Tiling, Verdict, DEFAULT_COLUMN_CAP, DEFAULT_MARGIN,
};
use tribone::groebner::{buchberger_z, format_ideal_file, parse_ideal_file};
use tribone::polynomial::MonomialOrder;

#[derive(Debug, Parser)]
#[command(name = "tribone", version, about = "Signed tribone tilings of hexagonal triangles")]
pub struct Cli {
    /// Give up with exit code 1 after this many seconds.
    #[arg(long, global = true, value_name = "SECS")]
    pub timeout_seconds: Option<f64>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CertificateFormat {
    Json,
    Text,
    Svg,
}

/// Inclusive range `A..B` (or `A..=B`) of side lengths.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SideRange {
    pub start: u32,
    pub end: u32,
}

impl FromStr for SideRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (a, b) = s.split_once("..").ok_or_else(|| format!("expected A..B, got `{s}`"))?;
        let b = b.strip_prefix('=').unwrap_or(b);
        let start: u32 = a.trim().parse().map_err(|_| format!("bad range start `{a}`"))?;
        let end: u32 = b.trim().parse().map_err(|_| format!("bad range end `{b}`"))?;
        if start == 0 || start > end {
            return Err(format!("range must satisfy 1 <= A <= B, got {start}..{end}"));
        }
        Ok(SideRange { start, end })
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether T_N has a signed tribone tiling.
    Check {
        #[arg(required_unless_present = "range", conflicts_with = "range")]
        n: Option<u32>,
        /// Require symmetry under the 120-degree rotation.
        #[arg(long)]
        symmetric: bool,
        /// Check every side in A..B (inclusive), in parallel.
        #[arg(long, value_name = "A..B")]
        range: Option<SideRange>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Produce an explicit signed tiling of T_N.
    Certificate {
        n: u32,
        #[arg(long)]
        symmetric: bool,
        /// Write to FILE instead of standard output.
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = CertificateFormat::Json)]
        format: CertificateFormat,
    },
    /// Compute a strong Groebner basis over the integers.
    Groebner {
        file: PathBuf,
        /// Overrides the order given in the file; lex when neither is set.
        #[arg(long)]
        order: Option<MonomialOrder>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Solve the truncated integer linear system directly.
    Oracle {
        n: u32,
        #[arg(long)]
        symmetric: bool,
        #[arg(long, default_value_t = DEFAULT_MARGIN)]
        margin: u32,
        /// Try margins 0..=MARGIN' (MARGIN' = max(margin, 5)), stopping once solvable twice in a row.
        #[arg(long)]
        sweep: bool,
        /// Also report the Smith invariants of the truncated cokernel.
        #[arg(long)]
        cokernel: bool,
        #[arg(long, default_value_t = DEFAULT_COLUMN_CAP)]
        column_cap: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Draw a tiling JSON file as SVG.
    Render {
        tiling: PathBuf,
        #[arg(long, value_name = "FILE")]
        out: PathBuf,
    },
    /// Recompute the published tables and compare.
    Selftest {
        /// List every check, not just failures.
        #[arg(long)]
        verbose: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

/// What a successful run prints and its exit code.
#[derive(Debug, Default)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output {
            stdout,
            ..Output::default()
        }
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string(v).expect("serializable");
    s.push('\n');
    s
}

fn flavour(symmetric: bool) -> &'static str {
    if symmetric {
        "symmetric"
    } else {
        "plain"
    }
}

fn verdict_line(v: &Verdict) -> String {
    format!(
        "T_{} {}: {} (remainder {}, closed form {})",
        v.n,
        flavour(v.symmetric),
        if v.tileable { "tileable" } else { "not tileable" },
        v.remainder,
        if v.closed_form_check { "agrees" } else { "DISAGREES" }
    )
}

fn report_line(r: &OracleReport) -> String {
    let mut s = format!(
        "T_{} {} margin {}: {} (rows {}, columns {}, rank {})",
        r.n,
        flavour(r.symmetric),
        r.window_margin,
        if r.solvable { "solvable" } else { "not solvable" },
        r.rows,
        r.columns,
        r.rank
    );
    if let Some(c) = &r.cokernel {
        write!(s, ", cokernel Z^{} + [{}]", c.free_rank, c.torsion.join(", ")).unwrap();
    }
    s
}

fn run_check(n: Option<u32>, symmetric: bool, range: Option<SideRange>, format: Format) -> Result<Output> {
    let Some(range) = range else {
        let n = n.expect("clap enforces N or --range");
        let v = check(n, symmetric)?;
        return Ok(Output::ok(match format {
            Format::Json => to_json(&v),
            Format::Text => verdict_line(&v) + "\n",
        }));
    };
    let results: Vec<_> = (range.start..=range.end)
        .into_par_iter()
        .map(|n| (n, check(n, symmetric)))
        .collect();
    let out = match format {
        Format::Json => {
            let items: Vec<serde_json::Value> = results
                .iter()
                .map(|(n, r)| match r {
                    Ok(v) => serde_json::to_value(v).expect("serializable"),
                    Err(e) => json!({"n": n, "symmetric": symmetric, "error": e.to_string()}),
                })
                .collect();
            to_json(&items)
        }
        Format::Text => results
            .iter()
            .map(|(n, r)| match r {
                Ok(v) => verdict_line(v) + "\n",
                Err(e) => format!("T_{n} {}: error: {e}\n", flavour(symmetric)),
            })
            .collect(),
    };
    Ok(Output::ok(out))
}

fn certificate_text(t: &Tiling) -> String {
    let mut s = format!(
        "# T_{} {}, {} placements\n",
        t.region_n,
        flavour(t.symmetric),
        t.placements.len()
    );
    for p in &t.placements {
        writeln!(s, "{} {} {}", p.kind, p.center, p.weight).unwrap();
    }
    s
}

fn run_certificate(n: u32, symmetric: bool, out: Option<PathBuf>, format: CertificateFormat) -> Result<Output> {
    let tiling = if symmetric {
        extract_symmetric_certificate(n)?
    } else {
        extract_certificate(n)?
    };
    if !verify_tiling(n, &tiling, symmetric) {
        bail!("internal error: the extracted tiling of T_{n} does not verify");
    }
    let body = match format {
        CertificateFormat::Json => to_json(&tiling),
        CertificateFormat::Text => certificate_text(&tiling),
        CertificateFormat::Svg => crate::render_svg(&tiling),
    };
    match out {
        Some(path) => {
            fs::write(&path, body).with_context(|| format!("cannot write {}", path.display()))?;
            Ok(Output {
                stderr: format!("wrote {} placements to {}\n", tiling.placements.len(), path.display()),
                ..Output::default()
            })
        }
        None => Ok(Output::ok(body)),
    }
}

fn run_groebner(file: PathBuf, order: Option<MonomialOrder>, format: Format) -> Result<Output> {
    let text = fs::read_to_string(&file).with_context(|| format!("cannot read {}", file.display()))?;
    let ideal = parse_ideal_file(&text)?;
    let order = order.or(ideal.order).unwrap_or(MonomialOrder::Lex);
    let gb = buchberger_z(&ideal.generators, order)?;
    let basis = gb.elements();
    Ok(Output::ok(match format {
        Format::Text => format_ideal_file(&ideal.vars, Some(order), &basis),
        Format::Json => to_json(&json!({
            "vars": ideal.vars.names(),
            "order": order.to_string(),
            "basis": basis.iter().map(ToString::to_string).collect::<Vec<_>>(),
        })),
    }))
}

#[allow(clippy::too_many_arguments)]
fn run_oracle(
    n: u32,
    symmetric: bool,
    margin: u32,
    sweep: bool,
    cokernel: bool,
    column_cap: usize,
    format: Format,
) -> Result<Output> {
    let opts = OracleOptions {
        column_cap,
        cokernel,
        ..OracleOptions::default()
    };
    let reports = if sweep {
        oracle_sweep(n, symmetric, margin.max(5), &opts)?
    } else {
        vec![oracle_with(n, symmetric, margin, &opts)?]
    };
    Ok(Output::ok(match format {
        Format::Json if sweep => to_json(&reports),
        Format::Json => to_json(&reports[0]),
        Format::Text => reports.iter().map(|r| report_line(r) + "\n").collect(),
    }))
}

fn run_render(path: PathBuf, out: PathBuf) -> Result<Output> {
    let text = fs::read_to_string(&path).with_context(|| format!("cannot read {}", path.display()))?;
    let tiling: Tiling = serde_json::from_str(&text).with_context(|| format!("{} is not a tiling", path.display()))?;
    let mut stderr = String::new();
    if !verify_tiling(tiling.region_n, &tiling, tiling.symmetric) {
        writeln!(
            stderr,
            "warning: the tiling does not verify against T_{}",
            tiling.region_n
        )
        .unwrap();
    }
    fs::write(&out, crate::render_svg(&tiling)).with_context(|| format!("cannot write {}", out.display()))?;
    Ok(Output {
        stderr,
        ..Output::default()
    })
}

fn run_selftest(verbose: bool, format: Format) -> Output {
    let checks = selftest::run();
    let failed = checks.iter().filter(|c| !c.passed).count();
    let stdout = match format {
        Format::Json => {
            let shown: Vec<_> = checks.iter().filter(|c| verbose || !c.passed).collect();
            to_json(&json!({"passed": failed == 0, "total": checks.len(), "failed": failed, "checks": shown}))
        }
        Format::Text => {
            let mut s = String::new();
            for c in checks.iter().filter(|c| verbose || !c.passed) {
                writeln!(s, "{} {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail).unwrap();
            }
            writeln!(s, "selftest: {}/{} checks passed", checks.len() - failed, checks.len()).unwrap();
            s
        }
    };
    Output {
        stdout,
        stderr: String::new(),
        code: i32::from(failed > 0),
    }
}

/// Runs one parsed command. Errors are domain or I/O failures (exit code 1).
pub fn execute(command: Command) -> Result<Output> {
    match command {
        Command::Check {
            n,
            symmetric,
            range,
            format,
        } => run_check(n, symmetric, range, format),
        Command::Certificate {
            n,
            symmetric,
            out,
            format,
        } => run_certificate(n, symmetric, out, format),
        Command::Groebner { file, order, format } => run_groebner(file, order, format),
        Command::Oracle {
            n,
            symmetric,
            margin,
            sweep,
            cokernel,
            column_cap,
            format,
        } => run_oracle(n, symmetric, margin, sweep, cokernel, column_cap, format),
        Command::Render { tiling, out } => run_render(tiling, out),
        Command::Selftest { verbose, format } => Ok(run_selftest(verbose, format)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!("3..7".parse(), Ok(SideRange { start: 3, end: 7 }));
        assert_eq!("3..=7".parse(), Ok(SideRange { start: 3, end: 7 }));
        assert!("7..3".parse::<SideRange>().is_err());
        assert!("0..3".parse::<SideRange>().is_err());
        assert!("3-7".parse::<SideRange>().is_err());
    }

    #[test]
    fn grammar() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
        assert!(Cli::try_parse_from(["tribone", "check"]).is_err());
        assert!(Cli::try_parse_from(["tribone", "check", "5", "--range", "1..3"]).is_err());
        assert!(Cli::try_parse_from(["tribone", "check", "--range", "1..3"]).is_ok());
        assert!(Cli::try_parse_from(["tribone", "groebner", "f", "--order", "grevlex"]).is_err());
        assert!(Cli::try_parse_from(["tribone", "selftest", "--timeout-seconds", "5"]).is_ok());
    }
}
