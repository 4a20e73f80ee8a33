//! Command-line front end for the garlic-graph redundancy toolkit.

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use specred_core::audit::{audit_paper_claims, has_refutations, AuditGrid};
use specred_core::garlic::{self, GarlicParams};
use specred_core::graph6::read_graph6;
use specred_core::pythagorean::{
    count_estimate, count_estimate_constant, count_pts_legs_leq, equal_perimeter_family,
    garlic_family_common_radius, pts_with_perimeter,
};
use specred_core::redundancy::{balanced_sweep, census, sweep_csv};
use specred_core::subgraphs::{b_c_r_numeric, complementarity_spectrum_numeric};
use specred_core::GarlicError;

pub const EXIT_OK: i32 = 0;
pub const EXIT_REFUTED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_IO: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "specred",
    version,
    about = "Spectral redundancy of garlic graphs"
)]
pub struct Cli {
    /// Worker threads for parallel sweeps (default: available processors).
    #[arg(long, global = true)]
    pub workers: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Order, degrees, subgraph count, characteristic polynomial and radius of G_{p,q}.
    Info {
        #[command(flatten)]
        params: Params,
        #[command(flatten)]
        format: Format,
    },
    /// Exact b, c and r of G_{p,q} with its coincidence classes.
    Census {
        #[command(flatten)]
        params: Params,
        #[command(flatten)]
        format: Format,
    },
    /// Exact census of G_{2q,q} for q = 1..=qmax.
    Sweep {
        #[arg(long)]
        qmax: u64,
        #[command(flatten)]
        format: Format,
    },
    /// Every Pythagorean triplet with the given perimeter.
    Triplets {
        #[arg(long)]
        perimeter: u64,
        #[command(flatten)]
        format: Format,
    },
    /// m triplets sharing one perimeter and the 2m+1 garlic graphs they give.
    Family {
        #[arg(long)]
        m: usize,
        #[command(flatten)]
        format: Format,
    },
    /// Numeric b, c, r for every graph in a graph6 file.
    Spectrum {
        #[arg(long)]
        file: PathBuf,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        #[command(flatten)]
        format: Format,
    },
    /// Exact count of triplets with both legs at most n, with the asymptotic estimate.
    Estimate {
        #[arg(long)]
        n: u64,
        #[command(flatten)]
        format: Format,
    },
    /// Check the recorded claims about garlic graphs against the exact engines.
    Audit {
        #[arg(long, default_value = "small")]
        grid: AuditGrid,
        #[command(flatten)]
        format: Format,
    },
}

#[derive(Debug, Args)]
pub struct Params {
    #[arg(long)]
    pub p: u64,
    #[arg(long)]
    pub q: u64,
}

#[derive(Debug, Args, Clone, Copy)]
pub struct Format {
    #[arg(long, conflicts_with = "csv")]
    pub json: bool,
    #[arg(long)]
    pub csv: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Json,
    Csv,
}

impl Format {
    pub fn resolve(self) -> OutputFormat {
        match (self.json, self.csv) {
            (true, _) => OutputFormat::Json,
            (_, true) => OutputFormat::Csv,
            _ => OutputFormat::Text,
        }
    }
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Io(String),
}

impl From<GarlicError> for CliError {
    fn from(e: GarlicError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<specred_core::GraphError> for CliError {
    fn from(e: specred_core::GraphError) -> Self {
        CliError::Usage(e.to_string())
    }
}

/// Parses `argv` (without the program name).
pub fn parse_args<I, T>(argv: I) -> Result<Cli, clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    Cli::try_parse_from(std::iter::once("specred".into()).chain(argv.into_iter().map(Into::into)))
}

/// Output of a successful command.
pub struct Report {
    pub stdout: String,
    pub refuted: bool,
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

fn poly_string(coeffs: &[i128]) -> String {
    let mut out = String::new();
    for (power, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let sign = if c < 0 { "-" } else { "+" };
        if out.is_empty() {
            if c < 0 {
                out.push('-');
            }
        } else {
            let _ = write!(out, " {sign} ");
        }
        let mag = c.unsigned_abs();
        let var = match power {
            0 => String::new(),
            1 => "x".into(),
            _ => format!("x^{power}"),
        };
        if mag != 1 || power == 0 {
            let _ = write!(out, "{mag}");
        }
        out.push_str(&var);
    }
    out
}

fn info(p: u64, q: u64, format: OutputFormat) -> Result<String, CliError> {
    let params = GarlicParams::new(p, q)?;
    let g = garlic::build(params)?;
    let mut degrees = g.degrees();
    degrees.sort_unstable_by(|a, b| b.cmp(a));
    let b = garlic::b_formula(p, q).ok();
    let poly = garlic::char_poly(p, q)?;
    let rho2 = garlic::rho2(params)?;
    Ok(match format {
        OutputFormat::Json => to_json(&json!({
            "p": p,
            "q": q,
            "order": params.order(),
            "degrees": degrees,
            "b": b,
            "char_poly": poly.iter().map(|c| *c as i64).collect::<Vec<_>>(),
            "rho2": rho2,
            "rho": rho2.sqrt_f64(),
        })),
        OutputFormat::Csv => {
            let mut s = String::from("field,value\n");
            let _ = writeln!(s, "order,{}", params.order());
            let _ = writeln!(s, "b,{}", b.map(|b| b.to_string()).unwrap_or_default());
            let _ = writeln!(s, "rho2_A,{}", rho2.a());
            let _ = writeln!(s, "rho2_B,{}", rho2.b());
            let _ = writeln!(s, "rho,{:.12}", rho2.sqrt_f64());
            s
        }
        OutputFormat::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "G_{{{p},{q}}}");
            let _ = writeln!(s, "order: {}", params.order());
            let degs: Vec<String> = degrees.iter().map(|d| d.to_string()).collect();
            let _ = writeln!(s, "degrees: {}", degs.join(" "));
            match b {
                Some(b) => {
                    let _ = writeln!(s, "b: {b}");
                }
                None => {
                    let _ = writeln!(
                        s,
                        "b: formula not applicable (G_{{0,1}} is P3 with 3 subgraphs)"
                    );
                }
            }
            let _ = writeln!(s, "characteristic polynomial: {}", poly_string(&poly));
            let _ = writeln!(s, "rho^2: {rho2} = {:.12}", rho2.to_f64());
            let _ = writeln!(s, "rho: {:.12}", rho2.sqrt_f64());
            s
        }
    })
}

fn census_cmd(p: u64, q: u64, format: OutputFormat) -> Result<String, CliError> {
    let r = census(p, q)?;
    Ok(match format {
        OutputFormat::Json => to_json(&r),
        OutputFormat::Csv => {
            let mut s = String::from("A,B,value,members,rules\n");
            for class in &r.classes {
                let members: Vec<String> = class.members.iter().map(|m| m.to_string()).collect();
                let rules: Vec<&str> = class.rules.iter().map(|x| x.name()).collect();
                let _ = writeln!(
                    s,
                    "{},{},{:.9},{},{}",
                    class.rho2.a(),
                    class.rho2.b(),
                    class.rho2.to_f64(),
                    members.join(" "),
                    rules.join(" ")
                );
            }
            s
        }
        OutputFormat::Text => {
            let mut s = String::new();
            let _ = writeln!(
                s,
                "G_{{{p},{q}}}: b={} c={} ratio={} ({:.9})",
                r.b,
                r.c,
                r.ratio,
                r.ratio.to_f64()
            );
            let _ = writeln!(
                s,
                "k={} bound_statement={} bound_proof={}",
                r.k, r.bound_statement, r.bound_proof
            );
            let collisions: Vec<_> = r.collisions().collect();
            let _ = writeln!(s, "collision classes: {}", collisions.len());
            for class in collisions {
                let members: Vec<String> = class.members.iter().map(|m| m.to_string()).collect();
                let rules: Vec<&str> = class.rules.iter().map(|x| x.name()).collect();
                let _ = writeln!(
                    s,
                    "  rho^2={} ({:.9}): {} [{}]",
                    class.rho2,
                    class.rho2.to_f64(),
                    members.join(", "),
                    rules.join(", ")
                );
            }
            s
        }
    })
}

fn sweep_cmd(qmax: u64, format: OutputFormat) -> Result<String, CliError> {
    let rows = balanced_sweep(qmax)?;
    Ok(match format {
        OutputFormat::Json => to_json(&rows),
        OutputFormat::Csv => sweep_csv(&rows),
        OutputFormat::Text => {
            let mut s = format!(
                "{:>6} {:>10} {:>10} {:>12} {:>12}\n",
                "q", "b", "c", "ratio", "bound"
            );
            for r in &rows {
                let _ = writeln!(
                    s,
                    "{:>6} {:>10} {:>10} {:>12.9} {:>12.9}",
                    r.q, r.b, r.c, r.ratio, r.bound_ratio
                );
            }
            s
        }
    })
}

fn triplets_cmd(perimeter: u64, format: OutputFormat) -> Result<String, CliError> {
    let ts = pts_with_perimeter(perimeter);
    Ok(match format {
        OutputFormat::Json => to_json(&ts),
        OutputFormat::Csv => {
            let mut s = String::from("a,b,c\n");
            for t in &ts {
                let _ = writeln!(s, "{},{},{}", t.a(), t.b(), t.c());
            }
            s
        }
        OutputFormat::Text => {
            let mut s = String::new();
            if ts.is_empty() {
                let _ = writeln!(s, "no triplets with perimeter {perimeter}");
            }
            for t in &ts {
                let _ = writeln!(s, "{t}");
            }
            s
        }
    })
}

fn family_cmd(m: usize, format: OutputFormat) -> Result<String, CliError> {
    let family = equal_perimeter_family(m)?;
    let graphs = garlic_family_common_radius(m)?;
    Ok(match format {
        OutputFormat::Json => to_json(&family),
        OutputFormat::Csv => {
            let mut s = String::from("perimeter,a,b,c\n");
            for t in &family.triplets {
                let _ = writeln!(s, "{},{},{},{}", family.perimeter, t.a(), t.b(), t.c());
            }
            s
        }
        OutputFormat::Text => {
            let mut s = format!("perimeter {}\n", family.perimeter);
            for t in &family.triplets {
                let _ = writeln!(s, "{t}");
            }
            let names: Vec<String> = graphs.iter().map(|g| g.to_string()).collect();
            let _ = writeln!(
                s,
                "{} garlic graphs with rho^2 = {}: {}",
                graphs.len(),
                family.perimeter,
                names.join(", ")
            );
            s
        }
    })
}

fn spectrum_cmd(file: &PathBuf, tol: f64, format: OutputFormat) -> Result<String, CliError> {
    let text = std::fs::read_to_string(file)
        .map_err(|e| CliError::Io(format!("cannot read {}: {e}", file.display())))?;
    let graphs = read_graph6(&text)?;
    let mut rows = Vec::with_capacity(graphs.len());
    for g in &graphs {
        let census = b_c_r_numeric(g, tol)?;
        let spectrum = complementarity_spectrum_numeric(g, tol)?;
        rows.push((g.order(), census, spectrum));
    }
    Ok(match format {
        OutputFormat::Json => to_json(
            &rows
                .iter()
                .map(|(n, c, spec)| json!({"order": n, "b": c.b, "c": c.c, "r": c.r, "spectrum": spec}))
                .collect::<Vec<_>>(),
        ),
        OutputFormat::Csv => {
            let mut s = String::from("order,b,c,r\n");
            for (n, c, _) in &rows {
                let _ = writeln!(s, "{n},{},{},{:?}", c.b, c.c, c.r);
            }
            s
        }
        OutputFormat::Text => {
            let mut s = String::new();
            for (_, c, _) in &rows {
                let _ = writeln!(s, "b={} c={} r={:?}", c.b, c.c, c.r);
            }
            s
        }
    })
}

fn estimate_cmd(n: u64, format: OutputFormat) -> Result<String, CliError> {
    let exact = count_pts_legs_leq(n)?;
    let estimate = count_estimate(n);
    let constant = count_estimate_constant();
    Ok(match format {
        OutputFormat::Json => to_json(&json!({
            "n": n, "exact": exact, "estimate": estimate, "constant": constant,
        })),
        OutputFormat::Csv => {
            format!("n,exact,estimate,constant\n{n},{exact},{estimate:.6},{constant:.9}\n")
        }
        OutputFormat::Text => {
            format!("n={n} exact={exact} estimate={estimate:.3} (C n ln n, C={constant:.9})\n")
        }
    })
}

fn audit_cmd(grid: AuditGrid, format: OutputFormat) -> Result<Report, CliError> {
    let entries = audit_paper_claims(grid);
    let stdout = match format {
        OutputFormat::Json => to_json(&entries),
        OutputFormat::Csv => {
            let mut s = String::from("claim,location,status\n");
            for e in &entries {
                let _ = writeln!(s, "{},\"{}\",{}", e.claim, e.location, e.status.as_str());
            }
            s
        }
        OutputFormat::Text => {
            let mut s = String::new();
            for e in &entries {
                let _ = write!(
                    s,
                    "{:<10} {:<36} {}",
                    e.status.as_str(),
                    e.claim,
                    e.location
                );
                if let Some(w) = &e.witness {
                    let _ = write!(s, "\n           witness: {w}");
                }
                s.push('\n');
            }
            s
        }
    };
    Ok(Report {
        stdout,
        refuted: has_refutations(&entries),
    })
}

/// Executes a parsed command.
pub fn run(cli: &Cli) -> Result<Report, CliError> {
    if let Some(w) = cli.workers {
        if w == 0 {
            return Err(CliError::Usage("--workers must be at least 1".into()));
        }
        // A second initialization (e.g. in tests) keeps the first pool.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(w)
            .build_global();
    }
    let plain = |stdout: String| Report {
        stdout,
        refuted: false,
    };
    match &cli.command {
        Command::Info { params, format } => info(params.p, params.q, format.resolve()).map(plain),
        Command::Census { params, format } => {
            census_cmd(params.p, params.q, format.resolve()).map(plain)
        }
        Command::Sweep { qmax, format } => sweep_cmd(*qmax, format.resolve()).map(plain),
        Command::Triplets { perimeter, format } => {
            triplets_cmd(*perimeter, format.resolve()).map(plain)
        }
        Command::Family { m, format } => family_cmd(*m, format.resolve()).map(plain),
        Command::Spectrum { file, tol, format } => {
            spectrum_cmd(file, *tol, format.resolve()).map(plain)
        }
        Command::Estimate { n, format } => estimate_cmd(*n, format.resolve()).map(plain),
        Command::Audit { grid, format } => audit_cmd(*grid, format.resolve()),
    }
}

/// Parses, runs and writes output; returns the process exit code.
pub fn main_with<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match parse_args(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            return match sink.write_all(rendered.as_bytes()) {
                Ok(()) => code,
                Err(_) => EXIT_IO,
            };
        }
    };
    match run(&cli) {
        Ok(report) => match stdout
            .write_all(report.stdout.as_bytes())
            .and_then(|_| stdout.flush())
        {
            Ok(()) if report.refuted => EXIT_REFUTED,
            Ok(()) => EXIT_OK,
            Err(e) => {
                let _ = writeln!(stderr, "error: writing output: {e}");
                EXIT_IO
            }
        },
        Err(CliError::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USAGE
        }
        Err(CliError::Io(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_IO
        }
    }
}
