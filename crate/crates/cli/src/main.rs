mod output;

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use num_rational::BigRational;
use serde_json::{json, Value};

use umbra_core::appell::{self, AppellFamily};
use umbra_core::checks::{self, Status, SuiteConfig};
use umbra_core::exec::{self, Execution};
use umbra_core::opcalc::{self as op, GridFunction, InitialCondition, Spectrum};
use umbra_core::scalar::{parse_rational, rational_to_complex, rational_to_f64};
use umbra_core::seqcore::{self, HermiteParams, LaguerreParams, ModularParams, Sequence};
use umbra_core::Error;

use output::{render, Format, Table};

const COLUMNS_HELP: &str = "\
CSV output starts each table with `# key=value` header lines (table name,
quadrature node counts, summary values), followed by a header row.

Columns:
  check   suite, check, status (pass | fail | flagged-errata), residual,
          tolerance, nodes [, runtime_s with --timings]
  expand  coefficients: n, re, im, oracle, abs_diff, nodes, converged
          (oracle is empty when the operational series for 1/A does
          not settle, e.g. when 1/A has a finite radius of convergence)
          reconstruction: x, re, im, f, residual
  evolve  x, tau, re, im, oracle, oracle_residual, nodes
          (for heat, tau is the evolution parameter alpha)

Exit status: 0 success, 1 a check failed, 2 unreadable input,
3 invalid parameters or unknown suite, 4 integrability or region guard.";

#[derive(Parser)]
#[command(name = "umbra", version, about = "Umbral sequence transforms, identity suites, Appell expansions and evolution demos")]
#[command(after_long_help = COLUMNS_HELP, allow_negative_numbers = true)]
struct Cli {
    /// Output format for tables.
    #[arg(long, global = true, value_enum, default_value = "csv")]
    format: Format,
    /// Replaces the default tolerance of floating-point checks.
    #[arg(long, global = true)]
    tolerance: Option<f64>,
    /// Seed for randomized suites.
    #[arg(long, global = true, default_value_t = SuiteConfig::default().seed)]
    seed: u64,
    /// Truncation order override.
    #[arg(long, global = true)]
    order: Option<usize>,
    /// Add a runtime column to check reports.
    #[arg(long, global = true)]
    timings: bool,
    /// Run everything on the calling thread.
    #[arg(long, global = true)]
    sequential: bool,
    /// Write to this file instead of stdout.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Apply an exact transform to a sequence file (`{"terms": ["p/q", ...]}`; `-` reads stdin).
    #[command(allow_negative_numbers = true)]
    Transform {
        #[arg(value_enum)]
        transform: TransformName,
        input: PathBuf,
        #[arg(long, value_parser = rational_arg)]
        alpha: Option<BigRational>,
        #[arg(long, value_parser = rational_arg)]
        beta: Option<BigRational>,
        /// Power for rising-k.
        #[arg(long)]
        k: Option<u32>,
    },
    /// Run an identity suite, or `all`.
    #[command(allow_negative_numbers = true)]
    Check {
        suite: String,
    },
    /// Expand exp(-c x^2) in an Appell basis.
    #[command(allow_negative_numbers = true)]
    Expand {
        /// identity | bernoulli | gauss-hermite-type | gaussian:<c> for A = exp(c t^2) | taylor:<file>
        #[arg(long)]
        family: String,
        #[arg(long, value_enum, default_value = "gaussian")]
        function: FunctionName,
        /// The c in exp(-c x^2).
        #[arg(long, default_value = "1", value_parser = rational_arg)]
        scale: BigRational,
        /// Highest coefficient index.
        #[arg(short, long, default_value_t = 10)]
        n: usize,
        /// Reconstruction grid as `start:end:points`.
        #[arg(long, default_value = "-1:1:21", value_parser = grid_arg)]
        grid: Grid,
    },
    /// Evolve initial data and compare with an oracle where one exists.
    #[command(allow_negative_numbers = true)]
    Evolve {
        #[command(subcommand)]
        equation: Equation,
    },
}

#[derive(Subcommand)]
enum Equation {
    /// exp(alpha d^2) applied to exp(-c x^2) on a periodic grid.
    #[command(allow_negative_numbers = true)]
    Heat {
        #[arg(long, default_value_t = 0.5)]
        alpha: f64,
        #[arg(long, default_value_t = 0.5)]
        scale: f64,
        #[arg(long, default_value_t = 20.0)]
        half_width: f64,
        #[arg(long, default_value_t = 512)]
        points: usize,
    },
    /// exp(-tau D^-1) applied to C_0.
    #[command(allow_negative_numbers = true)]
    Tricomi {
        #[arg(long, default_value = "0:1:11", value_parser = grid_arg)]
        x: Grid,
        #[arg(long, default_value = "0:1:11", value_parser = grid_arg)]
        tau: Grid,
    },
    /// exp(-tau (LD + beta D^-1)^m) applied to the initial data.
    #[command(allow_negative_numbers = true)]
    IntegroDiff {
        #[arg(long, default_value_t = 2)]
        m: usize,
        #[arg(long, default_value_t = 0.0)]
        beta: f64,
        #[arg(long, default_value = "0:0.5:6", value_parser = grid_arg)]
        x: Grid,
        #[arg(long, default_value = "0:0.5:6", value_parser = grid_arg)]
        tau: Grid,
        /// `tricomi` or `poly:c0,c1,...` with rational coefficients.
        #[arg(long, default_value = "tricomi")]
        initial: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TransformName {
    Binomial,
    Modular,
    ModularInverse,
    RisingK,
    Hermite,
    HermiteComplementary,
    HermiteInverse,
    Laguerre,
}

#[derive(Clone, Copy, ValueEnum)]
enum FunctionName {
    Gaussian,
}

#[derive(Clone, Debug)]
struct Grid(Vec<f64>);

fn rational_arg(s: &str) -> Result<BigRational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn grid_arg(s: &str) -> Result<Grid, String> {
    let parts: Vec<&str> = s.split(':').collect();
    let num = |t: &str| t.trim().parse::<f64>().map_err(|e| format!("{t:?}: {e}"));
    match parts.as_slice() {
        [v] => Ok(Grid(vec![num(v)?])),
        [a, b, n] => {
            let (a, b) = (num(a)?, num(b)?);
            let n: usize = n.trim().parse().map_err(|e| format!("{n:?}: {e}"))?;
            match n {
                0 => Err("a grid needs at least one point".into()),
                1 => Ok(Grid(vec![a])),
                _ => Ok(Grid((0..n).map(|j| (a * (n - 1 - j) as f64 + b * j as f64) / (n - 1) as f64).collect())),
            }
        }
        _ => Err(format!("expected `value` or `start:end:points`, got {s:?}")),
    }
}

/// A failure with the exit status it maps to.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::ParseRational { .. } => 2,
            Error::InvalidParameter(_) | Error::UnsupportedSymbol(_) | Error::Precondition(_) => 3,
            Error::NotIntegrable { .. } | Error::Truncation(_) | Error::Divergence(_) | Error::DomainTooSmall(_) => 4,
            Error::Internal(_) => 1,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure { code: 1, message: e.to_string() }
    }
}

fn invalid(message: String) -> Failure {
    Failure { code: 3, message }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("umbra: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: &Cli) -> Result<u8, Failure> {
    let exec = if cli.sequential { Execution::Sequential } else { Execution::Parallel };
    match &cli.command {
        Command::Transform { transform, input, alpha, beta, k } => {
            let a = read_sequence(input)?;
            let b = transform_sequence(*transform, &a, alpha.as_ref(), beta.as_ref(), *k)?;
            emit_text(cli, &format!("{}\n", b.to_json()))?;
            Ok(0)
        }
        Command::Check { suite } => {
            let cfg = SuiteConfig { tolerance: cli.tolerance, seed: cli.seed, order: cli.order, exec };
            let rows = checks::run_suite(suite, &cfg)?;
            let failed = rows.iter().filter(|r| r.status == Status::Fail).count();
            emit_tables(cli, &[check_table(suite, &rows, cli.timings)])?;
            Ok(if failed > 0 { 1 } else { 0 })
        }
        Command::Expand { family, function: FunctionName::Gaussian, scale, n, grid } => {
            let order = cli.order.unwrap_or(appell::DEFAULT_ORDER);
            let fam = parse_family(family, order)?;
            emit_tables(cli, &expand_tables(exec, &fam, scale, *n, grid)?)?;
            Ok(0)
        }
        Command::Evolve { equation } => {
            emit_tables(cli, &[evolve_table(exec, equation)?])?;
            Ok(0)
        }
    }
}

fn read_sequence(path: &Path) -> Result<Sequence, Failure> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        s
    } else {
        fs::read_to_string(path)
            .map_err(|e| Failure { code: 2, message: format!("{}: {e}", path.display()) })?
    };
    Sequence::from_json(&text).map_err(|e| Failure { code: 2, message: format!("{}: {e}", path.display()) })
}

fn required<'a>(v: Option<&'a BigRational>, name: &str, transform: &str) -> Result<&'a BigRational, Failure> {
    v.ok_or_else(|| invalid(format!("{transform} needs --{name}")))
}

fn transform_sequence(
    t: TransformName,
    a: &Sequence,
    alpha: Option<&BigRational>,
    beta: Option<&BigRational>,
    k: Option<u32>,
) -> Result<Sequence, Failure> {
    let name = t.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default();
    let ab = || -> Result<(BigRational, BigRational), Failure> {
        Ok((required(alpha, "alpha", &name)?.clone(), required(beta, "beta", &name)?.clone()))
    };
    Ok(match t {
        TransformName::Binomial => seqcore::binomial_transform(a),
        TransformName::Modular => {
            let (al, be) = ab()?;
            seqcore::modular_transform(a, &ModularParams::new(al, be))
        }
        TransformName::ModularInverse => {
            let (al, be) = ab()?;
            seqcore::modular_inverse(a, &ModularParams::new(al, be))?
        }
        TransformName::RisingK => {
            seqcore::rising_k_binomial(a, k.ok_or_else(|| invalid("rising-k needs --k".into()))?)
        }
        TransformName::Hermite => {
            let (al, be) = ab()?;
            seqcore::hermite_transform_seq(a, &HermiteParams::new(al, be))
        }
        TransformName::HermiteComplementary => {
            let (al, be) = ab()?;
            seqcore::hermite_complementary_seq(a, &HermiteParams::new(al, be))
        }
        TransformName::HermiteInverse => {
            let (al, be) = ab()?;
            seqcore::hermite_inverse_seq(a, &HermiteParams::new(al, be))?
        }
        TransformName::Laguerre => {
            let (al, be) = ab()?;
            seqcore::laguerre_transform_seq(a, &LaguerreParams::new(al, be))
        }
    })
}

fn check_table(suite: &str, rows: &[checks::CheckRow], timings: bool) -> Table {
    let mut cols = vec!["suite", "check", "status", "residual", "tolerance", "nodes"];
    if timings {
        cols.push("runtime_s");
    }
    let mut t = Table::new("check", &cols);
    let count = |s: Status| rows.iter().filter(|r| r.status == s).count();
    t.meta("suite", suite);
    t.meta("passed", count(Status::Pass));
    t.meta("failed", count(Status::Fail));
    t.meta("flagged_errata", count(Status::FlaggedErrata));
    t.meta("max_nodes", rows.iter().filter_map(|r| r.nodes).max());
    for r in rows {
        let mut row = vec![
            json!(r.suite),
            json!(r.check),
            json!(r.status.label()),
            json!(r.residual),
            json!(r.tolerance),
            json!(r.nodes),
        ];
        if timings {
            row.push(json!(r.runtime.as_secs_f64()));
        }
        t.push(row);
    }
    t
}

fn parse_family(spec: &str, order: usize) -> Result<AppellFamily, Failure> {
    let fam = match spec {
        "identity" => AppellFamily::identity(order)?,
        "bernoulli" => AppellFamily::bernoulli(order)?,
        "gauss-hermite-type" => AppellFamily::gaussian(BigRational::from_integer((-1).into()), order)?,
        _ => {
            if let Some(c) = spec.strip_prefix("gaussian:") {
                AppellFamily::gaussian(parse_rational(c).map_err(|e| invalid(e.to_string()))?, order)?
            } else if let Some(path) = spec.strip_prefix("taylor:") {
                AppellFamily::from_taylor(read_sequence(Path::new(path))?.into_terms(), order)?
            } else {
                return Err(invalid(format!(
                    "unknown family {spec:?}; expected identity, bernoulli, gauss-hermite-type, gaussian:<c> or taylor:<file>"
                )));
            }
        }
    };
    Ok(fam)
}

/// Taylor terms of `exp(-c x²)` fed to the operational oracle.
const ORACLE_TAYLOR_TERMS: usize = 240;

/// The operational oracle summed at two truncations; `None` unless both
/// agree to 1e-12 relative.
fn operational_oracle(fam: &AppellFamily, c: &BigRational, n: usize) -> Result<Option<Vec<f64>>, Failure> {
    let sum = |terms| -> Result<Vec<f64>, Failure> {
        Ok(appell::operational_coefficients(fam, &appell::gaussian_taylor(c, terms), n)?
            .iter()
            .map(rational_to_f64)
            .collect())
    };
    let (long, short) = (sum(ORACLE_TAYLOR_TERMS)?, sum(ORACLE_TAYLOR_TERMS - 40)?);
    let settled = long
        .iter()
        .zip(&short)
        .all(|(a, b)| a.is_finite() && (a - b).abs() <= 1e-12 * a.abs().max(1.0));
    Ok(settled.then_some(long))
}

fn expand_tables(exec: Execution, fam: &AppellFamily, c: &BigRational, n: usize, grid: &Grid) -> Result<Vec<Table>, Failure> {
    let cf = rational_to_f64(c);
    let f = Spectrum::gaussian(cf)?;
    let res = appell::expansion_coefficients_with(exec, fam, &f, n)?;
    let oracle = operational_oracle(fam, c, n)?;

    let mut coeffs = Table::new("coefficients", &["n", "re", "im", "oracle", "abs_diff", "nodes", "converged"]);
    coeffs.meta("family", fam.label());
    coeffs.meta("function", format!("exp(-{c} x^2)"));
    coeffs.meta("max_imaginary", res.max_imaginary);
    coeffs.meta("max_nodes", res.nodes.iter().copied().max());
    for (j, a) in res.coefficients.iter().enumerate() {
        let o = oracle.as_ref().map(|o| o[j]);
        coeffs.push(vec![
            json!(j),
            json!(a.re),
            json!(a.im),
            json!(o),
            json!(o.map(|o| (a - o).norm())),
            json!(res.nodes[j]),
            json!(res.converged[j]),
        ]);
    }

    let mut recon = Table::new("reconstruction", &["x", "re", "im", "f", "residual"]);
    let mut sup: f64 = 0.0;
    let mut rows = Vec::with_capacity(grid.0.len());
    for &x in &grid.0 {
        let v = appell::reconstruct(fam, &res, x)?;
        let fx = (-cf * x * x).exp();
        let r = (v - fx).norm();
        sup = sup.max(r);
        rows.push(vec![json!(x), json!(v.re), json!(v.im), json!(fx), json!(r)]);
    }
    recon.meta("sup_residual", sup);
    for r in rows {
        recon.push(r);
    }
    Ok(vec![coeffs, recon])
}

fn parse_initial(spec: &str) -> Result<InitialCondition, Failure> {
    if spec == "tricomi" {
        return Ok(InitialCondition::Tricomi);
    }
    let Some(list) = spec.strip_prefix("poly:") else {
        return Err(invalid(format!("unknown initial condition {spec:?}; expected tricomi or poly:c0,c1,...")));
    };
    let coeffs = list
        .split(',')
        .map(|t| parse_rational(t.trim()).map(|r| rational_to_complex(&r)))
        .collect::<Result<Vec<Complex64>, _>>()
        .map_err(|e| invalid(e.to_string()))?;
    Ok(InitialCondition::Polynomial(coeffs))
}

const EVOLVE_COLUMNS: [&str; 7] = ["x", "tau", "re", "im", "oracle", "oracle_residual", "nodes"];

struct EvolvedPoint {
    x: f64,
    tau: f64,
    value: Complex64,
    oracle: Option<Complex64>,
    nodes: usize,
}

fn point_row(p: &EvolvedPoint) -> Vec<Value> {
    vec![
        json!(p.x),
        json!(p.tau),
        json!(p.value.re),
        json!(p.value.im),
        json!(p.oracle.map(|o| o.re)),
        json!(p.oracle.map(|o| (p.value - o).norm())),
        json!(p.nodes),
    ]
}

fn grid_pairs(x: &Grid, tau: &Grid) -> Vec<(f64, f64)> {
    x.0.iter().flat_map(|&a| tau.0.iter().map(move |&t| (a, t))).collect()
}

fn collect_points(name: &str, points: Vec<Result<EvolvedPoint, Error>>) -> Result<Table, Failure> {
    let points = points.into_iter().collect::<Result<Vec<_>, _>>()?;
    let mut t = Table::new(name, &EVOLVE_COLUMNS);
    t.meta("max_nodes", points.iter().map(|p| p.nodes).max());
    t.meta(
        "max_oracle_residual",
        points.iter().filter_map(|p| p.oracle.map(|o| (p.value - o).norm())).fold(None, |m: Option<f64>, r| {
            Some(m.map_or(r, |m| m.max(r)))
        }),
    );
    for p in &points {
        t.push(point_row(p));
    }
    Ok(t)
}

fn evolve_table(exec: Execution, eq: &Equation) -> Result<Table, Failure> {
    match eq {
        Equation::Heat { alpha, scale, half_width, points } => {
            if !(*scale > 0.0 && scale.is_finite()) {
                return Err(invalid(format!("scale must be positive, got {scale}")));
            }
            if *alpha < 0.0 {
                return Err(invalid(format!("alpha must be nonnegative, got {alpha}")));
            }
            let f = GridFunction::from_fn(|x| Complex64::new((-scale * x * x).exp(), 0.0), *half_width, *points)?;
            let g = op::heat_evolve_ft(&f, *alpha)?;
            let w = 1.0 + 4.0 * scale * alpha;
            let pts = (0..g.len())
                .map(|j| {
                    let x = g.x(j);
                    Ok(EvolvedPoint {
                        x,
                        tau: *alpha,
                        value: g.samples()[j],
                        oracle: Some(Complex64::new((-scale * x * x / w).exp() / w.sqrt(), 0.0)),
                        nodes: g.len(),
                    })
                })
                .collect();
            collect_points("heat", pts)
        }
        Equation::Tricomi { x, tau } => {
            let pts = exec::map(exec, &grid_pairs(x, tau), |&(x, tau)| {
                let r = op::tricomi_evolution(x, tau)?;
                Ok(EvolvedPoint {
                    x,
                    tau,
                    value: r.value,
                    oracle: Some(Complex64::new(op::tricomi_evolution_series(x, tau), 0.0)),
                    nodes: r.nodes,
                })
            });
            collect_points("tricomi", pts)
        }
        Equation::IntegroDiff { m, beta, x, tau, initial } => {
            let f = parse_initial(initial)?;
            let pts = exec::map(exec, &grid_pairs(x, tau), |&(x, tau)| {
                let r = op::integro_diff_evolve(&f, *beta, *m, tau, x)?;
                let oracle = op::integro_diff_matrix_oracle(&f, *beta, *m, tau, x, op::laguerre::ORACLE_DEGREE)?;
                Ok(EvolvedPoint { x, tau, value: r.value, oracle: Some(oracle), nodes: r.nodes })
            });
            collect_points("integro-diff", pts)
        }
    }
}

fn emit_tables(cli: &Cli, tables: &[Table]) -> Result<(), Failure> {
    let mut buf = Vec::new();
    render(tables, cli.format, &mut buf)?;
    emit_bytes(cli, &buf)
}

fn emit_text(cli: &Cli, text: &str) -> Result<(), Failure> {
    emit_bytes(cli, text.as_bytes())
}

fn emit_bytes(cli: &Cli, bytes: &[u8]) -> Result<(), Failure> {
    match &cli.output {
        Some(path) => fs::write(path, bytes)?,
        None => io::stdout().lock().write_all(bytes)?,
    }
    Ok(())
}
