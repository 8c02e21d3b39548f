//! `kappa`: evaluate κ-deformed functions on grids, run the verification
//! suites and drive the integral transforms.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error, 3 numeric
//! guard (transform outside its convergence region).

mod grid;
mod registry;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use kappa_core::{
    kappa_entropy_discrete, kappa_statistical_weight, laplace_kappa_from, laplace_table,
    laplace_table_complex, inverse_laplace_kappa, mellin_kappa, mellin_kappa_incomplete_quadrature,
    run_suite, DiscreteDistribution, KappaError, KappaParam, QuadratureResult, QuadratureSpec,
    StatParams, Suite, TableEntry, ToleranceProfile,
};
use num_complex::Complex64;
use serde_json::json;

use grid::{csv_row, GridSpec, Scale};

const EXIT_VERIFY: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_GUARD: u8 = 3;

/// Overrides the subdivision budget of every quadrature the CLI runs.
const BUDGET_VAR: &str = "KAPPA_QUAD_MAX_SUBDIVISIONS";

#[derive(Parser)]
#[command(name = "kappa", version, about = "kappa-deformed functions, transforms and identity checks")]
#[command(allow_negative_numbers = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a function on a grid and write CSV `x,kappa,value`.
    Eval(EvalArgs),
    /// List the functions `eval` knows.
    Functions,
    /// Run identity checks; one JSON line per check.
    Verify(VerifyArgs),
    /// Laplace, inverse Laplace and Mellin transforms; one JSON line.
    #[command(subcommand)]
    Transform(TransformKind),
    /// Statistical weight grids and discrete entropies.
    #[command(subcommand)]
    Stat(StatKind),
}

#[derive(Args)]
struct GridArgs {
    #[arg(long, allow_negative_numbers = true)]
    xmin: f64,
    #[arg(long, allow_negative_numbers = true)]
    xmax: f64,
    #[arg(long, default_value_t = 101)]
    points: usize,
    /// Comma-separated list, e.g. `0,0.15`.
    #[arg(long, value_delimiter = ',', default_value = "0", allow_negative_numbers = true)]
    kappa: Vec<f64>,
    #[arg(long, value_enum, default_value_t = Scale::Linear)]
    scale: Scale,
    /// Write here instead of stdout.
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct EvalArgs {
    /// Function name; `kappa functions` lists them.
    function: String,
    #[command(flatten)]
    grid: GridArgs,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(value_enum)]
    suite: SuiteArg,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = ProfileArg::Default)]
    tolerance: ProfileArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Algebra,
    Functions,
    Calculus,
    Trig,
    Laplace,
    Stat,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::Algebra => Suite::Algebra,
            SuiteArg::Functions => Suite::Functions,
            SuiteArg::Calculus => Suite::Calculus,
            SuiteArg::Trig => Suite::Trig,
            SuiteArg::Laplace => Suite::Laplace,
            SuiteArg::Stat => Suite::Stat,
            SuiteArg::All => Suite::All,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ProfileArg {
    Strict,
    Default,
}

/// Originals with known transforms.
#[derive(Clone, Copy, ValueEnum)]
enum Descriptor {
    /// f = 1
    Const1,
    /// f = u(t − tau)
    Heaviside,
    /// f = t^(nu−1)
    Power,
    /// f = t^(2m−1)
    Odd,
    /// f = t^(2m)
    Even,
    /// f = δ(t − tau); closed form only
    Dirac,
}

#[derive(Args)]
struct EntryArgs {
    #[arg(value_enum)]
    descriptor: Descriptor,
    #[arg(long, default_value_t = 0.0)]
    tau: f64,
    #[arg(long, default_value_t = 1.0)]
    nu: f64,
    #[arg(long, default_value_t = 1)]
    m: u32,
}

impl EntryArgs {
    fn entry(&self) -> TableEntry {
        match self.descriptor {
            Descriptor::Const1 => TableEntry::Heaviside { tau: 0.0 },
            Descriptor::Heaviside => TableEntry::Heaviside { tau: self.tau },
            Descriptor::Power => TableEntry::Power { nu: self.nu },
            Descriptor::Odd => TableEntry::OddMonomial { m: self.m },
            Descriptor::Even => TableEntry::EvenMonomial { m: self.m },
            Descriptor::Dirac => TableEntry::Dirac { tau: self.tau },
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Quadrature,
    Table,
}

#[derive(Subcommand)]
enum TransformKind {
    /// F(s) = ∫ f(t) exp(−s{t}) dt.
    Laplace {
        #[command(flatten)]
        entry: EntryArgs,
        #[arg(long = "s", allow_negative_numbers = true)]
        s: f64,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        kappa: f64,
        /// Dirac rows always use the closed form.
        #[arg(long, value_enum, default_value_t = Method::Quadrature)]
        method: Method,
    },
    /// f(t) from the closed-form transform of a table row, by a Bromwich integral.
    Inverse {
        #[command(flatten)]
        entry: EntryArgs,
        #[arg(long = "t")]
        t: f64,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        kappa: f64,
        /// Contour abscissa; defaults to the convergence abscissa + 1.
        #[arg(long = "c")]
        c: Option<f64>,
    },
    /// M(r) = ∫ t^(r−1) exp_κ(−t) dt, or the lower incomplete form up to --x.
    Mellin {
        /// Ignored; accepted so every transform reads `transform <kind> <descriptor>`.
        descriptor: Option<String>,
        #[arg(long = "r")]
        r: f64,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        kappa: f64,
        #[arg(long = "x")]
        x: Option<f64>,
    },
}

#[derive(Subcommand)]
enum StatKind {
    /// CSV of exp_κ(−β(E − μ)) over an energy grid (x column is E).
    Weight {
        #[arg(long, default_value_t = 1.0)]
        beta: f64,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        mu: f64,
        #[command(flatten)]
        grid: GridArgs,
    },
    /// S_κ of a discrete distribution, one JSON line per κ.
    Entropy {
        /// Comma-separated probabilities.
        #[arg(long, value_delimiter = ',', required = true)]
        p: Vec<f64>,
        #[arg(long, value_delimiter = ',', default_value = "0")]
        kappa: Vec<f64>,
        /// Rescale the weights to sum to 1.
        #[arg(long)]
        normalize: bool,
    },
}

/// A failure with its exit code; the message goes to stderr.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<KappaError> for Failure {
    fn from(e: KappaError) -> Self {
        let code = match e {
            KappaError::Guard { .. } | KappaError::ConvergenceDomain { .. } => EXIT_GUARD,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::usage(format!("i/o error: {e}"))
    }
}

type CmdResult = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = quad_spec().and_then(|spec| match cli.command {
        Command::Eval(a) => cmd_eval(a),
        Command::Functions => {
            let mut out = std::io::stdout().lock();
            for e in registry::REGISTRY {
                writeln!(out, "{:16} {}", e.name, e.about)?;
            }
            Ok(0)
        }
        Command::Verify(a) => cmd_verify(a),
        Command::Transform(t) => cmd_transform(t, &spec),
        Command::Stat(s) => cmd_stat(s),
    });
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn quad_spec() -> Result<QuadratureSpec, Failure> {
    let spec = QuadratureSpec::default();
    match std::env::var(BUDGET_VAR) {
        Err(_) => Ok(spec),
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(spec.with_max_subdivisions(n)),
            _ => Err(Failure::usage(format!("{BUDGET_VAR} must be a positive integer, got {v:?}"))),
        },
    }
}

fn kappa_param(v: f64) -> Result<KappaParam, Failure> {
    KappaParam::new(v).map_err(|e| Failure::usage(e.to_string()))
}

fn grid_spec(g: &GridArgs) -> Result<GridSpec, Failure> {
    GridSpec::new(g.xmin, g.xmax, g.points, g.kappa.clone(), g.scale).map_err(Failure::usage)
}

fn emit(text: &str, output: Option<&PathBuf>) -> Result<(), Failure> {
    match output {
        Some(p) => std::fs::write(p, text)?,
        None => std::io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn cmd_eval(a: EvalArgs) -> CmdResult {
    let entry = registry::lookup(&a.function).ok_or_else(|| {
        Failure::usage(format!(
            "unknown function {:?}; known: {}",
            a.function,
            registry::names().join(", ")
        ))
    })?;
    let g = a.grid;
    let spec = grid_spec(&g)?;
    let mut out = String::from("x,kappa,value\n");
    let xs = spec.xs();
    for &kv in &spec.kappas {
        let k = kappa_param(kv)?;
        for &x in &xs {
            let v = (entry.eval)(x, k).unwrap_or_else(|e| {
                eprintln!("warning: {}(x={x}, kappa={kv}): {e}", entry.name);
                f64::NAN
            });
            csv_row(&mut out, x, kv, v);
        }
    }
    emit(&out, g.output.as_ref())?;
    Ok(0)
}

fn cmd_verify(a: VerifyArgs) -> CmdResult {
    let suite = Suite::from(a.suite);
    let (profile, profile_name) = match a.tolerance {
        ProfileArg::Strict => (ToleranceProfile::Strict, "strict"),
        ProfileArg::Default => (ToleranceProfile::Default, "default"),
    };
    let reports = run_suite(suite, a.seed, profile);
    let mut out = std::io::stdout().lock();
    let header = json!({
        "suite": suite.name(),
        "seed": a.seed,
        "tolerance": profile_name,
        "checks": reports.len(),
    });
    writeln!(out, "{header}")?;
    let mut failed = Vec::new();
    for r in &reports {
        let mut line = json!({
            "suite": r.suite.name(),
            "anchor": r.anchor,
            "residual": r.residual,
            "tolerance": r.tolerance,
            "pass": r.pass,
        });
        if let Some(n) = &r.note {
            line["note"] = json!(n);
        }
        writeln!(out, "{line}")?;
        if !r.pass {
            failed.push(format!("{}: {}", r.suite.name(), r.anchor));
        }
    }
    let summary = json!({
        "passed": reports.len() - failed.len(),
        "failed": failed.len(),
        "failures": failed,
    });
    writeln!(out, "{summary}")?;
    Ok(if failed.is_empty() { 0 } else { EXIT_VERIFY })
}

fn print_result(value: f64, error_estimate: f64, converged: bool, extra: serde_json::Value) {
    let mut line = json!({
        "value": value,
        "error_estimate": error_estimate,
        "converged": converged,
    });
    if let (Some(obj), serde_json::Value::Object(more)) = (line.as_object_mut(), extra) {
        obj.extend(more);
    }
    println!("{line}");
}

fn print_quadrature(r: QuadratureResult, extra: serde_json::Value) {
    print_result(r.value, r.error_estimate, r.converged, extra);
}

/// Echoes the offending values on stdout before exiting with the guard code.
fn guard_report(e: &KappaError, kappa: f64) {
    let line = match *e {
        KappaError::Guard { s, bound } => json!({"error": "guard", "s": s, "bound": bound, "kappa": kappa}),
        KappaError::ConvergenceDomain { what, value } => {
            json!({"error": "convergence_domain", "what": what, "value": value, "kappa": kappa})
        }
        _ => return,
    };
    println!("{line}");
}

fn cmd_transform(t: TransformKind, spec: &QuadratureSpec) -> CmdResult {
    let (kv, run) = match &t {
        TransformKind::Laplace { kappa, .. }
        | TransformKind::Inverse { kappa, .. }
        | TransformKind::Mellin { kappa, .. } => (*kappa, transform(&t, spec)),
    };
    if let Err(e) = &run {
        guard_report(e, kv);
    }
    run.map(|_| 0).map_err(Failure::from)
}

fn transform(t: &TransformKind, spec: &QuadratureSpec) -> kappa_core::Result<()> {
    match t {
        TransformKind::Laplace { entry, s, kappa, method } => {
            let k = KappaParam::new(*kappa)?;
            let e = entry.entry();
            // validates the row and the guard s > |κ|ν
            let closed = laplace_table(e, *s, k)?;
            if *method == Method::Table || matches!(e, TableEntry::Dirac { .. }) {
                print_result(closed, 0.0, true, json!({"method": "table"}));
            } else {
                let f = |x: f64| e.original(x).unwrap_or(f64::NAN);
                let r = laplace_kappa_from(&f, e.support_start(), *s, k, e.growth(), spec)?;
                print_quadrature(r, json!({"method": "quadrature", "closed_form": closed}));
            }
        }
        TransformKind::Inverse { entry, t, kappa, c } => {
            let k = KappaParam::new(*kappa)?;
            let e = entry.entry();
            if matches!(e, TableEntry::Dirac { .. }) {
                return Err(KappaError::Input("a Dirac row has no pointwise inverse".into()));
            }
            let c = c.unwrap_or_else(|| e.growth().abscissa(k).max(0.0) + 1.0);
            e.growth().check(c, k)?;
            let big_f = |s: Complex64| laplace_table_complex(e, s, k).unwrap_or(Complex64::new(f64::NAN, f64::NAN));
            let r = inverse_laplace_kappa(&big_f, *t, k, c, spec)?;
            let exact = e.original(*t).unwrap_or(f64::NAN);
            print_quadrature(r, json!({"contour": c, "original": exact}));
        }
        TransformKind::Mellin { r, kappa, x, .. } => {
            let k = KappaParam::new(*kappa)?;
            match x {
                None => print_result(mellin_kappa(*r, k)?, 0.0, true, json!({"method": "closed_form"})),
                Some(x) => {
                    let q = mellin_kappa_incomplete_quadrature(*r, *x, k, spec);
                    print_quadrature(q, json!({"method": "quadrature", "x": x}));
                }
            }
        }
    }
    Ok(())
}

fn cmd_stat(s: StatKind) -> CmdResult {
    match s {
        StatKind::Weight { beta, mu, grid } => {
            let spec = grid_spec(&grid)?;
            let xs = spec.xs();
            let mut out = String::from("x,kappa,value\n");
            for &kv in &spec.kappas {
                let p = StatParams::new(beta, mu, kappa_param(kv)?)?;
                for &e in &xs {
                    csv_row(&mut out, e, kv, kappa_statistical_weight(e, &p));
                }
            }
            emit(&out, grid.output.as_ref())?;
        }
        StatKind::Entropy { p, kappa, normalize } => {
            let d = if normalize {
                DiscreteDistribution::normalized(p)
            } else {
                DiscreteDistribution::new(p)
            }?;
            for kv in kappa {
                let s = kappa_entropy_discrete(&d, kappa_param(kv)?)?;
                println!("{}", json!({"kappa": kv, "entropy": s}));
            }
        }
    }
    Ok(0)
}
