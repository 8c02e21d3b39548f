//! Acceptance gate: one PASS/FAIL line per criterion. Runs without the test
//! harness so the lines always reach stdout.

use std::process::{Command, ExitCode};

use kappa_core::special::gamma;
use kappa_core::verify::ALGEBRA_SAMPLES;
use kappa_core::{run_suite, CheckReport, Suite, ToleranceProfile};

const SEED: u64 = 42;

struct Gate {
    failures: usize,
}

impl Gate {
    fn line(&mut self, n: u32, title: &str, ok: bool, detail: String) {
        if !ok {
            self.failures += 1;
        }
        println!("[{}] {n:>2}. {title}: {detail}", if ok { "PASS" } else { "FAIL" });
    }
}

/// Every pattern must match at least one report, and every matched report must pass.
fn judge(reports: &[CheckReport], patterns: &[&str]) -> (bool, String) {
    let mut ok = true;
    let mut used = 0;
    let mut worst: f64 = 0.0;
    let mut problems = Vec::new();
    for p in patterns {
        let hits: Vec<&CheckReport> = reports.iter().filter(|r| r.anchor.contains(p)).collect();
        if hits.is_empty() {
            ok = false;
            problems.push(format!("no check matches {p:?}"));
        }
        for r in hits {
            used += 1;
            if !r.pass {
                ok = false;
                problems.push(format!("{} (residual {:e}, tolerance {:e})", r.anchor, r.residual, r.tolerance));
            }
            // expected failures pass by exceeding their threshold
            let expect_fail = r.anchor.contains("does not hold");
            if r.tolerance > 0.0 && !expect_fail {
                worst = worst.max(r.residual / r.tolerance);
            }
        }
    }
    let detail = if ok {
        format!("{used} checks, worst residual/tolerance {worst:.2e}")
    } else {
        problems.join("; ")
    };
    (ok, detail)
}

fn run_kappa(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_kappa"))
        .args(args)
        .env_remove("KAPPA_QUAD_MAX_SUBDIVISIONS")
        .output()
        .expect("run kappa")
}

/// The plotted grids: exp_κ, Γ_κ on two ranges, ln_κ, sinh_κ/cosh_κ at κ = 0.3.
const FIGURES: [(&str, &str, &str, &str, &str); 6] = [
    ("exp_kappa", "-4", "4", "161", "0,0.4,0.8"),
    ("gamma_kappa", "-4", "4", "161", "0,0.15"),
    ("gamma_kappa", "9", "12", "61", "0,0.15"),
    ("ln_kappa", "0.05", "5", "100", "0,0.4,0.8"),
    ("sinh_kappa", "-5", "5", "101", "0,0.3"),
    ("cosh_kappa", "-5", "5", "101", "0,0.3"),
];

fn classical(f: &str, x: f64) -> f64 {
    match f {
        "exp_kappa" => x.exp(),
        "gamma_kappa" => gamma(x),
        "ln_kappa" => x.ln(),
        "sinh_kappa" => x.sinh(),
        "cosh_kappa" => x.cosh(),
        _ => f64::NAN,
    }
}

fn cli_criterion() -> (bool, String) {
    let mut problems = Vec::new();
    let v = run_kappa(&["verify", "all", "--seed", "1", "--tolerance", "strict"]);
    if v.status.code() != Some(0) {
        problems.push(format!("verify all exited {:?}", v.status.code()));
    }
    let mut rows = 0;
    for (f, lo, hi, n, ks) in FIGURES {
        let args = ["eval", f, "--xmin", lo, "--xmax", hi, "--points", n, "--kappa", ks];
        let a = run_kappa(&args);
        let b = run_kappa(&args);
        if !a.status.success() {
            problems.push(format!("eval {f} exited {:?}", a.status.code()));
            continue;
        }
        if a.stdout != b.stdout {
            problems.push(format!("eval {f} on [{lo}, {hi}] is not deterministic"));
        }
        let text = String::from_utf8_lossy(&a.stdout);
        let mut lines = text.lines();
        if lines.next() != Some("x,kappa,value") {
            problems.push(format!("eval {f}: bad header"));
        }
        for line in lines {
            rows += 1;
            let cols: Vec<f64> = line.split(',').map(|c| c.parse().unwrap_or(f64::NAN)).collect();
            let (x, k, y) = (cols[0], cols[1], cols[2]);
            if k == 0.0 {
                let want = classical(f, x);
                let bad = if want.is_finite() {
                    (y - want).abs() > 1e-12 * want.abs().max(1.0)
                } else {
                    !y.is_nan()
                };
                if bad {
                    problems.push(format!("{f}({x}) at kappa = 0 is {y}, expected {want}"));
                }
            }
        }
    }
    if problems.is_empty() {
        (true, format!("verify all exit 0; {rows} deterministic figure rows, kappa = 0 rows classical"))
    } else {
        (false, problems.join("; "))
    }
}

fn main() -> ExitCode {
    let reports = run_suite(Suite::All, SEED, ToleranceProfile::Strict);
    let of = |s: Suite| -> Vec<CheckReport> { reports.iter().filter(|r| r.suite == s).cloned().collect() };
    let algebra = of(Suite::Algebra);
    let functions = of(Suite::Functions);
    let laplace = of(Suite::Laplace);
    let trig = of(Suite::Trig);
    let stat = of(Suite::Stat);
    let mut g = Gate { failures: 0 };

    let (ok, d) = judge(&algebra, &["associativity", "commutativity", "neutral", "opposite", "unit", "inverse element", "distributes", "isomorphism"]);
    let field_axioms_ok = ok && ALGEBRA_SAMPLES >= 10_000 && algebra.iter().all(|r| r.tolerance <= 1e-11);
    g.line(1, "field axioms and isomorphism, 1e4 random samples", field_axioms_ok, d);

    let (ok, d) = judge(
        &functions,
        &[
            "exp_0.5(1) = 2.618034",
            "ln_0.5(4) = 1.5",
            "ln_kappa(exp_kappa(x)) = x",
            "exp_kappa(ln_kappa(x)) = x",
            "exp_kappa(x) exp_kappa(y)",
            "exp_kappa(x)^r",
            "exp_kappa(-x)(2 kappa x)^(1/kappa)",
        ],
    );
    g.line(2, "exp/ln closed forms", ok, d);

    let (ok, d) = judge(&functions, &["gamma_kappa(1) = gamma_kappa(2) = 1", "xi_n table", "Taylor prefix"]);
    g.line(3, "reference values: Gamma at 1, 2, 3; xi table; Taylor prefix", ok, d);

    let (ok, d) = judge(&functions, &["mellin_kappa(1, 0.5) = 4/3", "Mellin recursion", "incomplete Mellin", "n!_kappa"]);
    g.line(4, "Mellin transform of exp_kappa(-t)", ok, d);

    let (ok, d) = judge(&functions, &["Gamma-ratio, Mellin-integral and ln_kappa-integral"]);
    g.line(5, "Gamma_kappa cross-representation", ok, d);

    let (ok, d) = judge(
        &laplace,
        &["transform table rows", "Dirac row", "convolution theorem", "final value", "Bessel-kernel", "inverse transform"],
    );
    g.line(6, "kappa-Laplace transform", ok, d);

    let (ok, d) = judge(
        &trig,
        &["cosh_kappa^2 - sinh_kappa^2", "cos_kappa^2 + sin_kappa^2", "hyperbolic addition", "cyclic addition", "De Moivre", "arccosh analogue"],
    );
    g.line(7, "kappa-trigonometry", ok, d);

    let (ok, d) = judge(&stat, &["stationarity", "uniform distribution maximizes", "zero-weight state", "tail exponent"]);
    g.line(8, "entropy and maximum-entropy distribution", ok, d);

    let (ok, d) = judge(&reports, &["kappa = 1e-10 reproduces"]);
    let covered = ["functions", "trig", "laplace", "stat"].iter().all(|s| {
        reports.iter().any(|r| r.suite.name() == *s && r.anchor.contains("kappa = 1e-10 reproduces"))
    });
    g.line(9, "degeneracy at kappa = 1e-10", ok && covered, d);

    let (ok, d) = cli_criterion();
    g.line(10, "CLI verify and figure grids", ok, d);

    if g.failures == 0 {
        println!("acceptance: all 10 criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {} criteria fail", g.failures);
        ExitCode::FAILURE
    }
}
