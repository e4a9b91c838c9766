use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use pvi::crosscheck::{run_suite, sse_sigma_from_toeplitz, Suite, KNOWN_FAILURES};
use pvi::expansions::{an_boundary_series, circle_gap_series, jue_gap_series, CircleGroup};
use pvi::fredholm_jacobi::{circle_gap, default_order, fredholm_det, JacobiWeightParams};
use pvi::monodromy::{
    connection_residual, invariants_from_matrices, manifold_value, sse_case_data,
    sse_case_matrices, SseCase, Sign,
};
use pvi::report::RunReport;
use pvi::toeplitz::{eval_an_at, xi_star_from_xi, Center, EnsembleParameters};
use pvi::{c64, Error, C64};

#[derive(Parser)]
#[command(name = "pvi", version, about = "Painleve VI sigma-form numerics")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Spectrum singularity average A_N(t) from its Toeplitz determinant.
    An(AnArgs),
    /// Gap probability generating functions.
    Gap(GapArgs),
    /// Monodromy data and matrices of one of the three cases.
    Monodromy(MonodromyArgs),
    /// Run the acceptance criteria.
    Crosscheck(CrosscheckArgs),
}

/// Complex numbers are written `1.5`, `0.3+0.2i`, `-2i`.
fn parse_c64(s: &str) -> Result<C64, String> {
    let s = s.trim().replace(' ', "");
    if let Some(body) = s.strip_suffix('i') {
        // split at the last sign that is not an exponent sign
        let bytes = body.as_bytes();
        let split = (1..bytes.len())
            .rev()
            .find(|&k| (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
        let (re, im) = match split {
            Some(k) => (&body[..k], &body[k..]),
            None => ("0", body),
        };
        let im = match im {
            "" | "+" => "1",
            "-" => "-1",
            x => x,
        };
        let re: f64 = re.parse().map_err(|_| format!("bad complex number {s}"))?;
        let im: f64 = im.parse().map_err(|_| format!("bad complex number {s}"))?;
        Ok(c64(re, im))
    } else {
        s.parse::<f64>()
            .map(|x| c64(x, 0.0))
            .map_err(|_| format!("bad number {s}"))
    }
}

#[derive(Args, Clone)]
struct Ensemble {
    /// Matrix size.
    #[arg(long)]
    n: usize,
    #[arg(long, value_parser = parse_c64)]
    mu: C64,
    #[arg(long, value_parser = parse_c64)]
    omega1: C64,
    #[arg(long, value_parser = parse_c64, default_value = "0")]
    omega2: C64,
    /// Rescaled jump parameter; use either this or --xi.
    #[arg(long, value_parser = parse_c64, conflicts_with = "xi")]
    xi_star: Option<C64>,
    /// Unscaled jump parameter, converted with mu.
    #[arg(long, value_parser = parse_c64)]
    xi: Option<C64>,
}

impl Ensemble {
    fn build(&self) -> pvi::Result<EnsembleParameters> {
        let xs = match (self.xi_star, self.xi) {
            (Some(x), _) => x,
            (None, Some(x)) => xi_star_from_xi(x, self.mu),
            (None, None) => c64(1.0, 0.0),
        };
        EnsembleParameters::new(self.n, self.mu, self.omega1, self.omega2, xs)
    }

    fn json(&self) -> serde_json::Value {
        let c = |z: C64| json!([z.re, z.im]);
        json!({
            "n": self.n,
            "mu": c(self.mu),
            "omega1": c(self.omega1),
            "omega2": c(self.omega2),
            "xi_star": self.xi_star.map(c),
            "xi": self.xi.map(c),
        })
    }
}

#[derive(Args)]
struct AnArgs {
    #[command(flatten)]
    ensemble: Ensemble,
    #[arg(long, value_parser = parse_c64)]
    t: C64,
    /// Expansion center of the symbol coefficients: auto, 0, 1 or inf.
    #[arg(long, default_value = "auto")]
    center: String,
    /// Also evaluate the boundary series at the chosen center.
    #[arg(long)]
    series: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum GapEnsemble {
    Jacobi,
    Un,
    OPlus,
    OMinus,
}

#[derive(Args)]
struct GapArgs {
    #[arg(long, value_enum)]
    ensemble: GapEnsemble,
    #[arg(long)]
    n: usize,
    /// Weight exponent on x, Jacobi only.
    #[arg(long, default_value_t = 0.0)]
    a: f64,
    /// Weight exponent on (1 - x), Jacobi only.
    #[arg(long, default_value_t = 0.0)]
    b: f64,
    #[arg(long, value_parser = parse_c64, default_value = "1")]
    xi: C64,
    /// Left end of the interval (t, 1), Jacobi only.
    #[arg(long)]
    t: Option<f64>,
    /// Arc half-length, circular ensembles only.
    #[arg(long)]
    x: Option<f64>,
    /// Quadrature order per panel.
    #[arg(long)]
    order: Option<usize>,
}

#[derive(Args)]
struct MonodromyArgs {
    #[command(flatten)]
    ensemble: Ensemble,
    /// Monodromy case: A, B or C.
    #[arg(long)]
    case: String,
    #[arg(long, value_parser = parse_c64, default_value = "1")]
    r: C64,
}

#[derive(Args)]
struct CrosscheckArgs {
    /// Reduced random draw counts.
    #[arg(long)]
    fast: bool,
    #[arg(long, default_value_t = 7)]
    seed: u64,
    /// Do not fail on the criteria documented as failing.
    #[arg(long)]
    allow_known: bool,
}

fn emit(report: &mut RunReport, format: Format) {
    report.finish();
    match format {
        Format::Json => println!("{}", report.to_json()),
        Format::Csv => print!("{}", report.to_csv()),
        Format::Text => {
            for r in &report.results {
                let err = r.err.map(|e| format!("  (err {e:.1e})")).unwrap_or_default();
                println!("{:<24} {:+.15e} {:+.15e}i{err}", r.name, r.re, r.im);
            }
            for f in &report.flags {
                println!("note: {f}");
            }
        }
    }
}

fn run_an(args: &AnArgs, format: Format) -> pvi::Result<()> {
    let p = args.ensemble.build()?;
    let center = match args.center.as_str() {
        "auto" => Center::auto(args.t)?,
        s => s.parse()?,
    };
    let mut inputs = args.ensemble.json();
    inputs["t"] = json!([args.t.re, args.t.im]);
    inputs["center"] = json!(center.name());
    let mut rep = RunReport::new("an", inputs);
    rep.push("an", eval_an_at(center, &p, args.t)?, None);
    if args.series {
        let s = an_boundary_series(center, &p)?.eval(args.t);
        rep.push("series", s.value, Some(s.error_estimate));
    }
    if args.t.im == 0.0 && args.t.re > 0.0 && args.t.re < 1.0 {
        match sse_sigma_from_toeplitz(&p, args.t.re) {
            Ok(s) => rep.push("sigma", s.sigma, None),
            Err(e) => rep.flag(format!("sigma unavailable: {e}")),
        }
    }
    emit(&mut rep, format);
    Ok(())
}

fn run_gap(args: &GapArgs, format: Format) -> pvi::Result<()> {
    let inputs = json!({
        "ensemble": format!("{:?}", args.ensemble),
        "n": args.n, "a": args.a, "b": args.b,
        "xi": [args.xi.re, args.xi.im], "t": args.t, "x": args.x,
    });
    let mut rep = RunReport::new("gap", inputs);
    let real_xi = (args.xi.im == 0.0).then_some(args.xi.re);
    match args.ensemble {
        GapEnsemble::Jacobi => {
            let t = args
                .t
                .ok_or_else(|| Error::Range("--t is required for the Jacobi ensemble".into()))?;
            let params = JacobiWeightParams::new(args.n, args.a, args.b)?;
            let m = args.order.unwrap_or_else(|| default_order(args.n));
            let v = fredholm_det(&params, t, args.xi, m)?;
            rep.push("gap", v.value(), Some(v.discrepancy()));
            rep.push("nystrom", v.nystrom, None);
            rep.push("gram", v.gram, None);
            if let Some(xi) = real_xi {
                match jue_gap_series(args.n, args.a, args.b, xi, 1.0 - t) {
                    Ok(s) => rep.push("series", s.value, Some(s.error_estimate)),
                    Err(e) => rep.flag(format!("series skipped: {e}")),
                }
            }
        }
        g => {
            let x = args
                .x
                .ok_or_else(|| Error::Range("--x is required for circular ensembles".into()))?;
            let group = match g {
                GapEnsemble::Un => CircleGroup::Unitary,
                GapEnsemble::OPlus => CircleGroup::OrthogonalPlus,
                _ => CircleGroup::OrthogonalMinus,
            };
            rep.push("gap", circle_gap(group, args.n, x, args.xi)?, None);
            if let Some(xi) = real_xi {
                let s = circle_gap_series(group, args.n, xi, x);
                rep.push("series", s.value, Some(s.error_estimate));
            }
        }
    }
    emit(&mut rep, format);
    Ok(())
}

fn run_monodromy(args: &MonodromyArgs, format: Format) -> pvi::Result<()> {
    let p = args.ensemble.build()?;
    let case: SseCase = args.case.parse()?;
    let mut inputs = args.ensemble.json();
    inputs["case"] = json!(format!("{case:?}"));
    inputs["r"] = json!([args.r.re, args.r.im]);
    let mut rep = RunReport::new("monodromy", inputs);
    let (theta, mut data) = sse_case_data(case, &p)?;
    data.r = args.r;
    for (name, z) in [
        ("theta0", theta.theta0),
        ("theta_t", theta.theta_t),
        ("theta1", theta.theta1),
        ("theta_inf", theta.theta_inf),
        ("sigma0t", data.sigma0t),
        ("sigma_t1", data.sigma_t1),
        ("sigma01", data.sigma01),
        ("s0t", data.s0t),
        ("s_t1", data.s_t1),
        ("s01", data.s01),
    ] {
        rep.push(name, z, None);
    }
    let q = sse_case_matrices(case, &p, args.r)?;
    let inv = invariants_from_matrices(&q);
    for (name, z) in [("p0t", inv.p0t), ("pt1", inv.pt1), ("p01", inv.p01)] {
        rep.push(name, z, None);
    }
    let cyc = q.cyclic_defect().iter().map(|z| z.norm()).fold(0.0, f64::max);
    rep.push("cyclic_defect", c64(cyc, 0.0), None);
    rep.push("manifold", manifold_value(&inv), None);
    rep.push("connection_plus", connection_residual(&theta, &data, Sign::Plus), None);
    rep.push("connection_minus", connection_residual(&theta, &data, Sign::Minus), None);
    let ints = theta.integer_exponents();
    if !ints.is_empty() {
        rep.flag(format!("integer exponents: {}", ints.join(", ")));
    }
    emit(&mut rep, format);
    Ok(())
}

fn run_crosscheck(args: &CrosscheckArgs, format: Format) -> bool {
    let suite = if args.fast { Suite::Fast } else { Suite::Full };
    let results = run_suite(suite, args.seed);
    match format {
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(&results).expect("results serialise")
        ),
        _ => {
            for r in &results {
                println!("{}", r.line());
                for n in &r.notes {
                    println!("    {n}");
                }
            }
        }
    }
    results
        .iter()
        .all(|r| r.passed || (args.allow_known && KNOWN_FAILURES.contains(&r.id.as_str())))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::An(a) => run_an(a, cli.format),
        Command::Gap(a) => run_gap(a, cli.format),
        Command::Monodromy(a) => run_monodromy(a, cli.format),
        Command::Crosscheck(a) => {
            return if run_crosscheck(a, cli.format) {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            };
        }
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::parse_c64;
    use pvi::c64;

    #[test]
    fn complex_flags() {
        assert_eq!(parse_c64("1.5").unwrap(), c64(1.5, 0.0));
        assert_eq!(parse_c64("0.3+0.2i").unwrap(), c64(0.3, 0.2));
        assert_eq!(parse_c64("-2i").unwrap(), c64(0.0, -2.0));
        assert_eq!(parse_c64("1e-3-1e-2i").unwrap(), c64(1e-3, -1e-2));
        assert_eq!(parse_c64("1-i").unwrap(), c64(1.0, -1.0));
        assert!(parse_c64("abc").is_err());
    }
}
