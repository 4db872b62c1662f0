use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};
use serde::de::DeserializeOwned;
use serde::Deserialize;
use serde_json::json;

use greedybench::certify::{self, GridFamily, KsFamily, PropertyAInstance};
use greedybench::greedy::{self, SigmaOptions};
use greedybench::norms::{dw_norm_with, DwStrategy, NormSpec};
use greedybench::oracle::{self, OracleConfig};
use greedybench::rational::{self, Rational};
use greedybench::repro::{self, Report, ScenarioParams};
use greedybench::{IndexSet, SparseVector, Weight};

/// Exact evaluation of weighted sequence norms, greedy traces and
/// greedy-type constants.
///
/// JSON arguments take either a file path or the JSON text itself.
#[derive(Parser)]
#[command(name = "greedybench", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a norm.
    Norm {
        #[command(flatten)]
        input: NormInput,
        /// Also evaluate the brute-force reference (D_w norms only).
        #[arg(long, hide = true)]
        oracle: bool,
        #[arg(long)]
        json: bool,
    },
    /// Dual norm of a functional under a polyhedral norm.
    Dual {
        #[arg(long)]
        spec: String,
        /// Dense array such as `["1","0"]` or a sparse vector.
        #[arg(long)]
        functional: String,
        #[arg(long)]
        json: bool,
    },
    /// Thresholding greedy trace `||x - G_m x||`.
    Tga {
        #[command(flatten)]
        input: NormInput,
        /// Also estimate sigma_m with free coefficients at this `m`.
        #[arg(long)]
        sigma: Option<usize>,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    /// Emit a certificate or check report.
    #[command(subcommand)]
    Certify(CertifyCommand),
    /// Run a reproduction scenario, or `all`.
    Repro(ReproArgs),
    /// List the built-in scenarios.
    ListScenarios,
}

#[derive(Args)]
struct NormInput {
    #[arg(long)]
    spec: String,
    #[arg(long)]
    vector: String,
}

#[derive(Subcommand)]
enum CertifyCommand {
    /// Suppression constant lower bound.
    Ks {
        #[arg(long)]
        spec: String,
        /// `default-grid` or a list of `{"f": .., "set": [..]}`.
        #[arg(long, default_value = "default-grid")]
        family: String,
    },
    /// Lattice ratio `||f|| / ||g||` with `|f| = |g|`.
    Lattice {
        #[arg(long)]
        spec: String,
        #[arg(long)]
        f: String,
        #[arg(long)]
        g: String,
    },
    /// Property (A) comparison for one instance `{"f", "a", "b"}`.
    PropertyA {
        #[arg(long)]
        spec: String,
        #[arg(long)]
        instance: String,
    },
    /// Superdemocracy ratios, and dual ones for polyhedral norms.
    Superdemocracy {
        #[arg(long)]
        spec: String,
        #[arg(long, default_value_t = 4)]
        m: usize,
    },
    /// Sign-flip ratios under the signed-sup norm.
    Ucc {
        #[arg(long)]
        weight: String,
        #[arg(long, default_value_t = 8)]
        m: usize,
    },
    /// Quasi-greedy ratio `max_m ||G_m x|| / ||x||`.
    QuasiGreedy {
        #[command(flatten)]
        input: NormInput,
    },
    /// Margins `sigma~_m(x) - ||x - G_m x||`.
    AlmostGreedy {
        #[command(flatten)]
        input: NormInput,
    },
}

#[derive(Args)]
struct ReproArgs {
    /// Scenario name or `all`.
    name: String,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    d: Option<usize>,
    #[arg(long)]
    alpha: Option<String>,
    #[arg(long)]
    weight: Option<String>,
    #[arg(long)]
    grid: Option<usize>,
    #[arg(long)]
    count: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    /// CSV file; a directory when running `all`.
    #[arg(long)]
    csv: Option<PathBuf>,
    /// Run scenarios concurrently under `all`.
    #[arg(long)]
    parallel: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Deserialize)]
struct KsInstance {
    f: SparseVector,
    set: IndexSet,
}

enum Outcome {
    Pass,
    Fail,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Fail) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn load<T: DeserializeOwned>(arg: &str) -> anyhow::Result<T> {
    let text = if looks_inline(arg) {
        arg.to_string()
    } else {
        std::fs::read_to_string(arg).with_context(|| format!("reading {arg}"))?
    };
    serde_json::from_str(&text).with_context(|| format!("parsing {arg}"))
}

fn looks_inline(arg: &str) -> bool {
    matches!(arg.trim_start().chars().next(), Some('{') | Some('['))
}

fn print_json(value: &serde_json::Value) -> anyhow::Result<()> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

fn show(value: &Rational, exact: bool) -> String {
    if exact {
        rational::format(value)
    } else {
        rational::to_decimal(value, 20)
    }
}

fn run(command: Command) -> anyhow::Result<Outcome> {
    match command {
        Command::Norm { input, oracle, json } => norm(&input, oracle, json),
        Command::Dual { spec, functional, json } => dual(&spec, &functional, json),
        Command::Tga { input, sigma, tol } => tga(&input, sigma, tol),
        Command::Certify(cmd) => certify_cmd(cmd),
        Command::Repro(args) => repro_cmd(args),
        Command::ListScenarios => {
            for (name, description) in repro::SCENARIOS {
                println!("{name:<18} {description}");
            }
            Ok(Outcome::Pass)
        }
    }
}

fn norm(input: &NormInput, use_oracle: bool, as_json: bool) -> anyhow::Result<Outcome> {
    let spec: NormSpec = load(&input.spec)?;
    let f: SparseVector = load(&input.vector)?;
    let value = spec.norm(&f)?;
    let exact = spec.is_exact();
    if !use_oracle {
        if as_json {
            print_json(&json!({ "norm": spec.label(), "value": show(&value, exact), "exact": exact }))?;
        } else {
            println!("{}", show(&value, exact));
        }
        return Ok(Outcome::Pass);
    }
    let NormSpec::Dw { weight } = &spec else {
        bail!("--oracle is only available for D_w norms");
    };
    let evaluation = dw_norm_with(weight, &f, DwStrategy::Auto);
    let cfg = OracleConfig::new(0, f.max_index()).collapsed();
    let reference = oracle::dw_norm_bruteforce(weight, &f, &cfg)?;
    let agree = reference.value == evaluation.value;
    print_json(&json!({
        "value": show(&evaluation.value, exact),
        "oracle": show(&reference.value, exact),
        "oracle_argmax": reference.argmax,
        "agree": agree,
    }))?;
    Ok(if agree { Outcome::Pass } else { Outcome::Fail })
}

fn dual(spec: &str, functional: &str, as_json: bool) -> anyhow::Result<Outcome> {
    let spec: NormSpec = load(spec)?;
    let Some(family) = spec.family() else {
        bail!("dual norms are computed for polyhedral norms only");
    };
    let raw: serde_json::Value = load(functional)?;
    let xstar = match raw {
        serde_json::Value::Array(items) => items
            .iter()
            .map(|v| match v {
                serde_json::Value::String(s) => Ok(rational::parse(s)?),
                serde_json::Value::Number(n) => Ok(rational::parse(&n.to_string())?),
                other => bail!("unexpected functional entry {other}"),
            })
            .collect::<anyhow::Result<Vec<_>>>()?,
        other => family.densify(&serde_json::from_value::<SparseVector>(other)?)?,
    };
    let result = family.dual_norm(&xstar)?;
    if as_json {
        print_json(&json!({
            "value": rational::format(&result.value),
            "maximizer": result.maximizer.iter().map(rational::format).collect::<Vec<_>>(),
            "combination": result
                .combination
                .iter()
                .map(|(k, c)| json!({
                    "functional": family.functionals()[*k].iter().map(rational::format).collect::<Vec<_>>(),
                    "coefficient": rational::format(c),
                }))
                .collect::<Vec<_>>(),
        }))?;
    } else {
        println!("{}", rational::format(&result.value));
    }
    Ok(Outcome::Pass)
}

fn tga(input: &NormInput, sigma_m: Option<usize>, tol: f64) -> anyhow::Result<Outcome> {
    let spec: NormSpec = load(&input.spec)?;
    let x: SparseVector = load(&input.vector)?;
    let trace = greedy::trace(&x, &spec)?;
    let mut out = json!({ "norm": spec.label(), "trace": trace.to_json() });
    if let Some(m) = sigma_m {
        let estimate = greedy::sigma(&x, m, &spec, &SigmaOptions::with_tol(tol))?;
        out["sigma"] = json!({
            "m": m,
            "upper_bound": rational::to_decimal(&estimate.value, 20),
            "lower_bound": "0",
            "sigma_tilde": show(&estimate.sigma_tilde, spec.is_exact()),
            "estimate": serde_json::to_value(&estimate)?,
        });
    }
    print_json(&out)?;
    Ok(Outcome::Pass)
}

fn certify_cmd(cmd: CertifyCommand) -> anyhow::Result<Outcome> {
    match cmd {
        CertifyCommand::Ks { spec, family } => {
            let spec: NormSpec = load(&spec)?;
            let family = if family == "default-grid" {
                match spec.dimension() {
                    None => KsFamily::Grid(GridFamily::default_grid()),
                    Some(d) => KsFamily::Grid(GridFamily::with_indices((1..=d).collect())),
                }
            } else {
                let items: Vec<KsInstance> = load(&family)?;
                KsFamily::Explicit(items.into_iter().map(|i| (i.f, i.set)).collect())
            };
            print_json(&certify::ks_lower_bound(&spec, &family)?.to_json()?)?;
            Ok(Outcome::Pass)
        }
        CertifyCommand::Lattice { spec, f, g } => {
            let spec: NormSpec = load(&spec)?;
            let cert = certify::lattice_certificate(&spec, &load(&f)?, &load(&g)?)?;
            print_json(&cert.to_json()?)?;
            Ok(Outcome::Pass)
        }
        CertifyCommand::PropertyA { spec, instance } => {
            let spec: NormSpec = load(&spec)?;
            let instance: PropertyAInstance = load(&instance)?;
            let outcome = certify::property_a_check(&spec, &instance)?;
            print_json(&serde_json::to_value(&outcome)?)?;
            Ok(if outcome.holds { Outcome::Pass } else { Outcome::Fail })
        }
        CertifyCommand::Superdemocracy { spec, m } => {
            let spec: NormSpec = load(&spec)?;
            let report = certify::superdemocracy_report(&spec, m)?;
            print_json(&serde_json::to_value(&report)?)?;
            Ok(Outcome::Pass)
        }
        CertifyCommand::Ucc { weight, m } => {
            let weight: Weight = load(&weight)?;
            let ratios = certify::ucc_growth(&weight, m)?;
            let rows: Vec<_> = ratios
                .iter()
                .enumerate()
                .map(|(i, r)| json!({ "m": i + 1, "r_m": show(r, weight.is_exact()) }))
                .collect();
            print_json(&serde_json::Value::Array(rows))?;
            Ok(Outcome::Pass)
        }
        CertifyCommand::QuasiGreedy { input } => {
            let spec: NormSpec = load(&input.spec)?;
            let x: SparseVector = load(&input.vector)?;
            let cert = certify::quasi_greedy_certificate(&spec, &x)?;
            let ties = greedy::threshold_ties(&x);
            let mut out = cert.to_json()?;
            out["ties"] = json!(ties);
            print_json(&out)?;
            Ok(Outcome::Pass)
        }
        CertifyCommand::AlmostGreedy { input } => {
            let spec: NormSpec = load(&input.spec)?;
            let x: SparseVector = load(&input.vector)?;
            let margins = certify::almost_greedy_margin(&spec, &x)?;
            print_json(&serde_json::to_value(&margins)?)?;
            Ok(if margins.all_nonnegative() { Outcome::Pass } else { Outcome::Fail })
        }
    }
}

fn repro_cmd(args: ReproArgs) -> anyhow::Result<Outcome> {
    let params = ScenarioParams {
        n: args.n,
        d: args.d,
        alpha: args.alpha.as_deref().map(rational::parse).transpose()?,
        weight: args.weight.as_deref().map(load::<Weight>).transpose()?,
        grid: args.grid,
        count: args.count,
        seed: args.seed,
    };
    let reports = if args.name == "all" {
        if params != ScenarioParams::default() {
            bail!("scenario parameters cannot be combined with `all`");
        }
        repro::run_all(args.parallel)?
    } else {
        vec![repro::run_scenario(&args.name, &params)?]
    };
    if let Some(path) = &args.csv {
        write_tables(&reports, path, args.name == "all")?;
    }
    if args.json {
        let values = reports.iter().map(Report::to_json).collect::<Result<Vec<_>, _>>()?;
        print_json(&serde_json::Value::Array(values))?;
    } else {
        for report in &reports {
            print!("{}", report.render());
        }
    }
    Ok(if reports.iter().all(Report::passed) { Outcome::Pass } else { Outcome::Fail })
}

fn write_tables(reports: &[Report], path: &Path, as_dir: bool) -> anyhow::Result<()> {
    if !as_dir {
        return Ok(reports[0].table.write_csv(path)?);
    }
    std::fs::create_dir_all(path).with_context(|| format!("creating {}", path.display()))?;
    for report in reports {
        let file = path.join(format!("{}.csv", report.scenario.replace('+', "-")));
        report.table.write_csv(&file)?;
    }
    Ok(())
}
