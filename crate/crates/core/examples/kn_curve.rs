//! Suppression ratios of (f_n, g_n) at w_n = 1/(1 + sqrt(2n+2)), printed as CSV.

use greedybench::repro::{run_scenario, ScenarioParams};

fn main() -> greedybench::Result<()> {
    let n = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(16);
    let report = run_scenario("kn-curve", &ScenarioParams { n: Some(n), ..Default::default() })?;
    print!("{}", report.table.to_csv()?);
    eprint!("{}", report.render());
    Ok(())
}
