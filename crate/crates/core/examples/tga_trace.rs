//! Greedy residuals, projection errors and the free-coefficient estimate.

use greedybench::certify::almost_greedy_margin;
use greedybench::greedy::{sigma, sigma_tilde, trace, SigmaOptions};
use greedybench::norms::{FamilyPreset, NormSpec};
use greedybench::rational::{self, ratio};
use greedybench::{SparseVector, Weight};

fn main() -> greedybench::Result<()> {
    let norm = NormSpec::dw(Weight::one_then(ratio(1, 3))?);
    let x = SparseVector::from_dense(&[ratio(1, 1), ratio(1, 3), ratio(-1, 3), ratio(1, 5)]);
    let t = trace(&x, &norm)?;
    println!("{}", serde_json::to_string_pretty(&t.to_json())?);
    for m in 0..=x.len() {
        println!("m={m}: sigma~ = {}", rational::format(&sigma_tilde(&x, m, &norm)?));
    }
    println!("margins all nonnegative: {}", almost_greedy_margin(&norm, &x)?.all_nonnegative());

    let hex = NormSpec::preset(&FamilyPreset::Hexagon { alpha: ratio(1, 2) })?;
    let y = SparseVector::from_dense(&[ratio(1, 1), ratio(1, 1)]);
    let est = sigma(&y, 1, &hex, &SigmaOptions::default())?;
    println!(
        "hexagon: sigma_1 <= {} < sigma~_1 = {}",
        rational::to_decimal(&est.value, 10),
        rational::format(&est.sigma_tilde)
    );
    Ok(())
}
