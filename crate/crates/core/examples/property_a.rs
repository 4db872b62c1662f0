//! Random Property (A) comparisons under a few D_w norms.

use greedybench::certify::property_a_check;
use greedybench::rational::{self, ratio, Rational};
use greedybench::{sample, NormSpec, Weight};

fn main() -> greedybench::Result<()> {
    let weights = [
        Weight::one_then(ratio(1, 3))?,
        Weight::one_then(ratio(1, 2))?,
        Weight::eventually_constant(vec![ratio(1, 1), ratio(2, 3)], ratio(1, 3))?,
    ];
    let mut rng = sample::rng(1);
    for w in weights {
        let norm = NormSpec::dw(w.clone());
        let mut tightest: Option<Rational> = None;
        let mut failures = 0;
        for _ in 0..2000 {
            let outcome = property_a_check(&norm, &sample::property_a_instance(&mut rng, 10, 4))?;
            failures += usize::from(!outcome.holds);
            if tightest.as_ref().is_none_or(|t| outcome.margin < *t) {
                tightest = Some(outcome.margin);
            }
        }
        println!(
            "w = {w}: {failures} failures, smallest margin {}",
            rational::format(&tightest.unwrap_or_default())
        );
    }
    Ok(())
}
