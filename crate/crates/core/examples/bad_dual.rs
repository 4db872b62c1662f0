//! A polyhedral norm whose dual basis is not 1-democratic.

use greedybench::norms::{FamilyPreset, FunctionalFamily};
use greedybench::rational::{self, ratio};
use greedybench::repro::bad_dual_vectors;

fn main() -> greedybench::Result<()> {
    for d in 3..=6 {
        let family = FunctionalFamily::from_preset(&FamilyPreset::BadDual { d })?;
        let (g, h_star, g_star) = bad_dual_vectors(d);
        let h = family.dual_norm(&h_star)?;
        let gs = family.dual_norm(&g_star)?;
        println!(
            "d={d}: {} functionals, ||g|| = {}, ||h*|| = {}, ||g*|| = {} (bound {})",
            family.len(),
            rational::format(&family.norm(&g)?),
            rational::format(&h.value),
            rational::format(&gs.value),
            rational::format(&(ratio(d as i64 - 1, 1) / (ratio(d as i64, 1) - ratio(7, 6)))),
        );
        for (k, c) in &gs.combination {
            let u: Vec<String> = family.functionals()[*k].iter().map(rational::format).collect();
            println!("    {} * ({})", rational::format(c), u.join(", "));
        }
    }
    Ok(())
}
