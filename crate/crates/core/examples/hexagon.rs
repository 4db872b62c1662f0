//! The hexagon norm max{alpha|x_1|, alpha|x_2|, |x_1 + x_2|}.

use greedybench::certify::{superdemocracy_report, suppression_ratio};
use greedybench::norms::{FamilyPreset, NormSpec};
use greedybench::rational::{self, ratio};
use greedybench::SparseVector;

fn main() -> greedybench::Result<()> {
    for alpha in [ratio(1, 2), ratio(1, 3), ratio(2, 3)] {
        let norm = NormSpec::preset(&FamilyPreset::Hexagon { alpha: alpha.clone() })?;
        let f = SparseVector::from_dense(&[ratio(2, 1), ratio(-2, 1)]);
        let ks = suppression_ratio(&norm, &f, &[1].into_iter().collect())?;
        let dual = norm.family().expect("polyhedral").dual_norm(&[ratio(1, 1), ratio(0, 1)])?;
        let demo = superdemocracy_report(&norm, 2)?;
        println!(
            "alpha={}: suppression {}, ||e_1*|| = {}, superdemocracy {}",
            rational::format(&alpha),
            rational::format(&ks),
            rational::format(&dual.value),
            rational::format(&demo.primal.value),
        );
    }
    Ok(())
}
