//! Sign-flip ratios of indicator vectors under the signed-sup norm.

use greedybench::certify::ucc_growth;
use greedybench::rational::{self, ratio};
use greedybench::Weight;

fn main() -> greedybench::Result<()> {
    let w = Weight::eventually_constant(vec![ratio(1, 1), ratio(2, 3)], ratio(1, 3))?;
    for (m, r) in ucc_growth(&w, 12)?.iter().enumerate() {
        println!("m={:>2}  r_m = {}", m + 1, rational::format(r));
    }
    Ok(())
}
