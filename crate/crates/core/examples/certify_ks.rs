//! Grid searches for suppression lower bounds and their theorem bounds.

use greedybench::certify::{dw_suppression_bound, ks_lower_bound, GridFamily, KsFamily};
use greedybench::rational::{self, ratio};
use greedybench::{NormSpec, Weight};

fn main() -> greedybench::Result<()> {
    for omega in [ratio(1, 4), ratio(1, 3), ratio(1, 2), ratio(2, 3)] {
        let w = Weight::one_then(omega.clone())?;
        let cert = ks_lower_bound(&NormSpec::dw(w.clone()), &KsFamily::Grid(GridFamily::default_grid()))?;
        let bound = dw_suppression_bound(&w);
        println!(
            "w = {w}: found {} <= {} ({})",
            rational::format(&cert.value),
            rational::format(&bound.value),
            bound.statement
        );
    }
    Ok(())
}
