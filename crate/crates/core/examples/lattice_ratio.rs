//! ||h_n|| / ||g_n|| against 1 + 2n w_n^2.

use greedybench::certify::lattice_ratio;
use greedybench::constructions::{flat_weight, g_vector, h_vector, lattice_closed_form, omega_n};
use greedybench::rational::{self, precision_bits};
use greedybench::NormSpec;

fn main() -> greedybench::Result<()> {
    for n in [1, 2, 4, 8, 16, 24, 32] {
        let omega = omega_n(n, precision_bits());
        let norm = NormSpec::dw(flat_weight(&omega));
        let r = lattice_ratio(&norm, &h_vector(n, &omega), &g_vector(n, &omega))?;
        println!(
            "n={n:>2}  ratio {}  closed form {}",
            rational::to_decimal(&r, 16),
            rational::to_decimal(&lattice_closed_form(n, &omega), 16)
        );
    }
    Ok(())
}
