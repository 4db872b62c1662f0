//! Closed-form Phi_2 and D_w against exhaustive enumeration.

use greedybench::norms::{dw_norm, phi2};
use greedybench::oracle::{dw_norm_bruteforce, phi2_bruteforce, OracleConfig};
use greedybench::sample;

fn main() -> greedybench::Result<()> {
    let mut rng = sample::rng(11);
    let mut checked = 0;
    for _ in 0..200 {
        let w = sample::weight(&mut rng, 3);
        let f = sample::vector(&mut rng, 8, 5, 4, 4);
        let set = f.support().into_iter().take(2).collect();
        let cfg = OracleConfig::new(OracleConfig::minimal_horizon(&w, 2, &f), 8);
        assert_eq!(phi2(&w, &set, &f), phi2_bruteforce(&w, &set, &f, &cfg)?);
        assert_eq!(dw_norm(&w, &f), dw_norm_bruteforce(&w, &f, &cfg.collapsed())?.value);
        checked += 1;
    }
    println!("{checked} instances agree");
    Ok(())
}
