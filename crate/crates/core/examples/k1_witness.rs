//! The pair f = e_1 + e_2/3, g = e_1 + e_2/3 - e_3/3 under w = (1, 1/3, 1/3, ...).

use greedybench::certify::{ks_lower_bound, KsFamily};
use greedybench::constructions::{f_vector, g_vector};
use greedybench::rational::{self, ratio};
use greedybench::{NormSpec, Weight};

fn main() -> greedybench::Result<()> {
    let third = ratio(1, 3);
    let norm = NormSpec::dw(Weight::one_then(third.clone())?);
    let f = f_vector(1, &third);
    let g = g_vector(1, &third);
    println!("||f|| = {}", rational::format(&norm.norm(&f)?));
    println!("||g|| = {}", rational::format(&norm.norm(&g)?));

    let cert = ks_lower_bound(&norm, &KsFamily::Explicit(vec![(g, [1, 2].into_iter().collect())]))?;
    cert.verify(&norm)?;
    println!("{}", serde_json::to_string_pretty(&cert.to_json()?)?);
    Ok(())
}
