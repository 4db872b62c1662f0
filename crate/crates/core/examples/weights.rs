//! Weights, primitive weights and the four sequence norms on one vector.

use greedybench::norms::{dw_norm, lorentz_norm, marcinkiewicz_norm, signedsup_norm};
use greedybench::rational::{self, ratio};
use greedybench::{SparseVector, Weight};

fn main() -> greedybench::Result<()> {
    let w = Weight::eventually_constant(vec![ratio(1, 1), ratio(2, 3)], ratio(1, 3))?;
    println!("w = {w}");
    for n in 1..=5 {
        println!("  w_{n} = {:>4}   s_{n} = {}", rational::format(&w.value(n)), rational::format(&w.primitive(n)));
    }

    let f = SparseVector::from_dense(&[ratio(1, 1), ratio(-1, 2), ratio(1, 3), ratio(1, 4)]);
    println!("f = {f}");
    println!("  marcinkiewicz {}", rational::format(&marcinkiewicz_norm(&w, &f)));
    println!("  D_w           {}", rational::format(&dw_norm(&w, &f)));
    println!("  lorentz       {}", rational::format(&lorentz_norm(&w, &f)));
    println!("  signed-sup    {}", rational::format(&signedsup_norm(&w, &f).value));

    let sqrt = Weight::sqrt_primitive();
    println!("s_n = sqrt(n): w_2 ~ {}", rational::to_decimal(&sqrt.value(2), 20));
    Ok(())
}
