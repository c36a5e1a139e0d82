//! Gaussian binomial coefficients for positive and negative tops, checked
//! against the defining product.
//!
//! cargo run -p qkneser --example gaussian_coefficients

use qkneser::{gauss_eval_product, GaussTable};

fn main() -> qkneser::Result<()> {
    let table = GaussTable::new();
    for (n, i) in [(4, 2), (2, 1), (6, 3), (-1, 1), (-2, 1), (-4, 2), (3, 5)] {
        let g = table.try_get(n, i)?;
        println!("[{n:>2} choose {i}] = {g}");
        for q0 in [2, 3] {
            let symbolic = g.eval(q0)?;
            let product = gauss_eval_product(n, i, q0)?;
            assert_eq!(symbolic, product);
            println!("    q = {q0}: {symbolic}");
        }
    }

    // coefficients outgrow 64 bits quickly
    let big = table.get(70, 35);
    println!("[70 choose 35] has {} terms, coefficient sum {}", big.num_terms(), big.coeff_sum());
    Ok(())
}
