//! Exact arithmetic with Laurent polynomials in `q`.
//!
//! cargo run -p qkneser --example laurent_arithmetic

use qkneser::LaurentPoly;

fn main() -> qkneser::Result<()> {
    let q = LaurentPoly::q();
    let one = LaurentPoly::one();
    let a = &q + &one;
    let b = &q - &one;
    println!("({a}) * ({b}) = {}", &a * &b);

    let inv: LaurentPoly = "q^-1".parse()?;
    println!("q^-1 * q = {}", &inv * &q);
    println!("shift(q + 1, -2) = {}", a.shift(-2));

    let p: LaurentPoly = "q^4 + q^3 + 2*q^2 + q + 1".parse()?;
    println!("{p} at q = 2 is {}", p.eval(2)?);
    println!("-q^-1 at q = 2 is {}", (-&inv).eval(2)?);
    Ok(())
}
