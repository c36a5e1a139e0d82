//! GF(p^e) construction and arithmetic.
//!
//! cargo run -p qkneser --example finite_fields

use qkneser::field::make_field;

fn main() -> qkneser::Result<()> {
    for (p, e) in [(2, 2), (3, 2), (2, 3), (5, 1)] {
        let f = make_field(p, e)?;
        println!("GF({}) modulus coefficients (constant first): {:?}", f.order(), f.modulus());
    }

    let f4 = make_field(2, 2)?;
    let x = f4.from_residue(&[0, 1]);
    println!("in GF(4): x * x = {:?} (code {})", f4.residue(f4.mul(x, x)), f4.mul(x, x));

    let f9 = make_field(3, 2)?;
    for a in f9.elements().skip(1) {
        let inv = f9.inv(a)?;
        println!("GF(9): {a}^-1 = {inv}");
    }
    Ok(())
}
