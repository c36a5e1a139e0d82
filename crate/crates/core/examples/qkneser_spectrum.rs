//! Eigenvalues and multiplicities of qK(v, k), symbolic and evaluated, in
//! both closed forms.
//!
//! cargo run -p qkneser --example qkneser_spectrum

use qkneser::spectrum::{delsarte_eigenvalue, spectrum_table};

fn main() -> qkneser::Result<()> {
    let (v, k) = (7, 3);
    let table = spectrum_table(v, k)?;
    println!("qK({v},{k}):");
    for e in &table.entries {
        let alt = delsarte_eigenvalue(v, k, e.j)?;
        assert_eq!(alt, e.eigenvalue);
        println!("  j={}  eigenvalue {}  multiplicity {}", e.j, e.eigenvalue, e.multiplicity);
    }
    for q in [2, 3, 4] {
        let ev = table.evaluate(q)?;
        let row: Vec<String> = ev
            .entries
            .iter()
            .map(|e| format!("{}^{}", e.eigenvalue, e.multiplicity))
            .collect();
        println!("  q = {q}: {}", row.join(", "));
    }

    match spectrum_table(3, 2) {
        Err(e) => println!("qK(3,2): {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
