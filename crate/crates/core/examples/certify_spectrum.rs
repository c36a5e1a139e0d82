//! Builds qK(v, k) over GF(q) by brute force and certifies the closed-form
//! spectrum exactly. Optionally dumps the graph.
//!
//! cargo run -p qkneser --release --example certify_spectrum -- 4 2 3 [DIR]

use std::path::PathBuf;

use qkneser::oracle::{certify_qkneser, DEFAULT_VERTEX_BUDGET};
use qkneser::spectrum::evaluated_spectrum;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let num = |idx: usize, default: u64| -> Result<u64, std::num::ParseIntError> {
        args.get(idx).map_or(Ok(default), |s| s.parse())
    };
    let (v, k, q) = (num(0, 4)? as u32, num(1, 2)? as u32, num(2, 2)?);

    let predicted = evaluated_spectrum(v, k, q)?;
    let run = certify_qkneser(v, k, q, &predicted, DEFAULT_VERTEX_BUDGET)?;
    let res = &run.result;
    println!("qK({v},{k}) over GF({q}): {} vertices, degree {:?}", res.vertex_count, res.degree);
    println!("moments: {:?}", res.moments.iter().map(ToString::to_string).collect::<Vec<_>>());
    for e in &predicted.entries {
        println!("  lambda_{} = {:>6}  multiplicity {}", e.j, e.eigenvalue, e.multiplicity);
    }
    println!("certified: {}", res.certified());

    if let Some(dir) = args.get(3) {
        run.dump(&PathBuf::from(dir))?;
        println!("wrote vertices.txt, adjacency.txt, certification.json to {dir}");
    }
    Ok(())
}
