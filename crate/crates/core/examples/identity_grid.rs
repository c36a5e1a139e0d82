//! Verifies every summation identity over a parameter grid, then shows that
//! a deliberately broken exponent is caught.
//!
//! cargo run -p qkneser --release --example identity_grid

use qkneser::identities::IdentityChecker;
use qkneser::{GridBounds, IdentityId};

fn main() -> qkneser::Result<()> {
    let bounds = GridBounds::new(-8, 12, 8, 10)?;
    let checker = IdentityChecker::new();
    for id in IdentityId::ALL {
        let report = checker.run_grid(id, &bounds);
        println!(
            "{:<11} {:>4} instances  {}",
            id.as_str(),
            report.instances,
            if report.passed() { "ok" } else { "FAIL" }
        );
    }

    let broken = IdentityChecker::with_rhs_exponent_offset(1);
    let report = broken.run_grid(IdentityId::Theorem2, &GridBounds::uniform(3)?);
    let first = &report.failures[0];
    println!(
        "broken theorem2: {} failures, first at (m, a, t) = {:?}: {} vs {}",
        report.failures.len(),
        first.params,
        first.lhs,
        first.rhs
    );
    Ok(())
}
