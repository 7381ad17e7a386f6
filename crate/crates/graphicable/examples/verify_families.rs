//! Audits the whole family grid: every law must be S-graphicable and
//! match its graph's adjacency matrix entrywise, plus the per-family
//! structural claims (counts, cubicity, friendship property, snark
//! certificate, isomorphism to independent constructions).
//!
//! ```bash
//! cargo run --example verify_families
//! ```

use graphicable::families::{verification_grid, verify_family, FamilySpec};

fn main() {
    // Detailed reports for the named graphs.
    for spec in [FamilySpec::FlowerJ5, FamilySpec::Tietze, FamilySpec::CompleteNPartite(vec![1, 2, 3])] {
        let report = verify_family(&spec).expect("spec is valid");
        println!("== {}", report.spec);
        for check in &report.checks {
            let mark = if check.passed { "ok " } else { "FAIL" };
            match &check.witness {
                Some(witness) => println!("  [{mark}] {} ({witness})", check.name),
                None => println!("  [{mark}] {}", check.name),
            }
        }
        for erratum in &report.errata {
            println!("  erratum {}: printed {} / applied {}", erratum.id, erratum.printed, erratum.applied);
        }
        println!();
    }

    // Whole-grid sweep.
    let grid = verification_grid();
    let mut failures = Vec::new();
    for spec in &grid {
        let report = verify_family(spec).expect("grid specs are valid");
        if !report.passed_all {
            failures.push(report);
        }
    }
    println!("grid: {} specs audited, {} failures", grid.len(), failures.len());
    for report in failures {
        println!("  FAILED {}", report.spec);
    }
}
