//! The star-friendship-wheel chain: A(S_2n) embeds termwise into A(F_n),
//! which embeds into A(W_2n+1), each rim generator gaining exactly one
//! term per step. Every law verdict is cross-checked against the
//! subgraph-embedding oracle on the underlying graphs.
//!
//! ```bash
//! cargo run --example subalgebra_chain
//! ```

use graphicable::embeddings::{law_term_diff, theorem_chain};
use graphicable::families::{family_law, FamilySpec};
use graphicable::graph::GeneratorMap;

fn main() {
    for n in 2..=6 {
        let report = theorem_chain(n).unwrap();
        println!(
            "n = {n}: {} -> {} -> {}  [{}]",
            report.star_into_friendship.sub,
            report.star_into_friendship.sup,
            report.friendship_into_wheel.sup,
            if report.passed { "PASS" } else { "FAIL" }
        );
        for step in [&report.star_into_friendship, &report.friendship_into_wheel] {
            println!(
                "  {} into {}: law {}, oracle {}, rim gains one term each: {}",
                step.sub,
                step.sup,
                step.law_embeds,
                step.subgraph_oracle_embeds,
                step.rim_extra_terms_all_single
            );
        }
    }

    // The actual extra terms at n = 2: the rim partner on the first step,
    // the second rim neighbor on the next.
    let star = family_law(&FamilySpec::Star(4)).unwrap();
    let friendship = family_law(&FamilySpec::Friendship(2)).unwrap();
    let wheel = family_law(&FamilySpec::Wheel(5)).unwrap();
    let id = GeneratorMap::identity(5);
    println!("\nextra terms, star:4 into friendship:2:");
    for diff in law_term_diff(&star, &friendship, &id).unwrap() {
        println!("  e_{}^2 gains {:?}", diff.generator, diff.only_in_super);
    }
    println!("extra terms, friendship:2 into wheel:5:");
    for diff in law_term_diff(&friendship, &wheel, &id).unwrap() {
        println!("  e_{}^2 gains {:?}", diff.generator, diff.only_in_super);
    }

    let report = theorem_chain(2).unwrap();
    for erratum in &report.errata {
        println!("\nerratum {}:\n  printed: {}\n  applied: {}", erratum.id, erratum.printed, erratum.applied);
    }
}
