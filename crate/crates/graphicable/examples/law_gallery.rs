//! Prints the closed-form algebra law of every family at a small size.
//!
//! ```bash
//! cargo run --example law_gallery
//! ```

use graphicable::families::{family_law, FamilySpec};
use graphicable::io::render_law;

fn main() {
    let gallery = [
        FamilySpec::Star(3),
        FamilySpec::Friendship(2),
        FamilySpec::Wheel(5),
        FamilySpec::CompleteBipartite(2, 3),
        FamilySpec::CompleteNPartite(vec![1, 2, 3]),
        FamilySpec::Cycle(5),
        FamilySpec::petersen(),
        FamilySpec::durer(),
        FamilySpec::Tietze,
    ];
    for spec in gallery {
        let law = family_law(&spec).expect("gallery specs are valid");
        println!("== {spec} (dimension {})", law.dimension());
        print!("{}", render_law(&law));
        println!();
    }
}
