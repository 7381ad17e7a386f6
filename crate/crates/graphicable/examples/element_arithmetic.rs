//! Exact element arithmetic: products vanish across distinct generators,
//! squares read off the structure matrix, commutativity and flexibility
//! hold on random elements, and associativity fails with an explicit
//! witness.
//!
//! ```bash
//! cargo run --example element_arithmetic
//! ```

use graphicable::algebra::AlgebraElement;
use graphicable::families::{family_law, FamilySpec};
use graphicable::io::render_element;

fn main() {
    let star = family_law(&FamilySpec::Star(3)).unwrap();
    let e1 = AlgebraElement::basis(4, 1);
    let e2 = AlgebraElement::basis(4, 2);
    println!("in A(star:3):");
    println!("  e_1 * e_2 = {}", render_element(&star.multiply(&e1, &e2).unwrap()));
    println!("  e_4 * e_4 = {}", render_element(&star.generator_square(4).unwrap()));

    let x = AlgebraElement::from_integers(&[2, 3, 0, 0]);
    let y = AlgebraElement::from_integers(&[1, -1, 0, 0]);
    println!(
        "  ({}) * ({}) = {}",
        render_element(&x),
        render_element(&y),
        render_element(&star.multiply(&x, &y).unwrap())
    );

    let butterfly = family_law(&FamilySpec::Friendship(2)).unwrap();
    let report = butterfly.check_identities(100, 9, 42);
    println!(
        "\nin A(friendship:2): 100 random pairs, commutativity violations: {}, flexibility violations: {}",
        report.commutativity_violations.len(),
        report.flexibility_violations.len()
    );

    let witness = butterfly.find_nonassociative_witness().expect("not associative");
    println!("\nnonassociativity witness in A(friendship:2):");
    println!("  x = {}", render_element(&witness.x));
    println!("  y = {}", render_element(&witness.y));
    println!("  z = {}", render_element(&witness.z));
    println!("  (x*y)*z = {}", render_element(&witness.left));
    println!("  x*(y*z) = {}", render_element(&witness.right));
}
