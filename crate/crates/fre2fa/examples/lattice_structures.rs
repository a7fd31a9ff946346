//! The three truth-value algebras and how the tensor changes what an
//! expression means.
//!
//! ```sh
//! cargo run --example lattice_structures
//! ```

use fre2fa::lattice::{Structure, TruthValue};
use fre2fa::parser::parse_inferring;
use fre2fa::semantics::denote;

fn main() {
    let a = TruthValue::parse_literal("0.2").unwrap();
    let b = TruthValue::parse_literal("0.1").unwrap();

    println!("{:8} {:>8} {:>8} {:>8}", "", "join", "meet", "tensor");
    for structure in Structure::ALL {
        println!(
            "{:8} {:>8} {:>8} {:>8}",
            structure.name(),
            structure.join(&a, &b).to_string(),
            structure.meet(&a, &b).to_string(),
            structure.tensor(&a, &b).to_string(),
        );
    }

    // values are exact rationals; display picks the shortest exact
    // decimal when one exists and falls back to p/q
    let third = TruthValue::from_ratio(1, 3).unwrap();
    let eighth = TruthValue::from_ratio(1, 8).unwrap();
    println!("\n1/3 prints as {third}, 1/8 prints as {eighth}");
    let product = Structure::Product.tensor(&third, &eighth);
    println!("their product is {product}");

    // the same expression under min and under product
    let (expr, _) = parse_inferring("(0.5a)*").unwrap();
    println!("\ndegrees of a^k in (0.5a)*:");
    println!("{:6} {:>8} {:>8}", "word", "goedel", "product");
    for k in 0..5 {
        let word = "a".repeat(k);
        let shown = if word.is_empty() { "ε" } else { &word };
        println!(
            "{:6} {:>8} {:>8}",
            shown,
            denote(&expr, &word, Structure::Goedel).to_string(),
            denote(&expr, &word, Structure::Product).to_string(),
        );
    }
}
