//! Degrees of membership: automaton evaluation next to the denotational
//! semantics, under both the min and the product tensor.
//!
//! ```sh
//! cargo run --example evaluate_words
//! ```

use fre2fa::lattice::Structure;
use fre2fa::parser::parse_inferring;
use fre2fa::semantics::denote;
use fre2fa::{compile, Method};

fn main() {
    let text = "0.2((0.1(ab)*)*+b)";
    let (expr, sigma) = parse_inferring(text).unwrap();
    let words = ["", "b", "ab", "abab", "aab", "ba"];

    for structure in [Structure::Goedel, Structure::Product] {
        let fa = compile(&expr, &sigma, Method::Follow, structure);
        println!("{structure}: {expr}");
        println!("  {:8} {:>10} {:>10}", "word", "automaton", "denotation");
        for word in words {
            let by_automaton = fa.eval(word).unwrap();
            let by_denotation = denote(&expr, word, structure);
            assert_eq!(by_automaton, by_denotation);
            let shown = if word.is_empty() { "ε" } else { word };
            println!("  {shown:8} {:>10} {:>10}", by_automaton.to_string(), by_denotation.to_string());
        }
        println!();
    }

    // reach vectors expose the per-state degrees behind an evaluation
    let fa = compile(&expr, &sigma, Method::Follow, Structure::Goedel);
    let reach = fa.reach("ab").unwrap();
    println!("per-state degrees after \"ab\":");
    for (state, degree) in reach.iter().enumerate() {
        println!("  state {state}: {degree}");
    }
}
