//! Bounded equivalence checking: both automaton routes against the
//! denotation on every word up to a length.
//!
//! ```sh
//! cargo run --example equivalence_check
//! ```

use fre2fa::equivalence::{check_equivalence, DEFAULT_WORD_BUDGET};
use fre2fa::lattice::Structure;
use fre2fa::parser::parse_inferring;

fn main() {
    for text in ["0.2((0.1(ab)*)*+b)", "(0.5a+b)*", "0.3(ab)+0.7(ba)"] {
        let (expr, sigma) = parse_inferring(text).unwrap();
        let report = check_equivalence(
            &expr,
            &sigma,
            Structure::Goedel,
            6,
            DEFAULT_WORD_BUDGET,
        )
        .unwrap();
        println!("{}", serde_json::to_string_pretty(&report).unwrap());
        println!();
    }

    // the budget guards against accidental exponential enumerations
    let (expr, sigma) = parse_inferring("a+b").unwrap();
    let err = check_equivalence(&expr, &sigma, Structure::Goedel, 64, DEFAULT_WORD_BUDGET)
        .unwrap_err();
    println!("length 64 over two letters: {err}");
}
