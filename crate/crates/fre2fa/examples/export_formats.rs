//! Serializing automata: the JSON interchange document and DOT rendering,
//! for both the crisp intermediate and the final fuzzy automaton.
//!
//! ```sh
//! cargo run --example export_formats
//! ```

use fre2fa::document::AutomatonDocument;
use fre2fa::dot::to_dot;
use fre2fa::lattice::Structure;
use fre2fa::parser::parse_inferring;
use fre2fa::{compile, compile_crisp, Method};

fn main() {
    let (expr, sigma) = parse_inferring("0.2((0.1(ab)*)*+b)").unwrap();

    // the crisp follow automaton still has scalar-symbol edges; DOT draws
    // them dashed
    let (_, crisp) = compile_crisp(&expr, Method::Follow);
    let crisp_doc = AutomatonDocument::from_crisp(&crisp, Structure::Goedel);
    println!("--- crisp follow automaton, DOT ---");
    print!("{}", to_dot(&crisp_doc));

    // after scalar elimination the edges carry weights instead
    let fa = compile(&expr, &sigma, Method::Follow, Structure::Goedel);
    let fuzzy_doc = AutomatonDocument::from_fuzzy(&fa);
    println!("\n--- fuzzy automaton, DOT ---");
    print!("{}", to_dot(&fuzzy_doc));

    println!("\n--- fuzzy automaton, JSON ---");
    let json = fuzzy_doc.to_json();
    print!("{json}");

    // the JSON document is lossless: weights are exact-value strings
    let reloaded = AutomatonDocument::from_json(&json).unwrap();
    assert_eq!(reloaded, fuzzy_doc);
    assert_eq!(reloaded.to_fuzzy().unwrap(), fa);
    println!("\nround-trip: document → JSON → document → automaton, all equal");
}
