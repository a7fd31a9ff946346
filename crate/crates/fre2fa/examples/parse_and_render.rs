//! Parsing expression text, dumping the AST, and rendering it back.
//!
//! ```sh
//! cargo run --example parse_and_render
//! ```

use fre2fa::parser::{parse_inferring, ParseError};

fn main() {
    let inputs = [
        "0.2((0.1(ab)*)*+b)",
        "0.1(ab)*+c",
        "a 0.5 @eps",
        "@null*",
        "a + + b",
        "0.1234567a",
    ];

    for text in inputs {
        println!("input:    {text}");
        match parse_inferring(text) {
            Ok((expr, sigma)) => {
                println!("alphabet: {sigma}");
                println!("ast:      {}", expr.dump());
                println!("rendered: {expr}");
                // the renderer uses minimal parentheses but is structurally
                // faithful: re-parsing gives back the same tree
                let reparsed = fre2fa::parser::parse(&expr.to_string(), &sigma).unwrap();
                assert_eq!(reparsed, expr);
            }
            Err(e @ ParseError::Syntax { .. }) => println!("rejected: {e}"),
            Err(e) => println!("rejected: {e}"),
        }
        println!();
    }
}
