//! The whole construction, one stage at a time: marking, position sets,
//! position automaton, follow quotient, scalar elimination.
//!
//! ```sh
//! cargo run --example build_follow
//! ```

use fre2fa::fuzzy::{fuzzify, Matrix};
use fre2fa::glushkov::{build_position_automaton, follow_quotient, position_sets};
use fre2fa::lattice::Structure;
use fre2fa::mark::mark;
use fre2fa::parser::parse_inferring;

fn show_matrix(name: &str, matrix: &Matrix) {
    println!("  {name} =");
    for i in 0..matrix.size() {
        let row: Vec<String> = (0..matrix.size())
            .map(|j| matrix.get(i, j).to_string())
            .collect();
        println!("    [{}]", row.join(", "));
    }
}

fn main() {
    let text = "0.2((0.1(ab)*)*+b)";
    let (expr, sigma) = parse_inferring(text).unwrap();
    println!("expression: {expr} over {sigma}\n");

    // 1. mark: scalars become positions alongside the letters
    let marked = mark(&expr);
    println!("positions:");
    for (p, symbol) in marked.positions() {
        println!("  {p}: {symbol}  (φ = {})", symbol.phi());
    }

    // 2. nullable / first / last / follow
    let sets = position_sets(&marked);
    println!("\nnullable: {}", sets.nullable);
    println!("first: {:?}", sets.first);
    println!("last:  {:?}", sets.last);
    for (p, f) in &sets.follow {
        println!("follow({p}) = {f:?}");
    }

    // 3. the position automaton has exactly n + 1 states
    let position = build_position_automaton(&marked, &sets);
    println!("\nposition automaton: {} states", position.state_count());

    // 4. the follow quotient merges states with equal follow behavior
    let follow = follow_quotient(&position, &sets);
    println!("follow automaton:   {} states", follow.state_count());
    for state in 0..follow.state_count() {
        println!(
            "  state {state} = positions {:?}{}",
            follow.label(state),
            if follow.is_final(state) { "  (final)" } else { "" }
        );
    }

    // 5. scalar elimination: scalar edges become weights
    let fa = fuzzify(&follow, sigma.iter(), Structure::Goedel).unwrap();
    println!("\nfuzzy automaton over {sigma}:");
    for letter in sigma.iter() {
        show_matrix(&format!("δ_{letter}"), fa.transition(letter).unwrap());
    }
    let tau: Vec<String> = fa.tau().iter().map(|v| v.to_string()).collect();
    println!("  τ = [{}]", tau.join(", "));
}
