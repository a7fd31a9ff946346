//! State-count comparison between the position route and the follow
//! route over a batch of random expressions.
//!
//! ```sh
//! cargo run --example position_vs_follow
//! ```

use fre2fa::generator::{generate, GeneratorConfig};
use fre2fa::lattice::TruthValue;
use fre2fa::mark::mark;
use fre2fa::{compile_crisp, Method};

fn main() {
    let config = GeneratorConfig::new(
        5,
        2,
        vec![
            TruthValue::from_ratio(3, 10).unwrap(),
            TruthValue::from_ratio(7, 10).unwrap(),
        ],
    );

    let trials = 300;
    let mut strictly_smaller = 0;
    let mut saved_total = 0usize;
    let mut best: Option<(String, usize, usize)> = None;

    for seed in 0..trials {
        let expr = generate(seed, &config);
        let n = mark(&expr).position_count();
        let (_, position) = compile_crisp(&expr, Method::Position);
        let (_, follow) = compile_crisp(&expr, Method::Follow);
        assert_eq!(position.state_count(), n + 1);
        assert!(follow.state_count() <= position.state_count());

        let saved = position.state_count() - follow.state_count();
        if saved > 0 {
            strictly_smaller += 1;
            saved_total += saved;
        }
        if best.as_ref().is_none_or(|(_, p, f)| saved > p - f) {
            best = Some((expr.to_string(), position.state_count(), follow.state_count()));
        }
    }

    println!("{trials} random expressions (depth ≤ {}, 2 letters):", config.max_depth);
    println!("  follow route strictly smaller: {strictly_smaller}");
    println!("  states saved in total:         {saved_total}");
    if let Some((expr, position, follow)) = best {
        println!("  biggest saving: {position} → {follow} states on {expr}");
    }
}
