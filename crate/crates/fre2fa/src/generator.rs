//! Seeded random expression generation for fuzz-style checking.
//!
//! Generation is deterministic for a fixed seed and configuration, so any
//! failure reproduces from its seed alone. Star and scalar nodes get less
//! likely the deeper the recursion, which keeps expressions from
//! degenerating into star towers.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::ast::{Alphabet, FuzzyRegex};
use crate::lattice::TruthValue;

/// Shape parameters for [`generate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorConfig {
    /// Maximum AST depth; 1 yields a single leaf.
    pub max_depth: usize,
    /// Number of letters, drawn from the front of `a..z`.
    pub alphabet_size: usize,
    /// Scalars drawn for scale nodes; each must lie strictly in `(0, 1)`.
    pub scalar_pool: Vec<TruthValue>,
}

impl GeneratorConfig {
    pub fn new(max_depth: usize, alphabet_size: usize, scalar_pool: Vec<TruthValue>) -> Self {
        let config = GeneratorConfig {
            max_depth,
            alphabet_size,
            scalar_pool,
        };
        config.validate();
        config
    }

    /// The alphabet expressions are generated over.
    pub fn alphabet(&self) -> Alphabet {
        Alphabet::first_n(self.alphabet_size)
    }

    fn validate(&self) {
        assert!(self.max_depth >= 1, "max_depth must be at least 1");
        assert!(
            (1..=26).contains(&self.alphabet_size),
            "alphabet_size must be in 1..=26"
        );
        assert!(!self.scalar_pool.is_empty(), "scalar_pool must be nonempty");
        assert!(
            self.scalar_pool
                .iter()
                .all(|v| !v.is_zero() && !v.is_one()),
            "scalars 0 and 1 are degenerate; the pool must lie strictly in (0, 1)"
        );
    }
}

impl Default for GeneratorConfig {
    fn default() -> Self {
        GeneratorConfig::new(
            4,
            2,
            vec![
                TruthValue::from_ratio(3, 10).unwrap(),
                TruthValue::from_ratio(7, 10).unwrap(),
            ],
        )
    }
}

/// Generates one expression, deterministically in `seed` and `config`.
pub fn generate(seed: u64, config: &GeneratorConfig) -> FuzzyRegex {
    config.validate();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    node(&mut rng, config.max_depth, config)
}

fn leaf(rng: &mut ChaCha8Rng, config: &GeneratorConfig) -> FuzzyRegex {
    match rng.gen_range(0u32..10) {
        0 => FuzzyRegex::Epsilon,
        1 => FuzzyRegex::Empty,
        _ => {
            let index = rng.gen_range(0u32..config.alphabet_size as u32);
            let letter = (b'a' + index as u8) as char;
            FuzzyRegex::Sym(letter)
        }
    }
}

fn node(rng: &mut ChaCha8Rng, depth_left: usize, config: &GeneratorConfig) -> FuzzyRegex {
    if depth_left <= 1 {
        return leaf(rng, config);
    }
    // star/scale weights shrink as depth is used up
    let unary = depth_left as u32;
    let weights = [3, 4, 5, unary, unary]; // leaf, union, concat, star, scale
    let total: u32 = weights.iter().sum();
    let mut pick = rng.gen_range(0u32..total);
    let mut choice = 0;
    for (i, w) in weights.iter().enumerate() {
        if pick < *w {
            choice = i;
            break;
        }
        pick -= w;
    }
    match choice {
        0 => leaf(rng, config),
        1 => {
            let left = node(rng, depth_left - 1, config);
            let right = node(rng, depth_left - 1, config);
            FuzzyRegex::union(left, right)
        }
        2 => {
            let left = node(rng, depth_left - 1, config);
            let right = node(rng, depth_left - 1, config);
            FuzzyRegex::concat(left, right)
        }
        3 => FuzzyRegex::star(node(rng, depth_left - 1, config)),
        _ => {
            let index = rng.gen_range(0u32..config.scalar_pool.len() as u32);
            let value = config.scalar_pool[index as usize].clone();
            FuzzyRegex::scale(value, node(rng, depth_left - 1, config))
        }
    }
}
