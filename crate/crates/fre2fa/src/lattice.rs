//! Truth values and the integral lattice-ordered monoids they live in.
//!
//! A [`TruthValue`] is an exact nonnegative rational in `[0, 1]`, kept in
//! lowest terms so equality is structural. A [`Structure`] bundles the
//! lattice operations (join `∨`, meet `∧`) with a monoid tensor `⊗` whose
//! identity coincides with the lattice top, so longer `⊗`-products never
//! increase. Three carriers are provided:
//!
//! * `Goedel` — `⊗ = min`, `∨ = max` on `[0, 1]`,
//! * `Product` — `⊗ =` rational multiplication, `∨ = max`,
//! * `Boolean` — the restriction of `Goedel` to `{0, 1}`.
//!
//! All values are immutable and all operations are pure functions.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Errors raised when turning text into a [`TruthValue`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumberError {
    /// Not a decimal in `[0, 1]` (or, for lenient parsing, not a `p/q` either).
    #[error("malformed truth value `{0}`: expected `0`, `1`, or `0.` followed by digits")]
    Malformed(String),
    /// A fraction part longer than six digits in a grammar literal.
    #[error("too many fraction digits in `{0}`: at most 6 are allowed")]
    TooManyDigits(String),
}

/// An exact rational truth value in `[0, 1]`.
///
/// The wrapped rational is always in lowest terms, so `==` is both
/// structural and numeric. The order is the numeric order on `[0, 1]`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TruthValue(BigRational);

impl TruthValue {
    /// The least element 0.
    pub fn zero() -> Self {
        TruthValue(BigRational::zero())
    }

    /// The greatest element 1.
    pub fn one() -> Self {
        TruthValue(BigRational::one())
    }

    /// Builds a value from a rational, rejecting anything outside `[0, 1]`.
    pub fn new(value: BigRational) -> Result<Self, NumberError> {
        if value < BigRational::zero() || value > BigRational::one() {
            return Err(NumberError::Malformed(value.to_string()));
        }
        Ok(TruthValue(value))
    }

    /// Builds `numer/denom`, rejecting ratios outside `[0, 1]`.
    pub fn from_ratio(numer: u64, denom: u64) -> Result<Self, NumberError> {
        if denom == 0 {
            return Err(NumberError::Malformed(format!("{numer}/{denom}")));
        }
        Self::new(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    /// Parses a grammar literal: `0`, `1`, or `0.` followed by 1–6 digits.
    ///
    /// This is the strict form accepted inside expression text. For the
    /// lenient round-trip parser (arbitrary precision decimals and `p/q`)
    /// use the [`FromStr`] impl.
    pub fn parse_literal(text: &str) -> Result<Self, NumberError> {
        match text {
            "0" => return Ok(Self::zero()),
            "1" => return Ok(Self::one()),
            _ => {}
        }
        let digits = match text.strip_prefix("0.") {
            Some(digits) => digits,
            None => return Err(NumberError::Malformed(text.to_string())),
        };
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(NumberError::Malformed(text.to_string()));
        }
        if digits.len() > 6 {
            return Err(NumberError::TooManyDigits(text.to_string()));
        }
        let numer: BigInt = digits.parse().expect("digit run parses as an integer");
        let denom = BigInt::from(10u32).pow(digits.len() as u32);
        Ok(TruthValue(BigRational::new(numer, denom)))
    }

    /// Borrow of the underlying reduced rational.
    pub fn as_ratio(&self) -> &BigRational {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }
}

/// Removes all factors `f` from `n`, returning how many were stripped.
fn strip_factor(n: &mut BigInt, f: u32) -> u32 {
    let f = BigInt::from(f);
    let mut count = 0;
    while (&*n % &f).is_zero() && !n.is_zero() {
        *n /= &f;
        count += 1;
    }
    count
}

impl fmt::Display for TruthValue {
    /// Shortest exact decimal when one exists, otherwise `p/q`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let numer = self.0.numer();
        let denom = self.0.denom();
        if denom.is_one() {
            return write!(f, "{numer}");
        }
        let mut rest = denom.clone();
        let twos = strip_factor(&mut rest, 2);
        let fives = strip_factor(&mut rest, 5);
        if rest.is_one() {
            // denom divides a power of ten: value = digits / 10^k exactly
            let k = twos.max(fives);
            let scaled = numer * BigInt::from(10u32).pow(k) / denom;
            write!(f, "0.{:0>width$}", scaled.to_string(), width = k as usize)
        } else {
            write!(f, "{numer}/{denom}")
        }
    }
}

impl FromStr for TruthValue {
    type Err = NumberError;

    /// Lenient parse: `p/q`, or a decimal with any number of digits.
    /// Accepts exactly the strings [`Display`] produces.
    fn from_str(text: &str) -> Result<Self, NumberError> {
        let malformed = || NumberError::Malformed(text.to_string());
        if let Some((p, q)) = text.split_once('/') {
            let numer: BigInt = p.parse().map_err(|_| malformed())?;
            let denom: BigInt = q.parse().map_err(|_| malformed())?;
            if denom.is_zero() {
                return Err(malformed());
            }
            return Self::new(BigRational::new(numer, denom)).map_err(|_| malformed());
        }
        let (int_part, frac_part) = match text.split_once('.') {
            Some((i, f)) => (i, f),
            None => (text, ""),
        };
        if int_part.is_empty()
            || !int_part.bytes().all(|b| b.is_ascii_digit())
            || !frac_part.bytes().all(|b| b.is_ascii_digit())
        {
            return Err(malformed());
        }
        let int: BigInt = int_part.parse().map_err(|_| malformed())?;
        let mut value = BigRational::from_integer(int);
        if !frac_part.is_empty() {
            let numer: BigInt = frac_part.parse().map_err(|_| malformed())?;
            let denom = BigInt::from(10u32).pow(frac_part.len() as u32);
            value += BigRational::new(numer, denom);
        }
        Self::new(value).map_err(|_| malformed())
    }
}

impl Serialize for TruthValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for TruthValue {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

/// The truth-value algebra a run computes in.
///
/// Every carrier here is a totally ordered subset of `[0, 1]`, so `∨` and
/// `∧` coincide with `max` and `min`; only the tensor differs. The monoid
/// identity equals the lattice top in all three, which is what licenses the
/// scalar-elimination closure downstream.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Structure {
    /// `⊗ = min` on `[0, 1]`.
    Goedel,
    /// `⊗ =` exact rational multiplication on `[0, 1]`.
    Product,
    /// `Goedel` restricted to `{0, 1}`.
    Boolean,
}

impl Structure {
    /// All provided structures, in CLI-name order.
    pub const ALL: [Structure; 3] = [Structure::Goedel, Structure::Product, Structure::Boolean];

    /// The CLI/JSON name of the structure.
    pub fn name(&self) -> &'static str {
        match self {
            Structure::Goedel => "goedel",
            Structure::Product => "product",
            Structure::Boolean => "boolean",
        }
    }

    /// Looks a structure up by its CLI/JSON name.
    pub fn from_name(name: &str) -> Option<Structure> {
        Structure::ALL.iter().copied().find(|s| s.name() == name)
    }

    /// Lattice join `∨` (supremum; `max` on these carriers).
    pub fn join(&self, a: &TruthValue, b: &TruthValue) -> TruthValue {
        if a >= b {
            a.clone()
        } else {
            b.clone()
        }
    }

    /// Lattice meet `∧` (infimum; `min` on these carriers).
    pub fn meet(&self, a: &TruthValue, b: &TruthValue) -> TruthValue {
        if a <= b {
            a.clone()
        } else {
            b.clone()
        }
    }

    /// Monoid tensor `⊗`.
    pub fn tensor(&self, a: &TruthValue, b: &TruthValue) -> TruthValue {
        match self {
            Structure::Goedel | Structure::Boolean => self.meet(a, b),
            Structure::Product => TruthValue(a.as_ratio() * b.as_ratio()),
        }
    }

    /// The least element 0, an annihilator for `⊗`.
    pub fn zero(&self) -> TruthValue {
        TruthValue::zero()
    }

    /// The greatest element 1.
    pub fn one(&self) -> TruthValue {
        TruthValue::one()
    }

    /// The tensor identity `e`; equals [`Structure::one`] in every provided
    /// structure (integrality).
    pub fn identity(&self) -> TruthValue {
        TruthValue::one()
    }

    /// Whether `e = 1`. True for every provided structure; downstream
    /// constructions check this rather than assume it.
    pub fn is_integral(&self) -> bool {
        self.identity() == self.one()
    }

    /// Whether `value` belongs to the structure's carrier.
    pub fn contains(&self, value: &TruthValue) -> bool {
        match self {
            Structure::Goedel | Structure::Product => true,
            Structure::Boolean => value.is_zero() || value.is_one(),
        }
    }
}

impl fmt::Display for Structure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
