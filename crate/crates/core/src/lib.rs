//! Determinants of structured symbolic matrices expanded as signed sums over
//! Brauer diagrams.
//!
//! Any square matrix can be written as `A + B` or `A + i·B` with `A`
//! symmetric and `B` skew-symmetric. For the first form the determinant is the
//! sum of `(-1)^crossings · weight` over all Brauer diagrams with both rows
//! labelled left to right; for the second, the bottom row is labelled right to
//! left and the sum picks up a global sign `(-1)^(n choose 2)`.
//!
//! The crate provides:
//!
//! * [`algebra`]: Gaussian integers and sparse multivariate polynomials, all
//!   arithmetic exact.
//! * [`diagrams`]: Brauer diagrams, their enumeration, crossing numbers,
//!   labelled edge lists and weights.
//! * [`bijection`]: the maps between labelled diagrams and surviving Leibniz
//!   terms, and the cycle sign formulas.
//! * [`matrices`]: symbolic matrices, Leibniz determinants and permanents, the
//!   diagram-sum determinant and Pfaffians.
//! * [`counting`]: double factorials, Stirling numbers and the Sylvester
//!   recurrence used as independent oracles.
//! * [`verify`]: exhaustive checks tying all of the above together.
//! * [`cli`]: the command-line front end.

pub mod algebra;
pub mod bijection;
pub mod cli;
pub mod counting;
pub mod diagrams;
mod error;
pub mod matrices;
pub mod verify;

pub use error::{Error, Result};

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// Which of the two matrix decompositions (and matching diagram labelling) is
/// meant.
///
/// `F` labels the bottom row of a diagram left to right and pairs with the
/// matrix `A + B`; `B` labels it right to left and pairs with `A + i·B`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Variant {
    F,
    B,
}

impl Variant {
    pub const ALL: [Variant; 2] = [Variant::F, Variant::B];
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Variant::F => f.write_str("F"),
            Variant::B => f.write_str("B"),
        }
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "F" | "f" => Ok(Variant::F),
            "B" | "b" => Ok(Variant::B),
            _ => Err(Error::Parse(format!(
                "unknown variant `{s}`, expected F or B"
            ))),
        }
    }
}

/// `n choose 2`, the number of unordered pairs among `n` items.
pub(crate) fn pairs(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}
