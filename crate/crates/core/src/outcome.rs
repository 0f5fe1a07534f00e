//! Vocabulary shared by both models: observable names, outcomes, subsystems
//! and exact probabilities.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Exact probability.
pub type Probability = Ratio<u32>;

pub fn prob(numer: u32, denom: u32) -> Probability {
    Ratio::new(numer, denom)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Axis {
    X,
    Y,
    Z,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::X, Axis::Y, Axis::Z];
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Axis::X => "X",
            Axis::Y => "Y",
            Axis::Z => "Z",
        };
        f.write_str(s)
    }
}

impl FromStr for Axis {
    type Err = Error;
    fn from_str(s: &str) -> Result<Axis> {
        match s.trim() {
            "X" | "x" => Ok(Axis::X),
            "Y" | "y" => Ok(Axis::Y),
            "Z" | "z" => Ok(Axis::Z),
            other => Err(Error::Parse(format!("unknown observable {other:?}"))),
        }
    }
}

/// Parses a comma-separated observable list such as `"X,Z"`.
pub fn parse_axes(s: &str) -> Result<Vec<Axis>> {
    s.split(',').map(str::parse).collect()
}

/// A two-valued measurement outcome, `+1` or `-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Outcome {
    Plus,
    Minus,
}

impl Outcome {
    pub const ALL: [Outcome; 2] = [Outcome::Plus, Outcome::Minus];

    pub fn sign(self) -> i8 {
        match self {
            Outcome::Plus => 1,
            Outcome::Minus => -1,
        }
    }

    pub fn opposite(self) -> Outcome {
        match self {
            Outcome::Plus => Outcome::Minus,
            Outcome::Minus => Outcome::Plus,
        }
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::Plus => "+1",
            Outcome::Minus => "-1",
        })
    }
}

impl FromStr for Outcome {
    type Err = Error;
    fn from_str(s: &str) -> Result<Outcome> {
        match s.trim() {
            "+1" | "+" | "1" => Ok(Outcome::Plus),
            "-1" | "-" => Ok(Outcome::Minus),
            other => Err(Error::Parse(format!("unknown outcome {other:?}"))),
        }
    }
}

impl Serialize for Outcome {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Which member of a two-system pair is measured.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Subsystem {
    First,
    Second,
}

impl Subsystem {
    pub const ALL: [Subsystem; 2] = [Subsystem::First, Subsystem::Second];

    pub fn index(self) -> u8 {
        match self {
            Subsystem::First => 1,
            Subsystem::Second => 2,
        }
    }
}

impl fmt::Display for Subsystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "sys{}", self.index())
    }
}

/// Exact two-outcome distribution.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct OutcomeDistribution {
    pub p_plus: Probability,
    pub p_minus: Probability,
}

impl OutcomeDistribution {
    /// Normalizes two nonnegative weights. Panics if both are zero.
    pub fn from_weights(plus: u32, minus: u32) -> Self {
        let total = plus + minus;
        assert!(total > 0, "outcome weights must not both vanish");
        OutcomeDistribution { p_plus: prob(plus, total), p_minus: prob(minus, total) }
    }

    pub fn get(&self, outcome: Outcome) -> Probability {
        match outcome {
            Outcome::Plus => self.p_plus,
            Outcome::Minus => self.p_minus,
        }
    }

    pub fn certain(outcome: Outcome) -> Self {
        match outcome {
            Outcome::Plus => OutcomeDistribution::from_weights(1, 0),
            Outcome::Minus => OutcomeDistribution::from_weights(0, 1),
        }
    }
}

impl fmt::Display for OutcomeDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(+1: {}, -1: {})", self.p_plus, self.p_minus)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn distribution_sums_to_one() {
        for (p, m) in [(1, 0), (0, 1), (1, 1), (3, 1)] {
            let d = OutcomeDistribution::from_weights(p, m);
            assert_eq!(d.p_plus + d.p_minus, prob(1, 1));
        }
    }

    #[test]
    fn parse_and_print() {
        assert_eq!(parse_axes("X,Z").unwrap(), vec![Axis::X, Axis::Z]);
        assert!(parse_axes("X,W").is_err());
        assert_eq!("-1".parse::<Outcome>().unwrap(), Outcome::Minus);
        assert_eq!(Outcome::Plus.to_string(), "+1");
        assert_eq!(prob(2, 4).to_string(), "1/2");
    }
}
