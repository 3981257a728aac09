//! Exact nonnegative cost values.
//!
//! Weights are stored as an integer count of nano-units (nine decimal places),
//! so sums and comparisons are exact and cost ties break deterministically.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign};
use std::str::FromStr;

use thiserror::Error;

/// Number of decimal places a [`Weight`] can represent.
pub const WEIGHT_DECIMALS: u32 = 9;

const SCALE: u128 = 1_000_000_000;

/// Largest value accepted for a single weight.
pub const MAX_WEIGHT_UNITS: u64 = 1_000_000_000_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeightError {
    #[error("weight is negative: {0}")]
    Negative(String),
    #[error("weight is not a finite number: {0}")]
    NotFinite(String),
    #[error("weight {0} has more than {WEIGHT_DECIMALS} decimal places")]
    TooPrecise(String),
    #[error("weight {0} exceeds the maximum of {MAX_WEIGHT_UNITS}")]
    TooLarge(String),
    #[error("malformed weight: {0:?}")]
    Malformed(String),
}

/// A nonnegative cost with nine exact decimal places.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight(u128);

impl Weight {
    pub const ZERO: Weight = Weight(0);
    pub const ONE: Weight = Weight(SCALE);

    /// Whole-unit weight.
    pub fn from_units(units: u64) -> Weight {
        Weight(units as u128 * SCALE)
    }

    /// Raw nano-unit count.
    pub fn from_nanos(nanos: u128) -> Weight {
        Weight(nanos)
    }

    pub fn nanos(self) -> u128 {
        self.0
    }

    /// Converts through the shortest decimal representation of `value`.
    pub fn from_f64(value: f64) -> Result<Weight, WeightError> {
        if !value.is_finite() {
            return Err(WeightError::NotFinite(value.to_string()));
        }
        value.to_string().parse()
    }

    pub fn to_f64(self) -> f64 {
        self.0 as f64 / SCALE as f64
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl From<u32> for Weight {
    fn from(units: u32) -> Weight {
        Weight::from_units(units as u64)
    }
}

impl Add for Weight {
    type Output = Weight;

    fn add(self, rhs: Weight) -> Weight {
        Weight(self.0 + rhs.0)
    }
}

impl AddAssign for Weight {
    fn add_assign(&mut self, rhs: Weight) {
        self.0 += rhs.0;
    }
}

impl Sum for Weight {
    fn sum<I: Iterator<Item = Weight>>(iter: I) -> Weight {
        iter.fold(Weight::ZERO, Add::add)
    }
}

impl<'a> Sum<&'a Weight> for Weight {
    fn sum<I: Iterator<Item = &'a Weight>>(iter: I) -> Weight {
        iter.copied().sum()
    }
}

/// Plain decimal, no exponent, no trailing fractional zeros.
impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let whole = self.0 / SCALE;
        let frac = self.0 % SCALE;
        if frac == 0 {
            return write!(f, "{whole}");
        }
        let digits = format!("{frac:09}");
        write!(f, "{whole}.{}", digits.trim_end_matches('0'))
    }
}

/// Parses JSON-style decimal numbers: `12`, `0.25`, `1e3`, `2.5E-2`.
impl FromStr for Weight {
    type Err = WeightError;

    fn from_str(text: &str) -> Result<Weight, WeightError> {
        let malformed = || WeightError::Malformed(text.to_string());
        let s = text.trim();
        if s.is_empty() {
            return Err(malformed());
        }
        let (negative, s) = match s.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, s.strip_prefix('+').unwrap_or(s)),
        };
        let lowered = s.to_ascii_lowercase();
        if lowered == "inf" || lowered == "infinity" || lowered == "nan" {
            return Err(WeightError::NotFinite(text.to_string()));
        }
        let (mantissa, exponent) = match s.find(['e', 'E']) {
            Some(pos) => {
                let exp: i64 = s[pos + 1..].parse().map_err(|_| malformed())?;
                (&s[..pos], exp)
            }
            None => (s, 0),
        };
        let (int_part, frac_part) = match mantissa.split_once('.') {
            Some((i, f)) => (i, f),
            None => (mantissa, ""),
        };
        if int_part.is_empty() && frac_part.is_empty() {
            return Err(malformed());
        }
        if !int_part.bytes().chain(frac_part.bytes()).all(|b| b.is_ascii_digit()) {
            return Err(malformed());
        }

        // value = digits * 10^(exponent - frac_len)
        let digits: String = format!("{int_part}{frac_part}");
        let digits = digits.trim_start_matches('0');
        let mut shift = exponent - frac_part.len() as i64 + WEIGHT_DECIMALS as i64;
        let mut digits = digits.to_string();
        while shift < 0 {
            match digits.pop() {
                Some('0') => shift += 1,
                Some(_) => return Err(WeightError::TooPrecise(text.to_string())),
                None => {
                    shift = 0;
                }
            }
        }
        if digits.chars().all(|c| c == '0') {
            return Ok(Weight::ZERO);
        }
        if negative {
            return Err(WeightError::Negative(text.to_string()));
        }
        let too_large = || WeightError::TooLarge(text.to_string());
        if digits.len() as i64 + shift > 40 {
            return Err(too_large());
        }
        let mut nanos: u128 = digits.parse().map_err(|_| too_large())?;
        for _ in 0..shift {
            nanos = nanos.checked_mul(10).ok_or_else(too_large)?;
        }
        if nanos > MAX_WEIGHT_UNITS as u128 * SCALE {
            return Err(too_large());
        }
        Ok(Weight(nanos))
    }
}
