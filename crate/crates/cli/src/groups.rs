//! Group strings: `"0"`, `"Z"`, `"Z_n"`, summands joined by `" + "` in
//! invariant-factor order with free summands last.

use std::fmt;

use kktheory_core::exactalg::{FgAbGroup, InvariantFactors};
use num_bigint::BigInt;
use num_traits::One;

pub fn render(g: &InvariantFactors) -> String {
    g.to_string()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupSyntaxError(pub String);

impl fmt::Display for GroupSyntaxError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "not a group string: {:?}", self.0)
    }
}

impl std::error::Error for GroupSyntaxError {}

/// Inverse of [`render`]. Accepts summands in any order and normalizes.
pub fn parse(s: &str) -> Result<InvariantFactors, GroupSyntaxError> {
    let err = || GroupSyntaxError(s.to_string());
    let s = s.trim();
    if s == "0" {
        return Ok(InvariantFactors::zero());
    }
    let mut orders = Vec::new();
    for term in s.split('+').map(str::trim) {
        if term == "Z" {
            orders.push(BigInt::from(0));
            continue;
        }
        let n: BigInt = term.strip_prefix("Z_").ok_or_else(err)?.parse().map_err(|_| err())?;
        if n <= BigInt::one() {
            return Err(err());
        }
        orders.push(n);
    }
    Ok(FgAbGroup::cyclic_sum(&orders).invariants().clone())
}
