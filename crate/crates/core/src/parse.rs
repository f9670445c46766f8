//! Text syntax for monomials and generator lists.
//!
//! A monomial is `1` or a `*`-separated product of variable names, each with
//! an optional `^k`; whitespace is ignored. An ideal is a comma-separated
//! list of monomials, optionally wrapped in parentheses. The printed form of
//! [`Monomial`] and [`MonomialIdeal`] parses back to the same value.

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::{exps, Monomial};
use crate::ring::Ring;

pub fn parse_monomial(ring: &Ring, text: &str) -> Result<Monomial> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(Error::Parse("empty monomial".into()));
    }
    let mut exponents = vec![0u64; ring.nvars()];
    if compact == "1" {
        return Monomial::new(ring, vec![0; ring.nvars()]);
    }
    for factor in compact.split('*') {
        let (name, power) = match factor.split_once('^') {
            Some((name, power)) => {
                let power: u64 = power
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad exponent in {factor:?}")))?;
                (name, power)
            }
            None => (factor, 1),
        };
        if name.is_empty() {
            return Err(Error::Parse(format!(
                "malformed factor {factor:?} in {text:?}"
            )));
        }
        let i = ring
            .index_of(name)
            .ok_or_else(|| Error::Parse(format!("unknown variable {name:?}")))?;
        exponents[i] = exponents[i].saturating_add(power);
    }
    let exponents = exponents
        .into_iter()
        .map(exps::checked)
        .collect::<Result<Vec<_>>>()?;
    Monomial::new(ring, exponents)
}

pub fn parse_ideal(ring: &Ring, text: &str) -> Result<MonomialIdeal> {
    let trimmed = text.trim();
    let inner = trimmed
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .unwrap_or(trimmed);
    if inner.trim().is_empty() || inner.trim() == "0" {
        return Ok(MonomialIdeal::zero(ring));
    }
    let gens = inner
        .split(',')
        .map(|m| parse_monomial(ring, m))
        .collect::<Result<Vec<_>>>()?;
    MonomialIdeal::new(ring, gens)
}
