use std::fmt;

use crate::error::{Error, Result};
use crate::ring::Ring;
use crate::varset::VarSet;
use crate::EXPONENT_CEILING;

/// Exponent vector arithmetic shared by [`Monomial`] and
/// [`MonomialIdeal`](crate::MonomialIdeal). No ring checks at this level.
pub(crate) mod exps {
    use super::*;

    pub type Exps = Box<[u32]>;

    pub fn divides(a: &[u32], b: &[u32]) -> bool {
        a.iter().zip(b).all(|(x, y)| x <= y)
    }

    pub fn lcm(a: &[u32], b: &[u32]) -> Exps {
        a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
    }

    pub fn gcd(a: &[u32], b: &[u32]) -> Exps {
        a.iter().zip(b).map(|(x, y)| *x.min(y)).collect()
    }

    /// `a / gcd(a, b)`.
    pub fn strip(a: &[u32], b: &[u32]) -> Exps {
        a.iter().zip(b).map(|(x, y)| x.saturating_sub(*y)).collect()
    }

    pub fn mul(a: &[u32], b: &[u32]) -> Result<Exps> {
        a.iter()
            .zip(b)
            .map(|(x, y)| checked(*x as u64 + *y as u64))
            .collect()
    }

    pub fn pow(a: &[u32], q: u32) -> Result<Exps> {
        a.iter().map(|x| checked(*x as u64 * q as u64)).collect()
    }

    pub fn checked(e: u64) -> Result<u32> {
        if e > EXPONENT_CEILING as u64 {
            Err(Error::ExponentOverflow(e))
        } else {
            Ok(e as u32)
        }
    }

    pub fn support(a: &[u32]) -> VarSet {
        a.iter()
            .enumerate()
            .filter(|(_, e)| **e > 0)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn degree(a: &[u32]) -> u64 {
        a.iter().map(|e| *e as u64).sum()
    }

    pub fn is_squarefree(a: &[u32]) -> bool {
        a.iter().all(|e| *e <= 1)
    }

    pub fn squarefree(n: usize, set: VarSet) -> Exps {
        (0..n).map(|i| set.contains(i) as u32).collect()
    }

    pub fn write(f: &mut fmt::Formatter<'_>, ring: &Ring, a: &[u32]) -> fmt::Result {
        let mut first = true;
        for (i, e) in a.iter().enumerate() {
            if *e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            f.write_str(ring.name(i))?;
            if *e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// A monomial `x_1^{a_1} .. x_n^{a_n}` of a fixed ring.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    ring: Ring,
    exps: exps::Exps,
}

impl Monomial {
    pub fn new(ring: &Ring, exponents: Vec<u32>) -> Result<Monomial> {
        if exponents.len() != ring.nvars() {
            return Err(Error::Arity {
                expected: ring.nvars(),
                got: exponents.len(),
            });
        }
        for e in &exponents {
            exps::checked(*e as u64)?;
        }
        Ok(Monomial {
            ring: ring.clone(),
            exps: exponents.into_boxed_slice(),
        })
    }

    pub(crate) fn from_raw(ring: &Ring, exps: exps::Exps) -> Monomial {
        debug_assert_eq!(exps.len(), ring.nvars());
        Monomial {
            ring: ring.clone(),
            exps,
        }
    }

    pub fn one(ring: &Ring) -> Monomial {
        Monomial::from_raw(ring, vec![0; ring.nvars()].into_boxed_slice())
    }

    pub fn var(ring: &Ring, i: usize) -> Result<Monomial> {
        if i >= ring.nvars() {
            return Err(Error::VertexOutOfRange(i));
        }
        let mut e = vec![0; ring.nvars()];
        e[i] = 1;
        Ok(Monomial::from_raw(ring, e.into_boxed_slice()))
    }

    /// `x_F`, the product of the variables in `set`.
    pub fn squarefree(ring: &Ring, set: VarSet) -> Result<Monomial> {
        if let Some(m) = set.max() {
            if m >= ring.nvars() {
                return Err(Error::VertexOutOfRange(m));
            }
        }
        Ok(Monomial::from_raw(
            ring,
            exps::squarefree(ring.nvars(), set),
        ))
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> u64 {
        exps::degree(&self.exps)
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|e| *e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        exps::is_squarefree(&self.exps)
    }

    pub fn support(&self) -> VarSet {
        exps::support(&self.exps)
    }

    /// `self | other`.
    pub fn divides(&self, other: &Monomial) -> Result<bool> {
        self.ring.ensure_same(&other.ring)?;
        Ok(exps::divides(&self.exps, &other.exps))
    }

    pub fn lcm(&self, other: &Monomial) -> Result<Monomial> {
        self.ring.ensure_same(&other.ring)?;
        Ok(Monomial::from_raw(
            &self.ring,
            exps::lcm(&self.exps, &other.exps),
        ))
    }

    pub fn gcd(&self, other: &Monomial) -> Result<Monomial> {
        self.ring.ensure_same(&other.ring)?;
        Ok(Monomial::from_raw(
            &self.ring,
            exps::gcd(&self.exps, &other.exps),
        ))
    }

    /// `self / divisor`, which must be exact.
    pub fn quotient_exact(&self, divisor: &Monomial) -> Result<Monomial> {
        if !divisor.divides(self)? {
            return Err(Error::NotDivisible {
                dividend: self.to_string(),
                divisor: divisor.to_string(),
            });
        }
        Ok(Monomial::from_raw(
            &self.ring,
            exps::strip(&self.exps, &divisor.exps),
        ))
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        self.ring.ensure_same(&other.ring)?;
        Ok(Monomial::from_raw(
            &self.ring,
            exps::mul(&self.exps, &other.exps)?,
        ))
    }

    pub fn pow(&self, q: u32) -> Result<Monomial> {
        Ok(Monomial::from_raw(&self.ring, exps::pow(&self.exps, q)?))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        exps::write(f, &self.ring, &self.exps)
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
