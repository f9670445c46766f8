//! Finite generation of the Frobenius algebra of a squarefree monomial
//! quotient.
//!
//! [`fg_criterion`] is the one-step test used by the locus algorithms.
//! The `oracle` functions compare, degree by degree, the colon ideal
//! `K_e = (I^[p^e] : I)` with the part `L_e` generated by lower degrees,
//! which decides whether degree `e` needs new algebra generators. They are a
//! bounded brute-force check, not a proof of finite generation.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

fn check_input(k: &MonomialIdeal) -> Result<()> {
    if k.is_unit() {
        return Err(Error::UnitIdeal);
    }
    if !k.is_squarefree() {
        return Err(Error::NotSquarefree(k.to_string()));
    }
    Ok(())
}

/// A generator of `(K^[2] : K)` outside `K^[2] + (lcm K)`, if any.
///
/// `lcm K` is the lcm of all minimal generators, i.e. `x_supp(K)`; it always
/// lies in the colon, and together with `K^[2]` it generates the degree-one
/// part of a principally generated algebra.
pub fn criterion_witness(k: &MonomialIdeal) -> Result<Option<Monomial>> {
    check_input(k)?;
    if k.is_zero() {
        return Ok(None);
    }
    let square = k.bracket_power(2)?;
    let colon = square.colon_ideal(k)?;
    let expected = square.sum(&k.lcm_all_ideal())?;
    for g in colon.generators() {
        if !expected.contains(&g)? {
            return Ok(Some(g));
        }
    }
    Ok(None)
}

/// True when the Frobenius algebra of `R/K` is finitely (in fact
/// principally) generated, i.e. `(K^[2] : K) = K^[2] + (lcm K)`.
pub fn fg_criterion(k: &MonomialIdeal) -> Result<bool> {
    Ok(criterion_witness(k)?.is_none())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleParams {
    pub p: u32,
    pub e_max: u32,
    pub k: u32,
}

impl OracleParams {
    pub fn new(p: u32, e_max: u32, k: u32) -> Result<Self> {
        if ![2, 3, 5].contains(&p) {
            return Err(Error::OracleParams(format!(
                "characteristic must be 2, 3 or 5, got {p}"
            )));
        }
        if !(2..=4).contains(&e_max) {
            return Err(Error::OracleParams(format!(
                "e_max must lie in 2..=4, got {e_max}"
            )));
        }
        if k == 0 {
            return Err(Error::OracleParams("k must be at least 1".into()));
        }
        Ok(OracleParams { p, e_max, k })
    }
}

impl Default for OracleParams {
    fn default() -> Self {
        OracleParams {
            p: 2,
            e_max: 3,
            k: 1,
        }
    }
}

/// Outcome of the oracle in one Frobenius degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeCheck {
    pub e: u32,
    pub vanishes: bool,
    /// `L_e ⊆ K_e`; always expected to hold.
    pub contained: bool,
    pub k_gens: usize,
    pub l_gens: usize,
}

/// Per-call cache of `K_a` and their bracket powers.
struct Oracle<'a> {
    ideal: &'a MonomialIdeal,
    p: u32,
    colons: HashMap<u32, MonomialIdeal>,
    powers: HashMap<(u32, u32), MonomialIdeal>,
}

impl<'a> Oracle<'a> {
    fn new(ideal: &'a MonomialIdeal, p: u32) -> Result<Self> {
        if ideal.is_zero() {
            return Err(Error::ColonByZero);
        }
        Ok(Oracle {
            ideal,
            p,
            colons: HashMap::new(),
            powers: HashMap::new(),
        })
    }

    fn q(&self, e: u32) -> Result<u32> {
        self.p
            .checked_pow(e)
            .filter(|q| *q <= crate::EXPONENT_CEILING)
            .ok_or(Error::ExponentOverflow((self.p as u64).saturating_pow(e)))
    }

    fn colon(&mut self, a: u32) -> Result<MonomialIdeal> {
        if let Some(k) = self.colons.get(&a) {
            return Ok(k.clone());
        }
        let q = self.q(a)?;
        let k = self.ideal.bracket_power(q)?.colon_ideal(self.ideal)?;
        self.colons.insert(a, k.clone());
        Ok(k)
    }

    /// `K_a^[p^shift]`.
    fn shifted(&mut self, a: u32, shift: u32) -> Result<MonomialIdeal> {
        if let Some(k) = self.powers.get(&(a, shift)) {
            return Ok(k.clone());
        }
        let q = self.q(shift)?;
        let k = self.colon(a)?.bracket_power(q)?;
        self.powers.insert((a, shift), k.clone());
        Ok(k)
    }

    fn generated_part(&mut self, e: u32) -> Result<MonomialIdeal> {
        if e < 2 {
            return Err(Error::DegreeTooSmall(e));
        }
        let floor = self.ideal.bracket_power(self.q(e)?)?;
        let mut total = floor.clone();
        // partial products over compositions (a_1, .., a_j) with prefix sum `s`
        let mut stack: Vec<(u32, MonomialIdeal)> = Vec::new();
        for a in 1..e {
            stack.push((a, self.colon(a)?.retain_outside(&floor)));
        }
        while let Some((s, acc)) = stack.pop() {
            for a in 1..=(e - s).min(e - 1) {
                let term = acc.product(&self.shifted(a, s)?)?.retain_outside(&floor);
                if term.is_zero() {
                    continue;
                }
                if s + a == e {
                    total = total.sum(&term)?;
                } else {
                    stack.push((s + a, term));
                }
            }
        }
        Ok(total)
    }

    fn check(&mut self, e: u32) -> Result<DegreeCheck> {
        let k = self.colon(e)?;
        let l = self.generated_part(e)?;
        Ok(DegreeCheck {
            e,
            vanishes: k == l,
            contained: l.is_subset(&k)?,
            k_gens: k.num_gens(),
            l_gens: l.num_gens(),
        })
    }
}

/// `K_e = (I^[p^e] : I)`.
pub fn bracket_colon(ideal: &MonomialIdeal, p: u32, e: u32) -> Result<MonomialIdeal> {
    Oracle::new(ideal, p)?.colon(e)
}

/// The part of `K_e` generated by the algebra elements of degree below `e`:
/// `I^[p^e]` plus the sum, over compositions `(a_1, .., a_s)` of `e` with
/// every `a_i < e`, of `K_{a_1} K_{a_2}^[p^{a_1}] .. K_{a_s}^[p^{a_1+..+a_{s-1}}]`.
pub fn generation_ideal(ideal: &MonomialIdeal, p: u32, e: u32) -> Result<MonomialIdeal> {
    if e < 2 {
        return Err(Error::DegreeTooSmall(e));
    }
    Oracle::new(ideal, p)?.generated_part(e)
}

/// No new generators are needed in degree `e`: `K_e = L_e`.
pub fn ce_vanishes(ideal: &MonomialIdeal, p: u32, e: u32) -> Result<bool> {
    if e < 2 {
        return Err(Error::DegreeTooSmall(e));
    }
    Ok(Oracle::new(ideal, p)?.check(e)?.vanishes)
}

/// One [`DegreeCheck`] per `e` in `2..=params.e_max`.
pub fn oracle_table(ideal: &MonomialIdeal, params: &OracleParams) -> Result<Vec<DegreeCheck>> {
    let mut oracle = Oracle::new(ideal, params.p)?;
    (2..=params.e_max).map(|e| oracle.check(e)).collect()
}

/// Bounded check that the algebra is `k`-generated: `K_e = L_e` for every
/// `k < e <= e_max`. Vacuously true when `k >= e_max`.
pub fn is_k_generated_up_to(ideal: &MonomialIdeal, params: &OracleParams) -> Result<bool> {
    let first = (params.k + 1).max(2);
    if first > params.e_max {
        return Ok(true);
    }
    let mut oracle = Oracle::new(ideal, params.p)?;
    for e in first..=params.e_max {
        if !oracle.check(e)?.vanishes {
            return Ok(false);
        }
    }
    Ok(true)
}
