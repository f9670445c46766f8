//! Monomial ideals kept in canonical form.
//!
//! Every [`MonomialIdeal`] stores its unique minimal generating set, sorted
//! in decreasing lexicographic order of exponent vectors, so structural
//! equality is ideal equality.

use std::fmt;

use crate::error::{Error, Result};
use crate::monomial::exps::{self, Exps};
use crate::monomial::Monomial;
use crate::ring::Ring;
use crate::varset::VarSet;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    ring: Ring,
    gens: Vec<Exps>,
}

/// Result of [`MonomialIdeal::monomial_localization`]: the ideal with the
/// inverted variables set to one, together with that variable set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalizedIdeal {
    pub ideal: MonomialIdeal,
    pub inverted: VarSet,
}

/// Removes every generator divisible by another one and sorts the rest
/// canonically.
pub(crate) fn minimalize(mut raw: Vec<Exps>) -> Vec<Exps> {
    raw.sort_unstable_by(|a, b| exps::degree(a).cmp(&exps::degree(b)).then_with(|| a.cmp(b)));
    raw.dedup();
    let mut kept: Vec<(VarSet, Exps)> = Vec::with_capacity(raw.len());
    for cand in raw {
        let supp = exps::support(&cand);
        let redundant = kept
            .iter()
            .any(|(s, g)| s.is_subset(supp) && exps::divides(g, &cand));
        if !redundant {
            kept.push((supp, cand));
        }
    }
    let mut gens: Vec<Exps> = kept.into_iter().map(|(_, g)| g).collect();
    gens.sort_unstable_by(|a, b| b.cmp(a));
    gens
}

impl MonomialIdeal {
    pub fn new(ring: &Ring, gens: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        let mut raw = Vec::new();
        for g in gens {
            ring.ensure_same(g.ring())?;
            raw.push(g.exponents().into());
        }
        Ok(Self::from_raw(ring, raw))
    }

    pub fn from_exponents(ring: &Ring, gens: impl IntoIterator<Item = Vec<u32>>) -> Result<Self> {
        let gens = gens
            .into_iter()
            .map(|e| Monomial::new(ring, e))
            .collect::<Result<Vec<_>>>()?;
        Self::new(ring, gens)
    }

    pub(crate) fn from_raw(ring: &Ring, raw: Vec<Exps>) -> Self {
        MonomialIdeal {
            ring: ring.clone(),
            gens: minimalize(raw),
        }
    }

    /// Squarefree ideal with one generator `x_G` per set `G`.
    pub fn from_sets(ring: &Ring, sets: impl IntoIterator<Item = VarSet>) -> Result<Self> {
        let gens = sets
            .into_iter()
            .map(|s| Monomial::squarefree(ring, s))
            .collect::<Result<Vec<_>>>()?;
        Self::new(ring, gens)
    }

    pub fn zero(ring: &Ring) -> Self {
        MonomialIdeal {
            ring: ring.clone(),
            gens: Vec::new(),
        }
    }

    pub fn unit(ring: &Ring) -> Self {
        Self::from_raw(ring, vec![exps::squarefree(ring.nvars(), VarSet::EMPTY)])
    }

    /// `(x_i : i in vars)`.
    pub fn variables(ring: &Ring, vars: VarSet) -> Result<Self> {
        Self::from_sets(ring, vars.iter().map(VarSet::singleton))
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn num_gens(&self) -> usize {
        self.gens.len()
    }

    pub fn generators(&self) -> impl ExactSizeIterator<Item = Monomial> + '_ {
        self.gens
            .iter()
            .map(|g| Monomial::from_raw(&self.ring, g.clone()))
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].iter().all(|e| *e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(|g| exps::is_squarefree(g))
    }

    /// Generators as vertex sets. Only meaningful for squarefree ideals.
    pub fn generator_sets(&self) -> Vec<VarSet> {
        self.gens.iter().map(|g| exps::support(g)).collect()
    }

    /// Variables dividing at least one minimal generator.
    pub fn support(&self) -> VarSet {
        self.gens
            .iter()
            .fold(VarSet::EMPTY, |acc, g| acc.union(exps::support(g)))
    }

    pub fn max_exponent(&self) -> u32 {
        self.gens
            .iter()
            .flat_map(|g| g.iter().copied())
            .max()
            .unwrap_or(0)
    }

    pub(crate) fn contains_raw(&self, m: &[u32]) -> bool {
        self.gens.iter().any(|g| exps::divides(g, m))
    }

    pub fn contains(&self, m: &Monomial) -> Result<bool> {
        self.ring.ensure_same(m.ring())?;
        Ok(self.contains_raw(m.exponents()))
    }

    /// `self ⊆ other`.
    pub fn is_subset(&self, other: &MonomialIdeal) -> Result<bool> {
        self.ring.ensure_same(&other.ring)?;
        Ok(self.gens.iter().all(|g| other.contains_raw(g)))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.ring.ensure_same(&other.ring)?;
        let raw = self.gens.iter().chain(&other.gens).cloned().collect();
        Ok(Self::from_raw(&self.ring, raw))
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.ring.ensure_same(&other.ring)?;
        let mut raw = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                raw.push(exps::mul(a, b)?);
            }
        }
        Ok(Self::from_raw(&self.ring, raw))
    }

    pub fn intersection(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.ring.ensure_same(&other.ring)?;
        let mut raw = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                raw.push(exps::lcm(a, b));
            }
        }
        Ok(Self::from_raw(&self.ring, raw))
    }

    /// Generators of `self` not lying in `other`. The result may differ from
    /// `self` as an ideal; callers use it when `other` is added back later.
    pub(crate) fn retain_outside(&self, other: &MonomialIdeal) -> MonomialIdeal {
        MonomialIdeal {
            ring: self.ring.clone(),
            gens: self
                .gens
                .iter()
                .filter(|g| !other.contains_raw(g))
                .cloned()
                .collect(),
        }
    }

    pub(crate) fn colon_raw(&self, f: &[u32]) -> MonomialIdeal {
        let raw = self.gens.iter().map(|g| exps::strip(g, f)).collect();
        Self::from_raw(&self.ring, raw)
    }

    /// `(self : f)`, generated by `m / gcd(m, f)` over the generators `m`.
    pub fn colon_monomial(&self, f: &Monomial) -> Result<MonomialIdeal> {
        self.ring.ensure_same(f.ring())?;
        Ok(self.colon_raw(f.exponents()))
    }

    /// `(self : other)`, the intersection of the colons by each generator.
    pub fn colon_ideal(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.ring.ensure_same(&other.ring)?;
        let mut gens = other.gens.iter();
        let first = gens.next().ok_or(Error::ColonByZero)?;
        let mut acc = self.colon_raw(first);
        for g in gens {
            acc = acc.intersection(&self.colon_raw(g))?;
        }
        Ok(acc)
    }

    /// `I^[q]`, generated by the `q`-th powers of the minimal generators.
    pub fn bracket_power(&self, q: u32) -> Result<MonomialIdeal> {
        if q == 0 {
            return Err(Error::ZeroPower);
        }
        let raw = self
            .gens
            .iter()
            .map(|g| exps::pow(g, q))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_raw(&self.ring, raw))
    }

    /// Ideal of the pairwise lcms of distinct minimal generators; zero when
    /// there are fewer than two generators.
    pub fn lcm_pairs_ideal(&self) -> MonomialIdeal {
        let mut raw = Vec::new();
        for (i, a) in self.gens.iter().enumerate() {
            for b in &self.gens[i + 1..] {
                raw.push(exps::lcm(a, b));
            }
        }
        Self::from_raw(&self.ring, raw)
    }

    /// Principal ideal generated by the lcm of all minimal generators; zero
    /// for the zero ideal.
    pub fn lcm_all_ideal(&self) -> MonomialIdeal {
        let mut it = self.gens.iter();
        let Some(first) = it.next() else {
            return Self::zero(&self.ring);
        };
        let lcm = it.fold(first.clone(), |acc, g| exps::lcm(&acc, g));
        Self::from_raw(&self.ring, vec![lcm])
    }

    /// Sets `x_j = 1` for every `j` in `face`.
    pub fn monomial_localization(&self, face: VarSet) -> Result<LocalizedIdeal> {
        if let Some(m) = face.max() {
            if m >= self.ring.nvars() {
                return Err(Error::VertexOutOfRange(m));
            }
        }
        let raw = self
            .gens
            .iter()
            .map(|g| {
                g.iter()
                    .enumerate()
                    .map(|(i, e)| if face.contains(i) { 0 } else { *e })
                    .collect()
            })
            .collect();
        Ok(LocalizedIdeal {
            ideal: Self::from_raw(&self.ring, raw),
            inverted: face,
        })
    }

    /// Minimal generators have pairwise disjoint supports. The unit ideal is
    /// not considered a complete intersection.
    pub fn is_complete_intersection(&self) -> bool {
        if self.is_unit() {
            return false;
        }
        let mut seen = VarSet::EMPTY;
        for g in &self.gens {
            let s = exps::support(g);
            if !s.is_disjoint(seen) {
                return false;
            }
            seen = seen.union(s);
        }
        true
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return f.write_str("(0)");
        }
        f.write_str("(")?;
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            exps::write(f, &self.ring, g)?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(n: usize) -> Ring {
        Ring::indexed(n).unwrap()
    }

    fn ideal(r: &Ring, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(r, gens.iter().map(|g| g.to_vec())).unwrap()
    }

    fn sq(r: &Ring, sets: &[&[usize]]) -> MonomialIdeal {
        MonomialIdeal::from_sets(r, sets.iter().map(|s| s.iter().map(|i| i - 1).collect())).unwrap()
    }

    #[test]
    fn minimalization() {
        let r = ring(3);
        assert_eq!(
            ideal(&r, &[&[1, 0, 0], &[1, 1, 0]]),
            ideal(&r, &[&[1, 0, 0]])
        );
        assert!(ideal(&r, &[]).is_zero());
        assert_eq!(
            sq(&r, &[&[1, 2], &[2, 3], &[1, 2, 3]]),
            sq(&r, &[&[1, 2], &[2, 3]])
        );
        assert_eq!(sq(&r, &[&[1, 2], &[2, 3], &[1, 2, 3]]).num_gens(), 2);
    }

    #[test]
    fn membership() {
        let r = ring(5);
        assert!(sq(&r, &[&[1, 2]])
            .contains(&Monomial::squarefree(&r, [0, 1, 2].into_iter().collect()).unwrap())
            .unwrap());
        assert!(!MonomialIdeal::zero(&r)
            .contains(&Monomial::one(&r))
            .unwrap());
        let i = sq(&r, &[&[2, 3], &[3, 4], &[4, 5]]);
        let x2x4 = Monomial::squarefree(&r, [1, 3].into_iter().collect()).unwrap();
        assert!(!i.contains(&x2x4).unwrap());
    }

    #[test]
    fn equality() {
        let r = ring(2);
        assert_eq!(ideal(&r, &[&[1, 0], &[1, 1]]), ideal(&r, &[&[1, 0]]));
        assert_ne!(ideal(&r, &[&[1, 0]]), ideal(&r, &[&[0, 1]]));
    }

    #[test]
    fn sum_product_intersection() {
        let r = ring(4);
        let a = sq(&r, &[&[1], &[3], &[4]]);
        let b = sq(&r, &[&[2], &[3], &[4]]);
        assert_eq!(a.intersection(&b).unwrap(), sq(&r, &[&[1, 2], &[3], &[4]]));
        assert_eq!(a.sum(&MonomialIdeal::zero(&r)).unwrap(), a);
        assert_eq!(
            sq(&r, &[&[1]]).product(&sq(&r, &[&[2]])).unwrap(),
            sq(&r, &[&[1, 2]])
        );
    }

    #[test]
    fn colon_by_monomial() {
        // x y z w a b
        let r = Ring::new(["x", "y", "z", "w", "a", "b"]).unwrap();
        let i = sq(
            &r,
            &[
                &[1, 4],
                &[2, 4],
                &[1, 5],
                &[2, 5],
                &[3, 6],
                &[4, 6],
                &[5, 6],
            ],
        );
        let z = Monomial::var(&r, 2).unwrap();
        let expected = sq(&r, &[&[1, 4], &[2, 4], &[1, 5], &[2, 5], &[6]]);
        assert_eq!(i.colon_monomial(&z).unwrap(), expected);
        assert_eq!(i.colon_monomial(&Monomial::one(&r)).unwrap(), i);

        let r2 = ring(2);
        let x1 = Monomial::var(&r2, 0).unwrap();
        assert_eq!(
            sq(&r2, &[&[1, 2]]).colon_monomial(&x1).unwrap(),
            sq(&r2, &[&[2]])
        );
    }

    #[test]
    fn colon_by_ideal() {
        let r = ring(3);
        let num = ideal(&r, &[&[2, 2, 0], &[0, 2, 2]]);
        let den = sq(&r, &[&[1, 2], &[2, 3]]);
        let expected = ideal(&r, &[&[2, 1, 0], &[1, 1, 1], &[0, 1, 2]]);
        assert_eq!(num.colon_ideal(&den).unwrap(), expected);
        assert_eq!(num.colon_ideal(&MonomialIdeal::unit(&r)).unwrap(), num);
        assert!(num.colon_ideal(&num).unwrap().is_unit());
        assert_eq!(
            num.colon_ideal(&MonomialIdeal::zero(&r)),
            Err(Error::ColonByZero)
        );
    }

    #[test]
    fn bracket_powers() {
        let r = ring(3);
        let i = sq(&r, &[&[1, 2], &[2, 3]]);
        assert_eq!(
            i.bracket_power(2).unwrap(),
            ideal(&r, &[&[2, 2, 0], &[0, 2, 2]])
        );
        assert_eq!(i.bracket_power(1).unwrap(), i);
        assert_eq!(
            sq(&r, &[&[1]]).bracket_power(8).unwrap(),
            ideal(&r, &[&[8, 0, 0]])
        );
        assert_eq!(i.bracket_power(0), Err(Error::ZeroPower));
        assert!(matches!(
            i.bracket_power(crate::EXPONENT_CEILING + 1),
            Err(Error::ExponentOverflow(_))
        ));
    }

    #[test]
    fn lcm_ideals() {
        let r = ring(5);
        assert_eq!(
            sq(&r, &[&[1, 2], &[2, 3]]).lcm_pairs_ideal(),
            sq(&r, &[&[1, 2, 3]])
        );
        assert!(sq(&r, &[&[1]]).lcm_pairs_ideal().is_zero());
        assert_eq!(
            sq(&r, &[&[2, 3], &[3, 4], &[4, 5]]).lcm_pairs_ideal(),
            sq(&r, &[&[2, 3, 4], &[3, 4, 5]])
        );
        assert_eq!(
            sq(&r, &[&[2, 3], &[3, 4], &[4, 5]]).lcm_all_ideal(),
            sq(&r, &[&[2, 3, 4, 5]])
        );
        assert!(MonomialIdeal::zero(&r).lcm_all_ideal().is_zero());
    }

    #[test]
    fn localization() {
        let r = ring(4);
        let i = sq(&r, &[&[1, 2], &[2, 3]]);
        let loc = i.monomial_localization(VarSet::singleton(1)).unwrap();
        assert_eq!(loc.ideal, sq(&r, &[&[1], &[3]]));
        assert_eq!(loc.inverted, VarSet::singleton(1));
        assert_eq!(i.monomial_localization(VarSet::EMPTY).unwrap().ideal, i);
        let j = sq(&r, &[&[1, 2, 3], &[3, 4]]);
        assert_eq!(
            j.monomial_localization(VarSet::singleton(2)).unwrap().ideal,
            sq(&r, &[&[1, 2], &[4]])
        );
    }

    #[test]
    fn complete_intersections_and_support() {
        let r = ring(5);
        assert!(sq(&r, &[&[1, 2], &[3, 4]]).is_complete_intersection());
        assert!(!sq(&r, &[&[1, 2], &[2, 3]]).is_complete_intersection());
        assert!(sq(&r, &[&[1]]).is_complete_intersection());
        assert!(MonomialIdeal::zero(&r).is_complete_intersection());
        assert!(!MonomialIdeal::unit(&r).is_complete_intersection());

        assert_eq!(
            sq(&r, &[&[1, 2], &[2, 3]]).support(),
            [0, 1, 2].into_iter().collect()
        );
        assert!(MonomialIdeal::zero(&r).support().is_empty());
        assert_eq!(
            sq(&r, &[&[2, 3], &[3, 4], &[4, 5]]).support(),
            [1, 2, 3, 4].into_iter().collect()
        );
    }

    #[test]
    fn display() {
        let r = Ring::new(["x", "y", "z", "w", "a", "b"]).unwrap();
        let i = sq(
            &r,
            &[
                &[1, 4],
                &[2, 4],
                &[1, 5],
                &[2, 5],
                &[3, 6],
                &[4, 6],
                &[5, 6],
            ],
        );
        assert_eq!(i.to_string(), "(x*w, x*a, y*w, y*a, z*b, w*b, a*b)");
        assert_eq!(MonomialIdeal::zero(&r).to_string(), "(0)");
        assert_eq!(MonomialIdeal::unit(&r).to_string(), "(1)");
    }
}
