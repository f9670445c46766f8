#![allow(dead_code)]

use rand::Rng as _;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use sr_locus::{MonomialIdeal, Ring, SimplicialComplex, VarSet};

pub fn set(v: &[usize]) -> VarSet {
    v.iter().map(|i| i - 1).collect()
}

pub fn complex(n: usize, facets: &[&[usize]]) -> SimplicialComplex {
    SimplicialComplex::new(n, facets.iter().map(|f| set(f))).unwrap()
}

pub fn squarefree(ring: &Ring, sets: &[&[usize]]) -> MonomialIdeal {
    MonomialIdeal::from_sets(ring, sets.iter().map(|s| set(s))).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Every antichain of subsets of `[n]` other than the empty one, i.e. every
/// non-void complex on `n` vertices, given by its facets.
pub fn all_facet_sets(n: usize) -> Vec<Vec<VarSet>> {
    let mut subsets: Vec<VarSet> = VarSet::full(n).subsets().collect();
    subsets.sort();
    subsets.reverse();
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(i: usize, subsets: &[VarSet], current: &mut Vec<VarSet>, out: &mut Vec<Vec<VarSet>>) {
        if i == subsets.len() {
            if !current.is_empty() {
                out.push(current.clone());
            }
            return;
        }
        rec(i + 1, subsets, current, out);
        let s = subsets[i];
        if current.iter().all(|c| !s.is_subset(*c) && !c.is_subset(s)) {
            current.push(s);
            rec(i + 1, subsets, current, out);
            current.pop();
        }
    }
    rec(0, &subsets, &mut current, &mut out);
    out
}

pub fn random_complex(rng: &mut ChaCha8Rng, n: usize) -> SimplicialComplex {
    let count = rng.gen_range(1..=6);
    let facets: Vec<VarSet> = (0..count)
        .map(|_| {
            let size = rng.gen_range(1..=n.min(5));
            let mut s = VarSet::EMPTY;
            while s.len() < size {
                s.insert(rng.gen_range(0..n));
            }
            s
        })
        .collect();
    SimplicialComplex::new(n, facets).unwrap()
}

/// A random proper squarefree ideal with generators of degree
/// `min_deg..=max_deg` (capped at the variable count).
pub fn random_squarefree(
    rng: &mut ChaCha8Rng,
    ring: &Ring,
    max_gens: usize,
    min_deg: usize,
    max_deg: usize,
) -> MonomialIdeal {
    let n = ring.nvars();
    loop {
        let count = rng.gen_range(1..=max_gens);
        let sets: Vec<VarSet> = (0..count)
            .map(|_| {
                let size = rng.gen_range(min_deg.min(n)..=max_deg.min(n));
                let mut s = VarSet::EMPTY;
                while s.len() < size {
                    s.insert(rng.gen_range(0..n));
                }
                s
            })
            .collect();
        let ideal = MonomialIdeal::from_sets(ring, sets).unwrap();
        if !ideal.is_unit() {
            return ideal;
        }
    }
}

/// Exhaustive complexes for `n <= 5` plus `random` complexes on 6 or 7
/// vertices.
pub fn corpus(random: usize, seed: u64) -> Vec<(Ring, SimplicialComplex)> {
    let mut out = Vec::new();
    for n in 1..=5 {
        let ring = Ring::indexed(n).unwrap();
        for facets in all_facet_sets(n) {
            out.push((ring.clone(), SimplicialComplex::new(n, facets).unwrap()));
        }
    }
    let mut rng = rng(seed);
    let rings = [Ring::indexed(6).unwrap(), Ring::indexed(7).unwrap()];
    for k in 0..random {
        let ring = &rings[k % 2];
        out.push((ring.clone(), random_complex(&mut rng, ring.nvars())));
    }
    out
}
