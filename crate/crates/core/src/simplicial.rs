//! Simplicial complexes and the Stanley–Reisner correspondence.
//!
//! A complex lives on a ground set of vertices inside `{0, .., n-1}`. The
//! ground set is all of `[n]` for complexes built from facets or ideals; a
//! link of `F` drops the vertices of `F`, so that its Stanley–Reisner ideal
//! is the colon `(I : x_F)` in the same ring.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::ring::Ring;
use crate::varset::{Face, VarSet};
use crate::MAX_VARS;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    n: usize,
    ground: VarSet,
    facets: Vec<Face>,
}

/// Keeps the inclusion-maximal sets, canonically ordered.
fn maximal_sets(mut sets: Vec<VarSet>) -> Vec<VarSet> {
    sets.sort_unstable_by(|a, b| b.cmp(a));
    sets.dedup();
    let mut kept: Vec<VarSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| s.is_subset(*k)) {
            kept.push(s);
        }
    }
    kept.sort_unstable();
    kept
}

fn minimal_sets(mut sets: Vec<VarSet>) -> Vec<VarSet> {
    sets.sort_unstable();
    sets.dedup();
    let mut kept: Vec<VarSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| k.is_subset(s)) {
            kept.push(s);
        }
    }
    kept
}

/// Minimal transversals of a hypergraph (Berge's incremental algorithm).
///
/// Returns `[∅]` for no edges and nothing when some edge is empty.
pub fn minimal_transversals(edges: &[VarSet]) -> Vec<VarSet> {
    let mut edges = minimal_sets(edges.to_vec());
    // small edges first keeps the intermediate families small
    edges.sort_by_key(|e| e.len());
    let mut trans = vec![VarSet::EMPTY];
    for edge in edges {
        let mut next = Vec::with_capacity(trans.len());
        for t in &trans {
            if !t.is_disjoint(edge) {
                next.push(*t);
            } else {
                next.extend(edge.iter().map(|v| t.with(v)));
            }
        }
        trans = minimal_sets(next);
        if trans.is_empty() {
            break;
        }
    }
    trans
}

impl SimplicialComplex {
    /// Complex on `[n]` with the given facets (non-maximal ones are dropped).
    pub fn new(n: usize, facets: impl IntoIterator<Item = Face>) -> Result<Self> {
        if n == 0 || n > MAX_VARS {
            return Err(Error::InvalidRing(format!("vertex count {n} out of range")));
        }
        Self::with_ground(n, VarSet::full(n), facets)
    }

    pub fn with_ground(
        n: usize,
        ground: VarSet,
        facets: impl IntoIterator<Item = Face>,
    ) -> Result<Self> {
        if let Some(m) = ground.max() {
            if m >= n {
                return Err(Error::VertexOutOfRange(m));
            }
        }
        let facets: Vec<Face> = facets.into_iter().collect();
        for f in &facets {
            if !f.is_subset(ground) {
                return Err(Error::VertexOutOfRange(f.difference(ground).max().unwrap()));
            }
        }
        Ok(SimplicialComplex {
            n,
            ground,
            facets: maximal_sets(facets),
        })
    }

    /// The void complex: no faces at all.
    pub fn void(n: usize) -> Result<Self> {
        Self::new(n, [])
    }

    /// The irrelevant complex `{∅}`.
    pub fn irrelevant(n: usize) -> Result<Self> {
        Self::new(n, [VarSet::EMPTY])
    }

    pub fn simplex(n: usize) -> Result<Self> {
        Self::new(n, [VarSet::full(n)])
    }

    pub fn nvertices(&self) -> usize {
        self.n
    }

    pub fn ground(&self) -> VarSet {
        self.ground
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn is_face(&self, g: Face) -> bool {
        self.facets.iter().any(|f| g.is_subset(*f))
    }

    /// Complex whose faces are the sets `G` with `x_G ∉ I`, on all of `[n]`.
    pub fn from_ideal(ideal: &MonomialIdeal) -> Result<Self> {
        if ideal.is_unit() {
            return Err(Error::UnitIdeal);
        }
        if !ideal.is_squarefree() {
            return Err(Error::NotSquarefree(ideal.to_string()));
        }
        let n = ideal.ring().nvars();
        let full = VarSet::full(n);
        // minimal primes p_G of I are the minimal vertex covers; facets are their complements
        let covers = minimal_transversals(&ideal.generator_sets());
        Self::new(n, covers.into_iter().map(|c| full.difference(c)))
    }

    /// Minimal non-faces inside the ground set, as a hypergraph.
    pub fn minimal_nonfaces(&self) -> Vec<VarSet> {
        let complements: Vec<VarSet> = self
            .facets
            .iter()
            .map(|f| self.ground.difference(*f))
            .collect();
        if self.facets.is_empty() {
            return vec![VarSet::EMPTY];
        }
        minimal_transversals(&complements)
    }

    /// Stanley–Reisner ideal. The void complex gives the unit ideal.
    pub fn to_ideal(&self, ring: &Ring) -> Result<MonomialIdeal> {
        if ring.nvars() != self.n {
            return Err(Error::VertexCountMismatch {
                complex: self.n,
                ring: ring.nvars(),
            });
        }
        MonomialIdeal::from_sets(ring, self.minimal_nonfaces())
    }

    /// All faces, each once, in canonical order (empty face first).
    pub fn faces(&self) -> Vec<Face> {
        let mut seen: HashSet<Face> = HashSet::new();
        let mut stack: Vec<Face> = self.facets.clone();
        while let Some(f) = stack.pop() {
            if seen.insert(f) {
                for v in f {
                    let g = f.without(v);
                    if !seen.contains(&g) {
                        stack.push(g);
                    }
                }
            }
        }
        let mut faces: Vec<Face> = seen.into_iter().collect();
        faces.sort_unstable();
        faces
    }

    /// `link(F) = {G : G ∩ F = ∅, G ∪ F ∈ Δ}`, on the ground set minus `F`.
    pub fn link(&self, face: Face) -> Result<Self> {
        if !self.is_face(face) {
            return Err(Error::NotAFace(face));
        }
        let facets = self
            .facets
            .iter()
            .filter(|f| face.is_subset(**f))
            .map(|f| f.difference(face))
            .collect::<Vec<_>>();
        Self::with_ground(self.n, self.ground.difference(face), facets)
    }

    /// Vertices lying in every facet.
    pub fn cone_points(&self) -> VarSet {
        match self.facets.split_first() {
            None => VarSet::EMPTY,
            Some((first, rest)) => rest.iter().fold(*first, |acc, f| acc.intersection(*f)),
        }
    }

    /// The complex with all cone points deleted. Coning does not change the
    /// Stanley–Reisner ideal, so this is the part the Frobenius algebra sees.
    pub fn remove_cone_points(&self) -> Self {
        let apex = self.cone_points();
        SimplicialComplex {
            n: self.n,
            ground: self.ground.difference(apex),
            facets: maximal_sets(self.facets.iter().map(|f| f.difference(apex)).collect()),
        }
    }

    fn facets_containing(&self, g: Face) -> usize {
        self.facets.iter().filter(|f| g.is_subset(**f)).count()
    }

    /// Nonempty faces that are a proper face of exactly one facet and lie in
    /// no other facet, in canonical order.
    pub fn free_faces(&self) -> Vec<Face> {
        self.faces()
            .into_iter()
            .filter(|g| {
                !g.is_empty() && self.facets_containing(*g) == 1 && !self.facets.contains(g)
            })
            .collect()
    }

    /// Some facet `σ` with a codimension-one face `σ \ {v}` (nonempty) that
    /// lies in no other facet, returned as that face.
    pub fn find_free_face(&self) -> Option<Face> {
        for (i, sigma) in self.facets.iter().enumerate() {
            if sigma.len() < 2 {
                continue;
            }
            for v in *sigma {
                let g = sigma.without(v);
                let elsewhere = self
                    .facets
                    .iter()
                    .enumerate()
                    .any(|(j, tau)| j != i && g.is_subset(*tau));
                if !elsewhere {
                    return Some(g);
                }
            }
        }
        None
    }

    pub fn has_free_face(&self) -> bool {
        self.find_free_face().is_some()
    }
}

/// `p_F = (x_i : i ∉ F)`.
pub fn face_prime(face: Face, ring: &Ring) -> Result<MonomialIdeal> {
    let full = VarSet::full(ring.nvars());
    if !face.is_subset(full) {
        return Err(Error::VertexOutOfRange(face.max().unwrap()));
    }
    MonomialIdeal::variables(ring, full.difference(face))
}

/// `x_F = ∏_{i ∈ F} x_i`.
pub fn face_monomial(face: Face, ring: &Ring) -> Result<Monomial> {
    Monomial::squarefree(ring, face)
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.facets.is_empty() {
            return f.write_str("<void>");
        }
        for (k, facet) in self.facets.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{facet}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Δ[n={}, ground={}]({})", self.n, self.ground, self)
    }
}
