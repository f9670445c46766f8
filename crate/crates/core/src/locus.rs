//! The non-finitely generated locus `V(J)` of a Stanley–Reisner ring.
//!
//! A face `F` of `Δ` belongs to `IGL(Δ)` when the Frobenius algebra of the
//! localization at `p_F` is not finitely generated. Two routes decide it:
//!
//! * algebraic: run [`fg_criterion`] on `(I : x_F)`;
//! * combinatorial: look for a free face in `link(F)` after deleting its
//!   cone points.
//!
//! `J` is the intersection of the face primes `p_F` over `IGL(Δ)`.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::criterion::{criterion_witness, fg_criterion};
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::exps;
use crate::monomial::Monomial;
use crate::ring::Ring;
use crate::simplicial::{face_prime, SimplicialComplex};
use crate::varset::{Face, VarSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Algebraic,
    Combinatorial,
    Both,
    /// Shortcut for nearly complete intersections.
    Nci,
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Method::Algebraic => "algebraic",
            Method::Combinatorial => "combinatorial",
            Method::Both => "both",
            Method::Nci => "nci",
        })
    }
}

impl std::str::FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "algebraic" => Ok(Method::Algebraic),
            "combinatorial" => Ok(Method::Combinatorial),
            "both" => Ok(Method::Both),
            "nci" => Ok(Method::Nci),
            other => Err(Error::Parse(format!("unknown method {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LocusOptions {
    /// Skip faces having a subface outside the locus. Turning this off
    /// tests every face, which checks downward closure instead of assuming it.
    pub prune: bool,
}

impl Default for LocusOptions {
    fn default() -> Self {
        LocusOptions { prune: true }
    }
}

/// A face of the locus together with what proved it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IglFace {
    pub face: Face,
    /// Generator of `(K^[2] : K)` outside `K^[2] + (lcm K)`, `K = (I : x_F)`.
    pub monomial_witness: Option<Monomial>,
    /// Free face of the cone-free part of `link(F)`.
    pub free_face_witness: Option<Face>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocusResult {
    pub igl: Vec<IglFace>,
    /// Inclusion-maximal faces of `igl`; their primes cut out `J`.
    pub maximal: Vec<Face>,
    /// `J`; the unit ideal when the locus is empty.
    pub j_ideal: MonomialIdeal,
    pub method: Method,
}

impl LocusResult {
    fn assemble(ring: &Ring, igl: Vec<IglFace>, method: Method) -> Result<Self> {
        let faces: Vec<Face> = igl.iter().map(|f| f.face).collect();
        let maximal: Vec<Face> = faces
            .iter()
            .filter(|f| !faces.iter().any(|g| g != *f && f.is_subset(*g)))
            .copied()
            .collect();
        let mut j_ideal = MonomialIdeal::unit(ring);
        for f in &maximal {
            j_ideal = j_ideal.intersection(&face_prime(*f, ring)?)?;
        }
        Ok(LocusResult {
            igl,
            maximal,
            j_ideal,
            method,
        })
    }

    pub fn faces(&self) -> Vec<Face> {
        self.igl.iter().map(|f| f.face).collect()
    }

    pub fn is_empty(&self) -> bool {
        self.igl.is_empty()
    }

    /// Every face of `complex` below a locus face is itself in the locus.
    pub fn is_downward_closed(&self) -> bool {
        let faces: HashSet<Face> = self.igl.iter().map(|f| f.face).collect();
        faces
            .iter()
            .all(|f| f.iter().all(|v| faces.contains(&f.without(v))))
    }
}

fn check_ideal(ideal: &MonomialIdeal) -> Result<()> {
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    if !ideal.is_squarefree() {
        return Err(Error::NotSquarefree(ideal.to_string()));
    }
    Ok(())
}

/// Walks the faces in canonical order, calling `test` on every face that is
/// not excluded by pruning. `test` returns the witnesses when `F` is in the
/// locus.
fn sweep<T>(faces: &[Face], opts: LocusOptions, mut test: T) -> Result<Vec<IglFace>>
where
    T: FnMut(Face) -> Result<Option<IglFace>>,
{
    let mut members: HashSet<Face> = HashSet::new();
    let mut igl = Vec::new();
    for &face in faces {
        if opts.prune && face.iter().any(|v| !members.contains(&face.without(v))) {
            continue;
        }
        if let Some(entry) = test(face)? {
            members.insert(face);
            igl.push(entry);
        }
    }
    Ok(igl)
}

/// Tests `(I : x_F)` against the finite generation criterion for the empty
/// face and every face of `Δ(I)`.
pub fn igl_algebraic(ideal: &MonomialIdeal, opts: LocusOptions) -> Result<LocusResult> {
    check_ideal(ideal)?;
    let complex = SimplicialComplex::from_ideal(ideal)?;
    let n = ideal.ring().nvars();
    let igl = sweep(&complex.faces(), opts, |face| {
        let k = ideal.colon_raw(&exps::squarefree(n, face));
        Ok(criterion_witness(&k)?.map(|w| IglFace {
            face,
            monomial_witness: Some(w),
            free_face_witness: None,
        }))
    })?;
    LocusResult::assemble(ideal.ring(), igl, Method::Algebraic)
}

/// Looks for free faces in the links of `Δ`, cone points removed.
pub fn igl_combinatorial(
    complex: &SimplicialComplex,
    ring: &Ring,
    opts: LocusOptions,
) -> Result<LocusResult> {
    if complex.nvertices() != ring.nvars() {
        return Err(Error::VertexCountMismatch {
            complex: complex.nvertices(),
            ring: ring.nvars(),
        });
    }
    if complex.is_void() {
        return Err(Error::UnitIdeal);
    }
    let igl = sweep(&complex.faces(), opts, |face| {
        let free = complex.link(face)?.remove_cone_points().find_free_face();
        Ok(free.map(|g| IglFace {
            face,
            monomial_witness: None,
            free_face_witness: Some(g),
        }))
    })?;
    LocusResult::assemble(ring, igl, Method::Combinatorial)
}

fn merge(alg: LocusResult, comb: LocusResult) -> Result<LocusResult> {
    if alg.faces() != comb.faces() {
        return Err(Error::MethodDisagreement {
            algebraic: alg.faces(),
            combinatorial: comb.faces(),
        });
    }
    let igl = alg
        .igl
        .into_iter()
        .zip(comb.igl)
        .map(|(a, c)| IglFace {
            face: a.face,
            monomial_witness: a.monomial_witness,
            free_face_witness: c.free_face_witness,
        })
        .collect();
    Ok(LocusResult {
        igl,
        maximal: alg.maximal,
        j_ideal: alg.j_ideal,
        method: Method::Both,
    })
}

/// Computes the locus of `R/I` with the requested method. With
/// [`Method::Both`] the two routes must agree face for face.
pub fn locus(ideal: &MonomialIdeal, method: Method, opts: LocusOptions) -> Result<LocusResult> {
    check_ideal(ideal)?;
    match method {
        Method::Algebraic => igl_algebraic(ideal, opts),
        Method::Combinatorial => {
            igl_combinatorial(&SimplicialComplex::from_ideal(ideal)?, ideal.ring(), opts)
        }
        Method::Both => {
            let alg = igl_algebraic(ideal, opts)?;
            let comb =
                igl_combinatorial(&SimplicialComplex::from_ideal(ideal)?, ideal.ring(), opts)?;
            merge(alg, comb)
        }
        Method::Nci => nci_locus(ideal),
    }
}

/// Same as [`locus`], starting from a complex.
pub fn locus_of_complex(
    complex: &SimplicialComplex,
    ring: &Ring,
    method: Method,
    opts: LocusOptions,
) -> Result<LocusResult> {
    let ideal = complex.to_ideal(ring)?;
    match method {
        Method::Combinatorial => {
            check_ideal(&ideal)?;
            igl_combinatorial(complex, ring, opts)
        }
        Method::Both => {
            let alg = igl_algebraic(&ideal, opts)?;
            let comb = igl_combinatorial(complex, ring, opts)?;
            merge(alg, comb)
        }
        _ => locus(&ideal, method, opts),
    }
}

/// Nearly complete intersection: generated in degree at least two, not a
/// complete intersection, and every localization inverting all but one
/// support variable is a complete intersection.
pub fn is_nci(ideal: &MonomialIdeal) -> bool {
    if ideal.is_zero() || ideal.generators().any(|g| g.degree() < 2) {
        return false;
    }
    if ideal.is_complete_intersection() {
        return false;
    }
    let n = ideal.ring().nvars();
    let supp = ideal.support();
    let outside = VarSet::full(n).difference(supp);
    supp.iter().all(|i| {
        ideal
            .monomial_localization(outside.with(i))
            .map(|loc| loc.ideal.is_complete_intersection())
            .unwrap_or(false)
    })
}

/// Locus of a nearly complete intersection: empty, or `V(x_i : i ∈ supp I)`.
pub fn nci_locus(ideal: &MonomialIdeal) -> Result<LocusResult> {
    check_ideal(ideal)?;
    if !is_nci(ideal) {
        return Err(Error::NotNci(ideal.to_string()));
    }
    let ring = ideal.ring();
    let witness = criterion_witness(ideal)?;
    if witness.is_none() {
        return LocusResult::assemble(ring, Vec::new(), Method::Nci);
    }
    let top = VarSet::full(ring.nvars()).difference(ideal.support());
    let mut faces: Vec<Face> = top.subsets().collect();
    faces.sort_unstable();
    let igl = faces
        .into_iter()
        .map(|face| IglFace {
            face,
            monomial_witness: if face.is_empty() {
                witness.clone()
            } else {
                None
            },
            free_face_witness: None,
        })
        .collect();
    LocusResult::assemble(ring, igl, Method::Nci)
}

/// Whether `(I : x_F)` passes the finite generation criterion, i.e. `p_F`
/// lies outside the locus.
pub fn face_is_finitely_generated(ideal: &MonomialIdeal, face: Face) -> Result<bool> {
    check_ideal(ideal)?;
    let complex = SimplicialComplex::from_ideal(ideal)?;
    if !complex.is_face(face) {
        return Err(Error::NotAFace(face));
    }
    let x_f = Monomial::squarefree(ideal.ring(), face)?;
    fg_criterion(&ideal.colon_monomial(&x_f)?)
}
