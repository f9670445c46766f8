//! Serializable results. Text output is rendered from these same values,
//! so a report read back from JSON prints exactly like the original.

use std::fmt;

use serde::{Deserialize, Serialize};
use sr_locus::{DegreeCheck, Face, IglFace, LocusResult, Monomial, MonomialIdeal};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialJson {
    pub exponents: Vec<u32>,
    pub display: String,
}

impl From<&Monomial> for MonomialJson {
    fn from(m: &Monomial) -> Self {
        MonomialJson {
            exponents: m.exponents().to_vec(),
            display: m.to_string(),
        }
    }
}

pub fn ideal_json(ideal: &MonomialIdeal) -> Vec<MonomialJson> {
    ideal.generators().map(|g| MonomialJson::from(&g)).collect()
}

/// 1-based vertex list.
pub fn face_json(face: Face) -> Vec<usize> {
    face.iter().map(|v| v + 1).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessJson {
    /// Generator of `(K^[2] : K)` outside `K^[2] + (lcm K)`.
    pub monomial: Option<MonomialJson>,
    /// Free face of the link with cone points removed.
    pub free_face: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IglEntry {
    pub face: Vec<usize>,
    pub prime: Vec<MonomialJson>,
    pub witness: WitnessJson,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocusReport {
    pub vars: Vec<String>,
    pub ideal: Vec<MonomialJson>,
    pub igl: Vec<IglEntry>,
    pub igl_maximal: Vec<Vec<usize>>,
    pub j_ideal: Vec<MonomialJson>,
    pub empty_locus: bool,
    pub method: String,
}

impl LocusReport {
    pub fn new(ideal: &MonomialIdeal, result: &LocusResult) -> sr_locus::Result<Self> {
        let ring = ideal.ring();
        let igl = result
            .igl
            .iter()
            .map(|f: &IglFace| {
                Ok(IglEntry {
                    face: face_json(f.face),
                    prime: ideal_json(&sr_locus::face_prime(f.face, ring)?),
                    witness: WitnessJson {
                        monomial: f.monomial_witness.as_ref().map(MonomialJson::from),
                        free_face: f.free_face_witness.map(face_json),
                    },
                })
            })
            .collect::<sr_locus::Result<Vec<_>>>()?;
        Ok(LocusReport {
            vars: ring.names().to_vec(),
            ideal: ideal_json(ideal),
            igl,
            igl_maximal: result.maximal.iter().map(|f| face_json(*f)).collect(),
            j_ideal: ideal_json(&result.j_ideal),
            empty_locus: result.is_empty(),
            method: result.method.to_string(),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub vars: Vec<String>,
    pub ideal: Vec<MonomialJson>,
    pub face: Vec<usize>,
    /// `(I : x_F)`.
    pub colon: Vec<MonomialJson>,
    pub finitely_generated: bool,
    pub witness: Option<MonomialJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinkReport {
    pub vars: Vec<String>,
    pub face: Vec<usize>,
    pub facets: Vec<Vec<usize>>,
    /// Stanley-Reisner ideal of the link, equal to `(I : x_F)`.
    pub link_ideal: Vec<MonomialJson>,
    pub cone_points: Vec<usize>,
    pub free_face: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleReport {
    pub vars: Vec<String>,
    pub ideal: Vec<MonomialJson>,
    pub p: u32,
    pub e_max: u32,
    pub k: u32,
    pub degrees: Vec<DegreeCheck>,
    pub all_vanish: bool,
    pub k_generated: bool,
    /// Verdict of the finite generation criterion on `I` itself.
    pub criterion_finitely_generated: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NciReport {
    pub vars: Vec<String>,
    pub ideal: Vec<MonomialJson>,
    pub is_nci: bool,
    pub locus: Option<LocusReport>,
}

/// Output of any subcommand. Untagged, so a locus report serializes as the
/// bare locus object. Variants are told apart by their required fields.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Report {
    Locus(LocusReport),
    Check(CheckReport),
    Link(LinkReport),
    Oracle(OracleReport),
    Nci(NciReport),
}

struct Ideal<'a>(&'a [MonomialJson]);

impl fmt::Display for Ideal<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("(0)");
        }
        let gens: Vec<&str> = self.0.iter().map(|m| m.display.as_str()).collect();
        write!(f, "({})", gens.join(", "))
    }
}

struct Set<'a>(&'a [usize]);

impl fmt::Display for Set<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vs: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "{{{}}}", vs.join(","))
    }
}

fn sets(list: &[Vec<usize>]) -> String {
    list.iter()
        .map(|s| Set(s).to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

impl fmt::Display for LocusReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "vars: {}", self.vars.join(", "))?;
        writeln!(f, "I = {}", Ideal(&self.ideal))?;
        writeln!(f, "method: {}", self.method)?;
        if self.empty_locus {
            writeln!(f, "locus: empty")?;
        } else {
            writeln!(f, "locus: {} face(s)", self.igl.len())?;
            for entry in &self.igl {
                write!(f, "  {}  p = {}", Set(&entry.face), Ideal(&entry.prime))?;
                if let Some(m) = &entry.witness.monomial {
                    write!(f, "  witness {}", m.display)?;
                }
                if let Some(ff) = &entry.witness.free_face {
                    write!(f, "  free face {}", Set(ff))?;
                }
                writeln!(f)?;
            }
            writeln!(f, "maximal: {}", sets(&self.igl_maximal))?;
        }
        writeln!(f, "J = {}", Ideal(&self.j_ideal))
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "vars: {}", self.vars.join(", "))?;
        writeln!(f, "I = {}", Ideal(&self.ideal))?;
        writeln!(
            f,
            "face {}: (I : x_F) = {}",
            Set(&self.face),
            Ideal(&self.colon)
        )?;
        if self.finitely_generated {
            writeln!(f, "finitely generated")
        } else {
            writeln!(f, "not finitely generated")?;
            if let Some(w) = &self.witness {
                writeln!(f, "witness {}", w.display)?;
            }
            Ok(())
        }
    }
}

impl fmt::Display for LinkReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "vars: {}", self.vars.join(", "))?;
        writeln!(f, "link {}", Set(&self.face))?;
        writeln!(f, "facets: {}", sets(&self.facets))?;
        writeln!(f, "ideal = {}", Ideal(&self.link_ideal))?;
        writeln!(f, "cone points: {}", Set(&self.cone_points))?;
        match &self.free_face {
            Some(ff) => writeln!(f, "free face {}", Set(ff)),
            None => writeln!(f, "no free face"),
        }
    }
}

impl fmt::Display for OracleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "vars: {}", self.vars.join(", "))?;
        writeln!(f, "I = {}", Ideal(&self.ideal))?;
        writeln!(f, "p = {}, e = 2..={}, k = {}", self.p, self.e_max, self.k)?;
        for d in &self.degrees {
            writeln!(
                f,
                "e = {}: {}  (K_e {} gens, L_e {} gens{})",
                d.e,
                if d.vanishes {
                    "vanishes"
                } else {
                    "does not vanish"
                },
                d.k_gens,
                d.l_gens,
                if d.contained { "" } else { ", L_e not in K_e" },
            )?;
        }
        if self.all_vanish {
            writeln!(f, "all degrees vanish")?;
        }
        writeln!(
            f,
            "{}-generated up to e = {}: {}",
            self.k,
            self.e_max,
            if self.k_generated { "yes" } else { "no" }
        )?;
        writeln!(
            f,
            "criterion: {}",
            if self.criterion_finitely_generated {
                "finitely generated"
            } else {
                "not finitely generated"
            }
        )
    }
}

impl fmt::Display for NciReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.locus {
            Some(locus) => {
                writeln!(f, "nearly complete intersection")?;
                write!(f, "{locus}")
            }
            None => {
                writeln!(f, "vars: {}", self.vars.join(", "))?;
                writeln!(f, "I = {}", Ideal(&self.ideal))?;
                writeln!(f, "not a nearly complete intersection")
            }
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Report::Locus(r) => r.fmt(f),
            Report::Check(r) => r.fmt(f),
            Report::Link(r) => r.fmt(f),
            Report::Oracle(r) => r.fmt(f),
            Report::Nci(r) => r.fmt(f),
        }
    }
}
