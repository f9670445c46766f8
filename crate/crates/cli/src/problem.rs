//! Problem files.
//!
//! ```text
//! # comments and blank lines are ignored
//! vars: x, y, z, w, a, b
//! ideal: x*w, y*w, x*a, y*a, z*b, w*b, a*b
//! ```
//!
//! or, instead of `ideal:`, a facet list with 1-based vertex indices:
//!
//! ```text
//! vars: x_1, x_2, x_3, x_4, x_5
//! facets: 1 2 5; 1 3 5; 1 2 4
//! ```

use std::fmt;

use sr_locus::{parse_ideal, Face, MonomialIdeal, Ring, SimplicialComplex, VarSet};

use crate::CliError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Source {
    Ideal(MonomialIdeal),
    Facets(SimplicialComplex),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProblemSpec {
    pub ring: Ring,
    pub source: Source,
}

fn input(msg: impl Into<String>) -> CliError {
    CliError::Input(msg.into())
}

/// Parses a whitespace- or comma-separated list of 1-based vertices. The
/// empty string is the empty face.
pub fn parse_face(text: &str, n: usize) -> Result<Face, CliError> {
    let mut face = VarSet::EMPTY;
    for tok in text
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
    {
        let v: usize = tok
            .parse()
            .map_err(|_| input(format!("bad vertex {tok:?}")))?;
        if v == 0 || v > n {
            return Err(input(format!("vertex {v} outside 1..={n}")));
        }
        face.insert(v - 1);
    }
    Ok(face)
}

impl ProblemSpec {
    pub fn parse(text: &str) -> Result<ProblemSpec, CliError> {
        let mut vars: Option<Ring> = None;
        let mut ideal_text: Option<&str> = None;
        let mut facets_text: Option<&str> = None;
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once(':')
                .ok_or_else(|| input(format!("line {}: expected `key: value`", lineno + 1)))?;
            let slot = match key.trim() {
                "vars" => {
                    if vars.is_some() {
                        return Err(input("`vars:` given twice"));
                    }
                    let names = value.split(',').map(str::trim).filter(|s| !s.is_empty());
                    vars = Some(Ring::new(names)?);
                    continue;
                }
                "ideal" => &mut ideal_text,
                "facets" => &mut facets_text,
                other => return Err(input(format!("line {}: unknown key {other:?}", lineno + 1))),
            };
            if slot.is_some() {
                return Err(input(format!("`{}:` given twice", key.trim())));
            }
            *slot = Some(value);
        }
        let ring = vars.ok_or_else(|| input("missing `vars:` line"))?;
        let source = match (ideal_text, facets_text) {
            (Some(_), Some(_)) => return Err(input("give either `ideal:` or `facets:`, not both")),
            (None, None) => return Err(input("missing `ideal:` or `facets:` line")),
            (Some(text), None) => {
                let ideal = parse_ideal(&ring, text)?;
                if !ideal.is_squarefree() {
                    return Err(input(format!("ideal {ideal} is not squarefree")));
                }
                Source::Ideal(ideal)
            }
            (None, Some(text)) => {
                let facets = text
                    .split(';')
                    .map(|f| parse_face(f, ring.nvars()))
                    .collect::<Result<Vec<_>, _>>()?;
                Source::Facets(SimplicialComplex::new(ring.nvars(), facets)?)
            }
        };
        Ok(ProblemSpec { ring, source })
    }

    pub fn ideal(&self) -> Result<MonomialIdeal, CliError> {
        match &self.source {
            Source::Ideal(i) => Ok(i.clone()),
            Source::Facets(c) => Ok(c.to_ideal(&self.ring)?),
        }
    }

    pub fn complex(&self) -> Result<SimplicialComplex, CliError> {
        match &self.source {
            Source::Ideal(i) => Ok(SimplicialComplex::from_ideal(i)?),
            Source::Facets(c) => Ok(c.clone()),
        }
    }
}

impl fmt::Display for ProblemSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "vars: {}", self.ring.names().join(", "))?;
        match &self.source {
            Source::Ideal(ideal) => {
                let gens: Vec<String> = ideal.generators().map(|g| g.to_string()).collect();
                writeln!(f, "ideal: {}", gens.join(", "))
            }
            Source::Facets(c) => {
                let facets: Vec<String> = c
                    .facets()
                    .iter()
                    .map(|s| {
                        s.iter()
                            .map(|v| (v + 1).to_string())
                            .collect::<Vec<_>>()
                            .join(" ")
                    })
                    .collect();
                writeln!(f, "facets: {}", facets.join("; "))
            }
        }
    }
}
