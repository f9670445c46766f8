//! Command-line front end for `sr-locus`: problem files, reports and the
//! subcommand dispatcher. The binary is a thin wrapper over [`run`].

pub mod problem;
pub mod report;

use sr_locus::{
    criterion_witness, fg_criterion, is_k_generated_up_to, is_nci, locus, nci_locus, oracle_table,
    Face, LocusOptions, Method, Monomial, OracleParams,
};

pub use problem::{parse_face, ProblemSpec, Source};
pub use report::{CheckReport, LinkReport, LocusReport, NciReport, OracleReport, Report};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error(transparent)]
    Algebra(#[from] sr_locus::Error),
}

impl CliError {
    /// 2 when the two methods disagree, 1 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Algebra(sr_locus::Error::MethodDisagreement { .. }) => 2,
            _ => 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Task {
    Locus,
    Check(Face),
    Link(Face),
    Oracle,
    Nci,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Options {
    pub method: Method,
    pub prune: bool,
    pub oracle: OracleParams,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            method: Method::Both,
            prune: true,
            oracle: OracleParams::default(),
        }
    }
}

pub fn run(problem: &ProblemSpec, task: Task, opts: &Options) -> Result<Report, CliError> {
    let ideal = problem.ideal()?;
    let vars = problem.ring.names().to_vec();
    let report = match task {
        Task::Locus => {
            let result = match (&problem.source, opts.method) {
                (Source::Facets(c), m) if m != Method::Nci => sr_locus::locus_of_complex(
                    c,
                    &problem.ring,
                    m,
                    LocusOptions { prune: opts.prune },
                )?,
                (_, m) => locus(&ideal, m, LocusOptions { prune: opts.prune })?,
            };
            Report::Locus(LocusReport::new(&ideal, &result)?)
        }
        Task::Check(face) => {
            let complex = problem.complex()?;
            if !complex.is_face(face) {
                return Err(sr_locus::Error::NotAFace(face).into());
            }
            let colon = ideal.colon_monomial(&Monomial::squarefree(&problem.ring, face)?)?;
            let witness = criterion_witness(&colon)?;
            Report::Check(CheckReport {
                vars,
                ideal: report::ideal_json(&ideal),
                face: report::face_json(face),
                colon: report::ideal_json(&colon),
                finitely_generated: witness.is_none(),
                witness: witness.as_ref().map(report::MonomialJson::from),
            })
        }
        Task::Link(face) => {
            let link = problem.complex()?.link(face)?;
            Report::Link(LinkReport {
                vars,
                face: report::face_json(face),
                facets: link
                    .facets()
                    .iter()
                    .map(|f| report::face_json(*f))
                    .collect(),
                link_ideal: report::ideal_json(&link.to_ideal(&problem.ring)?),
                cone_points: report::face_json(link.cone_points()),
                free_face: link
                    .remove_cone_points()
                    .find_free_face()
                    .map(report::face_json),
            })
        }
        Task::Oracle => {
            let degrees = oracle_table(&ideal, &opts.oracle)?;
            Report::Oracle(OracleReport {
                vars,
                ideal: report::ideal_json(&ideal),
                p: opts.oracle.p,
                e_max: opts.oracle.e_max,
                k: opts.oracle.k,
                all_vanish: degrees.iter().all(|d| d.vanishes),
                degrees,
                k_generated: is_k_generated_up_to(&ideal, &opts.oracle)?,
                criterion_finitely_generated: fg_criterion(&ideal)?,
            })
        }
        Task::Nci => {
            let nci = is_nci(&ideal);
            let locus = if nci {
                Some(LocusReport::new(&ideal, &nci_locus(&ideal)?)?)
            } else {
                None
            };
            Report::Nci(NciReport {
                vars,
                ideal: report::ideal_json(&ideal),
                is_nci: nci,
                locus,
            })
        }
    };
    Ok(report)
}
