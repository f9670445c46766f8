//! Non-finitely generated locus of the Frobenius algebra attached to a
//! Stanley–Reisner ring `K[x_1, .., x_n] / I_Δ` in prime characteristic.
//!
//! The locus is a closed set `V(J)` with `J` an intersection of face primes
//! `p_F = (x_i : i ∉ F)`. [`locus`] computes it from a squarefree monomial
//! ideal either algebraically, through a colon-ideal criterion on
//! `(I : x_F)`, or combinatorially, through free faces of links, or both
//! with a cross-check. The [`criterion`] module also carries a brute-force
//! degree-wise oracle for the generation of the algebra.
//!
//! ```
//! use sr_locus::{locus, parse_ideal, LocusOptions, Method, Ring};
//!
//! let ring = Ring::indexed(3).unwrap();
//! let ideal = parse_ideal(&ring, "x_1*x_2, x_2*x_3").unwrap();
//! let result = locus(&ideal, Method::Both, LocusOptions::default()).unwrap();
//! assert_eq!(result.j_ideal.to_string(), "(x_1, x_2, x_3)");
//! ```

pub mod criterion;
pub mod error;
pub mod ideal;
pub mod locus;
pub mod monomial;
pub mod parse;
pub mod ring;
pub mod simplicial;
pub mod varset;

pub use criterion::{
    bracket_colon, ce_vanishes, criterion_witness, fg_criterion, generation_ideal,
    is_k_generated_up_to, oracle_table, DegreeCheck, OracleParams,
};
pub use error::{Error, Result};
pub use ideal::{LocalizedIdeal, MonomialIdeal};
pub use locus::{
    face_is_finitely_generated, igl_algebraic, igl_combinatorial, is_nci, locus, locus_of_complex,
    nci_locus, IglFace, LocusOptions, LocusResult, Method,
};
pub use monomial::Monomial;
pub use parse::{parse_ideal, parse_monomial};
pub use ring::{Ring, RingContext};
pub use simplicial::{face_monomial, face_prime, minimal_transversals, SimplicialComplex};
pub use varset::{Face, VarSet};

/// Largest supported number of variables.
pub const MAX_VARS: usize = 30;

/// Largest exponent a monomial may carry; anything above is an error.
pub const EXPONENT_CEILING: u32 = 1 << 16;
