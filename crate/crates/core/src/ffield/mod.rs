//! Brute-force ground truth over prime fields.
//!
//! Everything here works directly with matrices over `F_p` and knows
//! nothing about generating functions: orbits of `GL_d(F_p)` on
//! `GL_d(F_p)^m` are enumerated explicitly, absolute irreducibility is the
//! statement that the tuple generates the full matrix algebra, and absolute
//! indecomposability that the endomorphism algebra is local with residue
//! field `F_p`.

mod matrix;
mod oracle;

pub use matrix::{nullspace, EchelonBasis, FFMat};
pub use oracle::{
    algebra_span, burnside_count, centralizer_basis, classify_orbits, count_abs_ind, count_abs_irr,
    endo_algebra, gl_enumerate, gl_order, is_absolutely_irreducible, orbit_census, ConjugacyClass,
    EndoAlgebra, GlGroup, OrbitCensus, OrbitClassification, RepTuple, SemisimplicityTester,
};
