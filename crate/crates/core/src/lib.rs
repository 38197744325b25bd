//! Exact arithmetic for the Schur-Szego composition of polynomials and of
//! entire functions `e^x R`: composition and factor constructors, the
//! inverse (factor recovery) problem, the affine coefficient-to-symmetric
//! map, sign-signature classification, and constructive realization of
//! admissible signatures with machine-checkable certificates.

pub mod error;
pub mod rational;
pub mod gauss;
pub mod poly;
pub mod gauss_poly;
pub mod sturm;
pub mod squarefree;
pub mod interp;
pub mod stirling;
pub mod approx;
pub mod compose;
pub mod expform;
pub mod decompose;
pub mod phi;
pub mod signature;
pub mod cases;
pub mod realize;
pub mod serialize;

pub use error::{Error, Result};
pub use gauss::GaussRational;
pub use gauss_poly::GaussRatPoly;
pub use poly::RatPoly;
pub use rational::Rational;
pub use sturm::{Bound, IsolatingInterval};

pub use compose::{
    factor_k, factor_k_infinity, revert, schur_szego, schur_szego_multi, DegreeTaggedPoly,
};
pub use decompose::{decompose_exp, decompose_poly, FactorMultiset};
pub use expform::{exp_apply_factor, exp_truncated_compose, ExpForm};
pub use phi::{char_poly, determinant, phi_affine, phi_eigen_check, phi_report, AffineMap, EigenReport};
pub use signature::{check_necessary, classify_roots, factor_signature, signature_pair, b_value, Mode, NecessaryReport, RootSignature, SignVector8};
pub use cases::{enumerate_cases, verify_realization, CaseSpec, VerifyOutcome};
pub use realize::{
    base_composition_exp, base_composition_pol, build_plan, couple_discriminant_exp,
    couple_discriminant_pol, couple_factor_exp, couple_factor_pol, in_sector, realize_all,
    realize_case, PerturbationPlan, RealizationCertificate, RealizeSummary, SearchConfig,
    SearchTrace,
};
