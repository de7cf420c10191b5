//! Projective representations of finite abelian p-groups `G1 x G2` for bilinear
//! cocycle classes: exact construction, verification, restriction to small-index
//! subgroups and exhaustive census against closed-form counts.

pub mod census;
pub mod cocycle;
pub mod construct;
pub mod cyclotomic;
pub mod error;
pub mod fpmatrix;
pub mod matrix;
pub mod monomial;
pub mod pgroup;

use num_rational::BigRational;

pub use census::{
    classify_all, expected_counts, restrict_rep, Category, CensusTable, RestrictionVerdict,
};
pub use cocycle::{BilinearCocycle, RegularSet, Restriction};
pub use construct::{
    construct_general, construct_inflated, construct_tensor, induce, ProjRep, SubgroupRep,
    TrivialRep,
};
pub use cyclotomic::{Coeff, Cyclotomic};
pub use error::{Error, Result};
pub use fpmatrix::{count_rank_enumerate, count_rank_formula, FpMatrix};
pub use matrix::{commutant_dimension, intertwiners, CyclotomicMatrix};
pub use monomial::MonomialMatrix;
pub use pgroup::{AbelianPGroup, GroupElement, Limits, SubgroupSpec};

/// Element of `Q(xi_p)` with arbitrary-precision rational coefficients.
pub type CycScalar = Cyclotomic<BigRational>;
/// Dense matrix over `Q(xi_p)` with arbitrary-precision rational coefficients.
pub type CycMatrix = CyclotomicMatrix<BigRational>;

/// Version tag carried by every JSON payload.
pub const SCHEMA: &str = "projrep/1";
