//! Exact-arithmetic workbench for finite-dimensional Leibniz algebras.

pub mod algebra;
pub mod catalog;
pub mod cideal;
pub mod field;
pub mod harness;
pub mod ideals;
pub mod io;
pub mod linalg;
pub mod structure;
pub mod verdict;

pub use algebra::{AlgebraError, LeibnizAlgebra, StructureTable, Subalgebra};
pub use field::{Field, FieldError, FieldSpec, Gf, Rational};
pub use linalg::{LinalgError, LinearMap, QuotientMap, Subspace, Vector};
pub use verdict::{Method, Outcome, Verdict};

pub type Gf2 = Gf<2>;
pub type Gf3 = Gf<3>;
pub type Gf5 = Gf<5>;
pub type Gf7 = Gf<7>;
pub type RationalAlgebra = LeibnizAlgebra<Rational>;
