//! Exact computations with finite-dimensional Hopf algebras: cocycles,
//! r-forms, braided comodule algebras and the Azumaya test for cleft
//! extensions of the base field, with the `E(n)` family built in.
//!
//! All code is generic over an exact [`Field`]; the aliases at the crate
//! root fix the scalar to [`Rational`] or a small prime field.
//!
//! Tensor flattening is global: `e_i ⊗ e_j` in a tensor product with right
//! factor of dimension `n` has index `i·n + j`. Matrices act on column
//! vectors; the antipode matrix has `S(e_j)` as its `j`-th column.

pub mod azumaya;
pub mod comodule;
pub mod convolution;
pub mod document;
pub mod dual;
pub mod en;
pub mod error;
pub mod field;
pub mod hopf;
pub mod integral;
pub mod linalg;
pub mod rewrite;

pub use azumaya::{
    build_f, build_g, is_azumaya, is_azumaya_cleft, theta_of_rform, AzumayaEvidence, BraidedMapMatrix,
    CleftEvidence, MapKind,
};
pub use comodule::{braided_opposite, end_algebra, smash_product, Comodule, ComoduleAlgebra, EndVariant};
pub use convolution::{
    build_a_sigma, check_dqt_rform, check_left_2cocycle, cohomologous_twist, conv_inverse, convolve,
    crossed_product, doi_twist, twisted_rform, Functional1, Functional2,
};
pub use dual::{dual_picture_test, DualPictureVerdict};
pub use en::{
    build_clifford, build_clifford_op, build_en, derive_cocycle_from_cleft, en_azumaya_criterion, en_cocycle,
    rform_en, rsigma_generator_table, ENParams, MonomialBasis,
};
pub use error::{Error, Result};
pub use field::{Field, Fp, Rational};
pub use hopf::{Algebra, Check, Coalgebra, HopfAlgebra, OppositeKind, Report, Term};
pub use integral::{left_integral_dual, rank_one_preimage, s1_s2, v_w_functionals};
pub use linalg::{det, kernel_basis, kron, Matrix};

/// The prime field with seven elements.
pub type F7 = Fp<7>;

pub type QMatrix = Matrix<Rational>;
pub type QHopf = HopfAlgebra<Rational>;
pub type QFunctional2 = Functional2<Rational>;
pub type QComoduleAlgebra = ComoduleAlgebra<Rational>;
pub type QParams = ENParams<Rational>;
