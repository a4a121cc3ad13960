//! Exact computation of the dimension-10 immediate descendants of the
//! class-2 Lie algebra `L_p` attached to the elliptic curve `y^2 = x^3 - x`,
//! together with the arithmetic that decides which counting formula applies
//! at a given prime.
//!
//! Layers, bottom up:
//!
//! * [`finite_field`]: `F_p` arithmetic, square roots, polynomial roots.
//! * [`linalg`]: echelon forms and kernels over any [`Field`].
//! * [`diophantine`]: point counts, norm forms and prime scans.
//! * [`lie`]: structure-constant Lie algebras, the covering algebra and the
//!   descendant families.
//! * [`aut`]: automorphisms of `L_p` preserving the two coordinate blocks.
//! * [`orbit`]: the action on descendant parameters and three independent
//!   ways of counting its orbits.
//!
//! The linear algebra and the Lie engine are generic over the scalar field;
//! the aliases below fix the two instantiations used in practice.

pub mod aut;
pub mod diophantine;
pub mod error;
pub mod field;
pub mod finite_field;
pub mod lie;
pub mod linalg;
pub mod mat3;
pub mod orbit;

pub use error::{Error, Result};
pub use field::{Exact, Field};
pub use finite_field::{FpPoly, PrimeField, Residue};

/// Arbitrary-precision rationals.
pub type Rational = num_rational::BigRational;
/// The field `Q`, for characteristic-free cross-checks.
pub type Rationals = Exact<Rational>;

/// A structure-constant Lie algebra over `F_p`.
pub type FpLieAlgebra = lie::LieAlgebra<PrimeField>;
/// A structure-constant Lie algebra over `Q`.
pub type QLieAlgebra = lie::LieAlgebra<Rationals>;
/// A linear map between Lie algebras over `F_p`.
pub type FpLieMap = lie::LieMap<PrimeField>;
/// A subspace of `F_p^n`.
pub type FpSubspace = linalg::Subspace<PrimeField>;
