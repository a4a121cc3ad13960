//! Lie algebras given by structure constants, and the specific algebras
//! built from `L_p`.

mod algebra;
mod covering;
mod dump;
mod families;
mod map;
mod subspace;

pub use algebra::{Definition, LieAlgebra};
pub use covering::{
    adjoin_tails, build_covering, covering_of, jacobi_residuals, Covering, JacobiResidual, Presentation, Relation,
    RelationValue, TailRelation,
};
pub use dump::{dump, parse_dump};
pub use families::{
    build_descendant, build_general_descendant, build_lp, reduce_general_descendant, GeneralDescendantParams,
    ReducedDescendant,
};
pub use map::LieMap;
pub use subspace::{abelian_3subspaces, centralizer_in_v, diagonal_subspace, ABELIAN_SUBSPACE_LIMIT};
