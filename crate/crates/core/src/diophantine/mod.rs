//! Point counts on `y^2 = x^3 - x` over the roots of `x^4 + 6x^2 - 3`,
//! the criteria that predict them, and scans over ranges of primes.

mod norm;
mod scan;
mod vp;

pub use norm::{
    cornacchia, ec_count_formula, ec_count_naive, gauss_rep, represent_norm_form, norm_form_criterion, GaussRep,
    NormFormRep, NormFormCheck,
};
pub use scan::{admissible_classes, density_scan, subcongruence_scan, ClassWitnesses, DensityScan};
pub use vp::{
    count_vp, octic_equivalence, octic, octic_has_root, quartic, quartic360, quartic360_has_root, quartic_has_root,
    OcticCheck, VpCount,
};
