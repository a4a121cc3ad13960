//! Automorphisms of `L_p` that map `V = span(x_1..x_6)` to itself.
//!
//! The families built here are the `GL(2, p)` maps mixing the two blocks
//! `span(x_1, x_2, x_3)` and `span(x_4, x_5, x_6)`, the diagonal maps
//! `diag(u^-1, u, 1)` on both blocks with `u^4 = 1`, and the sporadic maps
//! of the form
//!
//! ```text
//!     [ a   ab   ac ]
//!     [ df  -f  -def]      on both blocks,
//!     [ 1   d    e  ]
//! ```
//!
//! which exist only for some primes. [`brute_force_h`] enumerates the
//! block-preserving automorphisms directly, as an oracle for that list.

mod brute;
mod sporadic;

pub use brute::{brute_force_h, HSearch, H_SEARCH_LIMIT};
pub use sporadic::{identity_checks, solve_sporadic, SporadicParams, IdentityChecks};

use crate::error::{Error, Result};
use crate::finite_field::{PrimeField, Residue};
use crate::lie::{LieAlgebra, LieMap};
use crate::mat3::Mat3;
use crate::orbit::sporadic_action_matrix;

/// Where a [`BlockAut`] came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    Gl2 { alpha: Residue, beta: Residue, gamma: Residue, delta: Residue },
    Diag { u: Residue },
    Sporadic { d: Residue, e: Residue, u: Residue },
    /// Built from explicit blocks, or a composite.
    Blocks,
}

/// A linear map on `V`, given by the image of each of `x_1..x_6` as a
/// coordinate row. Extended to `L_p` by bracketing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockAut {
    field: PrimeField,
    images: [[Residue; 6]; 6],
    provenance: Provenance,
}

impl BlockAut {
    /// `x_i -> A_i . (x_1, x_2, x_3)`, `x_{3+i} -> B_i . (x_4, x_5, x_6)`.
    pub fn from_blocks(field: &PrimeField, a: &Mat3, b: &Mat3, provenance: Provenance) -> Result<Self> {
        if !a.is_invertible(field) || !b.is_invertible(field) {
            return Err(Error::Singular("block matrices must be invertible".into()));
        }
        let mut images = [[0; 6]; 6];
        for i in 0..3 {
            images[i][..3].copy_from_slice(&a.row(i));
            images[3 + i][3..].copy_from_slice(&b.row(i));
        }
        Ok(BlockAut { field: *field, images, provenance })
    }

    pub fn images(&self) -> &[[Residue; 6]; 6] {
        &self.images
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    /// `(A, B)` when the map preserves both coordinate blocks.
    pub fn blocks(&self) -> Option<(Mat3, Mat3)> {
        let m = &self.images;
        let split = (0..3).all(|i| m[i][3..] == [0; 3] && m[3 + i][..3] == [0; 3]);
        split.then(|| {
            (
                Mat3(std::array::from_fn(|i| std::array::from_fn(|j| m[i][j]))),
                Mat3(std::array::from_fn(|i| std::array::from_fn(|j| m[3 + i][3 + j]))),
            )
        })
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &BlockAut) -> BlockAut {
        let f = &self.field;
        let images = self.images.map(|row| {
            let mut out = [0; 6];
            for (c, img) in row.iter().zip(&next.images) {
                for k in 0..6 {
                    out[k] = f.add(out[k], f.mul(*c, img[k]));
                }
            }
            out
        });
        BlockAut { field: *f, images, provenance: Provenance::Blocks }
    }

    /// The induced linear map from `domain` to `codomain`, both given with
    /// `x_1..x_6` as generators.
    pub fn to_lie_map(&self, domain: &LieAlgebra<PrimeField>, codomain: &LieAlgebra<PrimeField>) -> Result<LieMap<PrimeField>> {
        let n = codomain.dim();
        let gens = self
            .images
            .iter()
            .map(|row| {
                let mut v = row.to_vec();
                v.resize(n, 0);
                v
            })
            .collect();
        LieMap::from_generator_images(domain.clone(), codomain.clone(), gens)
    }
}

/// The map `x_i -> αx_i + βx_{3+i}`, `x_{3+i} -> γx_i + δx_{3+i}`.
pub fn gl2_block_aut(field: &PrimeField, alpha: Residue, beta: Residue, gamma: Residue, delta: Residue) -> Result<BlockAut> {
    let det = field.sub(field.mul(alpha, delta), field.mul(beta, gamma));
    if det == 0 {
        return Err(Error::Singular(format!(
            "[[{alpha}, {beta}], [{gamma}, {delta}]] is not in GL(2, {})",
            field.modulus()
        )));
    }
    let mut images = [[0; 6]; 6];
    for i in 0..3 {
        images[i][i] = alpha;
        images[i][3 + i] = beta;
        images[3 + i][i] = gamma;
        images[3 + i][3 + i] = delta;
    }
    Ok(BlockAut { field: *field, images, provenance: Provenance::Gl2 { alpha, beta, gamma, delta } })
}

/// `diag(u^-1, u, 1)` on both blocks, for `u^4 = 1`.
pub fn diag_aut(field: &PrimeField, u: Residue) -> Result<BlockAut> {
    if field.pow(u, 4) != 1 {
        return Err(Error::Precondition(format!("u = {u} is not a fourth root of unity")));
    }
    let m = Mat3::diag(field.inv(u)?, u, 1);
    BlockAut::from_blocks(field, &m, &m, Provenance::Diag { u })
}

/// The matrix `[[a, ab, ac], [df, -f, -def], [1, d, e]]`.
pub fn sporadic_block(field: &PrimeField, p: &SporadicParams) -> Mat3 {
    let m = |x: u64, y: u64| field.mul(x, y);
    Mat3([
        [p.a, m(p.a, p.b), m(p.a, p.c)],
        [m(p.d, p.f), field.neg(p.f), field.neg(m(m(p.d, p.e), p.f))],
        [1, p.d, p.e],
    ])
}

/// The sporadic automorphism with both blocks equal to [`sporadic_block`].
pub fn sporadic_aut(field: &PrimeField, params: &SporadicParams) -> Result<BlockAut> {
    let m = sporadic_block(field, params);
    BlockAut::from_blocks(field, &m, &m, Provenance::Sporadic { d: params.d, e: params.e, u: params.u })
}

/// Whether `m` extends to an automorphism of `lp`: images of `x_7, x_8,
/// x_9` are computed by bracketing, then every structure constant is
/// checked and invertibility confirmed.
pub fn verify_automorphism(lp: &LieAlgebra<PrimeField>, m: &BlockAut) -> bool {
    verify_block_map(lp, lp, m)
}

/// [`verify_automorphism`] between two possibly different algebras.
pub fn verify_block_map(domain: &LieAlgebra<PrimeField>, codomain: &LieAlgebra<PrimeField>, m: &BlockAut) -> bool {
    m.to_lie_map(domain, codomain).is_ok_and(|map| map.is_isomorphism())
}

/// A matrix acting on descendant parameters, with its origin.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecialMatrix {
    pub matrix: Mat3,
    pub source: MatrixSource,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatrixSource {
    /// `diag(1, u, u^-1)`.
    Diagonal { u: Residue },
    Sporadic(SporadicParams),
}

impl MatrixSource {
    /// The fourth root of unity labelling this matrix.
    pub fn u(&self) -> Residue {
        match self {
            MatrixSource::Diagonal { u } => *u,
            MatrixSource::Sporadic(p) => p.u,
        }
    }
}

/// The set `S` of matrices `B` in the action `v -> kBv`: `diag(1, u, u^-1)`
/// for every `u^4 = 1`, then one matrix per sporadic parameter set.
pub fn special_matrices(field: &PrimeField) -> Result<Vec<SpecialMatrix>> {
    let mut out: Vec<SpecialMatrix> = field
        .fourth_roots_of_unity()
        .into_iter()
        .map(|u| SpecialMatrix {
            matrix: Mat3::diag(1, u, field.inv(u).expect("roots of unity are nonzero")),
            source: MatrixSource::Diagonal { u },
        })
        .collect();
    for params in solve_sporadic(field) {
        out.push(SpecialMatrix { matrix: sporadic_action_matrix(field, &params)?, source: MatrixSource::Sporadic(params) });
    }
    Ok(out)
}

/// All the constructed automorphisms for `field`: a few `GL(2, p)` maps,
/// the diagonal family and the sporadic family.
pub fn constructed_automorphisms(field: &PrimeField) -> Result<Vec<BlockAut>> {
    let mut out = vec![
        gl2_block_aut(field, 1, 0, 0, 1)?,
        gl2_block_aut(field, 2, 0, 0, 3)?,
        gl2_block_aut(field, 0, 1, 1, 0)?,
        gl2_block_aut(field, 1, 1, 0, 1)?,
        gl2_block_aut(field, 2, 1, 1, 1)?,
    ];
    for u in field.fourth_roots_of_unity() {
        out.push(diag_aut(field, u)?);
    }
    for params in solve_sporadic(field) {
        out.push(sporadic_aut(field, &params)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::build_lp;

    fn fp(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn gl2_examples() {
        let f = fp(7);
        let l = build_lp(&f);
        let id = gl2_block_aut(&f, 1, 0, 0, 1).unwrap();
        let map = id.to_lie_map(&l, &l).unwrap();
        for i in 0..9 {
            assert_eq!(map.image(i), l.basis_vector(i).as_slice());
        }
        let scaling = gl2_block_aut(&f, 3, 0, 0, 5).unwrap();
        let (a, b) = scaling.blocks().unwrap();
        assert_eq!((a, b), (Mat3::scalar(3), Mat3::scalar(5)));
        assert!(verify_automorphism(&l, &scaling));

        // the swap has determinant -1, so it negates every [x_{3+i}, x_j]
        let swap = gl2_block_aut(&f, 0, 1, 1, 0).unwrap();
        assert!(swap.blocks().is_none());
        let map = swap.to_lie_map(&l, &l).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let lhs = l.bracket(map.image(3 + i), map.image(j)).unwrap();
                let rhs: Vec<u64> = l.structure(3 + i, j).iter().map(|&c| f.neg(c)).collect();
                assert_eq!(lhs, rhs);
            }
        }
        assert!(verify_automorphism(&l, &swap));
        assert!(matches!(gl2_block_aut(&f, 1, 2, 3, 6), Err(Error::Singular(_))));
    }

    #[test]
    fn every_constructed_automorphism_verifies() {
        for p in [5, 7, 11, 13, 23, 61, 73] {
            let f = fp(p);
            let l = build_lp(&f);
            for m in constructed_automorphisms(&f).unwrap() {
                assert!(verify_automorphism(&l, &m), "p = {p}, {:?}", m.provenance());
            }
        }
    }

    #[test]
    fn composition_closure() {
        for p in [11, 13, 61] {
            let f = fp(p);
            let l = build_lp(&f);
            let all = constructed_automorphisms(&f).unwrap();
            for a in &all {
                for b in &all {
                    assert!(verify_automorphism(&l, &a.then(b)));
                }
            }
        }
    }

    #[test]
    fn perturbed_codomain_is_rejected() {
        let f = fp(7);
        let l = build_lp(&f);
        let mut v = vec![0; 9];
        v[6] = 1;
        let perturbed = l.with_bracket(4, 2, v);
        let id = BlockAut::from_blocks(&f, &Mat3::identity(), &Mat3::identity(), Provenance::Blocks).unwrap();
        assert!(verify_block_map(&l, &l, &id));
        assert!(!verify_block_map(&l, &perturbed, &id));
        assert!(!verify_block_map(&perturbed, &l, &id));
    }

    #[test]
    fn special_matrix_counts() {
        let size = |p: u64| special_matrices(&fp(p)).unwrap().len();
        assert_eq!(size(5), 4);
        assert_eq!(size(7), 2);
        assert_eq!(size(11), 6);
        assert_eq!(size(13), 4);
        assert_eq!(size(61), 36);
        for p in crate::finite_field::primes_in_range(5, 400) {
            let n = size(p);
            let expected: &[usize] = match p % 12 {
                1 => &[4, 36],
                5 => &[4],
                7 => &[2],
                _ => &[6],
            };
            assert!(expected.contains(&n), "p = {p}: |S| = {n}");
        }
    }
}
