use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{axpy, rank, zero_vector, Vector};

use super::LieAlgebra;

/// A linear map between two Lie algebras, stored as the image of every
/// domain basis vector.
#[derive(Debug, Clone)]
pub struct LieMap<F: Field> {
    domain: LieAlgebra<F>,
    codomain: LieAlgebra<F>,
    images: Vec<Vector<F>>,
}

impl<F: Field> LieMap<F> {
    pub fn new(domain: LieAlgebra<F>, codomain: LieAlgebra<F>, images: Vec<Vector<F>>) -> Result<Self> {
        if images.len() != domain.dim() {
            return Err(Error::DimensionMismatch { expected: domain.dim(), got: images.len() });
        }
        if let Some(bad) = images.iter().find(|v| v.len() != codomain.dim()) {
            return Err(Error::DimensionMismatch { expected: codomain.dim(), got: bad.len() });
        }
        Ok(LieMap { domain, codomain, images })
    }

    /// Extends images of the domain's generators to the whole basis through
    /// the domain's definitions: `x_k = [x_i, x_j]` maps to the bracket of
    /// the images of `x_i` and `x_j`.
    pub fn from_generator_images(
        domain: LieAlgebra<F>,
        codomain: LieAlgebra<F>,
        generator_images: Vec<Vector<F>>,
    ) -> Result<Self> {
        let g = domain.generator_count();
        if generator_images.len() != g {
            return Err(Error::DimensionMismatch { expected: g, got: generator_images.len() });
        }
        let mut images: Vec<Option<Vector<F>>> = vec![None; domain.dim()];
        for (i, v) in generator_images.into_iter().enumerate() {
            if v.len() != codomain.dim() {
                return Err(Error::DimensionMismatch { expected: codomain.dim(), got: v.len() });
            }
            images[i] = Some(v);
        }
        for d in domain.definitions() {
            let (Some(l), Some(r)) = (&images[d.left], &images[d.right]) else {
                return Err(Error::Precondition(format!(
                    "definition of x{} uses an undefined element",
                    d.target + 1
                )));
            };
            images[d.target] = Some(codomain.bracket_unchecked(l, r));
        }
        let images = images
            .into_iter()
            .enumerate()
            .map(|(i, v)| {
                v.ok_or_else(|| {
                    Error::Precondition(format!("x{} is neither a generator nor defined", i + 1))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(LieMap { domain, codomain, images })
    }

    pub fn identity(algebra: &LieAlgebra<F>) -> Self {
        let images = (0..algebra.dim()).map(|i| algebra.basis_vector(i)).collect();
        LieMap { domain: algebra.clone(), codomain: algebra.clone(), images }
    }

    pub fn domain(&self) -> &LieAlgebra<F> {
        &self.domain
    }

    pub fn codomain(&self) -> &LieAlgebra<F> {
        &self.codomain
    }

    /// Image of the `i`-th domain basis vector.
    pub fn image(&self, i: usize) -> &[F::Elem] {
        &self.images[i]
    }

    pub fn images(&self) -> &[Vector<F>] {
        &self.images
    }

    pub fn apply(&self, v: &[F::Elem]) -> Vector<F> {
        let f = self.codomain.field();
        let mut out = zero_vector(f, self.codomain.dim());
        for (c, img) in v.iter().zip(&self.images) {
            axpy(f, &mut out, c, img);
        }
        out
    }

    /// First basis pair `(i, j)`, `i > j`, on which brackets are not
    /// preserved.
    pub fn first_bracket_failure(&self) -> Option<(usize, usize)> {
        let n = self.domain.dim();
        for i in 0..n {
            for j in 0..i {
                let lhs = self.apply(self.domain.structure(i, j));
                let rhs = self.codomain.bracket_unchecked(&self.images[i], &self.images[j]);
                if lhs != rhs {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn is_homomorphism(&self) -> bool {
        self.first_bracket_failure().is_none()
    }

    pub fn is_invertible(&self) -> bool {
        self.domain.dim() == self.codomain.dim()
            && rank(self.codomain.field(), &self.images) == self.domain.dim()
    }

    pub fn is_isomorphism(&self) -> bool {
        self.is_invertible() && self.is_homomorphism()
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &LieMap<F>) -> Result<LieMap<F>> {
        if self.codomain.dim() != next.domain.dim() {
            return Err(Error::DimensionMismatch { expected: self.codomain.dim(), got: next.domain.dim() });
        }
        let images = self.images.iter().map(|v| next.apply(v)).collect();
        Ok(LieMap { domain: self.domain.clone(), codomain: next.codomain.clone(), images })
    }
}
