use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{axpy, is_zero_vector, unit_vector, zero_vector, Subspace, Vector};

/// `x_target = [x_left, x_right]`, recording how a basis element arises
/// from earlier ones. Lets maps be specified on generators only.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Definition {
    pub target: usize,
    pub left: usize,
    pub right: usize,
}

/// A finite-dimensional anticommutative algebra given by structure
/// constants over `F`. Construction only enforces antisymmetry; the Jacobi
/// identity is checked on demand with [`LieAlgebra::jacobi_check`], since the
/// covering construction deliberately builds tables that violate it.
///
/// Basis indices are 0-based; `x_1` of the usual notation is index 0.
#[derive(Debug, Clone)]
pub struct LieAlgebra<F: Field> {
    field: F,
    dim: usize,
    /// `table[i * dim + j] = [x_i, x_j]`.
    table: Vec<Vector<F>>,
    generators: usize,
    definitions: Vec<Definition>,
}

impl<F: Field> LieAlgebra<F> {
    /// Builds the algebra from the brackets `[x_i, x_j]` with `i > j`;
    /// pairs not listed bracket to zero.
    pub fn from_brackets<I>(field: &F, dim: usize, brackets: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, Vector<F>)>,
    {
        let zero = zero_vector(field, dim);
        let mut table = vec![zero; dim * dim];
        for (i, j, v) in brackets {
            if i >= dim || j >= i {
                return Err(Error::Precondition(format!(
                    "bracket index pair ({i}, {j}) must satisfy dim > i > j"
                )));
            }
            if v.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, got: v.len() });
            }
            table[j * dim + i] = v.iter().map(|c| field.neg(c)).collect();
            table[i * dim + j] = v;
        }
        Ok(LieAlgebra {
            field: field.clone(),
            dim,
            table,
            generators: dim,
            definitions: Vec::new(),
        })
    }

    /// Builds from relations written with 1-based labels and small integer
    /// coefficients, e.g. `(5, 1, &[(8, 1), (15, 1)])` for
    /// `[x_5, x_1] = x_8 + x_15`.
    pub fn from_labelled(field: &F, dim: usize, relations: &[(usize, usize, Vec<(usize, i64)>)]) -> Result<Self> {
        let brackets = relations.iter().map(|(i, j, terms)| {
            let mut v = zero_vector(field, dim);
            for &(k, c) in terms {
                v[k - 1] = field.add(&v[k - 1], &field.from_i64(c));
            }
            (i - 1, j - 1, v)
        });
        Self::from_brackets(field, dim, brackets)
    }

    /// Declares `x_0 .. x_{n-1}` as generators and the remaining basis
    /// elements as iterated brackets.
    pub fn with_generators(mut self, n: usize, definitions: Vec<Definition>) -> Result<Self> {
        for d in &definitions {
            let expected = unit_vector(&self.field, self.dim, d.target);
            if self.structure(d.left, d.right) != expected.as_slice() {
                return Err(Error::Invariant(format!(
                    "definition x{} = [x{}, x{}] does not match the table",
                    d.target + 1,
                    d.left + 1,
                    d.right + 1
                )));
            }
        }
        self.generators = n;
        self.definitions = definitions;
        Ok(self)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generator_count(&self) -> usize {
        self.generators
    }

    pub fn definitions(&self) -> &[Definition] {
        &self.definitions
    }

    pub fn basis_vector(&self, i: usize) -> Vector<F> {
        unit_vector(&self.field, self.dim, i)
    }

    /// `[x_i, x_j]` as a coordinate vector.
    pub fn structure(&self, i: usize, j: usize) -> &[F::Elem] {
        &self.table[i * self.dim + j]
    }

    /// Bilinear extension of the structure constants.
    pub fn bracket(&self, u: &[F::Elem], v: &[F::Elem]) -> Result<Vector<F>> {
        for w in [u, v] {
            if w.len() != self.dim {
                return Err(Error::DimensionMismatch { expected: self.dim, got: w.len() });
            }
        }
        Ok(self.bracket_unchecked(u, v))
    }

    pub(crate) fn bracket_unchecked(&self, u: &[F::Elem], v: &[F::Elem]) -> Vector<F> {
        let f = &self.field;
        let mut out = zero_vector(f, self.dim);
        for (i, ui) in u.iter().enumerate() {
            if f.is_zero(ui) {
                continue;
            }
            for (j, vj) in v.iter().enumerate() {
                if f.is_zero(vj) || i == j {
                    continue;
                }
                let c = f.mul(ui, vj);
                axpy(f, &mut out, &c, self.structure(i, j));
            }
        }
        out
    }

    /// `[[u, v], w]`.
    pub fn bracket3(&self, u: &[F::Elem], v: &[F::Elem], w: &[F::Elem]) -> Vector<F> {
        self.bracket_unchecked(&self.bracket_unchecked(u, v), w)
    }

    /// Every `[x_i, x_j]` with `i > j` that is nonzero, in row-major order.
    pub fn nonzero_brackets(&self) -> impl Iterator<Item = (usize, usize, &[F::Elem])> + '_ {
        (0..self.dim).flat_map(move |i| {
            (0..i).filter_map(move |j| {
                let v = self.structure(i, j);
                (!is_zero_vector(&self.field, v)).then_some((i, j, v))
            })
        })
    }

    pub fn is_antisymmetric(&self) -> bool {
        let f = &self.field;
        (0..self.dim).all(|i| {
            is_zero_vector(f, self.structure(i, i))
                && (0..i).all(|j| {
                    self.structure(i, j)
                        .iter()
                        .zip(self.structure(j, i))
                        .all(|(a, b)| f.is_zero(&f.add(a, b)))
                })
        })
    }

    /// Jacobiator `[x_i,x_j,x_k] + [x_j,x_k,x_i] + [x_k,x_i,x_j]` on basis
    /// elements, with left-normed triple brackets.
    pub fn jacobiator(&self, i: usize, j: usize, k: usize) -> Vector<F> {
        let f = &self.field;
        let mut out = zero_vector(f, self.dim);
        for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
            for (m, coeff) in self.structure(a, b).iter().enumerate() {
                axpy(f, &mut out, coeff, self.structure(m, c));
            }
        }
        out
    }

    /// Triples `i > j > k` whose Jacobiator is nonzero.
    pub fn jacobi_violations(&self) -> Vec<(usize, usize, usize)> {
        let mut bad = Vec::new();
        for i in 0..self.dim {
            for j in 0..i {
                for k in 0..j {
                    if !is_zero_vector(&self.field, &self.jacobiator(i, j, k)) {
                        bad.push((i, j, k));
                    }
                }
            }
        }
        bad
    }

    pub fn jacobi_check(&self) -> bool {
        self.is_antisymmetric() && self.jacobi_violations().is_empty()
    }

    pub fn whole_space(&self) -> Subspace<F> {
        Subspace::spanned_by(&self.field, self.dim, (0..self.dim).map(|i| self.basis_vector(i)))
    }

    /// `span{ [a, b] : a in A, b in B }`.
    pub fn product(&self, a: &Subspace<F>, b: &Subspace<F>) -> Subspace<F> {
        let mut out = Subspace::zero(&self.field, self.dim);
        for u in a.basis() {
            for v in b.basis() {
                out.insert(self.bracket_unchecked(u, v));
            }
        }
        out
    }

    /// `γ_1 = L ⊇ γ_2 = [L, L] ⊇ ...`, stopping at the first repeat or zero
    /// term (which is included).
    pub fn lower_central_series(&self) -> Vec<Subspace<F>> {
        let whole = self.whole_space();
        let mut series = vec![whole.clone()];
        loop {
            let next = self.product(series.last().expect("nonempty"), &whole);
            let done = next.dim() == 0 || next.dim() == series.last().expect("nonempty").dim();
            series.push(next);
            if done {
                return series;
            }
        }
    }

    pub fn derived_dim(&self) -> usize {
        self.product(&self.whole_space(), &self.whole_space()).dim()
    }

    /// Nilpotency class, or `None` if the lower central series stalls.
    pub fn nilpotency_class(&self) -> Option<usize> {
        let series = self.lower_central_series();
        let last = series.last().expect("nonempty");
        (last.dim() == 0).then(|| series.len() - 1)
    }

    pub fn is_ideal(&self, s: &Subspace<F>) -> bool {
        s.basis().iter().all(|v| {
            (0..self.dim).all(|i| s.contains(&self.bracket_unchecked(v, &self.basis_vector(i))))
        })
    }

    /// Quotient by an ideal. The quotient basis is the ideal's free
    /// coordinates in ascending order; also returns, for each old basis
    /// index, its image in the quotient.
    pub fn quotient(&self, ideal: &Subspace<F>) -> Result<(LieAlgebra<F>, Vec<Vector<F>>)> {
        if !self.is_ideal(ideal) {
            return Err(Error::Precondition("quotient by a non-ideal".into()));
        }
        let free = ideal.free_coordinates();
        let project = |v: &[F::Elem]| -> Vector<F> {
            let r = ideal.reduce(v);
            free.iter().map(|&i| r[i].clone()).collect()
        };
        let n = free.len();
        let mut brackets = Vec::new();
        for a in 0..n {
            for b in 0..a {
                let v = project(self.structure(free[a], free[b]));
                if !is_zero_vector(&self.field, &v) {
                    brackets.push((a, b, v));
                }
            }
        }
        let q = LieAlgebra::from_brackets(&self.field, n, brackets)?;
        let images = (0..self.dim).map(|i| project(&self.basis_vector(i))).collect();
        Ok((q, images))
    }

    /// Quotient by the span of the given basis coordinates.
    pub fn quotient_by_coordinates(&self, coords: &[usize]) -> Result<LieAlgebra<F>> {
        let ideal = Subspace::spanned_by(&self.field, self.dim, coords.iter().map(|&i| self.basis_vector(i)));
        Ok(self.quotient(&ideal)?.0)
    }

    /// Same dimension and identical structure constants.
    pub fn same_structure(&self, other: &LieAlgebra<F>) -> bool {
        self.dim == other.dim && self.table == other.table
    }

    /// A copy with `[x_i, x_j]` replaced (and `[x_j, x_i]` set to its
    /// negative); no Jacobi check.
    pub fn with_bracket(&self, i: usize, j: usize, v: Vector<F>) -> Self {
        let mut out = self.clone();
        out.table[j * self.dim + i] = v.iter().map(|c| self.field.neg(c)).collect();
        out.table[i * self.dim + j] = v;
        out
    }
}
