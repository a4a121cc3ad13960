//! Exact linear algebra over any [`Field`]: echelon forms, subspaces and
//! kernels. Plain Gaussian elimination with first-nonzero pivoting.

use crate::field::Field;

/// A coordinate vector over `F`.
pub type Vector<F> = Vec<<F as Field>::Elem>;

pub fn zero_vector<F: Field>(field: &F, n: usize) -> Vector<F> {
    vec![field.zero(); n]
}

pub fn unit_vector<F: Field>(field: &F, n: usize, i: usize) -> Vector<F> {
    let mut v = zero_vector(field, n);
    v[i] = field.one();
    v
}

pub fn is_zero_vector<F: Field>(field: &F, v: &[F::Elem]) -> bool {
    v.iter().all(|c| field.is_zero(c))
}

pub fn add_vectors<F: Field>(field: &F, a: &[F::Elem], b: &[F::Elem]) -> Vector<F> {
    a.iter().zip(b).map(|(x, y)| field.add(x, y)).collect()
}

pub fn sub_vectors<F: Field>(field: &F, a: &[F::Elem], b: &[F::Elem]) -> Vector<F> {
    a.iter().zip(b).map(|(x, y)| field.sub(x, y)).collect()
}

pub fn scale_vector<F: Field>(field: &F, c: &F::Elem, v: &[F::Elem]) -> Vector<F> {
    v.iter().map(|x| field.mul(c, x)).collect()
}

/// `acc += c * v`.
pub fn axpy<F: Field>(field: &F, acc: &mut [F::Elem], c: &F::Elem, v: &[F::Elem]) {
    if field.is_zero(c) {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        field.mul_add_assign(a, c, x);
    }
}

/// A subspace of `F^n` held as a reduced row-echelon basis.
///
/// Pivots are chosen in `priority` order: with the default ascending order
/// each basis row is led by its lowest coordinate; a descending priority
/// makes the highest coordinates the pivots instead.
#[derive(Debug, Clone)]
pub struct Subspace<F: Field> {
    field: F,
    ambient: usize,
    priority: Vec<usize>,
    rows: Vec<Vector<F>>,
    pivots: Vec<usize>,
}

impl<F: Field> Subspace<F> {
    pub fn zero(field: &F, ambient: usize) -> Self {
        Self::with_priority(field, ambient, (0..ambient).collect())
    }

    pub fn with_priority(field: &F, ambient: usize, priority: Vec<usize>) -> Self {
        debug_assert_eq!(priority.len(), ambient);
        Subspace {
            field: field.clone(),
            ambient,
            priority,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn spanned_by<I>(field: &F, ambient: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = Vector<F>>,
    {
        let mut s = Self::zero(field, ambient);
        for v in vectors {
            s.insert(v);
        }
        s
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &[Vector<F>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `v` against the basis; the result vanishes on every pivot.
    pub fn reduce(&self, v: &[F::Elem]) -> Vector<F> {
        let mut w = v.to_vec();
        for (row, &piv) in self.rows.iter().zip(&self.pivots) {
            if !self.field.is_zero(&w[piv]) {
                let c = self.field.neg(&w[piv]);
                axpy(&self.field, &mut w, &c, row);
            }
        }
        w
    }

    pub fn contains(&self, v: &[F::Elem]) -> bool {
        is_zero_vector(&self.field, &self.reduce(v))
    }

    /// Adds `v` to the spanning set; returns whether the dimension grew.
    pub fn insert(&mut self, v: Vector<F>) -> bool {
        assert_eq!(v.len(), self.ambient, "vector length");
        let w = self.reduce(&v);
        let Some(&piv) = self.priority.iter().find(|&&i| !self.field.is_zero(&w[i])) else {
            return false;
        };
        let inv = self.field.inv(&w[piv]).expect("pivot is nonzero");
        let w = scale_vector(&self.field, &inv, &w);
        for row in &mut self.rows {
            if !self.field.is_zero(&row[piv]) {
                let c = self.field.neg(&row[piv]);
                axpy(&self.field, row, &c, &w);
            }
        }
        self.rows.push(w);
        self.pivots.push(piv);
        true
    }

    /// Coordinates outside the pivot set, ascending. These index a basis of
    /// the quotient `F^n / self`.
    pub fn free_coordinates(&self) -> Vec<usize> {
        (0..self.ambient).filter(|i| !self.pivots.contains(i)).collect()
    }

    pub fn is_subspace_of(&self, other: &Subspace<F>) -> bool {
        self.rows.iter().all(|r| other.contains(r))
    }

    pub fn equals(&self, other: &Subspace<F>) -> bool {
        self.dim() == other.dim() && self.is_subspace_of(other)
    }
}

/// Rank of the matrix whose rows are `rows`.
pub fn rank<F: Field>(field: &F, rows: &[Vector<F>]) -> usize {
    let Some(first) = rows.first() else {
        return 0;
    };
    Subspace::spanned_by(field, first.len(), rows.iter().cloned()).dim()
}

/// Basis of `{ x : sum_j rows[i][j] * x[j] = 0 for all i }`.
pub fn kernel<F: Field>(field: &F, rows: &[Vector<F>], ncols: usize) -> Vec<Vector<F>> {
    let echelon = Subspace::spanned_by(field, ncols, rows.iter().cloned());
    echelon
        .free_coordinates()
        .into_iter()
        .map(|free| {
            let mut x = unit_vector(field, ncols, free);
            for (row, &piv) in echelon.basis().iter().zip(echelon.pivots()) {
                x[piv] = field.neg(&row[free]);
            }
            x
        })
        .collect()
}

/// Determinant by elimination.
pub fn determinant<F: Field>(field: &F, rows: &[Vector<F>]) -> F::Elem {
    let n = rows.len();
    let mut m: Vec<Vector<F>> = rows.to_vec();
    let mut det = field.one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !field.is_zero(&m[r][col])) else {
            return field.zero();
        };
        if piv != col {
            m.swap(piv, col);
            det = field.neg(&det);
        }
        det = field.mul(&det, &m[col][col]);
        let inv = field.inv(&m[col][col]).expect("pivot is nonzero");
        for r in col + 1..n {
            if field.is_zero(&m[r][col]) {
                continue;
            }
            let c = field.neg(&field.mul(&m[r][col], &inv));
            let pivot_row = m[col].clone();
            axpy(field, &mut m[r], &c, &pivot_row);
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{PrimeField, Rationals};
    use num_rational::BigRational;

    fn fp() -> PrimeField {
        PrimeField::new(7).unwrap()
    }

    fn v(xs: &[i64]) -> Vec<u64> {
        xs.iter().map(|&x| fp().elem(x)).collect()
    }

    #[test]
    fn rank_and_kernel() {
        let f = fp();
        let rows = vec![v(&[1, 2, 3]), v(&[2, 4, 6]), v(&[0, 1, 1])];
        assert_eq!(rank(&f, &rows), 2);
        let k = kernel(&f, &rows, 3);
        assert_eq!(k.len(), 1);
        for row in &rows {
            let dot = row.iter().zip(&k[0]).fold(0, |a, (x, y)| f.add(a, f.mul(*x, *y)));
            assert_eq!(dot, 0);
        }
    }

    #[test]
    fn descending_priority_pivots_on_high_coordinates() {
        let f = fp();
        let mut s = Subspace::with_priority(&f, 3, vec![2, 1, 0]);
        s.insert(v(&[1, 0, -1]));
        assert_eq!(s.pivots(), &[2]);
        assert_eq!(s.free_coordinates(), vec![0, 1]);
        assert_eq!(s.reduce(&v(&[0, 0, 1])), v(&[1, 0, 0]));
    }

    #[test]
    fn determinant_matches_cofactor_expansion() {
        let f = fp();
        let m = vec![v(&[2, 0, 1]), v(&[1, 3, 2]), v(&[1, 1, 1])];
        // 2(3-2) - 0 + 1(1-3) = 0
        assert_eq!(determinant(&f, &m), 0);
        let m = vec![v(&[2, 0, 1]), v(&[1, 3, 2]), v(&[1, 1, 4])];
        // 2(12-2) + 1(1-3) = 18 = 4 mod 7
        assert_eq!(determinant(&f, &m), 4);
    }

    #[test]
    fn rational_kernel() {
        let q = Rationals::new();
        let r = |n: i64, d: i64| BigRational::new(n.into(), d.into());
        let rows = vec![vec![r(1, 2), r(1, 3)], vec![r(3, 2), r(1, 1)]];
        let k = kernel(&q, &rows, 2);
        assert_eq!(k, vec![vec![r(-2, 3), r(1, 1)]]);
    }
}
