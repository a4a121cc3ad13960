//! 3×3 matrices over `F_p`, used for the action on descendant parameters
//! and for the diagonal blocks of automorphisms.

use crate::finite_field::{FpPoly, PrimeField, Residue};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Mat3(pub [[Residue; 3]; 3]);

impl Mat3 {
    pub const ZERO: Mat3 = Mat3([[0; 3]; 3]);

    pub fn identity() -> Self {
        Mat3([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    }

    pub fn diag(a: Residue, b: Residue, c: Residue) -> Self {
        Mat3([[a, 0, 0], [0, b, 0], [0, 0, c]])
    }

    pub fn scalar(k: Residue) -> Self {
        Self::diag(k, k, k)
    }

    /// Reduces signed entries into `F_p`.
    pub fn from_i64(field: &PrimeField, m: [[i64; 3]; 3]) -> Self {
        Mat3(m.map(|row| row.map(|x| field.elem(x))))
    }

    pub fn rows(&self) -> &[[Residue; 3]; 3] {
        &self.0
    }

    pub fn row(&self, i: usize) -> [Residue; 3] {
        self.0[i]
    }

    pub fn mul(&self, field: &PrimeField, other: &Mat3) -> Mat3 {
        let mut out = [[0; 3]; 3];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, x) in row.iter_mut().enumerate() {
                *x = (0..3).fold(0, |acc, k| field.add(acc, field.mul(self.0[i][k], other.0[k][j])));
            }
        }
        Mat3(out)
    }

    pub fn mul_vec(&self, field: &PrimeField, v: &[Residue; 3]) -> [Residue; 3] {
        self.0.map(|row| (0..3).fold(0, |acc, k| field.add(acc, field.mul(row[k], v[k]))))
    }

    pub fn scale(&self, field: &PrimeField, k: Residue) -> Mat3 {
        Mat3(self.0.map(|row| row.map(|x| field.mul(k, x))))
    }

    pub fn sub(&self, field: &PrimeField, other: &Mat3) -> Mat3 {
        let mut out = self.0;
        for (i, row) in out.iter_mut().enumerate() {
            for (j, x) in row.iter_mut().enumerate() {
                *x = field.sub(*x, other.0[i][j]);
            }
        }
        Mat3(out)
    }

    pub fn transpose(&self) -> Mat3 {
        let m = &self.0;
        Mat3(std::array::from_fn(|i| std::array::from_fn(|j| m[j][i])))
    }

    pub fn trace(&self, field: &PrimeField) -> Residue {
        field.add(field.add(self.0[0][0], self.0[1][1]), self.0[2][2])
    }

    pub fn det(&self, field: &PrimeField) -> Residue {
        let m = &self.0;
        let minor = |a: usize, b: usize, c: usize, d: usize| {
            field.sub(field.mul(m[1][a], m[2][b]), field.mul(m[1][c], m[2][d]))
        };
        let t0 = field.mul(m[0][0], minor(1, 2, 2, 1));
        let t1 = field.mul(m[0][1], minor(0, 2, 2, 0));
        let t2 = field.mul(m[0][2], minor(0, 1, 1, 0));
        field.add(field.sub(t0, t1), t2)
    }

    pub fn is_invertible(&self, field: &PrimeField) -> bool {
        self.det(field) != 0
    }

    /// Sum of the principal 2×2 minors.
    fn minor_sum(&self, field: &PrimeField) -> Residue {
        let m = &self.0;
        let pm = |i: usize, j: usize| field.sub(field.mul(m[i][i], m[j][j]), field.mul(m[i][j], m[j][i]));
        field.add(field.add(pm(0, 1), pm(0, 2)), pm(1, 2))
    }

    /// `det(xI - M)`, monic of degree 3.
    pub fn charpoly(&self, field: &PrimeField) -> FpPoly {
        FpPoly::from_residues(vec![
            field.neg(self.det(field)),
            self.minor_sum(field),
            field.neg(self.trace(field)),
            1,
        ])
    }

    pub fn rank(&self, field: &PrimeField) -> usize {
        let mut m = self.0;
        let mut rank = 0;
        for col in 0..3 {
            let Some(piv) = (rank..3).find(|&r| m[r][col] != 0) else {
                continue;
            };
            m.swap(rank, piv);
            let inv = field.inv(m[rank][col]).expect("pivot is nonzero");
            for r in 0..3 {
                if r != rank && m[r][col] != 0 {
                    let c = field.mul(m[r][col], inv);
                    for k in 0..3 {
                        m[r][k] = field.sub(m[r][k], field.mul(c, m[rank][k]));
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    pub fn inverse(&self, field: &PrimeField) -> Option<Mat3> {
        let det = self.det(field);
        let det_inv = field.inv(det).ok()?;
        let m = &self.0;
        let cof = |i: usize, j: usize| {
            let r: Vec<usize> = (0..3).filter(|&x| x != i).collect();
            let c: Vec<usize> = (0..3).filter(|&x| x != j).collect();
            let v = field.sub(field.mul(m[r[0]][c[0]], m[r[1]][c[1]]), field.mul(m[r[0]][c[1]], m[r[1]][c[0]]));
            if (i + j).is_multiple_of(2) {
                v
            } else {
                field.neg(v)
            }
        };
        // adjugate is the transposed cofactor matrix
        Some(Mat3(std::array::from_fn(|i| std::array::from_fn(|j| field.mul(cof(j, i), det_inv)))))
    }

    /// Whether `self = k * other` for some nonzero scalar `k`, which is
    /// returned.
    pub fn scalar_multiple_of(&self, field: &PrimeField, other: &Mat3) -> Option<Residue> {
        let (i, j) = (0..9).map(|n| (n / 3, n % 3)).find(|&(i, j)| other.0[i][j] != 0)?;
        let k = field.div(self.0[i][j], other.0[i][j]).ok()?;
        (k != 0 && other.scale(field, k) == *self).then_some(k)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn fp() -> PrimeField {
        PrimeField::new(13).unwrap()
    }

    fn arb_mat() -> impl Strategy<Value = Mat3> {
        proptest::array::uniform3(proptest::array::uniform3(0u64..13)).prop_map(Mat3)
    }

    #[test]
    fn determinant_and_rank() {
        let f = fp();
        let m = Mat3::from_i64(&f, [[1, 2, 3], [4, 5, 6], [7, 8, 9]]);
        assert_eq!(m.det(&f), 0);
        assert_eq!(m.rank(&f), 2);
        assert_eq!(Mat3::identity().rank(&f), 3);
        assert_eq!(Mat3::ZERO.rank(&f), 0);
        let m = Mat3::from_i64(&f, [[2, 0, 1], [1, 3, 2], [1, 1, 4]]);
        assert_eq!(m.det(&f), 18 % 13);
    }

    #[test]
    fn charpoly_of_a_diagonal_matrix() {
        let f = fp();
        // (x-1)(x-2)(x-3) = x^3 - 6x^2 + 11x - 6
        let cp = Mat3::diag(1, 2, 3).charpoly(&f);
        assert_eq!(cp, FpPoly::from_i64(&f, &[-6, 11, -6, 1]));
    }

    proptest! {
        #[test]
        fn inverse_is_two_sided(m in arb_mat()) {
            let f = fp();
            match m.inverse(&f) {
                Some(inv) => {
                    prop_assert_eq!(m.mul(&f, &inv), Mat3::identity());
                    prop_assert_eq!(inv.mul(&f, &m), Mat3::identity());
                }
                None => prop_assert_eq!(m.det(&f), 0),
            }
        }

        #[test]
        fn determinant_is_multiplicative(a in arb_mat(), b in arb_mat()) {
            let f = fp();
            prop_assert_eq!(a.mul(&f, &b).det(&f), f.mul(a.det(&f), b.det(&f)));
        }

        #[test]
        fn charpoly_vanishes_on_eigen_relation(m in arb_mat(), t in 0u64..13) {
            let f = fp();
            let shifted = Mat3::scalar(t).sub(&f, &m);
            prop_assert_eq!(m.charpoly(&f).eval(&f, t), shifted.det(&f));
        }
    }
}
