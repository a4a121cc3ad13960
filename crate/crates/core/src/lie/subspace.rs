//! Abelian subspaces of `V = span(x_1..x_6)` in `L_p`.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::finite_field::PrimeField;
use crate::linalg::{kernel, Subspace, Vector};

use super::families::build_lp;
use super::LieAlgebra;

/// Default bound for [`abelian_3subspaces`]; the number of 3-subspaces of
/// `F_p^6` grows like `p^9`.
pub const ABELIAN_SUBSPACE_LIMIT: u64 = 7;

/// `C_V(u) = { v in V : [u, v] = 0 }`, as a subspace of `F^6` (coordinates
/// on `x_1..x_6`).
pub fn centralizer_in_v<F: Field>(lp: &LieAlgebra<F>, u: &[F::Elem]) -> Result<Subspace<F>> {
    if u.len() != 6 {
        return Err(Error::DimensionMismatch { expected: 6, got: u.len() });
    }
    let f = lp.field();
    let mut full = u.to_vec();
    full.resize(lp.dim(), f.zero());
    // column i of the system is [u, x_i]
    let cols: Vec<Vector<F>> = (0..6).map(|i| lp.bracket(&full, &lp.basis_vector(i))).collect::<Result<_>>()?;
    let rows: Vec<Vector<F>> = (0..lp.dim()).map(|k| cols.iter().map(|c| c[k].clone()).collect()).collect();
    Ok(Subspace::spanned_by(f, 6, kernel(f, &rows, 6)))
}

/// All 3-dimensional subspaces of `V` on which the bracket vanishes, as
/// reduced row-echelon bases, enumerated by pivot pattern.
pub fn abelian_3subspaces(field: &PrimeField, limit_p: u64) -> Result<Vec<[Vec<u64>; 3]>> {
    let p = field.modulus();
    if p > limit_p {
        return Err(Error::Refused { what: "abelian_3subspaces", p, bound: limit_p });
    }
    let lp = build_lp(field);
    // Bilinear form table: [x_i, x_j] for i, j < 6, restricted to x_7..x_9.
    let mut table = [[[0u64; 3]; 6]; 6];
    for (i, row) in table.iter_mut().enumerate() {
        for (j, out) in row.iter_mut().enumerate() {
            let s = lp.structure(i, j);
            out.copy_from_slice(&s[6..9]);
        }
    }
    let bracket = |u: &[u64], v: &[u64]| -> bool {
        let mut acc = [0u64; 3];
        for i in 0..6 {
            if u[i] == 0 {
                continue;
            }
            for j in 0..6 {
                if v[j] == 0 || i == j {
                    continue;
                }
                let c = field.mul(u[i], v[j]);
                for k in 0..3 {
                    acc[k] = field.add(acc[k], field.mul(c, table[i][j][k]));
                }
            }
        }
        acc == [0; 3]
    };

    let mut out = Vec::new();
    for a in 0..6 {
        for b in a + 1..6 {
            for c in b + 1..6 {
                let pivots = [a, b, c];
                let rows: Vec<Vec<Vec<u64>>> = pivots.iter().map(|&piv| echelon_rows(p, piv, &pivots)).collect();
                for r1 in &rows[0] {
                    for r2 in &rows[1] {
                        if !bracket(r1, r2) {
                            continue;
                        }
                        for r3 in &rows[2] {
                            if bracket(r1, r3) && bracket(r2, r3) {
                                out.push([r1.clone(), r2.clone(), r3.clone()]);
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// All rows of length 6 with a 1 at `pivot`, zeros before it and at the
/// other pivots, and free entries elsewhere.
fn echelon_rows(p: u64, pivot: usize, pivots: &[usize; 3]) -> Vec<Vec<u64>> {
    let free: Vec<usize> = (pivot + 1..6).filter(|i| !pivots.contains(i)).collect();
    let count = p.pow(free.len() as u32);
    (0..count)
        .map(|mut n| {
            let mut row = vec![0; 6];
            row[pivot] = 1;
            for &i in &free {
                row[i] = n % p;
                n /= p;
            }
            row
        })
        .collect()
}

/// `span(αx_1 + βx_4, αx_2 + βx_5, αx_3 + βx_6)`.
pub fn diagonal_subspace(field: &PrimeField, alpha: u64, beta: u64) -> Subspace<PrimeField> {
    Subspace::spanned_by(
        field,
        6,
        (0..3).map(|i| {
            let mut v = vec![0; 6];
            v[i] = alpha;
            v[i + 3] = beta;
            v
        }),
    )
}
