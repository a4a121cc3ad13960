//! Exhaustive search for the automorphisms of `L_p` that preserve both
//! blocks `span(x_1, x_2, x_3)` and `span(x_4, x_5, x_6)`.
//!
//! For a fixed first block `A`, the conditions on the second block `B` are
//! linear, so `B` is found by solving rather than guessed. Rows of `A` that
//! must have a nonzero centralizer in the other block are filtered first,
//! which cuts `GL(3, 7)` down to under a million candidates.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::finite_field::{PrimeField, Residue};
use crate::lie::build_lp;
use crate::linalg::kernel;
use crate::mat3::Mat3;

use super::{verify_automorphism, BlockAut, Provenance};

/// Default bound on `p` for [`brute_force_h`].
pub const H_SEARCH_LIMIT: u64 = 7;

#[derive(Debug, Clone)]
pub struct HSearch {
    pub count: usize,
    /// `(A, B)` pairs, sorted.
    pub elements: Vec<(Mat3, Mat3)>,
}

/// `[v . (x_4, x_5, x_6), w . (x_1, x_2, x_3)]` as coordinates on
/// `x_7, x_8, x_9`.
struct CrossBracket {
    /// `t[i][j] = [x_{4+i}, x_{1+j}]`.
    t: [[[Residue; 3]; 3]; 3],
}

impl CrossBracket {
    fn eval(&self, f: &PrimeField, v: &[Residue; 3], w: &[Residue; 3]) -> [Residue; 3] {
        let mut out = [0; 3];
        for i in 0..3 {
            for j in 0..3 {
                let c = f.mul(v[i], w[j]);
                if c == 0 {
                    continue;
                }
                for k in 0..3 {
                    out[k] = f.add(out[k], f.mul(c, self.t[i][j][k]));
                }
            }
        }
        out
    }
}

fn all_vectors(p: u64) -> impl Iterator<Item = [Residue; 3]> {
    (0..p * p * p).map(move |n| [n % p, (n / p) % p, n / (p * p)])
}

/// Every pair `(A, B)` of invertible matrices for which
/// `x_i -> A_i . (x_1, x_2, x_3)`, `x_{3+i} -> B_i . (x_4, x_5, x_6)` is an
/// automorphism of `L_p`. Refuses `p > p_max`.
pub fn brute_force_h(field: &PrimeField, p_max: u64) -> Result<HSearch> {
    let p = field.modulus();
    if p > p_max {
        return Err(Error::Refused { what: "brute_force_h", p, bound: p_max });
    }
    let f = *field;
    let lp = build_lp(field);
    let mut t = [[[0; 3]; 3]; 3];
    for (i, ti) in t.iter_mut().enumerate() {
        for (j, tij) in ti.iter_mut().enumerate() {
            let s = lp.structure(3 + i, j);
            if s[..6].iter().any(|&c| c != 0) || s.len() != 9 {
                return Err(Error::Invariant("cross brackets must land in span(x7, x8, x9)".into()));
            }
            tij.copy_from_slice(&s[6..9]);
        }
    }
    let br = CrossBracket { t };

    // Conditions: [θx_{4+i}, θx_{1+j}] = Σ_k t[i][j][k] θx_{7+k} where
    // θx_{7+k} = [θx_4, θx_{1+k}]; trivial for i = 0.
    // If [x_{4+i}, x_{1+j}] = 0 then row i of B lies in the centralizer of
    // row j of A, so that row of A needs a nonzero centralizer.
    let zero_pairs: Vec<(usize, usize)> = (1..3)
        .flat_map(|i| (0..3).map(move |j| (i, j)))
        .filter(|&(i, j)| br.t[i][j] == [0; 3])
        .collect();
    let has_centralizer = |w: &[Residue; 3]| -> bool {
        let cols: Vec<[Residue; 3]> = (0..3)
            .map(|i| {
                let mut v = [0; 3];
                v[i] = 1;
                br.eval(&f, &v, w)
            })
            .collect();
        Mat3(cols.try_into().expect("three columns")).det(&f) == 0
    };
    let needs_centralizer: Vec<bool> = (0..3).map(|j| zero_pairs.iter().any(|&(_, jj)| jj == j)).collect();
    let candidates: Vec<Vec<[Residue; 3]>> = (0..3)
        .map(|j| {
            all_vectors(p)
                .filter(|w| *w != [0; 3])
                .filter(|w| !needs_centralizer[j] || has_centralizer(w))
                .collect()
        })
        .collect();

    let mut elements: Vec<(Mat3, Mat3)> = candidates[0]
        .par_iter()
        .flat_map_iter(|r0| {
            let mut found = Vec::new();
            for r1 in &candidates[1] {
                for r2 in &candidates[2] {
                    let a = Mat3([*r0, *r1, *r2]);
                    if !a.is_invertible(&f) {
                        continue;
                    }
                    for b in solve_second_block(&f, &br, &a) {
                        let m = BlockAut::from_blocks(&f, &a, &b, Provenance::Blocks).expect("both blocks invertible");
                        if verify_automorphism(&lp, &m) {
                            found.push((a, b));
                        }
                    }
                }
            }
            found
        })
        .collect();
    elements.sort_unstable_by_key(|(a, b)| (a.0, b.0));
    Ok(HSearch { count: elements.len(), elements })
}

/// All invertible `B` satisfying the linear conditions for the given `A`.
fn solve_second_block(f: &PrimeField, br: &CrossBracket, a: &Mat3) -> Vec<Mat3> {
    // Unknown vector: B row-major, 9 entries. Each condition
    // [B_i, A_j] - Σ_k t[i][j][k] [B_0, A_k] = 0 gives three equations.
    let mut rows: Vec<Vec<Residue>> = Vec::with_capacity(18);
    for i in 1..3 {
        for j in 0..3 {
            let mut eqs = vec![vec![0; 9]; 3];
            for col in 0..3 {
                let mut e = [0; 3];
                e[col] = 1;
                let direct = br.eval(f, &e, &a.row(j));
                for (c, eq) in eqs.iter_mut().enumerate() {
                    eq[3 * i + col] = f.add(eq[3 * i + col], direct[c]);
                }
                for k in 0..3 {
                    let coeff = br.t[i][j][k];
                    if coeff == 0 {
                        continue;
                    }
                    let via = br.eval(f, &e, &a.row(k));
                    for (c, eq) in eqs.iter_mut().enumerate() {
                        eq[col] = f.sub(eq[col], f.mul(coeff, via[c]));
                    }
                }
            }
            rows.extend(eqs);
        }
    }
    let basis = kernel(f, &rows, 9);
    let p = f.modulus();
    let total = p.pow(basis.len() as u32);
    let mut out = Vec::new();
    for mut n in 0..total {
        let mut v = [0; 9];
        for b in &basis {
            let c = n % p;
            n /= p;
            for (x, y) in v.iter_mut().zip(b) {
                *x = f.add(*x, f.mul(c, *y));
            }
        }
        let m = Mat3([[v[0], v[1], v[2]], [v[3], v[4], v[5]], [v[6], v[7], v[8]]]);
        if m.is_invertible(f) {
            out.push(m);
        }
    }
    out
}
