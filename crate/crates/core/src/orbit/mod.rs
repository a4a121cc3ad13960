//! The action `v -> kBv` of `F_p^* × S` on descendant parameters
//! `v = (λ, μ, ν)`, and three ways to count its orbits: the closed form
//! by residue class, Burnside's lemma over eigenvector counts, and direct
//! enumeration.

mod action;

pub use action::{induced_parameters, sporadic_action_matrix};

use crate::aut::{special_matrices, MatrixSource, SpecialMatrix, SporadicParams};
use crate::diophantine::{count_vp, VpCount};
use crate::error::{Error, Result};
use crate::finite_field::{poly_roots, FpPoly, PrimeField, Residue};
use crate::mat3::Mat3;

/// Default bound on `p` for [`brute_orbits`].
pub const BRUTE_ORBIT_LIMIT: u64 = 61;

#[derive(Debug, Clone)]
pub struct ActionGroup {
    field: PrimeField,
    matrices: Vec<SpecialMatrix>,
}

impl ActionGroup {
    /// The group generated by the scalars and the matrices found by
    /// [`special_matrices`].
    pub fn new(field: &PrimeField) -> Result<Self> {
        Ok(ActionGroup { field: *field, matrices: special_matrices(field)? })
    }

    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    pub fn matrices(&self) -> &[SpecialMatrix] {
        &self.matrices
    }

    pub fn s_size(&self) -> usize {
        self.matrices.len()
    }

    /// `(p - 1)|S|`.
    pub fn order(&self) -> u64 {
        (self.field.modulus() - 1) * self.matrices.len() as u64
    }

    /// Whether every product `B_1 B_2` of matrices in `S` is `k B_3` for
    /// some `B_3` in `S`, so that `F_p^* S` is closed.
    pub fn is_closed_up_to_scalars(&self) -> bool {
        let f = &self.field;
        self.matrices.iter().all(|b1| {
            self.matrices.iter().all(|b2| {
                let prod = b1.matrix.mul(f, &b2.matrix);
                self.matrices.iter().any(|b3| prod.scalar_multiple_of(f, &b3.matrix).is_some())
            })
        })
    }

    /// Distinct elements `kB` of the group, sorted. Only for small `p`.
    pub fn elements(&self) -> Vec<Mat3> {
        let f = &self.field;
        let mut out: Vec<Mat3> = (1..f.modulus())
            .flat_map(|k| self.matrices.iter().map(move |b| b.matrix.scale(f, k)))
            .collect();
        out.sort_unstable_by_key(|m| m.0);
        out.dedup();
        out
    }
}

/// Number of nonzero eigenvectors of `m` with eigenvalue in `F_p`:
/// the sum of `p^dim ker(m - tI) - 1` over the roots `t` of the
/// characteristic polynomial.
pub fn eigenvector_count(m: &Mat3, field: &PrimeField) -> u64 {
    let p = field.modulus();
    poly_roots(&m.charpoly(field), field)
        .into_iter()
        .map(|t| {
            let nullity = 3 - m.sub(field, &Mat3::scalar(t)).rank(field);
            p.pow(nullity as u32) - 1
        })
        .sum()
}

/// `(|G| + Σ_B eigenvector_count(B)) / |G|`: Burnside's lemma, with every
/// `kB` fixing the zero vector and `kB` fixing `v != 0` exactly when `v`
/// is an eigenvector of `B` with eigenvalue `k^-1`.
pub fn burnside_dp(group: &ActionGroup) -> Result<u64> {
    let order = group.order();
    let fixed: u64 = group.matrices.iter().map(|b| eigenvector_count(&b.matrix, &group.field)).sum();
    let total = order + fixed;
    if !total.is_multiple_of(order) {
        return Err(Error::Invariant(format!(
            "Burnside sum {total} is not divisible by |G| = {order} at p = {}",
            group.field.modulus()
        )));
    }
    Ok(total / order)
}

/// Orbits on `F_p^3` by exhaustive search. Each orbit is closed under a
/// primitive-root scalar and the matrices of `S`, which generate the
/// group. Refuses `p > p_max`.
pub fn brute_orbits(group: &ActionGroup, p_max: u64) -> Result<u64> {
    let f = &group.field;
    let p = f.modulus();
    if p > p_max {
        return Err(Error::Refused { what: "brute_orbits", p, bound: p_max });
    }
    let g = f.primitive_root();
    let mut generators = vec![Mat3::scalar(g)];
    generators.extend(group.matrices.iter().map(|b| b.matrix));
    let n = (p * p * p) as usize;
    let index = |v: &[Residue; 3]| (v[0] + p * (v[1] + p * v[2])) as usize;
    let vector = |i: usize| {
        let i = i as u64;
        [i % p, (i / p) % p, i / (p * p)]
    };
    let mut seen = vec![false; n];
    let mut queue = Vec::new();
    let mut orbits = 0;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        orbits += 1;
        seen[start] = true;
        queue.push(start);
        while let Some(i) = queue.pop() {
            let v = vector(i);
            for m in &generators {
                let j = index(&m.mul_vec(f, &v));
                if !seen[j] {
                    seen[j] = true;
                    queue.push(j);
                }
            }
        }
    }
    Ok(orbits)
}

/// The orbit count predicted from `p mod 12` and `V_p`.
pub fn closed_form_dp(p: u64, vp: &VpCount) -> Result<u64> {
    if p < 5 {
        return Err(Error::NotPrime(p));
    }
    if vp.p != p {
        return Err(Error::Precondition(format!("point count is for p = {}, not {p}", vp.p)));
    }
    let exact = |num: u64, den: u64| -> Result<u64> {
        if num.is_multiple_of(den) {
            Ok(num / den)
        } else {
            Err(Error::Invariant(format!("{num}/{den} is not an integer at p = {p}")))
        }
    };
    let (q, r) = (p + 1, p - 1);
    match p % 12 {
        5 => Ok(exact(q * q, 4)? + 3),
        7 => Ok(exact(q * q, 2)? + 2),
        11 => Ok(exact(q * q, 6)? + exact(q, 3)? + 2),
        1 if vp.count == 0 => Ok(exact(q * q, 4)? + 3),
        1 => Ok(exact(r * r, 36)? + exact(r, 3)? + 4),
        _ => Err(Error::NotPrime(p)),
    }
}

/// The three orbit counts at one prime.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DpResult {
    pub p: u64,
    pub closed_form: u64,
    pub burnside: u64,
    /// `None` when the direct count was skipped.
    pub brute: Option<u64>,
    pub group_order: u64,
    pub s_size: usize,
    pub vp: VpCount,
}

impl DpResult {
    pub fn agree(&self) -> bool {
        self.closed_form == self.burnside && self.brute.is_none_or(|b| b == self.closed_form)
    }
}

/// Runs all three counts, the direct one only when `p <= brute_max`.
pub fn compute_dp(field: &PrimeField, brute_max: u64) -> Result<DpResult> {
    let p = field.modulus();
    let vp = count_vp(field);
    let group = ActionGroup::new(field)?;
    let brute = if p <= brute_max { Some(brute_orbits(&group, brute_max)?) } else { None };
    Ok(DpResult {
        p,
        closed_form: closed_form_dp(p, &vp)?,
        burnside: burnside_dp(&group)?,
        brute,
        group_order: group.order(),
        s_size: group.s_size(),
        vp,
    })
}

/// Outcome of [`charpoly_checks`] for one sporadic matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CharpolyCheck {
    /// Which branch: `1`, `-1`, or a square root of `-1`.
    pub u: Residue,
    pub charpoly_ok: bool,
    pub eigenvectors: u64,
    pub expected_eigenvectors: u64,
}

impl CharpolyCheck {
    pub fn holds(&self) -> bool {
        self.charpoly_ok && self.eigenvectors == self.expected_eigenvectors
    }
}

/// Compares the characteristic polynomial of a sporadic action matrix
/// with its predicted factorization, and its eigenvector count with the
/// predicted census.
///
/// With `s = d^3 + 3d`:
/// * `u = 1`: `x^3 - (256/3)(d^3 - d)`, with root `-4s/3`;
/// * `u = -1`: roots `c, c, -c` for `c = 4s/3`;
/// * `u^2 = -1`: roots `-4du + 2s/3`, `4d + 2su/3`, `-4d - 2su/3`.
pub fn charpoly_checks(field: &PrimeField, params: &SporadicParams) -> Result<CharpolyCheck> {
    let f = field;
    let p = f.modulus();
    let m = sporadic_action_matrix(f, params)?;
    let cp = m.charpoly(f);
    let (d, u) = (params.d, params.u);
    let d3 = f.mul(f.mul(d, d), d);
    let s = f.add(d3, f.mul(3, d));
    let third = f.inv(3)?;
    let from_roots = |roots: [Residue; 3]| {
        roots.iter().fold(FpPoly::one(), |acc, &r| acc.mul(f, &FpPoly::linear(f, f.neg(r))))
    };
    let (charpoly_ok, expected) = if u == 1 {
        let c0 = f.neg(f.mul(f.mul(256, third), f.sub(d3, d)));
        let target = FpPoly::from_residues(vec![c0, 0, 0, 1]);
        let root = f.neg(f.mul(f.mul(4, third), s));
        let expected = match p % 12 {
            11 => p - 1,
            1 => 3 * p - 3,
            _ => return Err(Error::Precondition(format!("no sporadic matrices expected at p = {p}"))),
        };
        (cp == target && cp.eval(f, root) == 0, expected)
    } else if u == p - 1 {
        let c = f.mul(f.mul(4, third), s);
        (cp == from_roots([c, c, f.neg(c)]), p * p + p - 2)
    } else {
        let two_s = f.mul(f.mul(2, third), s);
        let four_d = f.mul(4, d);
        let roots = [
            f.add(f.neg(f.mul(four_d, u)), two_s),
            f.add(four_d, f.mul(two_s, u)),
            f.sub(f.neg(four_d), f.mul(two_s, u)),
        ];
        (cp == from_roots(roots), 3 * p - 3)
    };
    Ok(CharpolyCheck { u, charpoly_ok, eigenvectors: eigenvector_count(&m, f), expected_eigenvectors: expected })
}

/// [`charpoly_checks`] over every sporadic matrix of the group.
pub fn all_charpoly_checks(group: &ActionGroup) -> Result<Vec<CharpolyCheck>> {
    group
        .matrices
        .iter()
        .filter_map(|b| match b.source {
            MatrixSource::Sporadic(params) => Some(charpoly_checks(&group.field, &params)),
            MatrixSource::Diagonal { .. } => None,
        })
        .collect()
}
