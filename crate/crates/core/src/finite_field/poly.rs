//! Dense univariate polynomials over `F_p` and their roots.

use super::{PrimeField, Residue};

/// Below this modulus `poly_roots` simply evaluates at every residue.
const SCAN_LIMIT: u64 = 1 << 10;

/// A polynomial over `F_p`, coefficients lowest degree first, with no
/// trailing zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FpPoly {
    coeffs: Vec<Residue>,
}

impl FpPoly {
    /// Builds a polynomial from signed integer coefficients (lowest degree
    /// first), reducing them into `F_p`.
    pub fn from_i64(field: &PrimeField, coeffs: &[i64]) -> Self {
        Self::from_residues(coeffs.iter().map(|&c| field.elem(c)).collect())
    }

    pub fn from_residues(mut coeffs: Vec<Residue>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        FpPoly { coeffs }
    }

    pub fn zero() -> Self {
        FpPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        FpPoly { coeffs: vec![1] }
    }

    /// `x + a`.
    pub fn linear(field: &PrimeField, a: Residue) -> Self {
        Self::from_residues(vec![field.reduce(a), 1])
    }

    pub fn coeffs(&self) -> &[Residue] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Residue {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn eval(&self, field: &PrimeField, x: Residue) -> Residue {
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| field.add(field.mul(acc, x), c))
    }

    pub fn add(&self, field: &PrimeField, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let get = |v: &[Residue], i: usize| v.get(i).copied().unwrap_or(0);
        Self::from_residues(
            (0..n)
                .map(|i| field.add(get(&self.coeffs, i), get(&other.coeffs, i)))
                .collect(),
        )
    }

    pub fn sub(&self, field: &PrimeField, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let get = |v: &[Residue], i: usize| v.get(i).copied().unwrap_or(0);
        Self::from_residues(
            (0..n)
                .map(|i| field.sub(get(&self.coeffs, i), get(&other.coeffs, i)))
                .collect(),
        )
    }

    pub fn mul(&self, field: &PrimeField, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = field.add(out[i + j], field.mul(a, b));
            }
        }
        Self::from_residues(out)
    }

    /// Quotient and remainder by a nonzero divisor.
    pub fn div_rem(&self, field: &PrimeField, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead_inv = field
            .inv(divisor.leading())
            .expect("leading coefficient is nonzero");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![0; rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = field.mul(rem[k + dd], lead_inv);
            quot[k] = c;
            if c == 0 {
                continue;
            }
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = field.sub(rem[k + j], field.mul(c, d));
            }
        }
        rem.truncate(dd);
        (Self::from_residues(quot), Self::from_residues(rem))
    }

    pub fn rem(&self, field: &PrimeField, divisor: &Self) -> Self {
        self.div_rem(field, divisor).1
    }

    pub fn monic(&self, field: &PrimeField) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let inv = field.inv(self.leading()).expect("nonzero leading coefficient");
        Self::from_residues(self.coeffs.iter().map(|&c| field.mul(c, inv)).collect())
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, field: &PrimeField, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(field, &b);
            a = b;
            b = r;
        }
        a.monic(field)
    }

    /// `self^exp mod modulus`.
    pub fn pow_mod(&self, field: &PrimeField, mut exp: u64, modulus: &Self) -> Self {
        let mut base = self.rem(field, modulus);
        let mut acc = Self::one().rem(field, modulus);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(field, &base).rem(field, modulus);
            }
            base = base.mul(field, &base).rem(field, modulus);
            exp >>= 1;
        }
        acc
    }
}

/// The distinct roots of a nonzero polynomial, ascending.
///
/// Small fields are scanned exhaustively. Otherwise the squarefree split
/// part `gcd(f, x^p - x)` is separated into linear factors by deterministic
/// equal-degree splitting with `gcd(g, (x + a)^((p-1)/2) - 1)` for
/// `a = 0, 1, 2, ...`.
pub fn poly_roots(f: &FpPoly, field: &PrimeField) -> Vec<Residue> {
    assert!(!f.is_zero(), "poly_roots of the zero polynomial");
    let p = field.modulus();
    if f.degree() == Some(0) {
        return Vec::new();
    }
    if p < SCAN_LIMIT {
        return (0..p).filter(|&x| f.eval(field, x) == 0).collect();
    }
    let f = f.monic(field);
    let x = FpPoly::linear(field, 0);
    let xp = x.pow_mod(field, p, &f);
    let split = f.gcd(field, &xp.sub(field, &x));
    let mut roots = Vec::new();
    split_linear(&split, field, 0, &mut roots);
    roots.sort_unstable();
    roots
}

/// Collects the roots of `g`, a monic product of distinct linear factors.
fn split_linear(g: &FpPoly, field: &PrimeField, mut shift: u64, roots: &mut Vec<Residue>) {
    match g.degree() {
        None | Some(0) => return,
        Some(1) => {
            roots.push(field.neg(g.coeffs()[0]));
            return;
        }
        _ => {}
    }
    let half = (field.modulus() - 1) / 2;
    loop {
        let h = FpPoly::linear(field, shift)
            .pow_mod(field, half, g)
            .sub(field, &FpPoly::one());
        let d = g.gcd(field, &h);
        shift += 1;
        let dd = d.degree().unwrap_or(0);
        if dd > 0 && Some(dd) < g.degree() {
            let (q, _) = g.div_rem(field, &d);
            split_linear(&d, field, shift, roots);
            split_linear(&q.monic(field), field, shift, roots);
            return;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn quartic(fp: &PrimeField) -> FpPoly {
        FpPoly::from_i64(fp, &[-3, 0, 6, 0, 1])
    }

    fn octic(fp: &PrimeField) -> FpPoly {
        FpPoly::from_i64(fp, &[-48, 0, 0, 0, 360, 0, 0, 0, 1])
    }

    #[test]
    fn rootless_at_thirteen() {
        let fp = f(13);
        assert!(poly_roots(&quartic(&fp), &fp).is_empty());
        assert!(poly_roots(&octic(&fp), &fp).is_empty());
    }

    #[test]
    fn x_squared_minus_one() {
        let fp = f(11);
        assert_eq!(poly_roots(&FpPoly::from_i64(&fp, &[-1, 0, 1]), &fp), vec![1, 10]);
    }

    #[test]
    fn splitting_path_matches_scan() {
        let cubic = [6, -11, 6, -1]; // -(x-1)(x-2)(x-3)
        for p in crate::finite_field::primes_in_range(1024, 10_000) {
            let fp = f(p);
            for poly in [quartic(&fp), octic(&fp), FpPoly::from_i64(&fp, &cubic)] {
                let got = poly_roots(&poly, &fp);
                let want: Vec<u64> = (0..p).filter(|&x| poly.eval(&fp, x) == 0).collect();
                assert_eq!(got, want, "p = {p}, poly = {poly:?}");
            }
        }
    }

    #[test]
    fn repeated_roots_are_reported_once() {
        let fp = f(1_000_003);
        // (x - 5)^3 (x + 7)
        let lin = |a: i64| FpPoly::from_i64(&fp, &[a, 1]);
        let poly = lin(-5).mul(&fp, &lin(-5)).mul(&fp, &lin(-5)).mul(&fp, &lin(7));
        assert_eq!(poly_roots(&poly, &fp), vec![5, 1_000_003 - 7]);
    }

    #[test]
    fn roots_at_large_primes_evaluate_to_zero() {
        for p in [1_000_033u64, 2_147_483_647, 4_294_967_311] {
            let fp = f(p);
            for poly in [quartic(&fp), octic(&fp)] {
                for r in poly_roots(&poly, &fp) {
                    assert_eq!(poly.eval(&fp, r), 0);
                }
            }
        }
    }

    #[test]
    fn division_identity() {
        let fp = f(101);
        let a = FpPoly::from_i64(&fp, &[3, 1, 4, 1, 5, 9, 2, 6]);
        let b = FpPoly::from_i64(&fp, &[2, 7, 1, 8]);
        let (q, r) = a.div_rem(&fp, &b);
        assert_eq!(q.mul(&fp, &b).add(&fp, &r), a);
        assert!(r.degree() < b.degree());
    }
}
