//! Exact arithmetic in `F_p` and univariate root finding.
//!
//! Residues are plain `u64` values in `[0, p)`; products go through `u128`
//! so any 63-bit modulus is safe.

mod poly;
mod primes;

pub use poly::{poly_roots, FpPoly};
pub use primes::{is_prime, primes_in_range, primes_up_to};

use crate::error::{Error, Result};
use crate::field::Field;

/// A residue in `[0, p)`.
pub type Residue = u64;

/// The prime field `F_p` for an odd prime `p >= 5`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    /// Builds `F_p`, rejecting composites and `p < 5`.
    pub fn new(p: u64) -> Result<Self> {
        if !(5..1 << 63).contains(&p) || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    #[inline]
    pub fn modulus(&self) -> u64 {
        self.p
    }

    /// Canonical residue of a signed integer.
    #[inline]
    pub fn elem(&self, v: i64) -> Residue {
        v.rem_euclid(self.p as i64) as u64
    }

    #[inline]
    pub fn reduce(&self, v: u64) -> Residue {
        v % self.p
    }

    #[inline]
    pub fn add(&self, a: Residue, b: Residue) -> Residue {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: Residue, b: Residue) -> Residue {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: Residue) -> Residue {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: Residue, b: Residue) -> Residue {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    pub fn pow(&self, mut base: Residue, mut exp: u64) -> Residue {
        let mut acc = 1 % self.p;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse via the extended Euclidean algorithm.
    pub fn inv(&self, a: Residue) -> Result<Residue> {
        let a = a % self.p;
        if a == 0 {
            return Err(Error::DivisionByZero { modulus: self.p });
        }
        let (mut r0, mut r1) = (self.p as i128, a as i128);
        let (mut t0, mut t1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1);
        Ok(t0.rem_euclid(self.p as i128) as u64)
    }

    pub fn div(&self, a: Residue, b: Residue) -> Result<Residue> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// Legendre symbol by Euler's criterion: `-1`, `0` or `+1`.
    pub fn legendre(&self, a: Residue) -> i8 {
        let a = a % self.p;
        if a == 0 {
            return 0;
        }
        if self.pow(a, (self.p - 1) / 2) == 1 {
            1
        } else {
            -1
        }
    }

    pub fn is_square(&self, a: Residue) -> bool {
        self.legendre(a) >= 0
    }

    /// Smallest quadratic non-residue.
    pub fn smallest_non_residue(&self) -> Residue {
        (2..self.p)
            .find(|&z| self.legendre(z) == -1)
            .expect("every odd prime field has a non-residue")
    }

    /// Square roots of `a`: `None` for a non-residue, `[0]` for zero, and
    /// `[r, p - r]` in ascending order otherwise.
    ///
    /// Tonelli–Shanks with the smallest non-residue, so the output is a
    /// pure function of `(a, p)`.
    pub fn sqrt_mod(&self, a: Residue) -> Option<Vec<Residue>> {
        let a = a % self.p;
        if a == 0 {
            return Some(vec![0]);
        }
        if self.legendre(a) != 1 {
            return None;
        }
        let p = self.p;
        let r = if p % 4 == 3 {
            self.pow(a, (p + 1) / 4)
        } else {
            let mut q = p - 1;
            let mut s = 0u32;
            while q.is_multiple_of(2) {
                q /= 2;
                s += 1;
            }
            let z = self.smallest_non_residue();
            let mut m = s;
            let mut c = self.pow(z, q);
            let mut t = self.pow(a, q);
            let mut r = self.pow(a, q.div_ceil(2));
            while t != 1 {
                let mut i = 0;
                let mut t2 = t;
                while t2 != 1 {
                    t2 = self.mul(t2, t2);
                    i += 1;
                }
                let mut b = c;
                for _ in 0..(m - i - 1) {
                    b = self.mul(b, b);
                }
                m = i;
                c = self.mul(b, b);
                t = self.mul(t, c);
                r = self.mul(r, b);
            }
            r
        };
        debug_assert_eq!(self.mul(r, r), a);
        let other = p - r;
        Some(if r < other { vec![r, other] } else { vec![other, r] })
    }

    /// All `u` with `u^4 = 1`, ascending: `[1, p-1]` or four values when
    /// `p ≡ 1 (mod 4)`.
    pub fn fourth_roots_of_unity(&self) -> Vec<Residue> {
        let mut out = vec![1, self.p - 1];
        if let Some(i) = self.sqrt_mod(self.p - 1) {
            out.extend(i);
        }
        out.sort_unstable();
        out
    }

    /// Smallest generator of `F_p^×`.
    pub fn primitive_root(&self) -> Residue {
        let n = self.p - 1;
        let mut factors = Vec::new();
        let mut m = n;
        let mut d = 2;
        while d * d <= m {
            if m.is_multiple_of(d) {
                factors.push(d);
                while m.is_multiple_of(d) {
                    m /= d;
                }
            }
            d += 1;
        }
        if m > 1 {
            factors.push(m);
        }
        (2..self.p)
            .find(|&g| factors.iter().all(|&q| self.pow(g, n / q) != 1))
            .expect("F_p^× is cyclic")
    }
}

impl Field for PrimeField {
    type Elem = Residue;

    fn zero(&self) -> Residue {
        0
    }
    fn one(&self) -> Residue {
        1
    }
    fn from_i64(&self, v: i64) -> Residue {
        self.elem(v)
    }
    fn is_zero(&self, a: &Residue) -> bool {
        *a == 0
    }
    fn add(&self, a: &Residue, b: &Residue) -> Residue {
        PrimeField::add(self, *a, *b)
    }
    fn sub(&self, a: &Residue, b: &Residue) -> Residue {
        PrimeField::sub(self, *a, *b)
    }
    fn mul(&self, a: &Residue, b: &Residue) -> Residue {
        PrimeField::mul(self, *a, *b)
    }
    fn neg(&self, a: &Residue) -> Residue {
        PrimeField::neg(self, *a)
    }
    fn inv(&self, a: &Residue) -> Result<Residue> {
        PrimeField::inv(self, *a)
    }
    fn mul_add_assign(&self, acc: &mut Residue, c: &Residue, x: &Residue) {
        *acc = PrimeField::add(self, *acc, PrimeField::mul(self, *c, *x));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn construction_rejects_composites_and_small() {
        assert!(PrimeField::new(4).is_err());
        assert!(PrimeField::new(3).is_err());
        assert!(PrimeField::new(91).is_err());
        assert!(PrimeField::new(2_147_483_647).is_ok());
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(f(7).inv(3).unwrap(), 5);
        assert_eq!(f(13).inv(1).unwrap(), 1);
        assert_eq!(
            f(13).inv(208 % 13),
            Err(Error::DivisionByZero { modulus: 13 })
        );
    }

    #[test]
    fn legendre_examples() {
        assert_eq!(f(13).legendre(3), 1);
        assert_eq!(f(7).legendre(0), 0);
        assert_eq!(f(7).legendre(3), -1);
    }

    #[test]
    fn sqrt_examples() {
        assert_eq!(f(13).sqrt_mod(4), Some(vec![2, 11]));
        assert_eq!(f(13).sqrt_mod(0), Some(vec![0]));
        assert_eq!(f(13).sqrt_mod(5), None);
    }

    #[test]
    fn sqrt_agrees_with_squares_table() {
        for p in [5u64, 7, 13, 17, 41, 97, 257, 433] {
            let fp = f(p);
            let mut roots = vec![Vec::new(); p as usize];
            for x in 0..p {
                roots[fp.mul(x, x) as usize].push(x);
            }
            for a in 0..p {
                let want = &roots[a as usize];
                match fp.sqrt_mod(a) {
                    None => assert!(want.is_empty(), "p={p} a={a}"),
                    Some(got) => assert_eq!(&got, &{
                        let mut w = want.clone();
                        w.dedup();
                        w
                    }),
                }
            }
        }
    }

    #[test]
    fn large_modulus_does_not_overflow() {
        let fp = f(2_305_843_009_213_693_951); // 2^61 - 1
        let a = fp.modulus() - 2;
        assert_eq!(fp.mul(a, fp.inv(a).unwrap()), 1);
        let r = fp.sqrt_mod(fp.mul(a, a)).unwrap();
        assert!(r.contains(&a));
    }

    #[test]
    fn fourth_roots() {
        assert_eq!(f(7).fourth_roots_of_unity(), vec![1, 6]);
        assert_eq!(f(13).fourth_roots_of_unity(), vec![1, 5, 8, 12]);
    }

    #[test]
    fn primitive_roots() {
        assert_eq!(f(7).primitive_root(), 3);
        assert_eq!(f(13).primitive_root(), 2);
        assert_eq!(f(41).primitive_root(), 6);
    }

    proptest! {
        #[test]
        fn inverse_property(a in 1u64..1_000_002) {
            let fp = f(1_000_003);
            prop_assert_eq!(fp.mul(a, fp.inv(a).unwrap()), 1);
        }

        #[test]
        fn legendre_is_multiplicative(a in 1u64..10_007, b in 1u64..10_007) {
            let fp = f(10_007);
            prop_assert_eq!(fp.legendre(fp.mul(a, b)), fp.legendre(a) * fp.legendre(b));
        }

        #[test]
        fn sqrt_exists_iff_legendre_nonnegative(a in 0u64..65_537) {
            let fp = f(65_537);
            let r = fp.sqrt_mod(a);
            prop_assert_eq!(r.is_some(), fp.legendre(a) >= 0);
            if let Some(rs) = r {
                for x in rs {
                    prop_assert_eq!(fp.mul(x, x), a);
                }
            }
        }
    }
}
