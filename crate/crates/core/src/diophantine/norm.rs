use crate::error::{Error, Result};
use crate::finite_field::PrimeField;

use super::vp::quartic360_has_root;

/// `p = a^2 - 12b^2` with the smallest positive `a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct NormFormRep {
    pub p: u64,
    pub a: u64,
    pub b: u64,
}

/// Searches `b = 0, 1, ..., p` for a square `p + 12b^2`. The first hit has
/// the smallest `a`.
pub fn represent_norm_form(p: u64) -> Result<NormFormRep> {
    if p % 12 != 1 {
        return Err(Error::Precondition(format!("{p} is not 1 mod 12")));
    }
    for b in 0..=p {
        let n = p as u128 + 12 * (b as u128) * (b as u128);
        let a = n.isqrt();
        if a * a == n {
            let rep = NormFormRep { p, a: a as u64, b };
            let check = (rep.a as i128).pow(2) - 12 * (rep.b as i128).pow(2);
            if check != p as i128 {
                return Err(Error::Invariant(format!("{rep:?} fails a^2 - 12b^2 = p")));
            }
            return Ok(rep);
        }
    }
    Err(Error::Invariant(format!("no representation p = a^2 - 12b^2 with b <= p for p = {p}")))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NormFormCheck {
    pub rep: NormFormRep,
    pub a_mod3: u64,
    pub quartic360: bool,
    /// `a = 1 mod 3` exactly when `z^4 + 360z^2 - 48` has a root.
    pub consistent: bool,
}

pub fn norm_form_criterion(field: &PrimeField) -> Result<NormFormCheck> {
    let rep = represent_norm_form(field.modulus())?;
    let a_mod3 = rep.a % 3;
    let quartic360 = quartic360_has_root(field);
    Ok(NormFormCheck { rep, a_mod3, quartic360, consistent: (a_mod3 == 1) == quartic360 })
}

/// `p = a^2 + b^2` with `a` odd and `a + ib = 1 mod (2 + 2i)`.
///
/// The congruence fixes `a` and the sign of `b` only up to conjugation;
/// `b` is stored non-negative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GaussRep {
    pub p: u64,
    pub a: i64,
    pub b: i64,
}

/// Cornacchia for `x^2 + y^2 = p`: returns `(x, y)` with `x > y >= 0`.
pub fn cornacchia(field: &PrimeField) -> Result<(u64, u64)> {
    let p = field.modulus();
    let roots = field
        .sqrt_mod(p - 1)
        .ok_or_else(|| Error::Precondition(format!("-1 is not a square mod {p}")))?;
    let r = roots.into_iter().max().expect("two square roots");
    let limit = p.isqrt();
    let mut pair = (p, r);
    while pair.1 > limit {
        pair = (pair.1, pair.0 % pair.1);
    }
    let b = pair.1;
    let rest = p - b * b;
    let c = rest.isqrt();
    if c * c != rest {
        return Err(Error::Invariant(format!("Cornacchia failed for p = {p}")));
    }
    Ok((b.max(c), b.min(c)))
}

/// Whether `(x + iy)` is divisible by `2 + 2i`, i.e. `(x + iy)(2 - 2i)/8`
/// is a Gaussian integer.
fn divisible_by_2_plus_2i(x: i64, y: i64) -> bool {
    // (x + iy)(2 - 2i) = (2x + 2y) + i(2y - 2x)
    (2 * x + 2 * y) % 8 == 0 && (2 * y - 2 * x) % 8 == 0
}

pub fn gauss_rep(field: &PrimeField) -> Result<GaussRep> {
    let p = field.modulus();
    let (x, y) = cornacchia(field)?;
    let (x, y) = (x as i64, y as i64);
    let mut survivors: Vec<(i64, i64)> = Vec::new();
    for (s, t) in [(x, y), (y, x)] {
        for (a, b) in [(s, t), (-s, t), (s, -t), (-s, -t)] {
            if a.rem_euclid(2) == 1 && divisible_by_2_plus_2i(a - 1, b) {
                survivors.push((a, b));
            }
        }
    }
    let Some(&(a, _)) = survivors.first() else {
        return Err(Error::Invariant(format!("no normalized Gaussian representation for p = {p}")));
    };
    if survivors.iter().any(|&(a2, b2)| a2 != a || b2.abs() != survivors[0].1.abs()) {
        return Err(Error::Invariant(format!("ambiguous Gaussian normalization for p = {p}: {survivors:?}")));
    }
    Ok(GaussRep { p, a, b: survivors[0].1.abs() })
}

/// Affine points on `y^2 = x^3 - x`, by scanning `x`.
pub fn ec_count_naive(field: &PrimeField) -> u64 {
    let p = field.modulus();
    (0..p)
        .map(|x| {
            let v = field.sub(field.mul(field.mul(x, x), x), x);
            (1 + field.legendre(v) as i64) as u64
        })
        .sum()
}

/// `p - 2a` for the normalized Gaussian representation; `p = 1 mod 4`.
pub fn ec_count_formula(field: &PrimeField) -> Result<u64> {
    let p = field.modulus();
    if p % 4 != 1 {
        return Err(Error::Precondition(format!("{p} is not 1 mod 4")));
    }
    let rep = gauss_rep(field)?;
    Ok((p as i64 - 2 * rep.a) as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite_field::primes_in_range;

    fn fp(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn small_representations() {
        assert_eq!(represent_norm_form(13).unwrap(), NormFormRep { p: 13, a: 5, b: 1 });
        assert_eq!(represent_norm_form(37).unwrap(), NormFormRep { p: 37, a: 7, b: 1 });
        let r = represent_norm_form(61).unwrap();
        assert_eq!(r.a * r.a - 12 * r.b * r.b, 61);
        assert!(represent_norm_form(7).is_err());
    }

    #[test]
    fn minimal_a_against_a_full_search() {
        for p in primes_in_range(5, 3000).into_iter().filter(|p| p % 12 == 1) {
            let best = (1..10 * p)
                .find(|&a| a * a >= p && (a * a - p) % 12 == 0 && ((a * a - p) / 12).isqrt().pow(2) == (a * a - p) / 12)
                .unwrap();
            assert_eq!(represent_norm_form(p).unwrap().a, best, "p = {p}");
        }
    }

    #[test]
    fn criterion_small_cases() {
        let c = norm_form_criterion(&fp(13)).unwrap();
        assert_eq!((c.a_mod3, c.quartic360, c.consistent), (2, false, true));
        let c = norm_form_criterion(&fp(37)).unwrap();
        assert_eq!((c.a_mod3, c.quartic360, c.consistent), (1, true, true));
    }

    #[test]
    fn criterion_sweep() {
        for p in primes_in_range(5, 4000).into_iter().filter(|p| p % 12 == 1) {
            assert!(norm_form_criterion(&fp(p)).unwrap().consistent, "p = {p}");
        }
    }

    #[test]
    fn curve_point_counts() {
        assert_eq!(ec_count_naive(&fp(5)), 7);
        assert_eq!(ec_count_naive(&fp(7)), 7);
        assert_eq!(ec_count_naive(&fp(11)), 11);
        assert_eq!(gauss_rep(&fp(5)).unwrap().a, -1);
        assert_eq!(ec_count_formula(&fp(5)).unwrap(), 7);
        assert!(ec_count_formula(&fp(7)).is_err());
    }

    #[test]
    fn naive_count_matches_pair_enumeration() {
        for p in [5u64, 7, 11, 13, 17] {
            let f = fp(p);
            let pairs = (0..p)
                .flat_map(|x| (0..p).map(move |y| (x, y)))
                .filter(|&(x, y)| f.mul(y, y) == f.sub(f.pow(x, 3), x))
                .count() as u64;
            assert_eq!(ec_count_naive(&f), pairs);
        }
    }

    #[test]
    fn formula_and_hasse_bound() {
        for p in primes_in_range(5, 3000) {
            let f = fp(p);
            let n = ec_count_naive(&f);
            let dev = (n as i64 - p as i64).unsigned_abs();
            assert!(dev * dev <= 4 * p, "p = {p}");
            if p % 4 == 1 {
                assert_eq!(ec_count_formula(&f).unwrap(), n, "p = {p}");
                let g = gauss_rep(&f).unwrap();
                assert_eq!((g.a * g.a + g.b * g.b) as u64, p);
            } else {
                assert_eq!(n, p);
            }
        }
    }
}
