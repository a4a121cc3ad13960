use crate::finite_field::{poly_roots, FpPoly, PrimeField};

/// Number of points `(x, y)` with `x^4 + 6x^2 - 3 = 0` and `y^2 = x^3 - x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct VpCount {
    pub p: u64,
    pub count: u64,
}

impl VpCount {
    pub fn is_positive(&self) -> bool {
        self.count > 0
    }
}

/// `x^4 + 6x^2 - 3`.
pub fn quartic(field: &PrimeField) -> FpPoly {
    FpPoly::from_i64(field, &[-3, 0, 6, 0, 1])
}

/// `y^8 + 360y^4 - 48`.
pub fn octic(field: &PrimeField) -> FpPoly {
    FpPoly::from_i64(field, &[-48, 0, 0, 0, 360, 0, 0, 0, 1])
}

/// `z^4 + 360z^2 - 48`.
pub fn quartic360(field: &PrimeField) -> FpPoly {
    FpPoly::from_i64(field, &[-48, 0, 360, 0, 1])
}

pub fn count_vp(field: &PrimeField) -> VpCount {
    let count = poly_roots(&quartic(field), field)
        .into_iter()
        .map(|x| {
            let v = field.sub(field.mul(field.mul(x, x), x), x);
            match field.legendre(v) {
                1 => 2,
                0 => 1,
                _ => 0,
            }
        })
        .sum();
    VpCount { p: field.modulus(), count }
}

pub fn quartic_has_root(field: &PrimeField) -> bool {
    !poly_roots(&quartic(field), field).is_empty()
}

pub fn octic_has_root(field: &PrimeField) -> bool {
    !poly_roots(&octic(field), field).is_empty()
}

pub fn quartic360_has_root(field: &PrimeField) -> bool {
    !poly_roots(&quartic360(field), field).is_empty()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OcticCheck {
    pub vp_positive: bool,
    pub octic: bool,
    /// Every octic root `y` gives a point `(x, y)` with
    /// `x = -(y^6 + 388y^2)/208`. Vacuously true at `p = 13`.
    pub witness_roundtrip_ok: bool,
}

impl OcticCheck {
    pub fn holds(&self) -> bool {
        self.vp_positive == self.octic && self.witness_roundtrip_ok
    }
}

pub fn octic_equivalence(field: &PrimeField) -> OcticCheck {
    let vp_positive = count_vp(field).is_positive();
    let roots = poly_roots(&octic(field), field);
    let witness_roundtrip_ok = match field.inv(208) {
        Err(_) => true,
        Ok(inv208) => roots.iter().all(|&y| {
            let y2 = field.mul(y, y);
            let y6 = field.mul(field.mul(y2, y2), y2);
            let x = field.neg(field.mul(field.add(y6, field.mul(388, y2)), inv208));
            let on_quartic = quartic(field).eval(field, x) == 0;
            let on_curve = y2 == field.sub(field.mul(field.mul(x, x), x), x);
            on_quartic && on_curve
        }),
    };
    OcticCheck { vp_positive, octic: !roots.is_empty(), witness_roundtrip_ok }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite_field::primes_in_range;

    fn fp(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    /// Direct count over all of `F_p^2`.
    fn count_by_scan(field: &PrimeField) -> u64 {
        let p = field.modulus();
        let q = quartic(field);
        let mut n = 0;
        for x in (0..p).filter(|&x| q.eval(field, x) == 0) {
            let rhs = field.sub(field.pow(x, 3), x);
            n += (0..p).filter(|&y| field.mul(y, y) == rhs).count() as u64;
        }
        n
    }

    #[test]
    fn small_values() {
        assert_eq!(count_vp(&fp(13)).count, 0);
        assert_eq!(count_vp(&fp(7)).count, 0);
        assert!(!octic_has_root(&fp(13)));
        assert!(!quartic360_has_root(&fp(13)));
        assert!(quartic360_has_root(&fp(37)));
        assert_eq!(octic_equivalence(&fp(13)), OcticCheck { vp_positive: false, octic: false, witness_roundtrip_ok: true });
    }

    #[test]
    fn smallest_prime_with_points() {
        let first = primes_in_range(5, 1000)
            .into_iter()
            .filter(|p| p % 12 == 1)
            .find(|&p| count_vp(&fp(p)).count > 0)
            .unwrap();
        assert_eq!(first, 61);
        assert_eq!(count_vp(&fp(61)).count, 8);
    }

    #[test]
    fn matches_exhaustive_scan() {
        for p in primes_in_range(5, 400) {
            let f = fp(p);
            assert_eq!(count_vp(&f).count, count_by_scan(&f), "p = {p}");
        }
    }

    #[test]
    fn counts_are_zero_or_eight_on_the_class() {
        for p in primes_in_range(5, 3000).into_iter().filter(|p| p % 12 == 1) {
            let n = count_vp(&fp(p)).count;
            assert!(n == 0 || n == 8, "p = {p}: {n}");
        }
    }

    #[test]
    fn equivalence_with_the_octic() {
        for p in primes_in_range(5, 5000) {
            let check = octic_equivalence(&fp(p));
            assert!(check.holds(), "p = {p}: {check:?}");
        }
    }

    #[test]
    fn octic_roots_are_exercised() {
        let check = octic_equivalence(&fp(61));
        assert!(check.vp_positive && check.octic && check.witness_roundtrip_ok);
    }
}
