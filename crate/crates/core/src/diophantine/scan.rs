use num_integer::Integer;
use num_rational::Ratio;
use rayon::prelude::*;

use crate::finite_field::{primes_in_range, PrimeField};

use super::vp::{count_vp, quartic_has_root};

/// Counts over the primes `p = 1 mod 12` up to `max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DensityScan {
    pub max: u64,
    pub n_1mod12: u64,
    /// Primes where `x^4 + 6x^2 - 3` has a root.
    pub n_quartic: u64,
    /// Primes where additionally `V_p > 0`.
    pub n_both: u64,
}

impl DensityScan {
    /// `n_quartic / n_1mod12`, exactly; zero on an empty range.
    pub fn frac_quartic(&self) -> Ratio<u64> {
        ratio(self.n_quartic, self.n_1mod12)
    }

    pub fn frac_both(&self) -> Ratio<u64> {
        ratio(self.n_both, self.n_1mod12)
    }
}

fn ratio(n: u64, d: u64) -> Ratio<u64> {
    if d == 0 {
        Ratio::from_integer(0)
    } else {
        Ratio::new(n, d)
    }
}

pub fn density_scan(max: u64) -> DensityScan {
    let flags: Vec<(bool, bool)> = primes_in_range(5, max)
        .into_par_iter()
        .filter(|p| p % 12 == 1)
        .map(|p| {
            let f = PrimeField::new(p).expect("sieved prime");
            let q = quartic_has_root(&f);
            (q, q && count_vp(&f).is_positive())
        })
        .collect();
    DensityScan {
        max,
        n_1mod12: flags.len() as u64,
        n_quartic: flags.iter().filter(|f| f.0).count() as u64,
        n_both: flags.iter().filter(|f| f.1).count() as u64,
    }
}

/// Smallest primes in the class `p = c mod 12d` with `V_p > 0` and with
/// `V_p = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassWitnesses {
    pub c: u64,
    pub modulus: u64,
    pub witness_vp_positive: Option<u64>,
    pub witness_vp_zero: Option<u64>,
}

impl ClassWitnesses {
    pub fn has_both(&self) -> bool {
        self.witness_vp_positive.is_some() && self.witness_vp_zero.is_some()
    }
}

/// The classes `c mod 12d` with `c = 1 mod 12` and `gcd(c, 12d) = 1`,
/// ascending.
pub fn admissible_classes(d: u64) -> Vec<u64> {
    let m = 12 * d;
    (1..m).step_by(12).filter(|c| c.gcd(&m) == 1).collect()
}

pub fn subcongruence_scan(d: u64, max: u64) -> Vec<ClassWitnesses> {
    assert!(d >= 1, "d must be positive");
    let m = 12 * d;
    let mut out: Vec<ClassWitnesses> = admissible_classes(d)
        .into_iter()
        .map(|c| ClassWitnesses { c, modulus: m, witness_vp_positive: None, witness_vp_zero: None })
        .collect();
    for p in primes_in_range(5, max) {
        if out.iter().all(ClassWitnesses::has_both) {
            break;
        }
        let Some(w) = out.iter_mut().find(|w| w.c == p % m) else {
            continue;
        };
        if w.has_both() {
            continue;
        }
        let positive = count_vp(&PrimeField::new(p).expect("sieved prime")).is_positive();
        let slot = if positive { &mut w.witness_vp_positive } else { &mut w.witness_vp_zero };
        slot.get_or_insert(p);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn density_to_one_hundred() {
        // 13, 37, 61, 73, 97; the quartic is solvable at 37, 61 and 97, the
        // point count is positive only at 61.
        let s = density_scan(100);
        assert_eq!(s.n_1mod12, 5);
        let quartic: Vec<u64> = [13u64, 37, 61, 73, 97]
            .into_iter()
            .filter(|&p| quartic_has_root(&PrimeField::new(p).unwrap()))
            .collect();
        assert_eq!(s.n_quartic, quartic.len() as u64);
        assert_eq!(s.n_both, 1);
        assert_eq!(s.frac_both(), Ratio::new(1, 5));
    }

    #[test]
    fn classes() {
        assert_eq!(admissible_classes(1), vec![1]);
        assert_eq!(admissible_classes(2), vec![1, 13]);
        assert_eq!(admissible_classes(5), vec![1, 13, 37, 49]);
    }

    #[test]
    fn witnesses_to_ten_thousand() {
        let w = subcongruence_scan(1, 10_000);
        assert_eq!(w.len(), 1);
        assert_eq!(w[0].witness_vp_positive, Some(61));
        assert_eq!(w[0].witness_vp_zero, Some(13));
        assert!(subcongruence_scan(2, 100_000).iter().all(ClassWitnesses::has_both));
    }

    #[test]
    fn short_range_may_lack_witnesses() {
        let w = subcongruence_scan(1, 20);
        assert_eq!(w[0].witness_vp_positive, None);
        assert_eq!(w[0].witness_vp_zero, Some(13));
    }
}
