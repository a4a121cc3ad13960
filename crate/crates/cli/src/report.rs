use std::time::Instant;

use porc_core::diophantine::{
    count_vp, ec_count_formula, ec_count_naive, norm_form_criterion, octic_equivalence, quartic360_has_root,
};
use porc_core::orbit::compute_dp;
use porc_core::{Error, PrimeField, Result};
use rayon::prelude::*;
use serde::Serialize;

/// Largest `p` for which the direct orbit count may be requested.
pub const BRUTE_MAX_CAP: u64 = 199;

/// One row of a sweep.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PrimeReport {
    pub p: u64,
    pub class12: u64,
    pub a: Option<u64>,
    pub b: Option<u64>,
    pub a_mod3: Option<u64>,
    pub quartic360_root: u8,
    pub octic_root: u8,
    pub v_p: u64,
    pub ec_naive: u64,
    pub ec_formula: Option<u64>,
    pub s_size: usize,
    pub group_order: u64,
    pub dp_formula: u64,
    pub dp_burnside: u64,
    /// `-1` when the direct count was skipped.
    pub dp_brute: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl PrimeReport {
    /// Consistency failures in this row, as `field: detail` strings.
    pub fn violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.dp_formula != self.dp_burnside {
            out.push(format!("dp_formula={} dp_burnside={}", self.dp_formula, self.dp_burnside));
        }
        if self.dp_brute != -1 && self.dp_brute != self.dp_formula as i64 {
            out.push(format!("dp_brute={} dp_formula={}", self.dp_brute, self.dp_formula));
        }
        if (self.octic_root == 1) != (self.v_p > 0) {
            out.push(format!("octic_root={} v_p={}", self.octic_root, self.v_p));
        }
        if let Some(ec) = self.ec_formula {
            if ec != self.ec_naive {
                out.push(format!("ec_formula={ec} ec_naive={}", self.ec_naive));
            }
        } else if self.ec_naive != self.p {
            out.push(format!("ec_naive={} p={}", self.ec_naive, self.p));
        }
        if let Some(r) = self.a_mod3 {
            if (r == 1) != (self.quartic360_root == 1) {
                out.push(format!("a_mod3={r} quartic360_root={}", self.quartic360_root));
            }
        }
        out
    }
}

pub fn prime_report(p: u64, brute_max: u64, timing: bool) -> Result<PrimeReport> {
    let start = Instant::now();
    let f = PrimeField::new(p)?;
    let vp = count_vp(&f);
    let octic = octic_equivalence(&f);
    if !octic.witness_roundtrip_ok {
        return Err(Error::Invariant(format!("octic root does not give a curve point at p = {p}")));
    }
    let (a, b, a_mod3) = if p % 12 == 1 {
        let c = norm_form_criterion(&f)?;
        (Some(c.rep.a), Some(c.rep.b), Some(c.a_mod3))
    } else {
        (None, None, None)
    };
    let ec_formula = if p % 4 == 1 { Some(ec_count_formula(&f)?) } else { None };
    let dp = compute_dp(&f, brute_max)?;
    Ok(PrimeReport {
        p,
        class12: p % 12,
        a,
        b,
        a_mod3,
        quartic360_root: quartic360_has_root(&f) as u8,
        octic_root: octic.octic as u8,
        v_p: vp.count,
        ec_naive: ec_count_naive(&f),
        ec_formula,
        s_size: dp.s_size,
        group_order: dp.group_order,
        dp_formula: dp.closed_form,
        dp_burnside: dp.burnside,
        dp_brute: dp.brute.map_or(-1, |d| d as i64),
        elapsed_ms: timing.then(|| start.elapsed().as_millis() as u64),
    })
}

/// Reports for every prime in `[min, max]`, in increasing order.
pub fn sweep(primes: &[u64], brute_max: u64, timing: bool) -> Vec<(u64, Result<PrimeReport>)> {
    primes.par_iter().map(|&p| (p, prime_report(p, brute_max, timing))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_rows() {
        let rows: Vec<PrimeReport> = [5, 7, 11, 13].iter().map(|&p| prime_report(p, 61, false).unwrap()).collect();
        let d: Vec<u64> = rows.iter().map(|r| r.dp_formula).collect();
        assert_eq!(d, [12, 34, 30, 52]);
        for r in &rows {
            assert!(r.violations().is_empty(), "{r:?}");
            assert_eq!(r.dp_brute, r.dp_formula as i64);
        }
        assert_eq!(rows[3].a, Some(5));
        assert_eq!(rows[1].ec_formula, None);
    }

    #[test]
    fn violations_are_reported() {
        let mut r = prime_report(11, 0, false).unwrap();
        assert_eq!(r.dp_brute, -1);
        r.dp_burnside += 1;
        assert_eq!(r.violations().len(), 1);
    }
}
