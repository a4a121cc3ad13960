use porc_core::aut::{
    brute_force_h, constructed_automorphisms, identity_checks, solve_sporadic, verify_automorphism, H_SEARCH_LIMIT,
};
use porc_core::diophantine::{count_vp, ec_count_formula, ec_count_naive, norm_form_criterion, octic_equivalence};
use porc_core::lie::{build_covering, build_lp};
use porc_core::orbit::{all_charpoly_checks, compute_dp, ActionGroup, BRUTE_ORBIT_LIMIT};
use porc_core::{PrimeField, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub label: &'static str,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    fn new(label: &'static str, pass: bool, detail: impl Into<String>) -> Self {
        Check { label, pass, detail: detail.into() }
    }
}

/// Every check available at a single prime. Errors from the library are
/// returned as failing checks so later checks still run.
pub fn verify_prime(field: &PrimeField) -> Vec<Check> {
    let p = field.modulus();
    let mut out = Vec::new();
    let mut push = |label: &'static str, r: Result<(bool, String)>| match r {
        Ok((pass, detail)) => out.push(Check::new(label, pass, detail)),
        Err(e) => out.push(Check::new(label, false, format!("error: {e}"))),
    };

    push("point count and octic root equivalence", Ok({
        let vp = count_vp(field);
        let c = octic_equivalence(field);
        let branch = if vp.count == 0 { "V_p=0 branch" } else { "V_p>0 branch" };
        (
            c.holds() && (p % 12 != 1 || vp.count == 0 || vp.count == 8),
            format!("V_p={} octic_root={} roundtrip={} ({branch})", vp.count, c.octic, c.witness_roundtrip_ok),
        )
    }));

    if p % 12 == 1 {
        push("norm form residue criterion", norm_form_criterion(field).map(|c| {
            (c.consistent, format!("p={}^2-12*{}^2 a_mod3={} quartic360_root={}", c.rep.a, c.rep.b, c.a_mod3, c.quartic360))
        }));
    }

    push("curve point count", (|| {
        let naive = ec_count_naive(field);
        if p % 4 == 1 {
            let formula = ec_count_formula(field)?;
            Ok((naive == formula, format!("naive={naive} formula={formula}")))
        } else {
            Ok((naive == p, format!("naive={naive} (p = 3 mod 4)")))
        }
    })());

    let sporadic = solve_sporadic(field);
    push("sporadic parameter equations", Ok((
        sporadic.iter().all(|q| q.all_equations_hold(field) && q.is_consistent(field)),
        format!("{} parameter sets", sporadic.len()),
    )));
    push("sporadic parameter identities", Ok((
        sporadic.iter().all(|q| identity_checks(field, q).all_hold()),
        format!("{} parameter sets", sporadic.len()),
    )));

    push("constructed automorphisms", constructed_automorphisms(field).map(|auts| {
        let lp = build_lp(field);
        let ok = auts.iter().filter(|a| verify_automorphism(&lp, a)).count();
        (ok == auts.len(), format!("{ok}/{} verified", auts.len()))
    }));

    push("action group closure", ActionGroup::new(field).map(|g| {
        (g.is_closed_up_to_scalars(), format!("|S|={} |G|={}", g.s_size(), g.order()))
    }));

    push("sporadic eigenvector census", ActionGroup::new(field).and_then(|g| all_charpoly_checks(&g)).map(|cs| {
        (cs.iter().all(|c| c.holds()), format!("{} matrices", cs.len()))
    }));

    push("covering algebra dimensions", build_covering(field).map(|c| {
        let (dim, nucleus) = (c.m.dim(), c.nucleus.dim());
        (dim == 23 && nucleus == 2, format!("dim={dim} nucleus={nucleus} tails={}", c.tail_relations.len()))
    }));

    push("descendant counts", compute_dp(field, BRUTE_ORBIT_LIMIT).map(|d| {
        let brute = d.brute.map_or("skipped".to_string(), |b| b.to_string());
        (d.agree(), format!("D_p={} formula={} burnside={} brute={brute}", d.closed_form, d.closed_form, d.burnside))
    }));

    if p <= H_SEARCH_LIMIT {
        push("block-preserving automorphism search", (|| {
            let h = brute_force_h(field, H_SEARCH_LIMIT)?;
            let s = ActionGroup::new(field)?.s_size();
            let expected = (p - 1) * (p - 1) * s as u64;
            let scalar = h.elements.iter().all(|(a, b)| b.scalar_multiple_of(field, a).is_some());
            Ok((h.count as u64 == expected && scalar, format!("{} found, expected {expected}, B scalar in A: {scalar}", h.count)))
        })());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_checks_pass_at_small_primes() {
        for p in [5, 7, 11, 13] {
            let checks = verify_prime(&PrimeField::new(p).unwrap());
            for c in &checks {
                assert!(c.pass, "p = {p}: {c:?}");
            }
        }
    }
}
