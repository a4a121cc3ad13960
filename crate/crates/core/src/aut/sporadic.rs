use crate::finite_field::{poly_roots, FpPoly, PrimeField, Residue};

/// One solution of the sporadic automorphism equations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SporadicParams {
    pub d: Residue,
    pub e: Residue,
    pub a: Residue,
    pub b: Residue,
    pub c: Residue,
    pub f: Residue,
    /// Fourth root of unity with `a = u (d^2 + 1) e / 4`.
    pub u: Residue,
}

impl SporadicParams {
    /// The six equations imposed by `[x_4,x_1] = [x_5,x_2]` and
    /// `[x_5,x_1] = [x_6,x_3]`, each as `lhs == rhs`.
    pub fn equations(&self, field: &PrimeField) -> [bool; 6] {
        let (a, b, c, d, e, f) = (self.a, self.b, self.c, self.d, self.e, self.f);
        let m = |x: u64, y: u64| field.mul(x, y);
        let add = |x: u64, y: u64| field.add(x, y);
        let sub = |x: u64, y: u64| field.sub(x, y);
        let (a2, f2, d2, e2) = (m(a, a), m(f, f), m(d, d), m(e, e));
        let af = m(a, f);
        [
            m(a2, add(1, m(b, b))) == m(f2, add(1, d2)),
            m(a2, add(m(2, b), m(c, c))) == m(f2, sub(m(d2, e2), m(2, d))),
            m(a2, c) == field.neg(m(m(d2, e), f2)),
            m(af, sub(d, b)) == add(1, d2),
            m(af, sub(sub(m(b, d), m(m(c, d), e)), 1)) == add(m(2, d), e2),
            m(m(af, d), sub(c, e)) == m(2, e),
        ]
    }

    pub fn all_equations_hold(&self, field: &PrimeField) -> bool {
        self.equations(field).iter().all(|&ok| ok)
    }

    /// The defining relations between the parameters: `d` a root of the
    /// quartic, `1 - d^2 + de^2 = 0`, `u^4 = 1` and the formulas for
    /// `a, b, c, f`.
    pub fn is_consistent(&self, field: &PrimeField) -> bool {
        derive(field, self.d, self.e, self.u).as_ref() == Some(self)
            && quartic(field).eval(field, self.d) == 0
            && field.add(field.sub(1, field.mul(self.d, self.d)), field.mul(self.d, field.mul(self.e, self.e))) == 0
    }
}

/// `x^4 + 6x^2 - 3`.
pub(crate) fn quartic(field: &PrimeField) -> FpPoly {
    FpPoly::from_i64(field, &[-3, 0, 6, 0, 1])
}

/// `a, b, c, f` from `d, e, u`; `None` where a denominator vanishes.
fn derive(field: &PrimeField, d: Residue, e: Residue, u: Residue) -> Option<SporadicParams> {
    let m = |x: u64, y: u64| field.mul(x, y);
    let d2 = m(d, d);
    let a = field.div(m(m(u, field.add(d2, 1)), e), 4).ok()?;
    let b = field.div(field.add(m(3, d), m(d2, d)), field.sub(1, d2)).ok()?;
    let c = field.div(m(e, field.add(d2, 3)), field.sub(d2, 1)).ok()?;
    let f = field.div(field.sub(d2, 1), m(m(2, d), a)).ok()?;
    Some(SporadicParams { d, e, a, b, c, f, u })
}

/// Every parameter set: `d` over the roots of `x^4 + 6x^2 - 3`, `e` over
/// the square roots of `(d^2 - 1)/d`, `u` over the fourth roots of unity.
/// Sorted by `(d, e, u)`.
pub fn solve_sporadic(field: &PrimeField) -> Vec<SporadicParams> {
    let mut out = Vec::new();
    for d in poly_roots(&quartic(field), field) {
        let Ok(e2) = field.div(field.sub(field.mul(d, d), 1), d) else {
            continue;
        };
        let Some(es) = field.sqrt_mod(e2) else {
            continue;
        };
        for e in es {
            for u in field.fourth_roots_of_unity() {
                if let Some(params) = derive(field, d, e, u) {
                    out.push(params);
                }
            }
        }
    }
    out
}

/// Outcome of [`identity_checks`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IdentityChecks {
    /// `4(1 - d^2) = (d^2 + 1)^2`, i.e. `1 - d^2` is a square.
    pub square_identity: bool,
    /// `((1 + u)(d^3 + 5d) / 4)^4 = -3` for both `u` with `u^2 = -1`;
    /// `None` when `-1` is not a square.
    pub root_of_minus_three: Option<bool>,
}

impl IdentityChecks {
    pub fn all_hold(&self) -> bool {
        self.square_identity && self.root_of_minus_three != Some(false)
    }
}

pub fn identity_checks(field: &PrimeField, params: &SporadicParams) -> IdentityChecks {
    let d = params.d;
    let d2 = field.mul(d, d);
    let lhs = field.mul(4, field.sub(1, d2));
    let s = field.add(d2, 1);
    let square_identity = lhs == field.mul(s, s);
    let root_of_minus_three = field.sqrt_mod(field.modulus() - 1).map(|us| {
        let t = field.add(field.mul(d2, d), field.mul(5, d));
        us.iter().all(|&u| {
            let w = field.div(field.mul(field.add(1, u), t), 4).expect("p is odd");
            field.pow(w, 4) == field.elem(-3)
        })
    });
    IdentityChecks { square_identity, root_of_minus_three }
}
