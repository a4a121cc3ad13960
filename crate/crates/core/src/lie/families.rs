//! `L_p`, its dimension-10 descendants `A(λ, μ, ν)`, and the reduction of
//! the general dimension-10 descendant to that three-parameter form.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{axpy, Vector};

use super::{Definition, LieAlgebra, LieMap};

fn def(target: usize, left: usize, right: usize) -> Definition {
    Definition { target: target - 1, left: left - 1, right: right - 1 }
}

/// The brackets of `L_p` among `x_1..x_9`, 1-based. `x_7, x_8, x_9` are
/// `[x_4, x_1], [x_4, x_2], [x_4, x_3]`.
pub(crate) fn lp_relations() -> Vec<(usize, usize, Vec<(usize, i64)>)> {
    vec![
        (4, 1, vec![(7, 1)]),
        (4, 2, vec![(8, 1)]),
        (4, 3, vec![(9, 1)]),
        (5, 1, vec![(8, 1)]),
        (5, 2, vec![(7, 1)]),
        (6, 1, vec![(9, 1)]),
        (6, 3, vec![(8, 1)]),
    ]
}

pub(crate) fn lp_definitions() -> Vec<Definition> {
    vec![def(7, 4, 1), def(8, 4, 2), def(9, 4, 3)]
}

/// `L_p`: nine-dimensional, class 2, generated by `x_1..x_6`.
pub fn build_lp<F: Field>(field: &F) -> LieAlgebra<F> {
    LieAlgebra::from_labelled(field, 9, &lp_relations())
        .and_then(|l| l.with_generators(6, lp_definitions()))
        .expect("L_p relations are well formed")
}

/// `A(λ, μ, ν)`: `L_p` extended by a central `x_10` with
/// `[x_5,x_4] = λx_10`, `[x_6,x_4] = μx_10`, `[x_6,x_5] = νx_10` and
/// `[x_7,x_2] = [x_8,x_1] = [x_9,x_3] = x_10`.
pub fn build_descendant<F: Field>(field: &F, lambda: &F::Elem, mu: &F::Elem, nu: &F::Elem) -> LieAlgebra<F> {
    let params = GeneralDescendantParams {
        mu: lambda.clone(),
        rho: mu.clone(),
        sigma: nu.clone(),
        ..GeneralDescendantParams::zero(field)
    };
    build_general_descendant(field, &params)
}

/// The twelve tail coefficients of a general dimension-10 descendant: the
/// multiple of `x_10` added to each non-defining bracket among
/// `x_1..x_6`.
#[derive(Debug, Clone, PartialEq)]
pub struct GeneralDescendantParams<E> {
    /// `[x_2, x_1]`
    pub epsilon: E,
    /// `[x_3, x_1]`
    pub zeta: E,
    /// `[x_3, x_2]`
    pub eta: E,
    /// `[x_5, x_1]`
    pub theta: E,
    /// `[x_5, x_2]`
    pub kappa: E,
    /// `[x_5, x_3]`
    pub lambda: E,
    /// `[x_5, x_4]`
    pub mu: E,
    /// `[x_6, x_1]`
    pub nu: E,
    /// `[x_6, x_2]`
    pub xi: E,
    /// `[x_6, x_3]`
    pub pi: E,
    /// `[x_6, x_4]`
    pub rho: E,
    /// `[x_6, x_5]`
    pub sigma: E,
}

impl<E: Clone> GeneralDescendantParams<E> {
    pub fn zero<F: Field<Elem = E>>(field: &F) -> Self {
        Self::from_array(std::array::from_fn(|_| field.zero()))
    }

    /// In bracket order `[x2,x1], [x3,x1], [x3,x2], [x5,x1], ..., [x6,x5]`.
    pub fn from_array(a: [E; 12]) -> Self {
        let [epsilon, zeta, eta, theta, kappa, lambda, mu, nu, xi, pi, rho, sigma] = a;
        GeneralDescendantParams { epsilon, zeta, eta, theta, kappa, lambda, mu, nu, xi, pi, rho, sigma }
    }

    pub fn to_array(&self) -> [E; 12] {
        [
            self.epsilon.clone(),
            self.zeta.clone(),
            self.eta.clone(),
            self.theta.clone(),
            self.kappa.clone(),
            self.lambda.clone(),
            self.mu.clone(),
            self.nu.clone(),
            self.xi.clone(),
            self.pi.clone(),
            self.rho.clone(),
            self.sigma.clone(),
        ]
    }
}

/// 1-based `(i, j)` pairs carrying the twelve tail parameters, and the
/// part of the bracket coming from `L_p`.
pub(crate) const TAIL_BRACKETS: [(usize, usize, Option<usize>); 12] = [
    (2, 1, None),
    (3, 1, None),
    (3, 2, None),
    (5, 1, Some(8)),
    (5, 2, Some(7)),
    (5, 3, None),
    (5, 4, None),
    (6, 1, Some(9)),
    (6, 2, None),
    (6, 3, Some(8)),
    (6, 4, None),
    (6, 5, None),
];

/// The general descendant with arbitrary tail parameters.
pub fn build_general_descendant<F: Field>(field: &F, params: &GeneralDescendantParams<F::Elem>) -> LieAlgebra<F> {
    let dim = 10;
    let e = |k: usize| -> Vector<F> {
        let mut v = vec![field.zero(); dim];
        v[k - 1] = field.one();
        v
    };
    let mut brackets: Vec<(usize, usize, Vector<F>)> = vec![
        (4, 1, e(7)),
        (4, 2, e(8)),
        (4, 3, e(9)),
        (7, 2, e(10)),
        (8, 1, e(10)),
        (9, 3, e(10)),
    ];
    for ((i, j, base), c) in TAIL_BRACKETS.iter().zip(params.to_array()) {
        let mut v = base.map(e).unwrap_or_else(|| vec![field.zero(); dim]);
        v[9] = field.add(&v[9], &c);
        brackets.push((*i, *j, v));
    }
    LieAlgebra::from_brackets(field, dim, brackets.into_iter().map(|(i, j, v)| (i - 1, j - 1, v)))
        .and_then(|a| {
            let mut defs = lp_definitions();
            defs.push(def(10, 7, 2));
            a.with_generators(6, defs)
        })
        .expect("descendant relations are well formed")
}

/// Outcome of [`reduce_general_descendant`].
#[derive(Debug, Clone)]
pub struct ReducedDescendant<F: Field> {
    pub mu: F::Elem,
    pub rho: F::Elem,
    pub sigma: F::Elem,
    /// Isomorphism from `A(mu, rho, sigma)` onto the general descendant.
    pub witness: LieMap<F>,
}

/// Shows that the general descendant is isomorphic to `A(μ, ρ, σ)` by the
/// substitution
///
/// ```text
/// y1 = x1             y4 = x4
/// y2 = x2 - εx8       y5 = x5 - κx7 - θx8 - λx9
/// y3 = x3 - ηx7 - ζx8 y6 = x6 - ξx7 - νx8 - πx9
/// ```
///
/// which is returned as a verified isomorphism.
pub fn reduce_general_descendant<F: Field>(
    field: &F,
    params: &GeneralDescendantParams<F::Elem>,
) -> Result<ReducedDescendant<F>> {
    let general = build_general_descendant(field, params);
    let target = build_descendant(field, &params.mu, &params.rho, &params.sigma);
    let x = |k: usize| general.basis_vector(k - 1);
    let minus = |v: &mut Vector<F>, c: &F::Elem, k: usize| axpy(field, v, &field.neg(c), &x(k));
    let p = params;

    let y1 = x(1);
    let mut y2 = x(2);
    minus(&mut y2, &p.epsilon, 8);
    let mut y3 = x(3);
    minus(&mut y3, &p.eta, 7);
    minus(&mut y3, &p.zeta, 8);
    let y4 = x(4);
    let mut y5 = x(5);
    minus(&mut y5, &p.kappa, 7);
    minus(&mut y5, &p.theta, 8);
    minus(&mut y5, &p.lambda, 9);
    let mut y6 = x(6);
    minus(&mut y6, &p.xi, 7);
    minus(&mut y6, &p.nu, 8);
    minus(&mut y6, &p.pi, 9);

    let witness = LieMap::from_generator_images(target, general.clone(), vec![y1, y2, y3, y4, y5, y6])?;
    for k in 7..=10 {
        if witness.image(k - 1) != x(k).as_slice() {
            return Err(Error::Invariant(format!("substitution moves x{k}")));
        }
    }
    if let Some((i, j)) = witness.first_bracket_failure() {
        return Err(Error::Invariant(format!(
            "substitution breaks the bracket [x{}, x{}]",
            i + 1,
            j + 1
        )));
    }
    if !witness.is_invertible() {
        return Err(Error::Invariant("substitution is singular".into()));
    }
    Ok(ReducedDescendant {
        mu: p.mu.clone(),
        rho: p.rho.clone(),
        sigma: p.sigma.clone(),
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{PrimeField, Rationals};
    use proptest::prelude::*;

    fn fp(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn x(l: &LieAlgebra<PrimeField>, k: usize) -> Vec<u64> {
        l.basis_vector(k - 1)
    }

    #[test]
    fn lp_shape() {
        for p in [5, 7, 11, 13, 101] {
            let l = build_lp(&fp(p));
            assert_eq!(l.dim(), 9);
            assert_eq!(l.derived_dim(), 3);
            assert_eq!(l.nilpotency_class(), Some(2));
            assert!(l.jacobi_check());
        }
        let q = build_lp(&Rationals::new());
        assert_eq!(q.derived_dim(), 3);
        assert_eq!(q.nilpotency_class(), Some(2));
    }

    #[test]
    fn lp_brackets() {
        let l = build_lp(&fp(7));
        assert_eq!(l.bracket(&x(&l, 4), &x(&l, 1)).unwrap(), x(&l, 7));
        assert_eq!(l.bracket(&x(&l, 5), &x(&l, 3)).unwrap(), vec![0; 9]);
        let u: Vec<u64> = vec![1, 2, 3, 4, 5, 6, 0, 1, 2];
        assert_eq!(l.bracket(&u, &u).unwrap(), vec![0; 9]);
        assert!(matches!(
            l.bracket(&u[..8], &u),
            Err(Error::DimensionMismatch { expected: 9, got: 8 })
        ));
    }

    #[test]
    fn lp_cross_identity() {
        let l = build_lp(&fp(11));
        for i in 1..=3 {
            for j in 1..=3 {
                assert_eq!(
                    l.bracket(&x(&l, 3 + i), &x(&l, j)).unwrap(),
                    l.bracket(&x(&l, 3 + j), &x(&l, i)).unwrap()
                );
            }
        }
    }

    #[test]
    fn base_descendant() {
        let f = fp(7);
        let a = build_descendant(&f, &0, &0, &0);
        assert_eq!(a.dim(), 10);
        assert!(a.jacobi_check());
        assert_eq!(a.nilpotency_class(), Some(3));
    }

    #[test]
    fn lambda_bracket() {
        let f = fp(13);
        let a = build_descendant(&f, &1, &0, &0);
        assert_eq!(a.bracket(&x(&a, 5), &x(&a, 4)).unwrap(), x(&a, 10));
    }

    #[test]
    fn reduction_with_zero_parameters_is_identity() {
        let f = fp(11);
        let r = reduce_general_descendant(&f, &GeneralDescendantParams::zero(&f)).unwrap();
        assert_eq!((r.mu, r.rho, r.sigma), (0, 0, 0));
        for i in 0..10 {
            assert_eq!(r.witness.image(i), r.witness.codomain().basis_vector(i).as_slice());
        }
    }

    #[test]
    fn reduction_of_epsilon() {
        let f = fp(11);
        let params = GeneralDescendantParams { epsilon: 1, ..GeneralDescendantParams::zero(&f) };
        let r = reduce_general_descendant(&f, &params).unwrap();
        assert_eq!((r.mu, r.rho, r.sigma), (0, 0, 0));
        let mut y2 = x(r.witness.codomain(), 2);
        y2[7] = f.neg(1);
        assert_eq!(r.witness.image(1), y2.as_slice());
        let general = r.witness.codomain();
        assert_eq!(general.bracket(&y2, &x(general, 1)).unwrap(), vec![0; 10]);
    }

    #[test]
    fn reduction_over_rationals() {
        let q = Rationals::new();
        let params = GeneralDescendantParams::from_array(std::array::from_fn(|i| q.from_i64(i as i64 - 5)));
        let r = reduce_general_descendant(&q, &params).unwrap();
        assert_eq!(r.mu, params.mu);
        assert!(r.witness.is_isomorphism());
    }

    proptest! {
        #[test]
        fn every_descendant_is_a_class_three_lie_algebra(l in 0u64..13, m in 0u64..13, n in 0u64..13) {
            let f = fp(13);
            let a = build_descendant(&f, &l, &m, &n);
            prop_assert!(a.jacobi_check());
            prop_assert_eq!(a.nilpotency_class(), Some(3));
            let q = a.quotient_by_coordinates(&[9]).unwrap();
            prop_assert!(q.same_structure(&build_lp(&f)));
        }

        #[test]
        fn reduction_keeps_mu_rho_sigma(params in proptest::array::uniform12(0u64..17)) {
            let f = fp(17);
            let mut params = GeneralDescendantParams::from_array(params);
            params.mu = 2;
            params.rho = 3;
            params.sigma = 4;
            let general = build_general_descendant(&f, &params);
            prop_assert!(general.jacobi_check());
            let r = reduce_general_descendant(&f, &params).unwrap();
            prop_assert_eq!((r.mu, r.rho, r.sigma), (2, 3, 4));
            // brute recomputation of the three surviving brackets
            let y = |k: usize| r.witness.image(k - 1).to_vec();
            let x10 = x(&general, 10);
            let scale = |c: u64| x10.iter().map(|&v| f.mul(v, c)).collect::<Vec<_>>();
            prop_assert_eq!(general.bracket(&y(5), &y(4)).unwrap(), scale(2));
            prop_assert_eq!(general.bracket(&y(6), &y(4)).unwrap(), scale(3));
            prop_assert_eq!(general.bracket(&y(6), &y(5)).unwrap(), scale(4));
            prop_assert!(r.witness.is_isomorphism());
        }

        #[test]
        fn scaling_the_top_block_scales_the_parameters(
            l in 0u64..11, m in 0u64..11, n in 0u64..11, delta in 1u64..11,
        ) {
            let f = fp(11);
            let a = build_descendant(&f, &l, &m, &n);
            let target = build_descendant(&f, &f.mul(delta, l), &f.mul(delta, m), &f.mul(delta, n));
            let gens = (1..=6)
                .map(|k| {
                    let v = x(&a, k);
                    if k >= 4 { v.iter().map(|&c| f.mul(c, delta)).collect() } else { v }
                })
                .collect();
            // y_i satisfy the relations of the scaled algebra once x_7..x_10
            // are taken as the induced brackets
            let map = LieMap::from_generator_images(target, a, gens).unwrap();
            prop_assert!(map.is_homomorphism());
        }
    }
}
