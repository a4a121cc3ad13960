use crate::aut::SporadicParams;
use crate::error::{Error, Result};
use crate::finite_field::{PrimeField, Residue};
use crate::lie::build_descendant;
use crate::mat3::Mat3;

/// The action matrix of a sporadic automorphism on `(λ, μ, ν)`.
///
/// Computed twice: from the entries in `a, b, c, d, e, f`, and from the
/// simplified entries in `d, e, u`. The two must agree.
pub fn sporadic_action_matrix(field: &PrimeField, params: &SporadicParams) -> Result<Mat3> {
    let raw = raw_matrix(field, params);
    let simplified = simplified_matrix(field, params)?;
    if raw != simplified {
        return Err(Error::Invariant(format!(
            "raw and simplified action matrices differ at p = {} for {params:?}",
            field.modulus()
        )));
    }
    Ok(raw)
}

pub(crate) fn raw_matrix(field: &PrimeField, q: &SporadicParams) -> Mat3 {
    let (a, b, c, d, e, f) = (q.a, q.b, q.c, q.d, q.e, q.f);
    let m = |xs: &[u64]| xs.iter().fold(1, |acc, &x| field.mul(acc, x));
    let add = |x, y| field.add(x, y);
    let sub = |x, y| field.sub(x, y);
    let neg = |x| field.neg(x);
    Mat3([
        [
            sub(neg(m(&[a, b, d, f])), m(&[a, f])),
            sub(neg(m(&[a, c, d, f])), m(&[a, d, e, f])),
            add(neg(m(&[a, b, d, e, f])), m(&[a, c, f])),
        ],
        [
            add(neg(m(&[a, b])), m(&[a, d])),
            add(neg(m(&[a, c])), m(&[a, e])),
            sub(m(&[a, b, e]), m(&[a, c, d])),
        ],
        [
            add(m(&[d, d, f]), f),
            m(&[2, d, e, f]),
            sub(m(&[d, d, e, f]), m(&[e, f])),
        ],
    ])
}

pub(crate) fn simplified_matrix(field: &PrimeField, q: &SporadicParams) -> Result<Mat3> {
    let (d, e, u) = (q.d, q.e, q.u);
    let m = |xs: &[u64]| xs.iter().fold(1, |acc, &x| field.mul(acc, x));
    let div = |x, y| field.div(x, y);
    let d2 = m(&[d, d]);
    let s = field.add(d2, 1); // d^2 + 1
    let t = field.sub(d2, 1); // d^2 - 1
    let quart = field.add(field.add(m(&[d2, d2]), m(&[4, d2])), 3); // d^4 + 4d^2 + 3
    let ui = field.inv(u)?;
    let two_d = m(&[2, d]);
    Ok(Mat3([
        [div(m(&[s, s]), two_d)?, field.neg(m(&[e, s])), div(m(&[e, quart]), two_d)?],
        [
            div(m(&[d, u, e, s, s]), m(&[2, t]))?,
            field.neg(div(m(&[u, s]), d)?),
            field.neg(div(m(&[u, quart]), 2)?),
        ],
        [m(&[2, ui, e]), div(m(&[4, ui, t]), s)?, div(m(&[2, ui, t, t]), m(&[d, s]))?],
    ]))
}

/// Parameters `(λ', μ', ν')` of the descendant presented by the images
/// `y_1..y_6` of a block automorphism with both blocks `a`, computed
/// directly in `A(λ, μ, ν)` by bracketing.
///
/// `y_10 = [y_4, y_1, y_2]` is a multiple `c x_10`, and
/// `[y_5, y_4], [y_6, y_4], [y_6, y_5]` are `λ'y_10, μ'y_10, ν'y_10`.
pub fn induced_parameters(field: &PrimeField, a: &Mat3, params: [Residue; 3]) -> Result<[Residue; 3]> {
    let alg = build_descendant(field, &params[0], &params[1], &params[2]);
    let y = |i: usize| -> Vec<u64> {
        let mut v = vec![0; 10];
        let off = if i < 3 { 0 } else { 3 };
        v[off..off + 3].copy_from_slice(&a.row(i % 3));
        v
    };
    let y10 = alg.bracket3(&y(3), &y(0), &y(1));
    if y10[..9].iter().any(|&c| c != 0) || y10[9] == 0 {
        return Err(Error::Invariant("[y4, y1, y2] is not a nonzero multiple of x10".into()));
    }
    let c = y10[9];
    let coeff = |i: usize, j: usize| -> Result<Residue> {
        let v = alg.bracket(&y(i), &y(j))?;
        if v[..9].iter().any(|&x| x != 0) {
            return Err(Error::Invariant("bracket of top block leaves span(x10)".into()));
        }
        field.div(v[9], c)
    };
    Ok([coeff(4, 3)?, coeff(5, 3)?, coeff(5, 4)?])
}
