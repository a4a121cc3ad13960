//! Plain-text dump of an algebra over `F_p`.
//!
//! ```text
//! 9 7
//! 4 1 : 7 1
//! 5 1 : 8 1
//! ```
//!
//! The header is `dim p`; each further line is a nonzero bracket
//! `[x_i, x_j]` with `i > j`, followed by its nonzero coordinates as
//! `k c` pairs. Indices are 1-based.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::finite_field::PrimeField;

use super::LieAlgebra;

pub fn dump(algebra: &LieAlgebra<PrimeField>) -> String {
    let mut out = format!("{} {}\n", algebra.dim(), algebra.field().modulus());
    for (i, j, v) in algebra.nonzero_brackets() {
        write!(out, "{} {} :", i + 1, j + 1).expect("writing to a String");
        for (k, c) in v.iter().enumerate().filter(|(_, c)| **c != 0) {
            write!(out, " {} {}", k + 1, c).expect("writing to a String");
        }
        out.push('\n');
    }
    out
}

pub fn parse_dump(text: &str) -> Result<LieAlgebra<PrimeField>> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let bad = |line: usize, msg: &str| Error::Parse { line: line + 1, msg: msg.to_string() };
    let (hl, header) = lines.next().ok_or_else(|| bad(0, "empty input"))?;
    let nums: Vec<u64> = header
        .split_whitespace()
        .map(|t| t.parse().map_err(|_| bad(hl, "header must be `dim p`")))
        .collect::<Result<_>>()?;
    let [dim, p] = nums[..] else {
        return Err(bad(hl, "header must be `dim p`"));
    };
    let dim = dim as usize;
    let field = PrimeField::new(p)?;
    let mut brackets = Vec::new();
    for (ln, line) in lines {
        let (lhs, rhs) = line.split_once(':').ok_or_else(|| bad(ln, "missing `:`"))?;
        let idx: Vec<usize> = lhs
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| bad(ln, "bad index")))
            .collect::<Result<_>>()?;
        let [i, j] = idx[..] else {
            return Err(bad(ln, "expected two indices before `:`"));
        };
        if j == 0 || i <= j || i > dim {
            return Err(bad(ln, "indices must satisfy dim >= i > j >= 1"));
        }
        let terms: Vec<u64> = rhs
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| bad(ln, "bad coefficient")))
            .collect::<Result<_>>()?;
        if !terms.len().is_multiple_of(2) {
            return Err(bad(ln, "coordinates must come in `k c` pairs"));
        }
        let mut v = vec![0; dim];
        for pair in terms.chunks(2) {
            let k = pair[0] as usize;
            if k == 0 || k > dim {
                return Err(bad(ln, "coordinate index out of range"));
            }
            v[k - 1] = field.add(v[k - 1], field.reduce(pair[1]));
        }
        brackets.push((i - 1, j - 1, v));
    }
    LieAlgebra::from_brackets(&field, dim, brackets)
}
