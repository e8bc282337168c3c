//! Determinants of matrices over the Laurent ring and over the integers.
//!
//! Fraction-free (Bareiss) elimination with exact division keeps every
//! intermediate value in the ring; cofactor expansion handles small
//! sizes.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::laurent::LaurentPoly;

const COFACTOR_CUTOFF: usize = 5;

/// Determinant of a square matrix of Laurent polynomials. The empty
/// matrix has determinant 1.
pub fn determinant(rows: &[Vec<LaurentPoly>], num_vars: usize) -> LaurentPoly {
    let n = rows.len();
    for r in rows {
        assert_eq!(r.len(), n, "determinant of a non-square matrix");
    }
    if n == 0 {
        return LaurentPoly::one(num_vars);
    }
    if n < COFACTOR_CUTOFF {
        cofactor_det(rows, num_vars)
    } else {
        bareiss_det(rows, num_vars)
    }
}

fn cofactor_det(rows: &[Vec<LaurentPoly>], num_vars: usize) -> LaurentPoly {
    let n = rows.len();
    if n == 1 {
        return rows[0][0].clone();
    }
    let mut acc = LaurentPoly::zero(num_vars);
    for (i, row) in rows.iter().enumerate() {
        if row[0].is_zero() {
            continue;
        }
        let minor: Vec<Vec<LaurentPoly>> = rows
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != i)
            .map(|(_, r)| r[1..].to_vec())
            .collect();
        let term = &row[0] * &cofactor_det(&minor, num_vars);
        if i % 2 == 0 {
            acc = &acc + &term;
        } else {
            acc = &acc - &term;
        }
    }
    acc
}

fn bareiss_det(rows: &[Vec<LaurentPoly>], num_vars: usize) -> LaurentPoly {
    let n = rows.len();
    let mut m: Vec<Vec<LaurentPoly>> = rows.to_vec();
    let mut negate = false;
    let mut prev = LaurentPoly::one(num_vars);
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return LaurentPoly::zero(num_vars),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num
                    .exact_div(&prev)
                    .expect("fraction-free elimination divides exactly");
            }
            m[i][k] = LaurentPoly::zero(num_vars);
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Integer determinant, fraction-free. The empty matrix has determinant 1.
pub fn determinant_int(rows: &[Vec<BigInt>]) -> BigInt {
    let n = rows.len();
    for r in rows {
        assert_eq!(r.len(), n, "determinant of a non-square matrix");
    }
    if n == 0 {
        return BigInt::one();
    }
    let mut m: Vec<Vec<BigInt>> = rows.to_vec();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[k][k] * &m[i][j] - &m[i][k] * &m[k][j];
                let (q, r) = num.div_rem(&prev);
                debug_assert!(r.is_zero());
                m[i][j] = q;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}
