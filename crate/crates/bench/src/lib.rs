//! Shared inputs for the benchmark targets.

use alexpoly::laurent::{parse_poly, LaurentPoly};
use alexpoly::linkdiag::{braid_closure, LinkDiagram};

pub fn trefoil() -> LinkDiagram {
    braid_closure(&[1, 1, 1], 2).unwrap()
}

pub fn borromean() -> LinkDiagram {
    braid_closure(&[1, -2, 1, -2, 1, -2], 3).unwrap()
}

/// A pair of two-variable polynomials with a nontrivial common factor.
pub fn gcd_input() -> (LaurentPoly, LaurentPoly) {
    let g = parse_poly("3*t1^2*t2 - t1 + 2*t2^2 - 5", 2).unwrap();
    let a = &g * &parse_poly("t1^3 + t2^3 - 4*t1*t2 + 1", 2).unwrap();
    let b = &g * &parse_poly("2*t1^2 - 7*t2 + t1*t2^2", 2).unwrap();
    (a, b)
}

/// Dense-ish integer-coefficient polynomial matrix for elimination.
pub fn det_input(n: usize) -> Vec<Vec<LaurentPoly>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let c = ((3 * i + 5 * j) % 7) as i64 - 3;
                    let e = ((i * j) % 3) as i64;
                    parse_poly(&format!("{c}*t^{e} + {}", (i + j) % 4), 1).unwrap()
                })
                .collect()
        })
        .collect()
}
