//! Multivariate gcd over the integers.
//!
//! Laurent polynomials are shifted to ordinary polynomials by unit
//! multiplication, then a recursive content/primitive-part gcd treats
//! `Z[t1,…,tμ]` as `(Z[t1,…,t_{μ-1}])[tμ]` with a subresultant
//! pseudo-remainder sequence at each level. Everything stays exact; no
//! modular arithmetic is needed at this scale.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::LaurentPoly;

/// Un-normalized gcd; callers canonicalize.
pub(crate) fn gcd_poly(p: &LaurentPoly, q: &LaurentPoly) -> LaurentPoly {
    assert_eq!(p.num_vars(), q.num_vars(), "variable count mismatch");
    if p.is_zero() {
        return q.clone();
    }
    if q.is_zero() {
        return p.clone();
    }
    let to_ordinary = |x: &LaurentPoly| {
        let neg: Vec<i64> = x.min_exponents().unwrap().iter().map(|e| -e).collect();
        x.shifted(&neg)
    };
    gcd_rec(&to_ordinary(p), &to_ordinary(q), p.num_vars())
}

/// Gcd of ordinary (nonnegative-exponent) polynomials whose variables of
/// index `>= level` are unused. Level 0 means integer constants.
fn gcd_rec(p: &LaurentPoly, q: &LaurentPoly, level: usize) -> LaurentPoly {
    if p.is_zero() {
        return q.clone();
    }
    if q.is_zero() {
        return p.clone();
    }
    if level == 0 {
        let a = constant_of(p);
        let b = constant_of(q);
        return LaurentPoly::constant(p.num_vars(), a.gcd(&b));
    }
    let x = level - 1;
    if p.deg_in(x) == Some(0) && q.deg_in(x) == Some(0) {
        return gcd_rec(p, q, level - 1);
    }

    let (cp, pp) = content_and_primitive(p, x);
    let (cq, qq) = content_and_primitive(q, x);
    let c = gcd_rec(&cp, &cq, level - 1);

    let (mut a, mut b) = if p.deg_in(x) >= q.deg_in(x) {
        (pp, qq)
    } else {
        (qq, pp)
    };

    // Subresultant pseudo-remainder sequence (Collins); every interior
    // division is exact.
    let one = LaurentPoly::one(p.num_vars());
    let mut g = one.clone();
    let mut h = one.clone();
    loop {
        let da = a.deg_in(x).unwrap();
        let db = b.deg_in(x).unwrap();
        let delta = (da - db) as u32;
        let r = pseudo_rem(&a, &b, x);
        if r.is_zero() {
            break;
        }
        if r.deg_in(x) == Some(0) {
            b = one;
            break;
        }
        a = b;
        let divisor = &g * &h.pow(delta);
        b = r
            .exact_div(&divisor)
            .expect("subresultant division is exact");
        g = a.leading_coeff_in(x);
        if delta > 0 {
            h = g
                .pow(delta)
                .exact_div(&h.pow(delta - 1))
                .expect("subresultant division is exact");
        }
    }
    let (_, bp) = content_and_primitive(&b, x);
    &c * &bp
}

/// Pseudo-remainder of `u` by `v` in the variable `x`:
/// `lc(v)^(deg u - deg v + 1) * u = q*v + r` with `deg_x r < deg_x v`.
fn pseudo_rem(u: &LaurentPoly, v: &LaurentPoly, x: usize) -> LaurentPoly {
    let dv = v.deg_in(x).expect("pseudo_rem by zero");
    let lv = v.leading_coeff_in(x).mul_var_power(x, 0);
    let du = u.deg_in(x).expect("pseudo_rem of zero");
    let mut e = du - dv + 1;
    let mut r = u.clone();
    while !r.is_zero() && r.deg_in(x).unwrap() >= dv {
        let dr = r.deg_in(x).unwrap();
        let s = r.leading_coeff_in(x).mul_var_power(x, dr - dv);
        r = &(&lv * &r) - &(&s * v);
        e -= 1;
    }
    if e > 0 {
        r = &r * &lv.pow(e as u32);
    }
    r
}

/// Content (gcd of the coefficient polynomials w.r.t. `x`) and the
/// primitive part.
fn content_and_primitive(p: &LaurentPoly, x: usize) -> (LaurentPoly, LaurentPoly) {
    let mut content = LaurentPoly::zero(p.num_vars());
    for coeff in p.coeffs_in(x).values() {
        content = gcd_rec(&content, coeff, x);
        if content.is_one() {
            break;
        }
    }
    let primitive = p.exact_div(&content).expect("content divides");
    (content, primitive)
}

fn constant_of(p: &LaurentPoly) -> BigInt {
    debug_assert!(p.num_terms() == 1);
    p.terms()
        .next()
        .map(|(_, c)| c.clone())
        .unwrap_or_else(BigInt::zero)
}

#[cfg(test)]
mod tests {
    use super::super::parse_poly;
    use super::*;

    fn p(s: &str, nv: usize) -> LaurentPoly {
        parse_poly(s, nv).unwrap()
    }

    #[test]
    fn univariate_common_factor() {
        let a = p("t^4 - 1", 1);
        let b = p("t^6 - 1", 1);
        assert_eq!(a.gcd(&b), p("t^2 - 1", 1).canonicalize());
    }

    #[test]
    fn multivariate_common_factor() {
        let g = p("t1*t2 - 1", 2);
        let a = &g * &p("t1 + t2", 2);
        let b = &g * &p("t1 - 3", 2);
        assert_eq!(a.gcd(&b), g.canonicalize());
    }

    #[test]
    fn coprime_pair_has_unit_gcd() {
        let a = p("t1 - 1", 2);
        let b = p("t2 - 1", 2);
        assert!(a.gcd(&b).is_one());
    }

    #[test]
    fn integer_contents_combine() {
        let a = p("6*t1^2 - 6", 2);
        let b = p("4*t2 - 4*t1", 2);
        let g = a.gcd(&b);
        assert_eq!(g.rep(), &p("2", 2));
    }

    #[test]
    fn laurent_shifts_are_ignored() {
        let a = p("t1^-3*t2^-1", 2) * p("t1*t2 + 1", 2);
        let b = p("t1^5*t2^9", 2) * p("t1*t2 + 1", 2) * p("t1 + 1", 2);
        assert_eq!(a.gcd(&b).rep(), &p("t1*t2 + 1", 2));
    }

    #[test]
    fn gcd_divides_both_arguments() {
        let g = p("2*t1^2*t2 - 2", 2);
        let a = &g * &p("t1^3 + t2^2 - 5", 2);
        let b = &g * &p("7*t2^3 - t1", 2);
        let d = a.gcd(&b);
        assert!(a.exact_div(d.rep()).is_some());
        assert!(b.exact_div(d.rep()).is_some());
        assert!(d.rep().exact_div(&g).is_some());
    }

    #[test]
    fn three_variables() {
        let g = p("t1*t2*t3 - 1", 3);
        let a = &g * &p("t1 + t2 + t3", 3);
        let b = &g * &p("t1*t3 - t2", 3);
        assert_eq!(a.gcd(&b), g.canonicalize());
    }
}
