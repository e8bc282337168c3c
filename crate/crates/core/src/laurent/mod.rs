//! Exact arithmetic in the Laurent polynomial ring `Z[t1^±1, …, tμ^±1]`
//! and in `Z[t^±1]`, together with canonical representatives up to
//! multiplication by units `±t1^a1⋯tμ^aμ`.
//!
//! Polynomials are sparse maps from exponent vectors to nonzero integer
//! coefficients. Coefficients are arbitrary precision; minor determinants
//! overflow fixed width quickly.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

mod gcd;
mod text;

pub use text::parse_poly;

/// Sparse Laurent polynomial with integer coefficients.
///
/// Invariants: no stored coefficient is zero, every exponent vector has
/// length `num_vars`, and the zero polynomial is the empty map. Values are
/// immutable after construction, so they can be shared freely across
/// threads.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LaurentPoly {
    num_vars: usize,
    terms: BTreeMap<Vec<i64>, BigInt>,
}

impl LaurentPoly {
    pub fn zero(num_vars: usize) -> Self {
        LaurentPoly {
            num_vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(num_vars: usize) -> Self {
        Self::constant(num_vars, BigInt::one())
    }

    pub fn constant<C: Into<BigInt>>(num_vars: usize, c: C) -> Self {
        Self::monomial(num_vars, vec![0; num_vars], c)
    }

    /// `c * t1^e1 ⋯ tμ^eμ`.
    pub fn monomial<C: Into<BigInt>>(num_vars: usize, exps: Vec<i64>, c: C) -> Self {
        assert_eq!(
            exps.len(),
            num_vars,
            "exponent vector length must equal num_vars"
        );
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        LaurentPoly { num_vars, terms }
    }

    /// The variable `t_{var}` (0-based index).
    pub fn var(num_vars: usize, var: usize) -> Self {
        assert!(var < num_vars, "variable index out of range");
        let mut exps = vec![0; num_vars];
        exps[var] = 1;
        Self::monomial(num_vars, exps, 1)
    }

    /// Builds a polynomial from raw terms, summing duplicates and dropping
    /// zero coefficients.
    pub fn from_terms<C, I>(num_vars: usize, iter: I) -> Self
    where
        C: Into<BigInt>,
        I: IntoIterator<Item = (Vec<i64>, C)>,
    {
        let mut terms: BTreeMap<Vec<i64>, BigInt> = BTreeMap::new();
        for (e, c) in iter {
            assert_eq!(
                e.len(),
                num_vars,
                "exponent vector length must equal num_vars"
            );
            let entry = terms.entry(e).or_insert_with(BigInt::zero);
            *entry += c.into();
        }
        terms.retain(|_, c| !c.is_zero());
        LaurentPoly { num_vars, terms }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&vec![0; self.num_vars])
                .is_some_and(|c| c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[i64]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Value at `t_i = 1` for all variables: the coefficient sum.
    pub fn coeff_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Per-variable minimum exponents; `None` for the zero polynomial.
    pub fn min_exponents(&self) -> Option<Vec<i64>> {
        if self.is_zero() {
            return None;
        }
        let mut mins = vec![i64::MAX; self.num_vars];
        for e in self.terms.keys() {
            for (m, &x) in mins.iter_mut().zip(e) {
                *m = (*m).min(x);
            }
        }
        Some(mins)
    }

    /// Per-variable maximum exponents; `None` for the zero polynomial.
    pub fn max_exponents(&self) -> Option<Vec<i64>> {
        if self.is_zero() {
            return None;
        }
        let mut maxs = vec![i64::MIN; self.num_vars];
        for e in self.terms.keys() {
            for (m, &x) in maxs.iter_mut().zip(e) {
                *m = (*m).max(x);
            }
        }
        Some(maxs)
    }

    /// Multiplies by the monomial `t^delta` (adds `delta` to every exponent).
    pub fn shifted(&self, delta: &[i64]) -> Self {
        assert_eq!(delta.len(), self.num_vars);
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (e.iter().zip(delta).map(|(a, b)| a + b).collect(), c.clone()))
            .collect();
        LaurentPoly {
            num_vars: self.num_vars,
            terms,
        }
    }

    fn shifted_in_var(&self, var: usize, by: i64) -> Self {
        let mut delta = vec![0; self.num_vars];
        delta[var] = by;
        self.shifted(&delta)
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.num_vars);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `p(t^{m1}, …, t^{mμ})` as a one-variable Laurent polynomial. Each
    /// term's new exponent is the dot product of its exponent vector with
    /// `m`; like exponents collect and may cancel.
    pub fn substitute_powers(&self, m: &[i64]) -> LaurentPoly {
        assert_eq!(
            m.len(),
            self.num_vars,
            "substitution vector length must equal num_vars"
        );
        LaurentPoly::from_terms(
            1,
            self.terms.iter().map(|(e, c)| {
                let dot: i64 = e.iter().zip(m).map(|(a, b)| a * b).sum();
                (vec![dot], c.clone())
            }),
        )
    }

    /// Sets `t_{var} = 1` and reindexes the remaining variables,
    /// preserving their order.
    pub fn eval_at_one(&self, var: usize) -> LaurentPoly {
        assert!(var < self.num_vars, "variable index out of range");
        LaurentPoly::from_terms(
            self.num_vars - 1,
            self.terms.iter().map(|(e, c)| {
                let mut out = e.clone();
                out.remove(var);
                (out, c.clone())
            }),
        )
    }

    /// `p(t1^-1, …, tμ^-1)`: negates every exponent vector.
    pub fn involution(&self) -> LaurentPoly {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (e.iter().map(|x| -x).collect(), c.clone()))
            .collect();
        LaurentPoly {
            num_vars: self.num_vars,
            terms,
        }
    }

    /// Reorders variables: new variable `i` is old variable `perm[i]`.
    pub fn permute_vars(&self, perm: &[usize]) -> LaurentPoly {
        assert_eq!(perm.len(), self.num_vars);
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let out: Vec<i64> = perm.iter().map(|&p| e[p]).collect();
                (out, c.clone())
            })
            .collect();
        LaurentPoly {
            num_vars: self.num_vars,
            terms,
        }
    }

    /// Positive gcd of all coefficients; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Exact division in the Laurent ring. Returns `None` when `self` is
    /// not divisible by `divisor`; that is a negative answer, not an
    /// error. Panics on the zero divisor.
    pub fn exact_div(&self, divisor: &LaurentPoly) -> Option<LaurentPoly> {
        assert_eq!(self.num_vars, divisor.num_vars, "variable count mismatch");
        assert!(!divisor.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(LaurentPoly::zero(self.num_vars));
        }
        // Shift both operands to ordinary polynomials (minimum exponent 0
        // in every variable). Valuations are additive, so divisibility and
        // the quotient transfer back with the inverse shift.
        let pmin = self.min_exponents().unwrap();
        let qmin = divisor.min_exponents().unwrap();
        let neg = |v: &[i64]| v.iter().map(|x| -x).collect::<Vec<_>>();
        let p0 = self.shifted(&neg(&pmin));
        let q0 = divisor.shifted(&neg(&qmin));

        let (lead_e, lead_c) = q0.terms.iter().next_back().unwrap();
        let lead_e = lead_e.clone();
        let lead_c = lead_c.clone();

        let mut rem = p0;
        let mut quot = LaurentPoly::zero(self.num_vars);
        while !rem.is_zero() {
            let (re, rc) = rem.terms.iter().next_back().unwrap();
            let diff: Vec<i64> = re.iter().zip(&lead_e).map(|(a, b)| a - b).collect();
            if diff.iter().any(|&d| d < 0) {
                return None;
            }
            let (q, r) = rc.div_rem(&lead_c);
            if !r.is_zero() {
                return None;
            }
            let term = LaurentPoly::monomial(self.num_vars, diff, q);
            rem = &rem - &(&term * &q0);
            quot = &quot + &term;
        }
        let back: Vec<i64> = pmin.iter().zip(&qmin).map(|(a, b)| a - b).collect();
        Some(quot.shifted(&back))
    }

    /// A gcd of `self` and `other` in the Laurent ring, as a unit class.
    /// `gcd(p, 0) ≐ p`; the result divides both arguments exactly.
    pub fn gcd(&self, other: &LaurentPoly) -> UnitClass {
        gcd::gcd_poly(self, other).canonicalize()
    }

    /// Canonical representative of the orbit of `self` under
    /// multiplication by units `±t^a`: every variable's minimum exponent
    /// is shifted to 0 and the coefficient of the lexicographically
    /// smallest exponent vector present is made positive.
    pub fn canonicalize(&self) -> UnitClass {
        if self.is_zero() {
            return UnitClass { rep: self.clone() };
        }
        let mins = self.min_exponents().unwrap();
        let neg: Vec<i64> = mins.iter().map(|x| -x).collect();
        let mut rep = self.shifted(&neg);
        let first_negative = rep.terms.values().next().unwrap().is_negative();
        if first_negative {
            rep = -&rep;
        }
        UnitClass { rep }
    }
}

/// A Laurent polynomial considered up to multiplication by `±t^a`,
/// stored as its canonical representative. Two polynomials are associate
/// iff their canonical forms are structurally equal.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct UnitClass {
    rep: LaurentPoly,
}

impl UnitClass {
    pub fn zero(num_vars: usize) -> Self {
        UnitClass {
            rep: LaurentPoly::zero(num_vars),
        }
    }

    pub fn one(num_vars: usize) -> Self {
        UnitClass {
            rep: LaurentPoly::one(num_vars),
        }
    }

    pub fn rep(&self) -> &LaurentPoly {
        &self.rep
    }

    pub fn into_poly(self) -> LaurentPoly {
        self.rep
    }

    pub fn num_vars(&self) -> usize {
        self.rep.num_vars
    }

    pub fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.rep.is_one()
    }
}

impl fmt::Display for UnitClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.rep.fmt(f)
    }
}

impl std::ops::Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        let terms = self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect();
        LaurentPoly {
            num_vars: self.num_vars,
            terms,
        }
    }
}

impl std::ops::Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl std::ops::Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        assert_eq!(self.num_vars, rhs.num_vars, "variable count mismatch");
        let mut terms = self.terms.clone();
        for (e, c) in &rhs.terms {
            let entry = terms.entry(e.clone()).or_insert_with(BigInt::zero);
            *entry += c;
        }
        terms.retain(|_, c| !c.is_zero());
        LaurentPoly {
            num_vars: self.num_vars,
            terms,
        }
    }
}

impl std::ops::Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl std::ops::Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        assert_eq!(self.num_vars, rhs.num_vars, "variable count mismatch");
        let mut terms: BTreeMap<Vec<i64>, BigInt> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e: Vec<i64> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                let entry = terms.entry(e).or_insert_with(BigInt::zero);
                *entry += c1 * c2;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        LaurentPoly {
            num_vars: self.num_vars,
            terms,
        }
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl std::ops::$trait<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
        impl std::ops::$trait<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$method(rhs)
            }
        }
        impl std::ops::$trait<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

// ---------------------------------------------------------------------
// Internal helpers shared with the gcd machinery.
// ---------------------------------------------------------------------

impl LaurentPoly {
    /// Degree in one variable; `None` for the zero polynomial.
    pub(crate) fn deg_in(&self, var: usize) -> Option<i64> {
        self.terms.keys().map(|e| e[var]).max()
    }

    /// Leading coefficient with respect to `var`: the coefficient
    /// polynomial (in the other variables, with `var`'s exponent zeroed)
    /// of the highest power of `var`.
    pub(crate) fn leading_coeff_in(&self, var: usize) -> LaurentPoly {
        let deg = match self.deg_in(var) {
            Some(d) => d,
            None => return LaurentPoly::zero(self.num_vars),
        };
        LaurentPoly::from_terms(
            self.num_vars,
            self.terms
                .iter()
                .filter(|(e, _)| e[var] == deg)
                .map(|(e, c)| {
                    let mut out = e.clone();
                    out[var] = 0;
                    (out, c.clone())
                }),
        )
    }

    /// Coefficient polynomials by the power of `var`, with `var` zeroed.
    pub(crate) fn coeffs_in(&self, var: usize) -> BTreeMap<i64, LaurentPoly> {
        let mut out: BTreeMap<i64, LaurentPoly> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut sub = e.clone();
            let d = sub[var];
            sub[var] = 0;
            let entry = out
                .entry(d)
                .or_insert_with(|| LaurentPoly::zero(self.num_vars));
            *entry = &*entry + &LaurentPoly::monomial(self.num_vars, sub, c.clone());
        }
        out
    }

    pub(crate) fn mul_var_power(&self, var: usize, by: i64) -> LaurentPoly {
        self.shifted_in_var(var, by)
    }
}
