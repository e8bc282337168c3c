//! Multilink bookkeeping: multiplicity vectors over a linking matrix,
//! the specialization dictionary from the multivariable polynomial to
//! the one-variable multilink polynomial, boundary cable data, split
//! degeneracy detection, and the zero-multiplicity deletion identity at
//! the one-variable level.

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, UnitClass};
use crate::linkdiag::LinkingMatrix;

/// A link's linking data together with one integer multiplicity per
/// component. Derived quantities: `d = gcd(m_1, …, m_mu) >= 0`,
/// `s_i = sum_{j != i} m_j l_ij`, `d_i = gcd(m_i, s_i) >= 0`, and the
/// coprime pair `p_i, q_i` with `d_i p_i = m_i`, `d_i q_i = -s_i`
/// whenever `d_i > 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultilinkSpec {
    m: Vec<i64>,
    lk: LinkingMatrix,
}

/// Boundary cable data on the torus around one component: the surface
/// meets it in `d` parallel curves of slope `(p, q)` with `p, q`
/// coprime. `d = 0` flags the degenerate case `m_i = s_i = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CableData {
    pub d: i64,
    pub p: i64,
    pub q: i64,
}

impl MultilinkSpec {
    pub fn new(lk: LinkingMatrix, m: Vec<i64>) -> Result<Self> {
        if m.len() != lk.mu() {
            return Err(Error::InvalidInput(format!(
                "multiplicity vector has length {} but the link has {} component(s)",
                m.len(),
                lk.mu()
            )));
        }
        Ok(MultilinkSpec { m, lk })
    }

    pub fn mu(&self) -> usize {
        self.m.len()
    }

    pub fn m(&self) -> &[i64] {
        &self.m
    }

    pub fn lk(&self) -> &LinkingMatrix {
        &self.lk
    }

    /// gcd of the multiplicities, nonnegative; 0 iff `m` is the zero
    /// vector.
    pub fn d(&self) -> i64 {
        self.m.iter().fold(0i64, |g, &x| g.gcd(&x))
    }

    /// `s_i = sum_{j != i} m_j l_ij`.
    pub fn s(&self, i: usize) -> i64 {
        (0..self.mu())
            .filter(|&j| j != i)
            .map(|j| self.m[j] * self.lk.get(i, j))
            .sum()
    }

    /// `d_i = gcd(m_i, s_i) >= 0`; 0 exactly when `m_i = s_i = 0`.
    pub fn d_i(&self, i: usize) -> i64 {
        self.m[i].gcd(&self.s(i))
    }

    /// Cable data `(d_i, p_i, q_i)` of the surface boundary around
    /// component `i`.
    pub fn cable_data(&self, i: usize) -> CableData {
        assert!(i < self.mu(), "component index out of range");
        let d = self.d_i(i);
        if d == 0 {
            return CableData { d: 0, p: 0, q: 0 };
        }
        CableData {
            d,
            p: self.m[i] / d,
            q: -self.s(i) / d,
        }
    }

    /// Number of indices with `m_i = s_i = 0`. Any such index forces the
    /// one-variable multilink polynomial to vanish.
    pub fn degenerate_count(&self) -> usize {
        (0..self.mu()).filter(|&i| self.d_i(i) == 0).count()
    }

    /// Reverses the orientation of component `i`: negates `m_i` and the
    /// `i`-th row and column of the linking matrix. All derived data is
    /// unchanged.
    pub fn reversed(&self, i: usize) -> MultilinkSpec {
        assert!(i < self.mu(), "component index out of range");
        let mut m = self.m.clone();
        m[i] = -m[i];
        let mut rows = self.lk.rows().to_vec();
        for x in rows[i].iter_mut() {
            *x = -*x;
        }
        for row in rows.iter_mut() {
            row[i] = -row[i];
        }
        MultilinkSpec {
            m,
            lk: LinkingMatrix::from_rows(rows).expect("reversal keeps symmetry"),
        }
    }

    /// The sub-multilink obtained by dropping the last component.
    fn dropped_last(&self) -> MultilinkSpec {
        let mu = self.mu();
        MultilinkSpec {
            m: self.m[..mu - 1].to_vec(),
            lk: self.lk.deleted(mu - 1),
        }
    }
}

/// One-variable multilink polynomial from the multivariable one:
/// `delta(t^{m_1})` for one component, `(t^d - 1) delta(t^{m_1}, …,
/// t^{m_mu})` otherwise. Rejects the zero multiplicity vector, for which
/// the infinite cyclic cover does not exist.
pub fn specialize(delta: &UnitClass, spec: &MultilinkSpec) -> Result<UnitClass> {
    assert_eq!(delta.num_vars(), spec.mu(), "variable count mismatch");
    let d = spec.d();
    if d == 0 {
        return Err(Error::ZeroMultiplicity);
    }
    let subst = delta.rep().substitute_powers(spec.m());
    if spec.mu() == 1 {
        return Ok(subst.canonicalize());
    }
    let factor = cyclotomic_like(d);
    Ok((&factor * &subst).canonicalize())
}

/// `t^e - 1` as a one-variable polynomial (zero when `e = 0`).
pub(crate) fn cyclotomic_like(e: i64) -> LaurentPoly {
    &LaurentPoly::monomial(1, vec![e], 1) - &LaurentPoly::one(1)
}

/// All multiplicity vectors in `[-bound, bound]^len` except zero, in
/// lexicographic order. Sweeps iterate this deterministically.
pub fn multiplicity_grid(len: usize, bound: i64) -> Vec<Vec<i64>> {
    assert!(bound >= 0);
    let mut out = Vec::new();
    let mut cur = vec![-bound; len];
    loop {
        if cur.iter().any(|&x| x != 0) {
            out.push(cur.clone());
        }
        let mut k = len;
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            if cur[k] < bound {
                cur[k] += 1;
                for x in cur.iter_mut().skip(k + 1) {
                    *x = -bound;
                }
                break;
            }
        }
    }
}

/// Report for the zero-multiplicity deletion identity: with `m_mu = 0`,
/// the multilink polynomial of the full link equals
/// `(t^{sum_i m_i l_imu} - 1)` times the polynomial of the link with the
/// last component removed.
#[derive(Clone, Debug)]
pub struct DeletionFactorReport {
    pub holds: bool,
    pub lhs: UnitClass,
    pub rhs: UnitClass,
    pub factor_exponent: i64,
}

/// Checks the deletion identity by computing both sides through
/// independent specializations: the left side from the `mu`-variable
/// polynomial with `m_mu = 0`, the right side from the
/// `(mu-1)`-variable polynomial of the sublink.
pub fn check_lemma7(
    delta_full: &UnitClass,
    delta_sub: &UnitClass,
    spec: &MultilinkSpec,
) -> Result<DeletionFactorReport> {
    let mu = spec.mu();
    if mu < 2 {
        return Err(Error::InvalidInput(
            "deletion identity needs at least two components".into(),
        ));
    }
    if delta_full.num_vars() != mu || delta_sub.num_vars() != mu - 1 {
        return Err(Error::InvalidInput(
            "variable counts do not match the linking data".into(),
        ));
    }
    if spec.m()[mu - 1] != 0 {
        return Err(Error::InvalidInput("last multiplicity must be zero".into()));
    }
    let sub_spec = spec.dropped_last();
    if sub_spec.d() == 0 {
        return Err(Error::ZeroMultiplicity);
    }
    let lhs = specialize(delta_full, spec)?;
    let factor_exponent = spec.s(mu - 1);
    let factor = cyclotomic_like(factor_exponent);
    let rhs_base = specialize(delta_sub, &sub_spec)?;
    let rhs = (&factor * rhs_base.rep()).canonicalize();
    Ok(DeletionFactorReport {
        holds: lhs == rhs,
        lhs,
        rhs,
        factor_exponent,
    })
}
