//! The Seifert-matrix route to the one-variable multilink polynomial.
//!
//! A pair of integer matrices `A+`, `A-` of the two push-off linking
//! forms presents the first homology of the infinite cyclic cover as
//! `A+ - t A-`. When the pair is square the polynomial is its
//! determinant; when there are more generators than relations it is 0.
//!
//! Pairs are curated inputs from files, not computed from diagrams;
//! there is no general algorithm from a diagram to a spanning surface of
//! a multilink, and the classical pairs entered here are validated by
//! cross-checking against the diagram route instead of trusted blindly.

use num_bigint::BigInt;
use serde::Deserialize;

use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, UnitClass};
use crate::polymat;

/// Integer matrices `A+`, `A-` of the two Seifert forms, of identical
/// shape `n x (n + r)` with `r >= 0`. Carries the link data it belongs
/// to as metadata.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeifertPair {
    mu: usize,
    m: Vec<i64>,
    a_plus: Vec<Vec<BigInt>>,
    a_minus: Vec<Vec<BigInt>>,
}

#[derive(Deserialize)]
struct PairFile {
    mu: usize,
    m: Vec<i64>,
    a_plus: Vec<Vec<i64>>,
    a_minus: Vec<Vec<i64>>,
}

/// Lower-left blocks of an enlarged pair, one for each of `A+`, `A-`.
pub type LowerBlocks<'a> = (&'a [Vec<i64>], &'a [Vec<i64>]);

impl SeifertPair {
    pub fn new(
        mu: usize,
        m: Vec<i64>,
        a_plus: Vec<Vec<BigInt>>,
        a_minus: Vec<Vec<BigInt>>,
    ) -> Result<Self> {
        if m.len() != mu {
            return Err(Error::InvalidInput(format!(
                "multiplicity vector has length {} but mu = {mu}",
                m.len()
            )));
        }
        let rows = a_plus.len();
        if a_minus.len() != rows {
            return Err(Error::InvalidInput(
                "matrices have different row counts".into(),
            ));
        }
        let cols = a_plus.first().map_or(0, |r| r.len());
        for r in a_plus.iter().chain(a_minus.iter()) {
            if r.len() != cols {
                return Err(Error::InvalidInput("ragged matrix rows".into()));
            }
        }
        if cols < rows {
            return Err(Error::InvalidInput(format!(
                "expected at least as many columns as rows, got {rows} x {cols}"
            )));
        }
        Ok(SeifertPair {
            mu,
            m,
            a_plus,
            a_minus,
        })
    }

    pub fn from_ints(
        mu: usize,
        m: Vec<i64>,
        a_plus: Vec<Vec<i64>>,
        a_minus: Vec<Vec<i64>>,
    ) -> Result<Self> {
        let conv = |m: Vec<Vec<i64>>| {
            m.into_iter()
                .map(|r| r.into_iter().map(BigInt::from).collect())
                .collect()
        };
        SeifertPair::new(mu, m, conv(a_plus), conv(a_minus))
    }

    /// Reads the pair file format: `{"mu": …, "m": […], "a_plus": [[…]],
    /// "a_minus": [[…]]}` with row-major integer matrices.
    pub fn from_json(document: &str) -> Result<Self> {
        let f: PairFile = serde_json::from_str(document)
            .map_err(|e| Error::Parse(format!("seifert pair document: {e}")))?;
        SeifertPair::from_ints(f.mu, f.m, f.a_plus, f.a_minus)
    }

    pub fn mu(&self) -> usize {
        self.mu
    }

    pub fn m(&self) -> &[i64] {
        &self.m
    }

    pub fn rows(&self) -> usize {
        self.a_plus.len()
    }

    pub fn cols(&self) -> usize {
        self.a_plus.first().map_or(0, |r| r.len())
    }

    /// `r = rank H1(closure) - rank H1(surface) >= 0`.
    pub fn extra_rank(&self) -> usize {
        self.cols() - self.rows()
    }

    pub fn a_plus(&self) -> &[Vec<BigInt>] {
        &self.a_plus
    }

    pub fn a_minus(&self) -> &[Vec<BigInt>] {
        &self.a_minus
    }

    /// The presentation matrix `A+ - t A-`, entrywise, over `Z[t^±1]`.
    pub fn presentation_matrix(&self) -> Vec<Vec<LaurentPoly>> {
        let t = LaurentPoly::var(1, 0);
        self.a_plus
            .iter()
            .zip(&self.a_minus)
            .map(|(rp, rm)| {
                rp.iter()
                    .zip(rm)
                    .map(|(p, m)| {
                        &LaurentPoly::constant(1, p.clone())
                            - &(&t * &LaurentPoly::constant(1, m.clone()))
                    })
                    .collect()
            })
            .collect()
    }

    /// One-variable multilink polynomial of the pair: 0 when there are
    /// more generators than relations, `det(A+ - t A-)` otherwise.
    pub fn delta(&self) -> UnitClass {
        if self.extra_rank() > 0 {
            return UnitClass::zero(1);
        }
        polymat::determinant(&self.presentation_matrix(), 1).canonicalize()
    }

    /// Enlarges a square pair by one boundary component worth of disc
    /// cycles: `A+` gains a `d x d` identity block, `A-` the cyclic
    /// shift block (ones on the subdiagonal and in the top-right
    /// corner), with zero upper-right blocks and a caller-chosen
    /// lower-left block (zero by default; the determinant does not
    /// depend on it).
    pub fn enlarged(&self, d: usize, lower_left: Option<LowerBlocks<'_>>) -> Result<SeifertPair> {
        if self.extra_rank() != 0 {
            return Err(Error::InvalidInput(
                "enlargement needs a square pair".into(),
            ));
        }
        if d == 0 {
            return Err(Error::InvalidInput("block size must be positive".into()));
        }
        let n = self.rows();
        let zeros = vec![vec![0i64; n]; d];
        let (star_p, star_m) = lower_left.unwrap_or((&zeros, &zeros));
        if star_p.len() != d
            || star_m.len() != d
            || star_p.iter().chain(star_m.iter()).any(|r| r.len() != n)
        {
            return Err(Error::InvalidInput(
                "lower-left block has the wrong shape".into(),
            ));
        }
        let big = |x: i64| BigInt::from(x);
        let mut plus: Vec<Vec<BigInt>> = Vec::with_capacity(n + d);
        let mut minus: Vec<Vec<BigInt>> = Vec::with_capacity(n + d);
        for i in 0..n {
            let mut rp = self.a_plus[i].clone();
            rp.extend(std::iter::repeat_n(BigInt::from(0), d));
            plus.push(rp);
            let mut rm = self.a_minus[i].clone();
            rm.extend(std::iter::repeat_n(BigInt::from(0), d));
            minus.push(rm);
        }
        for i in 0..d {
            let mut rp: Vec<BigInt> = star_p[i].iter().map(|&x| big(x)).collect();
            for j in 0..d {
                rp.push(if i == j { big(1) } else { big(0) });
            }
            plus.push(rp);
            let mut rm: Vec<BigInt> = star_m[i].iter().map(|&x| big(x)).collect();
            for j in 0..d {
                let one = (i > 0 && j == i - 1) || (i == 0 && j == d - 1);
                rm.push(if one { big(1) } else { big(0) });
            }
            minus.push(rm);
        }
        SeifertPair::new(self.mu, self.m.clone(), plus, minus)
    }

    /// Determinant of the pair enlarged by a `d`-cycle block; associate
    /// to `(t^d - 1) det(A+ - t A-)`.
    pub fn lemma7_block_determinant(&self, d: usize) -> Result<UnitClass> {
        Ok(self.enlarged(d, None)?.delta())
    }
}
