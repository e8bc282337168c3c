//! Free differential calculus on a group presentation and the gcd of
//! codimension-1 minors of the resulting matrix over the Laurent ring.
//!
//! The abelianization map sends the generator `g` to `t_c` where `c` is
//! the link component carrying `g`. Every relator row satisfies the
//! fundamental identity `sum_j (dr/dx_j) (phi(x_j) - 1) = phi(r) - 1`.

use itertools::Itertools;

use crate::laurent::{LaurentPoly, UnitClass};
use crate::linkdiag::GroupPresentation;
use crate::polymat;

/// Matrix of Fox derivatives: one row per relator, one column per
/// generator, entries in `num_vars` variables.
#[derive(Clone, Debug)]
pub struct AlexanderMatrix {
    entries: Vec<Vec<LaurentPoly>>,
    num_vars: usize,
    generator_component: Vec<usize>,
}

/// Derivative of a word with respect to one generator, pushed through
/// the abelianization. Words are sequences of signed 1-based generator
/// indices.
pub fn fox_derivative(
    word: &[i32],
    generator: usize,
    generator_component: &[usize],
    num_vars: usize,
) -> LaurentPoly {
    assert!(
        generator < generator_component.len(),
        "generator index out of range"
    );
    let mut deriv = LaurentPoly::zero(num_vars);
    let mut prefix = LaurentPoly::one(num_vars);
    for &letter in word {
        assert!(letter != 0, "zero letter in relator");
        let g = letter.unsigned_abs() as usize - 1;
        assert!(
            g < generator_component.len(),
            "letter out of range in relator"
        );
        let c = generator_component[g];
        let t = LaurentPoly::var(num_vars, c);
        if letter > 0 {
            if g == generator {
                deriv = &deriv + &prefix;
            }
            prefix = &prefix * &t;
        } else {
            let tinv = LaurentPoly::monomial(
                num_vars,
                {
                    let mut e = vec![0; num_vars];
                    e[c] = -1;
                    e
                },
                1,
            );
            prefix = &prefix * &tinv;
            if g == generator {
                deriv = &deriv - &prefix;
            }
        }
    }
    deriv
}

/// Abelianized image of a word: a monomial in the `t_c`.
fn abelianized(word: &[i32], generator_component: &[usize], num_vars: usize) -> LaurentPoly {
    let mut exps = vec![0i64; num_vars];
    for &letter in word {
        let g = letter.unsigned_abs() as usize - 1;
        exps[generator_component[g]] += letter.signum() as i64;
    }
    LaurentPoly::monomial(num_vars, exps, 1)
}

/// Fox derivative matrix of a presentation.
pub fn alexander_matrix(pres: &GroupPresentation, num_vars: usize) -> AlexanderMatrix {
    assert!(
        pres.generator_component.iter().all(|&c| c < num_vars),
        "generator component out of range"
    );
    let n = pres.num_generators;
    let one = LaurentPoly::one(num_vars);
    let entries: Vec<Vec<LaurentPoly>> = pres
        .relators
        .iter()
        .map(|r| {
            let row: Vec<LaurentPoly> = (0..n)
                .map(|j| fox_derivative(r, j, &pres.generator_component, num_vars))
                .collect();
            // fundamental identity of the calculus, checked on every row
            let mut lhs = LaurentPoly::zero(num_vars);
            for (j, d) in row.iter().enumerate() {
                let t = LaurentPoly::var(num_vars, pres.generator_component[j]);
                lhs = &lhs + &(d * &(&t - &one));
            }
            let rhs = &abelianized(r, &pres.generator_component, num_vars) - &one;
            assert_eq!(lhs, rhs, "fox row-sum identity violated");
            row
        })
        .collect();
    AlexanderMatrix {
        entries,
        num_vars,
        generator_component: pres.generator_component.clone(),
    }
}

impl AlexanderMatrix {
    pub fn from_entries(
        entries: Vec<Vec<LaurentPoly>>,
        num_vars: usize,
        generator_component: Vec<usize>,
    ) -> Self {
        for row in &entries {
            assert_eq!(row.len(), generator_component.len(), "ragged matrix");
        }
        AlexanderMatrix {
            entries,
            num_vars,
            generator_component,
        }
    }

    pub fn num_rows(&self) -> usize {
        self.entries.len()
    }

    pub fn num_cols(&self) -> usize {
        self.generator_component.len()
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn entry(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.entries[i][j]
    }

    pub fn generator_component(&self) -> &[usize] {
        &self.generator_component
    }

    /// Rows restricted to `rows` and columns to `cols`.
    fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Vec<Vec<LaurentPoly>> {
        rows.iter()
            .map(|&i| cols.iter().map(|&j| self.entries[i][j].clone()).collect())
            .collect()
    }
}

/// Gcd of all `(n-1) x (n-1)` minors of the matrix, where `n` is the
/// number of generators: the first elementary-ideal gcd, i.e. the
/// Alexander polynomial when the matrix presents the homology of the
/// universal abelian cover rel basepoint fiber. Returns 0 when there are
/// fewer than `n-1` rows.
pub fn delta1(m: &AlexanderMatrix) -> UnitClass {
    let n = m.num_cols();
    assert!(n >= 1, "matrix must have at least one column");
    let size = n - 1;
    if m.num_rows() < size {
        return UnitClass::zero(m.num_vars);
    }
    if size == 0 {
        return UnitClass::one(m.num_vars);
    }
    let unit = UnitClass::one(m.num_vars);
    let mut acc: Option<UnitClass> = None;
    for rows in (0..m.num_rows()).combinations(size) {
        for cols in (0..n).combinations(size) {
            let det = polymat::determinant(&m.submatrix(&rows, &cols), m.num_vars);
            acc = Some(match acc {
                None => det.canonicalize(),
                Some(g) => g.rep().gcd(&det),
            });
            if acc.as_ref() == Some(&unit) {
                return unit;
            }
        }
    }
    acc.unwrap_or_else(|| UnitClass::zero(m.num_vars))
}

/// Per-column quotient report for a square-ish matrix: deleting column
/// `j` (and dropping rows down to `n-1`) should produce a determinant
/// associate to `(t_c(j) - 1)` times one common polynomial.
#[derive(Clone, Debug)]
pub struct DeltaStarReport {
    pub quotients: Vec<Option<UnitClass>>,
    pub all_agree: bool,
    pub common: Option<UnitClass>,
}

/// Diagnostic for the factorization of codimension-1 minors through the
/// augmentation ideal. Divisibility failures are reported, not raised;
/// they indicate a problem upstream.
pub fn delta_star_check(m: &AlexanderMatrix) -> DeltaStarReport {
    let n = m.num_cols();
    assert!(
        m.num_rows() == n || m.num_rows() + 1 == n,
        "expected n or n-1 relators for n generators"
    );
    assert!(n >= 2, "need at least two generators");
    // the factorization through the augmentation ideal quotients only
    // holds with two or more components
    assert!(m.num_vars >= 2, "need at least two components");
    let rows: Vec<usize> = (0..n - 1).collect();
    let mut quotients: Vec<Option<UnitClass>> = Vec::with_capacity(n);
    for j in 0..n {
        let cols: Vec<usize> = (0..n).filter(|&c| c != j).collect();
        let det = polymat::determinant(&m.submatrix(&rows, &cols), m.num_vars);
        let factor = {
            let t = LaurentPoly::var(m.num_vars, m.generator_component[j]);
            &t - &LaurentPoly::one(m.num_vars)
        };
        quotients.push(det.exact_div(&factor).map(|q| q.canonicalize()));
    }
    let common = quotients.iter().flatten().next().cloned();
    let all_agree = quotients.iter().all(|q| q.is_some()) && {
        let mut it = quotients.iter().flatten();
        let first = it.next();
        it.all(|q| Some(q) == first)
    };
    DeltaStarReport {
        quotients,
        all_agree,
        common,
    }
}
