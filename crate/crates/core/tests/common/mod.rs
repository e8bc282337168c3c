//! Shared fixtures and helpers for the integration suites.

#![allow(dead_code)]
#![allow(unused_imports)]

use std::path::PathBuf;

use alexpoly::fox::{alexander_matrix, delta1};
use alexpoly::laurent::LaurentPoly;
use alexpoly::linkdiag::{braid_closure, linking_matrix, parse_pd, wirtinger};
use alexpoly::{LinkDiagram, LinkingMatrix, UnitClass};
use rand::Rng;

pub struct LinkFixture {
    pub name: &'static str,
    pub diagram: LinkDiagram,
}

/// The standard diagram fixture set: knots, links with zero and nonzero
/// linking, and split unions.
pub fn link_fixtures() -> Vec<LinkFixture> {
    let braid = |w: &[i64], s: usize| braid_closure(w, s).unwrap();
    let pd = |name: &str| parse_pd(&read_fixture(name)).unwrap();
    vec![
        LinkFixture {
            name: "trefoil",
            diagram: braid(&[1, 1, 1], 2),
        },
        LinkFixture {
            name: "figure_eight",
            diagram: braid(&[1, -2, 1, -2], 3),
        },
        LinkFixture {
            name: "hopf",
            diagram: braid(&[1, 1], 2),
        },
        LinkFixture {
            name: "hopf_negative",
            diagram: braid(&[-1, -1], 2),
        },
        LinkFixture {
            name: "left_trefoil",
            diagram: braid(&[-1, -1, -1], 2),
        },
        LinkFixture {
            name: "t24",
            diagram: braid(&[1, 1, 1, 1], 2),
        },
        LinkFixture {
            name: "whitehead",
            diagram: braid(&[1, -2, 1, -2, 1], 3),
        },
        LinkFixture {
            name: "borromean",
            diagram: braid(&[1, -2, 1, -2, 1, -2], 3),
        },
        LinkFixture {
            name: "unlink2",
            diagram: braid(&[], 2),
        },
        LinkFixture {
            name: "unlink3",
            diagram: braid(&[], 3),
        },
        LinkFixture {
            name: "split_trefoil",
            diagram: pd("split_trefoil.json"),
        },
        // a non-split two-crossing diagram of the split unlink
        LinkFixture {
            name: "unlink2_r2",
            diagram: pd("unlink2_r2.json"),
        },
    ]
}

pub fn fixtures_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures")
}

pub fn read_fixture(name: &str) -> String {
    std::fs::read_to_string(fixtures_dir().join(name))
        .unwrap_or_else(|e| panic!("fixture {name}: {e}"))
}

/// Diagram route to the multivariable polynomial.
pub fn delta_of(d: &LinkDiagram) -> UnitClass {
    delta1(&alexander_matrix(&wirtinger(d), d.num_components()))
}

pub fn lk_of(d: &LinkDiagram) -> LinkingMatrix {
    linking_matrix(d).unwrap()
}

pub use alexpoly::multilink::multiplicity_grid as grid;
pub use alexpoly::torres::with_component_last;

/// Deterministic rng for the randomized suites. The default seed is
/// fixed; `ALEXPOLY_TEST_SEED` overrides the base for reruns.
pub fn seeded_rng(salt: u64) -> rand_chacha::ChaCha8Rng {
    use rand::SeedableRng;
    let base = std::env::var("ALEXPOLY_TEST_SEED")
        .ok()
        .and_then(|s| s.parse::<u64>().ok())
        .unwrap_or(0);
    rand_chacha::ChaCha8Rng::seed_from_u64(base ^ salt)
}

/// Random sparse polynomial: up to `max_terms` terms, exponents in
/// `[exp_lo, exp_hi]`, nonzero coefficients bounded by `coeff_bound`.
pub fn random_poly<R: Rng>(
    rng: &mut R,
    num_vars: usize,
    max_terms: usize,
    exp_lo: i64,
    exp_hi: i64,
    coeff_bound: i64,
) -> LaurentPoly {
    let terms = rng.gen_range(0..=max_terms);
    LaurentPoly::from_terms(
        num_vars,
        (0..terms).map(|_| {
            let exps: Vec<i64> = (0..num_vars)
                .map(|_| rng.gen_range(exp_lo..=exp_hi))
                .collect();
            let mut c = 0i64;
            while c == 0 {
                c = rng.gen_range(-coeff_bound..=coeff_bound);
            }
            (exps, c)
        }),
    )
}

/// Random nonzero polynomial.
pub fn random_nonzero_poly<R: Rng>(
    rng: &mut R,
    num_vars: usize,
    max_terms: usize,
    exp_lo: i64,
    exp_hi: i64,
    coeff_bound: i64,
) -> LaurentPoly {
    loop {
        let p = random_poly(rng, num_vars, max_terms, exp_lo, exp_hi, coeff_bound);
        if !p.is_zero() {
            return p;
        }
    }
}

/// Random unimodular integer matrix built from shears and swaps.
pub fn random_unimodular<R: Rng>(rng: &mut R, n: usize, steps: usize) -> Vec<Vec<i64>> {
    let mut m = vec![vec![0i64; n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 1;
    }
    if n < 2 {
        return m;
    }
    for _ in 0..steps {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n);
        while j == i {
            j = rng.gen_range(0..n);
        }
        if rng.gen_bool(0.3) {
            m.swap(i, j);
        } else {
            let f = rng.gen_range(-2..=2i64);
            for k in 0..n {
                m[i][k] += f * m[j][k];
            }
        }
    }
    m
}
