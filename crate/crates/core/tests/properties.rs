//! Property suites for the exact algebra and randomized structural
//! invariants of the fixture links.

mod common;

use alexpoly::fox::{alexander_matrix, delta_star_check};
use alexpoly::laurent::LaurentPoly;
use alexpoly::linkdiag::wirtinger;
use alexpoly::seifert::SeifertPair;
use common::*;
use num_bigint::BigInt;
use proptest::prelude::*;

fn arb_poly(max_vars: usize) -> impl Strategy<Value = LaurentPoly> {
    (1..=max_vars).prop_flat_map(|nv| {
        prop::collection::vec(
            (
                prop::collection::vec(-3i64..=3, nv),
                (-9i64..=9).prop_filter("nonzero", |c| *c != 0),
            ),
            0..=6,
        )
        .prop_map(move |terms| LaurentPoly::from_terms(nv, terms))
    })
}

fn arb_poly_pair(max_vars: usize) -> impl Strategy<Value = (LaurentPoly, LaurentPoly)> {
    (1..=max_vars).prop_flat_map(|nv| {
        let one = prop::collection::vec(
            (
                prop::collection::vec(-3i64..=3, nv),
                (-9i64..=9).prop_filter("nonzero", |c| *c != 0),
            ),
            0..=6,
        )
        .prop_map(move |terms| LaurentPoly::from_terms(nv, terms));
        (one.clone(), one)
    })
}

fn arb_poly_triple(
    max_vars: usize,
) -> impl Strategy<Value = (LaurentPoly, LaurentPoly, LaurentPoly)> {
    (1..=max_vars).prop_flat_map(|nv| {
        let one = prop::collection::vec(
            (
                prop::collection::vec(-2i64..=2, nv),
                (-9i64..=9).prop_filter("nonzero", |c| *c != 0),
            ),
            0..=4,
        )
        .prop_map(move |terms| LaurentPoly::from_terms(nv, terms));
        (one.clone(), one.clone(), one)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms((a, b, c) in arb_poly_triple(4)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn canonicalize_is_constant_on_unit_orbits(
        p in arb_poly(4),
        exps in prop::collection::vec(-4i64..=4, 4),
        negate in any::<bool>(),
    ) {
        let nv = p.num_vars();
        let unit = LaurentPoly::monomial(nv, exps[..nv].to_vec(), if negate { -1 } else { 1 });
        let q = &p * &unit;
        prop_assert_eq!(p.canonicalize(), q.canonicalize());
        let c = p.canonicalize();
        prop_assert_eq!(c.rep().canonicalize(), c);
    }

    #[test]
    fn substitution_is_a_ring_homomorphism((p, q) in arb_poly_pair(3), m in prop::collection::vec(-3i64..=3, 3)) {
        let mv = &m[..p.num_vars()];
        prop_assert_eq!(
            (&p * &q).substitute_powers(mv),
            &p.substitute_powers(mv) * &q.substitute_powers(mv)
        );
        prop_assert_eq!(
            (&p + &q).substitute_powers(mv),
            &p.substitute_powers(mv) + &q.substitute_powers(mv)
        );
    }

    #[test]
    fn gcd_of_common_multiples_is_divisible_by_the_factor((p, q, g) in arb_poly_triple(2)) {
        prop_assume!(!g.is_zero());
        prop_assume!(!p.is_zero() || !q.is_zero());
        let a = &p * &g;
        let b = &q * &g;
        let d = a.gcd(&b);
        prop_assert!(d.rep().exact_div(&g).is_some());
        if !a.is_zero() {
            prop_assert!(a.exact_div(d.rep()).is_some());
        }
        if !b.is_zero() {
            prop_assert!(b.exact_div(d.rep()).is_some());
        }
    }

    #[test]
    fn exact_division_inverts_multiplication((p, q) in arb_poly_pair(3)) {
        prop_assume!(!q.is_zero());
        let prod = &p * &q;
        prop_assert_eq!(prod.exact_div(&q), Some(p));
    }

    #[test]
    fn involution_is_an_involution(p in arb_poly(4)) {
        prop_assert_eq!(p.involution().involution(), p);
    }
}

// -------------------------------------------------------------------
// Structural invariants across the fixture set
// -------------------------------------------------------------------

#[test]
fn wirtinger_rows_abelianize_to_zero_on_all_fixtures() {
    for f in link_fixtures() {
        let p = wirtinger(&f.diagram);
        let mu = f.diagram.num_components();
        for r in &p.relators {
            let mut sums = vec![0i64; mu];
            for &letter in r {
                let g = letter.unsigned_abs() as usize - 1;
                sums[p.generator_component[g]] += letter.signum() as i64;
            }
            assert!(
                sums.iter().all(|&s| s == 0),
                "{}: relator abelianizes nontrivially",
                f.name
            );
        }
    }
}

#[test]
fn knot_polynomials_are_symmetric() {
    for f in link_fixtures() {
        if f.diagram.num_components() != 1 {
            continue;
        }
        let delta = delta_of(&f.diagram);
        assert_eq!(
            delta.rep().involution().canonicalize(),
            delta,
            "{}: knot polynomial should be symmetric",
            f.name
        );
    }
}

#[test]
fn delta_star_quotients_agree_on_multicomponent_fixtures() {
    for f in link_fixtures() {
        let d = &f.diagram;
        if d.num_components() < 2 {
            continue;
        }
        let m = alexander_matrix(&wirtinger(d), d.num_components());
        if m.num_rows() + 1 != m.num_cols() && m.num_rows() != m.num_cols() {
            continue;
        }
        let report = delta_star_check(&m);
        assert!(report.all_agree, "{}: column quotients disagree", f.name);
        assert_eq!(
            report.common.unwrap(),
            delta_of(d),
            "{}: common quotient",
            f.name
        );
    }
}

#[test]
fn braid_linking_matches_the_permutation_count() {
    // independent count: a letter contributes its sign to the pair of
    // components its two strands belong to
    let words: [(&[i64], usize); 4] = [
        (&[1, 1], 2),
        (&[1, 1, 1, 1], 2),
        (&[1, -2, 1, -2, 1], 3),
        (&[1, -2, 1, -2, 1, -2], 3),
    ];
    for (word, strands) in words {
        let d = alexpoly::linkdiag::braid_closure(word, strands).unwrap();
        let lk = lk_of(&d);
        let mu = d.num_components();

        // trace strand cycles of the braid permutation
        let mut perm: Vec<usize> = (0..strands).collect();
        for &l in word {
            let k = l.unsigned_abs() as usize - 1;
            perm.swap(k, k + 1);
        }
        let mut comp_of_strand = vec![usize::MAX; strands];
        let mut comp = 0;
        for s in 0..strands {
            if comp_of_strand[s] != usize::MAX {
                continue;
            }
            let mut cur = s;
            while comp_of_strand[cur] == usize::MAX {
                comp_of_strand[cur] = comp;
                cur = perm.iter().position(|&x| x == cur).unwrap();
            }
            comp += 1;
        }
        assert_eq!(comp, mu);

        let mut sums = vec![vec![0i64; mu]; mu];
        let mut positions: Vec<usize> = (0..strands).collect(); // strand at each position
        for &l in word {
            let k = l.unsigned_abs() as usize - 1;
            let a = comp_of_strand[positions[k]];
            let b = comp_of_strand[positions[k + 1]];
            if a != b {
                sums[a][b] += l.signum();
                sums[b][a] += l.signum();
            }
            positions.swap(k, k + 1);
        }
        for i in 0..mu {
            for j in 0..mu {
                if i != j {
                    assert_eq!(lk.get(i, j), sums[i][j] / 2, "{word:?} entry ({i},{j})");
                }
            }
        }
    }
}

#[test]
fn seifert_delta_is_invariant_under_unimodular_base_change() {
    let mut rng = seeded_rng(0x5e1f);
    for name in [
        "trefoil_pair.json",
        "fig8_pair.json",
        "t24_pair.json",
        "hopf_pair.json",
    ] {
        let sp = SeifertPair::from_json(&read_fixture(name)).unwrap();
        let base = sp.delta();
        let n = sp.rows();
        for _ in 0..8 {
            let u = random_unimodular(&mut rng, n, 6);
            let v = random_unimodular(&mut rng, n, 6);
            let transform = |a: &[Vec<BigInt>]| -> Vec<Vec<i64>> {
                // u * a * v over integers
                let mut out = vec![vec![0i64; n]; n];
                for (i, row) in out.iter_mut().enumerate() {
                    for (j, cell) in row.iter_mut().enumerate() {
                        let mut acc = BigInt::from(0);
                        for k in 0..n {
                            for l in 0..n {
                                acc += BigInt::from(u[i][k]) * &a[k][l] * BigInt::from(v[l][j]);
                            }
                        }
                        *cell = i64::try_from(&acc).unwrap();
                    }
                }
                out
            };
            let changed = SeifertPair::from_ints(
                sp.mu(),
                sp.m().to_vec(),
                transform(sp.a_plus()),
                transform(sp.a_minus()),
            )
            .unwrap();
            assert_eq!(
                changed.delta(),
                base,
                "{name}: base change altered the class"
            );
        }
    }
}

#[test]
fn knot_pairs_have_unimodular_intersection_form() {
    for name in ["trefoil_pair.json", "fig8_pair.json"] {
        let sp = SeifertPair::from_json(&read_fixture(name)).unwrap();
        let n = sp.rows();
        let diff: Vec<Vec<BigInt>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| &sp.a_plus()[i][j] - &sp.a_minus()[i][j])
                    .collect()
            })
            .collect();
        let det = alexpoly::polymat::determinant_int(&diff);
        assert_eq!(
            det.magnitude().to_string(),
            "1",
            "{name}: det(A+ - A-) should be a unit"
        );
    }
}

#[test]
fn classical_pairs_are_square_transposes() {
    for name in [
        "trefoil_pair.json",
        "fig8_pair.json",
        "hopf_pair.json",
        "t24_pair.json",
    ] {
        let sp = SeifertPair::from_json(&read_fixture(name)).unwrap();
        assert_eq!(sp.extra_rank(), 0, "{name}");
        assert!(sp.m().iter().all(|&x| x == 1), "{name}");
        let n = sp.rows();
        for i in 0..n {
            for j in 0..n {
                assert_eq!(
                    sp.a_minus()[i][j],
                    sp.a_plus()[j][i],
                    "{name} entry ({i},{j})"
                );
            }
        }
    }
}

#[test]
fn block_determinant_identity_on_random_pairs() {
    use rand::Rng;
    let mut rng = seeded_rng(0xb10c);
    for _ in 0..40 {
        let n = rng.gen_range(0..=5usize);
        let d = rng.gen_range(1..=4usize);
        let rand_matrix = |rng: &mut rand_chacha::ChaCha8Rng, rows: usize, cols: usize| {
            (0..rows)
                .map(|_| {
                    (0..cols)
                        .map(|_| rng.gen_range(-4i64..=4))
                        .collect::<Vec<_>>()
                })
                .collect::<Vec<_>>()
        };
        let sp = SeifertPair::from_ints(
            1,
            vec![1],
            rand_matrix(&mut rng, n, n),
            rand_matrix(&mut rng, n, n),
        )
        .unwrap();
        let star_p = rand_matrix(&mut rng, d, n);
        let star_m = rand_matrix(&mut rng, d, n);
        let factor = alexpoly::laurent::parse_poly(&format!("t^{d} - 1"), 1).unwrap();
        let want = (&factor * sp.delta().rep()).canonicalize();
        let plain = sp.lemma7_block_determinant(d).unwrap();
        let starred = sp.enlarged(d, Some((&star_p, &star_m))).unwrap().delta();
        assert_eq!(plain, want);
        assert_eq!(starred, want);
    }
}

#[test]
fn laplacian_minor_matches_the_spanning_tree_count() {
    use alexpoly::torres::laplacian_minor;
    use rand::Rng;

    // independent oracle: the common cofactor of the negated weighted
    // Laplacian is (-1)^(mu-1) times the weighted spanning-tree sum
    fn tree_sum(mu: usize, weight: &dyn Fn(usize, usize) -> i64) -> i64 {
        let edges: Vec<(usize, usize)> = (0..mu)
            .flat_map(|i| (i + 1..mu).map(move |j| (i, j)))
            .collect();
        let mut total = 0i64;
        let picks = mu - 1;
        let n_edges = edges.len();
        // iterate over all edge subsets of size mu-1
        let mut idx: Vec<usize> = (0..picks).collect();
        if picks == 0 {
            return 1;
        }
        loop {
            // connectivity check via union-find over mu vertices
            let mut parent: Vec<usize> = (0..mu).collect();
            fn find(p: &mut Vec<usize>, x: usize) -> usize {
                if p[x] == x {
                    x
                } else {
                    let r = find(p, p[x]);
                    p[x] = r;
                    r
                }
            }
            let mut joins = 0;
            for &e in &idx {
                let (a, b) = edges[e];
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                if ra != rb {
                    parent[ra] = rb;
                    joins += 1;
                }
            }
            if joins == mu - 1 {
                total += idx
                    .iter()
                    .map(|&e| weight(edges[e].0, edges[e].1))
                    .product::<i64>();
            }
            // next combination
            let mut k = picks;
            loop {
                if k == 0 {
                    return total;
                }
                k -= 1;
                if idx[k] < n_edges - picks + k {
                    idx[k] += 1;
                    for j in k + 1..picks {
                        idx[j] = idx[j - 1] + 1;
                    }
                    break;
                }
            }
        }
    }

    let mut rng = seeded_rng(0x7255);
    for _ in 0..60 {
        let mu = rng.gen_range(2..=4usize);
        let mut rows = vec![vec![0i64; mu]; mu];
        for i in 0..mu {
            for j in i + 1..mu {
                let v = rng.gen_range(-3i64..=3);
                rows[i][j] = v;
                rows[j][i] = v;
            }
        }
        let lk = alexpoly::LinkingMatrix::from_rows(rows).unwrap();
        let m: Vec<i64> = (0..mu).map(|_| rng.gen_range(-3i64..=3)).collect();
        let d = laplacian_minor(&lk, &m);
        let weight = |i: usize, j: usize| m[i] * m[j] * lk.get(i, j);
        let sign = if (mu - 1) % 2 == 0 { 1 } else { -1 };
        assert_eq!(d, sign * tree_sum(mu, &weight), "mu={mu} m={m:?}");
    }

    // the frozen triangle example: three spanning trees of unit weight
    let lk = alexpoly::LinkingMatrix::from_rows(vec![vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]])
        .unwrap();
    assert_eq!(laplacian_minor(&lk, &[1, 1, 1]), 3);
}

#[test]
fn component_deletions_commute() {
    for f in link_fixtures() {
        let mu = f.diagram.num_components();
        if mu < 3 {
            continue;
        }
        // deleting components 0 then 0 (originally 0 then 1) must match
        // deleting 1 then 0 in the other order, and so on
        for a in 0..mu {
            for b in 0..mu {
                if a == b {
                    continue;
                }
                let first = f.diagram.delete_component(a).unwrap();
                let b_after = if b > a { b - 1 } else { b };
                let ab = first.delete_component(b_after).unwrap();

                let second = f.diagram.delete_component(b).unwrap();
                let a_after = if a > b { a - 1 } else { a };
                let ba = second.delete_component(a_after).unwrap();

                assert_eq!(delta_of(&ab), delta_of(&ba), "{} deleting {a},{b}", f.name);
                assert_eq!(lk_of(&ab), lk_of(&ba), "{} deleting {a},{b}", f.name);
            }
        }
    }
}

#[test]
fn multilink_scaling_covariance_on_fixtures() {
    use alexpoly::multilink::{specialize, MultilinkSpec};
    for f in link_fixtures() {
        let d = &f.diagram;
        let mu = d.num_components();
        if mu < 2 {
            continue;
        }
        let delta = delta_of(d);
        let lk = lk_of(d);
        for m in grid(mu, 2) {
            let spec = MultilinkSpec::new(lk.clone(), m.clone()).unwrap();
            let base = specialize(&delta, &spec).unwrap();
            for k in 2..=3i64 {
                let scaled: Vec<i64> = m.iter().map(|&x| k * x).collect();
                let spec_k = MultilinkSpec::new(lk.clone(), scaled).unwrap();
                let got = specialize(&delta, &spec_k).unwrap();
                let want = base.rep().substitute_powers(&[k]).canonicalize();
                assert_eq!(got, want, "{}: scaling m={m:?} by {k}", f.name);
            }
        }
    }
}
