//! Structural invariants of the algebra layers, exercised on random inputs.

use num_traits::{One, Zero};
use proptest::prelude::*;

use projindex::jet::Jet;
use projindex::localalg::{local_multiplicity, membership_test, monomial_exponents, LocalConfig};
use projindex::matrix::PolyMatrix;
use projindex::poly::{Monomial, MultiPoly};
use projindex::projmap::{
    classify_point, dehomogenize_in_chart, fixed_point_spectrum, HomogeneousMap, PointClass,
};
use projindex::residue::{grothendieck_residue, ResidueOptions, ResiduePath};
use projindex::scalar::{sc, Scalar};
use projindex::symfun::{augment_sigmas, elementary_values, sigma_shift, SymSpec};
use projindex::theorems::{make_cremona, make_degenerate_p1, make_power_map};

fn rational() -> impl Strategy<Value = Scalar> {
    (-12i64..=12, 1i64..=4).prop_map(|(n, d)| Scalar::new(n.into(), d.into()))
}

fn poly(nvars: usize, max_deg: u32, max_terms: usize) -> impl Strategy<Value = MultiPoly> {
    let term = (proptest::collection::vec(0..=max_deg, nvars), rational());
    proptest::collection::vec(term, 0..=max_terms).prop_map(move |terms| {
        let mut p = MultiPoly::zero(nvars);
        for (exps, c) in terms {
            if exps.iter().sum::<u32>() <= max_deg {
                p.add_term(Monomial::new(exps), c);
            }
        }
        p
    })
}

fn scalar_matrix(n: usize) -> impl Strategy<Value = Vec<Vec<Scalar>>> {
    proptest::collection::vec(proptest::collection::vec(rational(), n), n)
}

fn upper_triangular(n: usize) -> impl Strategy<Value = Vec<Vec<Scalar>>> {
    scalar_matrix(n).prop_map(move |mut rows| {
        for (i, row) in rows.iter_mut().enumerate() {
            for x in row.iter_mut().take(i) {
                *x = Scalar::zero();
            }
        }
        rows
    })
}

fn sigmas_of(rows: &[Vec<Scalar>]) -> Vec<Scalar> {
    PolyMatrix::from_scalar_rows(rows)
        .unwrap()
        .char_poly_coeffs()
        .unwrap()
        .iter()
        .map(|p| p.constant_value().unwrap())
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn ring_axioms(a in poly(2, 3, 4), b in poly(2, 3, 4), c in poly(2, 3, 4)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, MultiPoly::zero(2));
        prop_assert_eq!(&a * &MultiPoly::one(2), a.clone());
    }

    #[test]
    fn char_poly_matches_symbolic_determinant(rows in (1usize..=5).prop_flat_map(scalar_matrix)) {
        let n = rows.len();
        let sigmas = sigmas_of(&rows);
        // det(sI - M) expanded by an independent route (Laplace over Q[s])
        let si_minus_m = PolyMatrix::from_fn(n, n, 1, |i, j| {
            let mut e = MultiPoly::constant(1, -rows[i][j].clone());
            if i == j {
                e = &e + &MultiPoly::var(1, 0);
            }
            e
        });
        let det = si_minus_m.det_laplace().unwrap();
        let mut expect = MultiPoly::monomial(1, vec![n as u32], Scalar::one());
        for (k, sig) in sigmas.iter().enumerate() {
            let sign = if (k + 1) % 2 == 0 { Scalar::one() } else { -Scalar::one() };
            expect.add_term(Monomial::new(vec![(n - k - 1) as u32]), sign * sig);
        }
        prop_assert_eq!(det, expect);
    }

    #[test]
    fn char_poly_of_triangular_is_elementary_in_diagonal(rows in (1usize..=5).prop_flat_map(upper_triangular)) {
        let n = rows.len();
        let diag: Vec<Scalar> = (0..n).map(|i| rows[i][i].clone()).collect();
        prop_assert_eq!(sigmas_of(&rows), elementary_values(&diag));
    }

    #[test]
    fn jets_are_truncated_polynomials(a in poly(2, 4, 4), b in poly(2, 4, 4), order in 0usize..=4) {
        let ja = Jet::new(a.clone(), order);
        let jb = Jet::new(b.clone(), order);
        let prod = ja.mul(&jb);
        let sum = ja.add(&jb);
        prop_assert_eq!(prod.poly(), &(&a * &b).truncate_above(order));
        prop_assert_eq!(sum.poly(), &(&a + &b).truncate_above(order));
    }

    #[test]
    fn symmetric_round_trip(raw in (2usize..=4, 1u32..=4).prop_flat_map(|(r, d)| {
        (Just(r), Just(d), poly(r, d, 3))
    })) {
        let (r, d, p) = raw;
        // symmetrize the degree-d homogeneous part over all permutations
        let hom = p.homogeneous_part(d as usize);
        let mut sym = MultiPoly::zero(r);
        let mut perm: Vec<usize> = (0..r).collect();
        loop {
            sym = &sym + &hom.permute_vars(&perm);
            if !next_permutation(&mut perm) {
                break;
            }
        }
        if !sym.is_zero() {
            let spec = SymSpec::from_symmetric_poly(&sym, d as usize).unwrap();
            prop_assert_eq!(spec.expand(), sym);
        }
    }

    #[test]
    fn eval_on_sigmas_matches_direct_evaluation(rows in (2usize..=5).prop_flat_map(upper_triangular)) {
        let n = rows.len();
        let diag: Vec<Scalar> = (0..n).map(|i| rows[i][i].clone()).collect();
        let sigmas = sigmas_of(&rows);
        for spec in [SymSpec::sigma(n, n), SymSpec::sigma(n, 1), SymSpec::sigma1_pow(n, 2)] {
            let via_sigmas = spec.eval_sigmas(&sigmas).unwrap();
            let direct = spec.expand().eval(&diag).unwrap();
            prop_assert_eq!(via_sigmas, direct);
        }
    }

    #[test]
    fn sigma_shift_matches_explicit_matrix(rows in (1usize..=5).prop_flat_map(scalar_matrix)) {
        let n = rows.len();
        let sigmas = sigmas_of(&rows);
        let i_minus: Vec<Vec<Scalar>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let d = if i == j { Scalar::one() } else { Scalar::zero() };
                        d - &rows[i][j]
                    })
                    .collect()
            })
            .collect();
        let direct = sigmas_of(&i_minus);
        for j in 1..=n {
            prop_assert_eq!(sigma_shift(j, n, &sigmas).unwrap(), direct[j - 1].clone());
        }
    }

    #[test]
    fn augment_matches_block_diagonal(rows in (1usize..=4).prop_flat_map(scalar_matrix), a in rational()) {
        let n = rows.len();
        let sigmas = sigmas_of(&rows);
        let block: Vec<Vec<Scalar>> = (0..=n)
            .map(|i| {
                (0..=n)
                    .map(|j| {
                        if i == 0 && j == 0 {
                            a.clone()
                        } else if i > 0 && j > 0 {
                            rows[i - 1][j - 1].clone()
                        } else {
                            Scalar::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        prop_assert_eq!(augment_sigmas(&a, &sigmas), sigmas_of(&block));
    }

    #[test]
    fn residue_annihilates_ideal_members(q in poly(2, 2, 3)) {
        let n = 2;
        let w1 = MultiPoly::var(n, 0);
        let w2 = MultiPoly::var(n, 1);
        let g = vec![&w1.pow(2) - &w2.pow(3), w2.pow(2)];
        let opts = ResidueOptions::default();
        for j in 0..n {
            let h = &g[j] * &q;
            let r = grothendieck_residue(&h, &g, &[Scalar::zero(), Scalar::zero()], &opts).unwrap();
            prop_assert_eq!(r.value, Scalar::zero());
        }
    }
}

fn next_permutation(perm: &mut [usize]) -> bool {
    let n = perm.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && perm[i - 1] >= perm[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while perm[j] <= perm[i - 1] {
        j -= 1;
    }
    perm.swap(i - 1, j);
    perm[i..].reverse();
    true
}

// ---------------------------------------------------------------------------
// Deterministic invariants over the bundled example maps
// ---------------------------------------------------------------------------

fn bundled_maps() -> Vec<(HomogeneousMap, Vec<projindex::ProjPoint>)> {
    let mut out = Vec::new();
    for (n, nu) in [(1, 1), (2, 1), (3, 1), (1, 2), (2, 2)] {
        let (map, pts) = make_power_map(n, nu).unwrap();
        out.push((map, pts.into_iter().map(|p| p.point).collect()));
    }
    let (map, points) = make_cremona();
    out.push((map, points));
    let (map, points) = make_degenerate_p1();
    out.push((map, points));
    out
}

#[test]
fn euler_identity_on_all_bundled_maps() {
    for (map, _) in bundled_maps() {
        let nv = map.n() + 1;
        for h in 0..nv {
            let mut acc = MultiPoly::zero(nv);
            for j in 0..nv {
                acc = &acc + &(&MultiPoly::var(nv, j) * &map.component(h).partial(j).unwrap());
            }
            assert_eq!(acc, map.component(h).scale(&sc(map.deg() as i64)));
        }
    }
}

#[test]
fn scaling_invariance_of_classification_and_residues() {
    let opts = ResidueOptions::default();
    for (map, points) in bundled_maps() {
        for p in points {
            let scaled: Vec<Scalar> = p
                .coords()
                .iter()
                .map(|c| c * &Scalar::new(3.into(), 7.into()))
                .collect();
            let q = projindex::ProjPoint::new(scaled).unwrap();
            assert_eq!(q, p);
            assert_eq!(
                classify_point(&map, &q).unwrap(),
                classify_point(&map, &p).unwrap()
            );
            if classify_point(&map, &p).unwrap() != PointClass::RegularNonFixed {
                let a = projindex::res1(&map, &p, &opts).unwrap().value;
                let b = projindex::res1(&map, &q, &opts).unwrap().value;
                assert_eq!(a, b);
            }
        }
    }
}

#[test]
fn chart_coherence_of_classification() {
    for (map, points) in bundled_maps() {
        for p in points {
            let class = classify_point(&map, &p).unwrap();
            for chart in p.visible_charts() {
                let lm = dehomogenize_in_chart(&map, &p, chart).unwrap();
                let in_sigma = lm.g_at_w0_is_zero().unwrap();
                match class {
                    PointClass::IndeterminacyPoint => {
                        assert!(in_sigma && lm.f0_at_p.is_zero());
                    }
                    PointClass::FixedPoint => {
                        assert!(in_sigma && !lm.f0_at_p.is_zero());
                    }
                    PointClass::RegularNonFixed => assert!(!in_sigma),
                }
            }
        }
    }
}

#[test]
fn jacobian_relation_holds_at_every_bundled_fixed_point() {
    // fixed_point_spectrum verifies Jac(g) = f0 (Jac(f~) - I) entrywise and
    // errors if it ever fails
    for (map, points) in bundled_maps() {
        for p in points {
            if classify_point(&map, &p).unwrap() == PointClass::FixedPoint {
                let data = fixed_point_spectrum(&map, &p).unwrap();
                assert_eq!(data.sigma_df.len(), map.n());
            }
        }
    }
}

#[test]
fn nondegenerate_points_have_multiplicity_one_and_unit_exponents() {
    let cfg = LocalConfig::default();
    for (map, points) in bundled_maps() {
        for p in points {
            if classify_point(&map, &p).unwrap() == PointClass::RegularNonFixed {
                continue;
            }
            let lm = dehomogenize_in_chart(&map, &p, p.pivot()).unwrap();
            if lm.det_dg().is_zero() {
                continue;
            }
            let la = local_multiplicity(&lm.chart.g, &lm.w0, &cfg).unwrap();
            assert_eq!(la.mult, 1, "nondegenerate point {p} must be simple");
            let alpha = monomial_exponents(&lm.chart.g, &lm.w0, &cfg).unwrap();
            assert!(alpha.iter().all(|&a| a == 1));
        }
    }
}

#[test]
fn corollary_closed_forms_match_the_engine_at_simple_fixed_points() {
    use projindex::residue::{simple_fixed_res1, simple_fixed_res2, simple_fixed_res3};
    let opts = ResidueOptions::default();
    for (map, points) in bundled_maps() {
        let n = map.n();
        let phi = SymSpec::sigma(n, n);
        let psi = SymSpec::sigma1_pow(n + 1, n);
        for p in &points {
            if classify_point(&map, p).unwrap() != PointClass::FixedPoint {
                continue;
            }
            let data = fixed_point_spectrum(&map, p).unwrap();
            if !data.is_simple() {
                continue;
            }
            let r1 = projindex::res1(&map, p, &opts).unwrap().value;
            assert_eq!(
                r1,
                simple_fixed_res1(&data.sigma_df).unwrap(),
                "res1 at {p}"
            );
            let r2 = projindex::res2(&map, p, &phi, &opts).unwrap().value;
            assert_eq!(
                r2,
                simple_fixed_res2(&phi, &data.sigma_df).unwrap(),
                "res2 at {p}"
            );
            if map.nu() > 1 {
                let r3 = projindex::res3(&map, p, &psi, &opts).unwrap().value;
                assert_eq!(
                    r3,
                    simple_fixed_res3(&psi, &data.sigma_df).unwrap(),
                    "res3 at {p}"
                );
            }
        }
    }
}

#[test]
fn corollary_closed_forms_match_at_a_nondegenerate_indeterminacy_point() {
    use projindex::residue::{nondegenerate_indet_res2, nondegenerate_indet_res3};
    // degree-3 map with the nondegenerate indeterminacy point [0:0:1]:
    // in that chart g = (w1 - w1(w1^3+w2^3), w2 - w2(w1^3+w2^3)), dg(0) = I
    let z = |i: usize| MultiPoly::var(3, i);
    let map = HomogeneousMap::new(vec![
        &z(0) * &z(2).pow(2),
        &z(1) * &z(2).pow(2),
        &z(0).pow(3) + &z(1).pow(3),
    ])
    .unwrap();
    assert_eq!(map.nu(), 2);
    let p = projindex::ProjPoint::from_ints(&[0, 0, 1]).unwrap();
    assert_eq!(
        classify_point(&map, &p).unwrap(),
        PointClass::IndeterminacyPoint
    );
    let lm = dehomogenize_in_chart(&map, &p, 2).unwrap();
    assert!(!lm.det_dg().is_zero());

    let opts = ResidueOptions::default();
    let n = map.n();
    let phi = SymSpec::sigma1_pow(n, n);
    let psi = SymSpec::sigma1_pow(n + 1, n);
    let r1 = projindex::res1(&map, &p, &opts).unwrap().value;
    assert_eq!(
        r1,
        Scalar::zero(),
        "first residue vanishes at indeterminacy points"
    );
    let r2 = projindex::res2(&map, &p, &phi, &opts).unwrap().value;
    assert_eq!(r2, nondegenerate_indet_res2(&phi, &lm.sigma_dg).unwrap());
    // dg(0) = I: phi(mu) / prod(mu) = sigma_1(I)^2 / 1 = 4
    assert_eq!(r2, sc(4));
    let r3 = projindex::res3(&map, &p, &psi, &opts).unwrap().value;
    assert_eq!(r3, nondegenerate_indet_res3(&psi, &lm.sigma_dg).unwrap());
    // psi(0, mu) / prod(mu) = sigma_1({0,1,1})^2 = 4
    assert_eq!(r3, sc(4));
}

#[test]
fn res2_with_top_elementary_counts_the_multiplicity() {
    // phi = sigma_n turns the numerator into det(dg), whose residue is the
    // local quotient dimension: an independent bridge between the residue
    // engine and the linear-algebra multiplicity
    let opts = ResidueOptions::default();
    let cfg = LocalConfig::default();
    for (map, points) in bundled_maps() {
        let n = map.n();
        let phi = SymSpec::sigma(n, n);
        for p in &points {
            if classify_point(&map, p).unwrap() == PointClass::RegularNonFixed {
                continue;
            }
            let lm = dehomogenize_in_chart(&map, p, p.pivot()).unwrap();
            let mult = local_multiplicity(&lm.chart.g, &lm.w0, &cfg).unwrap().mult;
            let r2 = projindex::res2(&map, p, &phi, &opts).unwrap();
            assert_eq!(
                r2.value,
                sc(mult as i64),
                "res2(sigma_n) vs multiplicity at {p}"
            );
        }
    }
}

#[test]
fn degenerate_indeterminacy_point_goes_through_the_series_route() {
    // F = (z0 z1 z2, z1^3, z0^2 z2): [1:0:0] is an indeterminacy point whose
    // chart system g = (w1^3 - w1^2 w2, w2 - w1 w2^2) has a singular
    // Jacobian but an isolated zero of multiplicity 3 with alpha = (3, 1)
    let z = |i: usize| MultiPoly::var(3, i);
    let map = HomogeneousMap::new(vec![
        &(&z(0) * &z(1)) * &z(2),
        z(1).pow(3),
        &z(0).pow(2) * &z(2),
    ])
    .unwrap();
    let p = projindex::ProjPoint::from_ints(&[1, 0, 0]).unwrap();
    assert_eq!(
        classify_point(&map, &p).unwrap(),
        PointClass::IndeterminacyPoint
    );
    let lm = dehomogenize_in_chart(&map, &p, 0).unwrap();
    assert!(lm.det_dg().is_zero());

    let cfg = LocalConfig::default();
    assert_eq!(
        local_multiplicity(&lm.chart.g, &lm.w0, &cfg).unwrap().mult,
        3
    );
    assert_eq!(
        monomial_exponents(&lm.chart.g, &lm.w0, &cfg).unwrap(),
        vec![3, 1]
    );

    let opts = ResidueOptions::default();
    let r1 = projindex::res1(&map, &p, &opts).unwrap();
    assert_eq!(r1.path, ResiduePath::Hartshorne);
    assert_eq!(r1.value, Scalar::zero());
    // hand-computed: det(b) = 1 + w1 w2 + ..., numerator det(dg) has
    // degree-2 part 3 w1^2 - 2 w1 w2, so the w1^2 coefficient is 3
    let r2 = projindex::res2(&map, &p, &SymSpec::sigma(2, 2), &opts).unwrap();
    assert_eq!(r2.value, sc(3));
}

#[test]
fn isolated_points_stay_computable_when_the_singular_set_has_a_curve() {
    // fix(f) of this degree-3 map contains the cubic curve z0^3 + z1^3 = z2^3,
    // so no finite point list can complete the census; the isolated
    // indeterminacy point [0:0:1] must still be fully computable per point
    let z = |i: usize| MultiPoly::var(3, i);
    let map = HomogeneousMap::new(vec![
        &z(0) * &z(2).pow(2),
        &z(1) * &z(2).pow(2),
        &z(0).pow(3) + &z(1).pow(3),
    ])
    .unwrap();
    let p = projindex::ProjPoint::from_ints(&[0, 0, 1]).unwrap();
    let on_curve = projindex::ProjPoint::from_ints(&[1, 0, 1]).unwrap(); // 1 + 0 = 1
    assert_eq!(
        classify_point(&map, &on_curve).unwrap(),
        PointClass::FixedPoint
    );

    let opts = ResidueOptions::default();
    let r = projindex::res1(&map, &p, &opts).unwrap();
    assert_eq!(r.value, Scalar::zero());

    use projindex::theorems::{census, verify_residue_sum, SumIdentity};
    let (_, totals) = census(&map, std::slice::from_ref(&p), &opts).unwrap();
    assert!(!totals.complete);
    assert_eq!(totals.expected, sc(13)); // (3^3 - 1)/2
    let check = verify_residue_sum(
        &map,
        std::slice::from_ref(&p),
        SumIdentity::Res1,
        None,
        &opts,
    )
    .unwrap();
    assert!(
        !check.pass,
        "sum identities are never asserted on incomplete lists"
    );

    // a point on the positive-dimensional component is rejected, not wrong
    let err = projindex::res1(&map, &on_curve, &ResidueOptions::with_cap(Some(8)));
    assert!(matches!(err, Err(projindex::Error::NonIsolated { .. })));
}

#[test]
fn series_route_is_chart_invariant_at_a_two_chart_degenerate_point() {
    // F = (z0^2, z0^2 - z0 z1 + z1^2) is holomorphic on P^1 with a
    // multiplicity-2 fixed point at [1:1] (chart systems (w-1)^2 and
    // -u(u-1)^2) and a simple one at [0:1]; census 3 = 2 + 1
    let z = |i: usize| MultiPoly::var(2, i);
    let map = HomogeneousMap::new(vec![
        z(0).pow(2),
        &(&z(0).pow(2) - &(&z(0) * &z(1))) + &z(1).pow(2),
    ])
    .unwrap();
    let double = projindex::ProjPoint::from_ints(&[1, 1]).unwrap();
    let simple = projindex::ProjPoint::from_ints(&[0, 1]).unwrap();
    assert_eq!(
        classify_point(&map, &double).unwrap(),
        PointClass::FixedPoint
    );

    use projindex::residue::{res1_in_chart, res2_in_chart};
    let opts = ResidueOptions::default();
    let phi = SymSpec::sigma(1, 1);
    let mut chart_values = Vec::new();
    for chart in double.visible_charts() {
        let lm = dehomogenize_in_chart(&map, &double, chart).unwrap();
        assert!(lm.det_dg().is_zero(), "degenerate in chart {chart}");
        assert_eq!(
            local_multiplicity(&lm.chart.g, &lm.w0, &LocalConfig::default())
                .unwrap()
                .mult,
            2
        );
        let r1 = res1_in_chart(&map, &double, chart, &opts).unwrap();
        assert_eq!(r1.path, ResiduePath::Hartshorne);
        let r2 = res2_in_chart(&map, &double, chart, &phi, &opts).unwrap();
        chart_values.push((r1.value, r2.value));
    }
    assert_eq!(chart_values.len(), 2);
    assert_eq!(
        chart_values[0], chart_values[1],
        "series residues agree across charts"
    );
    assert_eq!(chart_values[0].0, Scalar::zero());
    assert_eq!(chart_values[0].1, sc(2)); // res2(sigma_n) counts the multiplicity

    // the global identities close over the two points
    use projindex::theorems::{verify_residue_sum, SumIdentity};
    let points = vec![double, simple];
    let check = verify_residue_sum(&map, &points, SumIdentity::Res1, None, &opts).unwrap();
    assert!(check.pass);
    assert_eq!(check.lhs, sc(-1));
    let check = verify_residue_sum(&map, &points, SumIdentity::Res2, Some(&phi), &opts).unwrap();
    assert!(check.pass);
    assert_eq!(check.lhs, sc(3));
}

#[test]
fn jet_solver_handles_genuinely_coupled_systems() {
    // 2x2 system over Q[[w]]: x1 + w x2 = w^2, x2 = w
    let w = MultiPoly::var(1, 0);
    let order = 4;
    let a = vec![
        vec![Jet::one(1, order), Jet::new(w.clone(), order)],
        vec![Jet::zero(1, order), Jet::one(1, order)],
    ];
    let b = vec![Jet::new(w.pow(2), order), Jet::new(w.clone(), order)];
    let x = projindex::jet::jet_solve_linear(&a, &b, order)
        .unwrap()
        .unwrap();
    assert!(x[0].is_zero()); // w^2 - w * w
    assert_eq!(x[1].poly(), &w);
    // inconsistent coupled system: x1 + w x2 = 1 with x1 = -w x2 forced
    let a = vec![
        vec![Jet::one(1, order), Jet::new(w.clone(), order)],
        vec![Jet::one(1, order), Jet::new(w.clone(), order)],
    ];
    let b = vec![Jet::one(1, order), Jet::zero(1, order)];
    assert!(projindex::jet::jet_solve_linear(&a, &b, order)
        .unwrap()
        .is_none());
}

#[test]
fn residue_preconditions_are_enforced() {
    let (map, points) = make_cremona();
    let opts = ResidueOptions::default();
    // wrong arity for phi
    let bad_arity = SymSpec::sigma(3, 2);
    assert!(matches!(
        projindex::res2(&map, &points[0], &bad_arity, &opts),
        Err(projindex::Error::ArityMismatch { .. })
    ));
    // wrong degree for phi
    let bad_degree = SymSpec::sigma(2, 1);
    assert!(matches!(
        projindex::res2(&map, &points[0], &bad_degree, &opts),
        Err(projindex::Error::WeightedDegreeMismatch { .. })
    ));
    // the third residue sum is rejected wholesale at nu = 1
    use projindex::theorems::{verify_residue_sum, SumIdentity};
    let psi = SymSpec::sigma1_pow(3, 2);
    assert!(matches!(
        verify_residue_sum(&map, &points, SumIdentity::Res3, Some(&psi), &opts),
        Err(projindex::Error::NuTooSmall)
    ));
}

#[test]
fn membership_implies_zero_residue_at_bundled_degenerate_point() {
    // the multiplicity-2 point of the degenerate P^1 map
    let (map, points) = make_degenerate_p1();
    let lm = dehomogenize_in_chart(&map, &points[0], 0).unwrap();
    let cfg = LocalConfig::default();
    let opts = ResidueOptions::default();
    let w1 = MultiPoly::var(1, 0);
    for h in [lm.chart.g[0].clone(), &lm.chart.g[0] * &w1] {
        assert!(membership_test(&h, &lm.chart.g, &lm.w0, &cfg).unwrap());
        let r = grothendieck_residue(&h, &lm.chart.g, &lm.w0, &opts).unwrap();
        assert_eq!(r.value, Scalar::zero());
        assert_eq!(r.path, ResiduePath::Hartshorne);
    }
}
