use std::collections::BTreeMap;
use std::sync::Arc;

use lrbox_core::rational::to_f64;
use lrbox_core::{rat, rat_int, LatticeKind, LatticeMeasure, MultivariatePolynomial, Rational};
use lrbox_deconv::*;
use lrbox_rootsys::{RootSystem, Weight};
use lrbox_volumefn::{ahat_via_local_fit, sample_shielded_near, sample_shielded_triples, shielded_test, VolumeContext};
use num_traits::Zero;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn ctx(s: &str) -> VolumeContext {
    let rs: RootSystem = s.parse().unwrap();
    VolumeContext::new(Arc::new(rs)).unwrap()
}

fn w(c: &[i64]) -> Weight {
    Weight::new(c.to_vec())
}

fn random_measure(rng: &mut ChaCha8Rng, dim: usize, points: usize, spread: i64) -> LatticeMeasure {
    let mut m = LatticeMeasure::zero(LatticeKind::Root, dim);
    for _ in 0..points {
        let at: Vec<i64> = (0..dim).map(|_| rng.gen_range(-spread..=spread)).collect();
        m.add_at(at, rat(rng.gen_range(-9..=9), rng.gen_range(1..=4)));
    }
    m
}

#[test]
fn deconvolution_trivial_cases() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let h = random_measure(&mut rng, 2, 12, 4);
    let delta = LatticeMeasure::delta(LatticeKind::Root, vec![0, 0]);
    assert_eq!(lattice_deconvolve(&delta, &h).unwrap(), h);
    assert_eq!(lattice_deconvolve(&h, &h).unwrap(), delta);
    let zero = LatticeMeasure::zero(LatticeKind::Root, 2);
    assert!(matches!(lattice_deconvolve(&zero, &h), Err(DeconvError::ZeroDivisor)));
    assert!(lattice_deconvolve(&h, &zero).unwrap().is_empty());
}

#[test]
fn deconvolution_round_trip_on_a2_root_lattice() {
    let c = ctx("A2");
    let mut f = LatticeMeasure::zero(LatticeKind::Root, 2);
    for (q, b) in c.table.lattice_values.iter() {
        f.add_at(q.clone(), b.clone());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..20 {
        let n = rng.gen_range(1..=20);
        let g = random_measure(&mut rng, 2, n, 6);
        if g.is_empty() {
            continue;
        }
        let h = f.convolve(&g).unwrap();
        assert_eq!(lattice_deconvolve(&f, &h).unwrap(), g);
    }
}

#[test]
fn deconvolution_reports_measures_outside_the_image() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let f = random_measure(&mut rng, 2, 6, 2);
    let g = random_measure(&mut rng, 2, 6, 2);
    let mut h = f.convolve(&g).unwrap();
    h.add_at(vec![-40, 0], rat_int(1));
    assert!(matches!(lattice_deconvolve(&f, &h), Err(DeconvError::NotInImage(_))));
    // Division that never terminates exactly: (1 - x) does not divide 1.
    let mut f = LatticeMeasure::zero(LatticeKind::Root, 1);
    f.add_at(vec![0], rat_int(1));
    f.add_at(vec![1], rat_int(-1));
    let h = LatticeMeasure::delta(LatticeKind::Root, vec![0]);
    assert!(matches!(lattice_deconvolve(&f, &h), Err(DeconvError::NotInImage(_))));
}

fn as_u64(m: &BTreeMap<Weight, u64>) -> BTreeMap<Weight, u64> {
    m.iter().filter(|(_, &c)| c > 0).map(|(k, v)| (k.clone(), *v)).collect()
}

#[test]
fn algorithmic_route_a2_box() {
    let c = ctx("A2");
    for a in 0..5 {
        for b in 0..5 {
            for x in 0..5 {
                for y in 0..5 {
                    let (l, m) = (w(&[a, b]), w(&[x, y]));
                    let got = multiplicities_from_j_algorithmic(&c, &l, &m).unwrap();
                    assert_eq!(as_u64(&got), c.oracle.tensor_decomposition(&l, &m).unwrap(), "{l:?} {m:?}");
                }
            }
        }
    }
}

#[test]
fn algorithmic_route_beyond_unimodular() {
    for (name, hi) in [("B2", 4), ("A3", 2), ("C3", 1)] {
        let c = ctx(name);
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..6 {
            let l = Weight::new((0..c.rs.rank).map(|_| rng.gen_range(0..=hi)).collect());
            let m = Weight::new((0..c.rs.rank).map(|_| rng.gen_range(0..=hi)).collect());
            let got = multiplicities_from_j_algorithmic(&c, &l, &m).unwrap();
            assert_eq!(as_u64(&got), c.oracle.tensor_decomposition(&l, &m).unwrap(), "{name} {l:?} {m:?}");
        }
    }
}

#[test]
fn algorithmic_route_with_trivial_first_factor() {
    let c = ctx("B2");
    let mu = w(&[2, 1]);
    let ev = c.evaluator(&w(&[0, 0]), &mu).unwrap();
    let skew = lattice_deconvolve(&b_weight_measure(&c), &ev.volume_lattice_measure()).unwrap();
    assert_eq!(skew.len(), c.rs.weyl_order());
    let pattern: BTreeMap<Weight, i64> = [(mu.clone(), 1)].into_iter().collect();
    assert_eq!(skew, skew_from_multiplicities(&c.rs, &pattern));
}

#[test]
fn skew_check_rejects_broken_measures() {
    let c = ctx("A2");
    let pattern: BTreeMap<Weight, i64> = [(w(&[1, 0]), 2)].into_iter().collect();
    let mut skew = skew_from_multiplicities(&c.rs, &pattern);
    assert_eq!(multiplicities_from_skew(&c.rs, &skew).unwrap(), pattern);
    skew.add_at(vec![0, 3], rat_int(1));
    assert!(matches!(multiplicities_from_skew(&c.rs, &skew), Err(DeconvError::NotSkew(_))));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn round_trip_on_arbitrary_patterns(
        entries in proptest::collection::vec(((0i64..6, 0i64..6), -5i64..=5), 1..8),
        b2 in any::<bool>(),
    ) {
        let c = if b2 { ctx("B2") } else { ctx("A2") };
        // One coset of P / Q so the forward measure lives on a single translate.
        let base = w(&[entries[0].0 .0, entries[0].0 .1]);
        let class = c.rs.weight_vector(&base);
        let mut pattern = BTreeMap::new();
        for ((a, b), v) in entries {
            let nu = w(&[a, b]);
            let diff: Vec<i64> = c.rs.weight_vector(&nu).iter().zip(&class).map(|(x, y)| x - y).collect();
            if v != 0 && c.rs.in_root_lattice(&diff) {
                pattern.insert(nu, v);
            }
        }
        let skew = skew_from_multiplicities(&c.rs, &pattern);
        let j = forward_j_measure(&c, &skew).unwrap();
        let back = lattice_deconvolve(&b_weight_measure(&c), &j).unwrap();
        prop_assert_eq!(multiplicities_from_skew(&c.rs, &back).unwrap(), pattern);
    }
}

fn second_differences(rs: &RootSystem, roots: &[Vec<i64>], c: Rational) -> Vec<(Vec<i64>, Rational)> {
    let _ = rs;
    roots.iter().map(|r| (r.clone(), c.clone())).collect()
}

#[test]
fn laplacian_closed_forms() {
    let c2 = ctx("A2");
    assert!(LaplacianOperator::from_context(&c2).stencil().is_empty());

    let c3 = ctx("A3");
    let rs = c3.rs.clone();
    let expect = LaplacianOperator::from_second_differences(rs.clone(), &second_differences(&rs, &rs.positive_roots, rat(1, 12)));
    assert_eq!(LaplacianOperator::from_context(&c3).stencil(), expect.stencil());

    let cb = ctx("B2");
    let rs = cb.rs.clone();
    let short: Vec<Vec<i64>> = rs.positive_roots.iter().filter(|r| rs.ip_scaled(r, r) == rs.ip_scaled(&rs.simple_roots[1], &rs.simple_roots[1])).cloned().collect();
    assert_eq!(short.len(), 2);
    assert!(rs.ip_scaled(&short[0], &short[1]).is_zero());
    let expect = LaplacianOperator::from_second_differences(rs.clone(), &second_differences(&rs, &short, rat(1, 4)));
    assert_eq!(LaplacianOperator::from_context(&cb).stencil(), expect.stencil());
}

#[test]
fn laplacian_closed_form_a4() {
    let c = ctx("A4");
    let rs = c.rs.clone();
    let mut diffs = Vec::new();
    for a in &rs.positive_roots {
        diffs.push((a.clone(), rat(1, 15)));
        for b in &rs.positive_roots {
            if rs.ip_scaled(a, b).is_zero() {
                let plus: Vec<i64> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                let minus: Vec<i64> = a.iter().zip(b).map(|(x, y)| x - y).collect();
                diffs.push((plus, rat(1, 15 * 48)));
                diffs.push((minus, rat(1, 15 * 48)));
            }
        }
    }
    let expect = LaplacianOperator::from_second_differences(rs.clone(), &diffs);
    let op = LaplacianOperator::from_context(&c);
    assert_eq!(op.stencil(), expect.stencil());
    // With inner weight 1/12 every cross vector is counted four times over, and
    // (1 + D/2) would no longer have b(0) = 1/4 at the origin.
    let literal: Vec<(Vec<i64>, Rational)> =
        diffs.iter().map(|(v, k)| (v.clone(), if *k == rat(1, 15) { k.clone() } else { rat(1, 180) })).collect();
    let literal = LaplacianOperator::from_second_differences(rs.clone(), &literal).stencil();
    let origin = vec![0i64; rs.ambient];
    assert_eq!(rat_int(1) + &op.stencil()[&origin] * rat(1, 2), rat(1, 4));
    assert_eq!(rat_int(1) + &literal[&origin] * rat(1, 2), rat_int(0));
}

#[test]
fn laplacian_annihilates_affine_functions_and_represents_convolution() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for name in ["A3", "B2", "C3"] {
        let c = ctx(name);
        let op = LaplacianOperator::from_context(&c);
        let xi = c.rs.from_root_coords(&vec![2; c.rs.rank]);
        assert!(laplacian_apply(&op, |_| rat(7, 3), &xi).is_zero());
        let coeffs: Vec<i64> = (0..c.rs.ambient).map(|_| rng.gen_range(-5..=5)).collect();
        let affine = |x: &[i64]| rat_int(x.iter().zip(&coeffs).map(|(a, b)| a * b).sum::<i64>() + 11);
        assert!(laplacian_apply(&op, affine, &xi).is_zero());
        let table: BTreeMap<Vec<i64>, Rational> = (0..200)
            .map(|_| {
                let q: Vec<i64> = (0..c.rs.rank).map(|_| rng.gen_range(-3..=3)).collect();
                (c.rs.from_root_coords(&q), rat(rng.gen_range(-20..=20), rng.gen_range(1..=6)))
            })
            .collect();
        let f = |x: &[i64]| table.get(x).cloned().unwrap_or_else(Rational::zero);
        for _ in 0..10 {
            let q: Vec<i64> = (0..c.rs.rank).map(|_| rng.gen_range(-2..=2)).collect();
            let (lhs, rhs) = convolution_sides(&op, f, &c.rs.from_root_coords(&q));
            assert_eq!(lhs, rhs, "{name}");
        }
    }
}

fn random_polynomial(rng: &mut ChaCha8Rng, nvars: usize, degree: u32) -> MultivariatePolynomial {
    let terms = lrbox_core::poly::monomials(nvars, degree)
        .into_iter()
        .map(|e| (e, rat_int(rng.gen_range(-6..=6))))
        .collect::<Vec<_>>();
    let mut p = MultivariatePolynomial::from_terms(nvars, terms);
    // Force the top degree to be attained.
    let mut top = vec![0u32; nvars];
    top[0] = degree;
    p.add_term(top, rat_int(1) - p.coefficient(&{
        let mut t = vec![0u32; nvars];
        t[0] = degree;
        t
    }));
    p
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn laplacian_lowers_degree_by_two(seed in any::<u64>(), degree in 0u32..6, which in 0usize..3) {
        let name = ["A3", "B2", "A2"][which];
        let c = ctx(name);
        let op = LaplacianOperator::from_context(&c);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = random_polynomial(&mut rng, c.rs.rank, degree);
        prop_assert_eq!(p.degree(), Some(degree));
        let dp = op.apply_polynomial(&p);
        if degree < 2 {
            prop_assert!(dp.is_zero());
        } else {
            prop_assert!(dp.degree().is_none_or(|e| e + 2 <= degree));
        }
        // The polynomial form agrees with the pointwise form at lattice points.
        let q: Vec<i64> = (0..c.rs.rank).map(|_| rng.gen_range(-3..=3)).collect();
        let f = |x: &[i64]| p.eval(&c.rs.to_root_coords(x).unwrap().iter().map(|&v| rat_int(v)).collect::<Vec<_>>());
        let at: Vec<Rational> = q.iter().map(|&v| rat_int(v)).collect();
        prop_assert_eq!(op.apply(f, &c.rs.from_root_coords(&q)), dp.eval(&at));
    }
}

#[test]
fn jlr_laplacian_random_triples() {
    for (name, hi) in [("A2", 4), ("A3", 2), ("B2", 3)] {
        let c = ctx(name);
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let mut checked = 0;
        while checked < 12 {
            let l = Weight::new((0..c.rs.rank).map(|_| rng.gen_range(0..=hi)).collect());
            let m = Weight::new((0..c.rs.rank).map(|_| rng.gen_range(0..=hi)).collect());
            let nu = Weight::new((0..c.rs.rank).map(|_| rng.gen_range(0..=2 * hi)).collect());
            if !c.rs.compatible(&l, &m, &nu) {
                continue;
            }
            let (j, rhs) = jlr_laplacian_sides(&c, &l, &m, &nu).unwrap();
            assert_eq!(j, rhs, "{name} {l:?} {m:?} {nu:?}");
            if name == "A2" {
                assert_eq!(j, rat_int(c.oracle.lr_coefficient(&l, &m, &nu).unwrap() as i64));
            }
            checked += 1;
        }
    }
}

#[test]
fn shielded_su4_stencil() {
    let c = ctx("A3");
    let rs = c.rs.clone();
    let op = LaplacianOperator::from_context(&c);
    let expect =
        LaplacianOperator::from_second_differences(rs.clone(), &second_differences(&rs, &rs.positive_roots, rat(-1, 24)));
    let mut want = expect.stencil();
    *want.entry(vec![0; rs.ambient]).or_insert_with(Rational::zero) += rat_int(1);
    assert_eq!(neumann_stencil(&op, rs.d() / 2), want);
}

#[test]
fn finite_difference_inversion_a3() {
    let c = ctx("A3");
    let triples = sample_shielded_triples(&c.oracle, 50, 60, 3, 400, 17).unwrap();
    assert_eq!(triples.len(), 50);
    for (l, m, nu, cc) in &triples {
        assert_eq!(finite_difference_inversion(&c, l, m, nu).unwrap(), *cc, "{l:?} {m:?} {nu:?}");
    }
    for (l, m, nu, cc) in triples.iter().take(6) {
        assert_eq!(ahat_via_local_fit(&c, l, m, nu).unwrap(), *cc);
    }
}

#[test]
fn finite_difference_inversion_a4() {
    let c = ctx("A4");
    let lambda = w(&[400, 700, 1100, 500]);
    let mu = w(&[2, 1, 1, 60]);
    let triples = sample_shielded_near(&c.oracle, &lambda, &mu, 10, 25, 19).unwrap();
    assert_eq!(triples.len(), 10);
    for (l, m, nu, cc) in &triples {
        let got = finite_difference_inversion_with(&c, l, m, nu, |t| Ok(c.oracle.lr_from_multiplicities(m, l, t)?)).unwrap();
        assert_eq!(got, *cc, "{nu:?}");
    }
}

#[test]
fn finite_difference_edge_cases() {
    let c1 = ctx("A1");
    let op = LaplacianOperator::from_context(&c1);
    assert_eq!(neumann_stencil(&op, 0).len(), 1);
    for (l, m, nu) in [([3], [2], [1]), ([4], [4], [8]), ([5], [2], [3])] {
        let (l, m, nu) = (w(&l), w(&m), w(&nu));
        let want = c1.oracle.lr_coefficient(&l, &m, &nu).unwrap();
        assert_eq!(finite_difference_inversion(&c1, &l, &m, &nu).unwrap(), want);
    }

    let c3 = ctx("A3");
    let (l, m, nu) = (w(&[2, 1, 2]), w(&[1, 2, 1]), w(&[1, 1, 1]));
    assert!(matches!(finite_difference_inversion(&c3, &l, &m, &nu), Err(DeconvError::NotShielded)));

    let cb = ctx("B2");
    let z = w(&[0, 0]);
    assert!(matches!(finite_difference_inversion(&cb, &z, &z, &z), Err(DeconvError::NotTypeA(_))));
}

#[test]
fn truncated_series_fails_across_walls() {
    let c = ctx("A3");
    let (l, m, nu) = (w(&[2, 1, 2]), w(&[1, 2, 1]), w(&[1, 1, 1]));
    assert!(!shielded_test(&c.rs, &l, &m, &nu).unwrap());
    let value = finite_difference_value(&c, &l, &m, &nu).unwrap();
    assert_eq!(c.oracle.lr_coefficient(&l, &m, &nu).unwrap(), 4);
    assert_ne!(value, rat_int(4));
    assert_eq!(value, rat(181, 48));
}

#[test]
fn fourier_route() {
    for (name, hi, count) in [("A2", 4, 12), ("B2", 3, 12), ("A3", 2, 4), ("B3", 1, 3), ("C3", 1, 3)] {
        let c = ctx(name);
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let mut checked = 0;
        while checked < count {
            let l = Weight::new((0..c.rs.rank).map(|_| rng.gen_range(0..=hi)).collect());
            let m = Weight::new((0..c.rs.rank).map(|_| rng.gen_range(0..=hi)).collect());
            let nu = Weight::new((0..c.rs.rank).map(|_| rng.gen_range(0..=2 * hi)).collect());
            if !c.rs.compatible(&l, &m, &nu) {
                continue;
            }
            let want = c.oracle.lr_coefficient(&l, &m, &nu).unwrap();
            assert_eq!(multiplicities_from_j_fourier(&c, &l, &m, &nu).unwrap(), want, "{name} {l:?} {m:?} {nu:?}");
            let report = fourier_quadrature(&c, &l, &m, &nu).unwrap();
            assert!(report.residual() < 1e-6);
            assert!(report.grid as i64 > 2 * report.frequency_bound);
            checked += 1;
        }
    }
    let c = ctx("A2");
    assert_eq!(multiplicities_from_j_fourier(&c, &w(&[1, 0]), &w(&[0, 0]), &w(&[0, 1])).unwrap(), 0);
    let c4 = ctx("A4");
    let z = w(&[0; 4]);
    assert!(matches!(multiplicities_from_j_fourier(&c4, &z, &z, &z), Err(DeconvError::RankTooLarge { .. })));
}

#[test]
fn deconvolution_kernel() {
    let c2 = ctx("A2");
    assert!((c_kernel_numeric(&c2, &[0, 0], 8).unwrap() - 1.0).abs() < 1e-12);
    for tau in [[1, 0], [1, 1], [-2, 1]] {
        assert!(c_kernel_numeric(&c2, &tau, 8).unwrap().abs() < 1e-12);
    }
    let c3 = ctx("A3");
    let c0 = c_kernel_numeric(&c3, &[0, 0, 0], 16).unwrap();
    assert!(c0 > 1.0);
    assert!(c_kernel_window_residual(&c3, 4, 16).unwrap() < 1e-4);
    let cb = ctx("B2");
    assert!(matches!(c_kernel_numeric(&cb, &[0, 0], 8), Err(DeconvError::NotTypeA(_))));
    // R has a zero for B2, which is why the kernel is restricted to type A.
    let r_at_zero: f64 = cb.support.iter().map(|(tau, b)| {
        let x = cb.rs.scaled_to_f64(tau);
        to_f64(b) * (std::f64::consts::PI * (x[0] + x[1])).cos()
    }).sum();
    assert!(r_at_zero.abs() < 1e-12);
}
