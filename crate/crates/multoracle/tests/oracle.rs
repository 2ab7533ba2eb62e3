use std::collections::BTreeMap;
use std::sync::Arc;

use lrbox_multoracle::Oracle;
use lrbox_rootsys::{RootSystem, Weight};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn oracle(s: &str) -> Oracle {
    Oracle::new(Arc::new(s.parse::<RootSystem>().unwrap()))
}

fn w(c: &[i64]) -> Weight {
    Weight::new(c.to_vec())
}

/// Brute force: count multisets of positive roots summing to `tau`.
fn partition_brute(roots: &[Vec<i64>], tau: &[i64]) -> u64 {
    fn rec(roots: &[Vec<i64>], i: usize, rest: Vec<i64>) -> u64 {
        if rest.iter().all(|&c| c == 0) {
            return 1;
        }
        if i == roots.len() || rest.iter().any(|&c| c < 0) {
            return 0;
        }
        let mut total = rec(roots, i + 1, rest.clone());
        let mut cur = rest;
        loop {
            for (c, a) in cur.iter_mut().zip(&roots[i]) {
                *c -= a;
            }
            if cur.iter().any(|&c| c < 0) {
                break;
            }
            total += rec(roots, i + 1, cur.clone());
        }
        total
    }
    rec(roots, 0, tau.to_vec())
}

#[test]
fn partition_examples() {
    let o = oracle("A2");
    assert_eq!(o.kostant_partition(&[0, 0]), 1);
    assert_eq!(o.kostant_partition(&[1, 1]), 2);
    assert_eq!(o.kostant_partition(&[-1, 0]), 0);
    let rs = o.root_system().clone();
    assert!(o.kostant_partition_scaled(&rs.weight_vector(&w(&[1, 0]))).is_err());
}

#[test]
fn partition_matches_brute_force() {
    for s in ["A2", "A3", "B2", "C3", "D4"] {
        let o = oracle(s);
        let rs = o.root_system().clone();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..30 {
            let tau: Vec<i64> = (0..rs.rank).map(|_| rng.gen_range(0..=4)).collect();
            assert_eq!(o.kostant_partition(&tau) as u64, partition_brute(&rs.positive_roots_q, &tau), "{s} {tau:?}");
        }
    }
}

#[test]
fn multiplicity_examples() {
    let a3 = oracle("A3");
    let theta = w(&[1, 0, 1]);
    assert_eq!(a3.weight_multiplicity(&theta, &w(&[0, 0, 0])).unwrap(), 3);
    assert_eq!(a3.weight_multiplicity(&theta, &theta).unwrap(), 1);
    let a2 = oracle("A2");
    assert_eq!(a2.weight_multiplicity(&w(&[1, 1]), &w(&[0, 0])).unwrap(), 2);
    assert_eq!(a2.freudenthal_multiplicity(&w(&[1, 1]), &w(&[0, 0])).unwrap(), 2);
    assert!(a2.weight_multiplicity(&w(&[-1, 1]), &w(&[0, 0])).is_err());
    // Outside the hull of the orbit.
    assert_eq!(a2.weight_multiplicity(&w(&[1, 1]), &w(&[3, 0])).unwrap(), 0);
}

#[test]
fn kostant_matches_freudenthal() {
    for s in ["A1", "A2", "A3", "B2", "C3", "B3", "D4"] {
        let o = oracle(s);
        let rs = o.root_system().clone();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let bound = if rs.rank >= 3 { 1 } else { 3 };
        for _ in 0..20 {
            let lambda = Weight::new((0..rs.rank).map(|_| rng.gen_range(0..=bound)).collect());
            let ch = o.character(&lambda).unwrap();
            for (mu, &m) in &ch.weights {
                assert_eq!(o.weight_multiplicity_scaled(&lambda, mu).unwrap(), m, "{s} {lambda:?} {mu:?}");
            }
            assert_eq!(ch.dimension() as u128, o.weyl_dimension(&lambda));
        }
    }
}

#[test]
fn lr_examples() {
    let a1 = oracle("A1");
    assert_eq!(a1.lr_coefficient(&w(&[1]), &w(&[1]), &w(&[2])).unwrap(), 1);
    assert_eq!(a1.lr_coefficient(&w(&[1]), &w(&[1]), &w(&[0])).unwrap(), 1);
    assert_eq!(a1.lr_coefficient(&w(&[1]), &w(&[1]), &w(&[1])).unwrap(), 0);
    let a2 = oracle("A2");
    assert_eq!(a2.lr_coefficient(&w(&[1, 1]), &w(&[1, 1]), &w(&[1, 1])).unwrap(), 2);
    assert_eq!(a2.lr_coefficient(&w(&[2, 1]), &w(&[0, 0]), &w(&[2, 1])).unwrap(), 1);
}

/// Decomposes a product of characters by repeatedly peeling off the highest weight.
fn peel(o: &Oracle, mut weights: BTreeMap<Vec<i64>, i64>) -> BTreeMap<Weight, i64> {
    let rs = o.root_system().clone();
    let mut out = BTreeMap::new();
    loop {
        weights.retain(|_, m| *m != 0);
        let Some(top) = weights
            .keys()
            .filter(|v| rs.is_dominant_scaled(v))
            .max_by_key(|v| (v.iter().zip(&rs.rho).map(|(a, b)| a * b).sum::<i64>(), (*v).clone()))
            .cloned()
        else {
            return out;
        };
        let m = weights[&top];
        assert!(m > 0);
        let lam = Weight::new(rs.to_weight_coords(&top).unwrap());
        for (beta, &k) in &o.character(&lam).unwrap().weights {
            *weights.entry(beta.clone()).or_insert(0) -= m * k as i64;
        }
        out.insert(lam, m);
    }
}

fn product(o: &Oracle, ws: &[Weight]) -> BTreeMap<Vec<i64>, i64> {
    let mut acc: BTreeMap<Vec<i64>, i64> = BTreeMap::new();
    acc.insert(vec![0; o.root_system().ambient], 1);
    for lam in ws {
        let ch = o.character(lam).unwrap();
        let mut next = BTreeMap::new();
        for (a, &ma) in &acc {
            for (b, &mb) in &ch.weights {
                let s: Vec<i64> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                *next.entry(s).or_insert(0) += ma * mb as i64;
            }
        }
        acc = next;
    }
    acc
}

#[test]
fn lr_routes_agree() {
    for s in ["A2", "A3", "B2", "C3"] {
        let o = oracle(s);
        let rs = o.root_system().clone();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let bound = if rs.rank >= 3 { 1 } else { 3 };
        for _ in 0..12 {
            let lam = Weight::new((0..rs.rank).map(|_| rng.gen_range(0..=bound)).collect());
            let mu = Weight::new((0..rs.rank).map(|_| rng.gen_range(0..=bound)).collect());
            let dec = o.tensor_decomposition(&lam, &mu).unwrap();
            let peeled = peel(&o, product(&o, &[lam.clone(), mu.clone()]));
            assert_eq!(dec.iter().map(|(k, &v)| (k.clone(), v as i64)).collect::<BTreeMap<_, _>>(), peeled);
            let mut dim = 0u128;
            for (nu, &c) in &dec {
                assert_eq!(o.lr_coefficient(&lam, &mu, nu).unwrap(), c, "{s} KS");
                assert_eq!(o.lr_from_multiplicities(&lam, &mu, nu).unwrap(), c, "{s} mult");
                assert_eq!(o.lr_coefficient(&mu, &lam, nu).unwrap(), c, "{s} symmetry");
                dim += c as u128 * o.weyl_dimension(nu);
            }
            assert_eq!(dim, o.weyl_dimension(&lam) * o.weyl_dimension(&mu));
        }
    }
}

#[test]
fn literal_mult_form_needs_minus_one_in_w() {
    // With -1 in W (B2) the two argument orders coincide.
    let b2 = oracle("B2");
    for (l, m, n) in [([1, 1], [1, 0], [1, 1]), ([2, 1], [1, 1], [1, 2]), ([1, 2], [0, 2], [1, 2])] {
        let (l, m, n) = (w(&l), w(&m), w(&n));
        assert_eq!(b2.lr_from_multiplicities_literal(&l, &m, &n).unwrap(), b2.lr_coefficient(&l, &m, &n).unwrap() as i64);
    }
    // In A2 the literal order computes C_{lambda* mu}^nu instead.
    let a2 = oracle("A2");
    let (l, m, n) = (w(&[1, 0]), w(&[0, 0]), w(&[1, 0]));
    assert_eq!(a2.lr_coefficient(&l, &m, &n).unwrap(), 1);
    assert_eq!(a2.lr_from_multiplicities_literal(&l, &m, &n).unwrap(), 0);
    assert_eq!(a2.lr_from_multiplicities_literal(&w(&[0, 1]), &m, &n).unwrap(), 1);
}

#[test]
fn conjugation_total_multiplicity() {
    for s in ["A2", "A3", "B2", "D4"] {
        let o = oracle(s);
        let rs = o.root_system().clone();
        let w0 = rs.longest_element().clone();
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..8 {
            let lam = Weight::new((0..rs.rank).map(|_| rng.gen_range(0..=2)).collect());
            let mu = Weight::new((0..rs.rank).map(|_| rng.gen_range(0..=2)).collect());
            let neg: Vec<i64> = w0.apply_i64(&rs.weight_vector(&mu)).iter().map(|v| -v).collect();
            let mubar = Weight::new(rs.to_weight_coords(&neg).unwrap());
            let t1: u64 = o.tensor_decomposition(&lam, &mu).unwrap().values().sum();
            let t2: u64 = o.tensor_decomposition(&lam, &mubar).unwrap().values().sum();
            assert_eq!(t1, t2, "{s}");
        }
    }
}

#[test]
fn triple_multiplicities() {
    let o = oracle("A2");
    let (l, m, k) = (w(&[1, 1]), w(&[1, 0]), w(&[0, 2]));
    let zero = w(&[0, 0]);
    for (nu, c) in o.tensor_decomposition(&l, &m).unwrap() {
        assert_eq!(o.triple_multiplicity(&l, &m, &zero, &nu).unwrap(), c);
    }
    let peeled = peel(&o, product(&o, &[l.clone(), m.clone(), k.clone()]));
    for (nu, c) in &peeled {
        assert_eq!(o.triple_multiplicity(&l, &m, &k, nu).unwrap() as i64, *c);
        // Associativity.
        let other: u64 = o
            .tensor_decomposition(&m, &k)
            .unwrap()
            .iter()
            .map(|(tau, c1)| c1 * o.tensor_decomposition(&l, tau).unwrap().get(nu).copied().unwrap_or(0))
            .sum();
        assert_eq!(other as i64, *c);
    }
    assert!(!peeled.is_empty());
}

#[test]
fn skew_multiplicity_examples() {
    let o = oracle("A2");
    let rs = o.root_system().clone();
    let (l, m, nu) = (w(&[1, 1]), w(&[1, 1]), w(&[1, 1]));
    let nup = rs.shifted(&nu);
    assert_eq!(o.skew_multiplicity(&l, &m, &nup).unwrap(), 2);
    let s1 = &rs.simple_reflections()[0];
    assert_eq!(o.skew_multiplicity(&l, &m, &s1.apply_i64(&nup)).unwrap(), -2);
    // A wall point: rho shifted onto the first wall.
    let wall = rs.from_weight_coords(&[0, 3]);
    assert_eq!(o.skew_multiplicity(&l, &m, &wall).unwrap(), 0);
    assert!(o.skew_multiplicity(&l, &m, &rs.from_weight_coords(&[1, 0])).is_err());
}

fn weyl_formula(rs: &RootSystem, lam: &Weight, x: &[f64]) -> Complex64 {
    let alt = |v: &[i64]| -> Complex64 {
        rs.weyl()
            .iter()
            .map(|w| Complex64::from_polar(w.sign as f64, rs.ip_f64(&rs.scaled_to_f64(&w.apply_i64(v)), x)))
            .sum()
    };
    alt(&rs.shifted(lam)) / alt(&rs.rho)
}

#[test]
fn character_values() {
    for s in ["A2", "B2", "A3"] {
        let o = oracle(s);
        let rs = o.root_system().clone();
        let theta = if s == "B2" { w(&[0, 2]) } else if s == "A2" { w(&[1, 1]) } else { w(&[1, 0, 1]) };
        let z = vec![0.0; rs.ambient];
        assert!((o.character_value(&theta, &z).unwrap().re - o.weyl_dimension(&theta) as f64).abs() < 1e-9);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..5 {
            let mut x: Vec<f64> = (0..rs.ambient).map(|_| rng.gen_range(-3.0..3.0)).collect();
            if rs.kind == lrbox_rootsys::RootType::A {
                let m = x.iter().sum::<f64>() / x.len() as f64;
                x.iter_mut().for_each(|v| *v -= m);
            }
            let lhs = o.character_value(&theta, &x).unwrap();
            assert!((lhs - weyl_formula(&rs, &theta, &x)).norm() < 1e-8);
            assert!((o.character_value(&Weight::zero(rs.rank), &x).unwrap() - 1.0).norm() < 1e-12);
        }
    }
}

#[test]
fn degeneration_identity() {
    let o = oracle("A2");
    let theta = w(&[1, 1]);
    assert!(o.mult_degeneration_check(&theta, &w(&[0, 0]), 2).unwrap());
    assert!(o.mult_degeneration_check(&theta, &theta, 0).unwrap());
    // Scan upward for a larger representation and report where it stabilizes.
    let lam = w(&[3, 2]);
    let mu = w(&[0, 1]);
    let k = o.degeneration_threshold(&lam, &mu, 8).unwrap();
    assert!(k.is_some());
    assert!(o.mult_degeneration_check(&lam, &mu, 8).unwrap());
    eprintln!("A2 lambda=(3,2) mu=(0,1): identity holds from k = {}", k.unwrap());
}

proptest::proptest! {
    #![proptest_config(proptest::prelude::ProptestConfig::with_cases(100))]

    #[test]
    fn tensor_products_are_symmetric_and_count_dimensions(
        which in 0usize..4,
        a in proptest::collection::vec(0i64..=2, 3),
        b in proptest::collection::vec(0i64..=2, 3),
    ) {
        let name = ["A2", "B2", "A3", "C3"][which];
        let o = oracle(name);
        let r = o.root_system().rank;
        let (lam, mu) = (w(&a[..r]), w(&b[..r]));
        let dec = o.tensor_decomposition(&lam, &mu).unwrap();
        proptest::prop_assert_eq!(&dec, &o.tensor_decomposition(&mu, &lam).unwrap());
        let total: u128 = dec.iter().map(|(nu, &c)| c as u128 * o.weyl_dimension(nu)).sum();
        proptest::prop_assert_eq!(total, o.weyl_dimension(&lam) * o.weyl_dimension(&mu));
    }
}
