use lrbox_core::poly::monomials;
use lrbox_core::*;
use num_traits::Zero;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Independent oracle: the recurrence sum_{k<=n} C(n+1,k) B_k = 0 with B_1 = -1/2.
fn bernoulli_recurrence(n: usize) -> Vec<Rational> {
    let mut b = vec![rat_int(1)];
    for m in 1..=n {
        let mut s = Rational::zero();
        let mut binom = rat_int(1);
        for (k, bk) in b.iter().enumerate() {
            s += &binom * bk;
            binom = binom * rat_int((m + 1 - k) as i64) / rat_int((k + 1) as i64);
        }
        b.push(-s / rat_int((m + 1) as i64));
    }
    b
}

#[test]
fn bernoulli_matches_recurrence() {
    let oracle = bernoulli_recurrence(16);
    for n in (0..=16).step_by(2) {
        assert_eq!(bernoulli(n as u32).unwrap(), oracle[n], "B_{n}");
    }
}

fn arb_measure(dim: usize) -> impl Strategy<Value = LatticeMeasure> {
    prop::collection::vec((prop::collection::vec(-3i64..=3, dim), -5i64..=5, 1i64..=4), 0..6).prop_map(move |e| {
        let mut m = LatticeMeasure::zero(LatticeKind::Root, dim);
        for (c, p, q) in e {
            m.add_at(c, rat(p, q));
        }
        m
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn rational_sum_two_ways(a in -50i64..50, b in 1i64..20, c in -50i64..50, d in 1i64..20) {
        let direct = rat(a, b) + rat(c, d);
        let cross = rat(a * d + c * b, b * d);
        prop_assert_eq!(direct, cross);
    }

    #[test]
    fn convolution_commutes(f in arb_measure(2), g in arb_measure(2)) {
        prop_assert_eq!(f.convolve(&g).unwrap(), g.convolve(&f).unwrap());
    }

    #[test]
    fn convolution_associates(f in arb_measure(2), g in arb_measure(2), h in arb_measure(2)) {
        let l = f.convolve(&g).unwrap().convolve(&h).unwrap();
        let r = f.convolve(&g.convolve(&h).unwrap()).unwrap();
        prop_assert_eq!(l, r);
    }

    #[test]
    fn convolution_mass(f in arb_measure(3), g in arb_measure(3)) {
        prop_assert_eq!(f.convolve(&g).unwrap().mass(), f.mass() * g.mass());
    }

    #[test]
    fn interpolate_inverts_evaluate(seed in any::<u64>(), nvars in 1usize..=3, degree in 0u32..=3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let basis = monomials(nvars, degree);
        let p = MultivariatePolynomial::from_terms(
            nvars,
            basis.iter().map(|e| (e.clone(), rat(rng.gen_range(-9..=9), rng.gen_range(1..=5)))),
        );
        // Simplex grid {k : |k|_1 <= degree} is unisolvent; add a few extra checks.
        let mut pts: Vec<RationalVector> = basis
            .iter()
            .map(|e| RationalVector::new(e.iter().map(|&k| rat(k as i64, 2)).collect()))
            .collect();
        for _ in 0..3 {
            pts.push(RationalVector::new((0..nvars).map(|_| rat(rng.gen_range(-7..=7), 3)).collect()));
        }
        let vals: Vec<Rational> = pts.iter().map(|x| p.eval(&x.coords)).collect();
        prop_assert_eq!(interpolate(&pts, &vals, degree).unwrap(), p);
    }
}

#[test]
fn random_cubic_on_grid() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let basis = monomials(2, 3);
    let p = MultivariatePolynomial::from_terms(2, basis.iter().map(|e| (e.clone(), rat(rng.gen_range(-20..=20), rng.gen_range(1..=9)))));
    let mut pts = Vec::new();
    for i in -2..=2 {
        for j in -2..=2 {
            pts.push(RationalVector::from_ints(&[i, j]));
        }
    }
    let vals: Vec<Rational> = pts.iter().map(|x| p.eval(&x.coords)).collect();
    assert_eq!(interpolate(&pts, &vals, 3).unwrap(), p);
}
