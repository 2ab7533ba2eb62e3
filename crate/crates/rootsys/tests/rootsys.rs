use lrbox_core::linalg;
use lrbox_core::{rat, rat_int, Rational, RationalVector};
use lrbox_rootsys::*;
use num_traits::{Signed, ToPrimitive, Zero};
use proptest::prelude::*;

fn systems() -> Vec<RootSystem> {
    ["A1", "A2", "A3", "A4", "B2", "B3", "C2", "C3", "D3", "D4"].iter().map(|s| s.parse().unwrap()).collect()
}

#[test]
fn classical_counts() {
    for rs in systems() {
        let r = rs.rank;
        let (pos, order) = match rs.kind {
            RootType::A => ((r + 1) * r / 2, (1..=r + 1).product::<usize>()),
            RootType::B | RootType::C => (r * r, (1..=r).product::<usize>() << r),
            RootType::D => (r * (r - 1), (1..=r).product::<usize>() << (r - 1)),
        };
        assert_eq!(rs.num_positive_roots(), pos, "{rs}");
        assert_eq!(rs.weyl_order(), order, "{rs}");
    }
}

#[test]
fn rho_and_normalization() {
    for rs in systems() {
        let mut sum = vec![0i64; rs.ambient];
        for a in &rs.positive_roots {
            for (s, v) in sum.iter_mut().zip(a) {
                *s += v;
            }
        }
        assert_eq!(sum, rs.rho.iter().map(|v| 2 * v).collect::<Vec<_>>());
        assert_eq!(rs.to_weight_coords(&rs.rho).unwrap(), vec![1; rs.rank], "{rs}");
        let longest = rs.positive_roots.iter().map(|a| rs.ip_scaled(a, a)).max().unwrap();
        assert_eq!(longest, rat_int(2), "{rs}");
        if rs.kind == RootType::A {
            assert!(rs.positive_roots.iter().all(|a| a.iter().sum::<i64>() == 0));
        }
    }
}

#[test]
fn small_examples() {
    let a1: RootSystem = "A1".parse().unwrap();
    assert_eq!(a1.positive_roots.len(), 1);
    assert_eq!(a1.unscale(&a1.rho).scale(&rat_int(2)), a1.unscale(&a1.positive_roots[0]));
    let b2: RootSystem = "B2".parse().unwrap();
    let short = b2.positive_roots.iter().filter(|a| b2.ip_scaled(a, a) == rat_int(1)).count();
    assert_eq!(short, 2);
    assert!("E6".parse::<RootSystem>().is_err());
    assert!("B1".parse::<RootSystem>().is_err());
    assert!("D2".parse::<RootSystem>().is_err());
}

#[test]
fn orbit_examples() {
    let a2: RootSystem = "A2".parse().unwrap();
    let zero = RationalVector::zeros(3);
    assert!(a2.weyl_orbit(&zero).iter().all(|(_, v)| v.is_zero()));
    let rho = a2.unscale(&a2.rho);
    let mut imgs: Vec<RationalVector> = a2.weyl_orbit(&rho).into_iter().map(|(_, v)| v).collect();
    imgs.sort();
    imgs.dedup();
    assert_eq!(imgs.len(), 6);
    for rs in systems() {
        assert_eq!(rs.weyl().iter().map(|w| w.sign as i64).sum::<i64>(), 0);
    }
}

#[test]
fn dominant_representative_examples() {
    for rs in systems() {
        let rho = rs.unscale(&rs.rho);
        let (xp, w, wall) = rs.dominant_representative(&rho);
        assert_eq!(xp, rho);
        assert!(w.is_identity());
        assert!(!wall);
        let (xp, w, wall) = rs.dominant_representative(&-&rho);
        assert_eq!(xp, rho);
        assert_eq!(&w, rs.longest_element());
        assert!(!wall);
    }
    let a2: RootSystem = "A2".parse().unwrap();
    let on_wall = a2.unscale(&a2.from_weight_coords(&[2, 0]));
    let (_, _, wall) = a2.dominant_representative(&on_wall);
    assert!(wall);
}

/// Independent unimodularity oracle: every spanning subset of any size has
/// gcd of maximal minors equal to one.
fn unimodular_oracle(rs: &RootSystem) -> bool {
    let m = rs.num_positive_roots();
    let r = rs.rank;
    for mask in 1u32..(1 << m) {
        let idx: Vec<usize> = (0..m).filter(|i| mask >> i & 1 == 1).collect();
        if idx.len() < r {
            continue;
        }
        let mut g = 0i64;
        let mut stack = vec![(0usize, Vec::<usize>::new())];
        while let Some((start, cur)) = stack.pop() {
            if cur.len() == r {
                let mat: Vec<Vec<Rational>> =
                    cur.iter().map(|&i| rs.positive_roots_q[idx[i]].iter().map(|&v| rat_int(v)).collect()).collect();
                let d = linalg::det(&mat).to_integer().to_i64().unwrap().abs();
                g = num_integer::gcd(g, d);
                continue;
            }
            for i in start..idx.len() {
                let mut c = cur.clone();
                c.push(i);
                stack.push((i + 1, c));
            }
        }
        if g > 1 {
            return false;
        }
    }
    true
}

#[test]
fn unimodularity_matches_oracle() {
    for s in ["A1", "A2", "A3", "B2", "C2", "D3", "B3"] {
        let rs: RootSystem = s.parse().unwrap();
        assert_eq!(is_unimodular(&rs), unimodular_oracle(&rs), "{s}");
    }
    assert!(is_unimodular(&"A4".parse().unwrap()));
    assert!(!is_unimodular(&"C3".parse().unwrap()));
}

fn smoothness_oracle(rs: &RootSystem) -> i64 {
    let m = rs.num_positive_roots();
    let mut k: i64 = -1;
    for size in 1..=m {
        let breaks = (0u32..(1 << m)).filter(|s| s.count_ones() as usize == size).any(|mask| {
            let rest: Vec<Vec<Rational>> = (0..m)
                .filter(|i| mask >> i & 1 == 0)
                .map(|i| rs.positive_roots_q[i].iter().map(|&v| rat_int(v)).collect())
                .collect();
            rest.is_empty() || linalg::rank(&rest) < rs.rank
        });
        if breaks {
            return k;
        }
        k = size as i64 - 1;
    }
    k
}

#[test]
fn smoothness_matches_oracle_and_closed_form() {
    for s in ["A1", "A2", "A3", "A4", "B2", "B3", "C3", "D4"] {
        let rs: RootSystem = s.parse().unwrap();
        assert_eq!(smoothness_degree(&rs), smoothness_oracle(&rs), "{s}");
    }
    for n in 2..=6 {
        let rs = RootSystem::build(RootType::A, n - 1).unwrap();
        assert_eq!(smoothness_degree(&rs), n as i64 - 3);
    }
    for n in 2..=4 {
        assert_eq!(smoothness_degree(&RootSystem::build(RootType::B, n).unwrap()), 2 * n as i64 - 3);
        assert_eq!(smoothness_degree(&RootSystem::build(RootType::C, n).unwrap()), 2 * n as i64 - 3);
    }
    for n in 4..=5 {
        assert_eq!(smoothness_degree(&RootSystem::build(RootType::D, n).unwrap()), 2 * n as i64 - 4);
    }
    // D3 is A3 in disguise: an A2 subsystem puts three roots in one hyperplane.
    assert_eq!(smoothness_degree(&"D3".parse().unwrap()), 1);
}

#[test]
fn coordinate_round_trips() {
    for rs in systems() {
        for a in &rs.positive_roots {
            let q = rs.to_root_coords(a).unwrap();
            assert_eq!(&rs.from_root_coords(&q), a);
            assert!(q.iter().all(|&c| c >= 0));
        }
        for (i, w) in rs.fundamental_weights.iter().enumerate() {
            let mut e = vec![0; rs.rank];
            e[i] = 1;
            assert_eq!(rs.to_weight_coords(w).unwrap(), e);
        }
    }
}

fn point(rs: &RootSystem, c: &[(i64, i64)]) -> RationalVector {
    rs.from_weight_coords_rat(&RationalVector::new(c[..rs.rank].iter().map(|&(p, q)| rat(p, q)).collect()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn pairing_is_w_invariant(
        idx in 0usize..10,
        wi in 0usize..50000,
        x in prop::collection::vec((-12i64..=12, 1i64..=4), 6),
        y in prop::collection::vec((-12i64..=12, 1i64..=4), 6),
    ) {
        let rs = &systems()[idx];
        let w = &rs.weyl()[wi % rs.weyl_order()];
        let (x, y) = (point(rs, &x), point(rs, &y));
        prop_assert_eq!(rs.ip(&w.apply(&x), &w.apply(&y)), rs.ip(&x, &y));
    }

    #[test]
    fn sign_is_multiplicative(idx in 0usize..10, a in 0usize..50000, b in 0usize..50000) {
        let rs = &systems()[idx];
        let w1 = &rs.weyl()[a % rs.weyl_order()];
        let w2 = &rs.weyl()[b % rs.weyl_order()];
        let prod = w1.compose(w2);
        prop_assert_eq!(prod.sign, w1.sign * w2.sign);
        prop_assert!(rs.weyl().contains(&prod));
    }

    #[test]
    fn dominant_fast_path_agrees(idx in 0usize..10, c in prop::collection::vec(-9i64..=9, 6)) {
        let rs = &systems()[idx];
        let x = rs.from_weight_coords(&c[..rs.rank]);
        let (xp, eps) = rs.dominant_scaled(&x);
        let (xr, w, wall) = rs.dominant_representative(&rs.unscale(&x));
        prop_assert_eq!(rs.unscale(&xp), xr.clone());
        prop_assert_eq!(w.apply(&rs.unscale(&x)), xr);
        prop_assert_eq!(wall, eps == 0);
        if eps != 0 {
            prop_assert_eq!(eps, w.sign);
        }
        prop_assert!(rs.is_dominant_scaled(&xp));
    }
}

#[test]
fn rho_hull_points() {
    let a3: RootSystem = "A3".parse().unwrap();
    let k = a3.dominant_root_points_in_rho_hull(true);
    assert_eq!(k.len(), 2);
    let b2: RootSystem = "B2".parse().unwrap();
    let kb: Vec<Vec<i64>> = b2.dominant_root_points_in_rho_hull(true).iter().map(|v| b2.to_root_coords(v).unwrap()).collect();
    assert_eq!(kb, vec![vec![0, 0], vec![1, 1]]);
    let a2: RootSystem = "A2".parse().unwrap();
    assert_eq!(a2.dominant_root_points_in_rho_hull(true).len(), 1);
    assert!(a2.dominant_root_points_in_rho_hull(false).len() > 1);
    assert!(rat_int(0).is_zero() && !rat_int(-1).is_positive());
}
