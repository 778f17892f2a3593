use num_bigint::BigInt;
use proptest::prelude::*;
use tori::tori::{
    corollary_paths, projective_params, torus_order, torus_psl, torus_psl_canonical, torus_sl,
    torus_sl_canonical,
};
use tori::{Eps, Partitions, Spec};

const QS: [i64; 7] = [2, 3, 4, 5, 7, 8, 9];

fn spec(q: i64, eps: Eps, parts: &[u32]) -> Spec {
    Spec::new(BigInt::from(q), eps, parts.to_vec()).unwrap()
}

fn permutations(xs: &[u32]) -> Vec<Vec<u32>> {
    if xs.len() <= 1 {
        return vec![xs.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..xs.len() {
        if xs[..i].contains(&xs[i]) {
            continue;
        }
        let mut rest = xs.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

fn index_permutations(k: usize) -> Vec<Vec<usize>> {
    let idx: Vec<u32> = (0..k as u32).collect();
    permutations(&idx)
        .into_iter()
        .map(|p| p.into_iter().map(|i| i as usize).collect())
        .collect()
}

// Up to n = 14 in both families, with every corollary that applies.
#[test]
fn fast_canonical_and_corollaries_agree_up_to_14() {
    for n in 13..=14 {
        for parts in Partitions::new(n) {
            for q in QS {
                for eps in Eps::BOTH {
                    let sp = spec(q, eps, &parts);
                    let sl = torus_sl(&sp).unwrap();
                    let psl = torus_psl(&sp, None).unwrap();
                    assert!(sl.is_isomorphic(&torus_sl_canonical(&sp).unwrap()), "{sp}");
                    assert!(
                        psl.is_isomorphic(&torus_psl_canonical(&sp).unwrap()),
                        "{sp}"
                    );
                    for (projective, g) in [(false, &sl), (true, &psl)] {
                        for (case, h) in corollary_paths(&sp, projective).unwrap() {
                            assert!(g.is_isomorphic(&h), "{sp} {case}: {g} vs {h}");
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn every_ordering_gives_the_same_torus() {
    for n in 1..=9 {
        for parts in Partitions::new(n) {
            for q in [2, 3, 4] {
                for eps in Eps::BOTH {
                    let base = spec(q, eps, &parts);
                    let sl = torus_sl(&base).unwrap();
                    let psl = torus_psl(&base, None).unwrap();
                    for perm in permutations(&parts) {
                        let sp = base.with_partition(perm).unwrap();
                        assert!(torus_sl(&sp).unwrap().is_isomorphic(&sl), "{sp}");
                        assert!(torus_psl(&sp, None).unwrap().is_isomorphic(&psl), "{sp}");
                    }
                    for relabel in index_permutations(parts.len().saturating_sub(1)) {
                        let g = torus_psl(&base, Some(&relabel)).unwrap();
                        assert!(g.is_isomorphic(&psl), "{base} relabel {relabel:?}");
                    }
                }
            }
        }
    }
}

#[test]
fn example_three_orderings_are_isomorphic() {
    for q in [2, 3, 5] {
        for eps in Eps::BOTH {
            let groups: Vec<_> = permutations(&[15, 10, 6])
                .into_iter()
                .map(|p| torus_sl(&spec(q, eps, &p)).unwrap())
                .collect();
            assert_eq!(groups.len(), 6);
            for g in &groups {
                assert!(g.is_isomorphic(&groups[0]));
            }
        }
    }
}

#[test]
fn unitary_single_part_order() {
    for q in 2..=9i64 {
        for n in 1..=12u32 {
            let g = torus_sl(&spec(q, Eps::Minus, &[n])).unwrap();
            let q = BigInt::from(q);
            let sign = if n % 2 == 0 { 1 } else { -1 };
            let direct = (q.pow(n) - BigInt::from(sign)) / (q + 1);
            assert_eq!(g.order(), direct, "n = {n}");
        }
    }
}

#[test]
fn projective_constants() {
    for n in 1..=10 {
        for parts in Partitions::new(n) {
            for q in QS {
                for eps in Eps::BOTH {
                    let sp = spec(q, eps, &parts);
                    let p = projective_params(&sp, None).unwrap();
                    assert_eq!(&p.d % &p.d_prime, BigInt::from(0), "{sp}");
                    assert_eq!(p.t, sp.t());
                    let sl = torus_order(&sp, false).unwrap();
                    let psl = torus_order(&sp, true).unwrap();
                    assert_eq!(sl, psl * &p.d, "{sp}");
                }
            }
        }
    }
}

#[test]
fn i64_and_bigint_agree_on_small_inputs() {
    for parts in Partitions::new(8) {
        for eps in Eps::BOTH {
            let small = tori::TorusSpec::new(3i64, eps, parts.clone()).unwrap();
            let wide = spec(3, eps, &parts);
            let a: Vec<BigInt> = torus_psl(&small, None)
                .unwrap()
                .factors()
                .iter()
                .map(|&x| BigInt::from(x))
                .collect();
            assert_eq!(a, torus_psl(&wide, None).unwrap().factors());
        }
    }
}

fn partition_strategy() -> impl Strategy<Value = Vec<u32>> {
    proptest::collection::vec(1u32..=8, 1..=6)
}

proptest! {
    #[test]
    fn psl_is_sl_over_d(parts in partition_strategy(), q in 2i64..=13, minus in any::<bool>()) {
        let eps = if minus { Eps::Minus } else { Eps::Plus };
        let sp = spec(q, eps, &parts);
        let sl = torus_sl(&sp).unwrap();
        let psl = torus_psl(&sp, None).unwrap();
        prop_assert_eq!(sl.order(), torus_order(&sp, false).unwrap());
        prop_assert_eq!(psl.order() * sp.d(), sl.order());
        prop_assert!(sl.is_isomorphic(&torus_sl_canonical(&sp).unwrap()));
        prop_assert!(psl.is_isomorphic(&torus_psl_canonical(&sp).unwrap()));
    }

    #[test]
    fn shuffled_partition_same_group(parts in partition_strategy(), q in 2i64..=9, rot in 0usize..6) {
        let sp = spec(q, Eps::Plus, &parts);
        let mut shuffled = parts.clone();
        let len = shuffled.len();
        shuffled.rotate_left(rot % len);
        let other = sp.with_partition(shuffled).unwrap();
        prop_assert!(torus_sl(&sp).unwrap().is_isomorphic(&torus_sl(&other).unwrap()));
        prop_assert!(torus_psl(&sp, None).unwrap().is_isomorphic(&torus_psl(&other, None).unwrap()));
    }
}
