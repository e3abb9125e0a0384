use std::sync::OnceLock;

use k3orders::cyclotomic_core::{euler_phi, gcd};
use k3orders::spectrum::{power_preimages, profiles_of_dim, symplectic_profile, EigenProfile};
use k3orders::tame_engine::orbit_universe;
use proptest::prelude::*;

/// A random profile of dimension 22 over the divisors of `big` with `φ <= 21`.
fn profile() -> impl Strategy<Value = EigenProfile> {
    static POOLS: OnceLock<Vec<Vec<EigenProfile>>> = OnceLock::new();
    let pools = POOLS.get_or_init(|| {
        [12u64, 24, 30, 36, 40, 42, 44, 48, 60, 66]
            .iter()
            .map(|&big| profiles_of_dim(&orbit_universe(big), 22))
            .collect()
    });
    (0..pools.len(), any::<prop::sample::Index>()).prop_map(move |(i, idx)| pools[i][idx.index(pools[i].len())].clone())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn power_is_a_homomorphism(p in profile(), a in 1u64..30, b in 1u64..30) {
        prop_assert_eq!(p.power(a).power(b), p.power(a * b));
        prop_assert_eq!(p.power(a).trace_power(b), p.trace_power(a * b));
        prop_assert_eq!(p.power(a).dim(), p.dim());
    }

    #[test]
    fn power_by_order_is_trivial(p in profile(), k in 1u64..5) {
        let o = p.order();
        prop_assert_eq!(p.power(o * k).orbits().keys().copied().collect::<Vec<_>>(), vec![1]);
        prop_assert_eq!(p.trace_power(o), 22);
    }

    #[test]
    fn trace_of_first_power_is_orbit_sum(p in profile()) {
        let direct: i64 = p.orbits().iter().map(|(&d, &m)| m as i64 * k3orders::cyclotomic_core::moebius(d)).sum();
        prop_assert_eq!(p.trace_power(1), direct);
    }

    #[test]
    fn symplectic_power_closure(m in 1u64..=8, k in 1u64..50) {
        let s = symplectic_profile(m).unwrap().profile;
        let reduced = symplectic_profile(m / gcd(m, k)).unwrap().profile;
        prop_assert_eq!(s.power(k), reduced);
    }

    #[test]
    fn preimages_map_to_target(m in 1u64..=8, n in 1u64..=12) {
        let s = symplectic_profile(m).unwrap().profile;
        for p in power_preimages(&orbit_universe(m * n), n, &s) {
            prop_assert_eq!(p.power(n), s.clone());
        }
    }
}

#[test]
fn preimages_are_complete_for_small_orders() {
    for big in [6u64, 8, 10, 12] {
        let u = orbit_universe(big);
        let all = profiles_of_dim(&u, 22);
        for n in [2u64, 3, 4, 6] {
            for m in (1..=8).filter(|m| big % m == 0) {
                let s = symplectic_profile(m).unwrap().profile;
                let want: Vec<_> = all.iter().filter(|p| p.power(n) == s).cloned().collect();
                assert_eq!(power_preimages(&u, n, &s), want, "big {big}, n {n}, m {m}");
            }
        }
    }
}

#[test]
fn symplectic_spectra_have_the_right_order() {
    for m in 1..=8u64 {
        let s = symplectic_profile(m).unwrap().profile;
        assert_eq!(s.order(), m);
        assert_eq!(s.dim(), 22);
        assert!(s.orbits().keys().all(|&d| euler_phi(d) <= 21));
    }
    assert!(symplectic_profile(9).is_err());
}
