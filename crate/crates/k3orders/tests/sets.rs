mod common;

use std::collections::BTreeSet;

use k3orders::tame_engine::sets::{b_set, beta, group_bound, ord_set, table1, tv_set};

fn ord_c() -> BTreeSet<u64> {
    common::phi_at_most_20().into_iter().collect()
}

fn minus(base: &BTreeSet<u64>, drop: &[u64]) -> BTreeSet<u64> {
    base.iter().copied().filter(|n| !drop.contains(n)).collect()
}

#[test]
fn table_one_cells() {
    let want: [(u64, &[u64]); 10] = [
        (20, &[66, 50, 44, 33, 25]),
        (18, &[54, 38, 27, 19]),
        (16, &[60, 48, 40, 34, 32, 17]),
        (12, &[42, 36, 28, 26, 21, 13]),
        (10, &[22, 11]),
        (8, &[30, 24, 20, 16, 15]),
        (6, &[18, 14, 9, 7]),
        (4, &[12, 10, 8, 5]),
        (2, &[6, 4, 3]),
        (1, &[2, 1]),
    ];
    let t = table1();
    for (phi, ns) in want {
        assert_eq!(t[&phi], ns, "phi = {phi}");
    }
    assert_eq!(t[&21], Vec::<u64>::new());
    assert_eq!(t.values().filter(|v| !v.is_empty()).count(), 10);
}

#[test]
fn ord_sets_by_characteristic() {
    let c = ord_c();
    assert_eq!(ord_set(0).unwrap().orders, c);
    assert_eq!(ord_set(7).unwrap().orders, c);
    for p in common::primes(20, 97) {
        assert_eq!(ord_set(p).unwrap().orders, c, "p = {p}");
    }
    for p in [13, 17, 19] {
        assert_eq!(ord_set(p).unwrap().orders, minus(&c, &[p, 2 * p]), "p = {p}");
    }
    assert_eq!(ord_set(11).unwrap().orders, minus(&c, &[44]));
    assert_eq!(ord_set(5).unwrap().orders, minus(&c, &[25, 50, 60]));
    assert_eq!(ord_set(2).unwrap().label, "tame orders");
    assert!(ord_set(9).is_err());
}

#[test]
fn transcendental_maxima() {
    for p in [5, 7, 13, 97] {
        assert_eq!(tv_set(p).last(), Some(&66));
    }
    assert_eq!(tv_set(11).last(), Some(&54));
    assert_eq!(tv_set(3).last(), Some(&50));
    assert_eq!(tv_set(2).last(), Some(&33));
    assert!(!tv_set(7).contains(&60));
}

#[test]
fn betas() {
    for p in common::primes(2, 53) {
        assert_eq!(beta(p), p + 1, "p = {p}");
    }
    assert_eq!(beta(59), 30);
    assert_eq!(beta(61), 2);
    assert_eq!(beta(73), 2);
    assert_eq!(beta(67), 34);
    assert_eq!(beta(71), 36);
    assert!(b_set(59).is_subset(&tv_set(59)));
}

#[test]
fn group_bounds() {
    let g = group_bound(11).unwrap();
    assert_eq!(g.beta, 12);
    assert_eq!(g.branches.len(), 1);
    assert_eq!(g.branches[0].group_order, 443_520);
    assert_eq!(g.branches[0].value, 5_322_240);
    let g = group_bound(13).unwrap();
    assert_eq!(g.branches[0].value, 14 * 20_160);
    assert_eq!(g.branches[1].value, 66 * 960);
    assert!(group_bound(7).is_err());
    assert!(group_bound(12).is_err());
}
