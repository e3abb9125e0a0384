mod common;

use k3orders::tame_engine::{
    candidate_universe, classify_order, classify_shape, OrderShape, Rule, Verdict, ORDER_SIXTY_NOTE,
};
use proptest::prelude::*;

#[test]
fn excluded_shapes_are_infeasible() {
    let shapes = common::excluded_shapes();
    assert!(shapes.len() > 100);
    for s in shapes {
        let r = classify_shape(s, 0).unwrap();
        assert_eq!(r.verdict, Verdict::Infeasible, "{s:?} should be excluded");
        assert!(!r.certificates.is_empty());
    }
}

#[test]
fn realized_shapes_are_feasible() {
    for s in common::realized_shapes() {
        let r = classify_shape(s, 0).unwrap();
        assert!(r.is_feasible(), "{s:?}");
        assert!(!r.witnesses.is_empty());
    }
}

#[test]
fn complex_orders_are_phi_at_most_20() {
    let feasible: Vec<u64> = candidate_universe()
        .into_iter()
        .filter(|&n| classify_order(n, 0).unwrap().is_feasible())
        .collect();
    assert_eq!(feasible, common::phi_at_most_20());
    assert_eq!(feasible.last(), Some(&66));
}

#[test]
fn shape_2_14_fails_trace_bound_or_orbit_count() {
    let r = classify_shape(OrderShape::new(2, 14), 0).unwrap();
    assert!(!r.is_feasible());
    let rules: Vec<Rule> = r.certificates.iter().map(|c| c.rule).collect();
    assert!(
        rules
            .iter()
            .all(|&x| x == Rule::R3TraceBound || x == Rule::R5OrbitConsistency),
        "{rules:?}"
    );
    assert!(rules.contains(&Rule::R5OrbitConsistency));
}

#[test]
fn order_sixty_is_annotated() {
    let r = classify_shape(OrderShape::new(1, 60), 0).unwrap();
    assert!(r.is_feasible());
    assert_eq!(r.annotations, vec![ORDER_SIXTY_NOTE.to_string()]);
}

#[test]
fn wild_order_rejected() {
    assert!(classify_order(22, 11).is_err());
    assert!(classify_order(22, 13).is_ok());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn certificates_replay(m in 1u64..=8, n_idx in 0usize..40) {
        let ns = common::phi_at_most_20();
        let n = ns[n_idx % ns.len()];
        let r = classify_shape(OrderShape::new(m, n), 0).unwrap();
        for c in &r.certificates {
            prop_assert!(c.replay(), "certificate for ({m}, {n}) does not replay: {c:?}");
        }
        prop_assert_eq!(r.is_feasible(), !r.witnesses.is_empty());
    }

    #[test]
    fn classification_is_deterministic(n_idx in 0usize..200) {
        let u = candidate_universe();
        let n = u[n_idx % u.len()];
        let a = serde_json::to_string(&classify_order(n, 0).unwrap()).unwrap();
        let b = serde_json::to_string(&classify_order(n, 0).unwrap()).unwrap();
        prop_assert_eq!(a, b);
    }
}
