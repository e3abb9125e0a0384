//! Order sets per characteristic, transcendental values, and group-order bounds.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::OnceLock;

use serde::Serialize;
use thiserror::Error;

use super::{candidate_universe, classify_order, table_one_range};
use crate::cyclotomic_core::{divisors, euler_phi, is_prime};
use crate::wild_replay::{classify_wild, WildStatus};

/// Order of the Mathieu group M20.
pub const M20_ORDER: u64 = 960;
/// Order of the Mathieu group M21.
pub const M21_ORDER: u64 = 20160;
/// Order of the Mathieu group M22.
pub const M22_ORDER: u64 = 443520;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SetsError {
    #[error("{0} is not 0 or a prime")]
    NotACharacteristic(u64),
    #[error("no bound is available in characteristic {0}")]
    UnsupportedCharacteristic(u64),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrdSet {
    pub characteristic: u64,
    /// `"orders"`, or `"tame orders"` where wild orders are not classified.
    pub label: &'static str,
    pub orders: BTreeSet<u64>,
}

fn complex_orders() -> &'static BTreeSet<u64> {
    static SET: OnceLock<BTreeSet<u64>> = OnceLock::new();
    SET.get_or_init(|| {
        candidate_universe()
            .into_iter()
            .filter(|&n| classify_order(n, 0).expect("characteristic 0").is_feasible())
            .collect()
    })
}

pub fn ord_set(characteristic: u64) -> Result<OrdSet, SetsError> {
    let p = characteristic;
    if p != 0 && !is_prime(p) {
        return Err(SetsError::NotACharacteristic(p));
    }
    let all = complex_orders();
    if p == 0 {
        return Ok(OrdSet {
            characteristic: 0,
            label: "orders",
            orders: all.clone(),
        });
    }
    let mut orders: BTreeSet<u64> = all.iter().copied().filter(|n| n % p != 0).collect();
    let label = match p {
        2 | 3 => "tame orders",
        5 | 7 | 11 => {
            let wild = classify_wild(p).expect("wild characteristic");
            orders.extend(
                wild.entries
                    .iter()
                    .filter(|(_, c)| matches!(c.status, WildStatus::Realized { .. }))
                    .map(|(&n, _)| p * n),
            );
            "orders"
        }
        _ => "orders",
    };
    Ok(OrdSet {
        characteristic: p,
        label,
        orders,
    })
}

/// Transcendental values: `p ∤ N`, `N != 60`, `φ(N) <= 20`.
pub fn tv_set(p: u64) -> BTreeSet<u64> {
    table_one_range()
        .into_iter()
        .filter(|&n| n % p != 0 && n != 60 && euler_phi(n) <= 20)
        .collect()
}

/// Divisors `N` of `p + 1` with `N != 60` and `φ(N) <= 20`.
pub fn b_set(p: u64) -> BTreeSet<u64> {
    divisors(p + 1)
        .into_iter()
        .filter(|&n| n != 60 && euler_phi(n) <= 20)
        .collect()
}

pub fn beta(p: u64) -> u64 {
    *b_set(p).iter().next_back().expect("1 always divides p + 1")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundBranch {
    pub condition: &'static str,
    pub factor: u64,
    pub group: &'static str,
    pub group_order: u64,
    pub value: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupBound {
    pub p: u64,
    pub beta: u64,
    pub branches: Vec<BoundBranch>,
}

pub fn group_bound(p: u64) -> Result<GroupBound, SetsError> {
    if !is_prime(p) {
        return Err(SetsError::NotACharacteristic(p));
    }
    let b = beta(p);
    let branches = match p {
        11 => vec![BoundBranch {
            condition: "all finite groups",
            factor: b,
            group: "M22",
            group_order: M22_ORDER,
            value: b * M22_ORDER,
        }],
        _ if p > 11 => vec![
            BoundBranch {
                condition: "symplectic subgroup exceptional",
                factor: b,
                group: "M21",
                group_order: M21_ORDER,
                value: b * M21_ORDER,
            },
            BoundBranch {
                condition: "otherwise",
                factor: 66,
                group: "M20",
                group_order: M20_ORDER,
                value: 66 * M20_ORDER,
            },
        ],
        _ => return Err(SetsError::UnsupportedCharacteristic(p)),
    };
    Ok(GroupBound { p, beta: b, branches })
}

/// All `n` with `φ(n) <= 21` grouped by `φ(n)`, largest `n` first.
/// The key 21 is always present and always empty.
pub fn table1() -> BTreeMap<u64, Vec<u64>> {
    let mut out: BTreeMap<u64, Vec<u64>> = BTreeMap::new();
    for n in table_one_range() {
        out.entry(euler_phi(n)).or_default().push(n);
    }
    for col in out.values_mut() {
        col.reverse();
    }
    let none = out.entry(21).or_default();
    assert!(none.is_empty(), "some n has φ(n) = 21");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn beta_values() {
        assert_eq!(beta(59), 30);
        assert_eq!(beta(61), 2);
        assert_eq!(beta(73), 2);
        assert_eq!(beta(67), 34);
        assert_eq!(beta(71), 36);
        for p in (2..=53).filter(|&p| is_prime(p)) {
            assert_eq!(beta(p), p + 1);
        }
    }

    #[test]
    fn tv_maxima() {
        assert_eq!(tv_set(11).last(), Some(&54));
        assert_eq!(tv_set(13).last(), Some(&66));
        assert_eq!(tv_set(3).last(), Some(&50));
        assert_eq!(tv_set(2).last(), Some(&33));
        assert!(!tv_set(7).contains(&60));
    }

    #[test]
    fn bounds() {
        let b = group_bound(11).unwrap();
        assert_eq!(b.branches[0].value, 5_322_240);
        let b = group_bound(13).unwrap();
        assert_eq!(b.branches[1].value, 63_360);
        let b = group_bound(67).unwrap();
        assert_eq!(b.branches[0].value, 34 * 20160);
        assert_eq!(group_bound(7), Err(SetsError::UnsupportedCharacteristic(7)));
    }

    #[test]
    fn table_columns() {
        let t = table1();
        assert_eq!(t[&20], vec![66, 50, 44, 33, 25]);
        assert_eq!(t[&1], vec![2, 1]);
        assert!(t[&21].is_empty());
    }
}
