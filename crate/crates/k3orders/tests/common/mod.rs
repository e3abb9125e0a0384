#![allow(dead_code)]

use k3orders::cyclotomic_core::euler_phi;
use k3orders::tame_engine::OrderShape;

/// Symplectic orders `m` still allowed with a given `n`; `None` means no
/// exclusion is claimed beyond the structural bound `m <= 8`.
fn allowed(n: u64) -> Option<&'static [u64]> {
    let phi = euler_phi(n);
    if phi > 13 {
        return Some(&[1]);
    }
    Some(match n {
        42 | 36 | 28 | 26 => &[1],
        21 | 13 => &[1, 2],
        22 => &[1],
        11 => &[1, 2],
        30 | 24 | 20 | 16 => &[1],
        15 => &[1, 2],
        18 => &[1],
        9 => &[1, 2],
        14 => &[1, 3],
        7 => &[1, 2, 3],
        12 => &[1, 2, 3, 5],
        10 => &[1, 2, 3],
        8 => &[1, 2, 3, 5],
        5 => &[1, 2, 3, 4],
        6 => &[1, 2, 3, 4, 5, 7],
        4 => &[1, 2, 3, 5, 7],
        3 => &[1, 2, 3, 4, 5, 7, 8],
        2 => &[1, 2, 3, 4, 5, 6, 7],
        _ => return None,
    })
}

/// Every shape `(m, n)` with `m <= 8` and `φ(n) <= 20` that the case
/// analysis of the tame orders excludes.
pub fn excluded_shapes() -> Vec<OrderShape> {
    let mut out = Vec::new();
    for n in 1..=66u64 {
        if euler_phi(n) > 20 {
            continue;
        }
        let Some(ok) = allowed(n) else { continue };
        for m in 1..=8 {
            if !ok.contains(&m) {
                out.push(OrderShape::new(m, n));
            }
        }
    }
    out
}

pub const REALIZED_PURELY_NON_SYMPLECTIC: [u64; 14] = [66, 50, 44, 54, 38, 48, 40, 34, 32, 42, 36, 28, 26, 30];

pub fn realized_shapes() -> Vec<OrderShape> {
    let mut v: Vec<OrderShape> = REALIZED_PURELY_NON_SYMPLECTIC
        .iter()
        .map(|&n| OrderShape::new(1, n))
        .collect();
    v.push(OrderShape::new(5, 12));
    v
}

/// Orders `N` with `φ(N) <= 20`.
pub fn phi_at_most_20() -> Vec<u64> {
    (1..=200).filter(|&n| euler_phi(n) <= 20).collect()
}

pub fn primes(lo: u64, hi: u64) -> Vec<u64> {
    (lo..=hi).filter(|&p| k3orders::cyclotomic_core::is_prime(p)).collect()
}
