use std::f64::consts::TAU;

use k3orders::cyclotomic_core::{cyclotomic_poly, divisors, euler_phi, gcd, moebius, ramanujan_sum};
use proptest::prelude::*;

const TOL: f64 = 1e-6;

/// Ramanujan sum computed by summing cosines of the primitive roots.
fn float_ramanujan(d: u64, k: u64) -> f64 {
    (1..=d)
        .filter(|&j| gcd(j, d) == 1)
        .map(|j| (TAU * (j * k % d) as f64 / d as f64).cos())
        .sum()
}

/// `Φ_n(x)` as the product of `(x - ζ)` over primitive roots, at a real point.
fn float_cyclotomic(n: u64, x: f64) -> f64 {
    let mut re = 1.0;
    let mut im = 0.0;
    for j in (1..=n).filter(|&j| gcd(j, n) == 1) {
        let a = TAU * j as f64 / n as f64;
        let (zr, zi) = (x - a.cos(), -a.sin());
        (re, im) = (re * zr - im * zi, re * zi + im * zr);
    }
    assert!(im.abs() < 1e-6 * re.abs().max(1.0));
    re
}

fn eval(coeffs: &[i64], x: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c as f64)
}

proptest! {
    #[test]
    fn phi_divisor_sum(n in 1u64..5000) {
        prop_assert_eq!(divisors(n).into_iter().map(euler_phi).sum::<u64>(), n);
    }

    #[test]
    fn moebius_divisor_sum(n in 1u64..5000) {
        let s: i64 = divisors(n).into_iter().map(moebius).sum();
        prop_assert_eq!(s, i64::from(n == 1));
    }

    #[test]
    fn ramanujan_indicator(n in 1u64..400, k in 1u64..400) {
        let s: i64 = divisors(n).into_iter().map(|d| ramanujan_sum(d, k)).sum();
        prop_assert_eq!(s, if k % n == 0 { n as i64 } else { 0 });
    }

    #[test]
    fn ramanujan_float_oracle(d in 1u64..300, k in 1u64..300) {
        let exact = ramanujan_sum(d, k) as f64;
        prop_assert!((exact - float_ramanujan(d, k)).abs() < TOL, "c_{}({}) = {}", d, k, exact);
    }

    #[test]
    fn ramanujan_is_periodic_and_even(d in 1u64..200, k in 1u64..200) {
        prop_assert_eq!(ramanujan_sum(d, k), ramanujan_sum(d, k + d));
        prop_assert_eq!(ramanujan_sum(d, d), euler_phi(d) as i64);
    }

    #[test]
    fn cyclotomic_float_oracle(n in 1u64..40, x in -1.3f64..1.3) {
        let exact = eval(&cyclotomic_poly(n), x);
        let float = float_cyclotomic(n, x);
        prop_assert!((exact - float).abs() < TOL * exact.abs().max(1.0), "n = {}: {} vs {}", n, exact, float);
    }

    #[test]
    fn cyclotomic_degree_and_product(n in 1u64..60) {
        let c = cyclotomic_poly(n);
        prop_assert_eq!(c.len() as u64 - 1, euler_phi(n));
        prop_assert_eq!(*c.last().unwrap(), 1);
        let mut prod = vec![1i64];
        for d in divisors(n) {
            let f = cyclotomic_poly(d);
            let mut next = vec![0i64; prod.len() + f.len() - 1];
            for (i, a) in prod.iter().enumerate() {
                for (j, b) in f.iter().enumerate() {
                    next[i + j] += a * b;
                }
            }
            prod = next;
        }
        let mut want = vec![0i64; n as usize + 1];
        want[0] = -1;
        want[n as usize] = 1;
        prop_assert_eq!(prod, want);
    }
}
