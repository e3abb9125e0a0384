//! Elementary number theory on small positive integers.
//!
//! Everything here works on `u64`/`i64` and uses trial division. Inputs stay
//! far below 10^4 in practice.

use num_integer::Integer;

/// Prime factorization as `(prime, exponent)` pairs, primes ascending.
pub fn factorize(n: u64) -> Vec<(u64, u32)> {
    assert!(n >= 1, "factorize expects n >= 1");
    let mut out = Vec::new();
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            let mut e = 0;
            while m.is_multiple_of(p) {
                m /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if m > 1 {
        out.push((m, 1));
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n) == [(n, 1)]
}

/// Euler's totient.
pub fn euler_phi(n: u64) -> u64 {
    factorize(n)
        .into_iter()
        .fold(1, |acc, (p, e)| acc * (p - 1) * p.pow(e - 1))
}

/// Möbius function.
pub fn moebius(n: u64) -> i64 {
    let f = factorize(n);
    if f.iter().any(|&(_, e)| e > 1) {
        0
    } else if f.len().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// All positive divisors, ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    assert!(n >= 1, "divisors expects n >= 1");
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a.lcm(&b)
}

/// Sum of the k-th powers of the primitive d-th roots of unity.
pub fn ramanujan_sum(d: u64, k: u64) -> i64 {
    assert!(d >= 1 && k >= 1, "ramanujan_sum expects d, k >= 1");
    let g = gcd(d, k);
    let q = d / g;
    moebius(q) * (euler_phi(d) / euler_phi(q)) as i64
}

/// Coefficients of the n-th cyclotomic polynomial, constant term first.
pub fn cyclotomic_poly(n: u64) -> Vec<i64> {
    assert!(n >= 1, "cyclotomic_poly expects n >= 1");
    // x^n - 1
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in divisors(n) {
        if d == n {
            break;
        }
        let (q, r) = poly_divmod(&num, &cyclotomic_poly(d));
        debug_assert!(r.iter().all(|&c| c == 0));
        num = q;
    }
    num
}

/// Division by a monic integer polynomial. Coefficients constant term first.
pub fn poly_divmod(num: &[i64], den: &[i64]) -> (Vec<i64>, Vec<i64>) {
    let dd = den.len() - 1;
    assert_eq!(den[dd], 1, "divisor must be monic");
    let mut rem = num.to_vec();
    if num.len() <= dd {
        return (vec![0], rem);
    }
    let mut quo = vec![0i64; num.len() - dd];
    for i in (0..quo.len()).rev() {
        let c = rem[i + dd];
        quo[i] = c;
        if c != 0 {
            for (j, &b) in den.iter().enumerate() {
                rem[i + j] -= c * b;
            }
        }
    }
    rem.truncate(dd.max(1));
    (quo, rem)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn phi_values() {
        assert_eq!(euler_phi(66), 20);
        assert_eq!(euler_phi(1), 1);
        let brute = (1..45u64).filter(|&k| gcd(k, 45) == 1).count() as u64;
        assert_eq!(euler_phi(45), brute);
        assert_eq!(euler_phi(45), 24);
    }

    #[test]
    fn moebius_values() {
        assert_eq!(moebius(6), 1);
        assert_eq!(moebius(4), 0);
        assert_eq!(moebius(1), 1);
        assert_eq!(moebius(30), -1);
    }

    #[test]
    fn divisor_lists() {
        assert_eq!(divisors(14), vec![1, 2, 7, 14]);
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(divisors(60), vec![1, 2, 3, 4, 5, 6, 10, 12, 15, 20, 30, 60]);
        assert_eq!(divisors(49), vec![1, 7, 49]);
    }

    #[test]
    fn ramanujan_values() {
        assert_eq!(ramanujan_sum(11, 1), -1);
        assert_eq!(ramanujan_sum(1, 7), 1);
        assert_eq!(ramanujan_sum(44, 26), 2);
        assert_eq!(ramanujan_sum(12, 12), 4);
    }

    #[test]
    fn cyclotomic_small() {
        assert_eq!(cyclotomic_poly(1), vec![-1, 1]);
        assert_eq!(cyclotomic_poly(2), vec![1, 1]);
        assert_eq!(cyclotomic_poly(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(cyclotomic_poly(105).len() as u64, euler_phi(105) + 1);
        // the first cyclotomic polynomial with a coefficient outside {-1,0,1}
        assert!(cyclotomic_poly(105).contains(&-2));
    }

    #[test]
    fn factorize_and_primes() {
        assert_eq!(factorize(360), vec![(2, 3), (3, 2), (5, 1)]);
        assert_eq!(factorize(1), vec![]);
        assert!(is_prime(97));
        assert!(!is_prime(91));
        assert!(!is_prime(1));
    }
}
