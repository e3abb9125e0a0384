//! Residues of integer polynomials modulo `Φ_N` and optionally a prime.

use std::fmt;

use serde::{Serialize, Serializer};

use super::ModelError;
use crate::cyclotomic_core::{cyclotomic_poly, euler_phi, is_prime};

/// `Z[ζ]/(Φ_N)` in characteristic 0, `F_p[ζ]/(Φ_N)` otherwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientRing {
    order: u64,
    characteristic: u64,
    modulus: Vec<i64>,
}

/// Coefficients on `1, ζ, ..., ζ^(φ(N)-1)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RingElem(Vec<i64>);

impl CoefficientRing {
    pub fn new(order: u64, characteristic: u64) -> Result<Self, ModelError> {
        if order == 0 {
            return Err(ModelError::BadRing("root of unity order must be positive".into()));
        }
        if characteristic != 0 && !is_prime(characteristic) {
            return Err(ModelError::BadRing(format!("{characteristic} is not a prime")));
        }
        Ok(Self {
            order,
            characteristic,
            modulus: cyclotomic_poly(order),
        })
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn characteristic(&self) -> u64 {
        self.characteristic
    }

    pub fn degree(&self) -> usize {
        euler_phi(self.order) as usize
    }

    /// Same `Φ_N`, coefficients reduced mod `p`.
    pub fn reduce_to(&self, p: u64) -> Result<Self, ModelError> {
        if self.characteristic != 0 && self.characteristic != p {
            return Err(ModelError::BadRing(format!(
                "cannot reduce characteristic {} to {p}",
                self.characteristic
            )));
        }
        Self::new(self.order, p)
    }

    fn normalize(&self, mut c: Vec<i64>) -> RingElem {
        let d = self.degree();
        for i in (d..c.len()).rev() {
            let lead = c[i];
            if lead != 0 {
                for (j, &m) in self.modulus.iter().enumerate() {
                    c[i - d + j] -= lead * m;
                }
            }
        }
        c.resize(d, 0);
        if self.characteristic != 0 {
            let p = self.characteristic as i64;
            for x in &mut c {
                *x = x.rem_euclid(p);
            }
        }
        RingElem(c)
    }

    pub fn zero(&self) -> RingElem {
        RingElem(vec![0; self.degree()])
    }

    pub fn int(&self, n: i64) -> RingElem {
        self.normalize(vec![n])
    }

    pub fn one(&self) -> RingElem {
        self.int(1)
    }

    /// `ζ_N^k`.
    pub fn zeta_pow(&self, k: u64) -> RingElem {
        let mut c = vec![0; (k % self.order) as usize + 1];
        c[(k % self.order) as usize] = 1;
        self.normalize(c)
    }

    pub fn add(&self, a: &RingElem, b: &RingElem) -> RingElem {
        self.normalize(a.0.iter().zip(&b.0).map(|(x, y)| x + y).collect())
    }

    pub fn neg(&self, a: &RingElem) -> RingElem {
        self.normalize(a.0.iter().map(|x| -x).collect())
    }

    pub fn sub(&self, a: &RingElem, b: &RingElem) -> RingElem {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &RingElem, b: &RingElem) -> RingElem {
        let mut c = vec![0i64; a.0.len() + b.0.len()];
        for (i, &x) in a.0.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.0.iter().enumerate() {
                c[i + j] += x * y;
            }
        }
        self.normalize(c)
    }

    pub fn pow(&self, a: &RingElem, mut k: u64) -> RingElem {
        let mut base = a.clone();
        let mut acc = self.one();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            k >>= 1;
        }
        acc
    }

    /// Inverse of an integer constant, when it is a unit.
    pub fn constant_inverse(&self, a: &RingElem) -> Option<RingElem> {
        let c = a.as_integer()?;
        match self.characteristic {
            0 => (c == 1 || c == -1).then(|| self.int(c)),
            p => {
                let c = c.rem_euclid(p as i64);
                (c != 0).then(|| self.int(modpow(c, p as i64 - 2, p as i64)))
            }
        }
    }

    /// Smallest `k >= 1` with `a^k = 1`, searching up to `bound`.
    pub fn multiplicative_order(&self, a: &RingElem, bound: u64) -> Option<u64> {
        let one = self.one();
        let mut acc = a.clone();
        for k in 1..=bound {
            if acc == one {
                return Some(k);
            }
            acc = self.mul(&acc, a);
        }
        None
    }

    /// Exponent `k` with `a = ζ^k`, if any.
    pub fn zeta_log(&self, a: &RingElem) -> Option<u64> {
        (0..self.order).find(|&k| self.zeta_pow(k) == *a)
    }

    /// Coefficient-wise reduction into `target`, which must share `N`.
    pub fn reduce_elem(&self, a: &RingElem, target: &CoefficientRing) -> RingElem {
        debug_assert_eq!(self.order, target.order);
        target.normalize(a.0.clone())
    }

    /// Human-readable form, as a power of `ζ` when it is one.
    pub fn show(&self, a: &RingElem) -> String {
        if let Some(c) = a.as_integer() {
            return c.to_string();
        }
        match self.zeta_log(a) {
            Some(k) => format!("zeta{}^{k}", self.order),
            None => a.to_string(),
        }
    }
}

fn modpow(mut b: i64, mut e: i64, m: i64) -> i64 {
    let mut acc = 1i64;
    b = b.rem_euclid(m);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

impl RingElem {
    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// The integer value when only the constant coefficient is non-zero.
    pub fn as_integer(&self) -> Option<i64> {
        self.0[1..].iter().all(|&c| c == 0).then_some(self.0[0])
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.0
    }
}

impl fmt::Display for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| match i {
                0 => c.to_string(),
                1 => format!("{c}*z"),
                _ => format!("{c}*z^{i}"),
            })
            .collect();
        if terms.is_empty() {
            f.write_str("0")
        } else {
            write!(f, "({})", terms.join(" + "))
        }
    }
}

impl Serialize for RingElem {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zeta_has_exact_order() {
        for (n, p) in [(66, 0), (33, 2), (3, 11), (8, 5), (19, 2), (1, 7)] {
            let r = CoefficientRing::new(n, p).unwrap();
            assert_eq!(r.multiplicative_order(&r.zeta_pow(1), 200), Some(n), "N={n} p={p}");
        }
    }

    #[test]
    fn inverses_and_logs() {
        let r = CoefficientRing::new(4, 7).unwrap();
        assert_eq!(r.mul(&r.constant_inverse(&r.int(3)).unwrap(), &r.int(3)), r.one());
        assert_eq!(r.zeta_log(&r.int(-1)), Some(2));
        let z = CoefficientRing::new(66, 0).unwrap();
        assert_eq!(z.constant_inverse(&z.int(2)), None);
        assert_eq!(z.show(&z.zeta_pow(120)), "zeta66^54");
    }
}
