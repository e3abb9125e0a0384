//! Eigenvalue profiles: multisets of full Galois orbits of roots of unity.
//!
//! A profile never stores complex numbers. Orbit `d` stands for all
//! `φ(d)` primitive `d`-th roots of unity, and `m_d` counts how many times the
//! whole orbit occurs.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cyclotomic_core::{euler_phi, gcd, lcm, ramanujan_sum};

/// Dimension of the second cohomology of a K3 surface.
pub const K3_H2_DIM: u64 = 22;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpectrumError {
    #[error("dimension mismatch: orbits sum to {actual}, expected {expected}")]
    DimensionMismatch { actual: u64, expected: u64 },
    #[error("orbit entry ({d}, {m}) is not allowed: labels and multiplicities must be positive")]
    InvalidEntry { d: u64, m: u64 },
    #[error("no symplectic spectrum for order {0}: symplectic orders are at most 8")]
    UnsupportedOrder(u64),
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawProfile")]
pub struct EigenProfile {
    orbits: BTreeMap<u64, u64>,
    dim: u64,
}

#[derive(Deserialize)]
struct RawProfile {
    orbits: BTreeMap<u64, u64>,
    dim: u64,
}

impl TryFrom<RawProfile> for EigenProfile {
    type Error = SpectrumError;

    fn try_from(raw: RawProfile) -> Result<Self, Self::Error> {
        let entries: Vec<(u64, u64)> = raw.orbits.into_iter().collect();
        EigenProfile::new(&entries, raw.dim)
    }
}

impl EigenProfile {
    /// Builds a validated profile. Repeated labels are merged.
    pub fn new(entries: &[(u64, u64)], dim: u64) -> Result<Self, SpectrumError> {
        let mut orbits = BTreeMap::new();
        for &(d, m) in entries {
            if d == 0 || m == 0 {
                return Err(SpectrumError::InvalidEntry { d, m });
            }
            *orbits.entry(d).or_insert(0) += m;
        }
        let actual = degree_of(&orbits);
        if actual != dim {
            return Err(SpectrumError::DimensionMismatch { actual, expected: dim });
        }
        Ok(EigenProfile { orbits, dim })
    }

    /// Builds a profile on `H^2` of a K3 surface.
    pub fn k3(entries: &[(u64, u64)]) -> Result<Self, SpectrumError> {
        Self::new(entries, K3_H2_DIM)
    }

    pub(crate) fn from_map(orbits: BTreeMap<u64, u64>) -> Self {
        let dim = degree_of(&orbits);
        EigenProfile { orbits, dim }
    }

    pub fn dim(&self) -> u64 {
        self.dim
    }

    pub fn orbits(&self) -> &BTreeMap<u64, u64> {
        &self.orbits
    }

    /// Multiplicity of orbit `d`, zero when absent.
    pub fn mult(&self, d: u64) -> u64 {
        self.orbits.get(&d).copied().unwrap_or(0)
    }

    pub fn labels(&self) -> impl Iterator<Item = u64> + '_ {
        self.orbits.keys().copied()
    }

    /// Profile of the `k`-th power.
    pub fn power(&self, k: u64) -> EigenProfile {
        assert!(k >= 1, "power expects k >= 1");
        let mut out = BTreeMap::new();
        for (&d, &m) in &self.orbits {
            let d2 = d / gcd(d, k);
            *out.entry(d2).or_insert(0) += m * euler_phi(d) / euler_phi(d2);
        }
        EigenProfile {
            orbits: out,
            dim: self.dim,
        }
    }

    /// Exact trace of the `k`-th power on the represented space.
    pub fn trace_power(&self, k: u64) -> i64 {
        self.orbits.iter().map(|(&d, &m)| m as i64 * ramanujan_sum(d, k)).sum()
    }

    /// Full Lefschetz number of `g^k` on a K3 surface: `H^0` and `H^4` add 2.
    pub fn lefschetz(&self, k: u64) -> i64 {
        debug_assert_eq!(self.dim, K3_H2_DIM);
        2 + self.trace_power(k)
    }

    /// Order of the action: lcm of the orbit labels.
    pub fn order(&self) -> u64 {
        self.orbits.keys().fold(1, |acc, &d| lcm(acc, d))
    }

    /// Bracket notation, e.g. `[1.14, -1.8]` or `[1.2, (z11:10).2]`.
    pub fn format_paper(&self) -> String {
        let parts: Vec<String> = self
            .orbits
            .iter()
            .map(|(&d, &m)| {
                let base = match d {
                    1 => "1".to_string(),
                    2 => "-1".to_string(),
                    _ => format!("z{}:{}", d, euler_phi(d)),
                };
                match (d, m) {
                    (_, 1) => base,
                    (1 | 2, _) => format!("{base}.{m}"),
                    _ => format!("({base}).{m}"),
                }
            })
            .collect();
        format!("[{}]", parts.join(", "))
    }
}

impl fmt::Display for EigenProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_paper())
    }
}

fn degree_of(orbits: &BTreeMap<u64, u64>) -> u64 {
    orbits.iter().map(|(&d, &m)| m * euler_phi(d)).sum()
}

/// Spectrum of a tame symplectic automorphism of order `m`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SymplecticSpectrum {
    pub m: u64,
    pub profile: EigenProfile,
}

pub fn symplectic_profile(m: u64) -> Result<SymplecticSpectrum, SpectrumError> {
    let entries: &[(u64, u64)] = match m {
        1 => &[(1, 22)],
        2 => &[(1, 14), (2, 8)],
        3 => &[(1, 10), (3, 6)],
        4 => &[(1, 8), (4, 4), (2, 6)],
        5 => &[(1, 6), (5, 4)],
        6 => &[(1, 6), (3, 4), (6, 2), (2, 4)],
        7 => &[(1, 4), (7, 3)],
        8 => &[(1, 4), (8, 2), (4, 3), (2, 4)],
        _ => return Err(SpectrumError::UnsupportedOrder(m)),
    };
    let profile = EigenProfile::k3(entries).expect("symplectic table is consistent");
    Ok(SymplecticSpectrum { m, profile })
}

/// Number of fixed points of a tame symplectic automorphism of order `m`.
pub fn symplectic_fixed_points(m: u64) -> Option<i64> {
    match m {
        2 => Some(8),
        3 => Some(6),
        4 => Some(4),
        5 => Some(4),
        6 => Some(2),
        7 => Some(3),
        8 => Some(2),
        _ => None,
    }
}

/// All profiles `P` of dimension `target.dim()` over `universe` with
/// `P.power(k) == target`.
///
/// Each orbit `d'` of the target is filled independently from the source
/// orbits `d` with `d / gcd(d, k) = d'`, each contributing `φ(d)/φ(d')`
/// copies of `d'`. The result is sorted.
pub fn power_preimages(universe: &[u64], k: u64, target: &EigenProfile) -> Vec<EigenProfile> {
    let mut per_target: Vec<Vec<Vec<(u64, u64)>>> = Vec::new();
    for (&t, &need) in target.orbits() {
        let sources: Vec<(u64, u64)> = universe
            .iter()
            .filter(|&&d| d / gcd(d, k) == t)
            .map(|&d| (d, euler_phi(d) / euler_phi(t)))
            .collect();
        let mut fills = Vec::new();
        knapsack(&sources, need, &mut Vec::new(), &mut fills);
        if fills.is_empty() {
            return Vec::new();
        }
        per_target.push(fills);
    }
    let mut out = Vec::new();
    combine(&per_target, 0, &mut BTreeMap::new(), target.dim(), &mut out);
    out.sort();
    out
}

fn knapsack(sources: &[(u64, u64)], need: u64, acc: &mut Vec<(u64, u64)>, out: &mut Vec<Vec<(u64, u64)>>) {
    if need == 0 {
        out.push(acc.clone());
        return;
    }
    let Some((&(d, w), rest)) = sources.split_first() else {
        return;
    };
    for c in (0..=need / w).rev() {
        if c > 0 {
            acc.push((d, c));
        }
        knapsack(rest, need - c * w, acc, out);
        if c > 0 {
            acc.pop();
        }
    }
}

fn combine(
    parts: &[Vec<Vec<(u64, u64)>>],
    i: usize,
    acc: &mut BTreeMap<u64, u64>,
    dim: u64,
    out: &mut Vec<EigenProfile>,
) {
    if i == parts.len() {
        out.push(EigenProfile {
            orbits: acc.clone(),
            dim,
        });
        return;
    }
    for fill in &parts[i] {
        for &(d, c) in fill {
            acc.insert(d, c);
        }
        combine(parts, i + 1, acc, dim, out);
        for &(d, _) in fill {
            acc.remove(&d);
        }
    }
}

/// All profiles of dimension `dim` whose labels lie in `universe`.
pub fn profiles_of_dim(universe: &[u64], dim: u64) -> Vec<EigenProfile> {
    let weighted: Vec<(u64, u64)> = universe.iter().map(|&d| (d, euler_phi(d))).collect();
    let mut fills = Vec::new();
    knapsack(&weighted, dim, &mut Vec::new(), &mut fills);
    let mut out: Vec<EigenProfile> = fills
        .into_iter()
        .map(|f| EigenProfile {
            orbits: f.into_iter().collect(),
            dim,
        })
        .collect();
    out.sort();
    out
}
