//! Feasibility search over order shapes `N = m.n` for tame automorphisms.
//!
//! `m` is the order of the symplectic kernel, `n` the order of the action on
//! the 2-form. A shape is feasible when some eigenvalue profile survives
//! every rule; each eliminated profile carries a certificate that can be
//! replayed on its own.

pub mod sets;

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::cyclotomic_core::{divisors, euler_phi, lcm, moebius};
use crate::spectrum::{power_preimages, symplectic_profile, EigenProfile};

/// Largest order of a tame symplectic automorphism.
pub const MAX_SYMPLECTIC: u64 = 8;
/// Bound on `φ(d)` for any non-trivial orbit, since the ample class takes one slot.
pub const MAX_ORBIT_PHI: u64 = 21;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TameError {
    #[error("order {order} is divisible by the characteristic {characteristic}")]
    WildOrder { order: u64, characteristic: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct OrderShape {
    pub m: u64,
    pub n: u64,
}

impl OrderShape {
    pub fn new(m: u64, n: u64) -> Self {
        OrderShape { m, n }
    }

    pub fn order(&self) -> u64 {
        self.m * self.n
    }

    pub fn is_valid(&self) -> bool {
        self.m >= 1 && self.n >= 1 && self.m <= MAX_SYMPLECTIC && euler_phi(self.n) <= MAX_ORBIT_PHI
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Rule {
    #[serde(rename = "R1_structure")]
    R1Structure,
    #[serde(rename = "R2_symplectic_power")]
    R2SymplecticPower,
    #[serde(rename = "R3_trace_bound")]
    R3TraceBound,
    #[serde(rename = "R5_orbit_consistency")]
    R5OrbitConsistency,
    #[serde(rename = "EXHAUSTED")]
    Exhausted,
}

impl Rule {
    pub fn label(&self) -> &'static str {
        match self {
            Rule::R1Structure => "R1_structure",
            Rule::R2SymplecticPower => "R2_symplectic_power",
            Rule::R3TraceBound => "R3_trace_bound",
            Rule::R5OrbitConsistency => "R5_orbit_consistency",
            Rule::Exhausted => "EXHAUSTED",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Detail {
    /// The shape violates `m <= 8` or `φ(n) <= 21`.
    InvalidShape { reason: String },
    /// Preimages of `S_m` exist but none has an ample class, a `ζ_n` orbit and order `N`.
    NoStructuralCandidate { preimages: usize },
    /// The orbit `target` of `S_m` cannot be produced by any admissible orbit.
    NoPreimage { target: u64, needed: u64 },
    /// `e(g^i)` lies outside `[0, e(g^j)]` where `g^j` is a non-trivial symplectic power.
    TraceBound { i: u64, value: i64, j: u64, bound: i64 },
    /// Möbius inversion over `Fix(g^anchor)` gives orbit mass `value` for orbit size `s`.
    OrbitCount { anchor: u64, s: u64, value: i64 },
    /// No shape `m.n` of this order is admissible.
    NoShape,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub shape: OrderShape,
    pub profile: Option<EigenProfile>,
    pub rule: Rule,
    pub detail: Detail,
}

impl Certificate {
    /// Re-runs the cited rule and reports whether the failure reproduces.
    pub fn replay(&self) -> bool {
        let shape = self.shape;
        match (&self.detail, &self.profile) {
            (Detail::InvalidShape { .. }, None) => !shape.is_valid(),
            (Detail::NoShape, None) => enumerate_shapes(shape.order()).is_empty(),
            (Detail::NoPreimage { target, .. }, None) => {
                let Ok(s) = symplectic_profile(shape.m) else {
                    return false;
                };
                s.profile.mult(*target) > 0
                    && power_preimages(&orbit_universe(shape.order()), shape.n, &s.profile).is_empty()
            }
            (Detail::NoStructuralCandidate { .. }, None) => {
                let Ok(s) = symplectic_profile(shape.m) else {
                    return false;
                };
                let pre = power_preimages(&orbit_universe(shape.order()), shape.n, &s.profile);
                !pre.is_empty() && enumerate_profiles(shape).is_empty()
            }
            (Detail::TraceBound { i, value, j, bound }, Some(p)) => {
                let n = shape.n;
                let big = shape.order();
                lcm(*i, n) == *j
                    && j % big != 0
                    && p.lefschetz(*i) == *value
                    && p.lefschetz(*j) == *bound
                    && (*value < 0 || value > bound)
            }
            (Detail::OrbitCount { anchor, s, value }, Some(p)) => {
                let e: BTreeMap<u64, i64> = divisors(*anchor).into_iter().map(|i| (i, p.lefschetz(i))).collect();
                orbit_consistency(&e, *anchor) == Err(OrbitFailure { s: *s, value: *value })
            }
            _ => false,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Feasible,
    Infeasible,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ShapeReport {
    pub m: u64,
    pub n: u64,
    pub verdict: Verdict,
    pub witnesses: Vec<EigenProfile>,
    pub certificates: Vec<Certificate>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub annotations: Vec<String>,
}

impl ShapeReport {
    pub fn shape(&self) -> OrderShape {
        OrderShape::new(self.m, self.n)
    }

    pub fn is_feasible(&self) -> bool {
        self.verdict == Verdict::Feasible
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrderReport {
    pub order: u64,
    pub characteristic: u64,
    pub verdict: Verdict,
    pub shapes: Vec<ShapeReport>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub certificates: Vec<Certificate>,
}

impl OrderReport {
    pub fn is_feasible(&self) -> bool {
        self.verdict == Verdict::Feasible
    }
}

/// Orbit labels that can occur in a profile of order dividing `big`.
pub fn orbit_universe(big: u64) -> Vec<u64> {
    divisors(big)
        .into_iter()
        .filter(|&d| euler_phi(d) <= MAX_ORBIT_PHI)
        .collect()
}

/// Admissible shapes `m.n = big`, ordered by `m`.
pub fn enumerate_shapes(big: u64) -> Vec<OrderShape> {
    divisors(big)
        .into_iter()
        .map(|m| OrderShape::new(m, big / m))
        .filter(OrderShape::is_valid)
        .collect()
}

/// Every order that has at least one admissible shape.
pub fn candidate_universe() -> Vec<u64> {
    let mut out: Vec<u64> = (1..=MAX_SYMPLECTIC)
        .flat_map(|m| table_one_range().into_iter().map(move |n| m * n))
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// All `n` with `φ(n) <= 21`. `φ(n) >= sqrt(n/2)` makes 1000 a safe search bound.
pub(crate) fn table_one_range() -> Vec<u64> {
    (1..=1000).filter(|&n| euler_phi(n) <= MAX_ORBIT_PHI).collect()
}

fn structural(p: &EigenProfile, shape: OrderShape) -> bool {
    p.mult(1) >= 1 && p.mult(shape.n) >= 1 && p.order() == shape.order()
}

/// Profiles with an ample class, a `ζ_n` orbit, order `N` and `n`-th power `S_m`.
pub fn enumerate_profiles(shape: OrderShape) -> Vec<EigenProfile> {
    if !shape.is_valid() {
        return Vec::new();
    }
    let s = symplectic_profile(shape.m).expect("valid shape").profile;
    power_preimages(&orbit_universe(shape.order()), shape.n, &s)
        .into_iter()
        .filter(|p| structural(p, shape))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct OrbitFailure {
    pub s: u64,
    pub value: i64,
}

/// Orbit counts of a cyclic action of order `n` on a finite set, from the
/// fixed-point counts `e_i = #Fix(g^i)` for `i | n`.
///
/// Returns `o_s` keyed by orbit size, or the first size `s` whose orbit mass
/// `s.o_s` is negative or not a multiple of `s`.
pub fn orbit_consistency(e: &BTreeMap<u64, i64>, n: u64) -> Result<BTreeMap<u64, i64>, OrbitFailure> {
    let mut orbits = BTreeMap::new();
    for s in divisors(n) {
        let value: i64 = divisors(s)
            .into_iter()
            .map(|i| moebius(s / i) * e.get(&i).copied().expect("e_i given for every i | n"))
            .sum();
        if value < 0 || value % s as i64 != 0 {
            return Err(OrbitFailure { s, value });
        }
        orbits.insert(s, value / s as i64);
    }
    Ok(orbits)
}

/// Runs the finite-fixed-locus rules on a profile of the given shape.
///
/// For `m >= 2`, any `g^i` whose power `g^{lcm(i,n)}` is a non-trivial
/// symplectic automorphism has a finite fixed locus inside that of
/// `g^{lcm(i,n)}`, so `0 <= e(g^i) <= e(g^{lcm(i,n)})`. Then every finite
/// fixed locus `Fix(g^j)` with `n | j < N` must carry a genuine action of the
/// cyclic group of order `j`.
pub fn check_profile(p: &EigenProfile, shape: OrderShape) -> Result<(), Certificate> {
    if shape.m < 2 {
        return Ok(());
    }
    let big = shape.order();
    let n = shape.n;
    let fail = |rule, detail| Certificate {
        shape,
        profile: Some(p.clone()),
        rule,
        detail,
    };
    for i in 1..big {
        let j = lcm(i, n);
        if j.is_multiple_of(big) {
            continue;
        }
        let value = p.lefschetz(i);
        let bound = p.lefschetz(j);
        if value < 0 || value > bound {
            return Err(fail(Rule::R3TraceBound, Detail::TraceBound { i, value, j, bound }));
        }
    }
    for anchor in divisors(big).into_iter().filter(|&j| j % n == 0 && j < big) {
        let e: BTreeMap<u64, i64> = divisors(anchor).into_iter().map(|i| (i, p.lefschetz(i))).collect();
        if let Err(OrbitFailure { s, value }) = orbit_consistency(&e, anchor) {
            return Err(fail(Rule::R5OrbitConsistency, Detail::OrbitCount { anchor, s, value }));
        }
    }
    Ok(())
}

fn check_characteristic(big: u64, characteristic: u64) -> Result<(), TameError> {
    if characteristic > 0 && big.is_multiple_of(characteristic) {
        Err(TameError::WildOrder {
            order: big,
            characteristic,
        })
    } else {
        Ok(())
    }
}

pub const ORDER_SIXTY_NOTE: &str = "spectrally feasible only: purely non-symplectic order 60 is excluded by an external result of Machida and Oguiso, which this engine does not reproduce";

pub fn classify_shape(shape: OrderShape, characteristic: u64) -> Result<ShapeReport, TameError> {
    check_characteristic(shape.order(), characteristic)?;
    let mut report = ShapeReport {
        m: shape.m,
        n: shape.n,
        verdict: Verdict::Infeasible,
        witnesses: Vec::new(),
        certificates: Vec::new(),
        annotations: Vec::new(),
    };
    if !shape.is_valid() {
        let reason = if shape.m > MAX_SYMPLECTIC {
            format!("symplectic order {} exceeds {}", shape.m, MAX_SYMPLECTIC)
        } else {
            format!("phi({}) = {} exceeds {}", shape.n, euler_phi(shape.n), MAX_ORBIT_PHI)
        };
        report.certificates.push(Certificate {
            shape,
            profile: None,
            rule: Rule::R1Structure,
            detail: Detail::InvalidShape { reason },
        });
        return Ok(report);
    }
    let s = symplectic_profile(shape.m).expect("valid shape").profile;
    let universe = orbit_universe(shape.order());
    let pre = power_preimages(&universe, shape.n, &s);
    if pre.is_empty() {
        let (target, needed) = first_unfillable(&universe, shape.n, &s);
        report.certificates.push(Certificate {
            shape,
            profile: None,
            rule: Rule::R2SymplecticPower,
            detail: Detail::NoPreimage { target, needed },
        });
        return Ok(report);
    }
    let candidates: Vec<EigenProfile> = pre.iter().filter(|p| structural(p, shape)).cloned().collect();
    if candidates.is_empty() {
        report.certificates.push(Certificate {
            shape,
            profile: None,
            rule: Rule::R1Structure,
            detail: Detail::NoStructuralCandidate { preimages: pre.len() },
        });
        return Ok(report);
    }
    for p in candidates {
        match check_profile(&p, shape) {
            Ok(()) => report.witnesses.push(p),
            Err(c) => report.certificates.push(c),
        }
    }
    if !report.witnesses.is_empty() {
        report.verdict = Verdict::Feasible;
    }
    if shape == OrderShape::new(1, 60) {
        report.annotations.push(ORDER_SIXTY_NOTE.to_string());
    }
    Ok(report)
}

fn first_unfillable(universe: &[u64], n: u64, s: &EigenProfile) -> (u64, u64) {
    for (&t, &need) in s.orbits() {
        let single = EigenProfile::from_map(BTreeMap::from([(t, need)]));
        if power_preimages(universe, n, &single).is_empty() {
            return (t, need);
        }
    }
    unreachable!("an empty product of fills has an empty factor")
}

pub fn classify_order(big: u64, characteristic: u64) -> Result<OrderReport, TameError> {
    check_characteristic(big, characteristic)?;
    let shapes: Vec<ShapeReport> = enumerate_shapes(big)
        .into_iter()
        .map(|s| classify_shape(s, characteristic).expect("characteristic already checked"))
        .collect();
    let feasible = shapes.iter().any(ShapeReport::is_feasible);
    let certificates = if shapes.is_empty() {
        vec![Certificate {
            shape: OrderShape::new(1, big),
            profile: None,
            rule: Rule::Exhausted,
            detail: Detail::NoShape,
        }]
    } else {
        Vec::new()
    };
    Ok(OrderReport {
        order: big,
        characteristic,
        verdict: if feasible {
            Verdict::Feasible
        } else {
            Verdict::Infeasible
        },
        shapes,
        certificates,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(entries: &[(u64, u64)]) -> EigenProfile {
        EigenProfile::k3(entries).unwrap()
    }

    #[test]
    fn universes() {
        assert_eq!(orbit_universe(44), vec![1, 2, 4, 11, 22, 44]);
        assert_eq!(orbit_universe(1), vec![1]);
        assert_eq!(orbit_universe(23), vec![1]);
    }

    #[test]
    fn shapes() {
        let s = |v: &[(u64, u64)]| v.iter().map(|&(m, n)| OrderShape::new(m, n)).collect::<Vec<_>>();
        assert_eq!(
            enumerate_shapes(60),
            s(&[(1, 60), (2, 30), (3, 20), (4, 15), (5, 12), (6, 10)])
        );
        assert_eq!(enumerate_shapes(1), s(&[(1, 1)]));
        assert_eq!(enumerate_shapes(66), s(&[(1, 66), (2, 33), (3, 22), (6, 11)]));
    }

    #[test]
    fn profile_enumeration() {
        assert!(enumerate_profiles(OrderShape::new(2, 16)).is_empty());
        assert_eq!(enumerate_profiles(OrderShape::new(1, 1)), vec![p(&[(1, 22)])]);
        assert!(enumerate_profiles(OrderShape::new(5, 12)).contains(&p(&[(60, 1), (12, 1), (1, 2)])));
    }

    #[test]
    fn orbit_counts() {
        let e = BTreeMap::from([(1, 1), (2, 1), (7, -5), (14, 8)]);
        assert_eq!(orbit_consistency(&e, 14), Err(OrbitFailure { s: 7, value: -6 }));
        let e: BTreeMap<u64, i64> = divisors(12).into_iter().map(|i| (i, 4)).collect();
        let o = orbit_consistency(&e, 12).unwrap();
        assert_eq!(o[&1], 4);
        assert!(o.iter().filter(|(&s, _)| s > 1).all(|(_, &v)| v == 0));
        let o = orbit_consistency(&BTreeMap::from([(1, 0), (2, 8)]), 2).unwrap();
        assert_eq!((o[&1], o[&2]), (0, 4));
    }

    #[test]
    fn profile_checks() {
        let c = check_profile(&p(&[(9, 2), (15, 1), (1, 2)]), OrderShape::new(3, 15)).unwrap_err();
        assert_eq!(c.rule, Rule::R3TraceBound);
        assert!(matches!(c.detail, Detail::TraceBound { i: 3, value: -4, .. }));
        assert!(c.replay());
        assert!(check_profile(&p(&[(66, 1), (1, 2)]), OrderShape::new(1, 66)).is_ok());
    }

    #[test]
    fn shape_verdicts() {
        let r = classify_shape(OrderShape::new(8, 2), 0).unwrap();
        assert!(!r.is_feasible());
        assert_eq!(r.certificates[0].rule, Rule::R2SymplecticPower);
        assert!(r.certificates[0].replay());
        assert!(classify_shape(OrderShape::new(5, 12), 0).unwrap().is_feasible());
        let sixty = classify_shape(OrderShape::new(1, 60), 0).unwrap();
        assert!(sixty.is_feasible());
        assert_eq!(sixty.annotations.len(), 1);
        assert_eq!(
            classify_shape(OrderShape::new(1, 7), 7),
            Err(TameError::WildOrder {
                order: 7,
                characteristic: 7
            })
        );
    }

    #[test]
    fn order_verdicts() {
        assert!(classify_order(66, 0).unwrap().is_feasible());
        assert!(classify_order(1, 0).unwrap().is_feasible());
        assert!(!classify_order(88, 0).unwrap().is_feasible());
        let none = classify_order(23, 0).unwrap();
        assert_eq!(none.certificates[0].rule, Rule::Exhausted);
    }
}
