//! Wild automorphisms in characteristics 5, 7 and 11.
//!
//! An automorphism `g` of order `p.n` has a wild power `u = g^n` of order
//! `p`, whose action on `H^2` is one of a short list of spectra tied to the
//! shape of its fixed locus. The search below finds every profile of `g`
//! compatible with such a `u`, and the replay scripts close the remaining
//! cases, marking every step that rests on surface geometry.

pub mod axioms;
pub mod fixed_locus;
pub mod replay;

use std::collections::BTreeMap;
use std::sync::{Mutex, OnceLock};

use serde::Serialize;
use thiserror::Error;

use crate::cyclotomic_core::divisors;
use crate::spectrum::{power_preimages, EigenProfile};
use crate::tame_engine::{candidate_universe, orbit_universe};

pub use fixed_locus::{curve_h1_traces, dl_check, fixed_locus_trace, CurveAction, DlOutcome, FixedLocusHypothesis};
pub use replay::{replay_all, replay_lemma, Assertion, AssertionStatus, Exclusion, LemmaId, ReplayReport};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WildError {
    #[error("wild automorphisms are only classified in characteristics 5, 7 and 11, not {0}")]
    UnsupportedCharacteristic(u64),
    #[error("inconsistent fixed-locus hypothesis: {0}")]
    InconsistentHypothesis(String),
    #[error("unknown lemma id {0:?}")]
    UnknownLemma(String),
}

/// Fixed-locus type of an order-`p` automorphism.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WildCase {
    /// `p = 11`: a cuspidal fibre or its cusp.
    TypeII,
    /// `p = 7`: support of a `II*` fibre.
    TypeIIStar,
    /// `p = 7`: a type `III` fibre or its singular point.
    TypeIII,
    /// `p = 5`: the fixed locus contains a curve of arithmetic genus 2.
    GenusTwo,
    /// `p = 5`: support of a type `IV` fibre.
    TypeIV,
    /// `p = 5`: support of a `III*` fibre.
    TypeIIIStar,
    /// `p = 5`: two fixed points.
    TwoPoints,
    /// `p = 5`: one fixed point, the quotient is a K3 surface.
    OnePointK3,
    /// `p = 5`: one fixed point, the quotient is rational.
    OnePointRational,
}

impl WildCase {
    pub const ALL: [WildCase; 9] = [
        WildCase::TypeII,
        WildCase::TypeIIStar,
        WildCase::TypeIII,
        WildCase::GenusTwo,
        WildCase::TypeIV,
        WildCase::TypeIIIStar,
        WildCase::TwoPoints,
        WildCase::OnePointK3,
        WildCase::OnePointRational,
    ];

    pub fn characteristic(self) -> u64 {
        match self {
            WildCase::TypeII => 11,
            WildCase::TypeIIStar | WildCase::TypeIII => 7,
            _ => 5,
        }
    }

    /// Orbit entries of `[u*]`; the genus-2 case has no fixed spectrum.
    pub fn spectrum_entries(self) -> Option<&'static [(u64, u64)]> {
        Some(match self {
            WildCase::TypeII => &[(1, 2), (11, 2)],
            WildCase::TypeIIStar => &[(1, 10), (7, 2)],
            WildCase::TypeIII => &[(1, 4), (7, 3)],
            WildCase::GenusTwo => return None,
            WildCase::TypeIV | WildCase::TwoPoints | WildCase::OnePointRational => &[(1, 6), (5, 4)],
            WildCase::TypeIIIStar => &[(1, 10), (5, 3)],
            WildCase::OnePointK3 => &[(1, 14), (5, 2)],
        })
    }

    pub fn spectrum(self) -> Option<EigenProfile> {
        self.spectrum_entries()
            .map(|e| EigenProfile::k3(e).expect("wild spectra have dimension 22"))
    }

    pub fn label(self) -> &'static str {
        match self {
            WildCase::TypeII => "II",
            WildCase::TypeIIStar => "II*",
            WildCase::TypeIII => "III",
            WildCase::GenusTwo => "(1)",
            WildCase::TypeIV => "(2-IV)",
            WildCase::TypeIIIStar => "(2-III*)",
            WildCase::TwoPoints => "(3)",
            WildCase::OnePointK3 => "(4)",
            WildCase::OnePointRational => "(5)",
        }
    }

    pub fn for_characteristic(p: u64) -> Result<Vec<WildCase>, WildError> {
        check_wild(p)?;
        Ok(Self::ALL.into_iter().filter(|c| c.characteristic() == p).collect())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WildSpectrum {
    pub p: u64,
    pub profile: EigenProfile,
    pub geometric_tag: String,
    #[serde(skip)]
    pub cases: Vec<WildCase>,
}

fn check_wild(p: u64) -> Result<(), WildError> {
    match p {
        5 | 7 | 11 => Ok(()),
        _ => Err(WildError::UnsupportedCharacteristic(p)),
    }
}

/// Distinct spectra of order-`p` automorphisms, each tagged with the cases sharing it.
pub fn wild_spectra(p: u64) -> Result<Vec<WildSpectrum>, WildError> {
    let mut out: Vec<WildSpectrum> = Vec::new();
    for case in WildCase::for_characteristic(p)? {
        let Some(profile) = case.spectrum() else { continue };
        match out.iter_mut().find(|s| s.profile == profile) {
            Some(s) => {
                s.cases.push(case);
                s.geometric_tag = s.cases.iter().map(|c| c.label()).collect::<Vec<_>>().join(",");
            }
            None => out.push(WildSpectrum {
                p,
                profile,
                geometric_tag: case.label().to_string(),
                cases: vec![case],
            }),
        }
    }
    Ok(out)
}

fn preimages_of(p: u64, n: u64, target: &EigenProfile) -> Vec<EigenProfile> {
    let big = p * n;
    power_preimages(&orbit_universe(big), n, target)
        .into_iter()
        .filter(|q| q.mult(1) >= 1 && q.order() == big)
        .collect()
}

/// Profiles of order `p.n` with an invariant class whose `n`-th power is a wild spectrum.
///
/// `n` may be divisible by `p`; such orders then carry a power of order `p^2`.
pub fn wild_enumerate(p: u64, n: u64) -> Result<Vec<(EigenProfile, WildSpectrum)>, WildError> {
    let mut out = Vec::new();
    for s in wild_spectra(p)? {
        for q in preimages_of(p, n, &s.profile) {
            out.push((q, s.clone()));
        }
    }
    Ok(out)
}

/// Profiles compatible with one fixed-locus case; empty for the genus-2 case.
pub fn case_profiles(case: WildCase, n: u64) -> Vec<EigenProfile> {
    match case.spectrum() {
        Some(s) => preimages_of(case.characteristic(), n, &s),
        None => Vec::new(),
    }
}

/// Wild automorphisms present in the example catalog: `(p, entry id, order)`.
pub const WILD_EXAMPLES: &[(u64, &str, u64)] = &[
    (11, "Xeps0_p11", 22),
    (11, "Xeps1_p11", 22),
    (11, "X66_p11", 66),
    (7, "X42_p7", 42),
    (7, "X28_p7", 28),
    (5, "X30_p5", 30),
    (5, "X20_p5", 20),
    (5, "X30dp_p5", 30),
    (5, "X40_p5", 40),
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum WildStatus {
    SpectrallyInfeasible,
    ExcludedByReplay,
    ExcludedWithGeometryFlag {
        axioms: Vec<&'static str>,
    },
    /// Realized by `g^power` for the catalog automorphism `g` of entry `example_id`.
    Realized {
        example_id: &'static str,
        power: u64,
    },
    /// Some case could not be closed; never produced by the shipped scripts.
    Unresolved,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CaseReason {
    NoProfile,
    /// Closed by the named replay script.
    Lemma {
        lemma: &'static str,
        axioms: Vec<&'static str>,
    },
    /// `g^(n/via)` has order `p.via` and the same power `u`, which is excluded.
    Reduced {
        via: u64,
        lemma: Option<&'static str>,
        axioms: Vec<&'static str>,
    },
    Open,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CaseStep {
    pub case: WildCase,
    pub profiles: usize,
    pub reason: CaseReason,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WildEntry {
    pub n: u64,
    pub order: u64,
    pub status: WildStatus,
    pub trail: Vec<CaseStep>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WildClassification {
    pub p: u64,
    pub entries: BTreeMap<u64, WildEntry>,
}

impl WildClassification {
    pub fn realized(&self) -> Vec<u64> {
        self.entries
            .iter()
            .filter(|(_, e)| matches!(e.status, WildStatus::Realized { .. }))
            .map(|(&n, _)| n)
            .collect()
    }
}

fn realization(p: u64, n: u64) -> Option<(&'static str, u64)> {
    WILD_EXAMPLES
        .iter()
        .filter(|&&(q, _, order)| q == p && order % (p * n) == 0)
        .min_by_key(|&&(_, _, order)| order)
        .map(|&(_, id, order)| (id, order / (p * n)))
}

/// Closure status for `(case, n)`, reading exclusions from the replay scripts.
fn close_case(
    case: WildCase,
    n: u64,
    exclusions: &BTreeMap<(WildCase, u64), (&'static str, Vec<&'static str>)>,
    memo: &mut BTreeMap<(WildCase, u64), CaseReason>,
) -> CaseReason {
    if let Some(r) = memo.get(&(case, n)) {
        return r.clone();
    }
    let reason = if case.spectrum().is_some() && case_profiles(case, n).is_empty() {
        CaseReason::NoProfile
    } else if let Some((lemma, axioms)) = exclusions.get(&(case, n)) {
        CaseReason::Lemma {
            lemma,
            axioms: axioms.clone(),
        }
    } else {
        let mut found = CaseReason::Open;
        for via in divisors(n).into_iter().filter(|&d| d > 1 && d < n) {
            match close_case(case, via, exclusions, memo) {
                CaseReason::Open => continue,
                CaseReason::NoProfile => {
                    found = CaseReason::Reduced {
                        via,
                        lemma: None,
                        axioms: Vec::new(),
                    };
                }
                CaseReason::Lemma { lemma, axioms }
                | CaseReason::Reduced {
                    lemma: Some(lemma),
                    axioms,
                    ..
                } => {
                    found = CaseReason::Reduced {
                        via,
                        lemma: Some(lemma),
                        axioms,
                    };
                }
                CaseReason::Reduced {
                    lemma: None, axioms, ..
                } => {
                    found = CaseReason::Reduced {
                        via,
                        lemma: None,
                        axioms,
                    };
                }
            }
            break;
        }
        found
    };
    memo.insert((case, n), reason.clone());
    reason
}

/// Status of every `n` with `p.n` in the candidate order universe.
///
/// Computed once per characteristic and cached.
pub fn classify_wild(p: u64) -> Result<WildClassification, WildError> {
    static CACHE: OnceLock<Mutex<BTreeMap<u64, WildClassification>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(w) = cache.lock().unwrap_or_else(|e| e.into_inner()).get(&p) {
        return Ok(w.clone());
    }
    let w = compute_wild(p)?;
    cache.lock().unwrap_or_else(|e| e.into_inner()).insert(p, w.clone());
    Ok(w)
}

fn compute_wild(p: u64) -> Result<WildClassification, WildError> {
    let cases = WildCase::for_characteristic(p)?;
    let mut exclusions = BTreeMap::new();
    for report in replay_all() {
        for ex in report.exclusions.iter().filter(|e| e.holds) {
            exclusions
                .entry((ex.case, ex.n))
                .or_insert((report.lemma.as_str(), ex.axioms.clone()));
        }
    }
    let mut memo = BTreeMap::new();
    let mut entries = BTreeMap::new();
    let universe = candidate_universe();
    for big in universe.into_iter().filter(|b| b % p == 0) {
        let n = big / p;
        let total = wild_enumerate(p, n)?.len();
        let mut trail = Vec::new();
        for &case in &cases {
            let reason = close_case(case, n, &exclusions, &mut memo);
            trail.push(CaseStep {
                case,
                profiles: case_profiles(case, n).len(),
                reason,
            });
        }
        let status = if let Some((example_id, power)) = realization(p, n) {
            WildStatus::Realized { example_id, power }
        } else if trail.iter().any(|s| s.reason == CaseReason::Open) {
            WildStatus::Unresolved
        } else if total == 0 {
            WildStatus::SpectrallyInfeasible
        } else {
            let mut axioms: Vec<&'static str> = trail
                .iter()
                .flat_map(|s| match &s.reason {
                    CaseReason::Lemma { axioms, .. } | CaseReason::Reduced { axioms, .. } => axioms.clone(),
                    _ => Vec::new(),
                })
                .collect();
            axioms.sort_unstable();
            axioms.dedup();
            if axioms.is_empty() {
                WildStatus::ExcludedByReplay
            } else {
                WildStatus::ExcludedWithGeometryFlag { axioms }
            }
        };
        entries.insert(
            n,
            WildEntry {
                n,
                order: big,
                status,
                trail,
            },
        );
    }
    Ok(WildClassification { p, entries })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spectra() {
        assert_eq!(wild_spectra(11).unwrap().len(), 1);
        assert_eq!(wild_spectra(7).unwrap().len(), 2);
        let five = wild_spectra(5).unwrap();
        assert_eq!(five.len(), 3);
        assert_eq!(five[0].geometric_tag, "(2-IV),(3),(5)");
        assert!(wild_spectra(13).is_err());
        for p in [5, 7, 11] {
            for s in wild_spectra(p).unwrap() {
                assert_eq!(s.profile.order(), p);
                assert!(s.profile.lefschetz(1) >= 0);
            }
        }
    }

    #[test]
    fn enumerate_examples() {
        let four: Vec<String> = wild_enumerate(11, 4)
            .unwrap()
            .iter()
            .map(|(q, _)| q.format_paper())
            .collect();
        assert_eq!(four, vec!["[1, -1, z44:20]", "[1.2, z44:20]"]);
        assert!(wild_enumerate(11, 5).unwrap().is_empty());
        let one: Vec<EigenProfile> = wild_enumerate(7, 1).unwrap().into_iter().map(|(q, _)| q).collect();
        let spectra: Vec<EigenProfile> = wild_spectra(7).unwrap().into_iter().map(|s| s.profile).collect();
        assert_eq!(one, spectra);
        assert!(wild_enumerate(5, 5).unwrap().is_empty());
    }
}
