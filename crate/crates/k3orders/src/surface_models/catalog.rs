//! Shipped example catalog and its verification.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use super::{
    invariance_scalar, map_order, parse_equation, parse_poly, weierstrass_discriminant, AutoMap, CoefficientRing,
    ModelError, ModelKind, SurfaceModel,
};
use crate::cyclotomic_core::is_prime;

const CATALOG_TOML: &str = include_str!("../../data/catalog.toml");

/// Characteristics swept by [`verify_all`] without a filter: 0 and every prime below 70.
pub fn sweep_characteristics() -> Vec<u64> {
    std::iter::once(0).chain((2..70).filter(|&p| is_prime(p))).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Expectation {
    #[default]
    Pass,
    NotInvariant,
    OrderMismatch,
    BadDiscriminant,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Admissible {
    #[serde(default)]
    pub zero: bool,
    #[serde(default)]
    pub primes: Vec<u64>,
    /// Every prime from this bound on that does not divide the order.
    pub coprime_from: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CatalogEntry {
    pub id: String,
    pub kind: ModelKind,
    pub variables: Vec<String>,
    pub weights: Option<Vec<u32>>,
    /// `N` of the coefficient ring `Z[ζ_N]`.
    pub ring: u64,
    pub equation: String,
    pub map: BTreeMap<String, String>,
    pub order: u64,
    pub admissible: Admissible,
    #[serde(default)]
    pub expect: Expectation,
}

#[derive(Deserialize)]
struct CatalogFile {
    entry: Vec<CatalogEntry>,
}

impl CatalogEntry {
    pub fn admits(&self, p: u64) -> bool {
        let a = &self.admissible;
        match p {
            0 => a.zero,
            _ => {
                a.primes.contains(&p)
                    || a.coprime_from
                        .is_some_and(|lo| p >= lo && is_prime(p) && !self.order.is_multiple_of(p))
            }
        }
    }

    pub fn weights(&self) -> Vec<u32> {
        self.weights.clone().unwrap_or_else(|| vec![1; self.variables.len()])
    }

    pub fn model(&self, p: u64) -> Result<SurfaceModel, ModelError> {
        let ring = CoefficientRing::new(self.ring, p)?;
        let f = parse_equation(&self.equation, &ring, &self.variables)?;
        SurfaceModel::new(&self.id, self.kind, self.weights(), f)
    }

    pub fn auto_map(&self, ring: &CoefficientRing) -> Result<AutoMap, ModelError> {
        if self.map.len() != self.variables.len() {
            return Err(ModelError::VariableMismatch(format!(
                "{}: map and variables differ",
                self.id
            )));
        }
        let images = self
            .variables
            .iter()
            .map(|v| {
                let src = self.map.get(v).ok_or_else(|| ModelError::VariableMismatch(v.clone()))?;
                parse_poly(src, ring, &self.variables)
            })
            .collect::<Result<Vec<_>, _>>()?;
        AutoMap::new(images, self.order)
    }
}

/// The shipped catalog, parsed once.
pub fn catalog() -> &'static [CatalogEntry] {
    static CAT: OnceLock<Vec<CatalogEntry>> = OnceLock::new();
    CAT.get_or_init(|| parse_catalog(CATALOG_TOML).expect("shipped catalog parses"))
}

pub fn parse_catalog(src: &str) -> Result<Vec<CatalogEntry>, ModelError> {
    let file: CatalogFile = toml::from_str(src).map_err(|e| ModelError::Catalog(e.to_string()))?;
    let mut seen = std::collections::BTreeSet::new();
    for e in &file.entry {
        if !seen.insert(e.id.clone()) {
            return Err(ModelError::Catalog(format!("duplicate id {}", e.id)));
        }
    }
    Ok(file.entry)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub status: CheckStatus,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub id: String,
    pub characteristic: u64,
    pub expect: Expectation,
    pub checks: Vec<Check>,
    /// Every check passed or was skipped.
    pub passed: bool,
    /// Positive entries pass; negative controls fail exactly where designed.
    pub as_designed: bool,
}

fn check(name: &'static str, r: Result<String, String>) -> Check {
    match r {
        Ok(detail) => Check {
            name,
            status: CheckStatus::Pass,
            detail,
        },
        Err(detail) => Check {
            name,
            status: CheckStatus::Fail,
            detail,
        },
    }
}

fn skipped(name: &'static str, why: &str) -> Check {
    Check {
        name,
        status: CheckStatus::Skipped,
        detail: why.to_string(),
    }
}

pub fn verify_entry(id: &str, characteristic: u64) -> Result<VerificationReport, ModelError> {
    let entry = catalog()
        .iter()
        .find(|e| e.id == id)
        .ok_or_else(|| ModelError::UnknownEntry(id.to_string()))?;
    if !entry.admits(characteristic) {
        return Err(ModelError::CharacteristicNotAdmissible {
            id: id.to_string(),
            characteristic,
        });
    }
    let model = entry.model(characteristic)?;
    let ring = model.ring().clone();
    let g = entry.auto_map(&ring)?;
    let mut checks = Vec::new();

    let zeta_order = ring.multiplicative_order(&ring.zeta_pow(1), ring.order());
    checks.push(check(
        "root_of_unity",
        match zeta_order {
            Some(k) if k == ring.order() => Ok(format!("zeta has order {k}")),
            other => Err(format!("zeta has order {other:?}, expected {}", ring.order())),
        },
    ));

    checks.push(check(
        "invariance",
        invariance_scalar(&model, &g)
            .map_err(|e| e.to_string())
            .and_then(|lambda| {
                if ring.pow(&lambda, ring.order()) == ring.one() {
                    Ok(format!("lambda = {}", ring.show(&lambda)))
                } else {
                    Err(format!("lambda = {} is not an N-th root of unity", ring.show(&lambda)))
                }
            }),
    ));

    checks.push(check(
        "order",
        map_order(&g, model.kind, &model.weights)
            .map(|k| format!("order {k}"))
            .map_err(|e| e.to_string()),
    ));

    checks.push(match weierstrass_discriminant(&model) {
        Ok(delta) => check(
            "discriminant",
            match delta.degree() {
                None => Err("discriminant vanishes identically".into()),
                Some(d) if d > 24 => Err(format!("degree {d} exceeds 24")),
                Some(d) => Ok(format!("degree {d}")),
            },
        ),
        Err(ModelError::UnsupportedShape(why)) => skipped("discriminant", &why),
        Err(e) => check("discriminant", Err(e.to_string())),
    });

    let failed = |name: &str| checks.iter().any(|c| c.name == name && c.status == CheckStatus::Fail);
    let passed = checks.iter().all(|c| c.status != CheckStatus::Fail);
    let as_designed = match entry.expect {
        Expectation::Pass => passed,
        Expectation::NotInvariant => failed("invariance"),
        Expectation::OrderMismatch => failed("order") && !failed("invariance"),
        Expectation::BadDiscriminant => failed("discriminant") && !failed("invariance") && !failed("order"),
    };
    Ok(VerificationReport {
        id: entry.id.clone(),
        characteristic,
        expect: entry.expect,
        checks,
        passed,
        as_designed,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationSummary {
    pub characteristic: Option<u64>,
    pub entries: usize,
    pub passed: usize,
    pub negative_controls: usize,
    pub negative_as_designed: usize,
    pub all_as_designed: bool,
    pub reports: Vec<VerificationReport>,
}

/// Every admissible (entry, characteristic) pair; `None` sweeps [`sweep_characteristics`].
pub fn verify_all(characteristic: Option<u64>) -> VerificationSummary {
    let chars = characteristic.map_or_else(sweep_characteristics, |c| vec![c]);
    let mut reports = Vec::new();
    for &p in &chars {
        for e in catalog().iter().filter(|e| e.admits(p)) {
            let report = verify_entry(&e.id, p).unwrap_or_else(|err| VerificationReport {
                id: e.id.clone(),
                characteristic: p,
                expect: e.expect,
                checks: vec![check("load", Err(err.to_string()))],
                passed: false,
                as_designed: false,
            });
            reports.push(report);
        }
    }
    let positive = |r: &&VerificationReport| r.expect == Expectation::Pass;
    VerificationSummary {
        characteristic,
        entries: reports.iter().filter(positive).count(),
        passed: reports.iter().filter(positive).filter(|r| r.passed).count(),
        negative_controls: reports.iter().filter(|r| r.expect != Expectation::Pass).count(),
        negative_as_designed: reports
            .iter()
            .filter(|r| r.expect != Expectation::Pass && r.as_designed)
            .count(),
        all_as_designed: reports.iter().all(|r| r.as_designed),
        reports,
    }
}

/// Whether the scalar over characteristic 0, reduced mod `p`, is the scalar over `F_p`.
pub fn reduction_compatible(id: &str, p: u64) -> Result<bool, ModelError> {
    let entry = catalog()
        .iter()
        .find(|e| e.id == id)
        .ok_or_else(|| ModelError::UnknownEntry(id.to_string()))?;
    for c in [0, p] {
        if !entry.admits(c) {
            return Err(ModelError::CharacteristicNotAdmissible {
                id: id.to_string(),
                characteristic: c,
            });
        }
    }
    let m0 = entry.model(0)?;
    let l0 = invariance_scalar(&m0, &entry.auto_map(m0.ring())?)?;
    let mp = m0.reduce_to(p)?;
    if mp.equation != entry.model(p)?.equation {
        return Ok(false);
    }
    let lp = invariance_scalar(&mp, &entry.auto_map(mp.ring())?)?;
    Ok(m0.ring().reduce_elem(&l0, mp.ring()) == lp)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_loads() {
        assert!(catalog().iter().any(|e| e.id == "X66"));
        assert!(parse_catalog("[[entry]]\nid = 1").is_err());
    }

    #[test]
    fn admissibility() {
        let x66 = catalog().iter().find(|e| e.id == "X66").unwrap();
        assert!(x66.admits(0) && x66.admits(5) && x66.admits(13));
        assert!(!x66.admits(2) && !x66.admits(3) && !x66.admits(11));
        assert!(matches!(
            verify_entry("X66", 11),
            Err(ModelError::CharacteristicNotAdmissible { .. })
        ));
        assert!(matches!(verify_entry("nope", 0), Err(ModelError::UnknownEntry(_))));
    }
}
