//! Fixed-locus hypotheses and the trace side of the Deligne–Lusztig identity.

use std::collections::BTreeSet;

use serde::Serialize;

use super::WildError;
use crate::cyclotomic_core::divisors;
use crate::spectrum::{profiles_of_dim, EigenProfile};

/// How the residual automorphism `u` acts on the curve of genus `>= 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CurveAction {
    /// `u` maps the curve to itself; any integral action on `H^1` is allowed.
    Preserved,
    /// `u` acts on the curve without fixed points.
    FixedPointFree,
}

/// A candidate fixed locus `X^s` of a tame power `s`, together with the way
/// the residual automorphism `u` of order `action_order` permutes its parts.
///
/// Parts not counted as `u`-fixed (points) or `u`-preserved (curves) must
/// fall into free orbits of length `action_order`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FixedLocusHypothesis {
    pub isolated_points: u64,
    pub rational_curves: u64,
    pub elliptic_curves: u64,
    /// Genus of the unique curve of genus at least 2, if any.
    pub big_curve: Option<u64>,
    pub big_curve_action: CurveAction,
    pub action_order: u64,
    pub u_fixed_points: u64,
    pub u_preserved_rational: u64,
    pub u_preserved_elliptic: u64,
    /// Upper bound on the non-trivial orbits of `u` on `H^1` of the big curve.
    pub h1_orbit_bound: Option<u64>,
}

impl FixedLocusHypothesis {
    /// No fixed locus at all.
    pub fn empty(action_order: u64) -> Self {
        Self {
            isolated_points: 0,
            rational_curves: 0,
            elliptic_curves: 0,
            big_curve: None,
            big_curve_action: CurveAction::Preserved,
            action_order,
            u_fixed_points: 0,
            u_preserved_rational: 0,
            u_preserved_elliptic: 0,
            h1_orbit_bound: None,
        }
    }

    /// A single curve of genus `genus` preserved by `u`.
    pub fn curve(genus: u64, action_order: u64) -> Self {
        Self {
            big_curve: Some(genus),
            ..Self::empty(action_order)
        }
    }

    /// Adds `count` rational curves of which `preserved` are mapped to themselves by `u`.
    pub fn with_rational(mut self, count: u64, preserved: u64) -> Self {
        self.rational_curves = count;
        self.u_preserved_rational = preserved;
        self
    }

    pub fn with_points(mut self, count: u64, fixed: u64) -> Self {
        self.isolated_points = count;
        self.u_fixed_points = fixed;
        self
    }

    pub fn with_elliptic(mut self, count: u64, preserved: u64) -> Self {
        self.elliptic_curves = count;
        self.u_preserved_elliptic = preserved;
        self
    }

    pub fn with_h1_orbit_bound(mut self, bound: u64) -> Self {
        self.h1_orbit_bound = Some(bound);
        self
    }

    pub fn with_free_curve(mut self) -> Self {
        self.big_curve_action = CurveAction::FixedPointFree;
        self
    }

    pub fn euler(&self) -> i64 {
        let big = self.big_curve.map_or(0, |r| 2 - 2 * r as i64);
        self.isolated_points as i64 + 2 * self.rational_curves as i64 + big
    }

    fn validate(&self) -> Result<(), WildError> {
        let q = self.action_order;
        let bad = |what: &str| Err(WildError::InconsistentHypothesis(what.to_string()));
        if q == 0 {
            return bad("action order must be positive");
        }
        let parts = [
            ("points", self.isolated_points, self.u_fixed_points),
            ("rational curves", self.rational_curves, self.u_preserved_rational),
            ("elliptic curves", self.elliptic_curves, self.u_preserved_elliptic),
        ];
        for (what, total, fixed) in parts {
            if fixed > total || (total - fixed) % q != 0 {
                return bad(&format!("{what}: {total} total, {fixed} fixed, order {q}"));
            }
        }
        if matches!(self.big_curve, Some(r) if r < 2) {
            return bad("the big curve must have genus at least 2");
        }
        Ok(())
    }
}

/// Traces of an automorphism of order dividing `q` on `H^1` of a genus `r`
/// curve, from every integral profile of dimension `2r`.
pub fn curve_h1_traces(genus: u64, q: u64) -> BTreeSet<i64> {
    assert!(q >= 1, "order must be positive");
    bounded_h1_traces(genus, q, None)
}

fn bounded_h1_traces(genus: u64, q: u64, bound: Option<u64>) -> BTreeSet<i64> {
    profiles_of_dim(&divisors(q), 2 * genus)
        .iter()
        .filter(|p| bound.is_none_or(|b| p.orbits().iter().filter(|(&d, _)| d > 1).map(|(_, &m)| m).sum::<u64>() <= b))
        .map(|p| p.trace_power(1))
        .collect()
}

/// Possible values of `Tr(u*|H*(X^s))` under the hypothesis.
pub fn fixed_locus_trace(h: &FixedLocusHypothesis) -> Result<BTreeSet<i64>, WildError> {
    h.validate()?;
    let q = h.action_order;
    let base = h.u_fixed_points as i64 + 2 * h.u_preserved_rational as i64;
    // A preserved elliptic curve has H^1 of dimension 2 with integral trace t.
    let mut acc: BTreeSet<i64> = BTreeSet::from([base]);
    for _ in 0..h.u_preserved_elliptic {
        let add: Vec<i64> = curve_h1_traces(1, q).into_iter().map(|t| 2 - t).collect();
        acc = acc.iter().flat_map(|a| add.iter().map(move |b| a + b)).collect();
    }
    if let Some(r) = h.big_curve {
        let add: Vec<i64> = match h.big_curve_action {
            CurveAction::Preserved => bounded_h1_traces(r, q, h.h1_orbit_bound)
                .into_iter()
                .map(|t| 2 - t)
                .collect(),
            CurveAction::FixedPointFree => vec![0],
        };
        acc = acc.iter().flat_map(|a| add.iter().map(move |b| a + b)).collect();
    }
    Ok(acc)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum DlOutcome {
    Consistent { lhs: i64 },
    Inconsistent { lhs: i64, rhs: BTreeSet<i64> },
}

impl DlOutcome {
    pub fn is_consistent(&self) -> bool {
        matches!(self, DlOutcome::Consistent { .. })
    }
}

/// Compares `Tr(g^k*|H*(X))` for `k = s_exponent + u_exponent` with the traces
/// the hypothesis allows for `u = g^u_exponent` on `Fix(g^s_exponent)`.
pub fn dl_check(
    p: &EigenProfile,
    s_exponent: u64,
    u_exponent: u64,
    h: &FixedLocusHypothesis,
) -> Result<DlOutcome, WildError> {
    let lhs = 2 + p.trace_power(s_exponent + u_exponent);
    let rhs = fixed_locus_trace(h)?;
    Ok(if rhs.contains(&lhs) {
        DlOutcome::Consistent { lhs }
    } else {
        DlOutcome::Inconsistent { lhs, rhs }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn curve_traces() {
        assert_eq!(curve_h1_traces(9, 11), BTreeSet::from([7, 18]));
        assert_eq!(curve_h1_traces(0, 5), BTreeSet::from([0]));
        assert_eq!(curve_h1_traces(5, 7), BTreeSet::from([3, 10]));
        assert_eq!(curve_h1_traces(6, 7), BTreeSet::from([-2, 5, 12]));
    }

    #[test]
    fn locus_traces() {
        let c9 = FixedLocusHypothesis::curve(9, 11);
        assert_eq!(fixed_locus_trace(&c9).unwrap(), BTreeSet::from([-16, -5]));
        assert_eq!(
            fixed_locus_trace(&FixedLocusHypothesis::empty(5)).unwrap(),
            BTreeSet::from([0])
        );
        let c06 = FixedLocusHypothesis::curve(6, 7).with_rational(1, 1);
        assert_eq!(fixed_locus_trace(&c06).unwrap(), BTreeSet::from([-8, -1, 6]));
        let bad = FixedLocusHypothesis::empty(5).with_points(3, 1);
        assert!(fixed_locus_trace(&bad).is_err());
    }

    #[test]
    fn dl_on_order_44() {
        let p = EigenProfile::k3(&[(1, 2), (44, 1)]).unwrap();
        let out = dl_check(&p, 22, 4, &FixedLocusHypothesis::curve(9, 11)).unwrap();
        assert_eq!(
            out,
            DlOutcome::Inconsistent {
                lhs: 6,
                rhs: BTreeSet::from([-16, -5])
            }
        );
        let id = EigenProfile::k3(&[(1, 22)]).unwrap();
        let k3 = FixedLocusHypothesis::empty(1).with_points(24, 24);
        assert_eq!(dl_check(&id, 0, 1, &k3).unwrap(), DlOutcome::Consistent { lhs: 24 });
    }
}
