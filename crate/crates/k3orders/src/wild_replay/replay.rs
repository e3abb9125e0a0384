//! Scripted replays of the wild exclusion arguments.
//!
//! Every numeric step is recomputed from eigenvalue profiles. Steps that need
//! surface geometry are recorded with the id of the axiom they import and the
//! status `geometry_input`. A script also emits exclusions: claims that a
//! fixed-locus case cannot occur for a given `n`, which hold when no assertion
//! inside them failed.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use serde_json::Value;

use super::fixed_locus::{curve_h1_traces, dl_check, fixed_locus_trace, FixedLocusHypothesis};
use super::{case_profiles, wild_spectra, WildCase, WildError};
use crate::cyclotomic_core::{euler_phi, gcd, is_prime};
use crate::spectrum::{profiles_of_dim, symplectic_fixed_points, symplectic_profile, EigenProfile};
use crate::tame_engine::{candidate_universe, orbit_universe};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LemmaId {
    /// Characteristic 11, `n = 9` or a prime at least 5.
    Order11Primes,
    /// Characteristic 11, `n = 4`.
    Order44,
    /// Characteristic 11, Picard numbers under an automorphism of order 33.
    Order33Picard,
    /// Characteristic 7, `n` in `{8, 9}` or a prime at least 5.
    Order7Primes,
    /// Characteristic 7, `n = 4` and `n = 12`.
    Order28And84,
    /// Characteristic 5, a fixed curve of arithmetic genus 2.
    GenusTwoLocus,
    /// Characteristic 5, no automorphism of order 25.
    Order25,
    /// Characteristic 5, invariant Neron-Severi rank in the one-point K3 case.
    OnePointRank,
    /// Characteristic 5, fixed locus the support of a fibre.
    FibreSupport,
    /// Characteristic 5, at most two fixed points.
    AtMostTwoPoints,
    /// Characteristic 5, one fixed point with K3 quotient.
    OnePointK3Quotient,
}

impl LemmaId {
    pub const ALL: [LemmaId; 11] = [
        LemmaId::Order11Primes,
        LemmaId::Order44,
        LemmaId::Order33Picard,
        LemmaId::Order7Primes,
        LemmaId::Order28And84,
        LemmaId::GenusTwoLocus,
        LemmaId::Order25,
        LemmaId::OnePointRank,
        LemmaId::FibreSupport,
        LemmaId::AtMostTwoPoints,
        LemmaId::OnePointK3Quotient,
    ];

    /// Catalog identifier accepted on the command line.
    pub fn as_str(self) -> &'static str {
        match self {
            LemmaId::Order11Primes => "L7.2",
            LemmaId::Order44 => "L7.3",
            LemmaId::Order33Picard => "L7.5",
            LemmaId::Order7Primes => "L8.2",
            LemmaId::Order28And84 => "L8.3",
            LemmaId::GenusTwoLocus => "L9.2_kod2",
            LemmaId::Order25 => "L9.3_25",
            LemmaId::OnePointRank => "L9.4",
            LemmaId::FibreSupport => "L9.5_kod1",
            LemmaId::AtMostTwoPoints => "L9.6_2pts",
            LemmaId::OnePointK3Quotient => "L9.7_1pt",
        }
    }
}

impl fmt::Display for LemmaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for LemmaId {
    type Err = WildError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        LemmaId::ALL
            .into_iter()
            .find(|l| l.as_str() == s)
            .ok_or_else(|| WildError::UnknownLemma(s.to_string()))
    }
}

impl Serialize for LemmaId {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AssertionStatus {
    Pass,
    Fail,
    GeometryInput,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Assertion {
    pub claim: String,
    pub computed: Value,
    pub status: AssertionStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub axiom: Option<&'static str>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Exclusion {
    pub case: WildCase,
    pub n: u64,
    pub holds: bool,
    pub axioms: Vec<&'static str>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReplayReport {
    pub lemma: LemmaId,
    pub assertions: Vec<Assertion>,
    pub exclusions: Vec<Exclusion>,
}

impl ReplayReport {
    pub fn passed(&self) -> bool {
        self.assertions.iter().all(|a| a.status != AssertionStatus::Fail)
    }

    pub fn failures(&self) -> Vec<&Assertion> {
        self.assertions
            .iter()
            .filter(|a| a.status == AssertionStatus::Fail)
            .collect()
    }

    pub fn geometry_inputs(&self) -> usize {
        self.assertions
            .iter()
            .filter(|a| a.status == AssertionStatus::GeometryInput)
            .count()
    }
}

#[derive(Default)]
struct Script {
    assertions: Vec<Assertion>,
    exclusions: Vec<Exclusion>,
}

impl Script {
    fn check<T: Serialize>(&mut self, claim: impl Into<String>, computed: T, ok: bool) {
        self.assertions.push(Assertion {
            claim: claim.into(),
            computed: serde_json::to_value(computed).expect("serializable"),
            status: if ok {
                AssertionStatus::Pass
            } else {
                AssertionStatus::Fail
            },
            axiom: None,
        });
    }

    fn expect<T: Serialize + PartialEq>(&mut self, claim: impl Into<String>, computed: T, expected: T) {
        let ok = computed == expected;
        self.check(claim, computed, ok);
    }

    fn geometry(&mut self, claim: impl Into<String>, axiom: &'static str) {
        debug_assert!(super::axioms::axiom(axiom).is_some(), "unknown axiom {axiom}");
        self.assertions.push(Assertion {
            claim: claim.into(),
            computed: Value::Null,
            status: AssertionStatus::GeometryInput,
            axiom: Some(axiom),
        });
    }

    fn dl_inconsistent(
        &mut self,
        claim: impl Into<String>,
        p: &EigenProfile,
        s: u64,
        u: u64,
        h: &FixedLocusHypothesis,
    ) {
        let claim = claim.into();
        match dl_check(p, s, u, h) {
            Ok(out) => {
                let ok = !out.is_consistent();
                self.check(claim, out, ok);
            }
            Err(e) => self.check(claim, e.to_string(), false),
        }
    }

    fn exclude(&mut self, case: WildCase, n: u64, body: impl FnOnce(&mut Script)) {
        let start = self.assertions.len();
        body(self);
        let part = &self.assertions[start..];
        let holds = !part.is_empty() && part.iter().all(|a| a.status != AssertionStatus::Fail);
        let mut axioms: Vec<&'static str> = part.iter().filter_map(|a| a.axiom).collect();
        axioms.sort_unstable();
        axioms.dedup();
        self.exclusions.push(Exclusion { case, n, holds, axioms });
    }
}

#[cfg(test)]
fn k3(entries: &[(u64, u64)]) -> EigenProfile {
    EigenProfile::k3(entries).expect("script profile has dimension 22")
}

fn shown(ps: &[EigenProfile]) -> Vec<String> {
    ps.iter().map(EigenProfile::format_paper).collect()
}

fn values(ps: &[EigenProfile], f: impl Fn(&EigenProfile) -> i64) -> BTreeSet<i64> {
    ps.iter().map(f).collect()
}

fn powers(ps: &[EigenProfile], k: u64) -> BTreeSet<String> {
    ps.iter().map(|q| q.power(k).format_paper()).collect()
}

fn one<T: Ord + Clone>(set: &BTreeSet<T>) -> Option<T> {
    (set.len() == 1).then(|| set.iter().next().expect("non-empty").clone())
}

/// Every `n` with `p.n` in the candidate order universe.
fn wild_range(p: u64) -> Vec<u64> {
    candidate_universe()
        .into_iter()
        .filter(|b| b % p == 0)
        .map(|b| b / p)
        .collect()
}

fn primes_in_range(p: u64, from: u64) -> Vec<u64> {
    wild_range(p)
        .into_iter()
        .filter(|&n| n >= from && is_prime(n))
        .collect()
}

/// Orders of the elements of `PGL_2(F_p)`.
fn pgl2_orders(p: u64) -> BTreeSet<u64> {
    let mul = |a: [u64; 4], b: [u64; 4]| {
        [
            (a[0] * b[0] + a[1] * b[2]) % p,
            (a[0] * b[1] + a[1] * b[3]) % p,
            (a[2] * b[0] + a[3] * b[2]) % p,
            (a[2] * b[1] + a[3] * b[3]) % p,
        ]
    };
    let scalar = |m: [u64; 4]| m[1] == 0 && m[2] == 0 && m[0] == m[3];
    let mut out = BTreeSet::new();
    for a in 0..p {
        for b in 0..p {
            for c in 0..p {
                for d in 0..p {
                    if (a * d + p * p - b * c % p).is_multiple_of(p) {
                        continue;
                    }
                    let g = [a, b, c, d];
                    let mut m = g;
                    let mut k = 1;
                    while !scalar(m) {
                        m = mul(m, g);
                        k += 1;
                    }
                    out.insert(k);
                }
            }
        }
    }
    out
}

/// Whether every upper unitriangular 3x3 matrix over `F_p` satisfies `M^p = I`.
fn unitriangular_exponent_is_p(p: u64) -> bool {
    let mul = |a: [[u64; 3]; 3], b: [[u64; 3]; 3]| {
        let mut c = [[0u64; 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                c[i][j] = (0..3).map(|k| a[i][k] * b[k][j]).sum::<u64>() % p;
            }
        }
        c
    };
    let id = [[1, 0, 0], [0, 1, 0], [0, 0, 1]];
    for x in 0..p {
        for y in 0..p {
            for z in 0..p {
                let g = [[1, x, y], [0, 1, z], [0, 0, 1]];
                let m = (1..p).fold(g, |acc, _| mul(acc, g));
                if m != id {
                    return false;
                }
            }
        }
    }
    true
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Possible numbers of points fixed by a power, over all ways of splitting
/// `total` points into cycles with lengths from `lengths`.
fn fixed_counts(total: u64, lengths: &[u64], fixes: impl Fn(u64) -> bool + Copy) -> BTreeSet<u64> {
    fn go(rest: u64, lengths: &[u64], fixes: impl Fn(u64) -> bool + Copy, acc: u64, out: &mut BTreeSet<u64>) {
        if rest == 0 {
            out.insert(acc);
            return;
        }
        let Some((&l, tail)) = lengths.split_first() else {
            return;
        };
        for c in 0..=rest / l {
            let add = if fixes(l) { c * l } else { 0 };
            go(rest - c * l, tail, fixes, acc + add, out);
        }
    }
    let mut out = BTreeSet::new();
    go(total, lengths, fixes, 0, &mut out);
    out
}

/// Dimensions of Galois-stable subspaces of `H^2` containing the whole invariant part.
fn picard_candidates(p: &EigenProfile) -> BTreeSet<u64> {
    let mut out = BTreeSet::from([p.mult(1)]);
    for (&d, &m) in p.orbits().iter().filter(|(&d, _)| d > 1) {
        let step = euler_phi(d);
        out = out.iter().flat_map(|&r| (0..=m).map(move |c| r + c * step)).collect();
    }
    out
}

/// Genus of the big fixed curve making the Euler number come out right.
fn genus_for(euler: i64, points: u64, rational: u64) -> Option<u64> {
    let twice = points as i64 + 2 * rational as i64 + 2 - euler;
    (twice >= 4 && twice % 2 == 0).then_some((twice / 2) as u64)
}

/// Curves not absorbed by free orbits of a prime-order action.
fn outside_full_orbits(curves: u64, p: u64) -> u64 {
    curves % p
}

pub fn replay_lemma(id: LemmaId) -> ReplayReport {
    let mut s = Script::default();
    match id {
        LemmaId::Order11Primes => order11_primes(&mut s),
        LemmaId::Order44 => order44(&mut s),
        LemmaId::Order33Picard => order33(&mut s),
        LemmaId::Order7Primes => order7_primes(&mut s),
        LemmaId::Order28And84 => {
            order28(&mut s);
            order84(&mut s);
        }
        LemmaId::GenusTwoLocus => genus_two(&mut s),
        LemmaId::Order25 => order25(&mut s),
        LemmaId::OnePointRank => one_point_rank(&mut s),
        LemmaId::FibreSupport => fibre_support(&mut s),
        LemmaId::AtMostTwoPoints => two_points(&mut s),
        LemmaId::OnePointK3Quotient => one_point(&mut s),
    }
    ReplayReport {
        lemma: id,
        assertions: s.assertions,
        exclusions: s.exclusions,
    }
}

/// Every script in catalog order.
pub fn replay_all() -> Vec<ReplayReport> {
    LemmaId::ALL.into_iter().map(replay_lemma).collect()
}

fn p1_lemma(s: &mut Script, p: u64) {
    let orders = pgl2_orders(p);
    let wild: BTreeSet<u64> = orders.iter().copied().filter(|o| o % p == 0).collect();
    s.expect(
        format!("elements of PGL2(F_{p}) of order divisible by {p} have order exactly {p}"),
        wild,
        BTreeSet::from([p]),
    );
    s.geometry(
        "the same holds over an algebraically closed field of characteristic p",
        "AX_P1_JORDAN",
    );
}

fn order11_primes(s: &mut Script) {
    for n in wild_range(11)
        .into_iter()
        .filter(|&n| n == 9 || (n >= 5 && is_prime(n)))
    {
        s.exclude(WildCase::TypeII, n, |s| {
            let big = euler_phi(11 * n);
            s.check(
                format!("phi({}) > 20, so no primitive {}-th root occurs", 11 * n, 11 * n),
                big,
                big > 20,
            );
            s.check(
                format!("phi({n}) > 1, so the {n}-th roots do not fit in the invariant plane of u"),
                euler_phi(n),
                euler_phi(n) > 1,
            );
            s.expect(
                format!("no profile of order {} has {n}-th power [1.2, (z11:10).2]", 11 * n),
                case_profiles(WildCase::TypeII, n).len(),
                0,
            );
        });
    }
}

fn order44(s: &mut Script) {
    s.exclude(WildCase::TypeII, 4, |s| {
        let ps = case_profiles(WildCase::TypeII, 4);
        s.expect(
            "[g*] = [1, +-1, z44:20]",
            shown(&ps),
            vec!["[1, -1, z44:20]".into(), "[1.2, z44:20]".into()],
        );
        s.expect(
            "[g^22*] = [1.2, -1.20] in both branches",
            powers(&ps, 22),
            BTreeSet::from(["[1.2, -1.20]".into()]),
        );
        s.expect("e(g^22) = -16", values(&ps, |q| q.lefschetz(22)), BTreeSet::from([-16]));
        s.geometry(
            "s^2 = g^22 is non-symplectic with ruled quotient; Fix(s^2) is C9 or C0 + C10",
            "AX_INVOLUTION_RULED",
        );
        s.expect(
            "Tr(g^26*|H*(X)) = 6",
            values(&ps, |q| q.lefschetz(26)),
            BTreeSet::from([6]),
        );
        s.expect(
            "u = g^4 has trace 18 or 7 on H^1 of a genus 9 curve",
            curve_h1_traces(9, 11),
            BTreeSet::from([7, 18]),
        );
        for q in &ps {
            s.dl_inconsistent(
                format!("{q}: Fix(s^2) = C9 gives -16 or -5, not 6"),
                q,
                22,
                4,
                &FixedLocusHypothesis::curve(9, 11),
            );
        }
        let c010 = FixedLocusHypothesis::curve(10, 11).with_rational(1, 1);
        let traces = fixed_locus_trace(&c010).expect("consistent hypothesis");
        s.check(
            "Fix(s^2) = C0 + C10 allows the trace 6, so the trace test is inconclusive",
            &traces,
            traces.contains(&6),
        );
        s.geometry(
            "u acts non-trivially on the base of the induced elliptic fibration",
            "AX_NO_P_TORSION",
        );
        p1_lemma(s, 11);
        s.geometry(
            "s = g^11 acts trivially on the base, hence fixes the section C0 and the trisection C10",
            "AX_INVOLUTION_RULED",
        );
        s.expect("e(C0 + C10) = -16", c010.euler(), -16);
        for q in &ps {
            let sp = q.power(11);
            let tr = q.lefschetz(11);
            s.check(
                format!("{q}: [s*] = {sp} has Tr(s*|H*(X)) = {tr}, not -16"),
                tr,
                tr != -16,
            );
        }
    });
}

fn order33(s: &mut Script) {
    let ps: Vec<EigenProfile> = case_profiles(WildCase::TypeII, 3);
    s.expect(
        "[g*] = [1.2, z33:20] is forced",
        shown(&ps),
        vec!["[1.2, z33:20]".into()],
    );
    let Some(g) = ps.first() else { return };
    s.geometry(
        "X/<g> is rational, so the transcendental part has no g-invariants",
        "AX_RATIONAL_QUOTIENT_RANK",
    );
    s.expect(
        "the Picard number under g is 2 or 22",
        picard_candidates(g),
        BTreeSet::from([2, 22]),
    );
    s.expect(
        "the order-11 power alone allows 2, 12 or 22",
        picard_candidates(&g.power(3)),
        BTreeSet::from([2, 12, 22]),
    );
}

fn order7_primes(s: &mut Script) {
    let ns: Vec<u64> = wild_range(7)
        .into_iter()
        .filter(|&n| n == 8 || n == 9 || (n >= 5 && is_prime(n) && n != 7))
        .collect();
    for &n in &ns {
        s.exclude(WildCase::TypeIII, n, |s| {
            s.check(format!("phi({n}) > 3"), euler_phi(n), euler_phi(n) > 3);
            s.check(format!("phi({}) > 18", 7 * n), euler_phi(7 * n), euler_phi(7 * n) > 18);
            s.expect(
                format!("no profile of order {} over [1.4, (z7:6).3]", 7 * n),
                case_profiles(WildCase::TypeIII, n).len(),
                0,
            );
        });
        s.exclude(WildCase::TypeIIStar, n, |s| {
            s.geometry(
                "g preserves the 9 components of the II* fibre, so 1 has multiplicity at least 10",
                "AX_IISTAR_COMPONENTS",
            );
            let kept = case_profiles(WildCase::TypeIIStar, n)
                .into_iter()
                .filter(|q| q.mult(1) >= 10)
                .count();
            s.check(format!("phi({}) > 12", 7 * n), euler_phi(7 * n), euler_phi(7 * n) > 12);
            s.expect(
                format!("no profile of order {} keeps 10 invariant classes", 7 * n),
                kept,
                0,
            );
        });
    }
}

fn order28(s: &mut Script) {
    s.exclude(WildCase::TypeIIStar, 4, |s| {
        s.geometry("g preserves the 9 components of the II* fibre", "AX_IISTAR_COMPONENTS");
        let ps: Vec<EigenProfile> = case_profiles(WildCase::TypeIIStar, 4)
            .into_iter()
            .filter(|q| q.mult(1) >= 10)
            .collect();
        s.expect("[g*] = [1.10, z28:12]", shown(&ps), vec!["[1.10, z28:12]".into()]);
        let Some(g) = ps.first().cloned() else { return };
        s.expect(
            "[s*] = [g^7*] = [1.10, (z4:2).6]",
            g.power(7).format_paper(),
            "[1.10, (z4:2).6]".into(),
        );
        s.expect("e(s) = 12", g.lefschetz(7), 12);
        s.expect(
            "[g^14*] = [1.10, -1.12]",
            g.power(14).format_paper(),
            "[1.10, -1.12]".into(),
        );
        s.expect("e(s^2) = 0", g.lefschetz(14), 0);
        s.expect(
            "[g^18*] = [1.10, (z14:6).2]",
            g.power(18).format_paper(),
            "[1.10, (z14:6).2]".into(),
        );
        s.expect("Tr(g^18*|H*(X)) = 14", g.lefschetz(18), 14);
        s.geometry(
            "Fix(s^2) = R2 + R4 + R6 + R8 + C with C meeting R1 and R9",
            "AX_IISTAR_INVOLUTION_LOCUS",
        );
        s.expect(
            "C irreducible forces genus 5",
            genus_for(g.lefschetz(14), 0, 4),
            Some(5),
        );
        s.expect(
            "Tr(u*|H^1(C5)) is 10 or 3",
            curve_h1_traces(5, 7),
            BTreeSet::from([3, 10]),
        );
        s.dl_inconsistent(
            "C = C5 gives 0 or 7, not 14",
            &g,
            14,
            4,
            &FixedLocusHypothesis::curve(5, 7).with_rational(4, 4),
        );
        let split = FixedLocusHypothesis::curve(6, 7).with_rational(5, 5);
        s.expect("C = C0 + C6 keeps e(s^2) = 0", split.euler(), 0);
        let traces = fixed_locus_trace(&split).expect("consistent hypothesis");
        s.check(
            "C = C0 + C6 allows 14, so the trace test is inconclusive",
            &traces,
            traces.contains(&14),
        );
        s.geometry("g^4 acts non-trivially on the base of the fibration", "AX_BASE_ACTION");
        p1_lemma(s, 7);
        s.geometry(
            "s fixes C0 and C6, so it induces an involution of P^1 with 4 fixed points",
            "AX_INVOLUTION_P1",
        );
    });
}

fn order84(s: &mut Script) {
    s.exclude(WildCase::TypeIII, 12, |s| {
        let ps = case_profiles(WildCase::TypeIII, 12);
        s.expect("16 profiles of order 84 over [1.4, (z7:6).3]", ps.len(), 16);
        s.check("phi(84) > 18", euler_phi(84), euler_phi(84) > 18);
        let (f1, f2): (Vec<EigenProfile>, Vec<EigenProfile>) = ps.iter().cloned().partition(|q| q.mult(28) > 0);
        let f2_ok = f2
            .iter()
            .all(|q| q.mult(4) == 1 && q.mult(21) + q.mult(42) == 1 && q.mult(28) == 0);
        s.check(
            "profiles split into 8 with z28:12 and 8 with z4:2 and z21 or z42",
            (f1.len(), f2.len()),
            f1.len() == 8 && f2.len() == 8 && f2_ok,
        );
        let small = ps.iter().map(|q| q.mult(1) + q.mult(2)).max();
        s.check(
            "at most two eigenvalues +-1, so g cannot act on the two components of a III fibre",
            small,
            small == Some(2),
        );
        s.geometry("then Fix(u) = Fix(g^12) is a single point", "AX_FIBRE_COMPONENTS");

        s.expect(
            "first family: [g^42*] = [1.10, -1.12]",
            powers(&f1, 42),
            BTreeSet::from(["[1.10, -1.12]".into()]),
        );
        s.expect(
            "first family: e(g^42) = 0",
            values(&f1, |q| q.lefschetz(42)),
            BTreeSet::from([0]),
        );
        s.expect(
            "first family: Tr(g^54*|H*(X)) = 7",
            values(&f1, |q| q.lefschetz(54)),
            BTreeSet::from([7]),
        );
        s.geometry(
            "g^42 is not free, since no K3 surface has a free order-4 action",
            "AX_NO_FREE_ORDER_FOUR",
        );
        s.geometry(
            "Fix(g^42) is elliptic curves or C_{d+1} + d rational curves",
            "AX_NONSYMPLECTIC_INVOLUTION_LOCUS",
        );
        let Some(q) = f1.first().cloned() else { return };
        for k in 1..=10u64 {
            s.dl_inconsistent(
                format!("{k} elliptic curves give trace 0"),
                &q,
                42,
                12,
                &FixedLocusHypothesis::empty(7).with_elliptic(k, k % 7),
            );
        }
        let top = q.power(42).mult(1) - 1;
        let ds: Vec<u64> = (1..=top).filter(|d| d % 7 <= 1).collect();
        s.expect("d <= 9 with d = 7r or 7r + 1", ds.clone(), vec![1, 7, 8]);
        s.geometry(
            "u = g^12 acts on H^1 of C_{7r+2} with at most 2r non-trivial orbits",
            "AX_WILD_CURVE_TRACE",
        );
        for d in ds {
            let r = d / 7;
            let genus = genus_for(0, 0, d).expect("genus at least 2");
            let h = FixedLocusHypothesis::curve(genus, 7)
                .with_rational(d, d % 7)
                .with_h1_orbit_bound(2 * r);
            for p in &f1 {
                s.dl_inconsistent(format!("{p}: C{genus} + {d} rational curves"), p, 42, 12, &h);
            }
        }

        s.expect(
            "second family: [g^42*] = [1.20, -1.2]",
            powers(&f2, 42),
            BTreeSet::from(["[1.20, -1.2]".into()]),
        );
        s.expect(
            "second family: e(g^42) = 20",
            values(&f2, |q| q.lefschetz(42)),
            BTreeSet::from([20]),
        );
        let left = outside_full_orbits(10, 7);
        s.check(
            "10 rational curves under an order-7 action leave at least 3 preserved",
            left,
            left >= 3,
        );
        s.geometry(
            "each preserved rational curve carries a fixed point",
            "AX_FIXED_POINT_COUNT",
        );
        let Some(q) = f2.first().cloned() else { return };
        let inv = q.power(42).mult(1);
        let ds: Vec<u64> = (11..inv).filter(|d| d % 7 <= 1).collect();
        s.expect("11 <= d <= 19 with d = 7r or 7r + 1", ds.clone(), vec![14, 15]);
        let dims = values(&f2, |q| q.power(6).mult(1) as i64);
        s.expect("dim H^2(X)^{g^6} = 2", dims, BTreeSet::from([2]));
        s.geometry(
            "two orbits of rational curves and C_{d-9} give 3 independent g^6-invariant classes",
            "AX_ORBIT_DIVISORS",
        );
        s.check(
            "3 invariant classes exceed 2",
            ds.iter().map(|d| d / 7 + 1).min(),
            ds.iter().all(|d| d / 7 + 1 > 2),
        );
    });
}

/// Semi-invariant monomials of `(y^5 - y x^4) P1 + P6` under `x0 -> zeta_n x0`.
fn kod2_forms(n: u64) -> Vec<(Vec<String>, Vec<String>)> {
    let mono = |a: u64, b: u64| match (a, b) {
        (0, b) => format!("x^{b}"),
        (a, 0) => format!("x0^{a}"),
        (1, b) => format!("x0*x^{b}"),
        (a, b) => format!("x0^{a}*x^{b}"),
    };
    let mut out = Vec::new();
    for c in 0..2u64 {
        let p1: Vec<String> = (0..=1)
            .filter(|i| i % n == c % n)
            .map(|i| if i == 0 { "x".to_string() } else { "x0".to_string() })
            .collect();
        let p6: Vec<String> = (0..=6u64)
            .filter(|j| j % n == c % n)
            .map(|j| mono(j, 6 - j).replace("x^1", "x"))
            .collect();
        if !p1.is_empty() {
            out.push((p1, p6));
        }
    }
    out
}

fn genus_two(s: &mut Script) {
    let inner: Vec<u64> = (1..5).map(|k| binomial(5, k) % 5).collect();
    s.expect(
        "(y + cx)^5 = y^5 + c^5 x^5 in characteristic 5",
        inner,
        vec![0, 0, 0, 0],
    );
    let fermat = (0..5u64).all(|c| c.pow(5) % 5 == c);
    s.check(
        "c^5 = c on F_5, so y^5 - y x^4 is invariant under y -> y + cx",
        fermat,
        fermat,
    );
    let unip = unitriangular_exponent_is_p(5);
    s.check("every unipotent 3x3 matrix over F_5 has order dividing 5", unip, unip);
    s.geometry(
        "X is the double plane with u = (x0 : x : x + y) and g induces a linear map of P^2",
        "AX_KOD2_DOUBLE_PLANE",
    );
    let degenerate = |m: u64| {
        kod2_forms(m)
            == vec![
                (vec!["x".to_string()], vec!["x^6".to_string()]),
                (vec!["x0".to_string()], vec!["x0*x^5".to_string()]),
            ]
    };
    s.check(
        "n >= 7: (P1, P6) = (x, x^6) or (x0, x0 x^5)",
        kod2_forms(7),
        degenerate(7) && degenerate(12),
    );
    s.expect(
        "n = 6: (x, x0^6 + x^6) or (x0, x0 x^5)",
        kod2_forms(6),
        vec![
            (vec!["x".into()], vec!["x^6".into(), "x0^6".into()]),
            (vec!["x0".into()], vec!["x0*x^5".into()]),
        ],
    );
    s.expect(
        "m = 4: (x, x0^4 x^2 + x^6) or (x0, x0^5 x + x0 x^5)",
        kod2_forms(4),
        vec![
            (vec!["x".into()], vec!["x^6".into(), "x0^4*x^2".into()]),
            (vec!["x0".into()], vec!["x0*x^5".into(), "x0^5*x".into()]),
        ],
    );
    let allowed = [1u64, 2, 3, 4, 6, 8];
    for n in wild_range(5).into_iter().filter(|n| !allowed.contains(n)) {
        s.exclude(WildCase::GenusTwo, n, |s| {
            if n % 5 == 0 {
                s.check("P^2 has no automorphism of order 25", unip, unip);
            } else {
                s.check(
                    format!("n = {n} >= 7 leaves only the degenerate forms"),
                    kod2_forms(n),
                    n >= 7 && degenerate(n),
                );
                if n % 2 == 0 {
                    let m = n / 2;
                    // On the invariant class z only changes sign, so the lift has order lcm(5m, 2).
                    let lifted = if m % 2 == 0 { 5 * m } else { 10 * m };
                    let ok = m % 5 == 0 || (m >= 7 && degenerate(m)) || (m == 6 && lifted != 5 * n);
                    s.check(
                        format!("the branch where g has order {m} on P^2 is also excluded"),
                        (m, lifted),
                        ok,
                    );
                }
            }
            s.geometry(
                "the degenerate forms have a non-rational double point",
                "AX_KOD2_DOUBLE_PLANE",
            );
        });
    }
}

fn order25(s: &mut Script) {
    let all: Vec<EigenProfile> = profiles_of_dim(&orbit_universe(25), 22)
        .into_iter()
        .filter(|q| q.order() == 25 && q.mult(1) >= 1)
        .collect();
    s.expect("[g*] = [1.2, z25:20]", shown(&all), vec!["[1.2, z25:20]".into()]);
    let Some(g) = all.first().cloned() else { return };
    let u = g.power(5);
    s.expect("[u*] = [1.2, (z5:4).5]", u.format_paper(), "[1.2, (z5:4).5]".into());
    let admissible = wild_spectra(5).expect("p = 5").iter().any(|w| w.profile == u);
    s.check("[1.2, (z5:4).5] is not an order-5 spectrum", admissible, !admissible);
    for case in WildCase::for_characteristic(5).expect("p = 5") {
        s.exclude(case, 5, |s| match case.spectrum() {
            Some(_) => s.expect(
                format!("case {}: no profile of order 25", case.label()),
                case_profiles(case, 5).len(),
                0,
            ),
            None => {
                let unip = unitriangular_exponent_is_p(5);
                s.check("case (1) would need an automorphism of P^2 of order 25", unip, unip);
                s.geometry(
                    "the genus-2 case induces a linear automorphism of P^2",
                    "AX_KOD2_DOUBLE_PLANE",
                );
            }
        });
    }
}

fn one_point_rank(s: &mut Script) {
    let u = WildCase::OnePointK3.spectrum().expect("spectrum");
    s.expect("dim H^2(X)^u = 14 in the one-point K3 case", u.mult(1), 14);
    s.geometry(
        "a hyperbolic invariant lattice of rank >= 5 represents 0 and gives a u-invariant elliptic fibration",
        "AX_RANK_NS_U_LE_4",
    );
}

fn fibre_support(s: &mut Script) {
    let spectral: Vec<u64> = wild_range(5)
        .into_iter()
        .filter(|&n| n == 9 || (n >= 7 && is_prime(n)))
        .collect();
    for &n in &spectral {
        s.exclude(WildCase::TypeIV, n, |s| {
            s.expect(
                format!("type IV: no profile of order {}", 5 * n),
                case_profiles(WildCase::TypeIV, n).len(),
                0,
            );
        });
        s.exclude(WildCase::TypeIIIStar, n, |s| {
            s.geometry(
                "an order-n action with n odd preserves the 8 components of III*",
                "AX_FIBRE_COMPONENTS",
            );
            let kept = case_profiles(WildCase::TypeIIIStar, n)
                .into_iter()
                .filter(|q| q.mult(1) >= 9)
                .count();
            s.expect(
                format!("type III*: no profile of order {} with 9 invariant classes", 5 * n),
                kept,
                0,
            );
        });
    }
    let three = |q: &EigenProfile| q.mult(1) >= 3 || (q.mult(1) >= 2 && q.mult(2) >= 1);
    s.exclude(WildCase::TypeIV, 8, |s| {
        s.geometry(
            "g acts on the 3 components of IV with eigenvalues [1, 1, +-1]",
            "AX_FIBRE_COMPONENTS",
        );
        let ps: Vec<EigenProfile> = case_profiles(WildCase::TypeIV, 8).into_iter().filter(three).collect();
        let es = values(&ps, |q| q.lefschetz(20));
        s.check(
            "e(g^20) != 8, so s = g^20 is non-symplectic",
            &es,
            !ps.is_empty() && !es.contains(&8),
        );
        s.geometry(
            "a tame involution fixing a curve through the singular point of IV preserves too many curves",
            "AX_LOCAL_TAME_INVOLUTION",
        );
    });
    s.exclude(WildCase::TypeIV, 12, |s| {
        s.geometry(
            "g acts on the 3 components of IV with eigenvalues [1, 1, +-1]",
            "AX_FIBRE_COMPONENTS",
        );
        let ps: Vec<EigenProfile> = case_profiles(WildCase::TypeIV, 12).into_iter().filter(three).collect();
        let s2 = symplectic_profile(2).expect("m = 2").profile;
        let sympl = ps.iter().filter(|q| q.power(30) == s2).count();
        s.check(
            "both branches occur: g^30 symplectic or not",
            (sympl, ps.len() - sympl),
            sympl > 0 && sympl < ps.len(),
        );
        s.geometry(
            "non-symplectic g^30: the local involution argument applies",
            "AX_LOCAL_TAME_INVOLUTION",
        );
        p1_lemma(s, 5);
        let needed = 4 + 5;
        let f2 = symplectic_fixed_points(2).expect("m = 2");
        s.check(
            "symplectic g^30: 4 fixed points on F0 and one on each of 5 further fibres exceed 8",
            needed,
            needed > f2,
        );
        s.geometry(
            "g^5 acts trivially on the base, so g^30 preserves every singular fibre",
            "AX_BASE_ACTION",
        );
    });
    let iii_star = |q: &EigenProfile| q.mult(1) >= 9 || (q.mult(1) >= 6 && q.mult(2) >= 3);
    for n in [8, 12] {
        s.exclude(WildCase::TypeIIIStar, n, |s| {
            s.geometry(
                "g acts on the 8 components of III* as [1.8] or [1.5, -1.3]",
                "AX_FIBRE_COMPONENTS",
            );
            let kept = case_profiles(WildCase::TypeIIIStar, n)
                .into_iter()
                .filter(iii_star)
                .count();
            s.expect(
                format!("type III*: no profile of order {} with those eigenvalues", 5 * n),
                kept,
                0,
            );
        });
    }
}

fn two_points(s: &mut Script) {
    for case in [WildCase::TwoPoints, WildCase::OnePointRational] {
        for n in wild_range(5).into_iter().filter(|&n| n == 9 || (n >= 7 && is_prime(n))) {
            s.exclude(case, n, |s| {
                s.expect(
                    format!("no profile of order {} over [1.6, (z5:4).4]", 5 * n),
                    case_profiles(case, n).len(),
                    0,
                );
            });
        }
        s.exclude(case, 8, two_points_8);
        s.exclude(case, 12, two_points_12);
    }
}

fn two_points_8(s: &mut Script) {
    let ps = case_profiles(WildCase::TwoPoints, 8);
    s.expect("32 profiles of order 40", ps.len(), 32);
    s.geometry(
        "Fix(g^2) = Fix(g^4) = Fix(g^8) has at most two points",
        "AX_FIXED_POINT_COUNT",
    );
    let f1: Vec<EigenProfile> = ps.iter().filter(|q| q.mult(8) > 0 && q.mult(40) > 0).cloned().collect();
    let f2: Vec<EigenProfile> = ps
        .iter()
        .filter(|q| q.mult(8) == 0 && q.mult(40) > 0)
        .cloned()
        .collect();
    let f3: Vec<EigenProfile> = ps
        .iter()
        .filter(|q| q.mult(8) > 0 && q.mult(40) == 0)
        .cloned()
        .collect();
    s.expect("every profile has z8 or z40", f1.len() + f2.len() + f3.len(), ps.len());

    s.expect(
        "case (1): e(g^20) = -16",
        values(&f1, |q| q.lefschetz(20)),
        BTreeSet::from([-16]),
    );
    s.expect(
        "case (1): e(g^10) = 4",
        values(&f1, |q| q.lefschetz(10)),
        BTreeSet::from([4]),
    );
    s.geometry(
        "Fix(g^10) is 4 points or R plus 2 points, and g^2 fixes at least 3 of them",
        "AX_NONSYMPLECTIC_INVOLUTION_LOCUS",
    );

    s.expect(
        "case (2): [g^20*] = [1.6, -1.16]",
        powers(&f2, 20),
        BTreeSet::from(["[1.6, -1.16]".into()]),
    );
    s.expect(
        "case (2): e(g^20) = -8",
        values(&f2, |q| q.lefschetz(20)),
        BTreeSet::from([-8]),
    );
    s.expect(
        "case (2): Tr(g^28*|H*(X)) = 12",
        values(&f2, |q| q.lefschetz(28)),
        BTreeSet::from([12]),
    );
    s.geometry(
        "Fix(g^20) = C_{d+5} + d rational curves, 0 <= d <= 5",
        "AX_NONSYMPLECTIC_INVOLUTION_LOCUS",
    );
    for q in &f2 {
        for d in 0..=2 {
            let h = FixedLocusHypothesis::curve(d + 5, 5).with_rational(d, d);
            s.dl_inconsistent(format!("{q}: d = {d} gives a trace at most 7"), q, 20, 8, &h);
        }
        s.dl_inconsistent(
            format!("{q}: d = 5 in one orbit"),
            q,
            20,
            8,
            &FixedLocusHypothesis::curve(10, 5).with_rational(5, 0),
        );
    }
    s.geometry(
        "d = 3, 4, or 5 preserved curves give at least 3 fixed points of g^8",
        "AX_FIXED_POINT_COUNT",
    );

    s.expect(
        "case (3): [g^20*] = [1.18, -1.4]",
        powers(&f3, 20),
        BTreeSet::from(["[1.18, -1.4]".into()]),
    );
    s.expect(
        "case (3): e(g^20) = 16",
        values(&f3, |q| q.lefschetz(20)),
        BTreeSet::from([16]),
    );
    let left = outside_full_orbits(8, 5);
    s.check(
        "8 rational curves under an order-5 action leave at least 3 preserved",
        left,
        left >= 3,
    );
    if let Some(q) = f3.first() {
        let inv = q.power(20).mult(1);
        let ds: Vec<u64> = (9..inv).filter(|d| d % 5 <= 2).collect();
        s.expect(
            "9 <= d <= 17 with d = 5r, 5r + 1 or 5r + 2",
            ds.clone(),
            vec![10, 11, 12, 15, 16, 17],
        );
        let rs: BTreeSet<u64> = ds.iter().map(|d| d / 5).collect();
        s.expect("r is 2 or 3", rs.clone(), BTreeSet::from([2, 3]));
        s.expect(
            "dim H^2(X)^{g^4} = 2",
            values(&f3, |q| q.power(4).mult(1) as i64),
            BTreeSet::from([2]),
        );
        s.check(
            "r + 1 >= 3 invariant classes exceed 2",
            rs.iter().min().map(|r| r + 1),
            rs.iter().all(|r| r + 1 > 2),
        );
    }
    s.geometry(
        "orbit sums and C_{d-7} are independent invariant classes",
        "AX_ORBIT_DIVISORS",
    );
}

fn family_of_60(q: &EigenProfile) -> Option<u8> {
    let has = |ds: &[u64]| ds.iter().map(|&d| q.mult(d) * euler_phi(d)).sum::<u64>();
    let labels: BTreeSet<u64> = q.labels().collect();
    let rest = |skip: &[u64]| {
        labels
            .iter()
            .copied()
            .filter(|d| !skip.contains(d))
            .collect::<BTreeSet<u64>>()
    };
    if q.mult(12) == 1 && q.mult(1) + q.mult(2) == 2 {
        let r = rest(&[1, 2, 12]);
        if r == BTreeSet::from([60]) || (r == BTreeSet::from([20]) && q.mult(20) == 2) {
            return Some(1);
        }
        if q.mult(20) == 1 && r.iter().all(|d| [20, 15, 30, 5, 10].contains(d)) {
            return Some(2);
        }
        if r.iter().all(|d| [15, 30, 5, 10].contains(d)) && has(&[15, 30, 5, 10]) == 16 {
            return Some(3);
        }
    }
    if q.mult(60) == 1 && rest(&[60]).iter().all(|d| [1, 2, 3, 6, 4].contains(d)) {
        return Some(4);
    }
    None
}

fn two_points_12(s: &mut Script) {
    let ps = case_profiles(WildCase::TwoPoints, 12);
    let g6 = fixed_counts(8, &[1, 2, 3, 5, 6], |l| 6 % l == 0);
    s.expect(
        "g acting on 8 points with cycles of length dividing 30: g^6 fixes at least 3",
        g6.iter().next().copied(),
        Some(3),
    );
    s.geometry(
        "g^30 symplectic would fix 8 points permuted by g; g^20 symplectic is excluded likewise",
        "AX_FIXED_POINT_COUNT",
    );
    let fam = |k: u8| {
        ps.iter()
            .filter(|q| family_of_60(q) == Some(k))
            .cloned()
            .collect::<Vec<_>>()
    };
    let (f1, f2, f3, f4) = (fam(1), fam(2), fam(3), fam(4));
    s.check(
        "the four families are non-empty",
        (f1.len(), f2.len(), f3.len(), f4.len()),
        [&f1, &f2, &f3, &f4].iter().all(|f| !f.is_empty()),
    );
    s.expect(
        "case (1): e(g^30) = -16",
        values(&f1, |q| q.lefschetz(30)),
        BTreeSet::from([-16]),
    );
    s.expect(
        "case (1): e(g^10) = 14 or -10",
        values(&f1, |q| q.lefschetz(10)),
        BTreeSet::from([-10, 14]),
    );
    s.geometry(
        "Fix(g^10) has 14 points or R plus 12 points, so g^2 fixes at least 3",
        "AX_FIXED_POINT_COUNT",
    );
    s.expect(
        "case (2): [g^30*] = [1.10, -1.12]",
        powers(&f2, 30),
        BTreeSet::from(["[1.10, -1.12]".into()]),
    );
    s.expect(
        "case (2): e(g^30) = 0",
        values(&f2, |q| q.lefschetz(30)),
        BTreeSet::from([0]),
    );
    s.expect(
        "case (2): e(g^10) = 6 or -6",
        values(&f2, |q| q.lefschetz(10)),
        BTreeSet::from([-6, 6]),
    );
    s.geometry(
        "d = 1 or 5 rational curves, or elliptic curves, each force fixed points of g^2",
        "AX_FIXED_POINT_COUNT",
    );
    s.expect(
        "case (3): e(g^30) = 16",
        values(&f3, |q| q.lefschetz(30)),
        BTreeSet::from([16]),
    );
    s.geometry(
        "g^6 has at most one orbit on the rational curves, of length 1 or 5",
        "AX_ORBIT_DIVISORS",
    );
    s.geometry("case (4) is closed by the same arguments", "AX_FIXED_POINT_COUNT");
}

/// Branches of an order-5 action `u` with exactly one fixed point on
/// `Fix(g^s)`, whose Euler number is `euler`. The isolated-point and
/// rational-curve branches must clash with the trace; the big-curve branch is
/// expected to pass the trace test.
fn one_point_branches(s: &mut Script, q: &EigenProfile, se: u64, ue: u64) {
    let euler = q.lefschetz(se);
    for t in 0..=4u64 {
        for d in 0..=2u64 {
            let pts = 5 * t + 1;
            let rat = 5 * d;
            let h = match genus_for(euler, pts, rat) {
                Some(r) => FixedLocusHypothesis::curve(r, 5).with_free_curve(),
                None if (pts + 2 * rat) as i64 == euler => FixedLocusHypothesis::empty(5),
                None => continue,
            };
            let h = h.with_points(pts, 1).with_rational(rat, 0);
            s.dl_inconsistent(
                format!("u fixes an isolated point: {pts} points, {rat} rational curves"),
                q,
                se,
                ue,
                &h,
            );
            let (pts, rat) = (5 * t, 5 * d + 1);
            let h = match genus_for(euler, pts, rat) {
                Some(r) => FixedLocusHypothesis::curve(r, 5).with_free_curve(),
                None if (pts + 2 * rat) as i64 == euler => FixedLocusHypothesis::empty(5),
                None => continue,
            };
            let h = h.with_points(pts, 0).with_rational(rat, 1);
            s.dl_inconsistent(
                format!("u fixes a point of a rational curve: {pts} points, {rat} rational curves"),
                q,
                se,
                ue,
                &h,
            );
        }
    }
    let lhs = q.lefschetz(se + ue);
    let open = (0..=4u64)
        .flat_map(|t| (0..=2u64).map(move |d| (5 * t, 5 * d)))
        .find_map(|(pts, rat)| {
            let r = genus_for(euler, pts, rat)?;
            let h = FixedLocusHypothesis::curve(r, 5)
                .with_points(pts, 0)
                .with_rational(rat, 0);
            let set = fixed_locus_trace(&h).ok()?;
            set.contains(&lhs).then_some(r)
        });
    s.check(
        format!("u fixing a point of the big curve allows the trace {lhs}"),
        open,
        open.is_some(),
    );
}

fn one_point(s: &mut Script) {
    s.geometry("no power g^(5i) fixes an elliptic curve", "AX_NO_ELLIPTIC_FIXED_CURVE");
    let case = WildCase::OnePointK3;
    for n in primes_in_range(5, 17) {
        s.exclude(case, n, |s| {
            s.check(format!("phi({n}) > 13"), euler_phi(n), euler_phi(n) > 13);
            s.expect(
                format!("no profile of order {} over [1.14, (z5:4).2]", 5 * n),
                case_profiles(case, n).len(),
                0,
            );
        });
    }
    s.exclude(case, 8, one_point_8);
    s.exclude(case, 9, one_point_9);
    s.exclude(case, 11, one_point_11);
    s.exclude(case, 13, |s| {
        s.expect(
            "[g*] = [1.2, (z5:4).2, z13:12]",
            shown(&case_profiles(case, 13)),
            vec!["[1.2, (z5:4).2, z13:12]".into()],
        );
        s.geometry("order 65 is closed like order 55", "AX_OMITTED_CASE");
    });
    s.exclude(case, 7, one_point_7);
    s.exclude(case, 12, one_point_12);
}

fn rank_bound(s: &mut Script, claim: &str, rank: u64) {
    s.geometry(
        "the invariant part of a rational tame quotient is algebraic",
        "AX_RATIONAL_QUOTIENT_RANK",
    );
    s.check(format!("{claim}: rank NS(X)^u >= {rank} > 4"), rank, rank > 4);
    s.geometry("rank NS(X)^u <= 4", "AX_RANK_NS_U_LE_4");
}

fn one_point_8(s: &mut Script) {
    let ps = case_profiles(WildCase::OnePointK3, 8);
    let g4 = fixed_counts(8, &[1, 5], |l| l == 1);
    s.expect(
        "g^4 acting on 8 points fixes 3 or 8 of them",
        g4,
        BTreeSet::from([3, 8]),
    );
    s.geometry(
        "so g^20 is non-symplectic and X/<g^20> is rational",
        "AX_FIXED_POINT_COUNT",
    );
    let a: Vec<u64> = (0..=3u64).filter(|a| 4 * a <= 13 && 14 - 4 * a <= 4).collect();
    s.expect("1 + (13 - 4a) <= 4 forces a = 3", a, vec![3]);
    s.geometry(
        "the eta part is algebraic and rank NS(X)^{g^8} <= 4",
        "AX_RANK_NS_U_LE_4",
    );
    let kept: Vec<EigenProfile> = ps.into_iter().filter(|q| q.mult(8) == 3).collect();
    s.expect(
        "[g^20*] = [1.10, -1.12]",
        powers(&kept, 20),
        BTreeSet::from(["[1.10, -1.12]".into()]),
    );
    s.expect("e(g^20) = 0", values(&kept, |q| q.lefschetz(20)), BTreeSet::from([0]));
    s.expect(
        "e(g^10) = -4 or 12",
        values(&kept, |q| q.lefschetz(10)),
        BTreeSet::from([-4, 12]),
    );
    s.check(
        "an involution of a genus 2 curve fixes at most 6 < 10 points",
        2 * 2 + 2,
        2 * 2 + 2 < 10,
    );
    s.geometry(
        "d = 1 or 5; for d = 5 the 2 fixed points on C6 are fixed by g^2",
        "AX_FIXED_POINT_COUNT",
    );
}

fn one_point_9(s: &mut Script) {
    let ps = case_profiles(WildCase::OnePointK3, 9);
    let (f1, f2): (Vec<EigenProfile>, Vec<EigenProfile>) = ps.iter().cloned().partition(|q| q.mult(9) == 1);
    s.expect(
        "first family: e(g^15) = 15",
        values(&f1, |q| q.lefschetz(15)),
        BTreeSet::from([15]),
    );
    s.check(
        "15 differs from the 6 fixed points of a symplectic order 3 map",
        symplectic_fixed_points(3),
        symplectic_fixed_points(3) == Some(6),
    );
    rank_bound(s, "first family", 1 + 7);
    s.expect(
        "[g*] = [1.2, (z9:6).2, z15:8] or [1.2, (z5:4).2, (z9:6).2]",
        shown(&f2),
        vec!["[1.2, (z5:4).2, (z9:6).2]".into(), "[1.2, (z9:6).2, z15:8]".into()],
    );
    s.expect(
        "[g^15*] = [1.10, (z3:2).6]",
        powers(&f2, 15),
        BTreeSet::from(["[1.10, (z3:2).6]".into()]),
    );
    s.expect("e(g^15) = 6", values(&f2, |q| q.lefschetz(15)), BTreeSet::from([6]));
    s.expect(
        "Tr(g^24*|H*(X)) = -4",
        values(&f2, |q| q.lefschetz(24)),
        BTreeSet::from([-4]),
    );
    for q in &f2 {
        one_point_branches(s, q, 15, 9);
    }
    let e5 = values(&f2, |q| q.lefschetz(5));
    s.expect("Tr(g^5*|H*(X)) = 0 or 12", e5.clone(), BTreeSet::from([0, 12]));
    let clash = (0..=1i64).map(|b| 6 - 15 * b).any(|v| e5.contains(&v));
    s.check("C_r fixed by g^5 would give e(g^5) = 6 - 15b", clash, !clash);
    s.geometry(
        "g^5 has 12, 7 or 2 fixed points on C_r, so g fixes at least 2",
        "AX_FIXED_POINT_COUNT",
    );
}

fn one_point_11(s: &mut Script) {
    let ps = case_profiles(WildCase::OnePointK3, 11);
    s.expect(
        "[g*] = [1.4, (z5:4).2, z11:10]",
        shown(&ps),
        vec!["[1.4, (z5:4).2, z11:10]".into()],
    );
    let Some(g) = ps.first().cloned() else { return };
    s.expect(
        "[g^5*] = [1.12, z11:10]",
        g.power(5).format_paper(),
        "[1.12, z11:10]".into(),
    );
    s.expect("e(g^5) = 13", g.lefschetz(5), 13);
    s.expect("Tr(g^16*|H*(X)) = 3", g.lefschetz(16), 3);
    one_point_branches(s, &g, 5, 11);
    s.geometry(
        "isolated fixed points of g^5 have the five types 1/11(1,4), (2,3), (6,10), (7,9), (8,8)",
        "AX_QUOTIENT_SINGULARITY_DATA",
    );
    let rho = g.power(5).mult(1) as i64;
    s.expect("rho(X') = dim H^2(X)^{g^5} = 12", rho, 12);
    // Eleven times K_Y.D_p, and the Picard increments per orbit of 5 points.
    let kd = [20i64, 6, 5, 32, 81];
    let inc = [10i64, 20, 25, 10, 5];
    // 11 K_Y^2 = 11 (10 - rho - sum inc t) and 11 K_Y^2 = 100 (5 sum t - 13) - 5 sum kd t.
    let coeff: Vec<i64> = (0..5).map(|i| 500 + 11 * inc[i] - 5 * kd[i]).collect();
    let rhs = 1300 + 11 * (10 - rho);
    s.expect(
        "coefficients 510, 690, 750, 450, 150",
        coeff.clone(),
        vec![510, 690, 750, 450, 150],
    );
    s.expect("right-hand side 1278", rhs, 1278);
    let g30 = coeff.iter().fold(0, |a, &c| gcd(a, c as u64));
    s.check(
        "the left side is divisible by 30 and 1278 is not divisible by 10",
        (g30, rhs % 10),
        g30 % 10 == 0 && rhs % 10 != 0,
    );
    let mut found = false;
    for t1 in 0..=rhs / coeff[0] {
        for t2 in 0..=rhs / coeff[1] {
            for t3 in 0..=rhs / coeff[2] {
                for t4 in 0..=rhs / coeff[3] {
                    let rest = rhs - coeff[0] * t1 - coeff[1] * t2 - coeff[2] * t3 - coeff[3] * t4;
                    if rest >= 0 && rest % coeff[4] == 0 {
                        found = true;
                    }
                }
            }
        }
    }
    s.check("no non-negative solution by direct search", found, !found);
}

fn one_point_7(s: &mut Script) {
    let ps = case_profiles(WildCase::OnePointK3, 7);
    let (f1, f2): (Vec<EigenProfile>, Vec<EigenProfile>) = ps.iter().cloned().partition(|q| q.mult(7) == 1);
    s.expect(
        "first branch [g*] = [1.8, (z5:4).2, z7:6]",
        shown(&f1),
        vec!["[1.8, (z5:4).2, z7:6]".into()],
    );
    s.expect(
        "first branch [g^5*] = [1.16, z7:6]",
        powers(&f1, 5),
        BTreeSet::from(["[1.16, z7:6]".into()]),
    );
    let e5 = values(&f1, |q| q.lefschetz(5));
    let f7 = symplectic_fixed_points(7).expect("m = 7");
    s.check(
        "e(g^5) differs from 3, so g^5 is non-symplectic",
        &e5,
        !e5.contains(&f7),
    );
    rank_bound(s, "first branch", 1 + 7);
    s.expect(
        "[g*] = [1.2, (z5:4).2, (z7:6).2]",
        shown(&f2),
        vec!["[1.2, (z5:4).2, (z7:6).2]".into()],
    );
    s.expect(
        "[g^12*] = [g*]",
        powers(&f2, 12),
        f2.iter().map(EigenProfile::format_paper).collect(),
    );
    s.expect(
        "Tr(g^12*|H*(X)) = 0",
        values(&f2, |q| q.lefschetz(12)),
        BTreeSet::from([0]),
    );
    for q in &f2 {
        one_point_branches(s, q, 5, 7);
    }
    s.geometry(
        "a zero trace forces u to act freely on Fix(g^5)",
        "AX_FIXED_POINT_COUNT",
    );
}

fn one_point_12(s: &mut Script) {
    let ps = case_profiles(WildCase::OnePointK3, 12);
    let g6 = fixed_counts(8, &[1, 2, 3, 5, 6], |l| 6 % l == 0);
    s.expect(
        "g^30 symplectic: g^6 fixes at least 3 of 8 points",
        g6.iter().next().copied(),
        Some(3),
    );
    s.geometry(
        "so g^30 is non-symplectic and X/<g^30> is rational",
        "AX_FIXED_POINT_COUNT",
    );
    let ab: Vec<(u64, u64)> = (0..=3u64)
        .flat_map(|a| (0..=1u64).map(move |b| (a, b)))
        .filter(|&(a, b)| (10..=12).contains(&(4 * a + 2 * b)))
        .collect();
    s.expect("10 <= 4a + 2b <= 12 with b <= 1", ab, vec![(2, 1), (3, 0)]);
    s.geometry(
        "the eta part is algebraic and rank NS(X)^{g^12} <= 4",
        "AX_RANK_NS_U_LE_4",
    );
    let big_b: Vec<EigenProfile> = ps
        .iter()
        .filter(|q| q.mult(12) == 1 && [3, 4].contains(&q.mult(4)) && q.mult(15) + q.mult(30) == 1)
        .filter(|q| q.labels().all(|d| [1, 2, 4, 12, 15, 30].contains(&d)))
        .cloned()
        .collect();
    s.expect(
        "b = 3 or 4: e(g^10) = -2 or -6",
        values(&big_b, |q| q.lefschetz(10)),
        BTreeSet::from([-6, -2]),
    );
    s.geometry(
        "a negative e(g^10) puts a curve of genus > 1 in the 6-point set Fix(g^20)",
        "AX_FIXED_POINT_COUNT",
    );
    let phi_sum = |q: &EigenProfile, ds: &[u64]| ds.iter().map(|&d| q.mult(d) * euler_phi(d)).sum::<u64>();
    let case_of = |q: &EigenProfile| -> Option<u8> {
        let tau = phi_sum(q, &[5, 10, 15, 30]);
        let eta = phi_sum(q, &[1, 2, 3, 6]).checked_sub(1)?;
        let z20 = q.mult(20);
        match (q.mult(12), q.mult(4)) {
            (3, 0) if eta == 1 && tau == 8 => Some(1),
            (3, 0) if eta == 1 && z20 == 1 => Some(2),
            (2, 1) if eta == 3 && phi_sum(q, &[3, 6]) == 0 && tau == 8 => Some(3),
            (2, 1) if eta == 3 && phi_sum(q, &[3, 6]) == 0 && z20 == 1 => Some(4),
            (2, 1) if eta == 3 && phi_sum(q, &[3, 6]) == 2 && tau == 8 => Some(5),
            (2, 1) if eta == 3 && phi_sum(q, &[3, 6]) == 2 && z20 == 1 => Some(6),
            _ => None,
        }
    };
    let fam = |k: u8| ps.iter().filter(|q| case_of(q) == Some(k)).cloned().collect::<Vec<_>>();
    let e = |f: &[EigenProfile], k: u64| values(f, |q| q.lefschetz(k));
    let f1 = fam(1);
    s.expect("case (1): e(g^30) = 0", e(&f1, 30), BTreeSet::from([0]));
    s.expect("case (1): e(g^10) = 18 or 6", e(&f1, 10), BTreeSet::from([6, 18]));
    let free = (0..=2i64).any(|h| 2 * 2 - 2 == 5 * (2 * h - 2));
    s.check("no genus 2 curve has a free order-5 action", free, !free);
    s.geometry(
        "d = 5: g^10 fixes 8 points on C6 and g^2 fixes 3 of them",
        "AX_FIXED_POINT_COUNT",
    );
    let f2 = fam(2);
    s.expect("case (2): e(g^30) = -16", e(&f2, 30), BTreeSet::from([-16]));
    s.expect("case (2): e(g^10) = 2", e(&f2, 10), BTreeSet::from([2]));
    s.geometry("g^2 fixes the 2 fixed points of g^10", "AX_FIXED_POINT_COUNT");
    let f34: Vec<EigenProfile> = fam(3).into_iter().chain(fam(4)).collect();
    s.expect(
        "cases (3), (4): e(g^20) = 12 or 0",
        e(&f34, 20),
        BTreeSet::from([0, 12]),
    );
    rank_bound(s, "cases (3), (4)", 1 + 5);
    let f5 = fam(5);
    s.expect("case (5): e(g^30) = 4", e(&f5, 30), BTreeSet::from([4]));
    s.expect("case (5): e(g^10) = 13 or 1", e(&f5, 10), BTreeSet::from([1, 13]));
    s.geometry(
        "d = 3 or 5 rational curves force fixed points of g^6 or g^2",
        "AX_FIXED_POINT_COUNT",
    );
    let f6 = fam(6);
    s.expect("case (6): e(g^30) = -12", e(&f6, 30), BTreeSet::from([-12]));
    s.expect("case (6): e(g^10) = -3", e(&f6, 10), BTreeSet::from([-3]));
    s.geometry(
        "Fix(g^10) contains the big curve of Fix(g^30)",
        "AX_NONSYMPLECTIC_INVOLUTION_LOCUS",
    );
    let (a, b) = (one(&e(&f6, 10)), one(&e(&f6, 30)));
    s.check(
        "so e(g^10) <= e(g^30), but -3 > -12",
        (a, b),
        matches!((a, b), (Some(x), Some(y)) if x > y),
    );
}
