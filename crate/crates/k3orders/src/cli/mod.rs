//! Command-line front end. `run` never panics on bad input; it returns the exit code.
//!
//! Exit codes: 0 success, 1 a replay assertion or catalog verification failed,
//! 2 usage error.

use std::collections::{BTreeMap, BTreeSet};
use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::cyclotomic_core::{euler_phi, is_prime};
use crate::surface_models::{verify_all, verify_entry, CheckStatus, VerificationReport, VerificationSummary};
use crate::tame_engine::sets::{b_set, beta, group_bound, ord_set, table1, tv_set, GroupBound};
use crate::tame_engine::{
    candidate_universe, classify_order, classify_shape, Certificate, Detail, OrderReport, OrderShape, ShapeReport,
};
use crate::wild_replay::{
    classify_wild, replay_all, replay_lemma, AssertionStatus, CaseReason, LemmaId, ReplayReport, WildClassification,
    WildEntry, WildStatus,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "k3orders", version, about = "Finite automorphism orders of K3 surfaces")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify every candidate order, or a single one.
    Classify {
        #[arg(long = "char")]
        characteristic: u64,
        #[arg(long)]
        order: Option<u64>,
    },
    /// One order shape m.n with its certificates.
    Shape {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        n: u64,
        #[arg(long = "char", default_value_t = 0)]
        characteristic: u64,
    },
    /// Ord_p, TV_p, B_p and beta_p.
    Sets {
        #[arg(long = "char")]
        characteristic: u64,
    },
    /// Integers n with phi(n) <= 21, by phi(n).
    Table1,
    /// Replay the wild exclusion scripts.
    Replay {
        #[arg(long, conflicts_with = "all", required_unless_present = "all")]
        lemma: Option<String>,
        #[arg(long)]
        all: bool,
    },
    /// Verify the example catalog.
    Verify {
        #[arg(long = "char")]
        characteristic: u64,
        #[arg(long)]
        id: Option<String>,
    },
    /// Group-order bounds.
    Bounds {
        #[arg(long = "char")]
        characteristic: u64,
    },
}

struct Output {
    text: String,
    json: serde_json::Value,
    code: i32,
}

fn output<T: Serialize>(value: &T, text: String, code: i32) -> Output {
    Output {
        text,
        json: serde_json::to_value(value).expect("reports serialize"),
        code,
    }
}

/// Parses `args` (program name first), runs the subcommand, writes to `out`/`err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let sink: &mut dyn Write = if code == EXIT_OK { out } else { err };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match dispatch(&cli.command) {
        Ok(o) => {
            let body = match cli.format {
                Format::Text => o.text,
                Format::Json => serde_json::to_string_pretty(&o.json).expect("json") + "\n",
            };
            if out.write_all(body.as_bytes()).is_err() {
                return EXIT_FAILED;
            }
            o.code
        }
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn characteristic(c: u64) -> Result<u64, String> {
    if c == 0 || is_prime(c) {
        Ok(c)
    } else {
        Err(format!("characteristic {c} is neither 0 nor a prime"))
    }
}

fn prime(c: u64) -> Result<u64, String> {
    if is_prime(c) {
        Ok(c)
    } else {
        Err(format!("{c} is not a prime"))
    }
}

fn dispatch(cmd: &Command) -> Result<Output, String> {
    match *cmd {
        Command::Classify {
            characteristic: c,
            order,
        } => classify(characteristic(c)?, order),
        Command::Shape {
            m,
            n,
            characteristic: c,
        } => {
            let c = characteristic(c)?;
            if m == 0 || n == 0 {
                return Err("m and n must be positive".into());
            }
            let r = classify_shape(OrderShape::new(m, n), c).map_err(|e| e.to_string())?;
            let text = shape_text(&r, c);
            Ok(output(&r, text, EXIT_OK))
        }
        Command::Sets { characteristic: c } => sets(characteristic(c)?),
        Command::Table1 => {
            let t = table1();
            Ok(output(&t, table1_text(&t), EXIT_OK))
        }
        Command::Replay { ref lemma, all } => {
            let reports = match (lemma, all) {
                (_, true) => replay_all(),
                (Some(id), false) => vec![replay_lemma(id.parse::<LemmaId>().map_err(|e| e.to_string())?)],
                (None, false) => return Err("give --lemma <id> or --all".into()),
            };
            let ok = reports.iter().all(ReplayReport::passed);
            let text = replay_text(&reports);
            Ok(output(&reports, text, if ok { EXIT_OK } else { EXIT_FAILED }))
        }
        Command::Verify {
            characteristic: c,
            ref id,
        } => {
            let c = characteristic(c)?;
            match id {
                Some(id) => {
                    let r = verify_entry(id, c).map_err(|e| e.to_string())?;
                    let code = if r.as_designed { EXIT_OK } else { EXIT_FAILED };
                    Ok(output(&r, report_text(&r), code))
                }
                None => {
                    let s = verify_all(Some(c));
                    let code = if s.all_as_designed { EXIT_OK } else { EXIT_FAILED };
                    Ok(output(&s, summary_text(&s), code))
                }
            }
        }
        Command::Bounds { characteristic: c } => {
            let b = group_bound(prime(c)?).map_err(|e| e.to_string())?;
            Ok(output(&b, bounds_text(&b), EXIT_OK))
        }
    }
}

#[derive(Serialize)]
struct OrderLine {
    order: u64,
    feasible: bool,
    /// Feasible shapes `m.n`.
    shapes: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    annotations: Vec<String>,
}

#[derive(Serialize)]
struct ClassifySummary {
    characteristic: u64,
    label: &'static str,
    orders: BTreeSet<u64>,
    tame: Vec<OrderLine>,
    #[serde(skip_serializing_if = "Option::is_none")]
    wild: Option<WildClassification>,
}

fn order_line(r: &OrderReport) -> OrderLine {
    let feasible: Vec<&ShapeReport> = r.shapes.iter().filter(|s| s.is_feasible()).collect();
    OrderLine {
        order: r.order,
        feasible: r.is_feasible(),
        shapes: feasible.iter().map(|s| format!("{}.{}", s.m, s.n)).collect(),
        annotations: feasible.iter().flat_map(|s| s.annotations.clone()).collect(),
    }
}

fn classify(c: u64, order: Option<u64>) -> Result<Output, String> {
    let wild_char = matches!(c, 5 | 7 | 11);
    if let Some(big) = order {
        if big == 0 {
            return Err("order must be positive".into());
        }
        if c != 0 && big % c == 0 {
            if !wild_char {
                return Err(format!("wild orders are not classified in characteristic {c}"));
            }
            let w = classify_wild(c).map_err(|e| e.to_string())?;
            let entry = w
                .entries
                .get(&(big / c))
                .ok_or_else(|| format!("{big} is outside the candidate universe"))?;
            return Ok(output(entry, wild_entry_text(c, entry), EXIT_OK));
        }
        let r = classify_order(big, c).map_err(|e| e.to_string())?;
        let text = order_text(&r);
        return Ok(output(&r, text, EXIT_OK));
    }
    let set = ord_set(c).map_err(|e| e.to_string())?;
    let tame: Vec<OrderLine> = candidate_universe()
        .into_iter()
        .filter(|&n| c == 0 || n % c != 0)
        .map(|n| order_line(&classify_order(n, c).expect("tame order")))
        .collect();
    let wild = if wild_char {
        Some(classify_wild(c).map_err(|e| e.to_string())?)
    } else {
        None
    };
    let summary = ClassifySummary {
        characteristic: c,
        label: set.label,
        orders: set.orders,
        tame,
        wild,
    };
    let text = classify_text(&summary);
    Ok(output(&summary, text, EXIT_OK))
}

fn join<T: ToString>(xs: impl IntoIterator<Item = T>) -> String {
    xs.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn classify_text(s: &ClassifySummary) -> String {
    let mut t = String::new();
    let _ = writeln!(t, "characteristic {}", s.characteristic);
    let _ = writeln!(t, "{}: {}", s.label, join(&s.orders));
    let _ = writeln!(t, "tame:");
    for l in &s.tame {
        let verdict = if l.feasible { "feasible" } else { "infeasible" };
        let _ = writeln!(t, "  {:>3}  {:<10} {}", l.order, verdict, l.shapes.join(" "));
        for a in &l.annotations {
            let _ = writeln!(t, "       note: {a}");
        }
    }
    if let Some(w) = &s.wild {
        let _ = writeln!(t, "wild:");
        for e in w.entries.values() {
            let _ = writeln!(t, "  {:>3}  {}", e.order, status_text(&e.status));
        }
    }
    t
}

fn status_text(s: &WildStatus) -> String {
    match s {
        WildStatus::SpectrallyInfeasible => "spectrally infeasible".into(),
        WildStatus::ExcludedByReplay => "excluded by replay".into(),
        WildStatus::ExcludedWithGeometryFlag { axioms } => format!("excluded, geometry: {}", axioms.join(", ")),
        WildStatus::Realized { example_id, power } if *power == 1 => format!("realized by {example_id}"),
        WildStatus::Realized { example_id, power } => format!("realized by {example_id}, power {power}"),
        WildStatus::Unresolved => "unresolved".into(),
    }
}

fn wild_entry_text(p: u64, e: &WildEntry) -> String {
    let mut t = String::new();
    let _ = writeln!(
        t,
        "order {} = {p}.{} in characteristic {p}: {}",
        e.order,
        e.n,
        status_text(&e.status)
    );
    for step in &e.trail {
        let reason = match &step.reason {
            CaseReason::NoProfile => "no profile".to_string(),
            CaseReason::Lemma { lemma, .. } => format!("excluded by {lemma}"),
            CaseReason::Reduced {
                via, lemma: Some(l), ..
            } => format!("reduces to n = {via}, {l}"),
            CaseReason::Reduced { via, lemma: None, .. } => format!("reduces to n = {via}, no profile"),
            CaseReason::Open => "open".to_string(),
        };
        let _ = writeln!(
            t,
            "  case {:<8} {:>5} profiles  {reason}",
            step.case.label(),
            step.profiles
        );
    }
    t
}

fn certificate_text(c: &Certificate) -> String {
    let what = match &c.detail {
        Detail::InvalidShape { reason } => reason.clone(),
        Detail::NoStructuralCandidate { preimages } => format!("{preimages} preimages, none admissible"),
        Detail::NoPreimage { target, needed } => format!("orbit {target} (x{needed}) of S_m has no preimage"),
        Detail::TraceBound { i, value, j, bound } => format!("e(g^{i}) = {value} outside [0, e(g^{j}) = {bound}]"),
        Detail::OrbitCount { anchor, s, value } => format!("Fix(g^{anchor}): orbit mass {value} for size {s}"),
        Detail::NoShape => "no admissible shape".into(),
    };
    match &c.profile {
        Some(p) => format!("{}  {p}: {what}", c.rule.label()),
        None => format!("{}: {what}", c.rule.label()),
    }
}

fn shape_text(r: &ShapeReport, c: u64) -> String {
    let mut t = String::new();
    let verdict = if r.is_feasible() { "feasible" } else { "infeasible" };
    let _ = writeln!(
        t,
        "shape {}.{} (N = {}) in characteristic {c}: {verdict}",
        r.m,
        r.n,
        r.m * r.n
    );
    for w in &r.witnesses {
        let _ = writeln!(t, "  witness {w}");
    }
    for cert in &r.certificates {
        let _ = writeln!(t, "  {}", certificate_text(cert));
    }
    for a in &r.annotations {
        let _ = writeln!(t, "  note: {a}");
    }
    t
}

fn order_text(r: &OrderReport) -> String {
    let mut t = String::new();
    let verdict = if r.is_feasible() { "feasible" } else { "infeasible" };
    let _ = writeln!(t, "order {} in characteristic {}: {verdict}", r.order, r.characteristic);
    for s in &r.shapes {
        for line in shape_text(s, r.characteristic).lines() {
            let _ = writeln!(t, "  {line}");
        }
    }
    for cert in &r.certificates {
        let _ = writeln!(t, "  {}", certificate_text(cert));
    }
    t
}

#[derive(Serialize)]
struct SetsReport {
    characteristic: u64,
    label: &'static str,
    ord: BTreeSet<u64>,
    tv: BTreeSet<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    b: Option<BTreeSet<u64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    beta: Option<u64>,
}

fn sets(c: u64) -> Result<Output, String> {
    let o = ord_set(c).map_err(|e| e.to_string())?;
    let (tv, b, bt) = if c == 0 {
        let tv = (1..=66).filter(|&n| n != 60 && euler_phi(n) <= 20).collect();
        (tv, None, None)
    } else {
        (tv_set(c), Some(b_set(c)), Some(beta(c)))
    };
    let r = SetsReport {
        characteristic: c,
        label: o.label,
        ord: o.orders,
        tv,
        b,
        beta: bt,
    };
    let mut t = String::new();
    let _ = writeln!(t, "characteristic {c}");
    let _ = writeln!(t, "Ord ({}): {}", r.label, join(&r.ord));
    let _ = writeln!(t, "TV: {}", join(&r.tv));
    if let (Some(b), Some(bt)) = (&r.b, r.beta) {
        let _ = writeln!(t, "B: {}", join(b));
        let _ = writeln!(t, "beta: {bt}");
    }
    Ok(output(&r, t, EXIT_OK))
}

fn table1_text(t: &BTreeMap<u64, Vec<u64>>) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "phi(n) | n");
    for (phi, ns) in t {
        let cell = if ns.is_empty() {
            "none".to_string()
        } else {
            ns.iter().map(u64::to_string).collect::<Vec<_>>().join(", ")
        };
        let _ = writeln!(s, "{phi:>6} | {cell}");
    }
    s
}

fn replay_text(reports: &[ReplayReport]) -> String {
    let mut t = String::new();
    for r in reports {
        let verdict = if r.passed() { "pass" } else { "FAIL" };
        let _ = writeln!(
            t,
            "{} {verdict} ({} assertions, {} geometry inputs)",
            r.lemma,
            r.assertions.len(),
            r.geometry_inputs()
        );
        for a in &r.assertions {
            let tag = match a.status {
                AssertionStatus::Pass => "pass",
                AssertionStatus::Fail => "FAIL",
                AssertionStatus::GeometryInput => "geom",
            };
            match a.axiom {
                Some(ax) => {
                    let _ = writeln!(t, "  [{tag}] {} <{ax}>", a.claim);
                }
                None => {
                    let _ = writeln!(t, "  [{tag}] {} = {}", a.claim, a.computed);
                }
            }
        }
        for e in &r.exclusions {
            let verdict = if e.holds { "excluded" } else { "NOT excluded" };
            let _ = writeln!(t, "  case {} at n = {}: {verdict}", e.case.label(), e.n);
        }
    }
    t
}

fn report_text(r: &VerificationReport) -> String {
    let mut t = String::new();
    let verdict = if r.as_designed { "ok" } else { "FAIL" };
    let _ = writeln!(
        t,
        "{} in characteristic {}: {verdict} (expect {:?})",
        r.id, r.characteristic, r.expect
    );
    for c in &r.checks {
        let tag = match c.status {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::Skipped => "skip",
        };
        let _ = writeln!(t, "  [{tag}] {}: {}", c.name, c.detail);
    }
    t
}

fn summary_text(s: &VerificationSummary) -> String {
    let mut t = String::new();
    for r in &s.reports {
        t.push_str(&report_text(r));
    }
    let _ = writeln!(
        t,
        "{} of {} entries pass; {} of {} negative controls fail as designed",
        s.passed, s.entries, s.negative_as_designed, s.negative_controls
    );
    t
}

fn bounds_text(b: &GroupBound) -> String {
    let mut t = String::new();
    let _ = writeln!(t, "characteristic {}: beta = {}", b.p, b.beta);
    for br in &b.branches {
        let _ = writeln!(
            t,
            "  {}: {} x |{}| = {} x {} = {}",
            br.condition, br.factor, br.group, br.factor, br.group_order, br.value
        );
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("k3orders").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn usage_errors() {
        assert_eq!(call(&[]).0, EXIT_USAGE);
        assert_eq!(call(&["sets", "--char", "4"]).0, EXIT_USAGE);
        assert_eq!(call(&["replay", "--lemma", "L0.0"]).0, EXIT_USAGE);
        assert_eq!(call(&["bounds", "--char", "7"]).0, EXIT_USAGE);
        assert_eq!(call(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn shape_8_2() {
        let (code, out, _) = call(&["shape", "--m", "8", "--n", "2"]);
        assert_eq!(code, EXIT_OK);
        assert!(
            out.contains("infeasible") && out.contains("R2_symplectic_power"),
            "{out}"
        );
    }
}
