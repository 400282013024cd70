use std::collections::HashSet;
use std::fmt::{self, Write as _};

use rayon::prelude::*;
use serde::Serialize;

use super::{local_factors, thm11_predicate, ClassificationRecord, Classifier, GraphKind};
use crate::genus::{Budget, GenusStatus};
use crate::ring::{catalog, LocalRingDescriptor};

/// What a report expects of a status.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "relation", content = "genus", rename_all = "snake_case")]
pub enum Expectation {
    Exactly(u32),
    Not(u32),
    AtLeast(u32),
}

impl fmt::Display for Expectation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expectation::Exactly(k) => write!(f, "= {k}"),
            Expectation::Not(k) => write!(f, "!= {k}"),
            Expectation::AtLeast(k) => write!(f, ">= {k}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Match,
    Mismatch,
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Match => "match",
            Verdict::Mismatch => "MISMATCH",
            Verdict::Inconclusive => "inconclusive",
        })
    }
}

impl Expectation {
    pub fn verdict(self, status: GenusStatus) -> Verdict {
        let (lower, upper) = match status {
            GenusStatus::Exact(k) => (k, Some(k)),
            GenusStatus::Geq3 => (3, None),
            GenusStatus::Inconclusive { lower, upper } => (lower, upper),
        };
        match self {
            Expectation::Exactly(k) => match status {
                GenusStatus::Exact(s) if s == k => Verdict::Match,
                s if s.excludes(k) => Verdict::Mismatch,
                _ => Verdict::Inconclusive,
            },
            Expectation::Not(k) => {
                if status.excludes(k) {
                    Verdict::Match
                } else if status == GenusStatus::Exact(k) {
                    Verdict::Mismatch
                } else {
                    Verdict::Inconclusive
                }
            }
            Expectation::AtLeast(k) => {
                if lower >= k {
                    Verdict::Match
                } else if upper.is_some_and(|u| u < k) {
                    Verdict::Mismatch
                } else {
                    Verdict::Inconclusive
                }
            }
        }
    }
}

/// One classified ring in a report.
#[derive(Clone, Debug, Serialize)]
pub struct ReportEntry {
    pub section: String,
    pub source: String,
    pub expected: Expectation,
    pub verdict: Verdict,
    /// An inconclusive verdict here is known and tolerated.
    pub allow_inconclusive: bool,
    pub record: ClassificationRecord,
}

/// Structural predicate against computed status for one ring.
#[derive(Clone, Debug, Serialize)]
pub struct AgreementRow {
    pub ring: String,
    pub predicate: bool,
    pub status: String,
    /// `None` when the status neither confirms nor excludes genus 2.
    pub agrees: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub title: String,
    pub budget: Budget,
    pub use_fixtures: bool,
    pub entries: Vec<ReportEntry>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub agreement: Vec<AgreementRow>,
}

impl Report {
    pub fn count(&self, v: Verdict) -> usize {
        self.entries.iter().filter(|e| e.verdict == v).count()
    }

    pub fn mismatches(&self) -> Vec<&ReportEntry> {
        self.entries.iter().filter(|e| e.verdict == Verdict::Mismatch).collect()
    }

    /// Inconclusive entries that are not on the allowed list.
    pub fn unexpected_inconclusive(&self) -> Vec<&ReportEntry> {
        self.entries
            .iter()
            .filter(|e| e.verdict == Verdict::Inconclusive && !e.allow_inconclusive)
            .collect()
    }

    /// Zero mismatches and zero unexpected inconclusive entries.
    pub fn is_success(&self) -> bool {
        self.mismatches().is_empty() && self.unexpected_inconclusive().is_empty()
    }

    pub fn entry(&self, ring: &str, kind: GraphKind) -> Option<&ReportEntry> {
        self.entries
            .iter()
            .find(|e| e.record.ring == ring && e.record.kind == kind)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    /// Appends the entries and agreement rows of `other`.
    pub fn merge(mut self, other: Report) -> Report {
        self.title = format!("{} + {}", self.title, other.title);
        self.entries.extend(other.entries);
        self.agreement.extend(other.agreement);
        self
    }

    pub fn render_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "# {}", self.title);
        let width = self
            .entries
            .iter()
            .map(|e| e.record.ring.len())
            .max()
            .unwrap_or(4)
            .max(4);
        let mut section = "";
        for e in &self.entries {
            if e.section != section {
                section = &e.section;
                let _ = writeln!(out, "\n## {section}");
                let _ = writeln!(
                    out,
                    "{:<12} {:<width$} {:<7} {:>4} {:>5}  {:<22} {:<6} evidence",
                    "verdict", "ring", "kind", "v", "e", "status", "expect"
                );
            }
            let r = &e.record;
            let mut verdict = e.verdict.to_string();
            if e.verdict == Verdict::Inconclusive && e.allow_inconclusive {
                verdict.push('*');
            }
            let evidence = match &r.upper_evidence {
                Some(u) if u != &r.lower_evidence => format!("{}; {}", r.lower_evidence, u),
                _ => r.lower_evidence.clone(),
            };
            let _ = writeln!(
                out,
                "{:<12} {:<width$} {:<7} {:>4} {:>5}  {:<22} {:<6} {}",
                verdict,
                r.ring,
                r.kind.as_str(),
                r.vertices,
                r.edges,
                r.status.to_string(),
                e.expected.to_string(),
                evidence
            );
        }
        if !self.agreement.is_empty() {
            let _ = writeln!(out, "\n## predicate vs computed status");
            let _ = writeln!(out, "{:<width$} {:<9} {:<22} agrees", "ring", "predicate", "status");
            for a in &self.agreement {
                let agrees = match a.agrees {
                    Some(true) => "yes",
                    Some(false) => "NO",
                    None => "unknown",
                };
                let _ = writeln!(out, "{:<width$} {:<9} {:<22} {agrees}", a.ring, a.predicate, a.status);
            }
        }
        let _ = writeln!(
            out,
            "\n{} entries: {} match, {} mismatch, {} inconclusive ({} allowed)",
            self.entries.len(),
            self.count(Verdict::Match),
            self.count(Verdict::Mismatch),
            self.count(Verdict::Inconclusive),
            self.count(Verdict::Inconclusive) - self.unexpected_inconclusive().len()
        );
        out
    }
}

struct Case {
    section: &'static str,
    source: String,
    notation: String,
    kind: GraphKind,
    expected: Expectation,
    allow_inconclusive: bool,
}

impl Case {
    fn new(section: &'static str, source: &str, factors: &[&str], kind: GraphKind, expected: Expectation) -> Case {
        Case {
            section,
            source: source.to_string(),
            notation: factors.join(" x "),
            kind,
            expected,
            allow_inconclusive: false,
        }
    }
}

fn multiset_key(factors: &[&str], kind: GraphKind) -> (Vec<String>, GraphKind) {
    let mut v: Vec<String> = factors.iter().map(|s| s.to_string()).collect();
    v.sort();
    (v, kind)
}

/// Collects cases, dropping repeats of the same factor multiset and kind.
#[derive(Default)]
struct Cases {
    list: Vec<Case>,
    seen: HashSet<(Vec<String>, GraphKind)>,
}

impl Cases {
    fn push(&mut self, case: Case) {
        let names: Vec<&str> = case.notation.split(" x ").collect();
        if self.seen.insert(multiset_key(&names, case.kind)) {
            self.list.push(case);
        }
    }

    fn contains(&self, factors: &[&str], kind: GraphKind) -> bool {
        self.seen.contains(&multiset_key(factors, kind))
    }
}

fn run(classifier: &Classifier, title: &str, cases: Vec<Case>) -> Report {
    let entries: Vec<ReportEntry> = cases
        .par_iter()
        .map(|c| {
            let record = match classifier.classify_notation(&c.notation, c.kind) {
                Ok(r) => r,
                Err(e) => panic!("built-in case {} does not build: {e}", c.notation),
            };
            ReportEntry {
                section: c.section.to_string(),
                source: c.source.clone(),
                expected: c.expected,
                verdict: c.expected.verdict(record.status),
                allow_inconclusive: c.allow_inconclusive,
                record,
            }
        })
        .collect();
    Report {
        title: title.to_string(),
        budget: classifier.budget.clone(),
        use_fixtures: classifier.use_fixtures,
        entries,
        agreement: Vec::new(),
    }
}

/// Index tuples `i1 ≤ i2 ≤ …` of `factors` catalog entries whose orders
/// multiply to at most `max_order`: every product of that many catalog rings
/// once up to factor order.
pub fn catalog_products(cat: &[LocalRingDescriptor], factors: usize, max_order: usize) -> Vec<Vec<usize>> {
    fn go(
        cat: &[LocalRingDescriptor],
        left: usize,
        max: usize,
        start: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for i in start..cat.len() {
            let o = cat[i].order;
            if o.pow(left as u32) > max {
                continue;
            }
            cur.push(i);
            go(cat, left - 1, max / o, i, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(cat, factors, max_order, 0, &mut Vec::new(), &mut out);
    out
}

fn names<'a>(cat: &'a [LocalRingDescriptor], idx: &[usize]) -> Vec<&'a str> {
    idx.iter().map(|&i| cat[i].name.as_str()).collect()
}

const FIELDS: [&str; 9] = ["Z2", "Z3", "F4", "Z5", "Z7", "F8", "F9", "Z11", "Z13"];

const THM12_RINGS: [[&str; 2]; 13] = [
    ["F4", "F8"],
    ["F4", "F9"],
    ["F4", "Z11"],
    ["Z5", "Z7"],
    ["Z4", "Z4"],
    ["Z4", "Z2[x]/(x^2)"],
    ["Z2[x]/(x^2)", "Z2[x]/(x^2)"],
    ["Z4", "F8"],
    ["Z2[x]/(x^2)", "F8"],
    ["Z4", "F9"],
    ["Z2[x]/(x^2)", "F9"],
    ["Z2[x]/(x^2)", "Z11"],
    ["Z4", "Z11"],
];

/// The thirteen rings with `g(Γ'(R)) = 2`, as catalog factor names.
pub fn thm12_rings() -> Vec<Vec<&'static str>> {
    THM12_RINGS.iter().map(|r| r.to_vec()).collect()
}

/// `Γ'` genus-two classification: the thirteen listed rings must have
/// genus 2; every other two-factor catalog product with `|R| ≤ 44` and every
/// product of three or more catalog rings with `|R| ≤ 32` must not.
pub fn reproduce_thm12(classifier: &Classifier) -> Report {
    let kind = GraphKind::Cozero;
    let mut cases = Cases::default();
    for r in THM12_RINGS {
        cases.push(Case::new(
            "listed rings",
            "listed with genus 2",
            &r,
            kind,
            Expectation::Exactly(2),
        ));
    }
    let cat = catalog(22).expect("catalog builds");
    for idx in catalog_products(&cat, 2, 44) {
        let f = names(&cat, &idx);
        if !cases.contains(&f, kind) {
            cases.push(Case::new(
                "two factors, |R| <= 44",
                "not listed",
                &f,
                kind,
                Expectation::Not(2),
            ));
        }
    }
    let cat = catalog(16).expect("catalog builds");
    for n in 3..=5 {
        for idx in catalog_products(&cat, n, 32) {
            let f = names(&cat, &idx);
            let mut orders: Vec<usize> = idx.iter().map(|&i| cat[i].order).collect();
            orders.sort();
            let (source, expected) = if n >= 4 {
                ("four or more factors: subdivided K5,5", Expectation::AtLeast(3))
            } else if orders == [2, 3, 3] {
                ("subdivided K5,5", Expectation::AtLeast(3))
            } else if orders == [2, 2, 4] {
                ("R1 x Z2 x Z2 with |R1| = 4", Expectation::AtLeast(3))
            } else {
                ("three factors", Expectation::Not(2))
            };
            cases.push(Case::new(
                "three or more factors, |R| <= 32",
                source,
                &f,
                kind,
                expected,
            ));
        }
    }
    run(classifier, "genus 2 cozero-divisor graphs", cases.list)
}

/// `Γ_r` genus-two classification: predicate-true two-factor catalog
/// products with `|R| ≤ 256` must have genus 2, the named negative
/// instances and products of three or more factors with `|R| ≤ 32` must
/// not, and every other two-factor product with `|R| ≤ 256` is scanned
/// against the predicate.
pub fn reproduce_thm11(classifier: &Classifier) -> Report {
    let kind = GraphKind::Reduced;
    let cat = catalog(128).expect("catalog builds");
    let pairs = catalog_products(&cat, 2, 256);
    let mut cases = Cases::default();
    for idx in &pairs {
        let parts: Vec<LocalRingDescriptor> = idx.iter().map(|&i| cat[i].clone()).collect();
        if thm11_predicate(&parts) {
            cases.push(Case::new(
                "predicate holds",
                "structural condition",
                &names(&cat, idx),
                kind,
                Expectation::Exactly(2),
            ));
        }
    }
    let named: [(&[&str], &str, Expectation); 7] = [
        (
            &["Z8", "Z4"],
            "both maximal ideals principal, eta = 3, 2",
            Expectation::Exactly(1),
        ),
        (&["Z4", "Z4"], "eta = 2, 2", Expectation::Not(2)),
        (&["Z4", "Z2"], "eta = 2 with a field", Expectation::Exactly(0)),
        (&["Z8", "Z2"], "eta = 3 with a field", Expectation::Not(2)),
        (&["Z2[x]/(x^5)", "Z2"], "eta = 5 with a field", Expectation::Exactly(1)),
        (&["Z2[x]/(x^6)", "Z2"], "eta = 6 with a field", Expectation::Exactly(1)),
        (&["Z2", "Z2", "Z2", "Z2"], "four fields", Expectation::AtLeast(3)),
    ];
    for (f, source, expected) in named {
        cases.push(Case::new("named negatives", source, f, kind, expected));
    }
    let mut eta8 = Case::new(
        "named negatives",
        "eta = 8 with a field",
        &["Z2[x]/(x^8)", "Z2"],
        kind,
        Expectation::AtLeast(3),
    );
    eta8.allow_inconclusive = true;
    cases.push(eta8);
    let small = catalog(16).expect("catalog builds");
    for n in 3..=5 {
        for idx in catalog_products(&small, n, 32) {
            let f = names(&small, &idx);
            let expected = if n >= 4 {
                Expectation::AtLeast(3)
            } else {
                Expectation::Not(2)
            };
            cases.push(Case::new(
                "three or more factors, |R| <= 32",
                "three or more factors",
                &f,
                kind,
                expected,
            ));
        }
    }
    for idx in &pairs {
        let f = names(&cat, idx);
        if !cases.contains(&f, kind) {
            cases.push(Case::new(
                "two factors, |R| <= 256",
                "predicate fails",
                &f,
                kind,
                Expectation::Not(2),
            ));
        }
    }
    let mut report = run(classifier, "genus 2 reduced cozero-divisor graphs", cases.list);
    report.agreement = report
        .entries
        .iter()
        .filter(|e| e.record.factors.len() == 2)
        .map(|e| {
            let ring = crate::ring::parse_ring_notation(&e.record.ring)
                .and_then(|s| s.build())
                .expect("rebuilds");
            let predicate = thm11_predicate(&local_factors(&ring).expect("catalog factors are local"));
            let status = e.record.status;
            let agrees = if status == GenusStatus::Exact(2) {
                Some(predicate)
            } else if status.excludes(2) {
                Some(!predicate)
            } else {
                None
            };
            AgreementRow {
                ring: e.record.ring.clone(),
                predicate,
                status: status.to_string(),
                agrees,
            }
        })
        .collect();
    report
}

fn field_multisets(k: usize) -> Vec<Vec<&'static str>> {
    fn go(k: usize, start: usize, cur: &mut Vec<&'static str>, out: &mut Vec<Vec<&'static str>>) {
        if k == 0 {
            out.push(cur.clone());
            return;
        }
        for i in start..FIELDS.len() {
            cur.push(FIELDS[i]);
            go(k - 1, i, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(k, 0, &mut Vec::new(), &mut out);
    out
}

/// Local non-field catalog rings (order ≤ `max_order`) passing `keep`.
fn local_instances(max_order: usize, keep: impl Fn(&LocalRingDescriptor) -> bool) -> Vec<String> {
    catalog(max_order)
        .expect("catalog builds")
        .into_iter()
        .filter(|d| !d.is_field() && keep(d))
        .map(|d| d.name)
        .collect()
}

fn principal_count(d: &LocalRingDescriptor) -> usize {
    d.ring.nontrivial_principal_ideals().len()
}

/// `M = (b1, b2)` and every nontrivial principal ideal is one of `(b1)`,
/// `(b2)`, `(b1 b2)`, `(b1 + b2)`.
fn two_generated_with_four_principals(d: &LocalRingDescriptor) -> bool {
    if d.maximal_is_principal {
        return false;
    }
    let r = &d.ring;
    let ideals = r.nontrivial_principal_ideals();
    let m = d.maximal_ideal.elements();
    m.iter().any(|&b1| {
        m.iter().any(|&b2| {
            if r.ideal_generated(&[b1, b2]) != d.maximal_ideal {
                return false;
            }
            let allowed = [b1, b2, r.mul(b1, b2), r.add(b1, b2)].map(|a| r.principal_ideal(a));
            ideals.iter().all(|i| allowed.contains(i))
        })
    })
}

/// Planarity lists for both graph kinds; generic field factors range over
/// the fields of order 2, 3, 4, 5, 7, 8, 9, 11 and 13.
pub fn cross_check_planar(classifier: &Classifier) -> Report {
    let mut cases = Cases::default();
    let (co, red) = (GraphKind::Cozero, GraphKind::Reduced);
    let sec = "planar cozero-divisor graphs";
    cases.push(Case::new(
        sec,
        "Z2 x Z2 x Z2",
        &["Z2", "Z2", "Z2"],
        co,
        Expectation::Exactly(0),
    ));
    for small in ["Z2", "Z3"] {
        for f in FIELDS {
            cases.push(Case::new(
                sec,
                &format!("{small} x F"),
                &[small, f],
                co,
                Expectation::Exactly(0),
            ));
        }
        for l in ["Z4", "Z2[x]/(x^2)"] {
            cases.push(Case::new(
                sec,
                &format!("{small} x {l}"),
                &[small, l],
                co,
                Expectation::Exactly(0),
            ));
        }
    }
    let sec = "planar reduced graphs, fields";
    for k in [2, 3] {
        for f in field_multisets(k) {
            let source = if k == 2 { "F1 x F2" } else { "F1 x F2 x F3" };
            cases.push(Case::new(sec, source, &f, red, Expectation::Exactly(0)));
        }
    }
    let sec = "planar reduced graphs, local factors";
    let single = local_instances(16, |d| principal_count(d) == 1);
    for (i, a) in single.iter().enumerate() {
        for b in &single[i..] {
            cases.push(Case::new(
                sec,
                "M_i the only nonzero principal ideal",
                &[a, b],
                red,
                Expectation::Exactly(0),
            ));
        }
    }
    run(classifier, "planar cross-check", cases.list)
}

/// Genus-one lists for both graph kinds, generic factors instantiated as in
/// [`cross_check_planar`].
pub fn cross_check_genus1(classifier: &Classifier) -> Report {
    let mut cases = Cases::default();
    let (co, red) = (GraphKind::Cozero, GraphKind::Reduced);
    let sec = "genus 1 cozero-divisor graphs, fields";
    for r in [
        &["F4", "F4"][..],
        &["F4", "Z5"],
        &["Z5", "Z5"],
        &["F4", "Z7"],
        &["Z3", "Z2", "Z2"],
    ] {
        cases.push(Case::new(sec, "listed", r, co, Expectation::Exactly(1)));
    }
    let sec = "genus 1 cozero-divisor graphs, local factors";
    for l in ["Z4", "Z2[x]/(x^2)"] {
        for f in ["F4", "Z5", "Z7"] {
            cases.push(Case::new(sec, "listed", &[l, f], co, Expectation::Exactly(1)));
        }
    }
    for l in [
        "Z9",
        "Z3[x]/(x^2)",
        "Z8",
        "Z2[x]/(x^3)",
        "Z4[x]/(2x,x^2-2)",
        "Z4[x]/(2,x)^2",
        "Z2[x,y]/(x,y)^2",
    ] {
        cases.push(Case::new(sec, "listed", &[l, "Z2"], co, Expectation::Exactly(1)));
    }

    let eta2 = local_instances(16, |d| d.maximal_is_principal && d.eta == 2 && principal_count(d) == 1);
    let eta3 = local_instances(27, |d| d.maximal_is_principal && d.eta == 3 && principal_count(d) == 2);
    let sec = "genus 1 reduced graphs, two local factors";
    for a in &eta3 {
        for b in &eta2 {
            cases.push(Case::new(
                sec,
                "eta = 3, 2 chain rings",
                &[a, b],
                red,
                Expectation::Exactly(1),
            ));
        }
    }
    let sec = "genus 1 reduced graphs, local and field factors";
    let single = local_instances(16, |d| principal_count(d) == 1);
    for r in &single {
        for f in field_multisets(2) {
            cases.push(Case::new(
                sec,
                "R1 x F1 x F2, M1 the only principal ideal",
                &[r, f[0], f[1]],
                red,
                Expectation::Exactly(1),
            ));
        }
    }
    let two_gen = local_instances(16, two_generated_with_four_principals);
    let chains = local_instances(256, |d| d.maximal_is_principal && (d.eta == 5 || d.eta == 6));
    for (list, source) in [
        (&two_gen, "R1 x F, M1 two-generated"),
        (&chains, "R1 x F, chain ring with eta = 5 or 6"),
    ] {
        for r in list {
            for f in FIELDS {
                cases.push(Case::new(sec, source, &[r, f], red, Expectation::Exactly(1)));
            }
        }
    }
    run(classifier, "genus 1 cross-check", cases.list)
}

/// Both prior lists.
pub fn cross_check_prior(classifier: &Classifier) -> Report {
    let mut r = cross_check_planar(classifier).merge(cross_check_genus1(classifier));
    r.title = "prior classification cross-check".into();
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdicts() {
        use GenusStatus::*;
        assert_eq!(Expectation::Exactly(2).verdict(Exact(2)), Verdict::Match);
        assert_eq!(Expectation::Exactly(2).verdict(Geq3), Verdict::Mismatch);
        assert_eq!(
            Expectation::Exactly(2).verdict(Inconclusive {
                lower: 1,
                upper: Some(3)
            }),
            Verdict::Inconclusive
        );
        assert_eq!(Expectation::Not(2).verdict(Geq3), Verdict::Match);
        assert_eq!(Expectation::Not(2).verdict(Exact(2)), Verdict::Mismatch);
        assert_eq!(
            Expectation::Not(2).verdict(Inconclusive {
                lower: 2,
                upper: Some(4)
            }),
            Verdict::Inconclusive
        );
        assert_eq!(
            Expectation::Not(2).verdict(Inconclusive {
                lower: 0,
                upper: Some(1)
            }),
            Verdict::Match
        );
        assert_eq!(Expectation::AtLeast(3).verdict(Geq3), Verdict::Match);
        assert_eq!(Expectation::AtLeast(3).verdict(Exact(2)), Verdict::Mismatch);
        assert_eq!(
            Expectation::AtLeast(3).verdict(Inconclusive {
                lower: 2,
                upper: Some(4)
            }),
            Verdict::Inconclusive
        );
    }

    #[test]
    fn product_enumeration() {
        let cat = catalog(8).unwrap();
        let pairs = catalog_products(&cat, 2, 8);
        // Z2 x {Z2, Z3, F4, Z4, Z2[x]/(x^2)} and Z2 x Z2 x Z2 is not a pair
        let shown: Vec<Vec<&str>> = pairs.iter().map(|p| names(&cat, p)).collect();
        assert_eq!(shown.len(), 5);
        assert!(shown.contains(&vec!["Z2", "F4"]));
        assert_eq!(catalog_products(&cat, 3, 8).len(), 1);
    }

    #[test]
    fn generic_instances() {
        assert_eq!(
            local_instances(16, |d| principal_count(d) == 1),
            vec!["Z4", "Z2[x]/(x^2)", "Z9", "Z3[x]/(x^2)"]
        );
        let two = local_instances(16, two_generated_with_four_principals);
        assert_eq!(two, vec!["Z4[x]/(2,x)^2", "Z2[x,y]/(x,y)^2"]);
    }
}
