//! Ring to graph to genus pipelines, the structural predicate of the
//! reduced-graph classification and the reproduction reports.

mod fixtures;
mod report;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize, Serializer};
use thiserror::Error;

use crate::genus::{
    exact_genus_with_hints, genus_complete_bipartite, reduce, Budget, EmbeddingCertificate, Evidence, GenusBound,
    GenusStatus,
};
use crate::graph::{blocks, cozero_divisor_graph, is_complete_bipartite, reduced_cozero_divisor_graph, SimpleGraph};
use crate::ring::{describe_local, parse_ring_notation, FiniteRing, LocalRingDescriptor, RingError};

pub use fixtures::{fixture_certificates, fixture_entries, verify_fixtures, FixtureEntry};
pub use report::{
    catalog_products, cross_check_genus1, cross_check_planar, cross_check_prior, reproduce_thm11, reproduce_thm12,
    thm12_rings, AgreementRow, Expectation, Report, ReportEntry, Verdict,
};

#[derive(Debug, Error)]
pub enum ClassifyError {
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("unknown graph kind \"{0}\" (expected cozero or reduced)")]
    UnknownKind(String),
    #[error("fixture store: {0}")]
    Fixture(String),
}

/// Which graph of the ring is classified.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GraphKind {
    /// `Γ'(R)` on the nonzero non-units.
    Cozero,
    /// `Γ_r(R)` on the nontrivial principal ideals.
    Reduced,
}

impl GraphKind {
    pub fn build(self, ring: &FiniteRing) -> SimpleGraph {
        match self {
            GraphKind::Cozero => cozero_divisor_graph(ring),
            GraphKind::Reduced => reduced_cozero_divisor_graph(ring),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            GraphKind::Cozero => "cozero",
            GraphKind::Reduced => "reduced",
        }
    }
}

impl fmt::Display for GraphKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for GraphKind {
    type Err = ClassifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "cozero" => Ok(GraphKind::Cozero),
            "reduced" => Ok(GraphKind::Reduced),
            _ => Err(ClassifyError::UnknownKind(s.to_string())),
        }
    }
}

/// The invariants of one local factor used by the structural predicate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactorInvariants {
    pub name: String,
    pub order: usize,
    pub is_field: bool,
    pub maximal_is_principal: bool,
    pub eta: u32,
}

impl From<&LocalRingDescriptor> for FactorInvariants {
    fn from(d: &LocalRingDescriptor) -> Self {
        FactorInvariants {
            name: d.name.clone(),
            order: d.order,
            is_field: d.is_field(),
            maximal_is_principal: d.maximal_is_principal,
            eta: d.eta,
        }
    }
}

/// Structural condition for `g(Γ_r(R)) = 2`: two factors, and either a
/// chain ring with `η = 7` times a field, or two chain rings with
/// `η = 4` and `η = 2` (in either order).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Thm11Predicate {
    pub factors: Vec<FactorInvariants>,
}

impl Thm11Predicate {
    pub fn from_parts(parts: &[LocalRingDescriptor]) -> Self {
        Thm11Predicate {
            factors: parts.iter().map(FactorInvariants::from).collect(),
        }
    }

    pub fn holds(&self) -> bool {
        let [a, b] = &self.factors[..] else { return false };
        let field_case = |r: &FactorInvariants, f: &FactorInvariants| {
            f.is_field && !r.is_field && r.maximal_is_principal && r.eta == 7
        };
        let chain = |r: &FactorInvariants, eta: u32| !r.is_field && r.maximal_is_principal && r.eta == eta;
        field_case(a, b) || field_case(b, a) || (chain(a, 4) && chain(b, 2)) || (chain(a, 2) && chain(b, 4))
    }
}

/// Evaluates [`Thm11Predicate`] from the factor descriptors alone.
pub fn thm11_predicate(parts: &[LocalRingDescriptor]) -> bool {
    Thm11Predicate::from_parts(parts).holds()
}

/// The local factors of a ring, flattening nested products. Fails with
/// [`RingError::NotLocal`] when a base ring is not local (e.g. `Z6`).
pub fn local_factors(ring: &FiniteRing) -> Result<Vec<LocalRingDescriptor>, RingError> {
    match ring.factors() {
        Some(parts) => {
            let mut out = Vec::new();
            for p in parts {
                out.extend(local_factors(p)?);
            }
            Ok(out)
        }
        None => Ok(vec![describe_local(ring)?]),
    }
}

/// Counters describing the work behind a record. No wall time, so records
/// are reproducible.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct RunStats {
    pub reduced_vertices: usize,
    pub reduced_edges: usize,
    pub blocks: usize,
    pub search_nodes: u64,
    /// The upper bound came from the shipped fixture certificates.
    pub fixture_used: bool,
}

fn status_text<S: Serializer>(status: &GenusStatus, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(status)
}

/// Classification of one graph of one ring.
#[derive(Clone, Debug, Serialize)]
pub struct ClassificationRecord {
    pub ring: String,
    pub factors: Vec<String>,
    pub kind: GraphKind,
    pub vertices: usize,
    pub edges: usize,
    #[serde(serialize_with = "status_text")]
    pub status: GenusStatus,
    pub lower: u32,
    pub upper: Option<u32>,
    pub lower_evidence: String,
    pub upper_evidence: Option<String>,
    /// `lower/upper` evidence tags, e.g. `euler_girth/certificate`.
    pub evidence_tag: String,
    pub stats: RunStats,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub warning: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate_path: Option<String>,
    #[serde(skip)]
    pub bound: GenusBound,
}

impl ClassificationRecord {
    /// Whole-graph certificate behind the upper bound, if any.
    pub fn certificate(&self) -> Option<&EmbeddingCertificate> {
        self.bound.certificate()
    }

    /// Whether the status and both bounds agree with the attached evidence.
    pub fn is_consistent(&self) -> bool {
        let b = &self.bound;
        let lower_ok = b.lower_evidence.implied_lower().is_some_and(|l| l == b.lower);
        let upper_ok = match (&b.upper_evidence, b.upper) {
            (Some(ev), Some(u)) => ev.implied_upper() == Some(u),
            (None, None) => true,
            _ => false,
        };
        let order_ok = b.upper.is_none_or(|u| b.lower <= u);
        lower_ok && upper_ok && order_ok && self.status == b.status() && self.lower == b.lower && self.upper == b.upper
    }
}

/// Runs the pipelines with a budget and, unless disabled, the shipped
/// fixture certificates as upper-bound hints.
#[derive(Clone, Debug)]
pub struct Classifier {
    pub budget: Budget,
    pub use_fixtures: bool,
}

impl Classifier {
    pub fn new(budget: Budget) -> Self {
        Classifier {
            budget,
            use_fixtures: true,
        }
    }

    pub fn without_fixtures(budget: Budget) -> Self {
        Classifier {
            budget,
            use_fixtures: false,
        }
    }

    /// Classifies the ring given in inline notation.
    pub fn classify_notation(&self, notation: &str, kind: GraphKind) -> Result<ClassificationRecord, ClassifyError> {
        let ring = parse_ring_notation(notation)?.build()?;
        Ok(self.classify(&ring, kind))
    }

    pub fn classify(&self, ring: &FiniteRing, kind: GraphKind) -> ClassificationRecord {
        let (factors, warning) = match local_factors(ring) {
            Ok(parts) if parts.len() >= 2 => (parts.iter().map(|d| d.name.clone()).collect(), None),
            Ok(parts) => (
                parts.iter().map(|d| d.name.clone()).collect(),
                Some("ring is local; the classification concerns non-local rings".to_string()),
            ),
            Err(_) => (
                vec![ring.name().to_string()],
                Some("ring was not split into local factors".to_string()),
            ),
        };
        let name = if warning.is_none() {
            factors.join(" x ")
        } else {
            ring.name().to_string()
        };
        let g = kind.build(ring);
        let mut rec = self.classify_graph(&name, &g, kind);
        rec.factors = factors;
        rec.warning = warning;
        rec
    }

    /// Classifies an already built graph.
    pub fn classify_graph(&self, name: &str, g: &SimpleGraph, kind: GraphKind) -> ClassificationRecord {
        let hints: &[EmbeddingCertificate] = if self.use_fixtures { fixture_certificates() } else { &[] };
        let bound = match is_complete_bipartite(g).filter(|_| self.budget.use_formulas && g.edge_count() > 0) {
            Some((m, n)) => {
                let value = genus_complete_bipartite(m as u32, n as u32);
                let ev = Evidence::Formula {
                    pattern: format!("K{m},{n}"),
                    value,
                };
                GenusBound {
                    lower: value,
                    upper: Some(value),
                    exact: true,
                    lower_evidence: ev.clone(),
                    upper_evidence: Some(ev),
                }
            }
            None => exact_genus_with_hints(g, &self.budget, hints),
        };
        let red = reduce(g);
        let fixture_used = bound.certificate().is_some_and(|c| {
            hints
                .iter()
                .any(|h| h.fingerprint == c.fingerprint && h.rotation == c.rotation)
        });
        let stats = RunStats {
            reduced_vertices: red.graph.vertex_count(),
            reduced_edges: red.graph.edge_count(),
            blocks: blocks(&red.graph).len(),
            search_nodes: bound.lower_evidence.search_nodes(),
            fixture_used,
        };
        let upper_tag = bound.upper_evidence.as_ref().map_or("none", Evidence::tag);
        ClassificationRecord {
            ring: name.to_string(),
            factors: Vec::new(),
            kind,
            vertices: g.vertex_count(),
            edges: g.edge_count(),
            status: bound.status(),
            lower: bound.lower,
            upper: bound.upper,
            lower_evidence: bound.lower_evidence.summary(),
            upper_evidence: bound.upper_evidence.as_ref().map(Evidence::summary),
            evidence_tag: format!("{}/{}", bound.lower_evidence.tag(), upper_tag),
            stats,
            warning: None,
            certificate_path: None,
            bound,
        }
    }
}

/// Classifies `Γ'(R)` with the fixture certificates as hints.
pub fn classify_cozero(ring: &FiniteRing, budget: &Budget) -> ClassificationRecord {
    Classifier::new(budget.clone()).classify(ring, GraphKind::Cozero)
}

/// Classifies `Γ_r(R)` with the fixture certificates as hints.
pub fn classify_reduced_cozero(ring: &FiniteRing, budget: &Budget) -> ClassificationRecord {
    Classifier::new(budget.clone()).classify(ring, GraphKind::Reduced)
}
