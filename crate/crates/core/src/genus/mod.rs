//! Orientable genus: closed formulas, lower bounds, face tracing, exact
//! branch-and-bound search and an annealing upper bound.

mod anneal;
mod bounds;
mod exact;
mod formula;
mod reduce;
mod rotation;
mod search;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::SubdivisionWitness;

pub use anneal::heuristic_upper;
pub use bounds::{euler_girth_lower_bound, subdivision_lower_bound, subgraph_lower_bound, SubgraphWitness};
pub use exact::{exact_genus, exact_genus_with_hints, genus_status, genus_status_with_hints};
pub use formula::{genus_complete, genus_complete_bipartite};
pub use reduce::{reduce, Reduction, ReductionOp};
pub use rotation::{
    embedding_genus, fingerprint, trace_faces, verify_certificate, EmbeddingCertificate, FaceTrace, RotationSystem,
};
pub use search::{decide_genus, decide_genus_weighted, Decision};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GenusError {
    #[error("invalid rotation: {0}")]
    InvalidRotation(String),
    #[error("graph is disconnected; trace each component separately")]
    Disconnected,
    #[error("graph has no edges")]
    NoEdges,
    #[error("certificate is for a different graph (fingerprint {found}, expected {expected})")]
    WrongGraph { expected: String, found: String },
}

/// Work limits for the genus engines. All limits count operations, never
/// wall time, so results are reproducible.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    /// Branch nodes per exact decision (one genus value on one block).
    pub search_nodes: u64,
    pub anneal_restarts: u32,
    pub anneal_steps: u64,
    pub seed: u64,
    /// Largest genus decided exactly; anything above is reported as a bound.
    pub genus_cap: u32,
    /// Branch nodes for biclique, clique and subdivision searches.
    pub biclique_nodes: u64,
    /// Use closed formulas for complete and complete bipartite blocks.
    pub use_formulas: bool,
}

impl Budget {
    pub fn quick() -> Self {
        Budget {
            search_nodes: 2_000_000,
            anneal_restarts: 4,
            anneal_steps: 20_000,
            seed: 1,
            genus_cap: 2,
            biclique_nodes: 200_000,
            use_formulas: true,
        }
    }

    pub fn standard() -> Self {
        Budget {
            search_nodes: 50_000_000,
            anneal_restarts: 8,
            anneal_steps: 100_000,
            biclique_nodes: 5_000_000,
            ..Budget::quick()
        }
    }

    pub fn slow() -> Self {
        Budget {
            search_nodes: 2_000_000_000,
            anneal_restarts: 16,
            anneal_steps: 400_000,
            biclique_nodes: 50_000_000,
            ..Budget::quick()
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    /// Preset by name: `quick`, `standard` or `slow`.
    pub fn preset(name: &str) -> Option<Self> {
        match name {
            "quick" => Some(Budget::quick()),
            "standard" => Some(Budget::standard()),
            "slow" => Some(Budget::slow()),
            _ => None,
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::standard()
    }
}

/// Genus classification used by the reports.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GenusStatus {
    /// Exactly this genus (0, 1 or 2).
    Exact(u32),
    /// A certified lower bound of at least 3.
    Geq3,
    /// Bounds straddle; `upper` is `None` when no embedding is known.
    Inconclusive { lower: u32, upper: Option<u32> },
}

impl GenusStatus {
    pub fn from_bound(bound: &GenusBound) -> Self {
        if bound.lower >= 3 {
            GenusStatus::Geq3
        } else if bound.exact {
            GenusStatus::Exact(bound.lower)
        } else {
            GenusStatus::Inconclusive {
                lower: bound.lower,
                upper: bound.upper,
            }
        }
    }

    pub fn exact(self) -> Option<u32> {
        match self {
            GenusStatus::Exact(g) => Some(g),
            _ => None,
        }
    }

    pub fn is_conclusive(self) -> bool {
        !matches!(self, GenusStatus::Inconclusive { .. })
    }

    /// Whether the status rules out genus `g`.
    pub fn excludes(self, g: u32) -> bool {
        match self {
            GenusStatus::Exact(k) => k != g,
            GenusStatus::Geq3 => g < 3,
            GenusStatus::Inconclusive { lower, upper } => g < lower || upper.is_some_and(|u| g > u),
        }
    }
}

impl fmt::Display for GenusStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenusStatus::Exact(g) => write!(f, "{g}"),
            GenusStatus::Geq3 => write!(f, "geq3"),
            GenusStatus::Inconclusive { lower, upper: Some(u) } => write!(f, "inconclusive [{lower}, {u}]"),
            GenusStatus::Inconclusive { lower, upper: None } => write!(f, "inconclusive [{lower}, inf)"),
        }
    }
}

/// Why a bound holds.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Evidence {
    /// Forests, empty graphs and graphs that reduce to nothing.
    Trivial,
    /// Closed formula for `K_n` or `K_{m,n}`.
    Formula {
        pattern: String,
        value: u32,
    },
    EulerGirth {
        vertices: usize,
        edges: usize,
        girth: Option<usize>,
        bound: u32,
    },
    Biclique {
        left: Vec<usize>,
        right: Vec<usize>,
        bound: u32,
    },
    Clique {
        vertices: Vec<usize>,
        bound: u32,
    },
    Subdivision {
        witness: SubdivisionWitness,
        bound: u32,
    },
    Certificate {
        certificate: EmbeddingCertificate,
    },
    /// Exhaustive search showed no embedding of genus `genus` or less.
    ExhaustiveRefutation {
        genus: u32,
        nodes: u64,
    },
    /// Sum over blocks after low-degree reduction.
    BlockSum {
        parts: Vec<BlockPart>,
    },
}

/// One block of a block sum. `vertices` are ids in the input graph; the
/// bound's witnesses use the block's own numbering (position in `vertices`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockPart {
    pub vertices: Vec<usize>,
    pub bound: GenusBound,
}

/// Lower and upper bounds on the orientable genus with their evidence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenusBound {
    pub lower: u32,
    /// `None` when no embedding was found.
    pub upper: Option<u32>,
    pub exact: bool,
    pub lower_evidence: Evidence,
    pub upper_evidence: Option<Evidence>,
}

impl GenusBound {
    pub(crate) fn exact_with(value: u32, evidence: Evidence) -> Self {
        GenusBound {
            lower: value,
            upper: Some(value),
            exact: true,
            lower_evidence: evidence.clone(),
            upper_evidence: Some(evidence),
        }
    }

    pub(crate) fn settle(&mut self) {
        self.exact = self.upper == Some(self.lower);
    }

    /// Whole-graph certificate backing the upper bound, if any.
    pub fn certificate(&self) -> Option<&EmbeddingCertificate> {
        match &self.upper_evidence {
            Some(Evidence::Certificate { certificate }) => Some(certificate),
            _ => None,
        }
    }

    pub fn status(&self) -> GenusStatus {
        GenusStatus::from_bound(self)
    }
}

impl Evidence {
    /// Short machine tag, the serde `kind`.
    pub fn tag(&self) -> &'static str {
        match self {
            Evidence::Trivial => "trivial",
            Evidence::Formula { .. } => "formula",
            Evidence::EulerGirth { .. } => "euler_girth",
            Evidence::Biclique { .. } => "biclique",
            Evidence::Clique { .. } => "clique",
            Evidence::Subdivision { .. } => "subdivision",
            Evidence::Certificate { .. } => "certificate",
            Evidence::ExhaustiveRefutation { .. } => "exhaustive_refutation",
            Evidence::BlockSum { .. } => "block_sum",
        }
    }

    /// The lower bound this evidence establishes on its own, if it is lower
    /// bound evidence.
    pub fn implied_lower(&self) -> Option<u32> {
        match self {
            Evidence::Trivial => Some(0),
            Evidence::Formula { value, .. } => Some(*value),
            Evidence::EulerGirth { bound, .. }
            | Evidence::Biclique { bound, .. }
            | Evidence::Clique { bound, .. }
            | Evidence::Subdivision { bound, .. } => Some(*bound),
            Evidence::ExhaustiveRefutation { genus, .. } => Some(genus + 1),
            Evidence::BlockSum { parts } => Some(parts.iter().map(|p| p.bound.lower).sum()),
            Evidence::Certificate { .. } => None,
        }
    }

    /// The upper bound this evidence establishes, if it is upper bound
    /// evidence.
    pub fn implied_upper(&self) -> Option<u32> {
        match self {
            Evidence::Trivial => Some(0),
            Evidence::Formula { value, .. } => Some(*value),
            Evidence::Certificate { certificate } => Some(certificate.genus),
            Evidence::BlockSum { parts } => parts.iter().map(|p| p.bound.upper).sum(),
            _ => None,
        }
    }

    /// Branch nodes spent by exhaustive refutations inside this evidence.
    pub fn search_nodes(&self) -> u64 {
        match self {
            Evidence::ExhaustiveRefutation { nodes, .. } => *nodes,
            Evidence::BlockSum { parts } => parts.iter().map(|p| p.bound.lower_evidence.search_nodes()).sum(),
            _ => 0,
        }
    }

    /// One-line description for reports.
    pub fn summary(&self) -> String {
        match self {
            Evidence::Trivial => "trivial".into(),
            Evidence::Formula { pattern, value } => format!("formula {pattern} = {value}"),
            Evidence::EulerGirth {
                vertices,
                edges,
                girth,
                bound,
            } => match girth {
                Some(gi) => format!("euler-girth v={vertices} e={edges} girth={gi} => {bound}"),
                None => format!("euler-girth v={vertices} e={edges} acyclic => {bound}"),
            },
            Evidence::Biclique { left, right, bound } => {
                format!("biclique K{},{} => {bound}", left.len(), right.len())
            }
            Evidence::Clique { vertices, bound } => format!("clique K{} => {bound}", vertices.len()),
            Evidence::Subdivision { witness, bound } => format!("subdivision of {} => {bound}", witness.pattern),
            Evidence::Certificate { certificate } => format!("certificate genus {}", certificate.genus),
            Evidence::ExhaustiveRefutation { genus, nodes } => {
                format!("exhaustive refutation of genus <= {genus} ({nodes} nodes)")
            }
            Evidence::BlockSum { parts } => {
                let inner: Vec<String> = parts
                    .iter()
                    .map(|p| match p.bound.upper {
                        Some(u) if p.bound.exact => format!("{u}"),
                        Some(u) => format!("{}..{u}", p.bound.lower),
                        None => format!("{}..", p.bound.lower),
                    })
                    .collect();
                format!("block sum [{}]", inner.join(" + "))
            }
        }
    }
}
