use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use super::{ClassifyError, GraphKind};
use crate::genus::{verify_certificate, EmbeddingCertificate};
use crate::ring::parse_ring_notation;

/// A shipped certificate for the graph of a ring.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixtureEntry {
    /// Inline ring notation.
    pub ring: String,
    pub kind: GraphKind,
    pub certificate: EmbeddingCertificate,
}

const FIXTURES: &str = include_str!("../../fixtures/certificates.json");

/// The fixture store shipped with the crate.
pub fn fixture_entries() -> &'static [FixtureEntry] {
    static ENTRIES: OnceLock<Vec<FixtureEntry>> = OnceLock::new();
    ENTRIES.get_or_init(|| serde_json::from_str(FIXTURES).expect("shipped fixture store parses"))
}

/// Certificates of the fixture store, usable as hints.
pub fn fixture_certificates() -> &'static [EmbeddingCertificate] {
    static CERTS: OnceLock<Vec<EmbeddingCertificate>> = OnceLock::new();
    CERTS.get_or_init(|| fixture_entries().iter().map(|e| e.certificate.clone()).collect())
}

/// Rebuilds every fixture graph from its ring and checks the certificate.
pub fn verify_fixtures() -> Vec<(FixtureEntry, Result<(), ClassifyError>)> {
    fixture_entries()
        .iter()
        .map(|e| {
            let check = || -> Result<(), ClassifyError> {
                let ring = parse_ring_notation(&e.ring)?.build()?;
                let g = e.kind.build(&ring);
                match verify_certificate(&g, &e.certificate) {
                    Ok(true) => Ok(()),
                    Ok(false) => Err(ClassifyError::Fixture(format!(
                        "{} {}: genus claim is wrong",
                        e.ring, e.kind
                    ))),
                    Err(err) => Err(ClassifyError::Fixture(format!("{} {}: {err}", e.ring, e.kind))),
                }
            };
            (e.clone(), check())
        })
        .collect()
}
