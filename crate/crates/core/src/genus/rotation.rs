use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::GenusError;
use crate::graph::SimpleGraph;

/// Cyclic order of neighbours around each vertex.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RotationSystem(pub Vec<Vec<usize>>);

impl RotationSystem {
    pub fn new(lists: Vec<Vec<usize>>) -> Self {
        RotationSystem(lists)
    }

    pub fn order(&self, v: usize) -> &[usize] {
        &self.0[v]
    }

    pub fn lists(&self) -> &[Vec<usize>] {
        &self.0
    }

    pub fn vertex_count(&self) -> usize {
        self.0.len()
    }

    /// Neighbours in ascending order, a valid (arbitrary) rotation.
    pub fn sorted(g: &SimpleGraph) -> Self {
        RotationSystem((0..g.vertex_count()).map(|v| g.neighbors(v).collect()).collect())
    }

    /// Checks that every list is a permutation of the neighbour set.
    pub fn validate(&self, g: &SimpleGraph) -> Result<(), GenusError> {
        if self.0.len() != g.vertex_count() {
            return Err(GenusError::InvalidRotation(format!(
                "{} lists for {} vertices",
                self.0.len(),
                g.vertex_count()
            )));
        }
        for (v, list) in self.0.iter().enumerate() {
            let mut sorted = list.clone();
            sorted.sort_unstable();
            if !sorted.iter().copied().eq(g.neighbors(v)) {
                return Err(GenusError::InvalidRotation(format!(
                    "list of vertex {v} is not a permutation of its neighbours"
                )));
            }
        }
        Ok(())
    }

    /// Each list reversed; the mirror embedding has the same genus.
    pub fn mirrored(&self) -> Self {
        RotationSystem(self.0.iter().map(|l| l.iter().rev().copied().collect()).collect())
    }
}

/// Directed edges of a graph. Dart `off[u] + i` runs from `u` to the `i`-th
/// smallest neighbour of `u`.
#[derive(Clone, Debug)]
pub(crate) struct Darts {
    pub off: Vec<usize>,
    pub head: Vec<usize>,
    pub tail: Vec<usize>,
    pub rev: Vec<usize>,
    pub nbrs: Vec<Vec<usize>>,
}

impl Darts {
    pub fn new(g: &SimpleGraph) -> Self {
        let n = g.vertex_count();
        let nbrs: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).collect()).collect();
        let mut off = Vec::with_capacity(n + 1);
        let mut head = Vec::new();
        let mut tail = Vec::new();
        off.push(0);
        for (u, list) in nbrs.iter().enumerate() {
            for &w in list {
                tail.push(u);
                head.push(w);
            }
            off.push(head.len());
        }
        let mut darts = Darts {
            off,
            head,
            tail,
            rev: Vec::new(),
            nbrs,
        };
        darts.rev = (0..darts.len())
            .map(|d| darts.dart(darts.head[d], darts.tail[d]))
            .collect();
        darts
    }

    pub fn len(&self) -> usize {
        self.head.len()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.off[v + 1] - self.off[v]
    }

    pub fn out(&self, v: usize) -> std::ops::Range<usize> {
        self.off[v]..self.off[v + 1]
    }

    /// Dart `u -> w`; `w` must be a neighbour of `u`.
    pub fn dart(&self, u: usize, w: usize) -> usize {
        self.off[u] + self.nbrs[u].binary_search(&w).expect("not a neighbour")
    }

    /// Rotation successor `sigma` on darts: `u -> w` maps to `u -> w'` where
    /// `w'` follows `w` in the cyclic order at `u`.
    pub fn sigma(&self, rot: &[Vec<usize>]) -> Vec<usize> {
        let mut sigma = vec![0; self.len()];
        for (u, list) in rot.iter().enumerate() {
            for (i, &w) in list.iter().enumerate() {
                let next = list[(i + 1) % list.len()];
                sigma[self.dart(u, w)] = self.dart(u, next);
            }
        }
        sigma
    }

    /// Number of faces (orbits of `d -> sigma(rev d)`).
    pub fn face_count(&self, sigma: &[usize], seen: &mut Vec<bool>) -> usize {
        seen.clear();
        seen.resize(self.len(), false);
        let mut faces = 0;
        for s in 0..self.len() {
            if seen[s] {
                continue;
            }
            faces += 1;
            let mut d = s;
            while !seen[d] {
                seen[d] = true;
                d = sigma[self.rev[d]];
            }
        }
        faces
    }
}

/// Faces of an embedding as closed vertex walks, with the genus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceTrace {
    pub faces: Vec<Vec<usize>>,
    pub genus: u32,
}

/// Traces the faces of the embedding of a connected graph given by `rot`.
/// After arriving at `v` along `u -> v` the walk leaves along the neighbour
/// following `u` in the order at `v`.
pub fn trace_faces(g: &SimpleGraph, rot: &RotationSystem) -> Result<FaceTrace, GenusError> {
    rot.validate(g)?;
    if g.edge_count() == 0 {
        return Err(GenusError::NoEdges);
    }
    if !g.is_connected() {
        return Err(GenusError::Disconnected);
    }
    let darts = Darts::new(g);
    let sigma = darts.sigma(&rot.0);
    let mut seen = vec![false; darts.len()];
    let mut faces = Vec::new();
    for s in 0..darts.len() {
        if seen[s] {
            continue;
        }
        let mut walk = Vec::new();
        let mut d = s;
        while !seen[d] {
            seen[d] = true;
            walk.push(darts.tail[d]);
            d = sigma[darts.rev[d]];
        }
        faces.push(walk);
    }
    let chi = g.vertex_count() as i64 - g.edge_count() as i64 + faces.len() as i64;
    debug_assert!(chi <= 2 && (2 - chi) % 2 == 0);
    Ok(FaceTrace {
        genus: ((2 - chi) / 2) as u32,
        faces,
    })
}

/// Genus of the embedding of an arbitrary graph: the sum over components,
/// isolated vertices contributing 0.
pub fn embedding_genus(g: &SimpleGraph, rot: &RotationSystem) -> Result<u32, GenusError> {
    rot.validate(g)?;
    let darts = Darts::new(g);
    let sigma = darts.sigma(&rot.0);
    let mut seen = Vec::new();
    let faces = darts.face_count(&sigma, &mut seen) as i64;
    let comps = g.components().iter().filter(|c| c.len() > 1).count() as i64;
    let verts = (0..g.vertex_count()).filter(|&v| g.degree(v) > 0).count() as i64;
    let chi = verts - g.edge_count() as i64 + faces;
    Ok(((2 * comps - chi) / 2) as u32)
}

/// SHA-256 (hex) of the canonical edge list `n;u-v;u-v;...` with `u < v`
/// in ascending order. Labels do not enter the fingerprint.
pub fn fingerprint(g: &SimpleGraph) -> String {
    let mut text = format!("{};", g.vertex_count());
    for (u, v) in g.edges() {
        text.push_str(&format!("{u}-{v};"));
    }
    Sha256::digest(text.as_bytes())
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

/// A rotation system with its claimed genus, bound to one graph by
/// fingerprint.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbeddingCertificate {
    pub fingerprint: String,
    pub genus: u32,
    pub rotation: RotationSystem,
}

impl EmbeddingCertificate {
    /// Certificate claiming the genus actually realised by `rot`.
    pub fn new(g: &SimpleGraph, rot: RotationSystem) -> Result<Self, GenusError> {
        let genus = embedding_genus(g, &rot)?;
        Ok(EmbeddingCertificate {
            fingerprint: fingerprint(g),
            genus,
            rotation: rot,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serialises")
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}

/// `Ok(true)` iff the certificate belongs to `g` and its rotation realises
/// exactly the claimed genus.
pub fn verify_certificate(g: &SimpleGraph, cert: &EmbeddingCertificate) -> Result<bool, GenusError> {
    let expected = fingerprint(g);
    if cert.fingerprint != expected {
        return Err(GenusError::WrongGraph {
            expected,
            found: cert.fingerprint.clone(),
        });
    }
    Ok(embedding_genus(g, &cert.rotation)? == cert.genus)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_traces() {
        let k2 = SimpleGraph::complete(2);
        let t = trace_faces(&k2, &RotationSystem::sorted(&k2)).unwrap();
        assert_eq!((t.faces.len(), t.genus), (1, 0));
        let c3 = SimpleGraph::cycle(3);
        let t = trace_faces(&c3, &RotationSystem::sorted(&c3)).unwrap();
        assert_eq!((t.faces.len(), t.genus), (2, 0));
    }

    #[test]
    fn planar_k4() {
        // vertex 3 in the middle of triangle 0,1,2, all drawn counterclockwise
        let k4 = SimpleGraph::complete(4);
        let rot = RotationSystem::new(vec![vec![1, 3, 2], vec![2, 3, 0], vec![0, 3, 1], vec![0, 1, 2]]);
        let t = trace_faces(&k4, &rot).unwrap();
        assert_eq!(t.faces.len(), 4);
        assert_eq!(t.genus, 0);
        assert_eq!(t.faces.iter().map(Vec::len).sum::<usize>(), 12);
        let other = RotationSystem::new(vec![vec![1, 2, 3], vec![0, 2, 3], vec![0, 1, 3], vec![0, 1, 2]]);
        assert_eq!(trace_faces(&k4, &other).unwrap().genus, 1);
    }

    #[test]
    fn invalid_rotations() {
        let k4 = SimpleGraph::complete(4);
        let bad = RotationSystem::new(vec![vec![1, 2], vec![0, 2, 3], vec![0, 1, 3], vec![0, 1, 2]]);
        assert!(matches!(trace_faces(&k4, &bad), Err(GenusError::InvalidRotation(_))));
        let two = SimpleGraph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let rot = RotationSystem::sorted(&two);
        assert_eq!(trace_faces(&two, &rot), Err(GenusError::Disconnected));
        assert_eq!(embedding_genus(&two, &rot), Ok(0));
    }

    #[test]
    fn certificates() {
        let k4 = SimpleGraph::complete(4);
        let planar = RotationSystem::new(vec![vec![1, 3, 2], vec![2, 3, 0], vec![0, 3, 1], vec![0, 1, 2]]);
        let cert = EmbeddingCertificate::new(&k4, planar.clone()).unwrap();
        assert_eq!(cert.genus, 0);
        assert_eq!(verify_certificate(&k4, &cert), Ok(true));
        let lie = EmbeddingCertificate {
            genus: 1,
            ..cert.clone()
        };
        assert_eq!(verify_certificate(&k4, &lie), Ok(false));
        let round = EmbeddingCertificate::from_json(&cert.to_json()).unwrap();
        assert_eq!(round, cert);
        assert!(matches!(
            verify_certificate(&SimpleGraph::cycle(4), &cert),
            Err(GenusError::WrongGraph { .. })
        ));
    }

    #[test]
    fn fingerprint_ignores_labels() {
        let mut a = SimpleGraph::cycle(5);
        let b = a.clone();
        a.set_label(0, "zero".into());
        assert_eq!(fingerprint(&a), fingerprint(&b));
        assert_ne!(fingerprint(&a), fingerprint(&SimpleGraph::path(5)));
        assert_eq!(fingerprint(&a).len(), 64);
    }
}
