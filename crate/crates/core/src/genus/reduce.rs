use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::RotationSystem;
use crate::graph::SimpleGraph;

/// One genus-preserving simplification step, in input vertex ids.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "snake_case")]
pub enum ReductionOp {
    Isolated {
        v: usize,
    },
    Leaf {
        v: usize,
        nbr: usize,
    },
    /// Degree-2 vertex `v` between `a` and `b` replaced by the edge `ab`;
    /// `parallel` when `ab` was already present.
    Suppress {
        v: usize,
        a: usize,
        b: usize,
        parallel: bool,
    },
}

/// Result of deleting isolated and degree-1 vertices and suppressing
/// degree-2 vertices until none remain.
#[derive(Clone, Debug)]
pub struct Reduction {
    /// The reduced graph; vertex `i` is input vertex `kept[i]`.
    pub graph: SimpleGraph,
    pub kept: Vec<usize>,
    pub ops: Vec<ReductionOp>,
    input_vertices: usize,
    /// Length of the input path behind each reduced edge, keyed by input ids.
    lengths: HashMap<(usize, usize), usize>,
}

fn key(u: usize, v: usize) -> (usize, usize) {
    (u.min(v), u.max(v))
}

/// Reduces `g`; the reduced graph has the same genus and minimum degree at
/// least 3 (or no vertices).
pub fn reduce(g: &SimpleGraph) -> Reduction {
    let n = g.vertex_count();
    let mut h = g.clone();
    let mut alive = vec![true; n];
    let mut ops = Vec::new();
    let mut lengths: HashMap<(usize, usize), usize> = g.edges().into_iter().map(|e| (e, 1)).collect();
    let mut queue: Vec<usize> = (0..n).rev().filter(|&v| h.degree(v) <= 2).collect();
    while let Some(v) = queue.pop() {
        if !alive[v] || h.degree(v) > 2 {
            continue;
        }
        let nb: Vec<usize> = h.neighbors(v).collect();
        alive[v] = false;
        match nb[..] {
            [] => ops.push(ReductionOp::Isolated { v }),
            [nbr] => {
                h.remove_edge(v, nbr);
                ops.push(ReductionOp::Leaf { v, nbr });
                queue.push(nbr);
            }
            [a, b] => {
                h.remove_edge(v, a);
                h.remove_edge(v, b);
                let through = lengths[&key(v, a)] + lengths[&key(v, b)];
                let parallel = h.has_edge(a, b);
                if parallel {
                    // keep the longer of the two parallel routes
                    let l = lengths.get_mut(&key(a, b)).unwrap();
                    *l = (*l).max(through);
                    queue.push(a);
                    queue.push(b);
                } else {
                    h.add_edge(a, b).expect("distinct vertices");
                    lengths.insert(key(a, b), through);
                }
                ops.push(ReductionOp::Suppress { v, a, b, parallel });
            }
            _ => unreachable!(),
        }
    }
    let kept: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();
    let mut graph = h.induced_subgraph(&kept).expect("kept vertices are valid");
    for (i, &v) in kept.iter().enumerate() {
        graph.set_label(i, g.label(v).to_string());
    }
    lengths.retain(|&(u, v), _| alive[u] && alive[v] && h.has_edge(u, v));
    Reduction {
        graph,
        kept,
        ops,
        input_vertices: n,
        lengths,
    }
}

impl Reduction {
    pub fn is_identity(&self) -> bool {
        self.ops.is_empty()
    }

    /// Length of the input path represented by reduced edge `ij`. Replacing
    /// every reduced edge by a path of this length gives a subgraph of the
    /// input homeomorphic to the reduced graph.
    pub fn edge_length(&self, i: usize, j: usize) -> usize {
        self.lengths[&key(self.kept[i], self.kept[j])]
    }

    /// Turns a rotation of the reduced graph into a rotation of the input
    /// graph with the same genus.
    pub fn lift(&self, rot: &RotationSystem) -> RotationSystem {
        let mut lists = vec![Vec::new(); self.input_vertices];
        for (i, list) in rot.lists().iter().enumerate() {
            lists[self.kept[i]] = list.iter().map(|&w| self.kept[w]).collect();
        }
        for op in self.ops.iter().rev() {
            match *op {
                ReductionOp::Isolated { v } => lists[v].clear(),
                ReductionOp::Leaf { v, nbr } => {
                    lists[v] = vec![nbr];
                    lists[nbr].push(v);
                }
                ReductionOp::Suppress {
                    v,
                    a,
                    b,
                    parallel: false,
                } => {
                    replace(&mut lists[a], b, v);
                    replace(&mut lists[b], a, v);
                    lists[v] = vec![a, b];
                }
                ReductionOp::Suppress {
                    v,
                    a,
                    b,
                    parallel: true,
                } => {
                    // v goes into the corner after b at a and before a at b,
                    // splitting off a triangular face a, b, v
                    let i = position(&lists[a], b);
                    lists[a].insert(i + 1, v);
                    let j = position(&lists[b], a);
                    lists[b].insert(j, v);
                    lists[v] = vec![a, b];
                }
            }
        }
        RotationSystem::new(lists)
    }
}

fn position(list: &[usize], x: usize) -> usize {
    list.iter().position(|&y| y == x).expect("edge present during lifting")
}

fn replace(list: &mut [usize], from: usize, to: usize) {
    let i = position(list, from);
    list[i] = to;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genus::embedding_genus;

    #[test]
    fn trees_vanish() {
        let g = SimpleGraph::from_edges(6, &[(0, 1), (1, 2), (1, 3), (3, 4), (3, 5)]).unwrap();
        let r = reduce(&g);
        assert_eq!(r.graph.vertex_count(), 0);
        let lifted = r.lift(&RotationSystem::new(vec![]));
        assert_eq!(embedding_genus(&g, &lifted), Ok(0));
    }

    #[test]
    fn subdivided_k4_reduces_to_k4() {
        // K4 with edge 0-1 subdivided by 4 and a pendant 5 at 2
        let g = SimpleGraph::from_edges(6, &[(0, 4), (4, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (2, 5)]).unwrap();
        let r = reduce(&g);
        assert_eq!(r.kept, vec![0, 1, 2, 3]);
        assert_eq!(r.graph.edge_count(), 6);
        assert_eq!(r.edge_length(0, 1), 2);
        assert_eq!(r.edge_length(2, 3), 1);
        let planar = RotationSystem::new(vec![vec![1, 3, 2], vec![2, 3, 0], vec![0, 3, 1], vec![0, 1, 2]]);
        let lifted = r.lift(&planar);
        assert_eq!(embedding_genus(&g, &lifted), Ok(0));
    }

    #[test]
    fn parallel_suppression_lifts() {
        // K4 plus a path 0-4-1 parallel to edge 0-1
        let mut g = SimpleGraph::complete(4);
        let mut h = SimpleGraph::with_vertices(5);
        for (u, v) in g.edges() {
            h.add_edge(u, v).unwrap();
        }
        h.add_edge(0, 4).unwrap();
        h.add_edge(4, 1).unwrap();
        g = h;
        let r = reduce(&g);
        assert!(matches!(
            r.ops[0],
            ReductionOp::Suppress {
                v: 4,
                parallel: true,
                ..
            }
        ));
        assert_eq!(r.graph.edge_count(), 6);
        let planar = RotationSystem::new(vec![vec![1, 3, 2], vec![2, 3, 0], vec![0, 3, 1], vec![0, 1, 2]]);
        let mirrored = planar.mirrored();
        for rot in [planar, mirrored] {
            let lifted = r.lift(&rot);
            lifted.validate(&g).unwrap();
            assert_eq!(embedding_genus(&g, &lifted), Ok(0));
        }
    }

    #[test]
    fn triangle_collapses() {
        let g = SimpleGraph::cycle(3);
        let r = reduce(&g);
        assert_eq!(r.graph.vertex_count(), 0);
        let lifted = r.lift(&RotationSystem::new(vec![]));
        assert_eq!(embedding_genus(&g, &lifted), Ok(0));
    }
}
