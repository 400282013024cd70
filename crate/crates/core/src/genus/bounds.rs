use serde::{Deserialize, Serialize};

use super::{genus_complete, genus_complete_bipartite, Budget};
use crate::graph::{find_biclique, find_biclique_subdivision, girth, max_clique, SimpleGraph, SubdivisionWitness};

/// `⌈(e(γ−2) − γ(v−2)) / 2γ⌉` clamped at 0, where `γ` is the girth; 0 for
/// forests. Disconnected graphs get the sum over their components.
pub fn euler_girth_lower_bound(g: &SimpleGraph) -> u32 {
    let comps = g.components();
    if comps.len() > 1 {
        return comps
            .iter()
            .filter(|c| c.len() > 2)
            .map(|c| euler_girth_lower_bound(&g.induced_subgraph(c).unwrap()))
            .sum();
    }
    let Some(gamma) = girth(g) else { return 0 };
    euler_girth_value(g.vertex_count(), g.edge_count(), gamma)
}

/// The Euler/girth bound for a connected graph with the given counts.
pub(crate) fn euler_girth_value(v: usize, e: usize, gamma: usize) -> u32 {
    let (v, e, gamma) = (v as i64, e as i64, gamma as i64);
    let num = e * (gamma - 2) - gamma * (v - 2);
    if num <= 0 {
        0
    } else {
        (num as u64).div_ceil(2 * gamma as u64) as u32
    }
}

/// Subgraph found by [`subgraph_lower_bound`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SubgraphWitness {
    Biclique { left: Vec<usize>, right: Vec<usize> },
    Clique { vertices: Vec<usize> },
}

/// Smallest `n ≥ m` with `g(K_{m,n}) ≥ k`, for `m ≥ 3`.
fn partner(m: usize, k: u32) -> usize {
    let need = (4 * k as usize).saturating_sub(3);
    (2 + need.div_ceil(m - 2)).max(m)
}

/// Largest closed-formula genus among the bicliques and cliques found in `g`,
/// with the witness. Biclique targets stop one above `budget.genus_cap`.
pub fn subgraph_lower_bound(g: &SimpleGraph, budget: &Budget) -> (u32, Option<SubgraphWitness>) {
    let (clique, _) = max_clique(g, budget.biclique_nodes);
    let mut best = (genus_complete(clique.len() as u32), None);
    if best.0 > 0 {
        best.1 = Some(SubgraphWitness::Clique { vertices: clique });
    }
    let v = g.vertex_count();
    'targets: for k in 1..=budget.genus_cap + 1 {
        let mut m = 3;
        while 2 * m <= v {
            let n = partner(m, k);
            if m + n <= v {
                if let Some((left, right)) = find_biclique(g, m, n, budget.biclique_nodes).found() {
                    if k > best.0 {
                        best = (
                            genus_complete_bipartite(m as u32, n as u32),
                            Some(SubgraphWitness::Biclique {
                                left: left.to_vec(),
                                right: right.to_vec(),
                            }),
                        );
                    }
                    continue 'targets;
                }
            }
            m += 1;
        }
        break;
    }
    best
}

/// Genus-3 lower bound from a subdivided `K_{5,5}` found by search.
pub fn subdivision_lower_bound(g: &SimpleGraph, budget: &Budget) -> Option<(u32, SubdivisionWitness)> {
    if g.vertex_count() < 10 || (0..g.vertex_count()).filter(|&v| g.degree(v) >= 5).count() < 10 {
        return None;
    }
    let w = find_biclique_subdivision(g, 5, 5, None, budget.biclique_nodes).ok()??;
    Some((w.pattern.genus(), w))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn euler_examples() {
        assert_eq!(euler_girth_lower_bound(&SimpleGraph::complete(5)), 1);
        assert_eq!(euler_girth_lower_bound(&SimpleGraph::complete_bipartite(5, 5)), 3);
        assert_eq!(euler_girth_lower_bound(&SimpleGraph::path(6)), 0);
        assert_eq!(euler_girth_lower_bound(&SimpleGraph::complete(4)), 0);
    }

    #[test]
    fn biclique_bounds() {
        let b = Budget::quick();
        let (k, w) = subgraph_lower_bound(&SimpleGraph::complete_bipartite(8, 4), &b);
        assert_eq!(k, 3);
        assert!(matches!(w, Some(SubgraphWitness::Biclique { .. })));
        let (k, _) = subgraph_lower_bound(&SimpleGraph::complete_bipartite(3, 8), &b);
        assert_eq!(k, 2);
        let (k, w) = subgraph_lower_bound(&SimpleGraph::cycle(8), &b);
        assert_eq!((k, w), (0, None));
        let (k, w) = subgraph_lower_bound(&SimpleGraph::complete(8), &b);
        assert_eq!(k, 2);
        assert!(matches!(w, Some(SubgraphWitness::Clique { .. })));
    }

    #[test]
    fn partners() {
        assert_eq!(partner(3, 1), 3);
        assert_eq!(partner(3, 2), 7);
        assert_eq!(partner(4, 3), 7);
        assert_eq!(partner(5, 3), 5);
        assert_eq!(partner(3, 3), 11);
    }
}
