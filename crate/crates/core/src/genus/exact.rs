use rayon::prelude::*;

use super::bounds::{euler_girth_value, SubgraphWitness};
use super::search::weighted_girth;
use super::{
    decide_genus_weighted, euler_girth_lower_bound, fingerprint, genus_complete, genus_complete_bipartite,
    heuristic_upper, reduce, subdivision_lower_bound, subgraph_lower_bound, verify_certificate, BlockPart, Budget,
    Decision, EmbeddingCertificate, Evidence, GenusBound, GenusStatus, RotationSystem,
};
use crate::graph::{blocks_with_vertices, girth, is_complete_bipartite, SimpleGraph};

fn euler_evidence(g: &SimpleGraph) -> (u32, Evidence) {
    let bound = euler_girth_lower_bound(g);
    let ev = Evidence::EulerGirth {
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        girth: girth(g),
        bound,
    };
    (bound, ev)
}

/// Euler/girth bound of the connected graph `g` with every edge `uv`
/// subdivided into a path of `length(u, v)` edges.
fn weighted_euler_evidence(g: &SimpleGraph, length: &impl Fn(usize, usize) -> usize) -> (u32, Evidence) {
    let extra: usize = g.edges().into_iter().map(|(u, v)| length(u, v) - 1).sum();
    let (vertices, edges) = (g.vertex_count() + extra, g.edge_count() + extra);
    let girth = weighted_girth(g, length);
    let bound = girth.map_or(0, |gamma| euler_girth_value(vertices, edges, gamma));
    (
        bound,
        Evidence::EulerGirth {
            vertices,
            edges,
            girth,
            bound,
        },
    )
}

fn matching_hint<'h>(g: &SimpleGraph, hints: &'h [EmbeddingCertificate]) -> Option<&'h EmbeddingCertificate> {
    let fp = fingerprint(g);
    hints
        .iter()
        .filter(|h| h.fingerprint == fp && verify_certificate(g, h) == Ok(true))
        .min_by_key(|h| h.genus)
}

/// Bounds for one block (2-connected, or a single edge) of a reduced graph,
/// plus a rotation realising the upper bound when one is known. Edge `uv`
/// stands for an input path of `length(u, v)` edges.
fn block_bound(
    g: &SimpleGraph,
    length: impl Fn(usize, usize) -> usize,
    budget: &Budget,
    hints: &[EmbeddingCertificate],
) -> (GenusBound, Option<RotationSystem>) {
    let (v, e) = (g.vertex_count(), g.edge_count());
    if e <= 1 {
        return (
            GenusBound::exact_with(0, Evidence::Trivial),
            Some(RotationSystem::sorted(g)),
        );
    }
    if budget.use_formulas {
        if e == v * (v - 1) / 2 {
            let value = genus_complete(v as u32);
            return (
                GenusBound::exact_with(
                    value,
                    Evidence::Formula {
                        pattern: format!("K{v}"),
                        value,
                    },
                ),
                None,
            );
        }
        if let Some((m, n)) = is_complete_bipartite(g) {
            let value = genus_complete_bipartite(m as u32, n as u32);
            return (
                GenusBound::exact_with(
                    value,
                    Evidence::Formula {
                        pattern: format!("K{m},{n}"),
                        value,
                    },
                ),
                None,
            );
        }
    }

    let (mut lower, mut lower_evidence) = weighted_euler_evidence(g, &length);
    let (sub, witness) = subgraph_lower_bound(g, budget);
    if sub > lower {
        lower = sub;
        lower_evidence = match witness.expect("positive bound has a witness") {
            SubgraphWitness::Biclique { left, right } => Evidence::Biclique {
                left,
                right,
                bound: sub,
            },
            SubgraphWitness::Clique { vertices } => Evidence::Clique { vertices, bound: sub },
        };
    }

    let mut cert = matching_hint(g, hints).cloned();
    if cert.as_ref().is_none_or(|c| c.genus > lower) {
        if let Some(found) = heuristic_upper(g, budget.anneal_restarts, budget.anneal_steps, budget.seed) {
            if cert.as_ref().is_none_or(|c| found.genus < c.genus) {
                cert = Some(found);
            }
        }
    }
    let mut upper = cert.as_ref().map(|c| c.genus);
    let mut rotation = cert.as_ref().map(|c| c.rotation.clone());
    let mut upper_evidence = cert.map(|certificate| Evidence::Certificate { certificate });

    let cap = budget.genus_cap;
    if lower < 3 && cap >= 2 && upper.is_none_or(|u| u >= 3) {
        if let Some((bound, witness)) = subdivision_lower_bound(g, budget) {
            if bound > lower {
                lower = bound;
                lower_evidence = Evidence::Subdivision { witness, bound };
            }
        }
    }

    let mut t = lower;
    while t <= cap && upper.is_none_or(|u| t < u) {
        match decide_genus_weighted(g, t, budget.search_nodes, &length) {
            Decision::Found(rot) => {
                let c = EmbeddingCertificate::new(g, rot).expect("search returns valid rotations");
                debug_assert!(c.genus <= t);
                upper = Some(c.genus);
                rotation = Some(c.rotation.clone());
                upper_evidence = Some(Evidence::Certificate { certificate: c });
                break;
            }
            Decision::Refuted { nodes } => {
                lower = t + 1;
                lower_evidence = Evidence::ExhaustiveRefutation { genus: t, nodes };
                t += 1;
            }
            Decision::Aborted { .. } => break,
        }
    }

    let mut bound = GenusBound {
        lower,
        upper,
        exact: false,
        lower_evidence,
        upper_evidence,
    };
    bound.settle();
    (bound, rotation)
}

/// [`exact_genus`] with extra certificates; a certificate applies to the
/// whole graph or to any block of its reduction whose fingerprint it
/// carries.
pub fn exact_genus_with_hints(g: &SimpleGraph, budget: &Budget, hints: &[EmbeddingCertificate]) -> GenusBound {
    let red = reduce(g);
    if red.graph.vertex_count() == 0 {
        let rot = red.lift(&RotationSystem::new(Vec::new()));
        let certificate = EmbeddingCertificate::new(g, rot).expect("lifted rotation is valid");
        debug_assert_eq!(certificate.genus, 0);
        return GenusBound {
            lower: 0,
            upper: Some(0),
            exact: true,
            lower_evidence: Evidence::Trivial,
            upper_evidence: Some(Evidence::Certificate { certificate }),
        };
    }

    let blocks = blocks_with_vertices(&red.graph);
    let results: Vec<(GenusBound, Option<RotationSystem>)> = blocks
        .par_iter()
        .map(|b| {
            block_bound(
                &b.graph,
                |i, j| red.edge_length(b.vertices[i], b.vertices[j]),
                budget,
                hints,
            )
        })
        .collect();

    let lower: u32 = results.iter().map(|(b, _)| b.lower).sum();
    let upper: Option<u32> = results.iter().map(|(b, _)| b.upper).sum();
    let single = blocks.len() == 1 && red.is_identity();

    let mut certificate = None;
    if results.iter().all(|(_, r)| r.is_some()) {
        let mut lists = vec![Vec::new(); red.graph.vertex_count()];
        for (block, (_, rot)) in blocks.iter().zip(&results) {
            for (i, list) in rot.as_ref().unwrap().lists().iter().enumerate() {
                lists[block.vertices[i]].extend(list.iter().map(|&w| block.vertices[w]));
            }
        }
        let lifted = red.lift(&RotationSystem::new(lists));
        let c = EmbeddingCertificate::new(g, lifted).expect("composed rotation is valid");
        debug_assert_eq!(Some(c.genus), upper);
        certificate = Some(c);
    }

    let parts: Vec<BlockPart> = blocks
        .iter()
        .zip(&results)
        .map(|(b, (bound, _))| BlockPart {
            vertices: b.vertices.iter().map(|&i| red.kept[i]).collect(),
            bound: bound.clone(),
        })
        .collect();
    let mut bound = GenusBound {
        lower,
        upper,
        exact: false,
        lower_evidence: if single {
            results[0].0.lower_evidence.clone()
        } else {
            Evidence::BlockSum { parts: parts.clone() }
        },
        upper_evidence: match (&certificate, single) {
            (Some(c), _) => Some(Evidence::Certificate { certificate: c.clone() }),
            (None, true) => results[0].0.upper_evidence.clone(),
            (None, false) => upper.map(|_| Evidence::BlockSum { parts }),
        },
    };

    if g.is_connected() {
        let (euler, ev) = euler_evidence(g);
        if euler > bound.lower {
            bound.lower = euler;
            bound.lower_evidence = ev;
        }
    }
    if let Some(h) = matching_hint(g, hints) {
        if bound.upper.is_none_or(|u| h.genus < u) {
            bound.upper = Some(h.genus);
            bound.upper_evidence = Some(Evidence::Certificate { certificate: h.clone() });
        }
    }
    bound.settle();
    bound
}

/// Orientable genus bounds for any graph: low-degree reduction, block
/// decomposition, closed formulas for complete and complete bipartite
/// blocks, lower bounds (Euler/girth, bicliques, cliques, subdivided
/// `K_{5,5}`), an annealing upper bound and exact branch-and-bound
/// decisions for every genus up to `budget.genus_cap`.
pub fn exact_genus(g: &SimpleGraph, budget: &Budget) -> GenusBound {
    exact_genus_with_hints(g, budget, &[])
}

/// Status in {0, 1, 2, geq3} or inconclusive, with the bounds behind it.
pub fn genus_status(g: &SimpleGraph, budget: &Budget) -> (GenusStatus, GenusBound) {
    genus_status_with_hints(g, budget, &[])
}

pub fn genus_status_with_hints(
    g: &SimpleGraph,
    budget: &Budget,
    hints: &[EmbeddingCertificate],
) -> (GenusStatus, GenusBound) {
    let bound = exact_genus_with_hints(g, budget, hints);
    (bound.status(), bound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genus::verify_certificate;

    fn glue(a: &SimpleGraph, b: &SimpleGraph) -> SimpleGraph {
        // identify vertex 0 of b with vertex 0 of a
        let n = a.vertex_count();
        let map = |v: usize| if v == 0 { 0 } else { n + v - 1 };
        let mut edges = a.edges();
        edges.extend(b.edges().into_iter().map(|(u, v)| (map(u), map(v))));
        SimpleGraph::from_edges(n + b.vertex_count() - 1, &edges).unwrap()
    }

    #[test]
    fn trees_are_planar() {
        let g = SimpleGraph::from_edges(5, &[(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
        let b = exact_genus(&g, &Budget::quick());
        assert!(b.exact);
        assert_eq!(b.lower, 0);
        assert_eq!(verify_certificate(&g, b.certificate().unwrap()), Ok(true));
        assert_eq!(
            exact_genus(&SimpleGraph::with_vertices(0), &Budget::quick()).upper,
            Some(0)
        );
        assert_eq!(
            exact_genus(&SimpleGraph::with_vertices(1), &Budget::quick()).upper,
            Some(0)
        );
    }

    #[test]
    fn blocks_add() {
        let g = glue(&SimpleGraph::complete(5), &SimpleGraph::complete_bipartite(3, 3));
        let b = exact_genus(&g, &Budget::quick());
        assert_eq!((b.lower, b.upper, b.exact), (2, Some(2), true));
        let no_formulas = Budget {
            use_formulas: false,
            ..Budget::quick()
        };
        let b = exact_genus(&g, &no_formulas);
        assert_eq!((b.lower, b.upper, b.exact), (2, Some(2), true));
        assert_eq!(verify_certificate(&g, b.certificate().unwrap()), Ok(true));
    }

    #[test]
    fn statuses() {
        let q = Budget::quick();
        assert_eq!(genus_status(&SimpleGraph::complete(5), &q).0, GenusStatus::Exact(1));
        assert_eq!(
            genus_status(&SimpleGraph::complete_bipartite(5, 5), &q).0,
            GenusStatus::Geq3
        );
        let no_formulas = Budget {
            use_formulas: false,
            ..Budget::quick()
        };
        assert_eq!(
            genus_status(&SimpleGraph::complete_bipartite(3, 7), &no_formulas).0,
            GenusStatus::Exact(2)
        );
        assert_eq!(
            genus_status(&SimpleGraph::complete(7), &no_formulas).0,
            GenusStatus::Exact(1)
        );
    }
}
