use std::collections::HashMap;

use super::SimpleGraph;
use crate::ring::{ElementId, FiniteRing, PrincipalIdealIndex};

/// `Γ'(R)`: vertices are the nonzero non-units, `x ~ y` iff `x ∉ Ry` and
/// `y ∉ Rx`. Vertices follow element order and carry element labels.
pub fn cozero_divisor_graph(ring: &FiniteRing) -> SimpleGraph {
    let index = PrincipalIdealIndex::new(ring);
    let verts: Vec<ElementId> = ring
        .elements()
        .filter(|&a| !index.is_trivial(index.class_of(a)))
        .collect();
    let classes: Vec<u32> = verts.iter().map(|&a| index.class_of(a)).collect();
    let mut g = SimpleGraph::new(verts.iter().map(|&a| ring.label(a).to_string()).collect());
    for i in 0..verts.len() {
        for j in i + 1..verts.len() {
            if !index.comparable(classes[i], classes[j]) {
                g.add_edge(i, j).unwrap();
            }
        }
    }
    g
}

fn ideal_label(ring: &FiniteRing, generator: ElementId) -> String {
    format!("({})", ring.label(generator))
}

/// `Γ_r(R)`: vertices are the nontrivial principal ideals, adjacent iff
/// incomparable. Each vertex is labelled by its least generator.
pub fn reduced_cozero_divisor_graph(ring: &FiniteRing) -> SimpleGraph {
    let index = PrincipalIdealIndex::new(ring);
    let classes: Vec<u32> = index.nontrivial_classes().collect();
    let mut g = SimpleGraph::new(
        classes
            .iter()
            .map(|&c| ideal_label(ring, index.representative(c)))
            .collect(),
    );
    for i in 0..classes.len() {
        for j in i + 1..classes.len() {
            if !index.comparable(classes[i], classes[j]) {
                g.add_edge(i, j).unwrap();
            }
        }
    }
    g
}

/// Quotient of `Γ'(R)` identifying vertices that generate the same
/// principal ideal. Classes are computed element by element (independently
/// of the ideal index used by the builders) and class adjacency is checked to
/// be independent of the chosen representatives.
///
/// # Panics
///
/// If two representative pairs of the same class pair disagree on adjacency.
pub fn quotient_by_principal_ideal(ring: &FiniteRing) -> SimpleGraph {
    let g = cozero_divisor_graph(ring);
    let mut class_of_vertex = Vec::with_capacity(g.vertex_count());
    let mut members: Vec<Vec<usize>> = Vec::new();
    let mut labels = Vec::new();
    let mut lookup: HashMap<Vec<ElementId>, usize> = HashMap::new();
    for v in 0..g.vertex_count() {
        let a = ring
            .element_by_label(g.label(v))
            .expect("vertex labels are element labels");
        let key = ring.principal_ideal(a).elements().to_vec();
        let c = *lookup.entry(key).or_insert_with(|| {
            members.push(Vec::new());
            labels.push(ideal_label(ring, a));
            members.len() - 1
        });
        members[c].push(v);
        class_of_vertex.push(c);
    }
    let mut q = SimpleGraph::new(labels);
    for c in 0..members.len() {
        for d in c + 1..members.len() {
            let adjacent = g.has_edge(members[c][0], members[d][0]);
            for &x in &members[c] {
                for &y in &members[d] {
                    assert_eq!(
                        g.has_edge(x, y),
                        adjacent,
                        "adjacency of {} and {} differs from their class representatives",
                        g.label(x),
                        g.label(y)
                    );
                }
            }
            if adjacent {
                q.add_edge(c, d).unwrap();
            }
        }
        // members of one class generate the same ideal, so they are never adjacent
        for (i, &x) in members[c].iter().enumerate() {
            for &y in &members[c][i + 1..] {
                assert!(
                    !g.has_edge(x, y),
                    "twins {} and {} are adjacent",
                    g.label(x),
                    g.label(y)
                );
            }
        }
    }
    q
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{graph_isomorphic, is_complete_bipartite};
    use crate::ring::parse_ring_notation;

    fn ring(s: &str) -> FiniteRing {
        parse_ring_notation(s).unwrap().build().unwrap()
    }

    #[test]
    fn cozero_examples() {
        let g = cozero_divisor_graph(&ring("Z2xZ2"));
        assert_eq!(g.labels(), &["(0,1)", "(1,0)"]);
        assert_eq!(g.edge_count(), 1);

        let g = cozero_divisor_graph(&ring("Z6"));
        assert_eq!(g.labels(), &["2", "3", "4"]);
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);

        let g = cozero_divisor_graph(&ring("F4xF8"));
        assert_eq!(is_complete_bipartite(&g), Some((3, 7)));
        assert_eq!(cozero_divisor_graph(&ring("F8")).vertex_count(), 0);
    }

    #[test]
    fn reduced_examples() {
        let g = reduced_cozero_divisor_graph(&ring("Z2xZ2"));
        assert_eq!((g.vertex_count(), g.edge_count()), (2, 1));
        let g = reduced_cozero_divisor_graph(&ring("Z2^3"));
        assert_eq!((g.vertex_count(), g.edge_count()), (6, 9));
        let g = reduced_cozero_divisor_graph(&ring("Z4"));
        assert_eq!(g.labels(), &["(2)"]);
        assert_eq!(g.edge_count(), 0);
        let g = reduced_cozero_divisor_graph(&ring("Z2^4"));
        assert_eq!((g.vertex_count(), g.edge_count()), (14, 55));
    }

    #[test]
    fn quotient_examples() {
        let q = quotient_by_principal_ideal(&ring("Z6"));
        assert_eq!((q.vertex_count(), q.edge_count()), (2, 1));
        let q = quotient_by_principal_ideal(&ring("Z5xZ7"));
        assert_eq!((q.vertex_count(), q.edge_count()), (2, 1));
        let r = ring("Z4xZ4");
        let q = quotient_by_principal_ideal(&r);
        let g = cozero_divisor_graph(&r);
        let a = g.vertex_by_label("(0,1)").unwrap();
        let b = g.vertex_by_label("(0,3)").unwrap();
        assert!(!g.has_edge(a, b));
        assert_eq!(q.vertex_count(), 7);
        assert!(graph_isomorphic(&q, &reduced_cozero_divisor_graph(&r)).is_some());
    }
}
