use std::collections::HashMap;

use super::SimpleGraph;

/// Colour refinement run on both graphs with a shared palette so colours are
/// comparable across them.
fn refine(g: &SimpleGraph, h: &SimpleGraph) -> (Vec<u32>, Vec<u32>) {
    let mut cg: Vec<u32> = (0..g.vertex_count()).map(|v| g.degree(v) as u32).collect();
    let mut ch: Vec<u32> = (0..h.vertex_count()).map(|v| h.degree(v) as u32).collect();
    let count = |c: &[u32], d: &[u32]| {
        let mut all: Vec<u32> = c.iter().chain(d).copied().collect();
        all.sort_unstable();
        all.dedup();
        all.len()
    };
    let mut classes = count(&cg, &ch);
    loop {
        let mut palette: HashMap<(u32, Vec<u32>), u32> = HashMap::new();
        let mut recolour = |graph: &SimpleGraph, col: &[u32]| -> Vec<u32> {
            (0..graph.vertex_count())
                .map(|v| {
                    let mut sig: Vec<u32> = graph.neighbors(v).map(|w| col[w]).collect();
                    sig.sort_unstable();
                    let next = palette.len() as u32;
                    *palette.entry((col[v], sig)).or_insert(next)
                })
                .collect()
        };
        let ng = recolour(g, &cg);
        let nh = recolour(h, &ch);
        let n = count(&ng, &nh);
        cg = ng;
        ch = nh;
        if n == classes {
            return (cg, ch);
        }
        classes = n;
    }
}

/// A vertex bijection `map` with `g ~ h` under `v -> map[v]`, if one exists.
/// Intended for graphs of at most 64 vertices; larger inputs are attempted.
pub fn graph_isomorphic(g: &SimpleGraph, h: &SimpleGraph) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    if n != h.vertex_count() || g.edge_count() != h.edge_count() {
        return None;
    }
    let (cg, ch) = refine(g, h);
    let mut hist_g = cg.clone();
    let mut hist_h = ch.clone();
    hist_g.sort_unstable();
    hist_h.sort_unstable();
    if hist_g != hist_h {
        return None;
    }
    let class_size = |c: u32| cg.iter().filter(|&&x| x == c).count();
    // Smallest classes first, then prefer vertices adjacent to earlier ones.
    let mut order: Vec<usize> = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    while order.len() < n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let links = order.iter().filter(|&&u| g.has_edge(u, v)).count();
                (links, usize::MAX - class_size(cg[v]), usize::MAX - v)
            })
            .unwrap();
        placed[next] = true;
        order.push(next);
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn assign(
        k: usize,
        order: &[usize],
        g: &SimpleGraph,
        h: &SimpleGraph,
        cg: &[u32],
        ch: &[u32],
        map: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if k == order.len() {
            return true;
        }
        let u = order[k];
        for w in 0..h.vertex_count() {
            if used[w] || ch[w] != cg[u] {
                continue;
            }
            let consistent = order[..k].iter().all(|&x| g.has_edge(u, x) == h.has_edge(w, map[x]));
            if !consistent {
                continue;
            }
            map[u] = w;
            used[w] = true;
            if assign(k + 1, order, g, h, cg, ch, map, used) {
                return true;
            }
            used[w] = false;
            map[u] = usize::MAX;
        }
        false
    }
    assign(0, &order, g, h, &cg, &ch, &mut map, &mut used).then_some(map)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(g: &SimpleGraph, h: &SimpleGraph, map: &[usize]) {
        for (u, v) in g.edges() {
            assert!(h.has_edge(map[u], map[v]));
        }
    }

    #[test]
    fn examples() {
        let k5 = SimpleGraph::complete(5);
        let m = graph_isomorphic(&k5, &k5).unwrap();
        check(&k5, &k5, &m);
        let c4 = SimpleGraph::cycle(4);
        let k22 = SimpleGraph::complete_bipartite(2, 2);
        check(&c4, &k22, &graph_isomorphic(&c4, &k22).unwrap());
        assert!(graph_isomorphic(&SimpleGraph::complete(3), &SimpleGraph::path(3)).is_none());
        // same degree sequence, different graphs: C6 vs two triangles
        let two_triangles = SimpleGraph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(graph_isomorphic(&SimpleGraph::cycle(6), &two_triangles).is_none());
    }

    #[test]
    fn relabelled_petersen() {
        let mut e = vec![];
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((i, i + 5));
            e.push((i + 5, (i + 2) % 5 + 5));
        }
        let p = SimpleGraph::from_edges(10, &e).unwrap();
        let perm = [3, 7, 1, 9, 0, 5, 2, 8, 6, 4];
        let e2: Vec<(usize, usize)> = e.iter().map(|&(a, b)| (perm[a], perm[b])).collect();
        let q = SimpleGraph::from_edges(10, &e2).unwrap();
        check(&p, &q, &graph_isomorphic(&p, &q).unwrap());
    }
}
