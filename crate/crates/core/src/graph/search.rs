use std::collections::VecDeque;

use fixedbitset::FixedBitSet;

use super::SimpleGraph;

/// Length of a shortest cycle, `None` for forests.
pub fn girth(g: &SimpleGraph) -> Option<usize> {
    let n = g.vertex_count();
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for s in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[s] = 0;
        parent[s] = usize::MAX;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            if 2 * dist[u] + 1 >= best {
                break;
            }
            for w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    best = best.min(dist[u] + dist[w] + 1);
                }
            }
        }
    }
    (best != usize::MAX).then_some(best)
}

/// `Some((m, n))` with `m ≤ n` if `g` is isomorphic to `K_{m,n}`.
pub fn is_complete_bipartite(g: &SimpleGraph) -> Option<(usize, usize)> {
    let n = g.vertex_count();
    if n < 2 || !g.is_connected() {
        return None;
    }
    let mut side = vec![u8::MAX; n];
    side[0] = 0;
    let mut queue = VecDeque::from([0]);
    while let Some(u) = queue.pop_front() {
        for w in g.neighbors(u) {
            if side[w] == u8::MAX {
                side[w] = 1 - side[u];
                queue.push_back(w);
            } else if side[w] == side[u] {
                return None;
            }
        }
    }
    let a = side.iter().filter(|&&s| s == 0).count();
    let b = n - a;
    (g.edge_count() == a * b).then_some((a.min(b), a.max(b)))
}

/// Outcome of a biclique search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BicliqueSearch {
    /// Disjoint `left` (size `m`) and `right` (size `n`), fully joined.
    Found { left: Vec<usize>, right: Vec<usize> },
    /// The search completed without finding one.
    Absent,
    /// The node budget ran out first.
    BudgetExceeded,
}

impl BicliqueSearch {
    pub fn found(&self) -> Option<(&[usize], &[usize])> {
        match self {
            BicliqueSearch::Found { left, right } => Some((left, right)),
            _ => None,
        }
    }
}

struct BicliqueState<'a> {
    g: &'a SimpleGraph,
    cands: Vec<usize>,
    m: usize,
    n: usize,
    nodes: u64,
    budget: u64,
}

impl BicliqueState<'_> {
    /// Extends `chosen` with candidates from `start`, keeping `common` as
    /// the common neighbourhood of `chosen`.
    fn grow(&mut self, start: usize, chosen: &mut Vec<usize>, common: &FixedBitSet) -> Option<bool> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return None;
        }
        if chosen.len() == self.m {
            return Some(true);
        }
        let need = self.m - chosen.len();
        for i in start..self.cands.len() {
            if self.cands.len() - i < need {
                break;
            }
            let v = self.cands[i];
            let mut next = common.clone();
            next.intersect_with(self.g.row(v));
            if next.count_ones(..) < self.n {
                continue;
            }
            chosen.push(v);
            match self.grow(i + 1, chosen, &next) {
                Some(true) => return Some(true),
                None => return None,
                Some(false) => {}
            }
            chosen.pop();
        }
        Some(false)
    }
}

/// Searches for a `K_{m,n}` subgraph (not necessarily induced) with at most
/// `budget` branch nodes.
pub fn find_biclique(g: &SimpleGraph, m: usize, n: usize, budget: u64) -> BicliqueSearch {
    if m == 0 || n == 0 {
        return BicliqueSearch::Found {
            left: vec![],
            right: (0..n.min(g.vertex_count())).collect(),
        };
    }
    let (small, large, swapped) = if m <= n { (m, n, false) } else { (n, m, true) };
    let cands: Vec<usize> = (0..g.vertex_count()).filter(|&v| g.degree(v) >= large).collect();
    let mut st = BicliqueState {
        g,
        cands,
        m: small,
        n: large,
        nodes: 0,
        budget,
    };
    let mut all = FixedBitSet::with_capacity(g.vertex_count());
    all.insert_range(..);
    let mut chosen = Vec::new();
    match st.grow(0, &mut chosen, &all) {
        None => BicliqueSearch::BudgetExceeded,
        Some(false) => BicliqueSearch::Absent,
        Some(true) => {
            let mut common = all;
            for &v in &chosen {
                common.intersect_with(g.row(v));
            }
            let other: Vec<usize> = common.ones().take(large).collect();
            if swapped {
                BicliqueSearch::Found {
                    left: other,
                    right: chosen,
                }
            } else {
                BicliqueSearch::Found {
                    left: chosen,
                    right: other,
                }
            }
        }
    }
}

/// Maximum clique by branch and bound with greedy colouring bounds.
/// Returns the clique and whether the search completed within `budget`.
pub fn max_clique(g: &SimpleGraph, budget: u64) -> (Vec<usize>, bool) {
    struct St<'a> {
        g: &'a SimpleGraph,
        best: Vec<usize>,
        nodes: u64,
        budget: u64,
    }
    fn colour_bound(g: &SimpleGraph, p: &FixedBitSet) -> usize {
        let mut rest = p.clone();
        let mut colours = 0;
        while rest.count_ones(..) > 0 {
            colours += 1;
            let mut avail = rest.clone();
            while let Some(v) = avail.ones().next() {
                avail.set(v, false);
                rest.set(v, false);
                avail.difference_with(g.row(v));
            }
        }
        colours
    }
    fn expand(st: &mut St, current: &mut Vec<usize>, p: FixedBitSet) -> bool {
        st.nodes += 1;
        if st.nodes > st.budget {
            return false;
        }
        if current.len() > st.best.len() {
            st.best = current.clone();
        }
        if current.len() + colour_bound(st.g, &p) <= st.best.len() {
            return true;
        }
        let mut p = p;
        let verts: Vec<usize> = p.ones().collect();
        for v in verts {
            if !p.contains(v) {
                continue;
            }
            if current.len() + p.count_ones(..) <= st.best.len() {
                break;
            }
            let mut next = p.clone();
            next.intersect_with(st.g.row(v));
            current.push(v);
            let ok = expand(st, current, next);
            current.pop();
            if !ok {
                return false;
            }
            p.set(v, false);
        }
        true
    }
    let mut all = FixedBitSet::with_capacity(g.vertex_count());
    all.insert_range(..);
    let mut st = St {
        g,
        best: Vec::new(),
        nodes: 0,
        budget,
    };
    let complete = expand(&mut st, &mut Vec::new(), all);
    (st.best, complete)
}

/// A clique of size `k`, if the maximum clique search finds one.
pub fn find_clique(g: &SimpleGraph, k: usize, budget: u64) -> Option<Vec<usize>> {
    let (best, _) = max_clique(g, budget);
    (best.len() >= k).then(|| best[..k].to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn girth_examples() {
        assert_eq!(girth(&SimpleGraph::complete(3)), Some(3));
        assert_eq!(girth(&SimpleGraph::complete_bipartite(3, 3)), Some(4));
        assert_eq!(girth(&SimpleGraph::path(4)), None);
        assert_eq!(girth(&SimpleGraph::cycle(7)), Some(7));
        // Petersen graph
        let mut e = vec![];
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((i, i + 5));
            e.push((i + 5, (i + 2) % 5 + 5));
        }
        assert_eq!(girth(&SimpleGraph::from_edges(10, &e).unwrap()), Some(5));
    }

    #[test]
    fn complete_bipartite_recognition() {
        assert_eq!(is_complete_bipartite(&SimpleGraph::complete(2)), Some((1, 1)));
        assert_eq!(is_complete_bipartite(&SimpleGraph::complete(3)), None);
        assert_eq!(
            is_complete_bipartite(&SimpleGraph::complete_bipartite(6, 4)),
            Some((4, 6))
        );
        assert_eq!(is_complete_bipartite(&SimpleGraph::cycle(6)), None);
        assert_eq!(is_complete_bipartite(&SimpleGraph::cycle(4)), Some((2, 2)));
    }

    #[test]
    fn bicliques() {
        let k55 = SimpleGraph::complete_bipartite(5, 5);
        let r = find_biclique(&k55, 5, 5, u64::MAX);
        let (a, b) = r.found().unwrap();
        assert_eq!(a.len(), 5);
        assert_eq!(b.len(), 5);
        for &x in a {
            for &y in b {
                assert!(k55.has_edge(x, y));
            }
        }
        assert_eq!(
            find_biclique(&SimpleGraph::cycle(5), 2, 2, u64::MAX),
            BicliqueSearch::Absent
        );
        let k = SimpleGraph::complete_bipartite(8, 4);
        let r = find_biclique(&k, 8, 4, u64::MAX);
        let (a, b) = r.found().unwrap();
        assert_eq!((a.len(), b.len()), (8, 4));
        assert_eq!(find_biclique(&k, 5, 5, u64::MAX), BicliqueSearch::Absent);
        assert_eq!(
            find_biclique(&SimpleGraph::complete(10), 5, 5, 1),
            BicliqueSearch::BudgetExceeded
        );
    }

    #[test]
    fn cliques() {
        let (c, done) = max_clique(&SimpleGraph::complete(6), u64::MAX);
        assert!(done);
        assert_eq!(c.len(), 6);
        let (c, _) = max_clique(&SimpleGraph::complete_bipartite(4, 4), u64::MAX);
        assert_eq!(c.len(), 2);
        assert!(find_clique(&SimpleGraph::cycle(5), 3, u64::MAX).is_none());
    }
}
